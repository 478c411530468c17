#pragma once

#include <cstddef>
#include <map>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "gsg/context.hpp"
#include "gsg/io.hpp"
#include "gsg/verify/catalog.hpp"
#include "gsg/verify/population.hpp"

namespace gsg::verify {

struct Witness {
  std::string detail;
  std::string text;  // a complete WITNESS ... END block
};

struct CheckResult {
  std::string id;
  std::string verdict = "VACUOUS";  // PASS, FAIL or VACUOUS
  std::size_t instances = 0;        // instances meeting the hypothesis
  std::size_t cases = 0;            // cases evaluated
  std::size_t skipped = 0;          // instances and cases skipped
  std::size_t failures = 0;
  std::map<std::string, std::size_t> skip_reasons;
  std::optional<Witness> witness;
};

struct SuiteReport {
  std::string source;
  std::size_t instances = 0;
  bool truncated = false;
  std::size_t weak_rho = 0;  // instances without a gamma table
  WitnessConfig config;
  bool negate = false;
  std::vector<CheckResult> checks;

  bool pass() const {
    for (const CheckResult& c : checks)
      if (c.verdict == "FAIL") return false;
    return true;
  }
  std::size_t vacuous() const {
    std::size_t n = 0;
    for (const CheckResult& c : checks) n += c.verdict == "VACUOUS";
    return n;
  }
};

/// Serializes one failing case so it can be re-checked without the population.
inline std::string witness_block(const std::string& id, const std::string& detail, const GammaSemigroup& s,
                                 const Case& k) {
  std::ostringstream os;
  os << "WITNESS " << id << '\n' << "DETAIL " << detail << '\n' << write_gsg(s);
  for (const Subset& x : k.subsets) os << write_subset(x);
  os << "END\n";
  return os.str();
}

inline Outcome apply(const CheckEntry& entry, const GammaContext& ctx, const Case& k, bool negate) {
  Outcome o = entry.assertion(ctx, k);
  if (!negate || o.kind == Outcome::Kind::skip) return o;
  if (o.kind == Outcome::Kind::fail) return Outcome::pass();
  return Outcome::fail("negated assertion: the claim held on this case");
}

struct ParsedWitness {
  std::string id;
  std::string detail;
  GammaSemigroup semigroup;
  Case subsets;
};

/// Parses the first WITNESS block in `text`.
inline ParsedWitness parse_witness(const std::string& text) {
  std::istringstream in(text);
  std::string line, id, detail, body;
  std::size_t number = 0, body_start = 0;
  bool open = false, closed = false;
  while (std::getline(in, line)) {
    ++number;
    if (!open) {
      if (line.rfind("WITNESS ", 0) == 0) {
        id = line.substr(8);
        open = true;
      }
      continue;
    }
    if (detail.empty() && line.rfind("DETAIL ", 0) == 0) {
      detail = line.substr(7);
      body_start = number;
      continue;
    }
    if (line == "END") {
      closed = true;
      break;
    }
    body += line + '\n';
  }
  if (!open) throw input_error("no WITNESS block found");
  if (!closed) throw input_error(number, "WITNESS block not terminated by END");
  LineReader reader(body);
  try {
    GammaSemigroup s = parse_gsg(reader);
    Case k;
    while (!reader.done()) k.subsets.push_back(parse_subset(reader));
    return {id, detail, std::move(s), std::move(k)};
  } catch (const input_error& e) {
    throw input_error(std::string("in witness body (starting after line ") + std::to_string(body_start) +
                      "): " + e.what());
  }
}

/// Re-runs a serialized witness against its check.
inline Outcome reevaluate_witness(const std::string& text, bool negate = false) {
  ParsedWitness w = parse_witness(text);
  const CheckEntry& entry = find_check(w.id);
  GammaContext ctx(w.semigroup);
  return apply(entry, ctx, w.subsets, negate);
}

namespace detail {

/// Runs `entry` on one instance, folding the outcomes into `r`. Returns
/// false once `stop_on_failure` is set and a failure was recorded.
inline bool run_on_instance(const CheckEntry& entry, InstanceData& data, const GammaSemigroup& s, CheckResult& r,
                            bool negate, bool respect_hypothesis, bool stop_on_failure) {
  if (respect_hypothesis) {
    if (auto gap = hypothesis_gap(entry.hypothesis, data.ctx())) {
      ++r.skipped;
      ++r.skip_reasons[*gap];
      return true;
    }
  }
  ++r.instances;
  bool go = true;
  entry.generate(data, [&](Case k) {
    Outcome o = apply(entry, data.ctx(), k, negate);
    switch (o.kind) {
      case Outcome::Kind::skip:
        ++r.skipped;
        ++r.skip_reasons[o.detail];
        return true;
      case Outcome::Kind::pass:
        ++r.cases;
        return true;
      case Outcome::Kind::fail:
        ++r.cases;
        ++r.failures;
        if (!r.witness) r.witness = Witness{o.detail, witness_block(entry.id, o.detail, s, k)};
        go = !stop_on_failure;
        return go;
    }
    return true;
  });
  return go;
}

inline void finish(CheckResult& r) {
  if (r.failures > 0)
    r.verdict = "FAIL";
  else if (r.cases > 0)
    r.verdict = "PASS";
  else
    r.verdict = "VACUOUS";
}

inline std::vector<const CheckEntry*> select(const std::vector<std::string>& ids) {
  std::vector<const CheckEntry*> out;
  if (ids.empty() || (ids.size() == 1 && ids.front() == "all")) {
    for (const CheckEntry& e : catalog()) out.push_back(&e);
    return out;
  }
  for (const std::string& id : ids) out.push_back(&find_check(id));
  return out;
}

}  // namespace detail

/// Runs the selected checks ("all" or empty for every one) over the population.
/// Instance-major, so witness material is built once per instance.
inline SuiteReport run_suite(const Population& pop, const WitnessConfig& config,
                             const std::vector<std::string>& ids = {}, bool negate = false) {
  std::vector<const CheckEntry*> entries = detail::select(ids);
  SuiteReport report;
  report.source = pop.source;
  report.instances = pop.instances.size();
  report.truncated = pop.truncated;
  report.config = config;
  report.negate = negate;
  for (const CheckEntry* e : entries) {
    CheckResult r;
    r.id = e->id;
    report.checks.push_back(std::move(r));
  }
  for (std::size_t i = 0; i < pop.instances.size(); ++i) {
    const GammaSemigroup& s = pop.instances[i];
    if (!s.has_gamma_table()) ++report.weak_rho;
    GammaContext ctx(s);
    InstanceData data(ctx, config, i);
    for (std::size_t c = 0; c < entries.size(); ++c)
      detail::run_on_instance(*entries[c], data, s, report.checks[c], negate, true, false);
  }
  for (CheckResult& r : report.checks) detail::finish(r);
  return report;
}

inline CheckResult run_check(const std::string& id, const Population& pop, const WitnessConfig& config,
                             bool negate = false) {
  return run_suite(pop, config, {id}, negate).checks.front();
}

struct SearchResult {
  std::string id;
  std::string outcome;  // WITNESS, EXHAUSTED or INCONCLUSIVE
  std::size_t instances = 0;
  std::size_t cases = 0;
  std::optional<Witness> witness;
};

/// Looks for a case violating the check with its hypothesis dropped, over
/// all instances up to the given sizes. `limit` bounds the number of
/// instances examined; hitting it before exhaustion is INCONCLUSIVE.
inline SearchResult search_counterexample(const std::string& id, std::size_t max_s, std::size_t max_g,
                                          std::optional<std::size_t> limit, const WitnessConfig& config,
                                          bool negate = false) {
  const CheckEntry& entry = find_check(id);
  SearchResult out;
  out.id = id;
  out.outcome = "EXHAUSTED";
  CheckResult r;
  r.id = id;
  bool stop = false;
  for (std::size_t s = 1; s <= max_s && !stop; ++s)
    for (std::size_t g = 1; g <= max_g && !stop; ++g) {
      for_each_gamma_semigroup(s, g, EnumerationOptions{}, [&](const GammaSemigroup& inst) {
        if (limit && out.instances == *limit) {
          out.outcome = "INCONCLUSIVE";
          stop = true;
          return false;
        }
        GammaContext ctx(inst);
        InstanceData data(ctx, config, out.instances);
        ++out.instances;
        if (!detail::run_on_instance(entry, data, inst, r, negate, false, true)) {
          out.outcome = "WITNESS";
          stop = true;
          return false;
        }
        return true;
      });
    }
  out.cases = r.cases;
  out.witness = r.witness;
  return out;
}

}  // namespace gsg::verify
