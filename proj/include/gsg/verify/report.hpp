#pragma once

#include <sstream>
#include <string>

#include "json.hpp"

#include "gsg/verify/runner.hpp"

namespace gsg::verify {

inline std::string render_text(const SuiteReport& r) {
  std::ostringstream os;
  os << "POPULATION source=\"" << r.source << "\" instances=" << r.instances
     << " truncated=" << (r.truncated ? "true" : "false") << " lattice=" << r.config.lattice_str()
     << " cap=" << r.config.cap << " seed=" << r.config.seed << " samples=" << r.config.samples
     << " families=" << r.config.family_cap << " rho-weak=" << r.weak_rho << '/' << r.instances
     << (r.negate ? " negated=true" : "") << '\n';
  for (const CheckResult& c : r.checks) {
    os << "CHECK " << c.id << ' ' << c.verdict << " instances=" << c.instances << " cases=" << c.cases
       << " skipped=" << c.skipped << '\n';
    for (const auto& [reason, n] : c.skip_reasons) os << "SKIP " << c.id << ' ' << n << ' ' << reason << '\n';
  }
  for (const CheckResult& c : r.checks)
    if (c.witness) os << c.witness->text;
  os << "SUITE " << (r.pass() ? "PASS" : "FAIL") << " checks=" << r.checks.size() << " vacuous=" << r.vacuous()
     << '\n';
  return os.str();
}

inline nlohmann::ordered_json to_json(const CheckResult& c) {
  nlohmann::ordered_json j;
  j["id"] = c.id;
  j["verdict"] = c.verdict;
  j["instances"] = c.instances;
  j["cases"] = c.cases;
  j["skipped"] = c.skipped;
  j["failures"] = c.failures;
  j["skip_reasons"] = nlohmann::ordered_json::object();
  for (const auto& [reason, n] : c.skip_reasons) j["skip_reasons"][reason] = n;
  if (c.witness)
    j["witness"] = {{"detail", c.witness->detail}, {"text", c.witness->text}};
  else
    j["witness"] = nullptr;
  return j;
}

inline nlohmann::ordered_json to_json(const SuiteReport& r) {
  nlohmann::ordered_json j;
  j["population"] = {{"source", r.source},
                     {"instances", r.instances},
                     {"truncated", r.truncated},
                     {"lattice", r.config.lattice_str()},
                     {"cap", r.config.cap},
                     {"seed", r.config.seed},
                     {"samples", r.config.samples},
                     {"families", r.config.family_cap},
                     {"rho_weak", r.weak_rho},
                     {"negated", r.negate}};
  j["checks"] = nlohmann::ordered_json::array();
  for (const CheckResult& c : r.checks) j["checks"].push_back(to_json(c));
  j["suite"] = {{"verdict", r.pass() ? "PASS" : "FAIL"}, {"checks", r.checks.size()}, {"vacuous", r.vacuous()}};
  return j;
}

inline std::string render_text(const SearchResult& s) {
  std::ostringstream os;
  os << "SEARCH " << s.id << ' ' << s.outcome << " instances=" << s.instances << " cases=" << s.cases << '\n';
  if (s.witness) os << s.witness->text;
  return os.str();
}

inline nlohmann::ordered_json to_json(const SearchResult& s) {
  nlohmann::ordered_json j;
  j["id"] = s.id;
  j["outcome"] = s.outcome;
  j["instances"] = s.instances;
  j["cases"] = s.cases;
  if (s.witness)
    j["witness"] = {{"detail", s.witness->detail}, {"text", s.witness->text}};
  else
    j["witness"] = nullptr;
  return j;
}

}  // namespace gsg::verify
