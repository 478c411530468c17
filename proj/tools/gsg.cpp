// Command-line front end: validate, inspect, classify, transfer, extend,
// verify and search.
//
// Exit status: 0 success / pass, 1 failed check or counterexample (or an
// invalid structure under `validate`), 2 input or usage error.

#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"

#include "gsg/gsg.hpp"

namespace {

using namespace gsg;

constexpr int kOk = 0;
constexpr int kFail = 1;
constexpr int kInput = 2;

GammaSemigroup load_gsg(const std::string& path) {
  try {
    return parse_gsg_text(read_file(path));
  } catch (const input_error& e) {
    throw input_error(path + ": " + e.what());
  }
}

Subset load_subset(const std::string& path) {
  try {
    return parse_subset_text(read_file(path));
  } catch (const input_error& e) {
    throw input_error(path + ": " + e.what());
  }
}

void emit(const std::string& text, const std::string& out_path) {
  if (out_path.empty()) {
    std::cout << text;
    return;
  }
  std::ofstream out(out_path, std::ios::binary);
  if (!out) throw input_error("cannot write '" + out_path + "'");
  out << text;
}

std::vector<std::string> split_commas(const std::string& text) {
  std::vector<std::string> out;
  std::stringstream ss(text);
  for (std::string item; std::getline(ss, item, ',');)
    if (!item.empty()) out.push_back(item);
  return out;
}

std::size_t parse_size(const std::string& text, const char* what) {
  try {
    std::size_t used = 0;
    unsigned long v = std::stoul(text, &used);
    if (used != text.size()) throw std::invalid_argument(text);
    return v;
  } catch (const std::exception&) {
    throw input_error(std::string("bad ") + what + " '" + text + "'");
  }
}

int cmd_validate(const std::string& path) {
  GammaSemigroup s = load_gsg(path);
  ValidationReport report = validate(s);
  if (report.ok()) {
    std::cout << "VALID S=" << s.s_size() << " G=" << s.g_size() << '\n';
    return kOk;
  }
  std::cout << "INVALID S=" << s.s_size() << " G=" << s.g_size() << " violations=" << report.violations.size()
            << '\n';
  for (const Violation& v : report.violations) std::cout << "VIOLATION " << v.describe() << '\n';
  return kFail;
}

int cmd_operators(const std::string& path, const std::string& side_name, bool print_classes) {
  GammaContext ctx(load_gsg(path));
  if (side_name != "left" && side_name != "right") throw input_error("--side must be left or right");
  const Side side = side_name == "left" ? Side::left : Side::right;
  const OperatorSemigroup& t = ctx.op(side);
  std::cout << "OPERATOR " << to_string(side) << " classes=" << t.size()
            << " rho=" << (t.strong_relation() ? "strong" : "weak") << '\n';
  if (print_classes)
    for (Index k = 0; k < t.size(); ++k) {
      std::cout << "CLASS " << t.label(k) << " members=";
      bool first = true;
      for (const RawPair& p : t.members(k)) {
        std::cout << (first ? "" : " ") << '[' << p.first << ',' << p.second << ']';
        first = false;
      }
      std::cout << '\n';
    }
  std::cout << "CAYLEY\n";
  for (Index a = 0; a < t.size(); ++a)
    for (Index b = 0; b < t.size(); ++b) std::cout << t.multiply(a, b) << (b + 1 == t.size() ? '\n' : ' ');
  const Unities& u = ctx.unities();
  std::cout << "UNITY left " << (u.left_unity ? ctx.left().label(*u.left_unity) : "none") << '\n';
  std::cout << "UNITY right " << (u.right_unity ? ctx.right().label(*u.right_unity) : "none") << '\n';
  return kOk;
}

int cmd_check(const std::string& path, const std::string& subset_path, const std::string& predicate) {
  GammaContext ctx(load_gsg(path));
  Subset subset = load_subset(subset_path);
  const bool fuzzy = std::holds_alternative<IFSubset>(subset);
  const Carrier carrier = std::visit([](const auto& x) { return x.carrier(); }, subset);
  std::visit([&](const auto& x) { ctx.require_on(x, carrier); }, subset);
  const ProductView& view = ctx.view(carrier);
  std::vector<std::string> names;
  if (predicate == "all")
    names = fuzzy ? fuzzy_predicates() : crisp_predicates();
  else
    names = {predicate};
  for (const std::string& name : names) {
    auto [holds, why] = fuzzy ? explain_fuzzy(std::get<IFSubset>(subset), view, name)
                              : explain_crisp(std::get<CrispSubset>(subset), view, name);
    std::cout << name << ": " << (holds ? "true" : "false") << '\n';
    if (!holds) std::cout << "  " << why << '\n';
  }
  return kOk;
}

int cmd_transfer(const std::string& path, const std::string& subset_path, const std::string& map_name,
                 const std::string& out) {
  GammaContext ctx(load_gsg(path));
  Subset subset = load_subset(subset_path);
  TransferMap m = parse_transfer_map(map_name);
  if (const auto* a = std::get_if<IFSubset>(&subset))
    emit(write_ifs(transfer_fuzzy(*a, m, ctx)), out);
  else
    emit(write_set(transfer_crisp(std::get<CrispSubset>(subset), m, ctx)), out);
  return kOk;
}

int cmd_extend(const std::string& path, const std::string& subset_path, std::size_t by, const std::string& out) {
  GammaContext ctx(load_gsg(path));
  Subset subset = load_subset(subset_path);
  const auto* a = std::get_if<IFSubset>(&subset);
  if (!a) throw input_error("extend needs an IFS subset");
  emit(write_ifs(a->carrier() == Carrier::S ? extend(*a, by, ctx) : extend_op(*a, by, ctx)), out);
  return kOk;
}

struct VerifyOptions {
  std::vector<std::string> files;
  std::string enumerate_sizes;
  std::optional<std::size_t> limit;
  std::string checks = "all";
  std::string lattice = "0,1/4,1/2,3/4,1";
  std::size_t cap = 1'000'000;
  std::uint64_t seed = 0;
  std::size_t samples = 4096;
  std::size_t families = 20'000;
  bool json = false;
  bool negate = false;
};

verify::WitnessConfig witness_config(const VerifyOptions& o) {
  verify::WitnessConfig c;
  c.lattice = verify::parse_lattice(o.lattice);
  c.cap = o.cap;
  c.seed = o.seed;
  c.samples = o.samples;
  c.family_cap = o.families;
  return c;
}

int cmd_verify(const VerifyOptions& o) {
  verify::Population pop;
  if (!o.enumerate_sizes.empty()) {
    auto sizes = split_commas(o.enumerate_sizes);
    if (sizes.size() != 2) throw input_error("--enumerate expects S,G");
    pop = verify::enumerate_population(parse_size(sizes[0], "size"), parse_size(sizes[1], "size"), o.limit);
  }
  if (!o.files.empty()) {
    std::string names;
    for (const std::string& f : o.files) {
      GammaSemigroup s = load_gsg(f);
      ValidationReport r = validate(s);
      if (!r.ok()) throw input_error(f + ": not a Gamma-semigroup: " + r.violations.front().describe());
      if (o.limit && pop.instances.size() == *o.limit) {
        pop.truncated = true;
        break;
      }
      pop.instances.push_back(std::move(s));
      names += (names.empty() ? "" : " ") + f;
    }
    pop.source = pop.source.empty() ? "files " + names : pop.source + " + files " + names;
  }
  if (pop.instances.empty() && pop.source.empty()) throw input_error("verify needs files or --enumerate");
  verify::SuiteReport report = verify::run_suite(pop, witness_config(o), split_commas(o.checks), o.negate);
  if (o.json)
    std::cout << verify::to_json(report).dump(2) << '\n';
  else
    std::cout << verify::render_text(report);
  return report.pass() ? kOk : kFail;
}

int cmd_search(const std::string& check, std::size_t max_s, std::size_t max_g, std::optional<std::size_t> limit,
               const VerifyOptions& o) {
  verify::SearchResult r = verify::search_counterexample(check, max_s, max_g, limit, witness_config(o), o.negate);
  if (o.json)
    std::cout << verify::to_json(r).dump(2) << '\n';
  else
    std::cout << verify::render_text(r);
  return r.outcome == "WITNESS" ? kFail : kOk;
}

int cmd_recheck(const std::string& path, bool negate) {
  std::string text = read_file(path);
  verify::ParsedWitness w = verify::parse_witness(text);
  verify::Outcome o = verify::reevaluate_witness(text, negate);
  switch (o.kind) {
    case verify::Outcome::Kind::fail:
      std::cout << "REPRODUCED " << w.id << ": " << o.detail << '\n';
      return kFail;
    case verify::Outcome::Kind::skip:
      std::cout << "SKIPPED " << w.id << ": " << o.detail << '\n';
      return kOk;
    case verify::Outcome::Kind::pass:
      std::cout << "HOLDS " << w.id << '\n';
      return kOk;
  }
  return kOk;
}

int cmd_enumerate(std::size_t s, std::size_t g, const std::vector<std::string>& filters,
                  std::optional<std::size_t> limit, bool count_only) {
  EnumerationOptions opts;
  for (const std::string& f : filters) opts.filters = opts.filters | parse_instance_filter(f);
  opts.limit = limit;
  auto summary = for_each_gamma_semigroup(s, g, opts, [&](const GammaSemigroup& x) {
    if (!count_only) std::cout << write_gsg(x) << '\n';
    return true;
  });
  std::cout << "COUNT " << summary.count << " truncated=" << (summary.truncated ? "true" : "false") << '\n';
  return kOk;
}

void add_witness_options(CLI::App* cmd, VerifyOptions& o) {
  cmd->add_option("--lattice", o.lattice, "grade lattice, comma separated")->capture_default_str();
  cmd->add_option("--cap", o.cap, "exhaustive subset cap per carrier")->capture_default_str();
  cmd->add_option("--seed", o.seed, "sampling seed")->capture_default_str();
  cmd->add_option("--samples", o.samples, "random subsets per carrier beyond the cap")->capture_default_str();
  cmd->add_option("--families", o.families, "pairs / families per instance")->capture_default_str();
  cmd->add_flag("--json", o.json, "JSON report");
  cmd->add_flag("--negate", o.negate, "negate every assertion (self-test)");
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Finite Gamma-semigroups, operator semigroups and intuitionistic fuzzy ideals"};
  app.require_subcommand(1);

  std::string file, subset, predicate = "all", side = "left", map, out, checks;
  std::size_t by = 0;
  bool print_classes = false;

  auto* validate_cmd = app.add_subcommand("validate", "check the axioms of a GSG file");
  validate_cmd->add_option("file", file, "GSG file")->required();

  auto* operators_cmd = app.add_subcommand("operators", "print an operator semigroup");
  operators_cmd->add_option("file", file, "GSG file")->required();
  operators_cmd->add_option("--side", side, "left or right")->capture_default_str();
  operators_cmd->add_flag("--print-classes", print_classes, "list every class with its members");

  auto* check_cmd = app.add_subcommand("check", "classify a subset");
  check_cmd->add_option("file", file, "GSG file")->required();
  check_cmd->add_option("--subset", subset, "IFS or SET file")->required();
  check_cmd->add_option("--predicate", predicate,
                        "left-ideal|right-ideal|ideal|prime|semiprime (crisp), ifli|ifri|ifi|ifpi|ifspi (fuzzy), "
                        "or all")
      ->capture_default_str();

  auto* transfer_cmd = app.add_subcommand("transfer", "apply a transfer map");
  transfer_cmd->add_option("file", file, "GSG file")->required();
  transfer_cmd->add_option("--subset", subset, "IFS or SET file")->required();
  transfer_cmd->add_option("--map", map, "star|star-prime|plus|plus-prime")->required();
  transfer_cmd->add_option("-o,--output", out, "output file (default standard output)");

  auto* extend_cmd = app.add_subcommand("extend", "extension of a fuzzy subset by an element");
  extend_cmd->add_option("file", file, "GSG file")->required();
  extend_cmd->add_option("--subset", subset, "IFS file")->required();
  extend_cmd->add_option("--by", by, "element of S, or class of L/R")->required();
  extend_cmd->add_option("-o,--output", out, "output file (default standard output)");

  VerifyOptions vo;
  std::size_t limit_value = 0;
  auto* verify_cmd = app.add_subcommand("verify", "run the check catalog over a population");
  verify_cmd->add_option("files", vo.files, "GSG files");
  verify_cmd->add_option("--enumerate", vo.enumerate_sizes, "all instances up to S,G");
  auto* verify_limit = verify_cmd->add_option("--limit", limit_value, "maximum number of instances");
  verify_cmd->add_option("--checks", vo.checks, "comma separated ids or all")->capture_default_str();
  add_witness_options(verify_cmd, vo);

  std::string search_check;
  std::size_t max_s = 2, max_g = 1;
  auto* search_cmd = app.add_subcommand("search", "look for a counterexample with the hypothesis dropped");
  search_cmd->add_option("--check", search_check, "catalog id")->required();
  search_cmd->add_option("--max-s", max_s, "largest |S|")->capture_default_str();
  search_cmd->add_option("--max-g", max_g, "largest |G|")->capture_default_str();
  auto* search_limit = search_cmd->add_option("--limit", limit_value, "maximum number of instances");
  add_witness_options(search_cmd, vo);

  bool negate_recheck = false;
  auto* recheck_cmd = app.add_subcommand("recheck", "re-evaluate a WITNESS block");
  recheck_cmd->add_option("file", file, "file holding the block")->required();
  recheck_cmd->add_flag("--negate", negate_recheck, "negate the assertion");

  std::size_t enum_s = 1, enum_g = 1;
  std::vector<std::string> filters;
  bool count_only = false;
  auto* enumerate_cmd = app.add_subcommand("enumerate", "list every Gamma-semigroup of the given sizes");
  enumerate_cmd->add_option("--s", enum_s, "|S|")->required();
  enumerate_cmd->add_option("--g", enum_g, "|G|")->required();
  enumerate_cmd->add_option("--filter", filters, "commutative|has-left-unity|has-right-unity|has-both-unities");
  auto* enumerate_limit = enumerate_cmd->add_option("--limit", limit_value, "maximum number of instances");
  enumerate_cmd->add_flag("--count", count_only, "print only the count");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    std::cerr << "error: " << e.what() << "\n\n" << app.help();
    return kInput;
  }

  auto limit_of = [&](CLI::Option* opt) -> std::optional<std::size_t> {
    if (opt->count() == 0) return std::nullopt;
    return limit_value;
  };

  try {
    if (*validate_cmd) return cmd_validate(file);
    if (*operators_cmd) return cmd_operators(file, side, print_classes);
    if (*check_cmd) return cmd_check(file, subset, predicate);
    if (*transfer_cmd) return cmd_transfer(file, subset, map, out);
    if (*extend_cmd) return cmd_extend(file, subset, by, out);
    if (*verify_cmd) {
      vo.limit = limit_of(verify_limit);
      return cmd_verify(vo);
    }
    if (*search_cmd) return cmd_search(search_check, max_s, max_g, limit_of(search_limit), vo);
    if (*recheck_cmd) return cmd_recheck(file, negate_recheck);
    if (*enumerate_cmd) return cmd_enumerate(enum_s, enum_g, filters, limit_of(enumerate_limit), count_only);
  } catch (const input_error& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kInput;
  } catch (const construction_error& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kInput;
  }
  return kInput;
}
