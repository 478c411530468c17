#pragma once

#include <cstddef>
#include <functional>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "gsg/context.hpp"
#include "gsg/extension.hpp"
#include "gsg/fuzzy.hpp"
#include "gsg/ideal.hpp"
#include "gsg/io.hpp"
#include "gsg/transfer.hpp"
#include "gsg/verify/population.hpp"

namespace gsg::verify {

enum class Hypothesis { none, both_unities, commutative, commutative_unities };

inline const char* to_string(Hypothesis h) {
  switch (h) {
    case Hypothesis::none: return "none";
    case Hypothesis::both_unities: return "both-unities";
    case Hypothesis::commutative: return "commutative";
    case Hypothesis::commutative_unities: return "commutative+unities";
  }
  return "?";
}

/// Why `ctx` falls outside the hypothesis, or nothing if it satisfies it.
inline std::optional<std::string> hypothesis_gap(Hypothesis h, const GammaContext& ctx) {
  const bool need_comm = h == Hypothesis::commutative || h == Hypothesis::commutative_unities;
  const bool need_unit = h == Hypothesis::both_unities || h == Hypothesis::commutative_unities;
  if (need_comm && !ctx.commutative()) return "not commutative";
  if (need_unit && !ctx.unities().left_unity) return "no left unity";
  if (need_unit && !ctx.unities().right_unity) return "no right unity";
  return std::nullopt;
}

enum class WitnessKind { crisp, fuzzy, fuzzy_ideal, family };

inline const char* to_string(WitnessKind w) {
  switch (w) {
    case WitnessKind::crisp: return "crisp subsets";
    case WitnessKind::fuzzy: return "fuzzy subsets";
    case WitnessKind::fuzzy_ideal: return "fuzzy-ideal subsets";
    case WitnessKind::family: return "ideal families";
  }
  return "?";
}

/// The subsets one assertion is evaluated on.
struct Case {
  std::vector<Subset> subsets;

  const CrispSubset& crisp(std::size_t i) const { return std::get<CrispSubset>(subsets.at(i)); }
  const IFSubset& fuzzy(std::size_t i) const { return std::get<IFSubset>(subsets.at(i)); }
  Carrier carrier(std::size_t i) const {
    return std::visit([](const auto& s) { return s.carrier(); }, subsets.at(i));
  }
  bool is_fuzzy() const { return !subsets.empty() && std::holds_alternative<IFSubset>(subsets.front()); }
};

struct Outcome {
  enum class Kind { pass, fail, skip };
  Kind kind = Kind::pass;
  std::string detail;

  static Outcome pass() { return {}; }
  static Outcome fail(std::string why) { return {Kind::fail, std::move(why)}; }
  static Outcome skip(std::string why) { return {Kind::skip, std::move(why)}; }
};

/// Receives one case; returns false to stop generation.
using Emit = std::function<bool(Case)>;
using Generator = std::function<void(InstanceData&, const Emit&)>;
using Assertion = std::function<Outcome(const GammaContext&, const Case&)>;

struct CheckEntry {
  std::string id;
  std::string statement;
  Hypothesis hypothesis = Hypothesis::none;
  WitnessKind witness = WitnessKind::fuzzy;
  Generator generate;
  Assertion assertion;
};

namespace detail {

using FlagsKeep = std::function<bool(const FuzzyFlags&)>;
using CrispKeep = std::function<bool(const CrispFlags&)>;

inline bool one_sided(const CrispFlags& f) { return f.left_ideal || f.right_ideal; }
inline bool prime_like(const CrispFlags& f) { return f.prime || f.semiprime; }
inline bool fuzzy_prime_like(const FuzzyFlags& f) { return f.ifpi || f.ifspi; }

// ---- generators ----

inline Generator crisp_cases(Carrier c, CrispKeep keep) {
  return [c, keep](InstanceData& d, const Emit& emit) {
    for (const CrispEntry& e : d.crisp(c))
      if (!e.flags.empty && keep(e.flags) && !emit(Case{{e.set}})) return;
  };
}

inline Generator all_crisp_cases(Carrier c) {
  return [c](InstanceData& d, const Emit& emit) {
    for (const CrispEntry& e : d.crisp(c))
      if (!emit(Case{{e.set}})) return;
  };
}

inline Generator all_fuzzy_cases(Carrier c) {
  return [c](InstanceData& d, const Emit& emit) {
    d.for_each_fuzzy(c, [&](const IFSubset& a) { return emit(Case{{a}}); });
  };
}

inline Generator fuzzy_cases(Carrier c, FlagsKeep keep) {
  return [c, keep](InstanceData& d, const Emit& emit) {
    for (const FuzzyEntry* e : d.fuzzy(c, keep))
      if (!emit(Case{{e->set}})) return;
  };
}

inline Generator crisp_pairs(Carrier c, CrispKeep keep, std::uint64_t tag) {
  return [c, keep, tag](InstanceData& d, const Emit& emit) {
    std::vector<CrispSubset> pool = d.crisp_where(c, keep);
    auto gen = d.rng(tag);
    for_each_inclusion_pair(
        pool.size(), d.config().family_cap, gen,
        [&](std::size_t i, std::size_t j) { return pool[i].subset_of(pool[j]); },
        [&](std::size_t i, std::size_t j) { return emit(Case{{pool[i], pool[j]}}); });
  };
}

inline Generator fuzzy_pairs(Carrier c, FlagsKeep keep, std::uint64_t tag) {
  return [c, keep, tag](InstanceData& d, const Emit& emit) {
    std::vector<const FuzzyEntry*> pool = d.fuzzy(c, keep);
    auto gen = d.rng(tag);
    for_each_inclusion_pair(
        pool.size(), d.config().family_cap, gen,
        [&](std::size_t i, std::size_t j) { return includes(pool[i]->set, pool[j]->set); },
        [&](std::size_t i, std::size_t j) { return emit(Case{{pool[i]->set, pool[j]->set}}); });
  };
}

inline Generator crisp_families(Carrier c, CrispKeep keep, std::uint64_t tag) {
  return [c, keep, tag](InstanceData& d, const Emit& emit) {
    std::vector<CrispSubset> pool = d.crisp_where(c, keep);
    auto gen = d.rng(tag);
    for_each_family(pool.size(), 3, d.config().family_cap, gen, [&](const std::vector<std::size_t>& idx) {
      Case k;
      for (std::size_t i : idx) k.subsets.push_back(pool[i]);
      return emit(std::move(k));
    });
  };
}

inline Generator fuzzy_families(Carrier c, std::optional<FlagsKeep> keep, std::uint64_t tag) {
  return [c, keep, tag](InstanceData& d, const Emit& emit) {
    std::vector<const IFSubset*> pool;
    if (keep) {
      for (const FuzzyEntry* e : d.fuzzy(c, *keep)) pool.push_back(&e->set);
    } else {
      for (const IFSubset& a : d.fuzzy_sample(c, d.config().family_cap)) pool.push_back(&a);
    }
    auto gen = d.rng(tag);
    for_each_family(pool.size(), 3, d.config().family_cap, gen, [&](const std::vector<std::size_t>& idx) {
      Case k;
      for (std::size_t i : idx) k.subsets.push_back(*pool[i]);
      return emit(std::move(k));
    });
  };
}

inline Generator concat(std::vector<Generator> parts) {
  return [parts = std::move(parts)](InstanceData& d, const Emit& emit) {
    bool go = true;
    Emit guarded = [&](Case k) { return go = emit(std::move(k)); };
    for (const Generator& g : parts) {
      g(d, guarded);
      if (!go) return;
    }
  };
}

// ---- assertion helpers ----

inline std::string show(const IFSubset& a) { return "[" + a.str() + "]"; }
inline std::string show(const CrispSubset& p) { return p.str(); }

template <typename T>
Outcome equal(const T& got, const T& want, const std::string& what) {
  if (got == want) return Outcome::pass();
  return Outcome::fail(what + ": got " + show(got) + ", expected " + show(want));
}

inline Outcome included(const IFSubset& a, const IFSubset& b, const std::string& what) {
  if (includes(a, b)) return Outcome::pass();
  return Outcome::fail(what + ": " + show(a) + " is not included in " + show(b));
}

inline Outcome included(const CrispSubset& a, const CrispSubset& b, const std::string& what) {
  if (a.subset_of(b)) return Outcome::pass();
  return Outcome::fail(what + ": " + show(a) + " is not included in " + show(b));
}

inline bool failed(const Outcome& o) { return o.kind != Outcome::Kind::pass; }

/// Flags of `src` that must carry over to `dst`, by name.
inline Outcome flags_carry(const FuzzyFlags& src, const FuzzyFlags& dst, bool ideals, bool primes,
                           const std::string& what) {
  std::vector<std::pair<const char*, std::pair<bool, bool>>> rows;
  if (ideals) {
    rows.push_back({"ifli", {src.ifli, dst.ifli}});
    rows.push_back({"ifri", {src.ifri, dst.ifri}});
    rows.push_back({"ifi", {src.ifi, dst.ifi}});
  }
  if (primes) {
    rows.push_back({"ifpi", {src.ifpi, dst.ifpi}});
    rows.push_back({"ifspi", {src.ifspi, dst.ifspi}});
  }
  for (const auto& [name, v] : rows)
    if (v.first && !v.second) return Outcome::fail(what + " loses " + name);
  return Outcome::pass();
}

inline Outcome crisp_flags_carry(const CrispFlags& src, const CrispFlags& dst, bool ideals, bool primes,
                                 const std::string& what) {
  std::vector<std::pair<const char*, std::pair<bool, bool>>> rows;
  if (ideals) {
    rows.push_back({"left-ideal", {src.left_ideal, dst.left_ideal}});
    rows.push_back({"right-ideal", {src.right_ideal, dst.right_ideal}});
    rows.push_back({"ideal", {src.ideal, dst.ideal}});
  }
  if (primes) {
    rows.push_back({"prime", {src.prime, dst.prime}});
    rows.push_back({"semiprime", {src.semiprime, dst.semiprime}});
  }
  for (const auto& [name, v] : rows)
    if (v.first && !v.second) return Outcome::fail(what + " loses " + name);
  return Outcome::pass();
}

inline const char* map_name(TransferMap m) { return to_string(m); }

/// The operator-semigroup class holding the pair built from x and gamma.
inline Index class_with(const GammaContext& ctx, Carrier c, Index x, Index gamma) {
  return c == Carrier::L ? ctx.left().class_of(x, gamma) : ctx.right().class_of(gamma, x);
}

// ---- entry builders ----

inline CheckEntry crisp_ideal_transfer(std::string id, TransferMap m) {
  CheckEntry e;
  e.id = std::move(id);
  e.statement = std::string("The ") + map_name(m) +
                " image of a left (right, two-sided) ideal is a left (right, two-sided) ideal.";
  e.hypothesis = Hypothesis::both_unities;
  e.witness = WitnessKind::crisp;
  e.generate = crisp_cases(source_of(m), one_sided);
  e.assertion = [m](const GammaContext& ctx, const Case& k) {
    const CrispSubset& x = k.crisp(0);
    CrispSubset img = transfer_crisp(x, m, ctx);
    return crisp_flags_carry(ctx.classify(x), ctx.classify(img), true, false,
                             std::string(map_name(m)) + " image " + show(img) + " of " + show(x));
  };
  return e;
}

inline CheckEntry level_commutation(std::string id, TransferMap m) {
  CheckEntry e;
  e.id = std::move(id);
  e.statement = std::string("For every threshold t with a nonempty level set, the ") + map_name(m) +
                " image of the upper (lower) level set at t equals the upper (lower) level set of the image.";
  e.witness = WitnessKind::fuzzy;
  e.generate = all_fuzzy_cases(source_of(m));
  e.assertion = [m](const GammaContext& ctx, const Case& k) {
    const IFSubset& a = k.fuzzy(0);
    IFSubset img = transfer_fuzzy(a, m, ctx);
    for (const Grade& t : thresholds(a)) {
      LevelSets src = level_sets(a, t), dst = level_sets(img, t);
      const std::string at = "t=" + t.str();
      if (!src.upper.empty()) {
        if (auto o = equal(transfer_crisp(src.upper, m, ctx), dst.upper, at + " upper level set"); failed(o)) return o;
      }
      if (!src.lower.empty()) {
        if (auto o = equal(transfer_crisp(src.lower, m, ctx), dst.lower, at + " lower level set"); failed(o)) return o;
      }
    }
    return Outcome::pass();
  };
  return e;
}

inline CheckEntry fuzzy_ideal_transfer(std::string id, TransferMap m) {
  CheckEntry e;
  e.id = std::move(id);
  e.statement = std::string("The ") + map_name(m) +
                " image of a fuzzy left (right, two-sided) ideal is a fuzzy left (right, two-sided) ideal.";
  e.hypothesis = Hypothesis::both_unities;
  e.witness = WitnessKind::fuzzy_ideal;
  e.generate = fuzzy_cases(source_of(m), [](const FuzzyFlags&) { return true; });
  e.assertion = [m](const GammaContext& ctx, const Case& k) {
    const IFSubset& a = k.fuzzy(0);
    IFSubset img = transfer_fuzzy(a, m, ctx);
    return flags_carry(ctx.classify(a), ctx.classify(img), true, false,
                       std::string(map_name(m)) + " image " + show(img));
  };
  return e;
}

/// Round trip and order checks for the pair (to_op: S -> T, back: T -> S).
/// Single-subset cases on S test back(to_op(A)) = A, on T test
/// to_op(back(B)) = B; two-subset cases test that A <= C implies the images
/// are ordered the same way.
template <typename Keep>
Assertion fuzzy_bijection(TransferMap to_op, TransferMap back, Keep keep, bool carry_flags) {
  return [=](const GammaContext& ctx, const Case& k) {
    const IFSubset& a = k.fuzzy(0);
    const bool on_s = a.carrier() == Carrier::S;
    const TransferMap first = on_s ? to_op : back, second = on_s ? back : to_op;
    if (k.subsets.size() == 2) {
      const IFSubset& c = k.fuzzy(1);
      if (!includes(a, c)) return Outcome::skip("pair not ordered");
      return included(transfer_fuzzy(a, first, ctx), transfer_fuzzy(c, first, ctx),
                      std::string("order under ") + map_name(first));
    }
    FuzzyFlags src = ctx.classify(a);
    if (!keep(src)) return Outcome::skip("outside the class");
    IFSubset mid = transfer_fuzzy(a, first, ctx);
    if (carry_flags) {
      if (auto o = flags_carry(src, ctx.classify(mid), false, true, std::string(map_name(first)) + " image " + show(mid));
          failed(o))
        return o;
    }
    return equal(transfer_fuzzy(mid, second, ctx), a,
                 std::string(map_name(first)) + " then " + map_name(second));
  };
}

template <typename Keep>
Assertion crisp_bijection(TransferMap to_op, TransferMap back, Keep keep, bool carry_flags) {
  return [=](const GammaContext& ctx, const Case& k) {
    const CrispSubset& a = k.crisp(0);
    const bool on_s = a.carrier() == Carrier::S;
    const TransferMap first = on_s ? to_op : back, second = on_s ? back : to_op;
    if (k.subsets.size() == 2) {
      const CrispSubset& c = k.crisp(1);
      if (!a.subset_of(c)) return Outcome::skip("pair not ordered");
      return included(transfer_crisp(a, first, ctx), transfer_crisp(c, first, ctx),
                      std::string("order under ") + map_name(first));
    }
    CrispFlags src = ctx.classify(a);
    if (!keep(src)) return Outcome::skip("outside the class");
    CrispSubset mid = transfer_crisp(a, first, ctx);
    if (carry_flags) {
      if (auto o = crisp_flags_carry(src, ctx.classify(mid), false, true,
                                     std::string(map_name(first)) + " image " + show(mid));
          failed(o))
        return o;
    }
    return equal(transfer_crisp(mid, second, ctx), a, std::string(map_name(first)) + " then " + map_name(second));
  };
}

inline CheckEntry char_pair(std::string id, TransferMap m, bool ideals_only) {
  CheckEntry e;
  e.id = std::move(id);
  e.statement = std::string("The ") + map_name(m) + " image of the characteristic pair of " +
                (ideals_only ? "an ideal" : "a subset") + " is the characteristic pair of its crisp " +
                map_name(m) + " image.";
  e.witness = WitnessKind::crisp;
  e.generate = ideals_only ? crisp_cases(source_of(m), [](const CrispFlags& f) { return f.ideal; })
                           : all_crisp_cases(source_of(m));
  e.assertion = [m](const GammaContext& ctx, const Case& k) {
    const CrispSubset& i = k.crisp(0);
    return equal(transfer_fuzzy(characteristic_pair(i), m, ctx), characteristic_pair(transfer_crisp(i, m, ctx)),
                 "characteristic pair of " + show(i));
  };
  return e;
}

inline CheckEntry crisp_prime_transfer(std::string id, TransferMap m) {
  CheckEntry e;
  e.id = std::move(id);
  e.statement = std::string("The ") + map_name(m) + " image of a prime (semiprime) ideal is prime (semiprime).";
  e.witness = WitnessKind::crisp;
  e.generate = crisp_cases(source_of(m), prime_like);
  e.assertion = [m](const GammaContext& ctx, const Case& k) {
    const CrispSubset& x = k.crisp(0);
    CrispSubset img = transfer_crisp(x, m, ctx);
    return crisp_flags_carry(ctx.classify(x), ctx.classify(img), false, true,
                             std::string(map_name(m)) + " image " + show(img) + " of " + show(x));
  };
  return e;
}

inline CheckEntry fuzzy_prime_transfer(std::string id, TransferMap m) {
  CheckEntry e;
  e.id = std::move(id);
  e.statement = std::string("The ") + map_name(m) +
                " image of a fuzzy prime (semiprime) ideal is a fuzzy prime (semiprime) ideal.";
  e.witness = WitnessKind::fuzzy_ideal;
  e.generate = fuzzy_cases(source_of(m), fuzzy_prime_like);
  e.assertion = [m](const GammaContext& ctx, const Case& k) {
    const IFSubset& a = k.fuzzy(0);
    IFSubset img = transfer_fuzzy(a, m, ctx);
    return flags_carry(ctx.classify(a), ctx.classify(img), false, true,
                       std::string(map_name(m)) + " image " + show(img));
  };
  return e;
}

/// Bijection between the fuzzy classes on R and on L through S:
/// B |-> (B star) plus-prime, inverse C |-> (C plus) star-prime.
inline Assertion rl_bijection(FlagsKeep keep, bool primes) {
  return [=](const GammaContext& ctx, const Case& k) {
    const IFSubset& b = k.fuzzy(0);
    FuzzyFlags src = ctx.classify(b);
    if (!keep(src)) return Outcome::skip("outside the class");
    const bool from_r = b.carrier() == Carrier::R;
    IFSubset mid = from_r ? transfer_fuzzy(transfer_fuzzy(b, TransferMap::star, ctx), TransferMap::plus_prime, ctx)
                          : transfer_fuzzy(transfer_fuzzy(b, TransferMap::plus, ctx), TransferMap::star_prime, ctx);
    if (auto o = flags_carry(src, ctx.classify(mid), !primes, primes, "image " + show(mid)); failed(o)) return o;
    IFSubset back = from_r ? transfer_fuzzy(transfer_fuzzy(mid, TransferMap::plus, ctx), TransferMap::star_prime, ctx)
                           : transfer_fuzzy(transfer_fuzzy(mid, TransferMap::star, ctx), TransferMap::plus_prime, ctx);
    return equal(back, b, from_r ? "R to L and back" : "L to R and back");
  };
}

inline bool ifspi_of(const GammaContext& ctx, const IFSubset& a) { return ctx.classify(a).ifspi; }

}  // namespace detail

/// Every claim checked by the verifier, in report order.
inline const std::vector<CheckEntry>& catalog() {
  using namespace detail;
  static const std::vector<CheckEntry> entries = [] {
    std::vector<CheckEntry> v;
    const auto any_flags = [](const FuzzyFlags&) { return true; };
    const auto is_ifi = [](const FuzzyFlags& f) { return f.ifi; };
    const auto is_ifli = [](const FuzzyFlags& f) { return f.ifli; };
    const auto is_ifri = [](const FuzzyFlags& f) { return f.ifri; };
    const auto is_left = [](const CrispFlags& f) { return f.left_ideal; };
    const auto is_right = [](const CrispFlags& f) { return f.right_ideal; };
    const auto is_ideal = [](const CrispFlags& f) { return f.ideal; };
    const auto is_semiprime = [](const CrispFlags& f) { return f.semiprime; };

    // Crisp ideals.
    v.push_back(crisp_ideal_transfer("crisp-ideal-star", TransferMap::star));
    v.push_back(crisp_ideal_transfer("crisp-ideal-star-prime", TransferMap::star_prime));
    v.push_back(crisp_ideal_transfer("crisp-ideal-plus", TransferMap::plus));
    v.push_back(crisp_ideal_transfer("crisp-ideal-plus-prime", TransferMap::plus_prime));

    // Level sets.
    v.push_back(level_commutation("level-star", TransferMap::star));
    v.push_back(level_commutation("level-star-prime", TransferMap::star_prime));
    v.push_back(level_commutation("level-plus", TransferMap::plus));
    v.push_back(level_commutation("level-plus-prime", TransferMap::plus_prime));

    // Fuzzy ideals.
    v.push_back(fuzzy_ideal_transfer("fuzzy-ideal-star", TransferMap::star));
    v.push_back(fuzzy_ideal_transfer("fuzzy-ideal-star-prime", TransferMap::star_prime));
    v.push_back(fuzzy_ideal_transfer("fuzzy-ideal-plus", TransferMap::plus));
    v.push_back(fuzzy_ideal_transfer("fuzzy-ideal-plus-prime", TransferMap::plus_prime));

    {
      CheckEntry e;
      e.id = "fuzzy-bijection-plus";
      e.statement =
          "With both unities, A |-> A plus-prime is an inclusion preserving bijection from fuzzy right "
          "ideals (ideals) of S onto those of L with inverse B |-> B plus.";
      e.hypothesis = Hypothesis::both_unities;
      e.witness = WitnessKind::fuzzy_ideal;
      e.generate = concat({fuzzy_cases(Carrier::S, is_ifri), fuzzy_cases(Carrier::L, is_ifri),
                           fuzzy_pairs(Carrier::S, is_ifri, 11), fuzzy_pairs(Carrier::L, is_ifri, 12)});
      e.assertion = fuzzy_bijection(TransferMap::plus_prime, TransferMap::plus, is_ifri, false);
      v.push_back(std::move(e));
    }
    {
      CheckEntry e;
      e.id = "fuzzy-bijection-star";
      e.statement =
          "With both unities, A |-> A star-prime is an inclusion preserving bijection from fuzzy left "
          "ideals (ideals) of S onto those of R with inverse B |-> B star.";
      e.hypothesis = Hypothesis::both_unities;
      e.witness = WitnessKind::fuzzy_ideal;
      e.generate = concat({fuzzy_cases(Carrier::S, is_ifli), fuzzy_cases(Carrier::R, is_ifli),
                           fuzzy_pairs(Carrier::S, is_ifli, 13), fuzzy_pairs(Carrier::R, is_ifli, 14)});
      e.assertion = fuzzy_bijection(TransferMap::star_prime, TransferMap::star, is_ifli, false);
      v.push_back(std::move(e));
    }
    {
      CheckEntry e;
      e.id = "fuzzy-roundtrip-inclusion";
      e.statement =
          "Without unities, a fuzzy right ideal A of S lies in (A plus-prime) plus, a fuzzy left ideal lies in "
          "(A star-prime) star, and dually on L and R.";
      e.witness = WitnessKind::fuzzy_ideal;
      e.generate = concat({fuzzy_cases(Carrier::S, any_flags), fuzzy_cases(Carrier::L, is_ifri),
                           fuzzy_cases(Carrier::R, is_ifli)});
      e.assertion = [](const GammaContext& ctx, const Case& k) {
        const IFSubset& a = k.fuzzy(0);
        FuzzyFlags f = ctx.classify(a);
        switch (a.carrier()) {
          case Carrier::S:
            if (f.ifri)
              if (auto o = included(a, plus_prime_then_plus(a, ctx), "plus-prime then plus"); failed(o)) return o;
            if (f.ifli)
              if (auto o = included(a, star_prime_then_star(a, ctx), "star-prime then star"); failed(o)) return o;
            return Outcome::pass();
          case Carrier::L: return included(a, plus_then_plus_prime(a, ctx), "plus then plus-prime");
          case Carrier::R: return included(a, star_then_star_prime(a, ctx), "star then star-prime");
        }
        return Outcome::pass();
      };
      v.push_back(std::move(e));
    }

    // Characteristic pairs.
    v.push_back(char_pair("char-pair-star", TransferMap::star, false));
    v.push_back(char_pair("char-pair-star-prime", TransferMap::star_prime, false));
    v.push_back(char_pair("char-pair-plus", TransferMap::plus, false));
    v.push_back(char_pair("char-pair-plus-prime", TransferMap::plus_prime, false));
    v.push_back(char_pair("char-pair-ideal-star-prime", TransferMap::star_prime, true));

    // Crisp bijections with unities.
    {
      CheckEntry e;
      e.id = "crisp-bijection-star-prime";
      e.statement =
          "With both unities, I |-> I star-prime is an inclusion preserving bijection from left ideals "
          "(ideals) of S onto those of R with inverse J |-> J star.";
      e.hypothesis = Hypothesis::both_unities;
      e.witness = WitnessKind::crisp;
      e.generate = concat({crisp_cases(Carrier::S, is_left), crisp_cases(Carrier::R, is_left),
                           crisp_pairs(Carrier::S, is_left, 21), crisp_pairs(Carrier::R, is_left, 22)});
      e.assertion = crisp_bijection(TransferMap::star_prime, TransferMap::star, is_left, false);
      v.push_back(std::move(e));
    }
    {
      CheckEntry e;
      e.id = "crisp-bijection-plus-prime";
      e.statement =
          "With both unities, I |-> I plus-prime is an inclusion preserving bijection from right ideals "
          "(ideals) of S onto those of L with inverse J |-> J plus.";
      e.hypothesis = Hypothesis::both_unities;
      e.witness = WitnessKind::crisp;
      e.generate = concat({crisp_cases(Carrier::S, is_right), crisp_cases(Carrier::L, is_right),
                           crisp_pairs(Carrier::S, is_right, 23), crisp_pairs(Carrier::L, is_right, 24)});
      e.assertion = crisp_bijection(TransferMap::plus_prime, TransferMap::plus, is_right, false);
      v.push_back(std::move(e));
    }

    // Prime and semiprime transfer.
    v.push_back(crisp_prime_transfer("crisp-prime-star", TransferMap::star));
    v.push_back(crisp_prime_transfer("crisp-prime-star-prime", TransferMap::star_prime));
    v.push_back(crisp_prime_transfer("crisp-prime-plus", TransferMap::plus));
    v.push_back(crisp_prime_transfer("crisp-prime-plus-prime", TransferMap::plus_prime));
    v.push_back(fuzzy_prime_transfer("fuzzy-prime-star", TransferMap::star));
    v.push_back(fuzzy_prime_transfer("fuzzy-prime-star-prime", TransferMap::star_prime));
    v.push_back(fuzzy_prime_transfer("fuzzy-prime-plus", TransferMap::plus));
    v.push_back(fuzzy_prime_transfer("fuzzy-prime-plus-prime", TransferMap::plus_prime));

    {
      CheckEntry e;
      e.id = "fuzzy-prime-bijection-star";
      e.statement =
          "Without unities, B |-> B star-prime is an inclusion preserving bijection from fuzzy prime "
          "(semiprime) ideals of S onto those of R with inverse B |-> B star.";
      e.witness = WitnessKind::fuzzy_ideal;
      e.generate = concat({fuzzy_cases(Carrier::S, fuzzy_prime_like), fuzzy_cases(Carrier::R, fuzzy_prime_like),
                           fuzzy_pairs(Carrier::S, fuzzy_prime_like, 31),
                           fuzzy_pairs(Carrier::R, fuzzy_prime_like, 32)});
      e.assertion = fuzzy_bijection(TransferMap::star_prime, TransferMap::star, fuzzy_prime_like, true);
      v.push_back(std::move(e));
    }
    {
      CheckEntry e;
      e.id = "fuzzy-prime-bijection-plus";
      e.statement =
          "Without unities, B |-> B plus-prime is an inclusion preserving bijection from fuzzy prime "
          "(semiprime) ideals of S onto those of L with inverse B |-> B plus.";
      e.witness = WitnessKind::fuzzy_ideal;
      e.generate = concat({fuzzy_cases(Carrier::S, fuzzy_prime_like), fuzzy_cases(Carrier::L, fuzzy_prime_like),
                           fuzzy_pairs(Carrier::S, fuzzy_prime_like, 33),
                           fuzzy_pairs(Carrier::L, fuzzy_prime_like, 34)});
      e.assertion = fuzzy_bijection(TransferMap::plus_prime, TransferMap::plus, fuzzy_prime_like, true);
      v.push_back(std::move(e));
    }
    {
      CheckEntry e;
      e.id = "fuzzy-prime-bijection-rl";
      e.statement =
          "Fuzzy prime (semiprime) ideals of R and of L correspond bijectively through S, preserving "
          "inclusion.";
      e.witness = WitnessKind::fuzzy_ideal;
      e.generate = concat({fuzzy_cases(Carrier::R, fuzzy_prime_like), fuzzy_cases(Carrier::L, fuzzy_prime_like)});
      e.assertion = rl_bijection(fuzzy_prime_like, true);
      v.push_back(std::move(e));
    }
    {
      CheckEntry e;
      e.id = "fuzzy-ideal-bijection-rl";
      e.statement = "With both unities, fuzzy ideals of R and of L correspond bijectively through S.";
      e.hypothesis = Hypothesis::both_unities;
      e.witness = WitnessKind::fuzzy_ideal;
      e.generate = concat({fuzzy_cases(Carrier::R, is_ifi), fuzzy_cases(Carrier::L, is_ifi)});
      e.assertion = rl_bijection(is_ifi, false);
      v.push_back(std::move(e));
    }
    {
      CheckEntry e;
      e.id = "crisp-prime-bijection-star-prime";
      e.statement =
          "Without unities, P |-> P star-prime is an inclusion preserving bijection from prime (semiprime) "
          "ideals of S onto those of R with inverse Q |-> Q star.";
      e.witness = WitnessKind::crisp;
      e.generate = concat({crisp_cases(Carrier::S, prime_like), crisp_cases(Carrier::R, prime_like),
                           crisp_pairs(Carrier::S, prime_like, 41), crisp_pairs(Carrier::R, prime_like, 42)});
      e.assertion = crisp_bijection(TransferMap::star_prime, TransferMap::star, prime_like, true);
      v.push_back(std::move(e));
    }
    {
      CheckEntry e;
      e.id = "crisp-prime-bijection-plus-prime";
      e.statement =
          "Without unities, P |-> P plus-prime is an inclusion preserving bijection from prime (semiprime) "
          "ideals of S onto those of L with inverse Q |-> Q plus.";
      e.witness = WitnessKind::crisp;
      e.generate = concat({crisp_cases(Carrier::S, prime_like), crisp_cases(Carrier::L, prime_like),
                           crisp_pairs(Carrier::S, prime_like, 43), crisp_pairs(Carrier::L, prime_like, 44)});
      e.assertion = crisp_bijection(TransferMap::plus_prime, TransferMap::plus, prime_like, true);
      v.push_back(std::move(e));
    }

    // Extensions.
    {
      CheckEntry e;
      e.id = "ext-op-image";
      e.statement =
          "On a commutative S, if A is a fuzzy left (right, two-sided) ideal of S then the extension of "
          "A plus-prime (A star-prime) by any element of L (R) is one of L (R).";
      e.hypothesis = Hypothesis::commutative;
      e.witness = WitnessKind::fuzzy_ideal;
      e.generate = fuzzy_cases(Carrier::S, any_flags);
      e.assertion = [](const GammaContext& ctx, const Case& k) {
        const IFSubset& a = k.fuzzy(0);
        FuzzyFlags src = ctx.classify(a);
        for (TransferMap m : {TransferMap::plus_prime, TransferMap::star_prime}) {
          IFSubset img = transfer_fuzzy(a, m, ctx);
          for (Index r = 0; r < img.carrier_size(); ++r) {
            IFSubset ext = extend_op(img, r, ctx);
            if (auto o = flags_carry(src, ctx.classify(ext), true, false,
                                     std::string("extension by class ") + std::to_string(r) + " of the " +
                                         map_name(m) + " image " + show(ext));
                failed(o))
              return o;
          }
        }
        return Outcome::pass();
      };
      v.push_back(std::move(e));
    }
    {
      CheckEntry e;
      e.id = "ext-s-image";
      e.statement =
          "On a commutative S, if B is a fuzzy left (right, two-sided) ideal of L (R) then the extension of "
          "B plus (B star) by any element of S is one of S.";
      e.hypothesis = Hypothesis::commutative;
      e.witness = WitnessKind::fuzzy_ideal;
      e.generate = concat({fuzzy_cases(Carrier::L, any_flags), fuzzy_cases(Carrier::R, any_flags)});
      e.assertion = [](const GammaContext& ctx, const Case& k) {
        const IFSubset& b = k.fuzzy(0);
        FuzzyFlags src = ctx.classify(b);
        TransferMap m = b.carrier() == Carrier::L ? TransferMap::plus : TransferMap::star;
        IFSubset img = transfer_fuzzy(b, m, ctx);
        for (Index x = 0; x < img.carrier_size(); ++x) {
          IFSubset ext = extend(img, x, ctx);
          if (auto o = flags_carry(src, ctx.classify(ext), true, false,
                                   "extension by " + std::to_string(x) + " " + show(ext));
              failed(o))
            return o;
        }
        return Outcome::pass();
      };
      v.push_back(std::move(e));
    }
    {
      CheckEntry e;
      e.id = "ext-star-prime-inclusion";
      e.statement =
          "On a commutative S, the star-prime image of the extension of A by x is included in the extension "
          "of A star-prime by [alpha,x], for every alpha.";
      e.hypothesis = Hypothesis::commutative;
      e.witness = WitnessKind::fuzzy;
      e.generate = all_fuzzy_cases(Carrier::S);
      e.assertion = [](const GammaContext& ctx, const Case& k) {
        const IFSubset& a = k.fuzzy(0);
        IFSubset img = transfer_fuzzy(a, TransferMap::star_prime, ctx);
        const GammaSemigroup& s = ctx.semigroup();
        for (Index x = 0; x < s.s_size(); ++x) {
          IFSubset lhs = transfer_fuzzy(extend(a, x, ctx), TransferMap::star_prime, ctx);
          for (Index g = 0; g < s.g_size(); ++g)
            if (auto o = included(lhs, extend_op(img, class_with(ctx, Carrier::R, x, g), ctx),
                                  "x=" + std::to_string(x) + " alpha=" + std::to_string(g));
                failed(o))
              return o;
        }
        return Outcome::pass();
      };
      v.push_back(std::move(e));
    }
    {
      CheckEntry e;
      e.id = "ext-star-prime-inf";
      e.statement =
          "On a commutative S, the star-prime image of the extension of A by x equals the infimum over alpha "
          "of the extensions of A star-prime by [alpha,x].";
      e.hypothesis = Hypothesis::commutative;
      e.witness = WitnessKind::fuzzy;
      e.generate = all_fuzzy_cases(Carrier::S);
      e.assertion = [](const GammaContext& ctx, const Case& k) {
        const IFSubset& a = k.fuzzy(0);
        IFSubset img = transfer_fuzzy(a, TransferMap::star_prime, ctx);
        const GammaSemigroup& s = ctx.semigroup();
        for (Index x = 0; x < s.s_size(); ++x) {
          std::vector<IFSubset> family;
          for (Index g = 0; g < s.g_size(); ++g) family.push_back(extend_op(img, class_with(ctx, Carrier::R, x, g), ctx));
          if (auto o = equal(transfer_fuzzy(extend(a, x, ctx), TransferMap::star_prime, ctx), inf_family(family),
                             "x=" + std::to_string(x));
              failed(o))
            return o;
        }
        return Outcome::pass();
      };
      v.push_back(std::move(e));
    }
    {
      CheckEntry e;
      e.id = "ext-star-inclusion";
      e.statement =
          "For a fuzzy subset B of R, the extension of B star by x is included in the star image of the "
          "extension of B by [beta,x], for every beta.";
      e.witness = WitnessKind::fuzzy;
      e.generate = all_fuzzy_cases(Carrier::R);
      e.assertion = [](const GammaContext& ctx, const Case& k) {
        const IFSubset& b = k.fuzzy(0);
        IFSubset star = transfer_fuzzy(b, TransferMap::star, ctx);
        const GammaSemigroup& s = ctx.semigroup();
        for (Index x = 0; x < s.s_size(); ++x) {
          IFSubset lhs = extend(star, x, ctx);
          for (Index g = 0; g < s.g_size(); ++g)
            if (auto o = included(lhs,
                                  transfer_fuzzy(extend_op(b, class_with(ctx, Carrier::R, x, g), ctx),
                                                 TransferMap::star, ctx),
                                  "x=" + std::to_string(x) + " beta=" + std::to_string(g));
                failed(o))
              return o;
        }
        return Outcome::pass();
      };
      v.push_back(std::move(e));
    }
    {
      CheckEntry e;
      e.id = "intersection-star-prime";
      e.statement = "The star-prime image of an intersection of ideals of S is the intersection of the images.";
      e.witness = WitnessKind::family;
      e.generate = crisp_families(Carrier::S, is_ideal, 51);
      e.assertion = [](const GammaContext& ctx, const Case& k) {
        CrispSubset meet = k.crisp(0);
        CrispSubset images = transfer_crisp(k.crisp(0), TransferMap::star_prime, ctx);
        for (std::size_t i = 1; i < k.subsets.size(); ++i) {
          meet = intersect(meet, k.crisp(i));
          images = intersect(images, transfer_crisp(k.crisp(i), TransferMap::star_prime, ctx));
        }
        return equal(transfer_crisp(meet, TransferMap::star_prime, ctx), images, "image of the intersection");
      };
      v.push_back(std::move(e));
    }
    {
      CheckEntry e;
      e.id = "inf-family-star-prime";
      e.statement = "The star-prime image of the infimum of a family of fuzzy subsets of S is the infimum of the images.";
      e.witness = WitnessKind::family;
      e.generate = fuzzy_families(Carrier::S, std::nullopt, 52);
      e.assertion = [](const GammaContext& ctx, const Case& k) {
        std::vector<IFSubset> family, images;
        for (std::size_t i = 0; i < k.subsets.size(); ++i) {
          family.push_back(k.fuzzy(i));
          images.push_back(transfer_fuzzy(k.fuzzy(i), TransferMap::star_prime, ctx));
        }
        return equal(transfer_fuzzy(inf_family(family), TransferMap::star_prime, ctx), inf_family(images),
                     "image of the infimum");
      };
      v.push_back(std::move(e));
    }
    {
      CheckEntry e;
      e.id = "ext-monotone";
      e.statement = "A fuzzy ideal of S is included in each of its extensions.";
      e.witness = WitnessKind::fuzzy_ideal;
      e.generate = fuzzy_cases(Carrier::S, is_ifi);
      e.assertion = [](const GammaContext& ctx, const Case& k) {
        const IFSubset& a = k.fuzzy(0);
        for (Index x = 0; x < a.carrier_size(); ++x)
          if (auto o = included(a, extend(a, x, ctx), "extension by " + std::to_string(x)); failed(o)) return o;
        return Outcome::pass();
      };
      v.push_back(std::move(e));
    }
    {
      CheckEntry e;
      e.id = "ext-ideal";
      e.statement = "On a commutative S with both unities, every extension of a fuzzy ideal is a fuzzy ideal.";
      e.hypothesis = Hypothesis::commutative_unities;
      e.witness = WitnessKind::fuzzy_ideal;
      e.generate = fuzzy_cases(Carrier::S, is_ifi);
      e.assertion = [](const GammaContext& ctx, const Case& k) {
        const IFSubset& a = k.fuzzy(0);
        for (Index x = 0; x < a.carrier_size(); ++x) {
          IFSubset ext = extend(a, x, ctx);
          if (!ctx.classify(ext).ifi)
            return Outcome::fail("extension by " + std::to_string(x) + " " + show(ext) + " is not a fuzzy ideal");
        }
        return Outcome::pass();
      };
      v.push_back(std::move(e));
    }
    {
      CheckEntry e;
      e.id = "ext-semiprime";
      e.statement = "On a commutative S, every extension of a fuzzy semiprime ideal is a fuzzy semiprime ideal.";
      e.hypothesis = Hypothesis::commutative;
      e.witness = WitnessKind::fuzzy_ideal;
      e.generate = fuzzy_cases(Carrier::S, [](const FuzzyFlags& f) { return f.ifspi; });
      e.assertion = [](const GammaContext& ctx, const Case& k) {
        const IFSubset& a = k.fuzzy(0);
        for (Index x = 0; x < a.carrier_size(); ++x) {
          IFSubset ext = extend(a, x, ctx);
          if (!ifspi_of(ctx, ext))
            return Outcome::fail("extension by " + std::to_string(x) + " " + show(ext) +
                                 " is not a fuzzy semiprime ideal");
        }
        return Outcome::pass();
      };
      v.push_back(std::move(e));
    }
    {
      CheckEntry e;
      e.id = "ext-semiprime-inf";
      e.statement =
          "On a commutative S, every extension of the infimum of a nonempty family of fuzzy semiprime ideals "
          "is a fuzzy semiprime ideal.";
      e.hypothesis = Hypothesis::commutative;
      e.witness = WitnessKind::family;
      e.generate = fuzzy_families(Carrier::S, FlagsKeep([](const FuzzyFlags& f) { return f.ifspi; }), 53);
      e.assertion = [](const GammaContext& ctx, const Case& k) {
        std::vector<IFSubset> family;
        for (std::size_t i = 0; i < k.subsets.size(); ++i) family.push_back(k.fuzzy(i));
        IFSubset a = inf_family(family);
        for (Index x = 0; x < a.carrier_size(); ++x) {
          IFSubset ext = extend(a, x, ctx);
          if (!ifspi_of(ctx, ext))
            return Outcome::fail("extension by " + std::to_string(x) + " of the infimum " + show(ext) +
                                 " is not a fuzzy semiprime ideal");
        }
        return Outcome::pass();
      };
      v.push_back(std::move(e));
    }
    {
      CheckEntry e;
      e.id = "ext-semiprime-intersection";
      e.statement =
          "On a commutative S, for a nonempty intersection A of semiprime ideals, every extension of the "
          "characteristic pair of A is a fuzzy semiprime ideal.";
      e.hypothesis = Hypothesis::commutative;
      e.witness = WitnessKind::family;
      e.generate = crisp_families(Carrier::S, is_semiprime, 54);
      e.assertion = [](const GammaContext& ctx, const Case& k) {
        CrispSubset meet = k.crisp(0);
        for (std::size_t i = 1; i < k.subsets.size(); ++i) meet = intersect(meet, k.crisp(i));
        if (meet.empty()) return Outcome::skip("empty intersection");
        IFSubset m = characteristic_pair(meet);
        for (Index x = 0; x < m.carrier_size(); ++x) {
          IFSubset ext = extend(m, x, ctx);
          if (!ifspi_of(ctx, ext))
            return Outcome::fail("extension by " + std::to_string(x) + " of the pair of " + show(meet) + " " +
                                 show(ext) + " is not a fuzzy semiprime ideal");
        }
        return Outcome::pass();
      };
      v.push_back(std::move(e));
    }
    {
      CheckEntry e;
      e.id = "prime-extension";
      e.statement =
          "An ideal P of S is prime exactly when every extension of its characteristic pair by an element "
          "outside P equals the pair itself.";
      e.witness = WitnessKind::crisp;
      e.generate = crisp_cases(Carrier::S, is_ideal);
      e.assertion = [](const GammaContext& ctx, const Case& k) {
        const CrispSubset& p = k.crisp(0);
        const bool prime = ctx.classify(p).prime;
        IFSubset m = characteristic_pair(p);
        std::optional<Index> moved;
        for (Index x = 0; x < p.carrier_size() && !moved; ++x)
          if (!p.contains(x) && !(extend(m, x, ctx) == m)) moved = x;
        if (prime && moved)
          return Outcome::fail(show(p) + " is prime but the extension by " + std::to_string(*moved) + " is " +
                               show(extend(m, *moved, ctx)));
        if (!prime && !moved) return Outcome::fail(show(p) + " is not prime yet every extension fixes its pair");
        return Outcome::pass();
      };
      v.push_back(std::move(e));
    }
    return v;
  }();
  return entries;
}

inline const CheckEntry& find_check(const std::string& id) {
  for (const CheckEntry& e : catalog())
    if (e.id == id) return e;
  throw input_error("unknown check '" + id + "'");
}

}  // namespace gsg::verify
