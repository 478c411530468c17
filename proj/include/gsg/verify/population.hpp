#pragma once

#include <algorithm>
#include <array>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <optional>
#include <random>
#include <string>
#include <vector>

#include "gsg/context.hpp"
#include "gsg/enumerate.hpp"
#include "gsg/grade.hpp"
#include "gsg/ideal.hpp"
#include "gsg/io.hpp"
#include "gsg/subset.hpp"

namespace gsg::verify {

/// How witness subsets are generated for each instance.
struct WitnessConfig {
  std::vector<Grade> lattice{Grade(0, 1), Grade(1, 4), Grade(1, 2), Grade(3, 4), Grade(1, 1)};
  std::size_t cap = 1'000'000;       // exhaustive when the subset count is at most this
  std::uint64_t seed = 0;
  std::size_t samples = 4096;        // random subsets per carrier beyond the cap
  std::size_t family_cap = 20'000;   // pairs / families per instance and pool

  std::string lattice_str() const {
    std::string out;
    for (const Grade& g : lattice) out += (out.empty() ? "" : ",") + g.str();
    return out;
  }
};

/// Parses "0,1/2,1" into a sorted, duplicate-free lattice.
inline std::vector<Grade> parse_lattice(const std::string& text) {
  std::vector<Grade> out;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    std::size_t comma = text.find(',', pos);
    if (comma == std::string::npos) comma = text.size();
    out.push_back(Grade::parse(text.substr(pos, comma - pos)));
    pos = comma + 1;
  }
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

struct Population {
  std::vector<GammaSemigroup> instances;
  bool truncated = false;
  std::string source;
};

/// Every Γ-semigroup with 1 <= |S| <= max_s and 1 <= |Γ| <= max_g, sizes in
/// increasing order, stopping after `limit` instances in total.
inline Population enumerate_population(std::size_t max_s, std::size_t max_g,
                                       std::optional<std::size_t> limit = std::nullopt,
                                       InstanceFilter filters = InstanceFilter::none) {
  Population pop;
  pop.source = "enumerate s<=" + std::to_string(max_s) + " g<=" + std::to_string(max_g);
  for (std::size_t s = 1; s <= max_s && !pop.truncated; ++s)
    for (std::size_t g = 1; g <= max_g && !pop.truncated; ++g) {
      EnumerationOptions opts;
      opts.filters = filters;
      if (limit) opts.limit = *limit - pop.instances.size();
      auto summary = for_each_gamma_semigroup(s, g, opts, [&](const GammaSemigroup& x) {
        pop.instances.push_back(x);
        return true;
      });
      if (summary.truncated) pop.truncated = true;
    }
  return pop;
}

inline std::uint64_t splitmix64(std::uint64_t x) {
  x += 0x9e3779b97f4a7c15ULL;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
  return x ^ (x >> 31);
}

struct CrispEntry {
  CrispSubset set;
  CrispFlags flags;
};

struct FuzzyEntry {
  IFSubset set;
  FuzzyFlags flags;
};

/// Per-instance witness material, built lazily and cached.
class InstanceData {
 public:
  InstanceData(const GammaContext& ctx, const WitnessConfig& config, std::uint64_t instance_seed)
      : ctx_(ctx), config_(config), seed_(splitmix64(config.seed ^ splitmix64(instance_seed))) {
    for (Grade mu : config_.lattice)
      for (Grade nu : config_.lattice)
        if (sum_at_most_one(mu, nu)) pairs_.push_back({mu, nu});
  }

  const GammaContext& ctx() const noexcept { return ctx_; }
  const WitnessConfig& config() const noexcept { return config_; }

  /// Deterministic generator for one purpose tag.
  std::mt19937_64 rng(std::uint64_t purpose) const { return std::mt19937_64(splitmix64(seed_ ^ splitmix64(purpose))); }

  /// All crisp subsets of the carrier (the empty one included), or a seeded
  /// sample when there are more than `cap`.
  const std::vector<CrispEntry>& crisp(Carrier c) {
    auto& slot = crisp_[index(c)];
    if (slot) return *slot;
    slot.emplace();
    const std::size_t n = ctx_.size(c);
    const ProductView& view = ctx_.view(c);
    auto add = [&](CrispSubset s) {
      CrispFlags f = classify_crisp(s, view);
      slot->push_back({std::move(s), f});
    };
    if (n < 63 && (std::uint64_t{1} << n) <= config_.cap) {
      for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << n); ++mask) add(CrispSubset::from_mask(c, n, mask));
    } else {
      auto gen = rng(100 + index(c));
      std::bernoulli_distribution coin(0.5);
      for (std::size_t k = 0; k < config_.samples; ++k) {
        CrispSubset s(c, n);
        for (Index e = 0; e < n; ++e)
          if (coin(gen)) s.insert(e);
        add(std::move(s));
      }
    }
    return *slot;
  }

  /// Crisp subsets passing `keep`, nonempty ones only.
  std::vector<CrispSubset> crisp_where(Carrier c, const std::function<bool(const CrispFlags&)>& keep) {
    std::vector<CrispSubset> out;
    for (const CrispEntry& e : crisp(c))
      if (!e.flags.empty && keep(e.flags)) out.push_back(e.set);
    return out;
  }

  bool fuzzy_exhaustive(Carrier c) const {
    const std::size_t n = ctx_.size(c);
    std::uint64_t total = 1;
    for (std::size_t i = 0; i < n; ++i) {
      if (total > config_.cap / pairs_.size()) return false;
      total *= pairs_.size();
    }
    return total <= config_.cap;
  }

  /// Streams every fuzzy subset over the lattice (or a seeded sample). `f`
  /// returns false to stop early.
  void for_each_fuzzy(Carrier c, const std::function<bool(const IFSubset&)>& f) const {
    const std::size_t n = ctx_.size(c);
    std::vector<std::size_t> digits(n, 0);
    auto build = [&] {
      std::vector<Grade> mu(n), nu(n);
      for (std::size_t i = 0; i < n; ++i) {
        mu[i] = pairs_[digits[i]][0];
        nu[i] = pairs_[digits[i]][1];
      }
      return IFSubset(c, std::move(mu), std::move(nu));
    };
    if (fuzzy_exhaustive(c)) {
      while (true) {
        if (!f(build())) return;
        std::size_t i = n;
        while (i > 0 && ++digits[i - 1] == pairs_.size()) digits[--i] = 0;
        if (i == 0) return;
      }
    }
    auto gen = rng(200 + index(c));
    std::uniform_int_distribution<std::size_t> pick(0, pairs_.size() - 1);
    for (std::size_t k = 0; k < config_.samples; ++k) {
      for (auto& d : digits) d = pick(gen);
      if (!f(build())) return;
    }
  }

  /// Cached fuzzy subsets that are left or right ideals, filtered by `keep`.
  std::vector<const FuzzyEntry*> fuzzy(Carrier c, const std::function<bool(const FuzzyFlags&)>& keep) {
    auto& slot = fuzzy_[index(c)];
    if (!slot) {
      slot.emplace();
      const ProductView& view = ctx_.view(c);
      for_each_fuzzy(c, [&](const IFSubset& a) {
        FuzzyFlags f = classify_fuzzy(a, view);
        if (f.ifli || f.ifri) slot->push_back({a, f});
        return true;
      });
    }
    std::vector<const FuzzyEntry*> out;
    for (const FuzzyEntry& e : *slot)
      if (keep(e.flags)) out.push_back(&e);
    return out;
  }

  /// At most `n` fuzzy subsets: all of them if they fit, else a seeded sample.
  const std::vector<IFSubset>& fuzzy_sample(Carrier c, std::size_t n) {
    auto& slot = sample_[index(c)];
    if (slot) return *slot;
    slot.emplace();
    bool fits = fuzzy_exhaustive(c);
    if (fits) {
      std::uint64_t total = 1;
      for (std::size_t i = 0; i < ctx_.size(c); ++i) total *= pairs_.size();
      fits = total <= n;
    }
    if (fits) {
      for_each_fuzzy(c, [&](const IFSubset& a) {
        slot->push_back(a);
        return true;
      });
      return *slot;
    }
    auto gen = rng(300 + index(c));
    std::uniform_int_distribution<std::size_t> pick(0, pairs_.size() - 1);
    const std::size_t size = ctx_.size(c);
    for (std::size_t k = 0; k < n; ++k) {
      std::vector<Grade> mu(size), nu(size);
      for (std::size_t i = 0; i < size; ++i) {
        std::size_t d = pick(gen);
        mu[i] = pairs_[d][0];
        nu[i] = pairs_[d][1];
      }
      slot->push_back(IFSubset(c, std::move(mu), std::move(nu)));
    }
    return *slot;
  }

 private:
  static std::size_t index(Carrier c) { return static_cast<std::size_t>(c); }

  const GammaContext& ctx_;
  const WitnessConfig& config_;
  std::uint64_t seed_;
  std::vector<std::array<Grade, 2>> pairs_;
  std::array<std::optional<std::vector<CrispEntry>>, 3> crisp_;
  std::array<std::optional<std::vector<FuzzyEntry>>, 3> fuzzy_;
  std::array<std::optional<std::vector<IFSubset>>, 3> sample_;
};

/// Calls `f(indices)` for multisets of 1..max_size pool indices: all of them
/// when there are at most `cap`, otherwise `cap` seeded random ones.
inline void for_each_family(std::size_t pool, std::size_t max_size, std::size_t cap, std::mt19937_64& gen,
                            const std::function<bool(const std::vector<std::size_t>&)>& f) {
  if (pool == 0) return;
  // Number of multisets of size k from n items is C(n+k-1, k).
  double total = 0, term = 1;
  for (std::size_t k = 1; k <= max_size; ++k) {
    term = term * static_cast<double>(pool + k - 1) / static_cast<double>(k);
    total += term;
  }
  if (total <= static_cast<double>(cap)) {
    std::vector<std::size_t> idx;
    for (std::size_t k = 1; k <= max_size; ++k) {
      idx.assign(k, 0);
      while (true) {
        if (!f(idx)) return;
        std::size_t i = k;
        while (i > 0 && idx[i - 1] == pool - 1) --i;
        if (i == 0) break;
        ++idx[i - 1];
        for (std::size_t j = i; j < k; ++j) idx[j] = idx[i - 1];
      }
    }
    return;
  }
  std::uniform_int_distribution<std::size_t> size_pick(1, max_size);
  std::uniform_int_distribution<std::size_t> pick(0, pool - 1);
  for (std::size_t n = 0; n < cap; ++n) {
    std::vector<std::size_t> idx(size_pick(gen));
    for (auto& i : idx) i = pick(gen);
    std::sort(idx.begin(), idx.end());
    if (!f(idx)) return;
  }
}

/// Calls `f(i, j)` for pairs i != j with `le(i, j)`: all of them when
/// pool^2 <= cap, otherwise for up to `cap / 32` seeded choices of i the
/// first j found among 32 seeded candidates.
inline void for_each_inclusion_pair(std::size_t pool, std::size_t cap, std::mt19937_64& gen,
                                    const std::function<bool(std::size_t, std::size_t)>& le,
                                    const std::function<bool(std::size_t, std::size_t)>& f) {
  if (pool < 2) return;
  if (pool <= cap / pool) {
    for (std::size_t i = 0; i < pool; ++i)
      for (std::size_t j = 0; j < pool; ++j)
        if (i != j && le(i, j) && !f(i, j)) return;
    return;
  }
  std::uniform_int_distribution<std::size_t> pick(0, pool - 1);
  const std::size_t rounds = std::max<std::size_t>(1, cap / 32);
  for (std::size_t r = 0; r < rounds; ++r) {
    std::size_t i = pick(gen);
    for (std::size_t tries = 0; tries < 32; ++tries) {
      std::size_t j = pick(gen);
      if (i != j && le(i, j)) {
        if (!f(i, j)) return;
        break;
      }
    }
  }
}

}  // namespace gsg::verify
