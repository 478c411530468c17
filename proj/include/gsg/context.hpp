#pragma once

#include <cstddef>
#include <utility>

#include "gsg/core.hpp"
#include "gsg/error.hpp"
#include "gsg/ideal.hpp"
#include "gsg/operator.hpp"
#include "gsg/subset.hpp"

namespace gsg {

/// A validated Γ-semigroup bundled with both operator semigroups, its
/// unities, and the product views of all three carriers. Immutable.
class GammaContext {
 public:
  explicit GammaContext(GammaSemigroup s)
      : s_(std::move(s)),
        left_(checked_build(s_, Side::left)),
        right_(build_operator(s_, Side::right)),
        unities_(find_unities(s_, left_, right_)),
        commutative_(is_commutative(s_)),
        view_s_(ProductView::of(s_)),
        view_l_(ProductView::of(left_)),
        view_r_(ProductView::of(right_)) {}

  const GammaSemigroup& semigroup() const noexcept { return s_; }
  const OperatorSemigroup& left() const noexcept { return left_; }
  const OperatorSemigroup& right() const noexcept { return right_; }
  const OperatorSemigroup& op(Side side) const noexcept { return side == Side::left ? left_ : right_; }
  const Unities& unities() const noexcept { return unities_; }
  bool commutative() const noexcept { return commutative_; }

  std::size_t size(Carrier c) const {
    switch (c) {
      case Carrier::S: return s_.s_size();
      case Carrier::L: return left_.size();
      case Carrier::R: return right_.size();
    }
    return 0;
  }

  const ProductView& view(Carrier c) const {
    switch (c) {
      case Carrier::S: return view_s_;
      case Carrier::L: return view_l_;
      case Carrier::R: return view_r_;
    }
    return view_s_;
  }

  void require_on(const CrispSubset& p, Carrier c) const {
    if (p.carrier() != c || p.carrier_size() != size(c))
      throw input_error(std::string("subset must live on ") + to_string(c) + " (size " +
                        std::to_string(size(c)) + ")");
  }
  void require_on(const IFSubset& a, Carrier c) const {
    if (a.carrier() != c || a.carrier_size() != size(c))
      throw input_error(std::string("subset must live on ") + to_string(c) + " (size " +
                        std::to_string(size(c)) + ")");
  }

  CrispFlags classify(const CrispSubset& p) const {
    require_on(p, p.carrier());
    return classify_crisp(p, view(p.carrier()));
  }
  FuzzyFlags classify(const IFSubset& a) const {
    require_on(a, a.carrier());
    return classify_fuzzy(a, view(a.carrier()));
  }

 private:
  static OperatorSemigroup checked_build(const GammaSemigroup& s, Side side) {
    auto report = validate(s);
    if (!report.ok())
      throw input_error("not a Gamma-semigroup: " + report.violations.front().describe());
    return build_operator(s, side);
  }

  GammaSemigroup s_;
  OperatorSemigroup left_;
  OperatorSemigroup right_;
  Unities unities_;
  bool commutative_;
  ProductView view_s_;
  ProductView view_l_;
  ProductView view_r_;
};

}  // namespace gsg
