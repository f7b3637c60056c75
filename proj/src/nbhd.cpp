// czx - exact arithmetic for the extended bicyclic semigroup and its extensions

#include "czx/nbhd.hpp"

#include <algorithm>
#include <map>

#include "czx/error.hpp"

namespace czx {

  ////////////////////////////////////////////////////////////////////////
  // BasicNbhd
  ////////////////////////////////////////////////////////////////////////

  BasicNbhd::BasicNbhd(ModelSpec m, ExtElement c, std::int64_t i)
      : model(std::move(m)), center(c), idx(i) {
    if (std::holds_alternative<Cz>(center)) {
      throw DomainError("points of C_Z are isolated; no neighbourhood base");
    }
    model.require_valid(center, "BasicNbhd");
    if (idx < 1) {
      throw DomainError("neighbourhood index must be positive, got "
                        + std::to_string(idx));
    }
  }

  Cz BasicNbhd::tail_member(std::int64_t t) const {
    if (t < idx) {
      throw DomainError("tail position below the neighbourhood index");
    }
    if (std::holds_alternative<AdjoinedUnit>(center)) {
      auto const v = model.sequence().term(t);
      return {v, v};
    }
    if (auto const* u = std::get_if<UnitGroup>(&center)) {
      auto const a = checked::neg(checked::mul(model.divisor(), t));
      return {a, checked::add(a, checked::mul(model.k(), u->multiplier))};
    }
    auto const g = std::get<IdealGroup>(center).value;
    if (g >= 0) {
      return {t, checked::add(t, g)};
    }
    return {checked::sub(t, g), t};
  }

  bool nbhd_contains(BasicNbhd const& nb, ExtElement const& x) {
    nb.model.require_valid(x, "nbhd_contains");
    if (x == nb.center) {
      return true;
    }
    auto const* c = std::get_if<Cz>(&x);
    if (c == nullptr) {
      return false;
    }
    if (std::holds_alternative<AdjoinedUnit>(nb.center)) {
      if (c->a != c->b) {
        return false;
      }
      auto const pos = nb.model.sequence().position_of(c->a);
      return pos && *pos >= nb.idx;
    }
    if (auto const* u = std::get_if<UnitGroup>(&nb.center)) {
      auto const n = nb.model.divisor();
      if (c->a > 0 || c->a % n != 0 || -(c->a / n) < nb.idx) {
        return false;
      }
      return checked::sub(c->b, c->a)
             == checked::mul(nb.model.k(), u->multiplier);
    }
    auto const g = std::get<IdealGroup>(nb.center).value;
    if (checked::sub(c->b, c->a) != g) {
      return false;
    }
    return (g >= 0 ? c->a : c->b) >= nb.idx;
  }

  std::vector<ExtElement> nbhd_members(BasicNbhd const& nb,
                                       std::int64_t     tail) {
    if (tail < 0) {
      throw DomainError("tail length must be non-negative");
    }
    std::vector<ExtElement> out;
    out.reserve(static_cast<std::size_t>(tail) + 2);
    out.push_back(nb.center);
    for (std::int64_t t = nb.idx; t <= checked::add(nb.idx, tail); ++t) {
      out.emplace_back(nb.tail_member(t));
    }
    return out;
  }

  std::optional<std::int64_t> unit_nbhd_index_profile(ModelSpec const& m,
                                                      BasicNbhd const& nb) {
    if (!(nb.model == m)) {
      throw DomainError("unit_nbhd_index_profile: neighbourhood of another "
                        "model");
    }
    if (!std::holds_alternative<AdjoinedUnit>(nb.center)
        && !std::holds_alternative<UnitGroup>(nb.center)) {
      throw DomainError("unit_nbhd_index_profile: centre must be e1 or a "
                        "unit");
    }
    constexpr std::int64_t sample = 16;
    auto const             first  = index(nb.tail_member(nb.idx));
    for (std::int64_t t = nb.idx + 1; t < nb.idx + sample; ++t) {
      if (index(nb.tail_member(t)) != first) {
        return std::nullopt;
      }
    }
    return first;
  }

  ////////////////////////////////////////////////////////////////////////
  // Discreteness machinery
  ////////////////////////////////////////////////////////////////////////

  std::vector<Cz> dl_set(std::int64_t a, std::int64_t b, Window const& w) {
    std::vector<Cz> out;
    Cz const        g{b, a};
    Cz const        e{a, a};
    for (auto const& x : w.elements()) {
      if (multiply(x, g) == e) {
        out.push_back(x);
      }
    }
    return out;
  }

  std::vector<Cz> dl_set_closed_form(std::int64_t a, std::int64_t b,
                                     Window const& w) {
    std::vector<Cz> out;
    auto const      d = checked::sub(a, b);
    for (std::int64_t x = w.lo(); x <= std::min(a, w.hi()); ++x) {
      auto const y = checked::sub(x, d);
      if (w.contains(y)) {
        out.push_back({x, y});
      }
    }
    return out;
  }

  Status singleton_identity(std::int64_t a, std::int64_t b, Window const& w) {
    if (!w.contains(Cz{a, b})
        || !w.contains(Cz{checked::sub(a, 1), checked::sub(b, 1)})) {
      return Status::inconclusive;
    }
    auto const big   = dl_set(a, b, w);
    auto const small = dl_set(a - 1, b - 1, w);
    std::vector<Cz> diff;
    std::set_difference(big.begin(), big.end(), small.begin(), small.end(),
                        std::back_inserter(diff));
    return diff == std::vector<Cz>{{a, b}} ? Status::pass : Status::fail;
  }

  std::optional<DiscretenessWitness>
  discreteness_witness(std::int64_t a, std::set<Cz> const& v) {
    Cz const e{a, a};
    if (v.count(e) == 0) {
      throw DomainError("discreteness_witness: candidate does not contain ("
                        + std::to_string(a) + "," + std::to_string(a) + ")");
    }
    for (auto const& x : v) {
      if (x.a < x.b && x.b <= a) {
        return DiscretenessWitness{x, multiply(e, x), Side::left};
      }
    }
    for (auto const& x : v) {
      if (x.b < x.a && x.a <= a) {
        return DiscretenessWitness{x, multiply(x, e), Side::right};
      }
    }
    return std::nullopt;
  }

  ////////////////////////////////////////////////////////////////////////
  // Closure structure
  ////////////////////////////////////////////////////////////////////////

  UpsetResult upset(ModelSpec const& m, std::int64_t a, std::int64_t b,
                    Window const& w, std::int64_t group_bound) {
    ExtElement const ab = Cz{a, b};
    ExtElement const aa = Cz{a, a};
    ExtElement const bb = Cz{b, b};
    UpsetResult      out;
    for (auto const& x : model_elements(m, w, group_bound)) {
      bool const first  = ext_multiply(m, x, bb) == ab;
      bool const second = ext_multiply(m, aa, x) == ab;
      bool const third  = ext_multiply(m, ext_multiply(m, aa, x), bb) == ab;
      if (first != second || first != third) {
        out.conditions_agree = false;
      }
      if (first) {
        out.elements.push_back(x);
      }
    }
    return out;
  }

  namespace {
    // Whether some Cz element y of the window gives x·y (left) or y·x
    // (right) in Cz.
    bool meets_cz(ModelSpec const& m, ExtElement const& x, Window const& w,
                  Side side) {
      if (std::holds_alternative<Cz>(x)) {
        return true;
      }
      for (auto const& y : w.elements()) {
        auto const p = side == Side::left ? ext_multiply(m, x, y)
                                          : ext_multiply(m, y, x);
        if (std::holds_alternative<Cz>(p)) {
          return true;
        }
      }
      return false;
    }
  }  // namespace

  BoundarySets boundary_sets(ModelSpec const& m, Window const& w,
                             std::int64_t group_bound) {
    BoundarySets out;
    auto const   elts = model_elements(m, w, group_bound);
    for (auto const& x : elts) {
      if (std::holds_alternative<Cz>(x)) {
        continue;
      }
      bool const l = meets_cz(m, x, w, Side::left);
      bool const r = meets_cz(m, x, w, Side::right);
      if (l) {
        out.left.push_back(x);
      }
      if (r) {
        out.right.push_back(x);
      }
      if (!l && !r) {
        out.ideal.push_back(x);
      }
    }
    out.left_equals_right = out.left == out.right;

    // Products may leave the group bound, so membership in the ideal is
    // recomputed from its definition rather than looked up.
    std::map<ExtElement, bool> in_ideal;
    auto is_ideal = [&](ExtElement const& p) {
      auto it = in_ideal.find(p);
      if (it == in_ideal.end()) {
        bool const v = !std::holds_alternative<Cz>(p)
                       && !meets_cz(m, p, w, Side::left)
                       && !meets_cz(m, p, w, Side::right);
        it = in_ideal.emplace(p, v).first;
      }
      return it->second;
    };
    for (auto const& i : out.ideal) {
      for (auto const& x : elts) {
        if (!is_ideal(ext_multiply(m, x, i)) || !is_ideal(ext_multiply(m, i, x))) {
          out.ideal_absorbs = false;
        }
      }
    }
    return out;
  }

}  // namespace czx
