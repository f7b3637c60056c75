// czx - exact arithmetic for the extended bicyclic semigroup and its extensions

#include "czx/model.hpp"

#include <string>

namespace czx {

  ////////////////////////////////////////////////////////////////////////
  // IsolatedSequence
  ////////////////////////////////////////////////////////////////////////

  IsolatedSequence::IsolatedSequence() : _prefix{-1}, _step(1) {}

  IsolatedSequence::IsolatedSequence(std::vector<std::int64_t> prefix,
                                     std::int64_t              step)
      : _prefix(std::move(prefix)), _step(step) {
    if (_prefix.empty()) {
      throw DomainError("isolated sequence needs at least one term");
    }
    if (_step < 1) {
      throw DomainError("isolated sequence step must be positive");
    }
    for (std::size_t i = 0; i < _prefix.size(); ++i) {
      if (_prefix[i] >= 0) {
        throw DomainError("isolated sequence terms must be negative");
      }
      if (i > 0 && _prefix[i] >= _prefix[i - 1]) {
        throw DomainError("isolated sequence must be strictly decreasing");
      }
    }
  }

  bool IsolatedSequence::is_default() const noexcept {
    return *this == IsolatedSequence();
  }

  std::int64_t IsolatedSequence::term(std::int64_t i) const {
    if (i < 1) {
      throw DomainError("isolated sequence is indexed from 1");
    }
    auto const len = static_cast<std::int64_t>(_prefix.size());
    if (i <= len) {
      return _prefix[i - 1];
    }
    return checked::sub(_prefix.back(), checked::mul(_step, i - len));
  }

  std::optional<std::int64_t>
  IsolatedSequence::position_of(std::int64_t v) const {
    auto const len = static_cast<std::int64_t>(_prefix.size());
    for (std::int64_t i = 0; i < len; ++i) {
      if (_prefix[i] == v) {
        return i + 1;
      }
    }
    if (v >= _prefix.back()) {
      return std::nullopt;
    }
    auto const gap = checked::sub(_prefix.back(), v);
    if (gap % _step != 0) {
      return std::nullopt;
    }
    return checked::add(len, gap / _step);
  }

  std::int64_t IsolatedSequence::first_at_most(std::int64_t v) const {
    auto const len = static_cast<std::int64_t>(_prefix.size());
    for (std::int64_t i = 0; i < len; ++i) {
      if (_prefix[i] <= v) {
        return i + 1;
      }
    }
    auto const gap = checked::sub(_prefix.back(), v);
    return checked::add(len, (gap + _step - 1) / _step);
  }

  ////////////////////////////////////////////////////////////////////////
  // ModelSpec
  ////////////////////////////////////////////////////////////////////////

  ModelSpec::ModelSpec(ModelKind kind, std::int64_t k, std::int64_t divisor,
                       IsolatedSequence seq)
      : _kind(kind), _k(k), _divisor(divisor), _seq(std::move(seq)) {
    if (has_unit_group()) {
      if (k < 1 || divisor < 1) {
        throw DomainError("unit group parameters must be positive, got k = "
                          + std::to_string(k)
                          + ", n = " + std::to_string(divisor));
      }
      if (k % divisor != 0) {
        throw DomainError(std::to_string(divisor) + " does not divide "
                          + std::to_string(k));
      }
    }
  }

  ModelSpec ModelSpec::plain_cz() {
    return ModelSpec(ModelKind::plain_cz, 0, 0, {});
  }
  ModelSpec ModelSpec::s1(IsolatedSequence seq) {
    return ModelSpec(ModelKind::s1, 0, 0, std::move(seq));
  }
  ModelSpec ModelSpec::s2(std::int64_t k, std::int64_t divisor) {
    return ModelSpec(ModelKind::s2, k, divisor, {});
  }
  ModelSpec ModelSpec::s3() {
    return ModelSpec(ModelKind::s3, 0, 0, {});
  }
  ModelSpec ModelSpec::s4(IsolatedSequence seq) {
    return ModelSpec(ModelKind::s4, 0, 0, std::move(seq));
  }
  ModelSpec ModelSpec::s5(std::int64_t k, std::int64_t divisor) {
    return ModelSpec(ModelKind::s5, k, divisor, {});
  }

  bool ModelSpec::valid(ExtElement const& x) const noexcept {
    switch (x.index()) {
      case 0:
        return true;
      case 1:
        return has_adjoined_unit();
      case 2:
        return has_unit_group();
      default:
        return has_ideal();
    }
  }

  void ModelSpec::require_valid(ExtElement const& x, char const* what) const {
    if (!valid(x)) {
      static char const* const sorts[]
          = {"Cz", "AdjoinedUnit", "UnitGroup", "IdealGroup"};
      throw DomainError(std::string(what) + ": " + sorts[x.index()]
                        + " is not an element of this model");
    }
  }

  ////////////////////////////////////////////////////////////////////////
  // Operations
  ////////////////////////////////////////////////////////////////////////

  namespace {
    std::int64_t unit_value(ModelSpec const& m, UnitGroup u) {
      return checked::mul(m.k(), u.multiplier);
    }
  }  // namespace

  ExtElement ext_multiply(ModelSpec const& m, ExtElement const& x,
                          ExtElement const& y) {
    m.require_valid(x, "ext_multiply");
    m.require_valid(y, "ext_multiply");

    if (std::holds_alternative<AdjoinedUnit>(x)) {
      return y;
    }
    if (std::holds_alternative<AdjoinedUnit>(y)) {
      return x;
    }

    if (auto const* cx = std::get_if<Cz>(&x)) {
      if (auto const* cy = std::get_if<Cz>(&y)) {
        return multiply(*cx, *cy);
      }
      if (auto const* uy = std::get_if<UnitGroup>(&y)) {
        // (a,b)·ki = (a, b + ki)
        return Cz{cx->a, checked::add(cx->b, unit_value(m, *uy))};
      }
      // (a,b)·n = n + b - a
      auto const& iy = std::get<IdealGroup>(y);
      return IdealGroup{checked::add(iy.value, checked::sub(cx->b, cx->a))};
    }

    if (auto const* ux = std::get_if<UnitGroup>(&x)) {
      if (auto const* cy = std::get_if<Cz>(&y)) {
        // ki·(a,b) = (-ki + a, b)
        return Cz{checked::sub(cy->a, unit_value(m, *ux)), cy->b};
      }
      if (auto const* uy = std::get_if<UnitGroup>(&y)) {
        return UnitGroup{checked::add(ux->multiplier, uy->multiplier)};
      }
      auto const& iy = std::get<IdealGroup>(y);
      return IdealGroup{checked::add(unit_value(m, *ux), iy.value)};
    }

    auto const& ix = std::get<IdealGroup>(x);
    if (auto const* cy = std::get_if<Cz>(&y)) {
      return IdealGroup{checked::add(ix.value, checked::sub(cy->b, cy->a))};
    }
    if (auto const* uy = std::get_if<UnitGroup>(&y)) {
      return IdealGroup{checked::add(ix.value, unit_value(m, *uy))};
    }
    return IdealGroup{checked::add(ix.value, std::get<IdealGroup>(y).value)};
  }

  ExtElement ext_inverse(ModelSpec const& m, ExtElement const& x) {
    m.require_valid(x, "ext_inverse");
    switch (x.index()) {
      case 0:
        return inverse(std::get<Cz>(x));
      case 1:
        return x;
      case 2:
        return UnitGroup{checked::neg(std::get<UnitGroup>(x).multiplier)};
      default:
        return IdealGroup{checked::neg(std::get<IdealGroup>(x).value)};
    }
  }

  ElementClass classify(ModelSpec const& m, ExtElement const& x) {
    m.require_valid(x, "classify");
    switch (x.index()) {
      case 0:
        return ElementClass::cz_part;
      case 1:
        return ElementClass::unit;
      case 2:
        return ElementClass::unit_group_part;
      default:
        return ElementClass::ideal_part;
    }
  }

  bool ext_is_idempotent(ModelSpec const& m, ExtElement const& x) {
    return ext_multiply(m, x, x) == x;
  }

  bool ext_idem_leq(ModelSpec const& m, ExtElement const& e,
                    ExtElement const& f) {
    if (!ext_is_idempotent(m, e) || !ext_is_idempotent(m, f)) {
      throw DomainError("ext_idem_leq: arguments must be idempotents");
    }
    return ext_multiply(m, e, f) == e && ext_multiply(m, f, e) == e;
  }

  ExtElement hom_to_ideal(ModelSpec const& m, ExtElement const& x) {
    if (!m.has_ideal()) {
      throw DomainError("hom_to_ideal: the model has no ideal part");
    }
    return ext_multiply(m, x, IdealGroup{0});
  }

  std::vector<ExtElement> model_elements(ModelSpec const& m, Window const& w,
                                         std::int64_t group_bound) {
    if (group_bound < 0) {
      throw DomainError("group bound must be non-negative");
    }
    std::vector<ExtElement> out;
    for (auto const& x : w.elements()) {
      out.emplace_back(x);
    }
    if (m.has_adjoined_unit()) {
      out.emplace_back(AdjoinedUnit{});
    }
    if (m.has_unit_group()) {
      for (std::int64_t i = -group_bound; i <= group_bound; ++i) {
        out.emplace_back(UnitGroup{i});
      }
    }
    if (m.has_ideal()) {
      for (std::int64_t n = -group_bound; n <= group_bound; ++n) {
        out.emplace_back(IdealGroup{n});
      }
    }
    return out;
  }

  AssociativityReport associativity_report(ModelSpec const& m,
                                           Window const&    w,
                                           std::int64_t     group_bound) {
    auto const          elts = model_elements(m, w, group_bound);
    AssociativityReport report;
    for (auto const& x : elts) {
      for (auto const& y : elts) {
        auto const xy = ext_multiply(m, x, y);
        for (auto const& z : elts) {
          auto const lhs = ext_multiply(m, xy, z);
          auto const rhs = ext_multiply(m, x, ext_multiply(m, y, z));
          ++report.triples_checked;
          if (lhs != rhs) {
            ++report.violations;
            if (!report.first_violation) {
              report.first_violation = {x, y, z, lhs, rhs};
            }
          }
        }
      }
    }
    report.pass = report.violations == 0;
    return report;
  }

}  // namespace czx
