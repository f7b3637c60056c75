// czx - exact arithmetic for the extended bicyclic semigroup and its extensions

#ifndef CZX_MODEL_HPP_
#define CZX_MODEL_HPP_

#include <cstdint>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "czx/cz.hpp"

namespace czx {

  //! The identity e1 adjoined to the extended bicyclic semigroup (S1, S4).
  struct AdjoinedUnit {
    friend constexpr bool operator==(AdjoinedUnit, AdjoinedUnit) = default;
    friend constexpr auto operator<=>(AdjoinedUnit, AdjoinedUnit) = default;
  };

  //! The element k·multiplier of the group of units kZ (S2, S5). The
  //! multiplier is stored, not the value k·multiplier.
  struct UnitGroup {
    std::int64_t multiplier = 0;

    friend constexpr bool operator==(UnitGroup, UnitGroup) = default;
    friend constexpr auto operator<=>(UnitGroup, UnitGroup) = default;
  };

  //! The element n of the ideal group Z (S3, S4, S5).
  struct IdealGroup {
    std::int64_t value = 0;

    friend constexpr bool operator==(IdealGroup, IdealGroup) = default;
    friend constexpr auto operator<=>(IdealGroup, IdealGroup) = default;
  };

  using ExtElement = std::variant<Cz, AdjoinedUnit, UnitGroup, IdealGroup>;

  enum class ModelKind { plain_cz, s1, s2, s3, s4, s5 };

  //! The strictly decreasing sequence m_1 > m_2 > ... of negative integers
  //! whose idempotents (m_i, m_i) accumulate at e1. Given by an explicit
  //! prefix, continued with a constant step.
  class IsolatedSequence {
   public:
    //! m_i = -i.
    IsolatedSequence();
    IsolatedSequence(std::vector<std::int64_t> prefix, std::int64_t step);

    //! i >= 1.
    std::int64_t term(std::int64_t i) const;
    //! The position i with m_i = v, if any.
    std::optional<std::int64_t> position_of(std::int64_t v) const;
    //! Least i with m_i <= v.
    std::int64_t first_at_most(std::int64_t v) const;

    std::vector<std::int64_t> const& prefix() const noexcept {
      return _prefix;
    }
    std::int64_t step() const noexcept {
      return _step;
    }
    bool is_default() const noexcept;

    friend bool operator==(IsolatedSequence const&, IsolatedSequence const&)
        = default;

   private:
    std::vector<std::int64_t> _prefix;
    std::int64_t              _step;
  };

  //! A concrete semigroup: plain C_Z or one of the extensions S1 - S5.
  class ModelSpec {
   public:
    static ModelSpec plain_cz();
    static ModelSpec s1(IsolatedSequence seq = {});
    //! k = divisor * s for a positive integer s.
    static ModelSpec s2(std::int64_t k, std::int64_t divisor);
    static ModelSpec s3();
    static ModelSpec s4(IsolatedSequence seq = {});
    static ModelSpec s5(std::int64_t k, std::int64_t divisor);

    ModelKind kind() const noexcept {
      return _kind;
    }
    //! Generator of the unit group kZ (S2, S5); 0 otherwise.
    std::int64_t k() const noexcept {
      return _k;
    }
    //! The divisor n of k used by the unit neighbourhoods (S2, S5).
    std::int64_t divisor() const noexcept {
      return _divisor;
    }
    //! k / divisor.
    std::int64_t s() const noexcept {
      return _divisor == 0 ? 0 : _k / _divisor;
    }
    IsolatedSequence const& sequence() const noexcept {
      return _seq;
    }

    bool has_adjoined_unit() const noexcept {
      return _kind == ModelKind::s1 || _kind == ModelKind::s4;
    }
    bool has_unit_group() const noexcept {
      return _kind == ModelKind::s2 || _kind == ModelKind::s5;
    }
    bool has_ideal() const noexcept {
      return _kind == ModelKind::s3 || _kind == ModelKind::s4
             || _kind == ModelKind::s5;
    }

    bool valid(ExtElement const& x) const noexcept;
    //! Throws DomainError if x is not an element of this model.
    void require_valid(ExtElement const& x, char const* what) const;

    friend bool operator==(ModelSpec const&, ModelSpec const&) = default;

   private:
    ModelSpec(ModelKind kind, std::int64_t k, std::int64_t divisor,
              IsolatedSequence seq);

    ModelKind        _kind;
    std::int64_t     _k;
    std::int64_t     _divisor;
    IsolatedSequence _seq;
  };

  enum class ElementClass { cz_part, unit, unit_group_part, ideal_part };

  ExtElement ext_multiply(ModelSpec const& m, ExtElement const& x,
                          ExtElement const& y);

  ExtElement ext_inverse(ModelSpec const& m, ExtElement const& x);

  ElementClass classify(ModelSpec const& m, ExtElement const& x);

  bool ext_is_idempotent(ModelSpec const& m, ExtElement const& x);

  //! Natural order e <= f iff ef = fe = e; both arguments idempotent.
  bool ext_idem_leq(ModelSpec const& m, ExtElement const& e,
                    ExtElement const& f);

  //! x · IdealGroup(0); maps (a,b) to IdealGroup(b - a).
  ExtElement hom_to_ideal(ModelSpec const& m, ExtElement const& x);

  //! The Cz window in lexicographic order, then e1, then unit group
  //! multipliers and ideal values in [-group_bound, group_bound], as far as
  //! the model has them.
  std::vector<ExtElement> model_elements(ModelSpec const&   m,
                                         Window const&      w,
                                         std::int64_t       group_bound);

  struct AssociativityViolation {
    ExtElement x, y, z;
    ExtElement left_grouped;   // (xy)z
    ExtElement right_grouped;  // x(yz)
  };

  struct AssociativityReport {
    bool                                  pass = true;
    std::uint64_t                         triples_checked = 0;
    std::uint64_t                         violations      = 0;
    std::optional<AssociativityViolation> first_violation;
  };

  AssociativityReport associativity_report(ModelSpec const& m,
                                           Window const&    w,
                                           std::int64_t     group_bound);

}  // namespace czx

#endif  // CZX_MODEL_HPP_
