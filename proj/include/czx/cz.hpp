// czx - exact arithmetic for the extended bicyclic semigroup and its extensions

#ifndef CZX_CZ_HPP_
#define CZX_CZ_HPP_

#include <compare>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <vector>

#include "czx/error.hpp"

namespace czx {

  //! An element (a, b) of the extended bicyclic semigroup. Every pair of
  //! integers is an element.
  struct Cz {
    std::int64_t a = 0;
    std::int64_t b = 0;

    friend constexpr bool operator==(Cz const&, Cz const&) = default;
    friend constexpr auto operator<=>(Cz const&, Cz const&) = default;
  };

  //! Inclusive coordinate box [lo, hi]^2 used to truncate exhaustive checks.
  class Window {
   public:
    Window(std::int64_t lo, std::int64_t hi);

    std::int64_t lo() const noexcept {
      return _lo;
    }
    std::int64_t hi() const noexcept {
      return _hi;
    }
    //! Number of integers in [lo, hi].
    std::size_t width() const noexcept {
      return static_cast<std::size_t>(_hi - _lo) + 1;
    }
    //! Number of elements of the window, width()^2.
    std::size_t size() const noexcept {
      return width() * width();
    }
    bool contains(std::int64_t v) const noexcept {
      return _lo <= v && v <= _hi;
    }
    bool contains(Cz x) const noexcept {
      return contains(x.a) && contains(x.b);
    }
    //! Position of x in lexicographic enumeration order; x must be inside.
    std::size_t position(Cz x) const noexcept {
      return static_cast<std::size_t>(x.a - _lo) * width()
             + static_cast<std::size_t>(x.b - _lo);
    }
    Cz at(std::size_t pos) const noexcept {
      return {_lo + static_cast<std::int64_t>(pos / width()),
              _lo + static_cast<std::int64_t>(pos % width())};
    }
    //! All elements in lexicographic order on (a, b).
    std::vector<Cz> elements() const;

    friend bool operator==(Window const&, Window const&) = default;

   private:
    std::int64_t _lo;
    std::int64_t _hi;
  };

  enum class GreenRelation { R, L, H, D, J };

  enum class Side { left, right };

  //! The product (a,b)·(c,d) given by the three-case rule on b versus c.
  Cz multiply(Cz x, Cz y);

  inline Cz inverse(Cz x) noexcept {
    return {x.b, x.a};
  }

  inline bool is_idempotent(Cz x) noexcept {
    return x.a == x.b;
  }

  //! Natural order on idempotents: (a,a) <= (b,b) iff a >= b.
  bool idem_leq(Cz e, Cz f);

  //! Meet of two idempotents, (max, max).
  Cz idem_meet(Cz e, Cz f);

  //! The homomorphism onto (Z, +), (a,b) -> a - b.
  std::int64_t index(Cz x);

  bool green_related(Cz x, Cz y, GreenRelation rel) noexcept;

  //! For idempotents e = (a,a), f = (b,b) returns x = (a,b) with
  //! x x^-1 = e and x^-1 x = f.
  Cz connecting_element(Cz e, Cz f);

  //! x in gen·S^1, i.e. x.a >= gen.a.
  inline bool in_principal_right_ideal(Cz x, Cz gen) noexcept {
    return x.a >= gen.a;
  }

  //! x in S^1·gen, i.e. x.b >= gen.b.
  inline bool in_principal_left_ideal(Cz x, Cz gen) noexcept {
    return x.b >= gen.b;
  }

  //! Canonical form q^q_exp p^p_exp of an element of the bicyclic monoid
  //! (relation pq = 1).
  struct BicyclicWord {
    std::uint64_t q_exp = 0;
    std::uint64_t p_exp = 0;

    friend bool operator==(BicyclicWord const&, BicyclicWord const&)
        = default;
  };

  BicyclicWord bicyclic_multiply(BicyclicWord x, BicyclicWord y);

  //! The isomorphism from the corner {(a,b) : a, b >= n} onto the bicyclic
  //! monoid, (a,b) -> q^(a-n) p^(b-n).
  BicyclicWord bicyclic_embed(std::int64_t n, Cz x);

  //! Finds some u in the window with gen·u = target (right) or
  //! u·gen = target (left), scanning in lexicographic order.
  std::optional<Cz> solve_translation(Cz gen, Cz target, Side side,
                                      Window const& w);

}  // namespace czx

#endif  // CZX_CZ_HPP_
