// czx - exact arithmetic for the extended bicyclic semigroup and its extensions

#ifndef CZX_CONGRUENCE_HPP_
#define CZX_CONGRUENCE_HPP_

#include <cstddef>
#include <cstdint>
#include <span>
#include <utility>
#include <vector>

#include "czx/cz.hpp"

namespace czx {

  //! Either the identity congruence or sigma_k, which relates (a,b) and
  //! (c,d) iff a - b = c - d (mod k). sigma_0 is the minimal group
  //! congruence, sigma_1 the universal one.
  struct CongruenceSpec {
    enum class Kind { identity, sigma };

    Kind          kind = Kind::identity;
    std::uint64_t k    = 0;

    static CongruenceSpec identity() noexcept {
      return {Kind::identity, 0};
    }
    static CongruenceSpec sigma(std::uint64_t k) noexcept {
      return {Kind::sigma, k};
    }

    friend bool operator==(CongruenceSpec const&, CongruenceSpec const&)
        = default;
  };

  using CzPair = std::pair<Cz, Cz>;

  bool related(CongruenceSpec const& spec, Cz x, Cz y);

  //! The natural map onto Z (k = 0) or Z/kZ with residues in [0, k).
  std::int64_t quotient_map(std::uint64_t k, Cz x);

  //! Smallest congruence containing the pairs.
  CongruenceSpec congruence_from_pairs(std::span<CzPair const> gens);

  //! gcd with gcd(0, 0) = 0 and gcd(0, m) = |m|.
  std::uint64_t gcd(std::int64_t x, std::int64_t y);

  //! Generator of the subgroup of (Z, +) generated by {n} and kZ.
  std::uint64_t cyclic_generator(std::int64_t n, std::int64_t k);

  //! Equivalence relation on the elements of a window, stored as canonical
  //! class labels: classes are numbered 0, 1, ... in order of first
  //! appearance in lexicographic order.
  class Partition {
   public:
    Partition(Window w, std::vector<std::uint32_t> labels);

    Window const& window() const noexcept {
      return _window;
    }
    std::vector<std::uint32_t> const& labels() const noexcept {
      return _labels;
    }
    std::size_t number_of_classes() const noexcept {
      return _classes;
    }
    //! Both elements must lie in the window.
    bool same_class(Cz x, Cz y) const;
    std::vector<std::vector<Cz>> classes() const;
    //! Restriction to a sub-window, relabelled canonically.
    Partition restrict(Window const& sub) const;

    friend bool operator==(Partition const& x, Partition const& y) {
      return x._window == y._window && x._labels == y._labels;
    }

   private:
    Window                     _window;
    std::vector<std::uint32_t> _labels;
    std::size_t                _classes;
  };

  //! Saturation with the window's product tables computed once, for
  //! callers that saturate many generator sets in the same window.
  class WindowSaturator {
   public:
    //! Throws DomainError if the window is wider than 64.
    explicit WindowSaturator(Window const& w);

    Window const& window() const noexcept {
      return _window;
    }
    //! As saturate_window(gens, window()).
    Partition saturate(std::span<CzPair const> gens) const;

   private:
    Window                    _window;
    std::vector<std::int32_t> _right;
    std::vector<std::int32_t> _left;
  };

  //! Least equivalence on the window containing gens and closed under
  //! left and right multiplication by window elements whenever both
  //! products stay in the window.
  Partition saturate_window(std::span<CzPair const> gens, Window const& w);

  //! The partition of the window induced by spec.
  Partition congruence_partition(CongruenceSpec const& spec, Window const& w);

}  // namespace czx

#endif  // CZX_CONGRUENCE_HPP_
