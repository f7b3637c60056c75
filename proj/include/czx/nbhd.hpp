// czx - exact arithmetic for the extended bicyclic semigroup and its extensions

#ifndef CZX_NBHD_HPP_
#define CZX_NBHD_HPP_

#include <cstdint>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "czx/model.hpp"

namespace czx {

  //! One basic open set at a non-isolated point of S1 - S5:
  //!
  //!  * centre e1:           {e1} u {(m_i, m_i) : i >= idx}
  //!  * centre UnitGroup(i): {ki} u {(-nq, -nq + ki) : q >= idx}
  //!  * centre IdealGroup(g), g >= 0: {g} u {(a, a + g) : a >= idx}
  //!  * centre IdealGroup(g), g <= 0: {g} u {(a - g, a) : a >= idx}
  //!
  //! where n is the model's divisor and m_i its isolated sequence.
  struct BasicNbhd {
    ModelSpec    model;
    ExtElement   center;
    std::int64_t idx;

    //! Validates the centre sort against the model and idx >= 1.
    BasicNbhd(ModelSpec model, ExtElement center, std::int64_t idx);

    //! The Cz member at tail position t >= idx.
    Cz tail_member(std::int64_t t) const;
  };

  //! Exact closed-form membership.
  bool nbhd_contains(BasicNbhd const& nb, ExtElement const& x);

  //! The centre followed by the tail members for t in [idx, idx + tail].
  std::vector<ExtElement> nbhd_members(BasicNbhd const& nb,
                                       std::int64_t     tail);

  //! Common index a - b of the Cz members of a neighbourhood of e1 or of a
  //! unit, read off the first tail members; empty if they disagree.
  std::optional<std::int64_t> unit_nbhd_index_profile(ModelSpec const& m,
                                                      BasicNbhd const& nb);

  ////////////////////////////////////////////////////////////////////////
  // Inclusion laws
  ////////////////////////////////////////////////////////////////////////

  enum class LawId { L1, L2, L3, L4, L5, L6, L7 };

  //! A law with its integer parameter tuple. Layouts (optional trailing
  //! element (a, b) restricts the element-dependent parts to that element;
  //! when absent they run over every element of [-3, 3]^2 meeting the side
  //! condition):
  //!
  //!  L1 (S1, S4)      n [, a, b]
  //!  L2 (S2, S5)      i1, i2, j [, a, b]
  //!  L3 (S3, S4, S5)  n, k1, k2 [, a, b]
  //!  L4 (S4)          n1, n0, k0
  //!  L5 (S5)          i, g, p
  //!  L6 (S3, S4, S5)  i, k
  //!  L7 (S2, S5)      g, i
  struct InclusionLaw {
    LawId                     id;
    std::vector<std::int64_t> params;
  };

  enum class Status { pass, fail, inconclusive };

  struct Counterexample {
    std::vector<ExtElement> factors;  // empty for missing-member failures
    ExtElement              value;
    std::string             expected;
  };

  //! Outcome of one displayed identity or inclusion within a law.
  struct SubCheck {
    std::string                   name;
    Status                        status = Status::pass;
    std::uint64_t                 checked = 0;
    bool                          equality = false;
    std::optional<Counterexample> counterexample;
  };

  struct Certificate {
    InclusionLaw          law;
    Status                status = Status::pass;
    std::uint64_t         products_checked = 0;
    std::vector<SubCheck> parts;
  };

  //! Checks a law with every neighbourhood tail truncated to
  //! [idx, idx + tail_bound]. Throws ParameterError when the parameters
  //! violate the law's side conditions or do not fit the model.
  Certificate check_law(InclusionLaw const& law, ModelSpec const& m,
                        std::int64_t tail_bound);

  std::string to_string(LawId id);
  LawId       law_from_string(std::string const& s);

  ////////////////////////////////////////////////////////////////////////
  // Discreteness machinery
  ////////////////////////////////////////////////////////////////////////

  //! {(x,y) in w^2 : (x,y)·(b,a) = (a,a)}, by scanning the window.
  std::vector<Cz> dl_set(std::int64_t a, std::int64_t b, Window const& w);

  //! {(x,y) in w^2 : x - y = a - b, x <= a}.
  std::vector<Cz> dl_set_closed_form(std::int64_t a, std::int64_t b,
                                     Window const& w);

  //! Whether dl_set(a, b) \ dl_set(a - 1, b - 1) = {(a,b)}; inconclusive
  //! when (a,b) or (a-1, b-1) is not inside the window.
  Status singleton_identity(std::int64_t a, std::int64_t b, Window const& w);

  struct DiscretenessWitness {
    Cz   offender;
    Cz   escape;
    Side side;
  };

  //! For a candidate neighbourhood v of (a,a), an element (x,y) of v with
  //! x < y <= a (escape (a,a)·(x,y), left) or y < x <= a (escape
  //! (x,y)·(a,a), right).
  std::optional<DiscretenessWitness>
  discreteness_witness(std::int64_t a, std::set<Cz> const& v);

  ////////////////////////////////////////////////////////////////////////
  // Closure structure
  ////////////////////////////////////////////////////////////////////////

  struct UpsetResult {
    std::vector<ExtElement> elements;
    //! The sets {x : (a,a)·x = (a,b)} and {x : (a,a)·x·(b,b) = (a,b)}
    //! coincide with elements.
    bool conditions_agree = true;
  };

  //! {x : x·(b,b) = (a,b)} among the model elements within the bounds.
  UpsetResult upset(ModelSpec const& m, std::int64_t a, std::int64_t b,
                    Window const& w, std::int64_t group_bound);

  struct BoundarySets {
    std::vector<ExtElement> left;   // x with x·y in Cz for some Cz y
    std::vector<ExtElement> right;  // x with y·x in Cz for some Cz y
    std::vector<ExtElement> ideal;  // the remaining non-Cz elements
    bool                    left_equals_right = true;
    bool                    ideal_absorbs     = true;
  };

  BoundarySets boundary_sets(ModelSpec const& m, Window const& w,
                             std::int64_t group_bound);

}  // namespace czx

#endif  // CZX_NBHD_HPP_
