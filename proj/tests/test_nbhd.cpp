// czx - exact arithmetic for the extended bicyclic semigroup and its extensions

#include <doctest.h>

#include <random>
#include <set>

#include "czx/nbhd.hpp"
#include "oracles.hpp"

using namespace czx;

namespace {
  // The Cz part of a neighbourhood inside a window, straight from the
  // defining formulas.
  std::set<Cz> defining_set(ModelSpec const& m, ExtElement const& c,
                            std::int64_t idx, std::vector<std::int64_t> seq,
                            Window const& w) {
    std::set<Cz> out;
    if (std::holds_alternative<AdjoinedUnit>(c)) {
      for (std::size_t i = static_cast<std::size_t>(idx); i <= seq.size(); ++i) {
        if (w.contains(Cz{seq[i - 1], seq[i - 1]})) {
          out.insert({seq[i - 1], seq[i - 1]});
        }
      }
    } else if (auto const* u = std::get_if<UnitGroup>(&c)) {
      for (std::int64_t q = idx; q <= 200; ++q) {
        Cz const x{-m.divisor() * q, -m.divisor() * q + m.k() * u->multiplier};
        if (w.contains(x)) {
          out.insert(x);
        }
      }
    } else {
      auto const g = std::get<IdealGroup>(c).value;
      for (std::int64_t a = idx; a <= 200; ++a) {
        Cz const x = g >= 0 ? Cz{a, a + g} : Cz{a - g, a};
        if (w.contains(x)) {
          out.insert(x);
        }
      }
    }
    return out;
  }
}  // namespace

TEST_SUITE("nbhd") {
  TEST_CASE("membership examples") {
    auto const s3 = ModelSpec::s3();
    CHECK(nbhd_contains(BasicNbhd(s3, IdealGroup{0}, 3), Cz{4, 4}));
    CHECK(nbhd_contains(BasicNbhd(s3, IdealGroup{2}, 3), Cz{5, 7}));
    CHECK_FALSE(nbhd_contains(BasicNbhd(s3, IdealGroup{2}, 3), Cz{2, 4}));
    CHECK(nbhd_contains(BasicNbhd(s3, IdealGroup{-2}, 3), Cz{5, 3}));
    CHECK_FALSE(nbhd_contains(BasicNbhd(s3, IdealGroup{-2}, 3), Cz{4, 2}));
    CHECK_FALSE(nbhd_contains(BasicNbhd(ModelSpec::s1(), AdjoinedUnit{}, 2),
                              Cz{-1, -1}));
    CHECK(nbhd_contains(BasicNbhd(ModelSpec::s1(), AdjoinedUnit{}, 2), Cz{-2, -2}));
    auto const s2 = ModelSpec::s2(6, 2);
    CHECK(nbhd_contains(BasicNbhd(s2, UnitGroup{1}, 3), Cz{-6, 0}));
    CHECK_FALSE(nbhd_contains(BasicNbhd(s2, UnitGroup{1}, 3), Cz{-4, 2}));
    CHECK_FALSE(nbhd_contains(BasicNbhd(s2, UnitGroup{1}, 3), Cz{-7, -1}));
    CHECK_FALSE(nbhd_contains(BasicNbhd(s2, UnitGroup{1}, 3), UnitGroup{2}));
    for (auto const& nb :
         {BasicNbhd(s3, IdealGroup{4}, 1), BasicNbhd(s2, UnitGroup{-1}, 2),
          BasicNbhd(ModelSpec::s4(), AdjoinedUnit{}, 5)}) {
      CHECK(nbhd_contains(nb, nb.center));
    }
  }

  TEST_CASE("invalid neighbourhoods") {
    CHECK_THROWS_AS(BasicNbhd(ModelSpec::s3(), Cz{0, 0}, 1), DomainError);
    CHECK_THROWS_AS(BasicNbhd(ModelSpec::s3(), IdealGroup{0}, 0), DomainError);
    CHECK_THROWS_AS(BasicNbhd(ModelSpec::s3(), AdjoinedUnit{}, 1), DomainError);
    CHECK_THROWS_AS(
        nbhd_contains(BasicNbhd(ModelSpec::s3(), IdealGroup{0}, 1), UnitGroup{0}),
        DomainError);
  }

  TEST_CASE("closed form agrees with the defining sets") {
    Window const w(-15, 15);
    std::vector<std::int64_t> default_seq, custom_seq = {-2, -5};
    for (std::int64_t i = 1; i <= 40; ++i) {
      default_seq.push_back(-i);
    }
    while (custom_seq.size() < 40) {
      custom_seq.push_back(custom_seq.back() - 3);
    }
    struct Case {
      ModelSpec                 m;
      std::vector<ExtElement>   centres;
      std::vector<std::int64_t> seq;
    };
    std::vector<Case> cases = {
        {ModelSpec::s1(), {AdjoinedUnit{}}, default_seq},
        {ModelSpec::s4(IsolatedSequence({-2, -5}, 3)), {AdjoinedUnit{}}, custom_seq},
        {ModelSpec::s2(6, 2), {UnitGroup{-1}, UnitGroup{0}, UnitGroup{2}}, {}},
        {ModelSpec::s5(3, 3), {UnitGroup{1}, IdealGroup{-2}, IdealGroup{3}}, {}},
        {ModelSpec::s3(), {IdealGroup{0}, IdealGroup{-4}, IdealGroup{1}}, {}},
    };
    for (auto const& c : cases) {
      for (auto const& centre : c.centres) {
        for (std::int64_t idx : {1, 2, 4, 7}) {
          BasicNbhd const nb(c.m, centre, idx);
          auto const      expected = defining_set(c.m, centre, idx, c.seq, w);
          for (auto const& x : w.elements()) {
            REQUIRE(nbhd_contains(nb, x) == (expected.count(x) == 1));
          }
          auto const members = nbhd_members(nb, 10);
          CHECK(members.size() == 12);
          CHECK(members.front() == centre);
          for (auto const& x : members) {
            CHECK(nbhd_contains(nb, x));
          }
        }
      }
    }
  }

  TEST_CASE("index profiles of unit neighbourhoods") {
    auto const s1 = ModelSpec::s1();
    CHECK(unit_nbhd_index_profile(s1, BasicNbhd(s1, AdjoinedUnit{}, 3)) == 0);
    auto const s2 = ModelSpec::s2(2, 1);
    CHECK(unit_nbhd_index_profile(s2, BasicNbhd(s2, UnitGroup{1}, 5)) == -2);
    CHECK(unit_nbhd_index_profile(s2, BasicNbhd(s2, UnitGroup{0}, 5)) == 0);
    auto const s3 = ModelSpec::s3();
    CHECK_THROWS_AS(unit_nbhd_index_profile(s3, BasicNbhd(s3, IdealGroup{0}, 1)),
                    DomainError);
    // distinct centres have distinct profiles
    auto const     s5 = ModelSpec::s5(6, 2);
    std::set<std::int64_t> seen;
    for (std::int64_t i = -5; i <= 5; ++i) {
      auto const p = unit_nbhd_index_profile(s5, BasicNbhd(s5, UnitGroup{i}, 1));
      REQUIRE(p);
      CHECK(seen.insert(*p).second);
    }
  }

  TEST_CASE("units are not topologically periodic") {
    // Powers of a non-identity unit never come back into U_j(1).
    for (auto const& m : {ModelSpec::s2(2, 1), ModelSpec::s5(6, 3)}) {
      for (std::int64_t i : {-2, -1, 1, 3}) {
        ExtElement power = UnitGroup{i};
        for (int e = 1; e <= 50; ++e) {
          for (std::int64_t j : {1, 4}) {
            CHECK_FALSE(nbhd_contains(BasicNbhd(m, UnitGroup{0}, j), power));
          }
          power = ext_multiply(m, power, UnitGroup{i});
        }
      }
    }
  }

  TEST_CASE("DL-sets") {
    Window const w(-3, 3);
    auto const   zero = dl_set(0, 0, w);
    CHECK(zero == std::vector<Cz>{{-3, -3}, {-2, -2}, {-1, -1}, {0, 0}});
    CHECK(dl_set(2, 0, w) == dl_set_closed_form(2, 0, w));
    CHECK(dl_set(0, 0, Window(1, 3)).empty());
    for (auto const& x : Window(-4, 4).elements()) {
      REQUIRE(dl_set(x.a, x.b, Window(-8, 8)) == dl_set_closed_form(x.a, x.b, Window(-8, 8)));
    }
  }

  TEST_CASE("singleton identity") {
    CHECK(singleton_identity(1, 4, Window(-5, 5)) == Status::pass);
    CHECK(singleton_identity(0, 0, Window(-5, 5)) == Status::pass);
    CHECK(singleton_identity(-5, -5, Window(-5, 5)) == Status::inconclusive);
    CHECK(singleton_identity(6, 0, Window(-5, 5)) == Status::inconclusive);
  }

  TEST_CASE("discreteness witnesses") {
    auto const left = discreteness_witness(0, {{0, 0}, {-2, -1}});
    REQUIRE(left);
    CHECK(left->offender == Cz{-2, -1});
    CHECK(left->escape == Cz{0, 1});
    CHECK(left->side == Side::left);

    auto const right = discreteness_witness(0, {{0, 0}, {-1, -2}});
    REQUIRE(right);
    CHECK(right->offender == Cz{-1, -2});
    CHECK(right->escape == Cz{1, 0});
    CHECK(right->side == Side::right);

    CHECK_FALSE(discreteness_witness(0, {{0, 0}}));
    CHECK_FALSE(discreteness_witness(0, {{0, 0}, {-3, -3}, {2, 5}}));
    CHECK_THROWS_AS(discreteness_witness(0, {{1, 1}}), DomainError);

    std::mt19937_64                    rng(3);
    std::uniform_int_distribution<int> coord(-6, 6);
    for (int trial = 0; trial < 300; ++trial) {
      std::int64_t const a = coord(rng);
      std::set<Cz>       v = {{a, a}};
      for (int i = 0; i < 4; ++i) {
        v.insert({coord(rng), coord(rng)});
      }
      bool qualifying = false;
      for (auto const& x : v) {
        qualifying = qualifying || (x.a != x.b && std::max(x.a, x.b) <= a);
      }
      auto const wt = discreteness_witness(a, v);
      REQUIRE(bool(wt) == qualifying);
      if (wt) {
        auto const [x, y] = wt->offender;
        CHECK(v.count(wt->offender) == 1);
        if (wt->side == Side::left) {
          CHECK(wt->escape == oracle::multiply({a, a}, wt->offender));
          CHECK(wt->escape == Cz{a, a + (y - x)});
        } else {
          CHECK(wt->escape == oracle::multiply(wt->offender, {a, a}));
          CHECK(wt->escape == Cz{a + (x - y), a});
        }
      }
    }
  }

  TEST_CASE("upsets") {
    auto const s3 = upset(ModelSpec::s3(), 0, 0, Window(-4, 4), 3);
    CHECK(s3.conditions_agree);
    std::vector<ExtElement> expected;
    for (std::int64_t x = -4; x <= 0; ++x) {
      expected.emplace_back(Cz{x, x});
    }
    CHECK(s3.elements == expected);

    auto const s2 = upset(ModelSpec::s2(2, 1), 0, 2, Window(-4, 4), 3);
    CHECK(s2.conditions_agree);
    CHECK(std::count(s2.elements.begin(), s2.elements.end(),
                     ExtElement{UnitGroup{1}}) == 1);

    auto const cz = upset(ModelSpec::plain_cz(), 0, 0, Window(0, 3), 0);
    CHECK(cz.elements == std::vector<ExtElement>{Cz{0, 0}});

    for (auto const& m : {ModelSpec::s1(), ModelSpec::s4(), ModelSpec::s5(6, 2)}) {
      for (auto const& x : Window(-2, 2).elements()) {
        CHECK(upset(m, x.a, x.b, Window(-4, 4), 2).conditions_agree);
      }
    }
  }

  TEST_CASE("boundary sets") {
    Window const w(-4, 4);
    auto const   s2 = boundary_sets(ModelSpec::s2(2, 1), w, 3);
    CHECK(s2.left.size() == 7);
    CHECK(s2.left_equals_right);
    CHECK(s2.ideal.empty());

    auto const s3 = boundary_sets(ModelSpec::s3(), w, 3);
    CHECK(s3.left.empty());
    CHECK(s3.right.empty());
    CHECK(s3.ideal.size() == 7);
    CHECK(s3.ideal_absorbs);

    auto const s4 = boundary_sets(ModelSpec::s4(), w, 3);
    CHECK(s4.left == std::vector<ExtElement>{AdjoinedUnit{}});
    CHECK(s4.ideal.size() == 7);

    auto const s5 = boundary_sets(ModelSpec::s5(2, 1), w, 3);
    CHECK(s5.left == s5.right);
    CHECK(s5.left.size() == 7);
    CHECK(s5.ideal.size() == 7);
    CHECK(s5.ideal_absorbs);
  }
}
