// czx - exact arithmetic for the extended bicyclic semigroup and its extensions

#include <doctest.h>

#include <cstdint>
#include <limits>
#include <random>
#include <set>

#include "czx/cz.hpp"
#include "oracles.hpp"

using namespace czx;

TEST_SUITE("cz") {
  TEST_CASE("product cases") {
    CHECK(multiply({1, 2}, {4, 7}) == Cz{3, 7});
    CHECK(multiply({2, 3}, {3, 5}) == Cz{2, 5});
    CHECK(multiply({5, 3}, {1, 2}) == Cz{5, 4});
    CHECK(multiply({0, 0}, {0, 0}) == Cz{0, 0});
  }

  TEST_CASE("product agrees with the rewriting oracle") {
    Window const w(-4, 4);
    for (auto const& x : w.elements()) {
      for (auto const& y : w.elements()) {
        REQUIRE(multiply(x, y) == oracle::multiply(x, y));
      }
    }
  }

  TEST_CASE("associativity and index homomorphism on [-4,4]") {
    auto const elts = Window(-4, 4).elements();
    for (auto const& x : elts) {
      for (auto const& y : elts) {
        auto const xy = multiply(x, y);
        REQUIRE(index(xy) == index(x) + index(y));
        for (auto const& z : elts) {
          REQUIRE(multiply(xy, z) == multiply(x, multiply(y, z)));
        }
      }
    }
    CHECK(index(multiply({1, 2}, {4, 7})) == -4);
    CHECK(index({7, 3}) == 4);
  }

  TEST_CASE("random large elements") {
    std::mt19937_64                             rng(20261016);
    std::uniform_int_distribution<std::int64_t> coord(-1'000'000'000'000,
                                                      1'000'000'000'000);
    auto const draw = [&] { return Cz{coord(rng), coord(rng)}; };
    for (int i = 0; i < 20000; ++i) {
      auto const x = draw(), y = draw(), z = draw();
      REQUIRE(multiply(multiply(x, y), z) == multiply(x, multiply(y, z)));
      REQUIRE(index(multiply(x, y)) == index(x) + index(y));
      REQUIRE(multiply(multiply(x, inverse(x)), x) == x);
      REQUIRE(inverse(multiply(x, y)) == multiply(inverse(y), inverse(x)));
    }
  }

  TEST_CASE("overflow is an error") {
    auto const big = std::numeric_limits<std::int64_t>::max();
    auto const low = std::numeric_limits<std::int64_t>::min();
    CHECK_THROWS_AS(multiply({big, 0}, {1, 0}), OverflowError);
    CHECK_THROWS_AS(index({big, -1}), OverflowError);
    CHECK_THROWS_AS(index({low, 1}), OverflowError);
    CHECK(multiply({big, big}, {big, big}) == Cz{big, big});
  }

  TEST_CASE("inverse") {
    CHECK(inverse({3, 7}) == Cz{7, 3});
    CHECK(inverse({5, 5}) == Cz{5, 5});
    CHECK(inverse(inverse({-2, 9})) == Cz{-2, 9});
    for (auto const& x : Window(-3, 3).elements()) {
      auto const xi = inverse(x);
      CHECK(multiply(multiply(x, xi), x) == x);
      CHECK(multiply(multiply(xi, x), xi) == xi);
    }
  }

  TEST_CASE("idempotents and their order") {
    CHECK(is_idempotent({4, 4}));
    CHECK_FALSE(is_idempotent({4, 5}));
    CHECK(is_idempotent({-3, -3}));
    for (auto const& x : Window(-3, 3).elements()) {
      CHECK(is_idempotent(x) == (multiply(x, x) == x));
    }
    CHECK(idem_leq({5, 5}, {2, 2}));
    CHECK_FALSE(idem_leq({2, 2}, {5, 5}));
    CHECK(idem_leq({0, 0}, {0, 0}));
    CHECK_THROWS_AS(idem_leq({0, 1}, {0, 0}), DomainError);
    CHECK(idem_meet({2, 2}, {5, 5}) == Cz{5, 5});
    CHECK(idem_meet({-1, -1}, {-1, -1}) == Cz{-1, -1});
    CHECK(idem_meet({-7, -7}, {3, 3}) == Cz{3, 3});
    CHECK_THROWS_AS(idem_meet({1, 2}, {3, 3}), DomainError);
    for (std::int64_t a = -4; a <= 4; ++a) {
      for (std::int64_t b = -4; b <= 4; ++b) {
        Cz const e{a, a}, f{b, b};
        CHECK(idem_meet(e, f) == multiply(e, f));
        CHECK(multiply(e, f) == multiply(f, e));
        CHECK(idem_leq(e, f) == (multiply(e, f) == e));
      }
    }
  }

  TEST_CASE("Green relations") {
    CHECK(green_related({1, 5}, {1, 9}, GreenRelation::R));
    CHECK(green_related({2, 7}, {4, 7}, GreenRelation::L));
    CHECK(green_related({0, 1}, {8, -3}, GreenRelation::D));
    CHECK(green_related({0, 1}, {8, -3}, GreenRelation::J));
    CHECK_FALSE(green_related({1, 5}, {1, 9}, GreenRelation::H));
    CHECK(green_related({1, 5}, {1, 5}, GreenRelation::H));
  }

  TEST_CASE("Green relations against brute-force reachability") {
    Window const w(-3, 3), search(-10, 10);
    auto const   elts = w.elements();
    auto const   n    = elts.size();
    auto const   r    = oracle::one_sided_reach(w, search, true);
    auto const   l    = oracle::one_sided_reach(w, search, false);
    auto const   j    = oracle::two_sided_reach(w, search);
    for (std::size_t x = 0; x < n; ++x) {
      for (std::size_t y = 0; y < n; ++y) {
        bool const rr = r[x * n + y] && r[y * n + x];
        bool const ll = l[x * n + y] && l[y * n + x];
        bool       dd = false;
        for (std::size_t z = 0; z < n; ++z) {
          dd = dd || (r[x * n + z] && r[z * n + x] && l[z * n + y] && l[y * n + z]);
        }
        REQUIRE(green_related(elts[x], elts[y], GreenRelation::R) == rr);
        REQUIRE(green_related(elts[x], elts[y], GreenRelation::L) == ll);
        REQUIRE(green_related(elts[x], elts[y], GreenRelation::H) == (rr && ll));
        REQUIRE(green_related(elts[x], elts[y], GreenRelation::D) == dd);
        REQUIRE(green_related(elts[x], elts[y], GreenRelation::J)
                == (j[x * n + y] && j[y * n + x]));
      }
    }
  }

  TEST_CASE("maximal subgroups are trivial") {
    auto const elts = Window(-3, 3).elements();
    for (auto const& e : elts) {
      if (!is_idempotent(e)) {
        continue;
      }
      for (auto const& x : elts) {
        bool const in_group = multiply(x, inverse(x)) == e
                              && multiply(inverse(x), x) == e
                              && green_related(x, e, GreenRelation::H);
        CHECK(in_group == (x == e));
      }
    }
  }

  TEST_CASE("connecting element") {
    CHECK(connecting_element({2, 2}, {5, 5}) == Cz{2, 5});
    CHECK(connecting_element({0, 0}, {0, 0}) == Cz{0, 0});
    CHECK(connecting_element({-3, -3}, {4, 4}) == Cz{-3, 4});
    CHECK_THROWS_AS(connecting_element({0, 1}, {4, 4}), DomainError);
    for (std::int64_t a = -3; a <= 3; ++a) {
      for (std::int64_t b = -3; b <= 3; ++b) {
        auto const x = connecting_element({a, a}, {b, b});
        CHECK(multiply(x, inverse(x)) == Cz{a, a});
        CHECK(multiply(inverse(x), x) == Cz{b, b});
      }
    }
  }

  TEST_CASE("principal ideals") {
    CHECK(in_principal_right_ideal({3, 0}, {1, 9}));
    CHECK_FALSE(in_principal_right_ideal({0, 0}, {1, 0}));
    CHECK(in_principal_right_ideal({1, 9}, {1, 9}));
    CHECK(in_principal_left_ideal({0, 9}, {4, 9}));
    CHECK_FALSE(in_principal_left_ideal({0, 8}, {4, 9}));
    Window const w(-3, 3), search(-9, 9);
    for (auto const& gen : w.elements()) {
      for (auto const& x : w.elements()) {
        bool right = x == gen, left = x == gen;
        for (auto const& u : search.elements()) {
          right = right || oracle::multiply(gen, u) == x;
          left  = left || oracle::multiply(u, gen) == x;
        }
        REQUIRE(in_principal_right_ideal(x, gen) == right);
        REQUIRE(in_principal_left_ideal(x, gen) == left);
      }
    }
  }

  TEST_CASE("bicyclic embedding") {
    CHECK(bicyclic_embed(0, {2, 3}) == BicyclicWord{2, 3});
    CHECK(bicyclic_embed(-2, {-2, -2}) == BicyclicWord{0, 0});
    CHECK(bicyclic_embed(1, {4, 2}) == BicyclicWord{3, 1});
    CHECK_THROWS_AS(bicyclic_embed(1, {0, 4}), DomainError);

    for (std::int64_t n : {-2, 0, 1}) {
      std::set<std::pair<std::uint64_t, std::uint64_t>> seen;
      Window const                                    w(n, n + 5);
      for (auto const& x : w.elements()) {
        auto const hx = bicyclic_embed(n, x);
        CHECK(seen.insert({hx.q_exp, hx.p_exp}).second);
        for (auto const& y : w.elements()) {
          auto const hy  = bicyclic_embed(n, y);
          auto const hxy = bicyclic_embed(n, multiply(x, y));
          CHECK(bicyclic_multiply(hx, hy) == hxy);
          auto const s = [](std::uint64_t v) {
            return static_cast<std::int64_t>(v);
          };
          auto const [i, j] = oracle::exponents(
              oracle::reduce(oracle::word(s(hx.q_exp), s(hx.p_exp))
                             + oracle::word(s(hy.q_exp), s(hy.p_exp))));
          CHECK(BicyclicWord{static_cast<std::uint64_t>(i),
                             static_cast<std::uint64_t>(j)}
                == hxy);
        }
      }
    }
  }

  TEST_CASE("solve_translation") {
    Window const w(-10, 10);
    auto const   u = solve_translation({1, 9}, {1, 5}, Side::right, w);
    REQUIRE(u);
    CHECK(multiply({1, 9}, *u) == Cz{1, 5});
    CHECK_FALSE(solve_translation({1, 0}, {0, 0}, Side::right, w));
    auto const id = solve_translation({0, 0}, {0, 0}, Side::right, w);
    REQUIRE(id);
    CHECK(multiply({0, 0}, *id) == Cz{0, 0});
    auto const v = solve_translation({2, 7}, {4, 7}, Side::left, w);
    REQUIRE(v);
    CHECK(multiply(*v, {2, 7}) == Cz{4, 7});
  }

  TEST_CASE("windows") {
    Window const w(-2, 2);
    CHECK(w.size() == 25);
    CHECK(w.elements().size() == 25);
    CHECK(w.elements().front() == Cz{-2, -2});
    CHECK(w.elements()[1] == Cz{-2, -1});
    for (std::size_t i = 0; i < w.size(); ++i) {
      CHECK(w.position(w.at(i)) == i);
    }
    CHECK(Window(3, 3).elements() == std::vector<Cz>{{3, 3}});
    CHECK_THROWS_AS(Window(1, 0), DomainError);
  }
}
