// czx - exact arithmetic for the extended bicyclic semigroup and its extensions

#include "czx/cz.hpp"

#include <algorithm>
#include <string>

namespace czx {

  Window::Window(std::int64_t lo, std::int64_t hi) : _lo(lo), _hi(hi) {
    if (lo > hi) {
      throw DomainError("window requires lo <= hi, got [" + std::to_string(lo)
                        + ", " + std::to_string(hi) + "]");
    }
    // width() must be representable
    checked::add(checked::sub(hi, lo), 1);
  }

  std::vector<Cz> Window::elements() const {
    std::vector<Cz> out;
    out.reserve(size());
    for (std::int64_t a = _lo; a <= _hi; ++a) {
      for (std::int64_t b = _lo; b <= _hi; ++b) {
        out.push_back({a, b});
      }
    }
    return out;
  }

  Cz multiply(Cz x, Cz y) {
    if (x.b < y.a) {
      return {checked::add(checked::sub(x.a, x.b), y.a), y.b};
    } else if (x.b == y.a) {
      return {x.a, y.b};
    }
    return {x.a, checked::sub(checked::add(y.b, x.b), y.a)};
  }

  namespace {
    void require_idempotent(Cz e, char const* what) {
      if (!is_idempotent(e)) {
        throw DomainError(std::string(what) + ": argument ("
                          + std::to_string(e.a) + "," + std::to_string(e.b)
                          + ") is not an idempotent");
      }
    }
  }  // namespace

  bool idem_leq(Cz e, Cz f) {
    require_idempotent(e, "idem_leq");
    require_idempotent(f, "idem_leq");
    return e.a >= f.a;
  }

  Cz idem_meet(Cz e, Cz f) {
    require_idempotent(e, "idem_meet");
    require_idempotent(f, "idem_meet");
    auto m = std::max(e.a, f.a);
    return {m, m};
  }

  std::int64_t index(Cz x) {
    return checked::sub(x.a, x.b);
  }

  bool green_related(Cz x, Cz y, GreenRelation rel) noexcept {
    switch (rel) {
      case GreenRelation::R:
        return x.a == y.a;
      case GreenRelation::L:
        return x.b == y.b;
      case GreenRelation::H:
        return x == y;
      case GreenRelation::D:
      case GreenRelation::J:
        return true;
    }
    return false;
  }

  Cz connecting_element(Cz e, Cz f) {
    require_idempotent(e, "connecting_element");
    require_idempotent(f, "connecting_element");
    return {e.a, f.a};
  }

  BicyclicWord bicyclic_multiply(BicyclicWord x, BicyclicWord y) {
    // q^i p^j q^k p^l: cancel min(j, k) occurrences of pq
    if (x.p_exp >= y.q_exp) {
      return {x.q_exp, x.p_exp - y.q_exp + y.p_exp};
    }
    return {x.q_exp + (y.q_exp - x.p_exp), y.p_exp};
  }

  BicyclicWord bicyclic_embed(std::int64_t n, Cz x) {
    if (x.a < n || x.b < n) {
      throw DomainError("bicyclic_embed: (" + std::to_string(x.a) + ","
                        + std::to_string(x.b) + ") lies outside the corner "
                        + "with both coordinates >= " + std::to_string(n));
    }
    return {static_cast<std::uint64_t>(checked::sub(x.a, n)),
            static_cast<std::uint64_t>(checked::sub(x.b, n))};
  }

  std::optional<Cz> solve_translation(Cz gen, Cz target, Side side,
                                      Window const& w) {
    for (std::int64_t a = w.lo(); a <= w.hi(); ++a) {
      for (std::int64_t b = w.lo(); b <= w.hi(); ++b) {
        Cz const u{a, b};
        Cz const p = side == Side::right ? multiply(gen, u) : multiply(u, gen);
        if (p == target) {
          return u;
        }
      }
    }
    return std::nullopt;
  }

}  // namespace czx
