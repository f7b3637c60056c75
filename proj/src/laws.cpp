// czx - exact arithmetic for the extended bicyclic semigroup and its extensions

#include <algorithm>
#include <functional>
#include <initializer_list>

#include "czx/error.hpp"
#include "czx/nbhd.hpp"
#include "czx/text.hpp"

namespace czx {

  namespace {
    using Pred = std::function<bool(ExtElement const&)>;

    // One displayed inclusion or identity, fed product by product. For
    // equalities every right-hand member inside the truncation must also
    // be produced by the left-hand side.
    class Inclusion {
     public:
      Inclusion(std::string name, Pred rhs, std::string rhs_text,
                bool equality)
          : _rhs(std::move(rhs)), _rhs_text(std::move(rhs_text)) {
        _check.name     = std::move(name);
        _check.equality = equality;
      }

      void add(std::initializer_list<ExtElement> factors,
               ExtElement const&                 value) {
        ++_check.checked;
        if (_check.equality) {
          _seen.insert(value);
        }
        if (!_rhs(value) && !_check.counterexample) {
          _check.status         = Status::fail;
          _check.counterexample = Counterexample{
              std::vector<ExtElement>(factors), value, "member of " + _rhs_text};
        }
      }

      SubCheck finish(std::vector<ExtElement> const& rhs_members) {
        if (_check.equality) {
          for (auto const& x : rhs_members) {
            if (_seen.count(x) == 0 && !_check.counterexample) {
              _check.status         = Status::fail;
              _check.counterexample = Counterexample{
                  {}, x, "left-hand side to produce this member of "
                             + _rhs_text};
            }
          }
        }
        return std::move(_check);
      }

     private:
      Pred                 _rhs;
      std::string          _rhs_text;
      SubCheck             _check;
      std::set<ExtElement> _seen;
    };

    // Folds per-element instances of one identity into a single part.
    void merge(SubCheck& into, SubCheck const& part) {
      into.checked += part.checked;
      if (part.status == Status::fail && into.status != Status::fail) {
        into.status         = Status::fail;
        into.counterexample = part.counterexample;
      }
    }

    [[noreturn]] void param_error(LawId id, std::string const& what) {
      throw ParameterError(to_string(id) + ": " + what);
    }

    std::int64_t iabs(std::int64_t v) {
      return checked::abs(v);
    }

    class LawChecker {
     public:
      LawChecker(InclusionLaw const& law, ModelSpec const& m,
                 std::int64_t tail)
          : _law(law), _m(m), _tail(tail) {
        _cert.law = law;
      }

      Certificate run() {
        switch (_law.id) {
          case LawId::L1:
            l1();
            break;
          case LawId::L2:
            l2();
            break;
          case LawId::L3:
            l3();
            break;
          case LawId::L4:
            l4();
            break;
          case LawId::L5:
            l5();
            break;
          case LawId::L6:
            l6();
            break;
          case LawId::L7:
            l7();
            break;
        }
        for (auto const& p : _cert.parts) {
          _cert.products_checked += p.checked;
          if (p.status == Status::fail) {
            _cert.status = Status::fail;
          }
        }
        return std::move(_cert);
      }

     private:
      InclusionLaw const& _law;
      ModelSpec const&    _m;
      std::int64_t        _tail;
      Certificate         _cert;

      std::vector<std::int64_t> const& params() const {
        return _law.params;
      }

      void arity(std::size_t required, bool element_allowed) const {
        auto const n = params().size();
        if (n == required || (element_allowed && n == required + 2)) {
          return;
        }
        param_error(_law.id,
                    "expected " + std::to_string(required)
                        + (element_allowed ? " or " + std::to_string(required + 2)
                                           : std::string())
                        + " parameters, got " + std::to_string(n));
      }

      void need_model(bool ok, char const* models) const {
        if (!ok) {
          param_error(_law.id, std::string("needs model ") + models
                                   + ", got " + to_string(_m));
        }
      }

      void need_positive(std::int64_t v, char const* what) const {
        if (v < 1) {
          param_error(_law.id, std::string(what) + " must be positive, got "
                                   + std::to_string(v));
        }
      }

      std::optional<Cz> element(std::size_t at) const {
        if (params().size() == at + 2) {
          return Cz{params()[at], params()[at + 1]};
        }
        return std::nullopt;
      }

      // The explicit element, or every probe element meeting the side
      // condition. An explicit element that fails it is a parameter error.
      std::vector<Cz> probes(std::optional<Cz> explicit_element,
                             std::function<bool(Cz)> const& side) const {
        if (explicit_element) {
          if (!side(*explicit_element)) {
            param_error(_law.id, "element " + to_string(*explicit_element)
                                     + " violates the side condition");
          }
          return {*explicit_element};
        }
        std::vector<Cz> out;
        for (auto const& x : Window(-3, 3).elements()) {
          if (side(x)) {
            out.push_back(x);
          }
        }
        return out;
      }

      BasicNbhd nb(ExtElement c, std::int64_t idx) const {
        return BasicNbhd(_m, c, idx);
      }

      std::vector<ExtElement> members(BasicNbhd const& u) const {
        return nbhd_members(u, _tail);
      }

      Inclusion into(std::string name, BasicNbhd const& rhs,
                     bool equality) const {
        return Inclusion(
            std::move(name),
            [rhs](ExtElement const& x) { return nbhd_contains(rhs, x); },
            to_string(rhs), equality);
      }

      // U·V against W.
      SubCheck product(std::string name, BasicNbhd const& u,
                       BasicNbhd const& v, BasicNbhd const& w,
                       bool equality) const {
        auto       inc = into(std::move(name), w, equality);
        auto const mu  = members(u);
        auto const mv  = members(v);
        for (auto const& x : mu) {
          for (auto const& y : mv) {
            inc.add({x, y}, ext_multiply(_m, x, y));
          }
        }
        return inc.finish(members(w));
      }

      // U^-1 = W.
      SubCheck inversion(std::string name, BasicNbhd const& u,
                         BasicNbhd const& w) const {
        auto inc = into(std::move(name), w, true);
        for (auto const& x : members(u)) {
          inc.add({x}, ext_inverse(_m, x));
        }
        return inc.finish(members(w));
      }

      // U·{x} (left) or {x}·U (right) against rhs.
      SubCheck translate(std::string name, BasicNbhd const& u, Cz x,
                         Side side, Pred rhs, std::string rhs_text,
                         std::vector<ExtElement> const* rhs_members) const {
        Inclusion inc(std::move(name), std::move(rhs), std::move(rhs_text),
                      rhs_members != nullptr);
        for (auto const& y : members(u)) {
          if (side == Side::left) {
            inc.add({y, x}, ext_multiply(_m, y, x));
          } else {
            inc.add({x, y}, ext_multiply(_m, x, y));
          }
        }
        return inc.finish(rhs_members ? *rhs_members
                                      : std::vector<ExtElement>{});
      }

      static Pred equals(ExtElement v) {
        return [v](ExtElement const& x) { return x == v; };
      }

      void push(SubCheck s) {
        _cert.parts.push_back(std::move(s));
      }

      ////////////////////////////////////////////////////////////////////
      // The laws
      ////////////////////////////////////////////////////////////////////

      void l1() {
        need_model(_m.has_adjoined_unit(), "s1 or s4");
        arity(1, true);
        auto const n = params()[0];
        need_positive(n, "n");
        auto const u = nb(AdjoinedUnit{}, n);
        push(product("U_n(e1)·U_n(e1) = U_n(e1)", u, u, u, true));
        push(inversion("U_n(e1)^-1 = U_n(e1)", u, u));

        SubCheck left{"U_i(e1)·{x} = {x}", Status::pass, 0, true, {}};
        SubCheck right{"{x}·U_i(e1) = {x}", Status::pass, 0, true, {}};
        for (auto const& x : probes(element(1), [](Cz) { return true; })) {
          auto const i = std::max(
              n, _m.sequence().first_at_most(std::min(x.a, x.b)));
          auto const                    v   = nb(AdjoinedUnit{}, i);
          std::vector<ExtElement> const rhs = {x};
          merge(left, translate(left.name, v, x, Side::left, equals(x),
                                to_string(x), &rhs));
          merge(right, translate(right.name, v, x, Side::right, equals(x),
                                 to_string(x), &rhs));
        }
        push(left);
        push(right);
      }

      void l2() {
        need_model(_m.has_unit_group(), "s2 or s5");
        arity(3, true);
        auto const i1 = params()[0];
        auto const i2 = params()[1];
        auto const j  = params()[2];
        need_positive(j, "j");
        auto const jr = checked::sub(j, checked::mul(i1, _m.s()));
        if (jr < 1) {
          param_error(_law.id, "the right factor's index j - i1*s = "
                                   + std::to_string(jr)
                                   + " is not a positive integer");
        }
        auto const a = nb(UnitGroup{i1}, j);
        push(product("U_j(ki1)·U_{j-i1 s}(ki2) ⊆ U_j(ki1+ki2)", a,
                     nb(UnitGroup{i2}, jr),
                     nb(UnitGroup{checked::add(i1, i2)}, j), false));
        push(inversion("U_j(ki1)^-1 = U_j(-ki1)", a,
                       nb(UnitGroup{checked::neg(i1)}, j)));

        auto const ki = checked::mul(_m.k(), i1);
        auto const nj = checked::mul(_m.divisor(), j);
        SubCheck   left{"U_j(ki1)·{(a,b)} = {(a-ki1,b)}", Status::pass, 0, true,
                      {}};
        SubCheck right{"{(a,b)}·U_j(ki1) = {(a,b+ki1)}", Status::pass, 0, true,
                       {}};
        auto const side = [&](Cz x) {
          return nj >= std::max(checked::neg(x.b), checked::sub(ki, x.a));
        };
        for (auto const& x : probes(element(3), side)) {
          ExtElement const l   = Cz{checked::sub(x.a, ki), x.b};
          ExtElement const r   = Cz{x.a, checked::add(x.b, ki)};
          std::vector<ExtElement> const lm = {l};
          std::vector<ExtElement> const rm = {r};
          merge(left, translate(left.name, a, x, Side::left, equals(l),
                                to_string(_m, l), &lm));
          merge(right, translate(right.name, a, x, Side::right, equals(r),
                                 to_string(_m, r), &rm));
        }
        push(left);
        push(right);
      }

      void l3() {
        need_model(_m.has_ideal(), "s3, s4 or s5");
        arity(3, true);
        auto const n  = params()[0];
        auto const k1 = params()[1];
        auto const k2 = params()[2];
        need_positive(n, "n");
        if (n < std::max(iabs(k1), iabs(k2))) {
          param_error(_law.id, "n = " + std::to_string(n)
                                   + " is below max(|k1|, |k2|)");
        }
        auto const n2 = checked::mul(2, n);
        push(product("U_2n(k1)·U_2n(k2) ⊆ U_n(k1+k2)", nb(IdealGroup{k1}, n2),
                     nb(IdealGroup{k2}, n2),
                     nb(IdealGroup{checked::add(k1, k2)}, n), false));

        std::vector<std::int64_t> centres = {k1};
        if (k2 != k1) {
          centres.push_back(k2);
        }
        SubCheck inv{"U_n(k)^-1 = U_n(-k)", Status::pass, 0, true, {}};
        for (auto k : centres) {
          merge(inv, inversion(inv.name, nb(IdealGroup{k}, n),
                               nb(IdealGroup{checked::neg(k)}, n)));
        }
        push(inv);

        SubCheck left{"(a,b)·U_2n(k) ⊆ U_n(k+b-a)", Status::pass, 0, false, {}};
        SubCheck right{"U_2n(k)·(a,b) ⊆ U_n(k+b-a)", Status::pass, 0, false,
                       {}};
        auto const side
            = [&](Cz x) { return n >= std::max(iabs(x.a), iabs(x.b)); };
        for (auto const& x : probes(element(3), side)) {
          for (auto k : centres) {
            auto const u = nb(IdealGroup{k}, n2);
            auto const w = nb(IdealGroup{checked::add(k, checked::sub(x.b, x.a))},
                              n);
            auto const in_w
                = [w](ExtElement const& y) { return nbhd_contains(w, y); };
            merge(left, translate(left.name, u, x, Side::right, in_w,
                                  to_string(w), nullptr));
            merge(right, translate(right.name, u, x, Side::left, in_w,
                                   to_string(w), nullptr));
          }
        }
        push(left);
        push(right);
      }

      void l4() {
        need_model(_m.kind() == ModelKind::s4, "s4");
        arity(3, false);
        auto const n1 = params()[0];
        auto const n0 = params()[1];
        auto const k0 = params()[2];
        need_positive(n1, "n1");
        need_positive(n0, "n0");
        auto const e = nb(AdjoinedUnit{}, n1);
        auto const z = nb(IdealGroup{k0}, n0);
        push(product("U_n1(e1)·U_n0(k0) ⊆ U_n0(k0)", e, z, z, false));
        push(product("U_n0(k0)·U_n1(e1) ⊆ U_n0(k0)", z, e, z, false));
      }

      void l5() {
        need_model(_m.kind() == ModelKind::s5, "s5");
        arity(3, false);
        auto const i = params()[0];
        auto const g = params()[1];
        auto const p = params()[2];
        need_positive(p, "p");
        auto const ki = checked::mul(_m.k(), i);
        if (p < std::max(iabs(ki), iabs(g))) {
          param_error(_law.id, "p = " + std::to_string(p)
                                   + " is below max(|ki|, |n|)");
        }
        auto const p2 = checked::mul(2, p);
        auto const u  = nb(UnitGroup{i}, p2);
        auto const z  = nb(IdealGroup{g}, p2);
        auto const w  = nb(IdealGroup{checked::add(ki, g)}, p);
        push(product("U_2p(ki)·U_2p(n) ⊆ U_p(ki+n)", u, z, w, false));
        push(product("U_2p(n)·U_2p(ki) ⊆ U_p(ki+n)", z, u, w, false));
      }

      void l6() {
        need_model(_m.has_ideal(), "s3, s4 or s5");
        arity(2, false);
        auto const i = params()[0];
        auto const k = params()[1];
        need_positive(i, "i");
        if (k < 0) {
          param_error(_law.id, "k must be non-negative, got "
                                   + std::to_string(k));
        }
        Cz const   x{i, checked::add(i, k)};
        auto const w = nb(IdealGroup{k}, i);
        auto const in_w
            = [w](ExtElement const& y) { return nbhd_contains(w, y); };
        auto const wm = members(w);
        push(translate("U_i(0)·{(i,i+k)} = U_i(k)", nb(IdealGroup{0}, i), x,
                       Side::left, in_w, to_string(w), &wm));
      }

      void l7() {
        need_model(_m.has_unit_group(), "s2 or s5");
        arity(2, false);
        auto const g = params()[0];
        auto const i = params()[1];
        need_positive(i, "i");
        auto const profile
            = unit_nbhd_index_profile(_m, nb(UnitGroup{g}, 1));
        if (!profile) {
          throw DomainError("L7: neighbourhoods of the generator have no "
                            "constant index");
        }
        auto const       kp = *profile;
        auto const       u  = nb(UnitGroup{0}, i);
        ExtElement const gx = UnitGroup{g};
        auto const       n  = _m.divisor();
        auto const       on_sequence
            = [n, i](std::int64_t v) { return v <= 0 && v % n == 0 && -(v / n) >= i; };
        auto const gtext = to_string(_m, gx);

        // f-3: g·U_i(1) = {g} u {(m + kp, m)}
        Pred const f3 = [=](ExtElement const& y) {
          if (y == gx) {
            return true;
          }
          auto const* c = std::get_if<Cz>(&y);
          return c && on_sequence(c->b) && c->a == checked::add(c->b, kp);
        };
        // f-4: U_i(1)·g = {g} u {(m, m - kp)}
        Pred const f4 = [=](ExtElement const& y) {
          if (y == gx) {
            return true;
          }
          auto const* c = std::get_if<Cz>(&y);
          return c && on_sequence(c->a) && c->b == checked::sub(c->a, kp);
        };
        std::vector<ExtElement> m3 = {gx};
        std::vector<ExtElement> m4 = {gx};
        for (std::int64_t q = i; q <= i + _tail; ++q) {
          auto const m = checked::neg(checked::mul(n, q));
          m3.emplace_back(Cz{checked::add(m, kp), m});
          m4.emplace_back(Cz{m, checked::sub(m, kp)});
        }

        Inclusion left("g·U_i(1) = {g} u {(m_q+k, m_q)}", f3,
                       "{" + gtext + "} u {(m_q+" + std::to_string(kp)
                           + ", m_q)}",
                       true);
        Inclusion right("U_i(1)·g = {g} u {(m_q, m_q-k)}", f4,
                        "{" + gtext + "} u {(m_q, m_q-" + std::to_string(kp)
                            + ")}",
                        true);
        for (auto const& y : members(u)) {
          left.add({gx, y}, ext_multiply(_m, gx, y));
          right.add({y, gx}, ext_multiply(_m, y, gx));
        }
        push(left.finish(m3));
        push(right.finish(m4));
      }
    };
  }  // namespace

  Certificate check_law(InclusionLaw const& law, ModelSpec const& m,
                        std::int64_t tail_bound) {
    if (tail_bound < 1) {
      throw ParameterError("tail bound must be positive, got "
                           + std::to_string(tail_bound));
    }
    return LawChecker(law, m, tail_bound).run();
  }

  std::string to_string(LawId id) {
    return "L" + std::to_string(static_cast<int>(id) + 1);
  }

  LawId law_from_string(std::string const& s) {
    if (s.size() == 2 && (s[0] == 'L' || s[0] == 'l') && s[1] >= '1'
        && s[1] <= '7') {
      return static_cast<LawId>(s[1] - '1');
    }
    throw ParseError("unknown law '" + s + "', expected L1 - L7");
  }

}  // namespace czx
