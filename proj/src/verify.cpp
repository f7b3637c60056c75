// czx - exact arithmetic for the extended bicyclic semigroup and its extensions

#include "czx/verify.hpp"

#include <algorithm>
#include <functional>
#include <random>
#include <set>

#include <json.hpp>

#include "czx/congruence.hpp"
#include "czx/error.hpp"
#include "czx/text.hpp"

namespace czx {

  std::vector<std::string> const& suite_names() {
    static std::vector<std::string> const names
        = {"assoc", "inverse",      "green",   "congruence",
           "laws",  "discreteness", "boundary"};
    return names;
  }

  void validate(SuiteConfig const& cfg) {
    if (cfg.group_bound < 0) {
      throw ParameterError("group bound must be non-negative");
    }
    if (cfg.tail_bound < 1) {
      throw ParameterError("tail bound must be positive");
    }
    for (auto const& s : cfg.suites) {
      auto const& all = suite_names();
      if (std::find(all.begin(), all.end(), s) == all.end()) {
        throw ParameterError("unknown suite '" + s + "'");
      }
      if ((s == "assoc" || s == "green") && cfg.window.lo() == cfg.window.hi()) {
        throw ParameterError("suite " + s + " needs a non-degenerate window");
      }
    }
  }

  namespace {
    constexpr std::size_t max_counterexamples = 5;

    // Records cases and failures for one suite.
    class Tally {
     public:
      explicit Tally(std::string name) {
        _r.name = std::move(name);
      }

      void pass() {
        ++_r.cases;
      }

      void fail(std::string check, std::vector<std::string> inputs,
                std::string left, std::string right) {
        ++_r.cases;
        ++_r.failures;
        _r.status = Status::fail;
        if (_r.counterexamples.size() < max_counterexamples) {
          _r.counterexamples.push_back(
              {std::move(check), std::move(inputs), std::move(left),
               std::move(right)});
        }
      }

      void expect(bool ok, std::string const& check,
                  std::function<std::vector<std::string>()> const& inputs,
                  std::string const& left = "", std::string const& right = "") {
        if (ok) {
          pass();
        } else {
          fail(check, inputs(), left, right);
        }
      }

      void inconclusive() {
        if (_r.status == Status::pass) {
          _r.status = Status::inconclusive;
        }
      }

      void add_cases(std::uint64_t n) {
        _r.cases += n;
      }

      SuiteResult result() {
        return std::move(_r);
      }

     private:
      SuiteResult _r;
    };

    ////////////////////////////////////////////////////////////////////
    // assoc, inverse
    ////////////////////////////////////////////////////////////////////

    SuiteResult assoc_suite(SuiteConfig const& cfg) {
      Tally      t("assoc");
      auto const& m = cfg.model;
      auto const rep = associativity_report(m, cfg.window, cfg.group_bound);
      t.add_cases(rep.triples_checked - rep.violations);
      if (rep.first_violation) {
        auto const& v = *rep.first_violation;
        t.fail("(x·y)·z = x·(y·z)",
               {to_string(m, v.x), to_string(m, v.y), to_string(m, v.z)},
               to_string(m, v.left_grouped), to_string(m, v.right_grouped));
        t.add_cases(rep.violations - 1);
      }
      return t.result();
    }

    SuiteResult inverse_suite(SuiteConfig const& cfg) {
      Tally       t("inverse");
      auto const& m    = cfg.model;
      auto const  elts = model_elements(m, cfg.window, cfg.group_bound);
      auto const  s    = [&](ExtElement const& x) { return to_string(m, x); };
      auto const  mul  = [&](ExtElement const& x, ExtElement const& y) {
        return ext_multiply(m, x, y);
      };
      std::vector<ExtElement> idempotents;
      for (auto const& x : elts) {
        auto const xi  = ext_inverse(m, x);
        auto const xxx = mul(mul(x, xi), x);
        t.expect(xxx == x, "x·x^-1·x = x", [&] { return std::vector{s(x)}; },
                 s(xxx), s(x));
        auto const iii = mul(mul(xi, x), xi);
        t.expect(iii == xi, "x^-1·x·x^-1 = x^-1",
                 [&] { return std::vector{s(xi)}; }, s(iii), s(xi));
        if (ext_is_idempotent(m, x)) {
          idempotents.push_back(x);
        }
      }
      for (auto const& x : elts) {
        for (auto const& y : elts) {
          auto const l = ext_inverse(m, mul(x, y));
          auto const r = mul(ext_inverse(m, y), ext_inverse(m, x));
          t.expect(l == r, "(x·y)^-1 = y^-1·x^-1",
                   [&] { return std::vector{s(x), s(y)}; }, s(l), s(r));
        }
      }
      for (auto const& e : idempotents) {
        for (auto const& f : idempotents) {
          auto const ef = mul(e, f);
          auto const fe = mul(f, e);
          t.expect(ef == fe, "e·f = f·e for idempotents",
                   [&] { return std::vector{s(e), s(f)}; }, s(ef), s(fe));
        }
      }
      return t.result();
    }

    ////////////////////////////////////////////////////////////////////
    // green
    ////////////////////////////////////////////////////////////////////

    SuiteResult green_suite(SuiteConfig const& cfg) {
      Tally        t("green");
      auto const&  w = cfg.window;
      Window const search(checked::sub(w.lo(), 10), checked::add(w.hi(), 10));
      auto const   elts = w.elements();
      auto const   n    = elts.size();

      // x S^1 contains y, and S^1 x contains y.
      auto const right_div = [&](Cz x, Cz y) {
        return x == y || solve_translation(x, y, Side::right, search);
      };
      auto const left_div = [&](Cz x, Cz y) {
        return x == y || solve_translation(x, y, Side::left, search);
      };
      std::vector<char> r(n * n), l(n * n);
      for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) {
          r[i * n + j] = right_div(elts[i], elts[j]) && right_div(elts[j], elts[i]);
          l[i * n + j] = left_div(elts[i], elts[j]) && left_div(elts[j], elts[i]);
        }
      }

      // S^1 x S^1 within the window, for each x.
      auto const two_sided = [&](Cz x) {
        std::set<Cz> lefts = {x};
        for (auto const& u : search.elements()) {
          lefts.insert(multiply(u, x));
        }
        std::vector<char> reach(n);
        for (auto const& p : lefts) {
          if (w.contains(p)) {
            reach[w.position(p)] = 1;
          }
          for (auto const& v : search.elements()) {
            auto const q = multiply(p, v);
            if (w.contains(q)) {
              reach[w.position(q)] = 1;
            }
          }
        }
        return reach;
      };
      std::vector<std::vector<char>> ideal(n);
      for (std::size_t i = 0; i < n; ++i) {
        ideal[i] = two_sided(elts[i]);
      }

      static char const* const rel_names[] = {"R", "L", "H", "D", "J"};
      for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) {
          bool d = false;
          for (std::size_t z = 0; z < n && !d; ++z) {
            d = r[i * n + z] && l[z * n + j];
          }
          bool const oracle[] = {
              bool(r[i * n + j]), bool(l[i * n + j]),
              r[i * n + j] && l[i * n + j], d,
              ideal[i][j] && ideal[j][i]};
          for (int k = 0; k < 5; ++k) {
            bool const c = green_related(elts[i], elts[j],
                                         static_cast<GreenRelation>(k));
            t.expect(c == oracle[k],
                     std::string(rel_names[k]) + " characterisation",
                     [&] {
                       return std::vector{to_string(elts[i]), to_string(elts[j])};
                     },
                     c ? "true" : "false", oracle[k] ? "true" : "false");
          }
        }
      }
      return t.result();
    }

    ////////////////////////////////////////////////////////////////////
    // congruence
    ////////////////////////////////////////////////////////////////////

    SuiteResult congruence_suite(SuiteConfig const& cfg) {
      Tally       t("congruence");
      auto const& w    = cfg.window;
      auto const  elts = w.elements();
      auto const  s    = [](Cz x) { return to_string(x); };

      for (std::uint64_t k : {0, 1, 2, 3, 5, 12}) {
        auto const spec = CongruenceSpec::sigma(k);
        auto const kn   = "k=" + std::to_string(k);
        for (auto const& x : elts) {
          for (auto const& y : elts) {
            auto const xy  = multiply(x, y);
            auto const lhs = quotient_map(k, xy);
            auto const sum = quotient_map(k, x) + quotient_map(k, y);
            auto const rhs = k == 0 ? sum : sum % static_cast<std::int64_t>(k);
            t.expect(lhs == rhs, "quotient map is a homomorphism, " + kn,
                     [&] { return std::vector{s(x), s(y)}; },
                     std::to_string(lhs), std::to_string(rhs));
            if (!related(spec, x, y)) {
              continue;
            }
            for (auto const& u : elts) {
              bool const ok = related(spec, multiply(x, u), multiply(y, u))
                              && related(spec, multiply(u, x), multiply(u, y));
              t.expect(ok, "sigma_" + std::to_string(k) + " is compatible",
                       [&] { return std::vector{s(x), s(y), s(u)}; });
            }
          }
        }
      }

      // Single generating pairs from the core of the window.
      Window const core(w.lo() / 4, w.hi() / 4);
      if (w.width() > 64) {
        t.inconclusive();
        return t.result();
      }
      auto const core_elts = core.elements();
      for (auto const& x : core_elts) {
        for (auto const& y : core_elts) {
          CzPair const gens[] = {{x, y}};
          auto const   spec   = congruence_from_pairs(gens);
          auto const   sat    = saturate_window(gens, w);
          bool         sound  = true;
          for (auto const& cls : sat.classes()) {
            for (auto const& z : cls) {
              sound = sound && related(spec, cls.front(), z);
            }
          }
          t.expect(sound, "saturation relates only " + to_string(spec) + " pairs",
                   [&] { return std::vector{s(x), s(y)}; });
          if (sat.restrict(core) != congruence_partition(spec, core)) {
            // The window is too small to generate the whole congruence.
            t.inconclusive();
          }
        }
      }
      return t.result();
    }

    ////////////////////////////////////////////////////////////////////
    // laws
    ////////////////////////////////////////////////////////////////////

    std::vector<InclusionLaw> law_grid(ModelSpec const& m) {
      std::vector<InclusionLaw> out;
      if (m.has_adjoined_unit()) {
        for (std::int64_t n : {1, 2, 5}) {
          out.push_back({LawId::L1, {n}});
        }
      }
      if (m.has_unit_group()) {
        for (std::int64_t i1 = -2; i1 <= 2; ++i1) {
          for (std::int64_t i2 = -2; i2 <= 2; ++i2) {
            for (std::int64_t j : {5, 8}) {
              if (j - i1 * m.s() >= 1) {
                out.push_back({LawId::L2, {i1, i2, j}});
              }
            }
          }
        }
        for (std::int64_t g : {1, -1}) {
          for (std::int64_t i : {1, 3}) {
            out.push_back({LawId::L7, {g, i}});
          }
        }
      }
      if (m.has_ideal()) {
        for (std::int64_t k1 = -3; k1 <= 3; ++k1) {
          for (std::int64_t k2 = -3; k2 <= 3; ++k2) {
            auto const base = std::max({std::abs(k1), std::abs(k2),
                                        std::int64_t{1}});
            for (std::int64_t f : {1, 2}) {
              out.push_back({LawId::L3, {base * f, k1, k2}});
            }
          }
        }
        for (std::int64_t i : {1, 2, 4}) {
          for (std::int64_t k = 0; k <= 3; ++k) {
            out.push_back({LawId::L6, {i, k}});
          }
        }
      }
      if (m.kind() == ModelKind::s4) {
        for (std::int64_t n1 : {1, 3}) {
          for (std::int64_t n0 : {1, 3}) {
            for (std::int64_t k0 = -2; k0 <= 2; ++k0) {
              out.push_back({LawId::L4, {n1, n0, k0}});
            }
          }
        }
      }
      if (m.kind() == ModelKind::s5) {
        for (std::int64_t i = -2; i <= 2; ++i) {
          for (std::int64_t g = -3; g <= 3; ++g) {
            auto const base = std::max({std::abs(m.k() * i), std::abs(g),
                                        std::int64_t{1}});
            for (std::int64_t f : {1, 2}) {
              out.push_back({LawId::L5, {i, g, base * f}});
            }
          }
        }
      }
      return out;
    }

    std::string describe(InclusionLaw const& law) {
      std::string out = to_string(law.id) + "(";
      for (std::size_t i = 0; i < law.params.size(); ++i) {
        out += (i ? "," : "") + std::to_string(law.params[i]);
      }
      return out + ")";
    }

    SuiteResult laws_suite(SuiteConfig const& cfg) {
      Tally       t("laws");
      auto const& m = cfg.model;
      for (auto const& law : law_grid(m)) {
        auto const cert = check_law(law, m, cfg.tail_bound);
        for (auto const& part : cert.parts) {
          if (part.status != Status::fail) {
            t.add_cases(part.checked);
            continue;
          }
          t.add_cases(part.checked - 1);
          auto const& c = *part.counterexample;
          std::vector<std::string> inputs;
          for (auto const& f : c.factors) {
            inputs.push_back(to_string(m, f));
          }
          t.fail(describe(law) + " " + part.name, inputs, to_string(m, c.value),
                 c.expected);
        }
      }
      return t.result();
    }

    ////////////////////////////////////////////////////////////////////
    // discreteness
    ////////////////////////////////////////////////////////////////////

    // A witness is valid when its offender lies in v and the escape is the
    // displayed translate of the offender.
    bool valid_witness(std::int64_t a, std::set<Cz> const& v,
                       DiscretenessWitness const& wt) {
      auto const [x, y] = wt.offender;
      if (v.count(wt.offender) == 0) {
        return false;
      }
      if (wt.side == Side::left) {
        return x < y && y <= a && wt.escape == Cz{a, a + (y - x)}
               && wt.escape == multiply({a, a}, wt.offender);
      }
      return y < x && x <= a && wt.escape == Cz{a + (x - y), a}
             && wt.escape == multiply(wt.offender, {a, a});
    }

    SuiteResult discreteness_suite(SuiteConfig const& cfg) {
      Tally        t("discreteness");
      auto const&  w = cfg.window;
      Window const core(w.lo() / 2, w.hi() / 2);
      auto const   s = [](Cz x) { return to_string(x); };

      for (auto const& x : core.elements()) {
        auto const dl = dl_set(x.a, x.b, w);
        t.expect(dl == dl_set_closed_form(x.a, x.b, w),
                 "DL-set equals its closed form",
                 [&] { return std::vector{s(x)}; });
        switch (singleton_identity(x.a, x.b, w)) {
          case Status::pass:
            t.pass();
            break;
          case Status::fail:
            t.fail("singleton identity", {s(x)}, "", "");
            break;
          case Status::inconclusive:
            t.inconclusive();
            break;
        }
      }

      auto const check = [&](std::int64_t a, std::set<Cz> const& v) {
        auto const wt = discreteness_witness(a, v);
        t.expect(wt && valid_witness(a, v, *wt), "discreteness witness", [&] {
          std::vector<std::string> in = {std::to_string(a)};
          for (auto const& y : v) {
            in.push_back(s(y));
          }
          return in;
        });
      };

      // Every two-point candidate {(a,a), (x,y)} with a qualifying (x,y).
      for (std::int64_t a = core.lo(); a <= core.hi(); ++a) {
        for (auto const& y : w.elements()) {
          if (y.a != y.b && std::max(y.a, y.b) <= a) {
            check(a, {{a, a}, y});
          }
        }
      }

      if (cfg.seed) {
        std::mt19937_64                             rng(*cfg.seed);
        std::uniform_int_distribution<std::int64_t> coord(w.lo(), w.hi());
        std::uniform_int_distribution<int>          extra(0, 6);
        for (int trial = 0; trial < 1000; ++trial) {
          auto const   a = coord(rng);
          std::set<Cz> v = {{a, a}};
          Cz           q{a, a};
          while (q.a == q.b || std::max(q.a, q.b) > a) {
            q = {coord(rng), coord(rng)};
            if (std::min(q.a, q.b) >= a) {
              q = {a - 1, a - 2};  // the window leaves no room below a
            }
          }
          v.insert(q);
          for (int e = extra(rng); e > 0; --e) {
            v.insert({coord(rng), coord(rng)});
          }
          check(a, v);
        }
      }
      return t.result();
    }

    ////////////////////////////////////////////////////////////////////
    // boundary
    ////////////////////////////////////////////////////////////////////

    SuiteResult boundary_suite(SuiteConfig const& cfg) {
      Tally       t("boundary");
      auto const& m    = cfg.model;
      auto const& w    = cfg.window;
      auto const  elts = model_elements(m, w, cfg.group_bound);
      auto const  s    = [&](ExtElement const& x) { return to_string(m, x); };
      auto const  list = [&](std::vector<ExtElement> const& xs) {
        std::string out = "{";
        for (std::size_t i = 0; i < xs.size(); ++i) {
          out += (i ? ", " : "") + s(xs[i]);
        }
        return out + "}";
      };

      std::vector<ExtElement> units, ideal;
      for (auto const& x : elts) {
        if (std::holds_alternative<AdjoinedUnit>(x)
            || std::holds_alternative<UnitGroup>(x)) {
          units.push_back(x);
        } else if (std::holds_alternative<IdealGroup>(x)) {
          ideal.push_back(x);
        }
      }
      auto const b   = boundary_sets(m, w, cfg.group_bound);
      auto const none = [] { return std::vector<std::string>{}; };
      t.expect(b.left == units, "L is the group of units", none, list(b.left),
               list(units));
      t.expect(b.right == units, "R is the group of units", none, list(b.right),
               list(units));
      t.expect(b.ideal == ideal, "I is the ideal group", none, list(b.ideal),
               list(ideal));
      t.expect(b.left_equals_right, "L = R", none);
      t.expect(b.ideal_absorbs, "I is an ideal", none);

      // Idempotent inventory and its order.
      std::vector<ExtElement> idem, expected;
      for (auto const& x : elts) {
        if (ext_is_idempotent(m, x)) {
          idem.push_back(x);
        }
        auto const* c = std::get_if<Cz>(&x);
        if ((c && c->a == c->b) || std::holds_alternative<AdjoinedUnit>(x)
            || x == ExtElement{UnitGroup{0}} || x == ExtElement{IdealGroup{0}}) {
          expected.push_back(x);
        }
      }
      t.expect(idem == expected, "idempotent inventory", none, list(idem),
               list(expected));
      for (auto const& e : idem) {
        for (auto const& f : idem) {
          bool const ef = ext_idem_leq(m, e, f);
          bool const fe = ext_idem_leq(m, f, e);
          t.expect(ef || fe, "idempotents are comparable",
                   [&] { return std::vector{s(e), s(f)}; });
          t.expect(!(ef && fe) || e == f, "order is antisymmetric",
                   [&] { return std::vector{s(e), s(f)}; });
          bool const bottom = e == ExtElement{IdealGroup{0}};
          bool const top    = std::holds_alternative<AdjoinedUnit>(e)
                           || e == ExtElement{UnitGroup{0}};
          if (bottom) {
            t.expect(ef, "z:0 is the least idempotent",
                     [&] { return std::vector{s(e), s(f)}; });
          }
          if (top) {
            t.expect(fe, "the identity is the greatest idempotent",
                     [&] { return std::vector{s(e), s(f)}; });
          }
        }
      }

      if (m.has_ideal()) {
        ExtElement const z0 = IdealGroup{0};
        for (auto const& x : elts) {
          auto const l = ext_multiply(m, x, z0);
          auto const r = ext_multiply(m, z0, x);
          t.expect(l == r, "z:0 is central", [&] { return std::vector{s(x)}; },
                   s(l), s(r));
          for (auto const& y : elts) {
            auto const hxy = hom_to_ideal(m, ext_multiply(m, x, y));
            auto const hh
                = ext_multiply(m, hom_to_ideal(m, x), hom_to_ideal(m, y));
            t.expect(hxy == hh, "h(x·y) = h(x)·h(y)",
                     [&] { return std::vector{s(x), s(y)}; }, s(hxy), s(hh));
            auto const* cx = std::get_if<Cz>(&x);
            auto const* cy = std::get_if<Cz>(&y);
            if (cx && cy) {
              bool const same = hom_to_ideal(m, x) == hom_to_ideal(m, y);
              t.expect(same == related(CongruenceSpec::sigma(0), *cx, *cy),
                       "kernel of h is the minimal group congruence",
                       [&] { return std::vector{s(x), s(y)}; });
            }
          }
        }
      }

      Window const core(w.lo() / 2, w.hi() / 2);
      for (auto const& x : core.elements()) {
        auto const up = upset(m, x.a, x.b, w, cfg.group_bound);
        t.expect(up.conditions_agree, "the three descriptions of the upset agree",
                 [&] { return std::vector{s(x)}; });
      }
      return t.result();
    }
  }  // namespace

  SuiteResult run_suite(std::string const& name, SuiteConfig const& cfg) {
    if (name == "assoc") {
      return assoc_suite(cfg);
    } else if (name == "inverse") {
      return inverse_suite(cfg);
    } else if (name == "green") {
      return green_suite(cfg);
    } else if (name == "congruence") {
      return congruence_suite(cfg);
    } else if (name == "laws") {
      return laws_suite(cfg);
    } else if (name == "discreteness") {
      return discreteness_suite(cfg);
    } else if (name == "boundary") {
      return boundary_suite(cfg);
    }
    throw ParameterError("unknown suite '" + name + "'");
  }

  Report run_suites(SuiteConfig const& cfg) {
    validate(cfg);
    Report report;
    report.config = cfg;
    for (auto const& name : suite_names()) {
      if (!cfg.suites.empty()
          && std::find(cfg.suites.begin(), cfg.suites.end(), name)
                 == cfg.suites.end()) {
        continue;
      }
      report.suites.push_back(run_suite(name, cfg));
      auto const st = report.suites.back().status;
      if (st == Status::fail) {
        report.overall = Status::fail;
      } else if (st == Status::inconclusive && report.overall == Status::pass) {
        report.overall = Status::inconclusive;
      }
    }
    return report;
  }

  std::string report_json(Report const& report, std::string const& generated_at) {
    using nlohmann::ordered_json;
    auto const&  cfg = report.config;
    ordered_json j;
    j["tool_version"] = tool_version;
    j["generated_at"] = generated_at;
    j["config"]       = {
        {"model", to_string(cfg.model)},
        {"window", to_string(cfg.window)},
        {"group_bound", cfg.group_bound},
        {"tail_bound", cfg.tail_bound},
        {"suites", cfg.suites.empty() ? suite_names() : cfg.suites},
        {"seed", cfg.seed ? ordered_json(*cfg.seed) : ordered_json(nullptr)}};
    j["suites"] = ordered_json::array();
    for (auto const& s : report.suites) {
      ordered_json cex = ordered_json::array();
      for (auto const& c : s.counterexamples) {
        cex.push_back({{"check", c.check},
                       {"inputs", c.inputs},
                       {"left", c.left},
                       {"right", c.right}});
      }
      j["suites"].push_back({{"name", s.name},
                             {"status", to_string(s.status)},
                             {"cases", s.cases},
                             {"failures", s.failures},
                             {"counterexamples", cex}});
    }
    j["overall"] = to_string(report.overall);
    return j.dump(2) + "\n";
  }

}  // namespace czx
