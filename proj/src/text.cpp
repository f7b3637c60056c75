// czx - exact arithmetic for the extended bicyclic semigroup and its extensions

#include "czx/text.hpp"

#include <cctype>
#include <charconv>

namespace czx {

  namespace {
    std::string_view trim(std::string_view s) {
      while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) {
        s.remove_prefix(1);
      }
      while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) {
        s.remove_suffix(1);
      }
      return s;
    }

    [[noreturn]] void fail(std::string const& what, std::string_view text) {
      throw ParseError(what + ": '" + std::string(text) + "'");
    }

    std::int64_t parse_int(std::string_view text) {
      auto s = trim(text);
      if (!s.empty() && s.front() == '+') {
        s.remove_prefix(1);
      }
      std::int64_t v   = 0;
      auto const   res = std::from_chars(s.data(), s.data() + s.size(), v);
      if (s.empty() || res.ec != std::errc() || res.ptr != s.data() + s.size()) {
        fail("expected an integer", text);
      }
      return v;
    }

    std::vector<std::string_view> split(std::string_view s, char sep) {
      std::vector<std::string_view> out;
      std::size_t                   start = 0;
      for (std::size_t i = 0; i <= s.size(); ++i) {
        if (i == s.size() || s[i] == sep) {
          out.push_back(s.substr(start, i - start));
          start = i + 1;
        }
      }
      return out;
    }

    bool starts_with(std::string_view s, std::string_view p) {
      return s.substr(0, p.size()) == p;
    }
  }  // namespace

  ////////////////////////////////////////////////////////////////////////
  // Formatting
  ////////////////////////////////////////////////////////////////////////

  std::string to_string(Cz x) {
    return "(" + std::to_string(x.a) + "," + std::to_string(x.b) + ")";
  }

  std::string to_string(ModelSpec const& m, ExtElement const& x) {
    switch (x.index()) {
      case 0:
        return to_string(std::get<Cz>(x));
      case 1:
        return "e1";
      case 2:
        return "g:"
               + std::to_string(
                   checked::mul(m.k(), std::get<UnitGroup>(x).multiplier));
      default:
        return "z:" + std::to_string(std::get<IdealGroup>(x).value);
    }
  }

  std::string to_string(ModelSpec const& m) {
    std::string seq;
    if (m.has_adjoined_unit() && !m.sequence().is_default()) {
      seq = ":seq=";
      auto const& p = m.sequence().prefix();
      for (std::size_t i = 0; i < p.size(); ++i) {
        seq += (i ? "|" : "") + std::to_string(p[i]);
      }
      seq += ",step=" + std::to_string(m.sequence().step());
    }
    auto const kn = ":k=" + std::to_string(m.k())
                    + ",n=" + std::to_string(m.divisor());
    switch (m.kind()) {
      case ModelKind::plain_cz:
        return "cz";
      case ModelKind::s1:
        return "s1" + seq;
      case ModelKind::s2:
        return "s2" + kn;
      case ModelKind::s3:
        return "s3";
      case ModelKind::s4:
        return "s4" + seq;
      case ModelKind::s5:
        return "s5" + kn;
    }
    return "?";
  }

  std::string to_string(Window const& w) {
    return std::to_string(w.lo()) + ":" + std::to_string(w.hi());
  }

  std::string to_string(CongruenceSpec const& spec) {
    if (spec.kind == CongruenceSpec::Kind::identity) {
      return "identity";
    }
    return "sigma_" + std::to_string(spec.k);
  }

  std::string to_string(BasicNbhd const& nb) {
    return "U_" + std::to_string(nb.idx) + "(" + to_string(nb.model, nb.center)
           + ")";
  }

  std::string to_string(Status s) {
    switch (s) {
      case Status::pass:
        return "pass";
      case Status::fail:
        return "fail";
      case Status::inconclusive:
        return "inconclusive";
    }
    return "?";
  }

  std::string describe_congruence(CongruenceSpec const& spec) {
    if (spec.kind == CongruenceSpec::Kind::identity) {
      return "identity";
    }
    std::string quotient;
    if (spec.k == 0) {
      quotient = "Z";
    } else if (spec.k == 1) {
      quotient = "trivial";
    } else {
      quotient = "Z/" + std::to_string(spec.k) + "Z";
    }
    return "sigma k=" + std::to_string(spec.k) + " quotient=" + quotient;
  }

  ////////////////////////////////////////////////////////////////////////
  // Parsing
  ////////////////////////////////////////////////////////////////////////

  Cz parse_cz(std::string_view text) {
    auto s = trim(text);
    if (s.size() < 2 || s.front() != '(' || s.back() != ')') {
      fail("expected an element (a,b)", text);
    }
    auto parts = split(s.substr(1, s.size() - 2), ',');
    if (parts.size() != 2) {
      fail("expected an element (a,b)", text);
    }
    return {parse_int(parts[0]), parse_int(parts[1])};
  }

  ExtElement parse_element(std::string_view text, ModelSpec const& m) {
    auto const s = trim(text);
    ExtElement x;
    if (s == "e1") {
      x = AdjoinedUnit{};
    } else if (starts_with(s, "g:")) {
      auto const v = parse_int(s.substr(2));
      if (!m.has_unit_group()) {
        fail("unit group elements need model s2 or s5", text);
      }
      if (v % m.k() != 0) {
        fail("unit group value must be a multiple of k = "
                 + std::to_string(m.k()),
             text);
      }
      x = UnitGroup{v / m.k()};
    } else if (starts_with(s, "z:")) {
      x = IdealGroup{parse_int(s.substr(2))};
    } else {
      x = parse_cz(s);
    }
    if (!m.valid(x)) {
      fail("element is not in model " + to_string(m), text);
    }
    return x;
  }

  ModelSpec parse_model(std::string_view text) {
    auto const  s     = trim(text);
    auto const  colon = s.find(':');
    auto const  name  = s.substr(0, colon);
    auto const  rest  = colon == std::string_view::npos ? std::string_view{}
                                                        : s.substr(colon + 1);
    std::int64_t k = 0, n = 0;
    std::vector<std::int64_t> seq;
    std::int64_t              step     = 1;
    bool                      have_seq = false;
    if (!rest.empty()) {
      for (auto kv : split(rest, ',')) {
        auto const eq = kv.find('=');
        if (eq == std::string_view::npos) {
          fail("expected key=value in model parameters", text);
        }
        auto const key = trim(kv.substr(0, eq));
        auto const val = kv.substr(eq + 1);
        if (key == "k") {
          k = parse_int(val);
        } else if (key == "n") {
          n = parse_int(val);
        } else if (key == "seq") {
          have_seq = true;
          for (auto v : split(val, '|')) {
            seq.push_back(parse_int(v));
          }
        } else if (key == "step") {
          step = parse_int(val);
        } else {
          fail("unknown model parameter", text);
        }
      }
    }
    try {
      auto iso = have_seq ? IsolatedSequence(seq, step) : IsolatedSequence();
      if (name == "cz" && rest.empty()) {
        return ModelSpec::plain_cz();
      } else if (name == "s1" && k == 0 && n == 0) {
        return ModelSpec::s1(iso);
      } else if (name == "s2" && !have_seq) {
        return ModelSpec::s2(k, n);
      } else if (name == "s3" && rest.empty()) {
        return ModelSpec::s3();
      } else if (name == "s4" && k == 0 && n == 0) {
        return ModelSpec::s4(iso);
      } else if (name == "s5" && !have_seq) {
        return ModelSpec::s5(k, n);
      }
    } catch (DomainError const& e) {
      throw ParseError(std::string(e.what()) + " in model '"
                       + std::string(text) + "'");
    }
    fail("unknown model", text);
  }

  Window parse_window(std::string_view text) {
    auto const s     = trim(text);
    auto const colon = s.find(':', 1);  // allow a leading sign
    if (colon == std::string_view::npos) {
      fail("expected a window lo:hi", text);
    }
    try {
      return Window(parse_int(s.substr(0, colon)), parse_int(s.substr(colon + 1)));
    } catch (DomainError const& e) {
      throw ParseError(e.what());
    }
  }

  std::vector<CzPair> parse_pairs(std::string_view text) {
    std::vector<CzPair> out;
    for (auto item : split(trim(text), ';')) {
      auto s = trim(item);
      if (s.size() < 2 || s.front() != '(' || s.back() != ')') {
        fail("expected a pair ((a,b),(c,d))", item);
      }
      s                = trim(s.substr(1, s.size() - 2));
      auto const close = s.find(')');
      if (close == std::string_view::npos) {
        fail("expected a pair ((a,b),(c,d))", item);
      }
      auto const first = s.substr(0, close + 1);
      auto       tail  = trim(s.substr(close + 1));
      if (tail.empty() || tail.front() != ',') {
        fail("expected a pair ((a,b),(c,d))", item);
      }
      out.emplace_back(parse_cz(first), parse_cz(tail.substr(1)));
    }
    if (out.empty()) {
      fail("expected at least one pair", text);
    }
    return out;
  }

  std::vector<std::int64_t> parse_int_list(std::string_view text) {
    std::vector<std::int64_t> out;
    if (trim(text).empty()) {
      return out;
    }
    for (auto v : split(text, ',')) {
      out.push_back(parse_int(v));
    }
    return out;
  }

}  // namespace czx
