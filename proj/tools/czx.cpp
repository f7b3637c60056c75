// czx - exact arithmetic for the extended bicyclic semigroup and its extensions
//
// Exit codes: 0 success, 1 a verification failed, 2 invalid input.

#include <chrono>
#include <ctime>
#include <fstream>
#include <iostream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "czx/congruence.hpp"
#include "czx/error.hpp"
#include "czx/model.hpp"
#include "czx/nbhd.hpp"
#include "czx/text.hpp"
#include "czx/verify.hpp"

namespace {

  constexpr int exit_failed  = 1;
  constexpr int exit_invalid = 2;

  std::string utc_timestamp() {
    auto const now = std::chrono::system_clock::to_time_t(
        std::chrono::system_clock::now());
    std::tm tm{};
    gmtime_r(&now, &tm);
    char buf[32];
    std::strftime(buf, sizeof buf, "%Y-%m-%dT%H:%M:%SZ", &tm);
    return buf;
  }

  int write_output(std::string const& text, std::string const& path) {
    if (path.empty()) {
      std::cout << text;
      return 0;
    }
    std::ofstream out(path);
    if (!out || !(out << text)) {
      std::cerr << "czx: cannot write " << path << "\n";
      return exit_invalid;
    }
    return 0;
  }

  int cmd_eval(std::string const& model, std::vector<std::string> const& word) {
    auto const m = czx::parse_model(model);
    if (word.empty()) {
      throw czx::ParseError("eval needs at least one element");
    }
    auto acc = czx::parse_element(word.front(), m);
    for (std::size_t i = 1; i < word.size(); ++i) {
      acc = czx::ext_multiply(m, acc, czx::parse_element(word[i], m));
    }
    std::cout << czx::to_string(m, acc) << "\n";
    return 0;
  }

  int cmd_classify(std::string const& pairs) {
    auto const gens = czx::parse_pairs(pairs);
    std::cout << czx::describe_congruence(czx::congruence_from_pairs(gens))
              << "\n";
    return 0;
  }

  int cmd_check_law(std::string const& law, std::string const& model,
                    std::string const& params, std::int64_t tail_bound,
                    std::string const& out) {
    auto const m    = czx::parse_model(model);
    auto const cert = czx::check_law(
        {czx::law_from_string(law), czx::parse_int_list(params)}, m, tail_bound);

    nlohmann::ordered_json j;
    j["law"]              = czx::to_string(cert.law.id);
    j["params"]           = cert.law.params;
    j["model"]            = czx::to_string(m);
    j["tail_bound"]       = tail_bound;
    j["status"]           = czx::to_string(cert.status);
    j["products_checked"] = cert.products_checked;
    j["parts"]            = nlohmann::ordered_json::array();
    for (auto const& p : cert.parts) {
      nlohmann::ordered_json part = {{"name", p.name},
                                     {"status", czx::to_string(p.status)},
                                     {"equality", p.equality},
                                     {"checked", p.checked}};
      if (p.counterexample) {
        std::vector<std::string> factors;
        for (auto const& f : p.counterexample->factors) {
          factors.push_back(czx::to_string(m, f));
        }
        part["counterexample"]
            = {{"factors", factors},
               {"value", czx::to_string(m, p.counterexample->value)},
               {"expected", p.counterexample->expected}};
      }
      j["parts"].push_back(part);
    }
    if (int rc = write_output(j.dump(2) + "\n", out)) {
      return rc;
    }
    return cert.status == czx::Status::fail ? exit_failed : 0;
  }

  int cmd_verify(std::string const& model, std::string const& window,
                 std::int64_t group_bound, std::int64_t tail_bound,
                 std::vector<std::string> const& suites,
                 std::optional<std::uint64_t> seed, std::string const& out) {
    czx::SuiteConfig cfg;
    cfg.model       = czx::parse_model(model);
    cfg.window      = czx::parse_window(window);
    cfg.group_bound = group_bound;
    cfg.tail_bound  = tail_bound;
    cfg.suites      = suites;
    cfg.seed        = seed;
    auto const report = czx::run_suites(cfg);
    if (int rc = write_output(czx::report_json(report, utc_timestamp()), out)) {
      return rc;
    }
    for (auto const& s : report.suites) {
      std::cerr << s.name << ": " << czx::to_string(s.status) << " ("
                << s.cases << " cases, " << s.failures << " failures)\n";
    }
    return report.overall == czx::Status::fail ? exit_failed : 0;
  }

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact arithmetic and verification for the extended bicyclic "
               "semigroup and its extensions S1 - S5"};
  app.set_version_flag("--version", czx::tool_version);
  app.require_subcommand(1);

  std::string model = "cz";
  std::string out;

  auto* eval = app.add_subcommand("eval", "Multiply a word, left to right");
  std::vector<std::string> word;
  eval->add_option("--model", model, "cz, s1, s2:k=K,n=N, s3, s4, s5:k=K,n=N")
      ->capture_default_str();
  eval->add_option("word", word, "Elements: (a,b), e1, g:<value>, z:<n>")
      ->required();

  auto* classify = app.add_subcommand(
      "classify-congruence", "Congruence generated by pairs of C_Z elements");
  std::string pairs;
  classify->add_option("pairs", pairs, "((a,b),(c,d));((e,f),(g,h))")
      ->required();

  std::string  window      = "-4:4";
  std::int64_t group_bound = 3;
  std::int64_t tail_bound  = 200;

  auto* verify = app.add_subcommand("verify", "Run verification suites");
  std::vector<std::string>     suites;
  std::optional<std::uint64_t> seed;
  verify->add_option("--model", model)->capture_default_str();
  verify->add_option("--window", window, "lo:hi, e.g. --window=-4:4")
      ->envname("CZX_DEFAULT_WINDOW")
      ->capture_default_str();
  verify->add_option("--group-bound", group_bound)->capture_default_str();
  verify->add_option("--tail-bound", tail_bound)->capture_default_str();
  verify->add_option("--suite", suites, "Repeatable; default every suite")
      ->check(CLI::IsMember(czx::suite_names()));
  verify->add_option("--seed", seed, "Adds seeded randomized cases");
  verify->add_option("--out", out, "Report path; default standard output");

  auto* law = app.add_subcommand("check-law", "Check one inclusion law");
  std::string law_id;
  std::string params;
  law->add_option("law", law_id, "L1 - L7")->required();
  law->add_option("--model", model)->capture_default_str();
  law->add_option("--params", params, "Comma-separated integers")->required();
  law->add_option("--tail-bound", tail_bound)->capture_default_str();
  law->add_option("--out", out, "Certificate path; default standard output");

  try {
    app.parse(argc, argv);
  } catch (CLI::ParseError const& e) {
    auto const rc = app.exit(e);
    return rc == 0 ? 0 : exit_invalid;
  }

  try {
    if (eval->parsed()) {
      return cmd_eval(model, word);
    }
    if (classify->parsed()) {
      return cmd_classify(pairs);
    }
    if (verify->parsed()) {
      return cmd_verify(model, window, group_bound, tail_bound, suites, seed,
                        out);
    }
    return cmd_check_law(law_id, model, params, tail_bound, out);
  } catch (std::invalid_argument const& e) {  // ParseError, ParameterError
    std::cerr << "czx: " << e.what() << "\n";
  } catch (std::domain_error const& e) {
    std::cerr << "czx: " << e.what() << "\n";
  } catch (std::overflow_error const& e) {
    std::cerr << "czx: arithmetic overflow: " << e.what() << "\n";
  }
  return exit_invalid;
}
