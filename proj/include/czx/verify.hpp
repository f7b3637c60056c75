// czx - exact arithmetic for the extended bicyclic semigroup and its extensions

#ifndef CZX_VERIFY_HPP_
#define CZX_VERIFY_HPP_

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "czx/model.hpp"
#include "czx/nbhd.hpp"

namespace czx {

  inline constexpr char const* tool_version = "0.1.0";

  //! assoc, inverse, green, congruence, laws, discreteness, boundary.
  std::vector<std::string> const& suite_names();

  struct SuiteConfig {
    ModelSpec                    model = ModelSpec::plain_cz();
    Window                       window{-4, 4};
    std::int64_t                 group_bound = 3;
    std::int64_t                 tail_bound  = 200;
    std::vector<std::string>     suites;  // empty selects every suite
    std::optional<std::uint64_t> seed;    // adds randomized cases
  };

  //! Throws ParameterError for an unusable configuration.
  void validate(SuiteConfig const& cfg);

  //! A failing case with its inputs in element text form, so that it can
  //! be replayed through `czx eval`.
  struct SuiteCounterexample {
    std::string              check;
    std::vector<std::string> inputs;
    std::string              left;
    std::string              right;
  };

  struct SuiteResult {
    std::string                      name;
    Status                           status = Status::pass;
    std::uint64_t                    cases  = 0;
    std::uint64_t                    failures = 0;
    std::vector<SuiteCounterexample> counterexamples;  // first few only
  };

  struct Report {
    SuiteConfig              config;
    std::vector<SuiteResult> suites;
    Status                   overall = Status::pass;
  };

  SuiteResult run_suite(std::string const& name, SuiteConfig const& cfg);

  //! Validates cfg and runs the selected suites in canonical order.
  Report run_suites(SuiteConfig const& cfg);

  //! The report as JSON with a stable field order.
  std::string report_json(Report const& report, std::string const& generated_at);

}  // namespace czx

#endif  // CZX_VERIFY_HPP_
