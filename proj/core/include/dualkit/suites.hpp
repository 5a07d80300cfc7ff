#ifndef DUALKIT_SUITES_HPP
#define DUALKIT_SUITES_HPP

#include <string>
#include <vector>

#include "dualkit/report.hpp"

namespace dualkit {

// Bounds for a verification suite.  Zero means "use the suite's default";
// the seed only affects suites with a randomised stage.
struct SuiteOptions {
  int max_atoms = 0;
  int max_points = 0;
  unsigned seed = 1;
};

// Names of the available suites, in canonical order.
std::vector<std::string> suite_names();

// Runs the named suite and returns its findings.  Unknown names and
// unusably large bounds raise ValidationError.
Report run_suite(const std::string& name, const SuiteOptions& opt = {});

// One line per finding: "<check> PASS" / "<check> FAIL", followed by the
// witness when one was recorded.
std::string render_report(const Report& r);

}  // namespace dualkit

#endif
