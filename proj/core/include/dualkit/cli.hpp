#ifndef DUALKIT_CLI_HPP
#define DUALKIT_CLI_HPP

#include <iosfwd>
#include <string>
#include <vector>

namespace dualkit {

// Driver behind the command-line binary.  args excludes the program name.
//
// Exit codes: 0 when every checked property passed, 1 when a property
// failed on valid input (the witness is printed), 2 on input problems
// (usage, unreadable file, malformed document, out-of-range request).
int cli_run(const std::vector<std::string>& args, std::ostream& out,
            std::ostream& err);

}  // namespace dualkit

#endif
