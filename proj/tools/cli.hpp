#ifndef SEMITORIC_TOOLS_CLI_HPP
#define SEMITORIC_TOOLS_CLI_HPP

#include <iosfwd>
#include <string>
#include <vector>

namespace semitoric::cli {

enum ExitCode : int {
    ok = 0,
    negative = 1,     ///< false answer or failed validation
    usage = 2,        ///< bad arguments or unmet precondition
    bad_document = 3  ///< syntax, schema or version error
};

/// Runs one command; args excludes the program name.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

} // namespace semitoric::cli

#endif
