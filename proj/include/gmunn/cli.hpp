#ifndef GMUNN_CLI_HPP_
#define GMUNN_CLI_HPP_

#include <iosfwd>
#include <string>
#include <vector>

namespace gmunn::cli {

/// Runs one CLI invocation. Reports go to out, usage errors to err.
/// Exit codes: 0 success, 1 parse error, 2 validation failure, 3 size cap.
int run(const std::vector<std::string>& args, std::ostream& out,
        std::ostream& err);

}  // namespace gmunn::cli

#endif  // GMUNN_CLI_HPP_
