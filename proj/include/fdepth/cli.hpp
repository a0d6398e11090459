#ifndef FDEPTH_CLI_HPP
#define FDEPTH_CLI_HPP

namespace fdepth::cli {

// Entry point of the command line tool; returns the process exit status
// (0 success, 2 usage or parse error, 3 degenerate computation).
int run(int argc, const char* const* argv);

}  // namespace fdepth::cli

#endif  // FDEPTH_CLI_HPP
