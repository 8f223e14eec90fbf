/**
 * Command-line surface: hopes / mst / diagram / verify / selftest.
 * Exposed as a function so tests can drive it in-process.
 */

#ifndef HOPES_CLI_HPP
#define HOPES_CLI_HPP

#include <string>
#include <vector>

namespace hopes {

// Exit codes: 0 success, 1 verification mismatch, 2 bad input,
// 3 search budget exceeded. args excludes the program name.
int cli_main(std::vector<std::string> args);

}  // namespace hopes

#endif  // HOPES_CLI_HPP
