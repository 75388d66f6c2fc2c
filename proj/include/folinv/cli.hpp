// Command-line surface.  run() is the whole program behind the binary and
// is exposed so the integration tests can drive it in-process.
//
// Exit codes: 0 all checks pass, 1 a mathematical check failed, 2 input or
// usage error.
#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace folinv {

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

// Compile-time default location of the corpus data file.
const char* default_corpus_path();

} // namespace folinv
