#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace lexsel {

inline constexpr int kExitOk = 0;
inline constexpr int kExitVocabularyGap = 1;
inline constexpr int kExitUsage = 2;

/// Runs the command-line front end. `args` excludes the program name.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

/// Directory holding the bundled data files.
std::string default_data_dir();

}  // namespace lexsel
