#pragma once

#include <cstddef>
#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

namespace ncq::cli {

enum class Format { Text, Json };

enum ExitCode : int { kPass = 0, kCheckFailed = 1, kUsageError = 2 };

struct RunConfig {
  std::string command;            // order | jacobi | assoc | star | center | report
  std::string input;              // .ncq path
  std::vector<std::string> args;  // expression for order, f and g for star
  std::optional<std::size_t> order;
  Format format = Format::Text;
  std::uint64_t seed = 1;
  std::size_t samples = 100;
  std::size_t max_len = 3;
  std::size_t threads = 1;
  std::size_t cache_limit = 1U << 20;
  int verbosity = 0;
};

// Runs one command over a file.  Diagnostics go to err; the return value
// is the process exit code.
int run(const RunConfig& config, std::ostream& out, std::ostream& err);

// Same as run() after parsing an argv vector (argv[0] is the program name).
int main_entry(const std::vector<std::string>& argv, std::ostream& out, std::ostream& err);

}  // namespace ncq::cli
