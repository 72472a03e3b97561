#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "symdual/error.hpp"

namespace symdual::cli {

struct JobSpec {
  std::string command;
  std::optional<std::string> input_path;
  std::optional<std::string> inline_json;
  std::optional<std::pair<std::int64_t, std::int64_t>> n_range;
  std::optional<std::int64_t> j;
  std::optional<int> max_c;
  std::string format = "json";
  std::uint64_t seed = 1;
};

inline constexpr int kExitOk = 0;
inline constexpr int kExitSchema = 2;
inline constexpr int kExitCap = 3;
inline constexpr int kExitInternal = 4;

const std::vector<std::string>& commands();
std::pair<std::int64_t, std::int64_t> parse_range(const std::string& text);
int exit_code(ErrorKind kind);

// Runs one job, writing a single document to out and diagnostics to err.
int run(const JobSpec& job, std::ostream& out, std::ostream& err);

// Parses argv into a JobSpec; SYMDUAL_MAX_C applies unless --max-c is given.
int main_entry(int argc, char** argv, std::ostream& out, std::ostream& err);

}  // namespace symdual::cli
