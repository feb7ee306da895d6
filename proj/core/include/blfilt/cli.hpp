#pragma once

#include "blfilt/verify.hpp"

#include <filesystem>
#include <string>
#include <vector>

namespace blfilt::cli {

// Exit statuses: 0 all checks pass, 1 some check failed, 2 usage or IO error.
inline constexpr int kOk = 0;
inline constexpr int kCheckFailed = 1;
inline constexpr int kUsage = 2;

struct Command {
  enum class Kind { Validate, Filters, Classify, Profile, Verify, Generate, Audit };
  Kind kind = Kind::Validate;

  std::filesystem::path algebra_file;
  std::filesystem::path fuzzyset_file;
  std::filesystem::path corpus_dir;
  FilterKind filter_kind = FilterKind::Plain;
  int grid = 2;
  std::vector<std::string> theorems; // empty selects every suite
  int size = 0;
  std::vector<Thresholds> thresholds; // extra pairs for classify
  bool summary = false;
};

// Theorem selection tokens accepted by the verify command.
const std::vector<std::string>& verify_theorem_tokens();

struct RunResult {
  int status = kOk;
  std::string report; // key = value lines, '\n' separated
};

// Executes a command and renders its deterministic report. All recoverable
// errors are mapped onto the status codes above instead of escaping.
RunResult run(const Command& cmd);

} // namespace blfilt::cli
