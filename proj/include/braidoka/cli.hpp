#pragma once

// Batch front end. run() is the whole program minus process plumbing, so
// tests can drive it directly.

#include <string>
#include <vector>

#include <json.hpp>

namespace braidoka::cli {

inline constexpr const char* kSchemaVersion = "braidoka-cli/1";

enum class Status { Ok, Violation, Error };

struct CommandResult {
  Status status = Status::Ok;
  nlohmann::ordered_json payload;
  std::string text;  // what the binary prints on stdout

  // 0 ok, 2 violation or negative verdict, 1 usage or runtime error
  int exit_code() const { return status == Status::Ok ? 0 : status == Status::Violation ? 2 : 1; }
};

// `args` excludes the program name, e.g. {"classify", "--braid", "1 -2"}.
CommandResult run(const std::vector<std::string>& args);

}  // namespace braidoka::cli
