#pragma once

#include <json.hpp>

#include <string>
#include <vector>

namespace kc::cli {

// Outcome of one command. Serialized either as text lines or as JSON with
// sorted keys; both are deterministic for a given input.
struct Report {
  std::string command;
  nlohmann::json input = nlohmann::json::object();
  std::string field;
  nlohmann::json checks = nlohmann::json::array();
  nlohmann::json results = nlohmann::json::object();
  std::vector<std::string> warnings;
  std::vector<std::string> lines;
  nlohmann::json error;  // null unless the command aborted
  int exit_code = 0;

  void check(const std::string& name, bool pass, nlohmann::json witness = nullptr);
  void line(std::string s) { lines.push_back(std::move(s)); }
  void fail_with(const std::string& kind, const std::string& message, int code);
  // Recomputes exit_code from the checks unless an error is recorded.
  void finish();

  std::string status() const;
  std::string to_json() const;
  std::string to_text() const;
};

std::string sha256_hex(const std::string& bytes);

}  // namespace kc::cli
