#include "kcontact/cli/report.hpp"

#include <openssl/evp.h>

#include <array>
#include <cstdio>

namespace kc::cli {

void Report::check(const std::string& name, bool pass, nlohmann::json witness) {
  nlohmann::json c{{"name", name}, {"pass", pass}};
  lines.push_back(name + ": " + (pass ? "pass" : "FAIL"));
  if (!pass) {
    if (witness.is_null()) witness = nlohmann::json::object();
    if (!witness.empty()) lines.push_back("  witness: " + witness.dump());
    c["witness"] = std::move(witness);
  }
  checks.push_back(std::move(c));
}

void Report::fail_with(const std::string& kind, const std::string& message, int code) {
  error = {{"kind", kind}, {"message", message}};
  exit_code = code;
  lines.push_back("error [" + kind + "]: " + message);
}

void Report::finish() {
  if (!error.is_null()) return;
  exit_code = 0;
  for (const auto& c : checks)
    if (!c["pass"].get<bool>()) exit_code = 1;
}

std::string Report::status() const {
  if (!error.is_null()) return exit_code == 1 ? "fail" : "error";
  return exit_code == 0 ? "pass" : "fail";
}

std::string Report::to_json() const {
  nlohmann::json j{{"command", command},  {"input", input},       {"field", field},
                   {"checks", checks},    {"results", results},   {"warnings", warnings},
                   {"status", status()},  {"exit_code", exit_code}, {"error", error}};
  return j.dump(2) + "\n";
}

std::string Report::to_text() const {
  std::string out;
  if (!field.empty()) out += "field: " + field + "\n";
  for (const auto& l : lines) out += l + "\n";
  for (const auto& w : warnings) out += "warning: " + w + "\n";
  out += "status: " + status() + "\n";
  return out;
}

std::string sha256_hex(const std::string& bytes) {
  std::array<unsigned char, EVP_MAX_MD_SIZE> md{};
  unsigned int len = 0;
  EVP_Digest(bytes.data(), bytes.size(), md.data(), &len, EVP_sha256(), nullptr);
  std::string hex;
  char buf[3];
  for (unsigned int i = 0; i < len; ++i) {
    std::snprintf(buf, sizeof buf, "%02x", md[i]);
    hex += buf;
  }
  return hex;
}

}  // namespace kc::cli
