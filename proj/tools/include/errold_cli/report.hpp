#pragma once

#include <iosfwd>
#include <string>
#include <utility>
#include <vector>

namespace errold::cli {

enum class Status { ok, fail, error };

// Line-oriented "key: value" report. `command` and `status` always come
// first; other keys keep insertion order and may repeat.
class Report {
 public:
  explicit Report(std::string command) : command_(std::move(command)) {}

  void add(std::string key, std::string value) { fields_.emplace_back(std::move(key), std::move(value)); }
  void add(std::string key, bool value) { add(std::move(key), std::string(value ? "true" : "false")); }
  void add(std::string key, long long value) { add(std::move(key), std::to_string(value)); }
  void add(std::string key, int value) { add(std::move(key), std::to_string(value)); }
  void add(std::string key, unsigned long long value) { add(std::move(key), std::to_string(value)); }
  void add(std::string key, const char* value) { add(std::move(key), std::string(value)); }

  void set_status(Status s) { status_ = s; }
  Status status() const { return status_; }

  void write(std::ostream& out) const;

 private:
  std::string command_;
  Status status_ = Status::ok;
  std::vector<std::pair<std::string, std::string>> fields_;
};

// Lowercase hex SHA-256 of a file's bytes.
std::string file_sha256(const std::string& path);
std::string text_sha256(const std::string& text);

}  // namespace errold::cli
