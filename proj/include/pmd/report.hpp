#pragma once

#include <chrono>
#include <string>
#include <vector>

#include "json.hpp"

#include "pmd/transformation.hpp"

namespace pmd {

using Json = nlohmann::ordered_json;

enum class Status { pass, fail, skipped };

std::string_view status_name(Status s) noexcept;

struct Assertion {
  std::string name;
  Status status = Status::pass;
  Json expected;
  Json actual;
  Json counterexample;  // null when absent
};

/// Pass/fail record shared by every verification command.
class Report {
 public:
  Report() = default;
  explicit Report(std::string command, Json parameters = Json::object());

  /// Records one assertion and returns `ok`.
  bool check(std::string name, bool ok, Json expected, Json actual,
             Json counterexample = nullptr);
  void skip(std::string name, std::string reason);

  /// Appends another report's assertions, prefixing their names.
  void merge(const Report& other, const std::string& prefix = {});

  bool passed() const noexcept;
  std::size_t failures() const noexcept;
  const std::vector<Assertion>& assertions() const noexcept { return assertions_; }
  const std::string& command() const noexcept { return command_; }
  Json& parameters() noexcept { return parameters_; }
  /// Command output beyond the assertions; omitted when empty.
  Json& results() noexcept { return results_; }

  void set_seconds(double s) noexcept { seconds_ = s; }
  double seconds() const noexcept { return seconds_; }

  Json to_json(bool with_timing = true) const;
  std::string to_text() const;

 private:
  std::string command_;
  Json parameters_ = Json::object();
  Json results_ = Json::object();
  std::vector<Assertion> assertions_;
  double seconds_ = 0.0;
};

/// JSON string array of canonical forms.
Json to_json(const std::vector<PartialTransformation>& elements);
Json to_json(const PartialTransformation& a);

class Stopwatch {
 public:
  Stopwatch() : start_(std::chrono::steady_clock::now()) {}
  double seconds() const {
    return std::chrono::duration<double>(std::chrono::steady_clock::now() - start_).count();
  }

 private:
  std::chrono::steady_clock::time_point start_;
};

}  // namespace pmd
