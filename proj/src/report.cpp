#include "pmd/report.hpp"

#include <sstream>

namespace pmd {

std::string_view status_name(Status s) noexcept {
  switch (s) {
    case Status::pass: return "pass";
    case Status::fail: return "fail";
    case Status::skipped: return "skipped";
  }
  return "?";
}

Report::Report(std::string command, Json parameters)
    : command_(std::move(command)), parameters_(std::move(parameters)) {}

bool Report::check(std::string name, bool ok, Json expected, Json actual, Json counterexample) {
  assertions_.push_back(Assertion{std::move(name), ok ? Status::pass : Status::fail,
                                  std::move(expected), std::move(actual),
                                  ok ? Json(nullptr) : std::move(counterexample)});
  return ok;
}

void Report::skip(std::string name, std::string reason) {
  assertions_.push_back(Assertion{std::move(name), Status::skipped, nullptr, std::move(reason), nullptr});
}

void Report::merge(const Report& other, const std::string& prefix) {
  for (auto a : other.assertions_) {
    if (!prefix.empty()) a.name = prefix + "/" + a.name;
    assertions_.push_back(std::move(a));
  }
}

bool Report::passed() const noexcept { return failures() == 0; }

std::size_t Report::failures() const noexcept {
  std::size_t n = 0;
  for (const auto& a : assertions_) n += a.status == Status::fail ? 1 : 0;
  return n;
}

Json Report::to_json(bool with_timing) const {
  Json out;
  out["command"] = command_;
  out["parameters"] = parameters_;
  out["status"] = passed() ? "pass" : "fail";
  if (!results_.empty()) out["results"] = results_;
  Json list = Json::array();
  for (const auto& a : assertions_) {
    Json item;
    item["name"] = a.name;
    item["status"] = status_name(a.status);
    item["expected"] = a.expected;
    item["actual"] = a.actual;
    if (!a.counterexample.is_null()) item["counterexample"] = a.counterexample;
    list.push_back(std::move(item));
  }
  out["assertions"] = std::move(list);
  if (with_timing) out["seconds"] = seconds_;
  return out;
}

std::string Report::to_text() const {
  std::ostringstream out;
  out << command_ << ' ' << parameters_.dump() << '\n';
  for (const auto& a : assertions_) {
    out << "  [" << status_name(a.status) << "] " << a.name;
    if (a.status != Status::pass) out << "  expected=" << a.expected.dump() << " actual=" << a.actual.dump();
    if (!a.counterexample.is_null()) out << " counterexample=" << a.counterexample.dump();
    out << '\n';
  }
  out << (passed() ? "PASS" : "FAIL") << " (" << assertions_.size() << " assertions, "
      << failures() << " failed)\n";
  return out.str();
}

Json to_json(const std::vector<PartialTransformation>& elements) {
  Json out = Json::array();
  for (const auto& a : elements) out.push_back(format(a));
  return out;
}

Json to_json(const PartialTransformation& a) { return format(a); }

}  // namespace pmd
