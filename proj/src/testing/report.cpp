#include "realtrace/testing/report.hpp"

#include <algorithm>
#include <cstdio>
#include <stdexcept>

namespace realtrace {

std::uint64_t fnv1a(const std::string& data) {
  std::uint64_t h = 0xcbf29ce484222325ULL;
  for (unsigned char c : data) {
    h ^= c;
    h *= 0x100000001b3ULL;
  }
  return h;
}

RunReport::RunReport(std::string command, std::string inputs)
    : command_(std::move(command)), inputs_(std::move(inputs)) {}

void RunReport::add(std::string check, Outcome outcome, std::string detail) {
  for (const Entry& e : entries_)
    if (e.check == check) throw std::logic_error("check '" + check + "' reported twice");
  entries_.push_back({std::move(check), outcome, std::move(detail)});
}

std::size_t RunReport::count(Outcome o) const {
  return static_cast<std::size_t>(
      std::count_if(entries_.begin(), entries_.end(), [o](const Entry& e) { return e.outcome == o; }));
}

std::string RunReport::inputs_digest() const {
  char buf[17];
  std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(fnv1a(command_ + '\0' + inputs_)));
  return buf;
}

std::string RunReport::render() const {
  std::string out = command_ + " " + inputs_ + " digest=" + inputs_digest() + "\n";
  for (const Entry& e : entries_) {
    const char* tag = e.outcome == Outcome::pass ? "PASS" : e.outcome == Outcome::fail ? "FAIL" : "SKIP";
    out += std::string(tag) + " " + e.check;
    if (!e.detail.empty()) out += ": " + e.detail;
    out += "\n";
  }
  out += "summary: " + std::to_string(count(Outcome::pass)) + " passed, " + std::to_string(count(Outcome::fail)) +
         " failed, " + std::to_string(count(Outcome::skip)) + " skipped\n";
  return out;
}

}  // namespace realtrace
