#pragma once

#include <cstddef>
#include <cstdint>
#include <string>
#include <vector>

namespace realtrace {

enum class Outcome { pass, fail, skip };

/// Plain-text result of a command that runs checks: one line per check,
/// prefixed PASS, FAIL or SKIP, then a summary line. Failures carry the
/// smallest input that reproduces them in `detail`.
class RunReport {
 public:
  RunReport(std::string command, std::string inputs);

  void add(std::string check, Outcome outcome, std::string detail = {});

  std::size_t count(Outcome o) const;
  bool ok() const { return count(Outcome::fail) == 0; }
  /// FNV-1a of the command and its inputs, as 16 hex digits.
  std::string inputs_digest() const;
  std::string render() const;

 private:
  struct Entry {
    std::string check;
    Outcome outcome;
    std::string detail;
  };
  std::string command_;
  std::string inputs_;
  std::vector<Entry> entries_;
};

std::uint64_t fnv1a(const std::string& data);

}  // namespace realtrace
