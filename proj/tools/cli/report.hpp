#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include "json.hpp"

namespace coframes::cli {

/// One checked invariant. `id` orders the report; `witness` says what was
/// observed (the counterexample when failing).
struct Check {
  std::string suite;
  std::string id;
  std::string name;
  bool pass = false;
  std::string witness;
  nlohmann::json data = nlohmann::json::object();
};

class Report {
 public:
  void add(Check c) { checks_.push_back(std::move(c)); }
  void add(std::string suite, std::string id, std::string name, bool pass, std::string witness = {},
           nlohmann::json data = nlohmann::json::object());
  void append(const Report& other);

  bool ok() const;
  int failures() const;
  const std::vector<Check>& checks() const { return checks_; }

  /// Checks sorted by (suite, id), stable within a case.
  std::vector<Check> sorted() const;
  /// "PASS suite/id name: witness" lines and a summary line.
  void write_text(std::ostream& os) const;
  /// One JSON object per line.
  void write_jsonl(std::ostream& os) const;

 private:
  std::vector<Check> checks_;
};

/// Zero-padded case id, so lexicographic and numeric order agree.
std::string case_id(int k);

}  // namespace coframes::cli
