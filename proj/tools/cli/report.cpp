#include "report.hpp"

#include <algorithm>
#include <cstdio>
#include <ostream>

namespace coframes::cli {

void Report::add(std::string suite, std::string id, std::string name, bool pass, std::string witness,
                 nlohmann::json data) {
  checks_.push_back({std::move(suite), std::move(id), std::move(name), pass, std::move(witness), std::move(data)});
}

void Report::append(const Report& other) {
  checks_.insert(checks_.end(), other.checks_.begin(), other.checks_.end());
}

bool Report::ok() const { return failures() == 0; }

int Report::failures() const {
  return static_cast<int>(std::count_if(checks_.begin(), checks_.end(), [](const Check& c) { return !c.pass; }));
}

std::vector<Check> Report::sorted() const {
  std::vector<Check> out = checks_;
  std::stable_sort(out.begin(), out.end(), [](const Check& a, const Check& b) {
    return std::tie(a.suite, a.id) < std::tie(b.suite, b.id);
  });
  return out;
}

void Report::write_text(std::ostream& os) const {
  for (const Check& c : sorted()) {
    os << (c.pass ? "PASS " : "FAIL ") << c.suite;
    if (!c.id.empty()) os << '/' << c.id;
    os << ' ' << c.name;
    if (!c.witness.empty()) os << ": " << c.witness;
    os << '\n';
  }
  os << checks_.size() << " checks, " << failures() << " failed\n";
}

void Report::write_jsonl(std::ostream& os) const {
  for (const Check& c : sorted()) {
    nlohmann::json j = {{"suite", c.suite}, {"case", c.id},   {"check", c.name},
                        {"status", c.pass ? "pass" : "fail"}, {"witness", c.witness}};
    if (!c.data.empty()) j["data"] = c.data;
    os << j.dump() << '\n';
  }
}

std::string case_id(int k) {
  char buf[16];
  std::snprintf(buf, sizeof buf, "%04d", k);
  return buf;
}

}  // namespace coframes::cli
