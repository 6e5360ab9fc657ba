#pragma once
#include <functional>
#include <string>
#include <vector>

#include "json.hpp"

namespace dtg {

using json = nlohmann::ordered_json;

// WARN: computed value disagrees with the printed claim; FAIL: internal inconsistency
enum class Status { Pass, Warn, Fail, Skipped };
std::string status_str(Status s);

struct CaseResult {
  std::string id;
  std::string location;               // which claim is being checked
  Status status = Status::Pass;
  json computed = nullptr;
  json expected = nullptr;
  std::string provenance;             // "stated", "derived" or "trivial"
  std::string note;
  double seconds = 0;
};

struct Report {
  std::string suite;
  std::vector<CaseResult> cases;

  // compares computed with expected; mismatch becomes FAIL, or WARN when mismatch_warns
  CaseResult& check(const std::string& id, const std::string& location, const json& computed,
                    const json& expected, const std::string& provenance = "stated", bool mismatch_warns = false);
  CaseResult& add(CaseResult c);
  CaseResult& skip(const std::string& id, const std::string& location, const std::string& why);
  void merge(const Report& other);

  size_t count(Status s) const;
  bool has_fail() const { return count(Status::Fail) > 0; }
  json to_json(bool with_timing = true) const;
  std::string to_text(bool verbose = false) const;
};

// runs body; exceptions turn into one FAIL case with the message, and every case body adds gets timed
void run_case(Report& r, const std::string& id, const std::string& location, const std::function<void()>& body);

}  // namespace dtg
