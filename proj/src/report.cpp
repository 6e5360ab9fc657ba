#include "dtg/report.hpp"

#include <chrono>
#include <cstdio>
#include <sstream>

namespace dtg {

std::string status_str(Status s) {
  switch (s) {
    case Status::Pass: return "PASS";
    case Status::Warn: return "WARN";
    case Status::Fail: return "FAIL";
    case Status::Skipped: return "SKIPPED";
  }
  return "?";
}

CaseResult& Report::check(const std::string& id, const std::string& location, const json& computed,
                          const json& expected, const std::string& provenance, bool mismatch_warns) {
  CaseResult c;
  c.id = id;
  c.location = location;
  c.computed = computed;
  c.expected = expected;
  c.provenance = provenance;
  if (computed != expected) c.status = mismatch_warns ? Status::Warn : Status::Fail;
  return add(std::move(c));
}

CaseResult& Report::add(CaseResult c) {
  cases.push_back(std::move(c));
  return cases.back();
}

CaseResult& Report::skip(const std::string& id, const std::string& location, const std::string& why) {
  CaseResult c;
  c.id = id;
  c.location = location;
  c.status = Status::Skipped;
  c.note = why;
  return add(std::move(c));
}

void Report::merge(const Report& other) {
  for (const auto& c : other.cases) cases.push_back(c);
}

size_t Report::count(Status s) const {
  size_t n = 0;
  for (const auto& c : cases)
    if (c.status == s) ++n;
  return n;
}

json Report::to_json(bool with_timing) const {
  json j;
  j["suite"] = suite;
  j["summary"] = {{"pass", count(Status::Pass)},
                  {"warn", count(Status::Warn)},
                  {"fail", count(Status::Fail)},
                  {"skipped", count(Status::Skipped)}};
  json arr = json::array();
  for (const auto& c : cases) {
    json e;
    e["id"] = c.id;
    e["location"] = c.location;
    e["status"] = status_str(c.status);
    e["computed"] = c.computed;
    e["expected"] = c.expected;
    e["provenance"] = c.provenance;
    if (!c.note.empty()) e["note"] = c.note;
    if (with_timing) e["seconds"] = c.seconds;
    arr.push_back(std::move(e));
  }
  j["cases"] = std::move(arr);
  return j;
}

std::string Report::to_text(bool verbose) const {
  std::ostringstream os;
  for (const auto& c : cases) {
    bool show = verbose || c.status != Status::Pass;
    os << status_str(c.status);
    for (size_t i = status_str(c.status).size(); i < 8; ++i) os << ' ';
    os << c.id;
    if (show) {
      if (!c.computed.is_null()) os << "  computed=" << c.computed.dump();
      if (!c.expected.is_null()) os << "  expected=" << c.expected.dump();
      if (!c.note.empty()) os << "  (" << c.note << ")";
    }
    os << "\n";
  }
  os << suite << ": " << count(Status::Pass) << " pass, " << count(Status::Warn) << " warn, "
     << count(Status::Fail) << " fail, " << count(Status::Skipped) << " skipped\n";
  return os.str();
}

void run_case(Report& r, const std::string& id, const std::string& location, const std::function<void()>& body) {
  size_t before = r.cases.size();
  auto t0 = std::chrono::steady_clock::now();
  try {
    body();
  } catch (const std::exception& e) {
    CaseResult c;
    c.id = id;
    c.location = location;
    c.status = Status::Fail;
    c.note = e.what();
    r.add(std::move(c));
  }
  double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  size_t added = r.cases.size() - before;
  for (size_t i = before; i < r.cases.size(); ++i) r.cases[i].seconds = secs / static_cast<double>(added);
}

}  // namespace dtg
