#include "fanotk/report.hpp"

#include <fnmatch.h>

#include <algorithm>
#include <chrono>
#include <cmath>
#include <sstream>

namespace fanotk::report {

std::string status_text(Status s) {
  switch (s) {
    case Status::Pass: return "pass";
    case Status::Fail: return "fail";
    case Status::Axiom: return "axiom";
  }
  return "fail";
}

Summary Report::summary() const {
  Summary s;
  for (const auto& c : checks) {
    switch (c.status) {
      case Status::Pass: ++s.pass; break;
      case Status::Fail: ++s.fail; break;
      case Status::Axiom: ++s.axiom; break;
    }
  }
  return s;
}

bool id_matches(const std::string& pattern, const std::string& id) {
  return fnmatch(pattern.c_str(), id.c_str(), 0) == 0;
}

Report run_checks(const RunOptions& opts) { return run_checks(registry(), opts); }

Report run_checks(const std::vector<CheckDef>& defs, const RunOptions& opts) {
  std::vector<const CheckDef*> selected;
  for (const auto& d : defs) {
    if (!opts.filter || id_matches(*opts.filter, d.id)) selected.push_back(&d);
  }
  if (selected.empty()) throw UsageError("no check matches '" + opts.filter.value_or("") + "'");
  std::sort(selected.begin(), selected.end(), [](auto* a, auto* b) { return a->id < b->id; });

  Report r;
  r.version = FANOTK_VERSION;
  r.field_config = {{"base", "Q"}, {"extension", "Q(sqrt5)"}, {"phi", "(1+sqrt5)/2"}, {"arithmetic", "exact"}};
  for (const auto* d : selected) {
    CheckResult res{d->id, d->claim, d->anchor, Status::Fail, Json::object(), 0};
    auto start = std::chrono::steady_clock::now();
    try {
      Outcome o = d->run();
      res.status = o.status;
      res.witness = std::move(o.witness);
    } catch (const std::exception& e) {
      res.status = Status::Fail;
      res.witness = {{"error", e.what()}};
    }
    if (opts.timings) {
      std::chrono::duration<double, std::milli> dt = std::chrono::steady_clock::now() - start;
      res.elapsed_ms = std::round(dt.count() * 1000) / 1000;
    }
    r.checks.push_back(std::move(res));
  }
  return r;
}

Json to_json(const Report& r) {
  Json checks = Json::array();
  for (const auto& c : r.checks) {
    checks.push_back({{"id", c.id},
                      {"claim", c.claim},
                      {"anchor", c.anchor},
                      {"status", status_text(c.status)},
                      {"witness", c.witness},
                      {"elapsed_ms", c.elapsed_ms}});
  }
  auto s = r.summary();
  return {{"version", r.version},
          {"field_config", r.field_config},
          {"checks", checks},
          {"summary", {{"pass", s.pass}, {"fail", s.fail}, {"axiom", s.axiom}}}};
}

std::string emit_json(const Report& r) { return to_json(r).dump(2) + "\n"; }

std::string emit_text(const Report& r) {
  std::size_t w = 2;
  for (const auto& c : r.checks) w = std::max(w, c.id.size());
  auto pad = [](std::string s, std::size_t n) {
    s.resize(std::max(s.size(), n), ' ');
    return s;
  };
  std::ostringstream out;
  out << pad("ID", w) << "  " << pad("STATUS", 6) << "  CLAIM\n";
  for (const auto& c : r.checks) {
    out << pad(c.id, w) << "  " << pad(status_text(c.status), 6) << "  " << c.claim << "\n";
  }
  auto s = r.summary();
  out << "\npass " << s.pass << "  fail " << s.fail << "  axiom " << s.axiom << "\n";
  return out.str();
}

int exit_code(const Report& r) { return r.summary().fail == 0 ? 0 : 1; }

}  // namespace fanotk::report
