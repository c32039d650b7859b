#pragma once

#include <functional>
#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

namespace fanotk::report {

using Json = nlohmann::ordered_json;

enum class Status { Pass, Fail, Axiom };

std::string status_text(Status s);

struct Outcome {
  Status status = Status::Fail;
  Json witness = Json::object();
};

struct CheckDef {
  std::string id;
  std::string claim;
  std::string anchor;
  std::function<Outcome()> run;
};

struct CheckResult {
  std::string id;
  std::string claim;
  std::string anchor;
  Status status = Status::Fail;
  Json witness = Json::object();
  double elapsed_ms = 0;
};

struct Summary {
  std::size_t pass = 0;
  std::size_t fail = 0;
  std::size_t axiom = 0;
};

struct Report {
  std::string version;
  Json field_config;
  std::vector<CheckResult> checks;

  Summary summary() const;
};

// All registered checks, sorted by id.
const std::vector<CheckDef>& registry();

// Shell-style glob over ids ('*', '?', '[...]').
bool id_matches(const std::string& pattern, const std::string& id);

struct RunOptions {
  std::optional<std::string> filter;
  bool timings = false;
};

class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Runs every check whose id matches the filter, in id order. A check that
// throws is recorded as a failure with the message as witness. Throws
// UsageError when the filter matches nothing.
Report run_checks(const RunOptions& opts = {});
Report run_checks(const std::vector<CheckDef>& defs, const RunOptions& opts);

Json to_json(const Report& r);
std::string emit_json(const Report& r);
std::string emit_text(const Report& r);

// 0 when no check failed, 1 otherwise.
int exit_code(const Report& r);

}  // namespace fanotk::report
