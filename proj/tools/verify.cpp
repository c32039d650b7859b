#include <fstream>
#include <iostream>

#include <CLI11.hpp>

#include "fanotk/report.hpp"

using namespace fanotk::report;

namespace {

constexpr int kExitUsage = 2;
constexpr int kExitIo = 3;

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Run exact algebraic checks and report the results", "verify"};
  std::string pattern;
  std::string format = "text";
  std::string out_path;
  bool list = false;
  bool timings = false;
  app.add_option("--check", pattern, "Run only checks whose id matches this glob");
  app.add_option("--format", format, "Output format")->check(CLI::IsMember({"text", "json"}));
  app.add_option("--out", out_path, "Write the report to this file instead of stdout");
  app.add_flag("--list", list, "List check ids with anchors");
  app.add_flag("--timings", timings, "Record elapsed_ms per check");
  app.set_version_flag("--version", FANOTK_VERSION);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int rc = app.exit(e);
    return rc == 0 ? 0 : kExitUsage;
  }

  if (list) {
    for (const auto& d : registry()) {
      if (pattern.empty() || id_matches(pattern, d.id)) std::cout << d.id << "\t" << d.anchor << "\n";
    }
    return 0;
  }

  Report r;
  try {
    RunOptions opts;
    if (!pattern.empty()) opts.filter = pattern;
    opts.timings = timings;
    r = run_checks(opts);
  } catch (const UsageError& e) {
    std::cerr << "verify: " << e.what() << "\n";
    return kExitUsage;
  }

  const std::string text = format == "json" ? emit_json(r) : emit_text(r);
  if (out_path.empty()) {
    std::cout << text;
  } else {
    std::ofstream f(out_path, std::ios::binary);
    if (!f || !(f << text) || !f.flush()) {
      std::cerr << "verify: cannot write " << out_path << "\n";
      return kExitIo;
    }
  }
  return exit_code(r);
}
