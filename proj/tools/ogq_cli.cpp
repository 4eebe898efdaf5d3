#include <cstdio>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "ogq/ogq.h"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitFail = 1;
constexpr int kExitUsage = 2;

int exit_code(ogq_status s) {
  switch (s) {
    case OGQ_OK: return kExitOk;
    case OGQ_ERR_ARGUMENT:
    case OGQ_ERR_PARSE:
    case OGQ_ERR_DOMAIN:
    case OGQ_ERR_DIMENSION: return kExitUsage;
    default: return kExitFail;
  }
}

std::string join(const std::vector<std::string>& v) {
  std::string out;
  for (const auto& s : v) {
    if (!out.empty()) out += ' ';
    out += s;
  }
  return out;
}

struct Engine {
  ogq_engine* e = ogq_engine_new();
  ~Engine() { ogq_engine_free(e); }
};

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Quantum Schubert calculus of OG(5,10): line numbers, associativity bootstrap, deformation check"};
  app.require_subcommand(1);
  app.fallthrough();

  std::string cache;
  std::string format = "text";
  int jobs = 1;
  app.add_option("--cache", cache, "Invariant cache file (read, then extended)");
  app.add_option("--format", format, "Output format")->check(CLI::IsMember({"text", "json"}));
  app.add_option("--jobs", jobs, "Worker threads for line-number enumeration")->check(CLI::PositiveNumber);

  std::vector<std::string> classes;
  bool enumerate = false;
  int degree = 0;
  std::string tables = "data/tables";
  std::string fixture = "data/fixtures/genus7.txt";

  auto* lines = app.add_subcommand("lines", "Line numbers I_1 by divided differences");
  lines->add_option("classes", classes, "Schubert classes, e.g. 2 42 4321");
  lines->add_flag("--enumerate", enumerate, "Print every line number");

  auto* classical = app.add_subcommand("classical", "Cup product of two classes or triple intersection of three");
  classical->add_option("classes", classes, "Schubert classes")->required();

  auto* gw = app.add_subcommand("gw", "Gromov-Witten invariant I_d");
  gw->add_option("-d,--d,--degree", degree, "Curve degree")->required()->check(CLI::NonNegativeNumber);
  gw->add_option("classes", classes, "Schubert classes")->required();

  auto* bootstrap = app.add_subcommand("bootstrap", "Bootstrap from lines up to I_7 at seven points");
  auto* boot_tables = bootstrap->add_option("--tables", tables, "Also solve every gw row of these tables");

  auto* verify = app.add_subcommand("verify", "Recompute the reference tables and diff");
  verify->add_option("--tables", tables, "Directory of table fixtures");

  auto* defcheck = app.add_subcommand("defcheck", "First-order deformation check of a fixture");
  defcheck->add_option("--fixture", fixture, "Fixture file");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int rc = app.exit(e);
    return rc == 0 ? kExitOk : kExitUsage;
  }

  Engine engine;
  if (engine.e == nullptr) return kExitFail;
  ogq_set_format(engine.e, format == "json" ? OGQ_FORMAT_JSON : OGQ_FORMAT_TEXT);
  ogq_set_jobs(engine.e, jobs);

  auto report = [&](ogq_status s) {
    if (s != OGQ_OK) {
      std::fprintf(stderr, "error (%s): %s\n", ogq_status_name(s), ogq_last_error(engine.e));
      return exit_code(s);
    }
    std::fputs(ogq_result(engine.e), stdout);
    return kExitOk;
  };

  if (!cache.empty()) {
    if (const auto s = ogq_cache_load(engine.e, cache.c_str()); s != OGQ_OK) return report(s);
  }
  auto save_cache = [&](int rc) {
    if (cache.empty()) return rc;
    if (const auto s = ogq_cache_save(engine.e, cache.c_str()); s != OGQ_OK) {
      std::fprintf(stderr, "error (%s): %s\n", ogq_status_name(s), ogq_last_error(engine.e));
      return rc == kExitOk ? kExitFail : rc;
    }
    return rc;
  };

  if (lines->parsed()) {
    if (enumerate == !classes.empty()) {
      std::fprintf(stderr, "lines: give either classes or --enumerate\n");
      return kExitUsage;
    }
    if (enumerate) return save_cache(report(ogq_lines_enumerate(engine.e)));
    return report(ogq_lines(engine.e, join(classes).c_str()));
  }
  if (classical->parsed()) return report(ogq_classical(engine.e, join(classes).c_str()));
  if (gw->parsed()) return save_cache(report(ogq_gw(engine.e, degree, join(classes).c_str(), nullptr)));
  if (bootstrap->parsed()) {
    const char* dir = boot_tables->count() > 0 ? tables.c_str() : nullptr;
    return save_cache(report(ogq_bootstrap(engine.e, dir)));
  }
  if (verify->parsed()) {
    int passed = 0;
    const int rc = report(ogq_verify(engine.e, tables.c_str(), &passed));
    return save_cache(rc != kExitOk ? rc : (passed ? kExitOk : kExitFail));
  }
  if (defcheck->parsed()) {
    int unramified = 0;
    const int rc = report(ogq_defcheck(engine.e, fixture.c_str(), &unramified));
    return rc != kExitOk ? rc : (unramified ? kExitOk : kExitFail);
  }
  return kExitUsage;
}
