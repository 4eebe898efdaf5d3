#include "ogq/ogq.h"

#include <map>
#include <memory>
#include <sstream>
#include <string>

#include "json.hpp"
#include "ogq/bgg.hpp"
#include "ogq/defcheck.hpp"
#include "ogq/error.hpp"
#include "ogq/schubert.hpp"
#include "ogq/verify.hpp"
#include "ogq/wdvv.hpp"

struct ogq_engine {
  ogq::wdvv::GWTable table;
  std::unique_ptr<ogq::wdvv::Bootstrapper> boot;
  int jobs = 1;
  ogq_format format = OGQ_FORMAT_TEXT;
  std::string result;
  std::string error;
  std::string value;

  ogq::wdvv::Bootstrapper& bootstrapper() {
    if (!boot) boot = std::make_unique<ogq::wdvv::Bootstrapper>(table, ogq::wdvv::BootstrapOptions{true, jobs});
    return *boot;
  }
  bool json() const { return format == OGQ_FORMAT_JSON; }
};

namespace {

using ordered_json = nlohmann::ordered_json;

template <class Fn>
ogq_status guarded(ogq_engine* e, Fn&& fn) {
  if (e == nullptr) return OGQ_ERR_ARGUMENT;
  e->result.clear();
  e->error.clear();
  try {
    fn();
    return OGQ_OK;
  } catch (const ogq::ParseError& x) {
    e->error = x.what();
    return OGQ_ERR_PARSE;
  } catch (const ogq::DimensionError& x) {
    e->error = x.what();
    return OGQ_ERR_DIMENSION;
  } catch (const ogq::DomainError& x) {
    e->error = x.what();
    return OGQ_ERR_DOMAIN;
  } catch (const ogq::Underdetermined& x) {
    e->error = x.what();
    return OGQ_ERR_UNDERDETERMINED;
  } catch (const ogq::InconsistentDerivation& x) {
    e->error = x.what();
    return OGQ_ERR_INCONSISTENT;
  } catch (const ogq::FixtureError& x) {
    e->error = x.what();
    return OGQ_ERR_FIXTURE;
  } catch (const ogq::IndivisibleError& x) {
    e->error = x.what();
    return OGQ_ERR_INDIVISIBLE;
  } catch (const ogq::IoError& x) {
    e->error = x.what();
    return OGQ_ERR_IO;
  } catch (const std::exception& x) {
    e->error = x.what();
    return OGQ_ERR_INTERNAL;
  } catch (...) {
    e->error = "unknown failure";
    return OGQ_ERR_INTERNAL;
  }
}

std::vector<ogq::StrictPartition> classes_arg(const char* text) {
  if (text == nullptr) throw ogq::ParseError("no classes given");
  return ogq::parse_partition_list(text);
}

ordered_json class_list(const std::vector<ogq::StrictPartition>& classes) {
  auto a = ordered_json::array();
  for (const auto& c : classes) a.push_back(c.str());
  return a;
}

}  // namespace

extern "C" {

ogq_engine* ogq_engine_new(void) {
  try {
    return new ogq_engine();
  } catch (...) {
    return nullptr;
  }
}

void ogq_engine_free(ogq_engine* engine) { delete engine; }

const char* ogq_result(const ogq_engine* engine) { return engine ? engine->result.c_str() : ""; }

const char* ogq_last_error(const ogq_engine* engine) { return engine ? engine->error.c_str() : "null engine"; }

const char* ogq_status_name(ogq_status status) {
  switch (status) {
    case OGQ_OK: return "ok";
    case OGQ_ERR_ARGUMENT: return "invalid argument";
    case OGQ_ERR_PARSE: return "parse error";
    case OGQ_ERR_DOMAIN: return "domain error";
    case OGQ_ERR_DIMENSION: return "dimension condition fails";
    case OGQ_ERR_UNDERDETERMINED: return "underdetermined";
    case OGQ_ERR_INCONSISTENT: return "inconsistent derivation";
    case OGQ_ERR_FIXTURE: return "invalid fixture";
    case OGQ_ERR_INDIVISIBLE: return "indivisible";
    case OGQ_ERR_IO: return "i/o error";
    case OGQ_ERR_INTERNAL: return "internal error";
  }
  return "unknown status";
}

ogq_status ogq_set_jobs(ogq_engine* engine, int jobs) {
  if (engine == nullptr || jobs < 1) return OGQ_ERR_ARGUMENT;
  engine->jobs = jobs;
  engine->boot.reset();
  return OGQ_OK;
}

ogq_status ogq_set_format(ogq_engine* engine, ogq_format format) {
  if (engine == nullptr || (format != OGQ_FORMAT_TEXT && format != OGQ_FORMAT_JSON)) return OGQ_ERR_ARGUMENT;
  engine->format = format;
  return OGQ_OK;
}

ogq_status ogq_cache_load(ogq_engine* engine, const char* path) {
  if (path == nullptr) return OGQ_ERR_ARGUMENT;
  return guarded(engine, [&] {
    engine->table.merge(ogq::wdvv::GWTable::load(path));
    engine->result = std::to_string(engine->table.size()) + " cached invariants\n";
  });
}

ogq_status ogq_cache_save(ogq_engine* engine, const char* path) {
  if (path == nullptr) return OGQ_ERR_ARGUMENT;
  return guarded(engine, [&] {
    engine->table.save(path);
    engine->result = std::to_string(engine->table.size()) + " invariants written\n";
  });
}

ogq_status ogq_cache_size(const ogq_engine* engine, unsigned long* size) {
  if (engine == nullptr || size == nullptr) return OGQ_ERR_ARGUMENT;
  *size = static_cast<unsigned long>(engine->table.size());
  return OGQ_OK;
}

ogq_status ogq_lines(ogq_engine* engine, const char* classes) {
  return guarded(engine, [&] {
    const auto cls = classes_arg(classes);
    const ogq::Rat v = ogq::bgg::line_invariant(cls, 5);
    if (engine->json()) {
      ordered_json j{{"degree", 1}, {"classes", class_list(cls)}, {"value", v.str()}};
      engine->result = j.dump() + "\n";
    } else {
      engine->result = v.str() + "\n";
    }
  });
}

ogq_status ogq_lines_enumerate(ogq_engine* engine) {
  return guarded(engine, [&] {
    const auto all = ogq::bgg::enumerate_line_numbers(5, engine->jobs);
    for (const auto& ln : all)
      engine->table.insert(ogq::wdvv::GWKey::make(1, ln.classes),
                           ogq::wdvv::Entry{ln.value, ogq::wdvv::Provenance::LineFormula, 0, {}});
    if (engine->json()) {
      auto arr = ordered_json::array();
      for (const auto& ln : all) arr.push_back({{"classes", class_list(ln.classes)}, {"value", ln.value.str()}});
      ordered_json j{{"count", all.size()}, {"line_numbers", arr}};
      engine->result = j.dump(1) + "\n";
    } else {
      std::ostringstream os;
      for (const auto& ln : all) os << ogq::wdvv::GWKey::make(1, ln.classes).str() << " = " << ln.value << '\n';
      os << "count: " << all.size() << '\n';
      engine->result = os.str();
    }
  });
}

ogq_status ogq_classical(ogq_engine* engine, const char* classes) {
  return guarded(engine, [&] {
    const auto cls = classes_arg(classes);
    if (cls.size() == 2) {
      const auto& p = ogq::schubert::mult(cls[0], cls[1]);
      engine->result = engine->json()
                           ? ordered_json{{"product", class_list(cls)}, {"value", p.str()}}.dump() + "\n"
                           : p.str() + "\n";
    } else if (cls.size() == 3) {
      for (const auto& c : cls) ogq::schubert::basis_index(c);
      const long v = ogq::schubert::triple(cls[0], cls[1], cls[2]);
      engine->result = engine->json()
                           ? ordered_json{{"triple", class_list(cls)}, {"value", std::to_string(v)}}.dump() + "\n"
                           : std::to_string(v) + "\n";
    } else {
      throw ogq::ParseError("classical takes two classes (product) or three (triple intersection)");
    }
  });
}

ogq_status ogq_gw(ogq_engine* engine, int degree, const char* classes, const char** value_out) {
  return guarded(engine, [&] {
    const auto key = ogq::wdvv::GWKey::make(degree, classes_arg(classes));
    const ogq::Rat v = engine->bootstrapper().value(key);
    engine->value = v.str();
    if (value_out != nullptr) *value_out = engine->value.c_str();
    const auto* entry = engine->table.find(key);
    const std::string prov = entry ? entry->provenance_str() : "";
    if (engine->json()) {
      ordered_json j{{"key", key.str()}, {"degree", degree}, {"classes", class_list(key.classes)}, {"value", v.str()},
                     {"provenance", prov}};
      if (entry && !entry->witness.empty()) j["witness"] = entry->witness;
      engine->result = j.dump() + "\n";
    } else {
      engine->result = v.str() + "\n";
    }
  });
}

ogq_status ogq_bootstrap(ogq_engine* engine, const char* tables_dir) {
  return guarded(engine, [&] {
    auto& boot = engine->bootstrapper();
    if (engine->jobs > 1) boot.prefetch_lines();
    std::vector<ogq::wdvv::GWKey> targets;
    if (tables_dir != nullptr) {
      for (const auto& t : ogq::verify::load_table_dir(tables_dir)) {
        for (const auto& line : t.lines) {
          if (line.rfind("gw ", 0) != 0) continue;
          std::istringstream is(line.substr(3, line.find('=') - 3));
          int d = 0;
          is >> d;
          std::vector<ogq::StrictPartition> cls;
          for (std::string a; is >> a;) cls.push_back(ogq::StrictPartition::parse(a));
          targets.push_back(ogq::wdvv::GWKey::make(d, cls));
        }
      }
    }
    const auto septic = ogq::wdvv::GWKey::make(7, std::vector<ogq::StrictPartition>(7, ogq::StrictPartition{4, 3, 2, 1}));
    targets.push_back(septic);
    boot.run(targets);
    const ogq::Rat v = boot.value(septic);
    std::map<int, std::size_t> per_degree;
    std::map<std::string, std::size_t> per_rule;
    for (const auto& [k, e] : engine->table.entries()) {
      ++per_degree[k.d];
      std::string rule = e.provenance_str();
      if (rule.rfind("wdvv", 0) == 0) rule = "wdvv";
      ++per_rule[rule];
    }
    if (engine->json()) {
      ordered_json j;
      j["septics"] = v.str();
      j["targets"] = targets.size();
      j["entries"] = engine->table.size();
      ordered_json pd, pr;
      for (const auto& [d, n] : per_degree) pd[std::to_string(d)] = n;
      for (const auto& [r, n] : per_rule) pr[r] = n;
      j["entries_by_degree"] = pd;
      j["entries_by_provenance"] = pr;
      j["solved"] = boot.solved();
      j["cross_checks"] = boot.cross_checks();
      engine->result = j.dump(2) + "\n";
    } else {
      std::ostringstream os;
      os << septic.str() << " = " << v << '\n';
      os << "targets: " << targets.size() << '\n';
      os << "entries: " << engine->table.size() << '\n';
      for (const auto& [d, n] : per_degree) os << "  degree " << d << ": " << n << '\n';
      for (const auto& [r, n] : per_rule) os << "  " << r << ": " << n << '\n';
      os << "solved by relations: " << boot.solved() << '\n';
      os << "cross-checks: " << boot.cross_checks() << '\n';
      engine->result = os.str();
    }
  });
}

ogq_status ogq_verify(ogq_engine* engine, const char* tables_dir, int* passed) {
  if (tables_dir == nullptr || passed == nullptr) return OGQ_ERR_ARGUMENT;
  return guarded(engine, [&] {
    const auto report = ogq::verify::run(ogq::verify::load_table_dir(tables_dir), engine->bootstrapper());
    *passed = report.pass() ? 1 : 0;
    engine->result = engine->json() ? report.json() : report.text();
  });
}

ogq_status ogq_defcheck(ogq_engine* engine, const char* fixture_path, int* unramified) {
  if (fixture_path == nullptr || unramified == nullptr) return OGQ_ERR_ARGUMENT;
  return guarded(engine, [&] {
    namespace dc = ogq::defcheck;
    const auto fix = dc::load_fixture(fixture_path);
    dc::validate(fix);
    const auto v = dc::check_unramified(fix);
    *unramified = v.unramified ? 1 : 0;
    const auto& names = dc::unknown_names();
    if (engine->json()) {
      ordered_json j;
      j["verdict"] = v.unramified ? "UNRAMIFIED" : "NOT-UNRAMIFIED";
      j["rank"] = v.rank;
      j["unknowns"] = names;
      j["kernel_dimension"] = v.kernel.size();
      auto basis = ordered_json::array();
      for (const auto& vec : v.kernel) {
        auto a = ordered_json::array();
        for (const auto& x : vec) a.push_back(x.str());
        basis.push_back(a);
      }
      j["kernel"] = basis;
      j["trivial_direction_in_kernel"] = v.trivial_in_kernel;
      engine->result = j.dump(2) + "\n";
    } else {
      std::ostringstream os;
      os << "verdict: " << (v.unramified ? "UNRAMIFIED" : "NOT-UNRAMIFIED") << '\n';
      os << "rank: " << v.rank << " of " << names.size() << " unknowns\n";
      os << "kernel dimension: " << v.kernel.size() << '\n';
      for (const auto& vec : v.kernel) {
        os << " ";
        for (std::size_t i = 0; i < vec.size(); ++i)
          if (!vec[i].is_zero()) os << ' ' << names[i] << '=' << vec[i];
        os << '\n';
      }
      engine->result = os.str();
    }
  });
}

const char* ogq_version(void) { return "1.0.0"; }

}  // extern "C"
