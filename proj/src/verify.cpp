#include "ogq/verify.hpp"

#include <algorithm>
#include <chrono>
#include <filesystem>
#include <fstream>
#include <iomanip>
#include <sstream>

#include "json.hpp"
#include "ogq/bgg.hpp"
#include "ogq/error.hpp"
#include "ogq/schubert.hpp"

namespace ogq::verify {

namespace {

std::string trim(const std::string& s) {
  const auto b = s.find_first_not_of(" \t\r");
  if (b == std::string::npos) return "";
  return s.substr(b, s.find_last_not_of(" \t\r") - b + 1);
}

std::string hex64(std::uint64_t v) {
  std::ostringstream os;
  os << std::hex << std::setw(16) << std::setfill('0') << v;
  return os.str();
}

}  // namespace

std::uint64_t fnv1a64(const std::vector<std::string>& lines) {
  std::uint64_t h = 0xcbf29ce484222325ULL;
  auto feed = [&](unsigned char c) {
    h ^= c;
    h *= 0x100000001b3ULL;
  };
  for (const auto& l : lines) {
    for (unsigned char c : l) feed(c);
    feed('\n');
  }
  return h;
}

bool TableFile::checksum_ok() const { return checksum == "fnv1a64:" + hex64(fnv1a64(lines)); }

TableFile parse_table_file(const std::string& name, const std::string& text) {
  TableFile t;
  t.name = name;
  std::istringstream is(text);
  std::string line;
  while (std::getline(is, line)) {
    if (!line.empty() && line.back() == '\r') line.pop_back();
    const std::string body = trim(line);
    if (body.empty()) continue;
    if (body[0] == '#') {
      if (t.title.empty()) t.title = trim(body.substr(1));
      continue;
    }
    if (body.rfind("checksum", 0) == 0) {
      const auto eq = body.find('=');
      if (eq == std::string::npos) throw ParseError(name + ": malformed checksum line");
      t.checksum = trim(body.substr(eq + 1));
      continue;
    }
    t.lines.push_back(body);
  }
  if (t.checksum.empty()) throw ParseError(name + ": no checksum line");
  return t;
}

TableFile load_table_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw IoError("cannot read table " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return parse_table_file(std::filesystem::path(path).filename().string(), ss.str());
}

std::vector<TableFile> load_table_dir(const std::string& dir) {
  namespace fs = std::filesystem;
  std::error_code ec;
  if (!fs::is_directory(dir, ec)) throw IoError("table directory not found: " + dir);
  std::vector<std::string> paths;
  for (const auto& e : fs::directory_iterator(dir))
    if (e.is_regular_file() && e.path().extension() == ".txt") paths.push_back(e.path().string());
  std::sort(paths.begin(), paths.end());
  if (paths.empty()) throw IoError("no table fixtures in " + dir);
  std::vector<TableFile> out;
  for (const auto& p : paths) out.push_back(load_table_file(p));
  return out;
}

std::size_t TableReport::mismatches() const {
  return static_cast<std::size_t>(std::count_if(rows.begin(), rows.end(), [](const Row& r) { return !r.match; }));
}

bool Report::pass() const {
  return !tables.empty() && std::all_of(tables.begin(), tables.end(), [](const TableReport& t) { return t.pass(); });
}

namespace {

Row check_line(const std::string& line, wdvv::Bootstrapper& boot) {
  const auto eq = line.find('=');
  if (eq == std::string::npos) throw ParseError("table line without '=': " + line);
  const std::string lhs = trim(line.substr(0, eq));
  Row row;
  row.expected = trim(line.substr(eq + 1));
  std::istringstream is(lhs);
  std::string kind;
  is >> kind;
  std::vector<std::string> args;
  for (std::string a; is >> a;) args.push_back(a);
  try {
    if (kind == "mult") {
      if (args.size() != 2) throw ParseError("mult needs two classes: " + line);
      const auto a = StrictPartition::parse(args[0]);
      const auto b = StrictPartition::parse(args[1]);
      row.key = "tau_" + a.str() + " * tau_" + b.str();
      const auto expected = schubert::CohoElem::parse(row.expected);
      const auto& got = schubert::mult(a, b);
      row.computed = got.str();
      row.match = got == expected;
    } else if (kind == "gw") {
      if (args.empty()) throw ParseError("gw needs a degree: " + line);
      const int d = std::stoi(args[0]);
      std::vector<StrictPartition> classes;
      for (std::size_t i = 1; i < args.size(); ++i) classes.push_back(StrictPartition::parse(args[i]));
      const auto key = wdvv::GWKey::make(d, classes);
      row.key = key.str();
      const Rat got = boot.value(key);
      row.computed = got.str();
      row.match = got == Rat::parse(row.expected);
    } else {
      throw ParseError("unknown table row kind '" + kind + "'");
    }
  } catch (const ParseError&) {
    throw;
  } catch (const Error& e) {
    if (row.key.empty()) row.key = lhs;
    row.computed = std::string("error: ") + e.what();
    row.match = false;
  }
  return row;
}

}  // namespace

std::vector<Census> censuses() {
  return {
      Census{"line numbers (unordered multisets, codimension >= 2)", 1071, static_cast<long>(bgg::line_keys(5).size())},
      Census{"conic numbers determined by cases 1-17", 1459, static_cast<long>(wdvv::conic_case_keys().size())},
  };
}

Report run(const std::vector<TableFile>& tables, wdvv::Bootstrapper& boot) {
  const auto start = std::chrono::steady_clock::now();
  Report rep;
  for (const auto& t : tables) {
    TableReport tr{t.name, t.title, t.checksum_ok(), {}};
    for (const auto& line : t.lines) tr.rows.push_back(check_line(line, boot));
    rep.tables.push_back(std::move(tr));
  }
  rep.censuses = censuses();
  rep.runtime_ms = static_cast<long>(
      std::chrono::duration_cast<std::chrono::milliseconds>(std::chrono::steady_clock::now() - start).count());
  return rep;
}

std::string Report::text() const {
  std::ostringstream os;
  std::size_t rows = 0, bad = 0;
  for (const auto& t : tables) {
    os << "== " << t.name << " (" << t.title << ")";
    if (!t.checksum_ok) os << " CHECKSUM MISMATCH";
    os << '\n';
    for (const auto& r : t.rows) {
      os << (r.match ? "  ok   " : "  FAIL ") << r.key << " expected " << r.expected << " computed " << r.computed << '\n';
    }
    os << "  " << t.rows.size() - t.mismatches() << "/" << t.rows.size() << " match\n";
    rows += t.rows.size();
    bad += t.mismatches();
  }
  os << "censuses (informational):\n";
  for (const auto& c : censuses)
    os << "  " << c.name << ": computed " << c.computed << ", reference " << c.expected
       << (c.computed == c.expected ? "" : " (differs)") << '\n';
  os << "summary: " << rows - bad << "/" << rows << " entries match, " << tables.size() << " tables\n";
  os << "runtime_ms: " << runtime_ms << '\n';
  os << "verdict: " << (pass() ? "PASS" : "FAIL") << '\n';
  return os.str();
}

std::string Report::json() const {
  nlohmann::ordered_json j;
  j["verdict"] = pass() ? "PASS" : "FAIL";
  auto ts = nlohmann::ordered_json::array();
  for (const auto& t : tables) {
    nlohmann::ordered_json jt;
    jt["name"] = t.name;
    jt["title"] = t.title;
    jt["checksum_ok"] = t.checksum_ok;
    jt["mismatches"] = t.mismatches();
    auto rows = nlohmann::ordered_json::array();
    for (const auto& r : t.rows)
      rows.push_back({{"key", r.key}, {"expected", r.expected}, {"computed", r.computed}, {"match", r.match}});
    jt["rows"] = rows;
    ts.push_back(jt);
  }
  j["tables"] = ts;
  auto cs = nlohmann::ordered_json::array();
  for (const auto& c : censuses)
    cs.push_back({{"name", c.name}, {"reference", c.expected}, {"computed", c.computed}});
  j["censuses"] = cs;
  j["runtime_ms"] = runtime_ms;
  return j.dump(2) + "\n";
}

}  // namespace ogq::verify
