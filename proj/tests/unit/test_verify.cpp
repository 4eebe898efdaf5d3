#include <sstream>

#include "doctest.h"
#include "ogq/error.hpp"
#include "ogq/verify.hpp"
#include "support.hpp"

using namespace ogq;
using namespace ogq::verify;

TEST_CASE("FNV-1a reference values") {
  CHECK(fnv1a64({}) == 0xcbf29ce484222325ULL);
  // "a\n"
  std::uint64_t h = 0xcbf29ce484222325ULL;
  for (unsigned char c : std::string("a\n")) {
    h ^= c;
    h *= 0x100000001b3ULL;
  }
  CHECK(fnv1a64({"a"}) == h);
}

TEST_CASE("shipped tables carry valid checksums") {
  const auto tables = load_table_dir(test::data_path("tables"));
  CHECK(tables.size() == 10);
  std::size_t rows = 0;
  for (const auto& t : tables) {
    CHECK_MESSAGE(t.checksum_ok(), t.name);
    CHECK_FALSE(t.title.empty());
    rows += t.lines.size();
  }
  CHECK(rows == 263);
}

TEST_CASE("a corrupted value fails and names the key") {
  const std::string body = "gw 2 431 432 432 = 7\nmult 2 31 = 2*42 + 321\n";
  std::vector<std::string> lines{"gw 2 431 432 432 = 7", "mult 2 31 = 2*42 + 321"};
  std::ostringstream os;
  os << "# corrupted\nchecksum = fnv1a64:" << std::hex;
  os.width(16);
  os.fill('0');
  os << fnv1a64(lines) << "\n" << body;
  const auto t = parse_table_file("corrupted.txt", os.str());
  CHECK(t.checksum_ok());
  wdvv::GWTable table;
  wdvv::Bootstrapper b(table);
  const auto rep = run({t}, b);
  CHECK_FALSE(rep.pass());
  REQUIRE(rep.tables.size() == 1);
  CHECK(rep.tables[0].mismatches() == 1);
  CHECK(rep.tables[0].rows[0].key == "I2(431,432,432)");
  CHECK(rep.tables[0].rows[0].computed == "2");
  CHECK(rep.text().find("FAIL I2(431,432,432)") != std::string::npos);
  CHECK(rep.json().find("\"verdict\": \"FAIL\"") != std::string::npos);
}

TEST_CASE("an edited table fails its checksum") {
  auto t = load_table_file(test::data_path("tables/conics.txt"));
  CHECK(t.checksum_ok());
  t.lines[0] = "gw 2 2 421 431 4321 = 4";
  CHECK_FALSE(t.checksum_ok());
}

TEST_CASE("reports are deterministic apart from the runtime") {
  const auto t = load_table_file(test::data_path("tables/ring.txt"));
  wdvv::GWTable table;
  wdvv::Bootstrapper b(table);
  auto a = run({t}, b);
  auto c = run({t}, b);
  a.runtime_ms = c.runtime_ms = 0;
  CHECK(a.pass());
  CHECK(a.text() == c.text());
  CHECK(a.json() == c.json());
}

TEST_CASE("table loading errors") {
  CHECK_THROWS_AS(load_table_dir("/nonexistent/tables"), IoError);
  CHECK_THROWS_AS(parse_table_file("x", "gw 1 431 432 = 1\n"), ParseError);
  const auto t = parse_table_file("x", "checksum = fnv1a64:0\nfoo 1 = 2\n");
  wdvv::GWTable table;
  wdvv::Bootstrapper b(table);
  CHECK_THROWS_AS(run({t}, b), ParseError);
}
