#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "ogq/wdvv.hpp"

namespace ogq::verify {

/// FNV-1a 64 over each line followed by '\n'.
std::uint64_t fnv1a64(const std::vector<std::string>& lines);

/// A table fixture: `# title`, `checksum = fnv1a64:<hex>`, then data lines
/// of the form `mult A B = expr` or `gw d c1 c2 ... = value`.
struct TableFile {
  std::string name;
  std::string title;
  std::string checksum;             // as written in the file
  std::vector<std::string> lines;   // data lines, in order
  bool checksum_ok() const;
};

TableFile parse_table_file(const std::string& name, const std::string& text);
TableFile load_table_file(const std::string& path);
/// Every *.txt file of `dir`, sorted by name. IoError if `dir` is missing or
/// holds no tables.
std::vector<TableFile> load_table_dir(const std::string& dir);

struct Row {
  std::string key;
  std::string expected;
  std::string computed;
  bool match = false;
};

struct TableReport {
  std::string name;
  std::string title;
  bool checksum_ok = false;
  std::vector<Row> rows;
  std::size_t mismatches() const;
  bool pass() const { return checksum_ok && mismatches() == 0; }
};

/// Informational count, never a failure.
struct Census {
  std::string name;
  long expected = 0;
  long computed = 0;
};

struct Report {
  std::vector<TableReport> tables;
  std::vector<Census> censuses;
  long runtime_ms = 0;
  bool pass() const;

  std::string text() const;
  std::string json() const;
};

/// Recomputes every row. GW rows go through `boot`, ring rows through the
/// multiplication table. A row whose computation throws is a mismatch with
/// the error text as its computed value.
Report run(const std::vector<TableFile>& tables, wdvv::Bootstrapper& boot);

/// The 1071 line-number and 1459 conic-number counts.
std::vector<Census> censuses();

}  // namespace ogq::verify
