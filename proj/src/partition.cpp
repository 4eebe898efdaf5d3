#include "ogq/partition.hpp"

#include <algorithm>
#include <sstream>

#include "ogq/error.hpp"

namespace ogq {

StrictPartition::StrictPartition(std::vector<int> parts) : parts_(std::move(parts)) {
  for (std::size_t i = 0; i < parts_.size(); ++i) {
    if (parts_[i] < 1) throw DomainError("partition parts must be positive");
    if (i > 0 && parts_[i] >= parts_[i - 1]) throw DomainError("partition parts must be strictly decreasing");
    weight_ += parts_[i];
  }
}

StrictPartition StrictPartition::parse(std::string_view text) {
  if (text == "0" || text == "()") return StrictPartition();
  std::vector<int> parts;
  if (text.find(',') != std::string_view::npos) {
    std::size_t start = 0;
    while (start <= text.size()) {
      const auto comma = text.find(',', start);
      const auto piece = text.substr(start, comma == std::string_view::npos ? std::string_view::npos : comma - start);
      if (piece.empty()) throw ParseError("empty part in '" + std::string(text) + "'");
      int v = 0;
      for (char c : piece) {
        if (c < '0' || c > '9') throw ParseError("bad partition '" + std::string(text) + "'");
        v = v * 10 + (c - '0');
        if (v > 1000) throw ParseError("part too large in '" + std::string(text) + "'");
      }
      parts.push_back(v);
      if (comma == std::string_view::npos) break;
      start = comma + 1;
    }
  } else {
    if (text.empty()) throw ParseError("empty partition token");
    for (char c : text) {
      if (c < '1' || c > '9') throw ParseError("bad partition '" + std::string(text) + "'");
      parts.push_back(c - '0');
    }
  }
  try {
    return StrictPartition(std::move(parts));
  } catch (const DomainError& e) {
    throw ParseError("'" + std::string(text) + "': " + e.what());
  }
}

std::string StrictPartition::str() const {
  if (parts_.empty()) return "0";
  std::ostringstream os;
  const bool digits = parts_.front() < 10;
  for (std::size_t i = 0; i < parts_.size(); ++i) {
    if (!digits && i > 0) os << ',';
    os << parts_[i];
  }
  return os.str();
}

bool canonical_less(const StrictPartition& a, const StrictPartition& b) {
  if (a.weight() != b.weight()) return a.weight() < b.weight();
  return a > b;
}

void canonical_sort(std::vector<StrictPartition>& classes) {
  std::sort(classes.begin(), classes.end(), canonical_less);
}

std::string join_classes(const std::vector<StrictPartition>& classes, const std::string& sep) {
  std::string out;
  for (std::size_t i = 0; i < classes.size(); ++i) {
    if (i > 0) out += sep;
    out += classes[i].str();
  }
  return out;
}

namespace {

void strict_rec(int remaining, int max_part, std::vector<int>& acc, std::vector<StrictPartition>& out) {
  if (remaining == 0) {
    out.emplace_back(acc);
    return;
  }
  for (int p = std::min(remaining, max_part); p >= 1; --p) {
    acc.push_back(p);
    strict_rec(remaining - p, p - 1, acc, out);
    acc.pop_back();
  }
}

void odd_rec(int remaining, int max_part, std::vector<int>& acc, std::vector<std::vector<int>>& out) {
  if (remaining == 0) {
    out.push_back(acc);
    return;
  }
  for (int p = std::min(remaining, max_part); p >= 1; --p) {
    if (p % 2 == 0) continue;
    acc.push_back(p);
    odd_rec(remaining - p, p, acc, out);
    acc.pop_back();
  }
}

}  // namespace

std::vector<StrictPartition> strict_partitions(int weight, int max_part) {
  std::vector<StrictPartition> out;
  if (weight < 0) return out;
  std::vector<int> acc;
  strict_rec(weight, max_part, acc, out);
  return out;
}

std::vector<std::vector<int>> odd_partitions(int weight) {
  std::vector<std::vector<int>> out;
  if (weight < 0) return out;
  std::vector<int> acc;
  odd_rec(weight, weight, acc, out);
  return out;
}

std::vector<StrictPartition> parse_partition_list(std::string_view text) {
  std::vector<StrictPartition> out;
  std::istringstream is{std::string(text)};
  std::string token;
  while (is >> token) out.push_back(StrictPartition::parse(token));
  return out;
}

}  // namespace ogq
