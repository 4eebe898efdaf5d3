#include "ogq/bgg.hpp"

#include <atomic>
#include <map>
#include <memory>
#include <mutex>
#include <shared_mutex>
#include <thread>

#include "ogq/error.hpp"
#include "ogq/schurp.hpp"

namespace ogq::bgg {

std::string OperatorWord::str() const {
  std::string out;
  for (const auto& s : symbols) {
    if (!out.empty()) out += ' ';
    out += s.kind == OpSymbol::Kind::DHat1 ? std::string("dhat1") : "d" + std::to_string(s.index);
  }
  return out;
}

Poly apply_d(const Poly& f, int i) {
  if (i < 1 || i >= f.nvars()) throw DomainError("d_" + std::to_string(i) + " is undefined on " + std::to_string(f.nvars()) + " variables");
  const int a = i - 1, b = i;
  Poly swapped = f.map_monomials([&](const Monomial& m) {
    Monomial s = m;
    std::swap(s.exp[a], s.exp[b]);
    return std::pair{s, Rat(1)};
  });
  Poly numerator = f - swapped;
  if (numerator.is_zero()) return numerator;
  Poly divisor = Poly::variable(f.nvars(), a) - Poly::variable(f.nvars(), b);
  return exact_div(numerator, divisor);
}

Poly apply_dhat1(const Poly& f) {
  if (f.nvars() < 2) throw DomainError("dhat1 needs at least two variables");
  Poly image = f.map_monomials([](const Monomial& m) {
    Monomial s = m;
    std::swap(s.exp[0], s.exp[1]);
    const bool odd = ((m.exp[0] + m.exp[1]) % 2) == 1;
    return std::pair{s, Rat(odd ? -1 : 1)};
  });
  Poly numerator = f - image;
  if (numerator.is_zero()) return numerator;
  Poly divisor = -(Poly::variable(f.nvars(), 0) + Poly::variable(f.nvars(), 1));
  return exact_div(numerator, divisor);
}

Poly apply_word(const OperatorWord& word, Poly f) {
  for (auto it = word.symbols.rbegin(); it != word.symbols.rend(); ++it) {
    if (f.is_zero()) break;
    f = it->kind == OpSymbol::Kind::DHat1 ? apply_dhat1(f) : apply_d(f, it->index);
  }
  return f;
}

namespace {

// d_{lo..hi} = d_lo d_{lo+1} ... d_hi; empty when lo > hi.
void ascending(OperatorWord& w, int lo, int hi) {
  for (int i = lo; i <= hi; ++i) w.symbols.push_back(OpSymbol::d(i));
}

// d_{hi..lo} = d_hi ... d_lo; empty when hi < lo.
void descending(OperatorWord& w, int hi, int lo) {
  for (int i = hi; i >= lo; --i) w.symbols.push_back(OpSymbol::d(i));
}

}  // namespace

OperatorWord point_word(int n) {
  if (n < 2) throw DomainError("point_word needs n >= 2");
  OperatorWord w;
  int k;
  if (n % 2 == 1) {
    ascending(w, 2, n - 1);
    w.symbols.push_back(OpSymbol::dhat1());
    k = n - 2;
  } else {
    k = n - 1;
  }
  // Blocks d_{2..k} d_{1..k-1} dhat1 with the upper limit dropping by 2.
  for (; k >= 3; k -= 2) {
    ascending(w, 2, k);
    ascending(w, 1, k - 1);
    w.symbols.push_back(OpSymbol::dhat1());
  }
  descending(w, n - 2, 1);
  descending(w, n - 1, 2);
  if (static_cast<int>(w.length()) != isotropic_grassmannian_dim(n - 2, n))
    throw InternalError("point word length disagrees with dim OG(n-2,2n)");
  return w;
}

int isotropic_grassmannian_dim(int k, int n) { return k * (2 * n - k) - k * (k + 1) / 2; }

int line_weight_target(int n, int num_classes) { return n * (n - 1) / 2 - 3 + 2 * (n - 1) + num_classes; }

namespace {

struct IncidenceMemo {
  std::shared_mutex mutex;
  std::map<std::pair<int, StrictPartition>, std::unique_ptr<Poly>> polys;
};

IncidenceMemo& incidence_memo() {
  static IncidenceMemo m;
  return m;
}

}  // namespace

const Poly& incidence_polynomial(const StrictPartition& lambda, int n) {
  auto& m = incidence_memo();
  const auto key = std::pair{n, lambda};
  {
    std::shared_lock lock(m.mutex);
    auto it = m.polys.find(key);
    if (it != m.polys.end()) return *it->second;
  }
  Poly value = apply_dhat1(to_z(p_fun(lambda), n));
  std::unique_lock lock(m.mutex);
  auto& slot = m.polys[key];
  if (!slot) slot = std::make_unique<Poly>(std::move(value));
  return *slot;
}

Rat line_invariant(const std::vector<StrictPartition>& classes, int n) {
  int total = 0;
  for (const auto& c : classes) {
    if (c.weight() < 2) throw DomainError("line numbers need classes of codimension >= 2, got " + c.str());
    if (c.largest() >= n) throw DomainError("class " + c.str() + " has a part >= n");
    total += c.weight();
  }
  const int target = line_weight_target(n, static_cast<int>(classes.size()));
  if (total != target)
    throw DimensionError("dimension condition fails: codimensions sum to " + std::to_string(total) + ", expected " +
                             std::to_string(target),
                         target, total);
  // Multiply small factors first.
  std::vector<StrictPartition> sorted = classes;
  canonical_sort(sorted);
  Poly f = Poly::constant(n, Rat(1));
  for (const auto& c : sorted) f = f * incidence_polynomial(c, n);
  const Poly residue = apply_word(point_word(n), std::move(f));
  if (!residue.is_constant()) throw InternalError("point word left a non-constant residue: " + residue.str());
  const Rat value = residue.constant_term();
  if (!value.is_integer() || value.sign() < 0)
    throw InternalError("line number is not a nonnegative integer: " + value.str());
  return value;
}

namespace {

void keys_rec(const std::vector<StrictPartition>& pool, std::size_t from, int slots, int remaining,
              std::vector<StrictPartition>& acc, std::vector<std::vector<StrictPartition>>& out) {
  if (slots == 0) {
    if (remaining == 0) out.push_back(acc);
    return;
  }
  for (std::size_t i = from; i < pool.size(); ++i) {
    const int w = pool[i].weight();
    if (w * slots > remaining) break;  // pool is sorted by weight
    acc.push_back(pool[i]);
    keys_rec(pool, i, slots - 1, remaining - w, acc, out);
    acc.pop_back();
  }
}

}  // namespace

std::vector<std::vector<StrictPartition>> line_keys(int n) {
  std::vector<StrictPartition> pool;
  int max_weight = 0;
  for (int w = 2; w <= n * (n - 1) / 2; ++w)
    for (auto& p : strict_partitions(w, n - 1)) {
      pool.push_back(p);
      max_weight = std::max(max_weight, w);
    }
  canonical_sort(pool);
  std::vector<std::vector<StrictPartition>> out;
  for (int m = 1;; ++m) {
    const int target = line_weight_target(n, m);
    if (2 * m > target) break;
    if (max_weight * m < target) continue;
    std::vector<StrictPartition> acc;
    keys_rec(pool, 0, m, target, acc, out);
  }
  return out;
}

std::vector<LineNumber> enumerate_line_numbers(int n, int jobs) {
  const auto keys = line_keys(n);
  std::vector<LineNumber> out(keys.size());
  std::atomic<std::size_t> next{0};
  std::exception_ptr failure;
  std::mutex failure_mutex;
  auto worker = [&] {
    for (std::size_t i = next++; i < keys.size(); i = next++) {
      try {
        out[i] = LineNumber{keys[i], line_invariant(keys[i], n)};
      } catch (...) {
        std::lock_guard lock(failure_mutex);
        if (!failure) failure = std::current_exception();
      }
    }
  };
  const int workers = std::max(1, jobs);
  if (workers == 1) {
    worker();
  } else {
    std::vector<std::thread> pool;
    for (int w = 0; w < workers; ++w) pool.emplace_back(worker);
    for (auto& t : pool) t.join();
  }
  if (failure) std::rethrow_exception(failure);
  return out;
}

}  // namespace ogq::bgg
