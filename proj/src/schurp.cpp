#include "ogq/schurp.hpp"

#include <algorithm>
#include <memory>
#include <mutex>
#include <set>
#include <shared_mutex>
#include <sstream>

#include "ogq/error.hpp"
#include "ogq/linalg.hpp"

namespace ogq {

PPoly PPoly::constant(const Rat& c) {
  PPoly p;
  p.add_term({}, c);
  return p;
}

PPoly PPoly::power_sum(int k) {
  if (k <= 0 || k % 2 == 0) throw DomainError("only odd power sums generate the ring");
  PPoly p;
  p.add_term({static_cast<std::uint16_t>(k)}, Rat(1));
  return p;
}

int PPoly::grade_of(const Key& k) {
  int g = 0;
  for (auto i : k) g += i;
  return g;
}

void PPoly::add_term(const Key& k, const Rat& c) {
  if (c.is_zero()) return;
  auto [it, inserted] = terms_.try_emplace(k, c);
  if (!inserted) {
    it->second += c;
    if (it->second.is_zero()) terms_.erase(it);
  }
}

Rat PPoly::coefficient(const Key& k) const {
  auto it = terms_.find(k);
  return it == terms_.end() ? Rat(0) : it->second;
}

std::vector<int> PPoly::grades() const {
  std::set<int> g;
  for (const auto& [k, c] : terms_) g.insert(grade_of(k));
  return {g.begin(), g.end()};
}

bool PPoly::is_homogeneous_of(int grade) const {
  for (const auto& [k, c] : terms_)
    if (grade_of(k) != grade) return false;
  return true;
}

PPoly& PPoly::operator+=(const PPoly& o) {
  for (const auto& [k, c] : o.terms_) add_term(k, c);
  return *this;
}

PPoly& PPoly::operator-=(const PPoly& o) {
  for (const auto& [k, c] : o.terms_) add_term(k, -c);
  return *this;
}

PPoly& PPoly::operator*=(const Rat& c) {
  if (c.is_zero()) {
    terms_.clear();
    return *this;
  }
  for (auto& [k, v] : terms_) v *= c;
  return *this;
}

PPoly operator*(const PPoly& a, const PPoly& b) {
  PPoly r;
  for (const auto& [ka, ca] : a.terms_) {
    for (const auto& [kb, cb] : b.terms_) {
      PPoly::Key k;
      k.reserve(ka.size() + kb.size());
      std::merge(ka.begin(), ka.end(), kb.begin(), kb.end(), std::back_inserter(k));
      r.add_term(k, ca * cb);
    }
  }
  return r;
}

std::string PPoly::str() const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [k, c] : terms_) {
    os << (c.sign() < 0 ? (first ? "-" : " - ") : (first ? "" : " + "));
    first = false;
    const Rat mag = c.abs();
    bool wrote = false;
    if (mag != Rat(1) || k.empty()) {
      os << mag;
      wrote = true;
    }
    for (std::size_t i = 0; i < k.size();) {
      std::size_t j = i;
      while (j < k.size() && k[j] == k[i]) ++j;
      if (wrote) os << '*';
      os << 'p' << k[i];
      if (j - i > 1) os << '^' << (j - i);
      wrote = true;
      i = j;
    }
  }
  return os.str();
}

namespace {

// Read-mostly memo tables. Insertion is idempotent: a racing writer that
// loses keeps the first stored value.
struct Memo {
  std::shared_mutex mutex;
  std::vector<std::unique_ptr<PPoly>> rows;
  std::map<StrictPartition, std::unique_ptr<PPoly>> p_funs;
  std::map<int, std::unique_ptr<RatMatrix>> bases;
};

Memo& memo() {
  static Memo m;
  return m;
}

PPoly compute_q_row(int r) {
  if (r == 0) return PPoly::constant(Rat(1));
  // r Q_r = sum_{k odd <= r} 2 p_k Q_{r-k}
  PPoly acc;
  for (int k = 1; k <= r; k += 2) acc += PPoly::power_sum(k) * q_row(r - k) * Rat(2);
  return acc * (Rat(1) / Rat(r));
}

PPoly q_two_row(int r, int s) {
  // Q_(r,s) = Q_r Q_s + 2 sum_{i=1..s} (-1)^i Q_{r+i} Q_{s-i}; with s = 0 this is Q_r.
  PPoly acc = q_row(r) * q_row(s);
  for (int i = 1; i <= s; ++i) acc += q_row(r + i) * q_row(s - i) * Rat(i % 2 == 0 ? 2 : -2);
  return acc;
}

}  // namespace

const PPoly& q_row(int r) {
  if (r < 0) throw DomainError("q_row needs r >= 0");
  auto& m = memo();
  {
    std::shared_lock lock(m.mutex);
    if (static_cast<std::size_t>(r) < m.rows.size() && m.rows[r]) return *m.rows[r];
  }
  PPoly value = compute_q_row(r);
  std::unique_lock lock(m.mutex);
  if (m.rows.size() <= static_cast<std::size_t>(r)) m.rows.resize(r + 1);
  if (!m.rows[r]) m.rows[r] = std::make_unique<PPoly>(std::move(value));
  return *m.rows[r];
}

PPoly q_pfaffian(const std::vector<int>& parts) {
  std::vector<int> v = parts;
  if (v.size() % 2 == 1) v.push_back(0);
  if (v.empty()) return PPoly::constant(Rat(1));
  if (v.size() == 2) return q_two_row(v[0], v[1]);
  // Expansion along the first row of the antisymmetric matrix.
  PPoly acc;
  for (std::size_t j = 1; j < v.size(); ++j) {
    std::vector<int> rest;
    for (std::size_t i = 1; i < v.size(); ++i)
      if (i != j) rest.push_back(v[i]);
    PPoly term = q_two_row(v[0], v[j]) * q_pfaffian(rest);
    if (j % 2 == 1)
      acc += term;
    else
      acc -= term;
  }
  return acc;
}

PPoly q_fun(const StrictPartition& lambda) {
  if (lambda.empty()) return PPoly::constant(Rat(1));
  if (lambda.length() == 1) return q_row(lambda.parts()[0]);
  return q_pfaffian(lambda.parts());
}

const PPoly& p_fun(const StrictPartition& lambda) {
  auto& m = memo();
  {
    std::shared_lock lock(m.mutex);
    auto it = m.p_funs.find(lambda);
    if (it != m.p_funs.end()) return *it->second;
  }
  const Rat scale(mpz_class(1), mpz_class(1) << lambda.length());
  PPoly value = q_fun(lambda) * scale;
  std::unique_lock lock(m.mutex);
  auto& slot = m.p_funs[lambda];
  if (!slot) slot = std::make_unique<PPoly>(std::move(value));
  return *slot;
}

Poly to_z(const PPoly& f, int n) {
  // Images of each generator are built once per call.
  std::map<int, Poly> images;
  auto image = [&](int k) -> const Poly& {
    auto it = images.find(k);
    if (it != images.end()) return it->second;
    Poly g(n);
    for (int i = 0; i < n; ++i) {
      Monomial m;
      m.exp[i] = static_cast<std::uint16_t>(k);
      g.add_term(m, Rat(mpz_class(-1), mpz_class(2)));
    }
    return images.emplace(k, std::move(g)).first->second;
  };
  Poly out(n);
  for (const auto& [key, c] : f.terms()) {
    Poly term = Poly::constant(n, c);
    for (auto k : key) term = term * image(k);
    out += term;
  }
  return out;
}

namespace {

// Columns: P_nu for the strict partitions nu of `grade`; rows: odd-part
// monomials of the same grade. Square by Euler's partition identity.
const RatMatrix& p_basis_matrix(int grade, const std::vector<StrictPartition>& basis,
                                const std::vector<std::vector<int>>& monomials) {
  auto& m = memo();
  {
    std::shared_lock lock(m.mutex);
    auto it = m.bases.find(grade);
    if (it != m.bases.end()) return *it->second;
  }
  auto a = std::make_unique<RatMatrix>(monomials.size(), basis.size());
  for (std::size_t c = 0; c < basis.size(); ++c) {
    const PPoly& p = p_fun(basis[c]);
    for (std::size_t r = 0; r < monomials.size(); ++r) {
      PPoly::Key key(monomials[r].rbegin(), monomials[r].rend());
      (*a)(r, c) = p.coefficient(key);
    }
  }
  std::unique_lock lock(m.mutex);
  auto& slot = m.bases[grade];
  if (!slot) slot = std::move(a);
  return *slot;
}

}  // namespace

std::map<StrictPartition, Rat> expand_in_p_basis(const PPoly& f) {
  std::map<int, PPoly> by_grade;
  for (const auto& [k, c] : f.terms()) by_grade[PPoly::grade_of(k)].add_term(k, c);
  std::map<StrictPartition, Rat> out;
  for (const auto& [grade, part] : by_grade) {
    const auto basis = strict_partitions(grade, grade);
    const auto monomials = odd_partitions(grade);
    if (basis.size() != monomials.size()) throw InternalError("P-basis size mismatch at grade " + std::to_string(grade));
    const RatMatrix& a = p_basis_matrix(grade, basis, monomials);
    std::vector<Rat> rhs(monomials.size());
    for (std::size_t r = 0; r < monomials.size(); ++r)
      rhs[r] = part.coefficient(PPoly::Key(monomials[r].rbegin(), monomials[r].rend()));
    std::vector<Rat> x;
    try {
      x = solve_square(a, rhs);
    } catch (const SingularSystem&) {
      throw InternalError("P-functions of grade " + std::to_string(grade) + " are not independent");
    }
    for (std::size_t c = 0; c < basis.size(); ++c)
      if (!x[c].is_zero()) out.emplace(basis[c], x[c]);
  }
  return out;
}

}  // namespace ogq
