#include "ogq/polynomial.hpp"

#include <sstream>

#include "ogq/error.hpp"

namespace ogq {

Poly::Poly(int nvars) : nvars_(nvars) {
  if (nvars < 0 || nvars > kMaxVars) throw DomainError("unsupported variable count " + std::to_string(nvars));
}

Poly Poly::constant(int nvars, const Rat& c) {
  Poly p(nvars);
  p.add_term(Monomial{}, c);
  return p;
}

Poly Poly::variable(int nvars, int index, const Rat& coeff) {
  if (index < 0 || index >= nvars) throw DomainError("variable index out of range");
  Monomial m;
  m.exp[index] = 1;
  return monomial(nvars, m, coeff);
}

Poly Poly::monomial(int nvars, const Monomial& m, const Rat& coeff) {
  Poly p(nvars);
  for (int i = nvars; i < kMaxVars; ++i)
    if (m.exp[i] != 0) throw DomainError("monomial uses a variable outside the ring");
  p.add_term(m, coeff);
  return p;
}

int Poly::degree() const {
  if (terms_.empty()) return -1;
  return terms_.rbegin()->first.degree();
}

bool Poly::is_homogeneous() const {
  if (terms_.empty()) return true;
  return terms_.begin()->first.degree() == terms_.rbegin()->first.degree();
}

bool Poly::is_constant() const { return degree() <= 0; }

Rat Poly::constant_term() const { return coefficient(Monomial{}); }

Rat Poly::coefficient(const Monomial& m) const {
  auto it = terms_.find(m);
  return it == terms_.end() ? Rat(0) : it->second;
}

void Poly::add_term(const Monomial& m, const Rat& c) {
  if (c.is_zero()) return;
  auto [it, inserted] = terms_.try_emplace(m, c);
  if (!inserted) {
    it->second += c;
    if (it->second.is_zero()) terms_.erase(it);
  }
}

void Poly::check_same(const Poly& o) const {
  if (nvars_ != o.nvars_)
    throw DomainError("variable-set mismatch: " + std::to_string(nvars_) + " vs " + std::to_string(o.nvars_));
}

Poly& Poly::operator+=(const Poly& o) {
  check_same(o);
  for (const auto& [m, c] : o.terms_) add_term(m, c);
  return *this;
}

Poly& Poly::operator-=(const Poly& o) {
  check_same(o);
  for (const auto& [m, c] : o.terms_) add_term(m, -c);
  return *this;
}

Poly& Poly::operator*=(const Rat& c) {
  if (c.is_zero()) {
    terms_.clear();
    return *this;
  }
  for (auto& [m, v] : terms_) v *= c;
  return *this;
}

Poly Poly::operator-() const {
  Poly r = *this;
  for (auto& [m, v] : r.terms_) v = -v;
  return r;
}

Poly operator*(const Poly& a, const Poly& b) {
  a.check_same(b);
  Poly r(a.nvars_);
  for (const auto& [ma, ca] : a.terms_) {
    for (const auto& [mb, cb] : b.terms_) {
      Monomial m;
      for (int i = 0; i < kMaxVars; ++i) m.exp[i] = static_cast<std::uint16_t>(ma.exp[i] + mb.exp[i]);
      r.add_term(m, ca * cb);
    }
  }
  return r;
}

Poly Poly::map_monomials(const std::function<std::pair<Monomial, Rat>(const Monomial&)>& fn) const {
  Poly r(nvars_);
  for (const auto& [m, c] : terms_) {
    auto [image, factor] = fn(m);
    r.add_term(image, c * factor);
  }
  return r;
}

std::string Poly::str(std::span<const std::string> names) const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
    const auto& [m, c] = *it;
    Rat mag = c.abs();
    os << (c.sign() < 0 ? (first ? "-" : " - ") : (first ? "" : " + "));
    first = false;
    bool wrote = false;
    if (mag != Rat(1) || m.degree() == 0) {
      os << mag;
      wrote = true;
    }
    for (int i = 0; i < nvars_; ++i) {
      if (m.exp[i] == 0) continue;
      if (wrote) os << '*';
      if (static_cast<std::size_t>(i) < names.size())
        os << names[i];
      else
        os << 'z' << (i + 1);
      if (m.exp[i] > 1) os << '^' << m.exp[i];
      wrote = true;
    }
  }
  return os.str();
}

Poly pow(const Poly& base, unsigned exponent) {
  Poly result = Poly::constant(base.nvars(), Rat(1));
  Poly b = base;
  while (exponent != 0) {
    if (exponent & 1U) result = result * b;
    exponent >>= 1U;
    if (exponent != 0) b = b * b;
  }
  return result;
}

Poly substitute(const Poly& f, std::span<const Poly> images) {
  if (static_cast<int>(images.size()) != f.nvars())
    throw DomainError("substitution needs one image per variable");
  const int target = images.empty() ? f.nvars() : images.front().nvars();
  for (const auto& img : images)
    if (img.nvars() != target) throw DomainError("substitution images disagree on the variable set");
  // Cache powers of each image; degrees here are small.
  std::vector<std::vector<Poly>> powers(images.size());
  auto power_of = [&](std::size_t i, unsigned e) -> const Poly& {
    auto& cache = powers[i];
    if (cache.empty()) cache.push_back(Poly::constant(target, Rat(1)));
    while (cache.size() <= e) cache.push_back(cache.back() * images[i]);
    return cache[e];
  };
  Poly result(target);
  for (const auto& [m, c] : f.terms()) {
    Poly term = Poly::constant(target, c);
    for (std::size_t i = 0; i < images.size(); ++i)
      if (m.exp[i] != 0) term = term * power_of(i, m.exp[i]);
    result += term;
  }
  return result;
}

Poly exact_div(const Poly& dividend, const Poly& divisor) {
  if (divisor.is_zero()) throw DomainError("division by the zero polynomial");
  if (dividend.nvars() != divisor.nvars()) throw DomainError("variable-set mismatch in exact division");
  const auto& [lead_m, lead_c] = *divisor.terms().rbegin();
  Poly rest = dividend;
  Poly quotient(dividend.nvars());
  while (!rest.is_zero()) {
    const auto [m, c] = *rest.terms().rbegin();
    Monomial q;
    for (int i = 0; i < kMaxVars; ++i) {
      if (m.exp[i] < lead_m.exp[i])
        throw IndivisibleError("nonzero remainder in exact division (leading term " +
                               Poly::monomial(dividend.nvars(), m, c).str() + ")");
      q.exp[i] = static_cast<std::uint16_t>(m.exp[i] - lead_m.exp[i]);
    }
    const Rat factor = c / lead_c;
    quotient.add_term(q, factor);
    for (const auto& [dm, dc] : divisor.terms()) {
      Monomial prod;
      for (int i = 0; i < kMaxVars; ++i) prod.exp[i] = static_cast<std::uint16_t>(q.exp[i] + dm.exp[i]);
      rest.add_term(prod, -(factor * dc));
    }
  }
  return quotient;
}

Rat evaluate(const Poly& f, std::span<const Rat> point) {
  if (static_cast<int>(point.size()) != f.nvars()) throw DomainError("evaluation point has the wrong length");
  Rat acc(0);
  for (const auto& [m, c] : f.terms()) {
    Rat t = c;
    for (int i = 0; i < f.nvars(); ++i)
      if (m.exp[i] != 0) t *= pow(point[i], m.exp[i]);
    acc += t;
  }
  return acc;
}

bool coefficients_canonical(const Poly& f) {
  for (const auto& [m, c] : f.terms())
    if (!c.is_canonical() || c.is_zero()) return false;
  return true;
}

}  // namespace ogq
