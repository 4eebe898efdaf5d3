#include "ogq/schubert.hpp"

#include <sstream>

#include "ogq/error.hpp"
#include "ogq/schurp.hpp"

namespace ogq::schubert {

namespace {

void check_class(const StrictPartition& lambda) {
  if (lambda.largest() > kN - 1) throw DomainError("class " + lambda.str() + " has a part larger than 4");
}

std::string trim(const std::string& s) {
  const auto b = s.find_first_not_of(" \t");
  if (b == std::string::npos) return "";
  const auto e = s.find_last_not_of(" \t");
  return s.substr(b, e - b + 1);
}

}  // namespace

CohoElem CohoElem::basis(const StrictPartition& lambda) {
  check_class(lambda);
  CohoElem e;
  e.add(lambda, 1);
  return e;
}

CohoElem CohoElem::parse(const std::string& text) {
  CohoElem out;
  const std::string body = trim(text);
  if (body == "0") return out;
  std::size_t start = 0;
  while (start <= body.size()) {
    const auto plus = body.find('+', start);
    const std::string term = trim(body.substr(start, plus == std::string::npos ? std::string::npos : plus - start));
    if (term.empty()) throw ParseError("empty term in '" + text + "'");
    long coeff = 1;
    std::string cls = term;
    if (const auto star = term.find('*'); star != std::string::npos) {
      const std::string c = trim(term.substr(0, star));
      if (c.empty() || c.find_first_not_of("0123456789") != std::string::npos)
        throw ParseError("bad coefficient in '" + text + "'");
      coeff = std::stol(c);
      cls = trim(term.substr(star + 1));
    }
    const StrictPartition p = StrictPartition::parse(cls);
    try {
      check_class(p);
    } catch (const DomainError& e) {
      throw ParseError(e.what());
    }
    out.add(p, coeff);
    if (plus == std::string::npos) break;
    start = plus + 1;
  }
  return out;
}

long CohoElem::coefficient(const StrictPartition& lambda) const {
  auto it = coeffs_.find(lambda);
  return it == coeffs_.end() ? 0 : it->second;
}

void CohoElem::add(const StrictPartition& lambda, long c) {
  check_class(lambda);
  if (c == 0) return;
  auto [it, inserted] = coeffs_.try_emplace(lambda, c);
  if (!inserted) {
    it->second += c;
    if (it->second == 0) coeffs_.erase(it);
  }
}

CohoElem& CohoElem::operator+=(const CohoElem& o) {
  for (const auto& [p, c] : o.coeffs_) add(p, c);
  return *this;
}

std::string CohoElem::str() const {
  if (coeffs_.empty()) return "0";
  std::vector<StrictPartition> keys;
  for (const auto& [p, c] : coeffs_) keys.push_back(p);
  canonical_sort(keys);
  std::ostringstream os;
  for (std::size_t i = 0; i < keys.size(); ++i) {
    const long c = coeffs_.at(keys[i]);
    if (i > 0) os << (c < 0 ? " - " : " + ");
    else if (c < 0) os << '-';
    const long mag = c < 0 ? -c : c;
    if (mag != 1) os << mag << '*';
    os << keys[i].str();
  }
  return os.str();
}

namespace {

struct Ring {
  std::vector<StrictPartition> classes;
  std::map<StrictPartition, int> index;
  std::array<std::array<CohoElem, kBasisSize>, kBasisSize> table;

  Ring() {
    for (int w = 0; w <= kDim; ++w)
      for (auto& p : strict_partitions(w, kN - 1)) classes.push_back(p);
    canonical_sort(classes);
    if (classes.size() != kBasisSize) throw InternalError("OG(5,10) basis does not have 16 classes");
    static constexpr std::array<int, kDim + 1> kRanks{1, 1, 1, 2, 2, 2, 2, 2, 1, 1, 1};
    std::array<int, kDim + 1> ranks{};
    for (const auto& c : classes) ++ranks[c.weight()];
    if (ranks != kRanks) throw InternalError("graded ranks of H*(OG(5,10)) are wrong");
    for (int i = 0; i < kBasisSize; ++i) index[classes[i]] = i;

    for (int i = 0; i < kBasisSize; ++i) {
      for (int j = i; j < kBasisSize; ++j) {
        CohoElem prod;
        if (classes[i].weight() + classes[j].weight() <= kDim) {
          for (const auto& [nu, c] : expand_in_p_basis(p_fun(classes[i]) * p_fun(classes[j]))) {
            if (nu.largest() > kN - 1) continue;
            if (!c.is_integer() || c.sign() < 0)
              throw InternalError("non-integral structure constant for " + classes[i].str() + "*" + classes[j].str());
            prod.add(nu, c.num().get_si());
          }
        }
        table[i][j] = prod;
        table[j][i] = prod;
      }
    }
  }
};

const Ring& ring() {
  static const Ring r;
  return r;
}

}  // namespace

const std::vector<StrictPartition>& basis() { return ring().classes; }

int basis_index(const StrictPartition& lambda) {
  const auto& r = ring();
  auto it = r.index.find(lambda);
  if (it == r.index.end()) throw DomainError("not a Schubert class of OG(5,10): " + lambda.str());
  return it->second;
}

const CohoElem& mult(const StrictPartition& a, const StrictPartition& b) {
  return ring().table[basis_index(a)][basis_index(b)];
}

CohoElem mult(const CohoElem& a, const CohoElem& b) {
  CohoElem out;
  for (const auto& [pa, ca] : a.coeffs())
    for (const auto& [pb, cb] : b.coeffs())
      for (const auto& [nu, c] : mult(pa, pb).coeffs()) out.add(nu, ca * cb * c);
  return out;
}

StrictPartition poincare_dual(const StrictPartition& lambda) {
  check_class(lambda);
  std::vector<int> parts;
  for (int p = kN - 1; p >= 1; --p) {
    bool present = false;
    for (int q : lambda.parts()) present = present || q == p;
    if (!present) parts.push_back(p);
  }
  return StrictPartition(std::move(parts));
}

long triple(const StrictPartition& a, const StrictPartition& b, const StrictPartition& c) {
  if (a.weight() + b.weight() + c.weight() != kDim) return 0;
  return mult(a, b).coefficient(poincare_dual(c));
}

std::vector<StrictPartition> divisor_predecessors(const StrictPartition& target) {
  static const StrictPartition one{1};
  std::vector<StrictPartition> out;
  for (const auto& rho : basis())
    if (rho.weight() + 1 == target.weight() && mult(one, rho).coefficient(target) > 0) out.push_back(rho);
  return out;
}

}  // namespace ogq::schubert
