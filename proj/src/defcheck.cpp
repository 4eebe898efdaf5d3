#include "ogq/defcheck.hpp"

#include <cctype>
#include <fstream>
#include <map>
#include <sstream>

#include "ogq/error.hpp"

namespace ogq::defcheck {

namespace {

const std::array<std::string, kVars> kVarNames{"t", "u", "x0", "x1", "x2", "x3"};

class PolyParser {
 public:
  explicit PolyParser(const std::string& text) : s_(text) {}

  Poly run() {
    Poly p = expr();
    skip_ws();
    if (pos_ != s_.size()) fail("unexpected '" + std::string(1, s_[pos_]) + "'");
    return p;
  }

 private:
  [[noreturn]] void fail(const std::string& why) const {
    throw ParseError("polynomial, offset " + std::to_string(pos_) + ": " + why);
  }

  void skip_ws() {
    while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
  }

  bool accept(char c) {
    skip_ws();
    if (pos_ < s_.size() && s_[pos_] == c) {
      ++pos_;
      return true;
    }
    return false;
  }

  std::string digits() {
    skip_ws();
    const std::size_t start = pos_;
    while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
    if (start == pos_) fail("expected a number");
    return s_.substr(start, pos_ - start);
  }

  Poly expr() {
    Poly acc = term();
    for (;;) {
      if (accept('+')) acc += term();
      else if (accept('-')) acc -= term();
      else return acc;
    }
  }

  Poly term() {
    Poly acc = unary();
    while (accept('*')) acc = acc * unary();
    return acc;
  }

  Poly unary() {
    if (accept('-')) return -unary();
    if (accept('+')) return unary();
    return power();
  }

  Poly power() {
    Poly base = atom();
    if (accept('^')) {
      const std::string e = digits();
      if (e.size() > 3) fail("exponent too large");
      base = pow(base, static_cast<unsigned>(std::stoul(e)));
    }
    return base;
  }

  Poly atom() {
    skip_ws();
    if (pos_ >= s_.size()) fail("unexpected end of input");
    if (accept('(')) {
      Poly inner = expr();
      if (!accept(')')) fail("missing ')'");
      return inner;
    }
    const char c = s_[pos_];
    if (std::isdigit(static_cast<unsigned char>(c))) {
      std::string lit = digits();
      skip_ws();
      if (pos_ < s_.size() && s_[pos_] == '/') {
        ++pos_;
        lit += "/" + digits();
      }
      return Poly::constant(kVars, Rat::parse(lit));
    }
    if (std::isalpha(static_cast<unsigned char>(c))) {
      const std::size_t start = pos_;
      while (pos_ < s_.size() && std::isalnum(static_cast<unsigned char>(s_[pos_]))) ++pos_;
      const std::string name = s_.substr(start, pos_ - start);
      for (int i = 0; i < kVars; ++i)
        if (kVarNames[i] == name) return Poly::variable(kVars, i);
      fail("unknown variable '" + name + "'");
    }
    fail("unexpected '" + std::string(1, c) + "'");
  }

  const std::string& s_;
  std::size_t pos_ = 0;
};

std::string trim(const std::string& s) {
  const auto b = s.find_first_not_of(" \t\r\n");
  if (b == std::string::npos) return "";
  return s.substr(b, s.find_last_not_of(" \t\r\n") - b + 1);
}

std::vector<Rat> parse_rationals(const std::string& row) {
  std::vector<Rat> out;
  std::string cleaned = row;
  for (char& c : cleaned)
    if (c == ',') c = ' ';
  std::istringstream is(cleaned);
  std::string tok;
  while (is >> tok) out.push_back(Rat::parse(tok));
  return out;
}

// Restricts a 6-variable polynomial free of x0..x3 to the (t, u) ring.
Poly to_binary(const Poly& f, const std::string& what) {
  Poly out(2);
  for (const auto& [m, c] : f.terms()) {
    for (int i = 2; i < kVars; ++i)
      if (m.exp[i] != 0) throw FixtureError(what + " must be a form in t and u only");
    Monomial b;
    b.exp[0] = m.exp[0];
    b.exp[1] = m.exp[1];
    out.add_term(b, c);
  }
  return out;
}

void check_bidegree(const Poly& f, int deg_tu, int deg_x, const std::string& what) {
  for (const auto& [m, c] : f.terms()) {
    const int a = m.exp[0] + m.exp[1];
    const int b = m.degree() - a;
    if (a != deg_tu || b != deg_x)
      throw FixtureError(what + " is not of bidegree (" + std::to_string(deg_tu) + "," + std::to_string(deg_x) + ")");
  }
}

FirstOrder jet_mul(const FirstOrder& a, const FirstOrder& b) {
  FirstOrder out{a.value * b.value, std::vector<Poly>(kUnknowns, Poly(2))};
  for (int k = 0; k < kUnknowns; ++k) {
    if (!b.slope[k].is_zero()) out.slope[k] += a.value * b.slope[k];
    if (!a.slope[k].is_zero()) out.slope[k] += a.slope[k] * b.value;
  }
  return out;
}

FirstOrder jet_constant(const Poly& p) { return FirstOrder{p, std::vector<Poly>(kUnknowns, Poly(2))}; }

// f(t, u, x) with x replaced by first-order jets; epsilon^2 terms dropped.
FirstOrder evaluate_jets(const Poly& f, const std::array<FirstOrder, kVars>& images) {
  FirstOrder acc = jet_constant(Poly(2));
  for (const auto& [m, c] : f.terms()) {
    FirstOrder term = jet_constant(Poly::constant(2, c));
    for (int i = 0; i < kVars; ++i)
      for (int e = 0; e < m.exp[i]; ++e) term = jet_mul(term, images[i]);
    acc.value += term.value;
    for (int k = 0; k < kUnknowns; ++k) acc.slope[k] += term.slope[k];
  }
  return acc;
}

std::array<Poly, kVars> curve_images(const DeformationFixture& fix) {
  return {Poly::variable(2, 0), Poly::variable(2, 1), fix.iota[0], fix.iota[1], fix.iota[2], fix.iota[3]};
}

}  // namespace

Poly parse_polynomial(const std::string& text) { return PolyParser(text).run(); }

DeformationFixture parse_fixture(const std::string& text) {
  std::map<std::string, std::string> values;
  std::string current;
  std::istringstream is(text);
  std::string line;
  int lineno = 0;
  while (std::getline(is, line)) {
    ++lineno;
    if (const auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
    if (trim(line).empty()) continue;
    if (std::isspace(static_cast<unsigned char>(line[0]))) {
      if (current.empty()) throw ParseError("fixture line " + std::to_string(lineno) + ": continuation without a key");
      values[current] += "\n" + line;
      continue;
    }
    const auto eq = line.find('=');
    if (eq == std::string::npos) throw ParseError("fixture line " + std::to_string(lineno) + ": expected 'key = value'");
    current = trim(line.substr(0, eq));
    if (values.count(current)) throw ParseError("fixture key '" + current + "' given twice");
    values[current] = line.substr(eq + 1);
  }
  static const std::vector<std::string> kKeys{"points", "x0", "x1", "x2", "x3", "L", "F1", "F2", "D"};
  for (const auto& [k, v] : values)
    if (std::find(kKeys.begin(), kKeys.end(), k) == kKeys.end()) throw ParseError("unknown fixture key '" + k + "'");
  for (const auto& k : kKeys)
    if (!values.count(k)) throw ParseError("fixture is missing '" + k + "'");

  auto poly = [&](const std::string& key) {
    try {
      return parse_polynomial(values.at(key));
    } catch (const ParseError& e) {
      throw ParseError("fixture key '" + key + "': " + e.what());
    }
  };

  DeformationFixture fix;
  fix.points = parse_rationals(values.at("points"));
  for (int k = 0; k < kCoords; ++k) {
    const std::string key = "x" + std::to_string(k);
    fix.iota[k] = to_binary(poly(key), key);
  }
  fix.L = poly("L");
  fix.F1 = poly("F1");
  fix.F2 = poly("F2");

  std::vector<std::vector<Rat>> rows;
  std::string dtext = values.at("D");
  for (char& c : dtext)
    if (c == ';') c = '\n';
  std::istringstream ds(dtext);
  while (std::getline(ds, line))
    if (!trim(line).empty()) rows.push_back(parse_rationals(line));
  if (rows.size() != kCoords) throw ParseError("D must have 4 rows");
  fix.D = RatMatrix(kCoords, rows[0].size());
  for (int r = 0; r < kCoords; ++r) {
    if (rows[r].size() != rows[0].size()) throw ParseError("D rows differ in length");
    for (std::size_t c = 0; c < rows[r].size(); ++c) fix.D(r, c) = rows[r][c];
  }
  return fix;
}

DeformationFixture load_fixture(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw IoError("cannot read fixture " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return parse_fixture(ss.str());
}

std::vector<Rat> column_scalars(const DeformationFixture& fix) {
  std::vector<Rat> out;
  for (std::size_t j = 0; j < fix.points.size(); ++j) {
    const std::array<Rat, 2> at{fix.points[j], Rat(1)};
    std::array<Rat, kCoords> image;
    for (int k = 0; k < kCoords; ++k) image[k] = evaluate(fix.iota[k], at);
    int pivot = -1;
    for (int k = 0; k < kCoords && pivot < 0; ++k)
      if (!image[k].is_zero()) pivot = k;
    if (pivot < 0) throw FixtureError("iota vanishes at point " + std::to_string(j + 1));
    const Rat c = fix.D(pivot, j) / image[pivot];
    if (c.is_zero()) throw FixtureError("column " + std::to_string(j + 1) + " of D is zero");
    for (int k = 0; k < kCoords; ++k)
      if (fix.D(k, j) != c * image[k])
        throw FixtureError("column " + std::to_string(j + 1) + " of D is not proportional to iota(r_" +
                           std::to_string(j + 1) + ")");
    out.push_back(c);
  }
  return out;
}

void validate(const DeformationFixture& fix) {
  if (fix.points.size() != kPoints) throw FixtureError("expected 7 points");
  for (std::size_t i = 0; i < fix.points.size(); ++i)
    for (std::size_t j = i + 1; j < fix.points.size(); ++j)
      if (fix.points[i] == fix.points[j]) throw FixtureError("points " + std::to_string(i + 1) + " and " + std::to_string(j + 1) + " coincide");
  if (fix.D.rows() != kCoords || fix.D.cols() != kPoints) throw FixtureError("D must be 4 x 7");
  for (int k = 0; k < kCoords; ++k) {
    const std::string name = "x" + std::to_string(k);
    if (fix.iota[k].nvars() != 2) throw FixtureError(name + " must be a form in t and u");
    if (fix.iota[k].is_zero() || !fix.iota[k].is_homogeneous() || fix.iota[k].degree() != 6)
      throw FixtureError(name + " is not a sextic form");
  }
  check_bidegree(fix.L, 1, 1, "L");
  check_bidegree(fix.F1, 1, 2, "F1");
  check_bidegree(fix.F2, 1, 2, "F2");
  const auto images = curve_images(fix);
  if (!substitute(fix.F1, images).is_zero()) throw FixtureError("F1 does not vanish on the curve");
  if (!substitute(fix.F2, images).is_zero()) throw FixtureError("F2 does not vanish on the curve");
  for (int j = 0; j < kPoints; ++j) {
    const std::array<Rat, kVars> at{fix.points[j], Rat(1), fix.D(0, j), fix.D(1, j), fix.D(2, j), fix.D(3, j)};
    if (!evaluate(fix.L, at).is_zero()) throw FixtureError("L does not vanish at (r_" + std::to_string(j + 1) + ", d_" + std::to_string(j + 1) + ")");
  }
  column_scalars(fix);
}

std::vector<Poly> dual_sextic_basis(const std::vector<Rat>& points) {
  const Poly t = Poly::variable(2, 0);
  const Poly u = Poly::variable(2, 1);
  std::vector<Poly> out;
  for (std::size_t i = 0; i < points.size(); ++i) {
    Poly p = Poly::constant(2, Rat(1));
    for (std::size_t k = 0; k < points.size(); ++k) {
      if (k == i) continue;
      const Rat gap = points[i] - points[k];
      if (gap.is_zero()) throw DomainError("coincident points in dual basis");
      p = p * ((t - u * points[k]) * (Rat(1) / gap));
    }
    out.push_back(std::move(p));
  }
  return out;
}

const std::vector<std::string>& unknown_names() {
  static const std::vector<std::string> names = [] {
    std::vector<std::string> v;
    for (int j = 1; j <= kPoints; ++j) v.push_back("s" + std::to_string(j));
    for (int m = 1; m <= 2; ++m)
      for (int i = 0; i < kCoords; ++i) v.push_back("g" + std::to_string(m) + std::to_string(i));
    return v;
  }();
  return names;
}

LinearSystem first_order_system(const DeformationFixture& fix) {
  if (fix.points.size() != kPoints || fix.D.rows() != kCoords || fix.D.cols() != kPoints)
    throw FixtureError("fixture needs 7 points and a 4 x 7 matrix D");
  const auto dual = dual_sextic_basis(fix.points);
  const Poly t = Poly::variable(2, 0);
  const Poly u = Poly::variable(2, 1);

  // x_k(eps) = iota_k + eps * sum_j d_kj s_j P_j
  std::array<FirstOrder, kVars> images{jet_constant(t), jet_constant(u)};
  for (int k = 0; k < kCoords; ++k) {
    FirstOrder x = jet_constant(fix.iota[k]);
    for (int j = 0; j < kPoints; ++j) x.slope[j] = dual[j] * fix.D(k, j);
    images[2 + k] = std::move(x);
  }
  const auto curve = curve_images(fix);
  const Poly l_on_curve = substitute(fix.L, curve);

  Poly vanishing = Poly::constant(2, Rat(1));
  for (const auto& r : fix.points) vanishing = vanishing * (t - u * r);

  LinearSystem sys;
  sys.matrix = RatMatrix(2 * (kPoints), kUnknowns);
  const std::array<const Poly*, 2> fs{&fix.F1, &fix.F2};
  for (int m = 0; m < 2; ++m) {
    FirstOrder jet = evaluate_jets(*fs[m], images);
    // eps * L * G_m contributes L(iota) * iota_i to g_{m,i}.
    for (int i = 0; i < kCoords; ++i) jet.slope[kPoints + kCoords * m + i] += l_on_curve * fix.iota[i];
    sys.forms[m] = jet.slope;
    for (int k = 0; k < kUnknowns; ++k) {
      Poly q(2);
      try {
        q = exact_div(jet.slope[k], vanishing);
      } catch (const IndivisibleError&) {
        throw IndivisibleError("first-order form of F" + std::to_string(m + 1) + " in " + unknown_names()[k] +
                               " is not divisible by prod (t - r_j u); the curve does not lie on the surface");
      }
      for (int i = 0; i < kPoints; ++i) {
        Monomial mono;
        mono.exp[0] = static_cast<std::uint16_t>(i);
        mono.exp[1] = static_cast<std::uint16_t>(6 - i);
        sys.matrix(m * kPoints + i, k) = q.coefficient(mono);
      }
    }
  }
  return sys;
}

Verdict check_unramified(const DeformationFixture& fix) {
  const LinearSystem sys = first_order_system(fix);
  Verdict v;
  v.rank = row_reduce(sys.matrix).rank();
  v.kernel = kernel_basis(sys.matrix);

  std::vector<Rat> trivial(kUnknowns, Rat(0));
  const auto scalars = column_scalars(fix);
  for (int j = 0; j < kPoints; ++j) trivial[j] = Rat(1) / scalars[j];
  v.trivial_in_kernel = true;
  for (std::size_t r = 0; r < sys.matrix.rows(); ++r) {
    Rat acc(0);
    for (int k = 0; k < kUnknowns; ++k) acc += sys.matrix(r, k) * trivial[k];
    if (!acc.is_zero()) v.trivial_in_kernel = false;
  }
  v.unramified = v.kernel.size() == 1 && v.trivial_in_kernel;
  return v;
}

}  // namespace ogq::defcheck
