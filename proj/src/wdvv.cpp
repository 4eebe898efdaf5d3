#include "ogq/wdvv.hpp"

#include <algorithm>
#include <fstream>
#include <sstream>

#include "json.hpp"
#include "ogq/bgg.hpp"
#include "ogq/error.hpp"
#include "ogq/schubert.hpp"

namespace ogq::wdvv {

namespace {

const StrictPartition kDivisor{1};

void check_classes(const std::vector<StrictPartition>& classes) {
  for (const auto& c : classes)
    if (c.largest() > kN - 1) throw DomainError("class " + c.str() + " is not a Schubert class of OG(5,10)");
}

}  // namespace

GWKey GWKey::make(int d, std::vector<StrictPartition> classes) {
  if (d < 0) throw DomainError("negative curve degree");
  check_classes(classes);
  canonical_sort(classes);
  return GWKey{d, std::move(classes)};
}

int GWKey::weight() const {
  int w = 0;
  for (const auto& c : classes) w += c.weight();
  return w;
}

std::string GWKey::str() const { return "I" + std::to_string(d) + "(" + join_classes(classes, ",") + ")"; }

std::strong_ordering operator<=>(const GWKey& a, const GWKey& b) {
  if (auto c = a.d <=> b.d; c != 0) return c;
  if (auto c = a.classes.size() <=> b.classes.size(); c != 0) return c;
  for (std::size_t i = 0; i < a.classes.size(); ++i) {
    if (a.classes[i] == b.classes[i]) continue;
    return canonical_less(a.classes[i], b.classes[i]) ? std::strong_ordering::less : std::strong_ordering::greater;
  }
  return std::strong_ordering::equal;
}

int weight_target(int d, int m) { return kN * (kN - 1) / 2 - 3 + 2 * (kN - 1) * d + m; }

bool dimension_ok(int d, const std::vector<StrictPartition>& classes) {
  int w = 0;
  for (const auto& c : classes) w += c.weight();
  return w == weight_target(d, static_cast<int>(classes.size()));
}

std::string Entry::provenance_str() const {
  switch (provenance) {
    case Provenance::Classical: return "classical";
    case Provenance::DivisorAxiom: return "divisor-axiom";
    case Provenance::FundamentalAxiom: return "fundamental-axiom";
    case Provenance::DimensionZero: return "dimension-zero";
    case Provenance::LineFormula: return "line-formula";
    case Provenance::Wdvv:
      return case_id == 0 ? std::string("wdvv(fallback)") : "wdvv(case-" + std::to_string(case_id) + ")";
    case Provenance::ConsistencyCheck: return "consistency-check";
  }
  return "unknown";
}

namespace {

Entry parse_provenance(const std::string& s) {
  Entry e;
  if (s == "classical") e.provenance = Provenance::Classical;
  else if (s == "divisor-axiom") e.provenance = Provenance::DivisorAxiom;
  else if (s == "fundamental-axiom") e.provenance = Provenance::FundamentalAxiom;
  else if (s == "dimension-zero") e.provenance = Provenance::DimensionZero;
  else if (s == "line-formula") e.provenance = Provenance::LineFormula;
  else if (s == "consistency-check") e.provenance = Provenance::ConsistencyCheck;
  else if (s == "wdvv(fallback)") e.provenance = Provenance::Wdvv;
  else if (s.rfind("wdvv(case-", 0) == 0 && s.back() == ')') {
    e.provenance = Provenance::Wdvv;
    const std::string digits = s.substr(10, s.size() - 11);
    if (digits.empty() || digits.find_first_not_of("0123456789") != std::string::npos)
      throw ParseError("bad provenance '" + s + "'");
    e.case_id = std::stoi(digits);
  } else {
    throw ParseError("unknown provenance '" + s + "'");
  }
  return e;
}

}  // namespace

const Entry* GWTable::find(const GWKey& key) const {
  auto it = entries_.find(key);
  return it == entries_.end() ? nullptr : &it->second;
}

bool GWTable::insert(const GWKey& key, Entry entry) {
  auto [it, inserted] = entries_.try_emplace(key, entry);
  if (!inserted && it->second.value != entry.value)
    throw InconsistentDerivation(key.str() + ": stored " + it->second.value.str() + " (" + it->second.provenance_str() +
                                 "), re-derived " + entry.value.str() + " (" + entry.provenance_str() + ")");
  return inserted;
}

void GWTable::merge(const GWTable& other) {
  for (const auto& [k, e] : other.entries_) insert(k, e);
}

std::string GWTable::serialize() const {
  std::string out;
  for (const auto& [key, entry] : entries_) {
    nlohmann::ordered_json rec;
    rec["n"] = kN;
    rec["d"] = key.d;
    auto classes = nlohmann::ordered_json::array();
    for (const auto& c : key.classes) classes.push_back(c.parts());
    rec["classes"] = classes;
    rec["value"] = entry.value.str();
    rec["provenance"] = entry.provenance_str();
    if (!entry.witness.empty()) rec["witness"] = entry.witness;
    out += rec.dump();
    out += '\n';
  }
  return out;
}

GWTable GWTable::deserialize(const std::string& text) {
  GWTable table;
  std::istringstream is(text);
  std::string line;
  int lineno = 0;
  while (std::getline(is, line)) {
    ++lineno;
    if (line.find_first_not_of(" \t\r") == std::string::npos) continue;
    try {
      const auto rec = nlohmann::json::parse(line);
      if (rec.at("n").get<int>() != kN) throw ParseError("cache record for n != 5");
      std::vector<StrictPartition> classes;
      for (const auto& parts : rec.at("classes")) classes.emplace_back(parts.get<std::vector<int>>());
      const GWKey key = GWKey::make(rec.at("d").get<int>(), classes);
      if (key.classes != classes) throw ParseError("classes are not in canonical order");
      Entry e = parse_provenance(rec.at("provenance").get<std::string>());
      e.value = Rat::parse(rec.at("value").get<std::string>());
      if (rec.contains("witness")) e.witness = rec.at("witness").get<std::string>();
      table.insert(key, std::move(e));
    } catch (const nlohmann::json::exception& ex) {
      throw ParseError("cache line " + std::to_string(lineno) + ": " + ex.what());
    } catch (const DomainError& ex) {
      throw ParseError("cache line " + std::to_string(lineno) + ": " + ex.what());
    }
  }
  return table;
}

void GWTable::save(const std::string& path) const {
  std::ofstream os(path, std::ios::binary | std::ios::trunc);
  if (!os) throw IoError("cannot write cache file " + path);
  os << serialize();
  if (!os) throw IoError("failed writing cache file " + path);
}

GWTable GWTable::load(const std::string& path) {
  std::ifstream is(path, std::ios::binary);
  if (!is) return GWTable{};
  std::ostringstream ss;
  ss << is.rdbuf();
  return deserialize(ss.str());
}

Reduction reduce(const GWKey& key) {
  Reduction r;
  if (!dimension_ok(key.d, key.classes)) {
    r.value = Rat(0);
    r.rule = Provenance::DimensionZero;
    return r;
  }
  if (key.d == 0) {
    r.rule = Provenance::Classical;
    r.value = key.classes.size() == 3 ? Rat(schubert::triple(key.classes[0], key.classes[1], key.classes[2])) : Rat(0);
    return r;
  }
  std::vector<StrictPartition> classes = key.classes;
  for (auto it = std::find(classes.begin(), classes.end(), kDivisor); it != classes.end();
       it = std::find(classes.begin(), classes.end(), kDivisor)) {
    classes.erase(it);
    r.multiplier *= Rat(key.d);
    r.rule = Provenance::DivisorAxiom;
  }
  if (std::find(classes.begin(), classes.end(), StrictPartition()) != classes.end()) {
    r.value = Rat(0);
    r.rule = Provenance::FundamentalAxiom;
    return r;
  }
  r.key = GWKey{key.d, std::move(classes)};
  return r;
}

std::string RelationInstance::str() const { return "I" + std::to_string(d) + " relation (" + join_classes(lambdas, ",") + ")"; }

namespace {

// One side of the relation: sum over d', A, mu of
// I_{d'}(lambda_A, x1, x2, mu) * I_{d-d'}(lambda_B, y1, y2, mu^vee).
void expand_side(int d, const std::vector<StrictPartition>& rest, const StrictPartition& x1, const StrictPartition& x2,
                 const StrictPartition& y1, const StrictPartition& y2, const Rat& sign,
                 std::map<std::vector<GWKey>, Rat>& acc) {
  const std::size_t k = rest.size();
  for (int dp = 0; dp <= d; ++dp) {
    for (std::size_t mask = 0; mask < (std::size_t{1} << k); ++mask) {
      std::vector<StrictPartition> first, second;
      int weight = x1.weight() + x2.weight();
      int a = 0;
      for (std::size_t i = 0; i < k; ++i) {
        if (mask & (std::size_t{1} << i)) {
          first.push_back(rest[i]);
          weight += rest[i].weight();
          ++a;
        } else {
          second.push_back(rest[i]);
        }
      }
      first.push_back(x1);
      first.push_back(x2);
      second.push_back(y1);
      second.push_back(y2);
      for (const auto& mu : schubert::basis()) {
        // Side condition: the first factor satisfies the dimension condition.
        if (weight + mu.weight() != schubert::kDim + 2 * (kN - 1) * dp + a) continue;
        auto f1 = first;
        auto f2 = second;
        f1.push_back(mu);
        f2.push_back(schubert::poincare_dual(mu));
        const Reduction r1 = reduce(GWKey::make(dp, std::move(f1)));
        if (r1.value && r1.value->is_zero()) continue;
        const Reduction r2 = reduce(GWKey::make(d - dp, std::move(f2)));
        if (r2.value && r2.value->is_zero()) continue;
        Rat coeff = sign;
        std::vector<GWKey> factors;
        for (const Reduction* r : {&r1, &r2}) {
          if (r->value) {
            coeff *= *r->value;
          } else {
            coeff *= r->multiplier;
            factors.push_back(r->key);
          }
        }
        std::sort(factors.begin(), factors.end());
        acc[factors] += coeff;
      }
    }
  }
}

}  // namespace

RelationInstance build_relation(int d, const std::vector<StrictPartition>& lambdas) {
  const int m = static_cast<int>(lambdas.size());
  if (d < 1) throw DomainError("associativity relations need d >= 1");
  if (m < 4) throw DomainError("associativity relations need at least four classes");
  check_classes(lambdas);
  int total = 0;
  for (const auto& l : lambdas) {
    if (l.weight() < 1) throw DomainError("relation classes need codimension >= 1");
    total += l.weight();
  }
  const int expected = kN * (kN - 1) / 2 - 4 + 2 * d * (kN - 1) + m;
  if (total != expected)
    throw DomainError("relation degree condition fails: codimensions sum to " + std::to_string(total) + ", expected " +
                      std::to_string(expected));
  const std::vector<StrictPartition> rest(lambdas.begin(), lambdas.end() - 4);
  const auto& l3 = lambdas[m - 4];  // lambda^{m-3}
  const auto& l2 = lambdas[m - 3];  // lambda^{m-2}
  const auto& l1 = lambdas[m - 2];  // lambda^{m-1}
  const auto& l0 = lambdas[m - 1];  // lambda^m
  std::map<std::vector<GWKey>, Rat> acc;
  expand_side(d, rest, l3, l2, l1, l0, Rat(1), acc);
  expand_side(d, rest, l3, l0, l2, l1, Rat(-1), acc);
  RelationInstance rel{d, lambdas, {}};
  for (auto& [factors, coeff] : acc)
    if (!coeff.is_zero()) rel.terms.push_back(ProductTerm{coeff, factors});
  return rel;
}

std::optional<Rat> solve_for(const RelationInstance& relation, const GWKey& target,
                             const std::function<std::optional<Rat>(const GWKey&)>& lookup) {
  // Target coefficient first: it needs no lookups, and a vanishing
  // coefficient makes the relation useless for this target.
  Rat target_coeff(0);
  bool mixed = false;
  for (const auto& term : relation.terms) {
    const auto n = std::count(term.factors.begin(), term.factors.end(), target);
    if (n == 0) continue;
    if (n > 1 || term.factors.size() > 1) {
      mixed = true;
      continue;
    }
    target_coeff += term.coeff;
  }
  if (mixed) {
    for (const auto& term : relation.terms) {
      if (term.factors.size() < 2) continue;
      if (std::count(term.factors.begin(), term.factors.end(), target) != 1) {
        if (std::count(term.factors.begin(), term.factors.end(), target) > 1) return std::nullopt;
        continue;
      }
      const GWKey& other = term.factors[0] == target ? term.factors[1] : term.factors[0];
      auto v = lookup(other);
      if (!v) return std::nullopt;
      target_coeff += term.coeff * *v;
    }
  }
  if (target_coeff.is_zero()) return std::nullopt;

  Rat constant(0);
  for (const auto& term : relation.terms) {
    if (std::find(term.factors.begin(), term.factors.end(), target) != term.factors.end()) continue;
    Rat product = term.coeff;
    // Lower degree first: a vanishing cheap factor spares the other lookup.
    std::vector<const GWKey*> order;
    for (const auto& f : term.factors) order.push_back(&f);
    std::sort(order.begin(), order.end(), [](const GWKey* a, const GWKey* b) { return a->d < b->d; });
    for (const GWKey* f : order) {
      auto v = lookup(*f);
      if (!v) return std::nullopt;
      product *= *v;
      if (product.is_zero()) break;
    }
    constant += product;
  }
  return -constant / target_coeff;
}

const std::vector<CasePattern>& case_patterns() {
  static const std::vector<CasePattern> patterns = [] {
    auto p = [](const char* s) { return StrictPartition::parse(s); };
    return std::vector<CasePattern>{
        {1, p("432"), p("4321"), p("4321")}, {2, p("431"), p("4321"), p("432")}, {3, p("421"), p("4321"), p("431")},
        {4, p("321"), p("4321"), p("421")},  {5, p("42"), p("4321"), p("43")},   {6, p("41"), p("4321"), p("42")},
        {7, p("32"), p("4321"), p("321")},   {8, p("4"), p("4321"), p("41")},    {9, p("31"), p("4321"), p("32")},
        {10, p("431"), p("432"), p("432")},  {11, p("421"), p("432"), p("431")}, {12, p("321"), p("432"), p("421")},
        {13, p("42"), p("432"), p("43")},    {14, p("41"), p("432"), p("42")},   {15, p("32"), p("432"), p("321")},
        {16, p("421"), p("431"), p("431")},  {17, p("321"), p("431"), p("421")},
    };
  }();
  return patterns;
}

std::vector<StrictPartition> Candidate::lambdas() const {
  std::vector<StrictPartition> out = rest;
  out.push_back(kDivisor);
  out.push_back(rho);
  out.push_back(sigma);
  out.push_back(pi);
  return out;
}

namespace {

// Removes one copy of each listed class; false if one is absent.
bool remove_classes(std::vector<StrictPartition>& pool, std::initializer_list<const StrictPartition*> which) {
  for (const auto* c : which) {
    auto it = std::find(pool.begin(), pool.end(), *c);
    if (it == pool.end()) return false;
    pool.erase(it);
  }
  return true;
}

std::vector<StrictPartition> distinct(const std::vector<StrictPartition>& v) {
  std::vector<StrictPartition> out;
  for (const auto& c : v)
    if (std::find(out.begin(), out.end(), c) == out.end()) out.push_back(c);
  return out;
}

}  // namespace

std::vector<Candidate> candidates(const GWKey& key) {
  std::vector<Candidate> out;
  auto seen = [&](const Candidate& c) {
    return std::any_of(out.begin(), out.end(), [&](const Candidate& o) {
      return o.rho == c.rho && o.sigma == c.sigma && o.pi == c.pi && o.rest == c.rest;
    });
  };
  auto add_for = [&](int case_id, const StrictPartition& pi, const StrictPartition& alpha, const StrictPartition& rho) {
    std::vector<StrictPartition> pool = key.classes;
    if (!remove_classes(pool, {&pi, &alpha})) return;
    for (const auto& sigma : distinct(pool)) {
      std::vector<StrictPartition> rest = pool;
      remove_classes(rest, {&sigma});
      Candidate c{case_id, std::move(rest), rho, sigma, pi};
      if (!seen(c)) out.push_back(std::move(c));
    }
  };
  for (const auto& cp : case_patterns()) add_for(cp.id, cp.pi, cp.alpha, cp.rho);
  // Fallback: every ordered choice, heaviest classes first.
  std::vector<StrictPartition> heavy_first = distinct(key.classes);
  std::reverse(heavy_first.begin(), heavy_first.end());
  for (const auto& pi : heavy_first) {
    std::vector<StrictPartition> pool = key.classes;
    remove_classes(pool, {&pi});
    std::vector<StrictPartition> alphas = distinct(pool);
    std::reverse(alphas.begin(), alphas.end());
    for (const auto& alpha : alphas) {
      auto rhos = schubert::divisor_predecessors(alpha);
      std::reverse(rhos.begin(), rhos.end());
      for (const auto& rho : rhos) add_for(0, pi, alpha, rho);
    }
  }
  return out;
}

Bootstrapper::Bootstrapper(GWTable& table, BootstrapOptions options) : table_(table), options_(options) {}

namespace {

std::string witness_of(int d, const Candidate& c) {
  return "d=" + std::to_string(d) + "; lambdas=(" + join_classes(c.lambdas(), ",") + ")";
}

void require_enumerative(const GWKey& key, const Rat& v) {
  if (!v.is_integer() || v.sign() < 0)
    throw InternalError(key.str() + " came out as " + v.str() + ", not a nonnegative integer");
}

}  // namespace

std::optional<Rat> Bootstrapper::lookup_factor(const GWKey& key, bool& blocked) {
  if (const Entry* e = table_.find(key)) return e->value;
  if (key.d == 1) {
    const Rat v = bgg::line_invariant(key.classes, kN);
    table_.insert(key, Entry{v, Provenance::LineFormula, 0, {}});
    return v;
  }
  return resolve(key, blocked);
}

std::optional<Rat> Bootstrapper::known_only(const GWKey& key) {
  if (const Entry* e = table_.find(key)) return e->value;
  if (key.d == 1) {
    const Rat v = bgg::line_invariant(key.classes, kN);
    table_.insert(key, Entry{v, Provenance::LineFormula, 0, {}});
    return v;
  }
  return std::nullopt;
}

std::optional<Rat> Bootstrapper::resolve(const GWKey& key, bool& blocked) {
  if (const Entry* e = table_.find(key)) return e->value;
  if (key.d == 1) return lookup_factor(key, blocked);
  if (failed_.count(key)) return std::nullopt;
  if (in_progress_.count(key)) {
    blocked = true;
    return std::nullopt;
  }
  in_progress_.insert(key);
  bool local_blocked = false;
  for (const auto& cand : candidates(key)) {
    const RelationInstance rel = build_relation(key.d, cand.lambdas());
    auto v = solve_for(rel, key, [&](const GWKey& k) { return lookup_factor(k, local_blocked); });
    if (!v) continue;
    require_enumerative(key, *v);
    in_progress_.erase(key);
    table_.insert(key, Entry{*v, Provenance::Wdvv, cand.case_id, witness_of(key.d, cand)});
    ++solved_;
    if (options_.cross_check) cross_check(key, *v, cand);
    return v;
  }
  in_progress_.erase(key);
  if (local_blocked) {
    blocked = true;
  } else {
    failed_.insert(key);
    missing_.insert(key);
  }
  return std::nullopt;
}

void Bootstrapper::cross_check(const GWKey& key, const Rat& value, const Candidate& used) {
  for (const auto& cand : candidates(key)) {
    if (cand.rho == used.rho && cand.sigma == used.sigma && cand.pi == used.pi && cand.rest == used.rest) continue;
    const RelationInstance rel = build_relation(key.d, cand.lambdas());
    auto v = solve_for(rel, key, [&](const GWKey& k) { return known_only(k); });
    if (!v) continue;
    ++cross_checks_;
    if (*v != value)
      throw InconsistentDerivation(key.str() + ": " + witness_of(key.d, used) + " gives " + value.str() + " but " +
                                   witness_of(key.d, cand) + " gives " + v->str());
    return;
  }
}

Rat Bootstrapper::value(const GWKey& key) {
  const Reduction r = reduce(key);
  if (r.value) {
    table_.insert(key, Entry{*r.value, r.rule, 0, {}});
    return *r.value;
  }
  bool blocked = false;
  missing_.clear();
  std::optional<Rat> v;
  if (r.key.d == 1) {
    v = lookup_factor(r.key, blocked);
  } else {
    v = resolve(r.key, blocked);
    if (!v && blocked) {
      // A cycle through the stack blocked every route; with the stack now
      // empty, one retry sees every value solved in the meantime.
      blocked = false;
      v = resolve(r.key, blocked);
    }
  }
  if (!v) {
    std::string msg = "cannot determine " + r.key.str() + " from associativity relations";
    if (!missing_.empty()) {
      msg += "; undetermined dependencies:";
      std::size_t shown = 0;
      for (const auto& k : missing_) {
        if (k == r.key) continue;
        if (shown++ == 20) {
          msg += " ...";
          break;
        }
        msg += " " + k.str();
      }
    }
    throw Underdetermined(msg);
  }
  const Rat result = r.multiplier * *v;
  if (!(r.key == key)) table_.insert(key, Entry{result, Provenance::DivisorAxiom, 0, {}});
  return result;
}

void Bootstrapper::run(const std::vector<GWKey>& targets) {
  if (options_.jobs > 1) prefetch_lines();
  for (const auto& t : targets) value(t);
}

std::vector<Derivation> Bootstrapper::derivations(const GWKey& key, std::size_t limit) {
  std::vector<Derivation> out;
  if (key.d < 2) return out;
  for (const auto& cand : candidates(key)) {
    if (out.size() >= limit) break;
    const RelationInstance rel = build_relation(key.d, cand.lambdas());
    bool blocked = false;
    auto v = solve_for(rel, key, [&](const GWKey& k) {
      if (k == key) return std::optional<Rat>{};
      return lookup_factor(k, blocked);
    });
    if (v) out.push_back(Derivation{*v, cand});
  }
  return out;
}

void Bootstrapper::prefetch_lines() {
  for (auto& ln : bgg::enumerate_line_numbers(kN, options_.jobs))
    table_.insert(GWKey::make(1, ln.classes), Entry{ln.value, Provenance::LineFormula, 0, {}});
}

Rat septics(GWTable& table, BootstrapOptions options) {
  Bootstrapper b(table, options);
  if (options.jobs > 1) b.prefetch_lines();
  return b.value(GWKey::make(7, std::vector<StrictPartition>(7, StrictPartition{4, 3, 2, 1})));
}

namespace {

void degree_keys_rec(const std::vector<StrictPartition>& pool, std::size_t from, int slots, int remaining,
                     std::vector<StrictPartition>& acc, int d, std::vector<GWKey>& out) {
  if (slots == 0) {
    if (remaining == 0) out.push_back(GWKey{d, acc});
    return;
  }
  for (std::size_t i = from; i < pool.size(); ++i) {
    const int w = pool[i].weight();
    if (w * slots > remaining) break;
    if (w + schubert::kDim * (slots - 1) < remaining) continue;
    acc.push_back(pool[i]);
    degree_keys_rec(pool, i, slots - 1, remaining - w, acc, d, out);
    acc.pop_back();
  }
}

}  // namespace

std::vector<GWKey> keys_of_degree(int d) {
  std::vector<StrictPartition> pool;
  for (const auto& c : schubert::basis())
    if (c.weight() >= 2) pool.push_back(c);
  std::vector<GWKey> out;
  for (int m = 1;; ++m) {
    const int target = weight_target(d, m);
    if (2 * m > target) break;
    if (schubert::kDim * m < target) continue;
    std::vector<StrictPartition> acc;
    degree_keys_rec(pool, 0, m, target, acc, d, out);
  }
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<GWKey> conic_case_keys() {
  std::vector<GWKey> out;
  for (const auto& key : keys_of_degree(2)) {
    if (key.classes.size() < 3) continue;
    for (const auto& cp : case_patterns()) {
      std::vector<StrictPartition> pool = key.classes;
      if (remove_classes(pool, {&cp.alpha, &cp.pi})) {
        out.push_back(key);
        break;
      }
    }
  }
  return out;
}

}  // namespace ogq::wdvv
