#include "jordan2/contract.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

#include "jordan2/geometry.hpp"

namespace jordan2 {

namespace {

// Dense coefficient vectors of ordinary polynomials, lowest degree first.
using Dense = std::vector<Rational>;

Dense to_dense(const LaurentPoly& p) {
  Dense d(static_cast<std::size_t>(p.degree()) + 1, Rational(0));
  for (const auto& [k, c] : p.terms()) d[static_cast<std::size_t>(k)] = c;
  return d;
}

LaurentPoly from_dense(const Dense& d) {
  LaurentPoly p;
  for (std::size_t k = 0; k < d.size(); ++k)
    if (sgn(d[k]) != 0) p += LaurentPoly::monomial(d[k], static_cast<int>(k));
  return p;
}

void trim(Dense& d) {
  while (!d.empty() && sgn(d.back()) == 0) d.pop_back();
}

// Remainder of a by b (b nonzero, trimmed).
Dense remainder(Dense a, const Dense& b) {
  trim(a);
  while (a.size() >= b.size()) {
    const Rational q = a.back() / b.back();
    const std::size_t shift = a.size() - b.size();
    for (std::size_t k = 0; k < b.size(); ++k) a[shift + k] -= q * b[k];
    a.pop_back();
    trim(a);
  }
  return a;
}

Dense quotient(Dense a, const Dense& b) {
  trim(a);
  if (a.size() < b.size()) return {};
  Dense q(a.size() - b.size() + 1, Rational(0));
  while (a.size() >= b.size()) {
    const Rational c = a.back() / b.back();
    const std::size_t shift = a.size() - b.size();
    q[shift] = c;
    for (std::size_t k = 0; k < b.size(); ++k) a[shift + k] -= c * b[k];
    a.pop_back();
    trim(a);
  }
  return q;
}

Dense gcd(Dense a, Dense b) {
  trim(a);
  trim(b);
  while (!b.empty()) {
    Dense r = remainder(a, b);
    a = std::move(b);
    b = std::move(r);
  }
  return a;
}

LaurentPoly determinant(const std::vector<std::vector<LaurentPoly>>& m) {
  const std::size_t n = m.size();
  if (n == 1) return m[0][0];
  LaurentPoly det;
  for (std::size_t j = 0; j < n; ++j) {
    if (m[0][j].is_zero()) continue;
    std::vector<std::vector<LaurentPoly>> minor;
    for (std::size_t r = 1; r < n; ++r) {
      std::vector<LaurentPoly> row;
      for (std::size_t c = 0; c < n; ++c)
        if (c != j) row.push_back(m[r][c]);
      minor.push_back(std::move(row));
    }
    const LaurentPoly term = m[0][j] * determinant(minor);
    if (j % 2 == 0) {
      det += term;
    } else {
      det -= term;
    }
  }
  return det;
}

// adj[i][j] = (-1)^{i+j} det(m without row j and column i).
std::vector<std::vector<LaurentPoly>> adjugate(const std::vector<std::vector<LaurentPoly>>& m) {
  const std::size_t n = m.size();
  std::vector<std::vector<LaurentPoly>> adj(n, std::vector<LaurentPoly>(n));
  if (n == 1) {
    adj[0][0] = LaurentPoly(1L);
    return adj;
  }
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      std::vector<std::vector<LaurentPoly>> minor;
      for (std::size_t r = 0; r < n; ++r) {
        if (r == j) continue;
        std::vector<LaurentPoly> row;
        for (std::size_t c = 0; c < n; ++c)
          if (c != i) row.push_back(m[r][c]);
        minor.push_back(std::move(row));
      }
      const LaurentPoly d = determinant(minor);
      adj[i][j] = (i + j) % 2 == 0 ? d : -d;
    }
  return adj;
}

std::string format_entry(const Rational& x) {
  if (x.get_den() == 1) return x.get_num().get_str();
  return format_rational(x);
}

}  // namespace

LaurentPoly::LaurentPoly(const Rational& constant) { add_term(0, constant); }

LaurentPoly LaurentPoly::monomial(const Rational& coeff, int power) {
  LaurentPoly p;
  p.add_term(power, coeff);
  return p;
}

void LaurentPoly::add_term(int power, const Rational& c) {
  if (sgn(c) == 0) return;
  auto it = terms_.find(power);
  if (it == terms_.end()) {
    terms_.emplace(power, c);
    return;
  }
  it->second += c;
  if (sgn(it->second) == 0) terms_.erase(it);
}

Rational LaurentPoly::coeff(int power) const {
  const auto it = terms_.find(power);
  return it == terms_.end() ? Rational(0) : it->second;
}

int LaurentPoly::valuation() const {
  if (is_zero()) throw PreconditionError("valuation of the zero polynomial");
  return terms_.begin()->first;
}

int LaurentPoly::degree() const {
  if (is_zero()) throw PreconditionError("degree of the zero polynomial");
  return terms_.rbegin()->first;
}

LaurentPoly LaurentPoly::shifted(int k) const {
  LaurentPoly p;
  for (const auto& [e, c] : terms_) p.terms_.emplace(e + k, c);
  return p;
}

LaurentPoly LaurentPoly::compose_power(int k) const {
  if (k < 1) throw PreconditionError("substitution power must be positive");
  LaurentPoly p;
  for (const auto& [e, c] : terms_) p.terms_.emplace(e * k, c);
  return p;
}

Rational LaurentPoly::evaluate(const Rational& s) const {
  if (sgn(s) == 0) {
    if (!is_zero() && valuation() < 0) throw PreconditionError("Laurent polynomial has a pole at s = 0");
    return coeff(0);
  }
  Rational out(0);
  for (const auto& [e, c] : terms_) {
    Rational pw(1);
    const Rational base = e >= 0 ? s : Rational(1) / s;
    for (int k = 0; k < std::abs(e); ++k) pw *= base;
    out += c * pw;
  }
  return out;
}

LaurentPoly& LaurentPoly::operator+=(const LaurentPoly& o) {
  for (const auto& [e, c] : o.terms_) add_term(e, c);
  return *this;
}

LaurentPoly& LaurentPoly::operator-=(const LaurentPoly& o) {
  for (const auto& [e, c] : o.terms_) add_term(e, -c);
  return *this;
}

LaurentPoly& LaurentPoly::operator*=(const LaurentPoly& o) {
  LaurentPoly p;
  for (const auto& [e1, c1] : terms_)
    for (const auto& [e2, c2] : o.terms_) p.add_term(e1 + e2, c1 * c2);
  terms_ = std::move(p.terms_);
  return *this;
}

std::string LaurentPoly::to_string(const std::string& var) const {
  if (is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [e, c] : terms_) {
    Rational mag = abs(c);
    if (first) {
      if (sgn(c) < 0) os << "-";
    } else {
      os << (sgn(c) < 0 ? " - " : " + ");
    }
    first = false;
    if (e == 0) {
      os << format_entry(mag);
      continue;
    }
    if (mag != 1) os << format_entry(mag) << "*";
    os << var;
    if (e != 1) os << "^" << e;
  }
  return os.str();
}

RationalFunction::RationalFunction(const LaurentPoly& p) : num_(p), den_(Rational(1)) { reduce(); }

RationalFunction::RationalFunction(const LaurentPoly& num, const LaurentPoly& den) : num_(num), den_(den) {
  if (den_.is_zero()) throw SingularMap("rational function with zero denominator");
  reduce();
}

void RationalFunction::reduce() {
  if (num_.is_zero()) {
    den_ = LaurentPoly(1L);
    return;
  }
  const int v = num_.valuation() - den_.valuation();
  Dense p = to_dense(num_.shifted(-num_.valuation()));
  Dense q = to_dense(den_.shifted(-den_.valuation()));
  const Dense g = gcd(p, q);
  if (g.size() > 1) {
    p = quotient(p, g);
    q = quotient(q, g);
  }
  const Rational lead = q.back();
  for (Rational& x : p) x /= lead;
  for (Rational& x : q) x /= lead;
  num_ = from_dense(p);
  den_ = from_dense(q);
  if (v > 0) num_ = num_.shifted(v);
  if (v < 0) den_ = den_.shifted(-v);
}

Rational RationalFunction::value_at_zero() const {
  if (is_zero()) return Rational(0);
  const int v = valuation();
  if (v < 0) throw PreconditionError("rational function has a pole at s = 0");
  if (v > 0) return Rational(0);
  return num_.lowest_coeff() / den_.lowest_coeff();
}

RationalFunction& RationalFunction::operator+=(const RationalFunction& o) {
  *this = RationalFunction(num_ * o.den_ + o.num_ * den_, den_ * o.den_);
  return *this;
}

RationalFunction& RationalFunction::operator-=(const RationalFunction& o) {
  *this = RationalFunction(num_ * o.den_ - o.num_ * den_, den_ * o.den_);
  return *this;
}

RationalFunction& RationalFunction::operator*=(const RationalFunction& o) {
  *this = RationalFunction(num_ * o.num_, den_ * o.den_);
  return *this;
}

std::string RationalFunction::to_string(const std::string& var) const {
  if (den_ == LaurentPoly(1L)) return num_.to_string(var);
  return "(" + num_.to_string(var) + ")/(" + den_.to_string(var) + ")";
}

ContractionFamily::ContractionFamily(std::vector<std::vector<LaurentPoly>> e, int m)
    : dim(e.size()), entries(std::move(e)), ramification(m) {
  if (dim == 0) throw DimensionMismatch("contraction family must be non-empty");
  for (const auto& row : entries)
    if (row.size() != dim) throw DimensionMismatch("contraction family must be square");
  if (m < 1) throw PreconditionError("ramification index must be positive");
}

ContractionFamily ContractionFamily::scaling(std::size_t n) {
  std::vector<std::vector<LaurentPoly>> e(n, std::vector<LaurentPoly>(n));
  for (std::size_t i = 0; i < n; ++i) e[i][i] = LaurentPoly::s();
  return ContractionFamily(std::move(e));
}

ContractionFamily ContractionFamily::constant(const LinearMap<Rational>& f) {
  const std::size_t n = f.dim();
  std::vector<std::vector<LaurentPoly>> e(n, std::vector<LaurentPoly>(n));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) e[i][j] = LaurentPoly(f(i, j));
  return ContractionFamily(std::move(e));
}

LaurentPoly ContractionFamily::det() const { return determinant(entries); }

LinearMap<Rational> ContractionFamily::at(const Rational& s) const {
  if (sgn(s) == 0) throw PreconditionError("family is evaluated only at nonzero parameters");
  Matrix<Rational> m(dim, dim);
  for (std::size_t i = 0; i < dim; ++i)
    for (std::size_t j = 0; j < dim; ++j) m(i, j) = entries[i][j].evaluate(s);
  return LinearMap<Rational>(std::move(m));
}

ContractionFamily ContractionFamily::reparametrized(int k) const {
  auto e = entries;
  for (auto& row : e)
    for (auto& x : row) x = x.compose_power(k);
  return ContractionFamily(std::move(e), ramification * k);
}

Matrix<RationalFunction> family_inverse(const ContractionFamily& f) {
  const LaurentPoly det = f.det();
  if (det.is_zero()) throw SingularMap("contraction family is identically singular");
  const auto adj = adjugate(f.entries);
  Matrix<RationalFunction> inv(f.dim, f.dim);
  for (std::size_t i = 0; i < f.dim; ++i)
    for (std::size_t j = 0; j < f.dim; ++j) inv(i, j) = RationalFunction(adj[i][j], det);
  return inv;
}

std::string to_string(ContractionResult::Outcome o) {
  return o == ContractionResult::Outcome::Limit ? "limit" : "pole_at_0";
}

ContractionResult contract(const Law<Rational>& law, const ContractionFamily& f) {
  const std::size_t n = law.dim();
  if (f.dim != n) throw DimensionMismatch("contract: family and law dimensions differ");
  if (!is_jordan(law)) throw NotJordan("contract: input law fails the Jordan identity");
  const LaurentPoly det = f.det();
  if (det.is_zero()) throw SingularMap("contraction family is identically singular");
  const auto adj = adjugate(f.entries);

  // image[l][i][j]: l-th coordinate of φ(f e_i, f e_j).
  std::vector<LaurentPoly> image(n * n * n);
  for (std::size_t l = 0; l < n; ++l)
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = i; j < n; ++j) {
        LaurentPoly acc;
        for (std::size_t a = 0; a < n; ++a)
          for (std::size_t b = 0; b < n; ++b) {
            if (sgn(law(l, a, b)) == 0) continue;
            acc += LaurentPoly(law(l, a, b)) * f.entries[a][i] * f.entries[b][j];
          }
        image[(l * n + i) * n + j] = acc;
        image[(l * n + j) * n + i] = acc;
      }

  ContractionResult r;
  r.dim = n;
  r.constants.resize(n * n * n);
  for (std::size_t k = 0; k < n; ++k)
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j) {
        LaurentPoly num;
        for (std::size_t l = 0; l < n; ++l) num += adj[k][l] * image[(l * n + i) * n + j];
        r.constants[(k * n + i) * n + j] = RationalFunction(num, det);
      }

  bool pole = false;
  for (std::size_t k = 0; k < n; ++k)
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j) {
        const RationalFunction& c = r.constant(k, i, j);
        if (c.is_zero() || c.valuation() >= 0) continue;
        if (!pole || c.valuation() < r.pole_valuation) {
          r.pole_entry = {k, i, j};
          r.pole_valuation = c.valuation();
        }
        pole = true;
      }
  if (pole) {
    r.outcome = ContractionResult::Outcome::PoleAt0;
    return r;
  }

  Law<Rational> limit(n);
  for (std::size_t k = 0; k < n; ++k)
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = i; j < n; ++j) limit.set(k, i, j, r.constant(k, i, j).value_at_zero());
  if (!is_jordan(limit)) throw Error("contraction limit fails the Jordan identity");
  r.outcome = ContractionResult::Outcome::Limit;
  r.limit = std::move(limit);
  return r;
}

const std::vector<KnownContraction>& known_contractions() {
  static const std::vector<KnownContraction> catalogue = [] {
    using C = CanonicalClass;
    const LaurentPoly s = LaurentPoly::s();
    const LaurentPoly one(1L), zero, half(Rational(1, 2));
    const auto sq = [](const LaurentPoly& p) { return p * p; };
    const ContractionFamily diag_1_t({{one, zero}, {zero, s}});
    std::vector<KnownContraction> out = {
        {C::Psi5, diag_1_t, C::Psi1, "f(e1) = e1, f(e2) = t e2"},
        {C::Psi0, diag_1_t, C::Psi1, "f(e1) = e1, f(e2) = t e2"},
        {C::Psi0, ContractionFamily({{s, half}, {zero, half}}), C::Psi2, "f(e1) = t e1, f(e2) = (e1 + e2)/2"},
        {C::Psi5, ContractionFamily({{half * s, sq(s)}, {half * s, zero}}, 2), C::Psi3,
         "f(e1) = (sqrt(t)/2)(e1 + e2), f(e2) = t e1"},
        {C::Psi1, ContractionFamily({{s, zero}, {s, sq(s)}}), C::Psi3, "f(e1) = t (e1 + e2), f(e2) = t^2 e2"},
        {C::Psi0, ContractionFamily({{s, zero}, {sq(s), s * sq(s)}}), C::Psi3,
         "f(e1) = t e1 + t^2 e2, f(e2) = t^3 e2"},
        {C::Psi2, ContractionFamily({{one, zero}, {s, sq(s)}}), C::Psi3, "f(e1) = e1 + t e2, f(e2) = t^2 e2"},
    };
    for (C c : kAllClasses) out.push_back({c, ContractionFamily::scaling(2), C::Abelian, "f = t Id"});
    return out;
  }();
  return catalogue;
}

bool check_dimension_inequality(CanonicalClass source, CanonicalClass target) {
  return orbit_dim(canonical_law(source)) > orbit_dim(canonical_law(target));
}

DegenerationGraph degeneration_graph() {
  using C = CanonicalClass;
  DegenerationGraph g;
  g.nodes.assign(kAllClasses.begin(), kAllClasses.end());
  for (const KnownContraction& kc : known_contractions()) {
    const ContractionResult r = contract(canonical_law(kc.source), kc.family);
    if (!r.limit || classify(*r.limit).cls != kc.target)
      throw Error("contraction witness " + to_string(kc.source) + " -> " + to_string(kc.target) + " fails");
    if (kc.source == kc.target) continue;
    g.edges.emplace(std::make_pair(kc.source, kc.target), kc.family);
  }
  for (const auto& [edge, family] : g.edges) {
    const auto [a, b] = edge;
    if (!check_dimension_inequality(a, b))
      throw Error("edge " + to_string(a) + " -> " + to_string(b) + " breaks the orbit-dimension drop");
    if (b == C::Psi0 || b == C::Psi4 || b == C::Psi5) throw Error("edge into a rigid class: " + to_string(b));
    if (a == C::Psi5 && b == C::Psi2) throw Error("edge Psi5 -> Psi2 is forbidden");
  }
  return g;
}

std::vector<std::pair<CanonicalClass, CanonicalClass>> sorted_edges(const DegenerationGraph& g) {
  std::vector<std::pair<CanonicalClass, CanonicalClass>> out;
  for (const auto& [edge, family] : g.edges) out.push_back(edge);
  std::sort(out.begin(), out.end(), [](const auto& x, const auto& y) {
    return std::make_pair(node_name(x.first), node_name(x.second)) <
           std::make_pair(node_name(y.first), node_name(y.second));
  });
  return out;
}

std::string emit_dot(const DegenerationGraph& g) {
  std::ostringstream os;
  os << "digraph jordan2 {\n";
  for (CanonicalClass c : g.nodes) {
    const auto m = canonical_law(c).to_matrix();
    os << "  " << node_name(c) << " [label=\"" << node_name(c) << "\\n(";
    for (std::size_t r = 0; r < 3; ++r) {
      if (r > 0) os << "; ";
      os << format_entry(m[r][0]) << " " << format_entry(m[r][1]);
    }
    os << ")\"];\n";
  }
  for (const auto& [a, b] : sorted_edges(g)) os << "  " << node_name(a) << " -> " << node_name(b) << ";\n";
  os << "}\n";
  return os.str();
}

std::string emit_edge_csv(const DegenerationGraph& g) {
  std::ostringstream os;
  os << "source,target,source_orbit_dim,target_orbit_dim\n";
  for (const auto& [a, b] : sorted_edges(g))
    os << node_name(a) << "," << node_name(b) << "," << orbit_dim(canonical_law(a)) << ","
       << orbit_dim(canonical_law(b)) << "\n";
  return os.str();
}

}  // namespace jordan2
