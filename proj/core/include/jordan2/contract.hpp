#pragma once

// Exact contractions lim_{t->0} f_t^{-1} φ(f_t ·, f_t ·) for one-parameter
// basis families with Laurent-polynomial entries in s, where t = s^m.

#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "jordan2/classify.hpp"

namespace jordan2 {

/// Finite sum of c_k s^k over integer k with rational coefficients; zero
/// coefficients are never stored.
class LaurentPoly {
 public:
  LaurentPoly() = default;
  LaurentPoly(const Rational& constant);  // NOLINT(google-explicit-constructor)
  LaurentPoly(long constant) : LaurentPoly(Rational(constant)) {}  // NOLINT(google-explicit-constructor)

  static LaurentPoly monomial(const Rational& coeff, int power);
  /// The variable s.
  static LaurentPoly s() { return monomial(Rational(1), 1); }

  const std::map<int, Rational>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  Rational coeff(int power) const;
  /// Lowest exponent with a nonzero coefficient. Throws PreconditionError for zero.
  int valuation() const;
  /// Highest exponent with a nonzero coefficient. Throws PreconditionError for zero.
  int degree() const;
  Rational lowest_coeff() const { return coeff(valuation()); }

  /// Multiplication by s^k.
  LaurentPoly shifted(int k) const;
  /// Substitution s -> s^k (k >= 1).
  LaurentPoly compose_power(int k) const;
  /// Throws PreconditionError at s = 0 when a negative power is present.
  Rational evaluate(const Rational& s) const;

  LaurentPoly& operator+=(const LaurentPoly& o);
  LaurentPoly& operator-=(const LaurentPoly& o);
  LaurentPoly& operator*=(const LaurentPoly& o);
  friend LaurentPoly operator+(LaurentPoly a, const LaurentPoly& b) { return a += b; }
  friend LaurentPoly operator-(LaurentPoly a, const LaurentPoly& b) { return a -= b; }
  friend LaurentPoly operator*(LaurentPoly a, const LaurentPoly& b) { return a *= b; }
  LaurentPoly operator-() const { return LaurentPoly() - *this; }
  friend bool operator==(const LaurentPoly& a, const LaurentPoly& b) { return a.terms_ == b.terms_; }

  /// Terms in ascending power, e.g. "1/2*s + s^2"; "0" for zero.
  std::string to_string(const std::string& var = "s") const;

 private:
  void add_term(int power, const Rational& c);
  std::map<int, Rational> terms_;
};

/// num / den over Q[s] in lowest terms: both are polynomials (no negative
/// powers), gcd(num, den) = 1 and den is monic. Zero is 0 / 1.
class RationalFunction {
 public:
  RationalFunction() : den_(Rational(1)) {}
  RationalFunction(const LaurentPoly& p);  // NOLINT(google-explicit-constructor)
  /// Throws SingularMap when den is zero.
  RationalFunction(const LaurentPoly& num, const LaurentPoly& den);

  const LaurentPoly& numerator() const { return num_; }
  const LaurentPoly& denominator() const { return den_; }
  bool is_zero() const { return num_.is_zero(); }
  /// Order of vanishing at s = 0 (negative for a pole). Throws for zero.
  int valuation() const { return num_.valuation() - den_.valuation(); }
  /// Value at s = 0; throws PreconditionError for a pole.
  Rational value_at_zero() const;

  RationalFunction& operator+=(const RationalFunction& o);
  RationalFunction& operator-=(const RationalFunction& o);
  RationalFunction& operator*=(const RationalFunction& o);
  friend RationalFunction operator+(RationalFunction a, const RationalFunction& b) { return a += b; }
  friend RationalFunction operator-(RationalFunction a, const RationalFunction& b) { return a -= b; }
  friend RationalFunction operator*(RationalFunction a, const RationalFunction& b) { return a *= b; }
  friend bool operator==(const RationalFunction& a, const RationalFunction& b) {
    return a.num_ == b.num_ && a.den_ == b.den_;
  }

  std::string to_string(const std::string& var = "s") const;

 private:
  void reduce();
  LaurentPoly num_;
  LaurentPoly den_;
};

/// f_t as an n x n matrix of Laurent polynomials in s with t = s^m.
/// entries[i][j] is the i-th coordinate of f_t(e_j).
struct ContractionFamily {
  std::size_t dim = 0;
  std::vector<std::vector<LaurentPoly>> entries;
  int ramification = 1;

  /// Throws DimensionMismatch for a non-square matrix and PreconditionError
  /// for m < 1.
  ContractionFamily(std::vector<std::vector<LaurentPoly>> entries, int ramification = 1);
  ContractionFamily() = default;

  /// diag(t, ..., t).
  static ContractionFamily scaling(std::size_t n);
  static ContractionFamily constant(const LinearMap<Rational>& f);

  LaurentPoly det() const;
  /// The map at a nonzero parameter value s.
  LinearMap<Rational> at(const Rational& s) const;
  /// The same family after s -> s^k, with ramification k·m.
  ContractionFamily reparametrized(int k) const;

  friend bool operator==(const ContractionFamily&, const ContractionFamily&) = default;
};

/// Adjugate over determinant, entries reduced. Throws SingularMap when the
/// determinant vanishes identically.
Matrix<RationalFunction> family_inverse(const ContractionFamily& f);

struct ContractionResult {
  enum class Outcome { Limit, PoleAt0 };
  Outcome outcome = Outcome::Limit;
  std::size_t dim = 0;
  /// Structure constants of f_t^{-1} φ(f_t ·, f_t ·), indexed (k·n + i)·n + j.
  std::vector<RationalFunction> constants;
  std::optional<Law<Rational>> limit;  // Outcome::Limit
  // Outcome::PoleAt0: first (k, i, j) attaining the most negative valuation.
  std::array<std::size_t, 3> pole_entry{};
  int pole_valuation = 0;

  const RationalFunction& constant(std::size_t k, std::size_t i, std::size_t j) const {
    return constants.at((k * dim + i) * dim + j);
  }
};

std::string to_string(ContractionResult::Outcome o);

/// Throws NotJordan if `law` fails the identity, DimensionMismatch on a size
/// mismatch and SingularMap for an identically singular family.
ContractionResult contract(const Law<Rational>& law, const ContractionFamily& f);

struct KnownContraction {
  CanonicalClass source;
  ContractionFamily family;
  CanonicalClass target;
  std::string description;
};

/// Catalogue of witnesses: the basis families for the non-trivial edges and
/// diag(t, t) from every class to Abelian.
const std::vector<KnownContraction>& known_contractions();

/// orbit_dim(source) > orbit_dim(target) for the canonical laws.
bool check_dimension_inequality(CanonicalClass source, CanonicalClass target);

struct DegenerationGraph {
  std::vector<CanonicalClass> nodes;
  std::map<std::pair<CanonicalClass, CanonicalClass>, std::optional<ContractionFamily>> edges;

  bool has_edge(CanonicalClass a, CanonicalClass b) const { return edges.count({a, b}) > 0; }
};

/// Edges of every verified catalogue witness (self-edges excluded). Throws
/// Error if a witness fails, an edge breaks the strict orbit-dimension drop,
/// or an edge enters Psi0, Psi4 or Psi5, or joins Psi5 to Psi2.
DegenerationGraph degeneration_graph();

/// Edges ordered lexicographically by (source name, target name).
std::vector<std::pair<CanonicalClass, CanonicalClass>> sorted_edges(const DegenerationGraph& g);

std::string emit_dot(const DegenerationGraph& g);

/// "source,target,source_orbit_dim,target_orbit_dim" rows in emit_dot order.
std::string emit_edge_csv(const DegenerationGraph& g);

}  // namespace jordan2
