#pragma once

// Classification of two-dimensional real Jordan laws into the six canonical
// types plus the zero law.

#include <array>
#include <optional>
#include <string>
#include <variant>

#include "jordan2/identities.hpp"

namespace jordan2 {

enum class CanonicalClass { Psi0, Psi1, Psi2, Psi3, Psi4, Psi5, Abelian };

inline constexpr std::array<CanonicalClass, 7> kAllClasses = {
    CanonicalClass::Psi0, CanonicalClass::Psi1, CanonicalClass::Psi2,   CanonicalClass::Psi3,
    CanonicalClass::Psi4, CanonicalClass::Psi5, CanonicalClass::Abelian};

/// "Psi0" ... "Psi5", "Abelian".
std::string to_string(CanonicalClass c);
/// Lower-case node name: "psi0" ... "psi5", "abelian".
std::string node_name(CanonicalClass c);
/// Accepts either spelling, case-insensitively. Throws ParseError.
CanonicalClass parse_class(const std::string& text);

/// The exact canonical law of a class (Abelian is the zero law).
Law<Rational> canonical_law(CanonicalClass c);

enum class Sign { Positive, Negative };

/// Basis change to the canonical form. Exact whenever the construction stays
/// inside Q; a square root of a non-square forces the real variant.
using AnyMap = std::variant<LinearMap<Rational>, LinearMap<double>>;

LinearMap<double> to_real(const AnyMap& f);
bool is_exact(const AnyMap& f);

template <class T>
struct ClassificationReport {
  CanonicalClass cls = CanonicalClass::Abelian;
  std::optional<Vec<T>> unit;
  DirectionSet<T> isotropy;
  std::optional<Sign> discriminant_sign;  // present iff unit present and isotropy empty
  int image_rank = 0;
  AnyMap witness;
};

/// D = b² + 4a where, in the basis (unit, v) with v the first standard basis
/// vector not parallel to the unit, v ∘ v = a·unit + b·v. Throws
/// PreconditionError if `unit` is not the unit of the law.
template <class T>
T discriminant_in_unit_basis(const Law<T>& law, const Vec<T>& unit);

/// Decision tree: zero law, then unit with discriminant sign, then image
/// rank and nilpotency of the image generator. Throws NotJordan, and in
/// approximate mode Indeterminate when a branch quantity is within tolerance
/// of zero.
///
/// Approximate decisions use two bands around zero: a quantity q with scale
/// s counts as zero if |q| <= tol·s, as nonzero if |q| > sqrt(tol)·s, and is
/// Indeterminate in between.
template <class T>
ClassificationReport<T> classify(const Law<T>& law);

template <class T>
AnyMap iso_witness(const Law<T>& law) {
  return classify(law).witness;
}

template <class T>
bool is_isomorphic(const Law<T>& a, const Law<T>& b) {
  return classify(a).cls == classify(b).cls;
}

/// act(a, f) == b under the comparison rule of T. Throws SingularMap.
template <class T>
bool verify_witness(const Law<T>& a, const Law<T>& b, const LinearMap<T>& f) {
  return act(a, f).approx_equal(b);
}

/// Checks a classification witness against the canonical law of its class,
/// within `tol` in real arithmetic (exactly if both sides are exact).
bool verify_witness(const Law<Rational>& a, CanonicalClass c, const AnyMap& f, double tol = kDefaultTolerance);
bool verify_witness(const Law<double>& a, CanonicalClass c, const AnyMap& f, double tol = kDefaultTolerance);

}  // namespace jordan2
