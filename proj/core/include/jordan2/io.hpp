#pragma once

// JSON law and family files, and JSON/CSV renderings of every report.

#include <filesystem>
#include <string>
#include <variant>

#include <nlohmann/json.hpp>

#include "jordan2/contract.hpp"
#include "jordan2/deform.hpp"
#include "jordan2/geometry.hpp"

namespace jordan2 {

using Json = nlohmann::ordered_json;

/// A law as loaded from a file: exact for "rational" mode, double for "real".
using AnyLaw = std::variant<Law<Rational>, Law<double>>;

/// { "dim": n, "mode": "rational"|"real", "matrix": [[a1,a2],[b1,b2],[c1,c2]] }
/// for n = 2, or "tensor": c[k][i][j] for any n. Rational entries are
/// reduced "p/q" strings, real entries are numbers. Throws ParseError on any
/// malformed, unreduced or asymmetric input.
AnyLaw law_from_json(const Json& doc);
AnyLaw parse_law_text(const std::string& text);
AnyLaw parse_law(const std::filesystem::path& path);

Json law_to_json(const Law<Rational>& law);
Json law_to_json(const Law<double>& law);

/// { "dim": n, "ramification": m, "entries": [[[{"coeff": "p/q", "power": k}, ...]]] }
/// with entries[i][j] the i-th coordinate of f(e_j). Throws ParseError.
ContractionFamily family_from_json(const Json& doc);
ContractionFamily parse_family(const std::filesystem::path& path);
Json family_to_json(const ContractionFamily& f);

Json map_to_json(const AnyMap& f);

template <class T>
Json classification_to_json(const ClassificationReport<T>& r);
template <class T>
Json tangent_to_json(const TangentReport<T>& r);

Json rigidity_to_json(const RigidityReport& r);
/// One row per sample: index, projected coordinates, residual, iterations, class.
std::string rigidity_csv(const RigidityReport& r);
Json forbidden_to_json(const ForbiddenReport& r);
Json contraction_to_json(const ContractionResult& r);
Json graph_to_json(const DegenerationGraph& g);

/// Reads a whole file; throws ParseError if it cannot be opened.
std::string read_file(const std::filesystem::path& path);

}  // namespace jordan2
