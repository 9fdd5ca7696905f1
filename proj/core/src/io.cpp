#include "jordan2/io.hpp"

#include <fstream>
#include <sstream>

namespace jordan2 {

namespace {

Json entry_json(const Rational& x) { return format_rational(x); }
Json entry_json(double x) { return x; }

Rational rational_entry(const Json& v) {
  if (!v.is_string()) throw ParseError("rational entries must be \"p/q\" strings");
  return parse_rational(v.get<std::string>());
}

double real_entry(const Json& v) {
  if (!v.is_number()) throw ParseError("real entries must be numbers");
  return v.get<double>();
}

const Json& field(const Json& doc, const char* name) {
  if (!doc.is_object() || !doc.contains(name)) throw ParseError(std::string("missing field \"") + name + "\"");
  return doc.at(name);
}

std::size_t dim_field(const Json& doc) {
  const Json& d = field(doc, "dim");
  if (!d.is_number_integer() || d.get<long>() < 1) throw ParseError("\"dim\" must be a positive integer");
  return d.get<std::size_t>();
}

template <class T, class Entry>
Law<T> law_from_doc(const Json& doc, std::size_t n, Entry entry) {
  if (doc.contains("matrix")) {
    if (n != 2) throw ParseError("\"matrix\" is only valid for dim = 2");
    const Json& m = doc.at("matrix");
    if (!m.is_array() || m.size() != 3) throw ParseError("\"matrix\" must have three rows");
    CoeffMatrix<T> cm;
    for (std::size_t r = 0; r < 3; ++r) {
      if (!m[r].is_array() || m[r].size() != 2) throw ParseError("\"matrix\" rows must have two entries");
      for (std::size_t c = 0; c < 2; ++c) cm[r][c] = entry(m[r][c]);
    }
    return Law<T>::from_matrix(cm);
  }
  const Json& t = field(doc, "tensor");
  std::vector<std::vector<std::vector<T>>> tensor(n);
  if (!t.is_array() || t.size() != n) throw ParseError("\"tensor\" must have dim slices");
  for (std::size_t k = 0; k < n; ++k) {
    if (!t[k].is_array() || t[k].size() != n) throw ParseError("\"tensor\" slice has wrong size");
    tensor[k].resize(n);
    for (std::size_t i = 0; i < n; ++i) {
      if (!t[k][i].is_array() || t[k][i].size() != n) throw ParseError("\"tensor\" row has wrong size");
      for (std::size_t j = 0; j < n; ++j) tensor[k][i].push_back(entry(t[k][i][j]));
    }
  }
  try {
    return Law<T>::from_tensor(tensor);
  } catch (const PreconditionError& e) {
    throw ParseError(e.what());
  }
}

template <class T>
Json law_json(const Law<T>& law, const char* mode) {
  Json doc;
  doc["dim"] = law.dim();
  doc["mode"] = mode;
  if (law.dim() == 2) {
    Json m = Json::array();
    for (const auto& row : law.to_matrix()) m.push_back(Json::array({entry_json(row[0]), entry_json(row[1])}));
    doc["matrix"] = m;
  } else {
    Json t = Json::array();
    for (std::size_t k = 0; k < law.dim(); ++k) {
      Json slice = Json::array();
      for (std::size_t i = 0; i < law.dim(); ++i) {
        Json row = Json::array();
        for (std::size_t j = 0; j < law.dim(); ++j) row.push_back(entry_json(law(k, i, j)));
        slice.push_back(row);
      }
      t.push_back(slice);
    }
    doc["tensor"] = t;
  }
  return doc;
}

template <class T>
Json vec_json(const Vec<T>& v) {
  Json a = Json::array();
  for (const T& x : v) a.push_back(entry_json(x));
  return a;
}

template <class T>
Json matrix_json(const Matrix<T>& m) {
  Json a = Json::array();
  for (std::size_t i = 0; i < m.rows(); ++i) {
    Json row = Json::array();
    for (std::size_t j = 0; j < m.cols(); ++j) row.push_back(entry_json(m(i, j)));
    a.push_back(row);
  }
  return a;
}

Json direction_json(const ExactDirection& d) { return Json::array({d.x1.to_string(), d.x2.to_string()}); }
Json direction_json(const RealDirection& d) { return Json::array({d.x1, d.x2}); }

template <class T>
Json directions_json(const DirectionSet<T>& s) {
  Json doc;
  doc["all"] = s.is_all();
  Json dirs = Json::array();
  for (const auto& d : s.directions) dirs.push_back(direction_json(d));
  doc["directions"] = dirs;
  return doc;
}

Json histogram_json(const std::map<CanonicalClass, int>& h) {
  Json doc = Json::object();
  for (CanonicalClass c : kAllClasses) {
    const auto it = h.find(c);
    doc[to_string(c)] = it == h.end() ? 0 : it->second;
  }
  return doc;
}

}  // namespace

std::string read_file(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw ParseError("cannot open " + path.string());
  std::ostringstream os;
  os << in.rdbuf();
  return os.str();
}

AnyLaw law_from_json(const Json& doc) {
  const std::size_t n = dim_field(doc);
  const Json& mode = field(doc, "mode");
  if (mode == "rational") return law_from_doc<Rational>(doc, n, rational_entry);
  if (mode == "real") return law_from_doc<double>(doc, n, real_entry);
  throw ParseError("\"mode\" must be \"rational\" or \"real\"");
}

AnyLaw parse_law_text(const std::string& text) {
  Json doc;
  try {
    doc = Json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    throw ParseError(std::string("malformed JSON: ") + e.what());
  }
  return law_from_json(doc);
}

AnyLaw parse_law(const std::filesystem::path& path) { return parse_law_text(read_file(path)); }

Json law_to_json(const Law<Rational>& law) { return law_json(law, "rational"); }
Json law_to_json(const Law<double>& law) { return law_json(law, "real"); }

ContractionFamily family_from_json(const Json& doc) {
  const std::size_t n = dim_field(doc);
  const Json& m = field(doc, "ramification");
  if (!m.is_number_integer() || m.get<long>() < 1) throw ParseError("\"ramification\" must be a positive integer");
  const Json& e = field(doc, "entries");
  if (!e.is_array() || e.size() != n) throw ParseError("\"entries\" must have dim rows");
  std::vector<std::vector<LaurentPoly>> entries(n, std::vector<LaurentPoly>(n));
  for (std::size_t i = 0; i < n; ++i) {
    if (!e[i].is_array() || e[i].size() != n) throw ParseError("\"entries\" rows must have dim entries");
    for (std::size_t j = 0; j < n; ++j) {
      if (!e[i][j].is_array()) throw ParseError("each entry is a list of terms");
      for (const Json& term : e[i][j]) {
        const Json& p = field(term, "power");
        if (!p.is_number_integer()) throw ParseError("\"power\" must be an integer");
        entries[i][j] += LaurentPoly::monomial(rational_entry(field(term, "coeff")), p.get<int>());
      }
    }
  }
  return ContractionFamily(std::move(entries), m.get<int>());
}

ContractionFamily parse_family(const std::filesystem::path& path) {
  try {
    return family_from_json(Json::parse(read_file(path)));
  } catch (const nlohmann::json::parse_error& e) {
    throw ParseError(std::string("malformed JSON: ") + e.what());
  }
}

Json family_to_json(const ContractionFamily& f) {
  Json doc;
  doc["dim"] = f.dim;
  doc["ramification"] = f.ramification;
  Json rows = Json::array();
  for (const auto& row : f.entries) {
    Json r = Json::array();
    for (const LaurentPoly& p : row) {
      Json terms = Json::array();
      for (const auto& [power, c] : p.terms()) terms.push_back({{"coeff", format_rational(c)}, {"power", power}});
      r.push_back(terms);
    }
    rows.push_back(r);
  }
  doc["entries"] = rows;
  return doc;
}

Json map_to_json(const AnyMap& f) {
  return std::visit(
      [](const auto& m) {
        Json doc;
        doc["mode"] = is_exact_v<std::decay_t<decltype(m(0, 0))>> ? "rational" : "real";
        doc["matrix"] = matrix_json(m.matrix());
        return doc;
      },
      f);
}

template <class T>
Json classification_to_json(const ClassificationReport<T>& r) {
  Json doc;
  doc["class"] = to_string(r.cls);
  doc["unit"] = r.unit ? vec_json(*r.unit) : Json(nullptr);
  doc["isotropy"] = directions_json(r.isotropy);
  doc["discriminant_sign"] =
      r.discriminant_sign ? Json(*r.discriminant_sign == Sign::Positive ? "positive" : "negative") : Json(nullptr);
  doc["image_rank"] = r.image_rank;
  doc["witness"] = map_to_json(r.witness);
  return doc;
}

template <class T>
Json tangent_to_json(const TangentReport<T>& r) {
  const auto basis = [](const std::vector<BilinearSym<T>>& b) {
    Json a = Json::array();
    for (const auto& x : b) a.push_back(law_to_json(x));
    return a;
  };
  Json doc;
  doc["orbit_dim"] = r.orbit_dim;
  doc["tangent_basis"] = basis(r.tangent_basis);
  doc["g_dim"] = r.g_dim;
  doc["g_basis"] = basis(r.g_basis);
  return doc;
}

template Json classification_to_json(const ClassificationReport<Rational>&);
template Json classification_to_json(const ClassificationReport<double>&);
template Json tangent_to_json(const TangentReport<Rational>&);
template Json tangent_to_json(const TangentReport<double>&);

Json rigidity_to_json(const RigidityReport& r) {
  Json doc;
  doc["base_class"] = to_string(r.base_class);
  doc["epsilon"] = r.epsilon;
  doc["samples"] = r.samples;
  doc["seed"] = r.seed;
  doc["class_histogram"] = histogram_json(r.class_histogram);
  doc["indeterminate_count"] = r.indeterminate_count;
  doc["nonconverged_count"] = r.nonconverged_count;
  doc["classified"] = r.classified();
  doc["empirically_rigid"] = r.empirically_rigid();
  doc["verdict"] = r.verdict();
  return doc;
}

std::string rigidity_csv(const RigidityReport& r) {
  std::ostringstream os;
  os << "index,a1,a2,b1,b2,c1,c2,residual,iterations,class\n";
  for (const SampleOutcome& o : r.outcomes) {
    os << o.sample.index;
    if (o.sample.point) {
      for (double x : o.sample.point->coords) os << "," << format_real(x);
      os << "," << format_real(o.sample.point->residual_norm) << "," << o.sample.point->iterations;
    } else {
      os << ",,,,,,,,";
    }
    os << "," << (o.cls ? to_string(*o.cls) : o.failure) << "\n";
  }
  return os.str();
}

Json forbidden_to_json(const ForbiddenReport& r) {
  Json doc;
  doc["epsilon"] = r.epsilon;
  doc["samples"] = r.samples;
  doc["seed"] = r.seed;
  doc["class_histogram"] = histogram_json(r.class_histogram);
  doc["indeterminate_count"] = r.indeterminate_count;
  doc["psi5_count"] = r.psi5_count;
  doc["slice_samples"] = r.slice_samples;
  doc["slice_with_ideal"] = r.slice_with_ideal;
  doc["slice_simple"] = r.slice_simple;
  doc["pass"] = r.pass();
  return doc;
}

Json contraction_to_json(const ContractionResult& r) {
  Json doc;
  doc["outcome"] = to_string(r.outcome);
  Json constants = Json::array();
  for (std::size_t k = 0; k < r.dim; ++k) {
    Json slice = Json::array();
    for (std::size_t i = 0; i < r.dim; ++i) {
      Json row = Json::array();
      for (std::size_t j = 0; j < r.dim; ++j) row.push_back(r.constant(k, i, j).to_string());
      slice.push_back(row);
    }
    constants.push_back(slice);
  }
  doc["constants"] = constants;
  if (r.limit) {
    doc["limit"] = law_to_json(*r.limit);
    doc["limit_class"] = r.dim == 2 ? Json(to_string(classify(*r.limit).cls)) : Json(nullptr);
  } else {
    doc["pole_entry"] = r.pole_entry;
    doc["valuation"] = r.pole_valuation;
  }
  return doc;
}

Json graph_to_json(const DegenerationGraph& g) {
  Json doc;
  Json nodes = Json::array();
  for (CanonicalClass c : g.nodes) nodes.push_back(node_name(c));
  doc["nodes"] = nodes;
  Json edges = Json::array();
  for (const auto& [a, b] : sorted_edges(g)) {
    Json e;
    e["source"] = node_name(a);
    e["target"] = node_name(b);
    const auto& fam = g.edges.at({a, b});
    e["family"] = fam ? family_to_json(*fam) : Json(nullptr);
    edges.push_back(e);
  }
  doc["edges"] = edges;
  return doc;
}

}  // namespace jordan2
