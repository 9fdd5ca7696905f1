#include "jordan2/cli.hpp"

#include <algorithm>
#include <cstdint>
#include <fstream>
#include <optional>
#include <sstream>

#include "CLI11.hpp"
#include "jordan2/contract.hpp"
#include "jordan2/deform.hpp"
#include "jordan2/io.hpp"

namespace jordan2::cli {

namespace {

std::string fmt(const Rational& x) { return x.get_den() == 1 ? x.get_num().get_str() : x.get_str(); }
std::string fmt(double x) { return format_real(x); }

template <class T>
std::string law_text(const Law<T>& law) {
  if (law.dim() != 2) return law_to_json(law).dump();
  std::ostringstream os;
  os << "(";
  const auto m = law.to_matrix();
  for (std::size_t r = 0; r < 3; ++r) {
    if (r > 0) os << "; ";
    os << fmt(m[r][0]) << " " << fmt(m[r][1]);
  }
  os << ")";
  return os.str();
}

template <class T>
std::string vec_text(const Vec<T>& v) {
  std::string s = "(";
  for (std::size_t i = 0; i < v.size(); ++i) s += (i ? ", " : "") + fmt(v[i]);
  return s + ")";
}

std::string map_text(const AnyMap& f) {
  return std::visit(
      [](const auto& m) {
        std::ostringstream os;
        os << "(";
        for (std::size_t i = 0; i < m.dim(); ++i) {
          if (i > 0) os << "; ";
          for (std::size_t j = 0; j < m.dim(); ++j) os << (j ? " " : "") << fmt(m(i, j));
        }
        os << ")";
        return os.str();
      },
      f);
}

void write_file(const std::string& path, const std::string& text) {
  std::ofstream f(path, std::ios::binary);
  if (!f) throw ParseError("cannot write " + path);
  f << text;
}

struct Options {
  bool json = false;
  std::string law_path;
  std::string family_path;
  std::string class_name;
  double eps = 0.0;
  int samples = 0;
  std::uint64_t seed = 0;
  int threads = 1;
  std::string csv_path;
  bool dot = false;
  bool csv = false;
  std::string out_dir;
};

class Runner {
 public:
  Runner(const Options& o, std::ostream& out) : o_(o), out_(out) {}

  int emit(const Json& doc, const std::string& text, int code) {
    if (o_.json) {
      out_ << doc.dump(2) << "\n";
    } else {
      out_ << text;
    }
    return code;
  }

  template <class T>
  int check(const Law<T>& law) {
    const auto res = sj_residuals(law);
    const bool ok = is_jordan(law);
    const IdentityConsistency ic = identity_consistency(law);
    Json doc;
    Json r = Json::array();
    std::ostringstream os;
    for (std::size_t e = 0; e < res.size(); ++e) {
      r.push_back(is_exact_v<T> ? Json(fmt(res[e])) : Json(scalar_cast<double>(res[e])));
      os << "sj[" << e + 1 << "] = " << fmt(res[e]) << "\n";
    }
    doc["residuals"] = r;
    doc["is_jordan"] = ok;
    doc["consistency"] = {{"grid", ic.grid}, {"sj", ic.sj}, {"j2", ic.j2}};
    os << "jordan: " << (ok ? "true" : "false") << "\n";
    return emit(doc, os.str(), ok ? kOk : kNegative);
  }

  template <class T>
  int classify_law(const Law<T>& law) {
    const auto rep = classify(law);
    const bool simple = is_simple(law);
    Json doc = classification_to_json(rep);
    doc["simple"] = simple;
    std::ostringstream os;
    os << "class: " << to_string(rep.cls) << "\n";
    os << "simple: " << (simple ? "true" : "false") << "\n";
    os << "unit: " << (rep.unit ? vec_text(*rep.unit) : "none") << "\n";
    os << "image_rank: " << rep.image_rank << "\n";
    if (rep.discriminant_sign)
      os << "discriminant: " << (*rep.discriminant_sign == Sign::Positive ? "positive" : "negative") << "\n";
    os << "witness: " << map_text(rep.witness) << "\n";
    return emit(doc, os.str(), kOk);
  }

  template <class T>
  int orbit(const Law<T>& law) {
    const auto [dim, basis] = orbit_tangent(law);
    Json doc;
    doc["orbit_dim"] = dim;
    Json b = Json::array();
    std::ostringstream os;
    os << "orbit_dim: " << dim << "\n";
    for (const auto& x : basis) {
      b.push_back(law_to_json(x));
      os << "  " << law_text(x) << "\n";
    }
    doc["tangent_basis"] = b;
    return emit(doc, os.str(), kOk);
  }

  template <class T>
  int gspace(const Law<T>& law) {
    const auto [dim, basis] = g_space(law);
    Json doc;
    doc["g_dim"] = dim;
    Json b = Json::array();
    std::ostringstream os;
    os << "g_dim: " << dim << "\n";
    for (const auto& x : basis) {
      b.push_back(law_to_json(x));
      os << "  " << law_text(x) << "\n";
    }
    doc["g_basis"] = b;
    return emit(doc, os.str(), kOk);
  }

  int rigidity() {
    const RigidityReport r = rigidity_probe(parse_class(o_.class_name), o_.eps, o_.samples, o_.seed, o_.threads);
    if (!o_.csv_path.empty()) write_file(o_.csv_path, rigidity_csv(r));
    const Json doc = rigidity_to_json(r);
    std::ostringstream os;
    os << "base: " << to_string(r.base_class) << "\n";
    os << "samples: " << r.samples << " (seed " << r.seed << ")\n";
    for (const auto& [name, count] : doc["class_histogram"].items()) os << "  " << name << ": " << count << "\n";
    os << "indeterminate: " << r.indeterminate_count << " (nonconverged " << r.nonconverged_count << ")\n";
    os << "verdict: " << r.verdict() << "\n";
    return emit(doc, os.str(), kOk);
  }

  int forbidden() {
    if (o_.samples < 0) throw PreconditionError("sample count must be nonnegative");
    const ForbiddenReport r = forbidden_degeneration_check(o_.eps, o_.samples, o_.seed, o_.threads);
    const Json doc = forbidden_to_json(r);
    std::ostringstream os;
    os << "samples: " << r.samples << " (seed " << r.seed << ")\n";
    for (const auto& [name, count] : doc["class_histogram"].items()) os << "  " << name << ": " << count << "\n";
    os << "Psi5: " << r.psi5_count << "\n";
    os << "slice: " << r.slice_with_ideal << "/" << r.slice_samples << " with ideal span{e2}, " << r.slice_simple
       << " simple\n";
    os << (r.pass() ? "PASS" : "FAIL") << "\n";
    return emit(doc, os.str(), r.pass() ? kOk : kNegative);
  }

  int contract_law(const Law<Rational>& law) {
    const ContractionResult r = contract(law, parse_family(o_.family_path));
    const Json doc = contraction_to_json(r);
    std::ostringstream os;
    if (r.limit) {
      os << "limit: " << law_text(*r.limit) << "\n";
      if (r.dim == 2) os << "class: " << doc["limit_class"].get<std::string>() << "\n";
      return emit(doc, os.str(), kOk);
    }
    os << "pole at s = 0: entry c[" << r.pole_entry[0] + 1 << "][" << r.pole_entry[1] + 1 << "]["
       << r.pole_entry[2] + 1 << "] has valuation " << r.pole_valuation << "\n";
    return emit(doc, os.str(), kNegative);
  }

  int graph() {
    const DegenerationGraph g = degeneration_graph();
    if (o_.dot) {
      out_ << emit_dot(g);
      return kOk;
    }
    if (o_.csv) {
      out_ << emit_edge_csv(g);
      return kOk;
    }
    std::ostringstream os;
    for (const auto& [a, b] : sorted_edges(g)) os << node_name(a) << " -> " << node_name(b) << "\n";
    return emit(graph_to_json(g), os.str(), kOk);
  }

  int catalogue() {
    Json doc = Json::array();
    std::ostringstream os;
    for (CanonicalClass c : kAllClasses) {
      const Law<Rational> law = canonical_law(c);
      doc.push_back({{"class", to_string(c)}, {"law", law_to_json(law)}});
      os << to_string(c) << " " << law_text(law) << "\n";
      if (!o_.out_dir.empty()) write_file(o_.out_dir + "/" + node_name(c) + ".json", law_to_json(law).dump(2) + "\n");
    }
    return emit(doc, os.str(), kOk);
  }

 private:
  const Options& o_;
  std::ostream& out_;
};

int dispatch(const CLI::App& app, const Options& o, std::ostream& out) {
  Runner r(o, out);
  const auto on_law = [&](auto&& fn) {
    return std::visit([&](const auto& law) { return fn(law); }, parse_law(o.law_path));
  };
  if (app.got_subcommand("check")) return on_law([&](const auto& l) { return r.check(l); });
  if (app.got_subcommand("classify")) return on_law([&](const auto& l) { return r.classify_law(l); });
  if (app.got_subcommand("orbit")) return on_law([&](const auto& l) { return r.orbit(l); });
  if (app.got_subcommand("gspace")) return on_law([&](const auto& l) { return r.gspace(l); });
  if (app.got_subcommand("rigidity")) return r.rigidity();
  if (app.got_subcommand("forbidden")) return r.forbidden();
  if (app.got_subcommand("contract")) {
    const AnyLaw law = parse_law(o.law_path);
    if (!std::holds_alternative<Law<Rational>>(law)) throw ParseError("contract requires a rational law file");
    return r.contract_law(std::get<Law<Rational>>(law));
  }
  if (app.got_subcommand("graph")) return r.graph();
  return r.catalogue();
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Two-dimensional real Jordan algebras: identity checks, classification, geometry, contractions",
               "jordan2"};
  app.require_subcommand(1, 1);
  app.fallthrough();
  Options o;
  app.add_flag("--json", o.json, "Machine-readable JSON output");

  const auto law_cmd = [&](const char* name, const char* help) {
    CLI::App* s = app.add_subcommand(name, help);
    s->add_option("law", o.law_path, "Law file")->required();
    return s;
  };
  law_cmd("check", "Print the 12 defining residuals and the Jordan verdict");
  law_cmd("classify", "Classify a law and print the report");
  law_cmd("orbit", "Orbit dimension and tangent basis");
  law_cmd("gspace", "Dimension and basis of the first-order deformation space");

  const auto sampling = [&](CLI::App* s) {
    s->add_option("--eps", o.eps, "Perturbation radius")->required();
    s->add_option("--samples", o.samples, "Number of samples")->required();
    s->add_option("--seed", o.seed, "Random seed")->required();
    s->add_option("--threads", o.threads, "Worker threads (does not change results)")->check(CLI::PositiveNumber);
  };
  CLI::App* rig = app.add_subcommand("rigidity", "Perturb a canonical law and classify the projections");
  rig->add_option("--class", o.class_name, "Canonical class (Psi0..Psi5, Abelian)")->required();
  sampling(rig);
  rig->add_option("--csv", o.csv_path, "Write one CSV row per sample to this file");
  sampling(app.add_subcommand("forbidden", "Check that perturbations of Psi2 never classify as Psi5"));

  CLI::App* con = app.add_subcommand("contract", "Contraction limit of a law along a basis family");
  con->add_option("--law", o.law_path, "Law file")->required();
  con->add_option("--family", o.family_path, "Family file")->required();

  CLI::App* gr = app.add_subcommand("graph", "Degeneration graph");
  auto* dot = gr->add_flag("--dot", o.dot, "Graphviz DOT output");
  gr->add_flag("--csv", o.csv, "Edge-list CSV output")->excludes(dot);

  app.add_subcommand("catalogue", "The seven canonical laws")
      ->add_option("--out-dir", o.out_dir, "Also write one law file per class into this directory");

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kOk;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return kOk;
  } catch (const CLI::ParseError& e) {
    err << "jordan2: " << e.what() << "\n";
    return kUsage;
  }

  try {
    return dispatch(app, o, out);
  } catch (const NonConvergence& e) {
    err << "jordan2: numeric failure: " << e.what() << " (residual " << format_real(e.final_residual()) << " after "
        << e.iterations() << " iterations)\n";
    return kNumeric;
  } catch (const Indeterminate& e) {
    err << "jordan2: numeric failure: " << e.what() << "\n";
    return kNumeric;
  } catch (const NotJordan& e) {
    const Json doc = {{"error", "not_jordan"}, {"message", e.what()}};
    if (o.json) out << doc.dump(2) << "\n";
    err << "jordan2: " << e.what() << "\n";
    return kNegative;
  } catch (const Error& e) {
    err << "jordan2: " << e.what() << "\n";
    return kUsage;
  }
}

}  // namespace jordan2::cli
