#include <gtest/gtest.h>

#include <fstream>
#include <set>
#include <sstream>

#include "jordan2/contract.hpp"
#include "test_support.hpp"

namespace jordan2 {
namespace {

using test::psi;
using test::q;
using test::qlaw;
using C = CanonicalClass;
using LP = LaurentPoly;

const LP s = LP::s();
LP pow_s(int k) { return LP::monomial(q(1), k); }

ContractionFamily diag_1_s() { return ContractionFamily({{1, 0}, {0, s}}); }

// Column j holds f(e_j): f(e1) = (s/2)(e1 + e2), f(e2) = s² e1, with t = s².
ContractionFamily psi5_to_psi3() {
  return ContractionFamily({{LP::monomial(q(1, 2), 1), pow_s(2)}, {LP::monomial(q(1, 2), 1), 0}}, 2);
}

Law<Rational> limit_of(const Law<Rational>& law, const ContractionFamily& f) {
  const ContractionResult r = contract(law, f);
  EXPECT_EQ(r.outcome, ContractionResult::Outcome::Limit);
  return r.limit.value_or(Law<Rational>(2));
}

std::string read_text(const std::string& path) {
  std::ifstream in(path);
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

TEST(LaurentPoly, Basics) {
  const LP p = LP::monomial(q(1, 2), 1) + pow_s(2);
  EXPECT_EQ(p.to_string(), "1/2*s + s^2");
  EXPECT_EQ(p.valuation(), 1);
  EXPECT_EQ(p.degree(), 2);
  EXPECT_EQ(p.lowest_coeff(), q(1, 2));
  EXPECT_EQ(p.evaluate(q(2)), q(5));
  EXPECT_EQ(p.compose_power(2), LP::monomial(q(1, 2), 2) + pow_s(4));
  EXPECT_EQ(p.shifted(-1), LP(q(1, 2)) + s);
  EXPECT_EQ(LP().to_string(), "0");
  EXPECT_TRUE((p - p).is_zero());
  EXPECT_EQ((s + 1) * (s - 1), pow_s(2) - 1);
  EXPECT_THROW(LP().valuation(), PreconditionError);
  EXPECT_THROW(pow_s(-1).evaluate(q(0)), PreconditionError);
  EXPECT_EQ(pow_s(-1).evaluate(q(4)), q(1, 4));
}

TEST(RationalFunction, Reduced) {
  const RationalFunction r(pow_s(2) - s, LP(2) * s);
  EXPECT_EQ(r.numerator(), LP(q(1, 2)) * (s - 1));
  EXPECT_EQ(r.denominator(), LP(1));
  EXPECT_EQ(r.value_at_zero(), q(-1, 2));
  const RationalFunction pole(LP(2), s);
  EXPECT_EQ(pole.valuation(), -1);
  EXPECT_EQ(pole.to_string(), "(2)/(s)");
  EXPECT_THROW(pole.value_at_zero(), PreconditionError);
  EXPECT_EQ(pole * RationalFunction(s), RationalFunction(LP(2)));
  EXPECT_THROW(RationalFunction(LP(1), LP()), SingularMap);
  EXPECT_EQ(RationalFunction(LP(1), s) + RationalFunction(LP(-1), s), RationalFunction());
}

TEST(ContractionFamily, Validation) {
  EXPECT_THROW(ContractionFamily({{1, 0}, {0}}), DimensionMismatch);
  EXPECT_THROW(ContractionFamily({{1, 0}, {0, 1}}, 0), PreconditionError);
  EXPECT_EQ(ContractionFamily::scaling(2), ContractionFamily({{s, 0}, {0, s}}));
  EXPECT_EQ(diag_1_s().det(), s);
  EXPECT_EQ(psi5_to_psi3().det(), LP::monomial(q(-1, 2), 3));
  EXPECT_EQ(diag_1_s().at(q(3)), LinearMap<Rational>::diagonal({q(1), q(3)}));
  EXPECT_EQ(diag_1_s().reparametrized(2), ContractionFamily({{1, 0}, {0, pow_s(2)}}, 2));
}

TEST(FamilyInverse, Examples) {
  const Matrix<RationalFunction> inv = family_inverse(diag_1_s());
  EXPECT_EQ(inv(0, 0), RationalFunction(LP(1)));
  EXPECT_EQ(inv(0, 1), RationalFunction());
  EXPECT_EQ(inv(1, 0), RationalFunction());
  EXPECT_EQ(inv(1, 1), RationalFunction(LP(1), s));

  const ContractionFamily f = psi5_to_psi3();
  const Matrix<RationalFunction> g = family_inverse(f);
  for (std::size_t i = 0; i < 2; ++i)
    for (std::size_t j = 0; j < 2; ++j) {
      RationalFunction acc;
      for (std::size_t k = 0; k < 2; ++k) acc += RationalFunction(f.entries[i][k]) * g(k, j);
      EXPECT_EQ(acc, RationalFunction(LP(i == j ? 1 : 0)));
    }
  EXPECT_THROW(family_inverse(ContractionFamily({{1, 2}, {2, 4}})), SingularMap);
  EXPECT_THROW(family_inverse(ContractionFamily({{s, s}, {s, s}})), SingularMap);
}

TEST(Contract, Psi5AlongDiag1T) {
  const ContractionResult r = contract(psi(C::Psi5), diag_1_s());
  ASSERT_EQ(r.outcome, ContractionResult::Outcome::Limit);
  // Intermediate law (1 0; -t² 0; 0 1).
  EXPECT_EQ(r.constant(0, 1, 1), RationalFunction(LP(-1) * pow_s(2)));
  EXPECT_EQ(r.constant(0, 0, 0), RationalFunction(LP(1)));
  EXPECT_EQ(r.constant(1, 0, 1), RationalFunction(LP(1)));
  EXPECT_EQ(*r.limit, psi(C::Psi1));
}

TEST(Contract, ScalingGivesZero) {
  for (C c : kAllClasses) EXPECT_TRUE(limit_of(psi(c), ContractionFamily::scaling(2)).is_zero());
  test::RationalSource src(6);
  for (int k = 0; k < 20; ++k) {
    const Law<Rational> law = act(psi(kAllClasses[k % kAllClasses.size()]), src.invertible_map());
    EXPECT_TRUE(limit_of(law, ContractionFamily::scaling(2)).is_zero());
  }
}

TEST(Contract, PoleForPsi3AlongDiag1T) {
  const ContractionResult r = contract(psi(C::Psi3), diag_1_s());
  EXPECT_EQ(r.outcome, ContractionResult::Outcome::PoleAt0);
  EXPECT_FALSE(r.limit.has_value());
  EXPECT_EQ(r.pole_valuation, -1);
  EXPECT_EQ(r.pole_entry, (std::array<std::size_t, 3>{1, 0, 0}));
  EXPECT_EQ(r.constant(1, 0, 0), RationalFunction(LP(1), s));
  EXPECT_EQ(to_string(r.outcome), "pole_at_0");
}

TEST(Contract, Errors) {
  EXPECT_THROW(contract(qlaw(q(0), q(1), q(1), q(0), q(0), q(0)), diag_1_s()), NotJordan);
  EXPECT_THROW(contract(psi(C::Psi0), ContractionFamily::scaling(3)), DimensionMismatch);
  EXPECT_THROW(contract(psi(C::Psi0), ContractionFamily({{1, 1}, {1, 1}})), SingularMap);
}

TEST(Contract, ConstantFamilyIsTheGroupAction) {
  test::RationalSource src(31);
  for (C c : kAllClasses)
    for (int k = 0; k < 20; ++k) {
      const LinearMap<Rational> f = src.invertible_map();
      const Law<Rational> law = act(psi(c), src.invertible_map());
      EXPECT_EQ(limit_of(law, ContractionFamily::constant(f)), act(law, f));
    }
}

TEST(Contract, ReparametrizationKeepsTheOutcome) {
  for (const KnownContraction& kc : known_contractions())
    for (int k : {2, 3}) {
      const ContractionResult a = contract(psi(kc.source), kc.family);
      const ContractionResult b = contract(psi(kc.source), kc.family.reparametrized(k));
      ASSERT_EQ(a.outcome, b.outcome);
      EXPECT_EQ(a.limit, b.limit);
    }
  const ContractionResult pole = contract(psi(C::Psi3), diag_1_s().reparametrized(2));
  EXPECT_EQ(pole.outcome, ContractionResult::Outcome::PoleAt0);
  EXPECT_EQ(pole.pole_valuation, -2);
}

TEST(Contract, LimitsAreJordan) {
  test::RationalSource src(8);
  for (int k = 0; k < 50; ++k) {
    std::vector<std::vector<LP>> e(2, std::vector<LP>(2));
    for (auto& row : e)
      for (LP& v : row) v = LP::monomial(src.next(), k % 3) + LP::monomial(src.next(), 1 + k % 2);
    ContractionFamily f;
    try {
      f = ContractionFamily(e);
      family_inverse(f);
    } catch (const SingularMap&) {
      continue;
    }
    for (C c : kAllClasses) {
      const ContractionResult r = contract(psi(c), f);
      if (r.limit) {
        EXPECT_TRUE(is_jordan(*r.limit));
      }
    }
  }
}

TEST(Contract, Transitivity) {
  const Law<Rational> p1 = limit_of(psi(C::Psi0), diag_1_s());
  EXPECT_EQ(classify(p1).cls, C::Psi1);
  const ContractionFamily to_p3({{s, 0}, {s, pow_s(2)}});
  EXPECT_EQ(classify(limit_of(p1, to_p3)).cls, C::Psi3);
  EXPECT_TRUE(is_isomorphic(limit_of(psi(C::Psi0), ContractionFamily({{s, 0}, {pow_s(2), pow_s(3)}})), psi(C::Psi3)));
}

TEST(Contract, AntiDiagonalFamilyFromPsi0ReachesZero) {
  // f(e1) = t² e2, f(e2) = t e1.
  EXPECT_TRUE(limit_of(psi(C::Psi0), ContractionFamily({{0, s}, {pow_s(2), 0}})).is_zero());
}

TEST(Contract, Psi2FamilyReachesPsi3NotPsi0) {
  // f(e1) = e1 + t e2, f(e2) = t² e2.
  const Law<Rational> limit = limit_of(psi(C::Psi2), ContractionFamily({{1, 0}, {s, pow_s(2)}}));
  EXPECT_EQ(limit, psi(C::Psi3));
  EXPECT_FALSE(is_isomorphic(limit, psi(C::Psi0)));
}

TEST(Contract, Psi5ToPsi3Limit) {
  const Law<Rational> limit = limit_of(psi(C::Psi5), psi5_to_psi3());
  EXPECT_EQ(limit, qlaw(q(0), q(-1, 2), q(0), q(0), q(0), q(0)));
  EXPECT_EQ(classify(limit).cls, C::Psi3);
}

TEST(KnownContractions, AllVerify) {
  const auto& all = known_contractions();
  EXPECT_EQ(all.size(), 14u);
  std::set<std::pair<C, C>> pairs;
  for (const KnownContraction& kc : all) {
    const ContractionResult r = contract(psi(kc.source), kc.family);
    ASSERT_EQ(r.outcome, ContractionResult::Outcome::Limit) << kc.description;
    EXPECT_TRUE(is_isomorphic(*r.limit, psi(kc.target))) << kc.description;
    EXPECT_FALSE(kc.description.empty());
    pairs.insert({kc.source, kc.target});
  }
  EXPECT_TRUE(pairs.count({C::Psi5, C::Psi1}));
  EXPECT_TRUE(pairs.count({C::Psi0, C::Psi2}));
  EXPECT_TRUE(pairs.count({C::Psi4, C::Abelian}));
  for (C c : kAllClasses) EXPECT_TRUE(pairs.count({c, C::Abelian})) << to_string(c);
}

TEST(DimensionInequality, Examples) {
  EXPECT_TRUE(check_dimension_inequality(C::Psi0, C::Psi1));
  EXPECT_FALSE(check_dimension_inequality(C::Psi3, C::Psi4));
  for (C c : kAllClasses) EXPECT_FALSE(check_dimension_inequality(c, c));
}

TEST(DegenerationGraph, Edges) {
  const DegenerationGraph g = degeneration_graph();
  EXPECT_EQ(g.nodes.size(), 7u);
  const std::set<std::pair<C, C>> expected{
      {C::Psi5, C::Psi1}, {C::Psi5, C::Psi3}, {C::Psi5, C::Abelian}, {C::Psi0, C::Psi1}, {C::Psi0, C::Psi2},
      {C::Psi0, C::Psi3}, {C::Psi0, C::Abelian}, {C::Psi1, C::Psi3}, {C::Psi1, C::Abelian}, {C::Psi2, C::Psi3},
      {C::Psi2, C::Abelian}, {C::Psi3, C::Abelian}, {C::Psi4, C::Abelian}};
  std::set<std::pair<C, C>> got;
  for (const auto& [edge, family] : g.edges) {
    got.insert(edge);
    EXPECT_TRUE(family.has_value());
    EXPECT_TRUE(check_dimension_inequality(edge.first, edge.second));
    EXPECT_NE(edge.first, edge.second);
  }
  EXPECT_EQ(got, expected);
  EXPECT_FALSE(g.has_edge(C::Psi5, C::Psi2));
  for (C c : kAllClasses)
    for (C rigid : {C::Psi0, C::Psi4, C::Psi5}) EXPECT_FALSE(g.has_edge(c, rigid));
}

TEST(DegenerationGraph, Dot) {
  const DegenerationGraph g = degeneration_graph();
  const std::string dot = emit_dot(g);
  EXPECT_EQ(dot, emit_dot(degeneration_graph()));
  EXPECT_EQ(dot, read_text(std::string(JORDAN2_TEST_DATA) + "/graph.dot"));
  EXPECT_NE(dot.find("psi5 -> psi1"), std::string::npos);
  std::istringstream lines(dot);
  int edges = 0;
  for (std::string line; std::getline(lines, line);) edges += line.find(" -> ") != std::string::npos;
  EXPECT_EQ(edges, 13);

  const std::string empty = emit_dot(DegenerationGraph{});
  EXPECT_EQ(empty.find(" -> "), std::string::npos);
  EXPECT_EQ(empty.rfind("digraph", 0), 0u);
}

TEST(DegenerationGraph, EdgesSortedByName) {
  const auto edges = sorted_edges(degeneration_graph());
  ASSERT_EQ(edges.size(), 13u);
  for (std::size_t k = 1; k < edges.size(); ++k)
    EXPECT_LT(std::make_pair(node_name(edges[k - 1].first), node_name(edges[k - 1].second)),
              std::make_pair(node_name(edges[k].first), node_name(edges[k].second)));
  const std::string csv = emit_edge_csv(degeneration_graph());
  EXPECT_EQ(csv.rfind("source,target,source_orbit_dim,target_orbit_dim\n", 0), 0u);
  EXPECT_NE(csv.find("psi5,psi1,4,3"), std::string::npos);
}

}  // namespace
}  // namespace jordan2
