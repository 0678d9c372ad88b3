#include <gtest/gtest.h>

#include <map>

#include "oracles.hpp"
#include "rootgeom/root_catalog.hpp"

using namespace rootgeom;

namespace {

QVec e(std::size_t d, std::size_t i) { return QVec::unit(d, i); }
QVec halves(std::initializer_list<int> signs) {
  std::vector<Rational> c;
  for (int s : signs) c.emplace_back(s, 2);
  return QVec(c);
}

const RootSystem& cached(Family f, int n) {
  static std::map<SimpleType, RootSystem> cache;
  SimpleType t(f, n);
  auto it = cache.find(t);
  if (it == cache.end()) it = cache.emplace(t, build(t)).first;
  return it->second;
}

}  // namespace

TEST(Types, ParseAndReject) {
  EXPECT_EQ(parse_type("A7"), SimpleType(Family::A, 7));
  EXPECT_EQ(parse_type("e8"), SimpleType(Family::E, 8));
  EXPECT_EQ(to_string(parse_type("g2")), "G2");
  for (const char* bad : {"", "A", "A0", "B1", "C2", "D3", "E5", "E9", "F5", "G3", "X4", "A-1", "A7x"}) {
    EXPECT_THROW(parse_type(bad), Error) << bad;
  }
  EXPECT_THROW(SimpleType(Family::D, 3), Error);
}

TEST(Build, AnGram) {
  const auto& a7 = cached(Family::A, 7);
  EXPECT_EQ(a7.gram(0, 0), Rational(7, 8));
  EXPECT_EQ(a7.gram(0, 1), Rational(-1, 8));
  EXPECT_EQ(a7.gram(3, 5), Rational(-1, 8));
}

TEST(Build, RootCounts) {
  EXPECT_EQ(cached(Family::E, 8).roots.size(), 240u);
  EXPECT_EQ(cached(Family::F, 4).roots.size(), 48u);
  EXPECT_EQ(cached(Family::G, 2).roots.size(), 12u);
  for (const auto& t : admissible_types(9)) {
    EXPECT_EQ(build(t).roots.size(), t.root_count()) << to_string(t);
  }
}

TEST(Build, F4RootListHasThreeShapes) {
  const auto& f4 = cached(Family::F, 4);
  int units = 0, pairs = 0, half = 0;
  for (const auto& r : f4.roots) {
    int nonzero = 0;
    for (std::size_t i = 0; i < 4; ++i) nonzero += r[i] != 0;
    if (!is_integer(r[0])) ++half;
    else if (nonzero == 1) ++units;
    else if (nonzero == 2) ++pairs;
  }
  EXPECT_EQ(units, 8);
  EXPECT_EQ(pairs, 24);
  EXPECT_EQ(half, 16);
}

TEST(Build, InvariantsForEveryType) {
  for (const auto& t : admissible_types(8)) {
    const auto s = build(t);
    SCOPED_TRACE(to_string(t));
    EXPECT_TRUE(std::is_sorted(s.roots.begin(), s.roots.end()));
    for (const auto& r : s.roots) {
      EXPECT_TRUE(s.is_root(-r));
      EXPECT_TRUE(contains(s.weight_lattice, r));
    }
    ASSERT_EQ(s.simple_roots.size(), static_cast<std::size_t>(t.rank()));
    EXPECT_EQ(cartan_matrix(s.simple_roots, s.gram), standard_cartan_matrix(t));
    // Crystallographic: every 2<a,b>/<b,b> is an integer in [-3, 3].
    const auto& g = s.gram.matrix();
    std::vector<QVec> gb;
    for (const auto& b : s.roots) {
      QVec w(b.size());
      for (std::size_t i = 0; i < b.size(); ++i) {
        for (std::size_t j = 0; j < b.size(); ++j) w[i] += g(i, j) * b[j];
      }
      gb.push_back(w);
    }
    auto dot = [](const QVec& x, const QVec& y) {
      Rational sum = 0;
      for (std::size_t i = 0; i < x.size(); ++i) sum += x[i] * y[i];
      return sum;
    };
    for (const auto& a : s.roots) {
      for (std::size_t k = 0; k < s.roots.size(); ++k) {
        const auto& b = s.roots[k];
        const Rational c = 2 * dot(a, gb[k]) / dot(b, gb[k]);
        ASSERT_TRUE(is_integer(c));
        ASSERT_LE(abs(c), 3);
        if (a == b || a == -b) continue;
        ASSERT_LE(abs(c), t.family() == Family::G ? 3 : 2);
      }
    }
  }
}

TEST(Build, G2Normalization) {
  const auto& g2 = cached(Family::G, 2);
  auto norms = g2.root_norms();
  ASSERT_EQ(norms.size(), 2u);
  EXPECT_EQ(norms[0], 2);
  EXPECT_EQ(norms[1], 6);
  EXPECT_EQ(weight_lattice_index(g2), 1);
}

TEST(Projection, E7AndE6Shells) {
  EXPECT_EQ(build_e_projection(SimpleType(Family::E, 7)).roots.size(), 126u);
  EXPECT_EQ(build_e_projection(SimpleType(Family::E, 6)).roots.size(), 72u);
  EXPECT_THROW(build_e_projection(SimpleType(Family::E, 8)), Error);
}

TEST(Projection, OrthogonalVectorIsFixed) {
  const QVec along = e(8, 0) - e(8, 1);
  const QVec w = e(8, 0) + e(8, 1);
  EXPECT_EQ(project_orthogonal(w, std::span(&along, 1), GramForm::identity(8)), w);
  const QVec p = project_orthogonal(e(8, 0), std::span(&along, 1), GramForm::identity(8));
  EXPECT_EQ(p, Rational(1, 2) * w);
}

TEST(Projection, E7AndE6RootsLieInE8) {
  const auto& e8 = cached(Family::E, 8);
  for (int n : {6, 7}) {
    const auto& s = cached(Family::E, n);
    for (const auto& r : s.roots) EXPECT_TRUE(oracle::member(e8.roots, r));
  }
}

TEST(Projection, KillingProportionality) {
  // The weight lattice form on a base is a positive multiple of the
  // symmetrized Cartan matrix, which for simply laced types is the Cartan
  // matrix itself.
  for (int n : {6, 7}) {
    const auto& s = cached(Family::E, n);
    auto cartan = standard_cartan_matrix(s.type);
    RationalMatrix c(cartan.size(), cartan.size());
    for (std::size_t i = 0; i < cartan.size(); ++i) {
      for (std::size_t j = 0; j < cartan.size(); ++j) c(i, j) = cartan[i][j];
    }
    auto multiple = proportionality(gram_of(s.simple_roots, s.gram), c);
    ASSERT_TRUE(multiple.has_value());
    EXPECT_GT(*multiple, 0);
  }
}

TEST(Weyl, TableValues) {
  EXPECT_EQ(weyl_order(SimpleType(Family::E, 8)), 696729600u);
  EXPECT_EQ(weyl_order(SimpleType(Family::E, 7)), 2903040u);
  EXPECT_EQ(weyl_order(SimpleType(Family::E, 6)), 51840u);
  EXPECT_EQ(weyl_order(SimpleType(Family::A, 7)), 40320u);
  EXPECT_EQ(weyl_order(SimpleType(Family::D, 8)), 5160960u);
  EXPECT_EQ(weyl_order(SimpleType(Family::B, 4)), 384u);
  EXPECT_EQ(weyl_order(SimpleType(Family::C, 4)), 384u);
  EXPECT_EQ(weyl_order(SimpleType(Family::F, 4)), 1152u);
  EXPECT_EQ(weyl_order(SimpleType(Family::G, 2)), 12u);
}

TEST(Weyl, GeneratedGroupMatchesTableUpToRankFour) {
  for (const auto& t : admissible_types(4)) {
    if (t.rank() > 4) continue;
    const auto s = build(t);
    SCOPED_TRACE(to_string(t));
    EXPECT_EQ(generated_group_order(s.simple_roots, s.gram), weyl_order(t));
    EXPECT_EQ(oracle::reflection_group_order(s.simple_roots, s.gram.matrix()), weyl_order(t));
  }
}

TEST(Dynkin, AutomorphismOrders) {
  EXPECT_EQ(dynkin_automorphism_order(SimpleType(Family::A, 1)), 1);
  EXPECT_EQ(dynkin_automorphism_order(SimpleType(Family::A, 2)), 2);
  EXPECT_EQ(dynkin_automorphism_order(SimpleType(Family::B, 4)), 1);
  EXPECT_EQ(dynkin_automorphism_order(SimpleType(Family::D, 4)), 6);
  EXPECT_EQ(dynkin_automorphism_order(SimpleType(Family::D, 5)), 2);
  EXPECT_EQ(dynkin_automorphism_order(SimpleType(Family::E, 6)), 2);
  EXPECT_EQ(dynkin_automorphism_order(SimpleType(Family::E, 8)), 1);
  EXPECT_EQ(dynkin_automorphism_order(SimpleType(Family::G, 2)), 1);
}

TEST(Dynkin, TableMatchesPermutationCount) {
  for (const auto& t : admissible_types(8)) {
    const auto cartan = standard_cartan_matrix(t);
    SCOPED_TRACE(to_string(t));
    EXPECT_EQ(dynkin_automorphism_order(t), oracle::diagram_automorphisms(cartan));
    EXPECT_EQ(count_diagram_automorphisms(cartan), oracle::diagram_automorphisms(cartan));
  }
}

TEST(Reflect, Examples) {
  const auto& e8 = cached(Family::E, 8);
  const QVec a = e(8, 0) - e(8, 1);
  EXPECT_EQ(reflect(a, a, e8.gram), -a);
  EXPECT_EQ(reflect(e(3, 2), e(3, 0) - e(3, 1), GramForm::identity(3)), e(3, 2));
  EXPECT_THROW(reflect(a, QVec(8), e8.gram), Error);
}

TEST(Reflect, HalfSpinRootOnD8Root) {
  const auto& e8 = cached(Family::E, 8);
  const QVec r = e(8, 0) - e(8, 1);
  // (1,-1,1,...,1)/2 has odd coordinate sum and is not in the E8 lattice;
  // the formula still evaluates, with <r,alpha> = 1.
  const QVec odd = halves({1, -1, 1, 1, 1, 1, 1, 1});
  EXPECT_FALSE(contains(e8.weight_lattice, odd));
  EXPECT_EQ(reflect(r, odd, e8.gram), halves({1, -1, -1, -1, -1, -1, -1, -1}));
  EXPECT_EQ(reflect(r, odd, e8.gram), oracle::reflect(r, odd, e8.gram.matrix()));
  // An actual E8 root outside D8, again with <r,alpha> = 1.
  const QVec alpha = halves({1, -1, 1, 1, 1, 1, 1, -1});
  ASSERT_TRUE(e8.is_root(alpha));
  const QVec image = reflect(r, alpha, e8.gram);
  EXPECT_EQ(image, halves({1, -1, -1, -1, -1, -1, -1, 1}));
  EXPECT_TRUE(e8.is_root(image));
}

TEST(Reflect, IsometryAndInvolution) {
  for (auto [f, n] : {std::pair{Family::A, 4}, {Family::B, 3}, {Family::F, 4}, {Family::G, 2}, {Family::E, 6}}) {
    const auto& s = cached(f, n);
    const auto& g = s.gram.matrix();
    for (const auto& a : s.simple_roots) {
      for (const auto& v : s.roots) {
        const QVec w = reflect(v, a, s.gram);
        EXPECT_EQ(reflect(w, a, s.gram), v);
        EXPECT_EQ(oracle::inner(w, w, g), oracle::inner(v, v, g));
        EXPECT_TRUE(s.is_root(w));
      }
    }
  }
}

TEST(Cartan, Examples) {
  const auto& a2 = cached(Family::A, 2);
  EXPECT_EQ(cartan_matrix(a2.simple_roots, a2.gram), (CartanMatrix{{2, -1}, {-1, 2}}));
  const auto& g2 = cached(Family::G, 2);
  EXPECT_EQ(cartan_matrix(g2.simple_roots, g2.gram), (CartanMatrix{{2, -1}, {-3, 2}}));
  std::vector<QVec> one{g2.simple_roots[0]};
  EXPECT_EQ(cartan_matrix(one, g2.gram), (CartanMatrix{{2}}));
  EXPECT_THROW(cartan_matrix(std::vector<QVec>{e(2, 0), QVec{Rational(1, 3), 0}}, GramForm::identity(2)), Error);
}

TEST(Closure, SimpleRootsGenerateAllRoots) {
  for (auto [f, n] : {std::pair{Family::A, 3}, {Family::C, 3}, {Family::D, 5}, {Family::G, 2}, {Family::F, 4}, {Family::E, 7}}) {
    const auto& s = cached(f, n);
    EXPECT_EQ(reflection_closure(s.simple_roots, s.gram), s.roots) << to_string(s.type);
  }
}

TEST(Index, WeightOverRootLattice) {
  // Order of the center of the simply connected group.
  const std::vector<std::pair<SimpleType, int>> expected{
      {SimpleType(Family::A, 7), 8}, {SimpleType(Family::B, 4), 2}, {SimpleType(Family::C, 5), 2},
      {SimpleType(Family::D, 8), 4}, {SimpleType(Family::E, 6), 3}, {SimpleType(Family::E, 7), 2},
      {SimpleType(Family::E, 8), 1}, {SimpleType(Family::F, 4), 1}, {SimpleType(Family::G, 2), 1}};
  for (const auto& [t, idx] : expected) {
    EXPECT_EQ(weight_lattice_index(cached(t.family(), t.rank())), idx) << to_string(t);
  }
}

TEST(MatchCartan, FindsA2InsideG2LongRoots) {
  const auto& g2 = cached(Family::G, 2);
  auto found = match_cartan(g2.roots, standard_cartan_matrix(SimpleType(Family::A, 2)), g2.gram);
  ASSERT_EQ(found.size(), 2u);
  for (const auto& r : found) EXPECT_EQ(norm(r, g2.gram), 6);
  EXPECT_TRUE(match_cartan(g2.roots, standard_cartan_matrix(SimpleType(Family::B, 3)), g2.gram).empty());
}

TEST(Catalog, AdmissibleTypes) {
  auto types = admissible_types(10);
  // A1-A10, B2-B10, C3-C10, D4-D10, E6-E8, F4, G2.
  EXPECT_EQ(types.size(), 10u + 9u + 8u + 7u + 3u + 1u + 1u);
  EXPECT_TRUE(std::is_sorted(types.begin(), types.end()));
}
