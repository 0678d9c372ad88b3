#include "rootgeom/root_catalog.hpp"

#include <algorithm>
#include <bit>
#include <cctype>
#include <deque>
#include <optional>
#include <set>

namespace rootgeom {

namespace {

QVec unit(std::size_t d, std::size_t i) { return QVec::unit(d, i); }

QVec all_halves(std::size_t d) {
  QVec v(d);
  for (std::size_t i = 0; i < d; ++i) v[i] = Rational(1, 2);
  return v;
}

// +-e_i +- e_j, i < j, in R^d.
void add_pairs(std::vector<QVec>& roots, std::size_t d) {
  for (std::size_t i = 0; i < d; ++i) {
    for (std::size_t j = i + 1; j < d; ++j) {
      for (int si : {1, -1}) {
        for (int sj : {1, -1}) {
          roots.push_back(Rational(si) * unit(d, i) + Rational(sj) * unit(d, j));
        }
      }
    }
  }
}

// Half-integer vectors (+-1/2, ..., +-1/2); `even_minus` keeps only those
// with an even number of minus signs.
void add_half_vectors(std::vector<QVec>& roots, std::size_t d,
                      bool even_minus) {
  for (std::uint32_t mask = 0; mask < (1u << d); ++mask) {
    if (even_minus && (std::popcount(mask) % 2 != 0)) continue;
    QVec v(d);
    for (std::size_t i = 0; i < d; ++i)
      v[i] = (mask >> i & 1u) ? Rational(-1, 2) : Rational(1, 2);
    roots.push_back(std::move(v));
  }
}

std::vector<QVec> standard_basis(std::size_t d) {
  std::vector<QVec> out;
  for (std::size_t i = 0; i < d; ++i) out.push_back(unit(d, i));
  return out;
}

// Z^n + Z(e_1+...+e_n)/2.
IntegralLattice half_spin_lattice(std::size_t n) {
  auto generators = standard_basis(n);
  generators.push_back(all_halves(n));
  return hnf_basis(generators, GramForm::identity(n));
}

RootSystem finish(SimpleType type, GramForm gram, std::vector<QVec> roots,
                  std::vector<QVec> simple_roots, IntegralLattice lattice) {
  std::sort(roots.begin(), roots.end());
  roots.erase(std::unique(roots.begin(), roots.end()), roots.end());
  if (roots.size() != type.root_count()) {
    throw Error("build(" + to_string(type) + "): expected " +
                std::to_string(type.root_count()) + " roots, constructed " +
                std::to_string(roots.size()));
  }
  if (cartan_matrix(simple_roots, gram) != standard_cartan_matrix(type)) {
    throw Error("build(" + to_string(type) +
                "): simple roots do not realize the Cartan matrix");
  }
  const std::size_t dim = gram.dim();
  return RootSystem{type,
                    dim,
                    std::move(gram),
                    std::move(roots),
                    std::move(simple_roots),
                    std::move(lattice)};
}

RootSystem build_a(const SimpleType& type) {
  const auto n = static_cast<std::size_t>(type.rank());
  RationalMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      m(i, j) = (i == j) ? Rational(n, n + 1) : Rational(-1, n + 1);
  GramForm gram(std::move(m));

  // e_0..e_{n-1} are the lattice basis; e_n = -(e_0 + ... + e_{n-1}).
  std::vector<QVec> e = standard_basis(n);
  QVec last(n);
  for (const auto& v : e) last -= v;
  e.push_back(last);

  std::vector<QVec> roots;
  for (std::size_t i = 0; i <= n; ++i)
    for (std::size_t j = 0; j <= n; ++j)
      if (i != j) roots.push_back(e[i] - e[j]);
  std::vector<QVec> simple;
  for (std::size_t i = 0; i < n; ++i) simple.push_back(e[i] - e[i + 1]);
  IntegralLattice lattice(standard_basis(n), gram);
  return finish(type, gram, std::move(roots), std::move(simple),
                std::move(lattice));
}

RootSystem build_bcd(const SimpleType& type) {
  const auto n = static_cast<std::size_t>(type.rank());
  GramForm gram = GramForm::identity(n);
  std::vector<QVec> roots;
  add_pairs(roots, n);
  std::vector<QVec> simple;
  for (std::size_t i = 0; i + 1 < n; ++i) simple.push_back(unit(n, i) - unit(n, i + 1));
  switch (type.family()) {
    case Family::B:
      for (std::size_t i = 0; i < n; ++i) {
        roots.push_back(unit(n, i));
        roots.push_back(-unit(n, i));
      }
      simple.push_back(unit(n, n - 1));
      return finish(type, gram, std::move(roots), std::move(simple),
                    half_spin_lattice(n));
    case Family::C:
      for (std::size_t i = 0; i < n; ++i) {
        roots.push_back(Rational(2) * unit(n, i));
        roots.push_back(Rational(-2) * unit(n, i));
      }
      simple.push_back(Rational(2) * unit(n, n - 1));
      return finish(type, gram, std::move(roots), std::move(simple),
                    IntegralLattice(standard_basis(n), gram));
    default:
      simple.push_back(unit(n, n - 2) + unit(n, n - 1));
      return finish(type, gram, std::move(roots), std::move(simple),
                    half_spin_lattice(n));
  }
}

std::vector<QVec> e8_roots() {
  std::vector<QVec> roots;
  add_pairs(roots, 8);
  add_half_vectors(roots, 8, /*even_minus=*/true);
  std::sort(roots.begin(), roots.end());
  return roots;
}

RootSystem build_e8() {
  const std::size_t d = 8;
  GramForm gram = GramForm::identity(d);
  // Conway-Sloane generator matrix of the even coordinate system.
  std::vector<QVec> generators;
  generators.push_back(Rational(2) * unit(d, 0));
  for (std::size_t i = 0; i + 2 < d; ++i)
    generators.push_back(unit(d, i + 1) - unit(d, i));
  generators.push_back(all_halves(d));

  QVec a1 = all_halves(d);
  for (std::size_t i = 1; i < 7; ++i) a1[i] = Rational(-1, 2);
  std::vector<QVec> simple{a1, unit(d, 0) + unit(d, 1)};
  for (std::size_t i = 0; i < 6; ++i) simple.push_back(unit(d, i + 1) - unit(d, i));

  return finish(SimpleType(Family::E, 8), gram, e8_roots(), std::move(simple),
                hnf_basis(generators, gram));
}

RootSystem build_f4() {
  const std::size_t d = 4;
  GramForm gram = GramForm::identity(d);
  std::vector<QVec> roots;
  for (std::size_t i = 0; i < d; ++i) {
    roots.push_back(unit(d, i));
    roots.push_back(-unit(d, i));
  }
  add_pairs(roots, d);
  add_half_vectors(roots, d, /*even_minus=*/false);
  std::vector<QVec> simple{unit(d, 1) - unit(d, 2), unit(d, 2) - unit(d, 3),
                           unit(d, 3),
                           QVec{Rational(1, 2), Rational(-1, 2), Rational(-1, 2),
                                Rational(-1, 2)}};
  return finish(SimpleType(Family::F, 4), gram, std::move(roots),
                std::move(simple), half_spin_lattice(d));
}

RootSystem build_g2() {
  GramForm gram(RationalMatrix{{2, -3}, {-3, 6}});
  std::vector<QVec> roots;
  for (auto [a, b] : std::vector<std::pair<int, int>>{
           {1, 0}, {1, 1}, {2, 1}, {0, 1}, {3, 1}, {3, 2}}) {
    roots.push_back(QVec{a, b});
    roots.push_back(QVec{-a, -b});
  }
  std::vector<QVec> simple{QVec{1, 0}, QVec{0, 1}};
  IntegralLattice lattice(standard_basis(2), gram);
  return finish(SimpleType(Family::G, 2), gram, std::move(roots),
                std::move(simple), std::move(lattice));
}

// Indecomposable positive roots under the functional (1, 3, 9, ...).
std::vector<QVec> base_from_functional(const std::vector<QVec>& roots) {
  auto height = [](const QVec& v) {
    Rational h = 0, w = 1;
    for (std::size_t i = 0; i < v.size(); ++i, w *= 3) h += w * v[i];
    return h;
  };
  std::vector<QVec> positive;
  for (const auto& r : roots) {
    Rational h = height(r);
    if (h == 0) throw Error("base_from_functional: functional vanishes on a root");
    if (h > 0) positive.push_back(r);
  }
  std::set<QVec> positive_set(positive.begin(), positive.end());
  std::vector<QVec> base;
  for (const auto& p : positive) {
    bool decomposable = std::any_of(positive.begin(), positive.end(), [&](const QVec& q) {
      return !(q == p) && positive_set.count(p - q) > 0;
    });
    if (!decomposable) base.push_back(p);
  }
  return base;
}

}  // namespace

// --- SimpleType -------------------------------------------------------------

SimpleType::SimpleType(Family family, int rank) : family_(family), rank_(rank) {
  bool ok = false;
  switch (family) {
    case Family::A: ok = rank >= 1; break;
    case Family::B: ok = rank >= 2; break;
    case Family::C: ok = rank >= 3; break;
    case Family::D: ok = rank >= 4; break;
    case Family::E: ok = rank >= 6 && rank <= 8; break;
    case Family::F: ok = rank == 4; break;
    case Family::G: ok = rank == 2; break;
  }
  if (!ok) {
    throw Error(std::string("inadmissible simple type ") +
                static_cast<char>(family) + std::to_string(rank) +
                " (A n>=1, B n>=2, C n>=3, D n>=4, E6-E8, F4, G2)");
  }
}

bool SimpleType::simply_laced() const {
  return family_ == Family::A || family_ == Family::D || family_ == Family::E;
}

std::size_t SimpleType::root_count() const {
  const auto n = static_cast<std::size_t>(rank_);
  switch (family_) {
    case Family::A: return n * (n + 1);
    case Family::B:
    case Family::C: return 2 * n * n;
    case Family::D: return 2 * n * (n - 1);
    case Family::E: return n == 6 ? 72 : n == 7 ? 126 : 240;
    case Family::F: return 48;
    case Family::G: return 12;
  }
  return 0;
}

std::string to_string(const SimpleType& t) {
  return static_cast<char>(t.family()) + std::to_string(t.rank());
}

SimpleType parse_type(std::string_view text) {
  const std::string grammar =
      "expected a family letter and rank, e.g. A7, B4, E8 (A n>=1, B n>=2, "
      "C n>=3, D n>=4, E6-E8, F4, G2)";
  if (text.size() < 2) throw Error("malformed type '" + std::string(text) + "': " + grammar);
  char letter = static_cast<char>(std::toupper(static_cast<unsigned char>(text[0])));
  if (std::string_view("ABCDEFG").find(letter) == std::string_view::npos) {
    throw Error("malformed type '" + std::string(text) + "': " + grammar);
  }
  int rank = 0;
  for (char c : text.substr(1)) {
    if (c < '0' || c > '9' || rank > 100000) {
      throw Error("malformed type '" + std::string(text) + "': " + grammar);
    }
    rank = rank * 10 + (c - '0');
  }
  try {
    return SimpleType(static_cast<Family>(letter), rank);
  } catch (const Error&) {
    throw Error("inadmissible type '" + std::string(text) + "': " + grammar);
  }
}

// --- RootSystem -------------------------------------------------------------

bool RootSystem::is_root(const QVec& v) const {
  return std::binary_search(roots.begin(), roots.end(), v);
}

std::vector<Rational> RootSystem::root_norms() const {
  std::vector<Rational> norms;
  for (const auto& r : roots) {
    Rational t = norm(r, gram);
    if (std::find(norms.begin(), norms.end(), t) == norms.end()) norms.push_back(t);
  }
  std::sort(norms.begin(), norms.end());
  return norms;
}

RootSystem build(const SimpleType& type) {
  switch (type.family()) {
    case Family::A: return build_a(type);
    case Family::B:
    case Family::C:
    case Family::D: return build_bcd(type);
    case Family::E:
      return type.rank() == 8 ? build_e8() : build_e_projection(type);
    case Family::F: return build_f4();
    case Family::G: return build_g2();
  }
  throw Error("build: unknown family");
}

QVec project_orthogonal(const QVec& v, std::span<const QVec> along,
                        const GramForm& g) {
  if (along.empty()) return v;
  RationalMatrix inv = inverse(gram_of(along, g));
  std::vector<Rational> pairings;
  for (const auto& a : along) pairings.push_back(inner(a, v, g));
  QVec out = v;
  for (std::size_t i = 0; i < along.size(); ++i) {
    Rational c = 0;
    for (std::size_t j = 0; j < along.size(); ++j) c += inv(i, j) * pairings[j];
    if (c != 0) out -= c * along[i];
  }
  return out;
}

RootSystem build_e_projection(const SimpleType& target) {
  if (target.family() != Family::E || target.rank() == 8) {
    throw Error("build_e_projection: target must be E6 or E7");
  }
  const RootSystem e8 = build_e8();
  const std::size_t d = 8;
  std::vector<QVec> along{unit(d, 0) - unit(d, 1)};
  if (target.rank() == 6) along.push_back(unit(d, 1) - unit(d, 2));

  std::vector<QVec> generators;
  for (const auto& b : e8.weight_lattice.basis())
    generators.push_back(project_orthogonal(b, along, e8.gram));
  IntegralLattice lattice = hnf_basis(generators, e8.gram);
  if (lattice.rank() != static_cast<std::size_t>(target.rank())) {
    throw Error("build_e_projection: projected lattice has rank " +
                std::to_string(lattice.rank()));
  }

  std::vector<QVec> roots;
  for (const auto& r : e8.roots) {
    bool orthogonal = std::all_of(along.begin(), along.end(), [&](const QVec& a) {
      return inner(r, a, e8.gram) == 0;
    });
    if (orthogonal) roots.push_back(r);
  }
  auto shell = vectors_of_norm(lattice, 2);
  std::sort(shell.begin(), shell.end());
  if (shell != roots) {
    throw Error("build_e_projection(" + to_string(target) + "): norm-2 shell (" +
                std::to_string(shell.size()) +
                " vectors) differs from R8 on the subspace (" +
                std::to_string(roots.size()) + " roots)");
  }

  auto simple = match_cartan(base_from_functional(roots),
                             standard_cartan_matrix(target), e8.gram);
  if (simple.empty()) {
    throw Error("build_e_projection: base does not match the Cartan matrix");
  }
  return finish(target, e8.gram, std::move(roots), std::move(simple),
                std::move(lattice));
}

// --- orders -----------------------------------------------------------------

std::uint64_t weyl_order(const SimpleType& type) {
  const auto n = static_cast<std::uint64_t>(type.rank());
  auto factorial = [](std::uint64_t k) {
    std::uint64_t f = 1;
    for (std::uint64_t i = 2; i <= k; ++i) f *= i;
    return f;
  };
  switch (type.family()) {
    case Family::A: return factorial(n + 1);
    case Family::B:
    case Family::C: return (std::uint64_t{1} << n) * factorial(n);
    case Family::D: return (std::uint64_t{1} << (n - 1)) * factorial(n);
    case Family::E: return n == 6 ? 51840 : n == 7 ? 2903040 : 696729600;
    case Family::F: return 1152;
    case Family::G: return 12;
  }
  return 0;
}

int dynkin_automorphism_order(const SimpleType& type) {
  switch (type.family()) {
    case Family::A: return type.rank() == 1 ? 1 : 2;
    case Family::D: return type.rank() == 4 ? 6 : 2;
    case Family::E: return type.rank() == 6 ? 2 : 1;
    default: return 1;
  }
}

// --- reflections and Cartan matrices ----------------------------------------

QVec reflect(const QVec& v, const QVec& root, const GramForm& g) {
  Rational rr = norm(root, g);
  if (rr == 0) throw Error("reflect: zero root");
  Rational c = 2 * inner(v, root, g) / rr;
  if (c == 0) return v;
  return v - c * root;
}

CartanMatrix cartan_matrix(std::span<const QVec> simple_roots,
                           const GramForm& g) {
  const std::size_t r = simple_roots.size();
  std::vector<Rational> norms;
  for (const auto& a : simple_roots) {
    norms.push_back(norm(a, g));
    if (norms.back() == 0) throw Error("cartan_matrix: zero root");
  }
  CartanMatrix c(r, std::vector<int>(r));
  for (std::size_t i = 0; i < r; ++i) {
    for (std::size_t j = 0; j < r; ++j) {
      Rational entry = 2 * inner(simple_roots[i], simple_roots[j], g) / norms[j];
      if (!is_integer(entry)) {
        throw Error("cartan_matrix: non-integral entry " + to_string(entry) +
                    " at (" + std::to_string(i) + "," + std::to_string(j) + ")");
      }
      c[i][j] = numerator(entry).convert_to<int>();
    }
  }
  return c;
}

CartanMatrix standard_cartan_matrix(const SimpleType& type) {
  const auto n = static_cast<std::size_t>(type.rank());
  CartanMatrix c(n, std::vector<int>(n, 0));
  for (std::size_t i = 0; i < n; ++i) c[i][i] = 2;
  auto link = [&](std::size_t i, std::size_t j) { c[i][j] = c[j][i] = -1; };
  switch (type.family()) {
    case Family::A:
      for (std::size_t i = 0; i + 1 < n; ++i) link(i, i + 1);
      break;
    case Family::B:
      for (std::size_t i = 0; i + 1 < n; ++i) link(i, i + 1);
      c[n - 2][n - 1] = -2;
      break;
    case Family::C:
      for (std::size_t i = 0; i + 1 < n; ++i) link(i, i + 1);
      c[n - 1][n - 2] = -2;
      break;
    case Family::D:
      for (std::size_t i = 0; i + 2 < n; ++i) link(i, i + 1);
      link(n - 3, n - 1);
      break;
    case Family::E:
      link(0, 2);
      link(1, 3);
      for (std::size_t i = 2; i + 1 < n; ++i) link(i, i + 1);
      break;
    case Family::F:
      link(0, 1);
      link(1, 2);
      link(2, 3);
      c[1][2] = -2;
      break;
    case Family::G:
      link(0, 1);
      c[1][0] = -3;
      break;
  }
  return c;
}

int count_diagram_automorphisms(const CartanMatrix& cartan) {
  const std::size_t n = cartan.size();
  std::vector<std::size_t> image(n);
  std::vector<bool> used(n, false);
  int count = 0;
  auto extend = [&](auto&& self, std::size_t i) -> void {
    if (i == n) {
      ++count;
      return;
    }
    for (std::size_t t = 0; t < n; ++t) {
      if (used[t]) continue;
      bool ok = true;
      for (std::size_t j = 0; j < i && ok; ++j) {
        ok = cartan[t][image[j]] == cartan[i][j] && cartan[image[j]][t] == cartan[j][i];
      }
      if (!ok) continue;
      image[i] = t;
      used[t] = true;
      self(self, i + 1);
      used[t] = false;
    }
  };
  extend(extend, 0);
  return count;
}

std::uint64_t generated_group_order(std::span<const QVec> simple_roots,
                                    const GramForm& g) {
  if (simple_roots.empty()) return 1;
  // rho with <rho, a_i> = 1 for every simple root is regular.
  RationalMatrix inv = inverse(gram_of(simple_roots, g));
  QVec rho(g.dim());
  for (std::size_t i = 0; i < simple_roots.size(); ++i) {
    Rational c = 0;
    for (std::size_t j = 0; j < simple_roots.size(); ++j) c += inv(i, j);
    rho += c * simple_roots[i];
  }
  std::set<QVec> orbit{rho};
  std::deque<QVec> frontier{rho};
  while (!frontier.empty()) {
    QVec v = std::move(frontier.front());
    frontier.pop_front();
    for (const auto& a : simple_roots) {
      QVec w = reflect(v, a, g);
      if (orbit.insert(w).second) frontier.push_back(std::move(w));
    }
  }
  return orbit.size();
}

Integer weight_lattice_index(const RootSystem& system) {
  Rational ratio = determinant(gram_of(system.simple_roots, system.gram)) /
                   system.weight_lattice.covolume();
  Rational index;
  if (!exact_sqrt(ratio, index) || !is_integer(index)) {
    throw Error("weight_lattice_index: covolume ratio " + to_string(ratio) +
                " is not a square integer");
  }
  return numerator(index);
}

std::vector<QVec> match_cartan(std::span<const QVec> candidates,
                               const CartanMatrix& target, const GramForm& g) {
  const std::size_t m = candidates.size();
  const std::size_t r = target.size();
  if (r == 0 || m < r) return {};
  std::vector<Rational> norms;
  for (const auto& c : candidates) norms.push_back(norm(c, g));

  // Relative squared lengths forced by the target, propagated along edges
  // from node 0. An impossible length pattern fails here instead of after
  // an exhaustive search.
  std::vector<std::optional<Rational>> rel(r);
  rel[0] = Rational(1);
  for (bool grew = true; grew;) {
    grew = false;
    for (std::size_t i = 0; i < r; ++i) {
      for (std::size_t j = 0; j < r; ++j) {
        if (!rel[i] || rel[j] || target[i][j] == 0 || target[j][i] == 0) continue;
        rel[j] = *rel[i] * Rational(target[j][i]) / Rational(target[i][j]);
        grew = true;
      }
    }
  }
  std::set<Rational> available(norms.begin(), norms.end());
  const bool some_scale = std::any_of(available.begin(), available.end(), [&](const Rational& q) {
    return std::all_of(rel.begin(), rel.end(), [&](const std::optional<Rational>& x) {
      return !x || available.count(*x * q);
    });
  });
  if (!some_scale) return {};
  // twice_inner[i][j] / norms[j] is a Cartan entry.
  std::vector<std::vector<Rational>> twice_inner(m, std::vector<Rational>(m));
  for (std::size_t i = 0; i < m; ++i)
    for (std::size_t j = i; j < m; ++j)
      twice_inner[i][j] = twice_inner[j][i] = 2 * inner(candidates[i], candidates[j], g);

  std::vector<std::size_t> chosen;
  auto fits = [&](std::size_t cand, std::size_t k) {
    if (twice_inner[cand][cand] != 2 * norms[cand]) return false;
    for (std::size_t j = 0; j < k; ++j) {
      std::size_t other = chosen[j];
      if (other == cand) return false;
      if (twice_inner[cand][other] != Rational(target[k][j]) * norms[other]) return false;
      if (twice_inner[other][cand] != Rational(target[j][k]) * norms[cand]) return false;
    }
    return true;
  };
  auto extend = [&](auto&& self, std::size_t k) -> bool {
    if (k == r) return true;
    for (std::size_t cand = 0; cand < m; ++cand) {
      if (!fits(cand, k)) continue;
      chosen.push_back(cand);
      if (self(self, k + 1)) return true;
      chosen.pop_back();
    }
    return false;
  };
  if (!extend(extend, 0)) return {};
  std::vector<QVec> out;
  for (auto idx : chosen) out.push_back(candidates[idx]);
  return out;
}

std::vector<QVec> reflection_closure(std::span<const QVec> seeds,
                                     const GramForm& g) {
  std::set<QVec> closed(seeds.begin(), seeds.end());
  std::vector<QVec> members(closed.begin(), closed.end());
  for (std::size_t i = 0; i < members.size(); ++i) {
    for (std::size_t j = 0; j <= i; ++j) {
      for (auto [v, root] : {std::pair{i, j}, std::pair{j, i}}) {
        QVec w = reflect(members[v], members[root], g);
        if (closed.insert(w).second) members.push_back(std::move(w));
      }
    }
  }
  return {closed.begin(), closed.end()};
}

std::vector<SimpleType> admissible_types(int max_rank) {
  std::vector<SimpleType> out;
  for (int n = 1; n <= max_rank; ++n) out.emplace_back(Family::A, n);
  for (int n = 2; n <= max_rank; ++n) out.emplace_back(Family::B, n);
  for (int n = 3; n <= max_rank; ++n) out.emplace_back(Family::C, n);
  for (int n = 4; n <= max_rank; ++n) out.emplace_back(Family::D, n);
  for (int n = 6; n <= 8; ++n) out.emplace_back(Family::E, n);
  out.emplace_back(Family::F, 4);
  out.emplace_back(Family::G, 2);
  return out;
}

}  // namespace rootgeom
