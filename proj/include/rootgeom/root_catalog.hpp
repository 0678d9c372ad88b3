#pragma once

// Simple root systems with their weight lattices.
//
// Coordinates and normalizations:
//   A_n        rank-n lattice Ze_1+...+Ze_n, <e_i,e_i> = n/(n+1),
//              <e_i,e_j> = -1/(n+1), e_{n+1} = -(e_1+...+e_n)
//   B_n, D_n   Euclidean R^n, weight lattice Z^n + Z(e_1+...+e_n)/2
//   C_n        Euclidean R^n, weight lattice Z^n
//   E_8        even coordinate system in R^8
//   E_7, E_6   orthogonal projections of the E_8 lattice along e1-e2
//              (and e2-e3)
//   F_4        Euclidean R^4, same lattice as B_4
//   G_2        simple-root coordinates, Gram [[2,-3],[-3,6]]

#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "rootgeom/exact_lattice.hpp"

namespace rootgeom {

enum class Family : char { A = 'A', B = 'B', C = 'C', D = 'D', E = 'E', F = 'F', G = 'G' };

class SimpleType {
 public:
  // Throws Error for an inadmissible rank.
  SimpleType(Family family, int rank);

  Family family() const { return family_; }
  int rank() const { return rank_; }
  bool simply_laced() const;

  // Classical root count, e.g. n(n+1) for A_n.
  std::size_t root_count() const;

  friend auto operator<=>(const SimpleType&, const SimpleType&) = default;

 private:
  Family family_;
  int rank_;
};

std::string to_string(const SimpleType& t);
// "A7", "e8", ...; throws Error with the accepted grammar otherwise.
SimpleType parse_type(std::string_view text);

using CartanMatrix = std::vector<std::vector<int>>;

struct RootSystem {
  SimpleType type;
  std::size_t ambient_dim;
  GramForm gram;
  std::vector<QVec> roots;         // sorted, closed under negation
  std::vector<QVec> simple_roots;  // Bourbaki order
  IntegralLattice weight_lattice;

  bool is_root(const QVec& v) const;
  // Distinct root norms, ascending.
  std::vector<Rational> root_norms() const;
};

RootSystem build(const SimpleType& type);
// E6 or E7 from the projected E8 lattice; verifies that the norm-2 shell of
// the projected lattice equals R8 intersected with the subspace.
RootSystem build_e_projection(const SimpleType& target);

// Orthogonal projection of v onto the orthogonal complement of span(along).
QVec project_orthogonal(const QVec& v, std::span<const QVec> along,
                        const GramForm& g);

std::uint64_t weyl_order(const SimpleType& type);
int dynkin_automorphism_order(const SimpleType& type);

// s_root(v) = v - 2 <v,root>/<root,root> root. Throws Error on a zero root.
QVec reflect(const QVec& v, const QVec& root, const GramForm& g);

// C_ij = 2<a_i,a_j>/<a_j,a_j>. Throws Error on a non-integral entry.
CartanMatrix cartan_matrix(std::span<const QVec> simple_roots,
                           const GramForm& g);
// Bourbaki numbering.
CartanMatrix standard_cartan_matrix(const SimpleType& type);

// Node permutations preserving the Cartan matrix, counted by backtracking.
int count_diagram_automorphisms(const CartanMatrix& cartan);

// Order of the group generated by reflections in the simple roots, as the
// orbit size of a regular vector.
std::uint64_t generated_group_order(std::span<const QVec> simple_roots,
                                    const GramForm& g);

// [weight lattice : root lattice] from the covolume ratio.
Integer weight_lattice_index(const RootSystem& system);

// First ordered list (lexicographic in candidate order) of candidates whose
// Cartan matrix is `target`; empty if none exists.
std::vector<QVec> match_cartan(std::span<const QVec> candidates,
                               const CartanMatrix& target, const GramForm& g);

// Smallest set containing `seeds` and closed under reflection in its own
// elements, sorted.
std::vector<QVec> reflection_closure(std::span<const QVec> seeds,
                                     const GramForm& g);

// Every admissible type of rank <= max_rank, plus E6, E7, E8, F4, G2.
std::vector<SimpleType> admissible_types(int max_rank);

}  // namespace rootgeom
