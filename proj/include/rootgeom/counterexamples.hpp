#pragma once

// Equal-rank subsystems whose roots are moved by a Weyl reflection of the
// ambient system: A7 in E7, A8 in E8, D8 in E8, B4 in F4 (and the control
// pair A2 in G2, where no such reflection exists).

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "rootgeom/root_catalog.hpp"

namespace rootgeom {

struct PairSpec {
  std::string name;  // "a7-e7"
  SimpleType sub;
  SimpleType sup;
};

// a7-e7, a8-e8, d8-e8, b4-f4, a2-g2.
const std::vector<PairSpec>& known_pairs();
// Throws Error listing the accepted names.
PairSpec parse_pair(std::string_view name);

struct EqualRankPair {
  SimpleType sub;
  SimpleType sup;
  RootSystem sup_system;
  std::vector<QVec> sub_simple_roots;
  std::vector<QVec> sub_roots;  // sorted
  // Dimension N of the adjoint representation of sup, through which the
  // composed embedding sub -> sup -> GL_N factors.
  std::size_t ambient_n = 0;

  bool is_sub_root(const QVec& v) const;
};

// Backtracking search for simple roots of `target` among sup.roots, then
// closure to the roots of sup in their integer span. Throws Error if the
// search fails or the closure is inconsistent.
EqualRankPair find_subsystem(const RootSystem& sup, const SimpleType& target);
EqualRankPair find_subsystem(const PairSpec& spec);

struct ViolationCertificate {
  SimpleType sub;
  SimpleType sup;
  QVec alpha;  // root of sup outside the subsystem
  QVec r;      // root of the subsystem
  QVec image;  // s_alpha(r), a root of sup but not of the subsystem
};

// First (alpha, r) in lexicographic order with s_alpha(r) outside sub_roots.
std::optional<ViolationCertificate> try_find_violation(const EqualRankPair& pair);
// Throws Error when the exhaustive search finds nothing.
ViolationCertificate find_violation(const EqualRankPair& pair);

// Recomputes the reflection and every membership claim.
bool verify_certificate(const ViolationCertificate& cert, const EqualRankPair& pair);

struct ChamberIndexRecord {
  SimpleType sub;
  SimpleType sup;
  std::uint64_t w_sup = 0;
  std::uint64_t w_sub = 0;
  std::uint64_t index = 0;
  int dynkin_bound = 0;
  bool exceeds_bound = false;
};

// Throws Error when |W(sub)| does not divide |W(sup)|.
ChamberIndexRecord chamber_index(const SimpleType& sub, const SimpleType& sup);
inline ChamberIndexRecord chamber_index(const EqualRankPair& pair) {
  return chamber_index(pair.sub, pair.sup);
}

}  // namespace rootgeom
