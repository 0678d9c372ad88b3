#pragma once

// Normalizer stability of the roots of an almost simple group.
//
// For each root norm the weight lattice shell is enumerated and compared with
// the roots. The verdict rests on the determining shells: the single norm of
// a simply laced type, the short-root norm for B, C and G2, and both norms
// for F4.

#include <map>
#include <optional>
#include <vector>

#include "rootgeom/root_catalog.hpp"

namespace rootgeom {

enum class Verdict { Stable, PotentiallyUnstable };

std::string to_string(Verdict v);

struct ShellCount {
  Rational norm;
  std::size_t lattice_count = 0;
  std::size_t root_count = 0;
  bool determining = false;
};

struct StabilityReport {
  SimpleType type;
  Verdict verdict = Verdict::Stable;
  std::vector<ShellCount> shells;  // ascending norm
  // Weight lattice vectors of a determining norm that are not roots.
  std::vector<QVec> witnesses;
  // A_n only: whether (n-k) + k(n-k) = 2(n+1) has a solution 0 <= k <= n.
  std::optional<bool> diophantine_unstable;
};

struct StabilityOptions {
  int rank_limit = 12;
};

// Determining root norms of a built system.
std::vector<Rational> determining_norms(const RootSystem& system);

// Throws Error when the rank exceeds options.rank_limit.
StabilityReport check_stability(const SimpleType& type,
                                const StabilityOptions& options = {});
// Checks a given (possibly modified) root system.
StabilityReport check_stability(const RootSystem& system);

struct SweepResult {
  std::map<SimpleType, StabilityReport> reports;
  std::vector<SimpleType> flagged;
  bool matches_theorem6 = false;
};

// The types the classification singles out: A7, A8, B4, D8.
bool expected_unstable(const SimpleType& type);

// Types are evaluated concurrently; the result does not depend on ordering.
// `override_system`, when set, replaces the catalog entry of its type.
SweepResult theorem6_sweep(int max_rank, const StabilityOptions& options = {},
                           const RootSystem* override_system = nullptr);

struct DiophantineSolution {
  long long k;
  long long n;
  friend auto operator<=>(const DiophantineSolution&,
                          const DiophantineSolution&) = default;
};

// All 0 <= k <= n <= n_max with (n-k) + k(n-k) = 2(n+1), ordered by n then k.
std::vector<DiophantineSolution> an_diophantine(long long n_max);

// A formal character: weights in coordinates of the character space, each
// with a positive multiplicity.
class WeightMultiset {
 public:
  WeightMultiset() = default;
  void add(const QVec& weight, unsigned multiplicity = 1);

  std::size_t dim() const { return dim_; }
  std::size_t total_multiplicity() const;
  const std::vector<std::pair<QVec, unsigned>>& entries() const { return entries_; }

 private:
  std::size_t dim_ = 0;
  std::vector<std::pair<QVec, unsigned>> entries_;
};

// Inverse of sum_i m_i a_i a_i^T: the form on the character space dual to
// (x*, y*) = sum_i m_i a_i(x*) a_i(y*). Throws Error if the weights do not
// span.
GramForm induced_gram(const WeightMultiset& character);

// Angle in degrees (0, 30, 45, 60, 90, 120, 135, 150, 180). Throws Error
// unless both 2<r,s>/<r,r> and 2<r,s>/<s,s> are integers.
int angle_classify(const QVec& r, const QVec& s, const GramForm& g);

using FactorList = std::vector<SimpleType>;

// At most one A4 factor and every factor A_n with n not in {1,2,3,5,7,8}.
bool hypothesis_a(const FactorList& factors);

// Connected components of the non-orthogonality graph, in order of first
// appearance. Throws Error on non-crystallographic input.
std::vector<std::vector<QVec>> orthogonal_factor_decomposition(
    std::span<const QVec> roots, const GramForm& g);

// 2<s,r>/<r,r> as an integer, if it is one.
std::optional<int> cartan_integer(const QVec& s, const QVec& r,
                                  const GramForm& g);

// The A1 x A1 inside G2 with the form induced by the adjoint character.
struct G2Example {
  GramForm induced;            // from the 12 roots and 2 zero weights
  Rational killing_multiple;   // induced = killing_multiple * catalog Gram
  std::vector<QVec> g2_roots;
  std::vector<QVec> short_factor;  // R1 = {+-e1}
  std::vector<QVec> long_factor;   // R2 = {+-e2}, perpendicular to R1
  std::size_t component_count = 0;
  Rational squared_length_ratio;   // <e2,e2>/<e1,e1>
  // angle_table[i][j]: angle between (R1 u R2)[i] and g2_roots[j].
  std::vector<std::vector<int>> angle_table;
};

G2Example g2_example();

}  // namespace rootgeom
