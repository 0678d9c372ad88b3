#include "rootgeom/counterexamples.hpp"

#include <algorithm>
#include <cctype>

namespace rootgeom {

const std::vector<PairSpec>& known_pairs() {
  static const std::vector<PairSpec> pairs{
      {"a7-e7", SimpleType(Family::A, 7), SimpleType(Family::E, 7)},
      {"a8-e8", SimpleType(Family::A, 8), SimpleType(Family::E, 8)},
      {"d8-e8", SimpleType(Family::D, 8), SimpleType(Family::E, 8)},
      {"b4-f4", SimpleType(Family::B, 4), SimpleType(Family::F, 4)},
      {"a2-g2", SimpleType(Family::A, 2), SimpleType(Family::G, 2)},
  };
  return pairs;
}

PairSpec parse_pair(std::string_view name) {
  std::string lowered;
  for (char c : name) lowered += static_cast<char>(std::tolower(static_cast<unsigned char>(c)));
  for (const auto& p : known_pairs()) {
    if (p.name == lowered) return p;
  }
  throw Error("unknown pair '" + std::string(name) +
              "': expected one of a7-e7, a8-e8, d8-e8, b4-f4, a2-g2");
}

bool EqualRankPair::is_sub_root(const QVec& v) const {
  return std::binary_search(sub_roots.begin(), sub_roots.end(), v);
}

EqualRankPair find_subsystem(const RootSystem& sup, const SimpleType& target) {
  if (target.rank() != sup.type.rank()) {
    throw Error("find_subsystem: " + to_string(target) + " and " + to_string(sup.type) +
                " do not have equal rank");
  }
  auto simple = match_cartan(sup.roots, standard_cartan_matrix(target), sup.gram);
  if (simple.empty()) {
    throw Error("find_subsystem: no " + to_string(target) + " subsystem in " +
                to_string(sup.type));
  }
  IntegralLattice span(simple, sup.gram);
  std::vector<QVec> sub_roots;
  for (const auto& r : sup.roots) {
    if (contains(span, r)) sub_roots.push_back(r);
  }
  if (sub_roots.size() != target.root_count()) {
    throw Error("find_subsystem: closure has " + std::to_string(sub_roots.size()) +
                " roots, expected " + std::to_string(target.root_count()));
  }
  for (const auto& a : sub_roots) {
    for (const auto& b : sub_roots) {
      if (!std::binary_search(sub_roots.begin(), sub_roots.end(), reflect(b, a, sup.gram))) {
        throw Error("find_subsystem: closure is not reflection-closed");
      }
    }
  }
  const std::size_t n = sup.roots.size() + static_cast<std::size_t>(sup.type.rank());
  return EqualRankPair{target, sup.type, sup, std::move(simple), std::move(sub_roots), n};
}

EqualRankPair find_subsystem(const PairSpec& spec) {
  return find_subsystem(build(spec.sup), spec.sub);
}

std::optional<ViolationCertificate> try_find_violation(const EqualRankPair& pair) {
  const auto& g = pair.sup_system.gram;
  for (const auto& alpha : pair.sup_system.roots) {
    if (pair.is_sub_root(alpha)) continue;
    for (const auto& r : pair.sub_roots) {
      QVec image = reflect(r, alpha, g);
      if (!pair.is_sub_root(image)) {
        return ViolationCertificate{pair.sub, pair.sup, alpha, r, std::move(image)};
      }
    }
  }
  return std::nullopt;
}

ViolationCertificate find_violation(const EqualRankPair& pair) {
  auto cert = try_find_violation(pair);
  if (!cert) {
    throw Error("find_violation: every reflection of " + to_string(pair.sup) +
                " preserves the roots of " + to_string(pair.sub));
  }
  return *cert;
}

bool verify_certificate(const ViolationCertificate& cert, const EqualRankPair& pair) {
  const auto& sup = pair.sup_system;
  auto in = [](const std::vector<QVec>& set, const QVec& v) {
    return std::find(set.begin(), set.end(), v) != set.end();
  };
  Rational c = 2 * inner(cert.r, cert.alpha, sup.gram) / norm(cert.alpha, sup.gram);
  QVec recomputed = cert.r - c * cert.alpha;
  return recomputed == cert.image && in(sup.roots, cert.alpha) && !in(pair.sub_roots, cert.alpha) &&
         in(pair.sub_roots, cert.r) && in(sup.roots, cert.image) && !in(pair.sub_roots, cert.image);
}

ChamberIndexRecord chamber_index(const SimpleType& sub, const SimpleType& sup) {
  ChamberIndexRecord rec{sub, sup, weyl_order(sup), weyl_order(sub), 0,
                         dynkin_automorphism_order(sub), false};
  if (rec.w_sup % rec.w_sub != 0) {
    throw Error("chamber_index: |W(" + to_string(sub) + ")| does not divide |W(" +
                to_string(sup) + ")|");
  }
  rec.index = rec.w_sup / rec.w_sub;
  rec.exceeds_bound = rec.index > static_cast<std::uint64_t>(rec.dynkin_bound);
  return rec;
}

}  // namespace rootgeom
