#include "rootgeom/stability.hpp"

#include <algorithm>
#include <future>
#include <numeric>

namespace rootgeom {

std::string to_string(Verdict v) {
  return v == Verdict::Stable ? "Stable" : "PotentiallyUnstable";
}

std::vector<Rational> determining_norms(const RootSystem& system) {
  auto norms = system.root_norms();
  if (system.type.family() == Family::F) return norms;
  return {norms.front()};
}

StabilityReport check_stability(const RootSystem& system) {
  StabilityReport report{system.type, Verdict::Stable, {}, {}, std::nullopt};
  const auto determining = determining_norms(system);
  for (const auto& t : system.root_norms()) {
    ShellCount shell{t, 0, 0, false};
    shell.determining =
        std::find(determining.begin(), determining.end(), t) != determining.end();
    auto vectors = vectors_of_norm(system.weight_lattice, t);
    shell.lattice_count = vectors.size();
    shell.root_count = static_cast<std::size_t>(
        std::count_if(system.roots.begin(), system.roots.end(),
                      [&](const QVec& r) { return norm(r, system.gram) == t; }));
    if (shell.determining) {
      for (auto& v : vectors) {
        if (!system.is_root(v)) report.witnesses.push_back(std::move(v));
      }
    }
    report.shells.push_back(std::move(shell));
  }
  report.verdict =
      report.witnesses.empty() ? Verdict::Stable : Verdict::PotentiallyUnstable;
  if (system.type.family() == Family::A) {
    const auto solutions = an_diophantine(system.type.rank());
    report.diophantine_unstable =
        std::any_of(solutions.begin(), solutions.end(),
                    [&](const DiophantineSolution& s) { return s.n == system.type.rank(); });
  }
  return report;
}

StabilityReport check_stability(const SimpleType& type,
                                const StabilityOptions& options) {
  if (type.rank() > options.rank_limit) {
    throw Error("check_stability(" + to_string(type) + "): rank exceeds the configured limit " +
                std::to_string(options.rank_limit));
  }
  return check_stability(build(type));
}

bool expected_unstable(const SimpleType& type) {
  switch (type.family()) {
    case Family::A: return type.rank() == 7 || type.rank() == 8;
    case Family::B: return type.rank() == 4;
    case Family::D: return type.rank() == 8;
    default: return false;
  }
}

SweepResult theorem6_sweep(int max_rank, const StabilityOptions& options,
                           const RootSystem* override_system) {
  if (max_rank < 8) {
    throw Error("theorem6_sweep: max_rank must be at least 8, got " +
                std::to_string(max_rank));
  }
  const auto types = admissible_types(max_rank);
  for (const auto& t : types) {
    if (t.rank() > options.rank_limit) {
      throw Error("theorem6_sweep: rank " + std::to_string(t.rank()) +
                  " exceeds the configured limit " + std::to_string(options.rank_limit));
    }
  }
  std::vector<std::future<StabilityReport>> pending;
  pending.reserve(types.size());
  for (const auto& t : types) {
    if (override_system != nullptr && override_system->type == t) {
      pending.push_back(std::async(std::launch::async, [override_system] {
        return check_stability(*override_system);
      }));
    } else {
      pending.push_back(std::async(std::launch::async, [t, options] {
        return check_stability(t, options);
      }));
    }
  }
  SweepResult result;
  for (std::size_t i = 0; i < types.size(); ++i) {
    result.reports.emplace(types[i], pending[i].get());
  }
  result.matches_theorem6 = true;
  for (const auto& [type, report] : result.reports) {
    bool flagged = report.verdict == Verdict::PotentiallyUnstable;
    if (flagged) result.flagged.push_back(type);
    if (flagged != expected_unstable(type)) result.matches_theorem6 = false;
  }
  return result;
}

std::vector<DiophantineSolution> an_diophantine(long long n_max) {
  // With m = k + 1 the equation reads m^2 - (n+1) m + 2(n+1) = 0, so the
  // discriminant (n+1)(n-7) must be a perfect square.
  std::vector<DiophantineSolution> out;
  for (long long n = 0; n <= n_max; ++n) {
    Integer disc = Integer(n + 1) * Integer(n - 7);
    if (disc < 0) continue;
    Integer s = boost::multiprecision::sqrt(disc);
    if (s * s != disc) continue;
    std::vector<long long> ks;
    for (const Integer& twice_m : {Integer(n + 1) - s, Integer(n + 1) + s}) {
      if (twice_m % 2 != 0) continue;
      long long k = (twice_m / 2).convert_to<long long>() - 1;
      if (k >= 0 && k <= n && std::find(ks.begin(), ks.end(), k) == ks.end()) ks.push_back(k);
    }
    std::sort(ks.begin(), ks.end());
    for (long long k : ks) out.push_back({k, n});
  }
  return out;
}

// --- formal characters ------------------------------------------------------

void WeightMultiset::add(const QVec& weight, unsigned multiplicity) {
  if (multiplicity == 0) throw Error("WeightMultiset: multiplicity must be positive");
  if (entries_.empty()) {
    dim_ = weight.size();
  } else if (weight.size() != dim_) {
    throw Error("WeightMultiset: dimension mismatch");
  }
  for (auto& [w, m] : entries_) {
    if (w == weight) {
      m += multiplicity;
      return;
    }
  }
  entries_.emplace_back(weight, multiplicity);
}

std::size_t WeightMultiset::total_multiplicity() const {
  return std::accumulate(entries_.begin(), entries_.end(), std::size_t{0},
                         [](std::size_t acc, const auto& e) { return acc + e.second; });
}

GramForm induced_gram(const WeightMultiset& character) {
  if (character.total_multiplicity() == 0) throw Error("induced_gram: empty character");
  const std::size_t d = character.dim();
  RationalMatrix dual(d, d);
  for (const auto& [w, m] : character.entries()) {
    for (std::size_t i = 0; i < d; ++i) {
      if (w[i] == 0) continue;
      for (std::size_t j = 0; j < d; ++j) dual(i, j) += Rational(m) * w[i] * w[j];
    }
  }
  if (determinant(dual) == 0) {
    throw Error("induced_gram: weights do not span; the form is degenerate");
  }
  return GramForm(inverse(dual));
}

std::optional<int> cartan_integer(const QVec& s, const QVec& r,
                                  const GramForm& g) {
  Rational rr = norm(r, g);
  if (rr == 0) return std::nullopt;
  Rational c = 2 * inner(s, r, g) / rr;
  if (!is_integer(c)) return std::nullopt;
  return numerator(c).convert_to<int>();
}

int angle_classify(const QVec& r, const QVec& s, const GramForm& g) {
  if (r.is_zero() || s.is_zero()) throw Error("angle_classify: zero vector");
  auto rs = cartan_integer(s, r, g);
  auto sr = cartan_integer(r, s, g);
  if (!rs || !sr) {
    throw Error("angle_classify: 2<r,s>/<r,r> or 2<r,s>/<s,s> is not an integer");
  }
  const int four_cos_sq = *rs * *sr;
  static constexpr int acute[] = {90, 60, 45, 30, 0};
  if (four_cos_sq < 0 || four_cos_sq > 4) {
    throw Error("angle_classify: 4cos^2 out of range");
  }
  int theta = acute[four_cos_sq];
  return inner(r, s, g) < 0 ? 180 - theta : theta;
}

bool hypothesis_a(const FactorList& factors) {
  int a4 = 0;
  for (const auto& f : factors) {
    if (f.family() != Family::A) return false;
    switch (f.rank()) {
      case 1: case 2: case 3: case 5: case 7: case 8: return false;
      case 4: ++a4; break;
      default: break;
    }
  }
  return a4 <= 1;
}

std::vector<std::vector<QVec>> orthogonal_factor_decomposition(
    std::span<const QVec> roots, const GramForm& g) {
  const std::size_t n = roots.size();
  for (std::size_t i = 0; i < n; ++i) {
    if (roots[i].is_zero()) throw Error("orthogonal_factor_decomposition: zero root");
  }
  std::vector<std::size_t> parent(n);
  std::iota(parent.begin(), parent.end(), std::size_t{0});
  auto find = [&](std::size_t x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  };
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) {
      if (!cartan_integer(roots[i], roots[j], g) || !cartan_integer(roots[j], roots[i], g)) {
        throw Error("orthogonal_factor_decomposition: input is not crystallographic");
      }
      if (inner(roots[i], roots[j], g) != 0) {
        std::size_t a = find(i), b = find(j);
        if (a != b) parent[std::max(a, b)] = std::min(a, b);
      }
    }
  }
  std::vector<std::vector<QVec>> components;
  std::vector<std::size_t> slot(n, n);
  for (std::size_t i = 0; i < n; ++i) {
    std::size_t root = find(i);
    if (slot[root] == n) {
      slot[root] = components.size();
      components.emplace_back();
    }
    components[slot[root]].push_back(roots[i]);
  }
  for (std::size_t a = 0; a < components.size(); ++a)
    for (std::size_t b = a + 1; b < components.size(); ++b)
      for (const auto& x : components[a])
        for (const auto& y : components[b])
          if (inner(x, y, g) != 0) throw Error("orthogonal_factor_decomposition: components not orthogonal");
  return components;
}

G2Example g2_example() {
  const RootSystem g2 = build(SimpleType(Family::G, 2));
  WeightMultiset adjoint;
  for (const auto& r : g2.roots) adjoint.add(r);
  adjoint.add(QVec(2), 2);
  GramForm form = induced_gram(adjoint);
  auto multiple = proportionality(form.matrix(), g2.gram.matrix());
  if (!multiple) throw Error("g2_example: induced form is not a multiple of the G2 form");

  const QVec e1{1, 0};
  std::vector<QVec> short_factor{e1, -e1};
  std::vector<QVec> long_factor;
  const Rational long_norm = norm(QVec{0, 1}, form);
  for (const auto& r : g2.roots) {
    if (norm(r, form) == long_norm && inner(r, e1, form) == 0) long_factor.push_back(r);
  }
  if (long_factor.size() != 2) throw Error("g2_example: expected one perpendicular long root pair");
  std::sort(long_factor.begin(), long_factor.end(),
            [](const QVec& a, const QVec& b) { return b < a; });

  std::vector<QVec> small = short_factor;
  small.insert(small.end(), long_factor.begin(), long_factor.end());
  auto components = orthogonal_factor_decomposition(small, form);

  std::vector<std::vector<int>> table;
  for (const auto& r : small) {
    std::vector<int> row;
    for (const auto& s : g2.roots) row.push_back(angle_classify(r, s, form));
    table.push_back(std::move(row));
  }
  Rational ratio = norm(long_factor.front(), form) / norm(e1, form);
  return G2Example{form,          *multiple,  g2.roots, short_factor, long_factor,
                   components.size(), ratio, std::move(table)};
}

}  // namespace rootgeom
