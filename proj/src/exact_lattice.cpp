#include "rootgeom/exact_lattice.hpp"

#include <algorithm>
#include <tuple>
#include <utility>

namespace rootgeom {

namespace {

void require_same_size(std::size_t a, std::size_t b, const char* what) {
  if (a != b) {
    throw Error(std::string(what) + ": dimension mismatch (" +
                std::to_string(a) + " vs " + std::to_string(b) + ")");
  }
}

Integer floor_div(const Integer& a, const Integer& b) {
  Integer q = a / b;
  if ((a % b != 0) && ((a < 0) != (b < 0))) --q;
  return q;
}

// g = x*a + y*b with g = gcd(a, b) >= 0.
std::tuple<Integer, Integer, Integer> extended_gcd(Integer a, Integer b) {
  Integer x0 = 1, y0 = 0, x1 = 0, y1 = 1;
  while (b != 0) {
    Integer q = floor_div(a, b);
    std::tie(a, b) = std::make_pair(b, a - q * b);
    std::tie(x0, x1) = std::make_pair(x1, x0 - q * x1);
    std::tie(y0, y1) = std::make_pair(y1, y0 - q * y1);
  }
  if (a < 0) return {-a, -x0, -y0};
  return {a, x0, y0};
}

Integer lcm(const Integer& a, const Integer& b) {
  return a / boost::multiprecision::gcd(a, b) * b;
}

}  // namespace

// --- QVec -------------------------------------------------------------------

QVec QVec::unit(std::size_t dim, std::size_t i) {
  QVec v(dim);
  v[i] = 1;
  return v;
}

QVec QVec::from_integers(const IntVec& c) {
  QVec v(c.size());
  for (std::size_t i = 0; i < c.size(); ++i) v[i] = Rational(c[i]);
  return v;
}

bool QVec::is_zero() const {
  return std::all_of(coords_.begin(), coords_.end(),
                     [](const Rational& q) { return q == 0; });
}

QVec& QVec::operator+=(const QVec& other) {
  require_same_size(size(), other.size(), "QVec +");
  for (std::size_t i = 0; i < size(); ++i) coords_[i] += other.coords_[i];
  return *this;
}

QVec& QVec::operator-=(const QVec& other) {
  require_same_size(size(), other.size(), "QVec -");
  for (std::size_t i = 0; i < size(); ++i) coords_[i] -= other.coords_[i];
  return *this;
}

QVec& QVec::operator*=(const Rational& s) {
  for (auto& c : coords_) c *= s;
  return *this;
}

bool operator<(const QVec& a, const QVec& b) {
  return std::lexicographical_compare(a.coords_.begin(), a.coords_.end(),
                                      b.coords_.begin(), b.coords_.end());
}

std::string to_string(const QVec& v) {
  std::string out = "(";
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (i) out += ",";
    out += to_string(v[i]);
  }
  return out + ")";
}

// --- RationalMatrix ---------------------------------------------------------

RationalMatrix::RationalMatrix(
    std::initializer_list<std::initializer_list<Rational>> rows)
    : rows_(rows.size()), cols_(rows.size() ? rows.begin()->size() : 0) {
  data_.reserve(rows_ * cols_);
  for (const auto& r : rows) {
    require_same_size(r.size(), cols_, "RationalMatrix rows");
    data_.insert(data_.end(), r.begin(), r.end());
  }
}

RationalMatrix RationalMatrix::identity(std::size_t n) {
  RationalMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
  return m;
}

RationalMatrix RationalMatrix::from_rows(std::span<const QVec> rows) {
  if (rows.empty()) return {};
  RationalMatrix m(rows.size(), rows[0].size());
  for (std::size_t i = 0; i < rows.size(); ++i) {
    require_same_size(rows[i].size(), m.cols(), "RationalMatrix::from_rows");
    for (std::size_t j = 0; j < m.cols(); ++j) m(i, j) = rows[i][j];
  }
  return m;
}

QVec RationalMatrix::row(std::size_t i) const {
  return QVec(std::vector<Rational>(data_.begin() + i * cols_,
                                    data_.begin() + (i + 1) * cols_));
}

RationalMatrix RationalMatrix::transposed() const {
  RationalMatrix t(cols_, rows_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < cols_; ++j) t(j, i) = (*this)(i, j);
  return t;
}

RationalMatrix operator*(const RationalMatrix& a, const RationalMatrix& b) {
  require_same_size(a.cols(), b.rows(), "matrix product");
  RationalMatrix c(a.rows(), b.cols());
  for (std::size_t i = 0; i < a.rows(); ++i) {
    for (std::size_t k = 0; k < a.cols(); ++k) {
      if (a(i, k) == 0) continue;
      for (std::size_t j = 0; j < b.cols(); ++j) c(i, j) += a(i, k) * b(k, j);
    }
  }
  return c;
}

Rational determinant(RationalMatrix m) {
  require_same_size(m.rows(), m.cols(), "determinant");
  const std::size_t n = m.rows();
  Rational det = 1;
  for (std::size_t col = 0; col < n; ++col) {
    std::size_t pivot = col;
    while (pivot < n && m(pivot, col) == 0) ++pivot;
    if (pivot == n) return 0;
    if (pivot != col) {
      for (std::size_t j = 0; j < n; ++j) std::swap(m(pivot, j), m(col, j));
      det = -det;
    }
    det *= m(col, col);
    for (std::size_t i = col + 1; i < n; ++i) {
      if (m(i, col) == 0) continue;
      Rational f = m(i, col) / m(col, col);
      for (std::size_t j = col; j < n; ++j) m(i, j) -= f * m(col, j);
    }
  }
  return det;
}

RationalMatrix inverse(const RationalMatrix& m) {
  require_same_size(m.rows(), m.cols(), "inverse");
  const std::size_t n = m.rows();
  RationalMatrix a = m;
  RationalMatrix inv = RationalMatrix::identity(n);
  for (std::size_t col = 0; col < n; ++col) {
    std::size_t pivot = col;
    while (pivot < n && a(pivot, col) == 0) ++pivot;
    if (pivot == n) throw Error("inverse: singular matrix");
    for (std::size_t j = 0; j < n; ++j) {
      std::swap(a(pivot, j), a(col, j));
      std::swap(inv(pivot, j), inv(col, j));
    }
    Rational p = a(col, col);
    for (std::size_t j = 0; j < n; ++j) {
      a(col, j) /= p;
      inv(col, j) /= p;
    }
    for (std::size_t i = 0; i < n; ++i) {
      if (i == col || a(i, col) == 0) continue;
      Rational f = a(i, col);
      for (std::size_t j = 0; j < n; ++j) {
        a(i, j) -= f * a(col, j);
        inv(i, j) -= f * inv(col, j);
      }
    }
  }
  return inv;
}

std::size_t rank(std::span<const QVec> vectors) {
  if (vectors.empty()) return 0;
  RationalMatrix m = RationalMatrix::from_rows(vectors);
  std::size_t r = 0;
  for (std::size_t col = 0; col < m.cols() && r < m.rows(); ++col) {
    std::size_t pivot = r;
    while (pivot < m.rows() && m(pivot, col) == 0) ++pivot;
    if (pivot == m.rows()) continue;
    for (std::size_t j = 0; j < m.cols(); ++j) std::swap(m(pivot, j), m(r, j));
    for (std::size_t i = r + 1; i < m.rows(); ++i) {
      if (m(i, col) == 0) continue;
      Rational f = m(i, col) / m(r, col);
      for (std::size_t j = col; j < m.cols(); ++j) m(i, j) -= f * m(r, j);
    }
    ++r;
  }
  return r;
}

LdlDecomposition ldl(const RationalMatrix& m) {
  require_same_size(m.rows(), m.cols(), "ldl");
  const std::size_t n = m.rows();
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j)
      if (m(i, j) != m(j, i)) throw Error("ldl: matrix is not symmetric");

  RationalMatrix q = m;
  for (std::size_t i = 0; i < n; ++i) {
    if (q(i, i) <= 0) throw Error("ldl: matrix is not positive definite");
    for (std::size_t j = i + 1; j < n; ++j) {
      q(j, i) = q(i, j);
      q(i, j) /= q(i, i);
    }
    for (std::size_t k = i + 1; k < n; ++k)
      for (std::size_t l = k; l < n; ++l) q(k, l) -= q(k, i) * q(i, l);
  }

  LdlDecomposition out{std::vector<Rational>(n), RationalMatrix(n, n)};
  for (std::size_t i = 0; i < n; ++i) {
    out.diagonal[i] = q(i, i);
    out.mu(i, i) = 1;
    for (std::size_t j = i + 1; j < n; ++j) out.mu(i, j) = q(i, j);
  }
  return out;
}

// --- GramForm ---------------------------------------------------------------

GramForm::GramForm(RationalMatrix matrix) : matrix_(std::move(matrix)) {
  if (matrix_.rows() == 0) throw Error("GramForm: empty matrix");
  ldl(matrix_);  // throws unless symmetric positive definite
}

GramForm GramForm::identity(std::size_t dim) {
  return GramForm(RationalMatrix::identity(dim));
}

Rational inner(const QVec& v, const QVec& w, const GramForm& g) {
  require_same_size(v.size(), g.dim(), "inner");
  require_same_size(w.size(), g.dim(), "inner");
  Rational sum = 0;
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (v[i] == 0) continue;
    Rational row = 0;
    for (std::size_t j = 0; j < w.size(); ++j) {
      if (w[j] != 0) row += g(i, j) * w[j];
    }
    sum += v[i] * row;
  }
  return sum;
}

RationalMatrix gram_of(std::span<const QVec> vectors, const GramForm& g) {
  RationalMatrix m(vectors.size(), vectors.size());
  for (std::size_t i = 0; i < vectors.size(); ++i) {
    for (std::size_t j = i; j < vectors.size(); ++j) {
      m(i, j) = inner(vectors[i], vectors[j], g);
      m(j, i) = m(i, j);
    }
  }
  return m;
}

std::optional<Rational> proportionality(const RationalMatrix& a,
                                        const RationalMatrix& b) {
  if (a.rows() != b.rows() || a.cols() != b.cols()) return std::nullopt;
  std::optional<Rational> scale;
  for (std::size_t i = 0; i < a.rows(); ++i) {
    for (std::size_t j = 0; j < a.cols(); ++j) {
      if (b(i, j) == 0) {
        if (a(i, j) != 0) return std::nullopt;
        continue;
      }
      Rational s = a(i, j) / b(i, j);
      if (scale && *scale != s) return std::nullopt;
      scale = s;
    }
  }
  if (!scale || *scale <= 0) return std::nullopt;
  return scale;
}

// --- IntegralLattice --------------------------------------------------------

IntegralLattice::IntegralLattice(std::vector<QVec> basis, GramForm gram)
    : basis_(std::move(basis)), gram_(std::move(gram)) {
  if (basis_.empty()) throw Error("IntegralLattice: empty basis");
  for (const auto& b : basis_)
    require_same_size(b.size(), gram_.dim(), "IntegralLattice basis");
  if (rootgeom::rank(basis_) != basis_.size()) {
    throw Error("IntegralLattice: basis vectors are linearly dependent");
  }
  basis_gram_ = gram_of(basis_, gram_);
  ldl_ = ldl(basis_gram_);
  basis_gram_inv_ = inverse(basis_gram_);
}

std::optional<std::vector<Rational>> IntegralLattice::span_coordinates(
    const QVec& v) const {
  require_same_size(v.size(), ambient_dim(), "span_coordinates");
  const std::size_t r = rank();
  std::vector<Rational> pairings(r);
  for (std::size_t j = 0; j < r; ++j) pairings[j] = inner(basis_[j], v, gram_);
  std::vector<Rational> c(r);
  QVec rebuilt(ambient_dim());
  for (std::size_t i = 0; i < r; ++i) {
    for (std::size_t j = 0; j < r; ++j) c[i] += basis_gram_inv_(i, j) * pairings[j];
    if (c[i] != 0) rebuilt += c[i] * basis_[i];
  }
  // The solve gives the orthogonal projection; v is in the span iff it is
  // reproduced exactly.
  if (!(rebuilt == v)) return std::nullopt;
  return c;
}

std::optional<IntVec> IntegralLattice::coordinates(const QVec& v) const {
  auto c = span_coordinates(v);
  if (!c) return std::nullopt;
  IntVec out;
  out.reserve(c->size());
  for (const auto& q : *c) {
    if (!is_integer(q)) return std::nullopt;
    out.push_back(numerator(q));
  }
  return out;
}

QVec IntegralLattice::combine(const IntVec& coefficients) const {
  require_same_size(coefficients.size(), rank(), "combine");
  QVec v(ambient_dim());
  for (std::size_t i = 0; i < rank(); ++i) {
    if (coefficients[i] != 0) v += Rational(coefficients[i]) * basis_[i];
  }
  return v;
}

std::vector<IntVec> hermite_normal_form(std::vector<IntVec> a) {
  if (a.empty()) return {};
  const std::size_t m = a.size();
  const std::size_t d = a[0].size();
  std::size_t r = 0;
  for (std::size_t col = 0; col < d && r < m; ++col) {
    for (std::size_t i = r + 1; i < m; ++i) {
      if (a[i][col] == 0) continue;
      if (a[r][col] == 0) {
        std::swap(a[r], a[i]);
        continue;
      }
      auto [g, x, y] = extended_gcd(a[r][col], a[i][col]);
      Integer p = a[r][col] / g;
      Integer q = a[i][col] / g;
      for (std::size_t k = col; k < d; ++k) {
        Integer top = a[r][k];
        Integer bottom = a[i][k];
        a[r][k] = x * top + y * bottom;
        a[i][k] = q * top - p * bottom;
      }
    }
    if (a[r][col] == 0) continue;
    if (a[r][col] < 0) {
      for (auto& e : a[r]) e = -e;
    }
    for (std::size_t k = 0; k < r; ++k) {
      Integer f = floor_div(a[k][col], a[r][col]);
      if (f == 0) continue;
      for (std::size_t j = col; j < d; ++j) a[k][j] -= f * a[r][j];
    }
    ++r;
  }
  a.resize(r);
  return a;
}

IntegralLattice hnf_basis(std::span<const QVec> generators,
                          const GramForm& gram) {
  if (generators.empty()) throw Error("hnf_basis: empty generating set");
  const std::size_t d = gram.dim();
  Integer common = 1;
  for (const auto& g : generators) {
    require_same_size(g.size(), d, "hnf_basis");
    for (std::size_t i = 0; i < d; ++i) common = lcm(common, denominator(g[i]));
  }
  std::vector<IntVec> rows;
  rows.reserve(generators.size());
  for (const auto& g : generators) {
    IntVec row(d);
    for (std::size_t i = 0; i < d; ++i) row[i] = numerator(g[i] * common);
    rows.push_back(std::move(row));
  }
  auto hnf = hermite_normal_form(std::move(rows));
  if (hnf.empty()) throw Error("hnf_basis: generators span the zero lattice");
  std::vector<QVec> basis;
  basis.reserve(hnf.size());
  for (const auto& row : hnf) {
    QVec v(d);
    for (std::size_t i = 0; i < d; ++i) v[i] = Rational(row[i], common);
    basis.push_back(std::move(v));
  }
  return IntegralLattice(std::move(basis), gram);
}

bool contains(const IntegralLattice& lattice, const QVec& v) {
  return lattice.coordinates(v).has_value();
}

IntVec coefficient_bounds(const IntegralLattice& lattice,
                          const Rational& target) {
  IntVec bounds(lattice.rank());
  for (std::size_t i = 0; i < lattice.rank(); ++i) {
    bounds[i] = isqrt_floor(target * lattice.basis_gram_inverse()(i, i));
  }
  return bounds;
}

namespace {

class ShellEnumerator {
 public:
  ShellEnumerator(const IntegralLattice& lattice, const Rational& target)
      : ldl_(lattice.basis_ldl()),
        bounds_(coefficient_bounds(lattice, target)),
        n_(lattice.rank()),
        x_(n_) {
    descend(n_ - 1, target);
  }

  std::vector<IntVec> take() { return std::move(found_); }

 private:
  void descend(std::size_t i, const Rational& remaining) {
    Rational center = 0;
    for (std::size_t j = i + 1; j < n_; ++j) {
      if (x_[j] != 0) center -= ldl_.mu(i, j) * x_[j];
    }
    const Rational& d = ldl_.diagonal[i];
    auto cost = [&](const Integer& x) {
      Rational offset = Rational(x) - center;
      return d * offset * offset;
    };
    // The admissible values form an interval around the nearest integer.
    Integer x0 = round_half_up(center);
    if (cost(x0) > remaining) return;
    Integer lo = x0, hi = x0;
    while (cost(hi + 1) <= remaining) ++hi;
    while (cost(lo - 1) <= remaining) --lo;
    lo = std::max(lo, Integer(-bounds_[i]));
    hi = std::min(hi, bounds_[i]);
    for (Integer x = lo; x <= hi; ++x) {
      Rational used = cost(x);
      x_[i] = x;
      if (i == 0) {
        if (used == remaining) found_.push_back(x_);
      } else {
        descend(i - 1, remaining - used);
      }
    }
    x_[i] = 0;
  }

  const LdlDecomposition& ldl_;
  IntVec bounds_;
  std::size_t n_;
  IntVec x_;
  std::vector<IntVec> found_;
};

}  // namespace

std::vector<IntVec> shell_coefficients(const IntegralLattice& lattice,
                                       const Rational& target) {
  if (target <= 0) throw Error("vectors_of_norm: target norm must be positive");
  auto found = ShellEnumerator(lattice, target).take();
  std::sort(found.begin(), found.end());
  return found;
}

std::vector<QVec> vectors_of_norm(const IntegralLattice& lattice,
                                  const Rational& target) {
  auto coefficients = shell_coefficients(lattice, target);
  std::vector<QVec> out;
  out.reserve(coefficients.size());
  for (const auto& c : coefficients) out.push_back(lattice.combine(c));
  return out;
}

}  // namespace rootgeom
