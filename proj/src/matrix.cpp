#include "qvoa/matrix.hpp"

#include <algorithm>
#include <stdexcept>
#include <utility>

namespace qvoa {

ScalarMatrix::ScalarMatrix(std::size_t rows, std::size_t cols, std::vector<Scalar> entries)
    : rows_(rows), cols_(cols), entries_(std::move(entries)) {
  if (entries_.size() != rows_ * cols_) throw std::invalid_argument("matrix entry count does not match shape");
}

ScalarMatrix ScalarMatrix::identity(std::size_t n) {
  ScalarMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m.at(i, i) = Scalar(1);
  return m;
}

ScalarVector ScalarMatrix::row(std::size_t i) const {
  return {entries_.begin() + static_cast<std::ptrdiff_t>(i * cols_),
          entries_.begin() + static_cast<std::ptrdiff_t>((i + 1) * cols_)};
}

ScalarMatrix ScalarMatrix::specialize(const Rational& r_value) const {
  ScalarMatrix out(rows_, cols_);
  for (std::size_t k = 0; k < entries_.size(); ++k) out.entries_[k] = Scalar(entries_[k].specialize(r_value));
  return out;
}

ScalarVector ScalarMatrix::operator*(const ScalarVector& v) const {
  if (v.size() != cols_) throw std::invalid_argument("matrix-vector shape mismatch");
  ScalarVector out(rows_);
  for (std::size_t i = 0; i < rows_; ++i) {
    for (std::size_t j = 0; j < cols_; ++j) {
      if (!at(i, j).is_zero() && !v[j].is_zero()) out[i] += at(i, j) * v[j];
    }
  }
  return out;
}

bool ScalarMatrix::is_symmetric() const {
  if (rows_ != cols_) return false;
  for (std::size_t i = 0; i < rows_; ++i) {
    for (std::size_t j = i + 1; j < cols_; ++j) {
      if (at(i, j) != at(j, i)) return false;
    }
  }
  return true;
}

void make_primitive(ScalarVector& v) {
  Scalar g;
  const Scalar* first = nullptr;
  for (const auto& x : v) {
    if (x.is_zero()) continue;
    if (first == nullptr) first = &x;
    g = gcd(g, x);
    if (g.degree() == 0) break;
  }
  if (first == nullptr) return;
  if (g.degree() > 0) {
    for (auto& x : v) {
      if (!x.is_zero()) x = exact_quotient(x, g);
    }
  }
  const Rational lead = std::find_if(v.begin(), v.end(), [](const Scalar& x) { return !x.is_zero(); })->leading();
  if (lead != 1) {
    const Rational inv = Rational(1) / lead;
    for (auto& x : v) x *= inv;
  }
}

namespace {

// target := pivot_value * target - target[col] * source, then made primitive.
void eliminate(ScalarVector& target, const ScalarVector& source, std::size_t col) {
  if (target[col].is_zero()) return;
  const Scalar factor = target[col];
  const Scalar& pivot = source[col];
  for (std::size_t k = 0; k < target.size(); ++k) {
    if (source[k].is_zero()) {
      if (!target[k].is_zero()) target[k] *= pivot;
      continue;
    }
    target[k] = pivot * target[k] - factor * source[k];
  }
  make_primitive(target);
}

std::optional<std::size_t> first_nonzero(const ScalarVector& v) {
  for (std::size_t k = 0; k < v.size(); ++k) {
    if (!v[k].is_zero()) return k;
  }
  return std::nullopt;
}

}  // namespace

ScalarVector EchelonBasis::reduce(ScalarVector v) const {
  if (v.size() != cols_) throw std::invalid_argument("vector length does not match basis width");
  for (std::size_t k = 0; k < rows_.size(); ++k) eliminate(v, rows_[k], pivots_[k]);
  return v;
}

bool EchelonBasis::insert(ScalarVector v) {
  v = reduce(std::move(v));
  const auto pivot = first_nonzero(v);
  if (!pivot) return false;
  make_primitive(v);
  const auto pos = std::upper_bound(pivots_.begin(), pivots_.end(), *pivot) - pivots_.begin();
  pivots_.insert(pivots_.begin() + pos, *pivot);
  rows_.insert(rows_.begin() + pos, std::move(v));
  return true;
}

Nullspace nullspace(const ScalarMatrix& m, std::optional<Rational> r_value) {
  const ScalarMatrix work = r_value ? m.specialize(*r_value) : m;
  EchelonBasis echelon(work.cols());
  for (std::size_t i = 0; i < work.rows(); ++i) echelon.insert(work.row(i));

  // Back-substitute so that each pivot column is zero outside its own row.
  std::vector<ScalarVector> rows = echelon.rows();
  const auto& pivots = echelon.pivots();
  for (std::size_t k = rows.size(); k-- > 0;) {
    for (std::size_t t = 0; t < k; ++t) eliminate(rows[t], rows[k], pivots[k]);
  }

  Nullspace out;
  out.rank = rows.size();
  std::vector<bool> is_pivot(work.cols(), false);
  for (auto p : pivots) is_pivot[p] = true;

  for (std::size_t f = 0; f < work.cols(); ++f) {
    if (is_pivot[f]) continue;
    // x_f = prod of pivots; x_{p_k} = -row_k[f] * prod_{j != k} pivot_j.
    ScalarVector x(work.cols());
    Scalar all(1);
    for (std::size_t k = 0; k < rows.size(); ++k) all *= rows[k][pivots[k]];
    x[f] = all;
    for (std::size_t k = 0; k < rows.size(); ++k) {
      if (rows[k][f].is_zero()) continue;
      Scalar others(1);
      for (std::size_t j = 0; j < rows.size(); ++j) {
        if (j != k) others *= rows[j][pivots[j]];
      }
      x[pivots[k]] = -(rows[k][f] * others);
    }
    make_primitive(x);
    out.basis.push_back(std::move(x));
  }
  return out;
}

std::size_t rank(const ScalarMatrix& m, std::optional<Rational> r_value) {
  const ScalarMatrix work = r_value ? m.specialize(*r_value) : m;
  EchelonBasis echelon(work.cols());
  for (std::size_t i = 0; i < work.rows(); ++i) echelon.insert(work.row(i));
  return echelon.rank();
}

Scalar determinant(const ScalarMatrix& m) {
  if (m.rows() != m.cols()) throw std::invalid_argument("determinant of a non-square matrix");
  const std::size_t n = m.rows();
  if (n == 0) return Scalar(1);
  ScalarMatrix a = m;
  Scalar sign(1);
  Scalar prev(1);
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (a.at(k, k).is_zero()) {
      std::size_t swap = k + 1;
      while (swap < n && a.at(swap, k).is_zero()) ++swap;
      if (swap == n) return Scalar();
      for (std::size_t j = 0; j < n; ++j) std::swap(a.at(k, j), a.at(swap, j));
      sign = -sign;
    }
    for (std::size_t i = k + 1; i < n; ++i) {
      for (std::size_t j = k + 1; j < n; ++j) {
        a.at(i, j) = exact_quotient(a.at(k, k) * a.at(i, j) - a.at(i, k) * a.at(k, j), prev);
      }
      a.at(i, k) = Scalar();
    }
    prev = a.at(k, k);
  }
  return sign * a.at(n - 1, n - 1);
}

}  // namespace qvoa
