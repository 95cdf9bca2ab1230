#pragma once

#include <algorithm>
#include <cassert>
#include <stdexcept>
#include <vector>

#include "piwtilt/scalar.hpp"

namespace piwtilt {

template <class S>
using Vec = std::vector<S>;

template <class S>
Vec<S> zero_vec(int n) {
  return Vec<S>(static_cast<size_t>(n), S(0));
}

template <class S>
bool vec_is_zero(const Vec<S>& v) {
  for (const auto& x : v)
    if (!is_zero(x)) return false;
  return true;
}

// Dense matrix, row-major.
template <class S>
struct Matrix {
  int rows = 0, cols = 0;
  std::vector<S> a;

  Matrix() = default;
  Matrix(int r, int c) : rows(r), cols(c), a(static_cast<size_t>(r) * c, S(0)) {}

  S& at(int i, int j) { return a[static_cast<size_t>(i) * cols + j]; }
  const S& at(int i, int j) const { return a[static_cast<size_t>(i) * cols + j]; }

  static Matrix identity(int n) {
    Matrix m(n, n);
    for (int i = 0; i < n; ++i) m.at(i, i) = S(1);
    return m;
  }

  Vec<S> apply(const Vec<S>& v) const {
    assert(static_cast<int>(v.size()) == cols);
    Vec<S> r = zero_vec<S>(rows);
    for (int i = 0; i < rows; ++i)
      for (int j = 0; j < cols; ++j)
        if (!is_zero(at(i, j)) && !is_zero(v[j])) r[i] += at(i, j) * v[j];
    return r;
  }

  Matrix mul(const Matrix& o) const {
    assert(cols == o.rows);
    Matrix r(rows, o.cols);
    for (int i = 0; i < rows; ++i)
      for (int k = 0; k < cols; ++k) {
        const S& x = at(i, k);
        if (is_zero(x)) continue;
        for (int j = 0; j < o.cols; ++j)
          if (!is_zero(o.at(k, j))) r.at(i, j) += x * o.at(k, j);
      }
    return r;
  }

  bool is_zero_matrix() const {
    for (const auto& x : a)
      if (!is_zero(x)) return false;
    return true;
  }

  Vec<S> col(int j) const {
    Vec<S> c = zero_vec<S>(rows);
    for (int i = 0; i < rows; ++i) c[i] = at(i, j);
    return c;
  }
};

// In-place reduced row echelon form. Returns pivot column per row (rows sorted
// by pivot, zero rows dropped).
template <class S>
std::vector<int> rref(std::vector<Vec<S>>& rows) {
  std::vector<int> pivots;
  if (rows.empty()) return pivots;
  const int ncols = static_cast<int>(rows[0].size());
  size_t r = 0;
  for (int c = 0; c < ncols && r < rows.size(); ++c) {
    size_t sel = r;
    while (sel < rows.size() && is_zero(rows[sel][c])) ++sel;
    if (sel == rows.size()) continue;
    std::swap(rows[r], rows[sel]);
    S inv = S(1) / rows[r][c];
    for (int j = c; j < ncols; ++j) rows[r][j] = rows[r][j] * inv;
    for (size_t i = 0; i < rows.size(); ++i) {
      if (i == r || is_zero(rows[i][c])) continue;
      S f = rows[i][c];
      for (int j = c; j < ncols; ++j) rows[i][j] = rows[i][j] - f * rows[r][j];
    }
    pivots.push_back(c);
    ++r;
  }
  rows.resize(r);
  return pivots;
}

// A subspace of K^ambient kept in canonical (RREF) form.
template <class S>
class Subspace {
public:
  Subspace() = default;
  explicit Subspace(int ambient) : ambient_(ambient) {}

  static Subspace zero(int ambient) { return Subspace(ambient); }

  static Subspace full(int ambient) {
    Subspace s(ambient);
    for (int i = 0; i < ambient; ++i) {
      Vec<S> e = zero_vec<S>(ambient);
      e[i] = S(1);
      s.basis_.push_back(std::move(e));
      s.pivots_.push_back(i);
    }
    return s;
  }

  static Subspace span(int ambient, std::vector<Vec<S>> rows) {
    Subspace s(ambient);
    auto piv = rref(rows);
    s.basis_ = std::move(rows);
    s.pivots_ = std::move(piv);
    return s;
  }

  int ambient() const { return ambient_; }
  int dim() const { return static_cast<int>(basis_.size()); }
  const std::vector<Vec<S>>& basis() const { return basis_; }
  const std::vector<int>& pivots() const { return pivots_; }

  // Residual of v after reduction: zero iff v lies in the subspace.
  Vec<S> reduce(Vec<S> v) const {
    for (size_t i = 0; i < basis_.size(); ++i) {
      const S& f = v[pivots_[i]];
      if (is_zero(f)) continue;
      S c = f;
      for (int j = 0; j < ambient_; ++j)
        if (!is_zero(basis_[i][j])) v[j] = v[j] - c * basis_[i][j];
    }
    return v;
  }

  bool contains(const Vec<S>& v) const { return vec_is_zero(reduce(v)); }

  // Grows the span; true iff dim increased. Keeps canonical form.
  bool insert(Vec<S> v) {
    v = reduce(std::move(v));
    int p = -1;
    for (int j = 0; j < ambient_; ++j)
      if (!is_zero(v[j])) {
        p = j;
        break;
      }
    if (p < 0) return false;
    S inv = S(1) / v[p];
    for (int j = p; j < ambient_; ++j) v[j] = v[j] * inv;
    for (size_t i = 0; i < basis_.size(); ++i) {
      S f = basis_[i][p];
      if (is_zero(f)) continue;
      for (int j = 0; j < ambient_; ++j) basis_[i][j] = basis_[i][j] - f * v[j];
    }
    auto pos = std::lower_bound(pivots_.begin(), pivots_.end(), p);
    size_t idx = static_cast<size_t>(pos - pivots_.begin());
    pivots_.insert(pos, p);
    basis_.insert(basis_.begin() + idx, std::move(v));
    return true;
  }

  Subspace sum(const Subspace& o) const {
    assert(ambient_ == o.ambient_);
    Subspace s = *this;
    for (const auto& v : o.basis_) s.insert(v);
    return s;
  }

  bool is_subset_of(const Subspace& o) const {
    for (const auto& v : basis_)
      if (!o.contains(v)) return false;
    return true;
  }

  bool operator==(const Subspace& o) const {
    return ambient_ == o.ambient_ && pivots_ == o.pivots_ && basis_ == o.basis_;
  }

  // Zassenhaus: echelonize rows (v|v) for v in this, (w|0) for w in other.
  Subspace intersect(const Subspace& o) const {
    assert(ambient_ == o.ambient_);
    std::vector<Vec<S>> rows;
    for (const auto& v : basis_) {
      Vec<S> r = zero_vec<S>(2 * ambient_);
      for (int j = 0; j < ambient_; ++j) r[j] = r[ambient_ + j] = v[j];
      rows.push_back(std::move(r));
    }
    for (const auto& w : o.basis_) {
      Vec<S> r = zero_vec<S>(2 * ambient_);
      for (int j = 0; j < ambient_; ++j) r[j] = w[j];
      rows.push_back(std::move(r));
    }
    rref(rows);
    Subspace s(ambient_);
    for (const auto& r : rows) {
      bool left_zero = true;
      for (int j = 0; j < ambient_ && left_zero; ++j)
        if (!is_zero(r[j])) left_zero = false;
      if (!left_zero) continue;
      Vec<S> v(r.begin() + ambient_, r.end());
      if (!vec_is_zero(v)) s.insert(std::move(v));
    }
    return s;
  }

private:
  int ambient_ = 0;
  std::vector<Vec<S>> basis_;
  std::vector<int> pivots_;
};

// Kernel of the linear map given by constraint rows (each row: one equation
// over `cols` unknowns). Canonical basis.
template <class S>
Subspace<S> kernel(std::vector<Vec<S>> rows, int cols) {
  auto pivots = rref(rows);
  std::vector<bool> is_pivot(cols, false);
  for (int p : pivots) is_pivot[p] = true;
  Subspace<S> s(cols);
  for (int j = 0; j < cols; ++j) {
    if (is_pivot[j]) continue;
    Vec<S> v = zero_vec<S>(cols);
    v[j] = S(1);
    for (size_t i = 0; i < rows.size(); ++i) v[pivots[i]] = -rows[i][j];
    s.insert(std::move(v));
  }
  return s;
}

// Canonical coordinates on ambient/W: residual's non-pivot coordinates.
// Class representatives are the non-pivot unit vectors.
template <class S>
struct QuotientMap {
  Subspace<S> sub;
  std::vector<int> reps;  // non-pivot coordinates

  static QuotientMap of(Subspace<S> w) {
    QuotientMap q;
    std::vector<bool> is_pivot(w.ambient(), false);
    for (int p : w.pivots()) is_pivot[p] = true;
    for (int j = 0; j < w.ambient(); ++j)
      if (!is_pivot[j]) q.reps.push_back(j);
    q.sub = std::move(w);
    return q;
  }

  int dim() const { return static_cast<int>(reps.size()); }

  Vec<S> project(const Vec<S>& v) const {
    Vec<S> red = sub.reduce(v);
    Vec<S> out = zero_vec<S>(dim());
    for (size_t k = 0; k < reps.size(); ++k) out[k] = red[reps[k]];
    return out;
  }

  Vec<S> lift(const Vec<S>& q) const {
    Vec<S> out = zero_vec<S>(sub.ambient());
    for (size_t k = 0; k < reps.size(); ++k) out[reps[k]] = q[k];
    return out;
  }
};

}  // namespace piwtilt
