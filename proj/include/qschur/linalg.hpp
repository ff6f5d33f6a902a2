/*
  Dense exact linear algebra over any of the toolkit's coefficient
  fields, plus an incremental sparse row-reducer used for commutant
  computations.  Pivoting picks the first nonzero entry; there is no
  magnitude notion over these fields.
*/
#pragma once

#include <functional>
#include <map>
#include <stdexcept>
#include <vector>

#include "qschur/scalars.hpp"

namespace qschur {

template <class K>
class Mat {
 public:
  Mat() : r_(0), c_(0) {}
  Mat(size_t r, size_t c) : r_(r), c_(c), a_(r * c, K(0)) {}

  static Mat identity(size_t n) {
    Mat m(n, n);
    for (size_t i = 0; i < n; ++i) m(i, i) = K(1);
    return m;
  }

  size_t rows() const { return r_; }
  size_t cols() const { return c_; }

  K& operator()(size_t i, size_t j) { return a_[i * c_ + j]; }
  const K& operator()(size_t i, size_t j) const { return a_[i * c_ + j]; }

  friend Mat operator*(const Mat& x, const Mat& y) {
    if (x.c_ != y.r_) throw std::invalid_argument("Mat: dimension mismatch in product");
    Mat r(x.r_, y.c_);
    for (size_t i = 0; i < x.r_; ++i)
      for (size_t k = 0; k < x.c_; ++k) {
        const K& v = x(i, k);
        if (is_zero(v)) continue;
        for (size_t j = 0; j < y.c_; ++j) {
          if (is_zero(y(k, j))) continue;
          r(i, j) = r(i, j) + v * y(k, j);
        }
      }
    return r;
  }
  friend Mat operator+(const Mat& x, const Mat& y) {
    Mat r(x.r_, x.c_);
    for (size_t i = 0; i < x.a_.size(); ++i) r.a_[i] = x.a_[i] + y.a_[i];
    return r;
  }
  friend Mat operator-(const Mat& x, const Mat& y) {
    Mat r(x.r_, x.c_);
    for (size_t i = 0; i < x.a_.size(); ++i) r.a_[i] = x.a_[i] - y.a_[i];
    return r;
  }
  friend Mat operator*(const K& s, const Mat& x) {
    Mat r(x.r_, x.c_);
    for (size_t i = 0; i < x.a_.size(); ++i) r.a_[i] = s * x.a_[i];
    return r;
  }
  friend bool operator==(const Mat& x, const Mat& y) {
    if (x.r_ != y.r_ || x.c_ != y.c_) return false;
    for (size_t i = 0; i < x.a_.size(); ++i)
      if (!(x.a_[i] == y.a_[i])) return false;
    return true;
  }
  friend bool operator!=(const Mat& x, const Mat& y) { return !(x == y); }

  bool is_zero_mat() const {
    for (const auto& v : a_)
      if (!is_zero(v)) return false;
    return true;
  }

  std::vector<K> col(size_t j) const {
    std::vector<K> v(r_, K(0));
    for (size_t i = 0; i < r_; ++i) v[i] = (*this)(i, j);
    return v;
  }

  std::vector<K> apply(const std::vector<K>& v) const {
    if (v.size() != c_) throw std::invalid_argument("Mat: dimension mismatch in apply");
    std::vector<K> r(r_, K(0));
    for (size_t i = 0; i < r_; ++i)
      for (size_t j = 0; j < c_; ++j)
        if (!is_zero((*this)(i, j)) && !is_zero(v[j])) r[i] = r[i] + (*this)(i, j) * v[j];
    return r;
  }

  // row-major flattening, for treating endomorphisms as vectors
  std::vector<K> vec() const { return a_; }

  static Mat kron(const Mat& x, const Mat& y) {
    Mat r(x.r_ * y.r_, x.c_ * y.c_);
    for (size_t i = 0; i < x.r_; ++i)
      for (size_t j = 0; j < x.c_; ++j) {
        if (is_zero(x(i, j))) continue;
        for (size_t k = 0; k < y.r_; ++k)
          for (size_t l = 0; l < y.c_; ++l)
            r(i * y.r_ + k, j * y.c_ + l) = x(i, j) * y(k, l);
      }
    return r;
  }

  /* In-place reduced row echelon form; returns the pivot columns. */
  std::vector<size_t> rref() {
    std::vector<size_t> pivots;
    size_t row = 0;
    for (size_t col = 0; col < c_ && row < r_; ++col) {
      size_t sel = r_;
      for (size_t i = row; i < r_; ++i)
        if (!is_zero((*this)(i, col))) {
          sel = i;
          break;
        }
      if (sel == r_) continue;
      if (sel != row)
        for (size_t j = 0; j < c_; ++j) std::swap((*this)(sel, j), (*this)(row, j));
      K p = inv((*this)(row, col));
      for (size_t j = col; j < c_; ++j) (*this)(row, j) = p * (*this)(row, j);
      for (size_t i = 0; i < r_; ++i) {
        if (i == row || is_zero((*this)(i, col))) continue;
        K f = (*this)(i, col);
        for (size_t j = col; j < c_; ++j)
          (*this)(i, j) = (*this)(i, j) - f * (*this)(row, j);
      }
      pivots.push_back(col);
      ++row;
    }
    return pivots;
  }

  size_t rank() const {
    Mat tmp = *this;
    return tmp.rref().size();
  }

  /* Null space basis (columns of the returned matrices are flattened as
     vectors of length cols()). */
  std::vector<std::vector<K>> nullspace() const {
    Mat tmp = *this;
    auto pivots = tmp.rref();
    std::vector<bool> is_pivot(c_, false);
    for (auto p : pivots) is_pivot[p] = true;
    std::vector<std::vector<K>> basis;
    for (size_t f = 0; f < c_; ++f) {
      if (is_pivot[f]) continue;
      std::vector<K> v(c_, K(0));
      v[f] = K(1);
      for (size_t pi = 0; pi < pivots.size(); ++pi) v[pivots[pi]] = -tmp(pi, f);
      basis.push_back(std::move(v));
    }
    return basis;
  }

  /* Solve A x = b; returns nullopt if inconsistent.  When the solution
     is not unique, free variables are set to zero. */
  std::optional<std::vector<K>> solve(const std::vector<K>& b) const {
    if (b.size() != r_) throw std::invalid_argument("Mat: rhs size mismatch");
    Mat aug(r_, c_ + 1);
    for (size_t i = 0; i < r_; ++i) {
      for (size_t j = 0; j < c_; ++j) aug(i, j) = (*this)(i, j);
      aug(i, c_) = b[i];
    }
    auto pivots = aug.rref();
    if (!pivots.empty() && pivots.back() == c_) return std::nullopt;
    std::vector<K> x(c_, K(0));
    for (size_t pi = 0; pi < pivots.size(); ++pi) x[pivots[pi]] = aug(pi, c_);
    return x;
  }

  std::optional<Mat> inverse() const {
    if (r_ != c_) return std::nullopt;
    Mat aug(r_, 2 * c_);
    for (size_t i = 0; i < r_; ++i) {
      for (size_t j = 0; j < c_; ++j) aug(i, j) = (*this)(i, j);
      aug(i, c_ + i) = K(1);
    }
    auto pivots = aug.rref();
    if (pivots.size() != r_) return std::nullopt;
    Mat out(r_, c_);
    for (size_t i = 0; i < r_; ++i)
      for (size_t j = 0; j < c_; ++j) out(i, j) = aug(i, c_ + j);
    return out;
  }

 private:
  size_t r_, c_;
  std::vector<K> a_;
};

/* Span tracker: feed vectors one at a time, keep a reduced echelon
   basis.  insert() returns true when the vector enlarged the span. */
template <class K>
class SpanBasis {
 public:
  using Row = std::map<size_t, K>;

  explicit SpanBasis(size_t dim) : dim_(dim) {}

  size_t dim() const { return dim_; }
  size_t rank() const { return rows_.size(); }

  bool contains(const std::vector<K>& v) const {
    auto r = reduce(v);
    return r.empty();
  }

  bool insert(const std::vector<K>& v) {
    Row r0;
    for (size_t j = 0; j < v.size(); ++j)
      if (!is_zero(v[j])) r0[j] = v[j];
    return insert_row(std::move(r0));
  }

  bool insert_sparse(const std::vector<std::pair<size_t, K>>& entries) {
    Row r0;
    for (const auto& [j, val] : entries)
      if (!is_zero(val)) r0[j] = val;
    return insert_row(std::move(r0));
  }

  bool insert_row(Row r0) {
    auto r = reduce_row(std::move(r0));
    if (r.empty()) return false;
    auto lead = r.begin()->first;
    K p = inv(r.begin()->second);
    for (auto& [j, val] : r) val = p * val;
    // keep existing rows reduced against the new one
    for (auto& [piv, row] : rows_) {
      auto it = row.find(lead);
      if (it == row.end()) continue;
      K f = it->second;
      axpy(row, r, -f);
    }
    rows_[lead] = std::move(r);
    return true;
  }

  // coordinates of the stored echelon basis rows
  std::vector<std::vector<K>> dense_rows() const {
    std::vector<std::vector<K>> out;
    for (const auto& [piv, row] : rows_) {
      std::vector<K> v(dim_, K(0));
      for (const auto& [j, val] : row) v[j] = val;
      out.push_back(std::move(v));
    }
    return out;
  }

  /* Free (non-pivot) columns; with full reduction the stored rows give
     the null space of the fed row set directly. */
  std::vector<std::vector<K>> nullspace_of_rows() const {
    std::vector<std::vector<K>> basis;
    for (size_t f = 0; f < dim_; ++f) {
      if (rows_.count(f)) continue;
      std::vector<K> v(dim_, K(0));
      v[f] = K(1);
      for (const auto& [piv, row] : rows_) {
        auto it = row.find(f);
        if (it != row.end()) v[piv] = -it->second;
      }
      basis.push_back(std::move(v));
    }
    return basis;
  }

 private:
  static void axpy(Row& dst, const Row& src, const K& f) {
    for (const auto& [j, val] : src) {
      auto it = dst.find(j);
      if (it == dst.end()) {
        K nv = f * val;
        if (!is_zero(nv)) dst[j] = nv;
      } else {
        it->second = it->second + f * val;
        if (is_zero(it->second)) dst.erase(it);
      }
    }
  }

  Row reduce(const std::vector<K>& v) const {
    Row r;
    for (size_t j = 0; j < v.size(); ++j)
      if (!is_zero(v[j])) r[j] = v[j];
    return reduce_row(std::move(r));
  }

  /* Full reduction: cancel every entry sitting at a stored pivot
     column.  Eliminating the smallest colliding column only creates
     entries at larger columns, so the loop terminates. */
  Row reduce_row(Row r) const {
    for (;;) {
      size_t target = SIZE_MAX;
      for (const auto& [c, v] : r) {
        if (rows_.count(c)) {
          target = c;
          break;
        }
      }
      if (target == SIZE_MAX) return r;
      K f = r.at(target);
      axpy(r, rows_.at(target), -f);
    }
  }

  size_t dim_;
  std::map<size_t, Row> rows_;  // pivot column -> unit row
};

/* Rank of the span of a set of vectors. */
template <class K>
size_t span_rank(const std::vector<std::vector<K>>& vecs, size_t dim) {
  SpanBasis<K> sb(dim);
  for (const auto& v : vecs) sb.insert(v);
  return sb.rank();
}

/* Do two vector sets span the same subspace? */
template <class K>
bool same_span(const std::vector<std::vector<K>>& a, const std::vector<std::vector<K>>& b,
               size_t dim) {
  SpanBasis<K> sa(dim), sboth(dim);
  for (const auto& v : a) {
    sa.insert(v);
    sboth.insert(v);
  }
  size_t ra = sa.rank();
  SpanBasis<K> sb(dim);
  for (const auto& v : b) {
    sb.insert(v);
    sboth.insert(v);
  }
  return ra == sb.rank() && ra == sboth.rank();
}

}  // namespace qschur
