#include "sl2hecke/kmat.hpp"

#include <cstddef>

namespace sl2hecke {

KMat KMat::identity(const Fq& k, std::size_t n) {
  KMat m(k, n, n);
  for (std::size_t i = 0; i < n; ++i) m.at(i, i) = k.from_int(1);
  return m;
}

bool KMat::is_zero() const {
  for (fq_t x : a_)
    if (x) return false;
  return true;
}

KMat KMat::operator+(const KMat& o) const {
  require(rows_ == o.rows_ && cols_ == o.cols_, "DomainError", "shape mismatch");
  KMat out(*field_, rows_, cols_);
  for (std::size_t i = 0; i < a_.size(); ++i) out.a_[i] = field_->add(a_[i], o.a_[i]);
  return out;
}

KMat KMat::operator-(const KMat& o) const {
  require(rows_ == o.rows_ && cols_ == o.cols_, "DomainError", "shape mismatch");
  KMat out(*field_, rows_, cols_);
  for (std::size_t i = 0; i < a_.size(); ++i) out.a_[i] = field_->sub(a_[i], o.a_[i]);
  return out;
}

KMat KMat::operator*(const KMat& o) const {
  require(cols_ == o.rows_, "DomainError", "shape mismatch in product");
  const Fq& k = *field_;
  KMat out(k, rows_, o.cols_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t l = 0; l < cols_; ++l) {
      fq_t x = a_[i * cols_ + l];
      if (!x) continue;
      for (std::size_t j = 0; j < o.cols_; ++j) {
        fq_t y = o.a_[l * o.cols_ + j];
        if (y) out.a_[i * o.cols_ + j] = k.add(out.a_[i * o.cols_ + j], k.mul(x, y));
      }
    }
  return out;
}

KMat KMat::scaled(fq_t c) const {
  KMat out(*field_, rows_, cols_);
  for (std::size_t i = 0; i < a_.size(); ++i) out.a_[i] = field_->mul(a_[i], c);
  return out;
}

KMat KMat::transpose() const {
  KMat out(*field_, cols_, rows_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < cols_; ++j) out.at(j, i) = (*this)(i, j);
  return out;
}

KMat KMat::pow(std::uint64_t e) const {
  require(rows_ == cols_, "DomainError", "pow of non-square matrix");
  KMat acc = identity(*field_, rows_), base = *this;
  while (e) {
    if (e & 1) acc = acc * base;
    base = base * base;
    e >>= 1;
  }
  return acc;
}

void KMat::add_block(std::size_t i0, std::size_t j0, const KMat& b, fq_t scale) {
  require(i0 + b.rows_ <= rows_ && j0 + b.cols_ <= cols_, "DomainError",
          "block out of range");
  for (std::size_t i = 0; i < b.rows_; ++i)
    for (std::size_t j = 0; j < b.cols_; ++j)
      at(i0 + i, j0 + j) = field_->add((*this)(i0 + i, j0 + j),
                                       field_->mul(b(i, j), scale));
}

KMat KMat::block(std::size_t i0, std::size_t j0, std::size_t r, std::size_t c) const {
  require(i0 + r <= rows_ && j0 + c <= cols_, "DomainError", "block out of range");
  KMat out(*field_, r, c);
  for (std::size_t i = 0; i < r; ++i)
    for (std::size_t j = 0; j < c; ++j) out.at(i, j) = (*this)(i0 + i, j0 + j);
  return out;
}

KMat KMat::hstack(const KMat& a, const KMat& b) {
  if (a.cols_ == 0 && a.rows_ == 0) return b;
  if (b.cols_ == 0 && b.rows_ == 0) return a;
  require(a.rows_ == b.rows_, "DomainError", "hstack row mismatch");
  KMat out(a.field(), a.rows_, a.cols_ + b.cols_);
  out.add_block(0, 0, a, a.field().from_int(1));
  out.add_block(0, a.cols_, b, a.field().from_int(1));
  return out;
}

KMat KMat::vstack(const KMat& a, const KMat& b) {
  if (a.cols_ == 0 && a.rows_ == 0) return b;
  if (b.cols_ == 0 && b.rows_ == 0) return a;
  require(a.cols_ == b.cols_, "DomainError", "vstack col mismatch");
  KMat out(a.field(), a.rows_ + b.rows_, a.cols_);
  out.add_block(0, 0, a, a.field().from_int(1));
  out.add_block(a.rows_, 0, b, a.field().from_int(1));
  return out;
}

namespace {

// in-place row echelon; returns pivot column per pivot row
std::vector<std::size_t> echelonize(const Fq& k, std::vector<fq_t>& a,
                                    std::size_t rows, std::size_t cols) {
  std::vector<std::size_t> pivots;
  std::size_t r = 0;
  for (std::size_t c = 0; c < cols && r < rows; ++c) {
    std::size_t sel = r;
    while (sel < rows && a[sel * cols + c] == 0) ++sel;
    if (sel == rows) continue;
    for (std::size_t j = 0; j < cols; ++j)
      std::swap(a[r * cols + j], a[sel * cols + j]);
    fq_t iv = k.inv(a[r * cols + c]);
    for (std::size_t j = c; j < cols; ++j)
      a[r * cols + j] = k.mul(a[r * cols + j], iv);
    for (std::size_t i = 0; i < rows; ++i) {
      if (i == r) continue;
      fq_t f = a[i * cols + c];
      if (!f) continue;
      for (std::size_t j = c; j < cols; ++j)
        a[i * cols + j] = k.sub(a[i * cols + j], k.mul(f, a[r * cols + j]));
    }
    pivots.push_back(c);
    ++r;
  }
  return pivots;
}

}  // namespace

std::size_t KMat::rank() const {
  std::vector<fq_t> w = a_;
  return echelonize(*field_, w, rows_, cols_).size();
}

KMat KMat::kernel() const {
  const Fq& k = *field_;
  std::vector<fq_t> w = a_;
  auto pivots = echelonize(k, w, rows_, cols_);
  std::vector<bool> is_pivot(cols_, false);
  for (auto c : pivots) is_pivot[c] = true;
  std::size_t nk = cols_ - pivots.size();
  KMat out(k, cols_, nk);
  std::size_t jout = 0;
  for (std::size_t cfree = 0; cfree < cols_; ++cfree) {
    if (is_pivot[cfree]) continue;
    out.at(cfree, jout) = k.from_int(1);
    for (std::size_t r = 0; r < pivots.size(); ++r)
      out.at(pivots[r], jout) = k.neg(w[r * cols_ + cfree]);
    ++jout;
  }
  return out;
}

KMat KMat::column_space() const {
  // echelonize the transpose; nonzero rows back as columns
  KMat t = transpose();
  std::vector<fq_t> w(t.a_);
  auto pivots = echelonize(*field_, w, t.rows_, t.cols_);
  KMat out(*field_, rows_, pivots.size());
  for (std::size_t r = 0; r < pivots.size(); ++r)
    for (std::size_t i = 0; i < rows_; ++i) out.at(i, r) = w[r * t.cols_ + i];
  return out;
}

KMat KMat::solve(const KMat& b, bool& ok) const {
  require(b.rows_ == rows_, "DomainError", "solve shape mismatch");
  const Fq& k = *field_;
  std::size_t cols = cols_ + b.cols_;
  std::vector<fq_t> w(rows_ * cols, 0);
  for (std::size_t i = 0; i < rows_; ++i) {
    for (std::size_t j = 0; j < cols_; ++j) w[i * cols + j] = (*this)(i, j);
    for (std::size_t j = 0; j < b.cols_; ++j) w[i * cols + cols_ + j] = b(i, j);
  }
  auto pivots = echelonize(k, w, rows_, cols);
  ok = true;
  for (auto c : pivots)
    if (c >= cols_) ok = false;  // pivot in the rhs: inconsistent
  KMat x(k, cols_, b.cols_);
  if (!ok) return x;
  for (std::size_t r = 0; r < pivots.size(); ++r)
    for (std::size_t j = 0; j < b.cols_; ++j)
      x.at(pivots[r], j) = w[r * cols + cols_ + j];
  return x;
}

KMat KMat::intersect(const KMat& a, const KMat& b) {
  require(a.rows_ == b.rows_, "DomainError", "intersect shape mismatch");
  const Fq& k = a.field();
  // kernel of [A | -B]: pairs (x, y) with Ax = By
  KMat ab = hstack(a, b.scaled(k.neg(k.from_int(1))));
  KMat ker = ab.kernel();
  KMat xs = ker.block(0, 0, a.cols_, ker.cols());
  return (a * xs).column_space();
}

bool KMat::span_contains(const KMat& a, const KMat& v) {
  bool ok = false;
  a.solve(v, ok);
  return ok;
}

}  // namespace sl2hecke
