// kmat.hpp -- dense exact linear algebra over a small finite field.
//
// Column convention: a matrix A (r x c) maps column vectors, (Av)_i =
// sum_j A(i,j) v_j.  Subspaces are handled as column-span of basis matrices.

#ifndef SL2HECKE_KMAT_HPP
#define SL2HECKE_KMAT_HPP

#include <cstdint>
#include <vector>

#include "sl2hecke/fq.hpp"

namespace sl2hecke {

class KMat {
 public:
  KMat() : field_(nullptr), rows_(0), cols_(0) {}
  KMat(const Fq& k, std::size_t rows, std::size_t cols)
      : field_(&k), rows_(rows), cols_(cols), a_(rows * cols, 0) {}

  static KMat identity(const Fq& k, std::size_t n);

  const Fq& field() const { return *field_; }
  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }

  fq_t operator()(std::size_t i, std::size_t j) const { return a_[i * cols_ + j]; }
  fq_t& at(std::size_t i, std::size_t j) { return a_[i * cols_ + j]; }

  bool operator==(const KMat& o) const {
    return rows_ == o.rows_ && cols_ == o.cols_ && a_ == o.a_;
  }
  bool is_zero() const;

  KMat operator+(const KMat& o) const;
  KMat operator-(const KMat& o) const;
  KMat operator*(const KMat& o) const;
  KMat scaled(fq_t c) const;
  KMat transpose() const;
  KMat pow(std::uint64_t e) const;

  // elementary block handling
  void add_block(std::size_t i0, std::size_t j0, const KMat& b, fq_t scale);
  KMat block(std::size_t i0, std::size_t j0, std::size_t r, std::size_t c) const;
  static KMat hstack(const KMat& a, const KMat& b);
  static KMat vstack(const KMat& a, const KMat& b);
  KMat col(std::size_t j) const { return block(0, j, rows_, 1); }

  std::size_t rank() const;
  // basis of { v : Av = 0 } as columns
  KMat kernel() const;
  // column space basis (subset of original columns, echelon-reduced)
  KMat column_space() const;
  // solve A x = b; sets ok=false if inconsistent
  KMat solve(const KMat& b, bool& ok) const;
  // intersection of column spans
  static KMat intersect(const KMat& a, const KMat& b);
  // does span(a) contain v (a column vector)?
  static bool span_contains(const KMat& a, const KMat& v);

 private:
  const Fq* field_;
  std::size_t rows_, cols_;
  std::vector<fq_t> a_;
};

}  // namespace sl2hecke

#endif
