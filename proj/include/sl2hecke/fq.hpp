// fq.hpp -- table-based arithmetic in F_{p^d} and the fixed subfield
// embedding F_{p^f} -> F_{p^d} (f | d).
//
// Elements are codes in [0, q): the base-p digits of a code are the
// coefficients of the residue polynomial in the generator x.  The modulus is
// the lexicographically smallest monic primitive polynomial of degree d over
// F_p, where polynomials are ordered by their integer encoding
// sum(c_i p^i) + p^d.  For d = 1 the generator is the smallest primitive
// root mod p.

#ifndef SL2HECKE_FQ_HPP
#define SL2HECKE_FQ_HPP

#include <cstdint>
#include <vector>

#include "sl2hecke/common.hpp"

namespace sl2hecke {

using fq_t = std::uint16_t;  // element code

class Fq {
 public:
  Fq(std::uint32_t p, std::uint32_t d);

  std::uint32_t p() const { return p_; }
  std::uint32_t deg() const { return d_; }
  std::uint32_t q() const { return q_; }

  // multiplicative generator (primitive element)
  fq_t gen() const { return gen_; }
  // coefficients of the modulus polynomial, degree d, monic (index i = coeff
  // of x^i; modulus_[d] == 1).  For d == 1 this is x - gen.
  const std::vector<std::uint32_t>& modulus() const { return modulus_; }

  fq_t add(fq_t a, fq_t b) const {
    if (add_table_.empty()) return add_slow(a, b);
    return add_table_[std::size_t(a) * q_ + b];
  }
  fq_t neg(fq_t a) const { return neg_table_[a]; }
  fq_t sub(fq_t a, fq_t b) const { return add(a, neg(b)); }
  fq_t mul(fq_t a, fq_t b) const {
    if (a == 0 || b == 0) return 0;
    std::uint32_t s = std::uint32_t(log_[a]) + log_[b];
    if (s >= q_ - 1) s -= q_ - 1;
    return exp_[s];
  }
  fq_t inv(fq_t a) const {
    require(a != 0, "NonUnitInverse", "zero has no inverse in F_q");
    std::uint32_t l = log_[a];
    return exp_[l == 0 ? 0 : q_ - 1 - l];
  }
  fq_t pow(fq_t a, long long e) const;
  fq_t frobenius(fq_t a) const { return pow(a, p_); }  // a -> a^p

  // discrete log base gen(); a != 0
  std::uint32_t log(fq_t a) const {
    require(a != 0, "DomainError", "log of zero");
    return log_[a];
  }
  fq_t exp(std::uint32_t e) const { return exp_[e % (q_ - 1)]; }

  // code <-> coefficient vector over F_p (length d)
  std::vector<std::uint8_t> coords(fq_t a) const;
  fq_t from_coords(const std::vector<std::uint8_t>& c) const;
  // scalar from the prime field
  fq_t from_int(long long n) const;

  bool same_field(const Fq& other) const {
    return p_ == other.p_ && d_ == other.d_;
  }

 private:
  fq_t add_slow(fq_t a, fq_t b) const;
  fq_t mul_slow(fq_t a, fq_t b) const;  // polynomial mult mod modulus

  std::uint32_t p_, d_, q_;
  fq_t gen_;
  std::vector<std::uint32_t> modulus_;
  std::vector<fq_t> exp_, log_, neg_table_, add_table_;
};

// Fixed ring embedding F_{p^f} -> F_{p^d}, f | d: the generator image is the
// smallest (by code) root in the big field of the small field's modulus.
class FqEmbedding {
 public:
  FqEmbedding(const Fq& from, const Fq& into);
  fq_t operator()(fq_t a) const { return map_[a]; }
  const Fq& from() const { return *from_; }
  const Fq& into() const { return *into_; }

 private:
  const Fq* from_;
  const Fq* into_;
  std::vector<fq_t> map_;
};

}  // namespace sl2hecke

#endif
