// localring.hpp -- exact arithmetic in O/M^L for the two supported local
// fields: the unramified extension of Q_p with residue field F_q (modeled by
// the Galois ring Z[x]/(p^L, F(x))) and F_q((t)) (modeled by F_q[t]/(t^L)).
//
// The residue field F_q and the Galois-ring lift share one defining
// polynomial, so reduction mod M is coefficient-wise.

#ifndef SL2HECKE_LOCALRING_HPP
#define SL2HECKE_LOCALRING_HPP

#include <array>
#include <cstdint>
#include <string>
#include <vector>

#include "sl2hecke/fq.hpp"

namespace sl2hecke {

enum class CharCase { CharZeroUnramified, EqualChar };

struct FieldParams {
  std::uint32_t p = 3;
  std::uint32_t f = 1;
  CharCase char_case = CharCase::EqualChar;
  std::uint32_t kdeg = 0;  // 0: default to f
  std::uint32_t L = 4;

  std::uint32_t q() const {
    std::uint32_t r = 1;
    for (std::uint32_t i = 0; i < f; ++i) r *= p;
    return r;
  }
  bool is_Qp() const { return char_case == CharCase::CharZeroUnramified && f == 1; }
  void validate() const;
  std::string describe() const;
};

// An element of O/M^L.  Layout:
//   CharZeroUnramified: c has length f, c[i] in [0, p^L) = coefficient of x^i.
//   EqualChar:          c has length L, c[j] = F_q code of the t^j coefficient.
struct RElt {
  std::vector<std::uint32_t> c;
  bool operator==(const RElt& o) const { return c == o.c; }
  bool operator!=(const RElt& o) const { return c != o.c; }
};

class LocalRing {
 public:
  explicit LocalRing(const FieldParams& params);

  const FieldParams& params() const { return params_; }
  const Fq& residue_field() const { return fq_; }
  std::uint32_t level() const { return params_.L; }

  RElt zero() const;
  RElt one() const { return from_int(1); }
  RElt from_int(long long n) const;
  RElt pi() const;                      // the uniformizer: p resp. t
  RElt pi_pow(std::uint32_t n) const;   // pi^n (zero when n >= L)

  RElt add(const RElt& a, const RElt& b) const;
  RElt sub(const RElt& a, const RElt& b) const;
  RElt neg(const RElt& a) const;
  RElt mul(const RElt& a, const RElt& b) const;
  RElt inv(const RElt& a) const;  // requires valuation 0
  bool is_zero(const RElt& a) const;

  // valuation in {0,...,L}, v(0) = L
  std::uint32_t valuation(const RElt& a) const;

  // canonical surjection onto O/M^{level}; requires 1 <= level <= L
  RElt reduce_level(const RElt& a, std::uint32_t level) const;
  // an element of the ring at level L' >= our L restricted down equals...
  // (not needed; reduction only goes downward)

  // reduction mod M (the leading residue of a unit-or-anything): the class of
  // a in O/M as an F_q code
  fq_t residue(const RElt& a) const;

  // Teichmueller representative [z], the unique lift with [z]^q = [z]
  RElt teichmuller(fq_t z) const;

  // digits z_a..z_{b-1} with a = sum [z_j] pi^j mod M^b; requires v(a) >= a
  std::vector<fq_t> digit_decompose(const RElt& u, std::uint32_t a,
                                    std::uint32_t b) const;

  // [z] pi^n
  RElt monomial(fq_t z, std::uint32_t n) const;
  // multiply by pi^n
  RElt shift(const RElt& a, std::uint32_t n) const;

  std::uint64_t encode(const RElt& a) const;  // injective key (small L only)
  std::string to_string(const RElt& a) const;

 private:
  FieldParams params_;
  Fq fq_;
  std::uint64_t pL_ = 1;  // p^L for the char-zero case
};

// 2x2 matrices over O/M^L with determinant handling for the subgroups used
// here (diagonal entries are units in every supported subgroup).
struct Mat2 {
  RElt a, b, c, d;
  bool operator==(const Mat2& o) const {
    return a == o.a && b == o.b && c == o.c && d == o.d;
  }
};

Mat2 mat2_identity(const LocalRing& R);
Mat2 mat2_mul(const LocalRing& R, const Mat2& x, const Mat2& y);
// inverse of a determinant-1 matrix
Mat2 mat2_inv_det1(const LocalRing& R, const Mat2& x);
RElt mat2_det(const LocalRing& R, const Mat2& x);
Mat2 mat2_u_plus(const LocalRing& R, const RElt& y);   // (1 y; 0 1)
Mat2 mat2_u_minus(const LocalRing& R, const RElt& y);  // (1 0; y 1)
Mat2 mat2_diag(const LocalRing& R, const RElt& t);     // (t 0; 0 t^-1)
std::uint64_t mat2_key(const LocalRing& R, const Mat2& x);

}  // namespace sl2hecke

#endif
