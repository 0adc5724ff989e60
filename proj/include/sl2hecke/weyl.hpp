// weyl.hpp -- the extended affine Weyl group of SL_2 in exact normal form.
//
// W~ = N(T)/T^1 is realized by monomial matrices whose entries are symbols
// [z] pi^n with z in F_q^x and n in Z.  A determinant-1 class is determined
// by its shape and one entry:
//   Diagonal:     diag([z] pi^n, [z]^-1 pi^-n)          stored as (z, n)
//   Antidiagonal: (0, [z] pi^n; -[z]^-1 pi^-n, 0)       stored as (z, n)
// Fixed lifts:  s0 = (0 1; -1 0),  s1 = (0 -pi^-1; pi 0),  theta = s0 s1,
// omega_z = diag([z]^-1, [z]).

#ifndef SL2HECKE_WEYL_HPP
#define SL2HECKE_WEYL_HPP

#include <cstdint>
#include <string>
#include <vector>

#include "sl2hecke/fq.hpp"

namespace sl2hecke {

// one entry of a monomial matrix: zero or [z] pi^n
struct MEntry {
  bool nonzero = false;
  fq_t z = 0;    // unit part, F_q^x code
  std::int32_t n = 0;  // valuation
};

// general invertible monomial 2x2 matrix (not necessarily det 1); used for
// the normalizer element N = (0 1; pi 0) and conjugation identities
struct MonomialMat {
  bool anti = false;
  MEntry e1;  // (0,0) if diagonal, (0,1) if antidiagonal
  MEntry e2;  // (1,1) if diagonal, (1,0) if antidiagonal
};

struct WeylElt {
  bool anti = false;
  fq_t z = 1;        // unit code of the stored entry
  std::int32_t n = 0;

  bool operator==(const WeylElt& o) const {
    return anti == o.anti && z == o.z && n == o.n;
  }
  bool operator<(const WeylElt& o) const {
    if (anti != o.anti) return anti < o.anti;
    if (n != o.n) return n < o.n;
    return z < o.z;
  }
};

enum class Letter : std::uint8_t { S0 = 0, S1 = 1 };

// reduced word times the right Omega part: w = letters[0] ... letters[k-1] * omega
struct WeylWord {
  std::vector<Letter> letters;
  fq_t omega_z = 1;
};

// x = [z] pi^n in the upper (u_plus) or lower (u_minus) unipotent position
struct Elementary {
  bool lower = false;
  fq_t z = 1;
  std::int32_t n = 0;
};

class WeylGroup {
 public:
  explicit WeylGroup(const Fq& residue_field);

  const Fq& fq() const { return *fq_; }

  WeylElt one() const { return WeylElt{false, one_z_, 0}; }
  WeylElt s0() const { return WeylElt{true, one_z_, 0}; }
  WeylElt s1() const { return WeylElt{true, neg_one_z_, -1}; }
  WeylElt theta() const { return WeylElt{false, one_z_, 1}; }
  // omega_z = diag([z]^-1, [z])
  WeylElt omega(fq_t z) const;
  bool in_omega(const WeylElt& w) const { return !w.anti && w.n == 0; }
  // inverse of omega(): the z with w == omega(z); requires in_omega(w)
  fq_t omega_param(const WeylElt& w) const;

  WeylElt mul(const WeylElt& x, const WeylElt& y) const;
  WeylElt inverse(const WeylElt& x) const;
  WeylElt letter(Letter l) const { return l == Letter::S0 ? s0() : s1(); }

  std::uint32_t length(const WeylElt& w) const;
  // sigma(w) = 1 iff wC lies in the dominant chamber
  std::uint32_t sigma(const WeylElt& w) const;
  std::uint32_t grade(const WeylElt& w) const { return length(w) + sigma(w); }

  WeylWord reduced_word(const WeylElt& w) const;
  WeylElt from_word(const WeylWord& word) const;

  // the distinguished elements
  static std::uint32_t epsilon(std::uint32_t n) { return n & 1; }
  WeylElt w_n(std::uint32_t n) const;   // n >= 1
  WeylElt v_m(std::uint32_t m) const;   // m >= 2

  // monomial-matrix interface
  MonomialMat to_monomial(const WeylElt& w) const;
  MonomialMat mm_mul(const MonomialMat& x, const MonomialMat& y) const;
  MonomialMat mm_inv(const MonomialMat& x) const;
  bool mm_equal_mod_T1(const MonomialMat& x, const MonomialMat& y) const;
  MonomialMat normalizer_N() const;  // (0 1; pi 0)

  // closed-form conjugation v e v^-1 of an elementary unipotent by a
  // monomial class; throws NonIntegralResult if the result valuation < 0
  Elementary monomial_conjugate(const WeylElt& v, const Elementary& e) const;
  // same, without the integrality requirement (for identity checking)
  Elementary monomial_conjugate_any(const WeylElt& v, const Elementary& e) const;

  std::string to_string(const WeylElt& w) const;

 private:
  const Fq* fq_;
  fq_t one_z_, neg_one_z_;
};

}  // namespace sl2hecke

#endif
