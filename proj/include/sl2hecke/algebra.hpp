// algebra.hpp -- the pro-p Iwahori-Hecke algebra H of SL_2 over k, with the
// distinguished elements, the involution, characters, and the identity
// verification suite.
//
// Basis tau_w indexed by canonical WeylElt; products are computed by
// applying the generator letters of a reduced word on the right:
//   tau_w tau_omega = tau_{w omega}
//   tau_w tau_s     = tau_{ws}                    if l(ws) = l(w) + 1
//   tau_w tau_s     = sum_{o in Omega} tau_{w o}  if l(ws) = l(w) - 1
// (the second line is the quadratic relation combined with Omega commutation).

#ifndef SL2HECKE_ALGEBRA_HPP
#define SL2HECKE_ALGEBRA_HPP

#include <map>
#include <string>
#include <vector>

#include "sl2hecke/fq.hpp"
#include "sl2hecke/kmat.hpp"
#include "sl2hecke/weyl.hpp"

namespace sl2hecke {

enum class AlgebraTag { H, Hx0, Hx1 };

struct HeckeElt {
  std::map<WeylElt, fq_t> terms;  // coefficient codes in k; zeros never stored
  bool operator==(const HeckeElt& o) const { return terms == o.terms; }
  bool is_zero() const { return terms.empty(); }
};

struct Character {
  std::uint32_t lambda_j = 0;  // lambda = psi^j with psi the fixed embedding
  int c0 = 0, c1 = 0;          // values at tau_{s_0}, tau_{s_1}: 0 or -1
  bool supersingular = false;
  std::string name;            // "triv", "sign", "chi0", "chi1", "chi[j]"
};

struct IdentityCheck {
  std::string name;
  bool pass = false;
};

struct IdentityReport {
  std::vector<IdentityCheck> checks;
  bool all_pass() const {
    for (auto& c : checks)
      if (!c.pass) return false;
    return true;
  }
  std::string first_failure() const {
    for (auto& c : checks)
      if (!c.pass) return c.name;
    return "";
  }
};

class HeckeAlgebra {
 public:
  // residue: F_q; k: coefficient field F_{p^d} with f | d
  HeckeAlgebra(const Fq& residue, const Fq& k);

  const Fq& k() const { return *k_; }
  const Fq& fq() const { return *fqres_; }
  const WeylGroup& weyl() const { return W_; }
  const FqEmbedding& embedding() const { return embed_; }
  std::uint32_t q() const { return fqres_->q(); }

  // the Omega elements in generator-power order: omega(gen^0), omega(gen^1), ...
  const std::vector<WeylElt>& omega_list() const { return omegas_; }
  // psi(z)^j evaluated in k
  fq_t lambda_value(std::uint32_t j, fq_t z) const;

  HeckeElt zero() const { return HeckeElt{}; }
  HeckeElt tau(const WeylElt& w) const;
  HeckeElt one() const { return tau(W_.one()); }
  HeckeElt add(const HeckeElt& a, const HeckeElt& b) const;
  HeckeElt sub(const HeckeElt& a, const HeckeElt& b) const;
  HeckeElt scale(const HeckeElt& a, fq_t c) const;
  HeckeElt mul(const HeckeElt& a, const HeckeElt& b) const;

  // the smallest of H_{x_0}, H_{x_1}, H containing the support
  AlgebraTag tag_of(const HeckeElt& a) const;

  HeckeElt e1() const;
  HeckeElt e_lambda(std::uint32_t j) const;
  HeckeElt e_gamma(std::uint32_t j) const;  // e_lambda + e_{lambda^-1} (or e_lambda)
  HeckeElt zeta() const;
  HeckeElt iota(const HeckeElt& a) const;
  // Bernstein-type commutative family
  HeckeElt E(long long i, fq_t omega_z) const;
  HeckeElt X_lambda(std::uint32_t j) const;

  std::vector<Character> characters() const;
  fq_t character_value(const Character& chi, const WeylElt& w) const;

  // exact verification of the defining identities; i_max bounds the zeta
  // exponents and word lengths used
  IdentityReport identity_suite(std::uint32_t i_max) const;

  std::string to_string(const HeckeElt& a) const;

 private:
  HeckeElt rmul_letter(const HeckeElt& a, Letter s) const;
  HeckeElt rmul_omega(const HeckeElt& a, fq_t omega_z) const;

  const Fq* fqres_;
  const Fq* k_;
  FqEmbedding embed_;
  WeylGroup W_;
  std::vector<WeylElt> omegas_;
};

// dense coordinates on a finite set of basis elements, for linear algebra
// over spans of tau_w
class TauVectorizer {
 public:
  explicit TauVectorizer(const HeckeAlgebra& A) : A_(&A) {}
  std::size_t index_of(const WeylElt& w);  // registers if new
  KMat to_column(const HeckeElt& a);       // column vector (grows the index)
  std::size_t size() const { return order_.size(); }
  void freeze() { frozen_ = true; }

 private:
  const HeckeAlgebra* A_;
  std::map<WeylElt, std::size_t> index_;
  std::vector<WeylElt> order_;
  bool frozen_ = false;
};

}  // namespace sl2hecke

#endif
