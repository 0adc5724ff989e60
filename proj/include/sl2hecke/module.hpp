// module.hpp -- finite dimensional modules over H and over the parahoric
// subalgebras H_{x_0}, H_{x_1}, given by exact generator action matrices.
//
// Convention: a module stores one matrix per generator (tau_{s_0}, tau_{s_1}
// when present, and tau_{omega_g} for the fixed generator g of F_q^x) with
// M(ab) = M(a) M(b).  Right modules act on row vectors (x.h = x M(h)), left
// modules on column vectors.

#ifndef SL2HECKE_MODULE_HPP
#define SL2HECKE_MODULE_HPP

#include <map>
#include <string>
#include <vector>

#include "sl2hecke/algebra.hpp"
#include "sl2hecke/kmat.hpp"

namespace sl2hecke {

enum class Side { Left, Right };

class FinModule {
 public:
  // tag Hx0/Hx1 modules have no action for the missing generator
  FinModule(const HeckeAlgebra& A, Side side, AlgebraTag tag, KMat act_s0,
            KMat act_s1, KMat act_omega_gen);

  const HeckeAlgebra& algebra() const { return *A_; }
  Side side() const { return side_; }
  AlgebraTag tag() const { return tag_; }
  std::size_t dim() const { return dim_; }

  const KMat& act_s(Letter l) const;
  const KMat& act_omega_gen() const { return a_omega_; }
  KMat act_omega(fq_t z) const;  // action of tau_{omega_z}
  KMat act_e1() const;
  KMat act_e_lambda(std::uint32_t j) const;
  // action of an arbitrary element, composed through reduced words
  KMat act(const HeckeElt& h) const;
  KMat act_zeta() const;

  // eigenspace of a character (joint eigenspace of the generators), as a
  // column-span basis
  KMat eigenspace(const Character& chi) const;

  // submodule spanned by the given columns (must be stable; checked),
  // with the induced action
  FinModule submodule(const KMat& basis) const;

  bool isomorphic_to(const FinModule& other) const;  // via invertible intertwiner

 private:
  void validate() const;

  const HeckeAlgebra* A_;
  Side side_;
  AlgebraTag tag_;
  std::size_t dim_;
  KMat a_s0_, a_s1_, a_omega_;
  bool has_s0_, has_s1_;
};

// 1-dimensional module attached to a character
FinModule character_module(const HeckeAlgebra& A, const Character& chi, Side side);
// restriction of a character of H to H_{x_eps} (chi^0-style module)
FinModule character_module_x(const HeckeAlgebra& A, const Character& chi, Side side,
                             AlgebraTag tag);

struct Classification {
  FinModule supersingular_part;
  FinModule nonsupersingular_part;
  bool is_zeta_torsion = false;      // zeta nilpotent on all of M
  bool is_zeta_torsionfree = false;  // zeta invertible on all of M
};

Classification classify(const FinModule& M);

// basis of intertwiners M -> N (same side and tag)
std::vector<KMat> hom_space(const FinModule& M, const FinModule& N);

// k-linear dual with the action twisted by iota; flips the side
FinModule dual_iota_twist(const FinModule& M);

// decomposition of an H_{x_0}-module into indecomposables:
//   counts of chi0_triv, chi0_sign, chi0_lambda (per j), e_lambda H_{x_0}
//   (per j)
struct Hx0Decomposition {
  std::size_t n_triv = 0, n_sign = 0;
  std::map<std::uint32_t, std::size_t> n_char;  // j != 0
  std::map<std::uint32_t, std::size_t> n_proj;  // j != 0: e_{psi^j} H_{x_0}
  std::size_t total_dim(std::uint32_t) const;
  bool operator==(const Hx0Decomposition& o) const {
    return n_triv == o.n_triv && n_sign == o.n_sign && n_char == o.n_char &&
           n_proj == o.n_proj;
  }
  std::string to_string() const;
};

Hx0Decomposition decompose_Hx0(const FinModule& M);

// the regular right H_{x_0}-module and its distinguished submodules, for
// reassembly tests: kind 0 = H_{x_0}, 1 = tau_{s_0} H_{x_0},
// 2 = (tau_{s_0} + e_1) H_{x_0}, 3 = e_lambda H_{x_0}
FinModule hx0_standard_module(const HeckeAlgebra& A, int kind, std::uint32_t j = 0);

// direct sum
FinModule direct_sum(const FinModule& a, const FinModule& b);

}  // namespace sl2hecke

#endif
