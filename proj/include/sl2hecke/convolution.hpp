// convolution.hpp -- independent product oracle for H_{x_0}: the double
// coset algebra of SL_2(F_q) with respect to the upper unipotent subgroup.
// tau_w corresponds to the characteristic function of U w U; products are
// computed by group-theoretic convolution, not by the presentation.

#ifndef SL2HECKE_CONVOLUTION_HPP
#define SL2HECKE_CONVOLUTION_HPP

#include <cstdint>
#include <vector>

#include "sl2hecke/algebra.hpp"

namespace sl2hecke {

class ConvolutionOracle {
 public:
  explicit ConvolutionOracle(const HeckeAlgebra& A);  // q <= 7

  // product of two H_{x_0}-tagged elements computed by convolution
  HeckeElt multiply(const HeckeElt& a, const HeckeElt& b) const;

  // raw convolution value of tau_v * tau_w at the group element representing
  // the class u (all in W~, H_{x_0} support); used for the coefficient probes
  fq_t value_at(const WeylElt& v, const WeylElt& w, const WeylElt& u) const;

  std::size_t group_order() const { return elems_.size(); }

 private:
  struct G {
    fq_t a, b, c, d;
    bool operator==(const G& o) const {
      return a == o.a && b == o.b && c == o.c && d == o.d;
    }
  };
  std::uint32_t key(const G& g) const;
  G gmul(const G& x, const G& y) const;
  G ginv(const G& x) const;
  G image(const WeylElt& w) const;  // reduction of the monomial lift mod M

  // function on G as coefficient vector indexed by element id
  std::vector<fq_t> to_function(const HeckeElt& x) const;
  HeckeElt from_function(const std::vector<fq_t>& f) const;
  std::vector<fq_t> convolve(const std::vector<fq_t>& f,
                             const std::vector<fq_t>& g) const;

  const HeckeAlgebra* A_;
  const Fq* fqres_;
  std::vector<G> elems_;
  std::vector<std::uint32_t> id_;          // key -> element id + 1
  std::vector<std::size_t> coset_reps_;    // ids of G/U coset representatives
  std::vector<std::size_t> inv_id_;        // id -> id of inverse
  bool flip_;                              // order convention (End^op)
};

}  // namespace sl2hecke

#endif
