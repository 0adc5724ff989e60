#include "sl2hecke/convolution.hpp"

namespace sl2hecke {

ConvolutionOracle::ConvolutionOracle(const HeckeAlgebra& A)
    : A_(&A), fqres_(&A.fq()) {
  std::uint32_t q = fqres_->q();
  require(q <= 7, "EnumerationTooLarge", "convolution oracle needs q <= 7");
  id_.assign(q * q * q * q, 0);
  for (std::uint32_t a = 0; a < q; ++a)
    for (std::uint32_t b = 0; b < q; ++b)
      for (std::uint32_t c = 0; c < q; ++c)
        for (std::uint32_t d = 0; d < q; ++d) {
          fq_t det = fqres_->sub(fqres_->mul(fq_t(a), fq_t(d)),
                                 fqres_->mul(fq_t(b), fq_t(c)));
          if (det != fqres_->from_int(1)) continue;
          G g{fq_t(a), fq_t(b), fq_t(c), fq_t(d)};
          id_[key(g)] = std::uint32_t(elems_.size()) + 1;
          elems_.push_back(g);
        }
  inv_id_.resize(elems_.size());
  for (std::size_t i = 0; i < elems_.size(); ++i)
    inv_id_[i] = id_[key(ginv(elems_[i]))] - 1;

  // G/U coset representatives: greedy scan
  std::vector<bool> seen(elems_.size(), false);
  for (std::size_t i = 0; i < elems_.size(); ++i) {
    if (seen[i]) continue;
    coset_reps_.push_back(i);
    for (std::uint32_t y = 0; y < q; ++y) {
      G u{fqres_->from_int(1), fq_t(y), 0, fqres_->from_int(1)};
      seen[id_[key(gmul(elems_[i], u))] - 1] = true;
    }
  }

  // fix the End^op order convention by the braid probe tau_{s0} tau_om =
  // tau_{s0 om} against the presentation
  flip_ = false;
  const WeylGroup& W = A.weyl();
  WeylElt om = A.omega_list().size() > 1 ? A.omega_list()[1] : A.omega_list()[0];
  HeckeElt want = A.mul(A.tau(W.s0()), A.tau(om));
  auto probe = [&](bool flip) {
    auto f = to_function(A.tau(W.s0()));
    auto g = to_function(A.tau(om));
    auto h = flip ? convolve(g, f) : convolve(f, g);
    return from_function(h) == want;
  };
  if (probe(false)) {
    flip_ = false;
  } else {
    require(probe(true), "IdentityFailure", "no order convention matches the braid probe");
    flip_ = true;
  }
}

std::uint32_t ConvolutionOracle::key(const G& g) const {
  std::uint32_t q = fqres_->q();
  return ((std::uint32_t(g.a) * q + g.b) * q + g.c) * q + g.d;
}

ConvolutionOracle::G ConvolutionOracle::gmul(const G& x, const G& y) const {
  const Fq& k = *fqres_;
  return G{k.add(k.mul(x.a, y.a), k.mul(x.b, y.c)),
           k.add(k.mul(x.a, y.b), k.mul(x.b, y.d)),
           k.add(k.mul(x.c, y.a), k.mul(x.d, y.c)),
           k.add(k.mul(x.c, y.b), k.mul(x.d, y.d))};
}

ConvolutionOracle::G ConvolutionOracle::ginv(const G& x) const {
  const Fq& k = *fqres_;
  return G{x.d, k.neg(x.b), k.neg(x.c), x.a};
}

ConvolutionOracle::G ConvolutionOracle::image(const WeylElt& w) const {
  const Fq& k = *fqres_;
  require(w.n == 0, "DomainError", "element does not lie in the x_0 parahoric");
  if (!w.anti) return G{w.z, 0, 0, k.inv(w.z)};        // diag([z], [z]^-1)
  return G{0, w.z, k.neg(k.inv(w.z)), 0};              // (0 [z]; -[z]^-1 0)
}

std::vector<fq_t> ConvolutionOracle::to_function(const HeckeElt& x) const {
  const Fq& k = *fqres_;
  std::uint32_t q = k.q();
  std::vector<fq_t> f(elems_.size(), 0);
  for (auto& [w, c] : x.terms) {
    G rep = image(w);
    // spread over U rep U
    for (std::uint32_t y1 = 0; y1 < q; ++y1)
      for (std::uint32_t y2 = 0; y2 < q; ++y2) {
        G u1{k.from_int(1), fq_t(y1), 0, k.from_int(1)};
        G u2{k.from_int(1), fq_t(y2), 0, k.from_int(1)};
        f[id_[key(gmul(gmul(u1, rep), u2))] - 1] = c;
      }
  }
  return f;
}

HeckeElt ConvolutionOracle::from_function(const std::vector<fq_t>& f) const {
  HeckeElt out;
  const WeylGroup& W = A_->weyl();
  std::vector<fq_t> residual = f;
  for (const WeylElt& om : A_->omega_list()) {
    for (const WeylElt& w : {om, W.mul(W.s0(), om)}) {
      fq_t c = f[id_[key(image(w))] - 1];
      if (c) out.terms[w] = c;
    }
  }
  // consistency: the function must be constant on each double coset and
  // supported on the listed cosets; verified by re-expansion
  require(to_function(out) == f, "IdentityFailure",
          "convolution result is not U-bi-invariant");
  return out;
}

std::vector<fq_t> ConvolutionOracle::convolve(const std::vector<fq_t>& f,
                                              const std::vector<fq_t>& g) const {
  const Fq& k = *fqres_;
  std::vector<fq_t> h(elems_.size(), 0);
  for (std::size_t xi = 0; xi < elems_.size(); ++xi) {
    fq_t acc = 0;
    for (std::size_t r : coset_reps_) {
      fq_t fy = f[r];
      if (!fy) continue;
      G yx = gmul(elems_[inv_id_[r]], elems_[xi]);
      fq_t gv = g[id_[key(yx)] - 1];
      if (gv) acc = k.add(acc, k.mul(fy, gv));
    }
    h[xi] = acc;
  }
  return h;
}

HeckeElt ConvolutionOracle::multiply(const HeckeElt& a, const HeckeElt& b) const {
  require(a.is_zero() || A_->tag_of(a) == AlgebraTag::Hx0, "DomainError",
          "oracle input must lie in H_{x_0}");
  require(b.is_zero() || A_->tag_of(b) == AlgebraTag::Hx0, "DomainError",
          "oracle input must lie in H_{x_0}");
  auto f = to_function(a);
  auto g = to_function(b);
  auto h = flip_ ? convolve(g, f) : convolve(f, g);
  return from_function(h);
}

fq_t ConvolutionOracle::value_at(const WeylElt& v, const WeylElt& w,
                                 const WeylElt& u) const {
  auto f = to_function(A_->tau(v));
  auto g = to_function(A_->tau(w));
  auto h = flip_ ? convolve(g, f) : convolve(f, g);
  return h[id_[key(image(u))] - 1];
}

}  // namespace sl2hecke
