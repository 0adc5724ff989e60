#include "sl2hecke/module.hpp"

#include <sstream>

namespace sl2hecke {

namespace {

// operator acting on stored column vectors: for right modules the transpose
// (so composition matches x.(h1 h2) = (x.h1).h2)
KMat acting(Side side, const KMat& A) {
  return side == Side::Right ? A.transpose() : A;
}

}  // namespace

FinModule::FinModule(const HeckeAlgebra& A, Side side, AlgebraTag tag,
                     KMat act_s0, KMat act_s1, KMat act_omega_gen)
    : A_(&A),
      side_(side),
      tag_(tag),
      dim_(act_omega_gen.rows()),
      a_s0_(std::move(act_s0)),
      a_s1_(std::move(act_s1)),
      a_omega_(std::move(act_omega_gen)) {
  has_s0_ = tag != AlgebraTag::Hx1;
  has_s1_ = tag != AlgebraTag::Hx0;
  validate();
}

void FinModule::validate() const {
  const Fq& k = A_->k();
  require(a_omega_.rows() == dim_ && a_omega_.cols() == dim_, "DomainError",
          "omega action shape");
  std::uint32_t q = A_->q();
  KMat I = KMat::identity(k, dim_);
  require(a_omega_.pow(q - 1) == I, "DomainError",
          "omega generator must have order dividing q-1");
  KMat e1 = act_e1();
  KMat om_inv = a_omega_.pow(q >= 2 ? q - 2 : 0);
  for (int s = 0; s <= 1; ++s) {
    if ((s == 0 && !has_s0_) || (s == 1 && !has_s1_)) continue;
    const KMat& As = s == 0 ? a_s0_ : a_s1_;
    require(As.rows() == dim_ && As.cols() == dim_, "DomainError", "s action shape");
    // quadratic relation tau_s^2 = -e_1 tau_s
    require(As * As == (e1 * As).scaled(k.neg(k.from_int(1))), "DomainError",
            "quadratic relation fails");
    // tau_s tau_omega = tau_{omega^-1} tau_s
    require(As * a_omega_ == om_inv * As, "DomainError",
            "omega conjugation relation fails");
  }
}

const KMat& FinModule::act_s(Letter l) const {
  if (l == Letter::S0) {
    require(has_s0_, "DomainError", "no tau_{s_0} action in this algebra");
    return a_s0_;
  }
  require(has_s1_, "DomainError", "no tau_{s_1} action in this algebra");
  return a_s1_;
}

KMat FinModule::act_omega(fq_t z) const {
  const Fq& fq = A_->fq();
  return a_omega_.pow(fq.log(z));
}

KMat FinModule::act_e1() const {
  const Fq& k = A_->k();
  KMat acc(k, dim_, dim_);
  KMat pw = KMat::identity(k, dim_);
  for (std::uint32_t j = 0; j + 1 < A_->q(); ++j) {
    acc = acc + pw;
    pw = pw * a_omega_;
  }
  return acc.scaled(k.neg(k.from_int(1)));
}

KMat FinModule::act_e_lambda(std::uint32_t j) const {
  const Fq& k = A_->k();
  const Fq& fq = A_->fq();
  KMat acc(k, dim_, dim_);
  KMat pw = KMat::identity(k, dim_);
  // e_lambda = -sum_z lambda(z^-1) tau_{omega_z}; omega powers follow gen^e
  for (std::uint32_t e = 0; e + 1 < A_->q(); ++e) {
    fq_t z = fq.exp(e);
    acc = acc + pw.scaled(A_->lambda_value(j, fq.inv(z)));
    pw = pw * a_omega_;
  }
  return acc.scaled(k.neg(k.from_int(1)));
}

KMat FinModule::act(const HeckeElt& h) const {
  const Fq& k = A_->k();
  const WeylGroup& W = A_->weyl();
  KMat acc(k, dim_, dim_);
  for (auto& [w, c] : h.terms) {
    WeylWord word = W.reduced_word(w);
    KMat m = KMat::identity(k, dim_);
    for (Letter l : word.letters) m = m * act_s(l);
    m = m * act_omega(word.omega_z);
    acc = acc + m.scaled(c);
  }
  return acc;
}

KMat FinModule::act_zeta() const {
  require(tag_ == AlgebraTag::H, "DomainError", "zeta needs the full algebra");
  return act(A_->zeta());
}

KMat FinModule::eigenspace(const Character& chi) const {
  const Fq& k = A_->k();
  KMat I = KMat::identity(k, dim_);
  KMat space = I;  // start with everything
  auto cut = [&](const KMat& A_raw, fq_t c) {
    KMat op = acting(side_, A_raw) - I.scaled(c);
    space = KMat::intersect(space, op.kernel());
  };
  if (has_s0_) cut(a_s0_, k.from_int(chi.c0));
  if (has_s1_) cut(a_s1_, k.from_int(chi.c1));
  cut(a_omega_, A_->lambda_value(chi.lambda_j, A_->fq().gen()));
  return space;
}

FinModule FinModule::submodule(const KMat& basis) const {
  const Fq& k = A_->k();
  std::size_t m = basis.cols();
  auto induced = [&](const KMat& A_raw) {
    KMat op = acting(side_, A_raw);
    bool ok = false;
    KMat Y = basis.solve(op * basis, ok);
    require(ok, "DomainError", "subspace is not stable under the action");
    // Y acts on coordinates as columns; convert back to the raw convention
    return side_ == Side::Right ? Y.transpose() : Y;
  };
  KMat s0 = has_s0_ ? induced(a_s0_) : KMat(k, m, m);
  KMat s1 = has_s1_ ? induced(a_s1_) : KMat(k, m, m);
  KMat om = induced(a_omega_);
  return FinModule(*A_, side_, tag_, std::move(s0), std::move(s1), std::move(om));
}

bool FinModule::isomorphic_to(const FinModule& other) const {
  if (dim_ != other.dim_) return false;
  if (side_ != other.side_ || tag_ != other.tag_) return false;
  auto homs = hom_space(*this, other);
  if (homs.empty()) return dim_ == 0;
  const Fq& k = A_->k();
  // search for an invertible combination
  std::size_t t = homs.size();
  double combos = 1;
  for (std::size_t i = 0; i < t; ++i) combos *= k.q();
  if (combos <= 1e6) {
    std::vector<std::uint32_t> cf(t, 0);
    while (true) {
      KMat phi(k, dim_, dim_);
      for (std::size_t i = 0; i < t; ++i)
        if (cf[i]) phi = phi + homs[i].scaled(fq_t(cf[i]));
      if (phi.rank() == dim_) return true;
      std::size_t i = 0;
      while (i < t && ++cf[i] == k.q()) cf[i++] = 0;
      if (i == t) break;
    }
    return false;
  }
  SplitMix64 rng(12345);
  for (int trial = 0; trial < 4096; ++trial) {
    KMat phi(k, dim_, dim_);
    for (std::size_t i = 0; i < t; ++i)
      phi = phi + homs[i].scaled(fq_t(rng.below(k.q())));
    if (phi.rank() == dim_) return true;
  }
  return false;
}

FinModule character_module(const HeckeAlgebra& A, const Character& chi, Side side) {
  require(chi.c0 != -1 || chi.lambda_j == 0, "InvalidCharacter",
          "c_i = -1 requires trivial lambda");
  require(chi.c1 != -1 || chi.lambda_j == 0, "InvalidCharacter",
          "c_i = -1 requires trivial lambda");
  const Fq& k = A.k();
  KMat s0(k, 1, 1), s1(k, 1, 1), om(k, 1, 1);
  s0.at(0, 0) = k.from_int(chi.c0);
  s1.at(0, 0) = k.from_int(chi.c1);
  om.at(0, 0) = A.lambda_value(chi.lambda_j, A.fq().gen());
  return FinModule(A, side, AlgebraTag::H, std::move(s0), std::move(s1),
                   std::move(om));
}

FinModule character_module_x(const HeckeAlgebra& A, const Character& chi,
                             Side side, AlgebraTag tag) {
  const Fq& k = A.k();
  KMat s0(k, 1, 1), s1(k, 1, 1), om(k, 1, 1);
  s0.at(0, 0) = k.from_int(chi.c0);
  s1.at(0, 0) = k.from_int(chi.c1);
  om.at(0, 0) = A.lambda_value(chi.lambda_j, A.fq().gen());
  return FinModule(A, side, tag, std::move(s0), std::move(s1), std::move(om));
}

Classification classify(const FinModule& M) {
  KMat Zraw = M.act_zeta();
  KMat Z = M.side() == Side::Right ? Zraw.transpose() : Zraw;
  KMat N = M.dim() ? Z.pow(M.dim()) : Z;
  KMat ker = N.kernel();
  KMat im = N.column_space();
  FinModule sup = M.submodule(ker);
  FinModule nonsup = M.submodule(im);
  // exact rank assertions: zeta nilpotent on the kernel part, invertible on
  // the image part
  if (sup.dim()) {
    KMat Zs = sup.act_zeta();
    KMat Zs_op = sup.side() == Side::Right ? Zs.transpose() : Zs;
    require(Zs_op.pow(sup.dim()).is_zero(), "CheckFailure",
            "zeta not nilpotent on supersingular part");
  }
  if (nonsup.dim()) {
    KMat Zn = nonsup.act_zeta();
    require(Zn.rank() == nonsup.dim(), "CheckFailure",
            "zeta not invertible on nonsupersingular part");
  }
  require(sup.dim() + nonsup.dim() == M.dim(), "CheckFailure",
          "fitting decomposition dimension mismatch");
  Classification out{std::move(sup), std::move(nonsup), false, false};
  out.is_zeta_torsion = out.nonsupersingular_part.dim() == 0;
  out.is_zeta_torsionfree = out.supersingular_part.dim() == 0;
  return out;
}

std::vector<KMat> hom_space(const FinModule& M, const FinModule& N) {
  require(M.side() == N.side() && M.tag() == N.tag(), "DomainError",
          "hom_space needs matching side and algebra");
  const Fq& k = M.algebra().k();
  std::size_t m = M.dim(), n = N.dim();
  if (m == 0 || n == 0) return {};
  std::vector<KMat> gens_M, gens_N;
  auto push = [&](const KMat& a, const KMat& b) {
    gens_M.push_back(acting(M.side(), a));
    gens_N.push_back(acting(N.side(), b));
  };
  if (M.tag() != AlgebraTag::Hx1) push(M.act_s(Letter::S0), N.act_s(Letter::S0));
  if (M.tag() != AlgebraTag::Hx0) push(M.act_s(Letter::S1), N.act_s(Letter::S1));
  push(M.act_omega_gen(), N.act_omega_gen());
  // unknown Phi (n x m), equations Phi op_M(g) = op_N(g) Phi, vectorized by
  // columns of Phi: index (i, j) -> j*n + i
  std::size_t nv = n * m, neq = gens_M.size() * nv;
  KMat sys(k, neq, nv);
  std::size_t row0 = 0;
  for (std::size_t g = 0; g < gens_M.size(); ++g) {
    const KMat& AM = gens_M[g];
    const KMat& AN = gens_N[g];
    // (Phi AM - AN Phi)_{i j} = sum_l Phi_{i l} AM_{l j} - AN_{i l} Phi_{l j}
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < m; ++j) {
        std::size_t row = row0 + j * n + i;
        for (std::size_t l = 0; l < m; ++l)
          sys.at(row, l * n + i) = k.add(sys(row, l * n + i), AM(l, j));
        for (std::size_t l = 0; l < n; ++l)
          sys.at(row, j * n + l) = k.sub(sys(row, j * n + l), AN(i, l));
      }
    row0 += nv;
  }
  KMat ker = sys.kernel();
  std::vector<KMat> out;
  for (std::size_t c = 0; c < ker.cols(); ++c) {
    KMat phi(k, n, m);
    for (std::size_t j = 0; j < m; ++j)
      for (std::size_t i = 0; i < n; ++i) phi.at(i, j) = ker(j * n + i, c);
    out.push_back(phi);
  }
  return out;
}

FinModule dual_iota_twist(const FinModule& M) {
  const HeckeAlgebra& A = M.algebra();
  Side nside = M.side() == Side::Right ? Side::Left : Side::Right;
  KMat e1 = M.act_e1();
  auto twist = [&](const KMat& As) {
    return (e1 + As).scaled(A.k().neg(A.k().from_int(1)));
  };
  KMat s0 = M.tag() != AlgebraTag::Hx1 ? twist(M.act_s(Letter::S0))
                                       : KMat(A.k(), M.dim(), M.dim());
  KMat s1 = M.tag() != AlgebraTag::Hx0 ? twist(M.act_s(Letter::S1))
                                       : KMat(A.k(), M.dim(), M.dim());
  return FinModule(A, nside, M.tag(), std::move(s0), std::move(s1),
                   M.act_omega_gen());
}

std::size_t Hx0Decomposition::total_dim(std::uint32_t) const {
  std::size_t t = n_triv + n_sign;
  for (auto& [j, c] : n_char) {
    (void)j;
    t += c;
  }
  for (auto& [j, c] : n_proj) {
    (void)j;
    t += 2 * c;
  }
  return t;
}

std::string Hx0Decomposition::to_string() const {
  std::ostringstream os;
  os << "triv^" << n_triv << " sign^" << n_sign;
  for (auto& [j, c] : n_char)
    if (c) os << " chi[" << j << "]^" << c;
  for (auto& [j, c] : n_proj)
    if (c) os << " P[" << j << "]^" << c;
  return os.str();
}

Hx0Decomposition decompose_Hx0(const FinModule& M) {
  require(M.tag() == AlgebraTag::Hx0 && M.side() == Side::Right, "DomainError",
          "decompose_Hx0 needs a right H_{x_0}-module");
  const HeckeAlgebra& A = M.algebra();
  const Fq& k = A.k();
  std::uint32_t qm1 = A.q() - 1;
  KMat s0op = M.act_s(Letter::S0).transpose();  // right action on columns
  Hx0Decomposition out;
  std::vector<std::size_t> D(qm1, 0), d(qm1, 0);
  std::vector<KMat> comp;
  for (std::uint32_t j = 0; j < qm1; ++j) {
    KMat P = M.act_e_lambda(j).transpose();
    KMat im = P.column_space();
    comp.push_back(im);
    D[j] = im.cols();
    d[j] = KMat::intersect(im, s0op.kernel()).cols();
  }
  // lambda = 1: semisimple with eigenvalues 0 and -1
  {
    KMat im = comp[0];
    std::size_t ker0 = KMat::intersect(im, s0op.kernel()).cols();
    KMat I = KMat::identity(k, M.dim());
    std::size_t kerm1 = KMat::intersect(im, (s0op + I).kernel()).cols();
    require(ker0 + kerm1 == D[0], "InconsistentMultiplicities",
            "e_1 block not semisimple");
    out.n_triv = ker0;
    out.n_sign = kerm1;
  }
  for (std::uint32_t j = 1; j < qm1; ++j) {
    std::uint32_t jinv = (qm1 - j) % qm1;
    long long r, s;
    if (jinv == j) {
      s = (long long)D[j] - (long long)d[j];
      r = 2 * (long long)d[j] - (long long)D[j];
    } else {
      s = (long long)D[jinv] - (long long)d[jinv];  // s_j = D_{j^-1} - d_{j^-1}
      r = (long long)d[j] - s;
    }
    require(r >= 0 && s >= 0, "InconsistentMultiplicities",
            "negative multiplicity");
    if (r) out.n_char[j] = std::size_t(r);
    if (s) out.n_proj[j] = std::size_t(s);
  }
  // dimension bookkeeping
  std::size_t total = out.n_triv + out.n_sign;
  for (auto& [j, c] : out.n_char) {
    (void)j;
    total += c;
  }
  for (auto& [j, c] : out.n_proj) {
    (void)j;
    total += 2 * c;
  }
  require(total == M.dim(), "InconsistentMultiplicities",
          "dimensions do not sum to dim M");
  return out;
}

FinModule hx0_standard_module(const HeckeAlgebra& A, int kind, std::uint32_t j) {
  const Fq& k = A.k();
  const WeylGroup& W = A.weyl();
  // regular right module on the basis tau_omega, tau_{s_0 omega}
  std::vector<WeylElt> basis;
  for (const WeylElt& om : A.omega_list()) basis.push_back(om);
  for (const WeylElt& om : A.omega_list()) basis.push_back(W.mul(W.s0(), om));
  std::map<WeylElt, std::size_t> index;
  for (std::size_t i = 0; i < basis.size(); ++i) index[basis[i]] = i;
  std::size_t n = basis.size();
  auto action_of = [&](const HeckeElt& g) {
    KMat Araw(k, n, n);
    for (std::size_t i = 0; i < n; ++i) {
      HeckeElt prod = A.mul(A.tau(basis[i]), g);
      for (auto& [w, c] : prod.terms) Araw.at(i, index.at(w)) = c;
    }
    return Araw;
  };
  KMat s0 = action_of(A.tau(W.s0()));
  KMat om = action_of(A.tau(A.omega_list().size() > 1 ? A.omega_list()[1]
                                                      : A.omega_list()[0]));
  if (A.omega_list().size() == 1) om = KMat::identity(k, n);
  FinModule reg(A, Side::Right, AlgebraTag::Hx0, s0, KMat(k, n, n), om);
  if (kind == 0) return reg;
  // spanning vectors of the submodule
  HeckeElt gen;
  if (kind == 1) gen = A.tau(W.s0());
  if (kind == 2) gen = A.add(A.tau(W.s0()), A.e1());
  if (kind == 3) gen = A.e_lambda(j);
  KMat span(k, n, 0);
  for (std::size_t i = 0; i < n; ++i) {
    HeckeElt prod = A.mul(gen, A.tau(basis[i]));
    KMat col(k, n, 1);
    for (auto& [w, c] : prod.terms) col.at(index.at(w), 0) = c;
    span = KMat::hstack(span, col);
  }
  return reg.submodule(span.column_space());
}

FinModule direct_sum(const FinModule& a, const FinModule& b) {
  require(a.side() == b.side() && a.tag() == b.tag(), "DomainError",
          "direct sum needs matching side and algebra");
  const Fq& k = a.algebra().k();
  std::size_t n = a.dim() + b.dim();
  auto blockdiag = [&](const KMat& x, const KMat& y) {
    KMat out(k, n, n);
    out.add_block(0, 0, x, k.from_int(1));
    out.add_block(x.rows(), x.rows(), y, k.from_int(1));
    return out;
  };
  KMat s0 = a.tag() != AlgebraTag::Hx1
                ? blockdiag(a.act_s(Letter::S0), b.act_s(Letter::S0))
                : KMat(k, n, n);
  KMat s1 = a.tag() != AlgebraTag::Hx0
                ? blockdiag(a.act_s(Letter::S1), b.act_s(Letter::S1))
                : KMat(k, n, n);
  KMat om = blockdiag(a.act_omega_gen(), b.act_omega_gen());
  return FinModule(a.algebra(), a.side(), a.tag(), std::move(s0), std::move(s1),
                   std::move(om));
}

}  // namespace sl2hecke
