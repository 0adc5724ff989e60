#include "sl2hecke/weyl.hpp"

#include <cmath>
#include <sstream>

namespace sl2hecke {

WeylGroup::WeylGroup(const Fq& residue_field) : fq_(&residue_field) {
  one_z_ = fq_->from_int(1);
  neg_one_z_ = fq_->neg(one_z_);
}

WeylElt WeylGroup::omega(fq_t z) const {
  require(z != 0, "DomainError", "omega parameter must be a unit");
  return WeylElt{false, fq_->inv(z), 0};
}

fq_t WeylGroup::omega_param(const WeylElt& w) const {
  require(in_omega(w), "DomainError", "not an Omega element");
  return fq_->inv(w.z);
}

WeylElt WeylGroup::mul(const WeylElt& x, const WeylElt& y) const {
  const Fq& k = *fq_;
  if (!x.anti && !y.anti) return WeylElt{false, k.mul(x.z, y.z), x.n + y.n};
  if (!x.anti && y.anti) return WeylElt{true, k.mul(x.z, y.z), x.n + y.n};
  if (x.anti && !y.anti)
    return WeylElt{true, k.mul(x.z, k.inv(y.z)), x.n - y.n};
  return WeylElt{false, k.neg(k.mul(x.z, k.inv(y.z))), x.n - y.n};
}

WeylElt WeylGroup::inverse(const WeylElt& x) const {
  if (!x.anti) return WeylElt{false, fq_->inv(x.z), -x.n};
  return WeylElt{true, fq_->neg(x.z), x.n};
}

std::uint32_t WeylGroup::length(const WeylElt& w) const {
  if (!w.anti) return std::uint32_t(std::abs(2 * w.n));       // theta^n
  return std::uint32_t(std::abs(1 + 2 * w.n));                // s0 theta^{-n}
}

std::uint32_t WeylGroup::sigma(const WeylElt& w) const {
  if (!w.anti) return w.n <= 0 ? 1 : 0;
  return w.n <= -1 ? 1 : 0;
}

WeylWord WeylGroup::reduced_word(const WeylElt& w) const {
  WeylWord word;
  WeylElt cur = w;
  std::vector<Letter> rev;
  while (length(cur) > 0) {
    WeylElt c0 = mul(cur, s0());
    if (length(c0) + 1 == length(cur)) {
      rev.push_back(Letter::S0);
      cur = c0;
      continue;
    }
    WeylElt c1 = mul(cur, s1());
    require(length(c1) + 1 == length(cur), "DomainError", "no descent found");
    rev.push_back(Letter::S1);
    cur = c1;
  }
  // Letters were stripped on the right, so reversed they read left to
  // right.  The canonical form puts the Omega part on the right: solve
  // w = product(letters) * omega'.
  word.letters.assign(rev.rbegin(), rev.rend());
  WeylElt prod = one();
  for (Letter l : word.letters) prod = mul(prod, letter(l));
  WeylElt rest = mul(inverse(prod), w);
  require(in_omega(rest), "DomainError", "word reconstruction failed");
  word.omega_z = omega_param(rest);
  return word;
}

WeylElt WeylGroup::from_word(const WeylWord& word) const {
  WeylElt prod = one();
  for (Letter l : word.letters) prod = mul(prod, letter(l));
  return mul(prod, omega(word.omega_z));
}

WeylElt WeylGroup::w_n(std::uint32_t n) const {
  require(n >= 1, "DomainError", "w_n needs n >= 1");
  WeylElt s1s0 = mul(s1(), s0());
  WeylElt out = one();
  if (n % 2 == 1) {
    for (std::uint32_t i = 0; i < (n - 1) / 2; ++i) out = mul(out, s1s0);
  } else {
    WeylElt s0s1 = mul(s0(), s1());
    out = s1();
    for (std::uint32_t i = 0; i < (n - 2) / 2; ++i) out = mul(out, s0s1);
  }
  return out;
}

WeylElt WeylGroup::v_m(std::uint32_t m) const {
  require(m >= 2, "DomainError", "v(m) needs m >= 2");
  WeylElt out;
  if (m % 2 == 0) {
    out = s1();
    WeylElt s0s1 = mul(s0(), s1());
    for (std::uint32_t i = 0; i < m - 2; ++i) out = mul(out, s0s1);
  } else {
    out = s0();
    WeylElt s1s0 = mul(s1(), s0());
    for (std::uint32_t i = 0; i < m - 2; ++i) out = mul(out, s1s0);
  }
  return out;
}

namespace {

MEntry me_mul(const Fq& k, const MEntry& a, const MEntry& b) {
  if (!a.nonzero || !b.nonzero) return MEntry{};
  return MEntry{true, k.mul(a.z, b.z), a.n + b.n};
}

MEntry me_inv(const Fq& k, const MEntry& a) {
  require(a.nonzero, "DomainError", "inverse of zero entry");
  return MEntry{true, k.inv(a.z), -a.n};
}

}  // namespace

MonomialMat WeylGroup::to_monomial(const WeylElt& w) const {
  MonomialMat m;
  m.anti = w.anti;
  m.e1 = MEntry{true, w.z, w.n};
  if (!w.anti) {
    m.e2 = me_inv(*fq_, m.e1);
  } else {
    // c = -b^{-1}
    MEntry c = me_inv(*fq_, m.e1);
    c.z = fq_->neg(c.z);
    m.e2 = c;
  }
  return m;
}

MonomialMat WeylGroup::mm_mul(const MonomialMat& x, const MonomialMat& y) const {
  const Fq& k = *fq_;
  MonomialMat out;
  if (!x.anti && !y.anti) {
    out.anti = false;
    out.e1 = me_mul(k, x.e1, y.e1);
    out.e2 = me_mul(k, x.e2, y.e2);
  } else if (!x.anti && y.anti) {
    out.anti = true;
    out.e1 = me_mul(k, x.e1, y.e1);
    out.e2 = me_mul(k, x.e2, y.e2);
  } else if (x.anti && !y.anti) {
    out.anti = true;
    out.e1 = me_mul(k, x.e1, y.e2);
    out.e2 = me_mul(k, x.e2, y.e1);
  } else {
    out.anti = false;
    out.e1 = me_mul(k, x.e1, y.e2);
    out.e2 = me_mul(k, x.e2, y.e1);
  }
  return out;
}

MonomialMat WeylGroup::mm_inv(const MonomialMat& x) const {
  MonomialMat out;
  out.anti = x.anti;
  if (!x.anti) {
    out.e1 = me_inv(*fq_, x.e1);
    out.e2 = me_inv(*fq_, x.e2);
  } else {
    out.e1 = me_inv(*fq_, x.e2);
    out.e2 = me_inv(*fq_, x.e1);
  }
  return out;
}

bool WeylGroup::mm_equal_mod_T1(const MonomialMat& x, const MonomialMat& y) const {
  auto eq = [](const MEntry& a, const MEntry& b) {
    if (a.nonzero != b.nonzero) return false;
    if (!a.nonzero) return true;
    return a.z == b.z && a.n == b.n;
  };
  return x.anti == y.anti && eq(x.e1, y.e1) && eq(x.e2, y.e2);
}

MonomialMat WeylGroup::normalizer_N() const {
  MonomialMat m;
  m.anti = true;
  m.e1 = MEntry{true, one_z_, 0};  // b = 1
  m.e2 = MEntry{true, one_z_, 1};  // c = pi
  return m;
}

Elementary WeylGroup::monomial_conjugate_any(const WeylElt& v,
                                             const Elementary& e) const {
  const Fq& k = *fq_;
  Elementary out;
  if (!v.anti) {
    // diag(a, a^-1): u_+(x) -> u_+(a^2 x), u_-(x) -> u_-(a^-2 x)
    out.lower = e.lower;
    if (!e.lower) {
      out.z = k.mul(k.mul(v.z, v.z), e.z);
      out.n = 2 * v.n + e.n;
    } else {
      out.z = k.mul(k.inv(k.mul(v.z, v.z)), e.z);
      out.n = -2 * v.n + e.n;
    }
  } else {
    // antidiag with b-entry: u_+(x) -> u_-(-b^-2 x), u_-(x) -> u_+(-b^2 x)
    out.lower = !e.lower;
    if (!e.lower) {
      out.z = k.neg(k.mul(k.inv(k.mul(v.z, v.z)), e.z));
      out.n = -2 * v.n + e.n;
    } else {
      out.z = k.neg(k.mul(k.mul(v.z, v.z), e.z));
      out.n = 2 * v.n + e.n;
    }
  }
  return out;
}

Elementary WeylGroup::monomial_conjugate(const WeylElt& v,
                                         const Elementary& e) const {
  Elementary out = monomial_conjugate_any(v, e);
  require(out.n >= 0, "NonIntegralResult",
          "conjugated unipotent has negative valuation");
  return out;
}

std::string WeylGroup::to_string(const WeylElt& w) const {
  std::ostringstream os;
  WeylWord word = reduced_word(w);
  if (word.letters.empty() && word.omega_z == one_z_) return "1";
  for (Letter l : word.letters) os << (l == Letter::S0 ? "s0." : "s1.");
  if (word.omega_z != one_z_ || word.letters.empty())
    os << "w[" << word.omega_z << "]";
  std::string s = os.str();
  if (!s.empty() && s.back() == '.') s.pop_back();
  return s;
}

}  // namespace sl2hecke
