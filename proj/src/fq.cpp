#include "sl2hecke/fq.hpp"

#include <algorithm>

namespace sl2hecke {

namespace {

bool is_prime(std::uint32_t n) {
  if (n < 2) return false;
  for (std::uint32_t d = 2; d * d <= n; ++d)
    if (n % d == 0) return false;
  return true;
}

// multiply residue codes a, b modulo the monic polynomial `mod` (degree d)
// over F_p, codes in base-p digit encoding
std::uint32_t poly_mulmod(std::uint32_t a, std::uint32_t b, std::uint32_t p,
                          std::uint32_t d, const std::vector<std::uint32_t>& mod) {
  std::vector<std::uint32_t> acc(2 * d, 0), ca(d, 0), cb(d, 0);
  for (std::uint32_t i = 0; i < d; ++i) { ca[i] = a % p; a /= p; }
  for (std::uint32_t i = 0; i < d; ++i) { cb[i] = b % p; b /= p; }
  for (std::uint32_t i = 0; i < d; ++i)
    for (std::uint32_t j = 0; j < d; ++j)
      acc[i + j] = (acc[i + j] + ca[i] * cb[j]) % p;
  for (std::uint32_t k = 2 * d; k-- > d;) {
    std::uint32_t c = acc[k];
    if (c == 0) continue;
    acc[k] = 0;
    for (std::uint32_t i = 0; i < d; ++i)
      acc[k - d + i] = (acc[k - d + i] + c * (p - mod[i] % p)) % p;
  }
  std::uint32_t out = 0;
  for (std::uint32_t i = d; i-- > 0;) out = out * p + acc[i];
  return out;
}

std::uint32_t order_mod(std::uint32_t a, std::uint32_t p) {
  std::uint32_t acc = a % p, k = 1;
  while (acc != 1) {
    acc = acc * a % p;
    ++k;
    if (k > p) return 0;
  }
  return k;
}

// order of the residue class of x in F_p[x]/(mod); 0 if not invertible or
// not of full order within the bound
std::uint64_t order_of_x(std::uint32_t p, std::uint32_t d,
                         const std::vector<std::uint32_t>& mod,
                         std::uint64_t bound) {
  std::uint32_t x = p;  // code of the polynomial "x"
  std::uint32_t acc = x;
  for (std::uint64_t k = 1; k <= bound; ++k) {
    if (acc == 1) return k;
    if (acc == 0) return 0;
    acc = poly_mulmod(acc, x, p, d, mod);
  }
  return 0;
}

}  // namespace

Fq::Fq(std::uint32_t p, std::uint32_t d) : p_(p), d_(d) {
  require(is_prime(p), "DomainError", "p must be prime");
  require(d >= 1, "DomainError", "field degree must be >= 1");
  std::uint64_t q = 1;
  for (std::uint32_t i = 0; i < d; ++i) q *= p;
  require(q <= 65536, "DomainError", "field too large for table arithmetic");
  q_ = std::uint32_t(q);

  modulus_.assign(d + 1, 0);
  modulus_[d] = 1;
  if (d == 1) {
    // prime field: generator is the smallest primitive root, modulus x - gen
    std::uint32_t g = 2;
    while (g < p && order_mod(g, p) != p - 1) ++g;
    require(p == 2 || g < p, "DomainError", "no primitive root found");
    gen_ = fq_t(p == 2 ? 1 : g);
    modulus_[0] = (p - gen_) % p;
  } else {
    // lexicographically smallest monic primitive polynomial, ordered by the
    // integer encoding sum(c_i p^i) of the coefficient tail
    bool found = false;
    for (std::uint32_t tail = 0; tail < q_ && !found; ++tail) {
      std::uint32_t t = tail;
      for (std::uint32_t i = 0; i < d; ++i) { modulus_[i] = t % p; t /= p; }
      if (modulus_[0] == 0) continue;
      if (order_of_x(p, d, modulus_, q_) == q_ - 1) found = true;
    }
    require(found, "DomainError", "no primitive polynomial found");
    gen_ = fq_t(p);  // the class of x
  }

  exp_.assign(q_ - 1, 0);
  log_.assign(q_, 0);
  std::uint32_t acc = 1;
  for (std::uint32_t e = 0; e < q_ - 1; ++e) {
    exp_[e] = fq_t(acc);
    log_[acc] = fq_t(e);
    acc = poly_mulmod(acc, gen_, p, d, modulus_);
  }
  require(acc == 1, "DomainError", "generator order mismatch");

  neg_table_.assign(q_, 0);
  for (std::uint32_t a = 0; a < q_; ++a) {
    std::uint32_t t = a, out = 0, mul = 1;
    for (std::uint32_t i = 0; i < d; ++i) {
      out += ((p - t % p) % p) * mul;
      mul *= p;
      t /= p;
    }
    neg_table_[a] = fq_t(out);
  }

  if (std::uint64_t(q_) * q_ <= (1u << 21)) {
    add_table_.assign(std::size_t(q_) * q_, 0);
    for (std::uint32_t a = 0; a < q_; ++a)
      for (std::uint32_t b = 0; b < q_; ++b)
        add_table_[std::size_t(a) * q_ + b] = add_slow(fq_t(a), fq_t(b));
  }
}

fq_t Fq::add_slow(fq_t a, fq_t b) const {
  std::uint32_t out = 0, mul = 1, x = a, y = b;
  for (std::uint32_t i = 0; i < d_; ++i) {
    out += ((x % p_ + y % p_) % p_) * mul;
    mul *= p_;
    x /= p_;
    y /= p_;
  }
  return fq_t(out);
}

fq_t Fq::pow(fq_t a, long long e) const {
  if (a == 0) {
    require(e > 0, "DomainError", "0^e with e <= 0");
    return 0;
  }
  long long m = q_ - 1;
  long long r = e % m;
  if (r < 0) r += m;
  return exp_[(std::uint64_t(log_[a]) * std::uint64_t(r)) % std::uint64_t(m)];
}

std::vector<std::uint8_t> Fq::coords(fq_t a) const {
  std::vector<std::uint8_t> c(d_);
  std::uint32_t t = a;
  for (std::uint32_t i = 0; i < d_; ++i) { c[i] = std::uint8_t(t % p_); t /= p_; }
  return c;
}

fq_t Fq::from_coords(const std::vector<std::uint8_t>& c) const {
  require(c.size() == d_, "DomainError", "coordinate length mismatch");
  std::uint32_t out = 0;
  for (std::uint32_t i = d_; i-- > 0;) out = out * p_ + c[i] % p_;
  return fq_t(out);
}

fq_t Fq::from_int(long long n) const {
  long long r = n % (long long)p_;
  if (r < 0) r += p_;
  return fq_t(r);
}

FqEmbedding::FqEmbedding(const Fq& from, const Fq& into)
    : from_(&from), into_(&into) {
  require(from.p() == into.p() && into.deg() % from.deg() == 0, "DomainError",
          "no embedding: degrees incompatible");
  map_.assign(from.q(), 0);
  if (from.deg() == into.deg() && from.modulus() == into.modulus()) {
    for (std::uint32_t a = 0; a < from.q(); ++a) map_[a] = fq_t(a);
    return;
  }
  // image of the small-field generator: smallest root of the small modulus
  const auto& mod = from.modulus();
  fq_t root = 0;
  bool found = false;
  for (std::uint32_t a = 0; a < into.q() && !found; ++a) {
    fq_t v = into.from_int(1);  // Horner from the leading coefficient
    for (std::uint32_t i = from.deg(); i-- > 0;)
      v = into.add(into.mul(v, fq_t(a)), into.from_int((long long)mod[i]));
    if (v == 0) {
      root = fq_t(a);
      found = true;
    }
  }
  require(found, "DomainError", "modulus has no root in target field");
  for (std::uint32_t a = 0; a < from.q(); ++a) {
    auto c = from.coords(fq_t(a));
    fq_t img = 0, pw = into.from_int(1);
    for (std::uint32_t i = 0; i < from.deg(); ++i) {
      img = into.add(img, into.mul(into.from_int(c[i]), pw));
      pw = into.mul(pw, root);
    }
    map_[a] = img;
  }
}

}  // namespace sl2hecke
