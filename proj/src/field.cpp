#include "lawforge/field.hpp"

#include <algorithm>

namespace lawforge {

namespace {

constexpr uint64_t kMaxQ = uint64_t(1) << 31;  // enumeration sanity cap
constexpr uint64_t kTableQ = 512;              // table-backed fast path

// Dense polynomial helpers over GF(p); vectors hold coefficients mod p,
// constant term first, no trailing-zero guarantees.
int degree(const std::vector<uint32_t>& f) {
  for (int i = int(f.size()) - 1; i >= 0; --i)
    if (f[i] != 0) return i;
  return -1;
}

// f mod g in place, g monic-normalized by its leading coefficient.
std::vector<uint32_t> poly_rem(std::vector<uint32_t> f, const std::vector<uint32_t>& g, uint32_t p,
                               uint32_t (*inv_mod)(uint32_t, uint32_t)) {
  int dg = degree(g);
  uint32_t lead_inv = inv_mod(g[dg], p);
  for (int df = degree(f); df >= dg; df = degree(f)) {
    uint64_t c = (uint64_t(f[df]) * lead_inv) % p;
    if (c != 0) {
      for (int i = 0; i <= dg; ++i) {
        uint64_t sub = (c * g[i]) % p;
        f[df - dg + i] = uint32_t((f[df - dg + i] + p - sub) % p);
      }
    }
    f[df] = 0;  // guard against rounding of the loop invariant
  }
  return f;
}

uint32_t inv_mod_prime(uint32_t a, uint32_t p) {
  // Fermat; p is prime and a != 0 mod p.
  uint64_t base = a % p, acc = 1, e = p - 2;
  while (e) {
    if (e & 1) acc = acc * base % p;
    base = base * base % p;
    e >>= 1;
  }
  return uint32_t(acc);
}

bool is_irreducible(const std::vector<uint32_t>& f, uint32_t p) {
  int d = degree(f);
  if (d <= 0) return false;
  if (d == 1) return true;
  // Trial division by every monic polynomial of degree 1..d/2.
  for (int dd = 1; dd <= d / 2; ++dd) {
    uint64_t count = 1;
    for (int i = 0; i < dd; ++i) count *= p;
    for (uint64_t v = 0; v < count; ++v) {
      std::vector<uint32_t> g(dd + 1, 0);
      uint64_t t = v;
      for (int i = 0; i < dd; ++i) {
        g[i] = uint32_t(t % p);
        t /= p;
      }
      g[dd] = 1;
      if (degree(poly_rem(f, g, p, &inv_mod_prime)) < 0) return false;
    }
  }
  return true;
}

}  // namespace

bool is_prime(uint64_t n) {
  if (n < 2) return false;
  for (uint64_t d = 2; d * d <= n; ++d)
    if (n % d == 0) return false;
  return true;
}

std::shared_ptr<const FieldCtx> FieldCtx::make(uint32_t p, uint32_t m) {
  if (!is_prime(p)) throw std::invalid_argument("FieldCtx: p must be prime");
  if (m == 0) throw std::invalid_argument("FieldCtx: m must be positive");
  uint64_t q = 1;
  for (uint32_t i = 0; i < m; ++i) {
    q *= p;
    if (q > kMaxQ) throw std::invalid_argument("FieldCtx: p^m exceeds 2^31 cap");
  }
  // Least monic irreducible: scan non-leading coefficient vectors in base-p
  // counter order, constant term least significant.
  for (uint64_t v = 0; v < q; ++v) {
    std::vector<uint32_t> f(m + 1, 0);
    uint64_t t = v;
    for (uint32_t i = 0; i < m; ++i) {
      f[i] = uint32_t(t % p);
      t /= p;
    }
    f[m] = 1;
    if (is_irreducible(f, p)) return with_modulus(p, f);
  }
  throw std::logic_error("FieldCtx: no irreducible modulus found");  // unreachable
}

std::shared_ptr<const FieldCtx> FieldCtx::with_modulus(uint32_t p, std::vector<uint32_t> modulus) {
  if (!is_prime(p)) throw std::invalid_argument("FieldCtx: p must be prime");
  if (modulus.size() < 2) throw std::invalid_argument("FieldCtx: modulus degree must be >= 1");
  uint32_t m = uint32_t(modulus.size()) - 1;
  for (auto& c : modulus) c %= p;
  if (modulus[m] != 1) throw std::invalid_argument("FieldCtx: modulus must be monic");
  if (!is_irreducible(modulus, p)) throw std::invalid_argument("FieldCtx: modulus is reducible");

  auto ctx = std::shared_ptr<FieldCtx>(new FieldCtx());
  ctx->p_ = p;
  ctx->m_ = m;
  ctx->q_ = 1;
  for (uint32_t i = 0; i < m; ++i) {
    ctx->q_ *= p;
    if (ctx->q_ > kMaxQ) throw std::invalid_argument("FieldCtx: p^m exceeds 2^31 cap");
  }
  ctx->modulus_ = std::move(modulus);

  // Reductions of x^(m+k) for k = 0..m-2, used by the slow multiply.
  std::vector<uint32_t> cur(ctx->modulus_.begin(), ctx->modulus_.end() - 1);
  for (auto& c : cur) c = (p - c) % p;  // x^m = -(low part)
  for (uint32_t k = 0; k + 1 < m; ++k) {
    ctx->xpow_red_.push_back(cur);
    // multiply by x, reduce
    std::vector<uint32_t> next(m, 0);
    uint32_t carry = cur[m - 1];
    for (uint32_t i = m - 1; i >= 1; --i) next[i] = cur[i - 1];
    next[0] = 0;
    if (carry) {
      for (uint32_t i = 0; i < m; ++i) {
        uint64_t sub = uint64_t(carry) * ctx->modulus_[i] % p;
        next[i] = uint32_t((next[i] + p - sub) % p);
      }
    }
    cur = next;
  }
  if (m == 1) ctx->xpow_red_.clear();

  ctx->one_ = 1;
  if (ctx->q_ <= kTableQ) ctx->init_tables();
  return ctx;
}

void FieldCtx::init_tables() {
  uint32_t q = uint32_t(q_);
  add_tab_.resize(size_t(q) * q);
  mul_tab_.resize(size_t(q) * q);
  neg_tab_.resize(q);
  inv_tab_.assign(q, 0);
  for (uint32_t a = 0; a < q; ++a) {
    auto da = decode(a);
    for (uint32_t b = 0; b < q; ++b) {
      auto db = decode(b);
      std::vector<uint32_t> s(m_);
      for (uint32_t i = 0; i < m_; ++i) s[i] = (da[i] + db[i]) % p_;
      add_tab_[size_t(a) * q + b] = encode(s);
      mul_tab_[size_t(a) * q + b] = mul_slow(a, b);
    }
    std::vector<uint32_t> n(m_);
    for (uint32_t i = 0; i < m_; ++i) n[i] = (p_ - da[i]) % p_;
    neg_tab_[a] = encode(n);
  }
  for (uint32_t a = 1; a < q; ++a) {
    for (uint32_t b = 1; b < q; ++b) {
      if (mul_tab_[size_t(a) * q + b] == one_) {
        inv_tab_[a] = b;
        break;
      }
    }
  }
  tables_ = true;
}

uint32_t FieldCtx::encode(const std::vector<uint32_t>& coeffs) const {
  if (coeffs.size() != m_) throw std::invalid_argument("encode: wrong coefficient count");
  uint64_t code = 0;
  for (uint32_t i = m_; i-- > 0;) code = code * p_ + (coeffs[i] % p_);
  return uint32_t(code);
}

std::vector<uint32_t> FieldCtx::decode(uint32_t code) const {
  std::vector<uint32_t> out(m_);
  uint64_t t = code;
  for (uint32_t i = 0; i < m_; ++i) {
    out[i] = uint32_t(t % p_);
    t /= p_;
  }
  return out;
}

uint32_t FieldCtx::add_slow(uint32_t a, uint32_t b) const {
  auto da = decode(a), db = decode(b);
  for (uint32_t i = 0; i < m_; ++i) da[i] = (da[i] + db[i]) % p_;
  return encode(da);
}

uint32_t FieldCtx::neg_slow(uint32_t a) const {
  auto d = decode(a);
  for (auto& c : d) c = (p_ - c) % p_;
  return encode(d);
}

uint32_t FieldCtx::mul_slow(uint32_t a, uint32_t b) const {
  auto da = decode(a), db = decode(b);
  std::vector<uint32_t> prod(2 * m_ - 1, 0);
  for (uint32_t i = 0; i < m_; ++i) {
    if (da[i] == 0) continue;
    for (uint32_t j = 0; j < m_; ++j)
      prod[i + j] = uint32_t((prod[i + j] + uint64_t(da[i]) * db[j]) % p_);
  }
  std::vector<uint32_t> out(prod.begin(), prod.begin() + m_);
  for (uint32_t k = 0; k + 1 < m_; ++k) {
    uint32_t hi = prod[m_ + k];
    if (hi == 0) continue;
    const auto& red = xpow_red_[k];
    for (uint32_t i = 0; i < m_; ++i)
      out[i] = uint32_t((out[i] + uint64_t(hi) * red[i]) % p_);
  }
  return encode(out);
}

uint32_t FieldCtx::pow(uint32_t a, uint64_t e) const {
  uint32_t acc = one_, base = a;
  while (e) {
    if (e & 1) acc = mul(acc, base);
    base = mul(base, base);
    e >>= 1;
  }
  return acc;
}

uint32_t FieldCtx::inv(uint32_t a) const {
  if (a == 0) throw std::domain_error("FieldCtx: inversion of zero");
  if (tables_) return inv_tab_[a];
  return pow(a, q_ - 2);
}

uint64_t FieldCtx::mult_order(uint32_t a) const {
  if (a == 0) throw std::domain_error("FieldCtx: order of zero");
  uint64_t k = 1;
  uint32_t acc = a;
  while (acc != one_) {
    acc = mul(acc, a);
    ++k;
    if (k > q_) throw std::logic_error("FieldCtx: order runaway");
  }
  return k;
}

bool FieldCtx::same(const FieldCtx& other) const {
  return p_ == other.p_ && m_ == other.m_ && modulus_ == other.modulus_;
}

std::string FieldCtx::describe() const { return "GF(" + std::to_string(q_) + ")"; }

void FieldElem::check_ctx(const FieldElem& o) const {
  if (!ctx_ || !o.ctx_ || !ctx_->same(*o.ctx_))
    throw std::invalid_argument("FieldElem: context mismatch");
}

std::vector<FieldElem> field_enumerate(const FieldPtr& ctx) {
  std::vector<FieldElem> out;
  out.reserve(size_t(ctx->q()));
  for (uint64_t c = 0; c < ctx->q(); ++c) out.emplace_back(ctx, uint32_t(c));
  return out;
}

}  // namespace lawforge
