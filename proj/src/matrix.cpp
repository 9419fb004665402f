#include "lawforge/matrix.hpp"

#include <algorithm>
#include <cassert>
#include <numeric>
#include <stdexcept>

namespace lawforge {

namespace {

uint64_t u128_to_u64(unsigned __int128 v, const char* what) {
  if (v > ~uint64_t(0)) throw std::overflow_error(std::string(what) + ": value exceeds 64 bits");
  return uint64_t(v);
}

}  // namespace

SquareMatrix::SquareMatrix(FieldPtr ctx, uint32_t n)
    : ctx_(std::move(ctx)), n_(n), a_(size_t(n) * n, 0) {
  if (n == 0) throw std::invalid_argument("SquareMatrix: dimension must be positive");
}

SquareMatrix SquareMatrix::identity(FieldPtr ctx, uint32_t n) {
  SquareMatrix m(std::move(ctx), n);
  for (uint32_t i = 0; i < n; ++i) m.set(i, i, m.ctx_->one());
  return m;
}

SquareMatrix SquareMatrix::from_codes(FieldPtr ctx, uint32_t n, std::vector<uint32_t> codes) {
  if (codes.size() != size_t(n) * n)
    throw std::invalid_argument("SquareMatrix: wrong entry count");
  SquareMatrix m(std::move(ctx), n);
  m.a_.assign(codes.begin(), codes.end());
  for (uint32_t c : m.a_)
    if (c >= m.ctx_->q()) throw std::invalid_argument("SquareMatrix: entry code out of range");
  return m;
}

void SquareMatrix::check_compat(const SquareMatrix& o) const {
  if (n_ != o.n_ || !ctx_ || !o.ctx_ || !ctx_->same(*o.ctx_))
    throw std::invalid_argument("SquareMatrix: shape or context mismatch");
}

SquareMatrix SquareMatrix::mul(const SquareMatrix& o) const {
  check_compat(o);
  const FieldCtx& F = *ctx_;
  SquareMatrix r(ctx_, n_);
  for (uint32_t i = 0; i < n_; ++i) {
    for (uint32_t k = 0; k < n_; ++k) {
      uint32_t aik = at(i, k);
      if (aik == 0) continue;
      for (uint32_t j = 0; j < n_; ++j) {
        uint32_t t = F.mul(aik, o.at(k, j));
        r.set(i, j, F.add(r.at(i, j), t));
      }
    }
  }
  return r;
}

SquareMatrix SquareMatrix::inv() const {
  const FieldCtx& F = *ctx_;
  SquareMatrix a = *this;
  SquareMatrix r = identity(ctx_, n_);
  for (uint32_t col = 0; col < n_; ++col) {
    uint32_t pivot = col;
    while (pivot < n_ && a.at(pivot, col) == 0) ++pivot;
    if (pivot == n_) throw std::domain_error("SquareMatrix::inv: singular matrix");
    if (pivot != col) {
      for (uint32_t j = 0; j < n_; ++j) {
        std::swap(a.a_[size_t(pivot) * n_ + j], a.a_[size_t(col) * n_ + j]);
        std::swap(r.a_[size_t(pivot) * n_ + j], r.a_[size_t(col) * n_ + j]);
      }
    }
    uint32_t pinv = F.inv(a.at(col, col));
    for (uint32_t j = 0; j < n_; ++j) {
      a.set(col, j, F.mul(a.at(col, j), pinv));
      r.set(col, j, F.mul(r.at(col, j), pinv));
    }
    for (uint32_t i = 0; i < n_; ++i) {
      if (i == col) continue;
      uint32_t f = a.at(i, col);
      if (f == 0) continue;
      for (uint32_t j = 0; j < n_; ++j) {
        a.set(i, j, F.sub(a.at(i, j), F.mul(f, a.at(col, j))));
        r.set(i, j, F.sub(r.at(i, j), F.mul(f, r.at(col, j))));
      }
    }
  }
  return r;
}

SquareMatrix SquareMatrix::pow(int64_t e) const {
  SquareMatrix base = e >= 0 ? *this : inv();
  uint64_t k = e >= 0 ? uint64_t(e) : uint64_t(-(e + 1)) + 1;
  SquareMatrix acc = identity(ctx_, n_);
  while (k) {
    if (k & 1) acc = acc.mul(base);
    k >>= 1;
    if (k) base = base.mul(base);
  }
  return acc;
}

SquareMatrix SquareMatrix::scaled(uint32_t code) const {
  SquareMatrix r = *this;
  for (auto& c : r.a_) c = ctx_->mul(c, code);
  return r;
}

uint32_t SquareMatrix::det() const {
  const FieldCtx& F = *ctx_;
  SquareMatrix a = *this;
  uint32_t d = F.one();
  for (uint32_t col = 0; col < n_; ++col) {
    uint32_t pivot = col;
    while (pivot < n_ && a.at(pivot, col) == 0) ++pivot;
    if (pivot == n_) return 0;
    if (pivot != col) {
      for (uint32_t j = 0; j < n_; ++j)
        std::swap(a.a_[size_t(pivot) * n_ + j], a.a_[size_t(col) * n_ + j]);
      d = F.neg(d);
    }
    d = F.mul(d, a.at(col, col));
    uint32_t pinv = F.inv(a.at(col, col));
    for (uint32_t i = col + 1; i < n_; ++i) {
      uint32_t f = F.mul(a.at(i, col), pinv);
      if (f == 0) continue;
      for (uint32_t j = col; j < n_; ++j)
        a.set(i, j, F.sub(a.at(i, j), F.mul(f, a.at(col, j))));
    }
  }
  return d;
}

bool SquareMatrix::is_identity() const {
  for (uint32_t i = 0; i < n_; ++i)
    for (uint32_t j = 0; j < n_; ++j)
      if (at(i, j) != (i == j ? ctx_->one() : 0)) return false;
  return true;
}

SquareMatrix projective_canonical(const SquareMatrix& m, const std::vector<uint32_t>& roots) {
  uint32_t first = 0;
  bool found = false;
  for (uint32_t c : m.codes()) {
    if (c != 0) {
      first = c;
      found = true;
      break;
    }
  }
  if (!found) throw std::invalid_argument("projective_canonical: zero matrix");
  const FieldCtx& F = *m.ctx();
  uint32_t best_root = F.one(), best_val = first;
  for (uint32_t z : roots) {
    uint32_t v = F.mul(z, first);
    if (v < best_val) {
      best_val = v;
      best_root = z;
    }
  }
  return best_root == F.one() ? m : m.scaled(best_root);
}

GroupHandle::GroupHandle(GroupKind kind, uint32_t n, FieldPtr ctx)
    : kind_(kind), n_(n), ctx_(std::move(ctx)), projective_(kind == GroupKind::PSL) {
  if (kind == GroupKind::Subgroup)
    throw std::invalid_argument("GroupHandle: use GroupHandle::subgroup for explicit subgroups");
  if (n < 1) throw std::invalid_argument("GroupHandle: dimension must be >= 1");
  if (projective_) roots_of_unity();  // eager: worker threads share the handle
}

GroupHandle GroupHandle::subgroup(std::vector<SquareMatrix> elements, bool projective,
                                  std::string label) {
  if (elements.empty()) throw std::invalid_argument("subgroup: empty element list");
  GroupHandle h;
  h.kind_ = GroupKind::Subgroup;
  h.n_ = elements[0].n();
  h.ctx_ = elements[0].ctx();
  h.projective_ = projective;
  h.label_ = std::move(label);
  h.cache_ = std::move(elements);
  if (projective)
    for (auto& m : h.cache_) m = projective_canonical(m, h.roots_of_unity());
  // Closure hygiene for small lists; the search oracle depends on it.
  if (h.cache_.size() <= 2048) {
    auto has = [&](const SquareMatrix& m) {
      return std::find(h.cache_.begin(), h.cache_.end(), m) != h.cache_.end();
    };
    if (!has(h.identity())) throw std::invalid_argument("subgroup: identity missing");
    for (const auto& a : h.cache_) {
      if (!has(h.inv(a))) throw std::invalid_argument("subgroup: not closed under inverse");
      for (const auto& b : h.cache_)
        if (!has(h.mul(a, b))) throw std::invalid_argument("subgroup: not closed under product");
    }
  }
  return h;
}

GroupHandle GroupHandle::parse(const std::string& s) {
  size_t open = s.find('(');
  size_t comma = s.find(',', open == std::string::npos ? 0 : open);
  size_t close = s.find(')', comma == std::string::npos ? 0 : comma);
  if (open == std::string::npos || comma == std::string::npos || close == std::string::npos)
    throw std::invalid_argument("group descriptor must look like SL(2,3): " + s);
  std::string kind = s.substr(0, open);
  uint32_t n = uint32_t(std::stoul(s.substr(open + 1, comma - open - 1)));
  uint64_t q = std::stoull(s.substr(comma + 1, close - comma - 1));
  // q must be a prime power.
  uint32_t p = 0, m = 0;
  for (uint64_t d = 2; d * d <= q; ++d) {
    if (q % d == 0) {
      p = uint32_t(d);
      break;
    }
  }
  if (p == 0) {
    p = uint32_t(q);
    m = 1;
  } else {
    uint64_t t = q;
    m = 0;
    while (t % p == 0) {
      t /= p;
      ++m;
    }
    if (t != 1) throw std::invalid_argument("group descriptor: q is not a prime power: " + s);
  }
  auto ctx = FieldCtx::make(p, m);
  if (kind == "GL") return GroupHandle(GroupKind::GL, n, ctx);
  if (kind == "SL") return GroupHandle(GroupKind::SL, n, ctx);
  if (kind == "PSL") return GroupHandle(GroupKind::PSL, n, ctx);
  throw std::invalid_argument("group descriptor: unknown kind: " + s);
}

std::string GroupHandle::describe() const {
  switch (kind_) {
    case GroupKind::GL:
      return "GL(" + std::to_string(n_) + "," + std::to_string(ctx_->q()) + ")";
    case GroupKind::SL:
      return "SL(" + std::to_string(n_) + "," + std::to_string(ctx_->q()) + ")";
    case GroupKind::PSL:
      return "PSL(" + std::to_string(n_) + "," + std::to_string(ctx_->q()) + ")";
    case GroupKind::Subgroup:
      return label_.empty() ? "subgroup" : label_;
  }
  return "?";
}

unsigned __int128 GroupHandle::order() const {
  if (kind_ == GroupKind::Subgroup) return cache_.size();
  uint64_t q = ctx_->q();
  unsigned __int128 gl = 1;
  unsigned __int128 qn = 1;
  for (uint32_t i = 0; i < n_; ++i) qn *= q;
  unsigned __int128 qi = 1;
  for (uint32_t i = 0; i < n_; ++i) {
    gl *= (qn - qi);
    qi *= q;
  }
  if (kind_ == GroupKind::GL) return gl;
  unsigned __int128 sl = gl / (q - 1);
  if (kind_ == GroupKind::SL) return sl;
  uint64_t g = std::gcd(uint64_t(n_), q - 1);
  return sl / g;
}

uint64_t GroupHandle::order_u64() const { return u128_to_u64(order(), "group order"); }

bool GroupHandle::enumerable(uint64_t cap) const {
  if (kind_ == GroupKind::Subgroup) return true;
  if (order() > cap) return false;
  // The scan walks all q^(n^2) entry combinations; keep that feasible too.
  long double scan = 1.0L;
  for (uint32_t i = 0; i < n_ * n_; ++i) {
    scan *= ctx_->q();
    if (scan > 2e8L) return false;
  }
  return true;
}

const std::vector<SquareMatrix>& GroupHandle::elements(uint64_t cap) const {
  if (!cache_.empty()) return cache_;
  if (!enumerable(cap)) throw std::invalid_argument(describe() + ": enumeration cap exceeded");
  uint64_t q = ctx_->q();
  uint32_t nn = n_ * n_;
  std::vector<uint32_t> codes(nn, 0);
  std::vector<SquareMatrix> out;
  const uint64_t expect = order_u64();
  out.reserve(expect);
  // Row-major lexicographic odometer, last entry fastest.
  while (true) {
    SquareMatrix m = SquareMatrix::from_codes(ctx_, n_, codes);
    uint32_t d = m.det();
    bool keep = false;
    switch (kind_) {
      case GroupKind::GL: keep = d != 0; break;
      case GroupKind::SL: keep = d == ctx_->one(); break;
      case GroupKind::PSL:
        keep = d == ctx_->one() && projective_canonical(m, roots_of_unity()) == m;
        break;
      case GroupKind::Subgroup: keep = false; break;
    }
    if (keep) out.push_back(std::move(m));
    int32_t pos = int32_t(nn) - 1;
    while (pos >= 0) {
      if (++codes[pos] < q) break;
      codes[pos] = 0;
      --pos;
    }
    if (pos < 0) break;
  }
  if (out.size() != expect)
    throw std::logic_error(describe() + ": enumeration count disagrees with order formula");
  cache_ = std::move(out);
  return cache_;
}

const std::vector<uint32_t>& GroupHandle::roots_of_unity() const {
  if (!roots_.empty()) return roots_;
  for (uint64_t c = 1; c < ctx_->q(); ++c)
    if (ctx_->pow(uint32_t(c), n_) == ctx_->one()) roots_.push_back(uint32_t(c));
  return roots_;
}

SquareMatrix GroupHandle::sample_with(std::mt19937_64& rng) const {
  if (kind_ == GroupKind::Subgroup) return cache_[rng() % cache_.size()];
  uint64_t q = ctx_->q();
  while (true) {
    std::vector<uint32_t> codes(size_t(n_) * n_);
    for (auto& c : codes) c = uint32_t(rng() % q);
    SquareMatrix m = SquareMatrix::from_codes(ctx_, n_, codes);
    uint32_t d = m.det();
    if (d == 0) continue;
    if (kind_ == GroupKind::GL) return m;
    // Scaling the last row by det^-1 maps GL onto SL with constant fibers.
    uint32_t dinv = ctx_->inv(d);
    for (uint32_t j = 0; j < n_; ++j) m.set(n_ - 1, j, ctx_->mul(m.at(n_ - 1, j), dinv));
    if (kind_ == GroupKind::PSL) return projective_canonical(m, roots_of_unity());
    return m;
  }
}

SquareMatrix GroupHandle::sample(uint64_t seed) const {
  std::mt19937_64 rng(seed);
  return sample_with(rng);
}

SquareMatrix GroupHandle::identity() const {
  return SquareMatrix::identity(ctx_, n_);
}

SquareMatrix GroupHandle::mul(const SquareMatrix& a, const SquareMatrix& b) const {
  SquareMatrix r = a.mul(b);
#ifndef NDEBUG
  if (kind_ == GroupKind::SL) assert(r.det() == ctx_->one());
#endif
  if (projective_) r = projective_canonical(r, roots_of_unity());
  return r;
}

SquareMatrix GroupHandle::inv(const SquareMatrix& a) const {
  SquareMatrix r = a.inv();
  if (projective_) r = projective_canonical(r, roots_of_unity());
  return r;
}

SquareMatrix GroupHandle::canonical(const SquareMatrix& a) const {
  return projective_ ? projective_canonical(a, roots_of_unity()) : a;
}

uint64_t element_order(const GroupHandle& h, const SquareMatrix& g, uint64_t cap) {
  SquareMatrix acc = h.canonical(g);
  SquareMatrix base = acc;
  uint64_t k = 1;
  while (!acc.is_identity()) {
    acc = h.mul(acc, base);
    ++k;
    if (k > cap) throw std::runtime_error("element_order: cap exceeded");
  }
  return k;
}

uint64_t element_order_dividing(const GroupHandle& h, const SquareMatrix& g,
                                uint64_t order_multiple) {
  auto power = [&](uint64_t e) {
    SquareMatrix acc = h.identity();
    SquareMatrix base = h.canonical(g);
    while (e) {
      if (e & 1) acc = h.mul(acc, base);
      e >>= 1;
      if (e) base = h.mul(base, base);
    }
    return acc;
  };
  if (!power(order_multiple).is_identity())
    throw std::invalid_argument("element_order_dividing: given value is not an order multiple");
  // Factor, then peel primes off the exponent while the power stays trivial.
  uint64_t ord = order_multiple;
  uint64_t n = order_multiple;
  std::vector<uint64_t> primes;
  for (uint64_t d = 2; d * d <= n; ++d) {
    if (n % d == 0) {
      primes.push_back(d);
      while (n % d == 0) n /= d;
    }
  }
  if (n > 1) primes.push_back(n);
  for (uint64_t pr : primes)
    while (ord % pr == 0 && power(ord / pr).is_identity()) ord /= pr;
  return ord;
}

uint64_t brute_exponent(const GroupHandle& h, uint64_t cap) {
  const auto& els = h.elements(cap);
  uint64_t e = 1;
  for (const auto& g : els) e = std::lcm(e, element_order(h, g, els.size()));
  return e;
}

SquareMatrix blow_up(const SquareMatrix& mat, const FieldPtr& base_ctx) {
  const FieldPtr& ext = mat.ctx();
  if (base_ctx->m() != 1 || base_ctx->p() != ext->p() || ext->m() < 1)
    throw std::invalid_argument("blow_up: base must be the prime field of the extension");
  uint32_t p = ext->p(), m = ext->m(), n = mat.n();
  SquareMatrix big(base_ctx, n * m);
  for (uint32_t r = 0; r < n; ++r) {
    for (uint32_t c = 0; c < n; ++c) {
      uint32_t alpha = mat.at(r, c);
      for (uint32_t j = 0; j < m; ++j) {
        uint32_t xj = 1;
        for (uint32_t t = 0; t < j; ++t) xj *= p;  // code of x^j
        auto col = ext->decode(ext->mul(alpha, xj));
        for (uint32_t i = 0; i < m; ++i) big.set(r * m + i, c * m + j, col[i]);
      }
    }
  }
  return big;
}

}  // namespace lawforge
