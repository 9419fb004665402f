#ifndef LAWFORGE_FIELD_HPP
#define LAWFORGE_FIELD_HPP

#include <cstdint>
#include <memory>
#include <stdexcept>
#include <string>
#include <vector>

namespace lawforge {

/// Arithmetic context for GF(p^m).
///
/// Elements are addressed by integer codes in [0, q): the code is the base-p
/// encoding of the coefficient vector of the polynomial representative,
/// constant term least significant.  Enumeration order is code order, so the
/// zero element always comes first.
///
/// The context is immutable after construction and can be shared freely
/// across threads.  For small fields (q <= 512) multiplication, addition and
/// inversion are table-backed; larger fields fall back to on-the-fly
/// polynomial arithmetic.
class FieldCtx {
 public:
  /// Builds GF(p^m) with the lexicographically least monic irreducible
  /// modulus of degree m over GF(p).  Deterministic across runs.
  static std::shared_ptr<const FieldCtx> make(uint32_t p, uint32_t m);

  /// Builds GF(p^m) with an explicit monic modulus (length m+1 coefficient
  /// vector, constant term first).  The modulus is checked for
  /// irreducibility by trial division.
  static std::shared_ptr<const FieldCtx> with_modulus(uint32_t p,
                                                      std::vector<uint32_t> modulus);

  uint32_t p() const { return p_; }
  uint32_t m() const { return m_; }
  uint64_t q() const { return q_; }
  const std::vector<uint32_t>& modulus() const { return modulus_; }

  // Code-level arithmetic.  All inputs must be < q.
  uint32_t add(uint32_t a, uint32_t b) const {
    return tables_ ? add_tab_[size_t(a) * q_ + b] : add_slow(a, b);
  }
  uint32_t neg(uint32_t a) const { return tables_ ? neg_tab_[a] : neg_slow(a); }
  uint32_t sub(uint32_t a, uint32_t b) const { return add(a, neg(b)); }
  uint32_t mul(uint32_t a, uint32_t b) const {
    return tables_ ? mul_tab_[size_t(a) * q_ + b] : mul_slow(a, b);
  }
  uint32_t inv(uint32_t a) const;  // throws on a == 0
  uint32_t pow(uint32_t a, uint64_t e) const;  // square and multiply

  uint32_t zero() const { return 0; }
  uint32_t one() const { return one_; }

  /// Code of the element with the given coefficient vector (length m, entries
  /// reduced mod p).
  uint32_t encode(const std::vector<uint32_t>& coeffs) const;
  /// Coefficient vector of a code, length exactly m.
  std::vector<uint32_t> decode(uint32_t code) const;

  /// Multiplicative order of a nonzero element (divides q-1).
  uint64_t mult_order(uint32_t a) const;

  bool same(const FieldCtx& other) const;

  std::string describe() const;  // e.g. "GF(9)"

 private:
  FieldCtx() = default;
  void init_tables();
  uint32_t add_slow(uint32_t a, uint32_t b) const;
  uint32_t neg_slow(uint32_t a) const;
  uint32_t mul_slow(uint32_t a, uint32_t b) const;

  uint32_t p_ = 0;
  uint32_t m_ = 0;
  uint64_t q_ = 0;
  uint32_t one_ = 1;
  std::vector<uint32_t> modulus_;                 // length m+1, monic
  std::vector<std::vector<uint32_t>> xpow_red_;   // x^(m+k) mod modulus, k = 0..m-2
  // Table-backed fast path (q <= 512).
  bool tables_ = false;
  std::vector<uint32_t> add_tab_, mul_tab_, neg_tab_, inv_tab_;
};

using FieldPtr = std::shared_ptr<const FieldCtx>;

/// Value-semantics wrapper pairing a code with its context.  Mixing elements
/// of different contexts throws.
class FieldElem {
 public:
  FieldElem() = default;
  FieldElem(FieldPtr ctx, uint32_t code) : ctx_(std::move(ctx)), code_(code) {}

  const FieldPtr& ctx() const { return ctx_; }
  uint32_t code() const { return code_; }
  std::vector<uint32_t> coeffs() const { return ctx_->decode(code_); }

  bool is_zero() const { return code_ == 0; }

  FieldElem operator+(const FieldElem& o) const { return apply2(o, &FieldCtx::add); }
  FieldElem operator-(const FieldElem& o) const { return apply2(o, &FieldCtx::sub); }
  FieldElem operator*(const FieldElem& o) const { return apply2(o, &FieldCtx::mul); }
  FieldElem operator-() const { return FieldElem(ctx_, ctx_->neg(code_)); }
  FieldElem inverse() const { return FieldElem(ctx_, ctx_->inv(code_)); }
  FieldElem pow(uint64_t e) const { return FieldElem(ctx_, ctx_->pow(code_, e)); }

  bool operator==(const FieldElem& o) const {
    check_ctx(o);
    return code_ == o.code_;
  }
  bool operator!=(const FieldElem& o) const { return !(*this == o); }

 private:
  void check_ctx(const FieldElem& o) const;
  FieldElem apply2(const FieldElem& o, uint32_t (FieldCtx::*op)(uint32_t, uint32_t) const) const {
    check_ctx(o);
    return FieldElem(ctx_, (ctx_.get()->*op)(code_, o.code_));
  }

  FieldPtr ctx_;
  uint32_t code_ = 0;
};

/// All q elements in deterministic (coefficient-lexicographic) order.
std::vector<FieldElem> field_enumerate(const FieldPtr& ctx);

bool is_prime(uint64_t n);

}  // namespace lawforge

#endif
