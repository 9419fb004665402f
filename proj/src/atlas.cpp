#include "lawforge/atlas.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>

#include "lawforge/field.hpp"  // is_prime

namespace lawforge {

namespace {

// Minimal unsigned bignum: enough for exact powers, fourth roots and decimal
// rendering of the largest reported quantities (q^(31r) reaches hundreds of
// digits on the grid).
struct BigUInt {
  std::vector<uint64_t> limb;  // little-endian base 2^64; no leading zeros

  BigUInt() = default;
  explicit BigUInt(uint64_t v) {
    if (v) limb.push_back(v);
  }
  bool is_zero() const { return limb.empty(); }

  static int cmp(const BigUInt& a, const BigUInt& b) {
    if (a.limb.size() != b.limb.size()) return a.limb.size() < b.limb.size() ? -1 : 1;
    for (size_t i = a.limb.size(); i-- > 0;) {
      if (a.limb[i] != b.limb[i]) return a.limb[i] < b.limb[i] ? -1 : 1;
    }
    return 0;
  }

  BigUInt mul(const BigUInt& o) const {
    if (is_zero() || o.is_zero()) return BigUInt();
    BigUInt r;
    r.limb.assign(limb.size() + o.limb.size(), 0);
    for (size_t i = 0; i < limb.size(); ++i) {
      unsigned __int128 carry = 0;
      for (size_t j = 0; j < o.limb.size(); ++j) {
        unsigned __int128 t = (unsigned __int128)limb[i] * o.limb[j] + r.limb[i + j] + carry;
        r.limb[i + j] = uint64_t(t);
        carry = t >> 64;
      }
      size_t k = i + o.limb.size();
      while (carry) {
        unsigned __int128 t = (unsigned __int128)r.limb[k] + carry;
        r.limb[k] = uint64_t(t);
        carry = t >> 64;
        ++k;
      }
    }
    while (!r.limb.empty() && r.limb.back() == 0) r.limb.pop_back();
    return r;
  }

  static BigUInt pow(uint64_t base, uint32_t e) {
    BigUInt acc(1), b(base);
    while (e) {
      if (e & 1) acc = acc.mul(b);
      e >>= 1;
      if (e) b = b.mul(b);
    }
    return acc;
  }

  uint32_t divmod_small(uint32_t d) {
    unsigned __int128 rem = 0;
    for (size_t i = limb.size(); i-- > 0;) {
      unsigned __int128 cur = (rem << 64) | limb[i];
      limb[i] = uint64_t(cur / d);
      rem = cur % d;
    }
    while (!limb.empty() && limb.back() == 0) limb.pop_back();
    return uint32_t(rem);
  }

  std::string decimal() const {
    if (is_zero()) return "0";
    BigUInt t = *this;
    std::string out;
    while (!t.is_zero()) out.push_back(char('0' + t.divmod_small(10)));
    std::reverse(out.begin(), out.end());
    return out;
  }
};

// floor(N^(1/4)) by binary search; N = q^e values stay below ~2^256 here.
uint64_t floor_fourth_root(const BigUInt& n) {
  uint64_t lo = 0, hi = 1;
  while (BigUInt::cmp(BigUInt::pow(hi, 4), n) <= 0) {
    if (hi > (uint64_t(1) << 62)) throw std::overflow_error("fourth root out of range");
    hi <<= 1;
  }
  while (lo + 1 < hi) {
    uint64_t mid = lo + (hi - lo) / 2;
    if (BigUInt::cmp(BigUInt::pow(mid, 4), n) <= 0)
      lo = mid;
    else
      hi = mid;
  }
  return lo;
}

uint32_t char_of(uint64_t q) {
  for (uint64_t d = 2; d * d <= q; ++d)
    if (q % d == 0) return uint32_t(d);
  return uint32_t(q);
}

bool is_prime_power(uint64_t q, uint32_t* p_out = nullptr, uint32_t* f_out = nullptr) {
  if (q < 2) return false;
  uint32_t p = char_of(q);
  if (!is_prime(p)) return false;
  uint64_t t = q;
  uint32_t f = 0;
  while (t % p == 0) {
    t /= p;
    ++f;
  }
  if (t != 1) return false;
  if (p_out) *p_out = p;
  if (f_out) *f_out = f;
  return true;
}

uint64_t pow_u64_checked(uint64_t base, uint32_t e) {
  unsigned __int128 v = 1;
  for (uint32_t i = 0; i < e; ++i) {
    v *= base;
    if (v > ~uint64_t(0)) throw std::overflow_error("pow_u64_checked");
  }
  return uint64_t(v);
}

std::string stage_group(const std::string& fam, uint32_t rank, uint64_t field) {
  return fam + std::to_string(rank) + "(" + std::to_string(field) + ")";
}

std::string stage_sl(const char* kind, uint32_t dim, uint64_t field) {
  return std::string(kind) + "(" + std::to_string(dim) + "," + std::to_string(field) + ")";
}

// Formal length of the power-word identity of SL_M(q0): (M+2)^2 p^e q0^(M-1),
// as a log10 (the grid reaches hundreds of digits).
double identity_length_log10(uint32_t M, uint64_t q0) {
  uint32_t p = char_of(q0);
  uint32_t e = 1;
  uint64_t pe = p;
  while (pe < M) {
    pe *= p;
    ++e;
  }
  return 2 * std::log10(double(M) + 2) + e * std::log10(double(p)) +
         (double(M) - 1) * std::log10(double(q0));
}

}  // namespace

std::string family_name(Family f) {
  switch (f) {
    case Family::A: return "A";
    case Family::B: return "B";
    case Family::C: return "C";
    case Family::D: return "D";
    case Family::E6: return "E6";
    case Family::E7: return "E7";
    case Family::E8: return "E8";
    case Family::F4: return "F4";
    case Family::G2: return "G2";
    case Family::TwA: return "2A";
    case Family::TwD: return "2D";
    case Family::Tr3D4: return "3D4";
    case Family::TwE6: return "2E6";
    case Family::TwF4: return "2F4";
    case Family::TwG2: return "2G2";
    case Family::TwB2: return "2B2";
  }
  return "?";
}

Family parse_family(const std::string& s) {
  for (Family f : all_families())
    if (family_name(f) == s) return f;
  throw std::invalid_argument("unknown family: " + s);
}

std::vector<Family> all_families() {
  return {Family::A,    Family::B,    Family::C,   Family::D,   Family::E6,  Family::E7,
          Family::E8,   Family::F4,   Family::G2,  Family::TwA, Family::TwD, Family::Tr3D4,
          Family::TwE6, Family::TwF4, Family::TwG2, Family::TwB2};
}

std::vector<uint32_t> valid_ranks(Family f, uint32_t max_rank) {
  auto range = [&](uint32_t lo) {
    std::vector<uint32_t> out;
    for (uint32_t r = lo; r <= max_rank; ++r) out.push_back(r);
    return out;
  };
  switch (f) {
    case Family::A: return range(1);
    case Family::B: return range(2);
    case Family::C: return range(2);
    case Family::D: return range(4);
    case Family::TwA: return range(1);
    case Family::TwD: return range(3);
    case Family::E6: return {6};
    case Family::E7: return {7};
    case Family::E8: return {8};
    case Family::F4: return {4};
    case Family::G2: return {2};
    case Family::Tr3D4: return {2};
    case Family::TwE6: return {4};
    case Family::TwF4: return {2};
    case Family::TwG2: return {1};
    case Family::TwB2: return {1};
  }
  return {};
}

bool valid_field(Family f, uint64_t q) {
  uint32_t p = 0, e = 0;
  if (!is_prime_power(q, &p, &e)) return false;
  switch (f) {
    case Family::TwF4:
    case Family::TwB2: return p == 2 && e % 2 == 1;
    case Family::TwG2: return p == 3 && e % 2 == 1;
    default: return true;
  }
}

void GroupSpec::validate() const {
  if (!is_prime_power(q)) throw std::invalid_argument("GroupSpec: q must be a prime power");
  if (q > (uint64_t(1) << 20)) throw std::invalid_argument("GroupSpec: q too large for the atlas");
  auto ranks = valid_ranks(family, std::max(rank, 64u));
  if (std::find(ranks.begin(), ranks.end(), rank) == ranks.end())
    throw std::invalid_argument("GroupSpec: rank " + std::to_string(rank) +
                                " undefined for family " + family_name(family));
  if (!valid_field(family, q))
    throw std::invalid_argument("GroupSpec: field " + std::to_string(q) +
                                " invalid for family " + family_name(family) +
                                " (Suzuki/Ree need odd powers of 2 resp. 3)");
}

uint32_t GroupSpec::realization_exponent() const {
  switch (family) {
    case Family::TwA:
    case Family::TwD:
    case Family::TwE6: return 2;
    case Family::Tr3D4: return 3;
    default: return 1;  // untwisted; 2F4/2G2/2B2 live over F_q itself
  }
}

uint64_t GroupSpec::q_star() const { return pow_u64_checked(q, realization_exponent()); }

uint32_t GroupSpec::untwisted_rank() const {
  switch (family) {
    case Family::TwA: return 2 * rank;  // models 2A_{2d}; 2A_{2d-1} shares its bounds
    case Family::TwD: return rank + 1;
    case Family::Tr3D4: return 4;
    case Family::TwE6: return 6;
    case Family::TwF4: return 4;
    case Family::TwG2: return 2;
    case Family::TwB2: return 2;
    default: return rank;
  }
}

uint32_t GroupSpec::lie_algebra_dim() const {
  uint32_t u = untwisted_rank();
  switch (family) {
    case Family::A:
    case Family::TwA: return u * (u + 2);
    case Family::B:
    case Family::C: return u * (2 * u + 1);
    case Family::TwB2: return 10;  // ambient B2 = C2
    case Family::D:
    case Family::TwD:
    case Family::Tr3D4: return u * (2 * u - 1);
    case Family::E6:
    case Family::TwE6: return 78;
    case Family::E7: return 133;
    case Family::E8: return 248;
    case Family::F4:
    case Family::TwF4: return 52;
    case Family::G2:
    case Family::TwG2: return 14;
  }
  return 0;
}

std::string GroupSpec::describe() const {
  return family_name(family) + "(r=" + std::to_string(rank) + ",q=" + std::to_string(q) + ")";
}

LowerChain lower_bound_embedding(const GroupSpec& spec) {
  spec.validate();
  if (spec.family == Family::TwB2)
    throw std::invalid_argument("lower_bound_embedding: Suzuki groups have no A-type chain");
  LowerChain c;
  const uint64_t q = spec.q;
  const uint32_t d = spec.rank;
  switch (spec.family) {
    case Family::A:
      c.stages = {stage_group("A", d, q)};
      c.terminal_rank = d;
      c.terminal_field_power = 1;
      break;
    case Family::B:
    case Family::C:
    case Family::D:
    case Family::E6:
    case Family::E7:
    case Family::E8:
    case Family::F4:
    case Family::G2:
      // The Dynkin diagram of rank d contains an A_{d-1} subdiagram.
      c.stages = {stage_group("A", d - 1, q)};
      c.terminal_rank = d - 1;
      c.terminal_field_power = 1;
      break;
    case Family::TwA:
      if (d == 1) {
        c.stages = {stage_group("A", 1, q)};
        c.terminal_rank = 1;
        c.terminal_field_power = 1;
      } else {
        c.stages = {stage_group("A", d - 1, q * q)};
        c.terminal_rank = d - 1;
        c.terminal_field_power = 2;
      }
      break;
    case Family::TwD: {
      // n = largest power of two with n <= d+1 (so d+1 < 2n); descend through
      // 2D_{n/2}(q^2) to A_1(q^n).
      uint32_t n = 1;
      while (2 * n <= d + 1) n *= 2;
      c.stages = {stage_group("2D", n / 2, q * q),
                  stage_group("A", 1, pow_u64_checked(q, n))};
      c.terminal_rank = 1;
      c.terminal_field_power = n;
      break;
    }
    case Family::Tr3D4:
      c.stages = {stage_group("A", 1, q * q * q)};
      c.terminal_rank = 1;
      c.terminal_field_power = 3;
      break;
    case Family::TwE6:
      c.stages = {stage_group("A", 2, q * q)};
      c.terminal_rank = 2;
      c.terminal_field_power = 2;
      break;
    case Family::TwF4:
      c.stages = {stage_group("A", 1, q)};
      c.terminal_rank = 1;
      c.terminal_field_power = 1;
      c.characteristic_note = true;  // source table prints A1(3^(2n+1)) here
      break;
    case Family::TwG2:
      c.stages = {stage_group("A", 1, q)};
      c.terminal_rank = 1;
      c.terminal_field_power = 1;
      break;
    case Family::TwB2: break;  // unreachable
  }
  // (q^a)^floor((r'+1)/2) >= q^(c r / 4), compared in the exponents.
  uint64_t lhs = uint64_t(4) * c.terminal_field_power * ((c.terminal_rank + 1) / 2);
  uint64_t rhs = uint64_t(spec.realization_exponent()) * spec.rank;
  c.implies_generic_lower = lhs >= rhs;
  return c;
}

UpperChain upper_bound_embedding(const GroupSpec& spec) {
  spec.validate();
  UpperChain c;
  const uint64_t q = spec.q;
  const uint64_t q2 = q * q;
  const uint32_t d = spec.rank;
  const uint32_t u = spec.untwisted_rank();
  switch (spec.family) {
    case Family::A:
      c.stages = {stage_sl("PSL", d + 1, q)};
      c.carrier_dim = d + 1;
      c.carrier_field_power = 1;
      break;
    case Family::B:
    case Family::C:
    case Family::D:
    case Family::TwA:
    case Family::TwD:
      // Classical groups embed in PSL_{2u+1}(q^2); blow the field back down.
      c.carrier_dim = 2 * u + 1;
      c.carrier_field_power = 2;
      c.stages = {stage_sl("PSL", c.carrier_dim, q2), stage_sl("PSL", 2 * c.carrier_dim, q)};
      break;
    case Family::E6:
    case Family::E7:
    case Family::E8:
    case Family::F4:
    case Family::G2:
      // Adjoint module over the defining field.
      c.carrier_dim = spec.lie_algebra_dim();
      c.carrier_field_power = 1;
      c.stages = {stage_sl("SL", c.carrier_dim, q)};
      break;
    case Family::TwE6:
    case Family::TwF4:
    case Family::TwG2:
    case Family::TwB2: {
      // Fixed points of an automorphism of the untwisted group over q^2.
      c.carrier_dim = spec.lie_algebra_dim();
      c.carrier_field_power = 2;
      std::string fam = spec.family == Family::TwE6   ? "E"
                        : spec.family == Family::TwF4 ? "F"
                        : spec.family == Family::TwG2 ? "G"
                                                      : "B";
      c.stages = {stage_group(fam, u, q2), stage_sl("SL", c.carrier_dim, q2),
                  stage_sl("SL", 2 * c.carrier_dim, q)};
      break;
    }
    case Family::Tr3D4: {
      uint64_t q3 = q * q * q;
      c.carrier_dim = spec.lie_algebra_dim();  // dim D4 = 28
      c.carrier_field_power = 3;
      c.stages = {stage_group("D", 4, q3), stage_sl("SL", c.carrier_dim, q3),
                  stage_sl("SL", 3 * c.carrier_dim, q)};
      break;
    }
  }
  c.final_dim = c.carrier_dim * c.carrier_field_power;
  c.dim_within_31r = c.carrier_dim <= 31 * spec.rank;
  c.constructed_log10 = identity_length_log10(c.final_dim, q);

  double headline_log10;
  if (spec.family == Family::A) {
    headline_log10 = std::log10(double(d + 3) * (d + 3) * d) + (double(d) + 1) * std::log10(double(q));
  } else {
    headline_log10 = 3 * std::log10(31.0 * d + 2) + 31.0 * d * std::log10(double(q));
  }
  c.within_headline_bound = c.constructed_log10 <= headline_log10 + 1e-9;
  return c;
}

BoundsReport alpha_bounds(const GroupSpec& spec) {
  spec.validate();
  BoundsReport r;
  r.spec = spec;
  r.q_star = spec.q_star();
  const uint64_t q = spec.q;
  const uint32_t d = spec.rank;

  // ---- lower bound ----
  if (spec.family == Family::A) {
    uint32_t k = (d + 1) / 2;
    BigUInt qk = BigUInt::pow(q, k);
    r.lower.closed_form = "(q^" + std::to_string(k) + " - 1)/3";
    r.lower.source = "rank-1 certificate via A1(q^" + std::to_string(k) + ") <= A_d(q)";
    r.lower.approx = (std::pow(double(q), double(k)) - 1) / 3;
    r.lower.log10 = r.lower.approx > 0 ? std::log10(r.lower.approx)
                                       : -std::numeric_limits<double>::infinity();
    if (qk.limb.size() == 1 && qk.limb[0] <= uint64_t(1) << 62) {
      int64_t num = int64_t(qk.limb[0]) - 1;
      r.lower.exact = Rational{num, 3};
      r.lower.ceiling = (num + 2) / 3;
      r.lower.strict_floor = num / 3 + 1;
      r.lower.approx = double(num) / 3.0;
    }
  } else if (spec.family == Family::TwB2) {
    // q = 2^(2n+1): (2^(2n) - 1)/(1 + 2^n)
    uint32_t e = 0;
    for (uint64_t t = q; t > 1; t >>= 1) ++e;
    uint32_t n = (e - 1) / 2;
    int64_t num = int64_t((q >> 1) - 1);            // 2^(2n) - 1
    int64_t den = int64_t(1 + (uint64_t(1) << n));  // 1 + 2^n
    r.lower.closed_form = "(2^" + std::to_string(2 * n) + " - 1)/(1 + 2^" + std::to_string(n) + ")";
    r.lower.source = "Suzuki-specific bound";
    r.lower.exact = Rational{num, den};
    r.lower.approx = double(num) / double(den);
    r.lower.log10 = num == 0 ? -std::numeric_limits<double>::infinity() : std::log10(r.lower.approx);
    r.lower.ceiling = (num + den - 1) / den;
    r.lower.strict_floor = num / den + 1;
  } else {
    uint32_t cexp = spec.realization_exponent();
    uint32_t cr = cexp * d;  // q*^(r/4) = q^(cr/4)
    r.lower.closed_form = "(q*^(" + std::to_string(d) + "/4) - 1)/3";
    r.lower.source = "generic lower bound via the A-type subgroup chain";
    // q^(cr/4) <= q^9 on the validated range, so doubles are exact enough here
    r.lower.approx = (std::pow(double(q), double(cr) / 4) - 1) / 3;
    r.lower.log10 = r.lower.approx > 0 ? std::log10(r.lower.approx)
                                       : -std::numeric_limits<double>::infinity();
    if (cr % 4 == 0) {
      BigUInt v = BigUInt::pow(q, cr / 4);
      if (v.limb.size() == 1 && v.limb[0] <= uint64_t(1) << 62) {
        int64_t num = int64_t(v.limb[0]) - 1;
        r.lower.exact = Rational{num, 3};
        r.lower.ceiling = (num + 2) / 3;
        r.lower.strict_floor = num / 3 + 1;
      }
    } else {
      // Exact ceiling through the integer fourth root of q^(cr).
      uint64_t s_floor = floor_fourth_root(BigUInt::pow(q, cr));
      if (s_floor <= (uint64_t(1) << 62)) {
        // q^(cr/4) is irrational here, so (s-1)/3 is never an integer.
        r.lower.ceiling = int64_t((s_floor - 1) / 3) + 1;
        r.lower.strict_floor = r.lower.ceiling;
      }
    }
  }

  // ---- upper bound ----
  if (spec.family == Family::A) {
    BigUInt v = BigUInt(uint64_t(d + 3) * (d + 3) * d).mul(BigUInt::pow(q, d + 1));
    r.upper.closed_form = "(d+3)^2 d q^(d+1)";
    r.upper.source = "power-word identity in SL_" + std::to_string(d + 1) + "(q)";
    r.upper.decimal = v.decimal();
    r.upper.log10 = std::log10(double(d + 3) * (d + 3) * d) + (double(d) + 1) * std::log10(double(q));
  } else {
    uint64_t coeff = uint64_t(31 * d + 2);
    BigUInt v = BigUInt(coeff * coeff * coeff).mul(BigUInt::pow(q, 31 * d));
    r.upper.closed_form = "(31r+2)^3 q^(31r)";
    r.upper.source = "power-word identity through the dimension-table embedding";
    r.upper.decimal = v.decimal();
    r.upper.log10 = 3 * std::log10(double(coeff)) + 31.0 * d * std::log10(double(q));
  }

  if (spec.family != Family::TwB2) r.lower_chain = lower_bound_embedding(spec);
  r.upper_chain = upper_bound_embedding(spec);
  r.lower_below_upper = r.lower.log10 < r.upper.log10;
  return r;
}

bool verbal_subgroup_guarantee(const GroupSpec& spec, int64_t word_length) {
  spec.validate();
  if (word_length < 1) throw std::invalid_argument("verbal_subgroup_guarantee: length must be >= 1");
  // l < (q*^(r/4) - 1)/3  <=>  (3l+1)^4 < q*^r, exactly.
  BigUInt lhs = BigUInt::pow(uint64_t(3 * word_length + 1), 4);
  BigUInt rhs = BigUInt::pow(spec.q_star(), spec.rank);
  return BigUInt::cmp(lhs, rhs) < 0;
}

}  // namespace lawforge
