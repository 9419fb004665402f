#ifndef LAWFORGE_ATLAS_HPP
#define LAWFORGE_ATLAS_HPP

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "lawforge/rational.hpp"

namespace lawforge {

/// Families of finite simple groups of Lie type; "Tw" marks twisted forms
/// (2A = unitary, 2D, 3D4, 2E6, 2F4, 2G2, 2B2 = Suzuki).
enum class Family {
  A, B, C, D, E6, E7, E8, F4, G2,
  TwA, TwD, Tr3D4, TwE6, TwF4, TwG2, TwB2,
};

std::string family_name(Family f);           // "A", "2A", "3D4", ...
Family parse_family(const std::string& s);
std::vector<Family> all_families();

/// A group of Lie type, identified by family, rank (the twisted-rank
/// convention: 2A_{2d} and 2A_{2d-1} |-> d, 2D_{d+1} |-> d, 3D4 |-> 2,
/// 2E6 |-> 4, 2F4 |-> 2, 2G2 |-> 1, 2B2 |-> 1) and field parameter q.
struct GroupSpec {
  Family family = Family::A;
  uint32_t rank = 1;
  uint64_t q = 2;

  /// Throws on undefined ranks, non-prime-power q, or Suzuki/Ree field
  /// constraints (2F4/2B2 need q = 2^(2n+1), 2G2 needs q = 3^(2n+1)).
  void validate() const;

  uint32_t realization_exponent() const;  // q* = q^this (1, 2 or 3)
  uint64_t q_star() const;
  uint32_t untwisted_rank() const;        // ambient Dynkin index
  uint32_t lie_algebra_dim() const;       // dim of the ambient Lie algebra
  std::string describe() const;           // e.g. "2A5? no: 2A(r=5, q=3)"
};

struct BoundSide {
  std::string closed_form;                 // human-readable formula instance
  std::optional<Rational> exact;           // exact rational when representable
  std::optional<int64_t> ceiling;          // least integer >= bound (when it fits)
  std::optional<int64_t> strict_floor;     // least integer > bound (when it fits)
  double approx = 0;                       // may be inf-ish for huge uppers; see log10
  double log10 = 0;
  std::string source;
};

struct UpperSide {
  std::string closed_form;
  std::string decimal;                     // exact integer, arbitrary precision
  double log10 = 0;
  std::string source;
};

struct LowerChain {
  std::vector<std::string> stages;   // e.g. {"2D2(9)", "A1(81)"}
  uint32_t terminal_rank = 0;        // r' of the terminal A_{r'}(q^a)
  uint32_t terminal_field_power = 0; // a
  bool implies_generic_lower = false;  // 4a*floor((r'+1)/2) >= c*r
  bool characteristic_note = false;  // 2F4 table row stored against its source
};

struct UpperChain {
  std::vector<std::string> stages;
  uint32_t carrier_dim = 0;            // N of the SL_N(q^a) stage carrying the identity
  uint32_t carrier_field_power = 0;    // a
  uint32_t final_dim = 0;            // N*a after the base-field blow-up
  bool dim_within_31r = false;       // N <= 31 r
  double constructed_log10 = 0;      // power-word identity length at the final stage
  bool within_headline_bound = false; // constructed length <= headline upper bound
};

struct BoundsReport {
  GroupSpec spec;
  uint64_t q_star = 0;
  BoundSide lower;
  UpperSide upper;
  std::optional<LowerChain> lower_chain;  // absent for Suzuki
  UpperChain upper_chain;
  bool lower_below_upper = false;
};

/// Two-sided bounds on the shortest-identity length: the sharp A-family
/// form for A_d(q), the Suzuki-specific bound for 2B2, and the generic
/// (q*^(r/4)-1)/3 <= alpha < (31r+2)^3 q^(31r) everywhere else.
BoundsReport alpha_bounds(const GroupSpec& spec);

/// Subgroup chain from spec down to an A-type group realizing the lower
/// bound.  Throws for 2B2 (no such chain; the Suzuki bound is direct).
LowerChain lower_bound_embedding(const GroupSpec& spec);

/// Embedding chain into (P)SL_N(q') carrying the power-word identity, plus
/// the final base-field blow-up stage when q' != q.
UpperChain upper_bound_embedding(const GroupSpec& spec);

/// True iff a non-trivial word of the given length is guaranteed to generate
/// the whole group verbally: l < (q*^(r/4) - 1)/3, compared exactly.
bool verbal_subgroup_guarantee(const GroupSpec& spec, int64_t word_length);

/// Valid ranks for grid sweeps: fixed-rank families yield one entry.
std::vector<uint32_t> valid_ranks(Family f, uint32_t max_rank);
bool valid_field(Family f, uint64_t q);

}  // namespace lawforge

#endif
