#ifndef LAWFORGE_LAW_HPP
#define LAWFORGE_LAW_HPP

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "lawforge/field.hpp"
#include "lawforge/word.hpp"

namespace lawforge {

/// exp(SL_n(q)) = p^e * lcm[q-1, q^2-1, ..., q^(n-1)-1, (q^n-1)/(q-1)]
/// with e minimal such that p^e >= n.
struct ExponentDecomposition {
  uint32_t n = 0;
  uint64_t q = 0;
  uint32_t p = 0;
  uint32_t e = 0;             // minimal with p^e >= n
  uint64_t p_part = 0;        // p^e
  unsigned __int128 lcm_part = 0;
  unsigned __int128 total = 0;
  std::optional<uint64_t> total_u64() const {
    if (total > ~uint64_t(0)) return std::nullopt;
    return uint64_t(total);
  }
};

ExponentDecomposition sl_exponent(uint32_t n, const FieldPtr& ctx);

/// One-variable annihilator schedule of the identity construction: the
/// power words X^((q^n-1)/(q-1)) and X^(p^e(q^j-1)) for ceil(n/2) <= j <= n-1,
/// sorted by non-increasing length.  Every element of SL_n(q) satisfies at
/// least one of them.
struct PowerSchedule {
  std::vector<int64_t> exponents;  // sorted non-increasing
  std::vector<Word> words;         // X^e on x1, same order
  int64_t ratio_exponent = 0;      // (q^n-1)/(q-1); its position in the sort
                                   // depends on (n, q), so it is recorded here
};

PowerSchedule power_word_schedule(uint32_t n, const FieldPtr& ctx);

/// Output of the balanced commutator-tree combiner.
struct LawRecipe {
  std::vector<int64_t> schedule;   // input power-word exponents, non-increasing
  uint32_t m = 0;                  // schedule size
  uint32_t k = 0;                  // 2^floor(log2 m) blocks
  std::vector<Word> blocks;        // u_1, ..., u_k
  std::string tree_shape;          // nesting of the balanced commutator tree
  Word word;                       // final reduced word
  int64_t formal_length = 0;       // pre-reduction construction length
  int64_t reduced_length = 0;
  int64_t tree_bound = 0;          // 4 m^2 (l(w1)+1)
  std::optional<int64_t> group_bound;  // (n+2)^2 p^e q^(n-1), set by build_sl_identity
  bool bounds_hold = false;
};

/// Balanced commutator tree over a sorted schedule of one-variable power
/// words on x1.  Blocks pair consecutive schedule words, conjugating the
/// second by a fresh generator; leftover blocks are plain commutators with
/// fresh generators; the tree nests blocks in balanced binary fashion.
LawRecipe commutator_tree(const std::vector<Word>& schedule);

/// The explicit identity of SL_n(q): schedule + commutator tree, with both
/// length bounds checked.  The word also holds in every quotient, in
/// particular PSL_n(q).
LawRecipe build_sl_identity(uint32_t n, const FieldPtr& ctx);

/// [w, x_j] with j fresh: an identity of H = G/Z lifts to one of the central
/// extension G.
Word lift_through_center(const Word& w);

}  // namespace lawforge

#endif
