#ifndef LAWFORGE_SEARCH_HPP
#define LAWFORGE_SEARCH_HPP

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "lawforge/matrix.hpp"
#include "lawforge/verify.hpp"
#include "lawforge/word.hpp"

namespace lawforge {

struct SearchConfig {
  int32_t max_length = 0;       // 0: default to exp(G), so a law always exists
  int32_t max_generators = 0;   // 0: default to max_length
  bool symmetry_reduction = true;
  double prune_sample_rate = 0.01;  // fraction of pruned candidates kept for re-checking
  uint64_t prune_sample_seed = 1;
  int64_t budget = default_budget();
  unsigned jobs = 1;
};

struct SearchResult {
  std::optional<int32_t> alpha;      // empty: no law of length <= searched_to
  int32_t searched_to = 0;
  std::vector<Word> witnesses;       // all minimal canonical laws
  uint64_t words_tested = 0;         // candidates that reached group evaluation
  uint64_t candidates_enumerated = 0;
  uint64_t pruned_by_parity = 0;
  uint64_t pruned_by_exponent_sum = 0;
  std::vector<Word> pruned_sample;   // seeded sample of pruned candidates
  uint64_t exponent = 0;             // exp(G) used by the pruning filters
};

/// All cyclically reduced non-trivial words of exactly the given length, one
/// canonical representative per symmetry class.  The symmetries are generator
/// renaming, per-generator inversion, whole-word inversion and cyclic
/// rotation; each preserves the law property, and conjugates collapse to
/// their cyclic reduction, so minimal laws are found among these words.
std::vector<Word> canonical_words_of_length(int32_t length, int32_t max_generators);

/// Canonical representatives of every length 1..max_length.
std::vector<Word> enumerate_canonical_words(int32_t max_length, int32_t max_generators);

/// Exact alpha(G) for tiny groups: streams canonical candidates by length,
/// prunes by parity (odd length below exp(G)) and per-generator exponent sums
/// (a surviving candidate must have every nonzero sum divisible by exp(G)),
/// and verifies survivors exhaustively.
SearchResult shortest_law(const GroupHandle& h, const SearchConfig& cfg);

struct ConsistencyReport {
  std::string group;
  int32_t alpha_or_floor = 0;       // alpha, or searched_to + 1 when no law found
  bool alpha_exact = false;
  int64_t bound_numerator = 0;      // paper-style lower bound as a rational
  int64_t bound_denominator = 1;
  int64_t bound_ceiling = 0;
  bool consistent = false;
};

/// Compares a search outcome against the rank-1 style lower bound
/// (q^floor(n/2) - 1)/3 for the handle viewed as (P)SL_n(q).
ConsistencyReport lower_bound_consistency(const GroupHandle& h, const SearchResult& result);

}  // namespace lawforge

#endif
