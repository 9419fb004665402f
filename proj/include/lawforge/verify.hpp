#ifndef LAWFORGE_VERIFY_HPP
#define LAWFORGE_VERIFY_HPP

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "lawforge/matrix.hpp"
#include "lawforge/word.hpp"

namespace lawforge {

enum class Verdict { Identity, Counterexample, ProbablyIdentity };

std::string verdict_name(Verdict v);

struct VerificationReport {
  std::string mode;  // "exhaustive" | "randomized" | "parity"
  uint64_t tuples_checked = 0;
  Verdict verdict = Verdict::Identity;
  std::vector<SquareMatrix> counterexample;  // assignment in support order
  std::vector<int32_t> support;              // generators, ascending
  std::optional<uint64_t> counterexample_index;
  std::optional<uint64_t> seed;
  int64_t word_length = 0;
  int64_t multiplications = 0;  // canonical serial cost model
  bool parity_note = false;     // odd length below the group exponent
};

/// Global multiplication budget for exhaustive sweeps; overridable via the
/// LAWFORGE_BUDGET environment variable.
int64_t default_budget();

/// Sweeps every assignment of support generators to group elements.  Tuple
/// order is a mixed-radix counter over the deterministic enumeration with the
/// earliest support generator fastest; the first failing tuple is reported
/// and re-checked (reports are self-validating).  Deterministic for any jobs
/// count.
VerificationReport verify_exhaustive(const Word& w, const GroupHandle& h,
                                     int64_t budget = default_budget(), unsigned jobs = 1);

/// Evaluates at `samples` seeded uniform tuples; sample i derives its own
/// generator from (seed, i), so results do not depend on the jobs count.
VerificationReport verify_randomized(const Word& w, const GroupHandle& h, uint64_t samples,
                                     uint64_t seed, unsigned jobs = 1);

struct ParityReport {
  bool flagged = false;          // odd l(w) below exp(G): cannot be a law
  int64_t word_length = 0;
  unsigned __int128 exponent = 0;  // exponent used for the comparison
  bool exponent_exact = true;      // false when a stand-in multiple was used
  int32_t odd_generator = 0;       // generator with odd exponent sum
  int64_t witness_power = 0;       // killing all other generators leaves x^this
};

/// Parity filter: an identity shorter than exp(G) has even
/// length.  For enumerable groups the exponent is computed by brute force;
/// for large SL/PSL handles the SL_n(q) exponent formula is used (for PSL a
/// multiple of the true exponent, which keeps the flag sound for these
/// even-exponent groups: an odd partial exponent sum already yields a short
/// power word broken by any element of even order).
ParityReport parity_check(const Word& w, const GroupHandle& h);

/// Parity-aware pipeline: when the filter fires, produce a
/// counterexample-by-parity report with a constructive witness instead of
/// sweeping.
VerificationReport verify_with_parity(const Word& w, const GroupHandle& h, bool exhaustive,
                                      uint64_t samples, uint64_t seed,
                                      int64_t budget = default_budget(), unsigned jobs = 1);

}  // namespace lawforge

#endif
