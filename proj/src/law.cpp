#include "lawforge/law.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

namespace lawforge {

namespace {

unsigned __int128 gcd128(unsigned __int128 a, unsigned __int128 b) {
  while (b) {
    unsigned __int128 t = a % b;
    a = b;
    b = t;
  }
  return a;
}

int64_t abs64(int64_t v) { return v >= 0 ? v : -v; }

// Formal (pre-reduction) length ledger used alongside the word construction.
struct Built {
  Word word;
  int64_t formal = 0;
};

Built formal_commutator(const Built& a, const Built& b) {
  return {commutator(a.word, b.word), 2 * a.formal + 2 * b.formal};
}

}  // namespace

ExponentDecomposition sl_exponent(uint32_t n, const FieldPtr& ctx) {
  if (n < 2) throw std::invalid_argument("sl_exponent: n must be >= 2");
  ExponentDecomposition d;
  d.n = n;
  d.q = ctx->q();
  d.p = ctx->p();
  d.e = 1;
  uint64_t pe = d.p;
  while (pe < n) {
    pe *= d.p;
    ++d.e;
  }
  d.p_part = pe;
  unsigned __int128 l = 1;
  unsigned __int128 qj = 1;
  for (uint32_t j = 1; j + 1 <= n; ++j) {
    qj *= d.q;
    unsigned __int128 term = qj - 1;  // q^j - 1
    l = l / gcd128(l, term) * term;
  }
  // (q^n - 1)/(q - 1) = q^(n-1) + ... + 1
  unsigned __int128 ratio = 0, pw = 1;
  for (uint32_t j = 0; j < n; ++j) {
    ratio += pw;
    pw *= d.q;
  }
  l = l / gcd128(l, ratio) * ratio;
  d.lcm_part = l;
  d.total = (unsigned __int128)pe * l;
  return d;
}

PowerSchedule power_word_schedule(uint32_t n, const FieldPtr& ctx) {
  if (n < 2) throw std::invalid_argument("power_word_schedule: n must be >= 2");
  uint64_t q = ctx->q();
  ExponentDecomposition d = sl_exponent(n, ctx);

  std::vector<int64_t> exps;
  // Ratio word (q^n-1)/(q-1): kills the maximal-order semisimple classes.
  unsigned __int128 ratio = 0, pw = 1;
  for (uint32_t j = 0; j < n; ++j) {
    ratio += pw;
    pw *= q;
  }
  if (ratio > (unsigned __int128)(~uint64_t(0) >> 1))
    throw std::overflow_error("power_word_schedule: exponent exceeds 64 bits");
  exps.push_back(int64_t(ratio));
  // p^e (q^j - 1) for the upper half of splitting degrees; lower degrees are
  // absorbed since q^j - 1 divides q^(2j) - 1.
  for (uint32_t j = (n + 1) / 2; j <= n - 1; ++j) {
    unsigned __int128 qj = 1;
    for (uint32_t t = 0; t < j; ++t) qj *= q;
    unsigned __int128 v = (unsigned __int128)d.p_part * (qj - 1);
    if (v > (unsigned __int128)(~uint64_t(0) >> 1))
      throw std::overflow_error("power_word_schedule: exponent exceeds 64 bits");
    exps.push_back(int64_t(v));
  }
  PowerSchedule s;
  s.ratio_exponent = exps[0];
  std::sort(exps.rbegin(), exps.rend());
  s.exponents = exps;
  for (int64_t e : exps) s.words.push_back(Word::power(1, e));
  if (s.words.size() != (n + 2) / 2)
    throw std::logic_error("power_word_schedule: unexpected schedule size");
  return s;
}

LawRecipe commutator_tree(const std::vector<Word>& schedule) {
  if (schedule.empty()) throw std::invalid_argument("commutator_tree: empty schedule");
  const uint32_t m = uint32_t(schedule.size());
  std::vector<int64_t> lens;
  for (const Word& w : schedule) {
    if (w.empty() || w.syllables().size() != 1 || w.syllables()[0].gen != 1 ||
        w.syllables()[0].exp <= 0)
      throw std::invalid_argument("commutator_tree: schedule entries must be positive powers of x1");
    lens.push_back(w.length());
  }
  for (size_t i = 0; i + 1 < lens.size(); ++i)
    if (lens[i] < lens[i + 1])
      throw std::invalid_argument("commutator_tree: schedule must be sorted by non-increasing length");

  uint32_t k = 1;
  while (2u * k <= m) k *= 2;  // 2^floor(log2 m)

  std::vector<Built> blocks;
  const uint32_t paired = m / 2;
  for (uint32_t i = 1; i <= paired; ++i) {
    // u_i = [w_{2i-1}(x1), w_{2i}(x1^{x_{i+1}})]
    const Word& wa = schedule[2 * i - 2];
    const Word& wb = schedule[2 * i - 1];
    Word conj = Word::power(1, 1).conjugate_by(Word::letter(int32_t(i + 1)));
    Word wb_sub = wb.substitute({{1, conj}});
    Built a{wa, wa.length()};
    Built b{wb_sub, wb.length() + 2};
    blocks.push_back(formal_commutator(a, b));
  }
  if (blocks.size() < k) {
    // Block floor(m/2)+1 uses w_m for odd m, a bare x1 otherwise.
    uint32_t idx = paired + 1;
    Word fresh = Word::letter(int32_t(idx + 1));
    if (m % 2 == 1) {
      const Word& wm = schedule[m - 1];
      blocks.push_back(formal_commutator({wm, wm.length()}, {fresh, 1}));
    } else {
      blocks.push_back(formal_commutator({Word::letter(1), 1}, {fresh, 1}));
    }
  }
  for (uint32_t i = paired + 2; i <= k; ++i)
    blocks.push_back(formal_commutator({Word::letter(1), 1}, {Word::letter(int32_t(i + 1)), 1}));
  if (blocks.size() != k) throw std::logic_error("commutator_tree: block count mismatch");

  // Each u_j owns the fresh letter x_{j+1}; no other block mentions it, so
  // the tree word cannot reduce to the empty word.
  for (uint32_t j = 0; j < k; ++j) {
    int32_t fresh = int32_t(j + 2);
    if (!blocks[j].word.support().count(fresh))
      throw std::logic_error("commutator_tree: block missing its fresh letter");
    for (uint32_t t = 0; t < k; ++t)
      if (t != j && blocks[t].word.support().count(fresh))
        throw std::logic_error("commutator_tree: fresh letter leaked across blocks");
  }

  // Balanced binary nesting.
  std::vector<Built> level = blocks;
  std::string shape;
  {
    std::vector<std::string> names;
    for (uint32_t j = 1; j <= k; ++j) names.push_back("u" + std::to_string(j));
    while (names.size() > 1) {
      std::vector<std::string> next;
      for (size_t i = 0; i + 1 < names.size(); i += 2)
        next.push_back("[" + names[i] + "," + names[i + 1] + "]");
      names = next;
    }
    shape = names[0];
  }
  while (level.size() > 1) {
    std::vector<Built> next;
    for (size_t i = 0; i + 1 < level.size(); i += 2)
      next.push_back(formal_commutator(level[i], level[i + 1]));
    level = std::move(next);
  }

  LawRecipe r;
  for (const Word& w : schedule) r.schedule.push_back(w.length());
  r.m = m;
  r.k = k;
  for (const Built& b : blocks) r.blocks.push_back(b.word);
  r.tree_shape = shape;
  r.word = level[0].word;
  r.formal_length = level[0].formal;
  r.reduced_length = r.word.length();
  r.tree_bound = 4 * int64_t(m) * int64_t(m) * (lens[0] + 1);
  r.bounds_hold = r.formal_length <= r.tree_bound;
  if (r.word.empty()) throw std::logic_error("commutator_tree: produced the empty word");
  return r;
}

LawRecipe build_sl_identity(uint32_t n, const FieldPtr& ctx) {
  PowerSchedule s = power_word_schedule(n, ctx);
  LawRecipe r = commutator_tree(s.words);
  ExponentDecomposition d = sl_exponent(n, ctx);
  unsigned __int128 qpow = 1;
  for (uint32_t i = 0; i + 1 < n; ++i) qpow *= ctx->q();
  unsigned __int128 bound =
      (unsigned __int128)(n + 2) * (n + 2) * d.p_part * qpow;
  if (bound > (unsigned __int128)(~uint64_t(0) >> 1))
    throw std::overflow_error("build_sl_identity: bound exceeds 64 bits");
  r.group_bound = int64_t(bound);
  r.bounds_hold = r.bounds_hold && r.formal_length <= *r.group_bound;
  if (!r.bounds_hold) throw std::logic_error("build_sl_identity: length bound violated");
  return r;
}

Word lift_through_center(const Word& w) {
  if (w.empty()) throw std::invalid_argument("lift_through_center: word must be non-trivial");
  int32_t fresh = w.max_support_index() + 1;
  return commutator(w, Word::letter(fresh));
}

}  // namespace lawforge
