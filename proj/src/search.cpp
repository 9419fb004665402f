#include "lawforge/search.hpp"

#include <algorithm>
#include <random>
#include <stdexcept>

namespace lawforge {

namespace {

// Letters are +gen / -gen; canonical order is (generator, sign) with the
// positive letter first.
int32_t letter_rank(int32_t l) { return (std::abs(l) << 1) | (l < 0 ? 1 : 0); }

bool letter_seq_less(const std::vector<int32_t>& a, const std::vector<int32_t>& b) {
  for (size_t i = 0; i < a.size() && i < b.size(); ++i) {
    if (letter_rank(a[i]) != letter_rank(b[i])) return letter_rank(a[i]) < letter_rank(b[i]);
  }
  return a.size() < b.size();
}

// Relabel generators by first occurrence and flip signs so every generator's
// first occurrence is positive.  Canonical form for the renaming-and-flip
// subgroup of the symmetry group.
std::vector<int32_t> rename_normalize(const std::vector<int32_t>& letters) {
  std::vector<int32_t> out;
  out.reserve(letters.size());
  std::vector<std::pair<int32_t, int32_t>> map;  // old gen -> (new gen, sign flip)
  int32_t next = 1;
  for (int32_t l : letters) {
    int32_t g = std::abs(l);
    int32_t sign = l > 0 ? 1 : -1;
    auto it = std::find_if(map.begin(), map.end(), [&](auto& pr) { return pr.first == g; });
    if (it == map.end()) {
      map.push_back({g, sign});  // flip so this first occurrence reads positive
      it = map.end() - 1;
    }
    int32_t new_gen = int32_t(it - map.begin()) + 1;
    (void)next;
    out.push_back(sign * it->second > 0 ? new_gen : -new_gen);
  }
  return out;
}

std::vector<int32_t> rotate_letters(const std::vector<int32_t>& letters, size_t by) {
  std::vector<int32_t> out(letters.begin() + by, letters.end());
  out.insert(out.end(), letters.begin(), letters.begin() + by);
  return out;
}

std::vector<int32_t> invert_letters(const std::vector<int32_t>& letters) {
  std::vector<int32_t> out(letters.rbegin(), letters.rend());
  for (auto& l : out) l = -l;
  return out;
}

bool is_orbit_minimum(const std::vector<int32_t>& w) {
  for (int inv = 0; inv < 2; ++inv) {
    std::vector<int32_t> base = inv ? invert_letters(w) : w;
    for (size_t t = 0; t < w.size(); ++t) {
      std::vector<int32_t> cand = rename_normalize(rotate_letters(base, t));
      if (letter_seq_less(cand, w)) return false;
    }
  }
  return true;
}

Word word_from_letters(const std::vector<int32_t>& letters) {
  std::vector<Syllable> syl;
  for (int32_t l : letters) syl.push_back({std::abs(l), l > 0 ? 1 : -1});
  return Word::from_syllables(syl);
}

void generate(std::vector<int32_t>& cur, int32_t length, int32_t max_gens, int32_t max_used,
              std::vector<Word>& out) {
  if (int32_t(cur.size()) == length) {
    // Cyclic reducedness: the last letter must not cancel the first.
    if (length > 1 && cur.back() == -cur.front()) return;
    if (!is_orbit_minimum(cur)) return;
    out.push_back(word_from_letters(cur));
    return;
  }
  int32_t limit = std::min(max_gens, max_used + 1);
  for (int32_t g = 1; g <= limit; ++g) {
    for (int32_t sign : {1, -1}) {
      if (g > max_used && sign < 0) continue;  // first occurrence reads positive
      int32_t l = sign * g;
      if (!cur.empty() && cur.back() == -l) continue;  // stay freely reduced
      cur.push_back(l);
      generate(cur, length, max_gens, std::max(max_used, g), out);
      cur.pop_back();
    }
  }
}

}  // namespace

std::vector<Word> canonical_words_of_length(int32_t length, int32_t max_generators) {
  if (length < 1) throw std::invalid_argument("canonical_words_of_length: length must be >= 1");
  if (max_generators < 1)
    throw std::invalid_argument("canonical_words_of_length: need at least one generator");
  std::vector<Word> out;
  std::vector<int32_t> cur;
  generate(cur, length, max_generators, 0, out);
  return out;
}

std::vector<Word> enumerate_canonical_words(int32_t max_length, int32_t max_generators) {
  std::vector<Word> out;
  for (int32_t l = 1; l <= max_length; ++l) {
    auto batch = canonical_words_of_length(l, max_generators);
    out.insert(out.end(), batch.begin(), batch.end());
  }
  return out;
}

SearchResult shortest_law(const GroupHandle& h, const SearchConfig& cfg) {
  SearchResult res;
  res.exponent = brute_exponent(h);
  const int32_t L = cfg.max_length > 0 ? cfg.max_length : int32_t(res.exponent);
  const int32_t gens = cfg.max_generators > 0 ? cfg.max_generators : L;
  res.searched_to = L;

  std::mt19937_64 sample_rng(cfg.prune_sample_seed);
  std::uniform_real_distribution<double> unit(0.0, 1.0);
  auto maybe_keep_pruned = [&](const Word& w) {
    if (unit(sample_rng) < cfg.prune_sample_rate) res.pruned_sample.push_back(w);
  };

  for (int32_t len = 1; len <= L; ++len) {
    auto candidates = canonical_words_of_length(len, std::min(gens, len));
    bool found_at_len = false;
    for (const Word& w : candidates) {
      ++res.candidates_enumerated;
      if (len % 2 == 1 && uint64_t(len) < res.exponent) {
        ++res.pruned_by_parity;
        maybe_keep_pruned(w);
        continue;
      }
      bool pruned = false;
      for (const auto& [gen, sum] : w.exponent_sums()) {
        if (sum != 0 && sum % int64_t(res.exponent) != 0) {
          pruned = true;
          break;
        }
      }
      if (pruned) {
        ++res.pruned_by_exponent_sum;
        maybe_keep_pruned(w);
        continue;
      }
      ++res.words_tested;
      VerificationReport vr = verify_exhaustive(w, h, cfg.budget, cfg.jobs);
      if (vr.verdict == Verdict::Identity) {
        found_at_len = true;
        res.witnesses.push_back(w);
      }
    }
    if (found_at_len) {
      res.alpha = len;
      break;
    }
  }
  return res;
}

ConsistencyReport lower_bound_consistency(const GroupHandle& h, const SearchResult& result) {
  if (h.kind() != GroupKind::SL && h.kind() != GroupKind::PSL)
    throw std::invalid_argument("lower_bound_consistency: need an SL or PSL handle");
  ConsistencyReport r;
  r.group = h.describe();
  if (result.alpha) {
    r.alpha_or_floor = *result.alpha;
    r.alpha_exact = true;
  } else {
    r.alpha_or_floor = result.searched_to + 1;
    r.alpha_exact = false;
  }
  // (q^floor(n/2) - 1)/3, the rank-1 style bound for the handle read as
  // A_{n-1}(q).  Vacuous below 1 (e.g. the non-simple q = 2 edge) but defined.
  uint64_t q = h.ctx()->q();
  int64_t num = 1;
  for (uint32_t i = 0; i < h.n() / 2; ++i) num *= int64_t(q);
  num -= 1;
  r.bound_numerator = num;
  r.bound_denominator = 3;
  r.bound_ceiling = (num + 2) / 3;  // ceil(num/3) for non-negative num
  r.consistent = int64_t(r.alpha_or_floor) >= r.bound_ceiling;
  return r;
}

}  // namespace lawforge
