#include "lawforge/verify.hpp"

#include <atomic>
#include <cstdlib>
#include <stdexcept>
#include <thread>

#include "lawforge/law.hpp"

namespace lawforge {

namespace {

uint64_t splitmix64(uint64_t x) {
  x += 0x9e3779b97f4a7c15ULL;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
  return x ^ (x >> 31);
}

std::vector<int32_t> support_vector(const Word& w) {
  auto s = w.support();
  return std::vector<int32_t>(s.begin(), s.end());
}

// Evaluate w at the assignment (support order) and compare with the identity.
bool tuple_passes(const Word& w, const GroupHandle& h, const std::vector<int32_t>& sup,
                  const std::vector<SquareMatrix>& tuple) {
  std::map<int32_t, SquareMatrix> asg;
  for (size_t i = 0; i < sup.size(); ++i) asg.emplace(sup[i], tuple[i]);
  SquareMatrix v = evaluate_word(w, asg, HandleOps{&h});
  return v.is_identity();
}

std::vector<SquareMatrix> decode_tuple(const std::vector<SquareMatrix>& els, size_t arity,
                                       uint64_t index) {
  std::vector<SquareMatrix> tuple;
  tuple.reserve(arity);
  uint64_t g = els.size();
  for (size_t i = 0; i < arity; ++i) {
    tuple.push_back(els[size_t(index % g)]);
    index /= g;
  }
  return tuple;
}

// Mixed-radix sweep worker with a reused assignment map (the earliest support
// generator is the fastest digit).
class TupleSweep {
 public:
  TupleSweep(const Word& w, const GroupHandle& h, const std::vector<int32_t>& sup)
      : w_(w), h_(h), sup_(sup) {
    for (int32_t g : sup) asg_.emplace(g, h.identity());
  }

  bool passes_at(const std::vector<SquareMatrix>& els, uint64_t index) {
    uint64_t g = els.size();
    for (int32_t gen : sup_) {
      asg_.find(gen)->second = els[size_t(index % g)];
      index /= g;
    }
    return evaluate_word(w_, asg_, HandleOps{&h_}).is_identity();
  }

  bool passes_tuple(const std::vector<SquareMatrix>& tuple) {
    for (size_t i = 0; i < sup_.size(); ++i) asg_.find(sup_[i])->second = tuple[i];
    return evaluate_word(w_, asg_, HandleOps{&h_}).is_identity();
  }

 private:
  const Word& w_;
  const GroupHandle& h_;
  const std::vector<int32_t>& sup_;
  std::map<int32_t, SquareMatrix> asg_;
};

}  // namespace

std::string verdict_name(Verdict v) {
  switch (v) {
    case Verdict::Identity: return "identity";
    case Verdict::Counterexample: return "counterexample";
    case Verdict::ProbablyIdentity: return "probably-identity";
  }
  return "?";
}

int64_t default_budget() {
  if (const char* env = std::getenv("LAWFORGE_BUDGET")) {
    char* end = nullptr;
    long long v = std::strtoll(env, &end, 10);
    if (end && *end == '\0' && v > 0) return v;
  }
  // Sized to admit 1e8 tuple evaluations of a typical constructed identity
  // (word costs run 20..100 multiplications per tuple).
  return 10000000000;  // 1e10 group multiplications
}

VerificationReport verify_exhaustive(const Word& w, const GroupHandle& h, int64_t budget,
                                     unsigned jobs) {
  if (w.empty())
    throw std::invalid_argument("verify_exhaustive: word must be non-trivial");
  const auto sup = support_vector(w);
  const auto& els = h.elements();
  const uint64_t g = els.size();

  unsigned __int128 total128 = 1;
  for (size_t i = 0; i < sup.size(); ++i) {
    total128 *= g;
    if (total128 > (unsigned __int128)(~uint64_t(0)))
      throw std::invalid_argument("verify_exhaustive: tuple space exceeds budget");
  }
  const uint64_t total = uint64_t(total128);
  const int64_t per_tuple = evaluation_cost(w);
  if ((unsigned __int128)total * per_tuple > (unsigned __int128)budget)
    throw std::invalid_argument("verify_exhaustive: multiplication budget exceeded");

  const unsigned njobs = std::max(1u, jobs);
  std::atomic<uint64_t> best{~uint64_t(0)};

  auto worker = [&](uint64_t lo, uint64_t hi) {
    TupleSweep sweep(w, h, sup);
    for (uint64_t idx = lo; idx < hi; ++idx) {
      if (idx >= best.load(std::memory_order_relaxed)) return;  // earlier hit exists
      if (!sweep.passes_at(els, idx)) {
        uint64_t cur = best.load(std::memory_order_relaxed);
        while (idx < cur && !best.compare_exchange_weak(cur, idx)) {
        }
        return;
      }
    }
  };

  if (njobs == 1 || total < 1024) {
    worker(0, total);
  } else {
    std::vector<std::thread> threads;
    uint64_t chunk = (total + njobs - 1) / njobs;
    for (unsigned t = 0; t < njobs; ++t) {
      uint64_t lo = t * chunk, hi = std::min(total, lo + chunk);
      if (lo >= hi) break;
      threads.emplace_back(worker, lo, hi);
    }
    for (auto& th : threads) th.join();
  }

  VerificationReport r;
  r.mode = "exhaustive";
  r.support = sup;
  r.word_length = w.length();
  uint64_t hit = best.load();
  if (hit == ~uint64_t(0)) {
    r.verdict = Verdict::Identity;
    r.tuples_checked = total;
  } else {
    r.verdict = Verdict::Counterexample;
    r.counterexample = decode_tuple(els, sup.size(), hit);
    r.counterexample_index = hit;
    r.tuples_checked = hit + 1;
    if (tuple_passes(w, h, sup, r.counterexample))
      throw std::logic_error("verify_exhaustive: counterexample failed re-validation");
  }
  r.multiplications = int64_t(r.tuples_checked) * per_tuple;
  return r;
}

VerificationReport verify_randomized(const Word& w, const GroupHandle& h, uint64_t samples,
                                     uint64_t seed, unsigned jobs) {
  if (w.empty())
    throw std::invalid_argument("verify_randomized: word must be non-trivial");
  if (samples == 0) throw std::invalid_argument("verify_randomized: samples must be >= 1");
  const auto sup = support_vector(w);
  const int64_t per_tuple = evaluation_cost(w);

  auto tuple_at = [&](uint64_t i) {
    std::mt19937_64 rng(splitmix64(seed ^ splitmix64(i)));
    std::vector<SquareMatrix> tuple;
    tuple.reserve(sup.size());
    for (size_t t = 0; t < sup.size(); ++t) tuple.push_back(h.sample_with(rng));
    return tuple;
  };

  const unsigned njobs = std::max(1u, jobs);
  std::atomic<uint64_t> best{~uint64_t(0)};
  auto worker = [&](uint64_t lo, uint64_t hi) {
    TupleSweep sweep(w, h, sup);
    for (uint64_t i = lo; i < hi; ++i) {
      if (i >= best.load(std::memory_order_relaxed)) return;
      if (!sweep.passes_tuple(tuple_at(i))) {
        uint64_t cur = best.load(std::memory_order_relaxed);
        while (i < cur && !best.compare_exchange_weak(cur, i)) {
        }
        return;
      }
    }
  };
  if (njobs == 1 || samples < 1024) {
    worker(0, samples);
  } else {
    std::vector<std::thread> threads;
    uint64_t chunk = (samples + njobs - 1) / njobs;
    for (unsigned t = 0; t < njobs; ++t) {
      uint64_t lo = t * chunk, hi = std::min(samples, lo + chunk);
      if (lo >= hi) break;
      threads.emplace_back(worker, lo, hi);
    }
    for (auto& th : threads) th.join();
  }

  VerificationReport r;
  r.mode = "randomized";
  r.support = sup;
  r.seed = seed;
  r.word_length = w.length();
  uint64_t hit = best.load();
  if (hit == ~uint64_t(0)) {
    r.verdict = Verdict::ProbablyIdentity;
    r.tuples_checked = samples;
  } else {
    r.verdict = Verdict::Counterexample;
    r.counterexample = tuple_at(hit);
    r.counterexample_index = hit;
    r.tuples_checked = hit + 1;
    if (tuple_passes(w, h, sup, r.counterexample))
      throw std::logic_error("verify_randomized: counterexample failed re-validation");
  }
  r.multiplications = int64_t(r.tuples_checked) * per_tuple;
  return r;
}

ParityReport parity_check(const Word& w, const GroupHandle& h) {
  ParityReport r;
  r.word_length = w.length();
  if (h.enumerable()) {
    r.exponent = brute_exponent(h);
    r.exponent_exact = true;
  } else if (h.kind() == GroupKind::SL || h.kind() == GroupKind::PSL) {
    r.exponent = sl_exponent(h.n(), h.ctx()).total;
    r.exponent_exact = h.kind() == GroupKind::SL;
  } else {
    throw std::invalid_argument("parity_check: no exponent available for " + h.describe());
  }
  if (r.word_length % 2 == 0) return r;
  if ((unsigned __int128)r.word_length >= r.exponent) return r;
  // Odd total length forces an odd exponent sum on some generator; killing
  // the rest leaves a short power word.
  for (const auto& [gen, sum] : w.exponent_sums()) {
    if (sum % 2 != 0) {
      r.flagged = true;
      r.odd_generator = gen;
      r.witness_power = sum;
      return r;
    }
  }
  throw std::logic_error("parity_check: odd length without odd exponent sum");
}

VerificationReport verify_with_parity(const Word& w, const GroupHandle& h, bool exhaustive,
                                      uint64_t samples, uint64_t seed, int64_t budget,
                                      unsigned jobs) {
  ParityReport p = parity_check(w, h);
  if (p.flagged) {
    // Constructive witness: an element whose order does not divide the odd
    // power-word exponent breaks w (all other generators set to identity).
    Word power = Word::power(1, p.witness_power);
    const auto sup = support_vector(w);
    VerificationReport r;
    r.mode = "parity";
    r.support = sup;
    r.word_length = w.length();
    r.verdict = Verdict::Counterexample;
    r.parity_note = true;
    bool found = false;
    if (h.enumerable()) {
      for (const auto& g : h.elements()) {
        std::map<int32_t, SquareMatrix> asg{{1, g}};
        if (!evaluate_word(power, asg, HandleOps{&h}).is_identity()) {
          std::vector<SquareMatrix> tuple;
          for (int32_t gen : sup) tuple.push_back(gen == p.odd_generator ? g : h.identity());
          r.counterexample = tuple;
          found = true;
          break;
        }
      }
    } else {
      for (uint64_t s = 0; s < 1024 && !found; ++s) {
        SquareMatrix g = h.sample(splitmix64(seed ^ s));
        std::map<int32_t, SquareMatrix> asg{{1, g}};
        if (!evaluate_word(power, asg, HandleOps{&h}).is_identity()) {
          std::vector<SquareMatrix> tuple;
          for (int32_t gen : sup) tuple.push_back(gen == p.odd_generator ? g : h.identity());
          r.counterexample = tuple;
          found = true;
        }
      }
    }
    if (!found) throw std::logic_error("verify_with_parity: no witness element found");
    if (tuple_passes(w, h, sup, r.counterexample))
      throw std::logic_error("verify_with_parity: witness failed re-validation");
    r.tuples_checked = 1;
    r.multiplications = evaluation_cost(w);
    return r;
  }
  VerificationReport r = exhaustive ? verify_exhaustive(w, h, budget, jobs)
                                    : verify_randomized(w, h, samples, seed, jobs);
  r.parity_note = false;
  return r;
}

}  // namespace lawforge
