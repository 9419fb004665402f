#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "lawforge/law.hpp"
#include "lawforge/verify.hpp"

using namespace lawforge;

TEST_CASE("exhaustive verdicts for power words over SL2(2)") {
  GroupHandle h = GroupHandle::parse("SL(2,2)");
  auto r6 = verify_exhaustive(Word::power(1, 6), h);
  CHECK(r6.verdict == Verdict::Identity);
  CHECK(r6.tuples_checked == 6);

  auto r2 = verify_exhaustive(Word::power(1, 2), h);
  CHECK(r2.verdict == Verdict::Counterexample);
  CHECK(r2.counterexample.size() == 1);
  // the reported element really breaks x^2
  CHECK(!r2.counterexample[0].pow(2).is_identity());

  CHECK_THROWS_AS(verify_exhaustive(Word(), h), std::invalid_argument);
}

TEST_CASE("tuples_checked counts the full cube on identity verdicts") {
  GroupHandle h = GroupHandle::parse("SL(2,3)");
  Word w = commutator(Word::power(1, 12), Word::letter(2));  // [x^exp, y] is a law
  auto r = verify_exhaustive(w, h);
  CHECK(r.verdict == Verdict::Identity);
  CHECK(r.tuples_checked == 24 * 24);
}

TEST_CASE("parallel sweep agrees with serial and reports the least counterexample") {
  GroupHandle h = GroupHandle::parse("SL(2,3)");
  Word w = commutator(Word::letter(1), Word::letter(2));  // not a law
  auto serial = verify_exhaustive(w, h, default_budget(), 1);
  auto parallel = verify_exhaustive(w, h, default_budget(), 4);
  CHECK(serial.verdict == Verdict::Counterexample);
  CHECK(parallel.verdict == Verdict::Counterexample);
  CHECK(*serial.counterexample_index == *parallel.counterexample_index);
  CHECK(serial.tuples_checked == parallel.tuples_checked);
}

TEST_CASE("budget accounting rejects oversized sweeps") {
  GroupHandle h = GroupHandle::parse("SL(2,5)");
  Word w = commutator(commutator(Word::letter(1), Word::letter(2)), Word::letter(3));
  CHECK_THROWS_AS(verify_exhaustive(w, h, 1000), std::invalid_argument);
}

TEST_CASE("randomized verification is seed-deterministic") {
  GroupHandle h = GroupHandle::parse("SL(2,5)");
  LawRecipe r = build_sl_identity(2, h.ctx());
  auto a = verify_randomized(r.word, h, 2000, 42);
  auto b = verify_randomized(r.word, h, 2000, 42);
  CHECK(a.verdict == Verdict::ProbablyIdentity);
  CHECK(b.verdict == Verdict::ProbablyIdentity);
  CHECK(a.tuples_checked == b.tuples_checked);

  auto c1 = verify_randomized(commutator(Word::letter(1), Word::letter(2)), h, 100, 7);
  auto c2 = verify_randomized(commutator(Word::letter(1), Word::letter(2)), h, 100, 7, 4);
  CHECK(c1.verdict == Verdict::Counterexample);
  CHECK(*c1.counterexample_index == *c2.counterexample_index);
}

TEST_CASE("exponent words pass randomized verification") {
  GroupHandle h = GroupHandle::parse("SL(2,7)");
  auto r = verify_randomized(Word::power(1, 168), h, 500, 3);
  CHECK(r.verdict == Verdict::ProbablyIdentity);
}

TEST_CASE("exhaustive identity implies randomized probably-identity") {
  GroupHandle h = GroupHandle::parse("SL(2,3)");
  LawRecipe rec = build_sl_identity(2, h.ctx());
  for (uint64_t seed : {1, 2, 3}) {
    auto r = verify_randomized(rec.word, h, 500, seed);
    CHECK(r.verdict == Verdict::ProbablyIdentity);
  }
}

TEST_CASE("parity filter flags odd words below the exponent") {
  GroupHandle h = GroupHandle::parse("SL(2,3)");
  auto p = parity_check(Word::parse_text("x1^3*x2^2"), h);
  CHECK(p.flagged);  // length 5 < exp 12, odd
  CHECK(p.exponent == 12);
  CHECK(p.odd_generator == 1);
  CHECK(p.witness_power == 3);

  CHECK(!parity_check(commutator(Word::letter(1), Word::letter(2)), h).flagged);  // even

  GroupHandle h2 = GroupHandle::parse("SL(2,2)");
  CHECK(!parity_check(Word::power(1, 7), h2).flagged);  // 7 >= exp 6: guard off
}

TEST_CASE("parity pipeline emits a self-validating witness") {
  GroupHandle h = GroupHandle::parse("SL(2,3)");
  auto r = verify_with_parity(Word::parse_text("x1^3*x2^2"), h, true, 0, 0);
  CHECK(r.mode == "parity");
  CHECK(r.verdict == Verdict::Counterexample);
  CHECK(r.parity_note);
  CHECK(r.counterexample.size() == 2);

  // non-flagged words fall through to the requested sweep
  auto r2 = verify_with_parity(Word::power(1, 12), h, true, 0, 0);
  CHECK(r2.mode == "exhaustive");
  CHECK(r2.verdict == Verdict::Identity);
}

TEST_CASE("quotient inheritance SL -> PSL for q in {3, 5}") {
  for (uint64_t q : {3, 5}) {
    auto F = FieldCtx::make(uint32_t(q), 1);
    GroupHandle sl(GroupKind::SL, 2, F);
    GroupHandle psl(GroupKind::PSL, 2, F);
    LawRecipe rec = build_sl_identity(2, F);
    // support is {1,2,3}; exhaust both groups
    CHECK(verify_exhaustive(rec.word, sl).verdict == Verdict::Identity);
    CHECK(verify_exhaustive(rec.word, psl).verdict == Verdict::Identity);
  }
}

TEST_CASE("subgroup inheritance through the blow-up: identity of SL4(2) holds on SL2(4)") {
  auto ext = FieldCtx::make(2, 2);
  auto base = FieldCtx::make(2, 1);
  LawRecipe rec = build_sl_identity(4, base);  // identity of SL4(2) by construction

  // the embedded copy of SL2(4) inside SL4(2)
  GroupHandle h(GroupKind::SL, 2, ext);
  std::vector<SquareMatrix> image;
  for (const auto& m : h.elements()) image.push_back(blow_up(m, base));
  GroupHandle embedded = GroupHandle::subgroup(image, false, "SL(2,4) in SL(4,2)");

  auto r = verify_exhaustive(rec.word, embedded);
  CHECK(r.verdict == Verdict::Identity);

  // and the isomorphic verification directly in SL2(4)
  CHECK(verify_exhaustive(rec.word, h).verdict == Verdict::Identity);
}
