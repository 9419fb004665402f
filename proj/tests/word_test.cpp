#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "lawforge/field.hpp"
#include "lawforge/matrix.hpp"
#include "lawforge/word.hpp"

using namespace lawforge;

namespace {

Word w(const std::string& text) { return Word::parse_text(text); }

// Random reduced word on generators 1..gens with letters drawn one at a time.
Word random_word(std::mt19937_64& rng, int len, int gens) {
  std::vector<Syllable> syl;
  int32_t last = 0;
  for (int i = 0; i < len; ++i) {
    int32_t g, s;
    do {
      g = int32_t(rng() % gens) + 1;
      s = rng() & 1 ? 1 : -1;
    } while (g * s == -last);
    syl.push_back({g, s});
    last = g * s;
  }
  return Word::from_syllables(syl);
}

}  // namespace

TEST_CASE("free reduction basics") {
  CHECK(w("x1*x1^-1").empty());
  CHECK(w("x1^2*x2").length() == 3);
  CHECK(w("x1*x2^-1").concat(w("x2*x1")) == w("x1^2"));
  CHECK(w("x1*x2^-1").concat(w("x2*x1")).length() == 2);
}

TEST_CASE("cascading cancellation across the seam") {
  Word a = w("x1*x2*x3");
  Word b = w("x3^-1*x2^-1*x1^-1");
  CHECK(a.concat(b).empty());
}

TEST_CASE("commutator and conjugate follow the g^h = hgh^-1 convention") {
  CHECK(commutator(w("x1"), w("x2")) == w("x1*x2*x1^-1*x2^-1"));
  CHECK(commutator(w("x1"), w("x2")).length() == 4);
  CHECK(commutator(w("x1"), w("x1")).empty());
  CHECK(w("x1").conjugate_by(w("x2")) == w("x2*x1*x2^-1"));
  CHECK(w("x1").conjugate_by(w("x2")).length() == 3);
}

TEST_CASE("power words") {
  CHECK(Word::power(1, 6) == w("x1^6"));
  CHECK(Word::power(1, 6).length() == 6);
  CHECK(Word::power(1, 0).empty());
  CHECK(Word::power(2, 84).length() == 84);
  CHECK(Word::power(2, 84).syllables().size() == 1);
}

TEST_CASE("substitution") {
  Word conj = w("x1").conjugate_by(w("x2"));
  CHECK(w("x1^3").substitute({{1, conj}}) == w("x2*x1^3*x2^-1"));
  CHECK(w("x1^3").substitute({{1, conj}}).length() == 5);

  Word v = w("x1^2*x2*x1^-3");
  CHECK(v.substitute({{1, w("x1")}, {2, w("x2")}}) == v);
  CHECK(w("x1^5*x2").substitute({{1, Word()}, {2, w("x2")}}) == w("x2"));
  CHECK_THROWS_AS(v.substitute({{1, w("x1")}}), std::invalid_argument);
}

TEST_CASE("substitution powers stay in syllable form for huge exponents") {
  Word conj = w("x1").conjugate_by(w("x2"));
  Word big = Word::power(1, 5380840).substitute({{1, conj}});
  CHECK(big == w("x2*x1^5380840*x2^-1"));
  CHECK(big.length() == 5380842);
}

TEST_CASE("exponent sums and moduli") {
  Word c = commutator(w("x1"), w("x2"));
  auto sums = c.exponent_sums();
  auto mods = c.exponent_moduli();
  CHECK(sums[1] == 0);
  CHECK(sums[2] == 0);
  CHECK(mods[1] == 2);
  CHECK(mods[2] == 2);

  CHECK(w("x1^5").exponent_sums()[1] == 5);
  Word v = w("x1^2*x2*x1^-3");
  CHECK(v.exponent_sums()[1] == -1);
  CHECK(v.exponent_sums()[2] == 1);
  CHECK(v.exponent_moduli()[1] == 5);
  CHECK(v.exponent_moduli()[2] == 1);
}

TEST_CASE("split respects letters and may bisect syllables") {
  Word v = w("x1^3*x2^2");
  auto [a, b] = v.split_at(4);
  CHECK(a == w("x1^3*x2"));
  CHECK(b == w("x2"));
  auto [c, d] = v.split_at(0);
  CHECK(c.empty());
  CHECK(d == v);
}

TEST_CASE("text round-trip is exact") {
  std::mt19937_64 rng(7);
  for (int i = 0; i < 500; ++i) {
    Word v = random_word(rng, 1 + int(rng() % 12), 4);
    CHECK(Word::parse_text(v.to_text()) == v);
  }
  CHECK(Word::parse_text("1").empty());
  CHECK(w("x1^2*x2*x1^-3").to_text() == "x1^2*x2*x1^-3");
}

TEST_CASE("reduction is confluent: random cancellation order agrees") {
  std::mt19937_64 rng(11);
  for (int trial = 0; trial < 300; ++trial) {
    // Unreduced letter soup.
    int len = 2 + int(rng() % 14);
    std::vector<int32_t> letters;
    for (int i = 0; i < len; ++i) {
      int32_t g = int32_t(rng() % 3) + 1;
      letters.push_back(rng() & 1 ? g : -g);
    }
    // Oracle: cancel a random adjacent inverse pair until none remain.
    std::vector<int32_t> work = letters;
    while (true) {
      std::vector<size_t> hits;
      for (size_t i = 0; i + 1 < work.size(); ++i)
        if (work[i] == -work[i + 1]) hits.push_back(i);
      if (hits.empty()) break;
      size_t at = hits[rng() % hits.size()];
      work.erase(work.begin() + at, work.begin() + at + 2);
    }
    std::vector<Syllable> syl, syl2;
    for (int32_t l : letters) syl.push_back({std::abs(l), l > 0 ? 1 : -1});
    for (int32_t l : work) syl2.push_back({std::abs(l), l > 0 ? 1 : -1});
    CHECK(Word::from_syllables(syl) == Word::from_syllables(syl2));
  }
}

TEST_CASE("commutator length bound, equality on disjoint supports") {
  std::mt19937_64 rng(13);
  for (int trial = 0; trial < 300; ++trial) {
    Word a = random_word(rng, 1 + int(rng() % 6), 2);
    Word b0 = random_word(rng, 1 + int(rng() % 6), 2);
    // Push b onto generators 3,4 to rule out cancellation.
    Word b = b0.substitute({{1, w("x3")}, {2, w("x4")}});
    if (a.empty() || b.empty()) continue;
    CHECK(commutator(a, b).length() == 2 * a.length() + 2 * b.length());
    Word c = random_word(rng, 1 + int(rng() % 6), 2);
    CHECK(commutator(a, c).length() <= 2 * a.length() + 2 * c.length());
  }
}

TEST_CASE("evaluation is a homomorphism in SL2(3)") {
  GroupHandle h(GroupKind::SL, 2, FieldCtx::make(3, 1));
  HandleOps ops{&h};
  std::mt19937_64 rng(17);
  for (int trial = 0; trial < 100; ++trial) {
    Word a = random_word(rng, 1 + int(rng() % 5), 3);
    Word b = random_word(rng, 1 + int(rng() % 5), 3);
    std::map<int32_t, SquareMatrix> asg;
    for (int32_t g = 1; g <= 3; ++g) asg.emplace(g, h.sample(rng()));
    auto lhs = evaluate_word(a.concat(b), asg, ops);
    auto rhs = evaluate_word(a, asg, ops).mul(evaluate_word(b, asg, ops));
    CHECK(lhs == rhs);
  }
}

TEST_CASE("evaluation examples") {
  GroupHandle h(GroupKind::SL, 2, FieldCtx::make(2, 1));
  HandleOps ops{&h};
  std::map<int32_t, SquareMatrix> asg{{1, h.sample(3)}, {2, h.sample(4)}};
  CHECK(evaluate_word(w("x1*x1^-1"), asg, ops).is_identity());

  // An order-3 element of SL2(2) is annihilated by x^6.
  auto F = h.ctx();
  SquareMatrix g = SquareMatrix::from_codes(F, 2, {1, 1, 1, 0});
  std::map<int32_t, SquareMatrix> asg3{{1, g}};
  CHECK(evaluate_word(w("x1^6"), asg3, ops).is_identity());
  CHECK_THROWS_AS(evaluate_word(w("x1*x2"), asg3, ops), std::invalid_argument);
}

TEST_CASE("exponent sums are additive under concat; length parity is preserved") {
  std::mt19937_64 rng(19);
  for (int trial = 0; trial < 200; ++trial) {
    Word a = random_word(rng, 1 + int(rng() % 8), 3);
    Word b = random_word(rng, 1 + int(rng() % 8), 3);
    Word c = a.concat(b);
    auto sa = a.exponent_sums(), sb = b.exponent_sums(), sc = c.exponent_sums();
    for (int32_t g = 1; g <= 3; ++g) {
      int64_t expect = (sa.count(g) ? sa[g] : 0) + (sb.count(g) ? sb[g] : 0);
      CHECK((sc.count(g) ? sc[g] : 0) == expect);
    }
    CHECK(c.length() <= a.length() + b.length());
    CHECK((c.length() & 1) == ((a.length() + b.length()) & 1));
  }
}
