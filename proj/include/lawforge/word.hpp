#ifndef LAWFORGE_WORD_HPP
#define LAWFORGE_WORD_HPP

#include <cstdint>
#include <map>
#include <set>
#include <stdexcept>
#include <string>
#include <vector>

namespace lawforge {

/// One maximal run of a single generator: x_gen^exp with exp != 0.
struct Syllable {
  int32_t gen = 0;   // 1-based generator index
  int64_t exp = 0;   // signed, never 0 in a reduced word
  bool operator==(const Syllable&) const = default;
};

/// Reduced word in the free group on countably many generators x1, x2, ...
///
/// Words are immutable values held in reduced syllable normal form: adjacent
/// syllables use distinct generators and no exponent is zero.  Power words
/// keep their exponent in the syllable; the flat letter sequence is never
/// materialized unless explicitly requested.
class Word {
 public:
  Word() = default;  // empty word

  /// Normalizing constructor: merges adjacent syllables of equal generator,
  /// drops zero exponents, and cascades cancellations.
  static Word from_syllables(const std::vector<Syllable>& raw);

  /// Single-syllable power word x_gen^n (empty when n == 0).
  static Word power(int32_t gen, int64_t n);

  /// Generator letter x_gen or its inverse.
  static Word letter(int32_t gen, int sign = 1) { return power(gen, sign >= 0 ? 1 : -1); }

  const std::vector<Syllable>& syllables() const { return syl_; }
  bool empty() const { return syl_.empty(); }
  /// Formal length l(w) = sum of |exp| over syllables.
  int64_t length() const;
  std::set<int32_t> support() const;
  int32_t max_support_index() const;  // 0 for the empty word

  Word concat(const Word& other) const;
  Word inverse() const;
  Word pow(int64_t n) const;  // cyclic-decomposition aware; see word.cpp
  /// Conjugate by b with the convention a^b = b a b^-1.
  Word conjugate_by(const Word& b) const;

  /// Per-generator signed exponent sums.
  std::map<int32_t, int64_t> exponent_sums() const;
  /// Per-generator sums of exponent moduli (the n_i of the degree ledger).
  std::map<int32_t, int64_t> exponent_moduli() const;

  /// Image under the endomorphism sending each support generator to its
  /// mapped word.  Throws if a support generator has no mapping.
  Word substitute(const std::map<int32_t, Word>& images) const;

  /// Flat letter sequence; entries are +gen / -gen.  Throws when the formal
  /// length exceeds max_letters (power words can be astronomically long).
  std::vector<int32_t> letters(int64_t max_letters = 1 << 20) const;

  /// Split after the first `prefix_letters` letters; may bisect a syllable.
  std::pair<Word, Word> split_at(int64_t prefix_letters) const;

  bool operator==(const Word&) const = default;

  /// Text form: x1^2*x2*x1^-3 ("1" for the empty word).
  std::string to_text() const;
  static Word parse_text(const std::string& text);

 private:
  std::vector<Syllable> syl_;
};

/// Commutator [a, b] = a b a^-1 b^-1.
Word commutator(const Word& a, const Word& b);

/// Evaluation homomorphism into any group.  Ops must provide:
///   E identity()            -- group identity element
///   E mul(const E&, const E&)
///   E inv(const E&)
/// Syllable exponents are evaluated by square-and-multiply.
template <typename E, typename Ops>
E evaluate_word(const Word& w, const std::map<int32_t, E>& assignment, const Ops& ops) {
  E acc = ops.identity();
  for (const Syllable& s : w.syllables()) {
    auto it = assignment.find(s.gen);
    if (it == assignment.end())
      throw std::invalid_argument("evaluate_word: missing assignment for generator x" +
                                  std::to_string(s.gen));
    E base = s.exp >= 0 ? it->second : ops.inv(it->second);
    uint64_t e = s.exp >= 0 ? uint64_t(s.exp) : uint64_t(-(s.exp + 1)) + 1;
    E pw = ops.identity();
    while (e) {
      if (e & 1) pw = ops.mul(pw, base);
      e >>= 1;
      if (e) base = ops.mul(base, base);
    }
    acc = ops.mul(acc, pw);
  }
  return acc;
}

/// Number of group multiplications evaluate_word performs for w (used for
/// budget accounting; inversions count as one multiplication).
int64_t evaluation_cost(const Word& w);

}  // namespace lawforge

#endif
