#include "lawforge/word.hpp"

#include <algorithm>
#include <cctype>

namespace lawforge {

Word Word::from_syllables(const std::vector<Syllable>& raw) {
  Word w;
  for (const Syllable& s : raw) {
    if (s.exp == 0) continue;
    if (s.gen <= 0) throw std::invalid_argument("Word: generator index must be >= 1");
    if (!w.syl_.empty() && w.syl_.back().gen == s.gen) {
      w.syl_.back().exp += s.exp;
      if (w.syl_.back().exp == 0) w.syl_.pop_back();
    } else {
      w.syl_.push_back(s);
    }
  }
  return w;
}

Word Word::power(int32_t gen, int64_t n) {
  if (gen <= 0) throw std::invalid_argument("Word: generator index must be >= 1");
  Word w;
  if (n != 0) w.syl_.push_back({gen, n});
  return w;
}

int64_t Word::length() const {
  int64_t l = 0;
  for (const Syllable& s : syl_) l += s.exp >= 0 ? s.exp : -s.exp;
  return l;
}

std::set<int32_t> Word::support() const {
  std::set<int32_t> out;
  for (const Syllable& s : syl_) out.insert(s.gen);
  return out;
}

int32_t Word::max_support_index() const {
  int32_t mx = 0;
  for (const Syllable& s : syl_) mx = std::max(mx, s.gen);
  return mx;
}

Word Word::concat(const Word& other) const {
  // Cancellation can cascade across the seam; walk it explicitly.
  std::vector<Syllable> left = syl_;
  size_t ri = 0;
  const auto& right = other.syl_;
  while (ri < right.size()) {
    Syllable s = right[ri];
    if (!left.empty() && left.back().gen == s.gen) {
      left.back().exp += s.exp;
      if (left.back().exp == 0) left.pop_back();
      ++ri;
    } else {
      break;
    }
  }
  Word w;
  w.syl_ = std::move(left);
  w.syl_.insert(w.syl_.end(), right.begin() + ri, right.end());
  return w;
}

Word Word::inverse() const {
  Word w;
  w.syl_.reserve(syl_.size());
  for (auto it = syl_.rbegin(); it != syl_.rend(); ++it) w.syl_.push_back({it->gen, -it->exp});
  return w;
}

Word Word::pow(int64_t n) const {
  if (n == 0 || empty()) return Word();
  if (n < 0) return inverse().pow(-n);
  if (syl_.size() == 1) return power(syl_[0].gen, syl_[0].exp * n);

  // Cyclic decomposition w = u c u^-1 with c cyclically reduced, so that
  // w^n = u c^n u^-1 without materializing n copies when c is a power word.
  std::vector<Syllable> pre, core(syl_);
  while (core.size() >= 2 && core.front().gen == core.back().gen) {
    Syllable f = core.front(), b = core.back();
    if ((f.exp > 0) == (b.exp > 0)) break;  // same sign cannot cancel cyclically
    int64_t t = std::min(std::abs(f.exp), std::abs(b.exp));
    pre.push_back({f.gen, f.exp > 0 ? t : -t});
    core.front().exp -= pre.back().exp;
    core.back().exp += pre.back().exp;
    if (core.back().exp == 0) core.pop_back();
    if (core.front().exp == 0) core.erase(core.begin());
    if (core.size() == 1) break;
  }
  Word u = from_syllables(pre);
  Word c = from_syllables(core);
  Word cn;
  if (c.syl_.size() == 1) {
    cn = power(c.syl_[0].gen, c.syl_[0].exp * n);
  } else {
    if (n > (int64_t(1) << 20) / std::max<int64_t>(1, int64_t(c.syl_.size())))
      throw std::invalid_argument("Word::pow: expansion too large");
    for (int64_t i = 0; i < n; ++i) cn = cn.concat(c);
  }
  return u.concat(cn).concat(u.inverse());
}

Word Word::conjugate_by(const Word& b) const { return b.concat(*this).concat(b.inverse()); }

Word commutator(const Word& a, const Word& b) {
  return a.concat(b).concat(a.inverse()).concat(b.inverse());
}

std::map<int32_t, int64_t> Word::exponent_sums() const {
  std::map<int32_t, int64_t> out;
  for (const Syllable& s : syl_) out[s.gen] += s.exp;
  return out;
}

std::map<int32_t, int64_t> Word::exponent_moduli() const {
  std::map<int32_t, int64_t> out;
  for (const Syllable& s : syl_) out[s.gen] += s.exp >= 0 ? s.exp : -s.exp;
  return out;
}

Word Word::substitute(const std::map<int32_t, Word>& images) const {
  Word out;
  for (const Syllable& s : syl_) {
    auto it = images.find(s.gen);
    if (it == images.end())
      throw std::invalid_argument("substitute: missing image for generator x" +
                                  std::to_string(s.gen));
    out = out.concat(it->second.pow(s.exp));
  }
  return out;
}

std::vector<int32_t> Word::letters(int64_t max_letters) const {
  if (length() > max_letters) throw std::invalid_argument("Word::letters: word too long");
  std::vector<int32_t> out;
  out.reserve(size_t(length()));
  for (const Syllable& s : syl_) {
    int32_t l = s.exp >= 0 ? s.gen : -s.gen;
    for (int64_t i = 0, n = std::abs(s.exp); i < n; ++i) out.push_back(l);
  }
  return out;
}

std::pair<Word, Word> Word::split_at(int64_t prefix_letters) const {
  if (prefix_letters < 0 || prefix_letters > length())
    throw std::invalid_argument("Word::split_at: position out of range");
  std::vector<Syllable> a, b;
  int64_t taken = 0;
  for (const Syllable& s : syl_) {
    int64_t n = std::abs(s.exp);
    if (taken + n <= prefix_letters) {
      a.push_back(s);
      taken += n;
    } else if (taken >= prefix_letters) {
      b.push_back(s);
    } else {
      int64_t head = prefix_letters - taken;
      int64_t sign = s.exp >= 0 ? 1 : -1;
      a.push_back({s.gen, sign * head});
      b.push_back({s.gen, sign * (n - head)});
      taken += n;
    }
  }
  return {from_syllables(a), from_syllables(b)};
}

std::string Word::to_text() const {
  if (empty()) return "1";
  std::string out;
  for (size_t i = 0; i < syl_.size(); ++i) {
    if (i) out += '*';
    out += 'x';
    out += std::to_string(syl_[i].gen);
    if (syl_[i].exp != 1) {
      out += '^';
      out += std::to_string(syl_[i].exp);
    }
  }
  return out;
}

Word Word::parse_text(const std::string& text) {
  std::vector<Syllable> raw;
  size_t i = 0;
  auto skip_ws = [&] { while (i < text.size() && std::isspace(uint8_t(text[i]))) ++i; };
  skip_ws();
  if (i < text.size() && text[i] == '1') {
    ++i;
    skip_ws();
    if (i == text.size()) return Word();
    throw std::invalid_argument("Word::parse_text: trailing input after '1'");
  }
  while (i < text.size()) {
    skip_ws();
    if (i >= text.size()) break;
    if (text[i] != 'x' && text[i] != 'X')
      throw std::invalid_argument("Word::parse_text: expected 'x' at position " + std::to_string(i));
    ++i;
    size_t start = i;
    while (i < text.size() && std::isdigit(uint8_t(text[i]))) ++i;
    if (i == start) throw std::invalid_argument("Word::parse_text: missing generator index");
    int32_t gen = int32_t(std::stol(text.substr(start, i - start)));
    int64_t exp = 1;
    skip_ws();
    if (i < text.size() && text[i] == '^') {
      ++i;
      skip_ws();
      size_t es = i;
      if (i < text.size() && (text[i] == '-' || text[i] == '+')) ++i;
      while (i < text.size() && std::isdigit(uint8_t(text[i]))) ++i;
      if (i == es || (i == es + 1 && !std::isdigit(uint8_t(text[es]))))
        throw std::invalid_argument("Word::parse_text: malformed exponent");
      exp = std::stoll(text.substr(es, i - es));
    }
    raw.push_back({gen, exp});
    skip_ws();
    if (i < text.size()) {
      if (text[i] != '*') throw std::invalid_argument("Word::parse_text: expected '*' separator");
      ++i;
    }
  }
  return from_syllables(raw);
}

int64_t evaluation_cost(const Word& w) {
  int64_t cost = 0;
  for (const Syllable& s : w.syllables()) {
    uint64_t e = uint64_t(std::abs(s.exp));
    int bits = 0, pop = 0;
    for (uint64_t t = e; t; t >>= 1) {
      ++bits;
      pop += int(t & 1);
    }
    cost += std::max(0, bits - 1) + pop;  // squarings + multiplies
    if (s.exp < 0) cost += 1;             // inversion
    cost += 1;                            // fold into accumulator
  }
  return cost;
}

}  // namespace lawforge
