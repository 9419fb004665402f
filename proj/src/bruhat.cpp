#include "lawforge/bruhat.hpp"

#include <algorithm>
#include <stdexcept>

namespace lawforge {

namespace {

constexpr int64_t kLetterCap = 1 << 14;  // certificates work on short words

Monomial merge_monomials(const Monomial& a, const Monomial& b) {
  Monomial out;
  out.reserve(a.size() + b.size());
  size_t i = 0, j = 0;
  while (i < a.size() && j < b.size()) {
    if (a[i].first < b[j].first) {
      out.push_back(a[i++]);
    } else if (b[j].first < a[i].first) {
      out.push_back(b[j++]);
    } else {
      out.push_back({a[i].first, a[i].second + b[j].second});
      ++i;
      ++j;
    }
  }
  for (; i < a.size(); ++i) out.push_back(a[i]);
  for (; j < b.size(); ++j) out.push_back(b[j]);
  return out;
}

}  // namespace

std::string VarId::name() const {
  static const char* kind_names[] = {"a", "b", "c", "lambda", "gamma"};
  return std::string(kind_names[uint32_t(kind)]) + std::to_string(index);
}

MultiPoly MultiPoly::constant(FieldPtr ctx, uint32_t code) {
  MultiPoly p(std::move(ctx));
  if (code != 0) p.terms_.emplace(Monomial{}, code);
  return p;
}

MultiPoly MultiPoly::variable(FieldPtr ctx, VarId v, uint32_t exp) {
  MultiPoly p(std::move(ctx));
  if (exp == 0) return constant(p.ctx_, p.ctx_->one());
  p.terms_.emplace(Monomial{{v, exp}}, p.ctx_->one());
  return p;
}

void MultiPoly::insert_term(const Monomial& m, uint32_t code) {
  if (code == 0) return;
  auto [it, fresh] = terms_.emplace(m, code);
  if (!fresh) {
    uint32_t s = ctx_->add(it->second, code);
    if (s == 0)
      terms_.erase(it);
    else
      it->second = s;
  }
}

MultiPoly MultiPoly::add(const MultiPoly& o) const {
  if (!ctx_ || !o.ctx_ || !ctx_->same(*o.ctx_))
    throw std::invalid_argument("MultiPoly: context mismatch");
  MultiPoly r = *this;
  for (const auto& [m, c] : o.terms_) r.insert_term(m, c);
  return r;
}

MultiPoly MultiPoly::neg() const {
  MultiPoly r(ctx_);
  for (const auto& [m, c] : terms_) r.terms_.emplace(m, ctx_->neg(c));
  return r;
}

MultiPoly MultiPoly::sub(const MultiPoly& o) const { return add(o.neg()); }

MultiPoly MultiPoly::mul(const MultiPoly& o) const {
  if (!ctx_ || !o.ctx_ || !ctx_->same(*o.ctx_))
    throw std::invalid_argument("MultiPoly: context mismatch");
  MultiPoly r(ctx_);
  for (const auto& [ma, ca] : terms_)
    for (const auto& [mb, cb] : o.terms_) r.insert_term(merge_monomials(ma, mb), ctx_->mul(ca, cb));
  return r;
}

MultiPoly MultiPoly::scalar_mul(uint32_t code) const {
  MultiPoly r(ctx_);
  if (code == 0) return r;
  for (const auto& [m, c] : terms_) {
    uint32_t v = ctx_->mul(c, code);
    if (v != 0) r.terms_.emplace(m, v);
  }
  return r;
}

int64_t MultiPoly::total_degree() const {
  int64_t best = -1;
  for (const auto& [m, c] : terms_) {
    int64_t d = 0;
    for (const auto& [v, e] : m) d += e;
    best = std::max(best, d);
  }
  return best;
}

int64_t MultiPoly::degree_in(VarId v) const {
  int64_t best = 0;
  for (const auto& [m, c] : terms_)
    for (const auto& [mv, e] : m)
      if (mv == v) best = std::max<int64_t>(best, e);
  return best;
}

std::vector<VarId> MultiPoly::variables() const {
  std::vector<VarId> out;
  for (const auto& [m, c] : terms_)
    for (const auto& [v, e] : m)
      if (std::find(out.begin(), out.end(), v) == out.end()) out.push_back(v);
  std::sort(out.begin(), out.end());
  return out;
}

uint32_t MultiPoly::eval(const std::map<VarId, uint32_t>& point) const {
  uint32_t acc = 0;
  for (const auto& [m, c] : terms_) {
    uint32_t t = c;
    for (const auto& [v, e] : m) {
      auto it = point.find(v);
      if (it == point.end())
        throw std::invalid_argument("MultiPoly::eval: missing value for " + v.name());
      t = ctx_->mul(t, ctx_->pow(it->second, e));
    }
    acc = ctx_->add(acc, t);
  }
  return acc;
}

std::string MultiPoly::to_text() const {
  if (terms_.empty()) return "0";
  std::string out;
  for (const auto& [m, c] : terms_) {
    if (!out.empty()) out += " + ";
    out += std::to_string(c);
    for (const auto& [v, e] : m) {
      out += "*" + v.name();
      if (e > 1) out += "^" + std::to_string(e);
    }
  }
  return out;
}

PolyMat2 PolyMat2::zero(FieldPtr ctx) {
  PolyMat2 m;
  m.ctx = ctx;
  for (auto& p : m.e) p = MultiPoly(ctx);
  return m;
}

PolyMat2 PolyMat2::identity_scaled(const MultiPoly& s) {
  PolyMat2 m = zero(s.ctx());
  m.at(0, 0) = s;
  m.at(1, 1) = s;
  return m;
}

PolyMat2 PolyMat2::mul(const PolyMat2& o) const {
  PolyMat2 r = zero(ctx);
  for (int i = 0; i < 2; ++i)
    for (int j = 0; j < 2; ++j)
      r.at(i, j) = at(i, 0).mul(o.at(0, j)).add(at(i, 1).mul(o.at(1, j)));
  return r;
}

PolyMat2 PolyMat2::sub(const PolyMat2& o) const {
  PolyMat2 r = zero(ctx);
  for (int i = 0; i < 4; ++i) r.e[i] = e[i].sub(o.e[i]);
  return r;
}

PolyMat2 PolyMat2::scale(const MultiPoly& s) const {
  PolyMat2 r = zero(ctx);
  for (int i = 0; i < 4; ++i) r.e[i] = e[i].mul(s);
  return r;
}

bool PolyMat2::is_zero() const {
  for (const auto& p : e)
    if (!p.is_zero()) return false;
  return true;
}

PolyMat2 cleared_generator(FieldPtr ctx, uint32_t var_index, bool y_cell, bool inverse) {
  auto var = [&](VarKind k, uint32_t e = 1) { return MultiPoly::variable(ctx, {var_index, k}, e); };
  auto cnst = [&](uint32_t c) { return MultiPoly::constant(ctx, c); };
  PolyMat2 m = PolyMat2::zero(ctx);
  if (!y_cell) {
    // lambda * X = [[lambda^2, a], [0, 1]];  lambda * X^-1 = [[1, -a], [0, lambda^2]]
    if (!inverse) {
      m.at(0, 0) = var(VarKind::Lambda, 2);
      m.at(0, 1) = var(VarKind::A);
      m.at(1, 1) = cnst(ctx->one());
    } else {
      m.at(0, 0) = cnst(ctx->one());
      m.at(0, 1) = var(VarKind::A).neg();
      m.at(1, 1) = var(VarKind::Lambda, 2);
    }
  } else {
    // gamma * Y = [[b, bc - gamma^2], [1, c]]
    // gamma * Y^-1 = [[c, gamma^2 - bc], [-1, b]]
    MultiPoly bc = var(VarKind::B).mul(var(VarKind::C));
    MultiPoly g2 = var(VarKind::Gamma, 2);
    if (!inverse) {
      m.at(0, 0) = var(VarKind::B);
      m.at(0, 1) = bc.sub(g2);
      m.at(1, 0) = cnst(ctx->one());
      m.at(1, 1) = var(VarKind::C);
    } else {
      m.at(0, 0) = var(VarKind::C);
      m.at(0, 1) = g2.sub(bc);
      m.at(1, 0) = cnst(ctx->neg(ctx->one()));
      m.at(1, 1) = var(VarKind::B);
    }
  }
  return m;
}

SquareMatrix bruhat_cell_x(const FieldPtr& ctx, uint32_t a, uint32_t lambda) {
  if (lambda == 0) throw std::invalid_argument("bruhat_cell_x: lambda must be a unit");
  SquareMatrix m(ctx, 2);
  uint32_t linv = ctx->inv(lambda);
  m.set(0, 0, lambda);
  m.set(0, 1, ctx->mul(a, linv));
  m.set(1, 1, linv);
  return m;
}

SquareMatrix bruhat_cell_y(const FieldPtr& ctx, uint32_t b, uint32_t gamma, uint32_t c) {
  if (gamma == 0) throw std::invalid_argument("bruhat_cell_y: gamma must be a unit");
  SquareMatrix m(ctx, 2);
  uint32_t ginv = ctx->inv(gamma);
  m.set(0, 0, ctx->mul(b, ginv));
  m.set(0, 1, ctx->sub(ctx->mul(ctx->mul(b, c), ginv), gamma));
  m.set(1, 0, ginv);
  m.set(1, 1, ctx->mul(c, ginv));
  return m;
}

namespace {

// Product of cleared letter matrices: equals (prod_i beta_i^{m_i}) * v(Z)
// where m_i counts the occurrences of variable i in v.
PolyMat2 cleared_product(const Word& v, const Substitution& subst, const FieldPtr& ctx) {
  PolyMat2 acc = PolyMat2::identity_scaled(MultiPoly::constant(ctx, ctx->one()));
  for (int32_t letter : v.letters(kLetterCap)) {
    uint32_t idx = uint32_t(letter > 0 ? letter : -letter);
    auto it = subst.find(idx);
    if (it == subst.end())
      throw std::invalid_argument("certificate: substitution missing variable x" +
                                  std::to_string(idx));
    acc = acc.mul(cleared_generator(ctx, idx, it->second, letter < 0));
  }
  return acc;
}

}  // namespace

CMatrixBuild build_C(const Word& w, const Substitution& subst, const FieldPtr& ctx) {
  if (w.empty()) throw std::invalid_argument("build_C: word must be non-trivial");
  CMatrixBuild out;
  for (const auto& [gen, n] : w.exponent_moduli()) out.moduli[uint32_t(gen)] = n;

  PolyMat2 prod = cleared_product(w, subst, ctx);

  // B = prod beta_i^{n_i} as a one-term polynomial.
  MultiPoly b = MultiPoly::constant(ctx, ctx->one());
  for (const auto& [gen, n] : out.moduli) {
    VarKind k = subst.at(gen) ? VarKind::Gamma : VarKind::Lambda;
    b = b.mul(MultiPoly::variable(ctx, VarId{gen, k}, uint32_t(n)));
  }

  out.c = prod.sub(PolyMat2::identity_scaled(b));

  out.degrees_within_2n = true;
  for (const auto& [gen, n] : out.moduli) {
    for (VarKind k : {VarKind::A, VarKind::B, VarKind::C, VarKind::Lambda, VarKind::Gamma}) {
      VarId v{gen, k};
      for (const auto& p : out.c.e)
        if (p.degree_in(v) > 2 * n) out.degrees_within_2n = false;
    }
  }
  return out;
}

TMatrixBuild build_T(const Word& w, const Substitution& subst, const FieldPtr& ctx) {
  if (w.empty()) throw std::invalid_argument("build_T: word must be non-trivial");
  const int64_t l = w.length();
  if (l % 2 != 0)
    throw std::invalid_argument("build_T: word length must be even (reduce via the parity filter)");

  auto [w1, w2] = w.split_at(l / 2);
  PolyMat2 n1 = cleared_product(w1, subst, ctx);                // B1 * w1(Z)
  PolyMat2 n2inv = cleared_product(w2.inverse(), subst, ctx);   // B2 * w2(Z)^-1

  auto beta_of = [&](const Word& part) {
    Monomial bm;
    for (const auto& [gen, n] : part.exponent_moduli()) {
      if (n == 0) continue;
      VarKind k = subst.at(uint32_t(gen)) ? VarKind::Gamma : VarKind::Lambda;
      bm.push_back({VarId{uint32_t(gen), k}, uint32_t(n)});
    }
    std::sort(bm.begin(), bm.end());
    MultiPoly mono = MultiPoly::constant(ctx, ctx->one());
    for (const auto& [v, e] : bm) mono = mono.mul(MultiPoly::variable(ctx, v, e));
    return mono;
  };
  MultiPoly b1 = beta_of(w1), b2 = beta_of(w2);

  TMatrixBuild out;
  out.t = n1.scale(b2).sub(n2inv.scale(b1));  // = B1 B2 (w1 - w2^-1)
  out.degree_bound = 3 * l / 2;
  for (int i = 0; i < 2 && !out.entry; ++i)
    for (int j = 0; j < 2 && !out.entry; ++j)
      if (!out.t.at(i, j).is_zero()) out.entry = {i, j};
  out.formally_zero = !out.entry.has_value();
  if (out.entry) {
    const MultiPoly& p = out.t.at(out.entry->first, out.entry->second);
    out.degree = p.total_degree();
    out.entry_variables = p.variables();
    // root bound d * q^(|M1|-1)
    unsigned __int128 rb = (unsigned __int128)out.degree;
    bool fits = true;
    for (size_t i = 1; i < out.entry_variables.size(); ++i) {
      rb *= ctx->q();
      if (rb > (unsigned __int128)(~uint64_t(0))) {
        fits = false;
        break;
      }
    }
    if (fits) out.root_bound = uint64_t(rb);
  }
  return out;
}

CertificateResult certify_lower_bound(const Word& w, const FieldPtr& ctx, bool psl_mode) {
  if (w.empty()) throw std::invalid_argument("certify_lower_bound: word must be non-trivial");
  CertificateResult res;
  res.q = ctx->q();
  res.input_word = w;
  res.psl_mode = psl_mode;
  res.certified_word = psl_mode ? w.concat(w) : w;
  if (res.certified_word.empty())
    throw std::logic_error("certify_lower_bound: squared word reduced to the empty word");
  res.certified_length = res.certified_word.length();
  res.degree_bound = 3 * res.certified_length / 2;

  auto sup = res.certified_word.support();
  std::vector<uint32_t> vars(sup.begin(), sup.end());
  const size_t k = vars.size();
  if (k > 20) throw std::invalid_argument("certify_lower_bound: too many variables");

  for (uint64_t mask = 0; mask < (uint64_t(1) << k); ++mask) {
    Substitution subst;
    std::string choice;
    for (size_t i = 0; i < k; ++i) {
      bool y = (mask >> i) & 1;
      subst[vars[i]] = y;
      choice.push_back(y ? 'Y' : 'X');
    }
    TMatrixBuild tb = build_T(res.certified_word, subst, ctx);
    SubstitutionOutcome o;
    o.choice = choice;
    o.t_formally_zero = tb.formally_zero;
    o.entry = tb.entry;
    o.degree = tb.degree;
    o.variable_count = int64_t(tb.entry_variables.size());
    o.root_bound = tb.root_bound;
    if (!tb.formally_zero && !res.witness) res.witness = res.table.size();
    res.table.push_back(std::move(o));
  }
  res.case_i = !res.witness.has_value();

  const int64_t qm1 = int64_t(res.q) - 1;
  if (psl_mode) {
    res.implied_lower = Rational{qm1, 3};
    res.length_consistent = res.case_i || 3 * w.length() >= qm1;
  } else {
    res.implied_lower = Rational{2 * qm1, 3};
    res.length_consistent = res.case_i || 3 * res.certified_length >= 2 * qm1;
  }
  return res;
}

}  // namespace lawforge
