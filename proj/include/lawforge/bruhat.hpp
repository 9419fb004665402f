#ifndef LAWFORGE_BRUHAT_HPP
#define LAWFORGE_BRUHAT_HPP

#include <array>
#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "lawforge/field.hpp"
#include "lawforge/matrix.hpp"
#include "lawforge/rational.hpp"
#include "lawforge/word.hpp"

namespace lawforge {

/// Indeterminates of the certificate machinery: a_i, b_i, c_i, lambda_i,
/// gamma_i for each word variable i.
enum class VarKind : uint32_t { A = 0, B = 1, C = 2, Lambda = 3, Gamma = 4 };

struct VarId {
  uint32_t index = 1;  // word variable, 1-based
  VarKind kind = VarKind::A;
  auto operator<=>(const VarId&) const = default;
  std::string name() const;
};

using Monomial = std::vector<std::pair<VarId, uint32_t>>;  // sorted, exps > 0

/// Sparse multivariate polynomial over GF(q); no zero coefficients stored.
class MultiPoly {
 public:
  MultiPoly() = default;
  explicit MultiPoly(FieldPtr ctx) : ctx_(std::move(ctx)) {}
  static MultiPoly constant(FieldPtr ctx, uint32_t code);
  static MultiPoly variable(FieldPtr ctx, VarId v, uint32_t exp = 1);

  const FieldPtr& ctx() const { return ctx_; }
  const std::map<Monomial, uint32_t>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }

  MultiPoly add(const MultiPoly& o) const;
  MultiPoly sub(const MultiPoly& o) const;
  MultiPoly neg() const;
  MultiPoly mul(const MultiPoly& o) const;
  MultiPoly scalar_mul(uint32_t code) const;

  int64_t total_degree() const;           // -1 for the zero polynomial
  int64_t degree_in(VarId v) const;
  std::vector<VarId> variables() const;   // sorted, distinct

  uint32_t eval(const std::map<VarId, uint32_t>& point) const;

  std::string to_text() const;

 private:
  void insert_term(const Monomial& m, uint32_t code);
  FieldPtr ctx_;
  std::map<Monomial, uint32_t> terms_;
};

/// 2x2 matrix of polynomials.
struct PolyMat2 {
  FieldPtr ctx;
  std::array<MultiPoly, 4> e;
  static PolyMat2 zero(FieldPtr ctx);
  static PolyMat2 identity_scaled(const MultiPoly& s);  // s * I
  MultiPoly& at(int i, int j) { return e[size_t(i) * 2 + j]; }
  const MultiPoly& at(int i, int j) const { return e[size_t(i) * 2 + j]; }
  PolyMat2 mul(const PolyMat2& o) const;
  PolyMat2 sub(const PolyMat2& o) const;
  PolyMat2 scale(const MultiPoly& s) const;
  bool is_zero() const;
};

/// Denominator-cleared generic Bruhat generators: beta * Z and beta * Z^-1
/// have polynomial entries of per-variable degree <= 2 (beta = lambda_i for
/// the X cell, gamma_i for the Y cell).
PolyMat2 cleared_generator(FieldPtr ctx, uint32_t var_index, bool y_cell, bool inverse);

/// Numeric Bruhat cells of SL_2(q): u(a) h(l) and u(b) h(g) tau u(c).
SquareMatrix bruhat_cell_x(const FieldPtr& ctx, uint32_t a, uint32_t lambda);
SquareMatrix bruhat_cell_y(const FieldPtr& ctx, uint32_t b, uint32_t gamma, uint32_t c);

/// Substitution: X or Y cell per support variable.
using Substitution = std::map<uint32_t, bool>;  // var index -> use Y cell

struct CMatrixBuild {
  PolyMat2 c;                              // prod beta^{n_i} (w(Z) - I)
  std::map<uint32_t, int64_t> moduli;      // n_i per variable
  bool degrees_within_2n = false;          // per-variable degree <= 2 n_i
};

CMatrixBuild build_C(const Word& w, const Substitution& subst, const FieldPtr& ctx);

struct TMatrixBuild {
  PolyMat2 t;                              // prod beta^{n_i} (w1(Z) - w2(Z)^-1)
  bool formally_zero = true;
  std::optional<std::pair<int, int>> entry;  // first nonzero, row-major
  int64_t degree = -1;                       // total degree of that entry
  int64_t degree_bound = 0;                  // 3 l / 2
  std::vector<VarId> entry_variables;        // M_1
  std::optional<uint64_t> root_bound;        // degree * q^(|M1|-1), when it fits
};

/// Splits w at half length (w must have even length) and builds the
/// denominator-cleared difference matrix of the two halves.
TMatrixBuild build_T(const Word& w, const Substitution& subst, const FieldPtr& ctx);

struct SubstitutionOutcome {
  std::string choice;  // one 'X'/'Y' per support variable, ascending order
  bool t_formally_zero = true;
  std::optional<std::pair<int, int>> entry;
  int64_t degree = -1;
  int64_t variable_count = 0;
  std::optional<uint64_t> root_bound;
};

struct CertificateResult {
  uint64_t q = 0;
  Word input_word;
  Word certified_word;        // w, or w^2 when certifying a PSL claim
  bool psl_mode = false;
  int64_t certified_length = 0;
  int64_t degree_bound = 0;   // 3 l / 2 for the certified word
  std::vector<SubstitutionOutcome> table;  // all 2^k substitutions
  bool case_i = false;        // every substitution formally zero
  std::optional<size_t> witness;           // first substitution with nonzero T
  Rational implied_lower;     // 2(q-1)/3, halved in PSL mode
  bool length_consistent = false;  // certified claim survives the bound
};

/// Runs the certificate over all 2^k cell substitutions.  A nonzero T pins
/// the lower bound l >= 2(q-1)/3 for identities of SL_2(q); formal vanishing
/// everywhere raises the case-(i) flag (a law of the generic matrices, which
/// a non-trivial word cannot be).
CertificateResult certify_lower_bound(const Word& w, const FieldPtr& ctx, bool psl_mode = false);

}  // namespace lawforge

#endif
