#ifndef LAWFORGE_MATRIX_HPP
#define LAWFORGE_MATRIX_HPP

#include <cstdint>
#include <memory>
#include <optional>
#include <random>
#include <string>
#include <vector>

#include <boost/container/small_vector.hpp>

#include "lawforge/field.hpp"

namespace lawforge {

/// Entry storage; inline up to 4x4, which covers every enumeration-scale
/// group, so the evaluation loops do not touch the heap.
using MatCodes = boost::container::small_vector<uint32_t, 16>;

/// Dense n x n matrix over a shared FieldCtx; entries stored as field codes
/// in row-major order.
class SquareMatrix {
 public:
  SquareMatrix() = default;
  SquareMatrix(FieldPtr ctx, uint32_t n);  // zero matrix
  static SquareMatrix identity(FieldPtr ctx, uint32_t n);
  static SquareMatrix from_codes(FieldPtr ctx, uint32_t n, std::vector<uint32_t> codes);

  uint32_t n() const { return n_; }
  const FieldPtr& ctx() const { return ctx_; }
  uint32_t at(uint32_t i, uint32_t j) const { return a_[size_t(i) * n_ + j]; }
  void set(uint32_t i, uint32_t j, uint32_t code) { a_[size_t(i) * n_ + j] = code; }
  const MatCodes& codes() const { return a_; }

  SquareMatrix mul(const SquareMatrix& o) const;
  SquareMatrix inv() const;  // Gauss-Jordan; throws on singular input
  SquareMatrix pow(int64_t e) const;
  SquareMatrix scaled(uint32_t code) const;
  uint32_t det() const;
  bool is_identity() const;
  bool operator==(const SquareMatrix& o) const { return n_ == o.n_ && a_ == o.a_; }

 private:
  void check_compat(const SquareMatrix& o) const;
  FieldPtr ctx_;
  uint32_t n_ = 0;
  MatCodes a_;
};

/// Scalar matrices z*I with z^n = 1 act trivially in PSL; the canonical
/// representative of {z*M} is the scaling whose first nonzero entry (row-major)
/// has the least field code.
SquareMatrix projective_canonical(const SquareMatrix& m, const std::vector<uint32_t>& roots_of_unity);

/// Element of PSL_n(q), held in projective canonical form.
class ProjectivePoint {
 public:
  ProjectivePoint(const SquareMatrix& m, const std::vector<uint32_t>& roots_of_unity)
      : rep_(projective_canonical(m, roots_of_unity)) {}
  const SquareMatrix& rep() const { return rep_; }
  bool operator==(const ProjectivePoint& o) const { return rep_ == o.rep_; }

 private:
  SquareMatrix rep_;
};

enum class GroupKind { GL, SL, PSL, Subgroup };

/// Handle for a concrete matrix group: one of GL/SL/PSL_n(q), or an explicit
/// subgroup given by its element list.  Supplies the group operations used by
/// word evaluation (projective handles multiply-then-canonicalize).
class GroupHandle {
 public:
  GroupHandle(GroupKind kind, uint32_t n, FieldPtr ctx);
  /// Explicit subgroup of (P)SL_n(q): elements must form a group.
  static GroupHandle subgroup(std::vector<SquareMatrix> elements, bool projective,
                              std::string label);

  /// Parses "SL(2,3)", "PSL(2,5)", "GL(3,4)".
  static GroupHandle parse(const std::string& descriptor);

  GroupKind kind() const { return kind_; }
  uint32_t n() const { return n_; }
  const FieldPtr& ctx() const { return ctx_; }
  bool projective() const { return projective_; }
  std::string describe() const;

  /// Exact order from the classical formulas (or the element count for
  /// explicit subgroups).
  unsigned __int128 order() const;
  uint64_t order_u64() const;  // throws if it does not fit

  bool enumerable(uint64_t cap = 1000000) const;
  /// All elements, deterministic order: row-major lexicographic scan in field
  /// enumeration order, filtered by the defining condition.  Cached.
  const std::vector<SquareMatrix>& elements(uint64_t cap = 1000000) const;

  /// One seeded uniform element (rejection-sampled invertible matrix, last
  /// row scaled to force det 1 for SL, canonicalized for PSL).
  SquareMatrix sample(uint64_t seed) const;
  SquareMatrix sample_with(std::mt19937_64& rng) const;

  // Group operations.
  SquareMatrix identity() const;
  SquareMatrix mul(const SquareMatrix& a, const SquareMatrix& b) const;
  SquareMatrix inv(const SquareMatrix& a) const;
  bool eq(const SquareMatrix& a, const SquareMatrix& b) const { return a == b; }
  SquareMatrix canonical(const SquareMatrix& a) const;

  const std::vector<uint32_t>& roots_of_unity() const;

 private:
  GroupHandle() = default;
  GroupKind kind_ = GroupKind::SL;
  uint32_t n_ = 0;
  FieldPtr ctx_;
  bool projective_ = false;
  std::string label_;
  mutable std::vector<SquareMatrix> cache_;
  mutable std::vector<uint32_t> roots_;
};

/// Group-operations shim satisfying the evaluate_word Ops concept.
struct HandleOps {
  const GroupHandle* h;
  SquareMatrix identity() const { return h->identity(); }
  SquareMatrix mul(const SquareMatrix& a, const SquareMatrix& b) const { return h->mul(a, b); }
  SquareMatrix inv(const SquareMatrix& a) const { return h->inv(a); }
};

/// Least k >= 1 with g^k = 1, by iterated multiplication (mul must be the
/// owning group's operation so PSL orders come out projectively).
uint64_t element_order(const GroupHandle& h, const SquareMatrix& g, uint64_t cap);

/// Least divisor d of order_multiple with g^d = 1; order_multiple must be a
/// multiple of ord(g) (e.g. the group exponent), else this throws.
uint64_t element_order_dividing(const GroupHandle& h, const SquareMatrix& g,
                                uint64_t order_multiple);

/// lcm of element orders over the full enumeration.
uint64_t brute_exponent(const GroupHandle& h, uint64_t cap = 1000000);

/// Field blow-up: rewrites a matrix over GF(p^m) as an (n*m) x (n*m) matrix
/// over GF(p) by replacing each entry with its multiplication matrix in the
/// power basis 1, x, ..., x^(m-1).  Multiplicative, determinant-norm
/// compatible; the image of SL_n(p^m) lies in SL_{nm}(p).
SquareMatrix blow_up(const SquareMatrix& m, const FieldPtr& base_ctx);

}  // namespace lawforge

#endif
