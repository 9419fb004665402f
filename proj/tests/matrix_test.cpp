#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <map>
#include <set>

#include "lawforge/matrix.hpp"

using namespace lawforge;

namespace {

SquareMatrix mat2(const FieldPtr& F, int a, int b, int c, int d) {
  auto code = [&](int v) {
    int p = int(F->q());
    return uint32_t(((v % p) + p) % p);
  };
  return SquareMatrix::from_codes(F, 2, {code(a), code(b), code(c), code(d)});
}

std::string key_of(const SquareMatrix& m) {
  std::string k;
  for (uint32_t c : m.codes()) {
    k += std::to_string(c);
    k += ',';
  }
  return k;
}

}  // namespace

TEST_CASE("basic arithmetic") {
  auto F = FieldCtx::make(3, 1);
  auto I = SquareMatrix::identity(F, 3);
  GroupHandle h(GroupKind::SL, 3, F);
  SquareMatrix m = h.sample(5);
  CHECK(I.mul(m) == m);
  CHECK(I.det() == 1);
  CHECK(m.mul(m.inv()).is_identity());

  SquareMatrix rot = mat2(F, 0, -1, 1, 0);
  CHECK(rot.inv() == mat2(F, 0, 1, -1, 0));
}

TEST_CASE("singular inverse throws") {
  auto F = FieldCtx::make(2, 1);
  SquareMatrix z(F, 2);
  CHECK_THROWS_AS(z.inv(), std::domain_error);
  CHECK(z.det() == 0);
}

TEST_CASE("element orders in SL2(3)") {
  auto F = FieldCtx::make(3, 1);
  GroupHandle h(GroupKind::SL, 2, F);
  CHECK(element_order(h, h.identity(), 100) == 1);
  CHECK(element_order(h, mat2(F, 0, -1, 1, 0), 100) == 4);
  CHECK(element_order(h, mat2(F, 1, 1, 0, 1), 100) == 3);
}

TEST_CASE("enumeration counts match the classical order formulas") {
  struct Case {
    const char* desc;
    uint64_t order;
  };
  for (auto [desc, order] : {Case{"SL(2,2)", 6},
                             {"SL(2,3)", 24},
                             {"SL(2,4)", 60},
                             {"SL(2,5)", 120},
                             {"SL(2,7)", 336},
                             {"SL(3,2)", 168},
                             {"SL(3,3)", 5616},
                             {"GL(2,3)", 48},
                             {"GL(2,4)", 180},
                             {"PSL(2,3)", 12},
                             {"PSL(2,5)", 60},
                             {"PSL(2,7)", 168},
                             {"PSL(3,2)", 168}}) {
    GroupHandle h = GroupHandle::parse(desc);
    CHECK(h.order_u64() == order);
    CHECK(h.elements().size() == order);
  }
}

TEST_CASE("enumerated elements are distinct and satisfy the defining condition") {
  for (const char* desc : {"SL(2,3)", "PSL(2,5)", "GL(2,3)"}) {
    GroupHandle h = GroupHandle::parse(desc);
    std::set<std::string> seen;
    for (const auto& m : h.elements()) {
      seen.insert(key_of(m));
      if (h.kind() != GroupKind::GL) CHECK(m.det() == h.ctx()->one());
      if (h.kind() == GroupKind::PSL) CHECK(projective_canonical(m, h.roots_of_unity()) == m);
    }
    CHECK(seen.size() == h.order_u64());
  }
}

TEST_CASE("projective canonicalization is idempotent and constant on scalar orbits") {
  for (const char* desc : {"PSL(2,5)", "PSL(2,7)"}) {
    GroupHandle h = GroupHandle::parse(desc);
    const auto& roots = h.roots_of_unity();
    GroupHandle sl(GroupKind::SL, h.n(), h.ctx());
    for (const auto& m : sl.elements()) {
      SquareMatrix canon = projective_canonical(m, roots);
      CHECK(projective_canonical(canon, roots) == canon);
      for (uint32_t z : roots) CHECK(projective_canonical(m.scaled(z), roots) == canon);
    }
  }
}

TEST_CASE("element_order divides brute_exponent") {
  for (const char* desc : {"SL(2,3)", "SL(2,4)", "PSL(2,5)"}) {
    GroupHandle h = GroupHandle::parse(desc);
    uint64_t e = brute_exponent(h);
    for (const auto& g : h.elements()) CHECK(e % element_order(h, g, h.order_u64()) == 0);
  }
}

TEST_CASE("brute exponents of the small special linear groups") {
  CHECK(brute_exponent(GroupHandle::parse("SL(2,2)")) == 6);
  CHECK(brute_exponent(GroupHandle::parse("SL(2,3)")) == 12);
  CHECK(brute_exponent(GroupHandle::parse("SL(3,2)")) == 84);
}

TEST_CASE("element_order_dividing agrees with iteration") {
  GroupHandle h = GroupHandle::parse("SL(2,5)");
  uint64_t exp = brute_exponent(h);
  for (uint64_t s = 0; s < 50; ++s) {
    SquareMatrix g = h.sample(s);
    CHECK(element_order_dividing(h, g, exp) == element_order(h, g, h.order_u64()));
  }
  CHECK_THROWS_AS(element_order_dividing(h, h.sample(1), 7), std::invalid_argument);
}

TEST_CASE("seeded sampling is deterministic and lands in the group") {
  GroupHandle h = GroupHandle::parse("SL(3,4)");
  CHECK(h.sample(42) == h.sample(42));
  for (uint64_t s = 0; s < 20; ++s) CHECK(h.sample(s).det() == h.ctx()->one());
}

TEST_CASE("sampler covers SL2(3) and is uniform at the 1% chi-square level") {
  GroupHandle h = GroupHandle::parse("SL(2,3)");
  std::map<std::string, size_t> index;
  for (size_t i = 0; i < h.elements().size(); ++i) index[key_of(h.elements()[i])] = i;
  std::vector<uint64_t> counts(24, 0);
  std::mt19937_64 rng(2024);
  const uint64_t N = 10000;
  for (uint64_t i = 0; i < N; ++i) ++counts[index.at(key_of(h.sample_with(rng)))];
  for (uint64_t c : counts) CHECK(c > 0);  // coupon collector: all 24 hit
  double expect = double(N) / 24.0;
  double chi2 = 0;
  for (uint64_t c : counts) chi2 += (double(c) - expect) * (double(c) - expect) / expect;
  CHECK(chi2 < 41.64);  // chi-square critical value, df = 23, alpha = 0.01
}

TEST_CASE("projective points identify scalar multiples") {
  GroupHandle h = GroupHandle::parse("PSL(2,5)");
  GroupHandle sl(GroupKind::SL, 2, h.ctx());
  auto F = h.ctx();
  for (uint64_t s = 0; s < 20; ++s) {
    SquareMatrix m = sl.sample(s);
    ProjectivePoint p(m, h.roots_of_unity());
    ProjectivePoint q(m.scaled(F->neg(F->one())), h.roots_of_unity());
    CHECK(p == q);
    CHECK(projective_canonical(p.rep(), h.roots_of_unity()) == p.rep());
  }
}

TEST_CASE("enumeration cap rejects large groups") {
  GroupHandle big = GroupHandle::parse("SL(4,5)");
  CHECK(!big.enumerable());
  CHECK_THROWS_AS(big.elements(), std::invalid_argument);
}

TEST_CASE("subgroup handles validate closure") {
  auto F = FieldCtx::make(3, 1);
  SquareMatrix I = SquareMatrix::identity(F, 2);
  SquareMatrix negI = I.scaled(F->neg(F->one()));
  GroupHandle c2 = GroupHandle::subgroup({I, negI}, false, "center of SL(2,3)");
  CHECK(c2.order_u64() == 2);
  CHECK(brute_exponent(c2) == 2);
  CHECK_THROWS_AS(GroupHandle::subgroup({negI}, false, "not a group"), std::invalid_argument);
}

TEST_CASE("blow-up of SL2(4) into SL4(2) is a multiplicative embedding") {
  auto ext = FieldCtx::make(2, 2);
  auto base = FieldCtx::make(2, 1);
  GroupHandle h(GroupKind::SL, 2, ext);
  const auto& els = h.elements();
  CHECK(els.size() == 60);

  std::set<std::string> images;
  for (const auto& m : els) {
    SquareMatrix big = blow_up(m, base);
    CHECK(big.n() == 4);
    CHECK(big.det() == base->one());
    images.insert(key_of(big));
  }
  CHECK(images.size() == 60);  // injective

  for (const auto& a : els)
    for (const auto& b : els)
      CHECK(blow_up(a.mul(b), base) == blow_up(a, base).mul(blow_up(b, base)));
}

TEST_CASE("descriptor parsing") {
  CHECK(GroupHandle::parse("SL(2,9)").ctx()->m() == 2);
  CHECK(GroupHandle::parse("SL(2,9)").ctx()->p() == 3);
  CHECK_THROWS_AS(GroupHandle::parse("SL(2,6)"), std::invalid_argument);
  CHECK_THROWS_AS(GroupHandle::parse("XX(2,3)"), std::invalid_argument);
  CHECK_THROWS_AS(GroupHandle::parse("SL23"), std::invalid_argument);
}
