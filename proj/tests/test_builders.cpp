#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <stdexcept>

#include "chowrank/builders.hpp"

using namespace chowrank;

namespace {

Poly V(VarId v) { return Poly::variable(v); }
Poly A(int i) { return V(var_a(static_cast<std::uint32_t>(i))); }
Poly AL(int i) { return V(var_alpha(static_cast<std::uint32_t>(i))); }
Poly L(int i) { return V(var_lambda(static_cast<std::uint32_t>(i))); }

} // namespace

TEST_CASE("build_P per ambient") {
  CHECK(build_P(AmbientSpec(AmbientKind::Projective)) ==
        V(var_delta()) * V(var_delta()) - V(var_d()) * V(var_mu()));
  CHECK(build_P(AmbientSpec(AmbientKind::GrassLines, 4)) ==
        AL(1) * AL(1) + AL(2) * AL(2) - A(1) * L(1) - A(2) * L(2));
  // n = 5 has three alphas
  CHECK(build_P(AmbientSpec(AmbientKind::GrassLines, 5)) ==
        AL(1) * AL(1) + AL(2) * AL(2) + AL(3) * AL(3) - A(1) * L(1) - A(2) * L(2));
  CHECK(build_P(AmbientSpec(AmbientKind::ProdProj, 3)) ==
        Rational(2) * (AL(1) * AL(3)) + AL(2) * AL(2) - A(1) * L(2) - A(2) * L(1));
  CHECK(build_P(AmbientSpec(AmbientKind::QuadricEvenN)) ==
        Rational(2) * (AL(1) * AL(2)) - V(var_d()) * V(var_mu()));
  CHECK(build_P(AmbientSpec(AmbientKind::QuadricOddN)) ==
        AL(1) * AL(1) + AL(2) * AL(2) - V(var_d()) * V(var_mu()));
  CHECK(build_P(AmbientSpec(AmbientKind::BlowupP6)) ==
        AL(1) * AL(1) - AL(2) * AL(2) - A(1) * L(1) - A(2) * L(2));
  CHECK(build_P(AmbientSpec(AmbientKind::CurveTimesP5)) ==
        Rational(2) * (AL(1) * AL(2)) - A(1) * L(2) - A(2) * L(1));
}

TEST_CASE("ambient validation") {
  CHECK_THROWS_AS(AmbientSpec(AmbientKind::GrassLines, 3), std::invalid_argument);
  CHECK_THROWS_AS(AmbientSpec(AmbientKind::ProdProj, 2), std::invalid_argument);
  CHECK_THROWS_AS(AmbientSpec(AmbientKind::QuadricEvenN, 5), std::invalid_argument);
  CHECK_THROWS_AS(AmbientSpec(AmbientKind::QuadricOddN, 6), std::invalid_argument);
  CHECK_NOTHROW(AmbientSpec(AmbientKind::QuadricOddN, 7));
  CHECK(AmbientSpec(AmbientKind::BlowupP6).tag() == "blowup_p6");
}

TEST_CASE("grass hodge minors") {
  // i = 1, n = 4: both 2x2 determinants
  const Poly expect1 = (A(1) * L(1) - AL(1) * (AL(1) + AL(2))) +
                       ((A(1) + A(2)) * L(1) - AL(2) * (AL(1) + AL(2)));
  CHECK(hodge_minor_grass(1, 4) == expect1);
  // i = 2, n = 4: single summand (alpha_3 = 0)
  const Poly expect2 = (A(1) + A(2)) * L(2) - AL(2) * AL(2);
  CHECK(hodge_minor_grass(2, 4) == expect2);
  CHECK_THROWS_AS(hodge_minor_grass(3, 4), std::out_of_range);
  CHECK_THROWS_AS(hodge_minor_grass(0, 4), std::out_of_range);

  // evaluation at the D = 2H data: every minor vanishes
  std::map<VarId, Rational> point{{var_a(1), 1},      {var_a(2), 1},
                                  {var_alpha(1), 2},  {var_alpha(2), 4},
                                  {var_lambda(1), 12}, {var_lambda(2), 8}};
  CHECK(hodge_minor_grass(1, 4).eval(point) == 0);
  CHECK(hodge_minor_grass(2, 4).eval(point) == 0);
}

TEST_CASE("grass weights degenerate at the even middle index") {
  CHECK(grass_weight(1, 4) == A(1) + A(1) + A(2)); // a0 = 0
  CHECK(grass_weight(2, 4) == A(1) + A(2));        // single-surface case
  CHECK(grass_weight(2, 5) == A(1) + A(2) + A(2)); // a3 = 0 for n = 5
  CHECK(grass_weight(3, 6) == A(2) + A(3));
}

TEST_CASE("product minors") {
  // r_{1,2,4} at n = 3 with a0 = 0
  const Poly r = minor_r(1, 2, 4, 3);
  const Poly expect = -(A(1) * (A(1) * L(1) - AL(1) * AL(2))) +
                      AL(1) * (A(1) * AL(2) - A(2) * AL(1));
  CHECK(r == expect);
  CHECK(minor_r_big(1, 3) == r);
  // the cross minor vanishes identically at i = ceil(n/2)
  for (int n = 3; n <= 9; ++n) CHECK(minor_r_men((n + 1) / 2, n).is_zero());
  CHECK(tilde_r(2, 5) == A(1) * L(2) - AL(2) * AL(2));
  CHECK(hodge2_minor(2, 5) == A(3) * L(2) - AL(3) * AL(3));
  CHECK_THROWS_AS(minor_r(0, 1, 2, 4), std::out_of_range);
  CHECK_THROWS_AS(minor_r(1, 2, 8, 4), std::out_of_range);
}

TEST_CASE("named coefficients") {
  // c_1 at n = 4 is a3 / (-a1^2)
  const RatFunc c1 = named_coeff(CoeffFamily::C, 1, 4);
  CHECK(c1.equals(RatFunc(A(3), -(A(1) * A(1)))));
  // d at the middle index is zero by convention
  CHECK(named_coeff(CoeffFamily::D, 2, 4).is_zero());
  CHECK(named_coeff(CoeffFamily::D, 3, 5).is_zero());
  CHECK(!named_coeff(CoeffFamily::D, 1, 4).is_zero());
  // l_i's numerator carries the chain-minor factor; the quotient by it is a
  // polynomial identity
  const int n = 6, i = 2;
  const RatFunc l = named_coeff(CoeffFamily::L, i, n);
  const Poly det = A(i) * AL(n - i + 1) - A(n - i + 1) * AL(i);
  const Poly expected_num = A(n - i) * det * det * prod_det_c(i, n);
  CHECK(l.num() == expected_num);
  // undefined combinations throw: l at the middle index divides by a zero
  // polynomial either way
  CHECK_THROWS_AS(named_coeff(CoeffFamily::L, 3, 5), std::domain_error);
  CHECK_THROWS_AS(named_coeff(CoeffFamily::L, 2, 4), std::domain_error);
  CHECK_THROWS_AS(named_coeff(CoeffFamily::M, 2, 4), std::domain_error);
  CHECK_THROWS_AS(named_coeff(CoeffFamily::C, 0, 4), std::domain_error);
  CHECK_THROWS_AS(named_coeff(CoeffFamily::C, 4, 4), std::domain_error);
}

TEST_CASE("sigma substitution") {
  const int n = 5;
  const Poly P = build_P(AmbientSpec(AmbientKind::ProdProj, n));
  // identity map leaves everything alone
  CHECK(sigma_substitute(P, PartitionMap::identity(n)).equals(RatFunc(P)));
  // m_i^sigma vanishes when sigma(i) = sigma(i+1)
  const PartitionMap glued(n, {2, 2, 2, 5});
  CHECK(sigma_substitute(named_coeff(CoeffFamily::M, 2, n), glued).is_zero());
  // l_i^sigma vanishes when additionally sigma(n-i+1) agrees
  const PartitionMap all_glued(n, {2, 2, 2, 2});
  CHECK(sigma_substitute(named_coeff(CoeffFamily::L, 2, n), all_glued).is_zero());
  // idempotence for every partition map
  for (const auto& sigma : enumerate_partition_maps(n)) {
    const RatFunc once = sigma_substitute(P, sigma);
    const RatFunc twice = sigma_substitute(once, sigma);
    CHECK(once.equals(twice));
  }
}
