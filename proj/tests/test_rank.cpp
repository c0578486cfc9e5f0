#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "chowrank/rank.hpp"
#include "test_support.hpp"

using namespace chowrank;
using chowrank_tests::TestRng;
using chowrank_tests::synth_grass;
using chowrank_tests::synth_prod;

TEST_CASE("fraction-free rank") {
  CHECK(exact_rank({}) == 0);
  CHECK(exact_rank({{Rational(0), Rational(0)}}) == 0);
  CHECK(exact_rank({{Rational(1, 2), Rational(1, 3)}, {Rational(3), Rational(2)}}) == 1);
  CHECK(exact_rank({{1, 2}, {3, 4}}) == 2);
  CHECK(exact_rank({{1, 2, 3}, {4, 5, 6}, {7, 8, 9}}) == 2);
  CHECK(exact_rank({{0, 0, 1}, {0, 1, 0}, {1, 0, 0}}) == 3);
  // rank must be exact even when a float method would struggle
  const Rational tiny(1, 1000000000);
  CHECK(exact_rank({{1, 1}, {1, Rational(1) + tiny}}) == 2);
}

TEST_CASE("hypothesis validation") {
  CHECK(validate_hypotheses(GrassData(5, {1, 0}, {1, 1, 1}, {1, 1})).ok == false);
  CHECK(validate_hypotheses(GrassData(5, {1, -2}, {1, 1, 1}, {1, 1})).ok == true);
  CHECK(validate_hypotheses(ProdData(4, {1, 1, 1}, {0, 0, 0, 0}, {0, 0, 0})).ok == true);
  const auto bad = validate_hypotheses(ProdData(4, {1, -1, 1}, {0, 0, 0, 0}, {0, 0, 0}));
  CHECK(bad.ok == false);
  CHECK(bad.reason.find("irreducible") != std::string::npos);
  CHECK(validate_hypotheses(ProdData(4, {0, 1, 1}, {0, 0, 0, 0}, {0, 0, 0})).ok == false);
}

TEST_CASE("grass hodge report on the worked instance") {
  const GrassData data(4, {1, 1}, {2, 4}, {12, 8});
  const auto rep = hodge_report(data);
  CHECK(rep.p_value == 0);
  CHECK(rep.consistent);
  for (const auto& s : rep.summands) {
    CHECK(s.value == 0);
    CHECK(s.sign_ok);
  }
}

TEST_CASE("prod hodge report on the worked instance") {
  const auto rep = hodge_report(ProdData(3, {1, 1}, {1, 2, 1}, {3, 3}));
  CHECK(rep.p_value == 0);
  CHECK(rep.consistent);
  for (const auto& s : rep.summands) {
    CHECK(s.value == 0);
    CHECK(s.sign_ok);
  }
}

TEST_CASE("hodge report flags non-geometric data") {
  // P != 0
  const auto p = hodge_report(GrassData(4, {1, 1}, {2, 4}, {13, 8}));
  CHECK(!p.consistent);
  CHECK(p.p_value != 0);
  // a decreasing ratio chain contradicts the (H1,H2) Hodge sign:
  // a = (3,1,3) has a1/a2 = 3 > 1/3 = a2/a3
  const auto chain = hodge_report(ProdData(4, {3, 1, 3}, {0, 0, 0, 0}, {0, 0, 0}));
  CHECK(!chain.consistent);
}

TEST_CASE("vanishing divisor rows force rank one / two") {
  const GrassData flat(4, {1, 1}, {0, 0}, {0, 0});
  CHECK(exact_rank(grass_matrix(flat)) == 1);
  const ProdData pflat(4, {1, 1, 1}, {0, 0, 0, 0}, {0, 0, 0});
  CHECK(exact_rank(prod_matrix(pflat)) == 2);
}

TEST_CASE("grass certification") {
  const auto cert = certify_grass(GrassData(4, {1, 1}, {2, 4}, {12, 8}));
  CHECK(cert.conclusion == ConclusionKind::RankOne);
  CHECK(cert.q == 2);
  CHECK(cert.p_value == 0);

  const auto zero = certify_grass(GrassData(4, {1, 1}, {0, 0}, {0, 0}));
  CHECK(zero.conclusion == ConclusionKind::RankOne);
  CHECK(zero.q == 0);

  // perturbing lambda_1 breaks P = 0
  const auto bad = certify_grass(GrassData(4, {1, 1}, {2, 4}, {13, 8}));
  CHECK(bad.conclusion == ConclusionKind::Inconsistent);
  CHECK(bad.p_value != 0);

  const auto hyp = certify_grass(GrassData(5, {1, 0}, {1, 2, 1}, {3, 3}));
  CHECK(!hyp.hypothesis_ok);
}

TEST_CASE("prod certification") {
  const auto cert = certify_prod(ProdData(3, {1, 1}, {1, 2, 1}, {3, 3}));
  CHECK(cert.conclusion == ConclusionKind::RankTwo);
  CHECK(cert.p == 1);
  CHECK(cert.q == 1);

  const auto bad = certify_prod(ProdData(3, {1, 1}, {1, 2, 1}, {3, 4}));
  CHECK(bad.conclusion == ConclusionKind::Inconsistent);
  CHECK(bad.p_value == -1);

  const auto zero = certify_prod(ProdData(4, {1, 1, 1}, {0, 0, 0, 0}, {0, 0, 0}));
  CHECK(zero.conclusion == ConclusionKind::RankTwo);
  CHECK(zero.p == 0);
  CHECK(zero.q == 0);
}

TEST_CASE("prod certification with genuine ratio coincidences") {
  // a = (1,2,4): sigma glues {2,3}; D = 2 H1 + (1/3) H2 synthesized
  const auto data = synth_prod(4, {1, 2, 4}, Rational(2), Rational(1, 3));
  const auto cert = certify_prod(data);
  CHECK(cert.conclusion == ConclusionKind::RankTwo);
  CHECK(cert.p == 2);
  CHECK(cert.q == Rational(1, 3));
  // breaking the equal-ratio consistency condition is caught
  auto broken = data;
  broken.alpha[2] += 1; // alpha_3 no longer (a3/a2) alpha_2
  const auto rej = certify_prod(broken);
  CHECK(rej.conclusion == ConclusionKind::Inconsistent);
}

TEST_CASE("nonzero but negative a-data degenerates the weights, never certifies") {
  // a = (1,-2) makes the first decomposition weight 2a1 + a2 vanish; such
  // data cannot be geometric even though the row relation D = qH holds
  // formally.
  const auto data = chowrank_tests::synth_grass(4, {1, -2}, Rational(3));
  CHECK(validate_hypotheses(data).ok); // both entries nonzero
  const auto cert = certify_grass(data);
  CHECK(cert.conclusion == ConclusionKind::Inconsistent);
}

TEST_CASE("projective certifier") {
  const auto ok = certify_projective({Rational(4), Rational(6), Rational(9)});
  CHECK(ok.conclusion == ConclusionKind::RankOne);
  CHECK(ok.q == Rational(3, 2));
  const auto bad = certify_projective({Rational(4), Rational(6), Rational(10)});
  CHECK(bad.conclusion == ConclusionKind::Inconsistent);
  const auto hyp = certify_projective({Rational(0), Rational(1), Rational(1)});
  CHECK(!hyp.hypothesis_ok);
}

TEST_CASE("quadric certifier, both parities") {
  // even parity, Segre-type data: alpha1 != alpha2 is not forced
  const auto segre = certify_quadric({true, Rational(1), Rational(1), Rational(0),
                                      Rational(0)});
  CHECK(segre.conclusion == ConclusionKind::NotForced);
  // even parity with equal rulings certifies
  const auto even = certify_quadric({true, Rational(2), Rational(2), Rational(2),
                                     Rational(4)});
  CHECK(even.conclusion == ConclusionKind::RankOne);
  CHECK(even.q == 1);
  // odd parity forces alpha1 = alpha2 through the Hodge sign
  const auto odd = certify_quadric({false, Rational(2), Rational(3), Rational(3),
                                    Rational(9)});
  CHECK(odd.conclusion == ConclusionKind::RankOne);
  CHECK(odd.q == Rational(3, 2));
  const auto oddbad = certify_quadric({false, Rational(1), Rational(1), Rational(2),
                                       Rational(5)});
  CHECK(oddbad.conclusion == ConclusionKind::Inconsistent);
}

TEST_CASE("blow-up certifier") {
  // ampleness proxy fails
  const auto flat = certify_blowup_p6({Rational(1), Rational(1), Rational(1),
                                       Rational(1), Rational(0), Rational(0)});
  CHECK(flat.conclusion == ConclusionKind::NotForced);
  CHECK(flat.hypothesis_ok);
  // D = H data on a = (2,1)
  const auto cert = certify_blowup_p6({Rational(2), Rational(1), Rational(2),
                                       Rational(0), Rational(2), Rational(0)});
  CHECK(cert.conclusion == ConclusionKind::RankTwo);
  CHECK(cert.p == 1);
  CHECK(cert.q == 0);
  CHECK(cert.p_value == 0);
  // P != 0 is inconsistent
  const auto bad = certify_blowup_p6({Rational(2), Rational(1), Rational(2),
                                      Rational(0), Rational(2), Rational(1)});
  CHECK(bad.conclusion == ConclusionKind::Inconsistent);
}

TEST_CASE("curve x P^5 certifier") {
  const auto cert = certify_curve_x_p5({Rational(1), Rational(2), Rational(1),
                                        Rational(2), Rational(1), Rational(2)});
  CHECK(cert.conclusion == ConclusionKind::RankTwo);
  CHECK(cert.p == 1);
  CHECK(cert.q == 0);
  CHECK(cert.p_value == 0);
  const auto bad = certify_curve_x_p5({Rational(1), Rational(2), Rational(1),
                                       Rational(2), Rational(1), Rational(3)});
  CHECK(bad.conclusion == ConclusionKind::Inconsistent);
}

TEST_CASE("synthesized data always certifies with exact multipliers") {
  TestRng rng(101);
  for (int trial = 0; trial < 40; ++trial) {
    const int n = rng.range(4, 8);
    std::vector<Rational> ga;
    for (int i = 0; i < n / 2; ++i) ga.push_back(rng.positive_rational());
    const Rational q = rng.rational();
    const auto gcert = certify_grass(synth_grass(n, ga, q));
    CHECK(gcert.conclusion == ConclusionKind::RankOne);
    CHECK(gcert.q == q);

    const std::vector<Rational> pa = chowrank_tests::chain_valid_a(rng, n);
    const Rational pp = rng.rational(), qq = rng.rational();
    const auto pcert = certify_prod(synth_prod(n, pa, pp, qq));
    CHECK(pcert.conclusion == ConclusionKind::RankTwo);
    CHECK(pcert.p == pp);
    CHECK(pcert.q == qq);
  }
}

TEST_CASE("single-entry perturbations never yield a certificate") {
  TestRng rng(202);
  for (int trial = 0; trial < 40; ++trial) {
    const int n = rng.range(4, 8);
    const std::vector<Rational> pa = chowrank_tests::chain_valid_a(rng, n);
    auto data = synth_prod(n, pa, rng.rational(), rng.rational());
    const Rational eps = Rational(rng.range(1, 5));
    if (rng.range(0, 1) == 0)
      data.alpha[static_cast<std::size_t>(rng.range(0, n - 1))] += eps;
    else
      data.lambda[static_cast<std::size_t>(rng.range(0, n - 2))] += eps;
    const auto cert = certify_prod(data);
    CHECK(cert.conclusion != ConclusionKind::RankTwo);
    CHECK(cert.conclusion != ConclusionKind::RankOne);
  }
}
