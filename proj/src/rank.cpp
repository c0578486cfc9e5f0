#include "chowrank/rank.hpp"

#include <algorithm>
#include <stdexcept>

namespace chowrank {

int exact_rank(const ExactMatrix& m) {
  if (m.empty()) return 0;
  const std::size_t rows = m.size(), cols = m[0].size();
  // Clear denominators row by row, then run Bareiss fraction-free
  // elimination over the integers.
  std::vector<std::vector<BigInt>> a(rows, std::vector<BigInt>(cols));
  for (std::size_t r = 0; r < rows; ++r) {
    if (m[r].size() != cols) throw std::invalid_argument("exact_rank: ragged matrix");
    BigInt l = 1;
    for (const Rational& x : m[r]) l = lcm(l, den(x));
    for (std::size_t c = 0; c < cols; ++c) {
      Rational scaled = m[r][c] * Rational(l);
      a[r][c] = num(scaled);
    }
  }
  std::size_t rank = 0;
  BigInt prev = 1;
  for (std::size_t col = 0; col < cols && rank < rows; ++col) {
    std::size_t pivot = rank;
    while (pivot < rows && a[pivot][col] == 0) ++pivot;
    if (pivot == rows) continue;
    std::swap(a[pivot], a[rank]);
    for (std::size_t r = rank + 1; r < rows; ++r) {
      for (std::size_t c = col + 1; c < cols; ++c)
        a[r][c] = (a[r][c] * a[rank][col] - a[r][col] * a[rank][c]) / prev;
      a[r][col] = 0;
    }
    prev = a[rank][col];
    ++rank;
  }
  return static_cast<int>(rank);
}

namespace {

std::map<VarId, Rational> grass_assignment(const GrassData& data) {
  std::map<VarId, Rational> v;
  for (int i = 1; i <= data.n / 2; ++i) {
    v[var_a(static_cast<std::uint32_t>(i))] = data.a_at(i);
    v[var_lambda(static_cast<std::uint32_t>(i))] = data.lambda_at(i);
  }
  for (int i = 1; i <= (data.n + 1) / 2; ++i)
    v[var_alpha(static_cast<std::uint32_t>(i))] = data.alpha_at(i);
  return v;
}

std::map<VarId, Rational> prod_assignment(const ProdData& data) {
  std::map<VarId, Rational> v;
  for (int i = 1; i <= data.n - 1; ++i) {
    v[var_a(static_cast<std::uint32_t>(i))] = data.a_at(i);
    v[var_lambda(static_cast<std::uint32_t>(i))] = data.lambda_at(i);
  }
  for (int i = 1; i <= data.n; ++i)
    v[var_alpha(static_cast<std::uint32_t>(i))] = data.alpha_at(i);
  return v;
}

std::string idx(const std::string& base, int i) {
  return base + "[" + std::to_string(i) + "]";
}

RankCertificate inconsistent(RankCertificate cert, const std::string& why) {
  cert.conclusion = ConclusionKind::Inconsistent;
  cert.reason = why;
  return cert;
}

RankCertificate not_forced(RankCertificate cert, const std::string& why) {
  cert.conclusion = ConclusionKind::NotForced;
  cert.reason = why;
  return cert;
}

} // namespace

HypothesisStatus validate_hypotheses(const GrassData& data) {
  for (int i = 1; i <= data.n / 2; ++i)
    if (data.a_at(i) == 0)
      return {false, "a[" + std::to_string(i) +
                         "] = 0: some intersection of X with a codimension-n "
                         "Schubert cycle vanishes"};
  return {};
}

HypothesisStatus validate_hypotheses(const ProdData& data) {
  if (data.a_at(1) <= 0 || data.a_at(data.n - 1) <= 0)
    return {false, "a[1] and a[" + std::to_string(data.n - 1) +
                       "] must be positive: the projections to both factors "
                       "must be surjective"};
  for (int i = 2; i <= data.n - 2; ++i)
    if (data.a_at(i) <= 0)
      return {false, "a[" + std::to_string(i) +
                         "] <= 0 with a[1], a[n-1] > 0: impossible for an "
                         "irreducible X (all a_i are then strictly positive)"};
  return {};
}

HodgeReport hodge_report(const GrassData& data) {
  const int n = data.n;
  const auto point = grass_assignment(data);
  HodgeReport rep;
  rep.p_value = build_P(AmbientSpec(AmbientKind::GrassLines, n)).eval(point);
  if (rep.p_value != 0) {
    rep.flags.push_back("P != 0: the self-intersection identity fails");
    rep.consistent = false;
  }
  for (int i = 1; i <= n / 2; ++i) {
    const Rational w = grass_weight(i, n).eval(point);
    const Rational hodge = hodge_minor_grass(i, n).eval(point);
    if (w == 0) {
      rep.flags.push_back(idx("weight", i) +
                          " vanishes: decomposition undefined (a_i not all positive?)");
      rep.consistent = false;
      rep.summands.push_back({idx("hodge_minor", i), hodge, hodge <= 0});
      continue;
    }
    const Rational value = -data.a_at(i) * hodge / w;
    const bool sign_ok = hodge <= 0;
    rep.summands.push_back({idx("weighted_hodge_term", i), value, sign_ok});
    if (!sign_ok) {
      rep.flags.push_back(idx("hodge_minor", i) + " > 0: Hodge index sign violated");
      rep.consistent = false;
    }
  }
  for (int i = 1; i <= (n + 1) / 2 - 1; ++i) {
    const Rational w = grass_weight(i, n).eval(point);
    const Rational pair1 = (grass_a(i - 1, n) + grass_a(i, n)).eval(point);
    const Rational pair2 = (grass_a(i, n) + grass_a(i + 1, n)).eval(point);
    const Rational det = grass_alpha_det(i, n).eval(point);
    if (w == 0 || pair1 == 0 || pair2 == 0) {
      rep.flags.push_back(idx("alpha_det_term", i) + " denominator vanishes");
      rep.consistent = false;
      continue;
    }
    const Rational value = data.a_at(i) * det * det / (w * pair1 * pair2);
    const bool sign_ok = value >= 0; // automatic when all a_i > 0
    rep.summands.push_back({idx("alpha_det_square_term", i), value, sign_ok});
    if (!sign_ok) {
      rep.flags.push_back(idx("alpha_det_square_term", i) + " < 0: sign violated");
      rep.consistent = false;
    }
  }
  return rep;
}

HodgeReport hodge_report(const ProdData& data) {
  const int n = data.n;
  const auto point = prod_assignment(data);
  HodgeReport rep;
  rep.p_value = build_P(AmbientSpec(AmbientKind::ProdProj, n)).eval(point);
  if (rep.p_value != 0) {
    rep.flags.push_back("P != 0: the self-intersection identity fails");
    rep.consistent = false;
  }
  for (int i = 1; i <= n - 1; ++i) {
    const Rational chain = prod_det_c(i, n).eval(point);
    if (chain > 0) {
      rep.flags.push_back(idx("chain_minor", i) +
                          " > 0: ratio chain violates the Hodge sign for (H1,H2)");
      rep.consistent = false;
      return rep;
    }
  }
  const PartitionMap sigma = sigma_from_ratios(data.a);
  for (int i = 1; i <= n - 1; ++i) {
    const int si = sigma.at_extended(i), si1 = sigma.at_extended(i + 1);
    const int sni = sigma.at_extended(n - i + 1);
    if (si < si1) {
      const Rational c = named_coeff(CoeffFamily::C, i, n).eval(point);
      const Rational r = minor_r_big(i, n).eval(point);
      const bool sign_ok = r >= 0;
      rep.summands.push_back({idx("hodge_minor_term", i), Rational(-c * r), sign_ok});
      if (!sign_ok) {
        rep.flags.push_back(idx("hodge_minor", i) + " < 0: Hodge index sign violated");
        rep.consistent = false;
      }
      if (sni != si && sni != si1) {
        const Rational d = named_coeff(CoeffFamily::D, i, n).eval(point);
        const Rational rm = minor_r_men(i, n).eval(point);
        const Rational value = -d * rm * rm;
        rep.summands.push_back({idx("cross_minor_square_term", i), value, value >= 0});
      }
    } else {
      const Rational lead = data.a_at(n - i) / data.a_at(i + 1);
      const Rational h2 = hodge2_minor(i, n).eval(point);
      const bool sign_ok = h2 <= 0;
      rep.summands.push_back({idx("reduced_hodge_term", i), Rational(-lead * h2), sign_ok});
      if (!sign_ok) {
        rep.flags.push_back(idx("reduced_hodge_minor", i) +
                            " > 0: Hodge index sign violated");
        rep.consistent = false;
      }
    }
  }
  return rep;
}

RankCertificate certify_grass(const GrassData& data) {
  const int n = data.n;
  RankCertificate cert;
  cert.ambient_tag = "grass";
  cert.n = n;
  const auto hyp = validate_hypotheses(data);
  if (!hyp.ok) {
    cert.hypothesis_ok = false;
    cert.hypothesis_reason = hyp.reason;
    return not_forced(std::move(cert), "hypotheses violated: " + hyp.reason);
  }
  HodgeReport rep = hodge_report(data);
  cert.p_value = rep.p_value;
  cert.summands = rep.summands;
  cert.notes = rep.flags;
  if (!rep.consistent)
    return inconsistent(std::move(cert), rep.flags.empty() ? "sign diagnostics failed"
                                                           : rep.flags.front());
  for (const auto& s : rep.summands)
    if (s.value != 0)
      return inconsistent(std::move(cert),
                          s.label + " = " + render_rational(s.value) +
                              ": a decomposition summand fails to vanish");
  // Every summand vanishes; the D-row must now be q times the H-row.
  const ExactMatrix M = grass_matrix(data);
  const Rational q = data.alpha_at(1) / data.a_at(1);
  for (std::size_t c = 0; c < M[0].size(); ++c)
    if (M[1][c] != q * M[0][c])
      return inconsistent(std::move(cert),
                          "D-row is not a rational multiple of the H-row at column " +
                              std::to_string(c + 1));
  if (exact_rank(M) > 1)
    return inconsistent(std::move(cert), "intersection matrix has rank > 1");
  cert.conclusion = ConclusionKind::RankOne;
  cert.q = q;
  return cert;
}

RankCertificate certify_prod(const ProdData& data) {
  const int n = data.n;
  RankCertificate cert;
  cert.ambient_tag = "prodproj";
  cert.n = n;
  const auto hyp = validate_hypotheses(data);
  if (!hyp.ok) {
    cert.hypothesis_ok = false;
    cert.hypothesis_reason = hyp.reason;
    return not_forced(std::move(cert), "hypotheses violated: " + hyp.reason);
  }
  HodgeReport rep = hodge_report(data);
  cert.p_value = rep.p_value;
  cert.summands = rep.summands;
  cert.notes = rep.flags;
  if (!rep.consistent)
    return inconsistent(std::move(cert), rep.flags.empty() ? "sign diagnostics failed"
                                                           : rep.flags.front());
  const auto point = prod_assignment(data);
  const PartitionMap sigma = sigma_from_ratios(data.a);
  // The vanishing conditions, case by case along the sigma-blocks.
  for (int i = 1; i <= n - 1; ++i) {
    const int si = sigma.at_extended(i), si1 = sigma.at_extended(i + 1);
    const int sni = sigma.at_extended(n - i + 1);
    if (si < si1) {
      if (minor_r_big(i, n).eval(point) != 0)
        return inconsistent(std::move(cert),
                            "Hodge minor of columns (" + std::to_string(i) + "," +
                                std::to_string(i + 1) + "," + std::to_string(n + i) +
                                ") does not vanish");
      if (sni != si && sni != si1 && minor_r_men(i, n).eval(point) != 0)
        return inconsistent(std::move(cert),
                            "cross minor of columns (" + std::to_string(i) + "," +
                                std::to_string(i + 1) + "," + std::to_string(n - i + 1) +
                                ") does not vanish");
    } else {
      if (hodge2_minor(i, n).eval(point) != 0)
        return inconsistent(std::move(cert),
                            idx("reduced_hodge_minor", i) + " does not vanish");
      const Rational primera =
          data.a_at(i) * data.alpha_at(i + 1) - data.a_at(i + 1) * data.alpha_at(i);
      if (primera != 0)
        return inconsistent(std::move(cert),
                            "alpha[" + std::to_string(i + 1) + "] != (a[" +
                                std::to_string(i + 1) + "]/a[" + std::to_string(i) +
                                "])*alpha[" + std::to_string(i) +
                                "] while the ratio chain is stationary");
    }
  }
  const ExactMatrix M = prod_matrix(data);
  // Induction replay on d(i) = min(i-1, n-i): every monomial column is the
  // exact combination (a_i/a_1) * col_1 + (a_{i-1}/a_{n-1}) * col_n.
  std::vector<int> order;
  for (int i = 1; i <= n; ++i) order.push_back(i);
  std::sort(order.begin(), order.end(), [n](int x, int y) {
    const int dx = std::min(x - 1, n - x), dy = std::min(y - 1, n - y);
    return dx != dy ? dx < dy : x < y;
  });
  for (int i : order) {
    const Rational u = data.a_at(i) / data.a_at(1);
    const Rational w = data.a_at(i - 1) / data.a_at(n - 1);
    if (data.alpha_at(i) != u * data.alpha_at(1) + w * data.alpha_at(n))
      return inconsistent(std::move(cert),
                          "column " + std::to_string(i) +
                              " is not a combination of the first and last columns");
  }
  if (exact_rank(M) != 2)
    return inconsistent(std::move(cert), "intersection matrix does not have rank 2");
  const Rational p = data.alpha_at(n) / data.a_at(n - 1);
  const Rational q = data.alpha_at(1) / data.a_at(1);
  for (std::size_t c = 0; c < M[0].size(); ++c)
    if (M[2][c] != p * M[0][c] + q * M[1][c])
      return inconsistent(std::move(cert),
                          "D-row is not p*H1-row + q*H2-row at column " +
                              std::to_string(c + 1));
  cert.conclusion = ConclusionKind::RankTwo;
  cert.p = p;
  cert.q = q;
  return cert;
}

RankCertificate certify_projective(const ProjectiveData& data) {
  RankCertificate cert;
  cert.ambient_tag = "projective";
  if (data.d <= 0) {
    cert.hypothesis_ok = false;
    cert.hypothesis_reason = "degree d must be positive";
    return not_forced(std::move(cert), "hypotheses violated: " + cert.hypothesis_reason);
  }
  cert.p_value = data.delta * data.delta - data.d * data.mu;
  const Rational hodge = data.d * data.mu - data.delta * data.delta; // = -P
  cert.summands.push_back({"hodge_det", hodge, hodge <= 0});
  if (cert.p_value != 0)
    return inconsistent(std::move(cert),
                        "P = delta^2 - d*mu = " + render_rational(cert.p_value) +
                            " != 0: the self-intersection identity fails");
  cert.conclusion = ConclusionKind::RankOne;
  cert.q = data.delta / data.d;
  return cert;
}

RankCertificate certify_quadric(const QuadricData& data) {
  RankCertificate cert;
  cert.ambient_tag = data.even_parity ? "quadric_even" : "quadric_odd";
  if (data.d <= 0) {
    cert.hypothesis_ok = false;
    cert.hypothesis_reason = "degree d must be positive";
    return not_forced(std::move(cert), "hypotheses violated: " + cert.hypothesis_reason);
  }
  const Rational sum = data.alpha1 + data.alpha2;
  const Rational diff = data.alpha1 - data.alpha2;
  cert.p_value = data.even_parity
                     ? Rational(2) * data.alpha1 * data.alpha2 - data.d * data.mu
                     : data.alpha1 * data.alpha1 + data.alpha2 * data.alpha2 -
                           data.d * data.mu;
  // (D_S H_S)^2 - D_S^2 H_S^2 must be >= 0 on the surface section.
  const Rational hodge = sum * sum - Rational(2) * data.d * data.mu;
  cert.summands.push_back({"hodge_excess", hodge, hodge >= 0});
  cert.summands.push_back({"ruling_difference_square", diff * diff, true});
  if (hodge < 0)
    return inconsistent(std::move(cert),
                        "(D.H)^2 < D^2 H^2 on the surface section: Hodge index "
                        "sign violated");
  if (cert.p_value != 0)
    return inconsistent(std::move(cert),
                        "P = " + render_rational(cert.p_value) +
                            " != 0: the self-intersection identity fails");
  if (!data.even_parity) {
    if (diff != 0)
      return inconsistent(std::move(cert),
                          "P = 0 with alpha1 != alpha2 is impossible in the odd "
                          "case (forces a negative Hodge excess)");
    cert.conclusion = ConclusionKind::RankOne;
    cert.q = sum / (Rational(2) * data.d);
    return cert;
  }
  if (diff != 0)
    return not_forced(std::move(cert),
                      "alpha1 != alpha2: D meets the two rulings differently "
                      "(Segre-type class); rank one is not forced");
  cert.conclusion = ConclusionKind::RankOne;
  cert.q = sum / (Rational(2) * data.d);
  return cert;
}

namespace {

// det of the 3x3 intersection matrix of (H, E, D) resp. (H, F, D) on the
// surface cut by two divisors, for the two pair-generated ambients.
Rational blowup_big_det(const PairAmbientData& x) {
  return -x.a1 * x.a2 * (x.lambda1 + x.lambda2) - x.a1 * x.alpha2 * x.alpha2 +
         x.a2 * x.alpha1 * x.alpha1;
}

Rational cxp5_big_det(const PairAmbientData& x) {
  return -x.a2 * x.alpha1 * x.alpha1 - x.a1 * x.a1 * x.lambda2 +
         Rational(2) * x.a1 * x.alpha1 * x.alpha2;
}

} // namespace

RankCertificate certify_blowup_p6(const PairAmbientData& data) {
  RankCertificate cert;
  cert.ambient_tag = "blowup_p6";
  if (data.a1 <= 0) {
    cert.hypothesis_ok = false;
    cert.hypothesis_reason = "a1 = (H^2 coefficient of [X]) must be positive";
    return not_forced(std::move(cert), "hypotheses violated: " + cert.hypothesis_reason);
  }
  cert.p_value = data.alpha1 * data.alpha1 - data.alpha2 * data.alpha2 -
                 data.a1 * data.lambda1 - data.a2 * data.lambda2;
  const Rational reduced = data.a1 * data.lambda1 - data.alpha1 * data.alpha1;
  const Rational big = blowup_big_det(data);
  cert.summands.push_back({"reduced_hodge_det", reduced, reduced <= 0});
  cert.summands.push_back({"triple_hodge_det", big, big >= 0});
  cert.notes.push_back("ampleness of H-E on X is not decidable from this data; "
                       "a1-a2 > 0 is the checkable proxy");
  if (data.a1 - data.a2 <= 0)
    return not_forced(std::move(cert),
                      "ampleness proxy a1 - a2 > 0 fails; the decomposition "
                      "argument does not apply");
  if (cert.p_value != 0)
    return inconsistent(std::move(cert),
                        "P = " + render_rational(cert.p_value) +
                            " != 0: the self-intersection identity fails");
  if (reduced > 0 || big < 0)
    return inconsistent(std::move(cert), "Hodge index sign violated");
  if (reduced != 0 || big != 0)
    return inconsistent(std::move(cert),
                        "a decomposition determinant fails to vanish");
  if (data.a2 == 0)
    return not_forced(std::move(cert),
                      "a2 = 0: the E-row of the intersection matrix is zero and "
                      "the E-multiplier is not determined");
  const Rational p = data.alpha1 / data.a1;
  const Rational q = data.alpha2 / data.a2;
  // D-row (alpha1, -alpha2, lambda1, lambda2) against
  // p * H-row (a1, 0, alpha1, 0) + q * E-row (0, -a2, 0, -alpha2).
  if (data.lambda1 != p * data.alpha1 || data.lambda2 != -q * data.alpha2)
    return inconsistent(std::move(cert), "D-row is not p*H-row + q*E-row");
  cert.conclusion = ConclusionKind::RankTwo;
  cert.p = p;
  cert.q = q;
  return cert;
}

RankCertificate certify_curve_x_p5(const PairAmbientData& data) {
  RankCertificate cert;
  cert.ambient_tag = "curve_x_p5";
  if (data.a1 <= 0) {
    cert.hypothesis_ok = false;
    cert.hypothesis_reason = "a1 = (fiber-degree coefficient of [X]) must be positive";
    return not_forced(std::move(cert), "hypotheses violated: " + cert.hypothesis_reason);
  }
  cert.p_value = Rational(2) * data.alpha1 * data.alpha2 - data.a1 * data.lambda2 -
                 data.a2 * data.lambda1;
  const Rational reduced = data.a1 * data.lambda1 - data.alpha1 * data.alpha1;
  const Rational big = cxp5_big_det(data);
  cert.summands.push_back({"reduced_hodge_det", reduced, reduced <= 0});
  cert.summands.push_back({"triple_hodge_det", big, big >= 0});
  if (cert.p_value != 0)
    return inconsistent(std::move(cert),
                        "P = " + render_rational(cert.p_value) +
                            " != 0: the self-intersection identity fails");
  if (reduced > 0 || big < 0)
    return inconsistent(std::move(cert), "Hodge index sign violated");
  if (reduced != 0 || big != 0)
    return inconsistent(std::move(cert),
                        "a decomposition determinant fails to vanish");
  const Rational p = data.alpha1 / data.a1;
  const Rational q = (data.a1 * data.alpha2 - data.a2 * data.alpha1) / (data.a1 * data.a1);
  // D-row (alpha2, alpha1, lambda2, lambda1) against
  // p * H-row (a2, a1, alpha2, alpha1) + q * F-row (a1, 0, alpha1, 0).
  if (data.alpha2 != p * data.a2 + q * data.a1 ||
      data.lambda2 != p * data.alpha2 + q * data.alpha1 ||
      data.lambda1 != p * data.alpha1)
    return inconsistent(std::move(cert), "D-row is not p*H-row + q*F-row");
  cert.conclusion = ConclusionKind::RankTwo;
  cert.p = p;
  cert.q = q;
  return cert;
}

} // namespace chowrank
