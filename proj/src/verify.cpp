#include "chowrank/verify.hpp"

#include <algorithm>
#include <array>
#include <atomic>
#include <map>
#include <set>
#include <stdexcept>
#include <thread>

namespace chowrank {

namespace {

Poly det2(const Poly& p11, const Poly& p12, const Poly& p21, const Poly& p22) {
  return p11 * p22 - p12 * p21;
}

// coefficient * polynomial, without expanding through a common denominator
RatFunc term(const RatFunc& coeff, const Poly& poly) {
  return RatFunc(coeff.num() * poly, coeff.den());
}

std::map<Monomial, RatFunc, GradedLexLess> side_coefficients(
    const std::vector<RatFunc>& summands) {
  std::map<Monomial, RatFunc, GradedLexLess> out;
  for (const RatFunc& f : summands) {
    for (auto& [mono, part] : alpha_lambda_split(f.num())) {
      RatFunc contrib(part, f.den());
      auto it = out.find(mono);
      if (it == out.end())
        out.emplace(mono, contrib);
      else
        it->second += contrib;
    }
  }
  return out;
}

} // namespace

VerificationReport verify_instance(const IdentityInstance& inst,
                                   const VerifyOptions& options) {
  VerificationReport report;
  report.identity = inst.name;
  report.n = inst.n;
  report.sigma = inst.sigma;

  auto lhs = side_coefficients(inst.lhs);
  auto rhs = side_coefficients(inst.rhs);

  std::set<Monomial, GradedLexLess> monomials;
  for (const auto& [m, f] : lhs) monomials.insert(m);
  for (const auto& [m, f] : rhs) monomials.insert(m);

  const RatFunc zero{Poly::zero()};
  Poly residual;
  for (const Monomial& m : monomials) {
    auto li = lhs.find(m);
    auto ri = rhs.find(m);
    const RatFunc& lc = li == lhs.end() ? zero : li->second;
    const RatFunc& rc = ri == rhs.end() ? zero : ri->second;
    Poly diff = lc.cross_difference(rc);
    if (!diff.is_zero()) {
      report.ledger.push_back({m, lc.render(), rc.render()});
      residual += diff * Poly::from_terms({{m, Rational(1)}});
    }
  }
  report.residual = residual;
  report.status = residual.is_zero() ? VerifyStatus::Verified : VerifyStatus::Failed;

  // Randomized cross-oracle: exact evaluation at deterministic points.
  if (options.eval_seeds > 0) {
    std::set<VarId> vars;
    for (const RatFunc& f : inst.lhs) {
      f.num().collect_vars(vars);
      f.den().collect_vars(vars);
    }
    for (const RatFunc& f : inst.rhs) {
      f.num().collect_vars(vars);
      f.den().collect_vars(vars);
    }
    for (int k = 0; k < options.eval_seeds; ++k) {
      const std::uint64_t seed = options.seed + static_cast<std::uint64_t>(k);
      Rational lv, rv;
      bool done = false;
      for (std::uint64_t nonce = 0; nonce < 64 && !done; ++nonce) {
        std::map<VarId, Rational> point;
        for (VarId v : vars)
          point[v] = random_point_value(seed, v, nonce, options.eval_bound);
        try {
          Rational l = 0, r = 0;
          for (const RatFunc& f : inst.lhs) l += f.eval(point);
          for (const RatFunc& f : inst.rhs) r += f.eval(point);
          lv = l;
          rv = r;
          done = true;
        } catch (const std::domain_error&) {
          // a denominator vanished at this point; move to the next nonce
        }
      }
      if (!done)
        throw std::logic_error("verify_instance: could not find a nonsingular "
                               "evaluation point for " + inst.name);
      ++report.eval.samples;
      if (lv != rv) ++report.eval.value_mismatches;
    }
    if (report.verified() && report.eval.value_mismatches > 0)
      throw std::logic_error("verify_instance: randomized evaluation contradicts "
                             "the symbolic verdict on " + inst.name);
  }
  return report;
}

VerificationReport verify_identity(const RatFunc& lhs, const RatFunc& rhs,
                                   const VerifyOptions& options) {
  IdentityInstance inst;
  inst.name = "identity";
  inst.lhs = {lhs};
  inst.rhs = {rhs};
  return verify_instance(inst, options);
}

// ---- suite construction -----------------------------------------------

namespace {

IdentityInstance proj_instance() {
  IdentityInstance inst;
  inst.name = "proj_hodge";
  const Poly d = Poly::variable(var_d());
  const Poly delta = Poly::variable(var_delta());
  const Poly mu = Poly::variable(var_mu());
  inst.lhs = {RatFunc(build_P(AmbientSpec(AmbientKind::Projective)))};
  inst.rhs = {RatFunc(-det2(d, delta, delta, mu))};
  return inst;
}

IdentityInstance grass_instance(int n) {
  IdentityInstance inst;
  inst.name = "grass_decomposition";
  inst.n = n;
  inst.lhs = {RatFunc(build_P(AmbientSpec(AmbientKind::GrassLines, n)))};
  for (int i = 1; i <= n / 2; ++i)
    inst.rhs.push_back(
        RatFunc(-(grass_a(i, n) * hodge_minor_grass(i, n)), grass_weight(i, n)));
  for (int i = 1; i <= (n + 1) / 2 - 1; ++i) {
    const Poly det = grass_alpha_det(i, n);
    inst.rhs.push_back(RatFunc(grass_a(i, n) * det * det,
                               grass_weight(i, n) * (grass_a(i - 1, n) + grass_a(i, n)) *
                                   (grass_a(i, n) + grass_a(i + 1, n))));
  }
  return inst;
}

IdentityInstance prodproj_base_instance(int n) {
  IdentityInstance inst;
  inst.name = "prodproj_decomposition";
  inst.n = n;
  inst.lhs = {RatFunc(build_P(AmbientSpec(AmbientKind::ProdProj, n)))};
  for (int i = 1; i <= n - 1; ++i) {
    inst.rhs.push_back(-term(named_coeff(CoeffFamily::C, i, n), minor_r_big(i, n)));
    const RatFunc di = named_coeff(CoeffFamily::D, i, n); // zero at i = ceil(n/2)
    if (!di.is_zero())
      inst.rhs.push_back(-term(di, minor_r_men(i, n).pow(2)));
  }
  return inst;
}

std::map<VarId, RatFunc> single_substitution(int i, int n) {
  // alpha_{i+1} -> (a_{i+1}/a_i) alpha_i, the substitution the
  // sigma(i) = sigma(i+1) hypothesis dictates
  std::map<VarId, RatFunc> map;
  map.emplace(var_alpha(static_cast<std::uint32_t>(i + 1)),
              RatFunc(prod_a(i + 1, n) * prod_alpha(i, n), prod_a(i, n)));
  return map;
}

RatFunc apply_map(const RatFunc& f, const std::map<VarId, RatFunc>& map) {
  return substitute(f.num(), map) / substitute(f.den(), map);
}

std::vector<IdentityInstance> cambio_instances(int n) {
  std::vector<IdentityInstance> out;
  const int mid = (n + 1) / 2;
  for (int i = 2; i <= n - 2; ++i) {
    IdentityInstance inst;
    inst.name = "cambio_rewrite[i=" + std::to_string(i) + "]";
    inst.n = n;
    const auto sub = single_substitution(i, n);
    const RatFunc lead = RatFunc(prod_a(n - i, n), prod_a(i + 1, n));
    inst.lhs.push_back(
        apply_map(-term(named_coeff(CoeffFamily::C, i, n), minor_r_big(i, n)), sub));
    inst.rhs.push_back(apply_map(-term(lead, hodge2_minor(i, n)), sub));
    if (i == mid) {
      // r_{i,i+1,n-i+1} and d_i are zero by convention here; l_i (and m_i
      // when n is even) are undefined and drop out of the identity.
      if (n % 2 == 1)
        inst.rhs.push_back(apply_map(-named_coeff(CoeffFamily::M, i, n), sub));
    } else {
      inst.lhs.push_back(apply_map(
          -term(named_coeff(CoeffFamily::D, i, n), minor_r_men(i, n).pow(2)), sub));
      inst.rhs.push_back(apply_map(-named_coeff(CoeffFamily::L, i, n), sub));
      inst.rhs.push_back(apply_map(-named_coeff(CoeffFamily::M, i, n), sub));
    }
    out.push_back(std::move(inst));
  }
  return out;
}

// closed forms of r_{i,i+1,n-i+1}^sigma in the two coincidence cases
RatFunc r_men_closed_g(int i, int n, const PartitionMap& sigma) {
  const int s = sigma.at_extended(i);
  const Poly as = prod_a(s, n);
  const Poly det = det2(as, prod_a(i + 1, n), prod_alpha(s, n), prod_alpha(i + 1, n));
  return RatFunc(-(prod_a(i, n) * prod_det_a(i, n) * det), as * prod_a(i + 1, n));
}

RatFunc r_men_closed_h(int i, int n, const PartitionMap& sigma) {
  const int s = sigma.at_extended(i);
  const Poly as = prod_a(s, n);
  const Poly det = det2(as, prod_a(i + 1, n), prod_alpha(s, n), prod_alpha(i + 1, n));
  return RatFunc(-(prod_det_b(i, n) * det), as);
}

std::vector<IdentityInstance> incordiones_instances(int n) {
  std::vector<IdentityInstance> out;
  const int mid = (n + 1) / 2;
  for (const PartitionMap& sigma : enumerate_partition_maps(n)) {
    for (int i = 1; i <= n - 1; ++i) {
      const int si = sigma.at_extended(i);
      const int si1 = sigma.at_extended(i + 1);
      const int sni = sigma.at_extended(n - i + 1);
      auto make = [&](const std::string& what) {
        IdentityInstance inst;
        inst.name = "incordiones." + what + "[i=" + std::to_string(i) + "]";
        inst.n = n;
        inst.sigma = sigma;
        return inst;
      };
      if (si == si1) {
        if (!(n % 2 == 0 && i == mid)) { // m_{n/2} undefined for even n
          auto inst = make("m_sigma_vanishes");
          inst.lhs = {sigma_substitute(named_coeff(CoeffFamily::M, i, n), sigma)};
          out.push_back(std::move(inst));
        }
        if (si == sni && i != mid) { // l_{ceil(n/2)} undefined
          auto inst = make("l_sigma_vanishes");
          inst.lhs = {sigma_substitute(named_coeff(CoeffFamily::L, i, n), sigma)};
          out.push_back(std::move(inst));
        }
      } else if (si1 == sni) {
        auto rinst = make("r_men_sigma_g_form");
        rinst.lhs = {sigma_substitute(minor_r_men(i, n), sigma)};
        rinst.rhs = {r_men_closed_g(i, n, sigma)};
        out.push_back(std::move(rinst));
        auto ginst = make("g_def");
        const RatFunc rs = sigma_substitute(minor_r_men(i, n), sigma);
        ginst.lhs = {named_coeff(CoeffFamily::D, i, n) * rs * rs};
        ginst.rhs = {named_coeff(CoeffFamily::G, i, n, &sigma)};
        out.push_back(std::move(ginst));
      } else if (sni == si) {
        auto rinst = make("r_men_sigma_h_form");
        rinst.lhs = {sigma_substitute(minor_r_men(i, n), sigma)};
        rinst.rhs = {r_men_closed_h(i, n, sigma)};
        out.push_back(std::move(rinst));
        auto hinst = make("h_def");
        const RatFunc rs = sigma_substitute(minor_r_men(i, n), sigma);
        hinst.lhs = {named_coeff(CoeffFamily::D, i, n) * rs * rs};
        hinst.rhs = {named_coeff(CoeffFamily::H, i, n, &sigma)};
        out.push_back(std::move(hinst));
      }
    }
  }
  return out;
}

IdentityInstance psigma_instance(int n, const PartitionMap& sigma) {
  IdentityInstance inst;
  inst.name = "psigma_decomposition";
  inst.n = n;
  inst.sigma = sigma;
  inst.lhs = {sigma_substitute(build_P(AmbientSpec(AmbientKind::ProdProj, n)), sigma)};
  for (int i = 1; i <= n - 1; ++i) {
    const int si = sigma.at_extended(i);
    const int si1 = sigma.at_extended(i + 1);
    const int sni = sigma.at_extended(n - i + 1);
    if (si < si1) {
      inst.rhs.push_back(-(named_coeff(CoeffFamily::C, i, n) *
                           sigma_substitute(minor_r_big(i, n), sigma)));
      if (sni != si && sni != si1) {
        const RatFunc rs = sigma_substitute(minor_r_men(i, n), sigma);
        inst.rhs.push_back(-(named_coeff(CoeffFamily::D, i, n) * rs * rs));
      } else if (sni == si1) {
        inst.rhs.push_back(-named_coeff(CoeffFamily::G, i, n, &sigma));
      } else {
        inst.rhs.push_back(-named_coeff(CoeffFamily::H, i, n, &sigma));
      }
    } else {
      const RatFunc lead = RatFunc(prod_a(n - i, n), prod_a(i + 1, n));
      inst.rhs.push_back(-(lead * sigma_substitute(hodge2_minor(i, n), sigma)));
      if (sni != si)
        inst.rhs.push_back(-sigma_substitute(named_coeff(CoeffFamily::L, i, n), sigma));
    }
  }
  return inst;
}

IdentityInstance quadric_instance(bool even) {
  IdentityInstance inst;
  inst.name = even ? "quadric_even_decomposition" : "quadric_odd_decomposition";
  const Poly al1 = Poly::variable(var_alpha(1));
  const Poly al2 = Poly::variable(var_alpha(2));
  const Poly d = Poly::variable(var_d());
  const Poly mu = Poly::variable(var_mu());
  const auto kind = even ? AmbientKind::QuadricEvenN : AmbientKind::QuadricOddN;
  inst.lhs = {RatFunc(build_P(AmbientSpec(kind)))};
  // (D_S H_S)^2 - D_S^2 H_S^2 with D_S H_S = alpha1 + alpha2 and H_S^2 = 2d
  const Poly hodge = (al1 + al2) * (al1 + al2) - Rational(2) * (d * mu);
  const Poly square = (al1 - al2) * (al1 - al2);
  inst.rhs = {RatFunc(hodge.scaled(Rational(1, 2))),
              RatFunc(square.scaled(even ? Rational(-1, 2) : Rational(1, 2)))};
  return inst;
}

IdentityInstance blowup_instance() {
  IdentityInstance inst;
  inst.name = "blowup_p6_decomposition";
  const Poly a1 = Poly::variable(var_a(1)), a2 = Poly::variable(var_a(2));
  const Poly al1 = Poly::variable(var_alpha(1)), al2 = Poly::variable(var_alpha(2));
  const Poly l1 = Poly::variable(var_lambda(1)), l2 = Poly::variable(var_lambda(2));
  inst.lhs = {RatFunc(build_P(AmbientSpec(AmbientKind::BlowupP6)))};
  const Poly hd = det2(a1, al1, al1, l1);
  const std::array<Poly, 3> c1{a1, Poly::zero(), al1};
  const std::array<Poly, 3> c2{Poly::zero(), -a2, -al2};
  const std::array<Poly, 3> c3{al1, -al2, l1 + l2};
  const Poly big = c1[0] * det2(c2[1], c3[1], c2[2], c3[2]) -
                   c2[0] * det2(c1[1], c3[1], c1[2], c3[2]) +
                   c3[0] * det2(c1[1], c2[1], c1[2], c2[2]);
  inst.rhs = {RatFunc(-((a1 - a2) * hd), a1), RatFunc(big, a1)};
  return inst;
}

IdentityInstance cxp5_instance() {
  IdentityInstance inst;
  inst.name = "curve_x_p5_decomposition";
  const Poly a1 = Poly::variable(var_a(1)), a2 = Poly::variable(var_a(2));
  const Poly al1 = Poly::variable(var_alpha(1)), al2 = Poly::variable(var_alpha(2));
  const Poly l1 = Poly::variable(var_lambda(1)), l2 = Poly::variable(var_lambda(2));
  inst.lhs = {RatFunc(build_P(AmbientSpec(AmbientKind::CurveTimesP5)))};
  const std::array<Poly, 3> c1{a2, a1, al2};
  const std::array<Poly, 3> c2{a1, Poly::zero(), al1};
  const std::array<Poly, 3> c3{al2, al1, l2};
  const Poly big = c1[0] * det2(c2[1], c3[1], c2[2], c3[2]) -
                   c2[0] * det2(c1[1], c3[1], c1[2], c3[2]) +
                   c3[0] * det2(c1[1], c2[1], c1[2], c2[2]);
  // Note the a2/a1 coefficient on the reduced determinant (H,D on X.H.F).
  inst.rhs = {RatFunc(big, a1), RatFunc(-(a2 * det2(a1, al1, al1, l1)), a1)};
  return inst;
}

} // namespace

std::optional<SuiteId> suite_from_name(const std::string& name) {
  if (name == "proj") return SuiteId::Proj;
  if (name == "grass") return SuiteId::Grass;
  if (name == "prodproj_base") return SuiteId::ProdprojBase;
  if (name == "cambio") return SuiteId::Cambio;
  if (name == "incordiones") return SuiteId::Incordiones;
  if (name == "psigma") return SuiteId::Psigma;
  if (name == "quadric") return SuiteId::Quadric;
  if (name == "blowup") return SuiteId::Blowup;
  if (name == "cxp5") return SuiteId::Cxp5;
  return std::nullopt;
}

std::string suite_name(SuiteId id) {
  switch (id) {
    case SuiteId::Proj: return "proj";
    case SuiteId::Grass: return "grass";
    case SuiteId::ProdprojBase: return "prodproj_base";
    case SuiteId::Cambio: return "cambio";
    case SuiteId::Incordiones: return "incordiones";
    case SuiteId::Psigma: return "psigma";
    case SuiteId::Quadric: return "quadric";
    case SuiteId::Blowup: return "blowup";
    case SuiteId::Cxp5: return "cxp5";
  }
  return "?";
}

std::pair<int, int> suite_default_range(SuiteId id) {
  switch (id) {
    case SuiteId::Grass: return {4, 12};
    case SuiteId::ProdprojBase: return {4, 10};
    case SuiteId::Cambio:
    case SuiteId::Incordiones:
    case SuiteId::Psigma: return {4, 8};
    default: return {0, 0};
  }
}

int suite_min_n(SuiteId id) {
  switch (id) {
    case SuiteId::Grass: return 4;
    case SuiteId::ProdprojBase:
    case SuiteId::Cambio:
    case SuiteId::Incordiones:
    case SuiteId::Psigma: return 3;
    default: return 0;
  }
}

std::vector<IdentityInstance> build_suite_instances(SuiteId id, int n_min, int n_max) {
  std::vector<IdentityInstance> out;
  switch (id) {
    case SuiteId::Proj: out.push_back(proj_instance()); break;
    case SuiteId::Quadric:
      out.push_back(quadric_instance(true));
      out.push_back(quadric_instance(false));
      break;
    case SuiteId::Blowup: out.push_back(blowup_instance()); break;
    case SuiteId::Cxp5: out.push_back(cxp5_instance()); break;
    case SuiteId::Grass:
      for (int n = n_min; n <= n_max; ++n) out.push_back(grass_instance(n));
      break;
    case SuiteId::ProdprojBase:
      for (int n = n_min; n <= n_max; ++n) out.push_back(prodproj_base_instance(n));
      break;
    case SuiteId::Cambio:
      for (int n = n_min; n <= n_max; ++n)
        for (auto& inst : cambio_instances(n)) out.push_back(std::move(inst));
      break;
    case SuiteId::Incordiones:
      for (int n = n_min; n <= n_max; ++n)
        for (auto& inst : incordiones_instances(n)) out.push_back(std::move(inst));
      break;
    case SuiteId::Psigma:
      for (int n = n_min; n <= n_max; ++n)
        for (const PartitionMap& sigma : enumerate_partition_maps(n))
          out.push_back(psigma_instance(n, sigma));
      break;
  }
  return out;
}

std::vector<VerificationReport> run_suite(SuiteId id, int n_min, int n_max,
                                          const VerifyOptions& options, int jobs) {
  const int lo = std::max(n_min, suite_min_n(id));
  std::vector<IdentityInstance> instances = build_suite_instances(id, lo, n_max);
  std::vector<VerificationReport> reports(instances.size());
  if (jobs <= 1 || instances.size() <= 1) {
    for (std::size_t i = 0; i < instances.size(); ++i)
      reports[i] = verify_instance(instances[i], options);
    return reports;
  }
  std::atomic<std::size_t> next{0};
  std::vector<std::exception_ptr> errors(instances.size());
  auto worker = [&] {
    for (;;) {
      const std::size_t i = next.fetch_add(1);
      if (i >= instances.size()) return;
      try {
        reports[i] = verify_instance(instances[i], options);
      } catch (...) {
        errors[i] = std::current_exception();
      }
    }
  };
  std::vector<std::thread> pool;
  const int nthreads = std::min<int>(jobs, static_cast<int>(instances.size()));
  pool.reserve(static_cast<std::size_t>(nthreads));
  for (int t = 0; t < nthreads; ++t) pool.emplace_back(worker);
  for (auto& th : pool) th.join();
  for (const auto& err : errors)
    if (err) std::rethrow_exception(err);
  return reports;
}

} // namespace chowrank
