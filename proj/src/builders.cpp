#include "chowrank/builders.hpp"

#include <array>
#include <stdexcept>

namespace chowrank {

namespace {

Poly det2(const Poly& p11, const Poly& p12, const Poly& p21, const Poly& p22) {
  return p11 * p22 - p12 * p21;
}

Poly det3(const std::array<Poly, 3>& c1, const std::array<Poly, 3>& c2,
          const std::array<Poly, 3>& c3) {
  return c1[0] * det2(c2[1], c3[1], c2[2], c3[2]) -
         c2[0] * det2(c1[1], c3[1], c1[2], c3[2]) +
         c3[0] * det2(c1[1], c2[1], c1[2], c2[2]);
}

int ceil_half(int n) { return (n + 1) / 2; }

} // namespace

AmbientSpec::AmbientSpec(AmbientKind k, int n_) : kind(k), n(n_) {
  switch (kind) {
    case AmbientKind::GrassLines:
      if (n < 4) throw std::invalid_argument("GrassLines ambient needs n >= 4");
      break;
    case AmbientKind::ProdProj:
      if (n < 3) throw std::invalid_argument("ProdProj ambient needs n >= 3");
      break;
    case AmbientKind::QuadricEvenN:
      if (n != 0 && n % 2 != 0)
        throw std::invalid_argument("QuadricEvenN ambient given odd n");
      break;
    case AmbientKind::QuadricOddN:
      if (n != 0 && n % 2 == 0)
        throw std::invalid_argument("QuadricOddN ambient given even n");
      break;
    default:
      break; // n unused
  }
}

std::string AmbientSpec::tag() const {
  switch (kind) {
    case AmbientKind::Projective: return "projective";
    case AmbientKind::GrassLines: return "grass";
    case AmbientKind::ProdProj: return "prodproj";
    case AmbientKind::QuadricEvenN: return "quadric_even";
    case AmbientKind::QuadricOddN: return "quadric_odd";
    case AmbientKind::BlowupP6: return "blowup_p6";
    case AmbientKind::CurveTimesP5: return "curve_x_p5";
  }
  return "?";
}

Poly grass_a(int i, int n) {
  if (i < 1 || i > n / 2) return Poly::zero();
  return Poly::variable(var_a(static_cast<std::uint32_t>(i)));
}

Poly grass_alpha(int i, int n) {
  if (i < 1 || i > (n + 1) / 2) return Poly::zero();
  return Poly::variable(var_alpha(static_cast<std::uint32_t>(i)));
}

Poly grass_lambda(int i, int n) {
  if (i < 1 || i > n / 2) return Poly::zero();
  return Poly::variable(var_lambda(static_cast<std::uint32_t>(i)));
}

Poly prod_a(int i, int n) {
  if (i < 1 || i > n - 1) return Poly::zero(); // a_0 = a_n = 0
  return Poly::variable(var_a(static_cast<std::uint32_t>(i)));
}

Poly prod_alpha(int i, int n) {
  if (i < 1 || i > n) return Poly::zero();
  return Poly::variable(var_alpha(static_cast<std::uint32_t>(i)));
}

Poly prod_lambda(int i, int n) {
  if (i < 1 || i > n - 1) return Poly::zero();
  return Poly::variable(var_lambda(static_cast<std::uint32_t>(i)));
}

Poly build_P(const AmbientSpec& ambient) {
  const int n = ambient.n;
  const Poly d = Poly::variable(var_d());
  const Poly delta = Poly::variable(var_delta());
  const Poly mu = Poly::variable(var_mu());
  const Poly al1 = Poly::variable(var_alpha(1));
  const Poly al2 = Poly::variable(var_alpha(2));
  switch (ambient.kind) {
    case AmbientKind::Projective:
      return delta * delta - d * mu;
    case AmbientKind::GrassLines: {
      Poly p;
      for (int i = 1; i <= (n + 1) / 2; ++i) p += grass_alpha(i, n) * grass_alpha(i, n);
      for (int i = 1; i <= n / 2; ++i) p -= grass_a(i, n) * grass_lambda(i, n);
      return p;
    }
    case AmbientKind::ProdProj: {
      Poly p;
      for (int i = 1; i <= n; ++i) p += prod_alpha(i, n) * prod_alpha(n + 1 - i, n);
      for (int i = 1; i <= n - 1; ++i) p -= prod_a(i, n) * prod_lambda(n - i, n);
      return p;
    }
    case AmbientKind::QuadricEvenN:
      return Rational(2) * (al1 * al2) - d * mu;
    case AmbientKind::QuadricOddN:
      return al1 * al1 + al2 * al2 - d * mu;
    case AmbientKind::BlowupP6: {
      const Poly a1 = Poly::variable(var_a(1)), a2 = Poly::variable(var_a(2));
      const Poly l1 = Poly::variable(var_lambda(1)), l2 = Poly::variable(var_lambda(2));
      return al1 * al1 - al2 * al2 - a1 * l1 - a2 * l2;
    }
    case AmbientKind::CurveTimesP5: {
      const Poly a1 = Poly::variable(var_a(1)), a2 = Poly::variable(var_a(2));
      const Poly l1 = Poly::variable(var_lambda(1)), l2 = Poly::variable(var_lambda(2));
      return Rational(2) * (al1 * al2) - a1 * l2 - a2 * l1;
    }
  }
  throw std::logic_error("build_P: unknown ambient");
}

Poly hodge_minor_grass(int i, int n) {
  if (i < 1 || i > n / 2)
    throw std::out_of_range("hodge_minor_grass: need 1 <= i <= floor(n/2)");
  const Poly dh = grass_alpha(i, n) + grass_alpha(i + 1, n); // D.H on S_i
  const Poly li = grass_lambda(i, n);
  Poly first = det2(grass_a(i - 1, n) + grass_a(i, n), dh, grass_alpha(i, n), li);
  if (n % 2 == 0 && i == n / 2) return first; // single-summand case
  Poly second = det2(grass_a(i, n) + grass_a(i + 1, n), dh, grass_alpha(i + 1, n), li);
  return first + second;
}

Poly grass_weight(int i, int n) {
  if (i < 1 || i > n / 2)
    throw std::out_of_range("grass_weight: need 1 <= i <= floor(n/2)");
  Poly w = grass_a(i - 1, n) + grass_a(i, n);
  if (!(n % 2 == 0 && i == n / 2)) w += grass_a(i, n) + grass_a(i + 1, n);
  return w;
}

Poly grass_alpha_det(int i, int n) {
  if (i < 1 || i > (n + 1) / 2 - 1)
    throw std::out_of_range("grass_alpha_det: index out of range");
  return det2(grass_a(i - 1, n) + grass_a(i, n), grass_a(i, n) + grass_a(i + 1, n),
              grass_alpha(i, n), grass_alpha(i + 1, n));
}

Poly prod_det_c(int i, int n) {
  return det2(prod_a(i - 1, n), prod_a(i, n), prod_a(i, n), prod_a(i + 1, n));
}

Poly prod_det_b(int i, int n) {
  return det2(prod_a(i - 1, n), prod_a(n - i, n), prod_a(i, n), prod_a(n - i + 1, n));
}

Poly prod_det_a(int i, int n) {
  return det2(prod_a(i, n), prod_a(n - i, n), prod_a(i + 1, n), prod_a(n - i + 1, n));
}

namespace {

std::array<Poly, 3> prod_column(int c, int n) {
  if (c < 1 || c > 2 * n - 1)
    throw std::out_of_range("minor_r: column index outside 1..2n-1");
  if (c <= n) return {prod_a(c - 1, n), prod_a(c, n), prod_alpha(c, n)};
  const int i = c - n;
  return {prod_alpha(i, n), prod_alpha(i + 1, n), prod_lambda(i, n)};
}

} // namespace

Poly minor_r(int i, int j, int k, int n) {
  return det3(prod_column(i, n), prod_column(j, n), prod_column(k, n));
}

Poly minor_r_big(int i, int n) { return minor_r(i, i + 1, n + i, n); }

Poly minor_r_men(int i, int n) { return minor_r(i, i + 1, n - i + 1, n); }

Poly tilde_r(int i, int n) {
  return det2(prod_a(i - 1, n), prod_alpha(i, n), prod_alpha(i, n), prod_lambda(i, n));
}

Poly hodge2_minor(int i, int n) {
  return det2(prod_a(i + 1, n), prod_alpha(i + 1, n), prod_alpha(i + 1, n),
              prod_lambda(i, n));
}

RatFunc named_coeff(CoeffFamily family, int i, int n, const PartitionMap* sigma) {
  if (i < 1 || i > n - 1)
    throw std::domain_error("named_coeff: need 1 <= i <= n-1");
  const int s = sigma ? sigma->at_extended(i) : i;
  switch (family) {
    case CoeffFamily::C:
      return RatFunc(prod_a(n - i, n), prod_det_c(i, n));
    case CoeffFamily::D:
      if (i == ceil_half(n)) return RatFunc(Poly::zero()); // undefined, taken to be 0
      return RatFunc(prod_a(i, n) * prod_a(n - i, n),
                     prod_det_c(i, n) * prod_det_b(i, n) * prod_det_a(i, n));
    case CoeffFamily::L: {
      const Poly det = det2(prod_a(i, n), prod_a(n - i + 1, n), prod_alpha(i, n),
                            prod_alpha(n - i + 1, n));
      // Throws at i = ceil(n/2), where B_i (n odd) or A_i (n even) vanishes.
      return RatFunc(prod_a(n - i, n) * det * det * prod_det_c(i, n),
                     prod_a(i, n) * prod_det_b(i, n) * prod_det_a(i, n));
    }
    case CoeffFamily::M: {
      const Poly det =
          det2(prod_a(i, n), prod_a(i + 1, n), prod_alpha(i, n), prod_alpha(i + 1, n));
      const Poly bracket = prod_a(i, n) * prod_a(n - i + 1, n) * prod_alpha(i + 1, n) -
                           Rational(2) * (prod_a(i, n) * prod_a(i + 1, n) *
                                          prod_alpha(n - i + 1, n)) +
                           prod_a(i + 1, n) * prod_a(n - i + 1, n) * prod_alpha(i, n);
      return RatFunc(prod_a(n - i, n) * det * bracket,
                     prod_a(i, n) * prod_a(i + 1, n) * prod_det_a(i, n));
    }
    case CoeffFamily::G: {
      const Poly as = prod_a(s, n);
      const Poly det = det2(as, prod_a(i + 1, n), prod_alpha(s, n), prod_alpha(i + 1, n));
      return RatFunc(prod_a(i, n).pow(3) * prod_a(n - i, n) * prod_det_a(i, n) * det * det,
                     as * as * prod_a(i + 1, n) * prod_a(i + 1, n) * prod_det_b(i, n) *
                         prod_det_c(i, n));
    }
    case CoeffFamily::H: {
      const Poly as = prod_a(s, n);
      const Poly det = det2(as, prod_a(i + 1, n), prod_alpha(s, n), prod_alpha(i + 1, n));
      return RatFunc(prod_a(i, n) * prod_a(n - i, n) * prod_det_b(i, n) * det * det,
                     as * as * prod_det_a(i, n) * prod_det_c(i, n));
    }
  }
  throw std::logic_error("named_coeff: unknown family");
}

RatFunc sigma_substitute(const Poly& p, const PartitionMap& sigma) {
  const int n = sigma.n();
  std::map<VarId, RatFunc> map;
  for (int i = 2; i <= n - 1; ++i) {
    const int s = sigma.at(i);
    if (s == i) continue;
    map.emplace(var_alpha(static_cast<std::uint32_t>(i)),
                RatFunc(Poly::variable(var_a(static_cast<std::uint32_t>(i))) *
                            Poly::variable(var_alpha(static_cast<std::uint32_t>(s))),
                        Poly::variable(var_a(static_cast<std::uint32_t>(s)))));
  }
  return substitute(p, map);
}

RatFunc sigma_substitute(const RatFunc& f, const PartitionMap& sigma) {
  return sigma_substitute(f.num(), sigma) / sigma_substitute(f.den(), sigma);
}

} // namespace chowrank
