#include "chowrank/schubert.hpp"

#include <stdexcept>
#include <string>

namespace chowrank {

SchubertSymbol::SchubertSymbol(int a_, int b_, int n_) : a(a_), b(b_), n(n_) {
  if (!(0 <= a && a < b && b <= n))
    throw std::invalid_argument("SchubertSymbol: need 0 <= a < b <= n, got Omega(" +
                                std::to_string(a_) + "," + std::to_string(b_) +
                                ") in G(1," + std::to_string(n_) + ")");
}

SchubertSymbol SchubertSymbol::from_partition(int p, int q, int n) {
  return SchubertSymbol(n - 1 - p, n - q, n);
}

std::string SchubertSymbol::render() const {
  return "Omega(" + std::to_string(a) + "," + std::to_string(b) + ")";
}

SchubertClass SchubertClass::of(const SchubertSymbol& s, const Rational& c) {
  SchubertClass out(s.n);
  out.add_term(s, c);
  return out;
}

int SchubertClass::codimension() const {
  return terms_.empty() ? -1 : terms_.begin()->first.codimension();
}

Rational SchubertClass::coeff(const SchubertSymbol& s) const {
  auto it = terms_.find(s);
  return it == terms_.end() ? Rational(0) : it->second;
}

void SchubertClass::add_term(const SchubertSymbol& s, const Rational& c) {
  if (s.n != n_) throw std::invalid_argument("SchubertClass: mixed ambient n");
  if (!terms_.empty() && s.codimension() != codimension())
    throw std::invalid_argument("SchubertClass: mixed codimension");
  if (c == 0) return;
  auto [it, fresh] = terms_.try_emplace(s, c);
  if (!fresh) {
    it->second += c;
    if (it->second == 0) terms_.erase(it);
  }
}

SchubertClass SchubertClass::operator+(const SchubertClass& rhs) const {
  if (n_ != rhs.n_) throw std::invalid_argument("SchubertClass: mixed ambient n");
  SchubertClass out = *this;
  for (const auto& [s, c] : rhs.terms_) out.add_term(s, c);
  return out;
}

SchubertClass SchubertClass::scaled(const Rational& c) const {
  SchubertClass out(n_);
  if (c == 0) return out;
  for (const auto& [s, k] : terms_) out.add_term(s, k * c);
  return out;
}

std::string SchubertClass::render() const {
  if (terms_.empty()) return "0";
  std::string s;
  for (const auto& [sym, c] : terms_) {
    const bool neg = c < 0;
    Rational abs = neg ? Rational(-c) : c;
    if (s.empty())
      s += neg ? "-" : "";
    else
      s += neg ? " - " : " + ";
    if (abs != 1) s += render_rational(abs) + "*";
    s += sym.render();
  }
  return s;
}

SchubertClass pieri_mul_h(const SchubertClass& c) {
  SchubertClass out(c.n());
  for (const auto& [s, k] : c.terms()) {
    if (s.a - 1 >= 0) out.add_term(SchubertSymbol(s.a - 1, s.b, s.n), k);
    if (s.b - 1 > s.a) out.add_term(SchubertSymbol(s.a, s.b - 1, s.n), k);
  }
  return out;
}

int lr_two_row_coeff(int mu1, int mu2, int nu1, int nu2, int la1, int la2) {
  if (la1 < mu1 || la2 < mu2 || la1 < la2) return 0;
  // Fill lambda/mu with nu1 ones and nu2 twos as a lattice semistandard
  // tableau: row 1 takes only 1s, row 2 takes x ones then the 2s.
  const int x = nu1 - (la1 - mu1);
  if (x < 0) return 0;
  if (x > la2 - mu2) return 0;   // row-2 capacity
  if (mu2 + x > mu1) return 0;   // column strictness for the 1s in row 2
  if (nu2 > la1 - mu1) return 0; // lattice word condition
  return 1;
}

SchubertClass schubert_product(const SchubertClass& x, const SchubertClass& y) {
  if (x.n() != y.n()) throw std::invalid_argument("schubert_product: mixed ambient n");
  const int n = x.n();
  SchubertClass out(n);
  for (const auto& [sx, cx] : x.terms()) {
    for (const auto& [sy, cy] : y.terms()) {
      const int mu1 = sx.part_p(), mu2 = sx.part_q();
      const int nu1 = sy.part_p(), nu2 = sy.part_q();
      const int total = mu1 + mu2 + nu1 + nu2;
      for (int la1 = total; 2 * la1 >= total; --la1) {
        if (la1 > n - 1) continue; // box truncation
        const int la2 = total - la1;
        if (lr_two_row_coeff(mu1, mu2, nu1, nu2, la1, la2))
          out.add_term(SchubertSymbol::from_partition(la1, la2, n), cx * cy);
      }
    }
  }
  return out;
}

Rational pairing_number(const SchubertClass& x, const SchubertClass& y) {
  if (x.is_zero() || y.is_zero()) return 0;
  if (x.n() != y.n()) throw std::invalid_argument("pairing_number: mixed ambient n");
  const int n = x.n();
  if (x.codimension() + y.codimension() != 2 * (n - 1))
    throw std::invalid_argument("pairing_number: codimensions not complementary");
  SchubertClass prod = schubert_product(x, y);
  return prod.coeff(SchubertSymbol(0, 1, n)); // point class
}

Rational degree_g1n(int n) {
  if (n < 2) throw std::invalid_argument("degree_g1n: need n >= 2");
  SchubertClass c = SchubertClass::of(SchubertSymbol(n - 1, n, n)); // fundamental class
  for (int i = 0; i < 2 * (n - 1); ++i) c = pieri_mul_h(c);
  return c.coeff(SchubertSymbol(0, 1, n));
}

GrassData::GrassData(int n_, std::vector<Rational> a_, std::vector<Rational> alpha_,
                     std::vector<Rational> lambda_)
    : n(n_), a(std::move(a_)), alpha(std::move(alpha_)), lambda(std::move(lambda_)) {
  if (n < 4) throw std::invalid_argument("GrassData: need n >= 4");
  const std::size_t ka = static_cast<std::size_t>(n / 2);
  const std::size_t kal = static_cast<std::size_t>((n + 1) / 2);
  if (a.size() != ka || alpha.size() != kal || lambda.size() != ka)
    throw std::invalid_argument(
        "GrassData: for n=" + std::to_string(n) + " need |a|=|lambda|=" +
        std::to_string(ka) + ", |alpha|=" + std::to_string(kal));
}

Rational GrassData::a_at(int i) const {
  if (i < 1 || i > static_cast<int>(a.size())) return 0;
  return a[static_cast<std::size_t>(i - 1)];
}

Rational GrassData::alpha_at(int i) const {
  if (i < 1 || i > static_cast<int>(alpha.size())) return 0;
  return alpha[static_cast<std::size_t>(i - 1)];
}

Rational GrassData::lambda_at(int i) const {
  if (i < 1 || i > static_cast<int>(lambda.size())) return 0;
  return lambda[static_cast<std::size_t>(i - 1)];
}

ExactMatrix grass_matrix(const GrassData& data) {
  const int n = data.n;
  const int m = (n - 1) / 2; // last Schubert column Omega(m, n-m)
  ExactMatrix M(2);
  for (int c = 0; c <= m; ++c) {
    M[0].push_back(data.a_at(c) + data.a_at(c + 1));
    M[1].push_back(data.alpha_at(c + 1));
  }
  for (int j = 1; j <= n / 2; ++j) {
    M[0].push_back(data.alpha_at(j) + data.alpha_at(j + 1));
    M[1].push_back(data.lambda_at(j));
  }
  return M;
}

std::vector<std::string> grass_matrix_labels(int n) {
  std::vector<std::string> labels;
  for (int c = 0; c <= (n - 1) / 2; ++c)
    labels.push_back("Omega(" + std::to_string(c) + "," + std::to_string(n - c) + ")");
  for (int j = 1; j <= n / 2; ++j)
    labels.push_back("D*Omega(" + std::to_string(j) + "," + std::to_string(n - j + 1) + ")");
  return labels;
}

} // namespace chowrank
