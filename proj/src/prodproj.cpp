#include "chowrank/prodproj.hpp"

#include <stdexcept>

namespace chowrank {

BidegreeClass BidegreeClass::monomial(int n, int i, int j, const Rational& c) {
  BidegreeClass out(n);
  out.add_term(i, j, c);
  return out;
}

int BidegreeClass::total_degree() const {
  if (terms_.empty()) return -1;
  return terms_.begin()->first.first + terms_.begin()->first.second;
}

Rational BidegreeClass::coeff(int i, int j) const {
  auto it = terms_.find({i, j});
  return it == terms_.end() ? Rational(0) : it->second;
}

void BidegreeClass::add_term(int i, int j, const Rational& c) {
  if (i < 0 || j < 0) throw std::invalid_argument("BidegreeClass: negative exponent");
  if (i >= n_ || j >= n_) return; // box truncation
  if (!terms_.empty() && i + j != total_degree())
    throw std::invalid_argument("BidegreeClass: mixed total degree");
  if (c == 0) return;
  auto [it, fresh] = terms_.try_emplace(Key{i, j}, c);
  if (!fresh) {
    it->second += c;
    if (it->second == 0) terms_.erase(it);
  }
}

BidegreeClass BidegreeClass::operator+(const BidegreeClass& rhs) const {
  if (n_ != rhs.n_) throw std::invalid_argument("BidegreeClass: mixed ambient n");
  BidegreeClass out = *this;
  for (const auto& [k, c] : rhs.terms_) out.add_term(k.first, k.second, c);
  return out;
}

BidegreeClass BidegreeClass::scaled(const Rational& c) const {
  BidegreeClass out(n_);
  if (c == 0) return out;
  for (const auto& [k, v] : terms_) out.add_term(k.first, k.second, v * c);
  return out;
}

std::string BidegreeClass::render() const {
  if (terms_.empty()) return "0";
  auto mono = [](int i, int j) {
    std::string s;
    if (i > 0) s += "H1" + (i > 1 ? "^" + std::to_string(i) : "");
    if (j > 0) {
      if (!s.empty()) s += "*";
      s += "H2" + (j > 1 ? "^" + std::to_string(j) : "");
    }
    return s.empty() ? std::string("1") : s;
  };
  std::string s;
  for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) { // H1-major order
    const Rational& c = it->second;
    const bool neg = c < 0;
    Rational abs = neg ? Rational(-c) : c;
    if (s.empty())
      s += neg ? "-" : "";
    else
      s += neg ? " - " : " + ";
    if (abs != 1) s += render_rational(abs) + "*";
    s += mono(it->first.first, it->first.second);
  }
  return s;
}

BidegreeClass bideg_product(const BidegreeClass& x, const BidegreeClass& y) {
  if (x.n() != y.n()) throw std::invalid_argument("bideg_product: mixed ambient n");
  BidegreeClass out(x.n());
  for (const auto& [kx, cx] : x.terms())
    for (const auto& [ky, cy] : y.terms())
      out.add_term(kx.first + ky.first, kx.second + ky.second, cx * cy);
  return out;
}

ProdData::ProdData(int n_, std::vector<Rational> a_, std::vector<Rational> alpha_,
                   std::vector<Rational> lambda_)
    : n(n_), a(std::move(a_)), alpha(std::move(alpha_)), lambda(std::move(lambda_)) {
  if (n < 3) throw std::invalid_argument("ProdData: need n >= 3");
  if (a.size() != static_cast<std::size_t>(n - 1) ||
      alpha.size() != static_cast<std::size_t>(n) ||
      lambda.size() != static_cast<std::size_t>(n - 1))
    throw std::invalid_argument("ProdData: for n=" + std::to_string(n) +
                                " need |a|=|lambda|=" + std::to_string(n - 1) +
                                ", |alpha|=" + std::to_string(n));
}

Rational ProdData::a_at(int i) const {
  if (i < 1 || i > n - 1) return 0; // a_0 = a_n = 0
  return a[static_cast<std::size_t>(i - 1)];
}

Rational ProdData::alpha_at(int i) const {
  if (i < 1 || i > n) return 0;
  return alpha[static_cast<std::size_t>(i - 1)];
}

Rational ProdData::lambda_at(int i) const {
  if (i < 1 || i > n - 1) return 0;
  return lambda[static_cast<std::size_t>(i - 1)];
}

ExactMatrix prod_matrix(const ProdData& data) {
  const int n = data.n;
  ExactMatrix M(3);
  for (int i = 1; i <= n; ++i) { // monomial columns H1^{n-i} H2^{i-1}
    M[0].push_back(data.a_at(i - 1));
    M[1].push_back(data.a_at(i));
    M[2].push_back(data.alpha_at(i));
  }
  for (int i = 1; i <= n - 1; ++i) { // D-columns
    M[0].push_back(data.alpha_at(i));
    M[1].push_back(data.alpha_at(i + 1));
    M[2].push_back(data.lambda_at(i));
  }
  return M;
}

std::vector<std::string> prod_matrix_labels(int n) {
  auto mono = [n](int i, int j) {
    std::string s;
    if (i > 0) s += "H1" + (i > 1 ? "^" + std::to_string(i) : "");
    if (j > 0) {
      if (!s.empty()) s += "*";
      s += "H2" + (j > 1 ? "^" + std::to_string(j) : "");
    }
    return s;
  };
  std::vector<std::string> labels;
  for (int i = 1; i <= n; ++i) labels.push_back(mono(n - i, i - 1));
  for (int i = 1; i <= n - 1; ++i) labels.push_back("D*" + mono(n - 1 - i, i - 1));
  return labels;
}

} // namespace chowrank
