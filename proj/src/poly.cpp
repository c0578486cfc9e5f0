#include "chowrank/poly.hpp"

#include <algorithm>
#include <stdexcept>

namespace chowrank {

std::string var_name(VarId v) {
  switch (v.family) {
    case VarFamily::A: return "a" + std::to_string(v.index);
    case VarFamily::Alpha: return "alpha" + std::to_string(v.index);
    case VarFamily::Lambda: return "lambda" + std::to_string(v.index);
    case VarFamily::DSym: return "d";
    case VarFamily::DeltaSym: return "delta";
    case VarFamily::MuSym: return "mu";
  }
  return "?";
}

// ---- Monomial -------------------------------------------------------------

Monomial Monomial::var(VarId v, std::uint32_t exp) {
  Monomial m;
  if (exp > 0) m.entries_.push_back({v, exp});
  return m;
}

Monomial Monomial::from_entries(std::vector<Entry> entries) {
  std::sort(entries.begin(), entries.end(),
            [](const Entry& a, const Entry& b) { return a.first < b.first; });
  Monomial m;
  for (const auto& [v, e] : entries) {
    if (e == 0) continue;
    if (!m.entries_.empty() && m.entries_.back().first == v)
      m.entries_.back().second += e;
    else
      m.entries_.push_back({v, e});
  }
  return m;
}

std::int64_t Monomial::degree() const {
  std::int64_t d = 0;
  for (const auto& [v, e] : entries_) d += e;
  return d;
}

std::uint32_t Monomial::exponent_of(VarId v) const {
  for (const auto& [w, e] : entries_)
    if (w == v) return e;
  return 0;
}

Monomial Monomial::operator*(const Monomial& rhs) const {
  Monomial out;
  auto a = entries_.begin(), ae = entries_.end();
  auto b = rhs.entries_.begin(), be = rhs.entries_.end();
  while (a != ae || b != be) {
    if (b == be || (a != ae && a->first < b->first)) {
      out.entries_.push_back(*a++);
    } else if (a == ae || b->first < a->first) {
      out.entries_.push_back(*b++);
    } else {
      out.entries_.push_back({a->first, a->second + b->second});
      ++a;
      ++b;
    }
  }
  return out;
}

std::string Monomial::render() const {
  if (entries_.empty()) return "1";
  std::string s;
  for (const auto& [v, e] : entries_) {
    if (!s.empty()) s += "*";
    s += var_name(v);
    if (e > 1) s += "^" + std::to_string(e);
  }
  return s;
}

bool GradedLexLess::operator()(const Monomial& a, const Monomial& b) const {
  const auto da = a.degree(), db = b.degree();
  if (da != db) return da < db;
  // Lexicographic: earliest variable with differing exponent decides; the
  // monomial with the larger exponent there is the larger monomial.
  auto ia = a.entries().begin(), ea = a.entries().end();
  auto ib = b.entries().begin(), eb = b.entries().end();
  while (ia != ea && ib != eb) {
    if (ia->first == ib->first) {
      if (ia->second != ib->second) return ia->second < ib->second;
      ++ia;
      ++ib;
    } else if (ia->first < ib->first) {
      return false; // a has positive exponent on an earlier variable
    } else {
      return true;
    }
  }
  if (ia != ea) return false;
  if (ib != eb) return true;
  return false;
}

// ---- Poly -------------------------------------------------------------

Poly Poly::constant(const Rational& c) {
  Poly p;
  if (c != 0) p.terms_[Monomial::one()] = c;
  return p;
}

Poly Poly::variable(VarId v) {
  Poly p;
  p.terms_[Monomial::var(v)] = 1;
  return p;
}

Poly Poly::from_terms(TermMap terms) {
  Poly p;
  for (auto& [m, c] : terms)
    if (c != 0) p.terms_.emplace(m, std::move(c));
  return p;
}

bool Poly::is_constant() const {
  return terms_.empty() || (terms_.size() == 1 && terms_.begin()->first.is_one());
}

std::int64_t Poly::total_degree() const {
  if (terms_.empty()) return -1;
  return terms_.rbegin()->first.degree();
}

Rational Poly::coeff(const Monomial& m) const {
  auto it = terms_.find(m);
  return it == terms_.end() ? Rational(0) : it->second;
}

Poly Poly::operator-() const {
  Poly out;
  for (const auto& [m, c] : terms_) out.terms_.emplace(m, Rational(-c));
  return out;
}

Poly& Poly::operator+=(const Poly& rhs) {
  for (const auto& [m, c] : rhs.terms_) {
    auto [it, fresh] = terms_.try_emplace(m, c);
    if (!fresh) {
      it->second += c;
      if (it->second == 0) terms_.erase(it);
    }
  }
  return *this;
}

Poly& Poly::operator-=(const Poly& rhs) {
  for (const auto& [m, c] : rhs.terms_) {
    auto [it, fresh] = terms_.try_emplace(m, Rational(-c));
    if (!fresh) {
      it->second -= c;
      if (it->second == 0) terms_.erase(it);
    }
  }
  return *this;
}

Poly Poly::operator+(const Poly& rhs) const {
  Poly out = *this;
  out += rhs;
  return out;
}

Poly Poly::operator-(const Poly& rhs) const {
  Poly out = *this;
  out -= rhs;
  return out;
}

Poly Poly::operator*(const Poly& rhs) const {
  Poly out;
  for (const auto& [ma, ca] : terms_) {
    for (const auto& [mb, cb] : rhs.terms_) {
      Monomial m = ma * mb;
      Rational c = ca * cb;
      auto [it, fresh] = out.terms_.try_emplace(std::move(m), c);
      if (!fresh) {
        it->second += c;
        if (it->second == 0) out.terms_.erase(it);
      }
    }
  }
  return out;
}

Poly& Poly::operator*=(const Poly& rhs) {
  *this = *this * rhs;
  return *this;
}

Poly Poly::scaled(const Rational& c) const {
  Poly out;
  if (c == 0) return out;
  for (const auto& [m, k] : terms_) out.terms_.emplace(m, Rational(k * c));
  return out;
}

Poly Poly::pow(std::uint32_t e) const {
  Poly out = Poly::constant(1);
  for (std::uint32_t i = 0; i < e; ++i) out *= *this;
  return out;
}

void Poly::collect_vars(std::set<VarId>& out) const {
  for (const auto& [m, c] : terms_)
    for (const auto& [v, e] : m.entries()) out.insert(v);
}

Rational Poly::eval(const std::map<VarId, Rational>& values) const {
  Rational total = 0;
  for (const auto& [m, c] : terms_) {
    Rational term = c;
    for (const auto& [v, e] : m.entries()) {
      auto it = values.find(v);
      if (it == values.end())
        throw std::invalid_argument("eval: no value for variable " + var_name(v));
      for (std::uint32_t k = 0; k < e; ++k) term *= it->second;
    }
    total += term;
  }
  return total;
}

std::string Poly::render() const {
  if (terms_.empty()) return "0";
  std::string s;
  // Descending graded-lex.
  for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
    const Rational& c = it->second;
    const bool neg = c < 0;
    Rational abs = neg ? Rational(-c) : c;
    if (s.empty())
      s += neg ? "-" : "";
    else
      s += neg ? " - " : " + ";
    if (it->first.is_one()) {
      s += render_rational(abs);
    } else {
      if (abs != 1) s += render_rational(abs) + "*";
      s += it->first.render();
    }
  }
  return s;
}

// ---- RatFunc ----------------------------------------------------------

namespace {

// Multiplies num and den by -1 when den's leading coefficient is negative.
void normalize_sign(Poly& num, Poly& den) {
  if (den.is_zero()) return;
  if (den.terms().rbegin()->second < 0) {
    num = -num;
    den = -den;
  }
}

} // namespace

RatFunc::RatFunc(Poly numerator, Poly denominator)
    : num_(std::move(numerator)), den_(std::move(denominator)) {
  if (den_.is_zero()) throw std::domain_error("RatFunc: zero denominator");
  if (num_.is_zero()) den_ = Poly::constant(1);
  normalize_sign(num_, den_);
}

RatFunc RatFunc::operator-() const { return RatFunc(-num_, den_); }

RatFunc RatFunc::operator+(const RatFunc& rhs) const {
  return RatFunc(num_ * rhs.den_ + rhs.num_ * den_, den_ * rhs.den_);
}

RatFunc RatFunc::operator-(const RatFunc& rhs) const {
  return RatFunc(num_ * rhs.den_ - rhs.num_ * den_, den_ * rhs.den_);
}

RatFunc RatFunc::operator*(const RatFunc& rhs) const {
  return RatFunc(num_ * rhs.num_, den_ * rhs.den_);
}

RatFunc RatFunc::operator/(const RatFunc& rhs) const {
  if (rhs.num_.is_zero()) throw std::domain_error("RatFunc: division by zero");
  return RatFunc(num_ * rhs.den_, den_ * rhs.num_);
}

RatFunc& RatFunc::operator+=(const RatFunc& rhs) {
  *this = *this + rhs;
  return *this;
}

bool RatFunc::equals(const RatFunc& rhs) const {
  return cross_difference(rhs).is_zero();
}

Poly RatFunc::cross_difference(const RatFunc& rhs) const {
  return num_ * rhs.den_ - rhs.num_ * den_;
}

Rational RatFunc::eval(const std::map<VarId, Rational>& values) const {
  Rational d = den_.eval(values);
  if (d == 0) throw std::domain_error("RatFunc eval: denominator vanishes at point");
  return num_.eval(values) / d;
}

std::string RatFunc::render() const {
  if (den_ == Poly::constant(1)) return num_.render();
  return "(" + num_.render() + ")/(" + den_.render() + ")";
}

// ---- operations -------------------------------------------------------

RatFunc substitute(const Poly& p, const std::map<VarId, RatFunc>& map) {
  for (const auto& [v, f] : map)
    if (f.den().is_zero())
      throw std::domain_error("substitute: zero denominator for " + var_name(v));
  RatFunc total = RatFunc(Poly::zero());
  for (const auto& [m, c] : p.terms()) {
    RatFunc term = RatFunc(Poly::constant(c));
    for (const auto& [v, e] : m.entries()) {
      auto it = map.find(v);
      if (it == map.end()) {
        term = term * RatFunc(Poly::variable(v).pow(e));
      } else {
        term = term * RatFunc(it->second.num().pow(e), it->second.den().pow(e));
      }
    }
    total += term;
  }
  return total;
}

namespace {

bool alpha_lambda_only(const Monomial& m) {
  for (const auto& [v, e] : m.entries())
    if (v.family != VarFamily::Alpha && v.family != VarFamily::Lambda) return false;
  return true;
}

// Splits one monomial into (alpha/lambda part, rest).
std::pair<Monomial, Monomial> split_monomial(const Monomial& m) {
  std::vector<Monomial::Entry> al, rest;
  for (const auto& [v, e] : m.entries()) {
    if (v.family == VarFamily::Alpha || v.family == VarFamily::Lambda)
      al.push_back({v, e});
    else
      rest.push_back({v, e});
  }
  return {Monomial::from_entries(std::move(al)), Monomial::from_entries(std::move(rest))};
}

} // namespace

std::map<Monomial, Poly, GradedLexLess> alpha_lambda_split(const Poly& p) {
  std::map<Monomial, Poly, GradedLexLess> out;
  for (const auto& [m, c] : p.terms()) {
    auto [al, rest] = split_monomial(m);
    Poly::TermMap single;
    single[rest] = c;
    out[al] += Poly::from_terms(std::move(single));
  }
  return out;
}

Poly coeff_of(const Poly& p, const Monomial& mono) {
  if (!alpha_lambda_only(mono))
    throw std::invalid_argument("coeff_of: monomial mentions a non-alpha/lambda variable");
  auto split = alpha_lambda_split(p);
  auto it = split.find(mono);
  return it == split.end() ? Poly::zero() : it->second;
}

namespace {

std::uint64_t splitmix64(std::uint64_t x) {
  x += 0x9e3779b97f4a7c15ULL;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
  return x ^ (x >> 31);
}

} // namespace

Rational random_point_value(std::uint64_t seed, VarId v, std::uint64_t nonce,
                            std::uint64_t bound) {
  if (bound < 2) throw std::invalid_argument("random_point_value: bound must be >= 2");
  std::uint64_t key = splitmix64(seed);
  key = splitmix64(key ^ (static_cast<std::uint64_t>(v.family) << 32 | v.index));
  key = splitmix64(key ^ nonce);
  return Rational(1 + key % bound);
}

Rational eval_random(const Poly& p, std::uint64_t seed, std::uint64_t bound) {
  std::set<VarId> vars;
  p.collect_vars(vars);
  std::map<VarId, Rational> values;
  for (VarId v : vars) values[v] = random_point_value(seed, v, 0, bound);
  return p.eval(values);
}

} // namespace chowrank
