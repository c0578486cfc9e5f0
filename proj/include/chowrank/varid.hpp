#ifndef CHOWRANK_VARID_HPP
#define CHOWRANK_VARID_HPP

#include <compare>
#include <cstdint>
#include <string>

namespace chowrank {

// Variable families of the intersection-theoretic polynomial ring:
// a_i (class coefficients of X), alpha_i (class coefficients of D),
// lambda_i (D^2-type products on X), plus the three scalar symbols
// d (degree), delta (degree of D) and mu (D^2 H^{n-2}).
enum class VarFamily : std::uint8_t {
  A = 0,
  Alpha = 1,
  Lambda = 2,
  DSym = 3,
  DeltaSym = 4,
  MuSym = 5,
};

// Identifier of one variable. The (family, index) order is total and fixed
// for the process lifetime; index is unused (0) for the scalar families.
struct VarId {
  VarFamily family{VarFamily::A};
  std::uint32_t index{0};

  friend auto operator<=>(const VarId&, const VarId&) = default;
};

std::string var_name(VarId v);

inline VarId var_a(std::uint32_t i) { return {VarFamily::A, i}; }
inline VarId var_alpha(std::uint32_t i) { return {VarFamily::Alpha, i}; }
inline VarId var_lambda(std::uint32_t i) { return {VarFamily::Lambda, i}; }
inline VarId var_d() { return {VarFamily::DSym, 0}; }
inline VarId var_delta() { return {VarFamily::DeltaSym, 0}; }
inline VarId var_mu() { return {VarFamily::MuSym, 0}; }

} // namespace chowrank

#endif
