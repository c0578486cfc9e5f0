#ifndef CHOWRANK_IO_HPP
#define CHOWRANK_IO_HPP

#include <optional>
#include <stdexcept>
#include <string>

#include <nlohmann/json.hpp>

#include "chowrank/rank.hpp"
#include "chowrank/verify.hpp"

namespace chowrank {

using ordered_json = nlohmann::ordered_json;

struct ParseError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// One parsed intersection-data file. Exactly one payload is set, matching
/// the ambient tag.
struct ParsedData {
  AmbientKind kind{AmbientKind::Projective};
  int n{0};
  std::optional<GrassData> grass;
  std::optional<ProdData> prod;
  std::optional<ProjectiveData> projective;
  std::optional<QuadricData> quadric;
  std::optional<PairAmbientData> pair; // blowup_p6 / curve_x_p5
};

/// Parses a data file. Rationals are "p/q" strings or JSON integers; floats
/// are rejected. Throws ParseError with a location-carrying message.
ParsedData parse_data_file(const std::string& text);

ordered_json data_file_json(const ParsedData& data);

/// Dispatches to the ambient's certifier.
RankCertificate analyze(const ParsedData& data);

ordered_json certificate_json(const RankCertificate& cert);
RankCertificate certificate_from_json(const ordered_json& j); // round-trip inverse

ordered_json report_json(const VerificationReport& report);

std::string conclusion_name(ConclusionKind kind);

} // namespace chowrank

#endif
