#include "chowrank/io.hpp"

namespace chowrank {

namespace {

Rational rational_field(const ordered_json& j, const std::string& key) {
  if (!j.contains(key)) throw ParseError("missing field \"" + key + "\"");
  const auto& v = j.at(key);
  if (v.is_number_unsigned())
    return Rational(BigInt(v.get<std::uint64_t>()));
  if (v.is_number_integer())
    return Rational(BigInt(v.get<std::int64_t>()));
  if (v.is_string()) {
    auto r = parse_rational(v.get<std::string>());
    if (!r) throw ParseError("field \"" + key + "\" is not an exact rational: " +
                             v.get<std::string>());
    return *r;
  }
  throw ParseError("field \"" + key + "\" must be an integer or a \"p/q\" string");
}

std::vector<Rational> rational_array(const ordered_json& j, const std::string& key) {
  if (!j.contains(key)) throw ParseError("missing array \"" + key + "\"");
  const auto& v = j.at(key);
  if (!v.is_array()) throw ParseError("field \"" + key + "\" must be an array");
  std::vector<Rational> out;
  for (std::size_t i = 0; i < v.size(); ++i) {
    const auto& x = v[i];
    if (x.is_number_unsigned()) {
      out.emplace_back(BigInt(x.get<std::uint64_t>()));
    } else if (x.is_number_integer()) {
      out.emplace_back(BigInt(x.get<std::int64_t>()));
    } else if (x.is_string()) {
      auto r = parse_rational(x.get<std::string>());
      if (!r)
        throw ParseError("entry " + std::to_string(i + 1) + " of \"" + key +
                         "\" is not an exact rational");
      out.push_back(*r);
    } else {
      throw ParseError("entry " + std::to_string(i + 1) + " of \"" + key +
                       "\" must be an integer or a \"p/q\" string");
    }
  }
  return out;
}

ordered_json rational_array_json(const std::vector<Rational>& xs) {
  ordered_json arr = ordered_json::array();
  for (const Rational& x : xs) arr.push_back(render_rational(x));
  return arr;
}

} // namespace

ParsedData parse_data_file(const std::string& text) {
  ordered_json j;
  try {
    j = ordered_json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    throw ParseError(e.what());
  }
  if (!j.is_object()) throw ParseError("top level must be a JSON object");
  if (!j.contains("ambient") || !j.at("ambient").is_string())
    throw ParseError("missing string field \"ambient\"");
  const std::string tag = j.at("ambient").get<std::string>();

  ParsedData data;
  try {
    if (tag == "grass" || tag == "prodproj") {
      if (!j.contains("n") || !j.at("n").is_number_integer())
        throw ParseError("missing integer field \"n\"");
      data.n = j.at("n").get<int>();
      auto a = rational_array(j, "a");
      auto alpha = rational_array(j, "alpha");
      auto lambda = rational_array(j, "lambda");
      if (tag == "grass") {
        data.kind = AmbientKind::GrassLines;
        data.grass = GrassData(data.n, std::move(a), std::move(alpha), std::move(lambda));
      } else {
        data.kind = AmbientKind::ProdProj;
        data.prod = ProdData(data.n, std::move(a), std::move(alpha), std::move(lambda));
      }
    } else if (tag == "projective") {
      data.kind = AmbientKind::Projective;
      data.projective = ProjectiveData{rational_field(j, "d"), rational_field(j, "delta"),
                                       rational_field(j, "mu")};
    } else if (tag == "quadric_even" || tag == "quadric_odd") {
      data.kind = tag == "quadric_even" ? AmbientKind::QuadricEvenN
                                        : AmbientKind::QuadricOddN;
      if (j.contains("n")) {
        data.n = j.at("n").get<int>();
        AmbientSpec(data.kind, data.n); // parity check
      }
      data.quadric = QuadricData{tag == "quadric_even", rational_field(j, "d"),
                                 rational_field(j, "alpha1"), rational_field(j, "alpha2"),
                                 rational_field(j, "mu")};
    } else if (tag == "blowup_p6" || tag == "curve_x_p5") {
      data.kind = tag == "blowup_p6" ? AmbientKind::BlowupP6 : AmbientKind::CurveTimesP5;
      data.pair = PairAmbientData{rational_field(j, "a1"),      rational_field(j, "a2"),
                                  rational_field(j, "alpha1"),  rational_field(j, "alpha2"),
                                  rational_field(j, "lambda1"), rational_field(j, "lambda2")};
    } else {
      throw ParseError("unknown ambient tag \"" + tag + "\"");
    }
  } catch (const std::invalid_argument& e) {
    throw ParseError(e.what()); // shape violations from the data constructors
  } catch (const nlohmann::json::exception& e) {
    throw ParseError(e.what()); // wrong field types
  }
  return data;
}

ordered_json data_file_json(const ParsedData& data) {
  ordered_json j;
  j["ambient"] = AmbientSpec(data.kind, data.n).tag();
  switch (data.kind) {
    case AmbientKind::GrassLines:
      j["n"] = data.n;
      j["a"] = rational_array_json(data.grass->a);
      j["alpha"] = rational_array_json(data.grass->alpha);
      j["lambda"] = rational_array_json(data.grass->lambda);
      break;
    case AmbientKind::ProdProj:
      j["n"] = data.n;
      j["a"] = rational_array_json(data.prod->a);
      j["alpha"] = rational_array_json(data.prod->alpha);
      j["lambda"] = rational_array_json(data.prod->lambda);
      break;
    case AmbientKind::Projective:
      j["d"] = render_rational(data.projective->d);
      j["delta"] = render_rational(data.projective->delta);
      j["mu"] = render_rational(data.projective->mu);
      break;
    case AmbientKind::QuadricEvenN:
    case AmbientKind::QuadricOddN:
      if (data.n != 0) j["n"] = data.n;
      j["d"] = render_rational(data.quadric->d);
      j["alpha1"] = render_rational(data.quadric->alpha1);
      j["alpha2"] = render_rational(data.quadric->alpha2);
      j["mu"] = render_rational(data.quadric->mu);
      break;
    case AmbientKind::BlowupP6:
    case AmbientKind::CurveTimesP5:
      j["a1"] = render_rational(data.pair->a1);
      j["a2"] = render_rational(data.pair->a2);
      j["alpha1"] = render_rational(data.pair->alpha1);
      j["alpha2"] = render_rational(data.pair->alpha2);
      j["lambda1"] = render_rational(data.pair->lambda1);
      j["lambda2"] = render_rational(data.pair->lambda2);
      break;
  }
  return j;
}

RankCertificate analyze(const ParsedData& data) {
  switch (data.kind) {
    case AmbientKind::GrassLines: return certify_grass(*data.grass);
    case AmbientKind::ProdProj: return certify_prod(*data.prod);
    case AmbientKind::Projective: return certify_projective(*data.projective);
    case AmbientKind::QuadricEvenN:
    case AmbientKind::QuadricOddN: {
      RankCertificate cert = certify_quadric(*data.quadric);
      cert.n = data.n;
      return cert;
    }
    case AmbientKind::BlowupP6: return certify_blowup_p6(*data.pair);
    case AmbientKind::CurveTimesP5: return certify_curve_x_p5(*data.pair);
  }
  throw std::logic_error("analyze: unknown ambient");
}

std::string conclusion_name(ConclusionKind kind) {
  switch (kind) {
    case ConclusionKind::RankOne: return "rank_one";
    case ConclusionKind::RankTwo: return "rank_two";
    case ConclusionKind::NotForced: return "not_forced";
    case ConclusionKind::Inconsistent: return "inconsistent";
  }
  return "?";
}

ordered_json certificate_json(const RankCertificate& cert) {
  ordered_json j;
  j["ambient"] = cert.ambient_tag;
  if (cert.n != 0) j["n"] = cert.n;
  j["hypothesis_status"] = cert.hypothesis_ok ? "ok" : "violated";
  if (!cert.hypothesis_ok) j["hypothesis_reason"] = cert.hypothesis_reason;
  j["P_value"] = render_rational(cert.p_value);
  ordered_json summands = ordered_json::array();
  for (const auto& s : cert.summands) {
    ordered_json e;
    e["label"] = s.label;
    e["value"] = render_rational(s.value);
    e["sign_ok"] = s.sign_ok;
    summands.push_back(std::move(e));
  }
  j["summands"] = std::move(summands);
  ordered_json conclusion;
  conclusion["kind"] = conclusion_name(cert.conclusion);
  if (cert.conclusion == ConclusionKind::RankOne) {
    conclusion["q"] = render_rational(cert.q);
  } else if (cert.conclusion == ConclusionKind::RankTwo) {
    conclusion["p"] = render_rational(cert.p);
    conclusion["q"] = render_rational(cert.q);
  } else {
    conclusion["reason"] = cert.reason;
  }
  j["conclusion"] = std::move(conclusion);
  if (!cert.notes.empty()) j["notes"] = cert.notes;
  return j;
}

RankCertificate certificate_from_json(const ordered_json& j) {
  RankCertificate cert;
  cert.ambient_tag = j.at("ambient").get<std::string>();
  if (j.contains("n")) cert.n = j.at("n").get<int>();
  cert.hypothesis_ok = j.at("hypothesis_status").get<std::string>() == "ok";
  if (j.contains("hypothesis_reason"))
    cert.hypothesis_reason = j.at("hypothesis_reason").get<std::string>();
  cert.p_value = *parse_rational(j.at("P_value").get<std::string>());
  for (const auto& e : j.at("summands")) {
    cert.summands.push_back({e.at("label").get<std::string>(),
                             *parse_rational(e.at("value").get<std::string>()),
                             e.at("sign_ok").get<bool>()});
  }
  const auto& c = j.at("conclusion");
  const std::string kind = c.at("kind").get<std::string>();
  if (kind == "rank_one") {
    cert.conclusion = ConclusionKind::RankOne;
    cert.q = *parse_rational(c.at("q").get<std::string>());
  } else if (kind == "rank_two") {
    cert.conclusion = ConclusionKind::RankTwo;
    cert.p = *parse_rational(c.at("p").get<std::string>());
    cert.q = *parse_rational(c.at("q").get<std::string>());
  } else {
    cert.conclusion = kind == "not_forced" ? ConclusionKind::NotForced
                                           : ConclusionKind::Inconsistent;
    cert.reason = c.at("reason").get<std::string>();
  }
  if (j.contains("notes"))
    for (const auto& note : j.at("notes")) cert.notes.push_back(note.get<std::string>());
  return cert;
}

ordered_json report_json(const VerificationReport& report) {
  ordered_json j;
  j["identity"] = report.identity;
  if (report.n != 0) j["n"] = report.n;
  if (report.sigma)
    j["sigma"] = report.sigma->render();
  else
    j["sigma"] = nullptr;
  j["status"] = report.verified() ? "verified" : "failed";
  j["residual"] = report.residual.render();
  ordered_json ledger = ordered_json::array();
  for (const auto& entry : report.ledger) {
    ordered_json e;
    e["monomial"] = entry.monomial.render();
    e["lhs"] = entry.lhs_coeff;
    e["rhs"] = entry.rhs_coeff;
    ledger.push_back(std::move(e));
  }
  j["mismatches"] = std::move(ledger);
  j["eval_samples"] = report.eval.samples;
  j["eval_value_mismatches"] = report.eval.value_mismatches;
  return j;
}

} // namespace chowrank
