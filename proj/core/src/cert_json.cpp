#include "ratrec/serialize.hpp"

#include <json.hpp>

#include "ratrec/errors.hpp"

namespace ratrec {

namespace {

using Json = nlohmann::ordered_json;

Json rat_json(const Rat& value) { return rat_to_string(value); }

Rat rat_unjson(const Json& j) {
  if (!j.is_string()) throw InputError("expected a rational string");
  return rat_from_string(j.get<std::string>());
}

Json mpoly_json(const MPoly& p) {
  Json terms = Json::array();
  for (const auto& [e, c] : p.terms()) {
    Json exponents = Json::array();
    for (unsigned x : e) exponents.push_back(x);
    terms.push_back(Json::array({exponents, c.get_num().get_str(), c.get_den().get_str()}));
  }
  return Json{{"nvars", p.nvars()}, {"terms", terms}};
}

MPoly mpoly_unjson(const Json& j) {
  if (!j.is_object() || !j.contains("nvars") || !j.contains("terms")) {
    throw InputError("malformed polynomial record");
  }
  int nvars = j.at("nvars").get<int>();
  if (nvars < 0) throw InputError("negative variable count");
  MPoly p(nvars);
  for (const auto& term : j.at("terms")) {
    if (!term.is_array() || term.size() != 3) throw InputError("malformed polynomial term");
    Expt e;
    for (const auto& x : term[0]) e.push_back(x.get<unsigned>());
    if (static_cast<int>(e.size()) != nvars) throw InputError("exponent length mismatch");
    Int num(term[1].get<std::string>());
    Int den(term[2].get<std::string>());
    if (den == 0) throw InputError("zero coefficient denominator");
    Rat c(num, den);
    c.canonicalize();
    p.add_term(e, c);
  }
  return p;
}

Json upoly_json(const UPoly& p) {
  Json coeffs = Json::array();
  for (const auto& c : p.coeffs()) coeffs.push_back(rat_json(c));
  return coeffs;
}

UPoly upoly_unjson(const Json& j) {
  std::vector<Rat> coeffs;
  for (const auto& c : j) coeffs.push_back(rat_unjson(c));
  return UPoly(std::move(coeffs));
}

Json rat_vector_json(const std::vector<Rat>& v) {
  Json out = Json::array();
  for (const auto& c : v) out.push_back(rat_json(c));
  return out;
}

std::vector<Rat> rat_vector_unjson(const Json& j) {
  std::vector<Rat> out;
  for (const auto& c : j) out.push_back(rat_unjson(c));
  return out;
}

}  // namespace

std::string certificate_to_json(const Certificate& cert, int indent) {
  Json j;
  j["format"] = "ratrec-certificate/1";
  j["nvars"] = cert.nvars;
  j["input"] = Json{{"numerator", mpoly_json(cert.input_num)},
                    {"denominator", mpoly_json(cert.input_den)}};
  j["shear"] = rat_vector_json(cert.shear);
  j["sheared"] = Json{{"numerator", mpoly_json(cert.sheared_num)},
                      {"denominator", mpoly_json(cert.sheared_den)}};
  j["power"] = cert.power;
  Json seeds = Json::array();
  for (const auto& s : cert.seed_factors) seeds.push_back(upoly_json(s));
  j["seed_factors"] = seeds;
  j["truncation"] = cert.trunc;
  j["remainder_main_degree"] = cert.rem_main_deg;
  j["top_remainder_form"] = mpoly_json(cert.top_rem_form);
  Json witnesses = Json::array();
  for (const auto& w : cert.witnesses) {
    witnesses.push_back(Json{{"subset", w.subset},
                             {"main_power", w.main_power},
                             {"form", mpoly_json(w.form)}});
  }
  j["witnesses"] = witnesses;
  j["certificate_poly"] = mpoly_json(cert.certificate_poly);
  j["direction"] = rat_vector_json(cert.direction);
  j["plane"] = Json{{"numerator", mpoly_json(cert.plane.num)},
                    {"denominator", mpoly_json(cert.plane.den)}};
  return j.dump(indent) + "\n";
}

Certificate certificate_from_json(std::string_view text) {
  Json j;
  try {
    j = Json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    throw InputError(std::string("certificate is not valid JSON: ") + e.what());
  }
  try {
    if (j.at("format").get<std::string>() != "ratrec-certificate/1") {
      throw InputError("unknown certificate format tag");
    }
    Certificate cert;
    cert.nvars = j.at("nvars").get<int>();
    cert.input_num = mpoly_unjson(j.at("input").at("numerator"));
    cert.input_den = mpoly_unjson(j.at("input").at("denominator"));
    cert.shear = rat_vector_unjson(j.at("shear"));
    cert.sheared_num = mpoly_unjson(j.at("sheared").at("numerator"));
    cert.sheared_den = mpoly_unjson(j.at("sheared").at("denominator"));
    cert.power = j.at("power").get<int>();
    for (const auto& s : j.at("seed_factors")) cert.seed_factors.push_back(upoly_unjson(s));
    cert.trunc = j.at("truncation").get<int>();
    cert.rem_main_deg = j.at("remainder_main_degree").get<int>();
    cert.top_rem_form = mpoly_unjson(j.at("top_remainder_form"));
    for (const auto& w : j.at("witnesses")) {
      SubsetWitness witness;
      witness.subset = w.at("subset").get<std::vector<int>>();
      witness.main_power = w.at("main_power").get<int>();
      witness.form = mpoly_unjson(w.at("form"));
      cert.witnesses.push_back(std::move(witness));
    }
    cert.certificate_poly = mpoly_unjson(j.at("certificate_poly"));
    cert.direction = rat_vector_unjson(j.at("direction"));
    cert.plane.num = mpoly_unjson(j.at("plane").at("numerator"));
    cert.plane.den = mpoly_unjson(j.at("plane").at("denominator"));
    return cert;
  } catch (const nlohmann::json::exception& e) {
    throw InputError(std::string("malformed certificate document: ") + e.what());
  }
}

}  // namespace ratrec
