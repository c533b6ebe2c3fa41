// Command-line surface for exact rational-function reconstruction and
// origin-regularity certification over the rationals.

#include <CLI11.hpp>
#include <json.hpp>

#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>

#include "ratrec/certify.hpp"
#include "ratrec/errors.hpp"
#include "ratrec/expr.hpp"
#include "ratrec/factor.hpp"
#include "ratrec/reconstruct.hpp"
#include "ratrec/rng.hpp"
#include "ratrec/serialize.hpp"
#include "ratrec/series.hpp"
#include "ratrec/unifit.hpp"

namespace {

using Json = nlohmann::ordered_json;
using namespace ratrec;

struct CommonOpts {
  std::uint64_t seed = 42;
  std::vector<int> caps = {6, 6};           // r_max, s_max
  std::vector<int> degree_bounds = {4, 4};  // dG, dH
  int verify = 10;
  int retries = 5;
  int truncation = 64;
  std::string json_path;
};

void add_common(CLI::App* cmd, CommonOpts& opts) {
  cmd->add_option("--seed", opts.seed, "random seed (default 42)");
  cmd->add_option("--caps", opts.caps, "degree caps r,s for type search")
      ->delimiter(',')
      ->expected(2);
  cmd->add_option("--degree-bounds", opts.degree_bounds,
                  "total-degree bounds dG,dH for the dense cross-check")
      ->delimiter(',')
      ->expected(2);
  cmd->add_option("--verify", opts.verify, "verification sample count");
  cmd->add_option("--retries", opts.retries, "retry budget");
  cmd->add_option("--truncation", opts.truncation, "series truncation cap");
  cmd->add_option("--json", opts.json_path,
                  "write the JSON report here ('-' for stdout)");
}

ReconParams recon_params(const CommonOpts& opts) {
  ReconParams p;
  p.r_max = opts.caps[0];
  p.s_max = opts.caps[1];
  p.n_verify = opts.verify;
  p.retry_budget = opts.retries;
  p.seed = opts.seed;
  return p;
}

CertifyParams certify_params(const CommonOpts& opts) {
  CertifyParams p;
  p.trunc_cap = opts.truncation;
  return p;
}

std::vector<std::string> split_names(const std::string& text) {
  std::vector<std::string> names;
  std::stringstream ss(text);
  std::string cell;
  while (std::getline(ss, cell, ',')) {
    if (!cell.empty()) names.push_back(cell);
  }
  if (names.empty()) throw InputError("empty variable list");
  return names;
}

std::vector<Rat> split_rats(const std::string& text) {
  std::vector<Rat> values;
  std::stringstream ss(text);
  std::string cell;
  while (std::getline(ss, cell, ',')) values.push_back(rat_from_string(cell));
  return values;
}

Json rat_vector_json(const std::vector<Rat>& v) {
  Json out = Json::array();
  for (const auto& c : v) out.push_back(rat_to_string(c));
  return out;
}

// Same term-triple layout as the certificate schema.
Json poly_json(const MPoly& p) {
  Json terms = Json::array();
  for (const auto& [e, c] : p.terms()) {
    Json exponents = Json::array();
    for (unsigned x : e) exponents.push_back(x);
    terms.push_back(Json::array({exponents, c.get_num().get_str(), c.get_den().get_str()}));
  }
  return Json{{"nvars", p.nvars()}, {"terms", terms}};
}

Json upoly_json(const UPoly& p) {
  Json coeffs = Json::array();
  for (const auto& c : p.coeffs()) coeffs.push_back(rat_to_string(c));
  return coeffs;
}

void emit(const CommonOpts& opts, const Json& doc, const std::string& human) {
  if (opts.json_path == "-") {
    std::cout << doc.dump(2) << "\n";
    return;
  }
  if (!opts.json_path.empty()) {
    std::ofstream out(opts.json_path);
    if (!out) throw InputError("cannot write to '" + opts.json_path + "'");
    out << doc.dump(2) << "\n";
  }
  std::cout << human;
}

// Oracle sources: an expression spec, a sample table, or both (the
// expression then backs table misses).
struct OracleInput {
  std::string expr_text;
  std::string table_path;

  void add_options(CLI::App* cmd) {
    cmd->add_option("--expr", expr_text,
                    "oracle spec, e.g. \"vars x y; x*y/(x^2+y^2) default 0\"");
    cmd->add_option("--table", table_path, "CSV sample table with header x1,...,xn,f");
  }

  std::pair<Oracle, std::vector<std::string>> build() const {
    std::optional<OracleSpec> spec;
    if (!expr_text.empty()) spec = parse_oracle_spec(expr_text);
    if (!table_path.empty()) {
      std::ifstream in(table_path);
      if (!in) throw InputError("cannot read table '" + table_path + "'");
      SampleTable table = parse_sample_table_csv(in);
      std::vector<std::string> names = default_var_names(table.nvars);
      if (spec) names = spec->variables;
      return {oracle_from_table(std::move(table), std::move(spec)), std::move(names)};
    }
    if (!spec) throw InputError("need --expr and/or --table");
    std::vector<std::string> names = spec->variables;
    return {oracle_from_spec(std::move(*spec)), std::move(names)};
  }
};

// Single polynomial input for the shear and lifting commands.
struct PolyInput {
  std::string vars_text;
  std::string poly_text;

  void add_options(CLI::App* cmd) {
    cmd->add_option("--vars", vars_text, "comma-separated variable names")->required();
    cmd->add_option("--poly", poly_text, "polynomial text")->required();
  }

  std::pair<MPoly, std::vector<std::string>> build() const {
    auto names = split_names(vars_text);
    return {parse_polynomial(poly_text, names), names};
  }
};

// Explicit fraction input for the certification commands.
struct PairInput {
  std::string vars_text;
  std::string num_text;
  std::string den_text = "1";
  std::string expr_text;

  void add_options(CLI::App* cmd) {
    cmd->add_option("--vars", vars_text, "comma-separated variable names for --num/--den");
    cmd->add_option("--num", num_text, "numerator polynomial");
    cmd->add_option("--den", den_text, "denominator polynomial");
    cmd->add_option("--expr", expr_text, "guard-free rational expression spec instead");
  }

  std::pair<RatFun, std::vector<std::string>> build() const {
    if (!expr_text.empty()) {
      auto spec = parse_oracle_spec(expr_text);
      return {spec_to_ratfun(spec), spec.variables};
    }
    if (vars_text.empty() || num_text.empty()) {
      throw InputError("need --expr or (--vars with --num [--den])");
    }
    auto names = split_names(vars_text);
    MPoly num = parse_polynomial(num_text, names);
    MPoly den = parse_polynomial(den_text, names);
    return {reduce_fraction(num, den), names};
  }
};

// ----------------------------------------------------------------------
// Subcommands
// ----------------------------------------------------------------------

int cmd_fit_line(const CommonOpts& opts, const OracleInput& input,
                 const std::string& base_text, const std::string& dir_text) {
  auto [oracle, names] = input.build();
  std::vector<Rat> base = split_rats(base_text);
  std::vector<Rat> dir = split_rats(dir_text);
  if (static_cast<int>(base.size()) != oracle.nvars ||
      static_cast<int>(dir.size()) != oracle.nvars) {
    throw InputError("line base and direction must match the oracle dimension");
  }
  LineOracle line = [&](const Rat& t) -> Rat {
    std::vector<Rat> point(base.size());
    for (std::size_t i = 0; i < base.size(); ++i) point[i] = base[i] + t * dir[i];
    return oracle.eval(point);
  };
  auto result = detect_type(line, opts.caps[0], opts.caps[1], opts.verify, opts.seed);

  Json doc;
  doc["command"] = "fit-line";
  doc["seed"] = opts.seed;
  doc["type"] = Json::array({result.type.num_deg, result.type.den_deg});
  doc["numerator"] = upoly_json(result.num);
  doc["denominator"] = upoly_json(result.den);
  std::ostringstream human;
  human << "type (" << result.type.num_deg << ", " << result.type.den_deg << ")\n"
        << "numerator   " << result.num.to_string("t") << "\n"
        << "denominator " << result.den.to_string("t") << "\n";
  emit(opts, doc, human.str());
  return 0;
}

int cmd_reconstruct(const CommonOpts& opts, const OracleInput& input, bool with_dense,
                    const std::vector<std::string>& verify_points) {
  auto [oracle, names] = input.build();
  ReconParams params = recon_params(opts);
  for (const auto& text : verify_points) {
    params.extra_verify_points.push_back(split_rats(text));
  }
  RatFun result = reconstruct(oracle, params);

  Json doc;
  doc["command"] = "reconstruct";
  doc["seed"] = opts.seed;
  doc["variables"] = names;
  doc["numerator"] = poly_json(result.num());
  doc["denominator"] = poly_json(result.den());
  doc["verified_samples"] = params.n_verify;
  std::ostringstream human;
  human << "f = (" << result.num().to_string(names) << ") / ("
        << result.den().to_string(names) << ")\n"
        << "verified at " << params.n_verify << " fresh samples\n";

  if (with_dense) {
    RatFun dense =
        reconstruct_dense(oracle, opts.degree_bounds[0], opts.degree_bounds[1], params);
    bool agree = dense == result;
    doc["dense_agrees"] = agree;
    human << "dense cross-check " << (agree ? "agrees" : "DISAGREES") << "\n";
    if (!agree) {
      emit(opts, doc, human.str());
      throw VerificationFailed("dense cross-check disagrees with the recursive result");
    }
  }
  emit(opts, doc, human.str());
  return 0;
}

Json decision_json(const RegularityDecision& decision, const std::vector<std::string>& names) {
  Json doc;
  doc["command"] = "certify";
  if (decision.regular) {
    doc["status"] = "regular";
    doc["value"] = rat_to_string(decision.value);
  } else {
    doc["status"] = "nonregular";
    doc["justification"] = decision.justification;
    if (decision.certificate) {
      doc["certificate"] = Json::parse(certificate_to_json(*decision.certificate));
    }
  }
  doc["variables"] = names;
  return doc;
}

int cmd_certify(const CommonOpts& opts, const PairInput& input, const std::string& at_text,
                const std::string& recheck_path) {
  if (!recheck_path.empty()) {
    std::ifstream in(recheck_path);
    if (!in) throw InputError("cannot read '" + recheck_path + "'");
    std::stringstream buffer;
    buffer << in.rdbuf();
    Json doc;
    try {
      doc = Json::parse(buffer.str());
    } catch (const nlohmann::json::parse_error& e) {
      throw InputError(std::string("not a JSON document: ") + e.what());
    }
    if (doc.is_object() && doc.contains("certificate")) doc = doc["certificate"];
    Certificate cert = certificate_from_json(doc.dump());
    recheck_certificate(cert);
    std::cout << "certificate verified: all invariants hold\n";
    return 0;
  }

  auto [fraction, names] = input.build();
  if (!at_text.empty()) {
    std::vector<Rat> point = split_rats(at_text);
    if (static_cast<int>(point.size()) != fraction.nvars()) {
      throw InputError("--at point dimension mismatch");
    }
    fraction =
        reduce_fraction(translate(fraction.num(), point), translate(fraction.den(), point));
  }
  auto decision = decide_regular_at_origin(fraction, certify_params(opts), opts.seed);

  Json doc = decision_json(decision, names);
  std::ostringstream human;
  if (decision.regular) {
    human << "regular at the origin, value " << rat_to_string(decision.value) << "\n";
  } else {
    human << "NOT regular at the origin (" << decision.justification << ")\n";
    if (decision.certificate) {
      const auto& cert = *decision.certificate;
      human << "witness plane direction (";
      for (std::size_t i = 0; i < cert.direction.size(); ++i) {
        human << (i ? ", " : "") << rat_to_string(cert.direction[i]);
      }
      human << ")\n";
    }
  }
  emit(opts, doc, human.str());
  return 0;
}

int cmd_witness_plane(const CommonOpts& opts, const PairInput& input,
                      const std::string& dir_text) {
  auto [fraction, names] = input.build();
  PlaneDir dir{split_rats(dir_text)};
  auto result = verify_witness_plane(fraction.num(), fraction.den(), dir);

  Json doc;
  doc["command"] = "witness-plane";
  doc["status"] = result.status == WitnessStatus::VerifiedNonRegular
                      ? "verified-nonregular"
                      : "not-a-witness";
  doc["plane"] = Json{{"numerator", poly_json(result.plane.num)},
                      {"denominator", poly_json(result.plane.den)}};
  std::vector<std::string> uv = {"u", "v"};
  std::ostringstream human;
  human << (result.status == WitnessStatus::VerifiedNonRegular
                ? "verified: the restriction is not regular at the origin\n"
                : "not a witness plane\n")
        << "restriction = (" << result.plane.num.to_string(uv) << ") / ("
        << result.plane.den.to_string(uv) << ")\n";
  emit(opts, doc, human.str());
  return 0;
}

int cmd_hensel(const CommonOpts& opts, const PolyInput& input, int order) {
  auto [h, names] = input.build();
  auto split = split_constant_term(h);
  std::vector<UPoly> seeds;
  seeds.push_back(UPoly::monomial(Rat(1), split.power));
  for (const auto& p : split.parts) seeds.push_back(p);
  auto lifted = hensel_lift(h, seeds, order);

  Json doc;
  doc["command"] = "hensel";
  doc["truncation"] = order;
  doc["power"] = split.power;
  Json factors = Json::array();
  for (const auto& f : lifted) factors.push_back(poly_json(f.to_poly()));
  doc["factors"] = factors;
  std::ostringstream human;
  human << "lifted " << lifted.size() << " factor(s) at truncation " << order << "\n";
  for (const auto& f : lifted) human << "  " << f.to_poly().to_string(names) << "\n";
  emit(opts, doc, human.str());
  return 0;
}

int cmd_factor_uni(const CommonOpts& opts, const std::string& poly_text,
                   const std::string& var) {
  UPoly f = upoly_in_var(parse_polynomial(poly_text, {var}), 0);
  auto factored = factor_univariate(f);

  Json doc;
  doc["command"] = "factor-uni";
  doc["unit"] = rat_to_string(factored.unit);
  Json factors = Json::array();
  for (const auto& [factor, mult] : factored.factors) {
    factors.push_back(Json{{"factor", upoly_json(factor)}, {"multiplicity", mult}});
  }
  doc["factors"] = factors;
  std::ostringstream human;
  human << rat_to_string(factored.unit);
  for (const auto& [factor, mult] : factored.factors) {
    human << " * (" << factor.to_string(var) << ")";
    if (mult > 1) human << "^" << mult;
  }
  human << "\n";
  emit(opts, doc, human.str());
  return 0;
}

int cmd_shear(const CommonOpts& opts, const PolyInput& input) {
  auto [h, names] = input.build();
  auto result = shear_to_general_position(h, opts.seed, certify_params(opts));

  Json doc;
  doc["command"] = "shear";
  doc["offsets"] = rat_vector_json(result.offsets);
  doc["scale"] = rat_to_string(result.scale);
  doc["sheared"] = poly_json(result.sheared);
  std::ostringstream human;
  human << "offsets (";
  for (std::size_t i = 0; i < result.offsets.size(); ++i) {
    human << (i ? ", " : "") << rat_to_string(result.offsets[i]);
  }
  human << ")\nsheared " << result.sheared.to_string(names) << "\n";
  emit(opts, doc, human.str());
  return 0;
}

// ----------------------------------------------------------------------
// Selftest fixtures
// ----------------------------------------------------------------------

struct Fixture {
  std::string name;
  std::function<void(std::uint64_t seed)> run;  // throws on failure
};

void expect(bool ok, const std::string& what) {
  if (!ok) throw VerificationFailed(what);
}

MPoly fx_poly(const std::string& text, const std::vector<std::string>& vars) {
  return parse_polynomial(text, vars);
}

std::vector<Fixture> builtin_fixtures() {
  const std::vector<std::string> xy = {"x", "y"};
  const std::vector<std::string> xyz = {"x", "y", "z"};
  std::vector<Fixture> fixtures;

  fixtures.push_back({"reduce-canonical-forms", [=](std::uint64_t) {
    RatFun a = reduce_fraction(fx_poly("x*y*(x^2+y^2)", xy), fx_poly("(x^2+y^2)^2", xy));
    expect(a.num() == fx_poly("x*y", xy) && a.den() == fx_poly("x^2+y^2", xy),
           "shared factor did not cancel");
    RatFun b = reduce_fraction(fx_poly("0", xy), fx_poly("x+1", xy));
    expect(b.is_zero() && b.den() == fx_poly("1", xy), "zero numerator form");
    RatFun c = reduce_fraction(fx_poly("6*x^2", xy), fx_poly("4*x", xy));
    expect(c.num() == fx_poly("3*x", xy) && c.den() == fx_poly("2", xy),
           "content normalization");
  }});

  fixtures.push_back({"unifit-fixed-type", [](std::uint64_t) {
    std::vector<Rat> nodes = {Rat(0), Rat(1), Rat(2)};
    std::vector<Rat> values = {Rat(0), rat_from_string("1/2"), rat_from_string("2/3")};
    auto fit = fit_fixed_type(nodes, values, 1, 1);
    expect(fit.status == FitStatus::Unique, "fit not unique");
    expect(fit.num == UPoly({Rat(0), Rat(1)}) && fit.den == UPoly({Rat(1), Rat(1)}),
           "fit differs from x/(x+1)");
    std::vector<Rat> pnodes = {Rat(1), Rat(2), Rat(3)};
    std::vector<Rat> pvalues = {Rat(1), Rat(4), Rat(9)};
    expect(fit_fixed_type(pnodes, pvalues, 1, 0).status == FitStatus::Inconsistent,
           "three parabola points fit a line");
  }});

  fixtures.push_back({"unifit-detect", [](std::uint64_t seed) {
    LineOracle f = [](const Rat& x) -> Rat { return Rat(1) / (Rat(1) + x * x); };
    auto d = detect_type(f, 4, 4, 10, seed);
    expect(d.type == TypeRS{0, 2}, "1/(1+x^2) type");
    LineOracle cubic = [](const Rat& x) -> Rat { return x * x * x; };
    expect(detect_type(cubic, 4, 4, 10, seed).type == TypeRS{3, 0}, "x^3 type");
    LineOracle restricted = [](const Rat& x) -> Rat { return x / (x * x + Rat(1)); };
    auto r = detect_type(restricted, 4, 4, 10, seed);
    expect(r.type == TypeRS{1, 2}, "x/(x^2+1) type");
  }});

  fixtures.push_back({"factor-univariate", [=](std::uint64_t) {
    auto check = [&](const std::string& text, std::size_t count) {
      UPoly f = upoly_in_var(fx_poly(text, {"x"}), 0);
      auto factored = factor_univariate(f);
      expect(factored.factors.size() == count, text + ": factor count");
      UPoly product = UPoly::constant(factored.unit);
      for (const auto& [factor, mult] : factored.factors) {
        product *= factor.pow(static_cast<unsigned>(mult));
      }
      expect(product == f, text + ": product mismatch");
    };
    check("x^2 - 1", 2);
    check("x^2 + 1", 1);
    check("x^4 - 4", 2);
    auto sq = squarefree_decomposition(upoly_in_var(fx_poly("(x-1)^2*(x+2)", {"x"}), 0));
    expect(sq.parts.size() == 2, "squarefree part count");
  }});

  fixtures.push_back({"hensel-lift-quadratic", [=](std::uint64_t) {
    const std::vector<std::string> xz = {"x", "z"};
    MPoly h = fx_poly("z^2 + z + x", xz);
    auto lifted = hensel_lift(h, {UPoly({Rat(0), Rat(1)}), UPoly({Rat(1), Rat(1)})}, 2);
    expect(lifted[0].to_poly() == fx_poly("z + x + x^2", xz), "lifted root factor");
    expect(lifted[1].to_poly() == fx_poly("z + 1 - x - x^2", xz), "lifted unit factor");
    for (int order = 0; order <= 6; ++order) {
      auto deep = hensel_lift(h, {UPoly({Rat(0), Rat(1)}), UPoly({Rat(1), Rat(1)})}, order);
      SeriesPoly product = series_mul(deep[0], deep[1]);
      expect(product == SeriesPoly::from_poly(h, order), "congruence at the truncation");
    }
  }});

  fixtures.push_back({"shear-fixtures", [=](std::uint64_t seed) {
    auto a = shear_to_general_position(fx_poly("z^2 - x*y", xyz), seed);
    expect(a.offsets == std::vector<Rat>{Rat(0), Rat(0)}, "cone needs no shear");
    auto b = shear_to_general_position(fx_poly("x*z + 1", xyz), seed);
    expect(b.sheared.degree_in_last() == 2, "sheared to full degree");
    auto c = shear_to_general_position(fx_poly("z^2 + z + x + y", xyz), seed);
    expect(c.offsets == std::vector<Rat>{Rat(0), Rat(0)}, "squarefree section accepted");
  }});

  auto certify_fixture = [=](const std::string& num, const std::string& den) {
    return [=](std::uint64_t seed) {
      auto cert = compute_certificate(fx_poly(num, xyz), fx_poly(den, xyz), {}, seed);
      recheck_certificate(cert);
      Certificate reparsed = certificate_from_json(certificate_to_json(cert));
      recheck_certificate(reparsed);
    };
  };
  fixtures.push_back({"witness-quadric-cone", certify_fixture("1", "z^2 - x*y")});
  fixtures.push_back({"witness-unit-seed", [=](std::uint64_t seed) {
    auto cert = compute_certificate(fx_poly("1", xyz), fx_poly("z^2 + z + x + y", xyz), {}, seed);
    expect(cert.witnesses.size() == 1, "one subset witness");
    expect(cert.witnesses[0].form == fx_poly("-(x+y)^2", xy), "hand-lifted witness form");
    recheck_certificate(cert);
  }});
  fixtures.push_back({"witness-remainder-form", certify_fixture("x", "z^2 + z + x + y")});

  fixtures.push_back({"plane-example-reconstruct", [=](std::uint64_t seed) {
    auto spec = parse_oracle_spec("vars x y; x*y/(x^2+y^2) default 0");
    Oracle oracle = oracle_from_spec(spec);
    ReconParams params;
    params.r_max = params.s_max = 4;
    params.seed = seed;
    RatFun got = reconstruct(oracle, params);
    expect(got.num() == fx_poly("x*y", xy) && got.den() == fx_poly("x^2+y^2", xy),
           "reconstruction differs from the closed form");
    RatFun dense = reconstruct_dense(oracle, 2, 2, params);
    expect(dense == got, "dense cross-check differs");
    auto decision = decide_regular_at_origin(got, {}, seed);
    expect(!decision.regular && decision.certificate.has_value(),
           "plane example must be non-regular with a certificate");
  }});

  fixtures.push_back({"plane-example-lines", [=](std::uint64_t seed) {
    auto spec = parse_oracle_spec("vars x y; x*y/(x^2+y^2) default 0");
    Oracle oracle = oracle_from_spec(spec);
    RatFun closed = reduce_fraction(fx_poly("x*y", xy), fx_poly("x^2+y^2", xy));
    Rng rng(derive_seed(seed, 0x11e5));
    int done = 0;
    while (done < 10) {
      std::vector<Rat> base = {Rat(rng.uniform(-9, 9)), Rat(rng.uniform(-9, 9))};
      std::vector<Rat> dir = {Rat(rng.uniform(-5, 5)), Rat(rng.uniform(-5, 5))};
      if (dir[0] == 0 && dir[1] == 0) continue;
      // Exclude lines through the origin: the restriction there is the
      // discontinuous constant-versus-zero function, not a regular one.
      if (base[0] * dir[1] - base[1] * dir[0] == 0) continue;
      ++done;
      LineOracle line = [&](const Rat& t) -> Rat {
        std::vector<Rat> p = {base[0] + t * dir[0], base[1] + t * dir[1]};
        return oracle.eval(p);
      };
      auto detected = detect_type(line, 4, 4, 10, derive_seed(seed, done));
      AffineLine affine{base, dir};
      RatFun expected = reduce_fraction(
          mpoly_from_upoly(restrict_to_line(closed.num(), affine), 1, 0),
          mpoly_from_upoly(restrict_to_line(closed.den(), affine), 1, 0));
      RatFun got = reduce_fraction(mpoly_from_upoly(detected.num, 1, 0),
                                   mpoly_from_upoly(detected.den, 1, 0));
      expect(got == expected, "line restriction mismatch");
      for (int extra = 0; extra < 10; ++extra) {
        Rat t(rng.uniform(-50, 50));
        expect(detected.num.eval(t) == line(t) * detected.den.eval(t),
               "extra consistency point mismatch");
      }
    }
  }});

  fixtures.push_back({"curve-example-limitation", [=](std::uint64_t seed) {
    auto spec = parse_oracle_spec(
        "vars x y z; if (y - x^2)^2 + (z - x^3)^2 == 0 then x else 0");
    Oracle oracle = oracle_from_spec(spec);
    ReconParams params;
    params.r_max = params.s_max = 4;
    params.seed = seed;
    RatFun got = reconstruct(oracle, params);
    expect(got.is_zero(), "dense-open behavior is the zero function");
    std::vector<Rat> on_curve = {Rat(1), Rat(1), Rat(1)};
    expect(oracle.eval(on_curve) == 1, "oracle value on the curve");
    expect(*got.eval(on_curve) == 0, "representation value on the curve");
    params.extra_verify_points = {on_curve};
    bool failed = false;
    try {
      reconstruct(oracle, params);
    } catch (const VerificationFailed&) {
      failed = true;
    }
    expect(failed, "pinning a curve point must fail verification");
  }});

  fixtures.push_back({"regular-decisions", [=](std::uint64_t seed) {
    auto a = decide_regular_at_origin(
        reduce_fraction(fx_poly("x + y", xy), fx_poly("1 + x^2 + y^2", xy)), {}, seed);
    expect(a.regular && a.value == 0, "regular with value 0");
    auto b = decide_regular_at_origin(
        reduce_fraction(fx_poly("x*y", xy), fx_poly("x^2 + y^2", xy)), {}, seed);
    expect(!b.regular, "plane example non-regular");
    auto c = decide_regular_at_origin(
        reduce_fraction(fx_poly("(1+x)*(x^2+y^2)", xy), fx_poly("x^2+y^2", xy)), {}, seed);
    expect(c.regular && c.value == 1, "reduction before the decision");
  }});

  return fixtures;
}

std::vector<Fixture> fixtures_from_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw InputError("cannot read fixtures file '" + path + "'");
  std::stringstream buffer;
  buffer << in.rdbuf();
  Json doc;
  try {
    doc = Json::parse(buffer.str());
  } catch (const nlohmann::json::parse_error& e) {
    throw InputError(std::string("fixtures file is not valid JSON: ") + e.what());
  }
  if (!doc.is_array()) throw InputError("fixtures file must hold a JSON array");

  std::vector<Fixture> fixtures;
  for (const auto& entry : doc) {
    if (!entry.is_object() || !entry.contains("name") || !entry.contains("kind")) {
      throw InputError("each fixture needs 'name' and 'kind'");
    }
    std::string name = entry.at("name").get<std::string>();
    std::string kind = entry.at("kind").get<std::string>();
    try {
      if (kind == "reconstruct") {
        auto spec = parse_oracle_spec(entry.at("spec").get<std::string>());
        MPoly num = parse_polynomial(entry.at("num").get<std::string>(), spec.variables);
        MPoly den = parse_polynomial(entry.at("den").get<std::string>(), spec.variables);
        fixtures.push_back({name, [=](std::uint64_t seed) {
          ReconParams params;
          params.r_max = params.s_max = 4;
          params.seed = seed;
          RatFun got = reconstruct(oracle_from_spec(spec), params);
          expect(got == reduce_fraction(num, den), "reconstruction mismatch");
        }});
      } else if (kind == "certify") {
        auto vars = entry.at("vars").get<std::vector<std::string>>();
        MPoly num = parse_polynomial(entry.at("num").get<std::string>(), vars);
        MPoly den = parse_polynomial(entry.at("den").get<std::string>(), vars);
        bool want_cert = entry.value("certificate", true);
        fixtures.push_back({name, [=](std::uint64_t seed) {
          auto decision = decide_regular_at_origin(reduce_fraction(num, den), {}, seed);
          expect(!decision.regular, "expected non-regular");
          if (want_cert) {
            expect(decision.certificate.has_value(), "expected a certificate");
            recheck_certificate(*decision.certificate);
          }
        }});
      } else if (kind == "regular-value") {
        auto vars = entry.at("vars").get<std::vector<std::string>>();
        MPoly num = parse_polynomial(entry.at("num").get<std::string>(), vars);
        MPoly den = parse_polynomial(entry.at("den").get<std::string>(), vars);
        Rat value = rat_from_string(entry.at("value").get<std::string>());
        fixtures.push_back({name, [=](std::uint64_t seed) {
          auto decision = decide_regular_at_origin(reduce_fraction(num, den), {}, seed);
          expect(decision.regular, "expected regular");
          expect(decision.value == value, "value mismatch");
        }});
      } else if (kind == "fit-line") {
        auto spec = parse_oracle_spec(entry.at("spec").get<std::string>());
        auto base = split_rats(entry.at("base").get<std::string>());
        auto dir = split_rats(entry.at("dir").get<std::string>());
        auto type = entry.at("type").get<std::vector<int>>();
        if (type.size() != 2) throw InputError("fit-line 'type' must be [r, s]");
        fixtures.push_back({name, [=](std::uint64_t seed) {
          Oracle oracle = oracle_from_spec(spec);
          LineOracle line = [&](const Rat& t) -> Rat {
            std::vector<Rat> p(base.size());
            for (std::size_t i = 0; i < base.size(); ++i) p[i] = base[i] + t * dir[i];
            return oracle.eval(p);
          };
          auto detected = detect_type(line, 4, 4, 10, seed);
          expect(detected.type == TypeRS{type[0], type[1]}, "type mismatch");
        }});
      } else {
        throw InputError("unknown fixture kind '" + kind + "'");
      }
    } catch (const nlohmann::json::exception& e) {
      throw InputError("fixture '" + name + "' is malformed: " + e.what());
    }
  }
  if (fixtures.empty()) throw InputError("fixtures file defines no fixtures");
  return fixtures;
}

int cmd_selftest(const CommonOpts& opts, const std::string& fixtures_path) {
  auto fixtures =
      fixtures_path.empty() ? builtin_fixtures() : fixtures_from_file(fixtures_path);

  Json report;
  report["format"] = "ratrec-selftest/1";
  report["seed"] = opts.seed;
  Json entries = Json::array();
  int failed = 0;
  std::ostringstream human;
  for (std::size_t i = 0; i < fixtures.size(); ++i) {
    Json entry;
    entry["name"] = fixtures[i].name;
    try {
      fixtures[i].run(derive_seed(opts.seed, 0xf1c + i));
      entry["pass"] = true;
      human << "[PASS] " << fixtures[i].name << "\n";
    } catch (const std::exception& e) {
      entry["pass"] = false;
      entry["detail"] = e.what();
      ++failed;
      human << "[FAIL] " << fixtures[i].name << ": " << e.what() << "\n";
    }
    entries.push_back(std::move(entry));
  }
  report["fixtures"] = entries;
  report["passed"] = static_cast<int>(fixtures.size()) - failed;
  report["failed"] = failed;
  human << (failed == 0 ? "all fixtures passed\n"
                        : std::to_string(failed) + " fixture(s) failed\n");
  emit(opts, report, human.str());
  return failed == 0 ? 0 : 2;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{
      "exact rational-representation reconstruction and origin-regularity certificates"};
  app.require_subcommand(1);

  CommonOpts opts;

  OracleInput fit_input;
  std::string fit_base, fit_dir;
  auto* fit = app.add_subcommand("fit-line", "detect the rational type along an affine line");
  add_common(fit, opts);
  fit_input.add_options(fit);
  fit->add_option("--base", fit_base, "line base point p1,...,pn")->required();
  fit->add_option("--dir", fit_dir, "line direction d1,...,dn")->required();

  OracleInput rec_input;
  bool rec_dense = false;
  std::vector<std::string> rec_verify_points;
  auto* rec = app.add_subcommand("reconstruct", "reconstruct a rational representation");
  add_common(rec, opts);
  rec_input.add_options(rec);
  rec->add_flag("--dense", rec_dense, "cross-check with the dense method");
  rec->add_option("--verify-point", rec_verify_points,
                  "extra point p1,...,pn every candidate must match (repeatable)");

  PairInput cert_input;
  std::string cert_at, cert_recheck;
  auto* cert = app.add_subcommand("certify", "decide regularity at the origin");
  add_common(cert, opts);
  cert_input.add_options(cert);
  cert->add_option("--at", cert_at, "translate this point to the origin first");
  cert->add_option("--recheck", cert_recheck, "re-verify a certificate JSON file and exit");

  PairInput wp_input;
  std::string wp_dir;
  auto* wp = app.add_subcommand("witness-plane", "verify one plane directly");
  add_common(wp, opts);
  wp_input.add_options(wp);
  wp->add_option("--dir", wp_dir, "plane direction a1,...,a(n-1)")->required();

  PolyInput hensel_input;
  int hensel_order = 4;
  auto* hen =
      app.add_subcommand("hensel", "lift the section factorization of a monic polynomial");
  add_common(hen, opts);
  hensel_input.add_options(hen);
  hen->add_option("--order", hensel_order, "series truncation order (default 4)");

  std::string factor_poly, factor_var = "x";
  auto* fac = app.add_subcommand("factor-uni", "factor a univariate polynomial over Q");
  add_common(fac, opts);
  fac->add_option("--poly", factor_poly, "polynomial text")->required();
  fac->add_option("--var", factor_var, "variable name (default x)");

  PolyInput shear_input;
  auto* shr = app.add_subcommand("shear", "put a polynomial in general position");
  add_common(shr, opts);
  shear_input.add_options(shr);

  std::string selftest_fixtures;
  auto* self = app.add_subcommand("selftest", "run the built-in fixture suite");
  add_common(self, opts);
  self->add_option("--fixtures", selftest_fixtures,
                   "JSON fixture file overriding the built-ins");

  try {
    app.parse(argc, argv);
    if (fit->parsed()) return cmd_fit_line(opts, fit_input, fit_base, fit_dir);
    if (rec->parsed()) return cmd_reconstruct(opts, rec_input, rec_dense, rec_verify_points);
    if (cert->parsed()) return cmd_certify(opts, cert_input, cert_at, cert_recheck);
    if (wp->parsed()) return cmd_witness_plane(opts, wp_input, wp_dir);
    if (hen->parsed()) return cmd_hensel(opts, hensel_input, hensel_order);
    if (fac->parsed()) return cmd_factor_uni(opts, factor_poly, factor_var);
    if (shr->parsed()) return cmd_shear(opts, shear_input);
    if (self->parsed()) return cmd_selftest(opts, selftest_fixtures);
    return 1;
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : 1;
  } catch (const MethodFailure& e) {
    std::cerr << "method failure: " << e.what() << "\n";
    return 2;
  } catch (const InputError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  } catch (const std::exception& e) {
    std::cerr << "internal error: " << e.what() << "\n";
    return 3;
  }
}
