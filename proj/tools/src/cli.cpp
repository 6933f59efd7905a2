#include "cli.hpp"

#include <CLI11.hpp>
#include <chrono>
#include <fstream>
#include <json.hpp>
#include <numeric>
#include <optional>
#include <ostream>

#include "hgm/arith.hpp"
#include "hgm/charsums.hpp"
#include "hgm/error.hpp"
#include "hgm/family.hpp"
#include "hgm/hgm_sums.hpp"
#include "hgm/series.hpp"
#include "hgm/zeta.hpp"
#include "suites.hpp"

namespace hgm::tools {

namespace {

using json = nlohmann::ordered_json;

struct Options {
  std::vector<std::string> a, b, alpha, beta, suites;
  std::int64_t m = 0;
  std::int64_t p = 0;
  int r = 1;
  std::optional<std::uint32_t> q;
  std::uint32_t q_max = 0;
  std::string t;
  int precision_bits = 128;
  std::optional<int> series_order;
  std::string out_path;
  bool timing = false;
};

json num(const BigInt& v) {
  if (v >= BigInt(std::numeric_limits<std::int64_t>::min()) && v <= BigInt(std::numeric_limits<std::int64_t>::max()))
    return v.convert_to<std::int64_t>();
  return v.str();
}

json alg(const AlgValue& v) {
  return {{"re", to_double(v.re())}, {"im", to_double(v.im())}, {"err", to_double(v.err())}};
}

// Nearest integer when the enclosure pins one down, otherwise null.
json snapped(const AlgValue& v) {
  try {
    return num(v.snap().value);
  } catch (const Error&) {
    return nullptr;
  }
}

json poly(const IntPoly& p) {
  json out = json::array();
  for (const auto& c : p) out.push_back(num(c));
  return out;
}

json rat_poly(const RatPoly& p) {
  json out = json::array();
  for (const auto& c : p) out.push_back(to_string(c));
  return out;
}

std::vector<std::int64_t> ints(const std::vector<std::string>& text, const char* flag) {
  std::vector<std::int64_t> out;
  for (const auto& s : text) {
    std::size_t used = 0;
    std::int64_t v = 0;
    try {
      v = std::stoll(s, &used);
    } catch (const std::exception&) {
      used = 0;
    }
    if (used == 0 || used != s.size()) fail(ErrorKind::InvalidArgument, std::string(flag) + ": cannot parse integer '" + s + "'");
    out.push_back(v);
  }
  return out;
}

std::vector<ParamPoint> params(const std::vector<std::string>& text) {
  std::vector<ParamPoint> out;
  for (const auto& s : text) out.push_back(ParamPoint::parse(s));
  return out;
}

Rational parse_rational(const std::string& s) {
  if (s.empty()) fail(ErrorKind::InvalidArgument, "--t is required");
  return parse_rationals({s}).front();
}

bool is_coefficient_list(const std::string& t) { return t.find(',') != std::string::npos || (!t.empty() && t.front() == '['); }

// --t as a rational reduced mod p, or as coefficients over F_p.
FqElem parse_t(const FieldCtx& ctx, const std::string& t) {
  if (!is_coefficient_list(t)) return reduce_rational(ctx, parse_rational(t));
  std::string body = t;
  if (body.front() == '[') body = body.substr(1, body.size() - 2);
  std::vector<std::string> parts;
  std::size_t start = 0;
  while (true) {
    const auto comma = body.find(',', start);
    parts.push_back(body.substr(start, comma - start));
    if (comma == std::string::npos) break;
    start = comma + 1;
  }
  const auto cs = ints(parts, "--t");
  if (cs.size() > static_cast<std::size_t>(ctx.r())) fail(ErrorKind::InvalidArgument, "--t has more coefficients than r");
  std::vector<int> coeffs;
  for (auto c : cs) coeffs.push_back(static_cast<int>(mod(c, ctx.p())));
  return ctx.from_coeffs(coeffs);
}

json field_element(const FieldCtx& ctx, FqElem x) { return ctx.coeffs(x); }

CoverSpec cover(const Options& o, json& inputs) {
  if (o.m < 1) fail(ErrorKind::InvalidArgument, "--m must be a positive integer");
  std::vector<std::string> warnings;
  CoverSpec spec = CoverSpec::make(ints(o.a, "--a"), ints(o.b, "--b"), o.m, &warnings);
  inputs["a"] = spec.a;
  inputs["b"] = spec.b;
  inputs["m"] = spec.m;
  if (!warnings.empty()) inputs["normalized"] = warnings;
  return spec;
}

HgmParams hgm_params(const Options& o, json& inputs) {
  HgmParams hp(params(o.alpha), params(o.beta));
  json a = json::array(), b = json::array();
  for (const auto& x : hp.alpha) a.push_back(x.to_string());
  for (const auto& x : hp.beta) b.push_back(x.to_string());
  inputs["alpha"] = a;
  inputs["beta"] = b;
  return hp;
}

FieldCtx field(const Options& o, json& inputs) {
  if (o.p < 2) fail(ErrorKind::InvalidArgument, "--p is required");
  if (o.r < 1) fail(ErrorKind::InvalidArgument, "--r must be positive");
  FieldCtx ctx = build_field(static_cast<int>(o.p), o.r);
  inputs["p"] = o.p;
  inputs["r"] = o.r;
  inputs["q"] = ctx.q();
  return ctx;
}

class Emitter {
 public:
  Emitter(std::ostream& out, const Options& o) : out_(out), timing_(o.timing), bits_(o.precision_bits) {}

  void record(const std::string& command, json inputs, json outputs, json residuals, double ms) {
    json rec;
    rec["command"] = command;
    rec["inputs"] = std::move(inputs);
    rec["inputs"]["precision_bits"] = bits_;
    rec["outputs"] = std::move(outputs);
    rec["residuals"] = std::move(residuals);
    rec["timing"] = timing_ ? json({{"ms", ms}}) : json(nullptr);
    out_ << rec.dump() << '\n';
  }

 private:
  std::ostream& out_;
  bool timing_;
  int bits_;
};

class Stopwatch {
 public:
  double ms() const {
    return std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start_).count();
  }

 private:
  std::chrono::steady_clock::time_point start_ = std::chrono::steady_clock::now();
};

json count_record(const FieldCtx& ctx, const CoverSpec& spec, FqElem t, json& residuals) {
  json out;
  out["t"] = field_element(ctx, t);
  out["count_Y"] = count_Y(ctx, spec, t);
  json strata = json::array();
  for (std::uint32_t mask = 0; mask <= StratumIndex::full(spec.n()).mask; ++mask) {
    const StratumIndex I{mask};
    strata.push_back({{"I", I.to_string(spec.n())}, {"count", count_stratum(ctx, spec, I, t)}});
  }
  out["strata"] = strata;
  const std::uint64_t x = count_X(ctx, spec, t);
  out["count_X"] = x;
  const std::uint64_t direct = count_X_direct(ctx, spec, t);
  out["count_X_direct"] = direct;
  json qs = json::array();
  AlgValue total;
  for (std::int64_t d : divisors(std::gcd(spec.m, static_cast<std::int64_t>(ctx.order())))) {
    const QFactor f = q_factor(ctx, spec, d, t);
    total += f.value;
    qs.push_back({{"d", d},
                  {"case", to_string(f.formula_case)},
                  {"degeneracy", to_string(f.kind.kind)},
                  {"value", alg(f.value)},
                  {"snapped", snapped(f.value)},
                  {"oracle_agrees", f.agrees}});
  }
  out["q_factors"] = qs;
  residuals["count_X_minus_direct"] = static_cast<double>(x) - static_cast<double>(direct);
  residuals["q_sum_minus_count"] = to_double(total.distance(AlgValue::exact(static_cast<std::int64_t>(direct))));
  return out;
}

int cmd_count(const Options& o, Emitter& emit) {
  json inputs;
  const CoverSpec spec = cover(o, inputs);
  if (o.q_max > 0) {
    // Every field F_q, q <= q_max, of characteristic prime to m where t is
    // defined and avoids {0, 1}.
    const Rational t = parse_rational(o.t);
    inputs["t"] = to_string(t);
    for (std::uint32_t q : prime_powers(2, o.q_max)) {
      const auto pf = prime_factors(q);
      const std::int64_t p = static_cast<std::int64_t>(pf.front());
      if (spec.m % p == 0) continue;
      const auto bad = bad_primes(1, t);
      if (std::find(bad.begin(), bad.end(), p) != bad.end()) continue;
      int r = 0;
      for (std::uint32_t v = q; v > 1; v /= static_cast<std::uint32_t>(p)) ++r;
      Stopwatch clock;
      const FieldCtx ctx = build_field(static_cast<int>(p), r);
      json in = inputs, residuals;
      in["p"] = p;
      in["r"] = r;
      in["q"] = q;
      json out = count_record(ctx, spec, reduce_rational(ctx, t), residuals);
      emit.record("count", in, out, residuals, clock.ms());
    }
    return kExitOk;
  }
  Stopwatch clock;
  const FieldCtx ctx = field(o, inputs);
  inputs["t"] = o.t;
  const FqElem t = parse_t(ctx, o.t);
  json residuals;
  json out = count_record(ctx, spec, t, residuals);
  emit.record("count", inputs, out, residuals, clock.ms());
  return kExitOk;
}

int cmd_hsum(const Options& o, Emitter& emit) {
  Stopwatch clock;
  json inputs;
  const HgmParams hp = hgm_params(o, inputs);
  const FieldCtx ctx = field(o, inputs);
  inputs["t"] = o.t;
  const FqElem t = parse_t(ctx, o.t);
  const AlgValue h = h_sum(ctx, hp, t);
  const DegeneracyClass cls = classify(hp);
  json out{{"t", field_element(ctx, t)}, {"degeneracy", to_string(cls.kind)}, {"H", alg(h)}, {"snapped", snapped(h)}};
  json residuals = json::object();
  if (cls.kind == Degeneracy::Nondegenerate && t != ctx.one()) {
    const AlgValue s = hgm_point_sum(ctx, hp, t);
    out["point_sum"] = alg(s);
    residuals["point_sum_minus_H"] = to_double(s.distance(h));
  }
  emit.record("hsum", inputs, out, residuals, clock.ms());
  return kExitOk;
}

int cmd_gauss(const Options& o, Emitter& emit) {
  json inputs;
  const FieldCtx ctx = field(o, inputs);
  if (o.alpha.empty()) fail(ErrorKind::InvalidArgument, "--alpha is required");
  for (const ParamPoint& a : params(o.alpha)) {
    Stopwatch clock;
    json in = inputs;
    in["alpha"] = a.to_string();
    const AlgValue table = gauss_table(ctx).at(a, ctx);
    const AlgValue direct = gauss_sum(ctx, a);
    json out{{"g", alg(table)}, {"g_direct", alg(direct)}, {"omega_minus_one", char_at_minus_one(ctx, a)}};
    json residuals{{"table_minus_direct", to_double(table.distance(direct))}};
    if (!a.is_integer()) residuals["norm_minus_q"] = to_double(table.norm()) - ctx.q();
    emit.record("gauss", in, out, residuals, clock.ms());
  }
  return kExitOk;
}

int cmd_jacobi(const Options& o, Emitter& emit) {
  Stopwatch clock;
  json inputs;
  const FieldCtx ctx = field(o, inputs);
  if (o.alpha.size() != 1 || o.beta.size() != 1) fail(ErrorKind::InvalidArgument, "jacobi takes one --alpha and one --beta");
  const ParamPoint a = ParamPoint::parse(o.alpha[0]), b = ParamPoint::parse(o.beta[0]);
  inputs["alpha"] = a.to_string();
  inputs["beta"] = b.to_string();
  const AlgValue j = jacobi_sum(ctx, a, b);
  // J(a, b) against g(a) g(b) / g(a+b), i.e. the ratio at (a, -b).
  const AlgValue ratio = gauss_ratio(ctx, a, -b);
  AlgValue expected = ratio;
  if ((a + b).is_integer()) expected += AlgValue::exact(char_at_minus_one(ctx, b) * static_cast<std::int64_t>(ctx.order()));
  json out{{"J", alg(j)}, {"snapped", snapped(j)}, {"gauss_ratio", alg(ratio)}};
  json residuals{{"J_minus_ratio_identity", to_double(j.distance(expected))},
                 {"ratio_minus_closed_form", to_double(ratio.distance(gauss_ratio_closed_form(ctx, a, -b)))}};
  emit.record("jacobi", inputs, out, residuals, clock.ms());
  return kExitOk;
}

json factor_json(const LocalFactor& f) {
  json reps = f.orbit_reps;
  json out{{"d", f.d},
           {"kind", to_string(f.kind)},
           {"f_d", f.f_d},
           {"orbit_reps", reps},
           {"degree", f.degree},
           {"numerator", poly(f.num)},
           {"denominator", poly(f.den)}};
  if (f.kind == FactorKind::Hypergeometric) out["h_methods"] = f.h_methods;
  return out;
}

int cmd_zeta(const Options& o, Emitter& emit) {
  Stopwatch clock;
  json inputs;
  const CoverSpec spec = cover(o, inputs);
  if (o.p < 2) fail(ErrorKind::InvalidArgument, "--p is required");
  if (is_coefficient_list(o.t)) fail(ErrorKind::InvalidArgument, "zeta needs a rational --t");
  const Rational t = parse_rational(o.t);
  const int order = o.series_order.value_or(4);
  inputs["p"] = o.p;
  inputs["t"] = to_string(t);
  inputs["series_order"] = order;
  const LocalZeta z = local_zeta(o.p, spec, t, order);
  json factors = json::array();
  double snap_res = 0;
  for (const auto& f : z.factors) {
    factors.push_back(factor_json(f));
    snap_res = std::max(snap_res, to_double(f.max_snap_residual));
  }
  json counts = json::array();
  for (const auto& c : z.counts) counts.push_back(num(c));
  json out{{"factors", factors},
           {"counts", counts},
           {"count_series", rat_poly(z.count_series)},
           {"product_series", rat_poly(z.product_series)},
           {"series_check", z.series_check}};
  if (!z.series_check) out["first_mismatch"] = z.first_mismatch;
  json residuals{{"max_snap_residual", snap_res}};
  emit.record("zeta", inputs, out, residuals, clock.ms());
  return z.series_check ? kExitOk : kExitVerification;
}

int cmd_series_check(const Options& o, Emitter& emit) {
  Stopwatch clock;
  const auto alpha = parse_rationals(o.alpha), beta = parse_rationals(o.beta);
  if (alpha.empty() || alpha.size() != beta.size())
    fail(ErrorKind::InvalidArgument, "--alpha and --beta must be nonempty and of equal length");
  const int order = o.series_order.value_or(24);
  json inputs{{"alpha", o.alpha}, {"beta", o.beta}, {"series_order", order}};
  json out, per_j = json::array();
  bool all_zero = true;
  try {
    out["F"] = rat_poly(f_series(alpha, beta, order).coeffs);
  } catch (const Error& e) {
    if (e.kind() != ErrorKind::PoleInCoefficient) throw;
    out["F"] = nullptr;
  }
  for (std::size_t j = 0; j < beta.size(); ++j) {
    json entry{{"j", j + 1}};
    try {
      const RatSeries s = f_j_series(alpha, beta, j, order + 1);
      const RatSeries d = apply_D(alpha, beta, s);
      entry["offset"] = to_string(s.offset);
      entry["annihilated"] = d.is_zero();
      all_zero = all_zero && d.is_zero();
    } catch (const Error& e) {
      if (e.kind() != ErrorKind::PoleInCoefficient) throw;
      entry["skipped"] = e.what();
    }
    per_j.push_back(entry);
  }
  out["F_j"] = per_j;
  emit.record("series-check", inputs, out, json::object(), clock.ms());
  return all_zero ? kExitOk : kExitVerification;
}

int cmd_verify(const Options& o, Emitter& emit) {
  Grid grid = default_grid(o.q_max > 0 ? o.q_max : 50);
  if (o.q) {
    if (prime_factors(*o.q).size() != 1) fail(ErrorKind::NotPrime, "--q must be a prime power");
    grid.fields = {*o.q};
  }
  json fields = grid.fields;
  bool ok = true;
  for (const auto& suite : all_suites()) {
    if (!o.suites.empty() && std::find(o.suites.begin(), o.suites.end(), suite.name) == o.suites.end()) continue;
    Stopwatch clock;
    const SuiteResult r = suite.run(grid);
    ok = ok && r.passed();
    json out{{"statement", r.statement},
             {"passed", r.passed()},
             {"instances", r.instances},
             {"failures", r.failures},
             {"tolerance", r.tolerance}};
    if (!r.note.empty()) out["note"] = r.note;
    json residuals{{"worst", r.worst_residual}};
    if (r.stated_residual) {
      residuals["stated_worst"] = *r.stated_residual;
      out["stated_failures"] = r.stated_failures;
    }
    emit.record("verify", {{"suite", r.name}, {"fields", fields}, {"seed", grid.seed}}, out, residuals, clock.ms());
  }
  for (const auto& name : o.suites) {
    const auto& all = all_suites();
    if (std::none_of(all.begin(), all.end(), [&](const SuiteInfo& s) { return s.name == name; }))
      fail(ErrorKind::InvalidArgument, "unknown suite '" + name + "'");
  }
  return ok ? kExitOk : kExitVerification;
}

void error_record(std::ostream& out, const std::string& command, const std::string& kind, const std::string& message) {
  json rec{{"command", command}, {"error", {{"kind", kind}, {"message", message}}}};
  out << rec.dump() << '\n';
}

}  // namespace

int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Finite-field hypergeometric sums, point counts and local zeta factors"};
  app.require_subcommand(1);
  Options o;

  auto add_common = [&](CLI::App* sub) {
    sub->add_option("--precision-bits", o.precision_bits, "working precision (at most 128)")->capture_default_str();
    sub->add_option("--out", o.out_path, "write records to this file");
    sub->add_flag("--timing", o.timing, "include wall-clock timing in records");
  };
  auto add_cover = [&](CLI::App* sub) {
    sub->add_option("--a", o.a, "exponents a_i")->delimiter(',')->required();
    sub->add_option("--b", o.b, "exponents b_i")->delimiter(',')->required();
    sub->add_option("--m", o.m, "degree of the cover")->required();
  };
  auto add_field = [&](CLI::App* sub) {
    sub->add_option("--p", o.p, "characteristic");
    sub->add_option("--r", o.r, "degree over F_p")->capture_default_str();
  };
  auto add_params = [&](CLI::App* sub) {
    sub->add_option("--alpha", o.alpha, "numerator parameters")->delimiter(',');
    sub->add_option("--beta", o.beta, "denominator parameters")->delimiter(',');
  };
  auto add_t = [&](CLI::App* sub) { sub->add_option("--t", o.t, "rational, or coefficients over F_p"); };

  CLI::App* count = app.add_subcommand("count", "point counts of Y, its strata and X");
  add_cover(count);
  add_field(count);
  add_t(count);
  count->add_option("--q-max", o.q_max, "count over every admissible F_q with q <= q-max");
  add_common(count);

  CLI::App* hsum = app.add_subcommand("hsum", "hypergeometric sum H(alpha, beta, t)");
  add_params(hsum);
  add_field(hsum);
  add_t(hsum);
  add_common(hsum);

  CLI::App* gauss = app.add_subcommand("gauss", "Gauss sums g(alpha)");
  add_params(gauss);
  add_field(gauss);
  add_common(gauss);

  CLI::App* jacobi = app.add_subcommand("jacobi", "Jacobi sum J(alpha, beta)");
  add_params(jacobi);
  add_field(jacobi);
  add_common(jacobi);

  CLI::App* zeta = app.add_subcommand("zeta", "local zeta factorization at a good prime");
  add_cover(zeta);
  add_field(zeta);
  add_t(zeta);
  zeta->add_option("--series-order", o.series_order, "order of the series check (default 4)");
  add_common(zeta);

  CLI::App* verify = app.add_subcommand("verify", "run the identity suites");
  verify->add_option("--suite", o.suites, "suite names to run")->delimiter(',');
  verify->add_option("--q", o.q, "restrict the grid to one field size");
  verify->add_option("--q-max", o.q_max, "largest field size of the grid (default 50)");
  add_common(verify);

  CLI::App* series = app.add_subcommand("series-check", "annihilation of the classical series by D");
  add_params(series);
  series->add_option("--series-order", o.series_order, "truncation order (default 24)");
  add_common(series);

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    app.exit(e, out, err);
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    std::string command = "hgm";
    error_record(out, command, "InvalidArgument", e.what());
    return kExitPrecondition;
  }

  CLI::App* sub = app.get_subcommands().front();
  const std::string command = sub->get_name();

  std::ofstream file;
  if (!o.out_path.empty()) {
    file.open(o.out_path);
    if (!file) {
      error_record(out, command, "InvalidArgument", "cannot open " + o.out_path);
      return kExitPrecondition;
    }
  }
  std::ostream& sink = o.out_path.empty() ? out : file;
  Emitter emit(sink, o);

  try {
    if (o.precision_bits < 1 || o.precision_bits > 128)
      fail(ErrorKind::InvalidArgument, "--precision-bits must lie in [1, 128]; arithmetic is binary128");
    if (sub == count) return cmd_count(o, emit);
    if (sub == hsum) return cmd_hsum(o, emit);
    if (sub == gauss) return cmd_gauss(o, emit);
    if (sub == jacobi) return cmd_jacobi(o, emit);
    if (sub == zeta) return cmd_zeta(o, emit);
    if (sub == verify) return cmd_verify(o, emit);
    return cmd_series_check(o, emit);
  } catch (const Error& e) {
    error_record(sink, command, std::string(to_string(e.kind())), e.what());
    return e.kind() == ErrorKind::SeriesMismatch ? kExitVerification : kExitPrecondition;
  } catch (const std::exception& e) {
    error_record(sink, command, "InvalidArgument", e.what());
    return kExitPrecondition;
  }
}

}  // namespace hgm::tools
