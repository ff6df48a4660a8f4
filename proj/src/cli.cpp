#include "lefschetz/cli.hpp"

#include "lefschetz/errors.hpp"
#include "lefschetz/expression.hpp"
#include "lefschetz/homology.hpp"
#include "lefschetz/lefschetz.hpp"
#include "lefschetz/mperl.hpp"
#include "lefschetz/tables.hpp"

#include <CLI11.hpp>
#include <nlohmann/json.hpp>

#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>

namespace lefschetz::cli {

namespace {

struct Options {
  std::string manifold;
  std::optional<int> n, m, degree, a, b;
  std::string homology_file;
  std::string periodic_file;
  std::string zeta_text;
  std::string format = "table";
  std::optional<std::uint64_t> max_period;
  std::optional<std::uint64_t> ceiling;
  std::size_t series_order = 0;
  bool unpruned = false;
};

class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

int need(const std::optional<int>& v, const char* flag, const std::string& kind) {
  if (!v) throw UsageError(std::string(flag) + " is required for " + kind);
  return *v;
}

ManifoldSpec manifold_spec(const Options& o) {
  const std::string& k = o.manifold;
  if (k == "sphere") return Sphere{need(o.n, "--n", k), o.degree.value_or(1)};
  if (k == "product") {
    ProductOfSpheres p{need(o.m, "--m", k), need(o.n, "--n", k), o.a.value_or(1), o.b.value_or(1)};
    if (o.degree && *o.degree != p.a * p.b)
      throw InvalidDegree("degree " + std::to_string(*o.degree) + " contradicts d = ab = " +
                          std::to_string(p.a * p.b));
    return p;
  }
  if (k == "complex") return ComplexProjective{need(o.n, "--n", k), o.degree.value_or(1)};
  if (k == "quaternion") return QuaternionProjective{need(o.n, "--n", k), o.degree.value_or(1)};
  throw UsageError("unknown manifold '" + k + "' (expected sphere, product, complex or quaternion)");
}

nlohmann::json read_json(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw UsageError("cannot open " + path);
  try {
    return nlohmann::json::parse(in);
  } catch (const nlohmann::json::parse_error& e) {
    throw MalformedModel(path + ": " + e.what());
  }
}

/// The single input of a command, reduced to what each verb needs.
struct Input {
  std::optional<ManifoldSpec> spec;
  std::optional<HomologyModel> model;
  CycloVector zeta;
};

Input read_input(const Options& o) {
  const int sources = (!o.manifold.empty()) + (!o.homology_file.empty()) + (!o.periodic_file.empty()) +
                      (!o.zeta_text.empty());
  if (sources != 1)
    throw UsageError("give exactly one input: a manifold, --homology, --periodic-data or --zeta");
  Input in;
  if (!o.manifold.empty()) {
    in.spec = manifold_spec(o);
    in.model = build_model(*in.spec);
    in.zeta = zeta_from_homology(*in.model);
  } else if (!o.homology_file.empty()) {
    in.model = model_from_json(read_json(o.homology_file));
    in.zeta = zeta_from_homology(*in.model);
  } else if (!o.periodic_file.empty()) {
    in.zeta = zeta_from_periodic_data(periodic_data_from_json(read_json(o.periodic_file)));
  } else {
    in.zeta = parse_zeta_expression(o.zeta_text);
  }
  return in;
}

std::string set_text(const PeriodSet& s) {
  std::string out = "{";
  bool first = true;
  for (auto p : s) {
    out += (first ? "" : ", ") + std::to_string(p);
    first = false;
  }
  return out + "}";
}

std::uint64_t bound_for(const Options& o, const CycloVector& zeta) {
  return o.max_period ? *o.max_period : default_period_bound(zeta);
}

void print_mper(const MPerResult& r, const Options& o, const std::optional<ManifoldSpec>& spec, std::ostream& out) {
  if (o.format == "json") {
    nlohmann::json j = to_json(r);
    if (spec) j["manifold"] = describe(*spec);
    out << j.dump(2) << "\n";
    return;
  }
  if (spec) out << "manifold:     " << describe(*spec) << "\n";
  out << "zeta:         " << r.zeta.to_string() << "\n";
  out << "factored:     " << format_zeta(r.zeta) << "\n";
  out << "MPer_L:       " << set_text(r.periods) << "\n";
  out << "status:       " << r.status() << "\n";
  out << "witnesses:\n";
  for (const auto& w : r.witnesses)
    out << "  " << to_expression(w) << "   forces " << set_text(w.forced_periods()) << "\n";
  if (!r.alternatives.empty()) {
    out << "alternatives: every representation forces one of\n";
    for (const auto& a : r.alternatives) out << "  " << set_text(a) << "\n";
  }
}

int cmd_zeta(const Options& o, std::ostream& out) {
  const Input in = read_input(o);
  nlohmann::json j;
  j["zeta"] = in.zeta.to_string();
  j["expression"] = format_zeta(in.zeta);
  j["degree"] = in.zeta.total_degree();
  std::vector<std::string> series, lef;
  if (o.series_order > 0) {
    const SeriesPrefix s = expand(in.zeta, o.series_order);
    for (const auto& c : s.coeffs) series.push_back(c.get_str());
    const auto report = verify_series_identity(in.zeta, o.series_order);
    for (const auto& l : report.log_lefschetz) lef.push_back(l.get_str());
    j["series"] = series;
    j["lefschetz"] = lef;
  }
  if (o.format == "json") {
    out << j.dump(2) << "\n";
    return kOk;
  }
  out << "zeta:       " << in.zeta.to_string() << "\n";
  out << "factored:   " << format_zeta(in.zeta) << "\n";
  out << "degree:     " << in.zeta.total_degree() << "\n";
  if (o.series_order > 0) {
    out << "series:    ";
    for (const auto& c : series) out << " " << c;
    out << "\nL(f^m):    ";
    for (const auto& l : lef) out << " " << l;
    out << "\n";
  }
  return kOk;
}

int cmd_alternatives(const Options& o, std::ostream& out) {
  const Input in = read_input(o);
  std::uint64_t bound = bound_for(o, in.zeta);
  ForcedAlternatives alt = forced_alternatives(in.zeta, bound, !o.unpruned);
  if (o.ceiling) {
    // Double the bound until the families stop changing or the ceiling is hit.
    while (bound * 2 <= *o.ceiling) {
      ForcedAlternatives next = forced_alternatives(in.zeta, bound * 2, !o.unpruned);
      bound *= 2;
      const bool stable = next.families == alt.families;
      alt = std::move(next);
      if (stable) break;
    }
  }
  if (o.format == "json") {
    nlohmann::json j;
    j["zeta"] = in.zeta.to_string();
    j["bound"] = bound;
    j["pruned"] = !o.unpruned;
    j["alternatives"] = nlohmann::json::array();
    for (const auto& f : alt.families) j["alternatives"].push_back(std::vector<std::uint64_t>(f.begin(), f.end()));
    out << j.dump(2) << "\n";
    return kOk;
  }
  out << "zeta:    " << in.zeta.to_string() << "\n";
  out << "bound:   " << bound << "\n";
  out << (o.unpruned ? "forced sets:" : "minimal forced sets:") << "\n";
  for (const auto& f : alt.families) out << "  " << set_text(f) << "\n";
  return kOk;
}

int cmd_verify(const Options& o, std::ostream& out) {
  const Input in = read_input(o);
  const std::size_t order = o.series_order > 0 ? o.series_order : 20;
  const SeriesIdentityReport rep = in.model ? verify_series_identity(*in.model, order)
                                            : verify_series_identity(in.zeta, order);
  if (o.format == "json") {
    nlohmann::json j;
    j["zeta"] = in.zeta.to_string();
    j["order"] = order;
    j["pass"] = rep.pass;
    j["first_mismatch"] = rep.first_mismatch ? nlohmann::json(*rep.first_mismatch) : nlohmann::json();
    std::vector<std::string> lef;
    for (const auto& l : rep.log_lefschetz) lef.push_back(l.get_str());
    j["lefschetz"] = lef;
    out << j.dump(2) << "\n";
  } else {
    out << "zeta:     " << in.zeta.to_string() << "\n";
    out << "order:    " << order << "\n";
    out << "identity: " << (rep.pass ? "pass" : "FAIL");
    if (rep.first_mismatch) out << " (first mismatch at t^" << *rep.first_mismatch << ")";
    out << "\n";
  }
  return rep.pass ? kOk : kUsage;
}

int cmd_tables(const Options& o, std::ostream& out) {
  const auto tables = product_sphere_tables();
  if (o.format == "json") {
    nlohmann::json j = nlohmann::json::array();
    for (const auto& t : tables) {
      nlohmann::json rows = nlohmann::json::array();
      for (const auto& r : t.rows) {
        nlohmann::json patterns = nlohmann::json::array();
        for (const auto& [a, b] : r.sign_patterns) patterns.push_back({{"a", a}, {"b", b}, {"d", a * b}});
        rows.push_back({{"label", r.label}, {"patterns", patterns}, {"zeta", r.zeta}});
      }
      j.push_back({{"table", t.number}, {"caption", t.caption}, {"rows", rows}});
    }
    out << j.dump(2) << "\n";
    return kOk;
  }
  out << render_markdown(tables);
  return kOk;
}

void add_input_options(CLI::App* sub, Options& o, bool manifold_only) {
  sub->add_option("manifold", o.manifold, "sphere | product | complex | quaternion");
  sub->add_option("--n", o.n, "dimension n (S^n, S^m x S^n, CP^n, HP^n)");
  sub->add_option("--m", o.m, "dimension m of S^m x S^n");
  sub->add_option("--degree", o.degree, "degree d, +1 or -1");
  sub->add_option("--a", o.a, "action on H_m of S^m x S^n");
  sub->add_option("--b", o.b, "action on H_n of S^m x S^n");
  if (manifold_only) return;
  sub->add_option("--homology", o.homology_file, "homology model JSON file");
  sub->add_option("--periodic-data", o.periodic_file, "periodic data JSON file");
  sub->add_option("--zeta", o.zeta_text, "zeta expression, e.g. \"(1+t)/(1-t)\"");
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Lefschetz numbers, zeta functions and minimal sets of Lefschetz periods", "mperl"};
  app.require_subcommand(1);
  Options o;

  auto add_format = [&](CLI::App* sub) {
    sub->add_option("--format", o.format, "json | table")->check(CLI::IsMember({"json", "table"}));
  };

  auto* classify_cmd = app.add_subcommand("classify", "minimal Lefschetz periods of a catalog manifold map");
  add_input_options(classify_cmd, o, true);
  classify_cmd->add_option("--max-period", o.max_period, "period bound P");
  add_format(classify_cmd);

  auto* zeta_cmd = app.add_subcommand("zeta", "Lefschetz zeta function in the cyclotomic basis");
  add_input_options(zeta_cmd, o, false);
  zeta_cmd->add_option("--series-order", o.series_order, "also print the Taylor expansion up to t^M");
  add_format(zeta_cmd);

  auto* mper_cmd = app.add_subcommand("mper", "minimal set of Lefschetz periods");
  add_input_options(mper_cmd, o, false);
  mper_cmd->add_option("--max-period", o.max_period, "period bound P");
  add_format(mper_cmd);

  auto* alt_cmd = app.add_subcommand("alternatives", "minimal forced-period families");
  add_input_options(alt_cmd, o, false);
  alt_cmd->add_option("--max-period", o.max_period, "period bound P");
  alt_cmd->add_option("--ceiling", o.ceiling, "double P until the families stabilize or P would exceed this");
  alt_cmd->add_flag("--unpruned", o.unpruned, "list every attainable forced set, not only minimal ones");
  add_format(alt_cmd);

  auto* verify_cmd = app.add_subcommand("verify", "check log(zeta) against the Lefschetz numbers");
  add_input_options(verify_cmd, o, false);
  verify_cmd->add_option("--series-order", o.series_order, "order M (default 20)");
  add_format(verify_cmd);

  auto* tables_cmd = app.add_subcommand("reproduce-tables", "zeta tables for S^m x S^n");
  add_format(tables_cmd);

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kOk : kUsage;
  }

  try {
    if (classify_cmd->parsed()) {
      if (o.manifold.empty()) throw UsageError("classify needs a manifold: sphere, product, complex or quaternion");
      const ManifoldSpec spec = manifold_spec(o);
      const CycloVector zeta = zeta_from_homology(build_model(spec));
      print_mper(minimal_lefschetz_periods(zeta, bound_for(o, zeta)), o, spec, out);
      return kOk;
    }
    if (zeta_cmd->parsed()) return cmd_zeta(o, out);
    if (mper_cmd->parsed()) {
      const Input in = read_input(o);
      print_mper(minimal_lefschetz_periods(in.zeta, bound_for(o, in.zeta)), o, in.spec, out);
      return kOk;
    }
    if (alt_cmd->parsed()) return cmd_alternatives(o, out);
    if (verify_cmd->parsed()) return cmd_verify(o, out);
    if (tables_cmd->parsed()) return cmd_tables(o, out);
  } catch (const UsageError& e) {
    err << "error: " << e.what() << "\n";
    return kUsage;
  } catch (const BoundTooSmall& e) {
    err << "error: " << e.what() << "\n";
    return kBound;
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    return kValidation;
  } catch (const std::length_error& e) {
    err << "error: " << e.what() << "\n";
    return kUsage;
  }
  return kUsage;
}

}  // namespace lefschetz::cli
