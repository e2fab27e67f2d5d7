#include "conesmooth/cli.hpp"

#include <CLI11.hpp>

#include <chrono>
#include <cmath>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <map>
#include <memory>
#include <sstream>

#include "conesmooth/composite.hpp"
#include "conesmooth/cone.hpp"
#include "conesmooth/cone_smoothing.hpp"
#include "conesmooth/csv.hpp"
#include "conesmooth/error.hpp"
#include "conesmooth/function_smoothing.hpp"
#include "conesmooth/numeric_core.hpp"
#include "conesmooth/sampling.hpp"
#include "conesmooth/sublinear.hpp"
#include "conesmooth/verify.hpp"

namespace conesmooth::cli {

using nlohmann::json;

namespace {

const std::vector<std::pair<Command, std::string>>& command_names() {
  static const std::vector<std::pair<Command, std::string>> names = {
      {Command::SmoothEval, "smooth-eval"}, {Command::Core, "core"},     {Command::CoreEstimate, "core-estimate"},
      {Command::Hausdorff, "hausdorff"},    {Command::Verify, "verify"}, {Command::Bench, "bench"},
      {Command::Figure, "figure"}};
  return names;
}

std::uint64_t parse_seed(const std::string& text, const char* what) {
  std::size_t used = 0;
  unsigned long long v = 0;
  try {
    v = std::stoull(text, &used);
  } catch (const std::exception&) {
    used = 0;
  }
  if (used == 0 || used != text.size() || text.front() == '-')
    throw InvalidArgument(std::string(what) + ": '" + text + "' is not a non-negative integer");
  return v;
}

std::vector<Vec> parse_vertices(const std::string& text) {
  std::vector<Vec> out;
  std::stringstream rows(text);
  std::string row;
  while (std::getline(rows, row, ';')) {
    Vec v;
    std::stringstream cells(row);
    std::string cell;
    while (std::getline(cells, cell, ',')) {
      try {
        v.push_back(std::stod(cell));
      } catch (const std::exception&) {
        throw InvalidArgument("--vertices: cannot parse '" + cell + "'");
      }
    }
    if (!v.empty()) out.push_back(std::move(v));
  }
  return out;
}

SublinearFn build_family(const RunConfig& c) {
  const Family f = family_from_string(c.family);
  const std::size_t d = c.d == 0 ? 2 : c.d;
  switch (f) {
    case Family::ReLU:
      if (c.d > 1) throw InvalidArgument("relu is one-dimensional; got --d " + std::to_string(c.d));
      return SublinearFn::relu();
    case Family::EuclideanNorm: return SublinearFn::euclidean_norm(d);
    case Family::OneNorm: return SublinearFn::one_norm(d);
    case Family::WeightedInfNorm: {
      if (c.weights.empty()) throw InvalidArgument("weighted-inf-norm needs --weights");
      if (c.d != 0 && c.d != c.weights.size())
        throw InvalidArgument("--d disagrees with the number of --weights");
      return SublinearFn::weighted_inf_norm(c.weights);
    }
    case Family::Max: return SublinearFn::max(d);
    case Family::MaxEigen: return SublinearFn::max_eigen(d);
    case Family::PolytopeSupport:
      if (c.vertices.empty()) throw InvalidArgument("polytope needs --vertices");
      return SublinearFn::polytope_support(c.vertices);
  }
  throw InvalidArgument("unknown family '" + c.family + "'");
}

ConeModel build_cone(const RunConfig& c) {
  const ConeKind k = cone_kind_from_string(c.cone);
  const std::size_t d = c.d == 0 ? 2 : c.d;
  switch (k) {
    case ConeKind::Orthant: return ConeModel::orthant(d);
    case ConeKind::SecondOrder: return ConeModel::second_order(d);
    case ConeKind::PSD: return ConeModel::psd(d);
    case ConeKind::Exponential:
      if (c.d != 0 && c.d != 3) throw InvalidArgument("the exponential cone lives in R^3; got --d " + std::to_string(c.d));
      return ConeModel::exponential();
    case ConeKind::Lifted: break;
  }
  throw InvalidArgument("cone '" + c.cone + "' cannot be built from flags");
}

void flatten(const std::string& key, const json& v, CsvWriter& w) {
  if (v.is_object()) {
    for (const auto& [k, item] : v.items()) flatten(key.empty() ? k : key + "." + k, item, w);
  } else if (v.is_array()) {
    for (std::size_t i = 0; i < v.size(); ++i) flatten(key + "[" + std::to_string(i) + "]", v[i], w);
  } else {
    w.cell(key);
    if (v.is_number_float()) w.cell(v.get<double>());
    else if (v.is_string()) w.cell(v.get<std::string>());
    else w.cell(v.dump());
    w.end_row();
  }
}

std::string render(const json& doc, Format f) {
  if (f == Format::Json) return doc.dump(2) + "\n";
  std::ostringstream os;
  CsvWriter w(os);
  w.header({"key", "value"});
  flatten("", doc, w);
  return os.str();
}

void emit(const RunConfig& c, const std::string& text, std::ostream& out) {
  if (c.out.empty()) {
    out << text;
    return;
  }
  std::ofstream f(c.out, std::ios::binary);
  if (!f) throw InvalidArgument("cannot open output file '" + c.out + "'");
  f << text;
}

json report_json(const CheckReport& r) {
  return {{"name", r.name},        {"n_samples", r.n_samples}, {"worst_violation", r.worst_violation},
          {"tolerance", r.tolerance}, {"pass", r.pass},           {"seed", r.seed}};
}

json family_descriptor(const RunConfig& c) {
  json j = {{"family", c.family}};
  if (c.d != 0) j["d"] = c.d;
  if (!c.weights.empty()) j["weights"] = c.weights;
  if (!c.vertices.empty()) j["vertices"] = c.vertices;
  return j;
}

json cone_descriptor(const RunConfig& c) {
  json j = {{"cone", c.cone}};
  if (c.d != 0) j["d"] = c.d;
  return j;
}

int cmd_smooth_eval(const RunConfig& c, std::ostream& out) {
  const SublinearFn f = build_family(c);
  const SmoothingSpec s(f, variant_from_string(c.variant), c.beta);
  require_dim(c.x.size(), f.dim(), "--x");
  json doc = family_descriptor(c);
  doc["variant"] = c.variant;
  doc["beta"] = c.beta;
  doc["x"] = c.x;
  doc["value"] = s.value(c.x);
  doc["gradient"] = s.gradient(c.x);
  doc["sigma"] = f.eval(c.x);
  doc["lambda"] = s.lambda();
  doc["distance_bound"] = s.distance_bound();
  emit(c, render(doc, c.format), out);
  return 0;
}

int cmd_core(const RunConfig& c, std::ostream& out) {
  json doc;
  if (!c.family.empty()) {
    const FunctionalCore core = compute_core(build_family(c));
    doc = family_descriptor(c);
    doc["center"] = core.center;
    doc["height"] = core.center_height;
    doc["width"] = core.width;
    doc["unique"] = core.unique;
    doc["provenance"] = to_string(core.provenance);
  } else {
    const ConicCore core = cone_core(build_cone(c));
    doc = cone_descriptor(c);
    doc["center"] = core.center;
    doc["width"] = core.width;
    doc["unique"] = core.unique;
    doc["provenance"] = to_string(core.provenance);
  }
  emit(c, render(doc, c.format), out);
  return 0;
}

int cmd_core_estimate(const RunConfig& c, std::ostream& out) {
  const ConeModel k = build_cone(c);
  const std::size_t n = c.n == 0 ? 20000 : c.n;
  const std::uint64_t seed = effective_seed(c);
  const CoreEstimate e = estimate_core(k, n, seed);
  json doc = cone_descriptor(c);
  doc["n"] = n;
  doc["seed"] = seed;
  doc["normals"] = e.normals.size();
  doc["center"] = e.center_estimate;
  doc["width"] = e.width_estimate;
  doc["max_violation"] = e.max_violation;
  doc["unique"] = uniqueness_probe(e, 1000);
  emit(c, render(doc, c.format), out);
  return 0;
}

int cmd_hausdorff(const RunConfig& c, std::ostream& out) {
  const std::uint64_t seed = effective_seed(c);
  const std::size_t n = c.n == 0 ? 200 : c.n;
  const Variant v = variant_from_string(c.variant);
  if (!c.family.empty()) {
    const SmoothingSpec s(build_family(c), v, c.beta);
    json doc = family_descriptor(c);
    doc["variant"] = c.variant;
    doc["beta"] = c.beta;
    doc["samples"] = n;
    doc["seed"] = seed;
    doc["distance"] = estimate_distance(s, c.radius, n, seed);
    doc["bound"] = s.distance_bound();
    emit(c, render(doc, c.format), out);
    return 0;
  }
  const SmoothedSet s(build_cone(c), v, c.beta);
  const double radius = c.radius > 0.0 ? c.radius : 4.0 * (1.0 + norm(s.core().center)) / c.beta;
  const HausdorffReport rep = hausdorff_report(s, radius, n, seed);
  if (c.format == Format::Csv) {
    std::ostringstream os;
    CsvWriter w(os);
    const std::size_t dim = s.cone().ambient_dim();
    std::vector<std::string> head;
    for (const char* part : {"u", "a", "b"})
      for (std::size_t i = 0; i < dim; ++i) head.push_back(std::string(part) + std::to_string(i));
    head.push_back("gap");
    w.header(head);
    for (const HausdorffRow& r : rep.rows) {
      for (const Vec* v : {&r.direction, &r.boundary_a, &r.boundary_b})
        for (std::size_t i = 0; i < dim; ++i) {
          if (v->empty()) w.cell(std::string());
          else w.cell((*v)[i]);
        }
      w.cell(r.gap);
      w.end_row();
    }
    emit(c, os.str(), out);
    return 0;
  }
  json doc = cone_descriptor(c);
  doc["variant"] = c.variant;
  doc["beta"] = c.beta;
  doc["samples"] = n;
  doc["seed"] = seed;
  doc["radius"] = radius;
  doc["hausdorff"] = rep.value;
  doc["bound"] = s.distance_bound();
  emit(c, render(doc, c.format), out);
  return 0;
}

int cmd_verify(const RunConfig& c, std::ostream& out, std::ostream& err) {
  const std::uint64_t seed = effective_seed(c);
  const std::vector<CheckReport> reports = run_suite(c.suite, seed);
  json arr = json::array();
  std::size_t failed = 0;
  for (const CheckReport& r : reports) {
    arr.push_back(report_json(r));
    if (!r.pass) {
      ++failed;
      err << "FAIL " << r.name << " worst " << format_number(r.worst_violation) << " tolerance "
          << format_number(r.tolerance) << "\n";
    }
  }
  json doc = {{"suite", c.suite}, {"seed", seed}, {"checks", reports.size()}, {"failed", failed}, {"reports", arr}};
  if (!c.json.empty()) {
    std::ofstream f(c.json, std::ios::binary);
    if (!f) throw InvalidArgument("cannot open report file '" + c.json + "'");
    f << doc.dump(2) << "\n";
  }
  if (c.format == Format::Csv) {
    std::ostringstream os;
    CsvWriter w(os);
    w.header({"name", "n_samples", "worst_violation", "tolerance", "pass", "seed"});
    for (const CheckReport& r : reports) {
      w.cell(r.name).cell(static_cast<long long>(r.n_samples)).cell(r.worst_violation).cell(r.tolerance);
      w.cell(std::string(r.pass ? "true" : "false")).cell(static_cast<long long>(r.seed));
      w.end_row();
    }
    emit(c, os.str(), out);
  } else if (!c.out.empty()) {
    emit(c, doc.dump(2) + "\n", out);
  } else {
    out << reports.size() << " checks, " << failed << " failed (suite " << c.suite << ", seed " << seed << ")\n";
  }
  return failed == 0 ? 0 : 3;
}

int cmd_bench(const RunConfig& c, std::ostream& out) {
  if (c.bench != "minimax") throw InvalidArgument("unknown benchmark '" + c.bench + "' (expected minimax)");
  const std::size_t n = c.n == 0 ? 64 : c.n;
  const std::size_t d = c.d == 0 ? 10 : c.d;
  const MinimaxInstance inst = planted_minimax(n, d, effective_seed(c));
  std::vector<Surrogate> surrogates;
  if (c.surrogate == "both") surrogates = {Surrogate::OptimalInner, Surrogate::LogSumExp};
  else surrogates = {surrogate_from_string(c.surrogate)};
  std::vector<BenchRecord> rows;
  for (Surrogate s : surrogates) rows.push_back(bench_minimax(inst, c.eps, s, c.max_iter));
  if (c.format == Format::Csv) {
    std::ostringstream os;
    CsvWriter w(os);
    w.header({"surrogate", "n", "d", "eps", "eta", "iterations", "final_gap", "time_ms"});
    for (const BenchRecord& r : rows) {
      w.cell(to_string(r.surrogate)).cell(static_cast<long long>(r.n)).cell(static_cast<long long>(r.d));
      w.cell(r.epsilon).cell(r.eta).cell(static_cast<long long>(r.iterations)).cell(r.final_gap).cell(r.wall_time_ms);
      w.end_row();
    }
    emit(c, os.str(), out);
    return 0;
  }
  json arr = json::array();
  for (const BenchRecord& r : rows) {
    arr.push_back({{"instance", r.instance},
                   {"surrogate", to_string(r.surrogate)},
                   {"n", r.n},
                   {"d", r.d},
                   {"eps", r.epsilon},
                   {"eta", r.eta},
                   {"beta", r.beta},
                   {"iterations", r.iterations},
                   {"final_gap", r.final_gap},
                   {"time_ms", r.wall_time_ms}});
  }
  emit(c, render(arr, Format::Json), out);
  return 0;
}

double huber(double r) { return r <= 1.0 ? 0.5 * r * r : r - 0.5; }

double ball_lift(double r) {
  return r <= 2.0 ? 2.0 * std::sqrt(2.0) - std::sqrt(8.0 - r * r) : r - 2.0 * (2.0 - std::sqrt(2.0));
}

std::string figure_two_norm(const RunConfig& c) {
  const std::size_t n = c.n == 0 ? 601 : c.n;
  const double half = c.radius > 0.0 ? c.radius : 3.0;
  std::ostringstream os;
  CsvWriter w(os);
  w.header({"x", "sigma", "f1", "f2", "f3", "f4", "f5"});
  for (std::size_t i = 0; i < n; ++i) {
    const double x = n == 1 ? 0.0 : -half + 2.0 * half * static_cast<double>(i) / static_cast<double>(n - 1);
    const double r = std::abs(x);
    w.cell(x).cell(r).cell(huber(r)).cell(huber(r) + 0.25).cell(ball_lift(r));
    w.cell(ball_lift(r) + 6.0 * std::sqrt(2.0) - 8.0).cell(std::sqrt(1.0 + r * r) - 1.0);
    w.end_row();
  }
  return os.str();
}

// Last point of {origin + t u : t in [0, reach]} inside the set, if the ray leaves it.
std::optional<Vec> ray_exit(const std::function<bool(VecView)>& inside, const Vec& origin, const Vec& u, double reach) {
  auto at = [&](double t) {
    Vec p = origin;
    axpy(t, u, p);
    return p;
  };
  if (inside(at(reach))) return std::nullopt;
  double lo = 0.0, hi = reach;
  for (int i = 0; i < 60; ++i) {
    const double mid = 0.5 * (lo + hi);
    if (inside(at(mid))) lo = mid;
    else hi = mid;
  }
  return at(lo);
}

std::string figure_exp_cone(const RunConfig& c) {
  const std::size_t n = c.n == 0 ? 2000 : c.n;
  const double reach = c.radius > 0.0 ? c.radius : 6.0;
  const std::uint64_t seed = effective_seed(c);
  const ConeModel k = ConeModel::exponential();
  auto core = std::make_shared<const ConicCore>(cone_core(k));
  const Halfspaces h = core->estimate->halfspaces();
  const SmoothedSet s_in(core, Variant::MinInner, 1.0);
  const SmoothedSet big_in(core, Variant::MaxInner, 1.0);
  const Vec ki = k.interior_point();
  const Vec shifted = add(core->center, ki);

  struct Panel {
    const char* name;
    std::function<bool(VecView)> inside;
    Vec origin;
  };
  const std::vector<Panel> panels = {
      {"K", [&](VecView x) { return k.contains(x, 0.0); }, ki},
      {"xK+K", [&](VecView x) { return k.contains(sub(x, core->center), 0.0); }, shifted},
      {"C_K", [&](VecView x) { return h.max_violation(x) <= 0.0; }, shifted},
      {"s_in", [&](VecView x) { return s_in.contains(x); }, shifted},
      {"S_in", [&](VecView x) { return big_in.contains(x); }, shifted},
  };
  std::ostringstream os;
  CsvWriter w(os);
  w.header({"panel", "x", "y", "z"});
  const std::vector<Vec> dirs = sphere_points(3, n, seed);
  for (const Panel& p : panels) {
    for (const Vec& u : dirs) {
      const auto b = ray_exit(p.inside, p.origin, u, reach);
      if (!b) continue;
      w.cell(std::string(p.name)).cell((*b)[0]).cell((*b)[1]).cell((*b)[2]);
      w.end_row();
    }
  }
  return os.str();
}

int cmd_figure(const RunConfig& c, std::ostream& out) {
  if (c.figure == "two-norm") emit(c, figure_two_norm(c), out);
  else if (c.figure == "exp-cone") emit(c, figure_exp_cone(c), out);
  else throw InvalidArgument("unknown figure '" + c.figure + "' (expected two-norm or exp-cone)");
  return 0;
}

}  // namespace

std::string to_string(Command c) {
  for (const auto& [k, n] : command_names())
    if (k == c) return n;
  return "unknown";
}

Command command_from_string(const std::string& name) {
  for (const auto& [k, n] : command_names())
    if (n == name) return k;
  throw InvalidArgument("unknown command '" + name + "'");
}

std::string to_string(Format f) { return f == Format::Json ? "json" : "csv"; }

Format format_from_string(const std::string& name) {
  if (name == "json") return Format::Json;
  if (name == "csv") return Format::Csv;
  throw InvalidArgument("unknown format '" + name + "' (expected json or csv)");
}

json to_json(const RunConfig& c) {
  json j = {{"command", to_string(c.command)},
            {"family", c.family},
            {"cone", c.cone},
            {"d", c.d},
            {"weights", c.weights},
            {"vertices", c.vertices},
            {"beta", c.beta},
            {"variant", c.variant},
            {"x", c.x},
            {"n", c.n},
            {"eps", c.eps},
            {"surrogate", c.surrogate},
            {"suite", c.suite},
            {"figure", c.figure},
            {"bench", c.bench},
            {"max_iter", c.max_iter},
            {"radius", c.radius},
            {"format", to_string(c.format)},
            {"out", c.out},
            {"json", c.json}};
  j["seed"] = c.seed ? json(*c.seed) : json(nullptr);
  return j;
}

RunConfig config_from_json(const json& j) {
  if (!j.is_object()) throw InvalidArgument("config: expected a JSON object");
  static const std::vector<std::string> known = {"command", "family", "cone",  "d",      "weights", "vertices", "beta",
                                                 "variant", "x",      "n",     "eps",    "surrogate", "suite",  "figure",
                                                 "bench",   "max_iter", "radius", "format", "out",    "json",     "seed"};
  for (const auto& [k, v] : j.items()) {
    if (std::find(known.begin(), known.end(), k) == known.end()) throw InvalidArgument("config: unknown key '" + k + "'");
  }
  RunConfig c;
  try {
    if (j.contains("command")) c.command = command_from_string(j.at("command").get<std::string>());
    c.family = j.value("family", c.family);
    c.cone = j.value("cone", c.cone);
    c.d = j.value("d", c.d);
    c.weights = j.value("weights", c.weights);
    c.vertices = j.value("vertices", c.vertices);
    c.beta = j.value("beta", c.beta);
    c.variant = j.value("variant", c.variant);
    c.x = j.value("x", c.x);
    c.n = j.value("n", c.n);
    c.eps = j.value("eps", c.eps);
    c.surrogate = j.value("surrogate", c.surrogate);
    c.suite = j.value("suite", c.suite);
    c.figure = j.value("figure", c.figure);
    c.bench = j.value("bench", c.bench);
    c.max_iter = j.value("max_iter", c.max_iter);
    c.radius = j.value("radius", c.radius);
    if (j.contains("format")) c.format = format_from_string(j.at("format").get<std::string>());
    c.out = j.value("out", c.out);
    c.json = j.value("json", c.json);
    if (j.contains("seed") && !j.at("seed").is_null()) c.seed = j.at("seed").get<std::uint64_t>();
  } catch (const json::exception& e) {
    throw InvalidArgument(std::string("config: ") + e.what());
  }
  return c;
}

void validate(const RunConfig& c) {
  if (!(c.beta > 0.0) || !std::isfinite(c.beta)) throw InvalidArgument("--beta must be positive and finite");
  if (!(c.eps > 0.0) || !std::isfinite(c.eps)) throw InvalidArgument("--eps must be positive and finite");
  if (c.radius < 0.0 || !std::isfinite(c.radius)) throw InvalidArgument("--radius must be non-negative");
  if (c.max_iter < 0) throw InvalidArgument("--max-iter must be non-negative");
  if (!c.family.empty() && !c.cone.empty()) throw InvalidArgument("give either --family or --cone, not both");
  if (!c.family.empty()) family_from_string(c.family);
  if (!c.cone.empty()) cone_kind_from_string(c.cone);
  switch (c.command) {
    case Command::SmoothEval:
      if (c.family.empty()) throw InvalidArgument("smooth-eval requires --family");
      if (c.variant.empty()) throw InvalidArgument("smooth-eval requires --variant");
      if (c.x.empty()) throw InvalidArgument("smooth-eval requires --x");
      break;
    case Command::Core:
      if (c.family.empty() && c.cone.empty()) throw InvalidArgument("core requires --family or --cone");
      break;
    case Command::CoreEstimate:
      if (c.cone.empty()) throw InvalidArgument("core-estimate requires --cone");
      break;
    case Command::Hausdorff:
      if (c.family.empty() && c.cone.empty()) throw InvalidArgument("hausdorff requires --family or --cone");
      if (c.variant.empty()) throw InvalidArgument("hausdorff requires --variant");
      break;
    case Command::Verify:
      if (c.suite != "functions" && c.suite != "cones" && c.suite != "composite" && c.suite != "all")
        throw InvalidArgument("--suite must be functions, cones, composite or all");
      break;
    case Command::Bench:
      if (c.surrogate != "both") surrogate_from_string(c.surrogate);
      break;
    case Command::Figure:
      if (c.figure != "two-norm" && c.figure != "exp-cone") throw InvalidArgument("figure must be two-norm or exp-cone");
      break;
  }
  if (!c.variant.empty()) {
    if (c.family.empty() && c.cone.empty()) throw InvalidArgument("--variant requires --family or --cone");
    variant_from_string(c.variant);
  }
}

std::uint64_t effective_seed(const RunConfig& c) {
  if (c.seed) return *c.seed;
  if (const char* env = std::getenv("CONESMOOTH_SEED"); env && *env) return parse_seed(env, "CONESMOOTH_SEED");
  return 7;
}

int run(const RunConfig& c, std::ostream& out, std::ostream& err) {
  try {
    validate(c);
    switch (c.command) {
      case Command::SmoothEval: return cmd_smooth_eval(c, out);
      case Command::Core: return cmd_core(c, out);
      case Command::CoreEstimate: return cmd_core_estimate(c, out);
      case Command::Hausdorff: return cmd_hausdorff(c, out);
      case Command::Verify: return cmd_verify(c, out, err);
      case Command::Bench: return cmd_bench(c, out);
      case Command::Figure: return cmd_figure(c, out);
    }
  } catch (const InvalidArgument& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  } catch (const UnsupportedError& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  } catch (const NumericalError& e) {
    err << "numerical failure: " << e.what() << "\n";
    return 3;
  } catch (const std::exception& e) {
    err << "numerical failure: " << e.what() << "\n";
    return 3;
  }
  return 2;
}

int main_entry(int argc, char** argv) {
  CLI::App app{"Optimal smoothings of sublinear functions and convex cones"};
  app.fallthrough();
  app.require_subcommand(1);

  std::string config_path, family, cone, variant, surrogate, suite, format, out, json_path, seed, vertices;
  std::size_t d = 0, n = 0;
  double beta = 1.0, eps = 1e-2, radius = 0.0;
  int max_iter = 0;
  Vec x, weights;

  app.add_option("--config", config_path, "JSON run configuration; flags override it");
  app.add_option("--family", family, "relu, euclidean-norm, one-norm, weighted-inf-norm, max, max-eigen, polytope");
  app.add_option("--cone", cone, "orthant, soc, psd, exp");
  app.add_option("--d", d, "dimension (matrix order for max-eigen and psd)");
  app.add_option("--weights", weights, "weights of weighted-inf-norm")->delimiter(',');
  app.add_option("--vertices", vertices, "polytope vertices as 'x1,y1;x2,y2;...'");
  app.add_option("--beta", beta, "smoothness level");
  app.add_option("--variant", variant, "min-inner, max-inner, min-general, max-general, min-outer, max-outer");
  app.add_option("--x", x, "evaluation point, comma separated")->delimiter(',')->allow_extra_args(false);
  app.add_option("--n", n, "samples, rows or points");
  app.add_option("--seed", seed, "random seed (fallback: CONESMOOTH_SEED)");
  app.add_option("--eps", eps, "target accuracy");
  app.add_option("--surrogate", surrogate, "optimal, logsumexp or both");
  app.add_option("--suite", suite, "functions, cones, composite or all");
  app.add_option("--max-iter", max_iter, "iteration limit");
  app.add_option("--radius", radius, "sampling radius or plot half-width");
  app.add_option("--format", format, "json or csv");
  app.add_option("--out", out, "artifact path");
  app.add_option("--json", json_path, "verification report path");

  auto* smooth = app.add_subcommand("smooth-eval", "evaluate a smoothing and its gradient");
  auto* core = app.add_subcommand("core", "functional or conic core");
  auto* core_est = core->add_subcommand("estimate", "sampled conic core");
  auto* core_estimate = app.add_subcommand("core-estimate", "sampled conic core");
  auto* hausdorff = app.add_subcommand("hausdorff", "distance between a smoothing and its original");
  auto* verify = app.add_subcommand("verify", "run property suites");
  auto* bench = app.add_subcommand("bench", "benchmarks");
  auto* bench_minimax = bench->add_subcommand("minimax", "planted minimax instance");
  bench->require_subcommand(1);
  auto* figure = app.add_subcommand("figure", "figure data");
  auto* fig_two = figure->add_subcommand("two-norm", "candidate smoothings of the two-norm");
  auto* fig_exp = figure->add_subcommand("exp-cone", "exponential cone point clouds");
  figure->require_subcommand(1);
  for (CLI::App* sub : {smooth, core, core_est, core_estimate, hausdorff, verify, bench, bench_minimax, figure, fig_two, fig_exp})
    sub->fallthrough();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e) == 0 ? 0 : 2;
  }

  try {
    RunConfig c;
    if (!config_path.empty()) {
      std::ifstream f(config_path);
      if (!f) throw InvalidArgument("cannot open config '" + config_path + "'");
      json j;
      try {
        j = json::parse(f);
      } catch (const json::exception& e) {
        throw InvalidArgument("config '" + config_path + "': " + e.what());
      }
      c = config_from_json(j);
    }
    if (smooth->parsed()) c.command = Command::SmoothEval;
    else if (core_est->parsed() || core_estimate->parsed()) c.command = Command::CoreEstimate;
    else if (core->parsed()) c.command = Command::Core;
    else if (hausdorff->parsed()) c.command = Command::Hausdorff;
    else if (verify->parsed()) c.command = Command::Verify;
    else if (bench->parsed()) {
      c.command = Command::Bench;
      c.bench = "minimax";
    } else if (figure->parsed()) {
      c.command = Command::Figure;
      c.figure = fig_two->parsed() ? "two-norm" : "exp-cone";
    }

    auto given = [&](const char* name) { return app.count(name) > 0; };
    if (given("--family")) c.family = family;
    if (given("--cone")) c.cone = cone;
    if (given("--d")) c.d = d;
    if (given("--weights")) c.weights = weights;
    if (given("--vertices")) c.vertices = parse_vertices(vertices);
    if (given("--beta")) c.beta = beta;
    if (given("--variant")) c.variant = variant;
    if (given("--x")) c.x = x;
    if (given("--n")) c.n = n;
    if (given("--seed")) c.seed = parse_seed(seed, "--seed");
    if (given("--eps")) c.eps = eps;
    if (given("--surrogate")) c.surrogate = surrogate;
    if (given("--suite")) c.suite = suite;
    if (given("--max-iter")) c.max_iter = max_iter;
    if (given("--radius")) c.radius = radius;
    if (given("--out")) c.out = out;
    if (given("--json")) c.json = json_path;
    if (given("--format")) c.format = format_from_string(format);
    else if (config_path.empty() &&
             (c.command == Command::Bench || c.command == Command::Figure ||
              (c.out.size() > 4 && c.out.substr(c.out.size() - 4) == ".csv")))
      c.format = Format::Csv;
    return run(c, std::cout, std::cerr);
  } catch (const InvalidArgument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
}

}  // namespace conesmooth::cli
