#pragma once

#include <cmath>
#include <future>
#include <ostream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "vrhom/io.hpp"
#include "vrhom/suites.hpp"

namespace vrhom {

namespace cli {

enum Exit : int { ok = 0, verification_failed = 1, input_error = 2 };

struct Input {
  std::string dist, edges, json;

  void add_to(CLI::App& app) {
    auto* d = app.add_option("--dist", dist, "CSV distance matrix");
    auto* e = app.add_option("--edges", edges, "edge list");
    auto* j = app.add_option("--json", json, "JSON space document");
    d->excludes(e)->excludes(j);
    e->excludes(j);
  }

  std::string path() const { return !dist.empty() ? dist : !edges.empty() ? edges : json; }

  std::string format() const { return !dist.empty() ? "csv-dist" : !edges.empty() ? "edge-list" : "json"; }

  SpaceDocument load() const {
    if (!dist.empty()) return parse_space_file(dist, SpaceFormat::csv_dist);
    if (!edges.empty()) return parse_space_file(edges, SpaceFormat::edge_list);
    if (!json.empty()) return parse_space_file(json, SpaceFormat::json);
    throw Error(ErrorKind::invalid_argument, "one of --dist, --edges or --json is required");
  }

  Json echo() const { return Json{{"input", path()}, {"format", format()}}; }
};

inline double parse_scale(const std::string& text, const std::string& what) {
  try {
    const double v = detail::parse_decimal({text, 1}, 1);
    require_non_negative(v, what.c_str());
    return v;
  } catch (const ParseError&) {
    throw Error(ErrorKind::invalid_argument, what + " '" + text + "' is not a decimal number");
  }
}

inline ScaleMode parse_mode(const std::string& s) { return s == "strict" ? ScaleMode::strict : ScaleMode::closed; }

struct ScaleStep {
  std::string text;
  double value;
};

/// LO:HI:STEP expanded in exact decimal steps; each scale is printed with the
/// largest number of decimals among the three fields and parsed back.
inline std::vector<ScaleStep> expand_scales(const std::string& text) {
  std::vector<std::string> parts;
  std::size_t start = 0;
  while (true) {
    const auto colon = text.find(':', start);
    parts.push_back(text.substr(start, colon == std::string::npos ? std::string::npos : colon - start));
    if (colon == std::string::npos) break;
    start = colon + 1;
  }
  if (parts.size() != 3) throw Error(ErrorKind::invalid_argument, "--scales expects LO:HI:STEP");
  std::size_t places = 0;
  for (const auto& p : parts) {
    parse_scale(p, "scale bound");
    const auto dot = p.find('.');
    if (dot != std::string::npos) places = std::max(places, p.size() - dot - 1);
    if (p.find_first_of("eE") != std::string::npos) throw Error(ErrorKind::invalid_argument, "--scales takes plain decimals");
  }
  if (places > 9) throw Error(ErrorKind::invalid_argument, "--scales supports at most 9 decimal places");
  auto fixed = [&](const std::string& p) {
    const auto dot = p.find('.');
    std::string digits = dot == std::string::npos ? p : p.substr(0, dot) + p.substr(dot + 1);
    std::size_t have = dot == std::string::npos ? 0 : p.size() - dot - 1;
    digits.append(places - have, '0');
    return std::stoll(digits);
  };
  const long long lo = fixed(parts[0]), hi = fixed(parts[1]), step = fixed(parts[2]);
  if (step <= 0) throw Error(ErrorKind::invalid_argument, "--scales step must be positive");
  if (hi < lo) throw Error(ErrorKind::invalid_argument, "--scales upper bound is below the lower bound");
  if ((hi - lo) / step >= 100000) throw Error(ErrorKind::invalid_argument, "--scales yields too many rows");
  std::vector<ScaleStep> out;
  for (long long v = lo; v <= hi; v += step) {
    std::string s = std::to_string(v);
    if (places > 0) {
      if (s.size() <= places) s.insert(0, places + 1 - s.size(), '0');
      s.insert(s.size() - places, ".");
    }
    out.push_back({s, parse_scale(s, "scale")});
  }
  return out;
}

inline Json complex_json(const SimplicialComplex& k) {
  Json counts = Json::array();
  for (std::size_t d = 0; d <= k.max_dim(); ++d) counts.push_back(k.count(d));
  return Json{{"simplex_counts", std::move(counts)}, {"exhausted", k.exhausted()}};
}

inline void emit(std::ostream& out, const Json& j) { out << j.dump(2) << "\n"; }

inline std::string verdict_line(const AxiomVerdict& v) {
  return std::string(v.pass ? "PASS" : "FAIL") + "  " + v.axiom + "  " + v.instance;
}

}  // namespace cli

/// Entry point of the command-line tool. Writes the result document (JSON, or
/// TSV for sweeps) to `out` and diagnostics to `err`; returns 0 on success, 1
/// on a failed verification and 2 on an input error.
inline int run_command(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  using namespace cli;
  CLI::App app{"Vietoris-Rips homology of finite semi-uniform spaces"};
  app.set_version_flag("--version", std::string(kToolVersion));
  app.require_subcommand(1);

  std::string coeff = "z", mode = "closed", scale, scales, relation = "vietoris", suite = "all", cover_path, radius;
  std::size_t max_dim = 2, cover_index = 0, trials = 50;
  std::uint64_t seed = 1;
  bool reduced = false, generators = false, with_cohomology = false;

  auto add_algebra = [&](CLI::App* c) {
    c->add_option("--coeff", coeff, "coefficients: z, q or zp:P")->capture_default_str();
    c->add_option("--max-dim", max_dim, "complexes are built to this dimension; groups below it are reported")
        ->check(CLI::Range(std::size_t{1}, std::size_t{12}));
  };

  Input homology_in, graph_in, closure_in, sweep_in;

  auto* homology_cmd = app.add_subcommand("homology", "homology of a space at one scale");
  homology_in.add_to(*homology_cmd);
  homology_cmd->add_option("--scale", scale, "scale q (distance input)");
  homology_cmd->add_option("--mode", mode, "closed (d <= q) or strict (d < q)")->check(CLI::IsMember({"closed", "strict"}));
  homology_cmd->add_flag("--reduced", reduced, "reduced homology");
  homology_cmd->add_flag("--generators", generators, "include cycle representatives");
  homology_cmd->add_flag("--cohomology", with_cohomology, "also report cohomology (field coefficients)");
  add_algebra(homology_cmd);

  auto* graph_cmd = app.add_subcommand("graph", "clique-complex homology of an undirected graph");
  graph_in.add_to(*graph_cmd);
  graph_cmd->add_flag("--generators", generators, "include cycle representatives");
  add_algebra(graph_cmd);

  auto* closure_cmd = app.add_subcommand("closure", "homology of the relation a cover induces on a closure space");
  closure_in.add_to(*closure_cmd);
  closure_cmd->add_option("--radius", radius, "closure radius for distance input (N(x) = {y : d(x,y) <= r})");
  closure_cmd->add_option("--cover", cover_path, "JSON cover: an array of label arrays");
  closure_cmd->add_option("--cover-index", cover_index, "cover of a closure document to use");
  closure_cmd->add_option("--relation", relation, "vietoris or ii")->check(CLI::IsMember({"vietoris", "ii"}));
  add_algebra(closure_cmd);

  auto* sweep_cmd = app.add_subcommand("sweep", "betti table over a range of scales (TSV)");
  sweep_in.add_to(*sweep_cmd);
  sweep_cmd->add_option("--scales", scales, "LO:HI:STEP")->required();
  sweep_cmd->add_option("--mode", mode, "closed or strict")->check(CLI::IsMember({"closed", "strict"}));
  add_algebra(sweep_cmd);

  auto* verify_cmd = app.add_subcommand("verify", "mechanical checks of the homology axioms");
  verify_cmd->add_option("--suite", suite, "dimension, excision, homotopy, dowker, interval, functoriality or all")
      ->check(CLI::IsMember({"all", "dimension", "excision", "homotopy", "dowker", "interval", "functoriality"}));
  verify_cmd->add_option("--seed", seed, "seed for generated instances");
  verify_cmd->add_option("--trials", trials, "generated instances per fuzz check");
  verify_cmd->add_option("--coeff", coeff, "coefficients for the field-valued checks");
  verify_cmd->add_option("--max-dim", max_dim, "dimension cap")->check(CLI::Range(std::size_t{1}, std::size_t{6}));

  std::vector<const char*> argv{"vrhom"};
  for (const auto& a : args) argv.push_back(a.c_str());
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? ok : input_error;
  }
  CLI::App* chosen = app.get_subcommands().front();
  if (chosen == verify_cmd && chosen->count("--coeff") == 0) coeff = "q";
  if (chosen->count("--max-dim") == 0) max_dim = chosen == homology_cmd || chosen == sweep_cmd ? 2 : 3;
  const Input* input = chosen == homology_cmd ? &homology_in
                       : chosen == graph_cmd  ? &graph_in
                       : chosen == closure_cmd ? &closure_in
                       : chosen == sweep_cmd  ? &sweep_in
                                              : nullptr;

  try {
    const Coefficients coeffs = Coefficients::parse(coeff);

    if (homology_cmd->parsed()) {
      const auto doc = homology_in.load();
      Json request = homology_in.echo();
      std::optional<SimplicialComplex> k;
      if (const auto* d = std::get_if<DistanceDocument>(&doc)) {
        if (scale.empty()) throw Error(ErrorKind::invalid_argument, "--scale is required for distance input");
        const double q = parse_scale(scale, "scale");
        request["scale"] = scale;
        request["mode"] = mode;
        k = clique_complex(metric_relation(to_metric(*d), q, parse_mode(mode)), max_dim);
      } else if (const auto* g = std::get_if<GraphDocument>(&doc)) {
        const auto u = to_relation(*g);
        k = g->directed ? directed_clique_complex(u, max_dim) : clique_complex(u, max_dim);
        request["directed"] = g->directed;
      } else if (const auto* c = std::get_if<ComplexDocument>(&doc)) {
        k = to_complex(*c, max_dim);
      } else {
        throw Error(ErrorKind::invalid_argument, "closure documents are handled by the closure command");
      }
      request["coefficients"] = coeffs.to_string();
      request["max_dim"] = max_dim;
      request["reduced"] = reduced;
      Json result = result_document("homology", std::move(request));
      result["points"] = k->space()->size();
      result["complex"] = complex_json(*k);
      const auto h = homology(*k, coeffs, {.reduced = reduced, .generators = generators});
      result["homology"] = to_json(h, max_dim, k->space().get());
      if (with_cohomology) result["cohomology"] = to_json(cohomology(*k, coeffs, reduced), max_dim);
      emit(out, result);
      return ok;
    }

    if (graph_cmd->parsed()) {
      const auto doc = graph_in.load();
      const auto* g = std::get_if<GraphDocument>(&doc);
      if (!g) throw Error(ErrorKind::invalid_argument, "graph expects an edge list or a graph document");
      if (g->directed) {
        throw Error(ErrorKind::not_symmetric, "graph needs an undirected graph; use homology for directed flag complexes");
      }
      const auto u = to_relation(*g);
      const auto report = limit_homology(SemiUniformBase::single(u), std::nullopt, coeffs, max_dim);
      Json request = graph_in.echo();
      request["coefficients"] = coeffs.to_string();
      request["max_dim"] = max_dim;
      Json result = result_document("graph", std::move(request));
      result["points"] = u.size();
      result["edges"] = (u.pair_count() - u.size()) / 2;
      HomologyResult h = *report.homology;
      if (generators) h = homology(clique_complex(u, max_dim), coeffs, {.generators = true});
      result["homology"] = to_json(h, max_dim, u.space().get());
      if (report.cohomology) result["cohomology"] = to_json(*report.cohomology, max_dim);
      emit(out, result);
      return ok;
    }

    if (closure_cmd->parsed()) {
      const auto doc = closure_in.load();
      Json request = closure_in.echo();
      std::optional<AdditiveClosure> c;
      std::vector<std::vector<IndexSet>> covers;
      std::vector<std::string> labels;
      if (const auto* cd = std::get_if<ClosureDocument>(&doc)) {
        c = to_closure(*cd);
        covers = cd->covers;
        labels = cd->labels;
      } else if (const auto* d = std::get_if<DistanceDocument>(&doc)) {
        if (radius.empty()) throw Error(ErrorKind::invalid_argument, "--radius is required for distance input");
        c = metric_closure_space(to_metric(*d), parse_scale(radius, "radius"));
        request["radius"] = radius;
        labels = d->labels;
      } else if (const auto* g = std::get_if<GraphDocument>(&doc)) {
        c = graph_closure_space(g->edges, make_space(g->labels));
        labels = g->labels;
      } else {
        throw Error(ErrorKind::invalid_argument, "closure expects a closure, distance or graph document");
      }
      std::vector<IndexSet> sets;
      if (!cover_path.empty()) {
        const auto text = read_file(cover_path);
        Json j;
        try {
          j = Json::parse(text);
        } catch (const nlohmann::json::parse_error& e) {
          throw ParseError(ErrorKind::syntax, 0, 0, cover_path + ": " + e.what());
        }
        sets = parse_cover_json(j.is_object() && j.contains("cover") ? j["cover"] : j, labels, "/cover");
        request["cover"] = cover_path;
      } else {
        if (cover_index >= covers.size()) throw Error(ErrorKind::invalid_argument, "no cover given (use --cover)");
        sets = covers[cover_index];
        request["cover_index"] = cover_index;
      }
      const Cover cover(c->space(), sets);
      const auto interior = is_interior_cover(*c, cover);
      const Relation u = relation == "ii" ? ii_relation(*c, cover) : vietoris_relation(cover);
      request["relation"] = relation;
      request["coefficients"] = coeffs.to_string();
      request["max_dim"] = max_dim;
      Json result = result_document("closure", std::move(request));
      result["points"] = u.size();
      result["interior_cover"] = interior.interior_cover;
      Json pairs = Json::array();
      for (auto [x, y] : u.pairs())
        if (x < y) pairs.push_back(Json::array({labels[x], labels[y]}));
      result["related_pairs"] = std::move(pairs);
      const auto report = limit_homology(SemiUniformBase::single(u), std::nullopt, coeffs, max_dim);
      result["homology"] = to_json(*report.homology, max_dim);
      if (report.cohomology) result["cohomology"] = to_json(*report.cohomology, max_dim);
      emit(out, result);
      return ok;
    }

    if (sweep_cmd->parsed()) {
      const auto doc = sweep_in.load();
      const auto* dd = std::get_if<DistanceDocument>(&doc);
      if (!dd) throw Error(ErrorKind::invalid_argument, "sweep expects a distance matrix");
      const auto d = to_metric(*dd);
      const auto steps = expand_scales(scales);
      const ScaleMode m = parse_mode(mode);
      std::vector<std::future<HomologyResult>> rows;
      for (const auto& s : steps) {
        rows.push_back(std::async(std::launch::async, [&d, &coeffs, m, max_dim = max_dim, q = s.value] {
          return homology(clique_complex(metric_relation(d, q, m), max_dim), coeffs);
        }));
      }
      out << "scale";
      for (std::size_t k = 0; k < max_dim; ++k) out << "\tbeta_" << k;
      out << "\ttorsion\n";
      for (std::size_t i = 0; i < steps.size(); ++i) {
        const auto h = rows[i].get();
        out << steps[i].text;
        std::string torsion;
        for (std::size_t k = 0; k < max_dim; ++k) {
          out << "\t" << h.groups[k].betti;
          for (const auto& t : h.groups[k].torsion) torsion += (torsion.empty() ? "" : ",") + ("H" + std::to_string(k) + ":" + t.str());
        }
        out << "\t" << (torsion.empty() ? "-" : torsion) << "\n";
      }
      return ok;
    }

    if (verify_cmd->parsed()) {
      const SuiteOptions opt{seed, trials, max_dim, coeffs};
      const auto verdicts = run_suite(suite, opt);
      Json request{{"suite", suite}, {"seed", seed}, {"trials", trials}, {"coefficients", coeffs.to_string()}, {"max_dim", max_dim}};
      Json result = result_document("verify", std::move(request));
      bool all = true;
      Json list = Json::array();
      for (const auto& v : verdicts) {
        all = all && v.pass;
        list.push_back(to_json(v));
        if (!v.pass) err << verdict_line(v) << "\n";
      }
      result["pass"] = all;
      result["verdicts"] = std::move(list);
      emit(out, result);
      return all ? ok : verification_failed;
    }
  } catch (const ParseError& e) {
    err << "error: " << (input && e.line() > 0 ? input->path() + ": " : "") << e.what() << "\n";
    return input_error;
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    return input_error;
  }
  return input_error;
}

}  // namespace vrhom
