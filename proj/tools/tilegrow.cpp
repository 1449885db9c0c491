#include <CLI11.hpp>

#include <cstdlib>
#include <iostream>
#include <random>

#include "tilegrow/analysis.hpp"
#include "tilegrow/gridform.hpp"
#include "tilegrow/io.hpp"
#include "tilegrow/parallel.hpp"
#include "tilegrow/periodic.hpp"

using namespace tilegrow;

namespace {

// Half the strips oscillation seen by the cell oracle over n = 16..256 step 16.
constexpr double kStripsGap = 0.1321022727272727;

struct Config {
  std::string preset, spec, rule = "edge", out, svg, off, csv, method = "all", shells = "8,16,24";
  double radius = 0.0;
  int random_grid = 0, dim = 2, threads = -1, z = 0;
  std::uint64_t seed = 1;
  double gap = kStripsGap;
};

int exit_code(const Error& e) {
  switch (e.kind()) {
    case ErrorKind::MethodMismatch: return 3;
    case ErrorKind::GuardBandExceeded: return 4;
    default: return 2;
  }
}

NeighborRule rule_of(const Config& c) {
  if (c.rule == "edge") return NeighborRule::edge_share();
  if (c.rule == "heesch") return NeighborRule::heesch();
  throw Error(ErrorKind::InvalidSpec, "rule must be 'edge' or 'heesch'");
}

Source source_of(const Config& c) {
  const int given = !c.preset.empty() + !c.spec.empty() + (c.random_grid > 0);
  if (given != 1) throw Error(ErrorKind::InvalidSpec, "give exactly one of --preset, --spec, --random-grid");
  if (!c.preset.empty()) return source_preset(c.preset);
  if (!c.spec.empty()) return load_source(c.spec);
  std::mt19937_64 rng(c.seed);
  Source s;
  s.kind = SourceKind::Grid;
  s.grid = random_regular_grid(c.dim, c.random_grid, rng);
  s.name = s.grid.name = "random" + std::to_string(c.dim) + "d" + std::to_string(c.random_grid) + "s" + std::to_string(c.seed);
  return s;
}

void emit(const Config& c, const json& j) {
  if (c.out.empty() || c.out == "-")
    std::cout << j.dump(2) << '\n';
  else
    write_json(c.out, j);
}

int cmd_generate(const Config& c) {
  const Source src = source_of(c);
  const NeighborRule rule = rule_of(c);
  const Generated g = generate(src, c.radius > 0 ? c.radius : 10.0, rule);
  emit(c, patch_json(g, src.name, rule));
  if (!c.svg.empty()) {
    if (g.dim != 2) throw Error(ErrorKind::MethodMismatch, "SVG output needs a planar patch; use --off");
    write_svg_patch(c.svg, g.p2);
  }
  if (!c.off.empty()) {
    if (g.dim != 3) throw Error(ErrorKind::MethodMismatch, "OFF patch output needs a spatial patch; use --svg");
    write_off_patch(c.off, g.p3);
  }
  std::cerr << src.name << ": " << g.size() << " tiles\n";
  return 0;
}

std::vector<std::string> applicable(const Source& s) {
  if (s.kind == SourceKind::Periodic) return {"algorithm1", "heesch"};
  if (s.kind == SourceKind::Grid) return {s.grid.d == 2 ? "formula2d" : "formula3d", "orthoplex"};
  return {};
}

GrowthForm compute_form(const Source& s, const std::string& m, const Config& c) {
  auto need = [&](SourceKind k, int d) {
    if (s.kind != k || s.dim() != d)
      throw Error(ErrorKind::MethodMismatch, "method '" + m + "' does not apply to a " + std::string(to_string(s.kind)) +
                                                 " source of dimension " + std::to_string(s.dim()));
  };
  if (m == "algorithm1") {
    need(SourceKind::Periodic, 2);
    return algorithm1(s.periodic, rule_of(c), c.z).form;
  }
  if (m == "heesch") {
    need(SourceKind::Periodic, 2);
    return growth_form_heesch(s.periodic, c.z);
  }
  if (m == "formula2d") {
    need(SourceKind::Grid, 2);
    return growth_form_formula_2d(s.grid);
  }
  if (m == "formula3d") {
    need(SourceKind::Grid, 3);
    return growth_form_formula_3d(s.grid);
  }
  if (m == "orthoplex") {
    if (s.kind != SourceKind::Grid) need(SourceKind::Grid, s.dim());
    return growth_form_orthoplex(s.grid);
  }
  if (m == "empirical") {
    if (s.dim() != 2) throw Error(ErrorKind::MethodMismatch, "empirical estimates are planar only");
    const auto ns = parse_shell_list(c.shells);
    const int n = *std::max_element(ns.begin(), ns.end());
    const Generated g = generate_for_shells(s, n, rule_of(c));
    return estimate_growth_form(g.p2, g.seeds, {n}).form;
  }
  throw Error(ErrorKind::InvalidSpec, "unknown method '" + m + "'");
}

int cmd_growthform(const Config& c) {
  const Source src = source_of(c);
  if (c.method != "all") {
    const GrowthForm f = compute_form(src, c.method, c);
    emit(c, form_json(f, src.name));
    if (!c.svg.empty()) write_svg_forms(c.svg, {f});
    if (!c.off.empty()) write_off(c.off, f);
    return 0;
  }
  const auto methods = applicable(src);
  if (methods.empty())
    throw Error(ErrorKind::MethodMismatch, "no exact method applies to " + std::string(to_string(src.kind)) +
                                               " sources; use --method empirical");
  std::vector<GrowthForm> forms;
  json j = {{"schema", kSchema}, {"kind", "forms"}, {"source", src.name}, {"forms", json::array()},
            {"hausdorff", json::array()}};
  for (const auto& m : methods) {
    forms.push_back(compute_form(src, m, c));
    json f = form_json(forms.back(), src.name);
    f["method"] = m;
    j["forms"].push_back(f);
  }
  for (std::size_t a = 0; a < forms.size(); ++a)
    for (std::size_t b = a + 1; b < forms.size(); ++b)
      j["hausdorff"].push_back({{"a", methods[a]}, {"b", methods[b]}, {"distance", form_hausdorff(forms[a], forms[b])}});
  emit(c, j);
  if (!c.svg.empty()) write_svg_forms(c.svg, forms);
  if (!c.off.empty()) write_off(c.off, forms.front());
  return 0;
}

int cmd_analyze(const Config& c) {
  const Source src = source_of(c);
  if (src.dim() != 2) throw Error(ErrorKind::MethodMismatch, "analysis is planar only");
  const NeighborRule rule = rule_of(c);
  const auto ns = parse_shell_list(c.shells);
  const int nmax = *std::max_element(ns.begin(), ns.end());
  const Generated g = c.radius > 0 ? generate(src, c.radius, rule) : generate_for_shells(src, nmax, rule);

  json j = {{"schema", kSchema}, {"kind", "report"}, {"source", src.name}, {"tiles", g.size()}, {"seeds", g.seeds}};
  const auto sd = shells<2>(g.p2, g.seeds, nmax);
  std::vector<long> counts;
  for (int k = 1; k <= nmax; ++k) counts.push_back(static_cast<long>(sd.shells[k].size()));
  if (!c.csv.empty()) write_csv_counts(c.csv, counts);

  std::optional<GrowthForm> candidate;
  if (src.kind == SourceKind::Periodic) candidate = algorithm1(src.periodic, rule).form;
  if (src.kind == SourceKind::Grid && rule.kind == NeighborKind::EdgeShare) candidate = growth_form_formula_2d(src.grid);
  if (candidate) j["candidate"] = form_json(*candidate, src.name);

  const auto est = estimate_growth_form(g.p2, g.seeds, ns, candidate ? &*candidate : nullptr);
  j["convergence"] = report_json(est.report);
  j["form"] = form_json(est.form, src.name);

  if (src.kind == SourceKind::Strips && ns.size() >= 2)
    j["no_growth_form"] = no_growth_json(detect_no_growth_form(g.p2, g.seeds, ns, c.gap));
  if (src.name == "chair") {
    const auto sq = algorithm1(periodic_preset("square44"), NeighborRule::edge_share()).form;
    const auto fit = fit_square(est.hulls.back(), sq.polygon, 2.0 / nmax);
    j["square_fit"] = {{"vertices", fit.simplified.size()}, {"edge_spread", fit.edge_spread},
                       {"scale", fit.scale},                {"hausdorff", fit.hausdorff},
                       {"is_square", fit.simplified.size() == 4 && fit.edge_spread < 0.05}};
  }
  if (src.name == "ltetromino") j["nonconvexity"] = nonconvexity_measure(est.scaled_shells.back());
  emit(c, j);

  if (!c.svg.empty()) {
    write_svg_shells(c.svg + "_shells.svg", est.scaled_shells, est.report.n);
    Patch<2> reached;
    std::vector<int> index;
    for (std::size_t i = 0; i < g.p2.size(); ++i)
      if (sd.index[i] >= 0) {
        reached.tiles.push_back(g.p2.tiles[i]);
        index.push_back(sd.index[i]);
      }
    write_svg_patch(c.svg + "_patch.svg", reached, &index);
  }
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Growth forms of tilings"};
  app.require_subcommand(1);
  Config c;
  app.add_option("--threads", c.threads, "Worker threads (0 = all cores); default from TILEGROW_THREADS");

  auto source_opts = [&c](CLI::App* s) {
    s->add_option("--preset", c.preset, "Built-in tiling")->check(CLI::IsMember(source_preset_names()));
    s->add_option("--spec", c.spec, "JSON spec file");
    s->add_option("--rule", c.rule, "Neighbour rule: edge or heesch");
    s->add_option("-o,--out", c.out, "Output JSON (default stdout)");
    s->add_option("--svg", c.svg, "SVG output");
  };

  auto* gen = app.add_subcommand("generate", "Write a patch");
  source_opts(gen);
  gen->add_option("--radius", c.radius, "Patch radius");
  gen->add_option("--off", c.off, "OFF output for spatial patches");
  gen->add_option("--random-grid", c.random_grid, "Random regular grid with this many vectors");
  gen->add_option("--dim", c.dim, "Dimension of the random grid");
  gen->add_option("--seed", c.seed, "Random seed");

  auto* gf = app.add_subcommand("growthform", "Compute a growth form");
  source_opts(gf);
  gf->add_option("--method", c.method, "algorithm1, heesch, formula2d, formula3d, orthoplex, empirical or all");
  gf->add_option("--off", c.off, "OFF output");
  gf->add_option("--z", c.z, "Shell count for Algorithm 1 (default: number of fundamental tiles)");
  gf->add_option("--shells", c.shells, "Shells for the empirical method");
  gf->add_option("--random-grid", c.random_grid, "Random regular grid with this many vectors");
  gf->add_option("--dim", c.dim, "Dimension of the random grid");
  gf->add_option("--seed", c.seed, "Random seed");

  auto* an = app.add_subcommand("analyze", "Convergence report for scaled shells");
  source_opts(an);
  an->add_option("--shells", c.shells, "e.g. 8,16,24 or 16..256 or 16..256:8");
  an->add_option("--radius", c.radius, "Fixed patch radius (default: sized from the shells)");
  an->add_option("--csv", c.csv, "Coordination sequence CSV");
  an->add_option("--gap", c.gap, "Non-convergence gap for the strips detector");

  auto* sp = app.add_subcommand("spec", "Print the JSON spec of a preset");
  sp->add_option("--preset", c.preset, "Built-in tiling")->required()->check(CLI::IsMember(source_preset_names()));
  sp->add_option("-o,--out", c.out, "Output JSON (default stdout)");

  CLI11_PARSE(app, argc, argv);

  if (c.threads < 0)
    if (const char* env = std::getenv("TILEGROW_THREADS")) c.threads = std::atoi(env);
  if (c.threads >= 0) set_thread_count(c.threads);

  try {
    if (gen->parsed()) return cmd_generate(c);
    if (gf->parsed()) return cmd_growthform(c);
    if (sp->parsed()) {
      emit(c, to_json(source_preset(c.preset)));
      return 0;
    }
    return cmd_analyze(c);
  } catch (const GuardBandExceeded& e) {
    std::cerr << e.what() << "\nmaximum safe shell: " << e.max_safe_shell() << '\n';
    return 4;
  } catch (const Error& e) {
    std::cerr << e.what() << '\n';
    return exit_code(e);
  }
}
