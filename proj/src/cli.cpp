#include "graphstat/cli.hpp"

#include <algorithm>
#include <chrono>
#include <cstdlib>
#include <fstream>
#include <optional>
#include <ostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <nlohmann/json.hpp>

#include "graphstat/complex.hpp"
#include "graphstat/connectivity.hpp"
#include "graphstat/gauge.hpp"
#include "graphstat/graph.hpp"
#include "graphstat/homology.hpp"
#include "graphstat/morse.hpp"
#include "graphstat/statistics.hpp"
#include "graphstat/util.hpp"

namespace graphstat::cli {
namespace {

using ojson = nlohmann::ordered_json;

std::string slurp(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  check_input(in.good(), "cannot read file: " + path);
  std::ostringstream os;
  os << in.rdbuf();
  check_input(!in.bad(), "cannot read file: " + path);
  return os.str();
}

ojson parse_json(const std::string& text, const std::string& what) {
  try {
    return ojson::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    throw InputError("malformed JSON in " + what + ": " + e.what());
  }
}

// Big integers that fit in 64 bits print as numbers, the rest as strings.
ojson int_json(const Int& v) {
  if (v >= Int(std::numeric_limits<long long>::min()) &&
      v <= Int(std::numeric_limits<long long>::max()))
    return static_cast<long long>(v);
  return v.str();
}

ojson group_json(const hom::FGAbelianGroup& g) {
  ojson torsion = ojson::array();
  for (const Int& t : g.torsion) torsion.push_back(int_json(t));
  return ojson{{"rank", g.rank}, {"torsion", torsion}};
}

ojson cell_json(const cfg::Cell& c) {
  ojson movers = ojson::array();
  for (const auto& [u, v] : c.movers) movers.push_back({u, v});
  return ojson::array({c.stationary, movers});
}

ojson cells_json(const std::vector<cfg::Cell>& cells) {
  ojson out = ojson::array();
  for (const auto& c : cells) out.push_back(cell_json(c));
  return out;
}

ojson triplets_json(const hom::SparseMat& m) {
  ojson out = ojson::array();
  for (const auto& t : m.entries) out.push_back({t.row, t.col, t.val});
  return out;
}

ojson graph_json(const core::Graph& g) {
  return parse_json(core::graph_to_json(g), "serialized graph");
}

std::string phase_str(const gauge::Phase& p) {
  std::ostringstream os;
  os << p;
  return os.str();
}

std::optional<unsigned long long> env_seed() {
  const char* raw = std::getenv("GRAPHSTAT_SEED");
  if (raw == nullptr || *raw == '\0') return std::nullopt;
  char* end = nullptr;
  unsigned long long v = std::strtoull(raw, &end, 10);
  check_input(end != raw && *end == '\0',
              std::string("GRAPHSTAT_SEED is not a nonnegative integer: ") +
                  raw);
  return v;
}

// The seed in effect: an explicit flag wins, then the environment.
std::optional<unsigned long long> resolve_seed(bool given,
                                               unsigned long long flag) {
  if (given) return flag;
  return env_seed();
}

struct ReportSink {
  std::string command;
  std::string digest;
  bool text = false;
  std::ostream* out = nullptr;

  // Emits the report: JSON wraps the result; text prints the echo lines and
  // the prepared summary lines.
  void emit(const ojson& result, const std::vector<std::string>& lines) const {
    if (!text) {
      ojson report{{"command", command}, {"input", digest}, {"result", result}};
      *out << report.dump(2) << "\n";
      return;
    }
    *out << "command: " << command << "\n";
    *out << "input: " << digest << "\n";
    for (const auto& l : lines) *out << l << "\n";
  }
};

std::string join_args(const std::vector<std::string>& args) {
  std::string s = "graphstat";
  for (const auto& a : args) {
    s += ' ';
    s += a;
  }
  return s;
}

core::Graph load_graph(const std::string& path, std::string* bytes) {
  *bytes = slurp(path);
  return core::graph_from_json(*bytes);
}

struct SubdividedInput {
  core::Graph graph;
  bool subdivided = false;
  int inserted = 0;
};

// Subdivide just enough for n particles when the input graph is too coarse.
SubdividedInput ensure_sufficient(const core::Graph& g, int n) {
  SubdividedInput r{g, false, 0};
  if (!core::sufficiently_subdivided(g, n)) {
    auto [gs, map] = core::subdivide(g, n);
    r.inserted = gs.num_vertices() - g.num_vertices();
    r.graph = std::move(gs);
    r.subdivided = true;
  }
  return r;
}

int cmd_homology(const ReportSink& sink, const core::Graph& g, int n) {
  check_input(n >= 1, "particle count must be positive");
  auto in = ensure_sufficient(g, n);
  auto cx = cfg::build_config_complex(in.graph, n);
  auto h1 = hom::homology_h1(cx.boundary_data());
  ojson result = group_json(h1.group);
  result["particles"] = n;
  result["cells"] = {cx.cells0.size(), cx.cells1.size(), cx.cells2.size()};
  result["subdivided"] = in.subdivided;
  result["inserted_vertices"] = in.inserted;
  std::vector<std::string> lines{"H1 = " + h1.group.to_string()};
  {
    std::ostringstream os;
    os << "cells: " << cx.cells0.size() << " + " << cx.cells1.size() << " + "
       << cx.cells2.size();
    lines.push_back(os.str());
  }
  if (in.subdivided)
    lines.push_back("subdivided: inserted " + std::to_string(in.inserted) +
                    " vertices");
  sink.emit(result, lines);
  return 0;
}

int cmd_predict(const ReportSink& sink, const core::Graph& g, int n) {
  check_input(n >= 1, "particle count must be positive");
  auto rep = stat::predict_h1(g, n);
  ojson result = group_json(rep.group);
  result["particles"] = rep.particles;
  result["beta1"] = rep.beta1;
  result["n1"] = int_json(rep.n1_total);
  result["n2"] = int_json(rep.n2_total);
  result["n3"] = rep.n3;
  result["n3_nonplanar"] = rep.n3_prime;
  result["cycle_pieces"] = rep.n3_second;
  result["cuts_applied"] = rep.c2;
  ojson cut_vertices = ojson::array();
  for (const auto& t : rep.cut_vertices)
    cut_vertices.push_back({{"vertex", t.vertex},
                            {"mu", t.mu},
                            {"nu", t.nu},
                            {"contribution", int_json(t.contribution)}});
  result["cut_vertices"] = cut_vertices;
  ojson two_cuts = ojson::array();
  for (const auto& t : rep.two_cuts)
    two_cuts.push_back({{"pair", {t.pair.first, t.pair.second}},
                        {"mu", t.mu},
                        {"contribution", int_json(t.contribution)}});
  result["two_cuts"] = two_cuts;
  std::vector<std::string> lines{"predicted H1 = " + rep.group.to_string()};
  {
    std::ostringstream os;
    os << "rank = beta1 + N1 + N2 + N3 = " << rep.beta1 << " + "
       << rep.n1_total << " + " << rep.n2_total << " + " << rep.n3;
    lines.push_back(os.str());
  }
  sink.emit(result, lines);
  return 0;
}

const char* kind_name(conn::MarkedKind k) {
  switch (k) {
    case conn::MarkedKind::Cycle:
      return "cycle";
    case conn::MarkedKind::ThreeConnectedPlanar:
      return "three-connected-planar";
    default:
      return "three-connected-nonplanar";
  }
}

int cmd_decompose(const ReportSink& sink, const core::Graph& g,
                  std::optional<unsigned long long> seed) {
  check_input(core::is_connected(g), "decomposition needs a connected graph");
  auto blocks = conn::block_decomposition(g);
  ojson result;
  result["beta1"] = core::betti_number(g);
  result["vertex_connectivity"] = conn::vertex_connectivity(g);
  ojson cut_vertices = ojson::array();
  for (int v : blocks.cut_vertices)
    cut_vertices.push_back(
        {{"vertex", v}, {"mu", blocks.mu.at(v)}, {"nu", blocks.nu.at(v)}});
  result["cut_vertices"] = cut_vertices;
  ojson block_list = ojson::array();
  for (const auto& b : blocks.blocks)
    block_list.push_back({{"vertices", b.vertices()},
                          {"edges", b.num_edges()},
                          {"bridge", b.num_edges() == 1}});
  result["blocks"] = block_list;

  int n3 = 0, n3_nonplanar = 0, cycles = 0, cuts_applied = 0;
  ojson pieces = ojson::array();
  ojson cuts = ojson::array();
  for (const auto& b : blocks.blocks) {
    if (b.num_vertices() < 3) continue;
    auto d = conn::tri_decomposition(b, seed);
    n3 += d.n3;
    n3_nonplanar += d.n3_prime;
    cycles += d.n3_second;
    cuts_applied += d.c2;
    for (const auto& piece : d.components)
      pieces.push_back({{"vertices", piece.graph.verts},
                        {"edges", piece.graph.edges.size()},
                        {"kind", kind_name(piece.kind)}});
    for (const auto& cut : d.cuts)
      cuts.push_back(
          {{"pair", {cut.pair.first, cut.pair.second}}, {"mu", cut.mu}});
  }
  result["pieces"] = pieces;
  result["cuts"] = cuts;
  result["n3"] = n3;
  result["n3_nonplanar"] = n3_nonplanar;
  result["cycle_pieces"] = cycles;
  result["cuts_applied"] = cuts_applied;
  if (seed)
    result["seed"] = *seed;
  else
    result["seed"] = nullptr;
  std::vector<std::string> lines;
  {
    std::ostringstream os;
    os << "cut vertices: " << blocks.cut_vertices.size()
       << ", blocks: " << blocks.blocks.size() << ", pieces: " << pieces.size()
       << " (" << n3 << " planar 3-connected, " << n3_nonplanar
       << " nonplanar, " << cycles << " cycles)";
    lines.push_back(os.str());
  }
  sink.emit(result, lines);
  return 0;
}

morse::FixPolicy parse_policy(const std::string& name) {
  if (name == "lower") return morse::FixPolicy::Lower;
  if (name == "upper") return morse::FixPolicy::Upper;
  if (name == "random") return morse::FixPolicy::Random;
  throw InputError("unknown policy: " + name +
                   " (expected lower, upper, or random)");
}

int cmd_morse(const ReportSink& sink, const core::Graph& g,
              const std::string& policy_name,
              std::optional<unsigned long long> seed) {
  auto policy = parse_policy(policy_name);
  auto pipe = morse::morse_pipeline(g, policy, seed);
  ojson result;
  result["policy"] = policy_name;
  if (policy == morse::FixPolicy::Random)
    result["seed"] = seed ? ojson(*seed) : ojson(nullptr);
  ojson values = ojson::array();
  for (const auto& [cell, v] : pipe.fix.f2)
    values.push_back({cell_json(cell), v});
  result["values"] = values;
  ojson matching = ojson::array();
  for (const auto& [lower, upper] : pipe.field.matching)
    matching.push_back({cell_json(lower), cell_json(upper)});
  result["matching"] = matching;
  result["critical"] = {{"0", cells_json(pipe.field.critical0)},
                        {"1", cells_json(pipe.field.critical1)},
                        {"2", cells_json(pipe.field.critical2)}};
  result["boundary"] = {{"d1", triplets_json(pipe.complex.boundary.d1)},
                        {"d2", triplets_json(pipe.complex.boundary.d2)}};
  result["h1"] = group_json(pipe.h1);
  std::vector<std::string> lines{
      "H1 = " + pipe.h1.to_string(),
      "critical cells: " + std::to_string(pipe.field.critical0.size()) +
          " + " + std::to_string(pipe.field.critical1.size()) + " + " +
          std::to_string(pipe.field.critical2.size()),
      "matched pairs: " + std::to_string(pipe.field.matching.size())};
  sink.emit(result, lines);
  return 0;
}

int cmd_gauge_check(const ReportSink& sink, const core::Graph& g,
                    const ojson& pot, int n) {
  check_input(n >= 2, "gauge potentials need at least two particles");
  auto cx = cfg::build_config_complex(g, n);
  auto omega = gauge::potential_from_json(pot, n);
  gauge::validate_potential(cx, omega);
  auto verdict = gauge::is_topological(cx, omega);
  ojson result;
  result["particles"] = n;
  result["topological"] = verdict.topological;
  result["offending"] = cells_json(verdict.offending);
  result["pure_ab"] = gauge::is_pure_ab(cx, omega);
  result["pure_statistics"] = gauge::is_pure_statistics(cx, omega);
  std::vector<std::string> lines{
      std::string("topological: ") + (verdict.topological ? "yes" : "no")};
  if (!verdict.topological)
    lines.push_back("offending 2-cells: " +
                    std::to_string(verdict.offending.size()));
  sink.emit(result, lines);
  return 0;
}

int cmd_gauge_decompose(const ReportSink& sink, const core::Graph& g,
                        const ojson& pot) {
  auto cx = cfg::build_config_complex(g, 2);
  auto omega = gauge::potential_from_json(pot, 2);
  gauge::validate_potential(cx, omega);
  auto verdict = gauge::is_topological(cx, omega);
  auto [ab, stats] = gauge::decompose_ab_s(cx, omega);
  auto one = gauge::ab_to_one_particle(cx, ab);
  ojson result;
  result["topological"] = verdict.topological;
  result["ab"] = gauge::potential_to_json(ab);
  result["statistics"] = gauge::potential_to_json(stats);
  result["one_particle"] = gauge::one_particle_to_json(one);
  std::vector<std::string> lines{
      "ab entries: " + std::to_string(ab.values.size()) +
      ", statistics entries: " + std::to_string(stats.values.size())};
  sink.emit(result, lines);
  return 0;
}

int cmd_gauge_lift(const ReportSink& sink, const core::Graph& g,
                   const ojson& pot, int n) {
  check_input(n >= 2, "lift target needs at least two particles");
  auto omega = gauge::potential_from_json(pot, 2);
  auto tr = gauge::transport_to_subdivision(g, omega, n);
  auto cx2 = cfg::build_config_complex(tr.graph, 2);
  auto [ab, stats] = gauge::decompose_ab_s(cx2, tr.omega);
  auto one = gauge::ab_to_one_particle(cx2, ab);
  auto lifted = gauge::lift_to_n(tr.graph, one, stats, n);
  ojson result;
  result["particles"] = n;
  result["graph"] = graph_json(tr.graph);
  result["inserted_vertices"] = tr.graph.num_vertices() - g.num_vertices();
  result["one_particle"] = gauge::one_particle_to_json(one);
  result["statistics"] = gauge::potential_to_json(stats);
  result["potential"] = gauge::potential_to_json(lifted);
  std::vector<std::string> lines{
      "lifted entries: " + std::to_string(lifted.values.size()) +
      ", inserted vertices: " +
      std::to_string(tr.graph.num_vertices() - g.num_vertices())};
  sink.emit(result, lines);
  return 0;
}

int cmd_gauge_sample(const ReportSink& sink, const core::Graph& g,
                     std::optional<unsigned long long> seed) {
  unsigned long long s = seed.value_or(0);
  auto pipe = morse::morse_pipeline(g);
  Rng rng(s);
  auto phases = gauge::random_admissible_phases(pipe.complex, rng);
  auto omega =
      gauge::random_topological_potential(pipe.space, pipe.field, phases);
  ojson result;
  result["seed"] = s;
  ojson phase_list = ojson::array();
  for (const auto& [cell, p] : phases)
    phase_list.push_back({cell_json(cell), phase_str(p)});
  result["phases"] = phase_list;
  result["potential"] = gauge::potential_to_json(omega);
  std::vector<std::string> lines{
      "critical phases: " + std::to_string(phases.size()) +
      ", potential entries: " + std::to_string(omega.values.size())};
  sink.emit(result, lines);
  return 0;
}

int cmd_verify(const ReportSink& sink, const core::Graph& g, int n) {
  check_input(n >= 1, "particle count must be positive");
  auto predicted = stat::predict_h1(g, n).group;
  auto in = ensure_sufficient(g, n);
  auto cx = cfg::build_config_complex(in.graph, n);
  auto computed = hom::homology_h1(cx.boundary_data()).group;
  std::optional<hom::FGAbelianGroup> via_morse;
  if (n == 2) via_morse = morse::morse_pipeline(in.graph).h1;
  bool agree = predicted == computed &&
               (!via_morse.has_value() || *via_morse == computed);
  ojson result;
  result["particles"] = n;
  result["predicted"] = group_json(predicted);
  result["computed"] = group_json(computed);
  result["morse"] = via_morse ? group_json(*via_morse) : ojson(nullptr);
  result["subdivided"] = in.subdivided;
  result["agree"] = agree;
  std::vector<std::string> lines{"predicted: " + predicted.to_string(),
                                 "computed:  " + computed.to_string()};
  if (via_morse) lines.push_back("morse:     " + via_morse->to_string());
  lines.push_back(agree ? "agree" : "MISMATCH");
  sink.emit(result, lines);
  return agree ? 0 : 3;
}

int run_impl(const std::vector<std::string>& args, std::ostream& out,
             std::ostream& err) {
  CLI::App app{"Abelian quantum statistics on graphs"};
  app.require_subcommand(1);

  std::string graph_path;
  std::string potential_path;
  std::string format = "json";
  std::string policy = "lower";
  int particles = 2;
  unsigned long long seed_flag = 0;

  auto add_format = [&](CLI::App* s) {
    s->add_option("--format", format, "report format")
        ->check(CLI::IsMember({"json", "text"}));
  };
  auto add_graph = [&](CLI::App* s) {
    s->add_option("--graph", graph_path, "graph JSON file")->required();
  };

  auto* homology = app.add_subcommand("homology", "first homology by SNF");
  add_graph(homology);
  homology->add_option("--particles", particles)->required();
  add_format(homology);

  auto* predict = app.add_subcommand("predict", "structure-theorem group");
  add_graph(predict);
  predict->add_option("--particles", particles)->required();
  add_format(predict);

  auto* decompose =
      app.add_subcommand("decompose", "connectivity decomposition");
  add_graph(decompose);
  auto* dec_seed = decompose->add_option("--seed", seed_flag);
  add_format(decompose);

  auto* morse_cmd = app.add_subcommand("morse", "discrete Morse pipeline");
  add_graph(morse_cmd);
  morse_cmd->add_option("--policy", policy)
      ->check(CLI::IsMember({"lower", "upper", "random"}));
  auto* morse_seed = morse_cmd->add_option("--seed", seed_flag);
  add_format(morse_cmd);

  auto* gauge_cmd = app.add_subcommand("gauge", "gauge potential tools");
  gauge_cmd->require_subcommand(1);
  auto* gcheck = gauge_cmd->add_subcommand("check", "test a potential");
  add_graph(gcheck);
  gcheck->add_option("--potential", potential_path)->required();
  gcheck->add_option("--particles", particles);
  add_format(gcheck);
  auto* gdecompose =
      gauge_cmd->add_subcommand("decompose", "split into AB + statistics");
  add_graph(gdecompose);
  gdecompose->add_option("--potential", potential_path)->required();
  add_format(gdecompose);
  auto* glift =
      gauge_cmd->add_subcommand("lift", "subdivide and lift to n particles");
  add_graph(glift);
  glift->add_option("--potential", potential_path)->required();
  glift->add_option("--particles", particles)->required();
  add_format(glift);
  auto* gsample =
      gauge_cmd->add_subcommand("sample", "random topological potential");
  add_graph(gsample);
  auto* gsample_seed = gsample->add_option("--seed", seed_flag);
  add_format(gsample);

  auto* verify = app.add_subcommand("verify", "cross-check all pipelines");
  add_graph(verify);
  verify->add_option("--particles", particles)->required();
  add_format(verify);

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e, out, err);
    return code == 0 ? 0 : 1;
  }

  std::string graph_bytes;
  core::Graph g = load_graph(graph_path, &graph_bytes);
  std::string digest_input = graph_bytes;
  ojson pot;
  if (!potential_path.empty()) {
    std::string pot_bytes = slurp(potential_path);
    pot = parse_json(pot_bytes, potential_path);
    digest_input += '\0';
    digest_input += pot_bytes;
  }
  ReportSink sink{join_args(args), fnv1a_hex(digest_input), format == "text",
                  &out};

  if (app.got_subcommand(homology)) return cmd_homology(sink, g, particles);
  if (app.got_subcommand(predict)) return cmd_predict(sink, g, particles);
  if (app.got_subcommand(decompose))
    return cmd_decompose(sink, g, resolve_seed(dec_seed->count() > 0,
                                               seed_flag));
  if (app.got_subcommand(morse_cmd))
    return cmd_morse(sink, g, policy,
                     resolve_seed(morse_seed->count() > 0, seed_flag));
  if (app.got_subcommand(gauge_cmd)) {
    if (gauge_cmd->got_subcommand(gcheck))
      return cmd_gauge_check(sink, g, pot, particles);
    if (gauge_cmd->got_subcommand(gdecompose))
      return cmd_gauge_decompose(sink, g, pot);
    if (gauge_cmd->got_subcommand(glift))
      return cmd_gauge_lift(sink, g, pot, particles);
    return cmd_gauge_sample(
        sink, g, resolve_seed(gsample_seed->count() > 0, seed_flag));
  }
  return cmd_verify(sink, g, particles);
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out,
        std::ostream& err) {
  auto t0 = std::chrono::steady_clock::now();
  int code = 0;
  try {
    code = run_impl(args, out, err);
  } catch (const InputError& e) {
    err << "input error: " << e.what() << "\n";
    code = 1;
  } catch (const InternalError& e) {
    err << "internal error: " << e.what() << "\n";
    code = 2;
  } catch (const std::exception& e) {
    err << "internal error: " << e.what() << "\n";
    code = 2;
  }
  auto ms = std::chrono::duration_cast<std::chrono::milliseconds>(
                std::chrono::steady_clock::now() - t0)
                .count();
  err << "wall-time-ms: " << ms << "\n";
  return code;
}

}  // namespace graphstat::cli
