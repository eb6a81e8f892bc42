#include "cli.hpp"

#include <cmath>
#include <fstream>
#include <iostream>
#include <iterator>
#include <sstream>

#include "CLI11.hpp"
#include "json.hpp"
#include "tetrachain/chain.hpp"
#include "tetrachain/markov.hpp"
#include "tetrachain/monodromy.hpp"
#include "tetrachain/triangulation_io.hpp"
#include "tetrachain/zigzag.hpp"

namespace tetrachain::cli {

namespace {

using nlohmann::json;
using nlohmann::ordered_json;

/// Raised when a computed cross-check disagrees with its oracle.
class InvariantFailure : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

ordered_json face_vertices(const Face& f) { return ordered_json::array({f.v[0], f.v[1], f.v[2]}); }

ordered_json triangulation_json(const Triangulation& t) {
  ordered_json j;
  j["vertex_count"] = t.vertex_count();
  j["faces"] = ordered_json::array();
  for (FaceId id : t.live_face_ids()) {
    j["faces"].push_back(face_vertices(t.face(id)));
  }
  return j;
}

ordered_json trace_json(const std::vector<TraceStep>& trace) {
  auto out = ordered_json::array();
  for (const auto& s : trace) {
    ordered_json row;
    row["gluing"] = s.gluing;
    row["face_id"] = s.chosen.value;
    row["type"] = to_string(s.types.parent);
    row["children"] = ordered_json::array();
    for (MType c : s.types.children) row["children"].push_back(to_string(c));
    out.push_back(std::move(row));
  }
  return out;
}

ordered_json frontier_json(const ChainRun& run) {
  return ordered_json::array({run.frontier[0].value, run.frontier[1].value, run.frontier[2].value});
}

ordered_json class_map(const ClassProbabilities& p) {
  ordered_json j;
  for (std::size_t k = 0; k < 3; ++k) j[std::to_string(k + 1)] = to_fraction_string(p[k]);
  return j;
}

ordered_json exact_and_approx(const Rational& r) {
  ordered_json j;
  j["exact"] = to_fraction_string(r);
  j["approx"] = to_double(r);
  return j;
}

void require_format(const RunConfig& cfg, std::initializer_list<std::string_view> allowed) {
  for (auto a : allowed) {
    if (cfg.format == a) return;
  }
  throw UsageError("unsupported --format '" + cfg.format + "' for " + cfg.subcommand);
}

// ==========================================================
// Subcommands

void emit_chain(const RunConfig& cfg, const ChainRun& run, std::ostream& out) {
  require_format(cfg, {"json", "text"});
  if (cfg.format == "text") {
    out << to_text(run.triangulation);
    return;
  }
  const auto& t = run.triangulation;
  ordered_json j;
  j["choices"] = run.choices.to_string();
  j["n"] = run.length();
  j["vertex_count"] = t.vertex_count();
  j["edge_count"] = t.edge_count();
  j["face_count"] = t.face_count();
  j["zigzags_up_to_reversal"] = zigzag_pairs(t);
  j["frontier"] = frontier_json(run);
  j["trace"] = trace_json(run.trace);
  j["triangulation"] = triangulation_json(t);
  out << j.dump(2) << "\n";
}

int cmd_build(const RunConfig& cfg, std::ostream& out) {
  emit_chain(cfg, build_chain(parse_choices(cfg.choices)), out);
  return kExitOk;
}

int cmd_random(const RunConfig& cfg, std::ostream& out) {
  if (cfg.n < 2) throw UsageError("--n must be at least 2");
  emit_chain(cfg, random_chain(cfg.n, cfg.seed), out);
  return kExitOk;
}

int cmd_inspect(const RunConfig& cfg, std::ostream& out) {
  require_format(cfg, {"json", "csv"});
  const auto run = build_chain(parse_choices(cfg.choices));
  const auto& t = run.triangulation;
  const auto zigzags = enumerate_zigzags(t);
  const auto monodromies = all_monodromies(t);

  ordered_json faces = ordered_json::array();
  std::ostringstream csv;
  csv << "face_id,a,b,c,type,local_zigzag_count,zigzags_through_face\n";
  for (const auto& m : monodromies) {
    const MType type = classify(m);
    const auto through = zigzags_through_face(t, zigzags, m.face);
    if (static_cast<int>(through.size()) != local_zigzag_count(type)) {
      throw InvariantFailure("face " + std::to_string(m.face.value) + " of type " +
                             std::string(to_string(type)) + " meets " +
                             std::to_string(through.size()) + " zigzags");
    }
    ordered_json row;
    row["face_id"] = m.face.value;
    row["vertices"] = face_vertices(m.vertices);
    row["type"] = to_string(type);
    row["local_zigzag_count"] = local_zigzag_count(type);
    faces.push_back(std::move(row));
    csv << m.face.value << "," << m.vertices.v[0] << "," << m.vertices.v[1] << ","
        << m.vertices.v[2] << "," << to_string(type) << "," << local_zigzag_count(type) << ","
        << through.size() << "\n";
  }
  if (cfg.format == "csv") {
    out << csv.str();
    return kExitOk;
  }

  ordered_json zz = ordered_json::array();
  for (std::size_t i = 0; i < zigzags.size(); ++i) {
    const auto& z = zigzags.zigzags[i];
    ordered_json row;
    row["length"] = z.length();
    row["vertices"] = z.vertices();
    row["edge_simple"] = is_edge_simple(z);
    row["pair_id"] = zigzags.pair_id(i);
    zz.push_back(std::move(row));
  }

  ordered_json j;
  j["choices"] = run.choices.to_string();
  j["n"] = run.length();
  j["triangulation"] = triangulation_json(t);
  j["zigzags_up_to_reversal"] = zigzags.count_up_to_reversal();
  j["zigzags"] = std::move(zz);
  j["faces"] = std::move(faces);
  j["frontier"] = frontier_json(run);
  j["trace"] = trace_json(run.trace);
  out << j.dump(2) << "\n";
  return kExitOk;
}

int cmd_census(const RunConfig& cfg, std::ostream& out) {
  require_format(cfg, {"json", "csv"});
  if (cfg.n < 2) throw UsageError("--n must be at least 2");
  const auto census = zigzag_census(cfg.n, cfg.cap);
  const auto predicted = exact_pk(cfg.n);
  const bool equal = census.probability == predicted;

  if (cfg.format == "csv") {
    out << "k,census,markov\n";
    for (std::size_t k = 0; k < 3; ++k) {
      out << k + 1 << "," << to_fraction_string(census.probability[k]) << ","
          << to_fraction_string(predicted[k]) << "\n";
    }
  } else {
    ordered_json j;
    j["n"] = cfg.n;
    j["total"] = census.total;
    j["counts"] = class_map(census.probability);
    j["raw_counts"] = ordered_json::object();
    for (std::size_t k = 0; k < 3; ++k) j["raw_counts"][std::to_string(k + 1)] = census.counts[k];
    j["markov"] = class_map(predicted);
    j["verdict"] = equal ? "EQUAL" : "DIFFER";
    out << j.dump(2) << "\n";
  }
  return equal ? kExitOk : kExitInvariant;
}

int cmd_montecarlo(const RunConfig& cfg, std::ostream& out) {
  require_format(cfg, {"json"});
  if (cfg.n < 2) throw UsageError("--n must be at least 2");
  if (cfg.trials < 1) throw UsageError("--trials must be positive");
  const auto result = sample_zigzag_counts(cfg.n, cfg.trials, cfg.seed, cfg.threads);
  const auto limit = limits();

  ordered_json j;
  j["n"] = cfg.n;
  j["trials"] = cfg.trials;
  j["seed"] = cfg.seed;
  ordered_json counts, freq, se, lim, within;
  for (std::size_t k = 0; k < 3; ++k) {
    const auto key = std::to_string(k + 1);
    const double p_hat = static_cast<double>(result.counts[k]) / static_cast<double>(cfg.trials);
    const double p = to_double(limit[k]);
    const double sigma = std::sqrt(p * (1.0 - p) / static_cast<double>(cfg.trials));
    counts[key] = result.counts[k];
    freq[key] = p_hat;
    se[key] = std::sqrt(p_hat * (1.0 - p_hat) / static_cast<double>(cfg.trials));
    lim[key] = to_fraction_string(limit[k]);
    within[key] = std::abs(p_hat - p) <= 3.0 * sigma;
  }
  j["counts"] = counts;
  j["frequencies"] = freq;
  j["standard_errors"] = se;
  j["limits"] = lim;
  j["within_3_sigma_of_limit"] = within;
  out << j.dump(2) << "\n";
  return kExitOk;
}

int cmd_markov_pk(const RunConfig& cfg, std::ostream& out) {
  require_format(cfg, {"json", "csv"});
  if (cfg.n < 2) throw UsageError("--n must be at least 2");
  if (cfg.format == "csv") {
    out << "n,p1,p2,p3,p1_approx,p2_approx,p3_approx\n";
    for (std::size_t n = 2; n <= cfg.n; ++n) {
      const auto pk = exact_pk(n);
      out << n;
      for (const auto& p : pk) out << "," << to_fraction_string(p);
      for (const auto& p : pk) out << "," << to_double(p);
      out << "\n";
    }
    return kExitOk;
  }
  const auto d = exact_distribution(cfg.n);
  const auto pk = group_by_class(d);
  ordered_json j;
  j["n"] = cfg.n;
  j["distribution"] = ordered_json::object();
  for (MType t : kAllTypes) {
    j["distribution"][std::string(to_string(t))] = exact_and_approx(d[state_index(t)]);
  }
  j["pk"] = ordered_json::object();
  for (std::size_t k = 0; k < 3; ++k) j["pk"][std::to_string(k + 1)] = exact_and_approx(pk[k]);
  j["limits"] = class_map(limits());
  out << j.dump(2) << "\n";
  return kExitOk;
}

int cmd_markov_stationary(const RunConfig& cfg, std::ostream& out) {
  require_format(cfg, {"json"});
  const auto pi = stationary();
  ordered_json j;
  j["stationary"] = ordered_json::object();
  for (MType t : kAllTypes) j["stationary"][std::string(to_string(t))] = to_fraction_string(pi[state_index(t)]);
  j["limits"] = class_map(group_by_class(pi));
  out << j.dump(2) << "\n";
  return kExitOk;
}

int cmd_markov_digraph(const RunConfig& cfg, std::ostream& out) {
  if (cfg.dot || cfg.format == "dot") {
    out << digraph_dot();
    return kExitOk;
  }
  require_format(cfg, {"json"});
  const auto p = transition_matrix();
  ordered_json j;
  j["states"] = ordered_json::array();
  for (MType t : kAllTypes) j["states"].push_back(to_string(t));
  j["matrix"] = ordered_json::array();
  for (const auto& row : p) {
    auto r = ordered_json::array();
    for (const auto& x : row) r.push_back(to_fraction_string(x));
    j["matrix"].push_back(std::move(r));
  }
  out << j.dump(2) << "\n";
  return kExitOk;
}

int cmd_validate(const RunConfig& cfg, std::ostream& out) {
  require_format(cfg, {"json"});
  std::string text;
  if (cfg.input == "-") {
    text.assign(std::istreambuf_iterator<char>(std::cin), {});
  } else {
    std::ifstream in(cfg.input);
    if (!in) throw UsageError("cannot open '" + cfg.input + "'");
    text.assign(std::istreambuf_iterator<char>(in), {});
  }
  Triangulation t;
  try {
    t = parse_triangulation(text);
  } catch (const ParseError& e) {
    throw UsageError(e.what());
  }
  const auto violations = validate(t, {.require_sphere = !cfg.allow_non_sphere});
  ordered_json j;
  j["valid"] = violations.empty();
  j["vertex_count"] = t.vertex_count();
  j["edge_count"] = t.edge_count();
  j["face_count"] = t.face_count();
  j["euler_characteristic"] = t.euler_characteristic();
  j["violations"] = ordered_json::array();
  for (const auto& v : violations) {
    j["violations"].push_back({{"kind", v.kind}, {"detail", v.detail}});
  }
  out << j.dump(2) << "\n";
  return violations.empty() ? kExitOk : kExitInvariant;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  RunConfig cfg;
  CLI::App app{"Tetrahedral chains: zigzags, z-monodromies and their Markov chain", "tetrachain"};
  app.require_subcommand(1);

  auto add_format = [&](CLI::App* sub, std::string help) {
    sub->add_option("--format", cfg.format, std::move(help))->capture_default_str();
  };

  auto* build = app.add_subcommand("build", "Build a chain from an explicit choice sequence");
  build->add_option("--choices", cfg.choices, "Comma separated choices, e.g. 2,0,1")->required();
  add_format(build, "json | text");

  auto* random = app.add_subcommand("random", "Build a seeded random chain");
  random->add_option("--n", cfg.n, "Chain length (>= 2)")->required();
  random->add_option("--seed", cfg.seed, "64-bit seed")->capture_default_str();
  add_format(random, "json | text");

  auto* inspect = app.add_subcommand("inspect", "Zigzags, face types and trace of a chain");
  inspect->add_option("--choices", cfg.choices, "Comma separated choices")->required();
  add_format(inspect, "json | csv");

  auto* census = app.add_subcommand("census", "Exhaustive zigzag census against the Markov chain");
  census->add_option("--n", cfg.n, "Chain length (>= 2)")->required();
  census->add_option("--cap", cfg.cap, "Largest n allowed for enumeration")->capture_default_str();
  add_format(census, "json | csv");

  auto* montecarlo = app.add_subcommand("montecarlo", "Sample random chains and count zigzags");
  montecarlo->add_option("--n", cfg.n, "Chain length (>= 2)")->required();
  montecarlo->add_option("--trials", cfg.trials, "Number of chains")->capture_default_str();
  montecarlo->add_option("--seed", cfg.seed, "Master seed")->capture_default_str();
  montecarlo->add_option("--threads", cfg.threads, "Worker threads, 0 = all cores")
      ->capture_default_str();
  add_format(montecarlo, "json");

  auto* markov = app.add_subcommand("markov", "Exact Markov chain of z-monodromy types");
  markov->require_subcommand(1);
  auto* pk = markov->add_subcommand("pk", "Exact zigzag-count probabilities for length n");
  pk->add_option("--n", cfg.n, "Chain length (>= 2)")->required();
  add_format(pk, "json | csv (csv lists every length 2..n)");
  auto* stat = markov->add_subcommand("stationary", "Stationary distribution");
  add_format(stat, "json");
  auto* digraph = markov->add_subcommand("digraph", "Transition digraph");
  digraph->add_flag("--dot", cfg.dot, "Emit Graphviz DOT (default)");
  digraph->add_option("--format", cfg.format, "dot | json");

  auto* validate_cmd = app.add_subcommand("validate", "Check a triangulation file");
  validate_cmd->add_option("input", cfg.input, "Text or JSON triangulation, '-' for stdin")
      ->capture_default_str();
  validate_cmd->add_flag("--allow-non-sphere", cfg.allow_non_sphere,
                         "Do not require Euler characteristic 2");
  add_format(validate_cmd, "json");

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp& e) {
    out << app.help();
    return kExitOk;
  } catch (const CLI::CallForAllHelp& e) {
    out << app.help("", CLI::AppFormatMode::All);
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n";
    return kExitUsage;
  }

  const std::vector<std::pair<CLI::App*, int (*)(const RunConfig&, std::ostream&)>> handlers{
      {build, cmd_build},          {random, cmd_random},       {inspect, cmd_inspect},
      {census, cmd_census},        {montecarlo, cmd_montecarlo}, {validate_cmd, cmd_validate},
      {pk, cmd_markov_pk},         {stat, cmd_markov_stationary}, {digraph, cmd_markov_digraph},
  };
  if (*digraph && digraph->count("--format") == 0) {
    cfg.format = "dot";
  }
  try {
    for (const auto& [sub, handler] : handlers) {
      if (*sub) {
        cfg.subcommand = sub->get_parent() == markov ? "markov " + sub->get_name() : sub->get_name();
        return handler(cfg, out);
      }
    }
  } catch (const UsageError& e) {
    err << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const EnumerationCapExceeded& e) {
    err << "error: " << e.what() << " (raise it with --cap)\n";
    return kExitUsage;
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::exception& e) {
    err << "internal invariant violated: " << e.what() << "\n";
    return kExitInvariant;
  }
  err << "error: no subcommand\n";
  return kExitUsage;
}

}  // namespace tetrachain::cli
