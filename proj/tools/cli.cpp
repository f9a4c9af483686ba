#include "cli.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <charconv>
#include <chrono>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iomanip>
#include <map>
#include <optional>
#include <ostream>
#include <sstream>

#include "matcon/domination.hpp"
#include "matcon/gapless.hpp"
#include "matcon/json_io.hpp"
#include "matcon/phase_model.hpp"
#include "matcon/reductions.hpp"
#include "matcon/solve.hpp"

namespace matcon::cli {

namespace {

namespace fs = std::filesystem;

enum class Format { Json, Table };

struct Common {
  std::string format = "json";
  std::optional<std::int64_t> umax_threshold;
  std::optional<std::int64_t> state_cap;
  std::optional<std::int64_t> permutation_cap;
  std::optional<std::int64_t> timepoint_job_cap;
  std::optional<std::int64_t> timepoint_horizon_cap;
};

std::int64_t env_integer(const char* name, std::int64_t fallback) {
  const char* raw = std::getenv(name);
  if (raw == nullptr || *raw == '\0') return fallback;
  std::int64_t value = 0;
  const char* end = raw + std::char_traits<char>::length(raw);
  auto [ptr, ec] = std::from_chars(raw, end, value);
  if (ec != std::errc{} || ptr != end || value < 0)
    throw Error(ErrorCode::ParseError,
                std::string(name) + " must be a non-negative integer, got '" + raw + "'");
  return value;
}

SolveOptions solve_options(const Common& c) {
  SolveOptions o;
  o.umax_threshold = c.umax_threshold.value_or(env_integer("MATCON_UMAX_THRESHOLD", o.umax_threshold));
  o.state_cap = static_cast<std::uint64_t>(
      c.state_cap.value_or(env_integer("MATCON_STATE_CAP", static_cast<std::int64_t>(o.state_cap))));
  o.oracle.permutation_cap = static_cast<int>(c.permutation_cap.value_or(
      env_integer("MATCON_PERMUTATION_CAP", o.oracle.permutation_cap)));
  o.oracle.timepoint_job_cap = static_cast<int>(c.timepoint_job_cap.value_or(
      env_integer("MATCON_TIMEPOINT_JOB_CAP", o.oracle.timepoint_job_cap)));
  o.oracle.timepoint_horizon_cap = c.timepoint_horizon_cap.value_or(
      env_integer("MATCON_TIMEPOINT_HORIZON_CAP", o.oracle.timepoint_horizon_cap));
  return o;
}

Format format_of(const Common& c) { return c.format == "table" ? Format::Table : Format::Json; }

/// Inline JSON when the argument starts with '{', a file path otherwise.
Json load(const std::string& source) {
  const auto first = source.find_first_not_of(" \t\r\n");
  if (first != std::string::npos && source[first] == '{') return parse_json(source);
  return read_json_file(source);
}

Algorithm algorithm_named(const std::string& name) {
  auto algo = parse_algorithm(name);
  if (!algo) throw Error(ErrorCode::ParseError, "unknown algorithm '" + name + "'");
  return *algo;
}

/// An algorithm that does not hit the cap `failed` just hit.
std::string cap_hint(const Instance& inst, Algorithm failed, const SolveOptions& options) {
  const Instance norm = normalize(inst).normalized;
  if (failed != Algorithm::PhaseDp && dp_state_space(norm) <= options.state_cap) return "phase-dp";
  return "prefix";
}

void add_common(CLI::App* cmd, Common& c, bool with_caps) {
  cmd->add_option("--format", c.format, "Output format")
      ->check(CLI::IsMember({"json", "table"}))
      ->capture_default_str();
  if (!with_caps) return;
  cmd->add_option("--umax-threshold", c.umax_threshold, "auto: largest u_max for umax-fpt");
  cmd->add_option("--state-cap", c.state_cap, "phase-dp state cap");
  cmd->add_option("--permutation-cap", c.permutation_cap, "oracle: largest n");
  cmd->add_option("--timepoint-job-cap", c.timepoint_job_cap, "timepoints: largest n");
  cmd->add_option("--timepoint-horizon-cap", c.timepoint_horizon_cap,
                  "timepoints: largest u_max + sum(p)");
}

void print_schedule_table(std::ostream& out, const Instance& inst, const Schedule& sched) {
  out << std::setw(6) << "job" << std::setw(8) << "start" << std::setw(8) << "end" << '\n';
  for (int j : job_order(sched)) {
    Time start = 0;
    for (const auto& s : sched.starts)
      if (s.job == j) start = s.start;
    out << std::setw(6) << j << std::setw(8) << start << std::setw(8) << start + inst.job(j).p
        << '\n';
  }
}

std::string vector_text(const std::vector<std::int64_t>& v) {
  std::ostringstream os;
  os << '(';
  for (std::size_t i = 0; i < v.size(); ++i) os << (i ? "," : "") << v[i];
  os << ')';
  return os.str();
}

// ---- solve ---------------------------------------------------------------

struct SolveArgs {
  Common common;
  std::string algo = "auto";
  std::string instance;
};

int run_solve(const SolveArgs& a, std::ostream& out, std::ostream& err) {
  const Instance inst = instance_from_json(load(a.instance));
  const SolveOptions options = solve_options(a.common);
  const Algorithm algo = algorithm_named(a.algo);
  try {
    const SolveResult result = solve(inst, algo, options);
    if (format_of(a.common) == Format::Json) {
      out << to_json(result).dump() << '\n';
    } else {
      out << "makespan   " << result.makespan << '\n'
          << "front_idle " << result.front_idle << '\n'
          << "algorithm  " << result.algorithm << '\n';
      print_schedule_table(out, inst, result.schedule);
    }
    return kOk;
  } catch (const Error& e) {
    if (!is_cap_error(e.code())) throw;
    err << "error: " << e.what() << '\n'
        << "hint: try --algo " << cap_hint(inst, algo, options) << '\n';
    return kCapExceeded;
  }
}

// ---- check ---------------------------------------------------------------

struct CheckArgs {
  Common common;
  std::string instance;
  std::string schedule;
};

int run_check(const CheckArgs& a, std::ostream& out, std::ostream&) {
  const Instance inst = instance_from_json(load(a.instance));
  const Schedule sched = schedule_from_json(load(a.schedule));
  const FeasibilityReport report = check_feasible(inst, sched);
  if (format_of(a.common) == Format::Json) {
    Json j;
    j["feasible"] = report.feasible;
    if (report.feasible) j["makespan"] = makespan(sched, inst);
    if (report.first_violation) {
      const Violation& v = *report.first_violation;
      Json vj;
      vj["kind"] = v.kind == ViolationKind::Overlap ? "overlap" : "resource_deficit";
      vj["job"] = v.job;
      vj["time"] = v.time;
      if (v.resource) {
        vj["resource"] = *v.resource;
        vj["demand"] = v.demand;
        vj["supply"] = v.supply;
      }
      j["violation"] = std::move(vj);
    }
    out << j.dump() << '\n';
  } else if (report.feasible) {
    out << "feasible, makespan " << makespan(sched, inst) << '\n';
  } else {
    out << "infeasible: " << describe(*report.first_violation) << '\n';
  }
  return report.feasible ? kOk : kNegative;
}

// ---- certify -------------------------------------------------------------

struct CertifyArgs {
  Common common;
  std::string instance;
  std::string schedule;
  bool from_solver = false;
  std::string algo = "auto";
  std::string verify_only;
  Time front_idle = 0;
};

/// Same job order, all idle moved before the first job.
Schedule compact_to_front(const Instance& inst, const Schedule& sched) {
  const std::vector<int> order = job_order(sched);
  Time total = 0;
  for (int j : order) total += inst.job(j).p;
  return back_to_back(inst, order, makespan(sched, inst) - total);
}

void print_certificate_table(std::ostream& out, const Instance& inst, const PhaseCertificate& c) {
  const auto classes = requirement_classes(inst);
  out << "classes:";
  for (const auto& cls : classes) out << ' ' << vector_text(cls.key);
  out << '\n';
  auto table = [&](const char* name, const CountTable& t) {
    out << name << ":\n";
    for (std::size_t w = 0; w < t.size(); ++w) {
      out << "  w" << w + 1 << ':';
      for (auto v : t[w]) out << ' ' << v;
      out << '\n';
    }
  };
  table("x", c.x);
  table("x_sigma", c.x_sigma);
  table("alpha", c.alpha);
  out << "d:";
  for (auto v : c.d) out << ' ' << v;
  out << '\n';
}

int run_certify(const CertifyArgs& a, std::ostream& out, std::ostream& err) {
  const Instance original = instance_from_json(load(a.instance));
  Instance inst = original;
  PhaseCertificate cert;

  if (!a.verify_only.empty()) {
    if (a.front_idle < 0) throw Error(ErrorCode::ParseError, "--front-idle must be non-negative");
    inst = shift_supplies(original, a.front_idle);
    cert = certificate_from_json(load(a.verify_only));
  } else {
    Schedule sched;
    if (a.from_solver) {
      const SolveOptions options = solve_options(a.common);
      sched = compact_to_front(original, solve(original, algorithm_named(a.algo), options).schedule);
    } else {
      sched = schedule_from_json(load(a.schedule));
    }
    Time g = 0;
    if (!sched.starts.empty()) {
      g = std::min_element(sched.starts.begin(), sched.starts.end(),
                           [](const auto& x, const auto& y) { return x.start < y.start; })
              ->start;
    }
    if (g < 0) throw Error(ErrorCode::NegativeStart, "schedule starts before time 0");
    inst = shift_supplies(original, g);
    try {
      cert = build_certificate(inst, shifted(std::move(sched), -g));
    } catch (const Error& e) {
      if (e.code() != ErrorCode::ScheduleInfeasible) throw;
      err << "schedule is infeasible: " << e.what() << '\n';
      return kNegative;
    }
  }

  const CertificateCheck check = verify_certificate(inst, cert);
  if (format_of(a.common) == Format::Json) {
    out << to_json(cert).dump() << '\n';
  } else {
    print_certificate_table(out, inst, cert);
    out << (check.ok ? "verified" : "NOT verified") << '\n';
  }
  for (const auto& v : check.violations) {
    err << to_string(v.family) << " violation";
    if (v.phase > 0) err << " at w=" << v.phase;
    if (v.index >= 0) err << " (index " << v.index << ")";
    err << ": " << v.detail << '\n';
  }
  return check.ok ? kOk : kNegative;
}

// ---- generate ------------------------------------------------------------

struct GenerateArgs {
  std::string family;
  std::string output;
  int k = 0;
  std::int64_t B = 0;
  std::vector<std::int64_t> sizes;
  std::string graph;
  RandomParams random;
};

int run_generate(const GenerateArgs& a, std::ostream& out, std::ostream& err) {
  Json j;
  std::optional<bool> verdict;
  auto try_oracle = [&](auto&& oracle) {
    try {
      verdict = oracle();
    } catch (const Error& e) {
      if (!is_cap_error(e.code())) throw;
      err << "base oracle skipped: " << e.what() << '\n';
    }
  };

  if (a.family == "random") {
    j = to_json(random_instance(a.random));
  } else if (a.family == "indepset") {
    if (a.graph.empty()) throw Error(ErrorCode::InvalidBase, "indepset needs --graph");
    GraphInstance g = graph_from_json(load(a.graph));
    g.k = a.k;
    const GeneratedInstance gen = reduce_independent_set(g);
    try_oracle([&] { return is_oracle(g); });
    j = to_json(gen);
  } else {
    const BinPackingInstance bp{a.k, a.B, a.sizes};
    GeneratedInstance gen;
    if (a.family == "bp-bmax") gen = reduce_binpacking_bmax(bp);
    else if (a.family == "bp-q") gen = reduce_binpacking_q(bp);
    else gen = reduce_binpacking_two_resources(bp);
    try_oracle([&] { return bp_oracle(bp); });
    j = to_json(gen);
  }
  if (verdict) j["provenance"]["base_verdict"] = *verdict ? "YES" : "NO";

  if (a.output.empty()) {
    out << j.dump(2) << '\n';
  } else {
    std::ofstream file(a.output);
    if (!file) throw Error(ErrorCode::ParseError, "cannot write " + a.output);
    file << j.dump(2) << '\n';
  }
  if (j.contains("provenance"))
    err << "target makespan " << j["provenance"]["target_makespan"].get<Time>() << '\n';
  if (verdict) err << "base " << (*verdict ? "YES" : "NO") << '\n';
  return kOk;
}

// ---- bench ---------------------------------------------------------------

struct BenchArgs {
  Common common;
  std::string directory;
  std::vector<std::string> algos;
};

struct Cell {
  std::optional<Time> makespan;  // empty: infeasible instance
  std::int64_t micros = 0;
  bool available = false;
  std::string note;
};

bool not_applicable(ErrorCode code) {
  return is_cap_error(code) || code == ErrorCode::MultiResource ||
         code == ErrorCode::NotWeaklyOrdered;
}

int run_bench(const BenchArgs& a, std::ostream& out, std::ostream&) {
  if (!fs::is_directory(a.directory))
    throw Error(ErrorCode::ParseError, a.directory + " is not a directory");
  std::vector<fs::path> files;
  for (const auto& entry : fs::directory_iterator(a.directory))
    if (entry.is_regular_file() && entry.path().extension() == ".json") files.push_back(entry.path());
  std::sort(files.begin(), files.end());
  if (files.empty()) throw Error(ErrorCode::ParseError, "no .json instances in " + a.directory);

  std::vector<Algorithm> algos;
  if (a.algos.empty()) {
    algos = {Algorithm::Oracle,     Algorithm::Timepoints, Algorithm::Prefix,
             Algorithm::Domination, Algorithm::UmaxFpt,    Algorithm::PhaseDp};
  } else {
    for (const auto& name : a.algos) algos.push_back(algorithm_named(name));
  }
  const SolveOptions options = solve_options(a.common);

  Json rows = Json::array();
  bool all_agree = true;
  std::ostringstream table;
  table << std::left << std::setw(28) << "instance";
  for (auto algo : algos) table << std::setw(20) << to_string(algo);
  table << "agree\n";

  for (const auto& path : files) {
    const Instance inst = instance_from_json(read_json_file(path.string()));
    std::vector<Cell> cells;
    for (auto algo : algos) {
      Cell cell;
      const auto t0 = std::chrono::steady_clock::now();
      try {
        cell.makespan = solve(inst, algo, options).makespan;
        cell.available = true;
      } catch (const Error& e) {
        if (e.code() == ErrorCode::Infeasible) {
          cell.available = true;
        } else if (not_applicable(e.code())) {
          cell.note = std::string(to_string(e.code()));
        } else {
          throw;
        }
      }
      cell.micros = std::chrono::duration_cast<std::chrono::microseconds>(
                        std::chrono::steady_clock::now() - t0)
                        .count();
      cells.push_back(std::move(cell));
    }

    // Reference: the permutation oracle, else the time-point oracle.
    std::optional<std::size_t> ref;
    for (auto want : {Algorithm::Oracle, Algorithm::Timepoints}) {
      for (std::size_t i = 0; i < algos.size() && !ref; ++i)
        if (algos[i] == want && cells[i].available) ref = i;
    }
    std::optional<bool> agree;
    if (ref) {
      agree = true;
      for (const auto& c : cells)
        if (c.available && c.makespan != cells[*ref].makespan) agree = false;
      all_agree = all_agree && *agree;
    }

    Json row;
    row["instance"] = path.filename().string();
    Json results;
    table << std::setw(28) << path.filename().string();
    for (std::size_t i = 0; i < algos.size(); ++i) {
      const Cell& c = cells[i];
      std::string text;
      if (!c.available) {
        results[std::string(to_string(algos[i]))] = "n/a";
        text = "n/a";
      } else {
        Json cj;
        cj["makespan"] = c.makespan ? Json(*c.makespan) : Json("infeasible");
        cj["micros"] = c.micros;
        results[std::string(to_string(algos[i]))] = std::move(cj);
        text = (c.makespan ? std::to_string(*c.makespan) : std::string("inf")) + " (" +
               std::to_string(c.micros) + "us)";
      }
      table << std::setw(20) << text;
    }
    row["results"] = std::move(results);
    row["agree"] = agree ? Json(*agree) : Json("n/a");
    rows.push_back(std::move(row));
    table << (agree ? (*agree ? "yes" : "NO") : "n/a") << '\n';
  }

  if (format_of(a.common) == Format::Json) {
    Json j;
    j["algorithms"] = Json::array();
    for (auto algo : algos) j["algorithms"].push_back(std::string(to_string(algo)));
    j["rows"] = std::move(rows);
    out << j.dump(2) << '\n';
  } else {
    out << table.str();
  }
  return all_agree ? kOk : kNegative;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Exact solvers for single-machine scheduling with non-renewable resources",
               "matcon"};
  app.require_subcommand(1);

  SolveArgs solve_args;
  auto* solve_cmd = app.add_subcommand("solve", "Optimal makespan and schedule");
  add_common(solve_cmd, solve_args.common, true);
  solve_cmd->add_option("--algo", solve_args.algo, "Algorithm")->capture_default_str();
  solve_cmd->add_option("instance", solve_args.instance, "Instance file or inline JSON")->required();

  CheckArgs check_args;
  auto* check_cmd = app.add_subcommand("check", "Feasibility of a schedule");
  add_common(check_cmd, check_args.common, false);
  check_cmd->add_option("instance", check_args.instance, "Instance file or inline JSON")->required();
  check_cmd->add_option("schedule", check_args.schedule, "Schedule file or inline JSON")->required();

  CertifyArgs cert_args;
  auto* cert_cmd = app.add_subcommand("certify", "Build and verify a phase-count certificate");
  add_common(cert_cmd, cert_args.common, true);
  cert_cmd->add_option("instance", cert_args.instance, "Instance file or inline JSON")->required();
  auto* sched_opt = cert_cmd->add_option("schedule", cert_args.schedule, "Schedule file or inline JSON");
  auto* from_opt = cert_cmd->add_flag("--from-solver", cert_args.from_solver,
                                      "Certify the witness of --algo instead of a schedule file");
  cert_cmd->add_option("--algo", cert_args.algo, "Solver for --from-solver")->capture_default_str();
  auto* verify_opt = cert_cmd->add_option("--verify-only", cert_args.verify_only,
                                          "Verify a certificate file instead of building one");
  cert_cmd->add_option("--front-idle", cert_args.front_idle,
                       "Front idle the certificate refers to (with --verify-only)");
  sched_opt->excludes(from_opt)->excludes(verify_opt);
  from_opt->excludes(verify_opt);

  GenerateArgs gen_args;
  auto* gen_cmd = app.add_subcommand("generate", "Instance generators");
  gen_cmd->add_option("family", gen_args.family, "Generator family")
      ->required()
      ->check(CLI::IsMember({"bp-bmax", "bp-q", "bp-2r", "indepset", "random"}));
  gen_cmd->add_option("-o,--output", gen_args.output, "Write the instance here instead of stdout");
  gen_cmd->add_option("--k", gen_args.k, "Bins, or independent set size");
  gen_cmd->add_option("--B", gen_args.B, "Bin size");
  gen_cmd->add_option("--sizes", gen_args.sizes, "Object sizes, comma separated")->delimiter(',');
  gen_cmd->add_option("--graph", gen_args.graph, "Graph file or inline JSON");
  gen_cmd->add_option("--seed", gen_args.random.seed, "Random seed")->capture_default_str();
  gen_cmd->add_option("--n", gen_args.random.n, "Jobs")->capture_default_str();
  gen_cmd->add_option("--r", gen_args.random.r, "Resources")->capture_default_str();
  gen_cmd->add_option("--q", gen_args.random.q, "Supply dates")->capture_default_str();
  gen_cmd->add_option("--max-p", gen_args.random.max_p, "Largest processing time")
      ->capture_default_str();
  gen_cmd->add_option("--max-a", gen_args.random.max_a, "Largest requirement")
      ->capture_default_str();
  gen_cmd->add_option("--max-gap", gen_args.random.max_gap, "Largest gap between supply dates")
      ->capture_default_str();
  gen_cmd->add_option("--first-supply", gen_args.random.first_supply, "Date of the first supply")
      ->capture_default_str();

  BenchArgs bench_args;
  auto* bench_cmd = app.add_subcommand("bench", "Time every algorithm on a corpus");
  add_common(bench_cmd, bench_args.common, true);
  bench_cmd->add_option("directory", bench_args.directory, "Directory of instance files")
      ->required();
  bench_cmd->add_option("--algos", bench_args.algos, "Algorithms, comma separated")
      ->delimiter(',');

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::CallForHelp& e) {
    app.exit(e, out, err);
    return kOk;
  } catch (const CLI::ParseError& e) {
    app.exit(e, out, err);
    return kInputError;
  }

  try {
    if (solve_cmd->parsed()) return run_solve(solve_args, out, err);
    if (check_cmd->parsed()) return run_check(check_args, out, err);
    if (cert_cmd->parsed()) {
      if (cert_args.schedule.empty() && !cert_args.from_solver && cert_args.verify_only.empty())
        throw Error(ErrorCode::ParseError,
                    "certify needs a schedule, --from-solver or --verify-only");
      return run_certify(cert_args, out, err);
    }
    if (gen_cmd->parsed()) return run_generate(gen_args, out, err);
    return run_bench(bench_args, out, err);
  } catch (const Error& e) {
    err << "error: " << e.what() << '\n';
    return is_cap_error(e.code()) ? kCapExceeded : kInputError;
  }
}

}  // namespace matcon::cli
