#include "algrec/cli.hpp"

#include "algrec/closure.hpp"
#include "algrec/free_analysis.hpp"
#include "algrec/identities.hpp"
#include "algrec/lattice.hpp"
#include "algrec/scenario.hpp"
#include "algrec/walk.hpp"
#include "algrec/word_metric.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <atomic>
#include <chrono>
#include <cstdio>
#include <cstdlib>
#include <ctime>
#include <exception>
#include <filesystem>
#include <fstream>
#include <functional>
#include <map>
#include <optional>
#include <sstream>
#include <thread>

namespace algrec {

namespace {

namespace fs = std::filesystem;
using json = nlohmann::json;

constexpr const char* kToolVersion = "0.4.0";
constexpr int kExitCheckFailed = 1;

struct Globals {
  std::string config_path;
  std::vector<std::uint64_t> seeds;
  std::string out;
  std::size_t threads = 0;
};

std::string fmt(double x) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.10g", x);
  return buf;
}

std::string decimal(const Rational& r) { return fmt(r.convert_to<double>()); }

std::size_t resolve_threads(std::size_t flag) {
  if (flag > 0) return flag;
  if (const char* env = std::getenv("ALGREC_THREADS")) {
    char* end = nullptr;
    const long v = std::strtol(env, &end, 10);
    if (end != env && *end == '\0' && v > 0) return static_cast<std::size_t>(v);
    throw ConfigError("ALGREC_THREADS", std::string("expected a positive integer, got '") + env + "'");
  }
  return std::max(1u, std::thread::hardware_concurrency());
}

template <class R> struct Timed {
  R value;
  double seconds = 0;
};

/// Runs f(seed) for every seed on a pool of workers. Workers share nothing and
/// results come back in seed order, so output does not depend on scheduling.
template <class F>
auto map_seeds(const std::vector<std::uint64_t>& seeds, std::size_t threads, F f)
    -> std::vector<Timed<decltype(f(std::uint64_t{}))>> {
  using R = decltype(f(std::uint64_t{}));
  std::vector<std::optional<Timed<R>>> slots(seeds.size());
  std::vector<std::exception_ptr> errors(seeds.size());
  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    for (std::size_t i = next++; i < seeds.size(); i = next++) {
      try {
        const auto start = std::chrono::steady_clock::now();
        R value = f(seeds[i]);
        const std::chrono::duration<double> took = std::chrono::steady_clock::now() - start;
        slots[i] = Timed<R>{std::move(value), took.count()};
      } catch (...) {
        errors[i] = std::current_exception();
      }
    }
  };
  const std::size_t n = std::min(threads, seeds.size());
  std::vector<std::thread> pool;
  for (std::size_t t = 1; t < n; ++t) pool.emplace_back(worker);
  worker();
  for (auto& t : pool) t.join();
  for (auto& e : errors)
    if (e) std::rethrow_exception(e);
  std::vector<Timed<R>> out;
  for (auto& s : slots) out.push_back(std::move(*s));
  return out;
}

/// Collects data files and writes them together with manifest.json.
class RunWriter {
public:
  RunWriter(std::string command, std::string hash, fs::path dir)
      : command_(std::move(command)), hash_(std::move(hash)), dir_(std::move(dir)) {}

  std::vector<std::string> meta(std::optional<std::uint64_t> seed = std::nullopt) const {
    std::vector<std::string> m{"config_hash=" + hash_, "command=" + command_};
    if (seed) m.push_back("seed=" + std::to_string(*seed));
    return m;
  }

  /// A CSV or text body preceded by the metadata lines.
  std::string with_meta(const std::string& body, std::optional<std::uint64_t> seed = std::nullopt) const {
    std::string s;
    for (const auto& line : meta(seed)) s += "# " + line + "\n";
    return s + body;
  }

  void add(const std::string& name, std::string contents, std::optional<std::uint64_t> seed = std::nullopt) {
    files_.push_back({name, std::move(contents), seed});
  }

  void time_seed(std::uint64_t seed, double seconds) { seed_seconds_.emplace_back(seed, seconds); }

  void finish(const std::vector<std::uint64_t>& seeds, const std::string& config_text, int exit_code) {
    fs::create_directories(dir_);
    json files = json::array();
    std::map<std::uint64_t, json> per_seed;
    for (const auto& f : files_) {
      std::ofstream os(dir_ / f.name, std::ios::binary);
      os << f.contents;
      if (!os) throw std::runtime_error("cannot write " + (dir_ / f.name).string());
      files.push_back(f.name);
      if (f.seed) per_seed[*f.seed]["files"].push_back(f.name);
    }
    json runs = json::array();
    for (const auto& [seed, seconds] : seed_seconds_) {
      json r = per_seed.count(seed) ? per_seed[seed] : json::object();
      r["seed"] = seed;
      r["wall_seconds"] = seconds;
      if (!r.contains("files")) r["files"] = json::array();
      runs.push_back(r);
    }

    const std::time_t now = std::time(nullptr);
    char stamp[32];
    std::strftime(stamp, sizeof stamp, "%Y-%m-%dT%H:%M:%SZ", std::gmtime(&now));

    json m;
    m["tool"] = "algrec";
    m["command"] = command_;
    m["config_hash"] = hash_;
    m["config"] = config_text;
    m["seeds"] = seeds;
    m["module_versions"] = {{"group-core", kToolVersion},    {"walk-engine", kToolVersion},
                            {"semigroup-closure", kToolVersion}, {"lattice-geometry", kToolVersion},
                            {"free-analysis", kToolVersion}, {"experiment-cli", kToolVersion}};
    m["files"] = files;
    m["runs"] = runs;
    m["finished_utc"] = stamp;
    m["exit_code"] = exit_code;
    std::ofstream os(dir_ / "manifest.json");
    os << m.dump(2) << '\n';
  }

  const fs::path& dir() const { return dir_; }

private:
  struct File {
    std::string name;
    std::string contents;
    std::optional<std::uint64_t> seed;
  };
  std::string command_;
  std::string hash_;
  fs::path dir_;
  std::vector<File> files_;
  std::vector<std::pair<std::uint64_t, double>> seed_seconds_;
};

std::string seed_file(const std::string& stem, std::uint64_t seed, const std::string& ext) {
  return stem + "_seed" + std::to_string(seed) + ext;
}

ScenarioConfig load_scenario(const Globals& g, bool required, const std::string& command) {
  ScenarioConfig c;
  if (!g.config_path.empty())
    c = load_config(g.config_path);
  else if (required)
    throw ConfigError("--config", command + " needs a scenario file");
  if (!g.seeds.empty()) c.seeds = g.seeds;
  if (!g.out.empty()) c.out = g.out;
  return c;
}

// ---- walk ------------------------------------------------------------------

int cmd_walk(const ScenarioConfig& cfg, std::size_t threads, std::ostream& out) {
  const StepMeasure measure = build_measure(cfg);
  RunWriter w("walk", config_hash(cfg), cfg.out);
  auto runs = map_seeds(cfg.seeds, threads, [&](std::uint64_t seed) {
    const WalkTrace t = generate_walk(measure, cfg.steps, seed);
    return std::pair{serialize_trace(t, w.meta(seed)), positions_csv(t, w.meta(seed))};
  });
  for (std::size_t i = 0; i < runs.size(); ++i) {
    const auto seed = cfg.seeds[i];
    w.add(seed_file("trace", seed, ".txt"), runs[i].value.first, seed);
    w.add(seed_file("positions", seed, ".csv"), runs[i].value.second, seed);
    w.time_seed(seed, runs[i].seconds);
  }
  w.finish(cfg.seeds, canonical_text(cfg), kExitOk);
  out << "walk: " << cfg.seeds.size() << " trace(s) of " << cfg.steps << " steps in " << w.dir().string() << '\n';
  return kExitOk;
}

// ---- closure ---------------------------------------------------------------

int cmd_closure(const ScenarioConfig& cfg, std::size_t threads, std::ostream& out) {
  if (cfg.steps == 0) throw ConfigError("walk.steps", "closure needs at least one step");
  const StepMeasure measure = build_measure(cfg);
  RunWriter w("closure", config_hash(cfg), cfg.out);

  struct Result {
    std::string dump, report, row;
    bool exhausted;
  };
  auto runs = map_seeds(cfg.seeds, threads, [&](std::uint64_t seed) {
    const WalkTrace t = generate_walk(measure, cfg.steps, seed);
    const ClosureResult c = walk_closure(t, cfg.tail, cfg.steps, cfg.budget);
    const InverseWitnessReport r = inverse_witness_report(t, c);
    const Rational cov = coverage_fraction(c, cfg.coverage_radius);
    std::ostringstream row;
    row << seed << ',' << c.elements.size() << ',' << (c.exhausted ? "true" : "false") << ','
        << c.products_performed << ',' << r.present << ',' << r.within_radius << ',' << r.entries.size() << ','
        << to_string(cov) << ',' << decimal(cov) << '\n';
    return Result{closure_dump(c, w.meta(seed)), report_csv(r, w.meta(seed)), row.str(), c.exhausted};
  });

  std::string summary = "seed,elements,exhausted,products,present,inverses_within_radius,entries,coverage_exact,coverage\n";
  bool all_exhausted = true;
  for (std::size_t i = 0; i < runs.size(); ++i) {
    const auto seed = cfg.seeds[i];
    w.add(seed_file("closure", seed, ".txt"), runs[i].value.dump, seed);
    w.add(seed_file("inverse_report", seed, ".csv"), runs[i].value.report, seed);
    w.time_seed(seed, runs[i].seconds);
    summary += runs[i].value.row;
    all_exhausted = all_exhausted && runs[i].value.exhausted;
  }
  w.add("closure_summary.csv", w.with_meta(summary));

  const int code = (cfg.require_exhausted && !all_exhausted) ? kExitBudget : kExitOk;
  w.finish(cfg.seeds, canonical_text(cfg), code);
  out << "closure: " << runs.size() << " seed(s), " << (all_exhausted ? "all exhausted" : "budget hit") << '\n';
  return code;
}

// ---- ar-estimate -------------------------------------------------------------

int cmd_ar_estimate(const ScenarioConfig& cfg, std::size_t threads, std::ostream& out) {
  if (cfg.steps == 0) throw ConfigError("walk.steps", "ar-estimate needs at least one step");
  const StepMeasure measure = build_measure(cfg);
  const std::vector<std::size_t> checkpoints = cfg.checkpoints.empty() ? std::vector{cfg.steps} : cfg.checkpoints;
  RunWriter w("ar-estimate", config_hash(cfg), cfg.out);

  struct Point {
    Rational coverage;
    double present, present_within;
    bool exhausted;
  };
  auto runs = map_seeds(cfg.seeds, threads, [&](std::uint64_t seed) {
    const WalkTrace t = generate_walk(measure, cfg.steps, seed);
    std::vector<Point> points;
    for (std::size_t n_used : checkpoints) {
      const ClosureResult c = walk_closure(t, cfg.tail, n_used, cfg.budget);
      const InverseWitnessReport r = inverse_witness_report(t, c);
      points.push_back({coverage_fraction(c, cfg.coverage_radius), r.present_fraction(),
                        r.present_fraction_within_radius(), c.exhausted});
    }
    return points;
  });

  std::string rows = "seed,N_used,coverage,coverage_exact,present_fraction,present_fraction_within_radius,exhausted\n";
  bool all_exhausted = true;
  for (std::size_t i = 0; i < runs.size(); ++i) {
    w.time_seed(cfg.seeds[i], runs[i].seconds);
    for (std::size_t k = 0; k < checkpoints.size(); ++k) {
      const Point& p = runs[i].value[k];
      rows += std::to_string(cfg.seeds[i]) + ',' + std::to_string(checkpoints[k]) + ',' + decimal(p.coverage) + ',' +
              to_string(p.coverage) + ',' + fmt(p.present) + ',' + fmt(p.present_within) + ',' +
              (p.exhausted ? "true" : "false") + '\n';
      all_exhausted = all_exhausted && p.exhausted;
    }
  }
  w.add("ar_estimate.csv", w.with_meta(rows));

  std::string summary = "N_used,seeds,mean_coverage,full_coverage_seeds,mean_present_fraction,"
                        "mean_present_fraction_within_radius,exhausted_seeds\n";
  for (std::size_t k = 0; k < checkpoints.size(); ++k) {
    Rational total = 0;
    double present = 0, within = 0;
    std::size_t full = 0, exhausted = 0;
    for (const auto& r : runs) {
      const Point& p = r.value[k];
      total += p.coverage;
      present += p.present;
      within += p.present_within;
      full += p.coverage == 1 ? 1 : 0;
      exhausted += p.exhausted ? 1 : 0;
    }
    const double n = static_cast<double>(runs.size());
    const Rational mean = total / static_cast<long long>(runs.size());
    summary += std::to_string(checkpoints[k]) + ',' + std::to_string(runs.size()) + ',' + decimal(mean) + ',' +
               std::to_string(full) + ',' + fmt(present / n) + ',' + fmt(within / n) + ',' +
               std::to_string(exhausted) + '\n';
    out << "ar-estimate N=" << checkpoints[k] << ": mean coverage at r=" << cfg.coverage_radius << " is "
        << decimal(mean) << ", full in " << full << "/" << runs.size() << " seeds\n";
  }
  w.add("ar_summary.csv", w.with_meta(summary));

  const int code = (cfg.require_exhausted && !all_exhausted) ? kExitBudget : kExitOk;
  w.finish(cfg.seeds, canonical_text(cfg), code);
  return code;
}

// ---- lattice-classify --------------------------------------------------------

int cmd_lattice_classify(const std::string& path, const std::string& out_dir, std::ostream& out) {
  std::ifstream in(path);
  if (!in) throw ConfigError("FILE", "cannot open '" + path + "'");
  std::ostringstream buf;
  buf << in.rdbuf();
  const std::string text = buf.str();

  std::vector<IntVec> rows;
  try {
    rows = parse_integer_rows(text);
  } catch (const std::exception& e) {
    throw ConfigError("FILE", e.what());
  }
  if (rows.empty()) throw ConfigError("FILE", "no vectors in '" + path + "'");

  SubsemigroupClass cls;
  ConeWitness witness;
  try {
    cls = classify_subsemigroup(rows);
    witness = zero_in_convex_hull(rows);
  } catch (const std::invalid_argument& e) {
    throw ConfigError("FILE", e.what());
  }
  const LatticeBasisReport basis = subgroup_index(rows);

  RunWriter w("lattice-classify", fnv1a_hex(text), out_dir.empty() ? "out" : out_dir);
  std::ostringstream report;
  report << "class=" << to_string(cls) << '\n';
  report << "dimension=" << basis.dimension << "\nrank=" << basis.rank << '\n';
  report << "index=" << (basis.index ? basis.index->str() : std::string("infinite")) << '\n';
  report << "smith_diagonal=" << format_vector(basis.smith_diagonal) << '\n';
  report << "witness=" << to_string(witness) << '\n';
  w.add("lattice_report.txt", w.with_meta(report.str()));
  w.finish({}, text, kExitOk);
  out << to_string(cls) << '\n';
  return kExitOk;
}

// ---- free-stats ----------------------------------------------------------------

int cmd_free_stats(const ScenarioConfig& cfg, std::size_t threads, std::ostream& out) {
  if (cfg.group.kind() != GroupKind::Free)
    throw ConfigError("group.kind", "free-stats needs a free group, got " + cfg.group.to_string());
  if (cfg.steps == 0) throw ConfigError("walk.steps", "free-stats needs at least one step");
  const int d = cfg.group.rank();
  const StepMeasure measure = build_measure(cfg);
  ClosureBudget growth_budget = cfg.budget;
  growth_budget.radius = cfg.free.growth_radius;
  RunWriter w("free-stats", config_hash(cfg), cfg.out);

  struct Result {
    PrefixStats prefix;
    LogBoundResult bound;
    std::size_t smallest_j0;
    ReflectedWalkStats reflected;
    CancellationResult cancellation;
    GrowthProfile growth;
    bool growth_exhausted;
  };
  auto runs = map_seeds(cfg.seeds, threads, [&](std::uint64_t seed) {
    const WalkTrace t = generate_walk(measure, cfg.steps, seed);
    Result r;
    r.prefix = prefix_counts(t);
    r.prefix.j0 = cfg.free.j0;
    r.bound = log_bound_check(r.prefix, cfg.free.j0);
    r.smallest_j0 = smallest_passing_threshold(r.prefix);
    r.reflected = reflected_biased_walk(d, cfg.free.reflected_steps, seed, cfg.free.settle_margin);
    const auto pool = random_word_pool(cfg.group, cfg.free.pool_size, cfg.free.pool_length,
                                       seed + 0x9e3779b97f4a7c15ULL);
    r.cancellation = cancellation_experiment(d, cfg.free.lengths, cfg.free.trials, pool, seed);
    const ClosureResult c = walk_closure(t, cfg.tail, cfg.steps, growth_budget);
    r.growth = sphere_growth_profile(c);
    r.growth_exhausted = c.exhausted;
    return r;
  });

  const Rational closed_form = return_probability(d);
  const Rational level = level_return_probability(d);
  std::string cancel_rows = "seed,s,trials,exceedances,empirical_exceedance,bound,ratio_to_bound,max_cancel\n";
  std::string return_rows = "seed,d,closed_form,closed_form_decimal,level_return,monte_carlo,departures,"
                            "mean_visits,fitted_p\n";
  std::string summary = "seed,max_depth,log_bound_holds,first_violation,smallest_passing_j0,monte_carlo_return,"
                        "mean_visits,growth_slope,below_4^r,growth_exhausted\n";
  double sum_mc = 0, sum_visits = 0, sum_slope = 0;
  std::size_t holds = 0, below = 0, exhausted = 0;
  for (std::size_t i = 0; i < runs.size(); ++i) {
    const auto seed = cfg.seeds[i];
    const Result& r = runs[i].value;
    w.time_seed(seed, runs[i].seconds);
    w.add(seed_file("prefix", seed, ".csv"), prefix_csv(r.prefix, w.meta(seed)), seed);
    w.add(seed_file("growth", seed, ".csv"), growth_csv(r.growth, w.meta(seed)), seed);
    for (const auto& row : r.cancellation.rows)
      cancel_rows += std::to_string(seed) + ',' + std::to_string(row.length) + ',' + std::to_string(row.trials) + ',' +
                     std::to_string(row.exceedances) + ',' + fmt(row.empirical) + ',' + fmt(row.bound) + ',' +
                     fmt(row.empirical / row.bound) + ',' + std::to_string(row.max_cancel) + '\n';
    return_rows += std::to_string(seed) + ',' + std::to_string(d) + ',' + to_string(closed_form) + ',' +
                   decimal(closed_form) + ',' + to_string(level) + ',' + fmt(r.reflected.return_frequency) + ',' +
                   std::to_string(r.reflected.departures) + ',' + fmt(r.reflected.mean_visits) + ',' +
                   fmt(r.reflected.fitted_p) + '\n';
    summary += std::to_string(seed) + ',' + std::to_string(r.prefix.max_depth()) + ',' +
               (r.bound.holds ? "true" : "false") + ',' +
               (r.bound.first_violation ? std::to_string(*r.bound.first_violation) : std::string()) + ',' +
               std::to_string(r.smallest_j0) + ',' + fmt(r.reflected.return_frequency) + ',' +
               fmt(r.reflected.mean_visits) + ',' + fmt(r.growth.slope) + ',' +
               (r.growth.below_four_power ? "true" : "false") + ',' + (r.growth_exhausted ? "true" : "false") + '\n';
    sum_mc += r.reflected.return_frequency;
    sum_visits += r.reflected.mean_visits;
    sum_slope += r.growth.slope;
    holds += r.bound.holds ? 1 : 0;
    below += r.growth.below_four_power ? 1 : 0;
    exhausted += r.growth_exhausted ? 1 : 0;
    out << "return probability d=" << d << " seed=" << seed << ": closed form " << to_string(closed_form) << " ("
        << decimal(closed_form) << "), monte carlo " << fmt(r.reflected.return_frequency) << " over "
        << r.reflected.departures << " excursions, level return 1/d = " << decimal(level) << '\n';
  }
  const double n = static_cast<double>(runs.size());
  summary += "all,," + std::to_string(holds) + "/" + std::to_string(runs.size()) + ",,," + fmt(sum_mc / n) + ',' +
             fmt(sum_visits / n) + ',' + fmt(sum_slope / n) + ',' + std::to_string(below) + "/" +
             std::to_string(runs.size()) + ',' + std::to_string(exhausted) + "/" + std::to_string(runs.size()) + '\n';
  w.add("cancellation.csv", w.with_meta(cancel_rows));
  w.add("return_probability.csv", w.with_meta(return_rows));
  w.add("free_summary.csv", w.with_meta(summary));

  const int code = (cfg.require_exhausted && exhausted < runs.size()) ? kExitBudget : kExitOk;
  w.finish(cfg.seeds, canonical_text(cfg), code);
  return code;
}

// ---- identity checks ---------------------------------------------------------

int cmd_nilpotent_check(const ScenarioConfig& cfg, std::ostream& out) {
  const auto& id = cfg.identities;
  RunWriter w("nilpotent-check", config_hash(cfg), cfg.out);
  std::string rows = "n,m,cases,holding\n";
  std::size_t total = 0, good = 0;
  for (int n = 1; n <= id.nm_max; ++n)
    for (int m = 1; m <= id.nm_max; ++m) {
      std::size_t cases = 0, ok = 0;
      for (int k1 = -id.k_range; k1 <= id.k_range; ++k1)
        for (int k2 = -id.k_range; k2 <= id.k_range; ++k2)
          for (int k3 = -id.k_range; k3 <= id.k_range; ++k3)
            for (int k4 = -id.k_range; k4 <= id.k_range; ++k4) {
              ++cases;
              ok += nilpotent_identity_check(k1, k2, k3, k4, n, m).holds ? 1 : 0;
            }
      rows += std::to_string(n) + ',' + std::to_string(m) + ',' + std::to_string(cases) + ',' + std::to_string(ok) + '\n';
      total += cases;
      good += ok;
    }
  w.add("nilpotent_check.csv", w.with_meta(rows));
  const int code = good == total ? kExitOk : kExitCheckFailed;
  w.finish({}, canonical_text(cfg), code);
  out << "nilpotent identity: " << good << "/" << total << " cases hold\n";
  return code;
}

int cmd_witness_check(const ScenarioConfig& cfg, std::ostream& out) {
  const auto& id = cfg.identities;
  RunWriter w("witness-check", config_hash(cfg), cfg.out);
  std::string rows = "family,parameter,cases,passed\n";
  std::size_t total = 0, good = 0;
  auto record = [&](const std::string& family, const std::string& param, std::size_t cases, std::size_t passed) {
    rows += family + ',' + param + ',' + std::to_string(cases) + ',' + std::to_string(passed) + '\n';
    total += cases;
    good += passed;
  };

  // -x as a nonnegative combination of x and an opposite-signed y
  for (int sign : {1, -1}) {
    std::size_t cases = 0, passed = 0;
    for (std::int64_t x = 1; x <= id.z_max; ++x)
      for (std::int64_t y = 1; y <= id.z_max; ++y) {
        const std::int64_t sx = sign * x, sy = -sign * y;
        const auto c = z_inverse_witness(sx, sy);
        ++cases;
        passed += (c.copies_of_y >= 0 && c.copies_of_x >= 0 && c.copies_of_y * sy + c.copies_of_x * sx == -sx) ? 1 : 0;
      }
    record("z_inverse", sign > 0 ? "x>0" : "x<0", cases, passed);
  }

  // Y (XY)^(k-1) = X^-1 in Z/m
  for (std::int64_t m = 1; m <= id.m_max; ++m) {
    const auto g = GroupDescriptor::cyclic(m);
    std::size_t cases = 0, passed = 0;
    for (std::int64_t a = 0; a < m; ++a)
      for (std::int64_t b = 0; b < m; ++b) {
        const auto x = GroupElement::residue(g, a), y = GroupElement::residue(g, b);
        const auto wit = torsion_inverse_witness(x, y, m);
        ++cases;
        passed += (wit && wit->witness == invert(x)) ? 1 : 0;
      }
    record("torsion_cyclic", "m=" + std::to_string(m), cases, passed);
  }

  // Lamplighter: pos(Y) = -pos(X), so XY lies in the torsion kernel of pos
  {
    std::size_t cases = 0, passed = 0;
    for (std::int64_t x = -3; x <= 3; ++x)
      for (unsigned f = 0; f < 32; ++f)
        for (unsigned h = 0; h < 32; ++h) {
          std::vector<std::int64_t> lf, lh;
          for (int bit = 0; bit < 5; ++bit) {
            if (f >> bit & 1u) lf.push_back(bit - 2);
            if (h >> bit & 1u) lh.push_back(bit - 2);
          }
          const auto X = GroupElement::lamplighter(x, lf), Y = GroupElement::lamplighter(-x, lh);
          const auto wit = torsion_inverse_witness(X, Y, 2);
          ++cases;
          passed += (wit && wit->witness == invert(X)) ? 1 : 0;
        }
    record("torsion_lamplighter", "x in [-3,3]", cases, passed);
  }

  w.add("witness_check.csv", w.with_meta(rows));
  const int code = good == total ? kExitOk : kExitCheckFailed;
  w.finish({}, canonical_text(cfg), code);
  out << "witness identities: " << good << "/" << total << " cases hold\n";
  return code;
}

} // namespace

int run_cli(int argc, char** argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Random walks and truncated semigroup closures on finitely generated groups", "algrec"};
  app.fallthrough();
  app.require_subcommand(1);
  Globals g;
  app.add_option("--config", g.config_path, "Scenario file (INI)");
  app.add_option("--seed", g.seeds, "Seed, repeatable; overrides [run] seeds");
  app.add_option("--out", g.out, "Output directory; overrides [run] out");
  app.add_option("--threads", g.threads, "Worker threads (default: ALGREC_THREADS or all cores)")
      ->check(CLI::PositiveNumber);

  auto* walk = app.add_subcommand("walk", "Generate seeded walk traces");
  auto* closure_cmd = app.add_subcommand("closure", "Closure of a walk tail and inverse-witness report");
  auto* ar = app.add_subcommand("ar-estimate", "Ball coverage of tail closures over prefix lengths");
  auto* lattice = app.add_subcommand("lattice-classify", "Classify the subsemigroup of Z^d spanned by vectors");
  std::string lattice_file;
  lattice->add_option("file", lattice_file, "One integer vector per line")->required();
  auto* free_stats = app.add_subcommand("free-stats", "Prefix, return, cancellation and growth statistics");
  std::optional<int> free_d;
  std::optional<std::size_t> free_steps, free_trials;
  free_stats->add_option("--d", free_d, "Free group rank");
  free_stats->add_option("--steps", free_steps, "Walk length");
  free_stats->add_option("--trials", free_trials, "Cancellation trials per length");
  auto* nilpotent = app.add_subcommand("nilpotent-check", "Exact Heisenberg commutator identity grid");
  auto* witness = app.add_subcommand("witness-check", "Exact inverse-witness identity grids");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitConfig;
  }

  try {
    const std::size_t threads = resolve_threads(g.threads);
    if (*walk) {
      auto cfg = load_scenario(g, true, "walk");
      validate_config(cfg);
      return cmd_walk(cfg, threads, out);
    }
    if (*closure_cmd) {
      auto cfg = load_scenario(g, true, "closure");
      validate_config(cfg);
      return cmd_closure(cfg, threads, out);
    }
    if (*ar) {
      auto cfg = load_scenario(g, true, "ar-estimate");
      validate_config(cfg);
      return cmd_ar_estimate(cfg, threads, out);
    }
    if (*lattice) return cmd_lattice_classify(lattice_file, g.out, out);
    if (*free_stats) {
      auto cfg = load_scenario(g, false, "free-stats");
      if (g.config_path.empty()) cfg.group = GroupDescriptor::free(5);
      if (free_d) {
        try {
          cfg.group = GroupDescriptor::free(*free_d);
        } catch (const std::exception& e) {
          throw ConfigError("--d", e.what());
        }
      }
      if (free_steps) cfg.steps = *free_steps;
      if (free_trials) cfg.free.trials = *free_trials;
      validate_config(cfg);
      return cmd_free_stats(cfg, threads, out);
    }
    if (*nilpotent) {
      auto cfg = load_scenario(g, false, "nilpotent-check");
      validate_config(cfg);
      return cmd_nilpotent_check(cfg, out);
    }
    if (*witness) {
      auto cfg = load_scenario(g, false, "witness-check");
      validate_config(cfg);
      return cmd_witness_check(cfg, out);
    }
  } catch (const ConfigError& e) {
    err << "error: " << e.what() << '\n';
    return kExitConfig;
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << '\n';
    return kExitConfig;
  }
  return kExitConfig;
}

} // namespace algrec
