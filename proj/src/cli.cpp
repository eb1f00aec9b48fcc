#include "boxed_bertrand/cli.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <algorithm>
#include <cmath>
#include <fstream>
#include <iomanip>
#include <memory>
#include <numbers>
#include <sstream>

#include "boxed_bertrand/chord_census.hpp"
#include "boxed_bertrand/continuum.hpp"
#include "boxed_bertrand/errors.hpp"
#include "boxed_bertrand/full_chord.hpp"
#include "boxed_bertrand/grid_circle.hpp"
#include "boxed_bertrand/lattice.hpp"

namespace boxed_bertrand::cli {
namespace {

using nlohmann::ordered_json;

constexpr int kRatioDigits = 25;

struct Config {
  unsigned threads = 0;
  std::string output;
  std::string format;

  // circle / census / fullchords / arcs
  std::int64_t n = 0;
  std::vector<std::int64_t> n_list;
  std::string threshold = "3/1";
  std::string mode = "fast";
  std::string denominator = "full";
  bool force = false;

  // mc
  int solution = 1;
  std::uint64_t samples = 1000000;
  std::uint64_t seed = 0;
  double apex_angle = 0.0;

  // integral
  double tol = 1e-10;
  int subdivisions = 1;

  // fullchords
  std::int64_t cap = kDefaultFullChordCap;
  std::vector<std::int64_t> dump;

  // arcs
  double alpha = 0.0;
  double beta = std::numbers::pi / 3.0;
  std::string filter = "all";
  std::size_t bins = 0;
};

std::string fixed(double v, int digits = 17) {
  std::ostringstream os;
  os << std::setprecision(digits) << v;
  return os.str();
}

std::string threshold_text(const Threshold& t) {
  return std::to_string(t.p()) + "/" + std::to_string(t.q());
}

// Writes to --output when given, otherwise to the command stream.
class Sink {
 public:
  Sink(const std::string& path, std::ostream& fallback) : stream_(&fallback) {
    if (!path.empty()) {
      file_ = std::make_unique<std::ofstream>(path, std::ios::trunc);
      if (!*file_) throw InvalidArgument("cannot open output file '" + path + "'");
      stream_ = file_.get();
    }
  }
  std::ostream& get() { return *stream_; }

 private:
  std::unique_ptr<std::ofstream> file_;
  std::ostream* stream_;
};

int cmd_circle(const Config& cfg, std::ostream& out, std::ostream& err) {
  if (cfg.n < 1) throw InvalidArgument("--n must be >= 1");
  const CircleRing ring = enumerate_circle(cfg.n);
  const std::int64_t formula = circle_size_formula(cfg.n);
  const std::int64_t r2n = r2_of_square(static_cast<std::uint64_t>(cfg.n));
  const auto size = static_cast<std::int64_t>(ring.size());
  const auto vertical = static_cast<std::int64_t>(ring.count_vertical());
  const auto horizontal = static_cast<std::int64_t>(ring.count_horizontal());
  const auto vertex = static_cast<std::int64_t>(ring.count_enters_at_vertex());
  const auto scanned = static_cast<std::int64_t>(scan_circle_columns(cfg.n).size());
  const bool formula_ok = size == formula && scanned == size;
  const bool classes_ok = vertical == 4 * cfg.n && horizontal == 4 * cfg.n && vertex == r2n;

  Sink sink(cfg.output, out);
  if (cfg.format == "json") {
    ordered_json doc;
    doc["n"] = cfg.n;
    doc["size"] = size;
    doc["formula"] = formula;
    doc["formula_check"] = formula_ok ? "PASS" : "FAIL";
    doc["counts"] = {{"vertical", vertical},
                     {"horizontal", horizontal},
                     {"enters_at_vertex", vertex},
                     {"r2_n_squared", r2n}};
    doc["class_check"] = classes_ok ? "PASS" : "FAIL";
    ordered_json boxes = ordered_json::array();
    for (const auto& e : ring.entries()) {
      boxes.push_back({{"i", e.box.i()},
                       {"j", e.box.j()},
                       {"angle_entry", e.entry_angle},
                       {"vertical", e.vertical},
                       {"horizontal", e.horizontal},
                       {"enters_at_vertex", e.enters_at_vertex},
                       {"exceptional", is_exceptional(e.box)}});
    }
    doc["boxes"] = std::move(boxes);
    sink.get() << doc.dump(2) << '\n';
  } else {
    write_ring_csv(sink.get(), ring);
  }
  err << "circle n=" << cfg.n << " size=" << size << " vertical=" << vertical
      << " horizontal=" << horizontal << " enters_at_vertex=" << vertex << " (4n=" << 4 * cfg.n
      << ", r2(n^2)=" << r2n << ") formula=" << formula
      << " formula_check=" << (formula_ok ? "PASS" : "FAIL")
      << " class_check=" << (classes_ok ? "PASS" : "FAIL") << '\n';
  return formula_ok && classes_ok ? kOk : kInternal;
}

int cmd_census(const Config& cfg, std::ostream& out, std::ostream& err) {
  if (cfg.n_list.empty()) throw InvalidArgument("--n needs at least one value");
  for (const auto n : cfg.n_list) {
    if (n < 1) throw InvalidArgument("--n values must be >= 1");
  }
  if (!std::is_sorted(cfg.n_list.begin(), cfg.n_list.end())) {
    throw InvalidArgument("--n values must be ascending");
  }
  const Threshold t = parse_threshold(cfg.threshold);
  const CensusMode mode = cfg.mode == "naive" ? CensusMode::kNaive : CensusMode::kFast;
  if (mode == CensusMode::kNaive && cfg.n_list.back() > kNaiveLimit && !cfg.force) {
    const double size = 8.0 * static_cast<double>(cfg.n_list.back());
    err << "refusing naive census at n=" << cfg.n_list.back() << ": about " << std::scientific
        << size * size << std::defaultfloat
        << " predicate evaluations; use --mode fast or pass --force\n";
    return kUsage;
  }
  const bool offdiag = cfg.denominator == "offdiag";
  const Decimal target = closed_form_target();

  CountOptions options;
  options.threads = cfg.threads;
  std::vector<ChordCensus> rows;
  for (const auto n : cfg.n_list) rows.push_back(bertrand_ratio(n, t, mode, options));

  auto ratio_of = [&](const ChordCensus& c) { return offdiag ? c.ratio_offdiag : c.ratio; };
  Sink sink(cfg.output, out);
  if (cfg.format == "json") {
    ordered_json doc;
    doc["threshold"] = threshold_text(t);
    doc["mode"] = cfg.mode;
    doc["denominator"] = offdiag ? "offdiag" : "full";
    doc["target"] = t.is_default() ? ordered_json(to_string(target, kRatioDigits)) : ordered_json();
    ordered_json arr = ordered_json::array();
    for (const auto& c : rows) {
      ordered_json row;
      row["n"] = c.n;
      row["circle_size"] = c.circle_size;
      row["long_pairs"] = to_string(c.long_pairs);
      row["total_pairs"] = to_string(c.total_pairs);
      row["ratio"] = to_string(ratio_of(c), kRatioDigits);
      row["error"] = t.is_default() ? ordered_json(to_string(ratio_of(c) - target, kRatioDigits))
                                    : ordered_json();
      arr.push_back(std::move(row));
    }
    doc["rows"] = std::move(arr);
    sink.get() << doc.dump(2) << '\n';
  } else {
    std::ostream& os = sink.get();
    os << "n,circle_size,long_pairs,ratio,error\n";
    for (const auto& c : rows) {
      os << c.n << ',' << c.circle_size << ',' << to_string(c.long_pairs) << ','
         << to_string(ratio_of(c), kRatioDigits) << ',';
      if (t.is_default()) os << to_string(ratio_of(c) - target, kRatioDigits);
      os << '\n';
    }
  }
  if (t.is_default()) err << "target=" << to_string(target, kRatioDigits) << '\n';
  return kOk;
}

int cmd_mc(const Config& cfg, std::ostream& out, std::ostream&) {
  SimOptions options;
  options.threads = cfg.threads;
  options.apex_angle = cfg.apex_angle;
  const SimEstimate est = simulate_solution(cfg.solution, cfg.samples, cfg.seed, options);
  Sink sink(cfg.output, out);
  if (cfg.format == "csv") {
    sink.get() << "id,samples,seed,estimate,std_error,analytic\n"
               << est.solution_id << ',' << est.samples << ',' << est.seed << ','
               << fixed(est.estimate) << ',' << fixed(est.std_error) << ','
               << fixed(analytic_solution_value(cfg.solution)) << '\n';
  } else {
    ordered_json doc;
    doc["id"] = est.solution_id;
    doc["samples"] = est.samples;
    doc["seed"] = est.seed;
    doc["estimate"] = est.estimate;
    doc["std_error"] = est.std_error;
    doc["hits"] = est.hits;
    doc["analytic"] = analytic_solution_value(cfg.solution);
    doc["rng"] = est.rng;
    sink.get() << doc.dump(2) << '\n';
  }
  return kOk;
}

int cmd_integral(const Config& cfg, std::ostream& out, std::ostream&) {
  const QuadratureResult q = referee_integral(cfg.tol, cfg.subdivisions);
  const Decimal closed = closed_form_target();
  Sink sink(cfg.output, out);
  if (cfg.format == "json") {
    ordered_json doc;
    doc["value"] = fixed(q.value, 17);
    doc["error_estimate"] = q.error_estimate;
    doc["order"] = q.order;
    doc["cells"] = q.cells;
    doc["closed_form"] = to_string(closed, kRatioDigits);
    doc["reference_digits"] = kIntegralReferenceDigits;
    sink.get() << doc.dump(2) << '\n';
  } else {
    sink.get() << fixed(q.value, 17) << '\n'
               << "error_estimate " << q.error_estimate << '\n'
               << "order " << q.order << " cells " << q.cells << '\n'
               << "closed_form " << to_string(closed, kRatioDigits) << '\n';
  }
  return kOk;
}

int cmd_fullchords(const Config& cfg, std::ostream& out, std::ostream& err) {
  if (cfg.n < 1) throw InvalidArgument("--n must be >= 1");
  Sink sink(cfg.output, out);
  if (!cfg.dump.empty()) {
    if (cfg.dump.size() != 4) throw InvalidArgument("--dump expects i1,j1,i2,j2");
    const FullChord chord = full_chord(GridBox(cfg.dump[0], cfg.dump[1], cfg.n),
                                       GridBox(cfg.dump[2], cfg.dump[3], cfg.n));
    write_full_chord_csv(sink.get(), chord);
    return kOk;
  }
  const FullChordCount count = count_distinct_full_chords(cfg.n, cfg.cap, cfg.threads);
  ordered_json doc;
  doc["n"] = count.n;
  doc["distinct"] = count.distinct;
  doc["pairs"] = count.unordered_pairs;
  doc["ratio"] = count.ratio;
  sink.get() << doc.dump(2) << '\n';
  err << "full chords n=" << count.n << " distinct=" << count.distinct
      << " pairs=" << count.unordered_pairs << " ratio=" << fixed(count.ratio, 8) << '\n';
  return kOk;
}

int cmd_arcs(const Config& cfg, std::ostream& out, std::ostream&) {
  if (cfg.n < 1) throw InvalidArgument("--n must be >= 1");
  const CircleRing ring = enumerate_circle(cfg.n);
  Sink sink(cfg.output, out);
  if (cfg.bins > 0) {
    const auto hist = angular_histogram(ring, cfg.bins);
    if (cfg.format == "csv") {
      sink.get() << "bin,lo,hi,count,expected\n";
      for (const auto& b : hist) {
        sink.get() << b.bin << ',' << fixed(b.lo) << ',' << fixed(b.hi) << ',' << b.count << ','
                   << fixed(b.expected) << '\n';
      }
    } else {
      ordered_json arr = ordered_json::array();
      for (const auto& b : hist) {
        arr.push_back({{"bin", b.bin},
                       {"lo", b.lo},
                       {"hi", b.hi},
                       {"count", b.count},
                       {"expected", b.expected}});
      }
      sink.get() << ordered_json{{"n", cfg.n}, {"circle_size", ring.size()}, {"bins", arr}}.dump(2)
                 << '\n';
    }
    return kOk;
  }

  ArcFilter filter = ArcFilter::kAll;
  if (cfg.filter == "vertical") filter = ArcFilter::kVertical;
  if (cfg.filter == "horizontal") filter = ArcFilter::kHorizontal;
  const ArcSpec arc{cfg.alpha, cfg.beta};
  const std::int64_t count = arc_count(ring, arc, filter);
  const double ratio = static_cast<double>(count) / static_cast<double>(ring.size());
  const double reference = density_mass(cfg.alpha, cfg.beta);
  if (cfg.format == "csv") {
    sink.get() << "n,alpha,beta,filter,count,circle_size,ratio,reference\n"
               << cfg.n << ',' << fixed(cfg.alpha) << ',' << fixed(cfg.beta) << ',' << cfg.filter
               << ',' << count << ',' << ring.size() << ',' << fixed(ratio) << ','
               << fixed(reference) << '\n';
  } else {
    ordered_json doc;
    doc["n"] = cfg.n;
    doc["alpha"] = cfg.alpha;
    doc["beta"] = cfg.beta;
    doc["filter"] = cfg.filter;
    doc["count"] = count;
    doc["circle_size"] = ring.size();
    doc["ratio"] = ratio;
    // Limiting share of the arc under the angular density (all boxes only).
    doc["reference"] = filter == ArcFilter::kAll ? ordered_json(reference) : ordered_json();
    sink.get() << doc.dump(2) << '\n';
  }
  return kOk;
}

int cmd_constants(const Config& cfg, std::ostream& out, std::ostream&) {
  const auto table = constant_table();
  Sink sink(cfg.output, out);
  if (cfg.format == "json") {
    ordered_json doc = ordered_json::object();
    for (const auto& c : table) {
      doc[c.name] = {{"value", to_string(c.value, 30)}, {"note", c.note}};
    }
    sink.get() << doc.dump(2) << '\n';
  } else {
    std::size_t width = 0;
    for (const auto& c : table) width = std::max(width, c.name.size());
    for (const auto& c : table) {
      sink.get() << std::left << std::setw(static_cast<int>(width) + 2) << c.name
                 << std::setw(34) << to_string(c.value, 30) << c.note << '\n';
    }
  }
  return kOk;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  Config cfg;
  CLI::App app{"Discrete Bertrand chord experiments on the box circle C(n)", "boxed-bertrand"};
  app.require_subcommand(1);
  app.add_option("--threads", cfg.threads,
                 "worker cap (default: $BOXED_BERTRAND_THREADS or all cores)");

  auto add_output = [&](CLI::App* sub, const std::string& default_format,
                        const std::vector<std::string>& formats) {
    cfg.format = default_format;
    sub->add_option("--format", cfg.format, "output format")
        ->check(CLI::IsMember(formats))
        ->capture_default_str();
    sub->add_option("--output,-o", cfg.output, "write data here instead of stdout");
    sub->add_option("--threads", cfg.threads, "worker cap");
  };

  auto* circle = app.add_subcommand("circle", "enumerate and classify C(n)");
  circle->add_option("--n", cfg.n, "grid resolution")->required();

  auto* census = app.add_subcommand("census", "count long chord pairs |Ch(n)|");
  census->add_option("--n", cfg.n_list, "resolutions, comma separated")
      ->required()
      ->delimiter(',');
  census->add_option("--threshold", cfg.threshold, "squared length cutoff p/q")
      ->capture_default_str();
  census->add_option("--mode", cfg.mode, "counter")
      ->check(CLI::IsMember({"naive", "fast"}))
      ->capture_default_str();
  census->add_option("--denominator", cfg.denominator, "full = |C|^2, offdiag = |C|^2-|C|")
      ->check(CLI::IsMember({"full", "offdiag"}))
      ->capture_default_str();
  census->add_flag("--force", cfg.force, "allow naive mode above n=512");

  auto* mc = app.add_subcommand("mc", "Monte Carlo estimate of a classical solution");
  mc->add_option("--solution", cfg.solution, "solution id 1..5")
      ->required()
      ->check(CLI::Range(1, 5));
  mc->add_option("--samples", cfg.samples, "sample count")->capture_default_str();
  mc->add_option("--seed", cfg.seed, "64-bit seed")->capture_default_str();
  mc->add_option("--apex-angle", cfg.apex_angle, "angle of the fixed point a (solutions 4, 5)");

  auto* integral = app.add_subcommand("integral", "quadrature of the antipodal density integral");
  integral->add_option("--tol", cfg.tol, "target absolute error (>= 1e-12)")
      ->capture_default_str();
  integral->add_option("--subdivisions", cfg.subdivisions, "split every smooth cell this many times");

  auto* fullchords = app.add_subcommand("fullchords", "distinct full chords of C(n)");
  fullchords->add_option("--n", cfg.n, "grid resolution")->required();
  fullchords->add_option("--cap", cfg.cap, "largest n accepted")->capture_default_str();
  fullchords->add_option("--dump", cfg.dump, "emit one full chord: i1,j1,i2,j2")->delimiter(',');

  auto* arcs = app.add_subcommand("arcs", "boxes of C(n) meeting an open arc");
  arcs->add_option("--n", cfg.n, "grid resolution")->default_val(4096);
  arcs->add_option("--alpha", cfg.alpha, "arc start (radians)");
  arcs->add_option("--beta", cfg.beta, "arc end (radians)");
  arcs->add_option("--filter", cfg.filter, "box subset")
      ->check(CLI::IsMember({"all", "vertical", "horizontal"}))
      ->capture_default_str();
  arcs->add_option("--bins", cfg.bins, "emit an angular histogram with this many bins instead");

  auto* constants = app.add_subcommand("constants", "reference constants");

  add_output(circle, "csv", {"csv", "json"});
  add_output(census, "csv", {"csv", "json"});
  add_output(mc, "json", {"csv", "json"});
  add_output(integral, "text", {"text", "json"});
  add_output(fullchords, "json", {"json", "csv"});
  add_output(arcs, "json", {"csv", "json"});
  add_output(constants, "text", {"text", "json"});

  // Each subcommand gets its own default format; only the chosen one runs.
  const std::vector<std::pair<CLI::App*, std::string>> defaults = {
      {circle, "csv"},      {census, "csv"}, {mc, "json"},       {integral, "text"},
      {fullchords, "json"}, {arcs, "json"},  {constants, "text"}};

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    cfg.format.clear();
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kOk;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return kOk;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n" << "run with --help for usage\n";
    return kUsage;
  }
  for (const auto& [sub, fmt] : defaults) {
    if (sub->parsed() && cfg.format.empty()) cfg.format = fmt;
  }

  try {
    if (circle->parsed()) return cmd_circle(cfg, out, err);
    if (census->parsed()) return cmd_census(cfg, out, err);
    if (mc->parsed()) return cmd_mc(cfg, out, err);
    if (integral->parsed()) return cmd_integral(cfg, out, err);
    if (fullchords->parsed()) return cmd_fullchords(cfg, out, err);
    if (arcs->parsed()) return cmd_arcs(cfg, out, err);
    if (constants->parsed()) return cmd_constants(cfg, out, err);
  } catch (const InvalidArgument& e) {
    err << "error: " << e.what() << '\n';
    return kUsage;
  } catch (const ToleranceUnreachable& e) {
    err << "error: " << e.what() << " (achieved " << e.achieved() << ")\n";
    return kUsage;
  } catch (const std::exception& e) {
    err << "internal error: " << e.what() << '\n';
    return kInternal;
  }
  return kUsage;
}

}  // namespace boxed_bertrand::cli
