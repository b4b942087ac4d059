// msarea: compute Laurent coefficients of the Mandelbrot exterior map, area
// upper bounds, validation reports and pixel-count estimates.

#include "msarea/area.h"
#include "msarea/checkpoint.h"
#include "msarea/coeff_io.h"
#include "msarea/engine.h"
#include "msarea/oracle.h"
#include "msarea/pixel.h"

#include "CLI11.hpp"
#include "json.hpp"

#include <algorithm>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <set>
#include <sstream>
#include <thread>

using namespace msarea;
namespace fs = std::filesystem;
using nlohmann::json;

namespace {

struct RunConfig {
  std::int64_t m_target = 0;
  std::string mode = "float";
  int width = 1;
  int threshold = 0;
  int workers = std::max(1u, std::thread::hardware_concurrency());
  std::string checkpoint;
  std::int64_t checkpoint_interval = 100000;
  std::int64_t exact_cap = 4096;
  bool verify_band = false;
  std::string out;
  std::string in;
  std::string sample_points;
  std::string checks = "full";
  std::string bounds = "-2,0.5,0,1.25";
  std::string resolution = "4096";
  std::int64_t max_iter = 100000;
};

class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

std::vector<std::string> split(const std::string& text, char sep) {
  std::vector<std::string> out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, sep))
    if (!item.empty())
      out.push_back(item);
  return out;
}

std::int64_t parse_int(const std::string& s, const char* what) {
  std::size_t used = 0;
  std::int64_t v = 0;
  try {
    v = std::stoll(s, &used);
  } catch (const std::exception&) {
    used = 0;
  }
  if (used != s.size() || s.empty())
    throw UsageError(std::string("bad ") + what + ": '" + s + "'");
  return v;
}

RunOptions run_options(const RunConfig& c) {
  RunOptions o;
  o.width = c.width;
  o.row_threshold = c.threshold;
  o.workers = c.workers;
  o.checkpoint = c.checkpoint;
  o.checkpoint_interval = c.checkpoint_interval;
  o.exact_cap = c.exact_cap;
  o.engine.verify_band = c.verify_band;
  return o;
}

void check_mode(const std::string& mode) {
  if (mode != "float" && mode != "exact")
    throw UsageError("mode must be 'float' or 'exact'");
}

// Runs the engine, resuming from the checkpoint file when it exists.
template <class V>
CoeffStream<V> compute_stream(const RunConfig& c, BetaTable<V>& table) {
  if (!c.checkpoint.empty() && fs::exists(c.checkpoint)) {
    table = checkpoint_load<V>(c.checkpoint);
    if (table.m_done() >= c.m_target)
      return stream_of(table, c.m_target);
  }
  return run(table, c.m_target, run_options(c));
}

void with_output(const std::string& path, const std::function<void(std::ostream&)>& write) {
  if (path.empty() || path == "-") {
    write(std::cout);
    std::cout.flush();
    return;
  }
  std::ofstream out(path, std::ios::trunc);
  if (!out)
    throw std::runtime_error("cannot open " + path + " for writing");
  write(out);
  out.flush();
  if (!out)
    throw std::runtime_error("write failed for " + path);
}

CoefficientData load_coefficients(const std::string& path) {
  std::ifstream in(path);
  if (!in)
    throw std::runtime_error("cannot open " + path);
  return read_coefficients(in);
}

// --- compute -----------------------------------------------------------------

int cmd_compute(const RunConfig& c) {
  check_mode(c.mode);
  if (c.m_target < 0)
    throw UsageError("--m-target must be >= 0");
  if (c.mode == "float") {
    FloatTable t;
    const auto s = compute_stream(c, t);
    with_output(c.out, [&](std::ostream& o) { write_coefficients(s.b, o); });
  } else {
    ExactTable t;
    const auto s = compute_stream(c, t);
    with_output(c.out, [&](std::ostream& o) { write_coefficients(s.b, o); });
  }
  return 0;
}

// --- area --------------------------------------------------------------------

std::vector<std::int64_t> sample_points(const std::string& spec, std::int64_t last) {
  if (spec.empty())
    return {last};
  if (spec == "published") {
    std::vector<std::int64_t> pts;
    for (const auto& v : published_area_bounds())
      pts.push_back(v.index);
    return pts;
  }
  std::vector<std::int64_t> pts;
  for (const auto& item : split(spec, ','))
    pts.push_back(parse_int(item, "sample point"));
  if (pts.empty())
    throw UsageError("--sample-points is empty");
  return pts;
}

int cmd_area(const RunConfig& c) {
  AreaSeries series;
  std::string mode;
  double tail = 0.0;
  auto finish_float = [&](const std::vector<double>& b) {
    if (b.empty())
      throw UsageError("no coefficients");
    const auto pts = sample_points(c.sample_points, static_cast<std::int64_t>(b.size()) - 1);
    series = accumulate(b, pts);
    tail = max_abs_tail(b, series.samples.back().n);
  };
  if (!c.in.empty()) {
    auto data = load_coefficients(c.in);
    if (auto* f = std::get_if<std::vector<double>>(&data)) {
      mode = "float";
      finish_float(*f);
    } else {
      mode = "exact";
      const auto& b = std::get<std::vector<DyadicRational>>(data);
      if (b.empty())
        throw UsageError("no coefficients");
      auto pts = sample_points(c.sample_points, static_cast<std::int64_t>(b.size()) - 1);
      std::sort(pts.begin(), pts.end());
      pts.erase(std::unique(pts.begin(), pts.end()), pts.end());
      for (const auto n : pts) {
        if (n < 0 || n >= static_cast<std::int64_t>(b.size()))
          throw std::invalid_argument("area: N = " + std::to_string(n) + " needs " + std::to_string(n + 1) +
                                      " coefficients, have " + std::to_string(b.size()));
        series.samples.push_back({n, exact_area_bound(b, n)});
      }
      std::vector<double> approx;
      for (std::int64_t m = 0; m <= series.samples.back().n; ++m)
        approx.push_back(b[m].to_double());
      tail = max_abs_tail(approx, series.samples.back().n);
    }
  } else {
    if (c.m_target < 1)
      throw UsageError("area needs --in or --m-target >= 1");
    mode = "float";
    FloatTable t;
    finish_float(compute_stream(c, t).b);
  }
  if (!c.out.empty()) {
    const bool as_json = fs::path(c.out).extension() == ".json";
    with_output(c.out, [&](std::ostream& o) { as_json ? export_json(series, o) : export_csv(series, o); });
  }
  const auto& last = series.samples.back();
  std::cout << summary_json(mode, last.n, last.area, tail) << '\n';
  return 0;
}

// --- validate ------------------------------------------------------------------

const std::set<std::string> kStreamChecks = {"zeros", "valuations", "closed-forms", "contour", "published"};
const std::set<std::string> kTableChecks = {"beta-valuations", "structure", "roundtrip", "audit"};
const std::vector<std::string> kFullSuite = {"zeros",     "valuations", "beta-valuations", "structure",
                                             "roundtrip", "contour",    "audit"};

std::vector<std::string> selected_checks(const std::string& spec) {
  std::vector<std::string> out;
  for (const auto& item : split(spec, ',')) {
    if (item == "full") {
      out.insert(out.end(), kFullSuite.begin(), kFullSuite.end());
    } else if (kStreamChecks.count(item) || kTableChecks.count(item)) {
      out.push_back(item);
    } else {
      throw UsageError("unknown check '" + item + "'");
    }
  }
  if (out.empty())
    throw UsageError("--checks is empty");
  std::vector<std::string> unique;
  for (const auto& x : out)
    if (std::find(unique.begin(), unique.end(), x) == unique.end())
      unique.push_back(x);
  return unique;
}

void add_all(ValidationReport& report, std::vector<CheckRecord> records) {
  for (auto& r : records)
    report.add(std::move(r));
}

void exact_stream_checks(ValidationReport& report, const std::string& check, std::span<const DyadicRational> b,
                         std::int64_t limit) {
  if (check == "zeros") {
    report.add(known_zero_check(b, limit));
  } else if (check == "valuations") {
    add_all(report, valuation_check(b, limit));
  } else if (check == "closed-forms") {
    add_all(report, closed_form_check(b, limit, ClosedFormIndexing::as_printed));
    add_all(report, closed_form_check(b, limit, ClosedFormIndexing::doubled_odd_part));
  } else if (check == "contour") {
    const int n = 4;
    report.add(contour_check(b, n, std::min<std::int64_t>(limit, row_start(n) - 2)));
  }
}

std::vector<std::int64_t> published_positions(std::int64_t limit) {
  std::vector<std::int64_t> pos;
  for (const auto& v : published_coefficients())
    if (v.index <= limit)
      pos.push_back(v.index);
  return pos;
}

ValidationReport validate_file(const RunConfig& c, const std::vector<std::string>& checks) {
  ValidationReport report;
  auto data = load_coefficients(c.in);
  const auto size = std::visit([](const auto& v) { return static_cast<std::int64_t>(v.size()); }, data);
  if (size == 0)
    throw UsageError("no coefficients in " + c.in);
  const std::int64_t limit = c.m_target > 0 ? c.m_target : size - 1;
  for (const auto& check : checks) {
    if (kTableChecks.count(check))
      throw UsageError("check '" + check + "' needs a live run, not a coefficient file");
    if (auto* f = std::get_if<std::vector<double>>(&data)) {
      if (check == "zeros") {
        report.add(known_zero_check(*f, limit));
      } else if (check == "published") {
        const auto pos = published_positions(limit);
        report.add(published_value_check(*f, pos));
      } else {
        throw UsageError("check '" + check + "' needs exact coefficients");
      }
    } else {
      const auto& b = std::get<std::vector<DyadicRational>>(data);
      if (check == "published") {
        std::vector<double> f;
        for (const auto& x : b)
          f.push_back(x.to_double());
        report.add(published_value_check(f, published_positions(limit)));
      } else {
        exact_stream_checks(report, check, b, limit);
      }
    }
  }
  return report;
}

ValidationReport validate_live(const RunConfig& c, const std::vector<std::string>& checks) {
  const std::int64_t limit = c.m_target > 0 ? c.m_target : 1023;
  RunOptions o = run_options(c);
  o.checkpoint.clear();
  o.engine.verify_band = true;
  ExactTable exact;
  const auto b = run(exact, limit + 1, o).b;
  ValidationReport report;
  for (const auto& check : checks) {
    if (check == "beta-valuations") {
      add_all(report, beta_valuation_check(exact));
    } else if (check == "structure") {
      add_all(report, structural_identity_check(exact));
    } else if (check == "roundtrip") {
      report.add(roundtrip_check(exact));
      FloatTable f;
      run(f, limit + 1, o);
      report.add(roundtrip_check(f));
    } else if (check == "audit") {
      FloatTable f;
      run(f, limit + 1, o);
      const auto audit = float_error_audit(f, exact, limit + 1);
      auto r = float_error_audit_record(audit, limit + 1);
      json sums = audit.row_sums;
      r.detail += " row sums " + sums.dump();
      report.add(std::move(r));
    } else if (check == "published") {
      throw UsageError("published values lie beyond the exact-mode range; validate a float CSV with --in");
    } else {
      exact_stream_checks(report, check, b, limit);
    }
  }
  return report;
}

int cmd_validate(const RunConfig& c) {
  const auto checks = selected_checks(c.checks);
  const auto report = c.in.empty() ? validate_live(c, checks) : validate_file(c, checks);
  with_output(c.out, [&](std::ostream& o) { o << report.to_json() << '\n'; });
  for (const auto& r : report.records)
    if (!r.passed)
      std::cerr << "FAIL " << r.name << ": " << r.detail << '\n';
  return report.passed() ? 0 : 1;
}

// --- pixel -------------------------------------------------------------------

int cmd_pixel(const RunConfig& c) {
  GridSpec g;
  const auto b = split(c.bounds, ',');
  if (b.size() != 4)
    throw UsageError("--bounds needs re_min,re_max,im_min,im_max");
  try {
    g.re_min = std::stod(b[0]);
    g.re_max = std::stod(b[1]);
    g.im_min = std::stod(b[2]);
    g.im_max = std::stod(b[3]);
  } catch (const std::exception&) {
    throw UsageError("bad --bounds '" + c.bounds + "'");
  }
  const auto r = split(c.resolution, 'x');
  if (r.size() == 1) {
    g.re_cells = g.im_cells = parse_int(r[0], "resolution");
  } else if (r.size() == 2) {
    g.re_cells = parse_int(r[0], "resolution");
    g.im_cells = parse_int(r[1], "resolution");
  } else {
    throw UsageError("--resolution needs N or WxH");
  }
  g.max_iter = c.max_iter;
  g.mirror = g.im_min == 0.0;
  const double estimate = estimate_area(g, c.workers);
  json j = {{"resolution", {g.re_cells, g.im_cells}},
            {"bounds", {g.re_min, g.re_max, g.im_min, g.im_max}},
            {"max_iter", g.max_iter},
            {"mirrored", g.mirror},
            {"estimate", estimate}};
  with_output(c.out, [&](std::ostream& o) { o << j.dump(2) << '\n'; });
  return 0;
}

// --- checkpoint ----------------------------------------------------------------

int cmd_inspect(const std::string& path) {
  const auto info = checkpoint_inspect(path);
  json j = {{"version", info.version},
            {"mode", to_string(info.mode)},
            {"m_done", info.m_done},
            {"rows", info.row_lengths.size()},
            {"row_lengths", info.row_lengths}};
  std::cout << j.dump(2) << '\n';
  return 0;
}

void engine_flags(CLI::App* app, RunConfig& c) {
  app->add_option("--width", c.width, "Columns per batch (<= 2^(threshold+1) - 1)")->capture_default_str();
  app->add_option("--threshold", c.threshold, "Rows >= threshold run in parallel within a batch")
      ->capture_default_str();
  app->add_option("--workers", c.workers, "Worker threads")->check(CLI::PositiveNumber)->capture_default_str();
  app->add_option("--checkpoint", c.checkpoint, "Checkpoint file; resumed when it exists");
  app->add_option("--checkpoint-interval", c.checkpoint_interval, "Columns between checkpoints")
      ->capture_default_str();
  app->add_option("--exact-cap", c.exact_cap, "Largest m-target allowed in exact mode")->capture_default_str();
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Mandelbrot set area: exterior-map coefficients, area bounds, validation"};
  app.require_subcommand(1);
  RunConfig c;
  std::string inspect_path;

  auto* compute = app.add_subcommand("compute", "Compute b_0 .. b_{m-target - 1} and write them as CSV");
  compute->add_option("--m-target", c.m_target, "Number of coefficients")->required();
  compute->add_option("--mode", c.mode, "float or exact")->capture_default_str();
  compute->add_option("--out", c.out, "Output CSV (default stdout)");
  compute->add_flag("--verify-band", c.verify_band, "Recompute band entries by the full recursion");
  engine_flags(compute, c);

  auto* area = app.add_subcommand("area", "Area upper bounds A_N");
  area->add_option("--in", c.in, "Coefficient CSV");
  area->add_option("--m-target", c.m_target, "Compute this many float coefficients instead of reading --in");
  area->add_option("--sample-points", c.sample_points, "Comma-separated N values, or 'published' for the published bounds");
  area->add_option("--out", c.out, "Series file; .json for JSON, CSV otherwise");
  engine_flags(area, c);

  auto* validate = app.add_subcommand("validate", "Run validation checks; nonzero exit on any failure");
  validate->add_option("--checks", c.checks,
                       "Comma-separated: full, zeros, valuations, closed-forms, contour, published, "
                       "beta-valuations, structure, roundtrip, audit")
      ->capture_default_str();
  validate->add_option("--m-target", c.m_target, "Check coefficients b_m with m <= this (default 1023)");
  validate->add_option("--in", c.in, "Validate a coefficient CSV instead of a live run");
  validate->add_option("--out", c.out, "Report JSON (default stdout)");
  engine_flags(validate, c);

  auto* pixel = app.add_subcommand("pixel", "Escape-time pixel-count estimate of the area");
  pixel->add_option("--bounds", c.bounds, "re_min,re_max,im_min,im_max")->capture_default_str();
  pixel->add_option("--resolution", c.resolution, "N or WxH cells")->capture_default_str();
  pixel->add_option("--max-iter", c.max_iter, "Iteration budget")->capture_default_str();
  pixel->add_option("--workers", c.workers, "Worker threads")->check(CLI::PositiveNumber);
  pixel->add_option("--out", c.out, "Output JSON (default stdout)");

  auto* checkpoint = app.add_subcommand("checkpoint", "Checkpoint utilities");
  checkpoint->require_subcommand(1);
  auto* inspect = checkpoint->add_subcommand("inspect", "Print a checkpoint header");
  inspect->add_option("path", inspect_path, "Checkpoint file")->required();

  CLI11_PARSE(app, argc, argv);

  try {
    if (*compute)
      return cmd_compute(c);
    if (*area)
      return cmd_area(c);
    if (*validate)
      return cmd_validate(c);
    if (*pixel)
      return cmd_pixel(c);
    if (*inspect)
      return cmd_inspect(inspect_path);
  } catch (const UsageError& e) {
    std::cerr << "msarea: " << e.what() << '\n';
    return 2;
  } catch (const std::invalid_argument& e) {
    std::cerr << "msarea: " << e.what() << '\n';
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "msarea: " << e.what() << '\n';
    return 1;
  }
  return 0;
}
