// Copyright 2026 The bqaoa Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "bqaoa/experiment.hpp"

#include <algorithm>
#include <charconv>
#include <chrono>
#include <cmath>
#include <fstream>
#include <map>
#include <set>
#include <sstream>
#include <thread>

#include "bqaoa/driver.hpp"
#include "bqaoa/error.hpp"
#include "bqaoa/rng.hpp"

namespace bqaoa {
namespace {

std::string format_real(double v) {
  char buf[64];
  const auto res = std::to_chars(buf, buf + sizeof buf, v, std::chars_format::general, 6);
  return std::string(buf, res.ptr);
}

std::string_view trim(std::string_view s) {
  while (!s.empty() && (s.front() == ' ' || s.front() == '\t')) s.remove_prefix(1);
  while (!s.empty() && (s.back() == ' ' || s.back() == '\t' || s.back() == '\r')) {
    s.remove_suffix(1);
  }
  return s;
}

template <typename T>
T parse_number(std::string_view s, const char* what) {
  s = trim(s);
  T value{};
  const auto res = std::from_chars(s.data(), s.data() + s.size(), value);
  if (res.ec != std::errc{} || res.ptr != s.data() + s.size()) {
    throw ValidationError(std::string("cannot parse ") + what + " from \"" + std::string(s) +
                          "\"");
  }
  return value;
}

void check_range(const IntRange& r, const char* what) {
  if (r.lo > r.hi) throw ValidationError(std::string(what) + " range is empty");
  if (r.lo < 0) throw ValidationError(std::string(what) + " range must be non-negative");
}

void validate(const SweepConfig& cfg) {
  if (cfg.trials < 1) throw ValidationError("sweep needs at least one trial per cell");
  check_range(cfg.n_range, "n");
  check_range(cfg.p_range, "p");
  if (cfg.n_range.lo < 1) throw ValidationError("n must be at least 1");
  if (cfg.p_range.lo < 1) throw ValidationError("p must be at least 1");
  if (!(cfg.alpha > 0.0)) throw ValidationError("alpha must be positive");
  if (cfg.approach == SweepApproach::kConstrained) {
    if (static_cast<std::size_t>(cfg.p_range.hi) > kConstrainedMaxDepth) {
      throw ValidationError("constrained sweeps are limited to p <= 50");
    }
    if (static_cast<std::size_t>(cfg.n_range.hi) > kConstrainedMaxWindows) {
      throw ValidationError("constrained sweeps are limited to n <= 8");
    }
  }
}

ObjectiveSpec make_spec(const SweepConfig& cfg, BatteryInstance inst) {
  switch (cfg.approach) {
    case SweepApproach::kConstrained:
      return ObjectiveSpec::constrained(std::move(inst));
    case SweepApproach::kRelaxedNoPenalty:
      return ObjectiveSpec::return_only(std::move(inst));
    case SweepApproach::kRelaxedPenalty:
      return ObjectiveSpec::relaxed(std::move(inst), cfg.alpha);
  }
  throw ValidationError("unknown approach");
}

// Largest instance the ranges can produce, used to decide NO-DATA cells.
BatteryInstance worst_case(std::size_t n, const InstanceRanges& r) {
  BatteryInstance inst;
  inst.lambda1.assign(n, r.lambda1.hi);
  inst.lambda2.assign(n, r.lambda2.hi);
  inst.cost1.assign(n, r.cost1.hi);
  inst.cost2.assign(n, r.cost2.hi);
  inst.c_max = std::max<std::int64_t>(1, r.c_max_per_window * static_cast<std::int64_t>(n));
  return inst;
}

bool fits(const SweepConfig& cfg, std::size_t n) {
  const ObjectiveSpec spec = make_spec(cfg, worst_case(n, cfg.ranges));
  try {
    if (cfg.variant == SweepVariant::kOracle ||
        cfg.approach == SweepApproach::kRelaxedNoPenalty) {
      if (spec.arity() > kMaxSimulatedQubits) return false;
    } else if (cfg.approach == SweepApproach::kConstrained) {
      if (spec.arity() + 1 > kMaxSimulatedQubits) return false;
    } else {
      const auto variant = cfg.variant == SweepVariant::kTree ? CostVariant::kTree
                                                              : CostVariant::kSequential;
      make_layout(spec.instance, variant, cfg.alpha);
    }
  } catch (const CapacityError&) {
    return false;
  }
  return true;
}

}  // namespace

IntRange parse_range(std::string_view text) {
  text = trim(text);
  const auto dots = text.find("..");
  if (dots == std::string_view::npos) {
    const auto v = parse_number<std::int64_t>(text, "range");
    return {v, v};
  }
  const IntRange r{parse_number<std::int64_t>(text.substr(0, dots), "range start"),
                   parse_number<std::int64_t>(text.substr(dots + 2), "range end")};
  if (r.lo > r.hi) throw ValidationError("range " + std::string(text) + " is empty");
  return r;
}

BatteryInstance gen_instance(std::size_t n, const InstanceRanges& ranges, std::uint64_t seed) {
  check_range(ranges.lambda1, "lambda1");
  check_range(ranges.lambda2, "lambda2");
  check_range(ranges.cost1, "cost1");
  check_range(ranges.cost2, "cost2");
  if (ranges.c_max_per_window < 0) throw ValidationError("c_max rule must be non-negative");
  Rng rng(seed);
  BatteryInstance inst;
  auto draw = [&](std::vector<std::int64_t>& out, const IntRange& r) {
    out.resize(n);
    for (auto& v : out) v = rng.uniform_int(r.lo, r.hi);
  };
  draw(inst.lambda1, ranges.lambda1);
  draw(inst.lambda2, ranges.lambda2);
  draw(inst.cost1, ranges.cost1);
  draw(inst.cost2, ranges.cost2);
  inst.c_max = ranges.c_max_per_window * static_cast<std::int64_t>(n);
  inst.seed = seed;
  return inst;
}

const char* to_string(SweepApproach a) {
  switch (a) {
    case SweepApproach::kConstrained:
      return "constrained";
    case SweepApproach::kRelaxedNoPenalty:
      return "relaxed_nopenalty";
    case SweepApproach::kRelaxedPenalty:
      return "relaxed_penalty";
  }
  return "?";
}

const char* to_string(SweepVariant v) {
  switch (v) {
    case SweepVariant::kSequential:
      return "1";
    case SweepVariant::kTree:
      return "2";
    case SweepVariant::kOracle:
      return "oracle";
  }
  return "?";
}

SweepApproach parse_approach(std::string_view text) {
  for (auto a : {SweepApproach::kConstrained, SweepApproach::kRelaxedNoPenalty,
                 SweepApproach::kRelaxedPenalty}) {
    if (text == to_string(a)) return a;
  }
  throw ValidationError("unknown approach \"" + std::string(text) + "\"");
}

SweepVariant parse_variant(std::string_view text) {
  for (auto v : {SweepVariant::kSequential, SweepVariant::kTree, SweepVariant::kOracle}) {
    if (text == to_string(v)) return v;
  }
  throw ValidationError("unknown variant \"" + std::string(text) + "\"");
}

std::uint64_t trial_seed(std::uint64_t base_seed, std::size_t n, std::size_t p,
                         std::size_t trial) {
  std::uint64_t h = mix64(base_seed);
  h = hash_combine(h, n);
  h = hash_combine(h, p);
  return hash_combine(h, trial);
}

double run_trial(const SweepConfig& cfg, std::size_t n, std::size_t p, std::size_t trial) {
  const std::uint64_t seed = trial_seed(cfg.base_seed, n, p, trial);
  ObjectiveSpec spec = make_spec(cfg, gen_instance(n, cfg.ranges, seed));
  const std::uint64_t run_seed = mix64(seed);
  QaoaRunResult result;
  if (cfg.variant == SweepVariant::kOracle) {
    result = run_qaoa_oracle(spec, p, cfg.shots, run_seed);
  } else {
    const Approach approach = cfg.approach == SweepApproach::kConstrained
                                  ? Approach::kConstrained
                                  : Approach::kRelaxed;
    const CostVariant variant =
        cfg.variant == SweepVariant::kTree ? CostVariant::kTree : CostVariant::kSequential;
    result = run_qaoa(spec, approach, variant, p, cfg.shots, run_seed);
  }
  return result.ratio;
}

std::vector<SweepRecord> run_sweep(const SweepConfig& cfg) {
  validate(cfg);
  std::vector<SweepRecord> records;
  const std::size_t workers =
      cfg.threads ? cfg.threads : std::max(1U, std::thread::hardware_concurrency());

  for (auto n = static_cast<std::size_t>(cfg.n_range.lo);
       n <= static_cast<std::size_t>(cfg.n_range.hi); ++n) {
    for (auto p = static_cast<std::size_t>(cfg.p_range.lo);
         p <= static_cast<std::size_t>(cfg.p_range.hi); ++p) {
      SweepRecord rec;
      rec.n = n;
      rec.p = p;
      rec.approach = cfg.approach;
      rec.variant = cfg.variant;
      rec.trials = cfg.trials;
      rec.seed = cfg.base_seed;
      if (!fits(cfg, n)) {
        records.push_back(rec);
        continue;
      }

      std::vector<double> ratios(cfg.trials);
      std::vector<double> millis(cfg.trials, 0.0);
      auto work = [&](std::size_t first) {
        for (std::size_t t = first; t < cfg.trials; t += workers) {
          const auto start = std::chrono::steady_clock::now();
          ratios[t] = run_trial(cfg, n, p, t);
          const auto stop = std::chrono::steady_clock::now();
          millis[t] = std::chrono::duration<double, std::milli>(stop - start).count();
        }
      };
      if (workers == 1) {
        work(0);
      } else {
        std::vector<std::jthread> pool;
        for (std::size_t w = 0; w < workers; ++w) pool.emplace_back(work, w);
      }

      // Fixed (trial index) order keeps the aggregate independent of scheduling.
      double sum = 0.0, time = 0.0;
      std::size_t defined = 0;
      for (std::size_t t = 0; t < cfg.trials; ++t) {
        time += millis[t];
        if (std::isnan(ratios[t])) continue;
        sum += ratios[t];
        ++defined;
      }
      if (defined > 0) {
        const double mean = sum / static_cast<double>(defined);
        double sq = 0.0;
        for (double r : ratios) {
          if (!std::isnan(r)) sq += (r - mean) * (r - mean);
        }
        rec.mean_ratio = mean;
        rec.std_ratio = defined > 1 ? std::sqrt(sq / static_cast<double>(defined - 1)) : 0.0;
      }
      rec.mean_runtime_ms = cfg.record_timing ? time / static_cast<double>(cfg.trials) : 0.0;
      records.push_back(rec);
    }
  }
  return records;
}

std::string format_csv(const std::vector<SweepRecord>& records) {
  std::string out(kCsvHeader);
  out += '\n';
  for (const SweepRecord& r : records) {
    out += std::to_string(r.n) + ',' + std::to_string(r.p) + ',' + to_string(r.approach) +
           ',' + to_string(r.variant) + ',' + std::to_string(r.trials) + ',';
    if (r.mean_ratio) out += format_real(*r.mean_ratio);
    out += ',';
    if (r.std_ratio) out += format_real(*r.std_ratio);
    out += ',' + format_real(r.mean_runtime_ms) + ',' + std::to_string(r.seed) + '\n';
  }
  return out;
}

std::vector<SweepRecord> parse_csv(std::string_view text) {
  std::vector<SweepRecord> records;
  std::size_t line_no = 0;
  while (!text.empty()) {
    const auto eol = text.find('\n');
    std::string_view line = text.substr(0, eol);
    text = eol == std::string_view::npos ? std::string_view{} : text.substr(eol + 1);
    line = trim(line);
    if (line.empty()) continue;
    if (line_no++ == 0) {
      if (line != kCsvHeader) throw ValidationError("unexpected CSV header");
      continue;
    }
    std::vector<std::string_view> f;
    std::size_t start = 0;
    while (true) {
      const auto comma = line.find(',', start);
      f.push_back(line.substr(start, comma - start));
      if (comma == std::string_view::npos) break;
      start = comma + 1;
    }
    if (f.size() != 9) throw ValidationError("CSV row must have 9 fields");
    SweepRecord r;
    r.n = parse_number<std::size_t>(f[0], "n");
    r.p = parse_number<std::size_t>(f[1], "p");
    r.approach = parse_approach(trim(f[2]));
    r.variant = parse_variant(trim(f[3]));
    r.trials = parse_number<std::size_t>(f[4], "trials");
    if (!trim(f[5]).empty()) r.mean_ratio = parse_number<double>(f[5], "mean_ratio");
    if (!trim(f[6]).empty()) r.std_ratio = parse_number<double>(f[6], "std_ratio");
    r.mean_runtime_ms = parse_number<double>(f[7], "mean_runtime_ms");
    r.seed = parse_number<std::uint64_t>(f[8], "seed");
    records.push_back(r);
  }
  return records;
}

void emit_csv(const std::vector<SweepRecord>& records, const std::filesystem::path& path) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw IoError("cannot write CSV file " + path.string());
  out << format_csv(records);
  if (!out) throw IoError("failed writing CSV file " + path.string());
}

PlotAxis parse_axis(std::string_view text) {
  if (text == "n") return PlotAxis::kN;
  if (text == "p") return PlotAxis::kP;
  throw ValidationError("plot axis must be n or p");
}

std::string render_plot(const std::vector<SweepRecord>& records, PlotAxis x, PlotAxis series) {
  if (x == series) throw ValidationError("plot x axis and series key must differ");
  auto key = [](const SweepRecord& r, PlotAxis a) { return a == PlotAxis::kN ? r.n : r.p; };

  std::map<std::size_t, std::vector<std::pair<double, double>>> lines;
  for (const SweepRecord& r : records) {
    if (!r.mean_ratio) continue;
    lines[key(r, series)].emplace_back(static_cast<double>(key(r, x)), *r.mean_ratio);
  }
  if (lines.empty()) throw ValidationError("no plottable records");

  double xmin = 1e300, xmax = -1e300, ymin = 1e300, ymax = -1e300;
  for (auto& [k, pts] : lines) {
    std::sort(pts.begin(), pts.end());
    for (const auto& [px, py] : pts) {
      xmin = std::min(xmin, px);
      xmax = std::max(xmax, px);
      ymin = std::min(ymin, py);
      ymax = std::max(ymax, py);
    }
  }
  if (xmax == xmin) {
    xmin -= 1;
    xmax += 1;
  }
  const double pad = std::max(0.01, 0.05 * (ymax - ymin));
  ymin -= pad;
  ymax += pad;

  constexpr double kW = 720, kH = 440, kLeft = 70, kRight = 150, kTop = 30, kBottom = 60;
  const double pw = kW - kLeft - kRight, ph = kH - kTop - kBottom;
  auto sx = [&](double v) { return kLeft + (v - xmin) / (xmax - xmin) * pw; };
  auto sy = [&](double v) { return kTop + (ymax - v) / (ymax - ymin) * ph; };
  // Tableau-10 palette, cycled.
  static constexpr const char* kColors[] = {"#4e79a7", "#f28e2b", "#e15759", "#76b7b2",
                                            "#59a14f", "#edc948", "#b07aa1", "#ff9da7",
                                            "#9c755f", "#bab0ac"};
  const char* xname = x == PlotAxis::kN ? "n" : "p";
  const char* sname = series == PlotAxis::kN ? "n" : "p";

  std::ostringstream svg;
  svg << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << format_real(kW)
      << "\" height=\"" << format_real(kH) << "\" font-family=\"sans-serif\" font-size=\"12\">\n";
  svg << "<rect width=\"100%\" height=\"100%\" fill=\"white\"/>\n";
  svg << "<line x1=\"" << format_real(kLeft) << "\" y1=\"" << format_real(kTop + ph)
      << "\" x2=\"" << format_real(kLeft + pw) << "\" y2=\"" << format_real(kTop + ph)
      << "\" stroke=\"black\"/>\n";
  svg << "<line x1=\"" << format_real(kLeft) << "\" y1=\"" << format_real(kTop) << "\" x2=\""
      << format_real(kLeft) << "\" y2=\"" << format_real(kTop + ph) << "\" stroke=\"black\"/>\n";
  for (int i = 0; i <= 5; ++i) {
    const double yv = ymin + (ymax - ymin) * i / 5.0;
    svg << "<text x=\"" << format_real(kLeft - 6) << "\" y=\"" << format_real(sy(yv) + 4)
        << "\" text-anchor=\"end\">" << format_real(std::round(yv * 1000) / 1000) << "</text>\n";
  }
  std::set<double> xticks;
  for (const auto& [k, pts] : lines) {
    for (const auto& pt : pts) xticks.insert(pt.first);
  }
  for (double xv : xticks) {
    svg << "<text x=\"" << format_real(sx(xv)) << "\" y=\"" << format_real(kTop + ph + 18)
        << "\" text-anchor=\"middle\">" << format_real(xv) << "</text>\n";
  }
  svg << "<text x=\"" << format_real(kLeft + pw / 2) << "\" y=\"" << format_real(kH - 15)
      << "\" text-anchor=\"middle\">" << xname << "</text>\n";
  svg << "<text x=\"18\" y=\"" << format_real(kTop + ph / 2)
      << "\" text-anchor=\"middle\" transform=\"rotate(-90 18 " << format_real(kTop + ph / 2)
      << ")\">ratio</text>\n";

  std::size_t idx = 0;
  for (const auto& [k, pts] : lines) {
    const char* color = kColors[idx % 10];
    svg << "<polyline fill=\"none\" stroke=\"" << color << "\" stroke-width=\"2\" points=\"";
    for (std::size_t i = 0; i < pts.size(); ++i) {
      if (i) svg << ' ';
      svg << format_real(sx(pts[i].first)) << ',' << format_real(sy(pts[i].second));
    }
    svg << "\"/>\n";
    for (const auto& [px, py] : pts) {
      svg << "<circle cx=\"" << format_real(sx(px)) << "\" cy=\"" << format_real(sy(py))
          << "\" r=\"3\" fill=\"" << color << "\"/>\n";
    }
    const double ly = kTop + 10 + 18.0 * static_cast<double>(idx);
    svg << "<line x1=\"" << format_real(kW - kRight + 20) << "\" y1=\"" << format_real(ly)
        << "\" x2=\"" << format_real(kW - kRight + 40) << "\" y2=\"" << format_real(ly)
        << "\" stroke=\"" << color << "\" stroke-width=\"2\"/>\n";
    svg << "<text x=\"" << format_real(kW - kRight + 46) << "\" y=\"" << format_real(ly + 4)
        << "\">" << sname << " = " << k << "</text>\n";
    ++idx;
  }
  svg << "</svg>\n";
  return svg.str();
}

void emit_plot(const std::vector<SweepRecord>& records, const std::filesystem::path& path,
               PlotAxis x, PlotAxis series) {
  const std::string svg = render_plot(records, x, series);
  std::ofstream out(path, std::ios::binary);
  if (!out) throw IoError("cannot write plot file " + path.string());
  out << svg;
  if (!out) throw IoError("failed writing plot file " + path.string());
}

}  // namespace bqaoa
