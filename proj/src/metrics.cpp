#include "umc/metrics.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <sstream>

#include "json.hpp"
#include "umc/errors.hpp"

namespace umc {

namespace {

// order-independent sum: identical multisets of terms give identical results
long double stable_sum(std::vector<double>& terms) {
  std::sort(terms.begin(), terms.end());
  long double acc = 0.0L;
  for (double t : terms) acc += t;
  return acc;
}

std::string format_real(double v) {
  char buf[64];
  std::snprintf(buf, sizeof(buf), "%.6g", v);
  return buf;
}

constexpr const char* kCsvHeader =
    "variable,strategy,codec,tau_rel,eb_abs,orig_bytes,comp_bytes,cr,epsilon,minla_cost,ms";

}  // namespace

double relative_l2_error(std::span<const double> x, std::span<const double> x_prime,
                         bool* zero_norm) {
  if (x.size() != x_prime.size()) throw ValidationError("field length mismatch");
  if (zero_norm) *zero_norm = false;
  std::vector<double> diff2(x.size()), ref2(x.size());
  for (std::size_t i = 0; i < x.size(); ++i) {
    const double d = x[i] - x_prime[i];
    diff2[i] = d * d;
    ref2[i] = x[i] * x[i];
  }
  const long double denom = stable_sum(ref2);
  const long double numer = stable_sum(diff2);
  if (denom == 0.0L) {
    if (zero_norm) *zero_norm = true;
    std::vector<double> prime2(x_prime.size());
    for (std::size_t i = 0; i < x_prime.size(); ++i) prime2[i] = x_prime[i] * x_prime[i];
    return static_cast<double>(std::sqrt(stable_sum(prime2)));
  }
  return static_cast<double>(std::sqrt(numer) / std::sqrt(denom));
}

double compression_ratio(std::uint64_t original_bytes, std::uint64_t compressed_bytes) {
  if (original_bytes == 0 || compressed_bytes == 0)
    throw ValidationError("compression ratio needs nonzero sizes");
  return static_cast<double>(original_bytes) / static_cast<double>(compressed_bytes);
}

double improvement(double cr_ordered, double cr_default) {
  if (!(cr_ordered > 0.0) || !(cr_default > 0.0))
    throw ValidationError("improvement needs positive compression ratios");
  return cr_ordered / cr_default;
}

ReportFormat report_format_from_name(const std::string& name) {
  if (name == "csv") return ReportFormat::csv;
  if (name == "json") return ReportFormat::json;
  throw ValidationError("unknown report format '" + name + "'");
}

std::string emit_report(const EvalReport& report, ReportFormat format) {
  if (format == ReportFormat::csv) {
    std::ostringstream out;
    out << kCsvHeader << '\n';
    for (const EvalRow& r : report.rows) {
      out << r.variable << ',' << r.strategy << ',' << r.codec << ',' << format_real(r.tau_rel)
          << ',' << format_real(r.eb_abs) << ',' << r.orig_bytes << ',' << r.comp_bytes << ','
          << format_real(r.cr) << ',' << format_real(r.epsilon) << ',' << r.minla_cost << ','
          << format_real(r.ms) << '\n';
    }
    return out.str();
  }
  nlohmann::ordered_json rows = nlohmann::ordered_json::array();
  for (const EvalRow& r : report.rows) {
    nlohmann::ordered_json jr;
    jr["variable"] = r.variable;
    jr["strategy"] = r.strategy;
    jr["codec"] = r.codec;
    jr["tau_rel"] = r.tau_rel;
    jr["eb_abs"] = r.eb_abs;
    jr["orig_bytes"] = r.orig_bytes;
    jr["comp_bytes"] = r.comp_bytes;
    jr["cr"] = r.cr;
    jr["epsilon"] = r.epsilon;
    jr["minla_cost"] = r.minla_cost;
    jr["ms"] = r.ms;
    rows.push_back(std::move(jr));
  }
  return rows.dump(2) + "\n";
}

EvalReport parse_report_csv(const std::string& text) {
  std::istringstream in(text);
  std::string line;
  if (!std::getline(in, line)) throw ParseError("report: empty input");
  if (line != kCsvHeader) throw ParseError("report: unexpected CSV header");
  EvalReport report;
  std::size_t line_no = 1;
  while (std::getline(in, line)) {
    ++line_no;
    if (line.empty()) continue;
    std::vector<std::string> cells;
    std::size_t begin = 0;
    for (std::size_t i = 0; i <= line.size(); ++i) {
      if (i == line.size() || line[i] == ',') {
        cells.push_back(line.substr(begin, i - begin));
        begin = i + 1;
      }
    }
    if (cells.size() != 11) throw ParseError(line_no, "report: expected 11 columns");
    EvalRow r;
    r.variable = cells[0];
    r.strategy = cells[1];
    r.codec = cells[2];
    try {
      r.tau_rel = std::stod(cells[3]);
      r.eb_abs = std::stod(cells[4]);
      r.orig_bytes = std::stoull(cells[5]);
      r.comp_bytes = std::stoull(cells[6]);
      r.cr = std::stod(cells[7]);
      r.epsilon = std::stod(cells[8]);
      r.minla_cost = std::stoull(cells[9]);
      r.ms = std::stod(cells[10]);
    } catch (const std::exception&) {
      throw ParseError(line_no, "report: malformed numeric cell");
    }
    report.rows.push_back(std::move(r));
  }
  return report;
}

}  // namespace umc
