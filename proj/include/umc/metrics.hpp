#ifndef UMC_METRICS_HPP
#define UMC_METRICS_HPP

#include <cstdint>
#include <span>
#include <string>
#include <vector>

namespace umc {

// ||x - x'||_2 / ||x||_2. When ||x||_2 is zero the absolute norm ||x'||_2 is
// returned and *zero_norm (when given) is set. Terms are sorted before the
// extended-precision accumulation, so the result does not depend on the order
// the values arrive in.
double relative_l2_error(std::span<const double> x, std::span<const double> x_prime,
                         bool* zero_norm = nullptr);

// original size over reduced size; both must be positive
double compression_ratio(std::uint64_t original_bytes, std::uint64_t compressed_bytes);

// ratio of ordered CR to default CR
double improvement(double cr_ordered, double cr_default);

struct EvalRow {
  std::string variable;
  std::string strategy;
  std::string codec;
  double tau_rel = 0.0;
  double eb_abs = 0.0;
  std::uint64_t orig_bytes = 0;
  std::uint64_t comp_bytes = 0;
  double cr = 0.0;
  double epsilon = 0.0;
  std::uint64_t minla_cost = 0;
  double ms = 0.0;
};

struct EvalReport {
  std::vector<EvalRow> rows;
};

enum class ReportFormat { csv, json };

ReportFormat report_format_from_name(const std::string& name);

// CSV header is fixed:
//   variable,strategy,codec,tau_rel,eb_abs,orig_bytes,comp_bytes,cr,epsilon,minla_cost,ms
// Real-valued fields are printed with 6 significant digits; JSON is an array
// of row objects with the same keys.
std::string emit_report(const EvalReport& report, ReportFormat format);

EvalReport parse_report_csv(const std::string& text);

}  // namespace umc

#endif
