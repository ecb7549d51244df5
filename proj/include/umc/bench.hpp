#ifndef UMC_BENCH_HPP
#define UMC_BENCH_HPP

#include <optional>
#include <string>
#include <vector>

#include "umc/codec.hpp"
#include "umc/external_codec.hpp"
#include "umc/mesh.hpp"
#include "umc/metrics.hpp"
#include "umc/ordering.hpp"

namespace umc {

struct BenchConfig {
  std::vector<FieldExpr> fields;
  std::vector<OrderingStrategy> strategies;
  std::vector<double> taus;
  std::vector<Predictor> predictors;             // built-in codecs to run
  std::optional<ExternalCodec> external;         // optional out-of-process codec
  NodeId greedy_start = 0;
  bool timing = false;  // when false, ms is reported as 0 so reruns are byte-identical
};

struct BenchResult {
  EvalReport report;  // rows sorted by (variable, strategy, codec, tau)

  // improvement relative to the identity strategy, per (variable, codec, tau)
  struct Improvement {
    std::string variable;
    std::string strategy;
    std::string codec;
    double tau_rel;
    double value;
  };
  std::vector<Improvement> improvements;

  // dataset totals per strategy: sum(orig) / sum(comp), with and without the
  // shared order-mapping metadata counted against the reduced size
  struct Total {
    std::string strategy;
    double cr;
    double cr_with_metadata;
  };
  std::vector<Total> totals;

  std::string summary() const;  // human-readable table for stdout
};

// Full cross-product evaluation of the pipeline on one mesh. Each field is
// reordered, compressed, decompressed, restored to node order, and measured.
BenchResult run_bench(const Mesh& mesh, const BenchConfig& config);

}  // namespace umc

#endif
