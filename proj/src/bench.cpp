#include "umc/bench.hpp"

#include <algorithm>
#include <chrono>
#include <cstdio>
#include <map>
#include <sstream>
#include <tuple>

#include "umc/graph.hpp"
#include "umc/permute.hpp"

namespace umc {

namespace {

std::string format_real(double v) {
  char buf[64];
  std::snprintf(buf, sizeof(buf), "%.6g", v);
  return buf;
}

}  // namespace

BenchResult run_bench(const Mesh& mesh, const BenchConfig& config) {
  const Graph graph = build_traversal_graph(mesh);
  const std::size_t n = mesh.n_nodes();
  if (n == 0) throw ValidationError("bench needs a nonempty mesh");
  if (config.fields.empty() || config.strategies.empty() || config.taus.empty())
    throw ValidationError("bench needs at least one field, strategy, and tolerance");
  if (config.predictors.empty() && !config.external)
    throw ValidationError("bench needs at least one codec");

  struct StrategyData {
    std::string name;
    Permutation perm;
    Permutation inverse;
    std::uint64_t cost;
  };
  std::vector<StrategyData> strategies;
  for (const OrderingStrategy& s : config.strategies) {
    StrategyData data;
    data.name = s.to_string();
    if (s.kind == OrderingStrategy::Kind::greedy)
      data.perm = greedy_order(graph, mesh.coords, mesh.dim, config.greedy_start);
    else
      data.perm = order_nodes(s, graph, mesh.coords, mesh.dim);
    data.inverse = invert_permutation(data.perm);
    data.cost = minla_cost(graph, data.perm);
    strategies.push_back(std::move(data));
  }

  BenchResult result;
  for (const FieldExpr expr : config.fields) {
    const FieldData field = sample_field(mesh, expr);
    const std::uint64_t orig_bytes = 8 * static_cast<std::uint64_t>(n);
    for (const StrategyData& strat : strategies) {
      const std::vector<double> serialized = apply_permutation(field.values, strat.perm);
      for (const double tau : config.taus) {
        const double eb = relative_to_absolute_bound(field.values, tau);

        for (const Predictor p : config.predictors) {
          const auto t0 = std::chrono::steady_clock::now();
          const CompressedStream stream = compress(serialized, eb, p);
          const std::uint64_t bytes = serialize_stream(stream).size();
          const std::vector<double> reconstructed = decompress(stream);
          const auto t1 = std::chrono::steady_clock::now();
          EvalRow row;
          row.variable = field.name;
          row.strategy = strat.name;
          row.codec = predictor_name(p);
          row.tau_rel = tau;
          row.eb_abs = eb;
          row.orig_bytes = orig_bytes;
          row.comp_bytes = bytes;
          row.cr = compression_ratio(orig_bytes, bytes);
          const std::vector<double> restored = apply_permutation(reconstructed, strat.inverse);
          row.epsilon = relative_l2_error(field.values, restored);
          row.minla_cost = strat.cost;
          row.ms = config.timing
                       ? std::chrono::duration<double, std::milli>(t1 - t0).count()
                       : 0.0;
          result.report.rows.push_back(std::move(row));
        }
        if (config.external) {
          const auto t0 = std::chrono::steady_clock::now();
          const auto blob = external_compress(*config.external, serialized, tau);
          const auto reconstructed =
              external_decompress(*config.external, blob, n, tau);
          const auto t1 = std::chrono::steady_clock::now();
          EvalRow row;
          row.variable = field.name;
          row.strategy = strat.name;
          row.codec = config.external->name;
          row.tau_rel = tau;
          row.eb_abs = eb;
          row.orig_bytes = orig_bytes;
          row.comp_bytes = blob.size();
          row.cr = compression_ratio(orig_bytes, blob.size());
          const std::vector<double> restored = apply_permutation(reconstructed, strat.inverse);
          row.epsilon = relative_l2_error(field.values, restored);
          row.minla_cost = strat.cost;
          row.ms = config.timing
                       ? std::chrono::duration<double, std::milli>(t1 - t0).count()
                       : 0.0;
          result.report.rows.push_back(std::move(row));
        }
      }
    }
  }

  std::sort(result.report.rows.begin(), result.report.rows.end(),
            [](const EvalRow& a, const EvalRow& b) {
              return std::tie(a.variable, a.strategy, a.codec, a.tau_rel) <
                     std::tie(b.variable, b.strategy, b.codec, b.tau_rel);
            });

  // improvements vs the identity strategy, when it was evaluated
  std::map<std::tuple<std::string, std::string, double>, double> identity_cr;
  for (const EvalRow& r : result.report.rows)
    if (r.strategy == "identity") identity_cr[{r.variable, r.codec, r.tau_rel}] = r.cr;
  for (const EvalRow& r : result.report.rows) {
    if (r.strategy == "identity") continue;
    auto it = identity_cr.find({r.variable, r.codec, r.tau_rel});
    if (it == identity_cr.end()) continue;
    result.improvements.push_back(
        {r.variable, r.strategy, r.codec, r.tau_rel, improvement(r.cr, it->second)});
  }

  // dataset totals per strategy; the order mapping (16 + 8n bytes) is shared
  // by all variables of a strategy, so it is counted once
  const std::uint64_t metadata_bytes = 16 + 8 * static_cast<std::uint64_t>(n);
  std::map<std::string, std::pair<std::uint64_t, std::uint64_t>> per_strategy;
  for (const EvalRow& r : result.report.rows) {
    auto& [orig, comp] = per_strategy[r.strategy];
    orig += r.orig_bytes;
    comp += r.comp_bytes;
  }
  for (const auto& [name, sizes] : per_strategy)
    result.totals.push_back({name, compression_ratio(sizes.first, sizes.second),
                             compression_ratio(sizes.first, sizes.second + metadata_bytes)});

  return result;
}

std::string BenchResult::summary() const {
  std::ostringstream out;
  out << "variable strategy codec tau improvement_vs_identity\n";
  for (const auto& imp : improvements)
    out << imp.variable << ' ' << imp.strategy << ' ' << imp.codec << ' ' << format_real(imp.tau_rel)
        << ' ' << format_real(imp.value) << '\n';
  out << "strategy total_cr total_cr_with_metadata\n";
  for (const auto& total : totals)
    out << total.strategy << ' ' << format_real(total.cr) << ' '
        << format_real(total.cr_with_metadata) << '\n';
  return out.str();
}

}  // namespace umc
