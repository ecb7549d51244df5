#include "umc/cli.hpp"

#include <fstream>
#include <iostream>
#include <optional>

#include "CLI11.hpp"
#include "json.hpp"
#include "umc/bench.hpp"
#include "umc/codec.hpp"
#include "umc/external_codec.hpp"
#include "umc/graph.hpp"
#include "umc/mesh.hpp"
#include "umc/metrics.hpp"
#include "umc/ordering.hpp"
#include "umc/permute.hpp"

namespace umc {

namespace {

bool is_builtin_codec(const std::string& id) { return id == "delta" || id == "lorenzo1"; }

void write_text(const std::string& path, const std::string& text) {
  std::ofstream out(path);
  if (!out) throw Error("cannot write file '" + path + "'");
  out << text;
  if (!out) throw Error("failed writing file '" + path + "'");
}

std::string ends_with_json(const std::string& path) {
  return path.size() >= 5 && path.compare(path.size() - 5, 5, ".json") == 0 ? "json" : "csv";
}

struct GenArgs {
  std::size_t nx = 1, ny = 1;
  std::string kind = "quad";
  std::optional<std::uint64_t> shuffle_seed;
  std::string out;
  std::string field;
  std::string field_out;
};

int run_gen(const GenArgs& args) {
  Mesh mesh = generate_structured(args.nx, args.ny,
                                  args.kind == "tri" ? StructuredKind::tri : StructuredKind::quad);
  if (args.shuffle_seed) mesh = shuffle_node_labels(mesh, *args.shuffle_seed).first;
  save_mesh(args.out, mesh);
  std::cout << "nodes: " << mesh.n_nodes() << "\nelements: " << mesh.elements.size() << "\n";
  if (!args.field.empty()) {
    if (args.field_out.empty()) throw ValidationError("--field requires --field-out");
    const FieldData field = sample_field(mesh, field_expr_from_name(args.field));
    save_field(args.field_out, field.values);
    std::cout << "field '" << field.name << "': " << field.values.size() << " values\n";
  }
  return 0;
}

struct OrderArgs {
  std::string mesh_path;
  std::string strategy = "greedy";
  NodeId start = 0;
  std::string out;
  std::string dump_adjacency_path;
};

int run_order(const OrderArgs& args) {
  const Mesh mesh = load_mesh(args.mesh_path);
  const Graph graph = build_traversal_graph(mesh);
  if (!args.dump_adjacency_path.empty()) {
    std::ofstream dump(args.dump_adjacency_path);
    if (!dump) throw Error("cannot write '" + args.dump_adjacency_path + "'");
    dump_adjacency(graph, dump);
  }
  const OrderingStrategy strategy = OrderingStrategy::from_string(args.strategy);
  Permutation perm;
  if (strategy.kind == OrderingStrategy::Kind::greedy)
    perm = greedy_order(graph, mesh.coords, mesh.dim, args.start);
  else
    perm = order_nodes(strategy, graph, mesh.coords, mesh.dim);
  save_permutation(args.out, perm);
  std::cout << "nodes: " << graph.n_nodes() << "\n"
            << "components: " << component_count(graph) << "\n"
            << "minla(" << args.strategy << "): " << minla_cost(graph, perm) << "\n"
            << "minla(identity): "
            << minla_cost(graph, Permutation::identity(graph.n_nodes())) << "\n";
  return 0;
}

struct CompressArgs {
  std::string field_path;
  std::string perm_path;
  double tau = 0.0;
  std::string codec = "delta";
  std::string compress_cmd;
  std::string out;
};

int run_compress(const CompressArgs& args) {
  const std::vector<double> values = load_field(args.field_path);
  const Permutation perm = load_permutation(args.perm_path);
  const std::vector<double> serialized = apply_permutation(values, perm);
  const double eb = relative_to_absolute_bound(values, args.tau);

  if (is_builtin_codec(args.codec)) {
    const CompressedStream stream =
        compress(serialized, eb, predictor_from_name(args.codec));
    save_stream(args.out, stream);
    std::cout << "compressed " << stream.n << " values to " << stream.total_bytes()
              << " bytes (cr " << compression_ratio(8 * stream.n, stream.total_bytes())
              << ")\n";
  } else {
    if (args.compress_cmd.empty())
      throw ValidationError("codec '" + args.codec + "' needs --compress-cmd");
    const ExternalCodec codec{args.codec, args.compress_cmd, ""};
    const auto blob = external_compress(codec, serialized, args.tau);
    std::ofstream out(args.out, std::ios::binary);
    if (!out) throw Error("cannot write stream file '" + args.out + "'");
    out.write(reinterpret_cast<const char*>(blob.data()),
              static_cast<std::streamsize>(blob.size()));
    if (!out) throw Error("failed writing stream file '" + args.out + "'");
    std::cout << "compressed " << values.size() << " values to " << blob.size() << " bytes\n";
  }

  nlohmann::ordered_json sidecar;
  sidecar["tau_rel"] = args.tau;
  sidecar["eb_abs"] = eb;
  sidecar["codec"] = args.codec;
  sidecar["perm_file"] = args.perm_path;
  write_text(args.out + ".json", sidecar.dump(2) + "\n");
  return 0;
}

struct DecompressArgs {
  std::string stream_path;
  std::string perm_path;
  std::string sidecar_path;
  std::string decompress_cmd;
  std::string out;
};

int run_decompress(const DecompressArgs& args) {
  const Permutation perm = load_permutation(args.perm_path);

  std::string codec_id = "delta";
  double tau = 0.0;
  const std::string sidecar_path =
      args.sidecar_path.empty() ? args.stream_path + ".json" : args.sidecar_path;
  if (std::ifstream sidecar(sidecar_path); sidecar) {
    try {
      const auto doc = nlohmann::json::parse(sidecar);
      codec_id = doc.at("codec").get<std::string>();
      tau = doc.at("tau_rel").get<double>();
    } catch (const nlohmann::json::exception& e) {
      throw ParseError("invalid sidecar '" + sidecar_path + "': " + e.what());
    }
  }

  std::vector<double> serialized;
  if (is_builtin_codec(codec_id) && args.decompress_cmd.empty()) {
    const CompressedStream stream = load_stream(args.stream_path);
    if (stream.n != perm.size())
      throw CorruptError("stream length " + std::to_string(stream.n) +
                         " does not match permutation length " + std::to_string(perm.size()));
    serialized = decompress(stream);
  } else {
    if (args.decompress_cmd.empty())
      throw ValidationError("codec '" + codec_id + "' needs --decompress-cmd");
    std::ifstream in(args.stream_path, std::ios::binary);
    if (!in) throw ParseError("cannot open stream file '" + args.stream_path + "'");
    const std::vector<std::uint8_t> blob((std::istreambuf_iterator<char>(in)),
                                         std::istreambuf_iterator<char>());
    const ExternalCodec codec{codec_id, "", args.decompress_cmd};
    serialized = external_decompress(codec, blob, perm.size(), tau);
  }

  const std::vector<double> values = apply_permutation(serialized, invert_permutation(perm));
  save_field(args.out, values);
  std::cout << "restored " << values.size() << " values\n";
  return 0;
}

struct BenchArgs {
  std::string mesh_path;
  std::vector<std::string> fields = {"sinprod"};
  std::vector<std::string> strategies = {"identity", "greedy"};
  std::vector<double> taus = {1e-3, 1e-4, 1e-5};
  std::vector<std::string> codecs = {"delta"};
  std::string compress_cmd;
  std::string decompress_cmd;
  std::optional<std::uint64_t> shuffle_seed;
  NodeId start = 0;
  std::string report;
  std::string format;
  bool timing = false;
};

int run_bench_cmd(const BenchArgs& args) {
  Mesh mesh = load_mesh(args.mesh_path);
  if (args.shuffle_seed) mesh = shuffle_node_labels(mesh, *args.shuffle_seed).first;

  BenchConfig config;
  for (const auto& f : args.fields) config.fields.push_back(field_expr_from_name(f));
  for (const auto& s : args.strategies)
    config.strategies.push_back(OrderingStrategy::from_string(s));
  config.taus = args.taus;
  for (const auto& c : args.codecs) {
    if (is_builtin_codec(c)) {
      config.predictors.push_back(predictor_from_name(c));
    } else {
      if (args.compress_cmd.empty() || args.decompress_cmd.empty())
        throw ValidationError("codec '" + c +
                              "' needs --compress-cmd and --decompress-cmd");
      if (config.external) throw ValidationError("only one external codec per run");
      config.external = ExternalCodec{c, args.compress_cmd, args.decompress_cmd};
    }
  }
  config.greedy_start = args.start;
  config.timing = args.timing;

  const BenchResult result = run_bench(mesh, config);
  const std::string format = args.format.empty() ? ends_with_json(args.report) : args.format;
  const std::string text = emit_report(result.report, report_format_from_name(format));
  if (args.report.empty())
    std::cout << text;
  else
    write_text(args.report, text);
  std::cout << result.summary();
  return 0;
}

}  // namespace

int cli_main(int argc, const char* const* argv) {
  CLI::App app{"field compression for unstructured meshes via node reordering"};
  app.require_subcommand(1);

  GenArgs gen;
  auto* cmd_gen = app.add_subcommand("gen", "generate a structured test mesh");
  cmd_gen->add_option("--nx", gen.nx, "cells in x")->check(CLI::PositiveNumber);
  cmd_gen->add_option("--ny", gen.ny, "cells in y")->check(CLI::PositiveNumber);
  cmd_gen->add_option("--kind", gen.kind, "quad|tri")->check(CLI::IsMember({"quad", "tri"}));
  cmd_gen->add_option("--shuffle-seed", gen.shuffle_seed, "relabel nodes pseudorandomly");
  cmd_gen->add_option("--out", gen.out, "output mesh path (.json)")->required();
  cmd_gen->add_option("--field", gen.field, "also sample a field: sinprod|radial|linear");
  cmd_gen->add_option("--field-out", gen.field_out, "output field path");

  OrderArgs order;
  auto* cmd_order = app.add_subcommand("order", "compute a serialization order");
  cmd_order->add_option("mesh", order.mesh_path, "mesh file (.msh or .json)")->required();
  cmd_order->add_option("--strategy", order.strategy,
                        "identity|random[:seed]|greedy|bfs|rcm");
  cmd_order->add_option("--start", order.start, "start node for greedy");
  cmd_order->add_option("--out", order.out, "output permutation path")->required();
  cmd_order->add_option("--dump-adjacency", order.dump_adjacency_path,
                        "write adjacency lists for debugging");

  CompressArgs comp;
  auto* cmd_compress = app.add_subcommand("compress", "compress a field along an order");
  cmd_compress->add_option("field", comp.field_path, "field file")->required();
  cmd_compress->add_option("perm", comp.perm_path, "permutation file")->required();
  cmd_compress->add_option("--tau", comp.tau, "relative tolerance")->required();
  cmd_compress->add_option("--codec", comp.codec, "delta|lorenzo1|<external name>");
  cmd_compress->add_option("--compress-cmd", comp.compress_cmd,
                           "external command, tokens {in} {out} {tol} {n}");
  cmd_compress->add_option("--out", comp.out, "output stream path")->required();

  DecompressArgs dec;
  auto* cmd_decompress = app.add_subcommand("decompress", "restore a field to node order");
  cmd_decompress->add_option("stream", dec.stream_path, "compressed stream")->required();
  cmd_decompress->add_option("perm", dec.perm_path, "permutation file")->required();
  cmd_decompress->add_option("--sidecar", dec.sidecar_path, "sidecar path (default <stream>.json)");
  cmd_decompress->add_option("--decompress-cmd", dec.decompress_cmd,
                             "external command, tokens {in} {out} {tol} {n}");
  cmd_decompress->add_option("--out", dec.out, "output field path")->required();

  BenchArgs bench;
  auto* cmd_bench = app.add_subcommand("bench", "cross-product evaluation with a report");
  cmd_bench->add_option("mesh", bench.mesh_path, "mesh file")->required();
  cmd_bench->add_option("--fields", bench.fields, "sinprod,radial,linear")->delimiter(',');
  cmd_bench->add_option("--strategies", bench.strategies, "ordering strategies")->delimiter(',');
  cmd_bench->add_option("--taus", bench.taus, "relative tolerances")->delimiter(',');
  cmd_bench->add_option("--codecs", bench.codecs, "delta,lorenzo1 or an external name")
      ->delimiter(',');
  cmd_bench->add_option("--compress-cmd", bench.compress_cmd, "external compress command");
  cmd_bench->add_option("--decompress-cmd", bench.decompress_cmd, "external decompress command");
  cmd_bench->add_option("--shuffle-seed", bench.shuffle_seed, "relabel nodes before evaluating");
  cmd_bench->add_option("--start", bench.start, "start node for greedy");
  cmd_bench->add_option("--report", bench.report, "report path (.csv or .json)");
  cmd_bench->add_option("--format", bench.format, "csv|json override");
  cmd_bench->add_flag("--timing", bench.timing, "record wall times (non-deterministic)");

  try {
    app.parse(argc, argv);
    if (cmd_gen->parsed()) return run_gen(gen);
    if (cmd_order->parsed()) return run_order(order);
    if (cmd_compress->parsed()) return run_compress(comp);
    if (cmd_decompress->parsed()) return run_decompress(dec);
    if (cmd_bench->parsed()) return run_bench_cmd(bench);
    return 2;
  } catch (const CLI::ParseError& e) {
    const int rc = app.exit(e);
    return rc == 0 ? 0 : 2;
  } catch (const CorruptError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 3;
  } catch (const ValidationError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const ParseError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
}

}  // namespace umc
