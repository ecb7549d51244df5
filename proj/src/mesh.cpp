#include "umc/mesh.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <cstring>
#include <fstream>
#include <istream>
#include <numbers>
#include <ostream>
#include <sstream>

#include "json.hpp"

namespace umc {

const char* kind_name(ElementKind kind) {
  switch (kind) {
    case ElementKind::segment: return "segment";
    case ElementKind::triangle: return "triangle";
    case ElementKind::quad: return "quad";
    case ElementKind::tetra: return "tetra";
    case ElementKind::hex: return "hex";
  }
  return "?";
}

ElementKind kind_from_name(const std::string& name) {
  if (name == "segment") return ElementKind::segment;
  if (name == "triangle") return ElementKind::triangle;
  if (name == "quad") return ElementKind::quad;
  if (name == "tetra") return ElementKind::tetra;
  if (name == "hex") return ElementKind::hex;
  throw ValidationError("unknown element kind '" + name + "'");
}

void Mesh::validate() const {
  if (dim != 2 && dim != 3) throw ValidationError("mesh dim must be 2 or 3");
  if (coords.size() % static_cast<std::size_t>(dim) != 0)
    throw ValidationError("coords length is not a multiple of dim");
  const std::size_t n = n_nodes();
  for (double c : coords)
    if (!std::isfinite(c)) throw ValidationError("non-finite node coordinate");
  for (std::size_t e = 0; e < elements.size(); ++e) {
    const Element& el = elements[e];
    if (el.nodes.size() != node_count(el.kind))
      throw ValidationError("element " + std::to_string(e) + ": " + kind_name(el.kind) +
                            " must have " + std::to_string(node_count(el.kind)) + " nodes");
    for (std::size_t i = 0; i < el.nodes.size(); ++i) {
      if (el.nodes[i] >= n)
        throw ValidationError("element " + std::to_string(e) + ": node id " +
                              std::to_string(el.nodes[i]) + " out of range");
      for (std::size_t j = i + 1; j < el.nodes.size(); ++j)
        if (el.nodes[i] == el.nodes[j])
          throw ValidationError("element " + std::to_string(e) + ": repeated node id " +
                                std::to_string(el.nodes[i]));
    }
  }
}

Mesh generate_structured(std::size_t nx, std::size_t ny, StructuredKind kind) {
  if (nx == 0 || ny == 0) throw ValidationError("structured mesh needs nx >= 1 and ny >= 1");
  Mesh mesh;
  mesh.dim = 2;
  mesh.coords.reserve((nx + 1) * (ny + 1) * 2);
  for (std::size_t j = 0; j <= ny; ++j)
    for (std::size_t i = 0; i <= nx; ++i) {
      mesh.coords.push_back(static_cast<double>(i) / static_cast<double>(nx));
      mesh.coords.push_back(static_cast<double>(j) / static_cast<double>(ny));
    }
  auto id = [nx](std::size_t i, std::size_t j) -> NodeId {
    return static_cast<NodeId>(j * (nx + 1) + i);
  };
  for (std::size_t j = 0; j < ny; ++j)
    for (std::size_t i = 0; i < nx; ++i) {
      NodeId ll = id(i, j), lr = id(i + 1, j), ur = id(i + 1, j + 1), ul = id(i, j + 1);
      if (kind == StructuredKind::quad) {
        mesh.elements.push_back({ElementKind::quad, {ll, lr, ur, ul}});
      } else {
        mesh.elements.push_back({ElementKind::triangle, {ll, lr, ur}});
        mesh.elements.push_back({ElementKind::triangle, {ll, ur, ul}});
      }
    }
  return mesh;
}

Mesh relabel_mesh(const Mesh& mesh, const Permutation& relabel) {
  const std::size_t n = mesh.n_nodes();
  if (relabel.size() != n) throw ValidationError("relabel length does not match node count");
  Mesh out;
  out.dim = mesh.dim;
  out.coords.resize(mesh.coords.size());
  std::vector<NodeId> new_id(n);
  for (std::size_t i = 0; i < n; ++i) {
    NodeId old = relabel.order[i];
    new_id[old] = static_cast<NodeId>(i);
    for (int d = 0; d < mesh.dim; ++d)
      out.coords[i * mesh.dim + d] = mesh.coords[old * mesh.dim + d];
  }
  out.elements.reserve(mesh.elements.size());
  for (const Element& el : mesh.elements) {
    Element copy{el.kind, el.nodes};
    for (NodeId& v : copy.nodes) v = new_id[v];
    out.elements.push_back(std::move(copy));
  }
  return out;
}

std::pair<Mesh, Permutation> shuffle_node_labels(const Mesh& mesh, std::uint64_t seed) {
  Permutation relabel = random_permutation(mesh.n_nodes(), seed);
  return {relabel_mesh(mesh, relabel), std::move(relabel)};
}

FieldExpr field_expr_from_name(const std::string& name) {
  if (name == "sinprod") return FieldExpr::sinprod;
  if (name == "radial") return FieldExpr::radial;
  if (name == "linear") return FieldExpr::linear;
  throw ValidationError("unknown field expression '" + name + "'");
}

const char* field_expr_name(FieldExpr expr) {
  switch (expr) {
    case FieldExpr::sinprod: return "sinprod";
    case FieldExpr::radial: return "radial";
    case FieldExpr::linear: return "linear";
  }
  return "?";
}

FieldData sample_field(const Mesh& mesh, FieldExpr expr) {
  constexpr double two_pi = 2.0 * std::numbers::pi;
  FieldData field;
  field.name = field_expr_name(expr);
  field.values.reserve(mesh.n_nodes());
  for (std::size_t v = 0; v < mesh.n_nodes(); ++v) {
    const double x = mesh.coords[v * mesh.dim];
    const double y = mesh.coords[v * mesh.dim + 1];
    double f = 0.0;
    switch (expr) {
      case FieldExpr::sinprod: f = std::sin(two_pi * x) * std::sin(two_pi * y); break;
      case FieldExpr::radial:
        f = std::exp(-4.0 * ((x - 0.5) * (x - 0.5) + (y - 0.5) * (y - 0.5)));
        break;
      case FieldExpr::linear: f = x + 2.0 * y; break;
    }
    field.values.push_back(f);
  }
  return field;
}

std::string mesh_to_json(const Mesh& mesh) {
  nlohmann::ordered_json doc;
  doc["dim"] = mesh.dim;
  auto coords = nlohmann::ordered_json::array();
  for (std::size_t v = 0; v < mesh.n_nodes(); ++v) {
    auto pt = nlohmann::ordered_json::array();
    for (int d = 0; d < mesh.dim; ++d) pt.push_back(mesh.coords[v * mesh.dim + d]);
    coords.push_back(std::move(pt));
  }
  doc["coords"] = std::move(coords);
  auto elements = nlohmann::ordered_json::array();
  for (const Element& el : mesh.elements) {
    nlohmann::ordered_json je;
    je["kind"] = kind_name(el.kind);
    je["nodes"] = el.nodes;
    elements.push_back(std::move(je));
  }
  doc["elements"] = std::move(elements);
  return doc.dump(2) + "\n";
}

Mesh mesh_from_json(std::istream& in) {
  nlohmann::json doc;
  try {
    doc = nlohmann::json::parse(in);
  } catch (const nlohmann::json::exception& e) {
    throw ParseError(std::string("invalid mesh JSON: ") + e.what());
  }
  Mesh mesh;
  try {
    mesh.dim = doc.at("dim").get<int>();
    for (const auto& pt : doc.at("coords")) {
      if (static_cast<int>(pt.size()) != mesh.dim)
        throw ParseError("coordinate tuple length does not match dim");
      for (const auto& c : pt) mesh.coords.push_back(c.get<double>());
    }
    for (const auto& je : doc.at("elements")) {
      Element el;
      el.kind = kind_from_name(je.at("kind").get<std::string>());
      for (const auto& v : je.at("nodes")) el.nodes.push_back(v.get<NodeId>());
      mesh.elements.push_back(std::move(el));
    }
  } catch (const nlohmann::json::exception& e) {
    throw ParseError(std::string("invalid mesh JSON: ") + e.what());
  }
  try {
    mesh.validate();
  } catch (const ValidationError& e) {
    throw ParseError(std::string("invalid mesh: ") + e.what());
  }
  return mesh;
}

static bool ends_with(const std::string& s, const std::string& suffix) {
  return s.size() >= suffix.size() && s.compare(s.size() - suffix.size(), suffix.size(), suffix) == 0;
}

Mesh load_mesh(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot open mesh file '" + path + "'");
  if (ends_with(path, ".msh")) return parse_msh_ascii(in);
  return mesh_from_json(in);
}

void save_mesh(const std::string& path, const Mesh& mesh) {
  std::ofstream out(path);
  if (!out) throw Error("cannot write mesh file '" + path + "'");
  out << mesh_to_json(mesh);
  if (!out) throw Error("failed writing mesh file '" + path + "'");
}

void write_field(std::ostream& out, std::span<const double> values) {
  std::uint8_t head[8];
  std::uint64_t n = values.size();
  for (int i = 0; i < 8; ++i) head[i] = static_cast<std::uint8_t>(n >> (8 * i));
  out.write(reinterpret_cast<const char*>(head), 8);
  for (double v : values) {
    std::uint64_t bits = std::bit_cast<std::uint64_t>(v);
    std::uint8_t buf[8];
    for (int i = 0; i < 8; ++i) buf[i] = static_cast<std::uint8_t>(bits >> (8 * i));
    out.write(reinterpret_cast<const char*>(buf), 8);
  }
}

std::vector<double> read_field(std::istream& in) {
  std::uint8_t head[8];
  in.read(reinterpret_cast<char*>(head), 8);
  if (in.gcount() != 8) throw CorruptError("field file: truncated length prefix");
  std::uint64_t n = 0;
  for (int i = 7; i >= 0; --i) n = (n << 8) | head[i];
  std::vector<double> values;
  values.reserve(n);
  for (std::uint64_t k = 0; k < n; ++k) {
    std::uint8_t buf[8];
    in.read(reinterpret_cast<char*>(buf), 8);
    if (in.gcount() != 8) throw CorruptError("field file: truncated payload");
    std::uint64_t bits = 0;
    for (int i = 7; i >= 0; --i) bits = (bits << 8) | buf[i];
    values.push_back(std::bit_cast<double>(bits));
  }
  return values;
}

void save_field(const std::string& path, std::span<const double> values) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw Error("cannot write field file '" + path + "'");
  write_field(out, values);
  if (!out) throw Error("failed writing field file '" + path + "'");
}

std::vector<double> load_field(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw ParseError("cannot open field file '" + path + "'");
  return read_field(in);
}

}  // namespace umc
