#ifndef UMC_MESH_HPP
#define UMC_MESH_HPP

#include <cstdint>
#include <iosfwd>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "umc/errors.hpp"
#include "umc/permutation.hpp"

namespace umc {

enum class ElementKind : std::uint8_t { segment, triangle, quad, tetra, hex };

constexpr std::size_t node_count(ElementKind kind) {
  switch (kind) {
    case ElementKind::segment: return 2;
    case ElementKind::triangle: return 3;
    case ElementKind::quad: return 4;
    case ElementKind::tetra: return 4;
    case ElementKind::hex: return 8;
  }
  return 0;
}

const char* kind_name(ElementKind kind);
ElementKind kind_from_name(const std::string& name);

struct Element {
  ElementKind kind;
  std::vector<NodeId> nodes;  // ordered, 0-based, pairwise distinct
};

// Nodes with explicit element connectivity. Node ids are dense 0-based;
// coords is row-major with `dim` doubles per node.
struct Mesh {
  int dim = 2;  // 2 or 3
  std::vector<double> coords;
  std::vector<Element> elements;

  std::size_t n_nodes() const {
    return dim > 0 ? coords.size() / static_cast<std::size_t>(dim) : 0;
  }

  std::span<const double> coord(NodeId v) const {
    return std::span<const double>(coords).subspan(static_cast<std::size_t>(v) * dim, dim);
  }

  // Checks all structural invariants; throws ValidationError on the first hit.
  void validate() const;
};

struct FieldData {
  std::string name;
  std::vector<double> values;  // one per node, indexed by node id
};

// --- ingestion -------------------------------------------------------------

// Gmsh MSH 4.1 ASCII subset: $MeshFormat, $Nodes, $Elements; element types
// 1 (segment), 2 (triangle), 3 (quad), 4 (tetra), 5 (hex). Other sections are
// skipped. Node tags are remapped to dense 0-based ids in order of appearance.
// Errors are reported as ParseError with the offending line number.
Mesh parse_msh_ascii(std::istream& in);

enum class StructuredKind { quad, tri };

// (nx+1)*(ny+1) nodes on the unit square in row-major order; quads are
// [ll, lr, ur, ul] per cell, tris split each quad along the ll-ur diagonal.
Mesh generate_structured(std::size_t nx, std::size_t ny, StructuredKind kind);

// Rebuilds the mesh with node new_id taken from old node relabel.order[new_id];
// element connectivity is rewritten through the inverse map.
Mesh relabel_mesh(const Mesh& mesh, const Permutation& relabel);

// Seeded pseudorandom relabeling (SplitMix64 + Fisher-Yates). Returns the
// shuffled mesh and the relabel permutation; relabel_mesh with its inverse
// restores the input exactly.
std::pair<Mesh, Permutation> shuffle_node_labels(const Mesh& mesh, std::uint64_t seed);

enum class FieldExpr { sinprod, radial, linear };

FieldExpr field_expr_from_name(const std::string& name);
const char* field_expr_name(FieldExpr expr);

// sinprod: sin(2*pi*x)*sin(2*pi*y); radial: exp(-4*((x-1/2)^2+(y-1/2)^2));
// linear: x + 2*y. Evaluated per node on the first two coordinates.
FieldData sample_field(const Mesh& mesh, FieldExpr expr);

// --- native formats ---------------------------------------------------------

// JSON document {dim, coords:[[...],...], elements:[{kind, nodes:[...]},...]}.
// Doubles are emitted with enough digits to round-trip bitwise.
std::string mesh_to_json(const Mesh& mesh);
Mesh mesh_from_json(std::istream& in);

// Dispatches on extension: ".msh" -> Gmsh subset, anything else -> native JSON.
Mesh load_mesh(const std::string& path);
void save_mesh(const std::string& path, const Mesh& mesh);

// Field file: u64 LE count followed by count little-endian binary64 values.
void write_field(std::ostream& out, std::span<const double> values);
std::vector<double> read_field(std::istream& in);
void save_field(const std::string& path, std::span<const double> values);
std::vector<double> load_field(const std::string& path);

}  // namespace umc

#endif
