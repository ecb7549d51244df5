#include <algorithm>
#include <sstream>

#include "doctest.h"
#include "test_util.hpp"
#include "umc/mesh.hpp"
#include "umc/permute.hpp"

using namespace umc;

namespace {

Mesh parse(const std::string& text) {
  std::istringstream in(text);
  return parse_msh_ascii(in);
}

const char* kMinimalMsh = R"($MeshFormat
4.1 0 8
$EndMeshFormat
$Nodes
1 3 1 3
2 1 0 3
1
2
3
0 0 0
1 0 0
0 1 0
$EndNodes
$Elements
1 1 1 1
2 1 2 1
1 1 2 3
$EndElements
)";

}  // namespace

TEST_CASE("msh: minimal triangle fixture") {
  const Mesh mesh = parse(kMinimalMsh);
  CHECK(mesh.n_nodes() == 3);
  CHECK(mesh.dim == 2);
  REQUIRE(mesh.elements.size() == 1);
  CHECK(mesh.elements[0].kind == ElementKind::triangle);
  CHECK(mesh.elements[0].nodes == std::vector<NodeId>{0, 1, 2});
  CHECK(mesh.coord(1)[0] == 1.0);
  CHECK(mesh.coord(2)[1] == 1.0);
}

TEST_CASE("msh: element referencing absent node") {
  const char* text = R"($MeshFormat
4.1 0 8
$EndMeshFormat
$Nodes
0 0 1 0
$EndNodes
$Elements
1 1 1 1
2 1 2 1
1 1 2 3
$EndElements
)";
  CHECK_THROWS_WITH_AS(parse(text), doctest::Contains("node reference to absent id"),
                       ParseError);
}

TEST_CASE("msh: format section alone gives an empty mesh") {
  const Mesh mesh = parse("$MeshFormat\n4.1 0 8\n$EndMeshFormat\n");
  CHECK(mesh.n_nodes() == 0);
  CHECK(mesh.elements.empty());
}

TEST_CASE("msh: errors carry line numbers") {
  SUBCASE("malformed section header") {
    CHECK_THROWS_WITH_AS(parse("$MeshFormat\n9.9 0 8\n$EndMeshFormat\n"),
                         doctest::Contains("line 2"), ParseError);
  }
  SUBCASE("unknown element type") {
    std::string text(kMinimalMsh);
    const auto at = text.find("2 1 2 1");
    text.replace(at, 7, "2 1 9 1");
    try {
      parse(text);
      FAIL("expected ParseError");
    } catch (const ParseError& e) {
      CHECK(std::string(e.what()).find("unknown element type 9") != std::string::npos);
      CHECK(std::string(e.what()).find("line 16") != std::string::npos);
    }
  }
  SUBCASE("non-finite coordinate") {
    std::string text(kMinimalMsh);
    const auto at = text.find("1 0 0");
    text.replace(at, 5, "1e999 0 0");
    CHECK_THROWS_WITH_AS(parse(text), doctest::Contains("non-finite coordinate"), ParseError);
  }
  SUBCASE("truncated section") {
    CHECK_THROWS_AS(parse("$MeshFormat\n4.1 0 8\n"), ParseError);
  }
}

TEST_CASE("msh: unrelated sections are skipped") {
  std::string text(kMinimalMsh);
  text.insert(text.find("$Nodes"), "$Entities\n0 1 0 0\nanything at all\n$EndEntities\n");
  CHECK(parse(text).n_nodes() == 3);
}

TEST_CASE("msh: nonzero z column keeps three coordinates") {
  std::string text(kMinimalMsh);
  const auto at = text.find("0 1 0");
  text.replace(at, 5, "0 1 2");
  const Mesh mesh = parse(text);
  CHECK(mesh.dim == 3);
  CHECK(mesh.coord(2)[2] == 2.0);
}

TEST_CASE("structured mesh generation") {
  SUBCASE("single quad cell") {
    const Mesh mesh = generate_structured(1, 1, StructuredKind::quad);
    CHECK(mesh.n_nodes() == 4);
    REQUIRE(mesh.elements.size() == 1);
    CHECK(mesh.elements[0].nodes == std::vector<NodeId>{0, 1, 3, 2});
  }
  SUBCASE("two quad cells in a row") {
    const Mesh mesh = generate_structured(2, 1, StructuredKind::quad);
    CHECK(mesh.n_nodes() == 6);
    REQUIRE(mesh.elements.size() == 2);
    CHECK(mesh.elements[0].nodes == std::vector<NodeId>{0, 1, 4, 3});
    CHECK(mesh.elements[1].nodes == std::vector<NodeId>{1, 2, 5, 4});
  }
  SUBCASE("single cell split into triangles") {
    const Mesh mesh = generate_structured(1, 1, StructuredKind::tri);
    CHECK(mesh.n_nodes() == 4);
    REQUIRE(mesh.elements.size() == 2);
    CHECK(mesh.elements[0].nodes == std::vector<NodeId>{0, 1, 3});
    CHECK(mesh.elements[1].nodes == std::vector<NodeId>{0, 3, 2});
  }
  SUBCASE("zero cell count is rejected") {
    CHECK_THROWS_AS(generate_structured(0, 3, StructuredKind::quad), ValidationError);
  }
  SUBCASE("counts and interior quad incidence") {
    const std::size_t nx = 5, ny = 4;
    const Mesh mesh = generate_structured(nx, ny, StructuredKind::quad);
    CHECK(mesh.n_nodes() == (nx + 1) * (ny + 1));
    CHECK(mesh.elements.size() == nx * ny);
    std::vector<int> incidence(mesh.n_nodes(), 0);
    for (const Element& el : mesh.elements)
      for (NodeId v : el.nodes) ++incidence[static_cast<std::size_t>(v)];
    for (std::size_t j = 1; j < ny; ++j)
      for (std::size_t i = 1; i < nx; ++i) CHECK(incidence[j * (nx + 1) + i] == 4);
  }
}

TEST_CASE("node label shuffling") {
  const Mesh mesh = generate_structured(4, 3, StructuredKind::quad);

  SUBCASE("same seed gives the same mesh") {
    const auto [a, pa] = shuffle_node_labels(mesh, 42);
    const auto [b, pb] = shuffle_node_labels(mesh, 42);
    CHECK(a.coords == b.coords);
    CHECK(pa == pb);
    REQUIRE(a.elements.size() == b.elements.size());
    for (std::size_t e = 0; e < a.elements.size(); ++e)
      CHECK(a.elements[e].nodes == b.elements[e].nodes);
  }
  SUBCASE("single node shuffles to identity") {
    Mesh tiny;
    tiny.dim = 2;
    tiny.coords = {0.5, 0.5};
    const auto [shuffled, relabel] = shuffle_node_labels(tiny, 7);
    CHECK(relabel.order == std::vector<NodeId>{0});
    CHECK(shuffled.coords == tiny.coords);
  }
  SUBCASE("coordinates are permuted, never changed") {
    const auto [shuffled, relabel] = shuffle_node_labels(mesh, 99);
    auto sorted_points = [](const Mesh& m) {
      std::vector<std::pair<double, double>> pts;
      for (std::size_t v = 0; v < m.n_nodes(); ++v)
        pts.emplace_back(m.coords[v * 2], m.coords[v * 2 + 1]);
      std::sort(pts.begin(), pts.end());
      return pts;
    };
    CHECK(sorted_points(shuffled) == sorted_points(mesh));
  }
  SUBCASE("inverse relabel restores the original") {
    const auto [shuffled, relabel] = shuffle_node_labels(mesh, 1234);
    const Mesh restored = relabel_mesh(shuffled, invert_permutation(relabel));
    CHECK(restored.coords == mesh.coords);
    REQUIRE(restored.elements.size() == mesh.elements.size());
    for (std::size_t e = 0; e < mesh.elements.size(); ++e)
      CHECK(restored.elements[e].nodes == mesh.elements[e].nodes);
  }
}

TEST_CASE("field sampling") {
  Mesh mesh;
  mesh.dim = 2;
  mesh.coords = {0.25, 0.25, 0.0, 0.0, 0.5, 0.5};
  SUBCASE("sinprod peaks at the quarter point") {
    CHECK(sample_field(mesh, FieldExpr::sinprod).values[0] == doctest::Approx(1.0).epsilon(1e-12));
  }
  SUBCASE("linear vanishes at the origin") {
    CHECK(sample_field(mesh, FieldExpr::linear).values[1] == 0.0);
  }
  SUBCASE("radial peaks at the center") {
    CHECK(sample_field(mesh, FieldExpr::radial).values[2] == 1.0);
  }
  SUBCASE("sampling commutes with relabeling") {
    const Mesh grid = generate_structured(6, 5, StructuredKind::quad);
    const auto [shuffled, relabel] = shuffle_node_labels(grid, 5);
    const FieldData direct = sample_field(shuffled, FieldExpr::sinprod);
    const FieldData via_perm = sample_field(grid, FieldExpr::sinprod);
    CHECK(direct.values == apply_permutation(via_perm.values, relabel));
  }
}

TEST_CASE("native mesh JSON round-trips bitwise") {
  Mesh mesh = generate_structured(3, 2, StructuredKind::tri);
  mesh.coords[0] = 0.1;      // not exactly representable
  mesh.coords[1] = 1.0 / 3;  // forces full-precision output
  std::istringstream round1(mesh_to_json(mesh));
  const Mesh parsed = mesh_from_json(round1);
  CHECK(parsed.dim == mesh.dim);
  CHECK(parsed.coords == mesh.coords);
  REQUIRE(parsed.elements.size() == mesh.elements.size());
  for (std::size_t e = 0; e < mesh.elements.size(); ++e) {
    CHECK(parsed.elements[e].kind == mesh.elements[e].kind);
    CHECK(parsed.elements[e].nodes == mesh.elements[e].nodes);
  }
  CHECK(mesh_to_json(parsed) == mesh_to_json(mesh));
}

TEST_CASE("msh parse then native round-trip") {
  const Mesh mesh = parse(kMinimalMsh);
  std::istringstream in(mesh_to_json(mesh));
  const Mesh again = mesh_from_json(in);
  CHECK(again.coords == mesh.coords);
  CHECK(again.elements[0].nodes == mesh.elements[0].nodes);
}

TEST_CASE("native JSON validation") {
  std::istringstream bad_ref(R"({"dim":2,"coords":[[0,0]],"elements":[{"kind":"segment","nodes":[0,5]}]})");
  CHECK_THROWS_AS(mesh_from_json(bad_ref), ParseError);
  std::istringstream bad_kind(R"({"dim":2,"coords":[],"elements":[{"kind":"prism","nodes":[]}]})");
  CHECK_THROWS_AS(mesh_from_json(bad_kind), ParseError);
  std::istringstream not_json("not json at all");
  CHECK_THROWS_AS(mesh_from_json(not_json), ParseError);
}

TEST_CASE("field file round-trip") {
  using namespace umc::test;
  const std::vector<double> values = random_values(257, 11, -100.0, 100.0);
  std::ostringstream out;
  write_field(out, values);
  const std::string bytes = out.str();
  CHECK(bytes.size() == 8 + 8 * values.size());
  std::istringstream in(bytes);
  CHECK(read_field(in) == values);

  std::istringstream truncated(bytes.substr(0, bytes.size() - 3));
  CHECK_THROWS_AS(read_field(truncated), CorruptError);
}

TEST_CASE("mesh validation catches bad elements") {
  Mesh mesh = generate_structured(1, 1, StructuredKind::quad);
  SUBCASE("out of range id") {
    mesh.elements[0].nodes[2] = 17;
    CHECK_THROWS_AS(mesh.validate(), ValidationError);
  }
  SUBCASE("repeated id") {
    mesh.elements[0].nodes[2] = mesh.elements[0].nodes[0];
    CHECK_THROWS_AS(mesh.validate(), ValidationError);
  }
}
