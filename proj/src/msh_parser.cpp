#include <cerrno>
#include <cmath>
#include <cstdlib>
#include <istream>
#include <limits>
#include <string>
#include <unordered_map>
#include <vector>

#include "umc/mesh.hpp"

namespace umc {
namespace {

// Whitespace tokenizer that tracks the current line for error reporting.
class Lexer {
public:
  explicit Lexer(std::istream& in) : in_(in) {}

  std::size_t line() const { return line_; }

  // next token, or empty string at end of input
  std::string next() {
    std::string tok;
    int c;
    while ((c = in_.get()) != EOF) {
      if (c == '\n') {
        if (!tok.empty()) {
          in_.unget();
          return tok;
        }
        ++line_;
      } else if (c == ' ' || c == '\t' || c == '\r') {
        if (!tok.empty()) return tok;
      } else {
        tok.push_back(static_cast<char>(c));
      }
    }
    return tok;
  }

  std::string expect(const char* what) {
    std::string tok = next();
    if (tok.empty()) throw ParseError(line_, std::string("unexpected end of file, expected ") + what);
    return tok;
  }

  std::uint64_t expect_u64(const char* what) {
    std::string tok = expect(what);
    errno = 0;
    char* end = nullptr;
    unsigned long long v = std::strtoull(tok.c_str(), &end, 10);
    if (errno != 0 || end == tok.c_str() || *end != '\0')
      throw ParseError(line_, std::string("expected ") + what + ", got '" + tok + "'");
    return v;
  }

  double expect_double(const char* what) {
    std::string tok = expect(what);
    errno = 0;
    char* end = nullptr;
    double v = std::strtod(tok.c_str(), &end);
    if (end == tok.c_str() || *end != '\0')
      throw ParseError(line_, std::string("expected ") + what + ", got '" + tok + "'");
    return v;  // overflow yields +-inf, caught by the finiteness check
  }

private:
  std::istream& in_;
  std::size_t line_ = 1;
};

ElementKind kind_from_msh_type(std::uint64_t type, std::size_t line) {
  switch (type) {
    case 1: return ElementKind::segment;
    case 2: return ElementKind::triangle;
    case 3: return ElementKind::quad;
    case 4: return ElementKind::tetra;
    case 5: return ElementKind::hex;
    default: throw ParseError(line, "unknown element type " + std::to_string(type));
  }
}

}  // namespace

Mesh parse_msh_ascii(std::istream& in) {
  Lexer lex(in);
  std::vector<double> xyz;                            // 3 per node, input order
  std::unordered_map<std::uint64_t, NodeId> node_of_tag;  // MSH tag -> dense id
  std::vector<Element> elements;
  bool seen_format = false;

  for (std::string tok = lex.next(); !tok.empty(); tok = lex.next()) {
    if (tok.empty() || tok[0] != '$')
      throw ParseError(lex.line(), "expected section header, got '" + tok + "'");
    const std::string section = tok.substr(1);
    if (section.rfind("End", 0) == 0)
      throw ParseError(lex.line(), "unexpected section terminator $" + section);

    if (section == "MeshFormat") {
      std::string version = lex.expect("format version");
      if (version != "4.1")
        throw ParseError(lex.line(), "unsupported MSH version '" + version + "', need 4.1");
      std::uint64_t file_type = lex.expect_u64("file type");
      if (file_type != 0) throw ParseError(lex.line(), "binary MSH files are not supported");
      lex.expect_u64("data size");
      if (lex.expect("section terminator") != "$EndMeshFormat")
        throw ParseError(lex.line(), "expected $EndMeshFormat");
      seen_format = true;
    } else if (section == "Nodes") {
      const std::uint64_t num_blocks = lex.expect_u64("entity block count");
      const std::uint64_t num_nodes = lex.expect_u64("node count");
      lex.expect_u64("min node tag");
      lex.expect_u64("max node tag");
      for (std::uint64_t b = 0; b < num_blocks; ++b) {
        lex.expect_u64("entity dim");
        lex.expect_u64("entity tag");
        const std::uint64_t parametric = lex.expect_u64("parametric flag");
        if (parametric != 0)
          throw ParseError(lex.line(), "parametric nodes are not supported");
        const std::uint64_t in_block = lex.expect_u64("block node count");
        std::vector<std::uint64_t> tags(in_block);
        for (std::uint64_t k = 0; k < in_block; ++k) {
          tags[k] = lex.expect_u64("node tag");
          if (node_of_tag.count(tags[k]))
            throw ParseError(lex.line(), "duplicate node tag " + std::to_string(tags[k]));
          node_of_tag.emplace(tags[k], static_cast<NodeId>(node_of_tag.size()));
        }
        for (std::uint64_t k = 0; k < in_block; ++k) {
          for (int d = 0; d < 3; ++d) {
            double c = lex.expect_double("node coordinate");
            if (!std::isfinite(c))
              throw ParseError(lex.line(), "non-finite coordinate for node tag " +
                                               std::to_string(tags[k]));
            xyz.push_back(c);
          }
        }
      }
      if (node_of_tag.size() != num_nodes)
        throw ParseError(lex.line(), "node count mismatch in $Nodes");
      if (lex.expect("section terminator") != "$EndNodes")
        throw ParseError(lex.line(), "expected $EndNodes");
    } else if (section == "Elements") {
      const std::uint64_t num_blocks = lex.expect_u64("entity block count");
      const std::uint64_t num_elements = lex.expect_u64("element count");
      lex.expect_u64("min element tag");
      lex.expect_u64("max element tag");
      for (std::uint64_t b = 0; b < num_blocks; ++b) {
        lex.expect_u64("entity dim");
        lex.expect_u64("entity tag");
        const std::uint64_t type = lex.expect_u64("element type");
        const ElementKind kind = kind_from_msh_type(type, lex.line());
        const std::uint64_t in_block = lex.expect_u64("block element count");
        for (std::uint64_t k = 0; k < in_block; ++k) {
          lex.expect_u64("element tag");
          Element el{kind, {}};
          el.nodes.reserve(node_count(kind));
          for (std::size_t i = 0; i < node_count(kind); ++i) {
            const std::uint64_t tag = lex.expect_u64("node reference");
            auto it = node_of_tag.find(tag);
            if (it == node_of_tag.end())
              throw ParseError(lex.line(),
                               "node reference to absent id " + std::to_string(tag));
            el.nodes.push_back(it->second);
          }
          elements.push_back(std::move(el));
        }
      }
      if (num_elements != elements.size())
        throw ParseError(lex.line(), "element count mismatch in $Elements");
      if (lex.expect("section terminator") != "$EndElements")
        throw ParseError(lex.line(), "expected $EndElements");
    } else {
      // unsupported section: skip to its terminator
      const std::string terminator = "$End" + section;
      std::string t = lex.next();
      while (!t.empty() && t != terminator) t = lex.next();
      if (t.empty())
        throw ParseError(lex.line(), "unterminated section $" + section);
    }
  }

  if (!seen_format) throw ParseError(lex.line(), "missing $MeshFormat section");

  // drop the z column when the mesh is planar
  const std::size_t n = node_of_tag.size();
  bool planar = true;
  for (std::size_t v = 0; v < n && planar; ++v) planar = (xyz[v * 3 + 2] == 0.0);
  Mesh mesh;
  mesh.dim = planar ? 2 : 3;
  mesh.coords.reserve(n * mesh.dim);
  for (std::size_t v = 0; v < n; ++v)
    for (int d = 0; d < mesh.dim; ++d) mesh.coords.push_back(xyz[v * 3 + d]);
  mesh.elements = std::move(elements);
  try {
    mesh.validate();
  } catch (const ValidationError& e) {
    throw ParseError(std::string("invalid mesh: ") + e.what());
  }
  return mesh;
}

}  // namespace umc
