#include "umc/permute.hpp"

#include <fstream>

#include "umc/bytes.hpp"
#include "umc/errors.hpp"

namespace umc {

namespace {
constexpr char kMagic[4] = {'U', 'M', 'R', 'P'};
constexpr std::uint16_t kVersion = 1;
}  // namespace

std::vector<double> apply_permutation(std::span<const double> values, const Permutation& perm) {
  if (values.size() != perm.size())
    throw ValidationError("value count does not match permutation length");
  std::vector<double> out(values.size());
  for (std::size_t i = 0; i < out.size(); ++i)
    out[i] = values[static_cast<std::size_t>(perm.order[i])];
  return out;
}

Permutation invert_permutation(const Permutation& perm) {
  Permutation inv;
  inv.order.resize(perm.size());
  for (std::size_t i = 0; i < perm.size(); ++i)
    inv.order[static_cast<std::size_t>(perm.order[i])] = static_cast<NodeId>(i);
  return inv;
}

std::vector<std::uint8_t> write_permutation(const Permutation& perm) {
  std::vector<std::uint8_t> out;
  out.reserve(16 + 8 * perm.size());
  for (char c : kMagic) out.push_back(static_cast<std::uint8_t>(c));
  put_u16le(out, kVersion);
  put_u16le(out, 0);  // reserved
  put_u64le(out, perm.size());
  for (NodeId v : perm.order) put_u64le(out, v);
  return out;
}

Permutation read_permutation(std::span<const std::uint8_t> bytes) {
  ByteReader in(bytes);
  std::uint8_t magic[4];
  in.bytes(magic, 4);
  for (int i = 0; i < 4; ++i)
    if (magic[i] != static_cast<std::uint8_t>(kMagic[i]))
      throw CorruptError("permutation file: bad magic");
  const std::uint16_t version = in.u16le();
  if (version != kVersion)
    throw CorruptError("permutation file: unsupported version " + std::to_string(version));
  in.u16le();  // reserved
  const std::uint64_t n = in.u64le();
  if (n > in.remaining() / 8 || in.remaining() != n * 8)
    throw CorruptError("permutation file: truncated payload");
  Permutation perm;
  perm.order.resize(n);
  for (std::uint64_t i = 0; i < n; ++i) perm.order[i] = in.u64le();
  if (!perm.is_bijection()) throw CorruptError("permutation file: payload is not a bijection");
  return perm;
}

void save_permutation(const std::string& path, const Permutation& perm) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw Error("cannot write permutation file '" + path + "'");
  const auto bytes = write_permutation(perm);
  out.write(reinterpret_cast<const char*>(bytes.data()),
            static_cast<std::streamsize>(bytes.size()));
  if (!out) throw Error("failed writing permutation file '" + path + "'");
}

Permutation load_permutation(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw ParseError("cannot open permutation file '" + path + "'");
  std::vector<std::uint8_t> bytes((std::istreambuf_iterator<char>(in)),
                                  std::istreambuf_iterator<char>());
  return read_permutation(bytes);
}

}  // namespace umc
