#ifndef UMC_BYTES_HPP
#define UMC_BYTES_HPP

#include <bit>
#include <cstdint>
#include <cstring>
#include <span>
#include <vector>

#include "umc/errors.hpp"

namespace umc {

// Little-endian primitives shared by the binary file formats.

inline void put_u16le(std::vector<std::uint8_t>& out, std::uint16_t v) {
  out.push_back(static_cast<std::uint8_t>(v));
  out.push_back(static_cast<std::uint8_t>(v >> 8));
}

inline void put_u64le(std::vector<std::uint8_t>& out, std::uint64_t v) {
  for (int i = 0; i < 8; ++i) out.push_back(static_cast<std::uint8_t>(v >> (8 * i)));
}

inline void put_f64le(std::vector<std::uint8_t>& out, double v) {
  put_u64le(out, std::bit_cast<std::uint64_t>(v));
}

// Bounds-checked cursor over a byte span; all reads throw CorruptError on
// truncation so format readers never return partial data.
class ByteReader {
public:
  explicit ByteReader(std::span<const std::uint8_t> data) : data_(data) {}

  std::size_t remaining() const { return data_.size() - pos_; }
  std::size_t position() const { return pos_; }

  std::uint8_t u8() {
    need(1);
    return data_[pos_++];
  }

  std::uint16_t u16le() {
    need(2);
    std::uint16_t v = static_cast<std::uint16_t>(data_[pos_] | (data_[pos_ + 1] << 8));
    pos_ += 2;
    return v;
  }

  std::uint64_t u64le() {
    need(8);
    std::uint64_t v = 0;
    for (int i = 7; i >= 0; --i) v = (v << 8) | data_[pos_ + static_cast<std::size_t>(i)];
    pos_ += 8;
    return v;
  }

  double f64le() { return std::bit_cast<double>(u64le()); }

  void bytes(std::uint8_t* dst, std::size_t count) {
    need(count);
    std::memcpy(dst, data_.data() + pos_, count);
    pos_ += count;
  }

  std::span<const std::uint8_t> view(std::size_t count) {
    need(count);
    auto v = data_.subspan(pos_, count);
    pos_ += count;
    return v;
  }

private:
  void need(std::size_t count) const {
    if (count > remaining()) throw CorruptError("truncated input");
  }

  std::span<const std::uint8_t> data_;
  std::size_t pos_ = 0;
};

// Unsigned LEB128.
inline void put_varint(std::vector<std::uint8_t>& out, std::uint64_t v) {
  while (v >= 0x80) {
    out.push_back(static_cast<std::uint8_t>(v) | 0x80);
    v >>= 7;
  }
  out.push_back(static_cast<std::uint8_t>(v));
}

inline std::uint64_t get_varint(ByteReader& in) {
  std::uint64_t v = 0;
  for (int shift = 0; shift < 64; shift += 7) {
    std::uint8_t b = in.u8();
    v |= static_cast<std::uint64_t>(b & 0x7F) << shift;
    if (!(b & 0x80)) {
      if (shift == 63 && (b & 0x7E)) throw CorruptError("varint overflow");
      return v;
    }
  }
  throw CorruptError("varint overflow");
}

inline std::uint64_t zigzag_encode(std::int64_t q) {
  return (static_cast<std::uint64_t>(q) << 1) ^ static_cast<std::uint64_t>(q >> 63);
}

inline std::int64_t zigzag_decode(std::uint64_t z) {
  return static_cast<std::int64_t>((z >> 1) ^ (0 - (z & 1)));
}

}  // namespace umc

#endif
