#ifndef UMC_CODEC_HPP
#define UMC_CODEC_HPP

#include <cstdint>
#include <span>
#include <string>
#include <vector>

namespace umc {

enum class Predictor : std::uint8_t {
  delta = 0,    // previous reconstructed value
  lorenzo1 = 1  // reserved id for a future two-term predictor; currently delta
};

const char* predictor_name(Predictor p);
Predictor predictor_from_name(const std::string& name);

// Error-bounded stream of one variable. Serialized layout, all little-endian:
//
//   [ 0.. 4)  magic "UMC1"
//   [ 4.. 6)  u16 version = 1
//   [ 6.. 7)  u8  predictor id
//   [ 7.. 8)  u8  reserved = 0
//   [ 8..16)  u64 n (value count)
//   [16..24)  binary64 eb_abs (absolute pointwise bound)
//   [24..32)  u64 payload length in bytes
//   payload:
//     u64 quanta byte length, then the quanta tokens: each token is a varint z;
//     z == 0 starts a zero run and is followed by a varint run length >= 1,
//     otherwise the token is one quantum, zigzag-decoded from z;
//     u64 exception count, then per exception u64 index + binary64 raw value,
//     indices strictly increasing.
//
// There is one quantum per non-exception value. Value 0 is always an
// exception (the predictor has no history), so constant inputs reconstruct
// exactly for any bound.
struct CompressedStream {
  Predictor predictor = Predictor::delta;
  std::uint64_t n = 0;
  double eb_abs = 0.0;
  std::vector<std::uint8_t> quanta;  // encoded tokens

  struct Exception {
    std::uint64_t index;
    double value;
  };
  std::vector<Exception> exceptions;

  std::size_t payload_bytes() const { return 8 + quanta.size() + 8 + 16 * exceptions.size(); }
  std::size_t total_bytes() const { return 32 + payload_bytes(); }
};

// Prediction from already-reconstructed values; residuals are quantized to
// q = round(r / (2 eb)) and a value falls back to a raw exception whenever the
// quantized reconstruction would miss the bound. The decoder replays the same
// reconstruction, so |decoded - input| <= eb_abs holds for every value.
CompressedStream compress(std::span<const double> values, double eb_abs, Predictor predictor);

std::vector<double> decompress(const CompressedStream& stream);

std::vector<std::uint8_t> serialize_stream(const CompressedStream& stream);
CompressedStream deserialize_stream(std::span<const std::uint8_t> bytes);

void save_stream(const std::string& path, const CompressedStream& stream);
CompressedStream load_stream(const std::string& path);

// eb_abs = tau_rel * (max - min); for a zero range, tau_rel * max(1, |values[0]|).
double relative_to_absolute_bound(std::span<const double> values, double tau_rel);

}  // namespace umc

#endif
