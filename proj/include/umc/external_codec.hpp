#ifndef UMC_EXTERNAL_CODEC_HPP
#define UMC_EXTERNAL_CODEC_HPP

#include <cstdint>
#include <span>
#include <string>
#include <vector>

namespace umc {

// Shell command templates for an out-of-process compressor. Substitution
// tokens: {in} input path, {out} output path, {tol} relative tolerance,
// {n} value count. Exchange files are raw little-endian binary64 arrays
// (no length prefix); the blob is whatever the command writes to {out}.
// Temp files live under $UMC_TMPDIR when set, else the system temp dir.
struct ExternalCodec {
  std::string name;
  std::string compress_cmd;
  std::string decompress_cmd;
};

std::vector<std::uint8_t> external_compress(const ExternalCodec& codec,
                                            std::span<const double> values, double tau_rel);

std::vector<double> external_decompress(const ExternalCodec& codec,
                                        std::span<const std::uint8_t> blob, std::uint64_t n,
                                        double tau_rel);

}  // namespace umc

#endif
