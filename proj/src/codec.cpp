#include "umc/codec.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>

#include "umc/bytes.hpp"
#include "umc/errors.hpp"

namespace umc {

namespace {

constexpr char kMagic[4] = {'U', 'M', 'C', '1'};
constexpr std::uint16_t kVersion = 1;
// quanta beyond this cannot round-trip through int64 safely
constexpr double kMaxQuantum = 0x1p62;

Predictor predictor_from_id(std::uint8_t id) {
  if (id > 1) throw CorruptError("stream: unknown predictor id " + std::to_string(id));
  return static_cast<Predictor>(id);
}

}  // namespace

const char* predictor_name(Predictor p) {
  return p == Predictor::delta ? "delta" : "lorenzo1";
}

Predictor predictor_from_name(const std::string& name) {
  if (name == "delta") return Predictor::delta;
  if (name == "lorenzo1") return Predictor::lorenzo1;
  throw ValidationError("unknown predictor '" + name + "'");
}

CompressedStream compress(std::span<const double> values, double eb_abs, Predictor predictor) {
  if (!(eb_abs > 0.0) || !std::isfinite(eb_abs))
    throw ValidationError("error bound must be positive and finite");
  for (double v : values)
    if (!std::isfinite(v)) throw ValidationError("cannot compress non-finite values");

  CompressedStream stream;
  stream.predictor = predictor;
  stream.n = values.size();
  stream.eb_abs = eb_abs;

  const double step = 2.0 * eb_abs;
  double prev = 0.0;            // last reconstructed value
  std::uint64_t zero_run = 0;   // pending run of zero quanta

  auto flush_zeros = [&]() {
    if (zero_run == 0) return;
    stream.quanta.push_back(0);
    put_varint(stream.quanta, zero_run);
    zero_run = 0;
  };
  auto push_quantum = [&](std::int64_t q) {
    if (q == 0) {
      ++zero_run;
      return;
    }
    flush_zeros();
    put_varint(stream.quanta, zigzag_encode(q));
  };

  for (std::size_t i = 0; i < values.size(); ++i) {
    const double x = values[i];
    if (i == 0) {
      stream.exceptions.push_back({0, x});
      prev = x;
      continue;
    }
    const double ratio = (x - prev) / step;
    if (std::isfinite(ratio) && std::fabs(ratio) < kMaxQuantum) {
      const std::int64_t q = std::llround(ratio);
      const double candidate = prev + step * static_cast<double>(q);
      if (std::fabs(candidate - x) <= eb_abs) {
        push_quantum(q);
        prev = candidate;
        continue;
      }
    }
    stream.exceptions.push_back({i, x});
    prev = x;
  }
  flush_zeros();
  return stream;
}

std::vector<double> decompress(const CompressedStream& stream) {
  const std::uint64_t n = stream.n;
  std::vector<double> out;
  out.reserve(n);

  const double step = 2.0 * stream.eb_abs;
  double prev = 0.0;
  std::size_t next_exc = 0;

  ByteReader tokens{std::span<const std::uint8_t>(stream.quanta)};
  std::uint64_t pending_zeros = 0;

  auto next_quantum = [&]() -> std::int64_t {
    if (pending_zeros > 0) {
      --pending_zeros;
      return 0;
    }
    if (tokens.remaining() == 0) throw CorruptError("stream: quanta count mismatch");
    const std::uint64_t z = get_varint(tokens);
    if (z == 0) {
      pending_zeros = get_varint(tokens);
      if (pending_zeros == 0) throw CorruptError("stream: empty zero run");
      --pending_zeros;
      return 0;
    }
    return zigzag_decode(z);
  };

  for (std::uint64_t i = 0; i < n; ++i) {
    if (next_exc < stream.exceptions.size() && stream.exceptions[next_exc].index == i) {
      prev = stream.exceptions[next_exc].value;
      ++next_exc;
    } else {
      prev += step * static_cast<double>(next_quantum());
    }
    out.push_back(prev);
  }
  if (next_exc != stream.exceptions.size())
    throw CorruptError("stream: exception index out of range");
  if (pending_zeros != 0 || tokens.remaining() != 0)
    throw CorruptError("stream: quanta count mismatch");
  return out;
}

std::vector<std::uint8_t> serialize_stream(const CompressedStream& stream) {
  std::vector<std::uint8_t> out;
  out.reserve(stream.total_bytes());
  for (char c : kMagic) out.push_back(static_cast<std::uint8_t>(c));
  put_u16le(out, kVersion);
  out.push_back(static_cast<std::uint8_t>(stream.predictor));
  out.push_back(0);  // reserved
  put_u64le(out, stream.n);
  put_f64le(out, stream.eb_abs);
  put_u64le(out, stream.payload_bytes());
  put_u64le(out, stream.quanta.size());
  out.insert(out.end(), stream.quanta.begin(), stream.quanta.end());
  put_u64le(out, stream.exceptions.size());
  for (const auto& exc : stream.exceptions) {
    put_u64le(out, exc.index);
    put_f64le(out, exc.value);
  }
  return out;
}

CompressedStream deserialize_stream(std::span<const std::uint8_t> bytes) {
  ByteReader in(bytes);
  std::uint8_t magic[4];
  in.bytes(magic, 4);
  for (int i = 0; i < 4; ++i)
    if (magic[i] != static_cast<std::uint8_t>(kMagic[i])) throw CorruptError("stream: bad magic");
  const std::uint16_t version = in.u16le();
  if (version != kVersion)
    throw CorruptError("stream: unsupported version " + std::to_string(version));
  CompressedStream stream;
  stream.predictor = predictor_from_id(in.u8());
  in.u8();  // reserved
  stream.n = in.u64le();
  stream.eb_abs = in.f64le();
  const std::uint64_t payload_len = in.u64le();
  if (payload_len != in.remaining()) throw CorruptError("stream: truncated payload");
  const std::uint64_t quanta_len = in.u64le();
  if (quanta_len > in.remaining()) throw CorruptError("stream: truncated payload");
  auto view = in.view(quanta_len);
  stream.quanta.assign(view.begin(), view.end());
  const std::uint64_t n_exc = in.u64le();
  if (n_exc > in.remaining() / 16 || in.remaining() != n_exc * 16)
    throw CorruptError("stream: truncated payload");
  stream.exceptions.reserve(n_exc);
  std::uint64_t prev_index = 0;
  for (std::uint64_t k = 0; k < n_exc; ++k) {
    CompressedStream::Exception exc;
    exc.index = in.u64le();
    exc.value = in.f64le();
    if (exc.index >= stream.n || (k > 0 && exc.index <= prev_index))
      throw CorruptError("stream: exception index out of range");
    prev_index = exc.index;
    stream.exceptions.push_back(exc);
  }
  return stream;
}

void save_stream(const std::string& path, const CompressedStream& stream) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw Error("cannot write stream file '" + path + "'");
  const auto bytes = serialize_stream(stream);
  out.write(reinterpret_cast<const char*>(bytes.data()),
            static_cast<std::streamsize>(bytes.size()));
  if (!out) throw Error("failed writing stream file '" + path + "'");
}

CompressedStream load_stream(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw ParseError("cannot open stream file '" + path + "'");
  std::vector<std::uint8_t> bytes((std::istreambuf_iterator<char>(in)),
                                  std::istreambuf_iterator<char>());
  return deserialize_stream(bytes);
}

double relative_to_absolute_bound(std::span<const double> values, double tau_rel) {
  if (values.empty()) throw ValidationError("cannot derive a bound from an empty field");
  if (!(tau_rel > 0.0) || !std::isfinite(tau_rel))
    throw ValidationError("relative tolerance must be positive and finite");
  const auto [lo, hi] = std::minmax_element(values.begin(), values.end());
  const double range = *hi - *lo;
  if (range > 0.0) return tau_rel * range;
  return tau_rel * std::max(1.0, std::fabs(values[0]));
}

}  // namespace umc
