#include "umc/external_codec.hpp"

#include <atomic>
#include <bit>
#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>

#include <unistd.h>

#include "umc/errors.hpp"

namespace umc {

namespace {

namespace fs = std::filesystem;

fs::path temp_dir() {
  if (const char* env = std::getenv("UMC_TMPDIR")) return fs::path(env);
  return fs::temp_directory_path();
}

fs::path unique_temp(const char* tag) {
  static std::atomic<std::uint64_t> counter{0};
  const std::uint64_t id = counter.fetch_add(1);
  return temp_dir() / ("umc-ext-" + std::to_string(::getpid()) + "-" + std::to_string(id) + "-" +
                       tag);
}

struct TempFile {
  fs::path path;
  explicit TempFile(const char* tag) : path(unique_temp(tag)) {}
  ~TempFile() {
    std::error_code ec;
    fs::remove(path, ec);
  }
};

std::string substitute(const std::string& tmpl, const std::string& in, const std::string& out,
                       double tol, std::uint64_t n) {
  std::string cmd;
  char tol_buf[64];
  std::snprintf(tol_buf, sizeof(tol_buf), "%.17g", tol);
  for (std::size_t i = 0; i < tmpl.size();) {
    if (tmpl.compare(i, 4, "{in}") == 0) {
      cmd += in;
      i += 4;
    } else if (tmpl.compare(i, 5, "{out}") == 0) {
      cmd += out;
      i += 5;
    } else if (tmpl.compare(i, 5, "{tol}") == 0) {
      cmd += tol_buf;
      i += 5;
    } else if (tmpl.compare(i, 3, "{n}") == 0) {
      cmd += std::to_string(n);
      i += 3;
    } else {
      cmd += tmpl[i++];
    }
  }
  return cmd;
}

void run_command(const std::string& cmd, const std::string& codec_name) {
  const int rc = std::system(cmd.c_str());
  if (rc == -1) throw Error("external codec '" + codec_name + "': failed to spawn shell");
  int status = rc;
#ifdef WIFEXITED
  if (WIFEXITED(rc)) status = WEXITSTATUS(rc);
#endif
  if (status == 127)
    throw Error("external codec unavailable: '" + codec_name + "' (command not found)");
  if (status != 0)
    throw Error("external codec '" + codec_name + "' failed with exit status " +
                std::to_string(status) + ": " + cmd);
}

void write_raw_doubles(const fs::path& path, std::span<const double> values) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw Error("cannot write temp file '" + path.string() + "'");
  for (double v : values) {
    const std::uint64_t bits = std::bit_cast<std::uint64_t>(v);
    char buf[8];
    for (int i = 0; i < 8; ++i) buf[i] = static_cast<char>(bits >> (8 * i));
    out.write(buf, 8);
  }
  if (!out) throw Error("failed writing temp file '" + path.string() + "'");
}

std::vector<std::uint8_t> read_raw_bytes(const fs::path& path, const std::string& codec_name) {
  std::ifstream in(path, std::ios::binary);
  if (!in)
    throw Error("external codec '" + codec_name + "' produced no output file");
  return std::vector<std::uint8_t>((std::istreambuf_iterator<char>(in)),
                                   std::istreambuf_iterator<char>());
}

}  // namespace

std::vector<std::uint8_t> external_compress(const ExternalCodec& codec,
                                            std::span<const double> values, double tau_rel) {
  TempFile in_file("in.f64");
  TempFile out_file("out.blob");
  write_raw_doubles(in_file.path, values);
  const std::string cmd = substitute(codec.compress_cmd, in_file.path.string(),
                                     out_file.path.string(), tau_rel, values.size());
  run_command(cmd, codec.name);
  return read_raw_bytes(out_file.path, codec.name);
}

std::vector<double> external_decompress(const ExternalCodec& codec,
                                        std::span<const std::uint8_t> blob, std::uint64_t n,
                                        double tau_rel) {
  TempFile in_file("in.blob");
  TempFile out_file("out.f64");
  {
    std::ofstream out(in_file.path, std::ios::binary);
    if (!out) throw Error("cannot write temp file '" + in_file.path.string() + "'");
    out.write(reinterpret_cast<const char*>(blob.data()),
              static_cast<std::streamsize>(blob.size()));
    if (!out) throw Error("failed writing temp file '" + in_file.path.string() + "'");
  }
  const std::string cmd = substitute(codec.decompress_cmd, in_file.path.string(),
                                     out_file.path.string(), tau_rel, n);
  run_command(cmd, codec.name);
  const auto bytes = read_raw_bytes(out_file.path, codec.name);
  if (bytes.size() != n * 8)
    throw CorruptError("external codec '" + codec.name + "' returned " +
                       std::to_string(bytes.size()) + " bytes, expected " +
                       std::to_string(n * 8));
  std::vector<double> values;
  values.reserve(n);
  for (std::uint64_t k = 0; k < n; ++k) {
    std::uint64_t bits = 0;
    for (int i = 7; i >= 0; --i) bits = (bits << 8) | bytes[k * 8 + static_cast<std::uint64_t>(i)];
    values.push_back(std::bit_cast<double>(bits));
  }
  return values;
}

}  // namespace umc
