#ifndef UMC_PERMUTE_HPP
#define UMC_PERMUTE_HPP

#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "umc/permutation.hpp"

namespace umc {

// out[i] = values[perm.order[i]]: gathers node values into serialized order.
std::vector<double> apply_permutation(std::span<const double> values, const Permutation& perm);

// q with q.order[perm.order[i]] = i; applying it undoes apply_permutation.
Permutation invert_permutation(const Permutation& perm);

// Order-mapping file, the only metadata the pipeline needs:
//   "UMRP" magic (4 bytes), u16 LE version = 1, u16 LE reserved = 0,
//   u64 LE n, then n u64 LE entries of `order`.
// The reader validates magic, version, exact length, and bijectivity.
std::vector<std::uint8_t> write_permutation(const Permutation& perm);
Permutation read_permutation(std::span<const std::uint8_t> bytes);

void save_permutation(const std::string& path, const Permutation& perm);
Permutation load_permutation(const std::string& path);

}  // namespace umc

#endif
