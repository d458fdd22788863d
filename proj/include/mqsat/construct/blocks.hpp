#pragma once

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "mqsat/qbf/qbf.hpp"

namespace mqsat::construct {

/// Smallest k with 2^k >= n.
int ceil_log2(int n);

/// Smallest n' >= n with n' divisible by ceil_log2(n').
int padded_size(int n);

struct PaddingReport {
  int original = 0;
  int padded = 0;
  int added = 0;
};

/// Appends universally quantified, clause-free variables until the
/// variable count is block-divisible. Validity is unchanged.
std::pair<qbf::QbfInstance, PaddingReport> pad(const qbf::QbfInstance& instance);

struct BlockDecomposition {
  int n = 0;
  int k = 0;
  int l = 0;
  /// Block j (1-based) is blocks[j-1]: 'E'/'A' per quantifier, first
  /// variable of the block first.
  std::vector<std::string> blocks;
};

/// Throws std::invalid_argument if n is not divisible by ceil_log2(n).
BlockDecomposition decompose(const qbf::QbfInstance& instance);

/// Quantifier string of a k-bit block value; bit k-1 is the first
/// quantifier and a set bit means universal.
std::string block_string(std::uint32_t value, int k);
std::uint32_t block_value(const std::string& block);

/// Weight of variable i inside its block: 2^(k - pos), pos = 1..k.
std::int64_t bit_weight(int i, int k);

}  // namespace mqsat::construct
