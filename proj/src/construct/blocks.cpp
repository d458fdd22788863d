#include "mqsat/construct/blocks.hpp"

#include <stdexcept>

namespace mqsat::construct {

int ceil_log2(int n) {
  if (n < 1) throw std::invalid_argument("ceil_log2 needs n >= 1");
  int k = 0;
  while ((1LL << k) < n) ++k;
  return k;
}

int padded_size(int n) {
  if (n < 3) throw std::invalid_argument("a 3-CNF QBF needs at least 3 variables");
  while (n % ceil_log2(n) != 0) ++n;
  return n;
}

std::pair<qbf::QbfInstance, PaddingReport> pad(const qbf::QbfInstance& instance) {
  const int n = instance.n();
  const int target = padded_size(n);
  auto prefix = instance.prefix();
  prefix.resize(static_cast<std::size_t>(target), qbf::Quantifier::Universal);
  return {qbf::QbfInstance(std::move(prefix), instance.matrix()), {n, target, target - n}};
}

BlockDecomposition decompose(const qbf::QbfInstance& instance) {
  BlockDecomposition d;
  d.n = instance.n();
  d.k = ceil_log2(d.n);
  if (d.n % d.k != 0) {
    throw std::invalid_argument("n = " + std::to_string(d.n) + " is not divisible by k = " +
                                std::to_string(d.k) + "; pad the instance first");
  }
  d.l = d.n / d.k;
  for (int j = 0; j < d.l; ++j) {
    std::string block;
    for (int r = 0; r < d.k; ++r) {
      block += qbf::quantifier_char(instance.prefix()[static_cast<std::size_t>(j * d.k + r)]);
    }
    d.blocks.push_back(std::move(block));
  }
  return d;
}

std::string block_string(std::uint32_t value, int k) {
  std::string s(static_cast<std::size_t>(k), 'E');
  for (int r = 0; r < k; ++r) {
    if ((value >> (k - 1 - r)) & 1u) s[static_cast<std::size_t>(r)] = 'A';
  }
  return s;
}

std::uint32_t block_value(const std::string& block) {
  std::uint32_t v = 0;
  for (char ch : block) {
    if (ch != 'A' && ch != 'E') throw std::invalid_argument("block strings use only 'A' and 'E'");
    v = (v << 1) | (ch == 'A' ? 1u : 0u);
  }
  return v;
}

std::int64_t bit_weight(int i, int k) {
  if (i < 1 || k < 1) throw std::invalid_argument("bit_weight needs i >= 1 and k >= 1");
  const int block = (i + k - 1) / k;
  const int pos = i - (block - 1) * k;
  return std::int64_t{1} << (k - pos);
}

}  // namespace mqsat::construct
