#pragma once

#include <cstdint>
#include <utility>
#include <vector>

#include "mqsat/psys/symbol.hpp"

namespace mqsat::psys {

using Count = std::uint64_t;

/// Finite multiset of object symbols. Entries are kept sorted by symbol id
/// with strictly positive counts, so iteration order is deterministic.
class Multiset {
 public:
  using Entry = std::pair<SymbolId, Count>;
  using const_iterator = std::vector<Entry>::const_iterator;

  Multiset() = default;
  Multiset(std::initializer_list<Entry> entries);

  Count count(SymbolId symbol) const;
  bool contains(SymbolId symbol) const { return count(symbol) > 0; }

  void add(SymbolId symbol, Count n = 1);
  void add(const Multiset& other);
  /// Throws std::logic_error if fewer than `n` copies are present.
  void remove(SymbolId symbol, Count n = 1);

  /// Total number of object copies.
  Count total() const { return total_; }
  /// Number of distinct symbols.
  std::size_t distinct() const { return entries_.size(); }
  bool empty() const { return entries_.empty(); }

  const_iterator begin() const { return entries_.begin(); }
  const_iterator end() const { return entries_.end(); }

  bool operator==(const Multiset& other) const { return entries_ == other.entries_; }

 private:
  std::vector<Entry> entries_;
  Count total_ = 0;
};

}  // namespace mqsat::psys
