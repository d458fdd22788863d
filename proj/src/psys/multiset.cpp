#include "mqsat/psys/multiset.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>

namespace mqsat::psys {

namespace {

auto lower(std::vector<Multiset::Entry>& entries, SymbolId symbol) {
  return std::lower_bound(entries.begin(), entries.end(), symbol,
                          [](const Multiset::Entry& e, SymbolId s) { return e.first < s; });
}

}  // namespace

Multiset::Multiset(std::initializer_list<Entry> entries) {
  for (const auto& [symbol, n] : entries) add(symbol, n);
}

Count Multiset::count(SymbolId symbol) const {
  auto it = std::lower_bound(entries_.begin(), entries_.end(), symbol,
                             [](const Entry& e, SymbolId s) { return e.first < s; });
  return (it != entries_.end() && it->first == symbol) ? it->second : 0;
}

void Multiset::add(SymbolId symbol, Count n) {
  if (n == 0) return;
  auto it = lower(entries_, symbol);
  if (it != entries_.end() && it->first == symbol) {
    it->second += n;
  } else {
    entries_.insert(it, {symbol, n});
  }
  total_ += n;
}

void Multiset::add(const Multiset& other) {
  for (const auto& [symbol, n] : other) add(symbol, n);
}

void Multiset::remove(SymbolId symbol, Count n) {
  if (n == 0) return;
  auto it = lower(entries_, symbol);
  if (it == entries_.end() || it->first != symbol || it->second < n) {
    throw std::logic_error("multiset underflow removing symbol " + std::to_string(symbol));
  }
  it->second -= n;
  total_ -= n;
  if (it->second == 0) entries_.erase(it);
}

}  // namespace mqsat::psys
