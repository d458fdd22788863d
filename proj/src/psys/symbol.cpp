#include "mqsat/psys/symbol.hpp"

#include <stdexcept>

namespace mqsat::psys {

SymbolId SymbolTable::intern(std::string_view name) {
  std::string key(name);
  if (auto it = ids_.find(key); it != ids_.end()) return it->second;
  const auto id = static_cast<SymbolId>(names_.size());
  names_.push_back(key);
  ids_.emplace(std::move(key), id);
  return id;
}

std::optional<SymbolId> SymbolTable::find(std::string_view name) const {
  if (auto it = ids_.find(std::string(name)); it != ids_.end()) return it->second;
  return std::nullopt;
}

SymbolId SymbolTable::at(std::string_view name) const {
  if (auto id = find(name)) return *id;
  throw std::out_of_range("unknown object symbol '" + std::string(name) + "'");
}

}  // namespace mqsat::psys
