#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

namespace mqsat::psys {

using SymbolId = std::uint32_t;

/// Interning table for object symbols. Two symbols share an id iff their
/// printed forms are equal; ids are dense and assigned in first-seen order.
class SymbolTable {
 public:
  SymbolId intern(std::string_view name);
  std::optional<SymbolId> find(std::string_view name) const;
  /// Like find(), but throws std::out_of_range for unknown names.
  SymbolId at(std::string_view name) const;
  const std::string& name(SymbolId id) const { return names_.at(id); }
  std::size_t size() const { return names_.size(); }

  bool operator==(const SymbolTable& other) const { return names_ == other.names_; }

 private:
  std::vector<std::string> names_;
  std::unordered_map<std::string, SymbolId> ids_;
};

}  // namespace mqsat::psys
