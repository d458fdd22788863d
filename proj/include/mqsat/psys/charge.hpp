#pragma once

#include <cstdint>
#include <initializer_list>
#include <optional>
#include <stdexcept>
#include <string>
#include <unordered_map>
#include <variant>
#include <vector>

namespace mqsat::psys {

using ChargeAtom = std::variant<std::int64_t, std::string>;

/// A membrane charge: a short tuple of atoms and integers treated as one
/// indivisible value. The classic neutral charge is the 1-tuple (0).
class ChargeValue {
 public:
  ChargeValue() : parts_{std::int64_t{0}} {}
  ChargeValue(std::initializer_list<ChargeAtom> parts);
  explicit ChargeValue(std::vector<ChargeAtom> parts);

  static ChargeValue neutral() { return ChargeValue{}; }

  const std::vector<ChargeAtom>& parts() const { return parts_; }
  std::size_t arity() const { return parts_.size(); }

  /// Integer component at `index`, or nullopt if absent or an atom.
  std::optional<std::int64_t> integer(std::size_t index) const;
  /// Atom component at `index`, or nullopt if absent or an integer.
  std::optional<std::string> atom(std::size_t index) const;

  /// A single atom as is, longer tuples as "(a,b,...)".
  std::string to_string() const;

  bool operator==(const ChargeValue&) const = default;

 private:
  std::vector<ChargeAtom> parts_;
};

struct ChargeHash {
  std::size_t operator()(const ChargeValue& value) const noexcept;
};

using ChargeId = std::uint32_t;

/// Raised when a configuration or rule mentions a charge outside Ψ.
class AlphabetError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// The declared charge alphabet Ψ, interned to dense ids.
class ChargeAlphabet {
 public:
  ChargeId intern(const ChargeValue& value);
  std::optional<ChargeId> find(const ChargeValue& value) const;
  /// Like find(), but throws AlphabetError for undeclared charges.
  ChargeId require(const ChargeValue& value) const;
  const ChargeValue& value(ChargeId id) const { return values_.at(id); }
  bool contains(ChargeId id) const { return id < values_.size(); }
  std::size_t size() const { return values_.size(); }
  const std::vector<ChargeValue>& values() const { return values_; }

  bool operator==(const ChargeAlphabet& other) const { return values_ == other.values_; }

 private:
  std::vector<ChargeValue> values_;
  std::unordered_map<ChargeValue, ChargeId, ChargeHash> ids_;
};

}  // namespace mqsat::psys
