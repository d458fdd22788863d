#include "mqsat/psys/charge.hpp"

#include <functional>

namespace mqsat::psys {

namespace {

void check_arity(std::size_t arity) {
  if (arity == 0 || arity > 6) {
    throw std::invalid_argument("charge tuples must have between 1 and 6 components");
  }
}

}  // namespace

ChargeValue::ChargeValue(std::initializer_list<ChargeAtom> parts) : parts_(parts) {
  check_arity(parts_.size());
}

ChargeValue::ChargeValue(std::vector<ChargeAtom> parts) : parts_(std::move(parts)) {
  check_arity(parts_.size());
}

std::optional<std::int64_t> ChargeValue::integer(std::size_t index) const {
  if (index >= parts_.size()) return std::nullopt;
  if (const auto* v = std::get_if<std::int64_t>(&parts_[index])) return *v;
  return std::nullopt;
}

std::optional<std::string> ChargeValue::atom(std::size_t index) const {
  if (index >= parts_.size()) return std::nullopt;
  if (const auto* v = std::get_if<std::string>(&parts_[index])) return *v;
  return std::nullopt;
}

std::string ChargeValue::to_string() const {
  auto part = [](const ChargeAtom& a) {
    return std::visit(
        [](const auto& v) -> std::string {
          if constexpr (std::is_same_v<std::decay_t<decltype(v)>, std::string>) {
            return v;
          } else {
            return std::to_string(v);
          }
        },
        a);
  };
  if (parts_.size() == 1) return part(parts_.front());
  std::string out = "(";
  for (std::size_t i = 0; i < parts_.size(); ++i) {
    if (i) out += ',';
    out += part(parts_[i]);
  }
  out += ')';
  return out;
}

std::size_t ChargeHash::operator()(const ChargeValue& value) const noexcept {
  std::size_t h = 0xcbf29ce484222325ull;
  for (const auto& p : value.parts()) {
    std::size_t x = std::visit(
        [](const auto& v) -> std::size_t {
          using T = std::decay_t<decltype(v)>;
          return std::hash<T>{}(v) ^ (std::is_same_v<T, std::string> ? 0x9e3779b97f4a7c15ull : 0);
        },
        p);
    h = (h ^ x) * 0x100000001b3ull;
  }
  return h;
}

ChargeId ChargeAlphabet::intern(const ChargeValue& value) {
  if (auto it = ids_.find(value); it != ids_.end()) return it->second;
  const auto id = static_cast<ChargeId>(values_.size());
  values_.push_back(value);
  ids_.emplace(value, id);
  return id;
}

std::optional<ChargeId> ChargeAlphabet::find(const ChargeValue& value) const {
  if (auto it = ids_.find(value); it != ids_.end()) return it->second;
  return std::nullopt;
}

ChargeId ChargeAlphabet::require(const ChargeValue& value) const {
  if (auto id = find(value)) return *id;
  throw AlphabetError("charge " + value.to_string() + " is not in the declared alphabet");
}

}  // namespace mqsat::psys
