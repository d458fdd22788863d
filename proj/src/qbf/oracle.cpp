#include "mqsat/qbf/qbf.hpp"

namespace mqsat::qbf {

bool eval_matrix(std::span<const Clause3> matrix, const Assignment& assignment) {
  for (const auto& c : matrix) {
    if (!c.satisfied_by(assignment)) return false;
  }
  return true;
}

namespace {

bool descend(const QbfInstance& inst, Assignment& a, std::size_t depth) {
  if (depth == a.values.size()) return eval_matrix(inst.matrix(), a);
  const bool universal = inst.prefix()[depth] == Quantifier::Universal;
  for (bool value : {false, true}) {
    a.values[depth] = value;
    const bool r = descend(inst, a, depth + 1);
    if (universal && !r) return false;
    if (!universal && r) return true;
  }
  return universal;
}

}  // namespace

bool oracle_eval(const QbfInstance& instance) {
  Assignment a{std::vector<bool>(static_cast<std::size_t>(instance.n()), false)};
  return descend(instance, a, 0);
}

}  // namespace mqsat::qbf
