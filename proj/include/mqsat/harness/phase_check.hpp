#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "mqsat/construct/blueprint.hpp"
#include "mqsat/psys/engine.hpp"

namespace mqsat::harness {

struct PhaseViolation {
  std::uint64_t step = 0;
  std::string kind;
  std::string detail;
};

struct PhaseReport {
  /// First step after which every elementary membrane has reached (0,p).
  std::optional<std::uint64_t> generation_complete;
  std::size_t elementary_membranes = 0;
  std::size_t depth = 0;
  std::vector<PhaseViolation> violations;

  bool ok() const { return generation_complete && violations.empty(); }
};

/// Replays `trace` from `initial` and checks the generation phase:
///  - no membrane lineage divides more than k times;
///  - once every elementary membrane has reached (0,p) there are 2^n of
///    them at depth l+1;
///  - each non-elementary membrane then has 2^k children with identifiers
///    0..2^k-1;
///  - each elementary membrane then holds the assignment of its path;
///  - no assignment object waits above a level that is still dividing, and
///    none enters a level while some membrane there still holds variables.
PhaseReport check_phase_invariants(const psys::Trace& trace, std::uint64_t steps,
                                   const construct::Blueprint& blueprint,
                                   const psys::Configuration& initial);

}  // namespace mqsat::harness
