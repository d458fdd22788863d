#pragma once

#include <ostream>
#include <string>

#include "mqsat/psys/engine.hpp"
#include "mqsat/psys/symbol.hpp"

namespace mqsat::psys {

/// JSON-lines export, grouped by step. Rule applications are written as
/// {"step":s,"membrane":m,"rule":r,"mult":k}; yes/no objects leaving the
/// skin as {"step":s,"emit":"yes"|"no"}. Other emissions are omitted.
void write_jsonl(std::ostream& out, const Trace& trace, const SymbolTable& symbols);
std::string to_jsonl(const Trace& trace, const SymbolTable& symbols);

}  // namespace mqsat::psys
