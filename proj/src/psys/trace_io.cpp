#include "mqsat/psys/trace_io.hpp"

#include <sstream>

namespace mqsat::psys {

void write_jsonl(std::ostream& out, const Trace& trace, const SymbolTable& symbols) {
  auto ev = trace.events.begin();
  auto em = trace.emissions.begin();
  while (ev != trace.events.end() || em != trace.emissions.end()) {
    const std::uint64_t step = (em == trace.emissions.end() ||
                                (ev != trace.events.end() && ev->step <= em->step))
                                   ? ev->step
                                   : em->step;
    for (; ev != trace.events.end() && ev->step == step; ++ev) {
      out << R"({"step":)" << ev->step << R"(,"membrane":)" << ev->membrane << R"(,"rule":)"
          << ev->rule << R"(,"mult":)" << ev->multiplicity << "}\n";
    }
    for (; em != trace.emissions.end() && em->step == step; ++em) {
      const std::string& name = symbols.name(em->symbol);
      if (name != "yes" && name != "no") continue;
      for (Count i = 0; i < em->count; ++i) {
        out << R"({"step":)" << em->step << R"(,"emit":")" << name << "\"}\n";
      }
    }
  }
}

std::string to_jsonl(const Trace& trace, const SymbolTable& symbols) {
  std::ostringstream out;
  write_jsonl(out, trace, symbols);
  return out.str();
}

}  // namespace mqsat::psys
