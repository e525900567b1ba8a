#ifndef RWB_PRINTER_HPP
#define RWB_PRINTER_HPP

#include <string>

#include "rwb/formula.hpp"

namespace rwb {

// Canonical text forms; parsing printed output reproduces the value exactly.
std::string print(const Term& t);
std::string print(const Formula& body);
std::string print(const Context& ctx);
std::string print(const FormulaInContext& f);
std::string print(const Sequent& s);
std::string print(const Theory& t);

}  // namespace rwb

#endif  // RWB_PRINTER_HPP
