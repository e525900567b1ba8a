#ifndef RWB_PARSER_HPP
#define RWB_PARSER_HPP

#include <string>

#include "rwb/formula.hpp"

namespace rwb {

// Parses the theory DSL (`.rth` files):
//
//   theory   := item*
//   item     := "sort" NAME ("," NAME)* ";"
//             | "rel" NAME "(" [ NAME ("," NAME)* ] ")" ";"
//             | "fun" NAME "(" NAME ("," NAME)* ")" ":" NAME ";"
//             | "const" NAME ":" NAME ";"
//             | "axiom" "[" [ binding ("," binding)* ] "]" formula "|-" formula ";"
//   binding  := NAME ":" NAME
//   formula  := unit ("&" unit)*
//   unit     := "exists" binding ("," binding)* "." formula | primary
//   primary  := "true" | "(" formula ")" | NAME "(" [term ("," term)*] ")"
//             | term "=" term | NAME
//   term     := NAME | NAME "(" term ("," term)* ")"
//
// `#` starts a line comment.  An `exists` extends as far right as possible.
// Declarations must precede their use; relation and function symbols are told
// apart by lookup, so axioms come after the declarations they mention.
Theory parse_theory(const std::string& text);

// "[x:A, y:B] body" against an existing signature.
FormulaInContext parse_formula(const std::string& text, const Signature& sig);

// "[x:A, y:B] lhs |- rhs" against an existing signature.
Sequent parse_sequent(const std::string& text, const Signature& sig);

}  // namespace rwb

#endif  // RWB_PARSER_HPP
