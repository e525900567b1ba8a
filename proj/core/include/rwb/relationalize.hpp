#ifndef RWB_RELATIONALIZE_HPP
#define RWB_RELATIONALIZE_HPP

#include "rwb/structure.hpp"

namespace rwb {

// Replaces every n-ary function symbol f with an (n+1)-ary graph relation
// plus a functionality axiom and a totality axiom, flattening terms in all
// formulas with fresh existentials.  Extensions of original formulas are
// preserved on corresponding structures.
struct Relationalization {
  Signature original;
  Theory theory;                                 // function-free
  std::map<std::string, std::string> graph_of;   // function name -> graph relation

  // Formula over the original signature -> equivalent formula over the
  // relational one.
  FormulaInContext flatten(const FormulaInContext& f) const;
  Sequent flatten(const Sequent& s) const;

  // Function graphs become relation tables and back.  `from_relational`
  // requires the graph tables to be total and single-valued.
  Structure to_relational(const Structure& m) const;
  Structure from_relational(const Structure& m) const;
};

Relationalization relationalize(const Theory& t);

}  // namespace rwb

#endif  // RWB_RELATIONALIZE_HPP
