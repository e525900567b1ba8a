#ifndef RWB_STRUCTURE_HPP
#define RWB_STRUCTURE_HPP

#include <map>
#include <set>
#include <vector>

#include "rwb/element.hpp"
#include "rwb/formula.hpp"
#include "rwb/signature.hpp"

namespace rwb {

// A finite structure over a fixed signature, with elements drawn from the
// shared universe.  Indices follow the signature's declaration order.
struct Structure {
  Signature sig;
  std::vector<std::set<Element>> carriers;                         // per sort
  std::vector<std::set<std::vector<Element>>> relations;           // per relation
  std::vector<std::map<std::vector<Element>, Element>> functions;  // per function

  static Structure empty(const Signature& sig) {
    Structure m;
    m.sig = sig;
    m.carriers.resize(sig.sorts.size());
    m.relations.resize(sig.relations.size());
    m.functions.resize(sig.functions.size());
    return m;
  }

  bool has(const Element& e) const {
    return e.sort < carriers.size() && carriers[e.sort].count(e) > 0;
  }
  bool has_all(const std::vector<Element>& tuple) const {
    for (const auto& e : tuple)
      if (!has(e)) return false;
    return true;
  }
  size_t total_size() const {
    size_t n = 0;
    for (const auto& c : carriers) n += c.size();
    return n;
  }

  // Tuples sort-correct and inside carriers; function graphs total and
  // single-valued.  Throws on violation.
  void validate() const;

  friend bool operator==(const Structure& a, const Structure& b) {
    return a.sig == b.sig && a.carriers == b.carriers && a.relations == b.relations &&
           a.functions == b.functions;
  }
};

// Variable assignment used during evaluation.
using Env = std::map<std::string, Element>;

Element term_value(const Term& t, const Structure& m, const Env& env);

// Satisfaction of a regular formula body under an assignment of its free
// variables to carrier elements.
bool holds(const Formula& body, const Structure& m, const Env& env);

// The definable set of the formula: all context tuples satisfying the body.
// Tuples are ordered by the context.
std::set<std::vector<Element>> evaluate(const FormulaInContext& f, const Structure& m);

// Membership of a specific tuple in the definable set; false when the tuple
// leaves the carriers.
bool tuple_in_extension(const FormulaInContext& f, const std::vector<Element>& tuple,
                        const Structure& m);

bool satisfies(const Structure& m, const Sequent& s);
bool satisfies_all(const Structure& m, const Theory& t);

}  // namespace rwb

#endif  // RWB_STRUCTURE_HPP
