#ifndef RWB_FORMULA_HPP
#define RWB_FORMULA_HPP

#include <cstdint>
#include <map>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "rwb/element.hpp"
#include "rwb/errors.hpp"
#include "rwb/signature.hpp"

namespace rwb {

// A term is a variable or a function application; constants are applications
// with no arguments.
struct Term {
  enum class Kind { Var, App };
  Kind kind = Kind::Var;
  std::string name;
  std::vector<Term> args;  // empty for Var

  static Term var(std::string n) { return Term{Kind::Var, std::move(n), {}}; }
  static Term app(std::string n, std::vector<Term> a = {}) {
    return Term{Kind::App, std::move(n), std::move(a)};
  }

  friend bool operator==(const Term& a, const Term& b) {
    return a.kind == b.kind && a.name == b.name && a.args == b.args;
  }
};

// The regular fragment: true, relation atoms, equality atoms, binary
// conjunction, and existential quantification.  Non-regular connectives have
// no representation here at all.
struct Formula {
  enum class Kind { Top, RelAtom, EqAtom, And, Exists };
  Kind kind = Kind::Top;

  std::string symbol;            // RelAtom: relation name
  std::vector<Term> terms;       // RelAtom args; EqAtom stores {lhs, rhs}
  std::vector<Formula> children; // And: {left, right}; Exists: {body}
  std::string bound_var;         // Exists
  std::string bound_sort;        // Exists (sort name)

  static Formula top() { return Formula{}; }
  static Formula rel(std::string sym, std::vector<Term> ts) {
    Formula f;
    f.kind = Kind::RelAtom;
    f.symbol = std::move(sym);
    f.terms = std::move(ts);
    return f;
  }
  static Formula eq(Term l, Term r) {
    Formula f;
    f.kind = Kind::EqAtom;
    f.terms = {std::move(l), std::move(r)};
    return f;
  }
  static Formula conj(Formula l, Formula r) {
    Formula f;
    f.kind = Kind::And;
    f.children = {std::move(l), std::move(r)};
    return f;
  }
  static Formula exists(std::string v, std::string sort, Formula body) {
    Formula f;
    f.kind = Kind::Exists;
    f.bound_var = std::move(v);
    f.bound_sort = std::move(sort);
    f.children = {std::move(body)};
    return f;
  }

  friend bool operator==(const Formula& a, const Formula& b) {
    return a.kind == b.kind && a.symbol == b.symbol && a.terms == b.terms &&
           a.bound_var == b.bound_var && a.bound_sort == b.bound_sort && a.children == b.children;
  }
};

// Conjunction of a list, left-associated; empty list is `true`.
Formula conj_all(std::vector<Formula> fs);

using Binding = std::pair<std::string, std::string>;  // (variable, sort name)
using Context = std::vector<Binding>;

struct FormulaInContext {
  Context context;
  Formula body;

  friend bool operator==(const FormulaInContext& a, const FormulaInContext& b) {
    return a.context == b.context && a.body == b.body;
  }
};

struct Sequent {
  Context context;
  Formula lhs;
  Formula rhs;

  friend bool operator==(const Sequent& a, const Sequent& b) {
    return a.context == b.context && a.lhs == b.lhs && a.rhs == b.rhs;
  }
};

struct Theory {
  Signature signature;
  std::vector<Sequent> axioms;

  friend bool operator==(const Theory& a, const Theory& b) {
    return a.signature == b.signature && a.axioms == b.axioms;
  }
};

// --- well-formedness -------------------------------------------------------

// Sort of a term under the given variable scope; throws SortError on
// undeclared symbols, arity mismatches, or unbound variables.
uint32_t term_sort(const Term& t, const Signature& sig,
                   const std::map<std::string, uint32_t>& scope);

// Checks that every free variable is bound by the context with a matching
// sort and every atom is sort-correct.  Throws SortError.
void validate(const FormulaInContext& f, const Signature& sig);
void validate(const Sequent& s, const Signature& sig);
void validate(const Theory& t);

// Context variables must be pairwise distinct and their sorts declared.
void validate_context(const Context& ctx, const Signature& sig);

std::set<std::string> free_vars(const Formula& body);
bool term_has_app(const Term& t);
bool has_function_terms(const Formula& body);

// --- substitution ----------------------------------------------------------

// Applies a variable renaming (possibly collapsing) to a formula in context.
// The resulting context lists the image variables in order of first
// appearance; bound variables are freshened as needed to avoid capture.
// Throws SortError if the map sends two variables of different sorts to the
// same name.  Variables not in the map are left fixed.
FormulaInContext substitute(const FormulaInContext& f,
                            const std::map<std::string, std::string>& renaming);

// --- alpha-equivalence -----------------------------------------------------

// Renames context and bound variables to a canonical numbered scheme, for
// structural comparison modulo variable names.
FormulaInContext alpha_normal_form(const FormulaInContext& f);
bool alpha_equal(const FormulaInContext& a, const FormulaInContext& b);

// --- reduced presentations -------------------------------------------------

// A presentation (formula, tuple) is reduced when the tuple repeats no atom.
bool is_reduced(const std::vector<Element>& tuple);

// Collapses repeated tuple atoms by identifying the corresponding context
// variables; denotes the same basic open.  The tuple must match the context
// in length (ArityError) and sorts (SortError, checked against `sig`).
std::pair<FormulaInContext, std::vector<Element>> reduce_presentation(
    const FormulaInContext& f, std::vector<Element> tuple, const Signature& sig);

// A variable name not occurring in `used`; base is tried first, then primed.
std::string fresh_var(const std::string& base, const std::set<std::string>& used);

}  // namespace rwb

#endif  // RWB_FORMULA_HPP
