#include "rwb/printer.hpp"

namespace rwb {

std::string print(const Term& t) {
  if (t.kind == Term::Kind::Var) return t.name;
  if (t.args.empty()) return t.name;  // constants print bare
  std::string s = t.name + "(";
  for (size_t i = 0; i < t.args.size(); ++i) {
    if (i) s += ", ";
    s += print(t.args[i]);
  }
  return s + ")";
}

namespace {

// Conjuncts need parentheses around a left-side `exists` (its scope extends
// maximally right) and around a right-nested `&` (to keep associativity).
std::string print_unit(const Formula& f, bool parenthesize_and) {
  switch (f.kind) {
    case Formula::Kind::Top:
      return "true";
    case Formula::Kind::RelAtom: {
      if (f.terms.empty()) return f.symbol;
      std::string s = f.symbol + "(";
      for (size_t i = 0; i < f.terms.size(); ++i) {
        if (i) s += ", ";
        s += print(f.terms[i]);
      }
      return s + ")";
    }
    case Formula::Kind::EqAtom:
      return print(f.terms[0]) + " = " + print(f.terms[1]);
    case Formula::Kind::And: {
      std::string s = print_unit(f.children[0], true) + " & " + print_unit(f.children[1], true);
      // Within a conjunction, a nested And on the right must keep its parens;
      // a nested And on the left re-associates identically, but we print both
      // sides uniformly and only strip parens at top level.
      if (parenthesize_and) return "(" + s + ")";
      return s;
    }
    case Formula::Kind::Exists: {
      std::string s =
          "exists " + f.bound_var + ":" + f.bound_sort + ". " + print_unit(f.children[0], false);
      if (parenthesize_and) return "(" + s + ")";
      return s;
    }
  }
  return "";
}

}  // namespace

std::string print(const Formula& body) { return print_unit(body, false); }

std::string print(const Context& ctx) {
  std::string s = "[";
  for (size_t i = 0; i < ctx.size(); ++i) {
    if (i) s += ", ";
    s += ctx[i].first + ":" + ctx[i].second;
  }
  return s + "]";
}

std::string print(const FormulaInContext& f) { return print(f.context) + " " + print(f.body); }

std::string print(const Sequent& s) {
  return print(s.context) + " " + print(s.lhs) + " |- " + print(s.rhs);
}

std::string print(const Theory& t) {
  std::string out;
  for (const auto& s : t.signature.sorts) out += "sort " + s + ";\n";
  for (const auto& r : t.signature.relations) {
    out += "rel " + r.name + "(";
    for (size_t i = 0; i < r.arity.size(); ++i) {
      if (i) out += ", ";
      out += t.signature.sorts[r.arity[i]];
    }
    out += ");\n";
  }
  for (const auto& f : t.signature.functions) {
    if (f.args.empty()) {
      out += "const " + f.name + " : " + t.signature.sorts[f.result] + ";\n";
    } else {
      out += "fun " + f.name + "(";
      for (size_t i = 0; i < f.args.size(); ++i) {
        if (i) out += ", ";
        out += t.signature.sorts[f.args[i]];
      }
      out += ") : " + t.signature.sorts[f.result] + ";\n";
    }
  }
  for (const auto& ax : t.axioms) out += "axiom " + print(ax) + ";\n";
  return out;
}

}  // namespace rwb
