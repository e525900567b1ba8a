#include "rwb/relationalize.hpp"

namespace rwb {

namespace {

// Collects every variable name occurring anywhere in a formula, bound or
// free, so fresh witnesses cannot clash.
void all_names(const Formula& body, std::set<std::string>& out) {
  switch (body.kind) {
    case Formula::Kind::Top:
      return;
    case Formula::Kind::RelAtom:
    case Formula::Kind::EqAtom: {
      std::vector<const Term*> stack;
      for (const auto& t : body.terms) stack.push_back(&t);
      while (!stack.empty()) {
        const Term* t = stack.back();
        stack.pop_back();
        out.insert(t->name);
        for (const auto& a : t->args) stack.push_back(&a);
      }
      return;
    }
    case Formula::Kind::And:
      all_names(body.children[0], out);
      all_names(body.children[1], out);
      return;
    case Formula::Kind::Exists:
      out.insert(body.bound_var);
      all_names(body.children[0], out);
      return;
  }
}

struct Flattener {
  const Relationalization& rz;
  std::set<std::string> used;
  size_t counter = 0;

  std::string fresh() {
    std::string v;
    do {
      v = "w" + std::to_string(counter++);
    } while (used.count(v) || rz.theory.signature.has_symbol(v));
    used.insert(v);
    return v;
  }

  // Emits graph atoms for a term, returning the variable holding its value.
  // Fresh variables and their sorts are recorded for quantification.
  Term lower(const Term& t, std::vector<Formula>& atoms, std::vector<Binding>& witnesses) {
    if (t.kind == Term::Kind::Var) return t;
    std::vector<Term> argVars;
    argVars.reserve(t.args.size());
    for (const auto& a : t.args) argVars.push_back(lower(a, atoms, witnesses));
    const auto* fn = rz.original.find_function(t.name);
    if (!fn) throw SortError("undeclared function symbol: " + t.name);
    std::string w = fresh();
    witnesses.emplace_back(w, rz.original.sorts[fn->result]);
    argVars.push_back(Term::var(w));
    atoms.push_back(Formula::rel(rz.graph_of.at(t.name), std::move(argVars)));
    return Term::var(w);
  }

  Formula wrap(std::vector<Formula> atoms, Formula core, const std::vector<Binding>& witnesses) {
    atoms.push_back(std::move(core));
    Formula out = conj_all(std::move(atoms));
    for (auto it = witnesses.rbegin(); it != witnesses.rend(); ++it)
      out = Formula::exists(it->first, it->second, std::move(out));
    return out;
  }

  Formula flatten(const Formula& body) {
    switch (body.kind) {
      case Formula::Kind::Top:
        return body;
      case Formula::Kind::RelAtom: {
        std::vector<Formula> atoms;
        std::vector<Binding> witnesses;
        std::vector<Term> vars;
        vars.reserve(body.terms.size());
        for (const auto& t : body.terms) vars.push_back(lower(t, atoms, witnesses));
        return wrap(std::move(atoms), Formula::rel(body.symbol, std::move(vars)), witnesses);
      }
      case Formula::Kind::EqAtom: {
        const Term& l = body.terms[0];
        const Term& r = body.terms[1];
        std::vector<Formula> atoms;
        std::vector<Binding> witnesses;
        // f(args) = y lowers to a single graph atom; the general case goes
        // through value variables for both sides.
        if (l.kind == Term::Kind::App && r.kind == Term::Kind::Var) {
          std::vector<Term> argVars;
          for (const auto& a : l.args) argVars.push_back(lower(a, atoms, witnesses));
          argVars.push_back(r);
          return wrap(std::move(atoms), Formula::rel(rz.graph_of.at(l.name), std::move(argVars)),
                      witnesses);
        }
        if (r.kind == Term::Kind::App && l.kind == Term::Kind::Var) {
          std::vector<Term> argVars;
          for (const auto& a : r.args) argVars.push_back(lower(a, atoms, witnesses));
          argVars.push_back(l);
          return wrap(std::move(atoms), Formula::rel(rz.graph_of.at(r.name), std::move(argVars)),
                      witnesses);
        }
        Term lv = lower(l, atoms, witnesses);
        Term rv = lower(r, atoms, witnesses);
        return wrap(std::move(atoms), Formula::eq(std::move(lv), std::move(rv)), witnesses);
      }
      case Formula::Kind::And: {
        Formula a = flatten(body.children[0]);
        Formula b = flatten(body.children[1]);
        return Formula::conj(std::move(a), std::move(b));
      }
      case Formula::Kind::Exists: {
        Formula inner = flatten(body.children[0]);
        return Formula::exists(body.bound_var, body.bound_sort, std::move(inner));
      }
    }
    return body;
  }
};

Flattener make_flattener(const Relationalization& rz, const Formula& body, const Context& ctx) {
  Flattener fl{rz, {}, 0};
  for (const auto& [v, s] : ctx) fl.used.insert(v);
  all_names(body, fl.used);
  return fl;
}

}  // namespace

FormulaInContext Relationalization::flatten(const FormulaInContext& f) const {
  Flattener fl = make_flattener(*this, f.body, f.context);
  FormulaInContext out{f.context, fl.flatten(f.body)};
  validate(out, theory.signature);
  return out;
}

Sequent Relationalization::flatten(const Sequent& s) const {
  Flattener fl = make_flattener(*this, s.lhs, s.context);
  all_names(s.rhs, fl.used);
  Sequent out{s.context, fl.flatten(s.lhs), fl.flatten(s.rhs)};
  validate(out, theory.signature);
  return out;
}

Structure Relationalization::to_relational(const Structure& m) const {
  Structure out = Structure::empty(theory.signature);
  out.carriers = m.carriers;
  for (size_t r = 0; r < m.relations.size(); ++r) out.relations[r] = m.relations[r];
  for (size_t f = 0; f < m.functions.size(); ++f) {
    const std::string& g = graph_of.at(original.functions[f].name);
    const auto* rel = theory.signature.find_relation(g);
    size_t idx = static_cast<size_t>(rel - theory.signature.relations.data());
    for (const auto& [args, res] : m.functions[f]) {
      auto tuple = args;
      tuple.push_back(res);
      out.relations[idx].insert(std::move(tuple));
    }
  }
  return out;
}

Structure Relationalization::from_relational(const Structure& m) const {
  Structure out = Structure::empty(original);
  out.carriers = m.carriers;
  for (size_t r = 0; r < original.relations.size(); ++r) out.relations[r] = m.relations[r];
  for (size_t f = 0; f < original.functions.size(); ++f) {
    const std::string& g = graph_of.at(original.functions[f].name);
    const auto* rel = theory.signature.find_relation(g);
    size_t idx = static_cast<size_t>(rel - theory.signature.relations.data());
    for (const auto& tuple : m.relations[idx]) {
      std::vector<Element> args(tuple.begin(), tuple.end() - 1);
      auto [it, fresh] = out.functions[f].emplace(std::move(args), tuple.back());
      if (!fresh && !(it->second == tuple.back()))
        throw PreconditionError("graph relation for " + original.functions[f].name +
                                " is not single-valued");
    }
  }
  out.validate();  // totality check included
  return out;
}

Relationalization relationalize(const Theory& t) {
  validate(t);
  Relationalization rz;
  rz.original = t.signature;

  Signature sig;
  sig.sorts = t.signature.sorts;
  sig.relations = t.signature.relations;
  for (const auto& f : t.signature.functions) {
    std::string g = "G_" + f.name;
    while (t.signature.has_symbol(g) || sig.find_relation(g)) g += "_";
    auto arity = f.args;
    arity.push_back(f.result);
    sig.relations.push_back({g, std::move(arity)});
    rz.graph_of[f.name] = g;
  }
  rz.theory.signature = std::move(sig);

  for (const auto& ax : t.axioms) rz.theory.axioms.push_back(rz.flatten(ax));

  // Functionality and totality for each graph relation.
  auto safe_var = [&](std::string base) {
    while (rz.theory.signature.has_symbol(base)) base += "_";
    return base;
  };
  for (const auto& f : t.signature.functions) {
    const std::string& g = rz.graph_of.at(f.name);
    Context ctx;
    std::vector<Term> argVars;
    for (size_t i = 0; i < f.args.size(); ++i) {
      std::string v = safe_var("x" + std::to_string(i));
      ctx.emplace_back(v, t.signature.sorts[f.args[i]]);
      argVars.push_back(Term::var(v));
    }
    const std::string& resSort = t.signature.sorts[f.result];
    const std::string y = safe_var("y");
    const std::string y2 = safe_var("y'");
    {
      Sequent functional;
      functional.context = ctx;
      functional.context.emplace_back(y, resSort);
      functional.context.emplace_back(y2, resSort);
      auto t1 = argVars;
      t1.push_back(Term::var(y));
      auto t2 = argVars;
      t2.push_back(Term::var(y2));
      functional.lhs = Formula::conj(Formula::rel(g, std::move(t1)), Formula::rel(g, std::move(t2)));
      functional.rhs = Formula::eq(Term::var(y), Term::var(y2));
      rz.theory.axioms.push_back(std::move(functional));
    }
    {
      Sequent total;
      total.context = ctx;
      total.lhs = Formula::top();
      auto t1 = argVars;
      t1.push_back(Term::var(y));
      total.rhs = Formula::exists(y, resSort, Formula::rel(g, std::move(t1)));
      rz.theory.axioms.push_back(std::move(total));
    }
  }
  validate(rz.theory);
  return rz;
}

}  // namespace rwb
