#include "rwb/structure.hpp"

namespace rwb {

void Structure::validate() const {
  if (carriers.size() != sig.sorts.size() || relations.size() != sig.relations.size() ||
      functions.size() != sig.functions.size())
    throw SortError("structure shape does not match signature");
  for (uint32_t s = 0; s < carriers.size(); ++s)
    for (const auto& e : carriers[s])
      if (e.sort != s) throw SortError("carrier element tagged with a different sort");
  for (size_t r = 0; r < relations.size(); ++r) {
    const auto& arity = sig.relations[r].arity;
    for (const auto& tuple : relations[r]) {
      if (tuple.size() != arity.size()) throw SortError("relation tuple arity mismatch");
      for (size_t i = 0; i < tuple.size(); ++i)
        if (tuple[i].sort != arity[i] || !has(tuple[i]))
          throw SortError("relation tuple element outside carriers");
    }
  }
  for (size_t f = 0; f < functions.size(); ++f) {
    const auto& fn = sig.functions[f];
    // Totality: every argument tuple over the carriers must have an entry.
    size_t expected = 1;
    for (uint32_t s : fn.args) expected *= carriers[s].size();
    if (functions[f].size() != expected)
      throw SortError("function graph for " + fn.name + " is not total");
    for (const auto& [args, res] : functions[f]) {
      if (args.size() != fn.args.size()) throw SortError("function entry arity mismatch");
      for (size_t i = 0; i < args.size(); ++i)
        if (args[i].sort != fn.args[i] || !has(args[i]))
          throw SortError("function argument outside carriers");
      if (res.sort != fn.result || !has(res)) throw SortError("function value outside carriers");
    }
  }
}

Element term_value(const Term& t, const Structure& m, const Env& env) {
  if (t.kind == Term::Kind::Var) {
    auto it = env.find(t.name);
    if (it == env.end()) throw SortError("unbound variable in evaluation: " + t.name);
    return it->second;
  }
  const auto* f = m.sig.find_function(t.name);
  if (!f) throw SortError("undeclared function in evaluation: " + t.name);
  size_t idx = static_cast<size_t>(f - m.sig.functions.data());
  std::vector<Element> args;
  args.reserve(t.args.size());
  for (const auto& a : t.args) args.push_back(term_value(a, m, env));
  auto it = m.functions[idx].find(args);
  if (it == m.functions[idx].end())
    throw SortError("function graph for " + t.name + " missing an entry");
  return it->second;
}

bool holds(const Formula& body, const Structure& m, const Env& env) {
  switch (body.kind) {
    case Formula::Kind::Top:
      return true;
    case Formula::Kind::RelAtom: {
      const auto* r = m.sig.find_relation(body.symbol);
      if (!r) throw SortError("undeclared relation in evaluation: " + body.symbol);
      size_t idx = static_cast<size_t>(r - m.sig.relations.data());
      std::vector<Element> tuple;
      tuple.reserve(body.terms.size());
      for (const auto& t : body.terms) tuple.push_back(term_value(t, m, env));
      return m.relations[idx].count(tuple) > 0;
    }
    case Formula::Kind::EqAtom:
      return term_value(body.terms[0], m, env) == term_value(body.terms[1], m, env);
    case Formula::Kind::And:
      return holds(body.children[0], m, env) && holds(body.children[1], m, env);
    case Formula::Kind::Exists: {
      auto s = m.sig.sort_index(body.bound_sort);
      if (!s) throw SortError("undeclared sort in evaluation: " + body.bound_sort);
      for (const auto& e : m.carriers[*s]) {
        Env inner = env;
        inner[body.bound_var] = e;
        if (holds(body.children[0], m, inner)) return true;
      }
      return false;
    }
  }
  return false;
}

namespace {

// Iterates all assignments of the context over the carriers, in canonical
// order, invoking the callback; the callback returns false to stop.
template <typename Cb>
void for_each_assignment(const Context& ctx, const Structure& m, const Cb& cb) {
  std::vector<const std::set<Element>*> domains;
  domains.reserve(ctx.size());
  for (const auto& [v, s] : ctx) {
    auto idx = m.sig.sort_index(s);
    if (!idx) throw SortError("undeclared sort in context: " + s);
    domains.push_back(&m.carriers[*idx]);
  }
  std::vector<Element> tuple(ctx.size());
  std::vector<std::set<Element>::const_iterator> its(ctx.size());
  // Odometer over the carrier sets.
  size_t k = 0;
  if (ctx.empty()) {
    cb(tuple);
    return;
  }
  for (const auto* d : domains)
    if (d->empty()) return;
  for (size_t i = 0; i < ctx.size(); ++i) {
    its[i] = domains[i]->begin();
    tuple[i] = *its[i];
  }
  while (true) {
    if (!cb(tuple)) return;
    k = ctx.size();
    while (k > 0) {
      --k;
      ++its[k];
      if (its[k] != domains[k]->end()) {
        tuple[k] = *its[k];
        break;
      }
      its[k] = domains[k]->begin();
      tuple[k] = *its[k];
      if (k == 0) return;
    }
  }
}

Env env_of(const Context& ctx, const std::vector<Element>& tuple) {
  Env env;
  for (size_t i = 0; i < ctx.size(); ++i) env[ctx[i].first] = tuple[i];
  return env;
}

}  // namespace

std::set<std::vector<Element>> evaluate(const FormulaInContext& f, const Structure& m) {
  std::set<std::vector<Element>> out;
  for_each_assignment(f.context, m, [&](const std::vector<Element>& tuple) {
    if (holds(f.body, m, env_of(f.context, tuple))) out.insert(tuple);
    return true;
  });
  return out;
}

bool tuple_in_extension(const FormulaInContext& f, const std::vector<Element>& tuple,
                        const Structure& m) {
  if (tuple.size() != f.context.size())
    throw ArityError("tuple length does not match formula context");
  for (size_t i = 0; i < tuple.size(); ++i) {
    auto s = m.sig.sort_index(f.context[i].second);
    if (!s || tuple[i].sort != *s) return false;
    if (!m.has(tuple[i])) return false;
  }
  return holds(f.body, m, env_of(f.context, tuple));
}

bool satisfies(const Structure& m, const Sequent& s) {
  bool ok = true;
  for_each_assignment(s.context, m, [&](const std::vector<Element>& tuple) {
    Env env = env_of(s.context, tuple);
    if (holds(s.lhs, m, env) && !holds(s.rhs, m, env)) {
      ok = false;
      return false;
    }
    return true;
  });
  return ok;
}

bool satisfies_all(const Structure& m, const Theory& t) {
  for (const auto& ax : t.axioms)
    if (!satisfies(m, ax)) return false;
  return true;
}

}  // namespace rwb
