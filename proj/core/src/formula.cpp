#include "rwb/formula.hpp"

#include <algorithm>

namespace rwb {

Formula conj_all(std::vector<Formula> fs) {
  if (fs.empty()) return Formula::top();
  Formula acc = std::move(fs.front());
  for (size_t i = 1; i < fs.size(); ++i) acc = Formula::conj(std::move(acc), std::move(fs[i]));
  return acc;
}

uint32_t term_sort(const Term& t, const Signature& sig,
                   const std::map<std::string, uint32_t>& scope) {
  if (t.kind == Term::Kind::Var) {
    auto it = scope.find(t.name);
    if (it == scope.end()) throw SortError("unbound variable: " + t.name);
    return it->second;
  }
  const auto* f = sig.find_function(t.name);
  if (!f) throw SortError("undeclared function symbol: " + t.name);
  if (f->args.size() != t.args.size())
    throw SortError("arity mismatch for function " + t.name + ": expected " +
                    std::to_string(f->args.size()) + ", got " + std::to_string(t.args.size()));
  for (size_t i = 0; i < t.args.size(); ++i)
    if (term_sort(t.args[i], sig, scope) != f->args[i])
      throw SortError("argument " + std::to_string(i) + " of " + t.name + " has wrong sort");
  return f->result;
}

void validate_context(const Context& ctx, const Signature& sig) {
  for (size_t i = 0; i < ctx.size(); ++i) {
    if (!sig.sort_index(ctx[i].second))
      throw SortError("undeclared sort in context: " + ctx[i].second);
    if (sig.has_symbol(ctx[i].first))
      throw SortError("variable shadows a declared symbol: " + ctx[i].first);
    for (size_t j = i + 1; j < ctx.size(); ++j)
      if (ctx[i].first == ctx[j].first)
        throw SortError("repeated context variable: " + ctx[i].first);
  }
}

namespace {

void validate_body(const Formula& body, const Signature& sig,
                   std::map<std::string, uint32_t>& scope) {
  switch (body.kind) {
    case Formula::Kind::Top:
      return;
    case Formula::Kind::RelAtom: {
      const auto* r = sig.find_relation(body.symbol);
      if (!r) throw SortError("undeclared relation symbol: " + body.symbol);
      if (r->arity.size() != body.terms.size())
        throw SortError("arity mismatch for relation " + body.symbol);
      for (size_t i = 0; i < body.terms.size(); ++i)
        if (term_sort(body.terms[i], sig, scope) != r->arity[i])
          throw SortError("argument " + std::to_string(i) + " of " + body.symbol +
                          " has wrong sort");
      return;
    }
    case Formula::Kind::EqAtom: {
      if (body.terms.size() != 2) throw SortError("malformed equality atom");
      if (term_sort(body.terms[0], sig, scope) != term_sort(body.terms[1], sig, scope))
        throw SortError("equality between different sorts");
      return;
    }
    case Formula::Kind::And:
      validate_body(body.children.at(0), sig, scope);
      validate_body(body.children.at(1), sig, scope);
      return;
    case Formula::Kind::Exists: {
      auto s = sig.sort_index(body.bound_sort);
      if (!s) throw SortError("undeclared sort in exists: " + body.bound_sort);
      if (sig.has_symbol(body.bound_var))
        throw SortError("variable shadows a declared symbol: " + body.bound_var);
      auto saved = scope.find(body.bound_var) != scope.end()
                       ? std::optional<uint32_t>(scope[body.bound_var])
                       : std::nullopt;
      scope[body.bound_var] = *s;
      validate_body(body.children.at(0), sig, scope);
      if (saved)
        scope[body.bound_var] = *saved;
      else
        scope.erase(body.bound_var);
      return;
    }
  }
}

}  // namespace

void validate(const FormulaInContext& f, const Signature& sig) {
  validate_context(f.context, sig);
  std::map<std::string, uint32_t> scope;
  for (const auto& [v, s] : f.context) scope[v] = *sig.sort_index(s);
  validate_body(f.body, sig, scope);
}

void validate(const Sequent& s, const Signature& sig) {
  validate_context(s.context, sig);
  std::map<std::string, uint32_t> scope;
  for (const auto& [v, so] : s.context) scope[v] = *sig.sort_index(so);
  auto scope2 = scope;
  validate_body(s.lhs, sig, scope);
  validate_body(s.rhs, sig, scope2);
}

void validate(const Theory& t) {
  t.signature.validate();
  for (const auto& ax : t.axioms) validate(ax, t.signature);
}

namespace {

void collect_free(const Formula& body, std::set<std::string>& bound,
                  std::set<std::string>& out) {
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
        if (t->kind == Term::Kind::Var) {
          if (!bound.count(t->name)) out.insert(t->name);
        } else {
          for (const auto& a : t->args) stack.push_back(&a);
        }
      }
      return;
    }
    case Formula::Kind::And:
      collect_free(body.children[0], bound, out);
      collect_free(body.children[1], bound, out);
      return;
    case Formula::Kind::Exists: {
      bool fresh = bound.insert(body.bound_var).second;
      collect_free(body.children[0], bound, out);
      if (fresh) bound.erase(body.bound_var);
      return;
    }
  }
}

}  // namespace

std::set<std::string> free_vars(const Formula& body) {
  std::set<std::string> bound, out;
  collect_free(body, bound, out);
  return out;
}

bool term_has_app(const Term& t) {
  if (t.kind == Term::Kind::App) return true;
  for (const auto& a : t.args)
    if (term_has_app(a)) return true;
  return false;
}

bool has_function_terms(const Formula& body) {
  switch (body.kind) {
    case Formula::Kind::Top:
      return false;
    case Formula::Kind::RelAtom:
    case Formula::Kind::EqAtom:
      return std::any_of(body.terms.begin(), body.terms.end(), term_has_app);
    case Formula::Kind::And:
      return has_function_terms(body.children[0]) || has_function_terms(body.children[1]);
    case Formula::Kind::Exists:
      return has_function_terms(body.children[0]);
  }
  return false;
}

std::string fresh_var(const std::string& base, const std::set<std::string>& used) {
  if (!used.count(base)) return base;
  std::string cand = base;
  do {
    cand += "'";
  } while (used.count(cand));
  return cand;
}

namespace {

Term rename_term(const Term& t, const std::map<std::string, std::string>& env) {
  if (t.kind == Term::Kind::Var) {
    auto it = env.find(t.name);
    return Term::var(it == env.end() ? t.name : it->second);
  }
  std::vector<Term> args;
  args.reserve(t.args.size());
  for (const auto& a : t.args) args.push_back(rename_term(a, env));
  return Term::app(t.name, std::move(args));
}

// env maps free variables to their new names; `avoid` holds every name that a
// bound variable must not collide with (images of the renaming plus all
// variables of the original formula).
Formula rename_body(const Formula& body, std::map<std::string, std::string> env,
                    std::set<std::string>& avoid) {
  switch (body.kind) {
    case Formula::Kind::Top:
      return body;
    case Formula::Kind::RelAtom: {
      std::vector<Term> ts;
      ts.reserve(body.terms.size());
      for (const auto& t : body.terms) ts.push_back(rename_term(t, env));
      return Formula::rel(body.symbol, std::move(ts));
    }
    case Formula::Kind::EqAtom:
      return Formula::eq(rename_term(body.terms[0], env), rename_term(body.terms[1], env));
    case Formula::Kind::And:
      return Formula::conj(rename_body(body.children[0], env, avoid),
                           rename_body(body.children[1], env, avoid));
    case Formula::Kind::Exists: {
      std::string bv = body.bound_var;
      if (avoid.count(bv)) {
        bv = fresh_var(bv, avoid);
      }
      avoid.insert(bv);
      env[body.bound_var] = bv;
      Formula inner = rename_body(body.children[0], env, avoid);
      return Formula::exists(bv, body.bound_sort, std::move(inner));
    }
  }
  return body;
}

}  // namespace

FormulaInContext substitute(const FormulaInContext& f,
                            const std::map<std::string, std::string>& renaming) {
  // New context: image variables in order of first appearance.
  Context ctx;
  std::map<std::string, std::string> imageSort;
  std::map<std::string, std::string> env;
  for (const auto& [v, s] : f.context) {
    auto it = renaming.find(v);
    std::string target = it == renaming.end() ? v : it->second;
    env[v] = target;
    auto jt = imageSort.find(target);
    if (jt == imageSort.end()) {
      imageSort[target] = s;
      ctx.emplace_back(target, s);
    } else if (jt->second != s) {
      throw SortError("renaming collapses variables of different sorts onto " + target);
    }
  }
  // Bound variables must stay clear of the context's new names; freshened
  // binders are added to the set as they are introduced.
  std::set<std::string> avoid;
  for (const auto& [v, s] : ctx) avoid.insert(v);
  Formula body = rename_body(f.body, env, avoid);
  return FormulaInContext{std::move(ctx), std::move(body)};
}

namespace {

Formula alpha_body(const Formula& body, std::map<std::string, std::string> env, size_t& counter) {
  switch (body.kind) {
    case Formula::Kind::Top:
      return body;
    case Formula::Kind::RelAtom: {
      std::vector<Term> ts;
      for (const auto& t : body.terms) ts.push_back(rename_term(t, env));
      return Formula::rel(body.symbol, std::move(ts));
    }
    case Formula::Kind::EqAtom:
      return Formula::eq(rename_term(body.terms[0], env), rename_term(body.terms[1], env));
    case Formula::Kind::And:
      return Formula::conj(alpha_body(body.children[0], env, counter),
                           alpha_body(body.children[1], env, counter));
    case Formula::Kind::Exists: {
      std::string bv = "_b" + std::to_string(counter++);
      env[body.bound_var] = bv;
      Formula inner = alpha_body(body.children[0], env, counter);
      return Formula::exists(bv, body.bound_sort, std::move(inner));
    }
  }
  return body;
}

}  // namespace

FormulaInContext alpha_normal_form(const FormulaInContext& f) {
  std::map<std::string, std::string> env;
  Context ctx;
  for (size_t i = 0; i < f.context.size(); ++i) {
    std::string v = "_v" + std::to_string(i);
    env[f.context[i].first] = v;
    ctx.emplace_back(v, f.context[i].second);
  }
  size_t counter = 0;
  Formula body = alpha_body(f.body, env, counter);
  return FormulaInContext{std::move(ctx), std::move(body)};
}

bool alpha_equal(const FormulaInContext& a, const FormulaInContext& b) {
  return alpha_normal_form(a) == alpha_normal_form(b);
}

bool is_reduced(const std::vector<Element>& tuple) {
  for (size_t i = 0; i < tuple.size(); ++i)
    for (size_t j = i + 1; j < tuple.size(); ++j)
      if (tuple[i] == tuple[j]) return false;
  return true;
}

std::pair<FormulaInContext, std::vector<Element>> reduce_presentation(
    const FormulaInContext& f, std::vector<Element> tuple, const Signature& sig) {
  if (tuple.size() != f.context.size())
    throw ArityError("tuple length " + std::to_string(tuple.size()) +
                     " does not match context length " + std::to_string(f.context.size()));
  for (size_t i = 0; i < tuple.size(); ++i) {
    auto s = sig.sort_index(f.context[i].second);
    if (!s || tuple[i].sort != *s)
      throw SortError("tuple element " + std::to_string(i) + " has wrong sort tag");
  }
  auto find_dup = [&]() -> std::optional<std::pair<size_t, size_t>> {
    for (size_t i = 0; i < tuple.size(); ++i)
      for (size_t j = i + 1; j < tuple.size(); ++j)
        if (tuple[i] == tuple[j]) return std::make_pair(i, j);
    return std::nullopt;
  };
  FormulaInContext cur = f;
  while (auto dup = find_dup()) {
    auto [i, j] = *dup;
    std::map<std::string, std::string> m{{cur.context[j].first, cur.context[i].first}};
    cur = substitute(cur, m);
    tuple.erase(tuple.begin() + static_cast<std::ptrdiff_t>(j));
  }
  return {cur, tuple};
}

}  // namespace rwb
