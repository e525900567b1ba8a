#ifndef RWB_SIGNATURE_HPP
#define RWB_SIGNATURE_HPP

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "rwb/errors.hpp"

namespace rwb {

// A many-sorted vocabulary.  Relation arities may be empty (nullary
// relations) and functions may have no arguments (constants).
struct Signature {
  struct Relation {
    std::string name;
    std::vector<uint32_t> arity;  // sort indices
  };
  struct Function {
    std::string name;
    std::vector<uint32_t> args;  // sort indices
    uint32_t result = 0;
  };

  std::vector<std::string> sorts;
  std::vector<Relation> relations;
  std::vector<Function> functions;

  std::optional<uint32_t> sort_index(const std::string& name) const {
    for (uint32_t i = 0; i < sorts.size(); ++i)
      if (sorts[i] == name) return i;
    return std::nullopt;
  }
  const Relation* find_relation(const std::string& name) const {
    for (const auto& r : relations)
      if (r.name == name) return &r;
    return nullptr;
  }
  const Function* find_function(const std::string& name) const {
    for (const auto& f : functions)
      if (f.name == name) return &f;
    return nullptr;
  }
  bool has_symbol(const std::string& name) const {
    return find_relation(name) != nullptr || find_function(name) != nullptr;
  }

  // Checks name disjointness and that all referenced sort indices exist.
  void validate() const {
    for (size_t i = 0; i < sorts.size(); ++i)
      for (size_t j = i + 1; j < sorts.size(); ++j)
        if (sorts[i] == sorts[j]) throw SortError("duplicate sort name: " + sorts[i]);
    auto check_sort = [&](uint32_t s, const std::string& where) {
      if (s >= sorts.size()) throw SortError("undeclared sort in " + where);
    };
    for (size_t i = 0; i < relations.size(); ++i) {
      for (uint32_t s : relations[i].arity) check_sort(s, "relation " + relations[i].name);
      for (size_t j = i + 1; j < relations.size(); ++j)
        if (relations[i].name == relations[j].name)
          throw SortError("duplicate relation name: " + relations[i].name);
    }
    for (size_t i = 0; i < functions.size(); ++i) {
      const auto& f = functions[i];
      for (uint32_t s : f.args) check_sort(s, "function " + f.name);
      check_sort(f.result, "function " + f.name);
      for (size_t j = i + 1; j < functions.size(); ++j)
        if (f.name == functions[j].name) throw SortError("duplicate function name: " + f.name);
      if (find_relation(f.name)) throw SortError("name used as both relation and function: " + f.name);
    }
  }

  friend bool operator==(const Signature& a, const Signature& b) {
    auto rel_eq = [](const Relation& x, const Relation& y) {
      return x.name == y.name && x.arity == y.arity;
    };
    auto fun_eq = [](const Function& x, const Function& y) {
      return x.name == y.name && x.args == y.args && x.result == y.result;
    };
    if (a.sorts != b.sorts) return false;
    if (a.relations.size() != b.relations.size() || a.functions.size() != b.functions.size())
      return false;
    for (size_t i = 0; i < a.relations.size(); ++i)
      if (!rel_eq(a.relations[i], b.relations[i])) return false;
    for (size_t i = 0; i < a.functions.size(); ++i)
      if (!fun_eq(a.functions[i], b.functions[i])) return false;
    return true;
  }
};

}  // namespace rwb

#endif  // RWB_SIGNATURE_HPP
