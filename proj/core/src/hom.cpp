#include "rwb/hom.hpp"

#include <algorithm>

namespace rwb {

Homomorphism Homomorphism::identity(const Structure& m) {
  Homomorphism h;
  h.source = m;
  h.target = m;
  for (const auto& carrier : m.carriers)
    for (const auto& e : carrier) h.map[e] = e;
  return h;
}

bool Homomorphism::is_valid() const {
  for (const auto& carrier : source.carriers)
    for (const auto& e : carrier) {
      auto it = map.find(e);
      if (it == map.end()) return false;
      if (it->second.sort != e.sort || !target.has(it->second)) return false;
    }
  for (size_t r = 0; r < source.relations.size(); ++r)
    for (const auto& tuple : source.relations[r])
      if (!target.relations[r].count((*this)(tuple))) return false;
  for (size_t f = 0; f < source.functions.size(); ++f)
    for (const auto& [args, res] : source.functions[f]) {
      auto it = target.functions[f].find((*this)(args));
      if (it == target.functions[f].end() || !(it->second == (*this)(res))) return false;
    }
  return true;
}

bool Homomorphism::is_injective() const {
  std::set<Element> seen;
  for (const auto& [k, v] : map)
    if (!seen.insert(v).second) return false;
  return true;
}

bool Homomorphism::is_surjective() const {
  std::set<Element> image;
  for (const auto& [k, v] : map) image.insert(v);
  for (const auto& carrier : target.carriers)
    for (const auto& e : carrier)
      if (!image.count(e)) return false;
  return true;
}

Homomorphism compose(const Homomorphism& g, const Homomorphism& f) {
  if (!(f.target == g.source)) throw PreconditionError("composition of non-composable maps");
  Homomorphism h;
  h.source = f.source;
  h.target = g.target;
  for (const auto& [k, v] : f.map) h.map[k] = g(v);
  return h;
}

namespace {

struct SearchState {
  const Structure& m;
  const Structure& n;
  std::vector<Element> vars;            // source elements in canonical order
  std::map<Element, Element> assigned;  // grows and shrinks during search

  // Checks every source fact whose elements are all assigned and which
  // involves the just-assigned element.
  bool consistent(const Element& just) {
    for (size_t r = 0; r < m.relations.size(); ++r)
      for (const auto& tuple : m.relations[r]) {
        if (std::find(tuple.begin(), tuple.end(), just) == tuple.end()) continue;
        std::vector<Element> image;
        image.reserve(tuple.size());
        bool complete = true;
        for (const auto& e : tuple) {
          auto it = assigned.find(e);
          if (it == assigned.end()) {
            complete = false;
            break;
          }
          image.push_back(it->second);
        }
        if (complete && !n.relations[r].count(image)) return false;
      }
    for (size_t f = 0; f < m.functions.size(); ++f)
      for (const auto& [args, res] : m.functions[f]) {
        bool involves = res == just || std::find(args.begin(), args.end(), just) != args.end();
        if (!involves) continue;
        std::vector<Element> image;
        image.reserve(args.size());
        bool complete = true;
        for (const auto& e : args) {
          auto it = assigned.find(e);
          if (it == assigned.end()) {
            complete = false;
            break;
          }
          image.push_back(it->second);
        }
        auto rt = assigned.find(res);
        if (!complete || rt == assigned.end()) continue;
        auto it = n.functions[f].find(image);
        if (it == n.functions[f].end() || !(it->second == rt->second)) return false;
      }
    return true;
  }

  bool emit(const std::function<bool(const Homomorphism&)>& cb) {
    Homomorphism h;
    h.source = m;
    h.target = n;
    h.map = assigned;
    return cb(h);
  }

  // Returns false when enumeration should stop.
  bool search(size_t i, const std::function<bool(const Homomorphism&)>& cb) {
    if (i == vars.size()) return emit(cb);
    const Element& v = vars[i];
    if (auto it = assigned.find(v); it != assigned.end()) {
      // Seeded; validity of the seed value was checked on entry, facts here.
      if (!consistent(v)) return true;
      return search(i + 1, cb);
    }
    for (const auto& cand : n.carriers[v.sort]) {
      assigned[v] = cand;
      bool keep = !consistent(v) || search(i + 1, cb);
      assigned.erase(v);
      if (!keep) return false;
    }
    return true;
  }
};

}  // namespace

void for_each_hom(const Structure& m, const Structure& n, const std::map<Element, Element>& seed,
                  const std::function<bool(const Homomorphism&)>& cb) {
  SearchState st{m, n, {}, {}};
  for (const auto& carrier : m.carriers)
    for (const auto& e : carrier) st.vars.push_back(e);
  std::sort(st.vars.begin(), st.vars.end());
  for (const auto& [k, v] : seed) {
    if (!m.has(k)) throw PreconditionError("seed key outside source carriers");
    if (k.sort != v.sort || !n.has(v)) return;  // no extension can exist
    st.assigned[k] = v;
  }
  st.search(0, cb);
}

std::vector<Homomorphism> find_homs(const Structure& m, const Structure& n,
                                    const std::map<Element, Element>& seed, size_t limit) {
  std::vector<Homomorphism> out;
  for_each_hom(m, n, seed, [&](const Homomorphism& h) {
    out.push_back(h);
    return out.size() < limit;
  });
  return out;
}

std::optional<Homomorphism> find_hom(const Structure& m, const Structure& n,
                                     const std::map<Element, Element>& seed) {
  auto v = find_homs(m, n, seed, 1);
  if (v.empty()) return std::nullopt;
  return v.front();
}

size_t count_homs(const Structure& m, const Structure& n,
                  const std::map<Element, Element>& seed) {
  size_t k = 0;
  for_each_hom(m, n, seed, [&](const Homomorphism&) {
    ++k;
    return true;
  });
  return k;
}

std::optional<std::map<Element, Element>> tuple_seed(const std::vector<Element>& from,
                                                     const std::vector<Element>& to) {
  if (from.size() != to.size()) return std::nullopt;
  std::map<Element, Element> seed;
  for (size_t i = 0; i < from.size(); ++i) {
    if (from[i].sort != to[i].sort) return std::nullopt;
    auto [it, fresh] = seed.emplace(from[i], to[i]);
    if (!fresh && !(it->second == to[i])) return std::nullopt;
  }
  return seed;
}

bool is_isomorphism(const Homomorphism& h) {
  if (!h.is_injective() || !h.is_surjective()) return false;
  // The inverse must also be a homomorphism.
  Homomorphism inv;
  inv.source = h.target;
  inv.target = h.source;
  for (const auto& [k, v] : h.map) inv.map[v] = k;
  return inv.is_valid();
}

std::pair<Homomorphism, Homomorphism> factor_hom(const Homomorphism& h) {
  if (!h.is_injective())
    throw NotInjectiveError("factor_hom requires 1-1 component functions");
  Structure image = Structure::empty(h.source.sig);
  for (const auto& carrier : h.source.carriers)
    for (const auto& e : carrier) image.carriers[h(e).sort].insert(h(e));
  for (size_t r = 0; r < h.source.relations.size(); ++r)
    for (const auto& tuple : h.source.relations[r]) image.relations[r].insert(h(tuple));
  for (size_t f = 0; f < h.source.functions.size(); ++f)
    for (const auto& [args, res] : h.source.functions[f]) image.functions[f][h(args)] = h(res);

  Homomorphism iso;
  iso.source = h.source;
  iso.target = image;
  iso.map = h.map;
  Homomorphism incl = Homomorphism::identity(image);
  incl.target = h.target;
  return {iso, incl};
}

}  // namespace rwb
