#include "rwb/modelcat.hpp"

#include <algorithm>
#include <numeric>

namespace rwb {

namespace {

// Disjoint-set over indices, merging toward the smaller index.
struct UnionFind {
  std::vector<size_t> parent;
  explicit UnionFind(size_t n) : parent(n) { std::iota(parent.begin(), parent.end(), 0); }
  size_t find(size_t x) {
    while (parent[x] != x) {
      parent[x] = parent[parent[x]];
      x = parent[x];
    }
    return x;
  }
  void merge(size_t a, size_t b) {
    a = find(a);
    b = find(b);
    if (a == b) return;
    if (b < a) std::swap(a, b);
    parent[b] = a;
  }
};

}  // namespace

Product product(const std::vector<Structure>& factors, const Signature& sig) {
  const size_t k = factors.size();
  Structure obj = Structure::empty(sig);
  // Per sort: list of component tuples, and the paired element for each.
  std::vector<std::map<std::vector<Element>, Element>> encode(sig.sorts.size());

  auto pack = [&](uint32_t sort, const std::vector<Element>& comps) {
    auto it = encode[sort].find(comps);
    if (it != encode[sort].end()) return it->second;
    uint64_t id = 0;
    if (!comps.empty()) {
      id = comps[0].id;
      for (size_t i = 1; i < comps.size(); ++i) id = pair_ids(id, comps[i].id);
    }
    Element e{sort, id};
    encode[sort][comps] = e;
    return e;
  };

  // Carriers: cartesian product of the factor carriers per sort.
  for (uint32_t s = 0; s < sig.sorts.size(); ++s) {
    std::vector<std::vector<Element>> tuples{{}};
    for (size_t i = 0; i < k; ++i) {
      std::vector<std::vector<Element>> next;
      for (const auto& partial : tuples)
        for (const auto& e : factors[i].carriers[s]) {
          auto t = partial;
          t.push_back(e);
          next.push_back(std::move(t));
        }
      tuples = std::move(next);
    }
    for (const auto& comps : tuples) obj.carriers[s].insert(pack(s, comps));
  }

  // Relations: a product tuple is in R iff every component tuple is.
  for (size_t r = 0; r < sig.relations.size(); ++r) {
    const auto& arity = sig.relations[r].arity;
    std::vector<std::vector<const std::vector<Element>*>> choices{{}};
    for (size_t i = 0; i < k; ++i) {
      std::vector<std::vector<const std::vector<Element>*>> next;
      for (const auto& partial : choices)
        for (const auto& tuple : factors[i].relations[r]) {
          auto c = partial;
          c.push_back(&tuple);
          next.push_back(std::move(c));
        }
      choices = std::move(next);
    }
    if (k == 0) {
      // Terminal structure: full relations over the singleton carriers.
      std::vector<Element> tuple;
      tuple.reserve(arity.size());
      for (uint32_t s : arity) tuple.push_back(*obj.carriers[s].begin());
      obj.relations[r].insert(tuple);
      continue;
    }
    for (const auto& c : choices) {
      std::vector<Element> tuple;
      tuple.reserve(arity.size());
      for (size_t pos = 0; pos < arity.size(); ++pos) {
        std::vector<Element> comps;
        comps.reserve(k);
        for (size_t i = 0; i < k; ++i) comps.push_back((*c[i])[pos]);
        tuple.push_back(pack(arity[pos], comps));
      }
      obj.relations[r].insert(tuple);
    }
  }

  // Functions: componentwise application.
  for (size_t f = 0; f < sig.functions.size(); ++f) {
    const auto& fn = sig.functions[f];
    // Iterate argument tuples over the product carriers via their encodings.
    std::vector<std::vector<Element>> argTuples{{}};
    for (uint32_t s : fn.args) {
      std::vector<std::vector<Element>> next;
      for (const auto& partial : argTuples)
        for (const auto& e : obj.carriers[s]) {
          auto t = partial;
          t.push_back(e);
          next.push_back(std::move(t));
        }
      argTuples = std::move(next);
    }
    // Decode table: element -> component tuple, per sort.
    std::vector<std::map<Element, std::vector<Element>>> decode(sig.sorts.size());
    for (uint32_t s = 0; s < sig.sorts.size(); ++s)
      for (const auto& [comps, e] : encode[s]) decode[s][e] = comps;
    for (const auto& args : argTuples) {
      std::vector<Element> resComps;
      resComps.reserve(k);
      for (size_t i = 0; i < k; ++i) {
        std::vector<Element> compArgs;
        compArgs.reserve(args.size());
        for (size_t pos = 0; pos < args.size(); ++pos)
          compArgs.push_back(decode[fn.args[pos]].at(args[pos])[i]);
        resComps.push_back(factors[i].functions[f].at(compArgs));
      }
      obj.functions[f][args] = pack(fn.result, resComps);
    }
  }

  Product out;
  out.object = std::move(obj);
  out.projections.reserve(k);
  for (size_t i = 0; i < k; ++i) {
    Homomorphism p;
    p.source = out.object;
    p.target = factors[i];
    for (uint32_t s = 0; s < sig.sorts.size(); ++s)
      for (const auto& [comps, e] : encode[s]) p.map[e] = comps[i];
    out.projections.push_back(std::move(p));
  }
  return out;
}

const Homomorphism& DirectedDiagram::arrow(size_t i, size_t j) const {
  auto it = arrows.find({i, j});
  if (it == arrows.end()) throw DiagramError("missing arrow in diagram");
  return it->second;
}

void DirectedDiagram::validate() const {
  const size_t n = size();
  if (leq.size() != n) throw DiagramError("leq matrix does not match model count");
  for (const auto& row : leq)
    if (row.size() != n) throw DiagramError("leq matrix is not square");
  for (size_t i = 0; i < n; ++i)
    if (!leq[i][i]) throw DiagramError("leq is not reflexive");
  for (size_t i = 0; i < n; ++i)
    for (size_t j = 0; j < n; ++j) {
      if (i != j && leq[i][j] && leq[j][i]) throw DiagramError("leq is not antisymmetric");
      for (size_t k = 0; k < n; ++k)
        if (leq[i][j] && leq[j][k] && !leq[i][k]) throw DiagramError("leq is not transitive");
    }
  // Directedness: every pair needs an upper bound.
  for (size_t i = 0; i < n; ++i)
    for (size_t j = 0; j < n; ++j) {
      bool ok = false;
      for (size_t k = 0; k < n && !ok; ++k) ok = leq[i][k] && leq[j][k];
      if (!ok) throw DiagramError("index poset is not directed");
    }
  // Arrows present and functorial.
  for (size_t i = 0; i < n; ++i)
    for (size_t j = 0; j < n; ++j) {
      if (i == j || !leq[i][j]) continue;
      const auto& g = arrow(i, j);
      if (!(g.source == models[i]) || !(g.target == models[j]))
        throw DiagramError("arrow endpoints do not match diagram models");
      if (!g.is_valid()) throw DiagramError("diagram arrow is not a homomorphism");
    }
  for (size_t i = 0; i < n; ++i)
    for (size_t j = 0; j < n; ++j)
      for (size_t k = 0; k < n; ++k) {
        if (i == j || j == k || !leq[i][j] || !leq[j][k]) continue;
        if (!(compose(arrow(j, k), arrow(i, j)).map == arrow(i, k).map))
          throw DiagramError("diagram arrows are not functorial");
      }
}

Colimit directed_colimit(const DirectedDiagram& d) {
  d.validate();
  if (d.models.empty()) throw DiagramError("empty diagram has no directed colimit");
  const size_t n = d.size();
  const Signature& sig = d.models[0].sig;

  // Index the disjoint union of all stage elements.
  std::vector<std::pair<size_t, Element>> nodes;
  std::map<std::pair<size_t, Element>, size_t> nodeIndex;
  for (size_t i = 0; i < n; ++i)
    for (const auto& carrier : d.models[i].carriers)
      for (const auto& e : carrier) {
        nodeIndex[{i, e}] = nodes.size();
        nodes.emplace_back(i, e);
      }

  UnionFind uf(nodes.size());
  for (const auto& [key, g] : d.arrows) {
    auto [i, j] = key;
    for (const auto& [a, b] : g.map) uf.merge(nodeIndex.at({i, a}), nodeIndex.at({j, b}));
  }

  // Representative of each class: least (stage, element); nodes were indexed
  // in exactly that order, so the least node index works.
  std::map<size_t, size_t> classRep;  // root -> least node index
  for (size_t idx = 0; idx < nodes.size(); ++idx) {
    size_t root = uf.find(idx);
    auto it = classRep.find(root);
    if (it == classRep.end() || idx < it->second) classRep[root] = std::min(idx, root);
  }

  // Name the classes.  The representative keeps its own element name unless an
  // earlier class of the same sort claimed it, in which case a fresh counter
  // beyond every stage element is used.
  std::vector<uint64_t> nextFree(sig.sorts.size(), 0);
  for (const auto& [i, e] : nodes) nextFree[e.sort] = std::max(nextFree[e.sort], e.id + 1);
  std::map<size_t, Element> className;  // root -> colimit element
  std::vector<std::set<uint64_t>> used(sig.sorts.size());
  std::vector<size_t> roots;
  for (const auto& [root, rep] : classRep) roots.push_back(root);
  std::sort(roots.begin(), roots.end(),
            [&](size_t a, size_t b) { return classRep.at(a) < classRep.at(b); });
  for (size_t root : roots) {
    const Element& repName = nodes[classRep.at(root)].second;
    Element name = repName;
    if (used[name.sort].count(name.id)) name.id = nextFree[name.sort]++;
    used[name.sort].insert(name.id);
    className[root] = name;
  }

  auto cls = [&](size_t stage, const Element& e) {
    return className.at(uf.find(nodeIndex.at({stage, e})));
  };

  Structure obj = Structure::empty(sig);
  for (size_t i = 0; i < n; ++i)
    for (const auto& carrier : d.models[i].carriers)
      for (const auto& e : carrier) obj.carriers[e.sort].insert(cls(i, e));
  for (size_t i = 0; i < n; ++i) {
    for (size_t r = 0; r < sig.relations.size(); ++r)
      for (const auto& tuple : d.models[i].relations[r]) {
        std::vector<Element> mapped;
        mapped.reserve(tuple.size());
        for (const auto& e : tuple) mapped.push_back(cls(i, e));
        obj.relations[r].insert(std::move(mapped));
      }
    for (size_t f = 0; f < sig.functions.size(); ++f)
      for (const auto& [args, res] : d.models[i].functions[f]) {
        std::vector<Element> mapped;
        mapped.reserve(args.size());
        for (const auto& e : args) mapped.push_back(cls(i, e));
        Element value = cls(i, res);
        auto [it, fresh] = obj.functions[f].emplace(std::move(mapped), value);
        if (!fresh && !(it->second == value))
          throw DiagramError("stages disagree on a function value in the colimit");
      }
  }

  Colimit out;
  out.object = std::move(obj);
  out.cocone.reserve(n);
  for (size_t i = 0; i < n; ++i) {
    Homomorphism h;
    h.source = d.models[i];
    h.target = out.object;
    for (const auto& carrier : d.models[i].carriers)
      for (const auto& e : carrier) h.map[e] = cls(i, e);
    out.cocone.push_back(std::move(h));
  }
  return out;
}

std::vector<Element> definable_action(const FormulaInContext& f, const Homomorphism& h,
                                      const std::vector<Element>& tuple) {
  if (!tuple_in_extension(f, tuple, h.source))
    throw PreconditionError("tuple is not in the source extension of the formula");
  return h(tuple);
}

ColimitPreservationReport check_colimit_preservation(const FormulaInContext& f,
                                                     const DirectedDiagram& d) {
  Colimit colim = directed_colimit(d);  // validates the diagram
  ColimitPreservationReport report;

  // Stagewise extensions and the set-level colimit of them.
  std::vector<std::vector<std::vector<Element>>> stageTuples(d.size());
  std::map<std::pair<size_t, std::vector<Element>>, size_t> tupleIndex;
  std::vector<std::pair<size_t, std::vector<Element>>> tupleNodes;
  for (size_t i = 0; i < d.size(); ++i) {
    for (const auto& t : evaluate(f, d.models[i])) {
      stageTuples[i].push_back(t);
      tupleIndex[{i, t}] = tupleNodes.size();
      tupleNodes.emplace_back(i, t);
    }
  }
  UnionFind uf(tupleNodes.size());
  for (const auto& [key, g] : d.arrows) {
    auto [i, j] = key;
    for (const auto& t : stageTuples[i]) {
      std::vector<Element> image = g(t);
      // Regular formulas are preserved by homomorphisms, so the image must be
      // a stage-j tuple; a miss would indicate a broken invariant upstream.
      auto it = tupleIndex.find({j, image});
      if (it == tupleIndex.end()) {
        report.bijective = false;
        report.not_in_extension.push_back(image);
        continue;
      }
      uf.merge(tupleIndex.at({i, t}), it->second);
    }
  }

  // Comparison map: class of (i, t) -> cocone_i(t).
  auto colimExt = evaluate(f, colim.object);
  std::map<size_t, std::vector<Element>> classImage;  // root -> image tuple
  std::map<size_t, size_t> classWitness;              // root -> a member node
  std::map<std::vector<Element>, size_t> imageClass;  // image tuple -> root
  for (size_t idx = 0; idx < tupleNodes.size(); ++idx) {
    size_t root = uf.find(idx);
    classWitness.emplace(root, idx);
    const auto& [i, t] = tupleNodes[idx];
    std::vector<Element> image = colim.cocone[i](t);
    if (!colimExt.count(image)) {
      report.bijective = false;
      report.not_in_extension.push_back(image);
      continue;
    }
    auto it = classImage.find(root);
    if (it == classImage.end()) {
      classImage[root] = image;
      auto [jt, fresh] = imageClass.emplace(image, root);
      if (!fresh && jt->second != root) {
        report.bijective = false;
        report.collisions.emplace_back(tupleNodes[classWitness.at(jt->second)], tupleNodes[idx]);
      }
    } else if (!(it->second == image)) {
      // Members of one class with different images cannot happen when the
      // cocone commutes; flag it as a failure all the same.
      report.bijective = false;
      report.collisions.emplace_back(tupleNodes[classWitness.at(root)], tupleNodes[idx]);
    }
  }
  for (const auto& t : colimExt)
    if (!imageClass.count(t)) {
      report.bijective = false;
      report.missed.push_back(t);
    }
  return report;
}

}  // namespace rwb
