#include "rwb/enumerate.hpp"

#include <algorithm>
#include <numeric>

#include "rwb/hom.hpp"

namespace rwb {

namespace {

// Flat order-sensitive encoding of a structure under a per-sort permutation
// of carrier ids.  Carriers are ranges {0..n_s-1}, so a permutation is a
// vector per sort.
struct Encoder {
  const Structure& m;
  const std::vector<std::vector<uint64_t>>* perm = nullptr;  // per sort: id -> new id

  uint64_t remap(const Element& e) const { return perm ? (*perm)[e.sort][e.id] : e.id; }

  std::vector<uint64_t> encode() const {
    std::vector<uint64_t> out;
    for (size_t r = 0; r < m.relations.size(); ++r) {
      std::vector<std::vector<uint64_t>> tuples;
      for (const auto& tuple : m.relations[r]) {
        std::vector<uint64_t> t;
        t.reserve(tuple.size());
        for (const auto& e : tuple) t.push_back(remap(e));
        tuples.push_back(std::move(t));
      }
      std::sort(tuples.begin(), tuples.end());
      out.push_back(tuples.size());
      for (const auto& t : tuples) out.insert(out.end(), t.begin(), t.end());
    }
    for (size_t f = 0; f < m.functions.size(); ++f) {
      std::vector<std::vector<uint64_t>> entries;
      for (const auto& [args, res] : m.functions[f]) {
        std::vector<uint64_t> t;
        t.reserve(args.size() + 1);
        for (const auto& e : args) t.push_back(remap(e));
        t.push_back(remap(res));
        entries.push_back(std::move(t));
      }
      std::sort(entries.begin(), entries.end());
      for (const auto& t : entries) out.insert(out.end(), t.begin(), t.end());
    }
    return out;
  }
};

// Visits each combined per-sort permutation; cb returns false to abort.
bool for_each_permutation(const std::vector<size_t>& sizes,
                          const std::function<bool(const std::vector<std::vector<uint64_t>>&)>& cb) {
  std::vector<std::vector<uint64_t>> perms(sizes.size());
  for (size_t s = 0; s < sizes.size(); ++s) {
    perms[s].resize(sizes[s]);
    std::iota(perms[s].begin(), perms[s].end(), 0);
  }
  // Odometer over per-sort permutations via std::next_permutation.
  while (true) {
    if (!cb(perms)) return false;
    size_t s = 0;
    while (s < perms.size() && !std::next_permutation(perms[s].begin(), perms[s].end())) ++s;
    if (s == perms.size()) return true;
  }
}

}  // namespace

bool is_canonical_form(const Structure& m) {
  std::vector<size_t> sizes;
  sizes.reserve(m.carriers.size());
  for (const auto& c : m.carriers) sizes.push_back(c.size());
  Encoder self{m, nullptr};
  const std::vector<uint64_t> base = self.encode();
  bool canonical = true;
  for_each_permutation(sizes, [&](const std::vector<std::vector<uint64_t>>& perm) {
    Encoder e{m, &perm};
    if (e.encode() < base) {
      canonical = false;
      return false;
    }
    return true;
  });
  return canonical;
}

bool are_isomorphic(const Structure& a, const Structure& b) {
  for (size_t s = 0; s < a.carriers.size(); ++s)
    if (a.carriers[s].size() != b.carriers[s].size()) return false;
  bool found = false;
  for_each_hom(a, b, {}, [&](const Homomorphism& h) {
    if (is_isomorphism(h)) {
      found = true;
      return false;
    }
    return true;
  });
  return found;
}

void for_each_model(const Theory& t, size_t maxPerSort,
                    const std::function<bool(const Structure&)>& cb) {
  const Signature& sig = t.signature;
  const size_t nsorts = sig.sorts.size();

  // All carrier shapes, ordered by (total, lexicographic).
  std::vector<std::vector<size_t>> shapes;
  std::vector<size_t> shape(nsorts, 0);
  while (true) {
    shapes.push_back(shape);
    size_t s = nsorts;
    bool done = true;
    while (s > 0) {
      --s;
      if (shape[s] < maxPerSort) {
        ++shape[s];
        std::fill(shape.begin() + static_cast<std::ptrdiff_t>(s) + 1, shape.end(), 0);
        done = false;
        break;
      }
    }
    if (done) break;
  }
  std::stable_sort(shapes.begin(), shapes.end(),
                   [](const std::vector<size_t>& a, const std::vector<size_t>& b) {
                     size_t ta = std::accumulate(a.begin(), a.end(), size_t{0});
                     size_t tb = std::accumulate(b.begin(), b.end(), size_t{0});
                     if (ta != tb) return ta < tb;
                     return a < b;
                   });

  for (const auto& sizes : shapes) {
    Structure base = Structure::empty(sig);
    for (uint32_t s = 0; s < nsorts; ++s)
      for (uint64_t i = 0; i < sizes[s]; ++i) base.carriers[s].insert(Element{s, i});

    // Relation tuple spaces in canonical order.
    std::vector<std::vector<std::vector<Element>>> relSpace(sig.relations.size());
    bool impossible = false;
    for (size_t r = 0; r < sig.relations.size(); ++r) {
      std::vector<std::vector<Element>> tuples{{}};
      for (uint32_t s : sig.relations[r].arity) {
        std::vector<std::vector<Element>> next;
        for (const auto& partial : tuples)
          for (const auto& e : base.carriers[s]) {
            auto t2 = partial;
            t2.push_back(e);
            next.push_back(std::move(t2));
          }
        tuples = std::move(next);
      }
      relSpace[r] = std::move(tuples);
    }
    // Function cells: argument tuples needing a value; empty result carrier
    // with nonempty argument space means no total function exists.
    std::vector<std::vector<std::vector<Element>>> funCells(sig.functions.size());
    for (size_t f = 0; f < sig.functions.size(); ++f) {
      std::vector<std::vector<Element>> tuples{{}};
      for (uint32_t s : sig.functions[f].args) {
        std::vector<std::vector<Element>> next;
        for (const auto& partial : tuples)
          for (const auto& e : base.carriers[s]) {
            auto t2 = partial;
            t2.push_back(e);
            next.push_back(std::move(t2));
          }
        tuples = std::move(next);
      }
      funCells[f] = std::move(tuples);
      if (!funCells[f].empty() && base.carriers[sig.functions[f].result].empty()) {
        impossible = true;
        break;
      }
    }
    if (impossible) continue;

    // Odometer state: one bit per relation tuple, one value index per cell.
    std::vector<std::vector<bool>> relBits(sig.relations.size());
    for (size_t r = 0; r < sig.relations.size(); ++r) relBits[r].assign(relSpace[r].size(), false);
    std::vector<std::vector<size_t>> funVals(sig.functions.size());
    for (size_t f = 0; f < sig.functions.size(); ++f) funVals[f].assign(funCells[f].size(), 0);

    while (true) {
      Structure m = base;
      for (size_t r = 0; r < sig.relations.size(); ++r)
        for (size_t i = 0; i < relSpace[r].size(); ++i)
          if (relBits[r][i]) m.relations[r].insert(relSpace[r][i]);
      for (size_t f = 0; f < sig.functions.size(); ++f) {
        const auto& carrier = base.carriers[sig.functions[f].result];
        for (size_t i = 0; i < funCells[f].size(); ++i) {
          auto it = carrier.begin();
          std::advance(it, static_cast<std::ptrdiff_t>(funVals[f][i]));
          m.functions[f][funCells[f][i]] = *it;
        }
      }

      if (satisfies_all(m, t) && is_canonical_form(m)) {
        if (!cb(m)) return;
      }

      // Advance the odometer: function values first, then relation bits.
      bool carried = true;
      for (size_t f = 0; f < sig.functions.size() && carried; ++f) {
        size_t radix = base.carriers[sig.functions[f].result].size();
        for (size_t i = 0; i < funVals[f].size() && carried; ++i) {
          if (++funVals[f][i] < radix) {
            carried = false;
          } else {
            funVals[f][i] = 0;
          }
        }
      }
      for (size_t r = 0; r < sig.relations.size() && carried; ++r)
        for (size_t i = 0; i < relBits[r].size() && carried; ++i) {
          if (!relBits[r][i]) {
            relBits[r][i] = true;
            carried = false;
          } else {
            relBits[r][i] = false;
          }
        }
      if (carried) break;
    }
  }
}

std::vector<Structure> enumerate_models(const Theory& t, size_t maxPerSort) {
  std::vector<Structure> out;
  for_each_model(t, maxPerSort, [&](const Structure& m) {
    out.push_back(m);
    return true;
  });
  return out;
}

}  // namespace rwb
