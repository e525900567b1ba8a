#ifndef RWB_HOM_HPP
#define RWB_HOM_HPP

#include <functional>
#include <optional>

#include "rwb/structure.hpp"

namespace rwb {

// A sort-indexed structure-preserving map.  Stored as a single element map;
// sorts are implicit in the element tags.
struct Homomorphism {
  Structure source;
  Structure target;
  std::map<Element, Element> map;

  Element operator()(const Element& e) const {
    auto it = map.find(e);
    if (it == map.end()) throw PreconditionError("homomorphism undefined on " + to_string(e));
    return it->second;
  }
  std::vector<Element> operator()(const std::vector<Element>& tuple) const {
    std::vector<Element> out;
    out.reserve(tuple.size());
    for (const auto& e : tuple) out.push_back((*this)(e));
    return out;
  }

  static Homomorphism identity(const Structure& m);

  // Defined on every source element, lands in the target carriers, preserves
  // sorts, relation membership, and function application.
  bool is_valid() const;
  bool is_injective() const;
  bool is_surjective() const;

  friend bool operator==(const Homomorphism& a, const Homomorphism& b) {
    return a.source == b.source && a.target == b.target && a.map == b.map;
  }
};

Homomorphism compose(const Homomorphism& g, const Homomorphism& f);  // g after f

// Enumerates, in a deterministic order, exactly the homomorphisms from m to n
// extending the seed.  Backtracking over the canonical element order with
// incremental constraint checks; the callback returns false to stop early.
void for_each_hom(const Structure& m, const Structure& n, const std::map<Element, Element>& seed,
                  const std::function<bool(const Homomorphism&)>& cb);

std::vector<Homomorphism> find_homs(const Structure& m, const Structure& n,
                                    const std::map<Element, Element>& seed = {},
                                    size_t limit = SIZE_MAX);

std::optional<Homomorphism> find_hom(const Structure& m, const Structure& n,
                                     const std::map<Element, Element>& seed = {});

size_t count_homs(const Structure& m, const Structure& n,
                  const std::map<Element, Element>& seed = {});

// Builds the seed a_i -> b_i; nullopt when the assignment is inconsistent
// (repeated source element sent to two targets) or sort-incorrect.
std::optional<std::map<Element, Element>> tuple_seed(const std::vector<Element>& from,
                                                     const std::vector<Element>& to);

bool is_isomorphism(const Homomorphism& h);

// Factors an injective homomorphism as an isomorphism onto its image followed
// by a carrier inclusion.  The image carries exactly the transported facts of
// the source, so the first leg is a genuine isomorphism.  Throws
// NotInjectiveError when a component map is not 1-1.
std::pair<Homomorphism, Homomorphism> factor_hom(const Homomorphism& h);

}  // namespace rwb

#endif  // RWB_HOM_HPP
