#ifndef RWB_MODELCAT_HPP
#define RWB_MODELCAT_HPP

#include "rwb/hom.hpp"
#include "rwb/structure.hpp"

namespace rwb {

// Finite product in the category of structures.  Carriers are cartesian
// products per sort, injected back into the universe through the pairing
// encoder; relations and functions act componentwise.  The empty product is
// the terminal structure.
struct Product {
  Structure object;
  std::vector<Homomorphism> projections;
};
Product product(const std::vector<Structure>& factors, const Signature& sig);

// A finite directed poset of structures.  `leq` must be reflexive; arrows are
// stored for every strict pair i < j with leq[i][j].
struct DirectedDiagram {
  std::vector<std::vector<char>> leq;
  std::vector<Structure> models;
  std::map<std::pair<size_t, size_t>, Homomorphism> arrows;

  size_t size() const { return models.size(); }
  const Homomorphism& arrow(size_t i, size_t j) const;

  // Throws DiagramError unless leq is a directed partial order and the arrows
  // are functorial (identities on the diagonal are implicit).
  void validate() const;
};

struct Colimit {
  Structure object;
  std::vector<Homomorphism> cocone;  // per stage
};

// Directed colimit by union-find over (stage, element) pairs.  Class
// representatives are the least (stage, element) pairs and keep their own
// element name whenever possible, so cocone maps send representatives to
// themselves; a representative name already claimed by an earlier class falls
// back to a fresh element.
Colimit directed_colimit(const DirectedDiagram& d);

// The action of the definable-set functor of f on a homomorphism: sends a
// tuple in the source extension to its image tuple.  Throws PreconditionError
// when the tuple is not in the source extension.
std::vector<Element> definable_action(const FormulaInContext& f, const Homomorphism& h,
                                      const std::vector<Element>& tuple);

// Compares colim(evaluate(f, M_d)) with evaluate(f, colim M_d) along the
// canonical map and reports failures with witnesses.
struct ColimitPreservationReport {
  bool bijective = true;
  std::vector<std::vector<Element>> not_in_extension;  // comparison map left the extension
  std::vector<std::vector<Element>> missed;            // colimit tuples not hit (surjectivity)
  std::vector<std::pair<std::pair<size_t, std::vector<Element>>,
                        std::pair<size_t, std::vector<Element>>>>
      collisions;  // distinct classes with equal image (injectivity)
};
ColimitPreservationReport check_colimit_preservation(const FormulaInContext& f,
                                                     const DirectedDiagram& d);

}  // namespace rwb

#endif  // RWB_MODELCAT_HPP
