#ifndef RWB_ELEMENT_HPP
#define RWB_ELEMENT_HPP

#include <compare>
#include <cstdint>
#include <string>
#include <vector>

namespace rwb {

// An atom of the universe the structures draw their elements from.  Atoms are
// sort-tagged counters: `d0, d1, ...` within each sort, totally ordered by
// (sort, id).  The same counter in two different sorts is two different atoms.
struct Element {
  uint32_t sort = 0;  // index into the governing signature's sort list
  uint64_t id = 0;

  friend auto operator<=>(const Element&, const Element&) = default;
};

inline std::string to_string(const Element& e) { return "d" + std::to_string(e.id); }

inline std::string to_string(const std::vector<Element>& tuple) {
  std::string s = "(";
  for (size_t i = 0; i < tuple.size(); ++i) {
    if (i) s += ",";
    s += to_string(tuple[i]);
  }
  return s + ")";
}

// Injects a pair of counters into a single counter, so that product elements
// stay inside the universe.  Standard Cantor pairing; ids at workbench scale
// are far from overflow.
inline uint64_t pair_ids(uint64_t a, uint64_t b) { return (a + b) * (a + b + 1) / 2 + b; }

}  // namespace rwb

#endif  // RWB_ELEMENT_HPP
