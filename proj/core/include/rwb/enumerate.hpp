#ifndef RWB_ENUMERATE_HPP
#define RWB_ENUMERATE_HPP

#include <functional>

#include "rwb/structure.hpp"

namespace rwb {

// Enumerates, up to isomorphism and in a deterministic canonical order, every
// structure with at most `maxPerSort` elements per sort that satisfies the
// theory.  Carrier size vectors are visited by (total, lexicographic) order;
// within one shape, relation tables and function graphs run through a
// lexicographic odometer, axioms filter first, and only canonical forms
// (minimal under carrier permutations) are kept.  The callback returns false
// to stop.
void for_each_model(const Theory& t, size_t maxPerSort,
                    const std::function<bool(const Structure&)>& cb);

std::vector<Structure> enumerate_models(const Theory& t, size_t maxPerSort);

// Canonical-form test used for the isomorphism rejection; exposed for
// cross-checking against pairwise isomorphism search.  Expects carriers of
// the form {d0..d(n-1)} per sort, as the enumerator produces.
bool is_canonical_form(const Structure& m);

bool are_isomorphic(const Structure& a, const Structure& b);

}  // namespace rwb

#endif  // RWB_ENUMERATE_HPP
