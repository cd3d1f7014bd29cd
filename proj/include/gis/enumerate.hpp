#ifndef GIS_ENUMERATE_HPP_
#define GIS_ENUMERATE_HPP_

#include <functional>

#include "gis/semigroup.hpp"

namespace gis {

// Least table over all relabelings; the isomorphism-class fingerprint used
// for orders up to 4.
std::vector<int> canonical_table(const FiniteSemigroup& s);

// All semigroups of the given order up to isomorphism, by backtracking over
// table cells with incremental associativity pruning. bands_only fixes the
// diagonal to x*x = x. Caps: order <= 5 (6 for bands), overridable through
// the GIS_MAX_ORDER environment variable; throws OrderBoundExceeded.
std::vector<FiniteSemigroup> enumerate_semigroups(int order,
                                                  bool bands_only = false);

// Unpruned oracle: tries every table of order <= 3 and keeps the associative
// ones, reduced by explicit orbit scan. Agreement with enumerate_semigroups
// is a standing test.
std::vector<FiniteSemigroup> naive_enumerate(int order);

int max_enumeration_order(bool bands_only);

// Enumerated members passing a predicate, e.g. the right normal bands.
std::vector<FiniteSemigroup> enumerate_filtered(
    int order, const std::function<bool(const FiniteSemigroup&)>& keep,
    bool bands_only = false);

}  // namespace gis

#endif  // GIS_ENUMERATE_HPP_
