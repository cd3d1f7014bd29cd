#ifndef GIS_CLASSIFY_HPP_
#define GIS_CLASSIFY_HPP_

#include "gis/semigroup.hpp"

namespace gis {

// Band-variety and regularity flags. The identity-based band flags are
// evaluated over the idempotents only; is_band additionally requires every
// element to be idempotent.
struct Classification {
  bool regular = false;
  bool orthodox = false;   // regular + E(S) closed under products
  bool inverse = false;    // regular + |V(s)| = 1 for all s
  bool is_band = false;
  bool normal = false;         // efgh = egfh over E(S)
  bool left_normal = false;    // efg = egf
  bool right_normal = false;   // efg = feg
  bool left_regular = false;   // efe = ef
  bool right_regular = false;  // efe = fe
  bool generalized_inverse = false;
  bool left_generalized_inverse = false;
  bool right_generalized_inverse = false;

  std::string describe() const;
};

Classification classify(const FiniteSemigroup& s);

struct GreenRelations {
  Partition L, R, H, D, J;
};

GreenRelations green(const FiniteSemigroup& s);

struct NaturalOrder {
  int order = 0;
  std::vector<char> table;  // row-major leq
  bool leq(int a, int b) const { return table[a * order + b] != 0; }
};

// a <= b iff a = eb = bf for some idempotents e, f. Requires a regular
// semigroup; the result is verified to be a partial order.
NaturalOrder natural_order(const FiniteSemigroup& s);

// eSe with identity e; returns the local submonoid and the list of original
// elements forming its carrier (the embedding).
std::pair<FiniteSemigroup, std::vector<int>> local_submonoid(
    const FiniteSemigroup& s, int e);

struct OrderCompatibility {
  bool right_compatible = false;
  bool left_compatible = false;
  bool compatible = false;
  bool locally_l_unipotent = false;
  bool locally_r_unipotent = false;
  bool locally_inverse = false;
};

// Evaluates order compatibility and local unipotency on a regular semigroup.
// Each side of the three characterizing biconditionals is computed
// independently; a disagreement throws InternalTheoremViolation.
OrderCompatibility order_compatibility_report(const FiniteSemigroup& s);

}  // namespace gis

#endif  // GIS_CLASSIFY_HPP_
