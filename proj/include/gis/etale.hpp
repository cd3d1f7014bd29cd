#ifndef GIS_ETALE_HPP_
#define GIS_ETALE_HPP_

#include "gis/presheaf.hpp"
#include "gis/semigroup.hpp"

namespace gis {

// A finite inverse semigroup with its inversion table and idempotent index.
struct InverseSemigroup {
  FiniteSemigroup s;
  std::vector<int> inv;        // s -> s^-1
  std::vector<int> idem;       // sorted idempotents
  std::vector<int> idem_index; // element -> position in idem, or -1

  int d(int x) const { return s.at(inv[x], x); }
  int r(int x) const { return s.at(x, inv[x]); }
  // E(S) as a meet semilattice; index i stands for idem[i].
  MeetSemilattice e_semilattice() const;
};

// Verifies the semigroup is inverse and fills in the inversion data.
InverseSemigroup make_inverse(const FiniteSemigroup& s);

// Total action of an inverse semigroup with a support map into E(S).
struct EtaleAction {
  InverseSemigroup actor;
  int carrier_size = 0;
  std::vector<int> support;            // x -> element id (an idempotent)
  std::vector<std::vector<int>> act;   // [s][x]

  int apply(int s, int x) const { return act[s][x]; }
  bool global_support() const;
};

// Checks the action law and the two support axioms; throws NotAnAction,
// E1Violated or E2Violated with a witness.
EtaleAction validate_etale(InverseSemigroup actor, std::vector<int> support,
                           std::vector<std::vector<int>> act);

// Self-translation (S, S, r): s . x = sx with support r(x).
EtaleAction translation_action(const InverseSemigroup& s);

// The underlying presheaf over E(S): fibers are support level sets and
// restriction to f <= p(x) is the action of f.
Presheaf presheaf_of(const EtaleAction& a);

// Partial action defined exactly on pairs with d(s) = p(x).
struct PresheafAction {
  InverseSemigroup actor;
  Presheaf sheaf;  // base must literally be E(S) with meet = product
  std::vector<std::vector<int>> partial_act;  // -1 outside the domain

  int apply(int s, int x) const;
};

// Builds and checks a partial action against the four presheaf-action axioms.
PresheafAction validate_presheaf_action(InverseSemigroup actor, Presheaf sheaf,
                                        std::vector<std::vector<int>> act);

PresheafAction etale_to_presheaf_action(const EtaleAction& a);
// Totalizes via s . x = (s p(x)) . (x restricted to d(s) p(x)).
EtaleAction presheaf_action_to_etale(const PresheafAction& pa);

// The free etale set S * A on a presheaf A over E(S).
struct FreeEtale {
  EtaleAction action;
  std::vector<std::pair<int, int>> elems;  // (s, a), lexicographic
  int index_of(int s, int a) const;
};

FreeEtale free_etale(const InverseSemigroup& s, const Presheaf& a);

// Checks that a map is a presheaf morphism A -> presheaf_of(target) over the
// same semilattice E(S).
bool is_presheaf_morphism_over_e(const InverseSemigroup& s, const Presheaf& a,
                                 const EtaleAction& target,
                                 const std::vector<int>& beta);

struct UniversalPropertyResult {
  std::vector<int> theta;  // carrier of S*A -> carrier of target
  bool unique = false;     // verified by enumeration when carrier <= bound
  bool uniqueness_checked = false;
};

// The mediating morphism theta(s,a) = s . beta(a) together with the triangle
// identity; uniqueness is machine-verified up to the given carrier bound.
UniversalPropertyResult universal_property_check(const InverseSemigroup& s,
                                                 const Presheaf& a,
                                                 const EtaleAction& target,
                                                 const std::vector<int>& beta,
                                                 int uniqueness_bound = 12);

// All etale morphisms (S,X,p) -> (S,Y,q) over the identity on S.
std::vector<std::vector<int>> all_etale_morphisms(const EtaleAction& from,
                                                  const EtaleAction& to);

// Action JSON interchange format.
EtaleAction parse_action_json(const std::string& text);
std::string write_action_json(const EtaleAction& a);

}  // namespace gis

#endif  // GIS_ETALE_HPP_
