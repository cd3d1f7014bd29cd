#ifndef GIS_YAMADA_HPP_
#define GIS_YAMADA_HPP_

#include "gis/congruence.hpp"
#include "gis/etale.hpp"

namespace gis {

// The semigroup T * X on the pullback carrier with
// (s,x)(t,y) = (st, d(st) . y). Verified right generalized inverse with
// gamma classes given by the first coordinate.
struct RightYamada {
  InverseSemigroup actor;
  Presheaf sheaf;
  std::vector<std::pair<int, int>> elems;  // (t, x), lexicographic
  FiniteSemigroup sg;
  std::vector<int> quotient_iso;  // gamma-class of S -> element of T

  int index_of(int t, int x) const;
};

RightYamada build_right_yamada(const InverseSemigroup& t, const Presheaf& x);

// The free etale structure carried by a right generalized inverse semigroup:
// S/gamma acts on the set S by [a].s = as with support [ss'].
struct EtaleStructure {
  FiniteSemigroup gamma_quotient;
  std::vector<int> gamma_class_of;
  InverseSemigroup actor;  // the quotient, as an inverse semigroup
  EtaleAction action;      // carrier is S itself
};

EtaleStructure etale_structure(const FiniteSemigroup& s);

// theta restricted to each idempotent's L-class is a bijection onto the
// L-class of the image.
bool l_cover_check(const FiniteSemigroup& s, const FiniteSemigroup& t,
                   const std::vector<int>& theta);

// Thm-4.5-style decomposition: S right generalized inverse is reconstructed
// as a right Yamada semigroup over S/gamma with the presheaf of idempotents.
struct KappaDecomposition {
  InverseSemigroup t;        // S/gamma
  Presheaf sheaf;            // carrier E(S), base E(S/gamma)
  std::vector<int> sheaf_carrier;  // sheaf element -> idempotent of S
  RightYamada yam;
  std::vector<int> kappa;    // S -> yam.sg, a verified isomorphism
};

KappaDecomposition kappa_decompose(const FiniteSemigroup& s);

// etale_structure(build_right_yamada(T,X)) is isomorphic, as an etale action
// over the canonical actor identification, to free_etale(T,X).
struct FreeRoundtrip {
  bool ok = false;
  std::string counterexample;
};

FreeRoundtrip free_roundtrip_check(const InverseSemigroup& t,
                                   const Presheaf& x);

}  // namespace gis

#endif  // GIS_YAMADA_HPP_
