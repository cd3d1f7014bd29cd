#ifndef GIS_PRESHEAF_HPP_
#define GIS_PRESHEAF_HPP_

#include <map>

#include "gis/semigroup.hpp"

namespace gis {

// Commutative idempotent semigroup; the order is e <= f iff e*f = e.
struct MeetSemilattice {
  int order = 0;
  std::vector<int> meet;  // row-major table

  int meet_of(int e, int f) const { return meet[e * order + f]; }
  bool leq(int e, int f) const { return meet_of(e, f) == e; }
  FiniteSemigroup as_semigroup() const;
  bool operator==(const MeetSemilattice& o) const {
    return order == o.order && meet == o.meet;
  }
};

MeetSemilattice validate_semilattice(const std::vector<std::vector<int>>& rows);

// Presheaf of sets over a meet semilattice. The carrier is 0..carrier_size-1,
// fibers are the level sets of fiber_of, and rest holds every restriction
// X_e -> X_f for e >= f as a dense carrier-indexed map (-1 off-fiber).
struct Presheaf {
  MeetSemilattice base;
  int carrier_size = 0;
  std::vector<int> fiber_of;
  std::map<std::pair<int, int>, std::vector<int>> rest;  // (e,f) -> images

  int p(int x) const { return fiber_of[x]; }
  // f must satisfy f <= p(x)
  int restrict_to(int x, int f) const;
  std::vector<std::vector<int>> fibers() const;
  bool global_support() const;
};

// Builds a presheaf from restriction data given at least for covering pairs;
// missing pairs are filled by composing along chains. Checks the identity and
// composition laws exhaustively.
Presheaf validate_presheaf(
    MeetSemilattice base, std::vector<int> fiber_of,
    const std::map<std::pair<int, int>, std::vector<int>>& given);

// x o y = restriction of y to p(x) /\ p(y); verified to be a right normal
// band (bug sentinel otherwise).
FiniteSemigroup to_band(const Presheaf& p);

// Inverse construction: base = B/R, fibers the R-classes, restriction
// x -> fx (independent of the representative f). Element ids are preserved so
// the round trip through to_band is table-identical.
Presheaf band_to_presheaf(const FiniteSemigroup& b);

struct PresheafIso {
  bool ok = false;
  std::vector<int> carrier_map;
  std::vector<int> base_map;
  std::string counterexample;
};

// Checks whether (carrier, base) maps form a presheaf isomorphism a -> b.
PresheafIso presheaf_isomorphic(const Presheaf& a, const Presheaf& b,
                                const std::vector<int>& carrier_map,
                                const std::vector<int>& base_map);

struct RoundtripResult {
  bool ok = false;
  std::string counterexample;
  PresheafIso presheaf_witness;  // for the presheaf direction
};

RoundtripResult roundtrip_band(const FiniteSemigroup& b);
RoundtripResult roundtrip_presheaf(const Presheaf& p);  // needs global support

struct PresheafMorphism {
  std::vector<int> alpha;  // carrier map
  std::vector<int> beta;   // base map
};

// Transports a homomorphism of right normal bands to a presheaf morphism and
// verifies the morphism axioms.
PresheafMorphism morphism_transport(const FiniteSemigroup& b1,
                                    const FiniteSemigroup& b2,
                                    const std::vector<int>& h);

struct OrderCompat {
  int carrier_size = 0;
  std::vector<char> leq;        // row-major
  std::vector<char> compat;     // row-major
  std::vector<int> meet;        // row-major, -1 when no meet
  bool le(int x, int y) const { return leq[x * carrier_size + y] != 0; }
  bool sim(int x, int y) const { return compat[x * carrier_size + y] != 0; }
};

// The order x <= y (x is the restriction of y) and the compatibility relation,
// cross-checked against the circle-product characterizations and the
// order corollary on all triples.
OrderCompat order_and_compat(const Presheaf& p);

// JSON format per the workbench file interface.
Presheaf parse_presheaf_json(const std::string& text);
std::string write_presheaf_json(const Presheaf& p);
Presheaf load_presheaf_file(const std::string& path);

}  // namespace gis

#endif  // GIS_PRESHEAF_HPP_
