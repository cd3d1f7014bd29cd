#ifndef GIS_MADHAVAN_HPP_
#define GIS_MADHAVAN_HPP_

#include "gis/semigroup.hpp"

namespace gis {

// A partial function on {0,..,n-1}, written on the right of its argument.
struct PartialFunction {
  std::vector<int> image;  // image[x], or -1 when x is outside the domain

  bool defined(int x) const { return image[x] >= 0; }
  bool operator<(const PartialFunction& o) const;
  bool operator==(const PartialFunction& o) const { return image == o.image; }
  std::string to_string() const;  // "[0>1 2>2]", "[]" for the empty map
};

// (x)(ab) = ((x)a)b; the first factor acts first.
PartialFunction compose(const PartialFunction& a, const PartialFunction& b);

// M_rho(X): every partial function that is constant on rho classes,
// separates distinct rho classes, and has a rho-saturated domain.
struct MadhavanSemigroup {
  int x_size = 0;
  Partition rho;
  std::vector<PartialFunction> elems;  // sorted; element i of sg is elems[i]
  FiniteSemigroup sg;

  int index_of(const PartialFunction& f) const;
};

// Enumerates the qualifying partial functions and their composition table.
// Verified closed under composition and right generalized inverse.
// Throws SizeBoundExceeded when |X| > max_x.
MadhavanSemigroup build_m_rho(int x_size, const Partition& rho, int max_x = 4);

// Table idempotents coincide with { a : x rho (x)a for all x in dom(a) }.
bool idempotent_characterization_check(const MadhavanSemigroup& m);

// Injective homomorphism search S -> M_rho(X). NotFound for one (X, rho)
// is inconclusive; the embedding theorem only promises some (X, rho).
std::optional<std::vector<int>> embedding_search(const FiniteSemigroup& s,
                                                const MadhavanSemigroup& m,
                                                int max_target = 512);

}  // namespace gis

#endif  // GIS_MADHAVAN_HPP_
