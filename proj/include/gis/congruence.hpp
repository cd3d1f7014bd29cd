#ifndef GIS_CONGRUENCE_HPP_
#define GIS_CONGRUENCE_HPP_

#include <functional>

#include "gis/semigroup.hpp"

namespace gis {

// A partition verified compatible with multiplication on both sides.
struct Congruence {
  Partition partition;
};

bool is_congruence(const FiniteSemigroup& s, const Partition& p);
// Throws NotACongruence with a witness when p is not compatible.
Congruence make_congruence(const FiniteSemigroup& s, Partition p);

// Least congruence containing the given relation (least fixpoint of class
// merging under left/right translation).
Partition congruence_closure(const FiniteSemigroup& s, const Partition& seed);
Partition principal_congruence(const FiniteSemigroup& s, int a, int b);

// Minimum inverse congruence on an orthodox semigroup: s ~ t iff V(s) = V(t).
Congruence gamma(const FiniteSemigroup& s);

// lambda = gamma meet L and rho = gamma meet R on a generalized inverse
// semigroup; both verified congruences with right/left generalized inverse
// quotients and lambda meet rho = equality.
std::pair<Congruence, Congruence> lambda_rho(const FiniteSemigroup& s);

// Quotient table plus the projection map element -> class.
std::pair<FiniteSemigroup, std::vector<int>> quotient(const FiniteSemigroup& s,
                                                      const Congruence& c);

// Every congruence of s (join semilattice generated by the principal
// congruences). Guarded by an order bound; override default with max_order.
std::vector<Congruence> all_congruences(const FiniteSemigroup& s,
                                        int max_order = 8);

// True iff c is contained in every congruence whose quotient satisfies the
// predicate. Exhaustive over all_congruences.
bool is_minimum_with(const FiniteSemigroup& s, const Congruence& c,
                     const std::function<bool(const FiniteSemigroup&)>& pred,
                     int max_order = 8);

bool idempotent_pure(const FiniteSemigroup& s, const Congruence& c);

struct SubdirectEmbedding {
  Congruence rho, lambda;
  FiniteSemigroup left_quotient;   // S/rho
  FiniteSemigroup right_quotient;  // S/lambda
  FiniteSemigroup product;         // S/rho x S/lambda
  std::vector<int> map;            // s -> element of product
};

// s -> (rho-class, lambda-class); verified injective, homomorphic and
// subdirect (both projections of the image surjective).
SubdirectEmbedding subdirect_embed(const FiniteSemigroup& s);

// Serialization of a congruence as "0 2 | 1 | 3 4".
std::string congruence_to_string(const Congruence& c);
Partition parse_class_list(const std::string& text, int carrier_size);

}  // namespace gis

#endif  // GIS_CONGRUENCE_HPP_
