#ifndef GIS_MORITA_HPP_
#define GIS_MORITA_HPP_

#include <array>

#include "gis/yamada.hpp"

namespace gis {

// A set with a total one-sided action of a semigroup.
struct SSet {
  bool left = true;
  FiniteSemigroup actor;
  int carrier_size = 0;
  std::vector<std::vector<int>> act;  // [s][x] = s.x (left) or x.s (right)

  int apply(int s, int x) const { return act[s][x]; }
};

// Validates the action law; throws NotAnAction.
SSet make_sset(bool left, FiniteSemigroup actor,
               std::vector<std::vector<int>> act);

// The full Yamada semigroup of triples (x,t,y) over an inverse semigroup T
// with a left presheaf X and a right presheaf Y, both over E(T).
struct YamadaSemigroup {
  InverseSemigroup t;
  Presheaf x, y;  // X is read contravariantly (x.e = restriction of x)
  std::vector<std::array<int, 3>> elems;  // (x, t, y), lexicographic
  FiniteSemigroup sg;

  int index_of(int xv, int tv, int yv) const;
};

YamadaSemigroup build_yamada(const InverseSemigroup& t, const Presheaf& x,
                             const Presheaf& y);

// The lambda and rho quotients of a Yamada semigroup realized on pairs
// (t, y) and (x, t) respectively, with the verified identifications.
struct PairProjections {
  FiniteSemigroup s_r;  // on pairs (t, y): right generalized inverse
  FiniteSemigroup s_l;  // on pairs (x, t): left generalized inverse
  std::vector<std::pair<int, int>> r_elems;  // (t, y)
  std::vector<std::pair<int, int>> l_elems;  // (x, t)
  std::vector<int> lambda_class_to_pair;     // quotient class -> s_r element
  std::vector<int> rho_class_to_pair;        // quotient class -> s_l element
};

PairProjections lambda_rho_projections(const YamadaSemigroup& ys);

// Tensor product of a right S-set Q and a left S-set P: the quotient of
// Q x P by the smallest equivalence with (q.s, p) ~ (q, s.p).
struct Tensor {
  int q_size = 0, p_size = 0;
  int num_classes = 0;
  std::vector<int> class_of;                 // index q*p_size+p -> class
  std::vector<std::pair<int, int>> rep;      // least (q,p) per class

  int cls(int q, int p) const { return class_of[q * p_size + p]; }
};

Tensor tensor(const SSet& q, const SSet& p);

// Balance oracle for maps out of Q x P; returns a witness triple on failure.
bool balanced_check(const SSet& q, const SSet& p,
                    const std::vector<std::vector<int>>& f,
                    std::array<int, 3>* witness = nullptr);

// Semigroup on tensor classes from a bilinear pairing P x Q -> actor.
// Verified representative-independent and associative.
FiniteSemigroup morita_product(const SSet& q, const SSet& p,
                               const std::vector<std::vector<int>>& pairing,
                               Tensor* out_tensor = nullptr);

// Everything needed to run the tensor side of a Yamada semigroup: the pair
// semigroups as T-sets, the pairing, the tensor and the Morita product.
struct MoritaContext {
  PairProjections pairs;
  SSet q;  // S_L as a right T-set
  SSet p;  // S_R as a left T-set
  std::vector<std::vector<int>> pairing;  // [p][q] -> element of T
  Tensor ten;
  FiniteSemigroup product;
};

MoritaContext morita_context(const YamadaSemigroup& ys);

// Normalized representative of the tensor class of (q, p).
std::pair<int, int> normalize(const MoritaContext& ctx,
                              const YamadaSemigroup& ys, int q, int p);

struct ThetaReport {
  bool iso = false;
  std::vector<int> theta;  // triple index -> tensor class
  int tensor_classes = 0;
  std::string counterexample;
};

// theta(x,s,y) = x r(s) (x) s y, checked to be an isomorphism onto the
// Morita semigroup, with tensor class count equal to the Yamada order.
ThetaReport theta_iso_check(const YamadaSemigroup& ys);

// Decomposition of an arbitrary generalized inverse semigroup into Yamada
// coordinates (X, T, Y) with a verified isomorphism.
struct YamadaForm {
  YamadaSemigroup ys;
  std::vector<int> iso;  // S -> ys.sg
};

YamadaForm yamada_form(const FiniteSemigroup& s);

}  // namespace gis

#endif  // GIS_MORITA_HPP_
