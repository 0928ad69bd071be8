#pragma once
#include <set>
#include <stdexcept>
#include <string>
#include <vector>

#include "eo/weyl.hpp"

namespace eo::zip {

// Abstract zip datum of Coxeter type: (W, W_levi, minimal reps, psi). psi is
// the automorphism of W induced by the (possibly twisted) Frobenius on the
// Levi. It is stored as an optional diagram swap (the outer automorphism of
// D_m, realized as conjugation by the plain transposition (m, m+1)) composed
// with conjugation by a twist element.
struct Psi {
  bool outer_swap = false;
  weyl::Elt twist;  // empty means identity
};

struct Datum {
  weyl::Group group;
  std::vector<int> levi_gens;
  Psi psi;
  std::vector<weyl::Elt> levi_elements;  // all of W_levi
  std::vector<weyl::Elt> reps;           // minimal coset reps, sorted
};

// thrown when the orbit calculus contradicts itself (bad psi configuration)
struct InternalConsistencyError : std::logic_error {
  using std::logic_error::logic_error;
};

Datum make_datum(const weyl::Group& g, const std::vector<int>& levi_gens,
                 const Psi& psi);

weyl::Elt apply_psi(const Datum& d, const weyl::Elt& w);

struct Label {
  weyl::Elt rep;
  int dim = 0;
};

// w <= w' in the zip order: exists v in W_levi with v^{-1} w psi(v) <= w'
// in Bruhat order (brute force over W_levi)
bool preceq(const Datum& d, const weyl::Elt& w, const weyl::Elt& w2);

// E_w: the largest subgroup of w W_levi w^{-1} stable under
// theta(x) = psi(w x w^{-1}); computed as the intersection of the
// theta-iterates of w W_levi w^{-1}
std::vector<weyl::Elt> compute_Ew(const Datum& d, const weyl::Elt& w);
// independent fixed-point iteration H <- H intersect theta(H)
std::vector<weyl::Elt> compute_Ew_oracle(const Datum& d, const weyl::Elt& w);

// all w' with the same framed orbit as w: { v^{-1} w v' psi(v) }
std::set<weyl::Elt> orbit_set(const Datum& d, const weyl::Elt& w);
bool orbit_equal(const Datum& d, const weyl::Elt& w, const weyl::Elt& w2);

// the unique minimal representative whose framed orbit contains w's;
// throws InternalConsistencyError unless exactly one matches
Label canonical_label(const Datum& d, const weyl::Elt& w);

// covering relations of the zip order on the minimal representatives
std::vector<std::pair<Label, Label>> hasse_diagram(const Datum& d);

}  // namespace eo::zip
