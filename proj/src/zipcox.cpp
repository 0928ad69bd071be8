#include "eo/zipcox.hpp"

#include <algorithm>
#include <map>

namespace eo::zip {

using weyl::Elt;

Datum make_datum(const weyl::Group& g, const std::vector<int>& levi_gens,
                 const Psi& psi) {
  Datum d;
  d.group = g;
  d.levi_gens = levi_gens;
  d.psi = psi;
  if (d.psi.twist.p.empty()) d.psi.twist = weyl::identity(g);
  if (psi.outer_swap && g.family != weyl::Family::D)
    throw std::invalid_argument("diagram swap only exists in family D");

  // enumerate W_levi
  std::set<Elt> seen;
  std::vector<Elt> queue = {weyl::identity(g)};
  seen.insert(queue[0]);
  for (size_t head = 0; head < queue.size(); ++head)
    for (int i : levi_gens) {
      Elt ws = weyl::mul(queue[head], weyl::simple_reflection(g, i));
      if (seen.insert(ws).second) queue.push_back(ws);
    }
  d.levi_elements = queue;
  d.reps = weyl::min_coset_reps(g, levi_gens);

  // psi must map W_levi onto itself; checking the generators suffices
  for (int i : levi_gens) {
    Elt img = apply_psi(d, weyl::simple_reflection(g, i));
    if (!seen.count(img))
      throw std::invalid_argument("psi does not preserve the Levi Weyl group");
  }
  return d;
}

weyl::Elt apply_psi(const Datum& d, const Elt& w) {
  Elt x = w;
  if (d.psi.outer_swap) {
    Elt h = weyl::transposition(d.group.degree, d.group.m, d.group.m + 1);
    x = weyl::mul(h, weyl::mul(x, h));
  }
  const Elt& t = d.psi.twist;
  return weyl::mul(t, weyl::mul(x, weyl::inverse(t)));
}

bool preceq(const Datum& d, const Elt& w, const Elt& w2) {
  for (const Elt& v : d.levi_elements) {
    Elt x = weyl::mul(weyl::inverse(v), weyl::mul(w, apply_psi(d, v)));
    if (weyl::bruhat_leq(d.group, x, w2)) return true;
  }
  return false;
}

static std::set<Elt> to_set(const std::vector<Elt>& v) {
  return std::set<Elt>(v.begin(), v.end());
}

std::vector<Elt> compute_Ew(const Datum& d, const Elt& w) {
  Elt wi = weyl::inverse(w);
  std::set<Elt> K;
  for (const Elt& x : d.levi_elements)
    K.insert(weyl::mul(w, weyl::mul(x, wi)));
  auto theta = [&](const Elt& x) {
    return apply_psi(d, weyl::mul(w, weyl::mul(x, wi)));
  };
  // intersection of the theta-orbit of K; theta is bijective on W, so the
  // iterates cycle back to K and the loop terminates
  std::set<Elt> inter = K;
  std::set<Elt> cur = K;
  while (true) {
    std::set<Elt> next;
    for (const Elt& x : cur) next.insert(theta(x));
    if (next == K) break;
    for (auto it = inter.begin(); it != inter.end();) {
      if (!next.count(*it))
        it = inter.erase(it);
      else
        ++it;
    }
    cur = std::move(next);
  }
  return std::vector<Elt>(inter.begin(), inter.end());
}

std::vector<Elt> compute_Ew_oracle(const Datum& d, const Elt& w) {
  Elt wi = weyl::inverse(w);
  std::set<Elt> H;
  for (const Elt& x : d.levi_elements)
    H.insert(weyl::mul(w, weyl::mul(x, wi)));
  auto theta = [&](const Elt& x) {
    return apply_psi(d, weyl::mul(w, weyl::mul(x, wi)));
  };
  while (true) {
    std::set<Elt> img;
    for (const Elt& x : H) img.insert(theta(x));
    std::set<Elt> next;
    for (const Elt& x : H)
      if (img.count(x)) next.insert(x);
    if (next == H) break;
    H = std::move(next);
  }
  return std::vector<Elt>(H.begin(), H.end());
}

std::set<Elt> orbit_set(const Datum& d, const Elt& w) {
  std::vector<Elt> ew = compute_Ew(d, w);
  std::set<Elt> out;
  for (const Elt& v : d.levi_elements) {
    Elt left = weyl::mul(weyl::inverse(v), w);
    Elt right = apply_psi(d, v);
    for (const Elt& vp : ew)
      out.insert(weyl::mul(left, weyl::mul(vp, right)));
  }
  return out;
}

bool orbit_equal(const Datum& d, const Elt& w, const Elt& w2) {
  return orbit_set(d, w).count(w2) > 0;
}

Label canonical_label(const Datum& d, const Elt& w) {
  std::set<Elt> orbit = orbit_set(d, w);
  std::vector<Elt> hits;
  for (const Elt& r : d.reps)
    if (orbit.count(r)) hits.push_back(r);
  if (hits.size() != 1)
    throw InternalConsistencyError(
        "framed orbit meets " + std::to_string(hits.size()) +
        " minimal representatives (expected exactly 1)");
  return Label{hits[0], weyl::length(d.group, hits[0])};
}

std::vector<std::pair<Label, Label>> hasse_diagram(const Datum& d) {
  size_t n = d.reps.size();
  std::vector<std::vector<bool>> le(n, std::vector<bool>(n, false));
  for (size_t i = 0; i < n; ++i)
    for (size_t j = 0; j < n; ++j)
      le[i][j] = preceq(d, d.reps[i], d.reps[j]);
  std::vector<std::pair<Label, Label>> covers;
  for (size_t i = 0; i < n; ++i)
    for (size_t j = 0; j < n; ++j) {
      if (i == j || !le[i][j]) continue;
      bool cover = true;
      for (size_t k = 0; k < n && cover; ++k)
        if (k != i && k != j && le[i][k] && le[k][j]) cover = false;
      if (cover)
        covers.push_back({Label{d.reps[i], weyl::length(d.group, d.reps[i])},
                          Label{d.reps[j], weyl::length(d.group, d.reps[j])}});
    }
  return covers;
}

}  // namespace eo::zip
