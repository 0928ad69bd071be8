#pragma once
#include <cstdint>
#include <string>
#include <vector>

namespace eo::weyl {

// Weyl groups realized as constrained permutations:
//   B_m: sigma in S_{2m+1} with sigma(i) + sigma(N+1-i) = N+1, N = 2m+1
//   D_m: same condition in S_{2m} plus an even number of i <= m with
//        sigma(i) > m
//   A_{g-1}: all of S_g
// Composition is function composition, (a*b)(x) = a(b(x)).

enum class Family { A, B, D };

struct Group {
  Family family;
  int m;       // Coxeter rank (A: degree - 1)
  int degree;  // N, the permutation degree

  int rank() const { return m; }
  friend bool operator==(const Group& a, const Group& b) {
    return a.family == b.family && a.m == b.m && a.degree == b.degree;
  }
  friend bool operator!=(const Group& a, const Group& b) { return !(a == b); }
};

Group make_b(int m);
Group make_d(int m);
Group make_a(int g);  // symmetric group S_g

struct Elt {
  // one-line notation, 0-based: p[i] = sigma(i+1) - 1
  std::vector<uint8_t> p;

  friend bool operator==(const Elt& a, const Elt& b) { return a.p == b.p; }
  friend bool operator!=(const Elt& a, const Elt& b) { return a.p != b.p; }
  friend bool operator<(const Elt& a, const Elt& b) { return a.p < b.p; }
};

Elt identity(const Group& g);
bool is_valid(const Group& g, const Elt& w);
Elt mul(const Elt& a, const Elt& b);  // a after b
Elt inverse(const Elt& a);
// image sigma(i), 1-based
inline int apply(const Elt& w, int i) { return w.p[i - 1] + 1; }

Elt simple_reflection(const Group& g, int i);  // 1 <= i <= rank
Elt transposition(int degree, int a, int b);   // plain (a,b) in S_degree

int length(const Group& g, const Elt& w);
bool is_right_descent(const Group& g, const Elt& w, int i);
bool is_left_descent(const Group& g, const Elt& w, int i);
std::vector<int> reduced_word(const Group& g, Elt w);
Elt eval_word(const Group& g, const std::vector<int>& word);
// all reduced words (exponential; small ranks only)
std::vector<std::vector<int>> all_reduced_words(const Group& g, const Elt& w);

bool bruhat_leq(const Group& g, const Elt& a, const Elt& b);

std::vector<Elt> all_elements(const Group& g);

// Simple-reflection indices generating the Weyl group of the Levi
// diag(t, A, t^{-1}); this is {2..m} except that generators moving position 1
// are dropped (D with m = 2, and trivially m <= 1).
std::vector<int> levi_generators(const Group& g);

// longest element of W and of the standard parabolic generated by levi_gens;
// both found by greedy ascent and certified maximal by a descent check
std::pair<Elt, Elt> longest_elements(const Group& g,
                                     const std::vector<int>& levi_gens);

// minimal-length representatives of the cosets W_levi \ W, sorted by
// (length, one-line lexicographic)
std::vector<Elt> min_coset_reps(const Group& g,
                                const std::vector<int>& levi_gens);
// the minimal element of the coset W_levi * w
Elt coset_minimize(const Group& g, const std::vector<int>& levi_gens, Elt w);

struct LabeledWord {
  std::string label;
  int dim = 0;
  bool dagger = false;
  std::vector<int> word;
};

// The closed-form lists of minimal coset representatives for SO(n+2):
// w_i = s_1...s_i for i <= m and the tail recursions, plus the extra
// representative at length m-1 when n is even.
std::vector<LabeledWord> closed_form_muW(int n);

// group attached to SO(n+2): B_{(n+1)/2} for n odd, D_{n/2+1} for n even
Group group_for_so(int n);

// For w in S_g minimal in its coset (w^{-1}(2) < ... < w^{-1}(g)), returns
// w^{-1}(1) - 1, the EO index in {0..g-1}. Throws if w is not minimal.
int typeA_eo_index(const Group& g, const Elt& w);

std::string one_line_str(const Elt& w);
std::string cycle_str(const Elt& w);

}  // namespace eo::weyl
