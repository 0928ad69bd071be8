#pragma once
#include <cstdint>
#include <string>
#include <vector>

#include "eo/gf.hpp"
#include "eo/rng.hpp"
#include "eo/weyl.hpp"

namespace eo::so {

// Matrix realization of SO(J) for the standard Gram matrices
//   n odd:  J = antidiag(1/2,...,1/2, c, 1/2,...,1/2), size n+2
//   n even: J = antidiag(1/2,...,1/2)                  (normalized split form)
// over GF(p^2); the nonsplit even case carries the same J but a twisted
// Frobenius X -> h X^(p) h^{-1} with h the central transposition.
enum class Parity { odd, even_split, even_nonsplit };

struct Gram {
  int n = 0;
  Parity parity = Parity::odd;
  long long p = 3;
  long long c = 1;  // center value (odd) / nonsquare witness (even nonsplit)
  gf::Field field;

  int N() const { return n + 2; }
  int m() const { return n % 2 == 1 ? (n + 1) / 2 : n / 2 + 1; }
  gf::Matrix J() const;
};

Gram make_gram(int n, Parity parity, long long p, long long c = 1);

bool is_in_so(const Gram& g, const gf::Matrix& x);

// the fixed representative of the i-th simple reflection
gf::Matrix reflection_rep(const Gram& g, int i);
// product of reflection representatives over a reduced word of w
gf::Matrix word_rep(const Gram& g, const weyl::Elt& w);
gf::Matrix word_rep(const Gram& g, const std::vector<int>& word);

// X -> X^(p), or h X^(p) h^{-1} with h swapping the central coordinates
// m, m+1 (the nonsplit even normalization)
gf::Matrix twisted_frobenius(const Gram& g, const gf::Matrix& x, bool twisted);
gf::Matrix twisted_frobenius_inv(const Gram& g, const gf::Matrix& x,
                                 bool twisted);

enum class Part { P, Q, L, B, BL };
// block-shape membership relative to the cocharacter weights (1, 0...0, -1)
bool parabolic_membership(const Gram& g, const gf::Matrix& x, Part part);

// nilpotent generators (as exponentials exp(t*X_alpha)) of the upper
// unipotent subgroups; `levi` restricts to root spaces inside the Levi block
std::vector<gf::Matrix> root_nilpotents(const Gram& g, bool levi);
gf::Matrix exp_nilpotent(const Gram& g, const gf::Matrix& x,
                         const gf::Field::Elt& t);

gf::Matrix sample_torus(const Gram& g, Rng& rng);
gf::Matrix sample_borel(const Gram& g, Rng& rng);
gf::Matrix sample_borel_levi(const Gram& g, Rng& rng);

struct FrameReport {
  bool pass = true;
  int samples = 0;
  std::vector<std::string> failures;  // one line per violated condition
};

// Checks the four frame conditions for the candidate (B, T, g):
//   (i) B in P, (ii) g^{-1}Bg in Q, (iii) phi(B cap L) = g^{-1}Bg cap L,
//   (iv) phi(T) = g^{-1}Tg
// with `samples` random points per condition and exact checks on every
// root-group and torus generator. g must normalize L (true for all the
// monomial candidates in scope).
FrameReport frame_verify(const Gram& g, const gf::Matrix& cand, bool twisted,
                         int samples, uint64_t seed);

// the frame element P_{w_{0,levi} w_0}
gf::Matrix standard_frame_g(const Gram& g);

// The embedding SO(J') -> SO(J) for dim J = dim J' + 1.
//   target odd:  insert the fixed central row/column
//   target even: insert, then change basis on the central plane so that
//                c x^2 + d y^2 becomes the split form (r^2 = -c, s^2 = d)
gf::Matrix embed_iota(const Gram& src, const Gram& tgt, const gf::Matrix& x,
                      long long c = 1, long long d = 1);

// split over GF(p) iff (-1/p)^m = (disc/p), m = n/2 + 1
bool split_over_fp(int n, long long p, long long disc);

}  // namespace eo::so
