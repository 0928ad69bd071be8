#include "eo/sogroup.hpp"

#include <algorithm>
#include <stdexcept>

namespace eo::so {

using gf::Field;
using gf::Matrix;

Gram make_gram(int n, Parity parity, long long p, long long c) {
  if (n < 1) throw std::invalid_argument("n must be >= 1");
  if ((parity == Parity::odd) != (n % 2 == 1))
    throw std::invalid_argument("parity tag does not match n");
  Field field(p, 2);
  c %= p;
  if (c < 0) c += p;
  if (c == 0) throw std::invalid_argument("Gram constant must be a unit");
  if (parity == Parity::even_nonsplit && gf::legendre(c, p) != -1)
    throw std::invalid_argument("nonsplit case needs a nonsquare constant");
  return Gram{n, parity, p, c, field};
}

Matrix Gram::J() const {
  Matrix j(field, N(), N());
  Field::Elt half = field.half();
  for (int i = 0; i < N(); ++i) j.at(i, N() - 1 - i) = half;
  if (parity == Parity::odd) j.at(m(), m()) = field.from_int(c);  // row m+1
  return j;
}

bool is_in_so(const Gram& g, const Matrix& x) {
  if (x.rows != g.N() || x.cols != g.N()) return false;
  Matrix j = g.J();
  if (gf::mul(gf::mul(gf::transpose(x), j), x) != j) return false;
  return gf::det(x) == g.field.one();
}

Matrix reflection_rep(const Gram& g, int i) {
  int m = g.m(), N = g.N();
  if (i < 1 || i > m) throw std::out_of_range("reflection index");
  const Field& f = g.field;
  Matrix P(f, N, N);
  auto set_perm = [&](const weyl::Elt& sigma) {
    for (int col = 1; col <= N; ++col) P.at(weyl::apply(sigma, col) - 1, col - 1) = f.one();
  };
  weyl::Group W = weyl::group_for_so(g.n);
  if (i < m || g.parity != Parity::odd) {
    set_perm(weyl::simple_reflection(W, i));
  } else {
    // odd case i = m: swap m <-> m+2 and negate the middle coordinate
    weyl::Elt sigma = weyl::simple_reflection(W, m);
    set_perm(sigma);
    P.at(m, m) = f.neg(f.one());
  }
  return P;
}

Matrix word_rep(const Gram& g, const std::vector<int>& word) {
  Matrix r = Matrix::identity(g.field, g.N());
  for (int i : word) r = gf::mul(r, reflection_rep(g, i));
  return r;
}

Matrix word_rep(const Gram& g, const weyl::Elt& w) {
  weyl::Group W = weyl::group_for_so(g.n);
  return word_rep(g, weyl::reduced_word(W, w));
}

static Matrix central_swap(const Gram& g) {
  const Field& f = g.field;
  int m = g.m(), N = g.N();
  Matrix h = Matrix::identity(f, N);
  h.at(m - 1, m - 1) = f.zero();
  h.at(m, m) = f.zero();
  h.at(m - 1, m) = f.one();
  h.at(m, m - 1) = f.one();
  return h;
}

Matrix twisted_frobenius(const Gram& g, const Matrix& x, bool twisted) {
  Matrix fx = gf::frobenius_entrywise(x);
  if (!twisted) return fx;
  Matrix h = central_swap(g);
  return gf::mul(h, gf::mul(fx, h));  // h is an involution
}

Matrix twisted_frobenius_inv(const Gram& g, const Matrix& x, bool twisted) {
  Matrix y = x;
  if (twisted) {
    Matrix h = central_swap(g);
    y = gf::mul(h, gf::mul(y, h));
  }
  return gf::frobenius_inv_entrywise(y);
}

bool parabolic_membership(const Gram& g, const Matrix& x, Part part) {
  int N = g.N();
  const Field& f = g.field;
  auto upper_block = [&] {
    for (int u = 1; u < N; ++u)
      if (!f.is_zero(x.at(u, 0))) return false;
    for (int v = 0; v < N - 1; ++v)
      if (!f.is_zero(x.at(N - 1, v))) return false;
    return true;
  };
  auto lower_block = [&] {
    for (int v = 1; v < N; ++v)
      if (!f.is_zero(x.at(0, v))) return false;
    for (int u = 0; u < N - 1; ++u)
      if (!f.is_zero(x.at(u, N - 1))) return false;
    return true;
  };
  auto upper_tri = [&] {
    for (int u = 0; u < N; ++u)
      for (int v = 0; v < u; ++v)
        if (!f.is_zero(x.at(u, v))) return false;
    return true;
  };
  switch (part) {
    case Part::P:
      return upper_block();
    case Part::Q:
      return lower_block();
    case Part::L:
      return upper_block() && lower_block();
    case Part::B:
      return upper_tri();
    case Part::BL:
      return upper_tri() && upper_block() && lower_block();
  }
  return false;
}

std::vector<Matrix> root_nilpotents(const Gram& g, bool levi) {
  const Field& f = g.field;
  int N = g.N();
  Matrix j = g.J();
  Matrix jinv = gf::inverse(j);
  std::vector<Matrix> out;
  for (int a = 1; a <= N; ++a)
    for (int b = a + 1; b <= N; ++b) {
      if (b == N + 1 - a) continue;  // Cartan direction
      // X = J^{-1} (E_ab - E_ba), a rank<=2 nilpotent in so(J)
      Matrix x(f, N, N);
      for (int u = 0; u < N; ++u) {
        x.at(u, b - 1) = f.add(x.at(u, b - 1), jinv.at(u, a - 1));
        x.at(u, a - 1) = f.sub(x.at(u, a - 1), jinv.at(u, b - 1));
      }
      bool upper = true, inner = true;
      for (int u = 0; u < N; ++u)
        for (int v = 0; v < N; ++v)
          if (!f.is_zero(x.at(u, v))) {
            if (u >= v) upper = false;
            if (u == 0 || v == 0 || u == N - 1 || v == N - 1) inner = false;
          }
      if (!upper) continue;
      if (levi && !inner) continue;
      out.push_back(x);
    }
  return out;
}

Matrix exp_nilpotent(const Gram& g, const Matrix& x, const Field::Elt& t) {
  const Field& f = g.field;
  int N = g.N();
  Matrix tx(f, N, N);
  for (int u = 0; u < N; ++u)
    for (int v = 0; v < N; ++v) tx.at(u, v) = f.mul(t, x.at(u, v));
  Matrix sq = gf::mul(tx, tx);
  // the root nilpotents here satisfy X^3 = 0, so the series stops
  Matrix r = Matrix::identity(f, N);
  Field::Elt half = f.half();
  for (int u = 0; u < N; ++u)
    for (int v = 0; v < N; ++v) {
      r.at(u, v) = f.add(r.at(u, v), tx.at(u, v));
      r.at(u, v) = f.add(r.at(u, v), f.mul(half, sq.at(u, v)));
    }
  return r;
}

Matrix sample_torus(const Gram& g, Rng& rng) {
  const Field& f = g.field;
  int N = g.N(), m = g.m();
  Matrix t = Matrix::identity(f, N);
  for (int i = 0; i < m; ++i) {
    Field::Elt v = f.sample_nonzero(rng);
    t.at(i, i) = v;
    t.at(N - 1 - i, N - 1 - i) = f.inv(v);
  }
  return t;
}

static Matrix sample_unipotent(const Gram& g, const std::vector<Matrix>& roots,
                               Rng& rng) {
  Matrix u = Matrix::identity(g.field, g.N());
  for (const Matrix& x : roots)
    u = gf::mul(u, exp_nilpotent(g, x, g.field.sample(rng)));
  return u;
}

Matrix sample_borel(const Gram& g, Rng& rng) {
  static thread_local std::vector<Matrix>* cache = nullptr;
  std::vector<Matrix> roots = root_nilpotents(g, false);
  (void)cache;
  return gf::mul(sample_torus(g, rng), sample_unipotent(g, roots, rng));
}

Matrix sample_borel_levi(const Gram& g, Rng& rng) {
  std::vector<Matrix> roots = root_nilpotents(g, true);
  return gf::mul(sample_torus(g, rng), sample_unipotent(g, roots, rng));
}

Matrix standard_frame_g(const Gram& g) {
  weyl::Group W = weyl::group_for_so(g.n);
  auto [w0, w0l] = weyl::longest_elements(W, weyl::levi_generators(W));
  return word_rep(g, weyl::mul(w0l, w0));
}

namespace {

bool is_monomial(const Gram& g, const Matrix& x, std::vector<int>& perm) {
  int N = g.N();
  perm.assign(N, -1);
  for (int col = 0; col < N; ++col) {
    int hit = -1;
    for (int row = 0; row < N; ++row)
      if (!g.field.is_zero(x.at(row, col))) {
        if (hit >= 0) return false;
        hit = row;
      }
    if (hit < 0) return false;
    perm[col] = hit;
  }
  return true;
}

struct FrameCtx {
  const Gram& g;
  Matrix cand;
  Matrix cand_inv;
  bool twisted;
  FrameReport rep;

  void fail(const std::string& cond, const std::string& kind,
            const Matrix& witness) {
    rep.pass = false;
    if (rep.failures.size() < 8)
      rep.failures.push_back(cond + " violated on " + kind + " point:\n" +
                             gf::str(witness));
  }

  Matrix conj_in(const Matrix& x) const {  // g^{-1} x g
    return gf::mul(cand_inv, gf::mul(x, cand));
  }
  Matrix conj_out(const Matrix& x) const {  // g x g^{-1}
    return gf::mul(cand, gf::mul(x, cand_inv));
  }

  void check_point_i(const Matrix& b, const std::string& kind) {
    if (!parabolic_membership(g, b, Part::P)) fail("(i) B in P", kind, b);
  }
  void check_point_ii(const Matrix& b, const std::string& kind) {
    if (!parabolic_membership(g, conj_in(b), Part::Q))
      fail("(ii) g^{-1}Bg in Q", kind, b);
  }
  void check_point_iii(const Matrix& x, const std::string& kind) {
    // forward: phi(x) must lie in g^{-1}(B cap L)g
    Matrix y = conj_out(twisted_frobenius(g, x, twisted));
    if (!parabolic_membership(g, y, Part::BL))
      fail("(iii) phi(B cap L) in g^{-1}Bg cap L", kind, x);
    // reverse: g^{-1}xg must lie in phi(B cap L)
    Matrix z = twisted_frobenius_inv(g, conj_in(x), twisted);
    if (!parabolic_membership(g, z, Part::BL))
      fail("(iii) g^{-1}Bg cap L in phi(B cap L)", kind, x);
  }
  void check_point_iv(const Matrix& t, const std::string& kind) {
    Matrix y = conj_out(twisted_frobenius(g, t, twisted));
    if (!parabolic_membership(g, y, Part::L) ||
        !parabolic_membership(g, gf::transpose(y), Part::B))
      fail("(iv) phi(T) in g^{-1}Tg", kind, t);
    Matrix z = twisted_frobenius_inv(g, conj_in(t), twisted);
    if (!parabolic_membership(g, z, Part::L) ||
        !parabolic_membership(g, gf::transpose(z), Part::B))
      fail("(iv) g^{-1}Tg in phi(T)", kind, t);
  }
};

bool is_diagonal(const Gram& g, const Matrix& x) {
  for (int u = 0; u < x.rows; ++u)
    for (int v = 0; v < x.cols; ++v)
      if (u != v && !g.field.is_zero(x.at(u, v))) return false;
  return true;
}

}  // namespace

FrameReport frame_verify(const Gram& g, const Matrix& cand, bool twisted,
                         int samples, uint64_t seed) {
  if (samples < 1) throw std::invalid_argument("need at least one sample");
  FrameCtx ctx{g, cand, gf::inverse(cand), twisted, FrameReport{}};
  ctx.rep.samples = samples;

  if (!is_in_so(g, cand)) {
    ctx.rep.pass = false;
    ctx.rep.failures.push_back("frame element is not in SO(J)");
    return ctx.rep;
  }
  std::vector<int> perm;
  if (!is_monomial(g, cand, perm)) {
    ctx.rep.pass = false;
    ctx.rep.failures.push_back("frame element is not monomial");
    return ctx.rep;
  }
  // g must normalize L for the two-sided condition checks below
  for (int col = 1; col < g.N() - 1; ++col)
    if (perm[col] == 0 || perm[col] == g.N() - 1) {
      ctx.rep.pass = false;
      ctx.rep.failures.push_back("frame element does not normalize the Levi");
      return ctx.rep;
    }

  const Field& f = g.field;
  // exact generator checks first
  for (const Matrix& x : root_nilpotents(g, false)) {
    Matrix u = exp_nilpotent(g, x, f.one());
    ctx.check_point_i(u, "root generator");
    ctx.check_point_ii(u, "root generator");
  }
  for (const Matrix& x : root_nilpotents(g, true))
    ctx.check_point_iii(exp_nilpotent(g, x, f.one()), "Levi root generator");
  {
    Matrix t = Matrix::identity(f, g.N());
    Field::Elt gen = f.gen();
    for (int i = 0; i < g.m(); ++i) {
      Matrix ti = Matrix::identity(f, g.N());
      ti.at(i, i) = gen;
      ti.at(g.N() - 1 - i, g.N() - 1 - i) = f.inv(gen);
      ctx.check_point_iv(ti, "torus generator");
      t = gf::mul(t, ti);
    }
    ctx.check_point_iv(t, "torus generator product");
  }

  Rng rng(seed);
  for (int s = 0; s < samples; ++s) {
    Matrix b = sample_borel(g, rng);
    ctx.check_point_i(b, "random Borel");
    ctx.check_point_ii(b, "random Borel");
    Matrix bl = sample_borel_levi(g, rng);
    ctx.check_point_iii(bl, "random B cap L");
    Matrix t = sample_torus(g, rng);
    ctx.check_point_iv(t, "random torus");
    if (!ctx.rep.pass && s > 2) break;  // enough witnesses collected
  }
  // sanity on the samplers themselves
  Rng check(seed ^ 0x5eedULL);
  Matrix b = sample_borel(g, check);
  if (!is_in_so(g, b) || !parabolic_membership(g, b, Part::B)) {
    ctx.rep.pass = false;
    ctx.rep.failures.push_back("internal: Borel sampler left the group");
  }
  Matrix bl = sample_borel_levi(g, check);
  if (!is_in_so(g, bl) || !parabolic_membership(g, bl, Part::BL)) {
    ctx.rep.pass = false;
    ctx.rep.failures.push_back("internal: B cap L sampler left the group");
  }
  Matrix t = sample_torus(g, check);
  if (!is_in_so(g, t) || !is_diagonal(g, t)) {
    ctx.rep.pass = false;
    ctx.rep.failures.push_back("internal: torus sampler left the group");
  }
  return ctx.rep;
}

Matrix embed_iota(const Gram& src, const Gram& tgt, const Matrix& x,
                  long long c, long long d) {
  if (tgt.N() != src.N() + 1 || tgt.p != src.p)
    throw std::invalid_argument("incompatible Gram pair for embedding");
  if (x.rows != src.N() || x.cols != src.N())
    throw std::invalid_argument("matrix size does not match source Gram");
  const Field& f = tgt.field;
  int N = tgt.N();
  bool tgt_odd = tgt.parity == Parity::odd;
  // center position being inserted (1-based): m+1 in both directions
  int ins = tgt.m() + 1;
  Matrix y = Matrix::identity(f, N);
  auto old_index = [&](int i) { return i < ins ? i : i + 1; };  // src -> tgt
  for (int i = 1; i <= src.N(); ++i)
    for (int j = 1; j <= src.N(); ++j)
      y.at(old_index(i) - 1, old_index(j) - 1) = x.at(i - 1, j - 1);
  y.at(ins - 1, ins - 1) = f.one();
  for (int i = 1; i <= src.N(); ++i) {
    y.at(old_index(i) - 1, ins - 1) = f.zero();
    y.at(ins - 1, old_index(i) - 1) = f.zero();
  }
  y.at(ins - 1, ins - 1) = f.one();
  if (tgt_odd) return y;

  // target even: straighten c x_m^2 + d x_{m+1}^2 into the split plane.
  // With r^2 = -c and s^2 = d the basis
  //   e_m' = e_m/(2r) + e_{m+1}/(2s),  e_{m+1}' = -e_m/(2r) + e_{m+1}/(2s)
  // is isotropic with pairing 1/2, and the source reflection through e_m
  // becomes the plain swap of the two new vectors.
  int m = tgt.m();
  auto root = [&](long long v) {
    auto r = f.sqrt(f.from_int(v));
    if (!r || f.is_zero(*r))
      throw std::invalid_argument("no square root for embedding constant");
    return *r;
  };
  Field::Elt r = root(-c), s = root(d);
  Matrix M = Matrix::identity(f, N);
  Field::Elt ir2 = f.inv(f.add(r, r)), is2 = f.inv(f.add(s, s));
  M.at(m - 1, m - 1) = ir2;
  M.at(m - 1, m) = f.neg(ir2);
  M.at(m, m - 1) = is2;
  M.at(m, m) = is2;
  return gf::mul(gf::inverse(M), gf::mul(y, M));
}

bool split_over_fp(int n, long long p, long long disc) {
  if (n % 2 != 0) throw std::invalid_argument("splitness test expects even n");
  int m = n / 2 + 1;
  int lhs = 1;
  for (int i = 0; i < m; ++i) lhs *= gf::legendre(-1, p);
  return lhs == gf::legendre(disc, p);
}

}  // namespace eo::so
