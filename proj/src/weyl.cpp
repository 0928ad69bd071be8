#include "eo/weyl.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <stdexcept>

namespace eo::weyl {

Group make_b(int m) {
  if (m < 1) throw std::invalid_argument("B rank must be >= 1");
  return {Family::B, m, 2 * m + 1};
}

Group make_d(int m) {
  if (m < 2) throw std::invalid_argument("D rank must be >= 2");
  return {Family::D, m, 2 * m};
}

Group make_a(int g) {
  if (g < 1) throw std::invalid_argument("symmetric group degree must be >= 1");
  return {Family::A, g - 1, g};
}

Group group_for_so(int n) {
  if (n < 1) throw std::invalid_argument("n must be >= 1");
  return n % 2 == 1 ? make_b((n + 1) / 2) : make_d(n / 2 + 1);
}

Elt identity(const Group& g) {
  Elt w;
  w.p.resize(g.degree);
  for (int i = 0; i < g.degree; ++i) w.p[i] = static_cast<uint8_t>(i);
  return w;
}

bool is_valid(const Group& g, const Elt& w) {
  int n = g.degree;
  if (static_cast<int>(w.p.size()) != n) return false;
  std::vector<bool> seen(n, false);
  for (int i = 0; i < n; ++i) {
    if (w.p[i] >= n || seen[w.p[i]]) return false;
    seen[w.p[i]] = true;
  }
  if (g.family == Family::A) return true;
  for (int i = 1; i <= n; ++i)
    if (apply(w, i) + apply(w, n + 1 - i) != n + 1) return false;
  if (g.family == Family::D) {
    int cnt = 0;
    for (int i = 1; i <= g.m; ++i)
      if (apply(w, i) > g.m) ++cnt;
    if (cnt % 2 != 0) return false;
  }
  return true;
}

Elt mul(const Elt& a, const Elt& b) {
  Elt r;
  r.p.resize(a.p.size());
  for (size_t i = 0; i < a.p.size(); ++i) r.p[i] = a.p[b.p[i]];
  return r;
}

Elt inverse(const Elt& a) {
  Elt r;
  r.p.resize(a.p.size());
  for (size_t i = 0; i < a.p.size(); ++i) r.p[a.p[i]] = static_cast<uint8_t>(i);
  return r;
}

Elt transposition(int degree, int a, int b) {
  Elt w;
  w.p.resize(degree);
  for (int i = 0; i < degree; ++i) w.p[i] = static_cast<uint8_t>(i);
  std::swap(w.p[a - 1], w.p[b - 1]);
  return w;
}

Elt simple_reflection(const Group& g, int i) {
  if (i < 1 || i > g.rank()) throw std::out_of_range("simple reflection index");
  int n = g.degree;
  Elt w = identity(g);
  auto swap1 = [&](int a, int b) { std::swap(w.p[a - 1], w.p[b - 1]); };
  switch (g.family) {
    case Family::A:
      swap1(i, i + 1);
      break;
    case Family::B:
      if (i < g.m) {
        swap1(i, i + 1);
        swap1(n - i, n + 1 - i);
      } else {
        swap1(g.m, g.m + 2);
      }
      break;
    case Family::D:
      if (i < g.m) {
        swap1(i, i + 1);
        swap1(n - i, n + 1 - i);
      } else {
        swap1(g.m - 1, g.m + 1);
        swap1(g.m, g.m + 2);
      }
      break;
  }
  return w;
}

// Signed-coordinate view for B/D: position j <= m carries coordinate e_j and
// slot v corresponds to +e_v (v <= m) or -e_{N+1-v} (v >= N+1-m). Length is
// the number of positive roots sent to negative roots.
namespace {

struct SignedVal {
  int idx;   // 1..m
  int sign;  // +-1
};

SignedVal signed_val(const Group& g, int v) {
  if (v <= g.m) return {v, 1};
  return {g.degree + 1 - v, -1};
}

}  // namespace

int length(const Group& g, const Elt& w) {
  if (g.family == Family::A) {
    int inv = 0;
    for (size_t i = 0; i < w.p.size(); ++i)
      for (size_t j = i + 1; j < w.p.size(); ++j)
        if (w.p[i] > w.p[j]) ++inv;
    return inv;
  }
  int m = g.m;
  std::vector<SignedVal> u(m + 1);
  for (int j = 1; j <= m; ++j) u[j] = signed_val(g, apply(w, j));
  int count = 0;
  // e_i - e_j and e_i + e_j, i < j
  for (int i = 1; i <= m; ++i)
    for (int j = i + 1; j <= m; ++j) {
      const auto &a = u[i], &b = u[j];
      // w(e_i - e_j) = sa*e_a - sb*e_b
      bool neg;
      if (a.sign > 0 && b.sign > 0)
        neg = a.idx > b.idx;
      else if (a.sign > 0 && b.sign < 0)
        neg = false;  // e_a + e_b
      else if (a.sign < 0 && b.sign > 0)
        neg = true;  // -e_a - e_b
      else
        neg = b.idx > a.idx;  // e_b - e_a
      if (neg) ++count;
      // w(e_i + e_j) = sa*e_a + sb*e_b
      if (a.sign > 0 && b.sign > 0)
        neg = false;
      else if (a.sign < 0 && b.sign < 0)
        neg = true;
      else if (a.sign > 0)
        neg = a.idx > b.idx;  // e_a - e_b
      else
        neg = b.idx > a.idx;  // e_b - e_a
      if (neg) ++count;
    }
  if (g.family == Family::B)
    for (int i = 1; i <= m; ++i)
      if (u[i].sign < 0) ++count;
  return count;
}

bool is_right_descent(const Group& g, const Elt& w, int i) {
  return length(g, mul(w, simple_reflection(g, i))) < length(g, w);
}

bool is_left_descent(const Group& g, const Elt& w, int i) {
  return length(g, mul(simple_reflection(g, i), w)) < length(g, w);
}

std::vector<int> reduced_word(const Group& g, Elt w) {
  std::vector<int> collected;
  int len = length(g, w);
  while (len > 0) {
    bool found = false;
    for (int i = 1; i <= g.rank(); ++i) {
      Elt ws = mul(w, simple_reflection(g, i));
      int l = length(g, ws);
      if (l < len) {
        collected.push_back(i);
        w = ws;
        len = l;
        found = true;
        break;
      }
    }
    if (!found) throw std::logic_error("no descent found for nontrivial element");
  }
  std::reverse(collected.begin(), collected.end());
  return collected;
}

Elt eval_word(const Group& g, const std::vector<int>& word) {
  Elt w = identity(g);
  for (int i : word) w = mul(w, simple_reflection(g, i));
  return w;
}

static void reduced_words_rec(const Group& g, const Elt& w, int len,
                              std::vector<int>& prefix,
                              std::vector<std::vector<int>>& out) {
  if (len == 0) {
    std::vector<int> word(prefix.rbegin(), prefix.rend());
    out.push_back(word);
    return;
  }
  for (int i = 1; i <= g.rank(); ++i) {
    Elt ws = mul(w, simple_reflection(g, i));
    if (length(g, ws) == len - 1) {
      prefix.push_back(i);
      reduced_words_rec(g, ws, len - 1, prefix, out);
      prefix.pop_back();
    }
  }
}

std::vector<std::vector<int>> all_reduced_words(const Group& g, const Elt& w) {
  std::vector<std::vector<int>> out;
  std::vector<int> prefix;
  reduced_words_rec(g, w, length(g, w), prefix, out);
  return out;
}

bool bruhat_leq(const Group& g, const Elt& a, const Elt& b) {
  Elt u = a, v = b;
  int lu = length(g, u), lv = length(g, v);
  if (lu > lv) return false;
  while (lv > 0) {
    int s = 0;
    for (int i = 1; i <= g.rank(); ++i)
      if (is_left_descent(g, v, i)) {
        s = i;
        break;
      }
    Elt refl = simple_reflection(g, s);
    Elt su = mul(refl, u);
    if (length(g, su) < lu) {
      u = su;
      --lu;
    }
    v = mul(refl, v);
    --lv;
  }
  return lu == 0;
}

std::vector<Elt> all_elements(const Group& g) {
  std::vector<Elt> gens;
  for (int i = 1; i <= g.rank(); ++i) gens.push_back(simple_reflection(g, i));
  std::set<Elt> seen;
  std::vector<Elt> queue = {identity(g)};
  seen.insert(queue[0]);
  for (size_t head = 0; head < queue.size(); ++head) {
    Elt w = queue[head];
    for (const Elt& s : gens) {
      Elt ws = mul(w, s);
      if (seen.insert(ws).second) queue.push_back(ws);
    }
  }
  return queue;
}

std::vector<int> levi_generators(const Group& g) {
  std::vector<int> out;
  for (int i = 2; i <= g.rank(); ++i) {
    Elt s = simple_reflection(g, i);
    if (apply(s, 1) == 1) out.push_back(i);
  }
  return out;
}

static Elt ascend(const Group& g, const std::vector<int>& gens) {
  Elt w = identity(g);
  int len = 0;
  bool moved = true;
  while (moved) {
    moved = false;
    for (int i : gens) {
      Elt ws = mul(w, simple_reflection(g, i));
      int l = length(g, ws);
      if (l > len) {
        w = ws;
        len = l;
        moved = true;
        break;
      }
    }
  }
  return w;
}

std::pair<Elt, Elt> longest_elements(const Group& g,
                                     const std::vector<int>& levi_gens) {
  std::vector<int> all;
  for (int i = 1; i <= g.rank(); ++i) all.push_back(i);
  Elt w0 = ascend(g, all);
  Elt w0l = ascend(g, levi_gens);
  // certify maximality: every generator must be a descent
  for (int i : all)
    if (!is_right_descent(g, w0, i))
      throw std::logic_error("longest element is not length-maximal");
  for (int i : levi_gens)
    if (!is_right_descent(g, w0l, i))
      throw std::logic_error("parabolic longest element is not maximal");
  return {w0, w0l};
}

Elt coset_minimize(const Group& g, const std::vector<int>& levi_gens, Elt w) {
  bool moved = true;
  while (moved) {
    moved = false;
    for (int i : levi_gens)
      if (is_left_descent(g, w, i)) {
        w = mul(simple_reflection(g, i), w);
        moved = true;
        break;
      }
  }
  return w;
}

std::vector<Elt> min_coset_reps(const Group& g,
                                const std::vector<int>& levi_gens) {
  if (g.family == Family::A)
    throw std::invalid_argument("min_coset_reps expects family B or D");
  std::vector<Elt> reps;
  for (const Elt& w : all_elements(g)) {
    bool minimal = true;
    for (int i : levi_gens)
      if (is_left_descent(g, w, i)) {
        minimal = false;
        break;
      }
    if (minimal) reps.push_back(w);
  }
  std::sort(reps.begin(), reps.end(), [&](const Elt& a, const Elt& b) {
    int la = length(g, a), lb = length(g, b);
    if (la != lb) return la < lb;
    return a.p < b.p;
  });
  return reps;
}

std::vector<LabeledWord> closed_form_muW(int n) {
  if (n < 1) throw std::invalid_argument("n must be >= 1");
  std::vector<LabeledWord> out;
  bool odd = n % 2 == 1;
  int m = odd ? (n + 1) / 2 : n / 2 + 1;
  for (int i = 0; i <= n; ++i) {
    LabeledWord lw;
    lw.label = "w" + std::to_string(i);
    lw.dim = i;
    if (i <= m) {
      for (int j = 1; j <= i; ++j) lw.word.push_back(j);
    } else {
      for (int j = 1; j <= m; ++j) lw.word.push_back(j);
      int start = odd ? m - 1 : m - 2;
      for (int j = start; j >= n - i + 1; --j) lw.word.push_back(j);
    }
    out.push_back(lw);
  }
  if (!odd) {
    LabeledWord lw;
    lw.label = "w" + std::to_string(m - 1) + "d";
    lw.dim = m - 1;
    lw.dagger = true;
    for (int j = 1; j <= m - 2; ++j) lw.word.push_back(j);
    lw.word.push_back(m);
    out.push_back(lw);
  }
  return out;
}

int typeA_eo_index(const Group& g, const Elt& w) {
  if (g.family != Family::A)
    throw std::invalid_argument("typeA_eo_index expects a symmetric group");
  Elt wi = inverse(w);
  // minimal coset representative: positions of 2..g strictly increasing
  for (int v = 2; v < g.degree; ++v)
    if (apply(wi, v) > apply(wi, v + 1))
      throw std::invalid_argument("element is not minimal in its coset");
  return apply(wi, 1) - 1;
}

std::string one_line_str(const Elt& w) {
  std::string s = "[";
  for (size_t i = 0; i < w.p.size(); ++i) {
    if (i) s += " ";
    s += std::to_string(w.p[i] + 1);
  }
  return s + "]";
}

std::string cycle_str(const Elt& w) {
  int n = static_cast<int>(w.p.size());
  std::vector<bool> used(n + 1, false);
  std::string s;
  for (int i = 1; i <= n; ++i) {
    if (used[i] || apply(w, i) == i) continue;
    s += "(";
    int j = i;
    bool first = true;
    while (!used[j]) {
      used[j] = true;
      if (!first) s += ",";
      s += std::to_string(j);
      first = false;
      j = apply(w, j);
    }
    s += ")";
  }
  return s.empty() ? "1" : s;
}

}  // namespace eo::weyl
