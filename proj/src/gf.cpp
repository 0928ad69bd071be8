#include "eo/gf.hpp"

#include <algorithm>

namespace eo::gf {

bool Field::is_prime(long long n) {
  if (n < 2) return false;
  for (long long d = 2; d * d <= n; ++d)
    if (n % d == 0) return false;
  return true;
}

Field::Field(long long p, int k) : p_(p), k_(k) {
  if (!is_prime(p) || p == 2) throw std::invalid_argument("p must be an odd prime");
  if (k < 1 || k > 4) throw std::invalid_argument("extension degree must be 1..4");
  q_ = 1;
  for (int i = 0; i < k; ++i) q_ *= p;
  mod_.fill(0);
  mod_[k_] = 1;
  if (k_ > 1) find_modulus();
}

std::vector<long long> Field::modulus() const {
  return std::vector<long long>(mod_.begin(), mod_.begin() + k_ + 1);
}

// Evaluates f (little-endian coefficients) at x over GF(p).
static long long poly_eval(const std::vector<long long>& f, long long x,
                           long long p) {
  long long acc = 0;
  for (auto it = f.rbegin(); it != f.rend(); ++it) acc = (acc * x + *it) % p;
  return acc;
}

// Remainder of monic-divisor polynomial division over GF(p).
static std::vector<long long> poly_rem(std::vector<long long> a,
                                       const std::vector<long long>& b,
                                       long long p) {
  int db = static_cast<int>(b.size()) - 1;
  while (static_cast<int>(a.size()) - 1 >= db) {
    long long lead = a.back() % p;
    int shift = static_cast<int>(a.size()) - 1 - db;
    if (lead != 0)
      for (int i = 0; i <= db; ++i)
        a[i + shift] = ((a[i + shift] - lead * b[i]) % p + p * p) % p;
    a.pop_back();
  }
  while (!a.empty() && a.back() == 0) a.pop_back();
  return a;
}

bool Field::poly_irreducible(const std::vector<long long>& f) const {
  int deg = static_cast<int>(f.size()) - 1;
  for (long long x = 0; x < p_; ++x)
    if (poly_eval(f, x, p_) == 0) return false;
  if (deg <= 3) return true;
  // degree 4: also exclude products of two irreducible quadratics
  for (long long b = 0; b < p_; ++b)
    for (long long c = 0; c < p_; ++c) {
      std::vector<long long> g = {c, b, 1};
      bool has_root = false;
      for (long long x = 0; x < p_ && !has_root; ++x)
        if (poly_eval(g, x, p_) == 0) has_root = true;
      if (has_root) continue;
      if (poly_rem(f, g, p_).empty()) return false;
    }
  return true;
}

void Field::find_modulus() {
  // smallest coefficient vector in base-p order: x^k + c_{k-1}x^{k-1}+...+c_0
  long long count = 1;
  for (int i = 0; i < k_; ++i) count *= p_;
  for (long long idx = 0; idx < count; ++idx) {
    std::vector<long long> f(k_ + 1, 0);
    long long v = idx;
    for (int i = 0; i < k_; ++i) {
      f[i] = v % p_;
      v /= p_;
    }
    f[k_] = 1;
    if (poly_irreducible(f)) {
      for (int i = 0; i <= k_; ++i) mod_[i] = f[i];
      return;
    }
  }
  throw std::logic_error("no irreducible modulus found");
}

Field::Elt Field::from_int(long long v) const {
  Elt a = zero();
  a[0] = md(v);
  return a;
}

Field::Elt Field::element(long long index) const {
  if (index < 0 || index >= q_) throw std::out_of_range("field element index");
  Elt a = zero();
  for (int i = 0; i < k_; ++i) {
    a[i] = index % p_;
    index /= p_;
  }
  return a;
}

long long Field::index_of(const Elt& a) const {
  long long idx = 0;
  for (int i = k_ - 1; i >= 0; --i) idx = idx * p_ + a[i];
  return idx;
}

bool Field::is_zero(const Elt& a) const {
  for (int i = 0; i < k_; ++i)
    if (a[i] != 0) return false;
  return true;
}

Field::Elt Field::neg(const Elt& a) const {
  Elt r = zero();
  for (int i = 0; i < k_; ++i) r[i] = md(-a[i]);
  return r;
}

Field::Elt Field::add(const Elt& a, const Elt& b) const {
  Elt r = zero();
  for (int i = 0; i < k_; ++i) r[i] = md(a[i] + b[i]);
  return r;
}

Field::Elt Field::sub(const Elt& a, const Elt& b) const {
  Elt r = zero();
  for (int i = 0; i < k_; ++i) r[i] = md(a[i] - b[i]);
  return r;
}

Field::Elt Field::mul(const Elt& a, const Elt& b) const {
  long long conv[7] = {0};
  for (int i = 0; i < k_; ++i) {
    if (a[i] == 0) continue;
    for (int j = 0; j < k_; ++j) conv[i + j] = (conv[i + j] + a[i] * b[j]) % p_;
  }
  // reduce by the monic modulus
  for (int d = 2 * k_ - 2; d >= k_; --d) {
    long long lead = conv[d] % p_;
    if (lead == 0) continue;
    conv[d] = 0;
    for (int i = 0; i < k_; ++i)
      conv[d - k_ + i] = ((conv[d - k_ + i] - lead * mod_[i]) % p_ + p_ * p_) % p_;
  }
  Elt r = zero();
  for (int i = 0; i < k_; ++i) r[i] = md(conv[i]);
  return r;
}

Field::Elt Field::pow(Elt a, unsigned long long e) const {
  Elt r = one();
  while (e > 0) {
    if (e & 1) r = mul(r, a);
    a = mul(a, a);
    e >>= 1;
  }
  return r;
}

Field::Elt Field::inv(const Elt& a) const {
  if (is_zero(a)) throw std::domain_error("division by zero in GF(p^k)");
  return pow(a, static_cast<unsigned long long>(q_ - 2));
}

Field::Elt Field::div(const Elt& a, const Elt& b) const { return mul(a, inv(b)); }

Field::Elt Field::frobenius_inv(const Elt& a) const {
  Elt r = a;
  for (int i = 0; i < k_ - 1; ++i) r = frobenius(r);
  return r;
}

std::optional<Field::Elt> Field::sqrt(const Elt& a) const {
  for (long long i = 0; i < q_; ++i) {
    Elt x = element(i);
    if (mul(x, x) == a) return x;
  }
  return std::nullopt;
}

std::string Field::str(const Elt& a) const {
  if (k_ == 1) return std::to_string(a[0]);
  std::string s;
  for (int i = 0; i < k_; ++i) {
    if (a[i] == 0) continue;
    if (!s.empty()) s += "+";
    if (i == 0 || a[i] != 1) s += std::to_string(a[i]);
    if (i >= 1) {
      if (a[i] != 1) s += "*";
      s += "x";
      if (i > 1) s += "^" + std::to_string(i);
    }
  }
  return s.empty() ? "0" : s;
}

int legendre(long long a, long long p) {
  a %= p;
  if (a < 0) a += p;
  if (a == 0) return 0;
  long long r = 1, base = a, e = (p - 1) / 2;
  while (e > 0) {
    if (e & 1) r = r * base % p;
    base = base * base % p;
    e >>= 1;
  }
  return r == 1 ? 1 : -1;
}

Matrix Matrix::identity(const Field& field, int n) {
  Matrix m(field, n, n);
  for (int i = 0; i < n; ++i) m.at(i, i) = field.one();
  return m;
}

Matrix mul(const Matrix& a, const Matrix& b) {
  if (a.cols != b.rows || a.f != b.f)
    throw std::invalid_argument("matrix shape/field mismatch in multiply");
  Matrix r(a.f, a.rows, b.cols);
  for (int i = 0; i < a.rows; ++i)
    for (int l = 0; l < a.cols; ++l) {
      const auto& av = a.at(i, l);
      if (a.f.is_zero(av)) continue;
      for (int j = 0; j < b.cols; ++j)
        r.at(i, j) = a.f.add(r.at(i, j), a.f.mul(av, b.at(l, j)));
    }
  return r;
}

Matrix transpose(const Matrix& a) {
  Matrix r(a.f, a.cols, a.rows);
  for (int i = 0; i < a.rows; ++i)
    for (int j = 0; j < a.cols; ++j) r.at(j, i) = a.at(i, j);
  return r;
}

Matrix inverse(const Matrix& a) {
  if (!a.is_square()) throw std::invalid_argument("inverse of non-square matrix");
  int n = a.rows;
  Matrix m = a;
  Matrix inv = Matrix::identity(a.f, n);
  const Field& f = a.f;
  for (int col = 0; col < n; ++col) {
    int pivot = -1;
    for (int r = col; r < n; ++r)
      if (!f.is_zero(m.at(r, col))) {
        pivot = r;
        break;
      }
    if (pivot < 0) throw std::domain_error("singular matrix");
    if (pivot != col)
      for (int j = 0; j < n; ++j) {
        std::swap(m.at(pivot, j), m.at(col, j));
        std::swap(inv.at(pivot, j), inv.at(col, j));
      }
    Field::Elt s = f.inv(m.at(col, col));
    for (int j = 0; j < n; ++j) {
      m.at(col, j) = f.mul(m.at(col, j), s);
      inv.at(col, j) = f.mul(inv.at(col, j), s);
    }
    for (int r = 0; r < n; ++r) {
      if (r == col || f.is_zero(m.at(r, col))) continue;
      Field::Elt c = m.at(r, col);
      for (int j = 0; j < n; ++j) {
        m.at(r, j) = f.sub(m.at(r, j), f.mul(c, m.at(col, j)));
        inv.at(r, j) = f.sub(inv.at(r, j), f.mul(c, inv.at(col, j)));
      }
    }
  }
  return inv;
}

Field::Elt det(const Matrix& a) {
  if (!a.is_square()) throw std::invalid_argument("det of non-square matrix");
  int n = a.rows;
  Matrix m = a;
  const Field& f = a.f;
  Field::Elt d = f.one();
  for (int col = 0; col < n; ++col) {
    int pivot = -1;
    for (int r = col; r < n; ++r)
      if (!f.is_zero(m.at(r, col))) {
        pivot = r;
        break;
      }
    if (pivot < 0) return f.zero();
    if (pivot != col) {
      for (int j = 0; j < n; ++j) std::swap(m.at(pivot, j), m.at(col, j));
      d = f.neg(d);
    }
    d = f.mul(d, m.at(col, col));
    Field::Elt s = f.inv(m.at(col, col));
    for (int r = col + 1; r < n; ++r) {
      if (f.is_zero(m.at(r, col))) continue;
      Field::Elt c = f.mul(m.at(r, col), s);
      for (int j = col; j < n; ++j)
        m.at(r, j) = f.sub(m.at(r, j), f.mul(c, m.at(col, j)));
    }
  }
  return d;
}

Matrix frobenius_entrywise(const Matrix& a) {
  Matrix r = a;
  for (auto& v : r.e) v = a.f.frobenius(v);
  return r;
}

Matrix frobenius_inv_entrywise(const Matrix& a) {
  Matrix r = a;
  for (auto& v : r.e) v = a.f.frobenius_inv(v);
  return r;
}

std::string str(const Matrix& a) {
  std::string s;
  for (int i = 0; i < a.rows; ++i) {
    s += "[";
    for (int j = 0; j < a.cols; ++j) {
      if (j) s += " ";
      s += a.f.str(a.at(i, j));
    }
    s += "]\n";
  }
  return s;
}

Field::Elt random_element(const Field& f, uint64_t seed) {
  Rng rng(seed);
  return f.sample(rng);
}

}  // namespace eo::gf
