#pragma once
#include <array>
#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "eo/rng.hpp"

namespace eo::gf {

// GF(p^k) for odd prime p and k <= 4, elements represented as reduced
// polynomials over GF(p) modulo a fixed monic irreducible. The modulus is the
// lexicographically smallest irreducible of its degree, so the representation
// is reproducible across runs.
class Field {
 public:
  // coefficient vector c[0] + c[1] x + ... ; always reduced mod p, deg < k
  using Elt = std::array<long long, 4>;

  Field(long long p, int k = 1);

  long long p() const { return p_; }
  int k() const { return k_; }
  long long size() const { return q_; }
  // modulus coefficients c0..ck (monic, ck = 1)
  std::vector<long long> modulus() const;

  Elt zero() const { return {0, 0, 0, 0}; }
  Elt one() const { return {1, 0, 0, 0}; }
  Elt from_int(long long v) const;
  // x^(index in base p); enumerates all q elements as index runs over [0,q)
  Elt element(long long index) const;
  long long index_of(const Elt& a) const;
  Elt gen() const { return k_ == 1 ? one() : element(p_); }  // the class of x

  bool is_zero(const Elt& a) const;
  bool eq(const Elt& a, const Elt& b) const { return a == b; }

  Elt neg(const Elt& a) const;
  Elt add(const Elt& a, const Elt& b) const;
  Elt sub(const Elt& a, const Elt& b) const;
  Elt mul(const Elt& a, const Elt& b) const;
  Elt inv(const Elt& a) const;
  Elt div(const Elt& a, const Elt& b) const;
  Elt pow(Elt a, unsigned long long e) const;

  Elt frobenius(const Elt& a) const { return pow(a, p_); }
  // inverse of Frobenius; x -> x^(p^(k-1))
  Elt frobenius_inv(const Elt& a) const;

  Elt half() const { return inv(from_int(2)); }
  std::optional<Elt> sqrt(const Elt& a) const;  // exhaustive, small fields only

  // uniform over the whole field
  Elt sample(Rng& rng) const { return element(rng.below(q_)); }
  Elt sample_nonzero(Rng& rng) const { return element(1 + rng.below(q_ - 1)); }

  std::string str(const Elt& a) const;

  friend bool operator==(const Field& a, const Field& b) {
    return a.p_ == b.p_ && a.k_ == b.k_;
  }
  friend bool operator!=(const Field& a, const Field& b) { return !(a == b); }

  static bool is_prime(long long n);

 private:
  long long p_;
  int k_;
  long long q_;
  std::array<long long, 5> mod_;  // monic modulus, degree k_

  long long md(long long v) const {
    v %= p_;
    return v < 0 ? v + p_ : v;
  }
  void find_modulus();
  bool poly_irreducible(const std::vector<long long>& f) const;
};

// Legendre symbol (a/p) for odd prime p; 0 when p | a.
int legendre(long long a, long long p);

// Dense matrix over a Field. Exact throughout; inverse and det by Gaussian
// elimination, singular input is an error.
struct Matrix {
  int rows = 0, cols = 0;
  std::vector<Field::Elt> e;
  Field f;

  Matrix(const Field& field, int r, int c)
      : rows(r), cols(c), e(static_cast<size_t>(r) * c, field.zero()), f(field) {}

  Field::Elt& at(int i, int j) { return e[static_cast<size_t>(i) * cols + j]; }
  const Field::Elt& at(int i, int j) const {
    return e[static_cast<size_t>(i) * cols + j];
  }

  static Matrix identity(const Field& field, int n);
  bool is_square() const { return rows == cols; }

  friend bool operator==(const Matrix& a, const Matrix& b) {
    return a.rows == b.rows && a.cols == b.cols && a.f == b.f && a.e == b.e;
  }
  friend bool operator!=(const Matrix& a, const Matrix& b) { return !(a == b); }
};

Matrix mul(const Matrix& a, const Matrix& b);
Matrix transpose(const Matrix& a);
Matrix inverse(const Matrix& a);  // throws std::domain_error if singular
Field::Elt det(const Matrix& a);
Matrix frobenius_entrywise(const Matrix& a);
Matrix frobenius_inv_entrywise(const Matrix& a);
std::string str(const Matrix& a);

// deterministic field element for a given seed (full support over the field)
Field::Elt random_element(const Field& f, uint64_t seed);

}  // namespace eo::gf
