#pragma once

#include <map>
#include <string>
#include <vector>

namespace crystals {

using Exponents = std::vector<int>;

// Sparse integer polynomial in nvars() nonnegative-exponent variables.
// Terms are kept in lexicographic order on the exponent vector; zero
// coefficients are never stored.
class Polynomial {
public:
  explicit Polynomial(int nvars);
  static Polynomial monomial(const Exponents& exp, long long coeff = 1);
  static Polynomial constant(int nvars, long long value);

  int nvars() const { return nvars_; }
  bool is_zero() const { return terms_.empty(); }
  long long coeff(const Exponents& exp) const;
  void add_term(const Exponents& exp, long long c);
  const std::map<Exponents, long long>& terms() const { return terms_; }

  Polynomial& operator+=(const Polynomial& o);
  Polynomial& operator-=(const Polynomial& o);
  Polynomial operator+(const Polynomial& o) const;
  Polynomial operator-(const Polynomial& o) const;
  Polynomial operator*(const Polynomial& o) const;
  Polynomial operator*(long long c) const;
  bool operator==(const Polynomial& o) const = default;

  bool is_homogeneous() const;
  // Splits into homogeneous parts keyed by total degree.
  std::map<int, Polynomial> graded_parts() const;

  // Renders t^(3,2,0) as "t1^3 t2^2"; terms in lexicographically
  // descending exponent order.
  std::string pretty() const;

private:
  int nvars_;
  std::map<Exponents, long long> terms_;
};

// Swaps variables i, i+1 (1-based).
Polynomial swap_adjacent_vars(int i, const Polynomial& f);

// Divided difference: (t_i f - s_i(t_i f)) / (t_i - t_{i+1}), computed per
// monomial by the closed geometric-sum form.
Polynomial divided_difference(int i, const Polynomial& f);

// Demazure operator via the Weyl-vector shift; coincides with
// divided_difference in this realization but is computed along an
// independent arithmetic route.
Polynomial demazure_operator(int i, const Polynomial& f);

// divided_difference(i, f) - f.
Polynomial atom_operator(int i, const Polynomial& f);

// Key polynomial of a weak composition.
Polynomial key_polynomial(const Exponents& beta);

// Polynomial Demazure atom of a weak composition.
Polynomial atom_polynomial(const Exponents& beta);

// All weak compositions of degree into nparts parts, lexicographic order.
std::vector<Exponents> compositions(int degree, int nparts);

// Unique expansion of f in the atom-polynomial basis, one homogeneous
// degree at a time, by exact rational Gaussian elimination. Throws
// std::logic_error if the solve is non-integral or inconsistent.
std::map<Exponents, long long> expand_in_atoms(const Polynomial& f);

}  // namespace crystals
