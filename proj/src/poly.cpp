#include "crystals/poly.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

#include "crystals/weyl.hpp"

namespace crystals {

namespace {

void check_exponents(const Exponents& exp, int nvars) {
  if (static_cast<int>(exp.size()) != nvars)
    throw std::invalid_argument("Polynomial: exponent vector has wrong length");
  for (int e : exp)
    if (e < 0) throw std::invalid_argument("Polynomial: negative exponent");
}

void check_index(int i, int nvars) {
  if (i < 1 || i > nvars - 1) throw std::out_of_range("operator index out of range");
}

int total_degree(const Exponents& exp) { return std::accumulate(exp.begin(), exp.end(), 0); }

}  // namespace

Polynomial::Polynomial(int nvars) : nvars_(nvars) {
  if (nvars < 1) throw std::invalid_argument("Polynomial: nvars must be positive");
}

Polynomial Polynomial::monomial(const Exponents& exp, long long coeff) {
  Polynomial p(static_cast<int>(exp.size()));
  p.add_term(exp, coeff);
  return p;
}

Polynomial Polynomial::constant(int nvars, long long value) {
  Polynomial p(nvars);
  p.add_term(Exponents(nvars, 0), value);
  return p;
}

long long Polynomial::coeff(const Exponents& exp) const {
  auto it = terms_.find(exp);
  return it == terms_.end() ? 0 : it->second;
}

void Polynomial::add_term(const Exponents& exp, long long c) {
  check_exponents(exp, nvars_);
  if (c == 0) return;
  auto [it, inserted] = terms_.emplace(exp, c);
  if (!inserted) {
    it->second += c;
    if (it->second == 0) terms_.erase(it);
  }
}

Polynomial& Polynomial::operator+=(const Polynomial& o) {
  if (nvars_ != o.nvars_) throw std::invalid_argument("Polynomial: nvars mismatch");
  for (const auto& [e, c] : o.terms_) add_term(e, c);
  return *this;
}

Polynomial& Polynomial::operator-=(const Polynomial& o) {
  if (nvars_ != o.nvars_) throw std::invalid_argument("Polynomial: nvars mismatch");
  for (const auto& [e, c] : o.terms_) add_term(e, -c);
  return *this;
}

Polynomial Polynomial::operator+(const Polynomial& o) const {
  Polynomial out = *this;
  out += o;
  return out;
}

Polynomial Polynomial::operator-(const Polynomial& o) const {
  Polynomial out = *this;
  out -= o;
  return out;
}

Polynomial Polynomial::operator*(const Polynomial& o) const {
  if (nvars_ != o.nvars_) throw std::invalid_argument("Polynomial: nvars mismatch");
  Polynomial out(nvars_);
  for (const auto& [ea, ca] : terms_)
    for (const auto& [eb, cb] : o.terms_) {
      Exponents e(nvars_);
      for (int j = 0; j < nvars_; ++j) e[j] = ea[j] + eb[j];
      out.add_term(e, ca * cb);
    }
  return out;
}

Polynomial Polynomial::operator*(long long c) const {
  Polynomial out(nvars_);
  if (c == 0) return out;
  for (const auto& [e, k] : terms_) out.add_term(e, k * c);
  return out;
}

bool Polynomial::is_homogeneous() const {
  if (terms_.empty()) return true;
  const int d = total_degree(terms_.begin()->first);
  for (const auto& [e, c] : terms_)
    if (total_degree(e) != d) return false;
  return true;
}

std::map<int, Polynomial> Polynomial::graded_parts() const {
  std::map<int, Polynomial> out;
  for (const auto& [e, c] : terms_) {
    auto [it, inserted] = out.emplace(total_degree(e), Polynomial(nvars_));
    it->second.add_term(e, c);
  }
  return out;
}

std::string Polynomial::pretty() const {
  if (terms_.empty()) return "0";
  std::string s;
  for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
    const auto& [e, c] = *it;
    if (s.empty()) {
      if (c < 0) s += "-";
    } else {
      s += c < 0 ? " - " : " + ";
    }
    const long long a = c < 0 ? -c : c;
    std::string mono;
    for (int j = 0; j < nvars_; ++j) {
      if (e[j] == 0) continue;
      if (!mono.empty()) mono += " ";
      mono += "t" + std::to_string(j + 1);
      if (e[j] != 1) mono += "^" + std::to_string(e[j]);
    }
    if (mono.empty()) {
      s += std::to_string(a);
    } else {
      if (a != 1) s += std::to_string(a) + " ";
      s += mono;
    }
  }
  return s;
}

Polynomial swap_adjacent_vars(int i, const Polynomial& f) {
  check_index(i, f.nvars());
  Polynomial out(f.nvars());
  for (const auto& [e, c] : f.terms()) {
    Exponents x = e;
    std::swap(x[i - 1], x[i]);
    out.add_term(x, c);
  }
  return out;
}

Polynomial divided_difference(int i, const Polynomial& f) {
  check_index(i, f.nvars());
  Polynomial out(f.nvars());
  for (const auto& [e, c] : f.terms()) {
    const int a = e[i - 1], b = e[i];
    Exponents x = e;
    if (a >= b) {
      for (int t = b; t <= a; ++t) {
        x[i - 1] = t;
        x[i] = a + b - t;
        out.add_term(x, c);
      }
    } else {
      for (int t = a + 1; t <= b - 1; ++t) {
        x[i - 1] = t;
        x[i] = a + b - t;
        out.add_term(x, -c);
      }
    }
  }
  return out;
}

Polynomial demazure_operator(int i, const Polynomial& f) {
  const int n = f.nvars();
  check_index(i, n);
  // Weyl vector rho = (n-1, ..., 1, 0); the shift cancels after division.
  const int ri = n - i, rj = n - i - 1;
  Polynomial out(n);
  for (const auto& [e, c] : f.terms()) {
    const int a = e[i - 1] + ri, b = e[i] + rj;  // exponents of t^(beta+rho)
    Exponents x = e;
    if (a > b) {
      for (int t = b + 1; t <= a; ++t) {
        x[i - 1] = t - ri;
        x[i] = a + b - t - rj;
        out.add_term(x, c);
      }
    } else if (a < b) {
      for (int t = a + 1; t <= b; ++t) {
        x[i - 1] = t - ri;
        x[i] = a + b - t - rj;
        out.add_term(x, -c);
      }
    }
  }
  return out;
}

Polynomial atom_operator(int i, const Polynomial& f) { return divided_difference(i, f) - f; }

namespace {

Polynomial fold_word_on_dominant(const Exponents& beta, bool atoms) {
  for (int e : beta)
    if (e < 0) throw std::invalid_argument("composition entries must be nonnegative");
  Exponents lambda = beta;
  std::sort(lambda.begin(), lambda.end(), std::greater<int>());
  Polynomial p = Polynomial::monomial(lambda);
  if (beta == lambda) return p;
  const WeylElement w = min_rep_sending(lambda, beta);
  for (int letter : canonical_word(w)) p = atoms ? atom_operator(letter, p) : divided_difference(letter, p);
  return p;
}

}  // namespace

Polynomial key_polynomial(const Exponents& beta) { return fold_word_on_dominant(beta, false); }

Polynomial atom_polynomial(const Exponents& beta) { return fold_word_on_dominant(beta, true); }

std::vector<Exponents> compositions(int degree, int nparts) {
  if (degree < 0 || nparts < 1) throw std::invalid_argument("compositions: bad arguments");
  std::vector<Exponents> out;
  Exponents cur(nparts, 0);
  auto rec = [&](auto&& self, int pos, int rest) -> void {
    if (pos == nparts - 1) {
      cur[pos] = rest;
      out.push_back(cur);
      return;
    }
    for (int v = 0; v <= rest; ++v) {
      cur[pos] = v;
      self(self, pos + 1, rest - v);
    }
  };
  rec(rec, 0, degree);
  std::sort(out.begin(), out.end());
  return out;
}

namespace {

// Exact rational arithmetic on 128-bit integers; plenty of headroom for the
// small dense systems solved here.
struct Rational {
  __int128 num = 0;
  __int128 den = 1;

  static __int128 gcd128(__int128 a, __int128 b) {
    if (a < 0) a = -a;
    if (b < 0) b = -b;
    while (b) {
      __int128 t = a % b;
      a = b;
      b = t;
    }
    return a;
  }

  void normalize() {
    if (den == 0) throw std::logic_error("Rational: zero denominator");
    if (den < 0) {
      num = -num;
      den = -den;
    }
    if (num == 0) {
      den = 1;
      return;
    }
    const __int128 g = gcd128(num, den);
    num /= g;
    den /= g;
  }

  static Rational of(long long v) { return Rational{v, 1}; }
  bool is_zero() const { return num == 0; }

  Rational operator+(const Rational& o) const {
    Rational r{num * o.den + o.num * den, den * o.den};
    r.normalize();
    return r;
  }
  Rational operator-(const Rational& o) const {
    Rational r{num * o.den - o.num * den, den * o.den};
    r.normalize();
    return r;
  }
  Rational operator*(const Rational& o) const {
    Rational r{num * o.num, den * o.den};
    r.normalize();
    return r;
  }
  Rational operator/(const Rational& o) const {
    if (o.num == 0) throw std::logic_error("Rational: division by zero");
    Rational r{num * o.den, den * o.num};
    r.normalize();
    return r;
  }
};

}  // namespace

std::map<Exponents, long long> expand_in_atoms(const Polynomial& f) {
  std::map<Exponents, long long> out;
  const int n = f.nvars();
  for (const auto& [degree, part] : f.graded_parts()) {
    const std::vector<Exponents> comps = compositions(degree, n);
    const int m = static_cast<int>(comps.size());
    std::map<Exponents, int> row_of;
    for (int r = 0; r < m; ++r) row_of.emplace(comps[r], r);

    // column c holds the atom polynomial of comps[c]
    std::vector<std::vector<Rational>> a(m, std::vector<Rational>(m));
    std::vector<Rational> rhs(m);
    for (int c = 0; c < m; ++c) {
      const Polynomial atom = atom_polynomial(comps[c]);
      for (const auto& [e, k] : atom.terms()) a[row_of.at(e)][c] = Rational::of(k);
    }
    for (const auto& [e, k] : part.terms()) rhs[row_of.at(e)] = Rational::of(k);

    // Gaussian elimination with partial (first nonzero) pivoting.
    std::vector<int> pivot_col(m, -1);
    int row = 0;
    for (int col = 0; col < m && row < m; ++col) {
      int p = -1;
      for (int r = row; r < m; ++r)
        if (!a[r][col].is_zero()) {
          p = r;
          break;
        }
      if (p < 0) continue;
      std::swap(a[p], a[row]);
      std::swap(rhs[p], rhs[row]);
      for (int r = 0; r < m; ++r) {
        if (r == row || a[r][col].is_zero()) continue;
        const Rational factor = a[r][col] / a[row][col];
        for (int c2 = col; c2 < m; ++c2) a[r][c2] = a[r][c2] - factor * a[row][c2];
        rhs[r] = rhs[r] - factor * rhs[row];
      }
      pivot_col[row] = col;
      ++row;
    }
    // the atom polynomials are a basis, so the system must have full rank
    if (row < m) throw std::logic_error("expand_in_atoms: singular atom matrix");

    for (int r = 0; r < row; ++r) {
      const Rational v = rhs[r] / a[r][pivot_col[r]];
      if (v.is_zero()) continue;
      if (v.den != 1) throw std::logic_error("expand_in_atoms: non-integral coefficient");
      const __int128 value = v.num;
      if (value > __int128(9223372036854775807LL) || value < -__int128(9223372036854775807LL))
        throw std::logic_error("expand_in_atoms: coefficient overflow");
      out[comps[pivot_col[r]]] = static_cast<long long>(value);
    }
  }
  return out;
}

}  // namespace crystals
