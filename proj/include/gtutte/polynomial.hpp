#pragma once

#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "gtutte/int_matrix.hpp"

namespace gtutte {

/// Univariate polynomial over Z with arbitrary-precision coefficients.
/// Zero coefficients are never stored; the zero polynomial has no degree.
class UniPoly {
 public:
  UniPoly() = default;
  UniPoly(const Int& constant) { set(0, constant); }
  UniPoly(long constant) { set(0, Int(constant)); }

  static UniPoly variable() { return monomial(1, 1); }
  static UniPoly monomial(const Int& coefficient, long exponent);

  bool is_zero() const { return terms_.empty(); }
  std::optional<long> degree() const;
  Int coefficient(long exponent) const;
  const std::map<long, Int>& terms() const { return terms_; }

  UniPoly operator+(const UniPoly& rhs) const;
  UniPoly operator-(const UniPoly& rhs) const;
  UniPoly operator-() const;
  UniPoly operator*(const UniPoly& rhs) const;
  UniPoly& operator+=(const UniPoly& rhs) { return *this = *this + rhs; }
  bool operator==(const UniPoly&) const = default;

  UniPoly pow(unsigned long e) const;
  Int operator()(const Int& value) const;
  /// p(q(t)).
  UniPoly substitute(const UniPoly& inner) const;

  std::string str(const std::string& var = "t") const;

 private:
  void set(long exponent, Int value);
  std::map<long, Int> terms_;
};

/// Bivariate polynomial in (x, y) with exact integer coefficients.
class BiPoly {
 public:
  BiPoly() = default;
  BiPoly(const Int& constant) { set(0, 0, constant); }
  BiPoly(long constant) { set(0, 0, Int(constant)); }

  static BiPoly monomial(const Int& coefficient, long xdeg, long ydeg);
  static BiPoly x() { return monomial(1, 1, 0); }
  static BiPoly y() { return monomial(1, 0, 1); }

  bool is_zero() const { return terms_.empty(); }
  Int coefficient(long xdeg, long ydeg) const;
  const std::map<std::pair<long, long>, Int>& terms() const { return terms_; }

  BiPoly operator+(const BiPoly& rhs) const;
  BiPoly operator-(const BiPoly& rhs) const;
  BiPoly operator*(const BiPoly& rhs) const;
  BiPoly& operator+=(const BiPoly& rhs) { return *this = *this + rhs; }
  bool operator==(const BiPoly&) const = default;

  BiPoly pow(unsigned long e) const;
  Int operator()(const Int& xv, const Int& yv) const;
  /// p(xs(t), ys(t)).
  UniPoly substitute(const UniPoly& xs, const UniPoly& ys) const;
  /// Polynomial in y obtained by fixing x (and symmetrically).
  UniPoly at_x(const Int& xv) const;
  UniPoly at_y(const Int& yv) const;
  BiPoly swapped_xy() const;

  bool has_negative_coefficient() const;

  std::string str(const std::string& xvar = "x",
                  const std::string& yvar = "y") const;

 private:
  void set(long xdeg, long ydeg, Int value);
  std::map<std::pair<long, long>, Int> terms_;
};

/// Multivariate Laurent polynomial in q (exponent may be negative) and
/// v_1..v_n, sparse with exact integer coefficients. The variable count n
/// is fixed at construction.
class LaurentMulti {
 public:
  explicit LaurentMulti(std::size_t nvars) : nvars_(nvars) {}

  std::size_t nvars() const { return nvars_; }
  bool is_zero() const { return terms_.empty(); }
  /// key: q-exponent followed by the v-exponent vector.
  const std::map<std::vector<long>, Int>& terms() const { return terms_; }

  void add_term(long q_exponent, const std::vector<long>& v_exponents,
                const Int& coefficient);
  Int coefficient(long q_exponent, const std::vector<long>& v_exponents) const;

  LaurentMulti operator+(const LaurentMulti& rhs) const;
  bool operator==(const LaurentMulti&) const = default;

  std::string str() const;

 private:
  std::size_t nvars_;
  std::map<std::vector<long>, Int> terms_;
};

/// x - 1 and y - 1, the recurring Tutte shift factors.
BiPoly x_minus_one();
BiPoly y_minus_one();

/// chi(t) = (-1)^{r_A} t^{r_Gamma - r_A} T(1 - t, 0).
UniPoly specialize_bi_to_uni(const BiPoly& tutte, std::size_t list_rank,
                             std::size_t group_rank);

/// prefactor(t) * p(num(t) / t^denom_power), certified polynomial.
/// Throws NonPolynomialResult when the denominators do not clear.
UniPoly eval_rational(const UniPoly& p, const UniPoly& numerator,
                      unsigned long denom_power, const UniPoly& prefactor);

}  // namespace gtutte
