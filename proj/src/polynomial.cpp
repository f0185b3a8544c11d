#include "gtutte/polynomial.hpp"

#include <algorithm>
#include <sstream>

#include "gtutte/errors.hpp"

namespace gtutte {

namespace {

// Shared canonical text form: terms arrive pre-sorted; each as
// (coefficient, rendered variable part or "" for constants).
std::string render_terms(
    const std::vector<std::pair<Int, std::string>>& terms) {
  if (terms.empty()) return "0";
  std::ostringstream out;
  bool first = true;
  for (const auto& [c, vars] : terms) {
    Int a = abs(c);
    if (first) {
      if (c < 0) out << "-";
      first = false;
    } else {
      out << (c < 0 ? " - " : " + ");
    }
    if (vars.empty()) {
      out << a.get_str();
    } else if (a == 1) {
      out << vars;
    } else {
      out << a.get_str() << "*" << vars;
    }
  }
  return out.str();
}

std::string power(const std::string& var, long e) {
  if (e == 0) return "";
  if (e == 1) return var;
  return var + "^" + std::to_string(e);
}

}  // namespace

void UniPoly::set(long exponent, Int value) {
  if (value == 0)
    terms_.erase(exponent);
  else
    terms_[exponent] = std::move(value);
}

UniPoly UniPoly::monomial(const Int& coefficient, long exponent) {
  UniPoly p;
  p.set(exponent, coefficient);
  return p;
}

std::optional<long> UniPoly::degree() const {
  if (terms_.empty()) return std::nullopt;
  return terms_.rbegin()->first;
}

Int UniPoly::coefficient(long exponent) const {
  auto it = terms_.find(exponent);
  return it == terms_.end() ? Int(0) : it->second;
}

UniPoly UniPoly::operator+(const UniPoly& rhs) const {
  UniPoly out = *this;
  for (const auto& [e, c] : rhs.terms_) out.set(e, out.coefficient(e) + c);
  return out;
}

UniPoly UniPoly::operator-() const {
  UniPoly out;
  for (const auto& [e, c] : terms_) out.terms_[e] = -c;
  return out;
}

UniPoly UniPoly::operator-(const UniPoly& rhs) const { return *this + (-rhs); }

UniPoly UniPoly::operator*(const UniPoly& rhs) const {
  UniPoly out;
  for (const auto& [e1, c1] : terms_)
    for (const auto& [e2, c2] : rhs.terms_)
      out.set(e1 + e2, out.coefficient(e1 + e2) + c1 * c2);
  return out;
}

UniPoly UniPoly::pow(unsigned long e) const {
  UniPoly out(1);
  for (unsigned long i = 0; i < e; ++i) out = out * *this;
  return out;
}

Int UniPoly::operator()(const Int& value) const {
  // Horner over the sparse terms, highest exponent first.
  Int acc = 0;
  long prev = 0;
  bool first = true;
  for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
    if (!first)
      for (long k = it->first; k < prev; ++k) acc *= value;
    acc += it->second;
    prev = it->first;
    first = false;
  }
  if (!first)
    for (long k = 0; k < prev; ++k) acc *= value;
  return acc;
}

UniPoly UniPoly::substitute(const UniPoly& inner) const {
  UniPoly out;
  for (const auto& [e, c] : terms_)
    out += inner.pow(static_cast<unsigned long>(e)) * UniPoly(c);
  return out;
}

std::string UniPoly::str(const std::string& var) const {
  std::vector<std::pair<Int, std::string>> parts;
  for (auto it = terms_.rbegin(); it != terms_.rend(); ++it)
    parts.emplace_back(it->second, power(var, it->first));
  return render_terms(parts);
}

void BiPoly::set(long xdeg, long ydeg, Int value) {
  auto key = std::make_pair(xdeg, ydeg);
  if (value == 0)
    terms_.erase(key);
  else
    terms_[key] = std::move(value);
}

BiPoly BiPoly::monomial(const Int& coefficient, long xdeg, long ydeg) {
  BiPoly p;
  p.set(xdeg, ydeg, coefficient);
  return p;
}

Int BiPoly::coefficient(long xdeg, long ydeg) const {
  auto it = terms_.find({xdeg, ydeg});
  return it == terms_.end() ? Int(0) : it->second;
}

BiPoly BiPoly::operator+(const BiPoly& rhs) const {
  BiPoly out = *this;
  for (const auto& [k, c] : rhs.terms_)
    out.set(k.first, k.second, out.coefficient(k.first, k.second) + c);
  return out;
}

BiPoly BiPoly::operator-(const BiPoly& rhs) const {
  BiPoly out = *this;
  for (const auto& [k, c] : rhs.terms_)
    out.set(k.first, k.second, out.coefficient(k.first, k.second) - c);
  return out;
}

BiPoly BiPoly::operator*(const BiPoly& rhs) const {
  BiPoly out;
  for (const auto& [k1, c1] : terms_)
    for (const auto& [k2, c2] : rhs.terms_) {
      long xd = k1.first + k2.first, yd = k1.second + k2.second;
      out.set(xd, yd, out.coefficient(xd, yd) + c1 * c2);
    }
  return out;
}

BiPoly BiPoly::pow(unsigned long e) const {
  BiPoly out(1);
  for (unsigned long i = 0; i < e; ++i) out = out * *this;
  return out;
}

Int BiPoly::operator()(const Int& xv, const Int& yv) const {
  Int acc = 0;
  for (const auto& [k, c] : terms_) {
    Int xp, yp;
    mpz_pow_ui(xp.get_mpz_t(), xv.get_mpz_t(), k.first);
    mpz_pow_ui(yp.get_mpz_t(), yv.get_mpz_t(), k.second);
    acc += c * xp * yp;
  }
  return acc;
}

UniPoly BiPoly::substitute(const UniPoly& xs, const UniPoly& ys) const {
  UniPoly out;
  for (const auto& [k, c] : terms_)
    out += xs.pow(k.first) * ys.pow(k.second) * UniPoly(c);
  return out;
}

UniPoly BiPoly::at_x(const Int& xv) const {
  UniPoly out;
  for (const auto& [k, c] : terms_) {
    Int xp;
    mpz_pow_ui(xp.get_mpz_t(), xv.get_mpz_t(), k.first);
    out += UniPoly::monomial(c * xp, k.second);
  }
  return out;
}

UniPoly BiPoly::at_y(const Int& yv) const {
  UniPoly out;
  for (const auto& [k, c] : terms_) {
    Int yp;
    mpz_pow_ui(yp.get_mpz_t(), yv.get_mpz_t(), k.second);
    out += UniPoly::monomial(c * yp, k.first);
  }
  return out;
}

BiPoly BiPoly::swapped_xy() const {
  BiPoly out;
  for (const auto& [k, c] : terms_) out.set(k.second, k.first, c);
  return out;
}

bool BiPoly::has_negative_coefficient() const {
  return std::any_of(terms_.begin(), terms_.end(),
                     [](const auto& t) { return t.second < 0; });
}

std::string BiPoly::str(const std::string& xvar,
                        const std::string& yvar) const {
  // total degree descending, then x-degree descending
  std::vector<std::pair<std::pair<long, long>, Int>> sorted(terms_.begin(),
                                                            terms_.end());
  std::sort(sorted.begin(), sorted.end(), [](const auto& a, const auto& b) {
    long ta = a.first.first + a.first.second;
    long tb = b.first.first + b.first.second;
    if (ta != tb) return ta > tb;
    return a.first.first > b.first.first;
  });
  std::vector<std::pair<Int, std::string>> parts;
  for (const auto& [k, c] : sorted) {
    std::string xs = power(xvar, k.first), ys = power(yvar, k.second);
    std::string vars = xs;
    if (!ys.empty()) vars += (vars.empty() ? "" : "*") + ys;
    parts.emplace_back(c, vars);
  }
  return render_terms(parts);
}

void LaurentMulti::add_term(long q_exponent,
                            const std::vector<long>& v_exponents,
                            const Int& coefficient) {
  if (v_exponents.size() != nvars_)
    throw DimensionMismatch("wrong number of variable exponents");
  std::vector<long> key;
  key.reserve(nvars_ + 1);
  key.push_back(q_exponent);
  key.insert(key.end(), v_exponents.begin(), v_exponents.end());
  Int& c = terms_[key];
  c += coefficient;
  if (c == 0) terms_.erase(key);
}

Int LaurentMulti::coefficient(long q_exponent,
                              const std::vector<long>& v_exponents) const {
  std::vector<long> key;
  key.push_back(q_exponent);
  key.insert(key.end(), v_exponents.begin(), v_exponents.end());
  auto it = terms_.find(key);
  return it == terms_.end() ? Int(0) : it->second;
}

LaurentMulti LaurentMulti::operator+(const LaurentMulti& rhs) const {
  if (nvars_ != rhs.nvars_)
    throw DimensionMismatch("adding Laurent polynomials of different arity");
  LaurentMulti out = *this;
  for (const auto& [k, c] : rhs.terms_) {
    Int& v = out.terms_[k];
    v += c;
    if (v == 0) out.terms_.erase(k);
  }
  return out;
}

std::string LaurentMulti::str() const {
  std::vector<std::pair<std::vector<long>, Int>> sorted(terms_.begin(),
                                                        terms_.end());
  std::sort(sorted.begin(), sorted.end(),
            [](const auto& a, const auto& b) { return a.first > b.first; });
  std::vector<std::pair<Int, std::string>> parts;
  for (const auto& [k, c] : sorted) {
    std::string vars;
    auto append = [&vars](const std::string& piece) {
      if (piece.empty()) return;
      if (!vars.empty()) vars += "*";
      vars += piece;
    };
    append(power("q", k[0]));
    for (std::size_t i = 1; i < k.size(); ++i)
      append(power("v" + std::to_string(i), k[i]));
    parts.emplace_back(c, vars);
  }
  return render_terms(parts);
}

BiPoly x_minus_one() { return BiPoly::x() - BiPoly(1); }
BiPoly y_minus_one() { return BiPoly::y() - BiPoly(1); }

UniPoly specialize_bi_to_uni(const BiPoly& tutte, std::size_t list_rank,
                             std::size_t group_rank) {
  UniPoly one_minus_t = UniPoly(1) - UniPoly::variable();
  UniPoly value = tutte.substitute(one_minus_t, UniPoly());
  Int sign = (list_rank % 2 == 0) ? 1 : -1;
  return UniPoly::monomial(sign, static_cast<long>(group_rank - list_rank)) *
         value;
}

UniPoly eval_rational(const UniPoly& p, const UniPoly& numerator,
                      unsigned long denom_power, const UniPoly& prefactor) {
  // prefactor * sum_k c_k num^k / t^(e*k); multiply through by t^(e*D),
  // D = deg p, then divide back out, failing if any exponent dips below.
  const long dmax = p.degree().value_or(0);
  UniPoly total;
  for (const auto& [e, c] : p.terms())
    total += UniPoly::monomial(c, static_cast<long>(denom_power) * (dmax - e)) *
             numerator.pow(e);
  total = total * prefactor;
  const long shift = static_cast<long>(denom_power) * dmax;
  UniPoly out;
  for (const auto& [e, c] : total.terms()) {
    if (e < shift)
      throw NonPolynomialResult("substitution leaves a denominator of t^" +
                                std::to_string(shift - e));
    out += UniPoly::monomial(c, e - shift);
  }
  return out;
}

}  // namespace gtutte
