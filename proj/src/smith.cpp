#include "gtutte/smith.hpp"

#include <algorithm>
#include <cstdlib>
#include <utility>

namespace gtutte {

namespace {

void swap_rows(IntMatrix& m, std::size_t a, std::size_t b) {
  if (a == b) return;
  for (std::size_t j = 0; j < m.cols(); ++j) std::swap(m.at(a, j), m.at(b, j));
}

void swap_cols(IntMatrix& m, std::size_t a, std::size_t b) {
  if (a == b) return;
  for (std::size_t i = 0; i < m.rows(); ++i) std::swap(m.at(i, a), m.at(i, b));
}

// row_a -= q * row_b
void submul_row(IntMatrix& m, std::size_t a, std::size_t b, const Int& q) {
  if (q == 0) return;
  for (std::size_t j = 0; j < m.cols(); ++j) m.at(a, j) -= q * m.at(b, j);
}

void submul_col(IntMatrix& m, std::size_t a, std::size_t b, const Int& q) {
  if (q == 0) return;
  for (std::size_t i = 0; i < m.rows(); ++i) m.at(i, a) -= q * m.at(i, b);
}

// Smallest-absolute-value nonzero entry of the trailing submatrix, or
// nullopt-style {false, ...} when the submatrix is zero.
bool find_min_pivot(const IntMatrix& m, std::size_t t, std::size_t& pi,
                    std::size_t& pj) {
  bool found = false;
  Int best;
  for (std::size_t i = t; i < m.rows(); ++i)
    for (std::size_t j = t; j < m.cols(); ++j) {
      const Int& e = m.at(i, j);
      if (e == 0) continue;
      Int a = abs(e);
      if (!found || a < best) {
        found = true;
        best = a;
        pi = i;
        pj = j;
      }
    }
  return found;
}

}  // namespace

SmithForm smith_normal_form(IntMatrix m) {
  std::vector<Int> diag;
  const std::size_t bound = std::min(m.rows(), m.cols());
  for (std::size_t t = 0; t < bound; ++t) {
    std::size_t pi, pj;
    if (!find_min_pivot(m, t, pi, pj)) break;
    swap_rows(m, t, pi);
    swap_cols(m, t, pj);
    for (;;) {
      bool clean = true;
      for (std::size_t i = t + 1; i < m.rows(); ++i) {
        if (m.at(i, t) == 0) continue;
        Int q = m.at(i, t) / m.at(t, t);
        submul_row(m, i, t, q);
        if (m.at(i, t) != 0) {
          // remainder is strictly smaller; promote it to pivot
          swap_rows(m, t, i);
          clean = false;
        }
      }
      for (std::size_t j = t + 1; j < m.cols(); ++j) {
        if (m.at(t, j) == 0) continue;
        Int q = m.at(t, j) / m.at(t, t);
        submul_col(m, j, t, q);
        if (m.at(t, j) != 0) {
          swap_cols(m, t, j);
          clean = false;
        }
      }
      if (!clean) continue;
      // pivot must divide the rest of the submatrix; if not, fold the
      // offending row in and keep reducing
      bool divides_all = true;
      for (std::size_t i = t + 1; i < m.rows() && divides_all; ++i)
        for (std::size_t j = t + 1; j < m.cols(); ++j)
          if (!mpz_divisible_p(m.at(i, j).get_mpz_t(),
                               m.at(t, t).get_mpz_t())) {
            submul_row(m, t, i, Int(-1));
            divides_all = false;
            break;
          }
      if (divides_all) break;
    }
    diag.push_back(abs(m.at(t, t)));
  }
  // enforce d_i | d_{i+1}
  for (std::size_t i = 0; i < diag.size(); ++i)
    for (std::size_t j = i + 1; j < diag.size(); ++j) {
      Int g = gcd(diag[i], diag[j]);
      if (g == diag[i]) continue;
      diag[j] = diag[i] / g * diag[j];
      diag[i] = g;
    }
  return SmithForm{std::move(diag)};
}

IntMatrix hermite_column_form(IntMatrix m) {
  std::size_t c = 0;  // next pivot column slot
  std::vector<std::pair<std::size_t, std::size_t>> pivots;  // (row, col)
  for (std::size_t row = 0; row < m.rows() && c < m.cols(); ++row) {
    for (;;) {
      // column with minimal nonzero |entry| in this row among slots >= c
      bool found = false;
      Int best;
      std::size_t bj = c;
      for (std::size_t j = c; j < m.cols(); ++j) {
        if (m.at(row, j) == 0) continue;
        Int a = abs(m.at(row, j));
        if (!found || a < best) {
          found = true;
          best = a;
          bj = j;
        }
      }
      if (!found) break;
      swap_cols(m, c, bj);
      bool clean = true;
      for (std::size_t j = c + 1; j < m.cols(); ++j) {
        if (m.at(row, j) == 0) continue;
        Int q = m.at(row, j) / m.at(row, c);
        submul_col(m, j, c, q);
        if (m.at(row, j) != 0) clean = false;
      }
      if (!clean) continue;
      if (m.at(row, c) < 0)
        for (std::size_t i = 0; i < m.rows(); ++i) m.at(i, c) = -m.at(i, c);
      // reduce this row's entries in earlier pivot columns into [0, pivot)
      for (const auto& [prow, pcol] : pivots) {
        (void)prow;
        Int q;
        mpz_fdiv_q(q.get_mpz_t(), m.at(row, pcol).get_mpz_t(),
                   m.at(row, c).get_mpz_t());
        submul_col(m, pcol, c, q);
      }
      pivots.emplace_back(row, c);
      ++c;
      break;
    }
  }
  std::vector<std::size_t> keep(c);
  for (std::size_t j = 0; j < c; ++j) keep[j] = j;
  return m.select_columns(keep);
}

std::vector<Int> reduce_mod_lattice(const IntMatrix& hermite,
                                    std::vector<Int> v) {
  std::size_t row = 0;
  for (std::size_t j = 0; j < hermite.cols(); ++j) {
    while (row < hermite.rows() && hermite.at(row, j) == 0) ++row;
    if (row >= hermite.rows()) break;
    Int q;
    mpz_fdiv_q(q.get_mpz_t(), v[row].get_mpz_t(),
               hermite.at(row, j).get_mpz_t());
    if (q != 0)
      for (std::size_t i = 0; i < hermite.rows(); ++i)
        v[i] -= q * hermite.at(i, j);
    ++row;
  }
  return v;
}

}  // namespace gtutte
