#include "gtutte/topology.hpp"

#include <algorithm>

#include "gtutte/errors.hpp"

namespace gtutte {

namespace {

void check_cap(std::size_t n, const TopologyOptions& opts, const char* op) {
  if (n > opts.engine.naive_cap)
    throw CapExceeded(std::string(op) + ": list length " + std::to_string(n) +
                      " exceeds enumeration cap " +
                      std::to_string(opts.engine.naive_cap));
}

}  // namespace

const UniPoly& QuasiPolynomial::constituent_for(const Int& q) const {
  Int k = gcd(q, period);
  if (k == 0) k = period;  // q = 0 picks the most degenerate constituent
  return constituents.at(k);
}

Int arrangement_period(const ElementList& list, const TopologyOptions& opts) {
  const std::size_t n = list.size();
  check_cap(n, opts, "arrangement_period");
  Int rho = 1;
  for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << n); ++mask) {
    FgGroup q = quotient(list, mask_indices(mask, n));
    if (!q.torsion_factors().empty())
      rho = lcm(rho, q.torsion_factors().back());
  }
  return rho;
}

Int complement_count_bruteforce(const ElementList& list,
                                const std::vector<std::size_t>& zeros,
                                const TargetGroup& g,
                                const TopologyOptions& opts) {
  if (!g.is_finite())
    throw NonFiniteGroup("brute-force counting needs a finite group");
  const std::size_t m = list.group().ambient_rank();
  const std::size_t s = g.finite_factors.size();
  std::vector<unsigned long> factors(s);
  for (std::size_t j = 0; j < s; ++j)
    factors[j] = g.finite_factors[j].get_ui();

  Int budget = 1;
  for (std::size_t i = 0; i < m; ++i) budget *= g.finite_part_order();
  if (budget > opts.enumeration_budget)
    throw BudgetExceeded("Hom enumeration needs " + budget.get_str() +
                         " candidate tuples");

  // columns to test: relations must map to 0, `zeros` must map to 0,
  // every other list element must not
  struct Constraint {
    std::vector<std::vector<unsigned long>> residues;  // [factor][generator]
    bool must_vanish;
  };
  std::vector<Constraint> constraints;
  auto add_constraint = [&](const std::vector<Int>& col, bool vanish) {
    Constraint c;
    c.must_vanish = vanish;
    c.residues.assign(s, std::vector<unsigned long>(m));
    for (std::size_t j = 0; j < s; ++j)
      for (std::size_t i = 0; i < m; ++i) {
        Int r = col[i] % Int(factors[j]);
        if (r < 0) r += factors[j];
        c.residues[j][i] = r.get_ui();
      }
    constraints.push_back(std::move(c));
  };
  const IntMatrix& rel = list.group().relations();
  for (std::size_t j = 0; j < rel.cols(); ++j)
    add_constraint(rel.column(j), true);
  for (std::size_t i = 0; i < list.size(); ++i)
    add_constraint(list.lift(i),
                   std::find(zeros.begin(), zeros.end(), i) != zeros.end());

  // odometer over phi in G^m, one digit per (generator, factor) pair
  std::vector<unsigned long> digits(m * s, 0);
  Int count = 0;
  for (;;) {
    bool ok = true;
    for (const Constraint& c : constraints) {
      bool vanishes = true;
      for (std::size_t j = 0; j < s && vanishes; ++j) {
        unsigned long acc = 0;
        for (std::size_t i = 0; i < m; ++i)
          acc = (acc + c.residues[j][i] * digits[i * s + j]) % factors[j];
        if (acc != 0) vanishes = false;
      }
      if (vanishes != c.must_vanish) {
        ok = false;
        break;
      }
    }
    if (ok) ++count;
    std::size_t pos = 0;
    while (pos < digits.size()) {
      std::size_t f = factors[pos % s];
      if (++digits[pos] < f) break;
      digits[pos] = 0;
      ++pos;
    }
    if (pos == digits.size()) break;
  }
  return count;
}

Int point_count_bruteforce(const ElementList& list, const TargetGroup& g,
                           const TopologyOptions& opts) {
  return complement_count_bruteforce(list, {}, g, opts);
}

Int point_count_formula(const ElementList& list, const TargetGroup& g,
                        const EngineOptions& opts) {
  if (!g.is_finite())
    throw NonFiniteGroup("point counting needs a finite group");
  return g_characteristic(list, g, opts)(g.order());
}

QuasiPolynomial quasi_polynomial(const ElementList& list,
                                 const TopologyOptions& opts) {
  QuasiPolynomial qp;
  qp.period = arrangement_period(list, opts);
  for (Int k = 1; k <= qp.period; ++k) {
    if (qp.period % k != 0) continue;
    qp.constituents[k] =
        g_characteristic(list, TargetGroup::cyclic(k), opts.engine);
  }
  return qp;
}

std::pair<Int, Int> euler_characteristic(const ElementList& list,
                                         const TargetGroup& g,
                                         const EngineOptions& opts) {
  UniPoly chi = g_characteristic(list, g, opts);
  Int e_semi = chi(g.euler_semialgebraic());
  const std::size_t dim = g.dimension();
  Int arg = g.euler_topological();
  if (dim % 2 == 1) arg = -arg;
  Int e_top = chi(arg);
  if ((dim * list.group().free_rank()) % 2 == 1) e_top = -e_top;
  return {e_semi, e_top};
}

UniPoly poincare_polynomial(const ElementList& list, const TargetGroup& g,
                            const EngineOptions& opts) {
  if (g.real_rank == 0)
    throw CompactGroup("Poincare formula needs a non-compact group");
  UniPoly chi = g_characteristic(list, g, opts);
  UniPoly one_plus_t = UniPoly(1) + UniPoly::variable();
  UniPoly pg = one_plus_t.pow(g.torus_rank) * UniPoly(g.finite_part_order());
  const unsigned long e = g.dimension() - 1;
  const std::size_t r = list.group().free_rank();
  Int sign = (r % 2 == 0) ? 1 : -1;
  UniPoly prefactor = UniPoly::monomial(sign, static_cast<long>(e * r));
  return eval_rational(chi, -pg, e, prefactor);
}

bool partition_check(const ElementList& list, const TargetGroup& g,
                     const TopologyOptions& opts) {
  const std::size_t n = list.size();
  check_cap(n, opts, "partition_check");
  ElementList empty(list.group(), IntMatrix(list.group().ambient_rank(), 0));
  Int total_hom = point_count_bruteforce(empty, g, opts);
  Int sum = 0;
  for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << n); ++mask)
    sum += complement_count_bruteforce(list, mask_indices(mask, n), g, opts);
  return sum == total_hom;
}

bool functional_equation_check(const UniPoly& chi, long coxeter_number,
                               std::size_t rank) {
  UniPoly flipped =
      chi.substitute(UniPoly(coxeter_number) - UniPoly::variable());
  UniPoly rhs = (rank % 2 == 0) ? chi : -chi;
  return flipped == rhs;
}

}  // namespace gtutte
