#include "gtutte/root_system.hpp"

#include <algorithm>
#include <map>

#include "gtutte/errors.hpp"

namespace gtutte {

namespace {

// C[i][j] = <alpha_j, alpha_i^vee> = 2 (alpha_i, alpha_j) / (alpha_i, alpha_i)
// ... orientation fixed so that pairing of a root beta = sum k_j alpha_j with
// alpha_i^vee is sum_j C[i][j] k_j.
std::vector<std::vector<long>> cartan_entries(RootSystemType type,
                                              std::size_t rank) {
  std::vector<std::vector<long>> c(rank, std::vector<long>(rank, 0));
  for (std::size_t i = 0; i < rank; ++i) c[i][i] = 2;
  auto bond = [&c](std::size_t i, std::size_t j) {
    c[i][j] = -1;
    c[j][i] = -1;
  };
  switch (type) {
    case RootSystemType::A:
      for (std::size_t i = 0; i + 1 < rank; ++i) bond(i, i + 1);
      break;
    case RootSystemType::B:
      // alpha_rank is short: <alpha_{l-1}, alpha_l^vee> = -2
      for (std::size_t i = 0; i + 1 < rank; ++i) bond(i, i + 1);
      c[rank - 1][rank - 2] = -2;
      break;
    case RootSystemType::C:
      // alpha_rank is long: <alpha_l, alpha_{l-1}^vee> = -2
      for (std::size_t i = 0; i + 1 < rank; ++i) bond(i, i + 1);
      c[rank - 2][rank - 1] = -2;
      break;
    case RootSystemType::D:
      for (std::size_t i = 0; i + 2 < rank; ++i) bond(i, i + 1);
      bond(rank - 3, rank - 1);
      break;
    case RootSystemType::E6:
    case RootSystemType::E7:
    case RootSystemType::E8:
      // Bourbaki: chain 1-3-4-5-6(-7-8), node 2 attached to 4
      bond(0, 2);
      bond(2, 3);
      bond(3, 4);
      bond(4, 5);
      if (rank >= 7) bond(5, 6);
      if (rank >= 8) bond(6, 7);
      bond(1, 3);
      break;
    case RootSystemType::F4:
      bond(0, 1);
      bond(1, 2);
      bond(2, 3);
      c[2][1] = -2;  // <alpha_2, alpha_3^vee> = -2 (alpha_3, alpha_4 short)
      break;
    case RootSystemType::G2:
      bond(0, 1);
      c[0][1] = -3;  // alpha_1 short; highest root 3 alpha_1 + 2 alpha_2
      break;
  }
  return c;
}

// All positive roots in simple-root coordinates, generated by walking the
// root strings upward from the simple roots, level by level.
std::vector<std::vector<long>> generate_roots(
    const std::vector<std::vector<long>>& cartan) {
  const std::size_t rank = cartan.size();
  std::map<std::vector<long>, bool> known;
  std::vector<std::vector<long>> frontier;
  for (std::size_t i = 0; i < rank; ++i) {
    std::vector<long> simple(rank, 0);
    simple[i] = 1;
    known[simple] = true;
    frontier.push_back(std::move(simple));
  }
  while (!frontier.empty()) {
    std::vector<std::vector<long>> next;
    for (const auto& beta : frontier) {
      for (std::size_t i = 0; i < rank; ++i) {
        long pairing = 0;
        for (std::size_t j = 0; j < rank; ++j)
          pairing += cartan[i][j] * beta[j];
        // p = depth of the alpha_i-string below beta; the string is
        // unbroken, so walk down while still inside the known roots
        long p = 0;
        std::vector<long> down = beta;
        for (;;) {
          down[i] -= 1;
          if (!known.count(down)) break;
          ++p;
        }
        if (p - pairing <= 0) continue;  // q = p - <beta, alpha_i^vee>
        std::vector<long> up = beta;
        up[i] += 1;
        if (!known.count(up)) {
          known[up] = true;
          next.push_back(up);
        }
      }
    }
    frontier = std::move(next);
  }
  std::vector<std::vector<long>> roots;
  for (const auto& [v, _] : known) roots.push_back(v);
  // sort by height, then lexicographically, for a stable listing
  std::sort(roots.begin(), roots.end(),
            [](const std::vector<long>& a, const std::vector<long>& b) {
              long ha = 0, hb = 0;
              for (long k : a) ha += k;
              for (long k : b) hb += k;
              if (ha != hb) return ha < hb;
              return a < b;
            });
  return roots;
}

Int factorial(std::size_t n) {
  Int f = 1;
  for (std::size_t i = 2; i <= n; ++i) f *= static_cast<unsigned long>(i);
  return f;
}

Int pow2(std::size_t n) {
  Int p;
  mpz_ui_pow_ui(p.get_mpz_t(), 2, n);
  return p;
}

}  // namespace

RootSystemType root_system_type_from_string(const std::string& name) {
  if (name == "A") return RootSystemType::A;
  if (name == "B") return RootSystemType::B;
  if (name == "C") return RootSystemType::C;
  if (name == "D") return RootSystemType::D;
  if (name == "E6") return RootSystemType::E6;
  if (name == "E7") return RootSystemType::E7;
  if (name == "E8") return RootSystemType::E8;
  if (name == "F4") return RootSystemType::F4;
  if (name == "G2") return RootSystemType::G2;
  throw UnsupportedType("unknown root system type: " + name);
}

std::string root_system_type_name(RootSystemType type) {
  switch (type) {
    case RootSystemType::A: return "A";
    case RootSystemType::B: return "B";
    case RootSystemType::C: return "C";
    case RootSystemType::D: return "D";
    case RootSystemType::E6: return "E6";
    case RootSystemType::E7: return "E7";
    case RootSystemType::E8: return "E8";
    case RootSystemType::F4: return "F4";
    case RootSystemType::G2: return "G2";
  }
  return "?";
}

IntMatrix RootSystemData::cartan_matrix() const {
  auto c = cartan_entries(type, rank);
  IntMatrix m(rank, rank);
  for (std::size_t i = 0; i < rank; ++i)
    for (std::size_t j = 0; j < rank; ++j) m.at(i, j) = c[i][j];
  return m;
}

RootSystemData positive_roots(RootSystemType type, std::size_t rank) {
  Int weyl;
  long h;
  Int f;
  Int rho;
  switch (type) {
    case RootSystemType::A:
      if (rank < 1 || rank > 8)
        throw UnsupportedType("A_l supported for 1 <= l <= 8");
      weyl = factorial(rank + 1);
      h = static_cast<long>(rank) + 1;
      f = static_cast<long>(rank) + 1;
      rho = 1;
      break;
    case RootSystemType::B:
    case RootSystemType::C:
      if (rank < 2 || rank > 6)
        throw UnsupportedType("B_l/C_l supported for 2 <= l <= 6");
      weyl = pow2(rank) * factorial(rank);
      h = 2 * static_cast<long>(rank);
      f = 2;
      rho = 2;
      break;
    case RootSystemType::D:
      if (rank < 3 || rank > 6)
        throw UnsupportedType("D_l supported for 3 <= l <= 6");
      weyl = pow2(rank - 1) * factorial(rank);
      h = 2 * static_cast<long>(rank) - 2;
      f = 4;
      rho = 2;
      break;
    case RootSystemType::E6:
      rank = 6;
      weyl = 51840;
      h = 12;
      f = 3;
      rho = 6;
      break;
    case RootSystemType::E7:
      rank = 7;
      weyl = 2903040;
      h = 18;
      f = 2;
      rho = 12;
      break;
    case RootSystemType::E8:
      rank = 8;
      weyl = 696729600;
      h = 30;
      f = 1;
      rho = 60;
      break;
    case RootSystemType::F4:
      rank = 4;
      weyl = 1152;
      h = 12;
      f = 1;
      rho = 12;
      break;
    case RootSystemType::G2:
      rank = 2;
      weyl = 12;
      h = 6;
      f = 1;
      rho = 6;
      break;
  }
  auto roots = generate_roots(cartan_entries(type, rank));
  IntMatrix lifts(rank, roots.size());
  std::vector<std::string> labels;
  for (std::size_t j = 0; j < roots.size(); ++j) {
    for (std::size_t i = 0; i < rank; ++i) lifts.at(i, j) = roots[j][i];
    labels.push_back("r" + std::to_string(j + 1));
  }
  ElementList list(FgGroup::free_abelian(rank), std::move(lifts),
                   std::move(labels));
  return RootSystemData{type,         rank, std::move(list), weyl, h,
                        std::move(f), std::move(rho)};
}

}  // namespace gtutte
