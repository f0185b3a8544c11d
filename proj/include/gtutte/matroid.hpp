#pragma once

#include <optional>
#include <string>
#include <vector>

#include "gtutte/engine.hpp"
#include "gtutte/group.hpp"
#include "gtutte/target_group.hpp"

namespace gtutte {

enum class Axiom { A1, A2, A3, A4, A5, P };

std::string axiom_name(Axiom a);

/// Result of sweeping one arithmetic-matroid axiom over all qualifying
/// sublist configurations. A witness is present exactly when the axiom
/// fails; it names the first failing configuration in lexicographic
/// sweep order, with the multiplicity values involved.
struct AxiomReport {
  Axiom axiom;
  bool holds = true;

  struct Witness {
    std::vector<std::size_t> s;
    std::vector<std::size_t> t;
    std::optional<std::size_t> alpha;
    std::vector<Int> values;
    std::string str() const;
  };
  std::optional<Witness> witness;
};

AxiomReport check_axiom(Axiom axiom, const ElementList& list,
                        const TargetGroup& g, const EngineOptions& opts = {});

AxiomReport check_axiom1(const ElementList&, const TargetGroup&,
                         const EngineOptions& = {});
AxiomReport check_axiom2(const ElementList&, const TargetGroup&,
                         const EngineOptions& = {});
AxiomReport check_axiom3(const ElementList&, const TargetGroup&,
                         const EngineOptions& = {});
AxiomReport check_axiom4(const ElementList&, const TargetGroup&,
                         const EngineOptions& = {});
AxiomReport check_axiom5(const ElementList&, const TargetGroup&,
                         const EngineOptions& = {});
AxiomReport check_axiom_p(const ElementList&, const TargetGroup&,
                          const EngineOptions& = {});

/// T_A^{G1 x G2}(x,y) == sum_B T_B^{G1}(0,y) * T_{A/B}^{G2}(x,0).
bool convolution_check(const ElementList& list, const TargetGroup& g1,
                       const TargetGroup& g2, const EngineOptions& opts = {});

/// T_{A^dagger}(x,y) == T_A(y,x) and m^dagger(S) == m(S^c) pointwise.
bool duality_check(const ElementList& list, const TargetGroup& g,
                   const EngineOptions& opts = {});

}  // namespace gtutte
