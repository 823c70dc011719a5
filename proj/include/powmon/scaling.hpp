#ifndef POWMON_SCALING_HPP
#define POWMON_SCALING_HPP

#include <functional>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "powmon/numsgp.hpp"
#include "powmon/qset.hpp"
#include "powmon/rat.hpp"

namespace powmon {

/// The homomorphism x -> q*x between two f.g. Puiseux monoids, together
/// with its lift X -> {q*x : x in X} on finite subsets containing 0.
/// Construction checks that every source atom lands in the target, which
/// makes the map well-defined on all of the source.
class ScalingHom {
 public:
  ScalingHom(Rat ratio, PuiseuxFG source, PuiseuxFG target);

  const Rat& ratio() const { return ratio_; }
  const PuiseuxFG& source() const { return source_; }
  const PuiseuxFG& target() const { return target_; }

  /// Direct image {q*x : x in X}. Rejects X not contained in the source.
  /// Preserves 0 and cardinality.
  QSet apply(const QSet& x) const;

 private:
  Rat ratio_;
  PuiseuxFG source_;
  PuiseuxFG target_;
};

/// Checks apply(X + Y) = apply(X) + apply(Y) over the given sample pairs.
bool lift_is_homomorphism(const ScalingHom& f,
                          const std::vector<std::pair<QSet, QSet>>& samples);

/// Outcome of probing a black-box map on two-element sets {0, a}.
struct RecoveryResult {
  std::optional<Rat> ratio;
  std::string failure;  // empty on success

  bool ok() const { return ratio.has_value(); }
};

/// Reads the scaling ratio back out of a set-level map: each probe a must
/// satisfy phi({0, a}) = {0, b} with b/a constant across probes, and the
/// induced element map must be additive (phi({0, a1+a2}) = {0, b1+b2}).
/// Any violation is reported with the offending probe.
RecoveryResult recover_scaling(const std::function<QSet(const QSet&)>& phi,
                               const std::vector<Rat>& probe_atoms);

/// Positive q with q*S1 = S2, or nullopt. A scaling is strictly monotone,
/// so the only candidate is min(atoms S2) / min(atoms S1); it is verified
/// by mapping the atoms of each side into the other.
std::optional<Rat> find_scaling_iso(const PuiseuxFG& s1, const PuiseuxFG& s2);

struct MonoidComparison {
  bool isomorphic = false;
  bool equal = false;
};

/// For numerical monoids the two notions coincide; both are computed
/// independently (scaling search vs. membership equality).
MonoidComparison compare_numerical(const NumericalMonoid& s1,
                                   const NumericalMonoid& s2);

}  // namespace powmon

#endif
