#include "powmon/scaling.hpp"

#include <stdexcept>

namespace powmon {

ScalingHom::ScalingHom(Rat ratio, PuiseuxFG source, PuiseuxFG target)
    : ratio_(std::move(ratio)),
      source_(std::move(source)),
      target_(std::move(target)) {
  if (ratio_.is_zero())
    throw std::invalid_argument("scaling: ratio must be positive");
  for (const Rat& atom : source_.atoms()) {
    if (!target_.contains(ratio_ * atom))
      throw std::invalid_argument("scaling: image of atom " +
                                  atom.to_string() +
                                  " is outside the target monoid");
  }
}

QSet ScalingHom::apply(const QSet& x) const {
  std::vector<Rat> image;
  image.reserve(x.size());
  for (const Rat& v : x.values()) {
    if (!source_.contains(v))
      throw std::invalid_argument("scaling: element " + v.to_string() +
                                  " is outside the source monoid");
    image.push_back(ratio_ * v);
  }
  return QSet::make(image);
}

bool lift_is_homomorphism(const ScalingHom& f,
                          const std::vector<std::pair<QSet, QSet>>& samples) {
  for (const auto& [x, y] : samples) {
    if (f.apply(sumset(x, y)) != sumset(f.apply(x), f.apply(y))) return false;
  }
  return true;
}

RecoveryResult recover_scaling(const std::function<QSet(const QSet&)>& phi,
                               const std::vector<Rat>& probe_atoms) {
  RecoveryResult res;
  if (probe_atoms.empty()) {
    res.failure = "no probes given";
    return res;
  }
  std::vector<Rat> images;
  Rat ratio;
  for (const Rat& a : probe_atoms) {
    if (a.is_zero()) {
      res.failure = "probe 0 is not a valid probe";
      return res;
    }
    const QSet image = phi(QSet::make({Rat(), a}));
    if (image.size() != 2) {
      res.failure = "probe " + a.to_string() + ": image " + image.to_string() +
                    " is not a 2-element set";
      return res;
    }
    const Rat b = image.max_value();
    const Rat q = b / a;
    if (images.empty()) {
      ratio = q;
    } else if (q != ratio) {
      res.failure = "probe " + a.to_string() + ": ratio " + q.to_string() +
                    " differs from " + ratio.to_string();
      return res;
    }
    images.push_back(b);
  }
  // Additivity of the induced element map on probe sums.
  for (std::size_t i = 0; i < probe_atoms.size(); ++i) {
    for (std::size_t j = i; j < probe_atoms.size(); ++j) {
      const Rat sum = probe_atoms[i] + probe_atoms[j];
      const QSet image = phi(QSet::make({Rat(), sum}));
      const QSet want = QSet::make({Rat(), images[i] + images[j]});
      if (image != want) {
        res.failure = "probes " + probe_atoms[i].to_string() + "," +
                      probe_atoms[j].to_string() + ": image of {0," +
                      sum.to_string() + "} is " + image.to_string() +
                      ", expected " + want.to_string();
        return res;
      }
    }
  }
  res.ratio = ratio;
  return res;
}

std::optional<Rat> find_scaling_iso(const PuiseuxFG& s1, const PuiseuxFG& s2) {
  const Rat q = s2.atoms().front() / s1.atoms().front();
  for (const Rat& atom : s1.atoms())
    if (!s2.contains(q * atom)) return std::nullopt;
  for (const Rat& atom : s2.atoms())
    if (!s1.contains(atom / q)) return std::nullopt;
  return q;
}

MonoidComparison compare_numerical(const NumericalMonoid& s1,
                                   const NumericalMonoid& s2) {
  MonoidComparison out;
  out.equal = s1 == s2;
  std::vector<Rat> g1, g2;
  for (Elem g : s1.generators()) g1.emplace_back(g, 1);
  for (Elem g : s2.generators()) g2.emplace_back(g, 1);
  out.isomorphic = find_scaling_iso(PuiseuxFG::from_generators(std::move(g1)),
                                    PuiseuxFG::from_generators(std::move(g2)))
                       .has_value();
  return out;
}

}  // namespace powmon
