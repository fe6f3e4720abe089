#pragma once

#include <optional>
#include <vector>

#include "plg/certificate.hpp"
#include "plg/interval_set.hpp"
#include "plg/pl1d.hpp"
#include "plg/word.hpp"

namespace plg {

/// Common fixed set of a pair and the open components of its complement.
struct PairAnalysis {
  IntervalSet common_fixed;
  std::vector<OpenInterval> components;
};

PairAnalysis analyze_pair(const PLMap1D& f, const PLMap1D& g);

/// Largest r with [f,g] the identity on [x-r, x+r] clipped to [0,1]. When the
/// commutator is the identity on all of [0,1] the result is max(x, 1-x).
/// Requires x fixed by both maps; throws InternalInconsistency if r would be 0.
Rational germ_trivial_radius(const PLMap1D& f, const PLMap1D& g, const Rational& x);

/// Shortest word h (in enumeration order) of length <= depth with
/// h(a) > b, or nullopt. Requires a < b inside one complementary component.
std::optional<Word> find_displacement(const PLMap1D& f, const PLMap1D& g, const Rational& a,
                                      const Rational& b, int depth);

/// k words with nontrivial, pairwise commuting, interior-disjoint evaluations,
/// built as conjugates of one base word. Inconclusive when the pair commutes
/// or the budget runs out.
Certificate zk_witnesses(const PLMap1D& f, const PLMap1D& g, int k, int depth);

/// AbelianCert, ZkWitnessCert (k = 3) or Inconclusive.
Certificate classify_pair(const PLMap1D& f, const PLMap1D& g, int depth);

/// Replays a serialized AbelianCert / ZkWitnessCert / RelationCert for (f, g).
VerifyReport verify_pl_certificate(const nlohmann::json& cert, const PLMap1D& f,
                                   const PLMap1D& g);

}  // namespace plg
