/* Apache License, Version 2.0 */
#ifndef RTOPO_GENERALIZE_HPP
#define RTOPO_GENERALIZE_HPP

#include "rtopo/region.hpp"

namespace rtopo {

struct DropOutcome {
  Region region;
  // Link graph predicted by the node/edge update rule, to be compared with
  // region.link_graph(); the merged component is the last predicted node.
  LinkGraph predicted;
  std::vector<int> merged_faces;  // faces of the merged component
};

// Merges a childless non-root component into its parents. Throws
// Err::RootNotAllowed, Err::HasChildren, Err::RootParentCollapse.
DropOutcome drop_component(const Region& region, int component_id);

// Drops deepest leaves (ties by ascending id) until only level-1
// components remain; the result equals the generalized region.
Region generalize_fully(const Region& region);

// Same order, at most `max_steps` drops; negative means run to the
// fixpoint.
Region generalize_steps(const Region& region, long max_steps);

// Removes every level-1 component whose generalized region has area below
// min_area, together with its descendant subtree. Throws Err::EmptyResult.
Region drop_small(const Region& region, const Rational& min_area);

}  // namespace rtopo

#endif
