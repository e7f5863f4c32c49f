#pragma once

#include "tfr/fan.hpp"

#include <optional>
#include <string>
#include <vector>

namespace tfr {

// Witness for one shelling step: the facets of the intersection with the
// earlier cones, and how many initial elements of the boundary shelling
// they occupy.
struct ShellingStep {
    std::vector<std::string> intersection_facets;
    std::vector<std::string> boundary_order;
    size_t prefix_len = 0;
};

struct ShellingCertificate {
    std::vector<size_t> order;  // indices of maximal cones of the fan
    std::vector<ShellingStep> steps;
};

enum class ShellingOutcome { shellable, not_shellable, inconclusive };

struct ShellingResult {
    ShellingOutcome outcome = ShellingOutcome::inconclusive;
    std::optional<ShellingCertificate> certificate;
    unsigned long long nodes = 0;  // search nodes spent
};

// Checks the given facet order: each cone must meet the union of its
// predecessors in a nonempty pure codimension-1 subfan that starts some
// shelling of the cone's boundary fan (the first cone's boundary must be
// shellable outright). Budget bounds the recursive boundary searches.
// Throws NotMaximalPermutation if the order is not a permutation of the
// maximal cones.
ShellingResult verify_shelling(const Fan& f, const std::vector<size_t>& order,
                               unsigned long long budget = 1u << 22);

// Backtracking search over facet orders, deterministic index-lexicographic
// exploration, memoized boundary shellings. not_shellable only after an
// exhaustive search; a blown budget reports inconclusive.
ShellingResult find_shelling(const Fan& f, unsigned long long budget = 1u << 22);

// Stable reordering of a valid shelling by weakly decreasing dimension,
// re-verified. A valid shelling always admits such a reordering, so a
// failure is reported as RearrangementFailed.
ShellingCertificate rearrange_decreasing(const Fan& f, const ShellingCertificate& cert,
                                         unsigned long long budget = 1u << 22);

}  // namespace tfr
