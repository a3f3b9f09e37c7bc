#ifndef SOFTTOPO_TOPOLOGY_HPP
#define SOFTTOPO_TOPOLOGY_HPP

#include <cstdint>
#include <vector>

#include "softtopo/softset.hpp"

namespace softtopo {

/// A soft topology on a finite ambient soft set, stored extensionally:
/// the full family of open soft subsets, deduplicated and kept as bit
/// masks over the ambient point graph. Construction verifies the axioms
/// (empty set and space present, family closed under pairwise union and
/// intersection — which suffices for a finite family) and throws with
/// the violated axiom and a witness pair.
///
/// Every "for all neighborhoods of p" predicate is decided on the
/// minimal open neighborhood of p: in a finite topology the
/// intersection of all opens containing p is itself open and is
/// contained in every neighborhood, and the predicates used here are
/// monotone in the neighborhood. The definitional full scans live in
/// the harness as oracles.
class SoftTopology {
public:
    SoftTopology(SoftSet space, const std::vector<SoftSet>& opens);

    const SoftSet& space() const { return space_; }
    const PointGraph& graph() const { return graph_; }
    std::size_t point_count() const { return graph_.size(); }

    /// Open masks in increasing order; always contains 0 and the full
    /// mask.
    const std::vector<std::uint64_t>& open_masks() const { return masks_; }
    const std::vector<SoftSet>& opens() const { return opens_; }

    bool is_open(const SoftSet& a) const;
    bool is_open_mask(std::uint64_t m) const;
    /// Closed iff the complement within the space is open.
    bool is_closed(const SoftSet& a) const;

    /// Smallest closed superset: the intersection of all closed sets
    /// containing a.
    SoftSet closure(const SoftSet& a) const;
    std::uint64_t closure_mask(std::uint64_t m) const;

    /// Whether k contains an open set containing p.
    bool is_neighborhood(const SoftSet& k, SoftPoint p) const;

    /// The intersection of all opens containing p: the smallest
    /// neighborhood, itself open.
    SoftSet min_open_nbhd(SoftPoint p) const;
    std::uint64_t min_nbhd_mask(std::size_t point_index) const { return min_nbhds_[point_index]; }

    /// Relative topology on a soft subset h: { R & h : R open }.
    SoftTopology subspace(const SoftSet& h) const;

    bool is_dense(const SoftSet& h) const;

    /// For each ordered pair of distinct points, some open contains the
    /// first and not the second.
    bool is_t1() const;
    /// Each pair of distinct points has disjoint opens around them.
    bool is_hausdorff() const;

    /// Every neighborhood of p meets k somewhere other than p itself.
    bool is_soft_limit_point_of_set(const SoftSet& k, SoftPoint p) const;

    /// No point of the space is a soft limit point of the space;
    /// equivalently every singleton is open.
    bool has_no_soft_limit_point() const;

    friend bool operator==(const SoftTopology& a, const SoftTopology& b) {
        return a.space_ == b.space_ && a.masks_ == b.masks_;
    }

private:
    SoftSet space_;
    PointGraph graph_;
    std::vector<std::uint64_t> masks_;
    std::vector<SoftSet> opens_;
    std::vector<std::uint64_t> min_nbhds_;

    std::uint64_t subset_mask(const SoftSet& a, const char* op) const;
    std::size_t point_index(SoftPoint p, const char* op) const;
};

/// All soft topologies on the given space, each exactly once, ordered
/// by the bit pattern of the family over the point-graph powerset. The
/// space may have at most max_points points (cost grows doubly
/// exponentially).
std::vector<SoftTopology> enumerate_topologies(const SoftSet& space, std::size_t max_points = 4);

}  // namespace softtopo

#endif
