#include "softtopo/topology.hpp"

#include <algorithm>
#include <string>

#include "softtopo/error.hpp"

namespace softtopo {

SoftTopology::SoftTopology(SoftSet space, const std::vector<SoftSet>& opens)
    : space_(std::move(space)), graph_(space_) {
    masks_.reserve(opens.size());
    for (const SoftSet& o : opens) {
        if (!same_context(o, space_))
            throw Error("topology: open " + o.to_string() +
                        " lives over a different universe or parameter set");
        if (!o.is_subset_of(space_))
            throw Error("topology: open " + o.to_string() + " is not a soft subset of the space");
        masks_.push_back(graph_.encode(o));
    }
    std::sort(masks_.begin(), masks_.end());
    masks_.erase(std::unique(masks_.begin(), masks_.end()), masks_.end());

    const std::uint64_t full = graph_.full_mask();
    if (masks_.empty() || masks_.front() != 0)
        throw Error("topology axiom (i) violated: the empty soft set is not in the family");
    if (masks_.back() != full)
        throw Error("topology axiom (ii) violated: the space itself is not in the family");
    for (std::size_t i = 0; i < masks_.size(); ++i) {
        for (std::size_t j = i + 1; j < masks_.size(); ++j) {
            if (!std::binary_search(masks_.begin(), masks_.end(), masks_[i] | masks_[j]))
                throw Error("topology axiom (iii) violated: union of " +
                            graph_.decode(masks_[i]).to_string() + " and " +
                            graph_.decode(masks_[j]).to_string() + " is not open");
            if (!std::binary_search(masks_.begin(), masks_.end(), masks_[i] & masks_[j]))
                throw Error("topology axiom (iv) violated: intersection of " +
                            graph_.decode(masks_[i]).to_string() + " and " +
                            graph_.decode(masks_[j]).to_string() + " is not open");
        }
    }

    opens_.reserve(masks_.size());
    for (std::uint64_t m : masks_) opens_.push_back(graph_.decode(m));

    min_nbhds_.assign(graph_.size(), full);
    for (std::size_t i = 0; i < graph_.size(); ++i)
        for (std::uint64_t m : masks_)
            if ((m >> i) & 1u) min_nbhds_[i] &= m;
}

std::uint64_t SoftTopology::subset_mask(const SoftSet& a, const char* op) const {
    if (!same_context(a, space_) || !a.is_subset_of(space_))
        throw Error(std::string(op) + ": " + a.to_string() +
                    " is not a soft subset of the space");
    return graph_.encode(a);
}

std::size_t SoftTopology::point_index(SoftPoint p, const char* op) const {
    if (!space_.contains(p))
        throw Error(std::string(op) + ": point not in the space");
    return graph_.index_of(p);
}

bool SoftTopology::is_open(const SoftSet& a) const {
    return is_open_mask(subset_mask(a, "is_open"));
}

bool SoftTopology::is_open_mask(std::uint64_t m) const {
    return std::binary_search(masks_.begin(), masks_.end(), m);
}

bool SoftTopology::is_closed(const SoftSet& a) const {
    return is_open_mask(graph_.full_mask() ^ subset_mask(a, "is_closed"));
}

std::uint64_t SoftTopology::closure_mask(std::uint64_t m) const {
    const std::uint64_t full = graph_.full_mask();
    std::uint64_t cl = full;
    for (std::uint64_t open : masks_) {
        const std::uint64_t closed = full ^ open;
        if ((m & ~closed) == 0) cl &= closed;
    }
    return cl;
}

SoftSet SoftTopology::closure(const SoftSet& a) const {
    return graph_.decode(closure_mask(subset_mask(a, "closure")));
}

bool SoftTopology::is_neighborhood(const SoftSet& k, SoftPoint p) const {
    const std::uint64_t km = subset_mask(k, "is_neighborhood");
    const std::size_t i = point_index(p, "is_neighborhood");
    return (min_nbhds_[i] & ~km) == 0;
}

SoftSet SoftTopology::min_open_nbhd(SoftPoint p) const {
    return graph_.decode(min_nbhds_[point_index(p, "min_open_nbhd")]);
}

SoftTopology SoftTopology::subspace(const SoftSet& h) const {
    subset_mask(h, "subspace");
    std::vector<SoftSet> relative;
    relative.reserve(opens_.size());
    for (const SoftSet& o : opens_) relative.push_back(o & h);
    return SoftTopology(h, relative);
}

bool SoftTopology::is_dense(const SoftSet& h) const {
    return closure_mask(subset_mask(h, "is_dense")) == graph_.full_mask();
}

bool SoftTopology::is_t1() const {
    const std::size_t n = graph_.size();
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) {
            if (i == j) continue;
            bool separated = false;
            for (std::uint64_t m : masks_) {
                if (((m >> i) & 1u) && !((m >> j) & 1u)) {
                    separated = true;
                    break;
                }
            }
            if (!separated) return false;
        }
    }
    return true;
}

bool SoftTopology::is_hausdorff() const {
    const std::size_t n = graph_.size();
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = i + 1; j < n; ++j) {
            bool separated = false;
            for (std::uint64_t mi : masks_) {
                if (!((mi >> i) & 1u)) continue;
                for (std::uint64_t mj : masks_) {
                    if (((mj >> j) & 1u) && (mi & mj) == 0) {
                        separated = true;
                        break;
                    }
                }
                if (separated) break;
            }
            if (!separated) return false;
        }
    }
    return true;
}

bool SoftTopology::is_soft_limit_point_of_set(const SoftSet& k, SoftPoint p) const {
    const std::uint64_t km = subset_mask(k, "is_soft_limit_point_of_set");
    const std::size_t i = point_index(p, "is_soft_limit_point_of_set");
    return (min_nbhds_[i] & ~(std::uint64_t{1} << i) & km) != 0;
}

bool SoftTopology::has_no_soft_limit_point() const {
    const std::uint64_t full = graph_.full_mask();
    for (std::size_t i = 0; i < graph_.size(); ++i)
        if ((min_nbhds_[i] & ~(std::uint64_t{1} << i) & full) != 0) return false;
    return true;
}

std::vector<SoftTopology> enumerate_topologies(const SoftSet& space, std::size_t max_points) {
    const PointGraph graph(space);
    const std::size_t n = graph.size();
    if (n > max_points)
        throw Error("enumerate_topologies: space has " + std::to_string(n) +
                    " points, bound is " + std::to_string(max_points));

    const std::uint64_t full = graph.full_mask();
    std::vector<std::uint64_t> intermediates;
    for (std::uint64_t m = 1; m < full; ++m) intermediates.push_back(m);

    std::vector<SoftTopology> out;
    std::vector<std::uint64_t> family;
    const std::uint64_t subsets = std::uint64_t{1} << intermediates.size();
    for (std::uint64_t choice = 0; choice < subsets; ++choice) {
        family.clear();
        family.push_back(0);
        for (std::size_t b = 0; b < intermediates.size(); ++b)
            if ((choice >> b) & 1u) family.push_back(intermediates[b]);
        if (full != 0) family.push_back(full);

        bool closed = true;
        for (std::size_t i = 0; i < family.size() && closed; ++i) {
            for (std::size_t j = i + 1; j < family.size() && closed; ++j) {
                closed = std::binary_search(family.begin(), family.end(), family[i] | family[j]) &&
                         std::binary_search(family.begin(), family.end(), family[i] & family[j]);
            }
        }
        if (!closed) continue;

        std::vector<SoftSet> opens;
        opens.reserve(family.size());
        for (std::uint64_t m : family) opens.push_back(graph.decode(m));
        out.emplace_back(space, opens);
    }
    return out;
}

}  // namespace softtopo
