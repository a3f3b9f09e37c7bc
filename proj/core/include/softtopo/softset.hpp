#ifndef SOFTTOPO_SOFTSET_HPP
#define SOFTTOPO_SOFTSET_HPP

#include <compare>
#include <cstdint>
#include <memory>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace softtopo {

/// Ordered list of distinct element names; the position of a name is
/// its canonical id. At most 64 elements so a per-parameter subset fits
/// in one machine word.
class Universe {
public:
    explicit Universe(std::vector<std::string> elements);

    std::size_t size() const { return names_.size(); }
    const std::vector<std::string>& names() const { return names_; }
    const std::string& name(std::size_t i) const { return names_[i]; }
    /// Throws on unknown names, quoting the offending token.
    std::size_t index(std::string_view name) const;

    friend bool operator==(const Universe&, const Universe&) = default;

private:
    std::vector<std::string> names_;
};

/// Ordered list of distinct parameter names.
class ParameterSet {
public:
    explicit ParameterSet(std::vector<std::string> params);

    std::size_t size() const { return names_.size(); }
    const std::vector<std::string>& names() const { return names_; }
    const std::string& name(std::size_t i) const { return names_[i]; }
    std::size_t index(std::string_view name) const;

    friend bool operator==(const ParameterSet&, const ParameterSet&) = default;

private:
    std::vector<std::string> names_;
};

using UniversePtr = std::shared_ptr<const Universe>;
using ParameterSetPtr = std::shared_ptr<const ParameterSet>;

/// A (parameter, element) pair by canonical index. Two points are
/// distinct iff the parameters differ or the elements differ. Canonical
/// order is parameter-major, element-minor.
struct SoftPoint {
    std::uint32_t param = 0;
    std::uint32_t elem = 0;

    friend auto operator<=>(const SoftPoint&, const SoftPoint&) = default;
};

/// A soft set over a universe X and parameter set S: one subset of X
/// per parameter, stored as a bit mask. Parameters without an entry map
/// to the empty subset, so the mapping is total on S and the support is
/// implicit. Immutable after construction.
class SoftSet {
public:
    /// The empty soft set (every parameter maps to the empty subset).
    SoftSet(UniversePtr universe, ParameterSetPtr params);

    /// Every parameter maps to the whole universe.
    static SoftSet absolute(UniversePtr universe, ParameterSetPtr params);

    /// Builds from (parameter, elements) entries; unnamed parameters
    /// map to the empty subset. Throws on unknown names.
    static SoftSet from_entries(
        UniversePtr universe, ParameterSetPtr params,
        const std::vector<std::pair<std::string, std::vector<std::string>>>& entries);

    /// The soft union of singleton soft sets, one per point.
    static SoftSet from_points(UniversePtr universe, ParameterSetPtr params,
                               const std::vector<SoftPoint>& points);

    const UniversePtr& universe() const { return universe_; }
    const ParameterSetPtr& params() const { return params_; }

    std::uint64_t mask(std::size_t param_index) const { return masks_[param_index]; }

    bool contains(SoftPoint p) const {
        return p.param < masks_.size() && (masks_[p.param] >> p.elem) & 1u;
    }
    /// Name-based membership; throws on unknown names.
    bool contains(std::string_view elem, std::string_view param) const;

    /// Resolves names to a point; throws on unknown names.
    SoftPoint point(std::string_view elem, std::string_view param) const;

    /// All points in canonical order (parameter-major).
    std::vector<SoftPoint> points() const;
    std::size_t point_count() const;
    bool is_empty() const;

    bool is_subset_of(const SoftSet& o) const;

    SoftSet operator|(const SoftSet& o) const;
    SoftSet operator&(const SoftSet& o) const;
    SoftSet operator-(const SoftSet& o) const;
    /// Complement relative to the whole universe, per parameter.
    SoftSet operator~() const;

    /// Equal iff same universe, same parameters, identical masks.
    friend bool operator==(const SoftSet& a, const SoftSet& b);

    std::string point_name(SoftPoint p) const;
    /// Bracketed canonical point list, e.g. "[x1@s1 x3@s2]".
    std::string to_string() const;

private:
    UniversePtr universe_;
    ParameterSetPtr params_;
    std::vector<std::uint64_t> masks_;

    friend class PointGraph;
    void require_same_context(const SoftSet& o, const char* op) const;
};

/// Checks that two soft sets live over equal universe and parameter
/// set (structural equality, so independently built contexts compare
/// fine).
bool same_context(const SoftSet& a, const SoftSet& b);

/// The canonical enumeration of the points of an ambient soft set,
/// giving the lattice isomorphism between soft subsets of the ambient
/// and bit masks over its points: encode maps soft union, intersection
/// and difference to bitwise or, and, and-not. Supports ambients with
/// at most 64 points.
class PointGraph {
public:
    explicit PointGraph(SoftSet ambient);

    const SoftSet& ambient() const { return ambient_; }
    std::size_t size() const { return points_.size(); }
    SoftPoint point(std::size_t i) const { return points_[i]; }
    const std::vector<SoftPoint>& points() const { return points_; }

    /// Index of a point in the canonical order; throws if the point is
    /// not in the ambient set.
    std::size_t index_of(SoftPoint p) const;

    std::uint64_t full_mask() const {
        return points_.empty() ? 0 : ~std::uint64_t{0} >> (64 - points_.size());
    }

    /// Throws unless a is a soft subset of the ambient set.
    std::uint64_t encode(const SoftSet& a) const;
    SoftSet decode(std::uint64_t mask) const;

private:
    SoftSet ambient_;
    std::vector<SoftPoint> points_;
};

}  // namespace softtopo

#endif
