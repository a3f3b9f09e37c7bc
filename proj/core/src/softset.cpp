#include "softtopo/softset.hpp"

#include <algorithm>
#include <bit>
#include <unordered_set>

#include "softtopo/error.hpp"

namespace softtopo {

namespace {

void check_names(const std::vector<std::string>& names, const char* what, std::size_t cap) {
    if (names.empty()) throw Error(std::string(what) + ": must be nonempty");
    if (names.size() > cap)
        throw Error(std::string(what) + ": at most " + std::to_string(cap) + " names supported");
    std::unordered_set<std::string_view> seen;
    for (const auto& n : names) {
        if (n.empty()) throw Error(std::string(what) + ": empty name");
        if (!seen.insert(n).second)
            throw Error(std::string(what) + ": duplicate name \"" + n + "\"");
    }
}

std::size_t find_name(const std::vector<std::string>& names, std::string_view name,
                      const char* what) {
    for (std::size_t i = 0; i < names.size(); ++i)
        if (names[i] == name) return i;
    throw Error(std::string("unknown ") + what + " \"" + std::string(name) + "\"");
}

}  // namespace

Universe::Universe(std::vector<std::string> elements) : names_(std::move(elements)) {
    check_names(names_, "universe", 64);
}

std::size_t Universe::index(std::string_view name) const {
    return find_name(names_, name, "element");
}

ParameterSet::ParameterSet(std::vector<std::string> params) : names_(std::move(params)) {
    check_names(names_, "parameter set", 4096);
}

std::size_t ParameterSet::index(std::string_view name) const {
    return find_name(names_, name, "parameter");
}

SoftSet::SoftSet(UniversePtr universe, ParameterSetPtr params)
    : universe_(std::move(universe)), params_(std::move(params)) {
    if (!universe_ || !params_) throw Error("soft set: null universe or parameter set");
    masks_.assign(params_->size(), 0);
}

SoftSet SoftSet::absolute(UniversePtr universe, ParameterSetPtr params) {
    SoftSet s(std::move(universe), std::move(params));
    const std::uint64_t full = s.universe_->size() == 64
                                   ? ~std::uint64_t{0}
                                   : (std::uint64_t{1} << s.universe_->size()) - 1;
    std::fill(s.masks_.begin(), s.masks_.end(), full);
    return s;
}

SoftSet SoftSet::from_entries(
    UniversePtr universe, ParameterSetPtr params,
    const std::vector<std::pair<std::string, std::vector<std::string>>>& entries) {
    SoftSet s(std::move(universe), std::move(params));
    for (const auto& [param, elems] : entries) {
        const std::size_t pi = s.params_->index(param);
        for (const auto& e : elems) s.masks_[pi] |= std::uint64_t{1} << s.universe_->index(e);
    }
    return s;
}

SoftSet SoftSet::from_points(UniversePtr universe, ParameterSetPtr params,
                             const std::vector<SoftPoint>& points) {
    SoftSet s(std::move(universe), std::move(params));
    for (SoftPoint p : points) {
        if (p.param >= s.params_->size() || p.elem >= s.universe_->size())
            throw Error("soft set: point index out of range");
        s.masks_[p.param] |= std::uint64_t{1} << p.elem;
    }
    return s;
}

bool SoftSet::contains(std::string_view elem, std::string_view param) const {
    return contains(point(elem, param));
}

SoftPoint SoftSet::point(std::string_view elem, std::string_view param) const {
    return SoftPoint{static_cast<std::uint32_t>(params_->index(param)),
                     static_cast<std::uint32_t>(universe_->index(elem))};
}

std::vector<SoftPoint> SoftSet::points() const {
    std::vector<SoftPoint> out;
    for (std::size_t pi = 0; pi < masks_.size(); ++pi) {
        std::uint64_t m = masks_[pi];
        while (m) {
            const int e = std::countr_zero(m);
            out.push_back(SoftPoint{static_cast<std::uint32_t>(pi),
                                    static_cast<std::uint32_t>(e)});
            m &= m - 1;
        }
    }
    return out;
}

std::size_t SoftSet::point_count() const {
    std::size_t n = 0;
    for (std::uint64_t m : masks_) n += static_cast<std::size_t>(std::popcount(m));
    return n;
}

bool SoftSet::is_empty() const {
    return std::all_of(masks_.begin(), masks_.end(), [](std::uint64_t m) { return m == 0; });
}

void SoftSet::require_same_context(const SoftSet& o, const char* op) const {
    if (!same_context(*this, o))
        throw Error(std::string(op) + ": soft sets over different universe or parameter set");
}

bool SoftSet::is_subset_of(const SoftSet& o) const {
    require_same_context(o, "subset");
    for (std::size_t i = 0; i < masks_.size(); ++i)
        if (masks_[i] & ~o.masks_[i]) return false;
    return true;
}

SoftSet SoftSet::operator|(const SoftSet& o) const {
    require_same_context(o, "union");
    SoftSet out = *this;
    for (std::size_t i = 0; i < masks_.size(); ++i) out.masks_[i] |= o.masks_[i];
    return out;
}

SoftSet SoftSet::operator&(const SoftSet& o) const {
    require_same_context(o, "intersection");
    SoftSet out = *this;
    for (std::size_t i = 0; i < masks_.size(); ++i) out.masks_[i] &= o.masks_[i];
    return out;
}

SoftSet SoftSet::operator-(const SoftSet& o) const {
    require_same_context(o, "difference");
    SoftSet out = *this;
    for (std::size_t i = 0; i < masks_.size(); ++i) out.masks_[i] &= ~o.masks_[i];
    return out;
}

SoftSet SoftSet::operator~() const {
    SoftSet out = *this;
    const std::uint64_t full = universe_->size() == 64
                                   ? ~std::uint64_t{0}
                                   : (std::uint64_t{1} << universe_->size()) - 1;
    for (auto& m : out.masks_) m = full & ~m;
    return out;
}

bool operator==(const SoftSet& a, const SoftSet& b) {
    return same_context(a, b) && a.masks_ == b.masks_;
}

std::string SoftSet::point_name(SoftPoint p) const {
    return universe_->name(p.elem) + "@" + params_->name(p.param);
}

std::string SoftSet::to_string() const {
    std::string out = "[";
    bool first = true;
    for (SoftPoint p : points()) {
        if (!first) out += ' ';
        out += point_name(p);
        first = false;
    }
    out += ']';
    return out;
}

bool same_context(const SoftSet& a, const SoftSet& b) {
    if (a.universe().get() != b.universe().get() && !(*a.universe() == *b.universe()))
        return false;
    return a.params().get() == b.params().get() || *a.params() == *b.params();
}

PointGraph::PointGraph(SoftSet ambient) : ambient_(std::move(ambient)) {
    points_ = ambient_.points();
    if (points_.size() > 64)
        throw Error("point graph: ambient soft set has " + std::to_string(points_.size()) +
                    " points, at most 64 supported");
}

std::size_t PointGraph::index_of(SoftPoint p) const {
    const auto it = std::lower_bound(points_.begin(), points_.end(), p);
    if (it == points_.end() || *it != p)
        throw Error("point graph: point " + ambient_.point_name(p) + " not in the ambient set");
    return static_cast<std::size_t>(it - points_.begin());
}

std::uint64_t PointGraph::encode(const SoftSet& a) const {
    if (!a.is_subset_of(ambient_))
        throw Error("point graph: " + a.to_string() + " is not a soft subset of the ambient set");
    std::uint64_t mask = 0;
    for (std::size_t i = 0; i < points_.size(); ++i)
        if (a.contains(points_[i])) mask |= std::uint64_t{1} << i;
    return mask;
}

SoftSet PointGraph::decode(std::uint64_t mask) const {
    if (points_.size() < 64 && (mask >> points_.size()) != 0)
        throw Error("point graph: mask has bits beyond the ambient point count");
    std::vector<SoftPoint> pts;
    for (std::size_t i = 0; i < points_.size(); ++i)
        if ((mask >> i) & 1u) pts.push_back(points_[i]);
    return SoftSet::from_points(ambient_.universe(), ambient_.params(), pts);
}

}  // namespace softtopo
