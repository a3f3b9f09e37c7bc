#ifndef SOFTTOPO_IDEAL_HPP
#define SOFTTOPO_IDEAL_HPP

#include <vector>

#include "softtopo/natset.hpp"

namespace softtopo {

/// A finitely generated admissible ideal on the naturals: given
/// generators G1..Gk (eventually periodic sets), the members are
/// exactly the sets A with A \ (G1 u ... u Gk) finite. With no
/// generators this is the ideal of finite sets.
///
/// Construction rejects trivial families: the complement of the
/// generator union must be infinite, so the full set of naturals is
/// never a member. Every finite set is a member, so the ideal is
/// always admissible.
class Ideal {
public:
    /// The ideal of finite sets (no generators).
    static Ideal finite_sets() { return Ideal(std::vector<EpSet>{}); }

    /// Throws if the generator union is cofinite (the ideal would
    /// contain every set).
    explicit Ideal(std::vector<EpSet> generators);

    bool contains(const EpSet& a) const { return (a - union_).is_finite(); }

    /// Membership of a in the dual filter: the complement of a belongs
    /// to the ideal.
    bool in_dual_filter(const EpSet& a) const { return contains(~a); }

    /// Every ideal of this finitely generated class admits the
    /// finite-correction property for disjoint families; ap_witness
    /// constructs the corrections, making this predicate constant.
    bool satisfies_ap() const { return true; }

    /// Given pairwise disjoint members H1..Hk, returns K1..Kk with
    /// Kj = Hj intersected with the generator union. Verifies the
    /// postconditions: every Hj ^ Kj is finite and the union of the Kj
    /// is a member. Throws if some Hj is not a member or two overlap.
    std::vector<EpSet> ap_witness(const std::vector<EpSet>& disjoint_members) const;

    const std::vector<EpSet>& generators() const { return generators_; }
    const EpSet& generator_union() const { return union_; }

    /// Two ideals are equal iff they have the same members, i.e. the
    /// generator unions differ by a finite set.
    friend bool operator==(const Ideal& a, const Ideal& b) {
        return (a.union_ ^ b.union_).is_finite();
    }

private:
    std::vector<EpSet> generators_;
    EpSet union_;
};

}  // namespace softtopo

#endif
