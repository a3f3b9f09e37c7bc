#include "softtopo/ideal.hpp"

#include <string>

#include "softtopo/error.hpp"

namespace softtopo {

Ideal::Ideal(std::vector<EpSet> generators) : generators_(std::move(generators)) {
    for (const EpSet& g : generators_) union_ = union_ | g;
    if ((~union_).is_finite())
        throw Error("ideal: generator union is cofinite, the ideal would be trivial");
}

std::vector<EpSet> Ideal::ap_witness(const std::vector<EpSet>& disjoint_members) const {
    for (std::size_t i = 0; i < disjoint_members.size(); ++i) {
        if (!contains(disjoint_members[i]))
            throw Error("ap_witness: family member " + std::to_string(i) +
                        " is not in the ideal");
        for (std::size_t j = i + 1; j < disjoint_members.size(); ++j) {
            if (disjoint_members[i].intersects(disjoint_members[j]))
                throw Error("ap_witness: family members " + std::to_string(i) + " and " +
                            std::to_string(j) + " are not disjoint");
        }
    }
    std::vector<EpSet> corrections;
    corrections.reserve(disjoint_members.size());
    EpSet correction_union;
    for (const EpSet& h : disjoint_members) {
        EpSet k = h & union_;
        if (!(h ^ k).is_finite())
            throw Error("ap_witness: postcondition failed, infinite correction delta");
        correction_union = correction_union | k;
        corrections.push_back(std::move(k));
    }
    if (!contains(correction_union))
        throw Error("ap_witness: postcondition failed, correction union not in the ideal");
    return corrections;
}

}  // namespace softtopo
