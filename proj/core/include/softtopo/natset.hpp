#ifndef SOFTTOPO_NATSET_HPP
#define SOFTTOPO_NATSET_HPP

#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "softtopo/rational.hpp"

namespace softtopo {

/// An eventually periodic subset of the naturals (0-based). A finite
/// prefix fixes membership of 0..L-1; a nonempty pattern fixes
/// membership of n >= L via pattern[(n - L) mod p].
///
/// Values are kept in canonical form: the pattern has minimal period
/// and no prefix bit can be absorbed into a rotation of the pattern.
/// Equality of canonical fields therefore decides set equality, and
/// every predicate on this class (finiteness, density, membership in a
/// finitely generated ideal) is decidable exactly.
class EpSet {
public:
    /// The empty set.
    EpSet() : pattern_{false} {}

    /// Canonicalizes an arbitrary prefix/pattern pair. The pattern must
    /// be nonempty.
    static EpSet from_bits(std::vector<bool> prefix, std::vector<bool> pattern);

    static EpSet finite(const std::vector<std::uint64_t>& elems);
    static EpSet singleton(std::uint64_t n) { return finite({n}); }

    /// Union of the residue classes r (mod m). Residues must be < m.
    static EpSet residues(std::uint64_t modulus, const std::vector<std::uint64_t>& rs);

    static EpSet naturals() { return from_bits({}, {true}); }

    bool member(std::uint64_t n) const {
        if (n < prefix_.size()) return prefix_[n];
        return pattern_[(n - prefix_.size()) % pattern_.size()];
    }

    const std::vector<bool>& prefix_bits() const { return prefix_; }
    const std::vector<bool>& pattern_bits() const { return pattern_; }
    std::size_t prefix_length() const { return prefix_.size(); }
    std::size_t period() const { return pattern_.size(); }

    /// Finite iff the (canonical) pattern is all zeros.
    bool is_finite() const;
    bool is_empty() const;

    /// Lists the elements of a finite set; throws on infinite sets.
    std::vector<std::uint64_t> elements() const;

    /// Natural density: the limiting fraction of members, which for an
    /// eventually periodic set is exactly (ones in pattern) / period.
    Rational density() const;

    EpSet operator|(const EpSet& o) const;
    EpSet operator&(const EpSet& o) const;
    EpSet operator-(const EpSet& o) const;
    /// Symmetric difference.
    EpSet operator^(const EpSet& o) const;
    EpSet operator~() const;

    bool intersects(const EpSet& o) const { return !((*this) & o).is_empty(); }
    bool is_subset_of(const EpSet& o) const { return ((*this) - o).is_empty(); }

    friend bool operator==(const EpSet&, const EpSet&) = default;

    /// Debug form, e.g. "ep(prefix=01, pattern=10)".
    std::string to_string() const;

private:
    std::vector<bool> prefix_;
    std::vector<bool> pattern_;

    void canonicalize();
};

/// Resolves a bare name inside an EpSet expression to a previously
/// defined set; returns nullopt for unknown names.
using EpSetResolver = std::function<std::optional<EpSet>(std::string_view)>;

/// Parses the expression syntax
///     finite(n1 n2 ...) | mod(m: r1 r2 ...) | NAME
/// with terms joined by '+' (union). Bare names are looked up through
/// the resolver; without one any name is an error.
EpSet parse_ep_expr(std::string_view text, const EpSetResolver& resolver = {});

}  // namespace softtopo

#endif
