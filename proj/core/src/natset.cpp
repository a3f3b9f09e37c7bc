#include "softtopo/natset.hpp"

#include <algorithm>
#include <cctype>
#include <numeric>

#include "softtopo/error.hpp"

namespace softtopo {

void EpSet::canonicalize() {
    // Minimal period: shortest divisor length that reproduces the pattern.
    const std::size_t p = pattern_.size();
    for (std::size_t d = 1; d < p; ++d) {
        if (p % d != 0) continue;
        bool repeats = true;
        for (std::size_t i = d; i < p && repeats; ++i) repeats = pattern_[i] == pattern_[i % d];
        if (repeats) {
            pattern_.resize(d);
            break;
        }
    }
    // Absorb prefix bits that extend the periodic tail one step left;
    // each absorption rotates the pattern right by one.
    while (!prefix_.empty() && prefix_.back() == pattern_.back()) {
        const bool last = pattern_.back();
        prefix_.pop_back();
        pattern_.pop_back();
        pattern_.insert(pattern_.begin(), last);
    }
}

EpSet EpSet::from_bits(std::vector<bool> prefix, std::vector<bool> pattern) {
    if (pattern.empty()) throw Error("epset: pattern must be nonempty");
    EpSet s;
    s.prefix_ = std::move(prefix);
    s.pattern_ = std::move(pattern);
    s.canonicalize();
    return s;
}

EpSet EpSet::finite(const std::vector<std::uint64_t>& elems) {
    std::uint64_t len = 0;
    for (std::uint64_t e : elems) len = std::max(len, e + 1);
    std::vector<bool> prefix(len, false);
    for (std::uint64_t e : elems) prefix[e] = true;
    return from_bits(std::move(prefix), {false});
}

EpSet EpSet::residues(std::uint64_t modulus, const std::vector<std::uint64_t>& rs) {
    if (modulus == 0) throw Error("epset: modulus must be >= 1");
    std::vector<bool> pattern(modulus, false);
    for (std::uint64_t r : rs) {
        if (r >= modulus)
            throw Error("epset: residue " + std::to_string(r) + " not below modulus " +
                        std::to_string(modulus));
        pattern[r] = true;
    }
    return from_bits({}, std::move(pattern));
}

bool EpSet::is_finite() const {
    return std::none_of(pattern_.begin(), pattern_.end(), [](bool b) { return b; });
}

bool EpSet::is_empty() const {
    return is_finite() && std::none_of(prefix_.begin(), prefix_.end(), [](bool b) { return b; });
}

std::vector<std::uint64_t> EpSet::elements() const {
    if (!is_finite()) throw Error("epset: cannot list an infinite set");
    std::vector<std::uint64_t> out;
    for (std::size_t n = 0; n < prefix_.size(); ++n)
        if (prefix_[n]) out.push_back(n);
    return out;
}

Rational EpSet::density() const {
    const auto ones = static_cast<std::int64_t>(std::count(pattern_.begin(), pattern_.end(), true));
    return Rational(ones, static_cast<std::int64_t>(pattern_.size()));
}

namespace {

template <typename Op>
EpSet combine(const EpSet& a, const EpSet& b, Op op) {
    const std::size_t len = std::max(a.prefix_length(), b.prefix_length());
    const std::size_t per = std::lcm(a.period(), b.period());
    std::vector<bool> prefix(len), pattern(per);
    for (std::size_t n = 0; n < len; ++n) prefix[n] = op(a.member(n), b.member(n));
    for (std::size_t j = 0; j < per; ++j) pattern[j] = op(a.member(len + j), b.member(len + j));
    return EpSet::from_bits(std::move(prefix), std::move(pattern));
}

}  // namespace

EpSet EpSet::operator|(const EpSet& o) const {
    return combine(*this, o, [](bool x, bool y) { return x || y; });
}
EpSet EpSet::operator&(const EpSet& o) const {
    return combine(*this, o, [](bool x, bool y) { return x && y; });
}
EpSet EpSet::operator-(const EpSet& o) const {
    return combine(*this, o, [](bool x, bool y) { return x && !y; });
}
EpSet EpSet::operator^(const EpSet& o) const {
    return combine(*this, o, [](bool x, bool y) { return x != y; });
}
EpSet EpSet::operator~() const {
    std::vector<bool> prefix(prefix_), pattern(pattern_);
    prefix.flip();
    pattern.flip();
    return from_bits(std::move(prefix), std::move(pattern));
}

std::string EpSet::to_string() const {
    std::string out = "ep(prefix=";
    for (bool b : prefix_) out += b ? '1' : '0';
    out += ", pattern=";
    for (bool b : pattern_) out += b ? '1' : '0';
    out += ")";
    return out;
}

namespace {

struct ExprScanner {
    std::string_view text;
    std::size_t pos = 0;

    void skip_ws() {
        while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos]))) ++pos;
    }
    bool done() {
        skip_ws();
        return pos >= text.size();
    }
    char peek() {
        skip_ws();
        return pos < text.size() ? text[pos] : '\0';
    }
    bool consume(char c) {
        skip_ws();
        if (pos < text.size() && text[pos] == c) {
            ++pos;
            return true;
        }
        return false;
    }
    void expect(char c) {
        if (!consume(c))
            throw Error("epset expression: expected '" + std::string(1, c) + "' in \"" +
                        std::string(text) + "\"");
    }
    std::string word() {
        skip_ws();
        std::size_t start = pos;
        while (pos < text.size() &&
               (std::isalnum(static_cast<unsigned char>(text[pos])) || text[pos] == '_'))
            ++pos;
        return std::string(text.substr(start, pos - start));
    }
    std::vector<std::uint64_t> numbers_until(char stop) {
        std::vector<std::uint64_t> out;
        while (peek() != stop) {
            skip_ws();
            std::size_t start = pos;
            while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) ++pos;
            if (pos == start)
                throw Error("epset expression: expected a number in \"" + std::string(text) + "\"");
            out.push_back(std::stoull(std::string(text.substr(start, pos - start))));
        }
        return out;
    }
};

EpSet parse_term(ExprScanner& sc, const EpSetResolver& resolver) {
    const std::string name = sc.word();
    if (name.empty()) throw Error("epset expression: expected a term in \"" + std::string(sc.text) + "\"");
    if (name == "finite" && sc.peek() == '(') {
        sc.expect('(');
        auto elems = sc.numbers_until(')');
        sc.expect(')');
        return EpSet::finite(elems);
    }
    if (name == "mod" && sc.peek() == '(') {
        sc.expect('(');
        auto mods = sc.numbers_until(':');
        if (mods.size() != 1) throw Error("epset expression: mod() takes one modulus before ':'");
        sc.expect(':');
        auto rs = sc.numbers_until(')');
        if (rs.empty()) throw Error("epset expression: mod() needs at least one residue");
        sc.expect(')');
        return EpSet::residues(mods[0], rs);
    }
    if (resolver) {
        if (auto hit = resolver(name)) return *hit;
    }
    throw Error("epset expression: unknown name \"" + name + "\"");
}

}  // namespace

EpSet parse_ep_expr(std::string_view text, const EpSetResolver& resolver) {
    ExprScanner sc{text};
    EpSet acc = parse_term(sc, resolver);
    while (sc.consume('+')) acc = acc | parse_term(sc, resolver);
    if (!sc.done())
        throw Error("epset expression: trailing input at \"" +
                    std::string(text.substr(sc.pos)) + "\"");
    return acc;
}

}  // namespace softtopo
