#ifndef SOFTTOPO_RATIONAL_HPP
#define SOFTTOPO_RATIONAL_HPP

#include <cstdint>
#include <numeric>
#include <string>

#include "softtopo/error.hpp"

namespace softtopo {

/// Exact rational number, always reduced, denominator positive.
/// Densities and their sums stay tiny, so int64 components suffice.
class Rational {
public:
    Rational() = default;

    Rational(std::int64_t num, std::int64_t den = 1) : num_(num), den_(den) {
        if (den_ == 0) throw Error("rational: zero denominator");
        if (den_ < 0) {
            num_ = -num_;
            den_ = -den_;
        }
        const std::int64_t g = std::gcd(num_ < 0 ? -num_ : num_, den_);
        if (g > 1) {
            num_ /= g;
            den_ /= g;
        }
    }

    std::int64_t num() const { return num_; }
    std::int64_t den() const { return den_; }

    friend Rational operator+(const Rational& a, const Rational& b) {
        return Rational(a.num_ * b.den_ + b.num_ * a.den_, a.den_ * b.den_);
    }
    friend Rational operator-(const Rational& a, const Rational& b) {
        return Rational(a.num_ * b.den_ - b.num_ * a.den_, a.den_ * b.den_);
    }
    friend bool operator==(const Rational& a, const Rational& b) = default;

    bool is_zero() const { return num_ == 0; }

    std::string to_string() const {
        if (den_ == 1) return std::to_string(num_);
        return std::to_string(num_) + "/" + std::to_string(den_);
    }

private:
    std::int64_t num_ = 0;
    std::int64_t den_ = 1;
};

}  // namespace softtopo

#endif
