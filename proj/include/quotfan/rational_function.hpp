#pragma once

#include "quotfan/polynomial.hpp"

namespace quotfan {

/// Quotient of polynomials kept in reduced normal form: numerator and
/// denominator coprime, denominator primitive with positive leading
/// coefficient (grlex). Equality of normal forms is equality of functions.
class RationalFunction {
public:
    RationalFunction() : num_(0), den_(Polynomial::constant(0, 1)) {}
    RationalFunction(Polynomial num, Polynomial den);
    explicit RationalFunction(Polynomial num);

    static RationalFunction constant(size_t nvars, const Rat& c);
    static RationalFunction variable(size_t nvars, size_t i);

    const Polynomial& num() const { return num_; }
    const Polynomial& den() const { return den_; }
    size_t nvars() const { return num_.nvars(); }
    bool is_zero() const { return num_.is_zero(); }

    RationalFunction operator+(const RationalFunction& o) const;
    RationalFunction operator-(const RationalFunction& o) const;
    RationalFunction operator*(const RationalFunction& o) const;
    RationalFunction operator/(const RationalFunction& o) const;
    RationalFunction operator-() const;
    RationalFunction inverse() const;
    RationalFunction pow(long e) const;

    bool operator==(const RationalFunction& o) const {
        return num_ == o.num_ && den_ == o.den_;
    }
    bool operator!=(const RationalFunction& o) const { return !(*this == o); }

    /// Exact evaluation; nullopt when the denominator vanishes.
    std::optional<Rat> eval(const RatVec& x) const;

    /// Substitute rational functions for the variables.
    RationalFunction substitute(const std::vector<RationalFunction>& args) const;

    std::string to_string(const std::vector<std::string>& names = {}) const;

private:
    void reduce();
    Polynomial num_, den_;
};

} // namespace quotfan
