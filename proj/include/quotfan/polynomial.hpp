#pragma once

#include "quotfan/rational.hpp"

#include <map>
#include <optional>

namespace quotfan {

using ExpVec = std::vector<int>;

/// Graded lexicographic order: total degree first, then lex on the
/// documented variable order.
struct GrlexLess {
    bool operator()(const ExpVec& a, const ExpVec& b) const;
};

/// Sparse multivariate polynomial over the exact rationals with a fixed
/// number of variables.
class Polynomial {
public:
    explicit Polynomial(size_t nvars = 0) : nvars_(nvars) {}

    static Polynomial constant(size_t nvars, const Rat& c);
    static Polynomial variable(size_t nvars, size_t i);
    static Polynomial monomial(size_t nvars, const ExpVec& e, const Rat& c);

    size_t nvars() const { return nvars_; }
    bool is_zero() const { return terms_.empty(); }
    bool is_constant() const;
    size_t term_count() const { return terms_.size(); }
    long total_degree() const; // -1 for the zero polynomial
    long degree_in(size_t var) const;
    bool uses_var(size_t var) const;

    const std::map<ExpVec, Rat, GrlexLess>& terms() const { return terms_; }

    /// Leading term in grlex order (largest); throws on zero.
    std::pair<ExpVec, Rat> leading() const;

    Polynomial operator+(const Polynomial& o) const;
    Polynomial operator-(const Polynomial& o) const;
    Polynomial operator*(const Polynomial& o) const;
    Polynomial operator-() const;
    Polynomial scaled(const Rat& c) const;
    Polynomial pow(size_t e) const;
    bool operator==(const Polynomial& o) const {
        return nvars_ == o.nvars_ && terms_ == o.terms_;
    }
    bool operator!=(const Polynomial& o) const { return !(*this == o); }

    Rat eval(const RatVec& x) const;
    /// Substitute polynomials (in a common new variable set) for variables.
    Polynomial substitute(const std::vector<Polynomial>& args) const;
    /// Set the given variables to zero.
    Polynomial without_vars(const std::vector<size_t>& vars) const;

    /// Rational content: this = content * primitive_part, where the
    /// primitive part has coprime integer coefficients and positive leading
    /// coefficient. Content of zero is zero.
    Rat content_rat() const;
    Polynomial primitive_part() const;

    void add_term(const ExpVec& e, const Rat& c);

    std::string to_string(const std::vector<std::string>& names = {}) const;

private:
    size_t nvars_;
    std::map<ExpVec, Rat, GrlexLess> terms_;
};

/// Multivariate gcd (primitive, positive leading coefficient in grlex);
/// gcd(0,0) = 0, gcd of coprime polynomials is 1.
Polynomial poly_gcd(const Polynomial& a, const Polynomial& b);

/// Exact division; nullopt when b does not divide a.
std::optional<Polynomial> poly_divide_exact(const Polynomial& a, const Polynomial& b);

} // namespace quotfan
