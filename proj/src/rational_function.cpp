#include "quotfan/rational_function.hpp"

namespace quotfan {

RationalFunction::RationalFunction(Polynomial num, Polynomial den)
    : num_(std::move(num)), den_(std::move(den)) {
    if (den_.is_zero()) throw Error("RationalFunction: zero denominator");
    if (num_.nvars() != den_.nvars()) throw Error("RationalFunction: variable mismatch");
    reduce();
}

RationalFunction::RationalFunction(Polynomial num)
    : num_(std::move(num)), den_(Polynomial::constant(num_.nvars(), 1)) {}

RationalFunction RationalFunction::constant(size_t nvars, const Rat& c) {
    return RationalFunction(Polynomial::constant(nvars, c));
}

RationalFunction RationalFunction::variable(size_t nvars, size_t i) {
    return RationalFunction(Polynomial::variable(nvars, i));
}

void RationalFunction::reduce() {
    if (num_.is_zero()) {
        den_ = Polynomial::constant(num_.nvars(), 1);
        return;
    }
    Polynomial g = poly_gcd(num_, den_);
    if (!g.is_constant() || g.leading().second != 1) {
        num_ = *poly_divide_exact(num_, g);
        den_ = *poly_divide_exact(den_, g);
    }
    // Scale so the denominator is primitive with positive leading coefficient.
    Rat c = den_.content_rat();
    den_ = den_.primitive_part();
    num_ = num_.scaled(Rat(1) / c);
}

RationalFunction RationalFunction::operator+(const RationalFunction& o) const {
    return RationalFunction(num_ * o.den_ + o.num_ * den_, den_ * o.den_);
}

RationalFunction RationalFunction::operator-(const RationalFunction& o) const {
    return RationalFunction(num_ * o.den_ - o.num_ * den_, den_ * o.den_);
}

RationalFunction RationalFunction::operator*(const RationalFunction& o) const {
    return RationalFunction(num_ * o.num_, den_ * o.den_);
}

RationalFunction RationalFunction::operator/(const RationalFunction& o) const {
    if (o.num_.is_zero()) throw Error("RationalFunction: division by zero");
    return RationalFunction(num_ * o.den_, den_ * o.num_);
}

RationalFunction RationalFunction::operator-() const {
    RationalFunction r = *this;
    r.num_ = -r.num_;
    return r;
}

RationalFunction RationalFunction::inverse() const {
    if (num_.is_zero()) throw Error("RationalFunction: inverse of zero");
    return RationalFunction(den_, num_);
}

RationalFunction RationalFunction::pow(long e) const {
    if (e < 0) return inverse().pow(-e);
    RationalFunction r = constant(nvars(), 1);
    RationalFunction base = *this;
    while (e) {
        if (e & 1) r = r * base;
        base = base * base;
        e >>= 1;
    }
    return r;
}

std::optional<Rat> RationalFunction::eval(const RatVec& x) const {
    Rat d = den_.eval(x);
    if (d == 0) return std::nullopt;
    return num_.eval(x) / d;
}

RationalFunction RationalFunction::substitute(const std::vector<RationalFunction>& args) const {
    if (args.size() != nvars()) throw Error("RationalFunction::substitute: arity mismatch");
    size_t target = args.empty() ? 0 : args[0].nvars();
    // Substitute into numerator and denominator separately, then divide.
    auto subst_poly = [&](const Polynomial& p) {
        RationalFunction acc = constant(target, 0);
        for (const auto& [e, c] : p.terms()) {
            RationalFunction t = constant(target, c);
            for (size_t i = 0; i < p.nvars(); ++i)
                if (e[i] > 0) t = t * args[i].pow(e[i]);
            acc = acc + t;
        }
        return acc;
    };
    RationalFunction n = subst_poly(num_);
    RationalFunction d = subst_poly(den_);
    if (d.is_zero()) throw Error("RationalFunction::substitute: denominator vanishes identically");
    return n / d;
}

std::string RationalFunction::to_string(const std::vector<std::string>& names) const {
    if (den_ == Polynomial::constant(nvars(), 1)) return num_.to_string(names);
    return "(" + num_.to_string(names) + ")/(" + den_.to_string(names) + ")";
}

} // namespace quotfan
