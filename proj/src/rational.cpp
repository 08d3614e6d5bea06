#include "quotfan/rational.hpp"

#include <sstream>

namespace quotfan {

Int content(const IntVec& v) {
    Int g = 0;
    for (const auto& x : v) g = gcd(g, x);
    return g;
}

bool is_zero(const IntVec& v) {
    for (const auto& x : v)
        if (x != 0) return false;
    return true;
}

IntVec primitive(const IntVec& v) {
    Int g = content(v);
    if (g == 0) throw Error("primitive: zero vector");
    IntVec r(v.size());
    for (size_t i = 0; i < v.size(); ++i) r[i] = v[i] / g;
    return r;
}

IntVec rat_to_primitive(const RatVec& v) {
    Int l = 1;
    for (const auto& q : v) l = lcm(l, den(q));
    IntVec w(v.size());
    for (size_t i = 0; i < v.size(); ++i) w[i] = num(v[i]) * (l / den(v[i]));
    return primitive(w);
}

Int dot(const IntVec& a, const IntVec& b) {
    Int s = 0;
    for (size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
    return s;
}

Rat dot(const RatVec& a, const IntVec& b) {
    Rat s = 0;
    for (size_t i = 0; i < a.size(); ++i) s += a[i] * Rat(b[i]);
    return s;
}

Rat dot(const IntVec& a, const RatVec& b) { return dot(b, a); }

Rat dot(const RatVec& a, const RatVec& b) {
    Rat s = 0;
    for (size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
    return s;
}

IntVec add(const IntVec& a, const IntVec& b) {
    IntVec r(a.size());
    for (size_t i = 0; i < a.size(); ++i) r[i] = a[i] + b[i];
    return r;
}

IntVec sub(const IntVec& a, const IntVec& b) {
    IntVec r(a.size());
    for (size_t i = 0; i < a.size(); ++i) r[i] = a[i] - b[i];
    return r;
}

IntVec scale(const IntVec& a, const Int& c) {
    IntVec r(a.size());
    for (size_t i = 0; i < a.size(); ++i) r[i] = a[i] * c;
    return r;
}

std::string to_string(const Rat& q) {
    std::ostringstream os;
    os << num(q);
    if (den(q) != 1) os << "/" << den(q);
    return os.str();
}

std::string to_string(const IntVec& v) {
    std::ostringstream os;
    os << "(";
    for (size_t i = 0; i < v.size(); ++i) {
        if (i) os << ",";
        os << v[i];
    }
    os << ")";
    return os.str();
}

Rat parse_rational(const std::string& s) {
    auto slash = s.find('/');
    try {
        if (slash == std::string::npos) return Rat(Int(s));
        Int p(s.substr(0, slash));
        Int q(s.substr(slash + 1));
        if (q == 0) throw Error("parse_rational: zero denominator");
        return Rat(p, q);
    } catch (const std::exception& e) {
        throw Error("parse_rational: cannot parse '" + s + "'");
    }
}

} // namespace quotfan
