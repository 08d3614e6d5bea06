#include "quotfan/polynomial.hpp"

#include <algorithm>
#include <sstream>

namespace quotfan {

bool GrlexLess::operator()(const ExpVec& a, const ExpVec& b) const {
    long da = 0, db = 0;
    for (int x : a) da += x;
    for (int x : b) db += x;
    if (da != db) return da < db;
    return a < b; // lex tiebreak: earlier variables weigh more
}

Polynomial Polynomial::constant(size_t nvars, const Rat& c) {
    Polynomial p(nvars);
    if (c != 0) p.terms_[ExpVec(nvars, 0)] = c;
    return p;
}

Polynomial Polynomial::variable(size_t nvars, size_t i) {
    if (i >= nvars) throw Error("Polynomial::variable: index out of range");
    Polynomial p(nvars);
    ExpVec e(nvars, 0);
    e[i] = 1;
    p.terms_[e] = 1;
    return p;
}

Polynomial Polynomial::monomial(size_t nvars, const ExpVec& e, const Rat& c) {
    if (e.size() != nvars) throw Error("Polynomial::monomial: exponent length");
    Polynomial p(nvars);
    if (c != 0) p.terms_[e] = c;
    return p;
}

bool Polynomial::is_constant() const {
    if (terms_.empty()) return true;
    return terms_.size() == 1 && terms_.begin()->first == ExpVec(nvars_, 0);
}

long Polynomial::total_degree() const {
    if (terms_.empty()) return -1;
    long d = 0;
    for (int x : terms_.rbegin()->first) d += x;
    return d;
}

long Polynomial::degree_in(size_t var) const {
    long d = -1;
    for (const auto& [e, c] : terms_) d = std::max(d, long(e[var]));
    return terms_.empty() ? -1 : d;
}

bool Polynomial::uses_var(size_t var) const {
    for (const auto& [e, c] : terms_)
        if (e[var] > 0) return true;
    return false;
}

std::pair<ExpVec, Rat> Polynomial::leading() const {
    if (terms_.empty()) throw Error("Polynomial::leading: zero polynomial");
    return *terms_.rbegin();
}

void Polynomial::add_term(const ExpVec& e, const Rat& c) {
    if (c == 0) return;
    auto it = terms_.find(e);
    if (it == terms_.end()) {
        terms_[e] = c;
    } else {
        it->second += c;
        if (it->second == 0) terms_.erase(it);
    }
}

Polynomial Polynomial::operator+(const Polynomial& o) const {
    if (nvars_ != o.nvars_) throw Error("Polynomial: variable count mismatch");
    Polynomial r = *this;
    for (const auto& [e, c] : o.terms_) r.add_term(e, c);
    return r;
}

Polynomial Polynomial::operator-(const Polynomial& o) const {
    if (nvars_ != o.nvars_) throw Error("Polynomial: variable count mismatch");
    Polynomial r = *this;
    for (const auto& [e, c] : o.terms_) r.add_term(e, -c);
    return r;
}

Polynomial Polynomial::operator-() const {
    Polynomial r(nvars_);
    for (const auto& [e, c] : terms_) r.terms_[e] = -c;
    return r;
}

Polynomial Polynomial::scaled(const Rat& c) const {
    Polynomial r(nvars_);
    if (c == 0) return r;
    for (const auto& [e, k] : terms_) r.terms_[e] = k * c;
    return r;
}

Polynomial Polynomial::operator*(const Polynomial& o) const {
    if (nvars_ != o.nvars_) throw Error("Polynomial: variable count mismatch");
    Polynomial r(nvars_);
    for (const auto& [ea, ca] : terms_)
        for (const auto& [eb, cb] : o.terms_) {
            ExpVec e(nvars_);
            for (size_t i = 0; i < nvars_; ++i) e[i] = ea[i] + eb[i];
            r.add_term(e, ca * cb);
        }
    return r;
}

Polynomial Polynomial::pow(size_t e) const {
    Polynomial r = constant(nvars_, 1);
    Polynomial base = *this;
    while (e) {
        if (e & 1) r = r * base;
        base = base * base;
        e >>= 1;
    }
    return r;
}

Rat Polynomial::eval(const RatVec& x) const {
    if (x.size() != nvars_) throw Error("Polynomial::eval: point length mismatch");
    Rat s = 0;
    for (const auto& [e, c] : terms_) {
        Rat t = c;
        for (size_t i = 0; i < nvars_; ++i)
            for (int k = 0; k < e[i]; ++k) t *= x[i];
        s += t;
    }
    return s;
}

Polynomial Polynomial::substitute(const std::vector<Polynomial>& args) const {
    if (args.size() != nvars_) throw Error("Polynomial::substitute: arity mismatch");
    size_t target = args.empty() ? 0 : args[0].nvars();
    Polynomial r(target);
    for (const auto& [e, c] : terms_) {
        Polynomial t = Polynomial::constant(target, c);
        for (size_t i = 0; i < nvars_; ++i)
            if (e[i] > 0) t = t * args[i].pow(size_t(e[i]));
        r = r + t;
    }
    return r;
}

Polynomial Polynomial::without_vars(const std::vector<size_t>& vars) const {
    Polynomial r(nvars_);
    for (const auto& [e, c] : terms_) {
        bool kill = false;
        for (size_t v : vars)
            if (e[v] > 0) kill = true;
        if (!kill) r.add_term(e, c);
    }
    return r;
}

Rat Polynomial::content_rat() const {
    if (terms_.empty()) return 0;
    Int num_gcd = 0, den_lcm = 1;
    for (const auto& [e, c] : terms_) {
        num_gcd = gcd(num_gcd, num(c));
        den_lcm = lcm(den_lcm, den(c));
    }
    Rat content(num_gcd, den_lcm);
    if (terms_.rbegin()->second < 0) content = -content;
    return content;
}

Polynomial Polynomial::primitive_part() const {
    if (terms_.empty()) return *this;
    Rat c = content_rat();
    Polynomial r(nvars_);
    for (const auto& [e, k] : terms_) r.terms_[e] = k / c;
    return r;
}

std::string Polynomial::to_string(const std::vector<std::string>& names) const {
    if (terms_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    // Print leading terms first.
    for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
        const Rat& c = it->second;
        if (!first) os << (c > 0 ? " + " : " - ");
        else if (c < 0) os << "-";
        first = false;
        Rat a = abs(c);
        bool is_const_term = true;
        for (int e : it->first)
            if (e) is_const_term = false;
        if (a != 1 || is_const_term) os << quotfan::to_string(a);
        bool star = (a != 1);
        for (size_t i = 0; i < nvars_; ++i) {
            if (it->first[i] == 0) continue;
            if (star) os << "*";
            star = true;
            if (i < names.size()) os << names[i];
            else os << "x" << i;
            if (it->first[i] > 1) os << "^" << it->first[i];
        }
    }
    return os.str();
}

std::optional<Polynomial> poly_divide_exact(const Polynomial& a, const Polynomial& b) {
    if (b.is_zero()) return std::nullopt;
    size_t n = a.nvars();
    Polynomial rem = a, quot(n);
    auto [lbe, lbc] = b.leading();
    while (!rem.is_zero()) {
        auto [le, lc] = rem.leading();
        ExpVec q(n);
        for (size_t i = 0; i < n; ++i) {
            q[i] = le[i] - lbe[i];
            if (q[i] < 0) return std::nullopt;
        }
        Polynomial m = Polynomial::monomial(n, q, lc / lbc);
        quot = quot + m;
        rem = rem - m * b;
    }
    return quot;
}

namespace {

// View p as a univariate polynomial in `var` with polynomial coefficients.
std::vector<Polynomial> coeffs_in(const Polynomial& p, size_t var) {
    long d = std::max(p.degree_in(var), long(0));
    std::vector<Polynomial> cs(size_t(d) + 1, Polynomial(p.nvars()));
    for (const auto& [e, c] : p.terms()) {
        ExpVec rest = e;
        int k = rest[var];
        rest[var] = 0;
        cs[size_t(k)].add_term(rest, c);
    }
    return cs;
}

Polynomial from_coeffs(const std::vector<Polynomial>& cs, size_t var, size_t nvars) {
    Polynomial p(nvars);
    for (size_t k = 0; k < cs.size(); ++k)
        for (const auto& [e, c] : cs[k].terms()) {
            ExpVec f = e;
            f[var] = int(k);
            p.add_term(f, c);
        }
    return p;
}

size_t top_var(const Polynomial& p) {
    for (size_t i = p.nvars(); i-- > 0;)
        if (p.uses_var(i)) return i;
    throw Error("top_var: constant polynomial");
}

// Pseudo-remainder of a by b in the variable `var`.
Polynomial pseudo_rem(Polynomial a, const Polynomial& b, size_t var) {
    long db = b.degree_in(var);
    auto bc = coeffs_in(b, var);
    Polynomial lb = bc.back();
    while (!a.is_zero() && a.degree_in(var) >= db) {
        long da = a.degree_in(var);
        auto ac = coeffs_in(a, var);
        Polynomial la = ac.back();
        ExpVec shift(a.nvars(), 0);
        shift[var] = int(da - db);
        Polynomial mono = Polynomial::monomial(a.nvars(), shift, 1);
        a = a * lb - b * (la * mono);
    }
    return a;
}

} // namespace

Polynomial poly_gcd(const Polynomial& a, const Polynomial& b) {
    if (a.is_zero()) return b.is_zero() ? b : b.primitive_part();
    if (b.is_zero()) return a.primitive_part();
    if (a.is_constant() || b.is_constant()) return Polynomial::constant(a.nvars(), 1);

    size_t var = std::max(top_var(a), top_var(b));

    // Contents with respect to the main variable.
    auto content_of = [&](const Polynomial& p) {
        Polynomial c(p.nvars());
        for (const auto& q : coeffs_in(p, var)) c = poly_gcd(c, q);
        return c;
    };
    Polynomial ca = content_of(a), cb = content_of(b);
    Polynomial ppa = *poly_divide_exact(a, ca);
    Polynomial ppb = *poly_divide_exact(b, cb);
    if (ppa.degree_in(var) < ppb.degree_in(var)) std::swap(ppa, ppb);

    // Primitive PRS.
    while (!ppb.is_zero()) {
        Polynomial r = pseudo_rem(ppa, ppb, var);
        ppa = ppb;
        if (r.is_zero()) {
            ppb = r;
        } else if (!r.uses_var(var)) {
            // Nonzero remainder free of the main variable: coprime parts.
            ppb = Polynomial(a.nvars());
            ppa = Polynomial::constant(a.nvars(), 1);
        } else {
            Polynomial rc = content_of(r);
            ppb = *poly_divide_exact(r, rc);
        }
    }
    Polynomial result = poly_gcd(ca, cb) * ppa;
    return result.primitive_part();
}

} // namespace quotfan
