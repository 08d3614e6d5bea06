#include "quotfan/projective_map.hpp"

#include <sstream>

namespace quotfan {

MultiProjectiveMap::MultiProjectiveMap(std::vector<size_t> source_dims,
                                       std::vector<size_t> target_dims,
                                       std::vector<std::vector<Polynomial>> components)
    : source_dims_(std::move(source_dims)), target_dims_(std::move(target_dims)),
      components_(std::move(components)) {
    if (components_.size() != target_dims_.size())
        throw Error("MultiProjectiveMap: factor count mismatch");
    size_t nv = source_var_count();
    for (size_t t = 0; t < components_.size(); ++t) {
        if (components_[t].size() != target_dims_[t] + 1)
            throw Error("MultiProjectiveMap: component count mismatch");
        bool all_zero = true;
        for (const auto& p : components_[t]) {
            if (p.nvars() != nv) throw Error("MultiProjectiveMap: wrong variable count");
            if (!p.is_zero()) all_zero = false;
        }
        if (all_zero) throw Error("MultiProjectiveMap: identically zero factor");
    }
    normalize();
}

size_t MultiProjectiveMap::source_var_count() const {
    size_t n = 0;
    for (size_t d : source_dims_) n += d + 1;
    return n;
}

MultiProjectiveMap MultiProjectiveMap::identity(const std::vector<size_t>& dims) {
    size_t nv = 0;
    for (size_t d : dims) nv += d + 1;
    std::vector<std::vector<Polynomial>> comps;
    size_t off = 0;
    for (size_t d : dims) {
        std::vector<Polynomial> c;
        for (size_t i = 0; i <= d; ++i) c.push_back(Polynomial::variable(nv, off + i));
        comps.push_back(std::move(c));
        off += d + 1;
    }
    return MultiProjectiveMap(dims, dims, std::move(comps));
}

void MultiProjectiveMap::normalize() {
    for (auto& comps : components_) {
        Polynomial g(comps[0].nvars());
        for (const auto& p : comps) g = poly_gcd(g, p);
        if (!g.is_zero() && !(g.is_constant() && g.leading().second == 1))
            for (auto& p : comps)
                if (!p.is_zero()) p = *poly_divide_exact(p, g);
        // Joint rational rescale: coprime integer coefficients across the
        // factor, first nonzero component positive.
        Rat scale = 0;
        Int num_gcd = 0, den_lcm = 1;
        for (const auto& p : comps)
            for (const auto& [e, c] : p.terms()) {
                num_gcd = gcd(num_gcd, num(c));
                den_lcm = lcm(den_lcm, den(c));
            }
        scale = Rat(den_lcm, num_gcd);
        for (const auto& p : comps) {
            if (p.is_zero()) continue;
            if (p.leading().second < 0) scale = -abs(scale);
            else scale = abs(scale);
            break;
        }
        for (auto& p : comps) p = p.scaled(scale);
    }
}

bool MultiProjectiveMap::operator==(const MultiProjectiveMap& o) const {
    return source_dims_ == o.source_dims_ && target_dims_ == o.target_dims_ &&
           components_ == o.components_;
}

std::string MultiProjectiveMap::to_string(const std::vector<std::string>& names) const {
    std::ostringstream os;
    for (size_t t = 0; t < components_.size(); ++t) {
        if (t) os << " x ";
        os << "[";
        for (size_t i = 0; i < components_[t].size(); ++i) {
            if (i) os << " : ";
            os << components_[t][i].to_string(names);
        }
        os << "]";
    }
    return os.str();
}

MultiProjectiveMap compose(const MultiProjectiveMap& f, const MultiProjectiveMap& g) {
    if (f.source_dims() != g.target_dims())
        throw Error("compose: signature mismatch");
    // Flattened components of g feed the variables of f.
    std::vector<Polynomial> args;
    for (const auto& comps : g.components())
        for (const auto& p : comps) args.push_back(p);
    std::vector<std::vector<Polynomial>> out;
    for (const auto& comps : f.components()) {
        std::vector<Polynomial> c;
        for (const auto& p : comps) c.push_back(p.substitute(args));
        out.push_back(std::move(c));
    }
    return MultiProjectiveMap(g.source_dims(), f.target_dims(), std::move(out));
}

bool maps_equal(const MultiProjectiveMap& a, const MultiProjectiveMap& b) {
    if (a.source_dims() != b.source_dims() || a.target_dims() != b.target_dims()) return false;
    for (size_t t = 0; t < a.components().size(); ++t) {
        const auto& fa = a.components()[t];
        const auto& fb = b.components()[t];
        for (size_t i = 0; i < fa.size(); ++i)
            for (size_t j = i + 1; j < fa.size(); ++j)
                if (!(fa[i] * fb[j] - fa[j] * fb[i]).is_zero()) return false;
        // Rule out the zero-against-nonzero degenerate pattern.
        for (size_t i = 0; i < fa.size(); ++i)
            if (fa[i].is_zero() != fb[i].is_zero()) return false;
    }
    return true;
}

RatVec normalize_projective_point(const RatVec& v) {
    IntVec w = rat_to_primitive(v);
    for (const auto& x : w) {
        if (x > 0) break;
        if (x < 0) {
            for (auto& y : w) y = -y;
            break;
        }
    }
    RatVec r(w.size());
    for (size_t i = 0; i < w.size(); ++i) r[i] = Rat(w[i]);
    return r;
}

std::vector<RatVec> apply_point(const MultiProjectiveMap& f, const std::vector<RatVec>& pts) {
    if (pts.size() != f.source_dims().size()) throw Error("apply_point: factor count mismatch");
    RatVec flat;
    for (size_t s = 0; s < pts.size(); ++s) {
        if (pts[s].size() != f.source_dims()[s] + 1)
            throw Error("apply_point: point length mismatch");
        bool all_zero = true;
        for (const auto& x : pts[s])
            if (x != 0) all_zero = false;
        if (all_zero) throw Error("apply_point: zero source point");
        for (const auto& x : pts[s]) flat.push_back(x);
    }
    std::vector<RatVec> out;
    for (const auto& comps : f.components()) {
        RatVec vals;
        bool all_zero = true;
        for (const auto& p : comps) {
            Rat v = p.eval(flat);
            if (v != 0) all_zero = false;
            vals.push_back(v);
        }
        if (all_zero) throw Error("indeterminate");
        out.push_back(normalize_projective_point(vals));
    }
    return out;
}

size_t base_locus_components(const MultiProjectiveMap& f) {
    // Supported shapes: every component a monomial or of total degree <= 1.
    for (const auto& comps : f.components())
        for (const auto& p : comps)
            if (p.term_count() > 1 && p.total_degree() > 1)
                throw Error("base_locus_components: unsupported component shape");
    size_t nv = f.source_var_count();
    // Factor block of each source variable.
    std::vector<size_t> block(nv);
    {
        size_t off = 0, b = 0;
        for (size_t d : f.source_dims()) {
            for (size_t i = 0; i <= d; ++i) block[off + i] = b;
            ++b;
            off += d + 1;
        }
    }
    size_t count = 0;
    for (size_t a = 0; a < nv; ++a)
        for (size_t b = a + 1; b < nv; ++b) {
            // Only pairs of coordinates within one source factor: the loci
            // are the pullbacks of {z_u = z_v = 0} from that factor.
            if (block[a] != block[b]) continue;
            // Skip pairs exhausting an entire projective factor: the locus
            // is empty in the product.
            if (f.source_dims()[block[a]] + 1 == 2) continue;
            bool kills_factor = false;
            for (const auto& comps : f.components()) {
                bool all_vanish = true;
                for (const auto& p : comps)
                    if (!p.without_vars({a, b}).is_zero()) {
                        all_vanish = false;
                        break;
                    }
                if (all_vanish) {
                    kills_factor = true;
                    break;
                }
            }
            if (kills_factor) ++count;
        }
    return count;
}

} // namespace quotfan
