#include "quotfan/cone.hpp"

#include <algorithm>
#include <cstdint>
#include <sstream>

namespace quotfan {

namespace {

// Small fixed-capacity bitset for tight-constraint bookkeeping.
struct TightSet {
    std::vector<uint64_t> bits;
    explicit TightSet(size_t n) : bits((n + 63) / 64, 0) {}
    void set(size_t i) { bits[i / 64] |= uint64_t(1) << (i % 64); }
    bool get(size_t i) const { return (bits[i / 64] >> (i % 64)) & 1; }
    TightSet intersect(const TightSet& o) const {
        TightSet r = *this;
        for (size_t i = 0; i < bits.size(); ++i) r.bits[i] &= o.bits[i];
        return r;
    }
    size_t count() const {
        size_t c = 0;
        for (auto w : bits) c += size_t(__builtin_popcountll(w));
        return c;
    }
};

struct DDRay {
    IntVec v;
    TightSet tight;
};

// Extreme rays of the pointed full-dimensional cone {x : rows*x >= 0} in
// dimension p. Assumes the rows span (R^p)^* (pointedness). Classic double
// description with an exact rank-based adjacency test.
std::vector<IntVec> pointed_dd(const std::vector<IntVec>& rows, size_t p) {
    if (p == 0) return {};
    const size_t m = rows.size();
    // Initial simplicial cone from the first p independent rows.
    std::vector<size_t> base;
    {
        std::vector<IntVec> picked;
        for (size_t i = 0; i < m && base.size() < p; ++i) {
            picked.push_back(rows[i]);
            if (rank_of_rows(picked) == picked.size())
                base.push_back(i);
            else
                picked.pop_back();
        }
    }
    if (base.size() < p) throw Error("pointed_dd: cone not pointed");

    IntMatrix a0 = IntMatrix::from_rows([&] {
        std::vector<IntVec> r;
        for (size_t i : base) r.push_back(rows[i]);
        return r;
    }(), p);
    std::vector<DDRay> cur;
    for (size_t i = 0; i < p; ++i) {
        RatVec e(p, Rat(0));
        e[i] = 1;
        // Solve a0^T-free: ray_i satisfies <row_j, ray_i> = delta_ij.
        auto sol = solve_rational(a0, e);
        if (!sol) throw Error("pointed_dd: singular initial block");
        // a0 * x = e_i means column relation; we want <row_j, r> = delta_ji,
        // i.e. a0 * r = e_i. sol is exactly that.
        DDRay r{rat_to_primitive(*sol), TightSet(m)};
        for (size_t j = 0; j < p; ++j)
            if (j != i) r.tight.set(base[j]);
        cur.push_back(std::move(r));
    }

    std::vector<bool> processed(m, false);
    for (size_t i : base) processed[i] = true;

    for (size_t step = 0; step < m; ++step) {
        if (processed[step]) continue;
        const IntVec& a = rows[step];
        std::vector<Int> val(cur.size());
        bool any_neg = false, any_pos = false;
        for (size_t i = 0; i < cur.size(); ++i) {
            val[i] = dot(a, cur[i].v);
            if (val[i] < 0) any_neg = true;
            if (val[i] > 0) any_pos = true;
        }
        processed[step] = true;
        if (!any_neg) {
            for (size_t i = 0; i < cur.size(); ++i)
                if (val[i] == 0) cur[i].tight.set(step);
            continue;
        }
        std::vector<DDRay> next;
        for (size_t i = 0; i < cur.size(); ++i) {
            if (val[i] > 0) next.push_back(cur[i]);
            if (val[i] == 0) {
                DDRay r = cur[i];
                r.tight.set(step);
                next.push_back(std::move(r));
            }
        }
        if (any_pos) {
            for (size_t i = 0; i < cur.size(); ++i) {
                if (val[i] <= 0) continue;
                for (size_t j = 0; j < cur.size(); ++j) {
                    if (val[j] >= 0) continue;
                    TightSet common = cur[i].tight.intersect(cur[j].tight);
                    if (common.count() + 2 < p) continue;
                    // Adjacency: tight rows common to both span rank p-2.
                    std::vector<IntVec> tight_rows;
                    for (size_t k = 0; k < m; ++k)
                        if (common.get(k)) tight_rows.push_back(rows[k]);
                    if (p >= 2 && rank_of_rows(tight_rows) != p - 2) continue;
                    IntVec w = sub(scale(cur[j].v, val[i]), scale(cur[i].v, val[j]));
                    // w = val_i * r_j - val_j * r_i, positive combination.
                    DDRay nr{primitive(w), common};
                    nr.tight.set(step);
                    next.push_back(std::move(nr));
                }
            }
        }
        cur = std::move(next);
        if (cur.empty()) break; // cone degenerated to {0}
    }
    std::vector<IntVec> out;
    out.reserve(cur.size());
    for (auto& r : cur) out.push_back(std::move(r.v));
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
}

// Canonical representative of a ray modulo the lineality space: zero out the
// coordinates at the HNF pivot columns of the lineality basis, then rescale.
IntVec reduce_mod_lineality(const IntVec& ray, const std::vector<IntVec>& lin) {
    if (lin.empty()) return primitive(ray);
    RatVec r(ray.size());
    for (size_t i = 0; i < ray.size(); ++i) r[i] = Rat(ray[i]);
    for (const auto& l : lin) {
        size_t piv = 0;
        while (piv < l.size() && l[piv] == 0) ++piv;
        Rat f = r[piv] / Rat(l[piv]);
        for (size_t j = 0; j < r.size(); ++j) r[j] -= f * Rat(l[j]);
    }
    return rat_to_primitive(r);
}

} // namespace

DDRays dd_rays(const std::vector<IntVec>& ineqs, const std::vector<IntVec>& eqs, size_t rank) {
    // Restrict to the solution space of the equations.
    IntMatrix e = IntMatrix::from_rows(eqs, rank);
    if (eqs.empty()) e = IntMatrix(0, rank);
    IntMatrix k = integer_kernel(e); // rows: basis of {x : e x = 0}
    size_t s = k.rows();
    IntMatrix kt = k.transpose();
    std::vector<IntVec> restricted;
    restricted.reserve(ineqs.size());
    for (const auto& a : ineqs) {
        IntVec ra(s, Int(0));
        for (size_t j = 0; j < s; ++j) ra[j] = dot(a, k.row(j));
        if (!is_zero(ra)) restricted.push_back(primitive(ra));
    }
    std::sort(restricted.begin(), restricted.end());
    restricted.erase(std::unique(restricted.begin(), restricted.end()), restricted.end());

    // Split off the lineality inside the subspace.
    IntMatrix rm = restricted.empty() ? IntMatrix(0, s)
                                      : IntMatrix::from_rows(restricted, s);
    IntMatrix lin = integer_kernel(rm); // rows: lineality basis in t-coords
    size_t l = lin.rows();
    size_t p = s - l;

    std::vector<IntVec> pointed_rows;
    IntMatrix c = IntMatrix::identity(s);
    if (l > 0) {
        c = unimodular_completion(lin); // first l rows = lin
        // Inequalities vanish on the lineality; rewrite in w-coords
        // (t = c^T w) and drop the first l coordinates.
        for (const auto& a : restricted) {
            IntVec wa(p, Int(0));
            for (size_t j = 0; j < p; ++j) wa[j] = dot(a, c.row(l + j));
            pointed_rows.push_back(wa);
        }
    } else {
        pointed_rows = restricted;
    }

    std::vector<IntVec> prays = pointed_dd(pointed_rows, p);

    DDRays out;
    for (size_t i = 0; i < l; ++i) out.lineality.push_back(kt.mul(lin.row(i)));
    if (!out.lineality.empty()) {
        IntMatrix lb = row_lattice_basis(IntMatrix::from_rows(out.lineality, rank));
        out.lineality.clear();
        for (size_t i = 0; i < lb.rows(); ++i) out.lineality.push_back(lb.row(i));
    }
    for (const auto& pr : prays) {
        // w-coords -> t-coords -> ambient.
        IntVec t(s, Int(0));
        for (size_t j = 0; j < p; ++j)
            if (pr[j] != 0) t = add(t, scale(c.row(l + j), pr[j]));
        out.rays.push_back(reduce_mod_lineality(kt.mul(t), out.lineality));
    }
    std::sort(out.rays.begin(), out.rays.end());
    out.rays.erase(std::unique(out.rays.begin(), out.rays.end()), out.rays.end());
    return out;
}

void Cone::build_from_rays(DDRays vrep, size_t rank) {
    rank_ = rank;
    rays_ = std::move(vrep.rays);
    lineality_ = std::move(vrep.lineality);
    std::sort(rays_.begin(), rays_.end());
    // Dual run: facets and span equations.
    std::vector<IntVec> gens = rays_;
    for (const auto& l : lineality_) {
        gens.push_back(l);
        IntVec neg(l.size());
        for (size_t i = 0; i < l.size(); ++i) neg[i] = -l[i];
        gens.push_back(neg);
    }
    DDRays dualrep = dd_rays(gens, {}, rank);
    facets_ = std::move(dualrep.rays);
    span_equations_ = std::move(dualrep.lineality);
    std::sort(facets_.begin(), facets_.end());
}

Cone Cone::from_generators(const std::vector<IntVec>& gens, size_t rank) {
    for (const auto& g : gens)
        if (g.size() != rank) throw Error("Cone::from_generators: wrong vector length");
    std::vector<IntVec> nonzero;
    for (const auto& g : gens)
        if (!is_zero(g)) nonzero.push_back(g);
    // H-rep of the generated cone via duality, then a clean V-rep from it.
    DDRays dual = dd_rays(nonzero, {}, rank);
    std::vector<IntVec> ineqs = dual.rays;
    std::vector<IntVec> eqs = dual.lineality;
    Cone c;
    c.build_from_rays(dd_rays(ineqs, eqs, rank), rank);
    return c;
}

Cone Cone::from_generators_rat(const std::vector<RatVec>& gens, size_t rank) {
    std::vector<IntVec> prim;
    for (const auto& g : gens) {
        bool zero = true;
        for (const auto& q : g)
            if (q != 0) zero = false;
        if (!zero) prim.push_back(rat_to_primitive(g));
    }
    return from_generators(prim, rank);
}

Cone Cone::from_inequalities(const std::vector<IntVec>& ineqs, const std::vector<IntVec>& eqs,
                             size_t rank) {
    Cone c;
    c.build_from_rays(dd_rays(ineqs, eqs, rank), rank);
    return c;
}

Cone Cone::zero(size_t rank) { return from_generators({}, rank); }

Cone Cone::full_space(size_t rank) {
    std::vector<IntVec> gens;
    for (size_t i = 0; i < rank; ++i) {
        IntVec e(rank, Int(0)), f(rank, Int(0));
        e[i] = 1;
        f[i] = -1;
        gens.push_back(e);
        gens.push_back(f);
    }
    return from_generators(gens, rank);
}

Cone Cone::positive_orthant(size_t rank) {
    std::vector<IntVec> gens;
    for (size_t i = 0; i < rank; ++i) {
        IntVec e(rank, Int(0));
        e[i] = 1;
        gens.push_back(e);
    }
    return from_generators(gens, rank);
}

std::vector<IntVec> Cone::generators() const {
    std::vector<IntVec> g = rays_;
    for (const auto& l : lineality_) {
        g.push_back(l);
        IntVec neg(l.size());
        for (size_t i = 0; i < l.size(); ++i) neg[i] = -l[i];
        g.push_back(neg);
    }
    return g;
}

size_t Cone::dim() const {
    std::vector<IntVec> g = rays_;
    for (const auto& l : lineality_) g.push_back(l);
    return rank_of_rows(g);
}

bool Cone::contains(const IntVec& x) const {
    for (const auto& e : span_equations_)
        if (dot(e, x) != 0) return false;
    for (const auto& f : facets_)
        if (dot(f, x) < 0) return false;
    return true;
}

bool Cone::contains(const RatVec& x) const {
    for (const auto& e : span_equations_)
        if (dot(x, e) != 0) return false;
    for (const auto& f : facets_)
        if (dot(x, f) < 0) return false;
    return true;
}

bool Cone::contains_in_interior(const IntVec& x) const {
    for (const auto& e : span_equations_)
        if (dot(e, x) != 0) return false;
    for (const auto& f : facets_)
        if (dot(f, x) <= 0) return false;
    return true;
}

bool Cone::contains_cone(const Cone& c) const {
    for (const auto& r : c.rays_)
        if (!contains(r)) return false;
    for (const auto& l : c.lineality_) {
        if (!contains(l)) return false;
        IntVec neg(l.size());
        for (size_t i = 0; i < l.size(); ++i) neg[i] = -l[i];
        if (!contains(neg)) return false;
    }
    return true;
}

IntVec Cone::interior_point() const {
    IntVec p(rank_, Int(0));
    for (const auto& r : rays_) p = add(p, r);
    return p;
}

Cone Cone::dual() const {
    std::vector<IntVec> gens = generators();
    Cone c;
    c.build_from_rays(dd_rays(gens, {}, rank_), rank_);
    return c;
}

Cone Cone::intersect(const Cone& other) const {
    if (rank_ != other.rank_) throw Error("Cone::intersect: rank mismatch");
    std::vector<IntVec> ineqs = facets_;
    ineqs.insert(ineqs.end(), other.facets_.begin(), other.facets_.end());
    std::vector<IntVec> eqs = span_equations_;
    eqs.insert(eqs.end(), other.span_equations_.begin(), other.span_equations_.end());
    return from_inequalities(ineqs, eqs, rank_);
}

bool Cone::has_face(const Cone& sub) const {
    if (!contains_cone(sub)) return false;
    // Face cut out by all facets vanishing on sub.
    std::vector<IntVec> eqs = span_equations_;
    auto sub_gens = sub.generators();
    for (const auto& f : facets_) {
        bool vanishes = true;
        for (const auto& g : sub_gens)
            if (dot(f, g) != 0) {
                vanishes = false;
                break;
            }
        if (sub_gens.empty()) vanishes = true;
        if (vanishes) eqs.push_back(f);
    }
    if (sub.is_zero_cone()) return is_pointed();
    Cone face = from_inequalities(facets_, eqs, rank_);
    return face == sub;
}

bool Cone::operator==(const Cone& o) const {
    return rank_ == o.rank_ && rays_ == o.rays_ && lineality_ == o.lineality_;
}

bool Cone::operator<(const Cone& o) const {
    if (rays_ != o.rays_) return rays_ < o.rays_;
    return lineality_ < o.lineality_;
}

std::string Cone::to_string() const {
    std::ostringstream os;
    os << "cone{";
    for (size_t i = 0; i < rays_.size(); ++i) {
        if (i) os << ", ";
        os << quotfan::to_string(rays_[i]);
    }
    if (!lineality_.empty()) {
        os << " | lin:";
        for (const auto& l : lineality_) os << " " << quotfan::to_string(l);
    }
    os << "}";
    return os.str();
}

} // namespace quotfan
