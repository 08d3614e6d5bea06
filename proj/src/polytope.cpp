#include "quotfan/polytope.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <sstream>

namespace quotfan {

namespace {

AffineForm canonical_ineq(IntVec c, Int b) {
    IntVec all = c;
    all.push_back(b);
    Int g = content(all);
    if (g > 1)
        for (auto& x : all) x /= g;
    Int off = all.back();
    all.pop_back();
    return AffineForm{all, off};
}

} // namespace

Polytope Polytope::from_h_rep(std::vector<AffineForm> ineqs, std::vector<AffineForm> eqs,
                              size_t rank) {
    Polytope p;
    p.rank_ = rank;
    for (auto& f : ineqs) {
        if (f.coeffs.size() != rank) throw Error("Polytope: wrong form length");
        if (is_zero(f.coeffs)) {
            if (f.offset > 0) { // 0 >= b > 0: empty; encode as contradictory equation
                p.eqs_.push_back(AffineForm{IntVec(rank, Int(0)), Int(1)});
            }
            continue;
        }
        p.ineqs_.push_back(canonical_ineq(f.coeffs, f.offset));
    }
    for (auto& f : eqs) {
        if (f.coeffs.size() != rank) throw Error("Polytope: wrong form length");
        if (is_zero(f.coeffs) && f.offset != 0) {
            p.eqs_.push_back(AffineForm{IntVec(rank, Int(0)), Int(1)});
            continue;
        }
        if (is_zero(f.coeffs)) continue;
        p.eqs_.push_back(canonical_ineq(f.coeffs, f.offset));
    }
    std::sort(p.ineqs_.begin(), p.ineqs_.end());
    p.ineqs_.erase(std::unique(p.ineqs_.begin(), p.ineqs_.end()), p.ineqs_.end());
    std::sort(p.eqs_.begin(), p.eqs_.end());
    p.eqs_.erase(std::unique(p.eqs_.begin(), p.eqs_.end()), p.eqs_.end());
    return p;
}

void Polytope::compute() const {
    if (computed_) return;
    computed_ = true;
    vertices_.clear();
    recession_rays_.clear();
    recession_lineality_.clear();

    // Detect the explicit "empty" marker 0 = 1.
    for (const auto& e : eqs_)
        if (is_zero(e.coeffs) && e.offset != 0) return;

    // Homogenize with a leading x0 coordinate: <c,x> >= b  ->  -b*x0 + <c,x> >= 0.
    std::vector<IntVec> hineqs, heqs;
    for (const auto& f : ineqs_) {
        IntVec row(rank_ + 1);
        row[0] = -f.offset;
        for (size_t i = 0; i < rank_; ++i) row[i + 1] = f.coeffs[i];
        hineqs.push_back(row);
    }
    for (const auto& f : eqs_) {
        IntVec row(rank_ + 1);
        row[0] = -f.offset;
        for (size_t i = 0; i < rank_; ++i) row[i + 1] = f.coeffs[i];
        heqs.push_back(row);
    }
    {
        IntVec x0(rank_ + 1, Int(0));
        x0[0] = 1;
        hineqs.push_back(x0);
    }
    DDRays rep = dd_rays(hineqs, heqs, rank_ + 1);
    for (const auto& r : rep.rays) {
        if (r[0] > 0) {
            RatVec v(rank_);
            for (size_t i = 0; i < rank_; ++i) v[i] = Rat(r[i + 1], r[0]);
            vertices_.push_back(v);
        } else if (r[0] == 0) {
            IntVec dir(rank_);
            for (size_t i = 0; i < rank_; ++i) dir[i] = r[i + 1];
            recession_rays_.push_back(primitive(dir));
        } else {
            throw Error("Polytope: homogenization produced x0 < 0 ray");
        }
    }
    for (const auto& l : rep.lineality) {
        if (l[0] != 0) throw Error("Polytope: lineality with nonzero x0");
        IntVec dir(rank_);
        for (size_t i = 0; i < rank_; ++i) dir[i] = l[i + 1];
        recession_lineality_.push_back(dir);
    }
    std::sort(vertices_.begin(), vertices_.end());
    std::sort(recession_rays_.begin(), recession_rays_.end());
}

const std::vector<RatVec>& Polytope::vertices() const {
    compute();
    return vertices_;
}

const std::vector<IntVec>& Polytope::recession_rays() const {
    compute();
    return recession_rays_;
}

bool Polytope::bounded() const {
    compute();
    return recession_rays_.empty() && recession_lineality_.empty();
}

bool Polytope::empty() const {
    compute();
    return vertices_.empty();
}

size_t Polytope::dim() const {
    compute();
    if (vertices_.empty()) return 0;
    std::vector<IntVec> dirs;
    for (size_t i = 1; i < vertices_.size(); ++i) {
        RatVec d(rank_);
        bool zero = true;
        for (size_t j = 0; j < rank_; ++j) {
            d[j] = vertices_[i][j] - vertices_[0][j];
            if (d[j] != 0) zero = false;
        }
        if (!zero) dirs.push_back(rat_to_primitive(d));
    }
    for (const auto& r : recession_rays_) dirs.push_back(r);
    for (const auto& l : recession_lineality_) dirs.push_back(l);
    return rank_of_rows(dirs);
}

Polytope Polytope::from_points(const std::vector<RatVec>& points,
                               const std::vector<IntVec>& recession_rays, size_t rank) {
    if (points.empty()) {
        Polytope p;
        p.rank_ = rank;
        p.eqs_.push_back(AffineForm{IntVec(rank, Int(0)), Int(1)}); // empty marker
        return p;
    }
    std::vector<IntVec> gens;
    for (const auto& pt : points) {
        RatVec h(rank + 1);
        h[0] = 1;
        for (size_t i = 0; i < rank; ++i) h[i + 1] = pt[i];
        gens.push_back(rat_to_primitive(h));
    }
    for (const auto& r : recession_rays) {
        IntVec h(rank + 1, Int(0));
        for (size_t i = 0; i < rank; ++i) h[i + 1] = r[i];
        gens.push_back(h);
    }
    // Facets of the homogenization cone give the H-representation.
    DDRays dual = dd_rays(gens, {}, rank + 1);
    std::vector<AffineForm> ineqs, eqs;
    for (const auto& f : dual.rays) {
        IntVec c(rank);
        for (size_t i = 0; i < rank; ++i) c[i] = f[i + 1];
        if (is_zero(c)) continue; // the x0 >= 0 facet
        ineqs.push_back(AffineForm{c, -f[0]});
    }
    for (const auto& e : dual.lineality) {
        IntVec c(rank);
        for (size_t i = 0; i < rank; ++i) c[i] = e[i + 1];
        if (is_zero(c)) continue;
        eqs.push_back(AffineForm{c, -e[0]});
    }
    return from_h_rep(ineqs, eqs, rank);
}

Polytope Polytope::canonicalized() const {
    compute();
    if (vertices_.empty()) {
        Polytope p;
        p.rank_ = rank_;
        p.eqs_.push_back(AffineForm{IntVec(rank_, Int(0)), Int(1)});
        return p;
    }
    return from_points(vertices_, recession_rays_, rank_);
}

bool Polytope::contains(const RatVec& x) const {
    for (const auto& e : eqs_) {
        if (is_zero(e.coeffs)) {
            if (e.offset != 0) return false;
            continue;
        }
        if (dot(x, e.coeffs) != Rat(e.offset)) return false;
    }
    for (const auto& f : ineqs_)
        if (dot(x, f.coeffs) < Rat(f.offset)) return false;
    return true;
}

std::vector<IntVec> Polytope::lattice_points(size_t cap) const {
    compute();
    if (!bounded()) throw Error("lattice_points: polytope unbounded");
    if (vertices_.empty()) return {};
    // Bounding box from the vertices.
    std::vector<Int> lo(rank_), hi(rank_);
    for (size_t j = 0; j < rank_; ++j) {
        Rat mn = vertices_[0][j], mx = vertices_[0][j];
        for (const auto& v : vertices_) {
            mn = std::min(mn, v[j]);
            mx = std::max(mx, v[j]);
        }
        // ceil(mn), floor(mx)
        Int cl = num(mn) / den(mn);
        if (Rat(cl) < mn) cl += 1;
        Int fl = num(mx) / den(mx);
        if (Rat(fl) > mx) fl -= 1;
        lo[j] = cl;
        hi[j] = fl;
        if (cl > fl) return {};
    }
    std::vector<IntVec> out;
    IntVec x(rank_);
    size_t steps = 0;

    // Interval pruning: partial assignment x[0..level) fixed, rest in box.
    auto feasible = [&](size_t level) {
        auto check = [&](const AffineForm& f, bool equation) {
            Rat fixed = Rat(-f.offset);
            Int minrest = 0, maxrest = 0;
            for (size_t j = 0; j < rank_; ++j) {
                if (j < level) {
                    fixed += Rat(f.coeffs[j] * x[j]);
                } else {
                    const Int& c = f.coeffs[j];
                    if (c > 0) {
                        minrest += c * lo[j];
                        maxrest += c * hi[j];
                    } else if (c < 0) {
                        minrest += c * hi[j];
                        maxrest += c * lo[j];
                    }
                }
            }
            if (fixed + Rat(maxrest) < 0) return false;
            if (equation && fixed + Rat(minrest) > 0) return false;
            return true;
        };
        for (const auto& f : eqs_)
            if (!check(f, true)) return false;
        for (const auto& f : ineqs_)
            if (!check(f, false)) return false;
        return true;
    };

    std::function<void(size_t)> rec = [&](size_t level) {
        if (++steps > cap) throw Error("lattice_points: enumeration cap exceeded");
        if (!feasible(level)) return;
        if (level == rank_) {
            out.push_back(x);
            return;
        }
        for (Int t = lo[level]; t <= hi[level]; ++t) {
            x[level] = t;
            rec(level + 1);
        }
    };
    rec(0);
    std::sort(out.begin(), out.end());
    return out;
}

std::string Polytope::to_string() const {
    std::ostringstream os;
    os << "polytope(rank " << rank_ << ", " << ineqs_.size() << " ineqs, " << eqs_.size()
       << " eqs)";
    return os.str();
}

namespace {

Fan normal_fan_impl(const Polytope& p, const IntMatrix& basis, bool require_full) {
    if (!p.bounded()) throw Error("normal_fan: polytope unbounded");
    if (p.empty()) throw Error("normal_fan: polytope empty");
    const auto& verts = p.vertices();
    size_t k = basis.rows();
    if (k == 0) return Fan::trivial(0);
    IntMatrix bt = basis.transpose();

    // Vertex coordinates in the basis: solve B^T s = v - v0.
    std::vector<RatVec> svert;
    for (const auto& v : verts) {
        RatVec d(p.rank());
        for (size_t j = 0; j < p.rank(); ++j) d[j] = v[j] - verts[0][j];
        auto s = solve_rational(bt, d);
        if (!s) throw Error("normal_fan: vertex outside the prescribed direction span");
        svert.push_back(*s);
    }
    Polytope sp = Polytope::from_points(svert, {}, k);
    if (require_full && sp.dim() != k)
        throw Error("normal_fan: polytope not full-dimensional in the prescribed lattice");

    // Inner normal cone at a vertex: the facet normals active there.
    const auto& sverts = sp.vertices();
    std::vector<Cone> cones;
    for (const auto& v : sverts) {
        std::vector<IntVec> normals;
        for (const auto& f : sp.inequalities())
            if (dot(v, f.coeffs) == Rat(f.offset)) normals.push_back(f.coeffs);
        cones.push_back(Cone::from_generators(normals, k));
    }
    return Fan::from_cones(cones, k);
}

} // namespace

Fan normal_fan(const Polytope& p) {
    if (!p.bounded()) throw Error("normal_fan: polytope unbounded");
    if (p.empty()) throw Error("normal_fan: polytope empty");
    const auto& verts = p.vertices();
    std::vector<IntVec> dirs;
    for (size_t i = 1; i < verts.size(); ++i) {
        RatVec d(p.rank());
        bool zero = true;
        for (size_t j = 0; j < p.rank(); ++j) {
            d[j] = verts[i][j] - verts[0][j];
            if (d[j] != 0) zero = false;
        }
        if (!zero) dirs.push_back(rat_to_primitive(d));
    }
    if (dirs.empty()) return Fan::trivial(0);
    // Saturated canonical basis of the direction space.
    IntMatrix span = row_lattice_basis(IntMatrix::from_rows(dirs, p.rank()));
    IntMatrix basis = integer_kernel(integer_kernel(span));
    return normal_fan_impl(p, basis, true);
}

Fan normal_fan_in_basis(const Polytope& p, const IntMatrix& basis_rows) {
    return normal_fan_impl(p, basis_rows, true);
}

Polytope minkowski_sum(const std::vector<Polytope>& ps) {
    if (ps.empty()) throw Error("minkowski_sum: empty input");
    size_t rank = ps[0].rank();
    for (const auto& p : ps) {
        if (p.rank() != rank) throw Error("minkowski_sum: rank mismatch");
        if (p.empty()) throw Error("minkowski_sum: empty summand");
    }
    std::vector<RatVec> acc = ps[0].vertices();
    std::vector<IntVec> rays = ps[0].recession_rays();
    for (size_t i = 1; i < ps.size(); ++i) {
        std::vector<RatVec> next;
        for (const auto& a : acc)
            for (const auto& b : ps[i].vertices()) {
                RatVec s(rank);
                for (size_t j = 0; j < rank; ++j) s[j] = a[j] + b[j];
                next.push_back(s);
            }
        for (const auto& r : ps[i].recession_rays()) rays.push_back(r);
        // Hull reduction keeps the vertex list small across the fold.
        Polytope hull = Polytope::from_points(next, rays, rank);
        acc = hull.vertices();
        rays = hull.recession_rays();
    }
    return Polytope::from_points(acc, rays, rank);
}

} // namespace quotfan
