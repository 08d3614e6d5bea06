#include "quotfan/quotient.hpp"

#include <algorithm>
#include <set>

namespace quotfan {

std::vector<Cone> column_subset_cones(const IntMatrix& m) {
    const size_t n = m.cols();
    if (n > 16) throw Error("column_subset_cones: too many columns");
    std::vector<IntVec> cols;
    for (size_t j = 0; j < n; ++j) cols.push_back(m.col(j));
    // Deduplicate generator sets before running the hull computations.
    std::set<std::vector<IntVec>> seen;
    std::vector<Cone> cones;
    for (size_t mask = 1; mask < (size_t(1) << n); ++mask) {
        std::vector<IntVec> gens;
        for (size_t j = 0; j < n; ++j)
            if (mask & (size_t(1) << j))
                if (!is_zero(cols[j])) gens.push_back(primitive(cols[j]));
        std::sort(gens.begin(), gens.end());
        gens.erase(std::unique(gens.begin(), gens.end()), gens.end());
        if (gens.empty()) continue;
        if (!seen.insert(gens).second) continue;
        cones.push_back(Cone::from_generators(gens, m.rows()));
    }
    return cones;
}

Fan quotient_fan_with_projection(const WeightSystem& ws, const IntMatrix& proj) {
    const size_t n = ws.coordinate_count();
    const size_t qrank = ws.quotient_rank();
    if (qrank == 0) return Fan::trivial(0);
    if (proj.rows() != qrank || proj.cols() != n)
        throw Error("quotient_fan: projection of wrong shape");
    if (!ws.matrix().mul(proj.transpose()).is_zero())
        throw Error("quotient_fan: projection rows are not in the kernel of the weights");
    if (rank(proj) != qrank)
        throw Error("quotient_fan: projection not of full rank");
    return chamber_fan(column_subset_cones(proj), qrank);
}

Fan quotient_fan(const WeightSystem& ws) {
    if (ws.quotient_rank() == 0) return Fan::trivial(0);
    return quotient_fan_with_projection(ws, transposed_gale_dual(ws).q);
}

namespace {

// All faces of a cone (including itself), via facet subsets.
std::vector<Cone> all_faces(const Cone& c) {
    std::set<Cone> faces;
    const auto& fct = c.facets();
    if (fct.size() > 20) throw Error("all_faces: too many facets");
    for (size_t mask = 0; mask < (size_t(1) << fct.size()); ++mask) {
        std::vector<IntVec> eqs = c.span_equations();
        for (size_t i = 0; i < fct.size(); ++i)
            if (mask & (size_t(1) << i)) eqs.push_back(fct[i]);
        faces.insert(Cone::from_inequalities(fct, eqs, c.rank()));
    }
    return {faces.begin(), faces.end()};
}

} // namespace

Fan quotient_fan_general(const Fan& f, const IntMatrix& q) {
    if (q.cols() != f.rank()) throw Error("quotient_fan_general: shape mismatch");
    if (rank(q) != q.rows()) throw Error("quotient_fan_general: projection not surjective");
    for (const auto& d : smith_invariant_factors(q))
        if (d != 1) throw Error("quotient_fan_general: projection not saturated");
    const size_t target = q.rows();
    if (target == 0) return Fan::trivial(0);

    std::vector<Cone> images;
    for (size_t i = 0; i < f.max_cones().size(); ++i) {
        const auto& idx = f.max_cones()[i];
        std::vector<IntVec> gens;
        for (size_t j : idx) gens.push_back(f.rays()[j]);
        Cone c = Cone::from_generators(gens, f.rank());
        bool simplicial = (c.rays().size() == c.dim()) && c.lineality().empty();
        std::vector<Cone> faces;
        if (simplicial) {
            for (size_t mask = 0; mask < (size_t(1) << gens.size()); ++mask) {
                std::vector<IntVec> sub;
                for (size_t j = 0; j < gens.size(); ++j)
                    if (mask & (size_t(1) << j)) sub.push_back(gens[j]);
                faces.push_back(Cone::from_generators(sub, f.rank()));
            }
        } else {
            faces = all_faces(c);
        }
        for (const auto& face : faces) {
            std::vector<IntVec> img;
            for (const auto& g : face.generators()) {
                IntVec y = q.mul(g);
                if (!is_zero(y)) img.push_back(primitive(y));
            }
            images.push_back(Cone::from_generators(img, target));
        }
    }
    return chamber_fan(images, target);
}

ChamberComplex git_chambers(const WeightSystem& ws) {
    const IntMatrix& w = ws.matrix();
    auto cones = column_subset_cones(w);
    auto res = chamber_fan_with_reps(cones, w.rows());
    ChamberComplex cc;
    cc.ambient_rank = w.rows();
    std::vector<IntVec> cols;
    for (size_t j = 0; j < w.cols(); ++j) cols.push_back(w.col(j));
    cc.support = Cone::from_generators(cols, w.rows());
    cc.chambers = std::move(res.chambers);
    cc.representatives = std::move(res.representatives);
    return cc;
}

Polytope fiber_polytope(const WeightSystem& ws, const RatVec& v) {
    const IntMatrix& w = ws.matrix();
    if (v.size() != w.rows()) throw Error("fiber_polytope: linearization of wrong rank");
    std::vector<AffineForm> ineqs, eqs;
    for (size_t j = 0; j < w.cols(); ++j) {
        IntVec e(w.cols(), Int(0));
        e[j] = 1;
        ineqs.push_back(AffineForm{e, Int(0)});
    }
    for (size_t i = 0; i < w.rows(); ++i) {
        Int d = den(v[i]);
        IntVec row(w.cols());
        for (size_t j = 0; j < w.cols(); ++j) row[j] = w.at(i, j) * d;
        eqs.push_back(AffineForm{row, num(v[i])});
    }
    return Polytope::from_h_rep(ineqs, eqs, w.cols());
}

Polytope fiber_in_quotient_coords(const WeightSystem& ws, const RatVec& v) {
    Polytope fiber = fiber_polytope(ws, v);
    if (!fiber.bounded()) throw Error("not fully definite at this linearization");
    if (fiber.empty()) throw Error("fiber_in_quotient_coords: empty fiber");
    IntMatrix q = transposed_gale_dual(ws).q;
    IntMatrix qt = q.transpose();
    const auto& verts = fiber.vertices();
    std::vector<RatVec> svert;
    for (const auto& x : verts) {
        RatVec d(x.size());
        for (size_t j = 0; j < x.size(); ++j) d[j] = x[j] - verts[0][j];
        auto s = solve_rational(qt, d);
        if (!s) throw Error("fiber_in_quotient_coords: vertex outside the kernel span");
        svert.push_back(*s);
    }
    return Polytope::from_points(svert, {}, ws.quotient_rank());
}

Fan git_quotient_fan(const WeightSystem& ws, const RatVec& v) {
    Polytope fiber = fiber_polytope(ws, v);
    if (!fiber.bounded()) throw Error("not fully definite at this linearization");
    if (fiber.empty()) throw Error("git_quotient_fan: linearization outside the weight cone");
    if (fiber.dim() == 0) return Fan::trivial(0);
    if (fiber.dim() == ws.quotient_rank()) {
        Polytope sp = fiber_in_quotient_coords(ws, v);
        std::vector<Cone> cones;
        for (const auto& vert : sp.vertices()) {
            std::vector<IntVec> normals;
            for (const auto& f : sp.inequalities())
                if (dot(vert, f.coeffs) == Rat(f.offset)) normals.push_back(f.coeffs);
            cones.push_back(Cone::from_generators(normals, ws.quotient_rank()));
        }
        return Fan::from_cones(cones, ws.quotient_rank());
    }
    // Linearization on a wall: the fan lives in the span of the fiber.
    return normal_fan(fiber);
}

std::vector<bool> semistable_support(const WeightSystem& ws, const RatVec& v) {
    const size_t n = ws.coordinate_count();
    // Integral rescale; semistability is insensitive to positive scaling.
    bool vzero = true;
    for (const auto& q : v)
        if (q != 0) vzero = false;
    RatVec vint(v.size());
    if (!vzero) {
        Int l = 1;
        for (const auto& q : v) l = lcm(l, den(q));
        for (size_t i = 0; i < v.size(); ++i) vint[i] = v[i] * Rat(l);
    } else {
        vint = v;
    }

    std::vector<bool> flags(n, false);
    auto level_flags = [&](Int k) {
        RatVec kv(vint.size());
        for (size_t i = 0; i < vint.size(); ++i) kv[i] = vint[i] * Rat(k);
        Polytope fiber = fiber_polytope(ws, kv);
        if (!fiber.bounded()) throw Error("semistable_support: fiber unbounded");
        std::vector<bool> fl(n, false);
        for (const auto& m : fiber.lattice_points())
            for (size_t i = 0; i < n; ++i)
                if (m[i] == 0) fl[i] = true;
        return fl;
    };
    // Flags are monotone under doubling the linearization; iterate to a
    // fixed point (GIT semistability quantifies over all multiples).
    std::vector<bool> prev = level_flags(1);
    for (Int k = 2; k <= 64; k *= 2) {
        std::vector<bool> cur = level_flags(k);
        for (size_t i = 0; i < n; ++i) cur[i] = cur[i] || prev[i];
        if (cur == prev) break;
        prev = cur;
    }
    return prev;
}

Polytope chow_polytope(const WeightSystem& ws) {
    auto fd = is_fully_definite(ws);
    if (!fd.fully_definite) throw Error("chow_polytope: action not fully definite");
    ChamberComplex cc = git_chambers(ws);
    std::vector<Polytope> fibers;
    for (const auto& rep : cc.representatives) {
        RatVec v(rep.size());
        for (size_t i = 0; i < rep.size(); ++i) v[i] = Rat(rep[i]);
        fibers.push_back(fiber_in_quotient_coords(ws, v));
    }
    if (fibers.empty()) throw Error("chow_polytope: no chambers");
    return minkowski_sum(fibers);
}

} // namespace quotfan
