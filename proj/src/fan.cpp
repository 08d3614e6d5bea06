#include "quotfan/fan.hpp"

#include <algorithm>
#include <deque>
#include <functional>
#include <map>
#include <set>
#include <sstream>

namespace quotfan {

namespace {

IntVec canonical_sign(const IntVec& v) {
    for (const auto& x : v) {
        if (x > 0) return v;
        if (x < 0) {
            IntVec n(v.size());
            for (size_t i = 0; i < v.size(); ++i) n[i] = -v[i];
            return n;
        }
    }
    return v;
}

IntVec negate(const IntVec& v) {
    IntVec n(v.size());
    for (size_t i = 0; i < v.size(); ++i) n[i] = -v[i];
    return n;
}

// Strictly generic interior point of a full-dimensional cone: a lattice
// point interior to the cone and off every listed hyperplane.
IntVec generic_point(const Cone& k, const std::vector<IntVec>& hyperplanes) {
    IntVec p = k.interior_point();
    auto gens = k.generators();
    for (size_t guard = 0; guard <= hyperplanes.size() + 2; ++guard) {
        size_t bad = hyperplanes.size();
        for (size_t i = 0; i < hyperplanes.size(); ++i)
            if (dot(hyperplanes[i], p) == 0) {
                bad = i;
                break;
            }
        if (bad == hyperplanes.size()) return p;
        const IntVec& h = hyperplanes[bad];
        IntVec g;
        for (const auto& cand : gens)
            if (dot(h, cand) != 0) {
                g = cand;
                break;
            }
        if (g.empty()) throw Error("generic_point: cone lies inside a hyperplane");
        Int m = 1;
        for (const auto& h2 : hyperplanes) {
            Int hp = dot(h2, p);
            if (hp == 0) continue;
            Int hg = abs(dot(h2, g));
            Int bound = hg / abs(hp) + 1;
            if (bound > m) m = bound;
        }
        p = add(scale(p, m), g);
    }
    throw Error("generic_point: did not converge");
}

// Point just across the wall with relative-interior point w, on the
// negative side of the oriented facet normal f, generic for `hyperplanes`.
IntVec crossing_point(const IntVec& w, const IntVec& f, const std::vector<IntVec>& hyperplanes) {
    Int m = 1;
    for (const auto& h : hyperplanes) {
        Int hw = dot(h, w);
        if (hw == 0) continue;
        Int hf = abs(dot(h, f));
        Int bound = hf / abs(hw) + 1;
        if (bound > m) m = bound;
    }
    return sub(scale(w, m), f);
}

} // namespace

Fan Fan::from_cones(const std::vector<Cone>& max_cones, size_t rank) {
    Fan f;
    f.rank_ = rank;
    std::set<IntVec> rayset;
    std::set<Cone> unique;
    for (const auto& c : max_cones) {
        if (c.rank() != rank) throw Error("Fan::from_cones: rank mismatch");
        if (!c.is_pointed()) throw Error("Fan::from_cones: cone not pointed");
        if (!unique.insert(c).second) continue;
        for (const auto& r : c.rays()) rayset.insert(r);
    }
    f.rays_.assign(rayset.begin(), rayset.end());
    std::map<IntVec, size_t> index;
    for (size_t i = 0; i < f.rays_.size(); ++i) index[f.rays_[i]] = i;
    std::set<std::vector<size_t>> cones;
    for (const auto& c : unique) {
        std::vector<size_t> idx;
        for (const auto& r : c.rays()) idx.push_back(index.at(r));
        std::sort(idx.begin(), idx.end());
        cones.insert(idx);
    }
    if (cones.empty()) cones.insert({}); // the trivial fan
    f.max_cones_.assign(cones.begin(), cones.end());
    return f;
}

Fan Fan::trivial(size_t rank) {
    Fan f;
    f.rank_ = rank;
    f.max_cones_ = {{}};
    return f;
}

Cone Fan::cone(size_t i) const {
    std::vector<IntVec> gens;
    for (size_t idx : max_cones_.at(i)) gens.push_back(rays_.at(idx));
    return Cone::from_generators(gens, rank_);
}

std::vector<Cone> Fan::cones() const {
    std::vector<Cone> cs;
    cs.reserve(max_cones_.size());
    for (size_t i = 0; i < max_cones_.size(); ++i) cs.push_back(cone(i));
    return cs;
}

std::string Fan::to_string() const {
    std::ostringstream os;
    os << "fan(rank " << rank_ << ", " << rays_.size() << " rays, " << max_cones_.size()
       << " max cones)";
    return os.str();
}

FanReport fan_report(const Fan& f) {
    FanReport rep;
    rep.ray_count = f.rays().size();
    rep.max_cone_count = f.max_cones().size();
    const size_t d = f.rank();

    bool simplicial = true, smooth = true, pure = true;
    std::vector<Cone> cones = f.cones();
    for (size_t i = 0; i < cones.size(); ++i) {
        const auto& idx = f.max_cones()[i];
        std::vector<IntVec> gens;
        for (size_t j : idx) gens.push_back(f.rays()[j]);
        size_t cdim = cones[i].dim();
        if (cdim != d) pure = false;
        if (gens.size() != cdim) {
            simplicial = false;
            smooth = false;
            continue;
        }
        if (!gens.empty()) {
            auto factors = smith_invariant_factors(IntMatrix::from_rows(gens, d));
            for (const auto& x : factors)
                if (x != 1) smooth = false;
        }
    }
    rep.is_simplicial = simplicial;
    rep.is_smooth = simplicial && smooth;

    bool complete = pure;
    if (complete && d > 0) {
        for (size_t i = 0; i < cones.size() && complete; ++i) {
            for (const auto& facet : cones[i].facets()) {
                std::vector<IntVec> eq = {facet};
                Cone wall = Cone::from_inequalities(cones[i].facets(), eq, d);
                size_t count = 0;
                for (const auto& other : cones)
                    if (other.contains_cone(wall)) ++count;
                if (count != 2) {
                    complete = false;
                    break;
                }
            }
        }
    }
    rep.is_complete = complete;
    if (rep.is_simplicial && rep.is_complete) rep.picard_number = rep.ray_count - d;
    return rep;
}

namespace {

bool try_matching(const Fan& f, const Fan& g, const std::vector<size_t>& basis,
                  const std::vector<size_t>& image, IntMatrix& out) {
    size_t d = f.rank();
    std::vector<IntVec> rrows, srows;
    for (size_t k = 0; k < d; ++k) {
        rrows.push_back(f.rays()[basis[k]]);
        srows.push_back(g.rays()[image[k]]);
    }
    // Want m with m * r_k = s_k, i.e. R^T m^T = S^T columnwise:
    // row_i(m) solves R^T_rows * x = (s_k[i])_k.
    IntMatrix rt(d, d);
    for (size_t k = 0; k < d; ++k)
        for (size_t i = 0; i < d; ++i) rt.at(i, k) = rrows[k][i];
    // rt columns are r_k; solving rt^T x = b means x dot r_k = b_k.
    IntMatrix rtt = rt.transpose();
    IntMatrix m(d, d);
    for (size_t i = 0; i < d; ++i) {
        RatVec b(d);
        for (size_t k = 0; k < d; ++k) b[k] = Rat(srows[k][i]);
        auto sol = solve_rational(rtt, b);
        if (!sol) return false;
        for (size_t j = 0; j < d; ++j) {
            if (den((*sol)[j]) != 1) return false;
            m.at(i, j) = num((*sol)[j]);
        }
    }
    if (!is_unimodular(m)) return false;
    // Ray bijection.
    std::map<IntVec, size_t> gindex;
    for (size_t i = 0; i < g.rays().size(); ++i) gindex[g.rays()[i]] = i;
    std::vector<size_t> perm(f.rays().size());
    for (size_t i = 0; i < f.rays().size(); ++i) {
        auto it = gindex.find(m.mul(f.rays()[i]));
        if (it == gindex.end()) return false;
        perm[i] = it->second;
    }
    std::set<size_t> seen(perm.begin(), perm.end());
    if (seen.size() != perm.size()) return false;
    // Cone correspondence.
    std::set<std::vector<size_t>> gcones(g.max_cones().begin(), g.max_cones().end());
    for (const auto& c : f.max_cones()) {
        std::vector<size_t> img;
        for (size_t i : c) img.push_back(perm[i]);
        std::sort(img.begin(), img.end());
        if (!gcones.count(img)) return false;
    }
    out = m;
    return true;
}

} // namespace

std::optional<IntMatrix> fan_isomorphic(const Fan& f, const Fan& g, size_t ray_cap) {
    if (f.rank() != g.rank()) throw Error("fan_isomorphic: rank mismatch");
    size_t d = f.rank();
    if (f == g) return IntMatrix::identity(d);
    if (f.rays().size() != g.rays().size()) return std::nullopt;
    if (f.max_cones().size() != g.max_cones().size()) return std::nullopt;
    if (f.rays().size() > ray_cap)
        throw Error("fan_isomorphic: ray count exceeds search cap");
    if (d == 0) return IntMatrix::identity(0);

    auto degrees = [](const Fan& fan) {
        std::vector<size_t> deg(fan.rays().size(), 0);
        for (const auto& c : fan.max_cones())
            for (size_t i : c) ++deg[i];
        return deg;
    };
    auto sizes = [](const Fan& fan) {
        std::vector<size_t> s;
        for (const auto& c : fan.max_cones()) s.push_back(c.size());
        std::sort(s.begin(), s.end());
        return s;
    };
    if (sizes(f) != sizes(g)) return std::nullopt;
    std::vector<size_t> degf = degrees(f), degg = degrees(g);
    {
        auto a = degf, b = degg;
        std::sort(a.begin(), a.end());
        std::sort(b.begin(), b.end());
        if (a != b) return std::nullopt;
    }

    // Pick a lattice basis among f's rays.
    std::vector<size_t> basis;
    {
        std::vector<IntVec> picked;
        for (size_t i = 0; i < f.rays().size() && basis.size() < d; ++i) {
            picked.push_back(f.rays()[i]);
            if (rank_of_rows(picked) == picked.size())
                basis.push_back(i);
            else
                picked.pop_back();
        }
    }
    if (basis.size() < d) throw Error("fan_isomorphic: rays do not span the lattice");

    std::vector<size_t> image(d);
    std::vector<bool> used(g.rays().size(), false);
    IntMatrix out;
    // Depth-first over ordered image tuples with degree pruning.
    std::function<bool(size_t)> rec = [&](size_t pos) -> bool {
        if (pos == d) return try_matching(f, g, basis, image, out);
        for (size_t j = 0; j < g.rays().size(); ++j) {
            if (used[j] || degg[j] != degf[basis[pos]]) continue;
            used[j] = true;
            image[pos] = j;
            if (rec(pos + 1)) return true;
            used[j] = false;
        }
        return false;
    };
    if (rec(0)) return out;
    return std::nullopt;
}

bool is_coarsening(const Fan& coarse, const Fan& fine) {
    if (coarse.rank() != fine.rank()) return false;
    std::vector<Cone> coarse_cones = coarse.cones();
    for (const auto& fc : fine.cones()) {
        bool inside = false;
        for (const auto& cc : coarse_cones)
            if (cc.contains_cone(fc)) {
                inside = true;
                break;
            }
        if (!inside) return false;
    }
    return true;
}

bool fan_is_valid(const Fan& f, size_t pair_cap) {
    auto cones = f.cones();
    size_t n = cones.size();
    size_t step = 1;
    if (n * n > pair_cap && n > 1) step = (n * n) / pair_cap + 1;
    for (size_t i = 0; i < n; ++i)
        for (size_t j = i + 1; j < n; j += step) {
            Cone inter = cones[i].intersect(cones[j]);
            if (!cones[i].has_face(inter) || !cones[j].has_face(inter)) return false;
        }
    return true;
}

bool is_union_of_cones(const Fan& f, const Cone& c) {
    auto cones = f.cones();
    bool met = false;
    for (const auto& m : cones) {
        Cone inter = m.intersect(c);
        if (!inter.is_zero_cone()) met = true;
        if (!m.has_face(inter)) return false;
    }
    if (c.is_zero_cone()) return true;
    return met;
}

namespace {

struct CellKey {
    std::vector<IntVec> rays;
    bool operator<(const CellKey& o) const { return rays < o.rays; }
};

} // namespace

ChamberFanResult chamber_fan_with_reps(const std::vector<Cone>& orbit_cones, size_t rank) {
    if (rank == 0) {
        ChamberFanResult res;
        res.fan = Fan::trivial(0);
        res.chambers.push_back(Cone::zero(0));
        res.representatives.push_back(IntVec{});
        return res;
    }
    // Deduplicate, keep the full-dimensional cones for the pattern family.
    std::set<Cone> uniq(orbit_cones.begin(), orbit_cones.end());
    std::vector<Cone> family;
    for (const auto& c : uniq)
        if (c.dim() == rank) family.push_back(c);
    if (family.empty()) throw Error("chamber_fan: no full-dimensional cone in the family");

    std::set<IntVec> hset;
    for (const auto& c : family)
        for (const auto& fct : c.facets()) hset.insert(canonical_sign(fct));
    std::vector<IntVec> hyperplanes(hset.begin(), hset.end());

    auto pattern_of = [&](const IntVec& y) {
        std::vector<size_t> pat;
        for (size_t i = 0; i < family.size(); ++i)
            if (family[i].contains(y)) pat.push_back(i);
        return pat;
    };
    auto cell_of = [&](const std::vector<size_t>& pat) {
        std::vector<IntVec> ineqs, eqs;
        for (size_t i : pat) {
            const auto& fc = family[i].facets();
            ineqs.insert(ineqs.end(), fc.begin(), fc.end());
            const auto& eq = family[i].span_equations();
            eqs.insert(eqs.end(), eq.begin(), eq.end());
        }
        std::sort(ineqs.begin(), ineqs.end());
        ineqs.erase(std::unique(ineqs.begin(), ineqs.end()), ineqs.end());
        return Cone::from_inequalities(ineqs, eqs, rank);
    };

    std::map<CellKey, std::pair<Cone, IntVec>> cells;
    std::deque<Cone> queue;

    auto visit = [&](const IntVec& y) -> bool {
        auto pat = pattern_of(y);
        if (pat.empty()) return false;
        Cone c = cell_of(pat);
        if (!c.is_pointed())
            throw Error("chamber_fan: non-pointed cell (quotient is not projective over a point)");
        CellKey key{c.rays()};
        if (cells.count(key)) return true;
        IntVec rep = c.interior_point();
        cells.emplace(key, std::make_pair(c, rep));
        queue.push_back(c);
        return true;
    };

    for (const auto& c : family) visit(generic_point(c, hyperplanes));

    while (!queue.empty()) {
        Cone c = queue.front();
        queue.pop_front();
        for (const auto& facet : c.facets()) {
            std::vector<IntVec> eq = {facet};
            Cone wall = Cone::from_inequalities(c.facets(), eq, rank);
            IntVec w = wall.interior_point();
            IntVec y = crossing_point(w, facet, hyperplanes);
            visit(y);
        }
    }

    ChamberFanResult res;
    std::vector<Cone> max_cones;
    for (auto& [key, val] : cells) max_cones.push_back(val.first);
    res.fan = Fan::from_cones(max_cones, rank);
    // Align chambers and representatives with the fan's canonical cone order.
    for (size_t i = 0; i < res.fan.max_cones().size(); ++i) {
        Cone c = res.fan.cone(i);
        auto it = cells.find(CellKey{c.rays()});
        if (it == cells.end()) throw Error("chamber_fan: internal cone mismatch");
        res.chambers.push_back(it->second.first);
        res.representatives.push_back(it->second.second);
    }
    return res;
}

Fan chamber_fan(const std::vector<Cone>& orbit_cones, size_t rank) {
    return chamber_fan_with_reps(orbit_cones, rank).fan;
}

namespace {

// Arrangement-based refinement for a general family (see header).
Fan refinement_full_dim(const std::vector<Cone>& full, const std::vector<Cone>& lower,
                        size_t rank) {
    std::set<IntVec> hset;
    for (const auto& c : full)
        for (const auto& f : c.facets()) hset.insert(canonical_sign(f));
    for (const auto& c : lower)
        for (const auto& e : c.span_equations()) hset.insert(canonical_sign(e));
    std::vector<IntVec> hyperplanes(hset.begin(), hset.end());

    struct Cell {
        Cone cone;
        IntVec sample;
        std::vector<size_t> pattern;
        std::vector<int> signs;
    };
    auto signs_of = [&](const IntVec& y) {
        std::vector<int> s(hyperplanes.size());
        for (size_t i = 0; i < hyperplanes.size(); ++i) {
            Int v = dot(hyperplanes[i], y);
            if (v == 0) throw Error("common_refinement: sample not generic");
            s[i] = v > 0 ? 1 : -1;
        }
        return s;
    };
    auto cell_cone = [&](const std::vector<int>& s) {
        std::vector<IntVec> ineqs;
        for (size_t i = 0; i < hyperplanes.size(); ++i)
            ineqs.push_back(s[i] > 0 ? hyperplanes[i] : negate(hyperplanes[i]));
        return Cone::from_inequalities(ineqs, {}, rank);
    };
    auto pattern_of = [&](const IntVec& y) {
        std::vector<size_t> pat;
        for (size_t i = 0; i < full.size(); ++i)
            if (full[i].contains(y)) pat.push_back(i);
        return pat;
    };

    std::map<std::vector<int>, size_t> index;
    std::vector<Cell> cells;
    std::deque<size_t> queue;
    auto visit = [&](const IntVec& y) -> long {
        auto pat = pattern_of(y);
        if (pat.empty()) return -1;
        auto s = signs_of(y);
        auto it = index.find(s);
        if (it != index.end()) return long(it->second);
        Cell cell{cell_cone(s), y, pat, s};
        if (!cell.cone.is_pointed())
            throw Error("common_refinement: non-pointed cell");
        cells.push_back(std::move(cell));
        index[cells.back().signs] = cells.size() - 1;
        queue.push_back(cells.size() - 1);
        return long(cells.size() - 1);
    };

    for (const auto& c : full) visit(generic_point(c, hyperplanes));

    // Union-find over cells; merge across invisible equal-pattern walls.
    std::vector<size_t> parent;
    std::function<size_t(size_t)> find = [&](size_t x) -> size_t {
        while (parent[x] != x) x = parent[x] = parent[parent[x]];
        return x;
    };

    std::vector<std::tuple<size_t, size_t, Cone>> edges;
    while (!queue.empty()) {
        size_t ci = queue.front();
        queue.pop_front();
        Cone c = cells[ci].cone;
        for (const auto& facet : c.facets()) {
            std::vector<IntVec> eq = {facet};
            Cone wall = Cone::from_inequalities(c.facets(), eq, rank);
            IntVec w = wall.interior_point();
            IntVec y = crossing_point(w, facet, hyperplanes);
            long nb = visit(y);
            if (nb >= 0 && size_t(nb) != ci) edges.emplace_back(ci, size_t(nb), wall);
        }
    }
    parent.resize(cells.size());
    for (size_t i = 0; i < cells.size(); ++i) parent[i] = i;
    for (auto& [a, b, wall] : edges) {
        if (cells[a].pattern != cells[b].pattern) continue;
        bool blocked = false;
        for (const auto& l : lower) {
            Cone inter = wall.intersect(l);
            if (inter.dim() == rank - 1) {
                blocked = true;
                break;
            }
        }
        if (!blocked) {
            size_t ra = find(a), rb = find(b);
            if (ra != rb) parent[ra] = rb;
        }
    }

    std::map<size_t, std::vector<size_t>> classes;
    for (size_t i = 0; i < cells.size(); ++i) classes[find(i)].push_back(i);

    std::vector<Cone> out;
    for (auto& [root, members] : classes) {
        if (members.size() == 1) {
            out.push_back(cells[members[0]].cone);
            continue;
        }
        std::vector<IntVec> gens;
        for (size_t m : members)
            for (const auto& r : cells[m].cone.rays()) gens.push_back(r);
        Cone hull = Cone::from_generators(gens, rank);
        // Cross-check against the intersection of the cones in the common
        // membership pattern; a mismatch means the family is outside the
        // supported (face-compatible) class.
        std::vector<IntVec> ineqs;
        for (size_t i : cells[members[0]].pattern) {
            const auto& fc = full[i].facets();
            ineqs.insert(ineqs.end(), fc.begin(), fc.end());
        }
        Cone inter = Cone::from_inequalities(ineqs, {}, rank);
        if (inter != hull)
            throw Error("common_refinement: merged class is not an intersection cell "
                        "(unsupported input family)");
        out.push_back(hull);
    }
    return Fan::from_cones(out, rank);
}

} // namespace

Fan common_refinement(const std::vector<Cone>& cones, size_t rank) {
    if (cones.empty()) throw Error("common_refinement: empty input");
    for (const auto& c : cones)
        if (c.rank() != rank) throw Error("common_refinement: rank mismatch");
    if (rank == 0) return Fan::trivial(0);

    size_t maxdim = 0;
    for (const auto& c : cones) maxdim = std::max(maxdim, c.dim());

    if (maxdim < rank) {
        // All inputs lower-dimensional: they must share one linear span,
        // in which case we refine inside that span and lift back.
        std::vector<IntVec> all_gens;
        for (const auto& c : cones)
            for (const auto& g : c.generators()) all_gens.push_back(g);
        if (all_gens.empty()) return Fan::trivial(rank);
        IntMatrix span = row_lattice_basis(IntMatrix::from_rows(all_gens, rank));
        for (const auto& c : cones)
            if (rank_of_rows([&] {
                    auto g = c.generators();
                    for (size_t i = 0; i < span.rows(); ++i) g.push_back(span.row(i));
                    return g;
                }()) != span.rows())
                throw Error("common_refinement: lower-dimensional cones with mixed spans "
                            "are not supported");
        // Project onto span coordinates (saturated basis, exact).
        IntMatrix basis = integer_kernel(integer_kernel(span)); // saturation
        size_t k = basis.rows();
        IntMatrix bt = basis.transpose();
        std::vector<Cone> projected;
        for (const auto& c : cones) {
            std::vector<IntVec> gens;
            for (const auto& g : c.generators()) {
                RatVec rg(g.size());
                for (size_t i = 0; i < g.size(); ++i) rg[i] = Rat(g[i]);
                auto t = solve_rational(bt, rg);
                if (!t) throw Error("common_refinement: span projection failed");
                IntVec ti(k);
                for (size_t i = 0; i < k; ++i) {
                    if (den((*t)[i]) != 1) throw Error("common_refinement: non-integral projection");
                    ti[i] = num((*t)[i]);
                }
                gens.push_back(ti);
            }
            projected.push_back(Cone::from_generators(gens, k));
        }
        Fan inner = common_refinement(projected, k);
        std::vector<Cone> lifted;
        for (size_t i = 0; i < inner.max_cones().size(); ++i) {
            std::vector<IntVec> gens;
            for (size_t idx : inner.max_cones()[i]) gens.push_back(bt.mul(inner.rays()[idx]));
            lifted.push_back(Cone::from_generators(gens, rank));
        }
        return Fan::from_cones(lifted, rank);
    }

    std::vector<Cone> full, lower;
    std::set<Cone> uniq(cones.begin(), cones.end());
    for (const auto& c : uniq) {
        if (c.dim() == rank)
            full.push_back(c);
        else if (!c.is_zero_cone())
            lower.push_back(c);
    }
    // Lower-dimensional cones must be covered by the full-dimensional ones.
    for (const auto& l : lower) {
        auto check = [&](const IntVec& x) {
            for (const auto& f : full)
                if (f.contains(x)) return true;
            return false;
        };
        bool ok = check(l.interior_point());
        for (const auto& g : l.generators()) ok = ok && check(g);
        if (!ok)
            throw Error("common_refinement: lower-dimensional cone not covered by "
                        "full-dimensional inputs (unsupported)");
    }
    return refinement_full_dim(full, lower, rank);
}

} // namespace quotfan
