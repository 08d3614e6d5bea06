#include "quotfan/mutations.hpp"

#include <algorithm>
#include <random>
#include <set>
#include <sstream>

namespace quotfan {

AffineRationalMap AffineRationalMap::identity(size_t nvars) {
    AffineRationalMap m;
    m.nvars = nvars;
    for (size_t i = 0; i < nvars; ++i) m.comps.push_back(RationalFunction::variable(nvars, i));
    return m;
}

AffineRationalMap AffineRationalMap::compose_after(const AffineRationalMap& inner) const {
    if (inner.comps.size() != nvars) throw Error("AffineRationalMap: arity mismatch");
    AffineRationalMap out;
    out.nvars = inner.nvars;
    for (const auto& c : comps) out.comps.push_back(c.substitute(inner.comps));
    return out;
}

size_t grassmann_chart_var(size_t n, size_t k, size_t j, size_t l) {
    if (j > k || l < k + 1 || l > n) throw Error("grassmann_chart_var: index out of range");
    return j * (n - k) + (l - k - 1);
}

AffineRationalMap grassmann_weyl_chart_map(size_t n, size_t k, size_t i) {
    if (i < 1 || i > n) throw Error("grassmann_weyl_chart_map: need 1 <= i <= n");
    const size_t nv = (k + 1) * (n - k);
    auto u = [&](size_t j, size_t l) {
        return RationalFunction::variable(nv, grassmann_chart_var(n, k, j, l));
    };
    AffineRationalMap m;
    m.nvars = nv;
    m.comps.resize(nv, RationalFunction::constant(nv, 0));
    auto set = [&](size_t j, size_t l, const RationalFunction& f) {
        m.comps[grassmann_chart_var(n, k, j, l)] = f;
    };
    if (i <= k) {
        // Transposition of the upper indices i-1 <-> i.
        for (size_t j = 0; j <= k; ++j) {
            size_t jj = j;
            if (j == i - 1) jj = i;
            else if (j == i) jj = i - 1;
            for (size_t l = k + 1; l <= n; ++l) set(j, l, u(jj, l));
        }
    } else if (i > k + 1) {
        // Transposition of the lower indices i-1 <-> i.
        for (size_t j = 0; j <= k; ++j)
            for (size_t l = k + 1; l <= n; ++l) {
                size_t ll = l;
                if (l == i - 1) ll = i;
                else if (l == i) ll = i - 1;
                set(j, l, u(j, ll));
            }
    } else {
        // i = k + 1: the bordered-matrix case, dividing by u^k_{k+1}.
        RationalFunction pivot = u(k, k + 1);
        for (size_t j = 0; j + 1 <= k; ++j) {
            set(j, k + 1, -u(j, k + 1) / pivot);
            for (size_t l = k + 2; l <= n; ++l)
                set(j, l, (pivot * u(j, l) - u(k, l) * u(j, k + 1)) / pivot);
        }
        set(k, k + 1, pivot.inverse());
        for (size_t l = k + 2; l <= n; ++l) set(k, l, u(k, l) / pivot);
    }
    return m;
}

AffineRationalMap grassmann_quotient_map(size_t n, size_t k) {
    if (k < 1 || k + 2 > n) throw Error("grassmann_quotient_map: need 1 <= k <= n-2");
    const size_t nv = (k + 1) * (n - k);
    auto u = [&](size_t j, size_t l) {
        return RationalFunction::variable(nv, grassmann_chart_var(n, k, j, l));
    };
    AffineRationalMap m;
    m.nvars = nv;
    for (size_t j = 0; j + 1 <= k; ++j)
        for (size_t l = k + 1; l + 1 <= n; ++l)
            m.comps.push_back((u(j, l) * u(k, n)) / (u(k, l) * u(j, n)));
    return m;
}

namespace {

size_t z_var(size_t n, size_t k, size_t j, size_t l) {
    // Factor j = 0..k-1, coordinate l = k+1..n within the factor.
    return j * (n - k) + (l - k - 1);
}

} // namespace

MultiProjectiveMap mutation_map(size_t n, size_t k, size_t i) {
    if (k < 1 || k + 2 > n) throw Error("mutation_map: need 1 <= k <= n-2");
    if (i < 1 || i > n) throw Error("mutation_map: need 1 <= i <= n");
    const size_t m = n - k;      // coordinates per factor
    const size_t nv = k * m;     // total homogeneous coordinates
    std::vector<size_t> dims(k, n - k - 1);
    auto z = [&](size_t j, size_t l) { return Polynomial::variable(nv, z_var(n, k, j, l)); };

    std::vector<std::vector<Polynomial>> comps(k);
    if (i + 1 <= k) {
        // Factor swap on the upper index.
        for (size_t j = 0; j < k; ++j) {
            size_t jj = j;
            if (j == i - 1) jj = i;
            else if (j == i) jj = i - 1;
            for (size_t l = k + 1; l <= n; ++l) comps[j].push_back(z(jj, l));
        }
    } else if (i == k) {
        // ([z^0/z^{k-1}], ..., [z^{k-2}/z^{k-1}], [1/z^{k-1}]) cleared by
        // the product of the z^{k-1} coordinates.
        for (size_t j = 0; j < k; ++j)
            for (size_t l = k + 1; l <= n; ++l) {
                Polynomial t = Polynomial::constant(nv, 1);
                for (size_t lp = k + 1; lp <= n; ++lp)
                    if (lp != l) t = t * z(k - 1, lp);
                if (j + 1 < k) t = t * z(j, l);
                comps[j].push_back(t);
            }
    } else if (i == k + 1) {
        // The projective involution applied factorwise.
        for (size_t j = 0; j < k; ++j) {
            comps[j].push_back(-z(j, k + 1));
            for (size_t l = k + 2; l <= n; ++l) comps[j].push_back(z(j, l) - z(j, k + 1));
        }
    } else {
        // Lower-index coordinate transposition i-1 <-> i.
        for (size_t j = 0; j < k; ++j)
            for (size_t l = k + 1; l <= n; ++l) {
                size_t ll = l;
                if (l == i - 1) ll = i;
                else if (l == i) ll = i - 1;
                comps[j].push_back(z(j, ll));
            }
    }
    return MultiProjectiveMap(dims, dims, std::move(comps));
}

AffineRationalMap mutation_map_affine(size_t n, size_t k, size_t i) {
    MultiProjectiveMap mp = mutation_map(n, k, i);
    const size_t m = n - k;
    const size_t ny = k * (m - 1); // affine chart variables y^j_l, l < n
    // Dictionary z^j_l = y^j_l (l < n), z^j_n = 1.
    std::vector<RationalFunction> zsub;
    for (size_t j = 0; j < k; ++j)
        for (size_t l = k + 1; l <= n; ++l) {
            if (l == n) zsub.push_back(RationalFunction::constant(ny, 1));
            else zsub.push_back(RationalFunction::variable(ny, j * (m - 1) + (l - k - 1)));
        }
    AffineRationalMap out;
    out.nvars = ny;
    for (size_t j = 0; j < k; ++j) {
        const auto& comps = mp.components()[j];
        // y'^j_l = F^j_l / F^j_n.
        RationalFunction denom = RationalFunction(comps.back()).substitute(zsub);
        if (denom.is_zero()) throw Error("mutation_map_affine: last coordinate vanishes");
        for (size_t l = k + 1; l + 1 <= n; ++l) {
            RationalFunction numer =
                RationalFunction(comps[l - k - 1]).substitute(zsub);
            out.comps.push_back(numer / denom);
        }
    }
    return out;
}

namespace {

struct RelationWord {
    std::string name;
    std::vector<size_t> letters; // generator indices, 0-based
};

std::vector<RelationWord> coxeter_relations(size_t count) {
    std::vector<RelationWord> words;
    for (size_t i = 0; i < count; ++i)
        words.push_back({"r" + std::to_string(i + 1) + "^2", {i, i}});
    for (size_t i = 0; i + 1 < count; ++i) {
        std::vector<size_t> w;
        for (int rep = 0; rep < 3; ++rep) {
            w.push_back(i);
            w.push_back(i + 1);
        }
        words.push_back(
            {"(r" + std::to_string(i + 1) + " r" + std::to_string(i + 2) + ")^3", w});
    }
    for (size_t i = 0; i < count; ++i)
        for (size_t j = i + 2; j < count; ++j)
            words.push_back({"(r" + std::to_string(i + 1) + " r" + std::to_string(j + 1) + ")^2",
                             {i, j, i, j}});
    return words;
}

Rat random_rat(std::mt19937_64& rng) {
    std::uniform_int_distribution<long> numd(-1000, 1000);
    std::uniform_int_distribution<long> dend(1, 1000);
    return Rat(Int(numd(rng)), Int(dend(rng)));
}

std::string first_minor_witness(const MultiProjectiveMap& a, const MultiProjectiveMap& b) {
    for (size_t t = 0; t < a.components().size(); ++t) {
        const auto& fa = a.components()[t];
        const auto& fb = b.components()[t];
        for (size_t i = 0; i < fa.size(); ++i)
            for (size_t j = i + 1; j < fa.size(); ++j) {
                Polynomial minor = fa[i] * fb[j] - fa[j] * fb[i];
                if (!minor.is_zero()) {
                    std::ostringstream os;
                    os << "factor " << t << " minor(" << i << "," << j
                       << ") = " << minor.primitive_part().to_string();
                    return os.str();
                }
            }
    }
    return "";
}

} // namespace

RelationReport verify_coxeter(const std::vector<MultiProjectiveMap>& maps, VerifyMode mode,
                              std::uint64_t seed) {
    if (maps.empty()) throw Error("verify_coxeter: no generators");
    const auto& dims = maps[0].source_dims();
    for (const auto& m : maps)
        if (m.source_dims() != dims || m.target_dims() != dims)
            throw Error("verify_coxeter: signature mismatch");
    size_t nv = maps[0].source_var_count();
    bool symbolic = mode == VerifyMode::symbolic ||
                    (mode == VerifyMode::automatic && nv <= 4);

    RelationReport report;
    report.mode = symbolic ? "symbolic" : "evaluation";
    report.seed = seed;
    MultiProjectiveMap id = MultiProjectiveMap::identity(dims);

    std::mt19937_64 rng(seed);
    for (const auto& rel : coxeter_relations(maps.size())) {
        RelationCheck check;
        check.relation = rel.name;
        if (symbolic) {
            MultiProjectiveMap acc = id;
            for (size_t letter : rel.letters) acc = compose(maps[letter], acc);
            check.holds = maps_equal(acc, id);
            if (!check.holds) check.witness = first_minor_witness(acc, id);
        } else {
            size_t good = 0, attempts = 0;
            bool failed = false;
            while (good < 20 && attempts < 400 && !failed) {
                ++attempts;
                std::vector<RatVec> pt;
                for (size_t d : dims) {
                    RatVec v(d + 1);
                    for (auto& x : v) x = random_rat(rng);
                    pt.push_back(v);
                }
                try {
                    std::vector<RatVec> image = pt;
                    // Apply the word right-to-left: the composite acts as
                    // maps[l1](maps[l2](...)).
                    for (auto it = rel.letters.rbegin(); it != rel.letters.rend(); ++it)
                        image = apply_point(maps[*it], image);
                    std::vector<RatVec> expect;
                    for (const auto& v : pt) expect.push_back(normalize_projective_point(v));
                    if (image != expect) {
                        failed = true;
                        check.witness = "counterexample at sample " + std::to_string(attempts);
                    } else {
                        ++good;
                    }
                } catch (const Error&) {
                    continue; // indeterminate point, resample
                }
            }
            check.holds = !failed && good >= 20;
            if (!check.holds && check.witness.empty())
                check.witness = "insufficient generic samples";
        }
        report.all_hold = report.all_hold && check.holds;
        report.checks.push_back(std::move(check));
    }
    return report;
}

RelationReport verify_equivariance(size_t n, size_t k, VerifyMode mode, std::uint64_t seed) {
    const size_t nu = (k + 1) * (n - k);
    AffineRationalMap q = grassmann_quotient_map(n, k);
    bool symbolic = mode == VerifyMode::symbolic ||
                    (mode == VerifyMode::automatic && nu <= 6);

    RelationReport report;
    report.mode = symbolic ? "symbolic" : "evaluation";
    report.seed = seed;
    std::mt19937_64 rng(seed);

    for (size_t i = 1; i <= n; ++i) {
        RelationCheck check;
        check.relation = "q o r_" + std::to_string(i) + " = mu(r_" + std::to_string(i) + ") o q";
        AffineRationalMap chart = grassmann_weyl_chart_map(n, k, i);
        AffineRationalMap mu = mutation_map_affine(n, k, i);
        if (symbolic) {
            AffineRationalMap lhs = q.compose_after(chart);
            AffineRationalMap rhs = mu.compose_after(q);
            check.holds = lhs == rhs;
            if (!check.holds) {
                for (size_t c = 0; c < lhs.comps.size(); ++c)
                    if (lhs.comps[c] != rhs.comps[c]) {
                        check.witness = "component " + std::to_string(c) + ": " +
                                        (lhs.comps[c] - rhs.comps[c]).to_string();
                        break;
                    }
            }
        } else {
            size_t good = 0, attempts = 0;
            bool failed = false;
            while (good < 20 && attempts < 600 && !failed) {
                ++attempts;
                RatVec u(nu);
                for (auto& x : u) x = random_rat(rng);
                auto eval_map = [&](const AffineRationalMap& m,
                                    const RatVec& x) -> std::optional<RatVec> {
                    RatVec out;
                    for (const auto& c : m.comps) {
                        auto v = c.eval(x);
                        if (!v) return std::nullopt;
                        out.push_back(*v);
                    }
                    return out;
                };
                auto ru = eval_map(chart, u);
                if (!ru) continue;
                auto lhs = eval_map(q, *ru);
                if (!lhs) continue;
                auto qu = eval_map(q, u);
                if (!qu) continue;
                auto rhs = eval_map(mu, *qu);
                if (!rhs) continue;
                if (*lhs != *rhs) {
                    failed = true;
                    check.witness = "counterexample at sample " + std::to_string(attempts);
                } else {
                    ++good;
                }
            }
            check.holds = !failed && good >= 20;
            if (!check.holds && check.witness.empty())
                check.witness = "insufficient generic samples";
        }
        report.all_hold = report.all_hold && check.holds;
        report.checks.push_back(std::move(check));
    }
    return report;
}

std::vector<RatVec> lines_marked_points(size_t n) {
    if (n < 3) throw Error("lines_marked_points: need n >= 3");
    const size_t m = n - 1; // homogeneous coordinates of P^{n-2}
    std::vector<RatVec> pts;
    pts.push_back(RatVec(m, Rat(1)));
    for (size_t i = 0; i < m; ++i) {
        RatVec v(m, Rat(0));
        v[i] = 1;
        pts.push_back(v);
    }
    return pts;
}

std::vector<RatVec> lines_point_orbit(size_t n) {
    std::vector<MultiProjectiveMap> gens;
    for (size_t i = 2; i <= n; ++i) gens.push_back(mutation_map(n, 1, i));
    std::set<std::vector<Rat>> seen;
    std::vector<RatVec> orbit;
    std::vector<RatVec> queue = {normalize_projective_point(lines_marked_points(n)[0])};
    seen.insert(queue[0]);
    while (!queue.empty()) {
        RatVec p = queue.back();
        queue.pop_back();
        orbit.push_back(p);
        for (const auto& g : gens) {
            auto img = apply_point(g, {p})[0];
            if (seen.insert(img).second) queue.push_back(img);
        }
    }
    std::sort(orbit.begin(), orbit.end());
    return orbit;
}

} // namespace quotfan
