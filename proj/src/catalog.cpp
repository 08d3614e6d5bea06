#include "quotfan/catalog.hpp"

#include <algorithm>
#include <numeric>

namespace quotfan {

ChartSpec ChartSpec::ptpn(size_t n) {
    if (n < 2) throw Error("ptpn: need n >= 2");
    return ChartSpec{ChartFamily::ptpn, n, 0, 0};
}

ChartSpec ChartSpec::quadric_odd(size_t n) {
    if (n < 2) throw Error("quadric_odd: need n >= 2");
    return ChartSpec{ChartFamily::quadric_odd, n, 0, 0};
}

ChartSpec ChartSpec::quadric_even(size_t n) {
    if (n < 3) throw Error("quadric_even: need n >= 3");
    return ChartSpec{ChartFamily::quadric_even, n, 0, 0};
}

ChartSpec ChartSpec::grassmann(size_t n, size_t k) {
    if (k < 1 || k + 2 > n) throw Error("grassmann: need 1 <= k <= n-2");
    return ChartSpec{ChartFamily::grassmann, n, k, 0};
}

ChartSpec ChartSpec::product_diagonal(size_t k, size_t copies) {
    if (k < 1 || copies < 2) throw Error("product_diagonal: need k >= 1, copies >= 2");
    return ChartSpec{ChartFamily::product_diagonal, 0, k, copies};
}

ChartSpec ChartSpec::parse(const std::string& family, size_t n, size_t k, size_t copies) {
    if (family == "ptpn") return ptpn(n);
    if (family == "quadric_odd") return quadric_odd(n);
    if (family == "quadric_even") return quadric_even(n);
    if (family == "grassmann") return grassmann(n, k);
    if (family == "product_diagonal") return product_diagonal(k, copies);
    throw Error("unknown chart family '" + family + "'");
}

std::string ChartSpec::name() const {
    switch (family) {
        case ChartFamily::ptpn: return "ptpn(n=" + std::to_string(n) + ")";
        case ChartFamily::quadric_odd: return "quadric_odd(n=" + std::to_string(n) + ")";
        case ChartFamily::quadric_even: return "quadric_even(n=" + std::to_string(n) + ")";
        case ChartFamily::grassmann:
            return "grassmann(n=" + std::to_string(n) + ",k=" + std::to_string(k) + ")";
        case ChartFamily::product_diagonal:
            return "product_diagonal(k=" + std::to_string(k) +
                   ",copies=" + std::to_string(copies) + ")";
    }
    return "?";
}

IntMatrix delta_block(size_t m) {
    IntMatrix d(m, m + 1);
    for (size_t i = 0; i < m; ++i) {
        d.at(i, i) = 1;
        d.at(i, m) = -1;
    }
    return d;
}

WeightSystem chart_weights(const ChartSpec& spec) {
    switch (spec.family) {
        case ChartFamily::ptpn: {
            const size_t n = spec.n;
            IntMatrix w(n, 2 * n - 1);
            std::vector<std::string> labels;
            // Weights alpha_1, alpha_1+alpha_2, ..., alpha_1+...+alpha_n,
            // alpha_2+...+alpha_n, ..., alpha_n in the simple-root basis.
            for (size_t j = 0; j < n; ++j) {
                for (size_t i = 0; i <= j; ++i) w.at(i, j) = 1;
                labels.push_back("x" + std::to_string(j + 1));
            }
            for (size_t j = 1; j < n; ++j) {
                for (size_t i = j; i < n; ++i) w.at(i, n - 1 + j) = 1;
                labels.push_back("x" + std::to_string(n + j));
            }
            return WeightSystem(w, labels);
        }
        case ChartFamily::quadric_odd: {
            const size_t n = spec.n;
            IntMatrix w(n, 2 * n - 1);
            std::vector<std::string> labels;
            // Columns -e1, e_j - e1, -e_j - e1 in the order
            // (rho1, rho2+..rhon+, rho2-..rhon-).
            w.at(0, 0) = -1;
            labels.push_back("rho1");
            for (size_t j = 2; j <= n; ++j) {
                w.at(0, j - 1) = -1;
                w.at(j - 1, j - 1) = 1;
                labels.push_back("rho" + std::to_string(j) + "+");
            }
            for (size_t j = 2; j <= n; ++j) {
                w.at(0, n + j - 2) = -1;
                w.at(j - 1, n + j - 2) = -1;
                labels.push_back("rho" + std::to_string(j) + "-");
            }
            return WeightSystem(w, labels);
        }
        case ChartFamily::quadric_even: {
            const size_t n = spec.n;
            IntMatrix w(n, 2 * n - 2);
            std::vector<std::string> labels;
            for (size_t j = 2; j <= n; ++j) {
                w.at(0, j - 2) = -1;
                w.at(j - 1, j - 2) = 1;
                labels.push_back("rho" + std::to_string(j) + "+");
            }
            for (size_t j = 2; j <= n; ++j) {
                w.at(0, n + j - 3) = -1;
                w.at(j - 1, n + j - 3) = -1;
                labels.push_back("rho" + std::to_string(j) + "-");
            }
            return WeightSystem(w, labels);
        }
        case ChartFamily::grassmann: {
            const size_t n = spec.n, k = spec.k;
            const size_t cols = (k + 1) * (n - k);
            IntMatrix w(n, cols);
            std::vector<std::string> labels;
            // Coordinate u^j_l has weight t_l - t_j (t_0 = 0) in the t-basis;
            // columns in (j, l)-lexicographic order.
            size_t c = 0;
            for (size_t j = 0; j <= k; ++j)
                for (size_t l = k + 1; l <= n; ++l, ++c) {
                    w.at(l - 1, c) = 1;
                    if (j >= 1) w.at(j - 1, c) -= 1;
                    labels.push_back("u^" + std::to_string(j) + "_" + std::to_string(l));
                }
            return WeightSystem(w, labels);
        }
        case ChartFamily::product_diagonal:
            throw Error("chart_weights: product_diagonal has no chart weight matrix; "
                        "use diagonal_action_projection");
    }
    throw Error("chart_weights: unreachable");
}

IntMatrix expected_gale(const ChartSpec& spec) {
    switch (spec.family) {
        case ChartFamily::ptpn: {
            const size_t n = spec.n;
            IntMatrix g(n - 1, 2 * n - 1);
            for (size_t i = 0; i < n - 1; ++i) {
                g.at(i, i) = 1;
                g.at(i, n - 1) = -1;
                g.at(i, n + i) = 1;
            }
            return g;
        }
        case ChartFamily::quadric_odd: {
            const size_t n = spec.n;
            IntMatrix g(n - 1, 2 * n - 1);
            for (size_t i = 0; i < n - 1; ++i) {
                g.at(i, 0) = -2;
                g.at(i, 1 + i) = 1;
                g.at(i, n + i) = 1;
            }
            return g;
        }
        case ChartFamily::quadric_even: {
            const size_t n = spec.n;
            IntMatrix g(n - 2, 2 * n - 2);
            for (size_t i = 0; i < n - 2; ++i) {
                g.at(i, i) = -1;
                g.at(i, i + 1) = 1;
                g.at(i, n - 1 + i) = -1;
                g.at(i, n + i) = 1;
            }
            return g;
        }
        case ChartFamily::grassmann:
            return kronecker(delta_block(spec.k), delta_block(spec.n - spec.k - 1));
        case ChartFamily::product_diagonal:
            throw Error("expected_gale: not defined for product_diagonal");
    }
    throw Error("expected_gale: unreachable");
}

Fan standard_fan_projective(size_t dim) {
    if (dim == 0) return Fan::trivial(0);
    std::vector<IntVec> rays;
    for (size_t i = 0; i < dim; ++i) {
        IntVec e(dim, Int(0));
        e[i] = 1;
        rays.push_back(e);
    }
    rays.push_back(IntVec(dim, Int(-1)));
    std::vector<Cone> cones;
    for (size_t skip = 0; skip <= dim; ++skip) {
        std::vector<IntVec> gens;
        for (size_t i = 0; i <= dim; ++i)
            if (i != skip) gens.push_back(rays[i]);
        cones.push_back(Cone::from_generators(gens, dim));
    }
    return Fan::from_cones(cones, dim);
}

Fan standard_fan_product(const std::vector<size_t>& dims) {
    size_t total = std::accumulate(dims.begin(), dims.end(), size_t(0));
    if (total == 0) return Fan::trivial(0);
    std::vector<Fan> factors;
    for (size_t d : dims) factors.push_back(standard_fan_projective(d));
    // Embed each factor's rays in the block coordinates and take products
    // of maximal cones.
    std::vector<std::vector<std::vector<IntVec>>> embedded; // factor -> cone -> gens
    size_t offset = 0;
    for (size_t fidx = 0; fidx < factors.size(); ++fidx) {
        const Fan& f = factors[fidx];
        std::vector<std::vector<IntVec>> cones;
        for (const auto& mc : f.max_cones()) {
            std::vector<IntVec> gens;
            for (size_t ri : mc) {
                IntVec v(total, Int(0));
                for (size_t j = 0; j < f.rank(); ++j) v[offset + j] = f.rays()[ri][j];
                gens.push_back(v);
            }
            cones.push_back(gens);
        }
        embedded.push_back(cones);
        offset += f.rank();
    }
    std::vector<Cone> prod;
    std::vector<size_t> pick(factors.size(), 0);
    while (true) {
        std::vector<IntVec> gens;
        for (size_t i = 0; i < factors.size(); ++i)
            for (const auto& g : embedded[i][pick[i]]) gens.push_back(g);
        prod.push_back(Cone::from_generators(gens, total));
        size_t i = 0;
        while (i < factors.size() && ++pick[i] == embedded[i].size()) pick[i++] = 0;
        if (i == factors.size()) break;
    }
    return Fan::from_cones(prod, total);
}

Fan standard_fan_permutohedral(size_t dim) {
    if (dim < 1) throw Error("standard_fan_permutohedral: need dim >= 1");
    std::vector<size_t> base(dim + 1);
    std::iota(base.begin(), base.end(), 1);
    std::vector<RatVec> verts;
    std::vector<size_t> perm = base;
    std::sort(perm.begin(), perm.end());
    do {
        RatVec v(dim + 1);
        for (size_t i = 0; i <= dim; ++i) v[i] = Rat(Int(perm[i]));
        verts.push_back(v);
    } while (std::next_permutation(perm.begin(), perm.end()));
    Polytope p = Polytope::from_points(verts, {}, dim + 1);
    return normal_fan(p);
}

std::pair<Fan, IntMatrix> diagonal_action_projection(size_t k, size_t copies) {
    if (k < 1 || copies < 2) throw Error("diagonal_action_projection: need k >= 1, copies >= 2");
    std::vector<size_t> dims(copies, k);
    Fan f = standard_fan_product(dims);
    IntMatrix stacked(k, k * copies);
    for (size_t c = 0; c < copies; ++c)
        for (size_t i = 0; i < k; ++i) stacked.at(i, c * k + i) = 1;
    IntMatrix s = integer_kernel(stacked);
    return {f, s};
}

FixedPointWeightData fixed_point_weights(const ChartSpec& spec) {
    FixedPointWeightData data;
    switch (spec.family) {
        case ChartFamily::quadric_odd:
        case ChartFamily::quadric_even: {
            const size_t n = spec.n;
            for (size_t i = 1; i <= n; ++i) {
                IntVec w(n, Int(0));
                w[i - 1] = 1;
                data.labels.push_back("P" + std::to_string(i));
                data.weights.push_back(w);
            }
            for (size_t i = 1; i <= n; ++i) {
                IntVec w(n, Int(0));
                w[i - 1] = -1;
                data.labels.push_back("P" + std::to_string(n + i));
                data.weights.push_back(w);
            }
            break;
        }
        case ChartFamily::grassmann: {
            const size_t n = spec.n, k = spec.k;
            // (k+1)-subsets of {0..n}; weight = sum of e_i in Z^{n+1}.
            std::vector<size_t> subset(k + 1);
            std::iota(subset.begin(), subset.end(), 0);
            while (true) {
                IntVec w(n + 1, Int(0));
                std::string label = "p";
                for (size_t i : subset) {
                    w[i] = 1;
                    label += "_" + std::to_string(i);
                }
                data.labels.push_back(label);
                data.weights.push_back(w);
                // next combination
                size_t i = k + 1;
                while (i > 0 && subset[i - 1] == n - (k + 1 - i)) --i;
                if (i == 0) break;
                ++subset[i - 1];
                for (size_t j = i; j < k + 1; ++j) subset[j] = subset[j - 1] + 1;
            }
            break;
        }
        default:
            throw Error("fixed_point_weights: only quadric and grassmann families");
    }
    std::vector<RatVec> pts;
    for (const auto& w : data.weights) {
        RatVec v(w.size());
        for (size_t i = 0; i < w.size(); ++i) v[i] = Rat(w[i]);
        pts.push_back(v);
    }
    data.weight_polytope = Polytope::from_points(pts, {}, data.weights[0].size());
    return data;
}

} // namespace quotfan
