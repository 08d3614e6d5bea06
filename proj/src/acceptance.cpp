#include "quotfan/acceptance.hpp"

#include "quotfan/catalog.hpp"
#include "quotfan/mutations.hpp"
#include "quotfan/quadric_maps.hpp"
#include "quotfan/quotient.hpp"

#include <chrono>
#include <functional>
#include <sstream>

namespace quotfan {

namespace {

using Clock = std::chrono::steady_clock;

struct Check {
    std::ostringstream detail;
    bool ok = true;

    void require(bool cond, const std::string& what) {
        if (!cond) {
            ok = false;
            detail << "[FAIL " << what << "] ";
        }
    }
    void note(const std::string& s) { detail << s << " "; }
};

RatVec to_ratvec(const IntVec& v) {
    RatVec r(v.size());
    for (size_t i = 0; i < v.size(); ++i) r[i] = Rat(v[i]);
    return r;
}

// 1. Quadric quotient fans are projective spaces.
void quadric_quotients(Check& c) {
    auto t0 = Clock::now();
    for (size_t n = 2; n <= 5; ++n) {
        ChartSpec spec = ChartSpec::quadric_odd(n);
        WeightSystem ws = chart_weights(spec);
        Fan canonical = quotient_fan(ws);
        Fan std_fan = standard_fan_projective(n - 1);
        c.require(fan_isomorphic(canonical, std_fan).has_value(),
                  "odd n=" + std::to_string(n) + " isomorphic to projective space");
        // Ray sets in the displayed projection basis are exactly standard.
        Fan displayed = quotient_fan_with_projection(ws, expected_gale(spec));
        c.require(displayed == std_fan, "odd n=" + std::to_string(n) + " exact ray set");
    }
    for (size_t n = 3; n <= 5; ++n) {
        ChartSpec spec = ChartSpec::quadric_even(n);
        WeightSystem ws = chart_weights(spec);
        Fan std_fan = standard_fan_projective(n - 2);
        Fan canonical = quotient_fan(ws);
        c.require(fan_isomorphic(canonical, std_fan).has_value(),
                  "even n=" + std::to_string(n) + " isomorphic to projective space");
        IntMatrix g = expected_gale(spec);
        Fan displayed = quotient_fan_with_projection(ws, g);
        std::vector<IntVec> expected_rays;
        for (size_t j = 0; j + 1 < n; ++j) expected_rays.push_back(primitive(g.col(j)));
        std::sort(expected_rays.begin(), expected_rays.end());
        expected_rays.erase(std::unique(expected_rays.begin(), expected_rays.end()),
                            expected_rays.end());
        c.require(displayed.rays() == expected_rays,
                  "even n=" + std::to_string(n) + " rays are the displayed columns");
    }
    double elapsed = std::chrono::duration<double>(Clock::now() - t0).count();
    std::ostringstream os;
    os << "elapsed " << elapsed << "s (budget 10s)";
    c.note(os.str());
    c.require(elapsed <= 10.0, "runtime within 10s");
}

// 2. Flag-chart quotients.
void flag_chart(Check& c) {
    for (size_t n = 2; n <= 5; ++n) {
        ChartSpec spec = ChartSpec::ptpn(n);
        WeightSystem ws = chart_weights(spec);
        c.require(quotient_fan(ws) == standard_fan_projective(n - 1),
                  "n=" + std::to_string(n) + " standard fan");
        c.require(transposed_gale_dual(ws).q == expected_gale(spec),
                  "n=" + std::to_string(n) + " gale dual is [I | -1 | I]");
    }
}

// 3. Grassmannians of lines give permutohedral fans.
void lines_permutohedral(Check& c) {
    for (size_t n = 3; n <= 5; ++n) {
        Fan f = quotient_fan(chart_weights(ChartSpec::grassmann(n, 1)));
        Fan perm = standard_fan_permutohedral(n - 2);
        c.require(fan_isomorphic(f, perm).has_value(),
                  "n=" + std::to_string(n) + " permutohedral");
        if (n == 4) {
            c.require(f.rays().size() == 6, "n=4 has 6 rays");
            c.require(f.max_cones().size() == 6, "n=4 has 6 maximal cones");
        }
    }
}

// 4. Gale identity for the grassmannian charts.
void gale_identity(Check& c) {
    std::vector<std::pair<size_t, size_t>> cases = {{3, 1}, {4, 1}, {4, 2},
                                                    {5, 1}, {5, 2}, {5, 3}};
    for (auto [n, k] : cases) {
        ChartSpec spec = ChartSpec::grassmann(n, k);
        WeightSystem ws = chart_weights(spec);
        IntMatrix expect = expected_gale(spec);
        c.require(ws.matrix().mul(expect.transpose()).is_zero(),
                  "orthogonality " + spec.name());
        c.require(row_lattice_basis(transposed_gale_dual(ws).q) == row_lattice_basis(expect),
                  "row space " + spec.name());
    }
    // The (5,2) case against the displayed 4x9 matrix.
    IntMatrix displayed{{1, 0, -1, 0, 0, 0, -1, 0, 1},
                        {0, 1, -1, 0, 0, 0, 0, -1, 1},
                        {0, 0, 0, 1, 0, -1, -1, 0, 1},
                        {0, 0, 0, 0, 1, -1, 0, -1, 1}};
    c.require(expected_gale(ChartSpec::grassmann(5, 2)) == displayed,
              "(5,2) displayed matrix byte-exact");
    c.require(row_lattice_basis(transposed_gale_dual(chart_weights(ChartSpec::grassmann(5, 2))).q) ==
                  row_lattice_basis(displayed),
              "(5,2) row space matches the display");
}

// 5. GIT chamber counts and Picard-number-one collapse.
void git_chamber_counts(Check& c) {
    for (size_t n : {size_t(3), size_t(4)}) {
        WeightSystem ws = chart_weights(ChartSpec::quadric_odd(n));
        ChamberComplex cc = git_chambers(ws);
        size_t expected = size_t(1) << (n - 1);
        c.require(cc.chambers.size() == expected,
                  "n=" + std::to_string(n) + " has " + std::to_string(expected) + " chambers");
        Fan qf = quotient_fan(ws);
        c.require(fan_isomorphic(qf, standard_fan_projective(n - 1)).has_value(),
                  "n=" + std::to_string(n) + " quotient is projective space");
        for (size_t i = 0; i < cc.representatives.size(); ++i) {
            Fan gf = git_quotient_fan(ws, to_ratvec(cc.representatives[i]));
            c.require(gf == qf, "n=" + std::to_string(n) + " chamber " + std::to_string(i) +
                                    " git fan equals the quotient fan");
        }
    }
}

// 6. Boundary divisors and transition involutions.
void boundary_divisors(Check& c) {
    for (size_t n : {size_t(3), size_t(4)}) {
        try {
            auto forms = quadric_boundary(n);
            c.require(forms.size() == n, "odd n=" + std::to_string(n) + " has n forms");
        } catch (const Error& e) {
            c.require(false, std::string("odd boundary: ") + e.what());
        }
        try {
            auto even = quadric_boundary_even(n);
            c.require(even.size() == n, "even n=" + std::to_string(n) + " has n forms");
        } catch (const Error& e) {
            c.require(false, std::string("even boundary: ") + e.what());
        }
        for (size_t i = 2; i <= n; ++i) {
            IntMatrix m = quadric_transition(n, i);
            c.require(m.mul(m) == IntMatrix::identity(n),
                      "transition " + std::to_string(i) + " squares to identity");
            IntMatrix me = quadric_transition_even(n, i);
            c.require(me.mul(me) == IntMatrix::identity(n - 1),
                      "even transition " + std::to_string(i) + " squares to identity");
        }
        c.require(quadric_transition_antipodal(n) == IntMatrix::identity(n),
                  "antipodal transition is the identity");
    }
}

// 7. Coxeter relations with a negative control.
void coxeter_relations(Check& c) {
    auto t0 = Clock::now();
    std::vector<std::pair<size_t, size_t>> cases = {{3, 1}, {4, 1}, {4, 2}, {5, 2}};
    for (auto [n, k] : cases) {
        std::vector<MultiProjectiveMap> gens;
        for (size_t i = 1; i <= n; ++i) gens.push_back(mutation_map(n, k, i));
        auto report = verify_coxeter(gens);
        c.require(report.all_hold,
                  "(" + std::to_string(n) + "," + std::to_string(k) + ") relations hold");
        if (k == 1)
            c.require(report.mode == "symbolic",
                      "(" + std::to_string(n) + ",1) verified symbolically");
        c.note("(" + std::to_string(n) + "," + std::to_string(k) + "):" + report.mode);
    }
    // Negative control: a sign-corrupted generator must fail with a witness.
    {
        std::vector<MultiProjectiveMap> gens;
        for (size_t i = 1; i <= 3; ++i) gens.push_back(mutation_map(3, 1, i));
        auto z = [&](size_t i) { return Polynomial::variable(2, i); };
        gens[1] = MultiProjectiveMap({1}, {1}, {{z(0), z(1) - z(0)}});
        auto report = verify_coxeter(gens);
        bool witnessed = false;
        for (const auto& chk : report.checks)
            if (chk.relation == "r2^2" && !chk.holds && !chk.witness.empty()) witnessed = true;
        c.require(!report.all_hold && witnessed, "corrupted generator fails with witness");
    }
    double elapsed = std::chrono::duration<double>(Clock::now() - t0).count();
    std::ostringstream os;
    os << "elapsed " << elapsed << "s (budget 60s)";
    c.note(os.str());
    c.require(elapsed <= 60.0, "runtime within 60s");
}

// 8. Equivariance of the quotient map.
void equivariance(Check& c) {
    for (auto [n, k] :
         std::vector<std::pair<size_t, size_t>>{{3, 1}, {4, 1}, {4, 2}, {5, 2}}) {
        auto report = verify_equivariance(n, k);
        c.require(report.all_hold,
                  "(" + std::to_string(n) + "," + std::to_string(k) + ") equivariance");
        c.note("(" + std::to_string(n) + "," + std::to_string(k) + "):" + report.mode);
    }
}

// 9. The lines mutations permute the marked points transitively.
void point_permutation(Check& c) {
    for (size_t n : {size_t(4), size_t(5)}) {
        auto orbit = lines_point_orbit(n);
        c.require(orbit.size() == n, "n=" + std::to_string(n) + " orbit size");
        auto marked = lines_marked_points(n);
        for (auto& p : marked) p = normalize_projective_point(p);
        std::sort(marked.begin(), marked.end());
        c.require(orbit == marked, "n=" + std::to_string(n) + " orbit equals the marked points");
    }
}

// 10. Diagonal quotient of (P^1)^3 matches the line grassmannian chart.
void diagonal_cross_check(Check& c) {
    auto [fan, proj] = diagonal_action_projection(1, 3);
    Fan q = quotient_fan_general(fan, proj);
    Fan gr = quotient_fan(chart_weights(ChartSpec::grassmann(4, 1)));
    c.require(fan_isomorphic(q, gr).has_value(), "(P^1)^3 diagonal vs grassmann(4,1)");
}

// 11. Transposition duality.
void duality(Check& c) {
    Fan a = quotient_fan(chart_weights(ChartSpec::grassmann(4, 1)));
    Fan b = quotient_fan(chart_weights(ChartSpec::grassmann(4, 2)));
    c.require(fan_isomorphic(a, b).has_value(), "grassmann(4,1) vs grassmann(4,2)");
    auto [fan2, proj2] = diagonal_action_projection(1, 2);
    Fan q2 = quotient_fan_general(fan2, proj2);
    c.require(fan_isomorphic(q2, standard_fan_permutohedral(1)).has_value(),
              "P^1 x P^1 diagonal quotient is the 1-dim permutohedral fan");
}

// 12. The chow polytope's normal fan is the quotient fan.
void chow_polytope_check(Check& c) {
    for (auto spec : {ChartSpec::quadric_odd(3), ChartSpec::grassmann(4, 1)}) {
        WeightSystem ws = chart_weights(spec);
        Polytope cp = chow_polytope(ws);
        Fan nf = normal_fan_in_basis(cp, IntMatrix::identity(ws.quotient_rank()));
        c.require(nf == quotient_fan(ws), spec.name() + " normal fan equals quotient fan");
    }
}

// 13. Coarsenings of the grassmann(4,2) quotient fan.
void coarsenings(Check& c) {
    WeightSystem ws = chart_weights(ChartSpec::grassmann(4, 2));
    Fan qf = quotient_fan(ws);
    ChamberComplex cc = git_chambers(ws);
    bool found_pp = false, found_p2 = false;
    Fan pp = standard_fan_product({1, 1});
    Fan p2 = standard_fan_projective(2);
    for (const auto& rep : cc.representatives) {
        Fan gf = git_quotient_fan(ws, to_ratvec(rep));
        c.require(is_coarsening(gf, qf), "chamber git fan coarsens the quotient fan");
        if (fan_isomorphic(gf, pp).has_value()) found_pp = true;
        if (fan_isomorphic(gf, p2).has_value()) found_p2 = true;
    }
    c.require(found_pp, "some chamber gives P^1 x P^1");
    c.require(found_p2, "some chamber gives P^2");
}

// 14. The Gr(2,5)-chart stress case.
void grassmann52_stress(Check& c) {
    auto t0 = Clock::now();
    WeightSystem ws = chart_weights(ChartSpec::grassmann(5, 2));
    Fan f = quotient_fan(ws);
    double elapsed = std::chrono::duration<double>(Clock::now() - t0).count();
    std::ostringstream os;
    os << "elapsed " << elapsed << "s (budget 300s);";
    c.note(os.str());
    c.require(elapsed <= 300.0, "runtime within 5 minutes");

    FanReport rep = fan_report(f);
    std::ostringstream pin;
    pin << "rays=" << rep.ray_count << " max_cones=" << rep.max_cone_count
        << " complete=" << rep.is_complete << " simplicial=" << rep.is_simplicial
        << " smooth=" << rep.is_smooth;
    c.note(pin.str());
    c.require(rep.is_complete, "fan complete");
    // Regression pins (deterministic output).
    c.require(rep.ray_count == 30, "ray count pinned at 30");
    c.require(rep.max_cone_count == 108, "maximal cone count pinned at 108");

    // A geometric quotient isomorphic to (P^2)^2: the fiber over
    // v = -e1 - e2 + 3(e3+e4+e5) is a product of two standard simplices.
    RatVec v = {Rat(-1), Rat(-1), Rat(3), Rat(3), Rat(3)};
    Fan gf = git_quotient_fan(ws, v);
    c.require(fan_isomorphic(gf, standard_fan_product({2, 2})).has_value(),
              "git fan at the product linearization is (P^2)^2");
    c.require(is_coarsening(gf, f), "(P^2)^2 fan coarsens the quotient fan");
}

// 15. Full definiteness with verified certificates.
void full_definiteness(Check& c) {
    std::vector<ChartSpec> specs;
    for (size_t n = 2; n <= 5; ++n) specs.push_back(ChartSpec::ptpn(n));
    for (size_t n = 2; n <= 5; ++n) specs.push_back(ChartSpec::quadric_odd(n));
    for (size_t n = 3; n <= 5; ++n) specs.push_back(ChartSpec::quadric_even(n));
    for (auto [n, k] :
         std::vector<std::pair<size_t, size_t>>{{3, 1}, {4, 1}, {4, 2}, {5, 1}, {5, 2}, {5, 3}})
        specs.push_back(ChartSpec::grassmann(n, k));
    for (const auto& spec : specs) {
        WeightSystem ws = chart_weights(spec);
        auto res = is_fully_definite(ws);
        bool cert_ok = false;
        if (res.fully_definite && res.certificate) {
            cert_ok = is_unimodular(*res.certificate);
            IntMatrix uw = res.certificate->mul(ws.matrix());
            for (size_t j = 0; j < uw.cols() && cert_ok; ++j) {
                bool nonzero = false;
                for (size_t i = 0; i < uw.rows(); ++i) {
                    if (uw.at(i, j) < 0) cert_ok = false;
                    if (uw.at(i, j) != 0) nonzero = true;
                }
                if (!nonzero) cert_ok = false;
            }
        }
        c.require(res.fully_definite && cert_ok, spec.name() + " fully definite with certificate");
    }
    c.require(!is_fully_definite(WeightSystem(IntMatrix{{1, -1}})).fully_definite,
              "{e1, -e1} not fully definite");
    // A system containing a zero weight.
    c.require(!is_fully_definite(WeightSystem(IntMatrix{{1, 0}})).fully_definite,
              "zero weight not fully definite");
}

} // namespace

std::vector<CriterionResult> run_acceptance() {
    std::vector<std::pair<std::pair<std::string, std::string>, std::function<void(Check&)>>> crits =
        {
            {{"C01", "quadric quotient fans are projective spaces"}, quadric_quotients},
            {{"C02", "flag chart quotient and gale dual"}, flag_chart},
            {{"C03", "line grassmannians give permutohedral fans"}, lines_permutohedral},
            {{"C04", "grassmann gale identity"}, gale_identity},
            {{"C05", "git chamber counts and geometric quotients"}, git_chamber_counts},
            {{"C06", "boundary divisors and transition involutions"}, boundary_divisors},
            {{"C07", "coxeter relations with negative control"}, coxeter_relations},
            {{"C08", "quotient map equivariance"}, equivariance},
            {{"C09", "point permutation by the lines mutations"}, point_permutation},
            {{"C10", "diagonal action cross-check"}, diagonal_cross_check},
            {{"C11", "transposition duality"}, duality},
            {{"C12", "chow polytope normal fan"}, chow_polytope_check},
            {{"C13", "coarsenings of the grassmann(4,2) fan"}, coarsenings},
            {{"C14", "grassmann(5,2) stress case"}, grassmann52_stress},
            {{"C15", "full definiteness certificates"}, full_definiteness},
        };
    std::vector<CriterionResult> results;
    for (auto& [meta, fn] : crits) {
        CriterionResult r;
        r.id = meta.first;
        r.name = meta.second;
        auto t0 = Clock::now();
        Check c;
        try {
            fn(c);
            r.passed = c.ok;
        } catch (const std::exception& e) {
            r.passed = false;
            c.detail << "[EXCEPTION " << e.what() << "]";
        }
        r.seconds = std::chrono::duration<double>(Clock::now() - t0).count();
        r.detail = c.detail.str();
        results.push_back(std::move(r));
    }
    return results;
}

} // namespace quotfan
