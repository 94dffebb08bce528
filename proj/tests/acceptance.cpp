// One PASS/FAIL line per acceptance criterion. Tolerances are fixed here.
#include <chrono>
#include <cstdio>
#include <functional>
#include <numbers>
#include <sstream>
#include <string>

#include "dugg/char_poly.hpp"
#include "dugg/graph_io.hpp"
#include "dugg/moore.hpp"
#include "dugg/report.hpp"
#include "dugg/spectra.hpp"

using namespace dugg;

namespace {

struct Outcome {
    bool pass = true;
    std::string detail;
};

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point t0) { return std::chrono::duration<double>(Clock::now() - t0).count(); }

std::string fmt(const char* f, double x) {
    char buf[64];
    std::snprintf(buf, sizeof buf, f, x);
    return buf;
}

/// Picks the ring by k mod 3 and calls f.template operator()<T>().
template <class F>
void with_ring(int k, F&& f) {
    switch (k % 3) {
        case 0: f.template operator()<double>(); break;
        case 1: f.template operator()<Complex>(); break;
        default: f.template operator()<Quaternion>(); break;
    }
}

int uniform_int(Rng& rng, int lo, int hi) { return std::uniform_int_distribution<int>(lo, hi)(rng); }

std::vector<std::pair<int, int>> path_pairs(int n) {
    std::vector<std::pair<int, int>> out;
    for (int k = 0; k + 1 < n; ++k) out.emplace_back(k, k + 1);
    return out;
}

std::vector<std::pair<int, int>> cycle_pairs(int n) {
    auto out = path_pairs(n);
    out.emplace_back(n - 1, 0);
    return out;
}

std::vector<std::pair<int, int>> complete_pairs(int n) {
    std::vector<std::pair<int, int>> out;
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v) out.emplace_back(u, v);
    return out;
}

/// 3-cube and Petersen graph, both 3-regular.
std::vector<std::pair<int, int>> cube_pairs() {
    std::vector<std::pair<int, int>> out;
    for (int u = 0; u < 8; ++u)
        for (int b = 0; b < 3; ++b)
            if (u < (u ^ (1 << b))) out.emplace_back(u, u ^ (1 << b));
    return out;
}

std::vector<std::pair<int, int>> petersen_pairs() {
    std::vector<std::pair<int, int>> out;
    for (int k = 0; k < 5; ++k) {
        out.emplace_back(k, (k + 1) % 5);
        out.emplace_back(k, k + 5);
        out.emplace_back(5 + k, 5 + (k + 2) % 5);
    }
    return out;
}

// ---- 1 ---------------------------------------------------------------------

Outcome example_reproduction() {
    constexpr double tol = 5e-4;
    constexpr double time_limit = 1.0;
    const auto t0 = Clock::now();
    const std::vector<std::vector<DualNumber>> printed{
        {{2, 0}, {-1, 0}, {-1, 0}},
        {{1.9319, 0}, {-0.5176, 0}, {-1.4142, 0}},
        {{1.9319, 0.1725}, {-0.5176, -0.6440}, {-1.4142, 0.4714}},
    };
    double worst = 0.0;
    for (int k = 0; k < 3; ++k) {
        const auto g = read_gain_graph_file(std::string(DUGG_DATA_DIR) + "/phi" + std::to_string(k + 1) + ".ggf");
        const Spectrum s = std::visit([](const auto& h) { return spectrum(h, MatrixKind::adjacency); }, g);
        worst = std::max(worst, max_spectrum_deviation(s, {MatrixKind::adjacency, printed[static_cast<std::size_t>(k)]}));
    }
    const double elapsed = seconds_since(t0);
    return {worst <= tol && elapsed < time_limit,
            "max deviation " + fmt("%.2e", worst) + " (tol 5e-4), " + fmt("%.3f", elapsed) + " s (limit 1 s)"};
}

// ---- 2 ---------------------------------------------------------------------

Outcome closed_forms() {
    constexpr double tol = 1e-9;
    constexpr double time_limit = 10.0;
    const auto t0 = Clock::now();
    Rng rng(2);
    double worst = 0.0;
    int cases = 0;
    for (int n = 3; n <= 12; ++n) {
        for (int k = 0; k < 20; ++k) {
            const DualComplex q = random_unit<Complex>(rng);
            const auto cyc = cycle_graph<Complex>(n, q);
            const auto path = random_gains<Complex>(n, path_pairs(n), rng);
            for (MatrixKind kind : {MatrixKind::adjacency, MatrixKind::laplacian}) {
                worst = std::max(worst, max_spectrum_deviation(cycle_spectrum_closed_form(n, q, kind), spectrum(cyc, kind)));
                worst = std::max(worst, max_spectrum_deviation(path_spectrum_closed_form(n, kind), spectrum(path, kind)));
                cases += 2;
            }
        }
    }
    const double elapsed = seconds_since(t0);
    return {worst <= tol && elapsed < time_limit, std::to_string(cases) + " spectra, max deviation " + fmt("%.2e", worst) +
                                                      " (tol 1e-9), " + fmt("%.3f", elapsed) + " s (limit 10 s)"};
}

// ---- 3 ---------------------------------------------------------------------

Outcome quaternion_cycles() {
    constexpr double tol = 1e-8;
    Rng rng(3);
    double worst = 0.0;
    for (int k = 0; k < 20; ++k) {
        const int n = 3 + k % 10;
        const DualQuaternion q = random_unit<Quaternion>(rng);
        const auto g = cycle_graph<Quaternion>(n, q);
        for (MatrixKind kind : {MatrixKind::adjacency, MatrixKind::laplacian})
            worst = std::max(worst, max_spectrum_deviation(cycle_spectrum_closed_form(n, q, kind), spectrum(g, kind)));
    }
    return {worst <= tol, "20 gains, max deviation " + fmt("%.2e", worst) + " (tol 1e-8)"};
}

// ---- 4 ---------------------------------------------------------------------

Outcome balance_theorem() {
    constexpr double tol = 1e-9;
    constexpr double margin = 1e-10;
    Rng rng(4);
    double worst = 0.0, worst_dual = 0.0;
    for (int k = 0; k < 100; ++k) {
        with_ring(k, [&]<class T>() {
            const int n = uniform_int(rng, 1, 10);
            const auto g = random_balanced<T>(n, random_edges(n, std::uniform_real_distribution<double>(0.2, 0.9)(rng), rng), rng);
            for (MatrixKind kind : {MatrixKind::adjacency, MatrixKind::laplacian}) {
                const Spectrum s = spectrum(g, kind);
                worst = std::max(worst, max_spectrum_deviation(s, graph_spectrum(g.graph(), kind)));
                for (const auto& v : s.values) worst_dual = std::max(worst_dual, std::abs(v.d));
            }
        });
    }
    // Unbalanced here means the standard parts are neither balanced nor
    // antibalanced; see the radius report for the other two cases.
    double smallest_gap = INFINITY;
    for (int k = 0; k < 100; ++k) {
        with_ring(k, [&]<class T>() {
            const auto g = random_unbalanced_connected<T>(uniform_int(rng, 4, 10), 0.4, rng);
            const double rho_g = spectral_radius(graph_spectrum(g.graph(), MatrixKind::adjacency)).s;
            smallest_gap = std::min(smallest_gap, rho_g - spectral_radius(spectrum(g, MatrixKind::adjacency)).s);
        });
    }
    return {worst <= tol && worst_dual <= tol && smallest_gap > margin,
            "balanced: max deviation " + fmt("%.2e", worst) + ", max dual part " + fmt("%.2e", worst_dual) +
                " (tol 1e-9); unbalanced: smallest gap " + fmt("%.2e", smallest_gap) + " (must exceed 1e-10)"};
}

// ---- 5 ---------------------------------------------------------------------

Outcome interlacing() {
    constexpr double tol = 1e-9;
    Rng rng(5);
    int violations = 0, checked = 0;
    for (int k = 0; k < 200; ++k) {
        with_ring(k, [&]<class T>() {
            const int n = uniform_int(rng, 2, 8);
            const auto g = random_gains<T>(n, random_edges(n, std::uniform_real_distribution<double>(0.2, 0.9)(rng), rng), rng);
            std::vector<int> s;
            for (int v = 0; v < n; ++v)
                if (std::bernoulli_distribution(0.6)(rng)) s.push_back(v);
            if (s.empty()) s.push_back(uniform_int(rng, 0, n - 1));
            for (MatrixKind kind : {MatrixKind::adjacency, MatrixKind::laplacian}) {
                const auto v = check_interlacing(g, s, kind, tol);
                for (std::size_t i = 0; i < v.upper.size(); ++i) {
                    violations += !v.upper[i] + !v.lower[i];
                    checked += 2;
                }
            }
        });
    }
    return {violations == 0, std::to_string(checked) + " inequalities, " + std::to_string(violations) + " violations"};
}

// ---- 6 ---------------------------------------------------------------------

Outcome radius_bounds() {
    RadiusOptions opt;
    opt.bound_tol = 1e-9;
    opt.equality_tol = 1e-8;
    Rng rng(6);
    int bound_failures = 0;
    for (int k = 0; k < 200; ++k) {
        with_ring(k, [&]<class T>() {
            const int n = uniform_int(rng, 1, 10);
            const auto g = random_gains<T>(n, random_edges(n, std::uniform_real_distribution<double>(0.2, 0.9)(rng), rng), rng);
            for (MatrixKind kind : {MatrixKind::adjacency, MatrixKind::laplacian})
                bound_failures += !radius_report(g, kind, opt).bound_holds;
        });
    }

    std::vector<std::vector<std::pair<int, int>>> regular;
    for (int n = 3; n <= 9; ++n) regular.push_back(cycle_pairs(n));
    for (int n = 2; n <= 7; ++n) regular.push_back(complete_pairs(n));
    regular.push_back(cube_pairs());
    regular.push_back(petersen_pairs());
    int missed = 0, equality_cases = 0;
    for (std::size_t r = 0; r < regular.size(); ++r) {
        with_ring(static_cast<int>(r), [&]<class T>() {
            const auto& pairs = regular[r];
            int n = 0;
            for (auto [u, v] : pairs) n = std::max({n, u + 1, v + 1});
            // Balanced regular: adjacency radius meets Delta.
            const auto b = random_balanced<T>(n, pairs, rng);
            const RadiusReport ra = radius_report(b, MatrixKind::adjacency, opt);
            missed += !(ra.equality && ra.bound_holds && std::abs(ra.rho_graph - ra.delta_bound) <= opt.equality_tol);
            // Switched (G, -1) on a regular graph: Laplacian radius meets 2 Delta.
            std::vector<Dual<T>> zeta;
            for (int v = 0; v < n; ++v) zeta.push_back(random_unit<T>(rng));
            const auto neg = switching(GainGraph<T>::uniform(UnderlyingGraph(n, pairs), -one<T>()), zeta);
            const RadiusReport rl = radius_report(neg, MatrixKind::laplacian, opt);
            missed += !(rl.equality && rl.bound_holds && std::abs(rl.rho_graph - rl.delta_bound) <= opt.equality_tol);
            equality_cases += 2;
        });
    }
    return {bound_failures == 0 && missed == 0, "400 bound checks, " + std::to_string(bound_failures) + " failures; " +
                                                    std::to_string(equality_cases) + " equality cases, " +
                                                    std::to_string(missed) + " not flagged"};
}

// ---- 7 ---------------------------------------------------------------------

Outcome determinants() {
    constexpr double tol = 1e-8;
    Rng rng(7);
    double worst_det = 0.0, worst_coef = 0.0;
    for (int k = 0; k < 50; ++k) {
        with_ring(k, [&]<class T>() {
            const int n = uniform_int(rng, 1, 6);
            const auto g = random_gains<T>(n, random_edges(n, std::uniform_real_distribution<double>(0.3, 1.0)(rng), rng), rng);
            const MdetReport r = make_mdet_report(DualScalar(moore_determinant(adjacency_matrix(g))), mdet_via_subgraphs(g),
                                                  spectrum(g, MatrixKind::adjacency).values, tol);
            worst_det = std::max(worst_det, r.max_deviation);
        });
    }
    for (int k = 0; k < 50; ++k) {
        with_ring(k, [&]<class T>() {
            const int n = uniform_int(rng, 1, 7);
            const auto g = random_gains<T>(n, random_edges(n, std::uniform_real_distribution<double>(0.3, 1.0)(rng), rng), rng);
            worst_coef = std::max(worst_coef, charpoly_report(g, tol).max_deviation);
        });
    }
    return {worst_det <= tol && worst_coef <= tol, "Mdet max pairwise deviation " + fmt("%.2e", worst_det) +
                                                       ", coefficient max deviation " + fmt("%.2e", worst_coef) + " (tol 1e-8)"};
}

// ---- 8 ---------------------------------------------------------------------

Outcome reduction() {
    constexpr double tol = 1e-12;
    Rng rng(8);
    std::normal_distribution<double> gauss(0.0, 1.0);
    auto q = [&] { return Quaternion{gauss(rng), gauss(rng), gauss(rng), gauss(rng)}; };
    double worst = 0.0;
    int non_unit = 0;
    for (int k = 0; k < 500; ++k) {
        DualQuaternion x{q(), q()};
        switch (k % 5) {
            case 1: x.s = Quaternion{x.s.w}; break;                                  // real standard part
            case 2: x.s.y = x.s.z = x.d.y = x.d.z = 0.0; break;                      // already complex
            case 3: x.s = Quaternion{x.s.w, -std::abs(x.s.x), 0.0, 0.0}; break;      // negative i axis
            case 4: x = random_unit<Quaternion>(rng); break;
            default: break;
        }
        const ComplexReduction red = dq_to_dc(x);
        const DualQuaternion a{Quaternion(red.a.s), Quaternion(red.a.d)};
        worst = std::max(worst, max_abs_diff(a, conj(red.u) * x * red.u));
        worst = std::max(worst, max_abs_diff(real_part(a), real_part(x)));
        worst = std::max(worst, max_abs_diff(magnitude(imag_part(a)), magnitude(imag_part(x))));
        non_unit += !is_unit(red.u, tol);
    }
    return {worst <= tol && non_unit == 0,
            "max residual " + fmt("%.2e", worst) + " (tol 1e-12), " + std::to_string(non_unit) + " non-unit u"};
}

// ---- 9 ---------------------------------------------------------------------

template <BaseRing T>
Dual<T> random_dual(Rng& rng) {
    std::normal_distribution<double> g(0.0, 1.0);
    if constexpr (ring_of<T> == Ring::real) return {g(rng), g(rng)};
    else if constexpr (ring_of<T> == Ring::complex) return {{g(rng), g(rng)}, {g(rng), g(rng)}};
    else return {{g(rng), g(rng), g(rng), g(rng)}, {g(rng), g(rng), g(rng), g(rng)}};
}

Outcome scalar_laws() {
    constexpr double tol = 1e-12;
    Rng rng(9);
    double mult = 0.0, re = 0.0, inv = 0.0;
    int subadd_failures = 0;
    for (int k = 0; k < 1000; ++k) {
        with_ring(k, [&]<class T>() {
            const Dual<T> a = random_dual<T>(rng), b = random_dual<T>(rng);
            mult = std::max(mult, max_abs_diff(magnitude(a * b), magnitude(a) * magnitude(b)));
            subadd_failures += !geq_tol(magnitude(a) + magnitude(b), magnitude(a + b), tol);
            re = std::max(re, max_abs_diff(real_part(a * b), real_part(b * a)));
            inv = std::max(inv, max_abs_diff(a * inverse(a), one<T>()));
        });
    }
    return {mult <= tol && subadd_failures == 0 && re <= tol && inv <= tol,
            "|ab| " + fmt("%.2e", mult) + ", subadditivity failures " + std::to_string(subadd_failures) + ", Re(ab) " +
                fmt("%.2e", re) + ", a a^-1 " + fmt("%.2e", inv) + " (tol 1e-12)"};
}

}  // namespace

int main() {
    const std::vector<std::pair<std::string, std::function<Outcome()>>> criteria{
        {"example spectra", example_reproduction},
        {"closed forms vs eigensolver", closed_forms},
        {"quaternion cycles", quaternion_cycles},
        {"balance theorem", balance_theorem},
        {"interlacing", interlacing},
        {"radius bounds", radius_bounds},
        {"determinants and coefficients", determinants},
        {"dual quaternion reduction", reduction},
        {"dual scalar laws", scalar_laws},
    };
    int failed = 0;
    for (std::size_t i = 0; i < criteria.size(); ++i) {
        Outcome o;
        try {
            o = criteria[i].second();
        } catch (const std::exception& e) {
            o = {false, std::string("exception: ") + e.what()};
        }
        failed += !o.pass;
        std::printf("%s %zu %s: %s\n", o.pass ? "PASS" : "FAIL", i + 1, criteria[i].first.c_str(), o.detail.c_str());
    }
    return failed == 0 ? 0 : 1;
}
