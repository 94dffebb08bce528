#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <numbers>

#include "dugg/report.hpp"
#include "oracle.hpp"
#include "support.hpp"

using namespace dugg;
using std::numbers::pi;

namespace {

const UnderlyingGraph c3(3, {{0, 1}, {1, 2}, {0, 2}});
const UnderlyingGraph c4(4, {{0, 1}, {1, 2}, {2, 3}, {0, 3}});
const UnderlyingGraph k13(4, {{0, 1}, {0, 2}, {0, 3}});

double spectrum_diff(const Spectrum& a, const std::vector<DualNumber>& b) { return support::max_diff(a.values, b); }

std::vector<DualNumber> reals(std::initializer_list<double> xs) {
    std::vector<DualNumber> out;
    for (double x : xs) out.push_back({x, 0.0});
    return out;
}

template <BaseRing T>
DualMatrix<T> principal(const DualMatrix<T>& m, const std::vector<int>& s) {
    const Index k = static_cast<Index>(s.size());
    DualMatrix<T> out(k, k);
    for (Index i = 0; i < k; ++i)
        for (Index j = 0; j < k; ++j) out.set(i, j, m(s[static_cast<std::size_t>(i)], s[static_cast<std::size_t>(j)]));
    return out;
}

}  // namespace

TEST_CASE("gain matrices") {
    const auto a = adjacency_matrix(support::phi1());
    CHECK(a(0, 1) == DualComplex{{1, 0}, {0, -1}});
    CHECK(a(1, 0) == DualComplex{{1, 0}, {0, 1}});
    CHECK(a(0, 2) == DualComplex{{0, -1}});
    CHECK(a(2, 0) == DualComplex{{0, 1}});
    CHECK(a(1, 2) == DualComplex{{0, -1}, {1, 0}});
    CHECK(a(2, 1) == DualComplex{{0, 1}, {1, 0}});
    for (int i = 0; i < 3; ++i) CHECK(a(i, i) == DualComplex{});

    CHECK(max_abs<double>(adjacency_matrix(GainGraph<double>::uniform(UnderlyingGraph(4), one<double>())).s) == 0.0);
    const auto g1 = GainGraph<double>::uniform(c4, one<double>());
    CHECK(max_abs<double>(adjacency_matrix(g1).s - c4.adjacency()) == 0.0);

    const auto l = laplacian_matrix(GainGraph<double>::uniform(c3, one<double>()));
    Eigen::MatrixXd want(3, 3);
    want << 2, -1, -1, -1, 2, -1, -1, -1, 2;
    CHECK(max_abs<double>(l.s - want) == 0.0);
    CHECK(max_abs<double>(laplacian_matrix(GainGraph<double>::uniform(UnderlyingGraph(3), one<double>())).s) == 0.0);
    const auto lg = laplacian_matrix(GainGraph<double>::uniform(k13, one<double>()));
    for (Index r = 0; r < 4; ++r) CHECK(lg.s.row(r).sum() == 0.0);
}

TEST_CASE("spectra of the example triangles") {
    CHECK(spectrum_diff(spectrum(support::phi1(), MatrixKind::adjacency), reals({2, -1, -1})) <= 1e-12);
    CHECK(spectrum_diff(spectrum(support::phi1(), MatrixKind::laplacian), reals({3, 3, 0})) <= 1e-12);

    const auto s2 = spectrum(support::phi2(), MatrixKind::adjacency).values;
    const double published[3] = {1.9319, -0.5176, -1.4142};
    for (std::size_t k = 0; k < 3; ++k) CHECK(std::abs(s2[k].s - published[k]) <= 5e-5);

    const auto s3 = spectrum(support::phi3(), MatrixKind::adjacency);
    CHECK(support::max_diff(s3.values, oracle::dual_eigenvalues<Complex>(adjacency_matrix(support::phi3()))) <= 1e-6);
}

TEST_CASE("closed-form path spectra") {
    const auto p3 = path_spectrum_closed_form(3, MatrixKind::adjacency);
    CHECK(spectrum_diff(p3, reals({std::sqrt(2.0), 0, -std::sqrt(2.0)})) <= 1e-15);
    CHECK(spectrum_diff(path_spectrum_closed_form(2, MatrixKind::laplacian), reals({2, 0})) <= 1e-15);
    CHECK(spectrum_diff(path_spectrum_closed_form(1, MatrixKind::adjacency), reals({0})) <= 1e-15);
    CHECK_THROWS_AS(path_spectrum_closed_form(0, MatrixKind::adjacency), BadParameter);

    Rng rng(1);
    for (int n = 1; n <= 12; ++n) {
        std::vector<std::pair<int, int>> pairs;
        for (int k = 0; k + 1 < n; ++k) pairs.emplace_back(k, k + 1);
        const auto g = random_gains<Quaternion>(n, pairs, rng);
        for (MatrixKind kind : {MatrixKind::adjacency, MatrixKind::laplacian}) {
            const auto want = oracle::dual_eigenvalues<Quaternion>(gain_matrix(g, kind));
            CHECK(spectrum_diff(path_spectrum_closed_form(n, kind), want) <= 1e-6);
            CHECK(max_spectrum_deviation(path_spectrum_closed_form(n, kind), spectrum(g, kind)) <= 1e-9);
        }
    }
}

TEST_CASE("closed-form cycle spectra") {
    CHECK(spectrum_diff(cycle_spectrum_closed_form(3, DualComplex{{1, 0}}, MatrixKind::adjacency), reals({2, -1, -1})) <= 1e-14);

    const auto s3 = cycle_spectrum_closed_form(3, support::phi3_walk_gain(), MatrixKind::adjacency);
    const double published[3][2] = {{1.9319, 0.1725}, {-0.5176, -0.6440}, {-1.4142, 0.4714}};
    for (std::size_t k = 0; k < 3; ++k) {
        CHECK(std::abs(s3.values[k].s - published[k][0]) <= 5e-5);
        CHECK(std::abs(s3.values[k].d - published[k][1]) <= 5e-5);
    }
    CHECK(max_spectrum_deviation(s3, spectrum(support::phi3(), MatrixKind::adjacency)) <= 1e-12);

    Rng rng(2);
    for (int k = 0; k < 30; ++k) {
        const int n = 3 + k % 8;
        const DualQuaternion q = random_unit<Quaternion>(rng);
        const auto a = cycle_spectrum_closed_form(n, q, MatrixKind::adjacency);
        const auto l = cycle_spectrum_closed_form(n, q, MatrixKind::laplacian);
        std::vector<DualNumber> two_minus;
        for (const auto& v : a.values) two_minus.push_back(DualNumber{2.0} - v);
        std::sort(two_minus.begin(), two_minus.end(), std::greater<>());
        CHECK(spectrum_diff(l, two_minus) <= 1e-12);
        const auto g = cycle_graph<Quaternion>(n, q);
        CHECK(spectrum_diff(a, oracle::dual_eigenvalues<Quaternion>(adjacency_matrix(g))) <= 1e-5);
    }
    CHECK_THROWS_AS(cycle_spectrum_closed_form(3, DualComplex{{1, 0}, {1, 0}}, MatrixKind::adjacency), NotUnit);
    CHECK_THROWS_AS(cycle_spectrum_closed_form(2, DualComplex{{1, 0}}, MatrixKind::adjacency), BadParameter);
}

TEST_CASE("spectral radius") {
    CHECK(max_abs_diff(spectral_radius(spectrum(support::phi1(), MatrixKind::adjacency)), DualNumber{2}) <= 1e-12);
    const DualNumber r3 = spectral_radius(spectrum(support::phi3(), MatrixKind::adjacency));
    CHECK(r3.s == doctest::Approx(2 * std::cos(pi / 12)));
    CHECK(r3.d == doctest::Approx(2 * std::sin(pi / 12) / 3));
    // |-1 + 2 eps| = 1 - 2 eps loses to 1 + 0 eps.
    CHECK(spectral_radius({MatrixKind::adjacency, {{1, 0}, {-1, 2}}}) == DualNumber{1, 0});
    CHECK(spectral_radius({MatrixKind::adjacency, {{1, 0}, {-1, -2}}}) == DualNumber{1, 2});
    CHECK_THROWS_AS(spectral_radius(Spectrum{}), BadParameter);
}

TEST_CASE("interlacing examples") {
    const auto v = check_interlacing(support::phi1(), {0, 1}, MatrixKind::adjacency);
    CHECK(v.holds);
    CHECK(spectrum_diff(v.sub, reals({1, -1})) <= 1e-14);
    CHECK(v.upper == std::vector<bool>{true, true});
    CHECK(v.lower == std::vector<bool>{true, true});

    const auto all = check_interlacing(support::phi3(), {0, 1, 2}, MatrixKind::laplacian);
    CHECK(all.holds);
    CHECK(all.sub == all.full);
    CHECK_THROWS_AS(check_interlacing(support::phi3(), {}, MatrixKind::adjacency), BadParameter);

    // Star K_{1,3} with S = the three leaves: the Laplacian of the induced
    // (edgeless) subgraph is zero and would violate mu_1 >= lambda_2 = 1;
    // the principal submatrix of L on S is the identity and interlaces.
    const auto star = GainGraph<double>::uniform(k13, one<double>());
    const auto lv = check_interlacing(star, {1, 2, 3}, MatrixKind::laplacian);
    CHECK(lv.holds);
    CHECK(spectrum_diff(lv.sub, reals({1, 1, 1})) <= 1e-14);
    CHECK(spectrum_diff(lv.full, reals({4, 1, 1, 0})) <= 1e-12);
    const auto induced = spectrum(induced_subgraph(star, {1, 2, 3}), MatrixKind::laplacian);
    CHECK_FALSE(interlacing_verdict(MatrixKind::laplacian, {1, 2, 3}, lv.full, induced).holds);
}

TEST_CASE_TEMPLATE("interlacing on random subsets", T, double, Complex, Quaternion) {
    Rng rng(3);
    for (int k = 0; k < 70; ++k) {
        const int n = 2 + k % 7;
        const auto g = random_gains<T>(n, random_edges(n, 0.6, rng), rng);
        std::vector<int> s;
        for (int v = 0; v < n; ++v)
            if (std::bernoulli_distribution(0.6)(rng)) s.push_back(v);
        if (s.empty()) s.push_back(0);
        for (MatrixKind kind : {MatrixKind::adjacency, MatrixKind::laplacian}) {
            const auto verdict = check_interlacing(g, s, kind);
            CHECK(verdict.holds);
            // Inner spectrum against an independent solve of the principal submatrix.
            const auto want = oracle::dual_eigenvalues<T>(principal(gain_matrix(g, kind), s));
            CHECK(spectrum_diff(verdict.sub, want) <= 1e-5);
        }
    }
}

TEST_CASE("radius reports") {
    const auto r2 = radius_report(support::phi2(), MatrixKind::adjacency);
    CHECK(r2.rho_gain.s == doctest::Approx(1.9319).epsilon(5e-5));
    CHECK(r2.rho_graph == doctest::Approx(2.0));
    CHECK(r2.delta_bound == 2.0);
    CHECK(r2.bound_holds);
    CHECK_FALSE(r2.equality);
    CHECK_FALSE(r2.balanced);
    CHECK(r2.connected);
    CHECK(r2.consistent);

    const auto r1 = radius_report(support::phi1(), MatrixKind::adjacency);
    CHECK(r1.equality);
    CHECK(r1.balanced);
    CHECK(r1.consistent);

    const auto c4neg = GainGraph<double>::uniform(c4, DualNumber{-1});
    const auto rl = radius_report(c4neg, MatrixKind::laplacian);
    CHECK(rl.rho_gain.s == doctest::Approx(4.0));
    CHECK(rl.rho_graph == doctest::Approx(4.0));
    CHECK(rl.delta_bound == 4.0);
    CHECK(rl.equality);
    CHECK(rl.antibalanced);
    CHECK(rl.consistent);
    // The same cycle with gain 1 is bipartite, so it is antibalanced as well.
    CHECK(radius_report(GainGraph<double>::uniform(c4, one<double>()), MatrixKind::laplacian).equality);
    // The odd cycle with gain 1 is not antibalanced: rho_L = 3 < rho_Q = 4.
    const auto odd = radius_report(GainGraph<double>::uniform(c3, one<double>()), MatrixKind::laplacian);
    CHECK_FALSE(odd.equality);
    CHECK(odd.consistent);
}

TEST_CASE("imbalance carried only by dual parts keeps the radius") {
    // Gains 1, 1 and 1 + 0.7 i eps: the walk gain 1 + 0.7 i eps is not 1, yet
    // the standard parts are all 1 and the top eigenvalue stays 2 + 0 eps.
    const auto g = GainGraph<Complex>::build(3, {{0, 1, {{1, 0}}}, {1, 2, {{1, 0}}}, {0, 2, {{1, 0}, {0, 0.7}}}});
    CHECK_FALSE(balance_certificate(g).balanced);
    const auto want = oracle::dual_eigenvalues<Complex>(adjacency_matrix(g));
    CHECK(std::abs(want[0].s - 2.0) <= 1e-12);
    CHECK(std::abs(want[0].d) <= 1e-6);

    const auto r = radius_report(g, MatrixKind::adjacency);
    CHECK(r.equality);
    CHECK_FALSE(r.balanced);
    CHECK(r.standard_balanced);
    CHECK(r.consistent);
}

TEST_CASE_TEMPLATE("radius bounds on random graphs", T, double, Complex, Quaternion) {
    Rng rng(4);
    for (int k = 0; k < 60; ++k) {
        const int n = 4 + k % 7;
        const auto g = random_unbalanced_connected<T>(n, 0.4, rng);
        const auto ra = radius_report(g, MatrixKind::adjacency);
        CHECK(ra.bound_holds);
        CHECK(ra.rho_gain.s < ra.rho_graph - 1e-9);
        CHECK_FALSE(ra.equality);
        CHECK(ra.consistent);
        const auto rl = radius_report(g, MatrixKind::laplacian);
        CHECK(rl.bound_holds);
        CHECK(rl.rho_gain.s < rl.rho_graph - 1e-9);
        CHECK(rl.consistent);

        const auto b = random_balanced<T>(n, random_connected_edges(n, 0.4, rng), rng);
        const auto rb = radius_report(b, MatrixKind::adjacency);
        CHECK(rb.equality);
        CHECK(rb.consistent);
    }
}

TEST_CASE_TEMPLATE("spectral invariants", T, double, Complex, Quaternion) {
    Rng rng(5);
    for (int k = 0; k < 50; ++k) {
        const int n = 1 + k % 8;
        const auto pairs = random_edges(n, 0.6, rng);
        const auto g = random_gains<T>(n, pairs, rng);

        // Switching leaves both spectra in place.
        std::vector<Dual<T>> zeta;
        for (int v = 0; v < n; ++v) zeta.push_back(random_unit<T>(rng));
        const auto h = switching(g, zeta);
        for (MatrixKind kind : {MatrixKind::adjacency, MatrixKind::laplacian})
            CHECK(max_spectrum_deviation(spectrum(g, kind), spectrum(h, kind)) <= 1e-9);

        // Negation reverses the adjacency spectrum.
        const auto s = spectrum(g, MatrixKind::adjacency).values;
        const auto sn = spectrum(negate(g), MatrixKind::adjacency).values;
        for (std::size_t i = 0; i < s.size(); ++i) CHECK(max_abs_diff(sn[i], -s[s.size() - 1 - i]) <= 1e-9);

        // Laplacian is positive semidefinite at the standard level.
        for (const auto& v : spectrum(g, MatrixKind::laplacian).values) CHECK(v.s >= -1e-10);

        // Rayleigh identity over the edges.
        for (const auto& p : eigenpairs(g, MatrixKind::adjacency)) {
            DualNumber acc{};
            for (const auto& e : g.edges()) {
                const Dual<T> xi = p.vector[e.u], xj = p.vector[e.v];
                acc = acc + 2.0 * real_part(conj(xi) * e.gain * xj);
            }
            CHECK(max_abs_diff(acc, p.value) <= 1e-9);
        }

        // Balanced graphs share the spectra of (G, 1) and have no dual parts.
        const auto b = random_balanced<T>(n, pairs, rng);
        const UnderlyingGraph& ug = b.graph();
        for (MatrixKind kind : {MatrixKind::adjacency, MatrixKind::laplacian}) {
            const auto sb = spectrum(b, kind);
            CHECK(max_spectrum_deviation(sb, graph_spectrum(ug, kind)) <= 1e-9);
            for (const auto& v : sb.values) CHECK(std::abs(v.d) <= 1e-9);
        }
        if (ug.is_connected()) {
            const auto lb = spectrum(b, MatrixKind::laplacian).values;
            CHECK(std::abs(lb.back().s) <= 1e-9);
            for (std::size_t i = 0; i + 1 < lb.size(); ++i) CHECK(lb[i].s > 1e-9);
        }
    }
}

TEST_CASE("matrix kind names") {
    CHECK(parse_kind("laplacian") == MatrixKind::laplacian);
    CHECK(kind_name(MatrixKind::adjacency) == "adjacency");
    CHECK_THROWS_AS(parse_kind("signless"), BadParameter);
}
