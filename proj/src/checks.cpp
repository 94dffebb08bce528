#include "dugg/checks.hpp"

#include <functional>
#include <optional>
#include <sstream>

#include "dugg/moore.hpp"

namespace dugg {

namespace {

struct Failure {
    std::string detail;
    std::string counterexample;
};

using Outcome = std::optional<Failure>;

int uniform_int(Rng& rng, int lo, int hi) { return std::uniform_int_distribution<int>(lo, hi)(rng); }
double uniform_real(Rng& rng, double lo, double hi) { return std::uniform_real_distribution<double>(lo, hi)(rng); }

/// Calls f.template operator()<T>() with the ring picked by k mod 3.
template <class F>
Outcome with_ring(int k, F&& f) {
    switch (k % 3) {
        case 0: return f.template operator()<double>();
        case 1: return f.template operator()<Complex>();
        default: return f.template operator()<Quaternion>();
    }
}

template <BaseRing T>
std::string dump(const GainGraph<T>& g) {
    return serialize(AnyGainGraph(g));
}

std::string list(const std::vector<int>& v) {
    std::ostringstream os;
    os << "{";
    for (std::size_t k = 0; k < v.size(); ++k) os << (k ? "," : "") << v[k];
    os << "}";
    return os.str();
}

Outcome interlacing_trial(Rng& rng, int trial, double tol) {
    return with_ring(trial, [&]<class T>() -> Outcome {
        const int n = uniform_int(rng, 2, 8);
        const auto g = random_gains<T>(n, random_edges(n, uniform_real(rng, 0.2, 0.9), rng), rng);
        std::vector<int> subset;
        for (int v = 0; v < n; ++v)
            if (std::bernoulli_distribution(0.6)(rng)) subset.push_back(v);
        if (subset.empty()) subset.push_back(uniform_int(rng, 0, n - 1));
        for (MatrixKind kind : {MatrixKind::adjacency, MatrixKind::laplacian}) {
            const auto verdict = check_interlacing(g, subset, kind, tol);
            if (!verdict.holds) return Failure{std::string(kind_name(kind)) + " interlacing fails for S = " + list(subset), dump(g)};
        }
        return std::nullopt;
    });
}

Outcome switching_trial(Rng& rng, int trial, double tol) {
    return with_ring(trial, [&]<class T>() -> Outcome {
        const int n = uniform_int(rng, 1, 8);
        const auto g = random_gains<T>(n, random_edges(n, uniform_real(rng, 0.2, 0.9), rng), rng);
        std::vector<Dual<T>> zeta;
        for (int v = 0; v < n; ++v) zeta.push_back(random_unit<T>(rng));
        const auto h = switching(g, zeta);
        for (MatrixKind kind : {MatrixKind::adjacency, MatrixKind::laplacian}) {
            const double dev = max_spectrum_deviation(spectrum(g, kind), spectrum(h, kind));
            if (dev > tol) {
                return Failure{std::string(kind_name(kind)) + " spectrum moved by " + std::to_string(dev) + " under switching",
                               dump(g)};
            }
        }
        if (balance_certificate(g).balanced != balance_certificate(h).balanced)
            return Failure{"balance changed under switching", dump(g)};
        return std::nullopt;
    });
}

Outcome radius_trial(Rng& rng, int trial, double tol) {
    return with_ring(trial, [&]<class T>() -> Outcome {
        const int n = uniform_int(rng, 1, 10);
        const auto pairs = random_edges(n, uniform_real(rng, 0.2, 0.9), rng);
        const auto g = (trial / 3) % 3 == 2 ? random_balanced<T>(n, pairs, rng) : random_gains<T>(n, pairs, rng);
        RadiusOptions opt;
        opt.bound_tol = tol;
        for (MatrixKind kind : {MatrixKind::adjacency, MatrixKind::laplacian}) {
            const RadiusReport r = radius_report(g, kind, opt);
            if (!r.bound_holds) return Failure{std::string(kind_name(kind)) + " radius bound violated", dump(g)};
            if (!r.consistent) return Failure{std::string(kind_name(kind)) + " equality disagrees with balance", dump(g)};
        }
        return std::nullopt;
    });
}

Outcome mdet_trial(Rng& rng, int trial, double tol) {
    return with_ring(trial, [&]<class T>() -> Outcome {
        const int n = uniform_int(rng, 1, 6);
        const auto g = random_gains<T>(n, random_edges(n, uniform_real(rng, 0.3, 1.0), rng), rng);
        const MdetReport r = make_mdet_report(DualScalar(moore_determinant(adjacency_matrix(g))), mdet_via_subgraphs(g),
                                              spectrum(g, MatrixKind::adjacency).values, tol);
        if (!r.consistent) return Failure{"determinants disagree by " + std::to_string(r.max_deviation), dump(g)};
        return std::nullopt;
    });
}

Outcome coefficient_trial(Rng& rng, int trial, double tol) {
    return with_ring(trial, [&]<class T>() -> Outcome {
        const int n = uniform_int(rng, 1, 7);
        const auto g = random_gains<T>(n, random_edges(n, uniform_real(rng, 0.3, 1.0), rng), rng);
        const CharPolyReport r = charpoly_report(g, tol);
        if (!r.consistent) return Failure{"coefficients disagree by " + std::to_string(r.max_deviation), dump(g)};
        return std::nullopt;
    });
}

DualQuaternion random_dual_quaternion(Rng& rng, int kind) {
    std::normal_distribution<double> gauss(0.0, 1.0);
    auto q = [&] { return Quaternion{gauss(rng), gauss(rng), gauss(rng), gauss(rng)}; };
    DualQuaternion out{q(), q()};
    switch (kind % 4) {
        case 1:  // real standard part
            out.s = Quaternion{out.s.w};
            break;
        case 2:  // already dual complex
            out.s.y = out.s.z = out.d.y = out.d.z = 0.0;
            break;
        case 3:  // standard part on the negative i axis
            out.s = Quaternion{out.s.w, -std::abs(out.s.x), 0.0, 0.0};
            break;
        default: break;
    }
    return out;
}

Outcome dq2dc_trial(Rng& rng, int trial, double tol) {
    const DualQuaternion q = random_dual_quaternion(rng, trial);
    const ComplexReduction red = dq_to_dc(q);
    const DualQuaternion a{Quaternion(red.a.s), Quaternion(red.a.d)};
    const DualQuaternion back = conj(red.u) * q * red.u;
    std::ostringstream detail;
    if (const double r = max_abs_diff(a, back); r > tol) detail << "residual " << r;
    else if (!is_unit(red.u, tol)) detail << "u is not a unit";
    else if (max_abs_diff(real_part(a), real_part(q)) > tol) detail << "real part changed";
    else if (max_abs_diff(magnitude(imag_part(a)), magnitude(imag_part(q))) > tol) detail << "|Im| changed";
    else return std::nullopt;
    return Failure{detail.str(), to_string(q) + "\n"};
}

Outcome closed_form_trial(Rng& rng, int trial, double tol) {
    return with_ring(trial, [&]<class T>() -> Outcome {
        const int n = uniform_int(rng, 3, 12);
        const Dual<T> q = random_unit<T>(rng);
        const auto cyc = cycle_graph<T>(n, q);
        const auto path = random_gains<T>(n, [&] {
            std::vector<std::pair<int, int>> e;
            for (int k = 0; k + 1 < n; ++k) e.emplace_back(k, k + 1);
            return e;
        }(), rng);
        for (MatrixKind kind : {MatrixKind::adjacency, MatrixKind::laplacian}) {
            const double dc = max_spectrum_deviation(cycle_spectrum_closed_form(n, q, kind), spectrum(cyc, kind));
            if (dc > tol) return Failure{std::string(kind_name(kind)) + " cycle closed form off by " + std::to_string(dc), dump(cyc)};
            const double dp = max_spectrum_deviation(path_spectrum_closed_form(n, kind), spectrum(path, kind));
            if (dp > tol) return Failure{std::string(kind_name(kind)) + " path closed form off by " + std::to_string(dp), dump(path)};
        }
        return std::nullopt;
    });
}

using TrialFn = Outcome (*)(Rng&, int, double);

struct Suite {
    std::string name;
    TrialFn run;
    double tol;
};

const std::vector<Suite>& suites() {
    static const std::vector<Suite> all{
        {"interlacing", interlacing_trial, 1e-9},
        {"switching-invariance", switching_trial, 1e-8},
        {"radius-bounds", radius_trial, 1e-9},
        {"mdet-product", mdet_trial, 1e-8},
        {"coefficient", coefficient_trial, 1e-8},
        {"dq2dc", dq2dc_trial, 1e-12},
        {"closed-forms", closed_form_trial, 1e-9},
    };
    return all;
}

const Suite& find_suite(std::string_view name) {
    for (const Suite& s : suites())
        if (s.name == name) return s;
    throw BadParameter("unknown check suite '" + std::string(name) + "'");
}

}  // namespace

const std::vector<std::string>& check_suites() {
    static const std::vector<std::string> names = [] {
        std::vector<std::string> out;
        for (const Suite& s : suites()) out.push_back(s.name);
        return out;
    }();
    return names;
}

double default_check_tol(std::string_view suite) { return find_suite(suite).tol; }

Rng trial_rng(std::uint64_t seed, int trial) {
    std::seed_seq seq{static_cast<std::uint32_t>(seed), static_cast<std::uint32_t>(seed >> 32),
                      static_cast<std::uint32_t>(trial)};
    return Rng(seq);
}

CheckReport run_check(std::string_view suite, int trials, std::uint64_t seed, double tol) {
    const Suite& s = find_suite(suite);
    if (trials < 0) throw BadParameter("trial count must be non-negative");
    CheckReport r;
    r.suite = s.name;
    r.seed = seed;
    r.trials = trials;
    r.tol = tol;
    for (int k = 0; k < trials; ++k) {
        Rng rng = trial_rng(seed, k);
        Outcome out;
        try {
            out = s.run(rng, k, tol);
        } catch (const Error& e) {
            out = Failure{std::string("error: ") + e.what(), ""};
        }
        if (!out) {
            ++r.passed;
            continue;
        }
        ++r.failed;
        if (!r.first_failure) {
            r.first_failure = k;
            r.detail = out->detail;
            if (!out->counterexample.empty()) r.counterexample = out->counterexample;
        }
    }
    return r;
}

}  // namespace dugg
