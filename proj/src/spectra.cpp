#include "dugg/spectra.hpp"

#include <cmath>
#include <numbers>
#include <string>

namespace dugg {

using std::numbers::pi;

std::string_view kind_name(MatrixKind k) {
    return k == MatrixKind::adjacency ? "adjacency" : "laplacian";
}

MatrixKind parse_kind(std::string_view name) {
    if (name == "adjacency") return MatrixKind::adjacency;
    if (name == "laplacian") return MatrixKind::laplacian;
    throw BadParameter("unknown matrix kind '" + std::string(name) + "'");
}

void canonical_sort(std::vector<DualNumber>& values, double rel_tol) {
    std::stable_sort(values.begin(), values.end(),
                     [](const DualNumber& a, const DualNumber& b) { return a.s > b.s; });
    Eigen::VectorXd std_parts(static_cast<Index>(values.size()));
    for (std::size_t i = 0; i < values.size(); ++i) std_parts(static_cast<Index>(i)) = values[i].s;
    for (const auto& [begin, end] : cluster_ranges(std_parts, rel_tol)) {
        const double mean = std_parts.segment(begin, end - begin).mean();
        auto first = values.begin() + begin;
        auto last = values.begin() + end;
        for (auto it = first; it != last; ++it) it->s = mean;
        std::stable_sort(first, last, [](const DualNumber& a, const DualNumber& b) { return a.d > b.d; });
    }
}

Spectrum graph_spectrum(const UnderlyingGraph& g, MatrixKind kind) {
    const Eigen::MatrixXd m = kind == MatrixKind::adjacency ? g.adjacency() : g.laplacian();
    const auto eig = jacobi_eigen<double>(m);
    Spectrum s{kind, {}};
    for (Index i = 0; i < eig.values.size(); ++i) s.values.push_back({eig.values(i), 0.0});
    return s;
}

Spectrum path_spectrum_closed_form(int n, MatrixKind kind) {
    if (n < 1) throw BadParameter("path needs at least one vertex");
    Spectrum s{kind, {}};
    for (int j = 0; j < n; ++j) {
        if (kind == MatrixKind::adjacency) {
            s.values.push_back({2.0 * std::cos(pi * (j + 1) / (n + 1)), 0.0});
        } else {
            s.values.push_back({2.0 - 2.0 * std::cos(pi * j / n), 0.0});
        }
    }
    canonical_sort(s.values);
    return s;
}

Spectrum cycle_spectrum_closed_form(int n, const DualComplex& q, MatrixKind kind, double tol) {
    if (n < 3) throw BadParameter("cycle needs at least three vertices");
    const DualAngle theta = unit_to_angle(q, tol);
    Spectrum s{kind, {}};
    for (int j = 0; j < n; ++j) {
        const DualNumber c = dual_cos({(theta.s + 2.0 * pi * j) / n, theta.d / n});
        const DualNumber adj{2.0 * c.s, 2.0 * c.d};
        s.values.push_back(kind == MatrixKind::adjacency ? adj : DualNumber{2.0 - adj.s, -adj.d});
    }
    canonical_sort(s.values);
    return s;
}

DualNumber spectral_radius(const Spectrum& s) {
    if (s.values.empty()) throw BadParameter("spectral radius of an empty spectrum");
    DualNumber best = magnitude(s.values.front());
    for (const auto& v : s.values) best = std::max(best, magnitude(v));
    return best;
}

InterlacingVerdict interlacing_verdict(MatrixKind kind, std::vector<int> subset, Spectrum full, Spectrum sub,
                                       double tol) {
    InterlacingVerdict v;
    v.kind = kind;
    v.subset = std::move(subset);
    const std::size_t n = full.values.size();
    const std::size_t k = sub.values.size();
    for (std::size_t i = 0; i < k; ++i) {
        const bool up = geq_tol(full.values[i], sub.values[i], tol);
        const bool low = geq_tol(sub.values[i], full.values[n - k + i], tol);
        v.upper.push_back(up);
        v.lower.push_back(low);
        v.holds = v.holds && up && low;
    }
    v.full = std::move(full);
    v.sub = std::move(sub);
    return v;
}

RadiusReport make_radius_report(MatrixKind kind, const UnderlyingGraph& graph, DualNumber rho_gain,
                                const BalanceFlags& flags, const RadiusOptions& opt) {
    RadiusReport r;
    r.kind = kind;
    r.rho_gain = rho_gain;
    const Eigen::MatrixXd m = kind == MatrixKind::adjacency ? graph.adjacency() : graph.signless_laplacian();
    if (graph.order() > 0) {
        const auto eig = jacobi_eigen<double>(m);
        r.rho_graph = std::max(std::abs(eig.values(0)), std::abs(eig.values(eig.values.size() - 1)));
    }
    const int delta = graph.max_degree();
    r.delta_bound = kind == MatrixKind::adjacency ? delta : 2.0 * delta;
    r.bound_holds = rho_gain.s <= r.rho_graph + opt.bound_tol && r.rho_graph <= r.delta_bound + opt.bound_tol;
    r.equality = std::abs(rho_gain.s - r.rho_graph) <= opt.equality_tol && std::abs(rho_gain.d) <= opt.equality_tol;
    r.connected = graph.is_connected();
    r.balanced = flags.balanced;
    r.antibalanced = flags.antibalanced;
    r.standard_balanced = flags.standard_balanced;
    r.standard_antibalanced = flags.standard_antibalanced;
    if (r.connected && graph.order() > 0) {
        const bool expected = kind == MatrixKind::adjacency ? (flags.standard_balanced || flags.standard_antibalanced)
                                                            : flags.standard_antibalanced;
        r.consistent = expected == r.equality;
    }
    return r;
}

}  // namespace dugg
