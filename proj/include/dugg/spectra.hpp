#pragma once

#include <string_view>
#include <vector>

#include "dugg/gain_graph.hpp"
#include "dugg/hermitian_eigen.hpp"
#include "dugg/transcendental.hpp"

namespace dugg {

enum class MatrixKind { adjacency, laplacian };

std::string_view kind_name(MatrixKind k);
MatrixKind parse_kind(std::string_view name);

/// Eigenvalues of A(Phi) or L(Phi), decreasing under the dual order.
struct Spectrum {
    MatrixKind kind = MatrixKind::adjacency;
    std::vector<DualNumber> values;

    friend bool operator==(const Spectrum&, const Spectrum&) = default;
};

/// Sorts decreasing; values whose standard parts agree to rel_tol * max(1, |x|)
/// are treated as tied (standard part replaced by the group mean) and ordered
/// by their dual parts.
void canonical_sort(std::vector<DualNumber>& values, double rel_tol = 1e-8);

template <BaseRing T>
DualMatrix<T> adjacency_matrix(const GainGraph<T>& g) {
    const Index n = g.order();
    DualMatrix<T> a(n, n);
    for (const auto& e : g.edges()) {
        a.set(e.u, e.v, e.gain);
        a.set(e.v, e.u, conj(e.gain));
    }
    return a;
}

/// L(Phi) = D(Phi) - A(Phi).
template <BaseRing T>
DualMatrix<T> laplacian_matrix(const GainGraph<T>& g) {
    DualMatrix<T> l = adjacency_matrix(g);
    l.s = -l.s;
    l.d = -l.d;
    for (int v = 0; v < g.order(); ++v) l.s(v, v) = ring_traits<T>::from_real(g.graph().degree(v));
    return l;
}

template <BaseRing T>
DualMatrix<T> gain_matrix(const GainGraph<T>& g, MatrixKind kind) {
    return kind == MatrixKind::adjacency ? adjacency_matrix(g) : laplacian_matrix(g);
}

template <BaseRing T>
std::vector<EigenPair<T>> eigenpairs(const GainGraph<T>& g, MatrixKind kind, const EigenOptions& opt = {}) {
    return hermitian_eigendecomposition(gain_matrix(g, kind), opt);
}

template <BaseRing T>
Spectrum spectrum(const GainGraph<T>& g, MatrixKind kind, const EigenOptions& opt = {}) {
    return {kind, hermitian_eigenvalues(gain_matrix(g, kind), opt)};
}

/// Spectrum of A(G) or L(G) of the underlying graph (dual parts zero).
Spectrum graph_spectrum(const UnderlyingGraph& g, MatrixKind kind);

/// Path P_n: 2 cos(pi j / (n+1)), j = 1..n, or 2 - 2 cos(pi j / n), j = 0..n-1.
Spectrum path_spectrum_closed_form(int n, MatrixKind kind);

/// Cycle C_n whose walk gain v_1 v_2 ... v_n v_1 is the unit dual complex q:
/// 2 cos((theta + 2 pi j) / n) with theta = -i log q, and 2 minus that for the
/// Laplacian.
Spectrum cycle_spectrum_closed_form(int n, const DualComplex& q, MatrixKind kind, double tol = 1e-9);

template <BaseRing T>
Spectrum cycle_spectrum_closed_form(int n, const Dual<T>& q, MatrixKind kind, double tol = 1e-9) {
    if constexpr (ring_of<T> == Ring::quaternion) {
        if (!is_unit(q, tol)) throw NotUnit();
        return cycle_spectrum_closed_form(n, dq_to_dc(q).a, kind, tol);
    } else if constexpr (ring_of<T> == Ring::real) {
        return cycle_spectrum_closed_form(n, DualComplex{q.s, q.d}, kind, tol);
    } else {
        return cycle_spectrum_closed_form(n, DualComplex(q), kind, tol);
    }
}

/// Largest |lambda_i| under the dual order. Throws BadParameter when empty.
DualNumber spectral_radius(const Spectrum& s);

/// lambda_i >= mu_i >= lambda_{n+i-k} for every i, under the dual order with
/// standard-part tie tolerance.
struct InterlacingVerdict {
    MatrixKind kind = MatrixKind::adjacency;
    std::vector<int> subset;
    Spectrum full;
    Spectrum sub;
    std::vector<bool> upper;  ///< lambda_i >= mu_i
    std::vector<bool> lower;  ///< mu_i >= lambda_{n+i-k}
    bool holds = true;

    friend bool operator==(const InterlacingVerdict&, const InterlacingVerdict&) = default;
};

InterlacingVerdict interlacing_verdict(MatrixKind kind, std::vector<int> subset, Spectrum full, Spectrum sub,
                                       double tol = 1e-9);

/// Checks interlacing of Phi against its vertex subset S. For the adjacency
/// kind the inner spectrum is that of A(Phi[S]); for the Laplacian kind it is
/// the principal submatrix of L(Phi) on S, i.e. L(Phi[S]) plus the degrees
/// lost to V \ S.
template <BaseRing T>
InterlacingVerdict check_interlacing(const GainGraph<T>& g, std::vector<int> subset, MatrixKind kind,
                                     double tol = 1e-9, const EigenOptions& opt = {}) {
    if (subset.empty()) throw BadParameter("interlacing needs a non-empty vertex subset");
    std::sort(subset.begin(), subset.end());
    subset.erase(std::unique(subset.begin(), subset.end()), subset.end());
    const GainGraph<T> h = induced_subgraph(g, subset);
    DualMatrix<T> inner = gain_matrix(h, kind);
    if (kind == MatrixKind::laplacian) {
        for (std::size_t k = 0; k < subset.size(); ++k) {
            inner.s(static_cast<Index>(k), static_cast<Index>(k)) =
                ring_traits<T>::from_real(g.graph().degree(subset[k]));
        }
    }
    Spectrum full = spectrum(g, kind, opt);
    Spectrum sub{kind, hermitian_eigenvalues(inner, opt)};
    return interlacing_verdict(kind, std::move(subset), std::move(full), std::move(sub), tol);
}

struct RadiusReport {
    MatrixKind kind = MatrixKind::adjacency;
    double rho_graph = 0.0;   ///< rho_A(G), or rho_Q(G) for the Laplacian
    DualNumber rho_gain;      ///< rho_A(Phi) or rho_L(Phi)
    double delta_bound = 0.0; ///< Delta, or 2 Delta for the Laplacian
    bool bound_holds = true;  ///< St(rho_gain) <= rho_graph <= delta_bound
    bool equality = false;    ///< St(rho_gain) = rho_graph with vanishing dual part
    bool connected = false;
    bool balanced = false;
    bool antibalanced = false;
    /// Balance of the standard parts of the gains alone.
    bool standard_balanced = false;
    bool standard_antibalanced = false;
    /// For connected graphs: equality agrees with the balance of the standard
    /// parts (adjacency: balanced or antibalanced; Laplacian: antibalanced).
    /// Imbalance carried only by dual parts leaves the radius unchanged.
    bool consistent = true;

    friend bool operator==(const RadiusReport&, const RadiusReport&) = default;
};

struct RadiusOptions {
    double bound_tol = 1e-9;
    double equality_tol = 1e-8;
    double balance_tol = kGainTol;
};

struct BalanceFlags {
    bool balanced = false;
    bool antibalanced = false;
    bool standard_balanced = false;
    bool standard_antibalanced = false;
};

template <BaseRing T>
BalanceFlags balance_flags(const GainGraph<T>& g, double tol = kGainTol) {
    const GainGraph<T> st = standard_part(g);
    return {balance_certificate(g, tol).balanced, is_antibalanced(g, tol), balance_certificate(st, tol).balanced,
            is_antibalanced(st, tol)};
}

RadiusReport make_radius_report(MatrixKind kind, const UnderlyingGraph& graph, DualNumber rho_gain,
                                const BalanceFlags& flags, const RadiusOptions& opt);

template <BaseRing T>
RadiusReport radius_report(const GainGraph<T>& g, MatrixKind kind, const RadiusOptions& opt = {},
                           const EigenOptions& eig = {}) {
    const DualNumber rho = spectral_radius(spectrum(g, kind, eig));
    return make_radius_report(kind, g.graph(), rho, balance_flags(g, opt.balance_tol), opt);
}

}  // namespace dugg
