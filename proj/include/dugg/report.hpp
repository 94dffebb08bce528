#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "dugg/char_poly.hpp"
#include "dugg/dual_scalar.hpp"
#include "dugg/graph_io.hpp"
#include "dugg/spectra.hpp"

namespace dugg {

/// Ring-erased balance certificate.
struct BalanceReport {
    bool balanced = false;
    std::vector<DualScalar> theta;
    std::vector<int> witness_cycle;
    std::optional<DualScalar> witness_gain;  ///< gain around witness_cycle
    double max_mismatch = 0.0;

    friend bool operator==(const BalanceReport&, const BalanceReport&) = default;
};

template <BaseRing T>
BalanceReport make_balance_report(const GainGraph<T>& g, double tol = kGainTol) {
    const PotentialCertificate<T> cert = balance_certificate(g, tol);
    BalanceReport r;
    r.balanced = cert.balanced;
    for (const auto& t : cert.theta) r.theta.emplace_back(t);
    r.witness_cycle = cert.witness_cycle;
    if (!cert.witness_cycle.empty()) {
        std::vector<int> walk = cert.witness_cycle;
        walk.push_back(walk.front());
        r.witness_gain = DualScalar(gain_of_walk(g, walk));
    }
    r.max_mismatch = cert.max_mismatch;
    return r;
}

/// Coefficients of the characteristic polynomial next to (-1)^i e_i of the
/// computed eigenvalues.
struct CharPolyReport {
    std::vector<DualNumber> coefficients;
    std::vector<DualNumber> from_eigenvalues;
    double max_deviation = 0.0;
    bool consistent = true;

    friend bool operator==(const CharPolyReport&, const CharPolyReport&) = default;
};

/// (-1)^i e_i(values), i = 1..n.
std::vector<DualNumber> signed_elementary_symmetric(const std::vector<DualNumber>& values);

CharPolyReport make_charpoly_report(std::vector<DualNumber> coefficients, const std::vector<DualNumber>& eigenvalues,
                                    double tol);

template <BaseRing T>
CharPolyReport charpoly_report(const GainGraph<T>& g, double tol = 1e-8, const EigenOptions& eig = {}) {
    return make_charpoly_report(coefficients(g), spectrum(g, MatrixKind::adjacency, eig).values, tol);
}

struct MdetReport {
    DualScalar moore;            ///< permutation expansion of A(Phi)
    DualNumber subgraphs;        ///< spanning basic subgraph sum
    DualNumber eigen_product;    ///< product of the eigenvalues
    double max_deviation = 0.0;  ///< largest pairwise component gap
    bool consistent = true;

    friend bool operator==(const MdetReport&, const MdetReport&) = default;
};

MdetReport make_mdet_report(const DualScalar& moore, DualNumber subgraphs, const std::vector<DualNumber>& eigenvalues,
                            double tol);

/// Closed form next to the eigensolver on the same graph.
struct ClosedFormReport {
    std::string family;  ///< "path" or "cycle"
    int n = 0;
    MatrixKind kind = MatrixKind::adjacency;
    Spectrum closed_form;
    Spectrum eigensolver;
    double max_deviation = 0.0;
    bool consistent = true;

    friend bool operator==(const ClosedFormReport&, const ClosedFormReport&) = default;
};

double max_spectrum_deviation(const Spectrum& a, const Spectrum& b);

/// Interlacing along a chain V = S_0 > S_1 > ... obtained by deleting one
/// vertex per step.
struct InterlaceChainReport {
    std::vector<int> deleted;
    std::vector<InterlacingVerdict> steps;
    bool holds = true;

    friend bool operator==(const InterlaceChainReport&, const InterlaceChainReport&) = default;
};

template <BaseRing T>
InterlaceChainReport interlace_chain(const GainGraph<T>& g, std::vector<int> deleted, MatrixKind kind, double tol) {
    InterlaceChainReport r;
    std::vector<int> keep;
    for (int v = 0; v < g.order(); ++v) keep.push_back(v);
    if (deleted.empty())
        for (int v = g.order() - 1; v >= 1; --v) deleted.push_back(v);
    for (int v : deleted) {
        auto it = std::find(keep.begin(), keep.end(), v);
        if (it == keep.end()) throw BadParameter("vertex " + std::to_string(v) + " is not in the current subset");
        keep.erase(it);
        if (keep.empty()) throw BadParameter("cannot delete every vertex");
        r.steps.push_back(check_interlacing(g, keep, kind, tol));
        r.holds = r.holds && r.steps.back().holds;
    }
    r.deleted = std::move(deleted);
    return r;
}

/// Outcome of a randomized property suite.
struct CheckReport {
    std::string suite;
    std::uint64_t seed = 0;
    int trials = 0;
    int passed = 0;
    int failed = 0;
    double tol = 0.0;
    std::optional<int> first_failure;           ///< trial index
    std::optional<std::string> counterexample;  ///< serialized graph or value
    std::string detail;                         ///< what failed first

    friend bool operator==(const CheckReport&, const CheckReport&) = default;
};

// JSON encodings. Field names follow the structs; a dual number is
// {"std": s, "dual": d} and a dual scalar {"std": [...], "dual": [...]}.
void to_json(nlohmann::json& j, const DualNumber& v);
void from_json(const nlohmann::json& j, DualNumber& v);
void to_json(nlohmann::json& j, const DualScalar& v);
void from_json(const nlohmann::json& j, DualScalar& v);
void to_json(nlohmann::json& j, const Spectrum& v);
void from_json(const nlohmann::json& j, Spectrum& v);
void to_json(nlohmann::json& j, const RadiusReport& v);
void from_json(const nlohmann::json& j, RadiusReport& v);
void to_json(nlohmann::json& j, const InterlacingVerdict& v);
void from_json(const nlohmann::json& j, InterlacingVerdict& v);
void to_json(nlohmann::json& j, const InterlaceChainReport& v);
void from_json(const nlohmann::json& j, InterlaceChainReport& v);
void to_json(nlohmann::json& j, const BalanceReport& v);
void from_json(const nlohmann::json& j, BalanceReport& v);
void to_json(nlohmann::json& j, const CharPolyReport& v);
void from_json(const nlohmann::json& j, CharPolyReport& v);
void to_json(nlohmann::json& j, const MdetReport& v);
void from_json(const nlohmann::json& j, MdetReport& v);
void to_json(nlohmann::json& j, const ClosedFormReport& v);
void from_json(const nlohmann::json& j, ClosedFormReport& v);
void to_json(nlohmann::json& j, const CheckReport& v);
void from_json(const nlohmann::json& j, CheckReport& v);

// Human-readable tables.
std::string render_table(const Spectrum& v);
std::string render_table(const RadiusReport& v);
std::string render_table(const InterlaceChainReport& v);
std::string render_table(const BalanceReport& v);
std::string render_table(const CharPolyReport& v);
std::string render_table(const MdetReport& v);
std::string render_table(const ClosedFormReport& v);
std::string render_table(const CheckReport& v);

}  // namespace dugg
