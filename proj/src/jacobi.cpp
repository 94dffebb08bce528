#include "dugg/jacobi.hpp"

namespace dugg {

std::vector<std::pair<Index, Index>> cluster_ranges(const Eigen::VectorXd& values, double rel_tol) {
    std::vector<std::pair<Index, Index>> out;
    const Index n = values.size();
    Index begin = 0;
    for (Index i = 1; i <= n; ++i) {
        const bool split = i == n || std::abs(values(i - 1) - values(i)) >
                                         rel_tol * std::max(1.0, std::abs(values(i - 1)));
        if (split) {
            out.emplace_back(begin, i);
            begin = i;
        }
    }
    return out;
}

namespace {

// x* y over quaternion vectors.
Quaternion qdot(const Vec<Quaternion>& x, const Vec<Quaternion>& y) {
    Quaternion acc{};
    for (Index i = 0; i < x.size(); ++i) acc += conj(x(i)) * y(i);
    return acc;
}

double qnorm(const Vec<Quaternion>& x) {
    double acc = 0.0;
    for (Index i = 0; i < x.size(); ++i) acc += norm2(x(i));
    return std::sqrt(acc);
}

}  // namespace

StandardEigen<Quaternion> quaternion_hermitian_eigen(const Mat<Quaternion>& a,
                                                     const JacobiOptions& opt,
                                                     double cluster_rel_tol) {
    const Index n = a.rows();
    const StandardEigen<Complex> embedded = jacobi_eigen<Complex>(complex_adjoint(a), opt);

    StandardEigen<Quaternion> out;
    out.values.resize(n);
    out.vectors = Mat<Quaternion>::Constant(n, n, Quaternion{});
    out.sweeps = embedded.sweeps;

    std::vector<Vec<Quaternion>> accepted;
    accepted.reserve(static_cast<std::size_t>(n));
    for (const auto& [begin, end] : cluster_ranges(embedded.values, cluster_rel_tol)) {
        const Index size = end - begin;
        if (size % 2 != 0) throw Error("quaternion eigenvalue pairing failed");
        const double value = embedded.values.segment(begin, size).mean();

        std::vector<Vec<Quaternion>> candidates;
        for (Index c = begin; c < end; ++c) {
            candidates.push_back(quaternion_from_embedded(embedded.vectors.col(c)));
        }
        const std::size_t first_new = accepted.size();
        for (Index round = 0; round < size / 2; ++round) {
            // Pick the candidate with the largest component outside the span
            // of what has been accepted so far in this cluster.
            double best_norm = -1.0;
            Vec<Quaternion> best;
            for (const auto& cand : candidates) {
                Vec<Quaternion> r = cand;
                for (std::size_t k = first_new; k < accepted.size(); ++k) {
                    const Quaternion coef = qdot(accepted[k], r);
                    for (Index i = 0; i < n; ++i) r(i) -= accepted[k](i) * coef;
                }
                const double rn = qnorm(r);
                if (rn > best_norm) {
                    best_norm = rn;
                    best = std::move(r);
                }
            }
            for (Index i = 0; i < n; ++i) best(i) = best(i) / best_norm;
            const Index col = static_cast<Index>(accepted.size());
            out.values(col) = value;
            out.vectors.col(col) = best;
            accepted.push_back(std::move(best));
        }
    }
    return out;
}

}  // namespace dugg
