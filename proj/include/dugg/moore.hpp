#pragma once

#include <algorithm>
#include <numeric>
#include <vector>

#include "dugg/dual_matrix.hpp"

namespace dugg {

inline constexpr int kMooreSizeCap = 9;

/// Moore determinant by explicit permutation expansion.
///
/// Each permutation is split into disjoint cycles, every cycle written from
/// its smallest index and the cycles listed by decreasing leading index; the
/// entries a_{i, sigma(i)} are multiplied in exactly that order, which is what
/// makes the value well defined over the quaternions.
template <BaseRing T>
Dual<T> moore_determinant(const DualMatrix<T>& a, double hermitian_tol = 1e-10,
                          int size_cap = kMooreSizeCap) {
    if (!is_hermitian(a, hermitian_tol)) throw NotHermitian();
    const int n = static_cast<int>(a.rows());
    if (n > size_cap) throw SizeCapExceeded(n, size_cap);
    if (n == 0) return Dual<T>{ring_traits<T>::from_real(1.0)};

    std::vector<int> sigma(static_cast<std::size_t>(n));
    std::iota(sigma.begin(), sigma.end(), 0);
    std::vector<int> leaders;
    std::vector<char> seen(static_cast<std::size_t>(n));
    Dual<T> total{};
    do {
        std::fill(seen.begin(), seen.end(), 0);
        leaders.clear();
        for (int i = 0; i < n; ++i) {
            if (seen[static_cast<std::size_t>(i)]) continue;
            leaders.push_back(i);  // smallest unvisited index leads its cycle
            for (int j = i; !seen[static_cast<std::size_t>(j)]; j = sigma[static_cast<std::size_t>(j)]) {
                seen[static_cast<std::size_t>(j)] = 1;
            }
        }
        Dual<T> term{ring_traits<T>::from_real(1.0)};
        bool zero = false;
        for (auto it = leaders.rbegin(); it != leaders.rend() && !zero; ++it) {
            int j = *it;
            do {
                const int next = sigma[static_cast<std::size_t>(j)];
                const Dual<T> entry = a(j, next);
                if (entry == Dual<T>{}) {
                    zero = true;
                    break;
                }
                term = term * entry;
                j = next;
            } while (j != *it);
        }
        if (zero) continue;
        const bool odd = (n - static_cast<int>(leaders.size())) % 2 != 0;
        total = odd ? total - term : total + term;
    } while (std::next_permutation(sigma.begin(), sigma.end()));
    return total;
}

}  // namespace dugg
