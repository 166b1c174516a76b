#pragma once

#include <algorithm>
#include <complex>
#include <numeric>
#include <random>
#include <vector>

#include "oqho/linalg.hpp"
#include "oqho/matrix.hpp"
#include "oqho/model.hpp"

namespace oqho::test {

inline std::mt19937_64 rng(std::uint64_t seed) { return std::mt19937_64{seed}; }

inline RealMatrix random_matrix(std::mt19937_64& gen, std::size_t rows, std::size_t cols,
                                double scale = 1.0) {
    std::normal_distribution<double> dist(0.0, scale);
    RealMatrix m(rows, cols);
    for (std::size_t i = 0; i < rows; ++i)
        for (std::size_t j = 0; j < cols; ++j) m(i, j) = dist(gen);
    return m;
}

inline RealMatrix random_spd(std::mt19937_64& gen, std::size_t n, double ridge = 0.5) {
    RealMatrix g = random_matrix(gen, n, n);
    return symmetrized(g * g.transpose() + ridge * RealMatrix::identity(n));
}

// random matrix with spectrum shifted strictly into the left half plane
inline RealMatrix random_hurwitz(std::mt19937_64& gen, std::size_t n) {
    RealMatrix a = random_matrix(gen, n, n);
    const double shift = linalg::max_real_eigenvalue(a);
    for (std::size_t i = 0; i < n; ++i) a(i, i) -= shift + 0.3;
    return a;
}

// random oscillator with canonical CCR matrix, SPD energy matrix and a
// coupling shape resampled until every positive-frequency damping
// coefficient is strictly positive and A is Hurwitz at the given strength
OscillatorModel random_stable_oscillator(std::mt19937_64& gen, std::size_t n, std::size_t m,
                                         double epsilon);

// the running two-mode example used across tests
OscillatorModel two_mode_model(double epsilon);

// minimal total-distance assignment of candidate eigenvalues to references
// (exhaustive over permutations; sizes here are tiny)
inline double max_paired_distance(std::vector<Complex> got, const std::vector<Complex>& want) {
    std::vector<std::size_t> idx(want.size());
    std::iota(idx.begin(), idx.end(), 0);
    double best_total = 1e300;
    double best_max = 1e300;
    do {
        double total = 0.0, worst = 0.0;
        for (std::size_t k = 0; k < want.size(); ++k) {
            const double d = std::abs(got[idx[k]] - want[k]);
            total += d;
            worst = std::max(worst, d);
        }
        if (total < best_total) {
            best_total = total;
            best_max = worst;
        }
    } while (std::next_permutation(idx.begin(), idx.end()));
    return best_max;
}

}  // namespace oqho::test
