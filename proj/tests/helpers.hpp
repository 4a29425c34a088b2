#ifndef MSR_TEST_HELPERS_HPP
#define MSR_TEST_HELPERS_HPP

#include <random>
#include <set>
#include <vector>

#include "msr/matrix.hpp"

namespace msr::test {

inline FieldMatrix random_matrix(const FieldPtr& f, int rows, int cols, std::mt19937& rng) {
    std::uniform_int_distribution<int> dist(0, f->order() - 1);
    FieldMatrix m(f, rows, cols);
    for (int i = 0; i < rows; ++i)
        for (int j = 0; j < cols; ++j) m(i, j) = static_cast<std::uint8_t>(dist(rng));
    return m;
}

inline FieldMatrix random_invertible(const FieldPtr& f, int n, std::mt19937& rng) {
    while (true) {
        FieldMatrix m = random_matrix(f, n, n, rng);
        if (!det(m).is_zero()) return m;
    }
}

inline FieldMatrix random_nonzero_row(const FieldPtr& f, int cols, std::mt19937& rng) {
    while (true) {
        FieldMatrix m = random_matrix(f, 1, cols, rng);
        if (!m.is_zero()) return m;
    }
}

/// Independent rank oracle: the row span of an r x c matrix has q^rank
/// distinct vectors; count them by enumerating all q^r combinations.
inline int span_rank(const FieldMatrix& m) {
    const Field& f = *m.field();
    const int q = f.order();
    unsigned long long combos = 1;
    for (int i = 0; i < m.rows(); ++i) combos *= static_cast<unsigned long long>(q);
    std::set<std::vector<std::uint8_t>> span;
    for (unsigned long long idx = 0; idx < combos; ++idx) {
        std::vector<std::uint8_t> v(static_cast<std::size_t>(m.cols()), 0);
        unsigned long long x = idx;
        for (int i = 0; i < m.rows(); ++i) {
            const auto coeff = static_cast<std::uint8_t>(x % q);
            x /= static_cast<unsigned long long>(q);
            if (coeff == 0) continue;
            for (int j = 0; j < m.cols(); ++j)
                v[static_cast<std::size_t>(j)] = f.add(v[static_cast<std::size_t>(j)], f.mul(coeff, m(i, j)));
        }
        span.insert(std::move(v));
    }
    int r = 0;
    unsigned long long size = span.size();
    while (size > 1) {
        size /= static_cast<unsigned long long>(q);
        ++r;
    }
    return r;
}

/// Independent subspace-count oracle: [n k]_q by the classical quotient of
/// products ((q^n - 1)...(q^(n-k+1) - 1)) / ((q^k - 1)...(q - 1)).
inline unsigned long long gaussian_binomial_formula(unsigned long long q, int n, int k) {
    if (k < 0 || k > n) return 0;
    unsigned __int128 num = 1, den = 1;
    for (int i = 0; i < k; ++i) {
        unsigned __int128 qn = 1, qk = 1;
        for (int e = 0; e < n - i; ++e) qn *= q;
        for (int e = 0; e < k - i; ++e) qk *= q;
        num *= qn - 1;
        den *= qk - 1;
    }
    return static_cast<unsigned long long>(num / den);
}

}  // namespace msr::test

#endif
