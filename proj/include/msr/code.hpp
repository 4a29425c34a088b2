#ifndef MSR_CODE_HPP
#define MSR_CODE_HPP

#include <utility>
#include <vector>

#include "msr/matrix.hpp"
#include "msr/rational.hpp"

namespace msr {

/**
 * Parameters of an (n, k) storage code repairing from d = n-1 helpers.
 * Each node stores alpha = n-k packets; source data has k*alpha packets,
 * so storage matrices are alpha x k*alpha.
 */
struct CodeParameters {
    int n = 0;
    int k = 0;

    static CodeParameters make(int n, int k);

    int helpers() const { return n - 1; }
    int alpha() const { return n - k; }
    int total_cols() const { return k * (n - k); }

    friend bool operator==(const CodeParameters& a, const CodeParameters& b) {
        return a.n == b.n && a.k == b.k;
    }
    friend bool operator!=(const CodeParameters& a, const CodeParameters& b) { return !(a == b); }
};

/**
 * Fully explicit code: one storage matrix per node and one transmission
 * row vector per ordered node pair (helper i, failed j), i != j.
 * Rebuild matrices are always derived on demand, never stored.
 *
 * Nodes are 0-based in the API; file formats and reports print 1-based.
 */
struct RegeneratingCode {
    CodeParameters params;
    FieldPtr field;
    std::vector<FieldMatrix> storage;        // n matrices, alpha x total_cols
    std::vector<FieldMatrix> transmissions;  // n*n slots, diagonal unused

    const FieldMatrix& transmission(int helper, int failed) const {
        return transmissions[static_cast<std::size_t>(helper) * params.n + failed];
    }
    FieldMatrix& transmission(int helper, int failed) {
        return transmissions[static_cast<std::size_t>(helper) * params.n + failed];
    }

    /// Structural validation: shapes, shared field, nonzero B vectors.
    void validate() const;
};

/**
 * Rotationally symmetric code in compact form: node i (0-based) stores
 * base * R^i, and the transmission from helper i to failed node j depends
 * only on the offset t = (i - j) mod n, giving n-1 shared vectors
 * b[0] = B_1 .. b[n-2] = B_{n-1}.
 */
struct SymmetricSeed {
    CodeParameters params;
    FieldPtr field;
    FieldMatrix base;            // storage matrix of node 0
    FieldMatrix rotation;        // R, total_cols x total_cols, R^n = I
    std::vector<FieldMatrix> b;  // B_1..B_{n-1}, each 1 x alpha

    void validate() const;  // includes R^n = I, R^t != I for 0 < t < n
};

/// Canonical rotation: one n-cycle on the first n coordinates, identity on
/// the rest.  Requires total_cols >= n.
FieldMatrix rotation_matrix(const FieldPtr& field, const CodeParameters& params);

RegeneratingCode expand(const SymmetricSeed& seed);

/// Replaces A_i with T A_i and B_{i,j} with B_{i,j} T^{-1}; T is alpha x alpha
/// invertible.  Preserves both code conditions.
RegeneratingCode row_transform(const RegeneratingCode& code, const FieldMatrix& t);

/// Replaces A_i with A_i T; transmissions unchanged.  T is total_cols x
/// total_cols invertible.
RegeneratingCode column_transform(const RegeneratingCode& code, const FieldMatrix& t);

/// Column transform of a seed: base becomes base*T and the rotation is
/// conjugated to T^-1 R T, so symmetry is preserved.
SymmetricSeed column_transform(const SymmetricSeed& seed, const FieldMatrix& t);

/// Column transform by T = inverse of the stack of the first k storage
/// matrices; afterwards those matrices stack to the identity.  Returns the
/// transformed code and T.  Throws SingularError when the stack is singular
/// (the code violates independence).
std::pair<RegeneratingCode, FieldMatrix> to_systematic(const RegeneratingCode& code);
std::pair<SymmetricSeed, FieldMatrix> to_systematic(const SymmetricSeed& seed);

/**
 * Repair bandwidth figures for one failure with d = n-1 helpers, file size M:
 *   gamma_naive = M                      (rebuild by full reconstruction)
 *   gamma_msr   = (M/k) (n-1)/(n-k)      (cut-set lower bound for MDS codes)
 *   gamma_ia    = (M/k) ((k-1)(n-k)+1)/(n-k)   (subspace-alignment scheme)
 * gamma_msr == gamma_ia exactly when k == 2 or k == n-1.
 */
struct RateParameters {
    Rational file_size;
    int n = 0;
    int k = 0;
    Rational gamma_naive;
    Rational gamma_msr;
    Rational gamma_ia;
    Rational subpacket_size;  // M / (k (n-k))
    bool bound_achieved = false;
};

RateParameters rates(int n, int k, Rational file_size);

}  // namespace msr

#endif
