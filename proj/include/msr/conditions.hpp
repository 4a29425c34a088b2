#ifndef MSR_CONDITIONS_HPP
#define MSR_CONDITIONS_HPP

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "msr/code.hpp"

namespace msr {

/// Outcome of the independence (MDS) check.  On failure, `witness` holds
/// the first offending node subset in lexicographic order (0-based).
struct IndependenceResult {
    bool ok = false;
    std::vector<int> witness;
};

/// Every k-subset of storage matrices must stack to a nonsingular square
/// matrix: any k nodes reconstruct the source data.
IndependenceResult check_independence(const RegeneratingCode& code);

/// Same verdict as check_independence on the expanded code, but only the
/// C(n-1, k-1) subsets containing node 0 are tested: rotating any subset so
/// it touches node 0 multiplies the stacked determinant by det(R^s) != 0.
IndependenceResult check_independence_symmetric(const SymmetricSeed& seed);

/// Stacks the n-1 transmitted rows B_{i,j} A_i (helpers i in ascending
/// order) and solves A_j = C_j * stack.  Returns C_j, or nothing when some
/// row of A_j is outside the span of the received packets.
std::optional<FieldMatrix> check_recovery(const RegeneratingCode& code, int failed);

/// The single collapsed recovery condition of a symmetric code:
/// base = C * stack(B_t base R^t, t = 1..n-1).  The same C rebuilds every
/// node of the expansion (up to the column order induced by helper
/// renumbering).
std::optional<FieldMatrix> check_recovery_symmetric(const SymmetricSeed& seed);

struct VerificationVerdict {
    bool independent = false;
    bool recoverable = false;
    bool general_position_checked = false;
    bool general_position = false;
    std::vector<std::string> failures;        // "condition: witness" lines
    std::map<int, FieldMatrix> rebuild;       // failed node -> C_j
};

VerificationVerdict verify(const RegeneratingCode& code, bool with_general_position = false);

/// Renders one line per condition: "independence OK" / "recovery node 3 FAIL ...".
std::string render(const VerificationVerdict& v);

/**
 * The subspace bookkeeping of a single repair: when node j is lost, the
 * n-1 received packets span X_j = [Z_j ; A_j] (k-1 extra recovered rows on
 * top of the node's own alpha rows), and Y_j is a basis of the annihilated
 * complement, so A_j Y_j^T = 0 and Z_j Y_j^T = 0.
 */
struct RecoverySubspace {
    int node = 0;
    FieldMatrix extra_rows;  // Z_j, (k-1) x total_cols
    FieldMatrix full_stack;  // X_j = [Z_j ; A_j], (n-1) x total_cols
    FieldMatrix complement;  // Y_j, (k-1)(n-k-1) x total_cols
};

/// Completes Y (full row rank, A_j Y^T = 0) into the X/Z/Y triple by
/// extending A_j with nullspace(Y) rows until rank n-1.
RecoverySubspace recovery_subspace(const FieldMatrix& a_j, const FieldMatrix& y, int node,
                                   const CodeParameters& params);

/// For each helper i != failed (ascending), the nullspace basis of
/// (A_i Y^T)^T — the candidate transmission vectors B_{i,j}.  Returns
/// nothing if any helper has an empty nullspace (nullity 0).
std::optional<std::vector<FieldMatrix>> derive_b_candidates(const std::vector<FieldMatrix>& storage,
                                                            const FieldMatrix& y, int failed);

/// One representative per scalar class of the nonzero vectors spanned by
/// `basis` rows: coefficient vectors whose first nonzero coordinate is 1.
std::vector<FieldMatrix> projective_representatives(const FieldMatrix& basis);

/**
 * Enumerates one canonical basis per (k-1)(n-k-1)-dimensional subspace of
 * the right nullspace of A1.  Candidates Y for node-0 repair are exactly
 * these: X_0 contains A_0, so Y must annihilate A_0.  Canonical means the
 * RREF of the lifted coordinates applied to the nullspace basis, then
 * row-reduced again in ambient coordinates.
 */
class YSubspaceEnumerator {
  public:
    YSubspaceEnumerator(const FieldMatrix& a1, const CodeParameters& params);

    unsigned long long size() const;
    FieldMatrix at(unsigned long long index) const;
    int subspace_dim() const { return dim_; }

  private:
    FieldMatrix null_basis_;
    int dim_;
    std::optional<RrefEnumerator> coords_;  // absent when dim_ == 0
};

/// Strictly stronger than independence: every total_cols-subset of all
/// n*alpha storage rows is nonsingular.
bool check_general_position(const RegeneratingCode& code);

}  // namespace msr

#endif
