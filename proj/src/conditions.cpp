#include "msr/conditions.hpp"

#include <sstream>

namespace msr {

namespace {

/// Visits k-subsets of 0..n-1 in lexicographic order; stops when fn returns false.
template <typename Fn>
void for_each_subset(int n, int k, Fn&& fn) {
    std::vector<int> comb(static_cast<std::size_t>(k));
    for (int i = 0; i < k; ++i) comb[static_cast<std::size_t>(i)] = i;
    while (true) {
        if (!fn(comb)) return;
        int i = k - 1;
        while (i >= 0 && comb[static_cast<std::size_t>(i)] == n - k + i) --i;
        if (i < 0) return;
        ++comb[static_cast<std::size_t>(i)];
        for (int j = i + 1; j < k; ++j)
            comb[static_cast<std::size_t>(j)] = comb[static_cast<std::size_t>(j - 1)] + 1;
    }
}

}  // namespace

IndependenceResult check_independence(const RegeneratingCode& code) {
    IndependenceResult result;
    result.ok = true;
    for_each_subset(code.params.n, code.params.k, [&](const std::vector<int>& subset) {
        std::vector<FieldMatrix> blocks;
        blocks.reserve(subset.size());
        for (int s : subset) blocks.push_back(code.storage[static_cast<std::size_t>(s)]);
        if (det(vstack(blocks)).is_zero()) {
            result.ok = false;
            result.witness = subset;
            return false;
        }
        return true;
    });
    return result;
}

IndependenceResult check_independence_symmetric(const SymmetricSeed& seed) {
    const int n = seed.params.n;
    const int k = seed.params.k;
    std::vector<FieldMatrix> powers;  // base * R^t for t = 0..n-1
    powers.reserve(static_cast<std::size_t>(n));
    powers.push_back(seed.base);
    for (int t = 1; t < n; ++t) powers.push_back(powers.back() * seed.rotation);

    IndependenceResult result;
    result.ok = true;
    // Subsets anchored at node 0: choose the k-1 remaining offsets.
    for_each_subset(n - 1, k - 1, [&](const std::vector<int>& offsets) {
        std::vector<FieldMatrix> blocks;
        blocks.reserve(static_cast<std::size_t>(k));
        blocks.push_back(powers[0]);
        for (int o : offsets) blocks.push_back(powers[static_cast<std::size_t>(o + 1)]);
        if (det(vstack(blocks)).is_zero()) {
            result.ok = false;
            result.witness.push_back(0);
            for (int o : offsets) result.witness.push_back(o + 1);
            return false;
        }
        return true;
    });
    return result;
}

std::optional<FieldMatrix> check_recovery(const RegeneratingCode& code, int failed) {
    std::vector<FieldMatrix> rows;
    rows.reserve(static_cast<std::size_t>(code.params.n - 1));
    for (int i = 0; i < code.params.n; ++i) {
        if (i == failed) continue;
        rows.push_back(code.transmission(i, failed) * code.storage[static_cast<std::size_t>(i)]);
    }
    return solve_left(code.storage[static_cast<std::size_t>(failed)], vstack(rows));
}

std::optional<FieldMatrix> check_recovery_symmetric(const SymmetricSeed& seed) {
    std::vector<FieldMatrix> rows;
    rows.reserve(static_cast<std::size_t>(seed.params.n - 1));
    FieldMatrix a = seed.base;
    for (int t = 1; t < seed.params.n; ++t) {
        a = a * seed.rotation;  // base * R^t
        rows.push_back(seed.b[static_cast<std::size_t>(t - 1)] * a);
    }
    return solve_left(seed.base, vstack(rows));
}

VerificationVerdict verify(const RegeneratingCode& code, bool with_general_position) {
    VerificationVerdict v;
    const auto ind = check_independence(code);
    v.independent = ind.ok;
    if (!ind.ok) {
        std::ostringstream os;
        os << "independence: singular stack of nodes {";
        for (std::size_t i = 0; i < ind.witness.size(); ++i)
            os << (i ? " " : "") << ind.witness[i] + 1;
        os << "}";
        v.failures.push_back(os.str());
    }
    v.recoverable = true;
    for (int j = 0; j < code.params.n; ++j) {
        auto c = check_recovery(code, j);
        if (c) {
            v.rebuild.emplace(j, std::move(*c));
        } else {
            v.recoverable = false;
            v.failures.push_back("recovery: node " + std::to_string(j + 1) +
                                 " not rebuildable from received packets");
        }
    }
    if (with_general_position) {
        v.general_position_checked = true;
        v.general_position = check_general_position(code);
    }
    return v;
}

std::string render(const VerificationVerdict& v) {
    std::ostringstream os;
    os << "independence " << (v.independent ? "OK" : "FAIL") << '\n';
    for (const auto& [node, c] : v.rebuild) os << "recovery node " << node + 1 << " OK\n";
    for (const auto& f : v.failures)
        if (f.rfind("recovery", 0) == 0) os << "recovery FAIL " << f.substr(10) << '\n';
    if (!v.independent)
        for (const auto& f : v.failures)
            if (f.rfind("independence", 0) == 0) os << "witness " << f.substr(14) << '\n';
    if (v.general_position_checked)
        os << "general-position " << (v.general_position ? "OK" : "FAIL") << '\n';
    return os.str();
}

RecoverySubspace recovery_subspace(const FieldMatrix& a_j, const FieldMatrix& y, int node,
                                   const CodeParameters& params) {
    if (rank(y) != y.rows()) throw InvalidParametersError("Y must have full row rank");
    if (!(a_j * transpose(y)).is_zero())
        throw InvalidParametersError("Y does not annihilate the failed node");

    // span X = annihilator of Y; extend A_j greedily with its basis rows.
    const FieldMatrix x_basis = nullspace(y);
    RecoverySubspace rs;
    rs.node = node;
    std::vector<FieldMatrix> stack_rows;
    for (int i = 0; i < a_j.rows(); ++i) stack_rows.push_back(a_j.row(i));
    std::vector<FieldMatrix> extra;
    int current_rank = rank(a_j);
    for (int i = 0; i < x_basis.rows() && current_rank < params.n - 1; ++i) {
        stack_rows.push_back(x_basis.row(i));
        const int r = rank(vstack(stack_rows));
        if (r > current_rank) {
            current_rank = r;
            extra.push_back(x_basis.row(i));
        } else {
            stack_rows.pop_back();
        }
    }
    if (current_rank != params.n - 1)
        throw InvalidParametersError("complement does not leave an (n-1)-dimensional recovered span");
    rs.extra_rows = extra.empty() ? FieldMatrix(a_j.field(), 0, a_j.cols()) : vstack(extra);
    std::vector<FieldMatrix> full = {rs.extra_rows, a_j};
    rs.full_stack = rs.extra_rows.rows() == 0 ? a_j : vstack(full);
    rs.complement = y;
    return rs;
}

std::optional<std::vector<FieldMatrix>> derive_b_candidates(const std::vector<FieldMatrix>& storage,
                                                            const FieldMatrix& y, int failed) {
    const int n = static_cast<int>(storage.size());
    const FieldMatrix yt = transpose(y);
    std::vector<FieldMatrix> out;
    out.reserve(static_cast<std::size_t>(n - 1));
    for (int i = 0; i < n; ++i) {
        if (i == failed) continue;
        // B must satisfy B (A_i Y^T) = 0, i.e. B in the left nullspace.
        FieldMatrix basis = nullspace(transpose(storage[static_cast<std::size_t>(i)] * yt));
        if (basis.rows() == 0) return std::nullopt;
        out.push_back(std::move(basis));
    }
    return out;
}

std::vector<FieldMatrix> projective_representatives(const FieldMatrix& basis) {
    const int d = basis.rows();
    const int q = basis.field()->order();
    std::vector<FieldMatrix> reps;
    if (d == 0) return reps;
    // Coefficient vectors with first nonzero coordinate equal to 1: iterate
    // the position of that leading 1, then free trailing digits.
    std::vector<std::uint8_t> coeff(static_cast<std::size_t>(d), 0);
    for (int lead = 0; lead < d; ++lead) {
        const int tail = d - lead - 1;
        unsigned long long count = 1;
        for (int i = 0; i < tail; ++i) count *= static_cast<unsigned long long>(q);
        for (unsigned long long idx = 0; idx < count; ++idx) {
            std::fill(coeff.begin(), coeff.end(), 0);
            coeff[static_cast<std::size_t>(lead)] = 1;
            unsigned long long x = idx;
            for (int i = 0; i < tail; ++i) {
                coeff[static_cast<std::size_t>(lead + 1 + i)] = static_cast<std::uint8_t>(x % q);
                x /= static_cast<unsigned long long>(q);
            }
            FieldMatrix coeff_row(basis.field(), 1, d);
            for (int i = 0; i < d; ++i) coeff_row(0, i) = coeff[static_cast<std::size_t>(i)];
            reps.push_back(coeff_row * basis);
        }
    }
    return reps;
}

YSubspaceEnumerator::YSubspaceEnumerator(const FieldMatrix& a1, const CodeParameters& params)
    : null_basis_(nullspace(a1)), dim_((params.k - 1) * (params.alpha() - 1)) {
    if (rank(a1) != params.alpha())
        throw InvalidParametersError("Y enumeration requires a full-row-rank storage matrix");
    if (dim_ > 0) coords_.emplace(a1.field(), dim_, null_basis_.rows());
}

unsigned long long YSubspaceEnumerator::size() const {
    return dim_ == 0 ? 1 : coords_->size();
}

FieldMatrix YSubspaceEnumerator::at(unsigned long long index) const {
    if (dim_ == 0) {
        if (index != 0) throw DimensionMismatchError("Y index out of range");
        return FieldMatrix(null_basis_.field(), 0, null_basis_.cols());
    }
    return rref(coords_->at(index) * null_basis_).matrix;
}

bool check_general_position(const RegeneratingCode& code) {
    const int total_rows = code.params.n * code.params.alpha();
    const int dim = code.params.total_cols();
    std::vector<FieldMatrix> rows;
    rows.reserve(static_cast<std::size_t>(total_rows));
    for (const auto& a : code.storage)
        for (int i = 0; i < a.rows(); ++i) rows.push_back(a.row(i));
    bool ok = true;
    for_each_subset(total_rows, dim, [&](const std::vector<int>& subset) {
        std::vector<FieldMatrix> blocks;
        blocks.reserve(subset.size());
        for (int s : subset) blocks.push_back(rows[static_cast<std::size_t>(s)]);
        if (det(vstack(blocks)).is_zero()) {
            ok = false;
            return false;
        }
        return true;
    });
    return ok;
}

}  // namespace msr
