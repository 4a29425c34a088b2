#include "msr/matrix.hpp"

#include <sstream>

namespace msr {

FieldMatrix::FieldMatrix(FieldPtr field, int rows, int cols)
    : field_(std::move(field)), rows_(rows), cols_(cols) {
    if (rows < 0 || cols < 0) throw DimensionMismatchError("negative matrix dimension");
    v_.assign(static_cast<std::size_t>(rows) * cols, 0);
}

FieldMatrix FieldMatrix::from_rows(const FieldPtr& field,
                                   const std::vector<std::vector<long long>>& rows) {
    if (rows.empty()) return FieldMatrix(field, 0, 0);
    const int r = static_cast<int>(rows.size());
    const int c = static_cast<int>(rows.front().size());
    FieldMatrix m(field, r, c);
    for (int i = 0; i < r; ++i) {
        if (static_cast<int>(rows[static_cast<std::size_t>(i)].size()) != c)
            throw DimensionMismatchError("ragged rows");
        for (int j = 0; j < c; ++j)
            m(i, j) = field->from_int(rows[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)]);
    }
    return m;
}

FieldMatrix FieldMatrix::identity(const FieldPtr& field, int n) {
    FieldMatrix m(field, n, n);
    for (int i = 0; i < n; ++i) m(i, i) = 1;
    return m;
}

FieldMatrix FieldMatrix::row(int r) const {
    FieldMatrix m(field_, 1, cols_);
    for (int j = 0; j < cols_; ++j) m(0, j) = (*this)(r, j);
    return m;
}

bool FieldMatrix::is_zero() const {
    for (std::uint8_t x : v_)
        if (x != 0) return false;
    return true;
}

FieldMatrix operator*(const FieldMatrix& a, const FieldMatrix& b) {
    require_same_field(a.field(), b.field());
    if (a.cols() != b.rows()) throw DimensionMismatchError("matmul shape mismatch");
    const Field& f = *a.field();
    FieldMatrix r(a.field(), a.rows(), b.cols());
    for (int i = 0; i < a.rows(); ++i) {
        for (int t = 0; t < a.cols(); ++t) {
            const std::uint8_t av = a(i, t);
            if (av == 0) continue;
            const std::uint8_t* brow = b.row_data(t);
            std::uint8_t* rrow = r.row_data(i);
            for (int j = 0; j < b.cols(); ++j) rrow[j] = f.add(rrow[j], f.mul(av, brow[j]));
        }
    }
    return r;
}

FieldMatrix operator+(const FieldMatrix& a, const FieldMatrix& b) {
    require_same_field(a.field(), b.field());
    if (a.rows() != b.rows() || a.cols() != b.cols())
        throw DimensionMismatchError("addition shape mismatch");
    const Field& f = *a.field();
    FieldMatrix r(a.field(), a.rows(), a.cols());
    for (int i = 0; i < a.rows(); ++i)
        for (int j = 0; j < a.cols(); ++j) r(i, j) = f.add(a(i, j), b(i, j));
    return r;
}

FieldMatrix transpose(const FieldMatrix& a) {
    FieldMatrix r(a.field(), a.cols(), a.rows());
    for (int i = 0; i < a.rows(); ++i)
        for (int j = 0; j < a.cols(); ++j) r(j, i) = a(i, j);
    return r;
}

FieldMatrix vstack(const std::vector<FieldMatrix>& blocks) {
    if (blocks.empty()) throw DimensionMismatchError("vstack of nothing");
    int rows = 0;
    const int cols = blocks.front().cols();
    for (const auto& b : blocks) {
        require_same_field(b.field(), blocks.front().field());
        if (b.cols() != cols) throw DimensionMismatchError("vstack column mismatch");
        rows += b.rows();
    }
    FieldMatrix r(blocks.front().field(), rows, cols);
    int at = 0;
    for (const auto& b : blocks)
        for (int i = 0; i < b.rows(); ++i, ++at)
            for (int j = 0; j < cols; ++j) r(at, j) = b(i, j);
    return r;
}

namespace {

// Shared elimination kernel: reduces `m` in place to RREF, records pivot
// columns, and multiplies `det_acc` by the pivot values and swap signs (only
// meaningful when the caller wants a determinant of a square matrix).
// Pivot search stops at `col_limit` when nonnegative; columns beyond it are
// still reduced but never chosen as pivots (augmented-matrix use).
std::vector<int> eliminate(FieldMatrix& m, std::uint8_t* det_acc, int col_limit = -1) {
    const Field& f = *m.field();
    const int last_pivot_col = col_limit < 0 ? m.cols() : col_limit;
    std::vector<int> pivots;
    int r = 0;
    for (int c = 0; c < last_pivot_col && r < m.rows(); ++c) {
        int piv = -1;
        for (int i = r; i < m.rows(); ++i)
            if (m(i, c) != 0) {
                piv = i;
                break;
            }
        if (piv < 0) continue;
        if (piv != r) {
            for (int j = 0; j < m.cols(); ++j) std::swap(m(piv, j), m(r, j));
            if (det_acc) *det_acc = f.mul(*det_acc, f.neg(1));
        }
        const std::uint8_t pval = m(r, c);
        if (det_acc) *det_acc = f.mul(*det_acc, pval);
        const std::uint8_t pinv = f.inv(pval);
        for (int j = c; j < m.cols(); ++j) m(r, j) = f.mul(m(r, j), pinv);
        for (int i = 0; i < m.rows(); ++i) {
            if (i == r) continue;
            const std::uint8_t factor = m(i, c);
            if (factor == 0) continue;
            for (int j = c; j < m.cols(); ++j)
                m(i, j) = f.sub(m(i, j), f.mul(factor, m(r, j)));
        }
        pivots.push_back(c);
        ++r;
    }
    return pivots;
}

}  // namespace

FieldElement det(const FieldMatrix& a) {
    if (a.rows() != a.cols()) throw NotSquareError("determinant of non-square matrix");
    FieldMatrix work = a;
    std::uint8_t acc = 1;
    const auto pivots = eliminate(work, &acc);
    if (static_cast<int>(pivots.size()) < a.rows()) return FieldElement(a.field(), 0);
    return FieldElement(a.field(), acc);
}

RrefResult rref(const FieldMatrix& a) {
    FieldMatrix work = a;
    auto pivots = eliminate(work, nullptr);
    return {std::move(work), std::move(pivots)};
}

int rank(const FieldMatrix& a) {
    FieldMatrix work = a;
    return static_cast<int>(eliminate(work, nullptr).size());
}

FieldMatrix invert(const FieldMatrix& a) {
    if (a.rows() != a.cols()) throw NotSquareError("inverse of non-square matrix");
    const int n = a.rows();
    FieldMatrix aug(a.field(), n, 2 * n);
    for (int i = 0; i < n; ++i) {
        for (int j = 0; j < n; ++j) aug(i, j) = a(i, j);
        aug(i, n + i) = 1;
    }
    const auto pivots = eliminate(aug, nullptr, n);
    if (static_cast<int>(pivots.size()) < n) throw SingularError("matrix is singular");
    FieldMatrix r(a.field(), n, n);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) r(i, j) = aug(i, n + j);
    return r;
}

FieldMatrix nullspace(const FieldMatrix& a) {
    const auto [red, pivots] = rref(a);
    const Field& f = *a.field();
    std::vector<int> free_cols;
    {
        std::size_t pi = 0;
        for (int c = 0; c < a.cols(); ++c) {
            if (pi < pivots.size() && pivots[pi] == c)
                ++pi;
            else
                free_cols.push_back(c);
        }
    }
    FieldMatrix basis(a.field(), static_cast<int>(free_cols.size()), a.cols());
    for (int bi = 0; bi < static_cast<int>(free_cols.size()); ++bi) {
        const int fc = free_cols[static_cast<std::size_t>(bi)];
        basis(bi, fc) = 1;
        for (int pi = 0; pi < static_cast<int>(pivots.size()); ++pi)
            basis(bi, pivots[static_cast<std::size_t>(pi)]) = f.neg(red(pi, fc));
    }
    return basis;
}

std::optional<FieldMatrix> solve_left(const FieldMatrix& target, const FieldMatrix& generators) {
    require_same_field(target.field(), generators.field());
    if (target.cols() != generators.cols())
        throw DimensionMismatchError("solve_left column mismatch");
    const Field& f = *target.field();
    const int g = generators.rows();
    const int cols = generators.cols();

    // Row-reduce [generators | I]; the right block tracks the row operations,
    // so target rows expressed in the reduced basis map back to generator
    // coefficients exactly.
    FieldMatrix aug(target.field(), g, cols + g);
    for (int i = 0; i < g; ++i) {
        for (int j = 0; j < cols; ++j) aug(i, j) = generators(i, j);
        aug(i, cols + i) = 1;
    }
    const auto pivots = eliminate(aug, nullptr, cols);

    FieldMatrix c_out(target.field(), target.rows(), g);
    std::vector<std::uint8_t> resid(static_cast<std::size_t>(cols));
    for (int ti = 0; ti < target.rows(); ++ti) {
        for (int j = 0; j < cols; ++j) resid[static_cast<std::size_t>(j)] = target(ti, j);
        for (int pi = 0; pi < static_cast<int>(pivots.size()); ++pi) {
            const std::uint8_t coeff = resid[static_cast<std::size_t>(pivots[static_cast<std::size_t>(pi)])];
            if (coeff == 0) continue;
            for (int j = 0; j < cols; ++j)
                resid[static_cast<std::size_t>(j)] = f.sub(resid[static_cast<std::size_t>(j)], f.mul(coeff, aug(pi, j)));
            for (int j = 0; j < g; ++j)
                c_out(ti, j) = f.add(c_out(ti, j), f.mul(coeff, aug(pi, cols + j)));
        }
        for (int j = 0; j < cols; ++j)
            if (resid[static_cast<std::size_t>(j)] != 0) return std::nullopt;
    }
    return c_out;
}

RrefEnumerator::RrefEnumerator(FieldPtr field, int rows, int cols)
    : field_(std::move(field)), rows_(rows), cols_(cols) {
    if (rows < 1 || rows > cols) throw DimensionMismatchError("enumerator requires 1 <= rows <= cols");
    const unsigned long long q = static_cast<unsigned long long>(field_->order());
    std::vector<int> comb(static_cast<std::size_t>(rows));
    for (int i = 0; i < rows; ++i) comb[static_cast<std::size_t>(i)] = i;
    while (true) {
        int free_entries = 0;
        for (int i = 0; i < rows; ++i)
            free_entries += (cols - comb[static_cast<std::size_t>(i)] - 1) - (rows - i - 1);
        unsigned long long block = 1;
        for (int e = 0; e < free_entries; ++e) block *= q;
        pivot_sets_.push_back(comb);
        block_sizes_.push_back(block);
        total_ += block;
        int i = rows - 1;
        while (i >= 0 && comb[static_cast<std::size_t>(i)] == cols - rows + i) --i;
        if (i < 0) break;
        ++comb[static_cast<std::size_t>(i)];
        for (int j = i + 1; j < rows; ++j)
            comb[static_cast<std::size_t>(j)] = comb[static_cast<std::size_t>(j - 1)] + 1;
    }
}

FieldMatrix RrefEnumerator::at(unsigned long long index) const {
    if (index >= total_) throw DimensionMismatchError("enumeration index out of range");
    std::size_t set_idx = 0;
    while (index >= block_sizes_[set_idx]) {
        index -= block_sizes_[set_idx];
        ++set_idx;
    }
    const auto& piv = pivot_sets_[set_idx];
    const int q = field_->order();

    FieldMatrix m(field_, rows_, cols_);
    std::vector<std::pair<int, int>> free_pos;  // row-major order
    for (int i = 0; i < rows_; ++i) {
        m(i, piv[static_cast<std::size_t>(i)]) = 1;
        for (int j = piv[static_cast<std::size_t>(i)] + 1; j < cols_; ++j) {
            bool is_pivot_col = false;
            for (int t = i + 1; t < rows_; ++t)
                if (piv[static_cast<std::size_t>(t)] == j) {
                    is_pivot_col = true;
                    break;
                }
            if (!is_pivot_col) free_pos.emplace_back(i, j);
        }
    }
    // First free position is the most significant odometer digit.
    for (std::size_t k = free_pos.size(); k-- > 0;) {
        m(free_pos[k].first, free_pos[k].second) = static_cast<std::uint8_t>(index % q);
        index /= static_cast<unsigned long long>(q);
    }
    return m;
}

std::string to_string(const FieldMatrix& m) {
    std::ostringstream os;
    for (int i = 0; i < m.rows(); ++i) {
        for (int j = 0; j < m.cols(); ++j) {
            if (j) os << ' ';
            os << static_cast<int>(m(i, j));
        }
        os << '\n';
    }
    return os.str();
}

}  // namespace msr
