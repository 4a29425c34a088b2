#ifndef MSR_MATRIX_HPP
#define MSR_MATRIX_HPP

#include <cstdint>
#include <initializer_list>
#include <optional>
#include <string>
#include <vector>

#include "msr/field.hpp"

namespace msr {

/**
 * Dense matrix over a finite field.  Entries are canonical element values;
 * the field travels with the matrix.  Row-major storage.
 */
class FieldMatrix {
  public:
    FieldMatrix() = default;
    FieldMatrix(FieldPtr field, int rows, int cols);

    /// Builds from integer rows; entries reduced into the field (so -1 is
    /// accepted for printed matrices using signed coefficients).
    static FieldMatrix from_rows(const FieldPtr& field,
                                 const std::vector<std::vector<long long>>& rows);
    static FieldMatrix identity(const FieldPtr& field, int n);

    int rows() const { return rows_; }
    int cols() const { return cols_; }
    const FieldPtr& field() const { return field_; }
    bool empty() const { return rows_ == 0 || cols_ == 0; }

    std::uint8_t operator()(int r, int c) const {
        return v_[static_cast<std::size_t>(r) * cols_ + c];
    }
    std::uint8_t& operator()(int r, int c) { return v_[static_cast<std::size_t>(r) * cols_ + c]; }

    const std::uint8_t* row_data(int r) const { return v_.data() + static_cast<std::size_t>(r) * cols_; }
    std::uint8_t* row_data(int r) { return v_.data() + static_cast<std::size_t>(r) * cols_; }

    /// Copies one row out as a 1 x cols matrix.
    FieldMatrix row(int r) const;

    bool is_zero() const;

    friend bool operator==(const FieldMatrix& a, const FieldMatrix& b) {
        return a.rows_ == b.rows_ && a.cols_ == b.cols_ && same_field(a.field_, b.field_) &&
               a.v_ == b.v_;
    }
    friend bool operator!=(const FieldMatrix& a, const FieldMatrix& b) { return !(a == b); }

  private:
    FieldPtr field_;
    int rows_ = 0, cols_ = 0;
    std::vector<std::uint8_t> v_;
};

FieldMatrix operator*(const FieldMatrix& a, const FieldMatrix& b);
FieldMatrix operator+(const FieldMatrix& a, const FieldMatrix& b);

FieldMatrix transpose(const FieldMatrix& a);

/// Stacks matrices with equal column counts, top to bottom.
FieldMatrix vstack(const std::vector<FieldMatrix>& blocks);

FieldElement det(const FieldMatrix& a);

int rank(const FieldMatrix& a);

struct RrefResult {
    FieldMatrix matrix;
    std::vector<int> pivots;  // pivot column per pivot row
};

/// Unique reduced row echelon form.
RrefResult rref(const FieldMatrix& a);

FieldMatrix invert(const FieldMatrix& a);

/// Rows form a basis of the right nullspace {v : a v^T = 0}; the basis is
/// the canonical one read off the RREF (one row per free column).  May have
/// zero rows.
FieldMatrix nullspace(const FieldMatrix& a);

/// Finds C with C * generators = target when every target row lies in the
/// row span of generators.  Free coordinates are fixed to zero under the
/// generator pivot ordering, so the solution is deterministic.
std::optional<FieldMatrix> solve_left(const FieldMatrix& target, const FieldMatrix& generators);

/**
 * Enumerates every full-row-rank RREF matrix of a fixed shape exactly once:
 * one representative per row-transform equivalence class of full-rank
 * matrices, equivalently one per `rows`-dimensional subspace of F^cols.
 *
 * Total order (documented so index ranges shard reproducibly):
 *   - pivot-column sets in lexicographic order;
 *   - within a pivot set, free entries run as a base-q odometer in row-major
 *     position order, first free position most significant.
 *
 * at(i) is random access, so disjoint index ranges partition the stream.
 */
class RrefEnumerator {
  public:
    RrefEnumerator(FieldPtr field, int rows, int cols);

    unsigned long long size() const { return total_; }
    FieldMatrix at(unsigned long long index) const;

    int rows() const { return rows_; }
    int cols() const { return cols_; }

  private:
    FieldPtr field_;
    int rows_, cols_;
    std::vector<std::vector<int>> pivot_sets_;
    std::vector<unsigned long long> block_sizes_;  // q^free per pivot set
    unsigned long long total_ = 0;
};

std::string to_string(const FieldMatrix& m);

}  // namespace msr

#endif
