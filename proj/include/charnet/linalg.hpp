#pragma once

#include <cstddef>
#include <initializer_list>
#include <optional>
#include <utility>
#include <vector>

#include "charnet/ff.hpp"

namespace charnet {

struct DimensionMismatch : std::invalid_argument {
    explicit DimensionMismatch(const std::string& what) : std::invalid_argument(what) {}
};

struct AmbientMismatch : std::invalid_argument {
    explicit AmbientMismatch(const std::string& what) : std::invalid_argument(what) {}
};

/// Dense matrix over a prime field, row-major, every entry a reduced residue.
class Matrix {
  public:
    Matrix(const PrimeField& field, std::size_t rows, std::size_t cols)
        : field_(field), rows_(rows), cols_(cols), entries_(rows * cols, 0) {}

    static Matrix identity(const PrimeField& field, std::size_t n);
    static Matrix from_rows(const PrimeField& field,
                            std::initializer_list<std::initializer_list<std::int64_t>> rows);

    const PrimeField& field() const { return field_; }
    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }

    std::uint32_t at(std::size_t r, std::size_t c) const { return entries_[r * cols_ + c]; }
    void set(std::size_t r, std::size_t c, std::int64_t v) {
        entries_[r * cols_ + c] = field_.reduce(v);
    }
    void set_residue(std::size_t r, std::size_t c, std::uint32_t v) { entries_[r * cols_ + c] = v; }

    const std::vector<std::uint32_t>& entries() const { return entries_; }

    bool is_zero() const;
    Matrix transpose() const;
    Matrix operator+(const Matrix& o) const;
    Matrix operator-(const Matrix& o) const;
    Matrix operator*(const Matrix& o) const;
    Matrix scaled(std::uint32_t c) const;
    Matrix operator-() const { return scaled(field_.neg(1)); }

    Matrix row(std::size_t r) const;
    Matrix submatrix_cols(std::size_t first, std::size_t count) const;

    /// In-place accumulate: this += c * other. Shapes must match.
    void add_scaled(const Matrix& o, std::uint32_t c);

    bool operator==(const Matrix&) const = default;

  private:
    PrimeField field_;
    std::size_t rows_, cols_;
    std::vector<std::uint32_t> entries_;
};

/// Stacks a on top of b (same column count) / side by side (same row count).
Matrix vstack(const Matrix& a, const Matrix& b);
Matrix hstack(const Matrix& a, const Matrix& b);

/// Canonical reduced row-echelon form and its rank. Row space is preserved;
/// pivots are 1 with zeros elsewhere in their column, pivot columns strictly
/// increasing, zero rows dropped to the bottom.
std::pair<Matrix, std::size_t> rref(const Matrix& m);

/// RREF of m together with a transform E (rows x rows, invertible) such that
/// E * m == rref(m). Pivot rows come first in E's row order.
struct RrefTransform {
    Matrix reduced;
    Matrix transform;
    std::vector<std::size_t> pivot_cols;
    std::size_t rank;
};
RrefTransform rref_with_transform(const Matrix& m);

/// Basis of the left kernel {x : x*m == 0}, one kernel vector per row.
Matrix left_kernel(const Matrix& m);

/// Some R with R*S == T when the row space of T lies inside the row space of
/// S; otherwise nullopt. The returned factor is the minimum-support solution
/// from back-substitution against the pivots of rref(S).
std::optional<Matrix> solve_left(const Matrix& s, const Matrix& t);

/// Subspace of F_p^ambient held as a canonical RREF basis (rows span it).
/// The zero subspace has a 0-row basis. Canonical form makes equality of
/// subspaces plain equality of bases.
class Subspace {
  public:
    /// Row span of `vectors`; the ambient dimension is vectors.cols().
    static Subspace span(const Matrix& vectors);
    static Subspace zero(const PrimeField& field, std::size_t ambient);

    std::size_t ambient() const { return basis_.cols(); }
    std::size_t dim() const { return basis_.rows(); }
    const Matrix& basis() const { return basis_; }
    const PrimeField& field() const { return basis_.field(); }

    /// True iff the given row vector lies in this subspace.
    bool contains(const Matrix& row_vector) const;
    bool contains(const Subspace& other) const;

    bool operator==(const Subspace&) const = default;

  private:
    explicit Subspace(Matrix basis) : basis_(std::move(basis)) {}
    Matrix basis_;
};

Subspace sum(const Subspace& a, const Subspace& b);
Subspace intersect(const Subspace& a, const Subspace& b);

/// H(S) = dim of the sum of all members; empty set gives 0.
std::int64_t h_joint(const std::vector<Subspace>& vars);

/// H(S|G) = H(S u G) - H(G). Always non-negative.
std::int64_t h_cond(const std::vector<Subspace>& vars, const std::vector<Subspace>& given);

}  // namespace charnet
