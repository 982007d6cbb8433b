#include "charnet/linalg.hpp"

#include <algorithm>
#include <string>

namespace charnet {

namespace {

void require_same_field(const Matrix& a, const Matrix& b, const char* op) {
    if (!(a.field() == b.field()))
        throw DimensionMismatch(std::string(op) + ": fields differ");
}

void require_shape(bool ok, const char* what) {
    if (!ok) throw DimensionMismatch(what);
}

}  // namespace

Matrix Matrix::identity(const PrimeField& field, std::size_t n) {
    Matrix m(field, n, n);
    for (std::size_t i = 0; i < n; ++i) m.set_residue(i, i, 1);
    return m;
}

Matrix Matrix::from_rows(const PrimeField& field,
                         std::initializer_list<std::initializer_list<std::int64_t>> rows) {
    std::size_t r = rows.size();
    std::size_t c = r == 0 ? 0 : rows.begin()->size();
    Matrix m(field, r, c);
    std::size_t i = 0;
    for (const auto& row : rows) {
        require_shape(row.size() == c, "from_rows: ragged rows");
        std::size_t j = 0;
        for (std::int64_t v : row) m.set(i, j++, v);
        ++i;
    }
    return m;
}

bool Matrix::is_zero() const {
    return std::all_of(entries_.begin(), entries_.end(), [](std::uint32_t v) { return v == 0; });
}

Matrix Matrix::transpose() const {
    Matrix t(field_, cols_, rows_);
    for (std::size_t r = 0; r < rows_; ++r)
        for (std::size_t c = 0; c < cols_; ++c) t.set_residue(c, r, at(r, c));
    return t;
}

Matrix Matrix::operator+(const Matrix& o) const {
    require_same_field(*this, o, "add");
    require_shape(rows_ == o.rows_ && cols_ == o.cols_, "add: shape mismatch");
    Matrix m(field_, rows_, cols_);
    for (std::size_t i = 0; i < entries_.size(); ++i)
        m.entries_[i] = field_.add(entries_[i], o.entries_[i]);
    return m;
}

Matrix Matrix::operator-(const Matrix& o) const {
    require_same_field(*this, o, "sub");
    require_shape(rows_ == o.rows_ && cols_ == o.cols_, "sub: shape mismatch");
    Matrix m(field_, rows_, cols_);
    for (std::size_t i = 0; i < entries_.size(); ++i)
        m.entries_[i] = field_.sub(entries_[i], o.entries_[i]);
    return m;
}

Matrix Matrix::operator*(const Matrix& o) const {
    require_same_field(*this, o, "mul");
    require_shape(cols_ == o.rows_, "mul: inner dimensions differ");
    Matrix m(field_, rows_, o.cols_);
    for (std::size_t r = 0; r < rows_; ++r)
        for (std::size_t k = 0; k < cols_; ++k) {
            std::uint32_t a = at(r, k);
            if (a == 0) continue;
            for (std::size_t c = 0; c < o.cols_; ++c)
                m.entries_[r * o.cols_ + c] =
                    field_.add(m.entries_[r * o.cols_ + c], field_.mul(a, o.at(k, c)));
        }
    return m;
}

Matrix Matrix::scaled(std::uint32_t c) const {
    Matrix m(field_, rows_, cols_);
    for (std::size_t i = 0; i < entries_.size(); ++i) m.entries_[i] = field_.mul(entries_[i], c);
    return m;
}

Matrix Matrix::row(std::size_t r) const {
    Matrix m(field_, 1, cols_);
    for (std::size_t c = 0; c < cols_; ++c) m.set_residue(0, c, at(r, c));
    return m;
}

Matrix Matrix::submatrix_cols(std::size_t first, std::size_t count) const {
    require_shape(first + count <= cols_, "submatrix_cols: out of range");
    Matrix m(field_, rows_, count);
    for (std::size_t r = 0; r < rows_; ++r)
        for (std::size_t c = 0; c < count; ++c) m.set_residue(r, c, at(r, first + c));
    return m;
}

void Matrix::add_scaled(const Matrix& o, std::uint32_t c) {
    require_same_field(*this, o, "add_scaled");
    require_shape(rows_ == o.rows_ && cols_ == o.cols_, "add_scaled: shape mismatch");
    if (c == 0) return;
    for (std::size_t i = 0; i < entries_.size(); ++i)
        entries_[i] = field_.add(entries_[i], field_.mul(c, o.entries_[i]));
}

Matrix vstack(const Matrix& a, const Matrix& b) {
    require_same_field(a, b, "vstack");
    require_shape(a.cols() == b.cols(), "vstack: column counts differ");
    Matrix m(a.field(), a.rows() + b.rows(), a.cols());
    for (std::size_t r = 0; r < a.rows(); ++r)
        for (std::size_t c = 0; c < a.cols(); ++c) m.set_residue(r, c, a.at(r, c));
    for (std::size_t r = 0; r < b.rows(); ++r)
        for (std::size_t c = 0; c < b.cols(); ++c) m.set_residue(a.rows() + r, c, b.at(r, c));
    return m;
}

Matrix hstack(const Matrix& a, const Matrix& b) {
    require_same_field(a, b, "hstack");
    require_shape(a.rows() == b.rows(), "hstack: row counts differ");
    Matrix m(a.field(), a.rows(), a.cols() + b.cols());
    for (std::size_t r = 0; r < a.rows(); ++r) {
        for (std::size_t c = 0; c < a.cols(); ++c) m.set_residue(r, c, a.at(r, c));
        for (std::size_t c = 0; c < b.cols(); ++c) m.set_residue(r, a.cols() + c, b.at(r, c));
    }
    return m;
}

namespace {

// Gauss-Jordan on `work`, mirroring every row operation onto `mirror` when
// present. Returns pivot columns. Leaves `work` in canonical RREF with pivot
// rows first.
std::vector<std::size_t> gauss_jordan(Matrix& work, Matrix* mirror) {
    const PrimeField& f = work.field();
    std::vector<std::size_t> pivots;
    std::size_t pr = 0;  // next pivot row
    for (std::size_t c = 0; c < work.cols() && pr < work.rows(); ++c) {
        std::size_t sel = pr;
        while (sel < work.rows() && work.at(sel, c) == 0) ++sel;
        if (sel == work.rows()) continue;
        if (sel != pr) {
            for (std::size_t j = 0; j < work.cols(); ++j) {
                std::uint32_t t = work.at(pr, j);
                work.set_residue(pr, j, work.at(sel, j));
                work.set_residue(sel, j, t);
            }
            if (mirror)
                for (std::size_t j = 0; j < mirror->cols(); ++j) {
                    std::uint32_t t = mirror->at(pr, j);
                    mirror->set_residue(pr, j, mirror->at(sel, j));
                    mirror->set_residue(sel, j, t);
                }
        }
        std::uint32_t piv_inv = f.inv(work.at(pr, c));
        if (piv_inv != 1) {
            for (std::size_t j = 0; j < work.cols(); ++j)
                work.set_residue(pr, j, f.mul(piv_inv, work.at(pr, j)));
            if (mirror)
                for (std::size_t j = 0; j < mirror->cols(); ++j)
                    mirror->set_residue(pr, j, f.mul(piv_inv, mirror->at(pr, j)));
        }
        for (std::size_t r = 0; r < work.rows(); ++r) {
            if (r == pr) continue;
            std::uint32_t factor = work.at(r, c);
            if (factor == 0) continue;
            for (std::size_t j = 0; j < work.cols(); ++j)
                work.set_residue(r, j, f.sub(work.at(r, j), f.mul(factor, work.at(pr, j))));
            if (mirror)
                for (std::size_t j = 0; j < mirror->cols(); ++j)
                    mirror->set_residue(r, j,
                                        f.sub(mirror->at(r, j), f.mul(factor, mirror->at(pr, j))));
        }
        pivots.push_back(c);
        ++pr;
    }
    return pivots;
}

}  // namespace

std::pair<Matrix, std::size_t> rref(const Matrix& m) {
    Matrix work = m;
    std::vector<std::size_t> pivots = gauss_jordan(work, nullptr);
    return {work, pivots.size()};
}

RrefTransform rref_with_transform(const Matrix& m) {
    Matrix work = m;
    Matrix transform = Matrix::identity(m.field(), m.rows());
    std::vector<std::size_t> pivots = gauss_jordan(work, &transform);
    std::size_t rank = pivots.size();
    return {std::move(work), std::move(transform), std::move(pivots), rank};
}

Matrix left_kernel(const Matrix& m) {
    // x*m == 0  <=>  m^T x^T == 0, so read the right kernel off the RREF of
    // m^T with the usual free-variable construction.
    Matrix mt = m.transpose();
    RrefTransform rt = rref_with_transform(mt);
    const PrimeField& f = m.field();
    const Matrix& red = rt.reduced;             // RREF of m^T (m.cols x m.rows)
    const std::vector<std::size_t>& piv = rt.pivot_cols;
    std::size_t nvars = m.rows();
    std::vector<bool> is_pivot(nvars, false);
    for (std::size_t c : piv) is_pivot[c] = true;
    std::vector<std::size_t> free_cols;
    for (std::size_t c = 0; c < nvars; ++c)
        if (!is_pivot[c]) free_cols.push_back(c);

    Matrix kernel(f, free_cols.size(), nvars);
    for (std::size_t k = 0; k < free_cols.size(); ++k) {
        std::size_t fc = free_cols[k];
        kernel.set_residue(k, fc, 1);
        for (std::size_t pi = 0; pi < piv.size(); ++pi)
            kernel.set_residue(k, piv[pi], f.neg(red.at(pi, fc)));
    }
    return kernel;
}

std::optional<Matrix> solve_left(const Matrix& s, const Matrix& t) {
    require_same_field(s, t, "solve_left");
    if (s.cols() != t.cols()) throw DimensionMismatch("solve_left: column counts differ");
    const PrimeField& f = s.field();
    RrefTransform rt = rref_with_transform(s);
    Matrix result(f, t.rows(), s.rows());
    for (std::size_t r = 0; r < t.rows(); ++r) {
        Matrix residual = t.row(r);
        std::vector<std::uint32_t> coeffs(rt.rank, 0);
        for (std::size_t pi = 0; pi < rt.rank; ++pi) {
            std::uint32_t c = residual.at(0, rt.pivot_cols[pi]);
            if (c == 0) continue;
            coeffs[pi] = c;
            residual.add_scaled(rt.reduced.row(pi), f.neg(c));
        }
        if (!residual.is_zero()) return std::nullopt;
        // row of R = coeffs * E restricted to the pivot rows of the transform
        for (std::size_t pi = 0; pi < rt.rank; ++pi) {
            if (coeffs[pi] == 0) continue;
            for (std::size_t j = 0; j < s.rows(); ++j)
                result.set_residue(
                    r, j, f.add(result.at(r, j), f.mul(coeffs[pi], rt.transform.at(pi, j))));
        }
    }
    return result;
}

Subspace Subspace::span(const Matrix& vectors) {
    auto [basis, rank] = rref(vectors);
    // drop the zero rows below the pivots
    Matrix trimmed(vectors.field(), rank, vectors.cols());
    for (std::size_t r = 0; r < rank; ++r)
        for (std::size_t c = 0; c < vectors.cols(); ++c) trimmed.set_residue(r, c, basis.at(r, c));
    return Subspace(std::move(trimmed));
}

Subspace Subspace::zero(const PrimeField& field, std::size_t ambient) {
    return Subspace(Matrix(field, 0, ambient));
}

bool Subspace::contains(const Matrix& row_vector) const {
    if (row_vector.cols() != ambient())
        throw AmbientMismatch("contains: vector length differs from ambient");
    Subspace joined = Subspace::span(vstack(basis_, row_vector));
    return joined.dim() == dim();
}

bool Subspace::contains(const Subspace& other) const {
    if (other.ambient() != ambient()) throw AmbientMismatch("contains: ambient differs");
    return sum(*this, other).dim() == dim();
}

namespace {

void require_same_space(const Subspace& a, const Subspace& b, const char* op) {
    if (a.ambient() != b.ambient() || !(a.field() == b.field()))
        throw AmbientMismatch(std::string(op) + ": ambient spaces differ");
}

}  // namespace

Subspace sum(const Subspace& a, const Subspace& b) {
    require_same_space(a, b, "sum");
    return Subspace::span(vstack(a.basis(), b.basis()));
}

Subspace intersect(const Subspace& a, const Subspace& b) {
    require_same_space(a, b, "intersect");
    // Left kernel of [A; B]: rows (x|y) with x*A + y*B == 0, so x*A lies in
    // both row spaces. Basis rows are independent, hence x -> x*A is onto the
    // intersection.
    Matrix stacked = vstack(a.basis(), b.basis());
    Matrix kernel = left_kernel(stacked);
    Matrix xpart = kernel.submatrix_cols(0, a.dim());
    return Subspace::span(xpart * a.basis());
}

std::int64_t h_joint(const std::vector<Subspace>& vars) {
    if (vars.empty()) return 0;
    Subspace acc = vars.front();
    for (std::size_t i = 1; i < vars.size(); ++i) acc = sum(acc, vars[i]);
    return static_cast<std::int64_t>(acc.dim());
}

std::int64_t h_cond(const std::vector<Subspace>& vars, const std::vector<Subspace>& given) {
    std::vector<Subspace> joined = vars;
    joined.insert(joined.end(), given.begin(), given.end());
    return h_joint(joined) - h_joint(given);
}

}  // namespace charnet
