#include "leonard/matrix.hpp"

namespace leonard {

std::string to_string(MatrixShape s) {
    switch (s) {
        case MatrixShape::Diagonal: return "diagonal";
        case MatrixShape::LowerBidiagonal: return "lower-bidiagonal";
        case MatrixShape::UpperBidiagonal: return "upper-bidiagonal";
        case MatrixShape::Tridiagonal: return "tridiagonal";
        case MatrixShape::IrreducibleTridiagonal: return "irreducible-tridiagonal";
        case MatrixShape::General: return "general";
    }
    return "general";
}

ExactMatrix::ExactMatrix(int dim, const Field& f)
    : dim_(dim), field_(f), e_(static_cast<std::size_t>(dim) * dim, Scalar(f)) {
    if (dim <= 0) throw DimensionMismatch("matrix dimension must be positive");
}

ExactMatrix ExactMatrix::identity(int dim, const Field& f) {
    ExactMatrix m(dim, f);
    const Scalar one = Scalar::integer(f, 1);
    for (int i = 0; i < dim; ++i) m.at(i, i) = one;
    return m;
}

ExactMatrix ExactMatrix::diagonal(const std::vector<Scalar>& diag) {
    if (diag.empty()) throw DimensionMismatch("empty diagonal");
    ExactMatrix m(static_cast<int>(diag.size()), diag[0].field());
    for (int i = 0; i < m.dim(); ++i) m.at(i, i) = diag[static_cast<std::size_t>(i)];
    return m;
}

namespace {

void require_compatible(const ExactMatrix& x, const ExactMatrix& y) {
    if (x.dim() != y.dim()) throw DimensionMismatch("matrix dimensions differ");
    if (!(x.field() == y.field())) throw FieldMismatch("matrices over different fields");
}

} // namespace

ExactMatrix ExactMatrix::operator-() const {
    ExactMatrix r(dim_, field_);
    for (std::size_t k = 0; k < e_.size(); ++k) r.e_[k] = -e_[k];
    return r;
}

ExactMatrix operator+(const ExactMatrix& x, const ExactMatrix& y) {
    require_compatible(x, y);
    ExactMatrix r(x.dim_, x.field_);
    for (std::size_t k = 0; k < r.e_.size(); ++k) r.e_[k] = x.e_[k] + y.e_[k];
    return r;
}

ExactMatrix operator-(const ExactMatrix& x, const ExactMatrix& y) {
    require_compatible(x, y);
    ExactMatrix r(x.dim_, x.field_);
    for (std::size_t k = 0; k < r.e_.size(); ++k) r.e_[k] = x.e_[k] - y.e_[k];
    return r;
}

ExactMatrix operator*(const ExactMatrix& x, const ExactMatrix& y) {
    require_compatible(x, y);
    const int n = x.dim_;
    ExactMatrix r(n, x.field_);
    for (int i = 0; i < n; ++i) {
        for (int k = 0; k < n; ++k) {
            const Scalar& xik = x.at(i, k);
            if (xik.is_zero()) continue;
            for (int j = 0; j < n; ++j) {
                if (y.at(k, j).is_zero()) continue;
                r.at(i, j) += xik * y.at(k, j);
            }
        }
    }
    return r;
}

ExactMatrix operator*(const Scalar& s, const ExactMatrix& x) {
    ExactMatrix r(x.dim_, x.field_);
    for (std::size_t k = 0; k < r.e_.size(); ++k) r.e_[k] = s * x.e_[k];
    return r;
}

bool ExactMatrix::operator==(const ExactMatrix& y) const {
    require_compatible(*this, y);
    for (std::size_t k = 0; k < e_.size(); ++k)
        if (e_[k] != y.e_[k]) return false;
    return true;
}

ExactMatrix ExactMatrix::transpose() const {
    ExactMatrix r(dim_, field_);
    for (int i = 0; i < dim_; ++i)
        for (int j = 0; j < dim_; ++j) r.at(j, i) = at(i, j);
    return r;
}

Scalar ExactMatrix::trace() const {
    Scalar t(field_);
    for (int i = 0; i < dim_; ++i) t += at(i, i);
    return t;
}

bool ExactMatrix::is_zero() const {
    for (const Scalar& s : e_)
        if (!s.is_zero()) return false;
    return true;
}

std::optional<std::pair<int, int>> ExactMatrix::first_nonzero() const {
    for (int i = 0; i < dim_; ++i)
        for (int j = 0; j < dim_; ++j)
            if (!at(i, j).is_zero()) return std::make_pair(i, j);
    return std::nullopt;
}

std::vector<int> row_reduce(std::vector<std::vector<Scalar>>& rows, int cols) {
    std::vector<int> pivots;
    std::size_t lead = 0;
    for (int col = 0; col < cols && lead < rows.size(); ++col) {
        std::size_t pivot = lead;
        while (pivot < rows.size() && rows[pivot][static_cast<std::size_t>(col)].is_zero()) ++pivot;
        if (pivot == rows.size()) continue;
        std::swap(rows[lead], rows[pivot]);
        const Scalar inv = rows[lead][static_cast<std::size_t>(col)].inv();
        for (Scalar& v : rows[lead]) v *= inv;
        for (std::size_t r = 0; r < rows.size(); ++r) {
            if (r == lead) continue;
            const Scalar factor = rows[r][static_cast<std::size_t>(col)];
            if (factor.is_zero()) continue;
            for (std::size_t k = 0; k < rows[r].size(); ++k)
                rows[r][k] -= factor * rows[lead][k];
        }
        pivots.push_back(col);
        ++lead;
    }
    return pivots;
}

ExactMatrix mat_inverse(const ExactMatrix& x) {
    const int n = x.dim();
    std::vector<std::vector<Scalar>> rows(static_cast<std::size_t>(n));
    const Scalar one = Scalar::integer(x.field(), 1);
    for (int i = 0; i < n; ++i) {
        rows[static_cast<std::size_t>(i)].assign(static_cast<std::size_t>(2 * n), Scalar(x.field()));
        for (int j = 0; j < n; ++j) rows[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] = x.at(i, j);
        rows[static_cast<std::size_t>(i)][static_cast<std::size_t>(n + i)] = one;
    }
    const std::vector<int> pivots = row_reduce(rows, n);
    if (static_cast<int>(pivots.size()) != n) throw Singular("matrix is singular");
    ExactMatrix r(n, x.field());
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) r.at(i, j) = rows[static_cast<std::size_t>(i)][static_cast<std::size_t>(n + j)];
    return r;
}

int rank(const ExactMatrix& x) {
    const int n = x.dim();
    std::vector<std::vector<Scalar>> rows(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i) {
        rows[static_cast<std::size_t>(i)].reserve(static_cast<std::size_t>(n));
        for (int j = 0; j < n; ++j) rows[static_cast<std::size_t>(i)].push_back(x.at(i, j));
    }
    return static_cast<int>(row_reduce(rows, n).size());
}

MatrixShape shape_classify(const ExactMatrix& x) {
    const int n = x.dim();
    bool in_band = true, sub_zero = true, super_zero = true;
    bool sub_full = true, super_full = true;
    for (int i = 0; i < n; ++i) {
        for (int j = 0; j < n; ++j) {
            const bool nz = !x.at(i, j).is_zero();
            if (i - j > 1 || j - i > 1) {
                if (nz) in_band = false;
            } else if (i - j == 1) {
                if (nz) sub_zero = false;
                else sub_full = false;
            } else if (j - i == 1) {
                if (nz) super_zero = false;
                else super_full = false;
            }
        }
    }
    if (!in_band) return MatrixShape::General;
    if (sub_zero && super_zero) return MatrixShape::Diagonal;
    if (super_zero) return MatrixShape::LowerBidiagonal;
    if (sub_zero) return MatrixShape::UpperBidiagonal;
    if (sub_full && super_full) return MatrixShape::IrreducibleTridiagonal;
    return MatrixShape::Tridiagonal;
}

std::vector<ExactMatrix> primitive_idempotents(const ExactMatrix& a, const std::vector<Scalar>& eigs) {
    const int n = a.dim();
    if (static_cast<int>(eigs.size()) != n)
        throw DimensionMismatch("need exactly dim eigenvalues");
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j)
            if (eigs[static_cast<std::size_t>(i)] == eigs[static_cast<std::size_t>(j)])
                throw NotMultiplicityFree("repeated eigenvalue at index " + std::to_string(j), j);
    const ExactMatrix id = ExactMatrix::identity(n, a.field());
    for (int i = 0; i < n; ++i) {
        if (rank(a - eigs[static_cast<std::size_t>(i)] * id) != n - 1)
            throw NotMultiplicityFree("eigenvalue at index " + std::to_string(i) +
                                          " does not have geometric multiplicity one",
                                      i);
    }
    std::vector<ExactMatrix> out;
    out.reserve(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i) {
        ExactMatrix e = id;
        for (int j = 0; j < n; ++j) {
            if (j == i) continue;
            const Scalar denom = eigs[static_cast<std::size_t>(i)] - eigs[static_cast<std::size_t>(j)];
            e = denom.inv() * (e * (a - eigs[static_cast<std::size_t>(j)] * id));
        }
        out.push_back(std::move(e));
    }
    return out;
}

ExactMatrix conjugate(const ExactMatrix& x, const ExactMatrix& m) {
    return mat_inverse(m) * x * m;
}

LinearSolve solve_linear(std::vector<std::vector<Scalar>> aug, int cols, const Field& f) {
    const std::vector<int> pivots = row_reduce(aug, cols);
    for (const auto& row : aug) {
        bool lhs_zero = true;
        for (int j = 0; j < cols; ++j)
            if (!row[static_cast<std::size_t>(j)].is_zero()) { lhs_zero = false; break; }
        if (lhs_zero && !row[static_cast<std::size_t>(cols)].is_zero())
            return {SolveStatus::Inconsistent, {}};
    }
    if (static_cast<int>(pivots.size()) != cols) return {SolveStatus::Underdetermined, {}};
    std::vector<Scalar> x(static_cast<std::size_t>(cols), Scalar(f));
    for (std::size_t r = 0; r < pivots.size(); ++r)
        x[static_cast<std::size_t>(pivots[r])] = aug[r][static_cast<std::size_t>(cols)];
    return {SolveStatus::Unique, std::move(x)};
}

std::vector<std::vector<Scalar>> nullspace(std::vector<std::vector<Scalar>> rows, int cols, const Field& f) {
    const std::vector<int> pivots = row_reduce(rows, cols);
    std::vector<bool> is_pivot(static_cast<std::size_t>(cols), false);
    for (int p : pivots) is_pivot[static_cast<std::size_t>(p)] = true;
    std::vector<std::vector<Scalar>> basis;
    const Scalar one = Scalar::integer(f, 1);
    for (int free = 0; free < cols; ++free) {
        if (is_pivot[static_cast<std::size_t>(free)]) continue;
        std::vector<Scalar> v(static_cast<std::size_t>(cols), Scalar(f));
        v[static_cast<std::size_t>(free)] = one;
        for (std::size_t r = 0; r < pivots.size(); ++r)
            v[static_cast<std::size_t>(pivots[r])] = -rows[r][static_cast<std::size_t>(free)];
        basis.push_back(std::move(v));
    }
    return basis;
}

} // namespace leonard
