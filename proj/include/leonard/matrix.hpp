#pragma once

#include <optional>
#include <utility>
#include <vector>

#include "leonard/scalar.hpp"

namespace leonard {

enum class MatrixShape {
    Diagonal,
    LowerBidiagonal,
    UpperBidiagonal,
    Tridiagonal,
    IrreducibleTridiagonal,
    General,
};

std::string to_string(MatrixShape s);

// Dense square matrix over one exact field, rows/columns indexed 0..dim-1.
class ExactMatrix {
public:
    ExactMatrix(int dim, const Field& f);
    static ExactMatrix identity(int dim, const Field& f);
    static ExactMatrix diagonal(const std::vector<Scalar>& diag);

    int dim() const { return dim_; }
    const Field& field() const { return field_; }

    const Scalar& at(int i, int j) const { return e_[static_cast<std::size_t>(i) * dim_ + j]; }
    Scalar& at(int i, int j) { return e_[static_cast<std::size_t>(i) * dim_ + j]; }

    ExactMatrix operator-() const;
    friend ExactMatrix operator+(const ExactMatrix& x, const ExactMatrix& y);
    friend ExactMatrix operator-(const ExactMatrix& x, const ExactMatrix& y);
    friend ExactMatrix operator*(const ExactMatrix& x, const ExactMatrix& y);
    friend ExactMatrix operator*(const Scalar& s, const ExactMatrix& x);
    ExactMatrix& operator+=(const ExactMatrix& y) { return *this = *this + y; }
    ExactMatrix& operator-=(const ExactMatrix& y) { return *this = *this - y; }

    bool operator==(const ExactMatrix& y) const;
    bool operator!=(const ExactMatrix& y) const { return !(*this == y); }

    ExactMatrix transpose() const;
    Scalar trace() const;
    bool is_zero() const;

    // first nonzero entry in row-major order
    std::optional<std::pair<int, int>> first_nonzero() const;

private:
    int dim_;
    Field field_;
    std::vector<Scalar> e_;
};

ExactMatrix mat_inverse(const ExactMatrix& x); // Singular when det = 0
int rank(const ExactMatrix& x);

// Most specific shape label; irreducible-tridiagonal needs every entry of the
// sub- and superdiagonal nonzero.
MatrixShape shape_classify(const ExactMatrix& x);

// Spectral projectors E_i = prod_{j != i} (A - eig_j I) / (eig_i - eig_j).
// NotMultiplicityFree when the eigenvalues are not distinct or some
// rank(A - eig_i I) != dim - 1; the exception carries the offending index.
std::vector<ExactMatrix> primitive_idempotents(const ExactMatrix& a, const std::vector<Scalar>& eigs);

// M^{-1} X M
ExactMatrix conjugate(const ExactMatrix& x, const ExactMatrix& m);

// Row reduction helpers used for exact linear solves. Rows may carry extra
// (augmented) columns past `cols`; pivoting always picks the lowest row index
// with a nonzero entry. Returns the pivot column list.
std::vector<int> row_reduce(std::vector<std::vector<Scalar>>& rows, int cols);

enum class SolveStatus { Unique, Inconsistent, Underdetermined };

struct LinearSolve {
    SolveStatus status;
    std::vector<Scalar> solution; // filled only when status == Unique
};

// Solve the (possibly overdetermined) system given as rows [coeffs..., rhs].
LinearSolve solve_linear(std::vector<std::vector<Scalar>> aug, int cols, const Field& f);

// Basis of the nullspace of the homogeneous system (rows x cols).
std::vector<std::vector<Scalar>> nullspace(std::vector<std::vector<Scalar>> rows, int cols, const Field& f);

} // namespace leonard
