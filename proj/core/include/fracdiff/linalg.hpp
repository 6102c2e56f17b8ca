#pragma once

#include <complex>
#include <cstddef>
#include <vector>

namespace fracdiff {

// Row-major dense matrix.  Everything here is sized for desk-scale
// diagnostics and the direct solver path, not large-scale linear algebra.
class DenseMatrix {
public:
    DenseMatrix() = default;
    DenseMatrix(std::size_t rows, std::size_t cols, double value = 0.0)
        : rows_(rows), cols_(cols), data_(rows * cols, value) {}

    static DenseMatrix identity(std::size_t n);

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }

    double& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
    double operator()(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }

    const std::vector<double>& data() const { return data_; }
    std::vector<double>& data() { return data_; }

    DenseMatrix transpose() const;
    DenseMatrix symmetric_part() const;  // (A + A^T)/2
    std::vector<double> apply(const std::vector<double>& u, bool transpose = false) const;
    double frobenius_norm() const;

private:
    std::size_t rows_ = 0;
    std::size_t cols_ = 0;
    std::vector<double> data_;
};

DenseMatrix operator*(const DenseMatrix& a, const DenseMatrix& b);

double dot(const std::vector<double>& a, const std::vector<double>& b);
double norm2(const std::vector<double>& a);
void axpy(double alpha, const std::vector<double>& x, std::vector<double>& y);

// LU factorization with partial pivoting; the factorization is kept so the
// same matrix can be solved against many right-hand sides.
class LuFactorization {
public:
    explicit LuFactorization(DenseMatrix a);

    std::size_t size() const { return lu_.rows(); }
    void solve_in_place(std::vector<double>& rhs) const;
    std::vector<double> solve(std::vector<double> rhs) const;
    bool singular() const { return singular_; }

private:
    DenseMatrix lu_;
    std::vector<std::size_t> piv_;
    bool singular_ = false;
};

// Complex LU, used by inverse iteration on real matrices shifted by a
// complex eigenvalue estimate.
class ComplexLuFactorization {
public:
    ComplexLuFactorization(const DenseMatrix& a, std::complex<double> shift);
    void solve_in_place(std::vector<std::complex<double>>& rhs) const;

private:
    std::size_t n_;
    std::vector<std::complex<double>> lu_;
    std::vector<std::size_t> piv_;
};

// Eigenvalues of a symmetric matrix by cyclic Jacobi rotations, run until
// the off-diagonal Frobenius norm is below tol_factor * ||a||_F.
std::vector<double> symmetric_eigenvalues_jacobi(DenseMatrix a, double tol_factor = 1e-12);

struct NonsymmetricEigenResult {
    std::vector<std::complex<double>> values;
    bool converged = true;
    std::size_t iterations = 0;
};

// Eigenvalues of a general real matrix: Householder reduction to Hessenberg
// form followed by shifted QR with deflation.  Never hangs; a convergence
// flag is reported instead.
NonsymmetricEigenResult eigenvalues_qr(const DenseMatrix& a, std::size_t max_iterations_per_eigenvalue = 200);

}  // namespace fracdiff
