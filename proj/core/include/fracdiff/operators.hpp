#pragma once

#include <complex>
#include <cstddef>
#include <vector>

#include "fracdiff/coeffs.hpp"
#include "fracdiff/linalg.hpp"

namespace fracdiff {

// Lower-Hessenberg Toeplitz operator defined by a band sequence w_0..w_n:
// entry (i,j) = w_{i-j+1} whenever 0 <= i-j+1 <= n, zero otherwise
// (1-based i,j; the matrix is n x n).  Matrix-vector products go through a
// circulant embedding of power-of-two length and the in-repo FFT; the dense
// path exists for diagnostics and as the oracle in tests.
class ToeplitzOperator {
public:
    // weights = w_0..w_n defines an n x n operator.
    explicit ToeplitzOperator(std::vector<double> weights);

    std::size_t size() const { return size_; }
    const std::vector<double>& weights() const { return w_; }
    std::size_t embedding_length() const { return fft_len_; }
    const std::vector<std::complex<double>>& spectrum() const { return spectrum_; }

    std::vector<double> first_column() const;  // w_1..w_n
    std::vector<double> first_row() const;     // w_1, w_0, 0, ..., 0

    std::vector<double> apply(const std::vector<double>& u, bool transpose = false) const;
    std::vector<double> apply_dense(const std::vector<double>& u, bool transpose = false) const;

    DenseMatrix dense() const;

private:
    std::vector<double> w_;
    std::size_t size_ = 0;
    std::size_t fft_len_ = 0;
    std::vector<std::complex<double>> spectrum_;  // circulant embedding eigenvalues
};

// W_alpha of dimension (m-1) x (m-1) from the WSGD weights w_0..w_{m-1}.
ToeplitzOperator assemble_W(double alpha, std::size_t m);

std::vector<double> toeplitz_apply(const ToeplitzOperator& t, const std::vector<double>& u,
                                   bool transpose = false);

// Variable-coefficient spatial operator A = D+ W_alpha + D- W_alpha^T.
// Entries carry no tau/h^alpha factor; the solvers scale at use.
class FractionalOperator {
public:
    FractionalOperator(std::vector<double> dplus_diag, std::vector<double> dminus_diag,
                       double alpha, std::size_t m);

    std::size_t size() const { return w_.size(); }
    double alpha() const { return alpha_; }
    const ToeplitzOperator& toeplitz() const { return w_; }
    const std::vector<double>& dplus_diag() const { return dplus_; }
    const std::vector<double>& dminus_diag() const { return dminus_; }

    std::vector<double> apply(const std::vector<double>& u) const;
    void apply(const std::vector<double>& u, std::vector<double>& out) const;

    // Dense materialization for diagnostics; capped at dimension 2048.
    DenseMatrix dense() const;

private:
    ToeplitzOperator w_;
    std::vector<double> dplus_;
    std::vector<double> dminus_;
    double alpha_ = 0.0;
};

FractionalOperator assemble_A(std::vector<double> dplus_diag, std::vector<double> dminus_diag,
                              double alpha, std::size_t m);

}  // namespace fracdiff
