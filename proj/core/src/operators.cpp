#include "fracdiff/operators.hpp"

#include <stdexcept>

#include "fracdiff/fft.hpp"

namespace fracdiff {

ToeplitzOperator::ToeplitzOperator(std::vector<double> weights) : w_(std::move(weights)) {
    if (w_.size() < 2)
        throw std::invalid_argument("ToeplitzOperator: need at least w_0, w_1");
    size_ = w_.size() - 1;
    fft_len_ = next_power_of_two(2 * size_);

    // circulant embedding: first column c with c[0] = w_1, c[k] = w_{k+1}
    // for k < size, and the single upper diagonal w_0 wrapped to c[L-1]
    std::vector<std::complex<double>> c(fft_len_, 0.0);
    for (std::size_t k = 0; k < size_; ++k) c[k] = w_[k + 1];
    c[fft_len_ - 1] = w_[0];
    fft_inplace(c, false);
    spectrum_ = std::move(c);
}

std::vector<double> ToeplitzOperator::first_column() const {
    return {w_.begin() + 1, w_.end()};
}

std::vector<double> ToeplitzOperator::first_row() const {
    std::vector<double> r(size_, 0.0);
    r[0] = w_[1];
    if (size_ > 1) r[1] = w_[0];
    return r;
}

std::vector<double> ToeplitzOperator::apply(const std::vector<double>& u, bool transpose) const {
    if (u.size() != size_)
        throw std::invalid_argument("ToeplitzOperator::apply: dimension mismatch");
    std::vector<std::complex<double>> buf(fft_len_, 0.0);
    for (std::size_t i = 0; i < size_; ++i) buf[i] = u[i];
    fft_inplace(buf, false);
    if (!transpose) {
        for (std::size_t i = 0; i < fft_len_; ++i) buf[i] *= spectrum_[i];
    } else {
        // the transposed Toeplitz embeds into the reversed circulant, whose
        // eigenvalues are the conjugates (real first column)
        for (std::size_t i = 0; i < fft_len_; ++i) buf[i] *= std::conj(spectrum_[i]);
    }
    fft_inplace(buf, true);
    std::vector<double> y(size_);
    for (std::size_t i = 0; i < size_; ++i) y[i] = buf[i].real();
    return y;
}

std::vector<double> ToeplitzOperator::apply_dense(const std::vector<double>& u, bool transpose) const {
    if (u.size() != size_)
        throw std::invalid_argument("ToeplitzOperator::apply_dense: dimension mismatch");
    std::vector<double> y(size_, 0.0);
    for (std::size_t i = 0; i < size_; ++i) {
        double acc = 0.0;
        for (std::size_t j = 0; j < size_; ++j) {
            const std::size_t r = transpose ? j : i;
            const std::size_t c = transpose ? i : j;
            if (r + 1 >= c) {
                const std::size_t k = r + 1 - c;
                if (k <= size_) acc += w_[k] * u[j];
            }
        }
        y[i] = acc;
    }
    return y;
}

DenseMatrix ToeplitzOperator::dense() const {
    DenseMatrix m(size_, size_);
    for (std::size_t i = 0; i < size_; ++i)
        for (std::size_t j = 0; j < size_; ++j)
            if (i + 1 >= j && i + 1 - j <= size_) m(i, j) = w_[i + 1 - j];
    return m;
}

ToeplitzOperator assemble_W(double alpha, std::size_t m) {
    if (m < 2) throw std::invalid_argument("assemble_W: need m >= 2");
    return ToeplitzOperator(wsgd_weights(alpha, m - 1).w);
}

std::vector<double> toeplitz_apply(const ToeplitzOperator& t, const std::vector<double>& u,
                                   bool transpose) {
    return t.apply(u, transpose);
}

FractionalOperator::FractionalOperator(std::vector<double> dplus_diag,
                                       std::vector<double> dminus_diag, double alpha,
                                       std::size_t m)
    : w_(assemble_W(alpha, m)), dplus_(std::move(dplus_diag)), dminus_(std::move(dminus_diag)),
      alpha_(alpha) {
    if (dplus_.size() != m - 1 || dminus_.size() != m - 1)
        throw std::invalid_argument("FractionalOperator: coefficient diagonals must have length m-1");
    for (std::size_t i = 0; i < dplus_.size(); ++i)
        if (dplus_[i] < 0.0 || dminus_[i] < 0.0)
            throw std::invalid_argument("FractionalOperator: diffusion coefficients must be nonnegative");
}

std::vector<double> FractionalOperator::apply(const std::vector<double>& u) const {
    std::vector<double> out(u.size());
    apply(u, out);
    return out;
}

void FractionalOperator::apply(const std::vector<double>& u, std::vector<double>& out) const {
    const std::vector<double> wu = w_.apply(u, false);
    const std::vector<double> wtu = w_.apply(u, true);
    out.resize(u.size());
    for (std::size_t i = 0; i < u.size(); ++i)
        out[i] = dplus_[i] * wu[i] + dminus_[i] * wtu[i];
}

DenseMatrix FractionalOperator::dense() const {
    if (size() > 2048)
        throw std::invalid_argument("FractionalOperator::dense: dimension capped at 2048");
    DenseMatrix m = w_.dense();
    DenseMatrix a(size(), size());
    for (std::size_t i = 0; i < size(); ++i)
        for (std::size_t j = 0; j < size(); ++j)
            a(i, j) = dplus_[i] * m(i, j) + dminus_[i] * m(j, i);
    return a;
}

FractionalOperator assemble_A(std::vector<double> dplus_diag, std::vector<double> dminus_diag,
                              double alpha, std::size_t m) {
    return FractionalOperator(std::move(dplus_diag), std::move(dminus_diag), alpha, m);
}

}  // namespace fracdiff
