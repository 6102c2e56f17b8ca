#include "fracdiff/linalg.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace fracdiff {

DenseMatrix DenseMatrix::identity(std::size_t n) {
    DenseMatrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) m(i, i) = 1.0;
    return m;
}

DenseMatrix DenseMatrix::transpose() const {
    DenseMatrix t(cols_, rows_);
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t j = 0; j < cols_; ++j) t(j, i) = (*this)(i, j);
    return t;
}

DenseMatrix DenseMatrix::symmetric_part() const {
    if (rows_ != cols_) throw std::invalid_argument("symmetric_part: matrix must be square");
    DenseMatrix s(rows_, cols_);
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t j = 0; j < cols_; ++j)
            s(i, j) = 0.5 * ((*this)(i, j) + (*this)(j, i));
    return s;
}

std::vector<double> DenseMatrix::apply(const std::vector<double>& u, bool transpose) const {
    const std::size_t in = transpose ? rows_ : cols_;
    const std::size_t out = transpose ? cols_ : rows_;
    if (u.size() != in) throw std::invalid_argument("DenseMatrix::apply: dimension mismatch");
    std::vector<double> y(out, 0.0);
    if (!transpose) {
        for (std::size_t i = 0; i < rows_; ++i) {
            double acc = 0.0;
            const double* row = data_.data() + i * cols_;
            for (std::size_t j = 0; j < cols_; ++j) acc += row[j] * u[j];
            y[i] = acc;
        }
    } else {
        for (std::size_t i = 0; i < rows_; ++i) {
            const double* row = data_.data() + i * cols_;
            const double ui = u[i];
            for (std::size_t j = 0; j < cols_; ++j) y[j] += row[j] * ui;
        }
    }
    return y;
}

double DenseMatrix::frobenius_norm() const {
    double acc = 0.0;
    for (double v : data_) acc += v * v;
    return std::sqrt(acc);
}

DenseMatrix operator*(const DenseMatrix& a, const DenseMatrix& b) {
    if (a.cols() != b.rows()) throw std::invalid_argument("matmul: dimension mismatch");
    DenseMatrix c(a.rows(), b.cols());
    for (std::size_t i = 0; i < a.rows(); ++i)
        for (std::size_t k = 0; k < a.cols(); ++k) {
            const double aik = a(i, k);
            if (aik == 0.0) continue;
            for (std::size_t j = 0; j < b.cols(); ++j) c(i, j) += aik * b(k, j);
        }
    return c;
}

double dot(const std::vector<double>& a, const std::vector<double>& b) {
    double acc = 0.0;
    for (std::size_t i = 0; i < a.size(); ++i) acc += a[i] * b[i];
    return acc;
}

double norm2(const std::vector<double>& a) { return std::sqrt(dot(a, a)); }

void axpy(double alpha, const std::vector<double>& x, std::vector<double>& y) {
    for (std::size_t i = 0; i < x.size(); ++i) y[i] += alpha * x[i];
}

LuFactorization::LuFactorization(DenseMatrix a) : lu_(std::move(a)) {
    if (lu_.rows() != lu_.cols()) throw std::invalid_argument("lu: matrix must be square");
    const std::size_t n = lu_.rows();
    piv_.resize(n);
    for (std::size_t k = 0; k < n; ++k) {
        std::size_t p = k;
        double best = std::abs(lu_(k, k));
        for (std::size_t i = k + 1; i < n; ++i) {
            const double v = std::abs(lu_(i, k));
            if (v > best) { best = v; p = i; }
        }
        piv_[k] = p;
        if (best == 0.0) { singular_ = true; continue; }
        if (p != k)
            for (std::size_t j = 0; j < n; ++j) std::swap(lu_(k, j), lu_(p, j));
        const double inv = 1.0 / lu_(k, k);
        for (std::size_t i = k + 1; i < n; ++i) {
            const double m = lu_(i, k) * inv;
            lu_(i, k) = m;
            if (m == 0.0) continue;
            for (std::size_t j = k + 1; j < n; ++j) lu_(i, j) -= m * lu_(k, j);
        }
    }
}

void LuFactorization::solve_in_place(std::vector<double>& rhs) const {
    const std::size_t n = lu_.rows();
    if (rhs.size() != n) throw std::invalid_argument("lu solve: dimension mismatch");
    if (singular_) throw std::runtime_error("lu solve: matrix is singular");
    for (std::size_t k = 0; k < n; ++k) {
        if (piv_[k] != k) std::swap(rhs[k], rhs[piv_[k]]);
        for (std::size_t i = k + 1; i < n; ++i) rhs[i] -= lu_(i, k) * rhs[k];
    }
    for (std::size_t k = n; k-- > 0;) {
        for (std::size_t j = k + 1; j < n; ++j) rhs[k] -= lu_(k, j) * rhs[j];
        rhs[k] /= lu_(k, k);
    }
}

std::vector<double> LuFactorization::solve(std::vector<double> rhs) const {
    solve_in_place(rhs);
    return rhs;
}

ComplexLuFactorization::ComplexLuFactorization(const DenseMatrix& a, std::complex<double> shift)
    : n_(a.rows()), lu_(n_ * n_), piv_(n_) {
    if (a.rows() != a.cols()) throw std::invalid_argument("complex lu: matrix must be square");
    for (std::size_t i = 0; i < n_; ++i)
        for (std::size_t j = 0; j < n_; ++j)
            lu_[i * n_ + j] = std::complex<double>(a(i, j), 0.0) - (i == j ? shift : 0.0);
    for (std::size_t k = 0; k < n_; ++k) {
        std::size_t p = k;
        double best = std::abs(lu_[k * n_ + k]);
        for (std::size_t i = k + 1; i < n_; ++i) {
            const double v = std::abs(lu_[i * n_ + k]);
            if (v > best) { best = v; p = i; }
        }
        piv_[k] = p;
        if (best == 0.0) {
            // exactly singular shift; nudge so inverse iteration can proceed
            lu_[k * n_ + k] = std::complex<double>(1e-300, 0.0);
        }
        if (p != k)
            for (std::size_t j = 0; j < n_; ++j) std::swap(lu_[k * n_ + j], lu_[p * n_ + j]);
        const std::complex<double> inv = 1.0 / lu_[k * n_ + k];
        for (std::size_t i = k + 1; i < n_; ++i) {
            const std::complex<double> m = lu_[i * n_ + k] * inv;
            lu_[i * n_ + k] = m;
            for (std::size_t j = k + 1; j < n_; ++j) lu_[i * n_ + j] -= m * lu_[k * n_ + j];
        }
    }
}

void ComplexLuFactorization::solve_in_place(std::vector<std::complex<double>>& rhs) const {
    if (rhs.size() != n_) throw std::invalid_argument("complex lu solve: dimension mismatch");
    for (std::size_t k = 0; k < n_; ++k) {
        if (piv_[k] != k) std::swap(rhs[k], rhs[piv_[k]]);
        for (std::size_t i = k + 1; i < n_; ++i) rhs[i] -= lu_[i * n_ + k] * rhs[k];
    }
    for (std::size_t k = n_; k-- > 0;) {
        for (std::size_t j = k + 1; j < n_; ++j) rhs[k] -= lu_[k * n_ + j] * rhs[j];
        rhs[k] /= lu_[k * n_ + k];
    }
}

std::vector<double> symmetric_eigenvalues_jacobi(DenseMatrix a, double tol_factor) {
    if (a.rows() != a.cols()) throw std::invalid_argument("jacobi: matrix must be square");
    const std::size_t n = a.rows();
    const double fro = a.frobenius_norm();
    if (n == 0) return {};
    if (fro == 0.0) return std::vector<double>(n, 0.0);
    const double target = tol_factor * fro;

    auto off_norm = [&a, n]() {
        double acc = 0.0;
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = i + 1; j < n; ++j) acc += 2.0 * a(i, j) * a(i, j);
        return std::sqrt(acc);
    };

    const std::size_t max_sweeps = 64;
    for (std::size_t sweep = 0; sweep < max_sweeps && off_norm() > target; ++sweep) {
        for (std::size_t p = 0; p + 1 < n; ++p) {
            for (std::size_t q = p + 1; q < n; ++q) {
                const double apq = a(p, q);
                if (std::abs(apq) <= 1e-2 * target / static_cast<double>(n)) continue;
                const double theta = (a(q, q) - a(p, p)) / (2.0 * apq);
                const double t = (theta >= 0.0 ? 1.0 : -1.0) /
                                 (std::abs(theta) + std::sqrt(theta * theta + 1.0));
                const double c = 1.0 / std::sqrt(t * t + 1.0);
                const double s = t * c;
                for (std::size_t k = 0; k < n; ++k) {
                    const double akp = a(k, p), akq = a(k, q);
                    a(k, p) = c * akp - s * akq;
                    a(k, q) = s * akp + c * akq;
                }
                for (std::size_t k = 0; k < n; ++k) {
                    const double apk = a(p, k), aqk = a(q, k);
                    a(p, k) = c * apk - s * aqk;
                    a(q, k) = s * apk + c * aqk;
                }
            }
        }
    }

    std::vector<double> ev(n);
    for (std::size_t i = 0; i < n; ++i) ev[i] = a(i, i);
    std::sort(ev.begin(), ev.end());
    return ev;
}

namespace {

// Householder reduction to upper Hessenberg form (similarity transform).
void hessenberg_reduce(DenseMatrix& h) {
    const std::size_t n = h.rows();
    if (n < 3) return;
    std::vector<double> v(n);
    for (std::size_t k = 0; k + 2 < n; ++k) {
        double norm = 0.0;
        for (std::size_t i = k + 1; i < n; ++i) norm += h(i, k) * h(i, k);
        norm = std::sqrt(norm);
        if (norm == 0.0) continue;
        const double alpha = h(k + 1, k) >= 0.0 ? -norm : norm;
        double vnorm2 = 0.0;
        for (std::size_t i = k + 1; i < n; ++i) {
            v[i] = h(i, k);
            if (i == k + 1) v[i] -= alpha;
            vnorm2 += v[i] * v[i];
        }
        if (vnorm2 == 0.0) continue;
        const double beta = 2.0 / vnorm2;
        // H := P H, P = I - beta v v^T acting on rows k+1..n-1
        for (std::size_t j = k; j < n; ++j) {
            double s = 0.0;
            for (std::size_t i = k + 1; i < n; ++i) s += v[i] * h(i, j);
            s *= beta;
            for (std::size_t i = k + 1; i < n; ++i) h(i, j) -= s * v[i];
        }
        // H := H P on columns k+1..n-1
        for (std::size_t i = 0; i < n; ++i) {
            double s = 0.0;
            for (std::size_t j = k + 1; j < n; ++j) s += h(i, j) * v[j];
            s *= beta;
            for (std::size_t j = k + 1; j < n; ++j) h(i, j) -= s * v[j];
        }
        h(k + 1, k) = alpha;
        for (std::size_t i = k + 2; i < n; ++i) h(i, k) = 0.0;
    }
}

using cd = std::complex<double>;

std::pair<cd, cd> eig2x2(cd a, cd b, cd c, cd d) {
    const cd half_tr = 0.5 * (a + d);
    const cd disc = std::sqrt(half_tr * half_tr - (a * d - b * c));
    return {half_tr + disc, half_tr - disc};
}

}  // namespace

NonsymmetricEigenResult eigenvalues_qr(const DenseMatrix& a, std::size_t max_iterations_per_eigenvalue) {
    if (a.rows() != a.cols()) throw std::invalid_argument("eigenvalues_qr: matrix must be square");
    const std::size_t n = a.rows();
    NonsymmetricEigenResult result;
    if (n == 0) return result;

    DenseMatrix hr = a;
    hessenberg_reduce(hr);

    // Complex single-shift QR with Wilkinson shifts on the Hessenberg form.
    std::vector<cd> h(n * n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) h[i * n + j] = hr(i, j);
    auto H = [&h, n](std::size_t i, std::size_t j) -> cd& { return h[i * n + j]; };

    const double eps = 1e-14;
    std::vector<cd> values;
    values.reserve(n);
    std::size_t m = n - 1;
    std::size_t its = 0;
    bool converged = true;

    while (true) {
        if (m == 0) { values.push_back(H(0, 0)); break; }
        // deflation scan
        std::size_t l = m;
        while (l > 0) {
            const double s = std::abs(H(l - 1, l - 1)) + std::abs(H(l, l));
            if (std::abs(H(l, l - 1)) <= eps * std::max(s, 1e-300)) { H(l, l - 1) = 0.0; break; }
            --l;
        }
        if (l == m) {
            values.push_back(H(m, m));
            --m; its = 0;
            continue;
        }
        if (l == m - 1) {
            auto [e1, e2] = eig2x2(H(m - 1, m - 1), H(m - 1, m), H(m, m - 1), H(m, m));
            values.push_back(e1);
            values.push_back(e2);
            if (m < 2) break;
            m -= 2; its = 0;
            continue;
        }
        if (its >= max_iterations_per_eigenvalue) {
            // report what remains from the diagonal, flag non-convergence
            converged = false;
            for (std::size_t i = l; i <= m; ++i) values.push_back(H(i, i));
            if (l == 0) break;
            m = l - 1; its = 0;
            continue;
        }
        ++its;
        ++result.iterations;

        cd mu;
        if (its % 12 == 0) {
            // exceptional shift to escape stagnation
            mu = H(m, m) + std::abs(H(m, m - 1));
        } else {
            auto [e1, e2] = eig2x2(H(m - 1, m - 1), H(m - 1, m), H(m, m - 1), H(m, m));
            mu = (std::abs(e1 - H(m, m)) <= std::abs(e2 - H(m, m))) ? e1 : e2;
        }

        // explicit shifted QR step on the active block [l..m]
        for (std::size_t i = l; i <= m; ++i) H(i, i) -= mu;
        const std::size_t bn = m - l + 1;
        std::vector<double> cs(bn - 1);
        std::vector<cd> sn(bn - 1);
        for (std::size_t k = l; k < m; ++k) {
            cd x = H(k, k), y = H(k + 1, k);
            const double r = std::sqrt(std::norm(x) + std::norm(y));
            double c;
            cd s;
            if (r == 0.0 || std::abs(x) == 0.0) {
                c = 0.0; s = 1.0;
            } else {
                c = std::abs(x) / r;
                s = (x / std::abs(x)) * std::conj(y) / r;
            }
            cs[k - l] = c; sn[k - l] = s;
            for (std::size_t j = k; j <= m; ++j) {
                const cd t1 = H(k, j), t2 = H(k + 1, j);
                H(k, j) = c * t1 + s * t2;
                H(k + 1, j) = -std::conj(s) * t1 + c * t2;
            }
        }
        for (std::size_t k = l; k < m; ++k) {
            const double c = cs[k - l];
            const cd s = sn[k - l];
            const std::size_t top = l;
            for (std::size_t i = top; i <= std::min(k + 1, m); ++i) {
                const cd t1 = H(i, k), t2 = H(i, k + 1);
                H(i, k) = c * t1 + std::conj(s) * t2;
                H(i, k + 1) = -s * t1 + c * t2;
            }
        }
        for (std::size_t i = l; i <= m; ++i) H(i, i) += mu;
    }

    result.values = std::move(values);
    result.converged = converged;
    return result;
}

}  // namespace fracdiff
