#include "framedual/linalg.hpp"

#include <algorithm>
#include <cmath>
#include <cstdlib>

#include "framedual/errors.hpp"
#include "framedual/random.hpp"

namespace framedual {

std::optional<Cholesky> Cholesky::factor(const Matrix& a) {
    if (a.rows() != a.cols()) throw DimensionMismatch("cholesky: matrix must be square");
    const int n = a.rows();
    Cholesky c;
    c.l_ = a;
    Matrix& l = c.l_;
    // right-looking variant; all inner loops walk contiguous columns
    for (int j = 0; j < n; ++j) {
        auto lj = l.col(j);
        const double d = lj[j];
        if (!(d > 0.0)) return std::nullopt;
        const double ljj = std::sqrt(d);
        lj[j] = ljj;
        for (int i = j + 1; i < n; ++i) lj[i] /= ljj;
        for (int k = j + 1; k < n; ++k) {
            const double lkj = lj[k];
            if (lkj == 0.0) continue;
            auto lk = l.col(k);
            for (int i = k; i < n; ++i) lk[i] -= lj[i] * lkj;
        }
    }
    // zero strict upper triangle so lower() is clean
    for (int j = 1; j < n; ++j)
        for (int i = 0; i < j; ++i) l(i, j) = 0.0;
    return c;
}

void Cholesky::solve_in_place(std::span<double> b) const {
    const int n = l_.rows();
    if (static_cast<int>(b.size()) != n) throw DimensionMismatch("cholesky solve: length mismatch");
    // L y = b
    for (int j = 0; j < n; ++j) {
        auto lj = l_.col(j);
        b[j] /= lj[j];
        const double bj = b[j];
        if (bj == 0.0) continue;
        for (int i = j + 1; i < n; ++i) b[i] -= lj[i] * bj;
    }
    // L^T x = y
    for (int j = n - 1; j >= 0; --j) {
        auto lj = l_.col(j);
        double s = b[j];
        for (int k = j + 1; k < n; ++k) s -= lj[k] * b[k];
        b[j] = s / lj[j];
    }
}

Matrix Cholesky::solve(const Matrix& rhs) const {
    if (rhs.rows() != l_.rows()) throw DimensionMismatch("cholesky solve: row mismatch");
    Matrix x = rhs;
    for (int j = 0; j < x.cols(); ++j) solve_in_place(x.col(j));
    return x;
}

Lu Lu::factor(Matrix a) {
    if (a.rows() != a.cols()) throw DimensionMismatch("lu: matrix must be square");
    const int n = a.rows();
    Lu f;
    f.norm1_a_ = framedual::norm1(a);
    f.piv_.resize(n);
    for (int j = 0; j < n; ++j) {
        // pivot search in column j
        int p = j;
        double best = std::abs(a(j, j));
        for (int i = j + 1; i < n; ++i) {
            const double v = std::abs(a(i, j));
            if (v > best) {
                best = v;
                p = i;
            }
        }
        f.piv_[j] = p;
        if (p != j)
            for (int k = 0; k < n; ++k) std::swap(a(j, k), a(p, k));
        const double pivot = a(j, j);
        if (j == 0 || std::abs(pivot) < f.min_pivot_) f.min_pivot_ = std::abs(pivot);
        if (std::abs(pivot) > f.max_pivot_) f.max_pivot_ = std::abs(pivot);
        if (pivot == 0.0) {
            f.singular_ = true;
            continue;
        }
        auto aj = a.col(j);
        for (int i = j + 1; i < n; ++i) aj[i] /= pivot;
        for (int k = j + 1; k < n; ++k) {
            const double ajk = a(j, k);
            if (ajk == 0.0) continue;
            auto ak = a.col(k);
            for (int i = j + 1; i < n; ++i) ak[i] -= aj[i] * ajk;
        }
    }
    f.lu_ = std::move(a);
    return f;
}

void Lu::solve_in_place(std::span<double> b) const {
    const int n = lu_.rows();
    if (static_cast<int>(b.size()) != n) throw DimensionMismatch("lu solve: length mismatch");
    // rows were swapped in full during factorization, so apply the whole
    // permutation to b before touching the triangular factors
    for (int j = 0; j < n; ++j) std::swap(b[j], b[piv_[j]]);
    // L y = P b (unit lower)
    for (int j = 0; j < n; ++j) {
        const double bj = b[j];
        if (bj == 0.0) continue;
        auto lj = lu_.col(j);
        for (int i = j + 1; i < n; ++i) b[i] -= lj[i] * bj;
    }
    // U x = y
    for (int j = n - 1; j >= 0; --j) {
        b[j] /= lu_(j, j);
        const double bj = b[j];
        if (bj == 0.0) continue;
        auto lj = lu_.col(j);
        for (int i = 0; i < j; ++i) b[i] -= lj[i] * bj;
    }
}

void Lu::solve_transpose_in_place(std::span<double> b) const {
    const int n = lu_.rows();
    if (static_cast<int>(b.size()) != n) throw DimensionMismatch("lu solve: length mismatch");
    // U^T y = b (forward)
    for (int j = 0; j < n; ++j) {
        double s = b[j];
        for (int k = 0; k < j; ++k) s -= lu_(k, j) * b[k];
        b[j] = s / lu_(j, j);
    }
    // L^T z = y (backward, unit diagonal)
    for (int j = n - 1; j >= 0; --j) {
        double s = b[j];
        auto lj = lu_.col(j);
        for (int k = j + 1; k < n; ++k) s -= lj[k] * b[k];
        b[j] = s;
    }
    for (int j = n - 1; j >= 0; --j) std::swap(b[j], b[piv_[j]]);
}

Matrix Lu::solve(const Matrix& rhs) const {
    if (rhs.rows() != lu_.rows()) throw DimensionMismatch("lu solve: row mismatch");
    Matrix x = rhs;
    for (int j = 0; j < x.cols(); ++j) solve_in_place(x.col(j));
    return x;
}

double Lu::rcond() const {
    const int n = lu_.rows();
    if (n == 0) return 0.0;
    if (singular_ || norm1_a_ == 0.0) return 0.0;
    // Hager's 1-norm estimator for ||A^-1||_1.
    std::vector<double> x(n, 1.0 / n);
    double inv_norm = 0.0;
    for (int iter = 0; iter < 5; ++iter) {
        std::vector<double> y = x;
        solve_in_place(y);
        double y1 = 0.0;
        for (double v : y) y1 += std::abs(v);
        inv_norm = std::max(inv_norm, y1);
        std::vector<double> xi(n);
        for (int i = 0; i < n; ++i) xi[i] = (y[i] >= 0.0) ? 1.0 : -1.0;
        solve_transpose_in_place(xi);
        int jmax = 0;
        double zmax = 0.0, zx = 0.0;
        for (int i = 0; i < n; ++i) {
            const double az = std::abs(xi[i]);
            if (az > zmax) {
                zmax = az;
                jmax = i;
            }
            zx += xi[i] * x[i];
        }
        if (zmax <= zx) break;
        std::fill(x.begin(), x.end(), 0.0);
        x[jmax] = 1.0;
    }
    if (!(inv_norm > 0.0) || !std::isfinite(inv_norm)) return 0.0;
    return 1.0 / (norm1_a_ * inv_norm);
}

namespace {

// Shared power-iteration loop. apply(v, w) must set w = M v for the PSD
// operator M whose top eigenvalue is sought; the Rayleigh quotient v.w is
// the eigenvalue estimate.
template <typename Apply>
double power_iteration(int n, Apply&& apply, PowerIterationOptions opts) {
    if (n == 0) return 0.0;
    std::vector<double> v(n, 1.0 / std::sqrt(static_cast<double>(n)));
    std::vector<double> w(n);
    double lambda = 0.0;
    int restarts = 0;
    for (int iter = 0; iter < opts.max_iter; ++iter) {
        apply(v, w);
        const double rayleigh = dot(v, w);
        const double wn = norm2(w);
        if (wn == 0.0) {
            // start vector lies in the null space; re-randomize deterministically
            if (restarts >= 3) return 0.0;
            Rng rng(0xf00dULL + restarts);
            v = rng.gaussian_vector(n);
            const double vn = norm2(v);
            scale(1.0 / vn, v);
            ++restarts;
            continue;
        }
        for (int i = 0; i < n; ++i) v[i] = w[i] / wn;
        if (iter > 0 && std::abs(rayleigh - lambda) <= opts.rel_tol * std::abs(rayleigh)) {
            return rayleigh;
        }
        lambda = rayleigh;
    }
    return lambda;
}

} // namespace

double largest_eigenvalue_sym(const Matrix& s, PowerIterationOptions opts) {
    if (s.rows() != s.cols()) throw DimensionMismatch("largest_eigenvalue_sym: matrix must be square");
    if (max_abs(s) == 0.0) return 0.0;
    return power_iteration(
        s.rows(),
        [&](const std::vector<double>& v, std::vector<double>& w) { w = mul_vec(s, v); },
        opts);
}

double spectral_norm(const Matrix& m, PowerIterationOptions opts) {
    if (m.rows() == 0 || m.cols() == 0) return 0.0;
    if (max_abs(m) == 0.0) return 0.0;
    const double lambda = power_iteration(
        m.cols(),
        [&](const std::vector<double>& v, std::vector<double>& w) {
            std::vector<double> t = mul_vec(m, v);
            w = mul_tvec(m, t);
        },
        opts);
    return std::sqrt(std::max(lambda, 0.0));
}

} // namespace framedual
