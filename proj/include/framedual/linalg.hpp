#pragma once

#include <optional>
#include <span>
#include <vector>

#include "framedual/matrix.hpp"

namespace framedual {

/// Cholesky factorization A = L L^T of a symmetric positive definite matrix.
/// factor() returns nullopt when a pivot is not strictly positive, which is
/// the numerical signal that the matrix is not positive definite.
class Cholesky {
public:
    static std::optional<Cholesky> factor(const Matrix& a);

    void solve_in_place(std::span<double> b) const;
    Matrix solve(const Matrix& rhs) const;

private:
    Matrix l_;
};

/// LU factorization with partial pivoting. Factorization never fails;
/// exact singularity is reported through singular() (a zero pivot) and
/// near-singularity through rcond().
class Lu {
public:
    static Lu factor(Matrix a);

    bool singular() const { return singular_; }
    double min_abs_pivot() const { return min_pivot_; }
    double max_abs_pivot() const { return max_pivot_; }
    double norm1() const { return norm1_a_; } ///< 1-norm of the factored matrix

    /// Reciprocal condition estimate in the 1-norm: 1 / (||A||_1 ||A^-1||_1),
    /// with ||A^-1||_1 estimated by Hager's method (a lower bound, so the
    /// returned value never understates the conditioning risk by more than
    /// the estimator's usual slack). Returns 0 for a singular factorization.
    double rcond() const;

    void solve_in_place(std::span<double> b) const;
    Matrix solve(const Matrix& rhs) const;
    void solve_transpose_in_place(std::span<double> b) const;

private:
    Matrix lu_;
    std::vector<int> piv_;
    double norm1_a_ = 0.0;
    double min_pivot_ = 0.0;
    double max_pivot_ = 0.0;
    bool singular_ = false;
};

struct PowerIterationOptions {
    double rel_tol = 1e-12;
    int max_iter = 5000;
};

/// Largest eigenvalue of a symmetric positive semi-definite matrix by power
/// iteration. Start vector is the normalized all-ones vector; if the iterate
/// collapses to zero (start vector in the null space), it is re-randomized
/// from a fixed seed.
double largest_eigenvalue_sym(const Matrix& s, PowerIterationOptions opts = {});

/// Largest singular value of a rectangular matrix: power iteration on M^T M
/// without forming the product.
double spectral_norm(const Matrix& m, PowerIterationOptions opts = {});

} // namespace framedual
