#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "framedual/frame.hpp"

namespace framedual {

/// Canonical dual y_n = S^{-1} x_n, with a spanning check first.
/// Throws NotAFrame when the family does not span or the frame operator
/// cannot be factored.
Frame canonical_dual(const Frame& x, double tol = kDefaultTol);

/// Canonical dual without the spectral spanning test: one SPD factorization
/// of the frame operator plus one pair of triangular solves per vector.
/// Factorization failure still throws NotAFrame. This is the direct baseline
/// the benchmark times against the reduced-dimension constructions.
Frame canonical_dual_unchecked(const Frame& x);

/// Dual frame parametrized by a perturbation sequence:
///   z_n = y_n + q_n - sum_i <y_n, x_i> q_i
/// where y is the canonical dual of x. Every dual frame arises this way.
Frame dual_from_perturbation(const Frame& x, const Frame& y, const BesselPerturbation& q);

/// The k-by-k coefficient matrix [<z_j, x_i>]_{i,j in E} - I, rows and
/// columns ordered by the erasure set's sorted indices.
struct AxzMatrix {
    Matrix data;
    int dim = 0;
    int count = 0;
    std::vector<int> erased_one_based;
};

AxzMatrix build_axz(const Frame& x, const Frame& z, const ErasureSet& e);

/// Reduced dual via the k-by-k system: one LU factorization of the
/// coefficient matrix, one solve per surviving index n for the weights
/// (alpha_n1..alpha_nk), then w_n = z_n - sum_i alpha_ni z_i.
/// Throws SingularAxz when the reciprocal condition estimate of the
/// coefficient matrix is at or below tol.
/// Returned columns follow ascending original order of the survivors.
Frame reduced_dual_matrix(const Frame& x, const Frame& z, const ErasureSet& e,
                          double tol = kDefaultTol);

/// Reduced dual via the full-dimension operator: factor the r-by-r matrix
/// I - sum_{i in E} z_i x_i^T once and solve for each surviving column.
/// Throws SingularOperator when the LU pivot test fails (relative to tol).
Frame reduced_dual_operator(const Frame& x, const Frame& z, const ErasureSet& e,
                            double tol = kDefaultTol);

enum class TraceMode {
    FinalOnly, ///< keep only the last completed stage (benchmark path)
    FullTrace, ///< snapshot every completed stage
};

/// Result of the rank-one iterative construction.
struct IterationTrace {
    int erasure_count = 0; ///< k of the erasure set
    int completed = 0;     ///< stages finished (k when the run completes)
    /// One-based step index j at which |1 - <u_j, x_j>| fell inside
    /// tolerance, making the step's denominator ill-defined. Empty when all
    /// k steps completed.
    std::optional<int> iteration_stop;
    /// Columns of the last completed stage: families (u_n) for n > completed
    /// in the front-permuted ordering (remaining erased indices first, then
    /// survivors ascending).
    Matrix last_stage;
    /// FullTrace only: stages[j-1] holds stage j (N - j columns).
    std::vector<Matrix> stages;

    bool completed_all() const { return completed == erasure_count; }
};

/// Rank-one iterative construction: starting from u_n = z_n, step j rescales
/// against the erased vector x_j,
///   u_n <- u_n + <u_n, x_j> / (1 - <u_j, x_j>) * u_j   for n > j,
/// stopping early when the denominator vanishes within tolerance. After step
/// j the remaining family is a dual frame of the vectors past j; after all k
/// steps it is a dual frame of the survivors and matches the other two
/// constructions. Early stop is a normal outcome, not an error.
IterationTrace reduced_dual_iterative(const Frame& x, const Frame& z, const ErasureSet& e,
                                      double tol = kDefaultTol,
                                      TraceMode mode = TraceMode::FinalOnly);

/// Extracts the surviving-index dual family from a completed trace.
Frame iterative_dual_frame(const IterationTrace& trace);

/// Evaluation of the solvability statements for one (frame, dual, erasure)
/// triple:
///   A  - survivors of x still span
///   A' - survivors of both x and z still span
///   B  - the k-by-k coefficient matrix is invertible
///   C  - the r-by-r operator is invertible (equivalent to B)
///   D  - every step of the iterative construction is well defined
/// They satisfy D => C, C = B, C => A', A' => A, and each implication is
/// strict for suitable non-canonical duals.
struct StatementReport {
    bool stmt_A = false;
    bool stmt_A_prime = false;
    bool stmt_B = false;
    bool stmt_C = false;
    bool stmt_D = false;
    double axz_condition = 0.0; ///< reciprocal condition estimate of the k-by-k matrix
    std::optional<int> iteration_stop;
};

StatementReport check_statements(const Frame& x, const Frame& z, const ErasureSet& e,
                                 double tol = kDefaultTol);

/// Random perturbation supported on the erased indices: Gaussian columns
/// scaled by 1/sqrt(k) on E, zero elsewhere. The dual built from such a
/// perturbation is solvable via the k-by-k system exactly when the matrix
/// [<q_j, x_i>] - I over E is invertible.
BesselPerturbation perturbation_supported_on_E(const Frame& x, const ErasureSet& e,
                                               std::uint64_t seed);

/// Random perturbation supported on the erased indices whose columns are
/// projected onto the orthogonal complement of span{x_i : i in E}. Duals
/// built from this class always complete the iterative construction. When
/// the complement is trivial the perturbation is zero.
BesselPerturbation perturbation_orthogonal_class(const Frame& x, const ErasureSet& e,
                                                 std::uint64_t seed);

} // namespace framedual
