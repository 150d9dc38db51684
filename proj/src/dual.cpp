#include "framedual/dual.hpp"

#include <cmath>
#include <utility>

#include "framedual/errors.hpp"
#include "framedual/random.hpp"

namespace framedual {

namespace {

void require_same_shape(const Frame& x, const Frame& z, const char* who) {
    if (x.dim() != z.dim() || x.count() != z.count())
        throw DimensionMismatch(std::string(who) + ": frame and dual shapes differ");
}

void require_erasure_fits(const Frame& x, const ErasureSet& e, const char* who) {
    if (e.frame_count() != x.count())
        throw DimensionMismatch(std::string(who) + ": erasure set sized for a different frame");
}

// Invertibility measure for the coefficient matrix. Its norm is floored at
// 1 (the subtracted identity's scale): a uniformly tiny matrix means the
// cross-Gram nearly hit the identity, which is exactly the singular regime,
// yet a plain reciprocal condition number would call it perfectly
// conditioned (any nonzero 1-by-1 matrix has rcond 1).
double axz_reciprocal_condition(const Lu& lu) {
    return lu.rcond() * std::min(1.0, lu.norm1());
}

} // namespace

Frame canonical_dual(const Frame& x, double tol) {
    if (!is_frame(x, tol)) throw NotAFrame("canonical dual: family does not span");
    return canonical_dual_unchecked(x);
}

Frame canonical_dual_unchecked(const Frame& x) {
    const Matrix s = frame_operator(x);
    auto chol = Cholesky::factor(s);
    if (!chol) throw NotAFrame("canonical dual: frame operator is not positive definite");
    return Frame(chol->solve(x.synthesis()));
}

Frame dual_from_perturbation(const Frame& x, const Frame& y, const BesselPerturbation& q) {
    require_same_shape(x, y, "dual_from_perturbation");
    if (q.dim() != x.dim() || q.count() != x.count())
        throw DimensionMismatch("dual_from_perturbation: perturbation shape differs");
    // Z = Y + Q - (Q X^T) Y; the r-by-r grouping is the cheap one when r < N.
    const Matrix qxt = mul_nt(q.columns(), x.synthesis());
    Matrix z = sub(add(y.synthesis(), q.columns()), mul(qxt, y.synthesis()));
    return Frame(std::move(z));
}

AxzMatrix build_axz(const Frame& x, const Frame& z, const ErasureSet& e) {
    require_same_shape(x, z, "build_axz");
    require_erasure_fits(x, e, "build_axz");
    const Frame xe = select_columns(x, e.erased0());
    const Frame ze = select_columns(z, e.erased0());
    // entry (i,j) = <z_j, x_i> - delta_ij
    Matrix a = mul_tn(xe.synthesis(), ze.synthesis());
    add_scaled_identity(a, -1.0);
    AxzMatrix out;
    out.data = std::move(a);
    out.dim = x.dim();
    out.count = x.count();
    out.erased_one_based = e.indices();
    return out;
}

Frame reduced_dual_matrix(const Frame& x, const Frame& z, const ErasureSet& e, double tol) {
    require_same_shape(x, z, "reduced_dual_matrix");
    require_erasure_fits(x, e, "reduced_dual_matrix");
    const Frame xe = select_columns(x, e.erased0());
    const Frame ze = select_columns(z, e.erased0());
    const Frame zc = select_columns(z, e.complement0());

    Matrix a = mul_tn(xe.synthesis(), ze.synthesis());
    add_scaled_identity(a, -1.0);
    const Lu lu = Lu::factor(std::move(a));
    if (!(axz_reciprocal_condition(lu) > tol))
        throw SingularAxz("reduced dual (matrix method): coefficient matrix is singular");

    // column n of rhs is (<z_n, x_1>, ..., <z_n, x_k>) for surviving n
    const Matrix rhs = mul_tn(xe.synthesis(), zc.synthesis());
    const Matrix alpha = lu.solve(rhs);
    const Matrix omega = sub(zc.synthesis(), mul(ze.synthesis(), alpha));
    return Frame(omega);
}

Frame reduced_dual_operator(const Frame& x, const Frame& z, const ErasureSet& e, double tol) {
    require_same_shape(x, z, "reduced_dual_operator");
    require_erasure_fits(x, e, "reduced_dual_operator");
    const Frame xe = select_columns(x, e.erased0());
    const Frame ze = select_columns(z, e.erased0());
    const Frame zc = select_columns(z, e.complement0());

    // T = I - sum_{i in E} z_i x_i^T
    Matrix t = mul_nt(ze.synthesis(), xe.synthesis());
    for (double& v : t.data()) v = -v;
    add_scaled_identity(t, 1.0);
    const Lu lu = Lu::factor(std::move(t));
    if (lu.singular() || !(lu.min_abs_pivot() > tol * lu.max_abs_pivot()))
        throw SingularOperator("reduced dual (operator method): operator is singular");
    return Frame(lu.solve(zc.synthesis()));
}

IterationTrace reduced_dual_iterative(const Frame& x, const Frame& z, const ErasureSet& e,
                                      double tol, TraceMode mode) {
    require_same_shape(x, z, "reduced_dual_iterative");
    require_erasure_fits(x, e, "reduced_dual_iterative");
    const int k = e.k();
    const int n = x.count();
    const std::vector<int> perm = e.permutation();
    const Frame xp = select_columns(x, perm);
    Matrix u = select_columns(z, perm).synthesis(); // working copy, updated in place

    IterationTrace trace;
    trace.erasure_count = k;
    for (int j = 0; j < k; ++j) {
        auto uj = u.col(j);
        const double d = dot(uj, xp.vector(j));
        if (std::abs(1.0 - d) <= tol * (1.0 + std::abs(d))) {
            trace.iteration_stop = j + 1;
            break;
        }
        const double denom = 1.0 - d;
        for (int m = j + 1; m < n; ++m) {
            auto um = u.col(m);
            const double alpha = dot(um, xp.vector(j)) / denom;
            if (alpha != 0.0) axpy(alpha, uj, um);
        }
        trace.completed = j + 1;
        if (mode == TraceMode::FullTrace) {
            Matrix stage(x.dim(), n - (j + 1));
            for (int m = j + 1; m < n; ++m) {
                auto src = u.col(m);
                auto dst = stage.col(m - (j + 1));
                std::copy(src.begin(), src.end(), dst.begin());
            }
            trace.stages.push_back(std::move(stage));
        }
    }
    trace.last_stage = Matrix(x.dim(), n - trace.completed);
    for (int m = trace.completed; m < n; ++m) {
        auto src = u.col(m);
        auto dst = trace.last_stage.col(m - trace.completed);
        std::copy(src.begin(), src.end(), dst.begin());
    }
    return trace;
}

Frame iterative_dual_frame(const IterationTrace& trace) {
    if (!trace.completed_all())
        throw SingularOperator("iterative dual: construction stopped at step " +
                               std::to_string(trace.iteration_stop.value_or(0)));
    return Frame(trace.last_stage);
}

StatementReport check_statements(const Frame& x, const Frame& z, const ErasureSet& e, double tol) {
    require_same_shape(x, z, "check_statements");
    require_erasure_fits(x, e, "check_statements");
    StatementReport r;
    r.stmt_A = mrc_check(x, e, tol);
    r.stmt_A_prime = r.stmt_A && mrc_check(z, e, tol);
    const AxzMatrix axz = build_axz(x, z, e);
    r.axz_condition = axz_reciprocal_condition(Lu::factor(axz.data));
    r.stmt_B = r.axz_condition > tol;
    r.stmt_C = r.stmt_B; // the operator and the k-by-k matrix are invertible together
    const IterationTrace trace = reduced_dual_iterative(x, z, e, tol, TraceMode::FinalOnly);
    r.stmt_D = trace.completed_all();
    r.iteration_stop = trace.iteration_stop;
    return r;
}

BesselPerturbation perturbation_supported_on_E(const Frame& x, const ErasureSet& e,
                                               std::uint64_t seed) {
    require_erasure_fits(x, e, "perturbation_supported_on_E");
    Rng rng(seed);
    Matrix q(x.dim(), x.count());
    const double sigma = 1.0 / std::sqrt(static_cast<double>(e.k()));
    for (int idx : e.erased0()) {
        auto col = q.col(idx);
        for (double& v : col) v = sigma * rng.normal();
    }
    return BesselPerturbation(std::move(q));
}

BesselPerturbation perturbation_orthogonal_class(const Frame& x, const ErasureSet& e,
                                                 std::uint64_t seed) {
    require_erasure_fits(x, e, "perturbation_orthogonal_class");
    Rng rng(seed);
    const int r = x.dim();
    const int k = e.k();

    // Orthonormal basis of span{x_i : i in E} by modified Gram-Schmidt,
    // dropping dependent columns.
    std::vector<std::vector<double>> basis;
    for (int idx : e.erased0()) {
        auto col = x.vector(idx);
        std::vector<double> v(col.begin(), col.end());
        const double original_norm = norm2(v);
        if (original_norm == 0.0) continue;
        for (const auto& b : basis) axpy(-dot(v, b), b, v);
        const double remaining = norm2(v);
        if (remaining <= 1e-12 * original_norm) continue;
        scale(1.0 / remaining, v);
        basis.push_back(std::move(v));
    }

    Matrix q(r, x.count());
    if (static_cast<int>(basis.size()) >= r) return BesselPerturbation(std::move(q)); // trivial complement

    const double sigma = 1.0 / std::sqrt(static_cast<double>(k));
    for (int idx : e.erased0()) {
        std::vector<double> g = rng.gaussian_vector(r, sigma);
        for (const auto& b : basis) axpy(-dot(g, b), b, g);
        auto col = q.col(idx);
        std::copy(g.begin(), g.end(), col.begin());
    }
    return BesselPerturbation(std::move(q));
}

} // namespace framedual
