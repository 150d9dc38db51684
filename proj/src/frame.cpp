#include "framedual/frame.hpp"

#include <algorithm>
#include <cmath>

#include "framedual/errors.hpp"

namespace framedual {

Frame::Frame(Matrix synthesis) : synthesis_(std::move(synthesis)) {
    if (synthesis_.rows() < 1 || synthesis_.cols() < 1)
        throw DimensionMismatch("frame: need at least one vector in at least one dimension");
    if (!synthesis_.all_finite())
        throw Error("frame: synthesis matrix has non-finite entries");
}

Frame Frame::identity_basis(int r) {
    return Frame(Matrix::identity(r));
}

ErasureSet::ErasureSet(std::vector<int> indices_one_based, int frame_count)
    : n_(frame_count) {
    if (frame_count < 2) throw DimensionMismatch("erasure set: frame must have at least two vectors");
    if (indices_one_based.empty()) throw DimensionMismatch("erasure set: must erase at least one index");
    std::sort(indices_one_based.begin(), indices_one_based.end());
    for (std::size_t i = 0; i < indices_one_based.size(); ++i) {
        const int idx = indices_one_based[i];
        if (idx < 1 || idx > frame_count)
            throw DimensionMismatch("erasure set: index out of range");
        if (i > 0 && idx == indices_one_based[i - 1])
            throw DimensionMismatch("erasure set: duplicate index");
        erased0_.push_back(idx - 1);
    }
    if (k() >= frame_count)
        throw DimensionMismatch("erasure set: must leave at least one vector");
    complement0_.reserve(frame_count - k());
    std::size_t next = 0;
    for (int i = 0; i < frame_count; ++i) {
        if (next < erased0_.size() && erased0_[next] == i)
            ++next;
        else
            complement0_.push_back(i);
    }
}

std::vector<int> ErasureSet::indices() const {
    std::vector<int> out(erased0_.size());
    for (std::size_t i = 0; i < erased0_.size(); ++i) out[i] = erased0_[i] + 1;
    return out;
}

std::vector<int> ErasureSet::permutation() const {
    std::vector<int> p = erased0_;
    p.insert(p.end(), complement0_.begin(), complement0_.end());
    return p;
}

bool ErasureSet::contains(int index_one_based) const {
    return std::binary_search(erased0_.begin(), erased0_.end(), index_one_based - 1);
}

BesselPerturbation::BesselPerturbation(Matrix columns) : columns_(std::move(columns)) {
    if (!columns_.all_finite())
        throw Error("perturbation: non-finite entries");
}

DualPair::DualPair(Frame frame, Frame dual, double tol)
    : frame_(std::move(frame)), dual_(std::move(dual)) {
    if (frame_.dim() != dual_.dim() || frame_.count() != dual_.count())
        throw DimensionMismatch("dual pair: shapes differ");
    Matrix recon = mul_nt(dual_.synthesis(), frame_.synthesis());
    add_scaled_identity(recon, -1.0);
    const double err = spectral_norm(recon);
    if (!(err <= tol))
        throw Error("dual pair: reconstruction identity fails (error " + std::to_string(err) + ")");
}

std::vector<double> analysis(const Frame& f, std::span<const double> h) {
    if (static_cast<int>(h.size()) != f.dim())
        throw DimensionMismatch("analysis: vector length != frame dimension");
    return mul_tvec(f.synthesis(), h);
}

std::vector<double> synthesis(const Frame& f, std::span<const double> c) {
    if (static_cast<int>(c.size()) != f.count())
        throw DimensionMismatch("synthesis: coefficient length != frame count");
    return mul_vec(f.synthesis(), c);
}

Matrix frame_operator(const Frame& f) {
    return sym_aat(f.synthesis());
}

FrameBounds frame_bounds(const Frame& f) {
    // tighter tolerance than the default: the lower bound comes out of a
    // subtraction against `upper`, so the iteration's residual becomes the
    // floor below which deficiency cannot be distinguished from a small gap
    const PowerIterationOptions opts{1e-14, 5000};
    const Matrix s = frame_operator(f);
    FrameBounds b;
    b.upper = largest_eigenvalue_sym(s, opts);
    if (b.upper == 0.0) return b;
    // smallest eigenvalue via the shifted operator upper*I - S
    Matrix shifted(s.rows(), s.cols());
    for (int j = 0; j < s.cols(); ++j)
        for (int i = 0; i < s.rows(); ++i) shifted(i, j) = -s(i, j);
    add_scaled_identity(shifted, b.upper);
    const double gap = largest_eigenvalue_sym(shifted, opts);
    b.lower = std::max(b.upper - gap, 0.0);
    return b;
}

bool is_frame(const Frame& f, double tol) {
    if (!(tol > 0.0)) throw Error("is_frame: tolerance must be positive");
    const FrameBounds b = frame_bounds(f);
    return b.lower > tol * b.upper;
}

bool mrc_check(const Frame& f, const ErasureSet& e, double tol) {
    if (e.frame_count() != f.count())
        throw DimensionMismatch("mrc_check: erasure set sized for a different frame");
    return is_frame(reduced_frame(f, e), tol);
}

Frame select_columns(const Frame& f, std::span<const int> zero_based) {
    Matrix m(f.dim(), static_cast<int>(zero_based.size()));
    for (std::size_t j = 0; j < zero_based.size(); ++j) {
        const int src = zero_based[j];
        if (src < 0 || src >= f.count())
            throw DimensionMismatch("select_columns: index out of range");
        auto dst = m.col(static_cast<int>(j));
        auto col = f.vector(src);
        std::copy(col.begin(), col.end(), dst.begin());
    }
    return Frame(std::move(m));
}

Frame reduced_frame(const Frame& f, const ErasureSet& e) {
    if (e.frame_count() != f.count())
        throw DimensionMismatch("reduced_frame: erasure set sized for a different frame");
    return select_columns(f, e.complement0());
}

} // namespace framedual
