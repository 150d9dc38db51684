#include "framedual/recovery.hpp"

#include <cmath>

#include "framedual/errors.hpp"

namespace framedual {

ErasedCoefficients::ErasedCoefficients(std::vector<double> preserved, ErasureSet erasure)
    : preserved_(std::move(preserved)), erasure_(std::move(erasure)) {
    if (static_cast<int>(preserved_.size()) != erasure_.frame_count() - erasure_.k())
        throw DimensionMismatch("erased coefficients: preserved count != N - k");
    for (double v : preserved_)
        if (!std::isfinite(v)) throw Error("erased coefficients: non-finite value");
}

ErasedCoefficients erase(std::span<const double> coeffs, const ErasureSet& e) {
    if (static_cast<int>(coeffs.size()) != e.frame_count())
        throw DimensionMismatch("erase: coefficient length != frame count");
    std::vector<double> preserved;
    preserved.reserve(e.complement0().size());
    for (int idx : e.complement0()) preserved.push_back(coeffs[idx]);
    return {std::move(preserved), e};
}

std::vector<double> reconstruct(const ErasedCoefficients& ec, const Frame& dual_over_complement) {
    if (dual_over_complement.count() != static_cast<int>(ec.preserved().size()))
        throw DimensionMismatch("reconstruct: dual family not aligned with surviving coefficients");
    return synthesis(dual_over_complement, ec.preserved());
}

double duality_error(const Frame& x_reduced, const Frame& v) {
    if (x_reduced.dim() != v.dim() || x_reduced.count() != v.count())
        throw DimensionMismatch("duality_error: shapes differ");
    Matrix recon = mul_nt(v.synthesis(), x_reduced.synthesis());
    add_scaled_identity(recon, -1.0);
    return spectral_norm(recon);
}

} // namespace framedual
