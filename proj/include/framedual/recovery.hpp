#pragma once

#include <span>
#include <vector>

#include "framedual/frame.hpp"

namespace framedual {

/// Coefficient vector with the erased positions removed structurally;
/// only the surviving values are stored, in ascending original order.
class ErasedCoefficients {
public:
    ErasedCoefficients(std::vector<double> preserved, ErasureSet erasure);

    const std::vector<double>& preserved() const { return preserved_; }
    const ErasureSet& erasure() const { return erasure_; }

private:
    std::vector<double> preserved_;
    ErasureSet erasure_;
};

/// Drops the erased positions from a full coefficient vector. Surviving
/// values are preserved bit-exactly.
ErasedCoefficients erase(std::span<const double> coeffs, const ErasureSet& e);

/// Reconstruction sum_{surviving n} c_n v_n. The dual family's columns must
/// be aligned with the survivors in ascending original order.
std::vector<double> reconstruct(const ErasedCoefficients& ec, const Frame& dual_over_complement);

/// Largest singular value of V X^T - I where V and X are the synthesis
/// matrices of the candidate dual and the reduced frame. Zero means exact
/// perfect reconstruction from the surviving coefficients.
double duality_error(const Frame& x_reduced, const Frame& v);

} // namespace framedual
