#pragma once

#include <filesystem>
#include <iosfwd>
#include <span>
#include <vector>

#include "framedual/linalg.hpp"
#include "framedual/matrix.hpp"

namespace framedual {

/// Default relative tolerance for spectral-gap and invertibility tests.
inline constexpr double kDefaultTol = 1e-10;

/// A finite family of vectors in R^r, stored as the r-by-N synthesis matrix
/// whose column n holds the n-th vector. Zero columns are legal; whether the
/// family actually spans is decided by is_frame, not at construction.
class Frame {
public:
    explicit Frame(Matrix synthesis);

    int dim() const { return synthesis_.rows(); }
    int count() const { return synthesis_.cols(); }
    const Matrix& synthesis() const { return synthesis_; }

    /// Column n, zero-based.
    std::span<const double> vector(int n) const { return synthesis_.col(n); }

    static Frame identity_basis(int r);

private:
    Matrix synthesis_;
};

/// A set of erased coefficient indices. Indices are one-based following the
/// frame-file convention (vector n lives in file line n). Stored sorted;
/// the induced permutation moves the erased indices to the leading positions
/// so the reduced-dual constructions can work on a contiguous prefix.
class ErasureSet {
public:
    ErasureSet(std::vector<int> indices_one_based, int frame_count);

    int k() const { return static_cast<int>(erased0_.size()); }
    int frame_count() const { return n_; }

    /// Sorted, one-based.
    std::vector<int> indices() const;
    /// Sorted, zero-based.
    const std::vector<int>& erased0() const { return erased0_; }
    /// Complement, sorted, zero-based.
    const std::vector<int>& complement0() const { return complement0_; }
    /// Front permutation: erased indices first, then the complement,
    /// both ascending. permutation()[p] is the original zero-based index
    /// stored at permuted position p.
    std::vector<int> permutation() const;

    bool contains(int index_one_based) const;

private:
    int n_ = 0;
    std::vector<int> erased0_;
    std::vector<int> complement0_;
};

/// Perturbation sequence used to parametrize dual frames: column n holds
/// the perturbation vector paired with frame vector n. Any finite matrix is
/// admissible (every finite family is a Bessel sequence here).
class BesselPerturbation {
public:
    explicit BesselPerturbation(Matrix columns);

    int dim() const { return columns_.rows(); }
    int count() const { return columns_.cols(); }
    const Matrix& columns() const { return columns_; }

private:
    Matrix columns_;
};

/// A frame together with a verified dual: synthesis(dual) * synthesis(frame)^T
/// must be the identity within tolerance. Individual dual columns may be zero.
class DualPair {
public:
    DualPair(Frame frame, Frame dual, double tol = 1e-8);

    const Frame& frame() const { return frame_; }
    const Frame& dual() const { return dual_; }

private:
    Frame frame_;
    Frame dual_;
};

// --- operations ---

/// Coefficient map h -> (<h, x_n>)_n.
std::vector<double> analysis(const Frame& f, std::span<const double> h);

/// Adjoint map c -> sum_n c_n x_n.
std::vector<double> synthesis(const Frame& f, std::span<const double> c);

/// S = sum_n x_n x_n^T, symmetric positive semi-definite.
Matrix frame_operator(const Frame& f);

struct FrameBounds {
    double lower = 0.0;
    double upper = 0.0;
};

/// Extreme eigenvalues of the frame operator: upper by power iteration on S,
/// lower by power iteration on (upper*I - S). lower > 0 iff the family is
/// a frame.
FrameBounds frame_bounds(const Frame& f);

/// Relative spectral-gap test: smallest eigenvalue > tol * largest.
bool is_frame(const Frame& f, double tol = kDefaultTol);

/// Minimal redundancy condition: the vectors surviving the erasure still
/// span the space, i.e. the reduced family is itself a frame.
bool mrc_check(const Frame& f, const ErasureSet& e, double tol = kDefaultTol);

/// New frame from the given zero-based columns, in the given order.
Frame select_columns(const Frame& f, std::span<const int> zero_based);

/// The family remaining after erasure, columns in ascending original order.
Frame reduced_frame(const Frame& f, const ErasureSet& e);

// --- frame file I/O (text format "FRM1") ---
// Line 1: `FRM1 <r> <N>`; then N lines of r space-separated floats, line n
// holding vector x_n. Dimension mismatches and non-finite values are rejected.

Frame read_frm1(std::istream& in);
void write_frm1(const Frame& f, std::ostream& out);
Frame load_frame(const std::filesystem::path& path);
void save_frame(const Frame& f, const std::filesystem::path& path);

} // namespace framedual
