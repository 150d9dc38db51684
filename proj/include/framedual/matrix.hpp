#pragma once

#include <span>
#include <vector>

namespace framedual {

/// Dense real matrix, column-major. Column j is contiguous, which matches
/// the convention used throughout: column n of a synthesis matrix holds
/// the n-th vector of a family.
class Matrix {
public:
    Matrix() = default;
    Matrix(int rows, int cols);
    Matrix(int rows, int cols, std::vector<double> data);

    static Matrix identity(int n);

    int rows() const { return rows_; }
    int cols() const { return cols_; }

    double& operator()(int i, int j) { return data_[static_cast<std::size_t>(j) * rows_ + i]; }
    double operator()(int i, int j) const { return data_[static_cast<std::size_t>(j) * rows_ + i]; }

    std::span<double> col(int j) { return {data_.data() + static_cast<std::size_t>(j) * rows_, static_cast<std::size_t>(rows_)}; }
    std::span<const double> col(int j) const { return {data_.data() + static_cast<std::size_t>(j) * rows_, static_cast<std::size_t>(rows_)}; }

    std::vector<double>& data() { return data_; }
    const std::vector<double>& data() const { return data_; }

    bool all_finite() const;

private:
    int rows_ = 0;
    int cols_ = 0;
    std::vector<double> data_;
};

// Vector kernels. Spans must have equal length where two are given.
double dot(std::span<const double> a, std::span<const double> b);
void axpy(double a, std::span<const double> x, std::span<double> y); // y += a*x
void scale(double a, std::span<double> x);
double norm2(std::span<const double> x);

// C = A * B
Matrix mul(const Matrix& a, const Matrix& b);
// C = A^T * B
Matrix mul_tn(const Matrix& a, const Matrix& b);
// C = A * B^T
Matrix mul_nt(const Matrix& a, const Matrix& b);
// A * A^T, exactly symmetric output.
Matrix sym_aat(const Matrix& a);

std::vector<double> mul_vec(const Matrix& a, std::span<const double> x);  // A x
std::vector<double> mul_tvec(const Matrix& a, std::span<const double> x); // A^T x

Matrix transpose(const Matrix& a);
Matrix add(const Matrix& a, const Matrix& b);
Matrix sub(const Matrix& a, const Matrix& b);
void add_scaled_identity(Matrix& a, double s); // A += s*I

double norm1(const Matrix& a);   // max column sum of absolute values
double max_abs(const Matrix& a);

} // namespace framedual
