#include "framedual/matrix.hpp"

#include <cmath>
#include <cstdlib>

#include "framedual/errors.hpp"

namespace framedual {

namespace {

void require(bool cond, const char* msg) {
    if (!cond) throw DimensionMismatch(msg);
}

} // namespace

Matrix::Matrix(int rows, int cols)
    : rows_(rows), cols_(cols), data_(static_cast<std::size_t>(rows) * cols, 0.0) {
    require(rows >= 0 && cols >= 0, "matrix dimensions must be nonnegative");
}

Matrix::Matrix(int rows, int cols, std::vector<double> data)
    : rows_(rows), cols_(cols), data_(std::move(data)) {
    require(rows >= 0 && cols >= 0, "matrix dimensions must be nonnegative");
    require(data_.size() == static_cast<std::size_t>(rows) * cols,
            "matrix data size does not match dimensions");
}

Matrix Matrix::identity(int n) {
    Matrix m(n, n);
    for (int i = 0; i < n; ++i) m(i, i) = 1.0;
    return m;
}

bool Matrix::all_finite() const {
    for (double v : data_)
        if (!std::isfinite(v)) return false;
    return true;
}

double dot(std::span<const double> a, std::span<const double> b) {
    require(a.size() == b.size(), "dot: length mismatch");
    double s = 0.0;
    for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
    return s;
}

void axpy(double a, std::span<const double> x, std::span<double> y) {
    require(x.size() == y.size(), "axpy: length mismatch");
    for (std::size_t i = 0; i < x.size(); ++i) y[i] += a * x[i];
}

void scale(double a, std::span<double> x) {
    for (double& v : x) v *= a;
}

double norm2(std::span<const double> x) {
    return std::sqrt(dot(x, x));
}

Matrix mul(const Matrix& a, const Matrix& b) {
    require(a.cols() == b.rows(), "mul: inner dimensions differ");
    Matrix c(a.rows(), b.cols());
    for (int j = 0; j < b.cols(); ++j) {
        auto cj = c.col(j);
        for (int l = 0; l < a.cols(); ++l) {
            const double blj = b(l, j);
            if (blj != 0.0) axpy(blj, a.col(l), cj);
        }
    }
    return c;
}

Matrix mul_tn(const Matrix& a, const Matrix& b) {
    require(a.rows() == b.rows(), "mul_tn: inner dimensions differ");
    Matrix c(a.cols(), b.cols());
    for (int j = 0; j < b.cols(); ++j) {
        auto bj = b.col(j);
        for (int i = 0; i < a.cols(); ++i) c(i, j) = dot(a.col(i), bj);
    }
    return c;
}

Matrix mul_nt(const Matrix& a, const Matrix& b) {
    require(a.cols() == b.cols(), "mul_nt: inner dimensions differ");
    Matrix c(a.rows(), b.rows());
    for (int l = 0; l < a.cols(); ++l) {
        auto al = a.col(l);
        for (int j = 0; j < b.rows(); ++j) {
            const double bjl = b(j, l);
            if (bjl != 0.0) axpy(bjl, al, c.col(j));
        }
    }
    return c;
}

Matrix sym_aat(const Matrix& a) {
    const int n = a.rows();
    Matrix c(n, n);
    // accumulate lower triangle, then mirror
    for (int l = 0; l < a.cols(); ++l) {
        auto al = a.col(l);
        for (int j = 0; j < n; ++j) {
            const double ajl = al[j];
            if (ajl == 0.0) continue;
            auto cj = c.col(j);
            for (int i = j; i < n; ++i) cj[i] += al[i] * ajl;
        }
    }
    for (int j = 0; j < n; ++j)
        for (int i = j + 1; i < n; ++i) c(j, i) = c(i, j);
    return c;
}

std::vector<double> mul_vec(const Matrix& a, std::span<const double> x) {
    require(static_cast<int>(x.size()) == a.cols(), "mul_vec: length mismatch");
    std::vector<double> y(a.rows(), 0.0);
    for (int j = 0; j < a.cols(); ++j)
        if (x[j] != 0.0) axpy(x[j], a.col(j), y);
    return y;
}

std::vector<double> mul_tvec(const Matrix& a, std::span<const double> x) {
    require(static_cast<int>(x.size()) == a.rows(), "mul_tvec: length mismatch");
    std::vector<double> y(a.cols());
    for (int j = 0; j < a.cols(); ++j) y[j] = dot(a.col(j), x);
    return y;
}

Matrix transpose(const Matrix& a) {
    Matrix t(a.cols(), a.rows());
    for (int j = 0; j < a.cols(); ++j)
        for (int i = 0; i < a.rows(); ++i) t(j, i) = a(i, j);
    return t;
}

Matrix add(const Matrix& a, const Matrix& b) {
    require(a.rows() == b.rows() && a.cols() == b.cols(), "add: shape mismatch");
    Matrix c = a;
    for (std::size_t i = 0; i < c.data().size(); ++i) c.data()[i] += b.data()[i];
    return c;
}

Matrix sub(const Matrix& a, const Matrix& b) {
    require(a.rows() == b.rows() && a.cols() == b.cols(), "sub: shape mismatch");
    Matrix c = a;
    for (std::size_t i = 0; i < c.data().size(); ++i) c.data()[i] -= b.data()[i];
    return c;
}

void add_scaled_identity(Matrix& a, double s) {
    require(a.rows() == a.cols(), "add_scaled_identity: matrix must be square");
    for (int i = 0; i < a.rows(); ++i) a(i, i) += s;
}

double norm1(const Matrix& a) {
    double best = 0.0;
    for (int j = 0; j < a.cols(); ++j) {
        double s = 0.0;
        for (double v : a.col(j)) s += std::abs(v);
        if (s > best) best = s;
    }
    return best;
}

double max_abs(const Matrix& a) {
    double best = 0.0;
    for (double v : a.data())
        if (std::abs(v) > best) best = std::abs(v);
    return best;
}

} // namespace framedual
