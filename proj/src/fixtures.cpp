#include "framedual/fixtures.hpp"

#include <cmath>

#include "framedual/errors.hpp"

namespace framedual::fixtures {

namespace {

// columns: `head` scalar multiples of e1, then e2, ..., e_r
Matrix e1_block_then_basis(int r, std::span<const double> head) {
    if (r < 2) throw DimensionMismatch("fixture: dimension must be at least 2");
    const int n = static_cast<int>(head.size()) + (r - 1);
    Matrix m(r, n);
    for (std::size_t j = 0; j < head.size(); ++j) m(0, static_cast<int>(j)) = head[j];
    for (int i = 1; i < r; ++i) m(i, static_cast<int>(head.size()) + i - 1) = 1.0;
    return m;
}

} // namespace

Frame mercedes_frame() {
    const double s = std::sqrt(3.0) / 2.0;
    Matrix m(2, 3);
    m(0, 0) = 1.0;
    m(0, 1) = -0.5;
    m(1, 1) = s;
    m(0, 2) = -0.5;
    m(1, 2) = -s;
    return Frame(std::move(m));
}

Frame triple_repeat_frame(int r) {
    const double head[] = {1.0, 1.0, 1.0};
    return Frame(e1_block_then_basis(r, head));
}

Frame half_zero_dual(int r) {
    const double head[] = {0.5, 0.0, 0.5};
    return Frame(e1_block_then_basis(r, head));
}

Frame signed_half_dual(int r) {
    const double head[] = {1.0, -0.5, 0.5};
    return Frame(e1_block_then_basis(r, head));
}

Frame block_repeat_frame(int r) {
    const double head[] = {1, 1, 1, 1, 1, 1, 1, 1, 1, 1, 1};
    return Frame(e1_block_then_basis(r, head));
}

Frame early_stop_dual(int r) {
    const double head[] = {0.25, 0.25, 0.5, 0, 0, 0, 0, 0, 0, 0, 0};
    return Frame(e1_block_then_basis(r, head));
}

} // namespace framedual::fixtures
