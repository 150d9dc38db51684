#pragma once

#include "framedual/frame.hpp"

namespace framedual::fixtures {

/// Three unit vectors at 120 degrees in R^2; the smallest tight frame that
/// is not a basis.
Frame mercedes_frame();

/// (e1, e1, e1, e2, ..., e_r) in R^r; N = r + 2.
Frame triple_repeat_frame(int r);

/// (e1/2, 0, e1/2, e2, ..., e_r): a dual of triple_repeat_frame with a zero
/// column; erasing both nonzero e1-copies breaks its spanning property.
Frame half_zero_dual(int r);

/// (e1, -e1/2, e1/2, e2, ..., e_r): a dual of triple_repeat_frame whose
/// first vector pairs to exactly 1 against x_1, which defeats the rank-one
/// iteration at step 1 while the k-by-k system stays solvable for E={1,2}.
Frame signed_half_dual(int r);

/// (e1 x 11, e2, ..., e_r) in R^r; N = r + 10. Block-repeated frame used by
/// the "test9" demo.
Frame block_repeat_frame(int r);

/// (e1/4, e1/4, e1/2, 0 x 8, e2, ..., e_r): a dual of block_repeat_frame
/// crafted so that with E = {1,2,3,4} the rank-one iteration stops exactly
/// at step 3 and the survivors of the dual no longer span.
Frame early_stop_dual(int r);

} // namespace framedual::fixtures
