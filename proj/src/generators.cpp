#include "framedual/generators.hpp"

#include <algorithm>
#include <cmath>
#include <utility>

#include "framedual/errors.hpp"

namespace framedual {

Frame random_frame(Rng& rng, int dim, int count) {
    const double sigma = 1.0 / std::sqrt(static_cast<double>(count));
    return Frame(rng.gaussian_matrix(dim, count, sigma));
}

Frame random_frame_deficient(Rng& rng, int dim, int count, const ErasureSet& e) {
    if (e.frame_count() != count)
        throw DimensionMismatch("random_frame_deficient: erasure set sized for a different frame");
    const double sigma = 1.0 / std::sqrt(static_cast<double>(count));
    std::vector<double> u = rng.gaussian_vector(dim);
    scale(1.0 / norm2(u), u);

    Matrix m = rng.gaussian_matrix(dim, count, sigma);
    for (int idx : e.complement0()) {
        auto col = m.col(idx);
        axpy(-dot(col, u), u, col); // survivors lose their u-component
    }
    // make sure the full family still spans: give the first erased column a
    // unit u-component
    auto first = m.col(e.erased0().front());
    axpy(1.0 - dot(first, u), u, first);
    return Frame(std::move(m));
}

Frame random_dual(Rng& rng, const Frame& x, const Frame& y) {
    const double sigma = 1.0 / std::sqrt(static_cast<double>(x.count()));
    BesselPerturbation q(rng.gaussian_matrix(x.dim(), x.count(), sigma));
    return dual_from_perturbation(x, y, q);
}

Frame dual_with_unit_pairing(Rng& rng, const Frame& x, const Frame& y, int index_one_based) {
    if (index_one_based < 1 || index_one_based > x.count())
        throw DimensionMismatch("dual_with_unit_pairing: index out of range");
    const int idx = index_one_based - 1;
    auto xi = x.vector(idx);
    const double xn = norm2(xi);
    if (xn == 0.0) throw Error("dual_with_unit_pairing: paired frame vector is zero");

    // perturbation supported on the single index, normalized so <q, x_i> = 1;
    // then <z_i, x_i> = <y_i, x_i> + (1 - <y_i, x_i>) <q, x_i> = 1 exactly
    std::vector<double> w;
    double pairing = 0.0;
    for (int attempt = 0; attempt < 64; ++attempt) {
        w = rng.gaussian_vector(x.dim());
        pairing = dot(w, xi);
        if (std::abs(pairing) > 0.1 * norm2(w) * xn) break;
    }
    scale(1.0 / pairing, w);

    Matrix q(x.dim(), x.count());
    auto col = q.col(idx);
    std::copy(w.begin(), w.end(), col.begin());
    return dual_from_perturbation(x, y, BesselPerturbation(std::move(q)));
}

ErasureSet random_erasure_set(Rng& rng, int frame_count, int k) {
    std::vector<int> pool(frame_count);
    for (int i = 0; i < frame_count; ++i) pool[i] = i + 1;
    // partial Fisher-Yates
    for (int i = 0; i < k; ++i) {
        const int j = rng.uniform_int(i, frame_count - 1);
        std::swap(pool[i], pool[j]);
    }
    pool.resize(k);
    return {std::move(pool), frame_count};
}

RandomTriple random_statement_triple(Rng& rng, int max_dim) {
    const int r = rng.uniform_int(4, max_dim);
    const int n = rng.uniform_int(r + 1, 3 * r);
    // allow k past n - r so some triples fail the spanning condition outright
    const int k = rng.uniform_int(1, std::min(n - 1, r + 2));
    ErasureSet e = random_erasure_set(rng, n, k);

    const int kind = rng.uniform_int(0, 9);
    Frame x = (kind == 4 || kind == 5) ? random_frame_deficient(rng, r, n, e)
                                       : random_frame(rng, r, n);
    const Frame y = canonical_dual_unchecked(x);

    switch (kind) {
        case 6:
            return {x, dual_with_unit_pairing(rng, x, y, e.indices().front()), e};
        case 7:
            return {x, dual_from_perturbation(x, y, perturbation_supported_on_E(x, e, rng.next_u64())), e};
        case 8:
            return {x, dual_from_perturbation(x, y, perturbation_orthogonal_class(x, e, rng.next_u64())), e};
        case 9:
            return {x, y, e};
        default:
            return {x, random_dual(rng, x, y), e};
    }
}

} // namespace framedual
