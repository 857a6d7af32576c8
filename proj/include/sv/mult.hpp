#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "sv/groebner.hpp"
#include "sv/rng.hpp"

namespace sv {

// Affine inputs: the ring variables are affine coordinates and the
// distinguished point is always the origin (callers translate beforehand).
template <class K> using AffineIdeal = Ideal<K>;

// The local Segre numbers e_kappa..e_n of an ideal at the origin, with the
// local codimension kappa and the verdict of the vanishing-below-kappa check.
struct SegreNumbers {
    int n = 0;
    int kappa = 0;
    std::vector<long long> e;  // indexed kappa..n
    bool zeros_below_kappa_ok = true;
    unsigned long long seed = 0;
    int retries = 0;
};

namespace detail {

template <class K> bool vanishes_at_origin(const Polynomial<K>& p) {
    for (const auto& t : p.terms())
        if (t.mono.is_unit()) return false;
    return true;
}

// Linear independence of the linear parts of a set of forms, by Gaussian
// elimination on their coefficient matrix.
template <class K>
bool independent_linear_parts(const std::vector<Polynomial<K>>& forms) {
    if (forms.empty()) return true;
    const RingPtr<K>& ring = forms.front().ring();
    int n = ring->nvars();
    std::vector<std::vector<K>> rows;
    for (const auto& f : forms) {
        std::vector<K> row(static_cast<std::size_t>(n), ring->one().zero_like());
        for (const auto& t : f.terms()) {
            if (t.mono.degree() != 1) continue;
            for (int i = 0; i < n; ++i)
                if (t.mono.e[static_cast<std::size_t>(i)] == 1)
                    row[static_cast<std::size_t>(i)] = t.coeff;
        }
        rows.push_back(std::move(row));
    }
    std::size_t rank = 0;
    for (int col = 0; col < n && rank < rows.size(); ++col) {
        std::size_t pivot = rank;
        while (pivot < rows.size() && rows[pivot][static_cast<std::size_t>(col)].is_zero())
            ++pivot;
        if (pivot == rows.size()) continue;
        std::swap(rows[rank], rows[pivot]);
        K inv = rows[rank][static_cast<std::size_t>(col)].inverse();
        for (std::size_t r = rank + 1; r < rows.size(); ++r) {
            K factor = rows[r][static_cast<std::size_t>(col)] * inv;
            if (factor.is_zero()) continue;
            for (int c = col; c < n; ++c)
                rows[r][static_cast<std::size_t>(c)] =
                    rows[r][static_cast<std::size_t>(c)] -
                    factor * rows[rank][static_cast<std::size_t>(c)];
        }
        ++rank;
    }
    return rank == rows.size();
}

template <class K>
std::vector<Polynomial<K>> independent_slicing_forms(const RingPtr<K>& ring,
                                                     int count,
                                                     RandomSource& rng) {
    for (int attempt = 0; attempt < 20; ++attempt) {
        std::vector<Polynomial<K>> forms;
        forms.reserve(static_cast<std::size_t>(count));
        for (int i = 0; i < count; ++i)
            forms.push_back(random_linear_form(ring, rng, true));
        if (independent_linear_parts(forms)) return forms;
    }
    throw GenericityError("failed to sample independent linear forms");
}

} // namespace detail

// Length of the m-primary part of K[x]/I at the origin: stabilize I + m^N
// (N doubling from 2, cap 64; the colengths are finite and non-decreasing,
// and two equal successive values force equal ideals), then count standard
// monomials.  Empty germ gives 0; a non-isolated origin gives nullopt.
template <class K>
std::optional<long long> local_length_opt(const Ideal<K>& I) {
    const RingPtr<K>& ring = I.ring();
    std::optional<long long> prev;
    for (int N = 2; N <= 64; N *= 2) {
        std::vector<Polynomial<K>> gens = I.gens();
        for (const auto& mono : monomials_of_degree(ring->nvars(), N))
            gens.push_back(Polynomial<K>::monomial_term(ring, mono, ring->one()));
        Ideal<K> padded(ring, std::move(gens), I.budget());
        std::optional<long long> len = monomial_colength(padded);
        if (!len)
            throw UsageError("internal: padded ideal must have finite colength");
        if (prev && *prev == *len) return len;
        prev = len;
    }
    return std::nullopt;
}

template <class K> long long local_length(const Ideal<K>& I) {
    std::optional<long long> len = local_length_opt(I);
    if (!len)
        throw UsageError("the origin is not an isolated point of the zero set");
    return *len;
}

// Multiplicity of a pure k-dimensional germ at the origin, via k generic
// independent linear slices through the origin followed by a local length.
template <class K>
long long mult_at_origin(const Ideal<K>& I, int k, RandomSource& rng,
                         int* retries = nullptr) {
    const RingPtr<K>& ring = I.ring();
    if (k < 0 || k > ring->nvars())
        throw UsageError("slice count out of range");
    if (I.is_unit_ideal()) return 0;
    for (int attempt = 0; attempt < 5; ++attempt) {
        std::vector<Polynomial<K>> forms =
            detail::independent_slicing_forms(ring, k, rng);
        std::optional<long long> len = local_length_opt(I.plus(forms));
        if (len) return *len;
        if (retries != nullptr) ++*retries;
        if (k == 0) break;  // nothing to resample
    }
    throw GenericityError("generic slicing failed to isolate the origin");
}

// Local dimension of the zero set at the origin: the smallest number of
// generic independent linear slices that isolates the origin.  A finite
// sliced length at k proves dim <= k, so probing upward cannot undershoot.
template <class K> int local_dim(const Ideal<K>& I, RandomSource& rng) {
    const RingPtr<K>& ring = I.ring();
    if (I.is_unit_ideal()) return -1;
    for (int k = 0; k <= ring->nvars(); ++k) {
        int draws = k == 0 ? 1 : 3;
        for (int t = 0; t < draws; ++t) {
            std::vector<Polynomial<K>> forms =
                detail::independent_slicing_forms(ring, k, rng);
            if (local_length_opt(I.plus(forms))) return k;
        }
    }
    throw GenericityError("local dimension probe failed");
}

// Local intersection walk at the origin with scalar generic combinations
// h = sum a_i f_i of the given generators.  Step k splits the slice
// out_{k-1} + (h) into its part inside the zero set (measured by local
// multiplicity in dimension n-k) and the saturated remainder.
template <class K>
SegreNumbers segre_numbers(const AffineIdeal<K>& J, RandomSource& rng) {
    const RingPtr<K>& ring = J.ring();
    const int n = ring->nvars();
    if (J.is_zero_ideal()) throw UsageError("zero ideal has no Segre numbers");
    for (const auto& g : J.gens())
        if (!detail::vanishes_at_origin(g))
            throw UsageError("the origin is not in the zero set");

    SegreNumbers result;
    result.n = n;
    result.seed = rng.seed();
    int ldim = local_dim(J, rng);
    result.kappa = n - ldim;

    const K& one = ring->one();
    std::vector<long long> e(static_cast<std::size_t>(n) + 1, 0);
    Ideal<K> out = J.with_gens({});
    bool germ_alive = true;
    for (int k = 1; k <= n && germ_alive; ++k) {
        if (out.is_unit_ideal()) break;
        bool done = false;
        int zero_draws = 0;
        for (int attempt = 0; attempt < 5 && !done; ++attempt) {
            Polynomial<K> h = Polynomial<K>::zero(ring);
            for (const auto& g : J.gens()) h = h + one.sample_like(rng) * g;
            if (h.is_zero()) {
                if (++zero_draws > 100)
                    throw GenericityError("generator combinations keep vanishing");
                --attempt;
                continue;
            }
            try {
                Ideal<K> total = out.plus(h);
                long long mt = mult_at_origin(total, n - k, rng, &result.retries);
                Ideal<K> next = saturate(total, J);
                long long mo = mult_at_origin(next, n - k, rng, &result.retries);
                if (mt < mo)
                    throw GenericityError("negative local intersection degree");
                e[static_cast<std::size_t>(k)] = mt - mo;
                out = std::move(next);
                if (mo == 0) germ_alive = false;  // nothing local remains
                done = true;
            } catch (const GenericityError&) {
                ++result.retries;
            }
        }
        if (!done)
            throw GenericityError("local walk failed at step " + std::to_string(k));
    }

    for (int k = 1; k < result.kappa; ++k)
        if (e[static_cast<std::size_t>(k)] != 0) result.zeros_below_kappa_ok = false;
    for (int k = result.kappa; k <= n; ++k)
        result.e.push_back(e[static_cast<std::size_t>(k)]);
    return result;
}

// Hilbert-Samuel multiplicity: the top Segre number of an ideal primary to
// the maximal ideal at the origin.
template <class K>
long long hs_multiplicity(const AffineIdeal<K>& J, RandomSource& rng) {
    SegreNumbers s = segre_numbers(J, rng);
    if (s.kappa < s.n)
        throw UsageError("ideal is not primary to the maximal ideal at the origin");
    return s.e.back();
}

} // namespace sv
