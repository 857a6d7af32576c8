#pragma once

#include <optional>
#include <utility>
#include <vector>

#include "sv/groebner.hpp"
#include "sv/rng.hpp"

namespace sv {

template <class K>
Ideal<K> irrelevant_ideal(const RingPtr<K>& ring, const Budget& budget = {}) {
    std::vector<Polynomial<K>> gens;
    gens.reserve(static_cast<std::size_t>(ring->nvars()));
    for (int i = 0; i < ring->nvars(); ++i)
        gens.push_back(Polynomial<K>::variable(ring, i));
    return Ideal<K>(ring, std::move(gens), budget);
}

// A projective scheme in P^n as a homogeneous ideal saturated with respect to
// the irrelevant ideal, with its dimension/degree data cached.  The empty
// scheme is the unit ideal with dim -1, degree 0.
template <class K> struct ProjScheme {
    int n = 0;        // ambient projective dimension (nvars - 1)
    Ideal<K> ideal;   // saturated
    HilbertData hd{-1, 0};

    bool is_empty() const { return hd.dim < 0; }
    int dim() const { return hd.dim; }
    long long degree() const { return hd.degree; }
};

template <class K> ProjScheme<K> make_scheme(const Ideal<K>& I) {
    for (const auto& g : I.gens())
        if (!g.is_homogeneous())
            throw UsageError("projective scheme: non-homogeneous generator");
    Ideal<K> sat = I.is_zero_ideal()
                       ? I
                       : saturate(I, irrelevant_ideal(I.ring(), I.budget()));
    HilbertData hd = hilbert(sat);
    return {I.ring()->nvars() - 1, std::move(sat), hd};
}

// Ideal-inclusion containment: true iff ideal(A) subseteq ideal(B), i.e.
// B subseteq A as schemes.
template <class K>
bool contains(const ProjScheme<K>& A, const ProjScheme<K>& B) {
    return B.ideal.contains_ideal(A.ideal);
}

// Generators of (the degree-d truncation of) an ideal, all of one degree d,
// plus the saturated zero scheme they cut out.
template <class K> struct SectionFamily {
    int d = 1;
    std::vector<Polynomial<K>> forms;
    ProjScheme<K> scheme;  // saturated zero scheme, shared with the source ideal
};

// Replaces mixed-degree generators by (ambient + 2) random coefficient
// combinations of monomial multiples landing in the degree-d graded piece.
// Soundness is checked on every call: the family must cut out the same
// saturated scheme.  `twist` overrides d upward; `retries` (optional)
// accumulates the number of resampled attempts.
template <class K>
SectionFamily<K> equalize_degrees(const Ideal<K>& J, RandomSource& rng,
                                  std::optional<int> twist = std::nullopt,
                                  int* retries = nullptr) {
    if (J.is_zero_ideal())
        throw UsageError("degree equalization requires a nonzero ideal");
    const RingPtr<K>& ring = J.ring();
    int dmax = 0;
    for (const auto& g : J.gens()) {
        if (!g.is_homogeneous())
            throw UsageError("degree equalization: non-homogeneous generator");
        dmax = std::max(dmax, g.total_degree());
    }
    int d = twist.value_or(dmax);
    if (d < dmax)
        throw UsageError("twist override is below the maximal generator degree");

    ProjScheme<K> target = make_scheme(J);
    if (target.is_empty())
        throw UsageError("the ideal defines the empty scheme");

    std::vector<Polynomial<K>> products;
    for (const auto& g : J.gens()) {
        for (const auto& mono : monomials_of_degree(ring->nvars(), d - g.total_degree()))
            products.push_back(g.times_term(ring->one(), mono));
    }

    const int family_size = (ring->nvars() - 1) + 2;  // ambient + 2
    const K& one = ring->one();
    for (int attempt = 0; attempt < 5; ++attempt) {
        std::vector<Polynomial<K>> forms;
        forms.reserve(static_cast<std::size_t>(family_size));
        int zero_draws = 0;
        for (int i = 0; i < family_size; ++i) {
            Polynomial<K> f = Polynomial<K>::zero(ring);
            for (const auto& p : products) f = f + one.sample_like(rng) * p;
            if (f.is_zero()) {
                if (++zero_draws > 100)
                    throw GenericityError("family combinations keep vanishing");
                --i;
                continue;
            }
            forms.push_back(std::move(f));
        }
        ProjScheme<K> cut = make_scheme(Ideal<K>(ring, forms, J.budget()));
        if (!cut.is_empty() && cut.ideal.equals(target.ideal))
            return {d, std::move(forms), std::move(target)};
        if (retries != nullptr) ++*retries;
    }
    throw GenericityError("degree equalization failed its saturation check");
}

// A random nonzero combination h = sum a_i f_i of the family's forms.
template <class K>
Polynomial<K> generic_section(const SectionFamily<K>& F, RandomSource& rng) {
    if (F.forms.empty()) throw UsageError("empty section family");
    const K& one = F.forms.front().ring()->one();
    for (int draw = 0; draw < 100; ++draw) {
        Polynomial<K> h = Polynomial<K>::zero(F.forms.front().ring());
        for (const auto& f : F.forms) h = h + one.sample_like(rng) * f;
        if (!h.is_zero()) return h;
    }
    throw GenericityError("section combinations keep vanishing");
}

} // namespace sv
