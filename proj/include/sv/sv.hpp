#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "sv/scheme.hpp"

namespace sv {

struct MassCheck {
    long long lhs = 0;
    long long rhs = 0;
    bool ok = false;
};

// Degree-level outcome of one generic-section walk: the degrees of the cycles
// v_0..v_{mu_dim} split off inside the zero scheme, the degree of the cycle
// surviving outside at the end, and an audit trail of the out-ideals.
struct SVResult {
    int n = 0;        // ambient projective dimension
    int d = 1;        // twist of the section family
    int mu_dim = 0;   // dimension of the input cycle mu
    int z_dim = -1;   // dimension of the zero scheme of the family
    long long mu_degree = 1;
    std::vector<long long> v;  // indexed by codimension k = 0..mu_dim
    long long residual = 0;
    std::vector<std::pair<int, long long>> out_trace;  // (dim, degree) of out_k
    unsigned long long seed = 0;
    int retries = 0;
};

inline long long power_ll(long long base, int exp) {
    long long r = 1;
    for (int i = 0; i < exp; ++i) r *= base;
    return r;
}

// Exact balance d^{mu_dim} * deg(mu) = sum_k d^{mu_dim-k} * v_k + residual:
// the left side is the L-degree of the input cycle, the right side the
// L-degrees of the pieces the walk split off (deg_L of a dimension-j cycle of
// ordinary degree e is d^j * e).
inline MassCheck sv_mass_check(const SVResult& r) {
    long long lhs = power_ll(r.d, r.mu_dim) * r.mu_degree;
    long long rhs = r.residual;
    for (int k = 0; k <= r.mu_dim && k < static_cast<int>(r.v.size()); ++k)
        rhs += power_ll(r.d, r.mu_dim - k) * r.v[k];
    return {lhs, rhs, lhs == rhs};
}

// One generic-section intersection walk on the cycle mu (default P^n) against the zero
// scheme Z of the family F.  Each step intersects the current outside cycle
// with a generic section of F, splits the result into the part inside Z
// (recorded by degree in v) and the saturated part outside (carried forward).
// The mass balance is enforced before returning.
template <class K>
SVResult sv_run(const SectionFamily<K>& F, const ProjScheme<K>& mu,
                RandomSource& rng) {
    const ProjScheme<K>& Z = F.scheme;
    if (Z.n != mu.n) throw UsageError("ambient dimensions differ");
    if (mu.is_empty()) throw UsageError("empty input cycle");

    SVResult r;
    r.n = mu.n;
    r.d = F.d;
    r.mu_dim = mu.dim();
    r.z_dim = Z.dim();
    r.mu_degree = mu.degree();
    r.v.assign(static_cast<std::size_t>(r.mu_dim) + 1, 0);
    r.seed = rng.seed();

    auto finish = [&](SVResult res) {
        MassCheck mc = sv_mass_check(res);
        if (!mc.ok)
            throw GenericityError("mass balance violated (lhs " +
                                  std::to_string(mc.lhs) + ", rhs " +
                                  std::to_string(mc.rhs) + ")");
        return res;
    };

    // The sections vanish identically on mu: the whole cycle is the inside
    // part v_0 and the walk never starts.
    if (mu.ideal.contains_ideal(Z.ideal)) {
        r.v[0] = r.mu_degree;
        r.out_trace.emplace_back(-1, 0);
        return finish(std::move(r));
    }

    Ideal<K> out = saturate(mu.ideal, Z.ideal);
    HilbertData cur = hilbert(out);
    if (cur.dim < 0) {
        // support of mu inside Z even though the scheme containment failed
        r.v[0] = r.mu_degree;
        r.out_trace.emplace_back(-1, 0);
        return finish(std::move(r));
    }
    if (cur.dim != r.mu_dim)
        throw UsageError(
            "mixed-dimension input cycle: top-dimensional bookkeeping of the "
            "part inside the zero scheme is not defined");
    r.v[0] = r.mu_degree - cur.degree;
    if (r.v[0] < 0) throw GenericityError("negative inside degree at step 0");
    r.out_trace.emplace_back(cur.dim, cur.degree);

    Ideal<K> irr = irrelevant_ideal(mu.ideal.ring(), mu.ideal.budget());
    int cur_dim = cur.dim;
    long long cur_deg = cur.degree;
    for (int k = 1; k <= r.mu_dim; ++k) {
        Ideal<K> total;
        bool dropped = false;
        for (int attempt = 0; attempt < 5 && !dropped; ++attempt) {
            Polynomial<K> h = generic_section(F, rng);
            total = saturate(out.plus(h), irr);
            if (hilbert(total).dim == cur_dim - 1) {
                dropped = true;
            } else {
                ++r.retries;
            }
        }
        if (!dropped)
            throw GenericityError("dimension failed to drop at step " +
                                  std::to_string(k));
        Ideal<K> next = saturate(total, Z.ideal);
        HilbertData nhd = hilbert(next);
        r.out_trace.emplace_back(nhd.dim, nhd.degree);
        if (nhd.dim == cur_dim - 1) {
            r.v[static_cast<std::size_t>(k)] = r.d * cur_deg - nhd.degree;
            if (r.v[static_cast<std::size_t>(k)] < 0)
                throw GenericityError("negative inside degree at step " +
                                      std::to_string(k));
            out = std::move(next);
            cur_dim = nhd.dim;
            cur_deg = nhd.degree;
        } else {
            // everything of the expected dimension landed inside Z; what
            // remains (if anything) is lower-dimensional and carries no
            // cycle class, so the outside cycle is exhausted
            r.v[static_cast<std::size_t>(k)] = r.d * cur_deg;
            cur_dim = -1;
            break;
        }
    }
    if (cur_dim == 0) r.residual = cur_deg;
    return finish(std::move(r));
}

template <class K> ProjScheme<K> full_space(const RingPtr<K>& ring, Budget budget = {}) {
    return make_scheme(Ideal<K>(ring, {}, budget));
}

// Equalizes J's generators and runs one walk on mu = P^n.
template <class K>
SVResult sv_single(const Ideal<K>& J, unsigned long long seed,
                   std::optional<int> twist = std::nullopt) {
    RandomSource rng(seed);
    int retries = 0;
    SectionFamily<K> F = equalize_degrees(J, rng, twist, &retries);
    ProjScheme<K> mu = full_space(J.ring(), J.budget());
    SVResult r = sv_run(F, mu, rng);
    r.retries += retries;
    r.seed = seed;
    return r;
}

// Repeats the walk with independently derived randomness and demands
// consensus on the degree data; disagreement is a genericity anomaly.
template <class K>
SVResult sv_repeat(const Ideal<K>& J, int trials, unsigned long long base_seed,
                   std::optional<int> twist = std::nullopt) {
    if (trials < 2) throw UsageError("consensus needs at least 2 trials");
    RandomSource base(base_seed);
    ProjScheme<K> mu = full_space(J.ring(), J.budget());
    std::optional<SVResult> agreed;
    for (int i = 0; i < trials; ++i) {
        RandomSource trial_rng = base.derived(static_cast<std::uint64_t>(i));
        int retries = 0;
        SectionFamily<K> F = equalize_degrees(J, trial_rng, twist, &retries);
        SVResult r = sv_run(F, mu, trial_rng);
        r.retries += retries;
        if (!agreed) {
            r.seed = base_seed;
            agreed = std::move(r);
        } else if (r.v != agreed->v || r.residual != agreed->residual) {
            throw GenericityError("trial " + std::to_string(i) +
                                  " disagrees with trial 0 on the degree data");
        } else {
            agreed->retries += r.retries;
        }
    }
    return *agreed;
}

} // namespace sv
