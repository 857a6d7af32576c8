#pragma once

#include <gmpxx.h>

#include <algorithm>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "sv/errors.hpp"
#include "sv/polynomial.hpp"

namespace sv {

// Work limits for basis computations.  Exceeding either aborts with a
// structured budget error rather than spinning.
struct Budget {
    long long max_pairs = 500000;
    long long max_basis = 4000;
};

// An ideal with lazily computed, cached reduced Groebner bases (one per
// monomial order).  Value semantics: copying copies the cache.  Instances are
// not shared across threads; each computation confines its scratch state to
// the owning object.
template <class K> class Ideal {
public:
    Ideal() = default;
    Ideal(RingPtr<K> ring, std::vector<Polynomial<K>> gens, Budget budget = {})
        : ring_(std::move(ring)), budget_(budget) {
        gens_.reserve(gens.size());
        for (auto& g : gens) {
            if (g.is_zero()) continue;
            if (g.ring().get() != ring_.get() && !g.ring()->compatible(*ring_))
                throw UsageError("generator from a different ring");
            gens_.push_back(std::move(g));
        }
    }

    const RingPtr<K>& ring() const { return ring_; }
    const std::vector<Polynomial<K>>& gens() const { return gens_; }
    const Budget& budget() const { return budget_; }
    void set_budget(const Budget& b) { budget_ = b; }

    bool is_zero_ideal() const { return gens_.empty(); }

    const std::vector<Polynomial<K>>& groebner_basis() const {
        return groebner_basis(ring_->order());
    }
    const std::vector<Polynomial<K>>& groebner_basis(const MonomialOrder& ord) const;

    bool is_unit_ideal() const {
        if (gens_.empty()) return false;
        for (const auto& g : gens_) // cheap pre-check: a nonzero constant generator
            if (g.is_constant() && !g.is_zero()) return true;
        const auto& gb = groebner_basis();
        return gb.size() == 1 && gb[0].is_constant();
    }

    bool contains(const Polynomial<K>& f) const;
    bool contains_ideal(const Ideal& o) const {
        for (const auto& g : o.gens_)
            if (!contains(g)) return false;
        return true;
    }
    bool equals(const Ideal& o) const {
        return contains_ideal(o) && o.contains_ideal(*this);
    }

    Ideal with_gens(std::vector<Polynomial<K>> gens) const {
        return Ideal(ring_, std::move(gens), budget_);
    }
    Ideal plus(const Polynomial<K>& f) const {
        auto gens = gens_;
        gens.push_back(f);
        return Ideal(ring_, std::move(gens), budget_);
    }
    Ideal plus(const std::vector<Polynomial<K>>& fs) const {
        auto gens = gens_;
        gens.insert(gens.end(), fs.begin(), fs.end());
        return Ideal(ring_, std::move(gens), budget_);
    }

private:
    RingPtr<K> ring_;
    std::vector<Polynomial<K>> gens_;
    Budget budget_;
    mutable std::map<MonomialOrder, std::vector<Polynomial<K>>> cache_;
};

namespace detail {

// Re-sorts a polynomial's term list into a ring with a different default
// order (same names, same field).
template <class K>
Polynomial<K> reorder(const Polynomial<K>& p, const RingPtr<K>& target) {
    if (p.ring()->order() == target->order()) return p;
    return Polynomial<K>::from_terms(target, p.terms());
}

// Division/Buchberger engine pinned to one monomial order.  It works in a
// ring whose default order is the active one, so leading terms are always
// terms().front().
template <class K> class Engine {
public:
    Engine(RingPtr<K> work_ring, Budget budget)
        : ring_(std::move(work_ring)), budget_(budget) {}

    const RingPtr<K>& ring() const { return ring_; }

    // Full normal form: every term of the result is reducible by no divisor.
    Polynomial<K> normal_form(const Polynomial<K>& f,
                              const std::vector<Polynomial<K>>& divisors) const {
        Polynomial<K> work = f;
        std::vector<Term<K>> remainder;
        while (!work.is_zero()) {
            const Term<K>& lt = work.terms().front();
            const Polynomial<K>* hit = nullptr;
            for (const auto& g : divisors) {
                if (g.terms().front().mono.divides(lt.mono)) { hit = &g; break; }
            }
            if (hit == nullptr) {
                remainder.push_back(lt);
                work = work - Polynomial<K>::monomial_term(ring_, lt.mono, lt.coeff);
            } else {
                const Term<K>& glt = hit->terms().front();
                K c = lt.coeff / glt.coeff;
                Monomial m = lt.mono.divided_by(glt.mono);
                work = work - hit->times_term(c, m);
            }
        }
        return Polynomial<K>::from_terms(ring_, std::move(remainder));
    }

    // Division by a single divisor with the quotient tracked; the remainder
    // must vanish (used to divide elements of I cap (g) by g).
    Polynomial<K> exact_divide(const Polynomial<K>& f, const Polynomial<K>& g) const {
        Polynomial<K> work = f;
        Polynomial<K> quotient = Polynomial<K>::zero(ring_);
        const Term<K>& glt = g.terms().front();
        while (!work.is_zero()) {
            const Term<K>& lt = work.terms().front();
            if (!glt.mono.divides(lt.mono))
                throw UsageError("internal: division expected to be exact");
            K c = lt.coeff / glt.coeff;
            Monomial m = lt.mono.divided_by(glt.mono);
            work = work - g.times_term(c, m);
            quotient = quotient + Polynomial<K>::monomial_term(ring_, m, c);
        }
        return quotient;
    }

    // Buchberger with the normal selection strategy and both classical pair
    // criteria.  Returns the reduced basis: minimal, tail-reduced, monic,
    // sorted ascending by leading monomial.
    std::vector<Polynomial<K>> reduced_basis(std::vector<Polynomial<K>> gens) const {
        const MonomialOrder& ord = ring_->order();
        std::vector<Polynomial<K>> basis;
        long long pairs_done = 0;

        // seed with interreduced nonzero generators, smallest leading terms first
        std::sort(gens.begin(), gens.end(),
                  [&](const Polynomial<K>& a, const Polynomial<K>& b) {
                      if (a.is_zero() || b.is_zero()) return b.is_zero() && !a.is_zero();
                      return ord.cmp(a.terms().front().mono, b.terms().front().mono) < 0;
                  });
        for (const auto& g : gens) {
            if (g.is_zero()) continue;
            Polynomial<K> r = normal_form(g, basis);
            if (r.is_zero()) continue;
            if (r.is_constant()) return unit_basis();
            basis.push_back(r.monic());
        }
        if (basis.empty()) return {};

        // pair queue keyed for the normal strategy: smallest lcm first
        struct Pair {
            Monomial lcm;
            int deg;
            int i, j;
        };
        auto pair_less = [&](const Pair& a, const Pair& b) {
            if (a.deg != b.deg) return a.deg < b.deg;
            int c = ord.cmp(a.lcm, b.lcm);
            if (c != 0) return c < 0;
            if (a.j != b.j) return a.j < b.j;
            return a.i < b.i;
        };
        std::vector<Pair> queue;
        auto push_pairs = [&](int j) {
            for (int i = 0; i < j; ++i) {
                // S-polynomials of two monomials cancel identically
                if (basis[static_cast<std::size_t>(i)].num_terms() == 1 &&
                    basis[static_cast<std::size_t>(j)].num_terms() == 1)
                    continue;
                Monomial l = Monomial::lcm(basis[static_cast<std::size_t>(i)].terms().front().mono,
                                           basis[static_cast<std::size_t>(j)].terms().front().mono);
                queue.push_back({l, l.degree(), i, j});
            }
            std::sort(queue.begin(), queue.end(), pair_less);
        };
        std::set<std::pair<int, int>> done;
        auto is_done = [&](int a, int b) {
            return done.count({std::min(a, b), std::max(a, b)}) != 0;
        };
        for (int j = 1; j < static_cast<int>(basis.size()); ++j) push_pairs(j);

        while (!queue.empty()) {
            Pair pr = queue.front();
            queue.erase(queue.begin());
            done.insert({pr.i, pr.j});
            if (++pairs_done > budget_.max_pairs)
                throw BudgetError("pair budget exceeded", pairs_done,
                                  static_cast<long long>(basis.size()));

            const Polynomial<K>& f = basis[static_cast<std::size_t>(pr.i)];
            const Polynomial<K>& g = basis[static_cast<std::size_t>(pr.j)];
            const Monomial& mf = f.terms().front().mono;
            const Monomial& mg = g.terms().front().mono;
            // first criterion: coprime leading terms
            if (pr.lcm == mf * mg) continue;
            // second (chain) criterion
            bool skip = false;
            for (int k = 0; k < static_cast<int>(basis.size()); ++k) {
                if (k == pr.i || k == pr.j) continue;
                if (!basis[static_cast<std::size_t>(k)].terms().front().mono.divides(pr.lcm))
                    continue;
                if (is_done(pr.i, k) && is_done(pr.j, k)) { skip = true; break; }
            }
            if (skip) continue;

            // S-polynomial, fully reduced
            K cf = f.terms().front().coeff;
            K cg = g.terms().front().coeff;
            Polynomial<K> s = f.times_term(cg, pr.lcm.divided_by(mf)) -
                              g.times_term(cf, pr.lcm.divided_by(mg));
            Polynomial<K> r = normal_form(s, basis);
            if (r.is_zero()) continue;
            if (r.is_constant()) return unit_basis();
            basis.push_back(r.monic());
            if (static_cast<long long>(basis.size()) > budget_.max_basis)
                throw BudgetError("basis budget exceeded", pairs_done,
                                  static_cast<long long>(basis.size()));
            push_pairs(static_cast<int>(basis.size()) - 1);
        }

        return reduce_final(std::move(basis));
    }

private:
    std::vector<Polynomial<K>> unit_basis() const {
        return {Polynomial<K>::constant(ring_, ring_->one())};
    }

    std::vector<Polynomial<K>> reduce_final(std::vector<Polynomial<K>> basis) const {
        const MonomialOrder& ord = ring_->order();
        // minimal: drop elements whose leading term another leading term divides
        std::vector<Polynomial<K>> minimal;
        for (std::size_t i = 0; i < basis.size(); ++i) {
            const Monomial& mi = basis[i].terms().front().mono;
            bool redundant = false;
            for (std::size_t j = 0; j < basis.size(); ++j) {
                if (i == j) continue;
                const Monomial& mj = basis[j].terms().front().mono;
                if (mj.divides(mi) && (mj != mi || j < i)) { redundant = true; break; }
            }
            if (!redundant) minimal.push_back(basis[i]);
        }
        // tail-reduce each element against the rest, make monic
        std::vector<Polynomial<K>> out;
        for (std::size_t i = 0; i < minimal.size(); ++i) {
            std::vector<Polynomial<K>> others;
            for (std::size_t j = 0; j < minimal.size(); ++j)
                if (j != i) others.push_back(minimal[j]);
            Polynomial<K> r = normal_form(minimal[i], others);
            if (!r.is_zero()) out.push_back(r.monic());
        }
        std::sort(out.begin(), out.end(),
                  [&](const Polynomial<K>& a, const Polynomial<K>& b) {
                      return ord.cmp(a.terms().front().mono, b.terms().front().mono) < 0;
                  });
        return out;
    }

    RingPtr<K> ring_;
    Budget budget_;
};

template <class K>
RingPtr<K> ring_with_order(const RingPtr<K>& ring, const MonomialOrder& ord) {
    if (ring->order() == ord) return ring;
    return make_ring<K>(ring->names(), ord, ring->one());
}

} // namespace detail

template <class K>
const std::vector<Polynomial<K>>&
Ideal<K>::groebner_basis(const MonomialOrder& ord) const {
    auto it = cache_.find(ord);
    if (it != cache_.end()) return it->second;
    RingPtr<K> work = detail::ring_with_order(ring_, ord);
    detail::Engine<K> engine(work, budget_);
    std::vector<Polynomial<K>> work_gens;
    work_gens.reserve(gens_.size());
    for (const auto& g : gens_) work_gens.push_back(detail::reorder(g, work));
    std::vector<Polynomial<K>> basis = engine.reduced_basis(std::move(work_gens));
    std::vector<Polynomial<K>> canonical;
    canonical.reserve(basis.size());
    for (const auto& b : basis) canonical.push_back(detail::reorder(b, ring_));
    return cache_.emplace(ord, std::move(canonical)).first->second;
}

// Normal form of f modulo the reduced basis of I under `ord`.
template <class K>
Polynomial<K> normal_form(const Polynomial<K>& f, const Ideal<K>& I,
                          std::optional<MonomialOrder> ord = std::nullopt) {
    MonomialOrder o = ord.value_or(I.ring()->order());
    const auto& gb = I.groebner_basis(o);
    if (gb.empty()) return f;
    RingPtr<K> work = detail::ring_with_order(I.ring(), o);
    detail::Engine<K> engine(work, I.budget());
    std::vector<Polynomial<K>> divisors;
    divisors.reserve(gb.size());
    for (const auto& g : gb) divisors.push_back(detail::reorder(g, work));
    return detail::reorder(engine.normal_form(detail::reorder(f, work), divisors),
                           I.ring());
}

template <class K> bool Ideal<K>::contains(const Polynomial<K>& f) const {
    if (f.is_zero()) return true;
    if (gens_.empty()) return false;
    return normal_form(f, *this).is_zero();
}

namespace detail {

// Splits a polynomial into its homogeneous components (each component of an
// element of a homogeneous ideal lies in the ideal).
template <class K>
std::vector<Polynomial<K>> homogeneous_components(const Polynomial<K>& p) {
    std::map<int, std::vector<Term<K>>> buckets;
    for (const auto& t : p.terms()) buckets[t.mono.degree()].push_back(t);
    std::vector<Polynomial<K>> out;
    for (auto& [deg, terms] : buckets)
        out.push_back(Polynomial<K>::from_terms(p.ring(), std::move(terms)));
    return out;
}

template <class K> bool all_homogeneous(const Ideal<K>& I) {
    for (const auto& g : I.gens())
        if (!g.is_homogeneous()) return false;
    return true;
}

} // namespace detail

// I cap J by the auxiliary-variable trick: eliminate t from t*I + (1-t)*J
// under a block order.  For homogeneous inputs the resulting generators are
// split into homogeneous components so downstream Hilbert calls stay legal.
template <class K> Ideal<K> intersect(const Ideal<K>& I, const Ideal<K>& J) {
    const RingPtr<K>& ring = I.ring();
    if (I.is_zero_ideal()) return I;
    if (J.is_zero_ideal()) return I.with_gens({});
    if (I.is_unit_ideal()) return J;
    if (J.is_unit_ideal()) return I;

    std::vector<std::string> ext_names;
    ext_names.reserve(static_cast<std::size_t>(ring->nvars()) + 1);
    ext_names.push_back("@t");
    for (const auto& n : ring->names()) ext_names.push_back(n);
    RingPtr<K> ext = make_ring<K>(std::move(ext_names), MonomialOrder::elim(1), ring->one());

    auto lift = [&](const Polynomial<K>& p) {
        std::vector<Term<K>> terms;
        terms.reserve(p.terms().size());
        for (const auto& t : p.terms()) {
            std::vector<int> e;
            e.reserve(t.mono.e.size() + 1);
            e.push_back(0);
            e.insert(e.end(), t.mono.e.begin(), t.mono.e.end());
            terms.push_back({Monomial(std::move(e)), t.coeff});
        }
        return Polynomial<K>::from_terms(ext, std::move(terms));
    };
    Polynomial<K> t_var = Polynomial<K>::variable(ext, 0);
    Polynomial<K> one_minus_t =
        Polynomial<K>::constant(ext, ring->one()) - t_var;

    std::vector<Polynomial<K>> ext_gens;
    for (const auto& g : I.gens()) ext_gens.push_back(lift(g) * t_var);
    for (const auto& g : J.gens()) ext_gens.push_back(lift(g) * one_minus_t);

    detail::Engine<K> engine(ext, I.budget());
    std::vector<Polynomial<K>> basis = engine.reduced_basis(std::move(ext_gens));

    bool homog = detail::all_homogeneous(I) && detail::all_homogeneous(J);
    std::vector<Polynomial<K>> result;
    for (const auto& b : basis) {
        bool has_t = false;
        for (const auto& t : b.terms())
            if (t.mono.e[0] != 0) { has_t = true; break; }
        if (has_t) continue;
        std::vector<Term<K>> terms;
        terms.reserve(b.terms().size());
        for (const auto& t : b.terms()) {
            std::vector<int> e(t.mono.e.begin() + 1, t.mono.e.end());
            terms.push_back({Monomial(std::move(e)), t.coeff});
        }
        Polynomial<K> down = Polynomial<K>::from_terms(ring, std::move(terms));
        if (homog) {
            for (auto& comp : detail::homogeneous_components(down))
                result.push_back(std::move(comp));
        } else {
            result.push_back(std::move(down));
        }
    }
    return I.with_gens(std::move(result));
}

// I : (g), computed as (I cap (g)) / g.
template <class K> Ideal<K> colon(const Ideal<K>& I, const Polynomial<K>& g) {
    if (g.is_zero()) throw UsageError("colon by the zero polynomial");
    if (I.is_zero_ideal() || I.is_unit_ideal()) return I;
    Ideal<K> inter = intersect(I, I.with_gens({g}));
    detail::Engine<K> engine(I.ring(), I.budget());
    std::vector<Polynomial<K>> quotients;
    quotients.reserve(inter.gens().size());
    for (const auto& h : inter.gens())
        quotients.push_back(engine.exact_divide(h, g));
    return I.with_gens(std::move(quotients));
}

// I : J = the intersection of I : g over the generators g of J.
template <class K> Ideal<K> colon(const Ideal<K>& I, const Ideal<K>& J) {
    if (J.is_zero_ideal()) throw UsageError("colon by the zero ideal");
    if (I.is_zero_ideal() || I.is_unit_ideal()) return I;
    std::optional<Ideal<K>> acc;
    for (const auto& g : J.gens()) {
        Ideal<K> c = colon(I, g);
        acc = acc ? intersect(*acc, c) : std::move(c);
    }
    return *acc;
}

// I : J^infinity by iterating whole-ideal colons until stable.  Since the
// chain ascends, stability is `next subseteq current`, checked by membership.
template <class K> Ideal<K> saturate(const Ideal<K>& I, const Ideal<K>& J) {
    if (J.is_zero_ideal()) throw UsageError("saturation by the zero ideal");
    if (I.is_zero_ideal() || I.is_unit_ideal()) return I;
    Ideal<K> cur = I;
    for (int iter = 0; iter < 64; ++iter) {
        Ideal<K> next = colon(cur, J);
        if (cur.contains_ideal(next)) return cur;
        cur = std::move(next);
    }
    throw BudgetError("saturation failed to stabilize", 64, 0);
}

// ---------------------------------------------------------------------------
// Hilbert series of the leading-term ideal: projective dimension and degree.

struct HilbertData {
    int dim;           // projective dimension; -1 for the empty scheme
    long long degree;  // top-dimensional degree with multiplicity; 0 iff empty
};

namespace detail {

using MonoSet = std::vector<std::vector<int>>;

inline MonoSet minimalize(MonoSet monos) {
    std::sort(monos.begin(), monos.end());
    monos.erase(std::unique(monos.begin(), monos.end()), monos.end());
    MonoSet out;
    for (std::size_t i = 0; i < monos.size(); ++i) {
        bool redundant = false;
        for (std::size_t j = 0; j < monos.size() && !redundant; ++j) {
            if (i == j) continue;
            bool div = true;
            for (std::size_t k = 0; k < monos[i].size(); ++k)
                if (monos[j][k] > monos[i][k]) { div = false; break; }
            if (div && monos[j] != monos[i]) redundant = true;
        }
        if (!redundant) out.push_back(monos[i]);
    }
    return out;
}

// Numerator N(t) of the Hilbert series N(t)/(1-t)^n of R/M for a monomial
// ideal M, via pivot recursion N(M) = N(M + (x_j)) + t * N(M : x_j).  The
// pivot is the most frequent variable among mixed-support generators (pivoting
// on a variable that is itself a generator would not shrink the problem).
class HilbertNumerator {
public:
    explicit HilbertNumerator(int nvars) : nvars_(nvars) {}

    std::vector<mpz_class> run(MonoSet monos) { return compute(minimalize(std::move(monos))); }

private:
    std::vector<mpz_class> compute(MonoSet monos) {
        if (monos.empty()) return {1};
        for (const auto& m : monos) {
            bool unit = true;
            for (int x : m) if (x != 0) { unit = false; break; }
            if (unit) return {0};
        }
        // all pure powers (minimality makes the variables distinct)
        bool pure = true;
        for (const auto& m : monos) {
            int support = 0;
            for (int x : m) if (x > 0) ++support;
            if (support > 1) { pure = false; break; }
        }
        if (pure) {
            std::vector<mpz_class> poly{1};
            for (const auto& m : monos) {
                int d = 0;
                for (int x : m) d += x;
                std::vector<mpz_class> f(static_cast<std::size_t>(d) + 1, 0);
                f[0] = 1;
                f[static_cast<std::size_t>(d)] = -1;
                poly = mul(poly, f);
            }
            return poly;
        }
        auto it = memo_.find(monos);
        if (it != memo_.end()) return it->second;

        // pivot selection
        std::vector<int> counts(static_cast<std::size_t>(nvars_), -1);
        for (const auto& m : monos) {
            int support = 0;
            for (int x : m) if (x > 0) ++support;
            if (support < 2) continue;
            for (int i = 0; i < nvars_; ++i)
                if (m[static_cast<std::size_t>(i)] > 0) {
                    auto& c = counts[static_cast<std::size_t>(i)];
                    c = c < 0 ? 1 : c + 1;
                }
        }
        int pivot = 0;
        for (int i = 1; i < nvars_; ++i)
            if (counts[static_cast<std::size_t>(i)] > counts[static_cast<std::size_t>(pivot)])
                pivot = i;
        // recount including pure-power occurrences of the pivot
        MonoSet plus, quot;
        std::vector<int> ej(static_cast<std::size_t>(nvars_), 0);
        ej[static_cast<std::size_t>(pivot)] = 1;
        plus = monos;
        plus.push_back(ej);
        plus = minimalize(std::move(plus));
        for (auto m : monos) {
            auto& e = m[static_cast<std::size_t>(pivot)];
            if (e > 0) --e;
            quot.push_back(std::move(m));
        }
        quot = minimalize(std::move(quot));

        std::vector<mpz_class> a = compute(std::move(plus));
        std::vector<mpz_class> b = compute(std::move(quot));
        std::vector<mpz_class> out(std::max(a.size(), b.size() + 1), 0);
        for (std::size_t i = 0; i < a.size(); ++i) out[i] += a[i];
        for (std::size_t i = 0; i < b.size(); ++i) out[i + 1] += b[i];
        while (out.size() > 1 && out.back() == 0) out.pop_back();
        memo_.emplace(monos, out);
        return out;
    }

    static std::vector<mpz_class> mul(const std::vector<mpz_class>& a,
                                      const std::vector<mpz_class>& b) {
        std::vector<mpz_class> out(a.size() + b.size() - 1, 0);
        for (std::size_t i = 0; i < a.size(); ++i)
            for (std::size_t j = 0; j < b.size(); ++j)
                out[i + j] += a[i] * b[j];
        return out;
    }

    int nvars_;
    std::map<MonoSet, std::vector<mpz_class>> memo_;
};

inline mpz_class coeff_sum(const std::vector<mpz_class>& poly) {
    mpz_class s = 0;
    for (const auto& c : poly) s += c;
    return s;
}

// Divides by (1-t) once; callers check coeff_sum == 0 first.
inline std::vector<mpz_class> deflate(const std::vector<mpz_class>& num) {
    if (num.size() <= 1) return {0};
    std::vector<mpz_class> q(num.size() - 1, 0);
    q[0] = num[0];
    for (std::size_t k = 1; k + 1 < num.size(); ++k) q[k] = q[k - 1] + num[k];
    while (q.size() > 1 && q.back() == 0) q.pop_back();
    return q;
}

template <class K> MonoSet leading_monomials(const Ideal<K>& I) {
    MonoSet lts;
    for (const auto& g : I.groebner_basis()) lts.push_back(g.terms().front().mono.e);
    return minimalize(std::move(lts));
}

} // namespace detail

// Projective dimension and degree of a homogeneous ideal, read off the
// Hilbert series of its leading-term ideal.  The degree counts top-dimensional
// components with multiplicity; the empty scheme reports dim -1, degree 0.
template <class K> HilbertData hilbert(const Ideal<K>& I) {
    const int n = I.ring()->nvars();
    for (const auto& g : I.gens())
        if (!g.is_homogeneous())
            throw UsageError("hilbert: non-homogeneous generator");
    if (I.is_zero_ideal()) return {n - 1, 1};
    if (I.is_unit_ideal()) return {-1, 0};
    detail::HilbertNumerator ctx(n);
    std::vector<mpz_class> num = ctx.run(detail::leading_monomials(I));
    int e = 0;
    while (detail::coeff_sum(num) == 0) {
        if (num.size() <= 1) return {-1, 0};
        num = detail::deflate(num);
        ++e;
    }
    int affine_dim = n - e;
    if (affine_dim == 0) return {-1, 0};
    mpz_class deg = detail::coeff_sum(num);
    if (deg <= 0 || !deg.fits_slong_p())
        throw UsageError("hilbert: degenerate degree");
    return {affine_dim - 1, deg.get_si()};
}

// Colength of a monomial ideal given by leading terms: finite iff the
// quotient is zero-dimensional.
template <class K> std::optional<long long> monomial_colength(const Ideal<K>& I) {
    const int n = I.ring()->nvars();
    if (I.is_unit_ideal()) return 0;
    if (I.is_zero_ideal()) return std::nullopt;
    detail::HilbertNumerator ctx(n);
    std::vector<mpz_class> num = ctx.run(detail::leading_monomials(I));
    int e = 0;
    while (detail::coeff_sum(num) == 0) {
        if (num.size() <= 1) return 0;
        num = detail::deflate(num);
        ++e;
    }
    if (e < n) return std::nullopt;
    mpz_class len = detail::coeff_sum(num);
    if (!len.fits_slong_p()) throw UsageError("colength overflow");
    return len.get_si();
}

} // namespace sv
