#pragma once

#include <algorithm>
#include <map>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "sv/errors.hpp"
#include "sv/monomial.hpp"
#include "sv/rng.hpp"

namespace sv {

template <class K> struct Term {
    Monomial mono;
    K coeff;
};

// Variable names + default monomial order + a field witness (which carries
// the modulus for prime fields).  Rings are shared immutably by value of a
// shared_ptr; compatibility is by content, not identity.
template <class K> class PolyRing {
public:
    PolyRing(std::vector<std::string> names, MonomialOrder order, K one)
        : names_(std::move(names)), order_(order), one_(std::move(one)) {}

    int nvars() const { return static_cast<int>(names_.size()); }
    const std::vector<std::string>& names() const { return names_; }
    const std::string& name(int i) const { return names_[static_cast<std::size_t>(i)]; }
    const MonomialOrder& order() const { return order_; }
    const K& one() const { return one_; }
    K zero() const { return one_.zero_like(); }
    K from_int(long long n) const { return one_.from_int_like(n); }

    bool compatible(const PolyRing& o) const {
        return names_ == o.names_ && one_.zero_like() == o.one_.zero_like() &&
               one_ == o.one_;
    }

private:
    std::vector<std::string> names_;
    MonomialOrder order_;
    K one_;
};

template <class K> using RingPtr = std::shared_ptr<const PolyRing<K>>;

template <class K>
RingPtr<K> make_ring(std::vector<std::string> names, MonomialOrder order, K one) {
    return std::make_shared<const PolyRing<K>>(std::move(names), order, std::move(one));
}

struct Homogeneity {
    bool homogeneous;
    std::optional<int> degree; // unset for the zero polynomial
};

// Sparse polynomial: terms kept strictly descending in the ring's default
// order, never holding a zero coefficient.  Value semantics throughout.
template <class K> class Polynomial {
public:
    Polynomial() = default; // null placeholder; real ones carry a ring
    explicit Polynomial(RingPtr<K> ring) : ring_(std::move(ring)) {}

    static Polynomial zero(RingPtr<K> ring) { return Polynomial(std::move(ring)); }

    static Polynomial constant(RingPtr<K> ring, K c) {
        Polynomial p(std::move(ring));
        if (!c.is_zero())
            p.terms_.push_back({Monomial::unit(p.ring_->nvars()), std::move(c)});
        return p;
    }

    static Polynomial variable(RingPtr<K> ring, int i, int power = 1) {
        Polynomial p(ring);
        p.terms_.push_back({Monomial::var(ring->nvars(), i, power), ring->one()});
        return p;
    }

    static Polynomial monomial_term(RingPtr<K> ring, Monomial m, K c) {
        Polynomial p(std::move(ring));
        if (!c.is_zero()) p.terms_.push_back({std::move(m), std::move(c)});
        return p;
    }

    // Normalizes arbitrary term lists: sorts descending, merges duplicates,
    // drops zeros.
    static Polynomial from_terms(RingPtr<K> ring, std::vector<Term<K>> terms) {
        const MonomialOrder& ord = ring->order();
        std::sort(terms.begin(), terms.end(),
                  [&](const Term<K>& a, const Term<K>& b) {
                      return ord.cmp(a.mono, b.mono) > 0;
                  });
        Polynomial p(std::move(ring));
        for (auto& t : terms) {
            if (t.coeff.is_zero()) continue;
            if (!p.terms_.empty() && p.terms_.back().mono == t.mono) {
                p.terms_.back().coeff += t.coeff;
                if (p.terms_.back().coeff.is_zero()) p.terms_.pop_back();
            } else {
                p.terms_.push_back(std::move(t));
            }
        }
        return p;
    }

    const RingPtr<K>& ring() const { return ring_; }
    const std::vector<Term<K>>& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    int num_terms() const { return static_cast<int>(terms_.size()); }

    bool is_constant() const {
        return terms_.empty() || (terms_.size() == 1 && terms_[0].mono.is_unit());
    }

    // Leading term under the ring's default order.
    const Term<K>& leading_term() const {
        if (terms_.empty()) throw UsageError("leading term of the zero polynomial");
        return terms_.front();
    }

    // Leading term under an arbitrary order (linear scan when it differs).
    Term<K> leading_term(const MonomialOrder& ord) const {
        if (terms_.empty()) throw UsageError("leading term of the zero polynomial");
        if (ord == ring_->order()) return terms_.front();
        const Term<K>* best = &terms_.front();
        for (const auto& t : terms_)
            if (ord.cmp(t.mono, best->mono) > 0) best = &t;
        return *best;
    }

    int total_degree() const {
        if (terms_.empty()) throw UsageError("degree of the zero polynomial");
        int d = 0;
        for (const auto& t : terms_) d = std::max(d, t.mono.degree());
        return d;
    }

    Homogeneity homogeneity() const {
        if (terms_.empty()) return {true, std::nullopt};
        int d = terms_[0].mono.degree();
        for (const auto& t : terms_)
            if (t.mono.degree() != d) return {false, std::nullopt};
        return {true, d};
    }
    bool is_homogeneous() const { return homogeneity().homogeneous; }

    Polynomial operator-() const {
        Polynomial p(ring_);
        p.terms_.reserve(terms_.size());
        for (const auto& t : terms_) p.terms_.push_back({t.mono, -t.coeff});
        return p;
    }

    Polynomial operator+(const Polynomial& o) const {
        require_same_ring(o);
        const MonomialOrder& ord = ring_->order();
        Polynomial out(ring_);
        out.terms_.reserve(terms_.size() + o.terms_.size());
        std::size_t i = 0, j = 0;
        while (i < terms_.size() && j < o.terms_.size()) {
            int c = ord.cmp(terms_[i].mono, o.terms_[j].mono);
            if (c > 0) {
                out.terms_.push_back(terms_[i++]);
            } else if (c < 0) {
                out.terms_.push_back(o.terms_[j++]);
            } else {
                K s = terms_[i].coeff + o.terms_[j].coeff;
                if (!s.is_zero()) out.terms_.push_back({terms_[i].mono, std::move(s)});
                ++i; ++j;
            }
        }
        for (; i < terms_.size(); ++i) out.terms_.push_back(terms_[i]);
        for (; j < o.terms_.size(); ++j) out.terms_.push_back(o.terms_[j]);
        return out;
    }

    Polynomial operator-(const Polynomial& o) const { return *this + (-o); }

    // f * (c * m): the workhorse of division and S-polynomials.
    Polynomial times_term(const K& c, const Monomial& m) const {
        Polynomial out(ring_);
        if (c.is_zero()) return out;
        out.terms_.reserve(terms_.size());
        for (const auto& t : terms_) {
            K prod = t.coeff * c;
            if (!prod.is_zero()) out.terms_.push_back({t.mono * m, std::move(prod)});
        }
        return out; // multiplying by a fixed monomial preserves the sort
    }

    Polynomial operator*(const Polynomial& o) const {
        require_same_ring(o);
        std::vector<Term<K>> acc;
        acc.reserve(terms_.size() * o.terms_.size());
        for (const auto& a : terms_)
            for (const auto& b : o.terms_)
                acc.push_back({a.mono * b.mono, a.coeff * b.coeff});
        return from_terms(ring_, std::move(acc));
    }

    Polynomial operator*(const K& c) const {
        Polynomial out(ring_);
        if (c.is_zero()) return out;
        out.terms_.reserve(terms_.size());
        for (const auto& t : terms_) {
            K prod = t.coeff * c;
            if (!prod.is_zero()) out.terms_.push_back({t.mono, std::move(prod)});
        }
        return out;
    }

    Polynomial pow(int k) const {
        if (k < 0) throw UsageError("negative polynomial power");
        Polynomial out = constant(ring_, ring_->one());
        Polynomial base = *this;
        while (k > 0) {
            if (k & 1) out = out * base;
            base = k > 1 ? base * base : base;
            k >>= 1;
        }
        return out;
    }

    Polynomial monic() const {
        if (terms_.empty()) return *this;
        return *this * terms_.front().coeff.inverse();
    }

    // Substitute images[i] for variable i (images live in any target ring
    // over the same field).
    Polynomial substitute(const std::vector<Polynomial>& images) const {
        if (static_cast<int>(images.size()) != ring_->nvars())
            throw UsageError("substitute: one image per variable required");
        if (terms_.empty() && !images.empty()) return zero(images[0].ring());
        RingPtr<K> target = images.empty() ? ring_ : images[0].ring();
        // cache powers per variable up to the max exponent used
        std::vector<std::vector<Polynomial>> powers(images.size());
        Polynomial out = zero(target);
        for (const auto& t : terms_) {
            Polynomial prod = constant(target, t.coeff);
            for (std::size_t i = 0; i < images.size(); ++i) {
                int e = t.mono.e[i];
                if (e == 0) continue;
                auto& pw = powers[i];
                if (pw.empty()) pw.push_back(constant(target, target->one()));
                while (static_cast<int>(pw.size()) <= e)
                    pw.push_back(pw.back() * images[i]);
                prod = prod * pw[static_cast<std::size_t>(e)];
            }
            out = out + prod;
        }
        return out;
    }

    bool operator==(const Polynomial& o) const {
        if (terms_.size() != o.terms_.size()) return false;
        for (std::size_t i = 0; i < terms_.size(); ++i)
            if (terms_[i].mono != o.terms_[i].mono ||
                !(terms_[i].coeff == o.terms_[i].coeff))
                return false;
        return true;
    }
    bool operator!=(const Polynomial& o) const { return !(*this == o); }

    std::string str() const {
        if (terms_.empty()) return "0";
        std::string out;
        for (std::size_t i = 0; i < terms_.size(); ++i) {
            std::string c = terms_[i].coeff.str();
            bool negative = !c.empty() && c[0] == '-';
            if (i == 0) {
                if (negative) { out += "-"; c = c.substr(1); }
            } else {
                out += negative ? " - " : " + ";
                if (negative) c = c.substr(1);
            }
            std::string m = mono_str(terms_[i].mono);
            if (m.empty()) {
                out += c;
            } else if (c == "1") {
                out += m;
            } else {
                out += c + "*" + m;
            }
        }
        return out;
    }

private:
    void require_same_ring(const Polynomial& o) const {
        if (ring_.get() != o.ring_.get() && !ring_->compatible(*o.ring_))
            throw UsageError("polynomials from incompatible rings");
    }

    std::string mono_str(const Monomial& m) const {
        std::string out;
        for (int i = 0; i < m.nvars(); ++i) {
            int e = m.e[static_cast<std::size_t>(i)];
            if (e == 0) continue;
            if (!out.empty()) out += "*";
            out += ring_->name(i);
            if (e > 1) out += "^" + std::to_string(e);
        }
        return out;
    }

    RingPtr<K> ring_;
    std::vector<Term<K>> terms_;
};

template <class K>
Polynomial<K> operator*(const K& c, const Polynomial<K>& p) {
    return p * c;
}

// Generic linear form; coefficients follow the field's sampling contract
// (uniform nonzero residues over F_p, uniform integers in [-10^6, 10^6] over
// the rationals).  Resamples until the linear part is nonzero.
template <class K>
Polynomial<K> random_linear_form(const RingPtr<K>& ring, RandomSource& rng,
                                 bool through_origin = true) {
    for (;;) {
        std::vector<Term<K>> terms;
        for (int i = 0; i < ring->nvars(); ++i) {
            K c = ring->one().sample_like(rng);
            if (!c.is_zero())
                terms.push_back({Monomial::var(ring->nvars(), i), std::move(c)});
        }
        if (terms.empty()) continue;
        if (!through_origin) {
            K c = ring->one().sample_like(rng);
            if (!c.is_zero())
                terms.push_back({Monomial::unit(ring->nvars()), std::move(c)});
        }
        return Polynomial<K>::from_terms(ring, std::move(terms));
    }
}

// All exponent vectors of total degree d in n variables, in a fixed
// deterministic order.
inline std::vector<Monomial> monomials_of_degree(int nvars, int d) {
    std::vector<Monomial> out;
    Monomial cur(nvars);
    // lexicographic walk over compositions of d into nvars parts
    auto rec = [&](auto&& self, int pos, int remaining) -> void {
        if (pos == nvars - 1) {
            cur.e[static_cast<std::size_t>(pos)] = remaining;
            out.push_back(cur);
            return;
        }
        for (int i = remaining; i >= 0; --i) {
            cur.e[static_cast<std::size_t>(pos)] = i;
            self(self, pos + 1, remaining - i);
        }
        cur.e[static_cast<std::size_t>(pos)] = 0;
    };
    if (nvars == 0) return out;
    rec(rec, 0, d);
    return out;
}

} // namespace sv
