#pragma once

#include <numeric>
#include <vector>

#include "sv/errors.hpp"

namespace sv {

// Exponent vector of a power product.  The variable count is fixed by the
// ring; a default-constructed Monomial is only a placeholder.
struct Monomial {
    std::vector<int> e;

    Monomial() = default;
    explicit Monomial(int nvars) : e(static_cast<std::size_t>(nvars), 0) {}
    explicit Monomial(std::vector<int> exps) : e(std::move(exps)) {}

    static Monomial unit(int nvars) { return Monomial(nvars); }
    static Monomial var(int nvars, int i, int power = 1) {
        Monomial m(nvars);
        m.e[static_cast<std::size_t>(i)] = power;
        return m;
    }

    int nvars() const { return static_cast<int>(e.size()); }
    int degree() const { return std::accumulate(e.begin(), e.end(), 0); }
    bool is_unit() const {
        for (int x : e) if (x != 0) return false;
        return true;
    }

    friend Monomial operator*(const Monomial& a, const Monomial& b) {
        Monomial m(a.nvars());
        for (std::size_t i = 0; i < a.e.size(); ++i) m.e[i] = a.e[i] + b.e[i];
        return m;
    }

    bool divides(const Monomial& m) const {
        for (std::size_t i = 0; i < e.size(); ++i)
            if (e[i] > m.e[i]) return false;
        return true;
    }

    // this / d, requiring d | this.
    Monomial divided_by(const Monomial& d) const {
        Monomial m(nvars());
        for (std::size_t i = 0; i < e.size(); ++i) {
            m.e[i] = e[i] - d.e[i];
            if (m.e[i] < 0) throw UsageError("monomial division is not exact");
        }
        return m;
    }

    static Monomial lcm(const Monomial& a, const Monomial& b) {
        Monomial m(a.nvars());
        for (std::size_t i = 0; i < a.e.size(); ++i)
            m.e[i] = a.e[i] > b.e[i] ? a.e[i] : b.e[i];
        return m;
    }

    bool operator==(const Monomial& o) const { return e == o.e; }
    bool operator!=(const Monomial& o) const { return e != o.e; }
};

enum class OrderKind { grevlex, lex, elim };

// Monomial order: grevlex, lex, or a block elimination order (grevlex on the
// first `elim_block` variables, then grevlex on the rest) that eliminates the
// leading block.
struct MonomialOrder {
    OrderKind kind = OrderKind::grevlex;
    int elim_block = 0;

    static MonomialOrder grevlex() { return {OrderKind::grevlex, 0}; }
    static MonomialOrder lex() { return {OrderKind::lex, 0}; }
    static MonomialOrder elim(int block) { return {OrderKind::elim, block}; }

    // -1 if a < b, 0 if equal, +1 if a > b.
    int cmp(const Monomial& a, const Monomial& b) const {
        switch (kind) {
        case OrderKind::lex:
            for (std::size_t i = 0; i < a.e.size(); ++i) {
                if (a.e[i] != b.e[i]) return a.e[i] > b.e[i] ? 1 : -1;
            }
            return 0;
        case OrderKind::grevlex:
            return grevlex_window(a, b, 0, static_cast<int>(a.e.size()));
        case OrderKind::elim: {
            int c = grevlex_window(a, b, 0, elim_block);
            if (c != 0) return c;
            return grevlex_window(a, b, elim_block, static_cast<int>(a.e.size()));
        }
        }
        return 0;
    }

    bool less(const Monomial& a, const Monomial& b) const { return cmp(a, b) < 0; }

    bool operator==(const MonomialOrder& o) const {
        return kind == o.kind && elim_block == o.elim_block;
    }
    bool operator<(const MonomialOrder& o) const { // cache key
        if (kind != o.kind) return kind < o.kind;
        return elim_block < o.elim_block;
    }

private:
    // Graded reverse lex restricted to variables [lo, hi).
    static int grevlex_window(const Monomial& a, const Monomial& b, int lo, int hi) {
        int da = 0, db = 0;
        for (int i = lo; i < hi; ++i) {
            da += a.e[static_cast<std::size_t>(i)];
            db += b.e[static_cast<std::size_t>(i)];
        }
        if (da != db) return da > db ? 1 : -1;
        for (int i = hi - 1; i >= lo; --i) {
            int d = a.e[static_cast<std::size_t>(i)] - b.e[static_cast<std::size_t>(i)];
            if (d != 0) return d < 0 ? 1 : -1; // last nonzero of a-b negative => a > b
        }
        return 0;
    }
};

} // namespace sv
