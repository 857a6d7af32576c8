#pragma once

#include <string>
#include <vector>

#include "sv/errors.hpp"
#include "sv/rational.hpp"
#include "sv/sv.hpp"

namespace sv {

// An element of Q[H]/(H^{n+1}): the degree data of a cycle class on P^n.
// All arithmetic truncates above H^n and is exact.
class CohomClass {
public:
    explicit CohomClass(int n);
    static CohomClass one(int n);
    static CohomClass h_power(int n, int k, const Rational& coeff);
    static CohomClass from_coeffs(int n, std::vector<Rational> coeffs);

    int n() const { return n_; }
    const std::vector<Rational>& coeffs() const { return c_; }
    const Rational& operator[](int k) const;

    CohomClass operator+(const CohomClass& o) const;
    CohomClass operator-(const CohomClass& o) const;
    CohomClass operator*(const CohomClass& o) const;
    CohomClass scaled(const Rational& c) const;
    CohomClass inverse() const;  // needs an invertible constant term
    CohomClass pow(int e) const;

    bool operator==(const CohomClass& o) const { return n_ == o.n_ && c_ == o.c_; }
    bool operator!=(const CohomClass& o) const { return !(*this == o); }
    bool is_zero() const;
    std::string str() const;

private:
    int n_;
    std::vector<Rational> c_;  // c_[k] multiplies H^k, k = 0..n
};

// A direct sum of line bundles O(d_1) + ... + O(d_r) on P^n.
struct SplitBundle {
    std::vector<int> twists;
    int rank() const { return static_cast<int>(twists.size()); }
};

// Total Chern class prod_i (1 + d_i H).
CohomClass chern_total(const SplitBundle& B, int n);

// Total Segre class: the series inverse of the total Chern class.
CohomClass segre_total(const SplitBundle& B, int n);

// Transform from intersection-cycle degrees to Segre-class degrees:
// S = sum_j (1 + dH)^{-j} * v_j * H^j.
CohomClass segre_from_sv(const std::vector<Rational>& v, int d, int n);
CohomClass segre_from_sv(const SVResult& r);

// Inverse transform: v_k = coefficient of H^k in sum_j (1 - dH)^{-j} S_j H^j.
std::vector<Rational> sv_from_segre(const CohomClass& S, int d, int mu_dim);

// Segre-class degrees of a regular embedding cut out by forms of the given
// degrees: segre_total of the normal bundle times (prod d_i) H^kappa.
CohomClass segre_regular_embedding(const std::vector<int>& twists, int n);

// Class-level Gysin image: chern_total(N) * segre_regular_embedding * gamma,
// which for pure classes is gamma * (prod d_i) H^kappa.
CohomClass gysin_map(const CohomClass& gamma, const std::vector<int>& twists, int n);

// Two-route consistency check for appending one more generic hypersurface of
// degree extra_d to a complete intersection: the joint closed form must equal
// the product of the separate closed forms (Whitney factorization).
bool ci_product_check(const std::vector<int>& twists, int extra_d, int n);

} // namespace sv
