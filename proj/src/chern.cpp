#include "sv/chern.hpp"

#include <utility>

namespace sv {

CohomClass::CohomClass(int n) : n_(n) {
    if (n < 0) throw UsageError("negative ambient dimension");
    c_.assign(static_cast<std::size_t>(n) + 1, Rational());
}

CohomClass CohomClass::one(int n) {
    CohomClass r(n);
    r.c_[0] = Rational(1);
    return r;
}

CohomClass CohomClass::h_power(int n, int k, const Rational& coeff) {
    CohomClass r(n);
    if (k < 0) throw UsageError("negative power of the hyperplane class");
    if (k <= n) r.c_[static_cast<std::size_t>(k)] = coeff;
    return r;
}

CohomClass CohomClass::from_coeffs(int n, std::vector<Rational> coeffs) {
    CohomClass r(n);
    if (coeffs.size() != static_cast<std::size_t>(n) + 1)
        throw UsageError("coefficient vector must have length n + 1");
    r.c_ = std::move(coeffs);
    return r;
}

const Rational& CohomClass::operator[](int k) const {
    if (k < 0 || k > n_) throw UsageError("class index out of range");
    return c_[static_cast<std::size_t>(k)];
}

CohomClass CohomClass::operator+(const CohomClass& o) const {
    if (n_ != o.n_) throw UsageError("ambient dimensions differ");
    CohomClass r(n_);
    for (std::size_t k = 0; k < c_.size(); ++k) r.c_[k] = c_[k] + o.c_[k];
    return r;
}

CohomClass CohomClass::operator-(const CohomClass& o) const {
    if (n_ != o.n_) throw UsageError("ambient dimensions differ");
    CohomClass r(n_);
    for (std::size_t k = 0; k < c_.size(); ++k) r.c_[k] = c_[k] - o.c_[k];
    return r;
}

CohomClass CohomClass::operator*(const CohomClass& o) const {
    if (n_ != o.n_) throw UsageError("ambient dimensions differ");
    CohomClass r(n_);
    for (std::size_t i = 0; i < c_.size(); ++i) {
        if (c_[i].is_zero()) continue;
        for (std::size_t j = 0; i + j < c_.size(); ++j)
            r.c_[i + j] = r.c_[i + j] + c_[i] * o.c_[j];
    }
    return r;
}

CohomClass CohomClass::scaled(const Rational& c) const {
    CohomClass r(n_);
    for (std::size_t k = 0; k < c_.size(); ++k) r.c_[k] = c_[k] * c;
    return r;
}

CohomClass CohomClass::inverse() const {
    if (c_[0].is_zero())
        throw UsageError("class with zero constant term has no inverse");
    CohomClass r(n_);
    Rational lead_inv = c_[0].inverse();
    r.c_[0] = lead_inv;
    for (std::size_t k = 1; k < c_.size(); ++k) {
        Rational acc;
        for (std::size_t i = 1; i <= k; ++i) acc = acc + c_[i] * r.c_[k - i];
        r.c_[k] = -(acc * lead_inv);
    }
    return r;
}

CohomClass CohomClass::pow(int e) const {
    if (e < 0) throw UsageError("negative power of a class");
    CohomClass r = CohomClass::one(n_);
    CohomClass base = *this;
    while (e > 0) {
        if (e & 1) r = r * base;
        base = base * base;
        e >>= 1;
    }
    return r;
}

bool CohomClass::is_zero() const {
    for (const auto& c : c_)
        if (!c.is_zero()) return false;
    return true;
}

std::string CohomClass::str() const {
    std::string out;
    for (int k = 0; k <= n_; ++k) {
        const Rational& c = c_[static_cast<std::size_t>(k)];
        if (c.is_zero()) continue;
        Rational abs = c;
        bool negative = c < Rational();
        if (negative) abs = -abs;
        if (out.empty()) {
            if (negative) out += "-";
        } else {
            out += negative ? " - " : " + ";
        }
        std::string mag = abs.str();
        if (k == 0) {
            out += mag;
        } else {
            if (!abs.is_one()) out += mag + "*";
            out += "H";
            if (k > 1) out += "^" + std::to_string(k);
        }
    }
    return out.empty() ? "0" : out;
}

CohomClass chern_total(const SplitBundle& B, int n) {
    if (B.rank() < 1) throw UsageError("bundle needs at least one summand");
    CohomClass r = CohomClass::one(n);
    for (int d : B.twists) {
        CohomClass line = CohomClass::one(n) +
                          CohomClass::h_power(n, 1, Rational(d));
        r = r * line;
    }
    return r;
}

CohomClass segre_total(const SplitBundle& B, int n) {
    return chern_total(B, n).inverse();
}

CohomClass segre_from_sv(const std::vector<Rational>& v, int d, int n) {
    if (static_cast<int>(v.size()) > n + 1)
        throw UsageError("degree vector longer than the ambient allows");
    CohomClass omega_factor =
        (CohomClass::one(n) + CohomClass::h_power(n, 1, Rational(d))).inverse();
    CohomClass S(n);
    for (std::size_t j = 0; j < v.size(); ++j) {
        if (v[j].is_zero()) continue;
        S = S + omega_factor.pow(static_cast<int>(j)) *
                    CohomClass::h_power(n, static_cast<int>(j), v[j]);
    }
    return S;
}

CohomClass segre_from_sv(const SVResult& r) {
    std::vector<Rational> v;
    v.reserve(r.v.size());
    for (long long x : r.v) v.emplace_back(x);
    return segre_from_sv(v, r.d, r.n);
}

std::vector<Rational> sv_from_segre(const CohomClass& S, int d, int mu_dim) {
    int n = S.n();
    if (mu_dim > n) throw UsageError("cycle dimension exceeds the ambient");
    CohomClass omega_factor =
        (CohomClass::one(n) - CohomClass::h_power(n, 1, Rational(d))).inverse();
    CohomClass V(n);
    for (int j = 0; j <= n; ++j) {
        if (S[j].is_zero()) continue;
        V = V + omega_factor.pow(j) * CohomClass::h_power(n, j, S[j]);
    }
    std::vector<Rational> v;
    v.reserve(static_cast<std::size_t>(mu_dim) + 1);
    for (int k = 0; k <= mu_dim; ++k) v.push_back(V[k]);
    return v;
}

CohomClass segre_regular_embedding(const std::vector<int>& twists, int n) {
    int kappa = static_cast<int>(twists.size());
    if (kappa < 1) throw UsageError("a regular embedding needs at least one form");
    if (kappa > n)
        throw UsageError("codimension exceeds the ambient dimension");
    Rational deg(1);
    for (int d : twists) {
        if (d < 1) throw UsageError("form degrees must be positive");
        deg = deg * Rational(d);
    }
    SplitBundle normal{twists};
    return segre_total(normal, n) * CohomClass::h_power(n, kappa, deg);
}

CohomClass gysin_map(const CohomClass& gamma, const std::vector<int>& twists, int n) {
    if (gamma.n() != n) throw UsageError("ambient dimensions differ");
    SplitBundle normal{twists};
    return chern_total(normal, n) * segre_regular_embedding(twists, n) * gamma;
}

bool ci_product_check(const std::vector<int>& twists, int extra_d, int n) {
    if (static_cast<int>(twists.size()) + 1 > n)
        throw UsageError("combined codimension exceeds the ambient dimension");
    std::vector<int> joint = twists;
    joint.push_back(extra_d);
    CohomClass joint_route = segre_regular_embedding(joint, n);
    CohomClass split_route = segre_regular_embedding(twists, n) *
                             segre_regular_embedding({extra_d}, n);
    return joint_route == split_route;
}

} // namespace sv
