#pragma once

#include <compare>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "brauer/weights.hpp"

namespace brauer {

// Exact rational scalar for characteristic-0 diagram arithmetic.
class Rational {
public:
    Rational() = default;
    Rational(long long value) : num_(value), den_(1) {}
    Rational(long long num, long long den);

    long long num() const { return num_; }
    long long den() const { return den_; }
    bool is_zero() const { return num_ == 0; }

    Rational operator+(const Rational& o) const;
    Rational operator-(const Rational& o) const;
    Rational operator*(const Rational& o) const;
    Rational inverse() const;
    auto operator<=>(const Rational&) const = default;

    std::string text() const;

private:
    long long num_ = 0;
    long long den_ = 1;
};

// Residue scalar mod an odd prime.
class ModInt {
public:
    ModInt() = default;
    ModInt(long long value, int p);

    int p() const { return p_; }
    long long value() const { return v_; }
    bool is_zero() const { return v_ == 0; }

    ModInt operator+(const ModInt& o) const;
    ModInt operator-(const ModInt& o) const;
    ModInt operator*(const ModInt& o) const;
    ModInt inverse() const;
    auto operator<=>(const ModInt&) const = default;

    std::string text() const;

private:
    long long v_ = 0;
    int p_ = 0;  // 0 marks an unbound zero, absorbed on first arithmetic
};

// Perfect matching on {1..n, 1bar..nbar}: nodes 0..n-1 northern,
// n..2n-1 southern.
class BrauerDiagram {
public:
    explicit BrauerDiagram(int n);  // identity
    // signed pair notation: +i northern, -i southern, 1-based
    BrauerDiagram(int n, const std::vector<std::pair<int, int>>& pairs);

    int n() const { return n_; }
    int partner(int node) const { return partner_.at(node); }
    int propagating() const;
    std::optional<std::vector<int>> as_permutation() const;  // perm[i]: north i -> south perm[i]

    std::string text() const;
    static BrauerDiagram parse(int n, const std::string& text);

    auto operator<=>(const BrauerDiagram&) const = default;

private:
    int n_ = 0;
    std::vector<int> partner_;
};

// Stack a over b, count the closed loops, elide the interface.
std::pair<int, BrauerDiagram> compose(const BrauerDiagram& a, const BrauerDiagram& b);

// X_{i,j}: arcs {i,j} and {ibar,jbar}, all other strands vertical.
BrauerDiagram x_diagram(int n, int i, int j);

// All (2n-1)!! basis diagrams, lexicographic by partner table.
std::vector<BrauerDiagram> all_diagrams(int n);

template <class S>
class AlgebraElement {
public:
    AlgebraElement() = default;

    const std::map<BrauerDiagram, S>& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }

    void add_term(const BrauerDiagram& d, const S& coeff) {
        if (coeff.is_zero()) return;
        auto it = terms_.find(d);
        if (it == terms_.end()) {
            terms_.emplace(d, coeff);
        } else {
            it->second = it->second + coeff;
            if (it->second.is_zero()) terms_.erase(it);
        }
    }

    AlgebraElement operator+(const AlgebraElement& o) const {
        AlgebraElement out = *this;
        for (const auto& [d, c] : o.terms_) out.add_term(d, c);
        return out;
    }

    AlgebraElement scaled(const S& s) const {
        AlgebraElement out;
        if (s.is_zero()) return out;
        for (const auto& [d, c] : terms_) out.add_term(d, c * s);
        return out;
    }

    bool operator==(const AlgebraElement& o) const { return terms_ == o.terms_; }

private:
    std::map<BrauerDiagram, S> terms_;
};

template <class S>
AlgebraElement<S> multiply(const AlgebraElement<S>& x, const AlgebraElement<S>& y,
                           const S& delta) {
    AlgebraElement<S> out;
    for (const auto& [dx, cx] : x.terms()) {
        for (const auto& [dy, cy] : y.terms()) {
            auto [loops, d] = compose(dx, dy);
            S coeff = cx * cy;
            for (int t = 0; t < loops; ++t) coeff = coeff * delta;
            out.add_term(d, coeff);
        }
    }
    return out;
}

template <class S>
AlgebraElement<S> diagram_unit(const BrauerDiagram& d, const S& one) {
    AlgebraElement<S> out;
    out.add_term(d, one);
    return out;
}

// e_n = (1/delta) times the diagram with an arc on the last two strands,
// top and bottom; idempotent whenever delta is invertible.
template <class S>
AlgebraElement<S> e_n(int n, const S& delta) {
    if (n < 2) throw std::invalid_argument("e_n: needs n >= 2");
    if (delta.is_zero()) throw std::domain_error("e_n: delta = 0 has no idempotent of this form");
    AlgebraElement<S> out;
    out.add_term(x_diagram(n, n - 1, n), delta.inverse());
    return out;
}

// T_n = sum of X_{i,j} over 1 <= i < j <= n.
template <class S>
AlgebraElement<S> build_Tn(int n, const S& one) {
    if (n < 2) throw std::invalid_argument("build_Tn: needs n >= 2");
    AlgebraElement<S> out;
    for (int i = 1; i < n; ++i)
        for (int j = i + 1; j <= n; ++j) out.add_term(x_diagram(n, i, j), one);
    return out;
}

}  // namespace brauer
