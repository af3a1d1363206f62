#pragma once

#include <cstdint>
#include <numeric>
#include <stdexcept>
#include <vector>

namespace mcluster {

// exact arithmetic for the mesh-ideal and representation computations;
// entries start in {0,1} and stay tiny, but we keep full rationals anyway
struct Rational {
    std::int64_t num = 0;
    std::int64_t den = 1;

    Rational() = default;
    Rational(std::int64_t n) : num(n), den(1) {}
    Rational(std::int64_t n, std::int64_t d) : num(n), den(d) { reduce(); }

    void reduce() {
        if (den == 0) throw std::overflow_error("rational: zero denominator");
        if (den < 0) { num = -num; den = -den; }
        std::int64_t g = std::gcd(num < 0 ? -num : num, den);
        if (g > 1) { num /= g; den /= g; }
    }

    bool is_zero() const { return num == 0; }

    friend Rational operator+(const Rational& a, const Rational& b) {
        __int128 n = (__int128)a.num * b.den + (__int128)b.num * a.den;
        __int128 d = (__int128)a.den * b.den;
        return make_checked(n, d);
    }
    friend Rational operator-(const Rational& a, const Rational& b) {
        __int128 n = (__int128)a.num * b.den - (__int128)b.num * a.den;
        __int128 d = (__int128)a.den * b.den;
        return make_checked(n, d);
    }
    friend Rational operator*(const Rational& a, const Rational& b) {
        return make_checked((__int128)a.num * b.num, (__int128)a.den * b.den);
    }
    friend Rational operator/(const Rational& a, const Rational& b) {
        if (b.num == 0) throw std::overflow_error("rational: divide by zero");
        return make_checked((__int128)a.num * b.den, (__int128)a.den * b.num);
    }
    Rational operator-() const { return Rational(-num, den); }
    friend bool operator==(const Rational& a, const Rational& b) {
        return a.num == b.num && a.den == b.den;
    }

    static Rational make_checked(__int128 n, __int128 d) {
        if (d < 0) { n = -n; d = -d; }
        __int128 an = n < 0 ? -n : n;
        __int128 g = gcd128(an, d);
        if (g > 1) { n /= g; d /= g; }
        if (n > INT64_MAX || n < INT64_MIN || d > INT64_MAX)
            throw std::overflow_error("rational: overflow");
        Rational r;
        r.num = (std::int64_t)n;
        r.den = (std::int64_t)d;
        return r;
    }
    static __int128 gcd128(__int128 a, __int128 b) {
        while (b) { __int128 t = a % b; a = b; b = t; }
        return a;
    }
};

using QVec = std::vector<Rational>;
using QMat = std::vector<QVec>; // row-major

// reduces v against an echelon basis (each basis vector normalized with
// leading coefficient 1 at column lead[t]); returns the reduced vector
inline QVec reduce_against(QVec v, const std::vector<QVec>& basis,
                           const std::vector<int>& lead) {
    for (std::size_t t = 0; t < basis.size(); ++t) {
        const Rational& c = v[lead[t]];
        if (!c.is_zero()) {
            Rational f = c;
            for (std::size_t k = 0; k < v.size(); ++k)
                if (!basis[t][k].is_zero()) v[k] = v[k] - f * basis[t][k];
        }
    }
    return v;
}

// incremental echelon span; insert() returns true when v enlarged the span
struct EchelonSpan {
    std::vector<QVec> basis;
    std::vector<int> lead;

    bool insert(QVec v) {
        v = reduce_against(std::move(v), basis, lead);
        int l = -1;
        for (std::size_t k = 0; k < v.size(); ++k)
            if (!v[k].is_zero()) { l = (int)k; break; }
        if (l < 0) return false;
        Rational inv = Rational(1) / v[l];
        for (auto& x : v) x = x * inv;
        basis.push_back(std::move(v));
        lead.push_back(l);
        return true;
    }
    int rank() const { return (int)basis.size(); }
};

inline int rank_of(const QMat& rows) {
    EchelonSpan span;
    for (const auto& r : rows) span.insert(r);
    return span.rank();
}

} // namespace mcluster
