#pragma once

#include <cmath>
#include <cstdint>
#include <functional>
#include <numeric>
#include <optional>
#include <ostream>
#include <stdexcept>
#include <string>

namespace polypack {

struct overflow_error : std::overflow_error {
    using std::overflow_error::overflow_error;
};

struct field_error : std::domain_error {
    using std::domain_error::domain_error;
};

namespace detail {

using i128 = __int128;

inline std::int64_t narrow(i128 v) {
    if (v > INT64_MAX || v < -INT64_MAX) throw overflow_error("rational overflow");
    return static_cast<std::int64_t>(v);
}

inline i128 gcd128(i128 a, i128 b) {
    if (a < 0) a = -a;
    if (b < 0) b = -b;
    while (b != 0) {
        i128 t = a % b;
        a = b;
        b = t;
    }
    return a;
}

inline std::int64_t isqrt(std::int64_t n) {
    if (n < 0) return -1;
    auto r = static_cast<std::int64_t>(std::sqrt(static_cast<long double>(n)));
    while (r > 0 && static_cast<i128>(r) * r > n) --r;
    while (static_cast<i128>(r + 1) * (r + 1) <= n) ++r;
    return r;
}

// n = s^2 * f with f squarefree; returns {s, f}
inline std::pair<std::int64_t, std::int64_t> square_part(std::int64_t n) {
    if (n <= 0) throw std::invalid_argument("square_part expects n > 0");
    std::int64_t s = 1, f = 1;
    for (std::int64_t p = 2; p * p <= n; ++p) {
        while (n % (p * p) == 0) {
            n /= p * p;
            s *= p;
        }
        if (n % p == 0) {
            n /= p;
            f *= p;
        }
    }
    return {s, f * n};
}

}  // namespace detail

// Checked rational with 64-bit numerator and denominator.
class Rational {
public:
    Rational() = default;
    Rational(std::int64_t n) : num_(n), den_(1) {}
    Rational(std::int64_t n, std::int64_t d) { assign(n, d); }

    std::int64_t num() const { return num_; }
    std::int64_t den() const { return den_; }
    bool is_integer() const { return den_ == 1; }
    bool is_zero() const { return num_ == 0; }
    int sign() const { return (num_ > 0) - (num_ < 0); }
    double to_double() const { return static_cast<double>(num_) / static_cast<double>(den_); }

    friend Rational operator+(const Rational& a, const Rational& b) {
        if (a.den_ == b.den_) return from128(detail::i128(a.num_) + b.num_, a.den_);
        return from128(detail::i128(a.num_) * b.den_ + detail::i128(b.num_) * a.den_,
                       detail::i128(a.den_) * b.den_);
    }
    friend Rational operator-(const Rational& a, const Rational& b) { return a + (-b); }
    friend Rational operator*(const Rational& a, const Rational& b) {
        if (a.den_ == 1 && b.den_ == 1) return Rational(detail::narrow(detail::i128(a.num_) * b.num_));
        return from128(detail::i128(a.num_) * b.num_, detail::i128(a.den_) * b.den_);
    }
    friend Rational operator/(const Rational& a, const Rational& b) {
        if (b.num_ == 0) throw std::domain_error("division by zero");
        return from128(detail::i128(a.num_) * b.den_, detail::i128(a.den_) * b.num_);
    }
    Rational operator-() const {
        Rational r;
        r.num_ = -num_;
        r.den_ = den_;
        return r;
    }
    Rational& operator+=(const Rational& o) { return *this = *this + o; }
    Rational& operator-=(const Rational& o) { return *this = *this - o; }
    Rational& operator*=(const Rational& o) { return *this = *this * o; }
    Rational& operator/=(const Rational& o) { return *this = *this / o; }

    friend bool operator==(const Rational& a, const Rational& b) { return a.num_ == b.num_ && a.den_ == b.den_; }
    friend bool operator!=(const Rational& a, const Rational& b) { return !(a == b); }
    friend bool operator<(const Rational& a, const Rational& b) {
        return detail::i128(a.num_) * b.den_ < detail::i128(b.num_) * a.den_;
    }
    friend bool operator>(const Rational& a, const Rational& b) { return b < a; }
    friend bool operator<=(const Rational& a, const Rational& b) { return !(b < a); }
    friend bool operator>=(const Rational& a, const Rational& b) { return !(a < b); }

    std::string str() const {
        return den_ == 1 ? std::to_string(num_) : std::to_string(num_) + "/" + std::to_string(den_);
    }
    static Rational parse(const std::string& s) {
        auto slash = s.find('/');
        if (slash == std::string::npos) return Rational(std::stoll(s));
        return Rational(std::stoll(s.substr(0, slash)), std::stoll(s.substr(slash + 1)));
    }

    // exact square root if this is the square of a rational
    std::optional<Rational> sqrt() const {
        if (num_ < 0) return std::nullopt;
        auto a = detail::isqrt(num_), b = detail::isqrt(den_);
        if (a * a != num_ || b * b != den_) return std::nullopt;
        return Rational(a, b);
    }

    static Rational from128(detail::i128 n, detail::i128 d) {
        if (d < 0) {
            n = -n;
            d = -d;
        }
        auto g = detail::gcd128(n, d);
        if (g > 1) {
            n /= g;
            d /= g;
        }
        Rational r;
        r.num_ = detail::narrow(n);
        r.den_ = detail::narrow(d);
        return r;
    }
private:
    void assign(std::int64_t n, std::int64_t d) {
        if (d == 0) throw std::domain_error("zero denominator");
        *this = from128(n, d);
    }

    std::int64_t num_ = 0;
    std::int64_t den_ = 1;
};

inline std::ostream& operator<<(std::ostream& os, const Rational& r) { return os << r.str(); }

// a + b*sqrt(m), m squarefree. m == 0 whenever b == 0, so equal values compare equal.
class Quadratic {
public:
    Quadratic() = default;
    Quadratic(std::int64_t a) : a_(a) {}
    Quadratic(Rational a) : a_(a) {}
    Quadratic(Rational a, Rational b, std::int64_t m) : a_(a), b_(b), m_(m) {
        if (m == 1) {
            a_ += b_;
            b_ = 0;
        }
        if (m < 0 || (m == 0 && !b_.is_zero())) throw field_error("radicand must be a positive squarefree integer");
        normalize();
    }
    // sqrt(m) itself
    static Quadratic root(std::int64_t m) { return Quadratic(0, 1, m); }

    const Rational& a() const { return a_; }
    const Rational& b() const { return b_; }
    std::int64_t m() const { return m_; }
    bool is_rational() const { return b_.is_zero(); }
    bool is_zero() const { return a_.is_zero() && b_.is_zero(); }
    bool is_integer() const { return b_.is_zero() && a_.is_integer(); }

    int sign() const {
        int sa = a_.sign(), sb = b_.sign();
        if (sb == 0) return sa;
        if (sa == 0 || sa == sb) return sb;
        // opposite signs: compare a^2 with b^2 m, exactly only when floating point cannot tell
        long double fa = static_cast<long double>(a_.num()) / a_.den();
        long double fb = static_cast<long double>(b_.num()) / b_.den() * std::sqrt(static_cast<long double>(m_));
        long double sum = fa + fb;
        if (std::abs(sum) > 1e-12L * (std::abs(fa) + std::abs(fb))) return sum > 0 ? 1 : -1;
        auto lhs = a_ * a_;
        auto rhs = b_ * b_ * Rational(m_);
        if (lhs == rhs) return 0;
        return lhs > rhs ? sa : sb;
    }
    double to_double() const { return a_.to_double() + b_.to_double() * std::sqrt(static_cast<double>(m_)); }
    Quadratic conj() const { return Quadratic(a_, -b_, m_); }
    Rational norm() const { return a_ * a_ - b_ * b_ * Rational(m_); }

    friend Quadratic operator+(const Quadratic& x, const Quadratic& y) {
        return Quadratic(x.a_ + y.a_, x.b_ + y.b_, common(x, y));
    }
    friend Quadratic operator-(const Quadratic& x, const Quadratic& y) {
        return Quadratic(x.a_ - y.a_, x.b_ - y.b_, common(x, y));
    }
    friend Quadratic operator*(const Quadratic& x, const Quadratic& y) {
        if (x.b_.is_zero() && y.b_.is_zero()) return Quadratic(x.a_ * y.a_);
        auto m = common(x, y);
        return Quadratic(x.a_ * y.a_ + x.b_ * y.b_ * Rational(m), x.a_ * y.b_ + x.b_ * y.a_, m);
    }
    friend Quadratic operator/(const Quadratic& x, const Quadratic& y) {
        if (y.b_.is_zero()) {
            if (y.a_.is_zero()) throw std::domain_error("division by zero");
            return Quadratic(x.a_ / y.a_, x.b_ / y.a_, x.m_);
        }
        auto n = y.norm();
        auto t = x * y.conj();
        return Quadratic(t.a_ / n, t.b_ / n, t.m_);
    }
    Quadratic operator-() const { return Quadratic(-a_, -b_, m_); }
    Quadratic& operator+=(const Quadratic& o) { return *this = *this + o; }
    Quadratic& operator-=(const Quadratic& o) { return *this = *this - o; }
    Quadratic& operator*=(const Quadratic& o) { return *this = *this * o; }
    Quadratic& operator/=(const Quadratic& o) { return *this = *this / o; }

    friend bool operator==(const Quadratic& x, const Quadratic& y) {
        return x.a_ == y.a_ && x.b_ == y.b_ && x.m_ == y.m_;
    }
    friend bool operator!=(const Quadratic& x, const Quadratic& y) { return !(x == y); }
    friend bool operator<(const Quadratic& x, const Quadratic& y) { return (x - y).sign() < 0; }
    friend bool operator>(const Quadratic& x, const Quadratic& y) { return y < x; }
    friend bool operator<=(const Quadratic& x, const Quadratic& y) { return !(y < x); }
    friend bool operator>=(const Quadratic& x, const Quadratic& y) { return !(x < y); }

    // exact square root inside Q(sqrt m') for some m' compatible with this value
    std::optional<Quadratic> sqrt() const {
        if (sign() < 0) return std::nullopt;
        if (b_.is_zero()) {
            if (a_.is_zero()) return Quadratic();
            // a = p/q = p*q / q^2
            auto pq = static_cast<detail::i128>(a_.num()) * a_.den();
            auto [s, f] = detail::square_part(detail::narrow(pq));
            Rational coeff(s, a_.den());
            if (f == 1) return Quadratic(coeff);
            return Quadratic(0, coeff, f);
        }
        // (x + y sqrt m)^2 = a + b sqrt m  =>  x^2 + m y^2 = a, 2xy = b
        // x^2 = (a + sqrt(norm)) / 2
        auto n = norm().sqrt();
        if (!n) return std::nullopt;
        for (auto cand : {(a_ + *n) / Rational(2), (a_ - *n) / Rational(2)}) {
            auto x = cand.sqrt();
            if (!x || x->is_zero()) continue;
            Quadratic r(*x, b_ / (Rational(2) * *x), m_);
            if (r * r == *this) return r.sign() < 0 ? -r : r;
        }
        // y-only solutions: x = 0, m y^2 = a, b = 0 -- handled above
        return std::nullopt;
    }

    std::string str() const {
        if (b_.is_zero()) return a_.str();
        std::string s = a_.is_zero() ? "" : a_.str() + (b_.sign() > 0 ? "+" : "");
        return s + b_.str() + "*sqrt(" + std::to_string(m_) + ")";
    }

    std::size_t hash() const {
        std::size_t h = std::hash<std::int64_t>{}(a_.num());
        auto mix = [&h](std::int64_t v) { h ^= std::hash<std::int64_t>{}(v) + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2); };
        mix(a_.den());
        mix(b_.num());
        mix(b_.den());
        return h;
    }

private:
    static std::int64_t common(const Quadratic& x, const Quadratic& y) {
        if (x.m_ == 0) return y.m_;
        if (y.m_ == 0 || y.m_ == x.m_) return x.m_;
        throw field_error("mixing Q(sqrt " + std::to_string(x.m_) + ") with Q(sqrt " + std::to_string(y.m_) + ")");
    }
    void normalize() {
        if (b_.is_zero()) m_ = 0;
    }

    Rational a_{0};
    Rational b_{0};
    std::int64_t m_ = 0;
};

inline std::ostream& operator<<(std::ostream& os, const Quadratic& q) { return os << q.str(); }

// Float mode tolerance shared by every equality test on doubles.
inline double& float_eps() {
    static double eps = 1e-9;
    return eps;
}

// Uniform scalar interface used by the generic geometry code.
namespace num {

inline bool is_zero(const Quadratic& x) { return x.is_zero(); }
inline bool is_zero(double x) { return std::abs(x) <= float_eps(); }
inline int sign(const Quadratic& x) { return x.sign(); }
inline int sign(double x) { return is_zero(x) ? 0 : (x > 0 ? 1 : -1); }
inline bool eq(const Quadratic& x, const Quadratic& y) { return x == y; }
inline bool eq(double x, double y) { return std::abs(x - y) <= float_eps(); }
inline double to_double(const Quadratic& x) { return x.to_double(); }
inline double to_double(double x) { return x; }
inline std::optional<Quadratic> sqrt(const Quadratic& x) { return x.sqrt(); }
inline std::optional<double> sqrt(double x) {
    if (x < -float_eps()) return std::nullopt;
    return std::sqrt(std::max(x, 0.0));
}
inline bool is_integer(const Quadratic& x) { return x.is_integer(); }
inline bool is_integer(double x) { return std::abs(x - std::round(x)) <= float_eps(); }
inline std::string str(const Quadratic& x) { return x.str(); }
inline std::string str(double x) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.17g", x);
    return buf;
}

template <class S>
S sqrt_or_throw(const S& x) {
    auto r = num::sqrt(x);
    if (!r) throw field_error("square root of " + str(x) + " is not in the scalar field");
    return *r;
}

template <class S>
S from_int(std::int64_t v) {
    return S(v);
}
template <>
inline double from_int<double>(std::int64_t v) {
    return static_cast<double>(v);
}

// sqrt of a nonnegative integer as a scalar
template <class S>
S root(std::int64_t n) {
    return sqrt_or_throw(from_int<S>(n));
}

template <class S>
S rational(std::int64_t p, std::int64_t q) {
    if constexpr (std::is_same_v<S, double>)
        return static_cast<double>(p) / static_cast<double>(q);
    else
        return S(Rational(p, q));
}

}  // namespace num

using Exact = Quadratic;

}  // namespace polypack

template <>
struct std::hash<polypack::Quadratic> {
    std::size_t operator()(const polypack::Quadratic& q) const { return q.hash(); }
};
