#pragma once

#include <cmath>
#include <limits>
#include <stdexcept>

namespace hyplab {

/// Signed value carried as sign + natural log of the magnitude.
///
/// Quantities here routinely reach exp(+-10^3) (L^q norms of degree-n
/// polynomials grow like (q-1)^{n/2}), so every norm, bound and series
/// term is carried in this form and only converted to a plain double
/// when known to be representable.
struct LogValue {
    int sign = 0;  // -1, 0, +1
    double logmag = -std::numeric_limits<double>::infinity();

    constexpr LogValue() = default;

    static LogValue from_log(int sign, double logmag) {
        LogValue v;
        if (sign == 0 || logmag == -std::numeric_limits<double>::infinity()) return v;
        v.sign = sign > 0 ? 1 : -1;
        v.logmag = logmag;
        return v;
    }

    static LogValue from_double(double x) {
        if (x == 0.0) return LogValue{};
        if (std::isnan(x)) throw std::invalid_argument("LogValue::from_double: NaN");
        return from_log(x > 0 ? 1 : -1, std::log(std::fabs(x)));
    }

    static LogValue zero() { return LogValue{}; }
    static LogValue one() { return from_log(1, 0.0); }

    bool is_zero() const { return sign == 0; }

    /// Round trip to a plain double; overflows to +-inf for logmag > ~709.
    double to_double() const {
        if (sign == 0) return 0.0;
        return sign * std::exp(logmag);
    }

    LogValue abs() const { return sign == 0 ? LogValue{} : from_log(1, logmag); }

    LogValue operator-() const { return from_log(-sign, logmag); }

    friend LogValue operator*(const LogValue& a, const LogValue& b) {
        if (a.sign == 0 || b.sign == 0) return LogValue{};
        return from_log(a.sign * b.sign, a.logmag + b.logmag);
    }

    friend LogValue operator/(const LogValue& a, const LogValue& b) {
        if (b.sign == 0) throw std::domain_error("LogValue: division by zero");
        if (a.sign == 0) return LogValue{};
        return from_log(a.sign * b.sign, a.logmag - b.logmag);
    }

    // Addition goes through the larger-magnitude-factored form:
    // a + b = sign(a) * |a| * (1 +- |b|/|a|) for |a| >= |b|.
    friend LogValue operator+(const LogValue& a, const LogValue& b) {
        if (a.sign == 0) return b;
        if (b.sign == 0) return a;
        const LogValue& big = (a.logmag >= b.logmag) ? a : b;
        const LogValue& small = (a.logmag >= b.logmag) ? b : a;
        const double d = small.logmag - big.logmag;  // <= 0
        if (big.sign == small.sign) {
            return from_log(big.sign, big.logmag + std::log1p(std::exp(d)));
        }
        const double r = std::exp(d);
        if (r >= 1.0) return LogValue{};  // exact cancellation
        return from_log(big.sign, big.logmag + std::log1p(-r));
    }

    friend LogValue operator-(const LogValue& a, const LogValue& b) { return a + (-b); }

    LogValue& operator+=(const LogValue& o) { return *this = *this + o; }
    LogValue& operator*=(const LogValue& o) { return *this = *this * o; }

    friend LogValue operator*(double s, const LogValue& v) { return from_double(s) * v; }
    friend LogValue operator*(const LogValue& v, double s) { return from_double(s) * v; }

    /// |v|^p for real p; negative base requires integer p.
    friend LogValue pow(const LogValue& v, double p) {
        if (v.sign == 0) {
            if (p <= 0.0) throw std::domain_error("LogValue: 0^p with p <= 0");
            return LogValue{};
        }
        if (v.sign < 0 && p != std::nearbyint(p))
            throw std::domain_error("LogValue: negative base with non-integer exponent");
        int s = 1;
        if (v.sign < 0 && std::fmod(std::fabs(p), 2.0) == 1.0) s = -1;
        return from_log(s, p * v.logmag);
    }

    // Signed ordering.
    friend bool operator<(const LogValue& a, const LogValue& b) {
        if (a.sign != b.sign) return a.sign < b.sign;
        if (a.sign == 0) return false;
        return a.sign > 0 ? a.logmag < b.logmag : a.logmag > b.logmag;
    }
    friend bool operator>(const LogValue& a, const LogValue& b) { return b < a; }
    friend bool operator<=(const LogValue& a, const LogValue& b) { return !(b < a); }
    friend bool operator>=(const LogValue& a, const LogValue& b) { return !(a < b); }
};

/// exp(x) as a LogValue, valid for any finite x.
inline LogValue log_exp(double x) { return LogValue::from_log(1, x); }

}  // namespace hyplab
