// Exact rational arithmetic on 64-bit numerator/denominator.
//
// Distances and Morse values need exact ties; doubles destroy them. Values
// are kept normalized (gcd 1, positive denominator) and every operation that
// could leave int64 range routes through 128-bit intermediates and throws
// std::overflow_error instead of wrapping.
#pragma once

#include <cstdint>
#include <numeric>
#include <stdexcept>
#include <string>

namespace vrmorse {

class Rational {
public:
    constexpr Rational() : num_(0), den_(1) {}
    constexpr Rational(std::int64_t n) : num_(n), den_(1) {}
    Rational(std::int64_t n, std::int64_t d) : num_(n), den_(d) {
        if (den_ == 0) throw std::invalid_argument("rational: zero denominator");
        normalize();
    }

    std::int64_t num() const { return num_; }
    std::int64_t den() const { return den_; }

    friend Rational operator+(const Rational& a, const Rational& b) {
        return from128(i128(a.num_) * b.den_ + i128(b.num_) * a.den_,
                       i128(a.den_) * b.den_);
    }
    friend Rational operator-(const Rational& a, const Rational& b) {
        return from128(i128(a.num_) * b.den_ - i128(b.num_) * a.den_,
                       i128(a.den_) * b.den_);
    }
    friend Rational operator*(const Rational& a, const Rational& b) {
        return from128(i128(a.num_) * b.num_, i128(a.den_) * b.den_);
    }
    friend Rational operator/(const Rational& a, const Rational& b) {
        if (b.num_ == 0) throw std::domain_error("rational: division by zero");
        return from128(i128(a.num_) * b.den_, i128(a.den_) * b.num_);
    }
    Rational operator-() const {
        Rational r;
        r.num_ = -num_;
        r.den_ = den_;
        return r;
    }

    friend bool operator==(const Rational& a, const Rational& b) {
        return a.num_ == b.num_ && a.den_ == b.den_;
    }
    friend bool operator!=(const Rational& a, const Rational& b) { return !(a == b); }
    friend bool operator<(const Rational& a, const Rational& b) {
        return i128(a.num_) * b.den_ < i128(b.num_) * a.den_;
    }
    friend bool operator>(const Rational& a, const Rational& b) { return b < a; }
    friend bool operator<=(const Rational& a, const Rational& b) { return !(b < a); }
    friend bool operator>=(const Rational& a, const Rational& b) { return !(a < b); }

    double to_double() const {
        return static_cast<double>(num_) / static_cast<double>(den_);
    }

    // "p/q", or just "p" for integers
    std::string str() const {
        if (den_ == 1) return std::to_string(num_);
        return std::to_string(num_) + "/" + std::to_string(den_);
    }

    static Rational parse(const std::string& s) {
        auto slash = s.find('/');
        if (slash == std::string::npos) return Rational(parse_int(s));
        return Rational(parse_int(s.substr(0, slash)),
                        parse_int(s.substr(slash + 1)));
    }

    // Decimal text ("2.50", "-0.125") to an exact value; exponents rejected.
    static Rational parse_decimal(const std::string& s) {
        auto dot = s.find('.');
        if (dot == std::string::npos) return Rational(parse_int(s));
        std::string ip = s.substr(0, dot), fp = s.substr(dot + 1);
        if (fp.empty()) return Rational(parse_int(ip));
        bool neg = !ip.empty() && ip[0] == '-';
        std::int64_t scale = 1;
        for (char c : fp) {
            if (c < '0' || c > '9')
                throw std::invalid_argument("rational: bad decimal '" + s + "'");
            if (scale > (INT64_MAX / 10))
                throw std::overflow_error("rational: decimal too long");
            scale *= 10;
            (void)c;
        }
        std::int64_t whole = parse_int(ip.empty() || ip == "-" ? ip + "0" : ip);
        std::int64_t frac = parse_int(fp);
        i128 n = i128(whole) * scale + (neg ? -i128(frac) : i128(frac));
        return from128(n, scale);
    }

private:
    using i128 = __int128;

    std::int64_t num_, den_;

    void normalize() {
        if (den_ < 0) {
            num_ = -num_;
            den_ = -den_;
        }
        std::int64_t g = std::gcd(num_ < 0 ? -num_ : num_, den_);
        if (g > 1) {
            num_ /= g;
            den_ /= g;
        }
    }

    static i128 gcd128(i128 a, i128 b) {
        if (a < 0) a = -a;
        if (b < 0) b = -b;
        while (b) {
            i128 t = a % b;
            a = b;
            b = t;
        }
        return a;
    }

    static Rational from128(i128 n, i128 d) {
        if (d == 0) throw std::invalid_argument("rational: zero denominator");
        if (d < 0) {
            n = -n;
            d = -d;
        }
        i128 g = gcd128(n, d);
        if (g > 1) {
            n /= g;
            d /= g;
        }
        if (n > INT64_MAX || n < INT64_MIN || d > INT64_MAX)
            throw std::overflow_error("rational: value out of 64-bit range");
        Rational r;
        r.num_ = static_cast<std::int64_t>(n);
        r.den_ = static_cast<std::int64_t>(d);
        return r;
    }

    static std::int64_t parse_int(const std::string& s) {
        if (s.empty()) throw std::invalid_argument("rational: empty number");
        std::size_t pos = 0;
        long long v;
        try {
            v = std::stoll(s, &pos);
        } catch (const std::exception&) {
            throw std::invalid_argument("rational: bad number '" + s + "'");
        }
        if (pos != s.size())
            throw std::invalid_argument("rational: trailing junk in '" + s + "'");
        return v;
    }
};

}  // namespace vrmorse
