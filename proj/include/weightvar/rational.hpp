#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <cctype>
#include <compare>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "error.hpp"

namespace weightvar {

using integer = boost::multiprecision::cpp_int;

/// Exact rational number, always normalized (gcd(num, den) = 1, den > 0).
/// Integral values skip all gcd work, which is the common case here.
class rational {
public:
    rational() = default;
    rational(int v) : num_(v) {}
    rational(long v) : num_(v) {}
    rational(long long v) : num_(v) {}
    rational(integer v) : num_(std::move(v)) {}
    rational(integer num, integer den) : num_(std::move(num)), den_(std::move(den)) { normalize(); }

    const integer& num() const noexcept { return num_; }
    const integer& den() const noexcept { return den_; }
    int sign() const { return num_.sign(); }

    rational& operator+=(const rational& o) {
        if (den_ == 1 && o.den_ == 1) {
            num_ += o.num_;
        } else {
            num_ = num_ * o.den_ + o.num_ * den_;
            den_ *= o.den_;
            normalize();
        }
        return *this;
    }
    rational& operator-=(const rational& o) {
        if (den_ == 1 && o.den_ == 1) {
            num_ -= o.num_;
        } else {
            num_ = num_ * o.den_ - o.num_ * den_;
            den_ *= o.den_;
            normalize();
        }
        return *this;
    }
    rational& operator*=(const rational& o) {
        num_ *= o.num_;
        if (den_ != 1 || o.den_ != 1) {
            den_ *= o.den_;
            normalize();
        }
        return *this;
    }
    rational& operator/=(const rational& o) {
        if (o.num_ == 0)
            throw std::domain_error("rational division by zero");
        num_ *= o.den_;
        den_ *= o.num_;
        normalize();
        return *this;
    }

    friend rational operator+(rational a, const rational& b) { return a += b; }
    friend rational operator-(rational a, const rational& b) { return a -= b; }
    friend rational operator*(rational a, const rational& b) { return a *= b; }
    friend rational operator/(rational a, const rational& b) { return a /= b; }
    friend rational operator-(rational a) {
        a.num_ = -a.num_;
        return a;
    }

    friend bool operator==(const rational& a, const rational& b) { return a.num_ == b.num_ && a.den_ == b.den_; }
    friend std::strong_ordering operator<=>(const rational& a, const rational& b) {
        integer l = a.den_ == b.den_ ? a.num_ : integer(a.num_ * b.den_);
        integer r = a.den_ == b.den_ ? b.num_ : integer(b.num_ * a.den_);
        if (l < r)
            return std::strong_ordering::less;
        if (l > r)
            return std::strong_ordering::greater;
        return std::strong_ordering::equal;
    }

private:
    void normalize() {
        if (den_ == 0)
            throw std::domain_error("rational with zero denominator");
        if (den_ < 0) {
            num_ = -num_;
            den_ = -den_;
        }
        if (den_ == 1)
            return;
        integer g = boost::multiprecision::gcd(num_, den_);
        if (g != 1) {
            num_ /= g;
            den_ /= g;
        }
        if (num_ == 0)
            den_ = 1;
    }

    integer num_ = 0;
    integer den_ = 1;
};

inline const integer& numerator(const rational& q) { return q.num(); }
inline const integer& denominator(const rational& q) { return q.den(); }

inline bool is_integral(const rational& q) { return q.den() == 1; }

inline int sign(const rational& q) { return q.sign(); }

/// "p" for integers, "p/q" otherwise; q > 0 and gcd(p, q) = 1.
inline std::string to_string(const rational& q) {
    if (is_integral(q))
        return numerator(q).str();
    return numerator(q).str() + "/" + denominator(q).str();
}

namespace detail {

inline bool all_digits(std::string_view s) {
    if (s.empty())
        return false;
    for (char c : s)
        if (!std::isdigit(static_cast<unsigned char>(c)))
            return false;
    return true;
}

} // namespace detail

/// Parses "p", "p/q" or an exact decimal such as "-0.125". Exponent
/// notation, inf and nan are rejected because they are not exact inputs.
inline rational parse_rational(std::string_view text) {
    auto fail = [&] {
        return error(errc::invalid_config, "not an exact rational: '" + std::string(text) + "'");
    };
    std::string_view s = text;
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front())))
        s.remove_prefix(1);
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back())))
        s.remove_suffix(1);
    bool negative = false;
    if (!s.empty() && (s.front() == '-' || s.front() == '+')) {
        negative = s.front() == '-';
        s.remove_prefix(1);
    }
    rational value;
    if (auto slash = s.find('/'); slash != std::string_view::npos) {
        auto num = s.substr(0, slash);
        auto den = s.substr(slash + 1);
        if (!detail::all_digits(num) || !detail::all_digits(den))
            throw fail();
        integer d{std::string(den)};
        if (d == 0)
            throw fail();
        value = rational(integer(std::string(num)), d);
    } else if (auto dot = s.find('.'); dot != std::string_view::npos) {
        auto whole = s.substr(0, dot);
        auto frac = s.substr(dot + 1);
        if ((whole.empty() && frac.empty()) || (!whole.empty() && !detail::all_digits(whole)) ||
            (!frac.empty() && !detail::all_digits(frac)))
            throw fail();
        integer scale = boost::multiprecision::pow(integer(10), static_cast<unsigned>(frac.size()));
        integer w = whole.empty() ? integer(0) : integer(std::string(whole));
        integer f = frac.empty() ? integer(0) : integer(std::string(frac));
        value = rational(w * scale + f, scale);
    } else {
        if (!detail::all_digits(s))
            throw fail();
        value = rational(integer(std::string(s)));
    }
    return negative ? rational(-value) : value;
}

/// Comma-separated list of exact rationals.
inline std::vector<rational> parse_rational_list(std::string_view text) {
    std::vector<rational> out;
    std::size_t start = 0;
    while (true) {
        auto comma = text.find(',', start);
        out.push_back(parse_rational(text.substr(start, comma == std::string_view::npos ? text.npos : comma - start)));
        if (comma == std::string_view::npos)
            break;
        start = comma + 1;
    }
    return out;
}

} // namespace weightvar
