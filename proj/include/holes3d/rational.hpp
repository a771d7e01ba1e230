#ifndef HOLES3D_RATIONAL_HPP
#define HOLES3D_RATIONAL_HPP

#include <boost/multiprecision/gmp.hpp>

#include <compare>
#include <cstdint>
#include <ostream>
#include <string>

#include "holes3d/errors.hpp"

namespace holes3d {

using Int = boost::multiprecision::mpz_int;

/**
 * Arbitrary-precision rational scalar with a hard canonical-form invariant:
 * the stored value always has a positive denominator and gcd(num, den) == 1.
 *
 * The raw GMP-backed rational type is deliberately kept out of public
 * interfaces because its two-integer constructor does not canonicalize (and
 * mishandles negative denominators), its string constructor accepts
 * non-reduced input verbatim, and division by zero raises SIGFPE instead of
 * throwing. Every constructor and operator here funnels through checked,
 * canonicalizing paths so none of those behaviours can leak into callers.
 */
class Rat {
public:
    Rat() : v_(0) {}
    Rat(int n) : v_(n) {}
    Rat(long n) : v_(n) {}
    Rat(long long n) : v_(static_cast<std::int64_t>(n)) {}
    Rat(const Int& n) : v_(n) {}

    /// Builds num/den in lowest terms. Throws std::domain_error if den == 0.
    Rat(const Int& num, const Int& den) {
        if (den == 0) {
            throw std::domain_error("Rat: denominator is zero");
        }
        // Division through the backend canonicalizes sign and gcd.
        v_ = Backend(num);
        v_ /= Backend(den);
    }

    Rat(int num, int den) : Rat(Int(num), Int(den)) {}

    /**
     * Parses "p", "p/q", or decimal-free signed integers with optional
     * whitespace trimmed by the caller. Throws InputError on malformed text
     * (including a zero denominator), never a GMP-level abort.
     */
    static Rat parse(const std::string& text) {
        const auto is_integer_token = [](const std::string& s) {
            std::size_t i = 0;
            if (i < s.size() && (s[i] == '+' || s[i] == '-')) {
                ++i;
            }
            if (i == s.size()) {
                return false;
            }
            for (; i < s.size(); ++i) {
                if (s[i] < '0' || s[i] > '9') {
                    return false;
                }
            }
            return true;
        };
        const auto slash = text.find('/');
        try {
            if (slash == std::string::npos) {
                if (!is_integer_token(text)) {
                    throw InputError("Rat::parse: malformed rational \"" + text + "\"");
                }
                return Rat(Int(text));
            }
            if (text.find('/', slash + 1) != std::string::npos) {
                throw InputError("Rat::parse: more than one '/' in \"" + text + "\"");
            }
            const std::string num_text = text.substr(0, slash);
            const std::string den_text = text.substr(slash + 1);
            if (!is_integer_token(num_text) || !is_integer_token(den_text)) {
                throw InputError("Rat::parse: malformed rational \"" + text + "\"");
            }
            Int num(num_text);
            Int den(den_text);
            if (den == 0) {
                throw InputError("Rat::parse: zero denominator in \"" + text + "\"");
            }
            return Rat(num, den);
        } catch (const InputError&) {
            throw;
        } catch (const std::exception&) {
            throw InputError("Rat::parse: malformed rational \"" + text + "\"");
        }
    }

    Int numerator() const { return Int(boost::multiprecision::numerator(v_)); }
    Int denominator() const { return Int(boost::multiprecision::denominator(v_)); }

    bool is_zero() const { return v_.is_zero(); }
    int sign() const { return v_.sign(); }

    Rat operator-() const {
        Rat r;
        r.v_ = -v_;
        return r;
    }

    Rat& operator+=(const Rat& o) { v_ += o.v_; return *this; }
    Rat& operator-=(const Rat& o) { v_ -= o.v_; return *this; }
    Rat& operator*=(const Rat& o) { v_ *= o.v_; return *this; }

    Rat& operator/=(const Rat& o) {
        if (o.v_.is_zero()) {
            throw std::domain_error("Rat: division by zero");
        }
        v_ /= o.v_;
        return *this;
    }

    friend Rat operator+(Rat a, const Rat& b) { a += b; return a; }
    friend Rat operator-(Rat a, const Rat& b) { a -= b; return a; }
    friend Rat operator*(Rat a, const Rat& b) { a *= b; return a; }
    friend Rat operator/(Rat a, const Rat& b) { a /= b; return a; }

    friend bool operator==(const Rat& a, const Rat& b) { return a.v_ == b.v_; }
    friend bool operator!=(const Rat& a, const Rat& b) { return a.v_ != b.v_; }
    friend bool operator<(const Rat& a, const Rat& b) { return a.v_ < b.v_; }
    friend bool operator<=(const Rat& a, const Rat& b) { return a.v_ <= b.v_; }
    friend bool operator>(const Rat& a, const Rat& b) { return a.v_ > b.v_; }
    friend bool operator>=(const Rat& a, const Rat& b) { return a.v_ >= b.v_; }

    Rat abs() const { return sign() < 0 ? -*this : *this; }

    /// Largest integer <= value.
    Int floor() const {
        Int q, r;
        boost::multiprecision::divide_qr(numerator(), denominator(), q, r);
        if (r != 0 && numerator() < 0) {
            --q;
        }
        return q;
    }

    /// Smallest integer >= value.
    Int ceil() const {
        Int q, r;
        boost::multiprecision::divide_qr(numerator(), denominator(), q, r);
        if (r != 0 && numerator() > 0) {
            ++q;
        }
        return q;
    }

    /// Canonical text form: "p" for integers, otherwise "p/q" with q > 1.
    std::string str() const {
        if (denominator() == 1) {
            return numerator().str();
        }
        return numerator().str() + "/" + denominator().str();
    }

    friend std::ostream& operator<<(std::ostream& os, const Rat& r) {
        return os << r.str();
    }

private:
    using Backend = boost::multiprecision::mpq_rational;
    Backend v_;
};

/**
 * Renders the exact value rounded to `digits` places after the decimal point,
 * rounding halves away from zero. Output always carries exactly `digits`
 * fractional digits (zero digits yields a bare integer), so exports are
 * byte-stable across runs.
 */
inline std::string to_decimal_string(const Rat& r, unsigned digits) {
    Int pow10(1);
    for (unsigned i = 0; i < digits; ++i) {
        pow10 *= 10;
    }
    // Round |r| * 10^digits half away from zero.
    Int num = r.numerator() * pow10;
    const Int den = r.denominator();
    const bool negative = num < 0;
    if (negative) {
        num = -num;
    }
    Int q, rem;
    boost::multiprecision::divide_qr(num, den, q, rem);
    if (2 * rem >= den) {
        ++q;
    }
    std::string body = q.str();
    if (digits > 0) {
        if (body.size() <= digits) {
            body.insert(0, digits + 1 - body.size(), '0');
        }
        body.insert(body.size() - digits, ".");
    }
    if (negative && q != 0) {
        body.insert(0, "-");
    }
    return body;
}

} // namespace holes3d

#endif
