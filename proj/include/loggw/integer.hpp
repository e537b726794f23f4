#pragma once

#include <gmpxx.h>

#include <compare>
#include <cstdint>
#include <functional>
#include <memory>
#include <ostream>
#include <string>
#include <string_view>

namespace loggw {

// Exact integer. Values that fit in int64 are stored inline; anything larger
// is promoted to a shared immutable GMP integer and demoted again when it fits.
class Int {
public:
    Int() = default;
    Int(int v) : v_(v) {}
    Int(long v) : v_(v) {}
    Int(long long v) : v_(v) {}
    Int(unsigned v) : v_(v) {}
    explicit Int(const mpz_class& z) { assign(z); }

    static Int from_string(std::string_view s);

    bool is_small() const { return !b_; }
    bool fits_int64() const { return !b_; }
    int64_t to_int64() const;
    mpz_class to_mpz() const { return b_ ? *b_ : mpz_class(static_cast<long>(v_)); }
    std::string str() const;
    double to_double() const;

    int sign() const {
        if (b_) return sgn(*b_);
        return (v_ > 0) - (v_ < 0);
    }
    bool is_zero() const { return !b_ && v_ == 0; }
    bool is_one() const { return !b_ && v_ == 1; }

    Int operator-() const;
    Int& operator+=(const Int& o);
    Int& operator-=(const Int& o);
    Int& operator*=(const Int& o);

    friend Int operator+(Int a, const Int& b) { return a += b; }
    friend Int operator-(Int a, const Int& b) { return a -= b; }
    friend Int operator*(Int a, const Int& b) { return a *= b; }
    // Truncating division and remainder, matching built-in integer semantics.
    friend Int operator/(const Int& a, const Int& b);
    friend Int operator%(const Int& a, const Int& b);

    friend bool operator==(const Int& a, const Int& b) {
        if (!a.b_ && !b.b_) return a.v_ == b.v_;
        if (a.b_ && b.b_) return *a.b_ == *b.b_;
        return false;  // normalized: a big value never fits in int64
    }
    friend std::strong_ordering operator<=>(const Int& a, const Int& b);

    std::size_t hash() const;

private:
    void assign(const mpz_class& z);

    int64_t v_ = 0;
    std::shared_ptr<const mpz_class> b_;
};

Int abs(const Int& a);
Int gcd(const Int& a, const Int& b);
Int lcm(const Int& a, const Int& b);
// Floor division and the matching nonnegative remainder for positive divisors.
Int floor_div(const Int& a, const Int& b);
Int floor_mod(const Int& a, const Int& b);
Int ceil_div(const Int& a, const Int& b);
// Extended gcd: returns g = gcd(a,b) >= 0 with g = s*a + t*b.
Int ext_gcd(const Int& a, const Int& b, Int& s, Int& t);
bool divides(const Int& d, const Int& a);

std::ostream& operator<<(std::ostream& os, const Int& a);

using Rat = mpq_class;

Rat to_rat(const Int& a);
Rat make_rat(const Int& num, const Int& den);
Int rat_num(const Rat& r);
Int rat_den(const Rat& r);
bool rat_is_integer(const Rat& r);
std::string rat_str(const Rat& r);
Rat rat_from_string(std::string_view s);

}  // namespace loggw

template <>
struct std::hash<loggw::Int> {
    std::size_t operator()(const loggw::Int& a) const noexcept { return a.hash(); }
};
