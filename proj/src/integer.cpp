#include "loggw/integer.hpp"

#include "loggw/errors.hpp"

#include <limits>

namespace loggw {

void Int::assign(const mpz_class& z) {
    if (mpz_fits_slong_p(z.get_mpz_t())) {
        v_ = mpz_get_si(z.get_mpz_t());
        b_.reset();
    } else {
        v_ = 0;
        b_ = std::make_shared<const mpz_class>(z);
    }
}

Int Int::from_string(std::string_view s) {
    std::string t(s);
    mpz_class z;
    if (t.empty() || z.set_str(t, 10) != 0)
        throw ValidationError("not an integer: '" + t + "'");
    return Int(z);
}

int64_t Int::to_int64() const {
    if (b_) throw CapacityError("integer does not fit in 64 bits: " + str());
    return v_;
}

std::string Int::str() const {
    if (b_) return b_->get_str();
    return std::to_string(v_);
}

double Int::to_double() const { return b_ ? b_->get_d() : static_cast<double>(v_); }

Int Int::operator-() const {
    if (!b_ && v_ != std::numeric_limits<int64_t>::min()) return Int(static_cast<long long>(-v_));
    return Int(mpz_class(-to_mpz()));
}

Int& Int::operator+=(const Int& o) {
    if (!b_ && !o.b_) {
        int64_t r;
        if (!__builtin_add_overflow(v_, o.v_, &r)) {
            v_ = r;
            return *this;
        }
    }
    assign(to_mpz() + o.to_mpz());
    return *this;
}

Int& Int::operator-=(const Int& o) {
    if (!b_ && !o.b_) {
        int64_t r;
        if (!__builtin_sub_overflow(v_, o.v_, &r)) {
            v_ = r;
            return *this;
        }
    }
    assign(to_mpz() - o.to_mpz());
    return *this;
}

Int& Int::operator*=(const Int& o) {
    if (!b_ && !o.b_) {
        int64_t r;
        if (!__builtin_mul_overflow(v_, o.v_, &r)) {
            v_ = r;
            return *this;
        }
    }
    assign(to_mpz() * o.to_mpz());
    return *this;
}

Int operator/(const Int& a, const Int& b) {
    if (b.is_zero()) throw InvariantError("integer division by zero");
    if (!a.b_ && !b.b_ && !(a.v_ == std::numeric_limits<int64_t>::min() && b.v_ == -1))
        return Int(static_cast<long long>(a.v_ / b.v_));
    mpz_class q;
    mpz_tdiv_q(q.get_mpz_t(), a.to_mpz().get_mpz_t(), b.to_mpz().get_mpz_t());
    return Int(q);
}

Int operator%(const Int& a, const Int& b) {
    if (b.is_zero()) throw InvariantError("integer division by zero");
    if (!a.b_ && !b.b_ && b.v_ != -1) return Int(static_cast<long long>(a.v_ % b.v_));
    if (!a.b_ && !b.b_) return Int(0);
    mpz_class r;
    mpz_tdiv_r(r.get_mpz_t(), a.to_mpz().get_mpz_t(), b.to_mpz().get_mpz_t());
    return Int(r);
}

std::strong_ordering operator<=>(const Int& a, const Int& b) {
    if (!a.b_ && !b.b_) return a.v_ <=> b.v_;
    int c = cmp(a.to_mpz(), b.to_mpz());
    return c < 0 ? std::strong_ordering::less
                 : (c > 0 ? std::strong_ordering::greater : std::strong_ordering::equal);
}

std::size_t Int::hash() const {
    if (!b_) return std::hash<int64_t>{}(v_);
    return std::hash<std::string>{}(b_->get_str(16));
}

Int abs(const Int& a) { return a.sign() < 0 ? -a : a; }

Int gcd(const Int& a, const Int& b) {
    if (a.is_small() && b.is_small()) {
        int64_t x = a.to_int64(), y = b.to_int64();
        if (x != std::numeric_limits<int64_t>::min() && y != std::numeric_limits<int64_t>::min()) {
            x = x < 0 ? -x : x;
            y = y < 0 ? -y : y;
            while (y != 0) {
                int64_t t = x % y;
                x = y;
                y = t;
            }
            return Int(static_cast<long long>(x));
        }
    }
    mpz_class g;
    mpz_gcd(g.get_mpz_t(), a.to_mpz().get_mpz_t(), b.to_mpz().get_mpz_t());
    return Int(g);
}

Int lcm(const Int& a, const Int& b) {
    if (a.is_zero() || b.is_zero()) return Int(0);
    return abs(a / gcd(a, b) * b);
}

Int floor_div(const Int& a, const Int& b) {
    Int q = a / b;
    Int r = a - q * b;
    if (!r.is_zero() && ((r.sign() < 0) != (b.sign() < 0))) q -= Int(1);
    return q;
}

Int floor_mod(const Int& a, const Int& b) { return a - floor_div(a, b) * b; }

Int ceil_div(const Int& a, const Int& b) { return -floor_div(-a, b); }

Int ext_gcd(const Int& a, const Int& b, Int& s, Int& t) {
    // Prefer the trivial combination when a already divides b.
    if (!a.is_zero() && (b % a).is_zero()) {
        s = a.sign();
        t = 0;
        return abs(a);
    }
    Int old_r = a, r = b, old_s = 1, cur_s = 0, old_t = 0, cur_t = 1;
    while (!r.is_zero()) {
        Int q = floor_div(old_r, r);
        Int tmp = old_r - q * r;
        old_r = r;
        r = tmp;
        tmp = old_s - q * cur_s;
        old_s = cur_s;
        cur_s = tmp;
        tmp = old_t - q * cur_t;
        old_t = cur_t;
        cur_t = tmp;
    }
    if (old_r.sign() < 0) {
        old_r = -old_r;
        old_s = -old_s;
        old_t = -old_t;
    }
    s = old_s;
    t = old_t;
    return old_r;
}

bool divides(const Int& d, const Int& a) {
    if (d.is_zero()) return a.is_zero();
    return (a % d).is_zero();
}

std::ostream& operator<<(std::ostream& os, const Int& a) { return os << a.str(); }

Rat to_rat(const Int& a) { return Rat(a.to_mpz()); }

Rat make_rat(const Int& num, const Int& den) {
    if (den.is_zero()) throw InvariantError("rational with zero denominator");
    Rat r(num.to_mpz(), den.to_mpz());
    r.canonicalize();
    return r;
}

Int rat_num(const Rat& r) { return Int(mpz_class(r.get_num())); }
Int rat_den(const Rat& r) { return Int(mpz_class(r.get_den())); }
bool rat_is_integer(const Rat& r) { return r.get_den() == 1; }

std::string rat_str(const Rat& r) { return r.get_str(); }

Rat rat_from_string(std::string_view s) {
    Rat r;
    if (s.empty() || r.set_str(std::string(s), 10) != 0)
        throw ValidationError("not a rational number: '" + std::string(s) + "'");
    if (r.get_den() == 0) throw ValidationError("rational with zero denominator");
    r.canonicalize();
    return r;
}

}  // namespace loggw
