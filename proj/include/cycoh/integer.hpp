#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <compare>
#include <cstdint>
#include <limits>
#include <ostream>
#include <string>
#include <utility>

#include "cycoh/errors.hpp"

namespace cycoh {

/// Arbitrary-precision signed integer, the scalar type of every matrix in the
/// library. A thin value wrapper around boost::multiprecision::cpp_int with
/// exactly the operations Eigen and the normal-form algorithms need; the
/// wrapper keeps boost's generic constructors out of Eigen's overload sets.
class Int {
  public:
    using Rep = boost::multiprecision::cpp_int;

    Int() = default;
    Int(int v) : v_(v) {}
    Int(long v) : v_(v) {}
    Int(long long v) : v_(v) {}
    Int(unsigned v) : v_(v) {}
    explicit Int(Rep v) : v_(std::move(v)) {}
    explicit Int(const std::string& decimal) : v_(decimal) {}

    const Rep& rep() const { return v_; }

    bool is_zero() const { return v_.is_zero(); }
    int sign() const { return v_.sign(); }

    Int& operator+=(const Int& o) {
        v_ += o.v_;
        return *this;
    }
    Int& operator-=(const Int& o) {
        v_ -= o.v_;
        return *this;
    }
    Int& operator*=(const Int& o) {
        v_ *= o.v_;
        return *this;
    }
    /// Truncated division (C++ semantics).
    Int& operator/=(const Int& o) {
        v_ /= o.v_;
        return *this;
    }
    Int& operator%=(const Int& o) {
        v_ %= o.v_;
        return *this;
    }
    Int operator-() const { return Int(Rep(-v_)); }

    friend Int operator+(Int a, const Int& b) { return a += b; }
    friend Int operator-(Int a, const Int& b) { return a -= b; }
    friend Int operator*(Int a, const Int& b) { return a *= b; }
    friend Int operator/(Int a, const Int& b) { return a /= b; }
    friend Int operator%(Int a, const Int& b) { return a %= b; }

    friend bool operator==(const Int& a, const Int& b) { return a.v_ == b.v_; }
    friend std::strong_ordering operator<=>(const Int& a, const Int& b) {
        return a.v_.compare(b.v_) <=> 0;
    }

    std::string str() const { return v_.str(); }

  private:
    Rep v_;
};

inline std::ostream& operator<<(std::ostream& os, const Int& x) { return os << x.rep(); }

inline Int abs(const Int& x) { return x < 0 ? -x : x; }

inline Int gcd(const Int& a, const Int& b) {
    return Int(boost::multiprecision::gcd(a.rep(), b.rep()));
}

inline Int lcm(const Int& a, const Int& b) {
    return Int(boost::multiprecision::lcm(a.rep(), b.rep()));
}

inline bool divides(const Int& d, const Int& a) {
    if (d.is_zero()) return a.is_zero();
    return (a % d).is_zero();
}

/// Quotient a/d asserting exact divisibility.
inline Int div_exact(const Int& a, const Int& d) {
    if (!divides(d, a)) throw NoSolutionError("div_exact: " + a.str() + " not divisible by " + d.str());
    return a / d;
}

/// Nonnegative remainder in [0, m).
inline Int mod_floor(const Int& a, const Int& m) {
    Int r = a % m;
    if (r < 0) r += abs(m);
    return r;
}

inline std::int64_t to_int64(const Int& x) {
    static const Int kMin(std::numeric_limits<std::int64_t>::min());
    static const Int kMax(std::numeric_limits<std::int64_t>::max());
    if (x < kMin || x > kMax) throw Error("integer does not fit in 64 bits: " + x.str());
    return x.rep().convert_to<std::int64_t>();
}

/// b^e mod m, for e >= 0, result in [0, m).
inline Int pow_mod(Int base, std::int64_t exp, const Int& m) {
    Int result(1);
    base = mod_floor(base, m);
    for (; exp > 0; exp >>= 1) {
        if (exp & 1) result = mod_floor(result * base, m);
        base = mod_floor(base * base, m);
    }
    return result;
}

}  // namespace cycoh
