#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "cycoh/abgroup.hpp"
#include "cycoh/integer.hpp"

namespace cycoh {

/// Element of H^*(BZ/m, Z) = Z[x]/(mx), deg x = 2. The constant term lives
/// in Z, every higher coefficient in Z/m (stored in [0, m), trailing zeros
/// trimmed).
class BgPolynomial {
public:
    explicit BgPolynomial(Int m);
    BgPolynomial(Int m, Int c0, std::vector<Int> higher);

    const Int& m() const { return m_; }
    const Int& c0() const { return c0_; }
    /// higher()[k-1] is the coefficient of x^k.
    const std::vector<Int>& higher() const { return higher_; }
    /// Coefficient of x^k for any k >= 0.
    Int coefficient(std::size_t k) const;
    std::size_t degree_bound() const { return higher_.size(); }
    bool is_zero() const { return c0_.is_zero() && higher_.empty(); }

    friend bool operator==(const BgPolynomial&, const BgPolynomial&) = default;

private:
    Int m_;
    Int c0_;
    std::vector<Int> higher_;
};

BgPolynomial bg_mul(const BgPolynomial& p, const BgPolynomial& q);

/// c1(rho^j)^k = (jx)^k: j^k x^k for k >= 1, the constant 1 for k = 0.
BgPolynomial c1_power_character(const Int& m, const Int& j, std::int64_t k);

/// Top equivariant Chern class of E tensor rho^j on a trivially-acted base:
/// sum over i of c_i (jx)^(n-i) where chern = (c_0, ..., c_n), c_0 = 1. The
/// x^0 term is c_n over Z; all x-terms are folded mod m.
BgPolynomial top_chern_tensor_character(const std::vector<Int>& chern, const Int& j,
                                        const Int& m);

/// Ranks n_0..n_(m-1) of the isotypic pieces E_j of an equivariant bundle
/// over a trivially-acted base; missing trailing ranks are zero.
struct IsotypicRanks {
    Int m;
    std::vector<std::int64_t> ranks;
};

void validate(const IsotypicRanks& r);

/// Leading coefficient of the top equivariant Chern class: the product of
/// j^(n_j) mod m, with 0^0 = 1, so any n_0 > 0 forces 0.
Int top_chern_leading_coefficient(const IsotypicRanks& r);

/// True iff that leading coefficient is a unit mod m, the criterion for the
/// composite of the Gysin map with restriction to be invertible.
bool gysin_unit_check(const IsotypicRanks& r);

/// Element of H^*_G(P^1, Z) = Z[x,h]/(mx, h^2 + xh), deg x = deg h = 2.
/// Coefficients of 1 and h live over Z; x^k and x^k h (k >= 1) mod m.
class P1RingElement {
public:
    explicit P1RingElement(Int m);
    P1RingElement(Int m, Int a0, Int b1, std::vector<Int> xk, std::vector<Int> xkh);

    const Int& m() const { return m_; }
    const Int& a0() const { return a0_; }
    const Int& b1() const { return b1_; }
    /// xk()[k-1] is the coefficient of x^k, xkh()[k-1] that of x^k h.
    const std::vector<Int>& xk() const { return xk_; }
    const std::vector<Int>& xkh() const { return xkh_; }
    bool is_zero() const;

    friend bool operator==(const P1RingElement&, const P1RingElement&) = default;

private:
    Int m_;
    Int a0_;
    Int b1_;
    std::vector<Int> xk_;
    std::vector<Int> xkh_;
};

P1RingElement p1_mul(const P1RingElement& a, const P1RingElement& b);

/// The degree-d graded piece of the ring: Z, then Z + Z/m in degree 2, then
/// (Z/m)^2 in higher even degrees; 0 in odd degrees.
FinAbGroup p1_graded_piece(const Int& m, std::int64_t degree);

enum class P1Point { kZero, kInfinity };

/// Gysin pushforward of a BG class from the fixed point: multiplication by
/// h + x for the section at 0, by h for the section at infinity.
P1RingElement p1_gysin(const Int& m, P1Point point, const BgPolynomial& cls);

/// Joint injectivity mod m of the two multiplication maps u, v (homogeneous
/// of degree 2): in each even degree <= max_degree, (alpha, beta) ->
/// u*alpha + v*beta from two copies of H^*(BG) tensor Z/m must have trivial
/// kernel, checked by exact lattice arithmetic.
bool p1_pair_injectivity(const Int& m, std::int64_t max_degree, const P1RingElement& u,
                         const P1RingElement& v);

/// The criterion for the actual Gysin pair (h + x, h).
bool p1_gysin_injectivity(const Int& m, std::int64_t max_degree);

/// Rendering: "3 + 2x + x^2" and "h + x + 5x^2h" (constant, h, x^k
/// ascending, x^k h ascending); negative Z-coefficients render with " - ".
/// Parsers accept the same syntax and normalize.
std::string to_string(const BgPolynomial& p);
std::string to_string(const P1RingElement& a);
BgPolynomial bg_polynomial_from_string(const Int& m, const std::string& text);
P1RingElement p1_element_from_string(const Int& m, const std::string& text);

}  // namespace cycoh
