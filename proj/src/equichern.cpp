#include "cycoh/equichern.hpp"

#include "cycoh/intlinalg.hpp"

#include <cctype>
#include <cstddef>
#include <sstream>
#include <utility>

namespace cycoh {

namespace {

constexpr long long kMaxParsedExponent = 1'000'000;

void require_order(const Int& m, const char* where) {
    if (m.sign() <= 0) throw InvalidInputError(std::string(where) + ": modulus must be >= 1");
}

void require_same_modulus(const Int& a, const Int& b, const char* where) {
    if (a != b) throw ModulusMismatchError(std::string(where) + ": moduli differ");
}

void reduce_and_trim(std::vector<Int>& coeffs, const Int& m) {
    for (Int& c : coeffs) c = mod_floor(c, m);
    while (!coeffs.empty() && coeffs.back().is_zero()) coeffs.pop_back();
}

}  // namespace

BgPolynomial::BgPolynomial(Int m) : m_(std::move(m)), c0_(0) {
    require_order(m_, "BgPolynomial");
}

BgPolynomial::BgPolynomial(Int m, Int c0, std::vector<Int> higher)
    : m_(std::move(m)), c0_(std::move(c0)), higher_(std::move(higher)) {
    require_order(m_, "BgPolynomial");
    reduce_and_trim(higher_, m_);
}

Int BgPolynomial::coefficient(std::size_t k) const {
    if (k == 0) return c0_;
    return k <= higher_.size() ? higher_[k - 1] : Int(0);
}

BgPolynomial bg_mul(const BgPolynomial& p, const BgPolynomial& q) {
    require_same_modulus(p.m(), q.m(), "bg_mul");
    const std::size_t dp = p.degree_bound();
    const std::size_t dq = q.degree_bound();
    std::vector<Int> prod(dp + dq + 1, Int(0));
    for (std::size_t i = 0; i <= dp; ++i)
        for (std::size_t j = 0; j <= dq; ++j) prod[i + j] += p.coefficient(i) * q.coefficient(j);
    Int c0 = std::move(prod.front());
    prod.erase(prod.begin());
    return BgPolynomial(p.m(), std::move(c0), std::move(prod));
}

BgPolynomial c1_power_character(const Int& m, const Int& j, std::int64_t k) {
    require_order(m, "c1_power_character");
    if (k < 0) throw InvalidInputError("c1_power_character: negative exponent");
    if (k == 0) return BgPolynomial(m, Int(1), {});
    std::vector<Int> higher(static_cast<std::size_t>(k), Int(0));
    higher.back() = pow_mod(mod_floor(j, m), k, m);
    return BgPolynomial(m, Int(0), std::move(higher));
}

BgPolynomial top_chern_tensor_character(const std::vector<Int>& chern, const Int& j,
                                        const Int& m) {
    require_order(m, "top_chern_tensor_character");
    if (chern.empty() || chern.front() != Int(1))
        throw InvalidInputError("top_chern_tensor_character: total Chern class must start with 1");
    const std::size_t n = chern.size() - 1;
    const Int jm = mod_floor(j, m);
    std::vector<Int> higher(n, Int(0));
    for (std::size_t i = 0; i < n; ++i) {
        const std::size_t power = n - i;  // x-degree of the c_i (jx)^(n-i) term
        higher[power - 1] += chern[i] * pow_mod(jm, static_cast<std::int64_t>(power), m);
    }
    return BgPolynomial(m, chern.back(), std::move(higher));
}

void validate(const IsotypicRanks& r) {
    require_order(r.m, "IsotypicRanks");
    if (static_cast<std::int64_t>(r.ranks.size()) > to_int64(r.m))
        throw InvalidInputError("IsotypicRanks: more weights than characters mod m");
    for (std::int64_t n : r.ranks)
        if (n < 0) throw InvalidInputError("IsotypicRanks: negative rank");
}

Int top_chern_leading_coefficient(const IsotypicRanks& r) {
    validate(r);
    if (!r.ranks.empty() && r.ranks.front() > 0) return Int(0);  // a weight-0 factor
    Int result(1);
    for (std::size_t j = 1; j < r.ranks.size(); ++j) {
        if (r.ranks[j] == 0) continue;
        result = mod_floor(result * pow_mod(Int(static_cast<long long>(j)), r.ranks[j], r.m),
                           r.m);
    }
    return mod_floor(result, r.m);
}

bool gysin_unit_check(const IsotypicRanks& r) {
    return gcd(top_chern_leading_coefficient(r), r.m) == Int(1);
}

P1RingElement::P1RingElement(Int m) : m_(std::move(m)), a0_(0), b1_(0) {
    require_order(m_, "P1RingElement");
}

P1RingElement::P1RingElement(Int m, Int a0, Int b1, std::vector<Int> xk, std::vector<Int> xkh)
    : m_(std::move(m)),
      a0_(std::move(a0)),
      b1_(std::move(b1)),
      xk_(std::move(xk)),
      xkh_(std::move(xkh)) {
    require_order(m_, "P1RingElement");
    reduce_and_trim(xk_, m_);
    reduce_and_trim(xkh_, m_);
}

bool P1RingElement::is_zero() const {
    return a0_.is_zero() && b1_.is_zero() && xk_.empty() && xkh_.empty();
}

P1RingElement p1_mul(const P1RingElement& a, const P1RingElement& b) {
    require_same_modulus(a.m(), b.m(), "p1_mul");
    // Coefficient tables indexed by x-power, for the 1-part and the h-part.
    const auto table = [](const P1RingElement& e) {
        std::pair<std::vector<Int>, std::vector<Int>> t;
        t.first.assign(e.xk().size() + 1, Int(0));
        t.first[0] = e.a0();
        for (std::size_t k = 0; k < e.xk().size(); ++k) t.first[k + 1] = e.xk()[k];
        t.second.assign(e.xkh().size() + 1, Int(0));
        t.second[0] = e.b1();
        for (std::size_t k = 0; k < e.xkh().size(); ++k) t.second[k + 1] = e.xkh()[k];
        return t;
    };
    const auto [a_one, a_h] = table(a);
    const auto [b_one, b_h] = table(b);
    const std::size_t bound = a_one.size() + a_h.size() + b_one.size() + b_h.size() + 2;
    std::vector<Int> r_one(bound, Int(0));
    std::vector<Int> r_h(bound, Int(0));
    for (std::size_t i = 0; i < a_one.size(); ++i) {
        for (std::size_t j = 0; j < b_one.size(); ++j) r_one[i + j] += a_one[i] * b_one[j];
        for (std::size_t j = 0; j < b_h.size(); ++j) r_h[i + j] += a_one[i] * b_h[j];
    }
    for (std::size_t i = 0; i < a_h.size(); ++i) {
        for (std::size_t j = 0; j < b_one.size(); ++j) r_h[i + j] += a_h[i] * b_one[j];
        // x^i h * x^j h = x^(i+j) h^2 = -x^(i+j+1) h
        for (std::size_t j = 0; j < b_h.size(); ++j) r_h[i + j + 1] -= a_h[i] * b_h[j];
    }
    Int a0 = std::move(r_one.front());
    r_one.erase(r_one.begin());
    Int b1 = std::move(r_h.front());
    r_h.erase(r_h.begin());
    return P1RingElement(a.m(), std::move(a0), std::move(b1), std::move(r_one), std::move(r_h));
}

FinAbGroup p1_graded_piece(const Int& m, std::int64_t degree) {
    require_order(m, "p1_graded_piece");
    if (degree < 0) throw InvalidInputError("p1_graded_piece: negative degree");
    if (degree % 2 == 1) return FinAbGroup();
    if (degree == 0) return FinAbGroup::free_group(1);
    if (degree == 2) return FinAbGroup(1, std::vector<Int>{m});  // Z/m x + Z h
    return FinAbGroup(0, std::vector<Int>{m, m});  // Z/m x^k + Z/m x^(k-1) h
}

P1RingElement p1_gysin(const Int& m, P1Point point, const BgPolynomial& cls) {
    require_order(m, "p1_gysin");
    require_same_modulus(m, cls.m(), "p1_gysin");
    const P1RingElement embedded(m, cls.c0(), Int(0), cls.higher(), {});
    const P1RingElement multiplier =
        point == P1Point::kZero
            ? P1RingElement(m, Int(0), Int(1), {Int(1)}, {})  // h + x
            : P1RingElement(m, Int(0), Int(1), {}, {});       // h
    return p1_mul(multiplier, embedded);
}

bool p1_pair_injectivity(const Int& m, std::int64_t max_degree, const P1RingElement& u,
                         const P1RingElement& v) {
    require_order(m, "p1_pair_injectivity");
    if (max_degree < 0) throw InvalidInputError("p1_pair_injectivity: negative degree");
    require_same_modulus(m, u.m(), "p1_pair_injectivity");
    require_same_modulus(m, v.m(), "p1_pair_injectivity");
    for (const P1RingElement* e : {&u, &v})
        if (!e->a0().is_zero() || !e->xkh().empty() || e->xk().size() > 1)
            throw InvalidInputError("p1_pair_injectivity: multipliers must be homogeneous of degree 2");
    for (std::int64_t degree = 2; degree <= max_degree; degree += 2) {
        // Domain generator in degree d: alpha = x^((d-2)/2) from H^(d-2)(BG).
        const std::size_t j = static_cast<std::size_t>((degree - 2) / 2);
        std::vector<Int> xj(j, Int(0));
        if (j > 0) xj.back() = 1;
        const P1RingElement basis(m, j == 0 ? Int(1) : Int(0), Int(0), std::move(xj), {});
        const P1RingElement wu = p1_mul(u, basis);
        const P1RingElement wv = p1_mul(v, basis);
        // Degree-d coordinates of the target, both read mod m: the x^(d/2)
        // coefficient and the x^(d/2-1) h coefficient (h itself for d = 2).
        const auto coords = [degree](const P1RingElement& w) {
            const std::size_t half = static_cast<std::size_t>(degree / 2);
            const Int cx = half <= w.xk().size() ? w.xk()[half - 1] : Int(0);
            Int ch;
            if (degree == 2) ch = w.b1();
            else ch = half - 1 <= w.xkh().size() ? w.xkh()[half - 2] : Int(0);
            return std::pair<Int, Int>(cx, ch);
        };
        const auto [ux, uh] = coords(wu);
        const auto [vx, vh] = coords(wv);
        IntMatrix mat(2, 2);
        mat(0, 0) = ux;
        mat(1, 0) = uh;
        mat(0, 1) = vx;
        mat(1, 1) = vh;
        // Injectivity over Z/m: the lattice { z : mat z = 0 mod m } must be
        // exactly m Z^2; its generators are the top rows of the kernel of
        // [mat | m I].
        const IntMatrix solutions =
            kernel_basis(hcat(mat, IntMatrix::Identity(2, 2) * m)).topRows(2);
        for (Index r = 0; r < solutions.rows(); ++r)
            for (Index c = 0; c < solutions.cols(); ++c)
                if (!(solutions(r, c) % m).is_zero()) return false;
    }
    return true;
}

bool p1_gysin_injectivity(const Int& m, std::int64_t max_degree) {
    const P1RingElement h_plus_x(m, Int(0), Int(1), {Int(1)}, {});
    const P1RingElement h(m, Int(0), Int(1), {}, {});
    return p1_pair_injectivity(m, max_degree, h_plus_x, h);
}

namespace {

struct Term {
    Int coeff;
    std::string monomial;  // "", "x", "x^2", "h", "xh", "x^2h"
};

std::string join_terms(const std::vector<Term>& terms) {
    std::ostringstream out;
    bool first = true;
    for (const Term& t : terms) {
        if (t.coeff.is_zero()) continue;
        const Int a = abs(t.coeff);
        if (first) {
            if (t.coeff.sign() < 0) out << "-";
            first = false;
        } else {
            out << (t.coeff.sign() < 0 ? " - " : " + ");
        }
        if (a == Int(1) && !t.monomial.empty()) out << t.monomial;
        else out << a.str() << t.monomial;
    }
    return first ? "0" : out.str();
}

std::string x_power(std::size_t k) {
    if (k == 0) return "";
    if (k == 1) return "x";
    return "x^" + std::to_string(k);
}

}  // namespace

std::string to_string(const BgPolynomial& p) {
    std::vector<Term> terms;
    terms.push_back({p.c0(), ""});
    for (std::size_t k = 0; k < p.higher().size(); ++k)
        terms.push_back({p.higher()[k], x_power(k + 1)});
    return join_terms(terms);
}

std::string to_string(const P1RingElement& a) {
    std::vector<Term> terms;
    terms.push_back({a.a0(), ""});
    terms.push_back({a.b1(), "h"});
    for (std::size_t k = 0; k < a.xk().size(); ++k) terms.push_back({a.xk()[k], x_power(k + 1)});
    for (std::size_t k = 0; k < a.xkh().size(); ++k)
        terms.push_back({a.xkh()[k], x_power(k + 1) + "h"});
    return join_terms(terms);
}

namespace {

struct ParsedTerm {
    Int coeff;
    long long x_power = 0;
    bool has_h = false;
};

// One sign-free term: [digits] [x [^digits]] [h], at least one part present.
ParsedTerm parse_polynomial_term(const std::string& term, bool allow_h) {
    std::size_t pos = 0;
    ParsedTerm result{Int(1), 0, false};
    std::string digits;
    while (pos < term.size() && std::isdigit(static_cast<unsigned char>(term[pos])))
        digits += term[pos++];
    bool any = false;
    if (!digits.empty()) {
        result.coeff = Int(digits);
        any = true;
    }
    if (pos < term.size() && term[pos] == 'x') {
        ++pos;
        result.x_power = 1;
        if (pos < term.size() && term[pos] == '^') {
            ++pos;
            std::string exp;
            while (pos < term.size() && std::isdigit(static_cast<unsigned char>(term[pos])))
                exp += term[pos++];
            if (exp.empty() || exp.size() > 7)
                throw InvalidInputError("polynomial: bad exponent in '" + term + "'");
            result.x_power = std::stoll(exp);
            if (result.x_power < 1 || result.x_power > kMaxParsedExponent)
                throw InvalidInputError("polynomial: exponent out of range in '" + term + "'");
        }
        any = true;
    }
    if (pos < term.size() && term[pos] == 'h') {
        if (!allow_h) throw InvalidInputError("polynomial: 'h' not allowed here");
        ++pos;
        result.has_h = true;
        any = true;
    }
    if (!any || pos != term.size())
        throw InvalidInputError("polynomial: malformed term '" + term + "'");
    return result;
}

std::vector<ParsedTerm> parse_polynomial(const std::string& text, bool allow_h) {
    std::string s;
    s.reserve(text.size());
    for (char c : text)
        if (!std::isspace(static_cast<unsigned char>(c))) s += c;
    if (s.empty()) throw InvalidInputError("polynomial: empty expression");
    std::vector<ParsedTerm> terms;
    std::size_t pos = 0;
    bool negative = false;
    if (s[pos] == '+' || s[pos] == '-') negative = s[pos++] == '-';
    while (pos < s.size()) {
        std::size_t end = pos;
        while (end < s.size() && s[end] != '+' && s[end] != '-') ++end;
        ParsedTerm term = parse_polynomial_term(s.substr(pos, end - pos), allow_h);
        if (negative) term.coeff = -term.coeff;
        terms.push_back(std::move(term));
        if (end == s.size()) break;
        negative = s[end] == '-';
        pos = end + 1;
        if (pos == s.size()) throw InvalidInputError("polynomial: trailing sign");
    }
    if (terms.empty()) throw InvalidInputError("polynomial: no terms");
    return terms;
}

}  // namespace

BgPolynomial bg_polynomial_from_string(const Int& m, const std::string& text) {
    require_order(m, "bg_polynomial_from_string");
    Int c0(0);
    std::vector<Int> higher;
    for (const ParsedTerm& t : parse_polynomial(text, /*allow_h=*/false)) {
        if (t.x_power == 0) {
            c0 += t.coeff;
        } else {
            if (higher.size() < static_cast<std::size_t>(t.x_power))
                higher.resize(static_cast<std::size_t>(t.x_power), Int(0));
            higher[static_cast<std::size_t>(t.x_power) - 1] += t.coeff;
        }
    }
    return BgPolynomial(m, std::move(c0), std::move(higher));
}

P1RingElement p1_element_from_string(const Int& m, const std::string& text) {
    require_order(m, "p1_element_from_string");
    Int a0(0), b1(0);
    std::vector<Int> xk, xkh;
    for (const ParsedTerm& t : parse_polynomial(text, /*allow_h=*/true)) {
        if (t.x_power == 0) {
            (t.has_h ? b1 : a0) += t.coeff;
        } else {
            std::vector<Int>& dest = t.has_h ? xkh : xk;
            if (dest.size() < static_cast<std::size_t>(t.x_power))
                dest.resize(static_cast<std::size_t>(t.x_power), Int(0));
            dest[static_cast<std::size_t>(t.x_power) - 1] += t.coeff;
        }
    }
    return P1RingElement(m, std::move(a0), std::move(b1), std::move(xk), std::move(xkh));
}

}  // namespace cycoh
