#include "cycoh/abgroup.hpp"

#include <algorithm>
#include <cctype>
#include <cstddef>
#include <sstream>
#include <utility>

namespace cycoh {

namespace {

// Hard cap on exponents accepted by the parser so that "(Z/2)^k" cannot be
// used to request an absurd allocation.
constexpr long long kMaxParsedExponent = 1'000'000;

}  // namespace

FinAbGroup::FinAbGroup(std::int64_t free_rank, std::vector<Int> torsion) {
    if (free_rank < 0) throw InvalidInputError("FinAbGroup: negative free rank");
    free_rank_ = free_rank;
    std::vector<Int> chain;
    chain.reserve(torsion.size());
    for (Int& t : torsion) {
        Int a = abs(t);
        if (a.is_zero()) {
            ++free_rank_;
            continue;
        }
        if (a == Int(1)) continue;
        chain.push_back(std::move(a));
    }
    std::sort(chain.begin(), chain.end());
    // Fast path: already a divisibility chain (always true for repeated
    // equal factors and for SNF diagonals, the bulk callers).
    bool is_chain = true;
    for (std::size_t i = 0; i + 1 < chain.size() && is_chain; ++i)
        is_chain = (chain[i + 1] % chain[i]).is_zero();
    if (!is_chain) {
        // One selection pass of (a, b) -> (gcd, lcm) surgeries. Each surgery
        // replaces Z/a + Z/b by an isomorphic pair, and after the inner loop
        // chain[i] divides every later entry, so the pass ends in the unique
        // invariant-factor chain (ascending, since divisibility implies <=).
        for (std::size_t i = 0; i < chain.size(); ++i) {
            for (std::size_t j = i + 1; j < chain.size(); ++j) {
                Int g = gcd(chain[i], chain[j]);
                Int l = chain[i] / g * chain[j];
                chain[i] = std::move(g);
                chain[j] = std::move(l);
            }
        }
        std::erase(chain, Int(1));  // gcd surgeries can create unit factors
    }
    torsion_ = std::move(chain);
}

FinAbGroup::FinAbGroup(std::int64_t free_rank, std::initializer_list<long long> torsion)
    : FinAbGroup(free_rank, std::vector<Int>(torsion.begin(), torsion.end())) {}

FinAbGroup FinAbGroup::free_group(std::int64_t rank) { return FinAbGroup(rank, {}); }

FinAbGroup FinAbGroup::cyclic(const Int& d) { return FinAbGroup(0, std::vector<Int>{d}); }

Int FinAbGroup::order() const {
    if (free_rank_ > 0) throw Error("order: group is infinite");
    Int n(1);
    for (const Int& d : torsion_) n *= d;
    return n;
}

Int FinAbGroup::torsion_count(const Int& k) const {
    if (k.sign() <= 0) throw InvalidInputError("torsion_count: k must be positive");
    Int n(1);
    for (const Int& d : torsion_) n *= gcd(k, d);
    return n;
}

FinAbGroup direct_sum(const FinAbGroup& a, const FinAbGroup& b) {
    std::vector<Int> torsion = a.torsion();
    torsion.insert(torsion.end(), b.torsion().begin(), b.torsion().end());
    return FinAbGroup(a.free_rank() + b.free_rank(), std::move(torsion));
}

FinAbGroup direct_sum_power(const FinAbGroup& a, std::int64_t k) {
    if (k < 0) throw InvalidInputError("direct_sum_power: negative exponent");
    std::vector<Int> torsion;
    torsion.reserve(a.torsion().size() * static_cast<std::size_t>(k));
    for (std::int64_t i = 0; i < k; ++i)
        torsion.insert(torsion.end(), a.torsion().begin(), a.torsion().end());
    return FinAbGroup(a.free_rank() * k, std::move(torsion));
}

FinAbGroup tensor(const FinAbGroup& a, const FinAbGroup& b) {
    std::vector<Int> torsion;
    for (std::int64_t i = 0; i < a.free_rank(); ++i)
        torsion.insert(torsion.end(), b.torsion().begin(), b.torsion().end());
    for (std::int64_t i = 0; i < b.free_rank(); ++i)
        torsion.insert(torsion.end(), a.torsion().begin(), a.torsion().end());
    for (const Int& d : a.torsion())
        for (const Int& e : b.torsion()) torsion.push_back(gcd(d, e));
    return FinAbGroup(a.free_rank() * b.free_rank(), std::move(torsion));
}

FinAbGroup tor(const FinAbGroup& a, const FinAbGroup& b) {
    std::vector<Int> torsion;
    for (const Int& d : a.torsion())
        for (const Int& e : b.torsion()) torsion.push_back(gcd(d, e));
    return FinAbGroup(0, std::move(torsion));
}

FinAbGroup tensor_with_cyclic(const FinAbGroup& a, const Int& m) {
    return tensor(a, FinAbGroup::cyclic(m));
}

std::string to_string(const FinAbGroup& g) {
    if (g.is_trivial()) return "0";
    std::ostringstream out;
    bool first = true;
    auto emit = [&](const std::string& term) {
        if (!first) out << " + ";
        out << term;
        first = false;
    };
    if (g.free_rank() == 1) emit("Z");
    else if (g.free_rank() > 1) emit("Z^" + std::to_string(g.free_rank()));
    const std::vector<Int>& t = g.torsion();
    for (std::size_t i = 0; i < t.size();) {
        std::size_t j = i;
        while (j < t.size() && t[j] == t[i]) ++j;
        const std::size_t run = j - i;
        if (run == 1) emit("Z/" + t[i].str());
        else emit("(Z/" + t[i].str() + ")^" + std::to_string(run));
        i = j;
    }
    return out.str();
}

namespace {

bool all_digits(const std::string& s) {
    if (s.empty()) return false;
    for (char c : s)
        if (!std::isdigit(static_cast<unsigned char>(c))) return false;
    return true;
}

long long parse_exponent(const std::string& s) {
    if (!all_digits(s) || s.size() > 7)
        throw InvalidInputError("group expression: bad exponent '" + s + "'");
    long long k = std::stoll(s);
    if (k < 1 || k > kMaxParsedExponent)
        throw InvalidInputError("group expression: exponent out of range '" + s + "'");
    return k;
}

Int parse_modulus(const std::string& s) {
    if (!all_digits(s))
        throw InvalidInputError("group expression: bad modulus '" + s + "'");
    Int d{s};
    if (d.is_zero())
        throw InvalidInputError("group expression: modulus must be >= 1");
    return d;
}

// One '+'-separated term: "Z", "Z^r", "Z/d" or "(Z/d)^k".
void parse_term(const std::string& term, std::int64_t& rank, std::vector<Int>& torsion) {
    if (term == "Z") {
        ++rank;
        return;
    }
    if (term.rfind("Z^", 0) == 0) {
        rank += parse_exponent(term.substr(2));
        return;
    }
    if (term.rfind("Z/", 0) == 0) {
        torsion.push_back(parse_modulus(term.substr(2)));
        return;
    }
    if (term.rfind("(Z/", 0) == 0) {
        const std::size_t close = term.find(")^");
        if (close == std::string::npos || close + 2 >= term.size())
            throw InvalidInputError("group expression: malformed term '" + term + "'");
        const Int d = parse_modulus(term.substr(3, close - 3));
        const long long k = parse_exponent(term.substr(close + 2));
        for (long long i = 0; i < k; ++i) torsion.push_back(d);
        return;
    }
    throw InvalidInputError("group expression: unrecognized term '" + term + "'");
}

}  // namespace

FinAbGroup group_from_string(const std::string& text) {
    std::string s;
    s.reserve(text.size());
    for (char c : text)
        if (!std::isspace(static_cast<unsigned char>(c))) s += c;
    if (s.empty()) throw InvalidInputError("group expression: empty");
    if (s == "0") return FinAbGroup();
    std::int64_t rank = 0;
    std::vector<Int> torsion;
    std::size_t start = 0;
    while (true) {
        const std::size_t plus = s.find('+', start);
        const std::string term =
            plus == std::string::npos ? s.substr(start) : s.substr(start, plus - start);
        if (term.empty()) throw InvalidInputError("group expression: empty term");
        parse_term(term, rank, torsion);
        if (plus == std::string::npos) break;
        start = plus + 1;
    }
    return FinAbGroup(rank, std::move(torsion));
}

}  // namespace cycoh
