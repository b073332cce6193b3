#pragma once

#include <array>
#include <cstdint>
#include <map>
#include <string>
#include <utility>

#include <boost/multiprecision/cpp_int.hpp>

#include "dimerlab/errors.hpp"

namespace dimerlab {

// Exact non-negative integer count. Counts are serialized as decimal strings;
// no computation ever rounds.
using BigCount = boost::multiprecision::cpp_int;

// Closed weight alphabet. `unit` is the multiplicative identity and is never
// stored in an exponent vector.
enum class WeightSymbol : std::uint8_t { unit, a, b, c, x, y, z };

inline constexpr std::size_t kWeightSymbolCount = 6;  // non-unit symbols

inline const char* symbol_name(WeightSymbol s) {
    switch (s) {
        case WeightSymbol::unit: return "1";
        case WeightSymbol::a: return "a";
        case WeightSymbol::b: return "b";
        case WeightSymbol::c: return "c";
        case WeightSymbol::x: return "x";
        case WeightSymbol::y: return "y";
        case WeightSymbol::z: return "z";
    }
    return "?";
}

inline WeightSymbol symbol_from_name(const std::string& name) {
    if (name == "1") return WeightSymbol::unit;
    if (name == "a") return WeightSymbol::a;
    if (name == "b") return WeightSymbol::b;
    if (name == "c") return WeightSymbol::c;
    if (name == "x") return WeightSymbol::x;
    if (name == "y") return WeightSymbol::y;
    if (name == "z") return WeightSymbol::z;
    throw FormatError("unknown weight symbol \"" + name + "\"");
}

// Slot of a non-unit symbol in an exponent vector: a,b,c,x,y,z -> 0..5.
inline std::size_t symbol_index(WeightSymbol s) {
    return static_cast<std::size_t>(s) - 1;
}

inline WeightSymbol symbol_at(std::size_t index) {
    return static_cast<WeightSymbol>(index + 1);
}

// Exponent vector over {a,b,c,x,y,z}; the all-zero vector is the constant
// monomial. Ordering is lexicographic in that symbol order, which fixes the
// serialization order of polynomial terms.
struct Monomial {
    std::array<std::uint32_t, kWeightSymbolCount> exps{};

    friend bool operator==(const Monomial&, const Monomial&) = default;
    friend auto operator<=>(const Monomial&, const Monomial&) = default;

    Monomial& operator*=(const Monomial& o) {
        for (std::size_t i = 0; i < kWeightSymbolCount; ++i) exps[i] += o.exps[i];
        return *this;
    }
    friend Monomial operator*(Monomial l, const Monomial& r) {
        l *= r;
        return l;
    }

    static Monomial of(WeightSymbol s, std::uint32_t e = 1) {
        Monomial m;
        if (s != WeightSymbol::unit && e > 0) m.exps[symbol_index(s)] = e;
        return m;
    }

    bool is_constant() const {
        for (auto e : exps)
            if (e) return false;
        return true;
    }

    std::string str() const {
        std::string out;
        for (std::size_t i = 0; i < kWeightSymbolCount; ++i) {
            if (!exps[i]) continue;
            if (!out.empty()) out += '*';
            out += symbol_name(symbol_at(i));
            if (exps[i] > 1) out += '^' + std::to_string(exps[i]);
        }
        return out.empty() ? "1" : out;
    }
};

// Sparse multivariate polynomial with exact integer coefficients. Terms are
// kept in a std::map so iteration (and hence serialization) is deterministic.
class Polynomial {
public:
    Polynomial() = default;

    static Polynomial zero() { return {}; }
    static Polynomial constant(const BigCount& c) {
        Polynomial p;
        p.add_term(Monomial{}, c);
        return p;
    }
    static Polynomial one() { return constant(1); }
    static Polynomial symbol(WeightSymbol s) {
        Polynomial p;
        p.add_term(Monomial::of(s), 1);
        return p;
    }

    void add_term(const Monomial& m, const BigCount& coeff) {
        if (coeff == 0) return;
        auto [it, inserted] = terms_.try_emplace(m, coeff);
        if (!inserted) {
            it->second += coeff;
            if (it->second == 0) terms_.erase(it);
        }
    }

    bool is_zero() const { return terms_.empty(); }
    std::size_t term_count() const { return terms_.size(); }
    const std::map<Monomial, BigCount>& terms() const { return terms_; }

    BigCount coeff(const Monomial& m) const {
        auto it = terms_.find(m);
        return it == terms_.end() ? BigCount(0) : it->second;
    }

    // Substituting 1 for every symbol turns a weighted sum into a plain count.
    BigCount eval_all_ones() const {
        BigCount total = 0;
        for (const auto& [m, c] : terms_) total += c;
        return total;
    }

    Polynomial& operator+=(const Polynomial& o) {
        for (const auto& [m, c] : o.terms_) add_term(m, c);
        return *this;
    }
    friend Polynomial operator+(Polynomial l, const Polynomial& r) {
        l += r;
        return l;
    }

    friend Polynomial operator*(const Polynomial& l, const Polynomial& r) {
        Polynomial out;
        for (const auto& [ml, cl] : l.terms_)
            for (const auto& [mr, cr] : r.terms_) out.add_term(ml * mr, cl * cr);
        return out;
    }
    Polynomial& operator*=(const Polynomial& o) {
        *this = *this * o;
        return *this;
    }

    Polynomial times_symbol(WeightSymbol s) const {
        if (s == WeightSymbol::unit) return *this;
        Polynomial out;
        Monomial shift = Monomial::of(s);
        for (const auto& [m, c] : terms_) out.add_term(m * shift, c);
        return out;
    }

    Polynomial times_monomial(const Monomial& shift) const {
        Polynomial out;
        for (const auto& [m, c] : terms_) out.add_term(m * shift, c);
        return out;
    }

    Polynomial scaled(const BigCount& k) const {
        Polynomial out;
        for (const auto& [m, c] : terms_) out.add_term(m, c * k);
        return out;
    }

    friend bool operator==(const Polynomial&, const Polynomial&) = default;

    std::string str() const {
        if (terms_.empty()) return "0";
        std::string out;
        for (const auto& [m, c] : terms_) {
            if (!out.empty()) out += " + ";
            if (m.is_constant()) {
                out += c.str();
            } else if (c == 1) {
                out += m.str();
            } else {
                out += c.str() + '*' + m.str();
            }
        }
        return out;
    }

private:
    std::map<Monomial, BigCount> terms_;
};

inline Polynomial poly_mul(const Polynomial& p, const Polynomial& q) { return p * q; }

// Repeated squaring; p^0 == 1 by convention.
inline Polynomial poly_pow(const Polynomial& p, std::uint64_t k) {
    Polynomial result = Polynomial::one();
    Polynomial base = p;
    while (k > 0) {
        if (k & 1) result *= base;
        k >>= 1;
        if (k) base *= base;
    }
    return result;
}

inline BigCount big_pow(std::uint32_t base, std::uint64_t exp) {
    return boost::multiprecision::pow(BigCount(base), static_cast<unsigned>(exp));
}

}  // namespace dimerlab
