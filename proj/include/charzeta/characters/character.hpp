#pragma once

#include <gmpxx.h>

#include <algorithm>
#include <cctype>
#include <numeric>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "charzeta/error.hpp"
#include "charzeta/numerics/complex.hpp"
#include "charzeta/numerics/context.hpp"

namespace charzeta {

namespace detail {

inline long mod(long a, long m) {
    long r = a % m;
    return r < 0 ? r + m : r;
}

inline long gcd(long a, long b) { return std::gcd(a < 0 ? -a : a, b < 0 ? -b : b); }

inline long euler_phi(long q) {
    long result = q;
    long n = q;
    for (long p = 2; p * p <= n; ++p) {
        if (n % p != 0) continue;
        while (n % p == 0) n /= p;
        result -= result / p;
    }
    if (n > 1) result -= result / n;
    return result;
}

inline long mul_mod(long a, long b, long m) {
    // Moduli stay far below 2^31, so the product fits in a long.
    return (a % m) * (b % m) % m;
}

inline long multiplicative_order(long g, long m) {
    long x = g % m;
    long k = 1;
    while (x != 1 % m) {
        x = mul_mod(x, g, m);
        ++k;
    }
    return k;
}

}  // namespace detail

// Dirichlet character mod q held as exact exponents: chi(r) = exp(2 pi i k_r / order).
class DirichletCharacter {
public:
    // exponents[r] for r in [0, q); entries for residues sharing a factor with q are ignored.
    static DirichletCharacter from_exponents(long modulus, long order, std::vector<long> exponents) {
        require(modulus >= 1, ErrorKind::invalid_character, "modulus must be positive");
        require(order >= 1, ErrorKind::invalid_character, "order must be positive");
        require(static_cast<long>(exponents.size()) == modulus, ErrorKind::invalid_character,
                "exponent table must have one entry per residue");
        DirichletCharacter chi;
        chi.modulus_ = modulus;
        chi.exponents_.assign(static_cast<std::size_t>(modulus), -1);
        for (long r = 0; r < modulus; ++r)
            if (detail::gcd(r, modulus) == 1)
                chi.exponents_[static_cast<std::size_t>(r)] = detail::mod(exponents[static_cast<std::size_t>(r)], order);
        chi.order_ = order;
        chi.normalize();
        chi.validate();
        chi.conductor_ = chi.compute_conductor();
        return chi;
    }

    long modulus() const { return modulus_; }
    long order() const { return order_; }
    long conductor() const { return conductor_; }
    // 0 for even, 1 for odd.
    int parity() const { return exponents_[static_cast<std::size_t>(modulus_ - 1)] == 0 ? 0 : 1; }
    bool is_even() const { return parity() == 0; }
    bool is_odd() const { return parity() == 1; }
    bool is_primitive() const { return conductor_ == modulus_; }
    bool is_principal() const { return order_ == 1; }
    bool is_real() const { return order_ <= 2; }

    // k_n, or nothing when gcd(n, q) > 1.
    std::optional<long> exponent(long n) const {
        long e = exponents_[static_cast<std::size_t>(detail::mod(n, modulus_))];
        if (e < 0) return std::nullopt;
        return e;
    }

    // chi(n) at the given precision; 0 when gcd(n, q) > 1.
    Complex evaluate(long n, mpfr_prec_t prec) const {
        auto e = exponent(n);
        if (!e) return Complex(prec);
        return root_of_unity(*e, order_, prec);
    }

    // chi(0), ..., chi(q-1).
    std::vector<Complex> value_table(mpfr_prec_t prec) const {
        std::vector<Complex> roots;
        roots.reserve(static_cast<std::size_t>(order_));
        for (long k = 0; k < order_; ++k) roots.push_back(root_of_unity(k, order_, prec));
        std::vector<Complex> table;
        table.reserve(static_cast<std::size_t>(modulus_));
        for (long r = 0; r < modulus_; ++r) {
            long e = exponents_[static_cast<std::size_t>(r)];
            table.push_back(e < 0 ? Complex(prec) : roots[static_cast<std::size_t>(e)]);
        }
        return table;
    }

    DirichletCharacter conjugate() const {
        DirichletCharacter c = *this;
        for (auto& e : c.exponents_)
            if (e > 0) e = order_ - e;
        return c;
    }

    friend DirichletCharacter operator*(const DirichletCharacter& a, const DirichletCharacter& b) {
        require(a.modulus_ == b.modulus_, ErrorKind::invalid_character, "product of characters with different moduli");
        long order = std::lcm(a.order_, b.order_);
        std::vector<long> e(static_cast<std::size_t>(a.modulus_), 0);
        for (std::size_t r = 0; r < e.size(); ++r)
            if (a.exponents_[r] >= 0) e[r] = a.exponents_[r] * (order / a.order_) + b.exponents_[r] * (order / b.order_);
        return from_exponents(a.modulus_, order, std::move(e));
    }

    friend bool operator==(const DirichletCharacter& a, const DirichletCharacter& b) {
        return a.modulus_ == b.modulus_ && a.order_ == b.order_ && a.exponents_ == b.exponents_;
    }

    // Value token of chi(r) for a coprime residue: 1, -1, i, -i or e(j/m).
    std::string token(long r) const {
        long e = *exponent(r);
        long g = std::gcd(e, order_);
        long j = e / g;
        long m = order_ / g;
        if (j == 0) return "1";
        if (m == 2) return "-1";
        if (m == 4) return j == 1 ? "i" : "-i";
        return "e(" + std::to_string(j) + "/" + std::to_string(m) + ")";
    }

    // q=<int>;values=<tok>,...
    std::string literal() const {
        std::string out = "q=" + std::to_string(modulus_) + ";values=";
        bool first = true;
        // The single residue class mod 1 carries no token.
        for (long r = 1; r <= modulus_ && modulus_ > 1; ++r) {
            if (detail::gcd(r, modulus_) != 1) continue;
            if (!first) out += ",";
            out += token(r);
            first = false;
        }
        return out;
    }

    static Complex root_of_unity(long k, long order, mpfr_prec_t prec) {
        k = detail::mod(k, order);
        // Exact values at the quarter turns keep real characters exactly real.
        if (k == 0) return Complex(1, prec);
        if (4 * k == order) return Complex::i(prec);
        if (2 * k == order) return Complex(-1, prec);
        if (4 * k == 3 * order) return -Complex::i(prec);
        Real angle = ldexp(const_pi(prec), 1) * k / order;
        return expi(angle);
    }

private:
    long modulus_ = 1;
    long order_ = 1;
    long conductor_ = 1;
    std::vector<long> exponents_{0};

    DirichletCharacter() = default;

    void normalize() {
        long g = order_;
        for (long e : exponents_)
            if (e >= 0) g = std::gcd(g, e);
        if (g > 1) {
            order_ /= g;
            for (auto& e : exponents_)
                if (e >= 0) e /= g;
        }
    }

    void validate() const {
        for (long r = 0; r < modulus_; ++r) {
            long kr = exponents_[static_cast<std::size_t>(r)];
            if (kr < 0) continue;
            for (long s = r; s < modulus_; ++s) {
                long ks = exponents_[static_cast<std::size_t>(s)];
                if (ks < 0) continue;
                long kp = exponents_[static_cast<std::size_t>(detail::mul_mod(r, s, modulus_))];
                require(kp == (kr + ks) % order_, ErrorKind::invalid_character,
                        "values are not multiplicative (residues " + std::to_string(r) + ", " + std::to_string(s) + ")");
            }
        }
    }

    long compute_conductor() const {
        for (long f = 1; f <= modulus_; ++f) {
            if (modulus_ % f != 0) continue;
            bool induced = true;
            for (long r = 1; r < modulus_ && induced; ++r) {
                long e = exponents_[static_cast<std::size_t>(r)];
                if (e < 0 || r % f != 1 % f) continue;
                if (e != 0) induced = false;
            }
            if (induced) return f;
        }
        return modulus_;
    }
};

inline long conductor(const DirichletCharacter& chi) { return chi.conductor(); }
inline int parity(const DirichletCharacter& chi) { return chi.parity(); }
inline DirichletCharacter conjugate(const DirichletCharacter& chi) { return chi.conjugate(); }
inline Complex evaluate(const DirichletCharacter& chi, long n, const PrecisionContext& ctx) {
    return chi.evaluate(n, ctx.bits());
}

inline DirichletCharacter principal_character(long q) {
    return DirichletCharacter::from_exponents(q, 1, std::vector<long>(static_cast<std::size_t>(q), 0));
}

namespace detail {

inline std::string trim(std::string_view s) {
    std::size_t b = 0, e = s.size();
    while (b < e && std::isspace(static_cast<unsigned char>(s[b]))) ++b;
    while (e > b && std::isspace(static_cast<unsigned char>(s[e - 1]))) --e;
    return std::string(s.substr(b, e - b));
}

inline long parse_long(const std::string& text, std::string_view what) {
    require(!text.empty(), ErrorKind::format, std::string(what) + " is empty");
    std::size_t used = 0;
    long value = 0;
    try {
        value = std::stol(text, &used);
    } catch (const std::exception&) {
        fail(ErrorKind::format, std::string(what) + " is not an integer: '" + text + "'");
    }
    require(used == text.size(), ErrorKind::format, std::string(what) + " is not an integer: '" + text + "'");
    return value;
}

// Token as a fraction of a full turn.
inline mpq_class token_angle(std::string_view raw) {
    std::string tok = trim(raw);
    if (tok == "1" || tok == "+1") return 0;
    if (tok == "-1") return mpq_class(1, 2);
    if (tok == "i" || tok == "+i") return mpq_class(1, 4);
    if (tok == "-i") return mpq_class(3, 4);
    if (tok.size() > 3 && tok.compare(0, 2, "e(") == 0 && tok.back() == ')') {
        std::string body = tok.substr(2, tok.size() - 3);
        auto slash = body.find('/');
        require(slash != std::string::npos, ErrorKind::format, "angle token needs j/m: '" + tok + "'");
        long j = parse_long(trim(body.substr(0, slash)), "angle numerator");
        long m = parse_long(trim(body.substr(slash + 1)), "angle denominator");
        require(m > 0, ErrorKind::format, "angle denominator must be positive: '" + tok + "'");
        return mpq_class(mod(j, m), m);
    }
    fail(ErrorKind::format, "unrecognised value token '" + tok + "'");
}

}  // namespace detail

// One token per residue coprime to q, residues in increasing order.
inline DirichletCharacter character_from_values(long q, std::span<const std::string> tokens) {
    require(q >= 1, ErrorKind::format, "modulus must be positive");
    std::vector<long> residues;
    for (long r = 1; r <= q; ++r)
        if (detail::gcd(r, q) == 1) residues.push_back(r % q);
    if (q == 1) residues.assign(1, 0);
    std::size_t expected = q == 1 ? 0 : residues.size();
    require(tokens.size() == expected, ErrorKind::format,
            "expected " + std::to_string(expected) + " value tokens for q=" + std::to_string(q) + ", got " +
                std::to_string(tokens.size()));
    std::vector<mpq_class> angles;
    for (const auto& t : tokens) angles.push_back(detail::token_angle(t));
    long order = 1;
    for (auto& a : angles) {
        a.canonicalize();
        order = std::lcm(order, a.get_den().get_si());
    }
    std::vector<long> exps(static_cast<std::size_t>(q), 0);
    for (std::size_t i = 0; i < angles.size(); ++i) {
        mpq_class scaled = angles[i] * order;
        exps[static_cast<std::size_t>(residues[i])] = scaled.get_num().get_si();
    }
    if (q > 1) require(exps[1] == 0, ErrorKind::invalid_character, "chi(1) must be 1");
    return DirichletCharacter::from_exponents(q, order, std::move(exps));
}

inline DirichletCharacter character_from_values(long q, std::initializer_list<std::string> tokens) {
    std::vector<std::string> v(tokens);
    return character_from_values(q, std::span<const std::string>(v));
}

// Parses "q=<int>;values=<tok>,<tok>,...".
inline DirichletCharacter parse_character(std::string_view literal) {
    std::string text = detail::trim(literal);
    auto semi = text.find(';');
    require(semi != std::string::npos, ErrorKind::format, "character literal needs 'q=<int>;values=...'");
    std::string qpart = detail::trim(text.substr(0, semi));
    std::string vpart = detail::trim(text.substr(semi + 1));
    require(qpart.rfind("q=", 0) == 0, ErrorKind::format, "character literal must start with q=");
    require(vpart.rfind("values=", 0) == 0, ErrorKind::format, "character literal needs values=");
    long q = detail::parse_long(detail::trim(qpart.substr(2)), "modulus");
    std::string list = detail::trim(vpart.substr(7));
    std::vector<std::string> tokens;
    if (!list.empty()) {
        std::size_t start = 0;
        while (true) {
            auto comma = list.find(',', start);
            tokens.push_back(detail::trim(list.substr(start, comma == std::string::npos ? std::string::npos : comma - start)));
            if (comma == std::string::npos) break;
            start = comma + 1;
        }
    }
    return character_from_values(q, std::span<const std::string>(tokens));
}

// All phi(q) characters mod q. For prime q the t-th entry sends the least
// primitive root g to exp(2 pi i t/(q-1)).
inline std::vector<DirichletCharacter> enumerate_characters(long q) {
    require(q >= 1, ErrorKind::parameter, "modulus must be positive");
    if (q <= 2) return {principal_character(q)};

    // Generators of (Z/q)^* as (residue mod q, order), one cyclic factor each.
    std::vector<std::pair<long, long>> generators;
    auto lift = [q](long value, long prime_power) {
        // x = value mod prime_power, x = 1 mod q/prime_power
        long rest = q / prime_power;
        for (long x = 1; x < q; ++x)
            if (x % prime_power == detail::mod(value, prime_power) && x % rest == 1 % rest) return x;
        return 1L;
    };
    long n = q;
    for (long p = 2; p <= n; ++p) {
        if (n % p != 0) continue;
        long pe = 1;
        int e = 0;
        while (n % p == 0) {
            n /= p;
            pe *= p;
            ++e;
        }
        if (p == 2) {
            if (e >= 2) generators.push_back({lift(pe - 1, pe), 2});
            if (e >= 3) generators.push_back({lift(5, pe), pe / 4});
        } else {
            long phi = pe / p * (p - 1);
            long g = 2;
            while (detail::gcd(g, p) != 1 || detail::multiplicative_order(g, pe) != phi) ++g;
            generators.push_back({lift(g, pe), phi});
        }
    }

    // Mixed-radix index over the cyclic factors.
    long group_order = 1;
    for (auto& g : generators) group_order *= g.second;
    auto decode = [&generators](long index) {
        std::vector<long> digits;
        for (auto it = generators.rbegin(); it != generators.rend(); ++it) {
            digits.push_back(index % it->second);
            index /= it->second;
        }
        std::reverse(digits.begin(), digits.end());
        return digits;
    };

    // Discrete logarithms of every unit with respect to the generators.
    std::vector<std::vector<long>> logs(static_cast<std::size_t>(q));
    for (long index = 0; index < group_order; ++index) {
        auto digits = decode(index);
        long x = 1;
        for (std::size_t i = 0; i < digits.size(); ++i)
            for (long k = 0; k < digits[i]; ++k) x = detail::mul_mod(x, generators[i].first, q);
        logs[static_cast<std::size_t>(x)] = std::move(digits);
    }

    long exponent = 1;
    for (auto& g : generators) exponent = std::lcm(exponent, g.second);

    std::vector<DirichletCharacter> out;
    out.reserve(static_cast<std::size_t>(group_order));
    for (long index = 0; index < group_order; ++index) {
        auto choice = decode(index);
        std::vector<long> exps(static_cast<std::size_t>(q), 0);
        for (long r = 1; r < q; ++r) {
            const auto& lg = logs[static_cast<std::size_t>(r)];
            if (lg.empty()) continue;
            long k = 0;
            for (std::size_t i = 0; i < lg.size(); ++i) k += lg[i] * choice[i] * (exponent / generators[i].second);
            exps[static_cast<std::size_t>(r)] = k % exponent;
        }
        out.push_back(DirichletCharacter::from_exponents(q, exponent, std::move(exps)));
    }
    return out;
}

// sum_{r=1}^{q} chi(r) e^{2 pi i r/q}, each angle reduced exactly before evaluation.
inline Complex gauss_sum(const DirichletCharacter& chi, const PrecisionContext& ctx) {
    long q = chi.modulus();
    long order = chi.order();
    mpfr_prec_t prec = ctx.bits();
    Complex total(prec);
    for (long r = 1; r <= q; ++r) {
        auto e = chi.exponent(r);
        if (!e) continue;
        long turns = detail::mod(*e * q + r * order, order * q);
        total += DirichletCharacter::root_of_unity(turns, order * q, prec);
    }
    return total;
}

}  // namespace charzeta
