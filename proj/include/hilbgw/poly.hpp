/**
 * @file poly.hpp
 * @brief Bivariate polynomials in t1, t2 with integer coefficients, and their gcd.
 *
 * Terms are stored sparsely, sorted in descending graded-lex order
 * (total degree first, then the t1 exponent). Products, exact quotients and
 * remainders use a dense exponent grid internally because the operands
 * occurring in practice are small and fairly dense.
 *
 * The gcd has three paths:
 *  - both operands homogeneous: dehomogenize at t2 = 1, take a univariate gcd
 *    over Z and rehomogenize (exact for homogeneous inputs once monomial
 *    factors are split off);
 *  - general case: primitive pseudo-remainder sequence in Z[t2][t1];
 *  - a modular image test that proves the gcd trivial without running a PRS,
 *    which is by far the most common outcome.
 */
#pragma once

#include "rational.hpp"

#include <algorithm>
#include <cctype>
#include <cstdint>
#include <ostream>
#include <sstream>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace hilbgw {

// ---------------------------------------------------------------------------
// Dense univariate polynomials over Z (coefficient vector, low degree first)
// ---------------------------------------------------------------------------
namespace uz {

using Poly = std::vector<mpz_class>;

inline void trim(Poly& p) {
    while (!p.empty() && p.back() == 0) p.pop_back();
}
inline int deg(const Poly& p) { return static_cast<int>(p.size()) - 1; }
inline bool is_zero(const Poly& p) { return p.empty(); }

inline Poly sub(const Poly& a, const Poly& b) {
    Poly r(std::max(a.size(), b.size()));
    for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[i];
    for (std::size_t i = 0; i < b.size(); ++i) r[i] -= b[i];
    trim(r);
    return r;
}

inline Poly mul(const Poly& a, const Poly& b) {
    if (a.empty() || b.empty()) return {};
    Poly r(a.size() + b.size() - 1);
    for (std::size_t i = 0; i < a.size(); ++i) {
        if (a[i] == 0) continue;
        for (std::size_t j = 0; j < b.size(); ++j) mpz_addmul(r[i + j].get_mpz_t(), a[i].get_mpz_t(), b[j].get_mpz_t());
    }
    trim(r);
    return r;
}

inline mpz_class content(const Poly& p) {
    mpz_class g = 0;
    for (const auto& c : p) {
        mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), c.get_mpz_t());
        if (g == 1) break;
    }
    return g;
}

inline void divide_exact(Poly& p, const mpz_class& c) {
    for (auto& x : p) mpz_divexact(x.get_mpz_t(), x.get_mpz_t(), c.get_mpz_t());
}

/** @brief Primitive part with positive leading coefficient. */
inline Poly primitive(Poly p) {
    trim(p);
    if (p.empty()) return p;
    mpz_class g = content(p);
    if (p.back() < 0) g = -g;
    divide_exact(p, g);
    return p;
}

/** @brief Exact quotient a / b over Z; throws if b does not divide a. */
inline Poly exact_div(Poly a, const Poly& b) {
    if (b.empty()) throw std::domain_error("uz::exact_div: division by zero");
    trim(a);
    if (a.empty()) return {};
    int da = deg(a), db = deg(b);
    if (da < db) throw std::domain_error("uz::exact_div: not divisible");
    Poly q(static_cast<std::size_t>(da - db + 1));
    const mpz_class& lb = b.back();
    for (int i = da; i >= db; --i) {
        mpz_class& c = a[static_cast<std::size_t>(i)];
        if (c == 0) continue;
        if (!mpz_divisible_p(c.get_mpz_t(), lb.get_mpz_t())) throw std::domain_error("uz::exact_div: not divisible");
        mpz_class f;
        mpz_divexact(f.get_mpz_t(), c.get_mpz_t(), lb.get_mpz_t());
        for (int j = 0; j <= db; ++j) a[static_cast<std::size_t>(i - db + j)] -= f * b[static_cast<std::size_t>(j)];
        q[static_cast<std::size_t>(i - db)] = f;
    }
    trim(a);
    if (!a.empty()) throw std::domain_error("uz::exact_div: not divisible");
    trim(q);
    return q;
}

/** @brief Sparse pseudo-remainder of a by b (deg a >= deg b). */
inline Poly prem(Poly a, const Poly& b) {
    int db = deg(b);
    const mpz_class& lb = b.back();
    while (!a.empty() && deg(a) >= db) {
        int da = deg(a);
        mpz_class la = a.back();
        for (auto& x : a) x *= lb;
        for (int j = 0; j <= db; ++j) a[static_cast<std::size_t>(da - db + j)] -= la * b[static_cast<std::size_t>(j)];
        trim(a);
    }
    return a;
}

// Arithmetic modulo the Mersenne prime 2^61 - 1.
constexpr std::uint64_t kPrime = (std::uint64_t{1} << 61) - 1;

inline std::uint64_t mod_mul(std::uint64_t a, std::uint64_t b) {
    unsigned __int128 r = static_cast<unsigned __int128>(a) * b;
    std::uint64_t lo = static_cast<std::uint64_t>(r & kPrime);
    std::uint64_t hi = static_cast<std::uint64_t>(r >> 61);
    std::uint64_t s = lo + hi;
    return s >= kPrime ? s - kPrime : s;
}
inline std::uint64_t mod_add(std::uint64_t a, std::uint64_t b) {
    std::uint64_t s = a + b;
    return s >= kPrime ? s - kPrime : s;
}
inline std::uint64_t mod_sub(std::uint64_t a, std::uint64_t b) { return a >= b ? a - b : a + kPrime - b; }
inline std::uint64_t mod_pow(std::uint64_t a, std::uint64_t e) {
    std::uint64_t r = 1;
    while (e) {
        if (e & 1) r = mod_mul(r, a);
        a = mod_mul(a, a);
        e >>= 1;
    }
    return r;
}
inline std::uint64_t mod_inv(std::uint64_t a) { return mod_pow(a, kPrime - 2); }
inline std::uint64_t reduce(const mpz_class& c) {
    static const mpz_class m(static_cast<unsigned long>(kPrime));
    mpz_class x;
    mpz_fdiv_r(x.get_mpz_t(), c.get_mpz_t(), m.get_mpz_t());
    return static_cast<std::uint64_t>(x.get_ui());
}

using ModPoly = std::vector<std::uint64_t>;

inline void trim_mod(ModPoly& p) {
    while (!p.empty() && p.back() == 0) p.pop_back();
}

/** @brief Degree of gcd of two polynomials over F_p (-1 if both zero). */
inline int mod_gcd_degree(ModPoly a, ModPoly b) {
    trim_mod(a);
    trim_mod(b);
    while (!b.empty()) {
        if (a.size() < b.size()) std::swap(a, b);
        std::uint64_t inv = mod_inv(b.back());
        while (!a.empty() && a.size() >= b.size()) {
            std::uint64_t f = mod_mul(a.back(), inv);
            std::size_t shift = a.size() - b.size();
            for (std::size_t j = 0; j < b.size(); ++j) a[shift + j] = mod_sub(a[shift + j], mod_mul(f, b[j]));
            trim_mod(a);
        }
        std::swap(a, b);
    }
    return static_cast<int>(a.size()) - 1;
}

inline ModPoly to_mod(const Poly& p) {
    ModPoly r(p.size());
    for (std::size_t i = 0; i < p.size(); ++i) r[i] = reduce(p[i]);
    return r;
}

inline mpz_class max_norm(const Poly& p) {
    mpz_class m = 0;
    for (const auto& c : p)
        if (abs(c) > m) m = abs(c);
    return m;
}

inline bool divides(const Poly& a, const Poly& b) {
    try {
        (void)exact_div(a, b);
        return true;
    } catch (const std::domain_error&) {
        return false;
    }
}

/**
 * @brief Evaluate-and-interpolate gcd of primitive a, b. Returns the gcd when a
 *        candidate of the expected degree divides both (the image degree mod p
 *        is an upper bound, so such a candidate is the gcd); empty otherwise.
 */
inline Poly heuristic_gcd(const Poly& a, const Poly& b, int expected_degree) {
    mpz_class xi = 2 * std::min(max_norm(a), max_norm(b)) + 29;
    for (int attempt = 0; attempt < 4; ++attempt) {
        auto eval = [&](const Poly& p) {
            mpz_class v = 0;
            for (std::size_t i = p.size(); i-- > 0;) v = v * xi + p[i];
            return v;
        };
        mpz_class gamma;
        mpz_gcd(gamma.get_mpz_t(), mpz_class(eval(a)).get_mpz_t(), mpz_class(eval(b)).get_mpz_t());
        Poly g;
        mpz_class half = xi / 2;
        while (gamma != 0) {
            mpz_class r;
            mpz_fdiv_r(r.get_mpz_t(), gamma.get_mpz_t(), xi.get_mpz_t());
            if (r > half) r -= xi;
            g.push_back(r);
            gamma = (gamma - r) / xi;
        }
        g = primitive(std::move(g));
        if (!g.empty() && deg(g) == expected_degree && divides(a, g) && divides(b, g)) return g;
        xi = xi * 73794 / 27011 + 1;
    }
    return {};
}

/** @brief gcd over Z, primitive with positive leading coefficient (0 if both zero). */
inline Poly gcd(Poly a, Poly b) {
    trim(a);
    trim(b);
    if (a.empty()) return primitive(b);
    if (b.empty()) return primitive(a);
    a = primitive(a);
    b = primitive(b);
    if (deg(a) == 0 || deg(b) == 0) return Poly{mpz_class(1)};
    int image_degree = -1;
    {
        ModPoly ma = to_mod(a), mb = to_mod(b);
        if (ma.back() != 0 && mb.back() != 0) {
            image_degree = mod_gcd_degree(ma, mb);
            if (image_degree == 0) return Poly{mpz_class(1)};
        }
    }
    if (image_degree > 0) {
        Poly g = heuristic_gcd(a, b, image_degree);
        if (!g.empty()) return g;
    }
    if (deg(a) < deg(b)) std::swap(a, b);
    while (true) {
        Poly r = prem(a, b);
        if (r.empty()) return primitive(b);
        if (deg(r) == 0) return Poly{mpz_class(1)};
        a = std::move(b);
        b = primitive(std::move(r));
    }
}

}  // namespace uz

// ---------------------------------------------------------------------------
// Sparse bivariate polynomial
// ---------------------------------------------------------------------------

/** @brief Exponent pair (a, b) standing for t1^a t2^b. */
struct Mono {
    std::uint32_t a = 0, b = 0;
    std::uint32_t degree() const { return a + b; }
    friend bool operator==(const Mono& x, const Mono& y) { return x.a == y.a && x.b == y.b; }
    /** @brief Graded-lex "greater than". */
    friend bool glex_greater(const Mono& x, const Mono& y) {
        if (x.degree() != y.degree()) return x.degree() > y.degree();
        return x.a > y.a;
    }
};

/** @brief Polynomial in t1, t2 over Z, terms sorted descending in graded-lex order. */
class Poly {
public:
    using Term = std::pair<Mono, mpz_class>;

    Poly() = default;
    explicit Poly(const mpz_class& c) {
        if (c != 0) terms_.push_back({Mono{}, c});
    }
    static Poly monomial(const mpz_class& c, std::uint32_t a, std::uint32_t b) {
        Poly p;
        if (c != 0) p.terms_.push_back({Mono{a, b}, c});
        return p;
    }
    /** @brief Build from unsorted terms; like monomials are combined. */
    static Poly from_terms(std::vector<Term> terms) {
        std::sort(terms.begin(), terms.end(), [](const Term& x, const Term& y) { return glex_greater(x.first, y.first); });
        Poly p;
        for (auto& t : terms) {
            if (!p.terms_.empty() && p.terms_.back().first == t.first) {
                p.terms_.back().second += t.second;
                if (p.terms_.back().second == 0) p.terms_.pop_back();
            } else if (t.second != 0) {
                p.terms_.push_back(std::move(t));
            }
        }
        return p;
    }

    const std::vector<Term>& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    bool is_constant() const { return terms_.empty() || (terms_.size() == 1 && terms_[0].first.degree() == 0); }
    mpz_class constant_value() const { return terms_.empty() ? mpz_class(0) : terms_[0].second; }
    bool is_monomial() const { return terms_.size() == 1; }
    const mpz_class& leading_coefficient() const { return terms_.front().second; }
    const Mono& leading_monomial() const { return terms_.front().first; }
    std::uint32_t total_degree() const { return terms_.empty() ? 0 : terms_.front().first.degree(); }
    std::uint32_t degree_t1() const {
        std::uint32_t d = 0;
        for (const auto& t : terms_) d = std::max(d, t.first.a);
        return d;
    }
    std::uint32_t degree_t2() const {
        std::uint32_t d = 0;
        for (const auto& t : terms_) d = std::max(d, t.first.b);
        return d;
    }
    bool is_homogeneous() const {
        return terms_.empty() || terms_.front().first.degree() == terms_.back().first.degree();
    }
    /** @brief Exponents of the largest monomial dividing every term. */
    Mono monomial_content() const {
        if (terms_.empty()) return Mono{};
        Mono m = terms_[0].first;
        for (const auto& t : terms_) {
            m.a = std::min(m.a, t.first.a);
            m.b = std::min(m.b, t.first.b);
        }
        return m;
    }
    mpz_class content() const {
        mpz_class g = 0;
        for (const auto& t : terms_) {
            mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), t.second.get_mpz_t());
            if (g == 1) break;
        }
        return g;
    }

    friend bool operator==(const Poly& x, const Poly& y) {
        if (x.terms_.size() != y.terms_.size()) return false;
        for (std::size_t i = 0; i < x.terms_.size(); ++i)
            if (!(x.terms_[i].first == y.terms_[i].first) || x.terms_[i].second != y.terms_[i].second) return false;
        return true;
    }
    friend bool operator!=(const Poly& x, const Poly& y) { return !(x == y); }

    Poly operator-() const {
        Poly r = *this;
        for (auto& t : r.terms_) t.second = -t.second;
        return r;
    }
    friend Poly operator+(const Poly& x, const Poly& y) { return merge(x, y, false); }
    friend Poly operator-(const Poly& x, const Poly& y) { return merge(x, y, true); }
    friend Poly operator*(const Poly& x, const Poly& y) {
        if (x.is_zero() || y.is_zero()) return Poly();
        if (x.is_monomial()) return y.times_monomial(x.terms_[0].second, x.terms_[0].first);
        if (y.is_monomial()) return x.times_monomial(y.terms_[0].second, y.terms_[0].first);
        std::uint32_t A = x.degree_t1() + y.degree_t1(), B = x.degree_t2() + y.degree_t2();
        std::vector<mpz_class> grid(static_cast<std::size_t>(A + 1) * (B + 1));
        for (const auto& s : x.terms_)
            for (const auto& t : y.terms_) {
                std::size_t idx = static_cast<std::size_t>(s.first.a + t.first.a) * (B + 1) + (s.first.b + t.first.b);
                mpz_addmul(grid[idx].get_mpz_t(), s.second.get_mpz_t(), t.second.get_mpz_t());
            }
        return from_grid(grid, A, B);
    }
    Poly times_monomial(const mpz_class& c, const Mono& m) const {
        Poly r;
        r.terms_.reserve(terms_.size());
        for (const auto& t : terms_) r.terms_.push_back({Mono{t.first.a + m.a, t.first.b + m.b}, t.second * c});
        return r;
    }
    Poly times(const mpz_class& c) const {
        if (c == 0) return Poly();
        Poly r = *this;
        for (auto& t : r.terms_) t.second *= c;
        return r;
    }
    /** @brief Divide every coefficient by c, which must divide them exactly. */
    Poly divexact(const mpz_class& c) const {
        Poly r = *this;
        for (auto& t : r.terms_) mpz_divexact(t.second.get_mpz_t(), t.second.get_mpz_t(), c.get_mpz_t());
        return r;
    }
    /** @brief Divide by the monomial t1^a t2^b, which must divide every term. */
    Poly div_monomial(const Mono& m) const {
        Poly r = *this;
        for (auto& t : r.terms_) {
            t.first.a -= m.a;
            t.first.b -= m.b;
        }
        return r;
    }

    /** @brief Exact quotient x / y; throws std::domain_error if y does not divide x over Z. */
    friend Poly exact_quotient(const Poly& x, const Poly& y) {
        if (y.is_zero()) throw std::domain_error("Poly: division by zero");
        if (x.is_zero()) return Poly();
        if (y.is_constant()) {
            for (const auto& t : x.terms_)
                if (!mpz_divisible_p(t.second.get_mpz_t(), y.terms_[0].second.get_mpz_t()))
                    throw std::domain_error("Poly: inexact division");
            return x.divexact(y.terms_[0].second);
        }
        if (y.is_monomial() && y.terms_[0].second == 1) {
            Mono m = y.terms_[0].first, c = x.monomial_content();
            if (c.a < m.a || c.b < m.b) throw std::domain_error("Poly: inexact division");
            return x.div_monomial(m);
        }
        std::uint32_t A = x.degree_t1(), B = x.degree_t2();
        std::vector<mpz_class> grid(static_cast<std::size_t>(A + 1) * (B + 1));
        for (const auto& t : x.terms_) grid[static_cast<std::size_t>(t.first.a) * (B + 1) + t.first.b] = t.second;
        const Mono lm = y.leading_monomial();
        const mpz_class& lc = y.leading_coefficient();
        std::vector<Term> quot;
        for (int d = static_cast<int>(x.total_degree()); d >= 0; --d) {
            for (int a = std::min<int>(d, static_cast<int>(A)); a >= 0; --a) {
                int b = d - a;
                if (b > static_cast<int>(B)) break;
                mpz_class& c = grid[static_cast<std::size_t>(a) * (B + 1) + b];
                if (c == 0) continue;
                if (a < static_cast<int>(lm.a) || b < static_cast<int>(lm.b) || !mpz_divisible_p(c.get_mpz_t(), lc.get_mpz_t()))
                    throw std::domain_error("Poly: inexact division");
                mpz_class f;
                mpz_divexact(f.get_mpz_t(), c.get_mpz_t(), lc.get_mpz_t());
                Mono qm{static_cast<std::uint32_t>(a) - lm.a, static_cast<std::uint32_t>(b) - lm.b};
                for (const auto& t : y.terms_) {
                    std::uint32_t ea = t.first.a + qm.a, eb = t.first.b + qm.b;
                    if (ea > A || eb > B) throw std::domain_error("Poly: inexact division");
                    mpz_submul(grid[static_cast<std::size_t>(ea) * (B + 1) + eb].get_mpz_t(), f.get_mpz_t(), t.second.get_mpz_t());
                }
                quot.push_back({qm, f});
            }
        }
        return from_terms(std::move(quot));
    }

    /** @brief Negate the coefficients of odd total degree (t_i -> -t_i). */
    Poly conj() const {
        Poly r = *this;
        for (auto& t : r.terms_)
            if (t.first.degree() % 2 == 1) t.second = -t.second;
        return r;
    }

    /** @brief Swap the roles of t1 and t2. */
    Poly swap_variables() const {
        std::vector<Term> ts;
        for (const auto& t : terms_) ts.push_back({Mono{t.first.b, t.first.a}, t.second});
        return from_terms(std::move(ts));
    }

    /** @brief Evaluate at (x, y) in any ring constructible from mpz_class via Rational. */
    template <class R>
    R evaluate(const R& x, const R& y) const {
        R acc = R(Rational(0));
        std::vector<R> px{R(Rational(1))}, py{R(Rational(1))};
        for (const auto& t : terms_) {
            while (px.size() <= t.first.a) px.push_back(px.back() * x);
            while (py.size() <= t.first.b) py.push_back(py.back() * y);
            acc = acc + R(Rational(t.second)) * px[t.first.a] * py[t.first.b];
        }
        return acc;
    }

    std::string str() const {
        if (terms_.empty()) return "0";
        std::ostringstream os;
        bool first = true;
        for (const auto& [m, c] : terms_) {
            mpz_class ac = abs(c);
            if (c < 0) os << "-";
            else if (!first) os << "+";
            first = false;
            bool need_star = false;
            if (ac != 1 || m.degree() == 0) {
                os << ac.get_str();
                need_star = true;
            }
            if (m.a > 0) {
                if (need_star) os << "*";
                os << "t1";
                if (m.a > 1) os << "^" << m.a;
                need_star = true;
            }
            if (m.b > 0) {
                if (need_star) os << "*";
                os << "t2";
                if (m.b > 1) os << "^" << m.b;
            }
        }
        return os.str();
    }

    /** @brief Parse the output format of str(); throws std::invalid_argument. */
    static Poly parse(const std::string& s) {
        std::vector<Term> ts;
        std::size_t i = 0;
        auto peek = [&]() { return i < s.size() ? s[i] : '\0'; };
        if (s == "0") return Poly();
        while (i < s.size()) {
            int sign = 1;
            if (peek() == '+') ++i;
            else if (peek() == '-') { sign = -1; ++i; }
            mpz_class c = 1;
            Mono m{};
            bool any = false;
            while (true) {
                if (std::isdigit(static_cast<unsigned char>(peek()))) {
                    std::size_t j = i;
                    while (std::isdigit(static_cast<unsigned char>(peek()))) ++i;
                    c *= mpz_class(s.substr(j, i - j));
                    any = true;
                } else if (peek() == 't') {
                    if (i + 1 >= s.size() || (s[i + 1] != '1' && s[i + 1] != '2')) throw std::invalid_argument("Poly: bad variable in '" + s + "'");
                    bool first_var = s[i + 1] == '1';
                    i += 2;
                    std::uint32_t e = 1;
                    if (peek() == '^') {
                        ++i;
                        std::size_t j = i;
                        while (std::isdigit(static_cast<unsigned char>(peek()))) ++i;
                        if (j == i) throw std::invalid_argument("Poly: bad exponent in '" + s + "'");
                        e = static_cast<std::uint32_t>(std::stoul(s.substr(j, i - j)));
                    }
                    (first_var ? m.a : m.b) += e;
                    any = true;
                } else {
                    throw std::invalid_argument("Poly: unexpected character in '" + s + "'");
                }
                if (peek() == '*') { ++i; continue; }
                break;
            }
            if (!any) throw std::invalid_argument("Poly: empty term in '" + s + "'");
            ts.push_back({m, c * sign});
            if (i < s.size() && peek() != '+' && peek() != '-') throw std::invalid_argument("Poly: trailing input in '" + s + "'");
        }
        return from_terms(std::move(ts));
    }

    // Conversion to Z[t2][t1]: index = t1 exponent, entry = coefficient polynomial in t2.
    std::vector<uz::Poly> to_dense_t1() const {
        std::vector<uz::Poly> d(degree_t1() + 1);
        for (const auto& t : terms_) {
            auto& row = d[t.first.a];
            if (row.size() <= t.first.b) row.resize(t.first.b + 1);
            row[t.first.b] = t.second;
        }
        return d;
    }
    static Poly from_dense_t1(const std::vector<uz::Poly>& d) {
        std::vector<Term> ts;
        for (std::size_t a = 0; a < d.size(); ++a)
            for (std::size_t b = 0; b < d[a].size(); ++b)
                if (d[a][b] != 0) ts.push_back({Mono{static_cast<std::uint32_t>(a), static_cast<std::uint32_t>(b)}, d[a][b]});
        return from_terms(std::move(ts));
    }

private:
    static Poly merge(const Poly& x, const Poly& y, bool subtract) {
        Poly r;
        r.terms_.reserve(x.terms_.size() + y.terms_.size());
        std::size_t i = 0, j = 0;
        while (i < x.terms_.size() || j < y.terms_.size()) {
            if (j == y.terms_.size() || (i < x.terms_.size() && glex_greater(x.terms_[i].first, y.terms_[j].first))) {
                r.terms_.push_back(x.terms_[i++]);
            } else if (i == x.terms_.size() || glex_greater(y.terms_[j].first, x.terms_[i].first)) {
                r.terms_.push_back({y.terms_[j].first, subtract ? mpz_class(-y.terms_[j].second) : y.terms_[j].second});
                ++j;
            } else {
                mpz_class c = subtract ? mpz_class(x.terms_[i].second - y.terms_[j].second) : mpz_class(x.terms_[i].second + y.terms_[j].second);
                if (c != 0) r.terms_.push_back({x.terms_[i].first, std::move(c)});
                ++i;
                ++j;
            }
        }
        return r;
    }
    static Poly from_grid(std::vector<mpz_class>& grid, std::uint32_t A, std::uint32_t B) {
        Poly r;
        for (int d = static_cast<int>(A + B); d >= 0; --d)
            for (int a = std::min<int>(d, static_cast<int>(A)); a >= 0; --a) {
                int b = d - a;
                if (b > static_cast<int>(B)) break;
                mpz_class& c = grid[static_cast<std::size_t>(a) * (B + 1) + b];
                if (c != 0) r.terms_.push_back({Mono{static_cast<std::uint32_t>(a), static_cast<std::uint32_t>(b)}, std::move(c)});
            }
        return r;
    }

    std::vector<Term> terms_;
};

inline std::ostream& operator<<(std::ostream& os, const Poly& p) { return os << p.str(); }

/** @brief Primitive part with positive leading coefficient. */
inline Poly primitive_part(const Poly& p) {
    if (p.is_zero()) return p;
    mpz_class c = p.content();
    if (p.leading_coefficient() < 0) c = -c;
    return c == 1 ? p : p.divexact(c);
}

namespace detail {

using Dense = std::vector<uz::Poly>;  // Z[t2][t1]

inline void trim_dense(Dense& d) {
    while (!d.empty() && d.back().empty()) d.pop_back();
}

/** @brief Whether b divides a over Z. */
inline bool uz_divides(const uz::Poly& a, const uz::Poly& b) {
    try {
        (void)uz::exact_div(a, b);
        return true;
    } catch (const std::domain_error&) {
        return false;
    }
}

/** @brief Polynomial part of the content: the gcd of all coefficients, primitive. */
inline uz::Poly dense_poly_content(const Dense& d) {
    std::vector<const uz::Poly*> cs;
    for (const auto& c : d)
        if (!c.empty()) cs.push_back(&c);
    if (cs.empty()) return {};
    if (cs.size() == 1) return uz::primitive(*cs[0]);
    for (const auto* c : cs)
        if (uz::deg(*c) == 0) return uz::Poly{mpz_class(1)};
    // A modular image proves the gcd trivial in the common case.
    uz::ModPoly m = uz::to_mod(*cs[0]);
    bool degree_kept = !m.empty() && m.back() != 0;
    for (std::size_t i = 1; i < cs.size() && degree_kept; ++i) {
        uz::ModPoly mi = uz::to_mod(*cs[i]);
        if (mi.back() == 0) { degree_kept = false; break; }
        if (uz::mod_gcd_degree(m, mi) == 0) return uz::Poly{mpz_class(1)};
    }
    // gcd(c_0, sum_i (i+1) c_i) divides every coefficient and is the content whenever it divides them all.
    uz::Poly comb;
    for (std::size_t i = 1; i < cs.size(); ++i) {
        uz::Poly t = *cs[i];
        for (auto& x : t) x *= static_cast<unsigned long>(i + 1);
        comb = comb.empty() ? t : uz::sub(comb, uz::sub(uz::Poly{}, t));
    }
    uz::Poly g = uz::gcd(*cs[0], comb);
    bool ok = true;
    for (std::size_t i = 1; i < cs.size() && ok; ++i) ok = uz_divides(*cs[i], g);
    if (ok) return g;
    g = uz::primitive(*cs[0]);
    for (std::size_t i = 1; i < cs.size(); ++i) g = uz::gcd(g, *cs[i]);
    return g;
}

inline uz::Poly dense_content(const Dense& d) {
    uz::Poly g = dense_poly_content(d);
    mpz_class ic = 0;
    for (const auto& c : d) {
        if (c.empty()) continue;
        mpz_class k = uz::content(uz::deg(g) == 0 ? c : uz::exact_div(c, g));
        mpz_gcd(ic.get_mpz_t(), ic.get_mpz_t(), k.get_mpz_t());
    }
    for (auto& x : g) x *= ic;
    return g;
}

inline Dense dense_div_content(const Dense& d, const uz::Poly& c) {
    Dense r(d.size());
    for (std::size_t i = 0; i < d.size(); ++i)
        if (!d[i].empty()) r[i] = uz::exact_div(d[i], c);
    return r;
}

inline Dense dense_primitive(const Dense& d) { return dense_div_content(d, dense_content(d)); }

/** @brief Sparse pseudo-remainder in Z[t2][t1]. */
inline Dense dense_prem(Dense a, const Dense& b) {
    int db = static_cast<int>(b.size()) - 1;
    const uz::Poly& lb = b.back();
    while (!a.empty() && static_cast<int>(a.size()) - 1 >= db) {
        int da = static_cast<int>(a.size()) - 1;
        uz::Poly la = a.back();
        for (auto& x : a) x = uz::mul(x, lb);
        for (int j = 0; j <= db; ++j) {
            auto& slot = a[static_cast<std::size_t>(da - db + j)];
            slot = uz::sub(slot, uz::mul(la, b[static_cast<std::size_t>(j)]));
        }
        trim_dense(a);
    }
    return a;
}

/** @brief Degree of the gcd of the images mod p at the evaluation t2 = point; -1 if the image drops degree. */
inline int image_gcd_degree(const Dense& a, const Dense& b, std::uint64_t point) {
    auto image = [&](const Dense& d) {
        uz::ModPoly r(d.size());
        for (std::size_t i = 0; i < d.size(); ++i) {
            std::uint64_t acc = 0;
            for (std::size_t j = d[i].size(); j-- > 0;) acc = uz::mod_add(uz::mod_mul(acc, point), uz::reduce(d[i][j]));
            r[i] = acc;
        }
        return r;
    };
    uz::ModPoly ia = image(a), ib = image(b);
    if (ia.back() == 0 || ib.back() == 0) return -1;
    return uz::mod_gcd_degree(ia, ib);
}

inline Poly normalize_gcd(const Poly& g) { return primitive_part(g); }

/** @brief gcd of two polynomials without monomial content, general (non-homogeneous) case. */
inline Poly general_gcd(const Poly& p, const Poly& q) {
    Dense a = p.to_dense_t1(), b = q.to_dense_t1();
    Dense as = p.swap_variables().to_dense_t1(), bs = q.swap_variables().to_dense_t1();
    // Modular images bound the degree of the gcd in each variable.
    const std::uint64_t points[] = {1234567891ULL, 987654321987ULL, 31415926535ULL};
    int bound_t1 = 1 << 30, bound_t2 = 1 << 30;
    for (auto pt : points) {
        int d1 = image_gcd_degree(a, b, pt);
        if (d1 >= 0) bound_t1 = std::min(bound_t1, d1);
        int d2 = image_gcd_degree(as, bs, pt);
        if (d2 >= 0) bound_t2 = std::min(bound_t2, d2);
        if (bound_t1 == 0 && bound_t2 == 0) return Poly(mpz_class(1));
    }
    if (bound_t1 == 0) {
        // The gcd lies in Z[t2]: it is the gcd of the t1-contents.
        uz::Poly g = uz::gcd(dense_content(a), dense_content(b));
        Dense d{g};
        return normalize_gcd(Poly::from_dense_t1(d));
    }
    if (bound_t2 == 0) {
        uz::Poly g = uz::gcd(dense_content(as), dense_content(bs));
        Dense d{g};
        return normalize_gcd(Poly::from_dense_t1(d).swap_variables());
    }
    uz::Poly ca = dense_content(a), cb = dense_content(b);
    uz::Poly c = uz::gcd(ca, cb);
    a = dense_div_content(a, ca);
    b = dense_div_content(b, cb);
    if (a.size() < b.size()) std::swap(a, b);
    Dense g;
    if (b.size() == 1) {
        g = Dense{uz::Poly{mpz_class(1)}};
    } else {
        while (true) {
            Dense r = dense_prem(a, b);
            if (r.empty()) { g = b; break; }
            if (r.size() == 1) { g = Dense{uz::Poly{mpz_class(1)}}; break; }
            a = std::move(b);
            b = dense_primitive(r);
        }
    }
    for (auto& x : g) x = uz::mul(x, c);
    return normalize_gcd(Poly::from_dense_t1(g));
}

/** @brief gcd of homogeneous polynomials without monomial content. */
inline Poly homogeneous_gcd(const Poly& p, const Poly& q) {
    auto dehom = [](const Poly& x) {
        uz::Poly u(x.degree_t1() + 1);
        for (const auto& t : x.terms()) u[t.first.a] = t.second;
        return u;
    };
    uz::Poly g = uz::gcd(dehom(p), dehom(q));
    std::uint32_t k = static_cast<std::uint32_t>(uz::deg(g));
    std::vector<Poly::Term> ts;
    for (std::uint32_t i = 0; i <= k; ++i)
        if (g[i] != 0) ts.push_back({Mono{i, k - i}, g[i]});
    return normalize_gcd(Poly::from_terms(std::move(ts)));
}

}  // namespace detail

/** @brief Greatest common divisor: primitive, positive leading coefficient; gcd(0,0) = 0. */
inline Poly gcd(const Poly& p, const Poly& q) {
    if (p.is_zero()) return primitive_part(q);
    if (q.is_zero()) return primitive_part(p);
    Mono mp = p.monomial_content(), mq = q.monomial_content();
    Mono m{std::min(mp.a, mq.a), std::min(mp.b, mq.b)};
    Poly mono = Poly::monomial(mpz_class(1), m.a, m.b);
    Poly pr = p.div_monomial(mp), qr = q.div_monomial(mq);
    if (pr.is_constant() || qr.is_constant()) return mono;
    Poly core = (pr.is_homogeneous() && qr.is_homogeneous()) ? detail::homogeneous_gcd(pr, qr) : detail::general_gcd(pr, qr);
    return core * mono;
}

}  // namespace hilbgw
