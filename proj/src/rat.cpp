#include "jensenlab/rat.hpp"

#include <cctype>
#include <mutex>
#include <vector>

namespace jensenlab {

Rat::Rat(const Int& num, const Int& den) : q_(num, den) {
    if (sgn(den) == 0) throw DomainError("Rat: zero denominator");
    q_.canonicalize();
}

Rat::Rat(long num, long den) : Rat(Int(num), Int(den)) {}

Rat& Rat::operator/=(const Rat& o) {
    if (o.is_zero()) throw DomainError("Rat: division by zero");
    q_ /= o.q_;
    return *this;
}

Rat Rat::parse(const std::string& text) {
    std::string s = text;
    // strip whitespace
    std::string t;
    for (char c : s)
        if (!std::isspace(static_cast<unsigned char>(c))) t.push_back(c);
    if (t.empty()) throw UsageError("Rat: empty numeric literal");

    auto slash = t.find('/');
    if (slash != std::string::npos) {
        Int n, d;
        if (n.set_str(t.substr(0, slash), 10) != 0 ||
            d.set_str(t.substr(slash + 1), 10) != 0)
            throw UsageError("Rat: bad rational literal '" + text + "'");
        return Rat(n, d);
    }

    bool neg = false;
    std::size_t i = 0;
    if (t[i] == '+' || t[i] == '-') neg = (t[i++] == '-');

    std::string digits;
    long frac_digits = 0;
    bool seen_dot = false, seen_digit = false;
    for (; i < t.size() && (std::isdigit(static_cast<unsigned char>(t[i])) || t[i] == '.'); ++i) {
        if (t[i] == '.') {
            if (seen_dot) throw UsageError("Rat: bad literal '" + text + "'");
            seen_dot = true;
        } else {
            digits.push_back(t[i]);
            seen_digit = true;
            if (seen_dot) ++frac_digits;
        }
    }
    if (!seen_digit) throw UsageError("Rat: bad literal '" + text + "'");

    long exp10 = 0;
    if (i < t.size()) {
        if (t[i] != 'e' && t[i] != 'E')
            throw UsageError("Rat: bad literal '" + text + "'");
        exp10 = std::stol(t.substr(i + 1));
    }

    Int mant;
    mant.set_str(digits, 10);
    if (neg) mant = -mant;

    long e = exp10 - frac_digits;
    Int num = mant, den = 1;
    if (e > 0) {
        Int p;
        mpz_ui_pow_ui(p.get_mpz_t(), 10, static_cast<unsigned long>(e));
        num *= p;
    } else if (e < 0) {
        mpz_ui_pow_ui(den.get_mpz_t(), 10, static_cast<unsigned long>(-e));
    }
    return Rat(num, den);
}

Rat Rat::pow(long e) const {
    if (e == 0) return Rat(1);
    bool inv = e < 0;
    unsigned long ae = inv ? static_cast<unsigned long>(-e) : static_cast<unsigned long>(e);
    if (inv && is_zero()) throw DomainError("Rat: 0 to a negative power");
    Int n, d;
    mpz_pow_ui(n.get_mpz_t(), num().get_mpz_t(), ae);
    mpz_pow_ui(d.get_mpz_t(), den().get_mpz_t(), ae);
    return inv ? Rat(d, n) : Rat(n, d);
}

Int Rat::floor() const {
    Int r;
    mpz_fdiv_q(r.get_mpz_t(), num().get_mpz_t(), den().get_mpz_t());
    return r;
}

Int Rat::ceil() const {
    Int r;
    mpz_cdiv_q(r.get_mpz_t(), num().get_mpz_t(), den().get_mpz_t());
    return r;
}

Rat Rat::sqrt_lb() const {
    if (sign() < 0) throw DomainError("Rat: sqrt of negative value");
    // sqrt(p/q) = sqrt(p q)/q >= isqrt(p q)/q
    Int pq = num() * den(), r;
    mpz_sqrt(r.get_mpz_t(), pq.get_mpz_t());
    return Rat(r, den());
}

Rat Rat::sqrt_ub() const {
    if (sign() < 0) throw DomainError("Rat: sqrt of negative value");
    Int pq = num() * den(), r;
    mpz_sqrt(r.get_mpz_t(), pq.get_mpz_t());
    if (r * r < pq) r += 1;
    return Rat(r, den());
}

std::string Rat::str() const {
    if (is_integer()) return num().get_str();
    return num().get_str() + "/" + den().get_str();
}

Int binomial(unsigned long n, unsigned long k) {
    Int r;
    mpz_bin_uiui(r.get_mpz_t(), n, k);
    return r;
}

Int factorial(unsigned long n) {
    Int r;
    mpz_fac_ui(r.get_mpz_t(), n);
    return r;
}

Int falling_factorial(unsigned long n, unsigned long k) {
    Int r = 1;
    for (unsigned long i = 0; i < k; ++i) r *= Int(n - i);
    return r;
}

namespace {

// Knuth-Buckholtz tangent-number triangle: T[1]=1, T[2]=2, T[3]=16, ...
// with tan x = sum T[n] x^(2n-1)/(2n-1)!.
std::vector<Int> tangent_numbers(unsigned n) {
    std::vector<Int> T(n + 1, Int(0));
    if (n >= 1) T[1] = 1;
    for (unsigned k = 2; k <= n; ++k) T[k] = Int(k - 1) * T[k - 1];
    for (unsigned k = 2; k <= n; ++k)
        for (unsigned j = k; j <= n; ++j)
            T[j] = Int(j - k) * T[j - 1] + Int(j - k + 2) * T[j];
    return T;
}

}  // namespace

Rat bernoulli(unsigned n) {
    if (n == 0) return Rat(1);
    if (n == 1) return Rat(-1, 2);
    if (n % 2 == 1) return Rat(0);

    static std::mutex mu;
    static std::vector<Rat> even_cache = {Rat(1)};  // even_cache[m] = B_{2m}
    std::lock_guard<std::mutex> lock(mu);

    unsigned m = n / 2;
    if (m >= even_cache.size()) {
        unsigned hi = std::max<unsigned>(m, 2 * even_cache.size());
        auto T = tangent_numbers(hi);
        even_cache.resize(hi + 1);
        for (unsigned j = 1; j <= hi; ++j) {
            // B_{2j} = (-1)^(j-1) * T_j * 2j / (2^(2j) (2^(2j) - 1))
            Int p2;
            mpz_ui_pow_ui(p2.get_mpz_t(), 2, 2 * j);
            Int num = T[j] * Int(2 * j);
            if (j % 2 == 0) num = -num;
            even_cache[j] = Rat(num, p2 * (p2 - 1));
        }
    }
    return even_cache[m];
}

}  // namespace jensenlab
