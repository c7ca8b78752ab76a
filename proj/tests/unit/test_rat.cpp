#include <doctest.h>

#include <random>

#include "jensenlab/rat.hpp"

using namespace jensenlab;

namespace {

// Naive rational reference: mpz pairs reduced with a hand-rolled Euclid gcd.
// Deliberately avoids mpq so it exercises an independent code path.
struct NaiveRat {
    Int n, d;  // d > 0

    static Int gcd(Int a, Int b) {
        a = ::abs(a);
        b = ::abs(b);
        while (b != 0) {
            Int t = a % b;
            a = b;
            b = t;
        }
        return a;
    }
    static NaiveRat make(Int n, Int d) {
        if (d < 0) {
            n = -n;
            d = -d;
        }
        Int g = gcd(n, d);
        if (g != 0) {
            n /= g;
            d /= g;
        }
        return {n, d};
    }
    NaiveRat add(const NaiveRat& o) const { return make(n * o.d + o.n * d, d * o.d); }
    NaiveRat sub(const NaiveRat& o) const { return make(n * o.d - o.n * d, d * o.d); }
    NaiveRat mul(const NaiveRat& o) const { return make(n * o.n, d * o.d); }
    NaiveRat div(const NaiveRat& o) const { return make(n * o.d, d * o.n); }
};

}  // namespace

TEST_SUITE("rat") {

TEST_CASE("canonical form") {
    CHECK(Rat(2, 4) == Rat(1, 2));
    CHECK(Rat(1, -2) == Rat(-1, 2));
    CHECK(Rat(1, -2).den() > 0);
    CHECK(Rat(0, 7).den() == 1);
    CHECK_THROWS_AS(Rat(1, 0), DomainError);
}

TEST_CASE("parse") {
    CHECK(Rat::parse("0.5") == Rat(1, 2));
    CHECK(Rat::parse("3e12") == Rat(Int("3000000000000")));
    CHECK(Rat::parse("-1.25e-3") == Rat(-1, 800));
    CHECK(Rat::parse("7/3") == Rat(7, 3));
    CHECK(Rat::parse("10") == Rat(10));
    CHECK(Rat::parse("0.1") == Rat(1, 10));
    CHECK_THROWS_AS(Rat::parse("abc"), UsageError);
    CHECK_THROWS_AS(Rat::parse(""), UsageError);
}

TEST_CASE("arithmetic and order") {
    Rat a(1, 3), b(1, 6);
    CHECK(a + b == Rat(1, 2));
    CHECK(a - b == Rat(1, 6));
    CHECK(a * b == Rat(1, 18));
    CHECK(a / b == Rat(2));
    CHECK(a > b);
    CHECK_THROWS_AS(a / Rat(0), DomainError);
    CHECK(Rat(-3, 2).abs() == Rat(3, 2));
    CHECK(Rat(2, 3).pow(3) == Rat(8, 27));
    CHECK(Rat(2, 3).pow(-2) == Rat(9, 4));
    CHECK(Rat(7, 2).floor() == 3);
    CHECK(Rat(7, 2).ceil() == 4);
    CHECK(Rat(-7, 2).floor() == -4);
    CHECK(Rat(-7, 2).ceil() == -3);
}

TEST_CASE("sqrt bounds") {
    Rat x(2);
    Rat lb = x.sqrt_lb(), ub = x.sqrt_ub();
    CHECK(lb * lb <= x);
    CHECK(ub * ub >= x);
    CHECK(Rat(9, 4).sqrt_lb() * Rat(9, 4).sqrt_lb() <= Rat(9, 4));
    CHECK(Rat(0).sqrt_lb() == Rat(0));
}

TEST_CASE("binomials and factorials") {
    CHECK(binomial(5, 2) == 10);
    CHECK(binomial(30, 15) == Int("155117520"));
    CHECK(factorial(10) == 3628800);
    CHECK(falling_factorial(7, 3) == 210);
    CHECK(falling_factorial(7, 0) == 1);
}

TEST_CASE("bernoulli numbers") {
    CHECK(bernoulli(0) == Rat(1));
    CHECK(bernoulli(1) == Rat(-1, 2));
    CHECK(bernoulli(2) == Rat(1, 6));
    CHECK(bernoulli(3) == Rat(0));
    CHECK(bernoulli(4) == Rat(-1, 30));
    CHECK(bernoulli(6) == Rat(1, 42));
    CHECK(bernoulli(8) == Rat(-1, 30));
    CHECK(bernoulli(10) == Rat(5, 66));
    CHECK(bernoulli(12) == Rat(-691, 2730));
    CHECK(bernoulli(30) == Rat(Int("8615841276005"), Int(14322)));
}

TEST_CASE("agrees with naive big-integer reference on random cases") {
    std::mt19937_64 rng(12345);
    std::uniform_int_distribution<long> num(-1000000, 1000000);
    std::uniform_int_distribution<long> den(1, 1000000);
    for (int i = 0; i < 10000; ++i) {
        long an = num(rng), ad = den(rng), bn = num(rng), bd = den(rng);
        Rat a(an, ad), b(bn, bd);
        NaiveRat na = NaiveRat::make(Int(an), Int(ad));
        NaiveRat nb = NaiveRat::make(Int(bn), Int(bd));
        auto eq = [](const Rat& r, const NaiveRat& n) {
            return r.num() == n.n && r.den() == n.d;
        };
        CHECK(eq(a + b, na.add(nb)));
        CHECK(eq(a - b, na.sub(nb)));
        CHECK(eq(a * b, na.mul(nb)));
        if (bn != 0) CHECK(eq(a / b, na.div(nb)));
    }
}

}  // TEST_SUITE
