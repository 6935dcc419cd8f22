#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "greenbn/linalg.hpp"
#include "greenbn/poly.hpp"
#include "greenbn/rational.hpp"

using namespace greenbn;

namespace {

uint64_t rng_state = 0x243f6a8885a308d3ULL;
uint64_t next_u64() {
    rng_state += 0x9e3779b97f4a7c15ULL;
    uint64_t x = rng_state;
    x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
    x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
    return x ^ (x >> 31);
}
int rnd_int(int lo, int hi) { return lo + static_cast<int>(next_u64() % (hi - lo + 1)); }

Rational rnd_rational() { return Rational(rnd_int(-9, 9), rnd_int(1, 5)); }

Poly rnd_poly(int max_deg) {
    std::vector<Rational> cs;
    int d = rnd_int(0, max_deg);
    for (int i = 0; i <= d; ++i) cs.push_back(rnd_rational());
    return Poly(std::move(cs));
}

Poly T(int k) { return Poly::monomial(Rational(1), k); }

}  // namespace

TEST_CASE("rational invariants") {
    Rational r(-6, 4);
    CHECK(r.num() == -3);
    CHECK(r.den() == 2);
    CHECK(Rational(2, 2) == Rational(1));
    CHECK_THROWS(Rational(1, 0));
    CHECK(Rational::from_string("-14/21") == Rational(-2, 3));
    CHECK((Rational(1, 3) + Rational(1, 6)) == Rational(1, 2));
    CHECK_THROWS(Rational(1) / Rational(0));
    for (int trial = 0; trial < 40; ++trial) {
        Rational a = rnd_rational(), b = rnd_rational(), c = rnd_rational();
        CHECK((a + b) + c == a + (b + c));
        CHECK((a * b) * c == a * (b * c));
        CHECK(a + b == b + a);
        CHECK(a * b == b * a);
        CHECK(a * (b + c) == a * b + a * c);
    }
}

TEST_CASE("poly coefficient reads") {
    Poly p = T(2) + T(1) * Rational(3);  // t^2 + 3t
    CHECK(p.coeff(1) == Rational(3));
    CHECK(Poly().coeff(5) == Rational(0));
    CHECK(T(12).coeff(12) == Rational(1));
    CHECK(p.degree() == 2);
    CHECK(Poly().degree() == -1);
}

TEST_CASE("poly arithmetic and gcd") {
    Poly a = rnd_poly(6), b = rnd_poly(6), c = rnd_poly(6);
    CHECK((a + b) == (b + a));
    CHECK((a * b) == (b * a));
    CHECK(((a + b) + c) == (a + (b + c)));
    CHECK(((a * b) * c) == (a * (b * c)));
    Poly g = Poly::gcd((T(1) + Poly::one()) * (T(1) - Poly::one()),
                       (T(1) - Poly::one()) * (T(1) - Poly::one()));
    CHECK(g == (T(1) - Poly::one()));
    CHECK(Poly::gcd(Poly(), Poly()).is_zero());
}

TEST_CASE("ratfunc normalization") {
    // (t^2-1)/(t-1) = t+1
    RatFunc f(T(2) - Poly::one(), T(1) - Poly::one());
    CHECK(f.is_polynomial());
    CHECK(f.num() == (T(1) + Poly::one()));
    // 2t/2 = t
    RatFunc g(T(1) * Rational(2), Poly(Rational(2)));
    CHECK(g == RatFunc(T(1)));
    // (t+1)(t-1) / (t-1)^2 = (t+1)/(t-1), with a monic denominator
    RatFunc h((T(1) + Poly::one()) * (T(1) - Poly::one()) * Rational(5),
              (T(1) - Poly::one()) * (T(1) - Poly::one()) * Rational(5));
    CHECK(h.num() == (T(1) + Poly::one()));
    CHECK(h.den() == (T(1) - Poly::one()));
    CHECK_THROWS_WITH_AS(RatFunc(Poly::one(), Poly()), "division by zero polynomial",
                         std::domain_error);
}

TEST_CASE("ratfunc field properties on random inputs") {
    for (int trial = 0; trial < 60; ++trial) {
        Poly p = rnd_poly(5), q = rnd_poly(5);
        if (q.is_zero()) continue;
        RatFunc f(p * q, q);
        CHECK(f.is_polynomial());
        CHECK(f.num() == p);
    }
}

TEST_CASE("linsolve examples") {
    MatrixRF id = MatrixRF::identity(2);
    std::vector<RatFunc> b{RatFunc(T(1)), RatFunc(Poly::one())};
    auto x = linsolve(id, b);
    CHECK(x == b);

    MatrixRF d(2, 2);
    d.at(0, 0) = RatFunc(T(1));
    d.at(1, 1) = RatFunc(Poly::one());
    auto y = linsolve(d, {RatFunc(T(2)), RatFunc(T(1))});
    CHECK(y[0] == RatFunc(T(1)));
    CHECK(y[1] == RatFunc(T(1)));

    MatrixRF s(1, 1);
    s.at(0, 0) = RatFunc(T(2) - Poly::one());
    auto z = linsolve(s, {RatFunc(T(2) - Poly::one())});
    CHECK(z[0] == RatFunc(Poly::one()));

    MatrixRF sing(2, 2);
    sing.at(0, 0) = RatFunc(T(1));
    sing.at(0, 1) = RatFunc(T(1));
    sing.at(1, 0) = RatFunc(T(1));
    sing.at(1, 1) = RatFunc(T(1));
    CHECK_THROWS_WITH_AS(linsolve(sing, b), "singular system", std::domain_error);
}

TEST_CASE("linsolve substitution is exact on random systems") {
    for (int trial = 0; trial < 25; ++trial) {
        int n = rnd_int(1, 4);
        MatrixRF a(n, n);
        for (int r = 0; r < n; ++r)
            for (int c = 0; c < n; ++c) a.at(r, c) = RatFunc(rnd_poly(2));
        std::vector<RatFunc> b;
        for (int r = 0; r < n; ++r) b.emplace_back(rnd_poly(2));
        std::vector<RatFunc> x;
        try {
            x = linsolve(a, b);
        } catch (const std::domain_error&) {
            continue;  // genuinely singular draw
        }
        for (int r = 0; r < n; ++r) {
            RatFunc acc;
            for (int c = 0; c < n; ++c) acc += a.at(r, c) * x[static_cast<size_t>(c)];
            CHECK(acc == b[static_cast<size_t>(r)]);
        }
    }
}

TEST_CASE("matrix multiply and transpose") {
    MatrixRF a(2, 2);
    a.at(0, 0) = RatFunc(T(1));
    a.at(0, 1) = RatFunc(Poly::one());
    a.at(1, 1) = RatFunc(T(2));
    MatrixRF prod = a * MatrixRF::identity(2);
    CHECK(prod == a);
    CHECK(a.transposed().at(1, 0) == a.at(0, 1));
    CHECK((a - a).is_zero());
}
