#include <doctest.h>

#include <satokit/laurent.hpp>

#include <random>

using namespace satokit;

namespace {

const FieldSpec Q = rationals();
const FieldSpec F5 = prime_field(5);

LaurentSeries from_pairs(FieldSpec f, long lo, long hi, bool exact,
                         std::initializer_list<std::pair<long, long>> cs) {
    LaurentSeries s(f, lo, hi, exact);
    for (auto [e, c] : cs) s.set(e, Scalar(f, c));
    return s;
}

LaurentSeries random_series(FieldSpec f, std::mt19937& rng, long lo, long hi) {
    LaurentSeries s(f, lo, hi, false);
    std::uniform_int_distribution<long> num(-4, 4), den(1, 3);
    for (long e = lo; e < hi; ++e) {
        long n = num(rng);
        if (n == 0) continue;
        s.set(e, f.is_rational() ? Scalar::fraction(f, n, den(rng)) : Scalar(f, n));
    }
    return s;
}

} // namespace

TEST_CASE("scalar arithmetic is exact over Q and F_5") {
    Scalar a = Scalar::fraction(Q, 1, 3), b = Scalar::fraction(Q, 2, 6);
    CHECK(a == b);
    CHECK((a + b).str() == "2/3");
    CHECK((a * Scalar(Q, 3)).is_one());

    Scalar x(F5, 2);
    CHECK(x.inverse().str() == "3");
    CHECK((x * x.inverse()).is_one());
    CHECK_THROWS_AS(Scalar(F5, 0).inverse(), input_error);
    CHECK_THROWS_AS((void)prime_field(6), input_error);
    CHECK_THROWS_AS((void)(Scalar(Q, 1) + Scalar(F5, 1)), field_mismatch);
}

TEST_CASE("add: cancellation, identity, window intersection") {
    auto a = from_pairs(Q, -1, 2, true, {{-1, 1}, {0, 1}}); // z^-1 + 1
    auto b = from_pairs(Q, -1, 2, true, {{0, -1}, {1, 1}}); // -1 + z
    auto s = a + b;
    CHECK(s.coeff(-1).is_one());
    CHECK(s.coeff(0).is_zero());
    CHECK(s.coeff(1).is_one());

    auto zero = LaurentSeries::zero(Q, -1, 2, true);
    CHECK((a + zero) == a);

    // (1+z, hi=3) + (1, hi=2) -> (2+z, hi=2); oracle: mask the full-precision
    // sum to the intersected window
    auto c = from_pairs(Q, 0, 3, false, {{0, 1}, {1, 1}});
    auto d = from_pairs(Q, 0, 2, false, {{0, 1}});
    auto cd = c + d;
    CHECK(cd.hi() == 2);
    CHECK(cd.coeff(0) == Scalar(Q, 2));
    CHECK(cd.coeff(1).is_one());
    CHECK_FALSE(cd.determines(2));
    auto c_full = from_pairs(Q, 0, 3, true, {{0, 1}, {1, 1}});
    auto d_full = from_pairs(Q, 0, 3, true, {{0, 1}});
    CHECK((c_full + d_full).masked(0, 2) == cd);
}

TEST_CASE("mul: monomials, polynomials, precision propagation") {
    auto m = LaurentSeries::monomial(Q, -2) * LaurentSeries::monomial(Q, 3);
    CHECK(m == LaurentSeries::monomial(Q, 1));

    auto p = from_pairs(Q, 0, 4, false, {{0, 1}, {1, 1}});  // 1+z
    auto q = from_pairs(Q, 0, 4, false, {{0, 1}, {1, -1}}); // 1-z
    auto pq = p * q;
    CHECK(pq.hi() == 4);
    CHECK(pq.coeff(0).is_one());
    CHECK(pq.coeff(1).is_zero());
    CHECK(pq.coeff(2) == Scalar(Q, -1));
    CHECK(pq.coeff(3).is_zero());

    // (z^-1 + 1, hi=2) * (z^-1 exact) -> z^-2 + z^-1 with hi = 1;
    // oracle: multiply at full precision, then mask
    auto a = from_pairs(Q, -1, 2, false, {{-1, 1}, {0, 1}});
    auto b = LaurentSeries::monomial(Q, -1);
    auto ab = a * b;
    CHECK(ab.lo() == -2);
    CHECK(ab.hi() == 1);
    CHECK(ab.coeff(-2).is_one());
    CHECK(ab.coeff(-1).is_one());
    auto a_full = from_pairs(Q, -1, 2, true, {{-1, 1}, {0, 1}});
    CHECK((a_full * b).masked(-2, 1) == ab.masked(-2, 1));
}

TEST_CASE("invert: monomial, geometric series, prime field") {
    CHECK(LaurentSeries::monomial(Q, 1).inverted(2) == LaurentSeries::monomial(Q, -1));

    auto s = from_pairs(Q, 0, 8, true, {{0, 1}, {1, 1}}); // 1+z
    auto inv = s.inverted(4);
    for (long e = 0; e < 4; ++e) CHECK(inv.coeff(e) == Scalar(Q, e % 2 ? -1 : 1));
    auto back = (s * inv).truncated(4);
    CHECK(back.coeff(0).is_one());
    for (long e = 1; e < 4; ++e) CHECK(back.coeff(e).is_zero());

    auto f = from_pairs(F5, 0, 4, true, {{0, 2}, {1, 1}}); // 2+z over F_5
    auto finv = f.inverted(2);
    CHECK(finv.coeff(0) == Scalar(F5, 3)); // 2^{-1} = 3 mod 5
    auto fb = (f * finv).truncated(2);
    CHECK(fb.coeff(0).is_one());
    CHECK(fb.coeff(1).is_zero());

    CHECK_THROWS_AS((void)LaurentSeries::zero(Q, 0, 3, true).inverted(2), input_error);
    // insufficient precision: 1+z known mod z^2 cannot determine 4 terms
    auto shallow = from_pairs(Q, 0, 2, false, {{0, 1}, {1, 1}});
    CHECK_THROWS_AS((void)shallow.inverted(4), precision_error);
}

TEST_CASE("residue") {
    CHECK(LaurentSeries::monomial(Q, -1).residue().is_one());
    auto s = from_pairs(Q, -2, 1, true, {{-2, 3}, {-1, 5}, {0, 7}});
    CHECK(s.residue() == Scalar(Q, 5));
    // residue(invert(1-z) * z^-1) = 1 via the geometric series
    auto g = from_pairs(Q, 0, 6, true, {{0, 1}, {1, -1}});
    CHECK((g.inverted(4) * LaurentSeries::monomial(Q, -1)).residue().is_one());
    // a window that ends before z^{-1} does not determine the residue
    auto und = from_pairs(Q, -3, -2, false, {{-3, 1}});
    CHECK_THROWS_AS((void)und.residue(), precision_error);
    // but all-below-lo is determined (exactly zero)
    CHECK(from_pairs(Q, 0, 2, false, {{0, 1}}).residue().is_zero());
}

TEST_CASE("monomial shift and involution") {
    CHECK(LaurentSeries::unit(Q).shifted(3) == LaurentSeries::monomial(Q, 3));
    auto s = from_pairs(Q, -1, 3, false, {{-1, 2}, {1, 5}});
    CHECK(s.shifted(4).shifted(-4) == s);
    auto t = from_pairs(Q, -1, 2, true, {{-1, 1}, {0, 1}}).shifted(-2);
    CHECK(t.coeff(-3).is_one());
    CHECK(t.coeff(-2).is_one());
    CHECK(t.lo() == -3);
}

TEST_CASE("ring axioms on random series over Q and F_5") {
    for (FieldSpec f : {Q, F5}) {
        std::mt19937 rng(42);
        for (int trial = 0; trial < 20; ++trial) {
            auto a = random_series(f, rng, -2, 3);
            auto b = random_series(f, rng, -1, 4);
            auto c = random_series(f, rng, 0, 3);
            CHECK((a + b) == (b + a));
            CHECK(((a + b) + c) == (a + (b + c)));
            auto lhs = (a * b) * c;
            auto rhs = a * (b * c);
            CHECK(lhs.lo() == rhs.lo());
            for (long e = lhs.lo(); e < std::min(lhs.hi(), rhs.hi()); ++e)
                CHECK(lhs.coeff(e) == rhs.coeff(e));
            auto dl = a * (b + c);
            auto dr = a * b + a * c;
            for (long e = dl.lo(); e < std::min(dl.hi(), dr.hi()); ++e)
                CHECK(dl.coeff(e) == dr.coeff(e));
        }
    }
}

TEST_CASE("precision monotonicity: masking inputs never changes determined coefficients") {
    std::mt19937 rng(7);
    for (int trial = 0; trial < 20; ++trial) {
        auto a = random_series(Q, rng, -2, 4);
        auto b = random_series(Q, rng, -1, 5);
        auto prod = a * b;
        auto masked = a.masked(-2, 3) * b.masked(-1, 4);
        for (long e = masked.lo(); e < masked.hi(); ++e) CHECK(masked.coeff(e) == prod.coeff(e));
        auto sum = a + b;
        auto msum = a.masked(-2, 3) + b;
        for (long e = msum.lo(); e < msum.hi(); ++e) CHECK(msum.coeff(e) == sum.coeff(e));
    }
}

TEST_CASE("residues of exact differentials vanish (char 0)") {
    std::mt19937 rng(11);
    for (int trial = 0; trial < 10; ++trial) {
        auto sample = random_series(Q, rng, -3, 4);
        LaurentSeries fexact(Q, -3, 4, true);
        for (auto [e, c] : sample.coefficients()) fexact.set(e, c);
        CHECK(fexact.derivative().residue().is_zero());
    }
}
