#include <catch2/catch_amalgamated.hpp>

#include "hbstretch/dyadic.hpp"
#include "hbstretch/int_poly.hpp"
#include "hbstretch/interval.hpp"
#include "hbstretch/quad_surd.hpp"
#include "hbstretch/root_isolation.hpp"

#include "test_util.hpp"

using namespace hbstretch;
using testutil::contains_decimal;
using testutil::contains_rational;

namespace {

// Independent floor-sqrt oracle: plain binary search, no shared code with
// the library's isqrt path.
Integer binary_search_sqrt(const Integer& n) {
    Integer lo = 0, hi = n + 1;
    while (hi - lo > 1) {
        Integer mid = (lo + hi) / 2;
        if (mid * mid <= n) {
            lo = mid;
        } else {
            hi = mid;
        }
    }
    return lo;
}

}  // namespace

TEST_CASE("dyadic arithmetic is exact and ordered") {
    Dyadic a(Integer(3), -2);   // 0.75
    Dyadic b(Integer(5), -4);   // 0.3125
    CHECK((a + b) == Dyadic(Integer(17), -4));
    CHECK((a - b) == Dyadic(Integer(7), -4));
    CHECK((a * b) == Dyadic(Integer(15), -6));
    CHECK(a > b);
    CHECK(Dyadic(Integer(-1), 0) < Dyadic());
    CHECK(Dyadic(Integer(8), -3) == Dyadic(Integer(1)));  // normalization
}

TEST_CASE("dyadic directed rounding") {
    Dyadic x(Integer(0b10110111), 0);  // 183
    CHECK(x.round_down(4) <= x);
    CHECK(x.round_up(4) >= x);
    CHECK(x.round_down(32) == x);
    Dyadic neg(Integer(-183), -5);
    CHECK(neg.round_down(4) <= neg);
    CHECK(neg.round_up(4) >= neg);
}

TEST_CASE("dyadic decimal rendering is directed") {
    Dyadic third_ish(Integer(1), -2);  // 0.25
    CHECK(third_ish.to_decimal(2, true) == "0.25");
    Dyadic x(Integer(1), -3);  // 0.125
    CHECK(x.to_decimal(2, true) == "0.12");
    CHECK(x.to_decimal(2, false) == "0.13");
    Dyadic m(Integer(-1), -3);
    CHECK(m.to_decimal(2, true) == "-0.13");
    CHECK(m.to_decimal(2, false) == "-0.12");
}

TEST_CASE("surd normalization") {
    SECTION("square factor extraction and gcd reduction") {
        QuadSurd s = QuadSurd::make(2, 2, 8, 4);  // (2 + 2*sqrt(8))/4
        CHECK(s.p() == 1);
        CHECK(s.q() == 2);
        CHECK(s.D() == 2);
        CHECK(s.r() == 2);
    }
    SECTION("already canonical") {
        QuadSurd s = QuadSurd::make(3, 1, 5, 2);
        CHECK(s.p() == 3);
        CHECK(s.q() == 1);
        CHECK(s.D() == 5);
        CHECK(s.r() == 2);
    }
    SECTION("zero collapses the radicand") {
        QuadSurd s = QuadSurd::make(0, 0, 7, 1);
        CHECK(s.is_zero());
        CHECK(s.D() == 0);
    }
    SECTION("negative denominator flips signs") {
        QuadSurd s = QuadSurd::make(1, 1, 5, -2);
        CHECK(s.r() == 2);
        CHECK(s.p() == -1);
        CHECK(s.q() == -1);
    }
    SECTION("sqrt(1) folds into the rational part") {
        QuadSurd s = QuadSurd::make(1, 3, 4, 2);  // (1 + 3*sqrt(4))/2 = 7/2
        CHECK(s.is_rational());
        CHECK(s.p() == 7);
        CHECK(s.r() == 2);
    }
}

TEST_CASE("surd comparison within a field") {
    QuadSurd a = QuadSurd::make(3, 1, 5, 2);
    QuadSurd b = QuadSurd::make(1, 1, 5, 2);
    CHECK(surd_compare(a, b) > 0);

    QuadSurd c = QuadSurd::make(11, 1, 117, 2);
    QuadSurd d = QuadSurd::make(11, -1, 117, 2);
    CHECK(surd_compare(c, d) > 0);

    // (3+sqrt5)/2 vs rational 2: sign of 3 + sqrt5 - 4 = sqrt5 - 1 > 0.
    CHECK(surd_compare(a, QuadSurd::from_integer(2)) > 0);
    CHECK(surd_compare(QuadSurd::from_integer(2), a) < 0);
    CHECK(surd_compare(a, a) == 0);

    QuadSurd other_field = QuadSurd::make(1, 1, 7, 1);
    CHECK_THROWS_AS(surd_compare(a, other_field), IncomparableFieldsError);
    CHECK(surd_compare_certified(a, other_field) < 0);  // 2.618 < 3.645
}

TEST_CASE("surd field arithmetic") {
    QuadSurd mu = QuadSurd::make(3, 1, 5, 2);
    QuadSurd inv = surd_inverse(mu);
    CHECK(surd_mul(mu, inv) == QuadSurd::from_integer(1));
    CHECK(surd_add(mu, inv) == QuadSurd::from_integer(3));  // mu + 1/mu = 3

    QuadSurd phi = QuadSurd::make(1, 1, 5, 2);
    CHECK(surd_sub(phi, surd_inverse(phi)) == QuadSurd::from_integer(1));
    CHECK(surd_mul(phi, phi) == surd_add(phi, QuadSurd::from_integer(1)));
}

TEST_CASE("surd comparison agrees with interval refinement") {
    for (int trial = 0; trial < 200; ++trial) {
        QuadSurd a = QuadSurd::make(testutil::rand_int(-20, 20),
                                    testutil::rand_int(-10, 10), 5,
                                    testutil::rand_int(1, 6));
        QuadSurd b = QuadSurd::make(testutil::rand_int(-20, 20),
                                    testutil::rand_int(-10, 10), 5,
                                    testutil::rand_int(1, 6));
        int exact = surd_compare(a, b);
        if (exact == 0) continue;
        for (unsigned bits = 32;; bits *= 2) {
            REQUIRE(bits <= 4096);
            RealInterval ia = a.to_interval(bits), ib = b.to_interval(bits);
            if (!ia.intersects(ib)) {
                CHECK((exact < 0) == ia.certainly_less(ib));
                break;
            }
        }
    }
}

TEST_CASE("interval sqrt enclosures") {
    SECTION("perfect square") {
        RealInterval r = interval_sqrt(RealInterval(Integer(4)), 64);
        CHECK(r.contains(Dyadic(Integer(2))));
        CHECK(r.width() <= Dyadic(Integer(2), -64));
    }
    SECTION("sqrt(17) against a binary-search oracle") {
        RealInterval r = interval_sqrt(RealInterval(Integer(17)), 64);
        // Oracle: floor(sqrt(17 * 2^160)) / 2^80 bounds sqrt(17) from below.
        Integer lo = binary_search_sqrt(Integer(17) << 160);
        CHECK(Dyadic(lo, -80) <= r.upper());
        CHECK(r.lower() <= Dyadic(lo + 1, -80));
        CHECK(r.width() <= Dyadic(Integer(1), -64));
        CHECK(contains_decimal(r, "4.123105625617660549821409855974077025147"));
    }
    SECTION("zero") {
        RealInterval r = interval_sqrt(RealInterval(Integer(0)), 16);
        CHECK(r.lower() == Dyadic());
        CHECK(r.upper() == Dyadic());
    }
    SECTION("negative radicand rejected") {
        RealInterval neg(Dyadic(Integer(-2)), Dyadic(Integer(-1)));
        CHECK_THROWS_AS(interval_sqrt(neg, 16), NegativeRadicandError);
    }
}

TEST_CASE("interval operations are enclosure-monotone") {
    for (int trial = 0; trial < 200; ++trial) {
        auto rand_dyadic = [] {
            return Dyadic(Integer(testutil::rand_int(-1000, 1000)),
                          testutil::rand_int(-6, 3));
        };
        Dyadic a = rand_dyadic(), b = rand_dyadic();
        if (a > b) std::swap(a, b);
        Dyadic c = rand_dyadic(), d = rand_dyadic();
        if (c > d) std::swap(c, d);
        RealInterval x(a, b), y(c, d);
        Dyadic px = x.midpoint(), py = y.midpoint();
        CHECK((x + y).contains(px + py));
        CHECK((x - y).contains(px - py));
        CHECK((x * y).contains(px * py));
        if (!y.contains(Dyadic())) {
            RealInterval q = interval_div(x, y, 64);
            // q contains px/py: check via cross-multiplication by sign of py.
            RealInterval back = q * y;
            CHECK(back.contains(px));
        }
    }
}

TEST_CASE("interval exp") {
    RealInterval e1 = exp_enclosure(Dyadic(Integer(1)), 96);
    CHECK(contains_decimal(e1, "2.718281828459045235360287471352662497757"));
    CHECK(e1.width() <= Dyadic(Integer(1), -90));

    RealInterval ehalf = exp_enclosure(Dyadic(Integer(1), -1), 96);
    CHECK(contains_decimal(ehalf, "1.648721270700128146848650787814163571654"));

    RealInterval em1 = exp_enclosure(Dyadic(Integer(-1)), 96);
    CHECK(contains_decimal(em1, "0.3678794411714423215955237701614608674458"));

    RealInterval e0 = exp_enclosure(Dyadic(), 96);
    CHECK(e0.contains(Dyadic(Integer(1))));
}

TEST_CASE("root isolation by bisection") {
    SECTION("golden ratio from x^2 - x - 1") {
        IntPoly p{-1, -1, 1};
        RealInterval enc = poly_root_isolate(
            p, RealInterval(Dyadic(Integer(1)), Dyadic(Integer(2))), 40);
        CHECK(enc.width() <= Dyadic(Integer(1), -40));
        CHECK(contains_decimal(enc, "1.61803398874989484820458683436563811772"));
    }
    SECTION("linear root") {
        IntPoly p{-3, 1};
        RealInterval enc = poly_root_isolate(
            p, RealInterval(Dyadic(), Dyadic(Integer(10))), 30);
        CHECK(contains_rational(enc, 3, 1));
    }
    SECTION("largest root of the glide quartic at t=2, s=1") {
        IntPoly p{1, -4, -11, -4, 1};
        RealInterval enc = poly_root_isolate(
            p, RealInterval(Dyadic(Integer(5)), Dyadic(Integer(7))), 40);
        CHECK(enc.width() <= Dyadic(Integer(1), -40));
        CHECK(contains_decimal(enc, "5.95518472195305668225099815382452509343"));
    }
    SECTION("no sign change is rejected") {
        IntPoly p{1, 0, 1};  // x^2 + 1 > 0
        CHECK_THROWS_AS(
            poly_root_isolate(p, RealInterval(Dyadic(), Dyadic(Integer(1))), 10),
            NoSignChangeError);
    }
    SECTION("postcondition: endpoints bracket or hit the root") {
        IntPoly p{-2, 0, 1};  // sqrt(2)
        RealInterval enc = poly_root_isolate(
            p, RealInterval(Dyadic(Integer(1)), Dyadic(Integer(2))), 50);
        int slo = p.sign_at(enc.lower()), shi = p.sign_at(enc.upper());
        CHECK((slo == 0 || shi == 0 || slo != shi));
    }
}

TEST_CASE("integer polynomial basics") {
    IntPoly p{2, 0, 1};  // x^2 + 2
    IntPoly q{1, 1};     // x + 1
    CHECK((p * q) == IntPoly{2, 2, 1, 1});
    CHECK(p.eval(Integer(3)) == 11);
    CHECK((p - p).is_zero());
    CHECK(IntPoly{0, 0, 0}.is_zero());
    CHECK(p.to_string() == "x^2 + 2");

    IntPoly cube_minus_one{-1, 0, 0, 1};
    IntPoly quad = cube_minus_one.deflate_root(Integer(1));
    CHECK(quad == IntPoly{1, 1, 1});
    CHECK_THROWS_AS(cube_minus_one.deflate_root(Integer(2)), InternalError);
}

TEST_CASE("quad surd interval conversion") {
    QuadSurd lam = QuadSurd::make(11, 1, 117, 2);
    RealInterval iv = lam.to_interval(96);
    CHECK(contains_decimal(iv, "10.90832691319598393967883190120574391938"));
    CHECK(iv.width() <= Dyadic(Integer(1), -90));

    QuadSurd negated = -lam;
    RealInterval neg = negated.to_interval(96);
    CHECK(neg.upper().sign() < 0);
}
