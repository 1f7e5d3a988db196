#include <catch2/catch_amalgamated.hpp>

#include <functional>

#include "hbstretch/trace_formula.hpp"

#include "test_util.hpp"

using namespace hbstretch;

namespace {

// Independent filter oracle for the index sets: enumerate every increasing
// tuple and keep those with odd consecutive differences.
std::vector<std::vector<int>> index_set_by_filter(int d, int k) {
    std::vector<std::vector<int>> out;
    std::vector<int> tuple(static_cast<std::size_t>(k));
    auto rec = [&](auto&& self, int depth, int lo) -> void {
        if (depth == k) {
            for (int i = 0; i + 1 < k; ++i)
                if ((tuple[static_cast<std::size_t>(i + 1)] -
                     tuple[static_cast<std::size_t>(i)]) %
                        2 ==
                    0)
                    return;
            out.push_back(tuple);
            return;
        }
        for (int j = lo; j <= 2 * d; ++j) {
            tuple[static_cast<std::size_t>(depth)] = j;
            self(self, depth + 1, j + 1);
        }
    };
    rec(rec, 0, 1);
    return out;
}

ExponentVector ev(std::vector<long> vals) {
    ExponentVector out;
    for (long v : vals) out.push_back(Integer(v));
    return out;
}

void for_each_vector(int length, int lo, int hi, bool skip_zero,
                     const std::function<void(const ExponentVector&)>& fn) {
    ExponentVector m(static_cast<std::size_t>(length));
    auto rec = [&](auto&& self, int depth) -> void {
        if (depth == length) {
            fn(m);
            return;
        }
        for (int v = lo; v <= hi; ++v) {
            if (skip_zero && v == 0) continue;
            m[static_cast<std::size_t>(depth)] = v;
            self(self, depth + 1);
        }
    };
    rec(rec, 0);
}

}  // namespace

TEST_CASE("index sets enumerate odd-gap tuples in lex order") {
    CHECK(index_set(1, 2) == std::vector<std::vector<int>>{{1, 2}});
    CHECK(index_set(2, 2) ==
          std::vector<std::vector<int>>{{1, 2}, {1, 4}, {2, 3}, {3, 4}});
    CHECK(index_set(2, 4) == std::vector<std::vector<int>>{{1, 2, 3, 4}});
    for (int d = 1; d <= 4; ++d)
        for (int k = 2; k <= 2 * d; k += 2) {
            CAPTURE(d, k);
            CHECK(index_set(d, k) == index_set_by_filter(d, k));
        }
}

TEST_CASE("coefficient examples") {
    CHECK(c_coeff(1, 2, ev({3, 5})) == 15);
    CHECK(c_coeff(2, 2, ev({1, 1, 1, 1})) == 4);
    CHECK(c_coeff(2, 4, ev({1, 1, 1, 1})) == 1);
}

TEST_CASE("trace polynomial examples") {
    CHECK(trace_poly(ev({1, 1})) == IntPoly{2, 0, 1});
    CHECK(trace_poly(ev({1, 1, 1, 1})) == IntPoly{2, 0, 4, 0, 1});
    CHECK(trace_poly(ev({1, 1, 1, 1})).eval(Integer(1)) == 7);
    CHECK(trace_poly(ev({2, 1})) == IntPoly{2, 0, 2});
    CHECK(trace_poly(ev({2, 1})).eval(Integer(1)) == 4);
}

TEST_CASE("word matrix products") {
    PolyMat2 w = word_matrix_poly(ev({1, 1}));
    CHECK(w.a == IntPoly{1, 0, 1});
    CHECK(w.b == IntPoly{0, 1});
    CHECK(w.c == IntPoly{0, 1});
    CHECK(w.d == IntPoly{1});

    CHECK(word_matrix_poly(ev({})) == PolyMat2::identity());

    PolyMat2 a = word_matrix_poly(ev({1}));
    CHECK(a.a == IntPoly{1});
    CHECK(a.b == IntPoly{0, 1});
    CHECK(a.c.is_zero());
    CHECK(a.d == IntPoly{1});

    CHECK(word_matrix(ev({2, 1, 1})) == Mat2(3, 5, 1, 2));
}

TEST_CASE("trace formula: positive sweep d <= 2 exhaustive") {
    for (int d = 1; d <= 2; ++d) {
        for_each_vector(2 * d, 1, 4, false, [&](const ExponentVector& m) {
            PolyMat2 w = word_matrix_poly(m);
            CHECK(w.trace() == trace_poly(m));
            CHECK(w.det() == IntPoly{1});
        });
    }
}

TEST_CASE("trace formula holds for arbitrary-sign exponents") {
    for (int trial = 0; trial < 200; ++trial) {
        int d = static_cast<int>(testutil::rand_int(1, 3));
        ExponentVector m;
        for (int i = 0; i < 2 * d; ++i) {
            long v = 0;
            while (v == 0) v = testutil::rand_int(-4, 4);
            m.push_back(Integer(v));
        }
        PolyMat2 w = word_matrix_poly(m);
        CHECK(w.trace() == trace_poly(m));
        CHECK(w.det() == IntPoly{1});
    }
}

TEST_CASE("block recurrences reproduce the direct product") {
    for (int d = 1; d <= 2; ++d) {
        for_each_vector(2 * d, 1, 4, false, [&](const ExponentVector& m) {
            CHECK(word_matrix_poly_via_recurrence(m) == word_matrix_poly(m));
        });
    }
    for (int trial = 0; trial < 150; ++trial) {
        int d = static_cast<int>(testutil::rand_int(1, 3));
        ExponentVector m;
        for (int i = 0; i < 2 * d; ++i) {
            long v = 0;
            while (v == 0) v = testutil::rand_int(-4, 4);
            m.push_back(Integer(v));
        }
        CHECK(word_matrix_poly_via_recurrence(m) == word_matrix_poly(m));
    }
}

TEST_CASE("entry order proposition") {
    CHECK(check_entry_order(ev({1, 1})));
    CHECK(check_entry_order(ev({3, 2})));
    CHECK(word_matrix(ev({3, 2})) == Mat2(7, 3, 2, 1));
    CHECK(check_entry_order(ev({1, 1, 1, 1})));
    CHECK(word_matrix(ev({1, 1, 1, 1})) == Mat2(5, 3, 3, 2));
    for (int d = 1; d <= 2; ++d)
        for_each_vector(2 * d, 1, 4, false, [&](const ExponentVector& m) {
            CHECK(check_entry_order(m));
        });
}

TEST_CASE("trace ratio comparisons") {
    SECTION("even words: anti-trace strictly below trace") {
        CHECK(check_trace_ratios(ev({1, 1})).even_ok);
        for (int d = 1; d <= 2; ++d)
            for_each_vector(2 * d, 1, 4, false, [&](const ExponentVector& m) {
                CHECK(check_trace_ratios(m).even_ok);
            });
    }
    SECTION("odd words of length >= 3: trace at most anti-trace") {
        TraceRatioCheck c211 = check_trace_ratios(ev({2, 1, 1}));
        CHECK(c211.odd_ok);
        CHECK_FALSE(c211.odd_boundary);  // tr 5 < tr* 6 strictly

        // Boundary equality family (1, q, 1): tr = tr* exactly.
        for (long q : {1L, 2L, 3L, 7L}) {
            TraceRatioCheck c = check_trace_ratios(ev({1, q, 1}));
            CHECK(c.odd_ok);
            CHECK(c.odd_boundary);
        }

        for (int len : {3, 5})
            for_each_vector(len, 1, 3, false, [&](const ExponentVector& m) {
                CHECK(check_trace_ratios(m).odd_ok);
            });
    }
    SECTION("length-1 words are outside the lemma's range") {
        TraceRatioCheck c = check_trace_ratios(ev({1}));
        CHECK(c.odd_ok);
        CHECK_FALSE(c.odd_boundary);
    }
}
