#include <catch2/catch_amalgamated.hpp>

#include <map>
#include <set>

#include "hbstretch/conjugacy.hpp"
#include "hbstretch/standard_form.hpp"

#include "test_util.hpp"

using namespace hbstretch;

namespace {

Mat2 random_conjugator(int max_word) {
    auto gens = conjugacy_generators(ConjugacyMode::GL2);
    Mat2 acc = Mat2::identity();
    int len = static_cast<int>(testutil::rand_int(1, max_word));
    for (int i = 0; i < len; ++i)
        acc = acc * gens[static_cast<std::size_t>(
                  testutil::rand_int(0, static_cast<long>(gens.size()) - 1))];
    return acc;
}

StandardForm form(int sign, FormKind kind, std::vector<long> exps) {
    StandardForm sf;
    sf.sign = sign;
    sf.kind = kind;
    for (long e : exps) sf.exponents.push_back(Integer(e));
    return sf;
}

/// All standard forms of the given kind with exponent sum <= total.
std::vector<StandardForm> forms_with_sum_at_most(int total, FormKind kind) {
    std::vector<StandardForm> out;
    std::vector<Integer> current;
    auto rec = [&](auto&& self, int remaining) -> void {
        if (!current.empty()) {
            bool parity_ok = (kind == FormKind::Hyperbolic)
                                 ? current.size() % 2 == 0
                                 : current.size() % 2 == 1;
            if (parity_ok) {
                for (int sign : {1, -1}) {
                    StandardForm sf;
                    sf.sign = sign;
                    sf.kind = kind;
                    sf.exponents = current;
                    out.push_back(std::move(sf));
                }
            }
        }
        for (int e = 1; e <= remaining; ++e) {
            current.push_back(Integer(e));
            self(self, remaining - e);
            current.pop_back();
        }
    };
    rec(rec, total);
    return out;
}

}  // namespace

TEST_CASE("assemble produces the exact word matrix") {
    CHECK(assemble(form(1, FormKind::Hyperbolic, {1, 1})) == Mat2(2, 1, 1, 1));
    CHECK(assemble(form(1, FormKind::Glide, {1})) == Mat2(1, 1, 1, 0));
    CHECK(assemble(form(-1, FormKind::Hyperbolic, {1, 1})) ==
          Mat2(-2, -1, -1, -1));
    CHECK(assemble(form(1, FormKind::Hyperbolic, {2, 1})) == Mat2(3, 2, 1, 1));
    // Glide determinant is -1, hyperbolic +1.
    CHECK(det(assemble(form(1, FormKind::Glide, {2, 1, 1}))) == -1);
    CHECK(det(assemble(form(-1, FormKind::Hyperbolic, {1, 2, 3, 4}))) == 1);
    CHECK_THROWS_AS(assemble(form(1, FormKind::Hyperbolic, {1})), InternalError);
    CHECK_THROWS_AS(assemble(form(1, FormKind::Glide, {1, 1})), InternalError);
    CHECK_THROWS_AS(assemble(form(1, FormKind::Hyperbolic, {0, 1})),
                    InternalError);
}

TEST_CASE("standard form of reference matrices") {
    StandardForm ab = standard_form(Mat2(2, 1, 1, 1));
    CHECK(ab == form(1, FormKind::Hyperbolic, {1, 1}));

    // B*A is conjugate to A*B and must produce the same canonical key.
    StandardForm ba = standard_form(Mat2(1, 1, 1, 2));
    CHECK(canonical_key(ba, KeyMode::GL2) ==
          canonical_key(ab, KeyMode::GL2));
    CHECK(brute_conjugacy_oracle(Mat2(1, 1, 1, 2), assemble(ba), 8));

    StandardForm glide = standard_form(Mat2(1, 1, 1, 0));
    CHECK(glide == form(1, FormKind::Glide, {1}));
    CHECK(assemble(glide) == Mat2(1, 1, 1, 0));

    CHECK(standard_form(Mat2(-2, -1, -1, -1)) ==
          form(-1, FormKind::Hyperbolic, {1, 1}));

    CHECK_THROWS_AS(standard_form(Mat2(1, 1, 0, 1)), NotFullyIrreducibleError);
    CHECK_THROWS_AS(standard_form(Mat2(0, 1, 1, 0)), NotFullyIrreducibleError);
}

TEST_CASE("canonical keys quotient rotations, and the swap only in GL2") {
    StandardForm sf = form(1, FormKind::Hyperbolic, {1, 2, 1, 1});
    CHECK(canonical_key(sf, KeyMode::GL2).exponents ==
          std::vector<Integer>{1, 1, 1, 2});
    CHECK(canonical_key(sf, KeyMode::SL2).exponents ==
          std::vector<Integer>{1, 1, 1, 2});

    StandardForm rot2 = form(1, FormKind::Hyperbolic, {1, 1, 1, 2});
    CHECK(canonical_key(sf, KeyMode::SL2) == canonical_key(rot2, KeyMode::SL2));

    // (1,2) and (2,1) split in SL2 but merge under the GL2 swap.
    StandardForm rl2 = form(1, FormKind::Hyperbolic, {1, 2});
    StandardForm r2l = form(1, FormKind::Hyperbolic, {2, 1});
    CHECK_FALSE(canonical_key(rl2, KeyMode::SL2) ==
                canonical_key(r2l, KeyMode::SL2));
    CHECK(canonical_key(rl2, KeyMode::GL2) == canonical_key(r2l, KeyMode::GL2));

    CHECK(canonical_key(form(1, FormKind::Hyperbolic, {1, 1}), KeyMode::SL2)
              .exponents == std::vector<Integer>{1, 1});
    CHECK(canonical_key(form(1, FormKind::Glide, {3}), KeyMode::GL2).exponents ==
          std::vector<Integer>{3});
    // Glide tuples rotate freely in both modes.
    CHECK(canonical_key(form(1, FormKind::Glide, {2, 1, 1}), KeyMode::SL2) ==
          canonical_key(form(1, FormKind::Glide, {1, 2, 1}), KeyMode::SL2));
}

TEST_CASE("standard form round trip: exhaustive over small exponent sums") {
    for (FormKind kind : {FormKind::Hyperbolic, FormKind::Glide}) {
        for (const StandardForm& sf : forms_with_sum_at_most(8, kind)) {
            Mat2 m = assemble(sf);
            StandardForm back = standard_form(m);
            CAPTURE(m.to_string());
            CHECK(back.sign == sf.sign);
            CHECK(back.kind == sf.kind);
            CHECK(canonical_key(back, KeyMode::SL2) ==
                  canonical_key(sf, KeyMode::SL2));
            CHECK(canonical_key(back, KeyMode::GL2) ==
                  canonical_key(sf, KeyMode::GL2));
            // Trace and determinant survive the round trip exactly.
            CHECK(trace(assemble(back)) == trace(m));
            CHECK(det(assemble(back)) == det(m));
        }
    }
}

TEST_CASE("standard form is conjugation invariant") {
    std::vector<StandardForm> bases = {
        form(1, FormKind::Hyperbolic, {1, 1}),
        form(-1, FormKind::Hyperbolic, {2, 3}),
        form(1, FormKind::Hyperbolic, {1, 2, 1, 1}),
        form(1, FormKind::Glide, {1}),
        form(-1, FormKind::Glide, {2, 1, 3}),
        form(1, FormKind::Glide, {4}),
    };
    for (const StandardForm& sf : bases) {
        Mat2 m = assemble(sf);
        CanonicalKey expect = canonical_key(sf, KeyMode::GL2);
        for (int trial = 0; trial < 60; ++trial) {
            Mat2 n = random_conjugator(6);
            Mat2 conj = conjugate(m, n);
            CAPTURE(conj.to_string());
            StandardForm got = standard_form(conj);
            CHECK(canonical_key(got, KeyMode::GL2) == expect);
        }
    }
}

TEST_CASE("glide squares to its doubled hyperbolic form") {
    for (const StandardForm& sf : forms_with_sum_at_most(6, FormKind::Glide)) {
        Mat2 m = assemble(sf);
        Mat2 m2 = m * m;
        StandardForm sq = standard_form(m2);
        REQUIRE(sq.kind == FormKind::Hyperbolic);
        // S(M^2) = +- S(M)^2: the squared word is the doubled tuple.
        StandardForm doubled;
        doubled.sign = 1;  // tr(M^2) = tr(M)^2 + 2 > 0
        doubled.kind = FormKind::Hyperbolic;
        doubled.exponents = sf.exponents;
        doubled.exponents.insert(doubled.exponents.end(), sf.exponents.begin(),
                                 sf.exponents.end());
        CHECK(canonical_key(sq, KeyMode::GL2) ==
              canonical_key(doubled, KeyMode::GL2));
    }
}

TEST_CASE("brute conjugacy oracle") {
    CHECK(brute_conjugacy_oracle(Mat2(2, 1, 1, 1), Mat2(1, 1, 1, 2), 4));
    CHECK_FALSE(brute_conjugacy_oracle(Mat2(2, 1, 1, 1), Mat2(3, 2, 1, 1), 8));
    CHECK(brute_conjugacy_oracle(Mat2(2, 1, 1, 1), Mat2(2, 1, 1, 1), 0));
    // AB^2 ~ A^2B only through the GL2 swap.
    Mat2 ab2 = assemble(form(1, FormKind::Hyperbolic, {1, 2}));
    Mat2 a2b = assemble(form(1, FormKind::Hyperbolic, {2, 1}));
    CHECK(brute_conjugacy_oracle(ab2, a2b, 6, ConjugacyMode::GL2));
    CHECK_FALSE(brute_conjugacy_oracle(ab2, a2b, 10, ConjugacyMode::SL2));
}

TEST_CASE("keys match the oracle on small fully irreducible matrices") {
    // All fully irreducible matrices with entries in [-5, 5]: GL2 key
    // equality must coincide with oracle-established conjugacy.
    std::vector<Mat2> mats;
    for (long a = -5; a <= 5; ++a)
        for (long b = -5; b <= 5; ++b)
            for (long c = -5; c <= 5; ++c)
                for (long d = -5; d <= 5; ++d) {
                    Mat2 m{Integer(a), Integer(b), Integer(c), Integer(d)};
                    Integer dt = det(m);
                    if (dt != 1 && dt != -1) continue;
                    if (!is_fully_irreducible(m)) continue;
                    mats.push_back(m);
                }
    auto ids = group_into_classes(mats, 12, ConjugacyMode::GL2);
    std::map<std::string, std::set<int>> key_to_ids;
    std::map<int, std::set<std::string>> id_to_keys;
    for (std::size_t i = 0; i < mats.size(); ++i) {
        std::string key =
            canonical_key(standard_form(mats[i]), KeyMode::GL2).to_string();
        key_to_ids[key].insert(ids[i]);
        id_to_keys[ids[i]].insert(key);
    }
    for (const auto& [key, idset] : key_to_ids) {
        CAPTURE(key);
        CHECK(idset.size() == 1);
    }
    for (const auto& [id, keyset] : id_to_keys) {
        CAPTURE(*keyset.begin());
        CHECK(keyset.size() == 1);
    }
}

TEST_CASE("oracle confirms conjugacy of sampled round trips") {
    int checked = 0;
    for (const StandardForm& sf : forms_with_sum_at_most(7, FormKind::Hyperbolic)) {
        if (checked >= 50) break;
        Mat2 m = assemble(sf);
        Mat2 n = random_conjugator(4);
        Mat2 moved = conjugate(m, n);
        Mat2 back = assemble(standard_form(moved));
        CAPTURE(m.to_string(), moved.to_string(), back.to_string());
        CHECK(brute_conjugacy_oracle(moved, back, 12));
        ++checked;
    }
}
