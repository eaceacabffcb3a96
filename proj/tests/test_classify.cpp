#include "doctest.h"

#include <algorithm>
#include <set>
#include <stdexcept>
#include <string>
#include <vector>

#include "helpers.hpp"
#include "probhopf/classify.hpp"
#include "probhopf/probgroup.hpp"
#include "probhopf/rational.hpp"

using namespace probhopf;

namespace {

std::vector<Rational> size_profile(const ProbabilityGroup& g) {
    std::vector<Rational> s;
    for (int a = 0; a < g.n(); ++a) s.push_back(g.size_exact(a));
    std::sort(s.begin(), s.end());
    return s;
}

}  // namespace

TEST_CASE("order 2: the group of two elements is the only 2-integral structure") {
    ClassifyOptions opt;
    opt.order = 2;
    opt.max_size = 50;
    ClassifyResult res = classify_2integral(opt);
    REQUIRE(res.structures.size() == 1);
    const ProbabilityGroup& g = res.structures[0];
    CHECK(g.n() == 2);
    CHECK(g.p_exact(1, 1, 0) == Rational(1));
    CHECK(g.size_exact(1) == Rational(1));
    CHECK(res.candidates >= 1);
}

TEST_CASE("order 3: exactly two structures up to relabelling") {
    ClassifyOptions opt;
    opt.order = 3;
    opt.max_size = 12;
    ClassifyResult res = classify_2integral(opt);
    REQUIRE(res.structures.size() == 2);

    std::set<std::vector<Rational>> profiles;
    for (const auto& g : res.structures) {
        CHECK(g.check_axioms().ok());
        CHECK(g.integrality_class(2).integral());
        CHECK(testutil::identity_sweep(g) <= 1e-12);
        profiles.insert(size_profile(g));
    }
    CHECK(profiles.count({Rational(1), Rational(1), Rational(1)}) == 1);
    CHECK(profiles.count({Rational(1), Rational(1), Rational(4)}) == 1);

    // the all-ones profile is the 3-element group (mutually inverse pair);
    // the other is the character table of the 6-element symmetric group
    for (const auto& g : res.structures) {
        if (size_profile(g).back() == Rational(1)) {
            CHECK(g.inverse(1) == 2);
            CHECK(g.p_exact(1, 1, 2) == Rational(1));
            CHECK(g.p_exact(1, 2, 0) == Rational(1));
        } else {
            ProbabilityGroup want = testutil::char_probgroup_s3();
            for (int a = 0; a < 3; ++a)
                for (int b = 0; b < 3; ++b)
                    for (int c = 0; c < 3; ++c)
                        CHECK(g.p_exact(a, b, c) == want.p_exact(a, b, c));
        }
    }
}

TEST_CASE("pruning filters cost only: identical structures and candidate counts") {
    const long long expected_candidates[] = {56, 92, 124};
    int idx = 0;
    for (long long ms : {4, 5, 6}) {
        CAPTURE(ms);
        ClassifyOptions with, without;
        with.order = without.order = 3;
        with.max_size = without.max_size = ms;
        with.prune = true;
        without.prune = false;
        ClassifyResult a = classify_2integral(with);
        ClassifyResult b = classify_2integral(without);
        CHECK(a.candidates == b.candidates);
        CHECK(a.candidates == expected_candidates[idx++]);
        REQUIRE(a.structures.size() == b.structures.size());
        for (size_t i = 0; i < a.structures.size(); ++i)
            CHECK(a.structures[i] == b.structures[i]);
    }
}

TEST_CASE("deterministic output") {
    ClassifyOptions opt;
    opt.order = 3;
    opt.max_size = 8;
    ClassifyResult a = classify_2integral(opt);
    ClassifyResult b = classify_2integral(opt);
    CHECK(a.candidates == b.candidates);
    REQUIRE(a.structures.size() == b.structures.size());
    for (size_t i = 0; i < a.structures.size(); ++i)
        CHECK(a.structures[i].serialize_string() == b.structures[i].serialize_string());
}

TEST_CASE("candidate budget guard") {
    ClassifyOptions opt;
    opt.order = 3;
    opt.max_size = 12;
    opt.candidate_cap = 10;
    CHECK_THROWS_AS(classify_2integral(opt), std::runtime_error);
}

TEST_CASE("unsupported orders are rejected") {
    ClassifyOptions opt;
    opt.order = 5;
    CHECK_THROWS_AS(classify_2integral(opt), std::domain_error);
    opt.order = 3;
    opt.max_size = 0;
    CHECK_THROWS_AS(classify_2integral(opt), std::domain_error);
}

TEST_CASE("experimental order 4 with unit sizes finds the two groups of order 4") {
    ClassifyOptions opt;
    opt.order = 4;
    opt.max_size = 1;   // sizes pinned to 1: candidates are group tables
    ClassifyResult res = classify_2integral(opt);
    REQUIRE(res.structures.size() == 2);
    for (const auto& g : res.structures) {
        CHECK(g.check_axioms().ok());
        CHECK(g.integrality_class(2).integral());
        for (int a = 0; a < 4; ++a) CHECK(g.size_exact(a) == Rational(1));
    }
    // one cyclic (an element that is not its own inverse), one Klein-type
    int cyclic = 0, klein = 0;
    for (const auto& g : res.structures) {
        bool self_paired = true;
        for (int a = 0; a < 4; ++a) self_paired &= (g.inverse(a) == a);
        if (self_paired) ++klein;
        else ++cyclic;
    }
    CHECK(cyclic == 1);
    CHECK(klein == 1);
}
