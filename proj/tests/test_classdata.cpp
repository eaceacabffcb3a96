#include "doctest.h"

#include <algorithm>
#include <complex>
#include <set>
#include <string>
#include <vector>

#include "helpers.hpp"
#include "probhopf/classdata.hpp"
#include "probhopf/group.hpp"
#include "probhopf/rational.hpp"

using namespace probhopf;

namespace {

// Builtin keys whose character tables land exactly in Gaussian rationals.
// The others involve irrational values (cube/5th/... roots of unity, sqrt 2,
// sqrt 3, golden-ratio cosines) and must stay in float mode.
const std::set<std::string> kExactTables = {"Z1", "Z2", "Z4", "S3", "S4", "D4", "Q8"};

}  // namespace

TEST_CASE("class data of the 6-element symmetric group") {
    ClassData cd = class_data(FiniteGroup::builtin("S3"));
    REQUIRE(cd.m == 3);

    SUBCASE("classes: identity first, ascending least member, sizes (1,3,2)") {
        CHECK(cd.classes[0] == std::vector<int>{0});
        CHECK(cd.class_size(0) == 1);
        CHECK(cd.class_size(1) == 3);
        CHECK(cd.class_size(2) == 2);
        CHECK(cd.rep[0] == 0);
        CHECK(cd.rep[1] < cd.rep[2]);
        for (int i = 0; i < 3; ++i)
            for (int g : cd.classes[i]) CHECK(cd.class_of[g] == i);
        // every class in this group is closed under inversion
        CHECK(cd.dual_class == std::vector<int>{0, 1, 2});
        CHECK(cd.class_name(0) == "[" + cd.G.element_name(0) + "]");
    }

    SUBCASE("counting tensor oracles") {
        // transposition * transposition: 3 ways to the identity, 3 ways onto
        // each 3-cycle, never a transposition
        CHECK(cd.count(1, 1, 0) == 3);
        CHECK(cd.count(1, 1, 1) == 0);
        CHECK(cd.count(1, 1, 2) == 3);
        // transposition * 3-cycle is always a transposition
        CHECK(cd.count(1, 2, 0) == 0);
        CHECK(cd.count(1, 2, 1) == 2);
        CHECK(cd.count(2, 1, 1) == 2);
        // 3-cycle * 3-cycle
        CHECK(cd.count(2, 2, 0) == 2);
        CHECK(cd.count(2, 2, 1) == 0);
        CHECK(cd.count(2, 2, 2) == 1);
        // unit class multiplies trivially
        for (int j = 0; j < 3; ++j)
            for (int k = 0; k < 3; ++k) CHECK(cd.count(0, j, k) == (j == k ? 1 : 0));
    }

    SUBCASE("character table is exact: rows (1,1,1), (1,-1,1), (2,0,-1)") {
        REQUIRE(cd.exact);
        CHECK(cd.degrees == std::vector<long long>{1, 1, 2});
        const GaussianRational one(Rational(1), Rational(0));
        for (int i = 0; i < 3; ++i) CHECK(cd.char_q(0, i) == one);
        CHECK(cd.char_q(1, 0) == one);
        CHECK(cd.char_q(1, 1) == GaussianRational(Rational(-1), Rational(0)));
        CHECK(cd.char_q(1, 2) == one);
        CHECK(cd.char_q(2, 0) == GaussianRational(Rational(2), Rational(0)));
        CHECK(cd.char_q(2, 1) == GaussianRational(Rational(0), Rational(0)));
        CHECK(cd.char_q(2, 2) == GaussianRational(Rational(-1), Rational(0)));
    }

    SUBCASE("normalized value matrix E and its closed-form inverse") {
        const double tol = 1e-12;
        const double Ew[3][3] = {{1, 1, 1}, {1, -1, 0}, {1, 1, -0.5}};
        for (int i = 0; i < 3; ++i)
            for (int a = 0; a < 3; ++a) {
                CHECK(std::abs(cd.E(i, a) - Ew[i][a]) <= tol);
                CHECK(std::abs(cd.E(i, a).imag()) <= tol);
            }
        const double Iw[3][3] = {{1.0 / 6, 0.5, 1.0 / 3},
                                 {1.0 / 6, -0.5, 1.0 / 3},
                                 {2.0 / 3, 0.0, -2.0 / 3}};
        for (int a = 0; a < 3; ++a)
            for (int i = 0; i < 3; ++i) CHECK(std::abs(cd.Einv(a, i) - Iw[a][i]) <= tol);
    }

    SUBCASE("tensor multiplicities of the irreducible characters") {
        auto N = character_multiplicities(cd);
        auto at = [&](int i, int j, int k) { return N[(static_cast<size_t>(i) * 3 + j) * 3 + k]; };
        CHECK(at(1, 1, 0) == 1);
        CHECK(at(1, 1, 1) == 0);
        CHECK(at(1, 1, 2) == 0);
        CHECK(at(1, 2, 2) == 1);
        CHECK(at(2, 1, 2) == 1);
        CHECK(at(2, 2, 0) == 1);
        CHECK(at(2, 2, 1) == 1);
        CHECK(at(2, 2, 2) == 1);
        for (int j = 0; j < 3; ++j)
            for (int k = 0; k < 3; ++k) CHECK(at(0, j, k) == (j == k ? 1 : 0));
    }

    SUBCASE("normalized class sums as an exact probability group") {
        ProbabilityGroup B = class_probgroup(cd);
        ProbabilityGroup want = testutil::class_probgroup_s3();
        REQUIRE(B.n() == 3);
        CHECK(B.exact());
        CHECK(B.check_axioms().ok());
        CHECK(B.is_abelian());
        for (int a = 0; a < 3; ++a)
            for (int b = 0; b < 3; ++b)
                for (int c = 0; c < 3; ++c) CHECK(B.p_exact(a, b, c) == want.p_exact(a, b, c));
        CHECK(B.size_exact(1) == Rational(3));
        CHECK(B.integrality_class(1).verdict == IntegralityResult::Verdict::Integral);
        CHECK(B.integrality_class(2).verdict == IntegralityResult::Verdict::Fails);
    }
}

TEST_CASE("exactness is certified, not assumed from snapping") {
    // Cube roots of unity involve sqrt(3)/2, which sits within 1.3e-13 of the
    // fraction 489061/564719 -- close enough to pass a naive rational snap.
    // The certification step (integer character ring + exact orthogonality)
    // must reject the table, leaving it honestly in float mode.
    ClassData cd = class_data(FiniteGroup::builtin("Z3"));
    CHECK_FALSE(cd.exact);
    CHECK(cd.chars_q.empty());
    // the float table still verifies and reproduces the fusion data
    CHECK(orthogonality_check(cd).ok());
    CHECK(fusion_from_E(cd) == character_multiplicities(cd));
}

TEST_CASE("exact/float split over the whole builtin catalogue") {
    for (const auto& key : FiniteGroup::builtin_keys()) {
        CAPTURE(key);
        ClassData cd = class_data(FiniteGroup::builtin(key));
        CHECK(cd.exact == (kExactTables.count(key) == 1));
        if (cd.exact) CHECK(cd.chars_q.size() == static_cast<size_t>(cd.m) * cd.m);
        else CHECK(cd.chars_q.empty());
    }
}

TEST_CASE("verification sweep over the builtin catalogue") {
    for (const auto& key : FiniteGroup::builtin_keys()) {
        CAPTURE(key);
        FiniteGroup G = FiniteGroup::builtin(key);
        ClassData cd = class_data(G);
        const long long n = G.order();

        // trivial character first; degrees divide the group order and their
        // squares sum to it
        CHECK(cd.degrees[0] == 1);
        long long degsq = 0;
        for (long long d : cd.degrees) {
            CHECK(n % d == 0);
            degsq += d * d;
        }
        CHECK(degsq == n);

        // mass conservation of the counting tensor
        for (int i = 0; i < cd.m; ++i)
            for (int j = 0; j < cd.m; ++j) {
                long long mass = 0;
                for (int k = 0; k < cd.m; ++k) mass += cd.count(i, j, k) * cd.class_size(k);
                CHECK(mass == static_cast<long long>(cd.class_size(i)) * cd.class_size(j));
            }

        auto orth = orthogonality_check(cd);
        CHECK(orth.ok());
        CHECK(orth.worst_residual() <= 1e-8);

        auto fact = verify_factorizations(cd);
        CHECK(fact.ok());
        CHECK(fact.worst_residual() <= 1e-8);

        CHECK(fusion_from_E(cd) == character_multiplicities(cd));
        CHECK(classsums_from_E(cd) == cd.counts);

        ProbabilityGroup B = class_probgroup(cd);
        CHECK(B.check_axioms().ok());
        CHECK(B.is_abelian());
        CHECK(B.order_exact() == Rational(n));
        CHECK(testutil::identity_sweep(B) <= 1e-12);
    }
}

TEST_CASE("same-seed runs are bit-identical") {
    ClassData a = class_data(FiniteGroup::builtin("S4"), 1e-9, 0);
    ClassData b = class_data(FiniteGroup::builtin("S4"), 1e-9, 0);
    CHECK(a.seed_used == b.seed_used);
    REQUIRE(a.m == b.m);
    for (int i = 0; i < a.m; ++i)
        for (int j = 0; j < a.m; ++j) {
            CHECK(a.chars(i, j) == b.chars(i, j));
            CHECK(a.E(i, j) == b.E(i, j));
        }
}

TEST_CASE("conjugate classes pair up in the dual-class map") {
    // In the cyclic group of order 3 the two non-identity classes are
    // mutually inverse singletons.
    ClassData cd = class_data(FiniteGroup::builtin("Z3"));
    CHECK(cd.dual_class == std::vector<int>{0, 2, 1});
    // dual_class is always an involution fixing the identity class
    for (const auto& key : FiniteGroup::builtin_keys()) {
        ClassData c = class_data(FiniteGroup::builtin(key));
        CHECK(c.dual_class[0] == 0);
        for (int i = 0; i < c.m; ++i) CHECK(c.dual_class[c.dual_class[i]] == i);
    }
}
