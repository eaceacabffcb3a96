#include "doctest.h"

#include <algorithm>
#include <cmath>
#include <complex>
#include <stdexcept>
#include <string>
#include <vector>

#include "helpers.hpp"
#include "probhopf/classdata.hpp"
#include "probhopf/duality.hpp"
#include "probhopf/fusion.hpp"
#include "probhopf/group.hpp"
#include "probhopf/probgroup.hpp"

using namespace probhopf;
using testutil::char_probgroup_s3;
using testutil::class_probgroup_s3;

TEST_CASE("dual of the character probability group") {
    ProbabilityGroup A = char_probgroup_s3();
    DualProbabilityGroup D = dual(A);
    REQUIRE(D.n == 3);
    CHECK(D.names == std::vector<std::string>{"f1", "f2", "f3"});
    CHECK(D.functional_residual <= 1e-9);

    SUBCASE("functional value table is exact: rows (1,1,1), (1,-1,0), (1,1,-1/2)") {
        REQUIRE(D.values_exact);
        auto vq = [&](int j, int a) { return D.values_q[static_cast<size_t>(j) * 3 + a]; };
        const double want[3][3] = {{1, 1, 1}, {1, -1, 0}, {1, 1, -0.5}};
        for (int j = 0; j < 3; ++j)
            for (int a = 0; a < 3; ++a) {
                CHECK(std::abs(D.values(j, a).real() - want[j][a]) <= 1e-12);
                CHECK(std::abs(D.values(j, a).imag()) <= 1e-12);
                CHECK(vq(j, a).im == Rational(0));
            }
        CHECK(vq(1, 1) == GaussianRational(Rational(-1), Rational(0)));
        CHECK(vq(2, 2) == GaussianRational(Rational(-1, 2), Rational(0)));
    }

    SUBCASE("dual sizes (1,3,2), dualizable, self-inverse functionals") {
        REQUIRE(D.shat_exact);
        CHECK(D.shat_q == std::vector<Rational>{Rational(1), Rational(3), Rational(2)});
        CHECK(D.dualizable);
        CHECK(D.min_phat >= -1e-9);
        CHECK(D.dual_of == std::vector<int>{0, 1, 2});
    }

    SUBCASE("dual tensor: f2.f2 = 1/3 f1 + 2/3 f3, f3.f3 = 1/2 f1 + 1/2 f3") {
        REQUIRE(D.phat_exact);
        auto pq = [&](int a, int b, int c) {
            return D.phat_q[(static_cast<size_t>(a) * 3 + b) * 3 + c];
        };
        CHECK(pq(1, 1, 0) == Rational(1, 3));
        CHECK(pq(1, 1, 1) == Rational(0));
        CHECK(pq(1, 1, 2) == Rational(2, 3));
        CHECK(pq(1, 2, 1) == Rational(1));
        CHECK(pq(2, 2, 0) == Rational(1, 2));
        CHECK(pq(2, 2, 2) == Rational(1, 2));
    }

    SUBCASE("dual probability group coincides with the normalized class sums") {
        ProbabilityGroup B = dual_probgroup(D);
        ProbabilityGroup want = class_probgroup_s3();
        REQUIRE(B.n() == 3);
        CHECK(B.exact());
        CHECK(B.check_axioms().ok());
        for (int a = 0; a < 3; ++a)
            for (int b = 0; b < 3; ++b)
                for (int c = 0; c < 3; ++c) CHECK(B.p_exact(a, b, c) == want.p_exact(a, b, c));
        CHECK(B.order_exact() == Rational(6));
    }

    SUBCASE("orthogonality relations") {
        auto rep = dual_orthogonality(A, D);
        CHECK(rep.ok());
        CHECK(rep.worst_residual() <= 1e-9);
        double sum = 0.0;
        for (double s : D.shat) sum += s;
        CHECK(sum == doctest::Approx(6.0).epsilon(1e-9));
    }
}

TEST_CASE("double dual recovers the original table") {
    ProbabilityGroup A = char_probgroup_s3();
    ProbabilityGroup B = dual_probgroup(dual(A));     // the (1,3,2)-sizes dual
    ProbabilityGroup C = dual_probgroup(dual(B));     // back again
    REQUIRE(C.n() == 3);
    CHECK(C.exact());
    for (int a = 0; a < 3; ++a)
        for (int b = 0; b < 3; ++b)
            for (int c = 0; c < 3; ++c) CHECK(C.p_exact(a, b, c) == A.p_exact(a, b, c));
    CHECK(C.size_exact(2) == Rational(4));
}

TEST_CASE("dual of a cyclic group ring with fourth roots of unity stays exact") {
    ProbabilityGroup A = fusion_from_group_table(FiniteGroup::builtin("Z4")).to_probgroup();
    DualProbabilityGroup D = dual(A);
    REQUIRE(D.n == 4);
    REQUIRE(D.values_exact);
    // ordering after the augmentation row: (1,-1,..), then (1,-i,..), (1,i,..)
    auto vq = [&](int j, int a) { return D.values_q[static_cast<size_t>(j) * 4 + a]; };
    CHECK(vq(1, 1) == GaussianRational(Rational(-1), Rational(0)));
    CHECK(vq(2, 1) == GaussianRational(Rational(0), Rational(-1)));
    CHECK(vq(3, 1) == GaussianRational(Rational(0), Rational(1)));
    // conjugation swaps the two complex characters
    CHECK(D.dual_of == std::vector<int>{0, 1, 3, 2});
    REQUIRE(D.shat_exact);
    for (const Rational& s : D.shat_q) CHECK(s == Rational(1));
    CHECK(D.dualizable);
    ProbabilityGroup B = dual_probgroup(D);
    CHECK(B.check_axioms().ok());
    CHECK(B.order_exact() == Rational(4));
}

TEST_CASE("dual of a group ring with irrational characters stays float but verifies") {
    ProbabilityGroup A = fusion_from_group_table(FiniteGroup::builtin("Z5")).to_probgroup();
    DualProbabilityGroup D = dual(A);
    REQUIRE(D.n == 5);
    CHECK_FALSE(D.values_exact);   // fifth roots of unity do not snap
    CHECK(D.values_q.empty());
    CHECK(D.dualizable);
    CHECK(D.functional_residual <= 1e-9);
    double sum = 0.0;
    for (double s : D.shat) {
        CHECK(s == doctest::Approx(1.0).epsilon(1e-9));
        sum += s;
    }
    CHECK(sum == doctest::Approx(5.0).epsilon(1e-9));
    CHECK(dual_orthogonality(A, D).ok());
    CHECK(dual_probgroup(D).check_axioms(1e-9).ok());
}

TEST_CASE("dual of a float hypergroup with non-matching sizes") {
    // dims (1, 1, sqrt 2): the dual exists, is dualizable, and the dual
    // order equals the original order 4
    const int m = 3;
    std::vector<long long> N(27, 0);
    auto at = [&](int i, int j, int k) -> long long& { return N[(i * m + j) * m + k]; };
    for (int j = 0; j < m; ++j) { at(0, j, j) = 1; if (j) at(j, 0, j) = 1; }
    at(1, 1, 0) = 1;
    at(1, 2, 2) = 1;
    at(2, 1, 2) = 1;
    at(2, 2, 0) = 1;
    at(2, 2, 1) = 1;
    ProbabilityGroup A =
        FusionRing::make({"1", "eps", "sigma"}, {0, 1, 2}, std::move(N)).to_probgroup();
    DualProbabilityGroup D = dual(A);
    CHECK(D.dualizable);
    CHECK_FALSE(D.values_exact);
    double sum = 0.0;
    for (double s : D.shat) sum += s;
    CHECK(sum == doctest::Approx(4.0).epsilon(1e-8));
    CHECK(dual_orthogonality(A, D).ok());
}

TEST_CASE("dual requires commutativity") {
    ProbabilityGroup A = fusion_from_group_table(FiniteGroup::builtin("S3")).to_probgroup();
    CHECK_THROWS_WITH_AS(dual(A), "dual: the probability group must be abelian",
                         std::domain_error);
}

TEST_CASE("probability subgroups") {
    ProbabilityGroup A = char_probgroup_s3();
    bool exhaustive = false;
    auto subs = find_subgroups(A, &exhaustive);
    CHECK(exhaustive);
    REQUIRE(subs.size() == 3);
    CHECK(subs[0] == std::vector<int>{0});
    CHECK(subs[1] == std::vector<int>{0, 1});
    CHECK(subs[2] == std::vector<int>{0, 1, 2});
    for (const auto& s : subs) CHECK(is_subgroup(A, s));
    CHECK_FALSE(is_subgroup(A, {0, 2}));   // chi3.chi3 reaches chi2
    CHECK_FALSE(is_subgroup(A, {1}));      // misses the unit

    ProbabilityGroup Z6 = fusion_from_group_table(FiniteGroup::builtin("Z6")).to_probgroup();
    auto s6 = find_subgroups(Z6, &exhaustive);
    CHECK(exhaustive);
    CHECK(s6.size() == 4);   // {e}, order 2, order 3, everything

    // beyond 12 elements only seeded closures are explored
    ProbabilityGroup S4 = fusion_from_group_table(FiniteGroup::builtin("S4")).to_probgroup();
    auto s24 = find_subgroups(S4, &exhaustive);
    CHECK_FALSE(exhaustive);
    CHECK(s24.front() == std::vector<int>{0});
    CHECK(s24.back().size() == 24);
    for (const auto& s : s24) CHECK(is_subgroup(S4, s));
}

TEST_CASE("quotient by the group-like subgroup") {
    ProbabilityGroup A = char_probgroup_s3();
    ProbabilityGroup Q = quotient(A, {0, 1});
    REQUIRE(Q.n() == 2);
    CHECK(Q.exact());
    CHECK(Q.names() == std::vector<std::string>{"[chi1]", "[chi3]"});
    CHECK(Q.p_exact(1, 1, 0) == Rational(1, 2));
    CHECK(Q.p_exact(1, 1, 1) == Rational(1, 2));
    CHECK(Q.check_axioms().ok());
    // order is multiplicative: n(S) * n(A//S) = n(A)
    CHECK(Q.order_exact() == Rational(3));
    Rational nS = A.size_exact(0) + A.size_exact(1);
    CHECK(nS * Q.order_exact() == A.order_exact());

    ProbabilityGroup whole = quotient(A, {0, 1, 2});
    CHECK(whole.n() == 1);
    ProbabilityGroup same = quotient(A, {0});
    REQUIRE(same.n() == 3);
    for (int a = 0; a < 3; ++a)
        for (int b = 0; b < 3; ++b)
            for (int c = 0; c < 3; ++c) CHECK(same.p_exact(a, b, c) == A.p_exact(a, b, c));

    CHECK_THROWS_AS(quotient(A, {0, 2}), std::domain_error);
}

TEST_CASE("annihilators in the dual") {
    ProbabilityGroup A = char_probgroup_s3();
    DualProbabilityGroup D = dual(A);
    CHECK(annihilator({0, 1}, D) == std::vector<int>{0, 2});
    CHECK(annihilator({0}, D) == std::vector<int>{0, 1, 2});
    CHECK(annihilator({0, 1, 2}, D) == std::vector<int>{0});
}

TEST_CASE("deterministic under a fixed seed") {
    ProbabilityGroup A = fusion_from_group_table(FiniteGroup::builtin("Z5")).to_probgroup();
    DualProbabilityGroup a = dual(A, 1e-9, 7);
    DualProbabilityGroup b = dual(A, 1e-9, 7);
    CHECK(a.seed_used == b.seed_used);
    for (int j = 0; j < 5; ++j)
        for (int x = 0; x < 5; ++x) CHECK(a.values(j, x) == b.values(j, x));
}
