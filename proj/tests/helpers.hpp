// Shared fixtures for the unit tests: small hand-written probability-group
// tables with known sizes and integrality behaviour, plus the generic
// structural-identity sweep reused by several suites.
#pragma once

#include <cmath>
#include <cstddef>
#include <string>
#include <utility>
#include <vector>

#include "probhopf/probgroup.hpp"
#include "probhopf/rational.hpp"

namespace testutil {

using probhopf::ProbabilityGroup;
using probhopf::Rational;

// Character probability group of the 6-element symmetric group, written out
// by hand: elements chi1 (unit), chi2, chi3 with
//   chi2.chi2 = chi1,  chi2.chi3 = chi3,
//   chi3.chi3 = 1/4 chi1 + 1/4 chi2 + 1/2 chi3.
// Sizes are (1, 1, 4), order 6.
inline ProbabilityGroup char_probgroup_s3() {
    const int n = 3;
    std::vector<Rational> p(static_cast<size_t>(n) * n * n, Rational(0));
    auto at = [&](int a, int b, int c) -> Rational& {
        return p[(static_cast<size_t>(a) * n + b) * n + c];
    };
    for (int b = 0; b < n; ++b) at(0, b, b) = 1;
    at(1, 0, 1) = 1;
    at(1, 1, 0) = 1;
    at(1, 2, 2) = 1;
    at(2, 0, 2) = 1;
    at(2, 1, 2) = 1;
    at(2, 2, 0) = Rational(1, 4);
    at(2, 2, 1) = Rational(1, 4);
    at(2, 2, 2) = Rational(1, 2);
    return ProbabilityGroup::make_exact({"chi1", "chi2", "chi3"}, 0, {0, 1, 2}, std::move(p));
}

// Normalized-class-sum probability group of the same group, also by hand:
// elements c1 (unit), c2 (the 3-element class), c3 (the 2-element class):
//   c2.c2 = 1/3 c1 + 2/3 c3,  c2.c3 = c2,  c3.c3 = 1/2 c1 + 1/2 c3.
// Sizes are (1, 3, 2), order 6.
inline ProbabilityGroup class_probgroup_s3() {
    const int n = 3;
    std::vector<Rational> p(static_cast<size_t>(n) * n * n, Rational(0));
    auto at = [&](int a, int b, int c) -> Rational& {
        return p[(static_cast<size_t>(a) * n + b) * n + c];
    };
    for (int b = 0; b < n; ++b) at(0, b, b) = 1;
    at(1, 0, 1) = 1;
    at(1, 1, 0) = Rational(1, 3);
    at(1, 1, 2) = Rational(2, 3);
    at(1, 2, 1) = 1;
    at(2, 0, 2) = 1;
    at(2, 1, 1) = 1;
    at(2, 2, 0) = Rational(1, 2);
    at(2, 2, 2) = Rational(1, 2);
    return ProbabilityGroup::make_exact({"c1", "c2", "c3"}, 0, {0, 1, 2}, std::move(p));
}

// Order-3 table with sizes (1, 1, 2): g is group-like with g.g = e,
// g.c = c, and c.c = 1/2 e + 1/2 g.  Every weighted product in the
// integrality test is a perfect square but s(c) = 2 is not, so the table is
// quasi-2-integral without being 2-integral.
inline ProbabilityGroup nonsquare_size_table() {
    const int n = 3;
    std::vector<Rational> p(static_cast<size_t>(n) * n * n, Rational(0));
    auto at = [&](int a, int b, int c) -> Rational& {
        return p[(static_cast<size_t>(a) * n + b) * n + c];
    };
    for (int b = 0; b < n; ++b) at(0, b, b) = 1;
    at(1, 0, 1) = 1;
    at(1, 1, 0) = 1;
    at(1, 2, 2) = 1;
    at(2, 0, 2) = 1;
    at(2, 1, 2) = 1;
    at(2, 2, 0) = Rational(1, 2);
    at(2, 2, 1) = Rational(1, 2);
    return ProbabilityGroup::make_exact({"e", "g", "c"}, 0, {0, 1, 2}, std::move(p));
}

// Order-2 float table whose non-unit row is irrational: p(a.a = e) = 1/sqrt 2.
// Valid as a probability group, but integrality cannot be certified because
// no table entry snaps to a rational.
inline ProbabilityGroup irrational_float_table() {
    const int n = 2;
    std::vector<double> p(static_cast<size_t>(n) * n * n, 0.0);
    auto at = [&](int a, int b, int c) -> double& {
        return p[(static_cast<size_t>(a) * n + b) * n + c];
    };
    at(0, 0, 0) = 1.0;
    at(0, 1, 1) = 1.0;
    at(1, 0, 1) = 1.0;
    const double q = 1.0 / std::sqrt(2.0);
    at(1, 1, 0) = q;
    at(1, 1, 1) = 1.0 - q;
    return ProbabilityGroup::make_float({"e", "a"}, 0, {0, 1}, std::move(p));
}

// Worst deviation over all (a, b, c) of two structural identities that every
// probability group satisfies:
//   p(a.b = c^-1) s(a) = p(b.c = a^-1) s(c)
//   p(a.b = a) = p(b.a = a)
inline double identity_sweep(const ProbabilityGroup& A) {
    double worst = 0.0;
    const int n = A.n();
    for (int a = 0; a < n; ++a)
        for (int b = 0; b < n; ++b) {
            for (int c = 0; c < n; ++c) {
                double lhs = A.p(a, b, A.inverse(c)) * A.size(a);
                double rhs = A.p(b, c, A.inverse(a)) * A.size(c);
                worst = std::max(worst, std::abs(lhs - rhs));
            }
            worst = std::max(worst, std::abs(A.p(a, b, a) - A.p(b, a, a)));
        }
    return worst;
}

}  // namespace testutil
