#include "probhopf/duality.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <numeric>
#include <set>
#include <sstream>
#include <stdexcept>

namespace probhopf {

namespace {

std::vector<std::pair<long long, long long>> value_key(const CMatrix& vals, int j, int n) {
    std::vector<std::pair<long long, long long>> key;
    key.reserve(n);
    for (int a = 0; a < n; ++a)
        key.emplace_back(std::llround(vals(j, a).real() * 1e9),
                         std::llround(vals(j, a).imag() * 1e9));
    return key;
}

}  // namespace

DualProbabilityGroup dual(const ProbabilityGroup& A, double tol, unsigned seed,
                          long long max_den) {
    const int n = A.n();
    if (!A.is_abelian(tol))
        throw std::domain_error("dual: the probability group must be abelian");

    // Left convolution matrices L_a(c,b) = p(a.b=c); these commute exactly
    // when A is abelian + associative, and every joint eigenvalue column
    // (f(a))_a is a multiplicative functional with f(1) = 1.
    std::vector<CMatrix> L(n, CMatrix::Zero(n, n));
    for (int a = 0; a < n; ++a)
        for (int b = 0; b < n; ++b)
            for (int c = 0; c < n; ++c) L[a](c, b) = A.p(a, b, c);
    CommonEigenbasis eb = common_eigenbasis(L, tol, seed);

    DualProbabilityGroup D;
    D.n = n;
    D.seed_used = eb.seed_used;

    CMatrix vals(n, n);  // (column j of the eigenvalue table) -> row j here
    for (int j = 0; j < n; ++j)
        for (int a = 0; a < n; ++a) vals(j, a) = eb.eigenvalues(a, j);

    // Distinctness: the n functionals of a semisimple commutative algebra
    // are pairwise distinct; coinciding rows mean the dual is smaller.
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j) {
            double diff = 0.0;
            for (int a = 0; a < n; ++a) diff = std::max(diff, std::abs(vals(i, a) - vals(j, a)));
            if (diff <= 1e-6)
                throw std::domain_error(
                    "dual: two functionals coincide -- dual smaller than |A|");
        }

    // Order: augmentation row (all ones) first, then lexicographic values.
    int aug = -1;
    for (int j = 0; j < n && aug < 0; ++j) {
        double worst = 0.0;
        for (int a = 0; a < n; ++a) worst = std::max(worst, std::abs(vals(j, a) - 1.0));
        if (worst <= 1e-6) aug = j;
    }
    if (aug < 0) throw std::domain_error("dual: augmentation functional not found");
    std::vector<int> order;
    for (int j = 0; j < n; ++j)
        if (j != aug) order.push_back(j);
    std::sort(order.begin(), order.end(), [&](int x, int y) {
        return value_key(vals, x, n) < value_key(vals, y, n);
    });
    order.insert(order.begin(), aug);

    D.values = CMatrix(n, n);
    for (int j = 0; j < n; ++j)
        for (int a = 0; a < n; ++a) D.values(j, a) = vals(order[j], a);
    for (int a = 0; a < n; ++a) D.values(0, a) = 1.0;  // exact augmentation

    // Multiplicativity residual f(a)f(b) = sum_c p(a.b=c) f(c).
    double fres = 0.0;
    for (int j = 0; j < n; ++j)
        for (int a = 0; a < n; ++a)
            for (int b = 0; b < n; ++b) {
                std::complex<double> s = 0.0;
                for (int c = 0; c < n; ++c) s += A.p(a, b, c) * D.values(j, c);
                fres = std::max(fres, std::abs(D.values(j, a) * D.values(j, b) - s));
            }
    D.functional_residual = fres;

    // Exact snapping of the functional values.
    D.values_q.assign(static_cast<size_t>(n) * n, GaussianRational());
    D.values_exact = true;
    for (int j = 0; j < n && D.values_exact; ++j)
        for (int a = 0; a < n; ++a) {
            auto g = snap_gaussian(D.values(j, a), max_den, std::max(tol, 1e-12));
            if (!g) {
                D.values_exact = false;
                break;
            }
            D.values_q[static_cast<size_t>(j) * n + a] = *g;
        }
    // A lucky rational approximation of an irrational value would poison the
    // exact pipeline, so snapped rows are only trusted when the exact table
    // is available and they satisfy the multiplicativity identity exactly.
    if (D.values_exact && !A.exact()) D.values_exact = false;
    for (int j = 0; j < n && D.values_exact; ++j)
        for (int a = 0; a < n && D.values_exact; ++a)
            for (int b = 0; b < n; ++b) {
                GaussianRational s;
                for (int c = 0; c < n; ++c) {
                    const Rational& pq = A.p_exact(a, b, c);
                    if (pq == 0) continue;
                    const GaussianRational& v = D.values_q[static_cast<size_t>(j) * n + c];
                    s = s + GaussianRational(pq * v.re, pq * v.im);
                }
                if (!(D.values_q[static_cast<size_t>(j) * n + a] *
                          D.values_q[static_cast<size_t>(j) * n + b] ==
                      s)) {
                    D.values_exact = false;
                    break;
                }
            }
    if (D.values_exact) {
        for (int j = 0; j < n; ++j)
            for (int a = 0; a < n; ++a)
                D.values(j, a) = D.values_q[static_cast<size_t>(j) * n + a].to_complex();
    } else {
        D.values_q.clear();
    }

    // phat: expand each pointwise product f_a * f_b in the basis {f_c} by
    // solving V x = w with V(x, c) = f_c(x).
    CMatrix V(n, n);
    for (int x = 0; x < n; ++x)
        for (int c = 0; c < n; ++c) V(x, c) = D.values(c, x);
    Eigen::PartialPivLU<CMatrix> lu(V);
    D.phat.assign(static_cast<size_t>(n) * n * n, std::complex<double>(0.0));
    for (int a = 0; a < n; ++a)
        for (int b = 0; b < n; ++b) {
            CVector w(n);
            for (int x = 0; x < n; ++x) w(x) = D.values(a, x) * D.values(b, x);
            CVector coef = lu.solve(w);
            for (int c = 0; c < n; ++c)
                D.phat[(static_cast<size_t>(a) * n + b) * n + c] = coef(c);
        }

    double min_re = 0.0, max_im = 0.0;
    for (const auto& z : D.phat) {
        min_re = std::min(min_re, z.real());
        max_im = std::max(max_im, std::abs(z.imag()));
    }
    D.min_phat = min_re;
    D.dualizable = min_re >= -tol && max_im <= std::max(tol, 1e-9);

    // chi^-1, defined by chi^-1(a) = chi(a^-1), is again a functional; find
    // its row.
    D.dual_of.assign(n, -1);
    for (int j = 0; j < n; ++j) {
        for (int k = 0; k < n && D.dual_of[j] < 0; ++k) {
            double diff = 0.0;
            for (int a = 0; a < n; ++a)
                diff = std::max(diff, std::abs(D.values(k, a) - D.values(j, A.inverse(a))));
            if (diff <= 1e-6) D.dual_of[j] = k;
        }
        if (D.dual_of[j] < 0)
            throw std::domain_error("dual: no functional matches the inverse-composed row " +
                                    std::to_string(j + 1));
    }

    // Dual sizes shat(j) = 1 / phat_aug(f_j, f_j^-1).
    D.shat.assign(n, 0.0);
    for (int j = 0; j < n; ++j) {
        std::complex<double> q = D.phat_at(j, D.dual_of[j], 0);
        if (std::abs(q) <= 1e-12)
            throw std::domain_error("dual: phat_aug(f, f^-1) vanishes for functional " +
                                    std::to_string(j + 1));
        D.shat[j] = 1.0 / q.real();
    }

    // Exact snapping of phat and shat.  Only trusted when the snapped
    // tensor reproduces the pointwise products exactly (certified against
    // the exact functional values, same rationale as above).
    D.phat_exact = D.values_exact;
    D.phat_q.assign(D.phat.size(), Rational(0));
    for (size_t t = 0; t < D.phat.size() && D.phat_exact; ++t) {
        if (std::abs(D.phat[t].imag()) > std::max(tol, 1e-12)) {
            D.phat_exact = false;
            break;
        }
        auto q = snap_rational(D.phat[t].real(), max_den, std::max(tol, 1e-12));
        if (!q)
            D.phat_exact = false;
        else
            D.phat_q[t] = *q;
    }
    for (int a = 0; a < n && D.phat_exact; ++a)
        for (int b = 0; b < n && D.phat_exact; ++b)
            for (int x = 0; x < n; ++x) {
                GaussianRational s;
                for (int c = 0; c < n; ++c) {
                    const Rational& q = D.phat_q[(static_cast<size_t>(a) * n + b) * n + c];
                    if (q == 0) continue;
                    const GaussianRational& v = D.values_q[static_cast<size_t>(c) * n + x];
                    s = s + GaussianRational(q * v.re, q * v.im);
                }
                if (!(D.values_q[static_cast<size_t>(a) * n + x] *
                          D.values_q[static_cast<size_t>(b) * n + x] ==
                      s)) {
                    D.phat_exact = false;
                    break;
                }
            }
    if (!D.phat_exact) D.phat_q.clear();

    D.shat_exact = D.phat_exact;
    if (D.shat_exact) {
        D.shat_q.resize(n);
        for (int j = 0; j < n; ++j) {
            const Rational& q = D.phat_q[(static_cast<size_t>(j) * n + D.dual_of[j]) * n + 0];
            if (q == 0) {
                D.shat_exact = false;
                D.shat_q.clear();
                break;
            }
            D.shat_q[j] = Rational(1) / q;
            D.shat[j] = to_double(D.shat_q[j]);
        }
    }

    D.names.reserve(n);
    for (int j = 0; j < n; ++j) D.names.push_back("f" + std::to_string(j + 1));
    return D;
}

ProbabilityGroup dual_probgroup(const DualProbabilityGroup& D) {
    if (!D.dualizable)
        throw std::domain_error(
            "dual_probgroup: dual tensor has negative structure constants (min " +
            std::to_string(D.min_phat) + ")");
    const int n = D.n;
    if (D.phat_exact)
        return ProbabilityGroup::make_exact(D.names, 0, D.dual_of, D.phat_q);
    std::vector<double> p(D.phat.size());
    for (size_t t = 0; t < D.phat.size(); ++t) {
        double v = D.phat[t].real();
        p[t] = std::abs(v) <= 1e-12 ? 0.0 : v;
    }
    (void)n;
    return ProbabilityGroup::make_float(D.names, 0, D.dual_of, std::move(p));
}

CheckReport dual_orthogonality(const ProbabilityGroup& A, const DualProbabilityGroup& D,
                               double tol) {
    CheckReport rep;
    const int n = A.n();
    const double nA = A.order();
    const double scale = std::max(1.0, nA);

    double worst = 0.0;
    for (int x = 0; x < n; ++x)
        for (int y = 0; y < n; ++y) {
            std::complex<double> s = 0.0;
            for (int a = 0; a < n; ++a)
                s += A.size(a) * D.shat[x] * D.values(x, a) * D.values(y, A.inverse(a));
            worst = std::max(worst, std::abs(s - (x == y ? nA : 0.0)));
        }
    rep.add("functional-orthogonality", worst <= tol * scale, worst,
            "sum_a s(a) shat(x) x(a) y(a^-1) = n(A) delta_xy");

    worst = 0.0;
    for (int a = 0; a < n; ++a)
        for (int b = 0; b < n; ++b) {
            std::complex<double> s = 0.0;
            for (int x = 0; x < n; ++x)
                s += D.shat[x] * A.size(b) * D.values(x, a) * D.values(x, A.inverse(b));
            worst = std::max(worst, std::abs(s - (a == b ? nA : 0.0)));
        }
    rep.add("element-orthogonality", worst <= tol * scale, worst,
            "sum_x shat(x) s(b) x(a) x(b^-1) = n(A) delta_ab");

    double ssum = std::accumulate(D.shat.begin(), D.shat.end(), 0.0);
    rep.add("shat-sum", std::abs(ssum - nA) <= tol * scale, std::abs(ssum - nA),
            "sum shat = n(A)");
    return rep;
}

namespace {

bool positive_mass(const ProbabilityGroup& A, int a, int b, int c) {
    if (A.exact()) return A.p_exact(a, b, c) > 0;
    return A.p(a, b, c) > 1e-12;
}

std::vector<int> closure_of(const ProbabilityGroup& A, std::vector<int> seed) {
    std::set<int> s(seed.begin(), seed.end());
    s.insert(A.unit());
    bool grew = true;
    while (grew) {
        grew = false;
        std::vector<int> cur(s.begin(), s.end());
        for (int a : cur)
            if (!s.count(A.inverse(a))) {
                s.insert(A.inverse(a));
                grew = true;
            }
        cur.assign(s.begin(), s.end());
        for (int a : cur)
            for (int b : cur)
                for (int c = 0; c < A.n(); ++c)
                    if (positive_mass(A, a, b, c) && !s.count(c)) {
                        s.insert(c);
                        grew = true;
                    }
    }
    return {s.begin(), s.end()};
}

}  // namespace

bool is_subgroup(const ProbabilityGroup& A, const std::vector<int>& S) {
    std::set<int> s(S.begin(), S.end());
    if (!s.count(A.unit())) return false;
    for (int a : S) {
        if (a < 0 || a >= A.n()) return false;
        if (!s.count(A.inverse(a))) return false;
    }
    for (int a : S)
        for (int b : S)
            for (int c = 0; c < A.n(); ++c)
                if (positive_mass(A, a, b, c) && !s.count(c)) return false;
    return true;
}

std::vector<std::vector<int>> find_subgroups(const ProbabilityGroup& A, bool* exhaustive) {
    const int n = A.n();
    std::set<std::vector<int>> found;
    bool full = n <= 12;
    if (full) {
        // All subsets containing the unit.
        std::vector<int> others;
        for (int a = 0; a < n; ++a)
            if (a != A.unit()) others.push_back(a);
        const int k = static_cast<int>(others.size());
        for (unsigned mask = 0; mask < (1u << k); ++mask) {
            std::vector<int> S{A.unit()};
            for (int t = 0; t < k; ++t)
                if (mask & (1u << t)) S.push_back(others[t]);
            std::sort(S.begin(), S.end());
            if (is_subgroup(A, S)) found.insert(S);
        }
    } else {
        found.insert(closure_of(A, {}));
        for (int a = 0; a < n; ++a) found.insert(closure_of(A, {a}));
        for (int a = 0; a < n; ++a)
            for (int b = a + 1; b < n; ++b) found.insert(closure_of(A, {a, b}));
        std::vector<int> unit_only{A.unit()};
        if (is_subgroup(A, unit_only)) found.insert(unit_only);
    }
    if (exhaustive) *exhaustive = full;
    std::vector<std::vector<int>> out(found.begin(), found.end());
    std::sort(out.begin(), out.end(), [](const auto& x, const auto& y) {
        if (x.size() != y.size()) return x.size() < y.size();
        return x < y;
    });
    return out;
}

ProbabilityGroup quotient(const ProbabilityGroup& A, const std::vector<int>& S, double tol) {
    const int n = A.n();
    if (!A.is_abelian(tol))
        throw std::domain_error("quotient: the probability group must be abelian");
    if (!is_subgroup(A, S))
        throw std::domain_error("quotient: the given subset is not a probability subgroup");
    std::set<int> sset(S.begin(), S.end());

    // a ~ b iff some x reachable from a through S satisfies p(x.b^-1 = s) > 0
    // for some s in S.
    auto related = [&](int a, int b) {
        for (int s1 : S)
            for (int x = 0; x < n; ++x) {
                if (!positive_mass(A, a, s1, x)) continue;
                for (int s2 : S)
                    if (positive_mass(A, x, A.inverse(b), s2)) return true;
            }
        return false;
    };
    std::vector<std::vector<bool>> R(n, std::vector<bool>(n, false));
    for (int a = 0; a < n; ++a)
        for (int b = 0; b < n; ++b) R[a][b] = related(a, b);
    for (int a = 0; a < n; ++a) {
        if (!R[a][a]) throw std::domain_error("quotient: relation is not reflexive");
        for (int b = 0; b < n; ++b) {
            if (R[a][b] != R[b][a])
                throw std::domain_error("quotient: relation is not symmetric");
            for (int c = 0; c < n && R[a][b]; ++c)
                if (R[b][c] && !R[a][c])
                    throw std::domain_error("quotient: relation is not transitive");
        }
    }

    // Classes: unit class first, then by least member.
    std::vector<int> cls(n, -1);
    std::vector<std::vector<int>> classes;
    {
        std::vector<int> scan_order;
        scan_order.push_back(A.unit());
        for (int a = 0; a < n; ++a)
            if (a != A.unit()) scan_order.push_back(a);
        for (int a : scan_order) {
            if (cls[a] >= 0) continue;
            int id = static_cast<int>(classes.size());
            std::vector<int> members;
            for (int b = 0; b < n; ++b)
                if (R[a][b]) {
                    cls[b] = id;
                    members.push_back(b);
                }
            classes.push_back(std::move(members));
        }
    }
    const int m = static_cast<int>(classes.size());

    // P([a].[b] = [c]) = sum over the class of c, checked over all
    // representative pairs.
    std::vector<int> qinv(m);
    for (int X = 0; X < m; ++X) {
        qinv[X] = cls[A.inverse(classes[X].front())];
        for (int a : classes[X])
            if (cls[A.inverse(a)] != qinv[X])
                throw std::domain_error("quotient: inverse class depends on representative");
    }
    std::vector<std::string> names;
    names.reserve(m);
    for (int X = 0; X < m; ++X) names.push_back("[" + A.name(classes[X].front()) + "]");

    auto rep_error = [&](int X, int Y, int Z) {
        std::ostringstream os;
        os << "quotient: P(" << names[X] << "." << names[Y] << "=" << names[Z]
           << ") depends on the representatives";
        return std::domain_error(os.str());
    };

    if (A.exact()) {
        std::vector<Rational> P(static_cast<size_t>(m) * m * m);
        for (int X = 0; X < m; ++X)
            for (int Y = 0; Y < m; ++Y) {
                bool first = true;
                std::vector<Rational> row(m);
                for (int a : classes[X])
                    for (int b : classes[Y]) {
                        std::vector<Rational> cur(m, Rational(0));
                        for (int c = 0; c < n; ++c) cur[cls[c]] += A.p_exact(a, b, c);
                        if (first) {
                            row = cur;
                            first = false;
                        } else {
                            for (int Z = 0; Z < m; ++Z)
                                if (cur[Z] != row[Z]) throw rep_error(X, Y, Z);
                        }
                    }
                for (int Z = 0; Z < m; ++Z)
                    P[(static_cast<size_t>(X) * m + Y) * m + Z] = row[Z];
            }
        return ProbabilityGroup::make_exact(std::move(names), 0, std::move(qinv), std::move(P));
    }

    std::vector<double> P(static_cast<size_t>(m) * m * m);
    for (int X = 0; X < m; ++X)
        for (int Y = 0; Y < m; ++Y) {
            bool first = true;
            std::vector<double> row(m);
            for (int a : classes[X])
                for (int b : classes[Y]) {
                    std::vector<double> cur(m, 0.0);
                    for (int c = 0; c < n; ++c) cur[cls[c]] += A.p(a, b, c);
                    if (first) {
                        row = cur;
                        first = false;
                    } else {
                        for (int Z = 0; Z < m; ++Z)
                            if (std::abs(cur[Z] - row[Z]) > tol) throw rep_error(X, Y, Z);
                    }
                }
            for (int Z = 0; Z < m; ++Z) P[(static_cast<size_t>(X) * m + Y) * m + Z] = row[Z];
        }
    return ProbabilityGroup::make_float(std::move(names), 0, std::move(qinv), std::move(P));
}

std::vector<int> annihilator(const std::vector<int>& S, const DualProbabilityGroup& D,
                             double tol) {
    std::vector<int> out;
    for (int j = 0; j < D.n; ++j) {
        bool all_one = true;
        for (int s : S)
            if (std::abs(D.values(j, s) - std::complex<double>(1.0)) > tol) {
                all_one = false;
                break;
            }
        if (all_one) out.push_back(j);
    }
    return out;
}

}  // namespace probhopf
