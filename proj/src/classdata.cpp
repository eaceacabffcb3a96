#include "probhopf/classdata.hpp"

#include <algorithm>
#include <cmath>
#include <complex>
#include <sstream>
#include <stdexcept>

namespace probhopf {

namespace {

// Lexicographic key for a snapped complex vector; used only for deterministic
// ordering of character rows, so fixed-point rounding is fine.
std::vector<std::pair<long long, long long>> row_key(const CMatrix& chars, int alpha, int m) {
    std::vector<std::pair<long long, long long>> key;
    key.reserve(m);
    for (int i = 0; i < m; ++i) {
        std::complex<double> v = chars(alpha, i);
        key.emplace_back(std::llround(v.real() * 1e9), std::llround(v.imag() * 1e9));
    }
    return key;
}

}  // namespace

ClassData class_data(const FiniteGroup& G, double tol, unsigned seed, long long max_den) {
    ClassData cd;
    cd.G = G;
    const int n = G.order();

    // Conjugacy classes.  Scanning elements in ascending order means each new
    // class is discovered at its least member, so classes come out ordered by
    // least member with the identity class (= {0}) first.
    cd.class_of.assign(n, -1);
    for (int x = 0; x < n; ++x) {
        if (cd.class_of[x] >= 0) continue;
        const int idx = static_cast<int>(cd.classes.size());
        std::vector<int> orbit, stack{x};
        cd.class_of[x] = idx;
        while (!stack.empty()) {
            int y = stack.back();
            stack.pop_back();
            orbit.push_back(y);
            for (int g = 0; g < n; ++g) {
                int z = G.mul(G.mul(g, y), G.inv(g));
                if (cd.class_of[z] < 0) {
                    cd.class_of[z] = idx;
                    stack.push_back(z);
                }
            }
        }
        std::sort(orbit.begin(), orbit.end());
        cd.classes.push_back(std::move(orbit));
    }
    cd.m = static_cast<int>(cd.classes.size());
    const int m = cd.m;
    cd.rep.resize(m);
    cd.dual_class.resize(m);
    for (int i = 0; i < m; ++i) cd.rep[i] = cd.classes[i].front();
    for (int i = 0; i < m; ++i) cd.dual_class[i] = cd.class_of[G.inv(cd.rep[i])];

    // Counting tensor: pairs (x,y) in C_i x C_j with xy = z, for z in C_k.
    // The count must not depend on the choice of z; verified as we go.
    cd.counts.assign(static_cast<size_t>(m) * m * m, 0);
    for (int i = 0; i < m; ++i)
        for (int k = 0; k < m; ++k) {
            std::vector<std::vector<long long>> per_z(m);
            for (auto& v : per_z) v.assign(cd.classes[k].size(), 0);
            for (size_t zi = 0; zi < cd.classes[k].size(); ++zi) {
                int z = cd.classes[k][zi];
                for (int x : cd.classes[i]) {
                    int j = cd.class_of[G.mul(G.inv(x), z)];
                    ++per_z[j][zi];
                }
            }
            for (int j = 0; j < m; ++j) {
                for (long long c : per_z[j])
                    if (c != per_z[j][0]) {
                        std::ostringstream os;
                        os << "class data: product counts of classes " << i << "," << j
                           << " differ across members of class " << k;
                        throw std::domain_error(os.str());
                    }
                cd.counts[(static_cast<size_t>(i) * m + j) * m + k] = per_z[j][0];
            }
        }

    // Class multiplication matrices M_i(k,j) = count(i,j,k) and their common
    // eigenbasis.  Column alpha carries the eigenvalues w_i = |C_i| chi(g_i)/deg.
    std::vector<CMatrix> M(m, CMatrix::Zero(m, m));
    for (int i = 0; i < m; ++i)
        for (int j = 0; j < m; ++j)
            for (int k = 0; k < m; ++k)
                M[i](k, j) = static_cast<double>(cd.count(i, j, k));
    CommonEigenbasis eb = common_eigenbasis(M, tol, seed);
    cd.seed_used = eb.seed_used;

    // Recover degrees via |G| = deg^2 * sum_i |w_i|^2 / |C_i| and character
    // values via chi(g_i) = w_i * deg / |C_i|.
    struct Row {
        long long deg;
        std::vector<std::complex<double>> vals;
    };
    std::vector<Row> rows(m);
    for (int a = 0; a < m; ++a) {
        double s = 0.0;
        for (int i = 0; i < m; ++i)
            s += std::norm(eb.eigenvalues(i, a)) / cd.class_size(i);
        if (s <= 0.0) throw std::domain_error("class data: degenerate eigenvalue column");
        double deg = std::sqrt(n / s);
        auto snapped = snap_integer(deg, 1e-6 * std::max(1.0, deg));
        if (!snapped || *snapped < 1) {
            std::ostringstream os;
            os << "class data: character degree " << deg << " did not snap to an integer";
            throw std::domain_error(os.str());
        }
        rows[a].deg = *snapped;
        rows[a].vals.resize(m);
        for (int i = 0; i < m; ++i)
            rows[a].vals[i] = eb.eigenvalues(i, a) * static_cast<double>(rows[a].deg) /
                              static_cast<double>(cd.class_size(i));
    }

    long long degsq = 0;
    for (const auto& r : rows) degsq += r.deg * r.deg;
    if (degsq != n) {
        std::ostringstream os;
        os << "class data: degree check failed (sum of squares " << degsq << " vs order " << n
           << ")";
        throw std::domain_error(os.str());
    }

    // Order: trivial character (all values 1) first, then by (degree, values).
    int trivial = -1;
    for (int a = 0; a < m; ++a) {
        double worst = 0.0;
        for (int i = 0; i < m; ++i) worst = std::max(worst, std::abs(rows[a].vals[i] - 1.0));
        if (worst <= 1e-6) {
            trivial = a;
            break;
        }
    }
    if (trivial < 0) throw std::domain_error("class data: trivial character not found");

    std::vector<int> order;
    for (int a = 0; a < m; ++a)
        if (a != trivial) order.push_back(a);
    CMatrix tmp(m, m);
    for (int a = 0; a < m; ++a)
        for (int i = 0; i < m; ++i) tmp(a, i) = rows[a].vals[i];
    std::sort(order.begin(), order.end(), [&](int a, int b) {
        if (rows[a].deg != rows[b].deg) return rows[a].deg < rows[b].deg;
        return row_key(tmp, a, m) < row_key(tmp, b, m);
    });
    order.insert(order.begin(), trivial);

    cd.chars = CMatrix(m, m);
    cd.degrees.resize(m);
    for (int a = 0; a < m; ++a) {
        cd.degrees[a] = rows[order[a]].deg;
        for (int i = 0; i < m; ++i) cd.chars(a, i) = rows[order[a]].vals[i];
    }

    // Snap every value to a Gaussian rational.  Values outside Q(i) (e.g.
    // cube or fifth roots of unity) simply leave the table in float mode.
    // Two certifications guard against an irrational value that happens to
    // sit within tolerance of some large-denominator fraction: character
    // values are algebraic integers, so in Q(i) they must land in Z[i], and
    // the snapped table must satisfy the element orthogonality relation
    // exactly.  Either failure demotes the table to float mode.
    cd.chars_q.assign(static_cast<size_t>(m) * m, GaussianRational());
    cd.exact = true;
    for (int a = 0; a < m && cd.exact; ++a)
        for (int i = 0; i < m; ++i) {
            auto g = snap_gaussian(cd.chars(a, i), max_den, std::max(tol, 1e-12));
            if (!g || den(g->re) != 1 || den(g->im) != 1) {
                cd.exact = false;
                break;
            }
            cd.chars_q[static_cast<size_t>(a) * m + i] = *g;
        }
    for (int a = 0; a < m && cd.exact; ++a)
        for (int b = 0; b < m && cd.exact; ++b) {
            GaussianRational acc;
            for (int l = 0; l < m; ++l)
                acc = acc + GaussianRational(Rational(cd.class_size(l)), Rational(0)) *
                                cd.char_q(a, l) * cd.char_q(b, cd.dual_class[l]);
            if (!(acc == GaussianRational(Rational(a == b ? G.order() : 0), Rational(0))))
                cd.exact = false;
        }
    if (cd.exact) {
        // Rebuild the float table from the snapped values to purge noise.
        for (int a = 0; a < m; ++a)
            for (int i = 0; i < m; ++i) cd.chars(a, i) = cd.char_q(a, i).to_complex();
    } else {
        cd.chars_q.clear();
    }

    cd.E = CMatrix(m, m);
    for (int i = 0; i < m; ++i)
        for (int a = 0; a < m; ++a)
            cd.E(i, a) = cd.chars(a, i) / static_cast<double>(cd.degrees[a]);
    cd.Einv = cd.E.inverse();
    double inv_resid = max_norm(cd.E * cd.Einv - CMatrix::Identity(m, m));
    if (inv_resid > 1e-6) {
        std::ostringstream os;
        os << "class data: normalized character matrix is numerically singular (residual "
           << inv_resid << ")";
        throw std::domain_error(os.str());
    }
    return cd;
}

std::vector<long long> character_multiplicities(const ClassData& cd, double snap_tol) {
    const int m = cd.m;
    const long long n = cd.G.order();
    std::vector<long long> N(static_cast<size_t>(m) * m * m, 0);
    for (int i = 0; i < m; ++i)
        for (int j = 0; j < m; ++j)
            for (int k = 0; k < m; ++k) {
                size_t at = (static_cast<size_t>(i) * m + j) * m + k;
                if (cd.exact) {
                    GaussianRational acc;
                    for (int l = 0; l < m; ++l) {
                        GaussianRational w(Rational(cd.class_size(l)), Rational(0));
                        acc = acc + w * cd.char_q(i, l) * cd.char_q(j, l) * cd.char_q(k, l).conj();
                    }
                    Rational v = acc.re / n;
                    if (acc.im != 0 || den(v) != 1 || v < 0) {
                        std::ostringstream os;
                        os << "character multiplicities: entry (" << i << "," << j << "," << k
                           << ") = " << render_gaussian(acc) << "/" << n
                           << " is not a nonnegative integer";
                        throw std::domain_error(os.str());
                    }
                    N[at] = num(v).convert_to<long long>();
                } else {
                    std::complex<double> acc = 0.0;
                    for (int l = 0; l < m; ++l)
                        acc += static_cast<double>(cd.class_size(l)) * cd.chars(i, l) *
                               cd.chars(j, l) * std::conj(cd.chars(k, l));
                    acc /= static_cast<double>(n);
                    long long r = std::llround(acc.real());
                    if (std::abs(acc.real() - static_cast<double>(r)) > snap_tol ||
                        std::abs(acc.imag()) > snap_tol || r < 0) {
                        std::ostringstream os;
                        os << "character multiplicities: entry (" << i << "," << j << "," << k
                           << ") = " << render_complex(acc) << " did not snap to a nonnegative "
                           << "integer (tol " << snap_tol << ")";
                        throw std::domain_error(os.str());
                    }
                    N[at] = r;
                }
            }
    return N;
}

CheckReport verify_factorizations(const ClassData& cd, double tol) {
    CheckReport rep;
    const int m = cd.m;
    const double n = cd.G.order();

    // Character side: B_i(k,j) = N_ij^k deg_k / (deg_i deg_j) is left
    // multiplication by the normalized character x_i; its diagonalization by
    // E is E * B_i = D^i * E with D^i = diag_l E(l, i).
    auto N = character_multiplicities(cd);
    double worst_char = 0.0, scale_char = 1.0;
    for (int i = 0; i < m; ++i) {
        CMatrix B = CMatrix::Zero(m, m);
        for (int j = 0; j < m; ++j)
            for (int k = 0; k < m; ++k)
                B(k, j) = static_cast<double>(N[(static_cast<size_t>(i) * m + j) * m + k]) *
                          static_cast<double>(cd.degrees[k]) /
                          (static_cast<double>(cd.degrees[i]) * cd.degrees[j]);
        scale_char = std::max(scale_char, max_norm(B));
        CMatrix D = CMatrix::Zero(m, m);
        for (int l = 0; l < m; ++l) D(l, l) = cd.E(l, i);
        worst_char = std::max(worst_char, max_norm(cd.E * B - D * cd.E));
    }
    rep.add("char-ring-diagonalization", worst_char <= tol * scale_char, worst_char,
            "E * B_i = D^i * E over all normalized characters");

    // Class side: Bhat_i(k,j) = count(i,j,k) |C_k| / (|C_i||C_j|) is left
    // multiplication by the normalized class sum; E^T * Bhat_i = Dhat^i * E^T
    // with Dhat^i = diag_a E(i, a).
    double worst_cls = 0.0, scale_cls = 1.0;
    for (int i = 0; i < m; ++i) {
        CMatrix B = CMatrix::Zero(m, m);
        for (int j = 0; j < m; ++j)
            for (int k = 0; k < m; ++k)
                B(k, j) = static_cast<double>(cd.count(i, j, k)) * cd.class_size(k) /
                          (static_cast<double>(cd.class_size(i)) * cd.class_size(j));
        scale_cls = std::max(scale_cls, max_norm(B));
        CMatrix D = CMatrix::Zero(m, m);
        for (int a = 0; a < m; ++a) D(a, a) = cd.E(i, a);
        worst_cls = std::max(worst_cls, max_norm(cd.E.transpose() * B - D * cd.E.transpose()));
    }
    rep.add("class-ring-diagonalization", worst_cls <= tol * scale_cls, worst_cls,
            "E^T * Bhat_i = Dhat^i * E^T over all normalized class sums");
    (void)n;
    return rep;
}

CheckReport orthogonality_check(const ClassData& cd, double tol) {
    CheckReport rep;
    const int m = cd.m;
    const double n = cd.G.order();
    const double scale = std::max(1.0, n);

    double worst = 0.0;
    for (int a = 0; a < m; ++a)
        for (int b = 0; b < m; ++b) {
            std::complex<double> s = 0.0;
            for (int i = 0; i < m; ++i)
                s += static_cast<double>(cd.degrees[a] * cd.degrees[a]) * cd.class_size(i) *
                     cd.E(i, a) * cd.E(cd.dual_class[i], b);
            worst = std::max(worst, std::abs(s - (a == b ? n : 0.0)));
        }
    rep.add("column-orthogonality", worst <= tol * scale, worst,
            "sum_i deg_a^2 |C_i| E(i,a) E(i*,b) = |G| delta_ab");

    worst = 0.0;
    for (int i = 0; i < m; ++i)
        for (int j = 0; j < m; ++j) {
            std::complex<double> s = 0.0;
            for (int a = 0; a < m; ++a)
                s += static_cast<double>(cd.degrees[a] * cd.degrees[a]) * cd.class_size(i) *
                     cd.E(i, a) * cd.E(cd.dual_class[j], a);
            worst = std::max(worst, std::abs(s - (i == j ? n : 0.0)));
        }
    rep.add("row-orthogonality", worst <= tol * scale, worst,
            "sum_a deg_a^2 |C_i| E(i,a) E(j*,a) = |G| delta_ij");

    worst = 0.0;
    for (int a = 0; a < m; ++a)
        for (int b = 0; b < m; ++b) {
            std::complex<double> s = 0.0;
            for (int l = 0; l < m; ++l)
                s += static_cast<double>(cd.class_size(l)) * cd.chars(a, l) *
                     cd.chars(b, cd.dual_class[l]);
            worst = std::max(worst, std::abs(s - (a == b ? n : 0.0)));
        }
    rep.add("element-orthogonality", worst <= tol * scale, worst,
            "sum_g chi_a(g) chi_b(g^-1) = |G| delta_ab");

    rep.add("einv-identity", max_norm(cd.E * cd.Einv - CMatrix::Identity(m, m)) <= tol * m,
            max_norm(cd.E * cd.Einv - CMatrix::Identity(m, m)), "E * Einv = I");

    worst = 0.0;
    for (int a = 0; a < m; ++a)
        for (int i = 0; i < m; ++i) {
            std::complex<double> closed = static_cast<double>(cd.degrees[a] * cd.degrees[a]) *
                                          cd.E(cd.dual_class[i], a) *
                                          (static_cast<double>(cd.class_size(i)) / n);
            worst = std::max(worst, std::abs(cd.Einv(a, i) - closed));
        }
    rep.add("einv-closed-form", worst <= tol * scale, worst,
            "Einv(a,i) = deg_a^2 E(i*,a) |C_i| / |G|");
    return rep;
}

namespace {

std::vector<long long> snap_tensor(const std::vector<std::complex<double>>& vals, int m,
                                   double snap_tol, const char* what) {
    std::vector<long long> out(vals.size());
    for (size_t t = 0; t < vals.size(); ++t) {
        long long r = std::llround(vals[t].real());
        if (std::abs(vals[t].real() - static_cast<double>(r)) > snap_tol ||
            std::abs(vals[t].imag()) > snap_tol || r < 0) {
            size_t k = t % m, j = (t / m) % m, i = t / m / m;
            std::ostringstream os;
            os << what << ": entry (" << i << "," << j << "," << k << ") = "
               << render_complex(vals[t]) << " did not snap to a nonnegative integer (tol "
               << snap_tol << ")";
            throw std::domain_error(os.str());
        }
        out[t] = r;
    }
    return out;
}

}  // namespace

std::vector<long long> fusion_from_E(const ClassData& cd, double snap_tol) {
    const int m = cd.m;
    const double n = cd.G.order();
    std::vector<std::complex<double>> vals(static_cast<size_t>(m) * m * m);
    for (int i = 0; i < m; ++i)
        for (int j = 0; j < m; ++j)
            for (int k = 0; k < m; ++k) {
                std::complex<double> s = 0.0;
                for (int l = 0; l < m; ++l)
                    s += static_cast<double>(cd.class_size(l)) * cd.E(l, i) * cd.E(l, j) *
                         cd.E(cd.dual_class[l], k);
                vals[(static_cast<size_t>(i) * m + j) * m + k] =
                    s * static_cast<double>(cd.degrees[i] * cd.degrees[j] * cd.degrees[k]) / n;
            }
    return snap_tensor(vals, m, snap_tol, "fusion reconstruction from E");
}

std::vector<long long> classsums_from_E(const ClassData& cd, double snap_tol) {
    const int m = cd.m;
    const double n = cd.G.order();
    std::vector<std::complex<double>> vals(static_cast<size_t>(m) * m * m);
    for (int i = 0; i < m; ++i)
        for (int j = 0; j < m; ++j)
            for (int k = 0; k < m; ++k) {
                std::complex<double> s = 0.0;
                for (int l = 0; l < m; ++l)
                    s += static_cast<double>(cd.degrees[l] * cd.degrees[l]) * cd.E(i, l) *
                         cd.E(j, l) * cd.E(cd.dual_class[k], l);
                vals[(static_cast<size_t>(i) * m + j) * m + k] =
                    s * (static_cast<double>(cd.class_size(i)) * cd.class_size(j) / n);
            }
    return snap_tensor(vals, m, snap_tol, "class-sum reconstruction from E");
}

ProbabilityGroup class_probgroup(const ClassData& cd) {
    const int m = cd.m;
    std::vector<std::string> names;
    names.reserve(m);
    for (int i = 0; i < m; ++i) names.push_back(cd.class_name(i));
    std::vector<Rational> p(static_cast<size_t>(m) * m * m);
    for (int i = 0; i < m; ++i)
        for (int j = 0; j < m; ++j)
            for (int k = 0; k < m; ++k)
                p[(static_cast<size_t>(i) * m + j) * m + k] =
                    Rational(cd.count(i, j, k) * cd.class_size(k),
                             static_cast<long long>(cd.class_size(i)) * cd.class_size(j));
    return ProbabilityGroup::make_exact(std::move(names), 0, cd.dual_class, std::move(p));
}

}  // namespace probhopf
