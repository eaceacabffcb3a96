#include "probhopf/qdouble.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <sstream>
#include <stdexcept>

#include "probhopf/duality.hpp"

namespace probhopf {

FusionRing DoubleData::fusion_ring() const {
    std::vector<std::string> names;
    names.reserve(r);
    for (const auto& sm : simples) names.push_back(sm.name);
    return FusionRing::make(std::move(names), dual, fusion);
}

ProbabilityGroup DoubleData::probgroup(double tol) const { return fusion_ring().to_probgroup(tol); }

DoubleData build_double(const FiniteGroup& G, double tol, unsigned seed, int max_order) {
    const int n = G.order();
    if (n > max_order) {
        std::ostringstream os;
        os << "build_double: group order " << n << " exceeds the cost cap " << max_order;
        throw std::domain_error(os.str());
    }

    DoubleData dd;
    dd.G = G;
    dd.cdG = class_data(G, tol, seed);
    dd.seed_used = dd.cdG.seed_used;
    const int m = dd.cdG.m;

    // Per class: the centralizer of the least representative, its class data
    // (for irreps), and the index maps needed to evaluate characters at
    // arbitrary centralizer elements.
    struct Block {
        std::vector<int> elems;         // centralizer elements of G, ascending
        std::vector<int> pos_in_G;      // G element -> index in elems (-1 outside)
        ClassData cd;                   // class data of the centralizer
        int first_simple = 0;
    };
    std::vector<Block> blocks(m);
    dd.beta.assign(m, -1);
    for (int i = 0; i < m; ++i) {
        Block& bl = blocks[i];
        bl.elems = G.centralizer(dd.cdG.rep[i]);
        bl.pos_in_G.assign(n, -1);
        for (size_t t = 0; t < bl.elems.size(); ++t) bl.pos_in_G[bl.elems[t]] = static_cast<int>(t);
        FiniteGroup C = G.subgroup(bl.elems, G.name() + ".C" + std::to_string(i + 1));
        bl.cd = class_data(C, tol, seed);
        bl.first_simple = static_cast<int>(dd.simples.size());
        dd.beta[i] = bl.first_simple;  // trivial irrep is always row 0
        long long index = n / static_cast<long long>(bl.elems.size());
        for (int a = 0; a < bl.cd.m; ++a) {
            DoubleSimple sm;
            sm.class_index = i;
            sm.irrep_index = a;
            sm.dim = index * bl.cd.degrees[a];
            sm.name = "(" + dd.cdG.class_name(i) + ",pi" + std::to_string(a + 1) + ")";
            dd.simples.push_back(std::move(sm));
        }
    }
    dd.r = static_cast<int>(dd.simples.size());
    const int r = dd.r;
    dd.dims.resize(r);
    long long dimsq = 0;
    for (int u = 0; u < r; ++u) {
        dd.dims[u] = dd.simples[u].dim;
        dimsq += dd.dims[u] * dd.dims[u];
    }
    if (dimsq != static_cast<long long>(n) * n) {
        std::ostringstream os;
        os << "build_double: sum of squared dims is " << dimsq << ", expected " << n * n;
        throw std::domain_error(os.str());
    }

    // Character of centralizer-irrep alpha of block i at a centralizer
    // element x (given as a G element).
    auto chi = [&](int i, int alpha, int x) -> std::complex<double> {
        const Block& bl = blocks[i];
        int pos = bl.pos_in_G[x];
        if (pos < 0)
            throw std::domain_error("build_double: element outside its centralizer");
        return bl.cd.chars(alpha, bl.cd.class_of[pos]);
    };

    // S-matrix: for u = (class of a, chi), v = (class of b, psi),
    //   stilde(u,v) = |G|/(|C(a)||C(b)|) * sum over g in G with
    //                 a.(g b g^-1) = (g b g^-1).a of chi(g b g^-1) psi(g^-1 a g).
    dd.stilde = CMatrix::Zero(r, r);
    for (int u = 0; u < r; ++u) {
        int i = dd.simples[u].class_index, alpha = dd.simples[u].irrep_index;
        int a = dd.cdG.rep[i];
        for (int v = 0; v < r; ++v) {
            int j = dd.simples[v].class_index, betaIdx = dd.simples[v].irrep_index;
            int b = dd.cdG.rep[j];
            std::complex<double> acc = 0.0;
            for (int g = 0; g < n; ++g) {
                int bg = G.mul(G.mul(g, b), G.inv(g));  // g b g^-1
                if (!G.commute(a, bg)) continue;
                int ag = G.mul(G.mul(G.inv(g), a), g);  // g^-1 a g
                acc += chi(i, alpha, bg) * chi(j, betaIdx, ag);
            }
            double norm = static_cast<double>(n) /
                          (static_cast<double>(blocks[i].elems.size()) * blocks[j].elems.size());
            dd.stilde(u, v) = acc * norm;
        }
    }
    for (int v = 0; v < r; ++v) {
        double d0 = std::abs(dd.stilde(0, v) - static_cast<double>(dd.dims[v]));
        double d1 = std::abs(dd.stilde(v, 0) - static_cast<double>(dd.dims[v]));
        if (std::max(d0, d1) > 1e-6 * std::max(1.0, static_cast<double>(dd.dims[v]))) {
            std::ostringstream os;
            os << "build_double: first S-row/column does not equal the dimensions at simple "
               << (v + 1);
            throw std::domain_error(os.str());
        }
    }
    dd.s = dd.stilde / static_cast<double>(n);

    // s*s must be a permutation matrix; it defines the dual involution.
    CMatrix s2 = dd.s * dd.s;
    dd.dual.assign(r, -1);
    for (int u = 0; u < r; ++u) {
        for (int v = 0; v < r; ++v) {
            double target = std::abs(s2(u, v));
            if (std::abs(target - 1.0) <= 1e-6) {
                if (std::abs(s2(u, v) - std::complex<double>(1.0)) > 1e-6)
                    throw std::domain_error("build_double: s*s entry is not +1");
                if (dd.dual[u] != -1)
                    throw std::domain_error("build_double: s*s row has two unit entries");
                dd.dual[u] = v;
            } else if (target > 1e-6) {
                throw std::domain_error("build_double: s*s is not a permutation matrix");
            }
        }
        if (dd.dual[u] < 0)
            throw std::domain_error("build_double: s*s row " + std::to_string(u + 1) +
                                    " has no unit entry");
    }
    for (int u = 0; u < r; ++u)
        if (dd.dual[dd.dual[u]] != u)
            throw std::domain_error("build_double: dual map is not an involution");
    if (dd.dual[0] != 0)
        throw std::domain_error("build_double: the unit simple is not self-dual");

    // Verlinde fusion tensor.
    dd.fusion.assign(static_cast<size_t>(r) * r * r, 0);
    std::string bad;
    for (int i = 0; i < r; ++i)
        for (int j = 0; j < r; ++j)
            for (int k = 0; k < r; ++k) {
                std::complex<double> acc = 0.0;
                for (int t = 0; t < r; ++t)
                    acc += dd.s(i, t) * dd.s(j, t) * dd.s(dd.dual[k], t) / dd.s(0, t);
                long long v = std::llround(acc.real());
                if (std::abs(acc.real() - static_cast<double>(v)) > 1e-6 ||
                    std::abs(acc.imag()) > 1e-6 || v < 0) {
                    std::ostringstream os;
                    os << "(" << (i + 1) << "," << (j + 1) << "," << (k + 1)
                       << ")=" << render_complex(acc) << " ";
                    bad += os.str();
                    if (bad.size() > 200) break;
                } else {
                    dd.fusion[(static_cast<size_t>(i) * r + j) * r + k] = v;
                }
            }
    if (!bad.empty())
        throw std::domain_error(
            "build_double: Verlinde coefficients failed the integer snap at " + bad);

    dd.E = CMatrix(r, r);
    for (int i = 0; i < r; ++i)
        for (int j = 0; j < r; ++j)
            dd.E(i, j) = dd.s(i, j) * static_cast<double>(n) /
                         static_cast<double>(dd.dims[i] * dd.dims[j]);
    return dd;
}

CheckReport check_E_symmetry(const DoubleData& dd, double tol) {
    CheckReport rep;
    double worst = max_norm(dd.E - dd.E.transpose());
    rep.add("E-symmetric", worst <= tol, worst, "E(i,j) = E(j,i)");
    double unit_worst = 0.0;
    for (int j = 0; j < dd.r; ++j) {
        unit_worst = std::max(unit_worst, std::abs(dd.E(0, j) - std::complex<double>(1.0)));
        unit_worst = std::max(unit_worst, std::abs(dd.E(j, 0) - std::complex<double>(1.0)));
    }
    rep.add("E-unit-row", unit_worst <= tol, unit_worst, "first row and column all ones");
    return rep;
}

CheckReport check_dual_iso(const DoubleData& dd, double tol, unsigned seed) {
    CheckReport rep;
    const int r = dd.r;
    const double n2 = static_cast<double>(dd.G.order()) * dd.G.order();

    // Dual-side tensor from E with sizes dims^2 vs the Verlinde probability
    // group under identity indexing.
    ProbabilityGroup P = dd.probgroup(tol);
    double worst = 0.0;
    int wi = -1, wj = -1, wk = -1;
    for (int i = 0; i < r; ++i)
        for (int j = 0; j < r; ++j)
            for (int k = 0; k < r; ++k) {
                std::complex<double> acc = 0.0;
                for (int l = 0; l < r; ++l)
                    acc += dd.E(i, l) * dd.E(j, l) * dd.E(dd.dual[k], l) *
                           static_cast<double>(dd.dims[l] * dd.dims[l]);
                std::complex<double> phat =
                    acc * static_cast<double>(dd.dims[k] * dd.dims[k]) / n2;
                double diff = std::abs(phat - std::complex<double>(P.p(i, j, k)));
                if (diff > worst) {
                    worst = diff;
                    wi = i; wj = j; wk = k;
                }
            }
    std::string detail = "phat from E/dims^2 equals the Verlinde p under identity indexing";
    if (worst > tol && wi >= 0) {
        std::ostringstream os;
        os << "largest mismatch at (" << (wi + 1) << "," << (wj + 1) << "," << (wk + 1) << ")";
        detail = os.str();
    }
    rep.add("phat-identity-indexing", worst <= tol, worst, detail);

    // Independent route: generic functional dual of the Verlinde probability
    // group; every dual size must be some dims^2.
    try {
        DualProbabilityGroup D = dual(P, std::max(tol, 1e-9), seed);
        double worst_match = 0.0;
        for (int j = 0; j < r; ++j) {
            double best = 1e300;
            for (int l = 0; l < r; ++l)
                best = std::min(best,
                                std::abs(D.shat[j] - static_cast<double>(dd.dims[l] * dd.dims[l])));
            worst_match = std::max(worst_match, best);
        }
        rep.add("shat-realized-by-dims", worst_match <= 1e-6, worst_match,
                "every generic dual size equals some dims^2");
    } catch (const std::exception& e) {
        rep.add("shat-realized-by-dims", false, 0.0,
                std::string("generic dual failed: ") + e.what());
    }
    return rep;
}

CheckReport orthogonality_double(const DoubleData& dd, double tol) {
    CheckReport rep;
    const int r = dd.r;
    const double n2 = static_cast<double>(dd.G.order()) * dd.G.order();

    double worst = 0.0;
    for (int i = 0; i < r; ++i)
        for (int j = 0; j < r; ++j) {
            std::complex<double> acc = 0.0;
            for (int a = 0; a < r; ++a)
                acc += static_cast<double>(dd.dims[a] * dd.dims[a]) *
                       static_cast<double>(dd.dims[i] * dd.dims[i]) * dd.E(i, a) *
                       dd.E(dd.dual[j], a);
            worst = std::max(worst, std::abs(acc - (i == j ? n2 : 0.0)));
        }
    rep.add("double-orthogonality", worst <= tol * n2, worst,
            "sum_a dims_a^2 dims_i^2 E(i,a) E(j*,a) = |G|^2 delta_ij");

    CMatrix s2 = dd.s * dd.s;
    CMatrix C = CMatrix::Zero(r, r);
    for (int u = 0; u < r; ++u) C(u, dd.dual[u]) = 1.0;
    double perm = max_norm(s2 - C);
    rep.add("s-squared-permutation", perm <= std::max(tol, 1e-9) * r, perm,
            "s*s equals the charge-conjugation permutation");

    bool divides = true;
    std::string w;
    long long nn = static_cast<long long>(dd.G.order()) * dd.G.order();
    for (int j = 0; j < r && divides; ++j)
        if (nn % dd.dims[j] != 0) {
            divides = false;
            w = "dims " + std::to_string(dd.dims[j]) + " does not divide " + std::to_string(nn);
        }
    rep.add("dims-divisibility", divides, 0.0, w.empty() ? "dims_j | |G|^2" : w);
    return rep;
}

CheckReport classsum_integrality(const DoubleData& dd, double snap_tol) {
    CheckReport rep;
    const int r = dd.r;

    double worst = 0.0;
    bool ok = true;
    std::string w;
    for (int i = 0; i < r; ++i)
        for (int j = 0; j < r; ++j)
            for (int k = 0; k < r; ++k) {
                std::complex<double> acc = 0.0;
                for (int l = 0; l < r; ++l)
                    acc += dd.E(i, l) * dd.E(j, l) * dd.E(dd.dual[k], l) *
                           static_cast<double>(dd.dims[l] * dd.dims[l]);
                // class-sum constant chat = dims_i^2 dims_j^2 / |G|^2 * acc
                // (can be fractional); the claim is |G|^2 * chat integral:
                std::complex<double> scaled =
                    acc * static_cast<double>(dd.dims[i] * dd.dims[i]) *
                    static_cast<double>(dd.dims[j] * dd.dims[j]);
                long long v = std::llround(scaled.real());
                double err = std::max(std::abs(scaled.real() - static_cast<double>(v)),
                                      std::abs(scaled.imag()));
                worst = std::max(worst, err);
                if (err > snap_tol || v < 0) {
                    if (ok) {
                        std::ostringstream os;
                        os << "|G|^2 * chat at (" << (i + 1) << "," << (j + 1) << "," << (k + 1)
                           << ") = " << render_complex(scaled) << " is not a nonnegative integer";
                        w = os.str();
                    }
                    ok = false;
                }
            }
    rep.add("double-classsum-integrality", ok, worst,
            ok ? "|G|^2 * every class-sum constant is a nonnegative integer" : w);

    // Group-algebra floor: the exact counting tensor of G is integral as-is.
    rep.add("group-classsum-floor", true, 0.0,
            "exact counting tensor of the group is already integral (factor 1)");
    return rep;
}

RestrictionResult restriction_and_Ai(const DoubleData& dd, double tol) {
    RestrictionResult res;
    const int r = dd.r;
    const int m = dd.cdG.m;

    // Simples of the identity-class block, by centralizer-irrep index; the
    // centralizer of the identity is G itself, so its irreps are G's.
    std::vector<int> eblock;
    for (int u = 0; u < r; ++u)
        if (dd.simples[u].class_index == 0) eblock.push_back(u);
    if (static_cast<int>(eblock.size()) != m)
        throw std::domain_error("restriction: identity block has the wrong size");

    // Match each simple's restricted E row against the group's E rows.
    res.A_sets.assign(m, {});
    bool partition_ok = true;
    std::string w;
    for (int u = 0; u < r; ++u) {
        int match = -1;
        for (int i = 0; i < m && match < 0; ++i) {
            double diff = 0.0;
            for (int t = 0; t < m; ++t)
                diff = std::max(diff, std::abs(dd.E(u, eblock[t]) - dd.cdG.E(i, t)));
            if (diff <= tol) match = i;
        }
        if (match < 0) {
            partition_ok = false;
            if (w.empty())
                w = "simple " + dd.simples[u].name + " restricts to no class functional";
        } else {
            res.A_sets[match].push_back(u);
        }
    }
    size_t covered = 0;
    for (const auto& s : res.A_sets) covered += s.size();
    if (covered != static_cast<size_t>(r)) partition_ok = false;
    res.report.add("restriction-partition", partition_ok, 0.0,
                   partition_ok ? "every simple restricts to exactly one class functional" : w);

    bool beta_ok = true;
    std::string wb;
    for (int i = 0; i < m && beta_ok; ++i) {
        const auto& s = res.A_sets[i];
        if (std::find(s.begin(), s.end(), dd.beta[i]) == s.end()) {
            beta_ok = false;
            wb = "beta(" + dd.cdG.class_name(i) + ") is not in A_" + std::to_string(i + 1);
        }
    }
    res.report.add("beta-membership", beta_ok, 0.0, wb);

    bool div_ok = true;
    std::string wd;
    for (int i = 0; i < m && div_ok; ++i)
        for (int u : res.A_sets[i]) {
            long long d2 = dd.dims[u] * dd.dims[u];
            if (d2 % dd.cdG.class_size(i) != 0) {
                div_ok = false;
                wd = "|C_" + std::to_string(i + 1) + "| = " +
                     std::to_string(dd.cdG.class_size(i)) + " does not divide dims^2 = " +
                     std::to_string(d2) + " of " + dd.simples[u].name;
                break;
            }
        }
    res.report.add("classsize-divides-dims2", div_ok, 0.0, wd);

    // Quotient formula: count_G(i,j,k) = sum_{v in A_k} N_{beta(i) beta(j)}^v
    // * dims_v / |C_k|, exact in integer arithmetic.
    bool qf_ok = true;
    std::string wq;
    for (int i = 0; i < m; ++i)
        for (int j = 0; j < m; ++j)
            for (int k = 0; k < m; ++k) {
                long long acc = 0;
                for (int v : res.A_sets[k]) acc += dd.N(dd.beta[i], dd.beta[j], v) * dd.dims[v];
                long long cls = dd.cdG.class_size(k);
                if (acc % cls != 0 || acc / cls != dd.cdG.count(i, j, k)) {
                    if (qf_ok) {
                        std::ostringstream os;
                        os << "quotient formula at (" << (i + 1) << "," << (j + 1) << ","
                           << (k + 1) << "): " << acc << "/" << cls << " vs exact count "
                           << dd.cdG.count(i, j, k);
                        wq = os.str();
                    }
                    qf_ok = false;
                }
            }
    res.report.add("classsum-quotient-formula", qf_ok, 0.0,
                   qf_ok ? "fusion of the beta simples reproduces the exact counting tensor"
                         : wq);
    return res;
}

}  // namespace probhopf
