#include "probhopf/classify.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <set>
#include <sstream>
#include <stdexcept>

namespace probhopf {

namespace {

struct Candidate {
    int n;
    std::vector<int> inv;           // involution fixing 0
    std::vector<long long> roots;   // n_a, with roots[0] = 1
    std::vector<long long> k;       // n^3 tensor

    long long& at(int a, int b, int c) {
        return k[(static_cast<size_t>(a) * n + b) * n + c];
    }
    long long at(int a, int b, int c) const {
        return k[(static_cast<size_t>(a) * n + b) * n + c];
    }
};

// All involutions of {0..n-1} fixing 0.
void involutions_rec(int n, int next, std::vector<int>& cur, std::vector<std::vector<int>>& out) {
    while (next < n && cur[next] != -1) ++next;
    if (next == n) {
        out.push_back(cur);
        return;
    }
    cur[next] = next;
    involutions_rec(n, next + 1, cur, out);
    cur[next] = -1;
    for (int j = next + 1; j < n; ++j) {
        if (cur[j] != -1) continue;
        cur[next] = j;
        cur[j] = next;
        involutions_rec(n, next + 1, cur, out);
        cur[next] = -1;
        cur[j] = -1;
    }
}

std::vector<std::vector<int>> involutions_fixing_unit(int n) {
    std::vector<int> cur(n, -1);
    cur[0] = 0;
    std::vector<std::vector<int>> out;
    involutions_rec(n, 1, cur, out);
    return out;
}

// Nonnegative solutions of sum_{c=1..n-1} k_c * roots[c] = target.
void row_solutions_rec(const std::vector<long long>& roots, int c, long long remaining,
                       std::vector<long long>& cur, std::vector<std::vector<long long>>& out) {
    const int n = static_cast<int>(roots.size());
    if (c == n) {
        if (remaining == 0) out.push_back(cur);
        return;
    }
    if (c == n - 1) {
        // Last slot: forced if divisible.
        if (remaining % roots[c] == 0) {
            cur[c - 1] = remaining / roots[c];
            out.push_back(cur);
            cur[c - 1] = 0;
        }
        return;
    }
    for (long long v = 0; v * roots[c] <= remaining; ++v) {
        cur[c - 1] = v;
        row_solutions_rec(roots, c + 1, remaining - v * roots[c], cur, out);
    }
    cur[c - 1] = 0;
}

std::vector<std::vector<long long>> row_solutions(const std::vector<long long>& roots,
                                                  long long target) {
    std::vector<long long> cur(roots.size() - 1, 0);
    std::vector<std::vector<long long>> out;
    if (roots.size() == 1) {
        if (target == 0) out.push_back(cur);
        return out;
    }
    row_solutions_rec(roots, 1, target, cur, out);
    return out;
}

// Necessary conditions used only for pruning; the full axiom check is the
// arbiter either way.  k[a][b][c^-1] = k[b][c][a^-1] holds on every
// probability group (sizes cancel out of the shuffle identity), and
// k[a][b][a] = k[b][a][a] whenever a is self-inverse.
bool lemma_filters(const Candidate& cd) {
    const int n = cd.n;
    for (int a = 0; a < n; ++a)
        for (int b = 0; b < n; ++b)
            for (int c = 0; c < n; ++c)
                if (cd.at(a, b, cd.inv[c]) != cd.at(b, c, cd.inv[a])) return false;
    for (int a = 0; a < n; ++a) {
        if (cd.inv[a] != a) continue;
        for (int b = 0; b < n; ++b)
            if (cd.at(a, b, a) != cd.at(b, a, a)) return false;
    }
    return true;
}

ProbabilityGroup to_probgroup(const Candidate& cd) {
    const int n = cd.n;
    std::vector<std::string> names;
    names.reserve(n);
    for (int i = 0; i < n; ++i) names.push_back("x" + std::to_string(i + 1));
    std::vector<Rational> p(static_cast<size_t>(n) * n * n);
    for (int a = 0; a < n; ++a)
        for (int b = 0; b < n; ++b)
            for (int c = 0; c < n; ++c)
                p[(static_cast<size_t>(a) * n + b) * n + c] =
                    Rational(cd.at(a, b, c) * cd.roots[c], cd.roots[a] * cd.roots[b]);
    return ProbabilityGroup::make_exact(std::move(names), 0, cd.inv, std::move(p));
}

// Lexicographic key of the candidate under a relabeling of the non-unit
// elements; the canonical form is the least key over all relabelings.
std::vector<long long> transported_key(const Candidate& cd, const std::vector<int>& sigma) {
    const int n = cd.n;
    std::vector<long long> key;
    key.reserve(n + n + static_cast<size_t>(n) * n * n);
    std::vector<long long> roots2(n);
    std::vector<int> inv2(n);
    for (int a = 0; a < n; ++a) {
        roots2[sigma[a]] = cd.roots[a];
        inv2[sigma[a]] = sigma[cd.inv[a]];
    }
    for (int a = 0; a < n; ++a) key.push_back(roots2[a]);
    for (int a = 0; a < n; ++a) key.push_back(inv2[a]);
    for (int a = 0; a < n; ++a)
        for (int b = 0; b < n; ++b)
            for (int c = 0; c < n; ++c) {
                // transported k'(sigma a, sigma b, sigma c) = k(a,b,c); read
                // in lex order of the *new* labels.
                key.push_back(0);
            }
    for (int a = 0; a < n; ++a)
        for (int b = 0; b < n; ++b)
            for (int c = 0; c < n; ++c)
                key[2 * n + (static_cast<size_t>(sigma[a]) * n + sigma[b]) * n + sigma[c]] =
                    cd.at(a, b, c);
    return key;
}

std::vector<long long> canonical_key(const Candidate& cd) {
    const int n = cd.n;
    std::vector<int> perm(n);
    std::iota(perm.begin(), perm.end(), 0);
    std::vector<int> rest(perm.begin() + 1, perm.end());
    std::vector<long long> best;
    std::sort(rest.begin(), rest.end());
    do {
        std::vector<int> sigma(n);
        sigma[0] = 0;
        for (int t = 0; t < n - 1; ++t) sigma[t + 1] = rest[t];
        auto key = transported_key(cd, sigma);
        if (best.empty() || key < best) best = key;
    } while (std::next_permutation(rest.begin(), rest.end()));
    return best;
}

Candidate candidate_from_key(int n, const std::vector<long long>& key) {
    Candidate cd;
    cd.n = n;
    cd.roots.assign(key.begin(), key.begin() + n);
    cd.inv.resize(n);
    for (int a = 0; a < n; ++a) cd.inv[a] = static_cast<int>(key[n + a]);
    cd.k.assign(key.begin() + 2 * n, key.end());
    return cd;
}

}  // namespace

ClassifyResult classify_2integral(const ClassifyOptions& opt) {
    const int n = opt.order;
    if (n < 2 || n > 4)
        throw std::domain_error("classify: order must be 2 or 3 (4 is experimental)");
    if (opt.max_size < 1) throw std::domain_error("classify: max_size must be positive");

    ClassifyResult res;
    std::set<std::vector<long long>> seen;

    for (const auto& inv : involutions_fixing_unit(n)) {
        // Size roots: one choice per inverse-orbit of non-unit elements.
        std::vector<int> orbit_rep;
        for (int a = 1; a < n; ++a)
            if (inv[a] >= a) orbit_rep.push_back(a);

        std::vector<long long> roots(n, 1);
        // Odometer over the orbit representatives.
        std::vector<long long> pick(orbit_rep.size(), 1);
        bool done = orbit_rep.empty() ? false : false;
        bool first = true;
        while (true) {
            if (!first) {
                size_t t = 0;
                while (t < pick.size() && pick[t] == opt.max_size) {
                    pick[t] = 1;
                    ++t;
                }
                if (t == pick.size()) break;
                ++pick[t];
            }
            first = false;
            for (size_t t = 0; t < orbit_rep.size(); ++t) {
                roots[orbit_rep[t]] = pick[t];
                roots[inv[orbit_rep[t]]] = pick[t];
            }

            // Coprimality of the two roots is a proven necessary condition
            // at order 3 when both non-unit elements are self-inverse.
            if (opt.prune && n == 3 && inv[1] == 1 && inv[2] == 2 &&
                std::gcd(roots[1], roots[2]) != 1) {
                if (orbit_rep.empty()) break;
                continue;
            }

            Candidate cd;
            cd.n = n;
            cd.inv = inv;
            cd.roots = roots;
            cd.k.assign(static_cast<size_t>(n) * n * n, 0);
            // Forced unit rows/columns and the k[a][b][0] = delta_{b,a^-1}
            // layer.
            for (int a = 0; a < n; ++a)
                for (int b = 0; b < n; ++b) {
                    cd.at(0, a, b) = (a == b) ? 1 : 0;
                    cd.at(a, 0, b) = (a == b) ? 1 : 0;
                    if (a > 0 && b > 0) cd.at(a, b, 0) = (b == inv[a]) ? 1 : 0;
                }

            // Representative rows: (a,b) with non-unit a,b, paired with the
            // mirror (inv b, inv a) by the antihomomorphism identity.
            std::vector<std::pair<int, int>> reps;
            for (int a = 1; a < n; ++a)
                for (int b = 1; b < n; ++b) {
                    std::pair<int, int> self{a, b}, mirror{inv[b], inv[a]};
                    if (self <= mirror) reps.push_back(self);
                }

            // Depth-first assignment of the free row entries.
            std::vector<std::vector<std::vector<long long>>> options(reps.size());
            for (size_t t = 0; t < reps.size(); ++t) {
                auto [a, b] = reps[t];
                long long target = roots[a] * roots[b] - cd.at(a, b, 0);
                options[t] = row_solutions(roots, target);
            }

            std::vector<size_t> choice(reps.size(), 0);
            size_t depth = 0;
            bool backtrack = false;
            while (true) {
                if (depth == reps.size()) {
                    // Complete tensor.
                    if (++res.candidates > opt.candidate_cap)
                        throw std::runtime_error(
                            "classify: candidate budget exhausted (cap " +
                            std::to_string(opt.candidate_cap) +
                            "); narrow max_size or keep pruning on");
                    if (!opt.prune || lemma_filters(cd)) {
                        ProbabilityGroup g = to_probgroup(cd);
                        if (g.check_axioms().ok()) {
                            auto integ = g.integrality_class(2);
                            if (integ.integral()) {
                                auto key = canonical_key(cd);
                                if (!seen.count(key)) seen.insert(std::move(key));
                            }
                        }
                    }
                    backtrack = true;
                }
                if (backtrack) {
                    if (depth == 0) break;
                    --depth;
                    ++choice[depth];
                    backtrack = false;
                }
                if (depth < reps.size()) {
                    if (choice[depth] >= options[depth].size()) {
                        backtrack = true;
                        if (depth == 0) break;
                        continue;
                    }
                    auto [a, b] = reps[depth];
                    const auto& sol = options[depth][choice[depth]];
                    int ma = inv[b], mb = inv[a];
                    bool self_paired = (ma == a && mb == b);
                    bool consistent = true;
                    if (self_paired) {
                        // Mirror maps the row to itself with c -> inv c.
                        for (int c = 1; c < n && consistent; ++c)
                            if (sol[c - 1] != sol[inv[c] - 1]) consistent = false;
                    }
                    if (!consistent) {
                        ++choice[depth];
                        continue;
                    }
                    for (int c = 1; c < n; ++c) {
                        cd.at(a, b, c) = sol[c - 1];
                        cd.at(ma, mb, inv[c]) = sol[c - 1];
                    }
                    ++depth;
                    if (depth < reps.size()) choice[depth] = 0;
                }
            }

            if (orbit_rep.empty()) break;  // single size vector for this pattern
        }
        (void)done;
    }

    for (const auto& key : seen) {
        Candidate cd = candidate_from_key(n, key);
        res.structures.push_back(to_probgroup(cd));
    }
    return res;
}

}  // namespace probhopf
