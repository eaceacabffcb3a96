#include "probhopf/probgroup.hpp"

#include <cmath>
#include <istream>
#include <map>
#include <ostream>
#include <set>
#include <sstream>
#include <stdexcept>

namespace probhopf {

namespace {

std::string default_name(int i) { return "x" + std::to_string(i + 1); }

// Witness string "(a=..., b=..., c=...)" built from element names.
std::string triple(const ProbabilityGroup& g, int a, int b, int c) {
    std::ostringstream os;
    os << "(a=" << g.name(a) << ", b=" << g.name(b) << ", c=" << g.name(c) << ")";
    return os.str();
}

// The exact verification core, instantiated with S = long long (all values
// scaled by the common denominator L) and S = Rational (L = 1).  `one` is
// the scaled value of probability 1.
template <class S>
AxiomReport check_exact_core(const ProbabilityGroup& g, const std::vector<S>& p, const S& one) {
    const int n = g.n();
    const int u = g.unit();
    auto at = [&](int a, int b, int c) -> const S& {
        return p[(static_cast<size_t>(a) * n + b) * n + c];
    };
    AxiomReport rep;
    const S zero{};

    {  // nonnegativity
        bool ok = true;
        std::string w;
        for (int a = 0; a < n && ok; ++a)
            for (int b = 0; b < n && ok; ++b)
                for (int c = 0; c < n && ok; ++c)
                    if (at(a, b, c) < zero) { ok = false; w = triple(g, a, b, c); }
        rep.add("nonnegativity", ok, 0.0, w);
    }
    {  // row sums equal 1
        bool ok = true;
        std::string w;
        for (int a = 0; a < n && ok; ++a)
            for (int b = 0; b < n && ok; ++b) {
                S sum{};
                for (int c = 0; c < n; ++c) sum += at(a, b, c);
                if (sum != one) {
                    ok = false;
                    std::ostringstream os;
                    os << "row (" << g.name(a) << ", " << g.name(b) << ") does not sum to 1";
                    w = os.str();
                }
            }
        rep.add("row-sums", ok, 0.0, w);
    }
    {  // associativity: sum_x p(ab=x)p(xc=d) = sum_y p(ay=d)p(bc=y)
        bool ok = true;
        std::string w;
        for (int a = 0; a < n && ok; ++a)
            for (int b = 0; b < n && ok; ++b)
                for (int c = 0; c < n && ok; ++c)
                    for (int d = 0; d < n && ok; ++d) {
                        S lhs{}, rhs{};
                        for (int x = 0; x < n; ++x) lhs += at(a, b, x) * at(x, c, d);
                        for (int y = 0; y < n; ++y) rhs += at(a, y, d) * at(b, c, y);
                        if (lhs != rhs) {
                            ok = false;
                            std::ostringstream os;
                            os << "(a=" << g.name(a) << ", b=" << g.name(b) << ", c="
                               << g.name(c) << ", d=" << g.name(d) << ")";
                            w = os.str();
                        }
                    }
        rep.add("associativity", ok, 0.0, w);
    }
    {  // unit: p(1.a=c) = delta_ac = p(a.1=c)
        bool ok = true;
        std::string w;
        for (int a = 0; a < n && ok; ++a)
            for (int c = 0; c < n && ok; ++c) {
                S want = (a == c) ? one : zero;
                if (at(u, a, c) != want || at(a, u, c) != want) {
                    ok = false;
                    w = "unit law fails at element " + g.name(a);
                }
            }
        rep.add("unit", ok, 0.0, w);
    }
    {  // inverses: p(a.b=1) > 0 exactly when b is the designated inverse
        bool ok = true;
        std::string w;
        for (int a = 0; a < n && ok; ++a) {
            if (g.inverse(g.inverse(a)) != a) {
                ok = false;
                w = "inverse map is not an involution at " + g.name(a);
                break;
            }
            for (int b = 0; b < n; ++b) {
                bool pos = at(a, b, u) > zero;
                if (pos != (b == g.inverse(a))) {
                    ok = false;
                    w = (b == g.inverse(a))
                            ? "p(a.a'=1) = 0 for a = " + g.name(a)
                            : "p(a.b=1) > 0 for non-inverse b: " + triple(g, a, b, u);
                    break;
                }
            }
        }
        rep.add("inverse-existence-uniqueness", ok, 0.0, w);
    }
    {  // antihomomorphism: p(a.b=c) = p(b'.a'=c')
        bool ok = true;
        std::string w;
        for (int a = 0; a < n && ok; ++a)
            for (int b = 0; b < n && ok; ++b)
                for (int c = 0; c < n && ok; ++c)
                    if (at(a, b, c) != at(g.inverse(b), g.inverse(a), g.inverse(c))) {
                        ok = false;
                        w = triple(g, a, b, c);
                    }
        rep.add("antihomomorphism", ok, 0.0, w);
    }
    {  // p(a.a'=1) = p(a'.a=1)
        bool ok = true;
        std::string w;
        for (int a = 0; a < n && ok; ++a)
            if (at(a, g.inverse(a), u) != at(g.inverse(a), a, u)) {
                ok = false;
                w = "element " + g.name(a);
            }
        rep.add("inverse-symmetry", ok, 0.0, w);
    }
    return rep;
}

}  // namespace

ProbabilityGroup ProbabilityGroup::make_exact(std::vector<std::string> names, int unit,
                                              std::vector<int> inverse,
                                              std::vector<Rational> p) {
    ProbabilityGroup g;
    g.n_ = static_cast<int>(names.size());
    g.unit_ = unit;
    g.exact_ = true;
    g.names_ = std::move(names);
    g.inv_ = std::move(inverse);
    g.pq_ = std::move(p);
    g.pd_.resize(g.pq_.size());
    for (size_t i = 0; i < g.pq_.size(); ++i) g.pd_[i] = to_double(g.pq_[i]);
    g.validate_shape();
    return g;
}

ProbabilityGroup ProbabilityGroup::make_float(std::vector<std::string> names, int unit,
                                              std::vector<int> inverse,
                                              std::vector<double> p) {
    ProbabilityGroup g;
    g.n_ = static_cast<int>(names.size());
    g.unit_ = unit;
    g.exact_ = false;
    g.names_ = std::move(names);
    g.inv_ = std::move(inverse);
    g.pd_ = std::move(p);
    g.validate_shape();
    return g;
}

void ProbabilityGroup::validate_shape() const {
    if (n_ <= 0) throw std::domain_error("probability group: needs at least one element");
    if (unit_ < 0 || unit_ >= n_)
        throw std::domain_error("probability group: unit index out of range");
    if (static_cast<int>(inv_.size()) != n_)
        throw std::domain_error("probability group: inverse map has wrong length");
    for (int a = 0; a < n_; ++a)
        if (inv_[a] < 0 || inv_[a] >= n_)
            throw std::domain_error("probability group: inverse index out of range");
    size_t want = static_cast<size_t>(n_) * n_ * n_;
    if (pd_.size() != want || (exact_ && pq_.size() != want))
        throw std::domain_error("probability group: tensor has wrong size");
    for (double v : pd_)
        if (!std::isfinite(v) || v < -1e-12)
            throw std::domain_error("probability group: tensor entries must be finite and >= 0");
}

int ProbabilityGroup::index_of(const std::string& name) const {
    for (int i = 0; i < n_; ++i)
        if (names_[i] == name) return i;
    return -1;
}

AxiomReport ProbabilityGroup::check_axioms(double tol) const {
    if (exact_) {
        // Scale everything to integers over the common denominator when the
        // products stay inside int64; otherwise fall back to rationals.
        Int L = 1;
        for (const auto& q : pq_) L = boost::multiprecision::lcm(L, den(q));
        if (L <= (Int(1) << 26) && n_ <= 1024) {
            long long Lw = L.convert_to<long long>();
            std::vector<long long> scaled(pq_.size());
            for (size_t i = 0; i < pq_.size(); ++i)
                scaled[i] = ((num(pq_[i]) * (L / den(pq_[i]))).convert_to<long long>());
            return check_exact_core<long long>(*this, scaled, Lw);
        }
        return check_exact_core<Rational>(*this, pq_, Rational(1));
    }

    // Float table: same checks against tol.
    AxiomReport rep;
    auto at = [&](int a, int b, int c) { return pd_[idx(a, b, c)]; };
    const int u = unit_;
    {
        double worst = 0.0;
        std::string w;
        for (int a = 0; a < n_; ++a)
            for (int b = 0; b < n_; ++b)
                for (int c = 0; c < n_; ++c)
                    if (-at(a, b, c) > worst) { worst = -at(a, b, c); w = triple(*this, a, b, c); }
        rep.add("nonnegativity", worst <= tol, std::max(0.0, worst), w);
    }
    {
        double worst = 0.0;
        std::string w;
        for (int a = 0; a < n_; ++a)
            for (int b = 0; b < n_; ++b) {
                double sum = 0.0;
                for (int c = 0; c < n_; ++c) sum += at(a, b, c);
                if (std::abs(sum - 1.0) > worst) {
                    worst = std::abs(sum - 1.0);
                    w = "row (" + names_[a] + ", " + names_[b] + ")";
                }
            }
        rep.add("row-sums", worst <= tol, worst, w);
    }
    {
        double worst = 0.0;
        std::string w;
        for (int a = 0; a < n_; ++a)
            for (int b = 0; b < n_; ++b)
                for (int c = 0; c < n_; ++c)
                    for (int d = 0; d < n_; ++d) {
                        double lhs = 0.0, rhs = 0.0;
                        for (int x = 0; x < n_; ++x) lhs += at(a, b, x) * at(x, c, d);
                        for (int y = 0; y < n_; ++y) rhs += at(a, y, d) * at(b, c, y);
                        if (std::abs(lhs - rhs) > worst) {
                            worst = std::abs(lhs - rhs);
                            w = triple(*this, a, b, c) + " d=" + names_[d];
                        }
                    }
        rep.add("associativity", worst <= tol, worst, w);
    }
    {
        double worst = 0.0;
        std::string w;
        for (int a = 0; a < n_; ++a)
            for (int c = 0; c < n_; ++c) {
                double want = (a == c) ? 1.0 : 0.0;
                double dev = std::max(std::abs(at(u, a, c) - want), std::abs(at(a, u, c) - want));
                if (dev > worst) { worst = dev; w = "element " + names_[a]; }
            }
        rep.add("unit", worst <= tol, worst, w);
    }
    {
        bool ok = true;
        double worst = 0.0;
        std::string w;
        for (int a = 0; a < n_ && ok; ++a) {
            if (inv_[inv_[a]] != a) {
                ok = false;
                w = "inverse map is not an involution at " + names_[a];
                break;
            }
            for (int b = 0; b < n_; ++b) {
                double v = at(a, b, u);
                if (b == inv_[a]) {
                    if (v <= tol) { ok = false; w = "p(a.a'=1) ~ 0 for a = " + names_[a]; break; }
                } else if (v > tol) {
                    ok = false;
                    worst = v;
                    w = "p(a.b=1) > 0 for non-inverse b: " + triple(*this, a, b, u);
                    break;
                }
            }
        }
        rep.add("inverse-existence-uniqueness", ok, worst, w);
    }
    {
        double worst = 0.0;
        std::string w;
        for (int a = 0; a < n_; ++a)
            for (int b = 0; b < n_; ++b)
                for (int c = 0; c < n_; ++c) {
                    double dev = std::abs(at(a, b, c) - at(inv_[b], inv_[a], inv_[c]));
                    if (dev > worst) { worst = dev; w = triple(*this, a, b, c); }
                }
        rep.add("antihomomorphism", worst <= tol, worst, w);
    }
    {
        double worst = 0.0;
        std::string w;
        for (int a = 0; a < n_; ++a) {
            double dev = std::abs(at(a, inv_[a], u) - at(inv_[a], a, u));
            if (dev > worst) { worst = dev; w = "element " + names_[a]; }
        }
        rep.add("inverse-symmetry", worst <= tol, worst, w);
    }
    return rep;
}

Rational ProbabilityGroup::size_exact(int a) const {
    if (!exact_) throw std::domain_error("size_exact: group has a float table");
    const Rational& q = pq_[idx(a, inv_[a], unit_)];
    if (q == 0)
        throw std::domain_error("size: p(a.a'=1) = 0 for a = " + names_[a]);
    return Rational(1) / q;
}

double ProbabilityGroup::size(int a) const {
    double q = pd_[idx(a, inv_[a], unit_)];
    if (q <= 0.0)
        throw std::domain_error("size: p(a.a'=1) = 0 for a = " + names_[a]);
    return 1.0 / q;
}

Rational ProbabilityGroup::order_exact() const {
    Rational total = 0;
    for (int a = 0; a < n_; ++a) total += size_exact(a);
    return total;
}

double ProbabilityGroup::order() const {
    double total = 0.0;
    for (int a = 0; a < n_; ++a) total += size(a);
    return total;
}

bool ProbabilityGroup::is_abelian(double tol) const {
    for (int a = 0; a < n_; ++a)
        for (int b = 0; b < a; ++b)
            for (int c = 0; c < n_; ++c) {
                if (exact_) {
                    if (pq_[idx(a, b, c)] != pq_[idx(b, a, c)]) return false;
                } else if (std::abs(pd_[idx(a, b, c)] - pd_[idx(b, a, c)]) > tol) {
                    return false;
                }
            }
    return true;
}

IntegralityResult ProbabilityGroup::integrality_class(int r, double tol,
                                                      long long max_den) const {
    if (r != 1 && r != 2)
        throw std::domain_error("integrality_class: r must be 1 or 2");
    IntegralityResult res;
    res.r = r;

    // Obtain an exact table, snapping floats if needed.
    std::vector<Rational> p;
    if (exact_) {
        p = pq_;
    } else {
        p.resize(pd_.size());
        for (size_t i = 0; i < pd_.size(); ++i) {
            auto q = snap_rational(pd_[i], max_den, std::max(tol, 1e-9) * 10);
            if (!q) {
                res.verdict = IntegralityResult::Verdict::NotCertified;
                std::ostringstream os;
                os << "table entry " << pd_[i] << " does not snap to a rational";
                res.witness = os.str();
                return res;
            }
            p[i] = *q;
        }
    }

    std::vector<Rational> s(n_);
    for (int a = 0; a < n_; ++a) {
        const Rational& q = p[idx(a, inv_[a], unit_)];
        if (q == 0) {
            res.verdict = IntegralityResult::Verdict::Fails;
            res.witness = "p(a.a'=1) = 0 for a = " + names_[a];
            return res;
        }
        s[a] = Rational(1) / q;
    }

    // Weighted-product test.  r=1: p*s(a)*s(b)/s(c) must be a nonnegative
    // integer.  r=2: the value p*sqrt(s(a)s(b)/s(c)) must be one, which holds
    // exactly when p^2*s(a)s(b)/s(c) is a perfect-square integer.
    for (int a = 0; a < n_; ++a)
        for (int b = 0; b < n_; ++b)
            for (int c = 0; c < n_; ++c) {
                const Rational& pv = p[idx(a, b, c)];
                if (pv == 0) continue;
                if (r == 1) {
                    Rational v = pv * s[a] * s[b] / s[c];
                    if (den(v) != 1) {
                        res.verdict = IntegralityResult::Verdict::Fails;
                        res.witness = triple(*this, a, b, c) +
                                      ": p*s(a)*s(b)/s(c) = " + render_rational(v) +
                                      " is not an integer";
                        return res;
                    }
                } else {
                    Rational v = pv * pv * s[a] * s[b] / s[c];
                    bool ok = den(v) == 1 && is_perfect_square(num(v));
                    if (!ok) {
                        res.verdict = IntegralityResult::Verdict::Fails;
                        res.witness = triple(*this, a, b, c) +
                                      ": p^2*s(a)*s(b)/s(c) = " + render_rational(v) +
                                      " is not a perfect-square integer";
                        return res;
                    }
                }
            }

    // Size test.  Quasi-integrality needs s(a)^(1/r) to be an algebraic
    // integer: for rational sizes that means s(a) itself is an integer.
    // Full r-integrality needs s(a)^(1/r) to be a rational integer.
    for (int a = 0; a < n_; ++a)
        if (den(s[a]) != 1) {
            res.verdict = IntegralityResult::Verdict::Fails;
            res.witness = "s(" + names_[a] + ") = " + render_rational(s[a]) +
                          " is not an integer";
            return res;
        }
    bool strict = true;
    std::string strict_witness;
    if (r == 2) {
        for (int a = 0; a < n_; ++a)
            if (!is_perfect_square(num(s[a]))) {
                strict = false;
                strict_witness = "s(" + names_[a] + ") = " + render_rational(s[a]) +
                                 " has no integer square root";
                break;
            }
    }
    res.verdict = strict ? IntegralityResult::Verdict::Integral
                         : IntegralityResult::Verdict::QuasiIntegral;
    res.witness = strict ? "" : strict_witness;
    return res;
}

std::string IntegralityResult::to_string() const {
    std::string base;
    switch (verdict) {
        case Verdict::Integral: base = std::to_string(r) + "-integral"; break;
        case Verdict::QuasiIntegral: base = "quasi-" + std::to_string(r) + "-integral"; break;
        case Verdict::Fails: base = "fails"; break;
        case Verdict::NotCertified: base = "not-certified"; break;
    }
    if (!witness.empty()) base += " [" + witness + "]";
    return base;
}

Distribution ProbabilityGroup::convolve(int a, int b) const {
    Distribution d;
    d.exact = exact_;
    d.coeff.resize(n_);
    for (int c = 0; c < n_; ++c) d.coeff[c] = pd_[idx(a, b, c)];
    if (exact_) {
        d.coeff_q.resize(n_);
        for (int c = 0; c < n_; ++c) d.coeff_q[c] = pq_[idx(a, b, c)];
    }
    return d;
}

// ---------------------------------------------------------------------------
// Text format

namespace {

[[noreturn]] void parse_fail(int line_no, const std::string& msg) {
    throw std::runtime_error("probgroup parse error (line " + std::to_string(line_no) +
                             "): " + msg);
}

}  // namespace

ProbabilityGroup ProbabilityGroup::parse(std::istream& in) {
    std::string line;
    int line_no = 0;
    auto next_line = [&](std::string& out) -> bool {
        while (std::getline(in, line)) {
            ++line_no;
            auto hash = line.find('#');
            if (hash != std::string::npos) line.erase(hash);
            bool blank = line.find_first_not_of(" \t\r") == std::string::npos;
            if (!blank) { out = line; return true; }
        }
        return false;
    };

    std::string header;
    if (!next_line(header)) throw std::runtime_error("probgroup parse error: empty input");
    {
        std::istringstream hs(header);
        std::string kind, version;
        hs >> kind >> version;
        if (kind != "probgroup" || version != "v1")
            parse_fail(line_no, "expected header 'probgroup v1'");
    }

    int n = -1, unit = -1;
    std::vector<std::string> names;
    std::vector<int> inverse;
    std::map<std::tuple<int, int, int>, std::string> entries;
    std::string cur;
    while (next_line(cur)) {
        std::istringstream ls(cur);
        std::string key;
        ls >> key;
        if (key == "elements") {
            if (n >= 0) parse_fail(line_no, "duplicate 'elements'");
            if (!(ls >> n) || n <= 0) parse_fail(line_no, "bad element count");
            names.resize(n);
            for (int i = 0; i < n; ++i) names[i] = default_name(i);
            inverse.assign(n, -1);
        } else if (key == "unit") {
            if (n < 0) parse_fail(line_no, "'unit' before 'elements'");
            int u;
            if (!(ls >> u) || u < 1 || u > n) parse_fail(line_no, "unit index out of range");
            unit = u - 1;
        } else if (key == "name") {
            if (n < 0) parse_fail(line_no, "'name' before 'elements'");
            int i;
            std::string nm;
            if (!(ls >> i >> nm) || i < 1 || i > n) parse_fail(line_no, "bad name line");
            names[i - 1] = nm;
        } else if (key == "inverse") {
            if (n < 0) parse_fail(line_no, "'inverse' before 'elements'");
            int i, j;
            if (!(ls >> i >> j) || i < 1 || i > n || j < 1 || j > n)
                parse_fail(line_no, "bad inverse line");
            if (inverse[i - 1] != -1) parse_fail(line_no, "duplicate inverse for element");
            inverse[i - 1] = j - 1;
        } else if (key == "p") {
            if (n < 0) parse_fail(line_no, "'p' before 'elements'");
            int i, j, k;
            std::string val;
            if (!(ls >> i >> j >> k >> val) || i < 1 || i > n || j < 1 || j > n || k < 1 ||
                k > n)
                parse_fail(line_no, "bad p line");
            auto key3 = std::make_tuple(i - 1, j - 1, k - 1);
            if (entries.count(key3)) parse_fail(line_no, "duplicate p triple");
            entries[key3] = val;
        } else {
            parse_fail(line_no, "unknown keyword '" + key + "'");
        }
    }
    if (n < 0) throw std::runtime_error("probgroup parse error: missing 'elements'");
    if (unit < 0) throw std::runtime_error("probgroup parse error: missing 'unit'");
    for (int i = 0; i < n; ++i)
        if (inverse[i] == -1)
            throw std::runtime_error("probgroup parse error: missing inverse for element " +
                                     std::to_string(i + 1));

    bool any_decimal = false;
    for (const auto& [k3, val] : entries)
        if (is_decimal_token(val)) any_decimal = true;

    size_t total = static_cast<size_t>(n) * n * n;
    if (!any_decimal) {
        std::vector<Rational> p(total, Rational(0));
        for (const auto& [k3, val] : entries) {
            auto q = parse_rational_token(val);
            if (!q || *q < 0)
                throw std::runtime_error("probgroup parse error: bad value '" + val + "'");
            auto [i, j, k] = k3;
            p[(static_cast<size_t>(i) * n + j) * n + k] = *q;
        }
        return make_exact(std::move(names), unit, std::move(inverse), std::move(p));
    }
    std::vector<double> p(total, 0.0);
    for (const auto& [k3, val] : entries) {
        double v;
        try {
            size_t pos = 0;
            v = std::stod(val, &pos);
            if (pos != val.size()) throw std::invalid_argument(val);
        } catch (const std::exception&) {
            // allow "num/den" mixed with decimals
            auto q = parse_rational_token(val);
            if (!q) throw std::runtime_error("probgroup parse error: bad value '" + val + "'");
            v = to_double(*q);
        }
        if (!(v >= 0.0) || !std::isfinite(v))
            throw std::runtime_error("probgroup parse error: bad value '" + val + "'");
        auto [i, j, k] = k3;
        p[(static_cast<size_t>(i) * n + j) * n + k] = v;
    }
    return make_float(std::move(names), unit, std::move(inverse), std::move(p));
}

ProbabilityGroup ProbabilityGroup::parse_string(const std::string& text) {
    std::istringstream in(text);
    return parse(in);
}

void ProbabilityGroup::serialize(std::ostream& out) const {
    out << "probgroup v1\n";
    out << "elements " << n_ << "\n";
    out << "unit " << (unit_ + 1) << "\n";
    for (int i = 0; i < n_; ++i) {
        std::string nm = names_[i];
        for (char& ch : nm)
            if (std::isspace(static_cast<unsigned char>(ch))) ch = '_';
        out << "name " << (i + 1) << " " << nm << "\n";
    }
    for (int i = 0; i < n_; ++i) out << "inverse " << (i + 1) << " " << (inv_[i] + 1) << "\n";
    char buf[40];
    for (int a = 0; a < n_; ++a)
        for (int b = 0; b < n_; ++b)
            for (int c = 0; c < n_; ++c) {
                size_t i = idx(a, b, c);
                if (exact_) {
                    if (pq_[i] == 0) continue;
                    out << "p " << (a + 1) << " " << (b + 1) << " " << (c + 1) << " "
                        << render_rational(pq_[i]) << "\n";
                } else {
                    if (pd_[i] == 0.0) continue;
                    std::snprintf(buf, sizeof buf, "%.17g", pd_[i]);
                    std::string tok(buf);
                    // make sure the token re-parses as a decimal, not an integer
                    if (!is_decimal_token(tok)) tok += ".0";
                    out << "p " << (a + 1) << " " << (b + 1) << " " << (c + 1) << " " << tok
                        << "\n";
                }
            }
}

std::string ProbabilityGroup::serialize_string() const {
    std::ostringstream os;
    serialize(os);
    return os.str();
}

bool operator==(const ProbabilityGroup& a, const ProbabilityGroup& b) {
    if (a.n_ != b.n_ || a.unit_ != b.unit_ || a.exact_ != b.exact_ || a.names_ != b.names_ ||
        a.inv_ != b.inv_)
        return false;
    return a.exact_ ? a.pq_ == b.pq_ : a.pd_ == b.pd_;
}

}  // namespace probhopf
