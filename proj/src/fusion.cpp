#include "probhopf/fusion.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <sstream>
#include <stdexcept>

#include "probhopf/exactmath.hpp"

namespace probhopf {

namespace {

std::string default_basis_name(int i) { return "X" + std::to_string(i + 1); }

[[noreturn]] void parse_fail(int line_no, const std::string& msg) {
    throw std::runtime_error("fusionring parse error (line " + std::to_string(line_no) +
                             "): " + msg);
}

}  // namespace

FusionRing FusionRing::make(std::vector<std::string> names, std::vector<int> dual,
                            std::vector<long long> N) {
    FusionRing f;
    f.m_ = static_cast<int>(names.size());
    if (f.m_ <= 0) throw std::domain_error("fusion ring: empty basis");
    if (dual.size() != names.size())
        throw std::domain_error("fusion ring: dual map has wrong length");
    for (int d : dual)
        if (d < 0 || d >= f.m_) throw std::domain_error("fusion ring: dual index out of range");
    if (N.size() != static_cast<size_t>(f.m_) * f.m_ * f.m_)
        throw std::domain_error("fusion ring: tensor has wrong size");
    f.names_ = std::move(names);
    f.dual_ = std::move(dual);
    f.N_ = std::move(N);
    return f;
}

CheckReport FusionRing::validate() const {
    CheckReport rep;
    const int m = m_;
    auto pos = [](int i) { return std::to_string(i + 1); };

    {
        bool ok = true;
        std::string w;
        for (size_t t = 0; t < N_.size() && ok; ++t)
            if (N_[t] < 0) {
                ok = false;
                int k = static_cast<int>(t % m), j = static_cast<int>((t / m) % m),
                    i = static_cast<int>(t / m / m);
                w = "N[" + pos(i) + "][" + pos(j) + "][" + pos(k) + "] = " +
                    std::to_string(N_[t]) + " is negative";
            }
        rep.add("nonnegativity", ok, 0.0, w);
    }
    {
        bool ok = true;
        std::string w;
        for (int i = 0; i < m && ok; ++i)
            if (dual_[dual_[i]] != i) {
                ok = false;
                w = "dual map is not an involution at " + pos(i);
            }
        rep.add("dual-involution", ok, 0.0, w);
    }
    {
        bool ok = true;
        std::string w;
        for (int j = 0; j < m && ok; ++j)
            for (int k = 0; k < m && ok; ++k) {
                if (N(0, j, k) != (j == k ? 1 : 0)) {
                    ok = false;
                    w = "left unit fails: N[1][" + pos(j) + "][" + pos(k) + "] = " +
                        std::to_string(N(0, j, k));
                } else if (N(j, 0, k) != (j == k ? 1 : 0)) {
                    ok = false;
                    w = "right unit fails: N[" + pos(j) + "][1][" + pos(k) + "] = " +
                        std::to_string(N(j, 0, k));
                }
            }
        rep.add("unit", ok, 0.0, w);
    }
    {
        bool ok = true;
        std::string w;
        for (int i = 0; i < m && ok; ++i)
            for (int j = 0; j < m && ok; ++j) {
                long long expect = (j == dual_[i]) ? 1 : 0;
                if (N(i, j, 0) != expect) {
                    ok = false;
                    w = "duality axiom at (" + pos(i) + "," + pos(j) + "): N[" + pos(i) + "][" +
                        pos(j) + "][1] = " + std::to_string(N(i, j, 0)) + ", expected " +
                        std::to_string(expect);
                }
            }
        rep.add("duality", ok, 0.0, w);
    }
    {
        bool ok = true;
        std::string w;
        for (int i = 0; i < m && ok; ++i)
            for (int j = 0; j < m && ok; ++j)
                for (int k = 0; k < m && ok; ++k)
                    if (N(i, j, k) != N(dual_[j], dual_[i], dual_[k])) {
                        ok = false;
                        w = "N[" + pos(i) + "][" + pos(j) + "][" + pos(k) +
                            "] != N at the dual triple";
                    }
        rep.add("dual-symmetry", ok, 0.0, w);
    }
    {
        bool ok = true;
        std::string w;
        for (int i = 0; i < m && ok; ++i)
            for (int j = 0; j < m && ok; ++j)
                for (int k = 0; k < m && ok; ++k)
                    for (int l = 0; l < m && ok; ++l) {
                        long long lhs = 0, rhs = 0;
                        for (int x = 0; x < m; ++x) lhs += N(i, j, x) * N(x, k, l);
                        for (int y = 0; y < m; ++y) rhs += N(i, y, l) * N(j, k, y);
                        if (lhs != rhs) {
                            ok = false;
                            w = "associativity fails at (" + pos(i) + "," + pos(j) + "," +
                                pos(k) + "," + pos(l) + "): " + std::to_string(lhs) + " vs " +
                                std::to_string(rhs);
                        }
                    }
        rep.add("associativity", ok, 0.0, w);
    }
    return rep;
}

FPDims FusionRing::fpdims(double tol) const {
    const int m = m_;
    FPDims out;
    out.dims.resize(m);
    for (int i = 0; i < m; ++i) {
        RMatrix M(m, m);
        for (int j = 0; j < m; ++j)
            for (int k = 0; k < m; ++k) M(k, j) = static_cast<double>(N(i, j, k));
        out.dims[i] = perron_root(M, tol).value;
    }
    if (std::abs(out.dims[0] - 1.0) > 1e-6)
        throw std::domain_error("fpdims: unit dimension is " + std::to_string(out.dims[0]) +
                                ", expected 1");

    double worst = 0.0;
    for (int i = 0; i < m; ++i) {
        worst = std::max(worst, std::abs(out.dims[i] - out.dims[dual_[i]]));
        for (int j = 0; j < m; ++j) {
            double s = 0.0;
            for (int k = 0; k < m; ++k) s += static_cast<double>(N(i, j, k)) * out.dims[k];
            worst = std::max(worst, std::abs(s - out.dims[i] * out.dims[j]));
        }
    }
    out.residual = worst;
    double scale = 1.0;
    for (double d : out.dims) scale = std::max(scale, d * d);
    if (worst > 1e-6 * scale)
        throw std::domain_error(
            "fpdims: dimension vector fails the homomorphism identity (residual " +
            std::to_string(worst) + ")");

    out.integral = true;
    out.dims_int.resize(m);
    for (int i = 0; i < m; ++i) {
        auto s = snap_integer(out.dims[i], 1e-6 * std::max(1.0, out.dims[i]));
        if (!s || *s < 1) {
            out.integral = false;
            out.dims_int.clear();
            break;
        }
        out.dims_int[i] = *s;
    }
    for (int i = 0; i < m && out.integral; ++i) out.total += static_cast<double>(out.dims_int[i] * out.dims_int[i]);
    if (!out.integral)
        for (int i = 0; i < m; ++i) out.total += out.dims[i] * out.dims[i];
    return out;
}

ProbabilityGroup FusionRing::to_probgroup(double tol) const {
    const int m = m_;
    FPDims d = fpdims(tol);
    if (d.integral) {
        std::vector<Rational> p(static_cast<size_t>(m) * m * m);
        for (int i = 0; i < m; ++i)
            for (int j = 0; j < m; ++j)
                for (int k = 0; k < m; ++k)
                    p[at(i, j, k)] = Rational(N(i, j, k) * d.dims_int[k],
                                              d.dims_int[i] * d.dims_int[j]);
        return ProbabilityGroup::make_exact(names_, 0, dual_, std::move(p));
    }
    std::vector<double> p(static_cast<size_t>(m) * m * m);
    for (int i = 0; i < m; ++i)
        for (int j = 0; j < m; ++j)
            for (int k = 0; k < m; ++k)
                p[at(i, j, k)] =
                    static_cast<double>(N(i, j, k)) * d.dims[k] / (d.dims[i] * d.dims[j]);
    return ProbabilityGroup::make_float(names_, 0, dual_, std::move(p));
}

FusionRing fusion_from_group_table(const FiniteGroup& G) {
    const int n = G.order();
    std::vector<std::string> names;
    names.reserve(n);
    std::vector<int> dual(n);
    for (int a = 0; a < n; ++a) {
        names.push_back(G.element_name(a));
        dual[a] = G.inv(a);
    }
    std::vector<long long> N(static_cast<size_t>(n) * n * n, 0);
    for (int a = 0; a < n; ++a)
        for (int b = 0; b < n; ++b)
            N[(static_cast<size_t>(a) * n + b) * n + G.mul(a, b)] = 1;
    return FusionRing::make(std::move(names), std::move(dual), std::move(N));
}

FusionRing fusion_from_characters(const ClassData& cd, double snap_tol) {
    const int m = cd.m;
    std::vector<long long> N = character_multiplicities(cd, snap_tol);

    // Dual of a character row is its complex conjugate row.
    std::vector<int> dual(m, -1);
    for (int a = 0; a < m; ++a) {
        for (int b = 0; b < m; ++b) {
            bool match = true;
            for (int i = 0; i < m && match; ++i) {
                if (cd.exact)
                    match = cd.char_q(b, i) == cd.char_q(a, i).conj();
                else
                    match = std::abs(cd.chars(b, i) - std::conj(cd.chars(a, i))) <= 1e-6;
            }
            if (match) {
                dual[a] = b;
                break;
            }
        }
        if (dual[a] < 0)
            throw std::domain_error("character ring: no conjugate row for character " +
                                    std::to_string(a + 1));
    }

    std::vector<std::string> names;
    names.reserve(m);
    for (int a = 0; a < m; ++a) names.push_back("chi" + std::to_string(a + 1));
    return FusionRing::make(std::move(names), std::move(dual), std::move(N));
}

// ---------------------------------------------------------------------------
// Text format

FusionRing FusionRing::parse(std::istream& in) {
    std::string line;
    int line_no = 0;
    auto next_line = [&](std::string& out) -> bool {
        while (std::getline(in, line)) {
            ++line_no;
            auto hash = line.find('#');
            if (hash != std::string::npos) line.erase(hash);
            bool blank = line.find_first_not_of(" \t\r") == std::string::npos;
            if (!blank) {
                out = line;
                return true;
            }
        }
        return false;
    };

    std::string header;
    if (!next_line(header)) throw std::runtime_error("fusionring parse error: empty input");
    {
        std::istringstream hs(header);
        std::string kind, version;
        hs >> kind >> version;
        if (kind != "fusionring" || version != "v1")
            parse_fail(line_no, "expected header 'fusionring v1'");
    }

    int m = -1;
    bool saw_unit = false;
    std::vector<std::string> names;
    std::vector<int> dual;
    std::vector<bool> dual_seen;
    std::map<std::tuple<int, int, int>, long long> entries;
    std::string cur;
    while (next_line(cur)) {
        std::istringstream ls(cur);
        std::string key;
        ls >> key;
        if (key == "rank") {
            if (m >= 0) parse_fail(line_no, "duplicate 'rank'");
            if (!(ls >> m) || m <= 0) parse_fail(line_no, "bad rank");
            names.resize(m);
            for (int i = 0; i < m; ++i) names[i] = default_basis_name(i);
            dual.assign(m, -1);
            dual_seen.assign(m, false);
            dual[0] = 0;  // the unit is always self-dual
        } else if (key == "unit") {
            if (m < 0) parse_fail(line_no, "'unit' before 'rank'");
            int u;
            if (!(ls >> u)) parse_fail(line_no, "bad unit line");
            if (u != 1) parse_fail(line_no, "unit must be index 1");
            saw_unit = true;
        } else if (key == "name") {
            if (m < 0) parse_fail(line_no, "'name' before 'rank'");
            int i;
            std::string nm;
            if (!(ls >> i >> nm) || i < 1 || i > m) parse_fail(line_no, "bad name line");
            names[i - 1] = nm;
        } else if (key == "dual") {
            if (m < 0) parse_fail(line_no, "'dual' before 'rank'");
            int i, j;
            if (!(ls >> i >> j) || i < 1 || i > m || j < 1 || j > m)
                parse_fail(line_no, "bad dual line");
            if (dual_seen[i - 1]) parse_fail(line_no, "duplicate dual for element");
            dual_seen[i - 1] = true;
            dual[i - 1] = j - 1;
        } else if (key == "N") {
            if (m < 0) parse_fail(line_no, "'N' before 'rank'");
            int i, j, k;
            long long v;
            if (!(ls >> i >> j >> k >> v) || i < 1 || i > m || j < 1 || j > m || k < 1 ||
                k > m)
                parse_fail(line_no, "bad N line");
            auto key3 = std::make_tuple(i - 1, j - 1, k - 1);
            if (entries.count(key3)) parse_fail(line_no, "duplicate N triple");
            entries[key3] = v;
        } else {
            parse_fail(line_no, "unknown keyword '" + key + "'");
        }
    }
    if (m < 0) throw std::runtime_error("fusionring parse error: missing 'rank'");
    if (!saw_unit) throw std::runtime_error("fusionring parse error: missing 'unit'");
    for (int i = 0; i < m; ++i)
        if (dual[i] < 0)
            throw std::runtime_error("fusionring parse error: missing dual for element " +
                                     std::to_string(i + 1));

    std::vector<long long> N(static_cast<size_t>(m) * m * m, 0);
    for (const auto& [k3, v] : entries) {
        auto [i, j, k] = k3;
        N[(static_cast<size_t>(i) * m + j) * m + k] = v;
    }
    return make(std::move(names), std::move(dual), std::move(N));
}

FusionRing FusionRing::parse_string(const std::string& text) {
    std::istringstream in(text);
    return parse(in);
}

void FusionRing::serialize(std::ostream& out) const {
    out << "fusionring v1\n";
    out << "rank " << m_ << "\n";
    out << "unit 1\n";
    for (int i = 0; i < m_; ++i) {
        std::string nm = names_[i];
        for (char& ch : nm)
            if (std::isspace(static_cast<unsigned char>(ch))) ch = '_';
        out << "name " << (i + 1) << " " << nm << "\n";
    }
    for (int i = 0; i < m_; ++i) out << "dual " << (i + 1) << " " << (dual_[i] + 1) << "\n";
    for (int i = 0; i < m_; ++i)
        for (int j = 0; j < m_; ++j)
            for (int k = 0; k < m_; ++k)
                if (N(i, j, k) != 0)
                    out << "N " << (i + 1) << " " << (j + 1) << " " << (k + 1) << " "
                        << N(i, j, k) << "\n";
}

std::string FusionRing::serialize_string() const {
    std::ostringstream os;
    serialize(os);
    return os.str();
}

}  // namespace probhopf
