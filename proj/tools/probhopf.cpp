// probhopf -- command-line front end for the probability-group toolkit.
//
// Subcommands: validate-fusion, probgroup, dual, subgroups, quotient,
// group, double, classify.  Inputs are files in one of the three text
// formats (probgroup v1, fusionring v1, group v1; auto-detected by header)
// or registry handles "builtin:NAME" / "builtin:NAME-charring".
//
// Exit codes: 0 all requested checks pass, 1 a check failed or a
// verification could not be completed, 2 unreadable/malformed input or a
// violated precondition.

#include <complex>
#include <fstream>
#include <iostream>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "probhopf/classdata.hpp"
#include "probhopf/classify.hpp"
#include "probhopf/duality.hpp"
#include "probhopf/fusion.hpp"
#include "probhopf/group.hpp"
#include "probhopf/probgroup.hpp"
#include "probhopf/qdouble.hpp"
#include "probhopf/rational.hpp"
#include "probhopf/report.hpp"

namespace {

using namespace probhopf;

struct Config {
    double tol = 1e-9;
    long long max_den = 1000000;
    unsigned seed = 0;
    std::string format = "table";  // or "json-lines"

    bool json() const { return format == "json-lines"; }
};

std::string fmt12(double x) {
    char buf[64];
    std::snprintf(buf, sizeof(buf), "%.12g", x);
    return buf;
}

std::string json_escape(const std::string& s) {
    std::string out;
    out.reserve(s.size() + 8);
    for (char c : s) {
        switch (c) {
            case '"': out += "\\\""; break;
            case '\\': out += "\\\\"; break;
            case '\n': out += "\\n"; break;
            case '\t': out += "\\t"; break;
            default:
                if (static_cast<unsigned char>(c) < 0x20) {
                    char buf[8];
                    std::snprintf(buf, sizeof(buf), "\\u%04x", c);
                    out += buf;
                } else {
                    out += c;
                }
        }
    }
    return out;
}

// One line per check.  Table mode is for humans; json-lines mode emits one
// object per check and suppresses the surrounding payload.
void emit_checks(const CheckReport& rep, const Config& cfg) {
    for (const auto& c : rep.checks) {
        if (cfg.json()) {
            std::cout << "{\"name\":\"" << json_escape(c.name) << "\",\"status\":\""
                      << (c.pass ? "pass" : "fail") << "\",\"residual\":" << fmt12(c.residual);
            if (!c.detail.empty()) std::cout << ",\"witness\":\"" << json_escape(c.detail) << "\"";
            std::cout << "}" << std::endl;
        } else {
            std::cout << "check " << c.name << ": " << (c.pass ? "pass" : "FAIL")
                      << " (residual " << fmt12(c.residual) << ")";
            if (!c.detail.empty()) std::cout << " -- " << c.detail;
            std::cout << std::endl;
        }
    }
}

void payload(const Config& cfg, const std::string& line) {
    if (!cfg.json()) std::cout << line << std::endl;
}

std::string pad_left(const std::string& s, size_t w) {
    return s.size() >= w ? s : std::string(w - s.size(), ' ') + s;
}

std::string pad_right(const std::string& s, size_t w) {
    return s.size() >= w ? s : s + std::string(w - s.size(), ' ');
}

// Rows x cols of already-rendered cells; first column is the row label.
void print_table(const std::vector<std::string>& col_heads,
                 const std::vector<std::string>& row_heads,
                 const std::vector<std::vector<std::string>>& cells) {
    size_t label_w = 0;
    for (const auto& r : row_heads) label_w = std::max(label_w, r.size());
    std::vector<size_t> w(col_heads.size());
    for (size_t j = 0; j < col_heads.size(); ++j) {
        w[j] = col_heads[j].size();
        for (const auto& row : cells) w[j] = std::max(w[j], row[j].size());
    }
    std::cout << pad_right("", label_w);
    for (size_t j = 0; j < col_heads.size(); ++j) std::cout << "  " << pad_left(col_heads[j], w[j]);
    std::cout << std::endl;
    for (size_t i = 0; i < cells.size(); ++i) {
        std::cout << pad_right(row_heads[i], label_w);
        for (size_t j = 0; j < col_heads.size(); ++j)
            std::cout << "  " << pad_left(cells[i][j], w[j]);
        std::cout << std::endl;
    }
}

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw std::runtime_error("parse error: cannot open '" + path + "'");
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

// First non-blank, non-comment line (trimmed): the format header.
std::string sniff_header(const std::string& text) {
    std::istringstream in(text);
    std::string line;
    while (std::getline(in, line)) {
        size_t b = line.find_first_not_of(" \t\r");
        if (b == std::string::npos) continue;
        size_t e = line.find_last_not_of(" \t\r");
        std::string t = line.substr(b, e - b + 1);
        if (t.empty() || t[0] == '#') continue;
        return t;
    }
    return {};
}

constexpr const char* kBuiltinPrefix = "builtin:";

bool is_builtin(const std::string& spec) { return spec.rfind(kBuiltinPrefix, 0) == 0; }

// "builtin:S3-charring" -> {"S3", charring=true}; "builtin:S3" -> {"S3", false}.
std::pair<std::string, bool> split_builtin(const std::string& spec) {
    std::string key = spec.substr(std::string(kBuiltinPrefix).size());
    const std::string suffix = "-charring";
    if (key.size() > suffix.size() && key.compare(key.size() - suffix.size(), suffix.size(), suffix) == 0)
        return {key.substr(0, key.size() - suffix.size()), true};
    return {key, false};
}

FiniteGroup load_group(const std::string& spec) {
    if (is_builtin(spec)) {
        auto [key, charring] = split_builtin(spec);
        if (charring)
            throw std::domain_error("'" + spec + "' is a fusion ring, not a group");
        return FiniteGroup::builtin(key);
    }
    std::string text = read_file(spec);
    std::string head = sniff_header(text);
    if (head.rfind("group", 0) != 0)
        throw std::runtime_error("parse error: '" + spec + "' is not a 'group v1' file (header '" +
                                 head + "')");
    return FiniteGroup::parse_string(text);
}

FusionRing load_fusion(const std::string& spec, const Config& cfg) {
    if (is_builtin(spec)) {
        auto [key, charring] = split_builtin(spec);
        FiniteGroup G = FiniteGroup::builtin(key);
        if (charring)
            return fusion_from_characters(class_data(G, cfg.tol, cfg.seed, cfg.max_den));
        return fusion_from_group_table(G);
    }
    std::string text = read_file(spec);
    std::string head = sniff_header(text);
    if (head.rfind("fusionring", 0) == 0) return FusionRing::parse_string(text);
    if (head.rfind("group", 0) == 0)
        return fusion_from_group_table(FiniteGroup::parse_string(text));
    throw std::runtime_error("parse error: '" + spec +
                             "' is neither a 'fusionring v1' nor a 'group v1' file (header '" +
                             head + "')");
}

ProbabilityGroup load_probgroup(const std::string& spec, const Config& cfg) {
    if (is_builtin(spec)) return load_fusion(spec, cfg).to_probgroup(cfg.tol);
    std::string text = read_file(spec);
    std::string head = sniff_header(text);
    if (head.rfind("probgroup", 0) == 0) return ProbabilityGroup::parse_string(text);
    if (head.rfind("fusionring", 0) == 0)
        return FusionRing::parse_string(text).to_probgroup(cfg.tol);
    if (head.rfind("group", 0) == 0)
        return fusion_from_group_table(FiniteGroup::parse_string(text)).to_probgroup(cfg.tol);
    throw std::runtime_error("parse error: '" + spec + "' has unknown header '" + head + "'");
}

std::string render_size(const ProbabilityGroup& P, int a) {
    return P.exact() ? render_rational(P.size_exact(a)) : fmt12(P.size(a));
}

std::string render_order(const ProbabilityGroup& P) {
    return P.exact() ? render_rational(P.order_exact()) : fmt12(P.order());
}

// ---------------------------------------------------------------- commands

int cmd_validate_fusion(const std::string& input, const Config& cfg) {
    FusionRing F = load_fusion(input, cfg);
    payload(cfg, "fusion ring: rank " + std::to_string(F.rank()));
    CheckReport rep = F.validate();
    if (rep.ok()) {
        try {
            FPDims fd = F.fpdims(cfg.tol);
            std::ostringstream os;
            os << "FPdims:";
            for (int i = 0; i < F.rank(); ++i) {
                os << " " << F.name(i) << "=";
                if (fd.integral)
                    os << fd.dims_int[i];
                else
                    os << fmt12(fd.dims[i]);
            }
            os << "  (sum of squares " << fmt12(fd.total)
               << (fd.integral ? ", integral)" : ", non-integral)");
            payload(cfg, os.str());
            rep.add("fpdims", true, fd.residual);
        } catch (const std::domain_error& e) {
            rep.add("fpdims", false, 0.0, e.what());
        }
    }
    emit_checks(rep, cfg);
    return rep.ok() ? 0 : 1;
}

int cmd_probgroup(const std::string& input, const Config& cfg) {
    ProbabilityGroup P = load_probgroup(input, cfg);
    payload(cfg, "probability group: " + std::to_string(P.n()) + " elements (" +
                     (P.exact() ? "exact" : "float") + " mode)");
    {
        std::ostringstream os;
        os << "sizes:";
        for (int a = 0; a < P.n(); ++a) os << " s(" << P.name(a) << ")=" << render_size(P, a);
        payload(cfg, os.str());
    }
    payload(cfg, "order n(A) = " + render_order(P));
    payload(cfg, std::string("abelian: ") + (P.is_abelian(cfg.tol) ? "yes" : "no"));
    payload(cfg, "integrality r=1: " + P.integrality_class(1, cfg.tol, cfg.max_den).to_string());
    payload(cfg, "integrality r=2: " + P.integrality_class(2, cfg.tol, cfg.max_den).to_string());
    CheckReport rep = P.check_axioms(cfg.tol);
    emit_checks(rep, cfg);
    return rep.ok() ? 0 : 1;
}

int cmd_dual(const std::string& input, const Config& cfg) {
    ProbabilityGroup P = load_probgroup(input, cfg);
    CheckReport ax = P.check_axioms(cfg.tol);
    if (!ax.ok()) {
        emit_checks(ax, cfg);
        return 1;
    }
    DualProbabilityGroup D = dual(P, cfg.tol, cfg.seed, cfg.max_den);

    if (!cfg.json()) {
        std::vector<std::string> cols(P.names());
        std::vector<std::string> rows(D.names);
        std::vector<std::vector<std::string>> cells(D.n, std::vector<std::string>(P.n()));
        for (int j = 0; j < D.n; ++j)
            for (int a = 0; a < P.n(); ++a)
                cells[j][a] = D.values_exact
                                  ? render_gaussian(D.values_q[static_cast<size_t>(j) * P.n() + a])
                                  : render_complex(D.values(j, a));
        print_table(cols, rows, cells);
        std::ostringstream os;
        os << "dual sizes:";
        for (int j = 0; j < D.n; ++j) {
            os << " shat(" << D.names[j] << ")=";
            os << (D.shat_exact ? render_rational(D.shat_q[j]) : fmt12(D.shat[j]));
        }
        payload(cfg, os.str());
        payload(cfg, std::string("dualizable: ") + (D.dualizable ? "yes" : "no") +
                         " (min Re phat = " + fmt12(D.min_phat) + ")");
    }

    CheckReport rep;
    double fr_scale = cfg.tol * std::max(1.0, P.order());
    rep.add("functional-identity", D.functional_residual <= fr_scale, D.functional_residual);
    rep.add("dualizable", D.dualizable, std::max(0.0, -D.min_phat),
            D.dualizable ? "" : "a dual structure constant is negative");
    rep.merge(dual_orthogonality(P, D, cfg.tol));
    if (D.dualizable) {
        CheckReport dax = dual_probgroup(D).check_axioms(cfg.tol);
        for (auto& c : dax.checks) c.name = "dual:" + c.name;
        rep.merge(dax);
    }
    emit_checks(rep, cfg);
    return rep.ok() ? 0 : 1;
}

int cmd_subgroups(const std::string& input, const Config& cfg) {
    ProbabilityGroup P = load_probgroup(input, cfg);
    CheckReport ax = P.check_axioms(cfg.tol);
    if (!ax.ok()) {
        emit_checks(ax, cfg);
        return 1;
    }
    bool exhaustive = false;
    auto subs = find_subgroups(P, &exhaustive);
    std::cout << subs.size() << " probability subgroups found ("
              << (exhaustive ? "exhaustive" : "seeded closures only") << ")" << std::endl;
    for (const auto& S : subs) {
        std::string line = "{";
        for (size_t i = 0; i < S.size(); ++i) {
            if (i) line += ", ";
            line += P.name(S[i]);
        }
        line += "}";
        std::cout << line << std::endl;
    }
    return 0;
}

std::vector<int> parse_members(const ProbabilityGroup& P, const std::string& csv) {
    std::vector<int> ids;
    std::string tok;
    std::istringstream in(csv);
    while (std::getline(in, tok, ',')) {
        size_t b = tok.find_first_not_of(" \t");
        if (b == std::string::npos) continue;
        size_t e = tok.find_last_not_of(" \t");
        tok = tok.substr(b, e - b + 1);
        int id = P.index_of(tok);
        if (id < 0 && !tok.empty() && tok.find_first_not_of("0123456789") == std::string::npos) {
            int k = std::stoi(tok);  // 1-based element id
            if (k >= 1 && k <= P.n()) id = k - 1;
        }
        if (id < 0) throw std::domain_error("unknown element '" + tok + "'");
        ids.push_back(id);
    }
    std::sort(ids.begin(), ids.end());
    ids.erase(std::unique(ids.begin(), ids.end()), ids.end());
    if (ids.empty()) throw std::domain_error("empty subgroup member list");
    return ids;
}

int cmd_quotient(const std::string& input, const std::string& members, const Config& cfg) {
    ProbabilityGroup P = load_probgroup(input, cfg);
    CheckReport ax = P.check_axioms(cfg.tol);
    if (!ax.ok()) {
        emit_checks(ax, cfg);
        return 1;
    }
    std::vector<int> S = parse_members(P, members);
    CheckReport rep;
    if (!is_subgroup(P, S)) {
        std::string names = "{";
        for (size_t i = 0; i < S.size(); ++i) names += (i ? ", " : "") + P.name(S[i]);
        names += "}";
        rep.add("subgroup", false, 0.0,
                names + " is not a probability subgroup (needs the unit, closure under "
                        "inverses and under positive-probability products)");
        emit_checks(rep, cfg);
        return 1;
    }
    rep.add("subgroup", true);
    ProbabilityGroup Q = quotient(P, S, cfg.tol);
    if (!cfg.json()) std::cout << Q.serialize_string();

    // n(S) * n(A//S) = n(A); n(S) sums the sizes of the members inside A.
    if (P.exact() && Q.exact()) {
        Rational nS(0);
        for (int a : S) nS += P.size_exact(a);
        Rational lhs = nS * Q.order_exact();
        bool pass = lhs == P.order_exact();
        rep.add("order-multiplicativity", pass, 0.0,
                pass ? "" : "n(S)*n(A//S) = " + render_rational(lhs) + " but n(A) = " +
                                render_rational(P.order_exact()));
    } else {
        double nS = 0;
        for (int a : S) nS += P.size(a);
        double res = std::abs(nS * Q.order() - P.order());
        rep.add("order-multiplicativity", res <= cfg.tol * std::max(1.0, P.order()), res);
    }
    CheckReport qax = Q.check_axioms(cfg.tol);
    for (auto& c : qax.checks) c.name = "quotient:" + c.name;
    rep.merge(qax);
    emit_checks(rep, cfg);
    return rep.ok() ? 0 : 1;
}

int cmd_group(const std::string& mode, const std::string& input, const Config& cfg) {
    FiniteGroup G = load_group(input);
    ClassData cd = class_data(G, cfg.tol, cfg.seed, cfg.max_den);
    bool info = mode == "info" || mode == "all";
    bool ortho = mode == "ortho" || mode == "all";
    bool fusion = mode == "fusion" || mode == "all";

    if (info && !cfg.json()) {
        std::cout << "group '" << G.name() << "': order " << G.order() << ", " << cd.m
                  << " conjugacy classes (" << (cd.exact ? "exact" : "float")
                  << " character table)" << std::endl;
        std::ostringstream cs;
        cs << "classes:";
        for (int i = 0; i < cd.m; ++i)
            cs << " " << cd.class_name(i) << " size " << cd.class_size(i)
               << (i + 1 < cd.m ? "," : "");
        payload(cfg, cs.str());
        std::ostringstream ds;
        ds << "degrees:";
        for (int a = 0; a < cd.m; ++a) ds << " " << cd.degrees[a];
        payload(cfg, ds.str());
        std::vector<std::string> cols, rows;
        for (int i = 0; i < cd.m; ++i) cols.push_back(cd.class_name(i));
        std::vector<std::vector<std::string>> cells(cd.m, std::vector<std::string>(cd.m));
        for (int a = 0; a < cd.m; ++a) {
            rows.push_back("chi" + std::to_string(a + 1));
            for (int i = 0; i < cd.m; ++i)
                cells[a][i] = cd.exact ? render_gaussian(cd.char_q(a, i))
                                       : render_complex(cd.chars(a, i));
        }
        print_table(cols, rows, cells);
    }

    CheckReport rep;
    if (ortho) {
        rep.merge(orthogonality_check(cd, cfg.tol));
        rep.merge(verify_factorizations(cd, cfg.tol));
    }
    if (fusion) {
        try {
            auto nm = character_multiplicities(cd);
            auto fe = fusion_from_E(cd);
            size_t bad = nm.size();
            for (size_t t = 0; t < nm.size(); ++t)
                if (fe[t] != nm[t]) {
                    bad = t;
                    break;
                }
            rep.add("fusion-from-E", bad == nm.size(), 0.0,
                    bad == nm.size() ? ""
                                     : "tensor mismatch at flat index " + std::to_string(bad));
            auto ce = classsums_from_E(cd);
            bad = ce.size();
            for (size_t t = 0; t < ce.size(); ++t)
                if (ce[t] != cd.counts[t]) {
                    bad = t;
                    break;
                }
            rep.add("classsums-from-E", bad == ce.size(), 0.0,
                    bad == ce.size() ? ""
                                     : "tensor mismatch at flat index " + std::to_string(bad));
            if (!cfg.json() && fusion && mode != "all") {
                std::cout << fusion_from_characters(cd).serialize_string();
            }
        } catch (const std::domain_error& e) {
            rep.add("fusion-reconstruction", false, 0.0, e.what());
        }
    }
    emit_checks(rep, cfg);
    return rep.ok() ? 0 : 1;
}

int cmd_double(const std::string& input, const std::string& which, const Config& cfg) {
    FiniteGroup G = load_group(input);
    DoubleData dd = build_double(G, cfg.tol, cfg.seed);
    long long total = 0;
    for (long long d : dd.dims) total += d * d;
    payload(cfg, "double of '" + G.name() + "': " + std::to_string(dd.r) +
                     " simples, sum of dims^2 = " + std::to_string(total));
    if (!cfg.json()) {
        std::ostringstream os;
        os << "dims:";
        for (int i = 0; i < dd.r; ++i) os << " " << dd.simples[i].name << "=" << dd.dims[i];
        payload(cfg, os.str());
    }

    bool all = which == "all";
    CheckReport rep;
    if (all || which == "symmetry") rep.merge(check_E_symmetry(dd, cfg.tol));
    if (all || which == "ortho") rep.merge(orthogonality_double(dd, cfg.tol));
    if (all || which == "dual-iso") rep.merge(check_dual_iso(dd, cfg.tol, cfg.seed));
    if (all || which == "integrality") rep.merge(classsum_integrality(dd));
    if (all || which == "restriction") {
        RestrictionResult rr = restriction_and_Ai(dd);
        if (!cfg.json()) {
            for (int i = 0; i < dd.cdG.m; ++i) {
                std::string line = "A_" + dd.cdG.class_name(i) + " = {";
                for (size_t t = 0; t < rr.A_sets[i].size(); ++t) {
                    if (t) line += ", ";
                    line += dd.simples[rr.A_sets[i][t]].name;
                }
                payload(cfg, line + "}");
            }
        }
        rep.merge(rr.report);
    }
    emit_checks(rep, cfg);
    return rep.ok() ? 0 : 1;
}

int cmd_classify(int order, long long max_size, bool no_prune, int experimental_order,
                 const Config& cfg) {
    ClassifyOptions opt;
    opt.order = experimental_order > 0 ? experimental_order : order;
    opt.max_size = max_size;
    opt.prune = !no_prune;
    ClassifyResult res = classify_2integral(opt);
    std::cout << res.structures.size() << " structure"
              << (res.structures.size() == 1 ? "" : "s") << " found" << std::endl;
    payload(cfg, "(candidate tensors examined: " + std::to_string(res.candidates) + ")");
    for (const auto& P : res.structures) {
        std::cout << std::endl;
        std::cout << P.serialize_string();
    }
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    Config cfg;
    CLI::App app{"probability groups, fusion rings, character tables, doubles"};
    app.require_subcommand(1);
    app.add_option("--tol", cfg.tol, "numerical tolerance for residual checks")
        ->capture_default_str();
    app.add_option("--max-den", cfg.max_den, "largest denominator for rational snapping")
        ->capture_default_str();
    app.add_option("--seed", cfg.seed, "seed for the randomized eigenbasis separation")
        ->capture_default_str();
    app.add_option("--format", cfg.format, "output format")
        ->check(CLI::IsMember({"table", "json-lines"}))
        ->capture_default_str();

    std::string in_vf, in_pg, in_dual, in_sub, in_quot, quot_members, in_group, in_double;
    std::string group_mode, double_check = "all";
    int cl_order = 3, cl_exp = 0;
    long long cl_max_size = 12;
    bool cl_no_prune = false;

    auto* vf = app.add_subcommand("validate-fusion", "check the fusion-ring axioms, then FPdims");
    vf->add_option("input", in_vf, "fusionring/group file or builtin:NAME[-charring]")
        ->required();

    auto* pg = app.add_subcommand("probgroup", "axioms, sizes, order, integrality of a probability group");
    pg->add_option("input", in_pg, "probgroup/fusionring/group file or builtin:NAME[-charring]")
        ->required();

    auto* du = app.add_subcommand("dual", "functional table and dual structure of an abelian probability group");
    du->add_option("input", in_dual, "probgroup input (file or builtin)")->required();

    auto* sg = app.add_subcommand("subgroups", "list all probability subgroups");
    sg->add_option("input", in_sub, "probgroup input (file or builtin)")->required();

    auto* qt = app.add_subcommand("quotient", "quotient by a probability subgroup");
    qt->add_option("input", in_quot, "probgroup input (file or builtin)")->required();
    qt->add_option("members", quot_members,
                   "comma-separated subgroup members (names or 1-based ids)")
        ->required();

    auto* gr = app.add_subcommand("group", "conjugacy classes, character table, and verifications");
    gr->add_option("mode", group_mode, "info | ortho | fusion | all")
        ->required()
        ->check(CLI::IsMember({"info", "ortho", "fusion", "all"}));
    gr->add_option("input", in_group, "group file or builtin:NAME")->required();

    auto* db = app.add_subcommand("double", "modular data of the Drinfeld double of a group");
    db->add_option("input", in_double, "group file or builtin:NAME")->required();
    db->add_option("--check", double_check, "which verification suite to run")
        ->check(CLI::IsMember({"all", "symmetry", "ortho", "dual-iso", "integrality", "restriction"}))
        ->capture_default_str();

    auto* cl = app.add_subcommand("classify", "enumerate 2-integral probability groups of small order");
    cl->add_option("--order", cl_order, "number of elements")
        ->check(CLI::IsMember({2, 3}))
        ->capture_default_str();
    cl->add_option("--max-size", cl_max_size, "bound on the integer size roots")
        ->capture_default_str();
    cl->add_flag("--no-prune", cl_no_prune, "disable the fast necessary-condition filters");
    cl->add_option("--experimental-order", cl_exp,
                   "search an unsupported order (slow; no completeness claim)");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    try {
        if (*vf) return cmd_validate_fusion(in_vf, cfg);
        if (*pg) return cmd_probgroup(in_pg, cfg);
        if (*du) return cmd_dual(in_dual, cfg);
        if (*sg) return cmd_subgroups(in_sub, cfg);
        if (*qt) return cmd_quotient(in_quot, quot_members, cfg);
        if (*gr) return cmd_group(group_mode, in_group, cfg);
        if (*db) return cmd_double(in_double, double_check, cfg);
        if (*cl) return cmd_classify(cl_order, cl_max_size, cl_no_prune, cl_exp, cfg);
    } catch (const std::domain_error& e) {
        std::cerr << "input error: " << e.what() << std::endl;
        return 2;
    } catch (const std::runtime_error& e) {
        std::cerr << "error: " << e.what() << std::endl;
        return std::string(e.what()).find("parse error") != std::string::npos ? 2 : 1;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << std::endl;
        return 2;
    }
    return 2;
}
