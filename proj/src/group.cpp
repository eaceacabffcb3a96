#include "probhopf/group.hpp"

#include <algorithm>
#include <istream>
#include <map>
#include <ostream>
#include <random>
#include <sstream>
#include <stdexcept>

namespace probhopf {

namespace {

// Cycle notation for a permutation of {0..k-1}, printed 1-based: "(12)(34)".
std::string cycle_name(const std::vector<int>& perm) {
    const int k = static_cast<int>(perm.size());
    std::vector<bool> seen(k, false);
    std::string out;
    for (int start = 0; start < k; ++start) {
        if (seen[start] || perm[start] == start) continue;
        out += '(';
        int x = start;
        while (!seen[x]) {
            seen[x] = true;
            out += std::to_string(x + 1);
            x = perm[x];
        }
        out += ')';
    }
    return out.empty() ? "e" : out;
}

// All permutations of {0..k-1} in lexicographic order; optionally only even.
std::vector<std::vector<int>> permutations(int k, bool even_only) {
    std::vector<int> base(k);
    for (int i = 0; i < k; ++i) base[i] = i;
    std::vector<std::vector<int>> out;
    do {
        if (even_only) {
            int inversions = 0;
            for (int i = 0; i < k; ++i)
                for (int j = i + 1; j < k; ++j)
                    if (base[i] > base[j]) ++inversions;
            if (inversions % 2) continue;
        }
        out.push_back(base);
    } while (std::next_permutation(base.begin(), base.end()));
    return out;
}

FiniteGroup permutation_group(const std::string& name, int k, bool even_only) {
    auto perms = permutations(k, even_only);
    const int n = static_cast<int>(perms.size());
    std::map<std::vector<int>, int> index;
    for (int i = 0; i < n; ++i) index[perms[i]] = i;
    std::vector<std::vector<int>> table(n, std::vector<int>(n));
    for (int a = 0; a < n; ++a)
        for (int b = 0; b < n; ++b) {
            std::vector<int> prod(k);  // (a*b)(x) = a(b(x)): apply b first
            for (int x = 0; x < k; ++x) prod[x] = perms[a][perms[b][x]];
            table[a][b] = index.at(prod);
        }
    std::vector<std::string> names(n);
    for (int i = 0; i < n; ++i) names[i] = cycle_name(perms[i]);
    return FiniteGroup::from_table(name, std::move(table), std::move(names));
}

FiniteGroup cyclic_group(int m) {
    std::vector<std::vector<int>> table(m, std::vector<int>(m));
    std::vector<std::string> names(m);
    for (int i = 0; i < m; ++i) {
        names[i] = std::to_string(i);
        for (int j = 0; j < m; ++j) table[i][j] = (i + j) % m;
    }
    return FiniteGroup::from_table("Z" + std::to_string(m), std::move(table),
                                   std::move(names));
}

// Dihedral group of order 2m: elements r^i s^j, id = j*m + i, with s r = r^-1 s.
FiniteGroup dihedral_group(int m) {
    const int n = 2 * m;
    std::vector<std::vector<int>> table(n, std::vector<int>(n));
    std::vector<std::string> names(n);
    for (int j = 0; j < 2; ++j)
        for (int i = 0; i < m; ++i) {
            std::string nm = j == 0 ? (i == 0 ? "e" : "r") : (i == 0 ? "s" : "r");
            if (i > 1) nm += std::to_string(i);
            if (j == 1 && i > 0) nm = (i == 1 ? "rs" : "r" + std::to_string(i) + "s");
            names[j * m + i] = nm;
        }
    for (int j = 0; j < 2; ++j)
        for (int i = 0; i < m; ++i)
            for (int l = 0; l < 2; ++l)
                for (int kk = 0; kk < m; ++kk) {
                    int e = j == 0 ? (i + kk) % m : ((i - kk) % m + m) % m;
                    table[j * m + i][l * m + kk] = ((j + l) % 2) * m + e;
                }
    return FiniteGroup::from_table("D" + std::to_string(m), std::move(table),
                                   std::move(names));
}

// Quaternion group {±1, ±i, ±j, ±k}: index = axis*2 + (sign < 0).
FiniteGroup quaternion_group() {
    static const std::string nm[8] = {"1", "-1", "i", "-i", "j", "-j", "k", "-k"};
    // axis multiplication: (axis, axis) -> (axis, sign)
    auto mul_axis = [](int a, int b, int& axis, int& sign) {
        if (a == 0) { axis = b; sign = 1; return; }
        if (b == 0) { axis = a; sign = 1; return; }
        if (a == b) { axis = 0; sign = -1; return; }
        // i*j=k, j*k=i, k*i=j; reversed order flips the sign
        static const int next[4] = {0, 2, 3, 1};
        if (next[a] == b) { axis = next[b]; sign = 1; }
        else { axis = next[a]; sign = -1; }
    };
    std::vector<std::vector<int>> table(8, std::vector<int>(8));
    for (int x = 0; x < 8; ++x)
        for (int y = 0; y < 8; ++y) {
            int axis, sign;
            mul_axis(x / 2, y / 2, axis, sign);
            if (x % 2) sign = -sign;
            if (y % 2) sign = -sign;
            table[x][y] = axis * 2 + (sign < 0 ? 1 : 0);
        }
    return FiniteGroup::from_table("Q8", std::move(table),
                                   std::vector<std::string>(nm, nm + 8));
}

}  // namespace

FiniteGroup FiniteGroup::from_table(std::string name, std::vector<std::vector<int>> table,
                                    std::vector<std::string> element_names) {
    FiniteGroup g;
    g.n_ = static_cast<int>(table.size());
    g.name_ = std::move(name);
    if (g.n_ == 0) throw std::domain_error("group: empty table");
    if (g.n_ > 200) throw std::domain_error("group: order cap is 200");
    g.table_.resize(static_cast<size_t>(g.n_) * g.n_);
    for (int a = 0; a < g.n_; ++a) {
        if (static_cast<int>(table[a].size()) != g.n_)
            throw std::domain_error("group: table is not square");
        for (int b = 0; b < g.n_; ++b) {
            int v = table[a][b];
            if (v < 0 || v >= g.n_) throw std::domain_error("group: table entry out of range");
            g.table_[static_cast<size_t>(a) * g.n_ + b] = v;
        }
    }
    if (element_names.empty()) {
        g.elem_names_.resize(g.n_);
        for (int i = 0; i < g.n_; ++i) g.elem_names_[i] = "g" + std::to_string(i + 1);
    } else {
        if (static_cast<int>(element_names.size()) != g.n_)
            throw std::domain_error("group: element name count mismatch");
        g.elem_names_ = std::move(element_names);
    }
    g.finish_init();
    return g;
}

void FiniteGroup::finish_init() {
    for (int a = 0; a < n_; ++a)
        if (mul(0, a) != a || mul(a, 0) != a)
            throw std::domain_error("group: element 0 is not a two-sided identity");
    // Latin square
    for (int a = 0; a < n_; ++a) {
        std::vector<bool> row(n_, false), col(n_, false);
        for (int b = 0; b < n_; ++b) {
            if (row[mul(a, b)]) throw std::domain_error("group: repeated entry in a row");
            if (col[mul(b, a)]) throw std::domain_error("group: repeated entry in a column");
            row[mul(a, b)] = col[mul(b, a)] = true;
        }
    }
    inv_.assign(n_, -1);
    for (int a = 0; a < n_; ++a)
        for (int b = 0; b < n_; ++b)
            if (mul(a, b) == 0 && mul(b, a) == 0) inv_[a] = b;
    for (int a = 0; a < n_; ++a)
        if (inv_[a] < 0) throw std::domain_error("group: element without two-sided inverse");
    // Associativity: exhaustive when cheap, sampled when the cube is large.
    if (n_ <= 64) {
        for (int a = 0; a < n_; ++a)
            for (int b = 0; b < n_; ++b)
                for (int c = 0; c < n_; ++c)
                    if (mul(mul(a, b), c) != mul(a, mul(b, c)))
                        throw std::domain_error("group: associativity fails at (" +
                                                elem_names_[a] + "," + elem_names_[b] + "," +
                                                elem_names_[c] + ")");
    } else {
        std::mt19937 rng(0);
        std::uniform_int_distribution<int> dist(0, n_ - 1);
        for (int t = 0; t < 10000; ++t) {
            int a = dist(rng), b = dist(rng), c = dist(rng);
            if (mul(mul(a, b), c) != mul(a, mul(b, c)))
                throw std::domain_error("group: associativity fails (sampled)");
        }
    }
}

int FiniteGroup::element_order(int a) const {
    int x = a, k = 1;
    while (x != 0) { x = mul(x, a); ++k; }
    return k;
}

std::vector<int> FiniteGroup::centralizer(int a) const {
    std::vector<int> out;
    for (int g = 0; g < n_; ++g)
        if (commute(g, a)) out.push_back(g);
    return out;
}

FiniteGroup FiniteGroup::subgroup(std::vector<int> elements, const std::string& name) const {
    std::sort(elements.begin(), elements.end());
    elements.erase(std::unique(elements.begin(), elements.end()), elements.end());
    if (elements.empty() || elements[0] != 0)
        throw std::domain_error("subgroup: must contain the identity");
    std::vector<int> local(n_, -1);
    for (size_t i = 0; i < elements.size(); ++i) local[elements[i]] = static_cast<int>(i);
    const int m = static_cast<int>(elements.size());
    std::vector<std::vector<int>> table(m, std::vector<int>(m));
    std::vector<std::string> names(m);
    for (int i = 0; i < m; ++i) {
        names[i] = elem_names_[elements[i]];
        for (int j = 0; j < m; ++j) {
            int prod = mul(elements[i], elements[j]);
            if (local[prod] < 0)
                throw std::domain_error("subgroup: subset is not closed under the product");
            table[i][j] = local[prod];
        }
    }
    return from_table(name, std::move(table), std::move(names));
}

FiniteGroup FiniteGroup::builtin(const std::string& key) {
    if (key.size() >= 2 && key[0] == 'Z') {
        int m = 0;
        try { m = std::stoi(key.substr(1)); } catch (const std::exception&) { m = 0; }
        if (m >= 1 && m <= 12 && key == "Z" + std::to_string(m)) return cyclic_group(m);
    }
    if (key == "S3") return permutation_group("S3", 3, false);
    if (key == "S4") return permutation_group("S4", 4, false);
    if (key == "A4") return permutation_group("A4", 4, true);
    if (key == "D4") return dihedral_group(4);
    if (key == "D5") return dihedral_group(5);
    if (key == "Q8") return quaternion_group();
    throw std::domain_error("unknown builtin group '" + key + "' (known: Z1..Z12, S3, S4, A4, D4, D5, Q8)");
}

std::vector<std::string> FiniteGroup::builtin_keys() {
    std::vector<std::string> keys;
    for (int m = 1; m <= 12; ++m) keys.push_back("Z" + std::to_string(m));
    for (const char* k : {"S3", "S4", "A4", "D4", "D5", "Q8"}) keys.push_back(k);
    return keys;
}

FiniteGroup FiniteGroup::parse(std::istream& in) {
    std::string line;
    int line_no = 0;
    auto next_line = [&](std::string& out) -> bool {
        while (std::getline(in, line)) {
            ++line_no;
            auto hash = line.find('#');
            if (hash != std::string::npos) line.erase(hash);
            if (line.find_first_not_of(" \t\r") != std::string::npos) { out = line; return true; }
        }
        return false;
    };
    auto fail = [&](const std::string& msg) -> void {
        throw std::runtime_error("group parse error (line " + std::to_string(line_no) + "): " +
                                 msg);
    };

    std::string cur;
    if (!next_line(cur)) throw std::runtime_error("group parse error: empty input");
    {
        std::istringstream hs(cur);
        std::string kind, version;
        hs >> kind >> version;
        if (kind != "group" || version != "v1") fail("expected header 'group v1'");
    }
    int n = -1;
    std::vector<std::string> names;
    std::vector<std::vector<int>> rows;
    while (next_line(cur)) {
        std::istringstream ls(cur);
        std::string key;
        ls >> key;
        if (key == "order") {
            if (n >= 0) fail("duplicate 'order'");
            if (!(ls >> n) || n <= 0) fail("bad order");
            names.resize(n);
            for (int i = 0; i < n; ++i) names[i] = "g" + std::to_string(i + 1);
        } else if (key == "name") {
            if (n < 0) fail("'name' before 'order'");
            int i;
            std::string nm;
            if (!(ls >> i >> nm) || i < 1 || i > n) fail("bad name line");
            names[i - 1] = nm;
        } else if (!key.empty() && (std::isdigit(static_cast<unsigned char>(key[0])))) {
            if (n < 0) fail("table row before 'order'");
            std::vector<int> row;
            row.reserve(n);
            std::istringstream rs(cur);
            int v;
            while (rs >> v) {
                if (v < 1 || v > n) fail("table entry out of range");
                row.push_back(v - 1);
            }
            if (static_cast<int>(row.size()) != n) fail("table row has wrong length");
            rows.push_back(std::move(row));
        } else {
            fail("unknown keyword '" + key + "'");
        }
    }
    if (n < 0) throw std::runtime_error("group parse error: missing 'order'");
    if (static_cast<int>(rows.size()) != n)
        throw std::runtime_error("group parse error: expected " + std::to_string(n) +
                                 " table rows, got " + std::to_string(rows.size()));
    return from_table("input", std::move(rows), std::move(names));
}

FiniteGroup FiniteGroup::parse_string(const std::string& text) {
    std::istringstream in(text);
    return parse(in);
}

void FiniteGroup::serialize(std::ostream& out) const {
    out << "group v1\n";
    out << "order " << n_ << "\n";
    for (int i = 0; i < n_; ++i) {
        std::string nm = elem_names_[i];
        for (char& ch : nm)
            if (std::isspace(static_cast<unsigned char>(ch))) ch = '_';
        out << "name " << (i + 1) << " " << nm << "\n";
    }
    for (int a = 0; a < n_; ++a) {
        for (int b = 0; b < n_; ++b) {
            if (b) out << ' ';
            out << (mul(a, b) + 1);
        }
        out << "\n";
    }
}

std::string FiniteGroup::serialize_string() const {
    std::ostringstream os;
    serialize(os);
    return os.str();
}

}  // namespace probhopf
