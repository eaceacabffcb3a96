// Finite groups given by their full multiplication table, plus the built-in
// catalogue (cyclic, symmetric, alternating, dihedral, quaternion) used by
// the CLI.  Element 0 is always the identity.
#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace probhopf {

class FiniteGroup {
public:
    FiniteGroup() = default;

    // Validates: order <= 200, identity at index 0, Latin-square rows and
    // columns, two-sided inverses, associativity (exhaustive for order <= 64,
    // 10^4 deterministic samples above that).
    static FiniteGroup from_table(std::string name, std::vector<std::vector<int>> table,
                                  std::vector<std::string> element_names = {});

    // Keys: Z1..Z12, S3, S4, A4, D4, D5, Q8 (case-sensitive).
    static FiniteGroup builtin(const std::string& key);
    static std::vector<std::string> builtin_keys();

    int order() const { return n_; }
    int mul(int a, int b) const { return table_[static_cast<size_t>(a) * n_ + b]; }
    int inv(int a) const { return inv_[a]; }
    int identity() const { return 0; }
    bool commute(int a, int b) const { return mul(a, b) == mul(b, a); }
    int element_order(int a) const;

    const std::string& name() const { return name_; }
    const std::string& element_name(int a) const { return elem_names_[a]; }

    // Elements commuting with a, ascending (identity first).
    std::vector<int> centralizer(int a) const;

    // Induced table on a subset that is closed under the product; elements
    // are sorted ascending so the identity stays first.  Throws if the subset
    // is not closed or misses the identity.
    FiniteGroup subgroup(std::vector<int> elements, const std::string& name) const;

    // Text format: "group v1" header, "order n", optional "name i s" lines,
    // then n rows of n 1-based element ids.
    static FiniteGroup parse(std::istream& in);
    static FiniteGroup parse_string(const std::string& text);
    void serialize(std::ostream& out) const;
    std::string serialize_string() const;

    friend bool operator==(const FiniteGroup& a, const FiniteGroup& b) {
        return a.n_ == b.n_ && a.table_ == b.table_ && a.name_ == b.name_ &&
               a.elem_names_ == b.elem_names_;
    }

private:
    void finish_init();  // inverses + validation

    int n_ = 0;
    std::string name_;
    std::vector<int> table_;  // n*n, row-major: table_[a*n+b] = a*b
    std::vector<int> inv_;
    std::vector<std::string> elem_names_;
};

}  // namespace probhopf
