// Finite probability groups: a finite set with a probabilistic multiplication
// p(a.b = c), a unit, and unique inverses.  The table is kept exact (rational)
// whenever the source data is exact; float tables are supported as a fallback
// for constructions with irrational dimensions and are checked within tol.
#pragma once

#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "probhopf/rational.hpp"
#include "probhopf/report.hpp"

namespace probhopf {

using AxiomReport = CheckReport;

struct IntegralityResult {
    enum class Verdict { Integral, QuasiIntegral, Fails, NotCertified };
    Verdict verdict = Verdict::NotCertified;
    int r = 0;
    std::string witness;

    bool integral() const { return verdict == Verdict::Integral; }
    std::string to_string() const;
};

// Result of convolving two elements: the distribution over outcomes.
struct Distribution {
    bool exact = false;
    std::vector<Rational> coeff_q;  // populated when exact
    std::vector<double> coeff;      // always populated
};

class ProbabilityGroup {
public:
    ProbabilityGroup() = default;

    // p is the flattened n^3 tensor, index ((a*n)+b)*n+c  ~  p(a.b = c).
    static ProbabilityGroup make_exact(std::vector<std::string> names, int unit,
                                       std::vector<int> inverse, std::vector<Rational> p);
    static ProbabilityGroup make_float(std::vector<std::string> names, int unit,
                                       std::vector<int> inverse, std::vector<double> p);

    int n() const { return n_; }
    int unit() const { return unit_; }
    int inverse(int a) const { return inv_[a]; }
    const std::string& name(int a) const { return names_[a]; }
    const std::vector<std::string>& names() const { return names_; }
    bool exact() const { return exact_; }
    int index_of(const std::string& name) const;  // -1 if absent

    double p(int a, int b, int c) const { return pd_[idx(a, b, c)]; }
    const Rational& p_exact(int a, int b, int c) const { return pq_[idx(a, b, c)]; }

    // Definition checks: nonnegativity, row sums, associativity, unit law,
    // existence/uniqueness of inverses, the antihomomorphism identity
    // p(a.b=c) = p(b'.a'=c') on inverses, and p(a.a'=1) = p(a'.a=1).
    // Exact tables are checked exactly (int64 fast path over the common
    // denominator when it fits, arbitrary precision otherwise).
    AxiomReport check_axioms(double tol = 1e-9) const;

    // s(a) = 1/p(a.a' = 1); throws if that probability vanishes.
    double size(int a) const;
    Rational size_exact(int a) const;
    double order() const;           // sum of sizes
    Rational order_exact() const;

    bool is_abelian(double tol = 1e-9) const;

    // r in {1, 2}: decides whether sizes and the weighted products
    // p(a.b=c) * (s(a)s(b)/s(c))^(1/r) land in the nonnegative integers.
    // For exact tables the verdict is certified either way (a rational
    // s^(1/r) is an algebraic integer exactly when the underlying integer
    // test passes); float tables are snapped first and report
    // "not-certified" when the snap fails.
    IntegralityResult integrality_class(int r, double tol = 1e-9,
                                        long long max_den = 1000000) const;

    Distribution convolve(int a, int b) const;

    // Text format (see README): "probgroup v1" header, element count, unit,
    // names, inverse pairs, sparse nonzero p lines.
    static ProbabilityGroup parse(std::istream& in);
    static ProbabilityGroup parse_string(const std::string& text);
    void serialize(std::ostream& out) const;
    std::string serialize_string() const;

    friend bool operator==(const ProbabilityGroup& a, const ProbabilityGroup& b);

private:
    size_t idx(int a, int b, int c) const {
        return (static_cast<size_t>(a) * n_ + b) * n_ + c;
    }
    void validate_shape() const;

    int n_ = 0;
    int unit_ = 0;
    bool exact_ = true;
    std::vector<std::string> names_;
    std::vector<int> inv_;
    std::vector<Rational> pq_;  // exact mode only
    std::vector<double> pd_;    // always present
};

}  // namespace probhopf
