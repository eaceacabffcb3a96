// Fusion rings: a unit-first basis with nonnegative integer structure
// constants N[i][j][k], a duality involution, Frobenius-Perron dimensions,
// and the induced probability group p(i.j=k) = N[i][j][k] d_k / (d_i d_j).
#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include "probhopf/classdata.hpp"
#include "probhopf/group.hpp"
#include "probhopf/probgroup.hpp"
#include "probhopf/report.hpp"

namespace probhopf {

struct FPDims {
    std::vector<double> dims;         // Perron root of each left-multiplication matrix
    std::vector<long long> dims_int;  // populated when every dim snaps to an integer
    bool integral = false;
    double total = 0.0;               // sum of dims^2
    double residual = 0.0;            // worst |d_i d_j - sum_k N d_k| and |d_i - d_i*|
};

class FusionRing {
public:
    FusionRing() = default;

    // N is the flattened m^3 tensor, index ((i*m)+j)*m+k ~ coefficient of
    // basis element k in the product i.j.  The unit is always index 0.
    // Checks shape only (sizes, dual indices in range); the axioms
    // themselves are validate()'s job so that bad tensors can be reported
    // as check failures rather than construction errors.
    static FusionRing make(std::vector<std::string> names, std::vector<int> dual,
                           std::vector<long long> N);

    int rank() const { return m_; }
    int unit() const { return 0; }
    int dual(int i) const { return dual_[i]; }
    long long N(int i, int j, int k) const { return N_[at(i, j, k)]; }
    const std::string& name(int i) const { return names_[i]; }
    const std::vector<std::string>& names() const { return names_; }

    // Checks, exhaustively: nonnegativity, dual involution, unit laws,
    // N[i][j][unit] = delta_{j,i*}, N[i][j][k] = N[j*][i*][k*], and
    // associativity of the structure constants.
    CheckReport validate() const;

    // d_i = Perron root of M_i(k,j) = N[i][j][k]; validates d_unit = 1,
    // the homomorphism identity and d_i = d_i* within tol.
    FPDims fpdims(double tol = 1e-9) const;

    // p(i.j=k) = N[i][j][k] d_k / (d_i d_j): exact rationals when the dims
    // are integers, float mode otherwise.  Sizes come out as d_i^2.
    ProbabilityGroup to_probgroup(double tol = 1e-9) const;

    // Text format: "fusionring v1" header, "rank m", "unit 1", optional
    // "name i s" lines, "dual i j" lines, sparse "N i j k v" lines
    // (1-based indices; omitted entries are zero).
    static FusionRing parse(std::istream& in);
    static FusionRing parse_string(const std::string& text);
    void serialize(std::ostream& out) const;
    std::string serialize_string() const;

    friend bool operator==(const FusionRing& a, const FusionRing& b) {
        return a.m_ == b.m_ && a.dual_ == b.dual_ && a.N_ == b.N_ && a.names_ == b.names_;
    }

private:
    size_t at(int i, int j, int k) const {
        return (static_cast<size_t>(i) * m_ + j) * m_ + k;
    }

    int m_ = 0;
    std::vector<std::string> names_;
    std::vector<int> dual_;
    std::vector<long long> N_;
};

// The group ring as a fusion ring: N[a][b][c] = 1 iff ab = c.
FusionRing fusion_from_group_table(const FiniteGroup& G);

// The character ring: N from tensor-product multiplicities, duals from
// complex conjugation of rows.  Basis names are chi1..chim (trivial first,
// matching the class-data ordering).
FusionRing fusion_from_characters(const ClassData& cd, double snap_tol = 1e-6);

}  // namespace probhopf
