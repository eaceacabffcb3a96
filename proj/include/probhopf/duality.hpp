// Duals of abelian probability groups: the multiplicative functionals
// (computed as common-eigenvalue rows of the left convolution matrices),
// the dual tensor phat expressing pointwise products back in the functional
// basis, dual sizes, orthogonality, probability subgroups, annihilators,
// and quotient groups.
#pragma once

#include <string>
#include <vector>

#include "probhopf/exactmath.hpp"
#include "probhopf/probgroup.hpp"
#include "probhopf/rational.hpp"
#include "probhopf/report.hpp"

namespace probhopf {

struct DualProbabilityGroup {
    int n = 0;                               // functional count = |A|
    std::vector<std::string> names;          // f1..fn, aug first
    CMatrix values;                          // (j, a) = f_j(a); row 0 is all ones
    bool values_exact = false;               // every value snapped to a+bi rational
    std::vector<GaussianRational> values_q;  // n*n row-major when values_exact

    // phat[((a*n)+b)*n+c] = coefficient of f_c in the pointwise product
    // f_a * f_b (the dual probability tensor).
    std::vector<std::complex<double>> phat;
    bool phat_exact = false;
    std::vector<Rational> phat_q;  // when phat_exact

    std::vector<int> dual_of;      // j -> index of a -> f_j(a^-1)
    std::vector<double> shat;      // 1 / phat_aug(j, j*)
    bool shat_exact = false;
    std::vector<Rational> shat_q;

    bool dualizable = false;   // every phat value real and >= -tol
    double min_phat = 0.0;     // most negative real part seen
    double functional_residual = 0.0;  // worst |f(a)f(b) - sum_c p(a,b,c) f(c)|
    unsigned seed_used = 0;

    std::complex<double> phat_at(int a, int b, int c) const {
        return phat[(static_cast<size_t>(a) * n + b) * n + c];
    }
};

// Requires A abelian (hard error otherwise) and semisimple convolution
// algebra: the n left-convolution matrices L_a(c,b) = p(a.b=c) commute, and
// their joint eigenvalue columns are exactly the multiplicative functionals.
// Functionals are ordered augmentation (all-ones) first, then by
// lexicographic snapped value vectors.  Throws std::domain_error when two
// functionals coincide ("dual smaller than |A|").
DualProbabilityGroup dual(const ProbabilityGroup& A, double tol = 1e-9, unsigned seed = 0,
                          long long max_den = 1000000);

// The dual as a probability group on the functionals (unit = augmentation,
// inverse = dual_of).  Exact when the phat tensor snapped to rationals.
// Throws if the dual is not dualizable (negative structure constants).
ProbabilityGroup dual_probgroup(const DualProbabilityGroup& D);

// Residuals of the two orthogonality relations
//   sum_a s(a) shat(x) x(a) y(a^-1) = n(A) delta_xy
//   sum_x shat(x) s(b) x(a) x(b^-1) = n(A) delta_ab
// plus sum_x shat(x) = n(A).
CheckReport dual_orthogonality(const ProbabilityGroup& A, const DualProbabilityGroup& D,
                               double tol = 1e-9);

// All probability subgroups: subsets containing the unit, closed under
// inverses and under positive-probability products.  Exhaustive over all
// subsets for n <= 12; for larger groups only closures of the sets
// {1}, {1,a,a^-1} and {1,a,a^-1,b,b^-1} are explored and *exhaustive is set
// false.  Sorted by (size, elements); {unit} first, the full set last.
std::vector<std::vector<int>> find_subgroups(const ProbabilityGroup& A,
                                             bool* exhaustive = nullptr);

// True when S (sorted element ids) is a probability subgroup of A.
bool is_subgroup(const ProbabilityGroup& A, const std::vector<int>& S);

// Quotient of an abelian A by a verified subgroup S: classes of the relation
// a ~ b iff p(a.s1=x) > 0 and p(x.b^-1=s2) > 0 for some s1, s2 in S, with
// P([a].[b]=[c]) = sum_{c' in [c]} p(a.b=c').  Representative independence
// is verified across every pair of representatives (exact in rational mode);
// violations throw.  Class of the unit first, then by least member; class
// names are "[least-member-name]".
ProbabilityGroup quotient(const ProbabilityGroup& A, const std::vector<int>& S,
                          double tol = 1e-9);

// Indices j with |f_j(s) - 1| <= tol for every s in S.
std::vector<int> annihilator(const std::vector<int>& S, const DualProbabilityGroup& D,
                             double tol = 1e-6);

}  // namespace probhopf
