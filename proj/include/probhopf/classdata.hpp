// Conjugacy-class data for a finite group: the exact class-product counting
// tensor, the character table (computed by simultaneous diagonalization of
// the class multiplication matrices, Burnside/Dixon style), the normalized
// value matrix E and its inverse, and the verification routines built on top.
#pragma once

#include <vector>

#include "probhopf/exactmath.hpp"
#include "probhopf/group.hpp"
#include "probhopf/probgroup.hpp"
#include "probhopf/rational.hpp"
#include "probhopf/report.hpp"

namespace probhopf {

struct ClassData {
    FiniteGroup G;
    int m = 0;                              // number of conjugacy classes
    std::vector<std::vector<int>> classes;  // identity class first, then by least member
    std::vector<int> class_of;              // element -> class index
    std::vector<int> rep;                   // class -> least member
    std::vector<int> dual_class;            // class of the inverses, i -> i*
    std::vector<long long> counts;          // m^3: #{(x,y) in C_i x C_j : xy = z}, z in C_k

    CMatrix chars;                          // (alpha, i) = chi_alpha(g_i)
    std::vector<long long> degrees;         // chi_alpha(1), trivial character first
    CMatrix E;                              // (i, alpha) = chi_alpha(g_i)/chi_alpha(1)
    CMatrix Einv;                           // numeric inverse of E
    bool exact = false;                     // true when every value snapped to a+bi rational
    std::vector<GaussianRational> chars_q;  // m*m, row-major (alpha, i); exact mode only
    unsigned seed_used = 0;

    long long count(int i, int j, int k) const {
        return counts[(static_cast<size_t>(i) * m + j) * m + k];
    }
    int class_size(int i) const { return static_cast<int>(classes[i].size()); }
    std::string class_name(int i) const { return "[" + G.element_name(rep[i]) + "]"; }
    const GaussianRational& char_q(int alpha, int i) const {
        return chars_q[static_cast<size_t>(alpha) * m + i];
    }
};

// Computes everything above.  Degrees are recovered from the joint spectrum
// of the class multiplication matrices via |G| = deg^2 * sum_i |w_i|^2/|C_i|
// and snapped to integers; character values are chi(g_i) = w_i * deg / |C_i|.
// Rows are ordered trivial character first, then by (degree, lexicographic
// snapped values).  Throws std::domain_error when a degree fails its integer
// snap or the eigenbasis cannot be separated.
ClassData class_data(const FiniteGroup& G, double tol = 1e-9, unsigned seed = 0,
                     long long max_den = 1000000);

// Tensor-product multiplicities N_ij^k of the irreducible characters,
// computed from the table by inner products:
//   N_ij^k = (1/|G|) sum_l |C_l| chi_i(g_l) chi_j(g_l) conj(chi_k(g_l)).
// Exact value-by-value when the table is exact, floats snapped at snap_tol
// otherwise.  Throws if a multiplicity is not a nonnegative integer.
std::vector<long long> character_multiplicities(const ClassData& cd, double snap_tol = 1e-6);

// Diagonalization identities for the two multiplication actions:
//   E * B_i = D^i * E       (B_i = left mult. by chi_i/deg_i on characters,
//                            D^i = diag of column i of E)
//   E^T * Bhat_i = Dhat^i * E^T  (Bhat_i = left mult. by the normalized class
//                            sum c_i, Dhat^i = diag of row i of E).
// B_i is built from character multiplicities, Bhat_i from the exact counting
// tensor, so both sides come from independent data.
CheckReport verify_factorizations(const ClassData& cd, double tol = 1e-9);

// Orthogonality, all four forms:
//  column form   sum_i deg_a^2 |C_i| E(i,a) E(i*,b) = |G| delta_ab
//  row form      sum_a deg_a^2 |C_i| E(i,a) E(j*,a) = |G| delta_ij
//  element form  sum_g chi_a(g) chi_b(g^-1)         = |G| delta_ab
//  inverse check E*Einv = I and the closed form
//                Einv(a,i) = deg_a^2 E(i*,a) |C_i| / |G|.
CheckReport orthogonality_check(const ClassData& cd, double tol = 1e-9);

// Fusion multiplicities reconstructed from E alone:
//   N_ij^k = deg_i deg_j deg_k/|G| * sum_l |C_l| E(l,i) E(l,j) E(l*,k),
// snapped to nonnegative integers (throws on snap failure).
std::vector<long long> fusion_from_E(const ClassData& cd, double snap_tol = 1e-6);

// Class-sum structure constants reconstructed from E alone:
//   Nhat_ij^k = |C_i||C_j|/|G| * sum_l deg_l^2 E(i,l) E(j,l) E(k*,l),
// snapped to nonnegative integers (throws on snap failure).  Equals the
// exact counting tensor for a correct table.
std::vector<long long> classsums_from_E(const ClassData& cd, double snap_tol = 1e-6);

// The normalized class sums as an exact probability group:
//   p_k(i,j) = count(i,j,k) * |C_k| / (|C_i||C_j|).
ProbabilityGroup class_probgroup(const ClassData& cd);

}  // namespace probhopf
