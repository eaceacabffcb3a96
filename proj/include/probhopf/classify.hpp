// Exhaustive enumeration of 2-integral probability groups of small order.
// The integrality condition turns the continuum search into a finite one:
// writing s(a) = n_a^2 with integer n_a and p(a.b=c) = k[a][b][c] n_c /
// (n_a n_b) with k a nonnegative integer tensor, the row-sum axiom becomes
// the diophantine identity sum_c k[a][b][c] n_c = n_a n_b.  We enumerate
// inverse patterns, size roots n_a <= max_size, and all integer tensors k,
// filter by the full exact axiom check, and deduplicate up to relabeling of
// the non-unit elements.
#pragma once

#include <vector>

#include "probhopf/probgroup.hpp"

namespace probhopf {

struct ClassifyOptions {
    int order = 3;            // 2 or 3; 4 is experimental (slow, no completeness claim)
    long long max_size = 12;  // bound on the size roots n_a (so sizes up to max_size^2)
    bool prune = true;        // fast necessary-condition filters (conservative)
    long long candidate_cap = 100000000;  // abort guard on complete tensors examined
};

struct ClassifyResult {
    std::vector<ProbabilityGroup> structures;  // canonical representatives, sorted
    long long candidates = 0;                  // complete tensors examined
};

// Throws std::runtime_error when candidate_cap is exhausted and
// std::domain_error on unsupported options.  Every returned structure passes
// check_axioms exactly and integrality_class(2) with verdict Integral.
ClassifyResult classify_2integral(const ClassifyOptions& opt);

}  // namespace probhopf
