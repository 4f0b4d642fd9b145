#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "perclab/graph.hpp"
#include "perclab/ratio.hpp"

namespace perclab {

enum class LowerMethod { exact, spectral };

// Certified two-sided bracket on the edge-isoperimetric number
// min_{0<|A|<=n/2} |E(A,A^c)|/|A|. The witness always reproduces
// upper_bound exactly; lower_bound is only ever a sound lower bound,
// so downstream boundary inequalities stay theorems.
struct CheegerCertificate {
    double lower_bound = 0.0;
    std::optional<Ratio> lower_bound_rational;  // present iff lower_method == exact
    LowerMethod lower_method = LowerMethod::spectral;
    Ratio upper_bound;
    std::vector<std::int32_t> witness;  // sorted, 0 < |witness| <= n/2
    bool connected = true;
};

// Exact minimum by subset enumeration with branch-and-bound; ties broken by
// lexicographically smallest witness. Refuses n > exact_limit.
CheegerCertificate cheeger_exact(const Graph& g, std::int32_t exact_limit = 24);

struct SpectralBound {
    double value = 0.0;  // lambda_2 / 2, residual-adjusted downward
    bool connected = true;
};

// lambda_2/2 via power iteration on the shifted Laplacian (2*max_degree+1)*I - L
// with the all-ones direction projected out each step; relative tolerance 1e-8.
// Disconnected graphs report 0 with connected=false.
SpectralBound cheeger_spectral_lower(const Graph& g, double rel_tol = 1e-8);

// Seeded greedy add/remove/swap descent from random subsets; merged across
// restarts by best ratio with restart-order tie-break.
CheegerCertificate cheeger_local_upper(const Graph& g, std::int32_t restarts,
                                       std::uint64_t seed);

// Boundary/size ratio of a subset, recomputed from scratch.
Ratio subset_ratio(const Graph& g, const std::vector<std::int32_t>& subset);

}  // namespace perclab
