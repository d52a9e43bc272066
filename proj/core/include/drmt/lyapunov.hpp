#pragma once

#include <optional>
#include <utility>
#include <vector>

#include "drmt/ensembles.hpp"
#include "drmt/projective.hpp"
#include "drmt/stats.hpp"

namespace drmt {

enum class MatrixNorm { Euclidean, Frobenius };

struct NormGrowthOptions {
    std::uint64_t burnin = 0;
    /// Accumulate the log norm every `renorm_interval` steps (the estimate is
    /// invariant under this choice; it exists to demonstrate that).
    int renorm_interval = 1;
    std::optional<ProjectivePoint> start;
};

/// Per-step growth rate (1/n) sum ln |A_j u_j| along one renormalized orbit,
/// with a batch-means standard error. Throws NumericalError if the orbit
/// degenerates (|A u| zero or non-finite).
Estimate gamma_norm_growth(const EnsembleSpec& spec, std::uint64_t n, RandomStream rng,
                           const NormGrowthOptions& opts = {});

/// Growth rate of the product norm |A_n ... A_1| itself under the chosen
/// matrix norm (used for norm-equivalence checks).
Estimate gamma_product_norm(const EnsembleSpec& spec, std::uint64_t n, RandomStream rng,
                            MatrixNorm norm = MatrixNorm::Frobenius);

/// Stationary-average form: fresh matrix draws paired with directions from
/// the projective chain after burn-in. Warns (via trapped flag) when the
/// chain's empirical support has fewer than 3 atoms.
struct FurstenbergResult {
    Estimate estimate;
    bool trapped_orbit_warning = false;
};
FurstenbergResult gamma_furstenberg(const EnsembleSpec& spec, std::uint64_t burnin, std::uint64_t n,
                                    RandomStream rng,
                                    std::optional<ProjectivePoint> start = std::nullopt);

/// Bounded heuristic for strong irreducibility of a finitely supported
/// matrix distribution: enumerate fixed points of short words, then try to
/// close candidate sets under the generators.
struct IrreducibilityVerdict {
    enum class Tag { Irreducible, FiniteInvariantSet, Inconclusive };
    Tag tag = Tag::Inconclusive;
    std::vector<ProjectivePoint> witness; // invariant set when tag == FiniteInvariantSet
};
IrreducibilityVerdict strong_irreducibility(const std::vector<std::pair<Matrix2, double>>& support,
                                            int depth = 4, std::size_t cap = 64);

/// Finite support with weights for the irreducibility checker.
std::vector<std::pair<Matrix2, double>> finite_support(const EnsembleSpec& spec);

} // namespace drmt
