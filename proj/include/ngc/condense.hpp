#pragma once

#include <optional>

#include "ngc/modular_data.hpp"

namespace ngc {

std::vector<int> find_invertibles(const ModularData& md, double tol = 1e-6);
/// Self-inverse invertibles (excluding the unit) with twist +1 / -1.
std::vector<int> find_bosons(const ModularData& md, const FusionTensor& N);
std::vector<int> find_fermions(const ModularData& md, const FusionTensor& N);

/// All Y with Stilde_{X,Y} = d_X d_Y for every generator X.
std::vector<int> centralizer(const ModularData& md, const std::vector<int>& gens,
                             double tol = 1e-6);

/// Fusion permutation X -> u (x) X of an invertible u, and its orbit split.
struct OrbitStructure {
    std::vector<int> perm;
    std::vector<int> fixed;
    std::vector<std::pair<int, int>> two_cycles;  // (x, u x) with x < u x
};
OrbitStructure tensor_orbits(const ModularData& md, int u, const FusionTensor& N);

/// Condensed label: a free orbit {X, bX} (type I) or one of the two branches
/// of a fixed point (type II).
struct CondensedLabel {
    int parent = 0;   // parent label index (orbit representative / fixed point)
    int branch = 0;   // 0 = type I, 1 or 2 = type II branch
    bool type_two() const { return branch != 0; }
};

/// Condensed data with S entries that are either concrete or affine in a
/// small set of free complex parameters (unknown slots). Entry (i,j) of
/// Stilde is base(i,j) + coeff(i,j) * theta[param(i,j)].
struct PartialModularData {
    std::vector<CondensedLabel> clabels;
    std::vector<SimpleLabel> labels;
    RealVector dims;
    ComplexVector twists;
    double lambda = 1;

    ComplexMatrix base;
    ComplexMatrix coeff;
    Eigen::MatrixXi param;  // -1 where concrete
    int num_params = 0;

    struct SumConstraint {
        std::vector<std::pair<int, int>> cells;
        cplx value;
    };
    std::vector<SumConstraint> sums;

    /// Orbit-level charge conjugation support for S^2 (from parent duals).
    Eigen::Matrix<bool, Eigen::Dynamic, Eigen::Dynamic> s2_support;
    /// Branch pairs (i1, i2) whose own pair is orbit-self-dual; these carry
    /// the self-dual vs dual-pair hypothesis. Only base (parameter-bearing)
    /// pairs are listed; transported pairs follow.
    std::vector<std::pair<int, int>> hypothesis_pairs;

    int rank() const { return static_cast<int>(clabels.size()); }
    ComplexMatrix stilde(const ComplexVector& theta) const;
    ComplexVector seed() const;  // equal-split / quarter-split starting point
};

/// Z/2 condensation of a boson b: label bookkeeping, dims/twists, concrete
/// entries (type IxI, invertible rows), sum constraints, and the reduction of
/// every remaining entry to a base cell by invertible transport.
/// Throws if b is not a boson or a (d+1)-family label is fixed by b.
PartialModularData condense(const ModularData& md, int boson);

struct ResolveCandidate {
    ComplexVector theta;
    std::vector<int> hypothesis;  // 0 = self-dual, 1 = dual pair, per hypothesis pair
    ModularData md;
    ModularReport report;
    bool survives = false;
    std::string failure;
};

struct ResolveResult {
    std::vector<ResolveCandidate> candidates;   // deduplicated, survivors first
    int num_survivors = 0;
    /// Unique survivor (after branch canonicalization); throws otherwise.
    const ModularData& unique() const;
};

struct ResolveOptions {
    int starts_per_hypothesis = 11;
    double newton_tol = 1e-9;
    double filter_tol = 1e-6;
    std::uint64_t rng_seed = 0x5eed;
};

/// Determine the unknown slots: per dual-structure hypothesis, multistart
/// Gauss-Newton on [unitarity, symmetry, sum constraints, S^2 structure],
/// then filter by S^2 permutation, Verlinde nonnegative integrality and the
/// balancing equation. Candidates are reported with per-candidate failures.
ResolveResult resolve_unknowns(const PartialModularData& pmd, const ResolveOptions& opts = {});

}  // namespace ngc
