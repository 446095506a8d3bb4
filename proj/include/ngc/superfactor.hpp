#pragma once

#include "ngc/modular_data.hpp"

namespace ngc {

/// Result of splitting off a pointed modular subcategory P: md ~ factor x P.
struct FactorResult {
    ModularData factor;
    ModularData pointed;
    std::vector<int> factor_indices;               // into the parent label set
    std::vector<std::array<int, 3>> bijection;     // (factor label, pointed label) -> parent label
    double kronecker_deviation = 0;
};

/// factor = Muger centralizer of `pointed`; verifies the label bijection
/// (factor x pointed -> all labels via fusion) and the Kronecker identity
/// Stilde_{aY,bY'} = Stilde^P_{a,b} Stilde^F_{Y,Y'}. Throws on failure.
FactorResult factor_pointed(const ModularData& md, const std::vector<int>& pointed,
                            double tol = 1e-6);

struct SpinModularData {
    ModularData md;
    int fermion = -1;  // label index
};

/// Restriction to the centralizer of the fermion, renormalized by lambda/sqrt(2).
/// Also returns the sector indices into the parent and the fermion's position.
ModularData extract_fermion_sector(const SpinModularData& spin,
                                   std::vector<int>* sector_indices = nullptr,
                                   int* fermion_pos = nullptr);

/// Reduced super-modular data on fermion-orbit pairs [X, fX].
struct SuperModularData {
    std::vector<std::array<SimpleLabel, 2>> pair_labels;
    ComplexMatrix S_hat;
    ComplexVector T2_hat;
    RealVector dims;
    int rank() const { return static_cast<int>(pair_labels.size()); }
};

/// Pair labels under fusion with the fermion (detected by equal S rows, equal
/// dims and negated twists), pick the representative with twist angle in
/// [0, pi), and collapse: S_hat = sqrt(2) S, T2_hat = theta^2.
SuperModularData split_super(const ModularData& sector, int fermion, double tol = 1e-6);

struct MatchResult {
    bool matched = false;
    bool conjugated = false;
    std::vector<int> permutation;
    double deviation = 0;  // best achieved max entry deviation
};

/// Permutation search fixing index 0, respecting (dim, twist) multisets,
/// optionally composed with entrywise complex conjugation.
MatchResult compare_modular(const SuperModularData& a, const SuperModularData& b,
                            bool allow_conjugation, double tol = 1e-6);
MatchResult compare_modular(const ModularData& a, const ModularData& b,
                            bool allow_conjugation, double tol = 1e-6);

/// The two rank-5 reference data sets, evaluated from their closed forms.
SuperModularData target_smds1();
SuperModularData target_smds2();
const SuperModularData& target_by_name(const std::string& name);  // "smds1" | "smds2"

/// Subsets of invertibles closed under fusion whose restricted S is unitary,
/// smallest last. Used to pick the pointed factor automatically.
std::vector<std::vector<int>> pointed_modular_subcategories(const ModularData& md,
                                                            double tol = 1e-6);

}  // namespace ngc
