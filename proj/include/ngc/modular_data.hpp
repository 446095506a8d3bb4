#pragma once

#include <optional>
#include <string>
#include <vector>

#include "ngc/algebra.hpp"

namespace ngc {

/// Label of a simple object. Center labels use the four families
/// A (invertible), B, C (unordered pair k<l), D (one per solver triple);
/// derived categories (condensations, factors, sectors) carry opaque names.
struct SimpleLabel {
    enum class Kind { A, B, C, D, Opaque };
    Kind kind = Kind::Opaque;
    int g = 0, h = 0;  // A/B element, or C pair (g,h) with g < h, or D triple index g
    std::string name;

    static SimpleLabel a(int g);
    static SimpleLabel b(int h);
    static SimpleLabel c(int k, int l);
    static SimpleLabel d(int j);
    static SimpleLabel opaque(std::string name);

    bool operator==(const SimpleLabel& o) const {
        return kind == o.kind && g == o.g && h == o.h && name == o.name;
    }
    std::string str() const;
};

/// Modular (or premodular) data: labels, quantum dimensions, twists and the
/// normalized S matrix with S = Stilde / lambda.
struct ModularData {
    std::vector<SimpleLabel> labels;
    RealVector dims;
    ComplexVector twists;
    ComplexMatrix S;
    double lambda = 1.0;

    int rank() const { return static_cast<int>(labels.size()); }
    ComplexMatrix stilde() const { return S * lambda; }
    int find(const SimpleLabel& l) const;
};

/// Report of the modularity checks; every entry is a max absolute residual.
struct ModularReport {
    double unitarity = 0;
    double symmetry = 0;
    double s2_permutation = 0;
    double verlinde_integrality = 0;
    double verlinde_negativity = 0;   // 0 when all coefficients >= 0
    double twist_order = 0;           // 0 when all twists are recognized roots of unity
    double balancing = 0;
    std::vector<int> dual;            // charge conjugation permutation (from S^2)

    double max() const;
    bool pass(double tol) const;
};

/// Fusion multiplicities via the Verlinde formula, N[(a*R+b)*R+c] = N_{ab}^c.
struct FusionTensor {
    int rank = 0;
    std::vector<int> N;
    int operator()(int a, int b, int c) const {
        return N[(static_cast<std::size_t>(a) * rank + b) * rank + c];
    }
};

/// N_{ab}^c = sum_x S_ax S_bx conj(S_cx) / S_0x, rounded; throws if an entry
/// is farther than tol from an integer or below -tol.
FusionTensor verlinde_fusion(const ModularData& md, double tol = 1e-4);

/// All checks: unitarity, symmetry, S^2 permutation fixing 0, Verlinde
/// nonnegative integrality, finite twist order, balancing equation.
ModularReport verify_modular(const ModularData& md, double tol = 1e-6);

/// |theta_X theta_Y Stilde_XY - sum_Z N_{X*,Y}^Z theta_Z d_Z|
double balancing_check(const ModularData& md, const FusionTensor& N,
                       const std::vector<int>& dual, int X, int Y);

/// Rank-|G| pointed modular data of C(G,q): S_gh = conj(<g,h>)/sqrt(|G|),
/// T_g = q(g). Throws if q is degenerate.
ModularData pointed_modular_data(const GroupSpec& spec, const QuadraticForm& q);

}  // namespace ngc
