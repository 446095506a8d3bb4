#pragma once

#include <map>
#include <string>
#include <vector>

#include "ngc/algebra.hpp"

namespace ngc {

/// One catalog row: everything needed to reconstruct a near-group datum of
/// type G+n with m = n. c is an exact root-of-unity exponent, a is built
/// exactly from the pairing parameter and sign data, b is seeded from the
/// tabulated phase angles j(x).
struct CatalogEntry {
    std::string name;
    std::vector<int> orders;
    int pairing_m = 1;           // <x,y> = e(m x y / n) (cyclic) or e(x1 y1/2) e(m x2 y2/4)
    int s1 = 1, s2 = 1;          // sign data for a (product case); s1 = epsilon for cyclic
    Rational c_exponent;
    std::map<GroupElement, double> j_values;
};

/// The data (G, <,>, c, a, b, d) of a near-group category of type G+n.
struct NearGroupData {
    std::string name;
    GroupSpec group;
    Bicharacter pairing;
    Rational c_exponent;
    std::vector<Rational> a_exponents;  // per element index, exact
    ComplexVector b;
    double d = 0;

    cplx c() const { return unit_phase(c_exponent); }
    cplx a(int x) const { return unit_phase(a_exponents[static_cast<std::size_t>(x)]); }
    int n() const { return group.order(); }
};

/// Max absolute residual per axiom family.
struct AxiomReport {
    double a_axioms = 0;     // a(0)=1, a(x)=a(-x), cocycle, sum rule
    double b_zero = 0;       // b(0) = -1/d
    double fourier = 0;      // sum_y conj<x,y> b(y) = sqrt(n) c conj b(x)
    double reflection = 0;   // a(x) b(-x) = conj b(x)
    double convolution1 = 0; // sum_x b(x+y) conj b(x) = delta_{y,0} - 1/d
    double convolution2 = 0;
    double max() const;
    bool pass(double tol) const { return max() <= tol; }
};

/// Bicharacter of the catalog's two group shapes from the m parameter.
Bicharacter catalog_pairing(const GroupSpec& spec, int m);

/// a from the entry's m and sign data; validates the cocycle identity.
std::vector<Rational> build_a(const CatalogEntry& entry);

/// b from tabulated j values, b(0) = -1/d and the reflection relation.
/// Throws listing uncovered elements if the j set does not reach all of G.
ComplexVector build_b_from_j(const CatalogEntry& entry, const std::vector<Rational>& a_exps);

NearGroupData realize(const CatalogEntry& entry);

AxiomReport verify_axioms(const NearGroupData& data);

/// Newton-polish b against all b axioms; a and c unchanged.
/// Throws if the polish does not reach `tol` within `max_iter` iterations.
NearGroupData refine_b(const NearGroupData& data, double tol = 1e-11, int max_iter = 100);

/// The eight built-in instances (Z/6 + 6 and Z/2 x Z/4 + 8, four each).
const std::vector<CatalogEntry>& catalog();
const CatalogEntry& catalog_entry(const std::string& name);

}  // namespace ngc
