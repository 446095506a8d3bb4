#pragma once

#include "ngc/linalg.hpp"
#include "ngc/neargroup.hpp"

namespace ngc {

/// One solution (xi, tau, omega) of the center equations. omega is kept as an
/// exact root-of-unity exponent.
struct CenterTriple {
    Rational omega_exponent;  // omega = e(k/N), reduced
    int tau = 0;              // element index
    ComplexVector xi;

    cplx omega() const { return unit_phase(omega_exponent); }
};

struct SolverConfig {
    int omega_order = 240;      // sweep omega over e(k/N), k = 0..N-1
    double rank_tol = 1e-8;
    double residual_tol = 1e-9;
    double dedup_tol = 1e-6;
    int threads = 0;            // 0 = hardware concurrency
};

/// C, B and the constant right side of (C - B) xi = z for fixed (omega, tau).
/// C has the single nonzero entry omega a(tau) conj(a(g+tau) a(g)) per row g,
/// in column -g; B_{g,k} = b(g+k); z = c sqrt(n)/d.
void build_CB(const NearGroupData& data, cplx omega, int tau,
              ComplexMatrix& C, ComplexMatrix& B, ComplexVector& z);

/// Max absolute residual of the four center equation families for a triple.
double check_triple(const NearGroupData& data, const CenterTriple& triple);

/// Candidate xi vectors at fixed (omega, tau): the affine solution when the
/// system is nonsingular, otherwise Newton from a grid of starts on the
/// affine manifold (8 phases x 3 magnitudes of radius 2 per free parameter).
std::vector<ComplexVector> candidate_xis(const NearGroupData& data, cplx omega, int tau,
                                         const SolverConfig& cfg);

/// Full (omega, tau) sweep. Returns exactly n(n+3)/2 deduplicated triples,
/// each with residual below cfg.residual_tol, sorted by (tau, omega exponent,
/// lexicographic xi phases); throws reporting the count otherwise.
std::vector<CenterTriple> solve_all_triples(const NearGroupData& data, const SolverConfig& cfg = {});

}  // namespace ngc
