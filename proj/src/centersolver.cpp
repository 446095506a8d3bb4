#include "ngc/centersolver.hpp"

#include <algorithm>
#include <atomic>
#include <sstream>
#include <stdexcept>
#include <thread>

namespace ngc {

void build_CB(const NearGroupData& dat, cplx omega, int tau,
              ComplexMatrix& C, ComplexMatrix& B, ComplexVector& z) {
    const GroupSpec& G = dat.group;
    int n = G.order();
    C = ComplexMatrix::Zero(n, n);
    B.resize(n, n);
    for (int g = 0; g < n; ++g) {
        C(g, G.neg(g)) = omega * dat.a(tau) * std::conj(dat.a(G.add(g, tau)) * dat.a(g));
        for (int k = 0; k < n; ++k) B(g, k) = dat.b(G.add(g, k));
    }
    z = ComplexVector::Constant(n, dat.c() * std::sqrt(static_cast<double>(n)) / dat.d);
}

namespace {

/// Residuals of eq:half1..eq:half4 stacked; optionally with |xi|^2 - 1.
ComplexVector center_residual(const NearGroupData& dat, const ComplexVector& xi,
                              int tau, cplx omega, bool with_modulus) {
    const GroupSpec& G = dat.group;
    int n = G.order();
    double rn = std::sqrt(static_cast<double>(n));
    cplx c = dat.c();
    cplx c2 = c * c;
    cplx c3 = c2 * c;
    cplx c4 = c2 * c2;
    int m = 1 + n + n + n * n + (with_modulus ? n : 0);
    ComplexVector out(m);
    int k = 0;
    cplx sum = 0;
    for (int g = 0; g < n; ++g) sum += xi(g);
    out(k++) = sum - (rn * omega * omega * dat.a(tau) * c3 - static_cast<double>(n) / dat.d);
    for (int g = 0; g < n; ++g) {
        cplx lhs = 0;
        for (int kk = 0; kk < n; ++kk) lhs += dat.b(G.add(g, kk)) * xi(kk);
        lhs *= std::conj(c);
        cplx rhs = omega * omega * c3 * dat.a(tau) * std::conj(xi(G.add(g, tau))) - rn / dat.d;
        out(k++) = lhs - rhs;
    }
    for (int g = 0; g < n; ++g)
        out(k++) = xi(G.sub(tau, g)) -
                   omega * c4 * dat.a(g) * dat.a(G.sub(tau, g)) * std::conj(xi(g));
    for (int g = 0; g < n; ++g)
        for (int h = 0; h < n; ++h) {
            cplx lhs = 0;
            for (int kk = 0; kk < n; ++kk)
                lhs += xi(kk) * dat.b(G.sub(kk, g)) * dat.b(G.sub(kk, h));
            cplx rhs = dat.b(G.sub(G.add(g, h), tau)) * xi(g) * xi(h) *
                           std::conj(dat.a(G.sub(g, h))) / c2 -
                       c2 / dat.d;
            out(k++) = lhs - rhs;
        }
    if (with_modulus)
        for (int g = 0; g < n; ++g) out(k++) = cplx(std::norm(xi(g)) - 1.0, 0.0);
    return out;
}

}  // namespace

double check_triple(const NearGroupData& dat, const CenterTriple& t) {
    return center_residual(dat, t.xi, t.tau, t.omega(), false).cwiseAbs().maxCoeff();
}

std::vector<ComplexVector> candidate_xis(const NearGroupData& dat, cplx omega, int tau,
                                         const SolverConfig& cfg) {
    const GroupSpec& G = dat.group;
    int n = G.order();
    ComplexMatrix C, B;
    ComplexVector z;
    build_CB(dat, omega, tau, C, B, z);
    AffineSolutionSet sol = solve_affine(C - B, z, cfg.rank_tol);
    std::vector<ComplexVector> out;
    if (!sol.consistent) return out;
    if (sol.basis.empty()) {
        out.push_back(sol.particular);
        return out;
    }
    // grid of Newton starts on the affine manifold
    int k = static_cast<int>(sol.basis.size());
    std::vector<cplx> tvals;
    tvals.push_back(0.0);
    for (double mag : {0.5, 1.0, 2.0})
        for (int p = 0; p < 8; ++p)
            tvals.push_back(mag * unit_phase(Rational(p, 8)));
    std::vector<int> idx(static_cast<std::size_t>(k), 0);
    auto residual = [&](const ComplexVector& xi) {
        return center_residual(dat, xi, tau, omega, true);
    };
    while (true) {
        ComplexVector x0 = sol.particular;
        for (int i = 0; i < k; ++i)
            x0 += tvals[static_cast<std::size_t>(idx[static_cast<std::size_t>(i)])] *
                  sol.basis[static_cast<std::size_t>(i)];
        NewtonResult nr = newton_polish(residual, x0, cfg.residual_tol * 1e-2, 40);
        if (nr.converged && nr.residual_norm < cfg.residual_tol) {
            bool dup = false;
            for (const auto& c0 : out)
                if ((nr.x - c0).cwiseAbs().maxCoeff() < cfg.dedup_tol) { dup = true; break; }
            if (!dup) out.push_back(nr.x);
        }
        int i = 0;
        for (; i < k; ++i) {
            if (++idx[static_cast<std::size_t>(i)] < static_cast<int>(tvals.size())) break;
            idx[static_cast<std::size_t>(i)] = 0;
        }
        if (i == k) break;
    }
    return out;
}

std::vector<CenterTriple> solve_all_triples(const NearGroupData& dat, const SolverConfig& cfg) {
    const GroupSpec& G = dat.group;
    int n = G.order();
    int N = cfg.omega_order;
    int tasks = N * n;
    std::vector<std::vector<CenterTriple>> results(static_cast<std::size_t>(tasks));
    std::atomic<int> next{0};
    auto work = [&]() {
        for (;;) {
            int t = next.fetch_add(1);
            if (t >= tasks) return;
            int k = t / n;
            int tau = t % n;
            Rational om_exp = Rational(k, N).mod1();
            cplx omega = unit_phase(om_exp);
            for (auto& xi : candidate_xis(dat, omega, tau, cfg)) {
                CenterTriple trip{om_exp, tau, xi};
                if (check_triple(dat, trip) < cfg.residual_tol)
                    results[static_cast<std::size_t>(t)].push_back(std::move(trip));
            }
        }
    };
    unsigned nt = cfg.threads > 0 ? static_cast<unsigned>(cfg.threads)
                                  : std::max(1u, std::thread::hardware_concurrency());
    std::vector<std::thread> pool;
    for (unsigned i = 1; i < nt; ++i) pool.emplace_back(work);
    work();
    for (auto& th : pool) th.join();

    std::vector<CenterTriple> all;
    for (auto& batch : results)
        for (auto& t : batch) {
            bool dup = false;
            for (const auto& u : all)
                if (u.omega_exponent == t.omega_exponent && u.tau == t.tau &&
                    (u.xi - t.xi).cwiseAbs().maxCoeff() < cfg.dedup_tol) {
                    dup = true;
                    break;
                }
            if (!dup) all.push_back(std::move(t));
        }
    std::sort(all.begin(), all.end(), [](const CenterTriple& x, const CenterTriple& y) {
        if (x.tau != y.tau) return x.tau < y.tau;
        if (!(x.omega_exponent == y.omega_exponent)) return x.omega_exponent < y.omega_exponent;
        for (int i = 0; i < x.xi.size(); ++i) {
            double px = std::arg(x.xi(i)), py = std::arg(y.xi(i));
            if (std::abs(px - py) > 1e-9) return px < py;
        }
        return false;
    });
    int expect = n * (n + 3) / 2;
    if (static_cast<int>(all.size()) != expect) {
        std::ostringstream os;
        os << "solve_all_triples: found " << all.size() << " of " << expect
           << " triples (omega order " << N << ")";
        throw std::runtime_error(os.str());
    }
    return all;
}

}  // namespace ngc
