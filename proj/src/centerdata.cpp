#include "ngc/centerdata.hpp"

#include <sstream>
#include <stdexcept>

namespace ngc {

ModularData assemble_center_data(const NearGroupData& dat,
                                 const std::vector<CenterTriple>& triples) {
    const GroupSpec& G = dat.group;
    int n = G.order();
    double d = dat.d;
    int nD = n * (n + 3) / 2;
    if (static_cast<int>(triples.size()) != nD) {
        std::ostringstream os;
        os << "assemble_center_data: need " << nD << " triples, got " << triples.size();
        throw std::invalid_argument(os.str());
    }
    std::vector<std::pair<int, int>> cpairs;
    for (int k = 0; k < n; ++k)
        for (int l = k + 1; l < n; ++l) cpairs.emplace_back(k, l);
    int nC = static_cast<int>(cpairs.size());
    int rank = 2 * n + nC + nD;

    ModularData md;
    md.dims.resize(rank);
    md.twists.resize(rank);
    const auto& P = dat.pairing;
    for (int g = 0; g < n; ++g) {
        md.labels.push_back(SimpleLabel::a(g));
        md.dims(g) = 1.0;
        md.twists(g) = P.pair(g, g);
    }
    for (int h = 0; h < n; ++h) {
        md.labels.push_back(SimpleLabel::b(h));
        md.dims(n + h) = d + 1;
        md.twists(n + h) = P.pair(h, h);
    }
    for (int i = 0; i < nC; ++i) {
        auto [k, l] = cpairs[static_cast<std::size_t>(i)];
        md.labels.push_back(SimpleLabel::c(k, l));
        md.dims(2 * n + i) = d + 2;
        md.twists(2 * n + i) = P.pair(k, l);
    }
    for (int j = 0; j < nD; ++j) {
        md.labels.push_back(SimpleLabel::d(j));
        md.dims(2 * n + nC + j) = d;
        md.twists(2 * n + nC + j) = triples[static_cast<std::size_t>(j)].omega();
    }

    md.lambda = std::sqrt(md.dims.squaredNorm());
    double lam_closed = n + d * d;  // algebraic identity for this dimension multiset
    if (std::abs(md.lambda - lam_closed) > 1e-6 * lam_closed)
        throw std::runtime_error("assemble_center_data: lambda mismatch with n + d^2");

    ComplexMatrix St = ComplexMatrix::Zero(rank, rank);
    int oA = 0, oB = n, oC = 2 * n, oD = 2 * n + nC;
    auto inv2 = [&](int x, int y) {  // <x,y>^{-2}
        cplx p = P.pair(x, y);
        return std::conj(p * p);
    };
    for (int g = 0; g < n; ++g) {
        for (int g2 = 0; g2 < n; ++g2) {
            St(oA + g, oA + g2) = inv2(g, g2);
            St(oA + g, oB + g2) = (d + 1) * inv2(g, g2);
            St(oB + g, oB + g2) = inv2(g, g2);
        }
        for (int i = 0; i < nC; ++i) {
            auto [k2, l2] = cpairs[static_cast<std::size_t>(i)];
            cplx v = std::conj(P.pair(g, G.add(k2, l2)));
            St(oA + g, oC + i) = (d + 2) * v;
            St(oB + g, oC + i) = (d + 2) * v;
        }
        for (int j = 0; j < nD; ++j) {
            cplx v = P.pair(g, triples[static_cast<std::size_t>(j)].tau);
            St(oA + g, oD + j) = d * v;
            St(oB + g, oD + j) = -d * v;
        }
    }
    for (int i = 0; i < nC; ++i) {
        auto [k, l] = cpairs[static_cast<std::size_t>(i)];
        for (int i2 = 0; i2 < nC; ++i2) {
            auto [k2, l2] = cpairs[static_cast<std::size_t>(i2)];
            St(oC + i, oC + i2) = (d + 2) * (std::conj(P.pair(k, k2) * P.pair(l, l2)) +
                                             std::conj(P.pair(k, l2) * P.pair(l, k2)));
        }
    }
    cplx c6 = std::pow(dat.c(), 6);
    for (int j = 0; j < nD; ++j) {
        const auto& tj = triples[static_cast<std::size_t>(j)];
        cplx oj = tj.omega();
        for (int j2 = 0; j2 < nD; ++j2) {
            const auto& tj2 = triples[static_cast<std::size_t>(j2)];
            cplx oj2 = tj2.omega();
            cplx s1 = 0;
            int tsum = G.add(tj.tau, tj2.tau);
            for (int g = 0; g < n; ++g) s1 += P.pair(G.add(tsum, g), g);
            cplx s2 = 0;
            int dt = G.sub(tj.tau, tj2.tau);
            for (int g = 0; g < n; ++g)
                for (int h = 0; h < n; ++h) {
                    int hg = G.sub(h, g);
                    s2 += std::conj(tj.xi(g) * tj2.xi(h) * P.pair(G.add(dt, hg), hg));
                }
            St(oD + j, oD + j2) =
                oj * oj2 * s1 + d * oj * oj2 * c6 * dat.a(tj.tau) * dat.a(tj2.tau) *
                                    s2 / static_cast<double>(n);
        }
    }
    // mirror the rectangular blocks
    St.block(oB, oA, n, n) = St.block(oA, oB, n, n).transpose();
    St.block(oC, oA, nC, n) = St.block(oA, oC, n, nC).transpose();
    St.block(oC, oB, nC, n) = St.block(oB, oC, n, nC).transpose();
    St.block(oD, oA, nD, n) = St.block(oA, oD, n, nD).transpose();
    St.block(oD, oB, nD, n) = St.block(oB, oD, n, nD).transpose();

    md.S = St / md.lambda;
    return md;
}

}  // namespace ngc
