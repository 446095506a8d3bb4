#include "ngc/modular_data.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace ngc {

SimpleLabel SimpleLabel::a(int g) { SimpleLabel l; l.kind = Kind::A; l.g = g; return l; }
SimpleLabel SimpleLabel::b(int h) { SimpleLabel l; l.kind = Kind::B; l.g = h; return l; }
SimpleLabel SimpleLabel::c(int k, int l_) {
    SimpleLabel l; l.kind = Kind::C; l.g = std::min(k, l_); l.h = std::max(k, l_); return l;
}
SimpleLabel SimpleLabel::d(int j) { SimpleLabel l; l.kind = Kind::D; l.g = j; return l; }
SimpleLabel SimpleLabel::opaque(std::string name) {
    SimpleLabel l; l.kind = Kind::Opaque; l.name = std::move(name); return l;
}

std::string SimpleLabel::str() const {
    std::ostringstream os;
    switch (kind) {
        case Kind::A: os << "A(" << g << ")"; break;
        case Kind::B: os << "B(" << g << ")"; break;
        case Kind::C: os << "C(" << g << "," << h << ")"; break;
        case Kind::D: os << "D(" << g << ")"; break;
        case Kind::Opaque: return name;
    }
    return os.str();
}

int ModularData::find(const SimpleLabel& l) const {
    for (int i = 0; i < rank(); ++i)
        if (labels[static_cast<std::size_t>(i)] == l) return i;
    return -1;
}

double ModularReport::max() const {
    double m = unitarity;
    m = std::max(m, symmetry);
    m = std::max(m, s2_permutation);
    m = std::max(m, verlinde_integrality);
    m = std::max(m, verlinde_negativity);
    m = std::max(m, twist_order);
    m = std::max(m, balancing);
    return m;
}

bool ModularReport::pass(double tol) const { return max() <= tol; }

FusionTensor verlinde_fusion(const ModularData& md, double tol) {
    int r = md.rank();
    const ComplexMatrix& S = md.S;
    for (int x = 0; x < r; ++x)
        if (std::abs(S(0, x)) < 1e-12)
            throw std::runtime_error("verlinde_fusion: vanishing S_0x entry");
    FusionTensor out;
    out.rank = r;
    out.N.assign(static_cast<std::size_t>(r) * r * r, 0);
    double worst = 0;
    int wa = 0, wb = 0, wc = 0;
    for (int a = 0; a < r; ++a)
        for (int b = 0; b < r; ++b)
            for (int c = 0; c < r; ++c) {
                cplx acc = 0;
                for (int x = 0; x < r; ++x)
                    acc += S(a, x) * S(b, x) * std::conj(S(c, x)) / S(0, x);
                long n = std::lround(acc.real());
                double dev = std::abs(acc - static_cast<double>(n));
                if (dev > worst) { worst = dev; wa = a; wb = b; wc = c; }
                if (dev > tol || n < 0) {
                    std::ostringstream os;
                    os << "verlinde_fusion: entry (" << a << "," << b << "," << c
                       << ") = " << acc << " not a nonnegative integer";
                    throw std::runtime_error(os.str());
                }
                out.N[(static_cast<std::size_t>(a) * r + b) * r + c] = static_cast<int>(n);
            }
    (void)wa; (void)wb; (void)wc; (void)worst;
    return out;
}

double balancing_check(const ModularData& md, const FusionTensor& N,
                       const std::vector<int>& dual, int X, int Y) {
    cplx lhs = md.twists(X) * md.twists(Y) * md.S(X, Y) * md.lambda;
    cplx rhs = 0;
    for (int Z = 0; Z < md.rank(); ++Z)
        rhs += static_cast<double>(N(dual[static_cast<std::size_t>(X)], Y, Z)) *
               md.twists(Z) * md.dims(Z);
    return std::abs(lhs - rhs);
}

ModularReport verify_modular(const ModularData& md, double tol) {
    ModularReport rep;
    int r = md.rank();
    const ComplexMatrix& S = md.S;
    rep.unitarity = (S * S.adjoint() - ComplexMatrix::Identity(r, r)).cwiseAbs().maxCoeff();
    rep.symmetry = (S - S.transpose()).cwiseAbs().maxCoeff();

    ComplexMatrix S2 = S * S;
    rep.dual.assign(static_cast<std::size_t>(r), -1);
    std::vector<bool> hit(static_cast<std::size_t>(r), false);
    double permdev = 0;
    for (int i = 0; i < r; ++i) {
        int best = 0;
        double bv = -1;
        for (int j = 0; j < r; ++j)
            if (std::abs(S2(i, j)) > bv) { bv = std::abs(S2(i, j)); best = j; }
        rep.dual[static_cast<std::size_t>(i)] = best;
        permdev = std::max(permdev, std::abs(S2(i, best) - 1.0));
        for (int j = 0; j < r; ++j)
            if (j != best) permdev = std::max(permdev, std::abs(S2(i, j)));
        if (hit[static_cast<std::size_t>(best)]) permdev = std::max(permdev, 1.0);
        hit[static_cast<std::size_t>(best)] = true;
    }
    if (rep.dual[0] != 0) permdev = std::max(permdev, 1.0);
    rep.s2_permutation = permdev;

    // Verlinde: measure integrality/negativity without throwing
    FusionTensor N;
    N.rank = r;
    N.N.assign(static_cast<std::size_t>(r) * r * r, 0);
    double integ = 0, negat = 0;
    for (int a = 0; a < r; ++a)
        for (int b = 0; b < r; ++b)
            for (int c = 0; c < r; ++c) {
                cplx acc = 0;
                for (int x = 0; x < r; ++x)
                    acc += S(a, x) * S(b, x) * std::conj(S(c, x)) / S(0, x);
                long n = std::lround(acc.real());
                integ = std::max(integ, std::abs(acc - static_cast<double>(n)));
                if (n < 0) negat = std::max(negat, static_cast<double>(-n));
                N.N[(static_cast<std::size_t>(a) * r + b) * r + c] = static_cast<int>(std::max(0L, n));
            }
    rep.verlinde_integrality = integ;
    rep.verlinde_negativity = negat;

    double tdev = 0;
    for (int i = 0; i < r; ++i) {
        Rational rr;
        if (!recognize_phase(md.twists(i), rr, 240, tol)) tdev = std::max(tdev, 1.0);
    }
    rep.twist_order = tdev;

    double bal = 0;
    for (int X = 0; X < r; ++X)
        for (int Y = 0; Y < r; ++Y)
            bal = std::max(bal, balancing_check(md, N, rep.dual, X, Y));
    rep.balancing = bal;
    return rep;
}

}  // namespace ngc
