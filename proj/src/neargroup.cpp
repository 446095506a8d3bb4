#include "ngc/neargroup.hpp"

#include <cmath>
#include <sstream>
#include <stdexcept>

#include "ngc/linalg.hpp"

namespace ngc {

double AxiomReport::max() const {
    double m = a_axioms;
    m = std::max(m, b_zero);
    m = std::max(m, fourier);
    m = std::max(m, reflection);
    m = std::max(m, convolution1);
    m = std::max(m, convolution2);
    return m;
}

Bicharacter catalog_pairing(const GroupSpec& spec, int m) {
    const auto& ords = spec.factor_orders();
    if (ords.size() == 1) {
        if (std::gcd(std::abs(m) % ords[0] == 0 ? 1 : std::abs(m), ords[0]) != 1 && ords[0] > 1)
            throw std::invalid_argument("catalog_pairing: m not coprime to n");
        return Bicharacter(spec, {{Rational(m, ords[0])}});
    }
    if (ords.size() == 2 && ords[0] == 2 && ords[1] == 4) {
        return Bicharacter(spec, {{Rational(1, 2), Rational(0)},
                                  {Rational(0), Rational(m, 4)}});
    }
    throw std::invalid_argument("catalog_pairing: unsupported group shape");
}

std::vector<Rational> build_a(const CatalogEntry& entry) {
    GroupSpec spec(entry.orders);
    int n = spec.order();
    std::vector<Rational> a(static_cast<std::size_t>(n));
    if (entry.orders.size() == 1) {
        // a(x) = e(-m x^2 / (2n)), m in Z/2n coprime to n (sign absorbed)
        for (int x = 0; x < n; ++x) {
            std::int64_t xx = spec.element(x)[0];
            a[static_cast<std::size_t>(x)] = Rational(-entry.pairing_m * xx * xx, 2 * n).mod1();
        }
    } else {
        // a(x,y) = s1^x s2^y e(-x^2/4) e(-m y^2/8)
        for (int i = 0; i < n; ++i) {
            const auto& e = spec.element(i);
            std::int64_t x = e[0], y = e[1];
            Rational r = Rational(-x * x, 4) + Rational(-entry.pairing_m * y * y, 8);
            if (entry.s1 == -1) r = r + Rational(x, 2);
            if (entry.s2 == -1) r = r + Rational(y, 2);
            a[static_cast<std::size_t>(i)] = r.mod1();
        }
    }
    // cocycle identity a(x+y) <x,y> = a(x) a(y), exact on exponents
    Bicharacter P = catalog_pairing(spec, entry.pairing_m);
    for (int x = 0; x < n; ++x)
        for (int y = 0; y < n; ++y) {
            Rational lhs = (a[static_cast<std::size_t>(spec.add(x, y))] + P.exponent(x, y)).mod1();
            Rational rhs = (a[static_cast<std::size_t>(x)] + a[static_cast<std::size_t>(y)]).mod1();
            if (lhs != rhs) throw std::runtime_error("build_a: cocycle identity fails");
        }
    return a;
}

ComplexVector build_b_from_j(const CatalogEntry& entry, const std::vector<Rational>& a_exps) {
    GroupSpec spec(entry.orders);
    int n = spec.order();
    double d = (n + std::sqrt(static_cast<double>(n) * n + 4.0 * n)) / 2.0;
    ComplexVector b = ComplexVector::Zero(n);
    std::vector<bool> have(static_cast<std::size_t>(n), false);
    b(0) = -1.0 / d;
    have[0] = true;
    double rn = std::sqrt(static_cast<double>(n));
    for (const auto& [el, j] : entry.j_values) {
        int i = spec.index_of(el);
        b(i) = cplx(std::cos(j), std::sin(j)) / rn;
        have[static_cast<std::size_t>(i)] = true;
    }
    // propagate b(-x) = conj(a(x) b(x))
    bool progress = true;
    while (progress) {
        progress = false;
        for (int x = 0; x < n; ++x) {
            int mx = spec.neg(x);
            if (have[static_cast<std::size_t>(x)] && !have[static_cast<std::size_t>(mx)]) {
                b(mx) = std::conj(unit_phase(a_exps[static_cast<std::size_t>(x)]) * b(x));
                have[static_cast<std::size_t>(mx)] = true;
                progress = true;
            }
        }
    }
    std::ostringstream missing;
    bool any = false;
    for (int x = 0; x < n; ++x)
        if (!have[static_cast<std::size_t>(x)]) {
            missing << (any ? ", " : "") << spec.element_name(x);
            any = true;
        }
    if (any) throw std::runtime_error("build_b_from_j: uncovered elements: " + missing.str());
    return b;
}

NearGroupData realize(const CatalogEntry& entry) {
    GroupSpec spec(entry.orders);
    auto a = build_a(entry);
    auto b = build_b_from_j(entry, a);
    int n = spec.order();
    NearGroupData data{entry.name,
                       spec,
                       catalog_pairing(spec, entry.pairing_m),
                       entry.c_exponent.mod1(),
                       std::move(a),
                       std::move(b),
                       (n + std::sqrt(static_cast<double>(n) * n + 4.0 * n)) / 2.0};
    return data;
}

AxiomReport verify_axioms(const NearGroupData& dat) {
    const GroupSpec& G = dat.group;
    int n = G.order();
    double rn = std::sqrt(static_cast<double>(n));
    cplx c = dat.c();
    AxiomReport rep;

    double ra = std::abs(dat.a(0) - 1.0);
    cplx asum = 0;
    for (int x = 0; x < n; ++x) {
        asum += dat.a(x);
        ra = std::max(ra, std::abs(dat.a(x) - dat.a(G.neg(x))));
        for (int y = 0; y < n; ++y)
            ra = std::max(ra, std::abs(dat.a(G.add(x, y)) * dat.pairing.pair(x, y) -
                                       dat.a(x) * dat.a(y)));
    }
    ra = std::max(ra, std::abs(asum - rn * std::pow(c, -3)));
    rep.a_axioms = ra;

    rep.b_zero = std::abs(dat.b(0) + 1.0 / dat.d);

    for (int x = 0; x < n; ++x) {
        cplx lhs = 0;
        for (int y = 0; y < n; ++y) lhs += std::conj(dat.pairing.pair(x, y)) * dat.b(y);
        rep.fourier = std::max(rep.fourier, std::abs(lhs - rn * c * std::conj(dat.b(x))));
        rep.reflection = std::max(rep.reflection,
                                  std::abs(dat.a(x) * dat.b(G.neg(x)) - std::conj(dat.b(x))));
    }
    for (int y = 0; y < n; ++y) {
        cplx lhs = 0;
        for (int x = 0; x < n; ++x) lhs += dat.b(G.add(x, y)) * std::conj(dat.b(x));
        cplx rhs = (y == 0 ? 1.0 : 0.0) - 1.0 / dat.d;
        rep.convolution1 = std::max(rep.convolution1, std::abs(lhs - rhs));
    }
    for (int y = 0; y < n; ++y)
        for (int z = 0; z < n; ++z) {
            cplx lhs = 0;
            for (int x = 0; x < n; ++x)
                lhs += dat.b(G.add(x, y)) * dat.b(G.add(x, z)) * std::conj(dat.b(x));
            cplx rhs = std::conj(dat.pairing.pair(y, z)) * dat.b(y) * dat.b(z) - c / (dat.d * rn);
            rep.convolution2 = std::max(rep.convolution2, std::abs(lhs - rhs));
        }
    return rep;
}

namespace {

ComplexVector b_axiom_residual(const NearGroupData& dat, const ComplexVector& b) {
    const GroupSpec& G = dat.group;
    int n = G.order();
    double rn = std::sqrt(static_cast<double>(n));
    cplx c = dat.c();
    ComplexVector out(1 + 2 * n + n + n * n);
    int k = 0;
    out(k++) = b(0) + 1.0 / dat.d;
    for (int x = 0; x < n; ++x) {
        cplx lhs = 0;
        for (int y = 0; y < n; ++y) lhs += std::conj(dat.pairing.pair(x, y)) * b(y);
        out(k++) = lhs - rn * c * std::conj(b(x));
        out(k++) = dat.a(x) * b(G.neg(x)) - std::conj(b(x));
    }
    for (int y = 0; y < n; ++y) {
        cplx lhs = 0;
        for (int x = 0; x < n; ++x) lhs += b(G.add(x, y)) * std::conj(b(x));
        out(k++) = lhs - ((y == 0 ? 1.0 : 0.0) - 1.0 / dat.d);
    }
    for (int y = 0; y < n; ++y)
        for (int z = 0; z < n; ++z) {
            cplx lhs = 0;
            for (int x = 0; x < n; ++x) lhs += b(G.add(x, y)) * b(G.add(x, z)) * std::conj(b(x));
            out(k++) = lhs - (std::conj(dat.pairing.pair(y, z)) * b(y) * b(z) - c / (dat.d * rn));
        }
    return out;
}

}  // namespace

NearGroupData refine_b(const NearGroupData& data, double tol, int max_iter) {
    auto res = newton_polish(
        [&](const ComplexVector& b) { return b_axiom_residual(data, b); }, data.b, tol, max_iter);
    if (!res.converged) {
        std::ostringstream os;
        os << "refine_b: Newton did not converge, residual " << res.residual_norm;
        throw std::runtime_error(os.str());
    }
    NearGroupData out = data;
    out.b = res.x;
    return out;
}

const std::vector<CatalogEntry>& catalog() {
    static const std::vector<CatalogEntry> entries = [] {
        std::vector<CatalogEntry> v;
        auto j6 = [](std::string name, int m, Rational c, double j1, double j2, double j3) {
            CatalogEntry e;
            e.name = std::move(name);
            e.orders = {6};
            e.pairing_m = m;
            e.c_exponent = c;
            e.j_values[{1}] = j1;
            e.j_values[{2}] = j2;
            e.j_values[{3}] = j3;
            return e;
        };
        v.push_back(j6("J6_1", 5, Rational(5, 24), 2.91503, -1.59091, 2.35619));
        v.push_back(j6("J6_1bar", -5, Rational(-5, 24), -2.91503, 1.59091, -2.35619));
        v.push_back(j6("J6_2", 1, Rational(1, 24), 2.95526, 0.0553542, -0.785398));
        v.push_back(j6("J6_2bar", -1, Rational(-1, 24), -2.95526, -0.0553542, 0.785398));
        auto j24 = [](std::string name, Rational c, int m, int s1, int s2,
                      double j01, double j02, double j10, double j11, double j12) {
            CatalogEntry e;
            e.name = std::move(name);
            e.orders = {2, 4};
            e.pairing_m = m;
            e.s1 = s1;
            e.s2 = s2;
            e.c_exponent = c;
            e.j_values[{0, 1}] = j01;
            e.j_values[{0, 2}] = j02;
            e.j_values[{1, 0}] = j10;
            e.j_values[{1, 1}] = j11;
            e.j_values[{1, 2}] = j12;
            return e;
        };
        v.push_back(j24("J24_1", Rational(5, 12), 1, 1, 1,
                        -0.992441, 1.5708, 0.785398, -1.42977, -0.785398));
        v.push_back(j24("J24_2", Rational(-5, 12), -1, -1, 1,
                        0.992441, -1.5708, -0.785398, 1.42977, 0.785398));
        v.push_back(j24("J24_3", Rational(-5, 12), 1, 1, -1,
                        1.42977, -1.5708, 0.785398, -1.77784, -0.785398));
        v.push_back(j24("J24_4", Rational(5, 12), -1, -1, -1,
                        -1.42977, 1.5708, -0.785398, 1.77784, 0.785398));
        return v;
    }();
    return entries;
}

const CatalogEntry& catalog_entry(const std::string& name) {
    std::string key = name;
    auto strip = [](std::string s, const std::string& suf) {
        if (s.size() > suf.size() && s.compare(s.size() - suf.size(), suf.size(), suf) == 0)
            s = s.substr(0, s.size() - suf.size()) + "bar";
        return s;
    };
    key = strip(key, "-bar");
    for (const auto& e : catalog())
        if (e.name == key) return e;
    throw std::invalid_argument("unknown catalog instance: " + name);
}

}  // namespace ngc
