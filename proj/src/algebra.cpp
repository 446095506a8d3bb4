#include "ngc/algebra.hpp"

#include <stdexcept>

#include "ngc/modular_data.hpp"

namespace ngc {

bool recognize_phase(cplx x, Rational& out, std::int64_t max_den, double tol) {
    if (std::abs(std::abs(x) - 1.0) > tol) return false;
    double angle = std::arg(x) / (2.0 * M_PI);  // in (-1/2, 1/2]
    if (angle < 0) angle += 1.0;
    // best rational with bounded denominator (Stern-Brocot style scan is
    // overkill at these sizes; denominators are small)
    for (std::int64_t q = 1; q <= max_den; ++q) {
        std::int64_t p = std::llround(angle * static_cast<double>(q));
        Rational r(p, q);
        if (std::abs(unit_phase(r) - x) <= tol) {
            out = r.mod1();
            return true;
        }
    }
    return false;
}

Bicharacter::Bicharacter(GroupSpec group, std::vector<std::vector<Rational>> exponents)
    : group_(std::move(group)), exps_(std::move(exponents)) {
    std::size_t f = group_.num_factors();
    if (exps_.size() != f)
        throw std::invalid_argument("Bicharacter: exponent matrix size mismatch");
    for (auto& row : exps_)
        if (row.size() != f) throw std::invalid_argument("Bicharacter: exponent matrix not square");
    // symmetry of the exponent data
    for (std::size_t i = 0; i < f; ++i)
        for (std::size_t j = 0; j < f; ++j)
            if (exps_[i][j] != exps_[j][i])
                throw std::invalid_argument("Bicharacter: exponent matrix not symmetric");
    // well-definedness: r_ij * n_i and r_ij * n_j integral
    const auto& ords = group_.factor_orders();
    for (std::size_t i = 0; i < f; ++i)
        for (std::size_t j = 0; j < f; ++j) {
            Rational ri = exps_[i][j] * ords[i];
            Rational rj = exps_[i][j] * ords[j];
            if (ri.den != 1 || rj.den != 1)
                throw std::invalid_argument("Bicharacter: exponent not compatible with factor orders");
        }
    int n = group_.order();
    table_.resize(n, n);
    for (int x = 0; x < n; ++x)
        for (int y = 0; y < n; ++y) table_(x, y) = unit_phase(exponent(x, y));
}

Rational Bicharacter::exponent(int x, int y) const {
    const GroupElement& ex = group_.element(x);
    const GroupElement& ey = group_.element(y);
    Rational r(0);
    for (std::size_t i = 0; i < ex.size(); ++i)
        for (std::size_t j = 0; j < ey.size(); ++j)
            r = r + exps_[i][j] * (static_cast<std::int64_t>(ex[i]) * ey[j]);
    return r.mod1();
}

Rational QuadraticForm::pair_exponent(int g, int h) const {
    auto q = [&](int i) { return exponents[static_cast<std::size_t>(i)]; };
    return (q(group.add(g, h)) - q(g) - q(h)).mod1();
}

bool is_nondegenerate(const ComplexMatrix& pairing_table, double tol) {
    int n = static_cast<int>(pairing_table.rows());
    for (int x = 1; x < n; ++x) {
        bool all_ones = true;
        for (int y = 0; y < n; ++y)
            if (std::abs(pairing_table(x, y) - 1.0) > tol) { all_ones = false; break; }
        if (all_ones) return false;
    }
    return true;
}

bool is_nondegenerate(const Bicharacter& b, double tol) {
    return is_nondegenerate(b.table(), tol);
}

bool is_nondegenerate(const QuadraticForm& q, double tol) {
    int n = q.group.order();
    ComplexMatrix t(n, n);
    for (int g = 0; g < n; ++g)
        for (int h = 0; h < n; ++h) t(g, h) = unit_phase(q.pair_exponent(g, h));
    return is_nondegenerate(t, tol);
}

ModularData pointed_modular_data(const GroupSpec& spec, const QuadraticForm& q) {
    if (!(q.group == spec)) throw std::invalid_argument("pointed_modular_data: group mismatch");
    for (int g = 0; g < spec.order(); ++g)
        if (q.pair_exponent(g, spec.neg(g)) != q.pair_exponent(spec.neg(g), g))
            throw std::logic_error("quadratic form pairing not symmetric");
    if (!is_nondegenerate(q)) throw std::invalid_argument("not modular: degenerate quadratic form");
    int n = spec.order();
    ModularData md;
    md.lambda = std::sqrt(static_cast<double>(n));
    md.dims = RealVector::Ones(n);
    md.twists.resize(n);
    md.S.resize(n, n);
    for (int g = 0; g < n; ++g) {
        md.labels.push_back(SimpleLabel::a(g));
        md.twists(g) = q.value(g);
        for (int h = 0; h < n; ++h)
            md.S(g, h) = std::conj(unit_phase(q.pair_exponent(g, h))) / md.lambda;
    }
    return md;
}

}  // namespace ngc
