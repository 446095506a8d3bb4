#pragma once

#include <Eigen/Dense>

#include "ngc/group.hpp"
#include "ngc/rational.hpp"

namespace ngc {

using ComplexMatrix = Eigen::Matrix<cplx, Eigen::Dynamic, Eigen::Dynamic, Eigen::RowMajor>;
using ComplexVector = Eigen::VectorXcd;
using RealVector = Eigen::VectorXd;

/// Symmetric bicharacter <x,y> = e( sum_{ij} r_ij x_i y_j ) on a product of
/// cyclic groups, with exact rational exponents r_ij per factor pair.
class Bicharacter {
public:
    Bicharacter(GroupSpec group, std::vector<std::vector<Rational>> exponents);

    const GroupSpec& group() const { return group_; }

    /// Exponent of <x,y> as a rational in [0,1).
    Rational exponent(int x, int y) const;
    cplx pair(int x, int y) const { return table_(x, y); }
    const ComplexMatrix& table() const { return table_; }

private:
    GroupSpec group_;
    std::vector<std::vector<Rational>> exps_;
    ComplexMatrix table_;
};

/// q: G -> unit circle with q(g) = q(-g) whose polarization is a bicharacter.
/// Values are exact phase exponents in element-enumeration order.
struct QuadraticForm {
    GroupSpec group;
    std::vector<Rational> exponents;

    cplx value(int g) const { return unit_phase(exponents[static_cast<std::size_t>(g)]); }
    /// <g,h> = q(g+h)/(q(g)q(h)) as an exact exponent.
    Rational pair_exponent(int g, int h) const;
};

/// Non-degeneracy of a pairing table: x -> <x,.> is injective, i.e. no row
/// other than x = 0 is identically one.
bool is_nondegenerate(const ComplexMatrix& pairing_table, double tol = 1e-9);
bool is_nondegenerate(const Bicharacter& b, double tol = 1e-9);
bool is_nondegenerate(const QuadraticForm& q, double tol = 1e-9);

}  // namespace ngc
