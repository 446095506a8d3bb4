#include "ngc/linalg.hpp"

#include <Eigen/SVD>

namespace ngc {

AffineSolutionSet solve_affine(const ComplexMatrix& A, const ComplexVector& z, double rank_tol) {
    Eigen::JacobiSVD<ComplexMatrix> svd(A, Eigen::ComputeFullU | Eigen::ComputeFullV);
    const auto& sv = svd.singularValues();
    int n = static_cast<int>(A.cols());
    double smax = sv.size() ? sv(0) : 0.0;
    double thresh = rank_tol * (smax > 0 ? smax : 1.0);

    AffineSolutionSet out;
    out.rank = 0;
    for (int i = 0; i < sv.size(); ++i)
        if (sv(i) > thresh) ++out.rank;

    ComplexVector uz = svd.matrixU().adjoint() * z;
    ComplexVector w = ComplexVector::Zero(n);
    for (int i = 0; i < out.rank; ++i) w(i) = uz(i) / sv(i);
    out.particular = svd.matrixV() * w;
    for (int i = out.rank; i < n; ++i) out.basis.push_back(svd.matrixV().col(i));
    double resid = (A * out.particular - z).norm();
    out.consistent = resid <= 10.0 * rank_tol * std::max(z.norm(), 1.0);
    return out;
}

namespace {

Eigen::VectorXd to_real(const ComplexVector& v) {
    Eigen::VectorXd r(2 * v.size());
    for (int i = 0; i < v.size(); ++i) {
        r(2 * i) = v(i).real();
        r(2 * i + 1) = v(i).imag();
    }
    return r;
}

}  // namespace

NewtonResult newton_polish(const std::function<ComplexVector(const ComplexVector&)>& residual,
                           const ComplexVector& x0, double tol, int max_iter) {
    const double h = 1e-7;
    NewtonResult res;
    res.x = x0;
    int n = static_cast<int>(x0.size());
    ComplexVector r = residual(res.x);
    int m = static_cast<int>(r.size());
    Eigen::MatrixXd J(2 * m, 2 * n);
    ComplexVector xp(n), xm(n);
    for (int it = 0; it < max_iter; ++it) {
        double rn = r.cwiseAbs().maxCoeff();
        res.residual_norm = rn;
        res.iterations = it;
        if (rn < tol) {
            res.converged = true;
            return res;
        }
        // central finite differences over real/imag parts
        for (int k = 0; k < n; ++k) {
            for (int part = 0; part < 2; ++part) {
                cplx dx = part == 0 ? cplx(h, 0) : cplx(0, h);
                xp = res.x; xp(k) += dx;
                xm = res.x; xm(k) -= dx;
                ComplexVector col = (residual(xp) - residual(xm)) / (2 * h);
                for (int i = 0; i < m; ++i) {
                    J(i, 2 * k + part) = col(i).real();
                    J(m + i, 2 * k + part) = col(i).imag();
                }
            }
        }
        Eigen::VectorXd rr = to_real(r);
        // rearrange rr to [Re; Im] blocks to match J
        Eigen::VectorXd rhs(2 * m);
        for (int i = 0; i < m; ++i) {
            rhs(i) = r(i).real();
            rhs(m + i) = r(i).imag();
        }
        (void)rr;
        Eigen::MatrixXd JtJ = J.transpose() * J;
        JtJ.diagonal().array() += 1e-14;
        Eigen::VectorXd step = JtJ.ldlt().solve(-J.transpose() * rhs);
        // damping: halve until the residual decreases
        double lam = 1.0;
        ComplexVector xn;
        ComplexVector rn2;
        bool improved = false;
        for (int t = 0; t < 10; ++t) {
            xn = res.x;
            for (int k = 0; k < n; ++k) xn(k) += lam * cplx(step(2 * k), step(2 * k + 1));
            rn2 = residual(xn);
            if (rn2.cwiseAbs().maxCoeff() < rn) { improved = true; break; }
            lam *= 0.5;
        }
        res.x = xn;
        r = rn2;
        if (!improved && r.cwiseAbs().maxCoeff() >= rn) {
            // stalled
            res.residual_norm = r.cwiseAbs().maxCoeff();
            res.converged = res.residual_norm < tol;
            res.iterations = it + 1;
            return res;
        }
    }
    res.residual_norm = r.cwiseAbs().maxCoeff();
    res.converged = res.residual_norm < tol;
    res.iterations = max_iter;
    return res;
}

}  // namespace ngc
