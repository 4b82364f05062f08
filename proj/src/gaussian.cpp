#include "magmech/gaussian.hpp"

#include <Eigen/Eigenvalues>
#include <Eigen/LU>
#include <cmath>

namespace magmech {

Mat6 build_drift(const SystemParams& p, cplx g_eff, cplx zeta) {
    p.validate();
    const double gr = g_eff.real(), gi = g_eff.imag();
    const double zr = zeta.real(), zi = zeta.imag();
    Mat6 a = Mat6::Zero();
    // cavity
    a(0, 0) = -p.gamma_a;
    a(0, 1) = p.delta_a;
    a(0, 5) = p.g;
    a(1, 0) = -p.delta_a;
    a(1, 1) = -p.gamma_a;
    a(1, 4) = -p.g;
    // mechanics
    a(2, 2) = -p.gamma_b;
    a(2, 3) = p.omega_b;
    a(3, 2) = -p.omega_b;
    a(3, 3) = -p.gamma_b;
    a(3, 4) = -2.0 * gr;
    a(3, 5) = -2.0 * gi;
    // magnon
    a(4, 1) = p.g;
    a(4, 2) = 2.0 * gi;
    a(4, 4) = -p.gamma_m + zr;
    a(4, 5) = p.delta_m + zi;
    a(5, 0) = -p.g;
    a(5, 2) = -2.0 * gr;
    a(5, 4) = -p.delta_m + zi;
    a(5, 5) = -p.gamma_m - zr;
    return a;
}

Mat6 build_diffusion(const SystemParams& p) {
    p.validate();
    Mat6 d = Mat6::Zero();
    d(0, 0) = d(1, 1) = p.gamma_a * (2.0 * p.n_a + 1.0);
    d(2, 2) = d(3, 3) = p.gamma_b * (2.0 * p.n_b + 1.0);
    d(4, 4) = d(5, 5) = p.gamma_m * (2.0 * p.n_m + 1.0);
    return d;
}

StabilityInfo check_stability(const Mat6& drift, double omega_b) {
    Eigen::EigenSolver<Mat6> es(drift, /*computeEigenvectors=*/false);
    const double abscissa = es.eigenvalues().real().maxCoeff();
    return {abscissa < -1e-12 * omega_b, abscissa};
}

CovarianceMatrix solve_lyapunov(const Mat6& drift, const Mat6& diffusion, double omega_b) {
    const auto stab = check_stability(drift, omega_b);
    if (!stab.stable) throw StabilityError(stab.spectral_abscissa);

    // Column-major vec: vec(AV) = (I (x) A) vec(V), vec(V A^T) = (A (x) I) vec(V).
    Eigen::Matrix<double, 36, 36> k = Eigen::Matrix<double, 36, 36>::Zero();
    const Mat6 eye = Mat6::Identity();
    for (int c = 0; c < 6; ++c) k.block<6, 6>(6 * c, 6 * c) += drift;
    for (int c = 0; c < 6; ++c)
        for (int r = 0; r < 6; ++r) k.block<6, 6>(6 * r, 6 * c) += drift(r, c) * eye;

    Eigen::Matrix<double, 36, 1> rhs;
    for (int c = 0; c < 6; ++c) rhs.segment<6>(6 * c) = -diffusion.col(c);

    Eigen::FullPivLU<Eigen::Matrix<double, 36, 36>> lu(k);
    CovarianceMatrix out;
    out.cond_warning = !lu.isInvertible() ||
                       std::abs(lu.matrixLU().diagonal().minCoeff()) <
                           1e-12 * std::abs(lu.matrixLU().diagonal().maxCoeff());
    const Eigen::Matrix<double, 36, 1> x = lu.solve(rhs);
    Mat6 v;
    for (int c = 0; c < 6; ++c) v.col(c) = x.segment<6>(6 * c);
    v = 0.5 * (v + v.transpose()).eval();
    out.v = v;
    const double dnorm = diffusion.norm();
    out.residual = (drift * v + v * drift.transpose() + diffusion).norm() / (dnorm > 0 ? dnorm : 1.0);
    return out;
}

bool is_physical(const Mat6& v, double tol) {
    Eigen::Matrix<cplx, 6, 6> m = v.cast<cplx>();
    // symplectic form Omega: per-mode [[0,1],[-1,0]]
    for (int k = 0; k < 3; ++k) {
        m(2 * k, 2 * k + 1) += cplx(0.0, 0.5);
        m(2 * k + 1, 2 * k) += cplx(0.0, -0.5);
    }
    Eigen::SelfAdjointEigenSolver<Eigen::Matrix<cplx, 6, 6>> es(m);
    return es.eigenvalues().minCoeff() >= -tol;
}

double phonon_number(const Mat6& v) {
    if (!is_physical(v)) throw InvalidParameterError("covariance matrix is unphysical");
    return 0.5 * (v(2, 2) + v(3, 3) - 1.0);
}

GaussianModel build_model(const SystemParams& p, cplx g_eff, cplx zeta) {
    return {build_drift(p, g_eff, zeta), build_diffusion(p)};
}

double stationary_phonon(const SystemParams& p, cplx g_eff, cplx zeta) {
    const GaussianModel m = build_model(p, g_eff, zeta);
    const CovarianceMatrix v = solve_lyapunov(m.drift, m.diffusion, p.omega_b);
    return phonon_number(v.v);
}

double numeric_spectrum(double omega, const SystemParams& p, cplx zeta) {
    p.validate();
    using Mat4c = Eigen::Matrix<cplx, 4, 4>;
    const cplx i(0.0, 1.0);

    // Unknowns (a, a^dag, m, m^dag)(omega); Fourier convention e^{+i omega t}.
    // transfer of X(omega) = m + m^dag against the input channels
    // (a_in, a_in^dag, m_in, m_in^dag), including the sqrt(2 gamma) prefactors
    auto transfer = [&](double w) -> Eigen::Matrix<cplx, 1, 4> {
        Mat4c mm = Mat4c::Zero();
        mm(0, 0) = cplx(p.gamma_a, p.delta_a - w);
        mm(0, 2) = i * p.g;
        mm(1, 1) = cplx(p.gamma_a, -(p.delta_a + w));
        mm(1, 3) = -i * p.g;
        mm(2, 0) = i * p.g;
        mm(2, 2) = cplx(p.gamma_m, p.delta_m - w);
        mm(2, 3) = -zeta;
        mm(3, 1) = -i * p.g;
        mm(3, 2) = -std::conj(zeta);
        mm(3, 3) = cplx(p.gamma_m, -(p.delta_m + w));
        Eigen::FullPivLU<Mat4c> dec(mm);
        if (!dec.isInvertible()) throw SingularSpectrumError(w);
        Mat4c inv = dec.inverse();
        Eigen::Matrix<cplx, 1, 4> c = inv.row(2) + inv.row(3);
        const double sa = std::sqrt(2.0 * p.gamma_a);
        const double sm = std::sqrt(2.0 * p.gamma_m);
        c(0) *= sa;
        c(1) *= sa;
        c(2) *= sm;
        c(3) *= sm;
        return c;
    };

    const auto c_pos = transfer(omega);
    const auto c_neg = transfer(-omega);

    // <n_j(omega) n_k(omega')> = 2 pi C_jk delta(omega + omega')
    Mat4c corr = Mat4c::Zero();
    corr(0, 1) = p.n_a + 1.0;
    corr(1, 0) = p.n_a;
    corr(2, 3) = p.n_m + 1.0;
    corr(3, 2) = p.n_m;

    const cplx s = c_pos * corr * c_neg.transpose();
    return s.real();
}

}  // namespace magmech
