#pragma once

// Test-side oracles, independent of the library code paths they check.

#include <cmath>
#include <complex>
#include <functional>
#include <vector>

#include <Eigen/Sparse>
#include <Eigen/SparseLU>

#include "bkit/types.hpp"

namespace oracles {

using bkit::Complex;
using bkit::kPi;

// --- closed forms on disks -------------------------------------------------

inline Complex disk_bergman_kernel(Complex c, double r, Complex z, Complex w) {
    const Complex d = r * r - (z - c) * std::conj(w - c);
    return r * r / (kPi * d * d);
}

inline Complex unit_disk_szego_kernel(Complex z, Complex a) {
    return 1.0 / (2.0 * kPi * (1.0 - z * std::conj(a)));
}

inline double disk_green(Complex c, double r, Complex z, Complex w) {
    return std::log(r * std::abs(z - w)) -
           std::log(std::abs(r * r - (z - c) * std::conj(w - c)));
}

inline double disk_robin(Complex c, double r, Complex z0) {
    return std::log(r) - std::log(r * r - std::norm(z0 - c));
}

// --- annulus series oracles ------------------------------------------------

// Bergman kernel of {rho < |z| < R} from the Laurent orthogonal system,
// summed far past machine precision.
inline Complex annulus_bergman_kernel(double rho, double R, Complex z, Complex w,
                                      int terms = 400) {
    Complex acc{0, 0};
    for (int k = -terms; k <= terms; ++k) {
        const double n = (k == -1) ? 2.0 * kPi * std::log(R / rho)
                                   : kPi * (std::pow(R, 2 * k + 2) - std::pow(rho, 2 * k + 2)) /
                                         (k + 1);
        acc += bkit::ipow(z, k) * bkit::ipow(std::conj(w), k) / n;
    }
    return acc;
}

// Szego kernel of {rho < |z| < 1} from the Hardy-space orthogonal system
// z^k with boundary norms 2 pi (1 + rho^{2k+1}).
inline Complex annulus_szego_kernel(double rho, Complex z, Complex a, int terms = 400) {
    Complex acc{0, 0};
    for (int k = -terms; k <= terms; ++k) {
        acc += bkit::ipow(z * std::conj(a), k) /
               (2.0 * kPi * (1.0 + std::pow(rho, 2 * k + 1)));
    }
    return acc;
}

inline double annulus_harmonic_measure_inner(double rho, double R, Complex c, Complex z) {
    return std::log(std::abs(z - c) / R) / std::log(rho / R);
}

// Robin constant of {rho < |z| < 1} at |z| = r by harmonic Fourier mode
// matching: h(., z0) has boundary data -ln|zeta - z0| and expands in
// r^n, r^{-n} modes; evaluated at the pole.
inline double annulus_robin_fourier(double rho, double r, int nodes = 4096,
                                    int modes = 400) {
    std::vector<double> fR(nodes), fr(nodes);
    for (int i = 0; i < nodes; ++i) {
        const double th = 2.0 * kPi * i / nodes;
        fR[i] = -std::log(std::abs(std::exp(Complex(0, th)) - r));
        fr[i] = -std::log(std::abs(rho * std::exp(Complex(0, th)) - r));
    }
    auto coeff = [&](const std::vector<double>& f, int n) {
        double acc = 0.0;
        for (int i = 0; i < nodes; ++i) acc += f[i] * std::cos(2.0 * kPi * n * i / nodes);
        return acc * (n == 0 ? 1.0 : 2.0) / nodes;
    };
    const double c0R = coeff(fR, 0), c0r = coeff(fr, 0);
    const double d0 = (c0r - c0R) / std::log(rho);
    double lambda = c0R + d0 * std::log(r);
    for (int n = 1; n <= modes; ++n) {
        const double AR = coeff(fR, n), Ar = coeff(fr, n);
        const double det = std::pow(rho, -n) - std::pow(rho, n);
        const double an = (AR * std::pow(rho, -n) - Ar) / det;
        const double bn = (Ar - AR * std::pow(rho, n)) / det;
        lambda += an * std::pow(r, n) + bn * std::pow(r, -n);
    }
    return lambda;
}

// --- polar-coordinate moments ----------------------------------------------

// integral over the disk/annulus of z^j conj(z)^k dv about the center:
// zero unless j == k, else 2 pi int r^{2j+1} dr by Gauss panels.
inline Complex polar_moment(double r_inner, double r_outer, int j, int k) {
    if (j != k) return {0.0, 0.0};
    const int panels = 64;
    static const double gx[4] = {-0.8611363115940526, -0.3399810435848563,
                                 0.3399810435848563, 0.8611363115940526};
    static const double gw[4] = {0.3478548451374538, 0.6521451548625461,
                                 0.6521451548625461, 0.3478548451374538};
    double acc = 0.0;
    for (int p = 0; p < panels; ++p) {
        const double a = r_inner + (r_outer - r_inner) * p / panels;
        const double b = r_inner + (r_outer - r_inner) * (p + 1) / panels;
        for (int i = 0; i < 4; ++i) {
            const double rr = 0.5 * (a + b) + 0.5 * (b - a) * gx[i];
            acc += gw[i] * std::pow(rr, 2 * j + 1) * 0.5 * (b - a);
        }
    }
    return {2.0 * kPi * acc, 0.0};
}

// --- finite-difference Laplace oracle on the annulus -------------------------

// Solves Delta h = 0 on {rho < |z| < 1} with h = -ln|zeta - w| on the
// boundary, on a polar grid, by sparse LU. Returns an interior evaluator
// via bilinear interpolation. Second order in both grid spacings.
class AnnulusGreenFD {
public:
    AnnulusGreenFD(double rho, Complex w, int nr = 161, int nth = 161)
        : rho_(rho), w_(w), nr_(nr), nth_(nth) {
        const double hr = (1.0 - rho) / (nr - 1);
        const double hth = 2.0 * kPi / nth;
        const int interior = (nr - 2) * nth;
        auto idx = [&](int i, int j) { return (i - 1) * nth + ((j % nth) + nth) % nth; };

        std::vector<Eigen::Triplet<double>> trip;
        Eigen::VectorXd rhs = Eigen::VectorXd::Zero(interior);
        for (int i = 1; i + 1 < nr; ++i) {
            const double r = rho + i * hr;
            const double cr_p = 1.0 / (hr * hr) + 1.0 / (2.0 * hr * r);
            const double cr_m = 1.0 / (hr * hr) - 1.0 / (2.0 * hr * r);
            const double cth = 1.0 / (hth * hth * r * r);
            const double cc = -2.0 / (hr * hr) - 2.0 * cth;
            for (int j = 0; j < nth; ++j) {
                const int row = idx(i, j);
                trip.emplace_back(row, row, cc);
                trip.emplace_back(row, idx(i, j + 1), cth);
                trip.emplace_back(row, idx(i, j - 1), cth);
                if (i + 1 <= nr - 2) {
                    trip.emplace_back(row, idx(i + 1, j), cr_p);
                } else {
                    rhs(row) -= cr_p * boundary(1.0, 2.0 * kPi * j / nth);
                }
                if (i - 1 >= 1) {
                    trip.emplace_back(row, idx(i - 1, j), cr_m);
                } else {
                    rhs(row) -= cr_m * boundary(rho, 2.0 * kPi * j / nth);
                }
            }
        }
        Eigen::SparseMatrix<double> mat(interior, interior);
        mat.setFromTriplets(trip.begin(), trip.end());
        Eigen::SparseLU<Eigen::SparseMatrix<double>> lu(mat);
        solution_ = lu.solve(rhs);
    }

    double green(Complex z) const {
        return std::log(std::abs(z - w_)) + regular(z);
    }

    double regular(Complex z) const {
        const double hr = (1.0 - rho_) / (nr_ - 1);
        const double hth = 2.0 * kPi / nth_;
        const double r = std::abs(z);
        double th = std::arg(z);
        if (th < 0) th += 2.0 * kPi;
        const double fi = (r - rho_) / hr;
        const double fj = th / hth;
        const int i0 = std::max(1, std::min(nr_ - 3, static_cast<int>(fi)));
        const int j0 = static_cast<int>(fj) % nth_;
        const double ti = fi - i0, tj = fj - static_cast<int>(fj);
        auto at = [&](int i, int j) {
            if (i == 0) return boundary(rho_, hth * j);
            if (i == nr_ - 1) return boundary(1.0, hth * j);
            return solution_((i - 1) * nth_ + (j % nth_));
        };
        return (1 - ti) * (1 - tj) * at(i0, j0) + ti * (1 - tj) * at(i0 + 1, j0) +
               (1 - ti) * tj * at(i0, j0 + 1) + ti * tj * at(i0 + 1, j0 + 1);
    }

private:
    double boundary(double r, double th) const {
        return -std::log(std::abs(r * std::exp(Complex(0, th)) - w_));
    }
    double rho_;
    Complex w_;
    int nr_, nth_;
    Eigen::VectorXd solution_;
};

}  // namespace oracles
