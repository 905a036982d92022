"""Smoke tests for the python module: import, construct, evaluate."""

import cmath
import math

import bergmankit as bk


def approx(a, b, tol=1e-9):
    assert abs(a - b) <= tol, f"{a} != {b} within {tol}"


def main():
    disk = bk.PlanarDomain.disk(0j, 1.0)
    approx(disk.area, math.pi, 1e-10)
    assert disk.contains(0j) == "inside"
    assert disk.contains(2 + 0j) == "outside"
    approx(disk.unit_tangent(0, 0.0), 1j, 1e-13)

    basis = bk.build_basis(disk, 30)
    approx(basis.kernel(0j, 0j), 1.0 / math.pi, 1e-12)
    approx(basis.kernel(0.5 + 0j, 0.5 + 0j), 1.0 / (math.pi * 0.75**2), 1e-9)
    approx(basis.minimality_margin(0.5 + 0j), 1.0 / 0.75**2 - 1.0, 1e-9)
    approx(basis.kernel_mean(0.3 + 0.2j), 1.0, 1e-10)

    approx(bk.robin(disk, 0.5 + 0j), -math.log(0.75), 1e-12)
    approx(bk.robin_extrapolated(disk, 0.5 + 0j), -math.log(0.75), 1e-6)
    approx(bk.suita_margin(disk, basis, 0.5 + 0j), 0.0, 1e-8)
    approx(bk.green(disk, 0.5 + 0j, 0.2 + 0j), math.log(0.3 / 0.9), 1e-12)

    verdict = bk.classify(disk)
    assert verdict["kind"] == "disk_minus_polar"
    assert abs(verdict["center"]) < 1e-3
    assert abs(verdict["radius"] - 1.0) < 1e-3

    ann = bk.PlanarDomain.annulus(0j, 0.5, 1.0)
    assert ann.connectivity == 2
    approx(bk.laurent_norm(ann, -1), 2 * math.pi * math.log(2), 1e-12)
    assert bk.classify(ann)["kind"] == "not_minimal"
    assert bk.szego_zero_count(ann, 0.75 + 0j, nodes=256) == 1

    sol = bk.szego_kernel(disk, 0.5 + 0j, nodes=256)
    approx(sol.at_base(), 1.0 / (2 * math.pi * 0.75), 1e-10)
    approx(sol.value(0.2 + 0.1j), 1.0 / (2 * math.pi * (1 - (0.2 + 0.1j) * 0.5)), 1e-8)

    fit = bk.bergman_szego_fit(ann, 0.75 + 0j, bk.build_basis(ann, 30), nodes=256)
    assert len(fit["lambdas"]) == 1
    assert fit["holdout_residual"] < 1e-5

    rows = bk.sublevel_profile(disk, 0j, [-1.0, -2.0], rays=360)
    approx(rows[0]["ratio"], 1.0 / math.pi, 1e-8)
    approx(rows[1]["volume"], math.pi * math.exp(-4.0), 1e-8)

    t_star = (math.sqrt(5) - 1) / 2
    v = math.pi**2 * (t_star - t_star**2 / 2 - t_star**3 / 3)
    approx(bk.reinhardt.volume(), v, 1e-10)
    approx(bk.reinhardt.kernel_origin() * bk.reinhardt.volume(), 1.0, 1e-12)
    approx(bk.reinhardt.hessian_min_eig([0.0, 0.0, 1.0, 0.0]), 2.0, 1e-12)
    r1, r2, diff = bk.reinhardt.obstruction_roots()
    approx(r1, math.sqrt(3) - 1, 1e-12)
    approx(r2, t_star, 1e-12)
    assert diff > 0.1
    _, _, osc = bk.reinhardt.circle_constraint(cmath.sqrt(math.sqrt(3) - 1), 0.1 + 0j)
    approx(osc, 0.2, 1e-9)

    print("python smoke tests passed")


if __name__ == "__main__":
    main()
