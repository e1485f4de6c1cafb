"""Formula-vs-solver verification suites.

Each suite runs surface-charge solves against the closed-form predictions
and returns a list of Check records (target, computed, tolerance, pass).
The solver side of every pairing was validated independently against
exact references (round coax, conformal strip integrals, prolate-spheroid
capacitance), so these suites measure the quality of the fits as much as
the solver.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np
from scipy.integrate import quad

from .. import analytic
from .. import _kernels as kern
from ..constants import EPS0
from ..special import ck_ratio
from . import mesh as meshes
from .solver import metal_surface_energy, solve, substrate_line_energy

SUITES = ("coax", "flat-coax", "corner", "ribbon-ground", "cyl-wire", "flat-wire")


@dataclass(frozen=True)
class Check:
    name: str
    target: float
    computed: float
    tol: float        # |computed - target| <= tol passes
    passed: bool
    note: str = ""


def _rel(name, computed, target, tol, note="") -> Check:
    err = abs(computed / target - 1.0)
    return Check(name, target, computed, tol, err <= tol, note)


def _abs(name, computed, target, tol, note="") -> Check:
    return Check(name, target, computed, tol, abs(computed - target) <= tol, note)


# --------------------------------------------------------------------------

def suite_coax(mesh_scale: float = 1.0) -> list[Check]:
    """Gold standard: round coax capacitance against 2*pi*eps/ln(R/r)."""
    r, radius_out = 10e-6, 100e-6
    n_in = int(400 * mesh_scale)
    n_out = int(1200 * mesh_scale)
    c_exact = 2.0 * math.pi * EPS0 / math.log(radius_out / r)

    def solve_coax(ni, no):
        m = meshes.concat("planar", [meshes.circle(r, ni, electrode=0, side="inner"),
                                     meshes.circle(radius_out, no, electrode=1,
                                                   side="shield")])
        m.thin_sheet = False
        return solve(m, {0: 1.0, 1: 0.0})

    sol = solve_coax(n_in, n_out)
    c_bem = sol.charge_of(0)
    checks = [_rel("coax capacitance vs closed form", c_bem, c_exact, 5e-3)]

    sym = np.max(np.abs(kern.planar_matrix(sol.mesh.pos[:, 0], sol.mesh.pos[:, 1],
                                           sol.mesh.width)
                        - kern.planar_matrix(sol.mesh.pos[:, 0], sol.mesh.pos[:, 1],
                                             sol.mesh.width).T))
    checks.append(_abs("potential matrix symmetry", sym, 0.0, 1e-12))

    c2 = solve_coax(2 * n_in, 2 * n_out).charge_of(0)
    checks.append(_rel("mesh-doubling capacitance drift", c2, c_bem, 5e-3))
    return checks


def suite_flat_coax(mesh_scale: float = 1.0) -> list[Check]:
    """Thin-film coax: surface fields and metal energy vs the conformal form."""
    rbar, shield, t = 10e-6, 100e-6, 0.1e-6
    strip = meshes.thin_strip(-rbar, rbar, t / (20 * mesh_scale), 1e-6,
                              electrode=0, side="metal")
    outer = meshes.circle(shield, int(1000 * mesh_scale), electrode=1)
    m = meshes.concat("planar", [strip, outer])
    m.thin_sheet = True
    # the shield is a closed solid contour; keep only the strip thin
    sol = solve(m, {0: 1.0, 1: 0.0})

    n_strip = strip.n
    x = m.pos[:n_strip, 0]
    e_bem = np.abs(sol.charge[:n_strip] / m.width[:n_strip]) / (2.0 * EPS0)
    inside = np.abs(x) < rbar - t / 2
    e_th = analytic.flat_coax_field(x[inside], rbar, shield)
    err_metal = float(np.max(np.abs(e_bem[inside] / e_th - 1.0)))
    checks = [_abs("metal surface field max rel err (beyond t/2)", err_metal,
                   0.0, 0.03)]

    xs = rbar + np.geomspace(t / 2, 0.5 * shield - rbar, 80)
    ex, ey = sol.field_at(xs, np.zeros_like(xs))
    e_sub = np.hypot(ex, ey)
    err_sub = float(np.max(np.abs(e_sub / analytic.flat_coax_field(xs, rbar, shield)
                                  - 1.0)))
    checks.append(_abs("substrate field max rel err (t/2 .. R/2)", err_sub,
                       0.0, 0.03))

    u_bem = metal_surface_energy(sol, cutoff=t / 2, electrodes=[0])
    ef = analytic.flat_coax_center_field(rbar, shield)
    u_th = EPS0 * ef**2 * rbar * math.log(4 * rbar / t)   # thin film: c = 0
    checks.append(_rel("metal surface energy vs log form (c=0)",
                       u_bem / EPS0, u_th / EPS0, 0.03))

    vint, _ = quad(lambda xx: analytic.flat_coax_field(xx, rbar, shield),
                   rbar * (1 + 1e-12), shield, points=[rbar * 1.001], limit=200)
    checks.append(_abs("voltage integral of the flat-coax field", vint, 1.0,
                       (rbar / shield) ** 2))
    return checks


# --------------------------------------------------------------------------

def extract_corner_constants(rbar: float, shield: float, t: float,
                             edge: str = "square", mesh_scale: float = 1.0
                             ) -> tuple[float, float]:
    """(c_m, c_s) for one film thickness by inverting the edge-energy forms.

    The metal constant uses two mesh refinements and Richardson
    extrapolation in h^(1/3) (the corner power-law convergence rate); the
    substrate constant integrates the midplane field, which is finite at
    the film face, and uses the finer mesh directly.
    """
    def one(hfac: float):
        h_min = t / hfac
        film = meshes.film_cross_section(rbar, t, h_min, rbar / 40, edge=edge,
                                         electrode=0)
        outer = meshes.circle(shield, int(900 * mesh_scale), electrode=1)
        m = meshes.concat("planar", [film, outer])
        m.thin_sheet = False
        sol = solve(m, {0: 1.0, 1: 0.0})
        ef = analytic.flat_coax_center_field(rbar, shield)
        u_m = metal_surface_energy(sol, electrodes=[0])
        c_m = u_m / (EPS0 * ef**2 * rbar) - math.log(4 * rbar / t)
        smin = h_min / 2
        s = np.geomspace(smin, shield - rbar - 1e-9, 600)
        xs = rbar + s
        ex, ey = sol.field_at(xs, np.zeros_like(xs))
        e2 = ex**2 + ey**2
        integral = float(np.trapezoid(e2, xs)) + float(e2[0]) * smin
        u_s = 0.5 * EPS0 * 2.0 * integral
        c_s = u_s / (EPS0 * ef**2 * rbar / 2) - math.log(4 * rbar / t) \
            + 2 * rbar / shield
        return c_m, c_s

    c1 = one(40 * mesh_scale)
    c2 = one(80 * mesh_scale)
    ratio = 2.0 ** (1.0 / 3.0)
    c_m = (c2[0] * ratio - c1[0]) / (ratio - 1.0)
    return c_m, c2[1]


def corner_constant_curves(t_over_rbar, edge: str = "square",
                           mesh_scale: float = 1.0):
    """(c_m, c_s) arrays over a film-thickness sweep at rbar=10um, R=100um."""
    rbar, shield = 10e-6, 100e-6
    out = [extract_corner_constants(rbar, shield, trb * rbar, edge, mesh_scale)
           for trb in t_over_rbar]
    arr = np.array(out)
    return arr[:, 0], arr[:, 1]


DEFAULT_T_OVER_RBAR = (0.02, 0.05, 0.1, 0.2, 0.35, 0.5)


def suite_corner(mesh_scale: float = 1.0) -> list[Check]:
    """Extract the corner corrections over thickness; compare edge styles."""
    cm_sq, cs_sq = corner_constant_curves(DEFAULT_T_OVER_RBAR, "square", mesh_scale)
    cm_semi, _ = corner_constant_curves(DEFAULT_T_OVER_RBAR, "semicircle",
                                        mesh_scale)
    worst_cm = cm_sq[np.argmax(np.abs(cm_sq - 5.0))]
    worst_cs = cs_sq[np.argmax(np.abs(cs_sq - 1.6))]
    diff = float(np.max(cm_semi - cm_sq))
    return [
        _abs("square-edge c_m over t/rbar sweep", float(worst_cm), 5.0, 0.5),
        _abs("square-edge c_s over t/rbar sweep", float(worst_cs), 1.6, 0.3),
        _abs("c_m variation across sweep", float(cm_sq.max() - cm_sq.min()),
             0.0, 0.6, note="slowly varying"),
        Check("semicircular-edge c_m strictly below square", 0.0, diff, 0.0,
              diff < 0.0, note="rounded edges lower the correction"),
    ]


# --------------------------------------------------------------------------

def _rwg_mesh(a, b, c_gnd, t, h_edge, h_max, extent):
    strips = [
        meshes.thin_strip(a, b, h_edge, h_max, electrode=0, side="ribbon+",
                          cutoff=t / 2),
        meshes.thin_strip(-b, -a, h_edge, h_max, electrode=1, side="ribbon-",
                          cutoff=t / 2),
    ]
    if c_gnd is not None:
        strips.append(meshes.thin_strip(c_gnd, c_gnd + extent, h_edge,
                                        extent / 30, electrode=2, side="ground",
                                        cutoff=t / 2))
        strips.append(meshes.thin_strip(-c_gnd - extent, -c_gnd, h_edge,
                                        extent / 30, electrode=3, side="ground",
                                        cutoff=t / 2))
    m = meshes.concat("planar", strips)
    m.thin_sheet = True
    return m


def ribbon_ground_point(a, b, c_gnd, t, mesh_scale: float = 1.0):
    """One solve: returns (C, U_metal, U_substrate) per unit length, V = 1."""
    h_edge = 4e-9 / mesh_scale
    h_max = (b - a) / (60 * mesh_scale)
    extent = 20 * b
    m = _rwg_mesh(a, b, c_gnd, t, h_edge, h_max, extent)
    volts = {0: 0.5, 1: -0.5}
    if c_gnd is not None:
        volts.update({2: 0.0, 3: 0.0})
    sol = solve(m, volts)
    cap = sol.charge_of(0)
    u_m = metal_surface_energy(sol, cutoff=t / 2)
    # inner gap once; the outer gap doubled for the left/right symmetry
    outer_span = (b, c_gnd) if c_gnd is not None else (b, math.inf)
    u_s = substrate_line_energy(sol, [(-a, a)], cutoff=t / 2)
    u_s += 2.0 * substrate_line_energy(sol, [outer_span], cutoff=t / 2)
    return cap, u_m, u_s


RWG_GAPS = (0.1, 0.3, 1.0, 3.0)
RWG_A = (25e-6, 50e-6, 70e-6)


def suite_ribbon_ground(mesh_scale: float = 1.0) -> list[Check]:
    """Plain ribbon against the conformal capacitance, then the ground-plane
    sweep against the fitted capacitance and surface-loss forms (c = 0)."""
    b, t = 100e-6, 0.1e-6
    checks = []

    a = 50e-6
    cap, u_m, u_s = ribbon_ground_point(a, b, None, t, mesh_scale)
    c_exact = EPS0 / ck_ratio(a / b)      # vacuum convention
    checks.append(_rel("plain ribbon capacitance vs conformal", cap, c_exact, 0.01))
    k = analytic.ellipk((a / b) ** 2)
    u_m_th = EPS0 * analytic.surface_sum(a, b, t, 0.0) / (2 * k * k * a)
    u_s_th = EPS0 * analytic.surface_sum(a, b, t, 0.0) / (4 * k * k * a)
    checks.append(_rel("plain ribbon metal energy vs conformal", u_m, u_m_th, 0.02))
    checks.append(_rel("plain ribbon substrate energy vs conformal", u_s, u_s_th,
                       0.02))

    errs_c, errs_m, errs_s = [], [], []
    for a in RWG_A:
        k = analytic.ellipk((a / b) ** 2)
        for g in RWG_GAPS:
            c_gnd = b * (1 + g)
            cap, u_m, u_s = ribbon_ground_point(a, b, c_gnd, t, mesh_scale)
            spec = analytic.RibbonWithGround(a, b, c_gnd, 1.0, t)
            stack_vac = analytic.DielectricStack(eps_s=1.0)
            c_fit = analytic.ribbon_ground_capacitance(spec, stack_vac)
            kp_bc = analytic.ellipkp((b / c_gnd) ** 2)
            u_m_fit = EPS0 * (0.98 * analytic.surface_sum(a, b, t, 0) / (2 * k * k * a)
                              + 1.70 * analytic.surface_sum_outer(b, c_gnd, t, 0)
                              / (2 * kp_bc * kp_bc * b))
            u_s_fit = EPS0 * (0.95 * analytic.surface_sum(a, b, t, 0) / (4 * k * k * a)
                              + 0.80 * analytic.surface_sum(b, c_gnd, t, 0)
                              / (4 * kp_bc * kp_bc * b))
            errs_c.append(abs(cap / c_fit - 1.0))
            errs_m.append(abs(u_m / u_m_fit - 1.0))
            errs_s.append(abs(u_s / u_s_fit - 1.0))
    checks.append(_abs("capacitance fit max rel err over sweep",
                       float(max(errs_c)), 0.0, 0.05))
    checks.append(_abs("metal loss fit max rel err over sweep",
                       float(max(errs_m)), 0.0, 0.05))
    checks.append(_abs("substrate loss fit max rel err over sweep",
                       float(max(errs_s)), 0.0, 0.05))
    return checks


# --------------------------------------------------------------------------

def wire_field_profile(d: float, r0: float, slope: float = 0.0,
                       mesh_scale: float = 1.0, flat: bool = False):
    """Solve a differential wire pair; returns (y, E/V, E_formula/V)."""
    if flat:
        rf = (lambda y: analytic.taper_halfwidth(y, r0, slope, r0))  \
            if slope else (lambda y: np.full_like(y, r0))
        m = meshes.wire_strip(d, rf, y0=r0 / 5, n=int(280 * mesh_scale))
        sol = solve(m, {0: 0.5}, mirror=True)
        y = m.pos[:, 0]
        e = sol.surface_field()
        e_th = analytic.wire_field(y, m.halfwidth, flat=True)
        return y, e, e_th
    # round wire: straight radius r0, or the pure cone r = S*y of the
    # tapered-field verification
    rf = (lambda y: slope * y) if slope else (lambda y: np.full_like(y, r0))
    m = meshes.wire_rings(d, rf, y0=r0 / 5, n=int(340 * mesh_scale))
    sol = solve(m, {0: 0.5}, mirror=True)
    y = m.pos[:, 0]
    e = sol.surface_field()
    e_th = analytic.wire_field(y, m.pos[:, 1], flat=False)
    return y, e, e_th


def suite_cyl_wire(mesh_scale: float = 1.0) -> list[Check]:
    """Round junction wire: ring-kernel solve vs the coax-like field form."""
    r0, d = 0.1e-6, 100e-6
    checks = []
    for slope, tag in ((0.0, "straight"), (0.2, "tapered S=0.2")):
        y, e, e_th = wire_field_profile(d, r0, slope, mesh_scale)
        win = (y >= 2 * r0) & (y <= 0.9 * d)
        err = float(np.max(np.abs(e[win] / e_th[win] - 1.0)))
        checks.append(_abs(f"{tag} field max rel err over [2r, 0.9d]", err,
                           0.0, 0.05, note="end uptick is outside the formula"))
        core = (y >= 2 * r0) & (y <= 0.25 * d)
        err_core = float(np.max(np.abs(e[core] / e_th[core] - 1.0)))
        checks.append(_abs(f"{tag} field max rel err over [2r, 0.25d]", err_core,
                           0.0, 0.05))
    # capacitance of the straight pair vs the fitted form (vacuum convention)
    d2 = 50e-6
    m = meshes.wire_rings(d2, lambda y: np.full_like(y, r0), y0=r0 / 5,
                          n=int(340 * mesh_scale))
    sol = solve(m, {0: 0.5}, mirror=True)
    c_fit = 4.1 * EPS0 * d2 / math.log(d2 / r0)
    checks.append(_rel("straight wire capacitance vs 4.1 fit",
                       sol.capacitance, c_fit, 0.07))
    # far-field limit of the ring kernel
    far = kern.ring_mutual([0.0], [1e-7], [1.0], [1e-7])[0, 0]
    checks.append(_rel("ring kernel far-field 1/(4 pi eps rho)", far,
                       1.0 / (4 * math.pi * EPS0), 1e-6))
    return checks


def suite_flat_wire(mesh_scale: float = 1.0) -> list[Check]:
    """Thin-film junction wire: strip-kernel solve vs the envelope formula."""
    r0, d = 0.1e-6, 50e-6
    y, e, e_th = wire_field_profile(d, r0, 0.0, mesh_scale, flat=True)
    win = (y >= 4 * r0) & (y <= 0.4 * d)
    err = float(np.max(np.abs(e[win] / e_th[win] - 1.0)))
    checks = [_abs("straight flat wire envelope max rel err [4r, 0.4d]", err,
                   0.0, 0.10)]
    # kernel relation: flat strip of halfwidth rbar == ring of radius rbar/2
    ys = np.array([0.3e-6, 1e-6, 7e-6])
    rb = np.full(3, 0.2e-6)
    mf = kern.flatwire_mutual(ys, np.zeros(3), rb)
    mr = kern.ring_mutual(ys, rb / 2, np.zeros(3), rb / 2)
    checks.append(_abs("flat kernel equals ring kernel at half radius",
                       float(np.max(np.abs(mf / mr - 1.0))), 0.0, 1e-12))
    far = kern.flatwire_mutual([0.0], [1.0], [1e-7])[0, 0]
    checks.append(_rel("flat kernel far-field 1/(4 pi eps y)", far,
                       1.0 / (4 * math.pi * EPS0), 1e-6))
    return checks


# --------------------------------------------------------------------------

_SUITE_FN = {
    "coax": suite_coax,
    "flat-coax": suite_flat_coax,
    "corner": suite_corner,
    "ribbon-ground": suite_ribbon_ground,
    "cyl-wire": suite_cyl_wire,
    "flat-wire": suite_flat_wire,
}


def run_suite(name: str, mesh_scale: float = 1.0) -> list[Check]:
    if name not in _SUITE_FN:
        raise KeyError(f"unknown suite {name!r}; choose from {', '.join(SUITES)}")
    return _SUITE_FN[name](mesh_scale)
