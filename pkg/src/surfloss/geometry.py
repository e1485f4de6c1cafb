"""Dielectric stacks, capacitor/wire geometry types, and design assembly.

Participation ratios are normalized by the qubit capacitance expressed as
a length L = C/eps0.  A design is a list of structures sharing one L;
capacitances add, and the total loss tangent is the sum of p_i*tan_i over
all structures and interfaces.
"""

from __future__ import annotations

from dataclasses import dataclass, replace
from typing import Optional, Union

from .constants import EPS0


class ValidationError(ValueError):
    """Carries the full list of collected validation problems."""

    def __init__(self, problems: list[str]):
        self.problems = list(problems)
        super().__init__("; ".join(self.problems))


@dataclass(frozen=True)
class DielectricStack:
    """Substrate and interface-oxide dielectric parameters (SI)."""

    eps_s: float = 11.7
    eps_ma: float = 9.8
    eps_ms: float = 9.8
    eps_sa: float = 3.8
    t_ma: float = 2e-9
    t_ms: float = 2e-9
    t_sa: float = 2e-9
    tan_ma: float = 0.0
    tan_ms: float = 0.0
    tan_sa: float = 0.0

    def validate(self) -> list[str]:
        bad = []
        for name in ("eps_s", "eps_ma", "eps_ms", "eps_sa"):
            if getattr(self, name) < 1.0:
                bad.append(f"stack.{name}: must be >= 1")
        for name in ("t_ma", "t_ms", "t_sa"):
            if getattr(self, name) <= 0.0:
                bad.append(f"stack.{name}: oxide thickness must be > 0")
        for name in ("tan_ma", "tan_ms", "tan_sa"):
            if getattr(self, name) < 0.0:
                bad.append(f"stack.{name}: loss tangent must be >= 0")
        return bad


def interface_weights(stack: DielectricStack) -> tuple[float, float, float]:
    """Dielectric weights (w_MA, w_MS, w_SA) multiplying the surface energies."""
    return (1.0 / stack.eps_ma, stack.eps_s**2 / stack.eps_ms, stack.eps_sa)


def capacitance_to_length(c: float) -> float:
    """L = C/eps0; expresses a capacitance as a design length."""
    if c <= 0.0:
        raise ValueError(f"capacitance must be > 0, got {c}")
    return c / EPS0


# --------------------------------------------------------------------------
# structure geometries (all lengths in meters)

@dataclass(frozen=True)
class ParallelPlate:
    """Differential pair of plates, each w x length at spacing s to ground."""

    s: float
    w: float
    length: float
    label: str = "parallel_plate"

    def validate(self) -> list[str]:
        bad = []
        if self.s <= 0: bad.append(f"{self.label}.s: must be > 0")
        if self.w <= 0: bad.append(f"{self.label}.w: must be > 0")
        if self.length <= 0: bad.append(f"{self.label}.length: must be > 0")
        if not bad and self.s > 0.5 * self.w:
            bad.append(f"{self.label}.s: plate model needs s << w")
        return bad


@dataclass(frozen=True)
class Ribbon:
    """Two differential strips spanning a..b from the centerline."""

    a: float
    b: float
    length: float
    t: float
    label: str = "ribbon"

    def validate(self) -> list[str]:
        bad = []
        if self.a <= 0: bad.append(f"{self.label}.a: must be > 0")
        if self.b <= self.a: bad.append(f"{self.label}.b: must exceed a")
        if self.length <= 0: bad.append(f"{self.label}.length: must be > 0")
        if not 0 < self.t < self.a:
            bad.append(f"{self.label}.t: need 0 < t < a")
        return bad


@dataclass(frozen=True)
class Coplanar:
    """Strip of half-width a against a ground plane beyond b."""

    a: float
    b: float
    length: float
    t: float
    single_ended: bool = False
    label: str = "coplanar"

    def validate(self) -> list[str]:
        bad = []
        if self.a <= 0: bad.append(f"{self.label}.a: must be > 0")
        if self.b <= self.a: bad.append(f"{self.label}.b: must exceed a")
        if self.length <= 0: bad.append(f"{self.label}.length: must be > 0")
        if not 0 < self.t < self.a:
            bad.append(f"{self.label}.t: need 0 < t < a")
        return bad


@dataclass(frozen=True)
class RibbonWithGround:
    """Differential ribbon with a surrounding ground plane beyond +-c."""

    a: float
    b: float
    c: float
    length: float
    t: float
    label: str = "ribbon_with_ground"

    def validate(self) -> list[str]:
        bad = []
        if self.a <= 0: bad.append(f"{self.label}.a: must be > 0")
        if self.b <= self.a: bad.append(f"{self.label}.b: must exceed a")
        if self.c <= self.b: bad.append(f"{self.label}.c: must exceed b")
        if self.length <= 0: bad.append(f"{self.label}.length: must be > 0")
        if not 0 < self.t < self.a:
            bad.append(f"{self.label}.t: need 0 < t < a")
        return bad


@dataclass(frozen=True)
class StraightWire:
    """Pair of junction leads, half-width r_bar, length d per side."""

    half_width: float
    d: float
    t: float
    label: str = "straight_wire"

    def validate(self) -> list[str]:
        bad = []
        if self.half_width <= 0: bad.append(f"{self.label}.half_width: must be > 0")
        if self.t <= 0: bad.append(f"{self.label}.t: must be > 0")
        if self.d <= 2 * self.half_width:
            bad.append(f"{self.label}.d: need d > 2*half_width")
        if self.t > 2 * self.half_width:
            bad.append(f"{self.label}.t: need t <= 2*half_width")
        return bad


#: largest taper slope; steeper tapers no longer reduce the edge field
MAX_TAPER_SLOPE = 0.45


@dataclass(frozen=True)
class TaperedWire:
    """Junction leads tapering as r(y) = max(r0, (y - 5t)*slope)."""

    r0: float
    slope: float
    d: float
    t: float
    label: str = "tapered_wire"

    def validate(self) -> list[str]:
        bad = []
        if self.r0 <= 0: bad.append(f"{self.label}.r0: must be > 0")
        if self.t <= 0: bad.append(f"{self.label}.t: must be > 0")
        if not 0.0 < self.slope <= MAX_TAPER_SLOPE:
            bad.append(f"{self.label}.slope: need 0 < slope <= {MAX_TAPER_SLOPE}")
        if self.d <= 5 * self.t:
            bad.append(f"{self.label}.d: need d > 5*t")
        return bad


StructureSpec = Union[ParallelPlate, Ribbon, Coplanar, RibbonWithGround,
                      StraightWire, TaperedWire]


@dataclass(frozen=True)
class ParticipationBreakdown:
    """Interface participation ratios of one structure at a shared L."""

    label: str
    p_ma: float
    p_ms: float
    p_sa: float
    capacitance: float
    loss_tangent: float = 0.0

    def with_loss(self, stack: DielectricStack) -> "ParticipationBreakdown":
        loss = (self.p_ma * stack.tan_ma + self.p_ms * stack.tan_ms
                + self.p_sa * stack.tan_sa)
        return replace(self, loss_tangent=loss)


@dataclass(frozen=True)
class DesignAssembly:
    """A multi-structure design resolved at a shared qubit capacitance."""

    structures: tuple
    breakdowns: tuple
    capacitance: float
    length: float            # L = C/eps0
    total_loss_tangent: float


def validate_design(structures, stack: DielectricStack) -> list[str]:
    problems = list(stack.validate())
    if not structures:
        problems.append("structures: list must not be empty")
    for s in structures:
        problems.extend(s.validate())
        t_metal = getattr(s, "t", None)
        if t_metal is not None and not s.validate():
            for name, tox in (("t_ma", stack.t_ma), ("t_ms", stack.t_ms),
                              ("t_sa", stack.t_sa)):
                if tox >= t_metal:
                    problems.append(
                        f"stack.{name}: oxide must be far thinner than "
                        f"{s.label} metal thickness")
    return problems


def assemble_design(structures, stack: DielectricStack,
                    target_capacitance: Optional[float] = None,
                    corner_split: bool = False) -> DesignAssembly:
    """Resolve a design: sum capacitances, fix L, evaluate every structure.

    With target_capacitance set, L comes from the target (the usual design
    convention where wires ride on a fixed qubit capacitance); otherwise all
    structure capacitances, wires included, sum into L.
    """
    from . import analytic   # deferred; analytic imports the types above

    problems = validate_design(structures, stack)
    if problems:
        raise ValidationError(problems)

    caps = [analytic.capacitance(s, stack) for s in structures]
    c_total = target_capacitance if target_capacitance is not None else sum(caps)
    if c_total <= 0:
        raise ValidationError(["targets.capacitance: resolved C must be > 0"])
    length = capacitance_to_length(c_total)

    breakdowns = []
    for s in structures:
        bd = analytic.participation(s, stack, length, corner_split=corner_split)
        breakdowns.append(bd.with_loss(stack))
    total_loss = sum(b.loss_tangent for b in breakdowns)
    return DesignAssembly(tuple(structures), tuple(breakdowns),
                          c_total, length, total_loss)
