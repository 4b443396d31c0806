"""Stratification of the stability parameter space of a curve tree.

A parameter is a pair (beta, omega) of divisor coordinate vectors.  The
forbidden locus consists of points where some root v has omega . v = 0
and beta . v integral.  Away from it, omega either misses every
reflection wall (an open chamber, labeled by the reflection group
element framing it) or lies on walls; framing the point into the closed
fundamental cone turns vanishing pairings into simple coordinates and
reads off one strip integer per vanishing coordinate.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from typing import Sequence, Tuple

from .charge import ComplexDivisor, strip_index
from .errors import DimensionMismatch, OnWall
from .lattice import Root, RootLattice, WeylElement
from .linalg import Vec, to_vec, vdot


@dataclass(frozen=True)
class AmpleChamber:
    """omega is regular; weyl maps the fundamental cone onto its chamber."""

    weyl: WeylElement

    kind = "ample_chamber"


@dataclass(frozen=True)
class WallStrip:
    """Exactly one framed simple pairing vanishes; strip counts beta there."""

    curve: int
    strip: int
    frame: WeylElement

    kind = "wall_strip"


@dataclass(frozen=True)
class DeepStratum:
    """Two or more framed simple pairings vanish at once."""

    vanishing: Tuple[int, ...]
    strips: Tuple[Tuple[int, int], ...]
    frame: WeylElement

    kind = "deep_stratum"


@dataclass(frozen=True)
class Forbidden:
    """The point lies on the integral hyperplane of the given root."""

    root: Root
    level: int

    kind = "forbidden"


StratumLabel = AmpleChamber | WallStrip | DeepStratum | Forbidden


def in_complement(lat: RootLattice, p: ComplexDivisor) -> bool:
    """True when no root has omega . v = 0 together with beta . v integral."""
    if p.n != lat.n:
        raise DimensionMismatch("parameter size differs from lattice rank")
    for r in lat.positive_roots():
        if vdot(p.omega, r.coords) == 0:
            if vdot(p.beta, r.coords).denominator == 1:
                return False
    return True


def ample_test(lat: RootLattice, omega: Sequence) -> bool:
    """Strict positivity against every simple curve class."""
    o = to_vec(omega)
    if len(o) != lat.n:
        raise DimensionMismatch("omega size differs from lattice rank")
    return all(x > 0 for x in o)


def _descend_to_dominant(lat: RootLattice, beta: Vec, omega: Vec):
    """Walk (beta, omega) into the closed fundamental cone.

    Repeatedly coreflects at a simple root pairing strictly negatively
    with omega.  Each step removes exactly one inversion, so the walk
    stops after at most the number of positive roots, and the resulting
    frame is the minimal one; coordinates that vanish are never touched.
    """
    b, o = beta, omega
    word = []
    guard = len(lat.positive_roots()) + 1
    for _ in range(guard):
        i = next((j + 1 for j, x in enumerate(o) if x < 0), None)
        if i is None:
            return lat.weyl_from_word(word), b, o
        e = lat.simple_root(i).coords
        b = lat.coreflect(e, b)
        o = lat.coreflect(e, o)
        word.append(i)
    raise AssertionError("descent walk failed to terminate")


def locate_weyl_chamber(lat: RootLattice, omega: Sequence):
    """Frame a regular omega: the unique (w, dominant representative).

    The dual action of w carries the representative back to omega.
    Raises OnWall when omega pairs to zero with some root.
    """
    o = to_vec(omega)
    if len(o) != lat.n:
        raise DimensionMismatch("omega size differs from lattice rank")
    for r in lat.positive_roots():
        if vdot(o, r.coords) == 0:
            raise OnWall(f"omega pairs to zero with root {r.coords}")
    w, _, dom = _descend_to_dominant(lat, o, o)
    return w, dom


def classify(lat: RootLattice, p: ComplexDivisor) -> StratumLabel:
    """Stratum label of a parameter point.

    Forbidden points are reported first, with the offending root.  For
    the rest the point is framed into the closed fundamental cone; no
    vanishing framed coordinate gives an open chamber, one gives a wall
    strip, several give a deep stratum with one strip integer each.
    """
    if p.n != lat.n:
        raise DimensionMismatch("parameter size differs from lattice rank")
    for r in lat.positive_roots():
        if vdot(p.omega, r.coords) == 0:
            level = vdot(p.beta, r.coords)
            if level.denominator == 1:
                return Forbidden(r, int(level))
    frame, fb, fo = _descend_to_dominant(lat, p.beta, p.omega)
    vanishing = tuple(j + 1 for j, x in enumerate(fo) if x == 0)
    if not vanishing:
        return AmpleChamber(frame)
    strips = tuple((i, strip_index(fb[i - 1])) for i in vanishing)
    if len(vanishing) == 1:
        return WallStrip(vanishing[0], strips[0][1], frame)
    return DeepStratum(vanishing, strips, frame)


def framed_point(label: StratumLabel, p: ComplexDivisor) -> ComplexDivisor:
    """Pull a point back through the frame recorded in its label."""
    if isinstance(label, Forbidden):
        raise OnWall("forbidden labels carry no frame")
    frame = label.weyl if isinstance(label, AmpleChamber) else label.frame
    return ComplexDivisor(frame.apply_dual_inverse(p.beta),
                          frame.apply_dual_inverse(p.omega))
