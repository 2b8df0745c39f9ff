"""Bounding-pair data and their Johnson elements.

A SubsurfaceSpec is the homological shadow of one side of a bounding
pair: the boundary class d together with a symplectic basis of the
side's genus, all pairings validated on construction.  The Johnson
element of a side is d wedged with the side's pairing form; for the
full bounding pair the primitive projection is the invariant that the
two sides must agree on.
"""

from __future__ import annotations

from fractions import Fraction

from .exterior import (Multivector, SymplecticSpace, Vector, delta,
                       intersection, project_primitive, wedge)
from .forms import Transvection
from .linalg import mat_mul


class InvalidSubsurface(ValueError):
    """A pairing constraint on subsurface data failed."""


class InvalidBoundingPair(ValueError):
    """The two sides of a bounding pair do not fit together."""


class JohnsonIdentityError(ValueError):
    """The two sides' Johnson elements do not differ by d ^ delta.

    Raised by johnson_bp when per-side data is individually consistent
    but no surface decomposition can realize both sides at once.
    """


class SubsurfaceSpec:
    """Boundary class d plus symplectic basis pairs (e_i, f_i) of one side.

    Constraints checked exactly: e_i . f_j = 1 if i = j else 0,
    e_i . e_j = f_i . f_j = 0, d pairs to zero with everything listed,
    and d is nonzero.
    """

    __slots__ = ("space", "d", "pairs")

    def __init__(self, d: Vector, pairs):
        if not isinstance(d, Vector):
            raise TypeError("boundary class must be a Vector")
        if d.is_zero():
            raise InvalidSubsurface("boundary class d must be nonzero")
        pairs = tuple((e, f) for e, f in pairs)
        vecs = []
        for n, (e, f) in enumerate(pairs, start=1):
            for v, name in ((e, f"e{n}"), (f, f"f{n}")):
                if not isinstance(v, Vector) or v.space != d.space:
                    raise InvalidSubsurface(f"{name} must be a Vector in the same space as d")
                vecs.append((name, v))
        for n, (e, f) in enumerate(pairs, start=1):
            val = intersection(d, e)
            if val:
                raise InvalidSubsurface(f"d . e{n} = {val}, expected 0")
            val = intersection(d, f)
            if val:
                raise InvalidSubsurface(f"d . f{n} = {val}, expected 0")
        for i, (namex, x) in enumerate(vecs):
            for namey, y in vecs[i + 1:]:
                want = 1 if (namex[0], namey[0]) == ("e", "f") and namex[1:] == namey[1:] else 0
                val = intersection(x, y)
                if val != want:
                    raise InvalidSubsurface(f"{namex} . {namey} = {val}, expected {want}")
        self.space = d.space
        self.d = d
        self.pairs = pairs

    @property
    def genus(self) -> int:
        return len(self.pairs)

    def __repr__(self):
        return f"SubsurfaceSpec(genus={self.genus}, d={self.d!r})"

    def pairing_form(self) -> Multivector:
        """The 2-form sum of e_i ^ f_i over the side's pairs."""
        out = Multivector.zero(self.space, 2)
        for e, f in self.pairs:
            out = out + wedge(e, f)
        return out


class BoundingPairSpec:
    """Two subsurface sides with opposite boundary classes filling a closed surface."""

    __slots__ = ("space", "side1", "side2")

    def __init__(self, side1: SubsurfaceSpec, side2: SubsurfaceSpec):
        if side1.space != side2.space:
            raise InvalidBoundingPair("sides live in different spaces")
        if not (side1.d + side2.d).is_zero():
            raise InvalidBoundingPair("side2 boundary must be the negative of side1's")
        g = side1.space.genus
        if side1.genus + side2.genus + 1 != g:
            raise InvalidBoundingPair(
                f"side genera {side1.genus} + {side2.genus} + 1 != ambient genus {g}")
        self.space = side1.space
        self.side1 = side1
        self.side2 = side2

    def __repr__(self):
        return (f"BoundingPairSpec(genus={self.space.genus}, "
                f"sides {self.side1.genus}+{self.side2.genus})")


def johnson_element(s: SubsurfaceSpec) -> Multivector:
    """Johnson element of one side: d ^ (sum of e_i ^ f_i).

    Invariant under symplectic respecification of the pairs and under
    shifts of any pair vector by a multiple of d.
    """
    return wedge(s.d, s.pairing_form()) if s.pairs else Multivector.zero(s.space, 3)


def johnson_bp(b: BoundingPairSpec) -> Multivector:
    """Primitive Johnson element of a bounding pair.

    Checks the cross-side identity j(side1) - j(side2) = d ^ delta
    before projecting; per-side constraints alone do not force it.
    """
    j1 = johnson_element(b.side1)
    j2 = johnson_element(b.side2)
    if j1 - j2 != wedge(b.side1.d, delta(b.space)):
        raise JohnsonIdentityError(
            "side data is inconsistent: j(side1) - j(side2) != d ^ delta")
    p1 = project_primitive(j1)
    p2 = project_primitive(j2)
    if p1 != p2:
        raise JohnsonIdentityError("sides project to different primitive elements")
    return p1


def bounding_pair_action_matrix(b: BoundingPairSpec) -> list[list[Fraction]]:
    """Matrix on the space of twist(d) composed with inverse twist(d').

    Always the identity: the two twists along homologous curves cancel
    on homology, which is the point of working with bounding pairs.
    """
    t1 = Transvection(b.side1.d)
    t2 = Transvection(b.side2.d)
    return mat_mul(t1.matrix(), t2.matrix(inverse=True))


class Fixture:
    """A named, ready-made configuration: space plus named objects."""

    __slots__ = ("name", "space", "vectors", "multivectors", "subsurfaces",
                 "pairs", "defaults")

    def __init__(self, name, space, vectors, multivectors, subsurfaces, pairs, defaults):
        self.name = name
        self.space = space
        self.vectors = dict(vectors)
        self.multivectors = dict(multivectors)
        self.subsurfaces = dict(subsurfaces)
        self.pairs = dict(pairs)
        self.defaults = dict(defaults)

    def __repr__(self):
        return f"Fixture({self.name!r}, genus={self.space.genus})"


def _fixture_paper_figure_1() -> Fixture:
    """Genus-3 bounding pair with one handle on each side.

    d = a1 and d' = -a1 split off sides carrying the (a2, b2) and
    (a3, b3) handles; the interesting top class is a2 ^ b1 ^ a3, an
    isotropic triple meeting both sides' curve systems.
    """
    space = SymplecticSpace(3)
    d = space.a(1)
    dprime = -d
    a, aprime = space.a(2), space.b(2)
    c, bvec = space.b(1), space.a(3)
    side1 = SubsurfaceSpec(d, [(a, aprime)])
    side2 = SubsurfaceSpec(dprime, [(space.a(3), space.b(3))])
    pair = BoundingPairSpec(side1, side2)
    top = wedge(a, c, bvec)
    j1 = johnson_element(side1)
    return Fixture(
        name="paper-figure-1",
        space=space,
        vectors={"d": d, "dprime": dprime, "a": a, "aprime": aprime,
                 "b": bvec, "c": c},
        multivectors={"top": top, "j1": j1},
        subsurfaces={"side1": side1, "side2": side2},
        pairs={"bp": pair},
        defaults={"pair": "bp", "top": "top", "subsurface": "side1",
                  "input": "j1", "form": "phi", "left": "j1", "right": "top"},
    )


def _fixture_genus4_split() -> Fixture:
    """Genus-4 bounding pair splitting two handles from one."""
    space = SymplecticSpace(4)
    d = space.a(1)
    side1 = SubsurfaceSpec(d, [(space.a(2), space.b(2)), (space.a(3), space.b(3))])
    side2 = SubsurfaceSpec(-d, [(space.a(4), space.b(4))])
    pair = BoundingPairSpec(side1, side2)
    top = wedge(space.a(2), space.b(1), space.a(4))
    j1 = johnson_element(side1)
    return Fixture(
        name="genus4-split",
        space=space,
        vectors={"d": d, "dprime": -d},
        multivectors={"top": top, "j1": j1},
        subsurfaces={"side1": side1, "side2": side2},
        pairs={"bp": pair},
        defaults={"pair": "bp", "top": "top", "subsurface": "side1",
                  "input": "j1", "form": "phi", "left": "j1", "right": "top"},
    )


_FIXTURE_BUILDERS = {
    "paper-figure-1": _fixture_paper_figure_1,
    "genus4-split": _fixture_genus4_split,
}

FIXTURE_NAMES = tuple(sorted(_FIXTURE_BUILDERS))


def builtin_fixture(name: str) -> Fixture:
    """Look up a named built-in configuration."""
    try:
        builder = _FIXTURE_BUILDERS[name]
    except KeyError:
        known = ", ".join(FIXTURE_NAMES)
        raise ValueError(f"unknown fixture {name!r}; known fixtures: {known}") from None
    return builder()
