"""Exact exterior algebra over a standard symplectic rational vector space.

The space has dimension 2g with ordered basis a1..ag, b1..bg and the
standard pairing a_i . b_i = 1 = -(b_i . a_i).  Multivectors live in
degrees one to three only; degree four and up is refused rather than
half-supported.  All coefficients are Fraction, never float.

Sparse normal form: a multivector stores a map from strictly increasing
index tuples to nonzero coefficients, the sign of any slot permutation
absorbed into the coefficient, so equality is dict equality.
"""

from __future__ import annotations

import itertools
import re
from fractions import Fraction
from math import comb

from .linalg import independent_row_indices, rank_of_rows

_LABEL_RE = re.compile(r"^([ab])([1-9][0-9]*)$")


def as_rational(x) -> Fraction:
    """Coerce int / str / Fraction to Fraction, refusing floats."""
    if isinstance(x, float):
        raise TypeError("float coefficients are not allowed; use Fraction, int or 'p/q'")
    return Fraction(x)


class SymplecticSpace:
    """Dimension-2g rational vector space with its standard symplectic basis.

    Index convention: slot i holds a_{i+1} for i < g, slot g+i holds b_{i+1}.
    """

    __slots__ = ("genus", "dim")

    def __init__(self, genus: int):
        if not isinstance(genus, int) or isinstance(genus, bool):
            raise TypeError("genus must be an int")
        if genus < 2:
            raise ValueError("genus must be at least 2")
        self.genus = genus
        self.dim = 2 * genus

    def __eq__(self, other):
        return isinstance(other, SymplecticSpace) and other.genus == self.genus

    def __hash__(self):
        return hash(("SymplecticSpace", self.genus))

    def __repr__(self):
        return f"SymplecticSpace(genus={self.genus})"

    def label(self, i: int) -> str:
        if not 0 <= i < self.dim:
            raise ValueError(f"basis index {i} out of range for dimension {self.dim}")
        return f"a{i + 1}" if i < self.genus else f"b{i - self.genus + 1}"

    def labels(self) -> list[str]:
        return [self.label(i) for i in range(self.dim)]

    def index(self, label: str) -> int:
        m = _LABEL_RE.match(label)
        if m is None:
            raise ValueError(f"not a basis label: {label!r}")
        handle = int(m.group(2))
        if handle > self.genus:
            raise ValueError(f"label {label!r} out of range for genus {self.genus}")
        return handle - 1 if m.group(1) == "a" else self.genus + handle - 1

    def basis_pairing(self, i: int, j: int) -> int:
        """Intersection number of the i-th and j-th basis vectors."""
        if j == i + self.genus:
            return 1
        if i == j + self.genus:
            return -1
        return 0

    def basis_vector(self, i: int) -> Vector:
        coords = [Fraction(0)] * self.dim
        coords[i] = Fraction(1)
        return Vector(self, coords)

    def a(self, handle: int) -> Vector:
        """The handle-th a-basis vector, 1-indexed."""
        if not 1 <= handle <= self.genus:
            raise ValueError(f"handle {handle} out of range for genus {self.genus}")
        return self.basis_vector(handle - 1)

    def b(self, handle: int) -> Vector:
        """The handle-th b-basis vector, 1-indexed."""
        if not 1 <= handle <= self.genus:
            raise ValueError(f"handle {handle} out of range for genus {self.genus}")
        return self.basis_vector(self.genus + handle - 1)

    def vector(self, coords) -> Vector:
        return Vector(self, coords)

    def zero_vector(self) -> Vector:
        return Vector(self, [Fraction(0)] * self.dim)

    def basis_tuples(self, degree: int) -> list[tuple[int, ...]]:
        """All strictly increasing index tuples of the given degree, lexicographic."""
        return list(itertools.combinations(range(self.dim), degree))


class Vector:
    """Degree-one element, stored densely."""

    __slots__ = ("space", "coords")

    def __init__(self, space: SymplecticSpace, coords):
        coords = tuple(as_rational(c) for c in coords)
        if len(coords) != space.dim:
            raise ValueError(f"expected {space.dim} coordinates, got {len(coords)}")
        self.space = space
        self.coords = coords

    def __eq__(self, other):
        return (isinstance(other, Vector) and other.space == self.space
                and other.coords == self.coords)

    def __hash__(self):
        return hash((self.space, self.coords))

    def __add__(self, other):
        _same_space(self, other, Vector)
        return Vector(self.space, [x + y for x, y in zip(self.coords, other.coords)])

    def __sub__(self, other):
        _same_space(self, other, Vector)
        return Vector(self.space, [x - y for x, y in zip(self.coords, other.coords)])

    def __neg__(self):
        return Vector(self.space, [-x for x in self.coords])

    def __rmul__(self, scalar):
        s = as_rational(scalar)
        return Vector(self.space, [s * x for x in self.coords])

    def __repr__(self):
        body = ", ".join(str(c) for c in self.coords)
        return f"Vector(g={self.space.genus}; {body})"

    def is_zero(self) -> bool:
        return all(c == 0 for c in self.coords)

    def to_multivector(self) -> Multivector:
        terms = {(i,): c for i, c in enumerate(self.coords) if c}
        return Multivector(self.space, 1, terms)


class Multivector:
    """Sparse element of the degree-k exterior power, k in {1, 2, 3}."""

    __slots__ = ("space", "degree", "terms")

    def __init__(self, space: SymplecticSpace, degree: int, terms=None):
        if degree not in (1, 2, 3):
            raise ValueError(f"degree must be 1, 2 or 3, got {degree}")
        normal: dict[tuple[int, ...], Fraction] = {}
        for indices, coeff in (terms or {}).items():
            indices = tuple(indices)
            if len(indices) != degree:
                raise ValueError(f"term {indices} has wrong arity for degree {degree}")
            for i in indices:
                if not 0 <= i < space.dim:
                    raise ValueError(f"basis index {i} out of range for dimension {space.dim}")
            if len(set(indices)) < degree:
                continue  # repeated slot, the term is zero
            sign, key = _sort_with_sign(indices)
            c = normal.get(key, Fraction(0)) + sign * as_rational(coeff)
            if c:
                normal[key] = c
            else:
                normal.pop(key, None)
        self.space = space
        self.degree = degree
        self.terms = normal

    @classmethod
    def zero(cls, space: SymplecticSpace, degree: int) -> Multivector:
        return cls(space, degree, {})

    @classmethod
    def basis(cls, space: SymplecticSpace, indices) -> Multivector:
        indices = tuple(indices)
        return cls(space, len(indices), {indices: Fraction(1)})

    def __eq__(self, other):
        return (isinstance(other, Multivector) and other.space == self.space
                and other.degree == self.degree and other.terms == self.terms)

    def __hash__(self):
        return hash((self.space, self.degree, tuple(sorted(self.terms.items()))))

    def __add__(self, other):
        _same_space(self, other, Multivector)
        if other.degree != self.degree:
            raise ValueError(f"cannot add degrees {self.degree} and {other.degree}")
        terms = dict(self.terms)
        for key, c in other.terms.items():
            s = terms.get(key, Fraction(0)) + c
            if s:
                terms[key] = s
            else:
                terms.pop(key, None)
        return Multivector(self.space, self.degree, terms)

    def __sub__(self, other):
        return self + (-other)

    def __neg__(self):
        return Multivector(self.space, self.degree,
                           {k: -c for k, c in self.terms.items()})

    def __rmul__(self, scalar):
        s = as_rational(scalar)
        if not s:
            return Multivector.zero(self.space, self.degree)
        return Multivector(self.space, self.degree,
                           {k: s * c for k, c in self.terms.items()})

    def __repr__(self):
        if not self.terms:
            return f"Multivector(g={self.space.genus}, deg={self.degree}, 0)"
        body = " ".join(f"{c}*{'^'.join(self.space.label(i) for i in k)}"
                        for k, c in sorted(self.terms.items()))
        return f"Multivector(g={self.space.genus}, deg={self.degree}, {body})"

    def is_zero(self) -> bool:
        return not self.terms

    def support(self) -> list[tuple[int, ...]]:
        return sorted(self.terms)

    def coefficient(self, indices) -> Fraction:
        """Coefficient of the given index tuple, any slot order."""
        indices = tuple(indices)
        if len(set(indices)) < len(indices):
            return Fraction(0)
        sign, key = _sort_with_sign(indices)
        return sign * self.terms.get(key, Fraction(0))

    def to_vector(self) -> Vector:
        if self.degree != 1:
            raise ValueError(f"cannot view a degree-{self.degree} multivector as a vector")
        coords = [Fraction(0)] * self.space.dim
        for (i,), c in self.terms.items():
            coords[i] = c
        return Vector(self.space, coords)

    def dense(self) -> list[Fraction]:
        """Coefficients over the lexicographic basis-tuple order of this degree."""
        return [self.terms.get(t, Fraction(0)) for t in self.space.basis_tuples(self.degree)]


class Sym2Element:
    """Sparse element of the symmetric square; keys are pairs (i, j) with i <= j."""

    __slots__ = ("space", "terms")

    def __init__(self, space: SymplecticSpace, terms=None):
        normal: dict[tuple[int, int], Fraction] = {}
        for key, coeff in (terms or {}).items():
            i, j = key
            if not (0 <= i < space.dim and 0 <= j < space.dim):
                raise ValueError(f"basis index pair {key} out of range")
            if i > j:
                i, j = j, i
            c = normal.get((i, j), Fraction(0)) + as_rational(coeff)
            if c:
                normal[(i, j)] = c
            else:
                normal.pop((i, j), None)
        self.space = space
        self.terms = normal

    @classmethod
    def zero(cls, space: SymplecticSpace) -> Sym2Element:
        return cls(space, {})

    def __eq__(self, other):
        return (isinstance(other, Sym2Element) and other.space == self.space
                and other.terms == self.terms)

    def __hash__(self):
        return hash((self.space, tuple(sorted(self.terms.items()))))

    def __add__(self, other):
        _same_space(self, other, Sym2Element)
        terms = dict(self.terms)
        for key, c in other.terms.items():
            s = terms.get(key, Fraction(0)) + c
            if s:
                terms[key] = s
            else:
                terms.pop(key, None)
        return Sym2Element(self.space, terms)

    def __sub__(self, other):
        return self + (-other)

    def __neg__(self):
        return Sym2Element(self.space, {k: -c for k, c in self.terms.items()})

    def __rmul__(self, scalar):
        s = as_rational(scalar)
        if not s:
            return Sym2Element.zero(self.space)
        return Sym2Element(self.space, {k: s * c for k, c in self.terms.items()})

    def __repr__(self):
        if not self.terms:
            return f"Sym2Element(g={self.space.genus}, 0)"
        body = " ".join(
            f"{c}*{self.space.label(i)}.{self.space.label(j)}"
            for (i, j), c in sorted(self.terms.items()))
        return f"Sym2Element(g={self.space.genus}, {body})"

    def is_zero(self) -> bool:
        return not self.terms


def _same_space(x, y, cls):
    if not isinstance(y, cls):
        raise TypeError(f"expected {cls.__name__}, got {type(y).__name__}")
    if y.space != x.space:
        raise ValueError(f"space mismatch: genus {x.space.genus} vs {y.space.genus}")


def _sort_with_sign(indices: tuple[int, ...]) -> tuple[int, tuple[int, ...]]:
    """Sort an index tuple, returning the permutation sign and the sorted tuple."""
    order = sorted(indices)
    inversions = sum(1 for p, q in itertools.combinations(indices, 2) if p > q)
    return (-1) ** inversions, tuple(order)


def intersection(u: Vector, v: Vector) -> Fraction:
    """Intersection pairing u . v in the standard basis."""
    _same_space(u, v, Vector)
    g = u.space.genus
    total = Fraction(0)
    for i in range(g):
        total += u.coords[i] * v.coords[g + i] - u.coords[g + i] * v.coords[i]
    return total


def sym_product(u: Vector, v: Vector) -> Sym2Element:
    """Symmetric product uv in the symmetric square."""
    _same_space(u, v, Vector)
    terms: dict[tuple[int, int], Fraction] = {}
    for i, x in enumerate(u.coords):
        if not x:
            continue
        for j, y in enumerate(v.coords):
            if not y:
                continue
            key = (i, j) if i <= j else (j, i)
            terms[key] = terms.get(key, Fraction(0)) + x * y
    return Sym2Element(u.space, terms)


def delta(space: SymplecticSpace) -> Multivector:
    """The pairing-representative 2-form sum of a_i ^ b_i."""
    g = space.genus
    return Multivector(space, 2, {(i, g + i): Fraction(1) for i in range(g)})


def _as_multivector(x) -> Multivector:
    if isinstance(x, Vector):
        return x.to_multivector()
    if isinstance(x, Multivector):
        return x
    raise TypeError(f"expected Vector or Multivector, got {type(x).__name__}")


def wedge(x, y, *more) -> Multivector:
    """Wedge product; accepts Vector or Multivector factors, total degree <= 3."""
    if more:
        out = wedge(x, y)
        for z in more:
            out = wedge(out, z)
        return out
    x, y = _as_multivector(x), _as_multivector(y)
    _same_space(x, y, Multivector)
    degree = x.degree + y.degree
    if degree > 3:
        raise ValueError(f"degree overflow: {x.degree} + {y.degree} > 3")
    terms: dict[tuple[int, ...], Fraction] = {}
    for s, c in x.terms.items():
        for t, d in y.terms.items():
            if set(s) & set(t):
                continue
            # both factors sorted, so the merge sign counts crossings only
            crossings = sum(1 for p in s for q in t if p > q)
            sign = (-1) ** crossings
            key = tuple(sorted(s + t))
            v = terms.get(key, Fraction(0)) + sign * c * d
            if v:
                terms[key] = v
            else:
                terms.pop(key, None)
    return Multivector(x.space, degree, terms)


def contraction3(x: Multivector) -> Vector:
    """Cyclic contraction of a 3-form with the pairing.

    On a decomposable u0^u1^u2 this is the sum over i in Z/3 of
    (u_i . u_{i+1}) u_{i+2}, extended linearly.
    """
    if not isinstance(x, Multivector) or x.degree != 3:
        raise ValueError("contraction3 expects a degree-3 multivector")
    space = x.space
    coords = [Fraction(0)] * space.dim
    for (i, j, k), c in x.terms.items():
        pij = space.basis_pairing(i, j)
        if pij:
            coords[k] += c * pij
        pjk = space.basis_pairing(j, k)
        if pjk:
            coords[i] += c * pjk
        pki = space.basis_pairing(k, i)
        if pki:
            coords[j] += c * pki
    return Vector(space, coords)


def project_primitive(x: Multivector) -> Multivector:
    """Projection onto the primitive summand of the third exterior power.

    Kills delta ^ V and fixes the kernel of contraction3; the constant
    1/(g-1) is forced by contraction3(delta ^ v) = (g-1) v.
    """
    c = contraction3(x)
    if c.is_zero():
        return x
    scale = Fraction(1, x.space.genus - 1)
    return x - scale * wedge(delta(x.space), c)


def is_primitive(x: Multivector) -> bool:
    """True when the cyclic contraction of x vanishes."""
    return contraction3(x).is_zero()


def primitive_rank_two_ways(space: SymplecticSpace) -> tuple[int, int]:
    """Dimension of the primitive summand, computed two independent ways.

    First as the exact rank of the projector's image on all basis
    3-forms, then as the exact rank of the span of wedges of
    pairwise-isotropic triples built from basis vectors and two-term
    sums of them.  Neither computation assumes the other's answer.
    """
    projector_rows = [project_primitive(Multivector.basis(space, t)).dense()
                      for t in space.basis_tuples(3)]
    isotropic_rows = [w.dense() for w in isotropic_spanning_wedges(space)]
    return rank_of_rows(projector_rows), rank_of_rows(isotropic_rows)


def primitive_rank(space: SymplecticSpace) -> int:
    """Dimension of the primitive summand; both internal computations must agree."""
    r1, r2 = primitive_rank_two_ways(space)
    expected = comb(space.dim, 3) - space.dim
    if not (r1 == r2 == expected):
        raise RuntimeError(
            f"primitive rank computations disagree: projector {r1}, "
            f"isotropic span {r2}, dimension count {expected}")
    return r1


def isotropic_spanning_wedges(space: SymplecticSpace) -> list[Multivector]:
    """Wedges of pairwise-isotropic triples that span the primitive summand.

    Two families: basis triples containing no a_i, b_i pair, and
    (a_i + a_j) ^ (b_i - b_j) ^ e_k with the handles i, j distinct from
    e_k's handle.  Every member is isotropic, hence primitive.
    """
    g = space.genus
    out: list[Multivector] = []
    for t in space.basis_tuples(3):
        if any(space.basis_pairing(p, q) for p, q in itertools.combinations(t, 2)):
            continue
        out.append(Multivector.basis(space, t))
    for k in range(space.dim):
        handle = k % g
        others = [h for h in range(g) if h != handle]
        for i, j in itertools.combinations(others, 2):
            u = space.basis_vector(i) + space.basis_vector(j)
            v = space.basis_vector(g + i) - space.basis_vector(g + j)
            out.append(wedge(u, v, space.basis_vector(k)))
    return out


def primitive_basis(space: SymplecticSpace) -> list[Multivector]:
    """A basis of the primitive summand, extracted from projector images."""
    images = [project_primitive(Multivector.basis(space, t))
              for t in space.basis_tuples(3)]
    rows = [x.dense() for x in images]
    return [images[i] for i in independent_row_indices(rows)]
