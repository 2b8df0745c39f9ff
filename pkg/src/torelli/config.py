"""Line-oriented job configuration.

Format: `key = value` lines, `#` comments, blank lines ignored, and
`[kind name]` section headers for named objects.  Kinds: vector,
multivector, subsurface, boundingpair, plus a bare [args] section whose
keys are handed to the command.  Vectors and multivectors take either
`coeffs = ...` (dense, lexicographic basis-tuple order) or `expr = ...`
in the canonical text syntax.  Section bodies may reference previously
named objects and bare basis labels.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction

from .exterior import (Multivector, SymplecticSpace, Vector, as_rational)
from .johnson import (BoundingPairSpec, Fixture, InvalidBoundingPair,
                      InvalidSubsurface, SubsurfaceSpec, builtin_fixture)
from .render import ParseError, parse_multivector, parse_vector

_KINDS = ("vector", "multivector", "subsurface", "boundingpair", "args")
_TOP_KEYS = ("genus", "command", "seed", "kappa1", "kappa2")


class ConfigError(ValueError):
    """Malformed or inconsistent job configuration."""

    def __init__(self, message: str, line: int | None = None):
        self.line = line
        super().__init__(f"line {line}: {message}" if line is not None else message)


@dataclass
class JobConfig:
    """Everything a single CLI run needs, fully resolved."""

    genus: int | None = None
    command: str | None = None
    seed: int = 0
    kappa1: Fraction | None = None
    kappa2: Fraction | None = None
    space: SymplecticSpace | None = None
    vectors: dict[str, Vector] = field(default_factory=dict)
    multivectors: dict[str, Multivector] = field(default_factory=dict)
    subsurfaces: dict[str, SubsurfaceSpec] = field(default_factory=dict)
    pairs: dict[str, BoundingPairSpec] = field(default_factory=dict)
    args: dict[str, str] = field(default_factory=dict)

    def require_space(self) -> SymplecticSpace:
        if self.space is None:
            raise ConfigError("no genus given (set `genus = ...` or use a fixture)")
        return self.space


def config_from_fixture(name: str) -> JobConfig:
    """Seed a JobConfig with a built-in fixture's named objects."""
    fx: Fixture = builtin_fixture(name)
    cfg = JobConfig(genus=fx.space.genus, space=fx.space)
    cfg.vectors.update(fx.vectors)
    cfg.multivectors.update(fx.multivectors)
    cfg.subsurfaces.update(fx.subsurfaces)
    cfg.pairs.update(fx.pairs)
    cfg.args.update(fx.defaults)
    return cfg


def _split_sections(text: str):
    """Line pass: yields (None, key, value, lineno) and section dicts."""
    top: list[tuple[str, str, int]] = []
    sections: list[dict] = []
    current: dict | None = None
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        if line.startswith("["):
            if not line.endswith("]"):
                raise ConfigError("unterminated section header", lineno)
            header = line[1:-1].split()
            if header == ["args"]:
                current = {"kind": "args", "name": None, "lineno": lineno, "items": []}
            elif len(header) == 2 and header[0] in _KINDS and header[0] != "args":
                current = {"kind": header[0], "name": header[1], "lineno": lineno,
                           "items": []}
            else:
                raise ConfigError(f"bad section header [{' '.join(header)}]", lineno)
            sections.append(current)
            continue
        if "=" not in line:
            raise ConfigError(f"expected `key = value`, got {line!r}", lineno)
        key, value = (part.strip() for part in line.split("=", 1))
        if not key:
            raise ConfigError("empty key", lineno)
        if current is None:
            top.append((key, value, lineno))
        else:
            current["items"].append((key, value, lineno))
    return top, sections


def _unique_items(items, lineno, repeatable=()):
    out = {}
    for key, value, ln in items:
        if key in out and key not in repeatable:
            raise ConfigError(f"duplicate key {key!r}", ln)
        out.setdefault(key, []).append((value, ln))
    return out


def _parse_int(value: str, lineno: int, what: str) -> int:
    try:
        return int(value)
    except ValueError:
        raise ConfigError(f"{what} must be an integer, got {value!r}", lineno) from None


def _parse_rational(value: str, lineno: int, what: str) -> Fraction:
    try:
        return as_rational(value)
    except (ValueError, ZeroDivisionError, TypeError):
        raise ConfigError(f"{what} must be a rational, got {value!r}", lineno) from None


def _is_basis_label(space: SymplecticSpace, name: str) -> bool:
    try:
        space.index(name)
        return True
    except ValueError:
        return False


def _resolve_vector(cfg: JobConfig, token: str, lineno: int) -> Vector:
    token = token.strip()
    if token in cfg.vectors:
        return cfg.vectors[token]
    try:
        return parse_vector(cfg.require_space(), token)
    except ParseError as exc:
        raise ConfigError(f"cannot resolve vector {token!r}: {exc}", lineno) from None


def _coeff_list(value: str, lineno: int) -> list[Fraction]:
    parts = [p for p in value.replace(",", " ").split() if p]
    return [_parse_rational(p, lineno, "coefficient") for p in parts]


def _build_vector(cfg, name, items, lineno):
    space = cfg.require_space()
    keys = _unique_items(items, lineno)
    unknown = set(keys) - {"coeffs", "expr"}
    if unknown:
        raise ConfigError(f"unknown key {sorted(unknown)[0]!r} in vector section",
                          keys[sorted(unknown)[0]][0][1])
    if ("coeffs" in keys) == ("expr" in keys):
        raise ConfigError(f"vector {name!r} needs exactly one of coeffs/expr", lineno)
    if "coeffs" in keys:
        value, ln = keys["coeffs"][0]
        coeffs = _coeff_list(value, ln)
        if len(coeffs) != space.dim:
            raise ConfigError(
                f"vector {name!r} needs {space.dim} coefficients, got {len(coeffs)}", ln)
        return Vector(space, coeffs)
    value, ln = keys["expr"][0]
    try:
        return parse_vector(space, value)
    except ParseError as exc:
        raise ConfigError(str(exc), ln) from None


def _build_multivector(cfg, name, items, lineno):
    space = cfg.require_space()
    keys = _unique_items(items, lineno)
    unknown = set(keys) - {"coeffs", "expr", "degree"}
    if unknown:
        raise ConfigError(f"unknown key {sorted(unknown)[0]!r} in multivector section",
                          keys[sorted(unknown)[0]][0][1])
    degree = None
    if "degree" in keys:
        value, ln = keys["degree"][0]
        degree = _parse_int(value, ln, "degree")
    if ("coeffs" in keys) == ("expr" in keys):
        raise ConfigError(f"multivector {name!r} needs exactly one of coeffs/expr", lineno)
    if "coeffs" in keys:
        if degree is None:
            raise ConfigError(f"multivector {name!r} with coeffs needs a degree", lineno)
        value, ln = keys["coeffs"][0]
        coeffs = _coeff_list(value, ln)
        tuples = space.basis_tuples(degree) if degree in (1, 2, 3) else None
        if tuples is None:
            raise ConfigError(f"degree must be 1, 2 or 3, got {degree}", lineno)
        if len(coeffs) != len(tuples):
            raise ConfigError(
                f"degree-{degree} multivector needs {len(tuples)} coefficients, "
                f"got {len(coeffs)}", ln)
        return Multivector(space, degree,
                           {t: c for t, c in zip(tuples, coeffs) if c})
    value, ln = keys["expr"][0]
    try:
        return parse_multivector(space, value, degree=degree)
    except (ParseError, ValueError) as exc:
        raise ConfigError(str(exc), ln) from None


def _build_subsurface(cfg, name, items, lineno):
    keys = _unique_items(items, lineno, repeatable=("pair",))
    unknown = set(keys) - {"boundary", "pair"}
    if unknown:
        raise ConfigError(f"unknown key {sorted(unknown)[0]!r} in subsurface section",
                          keys[sorted(unknown)[0]][0][1])
    if "boundary" not in keys:
        raise ConfigError(f"subsurface {name!r} needs a boundary", lineno)
    bval, bln = keys["boundary"][0]
    d = _resolve_vector(cfg, bval, bln)
    pairs = []
    for value, ln in keys.get("pair", []):
        halves = value.split(",")
        if len(halves) != 2:
            raise ConfigError(f"pair needs two comma-separated vectors, got {value!r}", ln)
        pairs.append((_resolve_vector(cfg, halves[0], ln),
                      _resolve_vector(cfg, halves[1], ln)))
    try:
        return SubsurfaceSpec(d, pairs)
    except InvalidSubsurface as exc:
        raise ConfigError(f"subsurface {name!r}: {exc}", lineno) from exc


def _build_boundingpair(cfg, name, items, lineno):
    keys = _unique_items(items, lineno)
    unknown = set(keys) - {"side1", "side2"}
    if unknown:
        raise ConfigError(f"unknown key {sorted(unknown)[0]!r} in boundingpair section",
                          keys[sorted(unknown)[0]][0][1])
    sides = []
    for key in ("side1", "side2"):
        if key not in keys:
            raise ConfigError(f"boundingpair {name!r} needs {key}", lineno)
        value, ln = keys[key][0]
        value = value.strip()
        if value not in cfg.subsurfaces:
            raise ConfigError(f"unknown subsurface {value!r}", ln)
        sides.append(cfg.subsurfaces[value])
    try:
        return BoundingPairSpec(*sides)
    except InvalidBoundingPair as exc:
        raise ConfigError(f"boundingpair {name!r}: {exc}", lineno) from exc


def _register(cfg: JobConfig, kind: str, name: str, value, lineno: int):
    table = {"vector": cfg.vectors, "multivector": cfg.multivectors,
             "subsurface": cfg.subsurfaces, "boundingpair": cfg.pairs}[kind]
    space = cfg.require_space()
    if kind == "vector" and _is_basis_label(space, name):
        raise ConfigError(f"name {name!r} shadows a basis label", lineno)
    all_names = (set(cfg.vectors) | set(cfg.multivectors)
                 | set(cfg.subsurfaces) | set(cfg.pairs))
    if name in all_names and name not in table:
        raise ConfigError(f"name {name!r} already used for another kind", lineno)
    table[name] = value


def parse_config(text: str, base: JobConfig | None = None) -> JobConfig:
    """Parse config text, optionally extending a fixture-seeded base."""
    cfg = base if base is not None else JobConfig()
    top, sections = _split_sections(text)
    for key, value, lineno in top:
        if key not in _TOP_KEYS:
            raise ConfigError(f"unknown top-level key {key!r}", lineno)
        if key == "genus":
            genus = _parse_int(value, lineno, "genus")
            if cfg.genus is not None and cfg.genus != genus:
                raise ConfigError(
                    f"genus {genus} conflicts with already-set genus {cfg.genus}", lineno)
            try:
                cfg.space = SymplecticSpace(genus)
            except ValueError as exc:
                raise ConfigError(str(exc), lineno) from None
            cfg.genus = genus
        elif key == "command":
            cfg.command = value.strip()
        elif key == "seed":
            cfg.seed = _parse_int(value, lineno, "seed")
        elif key == "kappa1":
            cfg.kappa1 = _parse_rational(value, lineno, "kappa1")
        elif key == "kappa2":
            cfg.kappa2 = _parse_rational(value, lineno, "kappa2")
    builders = {"vector": _build_vector, "multivector": _build_multivector,
                "subsurface": _build_subsurface, "boundingpair": _build_boundingpair}
    for section in sections:
        kind, name, lineno = section["kind"], section["name"], section["lineno"]
        if kind == "args":
            for key, value, ln in section["items"]:
                cfg.args[key] = value.strip()
            continue
        value = builders[kind](cfg, name, section["items"], lineno)
        _register(cfg, kind, name, value, lineno)
    return cfg
