"""Command-line front end.

Subcommands: decompose, forms, johnson, act, audit, invariants.  Inputs
come from --fixture and/or --config (the config extends the fixture);
flags override scalar settings.  Reports go to stdout as deterministic
text or JSON.  Exit codes: 0 all verdicts pass, 1 an identity check
failed, 2 malformed input.
"""

from __future__ import annotations

import argparse
import sys
from fractions import Fraction
from math import comb

from .checks import run_invariant_checks
from .config import ConfigError, JobConfig, config_from_fixture, parse_config
from .exterior import (Multivector, SymplecticSpace, contraction3, delta,
                       is_primitive, primitive_rank_two_ways, project_primitive,
                       wedge)
from .forms import Transvection, omega3, phi, q2
from .h3model import DEFAULT_KAPPA2, GradedH3Element, TorelliParams, act
from .johnson import (FIXTURE_NAMES, InvalidBoundingPair, InvalidSubsurface,
                      johnson_element)
from .linalg import is_identity, mat_mul
from .render import ParseError, render_canonical
from .report import ReportDocument, Verdict

COMMANDS = ("decompose", "forms", "johnson", "act", "audit", "invariants")


def _params(cfg: JobConfig) -> TorelliParams:
    return TorelliParams(
        kappa1=cfg.kappa1 if cfg.kappa1 is not None else Fraction(0),
        kappa2=cfg.kappa2 if cfg.kappa2 is not None else DEFAULT_KAPPA2)


def _arg(cfg: JobConfig, key: str) -> str:
    try:
        return cfg.args[key]
    except KeyError:
        raise ConfigError(f"command {cfg.command!r} needs an [args] entry {key!r}") from None


def _named_multivector(cfg: JobConfig, key: str, degree: int) -> tuple[str, Multivector]:
    name = _arg(cfg, key)
    if name not in cfg.multivectors:
        raise ConfigError(f"unknown multivector {name!r} (from args.{key})")
    x = cfg.multivectors[name]
    if x.degree != degree:
        raise ConfigError(f"multivector {name!r} has degree {x.degree}, need {degree}")
    return name, x


def _new_report(cfg: JobConfig) -> ReportDocument:
    space = cfg.require_space()
    p = _params(cfg)
    return ReportDocument(
        command=cfg.command, genus=space.genus,
        params={"kappa1": render_canonical(p.kappa1),
                "kappa2": render_canonical(p.kappa2), "seed": cfg.seed})


def _run_decompose(cfg: JobConfig) -> ReportDocument:
    space = cfg.require_space()
    report = _new_report(cfg)
    name, x = _named_multivector(cfg, "input", 3)
    c = contraction3(x)
    w = Fraction(1, space.genus - 1) * c
    prim = project_primitive(x)
    residual = wedge(delta(space), w.to_multivector()) if not w.is_zero() \
        else Multivector.zero(space, 3)
    if x.is_zero():
        kind = "ZERO"
    elif prim.is_zero():
        kind = "IN-DELTA-V"
    elif c.is_zero():
        kind = "PRIMITIVE"
    else:
        kind = "MIXED"
    report.inputs = {"input": name, "value": render_canonical(x)}
    report.outputs = {
        "primitive_part": render_canonical(prim),
        "residual_vector": render_canonical(w),
        "delta_wedge_part": render_canonical(residual),
        "classification": kind,
    }
    report.verdicts = [
        Verdict("primitive-part-contraction-vanishes",
                contraction3(prim).is_zero()),
        Verdict("decomposition-reconstructs-input", prim + residual == x),
        Verdict("projector-idempotent-on-input", project_primitive(prim) == prim),
    ]
    return report


_FORM_DEGREES = {"omega3": 3, "q2": 2, "phi": 3}


def _run_forms(cfg: JobConfig) -> ReportDocument:
    report = _new_report(cfg)
    form = _arg(cfg, "form")
    if form not in _FORM_DEGREES:
        raise ConfigError(f"unknown form {form!r}; choose omega3, q2 or phi")
    degree = _FORM_DEGREES[form]
    lname, left = _named_multivector(cfg, "left", degree)
    rname, right = _named_multivector(cfg, "right", degree)
    report.inputs = {"form": form,
                     "left": lname, "left_value": render_canonical(left),
                     "right": rname, "right_value": render_canonical(right)}
    if form == "omega3":
        value = omega3(left, right)
        check = Verdict("omega3-antisymmetric-on-inputs",
                        omega3(right, left) == -value)
    elif form == "q2":
        value = q2(left, right)
        check = Verdict("q2-symmetric-on-inputs", q2(right, left) == value)
    else:
        value = phi(left, right)
        check = Verdict("phi-symmetric-on-inputs", phi(right, left) == value)
    report.outputs = {"value": render_canonical(value)}
    report.verdicts = [check]
    return report


def _johnson_pair_body(cfg: JobConfig, report: ReportDocument):
    """Shared by johnson and act: compute both sides and the identity verdicts.

    Returns the primitive Johnson element, or None when the cross-side
    identity fails (the verdicts then record the failure).
    """
    space = cfg.require_space()
    name = _arg(cfg, "pair")
    if name not in cfg.pairs:
        raise ConfigError(f"unknown boundingpair {name!r} (from args.pair)")
    b = cfg.pairs[name]
    j1 = johnson_element(b.side1)
    j2 = johnson_element(b.side2)
    dd = wedge(b.side1.d, delta(space))
    identity = j1 - j2 == dd
    p1 = project_primitive(j1)
    p2 = project_primitive(j2)
    mat = mat_mul(Transvection(b.side1.d).matrix(),
                  Transvection(b.side2.d).matrix(inverse=True))
    report.inputs.update({
        "pair": name,
        "boundary": render_canonical(b.side1.d),
        "side_genera": [b.side1.genus, b.side2.genus],
    })
    report.outputs.update({
        "side1_element": render_canonical(j1),
        "side2_element": render_canonical(j2),
        "d_wedge_delta": render_canonical(dd),
        "johnson": render_canonical(p1),
    })
    report.verdicts.extend([
        Verdict("johnson-cross-side-identity", identity,
                "j(side1) - j(side2) = d ^ delta"),
        Verdict("johnson-projections-agree", p1 == p2),
        Verdict("johnson-element-primitive", is_primitive(p1)),
        Verdict("bounding-pair-trivial-on-homology", is_identity(mat)),
    ])
    return b, (p1 if identity and p1 == p2 else None)


def _run_johnson(cfg: JobConfig) -> ReportDocument:
    report = _new_report(cfg)
    if "pair" in cfg.args:
        _johnson_pair_body(cfg, report)
        return report
    name = _arg(cfg, "subsurface")
    if name not in cfg.subsurfaces:
        raise ConfigError(f"unknown subsurface {name!r} (from args.subsurface)")
    s = cfg.subsurfaces[name]
    j = johnson_element(s)
    report.inputs = {"subsurface": name, "boundary": render_canonical(s.d),
                     "genus_of_side": s.genus}
    report.outputs = {"johnson_element": render_canonical(j),
                      "contraction": render_canonical(contraction3(j))}
    report.verdicts = [
        Verdict("johnson-contraction-genus-multiple",
                contraction3(j) == s.genus * s.d,
                "contraction3(j) = genus(side) d"),
    ]
    return report


def _run_act(cfg: JobConfig) -> ReportDocument:
    report = _new_report(cfg)
    params = _params(cfg)
    tname, top = _named_multivector(cfg, "top", 3)
    if not is_primitive(top):
        raise ConfigError(f"multivector {tname!r} is not primitive; "
                          "decompose it first and act with the primitive part")
    report.inputs = {"top": tname, "top_value": render_canonical(top)}
    _, j = _johnson_pair_body(cfg, report)
    if j is None:
        report.outputs["classification"] = "UNDEFINED"
        return report
    m = GradedH3Element.from_top(top)
    moved = act(j, m, params)
    var = moved - m
    twice = act(j, moved, params)
    doubled = act(j + j, m, params)
    report.outputs.update({
        "variation": {"scalar": render_canonical(var.scalar),
                      "sym2": render_canonical(var.sym2),
                      "top": render_canonical(var.top)},
        "classification": "NONTRIVIAL" if not var.sym2.is_zero() else "TRIVIAL",
    })
    report.verdicts.extend([
        Verdict("variation-fixes-top", var.top.is_zero()),
        Verdict("action-unipotent-on-input", twice == doubled,
                "acting twice equals acting by the doubled element"),
    ])
    return report


def _run_audit(cfg: JobConfig) -> ReportDocument:
    space = cfg.require_space()
    report = _new_report(cfg)
    g = space.genus
    r1, r2 = primitive_rank_two_ways(space)
    expected = comb(space.dim, 3) - space.dim
    sub = 1 + g * (2 * g + 1)
    report.inputs = {}
    report.outputs = {
        "sub_dim": sub,
        "quotient_dim": expected,
        "total_dim": sub + expected,
        "projector_rank": r1,
        "isotropic_rank": r2,
    }
    report.verdicts = [
        Verdict("primitive-rank-two-ways-agree", r1 == r2,
                f"projector {r1}, isotropic span {r2}"),
        Verdict("primitive-rank-matches-count", r1 == expected,
                f"C(2g,3) - 2g = {expected}"),
    ]
    return report


def _run_invariants(cfg: JobConfig) -> ReportDocument:
    space = cfg.require_space()
    report = _new_report(cfg)
    rounds = 10
    if "rounds" in cfg.args:
        try:
            rounds = int(cfg.args["rounds"])
        except ValueError:
            raise ConfigError(f"rounds must be an integer, got {cfg.args['rounds']!r}") from None
        if rounds < 1:
            raise ConfigError("rounds must be positive")
    report.inputs = {"seed": cfg.seed, "rounds": rounds}
    report.verdicts = run_invariant_checks(genus=space.genus, seed=cfg.seed,
                                           rounds=rounds)
    return report


_HANDLERS = {
    "decompose": _run_decompose,
    "forms": _run_forms,
    "johnson": _run_johnson,
    "act": _run_act,
    "audit": _run_audit,
    "invariants": _run_invariants,
}


def run_job(cfg: JobConfig) -> ReportDocument:
    """Dispatch a resolved JobConfig to its command handler."""
    if cfg.command not in _HANDLERS:
        raise ConfigError(f"unknown command {cfg.command!r}; "
                          f"choose one of {', '.join(COMMANDS)}")
    _params(cfg)  # validate kappa overrides before doing any work
    return _HANDLERS[cfg.command](cfg)


def build_config(command: str, config_path: str | None = None,
                 fixture: str | None = None, genus: int | None = None,
                 seed: int | None = None, kappa1=None, kappa2=None) -> JobConfig:
    """Resolve fixture, config file and flag overrides into one JobConfig."""
    cfg = config_from_fixture(fixture) if fixture else JobConfig()
    if config_path is not None:
        with open(config_path, "r", encoding="utf-8") as fh:
            cfg = parse_config(fh.read(), base=cfg)
    if genus is not None:
        if cfg.genus is not None and cfg.genus != genus:
            raise ConfigError(f"--genus {genus} conflicts with configured genus {cfg.genus}")
        cfg.genus = genus
        cfg.space = SymplecticSpace(genus)
    if cfg.genus is None:
        cfg.genus = 3
        cfg.space = SymplecticSpace(3)
    if seed is not None:
        cfg.seed = seed
    if kappa1 is not None:
        cfg.kappa1 = Fraction(kappa1)
    if kappa2 is not None:
        cfg.kappa2 = Fraction(kappa2)
    cfg.command = command
    return cfg


def _add_common_flags(p: argparse.ArgumentParser):
    p.add_argument("--config", metavar="PATH", help="job config file")
    p.add_argument("--fixture", metavar="NAME",
                   help=f"built-in configuration ({', '.join(FIXTURE_NAMES)})")
    p.add_argument("--genus", type=int, help="ambient genus (default 3)")
    p.add_argument("--seed", type=int, help="seed for randomized checks")
    p.add_argument("--kappa1", metavar="Q", help="scalar-shear coefficient, rational")
    p.add_argument("--kappa2", metavar="Q", help="sym2-shear coefficient, rational")
    p.add_argument("--format", choices=("text", "json"), default="text",
                   dest="fmt", help="report format")


def make_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="torelli",
        description="Exact computations with primitive 3-forms, Johnson elements "
                    "of bounding pairs, and the graded model they act on.")
    sub = parser.add_subparsers(dest="command", required=True, metavar="command")
    helps = {
        "decompose": "split a 3-form into primitive and delta-wedge parts",
        "forms": "evaluate omega3, q2 or phi on named inputs",
        "johnson": "Johnson element of a subsurface or bounding pair",
        "act": "variation of a lifted top class under a bounding pair",
        "audit": "dimension bookkeeping of the graded model",
        "invariants": "run the randomized identity suite",
    }
    for name in COMMANDS:
        _add_common_flags(sub.add_parser(name, help=helps[name]))
    return parser


def main(argv=None) -> int:
    args = make_parser().parse_args(argv)
    try:
        cfg = build_config(args.command, config_path=args.config,
                           fixture=args.fixture, genus=args.genus,
                           seed=args.seed, kappa1=args.kappa1, kappa2=args.kappa2)
        report = run_job(cfg)
    except (ConfigError, InvalidSubsurface, InvalidBoundingPair, ParseError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except (ValueError, TypeError, OSError, ZeroDivisionError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    sys.stdout.write(report.to_json() if args.fmt == "json" else report.to_text())
    return 0 if report.passed else 1


def entrypoint():
    sys.exit(main())


if __name__ == "__main__":
    entrypoint()
