"""Command-line surface: input documents, the shipped corpus, reports.

Input documents are YAML with these fields:

    kind: matrix | flip | diagonal | set_solution | rack
    n: <dimension>
    conductor: <int>          # optional; inferred from the literals if absent
    scale: "<scalar>"         # optional global factor (e.g. "-1" on a flip)
    volume_monomial: [1, 2]   # optional letter indices, 1-based
    max_degree: <int>         # optional default for the top-degree scan

    # kind matrix: explicit tensor entries c(x_i (x) x_j) = sum coeff x_k (x) x_l
    entries:
      - {from: [i, j], to: [k, l], coeff: "<scalar>"}
    # kind diagonal: the weight table, c(x_i (x) x_j) = q[i][j] x_j (x) x_i
    q: [["<scalar>", ...], ...]
    # kind set_solution: s(i, j) = (g[i][j], f[j][i]); tables are 1-based
    g: [[...], ...]
    f: [[...], ...]
    weights: "<scalar>" | [["<scalar>", ...], ...]
    # kind rack: the operation table i > j, weights as above
    table: [[...], ...]

    wgf_braiding: {...}       # optional nested document (same schema, no
                              # further nesting): take the volume data from
                              # this braiding instead of the main one

All indices in files are 1-based, matching the printed tables the examples
come from; everything internal is 0-based.  Scalar literals follow the
scalars module grammar ("-1", "1/2", "z4", "2*z3^2 - 1", ...).

The JSON report is deterministic: identical input bytes and tool version
produce identical output bytes (keys sorted, no timestamps, no paths).
"""
from __future__ import annotations

import hashlib
import json
import re
import sys
from dataclasses import dataclass, field as dc_field
from importlib import resources
from math import lcm
from pathlib import Path
from typing import Optional

import click
import yaml

from . import __version__
from .braiding import BraidingTensor
from .frt import FrtPresentation
from .ncpoly import NCPoly, word_str
from .nichols import NicholsData, TopNotFound, WgfError, vword_str
from .qdet import QDetReport, antipode_table, build_report, hopf_presentation
from .scalars import ScalarField, format_scalar, literal_conductor, parse_scalar
from .settheoretic import Cocycle, Rack, SetSolution, linearize, validate

SCHEMA_VERSION = 1
KINDS = ("matrix", "flip", "diagonal", "set_solution", "rack")

# exit codes, pinned so CI can assert verdicts
EXIT_BRAID = 2
EXIT_RIGIDITY = 3
EXIT_INCONCLUSIVE = 4
EXIT_WGF = 5
EXIT_HYPOTHESIS = 6


class SpecError(ValueError):
    """The input document does not describe a braiding."""


@dataclass
class BraidingSpec:
    kind: str
    n: int
    conductor: int
    scale: Optional[str]                  # canonical literal
    volume: Optional[tuple]               # 0-based letter word
    max_degree: Optional[int]
    payload: dict                         # kind-specific, canonical form
    wgf: Optional["BraidingSpec"] = None


# -- document parsing ------------------------------------------------------


def _require(cond, msg):
    if not cond:
        raise SpecError(msg)


def _index_table(doc, key, n, what):
    t = doc.get(key)
    _require(isinstance(t, list) and len(t) == n, f"{what}: need {n} rows")
    out = []
    for r, row in enumerate(t):
        _require(isinstance(row, list) and len(row) == n,
                 f"{what}: row {r + 1} must have {n} entries")
        for v in row:
            _require(isinstance(v, int) and 1 <= v <= n,
                     f"{what}: entries must be indices in 1..{n}")
        out.append(list(row))
    return out


def _literal(v, what) -> str:
    # YAML may hand back ints for unquoted numbers
    if isinstance(v, int):
        v = str(v)
    _require(isinstance(v, str), f"{what}: scalar literal expected")
    try:
        parse_scalar(v)
    except ValueError as e:
        raise SpecError(f"{what}: {e}") from None
    return v


def _literal_table(doc, key, n, what):
    t = doc.get(key)
    _require(isinstance(t, list) and len(t) == n, f"{what}: need {n} rows")
    out = []
    for r, row in enumerate(t):
        _require(isinstance(row, list) and len(row) == n,
                 f"{what}: row {r + 1} must have {n} entries")
        out.append([_literal(v, f"{what}[{r + 1}]") for v in row])
    return out


_KIND_KEYS = {
    "matrix": {"entries"},
    "flip": set(),
    "diagonal": {"q"},
    "set_solution": {"g", "f", "weights"},
    "rack": {"table", "weights"},
}
_COMMON_KEYS = {"kind", "n", "conductor", "scale", "volume_monomial",
                "max_degree", "wgf_braiding"}


def spec_from_document(doc, nested=False) -> BraidingSpec:
    _require(isinstance(doc, dict), "document must be a mapping")
    kind = doc.get("kind")
    _require(kind in KINDS, f"kind must be one of {', '.join(KINDS)}")
    n = doc.get("n")
    _require(isinstance(n, int) and n >= 1, "n must be a positive integer")
    allowed = _COMMON_KEYS | _KIND_KEYS[kind]
    extra = set(doc) - allowed
    _require(not extra, f"unknown keys for kind {kind}: {sorted(extra)}")

    literals: list[str] = []
    payload: dict = {}
    if kind == "matrix":
        entries = doc.get("entries")
        _require(isinstance(entries, list) and entries,
                 "matrix kind needs a nonempty entries list")
        canon = []
        for e in entries:
            _require(isinstance(e, dict) and set(e) == {"from", "to", "coeff"},
                     "each entry needs exactly from/to/coeff")
            src, dst = e["from"], e["to"]
            for p in (src, dst):
                _require(isinstance(p, list) and len(p) == 2
                         and all(isinstance(v, int) and 1 <= v <= n for v in p),
                         "entry indices must be 1-based pairs")
            lit = _literal(e["coeff"], "entry coeff")
            literals.append(lit)
            canon.append({"from": list(src), "to": list(dst), "coeff": lit})
        canon.sort(key=lambda e: (e["from"], e["to"]))
        payload["entries"] = canon
    elif kind == "diagonal":
        q = _literal_table(doc, "q", n, "q")
        literals.extend(v for row in q for v in row)
        payload["q"] = q
    elif kind in ("set_solution", "rack"):
        if kind == "set_solution":
            payload["g"] = _index_table(doc, "g", n, "g")
            payload["f"] = _index_table(doc, "f", n, "f")
        else:
            payload["table"] = _index_table(doc, "table", n, "table")
        w = doc.get("weights", "1")
        if isinstance(w, list):
            payload["weights"] = _literal_table(doc, "weights", n, "weights")
            literals.extend(v for row in payload["weights"] for v in row)
        else:
            payload["weights"] = _literal(w, "weights")
            literals.append(payload["weights"])

    scale = doc.get("scale")
    if scale is not None:
        scale = _literal(scale, "scale")
        literals.append(scale)

    conductor = doc.get("conductor")
    inferred = lcm(*(literal_conductor(v) for v in literals)) if literals else 1
    if conductor is None:
        conductor = inferred
    else:
        _require(isinstance(conductor, int) and conductor >= 1,
                 "conductor must be a positive integer")
        _require(conductor % inferred == 0,
                 f"literals need conductor {inferred},"
                 f" document declares {conductor}")

    volume = doc.get("volume_monomial")
    if volume is not None:
        _require(isinstance(volume, list) and volume
                 and all(isinstance(v, int) and 1 <= v <= n for v in volume),
                 "volume_monomial must list 1-based letter indices")
        volume = tuple(v - 1 for v in volume)

    max_degree = doc.get("max_degree")
    if max_degree is not None:
        _require(isinstance(max_degree, int) and max_degree >= 2,
                 "max_degree must be an integer >= 2")

    wgf = doc.get("wgf_braiding")
    if wgf is not None:
        _require(not nested, "wgf_braiding documents cannot nest")
        wgf = spec_from_document(wgf, nested=True)

    return BraidingSpec(kind=kind, n=n, conductor=conductor, scale=scale,
                        volume=volume, max_degree=max_degree,
                        payload=payload, wgf=wgf)


def parse_spec_text(text: str) -> BraidingSpec:
    try:
        doc = yaml.safe_load(text)
    except yaml.YAMLError as e:
        raise SpecError(f"not valid YAML: {e}") from None
    return spec_from_document(doc)


def load_spec(path) -> BraidingSpec:
    return parse_spec_text(Path(path).read_text())


def spec_to_document(spec: BraidingSpec) -> dict:
    doc = {"kind": spec.kind, "n": spec.n, "conductor": spec.conductor}
    doc.update(spec.payload)
    if spec.scale is not None:
        doc["scale"] = spec.scale
    if spec.volume is not None:
        doc["volume_monomial"] = [v + 1 for v in spec.volume]
    if spec.max_degree is not None:
        doc["max_degree"] = spec.max_degree
    if spec.wgf is not None:
        doc["wgf_braiding"] = spec_to_document(spec.wgf)
    return doc


def format_spec(spec: BraidingSpec) -> str:
    return yaml.safe_dump(spec_to_document(spec), sort_keys=True,
                          default_flow_style=None)


# -- building the braiding -------------------------------------------------


@dataclass
class SetContext:
    """Set-theoretic layer of a spec, kept for the check report."""

    solution: SetSolution
    cocycle: Cocycle
    rack: Optional[Rack] = None
    failures: list = dc_field(default_factory=list)
    involutive: Optional[bool] = None
    nondegenerate: Optional[bool] = None


def _cocycle_from(payload, n, F) -> Cocycle:
    w = payload["weights"]
    if isinstance(w, list):
        return Cocycle(n, [[F.parse(v) for v in row] for row in w])
    return Cocycle.constant(n, F.parse(w))


def build_braiding(spec: BraidingSpec):
    """(BraidingTensor, SetContext | None) for one parsed document."""
    F = ScalarField(spec.conductor)
    n = spec.n
    ctx = None
    if spec.kind == "flip":
        c = BraidingTensor.flip(n, F)
    elif spec.kind == "diagonal":
        q = [[F.parse(v) for v in row] for row in spec.payload["q"]]
        c = BraidingTensor.diagonal(n, F, q)
    elif spec.kind == "matrix":
        entries = []
        for e in spec.payload["entries"]:
            (i, j), (k, l) = e["from"], e["to"]
            entries.append((i - 1, j - 1, k - 1, l - 1, F.parse(e["coeff"])))
        c = BraidingTensor.from_entries(n, F, entries)
    else:
        cocycle = _cocycle_from(spec.payload, n, F)
        if spec.kind == "rack":
            rack = Rack(tuple(tuple(v - 1 for v in row)
                              for row in spec.payload["table"]))
            report = validate(rack, cocycle)
            sol = rack.solution()
        else:
            rack = None
            sol = SetSolution(
                tuple(tuple(v - 1 for v in row) for row in spec.payload["g"]),
                tuple(tuple(v - 1 for v in row) for row in spec.payload["f"]),
            )
            report = validate(sol, cocycle)
        ctx = SetContext(solution=sol, cocycle=cocycle, rack=rack,
                         failures=report.failures,
                         involutive=report.involutive,
                         nondegenerate=report.nondegenerate)
        c = linearize(sol, cocycle, F)
    if spec.scale is not None:
        c = c.scaled(F.parse(spec.scale))
    return c, ctx


# -- shipped corpus --------------------------------------------------------


def corpus_dir() -> Path:
    return Path(str(resources.files("qfa").joinpath("specs")))


def corpus_names() -> list[str]:
    return sorted(p.stem for p in corpus_dir().glob("*.yaml"))


def corpus_path(name: str) -> Path:
    if not name.endswith(".yaml"):
        name += ".yaml"
    return corpus_dir() / name


# -- shared command plumbing -----------------------------------------------


def _fail(msg: str, code: int):
    click.echo(msg, err=True)
    sys.exit(code)


def _load(spec_file):
    try:
        spec = load_spec(spec_file)
        c, ctx = build_braiding(spec)
    except SpecError as e:
        raise click.ClickException(str(e)) from None
    return spec, c, ctx


def _vec_str(vec: dict, n) -> str:
    return " + ".join(f"{format_scalar(cv)}*{vword_str(w, n)}"
                      for w, cv in sorted(vec.items()))


def _precheck(c, ctx):
    """Braid + rigidity gate shared by the computing commands."""
    if ctx is not None and ctx.failures:
        _fail("; ".join(ctx.failures), EXIT_BRAID)
    ok, witness = c.check_braid_equation()
    if not ok:
        w, lhs, rhs = witness
        _fail(f"braid equation fails on {vword_str(w, c.n)}:"
              f" left {_vec_str(lhs, c.n)}, right {_vec_str(rhs, c.n)}",
              EXIT_BRAID)
    ok, kernel = c.check_rigid()
    if not ok:
        _fail("braiding is not rigid; dual pairing kernel vector"
              f" ({', '.join(format_scalar(v) for v in kernel)})",
              EXIT_RIGIDITY)


def _volume_from(opt: Optional[str], spec: BraidingSpec):
    if opt is None:
        return spec.volume
    tokens = [t for t in re.split(r"[\s*,.]+", opt.strip()) if t]
    word = []
    for t in tokens:
        t = t[1:] if t[0] in "xX" else t
        if not t.isdigit() or not 1 <= int(t) <= spec.n:
            raise click.ClickException(
                f"bad volume monomial token {t!r}; use letters x1..x{spec.n}")
        word.append(int(t) - 1)
    if not word:
        raise click.ClickException("empty volume monomial")
    return tuple(word)


# -- report documents ------------------------------------------------------


def _row_poly(row, n, field) -> NCPoly:
    return NCPoly({(g,): cv for g, cv in enumerate(row) if cv})


def report_document(spec: BraidingSpec, raw: bytes, rep: QDetReport,
                    budget: int, work_budget: Optional[int]) -> dict:
    n = rep.n
    letters = [word_str((g,), n) for g in range(n * n)]
    doc = {
        "schema_version": SCHEMA_VERSION,
        "tool_version": __version__,
        "input": {
            "sha256": hashlib.sha256(raw).hexdigest(),
            "kind": spec.kind,
            "n": spec.n,
            "conductor": spec.conductor,
        },
        "degrees": {
            "top": rep.wgf.top,
            "groebner_through": rep.wgf.top + 1,
        },
        "budgets": {
            "groebner": budget,
            "elimination": work_budget,
        },
        "hilbert": rep.wgf.nd.hilbert_known(),
        "volume": vword_str(rep.wgf.volume_word, rep.wgf.nd.n),
        "determinant": rep.determinant.pretty(n),
        "cofactor": [[p.pretty(n) for p in row] for row in rep.cofactor],
        "conjugation": {
            letters[g]: _row_poly(row, n, rep.braiding.field).pretty(n)
            for g, row in enumerate(rep.conjugation_on_generators)
        },
        "verdicts": {
            "cofactor_identity": rep.hypothesis_ok or not any(
                any(r.terms for r in row) for row in rep.cofactor_residuals),
            "localization_hypothesis": rep.hypothesis_ok,
            "counit_one": rep.counit_one,
            "grouplike": rep.grouplike_ok,
            "central": rep.normality.central,
            "normality_certified": rep.normality.certified,
            "commutative": rep.commutative,
            "mixed_volume_data": rep.mixed_volume_data,
            "colinear": rep.colinear,
        },
        "killed": sorted(word_str((i * n + j,), n) for i, j in rep.killed),
        "vanishing_certificates": [
            {
                "monomial": "*".join(word_str((i * n + j,), n)
                                     for i, j in cert.monomial),
                "premise": cert.premise,
                "holds": cert.holds,
            }
            for cert in rep.vanishing
        ],
        "hopf": hopf_presentation(rep),
    }
    if rep.hypothesis_ok:
        tab = antipode_table(rep)
        def _numerator(p: NCPoly) -> str:
            s = p.pretty(n)
            return f"({s})" if len(p.terms) > 1 else s
        doc["antipode"] = {
            letters[i * n + j]: _numerator(tab[(i, j)][0]) + " * Dinv"
            for i in range(n) for j in range(n)
        }
    if not rep.normality.central:
        doc["conjugation_rules"] = {
            letters[i * n + j]: p.pretty(n)
            for (i, j), p in rep.normality.rules.items()
        }
    return doc


def _emit_json(doc: dict):
    click.echo(json.dumps(doc, sort_keys=True, indent=2))


def _emit_text(doc: dict):
    v = doc["verdicts"]
    click.echo(f"top degree: {doc['degrees']['top']}")
    click.echo(f"hilbert: {doc['hilbert']}")
    click.echo(f"volume: {doc['volume']}")
    click.echo(f"D = {doc['determinant']}")
    click.echo(f"counit(D) = 1: {_yn(v['counit_one'])}")
    click.echo(f"grouplike: {_yn(v['grouplike'])}")
    click.echo(f"localization hypothesis: {_yn(v['localization_hypothesis'])}")
    central = v["central"]
    line = f"central: {_yn(central)}"
    if central and v["normality_certified"]:
        line += " (certified)"
    click.echo(line)
    if not central:
        rules = doc.get("conjugation_rules", {})
        for g in sorted(rules):
            click.echo(f"  D*{g} = J({g})*D with J({g}) = {rules[g]}")
    if doc["killed"]:
        click.echo("killed by D: " + ", ".join(doc["killed"]))
    for cert in doc["vanishing_certificates"]:
        click.echo(f"vanishing {cert['monomial']}: {cert['premise']}:"
                   f" {'holds' if cert['holds'] else 'FAILS'}")
    if v["colinear"] is not None:
        click.echo(f"volume-form braiding compatible: {_yn(v['colinear'])}")
    if "antipode" in doc:
        click.echo("antipode:")
        for g in sorted(doc["antipode"]):
            click.echo(f"  S({g}) = {doc['antipode'][g]}")
    hopf = doc["hopf"]
    for key in ("killed_note", "group_algebra_note"):
        if key in hopf:
            click.echo(hopf[key])


def _yn(b) -> str:
    return "yes" if b else "no"


_Z_RE = re.compile(r"z(\d+)(?:\^(\d+))?")


def _latex_scalar(cv) -> str:
    s = format_scalar(cv)
    s = _Z_RE.sub(lambda m: f"\\zeta_{{{m.group(1)}}}"
                  + (f"^{{{m.group(2)}}}" if m.group(2) else ""), s)
    return s.replace("*", " ")


def _latex_poly(p: NCPoly, n: int) -> str:
    if not p.terms:
        return "0"
    parts = []
    for w, cv in p.sorted_terms():
        cs = _latex_scalar(cv)
        ws = word_str(w, n)
        if ws == "1":
            parts.append(cs)
        elif cs == "1":
            parts.append(ws)
        elif cs == "-1":
            parts.append("-" + ws)
        elif "+" in cs or " - " in cs:
            parts.append(f"({cs})\\, {ws}")
        else:
            parts.append(f"{cs}\\, {ws}")
    out = parts[0]
    for part in parts[1:]:
        out += " - " + part[1:] if part.startswith("-") else " + " + part
    return out


def _emit_latex(rep: QDetReport):
    n = rep.n
    click.echo(r"\[")
    click.echo(r"\boxed{D = " + _latex_poly(rep.determinant, n) + "}")
    click.echo(r"\]")

    def matrix(M):
        rows = [" & ".join(_latex_poly(p, n) for p in row) for row in M]
        return ("\\begin{pmatrix}\n" + " \\\\\n".join(rows)
                + "\n\\end{pmatrix}")

    click.echo(r"\[")
    click.echo("T = " + matrix(rep.cofactor) + r",\qquad")
    click.echo(r"\mathfrak{J}(T) = " + matrix(rep.conjugated_cofactor))
    click.echo(r"\]")
    if not rep.normality.central:
        rules = ",\\quad ".join(
            f"\\mathfrak{{J}}({word_str((i * n + j,), n)})"
            f" = {_latex_poly(p, n)}"
            for (i, j), p in sorted(rep.normality.rules.items()))
        click.echo(r"\[" + rules + r"\]")


# -- commands --------------------------------------------------------------


@click.group()
@click.version_option(__version__)
def main():
    """Quantum determinants for finite braidings, exactly."""


spec_argument = click.argument(
    "spec_file", type=click.Path(exists=True, dir_okay=False))


@main.command()
@spec_argument
def check(spec_file):
    """Braid equation and rigidity, plus set-theoretic axioms."""
    spec, c, ctx = _load(spec_file)
    click.echo(f"kind: {spec.kind}  n: {spec.n}  conductor: {spec.conductor}")
    failed = None
    if ctx is not None:
        for f in ctx.failures:
            click.echo(f"structure: {f}")
        if ctx.failures:
            failed = EXIT_BRAID
        click.echo(f"involutive: {_yn(ctx.involutive)}")
        click.echo(f"nondegenerate: {_yn(ctx.nondegenerate)}")
    ok, witness = c.check_braid_equation()
    if ok:
        click.echo("braid equation: pass")
    else:
        w, lhs, rhs = witness
        click.echo(f"braid equation: FAIL on {vword_str(w, c.n)}"
                   f" (left {_vec_str(lhs, c.n)}, right {_vec_str(rhs, c.n)})")
        failed = failed or EXIT_BRAID
    ok, kernel = c.check_rigid()
    if ok:
        click.echo("rigidity: pass")
    else:
        click.echo("rigidity: FAIL, dual pairing kernel vector ("
                   + ", ".join(format_scalar(v) for v in kernel) + ")")
        failed = failed or EXIT_RIGIDITY
    if failed:
        sys.exit(failed)


@main.command()
@spec_argument
def frt(spec_file):
    """The interreduced quadratic relation list of the coefficient algebra."""
    spec, c, ctx = _load(spec_file)
    _precheck(c, ctx)
    pres = FrtPresentation(c)
    click.echo(f"{len(pres.relations)} relations on"
               f" {c.n * c.n} generators:")
    for p in pres.relations:
        click.echo(f"  {p.pretty(c.n)} = 0")


@main.command()
@spec_argument
@click.option("--max-degree", type=int, default=None,
              help="scan limit for the top degree")
@click.option("--budget", type=int, default=None,
              help="work cap for the exact eliminations")
def nichols(spec_file, max_degree, budget):
    """Hilbert function, new relations by degree, top and volume."""
    spec, c, ctx = _load(spec_file)
    _precheck(c, ctx)
    limit = max_degree or spec.max_degree or 8
    nd = NicholsData(c) if budget is None else NicholsData(c, work_budget=budget)
    try:
        top = nd.detect_top(limit)
    except TopNotFound as e:
        click.echo(f"hilbert (partial): {e.hilbert}")
        click.echo(f"inconclusive: {e}")
        sys.exit(EXIT_INCONCLUSIVE)
    h = [nd.hilbert(d) for d in range(top + 2)]
    click.echo(f"hilbert: {h}  (total {sum(h)})")
    for d in range(2, top + 1):
        fresh = len(nd.new_relations(d))
        if fresh:
            click.echo(f"degree {d}: {fresh} new relations")
    click.echo(f"top degree: {top}")
    volume = spec.volume
    if volume is None:
        volume = next(w for w in nd.words(top) if any(nd.word_class(w)))
    click.echo(f"volume: {vword_str(volume, c.n)}")


@main.command()
@spec_argument
@click.option("--max-degree", type=int, default=None)
@click.option("--volume", "volume_opt", type=str, default=None,
              help="volume monomial override, e.g. x1*x2*x3*x2")
@click.option("--certify-normality", is_flag=True)
@click.option("--format", "fmt",
              type=click.Choice(["json", "text", "latex"]), default="text")
@click.option("--budget", type=int, default=None)
def qdet(spec_file, max_degree, volume_opt, certify_normality, fmt, budget):
    """The full determinant pipeline and its report."""
    spec, c, ctx = _load(spec_file)
    _precheck(c, ctx)
    volume = _volume_from(volume_opt, spec)
    gb_budget = budget if budget is not None else 2_000_000
    wgf_braiding = None
    if spec.wgf is not None:
        wgf_braiding, _ = build_braiding(spec.wgf)
    try:
        rep = build_report(
            c,
            wgf_braiding=wgf_braiding,
            volume_word=volume,
            max_degree=max_degree or spec.max_degree or 8,
            certify_normality=certify_normality,
            budget=gb_budget,
            work_budget=budget,
        )
    except TopNotFound as e:
        click.echo(f"inconclusive: {e}", err=True)
        sys.exit(EXIT_INCONCLUSIVE)
    except WgfError as e:
        click.echo(f"volume data unavailable: {e}", err=True)
        sys.exit(EXIT_WGF)
    doc = report_document(spec, Path(spec_file).read_bytes(), rep,
                          gb_budget, budget)
    if fmt == "json":
        _emit_json(doc)
    elif fmt == "latex":
        _emit_latex(rep)
    else:
        _emit_text(doc)
    if not rep.hypothesis_ok:
        click.echo("localization hypothesis FAILED; see report", err=True)
        sys.exit(EXIT_HYPOTHESIS)


@main.command()
def corpus():
    """List the shipped example documents."""
    for name in corpus_names():
        click.echo(str(corpus_path(name)))
