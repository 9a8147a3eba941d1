"""Command line front end: ``filterlab <command> [files] [flags]``.

Exit codes: 0 success, 1 a checked property failed, 2 unsatisfiable, 3 bad
input, 4 a search bound or budget ran out.  ``--format records`` prints one
JSON object per line (keys sorted, schema version in every record, no
timings) so two runs with the same inputs give identical bytes.
"""
from __future__ import annotations

import argparse
import hashlib
import json
import random
import sys
import time
from concurrent.futures import ProcessPoolExecutor
from functools import partial
from itertools import combinations
from pathlib import Path

from . import encoder as enc
from . import henkin as fo
from . import proplogic as pl
from .corpus import FO_CORPUS, PROP_CORPUS
from .errors import (
    ClosureBudgetExceeded,
    ExhaustedSupports,
    FieldTooLarge,
    FilterLabError,
    ImproperFilter,
    Inconclusive,
    NoDifferenceFound,
    NotAModel,
    ParseError,
    SignatureMismatch,
    SizeOverflow,
    UniverseOverflow,
    Unsatisfiable,
    UnknownGenerator,
    WidthExceeded,
)
from .filters import (
    FilterPresentation,
    FinitePowerset,
    PrincipalUltrafilter,
    all_subsets,
    brute_force_sat,
    compactness_solve,
)
from .formats import (
    format_assignment,
    format_cell_spec,
    parse_assignment,
    parse_cell_spec,
    parse_family,
    parse_filter,
    parse_model,
)
from .setcore import (
    BUILTINS,
    DEFAULT_SEARCH_BOUND,
    BaseDomain,
    FamilySpec,
    all_sign_patterns,
    cell_witness,
    enumerate_ground,
    indep_member,
)
from .sexpr import head, parse_all

SCHEMA = 1
DEFAULT_WIDTH = 4
DEFAULT_TRUNCATION = 3

OK, VIOLATED, UNSAT, BAD_INPUT, BUDGET = 0, 1, 2, 3, 4

_EXIT_FOR = [
    ((ParseError, UnknownGenerator, SignatureMismatch, FieldTooLarge, WidthExceeded, SizeOverflow), BAD_INPUT),
    ((NoDifferenceFound, Inconclusive, ClosureBudgetExceeded, UniverseOverflow), BUDGET),
    ((Unsatisfiable, ImproperFilter), UNSAT),
    ((NotAModel, ExhaustedSupports), VIOLATED),
]


def exit_code_for(exc: BaseException) -> int:
    for kinds, code in _EXIT_FOR:
        if isinstance(exc, kinds):
            return code
    return BAD_INPUT


class Report:
    """Buffers human lines and records; nothing is printed until ``emit``."""

    def __init__(self, command: str, fmt: str):
        self.command = command
        self.fmt = fmt
        self.lines: list[str] = []
        self.records: list[dict] = []
        self.started = time.perf_counter()

    def add(self, kind: str, human: str | None = None, **fields):
        self.records.append({"schema": SCHEMA, "command": self.command, "kind": kind, **fields})
        if human is not None:
            self.lines.extend(human.rstrip("\n").split("\n"))

    def say(self, text: str):
        self.lines.extend(text.rstrip("\n").split("\n"))

    def finish(self, code: int, verdict: str, **counts) -> int:
        self.add("summary", None, verdict=verdict, exit=code, **counts)
        shown = " ".join(f"{k}={v}" for k, v in counts.items())
        elapsed = time.perf_counter() - self.started
        self.say(f"{self.command}: {verdict}{' ' + shown if shown else ''} ({elapsed:.2f}s)")
        return code

    def emit(self, out):
        if self.fmt == "records":
            for r in self.records:
                out.write(json.dumps(r, sort_keys=True, separators=(",", ":")) + "\n")
        else:
            for line in self.lines:
                out.write(line + "\n")


def _map(fn, items, parallel: int):
    """Ordered map; a process pool when ``parallel > 1``."""
    items = list(items)
    if parallel <= 1 or len(items) < 2:
        return [fn(x) for x in items]
    with ProcessPoolExecutor(max_workers=parallel) as pool:
        return list(pool.map(fn, items, chunksize=max(1, len(items) // (4 * parallel))))


def _read(path: str) -> str:
    try:
        return Path(path).read_text(encoding="utf-8")
    except OSError as exc:
        raise ParseError(f"cannot read {path}: {exc.strerror}") from None


def _digest(lines) -> str:
    return hashlib.sha256("\n".join(lines).encode()).hexdigest()[:16]


# ---------------------------------------------------------------------------
# indep


def _witness_job(family, count, bound, signs):
    try:
        pts = cell_witness(family, signs, count, bound)
    except ExhaustedSupports as exc:
        return signs, [], str(exc)
    return signs, pts, None


def patterns_up_to(n_gens: int, k: int):
    """Every sign pattern over every set of at most ``k`` generators, by size then index."""
    for size in range(min(k, n_gens) + 1):
        for gens in combinations(range(n_gens), size):
            yield from all_sign_patterns(gens)


def run_indep(
    report: Report,
    family: FamilySpec,
    patterns,
    count: int = 1,
    bound: int = DEFAULT_SEARCH_BOUND,
    exhaustive: bool = False,
    truncation: int = DEFAULT_TRUNCATION,
    parallel: int = 1,
    show: int | None = None,
) -> int:
    patterns = list(patterns)
    results = _map(partial(_witness_job, family, count, bound), patterns, parallel)
    vectors = None
    if exhaustive:
        trunc = family.domain.size if family.domain.is_finite else truncation
        points = list(enumerate_ground(family.domain, trunc))
        vectors = {p: tuple(int(indep_member(p, g)) for g in family.generators) for p in points}
        report.add("ground", f"enumerated {len(points)} ground points (truncation {trunc})",
                   points=len(points), truncation=trunc)
    failed = discrepancies = witnessed = 0
    for signs, pts, error in results:
        spec = format_cell_spec(signs)
        problems = []
        if error:
            problems.append(error)
        distinct = len(set(pts)) == len(pts)
        verified = all(indep_member(p, family.generators[g]) == bool(v) for p in pts for g, v in signs.items())
        if not distinct:
            problems.append("witnesses repeat")
        if not verified:
            problems.append("a witness fails re-verification")
        if len(pts) < count and not error:
            problems.append(f"only {len(pts)} witnesses")
        if vectors is not None:
            inside = [p for p, vec in vectors.items() if all(vec[g] == v for g, v in signs.items())]
            if inside and not pts:
                problems.append("enumeration finds the cell nonempty but no witness was built")
            if family.domain.is_finite and pts and not inside:
                problems.append("witness built for a cell the enumeration finds empty")
            for p in pts:
                if family.domain.is_finite and p not in vectors:
                    problems.append(f"{p} is missing from the enumeration")
                elif p in vectors and any(vectors[p][g] != v for g, v in signs.items()):
                    problems.append(f"{p} is outside the cell by enumeration")
            discrepancies += bool(problems and vectors is not None)
        failed += bool(problems)
        witnessed += bool(pts) and not problems
        text = [str(p) for p in pts]
        shown = text if show is None else text[:show]
        human = f"cell [{spec}] " + (" ".join(shown) if not problems else "FAILED: " + "; ".join(problems))
        if show is not None and len(text) > show:
            human += f" ... ({len(text)} witnesses)"
        fields = {"cell": spec, "witnesses": len(pts), "ok": not problems}
        if show is None:
            fields["points"] = text
        else:
            fields["points"] = text[:show]
            fields["digest"] = _digest(text)
        if problems:
            fields["problems"] = problems
        report.add("cell", human, **fields)
    counts = {"cells": len(patterns), "witnessed": witnessed}
    if exhaustive:
        counts["discrepancies"] = discrepancies
    verdict = f"{witnessed}/{len(patterns)} cells witnessed"
    return report.finish(VIOLATED if failed else OK, verdict, **counts)


def cmd_indep(args, report):
    family = parse_family(_read(args.family), args.width)
    if args.cell is not None:
        signs = parse_cell_spec(args.cell)
        for g in signs:
            family.generator(g)
        patterns = [signs]
    elif args.up_to is not None:
        patterns = patterns_up_to(len(family), args.up_to)
    else:
        patterns = all_sign_patterns(range(len(family)))
    return run_indep(report, family, patterns, args.count, args.bound, args.exhaustive,
                     args.truncation, args.parallel, args.show)


# ---------------------------------------------------------------------------
# iota-check


def _iota_job(family, truncation, phi):
    r = pl.verify_iota_identity(phi, family, truncation=truncation)
    return r.holds, r.points, r.image_size, None if r.counterexample is None else str(r.counterexample)


def run_iota(report: Report, family: FamilySpec, formulas, truncation=None, parallel: int = 1) -> int:
    formulas = list(formulas)
    if family.domain.is_finite:
        truncation = None
    results = _map(partial(_iota_job, family, truncation), formulas, parallel)
    bad = 0
    for i, (phi, (holds, points, size, cex)) in enumerate(zip(formulas, results)):
        bad += not holds
        human = f"[{i}] {'holds' if holds else 'FAILS at ' + cex}: |image| = {size}/{points}  {phi}"
        report.add("formula", human, index=i, formula=str(phi), holds=holds, image=size, points=points,
                   counterexample=cex)
    gammas = sorted({tuple(sorted(pl.support(phi))) for phi in formulas}, key=lambda g: (len(g), g))
    split = 0
    for gamma in gammas:
        r = pl.partition_check(family, gamma, truncation)
        split += not r.holds
        report.add("partition", None if r.holds else f"partition over {list(gamma)} FAILS: {r.problems[:3]}",
                   gamma=list(gamma), holds=r.holds, total=r.total, cells=len(r.cell_sizes))
    verdict = f"{len(formulas) - bad}/{len(formulas)} identities hold, {len(gammas) - split}/{len(gammas)} partitions"
    return report.finish(VIOLATED if bad or split else OK, verdict, formulas=len(formulas), failures=bad,
                         partitions=len(gammas), partition_failures=split)


def _formula_family(args):
    if args.family:
        return parse_family(_read(args.family), args.width)
    return FamilySpec.full_powerset(3, args.width if args.width is not None else 4)


def cmd_iota_check(args, report):
    family = _formula_family(args)
    if args.random is not None:
        _need_seed(args)
        formulas = pl.random_formulas(args.seed, args.random, args.depth, args.atoms)
    elif args.theory:
        formulas = pl.parse_theory(_read(args.theory))
    else:
        formulas = [pl.parse_formula(t) for t in PROP_CORPUS]
    return run_iota(report, family, formulas, args.truncation, args.parallel)


# ---------------------------------------------------------------------------
# solve


def _solve_job(mode, bound, theory):
    filt = direct = None
    if mode in ("filter", "both"):
        try:
            filt = compactness_solve(theory, search_bound=bound)
        except Unsatisfiable:
            filt = False
    if mode in ("direct", "both"):
        direct = brute_force_sat(theory) or False
    return filt, direct


def run_solve(report: Report, theories, mode="both", bound=DEFAULT_SEARCH_BOUND, parallel=1) -> int:
    theories = list(theories)
    results = _map(partial(_solve_job, mode, bound), theories, parallel)
    sat = unsat = disagree = 0
    for i, (theory, (filt, direct)) in enumerate(zip(theories, results)):
        verdicts = {k: ("sat" if v else "unsat") for k, v in (("filter", filt), ("direct", direct)) if v is not None}
        model = filt or direct or None
        problems = []
        if len(set(verdicts.values())) > 1:
            problems.append("verdicts disagree")
        if model and not all(pl.evaluate(f, model) for f in theory):
            problems.append("model falsifies a formula")
        disagree += bool(problems)
        verdict = next(iter(verdicts.values()))
        sat += verdict == "sat"
        unsat += verdict == "unsat"
        text = format_assignment(model).strip() if model else "unsat"
        human = f"[{i}] {verdict} {text}" + (" PROBLEM: " + "; ".join(problems) if problems else "")
        report.add("theory", human, index=i, formulas=len(theory), verdicts=verdicts,
                   model=None if not model else {f"a{g}": v for g, v in sorted(model.items())}, ok=not problems)
    counts = {"theories": len(theories), "sat": sat, "unsat": unsat, "disagreements": disagree}
    if disagree:
        return report.finish(VIOLATED, "pipeline disagreement", **counts)
    if len(theories) == 1 and unsat:
        return report.finish(UNSAT, "unsat", **counts)
    return report.finish(OK, "sat" if len(theories) == 1 else "all verdicts agree", **counts)


def cmd_solve(args, report):
    if args.random is not None:
        _need_seed(args)
        rng = random.Random(args.seed)
        theories = [pl.random_theory(rng, args.atoms, args.max_formulas) for _ in range(args.random)]
    elif args.theory:
        theories = [pl.parse_theory(_read(args.theory))]
    else:
        raise ParseError("solve needs a theory file or --random N")
    code = run_solve(report, theories, args.mode, args.bound, args.parallel)
    if args.out and len(theories) == 1 and report.records[0]["model"]:
        model = {int(k[1:]): v for k, v in report.records[0]["model"].items()}
        Path(args.out).write_text(format_assignment(model), encoding="utf-8")
    return code


# ---------------------------------------------------------------------------
# henkin


def run_henkin(report: Report, name: str, theory, rounds, term_cap, bound, emit_prop=None, out=None):
    try:
        run = fo.henkin_run(theory, max_rounds=rounds, term_cap=term_cap, search_bound=bound)
    except Unsatisfiable:
        report.add("theory", f"{name}: unsat", name=name, verdict="unsat")
        return "unsat", None
    image = run.image
    if emit_prop:
        legend = [f"a{i} = {s}" for i, s in enumerate(image.sentences)]
        Path(emit_prop).write_text(pl.format_theory(image.formulas, legend), encoding="utf-8")
    model = str(run.structure)
    if out:
        Path(out).write_text(model + "\n", encoding="utf-8")
    checked = all(fo.model_check(run.structure, f) for f in theory)
    report.add("theory", f"{name}: sat, model checks {'pass' if checked else 'FAIL'}\n{model}", name=name,
               verdict="sat", model=model, domain=run.structure.size, rounds=image.closure.rounds,
               variables=len(image.sentences), axioms=len(image.axioms), model_check=checked)
    return "sat", checked


def cmd_henkin(args, report):
    if args.theory:
        corpus = [(args.theory, fo.parse_fo_theory(_read(args.theory)), None)]
    else:
        corpus = [(name, fo.parse_fo_theory(text), expected) for name, text, expected in FO_CORPUS]
    verdicts, bad = [], 0
    for name, theory, expected in corpus:
        verdict, checked = run_henkin(report, name, theory, args.rounds, args.term_cap, args.bound,
                                      args.emit_prop, args.out)
        verdicts.append(verdict)
        bad += checked is False or (expected is not None and verdict != expected)
    counts = {"theories": len(corpus), "sat": verdicts.count("sat"), "unsat": verdicts.count("unsat")}
    if bad:
        return report.finish(VIOLATED, "model check or expected verdict failed", failures=bad, **counts)
    if len(corpus) == 1 and verdicts[0] == "unsat":
        return report.finish(UNSAT, "unsat", **counts)
    return report.finish(OK, verdicts[0] if len(corpus) == 1 else "corpus verdicts as expected", **counts)


# ---------------------------------------------------------------------------
# encode / decode / roundtrip


def _finite_filter(args) -> FilterPresentation:
    F = parse_filter(_read(args.filter), args.width)
    if not isinstance(F.carrier, FinitePowerset):
        raise ParseError("encoding needs (carrier finite n)")
    return F


def cmd_encode(args, report):
    F = _finite_filter(args)
    T = enc.encode_filter_extension(F)
    if args.fo:
        text = pl.format_theory(T.fo_theory, ["predicate U over constants a_X, one per subset X"])
    else:
        text = pl.format_theory(T.formulas, T.legend())
    if args.out:
        Path(args.out).write_text(text, encoding="utf-8")
    tags = [t for t, _ in T.axioms]
    counts = {t: tags.count(t) for t in ("member", "closure", "ultra")}
    report.add("theory", text if not args.out else None, text=text, constants=len(T.field), **counts)
    return report.finish(OK, f"{len(T.axioms)} axioms over {len(T.field)} constants", axioms=len(T.axioms), **counts)


def _ultrafilter_fields(U: PrincipalUltrafilter, n: int):
    members = sorted((sorted(X) for X in U.members(n)), key=lambda s: (len(s), s))
    return {"point": U.point, "members": members}


def cmd_decode(args, report):
    F = _finite_filter(args)
    T = enc.encode_filter_extension(F)
    text = _read(args.model)
    items = parse_all(text)
    kind = head(items[0]) if len(items) == 1 else None
    if kind == "model":
        M = parse_model(text)
    elif kind == "assignment":
        M = parse_assignment(text)
    else:
        raise ParseError("expected a (model ...) or (assignment ...) file", 1, 1)
    try:
        U = enc.decode_ultrafilter(M, T)
    except NotAModel as exc:
        report.add("violation", f"not a model: {exc.tag} axiom {exc.axiom} fails", tag=exc.tag, axiom=str(exc.axiom))
        return report.finish(VIOLATED, "not a model")
    report.add("ultrafilter", f"{U}", **_ultrafilter_fields(U, F.carrier.n))
    return report.finish(OK, str(U))


def run_roundtrip(report: Report, filters, mode="direct", parallel=1) -> int:
    filters = list(filters)
    results = _map(partial(enc.roundtrip_check, mode=mode), filters, parallel)
    bad = 0
    for i, (F, r) in enumerate(zip(filters, results)):
        bad += not r.ok
        gens = [sorted(g) for g in F.generators]
        decoded = {k: str(v) for k, v in (("direct", r.direct), ("henkin", r.henkin)) if v is not None}
        human = f"[{i}] n={F.carrier.n} gens={gens} -> " + ", ".join(f"{k} {v}" for k, v in decoded.items())
        if not r.ok:
            human += " PROBLEMS: " + "; ".join(r.problems)
        report.add("roundtrip", human, index=i, n=F.carrier.n, generators=gens, decoded=decoded,
                   core=sorted(r.core), ok=r.ok)
    return report.finish(VIOLATED if bad else OK, f"{len(filters) - bad}/{len(filters)} round trips",
                         filters=len(filters), failures=bad)


def principal_filters(n_max: int, width: int):
    for n in range(1, n_max + 1):
        for X in all_subsets(n):
            if X:
                yield FilterPresentation(FinitePowerset(n), (X,), width)


def random_filters(seed: int, count: int, n_max: int, width: int):
    rng = random.Random(seed)
    return [enc.random_proper_filter(rng, rng.randint(1, n_max), width) for _ in range(count)]


def cmd_roundtrip(args, report):
    width = args.width if args.width is not None else DEFAULT_WIDTH
    if args.random is not None:
        _need_seed(args)
        filters = random_filters(args.seed, args.random, args.n, width)
    elif args.principal:
        filters = list(principal_filters(args.n, width))
    elif args.filter:
        filters = [_finite_filter(args)]
    else:
        raise ParseError("roundtrip needs a filter file, --principal or --random N")
    return run_roundtrip(report, filters, args.mode, args.parallel)


# ---------------------------------------------------------------------------
# suite: every check at its default scale, one report


def omega_family(width: int = 16) -> FamilySpec:
    gens = (BUILTINS["evens"](), BUILTINS["odds"](), BUILTINS["mult"](3), BUILTINS["mult"](5),
            BUILTINS["interval"](0, 4), BUILTINS["interval"](2, 7), BUILTINS["mult"](4), BUILTINS["interval"](1, 3))
    return FamilySpec(BaseDomain.omega(width), gens)


def cmd_suite(args, report):
    _need_seed(args)
    codes = []
    for n, w in ((2, 3), (3, 4)):
        fam = FamilySpec.full_powerset(n, w)
        report.add("section", f"== independence, finite({n}) width {w}", section="indep", n=n, width=w)
        codes.append(run_indep(report, fam, patterns_up_to(len(fam), w - 1), exhaustive=True, parallel=args.parallel))
    report.add("section", "== witness abundance, omega, 8 generators", section="abundance")
    codes.append(run_indep(report, omega_family(), all_sign_patterns(range(8)), count=100, show=1,
                           parallel=args.parallel))
    report.add("section", "== iota identity, 1000 random formulas over finite(3)", section="iota")
    formulas = pl.random_formulas(args.seed, 1000, 5, 6)
    codes.append(run_iota(report, FamilySpec.full_powerset(3, 4), formulas, parallel=args.parallel))
    report.add("section", "== partitions, finite(2), every gamma of size <= 3", section="partition")
    fam2 = FamilySpec.full_powerset(2, 3)
    bad = 0
    for k in range(4):
        for gamma in combinations(range(len(fam2)), k):
            r = pl.partition_check(fam2, gamma)
            bad += not (r.holds and r.total == 26)
            report.add("partition", None, gamma=list(gamma), holds=r.holds, total=r.total,
                       sizes=[r.cell_sizes[p] for p in sorted(r.cell_sizes)])
    codes.append(report.finish(VIOLATED if bad else OK, "partitions", failures=bad))
    report.add("section", "== compactness pipeline vs truth tables, 500 theories", section="solve")
    rng = random.Random(args.seed)
    theories = [pl.random_theory(rng, 8, 30) for _ in range(500)]
    codes.append(run_solve(report, theories, "both", parallel=args.parallel))
    report.add("section", "== henkin corpus", section="henkin")
    henkin_bad = 0
    for name, text, expected in FO_CORPUS:
        verdict, checked = run_henkin(report, name, fo.parse_fo_theory(text), fo.DEFAULT_MAX_ROUNDS,
                                      fo.DEFAULT_TERM_CAP, DEFAULT_SEARCH_BOUND)
        henkin_bad += verdict != expected or checked is False
    codes.append(report.finish(VIOLATED if henkin_bad else OK, "henkin corpus", failures=henkin_bad))
    report.add("section", "== encoder round trips", section="roundtrip")
    filters = list(principal_filters(4, DEFAULT_WIDTH)) + random_filters(args.seed, 50, 4, DEFAULT_WIDTH)
    codes.append(run_roundtrip(report, filters, parallel=args.parallel))
    worst = max(codes)
    return report.finish(worst, "suite passed" if worst == OK else "suite failed", sections=len(codes))


# ---------------------------------------------------------------------------
# argument parsing


def _need_seed(args):
    if args.seed is None:
        raise ParseError("random inputs need --seed")


def _positive(text):
    v = int(text)
    if v < 1:
        raise argparse.ArgumentTypeError("must be a positive integer")
    return v


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--width", type=_positive, help="completeness width (default: per command, 4 for filters)")
    common.add_argument("--truncation", type=_positive, default=DEFAULT_TRUNCATION,
                        help="ground-space truncation for omega domains (default 3)")
    common.add_argument("--bound", type=_positive, default=DEFAULT_SEARCH_BOUND,
                        help="search bound for separating elements (default 64)")
    common.add_argument("--seed", type=int, help="seed for random inputs")
    common.add_argument("--parallel", type=_positive, default=1, help="worker processes")
    common.add_argument("--format", choices=("human", "records"), default="human")
    common.add_argument("--exhaustive", action="store_true", help="cross-check against full enumeration")

    p = argparse.ArgumentParser(prog="filterlab", description="Independent families, filters and compactness checks.")
    sub = p.add_subparsers(dest="command", required=True)

    s = sub.add_parser("indep", parents=[common], help="witness cells of an independent family")
    s.add_argument("family")
    g = s.add_mutually_exclusive_group()
    g.add_argument("--cell", help="sign pattern such as 0=1,3=0 (empty string: no constraint)")
    g.add_argument("--all-cells", action="store_true", help="every full sign pattern (default)")
    g.add_argument("--up-to", type=int, help="every pattern over at most K generators")
    s.add_argument("--count", type=_positive, default=1, help="witnesses per cell")
    s.add_argument("--show", type=int, help="print only this many witnesses per cell")

    s = sub.add_parser("iota-check", parents=[common], help="check iota(phi) against the cell decomposition")
    s.add_argument("theory", nargs="?", help="theory file (default: the built-in formula corpus)")
    s.add_argument("--family", help="family file (default: all subsets of finite(3))")
    s.add_argument("--random", type=_positive, metavar="N", help="N seeded random formulas")
    s.add_argument("--depth", type=_positive, default=5)
    s.add_argument("--atoms", type=_positive, default=6)

    s = sub.add_parser("solve", parents=[common], help="solve a propositional theory through filters")
    s.add_argument("theory", nargs="?")
    s.add_argument("--mode", choices=("filter", "direct", "both"), default="both")
    s.add_argument("--random", type=_positive, metavar="N", help="N seeded random theories")
    s.add_argument("--atoms", type=_positive, default=8)
    s.add_argument("--max-formulas", type=_positive, default=30)
    s.add_argument("--out", help="write the model as an assignment file")

    s = sub.add_parser("henkin", parents=[common], help="solve a first-order theory by witness closure")
    s.add_argument("theory", nargs="?", help="theory file (default: the built-in corpus)")
    s.add_argument("--rounds", type=_positive, default=fo.DEFAULT_MAX_ROUNDS)
    s.add_argument("--term-cap", type=_positive, default=fo.DEFAULT_TERM_CAP)
    s.add_argument("--emit-prop", metavar="PATH", help="write the propositional image")
    s.add_argument("--out", metavar="PATH", help="write the model file")

    s = sub.add_parser("encode", parents=[common], help="filter file -> theory over U(a_X)")
    s.add_argument("filter")
    s.add_argument("--fo", action="store_true", help="emit first-order syntax (U a_X) instead of atoms")
    s.add_argument("--out", metavar="PATH")

    s = sub.add_parser("decode", parents=[common], help="model or assignment -> ultrafilter")
    s.add_argument("filter")
    s.add_argument("model")

    s = sub.add_parser("roundtrip", parents=[common], help="encode, solve and decode filters")
    s.add_argument("filter", nargs="?")
    s.add_argument("--mode", choices=("direct", "henkin", "both"), default="direct")
    s.add_argument("--principal", action="store_true", help="every principal filter on n <= N")
    s.add_argument("--random", type=_positive, metavar="K", help="K seeded random proper filters")
    s.add_argument("--n", type=_positive, default=4, help="largest base size for generated filters")

    s = sub.add_parser("suite", parents=[common], help="run every check at default scale")
    return p


COMMANDS = {
    "indep": cmd_indep,
    "iota-check": cmd_iota_check,
    "solve": cmd_solve,
    "henkin": cmd_henkin,
    "encode": cmd_encode,
    "decode": cmd_decode,
    "roundtrip": cmd_roundtrip,
    "suite": cmd_suite,
}


def main(argv=None, out=None, err=None) -> int:
    out = sys.stdout if out is None else out
    err = sys.stderr if err is None else err
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return BAD_INPUT if exc.code else OK
    report = Report(args.command, args.format)
    try:
        code = COMMANDS[args.command](args, report)
    except FilterLabError as exc:
        code = exit_code_for(exc)
        report.add("error", None, error=type(exc).__name__, message=str(exc))
        report.emit(out)
        err.write(f"filterlab {args.command}: {type(exc).__name__}: {exc}\n")
        return code
    except ValueError as exc:
        report.add("error", None, error="ValueError", message=str(exc))
        report.emit(out)
        err.write(f"filterlab {args.command}: {exc}\n")
        return BAD_INPUT
    report.emit(out)
    return code


if __name__ == "__main__":
    sys.exit(main())
