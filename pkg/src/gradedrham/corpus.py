"""The bundled golden corpus and the checks run against it."""

from dataclasses import dataclass, replace
from pathlib import Path

from .amitsur import amitsur_cohomology, default_window
from .compare import Workbench, h1_to_oneform, log_cocycle, naive_class_is_nonzero
from .derham import hartshorne_cohomology, naive_cohomology, presentation_independence_check
from .errors import GradedRhamError
from .graded import WindowPolicy
from .ringfile import load_ring, parse_polynomial

CORPUS_DIR = Path(__file__).with_name("corpus")


def corpus_files(directory=None):
    return sorted(Path(directory or CORPUS_DIR).glob("*.ring"))


def load_corpus(directory=None):
    return {rf.name: rf for rf in map(load_ring, corpus_files(directory))}


def resolve_ring(name):
    """A path, or the name of a bundled ring (with or without ``.ring``)."""
    path = Path(name)
    if path.exists():
        return path
    stem = path.name[:-5] if path.name.endswith(".ring") else path.name
    bundled = CORPUS_DIR / f"{stem}.ring"
    if bundled.exists():
        return bundled
    raise FileNotFoundError(f"no ring file {name!r} (and no bundled ring {stem!r})")


@dataclass
class Check:
    ring: str
    what: str
    expected: object
    got: object
    ok: bool
    note: str = ""

    def as_json(self):
        out = {"ring": self.ring, "check": self.what, "expected": self.expected, "got": self.got, "ok": self.ok}
        if self.note:
            out["note"] = self.note
        return out


def _window(pres, params):
    if "window" in params:
        lo, hi = params["window"]
        return range(lo, hi + 1)
    return default_window(pres)


def run_expectation(bench, exp, jobs=1):
    pres = bench.presentation
    prm = exp.params
    window = _window(pres, prm)
    if exp.route == "amitsur":
        return amitsur_cohomology(pres, window, prm.get("N_max", 4), prm.get("M", 3), engine=bench.amitsur, jobs=jobs)
    if exp.route == "amitsur-uncompleted":
        policy = bench.policy
        if "K" in prm:
            policy = replace(policy, tensor_factor_window=prm["K"])
        engine = Workbench(pres, policy).amitsur
        return amitsur_cohomology(pres, window, M=prm.get("M", 3), uncompleted=True, engine=engine, jobs=jobs)
    if exp.route == "hartshorne":
        return hartshorne_cohomology(pres, window, prm.get("p_max", 8), engine=bench.derham, jobs=jobs)
    return naive_cohomology(pres, window, engine=bench.derham, jobs=jobs)


def artin_violations(report, krull):
    """Weights with a nonzero ``H^i`` for ``i > krull``."""
    return [(e.d, i) for e in report.entries for i, v in enumerate(e.h) if v and i > krull]


def check_ring(rf, corpus=None, policy=None, jobs=1):
    bench = Workbench(rf.presentation, policy or WindowPolicy())
    checks = []
    for exp in rf.expectations:
        label = f"{exp.route} totals"
        try:
            rep = run_expectation(bench, exp, jobs)
        except GradedRhamError as err:
            checks.append(Check(rf.name, label, list(exp.totals), None, False, f"{err.code}: {err}"))
            continue
        got = rep.totals
        ok = rep.stabilized and tuple(got) == exp.totals
        note = "" if rep.stabilized else "; ".join(rep.warnings)
        checks.append(Check(rf.name, label, list(exp.totals), got, ok, note))
        if rf.krull is not None and exp.route != "naive":
            bad = artin_violations(rep, rf.krull)
            checks.append(Check(rf.name, f"{exp.route} vanishes above degree {rf.krull}", [], bad, not bad))
    for unit, inverse, form in rf.periods:
        pres = rf.presentation
        u = parse_polynomial(unit, pres.symbols)
        ui = parse_polynomial(inverse, pres.symbols)
        try:
            lc = log_cocycle(bench, u, ui, 4)
            oneform = h1_to_oneform(bench, lc.coords, 4)
            ok = lc.verified and str(oneform) == form and naive_class_is_nonzero(bench, oneform)
            checks.append(Check(rf.name, f"log cocycle of {unit}", form, str(oneform), ok,
                                "" if lc.verified else "cocycle check failed"))
        except GradedRhamError as err:
            checks.append(Check(rf.name, f"log cocycle of {unit}", form, None, False, f"{err.code}: {err}"))
    for other in rf.same_as:
        if corpus is None or other not in corpus:
            checks.append(Check(rf.name, f"same Hartshorne table as {other}", True, None, False, "ring not found"))
            continue
        hexp = next((e for e in rf.expectations if e.route == "hartshorne"), None)
        prm = hexp.params if hexp else {}
        res = presentation_independence_check(rf.presentation, corpus[other].presentation,
                                              _window(rf.presentation, prm), prm.get("p_max", 8), bench.policy)
        checks.append(Check(rf.name, f"same Hartshorne table as {other}", True, res["agree"], res["agree"],
                            "" if res["agree"] else str(res["mismatches"])))
    return checks


def run_corpus(directory=None, names=None, policy=None, jobs=1):
    corpus = load_corpus(directory)
    out = []
    for name, rf in corpus.items():
        if names and name not in names:
            continue
        out.extend(check_ring(rf, corpus, policy, jobs))
    return out
