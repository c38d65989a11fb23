"""Cross-route comparisons.

``dimension_report`` lines up the Amitsur, Hartshorne and naive tables;
``log_cocycle`` and ``h1_to_oneform`` make the degree-one comparison explicit
by sending a 1-cocycle ``c`` in ``(B (x) B)/J^N`` to the Kahler form obtained
from ``J/J^2 = Omega^1_B``.
"""

from dataclasses import dataclass, field
from fractions import Fraction

from .amitsur import AmitsurEngine, amitsur_cohomology, default_window
from .complexes import _boundary_echelon
from .derham import DeRhamEngine, hartshorne_cohomology, naive_cohomology, render_form
from .errors import Inconclusive, NotACocycle, NotInAugmentationIdeal, UnitNotInvertible
from .graded import GradedAlgebra, WindowPolicy
from .polynomial import render_polynomial


class Workbench:
    """One presentation with the engines of all three routes sharing a single algebra."""

    def __init__(self, presentation, policy=None):
        self.presentation = presentation
        self.policy = policy or WindowPolicy()
        self.alg = GradedAlgebra(presentation, self.policy)
        self.amitsur = AmitsurEngine(presentation, self.policy, self.alg)
        self.derham = DeRhamEngine(presentation, self.policy, self.alg)


def _bench(p, policy):
    return p if isinstance(p, Workbench) else Workbench(p, policy)


# dimension tables ------------------------------------------------------------


@dataclass
class ComparisonReport:
    ring: str
    amitsur: object
    hartshorne: object
    naive: object
    verdict: str
    mismatches: list = field(default_factory=list)

    @property
    def compared_degrees(self):
        return min(self.amitsur.degrees, self.hartshorne.degrees)

    def rows(self):
        out = []
        for e in self.hartshorne.entries:
            try:
                a = self.amitsur.entry(e.d)
            except KeyError:
                a = None
            nv = self.naive.entry(e.d)
            out.append((e.d, a, e, nv))
        return out

    def as_json(self):
        return {
            "ring": self.ring,
            "verdict": self.verdict,
            "compared_degrees": self.compared_degrees,
            "mismatches": self.mismatches,
            "amitsur": self.amitsur.as_json(),
            "hartshorne": self.hartshorne.as_json(),
            "naive": self.naive.as_json(),
        }

    def table(self):
        lines = [f"ring {self.ring}", f"{'d':>4}  {'amitsur':<16}{'hartshorne':<16}{'naive':<16}"]

        def cell(e):
            if e is None:
                return "-"
            return ",".join(map(str, e.h)) + ("" if e.stabilized else " ?")

        for d, a, h, nv in self.rows():
            lines.append(f"{d:>4}  {cell(a):<16}{cell(h):<16}{cell(nv):<16}")
        tot = lambda r: ",".join(map(str, r.totals))
        lines.append(f"{'tot':>4}  {tot(self.amitsur):<16}{tot(self.hartshorne):<16}{tot(self.naive):<16}")
        lines.append(f"verdict: {self.verdict}")
        return "\n".join(lines)


def dimension_report(p, window=None, N_max=4, M=3, p_max=8, policy=None, jobs=1, strict=False):
    """Side-by-side tables; Amitsur and Hartshorne are compared in degrees ``0..M-1``.

    The verdict is AGREE, MISMATCH, or INCONCLUSIVE when some weight did not
    stabilize on either of the two compared routes (``strict`` raises instead).
    """
    bench = _bench(p, policy)
    pres = bench.presentation
    window = list(default_window(pres) if window is None else window)
    am = amitsur_cohomology(pres, window, N_max, M, engine=bench.amitsur, jobs=jobs)
    ha = hartshorne_cohomology(pres, window, p_max, engine=bench.derham, jobs=jobs)
    nv = naive_cohomology(pres, window, engine=bench.derham, jobs=jobs)
    width = min(am.degrees, ha.degrees)
    mismatches = []
    for e in ha.entries:
        a = am.entry(e.d)
        if list(a.h[:width]) != list(e.h[:width]):
            mismatches.append({"d": e.d, "amitsur": list(a.h), "hartshorne": list(e.h)})
    if not (am.stabilized and ha.stabilized):
        verdict = "INCONCLUSIVE"
        if strict:
            raise Inconclusive(f"{pres.name}: " + "; ".join(am.warnings + ha.warnings))
    else:
        verdict = "MISMATCH" if mismatches else "AGREE"
    return ComparisonReport(pres.name, am, ha, nv, verdict, mismatches)


# degree one ------------------------------------------------------------------


def amitsur_d1(bench, N, d):
    """Differential ``(B^2/J^N)_d -> (B^3/J^N)_d``."""
    return bench.amitsur.slice(d, N, 2).differentials[1]


@dataclass
class OneForm:
    weight: int
    coords: dict
    labels: tuple
    text: str

    def __str__(self):
        return self.text


def h1_to_oneform(p, cocycle, N, d=0, policy=None, check=True):
    """Image in ``(Omega^1_B)_d`` of a 1-cocycle given by coordinates in ``(B^2/J^N)_d``.

    ``cocycle`` is a sparse dict or a dense list over the representatives of
    the jet piece.  The coordinates with empty ``e``-monomial are the image
    under multiplication and must vanish; the linear ``e``-part ``b * e_v`` is
    sent to ``b dx_v``.
    """
    if N < 2:
        raise ValueError("N must be >= 2")
    bench = _bench(p, policy)
    jet = bench.amitsur.jet(2, N)
    piece = jet.piece(d)
    if isinstance(cocycle, (list, tuple)):
        cocycle = {j: Fraction(c) for j, c in enumerate(cocycle) if c}
    if check:
        residual = amitsur_d1(bench, N, d).apply(piece.dense(cocycle))
        if any(residual):
            raise NotACocycle(f"coboundary of the cochain is nonzero: {residual}")
    n = bench.presentation.nvars
    zero = (0,) * n
    items = []
    for j, c in cocycle.items():
        mu, bi = piece.labels[j]
        if mu == zero:
            raise NotInAugmentationIdeal("the cochain does not multiply to zero")
        if sum(mu) != 1:
            continue
        v = mu.index(1)
        bexp = bench.alg.piece(d - jet.eweight(mu)).labels[bi]
        items.append((((v,), bexp), c))
    term = bench.derham.naive_term(1, d)
    coords = bench.derham.naive_reduce(term, items)
    return OneForm(d, coords, term.labels, render_form(term.labels, coords, bench.presentation.symbols))


def naive_class_is_nonzero(p, form, policy=None):
    """True when a closed naive 1-form is not exact."""
    bench = _bench(p, policy)
    c = bench.derham.naive_slice(form.weight)
    vec = [form.coords.get(j, Fraction(0)) for j in range(c.terms[1].dim)]
    if c.differentials[1:] and any(c.differentials[1].apply(vec)):
        raise NotACocycle("the 1-form is not closed")
    ech = _boundary_echelon(c, 1)
    return not ech.contains({j: v for j, v in form.coords.items() if v})


@dataclass
class LogCocycle:
    unit: str
    inverse: str
    N: int
    coords: dict
    element: dict
    verified: bool
    residual: list

    def as_json(self):
        return {"unit": self.unit, "inverse": self.inverse, "N": self.N, "cocycle_ok": self.verified,
                "coords": {str(k): str(v) for k, v in sorted(self.coords.items())}}


def log_cocycle(p, u, u_inv, N, policy=None):
    """``c = log(u_inv (x) u) = sum_{k<N} (-1)^{k+1} v^k / k`` with ``v = u_inv (x) u - 1``."""
    if N < 2:
        raise ValueError("N must be >= 2")
    bench = _bench(p, policy)
    alg = bench.alg
    pres = bench.presentation
    ws = pres.weights
    wu = u.weight(ws) if u.terms else None
    wi = u_inv.weight(ws) if u_inv.terms else None
    if wu is None or wi is None or wu + wi != 0:
        raise UnitNotInvertible("unit and inverse must be nonzero and of opposite weights")
    if alg.coords(u * u_inv, 0) != alg.unit_coords():
        raise UnitNotInvertible(
            f"{render_polynomial(u, pres.symbols)} * {render_polynomial(u_inv, pres.symbols)} is not 1 in the algebra"
        )
    jet = bench.amitsur.jet(2, N)
    one = jet.one()
    v = _sub(jet.from_tensor([alg.reduce(u_inv), alg.reduce(u)]), one)
    total, power = {}, one
    for k in range(1, N):
        power = jet.mul(power, v)
        sign = 1 if k % 2 else -1
        total = _add(total, power, Fraction(sign, k))
    total = {mu: alg.reduce(poly) for mu, poly in total.items() if poly}
    coords = jet.coords(total, 0)
    residual = amitsur_d1(bench, N, 0).apply(jet.piece(0).dense(coords))
    verified = not any(residual)
    return LogCocycle(render_polynomial(u, pres.symbols), render_polynomial(u_inv, pres.symbols), N, coords,
                      total, verified, residual)


def _add(a, b, scale=1):
    out = dict(a)
    for mu, poly in b.items():
        term = poly * Fraction(scale) if scale != 1 else poly
        out[mu] = out[mu] + term if mu in out else term
    return {mu: q for mu, q in out.items() if q}


def _sub(a, b):
    return _add(a, b, -1)
