"""De Rham complexes of ``B = F/I`` at one weight.

* Hartshorne's complex, through its quotients by the infinitesimal filtration:
  ``F/I^p -> F/I^{p-1} (x) Omega^1_F -> F/I^{p-2} (x) Omega^2_F -> ...``
  with ``I^k = F`` for ``k <= 0``.
* The naive complex of Kahler forms ``Omega^j_B``.

Form labels are ``(S, monomial)`` with ``S`` an increasing tuple of variable
indices standing for ``dx_S``; ``dx_i ^ dx_S = (-1)^{#{s in S: s < i}} dx_{S+i}``.
Subsets are listed in decreasing lexicographic order, so in quotients the
forms involving later variables are eliminated first.
"""

from dataclasses import dataclass, field
from fractions import Fraction
from itertools import combinations

from .complexes import (
    CohomologyReport, WeightEntry, assemble, cohomology_dims, induced_image_dims, stabilize,
)
from .errors import NotStabilized
from .graded import GradedAlgebra, PieceBasis, WindowPolicy
from .polynomial import render_monomial
from .qlinalg import QMatrix, quotient_basis


def wedge_sign(i, S):
    return -1 if sum(1 for s in S if s < i) % 2 else 1


def insert_sorted(i, S):
    return tuple(sorted(S + (i,)))


def subsets(n, j):
    return sorted(combinations(range(n), j), reverse=True)


@dataclass(frozen=True)
class FormPiece:
    """Weight-``d`` forms of degree ``j``: labels ``(S, monomial)``."""

    degree: int
    weight: int
    labels: tuple
    reduction: QMatrix = None
    ambient: tuple = None
    index: dict = field(init=False, repr=False, compare=False)

    def __post_init__(self):
        amb = self.ambient if self.ambient is not None else self.labels
        object.__setattr__(self, "index", {lab: i for i, lab in enumerate(amb)})

    @property
    def dim(self):
        return len(self.labels)


def render_form(labels, coords, symbols):
    """Human-readable ``c*m*dx^dy + ...`` from sparse coordinates."""
    parts = []
    for j in sorted(coords):
        c = coords[j]
        S, exps = labels[j]
        mono = render_monomial(exps, symbols)
        dx = "^".join("d" + symbols[i] for i in S)
        body = "*".join(p for p in (mono, dx) if p) or "1"
        mag = abs(c)
        coef = "" if mag == 1 else (f"{mag.numerator}" if mag.denominator == 1 else f"{mag}") + "*"
        sign = "-" if c < 0 else ("+" if parts else "")
        parts.append((f" {sign} " if parts else sign) + coef + body)
    return "".join(parts).strip() or "0"


class DeRhamEngine:
    def __init__(self, presentation, policy=None, alg=None):
        self.presentation = presentation
        self.policy = policy or WindowPolicy()
        self.alg = alg or GradedAlgebra(presentation, self.policy)
        self.n = presentation.nvars
        self.weights = presentation.weights
        self._cache = {}

    def subset_weight(self, S):
        return sum(self.weights[i] for i in S)

    # Hartshorne -------------------------------------------------------------

    def hartshorne_term(self, p, j, d):
        labels = []
        k = p - j
        if k >= 1:
            for S in subsets(self.n, j):
                piece = self.alg.quotient_piece(k, d - self.subset_weight(S))
                labels.extend((S, e) for e in piece.labels)
        return FormPiece(j, d, tuple(labels))

    def _exterior_derivative(self, source, target, coords_of):
        """Matrix of ``f dx_S -> sum_i d_i f dx_i ^ dx_S`` followed by ``coords_of``."""
        cols = []
        for S, exps in source.labels:
            items = {}
            for i in range(self.n):
                if i in S or exps[i] == 0:
                    continue
                sign = wedge_sign(i, S)
                de = list(exps)
                de[i] -= 1
                T = insert_sorted(i, S)
                for lab, c in coords_of(T, tuple(de), Fraction(sign * exps[i])):
                    items[lab] = items.get(lab, 0) + c
            cols.append(items)
        return cols

    def hartshorne_slice(self, p, d):
        key = ("H", p, d)
        if key in self._cache:
            return self._cache[key]
        if p < 1:
            raise ValueError("truncation level must be >= 1")
        terms = [self.hartshorne_term(p, j, d) for j in range(self.n + 1)]
        diffs = []
        for j in range(self.n):
            src, dst = terms[j], terms[j + 1]
            k = p - j - 1

            def coords_of(T, exps, c, k=k):
                if k < 1:
                    return []
                piece_d, sp = self.alg.monomial_coords(exps, k, c)
                piece = self.alg.quotient_piece(k, piece_d)
                return [((T, piece.labels[i]), v) for i, v in sp.items()]

            cols = []
            for items in self._exterior_derivative(src, dst, coords_of):
                cols.append({dst.index[lab]: v for lab, v in items.items() if v})
            diffs.append(QMatrix(len(cols), dst.dim, cols).transpose())
        c = assemble(terms, diffs, meta={"source": "hartshorne", "p": p}, weight=d)
        self._cache[key] = c
        return c

    def hartshorne_truncation_maps(self, p, d):
        """Chain map from the level ``p+1`` slice to the level ``p`` slice."""
        fine = self.hartshorne_slice(p + 1, d)
        coarse = self.hartshorne_slice(p, d)
        maps = []
        for j in range(self.n + 1):
            src, dst = fine.terms[j], coarse.terms[j]
            k = p - j
            cols = []
            for S, exps in src.labels:
                col = {}
                if k >= 1:
                    wd, sp = self.alg.monomial_coords(exps, k)
                    piece = self.alg.quotient_piece(k, wd)
                    for i, v in sp.items():
                        col[dst.index[(S, piece.labels[i])]] = v
                cols.append(col)
            maps.append(QMatrix(len(cols), dst.dim, cols).transpose())
        return maps

    def hartshorne_surviving(self, p, d):
        fine = self.hartshorne_slice(p + 1, d)
        coarse = self.hartshorne_slice(p, d)
        return induced_image_dims(fine, coarse, self.hartshorne_truncation_maps(p, d))

    def hartshorne_entry(self, d, p_max, p_min=1):
        try:
            sv = stabilize(lambda p: self.hartshorne_surviving(p, d), range(p_min, p_max),
                           self.policy.confirmations)
        except NotStabilized as err:
            last = err.history[-1][1] if err.history else ()
            return WeightEntry(d, list(last), False,
                               {"p_max": p_max, "history": [[p, list(r)] for p, r in err.history]})
        return WeightEntry(d, list(sv.value), True, {"p": sv.param, "p_max": p_max})

    # naive ------------------------------------------------------------------

    def naive_term(self, j, d):
        key = ("Nt", j, d)
        if key in self._cache:
            return self._cache[key]
        alg = self.alg
        ambient = []
        for S in subsets(self.n, j):
            piece = alg.piece(d - self.subset_weight(S))
            ambient.extend((S, e) for e in piece.labels)
        index = {lab: i for i, lab in enumerate(ambient)}
        rows = []
        if j >= 1:
            for g in alg.relations:
                wg = g.weight(self.weights)
                grads = [(i, g.derivative(i)) for i in range(self.n)]
                for S in subsets(self.n, j - 1):
                    bw = d - wg - self.subset_weight(S)
                    for bexp in alg.piece(bw).labels:
                        row = {}
                        for i, gi in grads:
                            if i in S or not gi:
                                continue
                            T = insert_sorted(i, S)
                            w = d - self.subset_weight(T)
                            prod = gi * _mono(bexp)
                            piece = alg.piece(w)
                            for k, c in alg.coords(prod, w).items():
                                col = index[(T, piece.labels[k])]
                                row[col] = row.get(col, 0) + wedge_sign(i, S) * c
                        row = {c: v for c, v in row.items() if v}
                        if row:
                            rows.append(row)
        reps, red = quotient_basis(len(ambient), rows)
        fp = FormPiece(j, d, tuple(ambient[r] for r in reps), red, tuple(ambient))
        self._cache[key] = fp
        return fp

    def naive_relations_rank(self, j, d):
        t = self.naive_term(j, d)
        return len(t.ambient) - t.dim

    def naive_reduce(self, term, items):
        cols = term.reduction.transpose().rows
        out = {}
        for lab, c in items:
            for k, v in cols[term.index[lab]].items():
                out[k] = out.get(k, 0) + c * v
        return {k: v for k, v in out.items() if v}

    def naive_slice(self, d):
        key = ("N", d)
        if key in self._cache:
            return self._cache[key]
        terms = [self.naive_term(j, d) for j in range(self.n + 1)]
        alg = self.alg
        diffs = []
        for j in range(self.n):
            src, dst = terms[j], terms[j + 1]

            def coords_of(T, exps, c):
                wd, sp = alg.monomial_coords(exps, 1, c)
                piece = alg.piece(wd)
                return [((T, piece.labels[i]), v) for i, v in sp.items()]

            cols = [self.naive_reduce(dst, items.items())
                    for items in self._exterior_derivative(src, dst, coords_of)]
            diffs.append(QMatrix(len(cols), dst.dim, cols).transpose())
        c = assemble(terms, diffs, meta={"source": "naive"}, weight=d)
        self._cache[key] = c
        return c


def _mono(exps):
    from .polynomial import Polynomial

    return Polynomial.monomial(exps)


def _window(presentation, window):
    from .amitsur import default_window

    window = list(default_window(presentation) if window is None else window)
    if presentation.regime == "finite":
        window = [d for d in window if d == 0] or [0]
    return window


def hartshorne_slice(presentation, p_level, d, policy=None, engine=None):
    engine = engine or DeRhamEngine(presentation, policy)
    return engine.hartshorne_slice(p_level, d)


def hartshorne_cohomology(presentation, window=None, p_max=8, policy=None, engine=None, jobs=1):
    if p_max < 2:
        raise ValueError("p_max must be >= 2")
    engine = engine or DeRhamEngine(presentation, policy)
    window = _window(presentation, window)
    from .amitsur import _map_weights

    entries = _map_weights(lambda d: engine.hartshorne_entry(d, p_max), window, jobs)
    warnings = [f"weight {e.d} did not stabilize" for e in entries if not e.stabilized]
    return CohomologyReport("hartshorne", presentation.name,
                            {"window": [window[0], window[-1]], "p_max": p_max}, entries, warnings)


def naive_slice(presentation, d, policy=None, engine=None):
    engine = engine or DeRhamEngine(presentation, policy)
    return engine.naive_slice(d)


def naive_cohomology(presentation, window=None, policy=None, engine=None, jobs=1):
    engine = engine or DeRhamEngine(presentation, policy)
    window = _window(presentation, window)
    from .amitsur import _map_weights

    def one(d):
        try:
            return WeightEntry(d, cohomology_dims(engine.naive_slice(d)), True)
        except NotStabilized as err:
            return WeightEntry(d, [], False, {"error": str(err)})

    entries = _map_weights(one, window, jobs)
    warnings = [f"weight {e.d} did not stabilize" for e in entries if not e.stabilized]
    return CohomologyReport("naive", presentation.name, {"window": [window[0], window[-1]]},
                            entries, warnings)


def presentation_independence_check(p1, p2, window=None, p_max=8, policy=None):
    """Compare stabilized Hartshorne tables of two presentations of one algebra."""
    r1 = hartshorne_cohomology(p1, window, p_max, policy)
    r2 = hartshorne_cohomology(p2, window, p_max, policy)
    width = max(r1.degrees, r2.degrees)

    def pad(h):
        return tuple(h) + (0,) * (width - len(h))

    mismatches = []
    for e1 in r1.entries:
        e2 = r2.entry(e1.d)
        if not (e1.stabilized and e2.stabilized) or pad(e1.h) != pad(e2.h):
            mismatches.append({"d": e1.d, "first": list(e1.h), "second": list(e2.h),
                               "stabilized": [e1.stabilized, e2.stabilized]})
    return {"agree": not mismatches, "mismatches": mismatches, "first": r1, "second": r2}
