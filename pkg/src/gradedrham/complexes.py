"""Finite cochain complexes of Q-vector spaces at one weight."""

from dataclasses import dataclass, field
from fractions import Fraction

from .errors import NotAComplex, NotStabilized
from .qlinalg import Echelon, QMatrix, kernel_basis, rank


@dataclass(frozen=True)
class WeightSliceComplex:
    """``terms[i]`` are PieceBasis-like objects (anything with ``dim``);
    ``differentials[i]`` maps term i to term i+1 (shape dim_{i+1} x dim_i).

    ``truncated`` marks complexes cut off at the top, whose last cohomology
    group is not meaningful.
    """

    weight: int
    terms: tuple
    differentials: tuple
    meta: dict = field(default_factory=dict)
    truncated: bool = False

    @property
    def dims(self):
        return [t.dim for t in self.terms]

    @property
    def reported_degrees(self):
        n = len(self.terms)
        return n - 1 if self.truncated else n


@dataclass(frozen=True)
class _Dim:
    dim: int


def assemble(terms, differentials, meta=None, weight=0, truncated=False):
    """Validate shapes and ``d o d = 0``."""
    terms = tuple(t if hasattr(t, "dim") else _Dim(int(t)) for t in terms)
    differentials = tuple(differentials)
    if len(differentials) != max(len(terms) - 1, 0):
        raise ValueError(f"{len(terms)} terms need {len(terms) - 1} differentials")
    for i, dm in enumerate(differentials):
        if dm.shape != (terms[i + 1].dim, terms[i].dim):
            raise ValueError(
                f"differential {i} has shape {dm.shape}, expected {(terms[i + 1].dim, terms[i].dim)}"
            )
    for i in range(len(differentials) - 1):
        comp = differentials[i + 1] @ differentials[i]
        for r, c, v in comp.nonzero_entries():
            raise NotAComplex(
                f"d{i + 1} o d{i} is nonzero: entry ({r}, {c}) = {v}", index=i, witness=(r, c, v)
            )
    return WeightSliceComplex(weight, terms, differentials, dict(meta or {}), truncated)


def _ranks(c):
    return [rank(dm) for dm in c.differentials]


def cohomology_dims(c):
    """``dim H^i`` for each reported degree."""
    rk = _ranks(c)
    out = []
    for i in range(c.reported_degrees):
        out_rank = rk[i] if i < len(rk) else 0
        in_rank = rk[i - 1] if i >= 1 else 0
        out.append(c.terms[i].dim - out_rank - in_rank)
    return out


def _boundary_echelon(c, i):
    ech = Echelon(c.terms[i].dim)
    if i >= 1:
        for row in c.differentials[i - 1].transpose().rows:
            ech.add(row)
    return ech


def _cocycles(c, i):
    if i < len(c.differentials):
        return kernel_basis(c.differentials[i])
    n = c.terms[i].dim
    return [[Fraction(int(j == k)) for j in range(n)] for k in range(n)]


def cohomology(c):
    """Dimensions and representative cocycles (dense vectors) per reported degree."""
    dims, reps = [], []
    for i in range(c.reported_degrees):
        ech = _boundary_echelon(c, i)
        chosen = []
        for z in _cocycles(c, i):
            if ech.add({j: v for j, v in enumerate(z) if v}):
                chosen.append(z)
        dims.append(len(chosen))
        reps.append(chosen)
    return dims, reps


def induced_image_dims(fine, coarse, maps):
    """Dimensions of the images ``H^i(fine) -> H^i(coarse)`` under a chain map.

    ``maps[i]`` is the matrix of the chain map on term ``i``.
    """
    out = []
    for i in range(min(fine.reported_degrees, coarse.reported_degrees)):
        ech = _boundary_echelon(coarse, i)
        base = ech.rank
        f = maps[i]
        for z in _cocycles(fine, i):
            img = f.apply(z)
            ech.add({j: v for j, v in enumerate(img) if v})
        out.append(ech.rank - base)
    return out


def euler_characteristic(c):
    return sum((-1) ** i * t.dim for i, t in enumerate(c.terms))


@dataclass
class StableValue:
    value: tuple
    param: object
    stabilized: bool
    history: list


def stabilize(family, params, confirmations=2):
    """First value produced ``confirmations`` times in a row along ``params``.

    ``family(p)`` returns a hashable row.  Raises NotStabilized when the
    parameters run out; ``err.history`` keeps what was seen.
    """
    history = []
    prev, run, first = None, 0, None
    for p in params:
        row = tuple(family(p))
        history.append((p, row))
        if row == prev:
            run += 1
        else:
            prev, run, first = row, 1, p
        if run >= confirmations:
            return StableValue(row, first, True, history)
    err = NotStabilized(f"no value repeated {confirmations} times; saw {history}")
    err.history = history
    raise err


@dataclass
class WeightEntry:
    d: int
    h: list
    stabilized: bool
    params: dict = field(default_factory=dict)
    note: str = ""

    def as_json(self):
        out = {"d": self.d, "h": list(self.h), "stabilized": self.stabilized}
        if self.params:
            out["params"] = self.params
        if self.note:
            out["note"] = self.note
        return out


@dataclass
class CohomologyReport:
    source: str
    ring: str
    params: dict
    entries: list
    warnings: list = field(default_factory=list)

    @property
    def degrees(self):
        return max((len(e.h) for e in self.entries), default=0)

    @property
    def totals(self):
        tot = [0] * self.degrees
        for e in self.entries:
            for i, v in enumerate(e.h):
                tot[i] += v
        return tot

    @property
    def stabilized(self):
        return all(e.stabilized for e in self.entries)

    def entry(self, d):
        for e in self.entries:
            if e.d == d:
                return e
        raise KeyError(d)

    def nonzero_weights(self):
        return [e.d for e in self.entries if any(e.h)]

    def table(self):
        """Weight -> dims, for comparisons."""
        return {e.d: tuple(e.h) for e in self.entries}

    def as_json(self):
        return {
            "ring": self.ring,
            "source": self.source,
            "params": self.params,
            "weights": [e.as_json() for e in self.entries],
            "totals": self.totals,
            "warnings": list(self.warnings),
        }


def zero_matrix(rows, cols):
    return QMatrix(rows, cols)
