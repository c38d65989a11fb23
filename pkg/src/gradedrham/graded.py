"""Weight pieces of graded algebras ``B = F/I`` and of the quotients ``F/I^k``.

All quotients are computed one weight at a time by row reduction inside the
window of monomials of standard degree ``<= T``.  Columns are listed with the
largest monomial first, so pivots are leading terms and the surviving
representatives are the smallest standard monomials.  For presentations with
only positive weights the window is exact; otherwise ``T`` is enlarged until
the piece is seen to stabilize.
"""

import threading
from dataclasses import dataclass, field
from fractions import Fraction
from itertools import combinations_with_replacement
from math import ceil

from .errors import NotStabilized, WeightMismatch, WeightZeroInfinite, WindowTooSmall
from .polynomial import Polynomial, monomial_weight
from .qlinalg import QMatrix, quotient_basis, rref


# Both orders compare standard degree first; they differ only in tie-breaks.
ORDERS = {
    "grlex": lambda e: (sum(e), e),
    "grevlex": lambda e: (sum(e), tuple(-a for a in reversed(e))),
}


@dataclass(frozen=True)
class WindowPolicy:
    std_degree_cap: int = 6
    tensor_factor_window: int = 4
    growth_factor: Fraction = Fraction(3, 2)
    confirmations: int = 2
    hard_cap: int = 96
    order: str = "grlex"

    def __post_init__(self):
        if self.order not in ORDERS:
            raise ValueError(f"unknown monomial order {self.order!r}; expected one of {sorted(ORDERS)}")
        object.__setattr__(self, "growth_factor", Fraction(self.growth_factor))
        if min(self.std_degree_cap, self.tensor_factor_window, self.confirmations, self.hard_cap) < 1:
            raise ValueError("window policy parameters must be positive")
        if self.growth_factor <= 1:
            raise ValueError("growth_factor must exceed 1")

    def grow(self, t):
        return max(t + 1, ceil(t * self.growth_factor))

    def schedule(self, start):
        """Window sizes start, grow(start), ... up to hard_cap."""
        t = start
        while t <= self.hard_cap:
            yield t
            t = self.grow(t)


@dataclass(frozen=True)
class PieceBasis:
    """Basis and reduction data for one weight piece.

    For quotient kinds, ``labels`` are the representatives and ``reduction``
    maps ambient coordinates to them.  For subspace kinds (ideal powers and
    augmentation powers) ``subspace`` holds reduced echelon rows in ambient
    coordinates and ``labels`` equals ``ambient``.
    """

    kind: str
    weight: int
    labels: tuple
    ambient: tuple
    reduction: QMatrix = None
    subspace: QMatrix = None
    params: dict = field(default_factory=dict)
    stabilized: bool = True
    index: dict = field(init=False, repr=False, compare=False)
    _columns: list = field(init=False, repr=False, compare=False)

    def __post_init__(self):
        object.__setattr__(self, "index", {lab: i for i, lab in enumerate(self.ambient)})
        cols = self.reduction.transpose().rows if self.reduction is not None else None
        object.__setattr__(self, "_columns", cols)

    @property
    def dim(self):
        if self.subspace is not None:
            return self.subspace.nrows
        return len(self.labels)

    def reduce_items(self, items):
        """Sparse quotient coordinates of ``sum c * ambient[label]``."""
        out = {}
        for lab, c in items:
            j = self.index.get(lab)
            if j is None:
                raise WindowTooSmall(f"{lab!r} lies outside the window of the weight-{self.weight} piece")
            for k, v in self._columns[j].items():
                w = out.get(k, 0) + c * v
                if w:
                    out[k] = w
                else:
                    out.pop(k, None)
        return out

    def dense(self, sparse):
        v = [Fraction(0)] * self.dim
        for k, x in sparse.items():
            v[k] = x
        return v


def monomials(weights, d, cap, order="grlex"):
    """Exponent vectors of weight ``d`` and standard degree ``<= cap``.

    Ordered by descending standard degree.  Ties are broken by descending
    lexicographic order in the declared variable order (``grlex``) or by the
    reverse-lexicographic rule (``grevlex``).
    """
    if hasattr(weights, "weights"):
        weights = weights.weights
    weights = tuple(weights)
    n = len(weights)
    out = []
    if cap < 0:
        return out
    positive = all(w > 0 for w in weights)
    if n == 0:
        return [()] if d == 0 else []

    def rec(i, rem_w, rem_deg, acc):
        if i == n - 1:
            w = weights[i]
            if w == 0:
                if rem_w == 0:
                    for a in range(rem_deg + 1):
                        out.append(acc + (a,))
                return
            if rem_w % w == 0:
                a = rem_w // w
                if 0 <= a <= rem_deg:
                    out.append(acc + (a,))
            return
        w = weights[i]
        top = rem_deg
        if positive:
            top = min(top, rem_w // w) if rem_w >= 0 else -1
        for a in range(top + 1):
            rec(i + 1, rem_w - a * w, rem_deg - a, acc + (a,))

    rec(0, d, cap, ())
    out.sort(key=ORDERS[order], reverse=True)
    return out


class GradedAlgebra:
    """Degreewise access to ``B = F/I`` and to ``F/I^k``.

    Pieces are cached per key; the cache is guarded by a lock so that a key
    is computed by one writer and then shared.
    """

    def __init__(self, presentation, policy=None):
        self.presentation = presentation
        self.policy = policy or WindowPolicy()
        self.weights = presentation.weights
        self.nvars = presentation.nvars
        self.regime = presentation.regime
        self.relations = tuple(g for g in presentation.relations if g)
        self._stable = {}
        self._at = {}
        self._gens = {}
        self._lock = threading.RLock()
        self._min_weight = min(self.weights) if self.weights else 1

    # ideal generators -------------------------------------------------

    def ideal_generators(self, k):
        """All products of ``k`` relations (as polynomials)."""
        with self._lock:
            if k not in self._gens:
                gens = []
                for combo in combinations_with_replacement(range(len(self.relations)), k):
                    g = Polynomial.constant(self.nvars)
                    for j in combo:
                        g = g * self.relations[j]
                    gens.append(g)
                self._gens[k] = gens
            return self._gens[k]

    def _ideal_rows(self, k, d, cap, index):
        rows = []
        for g in self.ideal_generators(k):
            wg = g.weight(self.weights)
            dg = g.std_degree()
            for m in monomials(self.weights, d - wg, cap - dg):
                row = {}
                for e, c in g.terms.items():
                    row[index[tuple(a + b for a, b in zip(e, m))]] = c
                rows.append(row)
        return rows

    # quotients F/I^k ------------------------------------------------------

    def _quotient_at(self, k, d, cap):
        key = (k, d, cap)
        with self._lock:
            hit = self._at.get(key)
        if hit is not None:
            return hit
        ambient = monomials(self.weights, d, cap, self.policy.order)
        kind = "algebra" if k == 1 else ("polynomial" if not self.relations else "quotient_power")
        n = len(ambient)
        if k <= 0:
            reps, red = [], QMatrix(0, n)
        elif not self.relations:
            reps, red = list(range(n)), QMatrix.identity(n)
        elif self._exact_cap(d) is not None:
            index = {e: i for i, e in enumerate(ambient)}
            reps, red = quotient_basis(n, self._ideal_rows(k, d, cap, index))
        else:
            reps, red = self._inner_window_quotient(k, d, cap, n)
        piece = PieceBasis(
            kind=kind, weight=d, labels=tuple(ambient[j] for j in reps), ambient=tuple(ambient),
            reduction=red, params={"T": cap, "k": k}, stabilized=True,
        )
        with self._lock:
            self._at.setdefault(key, piece)
        return piece

    def _inner_window_quotient(self, k, d, cap, n):
        """Quotient of ``F_{d, <= cap}`` by ``I^k``, reduced inside a window twice as wide.

        Products ``m * g`` of degree above ``cap`` can cancel down into the
        window; reducing with the wider span catches them.  Echelon rows are
        headed by their highest-degree monomial, so the rows whose pivot has
        degree ``<= cap`` live entirely inside the narrow window.
        """
        inner = monomials(self.weights, d, 2 * cap, self.policy.order)
        offset = len(inner) - n
        index = {e: i for i, e in enumerate(inner)}
        reps, red = quotient_basis(len(inner), self._ideal_rows(k, d, 2 * cap, index))
        keep = [r for r, j in enumerate(reps) if j >= offset]
        rows = [{c - offset: v for c, v in red.rows[r].items() if c >= offset} for r in keep]
        return [reps[r] - offset for r in keep], QMatrix(len(keep), n, rows)

    def min_degree(self, d):
        """Smallest standard degree of a weight-``d`` monomial (None if none up to hard_cap)."""
        reach = {0}
        for deg in range(self.policy.hard_cap + 1):
            if d in reach:
                return deg
            reach = {r + w for r in reach for w in set(self.weights)}
        return None

    def _exact_cap(self, d):
        if self.regime == "positive":
            return d // self._min_weight if d >= 0 else -1
        if self.regime == "finite" and d != 0:
            return -1
        return None

    def quotient_piece(self, k, d, min_cap=None):
        """Stabilized basis of ``(F/I^k)_d``; ``k = 1`` gives ``B_d``."""
        with self._lock:
            piece = self._stable.get((k, d))
        if piece is None:
            piece = self._stabilize_quotient(k, d)
            with self._lock:
                piece = self._stable.setdefault((k, d), piece)
        if min_cap is not None and min_cap > piece.params["T"]:
            if self._exact_cap(d) is not None:
                raise WindowTooSmall(f"degree {min_cap} exceeds the exact window at weight {d}")
            wider = self._quotient_at(k, d, min_cap)
            if wider.labels != piece.labels:
                raise NotStabilized(
                    f"weight-{d} piece of F/I^{k} changed between T={piece.params['T']} and T={min_cap}"
                )
            piece = PieceBasis(
                kind=wider.kind, weight=d, labels=wider.labels, ambient=wider.ambient,
                reduction=wider.reduction, params={**piece.params, "T": min_cap}, stabilized=True,
            )
            with self._lock:
                self._stable[(k, d)] = piece
        return piece

    def _stabilize_quotient(self, k, d):
        exact = self._exact_cap(d)
        if exact is not None:
            return self._quotient_at(k, d, exact)
        pol = self.policy
        low = self.min_degree(d)
        if low is None:
            return self._quotient_at(k, d, 0)
        prev, run, first = None, 0, None
        for cap in pol.schedule(low + pol.std_degree_cap):
            p = self._quotient_at(k, d, cap)
            sig = p.labels
            if sig == prev:
                run += 1
            else:
                prev, run, first = sig, 1, cap
            if run >= pol.confirmations:
                return PieceBasis(kind=p.kind, weight=d, labels=p.labels, ambient=p.ambient,
                                  reduction=p.reduction, params={"T": cap, "T_first": first, "k": k},
                                  stabilized=True)
        if self.regime == "finite":
            raise WeightZeroInfinite(
                f"{self.presentation.name}: weight-0 algebra F/I^{k} did not stabilize by T={pol.hard_cap}"
            )
        raise NotStabilized(f"weight-{d} piece of F/I^{k} did not stabilize by T={pol.hard_cap}")

    def piece(self, d, min_cap=None):
        return self.quotient_piece(1, d, min_cap)

    def ideal_power_piece(self, k, d, cap=None):
        """Subspace ``(I^k)_d`` of ``F_{d, <= T}`` as reduced echelon rows."""
        if cap is None:
            cap = self.quotient_piece(max(k, 1), d).params["T"]
        ambient = monomials(self.weights, d, cap, self.policy.order)
        n = len(ambient)
        if k <= 0:
            span = QMatrix.identity(n)
        elif not self.relations:
            span = QMatrix(0, n)
        else:
            outer = cap if self._exact_cap(d) is not None else 2 * cap
            inner = monomials(self.weights, d, outer, self.policy.order)
            offset = len(inner) - n
            index = {e: i for i, e in enumerate(inner)}
            rows = self._ideal_rows(k, d, outer, index)
            red, pivots, r = rref(QMatrix(len(rows), len(inner), rows))
            kept = [{c - offset: v for c, v in red.rows[i].items()} for i in range(r) if pivots[i] >= offset]
            span = QMatrix(len(kept), n, kept)
        return PieceBasis(kind="ideal_power", weight=d, labels=tuple(ambient), ambient=tuple(ambient),
                          subspace=span, params={"T": cap, "k": k})

    # normal forms -------------------------------------------------------

    def weight_of(self, exps):
        return monomial_weight(exps, self.weights)

    def coords(self, poly, d, k=1):
        """Sparse coordinates of a weight-``d`` polynomial in ``(F/I^k)_d``."""
        if not poly.terms:
            return {}
        for e in poly.terms:
            if self.weight_of(e) != d:
                raise WeightMismatch(f"term of weight {self.weight_of(e)} in a weight-{d} element")
        piece = self.quotient_piece(k, d)
        deg = poly.std_degree()
        if deg > piece.params["T"]:
            piece = self.quotient_piece(k, d, deg)
        return piece.reduce_items(poly.terms.items())

    def monomial_coords(self, exps, k=1, coeff=1):
        d = self.weight_of(exps)
        piece = self.quotient_piece(k, d)
        if sum(exps) > piece.params["T"]:
            piece = self.quotient_piece(k, d, sum(exps))
        return d, piece.reduce_items([(tuple(exps), Fraction(coeff))])

    def element(self, sparse, d, k=1):
        """Polynomial represented by sparse coordinates in ``(F/I^k)_d``."""
        piece = self.quotient_piece(k, d)
        return Polynomial(self.nvars, {piece.labels[i]: c for i, c in sparse.items()})

    def reduce(self, poly, k=1):
        """Normal form of an arbitrary polynomial, as a polynomial in representatives."""
        out = {}
        for d, part in poly.split_by_weight(self.weights).items():
            piece = self.quotient_piece(k, d)
            for i, c in self.coords(part, d, k).items():
                out[piece.labels[i]] = c
        return Polynomial(self.nvars, out)

    def unit_coords(self):
        return self.coords(Polynomial.constant(self.nvars), 0)

    def multiply(self, a, d1, b, d2):
        """Product of sparse coordinate vectors in ``B_d1`` and ``B_d2``."""
        pa = self.element(a, d1)
        pb = self.element(b, d2)
        return self.coords(pa * pb, d1 + d2)


def algebra(p, policy=None):
    """A GradedAlgebra for a Presentation (an algebra is passed through)."""
    if isinstance(p, GradedAlgebra):
        return p
    return GradedAlgebra(p, policy)


def piece_basis(p, d, policy=None):
    """Stabilized basis of ``B_d``."""
    return algebra(p, policy).piece(d)


def normal_form(p, element, piece):
    """Dense coordinates of ``element`` in a fixed piece; the window is not extended."""
    weights = p.weights if hasattr(p, "weights") else tuple(p)
    if not element.terms:
        return [Fraction(0)] * piece.dim
    for e in element.terms:
        if monomial_weight(e, weights) != piece.weight:
            raise WeightMismatch(f"term of weight {monomial_weight(e, weights)} in weight-{piece.weight} piece")
    cap = piece.params.get("T")
    if cap is not None and element.std_degree() > cap:
        raise WindowTooSmall(f"degree {element.std_degree()} exceeds window T={cap}")
    return piece.dense(piece.reduce_items(element.terms.items()))


def multiply(p, a, d1, b, d2, policy=None):
    """Sparse coordinates of ``a * b`` in ``B_{d1+d2}``."""
    return algebra(p, policy).multiply(a, d1, b, d2)


def ideal_power_piece(p, k, d, policy=None, cap=None):
    if k < 0:
        raise ValueError("k must be >= 0")
    return algebra(p, policy).ideal_power_piece(k, d, cap)
