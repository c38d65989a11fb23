"""Sparse multivariate polynomials with rational coefficients, and presentations."""

from dataclasses import dataclass, field
from fractions import Fraction
from math import comb

from .errors import NonHomogeneousRelation, WeightZeroInfinite


class Polynomial:
    """Polynomial as a map exponent-tuple -> Fraction (no zero coefficients)."""

    __slots__ = ("nvars", "terms")

    def __init__(self, nvars, terms=None):
        self.nvars = nvars
        clean = {}
        for e, c in (terms or {}).items():
            e = tuple(e)
            if len(e) != nvars:
                raise ValueError(f"exponent {e} has wrong length for {nvars} variables")
            c = Fraction(c)
            if c:
                clean[e] = clean.get(e, 0) + c
                if not clean[e]:
                    del clean[e]
        self.terms = clean

    @classmethod
    def constant(cls, nvars, c=1):
        return cls(nvars, {(0,) * nvars: c})

    @classmethod
    def variable(cls, nvars, i):
        e = [0] * nvars
        e[i] = 1
        return cls(nvars, {tuple(e): 1})

    @classmethod
    def monomial(cls, exps, c=1):
        return cls(len(exps), {tuple(exps): c})

    def is_zero(self):
        return not self.terms

    def __bool__(self):
        return bool(self.terms)

    def __eq__(self, other):
        if isinstance(other, (int, Fraction)):
            other = Polynomial.constant(self.nvars, other)
        return isinstance(other, Polynomial) and self.nvars == other.nvars and self.terms == other.terms

    def __hash__(self):
        return hash((self.nvars, frozenset(self.terms.items())))

    def _coerce(self, other):
        if isinstance(other, Polynomial):
            if other.nvars != self.nvars:
                raise ValueError("polynomials over different variable sets")
            return other
        return Polynomial.constant(self.nvars, other)

    def __add__(self, other):
        other = self._coerce(other)
        t = dict(self.terms)
        for e, c in other.terms.items():
            v = t.get(e, 0) + c
            if v:
                t[e] = v
            else:
                t.pop(e, None)
        return Polynomial(self.nvars, t)

    __radd__ = __add__

    def __neg__(self):
        return Polynomial(self.nvars, {e: -c for e, c in self.terms.items()})

    def __sub__(self, other):
        return self + (-self._coerce(other))

    def __rsub__(self, other):
        return self._coerce(other) - self

    def __mul__(self, other):
        if isinstance(other, (int, Fraction)):
            return Polynomial(self.nvars, {e: c * other for e, c in self.terms.items()})
        other = self._coerce(other)
        t = {}
        for e1, c1 in self.terms.items():
            for e2, c2 in other.terms.items():
                e = tuple(a + b for a, b in zip(e1, e2))
                t[e] = t.get(e, 0) + c1 * c2
        return Polynomial(self.nvars, t)

    __rmul__ = __mul__

    def __pow__(self, k):
        if k < 0:
            raise ValueError("negative power")
        out = Polynomial.constant(self.nvars)
        base = self
        while k:
            if k & 1:
                out = out * base
            base = base * base
            k >>= 1
        return out

    def derivative(self, i):
        t = {}
        for e, c in self.terms.items():
            if e[i]:
                f = list(e)
                f[i] -= 1
                t[tuple(f)] = c * e[i]
        return Polynomial(self.nvars, t)

    def std_degree(self):
        return max((sum(e) for e in self.terms), default=0)

    def weights_of_terms(self, weights):
        return {monomial_weight(e, weights) for e in self.terms}

    def weight(self, weights):
        ws = self.weights_of_terms(weights)
        if len(ws) > 1:
            raise NonHomogeneousRelation(f"polynomial mixes weights {sorted(ws)}")
        return ws.pop() if ws else None

    def split_by_weight(self, weights):
        out = {}
        for e, c in self.terms.items():
            out.setdefault(monomial_weight(e, weights), {})[e] = c
        return {w: Polynomial(self.nvars, t) for w, t in out.items()}

    def __repr__(self):
        return f"Polynomial({render_polynomial(self, [f'x{i}' for i in range(self.nvars)])})"


def monomial_weight(exps, weights):
    return sum(a * w for a, w in zip(exps, weights))


def _fmt_coeff(c):
    return str(c.numerator) if c.denominator == 1 else f"{c.numerator}/{c.denominator}"


def render_monomial(exps, symbols):
    parts = []
    for a, s in zip(exps, symbols):
        if a == 1:
            parts.append(s)
        elif a > 1:
            parts.append(f"{s}^{a}")
    return "*".join(parts)


def render_polynomial(p, symbols):
    """Render with descending graded-lex term order; parseable by the ring parser."""
    if not p.terms:
        return "0"
    out = []
    for e in sorted(p.terms, key=lambda e: (sum(e), e), reverse=True):
        c = p.terms[e]
        mono = render_monomial(e, symbols)
        mag = abs(c)
        if not mono:
            body = _fmt_coeff(mag)
        elif mag == 1:
            body = mono
        else:
            body = f"{_fmt_coeff(mag)}*{mono}"
        if not out:
            out.append(("-" if c < 0 else "") + body)
        else:
            out.append((" - " if c < 0 else " + ") + body)
    return "".join(out)


def expand_shift(exps):
    """Expand the monomial ``x^exps`` under ``x_v -> x_v + y_v``.

    Returns a list of ``(x_exponents, y_exponents, integer coefficient)``.
    """
    out = [((), (), 1)]
    for v, a in enumerate(exps):
        nxt = []
        for xs, ys, c in out:
            for k in range(a + 1):
                nxt.append((xs + (a - k,), ys + (k,), c * comb(a, k)))
        out = nxt
    return out


@dataclass(frozen=True)
class Presentation:
    """A weight-graded finitely presented algebra ``Q[vars] / (relations)``."""

    name: str
    variables: tuple
    relations: tuple = field(default_factory=tuple)

    def __post_init__(self):
        object.__setattr__(self, "variables", tuple((str(s), int(w)) for s, w in self.variables))
        object.__setattr__(self, "relations", tuple(self.relations))
        syms = [s for s, _ in self.variables]
        if len(set(syms)) != len(syms):
            raise ValueError(f"duplicate variable symbols in {syms}")
        for g in self.relations:
            if g.nvars != len(syms):
                raise ValueError("relation over the wrong number of variables")
            ws = g.weights_of_terms(self.weights)
            if len(ws) > 1:
                mons = sorted(g.terms, key=lambda e: monomial_weight(e, self.weights))
                lo, hi = mons[0], mons[-1]
                err = NonHomogeneousRelation(
                    f"relation {render_polynomial(g, syms)} is not weight-homogeneous: "
                    f"{render_monomial(lo, syms) or '1'} has weight {monomial_weight(lo, self.weights)}, "
                    f"{render_monomial(hi, syms) or '1'} has weight {monomial_weight(hi, self.weights)}"
                )
                err.pair = (lo, hi)
                raise err
        zero = [w == 0 for w in self.weights]
        if any(zero) and not all(zero):
            raise WeightZeroInfinite(
                "weight-0 variables are only supported when every variable has weight 0"
            )

    @property
    def symbols(self):
        return tuple(s for s, _ in self.variables)

    @property
    def weights(self):
        return tuple(w for _, w in self.variables)

    @property
    def nvars(self):
        return len(self.variables)

    @property
    def regime(self):
        """'positive', 'finite' (all weights zero) or 'mixed'."""
        ws = self.weights
        if all(w > 0 for w in ws):
            return "positive"
        if all(w == 0 for w in ws):
            return "finite"
        return "mixed"

    def relation_weight(self, g):
        return g.weight(self.weights)

    def poly(self, terms):
        return Polynomial(self.nvars, terms)

    def var(self, symbol):
        return Polynomial.variable(self.nvars, self.symbols.index(symbol))
