"""Exact weight pieces of ``B^{(x)m} / J^N``.

Write the ``m`` tensor factors' variables as ``x^(1) = x`` and
``x^(k) = x + e_k`` for ``k = 2..m``.  This change of variables identifies

    B^{(x)m} / J^N  =  Q[x, e] / (g(x), g(x + e_k) for every relation g, (e)^N)

with ``J`` generated by the ``e`` variables.  Every weight piece is therefore
spanned by pairs ``(mu, b)`` with ``mu`` an ``e``-monomial of degree ``< N``
and ``b`` a basis element of ``B``, modulo the Taylor differences
``g(x + e_k) - g(x)``.  No tensor-factor window is needed.

Elements of the jet ring are plain ``dict``s ``mu -> Polynomial in x``.
"""

from fractions import Fraction
from itertools import combinations_with_replacement

from .graded import PieceBasis
from .polynomial import Polynomial, expand_shift, monomial_weight
from .qlinalg import QMatrix, quotient_basis


def _emonomials(nev, N):
    """All exponent vectors in ``nev`` variables of total degree < N."""
    out = []
    for deg in range(N):
        for combo in combinations_with_replacement(range(nev), deg):
            e = [0] * nev
            for i in combo:
                e[i] += 1
            out.append(tuple(e))
    return out


def _add(mu, nu):
    return tuple(a + b for a, b in zip(mu, nu))


class JetSpace:
    """Weight pieces of ``B^{(x)m}/J^N`` and the maps between them."""

    def __init__(self, alg, m, N):
        if m < 1 or N < 1:
            raise ValueError("need m >= 1 and N >= 1")
        self.alg = alg
        self.m = m
        self.N = N
        self.n = alg.nvars
        self.nev = (m - 1) * self.n
        self.eweights = tuple(alg.weights) * (m - 1)
        self.emonos = _emonomials(self.nev, N) if m > 1 else [()]
        self._by_weight = {}
        for mu in self.emonos:
            self._by_weight.setdefault(monomial_weight(mu, self.eweights), []).append(mu)
        self._pieces = {}
        self._deltas = None

    def eweight(self, mu):
        return monomial_weight(mu, self.eweights)

    def block(self, k, alpha):
        """Embed an ``n``-vector into e-block ``k`` (``k = 2..m``)."""
        mu = [0] * self.nev
        off = (k - 2) * self.n
        mu[off:off + self.n] = alpha
        return tuple(mu)

    def taylor_differences(self):
        """For each relation, ``{alpha: coefficient polynomial}`` of ``g(x+y) - g(x)``."""
        if self._deltas is None:
            out = []
            n = self.n
            for g in self.alg.relations:
                delta = {}
                for e, c in g.terms.items():
                    for xs, ys, k in expand_shift(e):
                        if any(ys):
                            delta.setdefault(ys, {})
                            delta[ys][xs] = delta[ys].get(xs, 0) + c * k
                out.append((g, {a: Polynomial(n, t) for a, t in delta.items() if any(t.values())}))
            self._deltas = out
        return self._deltas

    def spanning_labels(self, d):
        """Labels ``(mu, b)`` ordered with high e-degree first."""
        labels = []
        mus = sorted(
            (mu for w, ms in self._by_weight.items() for mu in ms),
            key=lambda mu: (sum(mu), mu), reverse=True,
        )
        for mu in mus:
            bd = self.alg.piece(d - self.eweight(mu))
            for i in range(bd.dim):
                labels.append((mu, i))
        return labels

    def piece(self, d):
        hit = self._pieces.get(d)
        if hit is not None:
            return hit
        labels = self.spanning_labels(d)
        index = {lab: j for j, lab in enumerate(labels)}
        rows = []
        if self.m > 1:
            alg = self.alg
            for g, delta in self.taylor_differences():
                wg = g.weight(alg.weights)
                for nu in self.emonos:
                    if sum(nu) >= self.N - 1:
                        continue
                    db = d - self.eweight(nu) - wg
                    bpiece = alg.piece(db)
                    for bi, bexp in enumerate(bpiece.labels):
                        bpoly = Polynomial.monomial(bexp)
                        for k in range(2, self.m + 1):
                            row = {}
                            for alpha, cpoly in delta.items():
                                mu = _add(nu, self.block(k, alpha))
                                if sum(mu) >= self.N:
                                    continue
                                w = d - self.eweight(mu)
                                for i, c in alg.coords(cpoly * bpoly, w).items():
                                    j = index[(mu, i)]
                                    row[j] = row.get(j, 0) + c
                            row = {j: c for j, c in row.items() if c}
                            if row:
                                rows.append(row)
        reps, red = quotient_basis(len(labels), rows)
        piece = PieceBasis(
            kind="completed_tensor", weight=d, labels=tuple(labels[j] for j in reps),
            ambient=tuple(labels), reduction=red, params={"m": self.m, "N": self.N},
        )
        self._pieces[d] = piece
        return piece

    # elements ---------------------------------------------------------------

    def coords(self, elem, d):
        """Sparse quotient coordinates of a weight-``d`` jet element."""
        items = []
        for mu, poly in elem.items():
            if sum(mu) >= self.N or not poly:
                continue
            w = d - self.eweight(mu)
            for i, c in self.alg.coords(poly, w).items():
                items.append(((mu, i), c))
        return self.piece(d).reduce_items(items)

    def label_element(self, label, d):
        mu, i = label
        bexp = self.alg.piece(d - self.eweight(mu)).labels[i]
        return {mu: Polynomial.monomial(bexp)}

    def element(self, sparse, d):
        """Jet element for sparse coordinates on the representatives of piece ``d``."""
        piece = self.piece(d)
        out = {}
        for j, c in sparse.items():
            mu, i = piece.labels[j]
            bexp = self.alg.piece(d - self.eweight(mu)).labels[i]
            out[mu] = out.get(mu, Polynomial(self.n)) + Polynomial.monomial(bexp, c)
        return out

    def mul(self, a, b):
        """Product in ``B[e]/(e)^N`` with coefficients reduced in ``B``.

        The Taylor relations are not applied; ``coords`` does that.
        """
        out = {}
        for mu1, p1 in a.items():
            for mu2, p2 in b.items():
                mu = _add(mu1, mu2)
                if sum(mu) >= self.N:
                    continue
                out[mu] = out.get(mu, Polynomial(self.n)) + p1 * p2
        return {mu: self.alg.reduce(p) for mu, p in out.items() if p}

    def one(self):
        return {(0,) * self.nev: Polynomial.constant(self.n)}

    def from_tensor(self, factors):
        """Jet element of ``f_1 (x) ... (x) f_m`` for polynomials ``f_k`` in x."""
        if len(factors) != self.m:
            raise ValueError("wrong number of tensor factors")
        elem = {(0,) * self.nev: factors[0]}
        for k, f in enumerate(factors[1:], start=2):
            shifted = {}
            for e, c in f.terms.items():
                for xs, ys, b in expand_shift(e):
                    if sum(ys) >= self.N:
                        continue
                    mu = self.block(k, ys)
                    shifted[mu] = shifted.get(mu, Polynomial(self.n)) + Polynomial.monomial(xs, c * b)
            elem = self.mul(elem, shifted)
        return elem


def _shift_images(src, dst, i):
    """Images of x and of the source e-variables under the coface inserting slot ``i``.

    Returns ``(shift_block, e_images)`` where ``shift_block`` is the target
    block added to x (or None) and ``e_images[v]`` lists ``(target var, sign)``.
    """
    n = src.n

    def sigma(k):
        return k if k <= i else k + 1

    base = sigma(1)
    shift_block = base if base >= 2 else None
    images = []
    for k in range(2, src.m + 1):
        tk = sigma(k)
        for v in range(n):
            terms = []
            if tk >= 2:
                terms.append(((tk - 2) * n + v, 1))
            if shift_block is not None:
                terms.append(((shift_block - 2) * n + v, -1))
            images.append(terms)
    return shift_block, images


def coface_matrix(src, dst, i, d):
    """Matrix of the coface ``delta_i`` from ``src`` (level m) to ``dst`` (level m+1) at weight d."""
    if dst.m != src.m + 1 or dst.N != src.N:
        raise ValueError("coface goes from m factors to m+1 factors at equal N")
    if not 0 <= i <= src.m:
        raise ValueError(f"coface index {i} out of range 0..{src.m}")
    sp = src.piece(d)
    tp = dst.piece(d)
    n = src.n
    N = src.N
    shift_block, images = _shift_images(src, dst, i)
    cols = []
    for mu, bi in sp.labels:
        bexp = src.alg.piece(d - src.eweight(mu)).labels[bi]
        # pure e-part: product of linear forms
        epart = {(0,) * dst.nev: Fraction(1)}
        for v, a in enumerate(mu):
            for _ in range(a):
                nxt = {}
                for nu, c in epart.items():
                    for var, sgn in images[v]:
                        t = list(nu)
                        t[var] += 1
                        t = tuple(t)
                        if sum(t) < N:
                            nxt[t] = nxt.get(t, 0) + c * sgn
                epart = {k: c for k, c in nxt.items() if c}
        if shift_block is None:
            xpart = [(bexp, (0,) * n, 1)]
        else:
            xpart = [(xs, ys, c) for xs, ys, c in expand_shift(bexp) if sum(ys) < N]
        elem = {}
        for xs, ys, c in xpart:
            base = dst.block(shift_block, ys) if shift_block is not None else (0,) * dst.nev
            for nu, c2 in epart.items():
                mu2 = _add(base, nu)
                if sum(mu2) >= N:
                    continue
                elem.setdefault(mu2, {})
                elem[mu2][xs] = elem[mu2].get(xs, 0) + c * c2
        elem = {k: Polynomial(n, t) for k, t in elem.items()}
        cols.append(dst.coords(elem, d))
    return QMatrix(len(cols), tp.dim, cols).transpose()


def truncation_matrix(fine, coarse, d):
    """Reduction ``B^m/J^{N+r} -> B^m/J^N`` at weight d."""
    fp = fine.piece(d)
    cp = coarse.piece(d)
    cols = []
    for mu, bi in fp.labels:
        if sum(mu) >= coarse.N:
            cols.append({})
        else:
            cols.append(cp.reduce_items([((mu, bi), Fraction(1))]))
    return QMatrix(len(cols), cp.dim, cols).transpose()
