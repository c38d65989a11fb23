"""Windowed weight pieces of tensor powers ``B^{(x)m}``.

A basis label is a tuple of ``(weight, index)`` pairs, one per tensor
factor.  For presentations with negative weights each factor weight is
restricted to ``[-K, K]``; with positive weights all compositions of ``d``
are finite and no window is applied.  The augmentation ideal ``J`` and its
powers are computed inside this window as spans of products, which makes
this module independent of the exact construction in ``jets``.
"""

from fractions import Fraction
from itertools import product

from .graded import PieceBasis
from .qlinalg import Echelon, QMatrix, kernel_basis, quotient_basis


def _compositions(d, m, allowed):
    """Tuples of ``m`` weights from ``allowed`` summing to ``d``."""
    allowed = sorted(allowed)
    lo, hi = allowed[0], allowed[-1]
    out = []

    def rec(k, rem, acc):
        if k == m - 1:
            if rem in allowed_set:
                out.append(acc + (rem,))
            return
        for w in allowed:
            rest = rem - w
            if (m - k - 1) * lo <= rest <= (m - k - 1) * hi:
                rec(k + 1, rest, acc + (w,))

    allowed_set = set(allowed)
    rec(0, d, ())
    return out


class TensorSpace:
    """Weight pieces of the (windowed) ``m``-fold tensor power of ``B``."""

    def __init__(self, alg, m, K=None):
        if m < 1:
            raise ValueError("m must be positive")
        self.alg = alg
        self.m = m
        regime = alg.regime
        if regime == "positive":
            self.K = None
        elif regime == "finite":
            self.K = 0
        else:
            self.K = alg.policy.tensor_factor_window if K is None else K
        self._pieces = {}
        self._prod = {}
        self._aug = {}
        self._pow = {}

    def factor_weights(self, d):
        if self.alg.regime == "positive":
            return [w for w in range(0, max(d, 0) + 1) if self.alg.piece(w).dim]
        return [w for w in range(-self.K, self.K + 1) if self.alg.piece(w).dim]

    def weight_range(self):
        """Weights at which this windowed space can be nonzero (None = unbounded)."""
        if self.K is None:
            return None
        return range(-self.m * self.K, self.m * self.K + 1)

    def piece(self, d):
        hit = self._pieces.get(d)
        if hit is not None:
            return hit
        labels = []
        if self.alg.regime == "positive" and d < 0:
            comps = []
        else:
            comps = _compositions(d, self.m, self.factor_weights(d)) if self.factor_weights(d) else []
        for comp in sorted(comps, reverse=True):
            dims = [range(self.alg.piece(w).dim) for w in comp]
            for idx in product(*dims):
                labels.append(tuple(zip(comp, idx)))
        piece = PieceBasis(kind="tensor", weight=d, labels=tuple(labels), ambient=tuple(labels),
                           reduction=QMatrix.identity(len(labels)),
                           params={"m": self.m, "K": self.K})
        self._pieces[d] = piece
        return piece

    def in_window(self, label):
        if self.K is None:
            return True
        return all(-self.K <= w <= self.K for w, _ in label)

    # multiplication -----------------------------------------------------------

    def _factor_product(self, a, b):
        key = (a, b)
        hit = self._prod.get(key)
        if hit is None:
            (w1, i1), (w2, i2) = a, b
            hit = self.alg.multiply({i1: Fraction(1)}, w1, {i2: Fraction(1)}, w2)
            self._prod[key] = hit
        return hit

    def label_product(self, la, lb):
        """Componentwise product of two basis labels, as {label: coeff}."""
        parts = []
        for a, b in zip(la, lb):
            w = a[0] + b[0]
            parts.append([((w, i), c) for i, c in self._factor_product(a, b).items()])
        out = {}
        for choice in product(*parts):
            c = Fraction(1)
            for _, ci in choice:
                c *= ci
            lab = tuple(x for x, _ in choice)
            out[lab] = out.get(lab, 0) + c
        return {k: v for k, v in out.items() if v}

    def vector_product(self, u, v, du, dv):
        """Product of sparse vectors over pieces ``du`` and ``dv``; None if it leaves the window."""
        pu, pv = self.piece(du), self.piece(dv)
        out = {}
        for i, a in u.items():
            for j, b in v.items():
                for lab, c in self.label_product(pu.labels[i], pv.labels[j]).items():
                    out[lab] = out.get(lab, 0) + a * b * c
        out = {k: c for k, c in out.items() if c}
        if not all(self.in_window(k) for k in out):
            return None
        target = self.piece(du + dv)
        return {target.index[k]: c for k, c in out.items()}

    def multiplication_matrix(self, d):
        """Matrix of ``B^{(x)m} -> B`` at weight d."""
        piece = self.piece(d)
        bd = self.alg.piece(d)
        cols = []
        for lab in piece.labels:
            acc = {lab[0][1]: Fraction(1)}
            w = lab[0][0]
            for wk, ik in lab[1:]:
                acc = self.alg.multiply(acc, w, {ik: Fraction(1)}, wk)
                w += wk
            cols.append(acc)
        return QMatrix(len(cols), bd.dim, cols).transpose()

    # augmentation ideal and its powers -------------------------------------

    def augmentation_ideal(self, d):
        """Sparse basis vectors of ``J_d`` (kernel of multiplication)."""
        hit = self._aug.get(d)
        if hit is None:
            piece = self.piece(d)
            if self.m == 1:
                hit = []
            else:
                hit = [{j: v for j, v in enumerate(vec) if v}
                       for vec in kernel_basis(self.multiplication_matrix(d))]
            self._aug[d] = hit
        return hit

    def _split_weights(self, d):
        if self.alg.regime == "positive":
            return range(0, max(d, -1) + 1)
        if self.K == 0:
            return [0] if d == 0 else []
        r = self.m * self.K
        return [d1 for d1 in range(-r, r + 1) if -r <= d - d1 <= r]

    def aug_power(self, N, d):
        """Sparse echelon basis of ``(J^N)_d`` computed as windowed products."""
        key = (N, d)
        hit = self._pow.get(key)
        if hit is not None:
            return hit
        piece = self.piece(d)
        if N <= 1:
            vecs = self.augmentation_ideal(d)
        else:
            ech = Echelon(piece.dim)
            for d1 in self._split_weights(d):
                d2 = d - d1
                left = self.aug_power(N - 1, d1)
                if not left:
                    continue
                right = self.augmentation_ideal(d2)
                for u in left:
                    for v in right:
                        w = self.vector_product(u, v, d1, d2)
                        if w:
                            ech.add(w)
            vecs = [r for _, r in ech.reduced()]
        self._pow[key] = vecs
        return vecs

    def quotient_piece(self, N, d):
        """``(B^{(x)m} / J^N)_d`` inside the window."""
        piece = self.piece(d)
        reps, red = quotient_basis(piece.dim, self.aug_power(N, d))
        return PieceBasis(kind="windowed_quotient", weight=d, labels=tuple(piece.labels[j] for j in reps),
                          ambient=piece.labels, reduction=red,
                          params={"m": self.m, "N": N, "K": self.K})


def tensor_coface(src, dst, i, d, src_piece=None, dst_piece=None):
    """Insert the unit of ``B`` at slot ``i`` (0-based), then reduce in ``dst_piece``.

    ``src_piece`` defaults to the full windowed piece of ``src``; when it is a
    quotient piece only its representatives are mapped.
    """
    if dst.m != src.m + 1:
        raise ValueError("coface goes from m to m+1 factors")
    if not 0 <= i <= src.m:
        raise ValueError(f"coface index {i} out of range")
    sp = src_piece or src.piece(d)
    tp = dst_piece or dst.piece(d)
    unit = src.alg.unit_coords()
    cols = []
    for lab in sp.labels:
        items = []
        for k, c in unit.items():
            items.append((lab[:i] + ((0, k),) + lab[i:], c))
        cols.append(tp.reduce_items(items))
    return QMatrix(len(cols), tp.dim, cols).transpose()


def _space(p, m, policy, K):
    from .graded import algebra

    return TensorSpace(algebra(p, policy), m, K)


def tensor_piece(p, m, d, policy=None, K=None):
    return _space(p, m, policy, K).piece(d)


def augmentation_ideal_piece(p, m, d, policy=None, K=None):
    """``(J_m)_d`` as echelon rows inside the windowed ``(B^{(x)m})_d``."""
    space = _space(p, m, policy, K)
    return _subspace_piece(space, d, space.augmentation_ideal(d), "augmentation_ideal", {"m": m, "K": space.K})


def aug_power_piece(p, m, N, d, policy=None, K=None):
    if N < 1:
        raise ValueError("N must be >= 1")
    space = _space(p, m, policy, K)
    return _subspace_piece(space, d, space.aug_power(N, d), "aug_power", {"m": m, "N": N, "K": space.K})


def _subspace_piece(space, d, vecs, kind, params):
    piece = space.piece(d)
    ech = Echelon(piece.dim)
    for v in vecs:
        ech.add(v)
    rows = [r for _, r in ech.reduced()]
    return PieceBasis(kind=kind, weight=d, labels=piece.labels, ambient=piece.labels,
                      subspace=QMatrix(len(rows), piece.dim, rows), params=params)


def coface(p, m, i, source_piece, target_piece, policy=None):
    """Matrix of the unit insertion at slot ``i`` between two given pieces.

    Pieces from the windowed tensor route carry labels of ``(weight, index)``
    pairs; pieces of kind ``completed_tensor`` come from the exact jet route.
    """
    from .graded import algebra

    if not 0 <= i <= m:
        raise ValueError(f"coface index {i} out of range 0..{m}")
    if source_piece.weight != target_piece.weight:
        raise ValueError("cofaces preserve weight")
    alg = algebra(p, policy)
    if source_piece.kind == "completed_tensor":
        from .jets import JetSpace, coface_matrix

        N = source_piece.params["N"]
        return coface_matrix(JetSpace(alg, m, N), JetSpace(alg, m + 1, N), i, source_piece.weight)
    unit = alg.unit_coords()
    cols = []
    for lab in source_piece.labels:
        if len(lab) != m:
            raise ValueError(f"source label {lab!r} does not have {m} tensor factors")
        items = [(lab[:i] + ((0, k),) + lab[i:], c) for k, c in unit.items()]
        cols.append(target_piece.reduce_items(items))
    return QMatrix(len(cols), target_piece.dim, cols).transpose()
