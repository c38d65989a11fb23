"""Independent reference computations built on sympy.

Nothing here imports the package's linear algebra or quotient code: pieces
come from sympy Groebner bases, complexes from sympy matrices over QQ.
"""

from itertools import combinations, product

import sympy as sp


def brute_monomials(weights, d, cap):
    """All exponent vectors of weight d and degree <= cap, by exhaustive search."""
    n = len(weights)
    out = []
    for e in product(range(cap + 1), repeat=n):
        if sum(e) <= cap and sum(a * w for a, w in zip(e, weights)) == d:
            out.append(e)
    return out


def groebner_piece_dim(gens, relations, weights, d):
    """dim B_d for positive weights via standard monomials of a grevlex Groebner basis."""
    if not relations:
        return len(brute_monomials(weights, d, d // min(weights))) if d >= 0 else 0
    G = sp.groebner(relations, *gens, order="grevlex")
    leads = [sp.Poly(g, *gens).monoms(order="grevlex")[0] for g in G.exprs]
    if d < 0:
        return 0
    count = 0
    for e in brute_monomials(weights, d, d // min(weights)):
        if not any(all(a >= b for a, b in zip(e, lm)) for lm in leads):
            count += 1
    return count


def _forms(gens, weights, d, j):
    """Monomial F-forms (exponents, S) of weight d and degree j."""
    n = len(gens)
    out = []
    for S in combinations(range(n), j):
        ws = sum(weights[i] for i in S)
        if d - ws < 0:
            continue
        for e in brute_monomials(weights, d - ws, (d - ws) // min(weights)):
            out.append((e, S))
    return out


def _vector(expr_by_S, basis, gens):
    index = {b: k for k, b in enumerate(basis)}
    v = [0] * len(basis)
    for S, expr in expr_by_S.items():
        if expr == 0:
            continue
        for mono, c in sp.Poly(sp.expand(expr), *gens).terms():
            v[index[(tuple(mono), S)]] += c
    return v


def _sign(i, S):
    return -1 if sum(1 for s in S if s < i) % 2 else 1


def _d(expr_by_S, gens):
    out = {}
    for S, f in expr_by_S.items():
        for i, x in enumerate(gens):
            if i in S:
                continue
            T = tuple(sorted(S + (i,)))
            out[T] = out.get(T, 0) + _sign(i, S) * sp.diff(f, x)
    return out


def _rank(rows, ncols):
    if not rows or ncols == 0:
        return 0
    return sp.Matrix(rows).rank()


def naive_complex_dims(gens, relations, weights, d):
    """Cohomology of the weight-d Kahler de Rham complex of F/(relations), positive weights.

    Works in F-forms: the relation subspace R_j is spanned by m*g*dx_S and
    m*dg^dx_S'.  H^j = {w : dw in R_{j+1}} / (R_j + d A_{j-1}).
    Returns (term dims, cohomology dims).
    """
    n = len(gens)
    mono = lambda e: sp.Mul(*[x ** a for x, a in zip(gens, e)])
    bases = [_forms(gens, weights, d, j) for j in range(n + 2)]
    rel_rows, d_rows = [], []
    for j in range(n + 1):
        basis = bases[j]
        rows = []
        for g in relations:
            wg = sp.Poly(g, *gens).monoms()[0]
            wg = sum(a * w for a, w in zip(wg, weights))
            for e, S in _forms(gens, weights, d - wg, j):
                rows.append(_vector({S: mono(e) * g}, basis, gens))
            if j >= 1:
                dg = {(i,): sp.diff(g, gens[i]) for i in range(n)}
                for e, Sp in _forms(gens, weights, d - wg, j - 1):
                    wedge = {}
                    for (i,), gi in dg.items():
                        if i in Sp:
                            continue
                        T = tuple(sorted(Sp + (i,)))
                        wedge[T] = wedge.get(T, 0) + _sign(i, Sp) * gi * mono(e)
                    rows.append(_vector(wedge, basis, gens))
        rel_rows.append(rows)
        d_rows.append([_vector(_d({S: mono(e)}, gens), bases[j + 1], gens) for e, S in basis] if j < n else [])
    dims, coh = [], []
    for j in range(n + 1):
        A = len(bases[j])
        rR = _rank(rel_rows[j], A)
        dims.append(A - rR)
        if j < n:
            nxt = len(bases[j + 1])
            r_next = _rank(rel_rows[j + 1], nxt)
            r_both = _rank(d_rows[j] + rel_rows[j + 1], nxt)
            z = A - (r_both - r_next)
        else:
            z = A
        b = _rank(rel_rows[j] + (d_rows[j - 1] if j else []), A)
        coh.append(z - b)
    return dims, coh
