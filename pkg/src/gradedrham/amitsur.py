"""Truncated completed Amitsur complexes ``B -> (B^2)^ -> (B^3)^ -> ...`` of ``Q -> B``.

Level ``i`` of the weight-``d`` slice is ``(B^{(x)(i+1)} / J^N)_d`` and the
differential is the alternating sum of the unit-insertion cofaces.  The
completion is recovered by letting ``N`` grow: at each ``N`` the reported
row is the image of ``H^*(slice at N+1) -> H^*(slice at N)``, which is the
part of the cohomology that survives into the inverse limit.
"""

from .complexes import (
    CohomologyReport, WeightEntry, assemble, cohomology_dims, induced_image_dims, stabilize,
)
from .errors import NotStabilized
from .graded import GradedAlgebra, WindowPolicy
from .jets import JetSpace, coface_matrix, truncation_matrix
from .tensor import TensorSpace, tensor_coface


class AmitsurEngine:
    """Shared caches for all Amitsur computations on one presentation."""

    def __init__(self, presentation, policy=None, alg=None):
        self.presentation = presentation
        self.policy = policy or WindowPolicy()
        self.alg = alg or GradedAlgebra(presentation, self.policy)
        self._jets = {}
        self._tensors = {}
        self._slices = {}

    def jet(self, m, N):
        key = (m, N)
        if key not in self._jets:
            self._jets[key] = JetSpace(self.alg, m, N)
        return self._jets[key]

    def tensor(self, m, K=None):
        key = (m, K)
        if key not in self._tensors:
            self._tensors[key] = TensorSpace(self.alg, m, K)
        return self._tensors[key]

    def slice(self, d, N, M):
        """Completed slice truncated at level ``M`` and adic order ``N``."""
        if N < 1 or M < 1:
            raise ValueError("need N >= 1 and M >= 1")
        key = ("completed", d, N, M)
        hit = self._slices.get(key)
        if hit is not None:
            return hit
        spaces = [self.jet(i + 1, N) for i in range(M + 1)]
        terms = [s.piece(d) for s in spaces]
        diffs = []
        for i in range(M):
            src, dst = spaces[i], spaces[i + 1]
            total = None
            for j in range(i + 2):
                cf = coface_matrix(src, dst, j, d)
                cf = cf if j % 2 == 0 else cf.scale(-1)
                total = cf if total is None else total + cf
            diffs.append(total)
        c = assemble(terms, diffs, meta={"source": "amitsur", "N": N, "M": M}, weight=d, truncated=True)
        self._slices[key] = c
        return c

    def truncation_maps(self, d, N, M):
        """Chain map from the slice at ``N+1`` to the slice at ``N``."""
        return [truncation_matrix(self.jet(i + 1, N + 1), self.jet(i + 1, N), d) for i in range(M + 1)]

    def uncompleted_slice(self, d, M, K=None):
        """Slice of the plain Amitsur complex inside the tensor-factor window ``K``."""
        key = ("uncompleted", d, K, M)
        hit = self._slices.get(key)
        if hit is not None:
            return hit
        spaces = [self.tensor(i + 1, K) for i in range(M + 1)]
        terms = [s.piece(d) for s in spaces]
        diffs = []
        for i in range(M):
            total = None
            for j in range(i + 2):
                cf = tensor_coface(spaces[i], spaces[i + 1], j, d)
                cf = cf if j % 2 == 0 else cf.scale(-1)
                total = cf if total is None else total + cf
            diffs.append(total)
        c = assemble(terms, diffs, meta={"source": "amitsur-uncompleted", "K": K, "M": M},
                     weight=d, truncated=True)
        self._slices[key] = c
        return c

    def windowed_slice(self, d, N, M, K=None):
        """Completed slice built from windowed tensor products (independent route)."""
        spaces = [self.tensor(i + 1, K) for i in range(M + 1)]
        terms = [s.quotient_piece(N, d) for s in spaces]
        diffs = []
        for i in range(M):
            total = None
            for j in range(i + 2):
                cf = tensor_coface(spaces[i], spaces[i + 1], j, d, terms[i], terms[i + 1])
                cf = cf if j % 2 == 0 else cf.scale(-1)
                total = cf if total is None else total + cf
            diffs.append(total)
        return assemble(terms, diffs, meta={"source": "amitsur-windowed", "N": N, "K": K, "M": M},
                        weight=d, truncated=True)

    # cohomology -----------------------------------------------------------

    def surviving_dims(self, d, N, M):
        """Dimensions of ``image(H(slice_{N+1}) -> H(slice_N))``."""
        fine = self.slice(d, N + 1, M)
        coarse = self.slice(d, N, M)
        return induced_image_dims(fine, coarse, self.truncation_maps(d, N, M))

    def weight_entry(self, d, N_max, M, N_min=2):
        conf = self.policy.confirmations
        try:
            sv = stabilize(lambda N: self.surviving_dims(d, N, M), range(N_min, N_max), conf)
        except NotStabilized as err:
            last = err.history[-1][1] if err.history else ()
            return WeightEntry(d, list(last), False, {"N_max": N_max, "history": _hist(err.history)})
        return WeightEntry(d, list(sv.value), True, {"N": sv.param, "N_max": N_max})

    def uncompleted_entry(self, d, M):
        pol = self.policy
        conf = pol.confirmations
        if self.alg.regime != "mixed":
            return WeightEntry(d, cohomology_dims(self.uncompleted_slice(d, M)), True, {})
        try:
            sv = stabilize(lambda K: cohomology_dims(self.uncompleted_slice(d, M, K)),
                           pol.schedule(pol.tensor_factor_window), conf)
        except NotStabilized as err:
            last = err.history[-1][1] if err.history else ()
            return WeightEntry(d, list(last), False, {"history": _hist(err.history)})
        return WeightEntry(d, list(sv.value), True, {"K": sv.param})


def _hist(history):
    return [[p, list(row)] for p, row in history]


def default_window(presentation):
    if presentation.regime == "finite":
        return range(0, 1)
    if presentation.regime == "positive":
        return range(0, 13)
    return range(-8, 9)


def amitsur_slice(presentation, d, N, M, policy=None, engine=None):
    engine = engine or AmitsurEngine(presentation, policy)
    return engine.slice(d, N, M)


def amitsur_cohomology(presentation, window=None, N_max=4, M=3, policy=None, uncompleted=False,
                       engine=None, jobs=1):
    """Per-weight stabilized cohomology ``H^0..H^{M-1}`` of the Amitsur complex."""
    engine = engine or AmitsurEngine(presentation, policy)
    window = list(default_window(presentation) if window is None else window)
    if presentation.regime == "finite":
        window = [d for d in window if d == 0] or [0]

    def one(d):
        if uncompleted:
            return engine.uncompleted_entry(d, M)
        return engine.weight_entry(d, N_max, M)

    entries = _map_weights(one, window, jobs)
    warnings = [f"weight {e.d} did not stabilize" for e in entries if not e.stabilized]
    params = {"window": [window[0], window[-1]], "M": M, "uncompleted": uncompleted}
    if not uncompleted:
        params["N_max"] = N_max
    return CohomologyReport("amitsur", presentation.name, params, entries, warnings)


def _map_weights(fn, window, jobs):
    if jobs and jobs > 1:
        from concurrent.futures import ThreadPoolExecutor

        with ThreadPoolExecutor(max_workers=jobs) as ex:
            return list(ex.map(fn, window))
    return [fn(d) for d in window]
