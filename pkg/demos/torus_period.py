"""The period of dt/t on the punctured line, computed on the Amitsur side.

Builds log(s (x) t) in (B (x) B)/J^N, checks that it is a cocycle, sends it
to a Kahler 1-form and checks that the class is not exact.
"""

from gradedrham import Workbench, amitsur_cohomology, h1_to_oneform, log_cocycle, naive_class_is_nonzero
from gradedrham.ringfile import parse_polynomial, parse_ring

torus = parse_ring("ring torus\nvars t:1 s:-1\nrels t*s - 1\n")
bench = Workbench(torus)

rep = amitsur_cohomology(torus, range(-6, 7), N_max=4, M=3, engine=bench.amitsur)
print(rep.as_json()["totals"], "at weights", rep.nonzero_weights())

t, s = (parse_polynomial(v, torus.symbols) for v in ("t", "s"))
for N in (2, 3, 4, 5):
    lc = log_cocycle(bench, t, s, N)
    form = h1_to_oneform(bench, lc.coords, N)
    print(f"N={N}: cocycle {'OK' if lc.verified else 'FAILED'}, form {form}, "
          f"nonzero class: {naive_class_is_nonzero(bench, form)}")
