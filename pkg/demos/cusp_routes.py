"""All three routes on the cusp y^2 = x^3, weight by weight."""

from gradedrham import dimension_report
from gradedrham.ringfile import parse_ring

cusp = parse_ring("ring cusp\nvars x:2 y:3\nrels y^2 - x^3\n")
rep = dimension_report(cusp, range(0, 13), N_max=4, M=2, p_max=8)
print(rep.table())
