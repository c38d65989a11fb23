"""A finite algebra whose Kahler complex gives the wrong H^0.

B = Q[x, y]/(4x^3 + 2xy^3, 5y^4 + 3x^2y^2) is the Jacobian algebra of
x^4 + x^2 y^3 + y^5.  It has dimension 14 and three geometric points, so
its Betti cohomology is Q^3 in degree 0.  Kahler forms count one more.
"""

from gradedrham import dimension_report
from gradedrham.corpus import load_corpus

milnor = load_corpus()["milnor"].presentation
rep = dimension_report(milnor, [0], N_max=6, M=2, p_max=5)
print(rep.table())
