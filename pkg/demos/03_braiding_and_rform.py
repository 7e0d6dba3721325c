"""The braiding operator, its Hecke eigenstructure, and the universal r-form.

Prints the exact braiding matrix for N = 2, checks the quadratic (Hecke)
relation and the eigenprojection ranks, identifies the kernel of the sphere
multiplication map with the shifted image of the braiding, and evaluates the
universal r-form on a few products.
"""

from qsphere.linalg import rank
from qsphere.parser import render_scalar
from qsphere.rmatrix import (
    RFormEvaluator,
    check_hecke,
    eigenprojections,
    mult_kernel,
    rhat,
    sigma,
)
from qsphere.freealg import NcPoly, u

R = rhat(2)
print("braiding matrix for N = 2 (basis e1e1, e1e2, e2e1, e2e2):")
for row in R:
    print("  [" + ", ".join(render_scalar(x) for x in row) + "]")

for N in (2, 3, 4):
    p_plus, p_minus = eigenprojections(N)
    info = mult_kernel(N)
    print(f"N={N}: hecke={check_hecke(N)}, "
          f"rank P+ = {rank(p_plus)}, rank P- = {rank(p_minus)}, "
          f"ker mu = im(R - q): {info['equal']} (dim {info['dim_kernel']})")

ev = RFormEvaluator(2)
print("r-form on suq(2), parameter t with t^2 = 1/q:")
for (a, b) in (((1, 1), (1, 1)), ((1, 1), (2, 2)), ((2, 1), (1, 2))):
    val = ev.eval_words((u(*a),), (u(*b),))
    print(f"  r(u[{a[0]},{a[1]}] (x) u[{b[0]},{b[1]}]) = {render_scalar(val, var='t')}")
prod = NcPoly.monomial((u(1, 1), u(1, 2)))
print(f"  r(u[1,1]*u[1,2] (x) u[2,1]) = "
      f"{render_scalar(ev.eval(prod, NcPoly.gen(u(2, 1))), var='t')}")
print(f"  sigma recomputed from the r-form equals t*R: "
      f"{ev.sigma_matrix() == sigma(2, ev.ctx)}")
