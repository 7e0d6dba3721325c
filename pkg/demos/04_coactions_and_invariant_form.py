"""Sphere coactions, the morphism builder, and the invariant inner product.

Embeds the sphere into the special unitary coordinate algebra, builds both
standard coactions, solves the invariance linear system for the form on the
span of the coordinates, and runs the three morphism-builder presets.
"""

from qsphere.errors import HypothesisFails
from qsphere.freealg import NcPoly, u, z
from qsphere.hopf import (
    build_coaction,
    build_u_morphism,
    check_form_preservation,
    check_intertwine,
    solve_invariant_form,
)
from qsphere.parser import render, render_scalar
from qsphere.presentations import build, build_free_matrix, build_torus, embed_sphere

phi = embed_sphere(2)
print("sphere -> suq(2) embedding (verified relation-by-relation):")
for i in (1, 2):
    print(f"  z[{i}] -> {render(phi.images[z(i)])}")

for name in ("deltaR", "rho_u"):
    rho = build_coaction(name, 2)
    print(f"coaction {name}: verified (coefficients in {rho.coeff.name})")

F = solve_invariant_form(2, "z_zstar")
H = solve_invariant_form(2, "zstar_z")
print("invariant form, N = 2:")
print("  F = diag(" + ", ".join(render_scalar(F[i][i]) for i in range(2)) + ")")
print("  H = diag(" + ", ".join(render_scalar(H[i][i]) for i in range(2)) + ")")
rho = build_coaction("deltaR", 2)
print(f"  coaction preserves H: {check_form_preservation(rho, H)}")

# morphism builder presets
Q = build("uq", 2)
qmat = [[NcPoly.gen(u(i + 1, j + 1)) for j in range(2)] for i in range(2)]
psi = build_u_morphism(Q, qmat)
rho_u = build_coaction("rho_u", 2)
print(f"identity preset: intertwines the coaction: {check_intertwine(psi, rho_u, rho_u)}")

T = build_torus(2)
tmat = [[NcPoly.gen(("T", i + 1)) if i == j else NcPoly() for j in range(2)]
        for i in range(2)]
psi_t = build_u_morphism(T, tmat)
print("torus preset: built; dinv -> " + render(psi_t.images[("d",)]))

try:
    free = build_free_matrix(2)
    fmat = [[NcPoly.gen(("a", i + 1, j + 1)) for j in range(2)] for i in range(2)]
    build_u_morphism(free, fmat)
    print("free preset: unexpectedly succeeded")
except HypothesisFails as exc:
    print(f"free preset: fails at hypothesis ({exc.which}), as it must")
