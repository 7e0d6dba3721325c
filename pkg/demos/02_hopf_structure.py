"""Hopf-algebra structure of the quantum unitary and special unitary groups.

Verifies the coalgebra axioms and antipode laws on all basis words up to a
degree bound, shows the quantum determinant is central and group-like, and
runs the entrywise matrix identities certifying the antipode and star.
"""

from qsphere.freealg import NcPoly
from qsphere.hopf import check_grouplike, counit, verify_hopf
from qsphere.presentations import (
    build,
    check_central,
    check_matrix_identities,
    quantum_determinant,
)
from qsphere.parser import render

det = quantum_determinant(2)
mq = build("mq", 2)
print(f"quantum determinant: {render(det)}")
print(f"  central in mq(2):  {check_central(det, mq)}")
print(f"  group-like:        {check_grouplike(det, mq)}")
print(f"  counit:            {render(NcPoly.unit(counit(det, mq)))}")

for name in ("suq", "uq"):
    P = build(name, 2)
    stats = verify_hopf(P, 3)
    print(f"{name}(2): axioms hold on {stats['basis_words_checked']} basis words "
          f"(degree <= {stats['degree_bound']})")
    report = check_matrix_identities(P)
    print(f"  matrix identities: {sorted(report)}")
