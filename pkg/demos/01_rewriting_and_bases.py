"""Rewriting systems, confluence certificates, and graded bases.

Builds the quantum matrix space and the odd quantum sphere, certifies
confluence by resolving every overlap and inclusion ambiguity, and prints
the graded dimensions read off the irreducible words.
"""

from qsphere.parser import parse_expr, render
from qsphere.presentations import build

for name, N in (("mq", 2), ("sphere", 2), ("sphere", 3)):
    P = build(name, N)
    rep = P.system.check_confluence()
    print(f"{name}(N={N}): {len(P.system.rules)} rules, "
          f"{rep.total} ambiguities, confluent={rep.confluent}")
    dims = [len(level) for level in P.system.enumerate_basis(5)]
    print(f"  graded dimensions to degree 5: {dims}")

# normal forms are canonical: straighten an out-of-order product
P = build("sphere", 2)
for src in ("z[2]*z[1]", "zs[1]*z[1]", "zs[2]*z[2]*z[1]"):
    a = parse_expr(src, P)
    print(f"  nf({src}) = {render(P.nf(a))}")
