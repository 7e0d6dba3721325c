"""Dirac spectrum on the five-sphere via Gelfand-Tsetlin counting.

Multiplicities are pattern counts for top rows (n+k, k, ..., k, 0); the
eigenvalue is -k on the (0, k) summands and n + k otherwise.  Cross-checks
one bigraded dimension against an exact rank computed by rewriting.
"""

from qsphere.spectrum import (
    bigraded_dim_check,
    dim_irrep,
    enumerate_gt,
    spectrum_with_multiplicities,
)

print(f"patterns with top row (1, 0, 0): {len(enumerate_gt((1, 0, 0)))}")
print(f"dim of the (1,1) summand for N = 3: {dim_irrep(3, 1, 1)}")

out = spectrum_with_multiplicities(3, 3)
print("spectrum on the five-sphere (|eigenvalue| <= 3):")
for entry in out["spectrum"]:
    summands = ", ".join(f"({s['n']},{s['k']}):{s['dim']}" for s in entry["summands"])
    print(f"  lambda = {entry['eigenvalue']:>2}: multiplicity {entry['multiplicity']:>3}"
          f"   [{summands}]")

bi = bigraded_dim_check(3, 1, 1)
print(f"bidegree (1,1) dimension: rank {bi['rank']} vs predicted {bi['predicted']} "
      f"-> {'match' if bi['equal'] else 'MISMATCH'}")

flagged = spectrum_with_multiplicities(2, 1)
print(f"N = 2 status: {flagged['status']} ({flagged['note']})")
