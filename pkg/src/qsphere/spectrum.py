"""Dirac spectrum on the odd-dimensional quantum spheres.

Multiplicities come from counting Gelfand-Tsetlin patterns: the bidegree
(n, k) part of the sphere algebra carries the irreducible with highest
weight (n + k, k, ..., k, 0), whose dimension is the number of interlacing
triangular patterns with that top row.
"""

from __future__ import annotations

from functools import lru_cache

from .errors import InvalidTopRow


def enumerate_gt(top_row):
    """All Gelfand-Tsetlin patterns with the given (weakly decreasing,
    nonnegative integer) top row, as tuples of rows."""
    top = tuple(int(x) for x in top_row)
    if any(a < b for a, b in zip(top, top[1:])) or (top and top[-1] < 0):
        raise InvalidTopRow(f"not weakly decreasing nonnegative: {top}")

    def extend(rows):
        cur = rows[-1]
        if len(cur) == 1:
            yield tuple(rows)
            return
        # next row interlaces: cur[j] >= nxt[j] >= cur[j+1]
        def rec(j, partial):
            if j == len(cur) - 1:
                yield from extend(rows + [tuple(partial)])
                return
            lo, hi = cur[j + 1], cur[j]
            for v in range(hi, lo - 1, -1):
                yield from rec(j + 1, partial + [v])

        yield from rec(0, [])

    if not top:
        return [()]
    return list(extend([top]))


def _top_row(N: int, n: int, k: int):
    if n < 0 or k < 0:
        raise InvalidTopRow(f"bidegree out of range: ({n}, {k})")
    return (n + k,) + (k,) * (N - 2) + (0,)


@lru_cache(maxsize=None)
def dim_irrep(N: int, n: int, k: int) -> int:
    """Dimension of the bidegree-(n, k) irreducible summand: the count of
    patterns with top row (n+k, k, ..., k, 0) of length N."""
    if N < 2:
        raise InvalidTopRow("need N >= 2")
    return len(enumerate_gt(_top_row(N, n, k)))


def d_eigenvalue(n: int, k: int) -> int:
    """Dirac eigenvalue on the (n, k) summand."""
    return -k if n == 0 else n + k


def spectrum_with_multiplicities(N: int, max_eig: int):
    """Eigenvalues with multiplicities, |lambda| <= max_eig.

    Returns a dict with keys ``spectrum`` (sorted list of
    ``{"eigenvalue": lam, "multiplicity": m, "summands": [...]}``) and
    ``status`` ("pass", or "flagged" for N = 2 where the eigenvalue
    assignment is extrapolated from the N >= 3 pattern).
    """
    buckets: dict[int, list] = {}
    # n + k <= max_eig covers every |eigenvalue| <= max_eig
    for n in range(0, max_eig + 1):
        for k in range(0, max_eig + 1 - (n if n else 0)):
            lam = d_eigenvalue(n, k)
            if abs(lam) > max_eig:
                continue
            buckets.setdefault(lam, []).append((n, k))
    spectrum = []
    for lam in sorted(buckets):
        pairs = sorted(buckets[lam])
        mult = sum(dim_irrep(N, n, k) for n, k in pairs)
        spectrum.append(
            {
                "eigenvalue": lam,
                "multiplicity": mult,
                "summands": [{"n": n, "k": k, "dim": dim_irrep(N, n, k)} for n, k in pairs],
            }
        )
    return {
        "N": N,
        "max_eig": max_eig,
        "spectrum": spectrum,
        "status": "flagged" if N == 2 else "pass",
        "note": "eigenvalue assignment extrapolated" if N == 2 else None,
    }


def perp_constraint(N: int, n: int, k: int, j: int) -> bool:
    """May the bidegree-(n - j, k - j) summand occur inside degree (n, k)?
    True exactly when 0 <= j <= min(n, k)."""
    return 0 <= j <= min(n, k)


def bigraded_dimension(N: int, a: int, b: int) -> int:
    """Dimension of the bidegree-(a, b) component predicted by the
    decomposition into irreducibles: sum over j of dim V_{a-j, b-j}."""
    return sum(dim_irrep(N, a - j, b - j) for j in range(0, min(a, b) + 1))


def bigraded_dim_check(N: int, a: int, b: int, ctx=None) -> dict:
    """Compare the representation-theoretic dimension of the bidegree-(a, b)
    component against the rank, computed by rewriting, of the span of all
    products of a coordinates and b adjoint coordinates."""
    from itertools import product

    from .freealg import NcPoly, z, zs
    from .linalg import rank
    from .presentations import build
    from .scalars import DeformationContext

    ctx = ctx or DeformationContext.standard()
    sphere = build("sphere", N, ctx)
    polys = []
    words = set()
    for zi in product(range(1, N + 1), repeat=a):
        for zj in product(range(1, N + 1), repeat=b):
            w = tuple(z(i) for i in zi) + tuple(zs(j) for j in zj)
            p = sphere.nf(NcPoly.monomial(w))
            polys.append(p)
            words.update(p.terms)
    words = sorted(words)
    span_rank = rank([[p.coeff(w) for w in words] for p in polys])
    predicted = bigraded_dimension(N, a, b)
    return {"N": N, "bidegree": [a, b], "rank": span_rank,
            "predicted": predicted, "equal": span_rank == predicted}
