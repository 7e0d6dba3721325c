"""The braiding operator on the fundamental comodule and the r-form calculus.

The operator acts on V (x) V with basis e_i (x) e_j, indexed in row-major
order.  Index convention: the matrix entry R[(i,j)][(m,n)] is the coefficient
of e_i (x) e_j in the image of e_m (x) e_n (upper indices = output).  The
entries are q^{delta_ij} delta_in delta_jm + (q - q^-1) delta_im delta_jn
for i < j, all other entries zero.
"""

from __future__ import annotations

from fractions import Fraction

from .errors import AxiomFails
from .freealg import NcPoly, u, z
from .linalg import (
    identity,
    is_zero_matrix,
    mat_mul,
    mat_scale,
    mat_sub,
    mat_add,
    nullspace,
    rank,
    same_column_space,
    transpose,
    zeros,
)
from .presentations import Presentation, build
from .scalars import DeformationContext, ONE, ZERO, Scalar


def _pair_index(N):
    pairs = [(i, j) for i in range(1, N + 1) for j in range(1, N + 1)]
    return pairs, {p: k for k, p in enumerate(pairs)}


def rhat(N: int, ctx: DeformationContext | None = None):
    """Exact matrix of the braiding operator on V (x) V."""
    ctx = ctx or DeformationContext.standard()
    q = ctx.q
    qq = q - q ** (-1)
    pairs, idx = _pair_index(N)
    M = zeros(N * N, N * N)
    for (m, n) in pairs:
        col = idx[(m, n)]
        for (i, j) in pairs:
            entry = ZERO
            if i == n and j == m:
                entry = entry + (q if i == j else ONE)
            if i == m and j == n and j > i:
                entry = entry + qq
            if not entry.is_zero:
                M[idx[(i, j)]][col] = entry
    return M


def rhat_inverse(N: int, ctx: DeformationContext | None = None):
    """Inverse braiding, from the Hecke identity: R^-1 = R - (q - q^-1) I."""
    ctx = ctx or DeformationContext.standard()
    q = ctx.q
    M = rhat(N, ctx)
    return mat_sub(M, mat_scale(identity(N * N), q - q ** (-1)))


def sigma(N: int, ctx: DeformationContext):
    """t times the braiding (the comodule braiding of the r-form); needs a
    context carrying the root t."""
    if ctx.t is None:
        raise ValueError("sigma needs a context with the root t")
    return mat_scale(rhat(N, ctx), ctx.t)


def check_hecke(N: int, ctx: DeformationContext | None = None) -> bool:
    """(R - q I)(R + q^-1 I) = 0 exactly."""
    ctx = ctx or DeformationContext.standard()
    q = ctx.q
    R = rhat(N, ctx)
    I = identity(N * N)
    prod = mat_mul(
        mat_sub(R, mat_scale(I, q)),
        mat_add(R, mat_scale(I, q ** (-1))),
    )
    return is_zero_matrix(prod)


def eigenprojections(N: int, ctx: DeformationContext | None = None):
    """(P_plus, P_minus) onto the q and -1/q eigenspaces of the braiding."""
    ctx = ctx or DeformationContext.standard()
    q = ctx.q
    R = rhat(N, ctx)
    I = identity(N * N)
    denom = (q + q ** (-1)).inverse()
    p_plus = mat_scale(mat_add(R, mat_scale(I, q ** (-1))), denom)
    p_minus = mat_scale(mat_sub(mat_scale(I, q), R), denom)
    return p_plus, p_minus


def mult_kernel(N: int, ctx: DeformationContext | None = None):
    """Kernel of multiplication V (x) V -> sphere algebra, versus the image
    of (R - q I); returns bases and the verdict of subspace equality."""
    ctx = ctx or DeformationContext.standard()
    sphere = build("sphere", N, ctx)
    pairs, idx = _pair_index(N)
    # coefficient matrix of the normal forms of all products z_i z_j
    words = set()
    nfs = {}
    for (i, j) in pairs:
        p = sphere.nf(NcPoly.monomial((z(i), z(j))))
        nfs[(i, j)] = p
        words.update(p.terms)
    words = sorted(words)
    A = [[nfs[p].coeff(w) for p in pairs] for w in words]
    kernel = nullspace(A) if A else [
        [ONE if k == c else ZERO for k in range(N * N)] for c in range(N * N)
    ]
    q = ctx.q
    R = rhat(N, ctx)
    shifted = mat_sub(R, mat_scale(identity(N * N), q))
    image_cols = [col for col in transpose(shifted) if any(not x.is_zero for x in col)]
    kernel_mat = transpose(kernel) if kernel else [[] for _ in range(N * N)]
    image_mat = transpose(image_cols) if image_cols else [[] for _ in range(N * N)]
    equal = same_column_space(kernel_mat, image_mat)
    return {
        "kernel_basis": kernel,
        "image_basis": image_cols,
        "dim_kernel": len(kernel),
        "dim_image": rank(shifted),
        "equal": equal,
    }


def check_comodule_morphism(T, N: int, coeff: Presentation) -> bool:
    """Is T a comodule morphism of V (x) V for the matrix coaction
    phi(e_i) = sum_j e_j (x) u^j_i over the given coefficient algebra?"""
    pairs, idx = _pair_index(N)
    for (m, n) in pairs:
        col = idx[(m, n)]
        for (k, l) in pairs:
            # coefficient of e_k (x) e_l on both sides, an element of coeff
            lhs = NcPoly()
            for (i, j) in pairs:
                c = T[idx[(k, l)]][idx[(i, j)]]
                if not c.is_zero:
                    lhs = lhs + NcPoly.monomial((u(i, m), u(j, n)), c)
            rhs = NcPoly()
            for (i, j) in pairs:
                c = T[idx[(i, j)]][col]
                if not c.is_zero:
                    rhs = rhs + NcPoly.monomial((u(k, i), u(l, j)), c)
            if not coeff.is_zero_elem(lhs - rhs):
                return False
    return True


def flip_operator(N: int):
    pairs, idx = _pair_index(N)
    M = zeros(N * N, N * N)
    for (i, j) in pairs:
        M[idx[(j, i)]][idx[(i, j)]] = ONE
    return M


# ---------------------------------------------------------------------------
# the universal r-form
# ---------------------------------------------------------------------------


class RFormEvaluator:
    """Recursive evaluator of the universal r-form on the special unitary
    coordinate algebra, in the context with the root t (q = t^-N).

    Generator values: r(u^i_j (x) u^k_l) = t * R[(k,i)][(j,l)].  The left
    argument splits through r(ab, c) = r(a, c_1) r(b, c_2), the right through
    r(a, bc) = r(a_1, c) r(a_2, b); unit cases give the counit.
    """

    def __init__(self, N: int):
        self.N = N
        self.ctx = DeformationContext.with_root(N)
        self.P = build("suq", N, self.ctx)
        pairs, idx = _pair_index(N)
        self._idx = idx
        R = rhat(N, self.ctx)
        t = self.ctx.t
        self._table = {}
        for i in range(1, N + 1):
            for j in range(1, N + 1):
                for k in range(1, N + 1):
                    for l in range(1, N + 1):
                        self._table[(u(i, j), u(k, l))] = t * R[idx[(k, i)]][idx[(j, l)]]
        self._memo = {}

    def _eps_word(self, w) -> Scalar:
        from .hopf import counit

        return counit(NcPoly.monomial(w), self.P)

    def eval_words(self, a, b) -> Scalar:
        key = (a, b)
        hit = self._memo.get(key)
        if hit is not None:
            return hit
        if not a:
            val = self._eps_word(b)
        elif not b:
            val = self._eps_word(a)
        elif len(a) == 1 and len(b) == 1:
            val = self._table[(a[0], b[0])]
        elif len(a) > 1:
            from .hopf import delta_word

            g, rest = (a[0],), a[1:]
            val = ZERO
            for (b1, b2), c in delta_word(b, self.P).terms.items():
                val = val + c * self.eval_words(g, b1) * self.eval_words(rest, b2)
        else:
            from .hopf import delta_word

            h, rest = (b[0],), b[1:]
            val = ZERO
            for (a1, a2), c in delta_word(a, self.P).terms.items():
                val = val + c * self.eval_words(a1, rest) * self.eval_words(a2, h)
        self._memo[key] = val
        return val

    def eval(self, a: NcPoly, b: NcPoly) -> Scalar:
        total = ZERO
        for wa, ca in a.terms.items():
            for wb, cb in b.terms.items():
                total = total + ca * cb * self.eval_words(wa, wb)
        return total

    def eval_bar(self, a: NcPoly, b: NcPoly) -> Scalar:
        """Convolution inverse, realized as r composed with (S (x) id)."""
        from .hopf import antipode

        return self.eval(antipode(a, self.P), b)

    def sigma_matrix(self):
        """The induced braiding on V (x) V computed FROM the r-form:
        sigma(e_i (x) e_j) = sum_{k,l} r(u^k_i (x) u^l_j) e_l (x) e_k."""
        N = self.N
        idx = self._idx
        M = zeros(N * N, N * N)
        for i in range(1, N + 1):
            for j in range(1, N + 1):
                col = idx[(i, j)]
                for k in range(1, N + 1):
                    for l in range(1, N + 1):
                        c = self._table[(u(k, i), u(l, j))]
                        if not c.is_zero:
                            M[idx[(l, k)]][col] = M[idx[(l, k)]][col] + c
        return M


def check_cqt(N: int, degree_bound: int = 2, sample: int = 20, seed: int = 0) -> dict:
    """Verify the coquasitriangularity axioms on generator pairs, the
    commutation law additionally on sampled degree-2 monomials, reality of
    the r-form, and numerical symmetry of the braiding matrix."""
    import random

    from .hopf import delta_word

    ev = RFormEvaluator(N)
    P = ev.P
    gens = [u(i, j) for i in range(1, N + 1) for j in range(1, N + 1)]

    # Eq: r * rbar = rbar * r = eps (x) eps, on generator pairs
    for a in gens:
        for b in gens:
            da = delta_word((a,), P)
            db = delta_word((b,), P)
            want = ev._eps_word((a,)) * ev._eps_word((b,))
            lhs = ZERO
            rhs = ZERO
            for (a1, a2), ca in da.terms.items():
                for (b1, b2), cb in db.terms.items():
                    c = ca * cb
                    lhs = lhs + c * ev.eval_words(a1, b1) * ev.eval_bar(
                        NcPoly.monomial(a2), NcPoly.monomial(b2)
                    )
                    rhs = rhs + c * ev.eval_bar(
                        NcPoly.monomial(a1), NcPoly.monomial(b1)
                    ) * ev.eval_words(a2, b2)
            if lhs != want or rhs != want:
                raise AxiomFails("convolution-inverse", (a, b))

    # commutation law: b a = r(a1,b1) a2 b2 rbar(a3,b3)
    def commutation_holds(wa, wb) -> bool:
        pa = NcPoly.monomial(wa)
        pb = NcPoly.monomial(wb)
        lhs = pb * pa
        rhs = NcPoly()
        for (a1, arest), c1 in delta_word(wa, P).terms.items():
            for (a2, a3), c2 in delta_word(arest, P).terms.items():
                for (b1, brest), d1 in delta_word(wb, P).terms.items():
                    for (b2, b3), d2 in delta_word(brest, P).terms.items():
                        coeff = (
                            c1
                            * c2
                            * d1
                            * d2
                            * ev.eval_words(a1, b1)
                            * ev.eval_bar(NcPoly.monomial(a3), NcPoly.monomial(b3))
                        )
                        if not coeff.is_zero:
                            rhs = rhs + NcPoly.monomial(a2 + b2, coeff)
        return P.equals(rhs, lhs)

    for a in gens:
        for b in gens:
            if not commutation_holds((a,), (b,)):
                raise AxiomFails("commutation-law", (a, b))
    rng = random.Random(seed)
    deg2 = [(a, b) for a in gens for b in gens]
    sampled = 0
    for _ in range(sample):
        wa = tuple(rng.choice(gens) for _ in range(2))
        wb = tuple(rng.choice(gens) for _ in range(min(degree_bound, 2)))
        if not commutation_holds(wa, wb):
            raise AxiomFails("commutation-law-degree2", (wa, wb))
        sampled += 1

    # reality: r(a (x) b) = r(b* (x) a*) (coefficients are real)
    for a in gens:
        for b in gens:
            lhs = ev.eval_words((a,), (b,))
            rhs = ev.eval(
                P.star[b],
                P.star[a],
            )
            if lhs != rhs:
                raise AxiomFails("reality", (a, b))

    # the braiding recomputed from the r-form equals t * R entrywise
    if ev.sigma_matrix() != sigma(N, ev.ctx):
        raise AxiomFails("sigma-entrywise", N)

    # hermiticity of the braiding at sample points
    for t0 in (Fraction(1, 2), Fraction(2)):
        M = [[x.eval_at(t0) for x in row] for row in sigma(N, ev.ctx)]
        if M != [list(r) for r in zip(*M)]:
            raise AxiomFails("sigma-hermitian", t0)

    return {
        "generator_pairs": len(gens) ** 2,
        "degree2_samples": sampled,
        "sigma_entrywise": True,
        "hermitian_at": ["1/2", "2"],
    }


def check_eigenspace_orthogonality(N: int, q0, ctx: DeformationContext | None = None) -> bool:
    """Images of (R - q I) and (R + 1/q I) are orthogonal at a numeric q0 > 0."""
    ctx = ctx or DeformationContext.standard()
    q0 = Fraction(q0)
    R = rhat(N, ctx)
    q = ctx.q
    I = identity(N * N)
    minus = mat_sub(R, mat_scale(I, q))
    plus = mat_add(R, mat_scale(I, q ** (-1)))
    A = [[x.eval_at(q0) for x in row] for row in minus]
    B = [[x.eval_at(q0) for x in row] for row in plus]
    n = N * N
    for ca in range(n):
        for cb in range(n):
            dot = sum(A[r][ca] * B[r][cb] for r in range(n))
            if dot != 0:
                return False
    return True
