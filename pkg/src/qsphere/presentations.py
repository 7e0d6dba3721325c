"""Constructors for the concrete q-deformed coordinate algebras.

``build`` produces the quantum matrix space ``mq``, the special unitary
group ``suq``, the unitary group ``uq`` (inverse determinant adjoined as the
generator ``dinv``) and the odd sphere ``sphere``, each as a rewriting system
with the orientation that makes all right-hand sides strictly smaller, plus
star maps and coalgebra structure maps where the algebra carries them.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import permutations

from .errors import IdentityFails
from .freealg import DINV, NcPoly, TensorPoly, u, z, zs
from .rewrite import MonomialOrder, Rule, RewriteSystem
from .scalars import DeformationContext, ONE, Scalar


@dataclass
class Presentation:
    name: str
    N: int
    ctx: DeformationContext
    system: RewriteSystem
    star: dict | None = None
    structure: "object | None" = None  # hopf.StructureMaps
    aux: "Presentation | None" = None  # confluent companion (mq)
    det: NcPoly | None = None  # the central determinant element
    mode: str | None = None  # zero-test refinement: "localize" or "quotient"

    @property
    def generators(self):
        return self.system.order.precedence

    @property
    def relations(self):
        """Defining relations as polynomials that vanish in the algebra."""
        return [NcPoly.monomial(r.lhs) - r.rhs for r in self.system.rules]

    def nf(self, a: NcPoly) -> NcPoly:
        return self.system.normal_form(a)

    # -- exact zero testing
    #
    # The rewriting systems of suq and uq (determinant set to 1, resp.
    # inverse determinant adjoined) need not be confluent, so a nonzero
    # normal form does not certify nonzero-ness there.  Both algebras sit
    # over the confluent mq, where exact decisions are available:
    #
    #   uq ("localize"): uq is mq localized at the central determinant D.
    #   An element written as sum_k A_k dinv^k vanishes iff
    #   sum_k A_k D^(M-k) vanishes in mq (M the maximal dinv power).
    #
    #   suq ("quotient"): suq = mq / (D - 1) with D central, and because D
    #   is homogeneous of degree N, the degree-bounded slice of the ideal
    #   is exactly span{(D - 1) m : m an mq-normal word}.  Reducing against
    #   an echelonized basis of that span yields canonical coset
    #   representatives.

    def det_power(self, m: int) -> NcPoly:
        pows = getattr(self, "_det_pows", None)
        if pows is None:
            pows = [NcPoly.unit()]
            self._det_pows = pows
        while len(pows) <= m:
            pows.append(self.aux.nf(pows[-1] * self.det))
        return pows[m]

    def clear_word(self, word, M: int) -> NcPoly:
        """Image of a normal word W*dinv^k under multiplication by D^M,
        expressed in the companion algebra (no dinv left)."""
        core, k = dinv_split(word)
        return self.aux.nf(NcPoly.monomial(core) * self.det_power(M - k))

    def _elim_rows(self, d: int) -> dict:
        """Echelonized span of the degree-<= d slice of (det - 1) mq,
        as a dict leading-word -> monic polynomial.  Cached incrementally."""
        state = getattr(self, "_elim", None)
        if state is None:
            state = [-1, {}]
            self._elim = state
        built, elim = state
        if d > built:
            key = self.aux.system.order.key
            gens = []
            if d >= self.N:
                graded = self.aux.system.enumerate_basis(d - self.N)
                for deg, level in enumerate(graded):
                    if deg + self.N <= built:
                        continue
                    for m in level:
                        gens.append(
                            self.aux.nf((self.det - NcPoly.unit()) * NcPoly.monomial(m))
                        )
            for row in gens:
                row = self._eliminate(row, elim)
                if not row.is_zero:
                    lead = max(row.terms, key=key)
                    elim[lead] = row.scale(row.terms[lead].inverse())
            state[0] = d
        return elim

    @staticmethod
    def _eliminate(a: NcPoly, elim: dict) -> NcPoly:
        while True:
            hits = [w for w in a.terms if w in elim]
            if not hits:
                return a
            w = hits[0]
            a = a - elim[w].scale(a.terms[w])

    def quotient_reduce(self, a: NcPoly) -> NcPoly:
        """Canonical coset representative modulo (det - 1)."""
        if a.is_zero:
            return a
        return self._eliminate(a, self._elim_rows(a.degree()))

    def is_zero_elem(self, a: NcPoly) -> bool:
        p = self.nf(a)
        if p.is_zero or self.mode is None:
            return p.is_zero
        if self.mode == "quotient":
            return self.quotient_reduce(p).is_zero
        M = max(dinv_split(w)[1] for w in p.terms)
        acc = NcPoly()
        for w, c in p.terms.items():
            piece = self.clear_word(w, M).scale(c)
            for w2, c2 in piece.terms.items():
                acc._iadd_term(w2, c2)
        return acc.is_zero

    def equals(self, a: NcPoly, b: NcPoly) -> bool:
        return self.is_zero_elem(a - b)


def dinv_split(word):
    """Split a normal word into its dinv-free core and trailing dinv count."""
    k = 0
    while k < len(word) and word[len(word) - 1 - k] == DINV:
        k += 1
    return word[: len(word) - k], k


# ---------------------------------------------------------------------------
# quantum determinant and antipode cofactor tables
# ---------------------------------------------------------------------------


def _inversions(pi) -> int:
    return sum(
        1
        for a in range(len(pi))
        for b in range(a + 1, len(pi))
        if pi[a] > pi[b]
    )


def quantum_determinant(N: int, ctx: DeformationContext | None = None) -> NcPoly:
    """Sum over permutations of (-q)^inversions times u^1_{pi(1)}..u^N_{pi(N)}."""
    ctx = ctx or DeformationContext.standard()
    mq = -ctx.q
    det = NcPoly()
    for pi in permutations(range(1, N + 1)):
        word = tuple(u(r, pi[r - 1]) for r in range(1, N + 1))
        det._iadd_term(word, mq ** _inversions(pi))
    return det


def antipode_matrix(N: int, variant: str, ctx: DeformationContext | None = None):
    """N x N table of antipode images of the generators (quantum cofactors).

    Entry (i, j) is the image of u^i_j: the signed quantum minor obtained by
    deleting row j and column i, with sign (-q)^(i-j); the ``gl`` variant
    carries an extra left factor dinv.
    """
    ctx = ctx or DeformationContext.standard()
    mq = -ctx.q
    table = [[None] * N for _ in range(N)]
    for i in range(1, N + 1):
        for j in range(1, N + 1):
            rows = [k for k in range(1, N + 1) if k != j]
            cols = [l for l in range(1, N + 1) if l != i]
            entry = NcPoly()
            for pi in permutations(range(N - 1)):
                word = tuple(
                    u(rows[m], cols[pi[m]]) for m in range(N - 1)
                )
                if variant == "gl":
                    word = (DINV,) + word
                entry._iadd_term(word, mq ** (_inversions(pi) + i - j))
            table[i - 1][j - 1] = entry
    return table


# ---------------------------------------------------------------------------
# rule sets
# ---------------------------------------------------------------------------


def _mq_rules(N, q):
    qi = q ** (-1)
    qq = q - qi
    rules = []
    for k in range(1, N + 1):
        for i in range(1, N + 1):
            for j in range(i + 1, N + 1):
                rules.append(
                    Rule((u(j, k), u(i, k)), NcPoly.monomial((u(i, k), u(j, k)), qi))
                )
    for k in range(1, N + 1):
        for i in range(1, N + 1):
            for j in range(i + 1, N + 1):
                rules.append(
                    Rule((u(k, j), u(k, i)), NcPoly.monomial((u(k, i), u(k, j)), qi))
                )
    for i in range(1, N + 1):
        for j in range(i + 1, N + 1):
            for k in range(1, N + 1):
                for l in range(k + 1, N + 1):
                    rules.append(
                        Rule((u(j, k), u(i, l)), NcPoly.monomial((u(i, l), u(j, k))))
                    )
                    rhs = NcPoly.monomial((u(i, k), u(j, l))) - NcPoly.monomial(
                        (u(j, k), u(i, l)), qq
                    )
                    rules.append(Rule((u(j, l), u(i, k)), rhs))
    return rules


def _det_leading(N, ctx):
    """Leading word of the quantum determinant and its coefficient."""
    word = tuple(u(r, N + 1 - r) for r in range(1, N + 1))
    coeff = (-ctx.q) ** (N * (N - 1) // 2)
    return word, coeff


def _sphere_rules(N, q):
    qi = q ** (-1)
    hop = qi * (q - qi)
    rules = []
    for i in range(1, N + 1):
        for j in range(i + 1, N + 1):
            rules.append(Rule((z(j), z(i)), NcPoly.monomial((z(i), z(j)), qi)))
    for i in range(1, N + 1):
        for j in range(i + 1, N + 1):
            rules.append(Rule((zs(i), zs(j)), NcPoly.monomial((zs(j), zs(i)), qi)))
    for i in range(1, N + 1):
        for j in range(1, N + 1):
            if i != j:
                rules.append(Rule((zs(j), z(i)), NcPoly.monomial((z(i), zs(j)), qi)))
    for i in range(1, N + 1):
        rhs = NcPoly.monomial((z(i), zs(i)))
        for k in range(i + 1, N + 1):
            rhs = rhs + NcPoly.monomial((z(k), zs(k)), hop)
        rules.append(Rule((zs(i), z(i)), rhs))
    rhs = NcPoly.unit()
    for i in range(1, N):
        rhs = rhs - NcPoly.monomial((z(i), zs(i)))
    rules.append(Rule((z(N), zs(N)), rhs))
    return rules


# ---------------------------------------------------------------------------
# builders
# ---------------------------------------------------------------------------


def build(
    name: str,
    N: int,
    ctx: DeformationContext | None = None,
    cache=None,
) -> Presentation:
    """Build one of the named presentations: mq, suq, uq, sphere."""
    from .hopf import StructureMaps

    if N < 1:
        raise ValueError("N must be >= 1")
    ctx = ctx or DeformationContext.standard()
    q = ctx.q

    if name == "sphere":
        prec = [z(i) for i in range(1, N + 1)] + [zs(i) for i in range(N, 0, -1)]
        order = MonomialOrder(prec)
        system = RewriteSystem(order, _sphere_rules(N, q))
        star = {}
        for i in range(1, N + 1):
            star[z(i)] = NcPoly.gen(zs(i))
            star[zs(i)] = NcPoly.gen(z(i))
        return Presentation("sphere", N, ctx, system, star=star)

    u_prec = [u(i, j) for i in range(1, N + 1) for j in range(1, N + 1)]

    if name == "mq":
        order = MonomialOrder(u_prec)
        system = RewriteSystem(order, _mq_rules(N, q))
        structure = StructureMaps(
            delta=_matrix_delta(N),
            epsilon=_matrix_epsilon(N),
            antipode=None,
        )
        return Presentation("mq", N, ctx, system, structure=structure)

    if name == "suq":
        det = _cached_poly(cache, "suq", N, "determinant", lambda: quantum_determinant(N, ctx), ctx)
        lead, c = _det_leading(N, ctx)
        rest = det - NcPoly.monomial(lead, c)
        rhs = (NcPoly.unit() - rest).scale(c.inverse())
        rules = _mq_rules(N, q) + [Rule(lead, rhs)]
        order = MonomialOrder(u_prec)
        system = RewriteSystem(order, rules)
        sl = _cached_table(cache, "suq", N, "antipode-sl", lambda: antipode_matrix(N, "sl", ctx), ctx)
        star = {u(i, j): sl[j - 1][i - 1] for i in range(1, N + 1) for j in range(1, N + 1)}
        antipode = {u(i, j): sl[i - 1][j - 1] for i in range(1, N + 1) for j in range(1, N + 1)}
        structure = StructureMaps(
            delta=_matrix_delta(N),
            epsilon=_matrix_epsilon(N),
            antipode=antipode,
        )
        return Presentation(
            "suq", N, ctx, system, star=star, structure=structure,
            aux=build("mq", N, ctx), det=det, mode="quotient",
        )

    if name == "uq":
        det = _cached_poly(cache, "uq", N, "determinant", lambda: quantum_determinant(N, ctx), ctx)
        lead, c = _det_leading(N, ctx)
        rest = det - NcPoly.monomial(lead, c)
        cinv = c.inverse()
        rules = _mq_rules(N, q)
        if N > 1:
            # dinv is central; for N = 1 the unit rules below already say so
            for g in u_prec:
                rules.append(Rule((DINV, g), NcPoly.monomial((g, DINV))))
        # t * D_q = 1 oriented at the leading word of t * D_q
        rhs_left = (NcPoly.unit() - NcPoly.gen(DINV) * rest).scale(cinv)
        rules.append(Rule((DINV,) + lead, rhs_left))
        # D_q * t = 1
        rhs_right = (NcPoly.unit() - rest * NcPoly.gen(DINV)).scale(cinv)
        rules.append(Rule(lead + (DINV,), rhs_right))
        order = MonomialOrder(u_prec + [DINV])
        system = RewriteSystem(order, rules)
        gl = _cached_table(cache, "uq", N, "antipode-gl", lambda: antipode_matrix(N, "gl", ctx), ctx)
        star = {u(i, j): gl[j - 1][i - 1] for i in range(1, N + 1) for j in range(1, N + 1)}
        star[DINV] = det
        antipode = {u(i, j): gl[i - 1][j - 1] for i in range(1, N + 1) for j in range(1, N + 1)}
        antipode[DINV] = det
        delta = _matrix_delta(N)
        delta[DINV] = TensorPoly.monomial((DINV,), (DINV,))
        epsilon = _matrix_epsilon(N)
        epsilon[DINV] = ONE
        structure = StructureMaps(delta=delta, epsilon=epsilon, antipode=antipode)
        return Presentation(
            "uq", N, ctx, system, star=star, structure=structure,
            aux=build("mq", N, ctx), det=det, mode="localize",
        )

    raise ValueError(f"unknown presentation {name!r}")


def _matrix_delta(N):
    delta = {}
    for i in range(1, N + 1):
        for j in range(1, N + 1):
            t = TensorPoly()
            for k in range(1, N + 1):
                t._iadd_term(((u(i, k),), (u(k, j),)), ONE)
            delta[u(i, j)] = t
    return delta


def _matrix_epsilon(N):
    from .scalars import ZERO

    return {
        u(i, j): (ONE if i == j else ZERO)
        for i in range(1, N + 1)
        for j in range(1, N + 1)
    }


def _ctx_token(ctx) -> str:
    # distinct bindings of q must not share cache entries
    return f"{ctx.var_name}:{ctx.q.num}:{ctx.q.den}"


def _cached_poly(cache, algebra, N, artifact, thunk, ctx):
    if cache is None:
        return thunk()
    return cache.poly(f"{algebra}-{N}-{artifact}-{_ctx_token(ctx)}", thunk)


def _cached_table(cache, algebra, N, artifact, thunk, ctx):
    if cache is None:
        return thunk()
    return cache.table(f"{algebra}-{N}-{artifact}-{_ctx_token(ctx)}", thunk)


# ---------------------------------------------------------------------------
# element matrices and identity checks
# ---------------------------------------------------------------------------


def generator_matrix(P: Presentation):
    N = P.N
    return [[NcPoly.gen(u(i, j)) for j in range(1, N + 1)] for i in range(1, N + 1)]


def matrix_mul(A, B, P: Presentation):
    N = len(A)
    out = [[NcPoly() for _ in range(N)] for _ in range(N)]
    for i in range(N):
        for j in range(N):
            acc = NcPoly()
            for k in range(N):
                acc = acc + A[i][k] * B[k][j]
            out[i][j] = P.nf(acc)
    return out


def _is_identity_matrix(M, P: Presentation):
    for i, row in enumerate(M):
        for j, entry in enumerate(row):
            want = NcPoly.unit() if i == j else NcPoly()
            if not P.equals(entry, want):
                return (i + 1, j + 1), entry - want
    return None


def check_central(x: NcPoly, P: Presentation) -> bool:
    for g in P.generators:
        gp = NcPoly.gen(g)
        if not P.is_zero_elem(x * gp - gp * x):
            return False
    return True


def invariant_form_matrix(N: int, ctx: DeformationContext):
    """The diagonal scalar matrix diag(1, q^2, ..., q^(2(N-1))) / (q^(N-1) [N]_q)."""
    from .scalars import ZERO

    norm = (ctx.q ** (N - 1)) * ctx.qnum(N)
    return [
        [
            (ctx.q ** (2 * i)) / norm if i == j else ZERO
            for j in range(N)
        ]
        for i in range(N)
    ]


def check_matrix_identities(P: Presentation) -> dict:
    """Entrywise identities certifying the antipode and star tables.

    For suq and uq: S(u) u = u S(u) = I and u u* = u* u = I.  For uq also the
    scaled-conjugate identity E ubar E^-1 u^t = u^t E ubar E^-1 = I with
    E = diag(1, q^2, ..., q^(2(N-1))) / (q^(N-1) [N]_q).
    """
    if P.name not in ("suq", "uq"):
        raise ValueError("matrix identities apply to suq and uq only")
    N = P.N
    U = generator_matrix(P)
    S = [[P.structure.antipode[u(i, j)] for j in range(1, N + 1)] for i in range(1, N + 1)]
    # u* = conjugate transpose: entry (i,j) is (u^j_i)*
    Ustar = [[P.star[u(j, i)] for j in range(1, N + 1)] for i in range(1, N + 1)]
    report = {}
    for label, A, B in (
        ("S(u)*u", S, U),
        ("u*S(u)", U, S),
        ("u*ustar", U, Ustar),
        ("ustar*u", Ustar, U),
    ):
        bad = _is_identity_matrix(matrix_mul(A, B, P), P)
        if bad is not None:
            raise IdentityFails((label, bad[0]), bad[1])
        report[label] = True
    if P.name == "uq":
        E = invariant_form_matrix(N, P.ctx)
        # (E ubar E^-1)_{ik} = (E_i / E_k) (u^i_k)*; normalization cancels
        scaled = [
            [
                P.star[u(i + 1, k + 1)].scale(E[i][i] / E[k][k])
                for k in range(N)
            ]
            for i in range(N)
        ]
        ut = [[NcPoly.gen(u(j + 1, i + 1)) for j in range(N)] for i in range(N)]
        for label, A, B in (
            ("E-relation-left", scaled, ut),
            ("E-relation-right", ut, scaled),
        ):
            bad = _is_identity_matrix(matrix_mul(A, B, P), P)
            if bad is not None:
                raise IdentityFails((label, bad[0]), bad[1])
            report[label] = True
    return report


def check_star_closure(P: Presentation) -> bool:
    """Star of every defining relation normalizes to zero."""
    if P.star is None:
        return True
    return all(P.is_zero_elem(r.star(P.star)) for r in P.relations)


def check_star_involution(P: Presentation) -> bool:
    """g** = g for every generator, after normalization."""
    if P.star is None:
        return True
    for g in P.generators:
        if not P.equals(P.star[g].star(P.star), NcPoly.gen(g)):
            return False
    return True


def embed_sphere(N: int, ctx: DeformationContext | None = None):
    """The embedding of the sphere into suq(N): z_i -> u^1_i, z*_i -> S(u^i_1)."""
    from .hopf import Morphism

    if N < 2:
        raise ValueError("embedding needs N >= 2")
    ctx = ctx or DeformationContext.standard()
    sphere = build("sphere", N, ctx)
    target = build("suq", N, ctx)
    images = {}
    for i in range(1, N + 1):
        images[z(i)] = NcPoly.gen(u(1, i))
        images[zs(i)] = target.structure.antipode[u(i, 1)]
    phi = Morphism(sphere, target, images)
    phi.verify()
    return phi


# ---------------------------------------------------------------------------
# auxiliary presentations for the morphism builder presets
# ---------------------------------------------------------------------------


def build_torus(N: int, ctx: DeformationContext | None = None) -> Presentation:
    """Laurent Hopf star-algebra on N commuting unitaries T_1..T_N."""
    from .hopf import StructureMaps

    ctx = ctx or DeformationContext.standard()
    # T_i adjacent to its inverse so sorting makes cancellations visible
    prec = []
    for i in range(1, N + 1):
        prec.append(("T", i))
        prec.append(("Ts", i))
    order = MonomialOrder(prec)
    rank = {g: k for k, g in enumerate(prec)}
    rules = []
    for a in prec:
        for b in prec:
            if rank[a] < rank[b]:
                if a[1] == b[1]:
                    rules.append(Rule((b, a), NcPoly.unit()))
                    rules.append(Rule((a, b), NcPoly.unit()))
                else:
                    rules.append(Rule((b, a), NcPoly.monomial((a, b))))
    system = RewriteSystem(order, rules)
    star = {}
    delta = {}
    epsilon = {}
    antipode = {}
    for i in range(1, N + 1):
        t, ts = ("T", i), ("Ts", i)
        star[t] = NcPoly.gen(ts)
        star[ts] = NcPoly.gen(t)
        delta[t] = TensorPoly.monomial((t,), (t,))
        delta[ts] = TensorPoly.monomial((ts,), (ts,))
        epsilon[t] = ONE
        epsilon[ts] = ONE
        antipode[t] = NcPoly.gen(ts)
        antipode[ts] = NcPoly.gen(t)
    structure = StructureMaps(delta=delta, epsilon=epsilon, antipode=antipode)
    return Presentation("torus", N, ctx, system, star=star, structure=structure)


def build_free_matrix(N: int, ctx: DeformationContext | None = None) -> Presentation:
    """Free star-algebra on N^2 symbols with matrix-style coalgebra maps.

    Satisfies the comatrix condition by construction but no FRT relation;
    used as the failing preset of the morphism builder.
    """
    from .hopf import StructureMaps
    from .scalars import ZERO

    ctx = ctx or DeformationContext.standard()
    A = [("a", i, j) for i in range(1, N + 1) for j in range(1, N + 1)]
    As = [("as", i, j) for i in range(1, N + 1) for j in range(1, N + 1)]
    order = MonomialOrder(A + As)
    system = RewriteSystem(order, [])
    star = {}
    delta = {}
    epsilon = {}
    for i in range(1, N + 1):
        for j in range(1, N + 1):
            a, astar = ("a", i, j), ("as", i, j)
            star[a] = NcPoly.gen(astar)
            star[astar] = NcPoly.gen(a)
            t = TensorPoly()
            ts = TensorPoly()
            for k in range(1, N + 1):
                t._iadd_term(((("a", i, k),), (("a", k, j),)), ONE)
                ts._iadd_term(((("as", i, k),), (("as", k, j),)), ONE)
            delta[a] = t
            delta[astar] = ts
            epsilon[a] = ONE if i == j else ZERO
            epsilon[astar] = ONE if i == j else ZERO
    structure = StructureMaps(delta=delta, epsilon=epsilon, antipode=None)
    return Presentation("free", N, ctx, system, star=star, structure=structure)
