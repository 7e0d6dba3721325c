"""Words and noncommutative polynomials over a generator alphabet.

Generators are plain tuples: ``('u', i, j)`` for matrix entries, ``('z', i)``
and ``('zs', i)`` for sphere coordinates and their adjoints, ``('d',)`` for
the adjoined inverse determinant, and ad-hoc families like ``('T', i)`` for
auxiliary algebras.  A word is a tuple of generators; the empty word is the
algebra unit.
"""

from __future__ import annotations

from .errors import UndefinedStar
from .scalars import ONE, ZERO, Scalar

EMPTY = ()


def u(i: int, j: int):
    return ("u", i, j)


def z(i: int):
    return ("z", i)


def zs(i: int):
    return ("zs", i)


DINV = ("d",)


def gen_name(g) -> str:
    fam = g[0]
    if fam == "d":
        return "dinv"
    return f"{fam}[{','.join(str(i) for i in g[1:])}]"


def word_name(w) -> str:
    return "1" if not w else "*".join(gen_name(g) for g in w)


class NcPoly:
    """Finite formal sum of scalar-weighted words; zero coefficients dropped."""

    __slots__ = ("terms",)

    def __init__(self, terms=None):
        self.terms = dict(terms) if terms else {}

    @staticmethod
    def zero() -> "NcPoly":
        return NcPoly()

    @staticmethod
    def unit(coeff: Scalar = ONE) -> "NcPoly":
        return NcPoly.monomial(EMPTY, coeff)

    @staticmethod
    def monomial(word, coeff: Scalar = ONE) -> "NcPoly":
        p = NcPoly()
        if not coeff.is_zero:
            p.terms[tuple(word)] = coeff
        return p

    @staticmethod
    def gen(g, coeff: Scalar = ONE) -> "NcPoly":
        return NcPoly.monomial((g,), coeff)

    # -- ring structure

    def _iadd_term(self, word, coeff):
        cur = self.terms.get(word)
        if cur is None:
            if not coeff.is_zero:
                self.terms[word] = coeff
        else:
            s = cur + coeff
            if s.is_zero:
                del self.terms[word]
            else:
                self.terms[word] = s

    def __add__(self, other: "NcPoly") -> "NcPoly":
        out = NcPoly(self.terms)
        for w, c in other.terms.items():
            out._iadd_term(w, c)
        return out

    def __neg__(self) -> "NcPoly":
        return NcPoly({w: -c for w, c in self.terms.items()})

    def __sub__(self, other: "NcPoly") -> "NcPoly":
        out = NcPoly(self.terms)
        for w, c in other.terms.items():
            out._iadd_term(w, -c)
        return out

    def __mul__(self, other: "NcPoly") -> "NcPoly":
        out = NcPoly()
        for w1, c1 in self.terms.items():
            for w2, c2 in other.terms.items():
                out._iadd_term(w1 + w2, c1 * c2)
        return out

    def scale(self, coeff: Scalar) -> "NcPoly":
        if coeff.is_zero:
            return NcPoly()
        return NcPoly({w: c * coeff for w, c in self.terms.items()})

    # -- inspection

    @property
    def is_zero(self) -> bool:
        return not self.terms

    def degree(self) -> int:
        """Maximal word length; -1 for the zero polynomial."""
        return max((len(w) for w in self.terms), default=-1)

    def coeff(self, word) -> Scalar:
        return self.terms.get(tuple(word), ZERO)

    def generators(self):
        seen = set()
        for w in self.terms:
            seen.update(w)
        return seen

    def __eq__(self, other):
        return isinstance(other, NcPoly) and self.terms == other.terms

    def __hash__(self):
        return hash(frozenset(self.terms.items()))

    def __repr__(self):
        if not self.terms:
            return "NcPoly(0)"
        parts = [f"{c!r}*{word_name(w)}" for w, c in sorted(self.terms.items())]
        return "NcPoly(" + " + ".join(parts) + ")"

    # -- star

    def star(self, star_map: dict) -> "NcPoly":
        """Antimultiplicative extension of the generator star map.

        Scalars are real rational functions of the real parameter, so the
        coefficient conjugation is the identity.
        """
        out = NcPoly()
        for w, c in self.terms.items():
            img = NcPoly.unit(c)
            for g in reversed(w):
                try:
                    img = img * star_map[g]
                except KeyError:
                    raise UndefinedStar(f"no star image for {gen_name(g)}") from None
            for w2, c2 in img.terms.items():
                out._iadd_term(w2, c2)
        return out


class TensorPoly:
    """Finite formal sum of scalar-weighted word pairs (elements of A tensor H).

    The product is the plain componentwise one; no braiding is involved
    because coproducts and coactions land in genuine tensor products.
    """

    __slots__ = ("terms",)

    def __init__(self, terms=None):
        self.terms = dict(terms) if terms else {}

    @staticmethod
    def zero() -> "TensorPoly":
        return TensorPoly()

    @staticmethod
    def unit(coeff: Scalar = ONE) -> "TensorPoly":
        return TensorPoly.monomial(EMPTY, EMPTY, coeff)

    @staticmethod
    def monomial(w1, w2, coeff: Scalar = ONE) -> "TensorPoly":
        t = TensorPoly()
        if not coeff.is_zero:
            t.terms[(tuple(w1), tuple(w2))] = coeff
        return t

    @staticmethod
    def of(a: NcPoly, b: NcPoly) -> "TensorPoly":
        out = TensorPoly()
        for w1, c1 in a.terms.items():
            for w2, c2 in b.terms.items():
                out._iadd_term((w1, w2), c1 * c2)
        return out

    def _iadd_term(self, key, coeff):
        cur = self.terms.get(key)
        if cur is None:
            if not coeff.is_zero:
                self.terms[key] = coeff
        else:
            s = cur + coeff
            if s.is_zero:
                del self.terms[key]
            else:
                self.terms[key] = s

    def __add__(self, other: "TensorPoly") -> "TensorPoly":
        out = TensorPoly(self.terms)
        for k, c in other.terms.items():
            out._iadd_term(k, c)
        return out

    def __neg__(self) -> "TensorPoly":
        return TensorPoly({k: -c for k, c in self.terms.items()})

    def __sub__(self, other: "TensorPoly") -> "TensorPoly":
        out = TensorPoly(self.terms)
        for k, c in other.terms.items():
            out._iadd_term(k, -c)
        return out

    def __mul__(self, other: "TensorPoly") -> "TensorPoly":
        out = TensorPoly()
        for (a1, h1), c1 in self.terms.items():
            for (a2, h2), c2 in other.terms.items():
                out._iadd_term((a1 + a2, h1 + h2), c1 * c2)
        return out

    def scale(self, coeff: Scalar) -> "TensorPoly":
        if coeff.is_zero:
            return TensorPoly()
        return TensorPoly({k: c * coeff for k, c in self.terms.items()})

    @property
    def is_zero(self) -> bool:
        return not self.terms

    def star(self, star_left: dict, star_right: dict) -> "TensorPoly":
        """Componentwise star on both legs."""
        out = TensorPoly()
        for (w1, w2), c in self.terms.items():
            left = NcPoly.monomial(w1).star(star_left)
            right = NcPoly.monomial(w2).star(star_right)
            out2 = TensorPoly.of(left, right).scale(c)
            for k, c2 in out2.terms.items():
                out._iadd_term(k, c2)
        return out

    def map_legs(self, f_left, f_right) -> "TensorPoly":
        """Apply NcPoly -> NcPoly maps to each leg and recollect."""
        out = TensorPoly()
        for (w1, w2), c in self.terms.items():
            left = f_left(NcPoly.monomial(w1))
            right = f_right(NcPoly.monomial(w2))
            piece = TensorPoly.of(left, right).scale(c)
            for k, c2 in piece.terms.items():
                out._iadd_term(k, c2)
        return out

    def __eq__(self, other):
        return isinstance(other, TensorPoly) and self.terms == other.terms

    def __repr__(self):
        if not self.terms:
            return "TensorPoly(0)"
        parts = [
            f"{c!r}*({word_name(w1)} (x) {word_name(w2)})"
            for (w1, w2), c in sorted(self.terms.items())
        ]
        return "TensorPoly(" + " + ".join(parts) + ")"
