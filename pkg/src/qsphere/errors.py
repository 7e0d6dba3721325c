"""Exception types shared across the package."""


class QsphereError(Exception):
    pass


class PoleAtPoint(QsphereError):
    """Evaluation point is a root of the denominator."""


class AlphabetMismatch(QsphereError):
    """Operands live over different generator alphabets."""


class UndefinedStar(QsphereError):
    """Star map has no image for a generator."""


class NonTerminatingRule(QsphereError):
    """A rule's right-hand side is not strictly smaller than its left-hand side."""


class DuplicateRule(QsphereError):
    """Two rules share the same left-hand side."""


class MissingStructureMaps(QsphereError):
    """Presentation carries no coalgebra structure maps."""


class RelationViolation(QsphereError):
    """A defining relation does not map to zero."""

    def __init__(self, relation, residual):
        self.relation = relation
        self.residual = residual
        super().__init__(f"relation does not vanish: {relation}")


class StarViolation(QsphereError):
    """A map fails to commute with the star structure."""


class IdentityFails(QsphereError):
    """A matrix identity has a nonzero residual entry."""

    def __init__(self, entry, residual):
        self.entry = entry
        self.residual = residual
        super().__init__(f"identity fails at entry {entry}")


class HypothesisFails(QsphereError):
    """A hypothesis of the morphism-construction lemma fails."""

    def __init__(self, which, witness):
        self.which = which
        self.witness = witness
        super().__init__(f"hypothesis ({which}) fails: {witness}")


class AxiomFails(QsphereError):
    """A Hopf/coquasitriangularity axiom has a counterexample."""

    def __init__(self, axiom, witness, residual=None):
        self.axiom = axiom
        self.witness = witness
        self.residual = residual
        super().__init__(f"axiom {axiom} fails on {witness}")


class SolutionNotUnique(QsphereError):
    """Invariance system has solution space of dimension != 1."""


class Inconsistent(QsphereError):
    """Linear system has no nonzero solution."""


class InvalidTopRow(QsphereError):
    """Top row of a Gelfand-Tsetlin pattern is not weakly decreasing and nonnegative."""


class ExprSyntaxError(QsphereError):
    """Expression text does not match the grammar."""

    def __init__(self, position, expected):
        self.position = position
        self.expected = expected
        super().__init__(f"syntax error at position {position}: expected {expected}")


class UnknownGenerator(QsphereError):
    pass


class IndexOutOfRange(QsphereError):
    pass
