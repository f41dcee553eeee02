"""Tests for stratum expressions and wall assembly."""

import random
from fractions import Fraction

import pytest

from libs.core.errors import EvaluationError, NotABundleError, UnboundIdentifierError
from libs.motivic.motives import projective, sym2, wedge2
from libs.motivic.polyring import ONE, ZERO, Polynomial
from libs.motivic.strata import (
    EMPTY_ENV,
    Bundle,
    Difference,
    Environment,
    EquivariantSquare,
    Ident,
    Literal,
    Product,
    Sum,
    Transform,
    TransformKind,
    WallTerm,
    assemble,
    eval_expr,
    gr,
    hilb,
    product,
    proj,
    pt,
    relhilb,
    total,
    wall_delta,
)

CASES = 1000


class TestEvaluation:
    """Test expression evaluation."""

    def test_bundle_equals_product(self):
        """Test that fibrations multiply."""
        assert eval_expr(Bundle(proj(3), hilb(2))) == eval_expr(Product(proj(3), hilb(2)))

    def test_sum_and_difference(self):
        """Test closed decompositions add."""
        expr = Difference(Sum(proj(2), pt()), proj(0))
        assert eval_expr(expr) == projective(2)

    def test_transforms(self):
        """Test symmetric-square operators."""
        assert eval_expr(Transform(TransformKind.SYM2, proj(2))) == sym2(projective(2))
        assert eval_expr(Transform(TransformKind.WEDGE2, proj(2))) == Polynomial.of(0, 1, 1, 1)
        assert eval_expr(Transform(TransformKind.SYM2_OFF_DIAG, proj(2))).eval_at(1) == 3

    def test_equivariant_square(self):
        """Test the Z2 quotient of a fibre square over P^2 x P^2 minus the diagonal."""
        off = Difference(Product(proj(2), proj(2)), proj(2))
        sod = Transform(TransformKind.SYM2_OFF_DIAG, proj(2))
        expr = EquivariantSquare(proj(3), sod, Difference(off, sod))
        # 3 * e(Sym^2 P^3) + 3 * e(Wedge^2 P^3)
        assert eval_expr(expr).eval_at(1) == 3 * 10 + 3 * 6

    def test_equivariant_square_exact(self):
        """Test the full polynomial of the fibre square over P^2 x P^2 minus the diagonal."""
        off = Difference(Product(proj(2), proj(2)), proj(2))
        sod = Transform(TransformKind.SYM2_OFF_DIAG, proj(2))
        expr = EquivariantSquare(proj(3), sod, Difference(off, sod))
        p3 = projective(3)
        expected = (
            Polynomial.of(0, 0, 1, 1, 1) * sym2(p3)
            + Polynomial.of(0, 1, 1, 1) * wedge2(p3)
        )
        assert eval_expr(expr) == expected

    def test_equivariant_square_trivial_involution(self):
        """Test that a base with no anti-invariant part gives plus * Sym^2."""
        expr = EquivariantSquare(proj(1), pt(), Literal(ZERO))
        assert eval_expr(expr) == sym2(projective(1))

    def test_atom_errors_propagate(self):
        """Test that atom domain errors surface from evaluation."""
        with pytest.raises(NotABundleError):
            eval_expr(Product(proj(2), relhilb(5, 7)))

    def test_left_to_right(self):
        """Test that the leftmost failure is the one reported."""
        with pytest.raises(UnboundIdentifierError) as exc_info:
            eval_expr(Sum(Ident("a"), Ident("b")))
        assert exc_info.value.name == "a"

    def test_unsupported_node(self):
        """Test that foreign objects are refused."""
        with pytest.raises(EvaluationError):
            eval_expr("proj(2)")


class TestHelpers:
    """Test expression constructors."""

    def test_total(self):
        """Test left-nested sums."""
        assert total([]) == Literal(ZERO)
        assert total([proj(1)]) == proj(1)
        assert total([proj(1), proj(2), proj(3)]) == Sum(Sum(proj(1), proj(2)), proj(3))

    def test_product(self):
        """Test left-nested products."""
        assert product(proj(1), proj(2), gr(2, 4)) == Product(Product(proj(1), proj(2)), gr(2, 4))


class TestEnvironment:
    """Test identifier environments."""

    def test_lookup(self):
        """Test bound and unbound names."""
        env = EMPTY_ENV.extend("x", ONE)
        assert env.lookup("x") == ONE
        assert "x" in env
        assert "x" not in EMPTY_ENV
        with pytest.raises(UnboundIdentifierError, match="unbound identifier 'y'"):
            env.lookup("y")

    def test_no_shadowing(self):
        """Test that rebinding a name is an error."""
        env = Environment({"x": ONE})
        with pytest.raises(EvaluationError):
            env.extend("x", ZERO)

    def test_extend_is_persistent(self):
        """Test that extension leaves the original untouched."""
        env = Environment({"x": ONE})
        env.extend("y", ZERO)
        assert env.names() == ("x",)

    def test_ident_evaluation(self):
        """Test identifiers resolve through the environment."""
        env = Environment({"b": projective(9)})
        assert eval_expr(Product(Ident("b"), proj(0)), env) == projective(9)


class TestWalls:
    """Test wall deltas and assembly."""

    def test_alpha_must_be_positive(self):
        """Test wall value validation."""
        with pytest.raises(EvaluationError):
            WallTerm(Fraction(0), (proj(1),), (proj(1),))
        with pytest.raises(EvaluationError):
            WallTerm(-3, (proj(1),), (proj(1),))

    def test_positions_ignored_by_equality(self):
        """Test that source positions do not affect equality."""
        a = WallTerm(Fraction(1, 2), [proj(1)], [proj(0)], line=3, column=1)
        b = WallTerm(Fraction(1, 2), (proj(1),), (proj(0),))
        assert a == b
        assert a.alpha == Fraction(1, 2)

    def test_simple_wall_delta(self):
        """Test a P^6/P^5 flip over P^5 x B(3,1)."""
        base = Product(proj(5), relhilb(3, 1))
        wall = WallTerm(Fraction(1, 2), (Bundle(proj(6), base),), (Bundle(proj(5), base),))
        delta = wall_delta(wall)
        assert delta.eval_at(1) == 162
        assert delta == Polynomial.monomial(6) * eval_expr(base)

    def test_first_wall_vanishes_in_low_degree(self):
        """Test the alpha=18 delta starts at p^5."""
        wall = WallTerm(
            18,
            (Bundle(proj(7), Product(proj(2), proj(14))),),
            (
                Bundle(proj(3), Product(proj(2), Difference(proj(14), proj(9)))),
                Bundle(proj(4), Product(proj(2), proj(9))),
            ),
        )
        delta = wall_delta(wall)
        assert delta.eval_at(1) == 150
        assert all(delta.coefficient(i) == 0 for i in range(5))
        assert delta.coefficient(5) != 0

    def test_identical_strata_cancel(self):
        """Test a wall whose plus and minus strata agree changes nothing."""
        strata = (Bundle(proj(3), hilb(2)), gr(2, 4))
        wall = WallTerm(Fraction(5, 2), strata, strata)
        assert wall_delta(wall) == ZERO
        assert assemble(projective(4), [wall]) == projective(4)

    def test_empty_wall(self):
        """Test a wall with no strata on either side."""
        assert wall_delta(WallTerm(1, (), ())) == ZERO

    def test_assemble(self):
        """Test base plus wall deltas."""
        walls = [
            WallTerm(2, (Literal(Polynomial.of(0, 1)),), (Literal(ZERO),)),
            WallTerm(1, (Literal(Polynomial.of(0, 0, 1)),), (Literal(ONE),)),
        ]
        assert assemble(ONE, walls) == Polynomial.of(0, 1, 1)
        assert assemble(ONE, []) == ONE


def random_expr(rng: random.Random, depth: int):
    """Random expression tree over small atoms and literals."""
    if depth == 0 or rng.random() < 0.3:
        if rng.random() < 0.5:
            return proj(rng.randint(0, 4))
        return Literal(Polynomial(tuple(rng.randint(-3, 3) for _ in range(rng.randint(0, 4)))))
    node = rng.choice((Sum, Difference, Product, Bundle))
    return node(random_expr(rng, depth - 1), random_expr(rng, depth - 1))


class TestRingHomomorphism:
    """Test that evaluation respects the ring structure."""

    def test_distributivity(self):
        """Test eval(A x (B + C)) = eval(A x B) + eval(A x C) on random trees."""
        rng = random.Random(7)
        for _ in range(CASES):
            a, b, c = (random_expr(rng, 3) for _ in range(3))
            lhs = eval_expr(Product(a, Sum(b, c)))
            assert lhs == eval_expr(Product(a, b)) + eval_expr(Product(a, c))

    def test_operations_commute_with_evaluation(self):
        """Test each node evaluates to the ring operation on its children."""
        rng = random.Random(11)
        for _ in range(CASES):
            a, b = random_expr(rng, 3), random_expr(rng, 3)
            va, vb = eval_expr(a), eval_expr(b)
            assert eval_expr(Sum(a, b)) == va + vb
            assert eval_expr(Difference(a, b)) == va - vb
            assert eval_expr(Bundle(a, b)) == eval_expr(Product(a, b)) == va * vb
