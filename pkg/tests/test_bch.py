"""Series engine tests: table evaluation, coefficient identities, agreement."""

from fractions import Fraction
from random import Random

import pytest

from liejets.algebras import abelian, bracket, heisenberg3, sl2
from liejets.bch import BCH_DEGREE3_TERMS, bch_mul, check_def61_vs_bch
from liejets.hall import free_nilpotent
from liejets.jets import JetError, jet_identity, jet_make, jet_mul
from liejets.sampling import PLAIN_RING, random_jet, symbolic_jet_family

H3 = heisenberg3()
_HALF = Fraction(1, 2)


class TestTable:
    def test_exact_classical_coefficients(self):
        table = dict(BCH_DEGREE3_TERMS)
        assert table["a"] == 1
        assert table["b"] == 1
        assert table[("a", "b")] == Fraction(1, 2)
        assert table[("a", ("a", "b"))] == Fraction(1, 12)
        assert table[("b", ("b", "a"))] == Fraction(1, 12)
        assert len(BCH_DEGREE3_TERMS) == 5


class TestBchMul:
    @pytest.mark.parametrize("order", [1, 2, 3])
    def test_abelian_is_coordinatewise_sum(self, order):
        spec = abelian(3)
        rng = Random(order)
        a = random_jet(spec, PLAIN_RING, order, rng)
        b = random_jet(spec, PLAIN_RING, order, rng)
        product = bch_mul(a, b)
        assert product.coords == tuple(x + y for x, y in zip(a.coords, b.coords))

    @pytest.mark.parametrize("order", [1, 2, 3])
    def test_identity_is_neutral(self, order):
        rng = Random(order + 5)
        a = random_jet(sl2(), PLAIN_RING, order, rng)
        e = jet_identity(sl2(), PLAIN_RING, order)
        assert bch_mul(a, e) == a
        assert bch_mul(e, a) == a

    def test_degree3_coefficient_identity(self):
        # For generic jets over free-nilpotent(2,3), the series' top
        # coefficient must be expressible both as the raw series combination
        #   1/6 (X3+Y3) + 1/4 ([X1,Y2]+[X2,Y1]) + 1/12 [X1,[X1,Y1]] + 1/12 [Y1,[Y1,X1]]
        # and as 1/6 of the closed form's
        #   (X3+Y3) + 3/2 ([X1,Y2]+[X2,Y1]) + 1/2 [X1-Y1,[X1,Y1]].
        generic = free_nilpotent(2, 3)
        _, jets = symbolic_jet_family(generic, 3, ("a", "b"))
        a, b = jets["a"], jets["b"]
        x1, x2, x3 = a.coords
        y1, y2, y3 = b.coords

        series_top = (
            (x3 + y3).scale(Fraction(1, 6))
            + (bracket(x1, y2) + bracket(x2, y1)).scale(Fraction(1, 4))
            + bracket(x1, bracket(x1, y1)).scale(Fraction(1, 12))
            + bracket(y1, bracket(y1, x1)).scale(Fraction(1, 12))
        )
        closed_top = (
            (x3 + y3)
            + (bracket(x1, y2) + bracket(x2, y1)).scale(Fraction(3, 2))
            + bracket(x1 - y1, bracket(x1, y1)).scale(_HALF)
        ).scale(Fraction(1, 6))
        assert series_top == closed_top

        # and the engine's own degree-3 output (exp coordinate = 3! * top)
        assert bch_mul(a, b).coords[2] == series_top.scale(6)

    def test_ring_name_collision_avoided(self):
        from liejets.scalars import ring_make

        ring = ring_make([("d", 1)])
        rng = Random(1)
        a = random_jet(H3, ring, 2, rng)
        b = random_jet(H3, ring, 2, rng)
        assert bch_mul(a, b) == jet_mul(a, b)

    def test_monomial_coordinates_rejected(self):
        from liejets.jets import MONOMIAL

        a = random_jet(H3, PLAIN_RING, 2, Random(0), system=MONOMIAL)
        with pytest.raises(JetError):
            bch_mul(a, a)

    def test_tampered_table_disagrees(self):
        # corrupting the degree-2 coefficient must be caught: with
        # a = (p, 0), b = (q, 0) the series gives Z2 = 2c [p, q]
        from liejets.algebras import basis_element, zero_element

        p = basis_element(H3, PLAIN_RING, "p")
        q = basis_element(H3, PLAIN_RING, "q")
        zero = zero_element(H3, PLAIN_RING)
        a = jet_make(H3, PLAIN_RING, 2, (p, zero))
        b = jet_make(H3, PLAIN_RING, 2, (q, zero))
        tampered = tuple(
            (word, Fraction(1, 3) if word == ("a", "b") else coeff)
            for word, coeff in BCH_DEGREE3_TERMS
        )
        wrong = bch_mul(a, b, table=tampered)
        assert wrong != jet_mul(a, b)
        assert wrong.coords[1] == basis_element(H3, PLAIN_RING, "z").scale(
            Fraction(2, 3)
        )

    def test_associative_on_random_inputs(self):
        rng = Random(17)
        for spec in (H3, sl2(), free_nilpotent(2, 3)):
            for _ in range(5):
                a = random_jet(spec, PLAIN_RING, 3, rng)
                b = random_jet(spec, PLAIN_RING, 3, rng)
                c = random_jet(spec, PLAIN_RING, 3, rng)
                assert bch_mul(bch_mul(a, b), c) == bch_mul(a, bch_mul(b, c))


class TestAgreementCheck:
    @pytest.mark.parametrize("order", [1, 2, 3])
    def test_symbolic_and_random_pass(self, order):
        result = check_def61_vs_bch(H3, order, trials=25, seed=0)
        assert result.passed
        assert result.detail["symbolic"] == "pass"
        assert result.detail["random_trials"] == 25
        assert result.check == f"def6.1-vs-bch-n{order}"

    def test_agreement_across_builtin_catalog(self):
        from liejets.catalog import default_verification_algebras

        for spec in default_verification_algebras():
            for order in (1, 2, 3):
                assert check_def61_vs_bch(spec, order, trials=10, seed=3).passed
