"""Seeded random and fully generic symbolic inputs for the verifiers.

Random sampling draws small rationals (or small integers for the matrix
oracle) so that exact arithmetic stays cheap; any nonzero discrepancy is
decisive regardless of magnitude.

Generic symbolic jets adjoin one nilpotent coefficient symbol per (jet,
coordinate slot, basis element) and set each slot to the all-basis linear
combination of its symbols.  The symbols have nilpotency order 2, and no
identity checked here raises any single symbol above the second power, so
equality of two symbolic results is equality of honest polynomial identities
in the coefficients: it implies the identity for every choice of elements
over every commutative coefficient ring.
"""

from __future__ import annotations

from fractions import Fraction
from random import Random

from .algebras import LieAlgebraSpec, LieElement
from .jets import EXP, Jet, jet_make
from .scalars import RingSignature, WeilRing

__all__ = [
    "random_rational",
    "random_element",
    "random_jet",
    "symbolic_jet_family",
    "PLAIN_RING",
]

#: The ring of plain rationals (no nilpotent generators).
PLAIN_RING = WeilRing(RingSignature(()))


def random_rational(rng: Random, numerator_bound: int = 9, denominator_bound: int = 3
                    ) -> Fraction:
    return Fraction(
        rng.randint(-numerator_bound, numerator_bound),
        rng.randint(1, denominator_bound),
    )


def random_element(
    algebra: LieAlgebraSpec,
    ring: WeilRing,
    rng: Random,
    integer: bool = False,
    bound: int = 3,
) -> LieElement:
    """Element with random small rational (or integer) coordinates."""
    coords = []
    for _ in range(algebra.dim):
        q = Fraction(rng.randint(-bound, bound)) if integer else random_rational(rng)
        coords.append(ring.rational(q))
    return LieElement(algebra, ring.signature, tuple(coords))


def random_jet(
    algebra: LieAlgebraSpec,
    ring: WeilRing,
    order: int,
    rng: Random,
    system: str = EXP,
    integer: bool = False,
    bound: int = 3,
) -> Jet:
    coords = tuple(
        random_element(algebra, ring, rng, integer=integer, bound=bound)
        for _ in range(order)
    )
    return jet_make(algebra, ring, order, coords, system)


def symbolic_jet_family(
    algebra: LieAlgebraSpec,
    order: int,
    labels: tuple[str, ...],
    extra_generators: tuple[tuple[str, int], ...] = (),
) -> tuple[WeilRing, dict[str, Jet]]:
    """One fully generic exp-coordinate jet per label, over a shared ring.

    The ring starts with ``extra_generators`` and then one order-2 symbol per
    (label, slot, basis element), named ``{label}{slot}_{k}``.  Slot i of the
    jet for a label is the linear combination of all basis elements with that
    slot's symbols as coefficients.
    """
    gens = list(extra_generators)
    for label in labels:
        for slot in range(1, order + 1):
            for k in range(algebra.dim):
                gens.append((f"{label}{slot}_{k}", 2))
    ring = WeilRing(RingSignature(tuple(gens)))
    sig = ring.signature

    jets = {}
    for label in labels:
        coords = []
        for slot in range(1, order + 1):
            vec = tuple(
                ring.gen(f"{label}{slot}_{k}") for k in range(algebra.dim)
            )
            coords.append(LieElement(algebra, sig, vec))
        jets[label] = jet_make(algebra, ring, order, tuple(coords), EXP)
    return ring, jets
