"""Independent series oracle for the jet group law.

Multiplies two jets by literally evaluating the classical truncated
Baker-Campbell-Hausdorff series

    log(exp A exp B) = A + B + 1/2 [A,B] + 1/12 [A,[A,B]] + 1/12 [B,[B,A]]
                       (+ terms of bracket degree >= 4)

in g tensored with the scalar ring extended by one nilpotent generator d of
order n.  A and B are the curves sum_i d^i X_i / i!; the product's jet
coordinates are read back from the d-degree components, which exist and are
unique because the extension is a free module over the base ring with basis
1, d, ..., d^n.

The coefficient table is fixed, audited data through bracket degree 3; this
module shares no code with the closed-form product in :mod:`liejets.jets`,
which is the point of an oracle.
"""

from __future__ import annotations

from fractions import Fraction
from math import factorial
from random import Random

from .algebras import LieAlgebraSpec, LieElement, bracket
from .hall import free_nilpotent
from .jets import EXP, Jet, JetError, jet_make, jet_mul
from .report import FAIL, PASS, CheckResult
from .sampling import PLAIN_RING, random_jet, symbolic_jet_family
from .scalars import WeilRing, embed, split_last_generator

__all__ = ["BCH_DEGREE3_TERMS", "bch_mul", "check_def61_vs_bch"]

#: Bracket words over the two arguments "a", "b" with their classical Dynkin
#: coefficients, complete through bracket degree 3.  A word is either a leaf
#: name or a pair (left word, right word) meaning their bracket.
BCH_DEGREE3_TERMS: tuple = (
    ("a", Fraction(1)),
    ("b", Fraction(1)),
    (("a", "b"), Fraction(1, 2)),
    (("a", ("a", "b")), Fraction(1, 12)),
    (("b", ("b", "a")), Fraction(1, 12)),
)


def _word_degree(word) -> int:
    if isinstance(word, str):
        return 1
    return _word_degree(word[0]) + _word_degree(word[1])


def _eval_word(word, a: LieElement, b: LieElement) -> LieElement:
    if word == "a":
        return a
    if word == "b":
        return b
    return bracket(_eval_word(word[0], a, b), _eval_word(word[1], a, b))


def _min_degree_of(elem: LieElement, gen_index: int) -> int | None:
    """Smallest exponent of one ring generator across all stored terms
    (None when the element is zero)."""
    best = None
    for c in elem.coords:
        for key in c.terms:
            e = 0
            for g, p in key:
                if g == gen_index:
                    e = p
                    break
            if best is None or e < best:
                best = e
    return best


def bch_mul(a: Jet, b: Jet, table: tuple = BCH_DEGREE3_TERMS) -> Jet:
    """Product of two exp-coordinate jets via the truncated series."""
    if a.order > 3 or b.order > 3:
        raise JetError("series table only covers orders up to 3")
    for j in (a, b):
        if j.system != EXP:
            raise JetError("bch_mul requires exp coordinates")
    # Reuse the pairing checks of the closed-form path's error contract.
    if a.algebra is not b.algebra and a.algebra != b.algebra:
        raise JetError(f"jets over {a.algebra.name} and {b.algebra.name} cannot mix")
    if a.signature != b.signature or a.order != b.order:
        raise JetError("jets must share one scalar ring and order")

    n = a.order
    base_sig = a.signature
    dname = "d"
    while dname in base_sig.names:
        dname += "_"
    ext_ring = WeilRing(base_sig.extend(dname, n))
    ext_sig = ext_ring.signature
    d_index = ext_sig.arity - 1

    def curve(j: Jet) -> LieElement:
        acc = None
        for i, x in enumerate(j.coords, start=1):
            dpow = ext_ring.gen(dname, i).scale(Fraction(1, factorial(i)))
            lifted = LieElement(
                j.algebra, ext_sig, tuple(embed(c, ext_sig) for c in x.coords)
            )
            term = lifted * dpow
            acc = term if acc is None else acc + term
        return acc

    A = curve(a)
    B = curve(b)

    total = None
    for word, coeff in table:
        value = _eval_word(word, A, B)
        lowest = _min_degree_of(value, d_index)
        if lowest is not None and lowest < _word_degree(word):
            raise AssertionError(
                f"bracket word {word} produced a term of d-degree {lowest}"
            )
        term = value.scale(coeff)
        total = term if total is None else total + term

    # Read the jet coordinates off the d-degree components.
    parts = [split_last_generator(c) for c in total.coords]
    for p in parts:
        comp = p.get(0)
        if comp is not None and comp.terms:
            raise AssertionError("series product has a nonzero degree-0 component")
    base_ring = WeilRing(base_sig)
    coords = []
    for i in range(1, n + 1):
        vec = tuple(p.get(i, base_ring.zero) * factorial(i) for p in parts)
        coords.append(LieElement(a.algebra, base_sig, vec))
    return jet_make(a.algebra, base_ring, n, tuple(coords), EXP)


def check_def61_vs_bch(
    algebra: LieAlgebraSpec, order: int, trials: int = 100, seed: int = 0
) -> CheckResult:
    """Closed-form product vs. series product.

    Runs one fully generic symbolic comparison over the free nilpotent
    algebra on two generators of class ``order``, then ``trials`` seeded
    random rational comparisons over ``algebra``.  Exact equality everywhere.
    """
    check_id = f"def6.1-vs-bch-n{order}"
    detail: dict = {"algebra": algebra.name, "order": order}

    generic = free_nilpotent(2, order)
    _, jets = symbolic_jet_family(generic, order, ("a", "b"))
    ga, gb = jets["a"], jets["b"]
    if jet_mul(ga, gb) != bch_mul(ga, gb):
        detail["symbolic"] = FAIL
        return CheckResult(
            check_id,
            FAIL,
            detail,
            counterexample={"symbolic": True, "a": ga.to_json(), "b": gb.to_json()},
        )
    detail["symbolic"] = PASS

    rng = Random(seed)
    for trial in range(trials):
        a = random_jet(algebra, PLAIN_RING, order, rng)
        b = random_jet(algebra, PLAIN_RING, order, rng)
        closed = jet_mul(a, b)
        series = bch_mul(a, b)
        if closed != series:
            detail["random_trials"] = trial
            return CheckResult(
                check_id,
                FAIL,
                detail,
                counterexample={
                    "trial": trial,
                    "a": a.to_json(),
                    "b": b.to_json(),
                    "closed_form": closed.to_json(),
                    "series": series.to_json(),
                },
            )
    detail["random_trials"] = trials
    return CheckResult(check_id, PASS, detail)
