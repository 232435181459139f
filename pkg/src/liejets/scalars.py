"""Exact truncated polynomial rings over the rationals.

A ring signature names a list of commuting generators t_1, ..., t_k together
with nilpotency orders m_1, ..., m_k, and denotes the quotient ring

    Q[t_1, ..., t_k] / (t_1^{m_1 + 1}, ..., t_k^{m_k + 1}).

Elements (``WeilScalar``) are stored as canonical sparse term tables mapping
monomials to nonzero ``Fraction`` coefficients, so equality is literal table
equality and every operation is exact.  A signature with no generators is the
ring Q itself.  Rings with one generator of order n model rings of nilpotent
infinitesimals of order n; several generators model products of such rings.

All values are immutable after construction and safe to share freely.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Mapping

Rational = Fraction

#: Sparse monomial key: ((generator_index, exponent), ...) sorted by index,
#: exponents >= 1.  The empty tuple is the constant monomial.
Monomial = tuple

__all__ = [
    "Rational",
    "SignatureError",
    "SignatureMismatch",
    "RingSignature",
    "WeilScalar",
    "WeilRing",
    "ring_make",
    "rational_from_str",
    "embed",
    "split_last_generator",
]


class SignatureError(ValueError):
    """Raised for malformed ring signatures."""


class SignatureMismatch(ValueError):
    """Raised when two scalars from different rings meet in one operation."""


def rational_from_str(text: str | int) -> Fraction:
    """Parse a rational from "p/q" or "p" form (also accepts ints)."""
    return Fraction(text)


@dataclass(frozen=True)
class RingSignature:
    """Ordered generators of a truncated polynomial ring.

    Each entry is (name, order) with order m meaning t^{m+1} = 0.
    """

    generators: tuple[tuple[str, int], ...]

    def __post_init__(self):
        gens = tuple((str(n), int(m)) for n, m in self.generators)
        object.__setattr__(self, "generators", gens)
        names = [n for n, _ in gens]
        if len(set(names)) != len(names):
            raise SignatureError(f"duplicate generator name in {names}")
        for n, m in gens:
            if m < 1:
                raise SignatureError(f"nilpotency order of {n!r} must be >= 1, got {m}")

    @property
    def names(self) -> tuple[str, ...]:
        return tuple(n for n, _ in self.generators)

    @property
    def orders(self) -> tuple[int, ...]:
        return tuple(m for _, m in self.generators)

    @property
    def arity(self) -> int:
        return len(self.generators)

    def index(self, name: str) -> int:
        for i, (n, _) in enumerate(self.generators):
            if n == name:
                return i
        raise KeyError(name)

    def extend(self, name: str, order: int) -> "RingSignature":
        """Signature with one more generator appended at the end."""
        return RingSignature(self.generators + ((name, order),))

    def to_json(self) -> list:
        return [[n, m] for n, m in self.generators]

    @classmethod
    def from_json(cls, doc: Iterable) -> "RingSignature":
        return cls(tuple((str(n), int(m)) for n, m in doc))


def _mono_mul(k1: Monomial, k2: Monomial, orders: tuple[int, ...]) -> Monomial | None:
    """Product of two sparse monomials, or None if a nilpotency bound kills it."""
    out = []
    i = j = 0
    n1, n2 = len(k1), len(k2)
    while i < n1 and j < n2:
        g1, e1 = k1[i]
        g2, e2 = k2[j]
        if g1 == g2:
            e = e1 + e2
            if e > orders[g1]:
                return None
            out.append((g1, e))
            i += 1
            j += 1
        elif g1 < g2:
            out.append(k1[i])
            i += 1
        else:
            out.append(k2[j])
            j += 1
    out.extend(k1[i:])
    out.extend(k2[j:])
    return tuple(out)


def _dense(key: Monomial, arity: int) -> tuple[int, ...]:
    vec = [0] * arity
    for g, e in key:
        vec[g] = e
    return tuple(vec)


def _sparse(vec: Iterable[int]) -> Monomial:
    return tuple((g, int(e)) for g, e in enumerate(vec) if e)


class WeilScalar:
    """Element of a truncated polynomial ring, in canonical sparse form.

    The term table never stores zero coefficients; two scalars are equal
    exactly when their signatures and term tables are equal.  Construct
    through :class:`WeilRing` or :meth:`from_terms`; the raw constructor
    trusts its arguments.
    """

    __slots__ = ("signature", "terms")

    def __init__(self, signature: RingSignature, terms: dict):
        self.signature = signature
        self.terms = terms

    @classmethod
    def from_terms(
        cls, signature: RingSignature, dense_terms: Mapping[tuple, object]
    ) -> "WeilScalar":
        """Canonicalizing constructor from {dense exponent vector: coefficient}."""
        orders = signature.orders
        arity = signature.arity
        out: dict = {}
        for vec, coeff in dense_terms.items():
            vec = tuple(int(e) for e in vec)
            if len(vec) != arity:
                raise SignatureError(
                    f"exponent vector {vec} has length {len(vec)}, expected {arity}"
                )
            for g, e in enumerate(vec):
                if e < 0 or e > orders[g]:
                    raise SignatureError(
                        f"exponent {e} of generator {signature.names[g]!r} "
                        f"violates bound {orders[g]}"
                    )
            c = Fraction(coeff)
            if not c:
                continue
            key = _sparse(vec)
            acc = out.get(key)
            if acc is None:
                out[key] = c
            else:
                acc = acc + c
                if acc:
                    out[key] = acc
                else:
                    del out[key]
        return cls(signature, out)

    # -- predicates ----------------------------------------------------

    def is_zero(self) -> bool:
        return not self.terms

    def constant_term(self) -> Fraction:
        """Value at all generators = 0."""
        return self.terms.get((), Fraction(0))

    def min_degree(self) -> int:
        """Smallest total degree of any stored monomial (0 for the zero scalar)."""
        if not self.terms:
            return 0
        return min(sum(e for _, e in key) for key in self.terms)

    # -- arithmetic ----------------------------------------------------

    def _coerce(self, other):
        if isinstance(other, WeilScalar):
            if other.signature is not self.signature and other.signature != self.signature:
                raise SignatureMismatch(
                    f"cannot mix rings {self.signature.generators} and "
                    f"{other.signature.generators}"
                )
            return other
        if isinstance(other, (int, Fraction)):
            c = Fraction(other)
            return WeilScalar(self.signature, {(): c} if c else {})
        return None

    def __add__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        a, b = self.terms, other.terms
        if not a:
            return other
        if not b:
            return self
        if len(a) < len(b):
            a, b = b, a
        out = dict(a)
        for k, c in b.items():
            acc = out.get(k)
            if acc is None:
                out[k] = c
            else:
                acc = acc + c
                if acc:
                    out[k] = acc
                else:
                    del out[k]
        return WeilScalar(self.signature, out)

    __radd__ = __add__

    def __neg__(self):
        return WeilScalar(self.signature, {k: -c for k, c in self.terms.items()})

    def __sub__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        if not other.terms:
            return self
        out = dict(self.terms)
        for k, c in other.terms.items():
            acc = out.get(k)
            if acc is None:
                out[k] = -c
            else:
                acc = acc - c
                if acc:
                    out[k] = acc
                else:
                    del out[k]
        return WeilScalar(self.signature, out)

    def __rsub__(self, other):
        return (-self).__add__(other)

    def __mul__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        a, b = self.terms, other.terms
        if not a or not b:
            return WeilScalar(self.signature, {})
        orders = self.signature.orders
        out: dict = {}
        for k1, c1 in a.items():
            for k2, c2 in b.items():
                if not k1:
                    k = k2
                elif not k2:
                    k = k1
                else:
                    k = _mono_mul(k1, k2, orders)
                    if k is None:
                        continue
                c = c1 * c2
                acc = out.get(k)
                if acc is None:
                    out[k] = c
                else:
                    acc = acc + c
                    if acc:
                        out[k] = acc
                    else:
                        del out[k]
        return WeilScalar(self.signature, out)

    __rmul__ = __mul__

    def scale(self, rational) -> "WeilScalar":
        """Multiply every coefficient by a plain rational."""
        c = Fraction(rational)
        if not c:
            return WeilScalar(self.signature, {})
        if c == 1:
            return self
        return WeilScalar(self.signature, {k: v * c for k, v in self.terms.items()})

    def __pow__(self, n: int):
        if not isinstance(n, int) or n < 0:
            return NotImplemented
        acc = WeilScalar(self.signature, {(): Fraction(1)})
        for _ in range(n):
            acc = acc * self
        return acc

    # -- comparison and display -----------------------------------------

    def __eq__(self, other):
        if isinstance(other, (int, Fraction)):
            c = Fraction(other)
            return self.terms == ({(): c} if c else {})
        if not isinstance(other, WeilScalar):
            return NotImplemented
        return self.signature == other.signature and self.terms == other.terms

    def __str__(self):
        if not self.terms:
            return "0"
        names = self.signature.names
        parts = []
        for key in sorted(self.terms, key=lambda k: _dense(k, self.signature.arity)):
            c = self.terms[key]
            mono = "*".join(
                names[g] if e == 1 else f"{names[g]}^{e}" for g, e in key
            )
            if not mono:
                parts.append(str(c))
            elif c == 1:
                parts.append(mono)
            elif c == -1:
                parts.append(f"-{mono}")
            else:
                parts.append(f"{c}*{mono}")
        return " + ".join(parts).replace("+ -", "- ")

    def __repr__(self):
        return f"WeilScalar({self!s})"

    # -- serialization ---------------------------------------------------

    def to_json(self) -> dict:
        arity = self.signature.arity
        terms = sorted(
            (list(_dense(k, arity)), str(c)) for k, c in self.terms.items()
        )
        return {"ring": self.signature.to_json(), "terms": [[v, c] for v, c in terms]}

    @classmethod
    def from_json(cls, doc: Mapping) -> "WeilScalar":
        sig = RingSignature.from_json(doc["ring"])
        dense = {}
        for vec, coeff in doc["terms"]:
            key = tuple(int(e) for e in vec)
            if key in dense:
                raise SignatureError(f"duplicate exponent vector {key} in term table")
            dense[key] = rational_from_str(coeff)
        return cls.from_terms(sig, dense)


class WeilRing:
    """Handle for one truncated polynomial ring; builds its scalars."""

    __slots__ = ("signature", "zero", "one")

    def __init__(self, signature: RingSignature):
        self.signature = signature
        self.zero = WeilScalar(signature, {})
        self.one = WeilScalar(signature, {(): Fraction(1)})

    def rational(self, value) -> WeilScalar:
        c = Fraction(value)
        return WeilScalar(self.signature, {(): c} if c else {})

    def gen(self, name: str, power: int = 1) -> WeilScalar:
        """The monomial name**power (zero if the power exceeds the order)."""
        g = self.signature.index(name)
        if power < 0:
            raise SignatureError("generator powers must be non-negative")
        if power == 0:
            return self.one
        if power > self.signature.orders[g]:
            return self.zero
        return WeilScalar(self.signature, {((g, power),): Fraction(1)})

    def scalar(self, dense_terms: Mapping[tuple, object]) -> WeilScalar:
        return WeilScalar.from_terms(self.signature, dense_terms)

    def __eq__(self, other):
        return isinstance(other, WeilRing) and self.signature == other.signature

    def __repr__(self):
        gens = ", ".join(f"{n}^{m + 1}=0" for n, m in self.signature.generators)
        return f"WeilRing({gens})" if gens else "WeilRing(Q)"


def ring_make(generators: Iterable[tuple[str, int]]) -> WeilRing:
    """Build the ring Q[t_i]/(t_i^{m_i+1}) for generators [(name, m_i), ...]."""
    return WeilRing(RingSignature(tuple(generators)))


def embed(scalar: WeilScalar, target: RingSignature) -> WeilScalar:
    """Reinterpret a scalar in a signature that extends its own at the end.

    Valid because sparse monomial keys index generators by position, and the
    original generators keep their positions.
    """
    own = scalar.signature.generators
    if target.generators[: len(own)] != own:
        raise SignatureMismatch(
            f"{target.generators} does not extend {own} at the end"
        )
    return WeilScalar(target, dict(scalar.terms))


def split_last_generator(scalar: WeilScalar) -> dict[int, WeilScalar]:
    """Decompose by powers of the final generator.

    Returns {power: coefficient scalar} over the ring without that generator;
    absent powers have zero coefficient.
    """
    sig = scalar.signature
    if sig.arity == 0:
        raise SignatureError("scalar has no generators to split on")
    last = sig.arity - 1
    base = RingSignature(sig.generators[:-1])
    parts: dict[int, dict] = {}
    for key, coeff in scalar.terms.items():
        if key and key[-1][0] == last:
            power = key[-1][1]
            rest = key[:-1]
        else:
            power = 0
            rest = key
        parts.setdefault(power, {})[rest] = coeff
    return {p: WeilScalar(base, terms) for p, terms in parts.items()}
