"""Independent matrix oracle: exact exp/log over nilpotent scalar extensions.

A matrix whose entries all have zero constant term is nilpotent for scalar
reasons: each power raises the minimum total degree in the ring generators,
and the ring kills every monomial beyond the sum of the nilpotency orders.
Its exponential is therefore a finite sum, computed exactly, and the group
identities for the jet product become literal matrix identities that can be
checked entry by entry over the truncated ring.

A :class:`MatrixRep` sends basis elements of an algebra to rational matrices
and is validated at load time: the image of every basis bracket must equal
the commutator of the images.  Built-in representations ship for h3 (strictly
upper triangular 3x3), sl2 (2x2), and so3 (3x3).
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import factorial
from random import Random

from .algebras import LieAlgebraSpec, LieElement
from .jets import EXP, Jet, JetError, jet_make, jet_mul
from .report import FAIL, PASS, CheckResult
from .sampling import PLAIN_RING, random_element, random_jet
from .scalars import (
    RingSignature,
    WeilRing,
    WeilScalar,
    embed,
    rational_from_str,
    ring_make,
    split_last_generator,
)

__all__ = [
    "MatrixError",
    "WeilMatrix",
    "weil_exp",
    "weil_log",
    "MatrixRep",
    "matrix_rep",
    "builtin_rep",
    "BUILTIN_REP_NAMES",
    "matrix_mul",
    "verify_theorem_4",
    "check_def61_vs_matrix",
]


class MatrixError(ValueError):
    """Raised for invalid matrices, failed preconditions, or bad reps."""


# -- plain rational matrices (tuples of tuples of Fraction) -------------------


def _rmat(rows) -> tuple:
    return tuple(tuple(Fraction(e) for e in row) for row in rows)


def _rmat_add(a, b):
    return tuple(tuple(x + y for x, y in zip(ra, rb)) for ra, rb in zip(a, b))


def _rmat_sub(a, b):
    return tuple(tuple(x - y for x, y in zip(ra, rb)) for ra, rb in zip(a, b))


def _rmat_scale(a, q):
    q = Fraction(q)
    return tuple(tuple(x * q for x in row) for row in a)


def _rmat_mul(a, b):
    n = len(a)
    m = len(b[0])
    inner = range(len(b))
    return tuple(
        tuple(sum(a[i][k] * b[k][j] for k in inner) for j in range(m))
        for i in range(n)
    )


def _rmat_comm(a, b):
    return _rmat_sub(_rmat_mul(a, b), _rmat_mul(b, a))


def _rmat_zero(n):
    return tuple((Fraction(0),) * n for _ in range(n))


class WeilMatrix:
    """Square matrix with WeilScalar entries, all over one ring."""

    __slots__ = ("signature", "size", "rows")

    def __init__(self, signature: RingSignature, rows: tuple):
        self.signature = signature
        self.rows = rows
        self.size = len(rows)

    @classmethod
    def identity(cls, ring: WeilRing, n: int) -> "WeilMatrix":
        return cls(
            ring.signature,
            tuple(
                tuple(ring.one if i == j else ring.zero for j in range(n))
                for i in range(n)
            ),
        )

    @classmethod
    def zero(cls, ring: WeilRing, n: int) -> "WeilMatrix":
        return cls(ring.signature, tuple((ring.zero,) * n for _ in range(n)))

    @classmethod
    def from_rational(cls, ring: WeilRing, rows) -> "WeilMatrix":
        return cls(
            ring.signature,
            tuple(tuple(ring.rational(e) for e in row) for row in rows),
        )

    def is_zero(self) -> bool:
        return all(not e.terms for row in self.rows for e in row)

    def is_scalar_nilpotent(self) -> bool:
        """True when every entry has zero constant term."""
        return all(not e.constant_term() for row in self.rows for e in row)

    def __add__(self, other):
        if not isinstance(other, WeilMatrix):
            return NotImplemented
        return WeilMatrix(
            self.signature,
            tuple(
                tuple(x + y for x, y in zip(ra, rb))
                for ra, rb in zip(self.rows, other.rows)
            ),
        )

    def __sub__(self, other):
        if not isinstance(other, WeilMatrix):
            return NotImplemented
        return WeilMatrix(
            self.signature,
            tuple(
                tuple(x - y for x, y in zip(ra, rb))
                for ra, rb in zip(self.rows, other.rows)
            ),
        )

    def __neg__(self):
        return WeilMatrix(
            self.signature, tuple(tuple(-x for x in row) for row in self.rows)
        )

    def __mul__(self, other):
        if isinstance(other, WeilMatrix):
            n = self.size
            rows = []
            for i in range(n):
                row = []
                for j in range(n):
                    acc = None
                    for k in range(n):
                        t = self.rows[i][k] * other.rows[k][j]
                        if t.terms:
                            acc = t if acc is None else acc + t
                    row.append(acc if acc is not None else _zero_scalar(self.signature))
                rows.append(tuple(row))
            return WeilMatrix(self.signature, tuple(rows))
        if isinstance(other, (WeilScalar, int, Fraction)):
            return WeilMatrix(
                self.signature,
                tuple(tuple(x * other for x in row) for row in self.rows),
            )
        return NotImplemented

    def __rmul__(self, other):
        if isinstance(other, (WeilScalar, int, Fraction)):
            return self.__mul__(other)
        return NotImplemented

    def scale(self, rational) -> "WeilMatrix":
        q = Fraction(rational)
        return WeilMatrix(
            self.signature, tuple(tuple(x.scale(q) for x in row) for row in self.rows)
        )

    def embed(self, target: RingSignature) -> "WeilMatrix":
        return WeilMatrix(
            target, tuple(tuple(embed(x, target) for x in row) for row in self.rows)
        )

    def __eq__(self, other):
        if not isinstance(other, WeilMatrix):
            return NotImplemented
        return self.signature == other.signature and self.rows == other.rows

    def __repr__(self):
        body = "; ".join(", ".join(str(e) for e in row) for row in self.rows)
        return f"WeilMatrix[{self.size}]({body})"


def _zero_scalar(sig: RingSignature) -> WeilScalar:
    return WeilScalar(sig, {})


def _degree_cap(sig: RingSignature) -> int:
    return sum(sig.orders)


def weil_exp(M: WeilMatrix) -> WeilMatrix:
    """I + M + M^2/2! + ...; finite because M is scalar-nilpotent."""
    if not M.is_scalar_nilpotent():
        raise MatrixError("weil_exp needs every entry to have zero constant term")
    ring = WeilRing(M.signature)
    acc = WeilMatrix.identity(ring, M.size)
    term = acc
    cap = _degree_cap(M.signature)
    for k in range(1, cap + 2):
        term = (term * M).scale(Fraction(1, k))
        if term.is_zero():
            return acc
        acc = acc + term
    raise AssertionError("exponential series failed to terminate")


def weil_log(M: WeilMatrix) -> WeilMatrix:
    """(M-I) - (M-I)^2/2 + (M-I)^3/3 - ...; finite for unipotent M."""
    ring = WeilRing(M.signature)
    N = M - WeilMatrix.identity(ring, M.size)
    if not N.is_scalar_nilpotent():
        raise MatrixError("weil_log needs M - I to have entries with zero constant term")
    acc = WeilMatrix.zero(ring, M.size)
    power = WeilMatrix.identity(ring, M.size)
    cap = _degree_cap(M.signature)
    for k in range(1, cap + 2):
        power = power * N
        if power.is_zero():
            return acc
        acc = acc + power.scale(Fraction((-1) ** (k + 1), k))
    raise AssertionError("logarithm series failed to terminate")


# -- representations -----------------------------------------------------------


@dataclass
class MatrixRep:
    """Rational matrix images of an algebra's basis, bracket-compatible."""

    algebra: LieAlgebraSpec
    dimension: int
    images: dict

    def image_of(self, coords) -> tuple:
        """Rational matrix for rational coordinates (one per basis element)."""
        acc = _rmat_zero(self.dimension)
        for name, c in zip(self.algebra.basis, coords):
            c = Fraction(c)
            if c:
                acc = _rmat_add(acc, _rmat_scale(self.images[name], c))
        return acc

    def realize(self, x: LieElement, ring: WeilRing | None = None) -> WeilMatrix:
        """WeilMatrix image of an element with WeilScalar coordinates."""
        if ring is None:
            ring = WeilRing(x.signature)
        n = self.dimension
        cells = [[ring.zero] * n for _ in range(n)]
        for name, s in zip(self.algebra.basis, x.coords):
            if not s.terms:
                continue
            img = self.images[name]
            for r in range(n):
                for c in range(n):
                    e = img[r][c]
                    if e:
                        cells[r][c] = cells[r][c] + s.scale(e)
        return WeilMatrix(ring.signature, tuple(tuple(row) for row in cells))

    def extract(self, M: WeilMatrix) -> LieElement:
        """Solve sum_k x_k * image(b_k) = M for the coordinates x_k.

        Gaussian elimination on the rational image span, applied to the
        WeilScalar right-hand sides.  Raises if M lies outside the span.
        """
        dim = self.algebra.dim
        n = self.dimension
        rows = []
        for r in range(n):
            for c in range(n):
                coeffs = [self.images[b][r][c] for b in self.algebra.basis]
                rows.append((coeffs, M.rows[r][c]))
        solution: list = [None] * dim
        row_at = 0
        for col in range(dim):
            pivot = next(
                (i for i in range(row_at, len(rows)) if rows[i][0][col]), None
            )
            if pivot is None:
                raise MatrixError(
                    "basis images are linearly dependent; coordinates undetermined"
                )
            rows[row_at], rows[pivot] = rows[pivot], rows[row_at]
            coeffs, rhs = rows[row_at]
            inv = Fraction(1) / coeffs[col]
            coeffs = [e * inv for e in coeffs]
            rhs = rhs.scale(inv)
            rows[row_at] = (coeffs, rhs)
            for i in range(len(rows)):
                if i == row_at:
                    continue
                ci, ri = rows[i]
                f = ci[col]
                if f:
                    ci = [e - f * p for e, p in zip(ci, coeffs)]
                    ri = ri - rhs.scale(f)
                    rows[i] = (ci, ri)
            row_at += 1
        for i, (coeffs, rhs) in enumerate(rows):
            if i < dim:
                solution[coeffs.index(1)] = rhs
            elif rhs.terms:
                raise MatrixError("matrix does not lie in the image span")
        return LieElement(self.algebra, M.signature, tuple(solution))

    def to_json(self) -> dict:
        return {
            "algebra": self.algebra.name,
            "dimension": self.dimension,
            "images": {
                b: [[str(e) for e in row] for row in self.images[b]]
                for b in self.algebra.basis
            },
        }

    @classmethod
    def from_json(cls, doc, algebra: LieAlgebraSpec) -> "MatrixRep":
        if doc.get("algebra") != algebra.name:
            raise MatrixError(
                f"representation is for {doc.get('algebra')!r}, expected {algebra.name!r}"
            )
        images = {
            name: [[rational_from_str(e) for e in row] for row in rows]
            for name, rows in doc["images"].items()
        }
        return matrix_rep(algebra, images, int(doc["dimension"]))


def matrix_rep(
    algebra: LieAlgebraSpec, images: dict, dimension: int | None = None
) -> MatrixRep:
    """Validated constructor: checks shapes and bracket compatibility."""
    missing = set(algebra.basis) - set(images)
    if missing:
        raise MatrixError(f"missing images for basis elements {sorted(missing)}")
    mats = {name: _rmat(images[name]) for name in algebra.basis}
    sizes = {len(m) for m in mats.values()} | {
        len(row) for m in mats.values() for row in m
    }
    if len(sizes) != 1:
        raise MatrixError(f"images must all be square of one size, got sizes {sizes}")
    n = sizes.pop()
    if dimension is not None and dimension != n:
        raise MatrixError(f"declared dimension {dimension} but images are {n}x{n}")
    for i, bi in enumerate(algebra.basis):
        for j in range(i + 1, algebra.dim):
            bj = algebra.basis[j]
            expected = _rmat_zero(n)
            for k, c in algebra.basis_bracket(i, j).items():
                expected = _rmat_add(
                    expected, _rmat_scale(mats[algebra.basis[k]], c)
                )
            if _rmat_comm(mats[bi], mats[bj]) != expected:
                raise MatrixError(
                    f"images violate bracket compatibility on ({bi}, {bj})"
                )
    return MatrixRep(algebra=algebra, dimension=n, images=mats)


#: Names with a built-in representation.
BUILTIN_REP_NAMES = ("h3", "sl2", "so3")


def builtin_rep(name: str) -> MatrixRep:
    """Built-in faithful representations for h3, sl2, and so3."""
    from .algebras import heisenberg3, sl2, so3

    if name == "h3":
        return matrix_rep(
            heisenberg3(),
            {
                "p": [[0, 1, 0], [0, 0, 0], [0, 0, 0]],
                "q": [[0, 0, 0], [0, 0, 1], [0, 0, 0]],
                "z": [[0, 0, 1], [0, 0, 0], [0, 0, 0]],
            },
        )
    if name == "sl2":
        return matrix_rep(
            sl2(),
            {
                "e": [[0, 1], [0, 0]],
                "f": [[0, 0], [1, 0]],
                "h": [[1, 0], [0, -1]],
            },
        )
    if name == "so3":
        return matrix_rep(
            so3(),
            {
                "L1": [[0, 0, 0], [0, 0, -1], [0, 1, 0]],
                "L2": [[0, 0, 1], [0, 0, 0], [-1, 0, 0]],
                "L3": [[0, -1, 0], [1, 0, 0], [0, 0, 0]],
            },
        )
    raise MatrixError(f"no built-in representation for {name!r}")


# -- jet multiplication through the matrix group -------------------------------


def _curve_matrix(rep: MatrixRep, j: Jet, ext_ring: WeilRing, dname: str
                  ) -> WeilMatrix:
    """Matrix of sum_i d^i/i! * image(X_i) over the extended ring."""
    acc = WeilMatrix.zero(ext_ring, rep.dimension)
    for i, x in enumerate(j.coords, start=1):
        dpow = ext_ring.gen(dname, i).scale(Fraction(1, factorial(i)))
        lifted = rep.realize(x).embed(ext_ring.signature)
        acc = acc + lifted * dpow
    return acc


def matrix_mul(a: Jet, b: Jet, rep: MatrixRep) -> Jet:
    """Multiply jets by exp/log in the matrix group, reading coordinates back.

    Computes weil_log(weil_exp(A) * weil_exp(B)) over the ring extended by a
    nilpotency-order-n generator d, splits the result by powers of d, and
    solves each component against the basis images.
    """
    if a.system != EXP or b.system != EXP:
        raise JetError("matrix_mul requires exp coordinates")
    if a.algebra != rep.algebra:
        raise JetError(f"representation is for {rep.algebra.name}, jet is over "
                       f"{a.algebra.name}")
    if a.signature != b.signature or a.order != b.order or a.algebra != b.algebra:
        raise JetError("jets must share algebra, scalar ring, and order")
    n = a.order
    base_sig = a.signature
    dname = "d"
    while dname in base_sig.names:
        dname += "_"
    ext_ring = WeilRing(base_sig.extend(dname, n))
    L = weil_log(
        weil_exp(_curve_matrix(rep, a, ext_ring, dname))
        * weil_exp(_curve_matrix(rep, b, ext_ring, dname))
    )
    base_ring = WeilRing(base_sig)
    components = {
        i: [[base_ring.zero] * rep.dimension for _ in range(rep.dimension)]
        for i in range(1, n + 1)
    }
    for r in range(rep.dimension):
        for c in range(rep.dimension):
            for power, s in split_last_generator(L.rows[r][c]).items():
                if not s.terms:
                    continue
                if power == 0:
                    raise AssertionError("matrix log has a degree-0 component")
                components[power][r][c] = s
    coords = []
    for i in range(1, n + 1):
        M = WeilMatrix(base_sig, tuple(tuple(row) for row in components[i]))
        coords.append(rep.extract(M) * factorial(i))
    return jet_make(a.algebra, base_ring, n, tuple(coords), EXP)


# -- verification drivers -------------------------------------------------------


def verify_theorem_4(n: int, rep: MatrixRep, trials: int = 100, seed: int = 0
                     ) -> CheckResult:
    """Exp-product identities over Q[d_1..d_n]/(d_i^2), exact matrix equality.

    With s = d_1 + ... + d_n and random integer-coordinate elements, compares

        exp(sum s^i/i! X_i) * exp(sum s^i/i! Y_i)
        == exp(sum s^i/i! Z_i)

    where Z_i are the closed-form product coefficients, built here from
    matrix commutators only.
    """
    if n not in (1, 2, 3):
        raise MatrixError(f"order must be 1, 2, or 3, got {n}")
    check_id = f"thm-4.{n}"
    detail = {"algebra": rep.algebra.name, "order": n, "trials": trials}
    ring = ring_make(tuple((f"d{i}", 1) for i in range(1, n + 1)))
    s = ring.zero
    for i in range(1, n + 1):
        s = s + ring.gen(f"d{i}")
    spow = {i: s**i for i in range(1, n + 1)}

    def side(mats) -> WeilMatrix:
        acc = WeilMatrix.zero(ring, rep.dimension)
        for i, m in enumerate(mats, start=1):
            lifted = WeilMatrix.from_rational(ring, m)
            acc = acc + lifted * spow[i].scale(Fraction(1, factorial(i)))
        return weil_exp(acc)

    rng = Random(seed)
    half = Fraction(1, 2)
    three_halves = Fraction(3, 2)
    for trial in range(trials):
        xs = [
            rep.image_of(
                [c.constant_term() for c in
                 random_element(rep.algebra, PLAIN_RING, rng, integer=True).coords]
            )
            for _ in range(n)
        ]
        ys = [
            rep.image_of(
                [c.constant_term() for c in
                 random_element(rep.algebra, PLAIN_RING, rng, integer=True).coords]
            )
            for _ in range(n)
        ]
        lhs = side(xs) * side(ys)
        zs = [_rmat_add(xs[0], ys[0])]
        if n >= 2:
            zs.append(_rmat_add(_rmat_add(xs[1], ys[1]), _rmat_comm(xs[0], ys[0])))
        if n == 3:
            cross = _rmat_add(_rmat_comm(xs[0], ys[1]), _rmat_comm(xs[1], ys[0]))
            nested = _rmat_comm(_rmat_sub(xs[0], ys[0]), _rmat_comm(xs[0], ys[0]))
            z3 = _rmat_add(
                _rmat_add(xs[2], ys[2]),
                _rmat_add(_rmat_scale(cross, three_halves), _rmat_scale(nested, half)),
            )
            zs.append(z3)
        rhs = side(zs)
        if lhs != rhs:
            return CheckResult(
                check_id,
                FAIL,
                detail,
                counterexample={
                    "trial": trial,
                    "X": [[[str(e) for e in row] for row in m] for m in xs],
                    "Y": [[[str(e) for e in row] for row in m] for m in ys],
                },
            )
    return CheckResult(check_id, PASS, detail)


def check_def61_vs_matrix(rep: MatrixRep, order: int, trials: int = 100,
                          seed: int = 0) -> CheckResult:
    """Closed-form product vs. matrix exp/log over Q[d]/(d^{order+1}).

    For random integer-coordinate jets a, b compares
    weil_log(weil_exp(A) * weil_exp(B)) with the matrix curve of
    jet_mul(a, b), as exact matrices over the truncated ring.
    """
    check_id = f"def6.1-vs-matrix-n{order}"
    detail = {"algebra": rep.algebra.name, "order": order, "trials": trials}
    ext_ring = ring_make((("d", order),))
    rng = Random(seed)
    for trial in range(trials):
        a = random_jet(rep.algebra, PLAIN_RING, order, rng, integer=True)
        b = random_jet(rep.algebra, PLAIN_RING, order, rng, integer=True)
        lhs = weil_log(
            weil_exp(_curve_matrix(rep, a, ext_ring, "d"))
            * weil_exp(_curve_matrix(rep, b, ext_ring, "d"))
        )
        rhs = _curve_matrix(rep, jet_mul(a, b), ext_ring, "d")
        if lhs != rhs:
            return CheckResult(
                check_id,
                FAIL,
                detail,
                counterexample={
                    "trial": trial,
                    "a": a.to_json(),
                    "b": b.to_json(),
                },
            )
    return CheckResult(check_id, PASS, detail)
