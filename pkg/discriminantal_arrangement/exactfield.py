# -*- coding: utf-8 -*-

"""
Exact scalars and exact linear algebra.

A **scalar** is either a :class:`fractions.Fraction` or a
:class:`QuadraticNumber` ``a + b*sqrt(d)`` with rational ``a, b`` and a
square-free radicand ``d > 1``. One computation lives in one :class:`Field`;
combining two different radicands raises
:class:`~discriminantal_arrangement.exc.MixedFieldError`.

Rational matrices take a fraction-free (Bareiss) integer path for
:func:`rank` and :func:`det`; quadratic matrices go through Gauss-Jordan
elimination over the field. Nothing here ever touches a float.
"""

import typing as T
import re
import math
import itertools
import dataclasses
from fractions import Fraction

from .exc import MixedFieldError, ScalarParseError


@dataclasses.dataclass(frozen=True, slots=True)
class QuadraticNumber:
    """
    ``a + b*sqrt(d)``. Build values with :func:`quadratic`, which collapses
    ``b == 0`` to a plain :class:`~fractions.Fraction`. A value constructed
    directly with ``b == 0`` still compares and hashes like ``a``.
    """

    a: Fraction
    b: Fraction
    d: int

    def __post_init__(self):
        if not isinstance(self.a, Fraction):
            object.__setattr__(self, "a", Fraction(self.a))
        if not isinstance(self.b, Fraction):
            object.__setattr__(self, "b", Fraction(self.b))

    # --- helpers
    def _split(self, other) -> tuple[Fraction, Fraction] | None:
        if isinstance(other, QuadraticNumber):
            if other.d != self.d:
                raise MixedFieldError(
                    f"cannot combine sqrt({self.d}) with sqrt({other.d})",
                    d=[self.d, other.d],
                )
            return other.a, other.b
        if isinstance(other, (int, Fraction)):
            return Fraction(other), Fraction(0)
        return None

    def conjugate(self) -> "QuadraticNumber":
        return QuadraticNumber(self.a, -self.b, self.d)

    def norm(self) -> Fraction:
        return self.a * self.a - self.d * self.b * self.b

    def sign(self) -> int:
        sa = (self.a > 0) - (self.a < 0)
        sb = (self.b > 0) - (self.b < 0)
        if sb == 0:
            return sa
        if sa == 0 or sa == sb:
            return sb
        n = self.norm()
        return sa * ((n > 0) - (n < 0))

    # --- arithmetic
    def __add__(self, other):
        parts = self._split(other)
        if parts is None:
            return NotImplemented
        return quadratic(self.a + parts[0], self.b + parts[1], self.d)

    __radd__ = __add__

    def __sub__(self, other):
        parts = self._split(other)
        if parts is None:
            return NotImplemented
        return quadratic(self.a - parts[0], self.b - parts[1], self.d)

    def __rsub__(self, other):
        parts = self._split(other)
        if parts is None:
            return NotImplemented
        return quadratic(parts[0] - self.a, parts[1] - self.b, self.d)

    def __mul__(self, other):
        parts = self._split(other)
        if parts is None:
            return NotImplemented
        c, e = parts
        return quadratic(
            self.a * c + self.b * e * self.d,
            self.a * e + self.b * c,
            self.d,
        )

    __rmul__ = __mul__

    def _inverse(self) -> "Scalar":
        n = self.norm()
        if n == 0:
            raise ZeroDivisionError("division by zero")
        return quadratic(self.a / n, -self.b / n, self.d)

    def __truediv__(self, other):
        parts = self._split(other)
        if parts is None:
            return NotImplemented
        if parts[1] == 0:
            if parts[0] == 0:
                raise ZeroDivisionError("division by zero")
            return quadratic(self.a / parts[0], self.b / parts[0], self.d)
        return self * QuadraticNumber(parts[0], parts[1], self.d)._inverse()

    def __rtruediv__(self, other):
        parts = self._split(other)
        if parts is None:
            return NotImplemented
        return self._inverse() * quadratic(parts[0], parts[1], self.d)

    def __neg__(self):
        return QuadraticNumber(-self.a, -self.b, self.d)

    def __pos__(self):
        return self

    def __abs__(self):
        return -self if self.sign() < 0 else self

    def __bool__(self):
        return self.a != 0 or self.b != 0

    # --- comparison
    def __eq__(self, other):
        if isinstance(other, QuadraticNumber):
            if self.b == 0 and other.b == 0:
                return self.a == other.a
            return self.d == other.d and self.a == other.a and self.b == other.b
        if isinstance(other, (int, Fraction)):
            return self.b == 0 and self.a == other
        return NotImplemented

    def __hash__(self):
        if self.b == 0:
            return hash(self.a)
        return hash((self.a, self.b, self.d))

    def _compare(self, other) -> int | None:
        if self._split(other) is None:
            return None
        return sign(self - other)

    def __lt__(self, other):
        c = self._compare(other)
        return NotImplemented if c is None else c < 0

    def __le__(self, other):
        c = self._compare(other)
        return NotImplemented if c is None else c <= 0

    def __gt__(self, other):
        c = self._compare(other)
        return NotImplemented if c is None else c > 0

    def __ge__(self, other):
        c = self._compare(other)
        return NotImplemented if c is None else c >= 0

    def __str__(self):
        return format_scalar(self)

    def __repr__(self):
        return f"QuadraticNumber({format_scalar(self)!r})"


Scalar = T.Union[Fraction, QuadraticNumber]


def quadratic(a, b, d: int) -> Scalar:
    """
    Build ``a + b*sqrt(d)``, returning a :class:`~fractions.Fraction` when
    ``b == 0``.
    """
    b = Fraction(b)
    if b == 0:
        return Fraction(a)
    return QuadraticNumber(Fraction(a), b, d)


def sign(x: Scalar) -> int:
    """
    Exact sign of a scalar: ``-1``, ``0`` or ``1``.

    For ``a + b*sqrt(d)`` with ``a`` and ``b`` of opposite signs the answer is
    ``sign(a) * sign(a^2 - d*b^2)``.
    """
    if isinstance(x, QuadraticNumber):
        return x.sign()
    return (x > 0) - (x < 0)


def radicand_of(x: Scalar) -> int | None:
    if isinstance(x, QuadraticNumber) and x.b != 0:
        return x.d
    return None


def is_square_free(d: int) -> bool:
    if d < 2:
        return False
    return all(d % (p * p) != 0 for p in range(2, math.isqrt(d) + 1))


# ------------------------------------------------------------------------------
# Text form
# ------------------------------------------------------------------------------
_TERM_PATTERN = re.compile(
    r"(?P<sign>[+-]?)"
    r"(?:(?P<num>\d+)(?:/(?P<den>\d+))?(?P<mul>\*)?)?"
    r"(?:sqrt\((?P<rad>\d+)\))?"
)


def _parse_terms(text: str) -> tuple[Fraction, Fraction, int | None]:
    # keep the original column of each non blank character for error messages
    columns = [i + 1 for i, ch in enumerate(text) if not ch.isspace()]
    compact = "".join(ch for ch in text if not ch.isspace())
    if not compact:
        raise ScalarParseError("empty scalar", column=1)

    def fail(pos: int, reason: str):
        column = columns[pos] if pos < len(columns) else len(text) + 1
        raise ScalarParseError(
            f"cannot parse scalar {text!r} at column {column}: {reason}",
            text=text,
            column=column,
        )

    rational = Fraction(0)
    irrational = Fraction(0)
    d = None
    pos = 0
    first = True
    while pos < len(compact):
        m = _TERM_PATTERN.match(compact, pos)
        has_num = m.group("num") is not None
        has_rad = m.group("rad") is not None
        if not (has_num or has_rad):
            fail(m.end(), "expected a number or sqrt(d)")
        if not first and not m.group("sign"):
            fail(pos, "terms must be joined by '+' or '-'")
        if m.group("mul") and not has_rad:
            fail(m.end(), "expected sqrt(d) after '*'")
        if has_num and has_rad and not m.group("mul"):
            fail(m.start("rad") - len("sqrt("), "expected '*' before sqrt")
        coef = Fraction(1)
        if has_num:
            den = int(m.group("den")) if m.group("den") else 1
            if den == 0:
                fail(m.start("den"), "zero denominator")
            coef = Fraction(int(m.group("num")), den)
        if m.group("sign") == "-":
            coef = -coef
        if has_rad:
            rad = int(m.group("rad"))
            if not is_square_free(rad):
                fail(m.start("rad"), f"radicand {rad} is not square free and > 1")
            if d is not None and d != rad:
                raise MixedFieldError(
                    f"scalar {text!r} mixes sqrt({d}) and sqrt({rad})",
                    d=[d, rad],
                )
            d = rad
            irrational += coef
        else:
            rational += coef
        pos = m.end()
        first = False
    return rational, irrational, d


def parse_scalar(text: T.Union[str, int], d: int | None = None) -> Scalar:
    """
    Parse ``"p/q"``, ``"p"`` or ``"a/b + c/e*sqrt(d)"`` (whitespace ignored).

    :param d: when given, a radicand other than ``d`` raises
        :class:`~discriminantal_arrangement.exc.MixedFieldError`; when ``None``
        any single radicand is accepted.
    """
    if isinstance(text, bool):
        raise ScalarParseError(f"not a scalar: {text!r}", text=repr(text), column=1)
    if isinstance(text, int):
        return Fraction(text)
    if not isinstance(text, str):
        raise ScalarParseError(
            f"scalars are strings or integers, got {text!r}",
            text=repr(text),
            column=1,
        )
    rational, irrational, rad = _parse_terms(text)
    if rad is not None and irrational != 0:
        if d is not None and rad != d:
            raise MixedFieldError(
                f"scalar {text!r} uses sqrt({rad}) in a sqrt({d}) field",
                d=[d, rad],
            )
        return QuadraticNumber(rational, irrational, rad)
    return rational


def _format_fraction(x: Fraction) -> str:
    if x.denominator == 1:
        return str(x.numerator)
    return f"{x.numerator}/{x.denominator}"


def format_scalar(x: Scalar) -> str:
    """
    Canonical text of a scalar; :func:`parse_scalar` inverts it.
    """
    if not isinstance(x, QuadraticNumber) or x.b == 0:
        return _format_fraction(Fraction(x.a if isinstance(x, QuadraticNumber) else x))
    b = abs(x.b)
    irrational = f"sqrt({x.d})" if b == 1 else f"{_format_fraction(b)}*sqrt({x.d})"
    if x.a == 0:
        return irrational if x.b > 0 else f"-{irrational}"
    op = "+" if x.b > 0 else "-"
    return f"{_format_fraction(x.a)} {op} {irrational}"


@dataclasses.dataclass(frozen=True)
class Field:
    """
    ``Q`` (``d is None``) or ``Q(sqrt(d))``.
    """

    d: int | None = None

    def __post_init__(self):
        if self.d is not None and not is_square_free(self.d):
            raise ValueError(f"radicand must be square free and > 1, got {self.d}")

    @property
    def is_rational(self) -> bool:
        return self.d is None

    def parse(self, text: T.Union[str, int]) -> Scalar:
        x = parse_scalar(text, d=self.d)
        self.check(x)
        return x

    def check(self, x: Scalar) -> Scalar:
        rad = radicand_of(x)
        if rad is not None and rad != self.d:
            raise MixedFieldError(
                f"value {format_scalar(x)} is outside {self}",
                d=[self.d, rad],
            )
        return x

    def sqrt(self) -> QuadraticNumber:
        if self.d is None:
            raise ValueError("Q has no square root generator")
        return QuadraticNumber(Fraction(0), Fraction(1), self.d)

    def join(self, other: "Field") -> "Field":
        if self.d is None:
            return other
        if other.d is None or other.d == self.d:
            return self
        raise MixedFieldError(f"cannot combine {self} with {other}", d=[self.d, other.d])

    @classmethod
    def of(cls, values: T.Iterable[Scalar]) -> "Field":
        field = cls()
        for x in values:
            rad = radicand_of(x)
            if rad is not None:
                field = field.join(cls(rad))
        return field

    def to_dict(self) -> dict[str, T.Any]:
        if self.d is None:
            return {"type": "rational"}
        return {"type": "quadratic", "d": self.d}

    @classmethod
    def from_dict(cls, data: dict[str, T.Any]) -> "Field":
        kind = data.get("type")
        if kind == "rational":
            return cls()
        if kind == "quadratic":
            return cls(int(data["d"]))
        raise ValueError(f"unknown field type {kind!r}")

    def __str__(self):
        return "Q" if self.d is None else f"Q(sqrt({self.d}))"


# ------------------------------------------------------------------------------
# Vectors
# ------------------------------------------------------------------------------
def dot(u: T.Sequence[Scalar], v: T.Sequence[Scalar]) -> Scalar:
    total = Fraction(0)
    for x, y in zip(u, v, strict=True):
        if x and y:
            total = total + x * y
    return total


def cross(u: T.Sequence[Scalar], v: T.Sequence[Scalar]) -> tuple[Scalar, Scalar, Scalar]:
    """
    Cross product of two homogeneous 3-vectors: the meet of two lines or the
    join of two points.
    """
    return (
        u[1] * v[2] - u[2] * v[1],
        u[2] * v[0] - u[0] * v[2],
        u[0] * v[1] - u[1] * v[0],
    )


def is_zero_vector(v: T.Sequence[Scalar]) -> bool:
    return all(x == 0 for x in v)


def _all_rational(values: T.Iterable[Scalar]) -> bool:
    return all(radicand_of(x) is None for x in values)


def _as_fraction(x: Scalar) -> Fraction:
    if isinstance(x, QuadraticNumber):
        return x.a
    return Fraction(x)


def _exact(x) -> Scalar:
    if isinstance(x, int):
        return Fraction(x)
    return x


def canonical_vector(v: T.Sequence[Scalar]) -> tuple[Scalar, ...]:
    """
    Projective normal form: divide by the first nonzero entry; a rational
    result is then scaled to the primitive integer vector whose first nonzero
    entry is positive.

    ``(18, -12, 2)`` and ``(-9, 6, -1)`` both map to ``(9, -6, 1)``.
    """
    v = [_exact(x) for x in v]
    pivot = next((x for x in v if x != 0), None)
    if pivot is None:
        raise ValueError("the zero vector has no projective class")
    scaled = [x / pivot if x != 0 else Fraction(0) for x in v]
    if not _all_rational(scaled):
        return tuple(scaled)
    scaled = [_as_fraction(x) for x in scaled]
    lcm = math.lcm(*(x.denominator for x in scaled))
    ints = [int(x * lcm) for x in scaled]
    g = math.gcd(*ints)
    return tuple(Fraction(i // g) for i in ints)


# ------------------------------------------------------------------------------
# Matrices
# ------------------------------------------------------------------------------
Matrix = T.Sequence[T.Sequence[Scalar]]


def _integer_rows(m: Matrix) -> tuple[list[list[int]], Fraction]:
    """
    Clear denominators row by row. Returns the integer matrix and the product
    of the row multipliers (the factor the determinant got scaled by).
    """
    rows = []
    scale = Fraction(1)
    for row in m:
        fr = [_as_fraction(x) for x in row]
        lcm = math.lcm(*(x.denominator for x in fr)) if fr else 1
        rows.append([int(x * lcm) for x in fr])
        scale *= lcm
    return rows, scale


def _bareiss(rows: list[list[int]]) -> tuple[int, int, int]:
    """
    Fraction-free elimination in place.

    Returns ``(rank, last_pivot, swap_sign)``. For a square nonsingular input
    ``last_pivot * swap_sign`` is the determinant.
    """
    n_rows = len(rows)
    n_cols = len(rows[0]) if rows else 0
    rank = 0
    prev = 1
    swaps = 1
    for col in range(n_cols):
        if rank == n_rows:
            break
        pivot = next((r for r in range(rank, n_rows) if rows[r][col] != 0), None)
        if pivot is None:
            continue
        if pivot != rank:
            rows[rank], rows[pivot] = rows[pivot], rows[rank]
            swaps = -swaps
        p = rows[rank][col]
        for r in range(rank + 1, n_rows):
            q = rows[r][col]
            row_r = rows[r]
            row_p = rows[rank]
            for c in range(col + 1, n_cols):
                row_r[c] = (row_r[c] * p - q * row_p[c]) // prev
            row_r[col] = 0
        prev = p
        rank += 1
    return rank, prev, swaps


def rref(m: Matrix) -> tuple[tuple[tuple[Scalar, ...], ...], tuple[int, ...]]:
    """
    Reduced row echelon form of the row space of ``m`` with zero rows dropped.

    The result only depends on the row space, which makes it a canonical key
    for a linear subspace.

    :return: ``(rows, pivots)``, pivot columns in increasing order.
    """
    work = [[_exact(x) for x in row] for row in m]
    n_rows = len(work)
    n_cols = len(work[0]) if work else 0
    pivots = []
    r = 0
    for col in range(n_cols):
        if r == n_rows:
            break
        pivot = next((i for i in range(r, n_rows) if work[i][col] != 0), None)
        if pivot is None:
            continue
        work[r], work[pivot] = work[pivot], work[r]
        p = work[r][col]
        work[r] = [x / p if x != 0 else Fraction(0) for x in work[r]]
        for i in range(n_rows):
            if i != r and work[i][col] != 0:
                f = work[i][col]
                work[i] = [x - f * y for x, y in zip(work[i], work[r])]
        pivots.append(col)
        r += 1
    return tuple(tuple(row) for row in work[:r]), tuple(pivots)


def in_row_space(
    v: T.Sequence[Scalar],
    rows: T.Sequence[T.Sequence[Scalar]],
    pivots: T.Sequence[int],
) -> bool:
    """
    Whether ``v`` lies in the span of an RREF basis produced by :func:`rref`.
    """
    residual = list(v)
    for row, p in zip(rows, pivots):
        f = residual[p]
        if f != 0:
            residual = [x - f * y for x, y in zip(residual, row)]
    return is_zero_vector(residual)


def rank(m: Matrix) -> int:
    """
    Exact rank. Independent of row and column order.
    """
    if len(m) == 0 or len(m[0]) == 0:
        return 0
    if _all_rational(x for row in m for x in row):
        rows, _ = _integer_rows(m)
        return _bareiss(rows)[0]
    return len(rref(m)[1])


def det(m: Matrix) -> Scalar:
    """
    Exact determinant of a square matrix.
    """
    n = len(m)
    if any(len(row) != n for row in m):
        raise ValueError("det needs a square matrix")
    if n == 0:
        return Fraction(1)
    if _all_rational(x for row in m for x in row):
        rows, scale = _integer_rows(m)
        r, last, swaps = _bareiss(rows)
        if r < n:
            return Fraction(0)
        return Fraction(last * swaps) / scale
    work = [[_exact(x) for x in row] for row in m]
    result: Scalar = Fraction(1)
    for col in range(n):
        pivot = next((i for i in range(col, n) if work[i][col] != 0), None)
        if pivot is None:
            return Fraction(0)
        if pivot != col:
            work[col], work[pivot] = work[pivot], work[col]
            result = -result
        p = work[col][col]
        result = result * p
        for i in range(col + 1, n):
            if work[i][col] != 0:
                f = work[i][col] / p
                work[i] = [x - f * y for x, y in zip(work[i], work[col])]
    return result


@dataclasses.dataclass(frozen=True)
class AffineSubspace:
    """
    ``basepoint + span(basis)``.
    """

    basepoint: tuple[Scalar, ...]
    basis: tuple[tuple[Scalar, ...], ...]

    @property
    def dimension(self) -> int:
        return len(self.basis)

    def point(self, coefficients: T.Sequence[Scalar]) -> tuple[Scalar, ...]:
        p = list(self.basepoint)
        for c, v in zip(coefficients, self.basis, strict=True):
            if c:
                p = [x + c * y for x, y in zip(p, v)]
        return tuple(p)


def solution_space(m: Matrix, rhs: T.Sequence[Scalar]) -> AffineSubspace | None:
    """
    All solutions of ``m x = rhs``, or ``None`` when the system is
    inconsistent (a value, not an error).
    """
    if len(m) != len(rhs):
        raise ValueError("rhs length must match the number of rows")
    n_cols = len(m[0]) if m else 0
    augmented = [list(row) + [b] for row, b in zip(m, rhs)]
    rows, pivots = rref(augmented) if augmented else ((), ())
    if n_cols in pivots:
        return None
    basepoint = [Fraction(0)] * n_cols
    for row, p in zip(rows, pivots):
        basepoint[p] = row[n_cols]
    basis = []
    for free in range(n_cols):
        if free in pivots:
            continue
        v = [Fraction(0)] * n_cols
        v[free] = Fraction(1)
        for row, p in zip(rows, pivots):
            v[p] = -row[free]
        basis.append(tuple(v))
    return AffineSubspace(basepoint=tuple(basepoint), basis=tuple(basis))


def kernel(m: Matrix, n_cols: int | None = None) -> tuple[tuple[Scalar, ...], ...]:
    """
    Basis of ``{x : m x = 0}``.
    """
    if len(m) == 0:
        if n_cols is None:
            raise ValueError("n_cols is required for an empty matrix")
        return tuple(
            tuple(Fraction(int(i == j)) for j in range(n_cols)) for i in range(n_cols)
        )
    space = solution_space(m, [Fraction(0)] * len(m))
    return space.basis


def inverse(m: Matrix) -> list[list[Scalar]]:
    n = len(m)
    augmented = [
        list(row) + [Fraction(int(i == j)) for j in range(n)] for i, row in enumerate(m)
    ]
    rows, pivots = rref(augmented)
    if tuple(pivots[:n]) != tuple(range(n)) or len(rows) < n:
        raise ZeroDivisionError("matrix is singular")
    return [list(row[n:]) for row in rows]


def mat_vec(m: Matrix, v: T.Sequence[Scalar]) -> tuple[Scalar, ...]:
    return tuple(dot(row, v) for row in m)


def vec_mat(v: T.Sequence[Scalar], m: Matrix) -> tuple[Scalar, ...]:
    return tuple(dot(v, [row[j] for row in m]) for j in range(len(m[0])))


# ------------------------------------------------------------------------------
# Oracles
# ------------------------------------------------------------------------------
def _permutation_sign(perm: T.Sequence[int]) -> int:
    seen = [False] * len(perm)
    s = 1
    for i in range(len(perm)):
        if seen[i]:
            continue
        j = i
        length = 0
        while not seen[j]:
            seen[j] = True
            j = perm[j]
            length += 1
        if length % 2 == 0:
            s = -s
    return s


def brute_force_det(m: Matrix) -> Scalar:
    """
    Leibniz expansion; exponential, for tests only.
    """
    n = len(m)
    total: Scalar = Fraction(0)
    for perm in itertools.permutations(range(n)):
        term: Scalar = Fraction(_permutation_sign(perm))
        for i, j in enumerate(perm):
            term = term * m[i][j]
        total = total + term
    return total


def brute_force_rank(m: Matrix) -> int:
    """
    Size of the largest nonzero minor; exponential, for tests only.
    """
    n_rows = len(m)
    n_cols = len(m[0]) if m else 0
    for size in range(min(n_rows, n_cols), 0, -1):
        for rs in itertools.combinations(range(n_rows), size):
            for cs in itertools.combinations(range(n_cols), size):
                if brute_force_det([[m[i][j] for j in cs] for i in rs]) != 0:
                    return size
    return 0
