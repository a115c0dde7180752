"""Exact scalar arithmetic and small exact linear algebra.

Every computation in this package is exact.  Scalars are either
``fractions.Fraction`` (arbitrary-precision rationals) or :class:`ExtScalar`,
an element of the degree-4 extension field Q(sqrt2, sqrt3) stored on the
basis (1, sqrt2, sqrt3, sqrt6).  The two kinds mix freely: arithmetic
promotes rationals into the extension field when needed.

On top of the scalars the module provides:

- :class:`Polynomial` -- sparse multivariate polynomials with exact
  coefficients, supporting differentiation, evaluation and pullback along
  a linear change of coordinates,
- :class:`Matrix` -- dense square matrices with exact inverse/determinant,
- :func:`solve_linear` -- exact solver for rectangular linear systems,
  returning the full affine solution set as a :class:`SolutionSpace`,
- :func:`congruent_diagonalize` -- Lagrange congruence diagonalization of
  a symmetric matrix (R^T A R diagonal), used to read off rank and
  signature exactly.

All operations are deterministic: ties in pivot selection are broken by
index order, and polynomial terms carry a fixed canonical ordering.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Optional, Sequence, Union


class ExactSqrtError(ValueError):
    """Raised when an exact square root is not representable in the field."""


# ---------------------------------------------------------------------------
# scalars
# ---------------------------------------------------------------------------

_EXT_LABELS = ("", "sqrt2", "sqrt3", "sqrt6")


@dataclass(frozen=True)
class ExtScalar:
    """Element c0 + c1*sqrt2 + c2*sqrt3 + c3*sqrt6 of Q(sqrt2, sqrt3).

    The coordinates are Fractions on the fixed basis (1, sqrt2, sqrt3,
    sqrt6).  The class implements field arithmetic; division uses the
    product of the three nontrivial Galois conjugates, whose product with
    self is the (rational) field norm.
    """

    coords: tuple

    def __post_init__(self):
        if len(self.coords) != 4:
            raise ValueError("ExtScalar needs 4 coordinates")
        object.__setattr__(
            self, "coords", tuple(Fraction(c) for c in self.coords)
        )

    # -- constructors -------------------------------------------------

    @classmethod
    def of(cls, value) -> "ExtScalar":
        if isinstance(value, ExtScalar):
            return value
        return cls((Fraction(value), Fraction(0), Fraction(0), Fraction(0)))

    @classmethod
    def parts(cls, c0=0, c1=0, c2=0, c3=0) -> "ExtScalar":
        return cls((Fraction(c0), Fraction(c1), Fraction(c2), Fraction(c3)))

    # -- structure ----------------------------------------------------

    @property
    def is_rational(self) -> bool:
        return not any(self.coords[1:])

    def rational_value(self) -> Fraction:
        if not self.is_rational:
            raise ValueError("%s is irrational" % (self,))
        return self.coords[0]

    def conjugate(self, flip2: bool, flip3: bool) -> "ExtScalar":
        c0, c1, c2, c3 = self.coords
        if flip2:
            c1, c3 = -c1, -c3
        if flip3:
            c2, c3 = -c2, -c3
        return ExtScalar((c0, c1, c2, c3))

    # -- arithmetic ---------------------------------------------------

    def __add__(self, other):
        other = _coerce_ext(other)
        if other is None:
            return NotImplemented
        return ExtScalar(tuple(a + b for a, b in zip(self.coords, other.coords)))

    __radd__ = __add__

    def __neg__(self):
        return ExtScalar(tuple(-a for a in self.coords))

    def __sub__(self, other):
        other = _coerce_ext(other)
        if other is None:
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other):
        other = _coerce_ext(other)
        if other is None:
            return NotImplemented
        return other + (-self)

    def __mul__(self, other):
        other = _coerce_ext(other)
        if other is None:
            return NotImplemented
        a0, a1, a2, a3 = self.coords
        b0, b1, b2, b3 = other.coords
        # basis products: sqrt2*sqrt3 = sqrt6, sqrt2*sqrt6 = 2*sqrt3,
        # sqrt3*sqrt6 = 3*sqrt2
        return ExtScalar((
            a0 * b0 + 2 * a1 * b1 + 3 * a2 * b2 + 6 * a3 * b3,
            a0 * b1 + a1 * b0 + 3 * (a2 * b3 + a3 * b2),
            a0 * b2 + a2 * b0 + 2 * (a1 * b3 + a3 * b1),
            a0 * b3 + a3 * b0 + a1 * b2 + a2 * b1,
        ))

    __rmul__ = __mul__

    def inverse(self) -> "ExtScalar":
        if not any(self.coords):
            raise ZeroDivisionError("ExtScalar division by zero")
        cofactor = (
            self.conjugate(True, False)
            * self.conjugate(False, True)
            * self.conjugate(True, True)
        )
        norm = self * cofactor
        # the field norm is rational by Galois invariance
        if not norm.is_rational:
            raise ArithmeticError("field norm came out irrational")
        n = norm.coords[0]
        if n == 0:
            raise ZeroDivisionError("ExtScalar division by zero")
        return ExtScalar(tuple(c / n for c in cofactor.coords))

    def __truediv__(self, other):
        other = _coerce_ext(other)
        if other is None:
            return NotImplemented
        return self * other.inverse()

    def __rtruediv__(self, other):
        other = _coerce_ext(other)
        if other is None:
            return NotImplemented
        return other * self.inverse()

    def __eq__(self, other):
        if isinstance(other, ExtScalar):
            return self.coords == other.coords
        if isinstance(other, (int, Fraction)):
            return self.is_rational and self.coords[0] == other
        return NotImplemented

    def __bool__(self):
        return any(self.coords)

    def __hash__(self):
        if self.is_rational:
            return hash(self.coords[0])
        return hash(self.coords)

    def __float__(self):
        c0, c1, c2, c3 = self.coords
        return (
            float(c0)
            + float(c1) * math.sqrt(2)
            + float(c2) * math.sqrt(3)
            + float(c3) * math.sqrt(6)
        )

    def __repr__(self):
        return "ExtScalar(%s)" % (self.coords,)

    def __str__(self):
        pieces = []
        for c, label in zip(self.coords, _EXT_LABELS):
            if c == 0:
                continue
            if label:
                body = label if abs(c) == 1 else "%s*%s" % (abs(c), label)
            else:
                body = str(abs(c))
            sign = "-" if c < 0 else "+"
            pieces.append((sign, body))
        if not pieces:
            return "0"
        first_sign, first_body = pieces[0]
        out = ("-" if first_sign == "-" else "") + first_body
        for sign, body in pieces[1:]:
            out += " %s %s" % (sign, body)
        return out


SQRT2 = ExtScalar.parts(0, 1, 0, 0)
SQRT3 = ExtScalar.parts(0, 0, 1, 0)
SQRT6 = ExtScalar.parts(0, 0, 0, 1)

Scalar = Union[Fraction, ExtScalar]


def _coerce_ext(value) -> Optional[ExtScalar]:
    if isinstance(value, ExtScalar):
        return value
    if isinstance(value, (int, Fraction)):
        return ExtScalar.of(value)
    return None


def as_scalar(value) -> Scalar:
    """Coerce ints/Fractions/ExtScalars into a package scalar."""
    if isinstance(value, ExtScalar):
        return value
    if isinstance(value, Fraction):
        return value
    if isinstance(value, int):
        return Fraction(value)
    raise TypeError("not an exact scalar: %r" % (value,))


def scalar_is_zero(value) -> bool:
    return value == 0


def scalar_div(a, b):
    """Exact a / b for any mix of Fraction and ExtScalar."""
    a = as_scalar(a)
    b = as_scalar(b)
    if isinstance(a, Fraction) and isinstance(b, Fraction):
        return a / b
    return ExtScalar.of(a) / ExtScalar.of(b)


def scalar_to_float(value) -> float:
    return float(value)


def _rational_sqrt(q: Fraction) -> Optional[Fraction]:
    if q < 0:
        return None
    num, den = q.numerator, q.denominator
    rn, rd = math.isqrt(num), math.isqrt(den)
    if rn * rn == num and rd * rd == den:
        return Fraction(rn, rd)
    return None


def sqrt_exact(value) -> Scalar:
    """Exact square root of a nonnegative rational, in Q(sqrt2, sqrt3).

    Succeeds when the input is r^2 * m with r rational and m in
    {1, 2, 3, 6}; raises :class:`ExactSqrtError` otherwise.  Irrational
    ExtScalar inputs are rejected (callers fall back to floating point).
    """
    v = as_scalar(value)
    if isinstance(v, ExtScalar):
        if not v.is_rational:
            raise ExactSqrtError("no exact sqrt for irrational input %s" % v)
        v = v.rational_value()
    if v < 0:
        raise ExactSqrtError("negative input %s" % v)
    for m, unit in ((1, Fraction(1)), (2, SQRT2), (3, SQRT3), (6, SQRT6)):
        r = _rational_sqrt(v / m)
        if r is not None:
            return r if m == 1 else r * unit
    raise ExactSqrtError("sqrt of %s is outside Q(sqrt2, sqrt3)" % v)


# ---------------------------------------------------------------------------
# JSON codecs for scalars
# ---------------------------------------------------------------------------


def scalar_to_json(value):
    value = as_scalar(value)
    if isinstance(value, ExtScalar):
        if value.is_rational:
            return _fraction_str(value.coords[0])
        return [_fraction_str(c) for c in value.coords]
    return _fraction_str(value)


def scalar_from_json(data) -> Scalar:
    if isinstance(data, str):
        return Fraction(data)
    if isinstance(data, int):
        return Fraction(data)
    if isinstance(data, list) and len(data) == 4:
        return ExtScalar(tuple(Fraction(c) for c in data))
    raise ValueError("bad scalar encoding: %r" % (data,))


def _fraction_str(f: Fraction) -> str:
    return str(f)


# ---------------------------------------------------------------------------
# polynomials
# ---------------------------------------------------------------------------

_VAR_NAMES = {1: ("x",), 2: ("x", "y"), 3: ("x", "y", "z"), 4: ("x", "y", "z", "w")}


def var_names(nvars: int) -> tuple:
    if nvars in _VAR_NAMES:
        return _VAR_NAMES[nvars]
    return tuple("x%d" % (i + 1) for i in range(nvars))


def term_sort_key(exps: tuple):
    """Canonical term order: by total degree, then by exponent pattern.

    Within a fixed degree the first variable dominates, so the degree-3
    monomials on (x, y, z) enumerate as x^3, x^2y, x^2z, xy^2, xyz, xz^2,
    y^3, y^2z, yz^2, z^3.
    """
    return (-sum(exps), tuple(-e for e in exps))


class Polynomial:
    """Sparse exact polynomial in ``nvars`` variables.

    Terms map exponent tuples to nonzero scalars.  Instances are treated
    as immutable; all operations return fresh polynomials.
    """

    __slots__ = ("nvars", "terms")

    def __init__(self, nvars: int, terms: Optional[dict] = None):
        self.nvars = nvars
        clean = {}
        for exps, coef in (terms or {}).items():
            exps = tuple(int(e) for e in exps)
            if len(exps) != nvars or any(e < 0 for e in exps):
                raise ValueError("bad exponent tuple %r" % (exps,))
            coef = as_scalar(coef)
            if not scalar_is_zero(coef):
                clean[exps] = coef
        self.terms = clean

    # -- constructors -------------------------------------------------

    @classmethod
    def zero(cls, nvars: int) -> "Polynomial":
        return cls(nvars, {})

    @classmethod
    def constant(cls, nvars: int, value) -> "Polynomial":
        return cls(nvars, {(0,) * nvars: value})

    @classmethod
    def variable(cls, nvars: int, index: int) -> "Polynomial":
        exps = [0] * nvars
        exps[index] = 1
        return cls(nvars, {tuple(exps): 1})

    @classmethod
    def monomial(cls, nvars: int, exps: Sequence[int], coef=1) -> "Polynomial":
        return cls(nvars, {tuple(exps): coef})

    # -- queries ------------------------------------------------------

    def is_zero(self) -> bool:
        return not self.terms

    def coeff(self, exps: Sequence[int]):
        return self.terms.get(tuple(exps), Fraction(0))

    def degree(self) -> int:
        if not self.terms:
            return 0
        return max(sum(e) for e in self.terms)

    def is_homogeneous(self, d: int) -> bool:
        return all(sum(e) == d for e in self.terms)

    def sorted_terms(self):
        return sorted(self.terms.items(), key=lambda kv: term_sort_key(kv[0]))

    # -- arithmetic ---------------------------------------------------

    def _require_same_arity(self, other: "Polynomial"):
        if self.nvars != other.nvars:
            raise ValueError("arity mismatch: %d vs %d" % (self.nvars, other.nvars))

    def __add__(self, other):
        if not isinstance(other, Polynomial):
            return NotImplemented
        self._require_same_arity(other)
        terms = dict(self.terms)
        for exps, coef in other.terms.items():
            terms[exps] = terms.get(exps, Fraction(0)) + coef
        return Polynomial(self.nvars, terms)

    def __sub__(self, other):
        if not isinstance(other, Polynomial):
            return NotImplemented
        return self + (-other)

    def __neg__(self):
        return Polynomial(self.nvars, {e: -c for e, c in self.terms.items()})

    def __mul__(self, other):
        if isinstance(other, Polynomial):
            self._require_same_arity(other)
            terms: dict = {}
            for e1, c1 in self.terms.items():
                for e2, c2 in other.terms.items():
                    key = tuple(a + b for a, b in zip(e1, e2))
                    terms[key] = terms.get(key, Fraction(0)) + c1 * c2
            return Polynomial(self.nvars, terms)
        try:
            c = as_scalar(other)
        except TypeError:
            return NotImplemented
        return Polynomial(self.nvars, {e: v * c for e, v in self.terms.items()})

    def __rmul__(self, other):
        return self.__mul__(other)

    def __pow__(self, n: int):
        if n < 0:
            raise ValueError("negative power")
        out = Polynomial.constant(self.nvars, 1)
        for _ in range(n):
            out = out * self
        return out

    def __eq__(self, other):
        if not isinstance(other, Polynomial):
            return NotImplemented
        return self.nvars == other.nvars and self.terms == other.terms

    def __hash__(self):
        return hash((self.nvars, frozenset(self.terms.items())))

    # -- calculus -----------------------------------------------------

    def diff(self, index: int) -> "Polynomial":
        terms = {}
        for exps, coef in self.terms.items():
            e = exps[index]
            if e == 0:
                continue
            key = exps[:index] + (e - 1,) + exps[index + 1:]
            terms[key] = terms.get(key, Fraction(0)) + coef * e
        return Polynomial(self.nvars, terms)

    def directional_diff(self, vector: Sequence) -> "Polynomial":
        """Derivative along a constant vector: sum_i v_i d/dx_i."""
        out = Polynomial.zero(self.nvars)
        for i, v in enumerate(vector):
            v = as_scalar(v)
            if not scalar_is_zero(v):
                out = out + self.diff(i) * v
        return out

    def eval(self, point: Sequence):
        total = Fraction(0)
        for exps, coef in self.terms.items():
            value = coef
            for p, e in zip(point, exps):
                for _ in range(e):
                    value = value * p
            total = total + value
        return total

    def compose_linear(self, m: "Matrix") -> "Polynomial":
        """Pullback p(M x): substitute x_i -> sum_j M[i][j] x_j."""
        if m.n != self.nvars:
            raise ValueError("matrix size %d does not match arity %d" % (m.n, self.nvars))
        subs = [
            Polynomial(self.nvars, {
                tuple(1 if k == j else 0 for k in range(self.nvars)): m.rows[i][j]
                for j in range(self.nvars)
            })
            for i in range(self.nvars)
        ]
        # cache powers of the substituted linear forms
        powers = [{0: Polynomial.constant(self.nvars, 1)} for _ in range(self.nvars)]

        def power(i, e):
            cache = powers[i]
            while e not in cache:
                top = max(cache)
                cache[top + 1] = cache[top] * subs[i]
            return cache[e]

        out = Polynomial.zero(self.nvars)
        for exps, coef in self.terms.items():
            term = Polynomial.constant(self.nvars, coef)
            for i, e in enumerate(exps):
                if e:
                    term = term * power(i, e)
            out = out + term
        return out

    # -- presentation -------------------------------------------------

    def __str__(self):
        if not self.terms:
            return "0"
        names = var_names(self.nvars)
        pieces = []
        for exps, coef in self.sorted_terms():
            mono = "".join(
                n if e == 1 else "%s^%d" % (n, e)
                for n, e in zip(names, exps) if e
            )
            if isinstance(coef, ExtScalar) and not coef.is_rational:
                cs = "(%s)" % coef
                body = cs if not mono else "%s·%s" % (cs, mono)
                pieces.append(("+", body))
                continue
            c = coef.rational_value() if isinstance(coef, ExtScalar) else coef
            sign = "-" if c < 0 else "+"
            mag = abs(c)
            if not mono:
                body = str(mag)
            elif mag == 1:
                body = mono
            else:
                body = "%s·%s" % (mag, mono)
            pieces.append((sign, body))
        first_sign, first_body = pieces[0]
        out = ("-" if first_sign == "-" else "") + first_body
        for sign, body in pieces[1:]:
            out += " %s %s" % (sign, body)
        return out

    def __repr__(self):
        return "Polynomial(%d, %s)" % (self.nvars, dict(self.sorted_terms()))

    # -- JSON ---------------------------------------------------------

    def to_json(self) -> dict:
        return {
            "vars": list(var_names(self.nvars)),
            "terms": [
                {"exp": list(exps), "coef": scalar_to_json(coef)}
                for exps, coef in self.sorted_terms()
            ],
        }

    @classmethod
    def from_json(cls, data: dict) -> "Polynomial":
        nvars = len(data["vars"])
        terms = {}
        for item in data["terms"]:
            exps = tuple(int(e) for e in item["exp"])
            coef = scalar_from_json(item["coef"])
            terms[exps] = terms.get(exps, Fraction(0)) + coef
        return cls(nvars, terms)


def poly_pullback(p: Polynomial, m: "Matrix") -> Polynomial:
    """Compose a polynomial with a linear map: returns p(M x)."""
    return p.compose_linear(m)


def apply_matrix_derivation(m: "Matrix", p: Polynomial) -> Polynomial:
    """Derivative of p along the linear vector field x -> M x."""
    if m.n != p.nvars:
        raise ValueError("matrix size %d does not match arity %d" % (m.n, p.nvars))
    out = Polynomial.zero(p.nvars)
    for i in range(m.n):
        pi = p.diff(i)
        if not pi.terms:
            continue
        row = Polynomial(p.nvars, {
            tuple(1 if t == j else 0 for t in range(p.nvars)): m.rows[i][j]
            for j in range(p.nvars) if not scalar_is_zero(m.rows[i][j])
        })
        out = out + row * pi
    return out


def quadratic_form_poly(m: "Matrix") -> Polynomial:
    """The quadratic polynomial x^T M x = sum_ij M_ij x_i x_j."""
    n = m.n
    out = Polynomial.zero(n)
    for i in range(n):
        for j in range(n):
            if scalar_is_zero(m.rows[i][j]):
                continue
            exps = [0] * n
            exps[i] += 1
            exps[j] += 1
            out = out + Polynomial.monomial(n, exps, m.rows[i][j])
    return out


def gram_of_quadratic(p: Polynomial) -> "Matrix":
    """Symmetric Gram matrix A with p = (A x, x), for homogeneous quadratics."""
    if not p.is_homogeneous(2):
        raise ValueError("not a homogeneous quadratic: %s" % p)
    n = p.nvars
    rows = [[Fraction(0)] * n for _ in range(n)]
    for exps, coef in p.terms.items():
        support = [i for i, e in enumerate(exps) if e]
        if len(support) == 1:
            i = support[0]
            rows[i][i] = coef
        else:
            i, j = support
            half = scalar_div(coef, 2)
            rows[i][j] = half
            rows[j][i] = half
    return Matrix(rows)


# ---------------------------------------------------------------------------
# matrices and vectors
# ---------------------------------------------------------------------------


def vec(values: Iterable) -> tuple:
    return tuple(as_scalar(v) for v in values)


def vec_add(u: Sequence, v: Sequence) -> tuple:
    return tuple(a + b for a, b in zip(u, v))


def vec_sub(u: Sequence, v: Sequence) -> tuple:
    return tuple(a - b for a, b in zip(u, v))

def vec_scale(c, u: Sequence) -> tuple:
    c = as_scalar(c)
    return tuple(c * a for a in u)


def vec_is_zero(u: Sequence) -> bool:
    return all(scalar_is_zero(a) for a in u)


def dot(u: Sequence, v: Sequence):
    total = Fraction(0)
    for a, b in zip(u, v):
        total = total + a * b
    return total


def cross3(u: Sequence, v: Sequence) -> tuple:
    return (
        u[1] * v[2] - u[2] * v[1],
        u[2] * v[0] - u[0] * v[2],
        u[0] * v[1] - u[1] * v[0],
    )


class Matrix:
    """Square matrix with exact scalar entries."""

    __slots__ = ("rows", "n")

    def __init__(self, rows: Sequence[Sequence]):
        self.rows = tuple(tuple(as_scalar(v) for v in row) for row in rows)
        self.n = len(self.rows)
        if any(len(row) != self.n for row in self.rows):
            raise ValueError("matrix must be square")

    @classmethod
    def identity(cls, n: int) -> "Matrix":
        return cls([[1 if i == j else 0 for j in range(n)] for i in range(n)])

    @classmethod
    def zero(cls, n: int) -> "Matrix":
        return cls([[0] * n for _ in range(n)])

    @classmethod
    def diagonal(cls, values: Sequence) -> "Matrix":
        n = len(values)
        return cls([[values[i] if i == j else 0 for j in range(n)] for i in range(n)])

    def __eq__(self, other):
        if not isinstance(other, Matrix):
            return NotImplemented
        return self.n == other.n and all(
            self.rows[i][j] == other.rows[i][j]
            for i in range(self.n) for j in range(self.n)
        )

    def __hash__(self):
        return hash(self.rows)

    def __add__(self, other):
        if not isinstance(other, Matrix) or other.n != self.n:
            return NotImplemented
        return Matrix([
            [a + b for a, b in zip(r1, r2)]
            for r1, r2 in zip(self.rows, other.rows)
        ])

    def __sub__(self, other):
        if not isinstance(other, Matrix) or other.n != self.n:
            return NotImplemented
        return Matrix([
            [a - b for a, b in zip(r1, r2)]
            for r1, r2 in zip(self.rows, other.rows)
        ])

    def __neg__(self):
        return Matrix([[-a for a in row] for row in self.rows])

    def __mul__(self, other):
        if isinstance(other, Matrix):
            if other.n != self.n:
                raise ValueError("size mismatch")
            n = self.n
            return Matrix([
                [
                    sum((self.rows[i][k] * other.rows[k][j] for k in range(n)),
                        Fraction(0))
                    for j in range(n)
                ]
                for i in range(n)
            ])
        return NotImplemented

    def scaled(self, c) -> "Matrix":
        c = as_scalar(c)
        return Matrix([[c * a for a in row] for row in self.rows])

    def apply(self, v: Sequence) -> tuple:
        if len(v) != self.n:
            raise ValueError("size mismatch")
        return tuple(dot(row, v) for row in self.rows)

    def transpose(self) -> "Matrix":
        return Matrix(list(zip(*self.rows)))

    def column(self, j: int) -> tuple:
        return tuple(row[j] for row in self.rows)

    def trace(self):
        total = Fraction(0)
        for i in range(self.n):
            total = total + self.rows[i][i]
        return total

    def det(self):
        if self.n == 1:
            return self.rows[0][0]
        if self.n == 2:
            (a, b), (c, d) = self.rows
            return a * d - b * c
        if self.n == 3:
            (a, b, c), (d, e, f), (g, h, i) = self.rows
            return a * (e * i - f * h) - b * (d * i - f * g) + c * (d * h - e * g)
        # Laplace expansion along the first row (matrices here are tiny)
        total = Fraction(0)
        for j in range(self.n):
            if scalar_is_zero(self.rows[0][j]):
                continue
            minor = Matrix([
                [row[k] for k in range(self.n) if k != j]
                for row in self.rows[1:]
            ])
            term = self.rows[0][j] * minor.det()
            total = total + (term if j % 2 == 0 else -term)
        return total

    def inverse(self) -> "Matrix":
        n = self.n
        work = [list(row) + [Fraction(1) if i == j else Fraction(0) for j in range(n)]
                for i, row in enumerate(self.rows)]
        for col in range(n):
            pivot = next(
                (r for r in range(col, n) if not scalar_is_zero(work[r][col])), None
            )
            if pivot is None:
                raise ZeroDivisionError("singular matrix")
            work[col], work[pivot] = work[pivot], work[col]
            pv = work[col][col]
            work[col] = [scalar_div(v, pv) for v in work[col]]
            for r in range(n):
                if r == col:
                    continue
                factor = work[r][col]
                if scalar_is_zero(factor):
                    continue
                work[r] = [a - factor * b for a, b in zip(work[r], work[col])]
        return Matrix([row[n:] for row in work])

    def is_symmetric(self) -> bool:
        return all(
            self.rows[i][j] == self.rows[j][i]
            for i in range(self.n) for j in range(i + 1, self.n)
        )

    def is_skew(self) -> bool:
        return all(
            self.rows[i][j] == -as_scalar(self.rows[j][i])
            for i in range(self.n) for j in range(i, self.n)
        )

    def is_zero(self) -> bool:
        return all(scalar_is_zero(v) for row in self.rows for v in row)

    def is_diagonal(self) -> bool:
        return all(
            scalar_is_zero(self.rows[i][j])
            for i in range(self.n) for j in range(self.n) if i != j
        )

    def __repr__(self):
        return "Matrix(%s)" % (list(list(r) for r in self.rows),)

    def to_json(self):
        return [[scalar_to_json(v) for v in row] for row in self.rows]

    @classmethod
    def from_json(cls, data) -> "Matrix":
        return cls([[scalar_from_json(v) for v in row] for row in data])


def vector_to_json(v: Sequence):
    return [scalar_to_json(x) for x in v]


def vector_from_json(data) -> tuple:
    return tuple(scalar_from_json(x) for x in data)


# ---------------------------------------------------------------------------
# linear systems
# ---------------------------------------------------------------------------


@dataclass
class SolutionSpace:
    """Affine solution set of a linear system.

    ``particular`` is None exactly when the system is inconsistent; the
    zero-dimensional space {v} has a particular point and empty basis.
    The solver canonicalizes: the particular solution has zeros in all
    free coordinates, and each basis vector has a single free coordinate
    set to one.
    """

    ambient_dim: int
    particular: Optional[tuple]
    basis: tuple

    @property
    def is_empty(self) -> bool:
        return self.particular is None

    @property
    def dim(self) -> int:
        if self.is_empty:
            raise ValueError("empty solution space has no dimension")
        return len(self.basis)

    def is_zero_space(self) -> bool:
        return (not self.is_empty) and not self.basis and vec_is_zero(self.particular)

    def direction_in_span(self, v: Sequence) -> bool:
        if self.is_empty:
            return False
        if not self.basis:
            return vec_is_zero(v)
        rows = [[b[i] for b in self.basis] for i in range(self.ambient_dim)]
        return not solve_linear(rows, list(v)).is_empty

    def contains(self, v: Sequence) -> bool:
        if self.is_empty:
            return False
        return self.direction_in_span(vec_sub(tuple(v), self.particular))

    def same_space(self, other: "SolutionSpace") -> bool:
        """Exact equality of the two affine sets."""
        if self.is_empty or other.is_empty:
            return self.is_empty and other.is_empty
        if self.ambient_dim != other.ambient_dim or self.dim != other.dim:
            return False
        if not self.contains(other.particular):
            return False
        return all(self.direction_in_span(b) for b in other.basis)

    def to_json(self):
        if self.is_empty:
            return {"empty": True}
        return {
            "empty": False,
            "particular": vector_to_json(self.particular),
            "basis": [vector_to_json(b) for b in self.basis],
        }


def solve_linear(rows: Sequence[Sequence], rhs: Sequence,
                 ncols: Optional[int] = None) -> SolutionSpace:
    """Solve M x = b exactly, returning the full affine solution set.

    Forward elimination is fraction-free in the Bareiss style (two-term
    update divided by the previous pivot, which is an exact division),
    followed by back substitution.  Works over rationals and over the
    extension field alike.
    """
    m = len(rows)
    if ncols is None:
        if m == 0:
            raise ValueError("cannot infer column count from an empty system")
        ncols = len(rows[0])
    aug = []
    for i in range(m):
        row = [as_scalar(v) for v in rows[i]]
        if len(row) != ncols:
            raise ValueError("ragged system")
        row.append(as_scalar(rhs[i]))
        aug.append(row)

    pivots = []  # (row, col)
    prev = Fraction(1)
    r = 0
    for c in range(ncols):
        pr = next((i for i in range(r, m) if not scalar_is_zero(aug[i][c])), None)
        if pr is None:
            continue
        aug[r], aug[pr] = aug[pr], aug[r]
        pivot = aug[r][c]
        for i in range(r + 1, m):
            factor = aug[i][c]
            for j in range(c, ncols + 1):
                aug[i][j] = scalar_div(pivot * aug[i][j] - factor * aug[r][j], prev)
        prev = pivot
        pivots.append((r, c))
        r += 1

    for i in range(r, m):
        if not scalar_is_zero(aug[i][ncols]):
            return SolutionSpace(ncols, None, ())

    pivot_cols = [c for (_, c) in pivots]
    free_cols = [c for c in range(ncols) if c not in pivot_cols]

    def back_substitute(free_values: dict, homogeneous: bool) -> tuple:
        x = [Fraction(0)] * ncols
        for c, v in free_values.items():
            x[c] = as_scalar(v)
        for (pr_i, pc) in reversed(pivots):
            acc = Fraction(0) if homogeneous else aug[pr_i][ncols]
            for j in range(pc + 1, ncols):
                if not scalar_is_zero(aug[pr_i][j]) and not scalar_is_zero(x[j]):
                    acc = acc - aug[pr_i][j] * x[j]
            x[pc] = scalar_div(acc, aug[pr_i][pc])
        return tuple(x)

    particular = back_substitute({}, homogeneous=False)
    basis = tuple(
        back_substitute({fc: 1}, homogeneous=True) for fc in free_cols
    )
    return SolutionSpace(ncols, particular, basis)


def congruent_diagonalize(a: Matrix, rng=None):
    """Lagrange congruence: returns (R, d) with R^T A R = diag(d) exactly.

    A must be symmetric.  With ``rng`` given, admissible pivots are chosen
    at random (used to check that signature counts are order-independent);
    otherwise pivot selection is deterministic by index.
    """
    if not a.is_symmetric():
        raise ValueError("matrix is not symmetric")
    n = a.n
    b = [list(row) for row in a.rows]
    r = [[Fraction(1) if i == j else Fraction(0) for j in range(n)] for i in range(n)]

    def add_col(dst, src, factor):
        # column operation plus the mirrored row operation keeps symmetry
        for i in range(n):
            b[i][dst] = b[i][dst] + factor * b[i][src]
        for j in range(n):
            b[dst][j] = b[dst][j] + factor * b[src][j]
        for i in range(n):
            r[i][dst] = r[i][dst] + factor * r[i][src]

    def swap_cols(i, j):
        for row in b:
            row[i], row[j] = row[j], row[i]
        b[i], b[j] = b[j], b[i]
        for row in r:
            row[i], row[j] = row[j], row[i]

    for k in range(n):
        candidates = [i for i in range(k, n) if not scalar_is_zero(b[i][i])]
        if not candidates:
            off = [
                (i, j)
                for i in range(k, n) for j in range(i + 1, n)
                if not scalar_is_zero(b[i][j])
            ]
            if not off:
                break  # the rest of the form is zero
            if rng is not None:
                i, j = off[rng.randrange(len(off))]
            else:
                i, j = off[0]
            add_col(i, j, Fraction(1))
            candidates = [i]
        if rng is not None:
            p = candidates[rng.randrange(len(candidates))]
        else:
            p = candidates[0]
        if p != k:
            swap_cols(k, p)
        pivot = b[k][k]
        for j in range(k + 1, n):
            if not scalar_is_zero(b[k][j]):
                add_col(j, k, scalar_div(-b[k][j], pivot))

    return Matrix(r), tuple(b[i][i] for i in range(n))
