"""Quadratic deformations of the linear structures on R^3.

A quadratic bivector is encoded, like the linear ones, by a pair: a
traceless ``twist`` matrix (its modular part is the linear field x -> Kx)
plus a homogeneous ``cubic`` potential annihilated by that field,

    pi = pi_cubic + (1/3) * euler ^ twist_field.

Whether such a bivector is a deformation of a given linear structure --
their bracket vanishes -- is decided twice, by independent routes: once
with the Schouten bracket, once through an equivalent identity between
two quadratic polynomials.  The solver inverts that identity exactly,
giving the affine set of admissible cubics for a twist matrix.

The second half of the module hosts the orbit machinery: projective
points, their strata under the symmetry group of a normal-form twist
matrix, and the special-orthogonal maps that carry each stratum
representative to the vertical axis.
"""

import itertools
import math
from dataclasses import dataclass
from fractions import Fraction
from typing import NamedTuple, Optional, Sequence

from .exactnum import (
    ExactSqrtError,
    ExtScalar,
    Matrix,
    Polynomial,
    SolutionSpace,
    apply_matrix_derivation,
    as_scalar,
    cross3,
    poly_pullback,
    quadratic_form_poly,
    scalar_div,
    scalar_is_zero,
    scalar_to_float,
    scalar_to_json,
    scalar_from_json,
    solve_linear,
    sqrt_exact,
    term_sort_key,
    vec,
    vec_add,
)
from .multivec import (
    MultiVectorField,
    bivector_from_potential,
    euler_vf,
    linear_vf,
    schouten,
    wedge,
)
from .linclass import LinearPair, bivector_of, standard_pair


def _graded_monomials(degree: int) -> tuple:
    exps = [e for e in itertools.product(range(degree + 1), repeat=3)
            if sum(e) == degree]
    return tuple(sorted(exps, key=term_sort_key))


#: coefficient slots for cubics/quadratics, in the canonical term order
CUBIC_MONOMIALS = _graded_monomials(3)
QUAD_MONOMIALS = _graded_monomials(2)


def cubic_coords(p: Polynomial) -> tuple:
    """Coefficient 10-vector of a homogeneous cubic on R^3."""
    if p.nvars != 3 or not p.is_homogeneous(3):
        raise ValueError("not a homogeneous cubic on three variables: %s" % p)
    return tuple(p.coeff(m) for m in CUBIC_MONOMIALS)


def cubic_from_coords(coords: Sequence) -> Polynomial:
    if len(coords) != len(CUBIC_MONOMIALS):
        raise ValueError("expected %d cubic coefficients" % len(CUBIC_MONOMIALS))
    return Polynomial(3, dict(zip(CUBIC_MONOMIALS, coords)))


def _quad_coords(p: Polynomial) -> tuple:
    if p.nvars != 3 or not p.is_homogeneous(2):
        raise ValueError("not a homogeneous quadratic on three variables: %s" % p)
    return tuple(p.coeff(m) for m in QUAD_MONOMIALS)


def ktilde(k: Sequence) -> Matrix:
    """Cross-product matrix of a vector: ktilde(k) v = k x v."""
    a, b, c = vec(k)
    return Matrix([[0, -c, b], [c, 0, -a], [-b, a, 0]])


# ---------------------------------------------------------------------------
# compatible pairs and the deformation criterion
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class QuadraticPair:
    """Traceless twist matrix plus the cubic potential it annihilates."""

    twist: Matrix
    cubic: Polynomial

    def __post_init__(self):
        if self.twist.n != 3:
            raise ValueError("twist matrix must be 3x3")
        if not scalar_is_zero(self.twist.trace()):
            raise ValueError("twist matrix must be traceless")
        if self.cubic.nvars != 3 or not self.cubic.is_homogeneous(3):
            raise ValueError("potential must be a homogeneous cubic on R^3")
        residual = apply_matrix_derivation(self.twist, self.cubic)
        if not residual.is_zero():
            raise ValueError(
                "cubic is not invariant under the twist flow "
                "(derivation residual %s)" % residual
            )

    def to_json(self) -> dict:
        return {"K": self.twist.to_json(), "F": self.cubic.to_json()}

    @classmethod
    def from_json(cls, data: dict) -> "QuadraticPair":
        return cls(Matrix.from_json(data["K"]), Polynomial.from_json(data["F"]))


def pi_quad(qp: QuadraticPair) -> MultiVectorField:
    """The quadratic bivector of a pair: potential part plus scaled twist."""
    twist = wedge(euler_vf(3), linear_vf(qp.twist)).scale(Fraction(1, 3))
    return bivector_from_potential(qp.cubic) + twist


def deform_rhs(lp: LinearPair, k_matrix: Matrix) -> Polynomial:
    """Quadratic source term of the deformation identity.

    The constant-direction derivative of an admissible cubic must equal
    -(1/6) x^T (12 A + ktilde(k)) K x for the linear pair (k, A).
    """
    m = (lp.gram.scaled(12) + ktilde(lp.k)) * k_matrix
    return quadratic_form_poly(m) * Fraction(-1, 6)


def deform_check(lp: LinearPair, qp: QuadraticPair) -> bool:
    """Does the quadratic pair deform the linear one?  Decided twice.

    Route one brackets the two bivectors and tests exact vanishing;
    route two tests the equivalent polynomial identity.  The routes must
    agree on every valid input -- a mismatch raises instead of guessing.
    """
    bracket = schouten(bivector_of(lp), pi_quad(qp))
    route_bracket = bracket.is_zero()
    lhs = qp.cubic.directional_diff(lp.k)
    route_identity = lhs == deform_rhs(lp, qp.twist)
    if route_bracket != route_identity:
        raise AssertionError(
            "deformation criterion routes disagree (bracket: %s, identity: %s)"
            % (route_bracket, route_identity)
        )
    return route_bracket


def cubic_kernel(k_matrix: Matrix) -> SolutionSpace:
    """All cubics annihilated by the derivation of a traceless matrix."""
    if not scalar_is_zero(k_matrix.trace()):
        raise ValueError("twist matrix must be traceless")
    images = [
        cubic_coords(apply_matrix_derivation(k_matrix, Polynomial.monomial(3, m)))
        for m in CUBIC_MONOMIALS
    ]
    rows = [[images[j][i] for j in range(10)] for i in range(10)]
    return solve_linear(rows, [0] * 10, 10)


def solve_F(lp: LinearPair, k_matrix: Matrix) -> SolutionSpace:
    """Exact affine set of cubics making (K, F) a deformation of lp.

    Stacks the ten kernel equations on top of the six coefficient
    equations of the quadratic identity and solves over the coefficient
    field.  Every member of the result is re-checked through the bracket
    route before being returned.
    """
    if not scalar_is_zero(k_matrix.trace()):
        raise ValueError("twist matrix must be traceless")
    images = [
        apply_matrix_derivation(k_matrix, Polynomial.monomial(3, m))
        for m in CUBIC_MONOMIALS
    ]
    kernel_cols = [cubic_coords(p) for p in images]
    rows = [[kernel_cols[j][i] for j in range(10)] for i in range(10)]
    rhs = [Fraction(0)] * 10

    source = _quad_coords(deform_rhs(lp, k_matrix))
    drift_cols = [
        _quad_coords(Polynomial.monomial(3, m).directional_diff(lp.k))
        for m in CUBIC_MONOMIALS
    ]
    for i in range(len(QUAD_MONOMIALS)):
        rows.append([drift_cols[j][i] for j in range(10)])
        rhs.append(source[i])

    space = solve_linear(rows, rhs, 10)
    if not space.is_empty:
        members = [space.particular]
        members.extend(vec_add(space.particular, b) for b in space.basis)
        for coords in members:
            ok = deform_check(lp, QuadraticPair(k_matrix, cubic_from_coords(coords)))
            assert ok, "solver produced a cubic the bracket route rejects"
    return space


def transform_pair(t: Matrix, qp: QuadraticPair) -> QuadraticPair:
    """Push a pair along an invertible map: (TKT^-1, det(T) F o T^-1)."""
    if scalar_is_zero(t.det()):
        raise ValueError("transform must be invertible")
    tinv = t.inverse()
    twist = t * qp.twist * tinv
    cubic = poly_pullback(qp.cubic, tinv) * t.det()
    return QuadraticPair(twist, cubic)


def solution_polys(space: SolutionSpace):
    """Render a cubic-coefficient solution space as polynomials."""
    if space.is_empty:
        return None, ()
    particular = cubic_from_coords(space.particular)
    return particular, tuple(cubic_from_coords(b) for b in space.basis)


def span_of_cubics(polys: Sequence[Polynomial]) -> SolutionSpace:
    """Homogeneous span of given cubics, as a coefficient-vector space."""
    zero = tuple(Fraction(0) for _ in CUBIC_MONOMIALS)
    return SolutionSpace(10, zero, tuple(cubic_coords(p) for p in polys))


# ---------------------------------------------------------------------------
# normal-form families of twist matrices
# ---------------------------------------------------------------------------

DIAG_DISTINCT = "DIAG_DISTINCT"
DIAG_REPEATED = "DIAG_REPEATED"
NILPOTENT_FULL = "NILPOTENT_FULL"
OTHER = "OTHER"


@dataclass(frozen=True)
class JordanFamily:
    """Normal form of a traceless matrix, as far as the orbit machinery cares.

    ``DIAG_DISTINCT`` carries three pairwise-distinct nonzero rational
    eigenvalues summing to zero; ``DIAG_REPEATED`` carries the single
    parameter of diag(l, l, -2l); ``NILPOTENT_FULL`` is the full
    3x3 nilpotent shift; everything else is ``OTHER`` (with a floating
    eigenvalue report when the characteristic polynomial does not split
    over the rationals).
    """

    tag: str
    lambdas: tuple = ()
    eigen_report: tuple = ()

    def __post_init__(self):
        object.__setattr__(self, "lambdas",
                           tuple(Fraction(v) for v in self.lambdas))
        if self.tag == DIAG_DISTINCT:
            l1, l2, l3 = self.lambdas
            if l1 + l2 + l3 != 0:
                raise ValueError("eigenvalues must sum to zero")
            if len({l1, l2, l3}) != 3 or 0 in (l1, l2, l3):
                raise ValueError("eigenvalues must be pairwise distinct and nonzero")
        elif self.tag == DIAG_REPEATED:
            (lam,) = self.lambdas
            if lam == 0:
                raise ValueError("repeated eigenvalue must be nonzero")
        elif self.tag == NILPOTENT_FULL:
            if self.lambdas:
                raise ValueError("nilpotent family takes no parameters")
        elif self.tag != OTHER:
            raise ValueError("unknown family tag %r" % self.tag)

    @classmethod
    def diag_distinct(cls, l1, l2, l3) -> "JordanFamily":
        return cls(DIAG_DISTINCT, (l1, l2, l3))

    @classmethod
    def diag_repeated(cls, lam) -> "JordanFamily":
        return cls(DIAG_REPEATED, (lam,))

    @classmethod
    def nilpotent_full(cls) -> "JordanFamily":
        return cls(NILPOTENT_FULL)

    def matrix(self) -> Matrix:
        if self.tag == DIAG_DISTINCT:
            return Matrix.diagonal(self.lambdas)
        if self.tag == DIAG_REPEATED:
            lam = self.lambdas[0]
            return Matrix.diagonal([lam, lam, -2 * lam])
        if self.tag == NILPOTENT_FULL:
            return Matrix([[0, 1, 0], [0, 0, 1], [0, 0, 0]])
        raise ValueError("no normal-form matrix for tag %r" % self.tag)


def _rational_roots_monic_cubic(c2: Fraction, c0: Fraction):
    """Roots of t^3 + c2 t + c0 over Q, or None if it does not split."""
    # one rational root by the rational-root theorem, then the quadratic
    den = (c2.denominator * c0.denominator)
    a3 = den
    a1 = int(c2 * den)
    a0 = int(c0 * den)
    root = None
    if a0 == 0:
        root = Fraction(0)
    else:
        def divisors(n):
            n = abs(n)
            out = set()
            d = 1
            while d * d <= n:
                if n % d == 0:
                    out.add(d)
                    out.add(n // d)
                d += 1
            return out

        for p in divisors(a0):
            for q in divisors(a3):
                for cand in (Fraction(p, q), Fraction(-p, q)):
                    if cand ** 3 + c2 * cand + c0 == 0:
                        root = cand
                        break
                if root is not None:
                    break
            if root is not None:
                break
    if root is None:
        return None
    # deflate: t^3 + c2 t + c0 = (t - r)(t^2 + r t + (r^2 + c2))
    b, c = root, root * root + c2
    disc = b * b - 4 * c
    if disc < 0:
        return None
    num, dden = disc.numerator, disc.denominator
    rn, rd = math.isqrt(num), math.isqrt(dden)
    if rn * rn != num or rd * rd != dden:
        return None
    sq = Fraction(rn, rd)
    return (root, (-b + sq) / 2, (-b - sq) / 2)


def jordan_family_of(k_matrix: Matrix) -> JordanFamily:
    """Classify a traceless matrix into the families the orbits know about.

    The exact route needs a rational matrix whose characteristic
    polynomial splits over Q; anything else lands in OTHER carrying a
    floating-point eigenvalue report.
    """
    if not scalar_is_zero(k_matrix.trace()):
        raise ValueError("matrix must be traceless")
    entries = [v for row in k_matrix.rows for v in row]
    for v in entries:
        if isinstance(v, ExtScalar) and not v.is_rational:
            return JordanFamily(OTHER, (), _float_eigen_report(k_matrix))
    rows = k_matrix.rows
    c2 = Fraction(0)
    for i in range(3):
        for j in range(i + 1, 3):
            c2 += rows[i][i] * rows[j][j] - rows[i][j] * rows[j][i]
    c2 = Fraction(c2) if not isinstance(c2, ExtScalar) else c2.rational_value()
    det = k_matrix.det()
    det = Fraction(det) if not isinstance(det, ExtScalar) else det.rational_value()
    roots = _rational_roots_monic_cubic(c2, -det)
    if roots is None:
        return JordanFamily(OTHER, (), _float_eigen_report(k_matrix))

    distinct = sorted(set(roots), reverse=True)
    if len(distinct) == 3 and 0 not in distinct:
        if k_matrix.is_diagonal():
            ordered = tuple(rows[i][i] for i in range(3))
        else:
            ordered = tuple(distinct)
        return JordanFamily.diag_distinct(*ordered)
    if len(distinct) == 2:
        lam = next(r for r in distinct if roots.count(r) == 2)
        if lam != 0:
            eye = Matrix.identity(3)
            diagonalizable = ((k_matrix - eye.scaled(lam))
                              * (k_matrix + eye.scaled(2 * lam))).is_zero()
            if diagonalizable:
                return JordanFamily.diag_repeated(lam)
        return JordanFamily(OTHER, (), _float_eigen_report(k_matrix))
    if distinct == [Fraction(0)]:
        if not (k_matrix * k_matrix).is_zero() and not k_matrix.is_zero():
            return JordanFamily(NILPOTENT_FULL)
        return JordanFamily(OTHER, (), _float_eigen_report(k_matrix))
    # three rational eigenvalues with a zero among them
    return JordanFamily(OTHER, (), _float_eigen_report(k_matrix))


def _float_eigen_report(k_matrix: Matrix) -> tuple:
    import numpy

    arr = numpy.array(
        [[scalar_to_float(v) for v in row] for row in k_matrix.rows],
        dtype=float,
    )
    eigs = sorted(numpy.linalg.eigvals(arr),
                  key=lambda z: (round(z.real, 9), round(z.imag, 9)))
    return tuple((float(z.real), float(z.imag)) for z in eigs)


# ---------------------------------------------------------------------------
# projective points and their strata
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class P2Point:
    """A projective point on R^3, canonicalized by its last nonzero slot."""

    coords: tuple

    def __post_init__(self):
        coords = tuple(as_scalar(v) for v in self.coords)
        if len(coords) != 3:
            raise ValueError("projective points live on three coordinates")
        last = next((i for i in (2, 1, 0) if not scalar_is_zero(coords[i])), None)
        if last is None:
            raise ValueError("projective point needs a nonzero coordinate")
        pivot = coords[last]
        object.__setattr__(
            self, "coords", tuple(scalar_div(v, pivot) for v in coords)
        )

    @property
    def support(self) -> tuple:
        return tuple(i for i, v in enumerate(self.coords) if not scalar_is_zero(v))

    def unit_vector(self) -> tuple:
        """Exact unit realization with nonnegative vertical component.

        Raises :class:`ExactSqrtError` when the normalization leaves the
        supported extension field.
        """
        norm_sq = sum((v * v for v in self.coords), Fraction(0))
        norm = sqrt_exact(norm_sq)
        return tuple(scalar_div(v, norm) for v in self.coords)

    def to_json(self):
        return [scalar_to_json(v) for v in self.coords]

    @classmethod
    def from_json(cls, data) -> "P2Point":
        return cls(tuple(scalar_from_json(v) for v in data))


class OrbitRep(NamedTuple):
    """Stratum representative: index, point, unit realization, rotation."""

    orbit_index: int
    point: P2Point
    unit: tuple
    rotation: Matrix

    def to_json(self):
        return {
            "orbit": self.orbit_index,
            "rep": [scalar_to_json(v) for v in self.unit],
            "T": self.rotation.to_json(),
        }


def t_of_v(v, tolerance: float = 1e-12):
    """Special-orthogonal map with last row v, sending e3-data onto v-data.

    Exact inputs (a :class:`P2Point` or a unit vector over the rationals
    or the supported extension field) produce an exact :class:`Matrix`
    with T^T T = I and det T = 1, asserted.  Anything else -- float
    coordinates, or an exact point whose normalization needs a square
    root outside the field -- takes the floating route, which returns a
    ``numpy.ndarray`` after checking the orthogonality residual against
    ``tolerance``.
    """
    if isinstance(v, P2Point):
        try:
            coords = v.unit_vector()
        except ExactSqrtError:
            return _t_of_v_float([scalar_to_float(c) for c in v.coords], tolerance)
    else:
        try:
            coords = vec(v)
        except TypeError:
            return _t_of_v_float([float(c) for c in v], tolerance)
        norm_sq = sum((c * c for c in coords), Fraction(0))
        if norm_sq != 1:
            raise ValueError("exact input must be a unit vector")
    if len(coords) != 3:
        raise ValueError("expected three coordinates")
    vert = coords[2]
    if scalar_to_float(vert) < 0:
        raise ValueError("unit vector must have nonnegative vertical component")
    if vert == 1:
        return Matrix.identity(3)
    try:
        sine = sqrt_exact(1 - vert * vert)
    except ExactSqrtError:
        return _t_of_v_float([scalar_to_float(c) for c in coords], tolerance)
    w = tuple(
        scalar_div((1 if i == 2 else 0) - vert * coords[i], sine)
        for i in range(3)
    )
    t = Matrix([w, cross3(coords, w), coords])
    assert t.transpose() * t == Matrix.identity(3)
    assert t.det() == 1
    return t


def _t_of_v_float(raw, tolerance: float):
    import numpy

    arr = numpy.asarray(raw, dtype=float)
    norm = float(numpy.linalg.norm(arr))
    if norm == 0.0:
        raise ValueError("zero vector has no direction")
    u = arr / norm
    if u[2] < 0:
        u = -u
    if abs(u[2] - 1.0) < tolerance:
        return numpy.eye(3)
    denom = float(numpy.sqrt(1.0 - u[2] * u[2]))
    w = (numpy.array([0.0, 0.0, 1.0]) - u[2] * u) / denom
    t = numpy.vstack([w, numpy.cross(u, w), u])
    residual = float(numpy.max(numpy.abs(t @ t.T - numpy.eye(3))))
    if residual > tolerance:
        raise ValueError("orthogonality residual %g exceeds tolerance" % residual)
    return t


#: canonical stratum representatives, keyed by family tag
_STRATA_REPS = {
    DIAG_DISTINCT: {
        (2,): (1, (0, 0, 1)),
        (1,): (2, (0, 1, 0)),
        (0,): (3, (1, 0, 0)),
        (0, 1): (4, (1, 1, 0)),
        (1, 2): (5, (0, 1, 1)),
        (0, 2): (6, (1, 0, 1)),
        (0, 1, 2): (7, (1, 1, 1)),
    },
}

_REP_POINTS = {
    DIAG_DISTINCT: {i: p for (i, p) in _STRATA_REPS[DIAG_DISTINCT].values()},
    DIAG_REPEATED: {1: (0, 0, 1), 2: (0, 1, 0), 3: (0, 1, 1)},
    NILPOTENT_FULL: {1: (0, 0, 1), 2: (0, 1, 0), 3: (1, 0, 0)},
}


def orbit_count(family: JordanFamily) -> int:
    return len(_REP_POINTS[family.tag])


def p2_orbit_rep(family: JordanFamily, v) -> OrbitRep:
    """Canonical representative of the stratum of v under the family's group.

    The three families have solvable stratifications: diagonal matrices
    with distinct eigenvalues preserve exactly the support pattern of
    the coordinates; the repeated-eigenvalue block acts transitively on
    its invariant plane; the nilpotent shift filters by the first
    nonzero coordinate.
    """
    point = v if isinstance(v, P2Point) else P2Point(tuple(v))
    if family.tag == DIAG_DISTINCT:
        index, rep = _STRATA_REPS[DIAG_DISTINCT][point.support]
    elif family.tag == DIAG_REPEATED:
        a, b, _ = point.coords
        if scalar_is_zero(a) and scalar_is_zero(b):
            index = 1
        elif 2 not in point.support:
            index = 2
        else:
            index = 3
        rep = _REP_POINTS[DIAG_REPEATED][index]
    elif family.tag == NILPOTENT_FULL:
        a, b, _ = point.coords
        if not scalar_is_zero(a):
            index = 3
        elif not scalar_is_zero(b):
            index = 2
        else:
            index = 1
        rep = _REP_POINTS[NILPOTENT_FULL][index]
    else:
        raise ValueError("no orbit machinery for family %r" % family.tag)
    rep_point = P2Point(rep)
    unit = rep_point.unit_vector()
    return OrbitRep(index, rep_point, unit, t_of_v(unit))


class OrbitFamily(NamedTuple):
    """One stratum's transported normal-form data."""

    rep: OrbitRep
    twist: Matrix
    cubics: tuple  # transported basis of admissible cubics

    def to_json(self):
        data = self.rep.to_json()
        data["K"] = self.twist.to_json()
        data["cubics"] = [str(c) for c in self.cubics]
        return data


def enumerate_orbit_pairs(family: JordanFamily) -> tuple:
    """Transported (twist, admissible-cubics) data for every stratum."""
    k_matrix = family.matrix()
    kernel = cubic_kernel(k_matrix)
    basis_polys = [cubic_from_coords(b) for b in kernel.basis]
    out = []
    for index in sorted(_REP_POINTS[family.tag]):
        rep = p2_orbit_rep(family, _REP_POINTS[family.tag][index])
        t = rep.rotation
        tinv = t.inverse()
        det = t.det()
        twist = t * k_matrix * tinv
        cubics = tuple(poly_pullback(b, tinv) * det for b in basis_polys)
        out.append(OrbitFamily(rep, twist, cubics))
    return tuple(out)


def coset_rep_g10(cos_sin, s) -> Matrix:
    """Planar rotation times diag(1, s, 1): the extra freedom case (10) has
    inside the vertical-axis-fixing group."""
    c, sn = (as_scalar(v) for v in cos_sin)
    if c * c + sn * sn != 1:
        raise ValueError("not a point on the rational circle")
    s = as_scalar(s)
    if scalar_is_zero(s):
        raise ValueError("scale must be nonzero")
    rotation = Matrix([[c, sn, 0], [-sn, c, 0], [0, 0, 1]])
    return rotation * Matrix.diagonal([1, s, 1])


class CatalogEntry(NamedTuple):
    """Solved deformation data on one stratum."""

    orbit_index: Optional[int]
    rep: Optional[OrbitRep]
    twist: Matrix
    solution: SolutionSpace

    def to_json(self):
        particular, basis = solution_polys(self.solution)
        data = {
            "orbit": self.orbit_index,
            "rep": None if self.rep is None
                   else [scalar_to_json(v) for v in self.rep.unit],
            "K": self.twist.to_json(),
            "solution": {
                "particular": None if particular is None else particular.to_json(),
                "basis": [b.to_json() for b in basis],
            },
        }
        return data


def catalog(case_id: int, family_or_matrix) -> tuple:
    """Deformation catalog of a standard linear structure.

    Drives the solver either over every stratum of a normal-form family
    or over a single explicit twist matrix, returning one entry per
    stratum in a deterministic order.
    """
    lp = standard_pair(case_id)
    if isinstance(family_or_matrix, Matrix):
        space = solve_F(lp, family_or_matrix)
        return (CatalogEntry(None, None, family_or_matrix, space),)
    entries = []
    for orbit in enumerate_orbit_pairs(family_or_matrix):
        space = solve_F(lp, orbit.twist)
        entries.append(CatalogEntry(orbit.rep.orbit_index, orbit.rep,
                                    orbit.twist, space))
    return tuple(entries)
