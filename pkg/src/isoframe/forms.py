"""Homogeneous polynomials over the real coordinates of K^m, with exact
integration against the uniform probability measure on the unit sphere.

A form is a sparse map from exponent vectors (tuples of length N, entries
summing to the degree) to nonzero rational coefficients.  The real
coordinates of a vector x in K^m are taken entry-major: the first d
coordinates are the components of xi_1, the next d those of xi_2, and so on.

Canonical term order is graded lexicographic: lower degree first, then
descending lexicographic on the exponent vector (so x1^p comes before
x1^{p-1}x2 within a degree).
"""

from __future__ import annotations

import threading
from dataclasses import dataclass, field as dc_field
from fractions import Fraction
from itertools import combinations_with_replacement
from typing import Dict, Iterable, Sequence, Tuple

from .kscalar import Field, KElement, KVector, Scalar, k_conj, k_mul

Exponent = Tuple[int, ...]

__all__ = [
    "Exponent",
    "MomentTable",
    "RealForm",
    "abs_inner_sq_form",
    "evaluate",
    "form_inner",
    "frame_form",
    "grlex_key",
    "monomials",
    "norm_power_form",
    "sphere_moment",
]


def grlex_key(expo: Exponent):
    """Sort key for the canonical graded-lex order."""
    return (sum(expo), tuple(-e for e in expo))


def monomials(num_vars: int, degree: int) -> list[Exponent]:
    """All exponent vectors of the given degree, in canonical order."""
    out = []
    for combo in combinations_with_replacement(range(num_vars), degree):
        expo = [0] * num_vars
        for idx in combo:
            expo[idx] += 1
        out.append(tuple(expo))
    return out


@dataclass
class RealForm:
    """Homogeneous polynomial in N real variables with rational coefficients.

    Instances are treated as immutable; no method mutates `terms`.
    """

    num_vars: int
    degree: int
    terms: Dict[Exponent, Scalar] = dc_field(default_factory=dict)

    def __post_init__(self):
        clean = {}
        for expo, coeff in self.terms.items():
            expo = tuple(expo)
            if len(expo) != self.num_vars:
                raise ValueError(f"exponent {expo} has {len(expo)} entries, expected {self.num_vars}")
            if sum(expo) != self.degree:
                raise ValueError(f"exponent {expo} has degree {sum(expo)}, expected {self.degree}")
            if coeff != 0:
                clean[expo] = coeff
        self.terms = clean

    @classmethod
    def zero(cls, num_vars: int, degree: int) -> "RealForm":
        return cls(num_vars, degree, {})

    @classmethod
    def monomial(cls, num_vars: int, expo: Exponent, coeff=1) -> "RealForm":
        expo = tuple(expo)
        c = coeff if isinstance(coeff, float) else Fraction(coeff)
        return cls(num_vars, sum(expo), {expo: c})

    @classmethod
    def variable(cls, num_vars: int, index: int) -> "RealForm":
        expo = [0] * num_vars
        expo[index] = 1
        return cls.monomial(num_vars, tuple(expo))

    @property
    def is_zero(self) -> bool:
        return not self.terms

    @property
    def is_exact(self) -> bool:
        return all(isinstance(c, Fraction) for c in self.terms.values())

    def canonical_items(self) -> list[tuple[Exponent, Scalar]]:
        return [(e, self.terms[e]) for e in sorted(self.terms, key=grlex_key)]

    def max_abs_coeff(self) -> float:
        """Largest absolute coefficient, as a float (0.0 for the zero form)."""
        if not self.terms:
            return 0.0
        return max(abs(float(c)) for c in self.terms.values())

    def __add__(self, other: "RealForm") -> "RealForm":
        self._check_compatible(other, same_degree=True)
        out = dict(self.terms)
        for expo, coeff in other.terms.items():
            out[expo] = out.get(expo, Fraction(0)) + coeff
        return RealForm(self.num_vars, self.degree, out)

    def __sub__(self, other: "RealForm") -> "RealForm":
        return self + other.scale(-1)

    def __neg__(self) -> "RealForm":
        return self.scale(-1)

    def scale(self, r) -> "RealForm":
        if r == 0:
            return RealForm.zero(self.num_vars, self.degree)
        return RealForm(self.num_vars, self.degree, {e: c * r for e, c in self.terms.items()})

    def __mul__(self, other) -> "RealForm":
        if not isinstance(other, RealForm):
            return self.scale(other)
        self._check_compatible(other, same_degree=False)
        out: Dict[Exponent, Scalar] = {}
        for e1, c1 in self.terms.items():
            for e2, c2 in other.terms.items():
                key = tuple(a + b for a, b in zip(e1, e2))
                out[key] = out.get(key, Fraction(0)) + c1 * c2
        return RealForm(self.num_vars, self.degree + other.degree, out)

    __rmul__ = __mul__

    def __pow__(self, exponent: int) -> "RealForm":
        if exponent < 0:
            raise ValueError("negative powers are not defined for forms")
        if exponent == 0:
            return RealForm.monomial(self.num_vars, (0,) * self.num_vars)
        half = self ** (exponent // 2)
        sq = half * half
        return sq * self if exponent % 2 else sq

    def evaluate(self, point: Sequence[Scalar]) -> Scalar:
        return evaluate(self, point)

    def _check_compatible(self, other: "RealForm", same_degree: bool) -> None:
        if self.num_vars != other.num_vars:
            raise ValueError(f"variable count mismatch: {self.num_vars} vs {other.num_vars}")
        if same_degree and self.degree != other.degree:
            raise ValueError(f"degree mismatch: {self.degree} vs {other.degree}")


def evaluate(form: RealForm, point: Sequence[Scalar]) -> Scalar:
    """Exact evaluation of a form at a point (length must equal num_vars)."""
    if len(point) != form.num_vars:
        raise ValueError(f"point has {len(point)} coordinates, expected {form.num_vars}")
    total = Fraction(0)
    for expo, coeff in form.terms.items():
        term = coeff
        for x, e in zip(point, expo):
            if e:
                term = term * x**e
        total = total + term
    return total


def _double_factorial(k: int) -> int:
    out = 1
    while k > 1:
        out *= k
        k -= 2
    return out


class MomentTable:
    """Cache of normalized sphere moments for one ambient dimension N.

    moment(beta) = integral over S^{N-1} of x^beta against the uniform
    probability measure: zero when any beta_i is odd, otherwise with beta = 2b
    and a = sum(b),
        prod_i (2 b_i - 1)!!  /  (N (N+2) ... (N+2a-2)).
    Fills are idempotent, so concurrent readers race harmlessly; a lock keeps
    the cache dict itself consistent.
    """

    def __init__(self, num_vars: int):
        if num_vars < 1:
            raise ValueError("sphere dimension must be >= 1")
        self.num_vars = num_vars
        self._cache: Dict[Exponent, Fraction] = {}
        self._lock = threading.Lock()

    def moment(self, beta: Exponent) -> Fraction:
        if len(beta) != self.num_vars:
            raise ValueError(f"exponent length {len(beta)} does not match N={self.num_vars}")
        if any(b % 2 for b in beta):
            return Fraction(0)
        beta = tuple(beta)
        cached = self._cache.get(beta)
        if cached is not None:
            return cached
        num = 1
        a = 0
        for b in beta:
            num *= _double_factorial(b - 1)
            a += b // 2
        den = 1
        for j in range(a):
            den *= self.num_vars + 2 * j
        value = Fraction(num, den)
        with self._lock:
            self._cache[beta] = value
        return value


_tables: Dict[int, MomentTable] = {}
_tables_lock = threading.Lock()


def sphere_moment(beta: Sequence[int], num_vars: int) -> Fraction:
    """Normalized moment of x^beta over the unit sphere S^{num_vars - 1}."""
    table = _tables.get(num_vars)
    if table is None:
        with _tables_lock:
            table = _tables.setdefault(num_vars, MomentTable(num_vars))
    return table.moment(tuple(beta))


def form_inner(f1: RealForm, f2: RealForm) -> Scalar:
    """<<f1, f2>>: exact integral of f1*f2 over the unit sphere."""
    if f1.num_vars != f2.num_vars:
        raise ValueError(f"variable count mismatch: {f1.num_vars} vs {f2.num_vars}")
    total = Fraction(0)
    for e1, c1 in f1.terms.items():
        for e2, c2 in f2.terms.items():
            m = sphere_moment(tuple(a + b for a, b in zip(e1, e2)), f1.num_vars)
            if m:
                total = total + c1 * c2 * m
    return total


def abs_inner_sq_form(u: KVector) -> RealForm:
    """|<u, x>|^2 as a degree-2 form in the d*m real coordinates of x.

    Rejects u = 0 (a zero vector contributes nothing to a frame and never
    appears in one).
    """
    if u.is_zero:
        raise ValueError("zero vector has no frame form")
    fld = u.field
    d = fld.real_dimension
    n_vars = d * u.m
    # Component t of <u,x> is a linear form: sum over entries i and basis
    # units c of [conj(u_i) e_c]_t * x_{i,c}.
    linear: list[Dict[Exponent, Scalar]] = [dict() for _ in range(d)]
    for i, entry in enumerate(u.entries):
        ubar = k_conj(entry)
        for c in range(d):
            prod = k_mul(ubar, KElement.unit(fld, c))
            expo = [0] * n_vars
            expo[i * d + c] = 1
            key = tuple(expo)
            for t in range(d):
                coeff = prod.components[t]
                if coeff != 0:
                    linear[t][key] = linear[t].get(key, Fraction(0)) + coeff
    result = RealForm.zero(n_vars, 2)
    for t in range(d):
        lin = RealForm(n_vars, 1, linear[t])
        result = result + lin * lin
    return result


def frame_form(u: KVector, p: int) -> RealForm:
    """|<u, x>|^p as a degree-p form; p must be a positive even integer."""
    if p < 2 or p % 2:
        raise ValueError(f"exponent p must be a positive even integer, got {p}")
    return abs_inner_sq_form(u) ** (p // 2)


def norm_power_form(fld: Field, m: int, p: int) -> RealForm:
    """<x, x>^{p/2} = (sum of all d*m squared real coordinates)^{p/2}."""
    if p < 2 or p % 2:
        raise ValueError(f"exponent p must be a positive even integer, got {p}")
    n_vars = fld.real_dimension * m
    sq = {}
    for j in range(n_vars):
        expo = [0] * n_vars
        expo[j] = 2
        sq[tuple(expo)] = Fraction(1)
    return RealForm(n_vars, 2, sq) ** (p // 2)
