"""The invariant space Phi_K(m,p): degree-p real forms on K^m fixed by right
multiplication with unit scalars of K.

The projector onto Phi averages f(x alpha) over the unit group, which is the
sphere S^{d-1} in the d real dimensions of K.  Averaging is exact: the
substitution x -> x alpha is linear over the joint ring in the coordinates of
x and alpha, and the alpha-monomials integrate to rational sphere moments.
"""

from __future__ import annotations

import threading
from dataclasses import dataclass, field as dc_field
from fractions import Fraction
from functools import lru_cache
from typing import Dict, List, Optional, Sequence, Tuple

from .forms import Exponent, RealForm, form_inner, monomials, sphere_moment
from .kscalar import Field, basis_product
from .linalg import RowReducer, SingularMatrixError, matrix_inverse

__all__ = [
    "DualBasis",
    "PhiBasis",
    "SingularGramError",
    "dim_phi",
    "dual_basis",
    "phi_basis",
    "unit_group_average",
    "upper_bound",
]


class SingularGramError(ValueError):
    """Gram matrix of the given forms is singular.

    This happens exactly when the forms are linearly dependent; run
    dependence detection instead of asking for a dual basis.
    """


def _substitution_table(field: Field, m: int) -> List[List[Tuple[int, int, int]]]:
    # Under x -> x alpha the real coordinate x_{i,t} becomes a bilinear form:
    # sum over basis units c, s with e_c e_s = +-e_t of sign * x_{i,c} * alpha_s.
    # Entry v = i*d + t of the table lists those (x_index, alpha_index, sign).
    d = field.real_dimension
    table: List[List[Tuple[int, int, int]]] = [[] for _ in range(d * m)]
    for i in range(m):
        for c in range(d):
            for s in range(d):
                t, sign = basis_product(field, c, s)
                table[i * d + t].append((i * d + c, s, sign))
    return table


def _average_monomial(beta: Exponent, field: Field, m: int,
                      table: List[List[Tuple[int, int, int]]]) -> RealForm:
    d = field.real_dimension
    n_vars = d * m
    # Joint terms keyed by (x exponent, alpha exponent).
    joint: Dict[Tuple[Exponent, Exponent], Fraction] = {
        ((0,) * n_vars, (0,) * d): Fraction(1)
    }
    for v in range(n_vars):
        for _ in range(beta[v]):
            grown: Dict[Tuple[Exponent, Exponent], Fraction] = {}
            for (xe, ae), coeff in joint.items():
                for xv, av, sign in table[v]:
                    xe2 = list(xe)
                    xe2[xv] += 1
                    ae2 = list(ae)
                    ae2[av] += 1
                    key = (tuple(xe2), tuple(ae2))
                    grown[key] = grown.get(key, Fraction(0)) + sign * coeff
            joint = grown
    out: Dict[Exponent, Fraction] = {}
    for (xe, ae), coeff in joint.items():
        mom = sphere_moment(ae, d)
        if mom:
            out[xe] = out.get(xe, Fraction(0)) + coeff * mom
    return RealForm(n_vars, sum(beta), out)


def unit_group_average(phi: RealForm, field: Field, m: int) -> RealForm:
    """Project a form onto Phi_K(m,p) by exact unit-group averaging.

    The form must live in the N = d*m real coordinates of K^m.  The result
    equals the integral of phi(x alpha) over unit scalars alpha (the two-point
    average for R, the circle for C, the 3-sphere for H).
    """
    d = field.real_dimension
    if phi.num_vars != d * m:
        raise ValueError(
            f"form has {phi.num_vars} variables, expected {d * m} for {field.name}^{m}")
    table = _substitution_table(field, m)
    result = RealForm.zero(phi.num_vars, phi.degree)
    for beta, coeff in phi.terms.items():
        result = result + _average_monomial(beta, field, m, table).scale(coeff)
    return result


@dataclass
class DualBasis:
    """Forms theta_k with <<b_j, theta_k>> = delta_{jk} exactly."""

    forms: Tuple[RealForm, ...]
    duals: Tuple[RealForm, ...]
    gram: Tuple[Tuple[Fraction, ...], ...]
    gram_inverse: Tuple[Tuple[Fraction, ...], ...]


def dual_basis(forms: Sequence[RealForm]) -> DualBasis:
    """Dual basis under the sphere-integral pairing: theta_k = sum_j G^{-1}_{kj} b_j.

    The forms must be linearly independent and of equal degree; a singular
    Gram matrix is reported as SingularGramError since it certifies
    dependence.
    """
    forms = tuple(forms)
    if not forms:
        raise ValueError("dual basis of an empty family is undefined")
    degree = forms[0].degree
    n_vars = forms[0].num_vars
    for f in forms[1:]:
        if f.degree != degree or f.num_vars != n_vars:
            raise ValueError("dual basis requires forms of equal degree and variable count")
    gram = [[form_inner(fi, fj) for fj in forms] for fi in forms]
    try:
        inv = matrix_inverse(gram)
    except SingularMatrixError as exc:
        raise SingularGramError(
            "Gram matrix is singular: the forms are linearly dependent; "
            "run dependence detection instead") from exc
    duals = []
    for row in inv:
        theta = RealForm.zero(n_vars, degree)
        for coeff, b in zip(row, forms):
            if coeff:
                theta = theta + b.scale(coeff)
        duals.append(theta)
    return DualBasis(
        forms=forms,
        duals=tuple(duals),
        gram=tuple(tuple(row) for row in gram),
        gram_inverse=tuple(tuple(row) for row in inv),
    )


@dataclass
class PhiBasis:
    """Basis of Phi_K(m,p): independent unit-group averages of monomials.

    `labels[i]` is the exponent vector of the monomial whose average is
    `basis[i]`; monomials are scanned in graded-lex order, so the basis choice
    is deterministic.  Gram data is computed on first use and cached.
    """

    field: Field
    m: int
    p: int
    basis: Tuple[RealForm, ...]
    labels: Tuple[Exponent, ...]
    _gram_lock: threading.Lock = dc_field(
        default_factory=threading.Lock, repr=False, compare=False)
    _dual: Optional[DualBasis] = dc_field(default=None, repr=False, compare=False)

    @property
    def dimension(self) -> int:
        return len(self.basis)

    @property
    def num_vars(self) -> int:
        return self.field.real_dimension * self.m

    def _dual_basis(self) -> DualBasis:
        with self._gram_lock:
            if self._dual is None:
                self._dual = dual_basis(self.basis)
            return self._dual

    @property
    def gram(self) -> Tuple[Tuple[Fraction, ...], ...]:
        return self._dual_basis().gram

    @property
    def gram_inverse(self) -> Tuple[Tuple[Fraction, ...], ...]:
        return self._dual_basis().gram_inverse

    @property
    def duals(self) -> Tuple[RealForm, ...]:
        return self._dual_basis().duals


@lru_cache(maxsize=None)
def phi_basis(field: Field, m: int, p: int) -> PhiBasis:
    """Compute a deterministic basis of Phi_K(m,p).

    Every degree-p monomial in the N real coordinates is averaged; a maximal
    independent subset of the averages is extracted by exact elimination,
    keeping the earliest generating monomials in graded-lex order.
    """
    if m < 1:
        raise ValueError(f"m must be >= 1, got {m}")
    if p < 2 or p % 2:
        raise ValueError(f"p must be a positive even integer, got {p}")
    n_vars = field.real_dimension * m
    table = _substitution_table(field, m)
    all_monomials = monomials(n_vars, p)
    index = {expo: j for j, expo in enumerate(all_monomials)}
    reducer = RowReducer(len(all_monomials))
    basis: List[RealForm] = []
    labels: List[Exponent] = []
    for beta in all_monomials:
        averaged = _average_monomial(beta, field, m, table)
        if averaged.is_zero:
            continue
        row = [Fraction(0)] * len(all_monomials)
        for expo, coeff in averaged.terms.items():
            row[index[expo]] = coeff
        if reducer.add_row(row) is None:
            basis.append(averaged)
            labels.append(beta)
    return PhiBasis(field=field, m=m, p=p, basis=tuple(basis), labels=tuple(labels))


def dim_phi(field: Field, m: int, p: int) -> int:
    """dim Phi_K(m,p), by exact rank of the averaged monomial family."""
    return phi_basis(field, m, p).dimension


def upper_bound(field: Field, m: int, p: int) -> int:
    """Upper bound dim Phi_K(m,p) - 1 on the minimal frame size for m >= 2."""
    if m < 2:
        raise ValueError(
            "upper_bound requires m >= 2: for m = 1 the minimal frame size is 1")
    return dim_phi(field, m, p) - 1
