"""Weighted frames of isometric embeddings from the Euclidean space over K
into an l_p space, and the two reduction procedures.

A weighted frame is a system of nonzero vectors u_k in K^m with positive
weights w_k.  It verifies when

    sum_k w_k |<u_k, x>|^p  =  <x, x>^{p/2}

holds identically; both sides are degree-p forms in the d*m real coordinates
of x, so verification is an exact polynomial zero test.  The weighted
representation keeps everything rational: folding a weight into its vector
needs a p-th root, which is a separate lossy export (`to_unweighted`).

Reductions:
  * dependence/reduce_once drops vectors along an exact linear dependence of
    the weighted frame forms, rescaling the surviving weights by 1 - omega_k.
  * scaling_reduce searches the coordinate cone for a parameter point mu where
    the smallest expansion coefficient a_k(mu) vanishes, then rescales the
    coordinates by diag(mu_i^{1/2}) and drops the vanishing vector.
"""

from __future__ import annotations

import json
import math
import random
from dataclasses import dataclass
from fractions import Fraction
from itertools import combinations
from math import comb
from typing import Dict, List, Optional, Sequence, Tuple

from .forms import (
    Exponent,
    RealForm,
    frame_form,
    form_inner,
    monomials,
    norm_power_form,
)
from .kscalar import (
    Field,
    KElement,
    KVector,
    Scalar,
    cayley_point,
    inner_product,
    scalar_from_str,
    scalar_to_str,
)
from .linalg import RowReducer
from .phi import SingularGramError, dim_phi, dual_basis

__all__ = [
    "BudgetExhaustedError",
    "CertificateError",
    "DependenceCertificate",
    "DependentFormsError",
    "FrameError",
    "FrameParseError",
    "ScalingExpansionError",
    "ScalingForms",
    "ScalingSearchState",
    "UnverifiedFrameError",
    "VerifyResult",
    "WeightedFrame",
    "catalog",
    "dependence",
    "generic_rotation",
    "load_frame",
    "parse_frame",
    "reduce_once",
    "reduce_to_independent",
    "save_frame",
    "scaling_coefficients",
    "scaling_reduce",
    "serialize_frame",
    "to_unweighted",
    "verify",
]


class FrameError(ValueError):
    """Base class for frame-level failures."""


class FrameParseError(FrameError):
    """Frame file or text does not parse into a valid frame."""


class UnverifiedFrameError(FrameError):
    """Operation requires a frame that satisfies the defining identity."""


class DependentFormsError(FrameError):
    """Frame forms are linearly dependent; run reduce_to_independent first."""


class CertificateError(FrameError):
    """Dependence certificate does not match the frame."""


class ScalingExpansionError(FrameError):
    """The diagonal target form does not lie in the span of the frame forms."""


class BudgetExhaustedError(FrameError):
    """Bisection budget ran out before reaching the requested tolerance."""


@dataclass(frozen=True)
class WeightedFrame:
    """Vectors u_k in K^m with positive weights w_k, for a fixed even p."""

    field: Field
    m: int
    p: int
    vectors: Tuple[KVector, ...]
    weights: Tuple[Scalar, ...]

    def __post_init__(self):
        object.__setattr__(self, "vectors", tuple(self.vectors))
        object.__setattr__(self, "weights", tuple(self.weights))
        if self.m < 1:
            raise FrameError(f"m must be >= 1, got {self.m}")
        if self.p < 2 or self.p % 2:
            raise FrameError(f"p must be a positive even integer, got {self.p}")
        if not self.vectors:
            raise FrameError("a frame needs at least one vector")
        if len(self.weights) != len(self.vectors):
            raise FrameError(
                f"{len(self.vectors)} vectors but {len(self.weights)} weights")
        for k, u in enumerate(self.vectors):
            if u.field is not self.field:
                raise FrameError(f"vector {k} lives over {u.field.name}, frame over {self.field.name}")
            if u.m != self.m:
                raise FrameError(f"vector {k} has {u.m} entries, expected {self.m}")
            if u.is_zero:
                raise FrameError(f"vector {k} is zero; zero vectors never occur in a frame")
        for k, w in enumerate(self.weights):
            if not w > 0:
                raise FrameError(f"weight {k} is {w}; weights must be strictly positive")

    @property
    def n(self) -> int:
        return len(self.vectors)

    @property
    def is_exact(self) -> bool:
        return all(u.is_exact for u in self.vectors) and all(
            isinstance(w, Fraction) for w in self.weights)

    def frame_forms(self) -> List[RealForm]:
        """The unweighted forms |<u_k, x>|^p."""
        return [frame_form(u, self.p) for u in self.vectors]


@dataclass(frozen=True)
class VerifyResult:
    """Outcome of the identity check, with the residual form for diagnostics."""

    passed: bool
    residual: RealForm

    @property
    def max_residual(self) -> float:
        return self.residual.max_abs_coeff()


def verify(frame: WeightedFrame, tolerance: Optional[float] = None) -> VerifyResult:
    """Check sum_k w_k |<u_k,x>|^p = <x,x>^{p/2}.

    With tolerance None the test is exact (the residual must be the zero
    form); otherwise the largest absolute residual coefficient is compared
    against the tolerance, which is the only meaningful test for frames with
    floating-point entries.
    """
    residual = RealForm.zero(frame.field.real_dimension * frame.m, frame.p)
    for u, w in zip(frame.vectors, frame.weights):
        residual = residual + frame_form(u, frame.p).scale(w)
    residual = residual - norm_power_form(frame.field, frame.m, frame.p)
    if tolerance is None:
        passed = residual.is_zero
    else:
        if tolerance < 0:
            raise ValueError("tolerance must be nonnegative")
        passed = residual.max_abs_coeff() <= tolerance
    return VerifyResult(passed=passed, residual=residual)


@dataclass(frozen=True)
class DependenceCertificate:
    """Exact dependence sum_k omega_k w_k |<u_k,x>|^p = 0, max_k omega_k = 1."""

    omega: Tuple[Fraction, ...]
    pivot: int


def dependence(frame: WeightedFrame) -> Optional[DependenceCertificate]:
    """First linear dependence among the weighted frame forms, or None.

    Rows w_k |<u_k,x>|^p are assembled in frame order over the graded-lex
    monomial basis and reduced exactly; the first dependent row yields the
    certificate, normalized so that max_k omega_k = 1 (indices after the
    dependent row get omega = 0).
    """
    if not frame.is_exact:
        raise FrameError("dependence detection requires exact rational entries")
    n_vars = frame.field.real_dimension * frame.m
    basis = monomials(n_vars, frame.p)
    index = {expo: j for j, expo in enumerate(basis)}
    reducer = RowReducer(len(basis))
    for k, (u, w) in enumerate(zip(frame.vectors, frame.weights)):
        form = frame_form(u, frame.p).scale(w)
        row = [Fraction(0)] * len(basis)
        for expo, coeff in form.terms.items():
            row[index[expo]] = coeff
        combo = reducer.add_row(row)
        if combo is not None:
            peak = max(combo)
            omega = [c / peak for c in combo] + [Fraction(0)] * (frame.n - k - 1)
            pivot = omega.index(Fraction(1))
            return DependenceCertificate(omega=tuple(omega), pivot=pivot)
    return None


def reduce_once(frame: WeightedFrame, cert: DependenceCertificate) -> WeightedFrame:
    """Drop the omega = 1 vectors and rescale the rest by 1 - omega_k.

    This is the weighted, fully rational form of replacing u_k with
    u_k (1-omega_k)^{1/p}: the output verifies exactly when the input does,
    and is strictly smaller.
    """
    if len(cert.omega) != frame.n:
        raise CertificateError(
            f"certificate has {len(cert.omega)} entries for a frame of size {frame.n}")
    if max(cert.omega) != 1:
        raise CertificateError("certificate must be normalized to max omega = 1")
    combo = RealForm.zero(frame.field.real_dimension * frame.m, frame.p)
    for u, w, om in zip(frame.vectors, frame.weights, cert.omega):
        if om:
            combo = combo + frame_form(u, frame.p).scale(w * om)
    if not combo.is_zero:
        raise CertificateError("certificate residual identity fails for this frame")
    vectors = []
    weights = []
    for u, w, om in zip(frame.vectors, frame.weights, cert.omega):
        if om == 1:
            continue
        vectors.append(u)
        weights.append(w * (1 - om))
    return WeightedFrame(frame.field, frame.m, frame.p, tuple(vectors), tuple(weights))


def reduce_to_independent(frame: WeightedFrame, assert_dim_bound: bool = True) -> WeightedFrame:
    """Iterate dependence/reduce_once until the frame forms are independent.

    Terminates in at most n steps since each reduction is strictly smaller.
    With assert_dim_bound the postcondition n <= dim Phi_K(m,p) is checked at
    runtime and an unexpected violation raises.
    """
    current = frame
    while True:
        cert = dependence(current)
        if cert is None:
            break
        current = reduce_once(current, cert)
    if assert_dim_bound:
        dim = dim_phi(current.field, current.m, current.p)
        if current.n > dim:
            raise RuntimeError(
                f"independent frame of size {current.n} exceeds dim Phi = {dim}; "
                "this contradicts the rank bound and indicates a defect")
    return current


@dataclass(frozen=True)
class ScalingForms:
    """Expansion coefficients a_k as exact forms of degree p/2 in lambda.

    They satisfy sum_k a_k(lambda) |<u_k,x>|^p = (sum_i lambda_i |xi_i|^2)^{p/2}
    identically, so a_k(1,...,1) = w_k.
    """

    m: int
    p: int
    coefficients: Tuple[RealForm, ...]

    def evaluate(self, lam: Sequence[Scalar]) -> List[Scalar]:
        return [a.evaluate(lam) for a in self.coefficients]

    def a_hat(self, lam: Sequence[Scalar]) -> Scalar:
        """min_k a_k(lambda), the quantity whose zero crossing drives the reduction."""
        return min(self.evaluate(lam))


def _diagonal_target_joint(field: Field, m: int, p: int) -> RealForm:
    # (sum_i lambda_i |xi_i|^2)^{p/2} in the joint ring with variables
    # (lambda_1..lambda_m, x_{1,1}..x_{m,d}); joint degree 3p/2.
    d = field.real_dimension
    total = m + d * m
    base: Dict[Exponent, Fraction] = {}
    for i in range(m):
        for t in range(d):
            expo = [0] * total
            expo[i] = 1
            expo[m + i * d + t] = 2
            base[tuple(expo)] = Fraction(1)
    return RealForm(total, 3, base) ** (p // 2)


def _lift_lambda(a: RealForm, m: int, n_x: int) -> RealForm:
    return RealForm(m + n_x, a.degree,
                    {expo + (0,) * n_x: c for expo, c in a.terms.items()})


def _lift_x(f: RealForm, m: int) -> RealForm:
    return RealForm(m + f.num_vars, f.degree,
                    {(0,) * m + expo: c for expo, c in f.terms.items()})


def scaling_coefficients(frame: WeightedFrame) -> ScalingForms:
    """Expand the lambda-weighted norm power in the frame-form basis.

    Writes F_lambda = (sum_i lambda_i |xi_i|^2)^{p/2} as
    sum_k a_k(lambda) |<u_k,x>|^p with the a_k read off against the dual
    basis of the frame forms: a_k = <<F_lambda, theta_k>> per lambda-monomial.
    The resulting identity is re-checked symbolically in all m + d*m
    variables; frames whose span misses F_lambda are rejected.
    """
    if not frame.is_exact:
        raise FrameError("scaling coefficients require exact rational entries")
    if not verify(frame).passed:
        raise UnverifiedFrameError(
            "scaling coefficients are defined for verified frames only")
    forms = frame.frame_forms()
    try:
        dual = dual_basis(forms)
    except SingularGramError as exc:
        raise DependentFormsError(
            "frame forms are linearly dependent; run reduce_to_independent first"
        ) from exc
    m, p = frame.m, frame.p
    n_x = frame.field.real_dimension * m
    joint_target = _diagonal_target_joint(frame.field, m, p)
    # Group the joint target by lambda-monomial: F_lambda = sum_nu lambda^nu C_nu(x).
    by_lambda: Dict[Exponent, Dict[Exponent, Fraction]] = {}
    for expo, coeff in joint_target.terms.items():
        nu, xe = expo[:m], expo[m:]
        by_lambda.setdefault(nu, {})[xe] = coeff
    coefficients = []
    for theta in dual.duals:
        terms: Dict[Exponent, Fraction] = {}
        for nu, x_terms in by_lambda.items():
            c_nu = RealForm(n_x, p, x_terms)
            val = form_inner(c_nu, theta)
            if val:
                terms[nu] = val
        coefficients.append(RealForm(m, p // 2, terms))
    # Exactness check of the full expansion identity in (lambda, x).
    recombined = RealForm.zero(m + n_x, 3 * p // 2)
    for a, f in zip(coefficients, forms):
        recombined = recombined + _lift_lambda(a, m, n_x) * _lift_x(f, m)
    if recombined != joint_target:
        raise ScalingExpansionError(
            "diagonal target is not in the span of the frame forms; "
            "the expansion identity has no solution for this frame")
    return ScalingForms(m=m, p=p, coefficients=tuple(coefficients))


@dataclass
class ScalingSearchState:
    """Bisection state on the segment from (1,...,1) to gamma.

    lo and hi are points of the closed coordinate cone with a_hat(lo) >= 0
    and a_hat(hi) < 0; lam is the current candidate and a_hat its value.
    """

    lam: Tuple[Fraction, ...]
    a_hat: Fraction
    lo: Tuple[Fraction, ...]
    hi: Tuple[Fraction, ...]


def _simplex_nodes(m: int, per_axis: int) -> List[Tuple[Fraction, ...]]:
    # Interior grid on the simplex lambda_1 + ... + lambda_m = m: points
    # m * (c_1, ..., c_m) / S with integer c_i >= 1 summing to S = per_axis + 1.
    s = per_axis + 1
    nodes = []
    for cuts in combinations(range(1, s), m - 1):
        bounds = (0,) + cuts + (s,)
        parts = [bounds[i + 1] - bounds[i] for i in range(m)]
        nodes.append(tuple(Fraction(m * c, s) for c in parts))
    return nodes


def _is_rational_square(value: Fraction) -> Optional[Fraction]:
    num, den = value.numerator, value.denominator
    if num < 0:
        return None
    rn, rd = math.isqrt(num), math.isqrt(den)
    if rn * rn == num and rd * rd == den:
        return Fraction(rn, rd)
    return None


def scaling_reduce(
    frame: WeightedFrame,
    grid: Optional[int] = None,
    tolerance: float = 1e-9,
    budget: int = 200,
) -> Optional[WeightedFrame]:
    """Diagonal-scaling reduction: drop a vector where the smallest a_k vanishes.

    Searches the simplex grid (all a_k are homogeneous, so their signs on the
    open cone are determined on the simplex) for gamma with
    a_hat(gamma) = min_k a_k(gamma) < 0, refining between nodes of opposite
    sign.  If found, bisects from (1,...,1) toward gamma until
    0 <= a_hat(mu) <= tolerance, every step exact over Q; `budget` caps the
    bisection iterations, exhaustion raises BudgetExhaustedError.  Returns the
    frame with vectors diag(mu_i^{1/2})^{-1} u_k and weights a_k(mu), dropping
    every k with a_k(mu) <= tolerance; the result is rebuilt exactly when all
    mu_i are squares of rationals and in floating point otherwise, and
    re-verified either way.  Returns None when the sampled cone shows no
    negative a_hat: no reduction found (which certifies nothing).
    """
    if not tolerance > 0:
        raise ValueError(f"tolerance must be positive, got {tolerance}")
    if budget < 1:
        raise ValueError(f"budget must be >= 1, got {budget}")
    tol = Fraction(tolerance)
    sf = scaling_coefficients(frame)
    m = frame.m
    if grid is None:
        grid = 33 if m == 2 else 9 if m == 3 else 5
    if grid < 1:
        raise ValueError(f"grid must be >= 1, got {grid}")

    nodes = _simplex_nodes(m, grid)
    values = {node: sf.a_hat(node) for node in nodes}
    # Refine between neighboring nodes of opposite sign; one elementary step
    # moves a unit of 1/S mass between two coordinates.
    step = Fraction(2 * m, grid + 1)
    for u, v in combinations(nodes, 2):
        if (values[u] < 0) == (values[v] < 0):
            continue
        if sum(abs(a - b) for a, b in zip(u, v)) != step:
            continue
        mid = tuple((a + b) / 2 for a, b in zip(u, v))
        values[mid] = sf.a_hat(mid)
    gamma = min(values, key=lambda node: (values[node], node))
    if values[gamma] >= 0:
        return None

    ones = (Fraction(1),) * m
    state = ScalingSearchState(lam=ones, a_hat=sf.a_hat(ones), lo=ones, hi=gamma)
    if state.a_hat < 0:
        raise RuntimeError("a_hat(1,...,1) = min_k w_k came out negative for a "
                           "verified frame; this indicates a defect")
    spent = 0
    while state.a_hat > tol:
        if spent >= budget:
            raise BudgetExhaustedError(
                f"bisection budget {budget} exhausted at a_hat = {float(state.a_hat):.3e} "
                f"(tolerance {float(tol):.3e})")
        mid = tuple((a + b) / 2 for a, b in zip(state.lo, state.hi))
        value = sf.a_hat(mid)
        if value >= 0:
            state.lo, state.lam, state.a_hat = mid, mid, value
        else:
            state.hi = mid
        spent += 1
    mu = state.lam

    coeffs = sf.evaluate(mu)
    keep = [k for k, a in enumerate(coeffs) if a > tol]
    if not keep:
        raise FrameError("all scaling coefficients vanished; frame is degenerate")
    roots = [_is_rational_square(v) for v in mu]
    if all(r is not None for r in roots):
        inv = [Fraction(1) / r for r in roots]
    else:
        inv = [1.0 / math.sqrt(float(v)) for v in mu]
    vectors = []
    for k in keep:
        u = frame.vectors[k]
        vectors.append(KVector(frame.field, tuple(
            entry.scale(inv[i]) for i, entry in enumerate(u.entries))))
    reduced = WeightedFrame(frame.field, m, frame.p, tuple(vectors),
                            tuple(coeffs[k] for k in keep))

    dropped_clean = all(coeffs[k] == 0 for k in range(len(coeffs)) if k not in keep)
    if reduced.is_exact and dropped_clean:
        if not verify(reduced).passed:
            raise RuntimeError("exact scaling reduction failed re-verification; "
                               "this indicates a defect")
    else:
        # Dropped coefficients bound the residual: the identity is exact
        # before dropping, so the leftover is sum of a_k * max coeff of the
        # dropped rescaled forms, plus binary64 noise.
        bound = 1e-8
        for k, a in enumerate(coeffs):
            if k in keep:
                continue
            u = frame.vectors[k]
            dropped = KVector(frame.field, tuple(
                entry.scale(float(inv[i])) for i, entry in enumerate(u.entries)))
            bound += float(a) * frame_form(dropped, frame.p).max_abs_coeff()
        if not verify(reduced, tolerance=bound).passed:
            raise RuntimeError("scaling reduction failed floating-point re-verification; "
                               "this indicates a defect")
    return reduced


def generic_rotation(frame: WeightedFrame, seed: int = 0) -> Tuple[WeightedFrame, KVector]:
    """Rotate so every vector has nonzero first inner-product coordinate.

    Finds a rational unit vector e with <u_k, e> != 0 for all k; each failure
    lies on one of n hyperplanes, so random samples succeed generically.  The
    frame is mapped through the reflection H exchanging e_1 and e (H is
    K-unitary and self-inverse; e is built with a real first component so H
    stays rational).  Returns (H u_k with original weights, e).
    """
    d = frame.field.real_dimension
    n_real = d * frame.m

    def clears(e: KVector) -> bool:
        return all(not inner_product(u, e).is_zero for u in frame.vectors)

    e1 = KVector.canonical(frame.field, frame.m, 0)
    if clears(e1):
        return frame, e1

    rng = random.Random(seed)
    bound = 4
    e = None
    for _ in range(64):
        # Cayley parameters: first d-1 zeros keep the first component of e
        # real, which makes the reflection below exact.
        params = [Fraction(0)] * (d - 1) + [
            Fraction(rng.randint(-bound, bound)) for _ in range(n_real - d)]
        coords = cayley_point(params)
        candidate = KVector(frame.field, tuple(
            KElement(frame.field, coords[i * d:(i + 1) * d]) for i in range(frame.m)))
        if clears(candidate):
            e = candidate
            break
        bound *= 2
    if e is None:
        raise RuntimeError("no generic direction found; the frame is degenerate")

    # H x = x - v (2 <v,x> / <v,v>) with v = e_1 - e; H e_1 = e because the
    # first component of e is real.
    v = e1 - e
    scale = 2 / v.norm_sq()
    vectors = [u - v.scale_right(inner_product(v, u).scale(scale))
               for u in frame.vectors]
    rotated = WeightedFrame(frame.field, frame.m, frame.p, tuple(vectors), frame.weights)
    return rotated, e


def catalog(field: Field, m: int, p: int, kind: str) -> WeightedFrame:
    """Small library of known frames.

    orthonormal-p2: canonical basis with unit weights, any K, p = 2.
    real2-equiangular: over R^2, the p/2 + 1 unit vectors at angles
        k*pi/(p/2+1) with equal weights 2^p / ((p/2+1) binom(p, p/2));
        floating-point entries.
    real2-rational-p4: the exact rational 4-vector frame over R^2 at p = 4.
    """
    if kind == "orthonormal-p2":
        if p != 2:
            raise ValueError(f"orthonormal-p2 requires p = 2, got p = {p}")
        vectors = tuple(KVector.canonical(field, m, i) for i in range(m))
        return WeightedFrame(field, m, 2, vectors, (Fraction(1),) * m)
    if kind == "real2-equiangular":
        if field is not Field.R or m != 2:
            raise ValueError("real2-equiangular requires field R and m = 2")
        if p < 2 or p % 2:
            raise ValueError(f"real2-equiangular requires even p, got {p}")
        count = p // 2 + 1
        vectors = tuple(
            KVector.from_reals(Field.R, (math.cos(k * math.pi / count),
                                         math.sin(k * math.pi / count)))
            for k in range(count))
        weight = Fraction(2**p, count * comb(p, p // 2))
        return WeightedFrame(Field.R, 2, p, vectors, (weight,) * count)
    if kind == "real2-rational-p4":
        if field is not Field.R or m != 2 or p != 4:
            raise ValueError("real2-rational-p4 requires field R, m = 2, p = 4")
        vectors = tuple(KVector.from_reals(Field.R, pair)
                        for pair in ((1, 0), (0, 1), (1, 1), (1, -1)))
        weights = (Fraction(2, 3), Fraction(2, 3), Fraction(1, 6), Fraction(1, 6))
        return WeightedFrame(Field.R, 2, 4, vectors, weights)
    raise ValueError(
        f"unsupported catalog kind {kind!r}; expected orthonormal-p2, "
        "real2-equiangular or real2-rational-p4")


def _rational_root(value: Fraction, p: int) -> Optional[Fraction]:
    def iroot(x: int) -> Optional[int]:
        if x == 0:
            return 0
        r = round(x ** (1.0 / p))
        for candidate in (r - 1, r, r + 1):
            if candidate >= 0 and candidate**p == x:
                return candidate
        return None

    rn = iroot(value.numerator)
    rd = iroot(value.denominator)
    if rn is None or rd is None:
        return None
    return Fraction(rn, rd)


def to_unweighted(frame: WeightedFrame, mode: str = "exact") -> WeightedFrame:
    """Fold weights into the vectors: u_k <- u_k w_k^{1/p}, weights 1.

    Exact mode requires every weight to be a p-th power of a rational;
    float mode takes binary64 roots and yields floating-point vectors.
    """
    if mode == "exact":
        vectors = []
        for k, (u, w) in enumerate(zip(frame.vectors, frame.weights)):
            if not isinstance(w, Fraction):
                raise FrameError(f"weight {k} is not rational; use float mode")
            root = _rational_root(w, frame.p)
            if root is None:
                raise FrameError(
                    f"weight {k} = {w} is not a p-th power of a rational; use float mode")
            vectors.append(u.scale_real(root))
    elif mode == "float":
        vectors = [u.scale_real(float(w) ** (1.0 / frame.p))
                   for u, w in zip(frame.vectors, frame.weights)]
    else:
        raise ValueError(f"mode must be 'exact' or 'float', got {mode!r}")
    return WeightedFrame(frame.field, frame.m, frame.p, tuple(vectors),
                         (Fraction(1),) * frame.n)


def _frame_to_obj(frame: WeightedFrame) -> dict:
    return {
        "field": frame.field.name,
        "m": frame.m,
        "p": frame.p,
        "vectors": [[[scalar_to_str(c) for c in entry.components]
                     for entry in u.entries] for u in frame.vectors],
        "weights": [scalar_to_str(w) for w in frame.weights],
    }


def serialize_frame(frame: WeightedFrame) -> str:
    return json.dumps(_frame_to_obj(frame), indent=2) + "\n"


def parse_frame(text: str) -> WeightedFrame:
    """Parse the frame file format; inverse of serialize_frame, bit-exact."""
    try:
        obj = json.loads(text)
    except json.JSONDecodeError as exc:
        raise FrameParseError(f"not valid structured text: {exc}") from None
    if not isinstance(obj, dict):
        raise FrameParseError("top level must be an object")
    missing = {"field", "m", "p", "vectors", "weights"} - set(obj)
    if missing:
        raise FrameParseError(f"missing fields: {', '.join(sorted(missing))}")
    try:
        field = Field.from_tag(obj["field"])
    except (ValueError, TypeError) as exc:
        raise FrameParseError(str(exc)) from None
    m, p = obj["m"], obj["p"]
    if not isinstance(m, int) or not isinstance(p, int):
        raise FrameParseError("m and p must be integers")
    d = field.real_dimension
    raw_vectors = obj["vectors"]
    raw_weights = obj["weights"]
    if not isinstance(raw_vectors, list) or not isinstance(raw_weights, list):
        raise FrameParseError("vectors and weights must be arrays")
    vectors = []
    for k, raw in enumerate(raw_vectors):
        if not isinstance(raw, list) or len(raw) != m:
            raise FrameParseError(f"vector {k} must be an array of {m} entries")
        entries = []
        for i, comps in enumerate(raw):
            if not isinstance(comps, list) or len(comps) != d:
                raise FrameParseError(
                    f"vector {k} entry {i} must be an array of {d} component strings")
            try:
                entries.append(KElement(field, tuple(scalar_from_str(c) for c in comps)))
            except (ValueError, TypeError, AttributeError) as exc:
                raise FrameParseError(f"vector {k} entry {i}: {exc}") from None
        vectors.append(KVector(field, tuple(entries)))
    weights = []
    for k, raw in enumerate(raw_weights):
        try:
            weights.append(scalar_from_str(raw))
        except (ValueError, TypeError, AttributeError) as exc:
            raise FrameParseError(f"weight {k}: {exc}") from None
    try:
        return WeightedFrame(field, m, p, tuple(vectors), tuple(weights))
    except ValueError as exc:
        raise FrameParseError(str(exc)) from None


def load_frame(path) -> WeightedFrame:
    try:
        with open(path, "r", encoding="utf-8") as fh:
            text = fh.read()
    except OSError as exc:
        raise FrameParseError(f"cannot read {path}: {exc}") from None
    return parse_frame(text)


def save_frame(frame: WeightedFrame, path) -> None:
    with open(path, "w", encoding="utf-8") as fh:
        fh.write(serialize_frame(frame))
