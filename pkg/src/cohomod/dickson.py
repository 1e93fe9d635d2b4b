# src/cohomod/dickson.py

"""
Dickson invariants and parameters with prescribed restrictions.

The invariants are read off the expansion of prod_{w in V} (X - w) over the
F_p-span V of the variables. Variables sit in degree ``gen_degree``: the
degree-one generators at p = 2, the degree-two polynomial generators at odd p.
"""

import itertools
import logging
from dataclasses import dataclass
from typing import Dict, List, Optional, Sequence, Tuple

import numpy as np
import sympy
from sympy import Poly, symbols
from sympy.ntheory import primitive_root

from .config import Caps
from .errors import (
    CapExceededError,
    DimensionMismatchError,
    NoSolutionError,
    ResolutionTooShortError,
    SemanticInputError,
)
from .gring import GradedPresentation, Polynomial, TruncatedPresentation, finite_length_certificate, substitute
from .linalg import DTYPE, LinearSolver, PrimeField
from .regseq import ParameterSequence

logger = logging.getLogger(__name__)

MAX_SPAN_SIZE = 64


def dickson_degree(p: int, r: int, j: int, gen_degree: int) -> int:
    """Internal degree of c_{r,r-j}."""
    return gen_degree * (p ** r - p ** (r - j))


@dataclass(frozen=True)
class DicksonSet:
    """
    ``invariants[j - 1]`` is c_{r,r-j} (j = 1..r) as a sympy Poly over GF(p)
    in ``variables``.
    """

    p: int
    r: int
    gen_degree: int
    variables: Tuple[sympy.Symbol, ...]
    invariants: Tuple[Poly, ...]

    def invariant(self, j: int) -> Poly:
        return self.invariants[j - 1]

    def degrees(self) -> Tuple[int, ...]:
        return tuple(dickson_degree(self.p, self.r, j, self.gen_degree) for j in range(1, self.r + 1))

    def to_polynomial(self, j: int, power: int = 1) -> Polynomial:
        """c_{r,r-j}^power as a polynomial on r generators of degree ``gen_degree``."""
        return sympy_to_polynomial(self.invariant(j) ** power, self.p, (self.gen_degree,) * self.r)

    def top_invariant_product(self) -> Poly:
        """Product of all nonzero vectors of the span (equals c_{r,0} up to sign)."""
        result = Poly(1, *self.variables, modulus=self.p)
        for w in _span(self.variables, self.p):
            if not w.is_zero:
                result = result * w
        return result


def _span(variables: Sequence[sympy.Symbol], p: int) -> List[Poly]:
    out = []
    for coeffs in itertools.product(range(p), repeat=len(variables)):
        expr = sum(c * v for c, v in zip(coeffs, variables))
        out.append(Poly(expr, *variables, modulus=p))
    return out


def sympy_to_polynomial(poly: Poly, p: int, degrees: Sequence[int], positions: Optional[Sequence[int]] = None) -> Polynomial:
    """
    Convert a sympy Poly to a :class:`Polynomial` on generators of ``degrees``;
    variable i lands on generator ``positions[i]``.
    """
    n_vars = len(poly.gens)
    positions = list(positions) if positions is not None else list(range(n_vars))
    terms: Dict[Tuple[int, ...], int] = {}
    for mono, c in poly.as_dict().items():
        exps = [0] * len(degrees)
        for i, e in enumerate(mono):
            exps[positions[i]] += e
        terms[tuple(exps)] = terms.get(tuple(exps), 0) + int(c)
    return Polynomial(terms, p, degrees)


def dickson_set(p: int, r: int, gen_degree: Optional[int] = None) -> DicksonSet:
    """
    Expand prod_{w in V}(X - w) and read off c_{r,r-1}, ..., c_{r,0}.

    :raises CapExceededError: if p^r exceeds the span cap.
    :raises SemanticInputError: if a coefficient outside the p-power positions survives.
    """
    PrimeField(p)
    if r < 1:
        raise SemanticInputError(f"Rank must be at least 1, got {r}")
    if p ** r > MAX_SPAN_SIZE:
        raise CapExceededError(f"Span of size {p ** r} exceeds the cap {MAX_SPAN_SIZE}")
    gen_degree = gen_degree if gen_degree is not None else (1 if p == 2 else 2)
    variables = symbols(f"x1:{r + 1}")
    X = sympy.Symbol("X")
    product = Poly(1, X, *variables, modulus=p)
    for w in _span(variables, p):
        product = product * Poly(X - w.as_expr(), X, *variables, modulus=p)

    by_power: Dict[int, Poly] = {}
    for (x_exp, *rest), c in product.as_dict().items():
        term = Poly(c * sympy.Mul(*[v ** e for v, e in zip(variables, rest)]), *variables, modulus=p)
        by_power[x_exp] = by_power.get(x_exp, Poly(0, *variables, modulus=p)) + term
    allowed = {p ** (r - j) for j in range(r + 1)}
    for x_exp, coeff in by_power.items():
        if x_exp not in allowed and not coeff.is_zero:
            raise SemanticInputError(f"Coefficient of X^{x_exp} does not vanish")

    invariants = []
    for j in range(1, r + 1):
        coeff = by_power.get(p ** (r - j), Poly(0, *variables, modulus=p))
        # coefficient of X^{p^{r-j}} is (-1)^j c_{r,r-j}
        invariants.append(coeff * (-1) ** j)
    logger.debug(f"Dickson invariants for p={p}, r={r}: {[str(c.as_expr()) for c in invariants]}")
    return DicksonSet(p, r, gen_degree, tuple(variables), tuple(invariants))


# ---------------------------------------------------------------------------
# Invariance and restriction relations
# ---------------------------------------------------------------------------

def gl_generators(p: int, r: int) -> List[np.ndarray]:
    """A generating set of GL(r, F_p): a transvection, a diagonal unit and two permutations."""
    gens: List[np.ndarray] = []
    if r >= 2:
        t = np.eye(r, dtype=DTYPE)
        t[0, 1] = 1
        gens.append(t)
        swap = np.eye(r, dtype=DTYPE)[[1, 0] + list(range(2, r))]
        gens.append(swap)
        cycle = np.eye(r, dtype=DTYPE)[list(range(1, r)) + [0]]
        gens.append(cycle)
    if p > 2:
        diag = np.eye(r, dtype=DTYPE)
        diag[0, 0] = primitive_root(p)
        gens.append(diag)
    return gens


def _act(poly: Poly, matrix: np.ndarray, variables: Sequence[sympy.Symbol], p: int) -> Poly:
    images = {
        v: sum(int(matrix[i, k]) * variables[k] for k in range(len(variables)))
        for i, v in enumerate(variables)
    }
    return Poly(poly.as_expr().xreplace(images), *variables, modulus=p)


def is_gl_invariant(poly: Poly, p: int, variables: Sequence[sympy.Symbol]) -> bool:
    poly = Poly(poly.as_expr(), *variables, modulus=p)
    return all(_act(poly, g, variables, p) == poly for g in gl_generators(p, len(variables)))


def verify_gl_invariance(d: DicksonSet) -> bool:
    return all(is_gl_invariant(c, d.p, d.variables) for c in d.invariants)


def restriction_power_relation(d: DicksonSet, s: int) -> bool:
    """
    Setting the last r - s variables to zero sends c_{r,r-j} to
    c_{s,s-j}^{p^{r-s}} for j <= s and to zero for j > s.
    """
    if not 1 <= s < d.r:
        raise SemanticInputError(f"Sub-rank must lie in [1, {d.r - 1}], got {s}")
    low = dickson_set(d.p, s, d.gen_degree)
    zeros = {v: 0 for v in d.variables[s:]}
    keep = d.variables[:s]
    for j in range(1, d.r + 1):
        restricted = Poly(d.invariant(j).as_expr().xreplace(zeros), *keep, modulus=d.p)
        if j <= s:
            expected = Poly(low.invariant(j).as_expr(), *keep, modulus=d.p) ** (d.p ** (d.r - s))
        else:
            expected = Poly(0, *keep, modulus=d.p)
        if restricted != expected:
            logger.debug(f"Restriction relation fails for j={j}, s={s}")
            return False
    return True


# ---------------------------------------------------------------------------
# Restriction data and parameter search
# ---------------------------------------------------------------------------

def polynomial_variable_positions(ring: GradedPresentation, gen_degree: int) -> List[int]:
    """Generators of ``ring`` carrying the Dickson variables."""
    return [i for i, d in enumerate(ring.degrees) if d == gen_degree]


def reduced_vector(ring: GradedPresentation, poly: Polynomial, n: int) -> np.ndarray:
    """
    Normal-form coordinates in degree n, with monomials containing an odd
    generator dropped at odd p (the nilradical of an elementary abelian ring).
    """
    vec = ring.normal_form_vector(poly, n)
    if ring.p == 2:
        return vec
    std = ring.degree_basis(n).standard[n]
    keep = [k for k, m in enumerate(std) if not any(e and ext for e, ext in zip(m, ring.exterior))]
    return vec[keep]


@dataclass(frozen=True)
class SubgroupRestriction:
    """A proper elementary abelian subgroup W of E: its ring and the images of E's generators."""

    rank: int
    ring: GradedPresentation
    generator_images: Tuple[Polynomial, ...]


@dataclass(frozen=True)
class ElabRestriction:
    """
    One maximal elementary abelian class E: its cohomology ring, the
    restriction images of the big ring's generators, and the proper
    subgroups of E needed for rank-restriction checks.
    """

    rank: int
    ring: GradedPresentation
    generator_images: Tuple[Polynomial, ...]
    subgroups: Tuple[SubgroupRestriction, ...] = ()

    def restrict(self, poly: Polynomial) -> Polynomial:
        return substitute(poly, self.generator_images, self.ring)


def _vanishes(ring: GradedPresentation, poly: Polynomial) -> bool:
    if poly.is_zero():
        return True
    return all(not reduced_vector(ring, poly, n).any() for n in poly.degree_set())


def rank_restriction_check(params: ParameterSequence, restrictions: Sequence[ElabRestriction]) -> bool:
    """
    z_i restricts to zero (modulo nilpotents at odd p) on every elementary
    abelian subgroup of rank < i, and on each maximal class of rank rho the
    first rho restrictions leave a quotient of finite length.

    :raises SemanticInputError: if no restriction data is given.
    """
    if not restrictions:
        raise SemanticInputError("Rank-restriction check needs restriction data for every maximal class")
    for e in restrictions:
        images = [e.restrict(z) for z in params.elements]
        for i, image in enumerate(images, start=1):
            if i > e.rank and not _vanishes(e.ring, image):
                logger.debug(f"Parameter {i} survives on a maximal class of rank {e.rank}")
                return False
            for w in e.subgroups:
                if w.rank >= i:
                    continue
                if not _vanishes(w.ring, substitute(image, w.generator_images, w.ring)):
                    logger.debug(f"Parameter {i} survives on a subgroup of rank {w.rank}")
                    return False
        leading = [im for im in images[: e.rank] if not im.is_zero()]
        if len(leading) < e.rank:
            return False
        bound = sum(im.homogeneous_degree() for im in leading) + e.rank * e.ring.max_generator_degree + 2
        if finite_length_certificate(e.ring.quotient(leading), bound) is None:
            logger.debug(f"Leading restrictions do not form parameters on a class of rank {e.rank}")
            return False
    return True


def dickson_target(e: ElabRestriction, p: int, r: int, j: int, dilation: int) -> Tuple[int, Polynomial]:
    """
    Target restriction of the j-th parameter to a maximal class: the
    c_{rho,rho-j} of E raised to p^{dilation + r - rho}, or zero when j > rho.
    """
    g = 1 if p == 2 else 2
    degree = p ** dilation * dickson_degree(p, r, j, g)
    if j > e.rank:
        return degree, e.ring.zero()
    positions = polynomial_variable_positions(e.ring, g)
    if len(positions) != e.rank:
        raise DimensionMismatchError(
            f"Elementary abelian ring has {len(positions)} generators of degree {g}, expected {e.rank}"
        )
    ds = dickson_set(p, e.rank, g)
    power = p ** (dilation + r - e.rank)
    target = sympy_to_polynomial(ds.invariant(j) ** power, p, e.ring.degrees, positions)
    return degree, target


def find_parameters(
    ring: TruncatedPresentation,
    elab_data: Sequence[ElabRestriction],
    dilation: Sequence[int],
) -> ParameterSequence:
    """
    For each j, the first element (free variables zero) of the right degree
    whose restriction to every maximal class matches its Dickson target.

    :raises ResolutionTooShortError: if a target degree exceeds the truncation degree.
    :raises NoSolutionError: if some target is not attained at this dilation.
    """
    pres = ring.base
    p = pres.p
    r = max(e.rank for e in elab_data)
    if len(dilation) != r:
        raise DimensionMismatchError(f"Need {r} dilation exponents, got {len(dilation)}")
    elements = []
    for j in range(1, r + 1):
        targets = [dickson_target(e, p, r, j, dilation[j - 1]) for e in elab_data]
        degree = targets[0][0]
        if degree > ring.N:
            raise ResolutionTooShortError(
                f"Parameter {j} needs degree {degree}, presentation only reaches {ring.N}"
            )
        basis = pres.degree_basis(degree).standard[degree]
        if not basis:
            raise NoSolutionError(f"Degree {degree} of the presentation is zero")
        columns = []
        rhs = []
        for e, (_, target) in zip(elab_data, targets):
            e.ring.degree_basis(degree)
            cols = [reduced_vector(e.ring, e.restrict(pres.polynomial({m: 1})), degree) for m in basis]
            columns.append(np.array(cols, dtype=DTYPE).T.reshape(-1, len(basis)))
            rhs.append(reduced_vector(e.ring, target, degree))
        matrix = np.vstack(columns)
        solution = LinearSolver(matrix, p).solve(np.concatenate(rhs))
        if solution is None:
            raise NoSolutionError(f"No element of degree {degree} restricts to the Dickson targets (j={j})")
        z = pres.polynomial({m: int(c) for m, c in zip(basis, solution) if int(c)})
        if z.is_zero():
            raise NoSolutionError(f"Parameter {j} would be zero")
        elements.append(z)
        logger.info(f"Parameter {j}: degree {degree}, {z.to_string(pres.names)}")
    return ParameterSequence(tuple(elements))


def search_parameters(
    ring: TruncatedPresentation,
    elab_data: Sequence[ElabRestriction],
    caps: Optional[Caps] = None,
) -> Optional[ParameterSequence]:
    """
    Ascend through dilations (per parameter, lowest first) and return the
    first sequence that passes the rank-restriction check, or None.
    """
    caps = caps or Caps.from_env()
    r = max(e.rank for e in elab_data)
    for total in range(r * caps.max_dilation + 1):
        for dilation in _dilations(r, total, caps.max_dilation):
            try:
                params = find_parameters(ring, elab_data, dilation)
            except (NoSolutionError, ResolutionTooShortError) as e:
                logger.debug(f"Dilation {dilation}: {e}")
                continue
            if rank_restriction_check(params, elab_data):
                logger.info(f"Parameters found at dilation {list(dilation)}, degrees {list(params.degrees)}")
                return params
    return None


def _dilations(r: int, total: int, cap: int) -> List[Tuple[int, ...]]:
    out = [d for d in itertools.product(range(cap + 1), repeat=r) if sum(d) == total]
    return sorted(out, key=lambda d: tuple(reversed(d)))
