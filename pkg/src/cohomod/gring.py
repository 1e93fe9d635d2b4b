# src/cohomod/gring.py

"""
Finitely presented graded-commutative F_p-algebras.

Polynomials are dictionaries from exponent tuples to coefficients. Products
follow the sign rule ab = (-1)^{|a||b|} ba; at odd p a generator of odd
degree squares to zero. Every question asked of a presentation is degree
bounded, so ideals are handled one degree at a time with Macaulay matrices:
monomials of a degree are ordered lexicographically, largest first, and the
rref pivots of the ideal's degree-n part are its leading monomials. The
remaining (standard) monomials form the normal-form basis.
"""

import logging
import math
from dataclasses import dataclass, field
from functools import lru_cache
from typing import TYPE_CHECKING, Dict, Iterable, List, Mapping, Optional, Sequence, Tuple, Union

import numpy as np

from .errors import BoundTooSmallError, CertificationError, DimensionMismatchError, NotHSOPError, SemanticInputError
from .linalg import DTYPE, FpMatrix, kernel_basis_array, matmul_array, rref_array, span_complement

if TYPE_CHECKING:
    from .regseq import ParameterSequence

logger = logging.getLogger(__name__)

Monomial = Tuple[int, ...]
NEG_INF = -math.inf


# ---------------------------------------------------------------------------
# Monomials
# ---------------------------------------------------------------------------

@lru_cache(maxsize=None)
def monomials_of_degree(degrees: Tuple[int, ...], n: int, exterior: Tuple[bool, ...] = ()) -> Tuple[Monomial, ...]:
    """
    Exponent vectors of weighted degree ``n``, largest first in lex order.

    ``exterior[i]`` caps the exponent of generator i at one.
    """
    k = len(degrees)
    ext = exterior or (False,) * k
    out: List[Monomial] = []

    def rec(i: int, remaining: int, prefix: List[int]):
        if i == k:
            if remaining == 0:
                out.append(tuple(prefix))
            return
        d = degrees[i]
        top = remaining // d
        if ext[i]:
            top = min(top, 1)
        for e in range(top, -1, -1):
            prefix.append(e)
            rec(i + 1, remaining - e * d, prefix)
            prefix.pop()

    if n >= 0:
        rec(0, n, [])
    return tuple(out)


def monomial_degree(m: Monomial, degrees: Sequence[int]) -> int:
    return sum(e * d for e, d in zip(m, degrees))


def monomial_product(
    a: Monomial, b: Monomial, degrees: Sequence[int], p: int
) -> Optional[Tuple[int, Monomial]]:
    """
    ``a * b`` in normal order as (sign, monomial), or None when it vanishes
    (an odd generator squared at odd p).
    """
    prod = tuple(x + y for x, y in zip(a, b))
    if p == 2:
        return 1, prod
    odd = [d % 2 == 1 for d in degrees]
    if any(o and e > 1 for o, e in zip(odd, prod)):
        return None
    # moving each odd factor of b past the odd factors of a with larger index
    swaps = 0
    running = 0
    for i in range(len(degrees) - 1, -1, -1):
        if odd[i]:
            swaps += b[i] * running
            running += a[i]
    return (-1 if swaps % 2 else 1), prod


# ---------------------------------------------------------------------------
# Polynomial
# ---------------------------------------------------------------------------

class Polynomial:
    """
    An element of the free graded-commutative algebra on generators of the
    given degrees over F_p.
    """

    __slots__ = ("terms", "p", "degrees")

    def __init__(self, terms: Mapping[Monomial, int], p: int, degrees: Sequence[int]):
        self.p = p
        self.degrees = tuple(degrees)
        odd_ext = [p != 2 and d % 2 == 1 for d in self.degrees]
        clean: Dict[Monomial, int] = {}
        for mono, c in terms.items():
            mono = tuple(int(e) for e in mono)
            if len(mono) != len(self.degrees):
                raise DimensionMismatchError(
                    f"Monomial {mono} has {len(mono)} exponents, expected {len(self.degrees)}"
                )
            if any(o and e > 1 for o, e in zip(odd_ext, mono)):
                continue
            c = (clean.get(mono, 0) + int(c)) % p
            if c:
                clean[mono] = c
            else:
                clean.pop(mono, None)
        self.terms = clean

    @classmethod
    def zero(cls, p: int, degrees: Sequence[int]) -> "Polynomial":
        return cls({}, p, degrees)

    @classmethod
    def one(cls, p: int, degrees: Sequence[int]) -> "Polynomial":
        return cls({(0,) * len(degrees): 1}, p, degrees)

    @classmethod
    def generator(cls, i: int, p: int, degrees: Sequence[int]) -> "Polynomial":
        mono = tuple(int(j == i) for j in range(len(degrees)))
        return cls({mono: 1}, p, degrees)

    @classmethod
    def monomial(cls, mono: Monomial, p: int, degrees: Sequence[int], coeff: int = 1) -> "Polynomial":
        return cls({tuple(mono): coeff}, p, degrees)

    def is_zero(self) -> bool:
        return not self.terms

    def degree_set(self) -> set:
        return {monomial_degree(m, self.degrees) for m in self.terms}

    def homogeneous_degree(self) -> int:
        """
        :raises SemanticInputError: if the polynomial mixes degrees (or is zero).
        """
        ds = self.degree_set()
        if len(ds) != 1:
            raise SemanticInputError(f"Polynomial {self} is not homogeneous of a single degree")
        return ds.pop()

    def is_homogeneous(self) -> bool:
        return len(self.degree_set()) <= 1

    def _check(self, other: "Polynomial"):
        if self.p != other.p or self.degrees != other.degrees:
            raise DimensionMismatchError("Polynomials live in different rings")

    def __add__(self, other: "Polynomial") -> "Polynomial":
        self._check(other)
        terms = dict(self.terms)
        for m, c in other.terms.items():
            terms[m] = terms.get(m, 0) + c
        return Polynomial(terms, self.p, self.degrees)

    def __neg__(self) -> "Polynomial":
        return self.scale(-1)

    def __sub__(self, other: "Polynomial") -> "Polynomial":
        return self + (-other)

    def scale(self, c: int) -> "Polynomial":
        return Polynomial({m: v * c for m, v in self.terms.items()}, self.p, self.degrees)

    def __mul__(self, other: "Polynomial") -> "Polynomial":
        self._check(other)
        terms: Dict[Monomial, int] = {}
        for a, ca in self.terms.items():
            for b, cb in other.terms.items():
                prod = monomial_product(a, b, self.degrees, self.p)
                if prod is None:
                    continue
                sign, m = prod
                terms[m] = terms.get(m, 0) + sign * ca * cb
        return Polynomial(terms, self.p, self.degrees)

    def __pow__(self, k: int) -> "Polynomial":
        result = Polynomial.one(self.p, self.degrees)
        base = self
        while k:
            if k & 1:
                result = result * base
            base = base * base
            k >>= 1
        return result

    def __eq__(self, other) -> bool:
        if not isinstance(other, Polynomial):
            return NotImplemented
        return self.p == other.p and self.degrees == other.degrees and self.terms == other.terms

    def __hash__(self) -> int:
        return hash((self.p, self.degrees, tuple(sorted(self.terms.items()))))

    def sorted_terms(self) -> List[Tuple[Monomial, int]]:
        return sorted(self.terms.items(), reverse=True)

    def to_string(self, names: Optional[Sequence[str]] = None) -> str:
        if not self.terms:
            return "0"
        names = names or [f"g{i + 1}" for i in range(len(self.degrees))]
        parts = []
        for mono, c in self.sorted_terms():
            factors = [n if e == 1 else f"{n}^{e}" for n, e in zip(names, mono) if e]
            body = "*".join(factors)
            if not body:
                parts.append(str(c))
            elif c == 1:
                parts.append(body)
            else:
                parts.append(f"{c}*{body}")
        return " + ".join(parts)

    def __repr__(self) -> str:
        return f"Polynomial({self.to_string()}, p={self.p})"


# ---------------------------------------------------------------------------
# Presentations and degreewise bases
# ---------------------------------------------------------------------------

class DegreeBasis:
    """
    Normal-form data of a presentation, valid through :attr:`through`.

    For each degree n: every monomial of degree n (largest first), the rref
    basis of the ideal's degree-n part over those monomials, the standard
    monomials (non-pivots) and the reduction matrix taking a monomial to its
    normal-form coordinates.
    """

    def __init__(self, pres: "GradedPresentation"):
        self.pres = pres
        self.through = -1
        self.monomials: List[Tuple[Monomial, ...]] = []
        self.index: List[Dict[Monomial, int]] = []
        self.ideal: List[np.ndarray] = []
        self.standard: List[Tuple[Monomial, ...]] = []
        self.standard_index: List[Dict[Monomial, int]] = []
        self.reduction: List[np.ndarray] = []

    def _shift(self, k: int, n: int) -> np.ndarray:
        """Matrix (monomials of n - d_k) x (monomials of n) of left multiplication by x_k."""
        pres = self.pres
        d = pres.degrees[k]
        src = self.monomials[n - d]
        out = np.zeros((len(src), len(self.monomials[n])), dtype=DTYPE)
        gen = tuple(int(j == k) for j in range(len(pres.degrees)))
        for i, m in enumerate(src):
            prod = monomial_product(gen, m, pres.degrees, pres.p)
            if prod is not None:
                sign, mono = prod
                out[i, self.index[n][mono]] = sign % pres.p
        return out

    def ensure(self, through: int) -> "DegreeBasis":
        pres = self.pres
        p = pres.p
        for n in range(self.through + 1, through + 1):
            monos = monomials_of_degree(pres.degrees, n, pres.exterior)
            self.monomials.append(monos)
            self.index.append({m: i for i, m in enumerate(monos)})
            blocks = []
            for k, d in enumerate(pres.degrees):
                if d <= n and self.ideal[n - d].shape[0]:
                    blocks.append(matmul_array(self.ideal[n - d], self._shift(k, n), p))
            for rel in pres.relations_of_degree(n):
                vec = np.zeros((1, len(monos)), dtype=DTYPE)
                for mono, c in rel.terms.items():
                    vec[0, self.index[n][mono]] = c
                blocks.append(vec)
            if blocks:
                reduced, pivots = rref_array(np.vstack(blocks), p)
                rows = reduced[: len(pivots)]
            else:
                rows, pivots = np.zeros((0, len(monos)), dtype=DTYPE), []
            self.ideal.append(rows)
            pivot_set = set(pivots)
            std_cols = [c for c in range(len(monos)) if c not in pivot_set]
            std = tuple(monos[c] for c in std_cols)
            self.standard.append(std)
            self.standard_index.append({m: i for i, m in enumerate(std)})
            red = np.zeros((len(monos), len(std)), dtype=DTYPE)
            for j, c in enumerate(std_cols):
                red[c, j] = 1
            for r, pc in enumerate(pivots):
                red[pc] = (-rows[r, std_cols]) % p
            self.reduction.append(red)
            logger.debug(f"Degree {n}: {len(monos)} monomials, ideal rank {len(pivots)}, dim {len(std)}")
        self.through = max(self.through, through)
        return self

    def dim(self, n: int) -> int:
        if n < 0:
            return 0
        self.ensure(n)
        return len(self.standard[n])


@dataclass(frozen=True, eq=False)
class GradedPresentation:
    """
    Generators (name, degree >= 1) and homogeneous relations over F_p.
    """

    p: int
    generators: Tuple[Tuple[str, int], ...]
    relations: Tuple[Polynomial, ...] = ()
    _cache: Dict = field(default_factory=dict, repr=False)

    def __post_init__(self):
        for name, d in self.generators:
            if d < 1:
                raise SemanticInputError(f"Generator {name} has degree {d}; degrees must be positive")
        for rel in self.relations:
            if rel.p != self.p or rel.degrees != self.degrees:
                raise DimensionMismatchError("Relation does not belong to this presentation's ring")
            if rel.is_zero():
                continue
            if not rel.is_homogeneous():
                raise SemanticInputError(f"Relation {rel.to_string(self.names)} is not homogeneous")
            if rel.homogeneous_degree() == 0:
                raise SemanticInputError("A relation of degree zero would kill the unit")

    @property
    def degrees(self) -> Tuple[int, ...]:
        return tuple(d for _, d in self.generators)

    @property
    def names(self) -> Tuple[str, ...]:
        return tuple(n for n, _ in self.generators)

    @property
    def exterior(self) -> Tuple[bool, ...]:
        return tuple(self.p != 2 and d % 2 == 1 for d in self.degrees)

    @property
    def max_generator_degree(self) -> int:
        return max(self.degrees, default=1)

    def gen(self, i: int) -> Polynomial:
        return Polynomial.generator(i, self.p, self.degrees)

    def one(self) -> Polynomial:
        return Polynomial.one(self.p, self.degrees)

    def zero(self) -> Polynomial:
        return Polynomial.zero(self.p, self.degrees)

    def polynomial(self, terms: Mapping[Monomial, int]) -> Polynomial:
        return Polynomial(terms, self.p, self.degrees)

    def relations_of_degree(self, n: int) -> List[Polynomial]:
        rels = self._cache.get("rels_by_degree")
        if rels is None:
            rels = {}
            for rel in self.relations:
                if not rel.is_zero():
                    rels.setdefault(rel.homogeneous_degree(), []).append(rel)
            self._cache["rels_by_degree"] = rels
        return rels.get(n, [])

    def degree_basis(self, through: int) -> DegreeBasis:
        basis = self._cache.get("basis")
        if basis is None:
            basis = DegreeBasis(self)
            self._cache["basis"] = basis
        return basis.ensure(through)

    def hilbert(self, through: int) -> List[int]:
        basis = self.degree_basis(through)
        return [len(basis.standard[n]) for n in range(through + 1)]

    def normal_form_vector(self, poly: Polynomial, n: int) -> np.ndarray:
        """Coordinates of the degree-n part of ``poly`` over the standard monomials."""
        basis = self.degree_basis(n)
        vec = np.zeros(len(basis.standard[n]), dtype=DTYPE)
        for mono, c in poly.terms.items():
            if monomial_degree(mono, self.degrees) == n:
                vec = vec + c * basis.reduction[n][basis.index[n][mono]]
        return vec % self.p

    def from_vector(self, vec: Iterable[int], n: int) -> Polynomial:
        basis = self.degree_basis(n)
        return self.polynomial({m: int(c) for m, c in zip(basis.standard[n], vec) if int(c) % self.p})

    def normal_form(self, poly: Polynomial) -> Polynomial:
        out = self.zero()
        for n in sorted(poly.degree_set()):
            out = out + self.from_vector(self.normal_form_vector(poly, n), n)
        return out

    def is_zero(self, poly: Polynomial) -> bool:
        return self.normal_form(poly).is_zero()

    def mult_matrix(self, elem: Polynomial, from_degree: int) -> FpMatrix:
        """
        Matrix of multiplication by ``elem`` from degree n to n + |elem|.

        :raises SemanticInputError: if ``elem`` is not homogeneous.
        """
        return FpMatrix(self.mult_array(elem, from_degree), self.p)

    def mult_array(self, elem: Polynomial, from_degree: int) -> np.ndarray:
        if elem.is_zero():
            raise SemanticInputError("Multiplication by zero has no degree")
        d = elem.homogeneous_degree()
        key = ("mult", elem, from_degree)
        if key in self._cache:
            return self._cache[key]
        basis = self.degree_basis(from_degree + d)
        cols = []
        for mono in basis.standard[from_degree]:
            prod = elem * Polynomial.monomial(mono, self.p, self.degrees)
            cols.append(self.normal_form_vector(prod, from_degree + d))
        out = (
            np.array(cols, dtype=DTYPE).T
            if cols
            else np.zeros((len(basis.standard[from_degree + d]), 0), dtype=DTYPE)
        )
        self._cache[key] = out
        return out

    def quotient(self, elems: Sequence[Polynomial]) -> "GradedPresentation":
        """H / (elems), sharing generators."""
        extra = tuple(e for e in elems if not e.is_zero())
        return GradedPresentation(self.p, self.generators, self.relations + extra)

    def with_relations(self, relations: Sequence[Polynomial]) -> "GradedPresentation":
        return GradedPresentation(self.p, self.generators, tuple(relations))

    def describe(self) -> str:
        gens = ", ".join(f"{n}({d})" for n, d in self.generators)
        rels = ", ".join(r.to_string(self.names) for r in self.relations)
        return f"F_{self.p}[{gens}]" + (f" / ({rels})" if rels else "")


@dataclass(frozen=True)
class TruncatedPresentation:
    """A presentation whose generators and relations all have degree <= N."""

    base: GradedPresentation
    N: int

    def __post_init__(self):
        if any(d > self.N for d in self.base.degrees):
            raise SemanticInputError(f"Generator above the truncation degree {self.N}")
        if any(not r.is_zero() and r.homogeneous_degree() > self.N for r in self.base.relations):
            raise SemanticInputError(f"Relation above the truncation degree {self.N}")


def substitute(poly: Polynomial, images: Sequence[Polynomial], target: GradedPresentation) -> Polynomial:
    """
    Image of ``poly`` under the ring map sending generator i to ``images[i]``,
    reduced to normal form in ``target``.
    """
    if len(images) != len(poly.degrees):
        raise DimensionMismatchError(f"Need {len(poly.degrees)} images, got {len(images)}")
    out = target.zero()
    powers: Dict[Tuple[int, int], Polynomial] = {}
    for mono, c in poly.terms.items():
        term = target.one().scale(c)
        for i, e in enumerate(mono):
            if e:
                if (i, e) not in powers:
                    powers[(i, e)] = images[i] ** e
                term = term * powers[(i, e)]
        out = out + term
    return target.normal_form(out)


def finite_length_certificate(pres: GradedPresentation, through: int) -> Optional[int]:
    """
    Top nonzero degree, certified by a run of ``max generator degree``
    consecutive zero degrees inside ``through``; None when no such run exists.

    Every monomial of degree above the run has a divisor of degree inside it,
    so a zero run forces zero in every higher degree.
    """
    width = pres.max_generator_degree
    dims = pres.hilbert(through)
    run = 0
    for n, dim in enumerate(dims):
        run = run + 1 if dim == 0 else 0
        if run == width:
            start = n - width + 1
            return max(m for m in range(start) if dims[m]) if start > 0 else NEG_INF
    return None


# ---------------------------------------------------------------------------
# Module structure over a Noether normalization
# ---------------------------------------------------------------------------

class _FreeRModule:
    """Graded free module over R = k[z_1..z_r] with the given generator degrees."""

    def __init__(self, gen_degrees: Sequence[int], param_degrees: Tuple[int, ...], p: int):
        self.gen_degrees = list(gen_degrees)
        self.param_degrees = param_degrees
        self.p = p
        self._bases: Dict[int, Tuple[List[Tuple[int, Monomial]], Dict[Tuple[int, Monomial], int]]] = {}

    def basis(self, t: int):
        if t not in self._bases:
            items = [
                (g, m)
                for g, gd in enumerate(self.gen_degrees)
                for m in monomials_of_degree(self.param_degrees, t - gd)
            ]
            self._bases[t] = (items, {it: i for i, it in enumerate(items)})
        return self._bases[t]

    def dim(self, t: int) -> int:
        return len(self.basis(t)[0]) if t >= 0 else 0

    def act(self, i: int, t: int) -> np.ndarray:
        src, _ = self.basis(t)
        _, dst_index = self.basis(t + self.param_degrees[i])
        out = np.zeros((len(dst_index), len(src)), dtype=DTYPE)
        for c, (g, m) in enumerate(src):
            moved = tuple(e + (j == i) for j, e in enumerate(m))
            out[dst_index[(g, moved)], c] = 1
        return out


class _RingAsRModule:
    def __init__(self, pres: GradedPresentation, params: Sequence[Polynomial]):
        self.pres = pres
        self.params = list(params)
        self.param_degrees = tuple(z.homogeneous_degree() for z in params)

    def dim(self, t: int) -> int:
        return self.pres.degree_basis(t).dim(t) if t >= 0 else 0

    def act(self, i: int, t: int) -> np.ndarray:
        return self.pres.mult_array(self.params[i], t)


def _map_matrix(free: _FreeRModule, images: Sequence[np.ndarray], target, t: int) -> np.ndarray:
    """Degree-t matrix of the R-map ``free -> target`` sending generator g to ``images[g]``."""
    src, _ = free.basis(t)
    p = free.p
    cache: Dict[Tuple[int, Monomial], np.ndarray] = {}

    def value(g: int, m: Monomial) -> np.ndarray:
        key = (g, m)
        if key not in cache:
            if not any(m):
                cache[key] = images[g] % p
            else:
                i = next(j for j, e in enumerate(m) if e)
                prev = tuple(e - (j == i) for j, e in enumerate(m))
                deg = free.gen_degrees[g] + monomial_degree(prev, free.param_degrees)
                cache[key] = matmul_array(target.act(i, deg), value(g, prev), p)
        return cache[key]

    cols = [value(g, m) for g, m in src]
    if not cols:
        return np.zeros((target.dim(t), 0), dtype=DTYPE)
    return np.array(cols, dtype=DTYPE).T


def _minimal_generators(module, kernels: Dict[int, np.ndarray], bound: int, p: int):
    """
    Degrees and vectors of minimal generators of a submodule given degreewise
    by ``kernels[t]`` (rows in ``module`` coordinates): K^t modulo sum z_i K^{t-n_i}.
    """
    degrees: List[int] = []
    vectors: List[np.ndarray] = []
    for t in range(bound + 1):
        rows = kernels[t]
        if rows.shape[0] == 0:
            continue
        moved = [
            matmul_array(kernels[t - n], module.act(i, t - n).T, p)
            for i, n in enumerate(module.param_degrees)
            if t - n >= 0 and kernels[t - n].shape[0]
        ]
        sub = np.vstack(moved) if moved else np.zeros((0, rows.shape[1]), dtype=DTYPE)
        for pick in span_complement(sub, rows, p):
            degrees.append(t)
            vectors.append(rows[pick].copy())
    return degrees, vectors


@dataclass(frozen=True)
class BettiTable:
    """Largest generator degree per homological degree; -inf for zero modules."""

    betas: Tuple[Union[int, float], ...]

    def __getitem__(self, j: int) -> Union[int, float]:
        return self.betas[j]

    def __len__(self) -> int:
        return len(self.betas)


@dataclass(frozen=True)
class RModulePresentation:
    """
    Minimal resolution of H over R = k[params], computed through ``bound``.

    ``generator_degrees[j]`` lists the generator degrees of F_j; ``syzygies[j]``
    (j >= 1) holds the images of those generators in F_{j-1}.
    """

    param_degrees: Tuple[int, ...]
    generator_degrees: Tuple[Tuple[int, ...], ...]
    syzygies: Tuple[Tuple[np.ndarray, ...], ...]
    bound: int
    hilbert_identity: bool
    exact_through_bound: bool
    certified: bool
    reasons: Tuple[str, ...] = ()

    @property
    def r(self) -> int:
        return len(self.param_degrees)


def _free_hilbert(gen_degrees: Sequence[int], param_degrees: Tuple[int, ...], t: int) -> int:
    return sum(len(monomials_of_degree(param_degrees, t - g)) for g in gen_degrees if t >= g)


def r_module_structure(
    pres: GradedPresentation,
    params: "ParameterSequence",
    bound: int,
    type_d: Optional[Sequence[Union[int, float]]] = None,
) -> RModulePresentation:
    """
    Minimal R-module generators of H and their syzygies through homological
    degree r, degree by degree up to ``bound``.

    With ``type_d`` (an admissible type of the parameters) the result is
    certified when: the quotient by the parameters has certified finite
    length inside the bound, the Betti numbers respect beta_j <= d_{r-j} + sum n,
    beta_0 respects max(d_i + i) + sum(n_i - 1), the alternating Hilbert
    identity holds and F_{r+1} vanishes through the bound.

    :raises BoundTooSmallError: if ``bound < d_0 + sum n + max n``.
    :raises NotHSOPError: for odd p with an odd-degree parameter.
    """
    p = pres.p
    elements = list(params.elements)
    n = tuple(params.degrees)
    r = len(n)
    if p != 2 and any(d % 2 for d in n):
        raise NotHSOPError("Odd-degree parameters are nilpotent at odd p")
    total = sum(n)
    if type_d is not None:
        required = int(type_d[0] + total + max(n, default=0))
        if bound < required:
            raise BoundTooSmallError(
                f"Bound {bound} is below the required {required} for certification", required
            )

    ring = _RingAsRModule(pres, elements)
    pres.degree_basis(bound + max(n, default=0))

    # F_0: lifts of a basis of H / (params) H
    kernels = {t: np.eye(ring.dim(t), dtype=DTYPE) for t in range(bound + 1)}
    gen_degrees, gen_vectors = _minimal_generators(ring, kernels, bound, p)
    all_degrees = [tuple(gen_degrees)]
    all_syzygies: List[Tuple[np.ndarray, ...]] = [tuple(gen_vectors)]
    target = ring
    free = _FreeRModule(gen_degrees, n, p)
    images = gen_vectors
    exact = True
    for j in range(r + 1):
        kernels = {}
        for t in range(bound + 1):
            m = _map_matrix(free, images, target, t)
            kernels[t] = (
                kernel_basis_array(m, p, n_cols=free.dim(t))
                if free.dim(t)
                else np.zeros((0, 0), dtype=DTYPE)
            )
        next_degrees, next_vectors = _minimal_generators(free, kernels, bound, p)
        if j == r:
            exact = not next_degrees
            break
        all_degrees.append(tuple(next_degrees))
        all_syzygies.append(tuple(next_vectors))
        target, images = free, next_vectors
        free = _FreeRModule(next_degrees, n, p)

    hilbert_ok = all(
        sum((-1) ** j * _free_hilbert(all_degrees[j], n, t) for j in range(len(all_degrees)))
        == ring.dim(t)
        for t in range(bound + 1)
    )

    reasons: List[str] = []
    certified = False
    if type_d is not None:
        betas = [max(ds) if ds else NEG_INF for ds in all_degrees]
        quotient_top = finite_length_certificate(pres.quotient(elements), bound)
        if quotient_top is None:
            reasons.append("quotient by the parameters has no certified finite length inside the bound")
        for jj, beta in enumerate(betas):
            if beta > type_d[r - jj] + total:
                reasons.append(f"beta_{jj} = {beta} exceeds d_{r - jj} + sum(n) = {type_d[r - jj] + total}")
        top_bound = max(type_d[i] + i for i in range(r + 1)) + sum(d - 1 for d in n)
        if betas[0] > top_bound:
            reasons.append(f"beta_0 = {betas[0]} exceeds max(d_i + i) + sum(n_i - 1) = {top_bound}")
        if not hilbert_ok:
            reasons.append("alternating Hilbert series identity fails inside the bound")
        if not exact:
            reasons.append(f"syzygies in homological degree {r + 1} inside the bound")
        certified = not reasons
        if reasons:
            logger.warning(f"R-module structure not certified: {'; '.join(reasons)}")
    else:
        reasons.append("no admissible type supplied: bounded mode")

    logger.info(
        f"R-module structure through degree {bound}: generator degrees "
        f"{[list(d) for d in all_degrees]}, certified={certified}"
    )
    return RModulePresentation(
        param_degrees=n,
        generator_degrees=tuple(all_degrees),
        syzygies=tuple(all_syzygies),
        bound=bound,
        hilbert_identity=hilbert_ok,
        exact_through_bound=exact,
        certified=certified,
        reasons=tuple(reasons),
    )


def betti_numbers(rmod: RModulePresentation, allow_bounded: bool = False) -> BettiTable:
    """
    beta_j for j = 0..r.

    :raises CertificationError: if ``rmod`` is not certified and ``allow_bounded`` is false.
    """
    if not rmod.certified and not allow_bounded:
        raise CertificationError(f"Betti numbers need a certified R-module structure: {list(rmod.reasons)}")
    betas = [max(ds) if ds else NEG_INF for ds in rmod.generator_degrees]
    betas += [NEG_INF] * (rmod.r + 1 - len(betas))
    return BettiTable(tuple(betas))
