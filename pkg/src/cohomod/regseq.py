# src/cohomod/regseq.py

"""
Filter-regular sequences and the invariants read off them.

A type (d_0, ..., d_r) is measured on successive quotients
Q_i = H/(z_1..z_i): d_i is the top degree of the kernel of z_{i+1} on Q_i
shifted down by n_1 + ... + n_i, and d_r is the top degree of Q_r shifted
the same way. -inf is an ordinary value throughout (``math.inf`` negated),
smaller than every integer.
"""

import logging
from dataclasses import dataclass, field
from typing import List, Optional, Sequence, Tuple, Union

import numpy as np

from .config import Caps
from .errors import (
    BoundTooSmallError,
    CapExceededError,
    CertificationError,
    DimensionMismatchError,
    InadmissibleTypeError,
    NotHSOPError,
    ProvenanceError,
    SemanticInputError,
)
from .gring import (
    NEG_INF,
    BettiTable,
    GradedPresentation,
    Polynomial,
    RModulePresentation,
    betti_numbers,
    finite_length_certificate,
    r_module_structure,
)
from .linalg import DTYPE, kernel_basis_array, matmul_array, rank_array

logger = logging.getLogger(__name__)

Degree = Union[int, float]

MODE_BOUNDED = "bounded"
MODE_CERTIFIED = "certified"
INITIAL_BOUND = 8


def _fmt(v: Degree) -> str:
    return "-inf" if v == NEG_INF else str(int(v))


@dataclass(frozen=True)
class ParameterSequence:
    """Homogeneous elements z_1..z_r of one presentation's ring."""

    elements: Tuple[Polynomial, ...]

    def __post_init__(self):
        for z in self.elements:
            if z.is_zero():
                raise NotHSOPError("A parameter is zero")
            if not z.is_homogeneous():
                raise NotHSOPError(f"Parameter {z} is not homogeneous")
        if len({(z.p, z.degrees) for z in self.elements}) > 1:
            raise DimensionMismatchError("Parameters come from different rings")

    @property
    def degrees(self) -> Tuple[int, ...]:
        return tuple(z.homogeneous_degree() for z in self.elements)

    @property
    def r(self) -> int:
        return len(self.elements)

    def prefix(self, i: int) -> "ParameterSequence":
        return ParameterSequence(self.elements[:i])


@dataclass(frozen=True)
class FilterType:
    d: Tuple[Degree, ...]
    mode: str = MODE_BOUNDED
    valid_through: Optional[int] = None

    @property
    def r(self) -> int:
        return len(self.d) - 1

    @property
    def admissible(self) -> bool:
        d = self.d
        return all(d[i] >= d[i - 1] - 1 and d[i - 1] >= d[i] for i in range(1, len(d)))

    @property
    def condition_c(self) -> bool:
        """d_0 >= -1."""
        return bool(self.d) and self.d[0] >= -1

    def describe(self) -> str:
        return "(" + ", ".join(_fmt(v) for v in self.d) + ")"


@dataclass(frozen=True)
class ClassFlags:
    filter_regular: bool
    quasi: bool
    strongly: bool
    very_strongly: bool

    def as_dict(self) -> dict:
        return {
            "filter_regular": self.filter_regular,
            "quasi_regular": self.quasi,
            "strongly_quasi_regular": self.strongly,
            "very_strongly_quasi_regular": self.very_strongly,
        }


@dataclass(frozen=True)
class LocalCohomologyReport:
    a_bound: Tuple[Degree, ...]
    a_max_exact: Optional[Degree]
    reg_exact: Optional[Degree]
    depth: int
    certified: bool
    a0_exact: Optional[Degree] = None


@dataclass(frozen=True)
class KoszulReport:
    """``dims[s][t]`` = dim H^{-s,t} of the Koszul complex, 0 <= t <= window."""

    param_degrees: Tuple[int, ...]
    window: int
    dims: Tuple[Tuple[int, ...], ...]

    def dim(self, s: int, t: int) -> int:
        return self.dims[s][t]

    def nonzero(self) -> List[Tuple[int, int]]:
        return [(s, t) for s, row in enumerate(self.dims) for t, v in enumerate(row) if v]


# ---------------------------------------------------------------------------
# Measuring a type
# ---------------------------------------------------------------------------

def _kernel_top(pres: GradedPresentation, z: Polynomial, bound: int) -> Degree:
    top = NEG_INF
    for j in range(bound + 1):
        m = pres.mult_array(z, j)
        if m.shape[1] and rank_array(m, pres.p) < m.shape[1]:
            top = j
    return top


def _quotients(pres: GradedPresentation, params: ParameterSequence) -> List[GradedPresentation]:
    return [pres.quotient(params.elements[:i]) for i in range(params.r + 1)]


def measure_type(
    pres: GradedPresentation,
    params: ParameterSequence,
    bound: int,
    mode: str = MODE_BOUNDED,
) -> FilterType:
    """
    Measured minimal type of ``params`` on ``pres``, looking through ``bound``.

    In certified mode the envelope of the measurement is checked against the
    R-module structure of H (see :func:`r_module_structure`); a failed check
    labels the result bounded.

    :raises NotHSOPError: if H/(params) shows no certified finite length inside the bound,
        or (certified mode) a parameter has odd degree at odd p.
    :raises BoundTooSmallError: in certified mode, if the bound lacks head-room.
    """
    quotients = _quotients(pres, params)
    top = finite_length_certificate(quotients[-1], bound)
    if top is None:
        raise NotHSOPError(
            f"H/(parameters) does not vanish on a full window inside degree {bound}: not a system of parameters"
        )
    partial = 0
    d: List[Degree] = []
    for i, z in enumerate(params.elements):
        kt = _kernel_top(quotients[i], z, bound)
        d.append(kt - partial if kt != NEG_INF else NEG_INF)
        partial += params.degrees[i]
    d.append(top - partial if top != NEG_INF else NEG_INF)
    measured = FilterType(tuple(d), MODE_BOUNDED, bound)
    logger.debug(f"Measured type {measured.describe()} through degree {bound}")
    if mode != MODE_CERTIFIED:
        return measured
    envelope = admissible_envelope(measured)
    rmod = r_module_structure(pres, params, bound, envelope.d)
    if not rmod.certified:
        return measured
    return FilterType(measured.d, MODE_CERTIFIED, None)


def admissible_envelope(t: FilterType) -> FilterType:
    """
    Least sequence above ``t`` with d_i >= d_{i-1} - 1 and d_{i-1} >= d_i.
    """
    d = list(t.d)
    changed = True
    while changed:
        changed = False
        for i in range(len(d)):
            candidates = [d[i]]
            if i + 1 < len(d):
                candidates.append(d[i + 1])
            if i > 0:
                candidates.append(d[i - 1] - 1)
            new = max(candidates)
            if new != d[i]:
                d[i] = new
                changed = True
    return FilterType(tuple(d), t.mode, t.valid_through)


def _require_admissible(t: FilterType):
    if not t.admissible:
        raise InadmissibleTypeError(f"Type {t.describe()} is not admissible")


def classify(t: FilterType, r: int) -> ClassFlags:
    """
    :raises InadmissibleTypeError: if ``t`` is not admissible.
    """
    _require_admissible(t)
    if t.r != r:
        raise DimensionMismatchError(f"Type has length {len(t.d)}, expected {r + 1}")
    d = t.d
    quasi = all(v <= -1 for v in d)
    strongly = all(v <= -i for i, v in enumerate(d))
    very = all(d[i] <= -i - 1 for i in range(r)) and d[r] <= -r
    return ClassFlags(True, quasi, strongly, very)


def depth(pres: GradedPresentation, params: ParameterSequence, bound: int) -> int:
    """Number of leading parameters with no kernel at all on the successive quotients."""
    quotients = _quotients(pres, params)
    count = 0
    for i, z in enumerate(params.elements):
        if _kernel_top(quotients[i], z, bound) != NEG_INF:
            break
        count += 1
    return count


def a_invariant_bounds(t: FilterType) -> Tuple[Degree, ...]:
    """a^i <= d_i for an admissible type of a filter-regular sequence."""
    _require_admissible(t)
    return tuple(t.d)


def regularity_bound(t: FilterType) -> Degree:
    """Reg <= max(d_i + i)."""
    _require_admissible(t)
    return max(v + i for i, v in enumerate(t.d))


def regularity_exact(betti: BettiTable, degrees: Sequence[int]) -> Tuple[Degree, Degree]:
    """
    (max_i a^i, Reg) from the Betti numbers over k[z_1..z_r].
    """
    betas = betti.betas
    total = sum(degrees)
    a_max = max(betas) - total
    reg = max(b - i for i, b in enumerate(betas)) - sum(n - 1 for n in degrees)
    return a_max, reg


# ---------------------------------------------------------------------------
# Torsion and exact per-index values
# ---------------------------------------------------------------------------

def torsion_basis(
    pres: GradedPresentation, params: ParameterSequence, d0: Degree, bound: int
) -> List[np.ndarray]:
    """
    Degreewise bases (rows over the standard monomials) of the m-torsion of H.

    Torsion lives in degrees <= a^0 <= d_0, so an element of degree j is
    torsion exactly when z_i^{k_i} kills it with j + k_i n_i > d_0.
    """
    out: List[np.ndarray] = []
    for j in range(bound + 1):
        dim = pres.degree_basis(j).dim(j)
        if d0 == NEG_INF or j > d0 or dim == 0:
            out.append(np.zeros((0, dim), dtype=DTYPE))
            continue
        blocks = []
        for z, n in zip(params.elements, params.degrees):
            k = int((d0 - j) // n) + 1
            step = np.eye(dim, dtype=DTYPE)
            deg = j
            for _ in range(k):
                step = matmul_array(pres.mult_array(z, deg), step, pres.p)
                deg += n
            blocks.append(step)
        out.append(kernel_basis_array(np.vstack(blocks), pres.p, n_cols=dim))
    return out


def torsion_top(pres: GradedPresentation, params: ParameterSequence, d0: Degree, bound: int) -> Degree:
    """a^0 = top degree of the m-torsion of H (-inf when H has none)."""
    top = NEG_INF
    for j, rows in enumerate(torsion_basis(pres, params, d0, bound)):
        if rows.shape[0]:
            top = j
    return top


def exact_a_invariants(
    pres: GradedPresentation, params: ParameterSequence, t: FilterType, bound: int
) -> Optional[Tuple[Degree, ...]]:
    """
    Every a^i, when it can be read off exactly: finite length (r = 0), Krull
    dimension one, or Cohen-Macaulay (depth r). None otherwise.
    """
    r = params.r
    quotient = pres.quotient(params.elements)
    top = finite_length_certificate(quotient, bound)
    if top is None:
        raise NotHSOPError("H/(parameters) has no certified finite length inside the bound")
    if r == 0:
        return (top,)
    if depth(pres, params, bound) == r:
        return (NEG_INF,) * r + (top - sum(params.degrees),)
    if r == 1:
        a0 = torsion_top(pres, params, t.d[0], bound)
        torsion = [
            pres.from_vector(row, j) for j, rows in enumerate(torsion_basis(pres, params, t.d[0], bound)) for row in rows
        ]
        reduced = pres.quotient(torsion + list(params.elements))
        top_reduced = finite_length_certificate(reduced, bound)
        if top_reduced is None:
            return None
        return (a0, top_reduced - params.degrees[0])
    return None


def type_from_a_invariants(a: Sequence[Degree]) -> FilterType:
    """
    d_l = max(max_{i<=l}(a^i + i - l), -l - 1): an admissible type with
    d_0 >= -1 dominating the given a-invariants.
    """
    d = []
    for ell in range(len(a)):
        d.append(max(max(a[i] + i - ell for i in range(ell + 1)), -ell - 1))
    return FilterType(tuple(d))


def sandwich_holds(a_module: Sequence[Degree], a_quotient: Sequence[Degree], n: int) -> bool:
    """
    a^{i+1}(M) + n <= a^i(M/zM) <= max(a^i(M), a^{i+1}(M) + n) for every i,
    with z filter-regular of degree n.
    """
    for i in range(len(a_quotient)):
        upper_next = a_module[i + 1] + n if i + 1 < len(a_module) else NEG_INF
        if not upper_next <= a_quotient[i] <= max(a_module[i], upper_next):
            logger.debug(f"Sandwich fails at i={i}: {upper_next} / {a_quotient[i]} / {a_module[i]}")
            return False
    return True


def betti_bound_violations(betti: BettiTable, t: FilterType, degrees: Sequence[int]) -> List[int]:
    """Homological degrees j with beta_j > d_{r-j} + sum n."""
    total = sum(degrees)
    r = len(degrees)
    return [j for j, b in enumerate(betti.betas) if b > t.d[r - j] + total]


# ---------------------------------------------------------------------------
# Koszul complex
# ---------------------------------------------------------------------------

def _subsets(r: int, s: int) -> List[Tuple[int, ...]]:
    out: List[Tuple[int, ...]] = []

    def rec(start: int, chosen: List[int]):
        if len(chosen) == s:
            out.append(tuple(chosen))
            return
        for i in range(start, r):
            chosen.append(i)
            rec(i + 1, chosen)
            chosen.pop()

    rec(0, [])
    return out


def _koszul_differential(pres: GradedPresentation, params: ParameterSequence, s: int, t: int):
    """Matrix of K^{-s,t} -> K^{-s+1,t}, with the sizes of both sides."""
    p = pres.p
    degrees = params.degrees
    r = params.r

    def block_dims(k: int):
        subs = _subsets(r, k)
        dims = [pres.degree_basis(max(t, 0)).dim(t - sum(degrees[i] for i in sub)) for sub in subs]
        return subs, dims

    src_subs, src_dims = block_dims(s)
    dst_subs, dst_dims = block_dims(s - 1)
    dst_offset = np.concatenate([[0], np.cumsum(dst_dims)]).astype(int) if dst_dims else np.zeros(1, dtype=int)
    src_offset = np.concatenate([[0], np.cumsum(src_dims)]).astype(int) if src_dims else np.zeros(1, dtype=int)
    dst_index = {sub: k for k, sub in enumerate(dst_subs)}
    out = np.zeros((int(sum(dst_dims)), int(sum(src_dims))), dtype=DTYPE)
    for k, sub in enumerate(src_subs):
        if not src_dims[k]:
            continue
        base = t - sum(degrees[i] for i in sub)
        for pos, i in enumerate(sub):
            rest = sub[:pos] + sub[pos + 1:]
            m = pres.mult_array(params.elements[i], base)
            sign = 1 if pos % 2 == 0 else p - 1
            row = dst_offset[dst_index[rest]]
            out[row : row + m.shape[0], src_offset[k] : src_offset[k] + src_dims[k]] = (sign * m) % p
    return out, int(sum(src_dims))


def koszul_cohomology(pres: GradedPresentation, params: ParameterSequence, window: int) -> KoszulReport:
    """
    dim H^{-s,t} of K*(H; z_1..z_r) for 0 <= s <= r, 0 <= t <= window.

    The Koszul degree is horizontal and negative; K^{-s} is H shifted up by
    the degrees of the chosen parameters.
    """
    r = params.r
    p = pres.p
    pres.degree_basis(window)
    dims: List[Tuple[int, ...]] = []
    for s in range(r + 1):
        row = []
        for t in range(window + 1):
            if s == 0:
                size = pres.degree_basis(t).dim(t)
                rank_out = 0
            else:
                mat, size = _koszul_differential(pres, params, s, t)
                rank_out = rank_array(mat, p) if mat.size else 0
            if s < r:
                mat_in, _ = _koszul_differential(pres, params, s + 1, t)
                rank_in = rank_array(mat_in, p) if mat_in.size else 0
            else:
                rank_in = 0
            row.append(size - rank_out - rank_in)
        dims.append(tuple(row))
    logger.debug(f"Koszul table through t={window}: nonzero at {[(s, t) for s, rr in enumerate(dims) for t, v in enumerate(rr) if v]}")
    return KoszulReport(tuple(params.degrees), window, tuple(dims))


def koszul_vanishing_violations(report: KoszulReport, t: FilterType) -> List[Tuple[int, int]]:
    """
    Cells (s, t) with H^{-s,t} nonzero although t > n_1+..+n_s + d_{r-s}.
    """
    r = len(report.param_degrees)
    bad = []
    for s, row in enumerate(report.dims):
        if s == 0:
            limit = sum(report.param_degrees) + t.d[r]
        else:
            limit = sum(report.param_degrees[:s]) + t.d[r - s]
        bad.extend((s, tt) for tt, v in enumerate(row) if v and tt > limit)
    return bad


# ---------------------------------------------------------------------------
# Group cohomology sharpening
# ---------------------------------------------------------------------------

def sharpen_group_type(t: FilterType, r: int, group_cohomology: bool = False) -> FilterType:
    """
    Tighten the type of a system of parameters of a full group cohomology
    ring: (d_0..d_{r-2}, d_{r-2}-1, d_{r-2}-1) for r >= 2 and
    (d_0..d_{r-3}, d_{r-3}-1, d_{r-3}-2, d_{r-3}-2) for r >= 3.

    :raises ProvenanceError: unless ``group_cohomology`` is set.
    """
    if not group_cohomology:
        raise ProvenanceError("Type sharpening holds only for cohomology rings of finite groups")
    if t.r != r:
        raise DimensionMismatchError(f"Type has length {len(t.d)}, expected {r + 1}")
    d = list(t.d)
    candidates = []
    if r >= 2:
        base = d[r - 2]
        candidates.append(d[: r - 1] + [base - 1, base - 1])
    if r >= 3:
        base = d[r - 3]
        candidates.append(d[: r - 2] + [base - 1, base - 2, base - 2])
    for cand in candidates:
        d = [min(a, b) for a, b in zip(d, cand)]
    return admissible_envelope(FilterType(tuple(d), t.mode, t.valid_through))


# ---------------------------------------------------------------------------
# Full analysis
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class RingAnalysis:
    measured: FilterType
    envelope: FilterType
    flags: ClassFlags
    report: LocalCohomologyReport
    bound: int
    mode: str
    betti: Optional[BettiTable] = None
    rmodule: Optional[RModulePresentation] = field(default=None, repr=False)
    a_exact: Optional[Tuple[Degree, ...]] = None

    @property
    def condition_c(self) -> bool:
        return self.envelope.condition_c

    def strongly_matches_reg(self) -> Optional[bool]:
        """Reg <= 0 exactly when the sequence is strongly quasi-regular."""
        if self.report.reg_exact is None:
            return None
        return (self.report.reg_exact <= 0) == self.flags.strongly


def analyze_ring(
    pres: GradedPresentation,
    params: ParameterSequence,
    bound: Optional[int] = None,
    mode: str = MODE_CERTIFIED,
    caps: Optional[Caps] = None,
) -> RingAnalysis:
    """
    Measure, classify and (in certified mode) compute exact regularity,
    doubling the bound until the certificate has head-room.

    :raises CapExceededError: if the bound would pass ``caps.max_bound``.
    :raises NotHSOPError: if ``params`` never shows a finite-length quotient,
        or (certified mode) a parameter has odd degree at odd p.
    """
    caps = caps or Caps.from_env()
    if mode not in (MODE_BOUNDED, MODE_CERTIFIED):
        raise SemanticInputError(f"Unknown mode {mode!r}")
    current = bound if bound is not None else max(INITIAL_BOUND, 2 * sum(params.degrees))
    while True:
        if current > caps.max_bound:
            raise CapExceededError(f"Analysis bound {current} exceeds the cap {caps.max_bound}")
        try:
            measured = measure_type(pres, params, current, MODE_BOUNDED)
        except NotHSOPError:
            if bound is not None or 2 * current > caps.max_bound:
                raise
            current *= 2
            continue
        envelope = admissible_envelope(measured)
        if mode == MODE_BOUNDED:
            break
        try:
            rmod = r_module_structure(pres, params, current, envelope.d)
        except BoundTooSmallError as e:
            new = max(2 * current, e.required)
            logger.info(f"Bound {current} too small for certification, retrying at {new}")
            current = new
            continue
        if rmod.certified:
            break
        if 2 * current > caps.max_bound:
            logger.warning(f"Certification failed through the bound cap: {list(rmod.reasons)}")
            mode = MODE_BOUNDED
            break
        current *= 2

    flags = classify(envelope, params.r)
    dep = depth(pres, params, current)
    a0 = torsion_top(pres, params, envelope.d[0], current)
    betti = None
    rmodule = None
    a_max = reg = None
    if mode == MODE_CERTIFIED:
        rmodule = rmod
        betti = betti_numbers(rmod)
        a_max, reg = regularity_exact(betti, params.degrees)
        envelope = FilterType(envelope.d, MODE_CERTIFIED, None)
        measured = FilterType(measured.d, MODE_CERTIFIED, None)
    else:
        envelope = FilterType(envelope.d, MODE_BOUNDED, current)
    report = LocalCohomologyReport(
        a_bound=a_invariant_bounds(envelope),
        a_max_exact=a_max,
        reg_exact=reg,
        depth=dep,
        certified=mode == MODE_CERTIFIED,
        a0_exact=a0 if mode == MODE_CERTIFIED else None,
    )
    a_exact = exact_a_invariants(pres, params, envelope, current) if mode == MODE_CERTIFIED else None
    logger.info(
        f"Analysis ({mode}, bound {current}): type {measured.describe()}, envelope {envelope.describe()}, "
        f"depth {dep}, Reg {reg if reg is not None else 'unknown'}"
    )
    return RingAnalysis(
        measured=measured,
        envelope=envelope,
        flags=flags,
        report=report,
        bound=current,
        mode=mode,
        betti=betti,
        rmodule=rmodule,
        a_exact=a_exact,
    )


def require_certified(analysis: RingAnalysis) -> RingAnalysis:
    if analysis.mode != MODE_CERTIFIED:
        raise CertificationError("Filter-regularity is only bounded, not certified")
    return analysis
