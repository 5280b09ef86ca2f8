"""Closed-form extendibility values, dual minimax solvers, certificates.

Werner, isotropic and Brauer two-qudit states admit exact optimal
complete-graph extendibility values. This module exposes those closed
forms, exact one-dimensional minimax solvers over affine eigenvalue
functions that reproduce them independently, primal certificates and
lower-bound state constructions, the Brauer separability/PPT region,
and numeric oracles based on edge-averaged Hamiltonians.
"""

from __future__ import annotations

import itertools
import math
from dataclasses import dataclass
from fractions import Fraction

import numpy as np
import scipy.sparse
import scipy.sparse.linalg

from .budget import check_budget
from .diagrams import PairOperator, SiteOperator, pair_operators, projectors, young_symmetrizer
from .graphs import Graph, edge_average_hamiltonian, make_family, perfect_matchings
from .partitions import (
    Partition,
    check_partition,
    conjugate,
    content,
    enumerate_brauer_irreps,
    enumerate_sym_irreps,
    odd_row_count,
    optimal_rectangular_partition,
    size,
)
from .spectral import lambda_max

LN2 = math.log(2.0)

FAMILIES = ("werner", "brauer", "isotropic", "isotropic_prime")


@dataclass(frozen=True)
class ExtendibilityValue:
    value: Fraction
    family: str
    graph: str
    n: int
    d: int
    method: str = "closed_form"

    def __post_init__(self):
        if not 0 <= self.value <= 1:
            raise ValueError(f"extendibility value {self.value} outside [0,1]")


@dataclass(frozen=True)
class BrauerParams:
    """Brauer-state parameters: (p, q) projector weights or (p', q') W/F/I weights."""
    p: Fraction
    q: Fraction
    prime: bool = False


# ---------------------------------------------------------------------------
# closed forms

def p_w_complete(n: int, d: int) -> Fraction:
    """Optimal Werner K_n value: antisymmetric weight of the best edge marginal."""
    _check_nd(n, d)
    k = n % d
    return (
        Fraction(d - 1, 2 * d) * Fraction((n + k + d) * (n - k), n * (n - 1))
        + Fraction(k * (k - 1), n * (n - 1))
    )


def p_b_complete(n: int, d: int) -> Fraction:
    """Optimal Brauer K_n value: maximally entangled weight of the best marginal."""
    _check_nd(n, d)
    big_n = n + n % 2 - 1
    return Fraction(1, d) + Fraction(1, big_n) - Fraction(1, d * big_n)


def p_iso_prime(n: int, d: int) -> Fraction:
    """Optimal isotropic K_n value in the W-weight parameterization p'."""
    _check_nd(n, d)
    if d > n or d % 2 == 0 or n % 2 == 0:
        return Fraction(1, n + n % 2 - 1)
    return min(Fraction(2 * d + 1, 2 * d * n + 1), Fraction(1, n - 1))


def p_iso(n: int, d: int) -> Fraction:
    """Optimal isotropic K_n value as the maximally entangled weight p."""
    pp = p_iso_prime(n, d)
    return Fraction(1, d * d) + (1 - Fraction(1, d * d)) * pp


def p_iso_bipartite(n: int, m: int, d: int) -> Fraction:
    """Optimal isotropic (and Brauer) value on the complete bipartite graph K_{n,m}."""
    if n < 1 or m < 1 or d < 2:
        raise ValueError("need n, m >= 1 and d >= 2")
    return Fraction(1, d) + Fraction(d - 1, d * max(n, m))


def _check_nd(n: int, d: int):
    if n < 2 or d < 2:
        raise ValueError("need n >= 2 and d >= 2")


# ---------------------------------------------------------------------------
# affine minimax machinery

@dataclass(frozen=True)
class AffineFn:
    """One eigenvalue branch of a dual Hamiltonian, affine in the dual variable x."""
    slope: Fraction
    offset: Fraction
    lam: Partition = ()
    mu: Partition = ()
    r: int = 0

    def __call__(self, x: Fraction) -> Fraction:
        return self.offset + self.slope * x


def minimize_max_affine(fns: list[AffineFn]) -> tuple[Fraction, Fraction, tuple[AffineFn, ...]]:
    """Exact minimum over x of max_i fns_i(x).

    Returns (argmin, value, active functions). The upper envelope of the
    lines is built by slope-sorted pairwise intersections; the minimum of
    the resulting convex piecewise-linear function sits where the envelope
    slope changes sign. Raises ValueError when unbounded below.
    """
    if not fns:
        raise ValueError("empty affine family")
    best: dict[Fraction, AffineFn] = {}
    for f in fns:
        cur = best.get(f.slope)
        if cur is None or f.offset > cur.offset:
            best[f.slope] = f
    lines = sorted(best.values(), key=lambda f: f.slope)

    if lines[0].slope > 0 or lines[-1].slope < 0:
        raise ValueError("max of affine family is unbounded below")

    def isect(f: AffineFn, g: AffineFn) -> Fraction:
        return Fraction(g.offset - f.offset, f.slope - g.slope)

    hull: list[AffineFn] = []
    for line in lines:
        while len(hull) >= 2 and isect(hull[-2], hull[-1]) >= isect(hull[-1], line):
            hull.pop()
        hull.append(line)

    if len(hull) == 1:
        f = hull[0]
        if f.slope != 0:
            raise ValueError("max of affine family is unbounded below")
        return Fraction(0), f.offset, (f,)

    i = next(idx for idx, f in enumerate(hull) if f.slope >= 0)
    if i == 0:
        # flat leftmost piece: minimum value attained on it
        x = isect(hull[0], hull[1])
        return x, hull[0].offset, (hull[0], hull[1])
    x = isect(hull[i - 1], hull[i])
    return x, hull[i - 1](x), (hull[i - 1], hull[i])


def okada_easy_pairs(n: int, d: int) -> list[tuple[Partition, Partition]]:
    """(lambda, mu) label pairs produced by the three easy branching rules.

    1. lambda a single column (1^m): mu ranges over labels with exactly m odd rows.
    2. lambda of full size n: mu = lambda.
    3. mu the single row (n): lambda a single row (n - 2r).
    """
    _check_nd(n, d)
    sym = enumerate_sym_irreps(n, d)
    brauer = enumerate_brauer_irreps(n, d)
    brauer_set = set(brauer)
    pairs = set()
    for m in range(n % 2, min(d, n) + 1, 2):
        lam = (1,) * m
        if lam not in brauer_set:
            continue
        for mu in sym:
            if odd_row_count(mu) == m:
                pairs.add((lam, mu))
    for lam in brauer:
        if size(lam) == n and lam in sym:
            pairs.add((lam, lam))
    mu_row = (n,)
    for r in range(n // 2 + 1):
        lam = (n - 2 * r,) if n - 2 * r > 0 else ()
        if lam in brauer_set:
            pairs.add((lam, mu_row))
    return sorted(pairs)


def special_partitions(n: int, d: int) -> dict[str, Partition]:
    """The named partitions driving the odd-odd isotropic optimum (n >= d)."""
    if n < d:
        raise ValueError("defined for n >= d")
    k = ((n - d) // 2) // d
    m = ((n - d) // 2) % d
    mu3 = (2 * k + 3,) * m + (2 * k + 1,) * (d - m)
    return {
        "lambda1": (1,) * d,
        "lambda2": (1,),
        "mu1": (n,),
        "mu2": check_partition((n - d + 1,) + (1,) * (d - 1)),
        "mu3": check_partition(mu3),
    }


def iso_affine_fn(lam: Partition, mu: Partition, n: int, d: int) -> AffineFn:
    """The eigenvalue branch f_{mu,lambda}(x) of the isotropic dual Hamiltonian."""
    lam = check_partition(lam)
    mu = check_partition(mu)
    edges = Fraction(n * (n - 1), 2)
    r = (n - size(lam)) // 2
    offset = Fraction(1, d - 1) * (Fraction(d * content(mu)) / edges - 1)
    slope = Fraction(content(lam) + d * content(mu) - r * (d - 1)) - edges
    return AffineFn(slope, offset, lam, mu, r)


def iso_affine_family(n: int, d: int) -> list[AffineFn]:
    """Affine branches over the easy-rule pairs plus the named special pairs."""
    pairs = set(okada_easy_pairs(n, d))
    if n >= d and n % 2 == 1 and d % 2 == 1:
        sp = special_partitions(n, d)
        pairs.add((sp["lambda1"], sp["mu2"]))
        pairs.add((sp["lambda1"], sp["mu3"]))
        pairs.add((sp["lambda2"], sp["mu1"]))
    return [iso_affine_fn(lam, mu, n, d) for lam, mu in sorted(pairs)]


def isotropic_dual_minimax(n: int, d: int) -> Fraction:
    """Exact dual value: min over x of the max of the affine branches."""
    _, value, _ = isotropic_dual_argmin(n, d)
    return value


def isotropic_dual_argmin(n: int, d: int) -> tuple[Fraction, Fraction, tuple[AffineFn, ...]]:
    """The dual optimum (x*, value, active branches)."""
    return minimize_max_affine(iso_affine_family(n, d))


def h_column_weight(lam: Partition, d: int) -> Fraction:
    """h(lambda) = (1/2) sum_i lam'_i (d - lam'_i + 2(i-1)); the slope of g at x-tilde."""
    lam = check_partition(lam)
    conj = conjugate(lam)
    return Fraction(sum(c * (d - c + 2 * i) for i, c in enumerate(conj)), 2)


def q0_affine_family(n: int, d: int) -> list[AffineFn]:
    """Branches of the q=0 Brauer dual; only mu = (n) gives zero slope."""
    _check_nd(n, d)
    edges = Fraction(n * (n - 1), 2)
    mu = (n,)
    out = []
    for r in range(n // 2 + 1):
        lam = (n - 2 * r,) if n - 2 * r > 0 else ()
        offset = Fraction(content(mu) - content(lam) + (n - size(lam)) * (d - 1) // 2) / (d * edges)
        slope = Fraction(1, d) * (1 - Fraction(content(mu)) / edges)
        out.append(AffineFn(slope, offset, lam, mu, r))
    return out


def q0_dual_value(n: int, d: int) -> Fraction:
    """Dual value of the maximally-entangled-marginal problem on K_n."""
    _, value, _ = minimize_max_affine(q0_affine_family(n, d))
    return value


# ---------------------------------------------------------------------------
# numeric oracles

def p_avg_numeric(g: Graph, which: str, d: int, budget: int | None = None) -> float:
    """Largest eigenvalue of the edge-averaged projector Hamiltonian.

    which = "werner" uses the antisymmetric projector; which = "brauer"
    uses the normalized maximally entangled projector W/d, so the value is
    directly comparable with the Brauer closed form.
    """
    check_budget(g.vertex_count, d, budget)
    p_empty, p_11, _ = projectors(d)
    if which == "werner":
        op = p_11
    elif which == "brauer":
        op = p_empty
    else:
        raise ValueError("which must be 'werner' or 'brauer'")
    return lambda_max(edge_average_hamiltonian(g, op))


def cycle_werner_value(n: int, budget: int | None = None) -> float:
    """Werner value of the even cycle C_n at d = 2 (Heisenberg ring top eigenvalue)."""
    if n % 2 == 1:
        raise ValueError("cycle bound uses even n only")
    if n < 4:
        raise ValueError("need n >= 4")
    return p_avg_numeric(make_family("cycle", n), "werner", 2, budget)


def _dual_ham_parts(n: int, d: int):
    """Exact building blocks sum_e (I_e - d F_e) and sum_e (F_e - W_e) on K_n."""
    g = make_family("complete", n)
    w, ident, f = pair_operators(d)
    a = edge_average_hamiltonian(g, ident - d * f) * g.edge_count
    b = edge_average_hamiltonian(g, f - w) * g.edge_count
    return a, b


def iso_dual_numeric(n: int, d: int, budget: int | None = None) -> float:
    """Golden-section minimization of lambda_max(H(x)) for the isotropic dual.

    H(x) = sum_e ((1/(|E|(1-d)) - x)(I_e - d F_e) + x (F_e - W_e)); the
    bracket [-1, 1] is refined to width 1e-10.
    """
    _check_nd(n, d)
    check_budget(n, d, budget)
    a_exact, b_exact = _dual_ham_parts(n, d)
    edges = n * (n - 1) // 2
    c = 1.0 / (edges * (1 - d))
    dim = d ** n
    if dim <= 2048:
        a = a_exact.to_dense()
        b = b_exact.to_dense()

        def f(x: float) -> float:
            return float(np.linalg.eigvalsh((c - x) * a + x * b)[-1])
    else:
        def to_csr(m):
            rows, cols, vals = m.to_coo()
            return scipy.sparse.coo_matrix((vals, (rows, cols)), shape=(dim, dim)).tocsr()
        a = to_csr(a_exact)
        b = to_csr(b_exact)

        def f(x: float) -> float:
            top = scipy.sparse.linalg.eigsh(
                (c - x) * a + x * b, k=1, which="LA", return_eigenvectors=False
            )
            return float(top[0])

    lo, hi = -1.0, 1.0
    invphi = (math.sqrt(5.0) - 1.0) / 2.0
    x1 = hi - invphi * (hi - lo)
    x2 = lo + invphi * (hi - lo)
    f1, f2 = f(x1), f(x2)
    while hi - lo > 1e-10:
        if f1 <= f2:
            hi, x2, f2 = x2, x1, f1
            x1 = hi - invphi * (hi - lo)
            f1 = f(x1)
        else:
            lo, x1, f1 = x1, x2, f2
            x2 = lo + invphi * (hi - lo)
            f2 = f(x2)
    return f((lo + hi) / 2.0)


# ---------------------------------------------------------------------------
# primal certificates and lower-bound states

def reduced_state(rho: SiteOperator, edge: tuple[int, int], n: int, d: int) -> PairOperator:
    """Partial trace onto the two edge sites (in edge order)."""
    u, v = edge
    if not (0 <= u < n and 0 <= v < n and u != v):
        raise ValueError(f"invalid edge {edge} for n={n}")
    if rho.n != n or rho.d != d:
        raise ValueError("state shape mismatch")
    place = [d ** (n - 1 - i) for i in range(n)]
    pu, pv = place[u], place[v]
    data: dict = {}
    for (r, c), val in rho.data.items():
        ru, rv = (r // pu) % d, (r // pv) % d
        cu, cv = (c // pu) % d, (c // pv) % d
        if r - ru * pu - rv * pv != c - cu * pu - cv * pv:
            continue
        key = (ru * d + rv, cu * d + cv)
        data[key] = data.get(key, 0) + val
    return PairOperator(d, data)


def trace_product(a: SiteOperator, b: SiteOperator) -> Fraction:
    """Tr[a b] for exact symmetric operators."""
    a._check_same_shape(b)
    return sum((v * b.data.get((c, r), 0) for (r, c), v in a.data.items()), start=Fraction(0))


def werner_primal_certificate(
    n: int, d: int, budget: int | None = None
) -> tuple[SiteOperator, Fraction]:
    """Optimal Werner state on K_n: the normalized rectangular isotypic projector.

    Returns (state, achieved) where achieved is the exact antisymmetric
    weight of the (0,1) edge marginal; full permutation symmetry makes all
    edge marginals equal.
    """
    _check_nd(n, d)
    check_budget(n, d, budget)
    lam = optimal_rectangular_partition(n, d)
    eps = young_symmetrizer(lam, n, d)
    total = eps.trace()
    marginal = reduced_state(eps, (0, 1), n, d) * Fraction(1, total)
    _, p_11, _ = projectors(d)
    achieved = trace_product(p_11, marginal)
    return eps * Fraction(1, total), achieved


def matching_lower_bound_state(n: int, d: int, budget: int | None = None) -> SiteOperator:
    """Dimension-independent extendible state built from perfect matchings of K_n.

    Even n: uniform mixture over all perfect matchings of products of
    normalized maximally entangled pairs. Odd n: additionally uniform over
    the deleted vertex, which is left maximally mixed. Every edge marginal
    is isotropic with W-weight 1/(n-1) (even) or 1/n (odd).
    """
    _check_nd(n, d)
    check_budget(n, d, budget)
    place = [d ** (n - 1 - i) for i in range(n)]

    def product_state(pairs, leftover):
        weight = Fraction(1, d ** (len(pairs) + (1 if leftover is not None else 0)))
        data = {}
        for assign in itertools.product(range(d * d), repeat=len(pairs)):
            base_r = base_c = 0
            for (u, v), ab in zip(pairs, assign):
                a, b = divmod(ab, d)
                base_r += a * (place[u] + place[v])
                base_c += b * (place[u] + place[v])
            if leftover is None:
                data[(base_r, base_c)] = weight
            else:
                for w in range(d):
                    off = w * place[leftover]
                    data[(base_r + off, base_c + off)] = weight
        return SiteOperator(n, d, data)

    terms = []
    if n % 2 == 0:
        for matching in perfect_matchings(make_family("complete", n)):
            terms.append(product_state(matching, None))
    else:
        full = make_family("complete", n)
        for v in range(n):
            sub_edges = [e for e in full.edges if v not in e]
            sub = Graph(n, tuple(sub_edges), "custom")
            # matchings of K_n minus v cover all vertices but v
            covered = [m for m in _near_matchings(sub, skip=v)]
            for matching in covered:
                terms.append(product_state(matching, v))
    total = SiteOperator.zero(n, d)
    for t in terms:
        total = total + t
    return total * Fraction(1, len(terms))


def _near_matchings(g: Graph, skip: int):
    """Matchings of g covering every vertex except `skip`."""
    n = g.vertex_count
    adj = {v: set() for v in range(n)}
    for u, v in g.edges:
        adj[u].add(v)
        adj[v].add(u)
    out = []

    def recurse(covered, acc):
        remaining = [v for v in range(n) if v not in covered and v != skip]
        if not remaining:
            out.append(tuple(acc))
            return
        u = remaining[0]
        for v in sorted(adj[u]):
            if v not in covered and v != skip:
                covered.update((u, v))
                acc.append((u, v))
                recurse(covered, acc)
                acc.pop()
                covered.difference_update((u, v))

    recurse(set(), [])
    return out


def isotropic_pair_state(p_prime: Fraction, d: int) -> PairOperator:
    """Two-qudit isotropic state with W-weight p': p' W/d + (1-p') I/d^2."""
    w, ident, _ = pair_operators(d)
    return w * Fraction(p_prime, d) + ident * Fraction(1 - p_prime, d * d)


# ---------------------------------------------------------------------------
# Brauer separability and PPT region

def brauer_proj_to_wfi(p, q, d: int) -> tuple[Fraction, Fraction]:
    """Convert projector weights (p, q) to W/F/I weights (p', q')."""
    p, q = Fraction(p), Fraction(q)
    denom = d * (d + 1) - 2
    pp = p - Fraction(2 * (1 - p - q), denom)
    qq = Fraction(-q, d - 1) + Fraction(d * (1 - p - q), denom)
    return pp, qq


def brauer_wfi_to_proj(pp, qq, d: int) -> tuple[Fraction, Fraction]:
    """Convert W/F/I weights (p', q') back to projector weights (p, q)."""
    pp, qq = Fraction(pp), Fraction(qq)
    p = Fraction(pp * (d * d - 1) + qq * (d - 1) + 1, d * d)
    q = -Fraction(pp * (d - 1) + qq * (d * d - 1) - d + 1, 2 * d)
    return p, q


def brauer_params_convert(x: BrauerParams, d: int) -> BrauerParams:
    """Exact conversion between the two Brauer parameterizations."""
    if x.prime:
        p, q = brauer_wfi_to_proj(x.p, x.q, d)
        return BrauerParams(p, q, prime=False)
    pp, qq = brauer_proj_to_wfi(x.p, x.q, d)
    return BrauerParams(pp, qq, prime=True)


def is_positive_brauer_prime(pp, qq, d: int) -> bool:
    """Positive semidefiniteness of p' W/d + q' F/d + (1 - p' - q') I/d^2."""
    pp, qq = Fraction(pp), Fraction(qq)
    return (
        pp * (d * d - 1) + qq * (d - 1) + 1 >= 0
        and -pp - qq * (d + 1) + 1 >= 0
        and 2 - d + d * d + pp * (d * d + d - 2) - qq * (d ** 3 - 3 * d + 2) <= 2 * d * d
    )


def brauer_is_separable(p, q, d: int) -> bool:
    """Separability of the projector-weight Brauer state (p, q)."""
    p, q = Fraction(p), Fraction(q)
    if p < 0 or q < 0 or p + q > 1:
        raise ValueError(f"(p, q) = ({p}, {q}) is not a valid Brauer state")
    return q <= Fraction(1, 2) and p <= Fraction(1, d)


def brauer_is_ppt(p, q, d: int) -> bool:
    """PPT of the projector-weight Brauer state: swap (p', q') and test positivity."""
    pp, qq = brauer_proj_to_wfi(p, q, d)
    return is_positive_brauer_prime(qq, pp, d)


# ---------------------------------------------------------------------------
# conjecture probe and asymptotics

def conjecture_probe(g: Graph, which: str, d: int, grid: int = 21,
                     budget: int | None = None) -> dict:
    """Grid comparison of signed-weight vs nonnegative-weight minimax.

    Scans weight vectors x with sum 1 (free coordinates signed on [-1, 1]
    and on the probability simplex) and compares the two minima of
    lambda_max(sum_e x_e Pi_e). Observational only: the reported gap is an
    empirical quantity at the given grid resolution, never a proof.
    """
    if grid < 3:
        raise ValueError("need grid >= 3")
    if g.edge_count > 5:
        raise ValueError("grid probe limited to graphs with at most 5 edges")
    n = g.vertex_count
    if d ** n > 1024:
        raise ValueError("grid probe limited to d^n <= 1024")
    check_budget(n, d, budget)
    p_empty, p_11, _ = projectors(d)
    op = p_11 if which == "werner" else p_empty
    embedded = [
        edge_average_hamiltonian(Graph(n, (e,), "custom"), op).to_dense() for e in g.edges
    ]
    k = g.edge_count
    steps = grid - 1

    def value(weights) -> float:
        h = sum(float(w) * m for w, m in zip(weights, embedded))
        return float(np.linalg.eigvalsh(h)[-1])

    # simplex grid: nonnegative multiples of 1/steps summing to 1
    simplex_min = math.inf
    for combo in itertools.product(range(steps + 1), repeat=k - 1):
        rest = steps - sum(combo)
        if rest < 0:
            continue
        weights = [c / steps for c in combo] + [rest / steps]
        simplex_min = min(simplex_min, value(weights))

    # signed grid on the hyperplane sum = 1; step 1/steps so it contains
    # every simplex grid point
    signed_min = math.inf
    axis = [t / steps for t in range(-steps, steps + 1)]
    for combo in itertools.product(axis, repeat=k - 1):
        weights = list(combo) + [1.0 - sum(combo)]
        signed_min = min(signed_min, value(weights))

    tolerance = g.edge_count / steps
    return {
        "signed_min": signed_min,
        "simplex_min": simplex_min,
        "gap": simplex_min - signed_min,
        "grid_points_per_axis": 2 * steps + 1,
        "tolerance": tolerance,
    }


def asymptotic_limit(family: str, var: str, n: int | None = None,
                     d: int | None = None) -> Fraction:
    """Exact limits of the closed forms as n or d grows."""
    if family not in FAMILIES:
        raise ValueError(f"unknown family {family!r}")
    if var == "d":
        if family == "werner":
            return Fraction(1)
        if n is None:
            raise ValueError("limit in d needs n")
        return Fraction(1, n + n % 2 - 1)  # brauer and both isotropic forms agree
    if var == "n":
        if d is None:
            raise ValueError("limit in n needs d")
        if family == "werner":
            return Fraction(d - 1, 2 * d)
        if family == "brauer":
            return Fraction(1, d)
        if family == "isotropic_prime":
            return Fraction(0)
        return Fraction(1, d * d)  # isotropic p inherits the 1/d^2 floor
    raise ValueError("var must be 'n' or 'd'")


def compute_value(family: str, n: int, d: int, m: int | None = None) -> ExtendibilityValue:
    """Closed-form value wrapped with its metadata."""
    if family == "werner":
        val = p_w_complete(n, d)
    elif family == "brauer":
        val = p_b_complete(n, d)
    elif family == "isotropic":
        val = p_iso(n, d)
    elif family == "isotropic_prime":
        val = p_iso_prime(n, d)
    elif family == "isotropic_bipartite":
        if m is None:
            raise ValueError("bipartite value needs m")
        val = p_iso_bipartite(n, m, d)
        return ExtendibilityValue(val, "isotropic", f"K_{{{n},{m}}}", n, d)
    else:
        raise ValueError(f"unknown family {family!r}")
    return ExtendibilityValue(val, family, f"K_{n}", n, d)
