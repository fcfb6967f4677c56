"""Exact 2-attack Roman domination solvers.

Two independent routes compute the domination number:

* ``gamma_bruteforce`` -- depth-first branch and bound over per-vertex label
  choices with incremental validity pruning.  Works for any attack number
  and supports a cap on the number of 2-labels.
* ``gamma_via_eccd`` -- maximizes a packing of end-coupled center-disjoint
  P5 subgraphs and reads the answer off the packing; the constructed
  0-2-0-2-0 labeling is itself a minimum labeling.

The two routes are kept independent so they can be tested against each
other; neither consults the other's answer.
"""

from __future__ import annotations

import time
from dataclasses import dataclass, field
from itertools import combinations

from . import limits
from .errors import InvalidEccdError, NotMinimumError, TooLargeError
from .graph import Graph, iter_bits, mask_of
from .labeling import Labeling, validate

TWO_MODES = ("any", "minimize_twos", "maximize_twos")
METHODS = ("bruteforce", "eccd", "auto")


@dataclass(frozen=True)
class SolveOptions:
    """Knobs for ``solve``; defaults give the plain 2-attack number."""

    attack_n: int = 2
    max_twos: int | None = None
    two_mode: str = "any"
    method: str = "auto"
    enumerate_all: bool = False

    def __post_init__(self):
        if self.attack_n < 1:
            raise ValueError("attack_n must be >= 1")
        if self.max_twos is not None and self.max_twos < 0:
            raise ValueError("max_twos must be >= 0")
        if self.two_mode not in TWO_MODES:
            raise ValueError(f"two_mode must be one of {TWO_MODES}")
        if self.method not in METHODS:
            raise ValueError(f"method must be one of {METHODS}")
        if self.method == "eccd" and self.attack_n != 2:
            raise ValueError("method 'eccd' requires attack_n == 2")


@dataclass(frozen=True)
class SolveStats:
    nodes: int
    elapsed: float
    method: str


@dataclass(frozen=True)
class SolveResult:
    gamma: int
    labeling: Labeling
    optimal_number: int
    stats: SolveStats
    all_minimum: tuple[Labeling, ...] | None = None
    feasible_two_counts: tuple[int, ...] | None = None


@dataclass(frozen=True)
class EccdSet:
    """Ordered P5 tuples satisfying the end-coupled center-disjoint rules.

    Each tuple (a, b, c, d, e) is a path; c is its center.  Tuples may share
    only whole end edges in matching (leaf, inner) orientation, and a center
    may not appear in any other tuple.
    """

    paths: tuple[tuple[int, int, int, int, int], ...] = field(default=())

    def __len__(self):
        return len(self.paths)

    def __iter__(self):
        return iter(self.paths)


@dataclass(frozen=True)
class OptimalityCertificate:
    """A 0-2-0-2-0 path inside a witness minimum labeling."""

    path: tuple[int, int, int, int, int]
    labeling: Labeling


# ---------------------------------------------------------------------------
# shared low-level helpers (adjacency masks, leaf validity)
# ---------------------------------------------------------------------------


def _adj_list(graph: Graph) -> list[int]:
    return [graph.adjacency_mask(v) for v in range(graph.order)]


def _labels_valid(adj: list[int], labels, attack_n: int) -> bool:
    """Full validity of a complete label vector (fast pairs + j>=3 subsets)."""
    two_mask = 0
    for v, lab in enumerate(labels):
        if lab == 2:
            two_mask |= 1 << v
    zeros = [v for v, lab in enumerate(labels) if lab == 0]
    claims = {}
    for v in zeros:
        t = adj[v] & two_mask
        if t == 0:
            return False
        if attack_n >= 2 and t & (t - 1) == 0:
            if t in claims:
                return False
            claims[t] = v
    for j in range(3, attack_n + 1):
        for subset in combinations(zeros, j):
            smask = 0
            nmask = 0
            for v in subset:
                smask |= 1 << v
                nmask |= adj[v]
            if (nmask & ~smask & two_mask).bit_count() < j:
                return False
    return True


def _seal_conflict(adj, v, lab, zero_mask, two_mask, und_mask, use_pairs) -> bool:
    """True when labeling v just produced an unfixable violation.

    A 0-vertex is sealed once all its neighbors are decided; a sealed 0 with
    no 2-neighbor is dead, and (for attack 2) two sealed 0s sharing one
    unique 2-neighbor are dead.  Only vertices sealed by this assignment can
    newly violate, so the scan is local to v's neighborhood.
    """
    vbit = 1 << v
    check = adj[v] & zero_mask
    if lab == 0:
        check |= vbit
    while check:
        ubit = check & -check
        check ^= ubit
        u = ubit.bit_length() - 1
        if adj[u] & und_mask:
            continue  # not sealed yet
        t = adj[u] & two_mask
        if t == 0:
            return True
        if use_pairs and t & (t - 1) == 0:
            w = t.bit_length() - 1
            others = adj[w] & zero_mask & ~ubit
            while others:
                xbit = others & -others
                others ^= xbit
                x = xbit.bit_length() - 1
                if adj[x] & und_mask == 0 and adj[x] & two_mask == t:
                    return True
    return False


def _forced_extra(adj, und_mask, two_mask) -> int:
    """Count undecided vertices that can no longer be labeled 0.

    An undecided vertex with every neighbor decided and none labeled 2 must
    take at least 1 in any valid completion; admissible lower-bound term.
    """
    forced = 0
    m = und_mask
    while m:
        b = m & -m
        m ^= b
        u = b.bit_length() - 1
        if adj[u] & und_mask == 0 and adj[u] & two_mask == 0:
            forced += 1
    return forced


# ---------------------------------------------------------------------------
# branch-and-bound oracle
# ---------------------------------------------------------------------------


def _bb_gamma(adj: list[int], attack_n: int, max_twos: int | None) -> tuple[int, int]:
    """Minimum weight over valid labelings; returns (gamma, nodes explored).

    Vertices are explored in descending-degree order (ties by id) and labels
    in the order 0, 2, 1; high-degree vertices seal their neighborhoods
    fastest.
    """
    n = len(adj)
    if n == 0:
        return 0, 1
    order = sorted(range(n), key=lambda v: (-adj[v].bit_count(), v))
    use_pairs = attack_n >= 2
    best = n  # the all-1 labeling is always valid
    nodes = 0
    labels = [1] * n

    def rec(idx, zero_mask, two_mask, und_mask, wgt, twos):
        nonlocal best, nodes
        nodes += 1
        if wgt + _forced_extra(adj, und_mask, two_mask) >= best:
            return
        if idx == n:
            if _labels_valid(adj, labels, attack_n):
                best = wgt
            return
        v = order[idx]
        vbit = 1 << v
        und2 = und_mask & ~vbit
        for lab in (0, 2, 1):
            if lab == 2 and max_twos is not None and twos == max_twos:
                continue
            z2 = zero_mask | vbit if lab == 0 else zero_mask
            t2 = two_mask | vbit if lab == 2 else two_mask
            if _seal_conflict(adj, v, lab, z2, t2, und2, use_pairs):
                continue
            labels[v] = lab
            rec(idx + 1, z2, t2, und2, wgt + lab, twos + (lab == 2))
        labels[v] = 1

    rec(0, 0, 0, (1 << n) - 1, 0, 0)
    return best, nodes


def _lex_first_labeling(adj, attack_n, weight_target, max_twos=None,
                        twos_target=None) -> tuple[int, ...] | None:
    """First labeling in label-vector lexicographic order with the exact
    target weight (and exact 2-count when requested)."""
    n = len(adj)
    if n == 0:
        return () if weight_target == 0 else None
    use_pairs = attack_n >= 2
    labels = [0] * n
    out = []

    def rec(v, zero_mask, two_mask, und_mask, wgt, twos):
        if out:
            return
        if wgt + _forced_extra(adj, und_mask, two_mask) > weight_target:
            return
        if twos_target is not None:
            if twos > twos_target:
                return
            if twos + (weight_target - wgt) // 2 < twos_target:
                return
        if v == n:
            if wgt == weight_target and _labels_valid(adj, labels, attack_n):
                out.append(tuple(labels))
            return
        vbit = 1 << v
        und2 = und_mask & ~vbit
        for lab in (0, 1, 2):
            if wgt + lab > weight_target:
                break
            if lab == 2 and max_twos is not None and twos == max_twos:
                continue
            z2 = zero_mask | vbit if lab == 0 else zero_mask
            t2 = two_mask | vbit if lab == 2 else two_mask
            if _seal_conflict(adj, v, lab, z2, t2, und2, use_pairs):
                continue
            labels[v] = lab
            rec(v + 1, z2, t2, und2, wgt + lab, twos + (lab == 2))
            labels[v] = 0
            if out:
                return

    rec(0, 0, 0, (1 << n) - 1, 0, 0)
    return out[0] if out else None


def _iter_exact_weight(adj, attack_n, weight_target, max_twos=None):
    """Yield every valid labeling of the exact target weight, lex order."""
    n = len(adj)
    if n == 0:
        if weight_target == 0:
            yield ()
        return
    use_pairs = attack_n >= 2
    labels = [0] * n

    def rec(v, zero_mask, two_mask, und_mask, wgt):
        if wgt + _forced_extra(adj, und_mask, two_mask) > weight_target:
            return
        if v == n:
            if wgt == weight_target and _labels_valid(adj, labels, attack_n):
                yield tuple(labels)
            return
        vbit = 1 << v
        und2 = und_mask & ~vbit
        for lab in (0, 1, 2):
            if wgt + lab > weight_target:
                break
            if lab == 2 and max_twos is not None:
                twos = two_mask.bit_count()
                if twos == max_twos:
                    continue
            z2 = zero_mask | vbit if lab == 0 else zero_mask
            t2 = two_mask | vbit if lab == 2 else two_mask
            if _seal_conflict(adj, v, lab, z2, t2, und2, use_pairs):
                continue
            labels[v] = lab
            yield from rec(v + 1, z2, t2, und2, wgt + lab)
            labels[v] = 0

    yield from rec(0, 0, 0, (1 << n) - 1, 0)


def _extremal_twos(adj, attack_n, gamma, maximize: bool) -> int:
    """Extremal |V2| over valid labelings of weight exactly gamma."""
    n = len(adj)
    if n == 0:
        return 0
    use_pairs = attack_n >= 2
    order = sorted(range(n), key=lambda v: (-adj[v].bit_count(), v))
    labels = [0] * n
    if maximize:
        best = -1
    else:
        seed = _lex_first_labeling(adj, attack_n, gamma)
        best = sum(1 for lab in seed if lab == 2)
        if best == 0:
            return 0

    def rec(idx, zero_mask, two_mask, und_mask, wgt, twos):
        nonlocal best
        if wgt + _forced_extra(adj, und_mask, two_mask) > gamma:
            return
        if maximize:
            if twos + (gamma - wgt) // 2 <= best:
                return
        elif twos >= best:
            return
        if idx == n:
            if wgt == gamma and _labels_valid(adj, labels, attack_n):
                best = twos
            return
        v = order[idx]
        vbit = 1 << v
        und2 = und_mask & ~vbit
        for lab in ((2, 0, 1) if maximize else (0, 1, 2)):
            if wgt + lab > gamma:
                continue
            z2 = zero_mask | vbit if lab == 0 else zero_mask
            t2 = two_mask | vbit if lab == 2 else two_mask
            if _seal_conflict(adj, v, lab, z2, t2, und2, use_pairs):
                continue
            labels[v] = lab
            rec(idx + 1, z2, t2, und2, wgt + lab, twos + (lab == 2))
        labels[v] = 0

    rec(0, 0, 0, (1 << n) - 1, 0, 0)
    return best


def gamma_bruteforce(graph: Graph, opts: SolveOptions | None = None) -> SolveResult:
    """Exact minimum weight by branch and bound.

    Practical up to roughly 24 vertices; larger graphs are accepted but may
    take long.  The witness is the lexicographically smallest minimum label
    vector, found by a second budgeted pass.
    """
    opts = opts or SolveOptions()
    start = time.perf_counter()
    adj = _adj_list(graph)
    gamma, nodes = _bb_gamma(adj, opts.attack_n, opts.max_twos)
    labels = _lex_first_labeling(adj, opts.attack_n, gamma, opts.max_twos)
    witness = Labeling(graph, labels)
    all_minimum = None
    feasible = None
    if opts.enumerate_all:
        _check_enum_limit(graph.order)
        all_minimum = tuple(
            Labeling(graph, labs)
            for labs in _iter_exact_weight(adj, opts.attack_n, gamma, opts.max_twos))
        feasible = tuple(sorted({sum(1 for x in lab.labels if x == 2) for lab in all_minimum}))
    stats = SolveStats(nodes, time.perf_counter() - start, "bruteforce")
    return SolveResult(gamma, witness, graph.order - gamma, stats, all_minimum, feasible)


def _check_enum_limit(order: int):
    limit = limits.enumeration_max_order()
    if order > limit:
        raise TooLargeError(order, limit)


def enumerate_minimum_labelings(graph: Graph, attack_n: int = 2) -> list[Labeling]:
    """All minimum-weight valid labelings in lexicographic order."""
    _check_enum_limit(graph.order)
    adj = _adj_list(graph)
    gamma, _ = _bb_gamma(adj, attack_n, None)
    return [Labeling(graph, labs) for labs in _iter_exact_weight(adj, attack_n, gamma)]


# ---------------------------------------------------------------------------
# end-coupled center-disjoint P5 packing
# ---------------------------------------------------------------------------


def check_eccd(graph: Graph, eccd: EccdSet) -> None:
    """Raise InvalidEccdError unless the set satisfies the packing rules."""
    for t in eccd.paths:
        if len(set(t)) != 5:
            raise InvalidEccdError(f"tuple {t} repeats a vertex")
        for v in t:
            if not (0 <= v < graph.order):
                raise InvalidEccdError(f"tuple {t} leaves the graph")
        for x, y in zip(t, t[1:]):
            if not graph.has_edge(x, y):
                raise InvalidEccdError(f"tuple {t} is not a path: missing edge {x}-{y}")
    for t in eccd.paths:
        for u in eccd.paths:
            if u is t:
                continue
            if t[2] in u:
                raise InvalidEccdError(f"center {t[2]} of {t} reused by {u}")
            uset = set(u)
            for leaf, inner in ((t[0], t[1]), (t[4], t[3])):
                if leaf in uset or inner in uset:
                    if (u[0], u[1]) != (leaf, inner) and (u[4], u[3]) != (leaf, inner):
                        raise InvalidEccdError(
                            f"end edge {leaf}-{inner} of {t} overlaps {u} out of position")
    if len(set(eccd.paths)) != len(eccd.paths):
        raise InvalidEccdError("duplicate tuple in set")


def p5_candidates(graph: Graph) -> list[tuple[int, int, int, int, int]]:
    """Every P5 path as an ordered tuple, smaller endpoint first."""
    adj = _adj_list(graph)
    out = []
    for a in range(graph.order):
        abit = 1 << a
        for b in iter_bits(adj[a]):
            bbit = 1 << b
            for c in iter_bits(adj[b] & ~abit):
                cbit = 1 << c
                for d in iter_bits(adj[c] & ~abit & ~bbit):
                    for e in iter_bits(adj[d] & ~abit & ~bbit & ~cbit):
                        if a < e:
                            out.append((a, b, c, d, e))
    return out


def _tuples_compatible(t, u) -> bool:
    if t[2] in u or u[2] in t:
        return False
    uset = set(u)
    tset = set(t)
    for leaf, inner in ((t[0], t[1]), (t[4], t[3])):
        if leaf in uset or inner in uset:
            if (u[0], u[1]) != (leaf, inner) and (u[4], u[3]) != (leaf, inner):
                return False
    for leaf, inner in ((u[0], u[1]), (u[4], u[3])):
        if leaf in tset or inner in tset:
            if (t[0], t[1]) != (leaf, inner) and (t[4], t[3]) != (leaf, inner):
                return False
    return True


def max_eccd_reference(graph: Graph) -> EccdSet:
    """Straight set-packing search over explicit P5 candidates.

    Exponential in the candidate count; intended as an independent reference
    for cross-checking ``max_eccd`` on small graphs.
    """
    cands = p5_candidates(graph)
    best: list[tuple] = []
    chosen: list[tuple] = []

    def rec(start):
        nonlocal best
        if len(chosen) > len(best):
            best = list(chosen)
        if len(chosen) + (len(cands) - start) <= len(best):
            return
        for k in range(start, len(cands)):
            t = cands[k]
            if all(_tuples_compatible(t, u) for u in chosen):
                chosen.append(t)
                rec(k + 1)
                chosen.pop()

    rec(0)
    return EccdSet(tuple(sorted(best)))


def _max_eccd_engine(adj: list[int]) -> tuple[int, tuple | None, int]:
    """Maximum packing size via the oriented-matching reduction.

    Any valid packing decomposes into a vertex-disjoint set of oriented end
    edges (leaf, inner) plus one exclusive center per tuple adjacent to two
    distinct inners; conversely any such triple assembles into a valid
    packing.  So it suffices to sweep inner sets I, match each inner to a
    distinct leaf outside I (preferring leaves that are not potential
    centers), and count the unused vertices with >= 2 neighbors in I.
    """
    n = len(adj)
    nodes = 0
    if n < 5:
        return 0, None, nodes
    full = (1 << n) - 1
    best_score = 0
    best_sol = None
    for s in range(2, n // 2 + 1):
        if n - 2 * s <= best_score:
            break
        for inners in combinations(range(n), s):
            nodes += 1
            imask = mask_of(inners)
            if any(adj[i] & ~imask & full == 0 for i in inners):
                continue
            pmask = 0
            rest = full & ~imask
            while rest:
                b = rest & -rest
                rest ^= b
                if (adj[b.bit_length() - 1] & imask).bit_count() >= 2:
                    pmask |= b
            p_count = pmask.bit_count()
            if p_count <= best_score:
                continue
            found = _min_cost_leaf_assignment(
                adj, inners, imask, pmask, p_count - best_score, full)
            if found is None:
                continue
            cost, assign = found
            best_score = p_count - cost
            best_sol = (imask, assign, pmask)
    return best_score, best_sol, nodes


def _min_cost_leaf_assignment(adj, inners, imask, pmask, budget, full):
    """Distinct leaves for all inners using fewer than ``budget`` potential
    centers; returns (cost, {inner: leaf}) or None."""
    order = sorted(inners, key=lambda i: (adj[i] & ~imask & full).bit_count())
    best_cost = budget
    best_assign = None
    assign: dict[int, int] = {}

    def rec(k, used, cost):
        nonlocal best_cost, best_assign
        if cost >= best_cost:
            return
        if k == len(order):
            best_cost = cost
            best_assign = dict(assign)
            return
        i = order[k]
        opts = adj[i] & ~imask & ~used & full
        for extra, pool in ((0, opts & ~pmask), (1, opts & pmask)):
            m = pool
            while m:
                b = m & -m
                m ^= b
                assign[i] = b.bit_length() - 1
                rec(k + 1, used | b, cost + extra)
                del assign[i]

    rec(0, 0, 0)
    if best_assign is None:
        return None
    return best_cost, best_assign


def max_eccd(graph: Graph) -> EccdSet:
    """A maximum end-coupled center-disjoint P5 packing, deterministically."""
    score, sol, _ = _max_eccd_engine(_adj_list(graph))
    return _assemble_eccd(graph, score, sol)


def _assemble_eccd(graph: Graph, score: int, sol) -> EccdSet:
    if score == 0 or sol is None:
        return EccdSet(())
    imask, assign, pmask = sol
    leaf_mask = mask_of(assign.values())
    centers = sorted(iter_bits(pmask & ~leaf_mask))
    paths = []
    for c in centers:
        i1, i2 = list(iter_bits(graph.adjacency_mask(c) & imask))[:2]
        a, e = assign[i1], assign[i2]
        if a < e:
            paths.append((a, i1, c, i2, e))
        else:
            paths.append((e, i2, c, i1, a))
    return EccdSet(tuple(sorted(paths)))


def eccd_to_labeling(graph: Graph, eccd: EccdSet) -> Labeling:
    """0-2-0-2-0 on every packed path, 1 everywhere else.

    Shared end edges receive consistent labels by the packing rules; the
    result is re-checked to be valid at attack 2.
    """
    check_eccd(graph, eccd)
    labels = [1] * graph.order
    pattern = (0, 2, 0, 2, 0)
    for t in eccd.paths:
        for v, lab in zip(t, pattern):
            if labels[v] != 1 and labels[v] != lab:
                raise InvalidEccdError(f"conflicting labels forced on vertex {v}")
            labels[v] = lab
    result = Labeling(graph, tuple(labels))
    report = validate(result, 2)
    if not report.valid:
        raise InvalidEccdError(f"packing produced an invalid labeling: {report.witness}")
    return result


def gamma_via_eccd(graph: Graph) -> SolveResult:
    """Minimum weight via the maximum packing; attack number 2 only."""
    start = time.perf_counter()
    score, sol, nodes = _max_eccd_engine(_adj_list(graph))
    eccd = _assemble_eccd(graph, score, sol)
    witness = eccd_to_labeling(graph, eccd)
    gamma = graph.order - len(eccd)
    if witness.weight != gamma:
        raise AssertionError("packing labeling weight disagrees with packing size")
    stats = SolveStats(nodes, time.perf_counter() - start, "eccd")
    return SolveResult(gamma, witness, len(eccd), stats)


def is_optimal(graph: Graph) -> tuple[bool, OptimalityCertificate | None]:
    """Whether some valid labeling beats the all-1 labeling.

    Decided by whether any end-coupled center-disjoint P5 exists; when it
    does, the certificate carries one 0-2-0-2-0 path inside the constructed
    minimum labeling.
    """
    eccd = max_eccd(graph)
    if len(eccd) == 0:
        return False, None
    labeling = eccd_to_labeling(graph, eccd)
    return True, OptimalityCertificate(eccd.paths[0], labeling)


def find_02020_path(labeling: Labeling) -> tuple[int, int, int, int, int] | None:
    """First P5 labeled 0-2-0-2-0 under the labeling, or None."""
    g = labeling.graph
    two_mask = labeling.label_mask(2)
    zero_mask = labeling.label_mask(0)
    for c in iter_bits(zero_mask):
        twos = list(iter_bits(g.adjacency_mask(c) & two_mask))
        for b, d in combinations(twos, 2):
            for bb, dd in ((b, d), (d, b)):
                for a in iter_bits(g.adjacency_mask(bb) & zero_mask & ~(1 << c)):
                    tail = g.adjacency_mask(dd) & zero_mask & ~(1 << c) & ~(1 << a)
                    for e in iter_bits(tail):
                        return (a, bb, c, dd, e)
    return None


# ---------------------------------------------------------------------------
# constrained and extremal variants
# ---------------------------------------------------------------------------


def solve_finite_resources(graph: Graph, max_twos: int) -> SolveResult:
    """Minimum weight using at most ``max_twos`` 2-labels (always feasible)."""
    if max_twos < 0:
        raise ValueError("max_twos must be >= 0")
    return gamma_bruteforce(graph, SolveOptions(max_twos=max_twos, method="bruteforce"))


def two_extremal_minimum(graph: Graph, mode: str,
                         enumerate_all: bool = False) -> SolveResult:
    """Among minimum-weight labelings, one with the fewest or most 2-labels."""
    if mode not in ("minimize_twos", "maximize_twos"):
        raise ValueError("mode must be 'minimize_twos' or 'maximize_twos'")
    limit = limits.bruteforce_max_order()
    if graph.order > limit:
        raise TooLargeError(graph.order, limit)
    start = time.perf_counter()
    adj = _adj_list(graph)
    gamma, nodes = _bb_gamma(adj, 2, None)
    twos = _extremal_twos(adj, 2, gamma, maximize=(mode == "maximize_twos"))
    labels = _lex_first_labeling(adj, 2, gamma, twos_target=twos)
    witness = Labeling(graph, labels)
    all_minimum = None
    feasible = None
    if enumerate_all:
        _check_enum_limit(graph.order)
        all_minimum = tuple(Labeling(graph, labs)
                            for labs in _iter_exact_weight(adj, 2, gamma))
        feasible = tuple(sorted({sum(1 for x in lab.labels if x == 2)
                                 for lab in all_minimum}))
    stats = SolveStats(nodes, time.perf_counter() - start, "bruteforce")
    return SolveResult(gamma, witness, graph.order - gamma, stats, all_minimum, feasible)


def solve(graph: Graph, opts: SolveOptions | None = None) -> SolveResult:
    """Front door: dispatch on method and two_mode."""
    opts = opts or SolveOptions()
    if opts.two_mode != "any":
        if opts.attack_n != 2:
            raise ValueError("two_mode requires attack_n == 2")
        if opts.max_twos is not None:
            raise ValueError("two_mode cannot be combined with max_twos")
        return two_extremal_minimum(graph, opts.two_mode, opts.enumerate_all)
    method = opts.method
    if method == "auto":
        eccd_ok = (opts.attack_n == 2 and opts.max_twos is None
                   and graph.order <= limits.eccd_max_order())
        method = "eccd" if eccd_ok else "bruteforce"
    if method == "eccd":
        if opts.max_twos is not None:
            raise ValueError("method 'eccd' cannot enforce max_twos")
        result = gamma_via_eccd(graph)
        if opts.enumerate_all:
            _check_enum_limit(graph.order)
            adj = _adj_list(graph)
            all_minimum = tuple(Labeling(graph, labs)
                                for labs in _iter_exact_weight(adj, 2, result.gamma))
            feasible = tuple(sorted({sum(1 for x in lab.labels if x == 2)
                                     for lab in all_minimum}))
            return SolveResult(result.gamma, result.labeling, result.optimal_number,
                               result.stats, all_minimum, feasible)
        return result
    return gamma_bruteforce(graph, SolveOptions(
        attack_n=opts.attack_n, max_twos=opts.max_twos, method="bruteforce",
        enumerate_all=opts.enumerate_all))


def _gamma_auto(graph: Graph) -> int:
    if graph.order <= limits.eccd_max_order():
        return gamma_via_eccd(graph).gamma
    return gamma_bruteforce(graph).gamma


# ---------------------------------------------------------------------------
# constructive procedures on minimum labelings
# ---------------------------------------------------------------------------


def _require_minimum(graph: Graph, labeling: Labeling):
    if labeling.graph != graph:
        raise ValueError("labeling does not belong to this graph")
    if not validate(labeling, 2).valid:
        raise NotMinimumError("labeling is not a valid 2-attack labeling")
    gamma = _gamma_auto(graph)
    if labeling.weight != gamma:
        raise NotMinimumError(
            f"labeling weight {labeling.weight} differs from minimum {gamma}")


def assign_private_neighbors(graph: Graph, labeling: Labeling) -> tuple[Graph, dict[int, int]]:
    """Delete edges until every 2-vertex owns a private 0-neighbor.

    Works on a minimum labeling only.  Existing private neighbors are kept
    (lowest id per 2-vertex); each remaining 2-vertex adopts its lowest-id
    0-neighbor and that neighbor's edges to all other 2-vertices are removed.
    Returns the spanning subgraph and the 2-vertex -> private-0 matching.
    """
    _require_minimum(graph, labeling)
    adj = _adj_list(graph)
    zero_mask = labeling.label_mask(0)
    two_mask = labeling.label_mask(2)
    matching: dict[int, int] = {}
    for v in iter_bits(zero_mask):
        t = adj[v] & two_mask
        if t and t & (t - 1) == 0:
            w = t.bit_length() - 1
            if w not in matching:
                matching[w] = v
    for t_i in iter_bits(two_mask):
        if t_i in matching:
            continue
        candidates = adj[t_i] & zero_mask
        if candidates == 0:
            raise NotMinimumError(f"2-vertex {t_i} has no 0-neighbor")
        v_i = (candidates & -candidates).bit_length() - 1
        cut = adj[v_i] & two_mask & ~(1 << t_i)
        adj[v_i] &= ~cut
        for w in iter_bits(cut):
            adj[w] &= ~(1 << v_i)
        matching[t_i] = v_i
    sub = Graph._from_masks(adj, graph.external_ids)
    return sub, matching


def strip_ones(graph: Graph, labeling: Labeling) -> tuple[Graph, Labeling]:
    """Induced subgraph on the 0- and 2-labeled vertices, labels carried over."""
    from .graph import induced_subgraph

    _require_minimum(graph, labeling)
    keep = [v for v, lab in enumerate(labeling.labels) if lab != 1]
    sub = induced_subgraph(graph, keep)
    return sub, Labeling(sub, tuple(labeling.labels[v] for v in keep))
