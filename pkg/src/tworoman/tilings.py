"""Finite patches of the three regular plane tilings and periodic labelings.

Torus patches stand in for the infinite tilings: a periodic labeling that is
valid on a full-period torus wraps consistently, so boundary effects cannot
hide violations.  Open patches serve only as balls of the infinite graph.

Lattice realizations (vertex (x, y), id = y*width + x):

* square      -- edges to (x+1, y) and (x, y+1); 4-regular on the torus.
* hexagonal   -- brick wall: horizontal edges everywhere, vertical edge at
                 (x, y)-(x, y+1) when x+y is even; 3-regular on the torus
                 (height must be even).
* triangular  -- edges to (x+1, y), (x, y+1) and (x+1, y+1); 6-regular on
                 the torus.
"""

from __future__ import annotations

from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from itertools import combinations

from . import limits
from .errors import BadSpecError, IncompatibleTorusError, TooLargeError
from .graph import Graph, ball, max_degree
from .labeling import Labeling, validate
from .solver import _gamma_auto

LATTICE_KINDS = ("square", "hexagonal", "triangular")
LATTICE_DEGREE = {"square": 4, "hexagonal": 3, "triangular": 6}

_ROW_PATTERNS = {
    "hexagonal": (0, 0, 0, 2, 2, 0),
    "triangular": (0, 0, 0, 0, 2, 0, 0, 0, 2),
}
_MODULUS = {"square": 7, "hexagonal": 6, "triangular": 9}


@dataclass(frozen=True)
class PatchSpec:
    kind: str
    width: int
    height: int
    wrap: str = "open"

    def __post_init__(self):
        if self.kind not in LATTICE_KINDS:
            raise BadSpecError(f"unknown tiling kind: {self.kind!r}")
        if self.width < 1 or self.height < 1:
            raise BadSpecError("patch dimensions must be >= 1")
        if self.wrap not in ("open", "torus"):
            raise BadSpecError(f"wrap must be 'open' or 'torus', got {self.wrap!r}")
        if self.wrap == "torus":
            if self.width < 3 or self.height < 2:
                raise IncompatibleTorusError(
                    "torus needs width >= 3 and height >= 2 to stay simple")
            if self.kind != "hexagonal" and self.height < 3:
                raise IncompatibleTorusError(
                    f"{self.kind} torus needs height >= 3 to stay simple")
            if self.kind == "hexagonal" and self.height % 2:
                raise IncompatibleTorusError(
                    "hexagonal torus needs an even height")


@dataclass(frozen=True)
class Patch:
    """A lattice patch together with its coordinate layout."""

    spec: PatchSpec
    graph: Graph

    def vertex_id(self, x: int, y: int) -> int:
        return y * self.spec.width + x

    def coords(self, v: int) -> tuple[int, int]:
        return v % self.spec.width, v // self.spec.width


_NEIGHBOR_STEPS = {
    "square": ((1, 0), (0, 1)),
    "triangular": ((1, 0), (0, 1), (1, 1)),
}


def generate_patch(spec: PatchSpec) -> Patch:
    w, h = spec.width, spec.height
    torus = spec.wrap == "torus"
    edges = []
    if spec.kind == "hexagonal":
        for y in range(h):
            for x in range(w):
                if torus or x + 1 < w:
                    edges.append((y * w + x, y * w + (x + 1) % w))
                if (x + y) % 2 == 0 and (torus or y + 1 < h):
                    edges.append((y * w + x, ((y + 1) % h) * w + x))
    else:
        for y in range(h):
            for x in range(w):
                for dx, dy in _NEIGHBOR_STEPS[spec.kind]:
                    nx, ny = x + dx, y + dy
                    if torus:
                        nx, ny = nx % w, ny % h
                    elif nx >= w or ny >= h:
                        continue
                    edges.append((y * w + x, ny * w + nx))
    graph = Graph(w * h, [e for e in edges if e[0] != e[1]])
    return Patch(spec, graph)


@dataclass(frozen=True)
class TilingPattern:
    """Periodic labeling: label_at(x, y) = labels[(ax*x + ay*y + t) mod m].

    The period vectors are (x_period, 0) and (0, y_period); a torus is
    compatible when each dimension is a multiple of the matching period.
    """

    kind: str
    modulus: int
    x_coeff: int
    y_coeff: int
    offset: int
    labels: tuple[int, ...]

    def __post_init__(self):
        if len(self.labels) != self.modulus:
            raise BadSpecError("labels must assign one value per residue class")
        if any(lab not in (0, 1, 2) for lab in self.labels):
            raise BadSpecError("pattern labels must be in {0, 1, 2}")

    def label_at(self, x: int, y: int) -> int:
        return self.labels[(self.x_coeff * x + self.y_coeff * y + self.offset) % self.modulus]

    @property
    def x_period(self) -> int:
        from math import gcd
        return self.modulus // gcd(self.x_coeff, self.modulus)

    @property
    def y_period(self) -> int:
        from math import gcd
        return self.modulus // gcd(self.y_coeff, self.modulus)

    @property
    def declared_density(self) -> Fraction:
        return Fraction(sum(self.labels), self.modulus)


def pattern_labeling(pattern: TilingPattern, patch: Patch) -> Labeling:
    """Apply the pattern to a compatible torus patch."""
    spec = patch.spec
    if spec.wrap != "torus":
        raise IncompatibleTorusError("patterns apply to torus patches only")
    if spec.kind != pattern.kind:
        raise BadSpecError(f"pattern is for {pattern.kind}, patch is {spec.kind}")
    m = pattern.modulus
    if (spec.width * pattern.x_coeff) % m or (spec.height * pattern.y_coeff) % m:
        raise IncompatibleTorusError(
            f"{spec.width}x{spec.height} torus does not wrap the pattern period")
    labels = [0] * (spec.width * spec.height)
    for y in range(spec.height):
        for x in range(spec.width):
            labels[y * spec.width + x] = pattern.label_at(x, y)
    return Labeling(patch.graph, tuple(labels))


def _pattern_candidates(kind: str):
    m = _MODULUS[kind]
    if kind == "square":
        # per-block label strings are not pinned down for the square lattice,
        # so sweep the placements of two 2-labels among the 7 residues
        for y_coeff in range(m):
            for i, j in combinations(range(m), 2):
                labels = tuple(2 if r in (i, j) else 0 for r in range(m))
                yield TilingPattern(kind, m, 1, y_coeff, 0, labels)
        return
    labels = _ROW_PATTERNS[kind]
    for x_coeff in range(m):
        for y_coeff in range(m):
            for offset in range(m):
                yield TilingPattern(kind, m, x_coeff, y_coeff, offset, labels)


@lru_cache(maxsize=None)
def find_pattern(kind: str) -> TilingPattern:
    """First periodic labeling that is valid on the minimal torus and meets
    the 4/(degree+3) target density, in a fixed candidate order."""
    if kind not in LATTICE_KINDS:
        raise BadSpecError(f"unknown tiling kind: {kind!r}")
    m = _MODULUS[kind]
    patch = generate_patch(PatchSpec(kind, m, m, "torus"))
    target = density_target(kind)
    for pattern in _pattern_candidates(kind):
        labeling = pattern_labeling(pattern, patch)
        if Fraction(labeling.weight, patch.graph.order) != target:
            continue
        if validate(labeling, 2).valid:
            return pattern
    raise BadSpecError(f"no valid {kind} pattern found")


def density_target(kind: str) -> Fraction:
    return Fraction(4, LATTICE_DEGREE[kind] + 3)


@dataclass(frozen=True)
class PatternReport:
    width: int
    height: int
    valid: bool
    density: Fraction
    weight: int
    order: int
    witness: tuple[int, ...] | None = None


def verify_pattern(pattern: TilingPattern, sizes, threads: int = 1) -> list[PatternReport]:
    """Validate the pattern on each torus size and report exact densities.

    Validity is size-independent: the attack-2 conditions only inspect a
    2-neighborhood, every vertex's 2-neighborhood on a compatible torus is a
    translate of one on the single-period torus, and the labeling commutes
    with those translates.  Checking two sizes per kind in the test suite
    exercises that argument empirically.
    """
    sizes = list(sizes)

    def one(size):
        w, h = size
        patch = generate_patch(PatchSpec(pattern.kind, w, h, "torus"))
        labeling = pattern_labeling(pattern, patch)
        report = validate(labeling, 2)
        return PatternReport(w, h, report.valid,
                             Fraction(labeling.weight, patch.graph.order),
                             labeling.weight, patch.graph.order, report.witness)

    if threads > 1 and len(sizes) > 1:
        with ThreadPoolExecutor(max_workers=threads) as pool:
            return list(pool.map(one, sizes))
    return [one(size) for size in sizes]


def pattern_table(pattern: TilingPattern) -> str:
    """Residue-class table, one line per realized residue: 'dx dy label'.

    Coefficients sharing a factor with the modulus realize only a subgroup of
    residues on the lattice; unrealized classes carry no cells and are
    omitted.  Realized classes cover a compatible torus uniformly, so the
    table's label average equals the pattern density.
    """
    seen = {}
    m = pattern.modulus
    for dy in range(m):
        for dx in range(m):
            r = (pattern.x_coeff * dx + pattern.y_coeff * dy + pattern.offset) % m
            if r not in seen:
                seen[r] = (dx, dy)
    lines = []
    for r in sorted(seen):
        dx, dy = seen[r]
        lines.append(f"{dx} {dy} {pattern.labels[r]}")
    return "\n".join(lines) + "\n"


# ---------------------------------------------------------------------------
# balls of the infinite lattices
# ---------------------------------------------------------------------------


def _lattice_ball(kind: str, radius: int) -> tuple[Graph, list[tuple[int, int]]]:
    """Ball of the infinite lattice as a graph plus per-vertex coordinates.

    A (2r+1)-wide open patch suffices: every step changes each coordinate by
    at most 1, so shortest paths from the center stay inside the patch and
    patch distances equal infinite-lattice distances.
    """
    side = 2 * radius + 1
    patch = generate_patch(PatchSpec(kind, side, side, "open"))
    center = patch.vertex_id(radius, radius)
    sub = ball(patch.graph, center, radius)
    coords = [patch.coords(ext) for ext in sub.external_ids]
    return sub, coords


def ball_graph(kind: str, radius: int) -> Graph:
    """Induced subgraph on the lattice vertices within the given radius."""
    if kind not in LATTICE_KINDS:
        raise BadSpecError(f"unknown tiling kind: {kind!r}")
    if radius < 0:
        raise BadSpecError("radius must be >= 0")
    return _lattice_ball(kind, radius)[0]


def ball_density_sequence(kind: str, radii) -> list[tuple[int, Fraction]]:
    """Exact ball densities around a canonical center vertex.

    For the path the ball of radius n is a path on 2n+1 vertices, whose
    number is (2n+1) - floor((2n+1)/5) in closed form (cross-checked against
    the solver in the test suite).  Lattice balls are solved exactly and
    raise TooLargeError beyond the exhaustive limits.
    """
    out = []
    for radius in radii:
        if radius < 0:
            raise BadSpecError("radius must be >= 0")
        if kind == "path":
            n = 2 * radius + 1
            out.append((radius, Fraction(n - n // 5, n)))
            continue
        if kind not in LATTICE_KINDS:
            raise BadSpecError(f"unknown tiling kind: {kind!r}")
        sub = ball_graph(kind, radius)
        limit = max(limits.bruteforce_max_order(), limits.eccd_max_order())
        if sub.order > limit:
            raise TooLargeError(sub.order, limit)
        out.append((radius, Fraction(_gamma_auto(sub), sub.order)))
    return out


def ball_density_bounds(kind: str, radii) -> list[tuple[int, Fraction, Fraction]]:
    """(radius, lower, upper) density bounds for lattice balls of any size.

    Lower bound: 4/(max degree of the ball + 3).  Upper bound: the built-in
    periodic pattern restricted to the ball, repaired to validity by raising
    offending 0s to 1; its density is achievable, hence an upper bound.
    """
    if kind not in LATTICE_KINDS:
        raise BadSpecError(f"unknown tiling kind: {kind!r}")
    pattern = find_pattern(kind)
    out = []
    for radius in radii:
        if radius < 0:
            raise BadSpecError("radius must be >= 0")
        sub, coords = _lattice_ball(kind, radius)
        labels = [pattern.label_at(x, y) for (x, y) in coords]
        labeling = Labeling(sub, tuple(labels))
        while True:
            report = validate(labeling, 2)
            if report.valid:
                break
            bump = min(v for v in report.witness if labeling.labels[v] == 0)
            labels[bump] = 1
            labeling = Labeling(sub, tuple(labels))
        lower = Fraction(4, max_degree(sub) + 3)
        upper = Fraction(labeling.weight, sub.order)
        out.append((radius, lower, upper))
    return out
