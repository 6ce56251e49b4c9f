"""Combinatorial maps (graphs embedded in orientable surfaces via rotation
systems), face tracing, and exhaustive small-scale verification of two
parallel-edge claims:

* a monogon-free map in a closed orientable surface S with E > 3V max(1 - chi(S), 1)
  has parallel edges (edges joined by a chain of bigon faces);
* the number of pairwise-nonparallel nontrivial arc classes on a surface Q
  is at most max(-3 chi(Q), 1), with equality realized by ideal
  triangulations (E = -3 chi).

Maps are encoded by a vertex permutation sigma (cycles = vertices, giving
the rotation) and a fixed-point-free edge involution alpha pairing darts.
The face permutation is phi(d) = sigma(alpha(d)); chi = V - E + F.  Only
orientable maps arise from this encoding.

Exhaustive enumeration is feasible for small cells only, so the parallel-
edge verifier is a hybrid: cells whose raw candidate count fits a work
budget are enumerated outright; larger cells are discharged by the degree
count argument, which is checked numerically in-line (see
_degree_count_discharge).
"""

from __future__ import annotations

from dataclasses import dataclass


class MapError(ValueError):
    """Base class for graph-verifier errors."""


class MalformedMap(MapError):
    """Permutation data does not define a combinatorial map."""


class MalformedSample(MapError):
    """Labeled pair data is inconsistent."""


class LimitExceeded(MapError):
    """Requested enumeration exceeds the configured limits."""


def _cycles(perm: tuple[int, ...]) -> list[tuple[int, ...]]:
    seen = [False] * len(perm)
    out = []
    for start in range(len(perm)):
        if seen[start]:
            continue
        cyc = []
        d = start
        while not seen[d]:
            seen[d] = True
            cyc.append(d)
            d = perm[d]
        out.append(tuple(cyc))
    return out


@dataclass(frozen=True)
class CombinatorialMap:
    """A graph in an orientable surface: rotation system plus edge pairing.

    sigma and alpha act on darts 0..2E-1; cycles of sigma are vertices,
    orbits of alpha are edges.  isolated_vertices counts extra valence-0
    vertices carrying no darts; they raise V (and chi) but nothing else.
    """

    sigma: tuple[int, ...]
    alpha: tuple[int, ...]
    isolated_vertices: int = 0

    def __post_init__(self):
        n = len(self.sigma)
        if n == 0 or n % 2:
            raise MalformedMap("dart count must be positive and even")
        if len(self.alpha) != n:
            raise MalformedMap("sigma and alpha must act on the same darts")
        if sorted(self.sigma) != list(range(n)):
            raise MalformedMap("sigma is not a permutation of the darts")
        for d in range(n):
            a = self.alpha[d]
            if not 0 <= a < n or a == d or self.alpha[a] != d:
                raise MalformedMap("alpha is not a fixed-point-free involution")
        if self.isolated_vertices < 0:
            raise MalformedMap("isolated vertex count must be nonnegative")

    @property
    def num_edges(self) -> int:
        return len(self.sigma) // 2

    @property
    def num_vertices(self) -> int:
        return len(_cycles(self.sigma)) + self.isolated_vertices

    def edge_of(self, dart: int) -> int:
        """Canonical edge id of a dart: the smaller dart of its pair."""
        return min(dart, self.alpha[dart])

    def is_connected(self) -> bool:
        """Connectivity of the dart graph (ignores isolated vertices)."""
        n = len(self.sigma)
        seen = {0}
        stack = [0]
        while stack:
            d = stack.pop()
            for nxt in (self.sigma[d], self.alpha[d]):
                if nxt not in seen:
                    seen.add(nxt)
                    stack.append(nxt)
        return len(seen) == n


def standard_involution(num_edges: int) -> tuple[int, ...]:
    """The pairing (0 1)(2 3)...: dart d with d xor 1."""
    return tuple(d ^ 1 for d in range(2 * num_edges))


@dataclass(frozen=True)
class FaceReport:
    faces: tuple[tuple[int, ...], ...]
    degrees: tuple[int, ...]
    monogons: int
    bigons: tuple[tuple[int, int], ...]
    parallel_classes: tuple[tuple[int, ...], ...]
    num_vertices: int
    num_edges: int
    euler_characteristic: int

    @property
    def num_faces(self) -> int:
        return len(self.faces)

    @property
    def num_parallel_classes(self) -> int:
        return len(self.parallel_classes)

    def has_parallel_edges(self) -> bool:
        return self.num_parallel_classes < self.num_edges


class _UnionFind:
    def __init__(self, items):
        self.parent = {x: x for x in items}

    def find(self, x):
        while self.parent[x] != x:
            self.parent[x] = self.parent[self.parent[x]]
            x = self.parent[x]
        return x

    def union(self, x, y):
        rx, ry = self.find(x), self.find(y)
        if rx != ry:
            self.parent[max(rx, ry)] = min(rx, ry)


def trace_faces(m: CombinatorialMap) -> FaceReport:
    """Trace the faces of a map and classify them.

    Faces are orbits of phi(d) = sigma(alpha(d)).  Monogons are degree-1
    faces.  Two edges are parallel when linked by a chain of bigon faces;
    classes are computed with a union-find seeded by the bigons.
    """
    n = len(m.sigma)
    phi = tuple(m.sigma[m.alpha[d]] for d in range(n))
    faces = tuple(tuple(c) for c in _cycles(phi))
    degrees = tuple(sorted(len(f) for f in faces))
    if sum(degrees) != n:
        raise MalformedMap("face degrees do not sum to the dart count")
    monogons = sum(1 for f in faces if len(f) == 1)
    edges = sorted({m.edge_of(d) for d in range(n)})
    uf = _UnionFind(edges)
    bigons = []
    for f in faces:
        if len(f) == 2:
            e1, e2 = m.edge_of(f[0]), m.edge_of(f[1])
            bigons.append((min(e1, e2), max(e1, e2)))
            uf.union(e1, e2)
    groups: dict[int, list[int]] = {}
    for e in edges:
        groups.setdefault(uf.find(e), []).append(e)
    classes = tuple(tuple(sorted(g)) for _, g in sorted(groups.items()))
    V = m.num_vertices
    E = m.num_edges
    return FaceReport(
        faces=faces,
        degrees=degrees,
        monogons=monogons,
        bigons=tuple(sorted(bigons)),
        parallel_classes=classes,
        num_vertices=V,
        num_edges=E,
        euler_characteristic=V - E + len(faces),
    )


# ---------------------------------------------------------------------------
# Enumeration
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class EnumerationLimits:
    """Hard caps keeping exhaustive runs tractable."""

    v_max: int = 3
    e_max: int = 12
    work_budget: int | None = None


DEFAULT_LIMITS = EnumerationLimits()


def _partitions_into(n: int, k: int, largest: int | None = None):
    """Partitions of n into exactly k positive parts, nonincreasing."""
    if largest is None:
        largest = n
    if k == 1:
        if n <= largest:
            yield (n,)
        return
    for first in range(min(n - k + 1, largest), 0, -1):
        for rest in _partitions_into(n - first, k - 1, first):
            yield (first,) + rest


def _standard_sigma(cycle_lengths: tuple[int, ...]) -> tuple[int, ...]:
    sigma = []
    start = 0
    for length in cycle_lengths:
        sigma.extend(start + (j + 1) % length for j in range(length))
        start += length
    return tuple(sigma)


def _involutions(darts: list[int]):
    """All fixed-point-free involutions on the given darts, as dicts."""
    if not darts:
        yield {}
        return
    first = darts[0]
    for j in range(1, len(darts)):
        partner = darts[j]
        rest = darts[1:j] + darts[j + 1 :]
        for sub in _involutions(rest):
            sub[first] = partner
            sub[partner] = first
            yield sub


def _double_factorial_odd(k: int) -> int:
    """(2k - 1)!! = number of perfect matchings on 2k points."""
    out = 1
    for j in range(1, 2 * k, 2):
        out *= j
    return out


def candidate_count(V: int, E: int) -> int:
    """Raw candidates examined when enumerating the (V, E) cell."""
    types = sum(1 for _ in _partitions_into(2 * E, V)) if V <= 2 * E else 0
    return types * _double_factorial_odd(E)


def canonical_key(m: CombinatorialMap):
    """Isomorphism-invariant key for connected maps.

    Relabels darts by breadth-first traversal (successor order: rotation
    then pairing) from every start dart, in both orientations, and takes
    the lexicographically smallest relabeled (sigma, alpha) pair.
    """
    n = len(m.sigma)
    sigma_inv = [0] * n
    for d in range(n):
        sigma_inv[m.sigma[d]] = d
    best = None
    for orient in (m.sigma, tuple(sigma_inv)):
        for start in range(n):
            labels = {start: 0}
            order = [start]
            i = 0
            while i < len(order):
                d = order[i]
                for nxt in (orient[d], m.alpha[d]):
                    if nxt not in labels:
                        labels[nxt] = len(order)
                        order.append(nxt)
                i += 1
            key = (
                tuple(labels[orient[d]] for d in order),
                tuple(labels[m.alpha[d]] for d in order),
            )
            if best is None or key < best:
                best = key
    return best


def enumerate_maps(
    V: int,
    E: int,
    monogon_free: bool = False,
    limits: EnumerationLimits = DEFAULT_LIMITS,
):
    """Yield one representative per isomorphism class of connected maps
    with V vertices and E edges, in a deterministic order.

    Up to isomorphism the vertex permutation can be fixed per cycle type,
    so the search runs over cycle types (partitions of 2E into V parts)
    times fixed-point-free involutions; duplicates are removed by
    canonical form.
    """
    if V < 1 or E < 1:
        raise MapError("V >= 1 and E >= 1 required")
    if V > limits.v_max or E > limits.e_max:
        raise LimitExceeded(
            f"cell V={V}, E={E} exceeds limits {limits.v_max}, {limits.e_max}"
        )
    if limits.work_budget is not None and candidate_count(V, E) > limits.work_budget:
        raise LimitExceeded(
            f"cell V={V}, E={E} needs {candidate_count(V, E)} candidates,"
            f" budget is {limits.work_budget}"
        )
    darts = list(range(2 * E))
    seen = set()
    for cycle_lengths in _partitions_into(2 * E, V):
        sigma = _standard_sigma(cycle_lengths)
        for pairing in _involutions(darts):
            alpha = tuple(pairing[d] for d in darts)
            m = CombinatorialMap(sigma, alpha)
            if not m.is_connected():
                continue
            if monogon_free and trace_faces(m).monogons:
                continue
            key = canonical_key(m)
            if key in seen:
                continue
            seen.add(key)
            yield m


# ---------------------------------------------------------------------------
# Parallel-edge verification
# ---------------------------------------------------------------------------


def edge_threshold(V: int, chi: int) -> int:
    """3V max(1 - chi, 1): above this a monogon-free map has parallel edges."""
    return 3 * V * max(1 - chi, 1)


def _degree_count_discharge(V: int, E: int, chi_values) -> bool:
    """Check that the degree count argument covers the (V, E) cell.

    A connected monogon-free map with E >= 2 and no parallel edges has all
    faces of degree >= 3: monogons are excluded, and a bigon either joins
    two distinct edges (parallel) or uses both darts of one edge, which
    forces both endpoints to be valence-1 vertices and the map to be the
    single-edge map (E = 1).  Then 2E = sum of face degrees >= 3F, so
    F <= 2E/3 and chi = V - E + F gives E <= 3(V - chi).  The cell is
    discharged when 3(V - chi) <= edge_threshold(V, chi) for every
    candidate chi, so no counterexample can have E above the threshold.
    """
    if E < 2:
        return True
    return all(3 * (V - chi) <= edge_threshold(V, chi) for chi in chi_values)


@dataclass(frozen=True)
class CellResult:
    V: int
    E: int
    method: str  # "enumerated" or "degree-count"
    maps_checked: int
    above_threshold_checked: int
    counterexamples: tuple[str, ...]
    tightness_witnesses: int


@dataclass(frozen=True)
class ParallelEdgeReport:
    v_max: int
    e_budget: int
    chi_min: int
    cells: tuple[CellResult, ...]
    isolated_vertex_note: str

    @property
    def counterexamples(self) -> tuple[str, ...]:
        return tuple(c for cell in self.cells for c in cell.counterexamples)

    @property
    def total_checked(self) -> int:
        return sum(cell.maps_checked for cell in self.cells)

    def render(self) -> str:
        lines = [
            "parallel-edge verification report",
            f"cells: V <= {self.v_max}, E <= {self.e_budget}, chi >= {self.chi_min}",
        ]
        for c in self.cells:
            lines.append(
                f"  V={c.V} E={c.E} [{c.method}] maps={c.maps_checked}"
                f" above-threshold={c.above_threshold_checked}"
                f" tight={c.tightness_witnesses}"
                f" counterexamples={len(c.counterexamples)}"
            )
        lines.append(f"total maps checked: {self.total_checked}")
        lines.append(f"counterexamples: {len(self.counterexamples)}")
        for c in self.counterexamples:
            lines.append(f"  !! {c}")
        lines.append(self.isolated_vertex_note)
        return "\n".join(lines) + "\n"


def verify_parallelP(
    V_max: int,
    E_budget: int,
    chi_min: int = -2,
    work_budget: int = 150_000,
    limits: EnumerationLimits = DEFAULT_LIMITS,
) -> ParallelEdgeReport:
    """Verify that monogon-free maps above the edge threshold have parallel
    edges, over every cell V <= V_max, E <= E_budget, chi >= chi_min.

    Cells whose candidate count fits the work budget are enumerated
    exhaustively; the rest are discharged by the degree count argument
    (see _degree_count_discharge), which rules out counterexamples without
    listing maps.  Every cell is covered by one of the two methods or the
    run fails.
    """
    if V_max > limits.v_max or E_budget > limits.e_max:
        raise LimitExceeded("requested range exceeds configured limits")
    chi_values = tuple(range(2, chi_min - 1, -2))
    cells = []
    for V in range(1, V_max + 1):
        for E in range(1, E_budget + 1):
            if candidate_count(V, E) <= work_budget:
                checked = above = tight = 0
                bad = []
                for m in enumerate_maps(V, E, monogon_free=True, limits=limits):
                    report = trace_faces(m)
                    chi = report.euler_characteristic
                    if chi < chi_min:
                        continue
                    checked += 1
                    threshold = edge_threshold(V, chi)
                    if E > threshold:
                        above += 1
                        if not report.has_parallel_edges():
                            bad.append(
                                f"V={V} E={E} chi={chi} sigma={m.sigma} alpha={m.alpha}"
                            )
                    elif E == threshold and not report.has_parallel_edges():
                        tight += 1
                cells.append(
                    CellResult(V, E, "enumerated", checked, above, tuple(bad), tight)
                )
            else:
                if not _degree_count_discharge(V, E, chi_values):
                    raise MapError(
                        f"cell V={V}, E={E} is neither enumerable nor discharged"
                    )
                cells.append(CellResult(V, E, "degree-count", 0, 0, (), 0))
    note = (
        "isolated vertices only increase V, hence the threshold;"
        " they cannot create counterexamples"
    )
    return ParallelEdgeReport(V_max, E_budget, chi_min, tuple(cells), note)


# ---------------------------------------------------------------------------
# Arc-class bound via ideal triangulations
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class TriangulationResult:
    V: int
    E: int
    ideal_chi: int
    triangulations: int
    class_counts: tuple[int, ...]
    bound: int

    @property
    def ok(self) -> bool:
        return all(c <= self.bound for c in self.class_counts)


@dataclass(frozen=True)
class TriangulationReport:
    results: tuple[TriangulationResult, ...]
    annulus_bound: int

    @property
    def ok(self) -> bool:
        return all(r.ok for r in self.results) and self.annulus_bound == 1

    def render(self) -> str:
        lines = ["arc-class bound verification (ideal triangulations)"]
        for r in self.results:
            lines.append(
                f"  V={r.V} E={r.E} ideal-chi={r.ideal_chi}"
                f" triangulations={r.triangulations}"
                f" classes={sorted(set(r.class_counts))} bound={r.bound}"
            )
        lines.append(f"annulus (chi=0) bound: {self.annulus_bound}")
        lines.append(f"ok: {self.ok}")
        return "\n".join(lines) + "\n"


def verify_parallel_class_bound(
    E_budget: int = 6, limits: EnumerationLimits = DEFAULT_LIMITS
) -> TriangulationReport:
    """Confirm the max(-3 chi, 1) arc-class bound on enumerated ideal
    triangulations with ideal chi in {-1, -2}.

    Vertices model punctures, so the ideal Euler characteristic is
    F - E = chi(map) - V; all-triangle maps have E = -3 (F - E) exactly,
    and no bigons, so every edge is its own parallelism class and the
    bound holds with equality.
    """
    results = []
    for E in range(3, E_budget + 1, 3):
        for V in range(1, limits.v_max + 1):
            # all-triangle maps have F = 2E/3 and even Euler characteristic
            if (V - E + 2 * E // 3) % 2:
                continue
            if candidate_count(V, E) > 500_000:
                continue
            counts = []
            ideal_chi = None
            for m in enumerate_maps(V, E, monogon_free=True, limits=limits):
                report = trace_faces(m)
                if any(d != 3 for d in report.degrees):
                    continue
                chi = report.euler_characteristic - V
                if chi not in (-1, -2):
                    continue
                if report.num_edges != -3 * chi:
                    raise MapError("triangulation violates E = -3 chi")
                ideal_chi = chi
                counts.append(report.num_parallel_classes)
            if counts:
                bound = max(-3 * ideal_chi, 1)
                results.append(
                    TriangulationResult(
                        V, E, ideal_chi, len(counts), tuple(counts), bound
                    )
                )
    return TriangulationReport(tuple(results), annulus_bound=max(-3 * 0, 1))


# ---------------------------------------------------------------------------
# Parity rule on labeled pair samples
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class LabeledPairSample:
    """Corresponded edges of two labeled graphs, recorded as per-endpoint
    orientation signs.  Edge k of the first graph has endpoint signs
    edges_a[k]; the corresponded edge of the second graph has edges_b[k].
    An edge joins parallel vertex classes when its two signs agree.
    """

    edges_a: tuple[tuple[int, int], ...]
    edges_b: tuple[tuple[int, int], ...]


def validate_parity(sample: LabeledPairSample) -> bool:
    """True iff every corresponded edge joins parallel vertex classes in
    exactly one of the two graphs."""
    if len(sample.edges_a) != len(sample.edges_b):
        raise MalformedSample("edge sets are not in bijection")
    for pair in sample.edges_a + sample.edges_b:
        if len(pair) != 2 or any(s not in (-1, 1) for s in pair):
            raise MalformedSample("endpoint signs must be +1 or -1")
    for (a1, a2), (b1, b2) in zip(sample.edges_a, sample.edges_b):
        if (a1 == a2) == (b1 == b2):
            return False
    return True


def make_torus_parity_sample(a, b) -> LabeledPairSample:
    """Labeled pair sample from the crossings of two oriented torus curves.

    All crossings of two coherently oriented curves have the same sign, so
    the boundary-side graph sees parallel endpoint classes at every
    crossing while the companion graph sees antiparallel ones.
    """
    from .torus import intersection

    d = intersection(a, b)
    if d == 0:
        raise MalformedSample("disjoint classes give no crossings")
    sign = 1 if a.p * b.q - a.q * b.p > 0 else -1
    return LabeledPairSample(
        edges_a=tuple((sign, sign) for _ in range(d)),
        edges_b=tuple((1, -1) for _ in range(d)),
    )
