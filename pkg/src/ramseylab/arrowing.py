"""The arrowing decision engine and everything built on top of it.

A host F arrows a pair (G, H) when every red/blue edge coloring of F shows a
red G or a blue H.  The pruned decider enumerates the copies of G and H in F
once, then runs a DFS over partial colorings: a copy acts as the constraint
"not all of my edges may take my forbidden color", conflicts prune, and
almost-complete copies force the last free edge (unit propagation).  A
completed conflict-free coloring is a witness that F does not arrow; an
exhausted search proves that it does.

The exhaustive decider rebuilds the copies by brute-force injection
enumeration and scans all 2^m colorings vectorized; it exists to cross-check
the pruned search and never shares its search path.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass, field

import numpy as np

from .errors import BudgetExhaustedError, CapExceededError, InvariantViolationError
from .graphs import BLUE, RED, Edge, EdgeColoring, Graph, edge
from .subgraph import GraphTooLargeError, chromatic_number, clique_number, contains_copy, copies_as_edge_sets
from .enumeration import are_isomorphic, graphs_up_to_vertices
from .formats import graph_to_graph6

DEFAULT_BUDGET = 50_000_000

_RED_BIT = 0  # internal encoding: 0 = red, 1 = blue
_BLUE_BIT = 1


def coloring_is_free(f: Graph, c: EdgeColoring, g: Graph, h: Graph) -> bool:
    """True iff c has no red-restricted copy of g and no blue-restricted copy of h."""
    if c.host != f:
        raise ValueError("coloring domain mismatch: coloring does not belong to f")
    if contains_copy(f, g, restricted_to=c.predicate(RED)) is not None:
        return False
    return contains_copy(f, h, restricted_to=c.predicate(BLUE)) is None


@dataclass(frozen=True)
class ArrowingVerdict:
    arrows: bool
    witness: EdgeColoring | None
    nodes_explored: int
    method: str

    def __post_init__(self):
        if self.arrows and self.witness is not None:
            raise ValueError("a positive verdict cannot carry a witness")
        if not self.arrows and self.witness is None:
            raise ValueError("a negative verdict must carry a witness coloring")
        if self.method == "sampled" and self.arrows:
            raise ValueError("sampling can only establish negative verdicts")
        if self.method not in ("exhaustive", "pruned", "sampled"):
            raise ValueError(f"unknown method {self.method!r}")


class _ArrowEngine:
    """Clause-based DFS with unit propagation over one (f, g, h) instance."""

    def __init__(self, f: Graph, g: Graph, h: Graph):
        self.f = f
        self.g = g
        self.h = h
        self.m = f.m
        self.edge_index = {e: i for i, e in enumerate(f.edges)}
        self.trivial_arrows = False

        clause_edges: list[tuple[int, ...]] = []
        clause_bad: list[int] = []
        for pattern, bad in ((g, _RED_BIT), (h, _BLUE_BIT)):
            for copy in copies_as_edge_sets(f, pattern):
                if not copy:
                    # An edgeless copy is monochromatic under every coloring.
                    self.trivial_arrows = True
                    return
                clause_edges.append(tuple(sorted(self.edge_index[e] for e in copy)))
                clause_bad.append(bad)
        self.clause_edges = clause_edges
        self.clause_bad = clause_bad
        self.size = [len(c) for c in clause_edges]
        by_edge: list[list[int]] = [[] for _ in range(self.m)]
        for ci, edges in enumerate(clause_edges):
            for e in edges:
                by_edge[e].append(ci)
        self.by_edge = [tuple(x) for x in by_edge]
        # Branch on the most constrained edges first.
        self.order = sorted(range(self.m), key=lambda e: (-len(by_edge[e]), e))
        # Swapping the two colors maps free colorings onto free colorings
        # exactly when the two patterns coincide.
        self.symmetric = are_isomorphic(g, h)

    def solve(
        self, budget: int, prefix: tuple[tuple[int, int], ...] = ()
    ) -> tuple[list[int] | None, int]:
        """Run the DFS; returns (witness colors by edge index | None, nodes).

        A None witness means every completion of `prefix` contains a red g or
        a blue h.  Raises BudgetExhaustedError when the node budget runs out.
        """
        if self.trivial_arrows:
            return None, 0
        m = self.m
        color = [-1] * m
        n_bad = [0] * len(self.clause_edges)
        n_good = [0] * len(self.clause_edges)
        by_edge = self.by_edge
        clause_bad = self.clause_bad
        clause_edges = self.clause_edges
        size = self.size
        nodes = 0

        def assign(e: int, c: int) -> list[int] | None:
            """Propagate one assignment; returns the trail or None on conflict."""
            trail: list[int] = []
            queue = [(e, c)]
            qi = 0
            while qi < len(queue):
                e, c = queue[qi]
                qi += 1
                cur = color[e]
                if cur != -1:
                    if cur == c:
                        continue
                    undo(trail)
                    return None
                color[e] = c
                trail.append(e)
                conflict = False
                # Counter updates for this edge must complete even on conflict,
                # or undo() would decrement clauses that were never incremented.
                for ci in by_edge[e]:
                    if clause_bad[ci] == c:
                        n_bad[ci] += 1
                        if not conflict and n_good[ci] == 0:
                            nb = n_bad[ci]
                            if nb == size[ci]:
                                conflict = True
                            elif nb == size[ci] - 1:
                                for fe in clause_edges[ci]:
                                    if color[fe] == -1:
                                        queue.append((fe, 1 - c))
                                        break
                    else:
                        n_good[ci] += 1
                if conflict:
                    undo(trail)
                    return None
            return trail

        def undo(trail: list[int]) -> None:
            for e in reversed(trail):
                c = color[e]
                for ci in by_edge[e]:
                    if clause_bad[ci] == c:
                        n_bad[ci] -= 1
                    else:
                        n_good[ci] -= 1
                color[e] = -1

        # Unit clauses force moves before any branching.
        seed: list[tuple[int, int]] = list(prefix)
        for ci, edges in enumerate(clause_edges):
            if len(edges) == 1:
                seed.append((edges[0], 1 - clause_bad[ci]))
        for e, c in seed:
            if assign(e, c) is None:
                return None, 0

        order = self.order
        # With identical patterns and no pinned prefix, the color swap is a
        # free-coloring bijection, so the first branched edge may be fixed red.
        first_branch_colors = (
            (_RED_BIT,) if self.symmetric and not prefix else (_RED_BIT, _BLUE_BIT)
        )

        def search(pos: int) -> list[int] | None:
            nonlocal nodes
            while pos < m and color[order[pos]] != -1:
                pos += 1
            if pos == m:
                return list(color)
            first = nodes == 0
            nodes += 1
            if nodes > budget:
                raise BudgetExhaustedError(
                    f"arrowing search exceeded {budget} nodes", nodes_explored=nodes
                )
            e = order[pos]
            for c in first_branch_colors if first else (_RED_BIT, _BLUE_BIT):
                trail = assign(e, c)
                if trail is not None:
                    result = search(pos + 1)
                    if result is not None:
                        return result
                    undo(trail)
            return None

        return search(0), nodes

    def coloring_from_colors(self, colors: list[int]) -> EdgeColoring:
        red = [e for e, i in self.edge_index.items() if colors[i] == _RED_BIT]
        blue = [e for e, i in self.edge_index.items() if colors[i] == _BLUE_BIT]
        return EdgeColoring(self.f, red=red, blue=blue)


def arrows(
    f: Graph,
    g: Graph,
    h: Graph,
    budget: int = DEFAULT_BUDGET,
    pinned: dict[Edge, str] | None = None,
) -> ArrowingVerdict:
    """Decide f -> (g, h) by pruned DFS over edge 2-colorings.

    With `pinned`, only colorings extending the given edge->color assignment
    are considered: arrows=True then means every such extension is
    monochromatic.  Raises BudgetExhaustedError (indeterminate) instead of
    ever returning a wrong verdict.
    """
    engine = _ArrowEngine(f, g, h)
    prefix: tuple[tuple[int, int], ...] = ()
    if pinned:
        prefix = tuple(
            (engine.edge_index[edge(*e)], _RED_BIT if col == RED else _BLUE_BIT)
            for e, col in sorted(pinned.items())
        )
    colors, nodes = engine.solve(budget, prefix)
    if colors is None:
        return ArrowingVerdict(True, None, nodes, "pruned")
    witness = engine.coloring_from_colors(colors)
    if not coloring_is_free(f, witness, g, h):
        raise InvariantViolationError("search produced a non-free witness coloring")
    return ArrowingVerdict(False, witness, nodes, "pruned")


def _copies_by_injection(host: Graph, pattern: Graph, edge_index: dict[Edge, int]) -> list[int]:
    """Copies of `pattern` as edge-index masks, via all injective vertex maps.

    Deliberately naive; serves as the independent oracle route.
    """
    if pattern.n > host.n:
        return []
    total = 1
    for i in range(pattern.n):
        total *= host.n - i
    if total > 20_000_000:
        raise GraphTooLargeError(
            f"injection enumeration too large: {host.n} P {pattern.n} = {total}"
        )
    masks: set[int] = set()
    for perm in itertools.permutations(range(host.n), pattern.n):
        mask = 0
        for u, v in pattern.edges:
            a, b = perm[u], perm[v]
            if not host.has_edge(a, b):
                mask = -1
                break
            a, b = (a, b) if a < b else (b, a)
            mask |= 1 << edge_index[(a, b)]
        if mask >= 0:
            masks.add(mask)
    return sorted(masks)


def exhaustive_arrows(f: Graph, g: Graph, h: Graph) -> ArrowingVerdict:
    """Decide f -> (g, h) by scanning all 2^m colorings (m <= 24).

    Copy enumeration and the coloring scan share nothing with the pruned
    search; this is the oracle the pruned verdicts are checked against.
    """
    m = f.m
    if m > 24:
        raise GraphTooLargeError(f"exhaustive scan supports at most 24 edges, got {m}")
    edge_index = {e: i for i, e in enumerate(f.edges)}
    gmasks = _copies_by_injection(f, g, edge_index)
    hmasks = _copies_by_injection(f, h, edge_index)
    total = 1 << m
    colorings = np.arange(total, dtype=np.uint32)
    bad = np.zeros(total, dtype=bool)
    for mask in gmasks:  # bit set = red; a fully red g-copy is bad
        mask_u = np.uint32(mask)
        bad |= (colorings & mask_u) == mask_u
    for mask in hmasks:  # a fully blue h-copy has no red bit on its edges
        bad |= (colorings & np.uint32(mask)) == 0
    free = np.nonzero(~bad)[0]
    if free.size == 0:
        return ArrowingVerdict(True, None, total, "exhaustive")
    first = int(free[0])
    red = [e for e, i in edge_index.items() if first >> i & 1]
    blue = [e for e, i in edge_index.items() if not first >> i & 1]
    witness = EdgeColoring(f, red=red, blue=blue)
    return ArrowingVerdict(False, witness, total, "exhaustive")


def sampled_arrows(
    f: Graph,
    g: Graph,
    h: Graph,
    samples: int,
    seed: int = 0,
    batch: int = 1 << 14,
) -> ArrowingVerdict | None:
    """Search random colorings for a (g, h)-free witness.

    Returns a negative verdict when a witness turns up, else None: sampling
    can never establish that f arrows.
    """
    m = f.m
    if m > 62:
        raise GraphTooLargeError(f"sampled mode supports at most 62 edges, got {m}")
    engine = _ArrowEngine(f, g, h)
    if engine.trivial_arrows:
        return None
    gmasks = np.array(
        [
            sum(1 << e for e in edges)
            for edges, bad in zip(engine.clause_edges, engine.clause_bad)
            if bad == _RED_BIT
        ],
        dtype=np.uint64,
    )
    hmasks = np.array(
        [
            sum(1 << e for e in edges)
            for edges, bad in zip(engine.clause_edges, engine.clause_bad)
            if bad == _BLUE_BIT
        ],
        dtype=np.uint64,
    )
    rng = np.random.default_rng(seed)
    done = 0
    zero = np.uint64(0)
    while done < samples:
        take = min(batch, samples - done)
        cand = rng.integers(0, 1 << m, size=take, dtype=np.uint64)
        done += take
        bad = np.zeros(take, dtype=bool)
        for mask in gmasks:
            bad |= (cand & mask) == mask
        for mask in hmasks:
            bad |= (cand & mask) == zero
        free = np.nonzero(~bad)[0]
        if free.size:
            value = int(cand[free[0]])
            # Scan convention: a set bit means red.
            witness = engine.coloring_from_colors(
                [_RED_BIT if value >> i & 1 else _BLUE_BIT for i in range(m)]
            )
            if not coloring_is_free(f, witness, g, h):
                raise InvariantViolationError("sampled witness failed the freeness check")
            return ArrowingVerdict(False, witness, done, "sampled")
    return None


def arrows_parallel(
    f: Graph, g: Graph, h: Graph, budget: int = DEFAULT_BUDGET, jobs: int = 2
) -> ArrowingVerdict:
    """Like arrows(), splitting the top of the search tree across processes.

    Branch prefixes are fixed up front and consumed in prefix order, so the
    verdict and witness never depend on worker scheduling.
    """
    from concurrent.futures import ProcessPoolExecutor

    if jobs < 2:
        return arrows(f, g, h, budget)
    engine = _ArrowEngine(f, g, h)
    if engine.trivial_arrows:
        return ArrowingVerdict(True, None, 0, "pruned")
    depth = max(1, min((jobs - 1).bit_length(), engine.m, 6))
    lead = engine.order[:depth]
    prefixes = [
        tuple(zip(lead, combo))
        for combo in itertools.product((_RED_BIT, _BLUE_BIT), repeat=depth)
        # Color-swap symmetry: with identical patterns, prefixes starting
        # blue mirror prefixes starting red.
        if not (engine.symmetric and combo[0] == _BLUE_BIT)
    ]
    total_nodes = 0
    witness_colors = None
    with ProcessPoolExecutor(max_workers=jobs) as pool:
        futures = [
            pool.submit(_solve_prefix, f, g, h, budget, prefix) for prefix in prefixes
        ]
        for fut in futures:
            colors, nodes = fut.result()
            total_nodes += nodes
            if colors is not None:
                witness_colors = colors
                for other in futures:
                    other.cancel()
                break
    if witness_colors is None:
        return ArrowingVerdict(True, None, total_nodes, "pruned")
    witness = engine.coloring_from_colors(witness_colors)
    if not coloring_is_free(f, witness, g, h):
        raise InvariantViolationError("search produced a non-free witness coloring")
    return ArrowingVerdict(False, witness, total_nodes, "pruned")


def _solve_prefix(f, g, h, budget, prefix):
    return _ArrowEngine(f, g, h).solve(budget, prefix)


def ramsey_number(g: Graph, h: Graph, cap: int, budget: int = DEFAULT_BUDGET) -> int:
    """Least n <= cap with K_n -> (g, h)."""
    if cap < 1:
        raise ValueError("cap must be at least 1")
    for n in range(1, cap + 1):
        host = Graph(n, itertools.combinations(range(n), 2))
        if arrows(host, g, h, budget).arrows:
            return n
    raise CapExceededError(f"no complete graph up to K_{cap} arrows the pair")


def minimal_ramsey_check(f: Graph, g: Graph, h: Graph, budget: int = DEFAULT_BUDGET) -> bool:
    """True iff f arrows (g, h) and no single-edge or single-vertex deletion does.

    Every proper subgraph sits inside some f-e or f-v, so by monotonicity the
    two deletion families are enough.
    """
    if not arrows(f, g, h, budget).arrows:
        return False
    for e in f.edges:
        if arrows(f.without_edge(e), g, h, budget).arrows:
            return False
    for v in range(f.n):
        if arrows(f.without_vertex(v), g, h, budget).arrows:
            return False
    return True


@dataclass
class ScanResult:
    kind: str  # "no-distinguisher-found" | "distinguisher" | "symbolic-distinguisher"
    distinguisher: Graph | None = None
    verdict_first: ArrowingVerdict | None = None
    verdict_second: ArrowingVerdict | None = None
    reason: str | None = None
    skipped: list[Graph] = field(default_factory=list)


def equivalence_scan(
    g1: Graph,
    h1: Graph,
    g2: Graph,
    h2: Graph,
    max_vertices: int,
    budget: int = DEFAULT_BUDGET,
) -> ScanResult:
    """Search small hosts for a graph arrowing one pair but not the other.

    Clique-number and chromatic-sum mismatches prove non-equivalence outright
    and are reported symbolically.  Otherwise every graph on up to
    max_vertices vertices (up to isomorphism) is tested.  Finding nothing is
    NOT a proof of equivalence.
    """
    if max_vertices > 8:
        raise ValueError("enumeration bound: max_vertices must be at most 8")
    omega1 = max(clique_number(g1), clique_number(h1))
    omega2 = max(clique_number(g2), clique_number(h2))
    if omega1 != omega2:
        return ScanResult(
            "symbolic-distinguisher",
            reason=(
                f"max clique numbers differ ({omega1} vs {omega2}): some Ramsey graph "
                f"of clique number {min(omega1, omega2)} for one pair cannot arrow the other"
            ),
        )
    chi1 = chromatic_number(g1) + chromatic_number(h1)
    chi2 = chromatic_number(g2) + chromatic_number(h2)
    if chi1 != chi2:
        return ScanResult(
            "symbolic-distinguisher",
            reason=f"chromatic sums differ ({chi1} vs {chi2}), which forbids equivalence",
        )
    result = ScanResult("no-distinguisher-found")
    for host in sorted(
        graphs_up_to_vertices(max_vertices), key=lambda x: (x.n, x.m, graph_to_graph6(x))
    ):
        try:
            v1 = arrows(host, g1, h1, budget)
            v2 = arrows(host, g2, h2, budget)
        except BudgetExhaustedError:
            result.skipped.append(host)
            continue
        if v1.arrows != v2.arrows:
            return ScanResult("distinguisher", host, v1, v2)
    return result
