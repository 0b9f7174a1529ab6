"""Branch-and-bound enumeration of canonical double traces.

The search grows prefixes w_0 w_1 ... starting from the fixed base edge
(0, 1) and keeps exactly one lexicographically minimal representative
per symmetry orbit.  Three mechanisms cooperate:

* `feasible_neighbors` extends a prefix only along edges with unused
  capacity, respecting orientation constraints and rejecting extensions
  that complete a forbidden repetition at the vertex just left behind.
* `canonical_extension` keeps one smallest candidate per orbit of the
  prefix-fixing automorphisms, so symmetric subtrees are searched once.
* `prune` tracks which symmetry elements are still undecided on the
  prefix.  A relabelling is decided at every step; a reversal composed
  with a rotation becomes decided exactly when its rotated image window
  slides fully inside the prefix, which happens for shift 2m - p + 1 at
  prefix length p.  A decided element that maps the prefix to something
  strictly smaller is a witness that no completion can be canonical, so
  the branch dies.  Rotations stay undecided until the very end and are
  handled by the final `is_canonical` check, which every emitted trace
  must pass together with the full kind and orientation predicates.

Disabling `prune` and `canonical_extension` yields plain backtracking
filtered by the final check; the output set is identical, only slower.
"""

from __future__ import annotations

import warnings
from dataclasses import dataclass
from typing import Sequence

from .automorphism import AutGroup, SymmetryElement, automorphisms
from .graph import Graph
from .traces import (
    EnumerationConfig,
    is_canonical,
    is_double_trace,
    satisfies_kind,
    satisfies_orientation,
)


class PartialTrace:
    """Mutable prefix of a double trace with incremental bookkeeping.

    Tracks per-edge use counts and first traversal directions, per-vertex
    visit counts, and the transition pairs already completed at each
    vertex (a visit's pair is complete once both its neighbours in the
    walk are known; the pairs at w_0 and at the final vertex close only
    when the walk does).
    """

    __slots__ = (
        "graph",
        "seq",
        "edge_count",
        "edge_from",
        "visits",
        "pairs",
        "tmask",
        "pdeg",
        "_journal",
    )

    def __init__(self, graph: Graph):
        self.graph = graph
        self.seq: list[int] = []
        self.edge_count = [0] * graph.m
        self.edge_from = [-1] * graph.m
        self.visits = [0] * graph.n
        self.pairs: list[list[tuple[int, int]]] = [[] for _ in range(graph.n)]
        # Transition structure as bitmasks over neighbour indices: at each
        # vertex u, tmask[u][i] holds the neighbours paired with adj[u][i]
        # and pdeg[u][i] how many pair slots of adj[u][i] are used (0..2).
        self.tmask: list[list[int]] = [[0] * len(a) for a in graph.adj]
        self.pdeg: list[list[int]] = [[0] * len(a) for a in graph.adj]
        self._journal: list[tuple[int, bool, int, int, int, int, int]] = []

    @classmethod
    def initial(cls, graph: Graph) -> "PartialTrace":
        if graph.n < 2 or not graph.has_edge(0, 1):
            raise ValueError(
                "enumeration needs vertices 0 and 1 adjacent; "
                "relabel with normalize_base_edge first"
            )
        pt = cls(graph)
        pt.seq = [0, 1]
        e = graph.edge_id(0, 1)
        pt.edge_count[e] = 1
        pt.edge_from[e] = 0
        pt.visits[0] = 1
        pt.visits[1] = 1
        return pt

    def push(self, v: int) -> None:
        """Append v; caller guarantees feasibility."""
        seq = self.seq
        u = seq[-1]
        e = self.graph.eid_row[u][v]
        first = self.edge_count[e] == 0
        if first:
            self.edge_from[e] = u
        self.edge_count[e] += 1
        self.visits[v] += 1
        if len(seq) >= 2:
            a = seq[-2]
            self.pairs[u].append((a, v))
            idx = self.graph.nbr_index[u]
            ia = idx[a]
            ib = idx[v]
            tm = self.tmask[u]
            old_a = tm[ia]
            old_b = tm[ib]
            tm[ia] = old_a | (1 << ib)
            tm[ib] = tm[ib] | (1 << ia)
            pd = self.pdeg[u]
            pd[ia] += 1
            pd[ib] += 1
            self._journal.append((e, first, u, ia, old_a, ib, old_b))
        else:
            self._journal.append((e, first, -1, 0, 0, 0, 0))
        seq.append(v)

    def pop(self) -> None:
        """Undo the most recent push (not valid below the initial prefix)."""
        v = self.seq.pop()
        e, first, u, ia, old_a, ib, old_b = self._journal.pop()
        self.edge_count[e] -= 1
        if first:
            self.edge_from[e] = -1
        self.visits[v] -= 1
        if u >= 0:
            self.pairs[u].pop()
            tm = self.tmask[u]
            tm[ia] = old_a
            tm[ib] = old_b
            pd = self.pdeg[u]
            pd[ia] -= 1
            pd[ib] -= 1

    def copy(self) -> "PartialTrace":
        new = PartialTrace.__new__(PartialTrace)
        new.graph = self.graph
        new.seq = self.seq[:]
        new.edge_count = self.edge_count[:]
        new.edge_from = self.edge_from[:]
        new.visits = self.visits[:]
        new.pairs = [lst[:] for lst in self.pairs]
        new.tmask = [lst[:] for lst in self.tmask]
        new.pdeg = [lst[:] for lst in self.pdeg]
        new._journal = self._journal[:]
        return new

    def __len__(self) -> int:
        return len(self.seq)


def _kind_bound(graph: Graph, config: EnumerationConfig) -> int:
    """Reject a split vertex whose smallest component is <= this bound."""
    if config.kind == "strong":
        return graph.n
    if config.kind == "stable":
        return config.d  # type: ignore[return-value]
    return 0


def _split_ok(masks: list[int], full: int, bound: int) -> bool:
    """Check a completed transition structure against the bound.

    `masks[i]` is the bitmask of neighbour indices paired with index i,
    `full` covers the whole neighbourhood.  A connected structure always
    passes; a split one passes only if every component is larger than the
    bound.
    """
    remaining = full
    while remaining:
        low = remaining & -remaining
        comp = low
        frontier = low
        while frontier:
            lb = frontier & -frontier
            frontier ^= lb
            new = masks[lb.bit_length() - 1] & ~comp
            comp |= new
            frontier |= new
        if comp == full:
            return True
        if comp.bit_count() <= bound:
            return False
        remaining &= ~comp
    return True


def _kind_lookahead_ok(partial: PartialTrace, v: int, bound: int) -> bool:
    """Early rejection of extensions that doom the vertex being left.

    Stepping to v completes the pair {w_{p-2}, v} at u = w_{p-1}.  If the
    transition component containing that pair has every pair slot filled,
    later visits can never connect it to the rest of the neighbourhood,
    so it survives as a component of the final structure.  When it is
    also a proper subset of size <= bound, every completion has a
    forbidden repetition at u and the branch is dead.  This anticipates
    the saturation check in `feasible_neighbors` (and extends it to the
    start vertex): the closing pairs at w_0 and at the final vertex are
    the only ones it cannot see, and those are covered by the full
    predicates at acceptance time.
    """
    graph = partial.graph
    seq = partial.seq
    u = seq[-1]
    idx_u = graph.nbr_index[u]
    tm = partial.tmask[u]
    comp = (1 << idx_u[seq[-2]]) | (1 << idx_u[v])
    frontier = comp
    while frontier:
        lb = frontier & -frontier
        frontier ^= lb
        new = tm[lb.bit_length() - 1] & ~comp
        comp |= new
        frontier |= new
    full = (1 << len(tm)) - 1
    if comp == full:
        return True
    size = comp.bit_count()
    if size > bound:
        return True
    pd = partial.pdeg[u]
    total = 2  # the pair completed by this step
    c = comp
    while c:
        lb = c & -c
        c ^= lb
        total += pd[lb.bit_length() - 1]
    return total != 2 * size


def feasible_neighbors(partial: PartialTrace, config: EnumerationConfig) -> list[int]:
    """Vertices that may extend the prefix by one step.

    Enforces edge capacity, orientation consistency on second traversals,
    completion of the transition structure at the vertex just left (the
    moment all its visits are present), and, one step before full length,
    availability and consistency of the closing edge back to vertex 0.
    """
    graph = partial.graph
    seq = partial.seq
    u = seq[-1]
    p = len(seq)
    length = 2 * graph.m
    if p >= length:
        return []
    orientation = config.orientation
    any_dir = orientation == "any"
    parallel = orientation == "parallel"
    bound = _kind_bound(graph, config)
    adj_u = graph.adj[u]
    check_u = bound > 0 and u != 0 and partial.visits[u] == len(adj_u)
    closing = p == length - 1
    edge_count = partial.edge_count
    edge_from = partial.edge_from
    eid_u = graph.eid_row[u]
    if check_u:
        idx_u = graph.nbr_index[u]
        tmask_u = partial.tmask[u]
        full_u = (1 << len(adj_u)) - 1
        ip = idx_u[seq[-2]]
    if closing:
        eid_0 = graph.eid_row[0]
    out = []
    for v in adj_u:
        e = eid_u[v]
        c = edge_count[e]
        if c == 2:
            continue
        if c == 1 and not any_dir:
            if parallel:
                if edge_from[e] != u:
                    continue
            elif edge_from[e] != v:
                continue
        if check_u:
            iv = idx_u[v]
            masks = tmask_u[:]
            masks[ip] |= 1 << iv
            masks[iv] |= 1 << ip
            if not _split_ok(masks, full_u, bound):
                continue
        if closing:
            e2 = eid_0[v]
            if e2 < 0:
                continue
            c2 = edge_count[e2] + (1 if e2 == e else 0)
            if c2 != 1:
                continue
            if not any_dir:
                first_from = u if (e2 == e and edge_count[e2] == 0) else edge_from[e2]
                # The closing traversal runs v -> 0.
                if parallel:
                    if first_from != v:
                        continue
                elif first_from != 0:
                    continue
        out.append(v)
    return out


class RetainedSymmetries:
    """Symmetry elements still relevant to a search prefix.

    The full retained set is huge but has a fixed shape: all rotations
    stay undecided until the walk closes, each reversal-plus-rotation is
    decided exactly once on the way down, and the relabellings decided so
    far reduce to the pointwise stabilizer of the prefix.  Only that
    stabilizer is stored; `materialize` reconstructs the complete tagged
    element set for inspection and tests.
    """

    __slots__ = ("aut", "length", "relabels", "maintained", "smaller_witness", "_to_zero")

    def __init__(
        self,
        aut: AutGroup,
        length: int,
        relabels: tuple[tuple[int, ...], ...],
        maintained: bool,
        smaller_witness: SymmetryElement | None,
        to_zero: dict[int, tuple[tuple[int, ...], ...]],
    ):
        self.aut = aut
        self.length = length
        self.relabels = relabels
        self.maintained = maintained
        self.smaller_witness = smaller_witness
        self._to_zero = to_zero

    @classmethod
    def initial(cls, aut: AutGroup, length: int) -> "RetainedSymmetries":
        relabels = tuple(p for p in aut.elements if p[0] == 0 and p[1] == 1)
        to_zero: dict[int, list[tuple[int, ...]]] = {}
        for p in aut.elements:
            to_zero.setdefault(p.index(0), []).append(p)
        frozen = {v: tuple(ps) for v, ps in to_zero.items()}
        return cls(aut, length, relabels, True, None, frozen)

    def unmaintained(self) -> "RetainedSymmetries":
        """Copy whose relabels are not guaranteed to fix deeper prefixes."""
        return RetainedSymmetries(
            self.aut, self.length, self.relabels, False, None, self._to_zero
        )

    def prefix_fixing_relabels(self, seq: Sequence[int]) -> tuple[tuple[int, ...], ...]:
        if self.maintained:
            return self.relabels
        return tuple(
            p for p in self.relabels if all(p[w] == w for w in seq)
        )

    def materialize(self, seq: Sequence[int]) -> list[tuple[SymmetryElement, str]]:
        """Reconstruct all retained elements for this prefix, with tags.

        An element is decided on a prefix of length p when every source
        index of its length-p image falls inside the prefix.  Decided
        elements whose image differs from the prefix have been dropped;
        decided elements fixing it are tagged "stabilizer", the rest
        "undetermined".
        """
        p = len(seq)
        length = self.length
        if p == length:
            # Everything is decided; exactly the stabilizer of seq survives.
            from .automorphism import apply_symmetry, symmetry_elements

            w = tuple(seq)
            return [
                (element, "stabilizer")
                for element in symmetry_elements(self.aut, length)
                if apply_symmetry(element, w) == w
            ]
        out: list[tuple[SymmetryElement, str]] = []
        for perm in self.aut.elements:
            # Pure relabellings are decided at every length.
            if all(perm[w] == w for w in seq):
                out.append((SymmetryElement(perm, 0, False), "stabilizer"))
            # Rotations without reversal are decided only at full length.
            for shift in range(1, length):
                out.append((SymmetryElement(perm, shift, False), "undetermined"))
            # A reversal with shift s is decided at prefix length 2m - s + 1.
            for shift in range(length):
                decided_at = length - shift + 1 if shift >= 2 else length
                element = SymmetryElement(perm, shift, True)
                if decided_at > p:
                    out.append((element, "undetermined"))
                    continue
                q = decided_at
                image = [perm[seq[q - 1 - j]] for j in range(q)]
                if image == list(seq[:q]):
                    out.append((element, "stabilizer"))
        return out


def canonical_extension(
    partial: PartialTrace, candidates: Sequence[int], retained: RetainedSymmetries
) -> list[int]:
    """One smallest candidate per orbit of the prefix-fixing relabellings."""
    relabels = retained.prefix_fixing_relabels(partial.seq)
    if len(relabels) <= 1 or len(candidates) <= 1:
        return sorted(candidates)
    remaining = set(candidates)
    out = []
    for v in sorted(candidates):
        if v not in remaining:
            continue
        out.append(v)
        for p in relabels:
            remaining.discard(p[v])
    return out


def prune(retained: RetainedSymmetries, partial: PartialTrace) -> RetainedSymmetries:
    """Update retained symmetries after the last vertex of the prefix.

    Narrows the relabel stabilizer and decides the one reversal alignment
    whose image window just closed.  If any decided element maps the
    prefix to a strictly smaller sequence it is recorded as
    `smaller_witness`: the prefix cannot start a canonical trace.
    """
    seq = partial.seq
    p = len(seq)
    v = seq[-1]
    length = retained.length
    relabels = retained.relabels
    to_zero = retained._to_zero.get(v)
    if (
        not relabels
        and to_zero is None
        and retained.maintained
        and retained.smaller_witness is None
    ):
        return retained
    witness: SymmetryElement | None = None
    new_relabels = []
    for perm in relabels:
        x = perm[v]
        if x == v:
            new_relabels.append(perm)
        elif x < v and witness is None:
            witness = SymmetryElement(perm, 0, False)
    if witness is None and to_zero is not None:
        for perm in to_zero:
            for j in range(1, p):
                a = perm[seq[p - 1 - j]]
                b = seq[j]
                if a != b:
                    if a < b:
                        witness = SymmetryElement(perm, (length - p + 1) % length, True)
                    break
            if witness is not None:
                break
    return RetainedSymmetries(
        retained.aut, length, tuple(new_relabels), True, witness, retained._to_zero
    )


@dataclass
class SearchNode:
    """Self-contained unit of work: a prefix plus its retained symmetries."""

    partial: PartialTrace
    retained: RetainedSymmetries


def extend_feasibly(
    partial: PartialTrace,
    retained: RetainedSymmetries,
    queue: list[SearchNode],
    config: EnumerationConfig,
    *,
    use_prune: bool = True,
    use_canonical_extension: bool = True,
) -> None:
    """Append one child node per surviving feasible extension."""
    candidates = feasible_neighbors(partial, config)
    if use_canonical_extension:
        candidates = canonical_extension(partial, candidates, retained)
    for v in candidates:
        child = partial.copy()
        child.push(v)
        if use_prune:
            rs = prune(retained, child)
            if rs.smaller_witness is not None:
                continue
        else:
            rs = retained
        queue.append(SearchNode(child, rs))


def _accept(
    graph: Graph, seq: tuple[int, ...], config: EnumerationConfig, aut: AutGroup
) -> bool:
    return (
        is_double_trace(graph, seq)
        and satisfies_kind(graph, seq, config)
        and satisfies_orientation(graph, seq, config)
        and is_canonical(graph, seq, aut)
    )


def _run_stack(
    stack: list[SearchNode],
    graph: Graph,
    config: EnumerationConfig,
    aut: AutGroup,
    length: int,
    use_prune: bool,
    use_canonical_extension: bool,
    use_kind_lookahead: bool,
) -> list[tuple[int, ...]]:
    out: list[tuple[int, ...]] = []
    while stack:
        node = stack.pop()
        _descend(
            node.partial,
            node.retained,
            graph,
            config,
            aut,
            length,
            use_prune,
            use_canonical_extension,
            use_kind_lookahead,
            out,
        )
    return out


def _descend(
    partial: PartialTrace,
    retained: RetainedSymmetries,
    graph: Graph,
    config: EnumerationConfig,
    aut: AutGroup,
    length: int,
    use_prune: bool,
    use_canonical_extension: bool,
    use_kind_lookahead: bool,
    out: list[tuple[int, ...]],
) -> None:
    """Exhaust the subtree under one prefix, mutating it in place.

    Children are explored by push/pop on a single PartialTrace rather
    than by copying; each stack frame keeps the candidate list for its
    prefix and the symmetries retained there.  The prefix is restored on
    return.
    """
    seq = partial.seq
    bound = _kind_bound(graph, config) if use_kind_lookahead else 0

    def expand(rs: RetainedSymmetries) -> list[int]:
        cands = feasible_neighbors(partial, config)
        if bound and cands:
            cands = [v for v in cands if _kind_lookahead_ok(partial, v, bound)]
        if use_canonical_extension:
            cands = canonical_extension(partial, cands, rs)
        return cands

    if len(seq) == length:
        w = tuple(seq)
        if _accept(graph, w, config, aut):
            out.append(w)
        return
    frames: list[list] = [[expand(retained), 0, retained]]
    while frames:
        frame = frames[-1]
        cands = frame[0]
        i = frame[1]
        if i >= len(cands):
            frames.pop()
            if frames:
                partial.pop()
            continue
        frame[1] = i + 1
        partial.push(cands[i])
        if use_prune:
            child_rs = prune(frame[2], partial)
            if child_rs.smaller_witness is not None:
                partial.pop()
                continue
        else:
            child_rs = frame[2]
        if len(seq) == length:
            w = tuple(seq)
            if _accept(graph, w, config, aut):
                out.append(w)
            partial.pop()
            continue
        frames.append([expand(child_rs), 0, child_rs])


def _replay_prefix(
    graph: Graph, rs0: RetainedSymmetries, prefix: Sequence[int], use_prune: bool
) -> SearchNode:
    partial = PartialTrace.initial(graph)
    rs = rs0
    for v in prefix[2:]:
        partial.push(v)
        if use_prune:
            rs = prune(rs, partial)
            if rs.smaller_witness is not None:
                raise AssertionError("replayed prefix was pruned")
    return SearchNode(partial, rs)


def _enumerate_subtrees(
    graph: Graph,
    config: EnumerationConfig,
    prefixes: list[tuple[int, ...]],
    use_prune: bool,
    use_canonical_extension: bool,
    use_kind_lookahead: bool,
) -> list[tuple[int, ...]]:
    aut = automorphisms(graph)
    length = 2 * graph.m
    rs0 = RetainedSymmetries.initial(aut, length)
    if not use_prune:
        rs0 = rs0.unmaintained()
    stack = [_replay_prefix(graph, rs0, prefix, use_prune) for prefix in prefixes]
    return _run_stack(
        stack,
        graph,
        config,
        aut,
        length,
        use_prune,
        use_canonical_extension,
        use_kind_lookahead,
    )


def enumerate_traces(
    graph: Graph,
    config: EnumerationConfig | None = None,
    *,
    use_prune: bool = True,
    use_canonical_extension: bool = True,
    use_kind_lookahead: bool = True,
    jobs: int = 1,
    aut: AutGroup | None = None,
) -> list[tuple[int, ...]]:
    """All canonical double traces of the requested kind, sorted.

    The graph must have its base edge normalized (vertices 0 and 1
    adjacent).  Every returned trace starts with 0, 1 and passes the full
    double-trace, kind, orientation and canonicity predicates.  The three
    `use_*` switches disable individual search accelerations; each leaves
    the result unchanged and exists for testing and diagnostics.
    """
    if config is None:
        config = EnumerationConfig()
    if config.kind == "stable" and config.d > graph.min_degree():
        warnings.warn(
            f"stable({config.d}) exceeds the minimum degree {graph.min_degree()}",
            stacklevel=2,
        )
    if aut is None:
        aut = automorphisms(graph)
    length = 2 * graph.m
    rs0 = RetainedSymmetries.initial(aut, length)
    if not use_prune:
        rs0 = rs0.unmaintained()
    root = SearchNode(PartialTrace.initial(graph), rs0)
    if jobs > 1:
        return _enumerate_parallel(
            graph,
            config,
            aut,
            root,
            jobs,
            use_prune,
            use_canonical_extension,
            use_kind_lookahead,
        )
    out = _run_stack(
        [root],
        graph,
        config,
        aut,
        length,
        use_prune,
        use_canonical_extension,
        use_kind_lookahead,
    )
    out.sort()
    return out


def _enumerate_parallel(
    graph: Graph,
    config: EnumerationConfig,
    aut: AutGroup,
    root: SearchNode,
    jobs: int,
    use_prune: bool,
    use_canonical_extension: bool,
    use_kind_lookahead: bool,
) -> list[tuple[int, ...]]:
    import multiprocessing

    length = 2 * graph.m
    # Expand breadth-first until there are enough disjoint subtrees.
    frontier: list[SearchNode] = [root]
    done: list[tuple[int, ...]] = []
    while frontier and len(frontier) < 4 * jobs:
        depths = [len(n.partial.seq) for n in frontier]
        shallowest = depths.index(min(depths))
        if min(depths) == length:
            break
        node = frontier.pop(shallowest)
        if len(node.partial.seq) == length:
            frontier.append(node)
            continue
        extend_feasibly(
            node.partial,
            node.retained,
            frontier,
            config,
            use_prune=use_prune,
            use_canonical_extension=use_canonical_extension,
        )
    stack: list[SearchNode] = []
    for node in frontier:
        if len(node.partial.seq) == length:
            w = tuple(node.partial.seq)
            if _accept(graph, w, config, aut):
                done.append(w)
        else:
            stack.append(node)
    buckets: list[list[tuple[int, ...]]] = [[] for _ in range(jobs)]
    for i, node in enumerate(stack):
        buckets[i % jobs].append(tuple(node.partial.seq))
    args = [
        (graph, config, bucket, use_prune, use_canonical_extension, use_kind_lookahead)
        for bucket in buckets
        if bucket
    ]
    if args:
        with multiprocessing.Pool(min(jobs, len(args))) as pool:
            for part in pool.starmap(_enumerate_subtrees, args):
                done.extend(part)
    done.sort()
    return done


def admits_parallel_strong(graph: Graph) -> bool:
    """A parallel strong trace exists iff every degree is even."""
    return all(graph.degree(v) % 2 == 0 for v in range(graph.n))


def admits_d_stable(graph: Graph, d: int) -> bool:
    """A d-stable trace exists iff the minimum degree is at least d."""
    if d < 1:
        raise ValueError(f"d must be positive, got {d}")
    return graph.min_degree() >= d


def admits_antiparallel_strong(graph: Graph, max_edges: int = 16) -> bool:
    """An antiparallel strong trace exists iff some spanning tree leaves a
    co-tree whose components all have an even number of edges.

    Exhaustive over spanning trees, so refuses graphs beyond max_edges.
    """
    from itertools import combinations

    if graph.m > max_edges:
        raise ValueError(
            f"antiparallel feasibility check refuses graphs with more than "
            f"{max_edges} edges (got {graph.m})"
        )
    n = graph.n
    cotree_size = graph.m - (n - 1)
    if cotree_size % 2 == 1:
        # Components partition an odd number of edges, so one is always odd.
        return False
    edge_list = graph.edges
    for tree_edges in combinations(range(graph.m), n - 1):
        parent = list(range(n))

        def find(x: int) -> int:
            while parent[x] != x:
                parent[x] = parent[parent[x]]
                x = parent[x]
            return x

        acyclic = True
        for e in tree_edges:
            u, v = edge_list[e]
            ru, rv = find(u), find(v)
            if ru == rv:
                acyclic = False
                break
            parent[ru] = rv
        if not acyclic:
            continue
        # n-1 acyclic edges form a spanning tree; inspect the co-tree.
        chosen = set(tree_edges)
        comp_parent: dict[int, int] = {}

        def cfind(x: int) -> int:
            while comp_parent[x] != x:
                comp_parent[x] = comp_parent[comp_parent[x]]
                x = comp_parent[x]
            return x

        sizes: dict[int, int] = {}
        for e in range(graph.m):
            if e in chosen:
                continue
            u, v = edge_list[e]
            comp_parent.setdefault(u, u)
            comp_parent.setdefault(v, v)
            ru, rv = cfind(u), cfind(v)
            if ru != rv:
                comp_parent[ru] = rv
        for e in range(graph.m):
            if e in chosen:
                continue
            r = cfind(edge_list[e][0])
            sizes[r] = sizes.get(r, 0) + 1
        if all(size % 2 == 0 for size in sizes.values()):
            return True
    return False
