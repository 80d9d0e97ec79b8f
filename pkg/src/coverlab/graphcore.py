"""Graphs with fibre partitions and full verification of the cover axioms.

A CoverGraph is an undirected graph on 0..v-1 whose vertex set is split into
n fibres of equal size r >= 2.  verify_cover checks the defining axioms
combinatorially: connectivity, fibres are cocliques, any two fibres induce a
perfect matching, non-adjacent cross-fibre pairs have a constant number mu of
common neighbours, and adjacent pairs have lambda = n - (r-1)mu - 2 of them.
Adjacency is stored as bit rows, so common-neighbour counts are popcounts.
"""
from __future__ import annotations

import json
from dataclasses import dataclass, field

import numpy as np

from .exact import QuadExt
from .params import CoverParams, derive_params


class GraphStructureError(ValueError):
    """Malformed input (bad partition, unknown vertex), not an axiom failure."""


@dataclass(frozen=True)
class Violation:
    axiom: str
    witness: tuple
    detail: str = ""

    def to_json(self) -> dict:
        return {"axiom": self.axiom, "witness": list(self.witness),
                "detail": self.detail}


@dataclass
class CoverReport:
    is_cover: bool
    n: int
    r: int
    mu: int | None
    lam: int | None
    failures: list[Violation] = field(default_factory=list)
    antipodality_confirmed: bool = False
    diameter: int | None = None

    def to_json(self) -> dict:
        return {
            "is_cover": self.is_cover, "n": self.n, "r": self.r,
            "mu": self.mu, "lambda": self.lam,
            "failures": [f.to_json() for f in self.failures],
            "antipodality_confirmed": self.antipodality_confirmed,
            "diameter": self.diameter,
        }


class CoverGraph:
    """Immutable graph plus fibre partition, vertices 0..v-1.

    Fibres are canonicalised on construction: each fibre sorted ascending,
    fibres ordered by minimum element.  The constructor checks only the
    partition structure; the cover axioms (including fibres being cocliques)
    are the business of verify_cover, so invalid candidates can be built and
    then diagnosed.
    """

    __slots__ = ("v", "n", "r", "fibres", "adj", "fibre_of", "_edges")

    def __init__(self, fibres, edges, vertex_count: int | None = None):
        fibres = [sorted(int(x) for x in f) for f in fibres]
        fibres.sort(key=lambda f: f[0] if f else -1)
        seen: set[int] = set()
        for f in fibres:
            for x in f:
                if x in seen:
                    raise GraphStructureError(f"vertex {x} in two fibres")
                seen.add(x)
        v = vertex_count if vertex_count is not None else (max(seen) + 1 if seen else 0)
        if seen != set(range(v)):
            raise GraphStructureError("fibres do not partition 0..v-1")
        if not fibres:
            raise GraphStructureError("empty fibre list")
        r = len(fibres[0])
        if any(len(f) != r for f in fibres):
            raise GraphStructureError("fibres have unequal sizes")
        if r < 2:
            raise GraphStructureError(f"fibre size must be >= 2, got {r}")
        n = len(fibres)
        if n < 3:
            raise GraphStructureError(f"need at least 3 fibres, got {n}")

        adj = [0] * v
        edge_set: set[tuple[int, int]] = set()
        for u, w in edges:
            u, w = int(u), int(w)
            if not (0 <= u < v and 0 <= w < v):
                raise GraphStructureError(f"edge ({u},{w}) out of range")
            if u == w:
                raise GraphStructureError(f"loop at {u}")
            a, b = (u, w) if u < w else (w, u)
            edge_set.add((a, b))
        for a, b in edge_set:
            adj[a] |= 1 << b
            adj[b] |= 1 << a

        self.v = v
        self.n = n
        self.r = r
        self.fibres = tuple(tuple(f) for f in fibres)
        self.adj = tuple(adj)
        fo = [0] * v
        for i, f in enumerate(self.fibres):
            for x in f:
                fo[x] = i
        self.fibre_of = tuple(fo)
        self._edges = tuple(sorted(edge_set))

    # -- basic accessors ---------------------------------------------------

    @property
    def edges(self) -> tuple[tuple[int, int], ...]:
        return self._edges

    def degree(self, u: int) -> int:
        return self.adj[u].bit_count()

    def neighbours(self, u: int) -> list[int]:
        return _bits(self.adj[u])

    def has_edge(self, u: int, w: int) -> bool:
        return bool(self.adj[u] >> w & 1)

    def adjacency_matrix(self) -> np.ndarray:
        a = np.zeros((self.v, self.v), dtype=np.int64)
        for u, w in self._edges:
            a[u, w] = a[w, u] = 1
        return a

    def toggled(self, u: int, w: int) -> "CoverGraph":
        """Copy with the adjacency of the pair (u, w) flipped."""
        if u == w:
            raise GraphStructureError("cannot toggle a loop")
        e = set(self._edges)
        pair = (u, w) if u < w else (w, u)
        if pair in e:
            e.remove(pair)
        else:
            e.add(pair)
        return CoverGraph(self.fibres, e, self.v)

    def relabelled(self, perm) -> "CoverGraph":
        """Image of the graph under a vertex permutation (perm[u] = new label)."""
        fibres = [[perm[x] for x in f] for f in self.fibres]
        edges = [(perm[u], perm[w]) for u, w in self._edges]
        return CoverGraph(fibres, edges, self.v)

    # -- file format ---------------------------------------------------------

    def to_json(self) -> dict:
        """Canonical form: u < w, edges sorted, fibres sorted by minimum."""
        return {"v": self.v,
                "fibres": [list(f) for f in self.fibres],
                "edges": [list(e) for e in self._edges]}

    def to_json_str(self) -> str:
        return json.dumps(self.to_json(), sort_keys=True, separators=(",", ":"))

    @staticmethod
    def from_json(obj) -> "CoverGraph":
        if isinstance(obj, str):
            obj = json.loads(obj)
        try:
            return CoverGraph(obj["fibres"], obj["edges"], obj["v"])
        except KeyError as exc:
            raise GraphStructureError(f"missing key {exc}") from exc


def _bits(mask: int) -> list[int]:
    out = []
    while mask:
        low = mask & -mask
        out.append(low.bit_length() - 1)
        mask ^= low
    return out


def bfs_layers(adj, start: int) -> list[list[int]]:
    """BFS layers from start over bit-row adjacency; stops at the last layer."""
    v = len(adj)
    full = (1 << v) - 1
    seen = 1 << start
    frontier = 1 << start
    layers = [[start]]
    while True:
        nxt = 0
        m = frontier
        while m:
            low = m & -m
            nxt |= adj[low.bit_length() - 1]
            m ^= low
        nxt &= full & ~seen
        if not nxt:
            return layers
        layers.append(_bits(nxt))
        seen |= nxt
        frontier = nxt


def distance_classes(g: CoverGraph, vertex: int) -> list[list[int]]:
    """Spheres of radius 0, 1, 2, ... around a vertex.

    Raises GraphStructureError on disconnected input; a valid cover yields
    exactly four layers.
    """
    layers = bfs_layers(g.adj, vertex)
    if sum(len(l) for l in layers) != g.v:
        raise GraphStructureError("graph is disconnected")
    return layers


def verify_cover(g: CoverGraph, max_violations: int = 10) -> CoverReport:
    """Check the cover axioms, collecting up to max_violations per axiom."""
    rep = CoverReport(is_cover=False, n=g.n, r=g.r, mu=None, lam=None)
    fibre_masks = [0] * g.n
    for i, f in enumerate(g.fibres):
        for x in f:
            fibre_masks[i] |= 1 << x

    # (a) connectivity
    layers = bfs_layers(g.adj, 0)
    reached = sum(len(l) for l in layers)
    if reached != g.v:
        rep.failures.append(Violation("connectivity", (0,),
                                      f"only {reached} of {g.v} vertices reachable"))
        return rep

    # (b) each fibre is a coclique
    count = 0
    for i, f in enumerate(g.fibres):
        for u in f:
            inside = g.adj[u] & fibre_masks[i]
            if inside and count < max_violations:
                rep.failures.append(Violation(
                    "fibre-coclique", (u, _bits(inside)[0]),
                    f"edge inside fibre {i}"))
                count += 1

    # (c) every fibre pair induces a perfect matching
    count = 0
    for i in range(g.n):
        for j in range(i + 1, g.n):
            if count >= max_violations:
                break
            for u in g.fibres[i]:
                d = (g.adj[u] & fibre_masks[j]).bit_count()
                if d != 1:
                    rep.failures.append(Violation(
                        "perfect-matching", (u, j),
                        f"vertex {u} has {d} neighbours in fibre {j}"))
                    count += 1
                    break

    if rep.failures:
        return rep

    # (d) constant mu >= 1 over non-adjacent cross-fibre pairs
    mu = None
    mu_witness = None
    count = 0
    for u in range(g.v):
        au = g.adj[u]
        fu = g.fibre_of[u]
        for w in range(u + 1, g.v):
            if g.fibre_of[w] == fu or (au >> w) & 1:
                continue
            c = (au & g.adj[w]).bit_count()
            if mu is None:
                mu, mu_witness = c, (u, w)
            elif c != mu and count < max_violations:
                rep.failures.append(Violation(
                    "mu-constant", (u, w),
                    f"{c} common neighbours, expected {mu} as at {mu_witness}"))
                count += 1
    if mu is not None and mu < 1:
        rep.failures.append(Violation("mu-positive", mu_witness or (),
                                      f"mu = {mu} < 1"))
    rep.mu = mu

    # (e) adjacent pairs: lambda = n - (r-1)mu - 2
    if mu is not None and not rep.failures:
        lam_expect = g.n - (g.r - 1) * mu - 2
        count = 0
        for u, w in g.edges:
            c = (g.adj[u] & g.adj[w]).bit_count()
            if c != lam_expect and count < max_violations:
                rep.failures.append(Violation(
                    "lambda-mismatch", (u, w),
                    f"{c} common neighbours, expected n-(r-1)mu-2 = {lam_expect}"))
                count += 1
        if not rep.failures:
            rep.lam = lam_expect

    if rep.failures:
        return rep

    # diameter and antipodality (fibres = distance-3 classes)
    diam = 0
    antipodal = True
    for u in range(g.v):
        layers = bfs_layers(g.adj, u)
        ecc = len(layers) - 1
        diam = max(diam, ecc)
        if ecc != 3 or set(layers[3]) != set(g.fibres[g.fibre_of[u]]) - {u}:
            antipodal = False
    rep.diameter = diam
    rep.antipodality_confirmed = antipodal
    if not antipodal:
        rep.failures.append(Violation("antipodality", (),
                                      "fibres are not the distance-3 classes"))
        return rep

    rep.is_cover = True
    return rep


def antipodal_classes(adj) -> list[list[int]]:
    """Partition of a connected diameter-3 graph into antipodal classes.

    Input is a bit-row adjacency (or a CoverGraph, whose fibres are ignored).
    The relation "equal or at distance 3" must be an equivalence; otherwise a
    witness triple is reported.
    """
    if isinstance(adj, CoverGraph):
        adj = adj.adj
    v = len(adj)
    far = []
    for u in range(v):
        layers = bfs_layers(adj, u)
        if sum(len(l) for l in layers) != v:
            raise GraphStructureError("graph is disconnected")
        if len(layers) - 1 != 3:
            raise GraphStructureError(
                f"vertex {u} has eccentricity {len(layers) - 1}, need 3")
        far.append(set(layers[3]))
    classes = []
    assigned = [False] * v
    for u in range(v):
        if assigned[u]:
            continue
        cls = {u} | far[u]
        for x in cls:
            want = cls - {x}
            if far[x] != want:
                y = next(iter(far[x] ^ want))
                raise GraphStructureError(
                    f"distance-3 relation not an equivalence at ({u},{x},{y})")
            assigned[x] = True
        classes.append(sorted(cls))
    classes.sort(key=lambda c: c[0])
    return classes


@dataclass(frozen=True)
class SpectrumReport:
    ok: bool
    failed: tuple[str, ...] = ()

    def __bool__(self) -> bool:
        return self.ok


def spectrum_check(g: CoverGraph, p: CoverParams) -> SpectrumReport:
    """Exact check of the four-eigenvalue identity and trace multiplicities.

    Verifies (A - theta I)(A + I)(A - tau I)(A - k I) = 0 over the surd field.
    The two surd factors multiply out to A^2 - (lambda - mu)A - (n-1)I, which
    has integer entries, so the whole product is exact integer arithmetic.
    Then tr(A^m) for m <= 3 is compared with the model spectrum
    k^m + m_theta theta^m + (n-1)(-1)^m + m_tau tau^m, evaluated exactly.
    """
    failed = []
    a = g.adjacency_matrix()
    v = g.v
    eye = np.eye(v, dtype=np.int64)
    k = p.n - 1
    quad = a @ a - (p.lam - p.mu) * a - (p.n - 1) * eye
    prod = (a - k * eye) @ (a + eye) @ quad
    if np.any(prod != 0):
        failed.append("minimal-polynomial")
    if g.v != p.v:
        failed.append("vertex-count")

    tr = [int(np.trace(np.linalg.matrix_power(a, m))) if m else v
          for m in range(4)]
    expect = [v, 0, p.v * k, p.v * k * p.lam]
    for m, (got, want) in enumerate(zip(tr, expect)):
        if got != want:
            failed.append(f"trace-A^{m}")

    # model spectrum traces, exact in the surd field
    for m in range(4):
        model = (QuadExt(k ** m) + p.m_theta * p.theta ** m
                 + QuadExt((p.n - 1) * (-1) ** m) + p.m_tau * p.tau ** m)
        if model != tr[m]:
            failed.append(f"model-trace-A^{m}")
    return SpectrumReport(ok=not failed, failed=tuple(failed))


def params_of(g: CoverGraph) -> CoverParams:
    """verify_cover + derive_params in one step; raises if g is not a cover."""
    rep = verify_cover(g)
    if not rep.is_cover:
        raise GraphStructureError(
            f"not a cover: {[f.axiom for f in rep.failures]}")
    return derive_params(rep.n, rep.r, rep.mu)
