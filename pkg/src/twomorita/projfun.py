"""Projective-functor 2-categories of basic monomial quiver algebras.

Paths are read left to right: the relation ``["a", "b"]`` is the path that
follows arrow ``a`` and then arrow ``b``, so ``tgt(a) == src(b)``. The
idempotent ``e_v`` is the length-0 path at ``v`` and ``e_b A e_a`` is spanned
by the basis paths from ``a`` to ``b``.

The bimodule ``A e_b (x) e_a A`` gives a 1-morphism ``P[b,a]`` from the
component of ``a`` to the component of ``b``, and::

    P[b,a] o P[d,c] = dim(e_a A e_d) * P[b,c]

(``P[d,c]`` acts first).
"""

from __future__ import annotations

import graphlib
import itertools
import json
from collections import deque
from dataclasses import dataclass
from typing import Iterable, Mapping, Sequence

from .errors import IllTypedRelation, InfiniteDimensional, ParseError
from .nnimat import NNIMatrix
from .twocat import Indecomposable1Mor, TwoCatPresentation

# Brute-force canonical forms are exponential in the vertex count.
MAX_CANON_VERTICES = 8


@dataclass(frozen=True)
class Arrow:
    name: str
    src: str
    tgt: str


Path = tuple[str, tuple[str, ...]]  # (start vertex, arrow names)


class QuiverAlgebra:
    def __init__(self, vertices: Sequence[str], arrows: Sequence[Arrow], relations: Iterable[Sequence[str]] = ()):
        self.vertices: tuple[str, ...] = tuple(vertices)
        self.arrows: tuple[Arrow, ...] = tuple(arrows)
        self.relations: tuple[tuple[str, ...], ...] = tuple(tuple(r) for r in relations)
        self._validate()
        self.arrow = {a.name: a for a in self.arrows}
        self._max_rel = max((len(r) for r in self.relations), default=1)
        self._relset = set(self.relations)
        self._check_finite()
        self.basis: tuple[Path, ...] = self._enumerate_basis()

    def _validate(self) -> None:
        if not self.vertices:
            raise ParseError("an algebra needs at least one vertex")
        if len(set(self.vertices)) != len(self.vertices):
            raise ParseError("duplicate vertex names")
        vs = set(self.vertices)
        names = [a.name for a in self.arrows]
        if len(set(names)) != len(names):
            raise ParseError("duplicate arrow names")
        for a in self.arrows:
            if a.src not in vs or a.tgt not in vs:
                raise ParseError(f"arrow {a.name} has an unknown endpoint")
        arrows = {a.name: a for a in self.arrows}
        for rel in self.relations:
            if len(rel) < 2:
                raise IllTypedRelation(f"relation {list(rel)} has length < 2")
            for x in rel:
                if x not in arrows:
                    raise IllTypedRelation(f"relation {list(rel)} uses unknown arrow {x}")
            for x, y in zip(rel, rel[1:]):
                if arrows[x].tgt != arrows[y].src:
                    raise IllTypedRelation(f"relation {list(rel)}: {x} does not end where {y} starts")

    def _avoids(self, arrows: tuple[str, ...]) -> bool:
        """Whether no relation is a suffix of ``arrows`` (prefixes were already checked)."""
        n = len(arrows)
        return not any(arrows[n - k:] in self._relset for k in range(2, min(n, self._max_rel) + 1))

    def _check_finite(self) -> None:
        # Relation-avoiding paths are walks in the graph on avoiding paths of
        # length r-1 (r = longest relation); infinitely many iff it has a cycle.
        span = self._max_rel - 1
        graph: dict = {}
        if span == 0:
            for v in self.vertices:
                graph.setdefault(v, set())
            for a in self.arrows:
                graph.setdefault(a.tgt, set()).add(a.src)
        else:
            states = [p for p in self._paths_up_to(span) if len(p[1]) == span]
            for v, arrs in states:
                graph.setdefault((v, arrs), set())
                last = self.arrow[arrs[-1]].tgt
                for a in self.arrows:
                    if a.src == last and self._avoids(arrs + (a.name,)):
                        nxt_arrs = (arrs + (a.name,))[1:]
                        nxt = (self.arrow[nxt_arrs[0]].src, nxt_arrs)
                        graph.setdefault(nxt, set()).add((v, arrs))
        try:
            tuple(graphlib.TopologicalSorter(graph).static_order())
        except graphlib.CycleError:
            raise InfiniteDimensional("relation-avoiding paths of unbounded length exist") from None

    def _paths_up_to(self, length: int | None) -> list[Path]:
        out: list[Path] = []
        frontier: list[Path] = [(v, ()) for v in self.vertices]
        while frontier:
            out.extend(frontier)
            if length is not None and len(frontier[0][1]) >= length:
                break
            nxt = []
            for v, arrs in frontier:
                end = self.arrow[arrs[-1]].tgt if arrs else v
                for a in self.arrows:
                    if a.src == end and self._avoids(arrs + (a.name,)):
                        nxt.append((v, arrs + (a.name,)))
            frontier = nxt
        return out

    def _enumerate_basis(self) -> tuple[Path, ...]:
        return tuple(self._paths_up_to(None))

    def path_target(self, p: Path) -> str:
        v, arrs = p
        return self.arrow[arrs[-1]].tgt if arrs else v

    @property
    def dim(self) -> int:
        return len(self.basis)

    def __eq__(self, other) -> bool:
        if not isinstance(other, QuiverAlgebra):
            return NotImplemented
        return (self.vertices, self.arrows, self.relations) == (other.vertices, other.arrows, other.relations)

    def __repr__(self) -> str:
        return f"QuiverAlgebra(vertices={list(self.vertices)}, arrows={len(self.arrows)}, dim={self.dim})"

    def to_json(self) -> dict:
        return {
            "vertices": list(self.vertices),
            "arrows": [{"name": a.name, "src": a.src, "tgt": a.tgt} for a in self.arrows],
            "relations": [list(r) for r in self.relations],
        }

    def restrict(self, vertices: Iterable[str]) -> QuiverAlgebra:
        """Full subquiver on ``vertices`` (which must be a union of components)."""
        keep = set(vertices)
        arrows = [a for a in self.arrows if a.src in keep and a.tgt in keep]
        names = {a.name for a in arrows}
        rels = [r for r in self.relations if r[0] in names]
        return QuiverAlgebra([v for v in self.vertices if v in keep], arrows, rels)


def load_quiver(text: str) -> QuiverAlgebra:
    try:
        data = json.loads(text)
    except json.JSONDecodeError as exc:
        raise ParseError(f"invalid JSON: {exc}") from None
    return quiver_from_json(data)


def quiver_from_json(data: Mapping) -> QuiverAlgebra:
    try:
        vertices = [str(v) for v in data["vertices"]]
        arrows = [Arrow(str(a["name"]), str(a["src"]), str(a["tgt"])) for a in data.get("arrows", [])]
        relations = [[str(x) for x in r] for r in data.get("relations", [])]
    except (KeyError, TypeError) as exc:
        raise ParseError(f"malformed quiver: {exc!r}") from None
    return QuiverAlgebra(vertices, arrows, relations)


def dims_matrix(A: QuiverAlgebra) -> NNIMatrix:
    """``D[b][a] = dim e_b A e_a``, the number of basis paths from ``a`` to ``b``."""
    idx = {v: n for n, v in enumerate(A.vertices)}
    n = len(A.vertices)
    rows = [[0] * n for _ in range(n)]
    for p in A.basis:
        rows[idx[A.path_target(p)]][idx[p[0]]] += 1
    return NNIMatrix(n, n, tuple(tuple(r) for r in rows))


def components(A: QuiverAlgebra) -> list[list[str]]:
    """Connected components, each in vertex order, ordered by first vertex."""
    parent = {v: v for v in A.vertices}

    def find(v):
        while parent[v] != v:
            parent[v] = parent[parent[v]]
            v = parent[v]
        return v

    for a in A.arrows:
        ra, rb = find(a.src), find(a.tgt)
        if ra != rb:
            parent[rb] = ra
    groups: dict[str, list[str]] = {}
    for v in A.vertices:
        groups.setdefault(find(v), []).append(v)
    return sorted(groups.values(), key=lambda g: A.vertices.index(g[0]))


def dim_one_pair(A: QuiverAlgebra) -> tuple[str, str] | None:
    """First vertex pair ``(a, b)`` with ``dim e_b A e_a == 1``, if any.

    For arbitrary idempotents ``dim eAe'`` is a sum over primitive pairs, so
    it can equal 1 only if some primitive pair already gives 1.
    """
    D = dims_matrix(A)
    for bi, b in enumerate(A.vertices):
        for ai, a in enumerate(A.vertices):
            if D[bi, ai] == 1:
                return (a, b)
    return None


def has_dim_one_pair(A: QuiverAlgebra) -> bool:
    return dim_one_pair(A) is not None


def _pid(b: str, a: str) -> str:
    return f"P[{b},{a}]"


def build_projfun_2cat(A: QuiverAlgebra) -> TwoCatPresentation:
    comps = components(A)
    comp_of = {v: str(n + 1) for n, c in enumerate(comps) for v in c}
    objects = [str(n + 1) for n in range(len(comps))]
    D = dims_matrix(A)
    idx = {v: n for n, v in enumerate(A.vertices)}

    onemors = []
    for n, c in enumerate(comps):
        obj = objects[n]
        dim = sum(D[idx[b], idx[a]] for a in c for b in c)
        if dim == 1:
            onemors.append(Indecomposable1Mor(_pid(c[0], c[0]), obj, obj, True))
        else:
            onemors.append(Indecomposable1Mor(f"1_{obj}", obj, obj, True))
    merged = {m.id for m in onemors}
    for b in A.vertices:
        for a in A.vertices:
            pid = _pid(b, a)
            if pid not in merged:
                onemors.append(Indecomposable1Mor(pid, comp_of[a], comp_of[b]))

    comp: dict[tuple[str, str], dict[str, int]] = {}
    for b, a, d, c in itertools.product(A.vertices, repeat=4):
        if comp_of[a] != comp_of[d]:
            continue
        mult = D[idx[a], idx[d]]
        if mult:
            comp[(_pid(b, a), _pid(d, c))] = {_pid(b, c): mult}
    return TwoCatPresentation(objects, onemors, comp)


# canonical forms ---------------------------------------------------------


def _minimal_relations(rels: Iterable[tuple[str, ...]]) -> set[tuple[str, ...]]:
    rels = set(rels)

    def has_proper_sub(r):
        n = len(r)
        return any(r[i:j] in rels for i in range(n) for j in range(i + 2, n + 1) if j - i < n)

    return {r for r in rels if not has_proper_sub(r)}


def canonical_form(A: QuiverAlgebra) -> tuple:
    """Lexicographically least encoding over all vertex and parallel-arrow relabelings.

    The encoding is ``(n_vertices, arrows as (src, tgt) index pairs, relations
    as tuples of arrow positions)``, with relations reduced to the minimal
    generating set of the monomial ideal.
    """
    n = len(A.vertices)
    if n > MAX_CANON_VERTICES:
        raise ValueError(f"canonical form limited to {MAX_CANON_VERTICES} vertices")
    vidx = {v: i for i, v in enumerate(A.vertices)}
    rels = sorted(_minimal_relations(A.relations))
    best = None
    for perm in itertools.permutations(range(n)):
        ends = {a.name: (perm[vidx[a.src]], perm[vidx[a.tgt]]) for a in A.arrows}
        groups: dict[tuple[int, int], list[str]] = {}
        for a in A.arrows:
            groups.setdefault(ends[a.name], []).append(a.name)
        keys = sorted(groups)
        arrow_key = tuple(k for k in keys for _ in groups[k])
        for orders in itertools.product(*(itertools.permutations(groups[k]) for k in keys)):
            pos = {}
            for order in orders:
                for name in order:
                    pos[name] = len(pos)
            rel_key = tuple(sorted(tuple(pos[x] for x in r) for r in rels))
            cand = (n, arrow_key, rel_key)
            if best is None or cand < best:
                best = cand
    return best


def from_canonical(form: tuple, tag: str = "") -> QuiverAlgebra:
    """Rebuild an algebra from a canonical form; names are prefixed with ``tag``."""
    n, arrows, rels = form
    vs = [f"{tag}v{i}" for i in range(n)]
    arr = [Arrow(f"{tag}a{j}", vs[s], vs[t]) for j, (s, t) in enumerate(arrows)]
    return QuiverAlgebra(vs, arr, [[arr[j].name for j in r] for r in rels])


def direct_sum(algebras: Sequence[QuiverAlgebra]) -> QuiverAlgebra:
    """Disjoint union; names are prefixed with the summand position."""
    vs, arrs, rels = [], [], []
    for k, B in enumerate(algebras):
        p = f"{k}:"
        vs += [p + v for v in B.vertices]
        arrs += [Arrow(p + a.name, p + a.src, p + a.tgt) for a in B.arrows]
        rels += [[p + x for x in r] for r in B.relations]
    return QuiverAlgebra(vs, arrs, rels)


CC_FORM = (1, (), ())


@dataclass(frozen=True)
class MoritaNormalForm:
    core: tuple
    epsilon: int

    def to_json(self) -> dict:
        return {
            "core": [{"vertices": n, "arrows": [list(a) for a in arr], "relations": [list(r) for r in rel]}
                     for n, arr, rel in self.core],
            "epsilon": self.epsilon,
        }


def component_algebras(A: QuiverAlgebra) -> list[QuiverAlgebra]:
    return [A.restrict(c) for c in components(A)]


def morita_normal_form(A: QuiverAlgebra) -> MoritaNormalForm:
    """Canonical representative of the class of ``A`` under adding/removing
    copies of the ground field and isomorphism.

    Copies of the field can all be removed when the rest has a vertex pair of
    Hom-dimension 1; otherwise exactly one must stay. Algebras that are
    products of copies of the field all map to ``(core=(), epsilon=0)``.
    """
    comps = component_algebras(A)
    n_fields = sum(1 for B in comps if B.dim == 1)
    rest = [B for B in comps if B.dim > 1]
    core = tuple(sorted(canonical_form(B) for B in rest))
    if n_fields == 0 or not rest or any(has_dim_one_pair(B) for B in rest):
        epsilon = 0
    else:
        epsilon = 1
    return MoritaNormalForm(core, epsilon)


def morita_equivalent(A: QuiverAlgebra, B: QuiverAlgebra) -> bool:
    return morita_normal_form(A) == morita_normal_form(B)


def _state(A: QuiverAlgebra) -> tuple:
    return tuple(sorted(canonical_form(B) for B in component_algebras(A)))


def _algebra(state: tuple) -> QuiverAlgebra:
    return direct_sum([from_canonical(f) for f in state])


def morita_bfs_equivalent(A: QuiverAlgebra, B: QuiverAlgebra, max_fields: int = 4) -> bool:
    """Search for a chain of single add/remove-a-field moves from ``A`` to ``B``.

    A move between ``X`` and ``X + k`` is legal when ``X`` has a vertex pair
    of Hom-dimension 1, checked on the actual algebra. States are multisets
    of canonical component forms, with at most ``max_fields`` field summands
    (raised to cover the endpoints).
    """
    start, goal = _state(A), _state(B)
    bound = max(max_fields, start.count(CC_FORM), goal.count(CC_FORM))
    seen = {start}
    queue = deque([start])
    while queue:
        s = queue.popleft()
        if s == goal:
            return True
        nbrs = []
        if s.count(CC_FORM) < bound and has_dim_one_pair(_algebra(s)):
            nbrs.append(tuple(sorted(s + (CC_FORM,))))
        if CC_FORM in s and len(s) > 1:
            smaller = list(s)
            smaller.remove(CC_FORM)
            smaller = tuple(smaller)
            if has_dim_one_pair(_algebra(smaller)):
                nbrs.append(smaller)
        for t in nbrs:
            if t not in seen:
                seen.add(t)
                queue.append(t)
    return False
