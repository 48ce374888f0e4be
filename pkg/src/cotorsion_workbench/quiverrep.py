"""Finite-dimensional representations of finite acyclic quivers over F_p.

A representation assigns a based F_p-space to each vertex and a matrix to
each arrow, acting along the arrow (covariant convention): for an arrow
a: v -> w the matrix has shape dims[w] x dims[v].  Under this convention the
projective at v has basis the paths starting at v, and the injective at v is
dual to the paths ending at v.

The module also hosts the category adapter (`RepCategory`) that the generic
homological machinery is written against, plus certified decomposition,
isomorphism testing and indecomposable enumeration with catalogs.
"""

from __future__ import annotations

import graphlib
import itertools
import random
from dataclasses import dataclass, field
from functools import cache

import numpy as np

from .exactla import (
    FieldSpec,
    is_prime,
    kernel_a,
    quotient_by_rowspace,
    rank_a,
    rref_a,
    solve_many_a,
)

__all__ = [
    "Quiver",
    "Rep",
    "RepMorphism",
    "Catalog",
    "UndecidedError",
    "BudgetExceeded",
    "validate_quiver",
    "opposite",
    "all_paths",
    "zero_rep",
    "simple",
    "projective",
    "injective",
    "hom_basis",
    "zero_morphism",
    "identity_morphism",
    "compose",
    "kernel",
    "cokernel",
    "image",
    "direct_sum",
    "is_exact",
    "is_iso",
    "decompose",
    "RepCategory",
    "decompose_in",
    "is_iso_in",
    "build_catalog",
    "enumerate_indecomposables",
    "is_projective_rep",
    "is_injective_rep",
]


class UndecidedError(Exception):
    """A check could not be certified either way within its budget."""


class BudgetExceeded(UndecidedError):
    """An enumeration or search refused to run past its configured cap."""


@dataclass(frozen=True)
class Quiver:
    """Finite quiver with ordered vertex labels and labelled arrows.

    Arrows are (label, source, target).  Vertex order is part of the data:
    dimension vectors, flattening and canonical names all follow it.
    """

    vertices: tuple[str, ...]
    arrows: tuple[tuple[str, str, str], ...] = ()

    def __post_init__(self) -> None:
        object.__setattr__(self, "vertices", tuple(str(v) for v in self.vertices))
        object.__setattr__(
            self, "arrows", tuple((str(l), str(s), str(t)) for l, s, t in self.arrows)
        )
        if len(set(self.vertices)) != len(self.vertices):
            raise ValueError("duplicate vertex labels")
        labels = [l for l, _, _ in self.arrows]
        if len(set(labels)) != len(labels):
            raise ValueError("duplicate arrow labels")
        vs = set(self.vertices)
        for l, s, t in self.arrows:
            if s not in vs or t not in vs:
                raise ValueError(f"arrow {l!r} has endpoint outside the vertex set")

    def arrow(self, label: str) -> tuple[str, str, str]:
        for a in self.arrows:
            if a[0] == label:
                return a
        raise ValueError(f"unknown arrow {label!r}")


def validate_quiver(q: Quiver) -> str | None:
    """None if the quiver is finite acyclic; otherwise a diagnostic naming a cycle."""
    ts = graphlib.TopologicalSorter({v: [] for v in q.vertices})
    for _, s, t in q.arrows:
        ts.add(t, s)
    try:
        ts.prepare()
    except graphlib.CycleError as e:
        cyc = " -> ".join(str(v) for v in e.args[1])
        return f"quiver has a cycle: {cyc}"
    return None


@cache
def _topo_order(q: Quiver) -> tuple[str, ...]:
    diag = validate_quiver(q)
    if diag:
        raise ValueError(diag)
    ts = graphlib.TopologicalSorter({v: [] for v in q.vertices})
    for _, s, t in q.arrows:
        ts.add(t, s)
    order = [v for v in ts.static_order()]
    return tuple(order)


@cache
def opposite(q: Quiver) -> Quiver:
    return Quiver(q.vertices, tuple((l, t, s) for l, s, t in q.arrows))


@cache
def all_paths(q: Quiver) -> dict[tuple[str, str], tuple[tuple[str, ...], ...]]:
    """All directed paths (v, w) -> tuple of paths, each a tuple of arrow labels
    in traversal order.  Paths are sorted by (length, arrow-index sequence), so
    the empty path comes first at (v, v).  Basis orders downstream rely on this.
    """
    idx = {l: i for i, (l, _, _) in enumerate(q.arrows)}
    out_of: dict[str, list[tuple[str, str]]] = {v: [] for v in q.vertices}
    for l, s, t in q.arrows:
        out_of[s].append((l, t))
    table: dict[tuple[str, str], list[tuple[str, ...]]] = {
        (v, w): [] for v in q.vertices for w in q.vertices
    }
    for v in reversed(_topo_order(q)):
        table[(v, v)].append(())
        for l, t in out_of[v]:
            for w in q.vertices:
                for rest in table[(t, w)]:
                    table[(v, w)].append((l,) + rest)
    result = {}
    for key, paths in table.items():
        result[key] = tuple(sorted(paths, key=lambda p: (len(p), [idx[l] for l in p])))
    return result


def _zero(r: int, c: int) -> np.ndarray:
    return np.zeros((r, c), dtype=np.int64)


def _shaped(m, rows: int, cols: int, p: int, what: str) -> np.ndarray:
    a = np.asarray(m, dtype=np.int64)
    if a.ndim == 1 and rows * cols == a.size and min(rows, cols) <= 1:
        a = a.reshape(rows, cols)
    if a.ndim != 2 or a.shape != (rows, cols):
        raise ValueError(f"matrix for {what} must have shape {(rows, cols)}, got {a.shape}")
    return a % p


@dataclass(eq=False)
class Rep:
    """Representation: dims per vertex, one matrix per arrow (target x source)."""

    quiver: Quiver
    p: int
    dims: dict[str, int]
    arrow_maps: dict[str, np.ndarray] = field(default_factory=dict)

    def __post_init__(self) -> None:
        if not is_prime(self.p):
            raise ValueError(f"characteristic must be prime, got {self.p}")
        self.dims = {v: int(self.dims.get(v, 0)) for v in self.quiver.vertices}
        for v, d in self.dims.items():
            if d < 0:
                raise ValueError(f"negative dimension at vertex {v!r}")
        maps = {}
        for l, s, t in self.quiver.arrows:
            m = self.arrow_maps.get(l)
            if m is None:
                m = _zero(self.dims[t], self.dims[s])
            maps[l] = _shaped(m, self.dims[t], self.dims[s], self.p, f"arrow {l!r}")
        extra = set(self.arrow_maps) - {l for l, _, _ in self.quiver.arrows}
        if extra:
            raise ValueError(f"maps given for unknown arrows: {sorted(extra)}")
        self.arrow_maps = maps

    @property
    def total_dim(self) -> int:
        return sum(self.dims.values())

    @property
    def dim_vector(self) -> tuple[int, ...]:
        return tuple(self.dims[v] for v in self.quiver.vertices)


def same_rep(a: Rep, b: Rep) -> bool:
    return (
        a.quiver == b.quiver
        and a.p == b.p
        and a.dims == b.dims
        and all(np.array_equal(a.arrow_maps[l], b.arrow_maps[l]) for l, _, _ in a.quiver.arrows)
    )


@dataclass(eq=False)
class RepMorphism:
    """Vertex-wise linear maps commuting with the arrow actions."""

    source: Rep
    target: Rep
    vertex_maps: dict[str, np.ndarray] = field(default_factory=dict)

    def __post_init__(self) -> None:
        if self.source.quiver != self.target.quiver or self.source.p != self.target.p:
            raise ValueError("morphism endpoints live over different quivers or fields")
        p = self.source.p
        q = self.source.quiver
        maps = {}
        for v in q.vertices:
            m = self.vertex_maps.get(v)
            if m is None:
                m = _zero(self.target.dims[v], self.source.dims[v])
            maps[v] = _shaped(
                m, self.target.dims[v], self.source.dims[v], p, f"vertex {v!r}"
            )
        self.vertex_maps = maps
        for l, s, t in q.arrows:
            lhs = self.target.arrow_maps[l] @ maps[s] % p
            rhs = maps[t] @ self.source.arrow_maps[l] % p
            if not np.array_equal(lhs, rhs):
                raise ValueError(f"commuting square fails at arrow {l!r}")

    @property
    def p(self) -> int:
        return self.source.p


def zero_rep(q: Quiver, p: int) -> Rep:
    return Rep(q, p, {})


def simple(q: Quiver, p: int, v: str) -> Rep:
    if v not in q.vertices:
        raise ValueError(f"unknown vertex {v!r}")
    return Rep(q, p, {v: 1})


def projective(q: Quiver, p: int, v: str) -> Rep:
    """Indecomposable projective at v: basis at w is the paths v -> w; an arrow
    b: w -> w' post-composes, sending path u to the path b*u when it extends."""
    if v not in q.vertices:
        raise ValueError(f"unknown vertex {v!r}")
    paths = all_paths(q)
    dims = {w: len(paths[(v, w)]) for w in q.vertices}
    maps = {}
    for l, s, t in q.arrows:
        m = _zero(dims[t], dims[s])
        tgt_index = {u: i for i, u in enumerate(paths[(v, t)])}
        for j, u in enumerate(paths[(v, s)]):
            m[tgt_index[u + (l,)], j] = 1
        maps[l] = m
    return Rep(q, p, dims, maps)


def injective(q: Quiver, p: int, v: str) -> Rep:
    """Indecomposable injective at v: dual of the opposite-quiver projective,
    so the basis at w is dual to the paths w -> v."""
    if v not in q.vertices:
        raise ValueError(f"unknown vertex {v!r}")
    pop = projective(opposite(q), p, v)
    dims = {w: pop.dims[w] for w in q.vertices}
    maps = {l: pop.arrow_maps[l].T.copy() for l, _, _ in q.arrows}
    return Rep(q, p, dims, maps)


def zero_morphism(m: Rep, n: Rep) -> RepMorphism:
    return RepMorphism(m, n, {})


def identity_morphism(m: Rep) -> RepMorphism:
    return RepMorphism(m, m, {v: np.eye(m.dims[v], dtype=np.int64) for v in m.quiver.vertices})


def compose(g: RepMorphism, f: RepMorphism) -> RepMorphism:
    """g after f."""
    if not same_rep(g.source, f.target):
        raise ValueError("morphisms are not composable")
    p = f.p
    return RepMorphism(
        f.source,
        g.target,
        {v: g.vertex_maps[v] @ f.vertex_maps[v] % p for v in f.source.quiver.vertices},
    )


def hom_basis(m: Rep, n: Rep) -> list[RepMorphism]:
    """Deterministic basis of Hom(m, n): kernel of the joint commuting-square
    system, variables ordered by vertex then row-major within each block."""
    if m.quiver != n.quiver or m.p != n.p:
        raise ValueError("hom spaces need a common quiver and field")
    p = m.p
    q = m.quiver
    offs: dict[str, int] = {}
    tot = 0
    for v in q.vertices:
        offs[v] = tot
        tot += n.dims[v] * m.dims[v]
    if tot == 0:
        return []
    rows = []
    for l, s, t in q.arrows:
        a = m.arrow_maps[l]
        b = n.arrow_maps[l]
        for i in range(n.dims[t]):
            for j in range(m.dims[s]):
                row = np.zeros(tot, dtype=np.int64)
                for k in range(n.dims[s]):
                    row[offs[s] + k * m.dims[s] + j] += b[i, k]
                for u in range(m.dims[t]):
                    row[offs[t] + i * m.dims[t] + u] -= a[u, j]
                rows.append(row % p)
    if rows:
        ker = kernel_a(np.stack(rows), p)
    else:
        ker = np.eye(tot, dtype=np.int64)
    basis = []
    for col in ker.T:
        maps = {
            v: col[offs[v] : offs[v] + n.dims[v] * m.dims[v]].reshape(n.dims[v], m.dims[v])
            for v in q.vertices
        }
        basis.append(RepMorphism(m, n, maps))
    return basis


def _flat(f: RepMorphism) -> np.ndarray:
    parts = [f.vertex_maps[v].reshape(-1) for v in f.source.quiver.vertices]
    return np.concatenate(parts) if parts else np.zeros(0, dtype=np.int64)


def _lincomb(src: Rep, tgt: Rep, coeffs, basis: list[RepMorphism]) -> RepMorphism:
    p = src.p
    maps = {v: _zero(tgt.dims[v], src.dims[v]) for v in src.quiver.vertices}
    for c, f in zip(coeffs, basis):
        if c % p == 0:
            continue
        for v in src.quiver.vertices:
            maps[v] = (maps[v] + c * f.vertex_maps[v]) % p
    return RepMorphism(src, tgt, maps)


def kernel(f: RepMorphism) -> tuple[Rep, RepMorphism]:
    """Kernel subrepresentation with its canonical inclusion."""
    p = f.p
    q = f.source.quiver
    cols = {v: kernel_a(f.vertex_maps[v], p) for v in q.vertices}
    dims = {v: cols[v].shape[1] for v in q.vertices}
    maps = {}
    for l, s, t in q.arrows:
        rhs = f.source.arrow_maps[l] @ cols[s] % p
        sol = solve_many_a(cols[t], rhs, p)
        assert sol is not None
        maps[l] = sol
    k = Rep(q, p, dims, maps)
    return k, RepMorphism(k, f.source, cols)


def cokernel(f: RepMorphism) -> tuple[Rep, RepMorphism]:
    """Cokernel with its canonical projection; coordinates are the non-pivot
    target coordinates."""
    p = f.p
    q = f.source.quiver
    projs, sects, dims = {}, {}, {}
    for v in q.vertices:
        pr, sc = quotient_by_rowspace(f.vertex_maps[v].T, f.target.dims[v], p)
        projs[v], sects[v] = pr, sc
        dims[v] = pr.shape[0]
    maps = {
        l: projs[t] @ f.target.arrow_maps[l] @ sects[s] % p for l, s, t in q.arrows
    }
    c = Rep(q, p, dims, maps)
    return c, RepMorphism(f.target, c, projs)


def image(f: RepMorphism) -> tuple[Rep, RepMorphism]:
    """Image subrepresentation of the target, with its inclusion."""
    i, incl, _ = _image_factor(f)
    return i, incl


def _image_factor(f: RepMorphism) -> tuple[Rep, RepMorphism, RepMorphism]:
    p = f.p
    q = f.source.quiver
    cols = {}
    for v in q.vertices:
        red, piv = rref_a(f.vertex_maps[v].T, p)
        cols[v] = red[: len(piv)].T.copy()
    dims = {v: cols[v].shape[1] for v in q.vertices}
    maps = {}
    for l, s, t in q.arrows:
        sol = solve_many_a(cols[t], f.target.arrow_maps[l] @ cols[s] % p, p)
        assert sol is not None
        maps[l] = sol
    img = Rep(q, p, dims, maps)
    incl = RepMorphism(img, f.target, cols)
    epi_maps = {v: solve_many_a(cols[v], f.vertex_maps[v], p) for v in q.vertices}
    return img, incl, RepMorphism(f.source, img, epi_maps)


def direct_sum(
    parts: list[Rep], *, quiver: Quiver | None = None, p: int | None = None
) -> tuple[Rep, list[RepMorphism], list[RepMorphism]]:
    """Block direct sum with injections and projections, blocks in input order."""
    if parts:
        quiver, p = parts[0].quiver, parts[0].p
        for m in parts[1:]:
            if m.quiver != quiver or m.p != p:
                raise ValueError("direct sum over mixed quivers or fields")
    elif quiver is None or p is None:
        raise ValueError("empty direct sum needs an explicit quiver and field")
    dims = {v: sum(m.dims[v] for m in parts) for v in quiver.vertices}
    offs = []
    running = {v: 0 for v in quiver.vertices}
    for m in parts:
        offs.append(dict(running))
        for v in quiver.vertices:
            running[v] += m.dims[v]
    maps = {}
    for l, s, t in quiver.arrows:
        m = _zero(dims[t], dims[s])
        for k, part in enumerate(parts):
            r0, c0 = offs[k][t], offs[k][s]
            m[r0 : r0 + part.dims[t], c0 : c0 + part.dims[s]] = part.arrow_maps[l]
        maps[l] = m
    total = Rep(quiver, p, dims, maps)
    injs, projs = [], []
    for k, part in enumerate(parts):
        imaps, pmaps = {}, {}
        for v in quiver.vertices:
            i = _zero(dims[v], part.dims[v])
            o = offs[k][v]
            i[o : o + part.dims[v], :] = np.eye(part.dims[v], dtype=np.int64)
            imaps[v] = i
            pmaps[v] = i.T.copy()
        injs.append(RepMorphism(part, total, imaps))
        projs.append(RepMorphism(total, part, pmaps))
    return total, injs, projs


def is_exact(seq: list[RepMorphism]) -> bool:
    """Exactness at every interior object of a composable chain.

    The chain is read as padded with zero objects at both ends, so the first
    map must be mono and the last epi.
    """
    if not seq:
        raise ValueError("empty sequence")
    for f, g in zip(seq, seq[1:]):
        if not same_rep(f.target, g.source):
            raise ValueError("sequence is not composable")
    p = seq[0].p
    q = seq[0].source.quiver
    for v in q.vertices:
        if rank_a(seq[0].vertex_maps[v], p) != seq[0].source.dims[v]:
            return False
        if rank_a(seq[-1].vertex_maps[v], p) != seq[-1].target.dims[v]:
            return False
    for f, g in zip(seq, seq[1:]):
        for v in q.vertices:
            if ((g.vertex_maps[v] @ f.vertex_maps[v]) % p).any():
                return False
            if rank_a(f.vertex_maps[v], p) + rank_a(g.vertex_maps[v], p) != f.target.dims[v]:
                return False
    return True


class RepCategory:
    """Abelian-category primitives for representations of one quiver.

    The homological machinery is written against this duck-typed interface;
    a second adapter with the same surface lives in the triangular-matrix
    module.
    """

    kind = "rep"

    def __init__(self, quiver: Quiver, p: int):
        diag = validate_quiver(quiver)
        if diag:
            raise ValueError(diag)
        self.quiver = quiver
        self.p = p

    def hom_basis(self, m, n):
        return hom_basis(m, n)

    def flat(self, f):
        return _flat(f)

    def lincomb(self, src, tgt, coeffs, basis):
        return _lincomb(src, tgt, coeffs, basis)

    def compose(self, g, f):
        return compose(g, f)

    def identity(self, m):
        return identity_morphism(m)

    def zero_mor(self, m, n):
        return zero_morphism(m, n)

    def kernel(self, f):
        return kernel(f)

    def cokernel(self, f):
        return cokernel(f)

    def direct_sum(self, parts):
        return direct_sum(parts, quiver=self.quiver, p=self.p)

    def zero_obj(self):
        return zero_rep(self.quiver, self.p)

    def dim(self, m):
        return m.total_dim

    def dims_key(self, m):
        return m.dim_vector

    def format_name(self, key) -> str:
        return "M(" + ",".join(str(d) for d in key) + ")"

    def is_invertible(self, f):
        p = self.p
        for v in self.quiver.vertices:
            m = f.vertex_maps[v]
            if m.shape[0] != m.shape[1] or rank_a(m, p) != m.shape[0]:
                return False
        return True

    def factor_through_epi(self, e, f):
        """g with g o e = f, for e epi; unique, solved vertexwise."""
        p = self.p
        maps = {}
        for v in self.quiver.vertices:
            sol = solve_many_a(e.vertex_maps[v].T, f.vertex_maps[v].T, p)
            if sol is None:
                raise ValueError("morphism does not factor through the epi")
            maps[v] = sol.T
        return RepMorphism(e.target, f.target, maps)

    def factor_through_mono(self, m, f):
        """g with m o g = f, for m mono; unique, solved vertexwise."""
        p = self.p
        maps = {}
        for v in self.quiver.vertices:
            sol = solve_many_a(m.vertex_maps[v], f.vertex_maps[v], p)
            if sol is None:
                raise ValueError("morphism does not factor through the mono")
            maps[v] = sol
        return RepMorphism(f.source, m.source, maps)

    def projective_cover(self, m):
        return projective_cover(m)


def _path_matrix(m: Rep, start: str, path: tuple[str, ...]) -> np.ndarray:
    mat = np.eye(m.dims[start], dtype=np.int64)
    for l in path:
        mat = m.arrow_maps[l] @ mat % m.p
    return mat


def projective_cover(m: Rep) -> tuple[Rep, RepMorphism]:
    """Minimal projective cover, built from coset representatives of the top.

    rad(M) at v is the sum of images of all arrows into v; representatives are
    completed greedily over the standard basis, so the cover is deterministic.
    """
    q, p = m.quiver, m.p
    gens: list[tuple[str, np.ndarray]] = []
    for v in q.vertices:
        incoming = [m.arrow_maps[l] for l, _, t in q.arrows if t == v]
        cur = (
            np.concatenate(incoming, axis=1)
            if incoming
            else _zero(m.dims[v], 0)
        )
        r = rank_a(cur, p)
        for k in range(m.dims[v]):
            e = _zero(m.dims[v], 1)
            e[k, 0] = 1
            cand = np.concatenate([cur, e], axis=1)
            if rank_a(cand, p) > r:
                cur = cand
                r += 1
                gens.append((v, e[:, 0]))
    parts = [projective(q, p, v) for v, _ in gens]
    total, _, _ = direct_sum(parts, quiver=q, p=p)
    paths = all_paths(q)
    blocks: dict[str, list[np.ndarray]] = {w: [] for w in q.vertices}
    for v, vec in gens:
        for w in q.vertices:
            cols = [
                _path_matrix(m, v, path) @ vec % p for path in paths[(v, w)]
            ]
            blocks[w].append(
                np.stack(cols, axis=1) if cols else _zero(m.dims[w], 0)
            )
    fmaps = {
        w: (
            np.concatenate(blocks[w], axis=1)
            if blocks[w]
            else _zero(m.dims[w], 0)
        )
        for w in q.vertices
    }
    return total, RepMorphism(total, m, fmaps)


def _image_object(cat, f):
    c, pr = cat.cokernel(f)
    img, _ = cat.kernel(pr)
    return img


def decompose_in(cat, m, seed: int = 0, budget: int = 1 << 16) -> list:
    """Split m into indecomposable summands, certified.

    Searches End(m) exhaustively for a nontrivial idempotent when the point
    count fits the budget; otherwise falls back to seeded Fitting splittings
    and raises UndecidedError if no certified split is found.
    """
    if cat.dim(m) == 0:
        return []
    ends = cat.hom_basis(m, m)
    d = len(ends)
    if d == 1:
        return [m]
    if cat.p**d <= budget:
        idf = cat.flat(cat.identity(m))
        for coeffs in itertools.product(range(cat.p), repeat=d):
            e = cat.lincomb(m, m, coeffs, ends)
            ef = cat.flat(e)
            if not ef.any() or np.array_equal(ef, idf):
                continue
            if np.array_equal(cat.flat(cat.compose(e, e)), ef):
                ker, _ = cat.kernel(e)
                img = _image_object(cat, e)
                return decompose_in(cat, img, seed, budget) + decompose_in(
                    cat, ker, seed, budget
                )
        return [m]
    rng = random.Random(seed)
    for _ in range(16):
        coeffs = [rng.randrange(cat.p) for _ in range(d)]
        f = cat.lincomb(m, m, coeffs, ends)
        g = f
        for _ in range(cat.dim(m)):
            g = cat.compose(g, f)
        ker, _ = cat.kernel(g)
        kd = cat.dim(ker)
        if 0 < kd < cat.dim(m):
            img = _image_object(cat, g)
            if kd + cat.dim(img) == cat.dim(m):
                return decompose_in(cat, img, seed, budget) + decompose_in(
                    cat, ker, seed, budget
                )
    raise UndecidedError(
        f"decomposition not certified within budget (End dimension {d})"
    )


def is_iso_in(cat, m, n, seed: int = 0, budget: int = 1 << 16) -> bool:
    """Certified isomorphism test: search Hom(m, n) for an invertible element."""
    if cat.dims_key(m) != cat.dims_key(n):
        return False
    if cat.dim(m) == 0:
        return True
    basis = cat.hom_basis(m, n)
    d = len(basis)
    if d == 0:
        return False
    if cat.p**d <= budget:
        for coeffs in itertools.product(range(cat.p), repeat=d):
            if cat.is_invertible(cat.lincomb(m, n, coeffs, basis)):
                return True
        return False
    rng = random.Random(seed)
    for _ in range(budget):
        coeffs = [rng.randrange(cat.p) for _ in range(d)]
        if cat.is_invertible(cat.lincomb(m, n, coeffs, basis)):
            return True
    raise UndecidedError("isomorphism search budget exhausted")


def is_iso(m: Rep, n: Rep, seed: int = 0) -> bool:
    return is_iso_in(RepCategory(m.quiver, m.p), m, n, seed)


def decompose(m: Rep, seed: int = 0) -> list[Rep]:
    return decompose_in(RepCategory(m.quiver, m.p), m, seed)


@dataclass(eq=False)
class Catalog:
    """Canonically ordered list of pairwise non-isomorphic indecomposables.

    Entries are sorted by (total dim, dim vector, fingerprint); fingerprints
    are the rows of the Hom-dimension matrix in the final order.  `complete`
    records whether the producing enumeration covered its whole search space.
    """

    cat: object
    entries: list
    names: list[str]
    fingerprints: list[tuple[int, ...]]
    complete: bool
    label: str = ""
    ext_cache: dict = field(default_factory=dict, repr=False)
    res_cache: dict = field(default_factory=dict, repr=False)

    def __len__(self) -> int:
        return len(self.entries)

    def by_name(self, name: str) -> int:
        try:
            return self.names.index(name)
        except ValueError:
            raise ValueError(f"no catalog entry named {name!r}") from None

    def name_of(self, i: int) -> str:
        return self.names[i]

    def index_of(self, m, seed: int = 0) -> int | None:
        """Index of the entry isomorphic to the (indecomposable) m, else None."""
        key = self.cat.dims_key(m)
        for i, e in enumerate(self.entries):
            if self.cat.dims_key(e) == key and is_iso_in(self.cat, m, e, seed):
                return i
        return None

    def identify(self, m, seed: int = 0) -> list[int]:
        """Catalog indices of the indecomposable summands of m, with multiplicity.

        Raises UndecidedError if a summand is not in the catalog (only possible
        for incomplete catalogs) or decomposition cannot be certified.
        """
        out = []
        for part in decompose_in(self.cat, m, seed):
            i = self.index_of(part, seed)
            if i is None:
                raise UndecidedError(
                    f"summand of dimension vector {self.cat.dims_key(part)} "
                    "is outside the catalog"
                )
            out.append(i)
        return sorted(out)


def build_catalog(cat, found: list, complete: bool, label: str = "") -> Catalog:
    """Dedupe, canonically order and fingerprint a list of indecomposables."""
    uniq: list = []
    for m in found:
        key = cat.dims_key(m)
        if any(
            cat.dims_key(e) == key and is_iso_in(cat, m, e) for e in uniq
        ):
            continue
        uniq.append(m)
    uniq.sort(key=lambda m: (cat.dim(m), cat.dims_key(m)))
    fp = [
        tuple(len(cat.hom_basis(a, b)) for b in uniq) for a in uniq
    ]
    order = sorted(
        range(len(uniq)), key=lambda i: (cat.dim(uniq[i]), cat.dims_key(uniq[i]), fp[i])
    )
    entries = [uniq[i] for i in order]
    fingerprints = [
        tuple(len(cat.hom_basis(a, b)) for b in entries) for a in entries
    ]
    names: list[str] = []
    for e in entries:
        base = cat.format_name(cat.dims_key(e))
        name = base
        k = 2
        while name in names:
            name = f"{base}#{k}"
            k += 1
        names.append(name)
    return Catalog(cat, entries, names, fingerprints, complete, label)


def _dim_vectors(nv: int, cap: int):
    vecs = [
        dv
        for dv in itertools.product(range(cap + 1), repeat=nv)
        if any(dv)
    ]
    vecs.sort(key=lambda dv: (sum(dv), dv))
    return vecs


def enumerate_indecomposables(
    q: Quiver, fld: FieldSpec | int, dim_cap: int, budget: int = 1 << 20
) -> Catalog:
    """All indecomposables with every vertex dimension <= dim_cap, as a Catalog.

    Dimension vectors whose total matrix count exceeds the budget are skipped
    and the catalog is marked incomplete.
    """
    p = fld.characteristic if isinstance(fld, FieldSpec) else int(fld)
    diag = validate_quiver(q)
    if diag:
        raise ValueError(diag)
    cat = RepCategory(q, p)
    found: list[Rep] = []
    complete = True
    for dv in _dim_vectors(len(q.vertices), dim_cap):
        dims = dict(zip(q.vertices, dv))
        shapes = [(dims[t], dims[s]) for _, s, t in q.arrows]
        cells = sum(r * c for r, c in shapes)
        if p**cells > budget:
            complete = False
            continue
        for flat in itertools.product(range(p), repeat=cells):
            maps = {}
            pos = 0
            for (l, s, t), (r, c) in zip(q.arrows, shapes):
                maps[l] = np.array(flat[pos : pos + r * c], dtype=np.int64).reshape(r, c)
                pos += r * c
            m = Rep(q, p, dims, maps)
            parts = decompose_in(cat, m)
            if len(parts) == 1:
                found.append(m)
    return build_catalog(cat, found, complete)


def is_projective_rep(m: Rep, seed: int = 0) -> bool:
    """True iff every indecomposable summand is one of the vertex projectives."""
    cat = RepCategory(m.quiver, m.p)
    projs = [projective(m.quiver, m.p, v) for v in m.quiver.vertices]
    return all(
        any(is_iso_in(cat, part, pr, seed) for pr in projs)
        for part in decompose_in(cat, m, seed)
    )


def is_injective_rep(m: Rep, seed: int = 0) -> bool:
    cat = RepCategory(m.quiver, m.p)
    injs = [injective(m.quiver, m.p, v) for v in m.quiver.vertices]
    return all(
        any(is_iso_in(cat, part, inj, seed) for inj in injs)
        for part in decompose_in(cat, m, seed)
    )
