"""Projective resolutions, Ext, Tor and functor-exactness checks.

The resolution and Ext machinery is generic over a category adapter (the
duck-typed surface of `RepCategory`), so the same code serves plain quiver
representations and triples over a triangular matrix algebra.  Tor and the
tensor side of exactness checking work with right modules presented as
representations of the opposite quiver.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass, field

import numpy as np

from .exactla import kernel_a, quotient_by_rowspace, rank_a, solve_many_a
from .quiverrep import (
    BudgetExceeded,
    Rep,
    RepCategory,
    RepMorphism,
    hom_basis,
    is_exact,
    opposite,
    zero_rep,
)

__all__ = [
    "Resolution",
    "ExtSpace",
    "resolve",
    "ext",
    "projective_resolution",
    "ext_space",
    "realize_extension",
    "extension_class_of",
    "enumerate_extension_classes",
    "PairTensor",
    "pair_tensor",
    "pair_tensor_map",
    "tor_space",
    "verify_functor_exactness",
]


@dataclass(eq=False)
class Resolution:
    """Projective resolution ... -> terms[1] -> terms[0] -> target -> 0.

    differentials[k] maps terms[k+1] -> terms[k]; the augmentation is the
    cover terms[0] -> target.  Terms beyond the stored list are zero (the
    kernel vanished before the requested length).
    """

    target: object
    terms: list
    differentials: list
    augmentation: object

    def term(self, i: int):
        return self.terms[i] if i < len(self.terms) else None

    def differential(self, i: int):
        if 1 <= i < len(self.terms):
            return self.differentials[i - 1]
        return None

    @property
    def length(self) -> int:
        return len(self.terms) - 1


def resolve(cat, m, length: int) -> Resolution:
    """Resolution by covers, out to `length` syzygies or until the kernel dies."""
    if length < 0:
        raise ValueError("resolution length must be >= 0")
    p0, aug = cat.projective_cover(m)
    terms, diffs = [p0], []
    ker, incl = cat.kernel(aug)
    while len(terms) <= length and cat.dim(ker) > 0:
        pn, cover = cat.projective_cover(ker)
        diffs.append(cat.compose(incl, cover))
        terms.append(pn)
        ker, incl = cat.kernel(cover)
    return Resolution(m, terms, diffs, aug)


def _flats_matrix(cat, mors, src, tgt) -> np.ndarray:
    if mors:
        return np.stack([cat.flat(f) for f in mors], axis=1)
    n = cat.flat(cat.zero_mor(src, tgt)).shape[0]
    return np.zeros((n, 0), dtype=np.int64)


def _coords(cat, basis_mat, f) -> np.ndarray:
    sol = solve_many_a(basis_mat, cat.flat(f)[:, None], cat.p)
    assert sol is not None, "morphism lies outside the given basis span"
    return sol[:, 0]


@dataclass(eq=False)
class ExtSpace:
    """Ext^degree(source, target) with chosen cocycle representatives.

    The dimension is independent of the resolution used (tested); the cocycle
    representatives of course depend on it.
    """

    degree: int
    source: object
    target: object
    dimension: int
    cocycles: list
    cat: object = field(repr=False, default=None)
    resolution: Resolution | None = field(repr=False, default=None)
    basis: list = field(repr=False, default_factory=list)
    basis_mat: np.ndarray | None = field(repr=False, default=None)
    class_mat: np.ndarray | None = field(repr=False, default=None)


def ext(cat, m, n, i: int, resolution: Resolution | None = None) -> ExtSpace:
    if i < 1:
        raise ValueError("ext degree must be >= 1")
    res = resolution if resolution is not None else resolve(cat, m, i + 1)
    p = cat.p
    if i >= len(res.terms):
        return ExtSpace(i, m, n, 0, [], cat, res)
    ti = res.terms[i]
    hb = cat.hom_basis(ti, n)
    h = len(hb)
    if h == 0:
        return ExtSpace(i, m, n, 0, [], cat, res)
    basis_mat = _flats_matrix(cat, hb, ti, n)
    d_out = res.differential(i + 1)
    if d_out is None:
        zmat = np.eye(h, dtype=np.int64)
    else:
        nxt = cat.hom_basis(res.terms[i + 1], n)
        nxt_mat = _flats_matrix(cat, nxt, res.terms[i + 1], n)
        cols = [
            _coords(cat, nxt_mat, cat.compose(f, d_out)) if nxt else np.zeros(0, dtype=np.int64)
            for f in hb
        ]
        dmat = np.stack(cols, axis=1) if nxt else np.zeros((0, h), dtype=np.int64)
        zmat = kernel_a(dmat, p)
    d_in = res.differential(i)
    prev = cat.hom_basis(res.terms[i - 1], n)
    bcols = [_coords(cat, basis_mat, cat.compose(g, d_in)) for g in prev]
    bnd = (
        np.stack(bcols, axis=1)
        if bcols
        else np.zeros((h, 0), dtype=np.int64)
    )
    cur = bnd.copy()
    r = rank_a(cur, p)
    reps = []
    for k in range(zmat.shape[1]):
        cand = np.concatenate([cur, zmat[:, k : k + 1]], axis=1)
        if rank_a(cand, p) > r:
            cur = cand
            r += 1
            reps.append(zmat[:, k])
    bnd_basis = []
    cur2 = np.zeros((h, 0), dtype=np.int64)
    r2 = 0
    for k in range(bnd.shape[1]):
        cand = np.concatenate([cur2, bnd[:, k : k + 1]], axis=1)
        if rank_a(cand, p) > r2:
            cur2 = cand
            r2 += 1
            bnd_basis.append(bnd[:, k])
    class_mat = (
        np.stack(reps + bnd_basis, axis=1)
        if reps or bnd_basis
        else np.zeros((h, 0), dtype=np.int64)
    )
    cocycles = [cat.lincomb(ti, n, z, hb) for z in reps]
    return ExtSpace(i, m, n, len(reps), cocycles, cat, res, hb, basis_mat, class_mat)


def _class_coords(space: ExtSpace, cocycle) -> np.ndarray:
    """Coordinates of a cocycle's class in the chosen representative basis."""
    cat = space.cat
    y = _coords(cat, space.basis_mat, cocycle)
    x = solve_many_a(space.class_mat, y[:, None], cat.p)
    assert x is not None, "morphism is not a cocycle for this space"
    return x[: space.dimension, 0]


def realize_extension(space: ExtSpace, coords):
    """Short exact sequence 0 -> target -> E -> source -> 0 for a degree-1 class.

    Returns (E, incl, proj).  The zero class yields the split extension.
    """
    if space.degree != 1:
        raise ValueError("only degree-1 classes can be realized")
    coords = np.asarray(coords, dtype=np.int64)
    if coords.shape != (space.dimension,):
        raise ValueError(
            f"expected {space.dimension} coordinates, got shape {coords.shape}"
        )
    cat = space.cat
    res = space.resolution
    n = space.target
    omega, om_incl = cat.kernel(res.augmentation)
    if space.dimension and coords.any():
        c = cat.lincomb(res.terms[1], n, coords, space.cocycles)
        e = cat.factor_through_mono(om_incl, res.differentials[0])
        fbar = cat.factor_through_epi(e, c)
    else:
        fbar = cat.zero_mor(omega, n)
    s, injs, projs = cat.direct_sum([n, res.terms[0]])
    g1 = cat.compose(injs[0], fbar)
    g2 = cat.compose(injs[1], om_incl)
    g = cat.lincomb(omega, s, [1, cat.p - 1], [g1, g2])
    e_obj, pr = cat.cokernel(g)
    incl = cat.compose(pr, injs[0])
    h = cat.compose(res.augmentation, projs[1])
    proj = cat.factor_through_epi(pr, h)
    return e_obj, incl, proj


def extension_class_of(space: ExtSpace, incl, proj) -> np.ndarray:
    """Class of the short exact sequence 0 -> target -> E -> source -> 0."""
    if space.degree != 1:
        raise ValueError("only degree-1 spaces classify short exact sequences")
    if space.dimension == 0:
        return np.zeros(0, dtype=np.int64)
    cat = space.cat
    res = space.resolution
    p0 = res.terms[0]
    e_obj = incl.target
    cand = cat.hom_basis(p0, e_obj)
    amat = _flats_matrix(
        cat, [cat.compose(proj, h) for h in cand], p0, space.source
    )
    x = solve_many_a(amat, cat.flat(res.augmentation)[:, None], cat.p)
    assert x is not None, "cover does not lift along the epi"
    lam = cat.lincomb(p0, e_obj, x[:, 0], cand)
    if len(res.terms) < 2:
        return np.zeros(0, dtype=np.int64)
    c0 = cat.compose(lam, res.differentials[0])
    c = cat.factor_through_mono(incl, c0)
    return _class_coords(space, c)


def enumerate_extension_classes(space: ExtSpace, cap: int = 12) -> list[tuple[int, ...]]:
    """All F_p points of a degree-1 Ext space; refuses above the cap."""
    if space.dimension > cap:
        raise BudgetExceeded(
            f"refusing to enumerate p^{space.dimension} extension classes (cap {cap})"
        )
    return list(itertools.product(range(space.cat.p), repeat=space.dimension))


def projective_resolution(m: Rep, length: int) -> Resolution:
    return resolve(RepCategory(m.quiver, m.p), m, length)


def ext_space(m: Rep, n: Rep, i: int, resolution: Resolution | None = None) -> ExtSpace:
    return ext(RepCategory(m.quiver, m.p), m, n, i, resolution)


@dataclass(eq=False)
class PairTensor:
    """W (x)_A X for a right module W (rep of the opposite quiver) and a left
    module X: quotient of the vertexwise pairing by the bilinearity relations
    (w.a (x) x = w (x) a.x).  Plain F_p space, no residual action."""

    w: Rep
    x: Rep
    dim: int
    offs: dict[str, int]
    proj: np.ndarray
    sect: np.ndarray

    def amb_index(self, v: str, i: int, j: int) -> int:
        return self.offs[v] + i * self.x.dims[v] + j


def pair_tensor(w: Rep, x: Rep) -> PairTensor:
    if w.quiver != opposite(x.quiver) or w.p != x.p:
        raise ValueError("tensor needs a right module over the same algebra")
    p = x.p
    q = x.quiver
    offs: dict[str, int] = {}
    amb = 0
    for v in q.vertices:
        offs[v] = amb
        amb += w.dims[v] * x.dims[v]
    pt = PairTensor(w, x, 0, offs, np.zeros((0, amb)), np.zeros((amb, 0)))
    rows = []
    for l, a, a2 in q.arrows:
        r = w.arrow_maps[l]
        xm = x.arrow_maps[l]
        for i in range(w.dims[a2]):
            for j in range(x.dims[a]):
                row = np.zeros(amb, dtype=np.int64)
                for k in range(w.dims[a]):
                    row[pt.amb_index(a, k, j)] += r[k, i]
                for u in range(x.dims[a2]):
                    row[pt.amb_index(a2, i, u)] -= xm[u, j]
                rows.append(row % p)
    mat = np.stack(rows) if rows else np.zeros((0, amb), dtype=np.int64)
    proj, sect = quotient_by_rowspace(mat, amb, p)
    pt.dim = proj.shape[0]
    pt.proj = proj
    pt.sect = sect
    return pt


def pair_tensor_map(src: PairTensor, tgt: PairTensor, f: RepMorphism) -> np.ndarray:
    """Matrix of W (x) f between the two quotient presentations."""
    p = f.p
    ambs = src.proj.shape[1]
    ambt = tgt.proj.shape[1]
    amb = np.zeros((ambt, ambs), dtype=np.int64)
    for v in f.source.quiver.vertices:
        fv = f.vertex_maps[v]
        for i in range(src.w.dims[v]):
            for j in range(f.source.dims[v]):
                col = src.amb_index(v, i, j)
                for u in range(f.target.dims[v]):
                    amb[tgt.amb_index(v, i, u), col] = fv[u, j]
    return tgt.proj @ amb @ src.sect % p


def tor_space(w: Rep, m: Rep, i: int, resolution: Resolution | None = None) -> int:
    """Dimension of Tor_i(W, M), computed off a projective resolution of M."""
    if i < 0:
        raise ValueError("tor degree must be >= 0")
    cat = RepCategory(m.quiver, m.p)
    res = resolution if resolution is not None else resolve(cat, m, i + 1)
    zero = zero_rep(m.quiver, m.p)

    def term(j):
        t = res.term(j)
        return t if t is not None else zero

    pts = {j: pair_tensor(w, term(j)) for j in (max(i - 1, 0), i, i + 1)}

    def rank_of(j):
        d = res.differential(j)
        if d is None:
            return 0
        return rank_a(pair_tensor_map(pts[j], pts[j - 1], d), m.p)

    if i == 0:
        return pts[0].dim - rank_of(1)
    return pts[i].dim - rank_of(i) - rank_of(i + 1)


def _matrix_seq_exact(dims: list[int], mats: list[np.ndarray], p: int):
    """Exactness of 0 -> V_0 -> ... -> V_k -> 0 given the connecting matrices.

    Returns (True, None) or (False, first failing position), positions indexed
    by object: 0 means the head map is not mono, k that the tail is not epi.
    """
    k = len(dims) - 1
    if rank_a(mats[0], p) != dims[0]:
        return False, 0
    for i in range(1, k):
        if ((mats[i] @ mats[i - 1]) % p).any():
            return False, i
        if rank_a(mats[i - 1], p) + rank_a(mats[i], p) != dims[i]:
            return False, i
    if rank_a(mats[-1], p) != dims[k]:
        return False, k
    return True, None


def verify_functor_exactness(arg, chain: list[RepMorphism], side: str):
    """Does tensoring with (or homming out of) `arg` keep this exact chain exact?

    `chain` is a composable list of morphisms, read with zero objects padded at
    both ends; it must itself be exact, else ValueError.  Returns (bool, pos)
    with pos the first failing object position, or None.
    """
    if side not in ("tensor", "hom"):
        raise ValueError(f"side must be 'tensor' or 'hom', got {side!r}")
    if not chain:
        raise ValueError("empty chain")
    if not is_exact(chain):
        raise ValueError("input chain is not exact")
    p = chain[0].p
    objects = [chain[0].source] + [f.target for f in chain]
    if side == "tensor":
        pts = [pair_tensor(arg, x) for x in objects]
        dims = [pt.dim for pt in pts]
        mats = [
            pair_tensor_map(pts[k], pts[k + 1], chain[k]) for k in range(len(chain))
        ]
    else:
        cat = RepCategory(arg.quiver, arg.p)
        bases = [hom_basis(arg, x) for x in objects]
        basis_mats = [
            _flats_matrix(cat, b, arg, x) for b, x in zip(bases, objects)
        ]
        dims = [len(b) for b in bases]
        mats = []
        for k, f in enumerate(chain):
            cols = [
                _coords(cat, basis_mats[k + 1], cat.compose(f, g)) for g in bases[k]
            ]
            mats.append(
                np.stack(cols, axis=1)
                if cols
                else np.zeros((dims[k + 1], 0), dtype=np.int64)
            )
    return _matrix_seq_exact(dims, mats, p)
