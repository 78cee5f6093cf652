"""Laplacians, critical groups, and spanning-tree polynomials.

The Jacobian (critical) group of a connected graph is the torsion of the
Laplacian cokernel; its order is the number of spanning trees.  The tree
polynomial refines the count: one term per spanning tree, multiplying the
variables of the edges *outside* the tree, hence homogeneous of degree equal
to the genus.  A labeled variant maps edge variables through an arbitrary
relabeling, which is what expressing a cover's polynomial in base variables
needs.
"""

from __future__ import annotations

from dataclasses import dataclass
from math import prod
from typing import Mapping

from .algebra import MultiPoly, int_det, smith_normal_form
from .covers import Cover
from .graphs import Graph, _UnionFind, build_graph, is_connected, valency_adjacency


def laplacian(g: Graph) -> list[list[int]]:
    """Q - A; symmetric with zero row sums, loops contributing nothing net."""
    q, a = valency_adjacency(g)
    n = len(g.vertices)
    return [[q[i][j] - a[i][j] for j in range(n)] for i in range(n)]


def kirchhoff_count(g: Graph) -> int:
    """Number of spanning trees as a Laplacian cofactor (exact integers)."""
    if not is_connected(g):
        raise ValueError("tree count requires a connected graph")
    lap = laplacian(g)
    n = len(g.vertices)
    reduced = [row[1:] for row in lap[1:]]
    return int_det(reduced) if n > 1 else 1


@dataclass(frozen=True)
class JacobianGroup:
    """Invariant factors (each > 1, divisibility chain) and group order."""

    invariant_factors: tuple[int, ...]
    order: int


def jacobian_group(g: Graph) -> JacobianGroup:
    if not is_connected(g):
        raise ValueError("the critical group requires a connected graph")
    lap = laplacian(g)
    diag = smith_normal_form(lap).diagonal
    zeros = [d for d in diag if d == 0]
    if len(zeros) != 1:
        raise AssertionError("Laplacian of a connected graph has corank one")
    factors = tuple(d for d in diag if d > 1)
    return JacobianGroup(factors, prod(factors) if factors else 1)


def labeled_jacobian_polynomial(g: Graph, labels: Mapping[str, str] | None = None) -> MultiPoly:
    """Sum over spanning trees of the product of complementary edge variables.

    ``labels`` renames the variable attached to each edge; distinct edges may
    share a label, in which case exponents add and coefficients count the
    trees sharing a complement.  Enumeration is a deletion/contraction
    recursion; parallel edges with equal labels are processed as one bundle.
    """
    if not is_connected(g):
        raise ValueError("the tree polynomial requires a connected graph")
    if labels is None:
        labels = {e: e for e in g.edges}
    n = len(g.vertices)
    idx = {v: i for i, v in enumerate(g.vertices)}

    base_exps: dict[str, int] = {}

    def add_exp(exps: dict[str, int], label: str, k: int):
        if k:
            exps[label] = exps.get(label, 0) + k

    # bundle parallel non-loop edges sharing endpoints and label
    bundles: dict[tuple[int, int, str], int] = {}
    for e in g.edges:
        s, t = g.ends[e]
        lab = labels[e]
        if s == t:
            add_exp(base_exps, lab, 1)
            continue
        i, j = sorted((idx[s], idx[t]))
        bundles[(i, j, lab)] = bundles.get((i, j, lab), 0) + 1
    blist = sorted(bundles.items())

    uf = _UnionFind(n)
    terms: dict[tuple, int] = {}
    exps = dict(base_exps)

    def record(count: int, start: int):
        tail = dict(exps)
        for (_, _, lab), k in blist[start:]:
            add_exp(tail, lab, k)
        mono = tuple(sorted(tail.items()))
        terms[mono] = terms.get(mono, 0) + count

    def connectable(i: int) -> bool:
        roots: dict[int, int] = {}
        count = 0
        for v in range(n):
            r = uf.find(v)
            if r not in roots:
                roots[r] = r
                count += 1

        def f(x):
            while roots[x] != x:
                x = roots[x]
            return x

        for (u, v, _), _k in blist[i:]:
            ru, rv = f(uf.find(u)), f(uf.find(v))
            if ru != rv:
                roots[rv] = ru
                count -= 1
                if count == 1:
                    return True
        return count == 1

    def walk(i: int, ncomp: int, count: int):
        if ncomp == 1:
            record(count, i)
            return
        if i >= len(blist):
            return
        (u, v, lab), k = blist[i]
        ru, rv = uf.find(u), uf.find(v)
        if ru != rv:
            absorbed = uf.union(ru, rv)
            add_exp(exps, lab, k - 1)
            walk(i + 1, ncomp - 1, count * k)
            if k - 1:
                exps[lab] -= k - 1
                if not exps[lab]:
                    del exps[lab]
            uf.undo(absorbed)
            # exclude the whole bundle if the rest still connects
            if connectable(i + 1):
                add_exp(exps, lab, k)
                walk(i + 1, ncomp, count)
                exps[lab] -= k
                if not exps[lab]:
                    del exps[lab]
        else:
            add_exp(exps, lab, k)
            walk(i + 1, ncomp, count)
            exps[lab] -= k
            if not exps[lab]:
                del exps[lab]

    walk(0, n, 1)
    return MultiPoly({mono: c for mono, c in terms.items()})


def jacobian_polynomial(g: Graph) -> MultiPoly:
    """Tree polynomial with one variable per edge; value 1 on each tree's
    complement, homogeneous of degree genus(g)."""
    return labeled_jacobian_polynomial(g)


def specialized_jacobian_polynomial(cover: Cover) -> MultiPoly:
    """Tree polynomial of the total graph in base edge variables."""
    if not is_connected(cover.total):
        raise ValueError("the cover is disconnected")
    return labeled_jacobian_polynomial(cover.total, cover.edge_map)


def subdivide(g: Graph, chain_lengths: Mapping[str, int]) -> Graph:
    """Replace each edge by a chain of the given positive length.

    Length 1 keeps the edge untouched (same id); longer chains introduce
    fresh interior vertices named after the edge.
    """
    vertices = list(g.vertices)
    used = set(vertices)
    edges = []
    for e in g.edges:
        n_e = chain_lengths.get(e, 1)
        if n_e < 1:
            raise ValueError(f"chain length for edge {e!r} must be positive")
        s, t = g.ends[e]
        if n_e == 1:
            edges.append((e, s, t))
            continue
        prev = s
        for i in range(1, n_e):
            w = f"{e}.n{i}"
            while w in used:
                w += "'"
            used.add(w)
            vertices.append(w)
            edges.append((f"{e}.{i}", prev, w))
            prev = w
        edges.append((f"{e}.{n_e}", prev, t))
    return build_graph(vertices, edges)


@dataclass(frozen=True)
class PushforwardReport:
    surjective: bool
    kernel_order: int


def pushforward_jacobian(cover: Cover) -> PushforwardReport:
    """Induced map on critical groups: verify surjectivity, compute |kernel|.

    Both groups are presented as cokernels of reduced Laplacians; the divisor
    pushforward of the (vertex - basepoint) generators gives the induced map,
    and the Smith form of the stacked matrix [pushforward | relations]
    measures the cokernel of the image.
    """
    if not is_connected(cover.total):
        raise ValueError("the cover is disconnected")
    if not is_connected(cover.base):
        raise ValueError("the base is disconnected")
    base, total = cover.base, cover.total
    jac_base = jacobian_group(base).order
    jac_total = jacobian_group(total).order

    bq, tq = base.vertices[0], total.vertices[0]
    rows = [v for v in base.vertices if v != bq]
    cols = [tv for tv in total.vertices if tv != tq]
    anchor = cover.vertex_map[tq]
    push = [
        [
            (1 if cover.vertex_map[tv] == u else 0) - (1 if anchor == u else 0)
            for tv in cols
        ]
        for u in rows
    ]
    lap = laplacian(base)
    bidx = {v: i for i, v in enumerate(base.vertices)}
    reduced = [
        [lap[bidx[u]][bidx[w]] for w in rows]
        for u in rows
    ]
    stacked = [push_row + red_row for push_row, red_row in zip(push, reduced)]
    if rows:
        diag = smith_normal_form(stacked).diagonal
        if any(d == 0 for d in diag):
            raise AssertionError("image lattice lost full rank")
        coker = prod(diag)
    else:
        coker = 1
    surjective = coker == 1
    image_order, rem = divmod(jac_base, coker)
    if rem:
        raise AssertionError("cokernel order does not divide the base group order")
    kernel_order, rem = divmod(jac_total, image_order)
    if rem:
        raise AssertionError("image order does not divide the total group order")
    return PushforwardReport(surjective=surjective, kernel_order=kernel_order)
