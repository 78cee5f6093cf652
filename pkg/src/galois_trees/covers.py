"""Abelian covers of graphs from dilation data and voltage assignments.

A cover specification holds a base graph, a finite abelian group G, a
dilation datum (a subgroup D(v) per vertex, trivial when absent), and a
voltage assignment (a group element per edge, read against the canonical
orientation and only meaningful modulo D(source) + D(target)).

The total graph is built fiberwise: the fiber over a vertex v is the coset
space G/D(v), the fiber over an edge is G itself, the source map forgets
down to the coset, and the target map first adds the edge voltage.  G acts
on every fiber by translation; the action is transitive on vertex fibers
and free and transitive on edge fibers, and the projection is harmonic with
local degree |D(v)| over v.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Iterable, Mapping, NamedTuple

from .graphs import Graph, build_graph, contract, is_connected
from .groups import (
    AbelianGroup,
    Element,
    Subgroup,
    minimal_generators,
    subgroup_from_generators,
    subgroup_sum,
    trivial_subgroup,
)


@dataclass(frozen=True)
class CoverSpec:
    base: Graph
    group: AbelianGroup
    dilation: dict[str, Subgroup] = field(default_factory=dict)
    voltage: dict[str, Element] = field(default_factory=dict)

    def dilation_at(self, v: str) -> Subgroup:
        sub = self.dilation.get(v)
        return sub if sub is not None else trivial_subgroup(self.group)

    def voltage_on(self, e: str) -> Element:
        return self.voltage.get(e, self.group.zero())

    def is_free(self) -> bool:
        return all(sub.is_trivial() for sub in self.dilation.values())


class NormalizedSpec(NamedTuple):
    spec: CoverSpec
    reduced_edges: tuple[str, ...]


def validate_spec(spec: CoverSpec) -> NormalizedSpec:
    """Check id consistency and rewrite voltages as canonical coset reps.

    The canonical representative of a voltage class modulo
    D(source) + D(target) is its lexicographically smallest member; zero
    voltages and trivial dilation entries are dropped entirely.  The edges
    whose stored representative changed are reported.
    """
    g = spec.base
    group = spec.group
    vset = set(g.vertices)
    for v, sub in spec.dilation.items():
        if v not in vset:
            raise ValueError(f"dilation names unknown vertex {v!r}")
        if sub.group != group:
            raise ValueError(f"dilation subgroup at {v!r} has a different parent group")
    eset = set(g.edges)
    for e in spec.voltage:
        if e not in eset:
            raise ValueError(f"voltage names unknown edge {e!r}")
    dilation = {
        v: sub for v, sub in spec.dilation.items() if not sub.is_trivial()
    }
    voltage: dict[str, Element] = {}
    reduced = []
    for e in sorted(spec.voltage):
        eta = group.reduce(spec.voltage[e])
        s, t = g.ends[e]
        joint = subgroup_sum(spec.dilation_at(s), spec.dilation_at(t))
        rep = min(group.add(eta, d) for d in joint.elements)
        if rep != eta:
            reduced.append(e)
        if rep != group.zero():
            voltage[e] = rep
    out = CoverSpec(base=g, group=group, dilation=dilation, voltage=voltage)
    return NormalizedSpec(out, tuple(reduced))


def _fmt(t: Element) -> str:
    return ".".join(map(str, t)) if t else "0"


@dataclass(frozen=True)
class Cover:
    """A built cover: total graph, projection, translation action, degrees."""

    total: Graph
    base: Graph
    group: AbelianGroup
    vertex_map: dict[str, str]
    edge_map: dict[str, str]
    action_vertices: dict[Element, dict[str, str]]
    action_edges: dict[Element, dict[str, str]]
    local_degrees: dict[str, int]
    spec: CoverSpec | None = None

    def vertex_fiber(self, v: str) -> tuple[str, ...]:
        return tuple(sorted(tv for tv, bv in self.vertex_map.items() if bv == v))

    def edge_fiber(self, e: str) -> tuple[str, ...]:
        return tuple(sorted(te for te, be in self.edge_map.items() if be == e))

    @property
    def degree(self) -> int:
        return self.group.order


def build_cover(spec: CoverSpec) -> Cover:
    """Construct the total graph of a cover specification fiber by fiber."""
    spec = validate_spec(spec).spec
    g = spec.base
    group = spec.group
    elements = group.elements()

    # coset representative tables per vertex
    coset_rep: dict[str, dict[Element, Element]] = {}
    for v in g.vertices:
        d = spec.dilation_at(v)
        table: dict[Element, Element] = {}
        for a in elements:
            if a in table:
                continue
            coset = sorted(group.add(a, h) for h in d.elements)
            rep = coset[0]
            for member in coset:
                table[member] = rep
        coset_rep[v] = table

    def vertex_id(v: str, a: Element) -> str:
        return f"{v}@{_fmt(coset_rep[v][a])}"

    total_vertices = []
    for v in g.vertices:
        total_vertices.extend(sorted({vertex_id(v, a) for a in elements}))

    edge_descriptions = []
    for e in g.edges:
        s, t = g.ends[e]
        eta = spec.voltage_on(e)
        for a in elements:
            edge_descriptions.append(
                (f"{e}@{_fmt(a)}", vertex_id(s, a), vertex_id(t, group.add(a, eta)))
            )
    total = build_graph(total_vertices, edge_descriptions)

    vertex_map = {}
    for v in g.vertices:
        for a in elements:
            vertex_map[vertex_id(v, a)] = v
    edge_map = {f"{e}@{_fmt(a)}": e for e in g.edges for a in elements}

    action_vertices = {}
    action_edges = {}
    for gelt in elements:
        vmap = {}
        for v in g.vertices:
            for a in elements:
                vmap[vertex_id(v, a)] = vertex_id(v, group.add(gelt, a))
        emap = {}
        for e in g.edges:
            for a in elements:
                emap[f"{e}@{_fmt(a)}"] = f"{e}@{_fmt(group.add(gelt, a))}"
        action_vertices[gelt] = vmap
        action_edges[gelt] = emap

    local_degrees = {
        tv: spec.dilation_at(bv).order for tv, bv in vertex_map.items()
    }
    return Cover(
        total=total,
        base=g,
        group=group,
        vertex_map=vertex_map,
        edge_map=edge_map,
        action_vertices=action_vertices,
        action_edges=action_edges,
        local_degrees=local_degrees,
        spec=spec,
    )


def is_connected_cover(cover: Cover) -> bool:
    return is_connected(cover.total)


def validate_cover(cover: Cover):
    """Check the defining invariants of a cover; raises AssertionError.

    Verifies fiber sizes, that the projection and the action are graph
    morphisms, that translation is transitive on vertex fibers and free and
    transitive on edge fibers, and local balancing at every total vertex.
    """
    total, base, group = cover.total, cover.base, cover.group
    n = group.order
    for e in base.edges:
        fiber = cover.edge_fiber(e)
        assert len(fiber) == n, f"edge fiber over {e} has size {len(fiber)}"
    for v in base.vertices:
        fiber = cover.vertex_fiber(v)
        assert n % len(fiber) == 0
        assert sum(cover.local_degrees[tv] for tv in fiber) == n

    # projection is a graph morphism (endpoints commute with the maps)
    for te in total.edges:
        be = cover.edge_map[te]
        ts, tt = total.ends[te]
        bs, bt = base.ends[be]
        assert cover.vertex_map[ts] == bs and cover.vertex_map[tt] == bt

    # translation acts by automorphisms commuting with the projection
    for gelt, emap in cover.action_edges.items():
        vmap = cover.action_vertices[gelt]
        for te in total.edges:
            ts, tt = total.ends[te]
            s2, t2 = total.ends[emap[te]]
            assert vmap[ts] == s2 and vmap[tt] == t2
            assert cover.edge_map[emap[te]] == cover.edge_map[te]

    # transitivity / freeness on fibers
    for e in base.edges:
        fiber = set(cover.edge_fiber(e))
        start = min(fiber)
        orbit = {cover.action_edges[gelt][start] for gelt in cover.action_edges}
        assert orbit == fiber
        stab = [g for g, emap in cover.action_edges.items() if emap[start] == start]
        assert stab == [group.zero()]
    for v in base.vertices:
        fiber = set(cover.vertex_fiber(v))
        start = min(fiber)
        orbit = {cover.action_vertices[gelt][start] for gelt in cover.action_vertices}
        assert orbit == fiber

    # local balancing: every base half-edge at p(tv) has d(tv) preimages at tv
    for tv in total.vertices:
        bv = cover.vertex_map[tv]
        d = cover.local_degrees[tv]
        for be in base.edges:
            for side in (0, 1):
                if base.ends[be][side] != bv:
                    continue
                count = sum(
                    1
                    for te in total.edges
                    if cover.edge_map[te] == be and total.ends[te][side] == tv
                )
                assert count == d, (
                    f"balancing fails at {tv} over half-edge ({be},{side}):"
                    f" {count} != {d}"
                )


def frobenius(spec: CoverSpec, path: Iterable[tuple[str, int]]) -> Element:
    """Oriented voltage sum along a composable edge path.

    Each step is (edge id, +1) for the canonical orientation or (edge id, -1)
    for its reverse; consecutive steps must compose head to tail.
    """
    group = spec.group
    g = spec.base
    total = group.zero()
    prev_head = None
    for eid, direction in path:
        if eid not in g.ends:
            raise ValueError(f"unknown edge {eid!r} in path")
        if direction not in (1, -1):
            raise ValueError("step direction must be +1 or -1")
        s, t = g.ends[eid]
        tail, head = (s, t) if direction == 1 else (t, s)
        if prev_head is not None and prev_head != tail:
            raise ValueError(f"path does not compose at edge {eid!r}")
        prev_head = head
        eta = spec.voltage_on(eid)
        total = group.add(total, eta if direction == 1 else group.neg(eta))
    return total


class FreeResolution(NamedTuple):
    spec: CoverSpec
    added_edges: tuple[str, ...]


def free_resolution(spec: CoverSpec) -> FreeResolution:
    """Trade every dilated vertex for voltage loops generating its subgroup.

    Contracting the added loops in the resolved cover reproduces the
    original cover's invariants.  Generators are the canonical greedy
    generating set of each dilation subgroup, so the construction is
    deterministic.
    """
    spec = validate_spec(spec).spec
    g = spec.base
    new_edges = [(e, *g.ends[e]) for e in g.edges]
    voltage = dict(spec.voltage)
    added = []
    used = set(g.edges)
    for v in sorted(spec.dilation):
        sub = spec.dilation[v]
        for k, gen in enumerate(minimal_generators(sub)):
            eid = f"{v}.res{k}"
            while eid in used:
                eid += "'"
            used.add(eid)
            added.append(eid)
            new_edges.append((eid, v, v))
            voltage[eid] = gen
    base = build_graph(g.vertices, new_edges)
    return FreeResolution(
        CoverSpec(base=base, group=spec.group, dilation={}, voltage=voltage),
        tuple(added),
    )


def contract_cover(cover: Cover, edge_ids: Iterable[str]) -> Cover:
    """Contract base edges and all their preimages, keeping the cover structure.

    The local degree at a collapsed total vertex is the number of preimages,
    inside the collapsed subgraph, of any one contracted base edge of the
    corresponding base component (the global degree of the restriction).
    """
    fset = set(edge_ids)
    unknown = fset - set(cover.base.edges)
    if unknown:
        raise ValueError(f"unknown edge id {sorted(unknown)[0]!r}")
    base_c, base_proj = contract(cover.base, fset)
    pre = [te for te in cover.total.edges if cover.edge_map[te] in fset]
    total_c, total_proj = contract(cover.total, pre)

    members: dict[str, list[str]] = {}
    for old, new in total_proj.items():
        members.setdefault(new, []).append(old)

    vertex_map = {}
    for new, olds in members.items():
        images = {base_proj[cover.vertex_map[o]] for o in olds}
        if len(images) != 1:
            raise AssertionError("projection is not well defined after contraction")
        vertex_map[new] = images.pop()
    edge_map = {te: be for te, be in cover.edge_map.items() if be not in fset}

    action_vertices = {}
    for gelt, vmap in cover.action_vertices.items():
        new_map = {}
        for new, olds in members.items():
            targets = {total_proj[vmap[o]] for o in olds}
            if len(targets) != 1:
                raise AssertionError("group action does not descend to the contraction")
            new_map[new] = targets.pop()
        action_vertices[gelt] = new_map
    action_edges = {
        gelt: {te: emap[te] for te in edge_map}
        for gelt, emap in cover.action_edges.items()
    }

    # component of contracted base edges, keyed by collapsed base vertex
    chosen_edge: dict[str, str] = {}
    for e in sorted(fset):
        bv = base_proj[cover.base.ends[e][0]]
        chosen_edge.setdefault(bv, e)
    local_degrees = {}
    for new, olds in members.items():
        if len(olds) == 1 and olds[0] == new:
            local_degrees[new] = cover.local_degrees[new]
            continue
        bv = vertex_map[new]
        e = chosen_edge.get(bv)
        if e is None:
            # collapsed on the total side only; keep the old degree
            local_degrees[new] = cover.local_degrees[olds[0]]
            continue
        count = 0
        for te, be in cover.edge_map.items():
            if be == e and total_proj[cover.total.ends[te][0]] == new:
                count += 1
        local_degrees[new] = count
    return Cover(
        total=total_c,
        base=base_c,
        group=cover.group,
        vertex_map=vertex_map,
        edge_map=edge_map,
        action_vertices=action_vertices,
        action_edges=action_edges,
        local_degrees=local_degrees,
        spec=None,
    )


def dilation_after_loop_contraction(spec: CoverSpec, loop_edge: str) -> Subgroup:
    """Dilation subgroup at the root after contracting a single loop.

    Contracting a voltage loop enlarges the root's dilation subgroup by the
    cyclic group generated by the loop voltage.
    """
    g = spec.base
    if loop_edge not in g.ends:
        raise ValueError(f"unknown edge {loop_edge!r}")
    s, t = g.ends[loop_edge]
    if s != t:
        raise ValueError(f"edge {loop_edge!r} is not a loop")
    loop_group = subgroup_from_generators(spec.group, [spec.voltage_on(loop_edge)])
    return subgroup_sum(spec.dilation_at(s), loop_group)


def switch_voltages(spec: CoverSpec, potentials: Mapping[str, Element]) -> CoverSpec:
    """Apply a vertex switching: eta'(e) = eta(e) + xi(target) - xi(source).

    Switching changes the stored representative but not the isomorphism
    class of the cover, so all computed invariants must agree.
    """
    group = spec.group
    g = spec.base
    xi = {v: group.reduce(potentials.get(v, group.zero())) for v in g.vertices}
    voltage = {}
    for e in g.edges:
        s, t = g.ends[e]
        eta = group.add(spec.voltage_on(e), group.add(xi[t], group.neg(xi[s])))
        if eta != group.zero():
            voltage[e] = eta
    return CoverSpec(base=g, group=group, dilation=dict(spec.dilation), voltage=voltage)
