import random

import pytest

from galois_trees import (
    AbelianGroup,
    CoverSpec,
    build_cover,
    build_graph,
    contract_cover,
    degree_sequence,
    dilation_after_loop_contraction,
    free_resolution,
    frobenius,
    genus,
    is_connected_cover,
    jacobian_group,
    switch_voltages,
    trivial_subgroup,
    validate_cover,
    validate_spec,
)
from helpers import (
    dumbbell_z6_spec,
    icosahedron_spec,
    random_cover_spec,
    random_element,
    theta_graph,
)


def test_validate_normalizes_voltage_killed_by_dilation():
    spec = icosahedron_spec()
    spec = CoverSpec(
        base=spec.base,
        group=spec.group,
        dilation=dict(spec.dilation),
        voltage={**spec.voltage, "e1": (3,)},
    )
    normalized, reduced = validate_spec(spec)
    assert "e1" in reduced
    assert normalized.voltage_on("e1") == (0,)
    assert "e1" not in normalized.voltage


def test_validate_leaves_plain_specs_alone():
    g = theta_graph()
    spec = CoverSpec(base=g, group=AbelianGroup((4,)))
    normalized, reduced = validate_spec(spec)
    assert reduced == ()
    assert normalized == spec


def test_validate_reduces_bridge_voltage():
    spec = dumbbell_z6_spec()
    spec = CoverSpec(
        base=spec.base,
        group=spec.group,
        dilation=dict(spec.dilation),
        voltage={**spec.voltage, "e3": (5,)},
    )
    normalized, reduced = validate_spec(spec)
    # D(v1) + D(v2) is everything, so the bridge class is trivial
    assert "e3" in reduced
    assert "e3" not in normalized.voltage


def test_validate_rejects_bad_ids():
    g = theta_graph()
    group = AbelianGroup((2,))
    with pytest.raises(ValueError, match="unknown vertex"):
        validate_spec(
            CoverSpec(base=g, group=group, dilation={"zz": trivial_subgroup(group)})
        )
    with pytest.raises(ValueError, match="unknown edge"):
        validate_spec(CoverSpec(base=g, group=group, voltage={"zz": (1,)}))
    other = trivial_subgroup(AbelianGroup((3,)))
    with pytest.raises(ValueError, match="different parent"):
        validate_spec(CoverSpec(base=g, group=group, dilation={"u": other}))


def test_build_icosahedron_cover():
    cover = build_cover(icosahedron_spec())
    assert len(cover.total.vertices) == 12
    assert len(cover.total.edges) == 30
    assert set(degree_sequence(cover.total)) == {5}
    assert is_connected_cover(cover)
    validate_cover(cover)


def test_trivial_voltage_cover_is_disjoint_copies():
    g = theta_graph()
    for n in (2, 3):
        spec = CoverSpec(base=g, group=AbelianGroup((n,)))
        cover = build_cover(spec)
        assert not is_connected_cover(cover)
        from galois_trees import connected_components

        comps = connected_components(cover.total)
        assert len(comps) == n
        for comp in comps:
            assert len(comp.vertices) == 2 and len(comp.edges) == 3
        validate_cover(cover)


def test_build_dumbbell_cover():
    cover = build_cover(dumbbell_z6_spec())
    assert len(cover.total.vertices) == 5
    assert len(cover.total.edges) == 18
    assert is_connected_cover(cover)
    assert len(cover.vertex_fiber("v1")) == 2
    assert len(cover.vertex_fiber("v2")) == 3
    assert all(len(cover.edge_fiber(e)) == 6 for e in cover.base.edges)
    validate_cover(cover)


def test_frobenius_examples():
    spec = icosahedron_spec()
    assert frobenius(spec, [("e3", 1), ("e4", -1)]) == (1,)
    assert frobenius(spec, [("e1", 1)]) == (0,)
    assert frobenius(spec, [("e2", 1), ("e2", 1)]) == (2,)


def test_frobenius_noncomposable():
    spec = icosahedron_spec()
    with pytest.raises(ValueError, match="compose"):
        frobenius(spec, [("e1", 1), ("e6", 1)])


def test_free_resolution_dumbbell():
    spec = dumbbell_z6_spec()
    resolved, added = free_resolution(spec)
    assert added == ("v1.res0", "v2.res0")
    assert resolved.base.ends["v1.res0"] == ("v1", "v1")
    assert resolved.voltage["v1.res0"] == (2,)
    assert resolved.voltage["v2.res0"] == (3,)
    assert len(resolved.base.vertices) == 2 and len(resolved.base.edges) == 5
    assert resolved.is_free()


def test_free_resolution_noop_on_free_spec():
    g = theta_graph()
    spec = CoverSpec(base=g, group=AbelianGroup((3,)), voltage={"e": (1,)})
    resolved, added = free_resolution(spec)
    assert added == ()
    assert resolved.base == g
    assert resolved.voltage == spec.voltage


def test_free_resolution_icosahedron_recovers_tree_count():
    spec = icosahedron_spec()
    resolved, added = free_resolution(spec)
    assert len(resolved.base.vertices) == 4 and len(resolved.base.edges) == 8
    assert [resolved.voltage[e] for e in added] == [(1,), (1,)]
    cover = build_cover(resolved)
    validate_cover(cover)
    back = contract_cover(cover, added)
    assert jacobian_group(back.total).order == 5_184_000
    assert len(back.total.vertices) == 12 and len(back.total.edges) == 30


def test_contract_cover_roundtrip_dumbbell():
    spec = dumbbell_z6_spec()
    original = build_cover(spec)
    resolved, added = free_resolution(spec)
    cover = build_cover(resolved)
    back = contract_cover(cover, added)
    for v in spec.base.vertices:
        assert len(back.vertex_fiber(v)) == len(original.vertex_fiber(v))
    for e in spec.base.edges:
        assert len(back.edge_fiber(e)) == len(original.edge_fiber(e))
    assert sorted(back.local_degrees.values()) == sorted(original.local_degrees.values())
    assert jacobian_group(back.total).order == jacobian_group(original.total).order
    assert (
        jacobian_group(back.total).invariant_factors
        == jacobian_group(original.total).invariant_factors
    )


def test_contracted_covers_stay_balanced():
    for spec in (dumbbell_z6_spec(), icosahedron_spec()):
        resolved, added = free_resolution(spec)
        back = contract_cover(build_cover(resolved), added)
        validate_cover(back)
    # contracting a bridge of a dilated cover merges everything Galois-style
    cover = build_cover(dumbbell_z6_spec())
    merged = contract_cover(cover, ["e3"])
    validate_cover(merged)
    assert len(merged.total.vertices) == 1
    assert sorted(merged.local_degrees.values()) == [6]


def test_contract_cover_nothing():
    cover = build_cover(dumbbell_z6_spec())
    same = contract_cover(cover, [])
    assert same.total == cover.total
    assert same.base == cover.base
    assert same.local_degrees == cover.local_degrees


def test_contract_cover_bridge_of_free_resolution():
    resolved, _ = free_resolution(dumbbell_z6_spec())
    cover = build_cover(resolved)
    contracted = contract_cover(cover, ["e3"])
    assert len(contracted.base.vertices) == 1
    assert len(contracted.base.edges) == 4
    # rebuild the contracted object directly and compare fiber data
    merged = contracted.base.vertices[0]
    rebuilt_spec = CoverSpec(
        base=contracted.base,
        group=resolved.group,
        voltage={e: resolved.voltage[e] for e in contracted.base.edges if e in resolved.voltage},
    )
    rebuilt = build_cover(rebuilt_spec)
    assert len(contracted.vertex_fiber(merged)) == len(rebuilt.vertex_fiber(merged))
    for e in contracted.base.edges:
        assert len(contracted.edge_fiber(e)) == len(rebuilt.edge_fiber(e))
    assert (
        jacobian_group(contracted.total).order == jacobian_group(rebuilt.total).order
    )


def test_dilation_after_loop_contraction_examples():
    spec = dumbbell_z6_spec()
    assert dilation_after_loop_contraction(spec, "e1").order == 6

    g = build_graph(["v"], [("e", "v", "v")])
    z4 = AbelianGroup((4,))
    free_loop = CoverSpec(base=g, group=z4)
    assert dilation_after_loop_contraction(free_loop, "e").is_trivial()

    resolved, added = free_resolution(icosahedron_spec())
    assert dilation_after_loop_contraction(resolved, added[0]).order == 5

    with pytest.raises(ValueError, match="not a loop"):
        dilation_after_loop_contraction(spec, "e3")


def test_free_cover_genus():
    rng = random.Random(11)
    for _ in range(10):
        spec, cover = random_cover_spec(rng, free=True, max_vertices=4, max_edges=6)
        n = spec.group.order
        g = genus(spec.base)
        assert genus(cover.total) == n * (g - 1) + 1


def test_every_built_cover_is_balanced():
    rng = random.Random(12)
    for _ in range(8):
        spec, cover = random_cover_spec(rng, max_vertices=4, max_edges=6)
        validate_cover(cover)


def test_representative_independence():
    rng = random.Random(13)
    for _ in range(8):
        spec, cover = random_cover_spec(rng, max_vertices=4, max_edges=6)
        group = spec.group
        # change coset representatives: add a random joint-dilation element
        voltage = dict(spec.voltage)
        for e in spec.base.edges:
            s, t = spec.base.ends[e]
            from galois_trees import subgroup_sum

            joint = subgroup_sum(spec.dilation_at(s), spec.dilation_at(t)).elements
            shift = joint[rng.randrange(len(joint))]
            voltage[e] = group.add(spec.voltage_on(e), shift)
        shifted = CoverSpec(
            base=spec.base, group=group, dilation=dict(spec.dilation), voltage=voltage
        )
        # and apply a random vertex switching on top
        xi = {v: random_element(rng, group) for v in spec.base.vertices}
        switched = switch_voltages(shifted, xi)
        other = build_cover(switched)
        assert degree_sequence(other.total) == degree_sequence(cover.total)
        assert (
            jacobian_group(other.total).invariant_factors
            == jacobian_group(cover.total).invariant_factors
        )
        assert jacobian_group(other.total).order == jacobian_group(cover.total).order


def test_resolution_contraction_identity_random():
    rng = random.Random(14)
    for _ in range(6):
        spec, cover = random_cover_spec(rng, max_vertices=3, max_edges=5)
        resolved, added = free_resolution(spec)
        if not added:
            continue
        free_cover = build_cover(resolved)
        back = contract_cover(free_cover, added)
        assert jacobian_group(back.total).order == jacobian_group(cover.total).order
        for v in spec.base.vertices:
            assert len(back.vertex_fiber(v)) == len(cover.vertex_fiber(v))
        assert sorted(back.local_degrees.values()) == sorted(
            cover.local_degrees.values()
        )
