"""Union structures: construction, kind classification, N-level engines."""

import pytest

import neutromagma as nm
from neutromagma import SubsetPredicate as SP
from neutromagma import Verdict3


def biloop():
    return nm.build_n_structure([nm.extend_tagged(nm.ln(5, 2)), nm.cyclic(6)],
                                ["s-neutrosophic-loop", "group"], "b")


def test_build_validation():
    with pytest.raises(nm.ParameterError):
        nm.build_n_structure([nm.cyclic(3)], ["group"])        # N = 1
    with pytest.raises(nm.ParameterError, match="component 0"):
        nm.build_n_structure([nm.zmod_mult(6), nm.cyclic(2)], ["group", "group"])
    with pytest.raises(nm.ParameterError):
        nm.build_n_structure([nm.cyclic(2), nm.cyclic(2)], ["group"])


def test_orders_sum():
    ns = biloop()
    assert ns.order == 18 == sum(c.order for c in ns.components)
    ns2 = nm.build_n_structure(
        [nm.zn_units_neutro(5), nm.zn_line_neutro(6), nm.alternating(4)],
        ["s-neutrosophic-group", "s-neutrosophic-semigroup", "group"])
    assert ns2.order == 8 + 11 + 12


def test_classify_n_kind_basic():
    two_groups = nm.build_n_structure([nm.cyclic(2), nm.cyclic(3)],
                                      ["group", "group"])
    v = nm.classify_n_kind(two_groups)
    assert v.n_group and not v.n_group_semigroup
    gs = nm.build_n_structure([nm.cyclic(2), nm.zmod_mult(6)],
                              ["group", "semigroup"])
    v = nm.classify_n_kind(gs)
    assert v.n_group_semigroup and not v.n_group
    glsg = nm.build_n_structure(
        [nm.cyclic(2), nm.ln(5, 2), nm.zmod_mult(6), nm.zn(5, 2, 3)],
        ["group", "loop", "semigroup", "groupoid"])
    assert nm.classify_n_kind(glsg).n_glsg


def test_kind_monotonicity():
    # upgrading a declared semigroup to s-semigroup keeps S-N-verdicts true
    a = nm.build_n_structure(
        [nm.cyclic(2), nm.zmod_mult(6), nm.cyclic(3), nm.ln(5, 2), nm.zn(12, 2, 4)],
        ["group", "semigroup", "group", "loop", "groupoid"])
    b = nm.build_n_structure(
        [nm.cyclic(2), nm.zmod_mult(6), nm.cyclic(3), nm.ln(5, 2), nm.zn(12, 2, 4)],
        ["group", "s-semigroup", "group", "s-loop", "s-groupoid"])
    va, vb = nm.classify_n_kind(a), nm.classify_n_kind(b)
    for name in va.true_flags():
        if name.startswith("s_"):
            assert getattr(vb, name)


def test_enumerate_n_substructures():
    ns = biloop()
    subs, complete = nm.enumerate_n_substructures(
        ns, [nm.S_NEUTRO_SUBLOOP, SP.IS_GROUP])
    assert complete
    for p in subs:
        assert p.order == sum(len(c) for c in p.per_component)
        assert all(c for c in p.per_component)       # nonempty everywhere
        assert nm.is_s_neutrosophic_subloop(
            nm.Subset(ns.components[0], p.per_component[0]))
        assert nm.subset_is_group(nm.Subset(ns.components[1], p.per_component[1])) \
            or p.per_component[1] == tuple(range(6))
    # a species nothing satisfies empties the whole cartesian product
    none = nm.CustomPredicate("never", lambda s: False)
    subs, _ = nm.enumerate_n_substructures(ns, [none, SP.IS_GROUP])
    assert subs == []


def test_enumeration_cap():
    ns = biloop()
    with pytest.raises(nm.ResourceLimitError):
        nm.enumerate_n_substructures(ns, [SP.IS_SUBGROUPOID, SP.IS_SUBGROUPOID],
                                     cap=10)


def test_n_lagrange_prime_order():
    ns = nm.build_n_structure(
        [nm.zmod_mult(10), nm.zn_line_neutro(6),
         nm.direct_product(nm.zmod_mult(2), nm.zmod_mult(5))],
        ["s-semigroup", "s-neutrosophic-semigroup", "s-semigroup"])
    assert ns.order == 31
    rep = nm.n_lagrange(ns, [nm.GROUP_OR_S_SUBSEMIGROUP, SP.IS_S_NEUTROSOPHIC_SUB,
                             nm.GROUP_OR_S_SUBSEMIGROUP])
    assert rep.verdict in (Verdict3.FREE, Verdict3.VACUOUS)
    srep = nm.n_sylow(ns, [nm.GROUP_OR_S_SUBSEMIGROUP, SP.IS_S_NEUTROSOPHIC_SUB,
                           nm.GROUP_OR_S_SUBSEMIGROUP])
    assert srep.verdict in (Verdict3.FREE, Verdict3.VACUOUS)
    assert nm.n_cauchy(ns).verdict in (Verdict3.FREE, Verdict3.VACUOUS)


def test_tuple_sylow_vacuous():
    ns = biloop()
    rep = nm.tuple_sylow(ns, (7, 7), [SP.IS_GROUP, SP.IS_GROUP])
    assert not rep.found                      # 7 divides neither 12 nor 6
    with pytest.raises(nm.ParameterError):
        nm.tuple_sylow(ns, (2,), [SP.IS_GROUP])
    with pytest.raises(nm.ParameterError):
        nm.tuple_sylow(ns, (2, 2), [SP.IS_GROUP])


def test_tuple_sylow_found():
    ns = biloop()
    rep = nm.tuple_sylow(ns, (2, 3), [nm.S_NEUTRO_SUBLOOP, SP.IS_GROUP])
    assert rep.found
    w = rep.witness
    assert len(w.per_component[0]) == 4       # 2^2 exactly divides 12
    assert len(w.per_component[1]) == 3
    # cross-check: each component-level engine also finds that Sylow order
    for comp, prime, species, size in ((ns.components[0], 2, nm.S_NEUTRO_SUBLOOP, 4),
                                       (ns.components[1], 3, SP.IS_GROUP, 3)):
        crep = nm.sylow_classify(comp, species)
        assert any(v.order == size for v in crep.witnesses)


def test_deficit_substructures():
    ns = biloop()
    with pytest.raises(nm.ParameterError):
        nm.deficit_substructures(ns, 2, [SP.IS_GROUP, SP.IS_GROUP])
    one_comp = nm.deficit_substructures(ns, 1, [nm.S_NEUTRO_SUBLOOP, SP.IS_GROUP])
    assert one_comp
    for p in one_comp:
        assert sum(1 for c in p.per_component if c) == 1


def test_n_coset():
    ns = biloop()
    comp0, comp1 = ns.components
    h = nm.NSubset(ns, [comp0.subset(["e", "eI", "3", "3I"]).members,
                        comp1.subset(["1", "g^3"]).members])
    # translating by a component identity changes nothing
    same = nm.n_coset(ns, h, (1, comp1.identity))
    assert same.per_component == h.per_component
    moved = nm.n_coset(ns, h, (1, comp1.index("g^3")))
    assert moved.per_component[0] == h.per_component[0]     # pass-through
    assert set(moved.per_component[1]) == {comp1.index("1"), comp1.index("g^3")}


def test_n_homomorphism_check():
    g = nm.cyclic(5)
    ident = nm.PartialMap(g, g, tuple((i, i) for i in range(5)))
    assert nm.n_homomorphism_check([ident, ident])
    bad = nm.PartialMap(g, g, ((1, 0), (2, 1)))
    assert not nm.n_homomorphism_check([ident, bad])
    with pytest.raises(nm.ParameterError):
        nm.n_homomorphism_check([])


def test_n_subset_is_produced_matches_enumeration():
    ns = biloop()
    species = [nm.S_NEUTRO_SUBLOOP, SP.IS_GROUP]
    subs, _ = nm.enumerate_n_substructures(ns, species)
    emitted = {p.per_component for p in subs}
    for p in subs[:20]:
        assert nm.n_subset_is_produced(ns, p, species)
    fulls = nm.NSubset(ns, [tuple(range(ns.components[0].order)),
                            tuple(range(ns.components[1].order))])
    assert fulls.per_component not in emitted
    assert not nm.n_subset_is_produced(ns, fulls, species)
