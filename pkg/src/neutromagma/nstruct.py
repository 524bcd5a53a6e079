"""Union-based multi-sorted structures: bigroups, biloops, N-semigroups,
mixed glsg structures and their neutrosophic forms.

Components are disjoint-tagged: order is always the sum of component orders
even when labels coincide across components.  Kinds are declared by the
builder and verified at construction, never inferred, because one table can
satisfy several kinds and the classification depends on the declared role.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations, product
from typing import Optional, Sequence

from .classify import (CauchyReport, ClassReport, SKind, Verdict3,
                       _cauchy_verdict, _sylow_targets, detect_s_kind)
from .magma import (FiniteMagma, ParameterError, PartialMap,
                    PreconditionError, ResourceLimitError, Subset,
                    check_homomorphism, check_identity_law, classify_basic,
                    element_orders, enumerate_closed_subsets, IdentityLaw,
                    predicate_name, submagma)
from .neutro import has_real_subgroup

DEFAULT_COMBINATION_CAP = 10 ** 6


# declared kind -> verification predicate
def _v_group(m):
    return classify_basic(m).is_group


def _v_semigroup(m):
    return check_identity_law(m, IdentityLaw.ASSOCIATIVE).holds


def _v_loop(m):
    return classify_basic(m).is_loop


def _v_groupoid(m):
    return True


def _v_neutro(m):
    return m.has_neutro()


def _v_neutro_semigroup(m):
    return m.has_neutro() and _v_semigroup(m)


def _v_neutro_loop(m):
    # tagged doublings are not loops; the untagged part must be one
    if not m.has_neutro():
        return False
    reals = [i for i in range(m.order) if not m.neutro_mask[i]]
    if not reals:
        return False
    try:
        return classify_basic(submagma(m, reals)).is_loop
    except PreconditionError:
        return False


def _v_neutro_group(m):
    # carries I and some purely-real subset is a group of size >= 2
    return m.has_neutro() and has_real_subgroup(m.full_subset())


def _v_skind(kind):
    return lambda m: detect_s_kind(m, kind).holds


KIND_VERIFIERS = {
    "group": _v_group,
    "semigroup": _v_semigroup,
    "loop": _v_loop,
    "groupoid": _v_groupoid,
    "neutrosophic-group": _v_neutro_group,
    "neutrosophic-semigroup": _v_neutro_semigroup,
    "neutrosophic-loop": _v_neutro_loop,
    "neutrosophic-groupoid": _v_neutro,
    "s-semigroup": _v_skind(SKind.S_SEMIGROUP),
    "s-loop": _v_skind(SKind.S_LOOP),
    "s-groupoid": _v_skind(SKind.S_GROUPOID),
    "s-neutrosophic-group": _v_skind(SKind.S_NEUTROSOPHIC_GROUP),
    "strong-s-neutrosophic-group": _v_skind(SKind.STRONG_S_NEUTROSOPHIC_GROUP),
    "s-neutrosophic-semigroup": _v_skind(SKind.S_NEUTROSOPHIC_SEMIGROUP),
    "s-neutrosophic-loop": _v_skind(SKind.S_NEUTROSOPHIC_LOOP),
    "s-neutrosophic-groupoid": _v_skind(SKind.S_NEUTROSOPHIC_GROUPOID),
}

# declared kind -> family buckets used by the N-kind classifier
_FAMILY = {
    "group": ("group",),
    "semigroup": ("semigroup",),
    "loop": ("loop",),
    "groupoid": ("groupoid",),
    "neutrosophic-group": ("group", "neutro-group"),
    "neutrosophic-semigroup": ("semigroup", "neutro-semigroup"),
    "neutrosophic-loop": ("loop", "neutro-loop"),
    "neutrosophic-groupoid": ("groupoid", "neutro-groupoid"),
    "s-semigroup": ("semigroup", "s-semigroup"),
    "s-loop": ("loop", "s-loop"),
    "s-groupoid": ("groupoid", "s-groupoid"),
    "s-neutrosophic-group": ("group", "neutro-group", "s-neutro-group"),
    "strong-s-neutrosophic-group": ("group", "neutro-group", "s-neutro-group"),
    "s-neutrosophic-semigroup": ("semigroup", "neutro-semigroup", "s-neutro-semigroup"),
    "s-neutrosophic-loop": ("loop", "neutro-loop", "s-neutro-loop"),
    "s-neutrosophic-groupoid": ("groupoid", "neutro-groupoid", "s-neutro-groupoid"),
}


class NStructure:
    """An ordered union G_1 u ... u G_N of disjoint-tagged components."""

    __slots__ = ("components", "declared_kinds", "name")

    def __init__(self, components: Sequence[FiniteMagma],
                 declared_kinds: Sequence[str], name: str = "",
                 verify: bool = True):
        comps = tuple(components)
        kinds = tuple(declared_kinds)
        if len(comps) < 2:
            raise ParameterError("an N-structure needs at least two components")
        if len(kinds) != len(comps):
            raise ParameterError("one declared kind per component is required")
        if verify:
            for i, (c, k) in enumerate(zip(comps, kinds)):
                verifier = KIND_VERIFIERS.get(k)
                if verifier is None:
                    raise ParameterError(f"unknown declared kind {k!r}")
                if not verifier(c):
                    raise ParameterError(
                        f"component {i} ({c.kind_tag}) fails verification for kind {k!r}")
        self.components = comps
        self.declared_kinds = kinds
        self.name = name

    @property
    def n(self):
        return len(self.components)

    @property
    def order(self):
        return sum(c.order for c in self.components)

    def __repr__(self):
        return f"NStructure({self.name!r}, N={self.n}, order={self.order})"


def build_n_structure(components, declared_kinds, name="") -> NStructure:
    return NStructure(components, declared_kinds, name)


class NSubset:
    """Per-component subsets of an NStructure; components may be empty."""

    __slots__ = ("parent", "per_component")

    def __init__(self, parent: NStructure, per_component):
        pcs = []
        if len(per_component) != parent.n:
            raise ParameterError("per_component length must match component count")
        for comp, mem in zip(parent.components, per_component):
            mem = tuple(sorted(set(mem)))
            for i in mem:
                if not (0 <= i < comp.order):
                    raise ParameterError("NSubset member out of range")
            pcs.append(mem)
        self.parent = parent
        self.per_component = tuple(pcs)

    @property
    def order(self):
        return sum(len(p) for p in self.per_component)

    def subsets(self):
        return [Subset(c, p) if p else None
                for c, p in zip(self.parent.components, self.per_component)]

    def __eq__(self, other):
        return (isinstance(other, NSubset) and other.parent is self.parent
                and other.per_component == self.per_component)

    def __hash__(self):
        return hash((id(self.parent), self.per_component))

    def __repr__(self):
        parts = []
        for c, p in zip(self.parent.components, self.per_component):
            parts.append("{" + ", ".join(c.labels[i] for i in p) + "}")
        return " u ".join(parts)


@dataclass(frozen=True)
class NKindVerdict:
    n_group: bool
    n_semigroup: bool
    n_loop: bool
    n_groupoid: bool
    n_group_semigroup: bool
    n_loop_groupoid: bool
    n_glsg: bool
    neutrosophic_n_group: bool
    neutrosophic_n_semigroup: bool
    neutrosophic_n_loop: bool
    neutrosophic_n_groupoid: bool
    s_n_group: bool
    s_n_semigroup: bool
    s_n_loop: bool
    s_n_groupoid: bool
    s_neutrosophic_n_group: bool
    s_neutrosophic_n_semigroup: bool
    s_neutrosophic_n_loop: bool
    s_neutrosophic_n_groupoid: bool
    mixed_neutrosophic: bool
    dual_mixed_neutrosophic: bool
    s_mixed_neutrosophic: bool
    dual_s_mixed_neutrosophic: bool

    def true_flags(self):
        from dataclasses import fields
        return [f.name for f in fields(self) if getattr(self, f.name)]


def classify_n_kind(ns: NStructure) -> NKindVerdict:
    """Evaluate the family predicates from the verified declared kinds; the
    'or' clauses are non-exclusive and mixed families demand N >= 5."""
    fams = [set(_FAMILY[k]) for k in ns.declared_kinds]

    def every(f):
        return all(f in fs for fs in fams)

    def some(f):
        return any(f in fs for fs in fams)

    def some_other(f, g):
        idx_f = [i for i, fs in enumerate(fams) if f in fs]
        idx_g = [i for i, fs in enumerate(fams) if g in fs]
        return any(i != j for i in idx_f for j in idx_g)

    n5 = ns.n >= 5
    return NKindVerdict(
        n_group=every("group"),
        n_semigroup=every("semigroup"),
        n_loop=every("loop"),
        n_groupoid=some("groupoid") and some("semigroup")
                   and all(fs & {"groupoid", "semigroup"} for fs in fams),
        n_group_semigroup=some_other("group", "semigroup"),
        n_loop_groupoid=some_other("loop", "groupoid")
                        and all(fs & {"loop", "groupoid"} for fs in fams),
        n_glsg=(some("group") and some("loop") and some("semigroup")
                and some("groupoid")),
        neutrosophic_n_group=every("group") and some("neutro-group"),
        neutrosophic_n_semigroup=every("semigroup") and some("neutro-semigroup"),
        neutrosophic_n_loop=some("neutro-loop")
                            and all(fs & {"loop", "group"} for fs in fams),
        neutrosophic_n_groupoid=some("neutro-groupoid") and some("semigroup"),
        s_n_group=some("group") and some("s-semigroup"),
        s_n_semigroup=some("group") and some("s-semigroup"),
        s_n_loop=some("s-loop") or (some("loop") and some("group")),
        s_n_groupoid=all(fs & {"s-groupoid", "s-semigroup"} for fs in fams),
        s_neutrosophic_n_group=(some("s-semigroup") or some("s-neutro-semigroup"))
                               and some("group"),
        s_neutrosophic_n_semigroup=all(
            fs & {"s-semigroup", "s-neutro-semigroup"} for fs in fams),
        s_neutrosophic_n_loop=some("s-neutro-loop"),
        s_neutrosophic_n_groupoid=some("s-neutro-groupoid"),
        mixed_neutrosophic=n5 and some("neutro-group") and some("neutro-loop")
                           and some("neutro-semigroup") and some("neutro-groupoid"),
        dual_mixed_neutrosophic=n5 and some("group") and some("loop")
                               and some("semigroup") and some("groupoid")
                               and (some("neutro-group") or some("neutro-loop")
                                    or some("neutro-semigroup") or some("neutro-groupoid")),
        s_mixed_neutrosophic=n5 and some("s-neutro-group") and some("s-neutro-loop")
                             and some("s-neutro-semigroup") and some("s-neutro-groupoid"),
        dual_s_mixed_neutrosophic=n5 and some("s-loop") and some("s-semigroup")
                                  and some("s-groupoid") and some("group")
                                  and (some("neutro-group") or some("neutro-loop")
                                       or some("neutro-semigroup")
                                       or some("neutro-groupoid")),
    )


# ---------------------------------------------------------------------------
# substructure enumeration

def _component_candidates(comp: FiniteMagma, species, allow_empty: bool):
    """Closed subsets of one component passing its species.

    Unlike the magma-level enumeration, the full component and singletons are
    admitted: a proper N-subset may fill a component completely (the union
    stays proper as long as some other component does not)."""
    found = enumerate_closed_subsets(comp, species, include_full=True,
                                     include_trivial=True)
    items = [s.members for s in found.items]
    if allow_empty:
        items = [()] + items
    return items, found.complete


def enumerate_n_substructures(ns: NStructure, per_component_species,
                              require_nonempty_all: bool = True,
                              cap: int = DEFAULT_COMBINATION_CAP):
    """Cartesian combinations of per-component substructures.

    Excludes the all-full combination (not a proper subset) and, when
    require_nonempty_all is set, any combination with an empty component."""
    if len(per_component_species) != ns.n:
        raise ParameterError("one species per component is required")
    cands = []
    complete = True
    for comp, species in zip(ns.components, per_component_species):
        items, comp_complete = _component_candidates(
            comp, species, allow_empty=not require_nonempty_all)
        cands.append(items)
        complete = complete and comp_complete
    total = 1
    for c in cands:
        total *= max(len(c), 1)
        if total > cap:
            raise ResourceLimitError(
                f"combination count exceeds the {cap} guard")
    out = []
    fulls = tuple(tuple(range(c.order)) for c in ns.components)
    for combo in product(*cands):
        if combo == fulls:
            continue
        if require_nonempty_all and any(not c for c in combo):
            continue
        if not any(combo):
            continue
        out.append(NSubset(ns, combo))
    return out, complete


def n_subset_is_produced(ns: NStructure, candidate: NSubset,
                         per_component_species,
                         require_nonempty_all: bool = True) -> bool:
    """Whether the cartesian enumeration would emit this NSubset: membership
    decomposes componentwise, so no product is materialized."""
    if len(per_component_species) != ns.n:
        raise ParameterError("one species per component is required")
    fulls = tuple(tuple(range(c.order)) for c in ns.components)
    if candidate.per_component == fulls:
        return False
    if not any(candidate.per_component):
        return False
    for comp, mem, species in zip(ns.components, candidate.per_component,
                                  per_component_species):
        if not mem:
            if require_nonempty_all:
                return False
            continue
        items, _ = _component_candidates(comp, species, allow_empty=False)
        if mem not in items:
            return False
    return True


def n_lagrange(ns: NStructure, per_component_species,
               require_nonempty_all: bool = True) -> ClassReport:
    """The Lagrange engine on N-subsets: order sums against the union order."""
    subs, complete = enumerate_n_substructures(ns, per_component_species,
                                               require_nonempty_all)
    total = ns.order
    wits = tuple(_n_witness(p, total % p.order == 0) for p in subs)
    if not wits:
        verdict = Verdict3.VACUOUS
    elif all(w.qualifies for w in wits):
        verdict = Verdict3.FULL
    elif any(w.qualifies for w in wits):
        verdict = Verdict3.WEAK
    else:
        verdict = Verdict3.FREE
    return ClassReport(verdict, wits, _species_names(per_component_species), complete)


@dataclass(frozen=True)
class NWitness:
    subset: NSubset
    order: int
    qualifies: bool


def _n_witness(p: NSubset, q: bool) -> NWitness:
    return NWitness(p, p.order, q)


def _species_names(species_list):
    return "[" + ", ".join(predicate_name(s) for s in species_list) + "]"


def n_sylow(ns: NStructure, per_component_species, variant: str = "standard",
            require_nonempty_all: bool = True) -> ClassReport:
    """Seek N-subsets of total order p^a for each prime p with p^a exactly
    dividing the union order."""
    subs, complete = enumerate_n_substructures(ns, per_component_species,
                                               require_nonempty_all)
    targets = _sylow_targets(ns.order, variant)
    by_size = {}
    for p in subs:
        by_size.setdefault(p.order, []).append(p)
    wits = []
    notes = []
    served = {}
    for p, sizes in sorted(targets.items()):
        hit = None
        for size in sorted(sizes):
            if size >= ns.order:
                notes.append(f"p={p}: sought order {size} is not proper; skipped")
                continue
            if size in by_size:
                hit = by_size[size][0]
                break
        served[p] = hit is not None
        if hit is not None:
            wits.append(_n_witness(hit, True))
    if not subs:
        verdict = Verdict3.VACUOUS
    elif targets and all(served.values()):
        verdict = Verdict3.FULL
    elif any(served.values()):
        verdict = Verdict3.WEAK
    else:
        verdict = Verdict3.FREE
    return ClassReport(verdict, tuple(wits), _species_names(per_component_species),
                       complete, tuple(notes))


def n_cauchy(ns: NStructure) -> CauchyReport:
    """Element orders are taken inside each component (to its identity and
    neutrosophic identity); divisibility is against the union order."""
    from .classify import ElementWitness
    denom = ns.order
    wits = []
    notes = []
    for ci, comp in enumerate(ns.components):
        for x in range(comp.order):
            orders = element_orders(comp, x)
            if comp.identity is not None and x != comp.identity \
                    and orders.real_order is not None:
                wits.append(ElementWitness((ci, x), "real", orders.real_order,
                                           denom % orders.real_order == 0))
            if comp.neutro_identity is not None and x != comp.neutro_identity \
                    and orders.neutro_order is not None:
                wits.append(ElementWitness((ci, x), "neutro", orders.neutro_order,
                                           denom % orders.neutro_order == 0))
        if comp.identity is None:
            notes.append(f"component {ci}: no identity, real orders skipped")
    return CauchyReport(_cauchy_verdict(wits), tuple(wits), True, tuple(notes))


@dataclass(frozen=True)
class TupleSylowReport:
    found: bool
    witness: Optional[NSubset]
    primes: tuple


def tuple_sylow(ns: NStructure, primes, per_component_species,
                within: Optional[NSubset] = None) -> TupleSylowReport:
    """A component-local Sylow tuple: for each i, a species subset of
    component i of order p_i^a_i where p_i^a_i exactly divides the ambient
    component order (the whole component, or within's component)."""
    if len(primes) != ns.n:
        raise ParameterError("one prime per component is required")
    if len(per_component_species) != ns.n:
        raise ParameterError("one species per component is required")
    choices = []
    for i, (comp, p, species) in enumerate(zip(ns.components, primes,
                                               per_component_species)):
        ambient = tuple(range(comp.order)) if within is None \
            else within.per_component[i]
        if not ambient:
            return TupleSylowReport(False, None, tuple(primes))
        alpha = 0
        size = len(ambient)
        while size % p == 0:
            size //= p
            alpha += 1
        if alpha == 0:
            return TupleSylowReport(False, None, tuple(primes))
        target = p ** alpha
        sub = submagma(comp, ambient)
        found = enumerate_closed_subsets(sub, species,
                                         include_full=True, include_trivial=True)
        hit = None
        for s in found.items:
            if len(s) == target:
                hit = tuple(ambient[j] for j in s.members)
                break
        if hit is None:
            return TupleSylowReport(False, None, tuple(primes))
        choices.append(hit)
    return TupleSylowReport(True, NSubset(ns, choices), tuple(primes))


def deficit_substructures(ns: NStructure, t: int, per_component_species,
                          cap: int = DEFAULT_COMBINATION_CAP):
    """N-subsets with exactly N - t non-empty components."""
    if not (1 <= t < ns.n):
        raise ParameterError(f"deficit t must satisfy 1 <= t < {ns.n}, got {t}")
    keep = ns.n - t
    out = []
    for live in combinations(range(ns.n), keep):
        cands = []
        total = 1
        for i in range(ns.n):
            if i in live:
                items, _ = _component_candidates(ns.components[i],
                                                 per_component_species[i], False)
            else:
                items = [()]
            cands.append(items)
            total *= max(len(items), 1)
            if total > cap:
                raise ResourceLimitError(f"combination count exceeds the {cap} guard")
        for combo in product(*cands):
            if all(combo[i] for i in live):
                out.append(NSubset(ns, combo))
    return out


def n_coset(ns: NStructure, h: NSubset, a) -> NSubset:
    """Right-translate the component containing a; other components pass
    through unchanged."""
    ci, ei = a
    if not (0 <= ci < ns.n):
        raise ParameterError("component index out of range")
    comp = ns.components[ci]
    if not (0 <= ei < comp.order):
        raise ParameterError("element index out of range")
    parts = list(h.per_component)
    parts[ci] = tuple(sorted({comp.table[x][ei] for x in parts[ci]}))
    return NSubset(ns, parts)


def n_homomorphism_check(maps: Sequence[PartialMap]) -> bool:
    """Every componentwise partial map is a homomorphism (with the
    neutrosophic-identity clause where applicable)."""
    if not maps:
        raise ParameterError("no component maps given")
    return all(check_homomorphism(f) for f in maps)
