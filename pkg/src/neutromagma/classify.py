"""Smarandache detection and the uniform Lagrange / Sylow / Cauchy engines.

The source text restates the Lagrange, Sylow and Cauchy notions separately
for each structure kind with identical logic; here each is one engine
parameterized by the substructure species to search.
"""

from __future__ import annotations

from dataclasses import dataclass
from enum import Enum
from typing import Optional

from .constructors import factorize
from .magma import (CustomPredicate, FiniteMagma, IdentityLaw,
                    PreconditionError, Subset, SubsetPredicate,
                    check_identity_law, classify_basic, cosets,
                    element_orders, enumerate_closed_subsets,
                    generated_closure, is_closed, predicate_name,
                    subset_is_semigroup)
from .neutro import (is_neutro_subsemigroup, is_neutrosophic_subgroup,
                     is_pseudo_neutrosophic_subgroup)


class SKind(Enum):
    S_SEMIGROUP = "s_semigroup"
    S_LOOP = "s_loop"
    S_GROUPOID = "s_groupoid"
    S_NEUTROSOPHIC_GROUP = "s_neutrosophic_group"
    STRONG_S_NEUTROSOPHIC_GROUP = "strong_s_neutrosophic_group"
    S_NEUTROSOPHIC_SEMIGROUP = "s_neutrosophic_semigroup"
    S_NEUTROSOPHIC_LOOP = "s_neutrosophic_loop"
    S_NEUTROSOPHIC_GROUPOID = "s_neutrosophic_groupoid"


class Verdict3(Enum):
    FULL = "full"
    WEAK = "weak"
    FREE = "free"
    VACUOUS = "vacuous"


# witness species per variant: the richer structure a proper subset must form
_WITNESS_SPECIES = {
    SKind.S_SEMIGROUP: SubsetPredicate.IS_GROUP,
    SKind.S_LOOP: SubsetPredicate.IS_GROUP,
    SKind.S_GROUPOID: SubsetPredicate.IS_SEMIGROUP,
    SKind.S_NEUTROSOPHIC_GROUP: SubsetPredicate.IS_PSEUDO_NEUTROSOPHIC_SUBGROUP,
    SKind.STRONG_S_NEUTROSOPHIC_GROUP: SubsetPredicate.IS_NEUTROSOPHIC_SUBGROUP,
    SKind.S_NEUTROSOPHIC_SEMIGROUP: SubsetPredicate.IS_GROUP,
    SKind.S_NEUTROSOPHIC_LOOP: SubsetPredicate.IS_NEUTROSOPHIC_SUBGROUP,
    SKind.S_NEUTROSOPHIC_GROUPOID: CustomPredicate(
        "neutro_subsemigroup", is_neutro_subsemigroup),
}


def _carrier_fits(m: FiniteMagma, kind: SKind) -> bool:
    if kind is SKind.S_SEMIGROUP:
        return check_identity_law(m, IdentityLaw.ASSOCIATIVE).holds
    if kind is SKind.S_LOOP:
        return classify_basic(m).is_loop
    if kind is SKind.S_NEUTROSOPHIC_SEMIGROUP:
        return (check_identity_law(m, IdentityLaw.ASSOCIATIVE).holds
                and m.has_neutro())
    return True


@dataclass(frozen=True)
class SDetection:
    holds: bool
    witness: Optional[Subset]
    complete: bool        # False when a bounded search found nothing


def detect_s_kind(m: FiniteMagma, kind: SKind) -> SDetection:
    """Search for the variant's witness substructure; returns the
    lexicographically first witness.  holds=False with complete=False is
    inconclusive (bounded search)."""
    if kind in (SKind.S_NEUTROSOPHIC_GROUP, SKind.STRONG_S_NEUTROSOPHIC_GROUP,
                SKind.S_NEUTROSOPHIC_LOOP, SKind.S_NEUTROSOPHIC_GROUPOID):
        if not m.has_neutro():
            return SDetection(False, None, True)
    if not _carrier_fits(m, kind):
        return SDetection(False, None, True)
    found = enumerate_closed_subsets(m, _WITNESS_SPECIES[kind])
    if found.items:
        return SDetection(True, found.items[0], found.complete)
    return SDetection(False, None, found.complete)


# ---------------------------------------------------------------------------
# the three classification engines

@dataclass(frozen=True)
class Witness:
    subset: Subset
    order: int
    qualifies: bool


@dataclass(frozen=True)
class ClassReport:
    verdict: Verdict3
    witnesses: tuple
    searched_species: str
    complete: bool
    notes: tuple = ()

    def to_dict(self):
        return {
            "verdict": self.verdict.value,
            "complete": self.complete,
            "witnesses": [
                {"members": list(w.subset.members), "order": w.order,
                 "qualifies": w.qualifies}
                for w in self.witnesses],
        }


def lagrange_classify(m: FiniteMagma, species) -> ClassReport:
    """Full / Weak / Free / Vacuous according to whether every / some / no
    species substructure has order dividing o(m)."""
    found = enumerate_closed_subsets(m, species)
    wits = tuple(Witness(s, len(s), m.order % len(s) == 0) for s in found)
    if not wits:
        verdict = Verdict3.VACUOUS
    elif all(w.qualifies for w in wits):
        verdict = Verdict3.FULL
    elif any(w.qualifies for w in wits):
        verdict = Verdict3.WEAK
    else:
        verdict = Verdict3.FREE
    return ClassReport(verdict, wits, predicate_name(species), found.complete)


def _sylow_targets(order: int, variant: str):
    """prime -> set of sought substructure orders."""
    targets = {}
    for p, alpha in factorize(order):
        if variant == "standard":
            targets[p] = {p ** alpha}
        elif variant == "super":
            t = set()
            v = p ** (alpha + 1)
            while v < order:
                t.add(v)
                v *= p
            targets[p] = t
        elif variant == "semi":
            targets[p] = {p ** t for t in range(1, alpha)}
        else:
            raise PreconditionError(f"unknown sylow variant {variant!r}")
    return targets


def sylow_classify(m: FiniteMagma, species, variant: str = "standard") -> ClassReport:
    """For each prime p with p^a exactly dividing o(m), seek a species
    substructure of order p^a (standard), p^(a+t) (super) or p^t, t < a
    (semi).  Full if every prime is served, Weak if at least one, Free if
    none; Vacuous when no species substructure exists at all."""
    if m.order < 2:
        raise PreconditionError("sylow classification needs order >= 2")
    found = enumerate_closed_subsets(m, species)
    targets = _sylow_targets(m.order, variant)
    by_size = {}
    for s in found:
        by_size.setdefault(len(s), []).append(s)
    wits = []
    notes = []
    served = {}
    for p, sizes in sorted(targets.items()):
        hit = None
        for size in sorted(sizes):
            if size >= m.order:
                notes.append(f"p={p}: sought order {size} is not proper; skipped")
                continue
            if size in by_size:
                hit = by_size[size][0]
                break
        served[p] = hit is not None
        if hit is not None:
            wits.append(Witness(hit, len(hit), True))
    if not found.items:
        verdict = Verdict3.VACUOUS
    elif targets and all(served.values()):
        verdict = Verdict3.FULL
    elif any(served.values()):
        verdict = Verdict3.WEAK
    else:
        verdict = Verdict3.FREE
    return ClassReport(verdict, tuple(wits), predicate_name(species),
                       found.complete, tuple(notes))


@dataclass(frozen=True)
class ElementWitness:
    index: int
    flavor: str          # "real" or "neutro"
    order: int
    qualifies: bool


@dataclass(frozen=True)
class CauchyReport:
    verdict: Verdict3
    witnesses: tuple
    complete: bool
    notes: tuple = ()

    def to_dict(self):
        return {
            "verdict": self.verdict.value,
            "complete": self.complete,
            "witnesses": [
                {"members": [w.index], "order": w.order, "qualifies": w.qualifies,
                 "flavor": w.flavor}
                for w in self.witnesses],
        }


def _cauchy_witnesses(m: FiniteMagma, denom: int):
    """Element torsion witnesses; trivial identities are not torsion."""
    wits = []
    notes = []
    if m.identity is None:
        notes.append("no identity: real orders skipped")
    if m.neutro_identity is None and m.has_neutro():
        notes.append("no neutrosophic identity: neutrosophic orders skipped")
    for x in range(m.order):
        orders = element_orders(m, x)
        if m.identity is not None and x != m.identity and orders.real_order is not None:
            wits.append(ElementWitness(x, "real", orders.real_order,
                                       denom % orders.real_order == 0))
        if (m.neutro_identity is not None and x != m.neutro_identity
                and orders.neutro_order is not None):
            wits.append(ElementWitness(x, "neutro", orders.neutro_order,
                                       denom % orders.neutro_order == 0))
    return wits, notes


def _cauchy_verdict(wits):
    if not wits:
        return Verdict3.VACUOUS
    if all(w.qualifies for w in wits):
        return Verdict3.FULL
    flavors = {w.flavor for w in wits}
    # weakly Cauchy: at least one qualifying element of each torsion flavor
    ok = all(any(w.qualifies for w in wits if w.flavor == fl) for fl in flavors)
    if ok and any(w.qualifies for w in wits):
        return Verdict3.WEAK
    return Verdict3.FREE


def cauchy_classify(m: FiniteMagma, relative_to: Optional[Subset] = None) -> CauchyReport:
    """Cauchy / Cauchy-neutrosophic element classification.

    An element is Cauchy when its order to the identity divides o(m) (or
    o(relative_to) in the relative mode), and Cauchy-neutrosophic when its
    order to the neutrosophic identity divides the same denominator."""
    denom = m.order if relative_to is None else len(relative_to)
    wits, notes = _cauchy_witnesses(m, denom)
    return CauchyReport(_cauchy_verdict(wits), tuple(wits), True, tuple(notes))


def s_identity_class(m: FiniteMagma, law: IdentityLaw, species,
                     strength: str = "strong") -> Verdict3:
    """Quantify an identity law over species substructures (never over the
    whole carrier): Full when every substructure satisfies it, Weak when at
    least one does, Free when none does, Vacuous when none exist."""
    if strength not in ("strong", "weak"):
        raise PreconditionError(f"strength must be strong or weak, got {strength!r}")
    found = enumerate_closed_subsets(m, species)
    if not found.items:
        return Verdict3.VACUOUS
    holding = sum(1 for s in found if check_identity_law(m, law, domain=s).holds)
    if holding == len(found.items):
        return Verdict3.FULL
    if holding > 0:
        return Verdict3.WEAK
    return Verdict3.FREE


# ---------------------------------------------------------------------------
# hyper subsemigroups and cosets of Smarandache species

@dataclass(frozen=True)
class HyperReport:
    largest_group: Optional[Subset]
    hyper_subsemigroup: Optional[Subset]
    s_simple: bool
    complete: bool
    notes: tuple = ()


def s_hyper_and_simple(m: FiniteMagma) -> HyperReport:
    """Largest subgroup, the smallest proper subsemigroup strictly above it,
    and the induced simplicity verdict (no hyper subsemigroup exists)."""
    if not check_identity_law(m, IdentityLaw.ASSOCIATIVE).holds:
        raise PreconditionError("hyper subsemigroups live in semigroup carriers")
    bound_ok = m.order <= _exhaustive_bound()
    if bound_ok:
        groups = enumerate_closed_subsets(m, SubsetPredicate.IS_GROUP, include_full=True)
        complete = groups.complete
        best = None
        for g in groups:
            if best is None or len(g) > len(best) or (len(g) == len(best) and g.members < best.members):
                best = g
    else:
        groups = enumerate_closed_subsets(m, SubsetPredicate.IS_GROUP)
        complete = False
        best = max(groups, key=lambda g: (len(g), tuple(-i for i in g.members)), default=None)
    if best is None:
        return HyperReport(None, None, True, complete,
                           ("no subgroup of size >= 2; trivially simple",))
    if len(best) == m.order:
        return HyperReport(best, None, True, complete,
                           ("largest group is the whole carrier; no proper superset",))
    hyper = _smallest_proper_superset_semigroup(m, best)
    return HyperReport(best, hyper, hyper is None, complete)


def _exhaustive_bound():
    from .magma import max_exhaustive_order
    return max_exhaustive_order()


def _smallest_proper_superset_semigroup(m, base: Subset):
    """Smallest proper subsemigroup strictly containing base."""
    base_set = set(base.members)
    if m.order <= _exhaustive_bound():
        candidates = enumerate_closed_subsets(m, SubsetPredicate.IS_SEMIGROUP)
        best = None
        for s in candidates:
            if base_set < set(s.members):
                if best is None or (len(s), s.members) < (len(best), best.members):
                    best = s
        return best
    # bounded: grow the base by up to two extra generators
    best = None
    outside = [x for x in range(m.order) if x not in base_set]
    seeds = [[x] for x in outside] + [[x, y] for i, x in enumerate(outside)
                                      for y in outside[i + 1:]]
    for extra in seeds:
        c = generated_closure(m, list(base.members) + extra)
        if len(c) == m.order or not subset_is_semigroup(c):
            continue
        if best is None or (len(c), c.members) < (len(best), best.members):
            best = c
    return best


def s_cosets(m: FiniteMagma, h: Subset, a: int, flavor: str = "plain") -> Subset:
    """Right translate of an S-species subset; the flavor names which coset
    species is being formed and enforces its precondition."""
    if flavor == "plain":
        if not (is_neutrosophic_subgroup(h) or is_closed(h)):
            raise PreconditionError(
                "plain S-coset needs a neutrosophic subgroup or a closed subset")
    elif flavor == "pseudo":
        if not is_pseudo_neutrosophic_subgroup(h):
            raise PreconditionError(
                "pseudo S-coset needs a pseudo neutrosophic subgroup")
    else:
        raise PreconditionError(f"unknown coset flavor {flavor!r}")
    return cosets(m, h, a, "right")
