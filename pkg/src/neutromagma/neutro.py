"""Neutrosophic extensions of finite magmas.

Two carriers realize <S u I>: the tagged doubling {x, xI} of an arbitrary
base magma, and residue carriers over Z_n built from elements a + bI with
I^2 = I, so (a+bI)(c+dI) = ac + (ad+bc+bd)I mod n.  The line carrier keeps
only reals and pure I-multiples, identifying 0I with 0.
"""

from __future__ import annotations

from dataclasses import dataclass

from .magma import (CustomPredicate, FiniteMagma, ParameterError,
                    PreconditionError, Subset, SubsetPredicate,
                    PREDICATE_REGISTRY, enumerate_closed_subsets, is_closed,
                    local_identity, subset_is_group, subset_is_semigroup)


@dataclass(frozen=True)
class NeutroResidue:
    """A residue pair a + bI over Z_n; neutrosophic iff b != 0."""
    a: int
    b: int

    def mul(self, other: "NeutroResidue", n: int) -> "NeutroResidue":
        # I^2 = I: (a+bI)(c+dI) = ac + (ad+bc+bd)I
        return NeutroResidue((self.a * other.a) % n,
                             (self.a * other.b + self.b * other.a + self.b * other.b) % n)

    def label(self) -> str:
        a, b = self.a, self.b
        if b == 0:
            return str(a)
        istr = "I" if b == 1 else f"{b}I"
        return istr if a == 0 else f"{a}+{istr}"


def extend_tagged(base: FiniteMagma) -> FiniteMagma:
    """The doubled carrier {x, xI}: untagged products follow the base table
    and any product with a tagged operand is the base product, tagged."""
    k = base.order
    table = [[0] * (2 * k) for _ in range(2 * k)]
    for x in range(k):
        for y in range(k):
            v = base.table[x][y]
            table[x][y] = v
            table[x][y + k] = v + k
            table[x + k][y] = v + k
            table[x + k][y + k] = v + k
    labels = list(base.labels) + [l + "I" for l in base.labels]
    mask = [False] * k + [True] * k
    e = base.identity
    return FiniteMagma(
        table, labels=labels, identity=e,
        neutro_mask=mask, neutro_identity=(e + k) if e is not None else None,
        kind_tag=f"tagged({base.kind_tag})")


def zn_full_neutro(n: int) -> FiniteMagma:
    """The full multiplicative carrier {a + bI : a, b in Z_n} of order n^2."""
    if n < 2:
        raise ParameterError("residue carrier needs n >= 2")
    elems = [NeutroResidue(a, b) for a in range(n) for b in range(n)]
    index = {(r.a, r.b): i for i, r in enumerate(elems)}
    table = [[index[(p := x.mul(y, n)).a, p.b] for y in elems] for x in elems]
    return FiniteMagma(
        table, labels=[r.label() for r in elems],
        identity=index[(1 % n, 0)],
        neutro_mask=[r.b != 0 for r in elems],
        neutro_identity=index[(0, 1)],
        kind_tag=f"zn_full_neutro({n})")


def _line_elems(n: int):
    return [NeutroResidue(a, 0) for a in range(n)] + \
           [NeutroResidue(0, b) for b in range(1, n)]


def zn_line_neutro(n: int) -> FiniteMagma:
    """The order 2n-1 carrier {0, 1, ..., n-1, I, 2I, ..., (n-1)I}; the
    identification 0I = 0 keeps it closed under the residue product."""
    if n < 2:
        raise ParameterError("residue carrier needs n >= 2")
    elems = _line_elems(n)
    index = {(r.a, r.b): i for i, r in enumerate(elems)}
    table = [[index[(p := x.mul(y, n)).a, p.b] for y in elems] for x in elems]
    return FiniteMagma(
        table, labels=[r.label() for r in elems],
        identity=index[(1 % n, 0)],
        neutro_mask=[r.b != 0 for r in elems],
        neutro_identity=index[(0, 1)],
        kind_tag=f"zn_line_neutro({n})")


def zn_units_neutro(n: int) -> FiniteMagma:
    """The zero-free line carrier {1..n-1, I..(n-1)I}, closed only for prime n."""
    if n < 2:
        raise ParameterError("residue carrier needs n >= 2")
    for d in range(2, n):
        if n % d == 0:
            raise ParameterError(f"zero-free carrier needs a prime modulus, got {n}")
    elems = [NeutroResidue(a, 0) for a in range(1, n)] + \
            [NeutroResidue(0, b) for b in range(1, n)]
    index = {(r.a, r.b): i for i, r in enumerate(elems)}
    table = [[index[(p := x.mul(y, n)).a, p.b] for y in elems] for x in elems]
    return FiniteMagma(
        table, labels=[r.label() for r in elems],
        identity=index[(1, 0)],
        neutro_mask=[r.b != 0 for r in elems],
        neutro_identity=index[(0, 1)],
        kind_tag=f"zn_units_neutro({n})")


def zn_affine_neutro(n: int, t: int, u: int) -> FiniteMagma:
    """The groupoid (a+bI) * (c+dI) = t(a+bI) + u(c+dI) on the full carrier."""
    if n < 2:
        raise ParameterError("residue carrier needs n >= 2")
    elems = [NeutroResidue(a, b) for a in range(n) for b in range(n)]
    index = {(r.a, r.b): i for i, r in enumerate(elems)}
    table = [[index[((t * x.a + u * y.a) % n, (t * x.b + u * y.b) % n)]
              for y in elems] for x in elems]
    return FiniteMagma(
        table, labels=[r.label() for r in elems],
        neutro_mask=[r.b != 0 for r in elems],
        neutro_identity=index[(0, 1)],
        kind_tag=f"zn_affine_neutro({n},{t},{u})")


# ---------------------------------------------------------------------------
# neutrosophic subset species

def is_neutrosophic_subset(s: Subset) -> bool:
    mask = s.parent.neutro_mask
    return any(mask[i] for i in s.members)


def real_part(s: Subset):
    mask = s.parent.neutro_mask
    return [i for i in s.members if not mask[i]]


def has_real_subgroup(s: Subset) -> bool:
    """Some subset of the purely-real members forms a group of size >= 2."""
    reals = real_part(s)
    if len(reals) < 2:
        return False
    m = s.parent
    # direct scan over subsets of the real part (it is tiny in practice)
    from itertools import combinations
    for size in range(2, len(reals) + 1):
        for cand in combinations(reals, size):
            if subset_is_group(Subset(m, cand)):
                return True
    return False


def is_neutrosophic_subgroup(s: Subset) -> bool:
    """Closed, carries an indeterminate element, and contains a purely-real
    group of size >= 2 under the induced operation."""
    if len(s) < 2 or not is_closed(s) or not is_neutrosophic_subset(s):
        return False
    return has_real_subgroup(s)


def is_pseudo_neutrosophic_subgroup(s: Subset) -> bool:
    """Closed neutrosophic subset with an internal two-sided identity and no
    purely-real group of size >= 2 (operational reading)."""
    if len(s) < 2 or not is_closed(s) or not is_neutrosophic_subset(s):
        return False
    if local_identity(s) is None:
        return False
    return not has_real_subgroup(s)


def is_s_neutrosophic_subsemigroup(s: Subset) -> bool:
    """Closed neutrosophic subset containing a purely-real group of size >= 2
    (the witness species behind the per-chapter 'S-neutrosophic sub' notions)."""
    if len(s) < 2 or not is_closed(s) or not is_neutrosophic_subset(s):
        return False
    return has_real_subgroup(s)


def is_neutro_subsemigroup(s: Subset) -> bool:
    """Closed, neutrosophic, associative under the induced operation."""
    return is_neutrosophic_subset(s) and subset_is_semigroup(s)


def is_neutro_unital(s: Subset) -> bool:
    """Closed neutrosophic subset with an internal identity (the weakest
    'neutrosophic group' reading, admitting carriers like {1, I})."""
    return is_closed(s) and is_neutrosophic_subset(s) and local_identity(s) is not None


def is_s_neutrosophic_subloop(s: Subset) -> bool:
    """In a tagged doubling: s = P u PI with P a subloop of the untagged part
    containing a group of size >= 2 (the subloop species of the doubled
    carriers, symmetric between the real and tagged halves)."""
    m = s.parent
    reals = real_part(s)
    if len(reals) < 2:
        return False
    tagged = [i for i in s.members if m.neutro_mask[i]]
    half = m.order // 2
    # doubled carriers pair index i with i + half
    if sorted(i + half for i in reals) != sorted(tagged):
        return False
    from .magma import subset_is_loop
    p = Subset(m, reals)
    return is_closed(s) and subset_is_loop(p) and has_real_subgroup(s)


PREDICATE_REGISTRY[SubsetPredicate.IS_NEUTROSOPHIC_SUBGROUP] = is_neutrosophic_subgroup
PREDICATE_REGISTRY[SubsetPredicate.IS_PSEUDO_NEUTROSOPHIC_SUBGROUP] = is_pseudo_neutrosophic_subgroup
PREDICATE_REGISTRY[SubsetPredicate.IS_S_NEUTROSOPHIC_SUB] = is_s_neutrosophic_subsemigroup


def _register_ideals():
    from .magma import is_ideal
    PREDICATE_REGISTRY[SubsetPredicate.IS_IDEAL] = lambda s: is_ideal(s.parent, s, "two_sided")
    PREDICATE_REGISTRY[SubsetPredicate.IS_LEFT_IDEAL] = lambda s: is_ideal(s.parent, s, "left")
    PREDICATE_REGISTRY[SubsetPredicate.IS_RIGHT_IDEAL] = lambda s: is_ideal(s.parent, s, "right")


_register_ideals()


NEUTRO_UNITAL = CustomPredicate("neutro_unital", is_neutro_unital)
NEUTRO_SUBSEMIGROUP = CustomPredicate("neutro_subsemigroup", is_neutro_subsemigroup)


def group_or_s_subsemigroup(s: Subset) -> bool:
    """A group, or a semigroup that properly contains a purely-real group of
    size >= 2 without being a group itself."""
    if subset_is_group(s):
        return True
    return subset_is_semigroup(s) and has_real_subgroup(s)


GROUP_OR_S_SUBSEMIGROUP = CustomPredicate("group_or_s_subsemigroup", group_or_s_subsemigroup)
NEUTRO_UNITAL_OR_SUBGROUP = CustomPredicate(
    "neutro_unital_or_subgroup", lambda s: is_neutro_unital(s) or subset_is_group(s))
S_NEUTRO_SUBLOOP = CustomPredicate("s_neutrosophic_subloop", is_s_neutrosophic_subloop)


# ---------------------------------------------------------------------------
# neutrosophic ideals

def _is_semigroup_carrier(m: FiniteMagma) -> bool:
    from .magma import IdentityLaw, check_identity_law
    return check_identity_law(m, IdentityLaw.ASSOCIATIVE).holds


def _absorbs(m: FiniteMagma, members) -> bool:
    t = m.table
    mem = set(members)
    return all(t[x][a] in mem and t[a][x] in mem
               for x in range(m.order) for a in mem)


def _plain_neutro_ideal(m: FiniteMagma, s: Subset) -> bool:
    return (is_neutrosophic_subset(s) and is_closed(s) and _absorbs(m, s.members))


def ideal_closure(m: FiniteMagma, g: int):
    """Smallest two-sided absorptive closed set containing g."""
    t = m.table
    seen = {g}
    work = [g]
    while work:
        a = work.pop()
        for x in range(m.order):
            for v in (t[x][a], t[a][x]):
                if v not in seen:
                    seen.add(v)
                    work.append(v)
    return tuple(sorted(seen))


def neutrosophic_ideal_check(s: Subset, mode: str = "plain") -> bool:
    """Neutrosophic ideal tests on a semigroup carrier.

    plain: neutrosophic, closed, absorbs two-sidedly.  maximal / minimal
    quantify over all neutrosophic ideals (exhaustive enumeration only).
    principal: s is the two-sided absorptive closure of one of its elements.
    """
    m = s.parent
    if not _is_semigroup_carrier(m):
        raise PreconditionError("neutrosophic ideals are defined on semigroup carriers")
    if mode == "plain":
        return _plain_neutro_ideal(m, s)
    if mode == "principal":
        if not _plain_neutro_ideal(m, s):
            return False
        return any(ideal_closure(m, g) == s.members for g in s.members)
    if mode in ("maximal", "minimal"):
        if not _plain_neutro_ideal(m, s):
            return False
        found = enumerate_closed_subsets(
            m, CustomPredicate("neutro_ideal", lambda x: _plain_neutro_ideal(m, x)))
        if not found.complete:
            from .magma import ResourceLimitError
            raise ResourceLimitError(
                "maximal/minimal ideal tests need the exhaustive enumeration path")
        mem = set(s.members)
        if mode == "maximal":
            return not any(mem < set(j.members) for j in found)
        return not any(set(j.members) < mem for j in found)
    raise ParameterError(f"unknown ideal mode {mode!r}")
