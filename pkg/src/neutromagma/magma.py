"""Finite magma core: Cayley tables, subsets, identity laws and substructure search.

Every structure in the library (loop, groupoid, semigroup, neutrosophic
extension) is normalized to a FiniteMagma: an immutable k x k table of
element indices with a label per index.  All searches scan lexicographically
and all set-valued results are returned sorted, so first-witness semantics
are reproducible across runs.
"""

from __future__ import annotations

import os
from dataclasses import dataclass
from enum import Enum
from itertools import combinations
from typing import Callable, Iterable, Optional, Sequence


class ParameterError(ValueError):
    """Invalid construction or call parameters."""


class PreconditionError(ValueError):
    """An operation's structural precondition does not hold."""


class ResourceLimitError(RuntimeError):
    """A search exceeded an explicit size guard."""


DEFAULT_MAX_EXHAUSTIVE = 16
DEFAULT_MAX_GENERATORS = 3
ENV_MAX_EXHAUSTIVE = "NEUTROMAGMA_MAX_EXHAUSTIVE"


def max_exhaustive_order() -> int:
    """Power-set scan bound; overridable via NEUTROMAGMA_MAX_EXHAUSTIVE."""
    raw = os.environ.get(ENV_MAX_EXHAUSTIVE)
    if raw is None:
        return DEFAULT_MAX_EXHAUSTIVE
    try:
        return int(raw)
    except ValueError:
        raise ParameterError(f"{ENV_MAX_EXHAUSTIVE} must be an integer, got {raw!r}")


class FiniteMagma:
    """Immutable Cayley table over an indexed, labeled universe.

    table[x][y] is the index of x*y.  `identity` is the two-sided identity
    index or None.  `neutro_mask[i]` marks elements carrying an indeterminate
    component; `neutro_identity` is the designated element playing the role
    of I (eI in tagged extensions, 0+1I in residue carriers).
    """

    __slots__ = ("order", "table", "labels", "identity", "neutro_mask",
                 "neutro_identity", "kind_tag", "_label_index",
                 "_left_div", "_right_div", "_subset_cache")

    def __init__(self, table, labels=None, identity="auto", neutro_mask=None,
                 neutro_identity=None, kind_tag=""):
        k = len(table)
        if k == 0:
            raise ParameterError("empty table")
        self.order = k
        self.table = tuple(tuple(row) for row in table)
        for row in self.table:
            if len(row) != k:
                raise ParameterError("table is not square")
            for v in row:
                if not (0 <= v < k):
                    raise ParameterError(f"table entry {v} out of range [0,{k})")
        if labels is None:
            labels = [str(i) for i in range(k)]
        self.labels = tuple(str(l) for l in labels)
        if len(self.labels) != k:
            raise ParameterError("label count does not match order")
        if len(set(self.labels)) != k:
            raise ParameterError("labels are not pairwise distinct")
        if identity == "auto":
            identity = _find_identity(self.table)
        if identity is not None:
            e = identity
            if not (0 <= e < k):
                raise ParameterError("identity index out of range")
            for x in range(k):
                if self.table[e][x] != x or self.table[x][e] != x:
                    raise ParameterError(f"declared identity {e} fails at element {x}")
        self.identity = identity
        if neutro_mask is None:
            neutro_mask = [False] * k
        self.neutro_mask = tuple(bool(b) for b in neutro_mask)
        if len(self.neutro_mask) != k:
            raise ParameterError("neutro_mask length does not match order")
        if neutro_identity is not None:
            if not (0 <= neutro_identity < k):
                raise ParameterError("neutro_identity index out of range")
            if not self.neutro_mask[neutro_identity]:
                raise ParameterError("neutro_identity must have neutro_mask set")
        self.neutro_identity = neutro_identity
        self.kind_tag = kind_tag
        self._label_index = {l: i for i, l in enumerate(self.labels)}
        self._left_div = None
        self._right_div = None
        self._subset_cache = {}   # pure memo of raw closed-subset candidates

    def op(self, x: int, y: int) -> int:
        if not (0 <= x < self.order and 0 <= y < self.order):
            raise ParameterError(f"index out of range: op({x},{y}) on order {self.order}")
        return self.table[x][y]

    def index(self, label: str) -> int:
        try:
            return self._label_index[label]
        except KeyError:
            raise ParameterError(f"no element labeled {label!r} in {self.kind_tag or 'magma'}")

    def subset(self, members: Iterable) -> "Subset":
        """Build a Subset from indices or labels."""
        idx = []
        for m in members:
            idx.append(m if isinstance(m, int) else self.index(m))
        return Subset(self, idx)

    def full_subset(self) -> "Subset":
        return Subset(self, range(self.order))

    def has_neutro(self) -> bool:
        return any(self.neutro_mask)

    def label_set(self, indices: Iterable[int]):
        return [self.labels[i] for i in indices]

    def __repr__(self):
        return f"FiniteMagma(order={self.order}, kind={self.kind_tag!r})"

    # loops: unique division
    def _divisions(self):
        if self._left_div is None:
            k = self.order
            ld = [[None] * k for _ in range(k)]
            rd = [[None] * k for _ in range(k)]
            for a in range(k):
                row = self.table[a]
                for b in range(k):
                    c = row[b]
                    ld[a][c] = b   # a * ? = c
                    rd[c][b] = a   # ? * b = c
            self._left_div = ld
            self._right_div = rd
        return self._left_div, self._right_div

    def left_division(self, a: int, c: int) -> int:
        """The unique y with a*y = c (requires the row of a to be a permutation)."""
        ld, _ = self._divisions()
        y = ld[a][c]
        if y is None:
            raise PreconditionError(f"row of {self.labels[a]} is not a permutation; division undefined")
        return y

    def right_division(self, c: int, b: int) -> int:
        """The unique x with x*b = c (requires the column of b to be a permutation)."""
        _, rd = self._divisions()
        x = rd[c][b]
        if x is None:
            raise PreconditionError(f"column of {self.labels[b]} is not a permutation; division undefined")
        return x


def _find_identity(table) -> Optional[int]:
    k = len(table)
    for e in range(k):
        if all(table[e][x] == x and table[x][e] == x for x in range(k)):
            return e
    return None


class Subset:
    """A canonical index set referencing a parent magma."""

    __slots__ = ("parent", "members")

    def __init__(self, parent: FiniteMagma, members: Iterable[int]):
        mem = sorted(set(members))
        for i in mem:
            if not (0 <= i < parent.order):
                raise ParameterError(f"subset member {i} out of range")
        self.parent = parent
        self.members = tuple(mem)

    def __len__(self):
        return len(self.members)

    def __iter__(self):
        return iter(self.members)

    def __contains__(self, i):
        return i in set(self.members)

    def __eq__(self, other):
        return (isinstance(other, Subset) and other.parent is self.parent
                and other.members == self.members)

    def __hash__(self):
        return hash((id(self.parent), self.members))

    def labels(self):
        return [self.parent.labels[i] for i in self.members]

    def __repr__(self):
        return f"Subset({{{', '.join(self.labels())}}})"


def op_apply(m: FiniteMagma, x: int, y: int) -> int:
    return m.op(x, y)


def is_closed(s: Subset) -> bool:
    t = s.parent.table
    mem = set(s.members)
    return all(t[x][y] in mem for x in mem for y in mem)


def submagma(m: FiniteMagma, members: Iterable[int], kind_tag: str = "") -> FiniteMagma:
    """The induced magma on a closed subset, reindexed; labels preserved."""
    mem = sorted(set(members))
    pos = {v: i for i, v in enumerate(mem)}
    table = []
    for x in mem:
        row = []
        for y in mem:
            v = m.table[x][y]
            if v not in pos:
                raise PreconditionError("subset is not closed; no induced magma")
            row.append(pos[v])
        table.append(row)
    nid = m.neutro_identity
    return FiniteMagma(
        table,
        labels=[m.labels[i] for i in mem],
        neutro_mask=[m.neutro_mask[i] for i in mem],
        neutro_identity=pos[nid] if nid in pos else None,
        kind_tag=kind_tag or f"sub({m.kind_tag})",
    )


# ---------------------------------------------------------------------------
# identity laws

class IdentityLaw(Enum):
    ASSOCIATIVE = "associative"
    COMMUTATIVE = "commutative"
    IDEMPOTENT = "idempotent"
    MOUFANG1 = "moufang1"
    MOUFANG2 = "moufang2"
    MOUFANG3 = "moufang3"
    BOL = "bol"
    BRUCK_IDENTITY = "bruck_identity"
    BRUCK_INVERSE = "bruck_inverse"
    WIP = "wip"
    LEFT_ALTERNATIVE = "left_alternative"
    RIGHT_ALTERNATIVE = "right_alternative"
    P_GROUPOID = "p_groupoid"


@dataclass(frozen=True)
class LawResult:
    holds: bool
    witness: Optional[tuple]   # first counterexample in lex order, or None


def _triple_laws():
    # each returns True when the instance of the law holds at (x, y, z)
    return {
        IdentityLaw.ASSOCIATIVE: lambda t, x, y, z: t[t[x][y]][z] == t[x][t[y][z]],
        IdentityLaw.MOUFANG1: lambda t, x, y, z: t[t[x][y]][t[z][x]] == t[t[x][t[y][z]]][x],
        IdentityLaw.MOUFANG2: lambda t, x, y, z: t[t[t[x][y]][z]][y] == t[x][t[y][t[z][x]]],
        IdentityLaw.MOUFANG3: lambda t, x, y, z: t[x][t[y][t[x][z]]] == t[t[t[x][y]][x]][z],
        IdentityLaw.BOL: lambda t, x, y, z: t[t[t[x][y]][z]][y] == t[x][t[t[y][z]][y]],
        IdentityLaw.BRUCK_IDENTITY: lambda t, x, y, z: t[t[x][t[y][x]]][z] == t[x][t[y][t[x][z]]],
        IdentityLaw.P_GROUPOID: lambda t, x, y, z: t[t[x][y]][x] == t[x][t[y][x]],
    }


_TRIPLE_LAWS = _triple_laws()
# alternate association of the Bruck identity left side: x((yx)z) = x(y(xz))
_BRUCK_ALTERNATE = lambda t, x, y, z: t[x][t[t[y][x]][z]] == t[x][t[y][t[x][z]]]


def two_sided_inverses(m: FiniteMagma, domain=None) -> dict:
    """Map x -> inverse for every x in domain with a two-sided inverse."""
    if m.identity is None:
        raise PreconditionError("no identity element; inverses undefined")
    e = m.identity
    dom = range(m.order) if domain is None else list(domain)
    inv = {}
    for x in dom:
        for y in range(m.order):
            if m.table[x][y] == e and m.table[y][x] == e:
                inv[x] = y
                break
    return inv


def check_identity_law(m: FiniteMagma, law: IdentityLaw, domain: Optional[Subset] = None,
                       bruck_alternate: bool = False) -> LawResult:
    """Exhaustively quantify one identity law, returning the first counterexample.

    `domain` restricts the quantifiers (default: full universe); intermediate
    products are always taken in m.  BRUCK_INVERSE and WIP require m.identity
    and two-sided inverses on the domain.
    """
    t = m.table
    dom = tuple(range(m.order)) if domain is None else tuple(domain.members)

    if law is IdentityLaw.IDEMPOTENT:
        for x in dom:
            if t[x][x] != x:
                return LawResult(False, (x,))
        return LawResult(True, None)

    if law is IdentityLaw.COMMUTATIVE:
        for x in dom:
            for y in dom:
                if t[x][y] != t[y][x]:
                    return LawResult(False, (x, y))
        return LawResult(True, None)

    if law is IdentityLaw.LEFT_ALTERNATIVE:
        for x in dom:
            for y in dom:
                if t[t[x][x]][y] != t[x][t[x][y]]:
                    return LawResult(False, (x, y))
        return LawResult(True, None)

    if law is IdentityLaw.RIGHT_ALTERNATIVE:
        for x in dom:
            for y in dom:
                if t[t[x][y]][y] != t[x][t[y][y]]:
                    return LawResult(False, (x, y))
        return LawResult(True, None)

    if law is IdentityLaw.BRUCK_INVERSE:
        inv = two_sided_inverses(m, dom)
        for x in dom:
            if x not in inv:
                raise PreconditionError(f"element {m.labels[x]} has no two-sided inverse")
        for x in dom:
            for y in dom:
                p = t[x][y]
                if p not in inv:
                    raise PreconditionError(f"element {m.labels[p]} has no two-sided inverse")
                if inv[p] != t[inv[x]][inv[y]]:
                    return LawResult(False, (x, y))
        return LawResult(True, None)

    if law is IdentityLaw.WIP:
        inv = two_sided_inverses(m, dom)
        for x in dom:
            if x not in inv:
                raise PreconditionError(f"element {m.labels[x]} has no two-sided inverse")
        e = m.identity
        for x in dom:
            for y in dom:
                for z in dom:
                    if t[t[x][y]][z] == e and t[x][t[y][z]] != e:
                        return LawResult(False, (x, y, z))
        return LawResult(True, None)

    fn = _BRUCK_ALTERNATE if (law is IdentityLaw.BRUCK_IDENTITY and bruck_alternate) \
        else _TRIPLE_LAWS[law]
    for x in dom:
        for y in dom:
            for z in dom:
                if not fn(t, x, y, z):
                    return LawResult(False, (x, y, z))
    return LawResult(True, None)


def latin_square_check(m: FiniteMagma) -> bool:
    k = m.order
    want = frozenset(range(k))
    for row in m.table:
        if frozenset(row) != want:
            return False
    for c in range(k):
        if frozenset(m.table[r][c] for r in range(k)) != want:
            return False
    return True


@dataclass(frozen=True)
class BasicReport:
    is_semigroup: bool
    is_commutative: bool
    is_loop: bool
    is_group: bool
    identity: Optional[int]
    inverses_exist: bool


def classify_basic(m: FiniteMagma) -> BasicReport:
    assoc = check_identity_law(m, IdentityLaw.ASSOCIATIVE).holds
    comm = check_identity_law(m, IdentityLaw.COMMUTATIVE).holds
    e = m.identity if m.identity is not None else _find_identity(m.table)
    latin = latin_square_check(m)
    loop = latin and e is not None
    inverses = False
    if e is not None:
        inverses = len(two_sided_inverses(m)) == m.order
    return BasicReport(
        is_semigroup=assoc,
        is_commutative=comm,
        is_loop=loop,
        is_group=loop and assoc,
        identity=e,
        inverses_exist=inverses,
    )


# ---------------------------------------------------------------------------
# substructure machinery

def generated_closure(m: FiniteMagma, gens: Sequence[int]) -> Subset:
    """Least superset of gens closed under the operation (worklist saturation)."""
    if not gens:
        raise ParameterError("generator list is empty")
    t = m.table
    seen = set()
    work = list(dict.fromkeys(gens))
    for g in work:
        if not (0 <= g < m.order):
            raise ParameterError(f"generator {g} out of range")
    while work:
        x = work.pop()
        if x in seen:
            continue
        seen.add(x)
        for y in list(seen):
            for v in (t[x][y], t[y][x]):
                if v not in seen:
                    work.append(v)
    return Subset(m, seen)


class SubsetPredicate(Enum):
    """Uniform handle for the per-chapter substructure species."""
    IS_GROUP = "group"
    IS_SEMIGROUP = "semigroup"
    IS_LOOP = "loop"
    IS_SUBGROUPOID = "subgroupoid"
    IS_NEUTROSOPHIC_SUBGROUP = "neutrosophic_subgroup"
    IS_PSEUDO_NEUTROSOPHIC_SUBGROUP = "pseudo_neutrosophic_subgroup"
    IS_S_NEUTROSOPHIC_SUB = "s_neutrosophic_sub"
    IS_IDEAL = "ideal"
    IS_LEFT_IDEAL = "left_ideal"
    IS_RIGHT_IDEAL = "right_ideal"


@dataclass(frozen=True)
class CustomPredicate:
    """A named subset predicate; usable anywhere a SubsetPredicate is."""
    name: str
    fn: Callable[[Subset], bool]


# variant -> callable(Subset) -> bool; neutrosophic entries registered by neutro.py
PREDICATE_REGISTRY: dict = {}


def local_identity(s: Subset) -> Optional[int]:
    """Two-sided identity of the induced operation on s, if any."""
    t = s.parent.table
    mem = s.members
    for e in mem:
        if all(t[e][x] == x and t[x][e] == x for x in mem):
            return e
    return None


def subset_is_group(s: Subset) -> bool:
    """Closed, |s| >= 2, associative with identity and inverses inside s.

    Trivial one-element groups never witness a Smarandache property
    ("the identity element alone is never taken as a proper subgroup").
    """
    if len(s) < 2 or not is_closed(s):
        return False
    t = s.parent.table
    mem = s.members
    e = local_identity(s)
    if e is None:
        return False
    ms = set(mem)
    for x in mem:
        if not any(t[x][y] == e and t[y][x] == e for y in mem):
            return False
    for x in mem:
        for y in mem:
            xy = t[x][y]
            for z in mem:
                if t[xy][z] != t[x][t[y][z]]:
                    return False
    return True


def subset_is_semigroup(s: Subset) -> bool:
    """Closed and associative under the induced operation, |s| >= 2."""
    if len(s) < 2 or not is_closed(s):
        return False
    t = s.parent.table
    mem = s.members
    for x in mem:
        for y in mem:
            xy = t[x][y]
            for z in mem:
                if t[xy][z] != t[x][t[y][z]]:
                    return False
    return True


def subset_is_loop(s: Subset) -> bool:
    """Closed with an internal identity and latin-square induced table."""
    if len(s) < 2 or not is_closed(s):
        return False
    if local_identity(s) is None:
        return False
    t = s.parent.table
    mem = s.members
    want = frozenset(mem)
    for x in mem:
        if frozenset(t[x][y] for y in mem) != want:
            return False
        if frozenset(t[y][x] for y in mem) != want:
            return False
    return True


PREDICATE_REGISTRY[SubsetPredicate.IS_GROUP] = subset_is_group
PREDICATE_REGISTRY[SubsetPredicate.IS_SEMIGROUP] = subset_is_semigroup
PREDICATE_REGISTRY[SubsetPredicate.IS_LOOP] = subset_is_loop
PREDICATE_REGISTRY[SubsetPredicate.IS_SUBGROUPOID] = is_closed


def evaluate_predicate(pred, s: Subset) -> bool:
    if pred is None:
        return True
    if isinstance(pred, SubsetPredicate):
        fn = PREDICATE_REGISTRY.get(pred)
        if fn is None:
            raise ParameterError(f"predicate {pred} has no registered implementation")
        return fn(s)
    if isinstance(pred, CustomPredicate):
        return pred.fn(s)
    if callable(pred):
        return pred(s)
    raise ParameterError(f"not a subset predicate: {pred!r}")


def predicate_name(pred) -> str:
    if pred is None:
        return "closed"
    if isinstance(pred, SubsetPredicate):
        return pred.value
    if isinstance(pred, CustomPredicate):
        return pred.name
    return getattr(pred, "__name__", "custom")


@dataclass(frozen=True)
class ClosedSubsets:
    items: tuple          # Subsets, sorted lexicographically by member list
    complete: bool        # False when the generator-bounded path was used

    def __iter__(self):
        return iter(self.items)

    def __len__(self):
        return len(self.items)


def _closed_masks_exhaustive(m: FiniteMagma):
    """All nonempty closed subsets as bitmasks, by increasing mask value."""
    k = m.order
    t = m.table
    rows = [tuple(r) for r in t]
    out = []
    for mask in range(1, 1 << k):
        mem = [i for i in range(k) if (mask >> i) & 1]
        ok = True
        for x in mem:
            rx = rows[x]
            for y in mem:
                if not (mask >> rx[y]) & 1:
                    ok = False
                    break
            if not ok:
                break
        if ok:
            out.append(tuple(mem))
    return out


def _closed_by_generators(m: FiniteMagma, max_generators: int):
    seen = set()
    for size in range(1, max_generators + 1):
        for gens in combinations(range(m.order), size):
            seen.add(generated_closure(m, gens).members)
    return sorted(seen)


def enumerate_closed_subsets(m: FiniteMagma, pred=None,
                             max_exhaustive: Optional[int] = None,
                             max_generators: int = DEFAULT_MAX_GENERATORS,
                             include_full: bool = False,
                             include_trivial: bool = False) -> ClosedSubsets:
    """All proper nontrivial closed subsets satisfying pred.

    Excludes the empty set, the full universe and the singleton {identity}
    unless include_full / include_trivial re-admit the latter two (used by
    the union-structure machinery, where a component of a proper N-subset
    may coincide with the whole component).

    Above the exhaustive bound the result comes from generator-set closures
    (up to max_generators generators) and is flagged complete=False.
    """
    bound = max_exhaustive if max_exhaustive is not None else max_exhaustive_order()
    complete = m.order <= bound
    key = ("exhaustive",) if complete else ("generated", max_generators)
    candidates = m._subset_cache.get(key)
    if candidates is None:
        if complete:
            candidates = _closed_masks_exhaustive(m)
        else:
            candidates = _closed_by_generators(m, max_generators)
        m._subset_cache[key] = candidates
    full = tuple(range(m.order))
    skip_singletons = () if include_trivial else ((m.identity,),) if m.identity is not None else ()
    items = []
    for mem in candidates:
        if mem == full and not include_full:
            continue
        if mem in skip_singletons:
            continue
        s = Subset(m, mem)
        if evaluate_predicate(pred, s):
            items.append(s)
    items.sort(key=lambda s: s.members)
    return ClosedSubsets(tuple(items), complete)


# ---------------------------------------------------------------------------
# centers, nuclei, associators

def center(m: FiniteMagma) -> Subset:
    t = m.table
    k = m.order
    mem = [x for x in range(k) if all(t[a][x] == t[x][a] for a in range(k))]
    return Subset(m, mem)


@dataclass(frozen=True)
class NucleiReport:
    left: Subset
    middle: Subset
    right: Subset
    nucleus: Subset
    commutant: Subset
    centre: Subset


def nuclei(m: FiniteMagma) -> NucleiReport:
    """Left/middle/right nuclei, their intersection, the commutant and centre."""
    if m.identity is None:
        raise PreconditionError("nuclei require an identity element")
    t = m.table
    rng = range(m.order)
    left = [a for a in rng if all(t[t[a][x]][y] == t[a][t[x][y]] for x in rng for y in rng)]
    middle = [a for a in rng if all(t[t[x][a]][y] == t[x][t[a][y]] for x in rng for y in rng)]
    right = [a for a in rng if all(t[t[x][y]][a] == t[x][t[y][a]] for x in rng for y in rng)]
    nucleus = sorted(set(left) & set(middle) & set(right))
    commutant = [a for a in rng if all(t[a][x] == t[x][a] for x in rng)]
    centre = sorted(set(nucleus) & set(commutant))
    return NucleiReport(
        left=Subset(m, left), middle=Subset(m, middle), right=Subset(m, right),
        nucleus=Subset(m, nucleus), commutant=Subset(m, commutant),
        centre=Subset(m, centre))


def _require_loop(m: FiniteMagma, what: str):
    if m.identity is None or not latin_square_check(m):
        raise PreconditionError(f"{what} requires a loop (latin square with identity)")


def associator_subloop(m: FiniteMagma) -> Subset:
    """Closure of all associators w with (xy)z = (x(yz))*w."""
    _require_loop(m, "associator subloop")
    t = m.table
    rng = range(m.order)
    assoc = set()
    for x in rng:
        for y in rng:
            for z in rng:
                lhs = t[t[x][y]][z]
                base = t[x][t[y][z]]
                assoc.add(m.left_division(base, lhs))
    return generated_closure(m, sorted(assoc))


def commutator_subloop(m: FiniteMagma) -> Subset:
    """Closure of all commutators c with xy = (yx)*c."""
    _require_loop(m, "commutator subloop")
    t = m.table
    rng = range(m.order)
    comms = set()
    for x in rng:
        for y in rng:
            comms.add(m.left_division(t[y][x], t[x][y]))
    return generated_closure(m, sorted(comms))


# ---------------------------------------------------------------------------
# cosets, normality, ideals, conjugacy

def cosets(m: FiniteMagma, h: Subset, a: int, side: str = "right") -> Subset:
    """The translate {h*a} (right) or {a*h} (left); no partition is assumed."""
    if not (0 <= a < m.order):
        raise ParameterError("coset representative out of range")
    t = m.table
    if side == "right":
        return Subset(m, {t[x][a] for x in h.members})
    if side == "left":
        return Subset(m, {t[a][x] for x in h.members})
    raise ParameterError(f"side must be 'left' or 'right', got {side!r}")


@dataclass(frozen=True)
class DoubleCosetResult:
    members: Subset
    associativity_assumed: bool   # False when the carrier is not a semigroup


def double_coset(m: FiniteMagma, a: Subset, b: Subset, x: int) -> DoubleCosetResult:
    """All left-associated products (ai*x)*bj."""
    t = m.table
    vals = {t[t[ai][x]][bj] for ai in a.members for bj in b.members}
    assoc = check_identity_law(m, IdentityLaw.ASSOCIATIVE).holds
    return DoubleCosetResult(Subset(m, vals), assoc)


def _set_right(t, mem, x):
    return frozenset(t[v][x] for v in mem)


def _set_left(t, x, mem):
    return frozenset(t[x][v] for v in mem)


def is_normal(m: FiniteMagma, h: Subset, mode: str, quantifier_range: str = "definition") -> bool:
    """Normality of a closed subset.

    subgroup mode: gHg^-1 = H for all g (carrier must be a group).
    subloop / subgroupoid modes check xH = Hx, (Hx)y = H(xy), y(xH) = (yx)H;
    the subloop form quantifies x, y over the carrier, the subgroupoid form
    over the subset itself.  quantifier_range overrides with "carrier" or
    "subset".
    """
    if not is_closed(h):
        raise PreconditionError("normality is only defined for closed subsets")
    t = m.table
    mem = h.members
    memset = frozenset(mem)
    if mode == "subgroup":
        basic = classify_basic(m)
        if not basic.is_group:
            raise PreconditionError("subgroup normality requires a group carrier")
        inv = two_sided_inverses(m)
        for g in range(m.order):
            gi = inv[g]
            if frozenset(t[t[g][n]][gi] for n in mem) != memset:
                return False
        return True
    if mode not in ("subloop", "subgroupoid"):
        raise ParameterError(f"unknown normality mode {mode!r}")
    if quantifier_range == "definition":
        quantifier_range = "carrier" if mode == "subloop" else "subset"
    dom = range(m.order) if quantifier_range == "carrier" else mem
    for x in dom:
        if _set_left(t, x, mem) != _set_right(t, mem, x):
            return False
    for x in dom:
        hx = _set_right(t, mem, x)
        for y in dom:
            if frozenset(t[v][y] for v in hx) != _set_right(t, mem, t[x][y]):
                return False
            xh = _set_left(t, x, mem)
            if frozenset(t[y][v] for v in xh) != _set_left(t, t[y][x], mem):
                return False
    return True


def literal_xhy_normal(m: FiniteMagma, h: Subset) -> bool:
    """The literal two-sided translate condition {(x*v)*y} = H for all x, y.

    Kept under its own name and deliberately not equated with is_normal: as
    written the condition forces near-degenerate subsets, so the engine
    implements it verbatim rather than guessing intent."""
    t = m.table
    memset = frozenset(h.members)
    for x in range(m.order):
        for y in range(m.order):
            if frozenset(t[t[x][v]][y] for v in h.members) != memset:
                return False
    return True


def is_simple(m: FiniteMagma, mode: str = "subgroupoid",
              quantifier_range: str = "definition") -> bool:
    """No nontrivial (size >= 2) proper normal closed subset exists."""
    found = enumerate_closed_subsets(m)
    if not found.complete:
        raise ResourceLimitError("simplicity check needs the exhaustive enumeration path")
    for s in found:
        if len(s) >= 2 and is_normal(m, s, mode, quantifier_range):
            return False
    return True


def is_ideal(m: FiniteMagma, p: Subset, side: str = "two_sided") -> bool:
    """Ideal test; p must be closed (the subgroupoid condition)."""
    if not is_closed(p):
        raise PreconditionError("ideal test requires a closed subset")
    t = m.table
    mem = set(p.members)
    left_ok = all(t[x][a] in mem for x in range(m.order) for a in mem)
    if side == "left":
        return left_ok
    right_ok = all(t[a][x] in mem for x in range(m.order) for a in mem)
    if side == "right":
        return right_ok
    if side == "two_sided":
        return left_ok and right_ok
    raise ParameterError(f"side must be left/right/two_sided, got {side!r}")


@dataclass(frozen=True)
class ConjugateWitness:
    index: int
    equations: tuple   # subset of ("xA=Bx", "Ax=xB")


def conjugate_witnesses(m: FiniteMagma, h1: Subset, h2: Subset):
    """All x with x*h1 = h2*x or h1*x = x*h2 (setwise), annotated per equation."""
    for h in (h1, h2):
        if not is_closed(h):
            raise PreconditionError("conjugacy witnesses need closed subsets")
    t = m.table
    out = []
    for x in range(m.order):
        eqs = []
        if _set_left(t, x, h1.members) == _set_right(t, h2.members, x):
            eqs.append("xA=Bx")
        if _set_right(t, h1.members, x) == _set_left(t, x, h2.members):
            eqs.append("Ax=xB")
        if eqs:
            out.append(ConjugateWitness(x, tuple(eqs)))
    return out


def conjugate_pair(m: FiniteMagma, x: int, y: int):
    """Least (a, b) in lexicographic order with a*x = y*b, or None."""
    t = m.table
    for a in range(m.order):
        ax = t[a][x]
        for b in range(m.order):
            if ax == t[y][b]:
                return (a, b)
    return None


@dataclass(frozen=True)
class ElementOrders:
    real_order: Optional[int]
    neutro_order: Optional[int]


def element_orders(m: FiniteMagma, x: int) -> ElementOrders:
    """Least k with x^k hitting the identity / the neutrosophic identity.

    Powers are left-associated: x^(j+1) = x^j * x.  An order is absent when
    no such k <= m.order exists or the respective identity is not set.
    """
    t = m.table
    real = None
    neutro = None
    p = x
    for k in range(1, m.order + 1):
        if m.identity is not None and p == m.identity and real is None:
            real = k
        if m.neutro_identity is not None and p == m.neutro_identity and neutro is None:
            neutro = k
        if real is not None and neutro is not None:
            break
        p = t[p][x]
    return ElementOrders(real, neutro)


# ---------------------------------------------------------------------------
# maps, isotopes, isomorphism, representation

@dataclass(frozen=True)
class PartialMap:
    """A partial map between magmas, injectively keyed by source index."""
    source: FiniteMagma
    target: FiniteMagma
    pairs: tuple    # ((src, dst), ...)

    @staticmethod
    def from_labels(source, target, mapping):
        return PartialMap(source, target,
                          tuple((source.index(a), target.index(b)) for a, b in mapping))

    def as_dict(self):
        d = {}
        for a, b in self.pairs:
            if a in d:
                raise ParameterError(f"source index {a} mapped twice")
            d[a] = b
        return d


def check_homomorphism(f: PartialMap) -> bool:
    """f(x*y) = f(x)*f(y) wherever defined; the neutrosophic identity, when in
    the domain and present on both sides, must map to the neutrosophic identity."""
    d = f.as_dict()
    if not d:
        raise PreconditionError("empty partial map")
    ts, tt = f.source.table, f.target.table
    for x in d:
        for y in d:
            xy = ts[x][y]
            if xy in d and d[xy] != tt[d[x]][d[y]]:
                return False
    ns, nt = f.source.neutro_identity, f.target.neutro_identity
    if ns is not None and nt is not None and ns in d and d[ns] != nt:
        return False
    return True


def principal_isotope(m: FiniteMagma, a: int, b: int) -> FiniteMagma:
    """The isotope x o y = (x/a) * (b\\y); its identity is b*a."""
    _require_loop(m, "principal isotope")
    k = m.order
    table = [[m.table[m.right_division(x, a)][m.left_division(b, y)]
              for y in range(k)] for x in range(k)]
    return FiniteMagma(
        table, labels=m.labels, identity=m.table[b][a],
        neutro_mask=m.neutro_mask, neutro_identity=None,
        kind_tag=f"isotope({m.kind_tag},{m.labels[a]},{m.labels[b]})")


def is_isomorphic(m1: FiniteMagma, m2: FiniteMagma, max_order: int = 8):
    """A table-preserving bijection as an index list, or None.

    Backtracking with the identity pinned first; guarded by max_order."""
    if m1.order != m2.order:
        return None
    k = m1.order
    if k > max_order:
        raise ResourceLimitError(
            f"isomorphism search capped at order {max_order}, got {k}")
    t1, t2 = m1.table, m2.table

    def profile(t, x):
        row = t[x]
        col = tuple(t[r][x] for r in range(k))
        return (row.count(x), col.count(x), t[x][x] == x)

    prof2 = {}
    for y in range(k):
        prof2.setdefault(profile(t2, y), []).append(y)

    order = list(range(k))
    if m1.identity is not None:
        order.remove(m1.identity)
        order.insert(0, m1.identity)

    phi = [None] * k
    used = [False] * k

    def consistent(x, y):
        for u in range(k):
            if phi[u] is None:
                continue
            for (p, q, pp, qq) in ((x, u, y, phi[u]), (u, x, phi[u], y)):
                v = t1[p][q]
                if phi[v] is not None and phi[v] != t2[pp][qq]:
                    return False
                if v == x and t2[pp][qq] != y:
                    return False
                if v == u and t2[pp][qq] != phi[u]:
                    return False
        return True

    def extend(i):
        if i == k:
            return all(phi[t1[x][y]] == t2[phi[x]][phi[y]] for x in range(k) for y in range(k))
        x = order[i]
        candidates = prof2.get(profile(t1, x), [])
        if i == 0 and m1.identity is not None and m2.identity is not None:
            candidates = [m2.identity]
        for y in candidates:
            if used[y]:
                continue
            if not consistent(x, y):
                continue
            phi[x] = y
            used[y] = True
            if extend(i + 1):
                return True
            phi[x] = None
            used[y] = False
        return False

    if m1.identity is not None and m2.identity is None:
        return None
    if extend(0):
        return list(phi)
    return None


def right_regular_representation(m: FiniteMagma, a: int):
    """The column permutation x -> x*a as an index tuple."""
    col = tuple(m.table[x][a] for x in range(m.order))
    if len(set(col)) != m.order:
        raise PreconditionError(
            f"column of {m.labels[a]} is not a permutation; no representation")
    return col
