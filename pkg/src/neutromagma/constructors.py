"""Constructors for the parameterized loop and groupoid families and the
standard reference structures (cyclic, symmetric, dihedral, map semigroups).

Counting formulas for the families are standalone functions so they can be
cross-checked against the enumerating constructors.
"""

from __future__ import annotations

from itertools import permutations, product
from math import gcd

from .magma import FiniteMagma, ParameterError, ResourceLimitError


def factorize(n: int):
    """Prime factorization by trial division as [(p, alpha), ...]."""
    out = []
    d = 2
    while d * d <= n:
        if n % d == 0:
            a = 0
            while n % d == 0:
                n //= d
                a += 1
            out.append((d, a))
        d += 1
    if n > 1:
        out.append((n, 1))
    return out


# ---------------------------------------------------------------------------
# the loop family of order n+1

def _ln_check(n: int, m: int):
    if n <= 3 or n % 2 == 0:
        raise ParameterError(f"loop family needs odd n > 3, got n={n}")
    if not (1 < m < n):
        raise ParameterError(f"loop family needs 1 < m < n, got m={m}")
    if gcd(m, n) != 1:
        raise ParameterError(f"gcd(m, n) = gcd({m},{n}) = {gcd(m, n)} != 1")
    if gcd(m - 1, n) != 1:
        raise ParameterError(f"gcd(m-1, n) = gcd({m-1},{n}) = {gcd(m - 1, n)} != 1")


def ln(n: int, m: int) -> FiniteMagma:
    """The loop on {e, 1, ..., n} with i*j = (mj - (m-1)i) mod n for distinct
    non-identity i, j (residue 0 rendered as n), i*i = e, and e the identity."""
    _ln_check(n, m)
    k = n + 1
    table = [[0] * k for _ in range(k)]
    for i in range(k):
        table[0][i] = i
        table[i][0] = i
    for i in range(1, k):
        for j in range(1, k):
            if i == j:
                table[i][j] = 0
            else:
                v = (m * j - (m - 1) * i) % n
                table[i][j] = v if v != 0 else n
    labels = ["e"] + [str(i) for i in range(1, k)]
    return FiniteMagma(table, labels=labels, identity=0, kind_tag=f"ln({n},{m})")


def ln_admissible(n: int):
    if n <= 3 or n % 2 == 0:
        raise ParameterError(f"loop family needs odd n > 3, got n={n}")
    return [m for m in range(2, n) if gcd(m, n) == 1 and gcd(m - 1, n) == 1]


def ln_class(n: int):
    """All loops of the family for fixed n, in increasing m order."""
    return [ln(n, m) for m in ln_admissible(n)]


def ln_count(n: int) -> int:
    """Closed form for the family size: product of (p-2)p^(a-1) over n's factorization."""
    out = 1
    for p, a in factorize(n):
        out *= (p - 2) * p ** (a - 1)
    return out


def ln_strict_noncomm_count(n: int) -> int:
    """Closed form for the strictly non-commutative members: product of (p-3)p^(a-1)."""
    out = 1
    for p, a in factorize(n):
        out *= (p - 3) * p ** (a - 1)
    return out


# ---------------------------------------------------------------------------
# the linear groupoid families on Z_n

ZN_CLASSES = ("z", "zstar", "zdoublestar", "ztriplestar")


def _zn_check(n: int, t: int, u: int, cls: str):
    if n < 3:
        raise ParameterError(f"groupoid family needs n >= 3, got {n}")
    if cls not in ZN_CLASSES:
        raise ParameterError(f"class must be one of {ZN_CLASSES}, got {cls!r}")
    if not (0 <= t < n and 0 <= u < n):
        raise ParameterError(f"t, u must be residues mod {n}")
    if cls in ("z", "zstar", "zdoublestar") and (t == 0 or u == 0):
        raise ParameterError(f"class {cls} forbids zero coefficients")
    if cls in ("z", "zstar") and t == u:
        raise ParameterError(f"class {cls} requires t != u")
    if cls == "z" and gcd(t, u) != 1:
        raise ParameterError(f"class z requires gcd(t,u) = 1, got gcd({t},{u}) = {gcd(t, u)}")


def zn(n: int, t: int, u: int, cls: str = "zstar") -> FiniteMagma:
    """The groupoid on Z_n with a*b = (ta + ub) mod n."""
    _zn_check(n, t, u, cls)
    table = [[(t * a + u * b) % n for b in range(n)] for a in range(n)]
    return FiniteMagma(table, kind_tag=f"zn({n},{t},{u})")


def zn_params(n: int, cls: str = "zstar"):
    """All admissible (t, u) pairs of the class, lexicographically."""
    if cls == "z":
        return [(t, u) for t in range(1, n) for u in range(1, n)
                if t != u and gcd(t, u) == 1]
    if cls == "zstar":
        return [(t, u) for t in range(1, n) for u in range(1, n) if t != u]
    if cls == "zdoublestar":
        return [(t, u) for t in range(1, n) for u in range(1, n)]
    if cls == "ztriplestar":
        return [(t, u) for t in range(n) for u in range(n)]
    raise ParameterError(f"unknown class {cls!r}")


def zn_class_size(n: int, cls: str = "zstar") -> int:
    """Class size: the (n-1)(n-2) formula is exact for zstar; the z class is
    counted by gcd sieve (the formula is only an upper bound there)."""
    if n < 3:
        raise ParameterError(f"groupoid family needs n >= 3, got {n}")
    if cls == "zstar":
        return (n - 1) * (n - 2)
    if cls == "zdoublestar":
        return (n - 1) * (n - 1)
    if cls == "ztriplestar":
        return n * n
    if cls == "z":
        return len(zn_params(n, "z"))
    raise ParameterError(f"unknown class {cls!r}")


# ---------------------------------------------------------------------------
# standard structures

def zmod_mult(n: int) -> FiniteMagma:
    """Z_n under multiplication modulo n (a monoid with identity 1)."""
    if n < 1:
        raise ParameterError("modulus must be positive")
    table = [[(a * b) % n for b in range(n)] for a in range(n)]
    return FiniteMagma(table, kind_tag=f"zmod_mult({n})")


def cyclic(n: int) -> FiniteMagma:
    """The cyclic group {g | g^n = 1}, labeled 1, g, g^2, ..."""
    if n < 1:
        raise ParameterError("order must be positive")
    table = [[(a + b) % n for b in range(n)] for a in range(n)]
    labels = ["1"] + ["g" if i == 1 else f"g^{i}" for i in range(1, n)]
    return FiniteMagma(table, labels=labels, identity=0, kind_tag=f"cyclic({n})")


def _perm_label(p):
    return "".join(str(v + 1) for v in p)


def _perm_table(perms):
    index = {p: i for i, p in enumerate(perms)}
    n = len(perms[0])
    table = [[index[tuple(p[q[i]] for i in range(n))] for q in perms] for p in perms]
    return table


def symmetric_group(n: int) -> FiniteMagma:
    """S_n on one-line labels, composition (p*q)(i) = p(q(i)); capped at n = 5."""
    if not (1 <= n <= 5):
        raise ResourceLimitError(f"symmetric_group capped at n = 5, got {n}")
    perms = sorted(permutations(range(n)))
    return FiniteMagma(_perm_table(perms), labels=[_perm_label(p) for p in perms],
                       kind_tag=f"symmetric_group({n})")


def _parity(p):
    seen = [False] * len(p)
    sign = 0
    for i in range(len(p)):
        if seen[i]:
            continue
        j = i
        length = 0
        while not seen[j]:
            seen[j] = True
            j = p[j]
            length += 1
        sign += length - 1
    return sign % 2


def alternating(n: int) -> FiniteMagma:
    """A_n, even permutations only; capped at n = 5."""
    if not (1 <= n <= 5):
        raise ResourceLimitError(f"alternating capped at n = 5, got {n}")
    perms = sorted(p for p in permutations(range(n)) if _parity(p) == 0)
    return FiniteMagma(_perm_table(perms), labels=[_perm_label(p) for p in perms],
                       kind_tag=f"alternating({n})")


def dihedral(n: int) -> FiniteMagma:
    """The dihedral group of order 2n: a^2 = b^n = 1, bab = a.

    Elements a^i b^j with i in {0,1}, j in [0,n); b^j a = a b^(-j)."""
    if n < 1:
        raise ParameterError("dihedral needs n >= 1")
    elems = [(i, j) for i in range(2) for j in range(n)]
    index = {e: k for k, e in enumerate(elems)}

    def mul(e1, e2):
        (i, j), (k, l) = e1, e2
        jj = j if k == 0 else (-j) % n
        return ((i + k) % 2, (jj + l) % n)

    table = [[index[mul(e1, e2)] for e2 in elems] for e1 in elems]

    def lab(e):
        i, j = e
        if i == 0 and j == 0:
            return "e"
        a = "a" if i else ""
        if j == 0:
            return a
        b = "b" if j == 1 else f"b^{j}"
        return a + b

    return FiniteMagma(table, labels=[lab(e) for e in elems], kind_tag=f"dihedral({n})")


def symmetric_semigroup(n: int) -> FiniteMagma:
    """S(n): all n^n self-maps of {1..n} under composition; capped at n = 4."""
    if not (1 <= n <= 4):
        raise ResourceLimitError(f"symmetric_semigroup capped at n = 4 (order 256), got {n}")
    maps = sorted(product(range(n), repeat=n))
    index = {f: i for i, f in enumerate(maps)}
    table = [[index[tuple(f[g[i]] for i in range(n))] for g in maps] for f in maps]
    return FiniteMagma(table, labels=[_perm_label(f) for f in maps],
                       kind_tag=f"symmetric_semigroup({n})")


def direct_product(m1: FiniteMagma, m2: FiniteMagma) -> FiniteMagma:
    """Componentwise product; labels are pairs, an element is neutrosophic when
    either coordinate is."""
    elems = [(x, y) for x in range(m1.order) for y in range(m2.order)]
    index = {e: k for k, e in enumerate(elems)}
    table = [[index[(m1.table[x1][x2], m2.table[y1][y2])]
              for (x2, y2) in elems] for (x1, y1) in elems]
    labels = [f"({m1.labels[x]},{m2.labels[y]})" for (x, y) in elems]
    mask = [m1.neutro_mask[x] or m2.neutro_mask[y] for (x, y) in elems]
    ident = None
    if m1.identity is not None and m2.identity is not None:
        ident = index[(m1.identity, m2.identity)]
    nid = None
    if m1.neutro_identity is not None and m2.neutro_identity is not None:
        nid = index[(m1.neutro_identity, m2.neutro_identity)]
    return FiniteMagma(table, labels=labels, identity=ident, neutro_mask=mask,
                       neutro_identity=nid,
                       kind_tag=f"product({m1.kind_tag},{m2.kind_tag})")

