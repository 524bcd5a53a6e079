"""The linear groupoids a*b = ta + ub mod n and their little theorems.

Run:  python demos/02_groupoid_family.py
"""

import neutromagma as nm
from neutromagma import IdentityLaw as Law
from neutromagma import SubsetPredicate as SP

print("Z3 with a*b = a + 2b mod 3:")
z = nm.zn(3, 1, 2)
for i, row in enumerate(z.table):
    print(" ", z.labels[i], "|", "  ".join(z.labels[v] for v in row))
basic = nm.classify_basic(z)
print("associative:", basic.is_semigroup, " commutative:", basic.is_commutative)

print("\nAssociativity happens exactly when both coefficients are idempotent")
print("residues (t^2 = t, u^2 = u):")
for (n, t, u) in [(6, 3, 4), (6, 4, 3), (5, 2, 3), (10, 5, 6)]:
    m = nm.zn(n, t, u)
    print(f"  Z{n}({t},{u}): associative ="
          f" {nm.check_identity_law(m, Law.ASSOCIATIVE).holds}"
          f"  (t^2={t*t % n}, u^2={u*u % n})")

print("\nIdempotent groupoids appear exactly at t + u = 1 mod n:")
for (n, t, u) in [(5, 2, 4), (5, 3, 3), (7, 3, 5)]:
    try:
        m = nm.zn(n, t, u, "zdoublestar")
        print(f"  Z{n}({t},{u}): idempotent ="
              f" {nm.check_identity_law(m, Law.IDEMPOTENT).holds}")
    except nm.ParameterError as exc:
        print(f"  Z{n}({t},{u}): {exc}")

print("\nLeft ideals of Z_n(t,u) are the right ideals of the flipped Z_n(u,t):")
a, b = nm.zn(8, 3, 5), nm.zn(8, 5, 3)
lefts = [s.labels() for s in nm.enumerate_closed_subsets(a, SP.IS_LEFT_IDEAL)]
rights = [s.labels() for s in nm.enumerate_closed_subsets(b, SP.IS_RIGHT_IDEAL)]
print("  left ideals of Z8(3,5): ", lefts)
print("  right ideals of Z8(5,3):", rights)

print("\nWhen n = t + u with both prime the groupoid is simple")
print("(no nontrivial normal subgroupoid):")
for (n, t, u) in [(5, 2, 3), (7, 2, 5), (13, 2, 11)]:
    print(f"  Z{n}({t},{u}): simple = {nm.is_simple(nm.zn(n, t, u))}")

print("\nFor even n with t | n and t + u = n the set t.Zn is a subgroupoid")
print("of order n/t:")
for (n, t, u) in [(12, 4, 8), (12, 3, 9)]:
    m = nm.zn(n, t, u)
    s = nm.Subset(m, sorted({(t * x) % n for x in range(n)}))
    print(f"  Z{n}({t},{u}): {s.labels()} closed={nm.is_closed(s)}")

print("\nThe whole class Z*(n) has exactly (n-1)(n-2) members:")
for n in (3, 5, 8, 12):
    print(f"  n={n}: enumerated {len(nm.zn_params(n, 'zstar'))},"
          f" formula {nm.zn_class_size(n, 'zstar')}")
