"""Tour of the parameterized loop family of odd order n+1.

Run:  python demos/01_loop_family.py
"""

import neutromagma as nm
from neutromagma import IdentityLaw as Law


def show_table(m):
    w = max(len(l) for l in m.labels)
    head = " " * (w + 2) + "  ".join(f"{l:>{w}}" for l in m.labels)
    print(head)
    for i, row in enumerate(m.table):
        cells = "  ".join(f"{m.labels[v]:>{w}}" for v in row)
        print(f"{m.labels[i]:>{w}} | {cells}")


print("The loop on {e, 1, ..., 5} with i*j = (2j - i) mod 5:")
l52 = nm.ln(5, 2)
show_table(l52)

print("\nEvery non-identity element squares to e, and the table is a latin square:")
print("  latin:", nm.latin_square_check(l52))
print("  1*1 =", l52.labels[l52.op(1, 1)], "   3*4 =", l52.labels[l52.op(3, 4)])

print("\nFor n = 5 the class has three members; exactly one is commutative,")
print("always at m = (n+1)/2:")
for m in nm.ln_class(5):
    basic = nm.classify_basic(m)
    print(f"  {m.kind_tag}: commutative={basic.is_commutative}, group={basic.is_group}")

print("\nThe class size follows the closed form prod (p-2) p^(a-1):")
for n in (5, 7, 9, 15, 21):
    print(f"  n={n}: sieve {len(nm.ln_class(n))}, formula {nm.ln_count(n)}")

print("\nm = 2 is the unique right alternative member, m = n-1 the left one,")
print("and nothing in the class is Moufang, Bol or Bruck:")
for m in nm.ln_class(7):
    flags = [law.value for law in (Law.RIGHT_ALTERNATIVE, Law.LEFT_ALTERNATIVE,
                                   Law.MOUFANG1, Law.BOL, Law.WIP)
             if nm.check_identity_law(m, law).holds]
    print(f"  {m.kind_tag}: {flags or 'none of the scanned laws'}")

print("\nThe weak inverse property appears exactly when m^2 - m + 1 = 0 mod n;")
print("for n = 7 that picks out m = 3 and m = 5 (9-3+1 = 7, 25-5+1 = 21).")

print("\nAssociators generate the whole loop, so these loops are maximally")
print("non-associative; the nucleus collapses to the identity:")
l73 = nm.ln(7, 3)
print("  associator subloop of L7(3):", nm.associator_subloop(l73).labels())
print("  nucleus of L7(3):", nm.nuclei(l73).nucleus.labels())

print("\nPrincipal isotopes stay loops (latin squares with a new identity),")
print("but unlike groups these loops are not isomorphic to their isotopes:")
iso = nm.principal_isotope(l52, 1, 2)
print("  isotope at (1, 2): order", iso.order, "latin:", nm.latin_square_check(iso),
      "identity:", iso.labels[iso.identity])
print("  isomorphic to the original?", nm.is_isomorphic(l52, iso) is not None)
g = nm.cyclic(4)
print("  a group vs its isotope (groups are G-loops):",
      nm.is_isomorphic(g, nm.principal_isotope(g, 1, 2)) is not None)
