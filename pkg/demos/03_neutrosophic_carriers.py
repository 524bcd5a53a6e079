"""Neutrosophic extensions: tagged doublings and residue carriers a + bI.

The indeterminate I satisfies I^2 = I, so products follow
(a+bI)(c+dI) = ac + (ad+bc+bd)I.

Run:  python demos/03_neutrosophic_carriers.py
"""

import neutromagma as nm

print("Doubling the loop L5(3) gives a 12-element carrier {x, xI}:")
t = nm.extend_tagged(nm.ln(5, 3))
print("  order:", t.order, " identity:", t.labels[t.identity],
      " neutrosophic identity:", t.labels[t.neutro_identity])
print("  3 * 3I =", t.labels[t.op(t.index('3'), t.index('3I'))],
      "   eI * 3I =", t.labels[t.op(t.index('eI'), t.index('3I'))])
print("  any product touching a tagged element stays tagged.")

print("\nEach pair {e, t, eI, tI} closes into a four-element neutrosophic group:")
s = t.subset(["e", "3", "eI", "3I"])
print("  closed:", nm.is_closed(s),
      " neutrosophic subgroup:", nm.is_neutrosophic_subgroup(s))

print("\nThe full residue carrier mod 5 has 25 elements a + bI:")
full = nm.zn_full_neutro(5)
print("  (1+3I)^2 =", full.labels[full.op(full.index('1+3I'), full.index('1+3I'))])
print("  (4I)^2   =", full.labels[full.op(full.index('4I'), full.index('4I'))])
print("  element orders of 4I:", nm.element_orders(full, full.index('4I')))

print("\nSubset species tell pseudo from strong neutrosophic subgroups:")
for labels in (["1", "I", "4I"], ["1", "I", "4", "4I"], ["1", "1+3I"]):
    s = full.subset(labels)
    print(f"  {labels}: pseudo={nm.is_pseudo_neutrosophic_subgroup(s)},"
          f" strong={nm.is_neutrosophic_subgroup(s)}")

print("\nRight cosets of P = {1, I, 4I} do not partition the carrier:")
P = full.subset(["1", "I", "4I"])
for rep in ("2", "I", "4+I", "2+2I"):
    c = nm.cosets(full, P, full.index(rep), "right")
    print(f"  P.{rep} = {sorted(c.labels())}")

print("\nThe line carrier {0..n-1, I..(n-1)I} identifies 0I with 0, so its")
print("order is 2n - 1 (prime for n = 6 and n = 7):")
for n in (6, 7):
    print(f"  n={n}: order {nm.zn_line_neutro(n).order}")

print("\nNeutrosophic ideals absorb from both sides:")
line6 = nm.zn_line_neutro(6)
J = line6.subset(["0", "2", "4", "2I", "4I"])
print("  J = {0, 2, 4, 2I, 4I}: plain ideal =",
      nm.neutrosophic_ideal_check(J, "plain"),
      " principal =", nm.neutrosophic_ideal_check(J, "principal"))
