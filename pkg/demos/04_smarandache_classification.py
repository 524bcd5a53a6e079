"""Smarandache detection and the Lagrange / Sylow / Cauchy engines.

A structure of one species is Smarandache when a proper subset forms a
richer species: a semigroup hiding a group, a loop hiding a subgroup, a
neutrosophic semigroup hiding a real group.  One engine per classical
theorem then classifies substructures uniformly across all carriers.

Run:  python demos/04_smarandache_classification.py
"""

import neutromagma as nm
from neutromagma import SKind, SubsetPredicate as SP

print("Z7 under multiplication is a semigroup containing the group {1..6}:")
det = nm.detect_s_kind(nm.zmod_mult(7), SKind.S_SEMIGROUP)
print("  detected:", det.holds, " witness:", det.witness.labels())

print("\nThe symmetric semigroup S(3) (order 27) hides the symmetric group;")
print("its smallest subsemigroup above that group has order 9:")
rep = nm.s_hyper_and_simple(nm.symmetric_semigroup(3))
print("  largest group size:", len(rep.largest_group),
      " hyper subsemigroup size:", len(rep.hyper_subsemigroup),
      " simple:", rep.s_simple)

print("\nLagrange classification of neutrosophic-group subsets in the order-32")
print("doubled loop: one witness of order 4 divides, the order-12 one fails,")
print("so the verdict is weak:")
big = nm.extend_tagged(nm.ln(15, 2))
rep = nm.lagrange_classify(big, nm.S_NEUTRO_SUBLOOP)
print("  verdict:", rep.verdict.value,
      " orders found:", sorted({w.order for w in rep.witnesses}))

print("\nSylow on the order-15 line carrier mod 8: an order-5 witness exists")
print("but no order-3 one, giving a weak verdict:")
rep = nm.sylow_classify(nm.zn_line_neutro(8), SP.IS_S_NEUTROSOPHIC_SUB)
print("  verdict:", rep.verdict.value,
      " witnesses:", [w.subset.labels() for w in rep.witnesses])

print("\nCauchy on prime-order carriers is always free: the only torsion")
print("order is 2 and 2 never divides 11:")
rep = nm.cauchy_classify(nm.zn_line_neutro(6))
print("  verdict:", rep.verdict.value,
      " torsion orders:", sorted({w.order for w in rep.witnesses}))

print("\nIdentity laws can be demanded on substructures instead of the whole")
print("carrier; every doubled subloop of the order-12 extension is Moufang:")
v = nm.s_identity_class(nm.extend_tagged(nm.ln(5, 3)), nm.IdentityLaw.MOUFANG1,
                        nm.S_NEUTRO_SUBLOOP)
print("  verdict:", v.value)

print("\nConjugating subsets: all x with x{1,4} = {1,14}x in the line carrier")
print("mod 15 form the multiples of 3 and their tagged copies:")
m = nm.zn_line_neutro(15)
ws = nm.conjugate_witnesses(m, m.subset(["1", "4"]), m.subset(["1", "14"]))
print(" ", sorted(m.labels[w.index] for w in ws))
