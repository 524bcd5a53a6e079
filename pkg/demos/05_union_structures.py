"""Union structures: bigroups, N-semigroups and mixed families.

Components are disjoint-tagged, so the order of a union is always the sum
of component orders.  Kinds are declared per component and verified at
construction; the N-level engines reuse the magma-level machinery with
orders measured against the union order.

Run:  python demos/05_union_structures.py
"""

import neutromagma as nm
from neutromagma import SubsetPredicate as SP

print("A biloop: the doubled L7(3) joined with the dihedral group of order 8.")
biloop = nm.build_n_structure([nm.extend_tagged(nm.ln(7, 3)), nm.dihedral(4)],
                              ["s-neutrosophic-loop", "group"], "demo-biloop")
print("  order:", biloop.order)
rep = nm.n_cauchy(biloop)
print("  every element order is 2 or 4, both divide 24 ->", rep.verdict.value)

print("\nA three-component union of order 32 with a weak Lagrange verdict:")
ns = nm.build_n_structure(
    [nm.zn_line_neutro(6), nm.symmetric_group(3), nm.zmod_mult(15)],
    ["s-neutrosophic-semigroup", "group", "s-semigroup"], "demo-ngroup")
rep = nm.n_lagrange(ns, [SP.IS_S_NEUTROSOPHIC_SUB, SP.IS_GROUP,
                         nm.GROUP_OR_S_SUBSEMIGROUP])
divides = sorted({w.order for w in rep.witnesses if w.qualifies})
fails = sorted({w.order for w in rep.witnesses if not w.qualifies})
print("  verdict:", rep.verdict.value)
print("  orders dividing 32:", divides[:6], " orders failing:", fails[:6], "...")

print("\nPrime union order kills every divisibility claim:")
prime = nm.build_n_structure(
    [nm.zmod_mult(10), nm.zn_line_neutro(6),
     nm.direct_product(nm.zmod_mult(2), nm.zmod_mult(5))],
    ["s-semigroup", "s-neutrosophic-semigroup", "s-semigroup"], "order-31")
species = [nm.GROUP_OR_S_SUBSEMIGROUP, SP.IS_S_NEUTROSOPHIC_SUB,
           nm.GROUP_OR_S_SUBSEMIGROUP]
print("  order:", prime.order,
      " lagrange:", nm.n_lagrange(prime, species).verdict.value,
      " sylow:", nm.n_sylow(prime, species).verdict.value,
      " cauchy:", nm.n_cauchy(prime).verdict.value)

print("\nComponent-local Sylow tuples pick one prime per component:")
rep = nm.tuple_sylow(biloop, (2, 2), [nm.S_NEUTRO_SUBLOOP, SP.IS_GROUP])
print("  (2,2)-tuple found:", rep.found, " witness:", rep.witness)

print("\nA mixed six-component structure (loops, groups, semigroups, groupoids")
print("with their neutrosophic Smarandache forms) classifies as S-mixed:")
mixed = nm.build_n_structure(
    [nm.extend_tagged(nm.ln(5, 3)), nm.zn_units_neutro(5), nm.zn_line_neutro(6),
     nm.zn_affine_neutro(8, 3, 5), nm.alternating(5), nm.symmetric_semigroup(3)],
    ["s-neutrosophic-loop", "s-neutrosophic-group", "s-neutrosophic-semigroup",
     "s-neutrosophic-groupoid", "group", "s-semigroup"], "demo-mixed")
verdict = nm.classify_n_kind(mixed)
print("  true flags:", ", ".join(verdict.true_flags()))

print("\nDeficit substructures live on a strict subset of the components:")
deficit = nm.deficit_substructures(
    biloop, 1, [nm.S_NEUTRO_SUBLOOP, SP.IS_GROUP])
print("  t=1 deficit count:", len(deficit), " first:", deficit[0])
