#!/usr/bin/env python3
## Defining Lie algebras by structure constants and computing basic invariants.

from lietensor import (GF, abelian, direct_sum, heisenberg,
                       quotient_algebra, sl2)

## The catalog constructors return validated algebras.
h = heisenberg(1)
print("Heisenberg algebra H(1):", h.basis_names, "dim", h.dim)
print("validation:", h.validate().describe())

## Brackets extend bilinearly from the structure constants.
x, y, z = (h.basis_vector(i) for i in range(3))
print("[x, y] =", h.bracket(x, y))          # the defining relation: z
print("[v, v] =", h.bracket(x, x))          # antisymmetry

## Derived subalgebra, center, lower central series.
print("derived subalgebra dim:", h.derived_subalgebra().dim)
print("center dim:", h.center().dim)
print("lower central series dims:", [s.dim for s in h.lower_central_series()])
print("nilpotency class:", h.nilpotency_class())

## sl2 is perfect (its derived subalgebra is everything) and not nilpotent.
s = sl2()
print("\nsl2 derived dim:", s.derived_subalgebra().dim,
      "center dim:", s.center().dim,
      "nilpotency class:", s.nilpotency_class())

## Quotients by ideals come with the projection map; the ideal property is
## checked, not trusted.
ab, proj = quotient_algebra(h, h.derived_subalgebra())
print("\nH(1) mod its derived subalgebra: dim", ab.dim,
      "abelian?", ab.is_abelian)

## Direct sums and prime fields.
L = direct_sum(heisenberg(1), abelian(1))
print("\nH(1) + abelian(1): dim", L.dim, "class", L.nilpotency_class())
h2 = heisenberg(1, GF(2))
print("H(1) over GF(2) validates:", h2.validate().ok)
