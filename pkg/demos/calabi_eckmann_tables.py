"""Walkthrough: Bott-Chern tables on the product of two 3-spheres.

The standard complex structure on S^3 x S^3 has eight nonzero invariant
Bott-Chern groups.  Here, unlike the SL(2,C) example, the Aeppli class of
omega^2 does NOT vanish: omega^2 pairs negatively with a harmonic Aeppli
form, which exhibits the obstruction.  The conclusion H_BC^(1,0) = 0 still
holds, showing the vanishing criterion is sufficient but not necessary.
"""

from liecohom import (
    Form,
    aeppli_class_vanishes,
    aeppli_cohomology,
    bc_cohomology,
    corpus,
    harmonic_forms,
    render_form,
)

lie = corpus.get("calabi-eckmann").load()
s, h = lie.structure, lie.metric
n = s.n

print(f"algebra {s.name} (n={n})")
print("\ninvariant Bott-Chern table (nonzero groups):")
for p in range(n + 1):
    for q in range(n + 1):
        g = bc_cohomology(s, p, q)
        if g.dim:
            reps = ", ".join(render_form(f) for f in g.representatives)
            print(f"  H_BC^({p},{q}) = dim {g.dim}   reps: {reps}")

print("\nharmonic representatives for the standard metric agree:")
for p, q in ((1, 1), (2, 1), (2, 2)):
    reps = ", ".join(render_form(f) for f in harmonic_forms("bc", s, h, p, q))
    print(f"  harmonic BC({p},{q}): {reps}")

g = aeppli_cohomology(s, 2, 2)
print(f"\nH_A^(2,2) = dim {g.dim}, reps: "
      + ", ".join(render_form(f) for f in g.representatives))

psi = Form.monomial(n, [2], [2]).wedge(Form.monomial(n, [3], [3]))
print("\n<omega^2, f2^F2^f3^F3> =", h.pairing(h.omega_power(2), psi))

decision = aeppli_class_vanishes(s, h, p=1)
print("[omega^2]_A vanishes:", decision.vanishes)
print("  obstruction:", render_form(decision.obstruction),
      " pairing:", decision.pairing)
print("\nH_BC^(1,0) dim:", bc_cohomology(s, 1, 0).dim,
      " (zero even though the hypothesis fails)")
