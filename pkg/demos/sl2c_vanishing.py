"""Walkthrough: the vanishing criterion on a quotient of SL(2, C).

The invariant coframe satisfies d f1 = f2^f3, d f2 = -f1^f3, d f3 = f1^f2.
With the standard metric, omega^2 is exact, so its Aeppli class vanishes;
the engine finds an explicit potential pair and then confirms the
consequence: there is no nonzero d-closed invariant (1,0)-form.
"""

from liecohom import (
    HermitianMetric,
    aeppli_class_vanishes,
    bc_cohomology,
    classify_metric,
    corpus,
    render_form,
    verify_vanishing_theorem,
)

lie = corpus.get("sl2c").load()
s, h = lie.structure, lie.metric

print(f"algebra {s.name} (n={s.n}), flags: {s.flags}")

omega = h.fundamental_form()
print("\nomega       =", render_form(omega))
print("d omega     =", render_form(s.d(omega)), " (not Kaehler)")
print("d omega^2   =", render_form(s.d(h.omega_power(2))), " (balanced)")
print("classified  :", classify_metric(s, h))

decision = aeppli_class_vanishes(s, h, p=1)
print("\n[omega^2]_A vanishes:", decision.vanishes)
print("  mu     =", render_form(decision.mu))
print("  lambda =", render_form(decision.lam))
reconstructed = s.del_(decision.mu) + s.delbar(decision.lam)
print("  del mu + delbar lambda == omega^2:", reconstructed == h.omega_power(2))

check = verify_vanishing_theorem(s, h, p=1)
print("\nvanishing implication:", check.status)
print("  d-closed (1,0)-forms:", check.closed_p0_dim)
print("  H_BC^(1,0) dim      :", bc_cohomology(s, 1, 0).dim)
