"""Walkthrough: the secondary Kodaira surface.

A compact complex surface where H_BC^(1,0) = 0 while no Gauduchon metric
has Aeppli-trivial fundamental class: the class of f2^F2 spans H_A^(1,1)
and pairs nontrivially with every positive constant-parameter omega.
"""

import random
from fractions import Fraction

from liecohom import (
    Form,
    HermitianMetric,
    Scalar,
    aeppli_class_vanishes,
    aeppli_cohomology,
    bc_cohomology,
    classify_metric,
    corpus,
    decompose_aeppli,
    render_form,
)

lie = corpus.get("kodaira-secondary").load()
s, h = lie.structure, lie.metric

print(f"algebra {s.name} (n={s.n})")
print("H_BC^(1,0) dim:", bc_cohomology(s, 1, 0).dim)
g = bc_cohomology(s, 1, 1)
print("H_BC^(1,1):", ", ".join(render_form(f) for f in g.representatives))
print("*(f1^F1) =", render_form(h.star(Form.monomial(2, [1], [1]))))
g = aeppli_cohomology(s, 1, 1)
print("H_A^(1,1):", ", ".join(render_form(f) for f in g.representatives))

print("\nconstant-parameter metrics 2*omega = i(A^2 f1^F1 + C^2 f2^F2) + B f1^F2 - conj(B) f2^F1:")
rng = random.Random(2)
shown = 0
while shown < 4:
    a2 = Fraction(rng.randint(1, 4), rng.randint(1, 2))
    c2 = Fraction(rng.randint(1, 4), rng.randint(1, 2))
    b = Scalar(Fraction(rng.randint(-2, 2), 2), Fraction(rng.randint(-2, 2), 2))
    metric = HermitianMetric.from_form_parameters(2, [a2, c2], {(1, 2): b})
    if not metric.is_positive():
        continue
    shown += 1
    mc = classify_metric(s, metric)
    decision = aeppli_class_vanishes(s, metric, p=1)
    dec = decompose_aeppli(s, metric, metric.fundamental_form())
    pairing = metric.pairing(dec.harmonic, Form.monomial(2, [2], [2]))
    print(
        f"  A^2={a2} C^2={c2} B={b}: gauduchon={mc.gauduchon}, "
        f"[omega]_A vanishes={decision.vanishes}, "
        f"<harmonic part, f2^F2> = {pairing}"
    )
