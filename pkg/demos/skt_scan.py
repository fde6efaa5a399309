"""Walkthrough: scanning the six-dimensional pluriclosed nilmanifold family.

The family has two closed (1,0)-generators and

    d f3 = A F1^f2 + B F2^f2 + C f1^F1 + D f1^F2 + E f1^f2.

The identity metric is pluriclosed (del delbar omega = 0) exactly when
|A|^2 + |D|^2 + |E|^2 + 2 Re(conj(B) C) = 0, and in that case f1^f2 is a
nonzero closed (2,0)-form, so the Aeppli class of omega cannot vanish.
"""

from fractions import Fraction

from liecohom import (
    HermitianMetric,
    Scalar,
    aeppli_class_vanishes,
    classify_metric,
    closed_p0_forms,
    generate_skt_family,
    render_form,
    skt_condition,
)

identity = HermitianMetric.identity(3)

samples = [
    (0, 1, Scalar(0, 1), 0, 0),
    (0, 0, 0, 0, 0),
    (1, 0, 0, 0, 0),
    (0, 2, Scalar(0, 3), 0, 0),
    (1, 1, Scalar(Fraction(-1, 2), 5), 0, 0),
    (0, 1, Scalar(1, 1), 0, 0),
]

print("A B C D E  | condition | pluriclosed(identity) | [omega]_A vanishes")
for a, b, c, d, e in samples:
    s = generate_skt_family(a, b, c, d, e)
    condition = skt_condition(a, b, c, d, e)
    engine = classify_metric(s, identity).skt
    verdict = "-"
    if condition:
        verdict = str(aeppli_class_vanishes(s, identity, p=2).vanishes)
    print(f"{a} {b} {c} {d} {e}  |  {condition!s:5}   |  {engine!s:5}  |  {verdict}")

s = generate_skt_family(0, 1, Scalar(0, 1), 0, 0)
print("\nclosed (1,0)-forms of the family:",
      ", ".join(render_form(f) for f in closed_p0_forms(s, 1)))
print("flags:", s.flags)
