"""The built-in corpus of structure equations with expected results.

Each expected value carries a source tag in the entry metadata:

  * ``published`` — matches tables/values established in the literature for
    that geometry (reproduced here as frozen expectations);
  * ``derived``   — obtained by an independent hand or brute-force
    computation (the derivation is repeated in the test suite);
  * ``direct``    — immediate from a definition.

The corpus is embedded so the verification suite is hermetic: no files,
no network.
"""

from __future__ import annotations

from dataclasses import dataclass, field

from .structure import LieFile, parse_lie

PUBLISHED = "published"
DERIVED = "derived"
DIRECT = "direct"


@dataclass(frozen=True)
class Expectation:
    value: object
    source: str


@dataclass
class CorpusEntry:
    name: str
    description: str
    source_text: str
    expected: dict = field(default_factory=dict)

    def load(self) -> LieFile:
        return parse_lie(self.source_text)


_SL2C = """\
algebra sl2c
dim 3
# holomorphic coframe of the complex special linear group in dimension 3
d f1 = f2^f3
d f2 = -1*f1^f3
d f3 = f1^f2
metric identity
"""

_CALABI_ECKMANN = """\
algebra calabi-eckmann
dim 3
# product of two 3-spheres with its standard integrable structure
d f1 = 1i*f1^f3 + 1i*f1^F3
d f2 = f2^f3 - f2^F3
d f3 = (0-1i)*f1^F1 + f2^F2
metric identity
"""

_KODAIRA_SECONDARY = """\
algebra kodaira-secondary
dim 2
# secondary Kodaira surface (compact quotient of a solvable group)
d f1 = -1/2*f1^f2 + 1/2*f1^F2
d f2 = 1/2i*f1^F1
metric identity
"""

_SKT_NILMANIFOLD = """\
algebra skt-nilmanifold
dim 3
# two closed generators; parameters (A,B,C,D,E) = (0, 1, i, 0, 0)
d f3 = F2^f2 + 1i*f1^F1
metric identity
"""

_IWASAWA = """\
algebra iwasawa
dim 3
# complex Heisenberg-type nilmanifold
d f3 = f1^f2
metric identity
"""

CORPUS: dict[str, CorpusEntry] = {}


def _add(entry: CorpusEntry):
    CORPUS[entry.name] = entry


_add(
    CorpusEntry(
        name="sl2c",
        description="compact quotient of the 3-dimensional complex special "
        "linear group; balanced metric with exact omega^2",
        source_text=_SL2C,
        expected={
            "flags": Expectation(
                {"integrable": True, "unimodular": True, "nilpotent": False}, DERIVED
            ),
            "bc_dims": Expectation({(1, 0): 0}, PUBLISHED),
            "dolbeault_dims": Expectation({(1, 0): 3}, PUBLISHED),
            "derham_dims": Expectation({0: 1, 1: 0}, DERIVED),
            "metric_class": Expectation(
                {"kaehler": False, "balanced": True, "gauduchon": True, "skt": False},
                PUBLISHED,
            ),
            "aeppli_vanishes": Expectation({1: True}, PUBLISHED),
            "closed_10_dim": Expectation(0, PUBLISHED),
        },
    )
)

_add(
    CorpusEntry(
        name="calabi-eckmann",
        description="S^3 x S^3 with its standard complex structure; the "
        "fundamental class of omega^2 obstructs Aeppli vanishing",
        source_text=_CALABI_ECKMANN,
        expected={
            "flags": Expectation(
                {"integrable": True, "unimodular": True, "nilpotent": False}, DERIVED
            ),
            "bc_dims": Expectation(
                {
                    (0, 0): 1, (1, 1): 2, (2, 1): 1, (1, 2): 1,
                    (2, 2): 1, (3, 2): 1, (2, 3): 1, (3, 3): 1,
                },
                PUBLISHED,
            ),
            "bc_dims_complete": Expectation(True, PUBLISHED),  # all others zero
            "aeppli_dims": Expectation({(2, 2): 2}, PUBLISHED),
            "aeppli_vanishes": Expectation({1: False}, PUBLISHED),
            "closed_10_dim": Expectation(0, PUBLISHED),
        },
    )
)

_add(
    CorpusEntry(
        name="kodaira-secondary",
        description="secondary Kodaira surface: zero closed (1,0)-forms but "
        "no Gauduchon metric has Aeppli-trivial omega",
        source_text=_KODAIRA_SECONDARY,
        expected={
            "flags": Expectation(
                {"integrable": True, "unimodular": True, "nilpotent": False}, DERIVED
            ),
            "bc_dims": Expectation({(1, 0): 0, (1, 1): 1}, PUBLISHED),
            "bc_reps": Expectation({(1, 1): ["f1^F1"]}, PUBLISHED),
            "aeppli_dims": Expectation({(1, 1): 1}, PUBLISHED),
            "aeppli_reps": Expectation({(1, 1): ["f2^F2"]}, PUBLISHED),
            "star_f1F1": Expectation("-f2^F2", PUBLISHED),
            "aeppli_vanishes": Expectation({1: False}, PUBLISHED),
        },
    )
)

_add(
    CorpusEntry(
        name="skt-nilmanifold",
        description="six-dimensional nilmanifold family member satisfying the "
        "pluriclosed condition for every invariant metric",
        source_text=_SKT_NILMANIFOLD,
        expected={
            "flags": Expectation(
                {"integrable": True, "unimodular": True, "nilpotent": True}, DERIVED
            ),
            "skt_identity": Expectation(True, DERIVED),
            "closed_10_dim": Expectation(2, DIRECT),
            "bc20_contains_f1f2": Expectation(True, DIRECT),
            "aeppli_vanishes": Expectation({2: False}, PUBLISHED),
        },
    )
)

_add(
    CorpusEntry(
        name="iwasawa",
        description="complex Heisenberg-type nilmanifold; two closed "
        "(1,0)-directions",
        source_text=_IWASAWA,
        expected={
            "flags": Expectation(
                {"integrable": True, "unimodular": True, "nilpotent": True}, DERIVED
            ),
            "closed_10_dim": Expectation(2, DERIVED),
        },
    )
)


def names() -> list[str]:
    return list(CORPUS)


def get(name: str) -> CorpusEntry:
    try:
        return CORPUS[name]
    except KeyError:
        raise KeyError(
            f"unknown corpus entry {name!r}; available: {', '.join(CORPUS)}"
        ) from None
