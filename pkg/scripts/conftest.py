"""
Shared fixtures: the m=3 Gold pipeline is built once per session; the m=5
pipeline only for tests marked slow.
"""

import sys
from pathlib import Path

import pytest

ROOT = Path(__file__).parents[1].resolve()
# Ensure the asch package is importable when running from a checkout
if str(ROOT) not in sys.path:
    sys.path.insert(0, str(ROOT))

from asch.models.scheme import RelationPartition  # noqa: E402
from asch.services.clique_fission import fission, validate_spread  # noqa: E402
from asch.services.gold_code import build_gold_code, rm_coset_partition, scheme_from_code  # noqa: E402
from asch.services.imprimitivity import recognize_cover  # noqa: E402
from asch.services.muwm import extract_weighing_family, gram_blocks  # noqa: E402
from asch.services.scheme_core import verify_axioms  # noqa: E402
from asch.services.spectra import compute_spectrum  # noqa: E402


class GoldPipeline:
    """Every stage of the pipeline at one degree."""

    def __init__(self, m: int):
        self.m = m
        self.code = build_gold_code(m)
        self.scheme = scheme_from_code(self.code)
        self.cosets = rm_coset_partition(self.code)
        self.cert = verify_axioms(self.scheme)
        self.spectrum = compute_spectrum(self.cert)
        self.profile = recognize_cover(self.cert)
        self.spread = validate_spread(self.profile, self.cosets)
        self.fission = fission(self.profile, self.spread)
        self.grams = gram_blocks(self.fission, 3, self.spread)
        self.family = extract_weighing_family(self.grams, self.profile.alpha3)


@pytest.fixture(scope="session")
def gold3() -> GoldPipeline:
    return GoldPipeline(3)


@pytest.fixture(scope="session")
def gold5() -> GoldPipeline:
    return GoldPipeline(5)


@pytest.fixture
def k4() -> RelationPartition:
    return RelationPartition.from_rows(
        [
            [0, 1, 1, 1],
            [1, 0, 1, 1],
            [1, 1, 0, 1],
            [1, 1, 1, 0],
        ]
    )
