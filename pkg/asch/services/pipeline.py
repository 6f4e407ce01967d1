"""
Scheme Pipeline - Complete Integration

Chains the services the way the command line uses them:
1. Gold code, its 4-class scheme and the RM(1,m)-coset spread
2. Axiom certification and spectra
3. Cover recognition
4. Spread validation and fission
5. Weighing matrix extraction and unbiasedness
"""

import logging
from typing import Optional, Tuple

import numpy as np

from ..core.exceptions import InputError, MultiplicityMismatch
from ..models.code import GoldCode
from ..models.cover import CoverProfile
from ..models.fission import FissionScheme
from ..models.scheme import PointPartition, RelationPartition
from ..models.weighing import MuwmBoundReport, UnbiasedCertificate, WeighingFamily
from .clique_fission import fission, validate_spread
from .gold_code import build_gold_code, rm_coset_partition, scheme_from_code
from .imprimitivity import recognize_cover
from .muwm import extract_weighing_family, gram_blocks, muwm_bound, verify_unbiased
from .scheme_core import verify_axioms

logger = logging.getLogger(__name__)


class SchemePipeline:
    def gold(self, m: int) -> Tuple[GoldCode, RelationPartition, PointPartition]:
        """Code, distance-class scheme and coset spread at degree m."""
        code = build_gold_code(m)
        return code, scheme_from_code(code), rm_coset_partition(code)

    def cover(self, rp: RelationPartition) -> CoverProfile:
        return recognize_cover(verify_axioms(rp))

    def fission(self, rp: RelationPartition, blocks: PointPartition) -> Tuple[CoverProfile, FissionScheme]:
        """Recognize the cover, validate the spread and refine R_2."""
        profile = self.cover(rp)
        spread = validate_spread(profile, blocks)
        return profile, fission(profile, spread)

    def fused_cover(self, refined: RelationPartition) -> RelationPartition:
        """Merge R~5 back into R_2 to recover the cover from a 5-class fission."""
        rel = np.where(refined.rel == 5, 2, refined.rel)
        return RelationPartition(n=refined.n, d=4, rel=rel)

    def weighing(
        self, scheme: FissionScheme, profile: CoverProfile, flips: Optional[np.ndarray] = None
    ) -> Tuple[MuwmBoundReport, WeighingFamily, UnbiasedCertificate]:
        """Try E~3 then E~4; the first with 2 m~e equal to the clique size yields the family."""
        bound = muwm_bound(scheme, profile)
        alphas = {3: profile.alpha3, 4: profile.alpha4}
        last_error = None
        for eigenindex in (3, 4):
            try:
                grams = gram_blocks(scheme, eigenindex, scheme.cliques, flips)
            except MultiplicityMismatch as error:
                logger.info(f"[INFO] E~{eigenindex} skipped: {error}")
                last_error = error
                continue
            family = extract_weighing_family(grams, alphas[eigenindex])
            return bound, family, verify_unbiased(family)
        raise last_error

    def muwm(
        self, refined: RelationPartition, blocks: PointPartition
    ) -> Tuple[MuwmBoundReport, WeighingFamily, UnbiasedCertificate]:
        """Rebuild the fission from its fused cover and check it reproduces the input table."""
        if refined.d != 5:
            raise InputError("expected a 5-class fission scheme", {"d": refined.d})
        profile, scheme = self.fission(self.fused_cover(refined), blocks)
        # arranged labels back to the input labels; R~5 keeps its index
        labels = np.array(list(profile.arrangement) + [5])
        mismatch = labels[scheme.refined.rel] != refined.rel
        if mismatch.any():
            x, y = (int(v) for v in np.argwhere(mismatch)[0])
            raise InputError(
                "input is not the fission of its fused cover by this spread",
                {"x": x, "y": y, "given": int(refined.rel[x, y]), "expected": int(labels[scheme.refined.rel[x, y]])},
            )
        return self.weighing(scheme, profile)


# Global instance
scheme_pipeline = SchemePipeline()
