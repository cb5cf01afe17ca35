"""Exact computations with vector bundles on curves up to A^1-concordance.

Splitting types on P^1, extension families as Laurent cocycles, replayable
concordance certificates, and Chow-ring tests for A^1-weak equivalence of
projective bundles.
"""

from .bundle_p1 import (
    SplitBundle,
    det,
    direct_sum,
    dual,
    ext1_dim,
    format_bundle,
    globally_generated,
    h0,
    h1,
    min_gg_twist,
    tensor,
    twist,
)
from .chow import (
    GradedIsoWitness,
    ProjBundleRing,
    enumerate_graded_isos,
    find_graded_iso,
    reduce,
    verify_theorem_count,
    weak_equivalent_curve,
    weak_equivalent_p1,
)
from .concordance import (
    BundleClass,
    ConcordanceCertificate,
    canonical_form,
    concordant,
    generate_certificate,
    verify_certificate,
)
from .laurent import LaurentMatrix, LaurentPoly
from .parsing import ParseError, parse_bundle, parse_matrix
from .pic_group import PicElement, PicGroup, divisible_by
from .transition_p1 import ExtClass, build_extension, family, splitting_type, twist_matrix

__version__ = "0.1.0"
