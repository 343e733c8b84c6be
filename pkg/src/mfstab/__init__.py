"""Exact graded matrix factorizations and stable categories over k[x,y]/(x^2 y) and k[x,y]/(x^2)."""

__version__ = "0.1.0"

from .fields import GF, QQ, CharacteristicError, parse_field  # noqa: E402
from .algebra import Ainf, Dinf, GradedPoly, Monomial, RingSpec, normal_form, parse_poly, ring_piece_basis  # noqa: E402
from .catalogue import Label, LabelSum, parse_label, resolve, syzygy_label, suspend_label, twist_label  # noqa: E402
from .stable_hom import ext1_dim, hom_dim, is_stably_iso, stable_hom  # noqa: E402
