"""Exact graded Betti numbers, Hilbert series and quadratic-strand bounds."""

from .betti import BettiTable, betti_number, betti_table, full_betti_table, lemma_aci_check, quadratic_strand
from .bounds import check_theorem, remark_bound, sharpness_certificate, strand_bound, vandermonde_check
from .constructions import complete_intersection, corpus, gamma, lpp_L, prime_candidate, stanley_reisner
from .field import FieldSpec, default_field
from .groebner import buchberger, colon, dimension, intersect, linkage_witness, normal_form
from .hilbert import hilbert_function, hilbert_numerator, multiplicity
from .ideal_file import format_ideal, parse_ideal
from .lpp import PowerVector, construct_L, murai_betti, prop_closed_form
from .ring import DEGREVLEX, LEX, Ideal, MonomialOrder, Polynomial, RingDescriptor

__version__ = "0.1.0"
