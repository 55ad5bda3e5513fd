"""Threshold graphs with loops, the anti-regular graphs G_n / H_n, and their spectra."""

from antireg.errors import InvalidInputError, InvariantViolationError, NumericFailureError
from antireg.graph_core import (
    BinarySequence,
    DegreeSequence,
    ThresholdGraph,
    adjacency_matrix,
    antiregular_connected,
    antiregular_disconnected,
    complement,
    degree_sequence,
    from_binary_sequence,
    is_antiregular,
    is_connected,
)
from antireg.matrix_ops import (
    IntMatrix,
    Permutation,
    conjugate,
    determinant_exact,
    hankel_m,
    m_inverse,
    permutation_sigma,
    sign_diag,
    similarity_to_hankel,
    x_matrix,
    y_matrix,
)
from antireg.charpoly import CharPoly, char_poly_exact
from antireg.spectra import (
    Spectrum,
    closed_form_spectrum_g,
    closed_form_spectrum_x,
    closure_density_report,
    forbidden_interval_check,
    max_discrepancy,
    numeric_spectrum,
    oracle_spectrum,
    spectrum_h,
)

__version__ = "0.1.0"
