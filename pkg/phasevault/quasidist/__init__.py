from phasevault.quasidist.crosscheck import (
    CrossCheckReport,
    cross_check_reference_wigner,
    wigner_reference_approx,
    wigner_reference_closed_form,
)
from phasevault.quasidist.geometry import (
    MARGINAL_AXIS_MAP,
    axis_sum,
    line_family,
    line_sum,
    marginal,
    reflected_line,
    squeeze_grid,
    translate_grid,
)
from phasevault.quasidist.grid import Kernel, Normalization, QuasiDistGrid, SOrder
from phasevault.quasidist.kernel import (
    Q_SCALE,
    coherent_family,
    displacement_traces,
    fiducial_overlaps,
    hermitian_weyl_sum,
    kernel,
    kernel_coefficients,
    q_function,
    quasidist,
    reconstruct,
)

__all__ = [
    "MARGINAL_AXIS_MAP",
    "Q_SCALE",
    "CrossCheckReport",
    "Kernel",
    "Normalization",
    "QuasiDistGrid",
    "SOrder",
    "axis_sum",
    "coherent_family",
    "cross_check_reference_wigner",
    "displacement_traces",
    "fiducial_overlaps",
    "hermitian_weyl_sum",
    "kernel",
    "kernel_coefficients",
    "line_family",
    "line_sum",
    "marginal",
    "q_function",
    "quasidist",
    "reconstruct",
    "reflected_line",
    "squeeze_grid",
    "translate_grid",
    "wigner_reference_approx",
    "wigner_reference_closed_form",
]
