"""Fast discrete Hartley and Walsh-Hadamard transforms for real signals.

The package pairs every fast path with a brute-force oracle and an
instrumented driver that counts real multiplications and additions, so
both the numerics and the arithmetic-complexity claims are checkable.
"""

from .core import (
    DEFAULT_TOLERANCE,
    LengthMismatchError,
    NotPowerOfTwoError,
    OddLengthError,
    PlanSizeMismatchError,
    Tolerance,
    TransformError,
    as_signal,
    cas,
    require_pow2,
    spectra_close,
)
from .dft_bridge import dft_via_fht, fourier_from_hartley, hartley_from_fourier
from .fht import (
    FhtPlan,
    HalfWaveParts,
    dht2,
    fht,
    fht_recursive,
    fht_with_plan,
    half_wave_split,
    ifht,
    reconstruct_from_halfwaves,
    twiddle_odd,
)
from .fwht import fwht, fwht_inplace, ifwht
from .opcount import (
    CountingMode,
    OpCount,
    counted_dht_naive,
    counted_fht,
    counted_fwht,
    dht_naive_op_count,
    fwht_op_count,
)
from .oracles import dft_naive, dht_naive, fwht_naive, hadamard_matrix, idht_naive
from .signal_io import read_complex_spectrum, read_signal, write_spectrum
from .verify import VerificationReport, run_verification

__version__ = "0.1.0"

__all__ = [
    "cas",
    "require_pow2",
    "as_signal",
    "spectra_close",
    "Tolerance",
    "DEFAULT_TOLERANCE",
    "TransformError",
    "NotPowerOfTwoError",
    "LengthMismatchError",
    "OddLengthError",
    "PlanSizeMismatchError",
    "dht_naive",
    "idht_naive",
    "dft_naive",
    "fwht_naive",
    "hadamard_matrix",
    "HalfWaveParts",
    "half_wave_split",
    "reconstruct_from_halfwaves",
    "twiddle_odd",
    "dht2",
    "FhtPlan",
    "fht",
    "fht_recursive",
    "fht_with_plan",
    "ifht",
    "fwht",
    "fwht_inplace",
    "ifwht",
    "hartley_from_fourier",
    "fourier_from_hartley",
    "dft_via_fht",
    "OpCount",
    "CountingMode",
    "counted_fht",
    "counted_fwht",
    "counted_dht_naive",
    "dht_naive_op_count",
    "fwht_op_count",
    "read_signal",
    "read_complex_spectrum",
    "write_spectrum",
    "run_verification",
    "VerificationReport",
    "__version__",
]
