from .polyalg import BiPoly, IntPoly, LaurentSeries, LPoly, RationalFn
from .semigroup import NumericalSemigroup, make_semigroup
from .semimodule import SemiModule, count_semimodules, enumerate_semimodules, igen
from .zeta import SingularityType, ZetaFn, parse_singularity, zeta_closed_form
from .kawai import BpsVector, CurveSpec, bps_decompose, curve_euler_series, kawai_product_series
from .severi import SeveriDegrees, severi_degrees
from .homfly import HomflyPoly, compare_bottom_row, torus2_homfly

from ._version import __version__
