"""Exact rational scalar backend.

All arithmetic in this package is exact.  gmpy2.mpq is used when present
(it is several times faster in the localization sums); otherwise we fall
back to fractions.Fraction.  Python ints mix freely with either.
"""

from fractions import Fraction

try:
    from gmpy2 import mpq as QQ

    BACKEND = "gmpy2"
except ImportError:  # pragma: no cover
    QQ = Fraction
    BACKEND = "fractions"

ZERO = QQ(0)
ONE = QQ(1)


def qq(x):
    """Coerce to an exact rational."""
    return QQ(x)


def is_integral(x) -> bool:
    if isinstance(x, int):
        return True
    return x.denominator == 1


def as_int(x) -> int:
    """Exact conversion to int, refusing to round."""
    if isinstance(x, int):
        return x
    if x.denominator != 1:
        raise ValueError(f"not an integer: {x!r}")
    return int(x.numerator)


def rat_str(x) -> str:
    """Decimal string (or p/q) safe for JSON output at any precision."""
    return str(as_int(x)) if is_integral(x) else str(x)
