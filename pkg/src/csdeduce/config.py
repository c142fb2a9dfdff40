from dataclasses import dataclass


@dataclass(frozen=True)
class Limits:
    """Size caps for the exponential parts of the library.

    Each operation takes an explicit ``cap=`` override; these are the defaults.
    """

    oracle_vars: int = 20
    exhaustive_product: int = 10**7
    materialize_vars: int = 16
    coverage_vars: int = 24
    enumeration: int = 10**6
    triangle_clauses: int = 8


LIMITS = Limits()
