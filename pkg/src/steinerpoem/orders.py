"""Order arithmetic: which point counts admit a Steiner triple system."""

from __future__ import annotations


class InadmissibleOrderError(ValueError):
    """Raised when an operation needs an order u with u mod 6 in {1, 3}."""


def admissible_order(u: int) -> bool:
    """True iff a triple system of order ``u`` can exist (u mod 6 in {1, 3})."""
    return u % 6 in (1, 3)


def require_admissible(u: int) -> None:
    """Reject orders that cannot carry a triple system.

    Raises InadmissibleOrderError with a message naming the offending order.
    """
    if not isinstance(u, int) or isinstance(u, bool):
        raise TypeError(f"order must be an int, got {type(u).__name__}")
    if not admissible_order(u):
        raise InadmissibleOrderError(
            f"order {u} inadmissible: a Steiner triple system exists only "
            f"when the order is congruent to 1 or 3 mod 6"
        )
    if u < 3:
        raise InadmissibleOrderError(
            f"order {u} inadmissible: at least 3 points are required"
        )


def counts_for(u: int) -> tuple[int, int]:
    """Return (block count, replication) for an admissible order.

    Every admissible order u carries exactly u*(u-1)/6 triples, and each
    point sits in exactly (u-1)/2 of them.
    """
    require_admissible(u)
    return u * (u - 1) // 6, (u - 1) // 2
