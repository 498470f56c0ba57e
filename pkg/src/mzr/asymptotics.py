"""Pole structure of the r-fold functions: locations, orders, and the
leading constants C_r(k) in zeta_r(s) ~ C_r(k) (k s - 1)^(-floor(r/k)).

Three routes to the same constant are kept deliberately separate:

* `coefficient_closed_form` -- the explicit formulas (factorials, powers
  of k, and a single lower-fold value at 1/k);
* `coefficient_recursive`   -- the recursion the closed forms are proved
  from, restricted to terms sharing the maximal pole order;
* `coefficient_numeric`     -- Richardson extrapolation of the multiplied
  singularity, no formula input at all.
"""
from __future__ import annotations

import math
from dataclasses import dataclass

from .errors import NonConvergenceError, ParameterRangeError
from .multizeta import R_MAX, multizeta
from .riemann_kernel import riemann_zeta

__all__ = [
    "NUMERIC_R_MAX",
    "PoleSpec",
    "pole_order",
    "pole_spec",
    "coefficient_closed_form",
    "coefficient_recursive",
    "coefficient_numeric",
    "periodicity_check",
    "pole_side_signs",
]

# The numeric limit extraction starts its abscissa ladder at 1/k + 1e-2;
# for k <= 10 that still lies inside (1/k, 1/(k-1)), for larger k it would
# step over the neighbouring pole, hence the cap.
NUMERIC_R_MAX = 10

_EPS_START = 1e-2
_RICHARDSON_DEPTH = 6
_CONVERGENCE_REL = 1e-2


def _check_rk(r: int, k: int) -> None:
    if not isinstance(r, int) or isinstance(r, bool):
        raise ParameterRangeError(f"fold count must be an integer, got {r!r}")
    if not isinstance(k, int) or isinstance(k, bool):
        raise ParameterRangeError(f"pole index must be an integer, got {k!r}")
    if not 1 <= r <= R_MAX:
        raise ParameterRangeError(f"fold count {r} outside [1, {R_MAX}]")
    if not 1 <= k <= r:
        raise ParameterRangeError(f"pole index {k} outside [1, {r}]")


def pole_order(r: int, k: int) -> int:
    """Order of the pole of the r-fold function at s = 1/k."""
    _check_rk(r, k)
    return r // k


@dataclass(frozen=True)
class PoleSpec:
    """One asymptote of the r-fold function."""

    r: int
    k: int
    location: float
    order: int
    constant: float
    sign: int

    def __post_init__(self):
        _check_rk(self.r, self.k)
        if self.order != self.r // self.k:
            raise ParameterRangeError(
                f"order {self.order} inconsistent with floor({self.r}/{self.k})"
            )
        if self.sign not in (-1, 1) or self.sign * self.constant <= 0.0:
            raise ParameterRangeError(
                "sign must be +/-1 and agree with the constant"
            )


def coefficient_closed_form(r: int, k: int) -> float:
    """C_r(k) from the explicit formulas.

    Writing r = k*q + l with 0 <= l < k:
      k = 1        ->  1/r!
      l = 0        ->  (-1)^((k-1)q) / (k^q q!)
      1 <= l < k   ->  the l = 0 value times the l-fold function at 1/k
    (for q = 1 the last case is ((-1)^(k-1)/k) times the (r-k)-fold value).
    """
    _check_rk(r, k)
    if k == 1:
        return 1.0 / math.factorial(r)
    q, ell = divmod(r, k)
    lead = (-1.0) ** ((k - 1) * q) / (k ** q * math.factorial(q))
    if ell == 0:
        return lead
    return lead * multizeta(ell, 1.0 / k)


def coefficient_recursive(r: int, k: int) -> float:
    """C_r(k) by the order-preserving recursion, independent of the closed
    forms:

        r C_r(k) = sum*_j (-1)^(j-1) zeta(j/k) C_{r-j}(k) + (-1)^(k-1) D,

    where sum* keeps 1 <= j <= r-k with j != k and floor((r-j)/k) equal to
    floor(r/k), and D is C_{r-k}(k) when k <= r/2, the (r-k)-fold value at
    1/k when r/2 < k < r, and 1 when k = r.
    """
    _check_rk(r, k)
    zeta_cache: dict[int, float] = {}

    def zeta_at(j: int) -> float:
        if j not in zeta_cache:
            zeta_cache[j] = riemann_zeta(j / k)
        return zeta_cache[j]

    memo: dict[int, float] = {}

    def level(rr: int) -> float:
        # C_rr(k) for k <= rr <= r with floor(rr/k) tracking its own order.
        if rr in memo:
            return memo[rr]
        own_order = rr // k
        acc = 0.0
        for j in range(1, rr - k + 1):
            if j == k or (rr - j) // k != own_order:
                continue
            acc += (-1.0) ** (j - 1) * zeta_at(j) * level(rr - j)
        if rr == k:
            tail = 1.0
        elif rr >= 2 * k:
            tail = level(rr - k)
        else:
            tail = multizeta(rr - k, 1.0 / k)
        out = (acc + (-1.0) ** (k - 1) * tail) / rr
        memo[rr] = out
        return out

    return level(r)


def coefficient_numeric(r: int, k: int) -> float:
    """C_r(k) by pure limit extraction: evaluate

        g(eps) = zeta_r(1/k + eps) * (k * eps)^floor(r/k)

    on the halving ladder eps = 1e-2, 5e-3, ... and Richardson-extrapolate
    (the correction series is a Taylor series in eps).  Raises
    NonConvergenceError when the last two extrapolants differ by more than
    1e-2 relative, rather than returning a doubtful number.
    """
    _check_rk(r, k)
    if r > NUMERIC_R_MAX:
        raise ParameterRangeError(
            f"numeric extraction supports fold counts up to {NUMERIC_R_MAX}, got {r}"
        )
    order = r // k
    ladder = [_EPS_START / 2 ** i for i in range(_RICHARDSON_DEPTH)]
    rows = [
        [multizeta(r, 1.0 / k + eps) * (k * eps) ** order for eps in ladder]
    ]
    for level in range(1, _RICHARDSON_DEPTH):
        prev = rows[-1]
        factor = 2.0 ** level
        rows.append(
            [
                (factor * prev[i + 1] - prev[i]) / (factor - 1.0)
                for i in range(len(prev) - 1)
            ]
        )
    diagonal = tuple(row[-1] for row in rows)
    last, prior = diagonal[-1], diagonal[-2]
    scale = max(abs(last), 1e-300)
    if abs(last - prior) > _CONVERGENCE_REL * scale:
        raise NonConvergenceError(
            f"extrapolated limit for ({r}, {k}) did not settle: "
            f"last two estimates {prior!r} and {last!r}",
            estimates=diagonal,
        )
    return last


def pole_spec(r: int, k: int) -> PoleSpec:
    """Assemble the full record for the pole of the r-fold function at 1/k."""
    _check_rk(r, k)
    order = r // k
    constant = coefficient_closed_form(r, k)
    sign = (-1) ** (r + order)
    return PoleSpec(
        r=r, k=k, location=1.0 / k, order=order, constant=constant, sign=sign
    )


def periodicity_check(k: int, q_max: int) -> bool:
    """Verify the modular pattern of the constants: for 1 <= q < q_max and
    0 <= l < k,

        C_{kq+l}(k) / C_{k(q+1)+l}(k) = (-1)^(k-1) k (q+1)

    to relative 1e-12.  Returns whether every ratio passes.
    """
    if not isinstance(k, int) or isinstance(k, bool) or k < 2:
        raise ParameterRangeError(f"modulus must be an integer >= 2, got {k!r}")
    if not isinstance(q_max, int) or isinstance(q_max, bool) or q_max < 2:
        raise ParameterRangeError(
            f"need at least two repetitions to compare, got q_max = {q_max!r}"
        )
    if k * (q_max + 1) - 1 > R_MAX:
        raise ParameterRangeError(
            f"k*(q_max+1)-1 = {k * (q_max + 1) - 1} exceeds the fold cap {R_MAX}"
        )
    for q in range(1, q_max):
        expected = (-1.0) ** (k - 1) * k * (q + 1)
        for ell in range(k):
            hi = coefficient_closed_form(k * (q + 1) + ell, k)
            lo = coefficient_closed_form(k * q + ell, k)
            ratio = lo / hi
            if abs(ratio - expected) > 1e-12 * abs(expected):
                return False
    return True


def pole_side_signs(r: int, k: int, eps: float = 1e-4) -> tuple[int, int]:
    """Signs of the r-fold function sampled at 1/k - eps and 1/k + eps.

    For an even-order pole both signs match; for odd order they differ.
    """
    _check_rk(r, k)
    if not 0.0 < eps < 1e-3:
        raise ParameterRangeError("side step must lie in (0, 1e-3)")
    left = multizeta(r, 1.0 / k - eps)
    right = multizeta(r, 1.0 / k + eps)
    return (1 if left > 0 else -1, 1 if right > 0 else -1)
