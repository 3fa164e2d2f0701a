"""Sequence spaces: weighted l^s, dyadically blocked l(p,q,alpha), ces(s).

Also the exponent calculus ``q * s`` that describes multipliers between the
blocked spaces.  Sequences are finite and indexed from 0; block 0 is ``{0}``
and block ``k >= 1`` is ``[2^(k-1), 2^k)``.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from typing import Sequence, Union

import numpy as np
from scipy.special import zeta

__all__ = [
    "BlockedSeq",
    "PowerWeight",
    "block_of",
    "qstar",
    "blocked_norm",
    "lp_seq_norm",
    "ces_norm",
    "kellogg_target_params",
]

INF = math.inf
Exponent = Union[float, Fraction]


def block_of(n: int) -> int:
    """Index of the dyadic block holding position ``n``."""
    if n < 0:
        raise ValueError("positions are nonnegative")
    return 0 if n == 0 else n.bit_length()


@dataclass(frozen=True, eq=False)
class BlockedSeq:
    entries: np.ndarray

    def __post_init__(self) -> None:
        e = np.array(self.entries, dtype=np.complex128).reshape(-1)
        e.setflags(write=False)
        object.__setattr__(self, "entries", e)

    def __len__(self) -> int:
        return self.entries.size

    @property
    def n_blocks(self) -> int:
        return block_of(len(self) - 1) + 1 if len(self) else 0

    def block_starts(self) -> np.ndarray:
        return np.array([0] + [1 << (k - 1) for k in range(1, self.n_blocks)], dtype=np.int64)

    def blocks(self) -> list[np.ndarray]:
        starts = list(self.block_starts()) + [len(self)]
        return [self.entries[a:b] for a, b in zip(starts[:-1], starts[1:])]


@dataclass(frozen=True)
class PowerWeight:
    """``w(0) = 1`` and ``w(n) = n^alpha`` for ``n >= 1``."""

    alpha: float = 0.0

    def __post_init__(self) -> None:
        if not math.isfinite(self.alpha):
            raise ValueError("weight exponent must be finite")

    def __call__(self, n: np.ndarray) -> np.ndarray:
        n = np.asarray(n, dtype=np.float64)
        if self.alpha == 0:
            return np.ones_like(n)
        return np.where(n == 0, 1.0, np.power(np.maximum(n, 1.0), self.alpha))


def _as_seq(x) -> BlockedSeq:
    if isinstance(x, BlockedSeq):
        return x
    if hasattr(x, "coeffs"):
        return BlockedSeq(x.coeffs)
    return BlockedSeq(np.asarray(x))


def _as_weight(w) -> PowerWeight:
    return w if isinstance(w, PowerWeight) else PowerWeight(float(w))


def qstar(q: Exponent, s: Exponent) -> Exponent:
    """``q * s``: ``s`` if ``q = inf``, ``qs/(q - s)`` if ``s < q < inf``, else ``inf``.

    Exact on ``Fraction`` inputs (with ``math.inf`` for infinity).
    """
    if not (q > 0 and s > 0):
        raise ValueError(f"exponents must be positive, got q={q}, s={s}")
    if q == INF:
        return s
    if q <= s:
        return INF
    return q * s / (q - s)


def _weighted_abs(x: BlockedSeq, weight: PowerWeight) -> np.ndarray:
    return np.abs(x.entries) * weight(np.arange(len(x)))


def _lp(a: np.ndarray, p: float) -> float:
    if a.size == 0:
        return 0.0
    if p == INF:
        return float(a.max())
    return float(np.sum(np.power(a, p)) ** (1.0 / p))


def blocked_norm(x, p: float, q: float, weight: PowerWeight | float = 0.0) -> float:
    """``|| (||w x restricted to block k||_{l^p})_k ||_{l^q}``."""
    x = _as_seq(x)
    a = _weighted_abs(x, _as_weight(weight))
    if a.size == 0:
        return 0.0
    starts = x.block_starts()
    if p == INF:
        inner = np.maximum.reduceat(a, starts)
    else:
        inner = np.power(np.add.reduceat(np.power(a, p), starts), 1.0 / p)
    return _lp(inner, q)


def lp_seq_norm(x, s: float, weight: PowerWeight | float = 0.0) -> float:
    x = _as_seq(x)
    return _lp(_weighted_abs(x, _as_weight(weight)), s)


def ces_norm(x, s: float, L: int | None = None) -> float:
    """Cesaro norm ``(sum_{n>=1} ((1/n) sum_{k=1}^n |x_k|)^s)^(1/s)``.

    Entry ``x_0`` does not take part.  With ``L`` the outer sum stops at
    ``n = L``; with ``L=None`` the tail beyond the last entry, where the inner
    sum is constant, is added in closed form through the Hurwitz zeta function.
    """
    if not (s > 1 and s < INF):
        raise ValueError(f"ces(s) needs 1 < s < inf, got {s}")
    a = np.abs(_as_seq(x).entries[1:])
    n_last = a.size
    if L is not None and L < n_last:
        raise ValueError(f"truncation L={L} is shorter than the sequence ({n_last})")
    if n_last == 0:
        return 0.0
    csum = np.cumsum(a)
    n = np.arange(1, n_last + 1, dtype=np.float64)
    head = np.power(csum / n, s).tolist()
    total = csum[-1]
    if L is None:
        tail = total**s * float(zeta(s, n_last + 1)) if total > 0 else 0.0
    else:
        m = np.arange(n_last + 1, L + 1, dtype=np.float64)
        tail = math.fsum(np.power(total / m, s).tolist())
    return (math.fsum(head) + tail) ** (1.0 / s)


def kellogg_target_params(
    p: Exponent, q: Exponent, alpha: float, r: Exponent, s: Exponent, beta: float
) -> tuple[Exponent, Exponent, float]:
    """Parameters of the multiplier space ``(l(p,q,alpha), l(r,s,beta))``."""
    return qstar(p, r), qstar(q, s), beta - alpha
