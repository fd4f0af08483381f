"""Symmetric group characters by the Murnaghan-Nakayama rule."""

from __future__ import annotations

from functools import cache

from spinunip.partitions import Partition


def _beta_set(lam: Partition, length: int) -> tuple[int, ...]:
    return tuple(lam.part(i + 1) + (length - 1 - i) for i in range(length))


def _from_beta(beta: list[int]) -> Partition:
    beta = sorted(beta, reverse=True)
    length = len(beta)
    return Partition(b - (length - 1 - i) for i, b in enumerate(beta))


def rim_hooks(lam: Partition, k: int) -> list[tuple[Partition, int]]:
    """All ``(lam minus a k-rim hook, (-1)^height)``."""
    length = len(lam) + k
    beta = _beta_set(lam, length)
    bset = set(beta)
    out = []
    for b in beta:
        if b - k >= 0 and b - k not in bset:
            height = sum(1 for c in beta if b - k < c < b)
            new = [c for c in beta if c != b] + [b - k]
            out.append((_from_beta(new), -1 if height % 2 else 1))
    return out


@cache
def sym_character(lam: Partition, rho: Partition) -> int:
    """chi^lam evaluated at a permutation of cycle type ``rho``."""
    lam, rho = Partition(lam), Partition(rho)
    if lam.size != rho.size:
        raise ValueError(f"size mismatch: {lam} vs {rho}")
    if not rho:
        return 1
    k, rest = rho[0], Partition(rho[1:])
    return sum(sign * sym_character(mu, rest) for mu, sign in rim_hooks(lam, k))
