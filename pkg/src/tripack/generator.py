"""Seeded random tripartite instances.

Randomness comes from SplitMix64 so that any implementation can rebuild
the same instance from the same seed. One step of the generator is::

    state = (state + 0x9E3779B97F4A7C15) mod 2**64
    z = state
    z = ((z ^ (z >> 30)) * 0xBF58476D1CE4E5B9) mod 2**64
    z = ((z ^ (z >> 27)) * 0x94D049BB133111EB) mod 2**64
    return z ^ (z >> 31)

A uniform double is ``(next() >> 11) * 2**-53``; a pair is included when
that double is below its density. Vertex ids are ``0..p-1`` for A,
``p..p+q-1`` for B and ``p+q..p+q+r-1`` for C. Pairs are drawn
row-major (sorted first endpoint, then sorted second endpoint), side by
side in the order AB, AC, BC; sides that are complete by mode consume
no draws.
"""

from __future__ import annotations

from dataclasses import dataclass

from .graph import Edge, TripartiteGraph

MASK64 = (1 << 64) - 1
MODES = ("bilateral", "complete", "general")


class SplitMix64:
    def __init__(self, seed: int):
        self.state = seed & MASK64

    def next(self) -> int:
        self.state = (self.state + 0x9E3779B97F4A7C15) & MASK64
        z = self.state
        z = ((z ^ (z >> 30)) * 0xBF58476D1CE4E5B9) & MASK64
        z = ((z ^ (z >> 27)) * 0x94D049BB133111EB) & MASK64
        return z ^ (z >> 31)

    def random(self) -> float:
        return (self.next() >> 11) * 2.0 ** -53


@dataclass(frozen=True)
class GenSpec:
    p: int
    q: int
    r: int
    bc_density: float = 1.0
    mode: str = "bilateral"
    ab_density: float = 1.0
    ac_density: float = 1.0
    seed: int = 0

    def __post_init__(self) -> None:
        if min(self.p, self.q, self.r) < 0:
            raise ValueError("part sizes must be non-negative")
        if self.mode not in MODES:
            raise ValueError(f"mode must be one of {MODES}, not {self.mode!r}")
        for name in ("bc_density", "ab_density", "ac_density"):
            if not 0.0 <= getattr(self, name) <= 1.0:
                raise ValueError(f"{name} must lie in [0, 1]")


def _sample(rng: SplitMix64, X: range, Y: range, density: float) -> list[Edge]:
    return [(x, y) for x in X for y in Y if rng.random() < density]


def generate(spec: GenSpec) -> TripartiteGraph:
    A = range(spec.p)
    B = range(spec.p, spec.p + spec.q)
    C = range(spec.p + spec.q, spec.p + spec.q + spec.r)
    rng = SplitMix64(spec.seed)
    if spec.mode == "general":
        ab = _sample(rng, A, B, spec.ab_density)
        ac = _sample(rng, A, C, spec.ac_density)
    else:
        ab = [(a, b) for a in A for b in B]
        ac = [(a, c) for a in A for c in C]
    if spec.mode == "complete":
        bc = [(b, c) for b in B for c in C]
    else:
        bc = _sample(rng, B, C, spec.bc_density)
    return TripartiteGraph(tuple(A), tuple(B), tuple(C), tuple(ab), tuple(ac), tuple(bc))
