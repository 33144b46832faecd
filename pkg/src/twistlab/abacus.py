"""Beta-numbers, abacus displays, p-cores and block data.

A partition with b beads is encoded by its beta-numbers beta_i = lambda_i +
b - i (1-indexed), placed on an abacus with p runners: position n sits on
runner n mod p at level n // p.  Sliding every bead as far down its runner
as possible yields the p-core; the total number of single-step slides is the
p-weight.  Cores and weights label blocks, so the census groups partitions
by that pair.
"""

from __future__ import annotations

from dataclasses import dataclass
from math import ceil
from typing import Optional

from .errors import TooFewBeads
from .partitions import Partition, enumerate_partitions


@dataclass(frozen=True)
class AbacusDisplay:
    """Bead positions (strictly decreasing beta-numbers) on p runners."""

    p: int
    beta: tuple[int, ...]

    def __post_init__(self):
        if self.p < 2:
            raise ValueError("p must be at least 2")
        if any(b < 0 for b in self.beta):
            raise ValueError("beta-numbers must be nonnegative")
        if any(x <= y for x, y in zip(self.beta, self.beta[1:])):
            raise ValueError("beta-numbers must be strictly decreasing")

    @property
    def beads(self) -> int:
        return len(self.beta)

    def runner(self, r: int) -> tuple[int, ...]:
        """Levels occupied on runner r, lowest first."""
        return tuple(sorted(b // self.p for b in self.beta if b % self.p == r))

    def picture(self) -> list[str]:
        """One text row per runner: 'o' for a bead, '.' for a gap."""
        levels = max((b // self.p for b in self.beta), default=-1) + 1
        occupied = set(self.beta)
        rows = []
        for r in range(self.p):
            rows.append(
                "".join("o" if lvl * self.p + r in occupied else "." for lvl in range(levels))
            )
        return rows


@dataclass(frozen=True)
class BlockData:
    """The p-core and weight shared by every partition in a block."""

    core: Partition
    weight: int


def default_beads(lam: Partition, p: int) -> int:
    """Bead count used when the caller does not pick one.

    The length of the partition rounded up to a positive multiple of p, so
    runner pictures come out canonical (every runner the same length).
    """
    return p * ceil(max(len(lam), 1) / p)


def to_abacus(lam: Partition, p: int, beads: Optional[int] = None) -> AbacusDisplay:
    """Encode lam on b beads; b defaults to default_beads(lam, p)."""
    b = default_beads(lam, p) if beads is None else beads
    if b < len(lam):
        raise TooFewBeads(f"{b} beads cannot hold {len(lam)} rows")
    beta = tuple(lam.part(i) + b - 1 - i for i in range(b))
    return AbacusDisplay(p, beta)


def from_abacus(display: AbacusDisplay) -> Partition:
    """Recover the partition: lambda_i = beta_i - (b - i)."""
    b = display.beads
    return Partition(display.beta[i] - (b - 1 - i) for i in range(b))


def p_core(lam: Partition, p: int, beads: Optional[int] = None) -> BlockData:
    """Slide every bead maximally down its runner.

    Returns the resulting core partition together with the number of
    single-gap slides performed, which is the p-weight of lam.  The answer
    does not depend on the bead count.
    """
    display = to_abacus(lam, p, beads)
    slid: list[int] = []
    weight = 0
    for r in range(p):
        levels = display.runner(r)
        for target, level in enumerate(levels):
            weight += level - target
            slid.append(target * p + r)
    slid.sort(reverse=True)
    core = from_abacus(AbacusDisplay(p, tuple(slid)))
    return BlockData(core, weight)


def _rim_path(rows: list[int]) -> list[tuple[int, int]]:
    """Rim cells from the top-right corner down to the bottom-left."""
    if not rows:
        return []
    path = []
    i, j = 0, rows[0] - 1
    while True:
        path.append((i, j))
        below = rows[i + 1] if i + 1 < len(rows) else 0
        if below > j:
            i += 1
        elif j > 0:
            j -= 1
        else:
            break
    return path


def _strip_window(rows: list[int], window: list[tuple[int, int]]) -> Optional[list[int]]:
    """Remove the given rim cells if doing so leaves a partition."""
    removed = [0] * len(rows)
    for i, _ in window:
        removed[i] += 1
    new_rows = [rows[i] - removed[i] for i in range(len(rows))]
    prev = None
    for entry in new_rows:
        if entry < 0 or (prev is not None and entry > prev):
            return None
        prev = entry
    # removed cells must be the rightmost ones of their rows
    for i, j in window:
        if j < new_rows[i]:
            return None
    return [r for r in new_rows if r > 0]


def p_core_by_stripping(lam: Partition, p: int) -> BlockData:
    """Brute-force oracle: peel removable rim strips of p cells until stuck.

    Works directly on the Young diagram, with no beta-numbers anywhere, so
    it is a genuinely independent check on p_core.
    """
    rows = list(lam.parts)
    weight = 0
    while True:
        path = _rim_path(rows)
        stripped = None
        for k in range(len(path) - p + 1):
            stripped = _strip_window(rows, path[k : k + p])
            if stripped is not None:
                break
        if stripped is None:
            return BlockData(Partition(rows), weight)
        rows = stripped
        weight += 1


def is_p_by_p(lam: Partition, p: int) -> bool:
    """True when every part and every part-multiplicity is divisible by p.

    Equivalently, both lam and its conjugate are p times a partition; the
    diagram is tiled by p-by-p squares.
    """
    if any(part % p for part in lam):
        return False
    run = 0
    prev = None
    for part in lam.parts + (None,):
        if part == prev:
            run += 1
            continue
        if prev is not None and run % p:
            return False
        prev, run = part, 1
    return True


@dataclass(frozen=True)
class BlockRecord:
    """One block of partitions of d: shared core/weight plus the members."""

    core: Partition
    weight: int
    members: tuple[Partition, ...]
    p_by_p_members: tuple[Partition, ...]


def block_census(d: int, p: int) -> list[BlockRecord]:
    """Group all partitions of d by (p-core, weight), flagging p-by-p members.

    Blocks are listed by decreasing lexicographic core; members keep
    enumeration order.
    """
    groups: dict[tuple[int, ...], list[Partition]] = {}
    for lam in enumerate_partitions(d):
        data = p_core(lam, p)
        groups.setdefault(data.core.parts, []).append(lam)
    records = []
    for core_parts in sorted(groups, reverse=True):
        members = groups[core_parts]
        core = Partition(core_parts)
        weight = (d - core.size) // p
        flagged = tuple(m for m in members if is_p_by_p(m, p))
        records.append(BlockRecord(core, weight, tuple(members), flagged))
    return records
