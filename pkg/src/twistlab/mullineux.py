"""The Mullineux map and its two-row symbol calculus.

The p-rim of a partition is the subset of the rim taken in segments of p
nodes, each new segment starting at the rightmost rim node of the row below
the previous segment's end.  Iterating "remove the p-rim" down to the empty
partition records a two-row symbol (a_i; r_i) of rim sizes and row counts;
rewriting the bottom row and running the iteration backwards realizes the
Mullineux involution m on p-regular partitions.

Removal is cheap and deterministic.  Insertion (the inverse) is a small
depth-first search over per-row removal counts, forward-verified before
anything is returned, so a wrong reconstruction cannot escape quietly.
"""

from __future__ import annotations

from dataclasses import dataclass
from math import ceil

from .errors import (
    AmbiguousInsertion,
    InvalidSymbol,
    NoInsertion,
    NotPRegular,
    NotPRestricted,
)
from .partitions import Partition


@dataclass(frozen=True)
class MullineuxSymbol:
    """Columns (a_i, r_i): rim size and row count of each removal step."""

    p: int
    columns: tuple[tuple[int, int], ...]

    def __post_init__(self):
        if self.p < 2:
            raise ValueError("p must be at least 2")
        prev_rows = None
        for a, r in self.columns:
            if a < 1 or r < 1:
                raise InvalidSymbol(f"column ({a};{r}) has a nonpositive entry")
            if prev_rows is not None and r > prev_rows:
                raise InvalidSymbol("row counts must be weakly decreasing")
            prev_rows = r

    @property
    def top(self) -> tuple[int, ...]:
        return tuple(a for a, _ in self.columns)

    @property
    def bottom(self) -> tuple[int, ...]:
        return tuple(r for _, r in self.columns)

    @property
    def size(self) -> int:
        return sum(self.top)


def _rim_profile(parts: tuple[int, ...], p: int) -> list[int]:
    """Nodes removed from each row when the p-rim is stripped (rule above)."""
    counts = []
    budget = p
    n = len(parts)
    for j in range(n):
        row = parts[j]
        nxt = parts[j + 1] if j + 1 < n else 0
        avail = row - nxt + 1 if nxt else row
        c = avail if avail < budget else budget
        counts.append(c)
        budget = p if c == budget else budget - c
    return counts


def _phase_length(parts: tuple[int, ...], counts: list[int], p: int) -> int:
    """How many consecutive strips reuse this exact removal profile.

    Stripping shifts every row linearly (row_j loses counts[j] per step), so
    each min(budget, avail) decision stays put over an interval of steps whose
    endpoints are exact integer bounds.  Taking the minimum over rows gives
    the run length in one O(rows) pass; the value is always at least 1.
    """
    n = len(parts)
    best = 1 << 62
    budget = p
    for j in range(n):
        c = counts[j]
        if j + 1 < n:
            slope = counts[j + 1] - c
            base = parts[j] - parts[j + 1] + 1
            if c == budget:
                # full row: avail(t) >= budget must persist
                if slope < 0:
                    best = min(best, (base - budget) // -slope + 1)
                budget = p
            else:
                # short row takes exactly avail, so avail(t) must stay frozen
                if slope != 0:
                    best = 1
                budget -= c
            if slope < 0:
                # rows must stay weakly decreasing after every strip
                best = min(best, (parts[j] - parts[j + 1]) // -slope)
        else:
            best = min(best, parts[j] // c) if c == budget else 1
    return max(best, 1)


def _strip_raw(parts: tuple[int, ...], p: int) -> tuple[tuple[int, ...], int]:
    counts = _rim_profile(parts, p)
    rest = tuple(row - c for row, c in zip(parts, counts) if row > c)
    return rest, sum(counts)


def remove_p_rim(lam: Partition, p: int) -> tuple[Partition, int]:
    """Strip the p-rim; returns the remainder and the number of nodes removed."""
    if not lam:
        raise ValueError("cannot remove a rim from the empty partition")
    rest, a = _strip_raw(lam.parts, p)
    return Partition(rest), a


def mullineux_symbol(lam: Partition, p: int) -> MullineuxSymbol:
    """Iterate p-rim removal to the empty partition, recording (a_i, r_i).

    Strips with identical profiles are batched: the profile and its run
    length are computed once and the whole run of equal columns emitted,
    which keeps huge scaled partitions (few rows, enormous parts) cheap.
    """
    if not lam.is_p_regular(p):
        raise NotPRegular(f"{lam} is not {p}-regular")
    cols: list[tuple[int, int]] = []
    parts = lam.parts
    while parts:
        counts = _rim_profile(parts, p)
        k = _phase_length(parts, counts, p)
        column = (sum(counts), len(parts))
        cols.extend([column] * k)
        parts = tuple(row - k * c for row, c in zip(parts, counts) if row > k * c)
    return MullineuxSymbol(p, tuple(cols))


def transform_symbol(sym: MullineuxSymbol) -> MullineuxSymbol:
    """Swap each row count r_i for s_i = a_i - r_i + eps_i, eps_i = [p does not divide a_i].

    This is the symbol half of the Mullineux involution; applying it twice
    gives back the input.
    """
    p = sym.p
    cols = tuple(
        (a, a - r + (1 if a % p else 0)) for a, r in sym.columns
    )
    return MullineuxSymbol(p, cols)


def _insert_raw(mu: tuple[int, ...], a: int, r: int, p: int) -> tuple[int, ...]:
    if a < 1 or r < 1:
        raise NoInsertion(f"rim size {a} and row count {r} must be positive")
    if len(mu) > r:
        raise NoInsertion(f"({', '.join(map(str, mu))}) already has more than {r} rows")
    if not (r <= a <= r * p):
        raise NoInsertion(f"a {p}-rim over {r} rows holds between {r} and {r * p} nodes")

    row_of = [mu[i] if i < len(mu) else 0 for i in range(r)]
    solutions: set[tuple[int, ...]] = set()
    counts = [0] * r
    last = r - 1

    # state: row j, remaining nodes, current budget, constraint on counts[j]
    # (an upper bound after a full-budget row, an exact value after a short one)
    def place(j: int, remaining: int, budget: int, forced: int, bound: int) -> None:
        rows_left = r - j
        if remaining < rows_left or remaining > rows_left * p:
            return
        cap = budget if budget < bound else bound
        if cap > p:
            cap = p
        if j:
            slack = row_of[j - 1] + counts[j - 1] - row_of[j]
            if cap > slack:
                cap = slack  # nu must stay weakly decreasing
        if j == last:
            c = remaining
            if c < 1 or c > cap or (forced and c != forced):
                return
            if c < budget and row_of[j] != 0:
                return  # a short final row only fits below the old diagram
            counts[j] = c
            solutions.add(tuple(counts))
            return
        if forced:
            if forced > cap:
                return
            lo = hi = forced
        else:
            lo, hi = 1, cap
        gap = row_of[j] - row_of[j + 1] + 1
        for c in range(hi, lo - 1, -1):
            counts[j] = c
            if c == budget:
                place(j + 1, remaining - c, p, 0, gap)
            elif 1 <= gap <= p:
                place(j + 1, remaining - c, budget - c, gap, gap)

    place(0, a, p, 0, p)

    verified = set()
    for sol in solutions:
        nu = tuple(row_of[i] + sol[i] for i in range(r))
        if nu[-1] < 1:
            continue
        rest, size = _strip_raw(nu, p)
        if rest == mu and size == a:
            verified.add(nu)
    if not verified:
        raise NoInsertion(f"no partition with {r} rows yields rim size {a} under {p}-rim removal")
    if len(verified) > 1:
        raise AmbiguousInsertion(
            f"{len(verified)} partitions yield the same rim data: {sorted(verified, reverse=True)}"
        )
    return verified.pop()


def insert_p_rim(mu: Partition, a: int, r: int, p: int) -> Partition:
    """The unique nu with r rows such that remove_p_rim(nu, p) == (mu, a).

    Searches per-row removal counts consistent with the rim rule, then
    forward-verifies every candidate.  Raises NoInsertion when nothing fits
    and AmbiguousInsertion if more than one nu passes (which would mean the
    rim rule is not invertible here; treated as a bug signal).
    """
    return Partition(_insert_raw(mu.parts, a, r, p))


def _cycle_strips_back(state: tuple[int, ...], cyc: list[tuple[int, ...]], p: int) -> bool:
    """Does stripping one rim per cycle entry peel state down by exactly cyc?"""
    cur = list(state)
    for c in reversed(cyc):
        if cur[-1] <= 0 or _rim_profile(tuple(cur), p) != list(c):
            return False
        for t, ct in enumerate(c):
            cur[t] -= ct
    return True


def _rebuild_run(nu: tuple[int, ...], a: int, r: int, p: int, run: int) -> tuple[int, ...]:
    """Apply `run` consecutive insertions of the same column (a, r).

    Single insertions establish the per-row growth deltas; once the last
    2q deltas show a period-q cycle, k further cycles are added in one
    arithmetic jump.  Only the bottom and top cycle of the jump need
    checking: the profile conditions are linear in the cycle index, so
    holding at both ends means every cycle in between strips the same way.
    """
    done = 0
    history: list[tuple[int, ...]] = []
    while done < run:
        left = run - done
        jumped = False
        for q in (1, 2, 3):
            if len(history) < 2 * q or left < 2 * q:
                continue
            cyc = history[-q:]
            if history[-2 * q : -q] != cyc:
                continue
            total = [sum(c[t] for c in cyc) for t in range(r)]
            bottom = tuple(nu[t] + total[t] for t in range(r))
            if not _cycle_strips_back(bottom, cyc, p):
                continue
            k = left // q
            while k >= 2:
                cand = tuple(nu[t] + k * total[t] for t in range(r))
                if _cycle_strips_back(cand, cyc, p):
                    nu = cand
                    done += k * q
                    break
                k //= 2
            else:
                nu = bottom
                done += q
            jumped = True  # history still ends with cyc
            break
        if not jumped:
            prev = nu
            nu = _insert_raw(nu, a, r, p)
            done += 1
            history.append(tuple(nu[t] - (prev[t] if t < len(prev) else 0) for t in range(r)))
            del history[:-6]
    return nu


def reconstruct_from_symbol(sym: MullineuxSymbol) -> Partition:
    """Run the removal iteration backwards, last column first.

    Runs of identical columns are rebuilt in blocks: single insertions
    establish the per-row growth pattern, and once it repeats, whole
    stretches of the run are added as one verified arithmetic jump.
    """
    p = sym.p
    cols = sym.columns
    nu: tuple[int, ...] = ()
    i = len(cols) - 1
    while i >= 0:
        a, r = cols[i]
        start = i
        while start > 0 and cols[start - 1] == (a, r):
            start -= 1
        nu = _rebuild_run(nu, a, r, p, i - start + 1)
        i = start - 1
    return Partition(nu)


def mullineux_map(lam: Partition, p: int) -> Partition:
    """The Mullineux involution on p-regular partitions."""
    if not lam.is_p_regular(p):
        raise NotPRegular(f"{lam} is not {p}-regular")
    if not lam:
        return lam
    return reconstruct_from_symbol(transform_symbol(mullineux_symbol(lam, p)))


def mullineux_restricted(lam: Partition, p: int) -> Partition:
    """The companion involution on p-restricted partitions: conjugate, map, conjugate."""
    if not lam.is_p_restricted(p):
        raise NotPRestricted(f"{lam} is not {p}-restricted")
    return mullineux_map(lam.conjugate(), p).conjugate()


def tau_closed_form(n: int, p: int) -> Partition:
    """(p-1, ..., p-1, a) with ceil(n / (p-1)) parts summing to n."""
    if n < 1:
        raise ValueError("n must be positive")
    k = ceil(n / (p - 1))
    last = n - (p - 1) * (k - 1)
    return Partition([p - 1] * (k - 1) + [last])


def tau(n: int, p: int) -> Partition:
    """The p-restricted label of the trivial module of the symmetric group on n points.

    Computed as conjugate(m((n))) and checked against the closed form
    (p-1, ..., p-1, a).
    """
    value = mullineux_map(Partition((n,)), p).conjugate()
    expected = tau_closed_form(n, p)
    if value != expected:
        raise AssertionError(f"tau({n}, {p}): {value} != closed form {expected}")
    return value


def verify_hat_identity(lam: Partition, p: int) -> bool:
    """Does m(hat(lam)) equal (p-1) * lam?  lam must have distinct parts."""
    return mullineux_map(lam.hat(p), p) == lam.scale(p - 1)


def steinberg_difference(lam: Partition, p: int) -> Partition:
    """m(p^2 lam) - m(p lam), which always comes out to p * hat(lam)."""
    diff = mullineux_map(lam.scale(p * p), p).subtract(mullineux_map(lam.scale(p), p))
    expected = lam.hat(p).scale(p)
    if diff != expected:
        raise AssertionError(f"difference {diff} is not {expected}")
    return diff
