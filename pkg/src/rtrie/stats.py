"""Workload generation and measurement.

Builds deterministic string workloads (random, lexicographic, or reverse
order), collects per-string search-path profiles, and runs wall-clock
benchmarks with rotation accounting.  Profiles are what the statistical
acceptance checks consume; benchmark reports are informational.
"""

from __future__ import annotations

import random
import statistics
import time
from dataclasses import dataclass, field

from .core import RTrie

ORDERS = ("random", "lexicographic", "reverse")

PHASES = ("insert", "search_hit", "search_miss", "delete")


@dataclass
class Workload:
    """Parameters for one generated string workload.

    ``order`` arranges the generated strings: "random" (seeded shuffle),
    "lexicographic" (the classic degenerate insertion order for unbalanced
    tries), or "reverse" (reverse lexicographic).
    """

    alphabet_size: int
    length_min: int
    length_max: int
    count: int
    order: str = "random"
    seed: int = 0

    def validate(self) -> None:
        if self.alphabet_size < 1 or self.alphabet_size > 256:
            raise ValueError(f"alphabet_size must be in [1, 256], got {self.alphabet_size}")
        if not 1 <= self.length_min <= self.length_max:
            raise ValueError(
                f"need 1 <= length_min <= length_max, got {self.length_min}..{self.length_max}")
        if self.count < 0:
            raise ValueError(f"count must be >= 0, got {self.count}")
        if self.order not in ORDERS:
            raise ValueError(f"order must be one of {ORDERS}, got {self.order!r}")
        if self.alphabet_size ** self.length_max < self.count:
            raise ValueError(
                f"cannot draw {self.count} distinct strings from alphabet "
                f"{self.alphabet_size} with max length {self.length_max}")


def generate(w: Workload) -> list[bytes]:
    """Draw ``w.count`` distinct strings, deterministically for a seed.

    Rejection-samples on collision with a retry budget of 10x count, which
    in practice only trips on configs near the feasibility boundary.
    """
    w.validate()
    rng = random.Random(w.seed)
    # small alphabets map onto lowercase letters for readable output;
    # anything larger falls back to raw byte values
    base = 0x61 if w.alphabet_size <= 26 else 0
    seen = set()
    out: list[bytes] = []
    budget = 10 * w.count
    attempts = 0
    while len(out) < w.count:
        if attempts >= budget:
            raise ValueError(
                f"gave up after {attempts} draws: workload too dense "
                f"({len(out)}/{w.count} distinct strings found)")
        attempts += 1
        k = rng.randint(w.length_min, w.length_max)
        s = bytes(base + rng.randrange(w.alphabet_size) for _ in range(k))
        if s not in seen:
            seen.add(s)
            out.append(s)
    if w.order == "lexicographic":
        out.sort()
    elif w.order == "reverse":
        out.sort(reverse=True)
    else:
        rng.shuffle(out)
    return out


@dataclass
class ProfileRow:
    key: bytes
    length: int
    sidesteps: int
    depth: int


@dataclass
class DepthProfile:
    """Per-string search-path statistics over a set of member strings."""

    rows: list[ProfileRow]
    n: int
    max_sidesteps: int
    mean_sidesteps: float

    def to_dict(self) -> dict:
        depths = [r.depth for r in self.rows]
        return {
            "n": self.n,
            "max_sidesteps": self.max_sidesteps,
            "mean_sidesteps": self.mean_sidesteps,
            "max_depth": max(depths) if depths else 0,
            "mean_depth": (sum(depths) / len(depths)) if depths else 0.0,
        }


def profile(t, strings) -> DepthProfile:
    """Measure the search path of every string; all must be members.

    Accepts anything with a ``search_path`` method (the real tree) or with a
    ``sidesteps`` method (the naive reference trie, where depth follows from
    the identity depth = length + sidesteps on a hit).
    """
    rows = []
    walker = getattr(t, "search_path", None)
    if walker is not None:
        for s in strings:
            ps = walker(s)
            if not ps.found:
                raise ValueError(f"{s!r} is not a member")
            rows.append(ProfileRow(bytes(s), ps.chars_consumed, ps.sidesteps, ps.depth))
    else:
        for s in strings:
            side = t.sidesteps(s)
            rows.append(ProfileRow(bytes(s), len(s), side, len(s) + side))
    n = len(rows)
    max_side = max((r.sidesteps for r in rows), default=0)
    mean_side = (sum(r.sidesteps for r in rows) / n) if n else 0.0
    return DepthProfile(rows=rows, n=n, max_sidesteps=max_side, mean_sidesteps=mean_side)


@dataclass
class BenchPhase:
    name: str
    ops: int
    seconds: float

    @property
    def ops_per_sec(self) -> float:
        return self.ops / self.seconds if self.seconds > 0 else 0.0


@dataclass
class BenchReport:
    workload: Workload
    runs: int
    phases: list[BenchPhase] = field(default_factory=list)
    insert_rotations: int = 0
    insert_path_sidesteps: int = 0
    delete_rotations: int = 0
    delete_path_sidesteps: int = 0

    @property
    def insert_bound_ok(self) -> bool:
        # total rotations spent inserting never exceed the left/right edges
        # walked to place the strings
        return self.insert_rotations <= self.insert_path_sidesteps

    @property
    def delete_bound_ok(self) -> bool:
        return self.delete_rotations <= self.delete_path_sidesteps

    def to_dict(self) -> dict:
        return {
            "runs": self.runs,
            "phases": [
                {"name": p.name, "ops": p.ops, "seconds": p.seconds,
                 "ops_per_sec": p.ops_per_sec}
                for p in self.phases
            ],
            "insert_rotations": self.insert_rotations,
            "insert_path_sidesteps": self.insert_path_sidesteps,
            "insert_bound_ok": self.insert_bound_ok,
            "delete_rotations": self.delete_rotations,
            "delete_path_sidesteps": self.delete_path_sidesteps,
            "delete_bound_ok": self.delete_bound_ok,
        }


def bench_run(w: Workload, phases=PHASES, runs: int = 5, warmup: int = 1,
              r: int | None = None) -> BenchReport:
    """Time the requested phases; median seconds over ``runs`` repetitions.

    Every repetition rebuilds the tree from scratch so phases see identical
    state.  A separate untimed pass collects rotation and sidestep counters,
    so instrumentation never pollutes the clock.  Monotonic clock throughout.
    """
    for name in phases:
        if name not in PHASES:
            raise ValueError(f"unknown phase {name!r}")
    strings = generate(w)
    kwargs = {} if r is None else {"r": r}
    misses = [s + b"\xff" for s in strings]
    timings: dict[str, list[float]] = {name: [] for name in phases}

    def one_pass(record: bool) -> None:
        t = RTrie(seed=w.seed, **kwargs)

        def timed(name, fn, args):
            start = time.perf_counter()
            for a in args:
                fn(a)
            elapsed = time.perf_counter() - start
            if record:
                timings[name].append(elapsed)

        if "insert" in phases:
            timed("insert", t.insert, strings)
        else:
            for s in strings:
                t.insert(s)
        if "search_hit" in phases:
            timed("search_hit", t.contains, strings)
        if "search_miss" in phases:
            timed("search_miss", t.contains, misses)
        if "delete" in phases:
            timed("delete", t.delete, strings)

    for _ in range(warmup):
        one_pass(record=False)
    for _ in range(runs):
        one_pass(record=True)

    report = BenchReport(workload=w, runs=runs)
    for name in phases:
        ops = len(strings)
        med = statistics.median(timings[name]) if timings[name] else 0.0
        report.phases.append(BenchPhase(name=name, ops=ops, seconds=med))

    # untimed instrumented pass: rotation deltas vs. the path edges that
    # bound them (placement path for inserts, post-delete miss path for
    # deletes)
    t = RTrie(seed=w.seed, **kwargs)
    for s in strings:
        pre = t.search_path(s).sidesteps
        before = t.rotations
        t.insert(s)
        report.insert_rotations += t.rotations - before
        report.insert_path_sidesteps += pre
    if "delete" in phases:
        for s in strings:
            before = t.rotations
            t.delete(s)
            report.delete_rotations += t.rotations - before
            report.delete_path_sidesteps += t.search_path(s).sidesteps
    return report
