"""Chord-index specifications and their explicit cubic graph realizations.

A graph of even order n = 2m is described by a symmetry factor b (with b
dividing m) and b odd chord displacements d_1..d_b.  Vertices are labeled
1..2m around a Hamiltonian cycle; every odd vertex 2j-1 additionally carries
a chord to the even vertex 2j-1 + d, where d is the displacement assigned to
its position class (j-1 mod b).  The displacement pattern therefore repeats
with period 2b along the cycle, so rotation by 2b labels is an automorphism.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Optional

from .errors import InvalidSpec, LabelOutOfRange, MalformedGraph

__all__ = [
    "ChordIndexSpec",
    "Violation",
    "ValidationReport",
    "HbGraph",
    "validate_spec",
    "expand_indices",
    "chord_target",
    "prev_label",
    "next_label",
    "build_graph",
]


@dataclass(frozen=True)
class ChordIndexSpec:
    """Input description: order 2m, symmetry factor b, chord displacements d_1..d_b."""

    order: int
    sym_factor: int
    chords: tuple[int, ...]

    def __post_init__(self):
        object.__setattr__(self, "chords", tuple(int(d) for d in self.chords))

    @property
    def half_order(self) -> int:
        return self.order // 2


@dataclass(frozen=True)
class Violation:
    code: str
    message: str
    index: Optional[int] = None  # 1-based chord position, when applicable
    value: Optional[int] = None

    def __str__(self):
        return f"{self.code}: {self.message}"


@dataclass(frozen=True)
class ValidationReport:
    verdict: str  # "valid" | "invalid"
    violations: tuple[Violation, ...] = field(default_factory=tuple)

    @property
    def valid(self) -> bool:
        return self.verdict == "valid"

    @classmethod
    def from_violations(cls, violations) -> "ValidationReport":
        vs = tuple(violations)
        return cls("valid" if not vs else "invalid", vs)


def validate_spec(spec: ChordIndexSpec) -> ValidationReport:
    """Check every spec invariant; collects all violations rather than the first.

    Checked, in order: even order with m >= 2; 1 <= b and b | m; chord count
    equals b; each chord odd and within [3, 2m-3]; and the residue condition
    that makes the chord map a perfect matching between odd and even labels
    (targets 2i-1+d_i must be pairwise distinct mod 2b).
    """
    violations: list[Violation] = []
    n, b = spec.order, spec.sym_factor

    if n % 2 != 0:
        violations.append(Violation("OddOrder", f"order {n} is odd", value=n))
    m = n // 2
    if n < 4:
        violations.append(Violation("OrderTooSmall", f"order {n} < 4", value=n))
    if b < 1:
        violations.append(Violation("SymFactorOutOfRange", f"symmetry factor {b} < 1", value=b))
    elif m > 0 and m % b != 0:
        violations.append(
            Violation("DivisibilityViolation", f"{b} does not divide {m}", value=b)
        )
    if len(spec.chords) != b:
        violations.append(
            Violation(
                "ChordCountMismatch",
                f"expected {b} chord indices, got {len(spec.chords)}",
                value=len(spec.chords),
            )
        )

    for i, d in enumerate(spec.chords, start=1):
        if d % 2 == 0:
            violations.append(
                Violation("EvenChordIndex", f"chord d_{i}={d} is even", index=i, value=d)
            )
        if not (3 <= d <= n - 3):
            violations.append(
                Violation(
                    "ChordOutOfRange",
                    f"chord d_{i}={d} outside [3, {n - 3}]",
                    index=i,
                    value=d,
                )
            )

    # Matching condition only meaningful once the shape checks above pass.
    if not violations and b >= 1:
        seen: dict[int, int] = {}
        for i, d in enumerate(spec.chords, start=1):
            r = (2 * i - 1 + d) % (2 * b)
            if r in seen:
                j = seen[r]
                violations.append(
                    Violation(
                        "NotAMatching",
                        f"labels {2 * j - 1} and {2 * i - 1} both chord to "
                        f"labels congruent to {r} mod {2 * b}",
                        index=i,
                        value=d,
                    )
                )
            else:
                seen[r] = i

    return ValidationReport.from_violations(violations)


def _require_valid(spec: ChordIndexSpec) -> None:
    report = validate_spec(spec)
    if not report.valid:
        raise InvalidSpec(
            "; ".join(str(v) for v in report.violations) or "invalid spec", report
        )


def expand_indices(spec: ChordIndexSpec) -> tuple[int, ...]:
    """Periodic expansion of the b chord indices to the full length-m sequence."""
    n, b = spec.order, spec.sym_factor
    m = n // 2
    if n % 2 != 0 or n < 4 or b < 1 or m % b != 0 or len(spec.chords) != b:
        _require_valid(spec)  # raises with the detailed report
    if any(d % 2 == 0 or not (3 <= d <= n - 3) for d in spec.chords):
        _require_valid(spec)
    return tuple(spec.chords[i % b] for i in range(m))


def prev_label(x: int, order: int) -> int:
    """Previous label along the Hamiltonian cycle, wrapping 1 -> 2m."""
    if not 1 <= x <= order:
        raise LabelOutOfRange(f"label {x} outside 1..{order}")
    return order if x == 1 else x - 1


def next_label(x: int, order: int) -> int:
    """Next label along the Hamiltonian cycle, wrapping 2m -> 1."""
    if not 1 <= x <= order:
        raise LabelOutOfRange(f"label {x} outside 1..{order}")
    return 1 if x == order else x + 1


def _inverse_chord_by_residue(spec: ChordIndexSpec) -> dict[int, int]:
    # residue of an even label mod 2b -> displacement of the odd vertex chording to it
    b = spec.sym_factor
    return {(2 * i - 1 + d) % (2 * b): d for i, d in enumerate(spec.chords, start=1)}


def chord_target(x: int, spec: ChordIndexSpec) -> int:
    """The label the chord at x connects to.

    Odd x = 2j-1 reaches 2j-1 + d (mod 2m) for its class displacement d; even
    labels are resolved through the inverse of that map.  The result is a
    parity-swapping involution on 1..2m.
    """
    _require_valid(spec)
    n, b = spec.order, spec.sym_factor
    if not 1 <= x <= n:
        raise LabelOutOfRange(f"label {x} outside 1..{n}")
    if x % 2 == 1:
        d = spec.chords[((x - 1) // 2) % b]
        return (x + d - 1) % n + 1
    d = _inverse_chord_by_residue(spec)[x % (2 * b)]
    return (x - d - 1) % n + 1


@dataclass(frozen=True)
class HbGraph:
    """Explicit realization: Hamiltonian edges x ~ x+1 (mod 2m) plus one chord per vertex.

    chord_of[i] is the 0-based chord partner of 0-based vertex i; the 1-based
    accessors below present the paper-facing labeling.
    """

    order: int
    chord_of: tuple[int, ...]

    def __post_init__(self):
        n = self.order
        c = self.chord_of
        if n < 4 or n % 2 != 0 or len(c) != n:
            raise MalformedGraph(f"bad order/chord table: order={n}, len={len(c)}")
        for i, j in enumerate(c):
            if not 0 <= j < n or j == i:
                raise MalformedGraph(f"chord of vertex {i + 1} out of range or fixed")
            if c[j] != i:
                raise MalformedGraph(f"chord table is not an involution at {i + 1}")
            if (i - j) % 2 == 0:
                raise MalformedGraph(f"chord {i + 1}~{j + 1} joins same-parity labels")
            if abs(i - j) in (1, n - 1):
                raise MalformedGraph(f"chord {i + 1}~{j + 1} parallels a cycle edge")

    def chord(self, x: int) -> int:
        if not 1 <= x <= self.order:
            raise LabelOutOfRange(f"label {x} outside 1..{self.order}")
        return self.chord_of[x - 1] + 1

    def prev(self, x: int) -> int:
        return prev_label(x, self.order)

    def next(self, x: int) -> int:
        return next_label(x, self.order)

    def neighbors(self, x: int) -> tuple[int, int, int]:
        """The three neighbors of x in (prev, next, chord) order."""
        return (self.prev(x), self.next(x), self.chord(x))

    def edges(self) -> list[tuple[int, int]]:
        """All 3m edges, each once, low label first, sorted."""
        n = self.order
        es = [(x, x + 1) for x in range(1, n)] + [(1, n)]
        es += [(x, self.chord(x)) for x in range(1, n + 1) if x < self.chord(x)]
        return sorted(es)

    def has_edge(self, x: int, y: int) -> bool:
        return y in self.neighbors(x)


def build_graph(spec: ChordIndexSpec) -> HbGraph:
    """Materialize a valid spec into its explicit graph."""
    _require_valid(spec)
    n, b = spec.order, spec.sym_factor
    chord = [-1] * n
    for j in range(n // 2):  # odd label 2j+1 has 0-based index 2j
        d = spec.chords[j % b]
        u = 2 * j
        v = (u + d) % n
        chord[u] = v
        chord[v] = u
    return HbGraph(n, tuple(chord))
