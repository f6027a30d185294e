"""Girth-stable infinite families from a fixed chord tuple.

A chord tuple defines one graph per admissible order; unrolling the
Hamiltonian cycle onto the integers (labels in Z, chords assigned by residue
mod 2b) removes the order entirely.  Girth on that unrolled graph is
computed with the same 2b truncated traversals.  A finite order can only
disagree by wrap-around cycles, i.e. cycles whose displacement sum is a
nonzero multiple of the order; chord steps are never consecutive, so a cycle
of length L displaces at most (L/2)*(max_chord+1).  Orders beyond that bound
for L = stable_girth - 2 therefore share the unrolled girth exactly.
"""

from __future__ import annotations

from dataclasses import dataclass

from .errors import DegenerateChords, InvalidSpec, VerificationFailed
from .girth import _grow_tree, girth_symmetric
from .graphs import ChordIndexSpec

__all__ = ["FamilyCertificate", "stabilization", "verify_certificate"]


@dataclass(frozen=True)
class FamilyCertificate:
    sym_factor: int
    chords: tuple[int, ...]
    stable_girth: int
    threshold_order: int
    span_bound: int  # widest label spread seen across the unrolled trees

    def member(self, order: int) -> ChordIndexSpec:
        return ChordIndexSpec(order, self.sym_factor, self.chords)

    def spot_check_orders(self) -> tuple[int, int, int]:
        t, s = self.threshold_order, 2 * self.sym_factor
        return (t, t + s, t + 20 * s)


def _unrolled_step(chords: tuple[int, ...]):
    b = len(chords)
    step2b = 2 * b
    inverse = {}
    for i, d in enumerate(chords, start=1):
        r = (2 * i - 1 + d) % step2b
        if r in inverse:
            raise DegenerateChords(
                f"chords {inverse[r][0]} and {d} collide on residue {r} mod {step2b}; "
                "no valid graph exists at any order"
            )
        inverse[r] = (d, i)
    by_residue = {r: d for r, (d, _) in inverse.items()}

    def step(x: int) -> tuple[int, int, int]:
        if x % 2:
            return (x - 1, x + 1, x + chords[((x - 1) // 2) % b])
        return (x - 1, x + 1, x - by_residue[x % step2b])

    return step


def stabilization(chords, sym_factor=None, girth_hint=None) -> FamilyCertificate:
    """Certify the girth shared by all large-enough orders of a chord tuple.

    Raises DegenerateChords when the residue condition fails (the tuple
    yields no simple 3-regular graph at any order) and VerificationFailed
    when girth_hint is supplied but does not match the computed girth.
    """
    chords = tuple(int(d) for d in chords)
    b = len(chords)
    if sym_factor is not None and sym_factor != b:
        raise InvalidSpec(f"symmetry factor {sym_factor} != number of chords {b}")
    if b == 0:
        raise InvalidSpec("empty chord tuple")
    for d in chords:
        if d < 3 or d % 2 == 0:
            raise InvalidSpec(f"chord {d} must be an odd integer >= 3")

    step = _unrolled_step(chords)  # raises DegenerateChords
    dmax = max(chords)
    # Each unrolled tree halts by roughly half the shortest chord cycle.
    depth_guard = dmax + 4

    stable = None
    span = 0
    for h in range(1, 2 * b + 1):
        tree = _grow_tree(h, step, depth_guard)
        total = tree.repeat_event.cycle_length
        stable = total if stable is None else min(stable, total)
        span = max(span, max(tree.labels) - min(tree.labels))

    # Largest displacement a cycle of length stable-2 can bridge: chord steps
    # alternate with cycle steps, so at most half the edges are chords.
    wrap_bound = (stable // 2 - 1) * (dmax + 1)
    base = max(wrap_bound, dmax + 2)
    threshold = (base // (2 * b) + 1) * (2 * b)

    if girth_hint is not None and girth_hint != stable:
        raise VerificationFailed(
            f"stable girth is {stable}, not the hinted {girth_hint}"
        )
    return FamilyCertificate(b, chords, stable, threshold, span)


def verify_certificate(cert: FamilyCertificate, orders=None) -> list[tuple[int, int]]:
    """Re-run the finite girth computation on a schedule of member orders.

    Defaults to the certificate's spot-check schedule; raises
    VerificationFailed on the first disagreement.
    """
    results = []
    for order in orders if orders is not None else cert.spot_check_orders():
        got = girth_symmetric(cert.member(order)).girth
        if got != cert.stable_girth:
            raise VerificationFailed(
                f"order {order}: girth {got} != certified {cert.stable_girth}"
            )
        results.append((order, got))
    return results
