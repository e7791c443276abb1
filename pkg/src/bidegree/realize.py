"""Greedy construction of 0-1 adjacency matrices from bidegree sequences.

The matrix convention is row sums = in-degrees, column sums =
out-degrees: entry ``(i, j) = 1`` means an edge from node ``j`` to node
``i``.  Rows are stored as bitmasks (bit ``j`` of row ``i`` is entry
``(i, j)``).

The wiring loop repeatedly takes the node with the largest remaining
out-degree and connects all its out-stubs at once to the nodes that are
currently largest in (residual in-degree, residual out-degree), skipping
itself when loops are disallowed.  Breaking in-degree ties toward larger
residual out-degree is load-bearing for the loop-free case: for
a = b = (1, 1, 1) an index tie-break strands the last stub, while the
out-degree-aware order always completes the 3-cycle.  Exchange arguments
for this family of reductions guarantee the greedy never fails on a
sequence the exact check accepts, which the construction re-verifies
before returning.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Union

from .core import BidegreeSequence
from .errors import DimensionMismatch
from .exact import CheckOutcome, check_no_loops, check_with_loops

__all__ = ["AdjacencyRealization", "realize", "verify_realization"]


@dataclass(frozen=True)
class AdjacencyRealization:
    """A 0-1 adjacency matrix in the caller's node order.

    ``rows[i]`` is a bitmask: bit ``j`` set means an edge ``j -> i``.
    The diagonal is all zero whenever ``loops_allowed`` is False.
    """

    n: int
    rows: tuple
    loops_allowed: bool

    def entry(self, i: int, j: int) -> int:
        return (self.rows[i] >> j) & 1

    def row_string(self, i: int) -> str:
        """Row ``i`` as a 0/1 character string, column 0 first."""
        return "".join("1" if self.rows[i] >> j & 1 else "0" for j in range(self.n))

    def edges(self):
        """Yield ``(src, dst)`` pairs grouped by source node."""
        for src in range(self.n):
            bit = 1 << src
            for dst in range(self.n):
                if self.rows[dst] & bit:
                    yield (src, dst)


def realize(
    seq: BidegreeSequence, allow_loops: bool = True
) -> Union[AdjacencyRealization, CheckOutcome]:
    """Build an adjacency matrix realizing ``seq``, or report why not.

    Runs the exact check first; a NOT_GRAPHIC outcome (with its witness)
    is returned as a value.  On graphic input the greedy wiring always
    succeeds, and the result is verified against the margins before it is
    returned.
    """
    outcome = check_with_loops(seq) if allow_loops else check_no_loops(seq)
    if not outcome.is_graphic:
        return outcome

    n = seq.n
    resid_in = list(seq.in_degrees)
    resid_out = list(seq.out_degrees)
    sources = sorted(range(n), key=lambda i: (-resid_out[i], i))
    # target preference order, re-sorted after each wiring step; nearly
    # sorted throughout, so the re-sort is cheap
    order = sorted(range(n), key=lambda i: (-resid_in[i], -resid_out[i], i))
    rows = [0] * n

    for s in sources:
        need = resid_out[s]
        if need == 0:
            continue
        targets = []
        for t in order:
            if len(targets) == need:
                break
            if t == s and not allow_loops:
                continue
            if resid_in[t] == 0:
                break  # order is sorted; nothing usable remains
            targets.append(t)
        if len(targets) < need:
            raise RuntimeError(
                "greedy wiring failed on a sequence the exact check accepts"
            )
        bit = 1 << s
        for t in targets:
            resid_in[t] -= 1
            rows[t] |= bit
        resid_out[s] = 0
        order.sort(key=lambda i: (-resid_in[i], -resid_out[i], i))

    realization = AdjacencyRealization(n, tuple(rows), allow_loops)
    if not verify_realization(realization, seq):
        raise RuntimeError("constructed matrix does not match the margins")
    return realization


def verify_realization(
    real: AdjacencyRealization, seq: BidegreeSequence
) -> bool:
    """Bit-exact margin check: row sums, column sums, diagonal policy.

    Raises
    ------
    DimensionMismatch
        If the matrix size differs from the sequence length.
    """
    if real.n != seq.n:
        raise DimensionMismatch(f"matrix n={real.n} vs sequence n={seq.n}")
    n = seq.n
    col_sums = [0] * n
    for i, row in enumerate(real.rows):
        if row >> n:
            return False  # stray bits beyond column n-1
        if row.bit_count() != seq.in_degrees[i]:
            return False
        if not real.loops_allowed and row >> i & 1:
            return False
        while row:
            low = row & -row
            col_sums[low.bit_length() - 1] += 1
            row ^= low
    return col_sums == list(seq.out_degrees)
