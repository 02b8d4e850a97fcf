"""Reference Gauss codes built by strand tracing, independent of geometry.

Two generators feed the knot-identification tests: torus knots as braid
closures, and odd pretzel knots traced through their three twist
columns.  Both produce signed Gauss codes in the (id, is_over, sign)
form consumed by diagram_from_gauss, so the Alexander machinery can be
checked against knots whose polynomials are known in closed form.
"""

from typing import List, Tuple


def torus_braid_gauss(p: int, q: int) -> List[Tuple[int, bool, int]]:
    """Signed Gauss code of the (p,q) torus knot.

    The knot is the closure of the q-strand braid (s_1 s_2 ... s_{q-1})
    repeated p times; each braid letter is one crossing where the
    left strand passes over the right and the two swap places.
    """
    if q < 2 or p < 2:
        raise ValueError("need p, q >= 2")
    word = [k for _ in range(p) for k in range(1, q)]
    occ = list(range(q))
    passages = {s: [] for s in range(q)}
    for letter, k in enumerate(word):
        a, b = occ[k - 1], occ[k]
        passages[a].append((letter, True))
        passages[b].append((letter, False))
        occ[k - 1], occ[k] = b, a
    end_position = {occ[i]: i for i in range(q)}
    sequence = []
    segment = 0
    visited = 0
    while True:
        sequence.extend(passages[segment])
        visited += 1
        segment = end_position[segment]
        if segment == 0:
            break
    if visited != q:
        raise ValueError("braid closure is a link, not a knot")
    # both strands travel downward at every letter, so every crossing
    # has the same handedness
    return [(letter, over, -1) for letter, over in sequence]


def pretzel_gauss(a: int, b: int, c: int) -> List[Tuple[int, bool, int]]:
    """Signed Gauss code of the (a,b,c) pretzel knot, all odd and positive.

    Three vertical twist columns hang side by side; tops are joined
    left to right (and around), bottoms likewise.  Within a column
    every crossing has the same handedness: the strand on the
    upper-left to lower-right diagonal is the over strand.
    """
    counts = (a, b, c)
    if any(k < 1 or k % 2 == 0 for k in counts):
        raise ValueError("twist counts must be odd positive integers")
    base = [0, a, a + b]

    def column_passages(col, entry):
        """Passages and exit port for one transit of a column."""
        k = counts[col]
        ids = [base[col] + i for i in range(k)]
        if entry == "TL":
            # over on odd-numbered crossings counted from the top
            recs = [(ids[i], i % 2 == 0, (1.0, -1.0) if i % 2 == 0 else (-1.0, -1.0)) for i in range(k)]
            return recs, "BR"
        if entry == "TR":
            recs = [(ids[i], i % 2 == 1, (1.0, -1.0) if i % 2 == 1 else (-1.0, -1.0)) for i in range(k)]
            return recs, "BL"
        if entry == "BL":
            # reverse of the TR transit, travelling upward
            recs = [
                (ids[i], i % 2 == 1, (-1.0, 1.0) if i % 2 == 1 else (1.0, 1.0))
                for i in range(k - 1, -1, -1)
            ]
            return recs, "TR"
        if entry == "BR":
            recs = [
                (ids[i], i % 2 == 0, (-1.0, 1.0) if i % 2 == 0 else (1.0, 1.0))
                for i in range(k - 1, -1, -1)
            ]
            return recs, "TL"
        raise ValueError(entry)

    def next_entry(col, exit_port):
        if exit_port == "TR":
            return (col + 1) % 3, "TL"
        if exit_port == "TL":
            return (col - 1) % 3, "TR"
        if exit_port == "BR":
            return (col + 1) % 3, "BL"
        if exit_port == "BL":
            return (col - 1) % 3, "BR"
        raise ValueError(exit_port)

    col, entry = 0, "TL"
    trace = []
    while True:
        recs, exit_port = column_passages(col, entry)
        trace.extend(recs)
        col, entry = next_entry(col, exit_port)
        if (col, entry) == (0, "TL"):
            break
        if len(trace) > 4 * sum(counts):
            raise ValueError("trace failed to close")
    total = sum(counts)
    if len(trace) != 2 * total:
        raise ValueError("pretzel closure is a link, not a knot")
    directions = {}
    for cid, over, direction in trace:
        directions.setdefault(cid, {})[over] = direction
    out = []
    for cid, over, _ in trace:
        d_over = directions[cid][True]
        d_under = directions[cid][False]
        sign = 1 if d_over[0] * d_under[1] - d_over[1] * d_under[0] > 0 else -1
        out.append((cid, over, sign))
    return out
