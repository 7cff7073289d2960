"""Pure-Python serving kernels.

Drop-in fallback for the compiled ``_ckernels`` module; both expose the
same functions with identical semantics.  Elements are dense integer
indices ``0..l-1``; the caller maps opaque identifiers to indices.

Algorithm codes: 0 = move-to-front, 1 = transpose, 2 = frequency count.
"""

MTF = 0
TRANSPOSE = 1
FREQUENCY_COUNT = 2


def serve_positions(order, requests, algo):
    """Serve ``requests`` on ``order``; return (positions, final_order).

    Positions are 1-indexed.  Frequency counters start at zero.
    """
    order = list(order)
    l = len(order)
    counts = [0] * l
    positions = []
    append = positions.append
    for r in requests:
        i = order.index(r)
        append(i + 1)
        if algo == MTF:
            if i:
                del order[i]
                order.insert(0, r)
        elif algo == TRANSPOSE:
            if i:
                order[i - 1], order[i] = order[i], order[i - 1]
        elif algo == FREQUENCY_COUNT:
            c = counts[r] + 1
            counts[r] = c
            j = i
            while j > 0 and counts[order[j - 1]] < c:
                order[j] = order[j - 1]
                j -= 1
            order[j] = r
        else:
            raise ValueError(f"unknown algorithm code {algo}")
    return positions, order


def total_positions(order, requests, algo):
    """Sum of 1-indexed access positions (the Full Cost Model total)."""
    positions, _ = serve_positions(order, requests, algo)
    return sum(positions)
