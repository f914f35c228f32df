"""Slow reference computations kept independent of the package internals."""


def leftmost_one(row):
    """1-based column of the first 1, scanning every entry."""
    for c, x in enumerate(row, 1):
        if x:
            return c
    return None


def max_prefix_zero(row):
    """The largest c such that entries 1..c-1 of the row sum to zero."""
    best = None
    for c in range(1, len(row) + 1):
        if sum(row[: c - 1]) == 0:
            best = c
    return best


def argmin_first(values):
    """Index of the first minimum."""
    best_i, best_v = None, None
    for i, v in enumerate(values):
        if best_v is None or v < best_v:
            best_i, best_v = i, v
    return best_i


def permute_by_product(a, label_at):
    """P A P^T with P built explicitly from 0-based label_at, pure lists."""
    n = len(a)
    P = [[1 if label_at[x] == y else 0 for y in range(n)] for x in range(n)]
    PA = [[sum(P[x][k] * a[k][y] for k in range(n)) for y in range(n)] for x in range(n)]
    return [[sum(PA[x][k] * P[y][k] for k in range(n)) for y in range(n)] for x in range(n)]


def zero_rows(a):
    return [i + 1 for i, row in enumerate(a) if not any(row)]


def components_by_closure(a):
    """Components via repeated reachability expansion, a third independent route."""
    n = len(a)
    left = set(range(n))
    out = []
    while left:
        seed = min(left)
        comp = {seed}
        changed = True
        while changed:
            changed = False
            for v in list(comp):
                for w in range(n):
                    if a[v][w] and w not in comp:
                        comp.add(w)
                        changed = True
        out.append(frozenset(v + 1 for v in comp))
        left -= comp
    return frozenset(out)
