"""Reference implementations of the hot table scans.

Both scans take a flattened n*n table of integer numerators over a common
denominator (plain Python ints, so arbitrary precision) and return the
first violation in canonical order, or None. The compiled twin in
``_scan.pyx`` must return bit-identical results on every table it
accepts; the order here is the canonical one.
"""


def axiom_scan(num, n):
    """First violation of the partial-metric axioms as (code, i, j, k).

    Codes: 1 distinct points share self/cross/self values, 2 a
    self-distance exceeds a cross distance, 3 asymmetry, 4 the sharpened
    triangle inequality fails. k is -1 for the pair axioms.
    """
    for i in range(n):
        ii = num[i * n + i]
        for j in range(n):
            if i != j and ii == num[i * n + j] == num[j * n + j]:
                return (1, i, j, -1)
    for i in range(n):
        ii = num[i * n + i]
        for j in range(n):
            if i != j and ii > num[j * n + i]:
                return (2, i, j, -1)
    for i in range(n):
        for j in range(i + 1, n):
            if num[i * n + j] != num[j * n + i]:
                return (3, i, j, -1)
    for i in range(n):
        for j in range(n):
            ij = num[i * n + j]
            for k in range(n):
                if ij > num[i * n + k] + num[k * n + j] - num[k * n + k]:
                    return (4, i, j, k)
    return None


def metric_scan(num, n):
    """First violation of the metric axioms as (code, i, j, k).

    Codes: 1 nonzero self-distance, 2 zero or negative distance between
    distinct points, 3 asymmetry, 4 triangle inequality failure.
    """
    for i in range(n):
        if num[i * n + i] != 0:
            return (1, i, i, -1)
    for i in range(n):
        for j in range(n):
            if i != j and num[i * n + j] <= 0:
                return (2, i, j, -1)
    for i in range(n):
        for j in range(i + 1, n):
            if num[i * n + j] != num[j * n + i]:
                return (3, i, j, -1)
    for i in range(n):
        for j in range(n):
            ij = num[i * n + j]
            for k in range(n):
                if ij > num[i * n + k] + num[k * n + j]:
                    return (4, i, j, k)
    return None
