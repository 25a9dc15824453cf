# cython: boundscheck=False, wraparound=False
"""Compiled twins of the table scans in ``_scan_py``.

Same canonical scan order, restricted to tables whose numerators fit in
int64 (the dispatcher in ``kernels`` checks the bound before calling).
"""


def axiom_scan(const long long[::1] num, Py_ssize_t n):
    cdef Py_ssize_t i, j, k
    cdef long long ii, ij
    for i in range(n):
        ii = num[i * n + i]
        for j in range(n):
            if i != j and ii == num[i * n + j] and ii == num[j * n + j]:
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


def metric_scan(const long long[::1] num, Py_ssize_t n):
    cdef Py_ssize_t i, j, k
    cdef long long ij
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
