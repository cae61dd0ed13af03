# Compiled schoolbook polynomial multiply mod p.
# Contract matches fptkit.kernels.pure.polymul_schoolbook exactly; the
# dispatcher in fptkit.kernels guards sizes so the long long accumulator
# cannot overflow, and the guard is re-checked here defensively.

from libc.stdlib cimport free, malloc


def polymul_schoolbook(list a, list b, long p, trunc=None):
    cdef Py_ssize_t la = len(a)
    cdef Py_ssize_t lb = len(b)
    if la == 0 or lb == 0:
        raise ValueError("empty polynomial")
    cdef Py_ssize_t n = la + lb - 1
    cdef Py_ssize_t tl
    if trunc is not None:
        tl = <Py_ssize_t> trunc
        if tl < n:
            n = tl
    if n <= 0:
        return []
    cdef long long colmax = (<long long> (p - 1)) * (<long long> (p - 1))
    cdef long long shorter = <long long> (la if la < lb else lb)
    if colmax > 0 and shorter > ((<long long> 1) << 62) // colmax:
        raise OverflowError("column accumulator would exceed 63 bits")
    cdef long *ca = <long *> malloc(la * sizeof(long))
    cdef long *cb = <long *> malloc(lb * sizeof(long))
    cdef long long *acc = <long long *> malloc(n * sizeof(long long))
    if ca == NULL or cb == NULL or acc == NULL:
        free(ca)
        free(cb)
        free(acc)
        raise MemoryError()
    cdef Py_ssize_t i, j, jmax
    cdef long long ai
    try:
        for i in range(la):
            ca[i] = a[i]
        for i in range(lb):
            cb[i] = b[i]
        for i in range(n):
            acc[i] = 0
        for i in range(la):
            if i >= n:
                break
            ai = ca[i]
            if ai == 0:
                continue
            jmax = lb
            if n - i < jmax:
                jmax = n - i
            for j in range(jmax):
                acc[i + j] += ai * cb[j]
        return [acc[i] % p for i in range(n)]
    finally:
        free(ca)
        free(cb)
        free(acc)
