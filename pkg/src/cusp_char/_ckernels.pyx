# cython: language_level=3, boundscheck=False, wraparound=False
"""Compiled kernels for sparse integer polynomial arithmetic.

Same contract as ``cusp_char._pykernels``; exponents are held in C arrays,
numerators stay Python ints (they are unbounded).
"""

from cpython.mem cimport PyMem_Malloc, PyMem_Free


cdef Py_ssize_t* _to_c(seq, Py_ssize_t n) except NULL:
    cdef Py_ssize_t* out = <Py_ssize_t*> PyMem_Malloc((n if n > 0 else 1) * sizeof(Py_ssize_t))
    cdef Py_ssize_t i
    if out == NULL:
        raise MemoryError()
    for i in range(n):
        out[i] = seq[i]
    return out


def mul_terms(ae, an, be, bn, Py_ssize_t limit):
    cdef Py_ssize_t na = len(ae), nb = len(be)
    cdef Py_ssize_t lo, hi, top, i, j, off, idx
    cdef Py_ssize_t* ea
    cdef Py_ssize_t* eb
    cdef list acc, bnums, exps, nums
    cdef object c1, c
    if na == 0 or nb == 0:
        return [], []
    lo = ae[0] + be[0]
    hi = ae[na - 1] + be[nb - 1]
    if limit >= 0:
        if lo > limit:
            return [], []
        if limit < hi:
            hi = limit
    ea = _to_c(ae, na)
    eb = _to_c(be, nb)
    try:
        top = hi - lo
        acc = [0] * (top + 1)
        bnums = list(bn)
        for i in range(na):
            off = ea[i] - ea[0]
            if off > top:
                break
            c1 = an[i]
            for j in range(nb):
                idx = off + eb[j] - eb[0]
                if idx > top:
                    break
                acc[idx] = acc[idx] + c1 * bnums[j]
    finally:
        PyMem_Free(ea)
        PyMem_Free(eb)
    exps = []
    nums = []
    for i in range(top + 1):
        c = acc[i]
        if c:
            exps.append(i + lo)
            nums.append(c)
    return exps, nums


def lincomb_terms(ae, an, ca, be, bn, cb):
    cdef Py_ssize_t na = len(ae), nb = len(be)
    cdef Py_ssize_t i = 0, j = 0, k, x, y
    cdef list exps = [], nums = []
    cdef object c
    while i < na and j < nb:
        x = ae[i]
        y = be[j]
        if x < y:
            exps.append(x)
            nums.append(ca * an[i])
            i += 1
        elif y < x:
            exps.append(y)
            nums.append(cb * bn[j])
            j += 1
        else:
            c = ca * an[i] + cb * bn[j]
            if c:
                exps.append(x)
                nums.append(c)
            i += 1
            j += 1
    for k in range(i, na):
        exps.append(ae[k])
        nums.append(ca * an[k])
    for k in range(j, nb):
        exps.append(be[k])
        nums.append(cb * bn[k])
    return exps, nums
