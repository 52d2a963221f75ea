"""Pure-Python kernels for sparse integer polynomial arithmetic.

Polynomials are passed as two parallel sequences: strictly increasing
exponents and nonzero integer numerators.  The compiled module
``_ckernels`` exposes the same functions with the same semantics.
"""


def mul_terms(ae, an, be, bn, limit):
    """Convolve two sparse integer polynomials.

    Exponents above ``limit`` are dropped; a negative ``limit`` keeps
    everything.  Returns ``(exps, nums)`` with zero sums removed.
    """
    if not ae or not be:
        return [], []
    lo = ae[0] + be[0]
    hi = ae[-1] + be[-1]
    if limit >= 0:
        if lo > limit:
            return [], []
        hi = min(hi, limit)
    top = hi - lo
    acc = [0] * (top + 1)
    b = [(e - be[0], c) for e, c in zip(be, bn)]
    for e1, c1 in zip(ae, an):
        off = e1 - ae[0]
        if off > top:
            break
        for e2, c2 in b:
            i = off + e2
            if i > top:
                break
            acc[i] += c1 * c2
    exps = []
    nums = []
    for i, c in enumerate(acc):
        if c:
            exps.append(i + lo)
            nums.append(c)
    return exps, nums


def lincomb_terms(ae, an, ca, be, bn, cb):
    """Return ``ca * a + cb * b`` for sparse integer polynomials a, b."""
    exps = []
    nums = []
    i = j = 0
    na, nb = len(ae), len(be)
    while i < na and j < nb:
        ea, eb = ae[i], be[j]
        if ea < eb:
            exps.append(ea)
            nums.append(ca * an[i])
            i += 1
        elif eb < ea:
            exps.append(eb)
            nums.append(cb * bn[j])
            j += 1
        else:
            c = ca * an[i] + cb * bn[j]
            if c:
                exps.append(ea)
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
