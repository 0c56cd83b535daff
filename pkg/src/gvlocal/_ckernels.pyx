# cython: language_level=3, boundscheck=False, wraparound=False
"""Compiled series kernels; same contract as ``gvlocal._pykernels``."""
from math import gcd


def convolve(list a, list b, Py_ssize_t n):
    cdef Py_ssize_t i, j, la = len(a), lb = len(b), top
    cdef list out = [0] * n
    cdef object ai
    for i in range(min(n, la)):
        ai = a[i]
        if not ai:
            continue
        top = min(n - i, lb)
        for j in range(top):
            out[i + j] = out[i + j] + ai * b[j]
    return out


def invert(list a, Py_ssize_t n):
    cdef object a0 = a[0]
    cdef Py_ssize_t la = len(a), i, k, m, top
    cdef list nums
    cdef object den, s, ak, bd, g, f
    if a0 == 0:
        raise ZeroDivisionError("not invertible")
    if n <= 0:
        return [], 1
    nums = [0] * n
    den = 1
    for m in range(n):
        s = 1 if m == 0 else 0
        top = min(m, la - 1)
        for k in range(1, top + 1):
            ak = a[k]
            if ak:
                s = s - ak * nums[m - k]
        bd = a0 * den
        if bd < 0:
            bd = -bd
            s = -s
        g = gcd(s, bd)
        s = s // g
        bd = bd // g
        if den % bd:
            f = bd // gcd(den, bd)
            for i in range(m):
                nums[i] = nums[i] * f
            den = den * f
        nums[m] = s * (den // bd)
    return nums, den
