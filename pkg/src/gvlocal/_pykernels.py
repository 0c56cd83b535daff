"""Pure-Python series kernels.

Series are handled as lists of integer numerators over one common
denominator, so the inner loops only touch Python ints.  The compiled
module ``_ckernels`` exposes the same two functions.
"""
from math import gcd


def convolve(a, b, n):
    """First ``n`` terms of the Cauchy product of integer sequences ``a`` and ``b``."""
    out = [0] * n
    lb = len(b)
    for i in range(min(n, len(a))):
        ai = a[i]
        if not ai:
            continue
        for j in range(min(n - i, lb)):
            out[i + j] += ai * b[j]
    return out


def invert(a, n):
    """First ``n`` terms of ``1/A`` for an integer sequence with ``a[0] != 0``.

    Returns ``(nums, den)`` with ``den > 0`` so that term ``m`` equals
    ``nums[m] / den``.  The common denominator is kept as the lcm of the
    reduced term denominators, so integers stay as small as the answer allows.
    """
    a0 = a[0]
    if a0 == 0:
        raise ZeroDivisionError("not invertible")
    if n <= 0:
        return [], 1
    la = len(a)
    nums = [0] * n
    den = 1
    for m in range(n):
        s = 1 if m == 0 else 0
        for k in range(1, min(m, la - 1) + 1):
            ak = a[k]
            if ak:
                s -= ak * nums[m - k]
        # b_m = s / (a0 * den)
        bd = a0 * den
        if bd < 0:
            bd, s = -bd, -s
        g = gcd(s, bd)
        s //= g
        bd //= g
        if den % bd:
            f = bd // gcd(den, bd)
            for i in range(m):
                nums[i] *= f
            den *= f
        nums[m] = s * (den // bd)
    return nums, den
