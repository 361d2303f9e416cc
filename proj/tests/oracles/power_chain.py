"""Independent oracle for frozen expected values in the C++ tests.

Binary forms are coefficient lists (x^d, x^(d-1) y, ..., y^d) with Fraction
entries; products are plain list convolutions.
"""
from fractions import Fraction as Q


def mul(a, b):
    out = [Q(0)] * (len(a) + len(b) - 1)
    for i, x in enumerate(a):
        for j, y in enumerate(b):
            out[i + j] += x * y
    return out


def strictly_positive(c):
    return all(v > 0 for v in c)


def nonnegative(c):
    return all(v >= 0 for v in c)


def least_strict_power(p, cap):
    cur = [Q(1)]
    for m in range(1, cap + 1):
        cur = mul(cur, p)
        if strictly_positive(cur):
            return m
    return None


def least_odd_strict_power(p, cap):
    cur = [Q(1)]
    for m in range(1, cap + 1):
        cur = mul(cur, p)
        if m % 2 == 1 and strictly_positive(cur):
            return m
    return None


def least_window(p, q, s, cap):
    flags = []
    cur = q[:]
    for m in range(0, cap + s):
        flags.append(strictly_positive(cur))
        cur = mul(cur, p)
    for m0 in range(0, cap + 1):
        if all(flags[m0:m0 + s]):
            return m0
    return None


def quartic_minus_middle(lam):
    return [Q(1), Q(4), Q(6) - lam, Q(4), Q(1)]


if __name__ == "__main__":
    q_tri = [Q(1), Q(-1), Q(1)]
    lin = [Q(1), Q(1)]
    cur = q_tri
    for m in range(0, 5):
        print("(x+y)^%d q:" % m, [str(v) for v in cur])
        cur = mul(cur, lin)
    p7 = quartic_minus_middle(Q(7))
    print("p7^2:", [str(v) for v in mul(p7, p7)])
    print("p7^3:", [str(v) for v in mul(mul(p7, p7), p7)])
    for lam in (Q(7), Q(31, 5)):
        p = quartic_minus_middle(lam)
        s = least_strict_power(p, 200)
        odd = least_odd_strict_power(p, 200)
        q = [Q(1), Q(1), Q(1)]
        m0 = least_window(p, q, s, 200)
        print("lambda", lam, "s", s, "odd", odd, "m0 for x^2+xy+y^2", m0)
        print("  p(1,1) =", sum(p))
