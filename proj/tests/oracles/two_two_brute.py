"""Naive oracle for 2-and-2 forms: for every well-rounded reduced form
(a, b, a) with -4 l^2 <= D <= -3 and every index-l sublattice, classify the
pair by box enumeration. No class groups, no reduction of M."""
from fractions import Fraction
from math import gcd
import sys

def sublattices(l):
    yield ((l, 0), (0, 1))
    for k in range(l):
        yield ((1, k), (0, l))

def in_sub(v, H):
    (a, b), (c, d) = H
    det = a * d - b * c
    x, y = v
    return (x * d - y * c) % det == 0 and (-x * b + y * a) % det == 0

def classify(form, l, H, R):
    a, b, c = form
    best_l = best_m = None
    sl = sm = 0
    for x in range(0, R + 1):
        for y in range(-R, R + 1):
            if x == 0 and y <= 0:
                continue
            v = a * x * x + b * x * y + c * y * y
            if in_sub((x, y), H):
                if best_m is None or v < best_m:
                    best_m, sm = v, 1
                elif v == best_m:
                    sm += 1
            else:
                if best_l is None or v < best_l:
                    best_l, sl = v, 1
                elif v == best_l:
                    sl += 1
    return sl, sm, Fraction(best_m, best_l)

def records(l):
    out = set()
    for n in range(3, 4 * l * l + 1):
        D = -n
        if D % 4 not in (0, 1):
            continue
        for a in range(1, n):
            if 3 * a * a > n:
                break
            for b in range(-a + 1, 1):
                if b * b - 4 * a * a != D or gcd(a, b) != 1:
                    continue
                # |x|, |y| <= R covers every vector of value <= l * a on a
                # reduced form: value >= (3/4) a max(x, y)^2.
                R = int((4 * l / 3) ** 0.5) + 2
                for H in sublattices(l):
                    s, sp, u = classify((a, b, a), l, H, R)
                    if s == 2 and sp == 2 and u >= 1:
                        out.add((D, a, b, u))
    return sorted(out, key=lambda r: (-r[0], r[1], r[2]))

if __name__ == "__main__":
    for l in map(int, sys.argv[1:] or [2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31]):
        print(l, [(D, a, b, str(u)) for D, a, b, u in records(l)])
