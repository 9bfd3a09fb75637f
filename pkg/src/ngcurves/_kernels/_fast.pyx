# cython: language_level=3, boundscheck=False, wraparound=False, cdivision=True
"""Compiled lane of the per-curve hot kernels.

Bit-identical to ngcurves._kernels.pure; see that module for the contracts.
"""

from cpython cimport array

import array

UNREACHABLE = 1 << 30

cdef int _UN = 1 << 30

cdef array.array _INT_TEMPLATE = array.array("i", [])


def min_summands(gens, Py_ssize_t limit):
    cdef array.array m = array.clone(_INT_TEMPLATE, limit + 1, zero=False)
    cdef int[:] mv = m
    cdef Py_ssize_t x, start
    cdef int g, v
    for x in range(limit + 1):
        mv[x] = _UN
    mv[0] = 0
    for g in gens:
        start = g
        for x in range(start, limit + 1):
            v = mv[x - g] + 1
            if v < mv[x]:
                mv[x] = v
    return m


def extend_min_summands(m, gens, Py_ssize_t new_limit):
    cdef Py_ssize_t old = len(m)
    if new_limit + 1 <= old:
        return m
    cdef array.array out = array.clone(_INT_TEMPLATE, new_limit + 1, zero=False)
    cdef int[:] src = m
    cdef int[:] dst = out
    cdef Py_ssize_t x, start
    cdef int g, v
    for x in range(old):
        dst[x] = src[x]
    for x in range(old, new_limit + 1):
        dst[x] = _UN
    for g in gens:
        start = g if g > old else old
        for x in range(start, new_limit + 1):
            v = dst[x - g] + 1
            if v < dst[x]:
                dst[x] = v
    return out


def largest_gap(m):
    cdef int[:] mv = m
    cdef Py_ssize_t x
    for x in range(len(m) - 1, -1, -1):
        if mv[x] >= _UN:
            return x
    return -1


def least_member_per_class(m, Py_ssize_t modulus):
    cdef int[:] mv = m
    cdef array.array res = array.clone(_INT_TEMPLATE, modulus, zero=False)
    cdef int[:] rv = res
    cdef Py_ssize_t x, n = len(m), r
    cdef Py_ssize_t remaining = modulus
    for r in range(modulus):
        rv[r] = -1
    for x in range(n):
        if mv[x] < _UN:
            r = x % modulus
            if rv[r] < 0:
                rv[r] = x
                remaining -= 1
                if remaining == 0:
                    return list(res)
    raise ValueError("summand table too short to fill all residue classes")


def b_tilde_residues(nus, mus, Py_ssize_t a_n):
    cdef array.array nu_arr = array.array("i", nus)
    cdef array.array mu_arr = array.array("i", mus)
    cdef int[:] nu = nu_arr
    cdef int[:] mu = mu_arr
    cdef Py_ssize_t r, s, c
    cdef int nr, mr
    cdef bint ok
    out = []
    for r in range(1, a_n):
        nr = nu[r]
        mr = mu[r]
        ok = True
        for s in range(1, a_n):
            c = r + s
            if c >= a_n:
                c -= a_n
            if nu[c] == nr + nu[s] and mu[c] == mr + mu[s]:
                ok = False
                break
        if ok:
            out.append(r)
    return out


def canonical_box(m1, m2, long long f1, long long f2, long long a_n, gen_xs):
    cdef int[:] t1 = m1
    cdef int[:] t2 = m2
    cdef array.array gx_arr = array.array("q", gen_xs)
    cdef long long[:] gx = gx_arr
    cdef Py_ssize_t len1 = len(m1), len2 = len(m2), ngen = len(gx_arr), i
    cdef long long x, y, y0, t
    cdef bint minimal
    out = []
    for x in range(-f1, a_n + 1):
        t = -x
        if t >= 0 and (t >= len1 or t1[t] < _UN):
            continue
        y0 = -f2 + ((f2 - x) % a_n)
        if y0 < -f2:
            y0 += a_n  # cdivision: C's % follows the dividend's sign
        for y in range(y0, a_n + 1, a_n):
            t = -y
            if t >= 0 and (t >= len2 or t2[t] < _UN):
                continue
            minimal = True
            for i in range(ngen):
                t = gx[i] - x
                if t >= 0 and (t >= len1 or t1[t] < _UN):
                    continue
                t = (a_n - gx[i]) - y
                if t >= 0 and (t >= len2 or t2[t] < _UN):
                    continue
                minimal = False
                break
            if minimal:
                out.append((x, y))
    return out


def non_cm_witness(m1, long long a_n, long long max_degree):
    cdef int[:] mv = m1
    cdef Py_ssize_t x
    cdef long long d
    cdef long long best_d = -1, best_x = -1
    for x in range((max_degree - 1) * a_n + 1):
        d = mv[x]
        if d > max_degree or x > (d - 1) * a_n:
            continue
        if mv[x + a_n] <= d:
            if best_d < 0 or d < best_d or (d == best_d and x < best_x):
                best_d = d
                best_x = x
    if best_d < 0:
        return None
    return (int(best_x), int((best_d - 1) * a_n - best_x))
