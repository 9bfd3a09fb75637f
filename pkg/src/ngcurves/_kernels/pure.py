"""Pure-Python lane of the per-curve hot kernels.

Same contracts (and bit-identical outputs) as the compiled lane in
``ngcurves._kernels._fast``; the active lane is chosen at import time by
``ngcurves._kernels``.  All tables are ``array('i')`` so the two lanes are
interchangeable object-for-object.

Conventions shared by both lanes:

* a *summand table* ``m`` maps ``x`` to the least number of generators
  (repetition allowed) summing to ``x``, or ``UNREACHABLE``;
* membership of ``v`` in the semigroup is ``v >= 0 and (v >= len(m) or
  m[v] < UNREACHABLE)`` -- callers must size tables past the largest gap
  for the tail rule to be sound.
"""

from array import array

UNREACHABLE = 1 << 30


def min_summands(gens, limit):
    """Summand table for the semigroup generated by ``gens``, indices 0..limit."""
    m = array("i", [UNREACHABLE]) * (limit + 1)
    m[0] = 0
    for g in gens:
        for x in range(g, limit + 1):
            v = m[x - g] + 1
            if v < m[x]:
                m[x] = v
    return m


def extend_min_summands(m, gens, new_limit):
    """Copy of table ``m`` grown to indices 0..new_limit; ``m`` is untouched."""
    old = len(m)
    if new_limit + 1 <= old:
        return m
    out = array("i", m)
    out.extend(array("i", [UNREACHABLE]) * (new_limit + 1 - old))
    for g in gens:
        for x in range(max(g, old), new_limit + 1):
            v = out[x - g] + 1
            if v < out[x]:
                out[x] = v
    return out


def largest_gap(m):
    """Largest x with m[x] unreachable, or -1 when every index is reachable."""
    for x in range(len(m) - 1, -1, -1):
        if m[x] >= UNREACHABLE:
            return x
    return -1


def least_member_per_class(m, modulus):
    """Least reachable x in each residue class mod ``modulus``.

    The table must extend past largest_gap(m) + modulus so every class is hit.
    """
    res = [-1] * modulus
    remaining = modulus
    for x in range(len(m)):
        if m[x] < UNREACHABLE and res[x % modulus] < 0:
            res[x % modulus] = x
            remaining -= 1
            if remaining == 0:
                return res
    raise ValueError("summand table too short to fill all residue classes")


def b_tilde_residues(nus, mus, a_n):
    """Residues r whose table point (nus[r], mus[r]) stays off the table under
    addition of every non-axis table point (axis points can never produce hits).

    ``nus``/``mus`` are indexed by first-coordinate residue, with index 0 set
    to -1 as an off-table sentinel.
    """
    out = []
    for r in range(1, a_n):
        nr = nus[r]
        mr = mus[r]
        ok = True
        for s in range(1, a_n):
            c = r + s
            if c >= a_n:
                c -= a_n
            if nus[c] == nr + nus[s] and mus[c] == mr + mus[s]:
                ok = False
                break
        if ok:
            out.append(r)
    return out


def canonical_box(m1, m2, f1, f2, a_n, gen_xs):
    """Minimal generators of the canonical module, scanned over the complete
    box -f1 <= x <= a_n, -f2 <= y <= a_n on the lattice x + y == 0 mod a_n.

    A point w is kept when -w.x is a gap of the first projection, -w.y a gap
    of the second, and no w - g (g a curve generator) has the same property.
    Returned sorted by x ascending.
    """
    len1 = len(m1)
    len2 = len(m2)
    out = []
    for x in range(-f1, a_n + 1):
        t = -x
        if t >= 0 and (t >= len1 or m1[t] < UNREACHABLE):
            continue
        y0 = -f2 + ((f2 - x) % a_n)
        for y in range(y0, a_n + 1, a_n):
            t = -y
            if t >= 0 and (t >= len2 or m2[t] < UNREACHABLE):
                continue
            minimal = True
            for gx in gen_xs:
                t = gx - x
                if t >= 0 and (t >= len1 or m1[t] < UNREACHABLE):
                    continue
                t = (a_n - gx) - y
                if t >= 0 and (t >= len2 or m2[t] < UNREACHABLE):
                    continue
                minimal = False
                break
            if minimal:
                out.append((x, y))
    return out


def non_cm_witness(m1, a_n, max_degree):
    """Lattice point w outside the curve semigroup whose two axis translates
    both land inside, or None if no such point exists with w + (0, a_n) of
    degree <= max_degree.

    Any such w has w.x reachable in exactly d summands (d = degree + 1) with
    w.x + a_n reachable in at most d, so a single table pass finds them all.
    The table must cover indices through max_degree * a_n.  Ties resolve to
    the smallest (degree, x).
    """
    best_d = -1
    best_x = -1
    for x in range((max_degree - 1) * a_n + 1):
        d = m1[x]
        if d > max_degree or x > (d - 1) * a_n:
            continue
        if m1[x + a_n] <= d:
            if best_d < 0 or d < best_d or (d == best_d and x < best_x):
                best_d = d
                best_x = x
    if best_d < 0:
        return None
    return (best_x, (best_d - 1) * a_n - best_x)
