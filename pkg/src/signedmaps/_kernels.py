r"""
Loop kernels for map building and orbit tracing.

Quadricells are flat integers ``4*edge + 2*side + end`` with side 0 =
left / 1 = right and end 0 = lower (tail) / 1 = upper (head).  The three
fixed-point-free involutions are then index arithmetic:

    alpha(q) = q ^ 2   (swap sides, same end)
    beta(q)  = q ^ 1   (swap ends, same side)
    gamma(q) = q ^ 3   (swap both)

Every function here is written in nopython-compatible style: plain
loops over preallocated numpy arrays, no Python objects.  ``backend``
jit-compiles these with numba unless the pure-python path is forced via
``SIGNEDMAPS_BACKEND=python``.

The ``genus_histogram_range`` kernel is the hot loop of exhaustive
enumeration: it unranks rotation systems straight from their mixed-radix
index, builds the vertex permutation in place, and counts face orbits
with a stamp-marked visited array so nothing is reallocated between
iterations.
"""

import numpy as np


def build_perm(tails, heads, signs, rot_flat, rot_off, P):
    """Fill ``P`` (length 4m) with the vertex permutation of a rotation system.

    At each vertex the rotation contributes two cycles: one through the
    chosen corner of every incident edge end, and the reversed cycle
    through the side-swapped corners.  The corner picked at an edge end
    is the lower-right for the tail, the upper-left for the head of a
    positive edge, and the upper-right for the head of a negative edge
    (the twist crosses the sides at the head end).
    """
    n = rot_off.shape[0] - 1
    for v in range(n):
        lo = rot_off[v]
        hi = rot_off[v + 1]
        d = hi - lo
        for i in range(d):
            e = rot_flat[lo + i]
            e2 = rot_flat[lo + (i + 1) % d]
            if tails[e] == v:
                cur = 4 * e + 2
            elif signs[e] > 0:
                cur = 4 * e + 1
            else:
                cur = 4 * e + 3
            if tails[e2] == v:
                nxt = 4 * e2 + 2
            elif signs[e2] > 0:
                nxt = 4 * e2 + 1
            else:
                nxt = 4 * e2 + 3
            P[cur] = nxt
            P[nxt ^ 2] = cur ^ 2
    return P


def pg_orbit_ids(P, ids):
    """Label the orbits of q -> P[q ^ 3]; return the orbit count."""
    size = P.shape[0]
    for q in range(size):
        ids[q] = -1
    count = 0
    for q0 in range(size):
        if ids[q0] < 0:
            q = q0
            while ids[q] < 0:
                ids[q] = count
                q = P[q ^ 3]
            count += 1
    return count


def group_orbit_count(P, use_alpha, work):
    """Orbit count of the group generated by P, gamma (and alpha if asked).

    ``work`` is a scratch int array of length >= 2 * len(P) used as a
    visited marker plus DFS stack.
    """
    size = P.shape[0]
    Pinv = work[size:2 * size]
    for q in range(size):
        work[q] = 0
        Pinv[P[q]] = q
    stack = np.empty(size, dtype=np.int64)
    count = 0
    for q0 in range(size):
        if work[q0] == 0:
            count += 1
            top = 0
            stack[top] = q0
            top += 1
            work[q0] = 1
            while top > 0:
                top -= 1
                q = stack[top]
                a = P[q]
                if work[a] == 0:
                    work[a] = 1
                    stack[top] = a
                    top += 1
                b = Pinv[q]
                if work[b] == 0:
                    work[b] = 1
                    stack[top] = b
                    top += 1
                c = q ^ 3
                if work[c] == 0:
                    work[c] = 1
                    stack[top] = c
                    top += 1
                if use_alpha:
                    d = q ^ 2
                    if work[d] == 0:
                        work[d] = 1
                        stack[top] = d
                        top += 1
    return count


def genus_histogram_range(n, m, tails, heads, signs, inc_flat, inc_off,
                          radix, suffix, idx_start, idx_stop,
                          rot_flat, P, vis, avail, hist):
    """Euler-genus histogram over rotation-system indices [start, stop).

    Rotation systems are indexed mixed-radix over vertices (vertex 0 most
    significant); the digit at a vertex Lehmer-unranks the arrangement of
    its non-anchor incident edges.  ``rot_flat``, ``P``, ``vis`` and
    ``avail`` are scratch arrays; ``hist`` accumulates counts by genus.
    """
    for idx in range(idx_start, idx_stop):
        # unrank the rotation system into rot_flat
        for v in range(n):
            lo = inc_off[v]
            hi = inc_off[v + 1]
            d = hi - lo
            rot_flat[lo] = inc_flat[lo]
            if d > 1:
                code = (idx // suffix[v + 1]) % radix[v]
                for i in range(d - 1):
                    avail[i] = inc_flat[lo + 1 + i]
                remaining = d - 1
                fact = np.int64(1)
                for i in range(2, d):
                    fact *= i
                for i in range(d - 1):
                    fact = fact // remaining
                    k = code // fact
                    code = code % fact
                    rot_flat[lo + 1 + i] = avail[k]
                    for j in range(k, remaining - 1):
                        avail[j] = avail[j + 1]
                    remaining -= 1
        # build the vertex permutation
        for v in range(n):
            lo = inc_off[v]
            hi = inc_off[v + 1]
            d = hi - lo
            for i in range(d):
                e = rot_flat[lo + i]
                e2 = rot_flat[lo + (i + 1) % d]
                if tails[e] == v:
                    cur = 4 * e + 2
                elif signs[e] > 0:
                    cur = 4 * e + 1
                else:
                    cur = 4 * e + 3
                if tails[e2] == v:
                    nxt = 4 * e2 + 2
                elif signs[e2] > 0:
                    nxt = 4 * e2 + 1
                else:
                    nxt = 4 * e2 + 3
                P[cur] = nxt
                P[nxt ^ 2] = cur ^ 2
        # count face orbits of P*gamma (stamp-marked visits)
        stamp = idx + 1
        orbits = 0
        for q0 in range(4 * m):
            if vis[q0] != stamp:
                q = q0
                while vis[q] != stamp:
                    vis[q] = stamp
                    q = P[q ^ 3]
                orbits += 1
        genus = 2 - n + m - orbits // 2
        hist[genus] += 1
    return 0


def genus_of_samples(n, m, tails, heads, signs, inc_flat, inc_off,
                     codes, rot_flat, P, vis, out):
    """Euler genus of each sampled rotation system.

    ``codes`` has one row per sample; the row concatenates, vertex by
    vertex, a permutation of 0..d_v-2 giving the order of the non-anchor
    incident edges after the anchor.
    """
    ns = codes.shape[0]
    for s in range(ns):
        pos = 0
        for v in range(n):
            lo = inc_off[v]
            hi = inc_off[v + 1]
            d = hi - lo
            rot_flat[lo] = inc_flat[lo]
            for i in range(d - 1):
                rot_flat[lo + 1 + i] = inc_flat[lo + 1 + codes[s, pos + i]]
            pos += d - 1
        for v in range(n):
            lo = inc_off[v]
            hi = inc_off[v + 1]
            d = hi - lo
            for i in range(d):
                e = rot_flat[lo + i]
                e2 = rot_flat[lo + (i + 1) % d]
                if tails[e] == v:
                    cur = 4 * e + 2
                elif signs[e] > 0:
                    cur = 4 * e + 1
                else:
                    cur = 4 * e + 3
                if tails[e2] == v:
                    nxt = 4 * e2 + 2
                elif signs[e2] > 0:
                    nxt = 4 * e2 + 1
                else:
                    nxt = 4 * e2 + 3
                P[cur] = nxt
                P[nxt ^ 2] = cur ^ 2
        stamp = s + 1
        orbits = 0
        for q0 in range(4 * m):
            if vis[q0] != stamp:
                q = q0
                while vis[q] != stamp:
                    vis[q] = stamp
                    q = P[q ^ 3]
                orbits += 1
        out[s] = 2 - n + m - orbits // 2
    return 0
