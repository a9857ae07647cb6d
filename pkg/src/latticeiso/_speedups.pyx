# cython: language_level=3, boundscheck=False, wraparound=False, cdivision=True
"""Compiled kernels. Same contract and emission order as ``_purepy``."""

from libc.stdlib cimport malloc, calloc, realloc, free
from libc.string cimport memcpy

import numpy as np

from latticeiso import _purepy

BACKEND = "cython"

cdef enum:
    GRID_LIMIT = 4194304


def boundary_size(points):
    """Number of vertices outside ``points`` with an l1-neighbour inside."""
    cdef Py_ssize_t m = len(points)
    if m == 0:
        return 0
    cdef long *xs = <long *> malloc(m * sizeof(long))
    cdef long *ys = <long *> malloc(m * sizeof(long))
    if xs == NULL or ys == NULL:
        free(xs)
        free(ys)
        raise MemoryError()
    cdef Py_ssize_t i = 0
    cdef long xmin, xmax, ymin, ymax, w, h, X, Y, k
    cdef unsigned char *grid
    cdef long count = 0
    try:
        for p in points:
            xs[i] = p[0]
            ys[i] = p[1]
            i += 1
        xmin = xmax = xs[0]
        ymin = ymax = ys[0]
        for i in range(1, m):
            if xs[i] < xmin:
                xmin = xs[i]
            elif xs[i] > xmax:
                xmax = xs[i]
            if ys[i] < ymin:
                ymin = ys[i]
            elif ys[i] > ymax:
                ymax = ys[i]
        w = xmax - xmin + 3
        h = ymax - ymin + 3
        if w * h > GRID_LIMIT:
            # sparse, spread-out input: a dense grid would be wasteful
            return _purepy.boundary_size(points)
        grid = <unsigned char *> calloc(w * h, 1)
        if grid == NULL:
            raise MemoryError()
        for i in range(m):
            grid[(ys[i] - ymin + 1) * w + (xs[i] - xmin + 1)] = 1
        for i in range(m):
            X = xs[i] - xmin + 1
            Y = ys[i] - ymin + 1
            k = Y * w + X
            if grid[k + 1] == 0:
                grid[k + 1] = 2
                count += 1
            if grid[k - 1] == 0:
                grid[k - 1] = 2
                count += 1
            if grid[k + w] == 0:
                grid[k + w] = 2
                count += 1
            if grid[k - w] == 0:
                grid[k - w] = 2
                count += 1
        free(grid)
        return count
    finally:
        free(xs)
        free(ys)


cdef struct Ctx:
    int n
    int W
    int ox
    int oy
    int cap
    int size
    int *seen
    int *allowed
    int *inset
    int *stamp
    int gen
    int *cells
    int *untried
    int off[24]
    short *out
    int *bout
    long m
    long mcap


cdef int _emit(Ctx *c) except -1:
    cdef int i, cell, nb, k
    cdef int cnt = 0
    cdef int steps[4]
    cdef long newcap
    cdef short *out2
    cdef int *bout2
    steps[0] = 1
    steps[1] = -1
    steps[2] = c.W
    steps[3] = -c.W
    if c.m == c.mcap:
        newcap = c.mcap * 2 if c.mcap > 0 else 1024
        out2 = <short *> realloc(c.out, newcap * c.n * 2 * sizeof(short))
        if out2 == NULL:
            raise MemoryError()
        c.out = out2
        bout2 = <int *> realloc(c.bout, newcap * sizeof(int))
        if bout2 == NULL:
            raise MemoryError()
        c.bout = bout2
        c.mcap = newcap
    c.gen += 1
    for i in range(c.n):
        cell = c.cells[i]
        c.out[(c.m * c.n + i) * 2] = <short> (cell % c.W - c.ox)
        c.out[(c.m * c.n + i) * 2 + 1] = <short> (cell // c.W - c.oy)
        for k in range(4):
            nb = cell + steps[k]
            if c.inset[nb] == 0 and c.stamp[nb] != c.gen:
                c.stamp[nb] = c.gen
                cnt += 1
    c.bout[c.m] = cnt
    c.m += 1
    return 0


cdef int _grow(Ctx *c, int level, int ulen) except -1:
    cdef int *U = c.untried + level * c.cap
    cdef int *V = c.untried + (level + 1) * c.cap
    cdef int cell, nb, k, i, nlen
    while ulen > 0:
        ulen -= 1
        cell = U[ulen]
        c.cells[c.size] = cell
        c.size += 1
        c.inset[cell] = 1
        if c.size == c.n:
            _emit(c)
        else:
            memcpy(V, U, ulen * sizeof(int))
            nlen = ulen
            for k in range(24):
                nb = cell + c.off[k]
                if c.seen[nb] == 0 and c.allowed[nb]:
                    c.seen[nb] = 1
                    V[nlen] = nb
                    nlen += 1
            _grow(c, level + 1, nlen)
            for i in range(ulen, nlen):
                c.seen[V[i]] = 0
        c.size -= 1
        c.inset[cell] = 0
    return 0


def enumerate_candidates(int n):
    """See ``_purepy.enumerate_candidates``."""
    if n < 1:
        raise ValueError("n must be >= 1")
    cdef Ctx c
    cdef int margin = 3
    cdef int span = 2 * (n - 1)
    cdef int H, cells, x, y, k, dx, dy
    c.n = n
    c.ox = span + margin
    c.oy = margin
    c.W = 2 * span + 1 + 2 * margin
    H = span + 1 + 2 * margin
    cells = c.W * H
    c.cap = 24 * n + 2
    c.size = 0
    c.gen = 0
    c.m = 0
    c.mcap = 0
    c.out = NULL
    c.bout = NULL
    c.seen = <int *> calloc(cells, sizeof(int))
    c.allowed = <int *> calloc(cells, sizeof(int))
    c.inset = <int *> calloc(cells, sizeof(int))
    c.stamp = <int *> calloc(cells, sizeof(int))
    c.cells = <int *> calloc(n, sizeof(int))
    c.untried = <int *> calloc((n + 1) * c.cap, sizeof(int))
    try:
        if (c.seen == NULL or c.allowed == NULL or c.inset == NULL
                or c.stamp == NULL or c.cells == NULL or c.untried == NULL):
            raise MemoryError()
        k = 0
        for dy in range(-2, 3):
            for dx in range(-2, 3):
                if dx == 0 and dy == 0:
                    continue
                c.off[k] = dy * c.W + dx
                k += 1
        for y in range(0, span + 1):
            for x in range(-span, span + 1):
                if y > 0 or x >= 0:
                    c.allowed[(y + c.oy) * c.W + x + c.ox] = 1
        c.seen[c.oy * c.W + c.ox] = 1
        c.untried[0] = c.oy * c.W + c.ox
        _grow(&c, 0, 1)
        coords = np.empty((c.m, n, 2), dtype=np.int16)
        bsizes = np.empty(c.m, dtype=np.int32)
        if c.m > 0:
            _copy_out(coords, bsizes, &c)
        return coords, bsizes
    finally:
        free(c.seen)
        free(c.allowed)
        free(c.inset)
        free(c.stamp)
        free(c.cells)
        free(c.untried)
        free(c.out)
        free(c.bout)


cdef void _copy_out(short[:, :, ::1] coords, int[::1] bsizes, Ctx *c):
    memcpy(&coords[0, 0, 0], c.out, c.m * c.n * 2 * sizeof(short))
    memcpy(&bsizes[0], c.bout, c.m * sizeof(int))
