# cython: language_level=3, boundscheck=False, wraparound=False, cdivision=True
"""Compiled orbit-closure kernel; see _orbit_py for the reference version.

Coordinates are scaled integers and stay tiny (bounded by the lattice
diagonal times the scaling denominator), so C int64 arithmetic is safe.
"""

from libc.stdlib cimport free, malloc


def orbit_partition(points, reflections, basis):
    """Same contract and output as kacoh._orbit_py.orbit_partition."""
    cdef Py_ssize_t npts = len(points)
    cdef Py_ssize_t dim = len(basis)
    cdef Py_ssize_t nref = len(reflections)
    if npts == 0:
        return []

    cdef long long *pts = <long long *>malloc(npts * dim * sizeof(long long))
    cdef long long *refl = <long long *>malloc(nref * dim * dim * sizeof(long long))
    cdef long long *bas = <long long *>malloc(dim * dim * sizeof(long long))
    cdef long long *work = <long long *>malloc(dim * sizeof(long long))
    cdef long long *img = <long long *>malloc(dim * sizeof(long long))
    if pts == NULL or refl == NULL or bas == NULL or work == NULL or img == NULL:
        free(pts); free(refl); free(bas); free(work); free(img)
        raise MemoryError()

    cdef Py_ssize_t i, j, k, r, c
    cdef long long q, v, d
    try:
        for i in range(npts):
            row = points[i]
            for j in range(dim):
                pts[i * dim + j] = row[j]
        for r in range(nref):
            mat = reflections[r]
            for i in range(dim):
                mrow = mat[i]
                for j in range(dim):
                    refl[(r * dim + i) * dim + j] = mrow[j]
        # basis stored column-major: bas[i*dim + k] is entry k of column i
        for i in range(dim):
            col = basis[i]
            for k in range(dim):
                bas[i * dim + k] = col[k]

        index = {tuple(points[i]): i for i in range(npts)}
        seen = [False] * npts
        orbits = []
        frontier = []
        for start in range(npts):
            if seen[start]:
                continue
            seen[start] = True
            orbit = [start]
            frontier.append(start)
            while frontier:
                i = frontier.pop()
                for r in range(nref):
                    for c in range(dim):
                        v = 0
                        for k in range(dim):
                            v += refl[(r * dim + c) * dim + k] * pts[i * dim + k]
                        img[c] = v
                    # triangular reduction into the fundamental box
                    for c in range(dim):
                        d = bas[c * dim + c]
                        v = img[c]
                        if v >= 0:
                            q = v / d
                        else:
                            q = -((-v + d - 1) / d)
                        if q != 0:
                            for k in range(c, dim):
                                img[k] -= q * bas[c * dim + k]
                    key = tuple([img[k] for k in range(dim)])
                    j = index[key]
                    if not seen[j]:
                        seen[j] = True
                        orbit.append(j)
                        frontier.append(j)
            orbit.sort()
            orbits.append(orbit)
        return orbits
    finally:
        free(pts)
        free(refl)
        free(bas)
        free(work)
        free(img)
