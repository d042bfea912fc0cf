"""Pure-Python orbit-closure kernel.

Reference implementation of the hot loop of the torus checker: close a set
of integer-scaled torus points under integer reflection matrices, reducing
each image into the fundamental box of a triangular integer lattice basis.
The compiled twin in ``_orbitcore.pyx`` must produce bit-identical output;
``kacoh._orbit`` picks whichever is available.
"""

from __future__ import annotations


def reduce_point(vec, basis):
    """Reduce an integer vector modulo a lower-triangular integer basis.

    ``basis`` is a list of columns with positive diagonal; the result has
    0 <= out[i] < basis[i][i] for every coordinate.
    """
    x = list(vec)
    dim = len(x)
    for i in range(dim):
        col = basis[i]
        q = x[i] // col[i]
        if q:
            for k in range(i, dim):
                x[k] -= q * col[k]
    return tuple(x)


def orbit_partition(points, reflections, basis):
    """Partition scaled points into orbits of the reflection closure.

    ``points`` must already be reduced and pairwise distinct.  Returns a
    list of orbits, each a sorted list of indices into ``points``, ordered
    by their smallest member.  Raises KeyError if a reflection image leaves
    the point set.
    """
    dim = len(basis)
    index = {pt: i for i, pt in enumerate(points)}
    seen = [False] * len(points)
    orbits = []
    for start in range(len(points)):
        if seen[start]:
            continue
        seen[start] = True
        orbit = [start]
        frontier = [start]
        while frontier:
            i = frontier.pop()
            pt = points[i]
            for mat in reflections:
                image = tuple(
                    sum(mat[r][c] * pt[c] for c in range(dim)) for r in range(dim)
                )
                j = index[reduce_point(image, basis)]
                if not seen[j]:
                    seen[j] = True
                    orbit.append(j)
                    frontier.append(j)
        orbits.append(sorted(orbit))
    return orbits
