"""Kac n-labelings: enumeration, congruence filters, orbit decomposition.

A labeling assigns a nonnegative integer to every vertex of the extended
diagram so that on each component the mark-weighted sum equals n.  The flat
machine order is component-major with local order 1..rank, 0; the human
format mirrors the usual way these are printed, reading along the diagram
with slashes between rows/groups (for E7: three then the branch pair then
the tail, so the all-zero labeling with 2 at the extra vertex is
``000/00/002``).
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from fractions import Fraction

from .diagram import (
    ExtendedDiagram,
    FundamentalGroup,
    FundamentalGroupElement,
    permuted_labels,
)
from .lattice import CentralElement, GroupSpec, _frac_mod1
from .rootdata import InternalCheckError, LabelingError, SimpleType


@dataclass(frozen=True, order=True)
class KacLabeling:
    labels: tuple
    n: int


@dataclass(frozen=True)
class LabelingOrbit:
    representative: KacLabeling
    members: tuple
    stabilizer_order: int


def _component_solutions(diagram: ExtendedDiagram, k: int, n: int) -> list:
    """All solutions of the weighted sum on one component, lexicographic."""
    slots = list(diagram.component_slots(k))
    marks = [diagram.marks[s] for s in slots]

    def rec(pos: int, remaining: int):
        if pos == len(slots) - 1:
            # The extra vertex sits last in slot order and has mark 1.
            yield (remaining,)
            return
        m = marks[pos]
        for value in range(remaining // m + 1):
            for rest in rec(pos + 1, remaining - m * value):
                yield (value,) + rest

    return [sol for sol in rec(0, n)]


def enumerate_Kn(diagram: ExtendedDiagram, n: int) -> list:
    """Every Kac n-labeling, in lexicographic order of the flat label tuple."""
    if n < 1:
        raise LabelingError(f"n must be positive, got {n}")
    per_component = [
        _component_solutions(diagram, k, n) for k in range(len(diagram.components))
    ]
    out = []
    for combo in itertools.product(*per_component):
        flat = tuple(itertools.chain.from_iterable(combo))
        out.append(KacLabeling(labels=flat, n=n))
    out.sort()
    return out


def labeling_weight(spec: GroupSpec, diagram: ExtendedDiagram, generator, labeling: KacLabeling) -> Fraction:
    """Sum of generator coefficients against the labels at the root vertices."""
    total = Fraction(0)
    for coeff, slot in zip(generator, diagram.pi_slots()):
        total += coeff * labeling.labels[slot]
    return _frac_mod1(total)


def filter_for_central(labelings, spec: GroupSpec, z: CentralElement, diagram: ExtendedDiagram) -> list:
    """Keep labelings whose generator sums match the central element's values."""
    out = []
    for p in labelings:
        if all(
            labeling_weight(spec, diagram, gen, p) == val
            for gen, val in zip(spec.generators, z.values)
        ):
            out.append(p)
    return out


def filter_matching_q(labelings, spec: GroupSpec, q: KacLabeling, diagram: ExtendedDiagram) -> list:
    """Keep labelings congruent to q against every generator of X/Q."""
    diagram.check_labeling(q.labels, q.n)
    targets = [labeling_weight(spec, diagram, gen, q) for gen in spec.generators]
    out = []
    for p in labelings:
        if all(
            labeling_weight(spec, diagram, gen, p) == t
            for gen, t in zip(spec.generators, targets)
        ):
            out.append(p)
    return out


def act_on_labeling(g: FundamentalGroupElement, p: KacLabeling) -> KacLabeling:
    """Left action by diagram automorphism: new label at i is old at sigma^-1(i)."""
    return KacLabeling(labels=permuted_labels(g.sigma, p.labels), n=p.n)


def orbit_decompose(labelings, group: FundamentalGroup) -> list:
    """Partition into orbits of the group action.

    The input must be closed under the action; a labeling escaping the set
    signals an inconsistency between a filter and the action and is reported
    as an internal error rather than patched over.
    """
    pool = {p: None for p in labelings}
    if len(pool) != len(labelings):
        raise LabelingError("duplicate labelings in orbit input")
    orbits = []
    for p in labelings:
        if pool[p] is not None:
            continue
        orbit = {p}
        frontier = [p]
        while frontier:
            cur = frontier.pop()
            for g in group.elements:
                image = act_on_labeling(g, cur)
                if image not in pool:
                    raise InternalCheckError(
                        f"action moved {cur.labels} to {image.labels}, "
                        "which is outside the filtered set"
                    )
                if image not in orbit:
                    orbit.add(image)
                    frontier.append(image)
        members = tuple(sorted(orbit))
        if group.order % len(members):
            raise InternalCheckError("orbit size does not divide the group order")
        for m in members:
            pool[m] = members[0]
        orbits.append(
            LabelingOrbit(
                representative=members[0],
                members=members,
                stabilizer_order=group.order // len(members),
            )
        )
    orbits.sort(key=lambda o: o.representative)
    return orbits


def compact_labeling(diagram: ExtendedDiagram, n: int = 2) -> KacLabeling:
    """The labeling with everything on the extra vertices; the trivial twist."""
    labels = [0] * diagram.num_vertices
    for k, typ in enumerate(diagram.components):
        labels[diagram.slot(k, 0)] = n
    return KacLabeling(labels=tuple(labels), n=n)


def barycenter_coweight(p: KacLabeling, diagram: ExtendedDiagram) -> tuple:
    """The alcove point of a labeling, in simple-coroot coordinates.

    Equals 1/n times the sum of the root-vertex labels against the
    fundamental coweights; the extra-vertex labels are determined by the
    others and do not enter.
    """
    from .rootdata import cartan_data, fundamental_coweight

    coords = []
    for k, typ in enumerate(diagram.components):
        data = cartan_data(typ)
        block = [Fraction(0)] * typ.rank
        for j in range(1, typ.rank + 1):
            label = p.labels[diagram.slot(k, j)]
            if label:
                cw = fundamental_coweight(data, j)
                block = [a + label * b for a, b in zip(block, cw)]
        coords.extend(Fraction(x, p.n) for x in block)
    return tuple(coords)


# ---------------------------------------------------------------------------
# Text formats


def _layout(typ: SimpleType) -> list:
    """Reading order of one component as groups of local vertex ids."""
    r = typ.rank
    if typ.family == "A":
        return [list(range(1, r + 1)), [0]]
    if typ.family == "B":
        return [[0, 1], list(range(2, r + 1))]
    if typ.family == "C":
        return [list(range(r + 1))]
    if typ.family == "D":
        groups = [[0, 1], list(range(2, r - 1)), [r - 1, r]]
        return [g for g in groups if g]
    if typ.family == "E" and r == 6:
        return [[1, 2, 3, 4, 5], [6], [0]]
    if typ.family == "E" and r == 7:
        return [[1, 2, 3], [4, 7], [5, 6, 0]]
    if typ.family == "E" and r == 8:
        return [[0, 1, 2, 3, 4], [5, 8], [6, 7]]
    if typ.family == "F":
        return [[0, 1, 2, 3, 4]]
    return [[0, 2, 1]]  # G2


def format_labeling(diagram: ExtendedDiagram, p: KacLabeling, style: str = "display") -> str:
    """Render a labeling; ``display`` is the slashed digit form, ``flat`` the
    comma-separated machine form (always round-trippable)."""
    if style == "flat":
        return ",".join(str(x) for x in p.labels)
    if style != "display":
        raise ValueError(f"unknown labeling style {style!r}")
    parts = []
    for k, typ in enumerate(diagram.components):
        groups = []
        for group in _layout(typ):
            groups.append(
                "".join(str(p.labels[diagram.slot(k, v)]) for v in group)
            )
        parts.append("/".join(groups))
    return ";".join(parts)


def parse_labeling(diagram: ExtendedDiagram, text: str) -> KacLabeling:
    """Parse either labeling format; n is inferred from the weighted sums.

    The digit form only covers labels 0..9; use the flat form beyond that.
    """
    text = text.strip()
    if "," in text:
        try:
            labels = tuple(int(x) for x in text.replace(";", ",").split(","))
        except ValueError as exc:
            raise LabelingError(f"bad flat labeling {text!r}") from exc
    else:
        comps = [c for c in text.replace(";", " ").split() if c]
        if len(comps) != len(diagram.components):
            raise LabelingError(
                f"labeling {text!r} has {len(comps)} component groups, "
                f"expected {len(diagram.components)}"
            )
        labels = [0] * diagram.num_vertices
        for k, (typ, comp) in enumerate(zip(diagram.components, comps)):
            digits = comp.replace("/", "")
            if not digits.isdigit() or len(digits) != typ.rank + 1:
                raise LabelingError(
                    f"component {k} of {text!r} needs {typ.rank + 1} digits"
                )
            order = [v for group in _layout(typ) for v in group]
            for v, ch in zip(order, digits):
                labels[diagram.slot(k, v)] = int(ch)
        labels = tuple(labels)
    if len(labels) != diagram.num_vertices:
        raise LabelingError(
            f"labeling {text!r} has {len(labels)} labels, "
            f"expected {diagram.num_vertices}"
        )
    sums = set()
    for k in range(len(diagram.components)):
        sums.add(
            sum(diagram.marks[s] * labels[s] for s in diagram.component_slots(k))
        )
    if len(sums) != 1:
        raise LabelingError(
            f"components of {text!r} have different weighted sums {sorted(sums)}"
        )
    n = sums.pop()
    p = KacLabeling(labels=labels, n=n)
    diagram.check_labeling(p.labels, n)
    return p
