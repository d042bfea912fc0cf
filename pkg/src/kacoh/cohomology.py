"""Top-level queries: cohomology class sets and root classification.

The answers are always orbit sets of Kac labelings together with explicit
witnesses: for twisted-form cohomology a barycentric cocycle vector per
class, for n-th roots a torus point per class.  Counts alone would hide the
constructive content, and the witnesses are what the torus-side checker
matches against.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .diagram import ExtendedDiagram, fundamental_group
from .labelings import (
    KacLabeling,
    LabelingOrbit,
    barycenter_coweight,
    compact_labeling,
    enumerate_Kn,
    filter_for_central,
    filter_matching_q,
    format_labeling,
    labeling_weight,
    orbit_decompose,
)
from .lattice import (
    CentralElement,
    GroupSpec,
    check_central,
    dual_subgroup,
    spec_to_document,
)
from .oracle import CoweightLattice, TorusPoint, build_coweight_lattice
from .rootdata import InternalCheckError, LabelingError, SimpleType


@dataclass(frozen=True)
class H1Result:
    group_spec: GroupSpec
    twist: KacLabeling
    classes: tuple            # LabelingOrbit, ...
    witnesses: tuple          # per class, Fractions over the root vertices
    neutral_index: int


@dataclass(frozen=True)
class RootsResult:
    z: CentralElement
    n: int
    classes: tuple            # LabelingOrbit, ...
    torus_points: tuple       # per class, TorusPoint of the representative


def phi(p: KacLabeling, spec: GroupSpec, lattice: CoweightLattice | None = None) -> TorusPoint:
    """Torus point of a labeling: its alcove point modulo the coweight lattice."""
    if lattice is None:
        lattice = build_coweight_lattice(spec)
    return lattice.canonical_point(barycenter_coweight(p, lattice.diagram))


def z_from_q(q: KacLabeling, n: int, spec: GroupSpec) -> CentralElement:
    """The central element that is the n-th power of the labeling's point."""
    diagram = spec.diagram()
    diagram.check_labeling(q.labels, n)
    if q.n != n:
        raise LabelingError(f"labeling has n={q.n}, expected {n}")
    values = tuple(
        labeling_weight(spec, diagram, gen, q) for gen in spec.generators
    )
    z = CentralElement(values=values)
    check_central(spec, z)
    return z


def _witness(member: KacLabeling, q: KacLabeling, diagram: ExtendedDiagram) -> tuple:
    return tuple(
        Fraction(member.labels[s] - q.labels[s], 2) for s in diagram.pi_slots()
    )


def h1_inner_form(spec: GroupSpec, q: KacLabeling) -> H1Result:
    """Cohomology classes of the inner form twisted by a Kac 2-labeling.

    Filter the 2-labelings to those congruent to q, decompose into orbits of
    the coweight classes of X, and attach the cocycle vector
    (labels - q labels)/2 of each class.  The class containing q is the
    neutral one; its witness is taken at q itself, so it is exactly zero.
    """
    diagram = spec.diagram()
    diagram.check_labeling(q.labels, q.n)
    if q.n != 2:
        raise LabelingError(f"twisting labelings must have n=2, got n={q.n}")
    all2 = enumerate_Kn(diagram, 2)
    matching = filter_matching_q(all2, spec, q, diagram)
    orbits = orbit_decompose(matching, dual_subgroup(spec))
    neutral = next(i for i, o in enumerate(orbits) if q in o.members)
    witnesses = tuple(
        _witness(q if i == neutral else o.representative, q, diagram)
        for i, o in enumerate(orbits)
    )
    return H1Result(
        group_spec=spec,
        twist=q,
        classes=tuple(orbits),
        witnesses=witnesses,
        neutral_index=neutral,
    )


def h1_adjoint(types) -> H1Result:
    """Cohomology of the adjoint form: orbits of the full coweight-class group.

    Computed both directly on all 2-labelings and as the twisted-form query
    of the adjoint lattice at the trivial twist; the two must agree exactly.
    """
    from .lattice import validate_spec

    comps = tuple(
        t if isinstance(t, SimpleType) else SimpleType.parse(t) for t in types
    )
    spec = validate_spec(comps, [])
    diagram = spec.diagram()
    direct = orbit_decompose(enumerate_Kn(diagram, 2), fundamental_group(diagram))
    result = h1_inner_form(spec, compact_labeling(diagram))
    if tuple(direct) != result.classes:
        raise InternalCheckError(
            "direct adjoint orbit decomposition disagrees with the "
            "twisted-form specialization"
        )
    return result


def nth_root_classes(spec: GroupSpec, z: CentralElement, n: int) -> RootsResult:
    """Conjugacy classes of n-th roots of a central element.

    Orbits of the congruence-filtered n-labelings under the coweight classes
    of X, with the torus point of each representative as witness.
    """
    check_central(spec, z)
    diagram = spec.diagram()
    lattice = build_coweight_lattice(spec)
    labelings = filter_for_central(enumerate_Kn(diagram, n), spec, z, diagram)
    orbits = orbit_decompose(labelings, dual_subgroup(spec))
    points = tuple(phi(o.representative, spec, lattice) for o in orbits)
    return RootsResult(z=z, n=n, classes=tuple(orbits), torus_points=points)


def real_form_table(typ: SimpleType) -> tuple:
    """The menu of inner twists: adjoint classes with their representatives."""
    return h1_adjoint([typ]).classes


# ---------------------------------------------------------------------------
# Structured documents


def _frac_str(x) -> str:
    f = Fraction(x)
    return f"{f.numerator}/{f.denominator}"


def _orbit_doc(orbit: LabelingOrbit, diagram: ExtendedDiagram) -> dict:
    return {
        "representative": list(orbit.representative.labels),
        "representative_display": format_labeling(diagram, orbit.representative),
        "members": [list(m.labels) for m in orbit.members],
        "size": len(orbit.members),
        "stabilizer_order": orbit.stabilizer_order,
    }


def h1_document(result: H1Result) -> dict:
    diagram = result.group_spec.diagram()
    classes = []
    for orbit, witness in zip(result.classes, result.witnesses):
        doc = _orbit_doc(orbit, diagram)
        doc["witness"] = [_frac_str(x) for x in witness]
        classes.append(doc)
    return {
        "spec": spec_to_document(result.group_spec),
        "twist": list(result.twist.labels),
        "twist_display": format_labeling(diagram, result.twist),
        "class_count": len(result.classes),
        "neutral_index": result.neutral_index,
        "classes": classes,
    }


def roots_document(result: RootsResult, spec: GroupSpec) -> dict:
    diagram = spec.diagram()
    classes = []
    for orbit, point in zip(result.classes, result.torus_points):
        doc = _orbit_doc(orbit, diagram)
        doc["torus_point"] = [_frac_str(x) for x in point.coords]
        classes.append(doc)
    return {
        "spec": spec_to_document(spec),
        "z": [_frac_str(v) for v in result.z.values],
        "n": result.n,
        "class_count": len(result.classes),
        "classes": classes,
    }
