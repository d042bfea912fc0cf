"""Brute-force torus-side verifier for the labeling pipeline.

The torus is the rational span of the coroots modulo the cocharacter
lattice of X.  This module realizes that lattice concretely from the
annihilator condition (by integer linear algebra on the congruence system,
deliberately not reusing the coset computation of :mod:`kacoh.lattice`),
enumerates the n-th roots of a central element exactly, closes them under
the simple reflections, and compares class counts and representatives with
the labeling pipeline point by point.

The closure is the one hot loop in the package; it runs on the compiled
kernel when available (see :mod:`kacoh._orbit`).
"""

from __future__ import annotations

import itertools
import os
from dataclasses import dataclass
from fractions import Fraction

from ._orbit import orbit_partition
from .diagram import ExtendedDiagram
from .exactalg import (
    block_diag,
    column_style_hermite,
    congruence_lattice,
    invert,
    lcm_denominators,
    mat_vec,
    reduce_mod_basis,
)
from .labelings import barycenter_coweight, filter_for_central, enumerate_Kn, orbit_decompose
from .lattice import CentralElement, GroupSpec, check_central, dual_subgroup, spec_to_document, _frac_mod1
from .rootdata import BudgetError, InternalCheckError, SpecError, cartan_data


@dataclass(frozen=True)
class TorusPoint:
    """A torus element as canonically reduced simple-coroot coordinates."""

    coords: tuple

    @property
    def is_identity(self) -> bool:
        return all(x == 0 for x in self.coords)


@dataclass(frozen=True)
class Budget:
    """Size guard for brute-force runs; the point count grows as n**rank."""

    max_rank: int = 7
    max_n: int = 3

    @classmethod
    def from_env(cls) -> "Budget":
        return cls(
            max_rank=int(os.environ.get("KACOH_ORACLE_MAX_RANK", 7)),
            max_n=int(os.environ.get("KACOH_ORACLE_MAX_N", 3)),
        )


class CoweightLattice:
    """The cocharacter lattice of X inside the coweight lattice.

    Carries a triangular basis in coroot coordinates (columns, positive
    diagonal) supporting exact membership tests and a canonical reduction
    into the half-open fundamental box.
    """

    def __init__(self, spec: GroupSpec):
        self.spec = spec
        self.diagram: ExtendedDiagram = spec.diagram()
        rank = spec.total_rank
        self.rank = rank
        self.cartan = block_diag([cartan_data(t).cartan for t in spec.components])
        self.inverse_cartan = invert(self.cartan)

        # {t integer : sum_j c_j t_j in Z for all generators c}, in the
        # coordinates of the coweight basis.
        modulus = lcm_denominators(
            x for gen in spec.generators for x in gen
        ) or 1
        rows = [
            [int(x * modulus) for x in gen] for gen in spec.generators
        ]
        tbasis = congruence_lattice(rows, modulus, rank)
        self.coweight_basis = tuple(tbasis)  # columns, coweight coordinates

        cols = [mat_vec(self.inverse_cartan, t) for t in tbasis]
        denom = lcm_denominators(x for col in cols for x in col)
        scaled = [[int(x * denom) for x in col] for col in cols]
        hnf = column_style_hermite(scaled)
        if len(hnf) != rank:
            raise InternalCheckError("cocharacter lattice is not full rank")
        self.basis = tuple(
            tuple(Fraction(e, denom) for e in col) for col in hnf
        )
        for i, col in enumerate(self.basis):
            if any(col[k] != 0 for k in range(i)) or col[i] <= 0:
                raise InternalCheckError("lattice basis is not triangular")
        # Sandwich checks: contains all coroots, sits inside the coweights.
        for i in range(rank):
            e_i = tuple(int(k == i) for k in range(rank))
            if not self.contains(e_i):
                raise InternalCheckError("coroot lattice not contained in basis")
        for col in self.basis:
            for x in mat_vec(self.cartan, col):
                if Fraction(x).denominator != 1:
                    raise InternalCheckError("basis vector outside the coweights")

    def canonicalize(self, coords) -> tuple:
        return reduce_mod_basis(coords, self.basis)

    def canonical_point(self, coords) -> TorusPoint:
        return TorusPoint(coords=self.canonicalize(coords))

    def contains(self, coords) -> bool:
        return all(x == 0 for x in self.canonicalize(coords))

    def index_over_coroots(self) -> int:
        num = 1
        for i, col in enumerate(self.basis):
            num *= col[i]
        inv = 1 / num
        if inv.denominator != 1:
            raise InternalCheckError("non-integral lattice index")
        return int(inv)

    def central_representative(self, z: CentralElement) -> tuple:
        """A coweight whose pairings with the generators realize ``z``.

        Searched over the finitely many coweight classes modulo this
        lattice; rejects value tuples that are not homomorphisms.
        """
        check_central(self.spec, z)
        diag = [int(col[i]) for i, col in enumerate(self.coweight_basis)]
        for t in itertools.product(*(range(d) for d in diag)):
            ok = all(
                _frac_mod1(sum(c * ti for c, ti in zip(gen, t))) == val
                for gen, val in zip(self.spec.generators, z.values)
            )
            if ok:
                return tuple(mat_vec(self.inverse_cartan, t))
        raise SpecError("central element has no representative coweight")


def build_coweight_lattice(spec: GroupSpec) -> CoweightLattice:
    return CoweightLattice(spec)


def enumerate_roots_of_z(lattice: CoweightLattice, z: CentralElement, n: int) -> list:
    """All torus points whose n-th power is the central element.

    These are (zeta + mu)/n with mu running over lattice representatives
    modulo n; there are exactly n**rank of them.
    """
    zeta = lattice.central_representative(z)
    rank = lattice.rank
    points = []
    seen = set()
    for combo in itertools.product(range(n), repeat=rank):
        mu = [Fraction(0)] * rank
        for c, col in zip(combo, lattice.basis):
            if c:
                mu = [a + c * b for a, b in zip(mu, col)]
        coords = tuple(
            Fraction(zc + mc, n) for zc, mc in zip(zeta, mu)
        )
        pt = lattice.canonical_point(coords)
        if pt.coords in seen:
            raise InternalCheckError("duplicate root of the central element")
        seen.add(pt.coords)
        points.append(pt)
    return points


def _reflection_matrices(lattice: CoweightLattice) -> list:
    mats = []
    rank = lattice.rank
    cartan = lattice.cartan
    for i in range(rank):
        mats.append(
            tuple(
                tuple(int(k == j) - int(k == i) * cartan[i][j] for j in range(rank))
                for k in range(rank)
            )
        )
    return mats


def _orbit_indices(points, lattice: CoweightLattice) -> list:
    """Orbit partition of canonical points under the simple reflections."""
    if not points:
        return []
    rank = lattice.rank
    denom = lcm_denominators(
        [x for p in points for x in p.coords]
        + [x for col in lattice.basis for x in col]
    )
    scaled_points = [tuple(int(x * denom) for x in p.coords) for p in points]
    scaled_basis = [tuple(int(x * denom) for x in col) for col in lattice.basis]
    reflections = _reflection_matrices(lattice)
    try:
        return orbit_partition(scaled_points, reflections, scaled_basis)
    except KeyError as exc:
        raise InternalCheckError(
            "a reflection left the point set; the central element bookkeeping "
            f"is inconsistent (missing point {exc})"
        ) from None


def weyl_orbit_count(points, lattice: CoweightLattice) -> list:
    """Orbits of the Weyl group on a reflection-closed set of torus points.

    Closure under the simple reflections only; the group itself is never
    enumerated.  Returns orbits as tuples of TorusPoints, ordered by first
    appearance in the input.
    """
    partition = _orbit_indices(points, lattice)
    return [tuple(points[i] for i in orbit) for orbit in partition]


@dataclass(frozen=True)
class CheckReport:
    spec: GroupSpec
    z: CentralElement
    n: int
    kac_class_count: int
    torus_class_count: int
    kac_orbit_sizes: tuple
    torus_orbit_sizes: tuple
    matching: tuple         # per labeling class, index of its torus orbit
    ok: bool
    failure: str | None = None

    def as_document(self) -> dict:
        return {
            "spec": spec_to_document(self.spec),
            "z": [f"{Fraction(v).numerator}/{Fraction(v).denominator}" for v in self.z.values],
            "n": self.n,
            "kac_class_count": self.kac_class_count,
            "torus_class_count": self.torus_class_count,
            "kac_orbit_sizes": list(self.kac_orbit_sizes),
            "torus_orbit_sizes": list(self.torus_orbit_sizes),
            "matching": list(self.matching),
            "ok": self.ok,
            "failure": self.failure,
        }


def cross_check(
    spec: GroupSpec,
    z: CentralElement,
    n: int,
    budget: Budget | None = None,
) -> CheckReport:
    """Compare the labeling pipeline against the torus brute force.

    Both sides classify the n-th roots of z.  Beyond equal counts, the
    labeling representatives are mapped through their alcove points into the
    torus orbits and that assignment must be a bijection of orbit sets; the
    first class that fails is identified in the report.
    """
    budget = budget if budget is not None else Budget.from_env()
    rank = spec.total_rank
    if rank > budget.max_rank or n > budget.max_n:
        raise BudgetError(
            f"refusing brute-force run: rank {rank}, n {n} exceeds budget "
            f"(max_rank {budget.max_rank}, max_n {budget.max_n}); "
            f"this run would enumerate {n ** rank} torus points"
        )

    diagram = spec.diagram()
    labelings = filter_for_central(enumerate_Kn(diagram, n), spec, z, diagram)
    kac_orbits = orbit_decompose(labelings, dual_subgroup(spec))

    lattice = build_coweight_lattice(spec)
    points = enumerate_roots_of_z(lattice, z, n)
    torus_partition = _orbit_indices(points, lattice)
    point_to_orbit = {}
    for oi, orbit in enumerate(torus_partition):
        for pi in orbit:
            point_to_orbit[points[pi].coords] = oi

    kac_sizes = tuple(len(o.members) for o in kac_orbits)
    torus_sizes = tuple(len(o) for o in torus_partition)

    matching = []
    failure = None
    used = {}
    for ci, orbit in enumerate(kac_orbits):
        coords = lattice.canonicalize(
            barycenter_coweight(orbit.representative, diagram)
        )
        target = point_to_orbit.get(coords)
        if target is None:
            failure = (
                f"class {ci} (representative {orbit.representative.labels}) "
                "maps outside the root set"
            )
            break
        if target in used:
            failure = (
                f"classes {used[target]} and {ci} both map to torus orbit "
                f"{target}; matching is not injective"
            )
            break
        used[target] = ci
        matching.append(target)
    if failure is None and len(kac_orbits) != len(torus_partition):
        failure = (
            f"class counts differ: {len(kac_orbits)} labeling classes, "
            f"{len(torus_partition)} torus classes"
        )

    return CheckReport(
        spec=spec,
        z=z,
        n=n,
        kac_class_count=len(kac_orbits),
        torus_class_count=len(torus_partition),
        kac_orbit_sizes=kac_sizes,
        torus_orbit_sizes=torus_sizes,
        matching=tuple(matching),
        ok=failure is None,
        failure=failure,
    )
