"""Character lattices between root and weight lattice, and the center.

A group is specified by its simple components plus generators of the
quotient X/Q, each given as the rational coefficient vector of a weight in
the simple-root basis (the entries at mark-1 vertices are exactly its
pairings with the generating coweight classes, which is what every
congruence condition downstream consumes).

A class in P/Q is faithfully represented by its coefficient vector reduced
into [0,1) per entry (two weights are congruent mod Q iff the vectors agree),
so subgroup closure and canonical generators are plain set arithmetic on
Fraction tuples.
"""

from __future__ import annotations

import itertools
import json
from dataclasses import dataclass
from fractions import Fraction

from .diagram import (
    ExtendedDiagram,
    FundamentalGroup,
    FundamentalGroupElement,
    build_extended_diagram,
    fundamental_group,
)
from .exactalg import block_diag, lcm_denominators, mat_vec, transpose
from .rootdata import SimpleType, SpecError, cartan_data

PRESETS = ("sc", "ad", "halfspin", "so")


@dataclass(frozen=True)
class GroupSpec:
    components: tuple                 # SimpleType, ...
    generators: tuple                 # canonical generator vectors over the roots

    @property
    def total_rank(self) -> int:
        return sum(t.rank for t in self.components)

    def diagram(self) -> ExtendedDiagram:
        return build_extended_diagram(self.components)

    def describe(self) -> str:
        comps = "x".join(str(t) for t in self.components)
        if not self.generators:
            return f"{comps} (adjoint lattice)"
        gens = "; ".join(
            "(" + ", ".join(str(x) for x in g) + ")" for g in self.generators
        )
        return f"{comps} with X/Q generated by {gens}"


@dataclass(frozen=True)
class CentralElement:
    """A central element, recorded by its values on the spec's generators.

    Each value is the class in Q/Z of the pairing of the generator with a
    logarithm of the element, stored as a Fraction in [0,1).
    """

    values: tuple

    @property
    def is_trivial(self) -> bool:
        return all(v == 0 for v in self.values)


def _frac_mod1(x) -> Fraction:
    f = Fraction(x)
    return f - (f.numerator // f.denominator)


def _vec_mod1(vec) -> tuple:
    return tuple(_frac_mod1(x) for x in vec)


def _global_cartan(components) -> tuple:
    return block_diag([cartan_data(t).cartan for t in components])


def element_order(vec) -> int:
    """Order of a class vector in P/Q: the lcm of entry denominators."""
    return lcm_denominators(vec)


def _closure(vectors, rank: int) -> set:
    zero = tuple(Fraction(0) for _ in range(rank))
    out = {zero}
    frontier = [zero]
    gens = [_vec_mod1(v) for v in vectors]
    while frontier:
        nxt = []
        for base in frontier:
            for g in gens:
                s = _vec_mod1(tuple(a + b for a, b in zip(base, g)))
                if s not in out:
                    out.add(s)
                    nxt.append(s)
        frontier = nxt
    return out


def _staircase(closure: set, rank: int):
    """Canonical generators with relative orders and reduction data.

    Greedily picks the lexicographically least element of maximal order
    relative to the span so far.  Returns a list of
    ``(generator, relative_order, combo)`` where ``combo`` expresses
    ``relative_order * generator`` in normal form over the earlier
    generators.  The homomorphism constraints these encode generate all
    relations of the group, since the normal forms already exhaust it.
    """
    zero = tuple(Fraction(0) for _ in range(rank))
    span = {zero: ()}
    stairs = []
    while len(span) < len(closure):
        best = None
        for e in sorted(closure):
            if e in span:
                continue
            d = 1
            cur = e
            while cur not in span:
                cur = _vec_mod1(tuple(a + b for a, b in zip(cur, e)))
                d += 1
            if best is None or d > best[1]:
                best = (e, d)
        gen, d = best
        mult = _vec_mod1(tuple(d * x for x in gen))
        combo = span[mult]
        stairs.append((gen, d, combo))
        idx = len(stairs) - 1
        new_span = {}
        for vec, coeffs in span.items():
            cur = vec
            for k in range(d):
                new_span[cur] = coeffs + ((idx, k),) if k else coeffs
                cur = _vec_mod1(tuple(a + b for a, b in zip(cur, gen)))
        span = new_span
    return stairs


def validate_spec(components, xq_generators) -> GroupSpec:
    """Check generators live in the weight lattice and canonicalize them."""
    comps = tuple(
        t if isinstance(t, SimpleType) else SimpleType.parse(t) for t in components
    )
    if not comps:
        raise SpecError("empty component list")
    diagram = build_extended_diagram(comps)
    rank = diagram.total_rank
    cartan_t = transpose(_global_cartan(comps))
    gens = []
    for raw in xq_generators:
        vec = tuple(Fraction(x) for x in raw)
        if len(vec) != rank:
            raise SpecError(
                f"generator has {len(vec)} coefficients, expected {rank}"
            )
        pairings = mat_vec(cartan_t, vec)
        for j, val in enumerate(pairings):
            if Fraction(val).denominator != 1:
                raise SpecError(
                    f"generator {raw} is not a weight: pairing with coroot "
                    f"{j + 1} is {val}"
                )
        gens.append(vec)
    closure = _closure(gens, rank)
    stairs = _staircase(closure, rank)
    return GroupSpec(components=comps, generators=tuple(g for g, _, _ in stairs))


def xq_order(spec: GroupSpec) -> int:
    return len(_closure(spec.generators, spec.total_rank))


def xq_elements(spec: GroupSpec) -> tuple:
    return tuple(sorted(_closure(spec.generators, spec.total_rank)))


def pairing(lambda_coeffs, j_slot_vertex, diagram: ExtendedDiagram, component: int = 0) -> Fraction:
    """Pairing of a weight class with the coweight class of a mark-1 vertex.

    The weight is given by root coefficients over the whole diagram; the
    coweight class by (component, vertex).  Equals the vertex coefficient
    mod Z, by duality of the two bases.
    """
    typ = diagram.components[component]
    data = cartan_data(typ)
    if j_slot_vertex == 0:
        return Fraction(0)
    if data.marks[j_slot_vertex - 1] != 1:
        raise SpecError(
            f"vertex {j_slot_vertex} of {typ} has mark "
            f"{data.marks[j_slot_vertex - 1]}, not 1"
        )
    offset = sum(t.rank for t in diagram.components[:component])
    return _frac_mod1(lambda_coeffs[offset + j_slot_vertex - 1])


def coset_pairing(gen, g: FundamentalGroupElement, diagram: ExtendedDiagram) -> Fraction:
    """Pairing of a weight class with a full coweight-class group element."""
    total = Fraction(0)
    for k, tag in enumerate(g.tags):
        total += pairing(gen, tag, diagram, component=k)
    return _frac_mod1(total)


def dual_subgroup(spec: GroupSpec, group: FundamentalGroup | None = None) -> FundamentalGroup:
    """The coweight classes of X: the annihilator of X/Q under the pairing."""
    diagram = group.diagram if group is not None else spec.diagram()
    if group is None:
        group = fundamental_group(diagram)
    kept = [
        g
        for g in group.elements
        if all(coset_pairing(gen, g, diagram) == 0 for gen in spec.generators)
    ]
    return group.subgroup(kept)


def enumerate_center(spec: GroupSpec) -> tuple:
    """All homomorphisms X/Q -> Q/Z, i.e. all central elements.

    Deterministic order: depth-first over the canonical generators with
    values increasing, so the trivial element always comes first.
    """
    rank = spec.total_rank
    closure = _closure(spec.generators, rank)
    stairs = _staircase(closure, rank)
    results = []

    def extend(idx, values):
        if idx == len(stairs):
            results.append(CentralElement(values=tuple(values)))
            return
        gen, d, combo = stairs[idx]
        target = Fraction(0)
        for k, mult in combo:
            target += mult * values[k]
        base = _frac_mod1(target) / d
        for t in range(d):
            extend(idx + 1, values + [_frac_mod1(base + Fraction(t, d))])

    extend(0, [])
    return tuple(results)


def check_central(spec: GroupSpec, z: CentralElement) -> None:
    """Reject value tuples that do not define a homomorphism on X/Q."""
    rank = spec.total_rank
    if len(z.values) != len(spec.generators):
        raise SpecError(
            f"central element carries {len(z.values)} values, "
            f"expected {len(spec.generators)}"
        )
    closure = _closure(spec.generators, rank)
    stairs = _staircase(closure, rank)
    for (gen, d, combo), val in zip(stairs, z.values):
        target = Fraction(0)
        for k, mult in combo:
            target += mult * z.values[k]
        if _frac_mod1(d * val - target) != 0:
            raise SpecError(
                f"values do not respect the relation of order {d} on {gen}"
            )


def trivial_central(spec: GroupSpec) -> CentralElement:
    return CentralElement(values=tuple(Fraction(0) for _ in spec.generators))


# ---------------------------------------------------------------------------
# Subgroup sweep (used by verification suites)


def all_intermediate_specs(components) -> tuple:
    """Every lattice X with Q <= X <= P, as canonical GroupSpecs.

    For the simple types the quotient P/Q needs at most two generators, so
    closures of pairs exhaust the subgroups; products of many components are
    not needed by the sweeps that call this.
    """
    comps = tuple(
        t if isinstance(t, SimpleType) else SimpleType.parse(t) for t in components
    )
    full = validate_spec(comps, _weight_basis(comps))
    elements = xq_elements(full)
    rank = full.total_rank
    seen = {}
    for take in range(0, 3):
        for combo in itertools.combinations(elements, take):
            sub = frozenset(_closure(list(combo), rank))
            if sub not in seen:
                seen[sub] = validate_spec(comps, sorted(sub))
    return tuple(
        spec for _, spec in sorted(seen.items(), key=lambda kv: (len(kv[0]), sorted(kv[0])))
    )


def _weight_basis(components) -> list:
    """Root coefficients of every fundamental weight, embedded globally."""
    total = sum(t.rank for t in components)
    out = []
    offset = 0
    for typ in components:
        inv = cartan_data(typ).inverse_cartan
        for j in range(typ.rank):
            row = inv[j]  # weight j+1 in root coordinates
            vec = [Fraction(0)] * total
            for i, x in enumerate(row):
                vec[offset + i] = Fraction(x)
            out.append(tuple(vec))
        offset += typ.rank
    return out


# ---------------------------------------------------------------------------
# Presets and spec files


def _single_component(comps, preset: str) -> SimpleType:
    if len(comps) != 1:
        raise SpecError(f"preset {preset!r} needs exactly one component")
    return comps[0]


def preset_spec(text: str) -> GroupSpec:
    """Parse a preset string like ``sc:E7``, ``ad:A1xA1``, ``halfspin:D12``.

    sc        simply connected (X = P)
    ad        adjoint (X = Q)
    halfspin  half-spin lattice of D_l, l even
    so        vector lattice of D_l or B_l (the orthogonal group)
    """
    if ":" not in text:
        raise SpecError(f"preset {text!r} is not of the form name:TYPE")
    name, _, typestr = text.partition(":")
    comps = tuple(SimpleType.parse(t) for t in typestr.split("x"))
    if name == "sc":
        return validate_spec(comps, _weight_basis(comps))
    if name == "ad":
        return validate_spec(comps, [])
    if name == "halfspin":
        typ = _single_component(comps, name)
        if typ.family != "D" or typ.rank % 2 or typ.rank < 4:
            raise SpecError("halfspin needs a single D component of even rank >= 4")
        vec = [Fraction(0)] * typ.rank
        for i in list(range(1, typ.rank - 2, 2)) + [typ.rank]:
            vec[i - 1] = Fraction(1, 2)
        return validate_spec(comps, [tuple(vec)])
    if name == "so":
        typ = _single_component(comps, name)
        if typ.family == "B":
            return validate_spec(comps, [])
        if typ.family == "D":
            inv = cartan_data(typ).inverse_cartan
            return validate_spec(comps, [tuple(inv[0])])
        raise SpecError("so needs a single B or D component")
    raise SpecError(f"unknown preset {name!r} (choose from {', '.join(PRESETS)})")


def load_spec(source: str) -> GroupSpec:
    """Spec from a preset string or a JSON spec file path."""
    if ":" in source and not source.lstrip().startswith("{"):
        return preset_spec(source)
    try:
        with open(source, "rb") as fh:
            doc = json.load(fh)
    except OSError as exc:
        raise SpecError(f"cannot read spec file {source!r}: {exc}") from exc
    except json.JSONDecodeError as exc:
        raise SpecError(f"spec file {source!r} is not valid JSON: {exc}") from exc
    return spec_from_document(doc)


def spec_from_document(doc) -> GroupSpec:
    if not isinstance(doc, dict) or "components" not in doc:
        raise SpecError("spec document must be an object with a 'components' list")
    comps = [SimpleType.parse(t) for t in doc["components"]]
    gens = []
    for raw in doc.get("generators", []):
        gens.append(tuple(_parse_rational(x) for x in raw))
    return validate_spec(comps, gens)


def spec_to_document(spec: GroupSpec) -> dict:
    return {
        "components": [str(t) for t in spec.components],
        "generators": [[_format_rational(x) for x in g] for g in spec.generators],
    }


def _parse_rational(x) -> Fraction:
    if isinstance(x, str):
        try:
            return Fraction(x)
        except ValueError as exc:
            raise SpecError(f"bad rational {x!r}") from exc
    if isinstance(x, int):
        return Fraction(x)
    raise SpecError(f"bad rational {x!r} (use ints or 'num/den' strings)")


def _format_rational(x) -> str:
    f = Fraction(x)
    return f"{f.numerator}/{f.denominator}"
