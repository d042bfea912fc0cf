"""Benchmark the orbit-closure kernels (compiled extension vs pure Python).

Closes the full set of n-th root points of a central element under the
simple reflections for a few representative groups and reports timings for
every available kernel.  Outputs must agree exactly; the script asserts
that before printing the speedup.

Usage: python benchmarks/bench_orbit.py [--repeat N]
"""

import argparse
import time

from kacoh._orbit import available_kernels
from kacoh.exactalg import lcm_denominators
from kacoh.lattice import enumerate_center, preset_spec
from kacoh.oracle import (
    _reflection_matrices,
    build_coweight_lattice,
    enumerate_roots_of_z,
)

CASES = [
    ("sc:A6", 1, 3),
    ("sc:D6", 1, 3),
    ("ad:E7", 0, 2),
    ("sc:B6", 1, 3),
]


def scaled_inputs(preset, z_index, n):
    spec = preset_spec(preset)
    lattice = build_coweight_lattice(spec)
    z = enumerate_center(spec)[z_index]
    points = enumerate_roots_of_z(lattice, z, n)
    denom = lcm_denominators(
        [x for p in points for x in p.coords]
        + [x for col in lattice.basis for x in col]
    )
    scaled_points = [tuple(int(x * denom) for x in p.coords) for p in points]
    scaled_basis = [tuple(int(x * denom) for x in col) for col in lattice.basis]
    return scaled_points, _reflection_matrices(lattice), scaled_basis


def main():
    parser = argparse.ArgumentParser()
    parser.add_argument("--repeat", type=int, default=5)
    args = parser.parse_args()

    kernels = available_kernels()
    print(f"kernels available: {', '.join(kernels)}")
    for preset, zi, n in CASES:
        points, reflections, basis = scaled_inputs(preset, zi, n)
        print(f"\n{preset}, n={n}: {len(points)} points, dim {len(basis)}")
        outputs = {}
        timings = {}
        for name, fn in kernels.items():
            best = float("inf")
            for _ in range(args.repeat):
                t0 = time.perf_counter()
                out = fn(points, reflections, basis)
                best = min(best, time.perf_counter() - t0)
            outputs[name] = out
            timings[name] = best
            print(f"  {name:9s} {best * 1000:9.2f} ms   {len(out)} orbits")
        reference = outputs["pure"]
        for name, out in outputs.items():
            assert out == reference, f"kernel {name} disagrees with pure"
        if "compiled" in timings:
            print(f"  speedup   {timings['pure'] / timings['compiled']:9.1f} x")


if __name__ == "__main__":
    main()
