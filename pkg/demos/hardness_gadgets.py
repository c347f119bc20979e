#!/usr/bin/env python3
"""Walkthrough: orthogonal-vectors gadget graphs with known distance gaps.

Every construction comes in two modes.  With no orthogonal tuple present
("unsat"), the target quantity is provably small; with a planted
orthogonal tuple, a designated witness pair is provably far.  The exact
oracle confirms both sides, which is what makes these graphs useful as
ground-truth fixtures for diameter/eccentricity estimators.
"""

from diamecc import (build_diam_3km4, build_diam_5v8, build_diam_8v13,
                     build_ecc_lb_directed, build_ecc_lb_undirected,
                     build_kov_layered, gen_ov, ov_brute_force, sssp,
                     verify_construction)


def show(out):
    g = out.graph
    kind = "directed" if g.directed else "undirected"
    sizes = ", ".join(f"{name}:{hi - lo}" for name, (lo, hi) in out.sets.items())
    print(f"  {out.construction} [{out.params['mode']}]: {g.n} vertices, "
          f"{g.m} edges, {kind}   ({sizes})")
    for check in verify_construction(g, out.meta()):
        mark = "ok " if check.passed else "BAD"
        print(f"    {mark} {check.name}: {check.detail}")


def main():
    print("layered S-T gap, k = 3 (distance 3 without a solution, >= 7 with one):")
    unsat = gen_ov(3, 3, 4, "unsat", seed=0)
    print(f"  brute force on the unsat instance: {ov_brute_force(unsat)}")
    show(build_kov_layered(unsat))
    planted = gen_ov(3, 3, 4, "planted", seed=0)
    print(f"  brute force on the planted instance: {ov_brute_force(planted)}")
    out = build_kov_layered(planted)
    show(out)
    u, v = out.witness
    print(f"  witness pair distance: {sssp(out.graph, u)[v]}")

    print("\ndiameter gadgets:")
    show(build_diam_5v8(gen_ov(3, 3, 4, "unsat", seed=1)))
    show(build_diam_5v8(gen_ov(3, 3, 4, "planted", seed=1)))
    show(build_diam_3km4(gen_ov(4, 2, 3, "unsat", seed=2)))
    show(build_diam_3km4(gen_ov(4, 2, 3, "planted", seed=2)))
    show(build_diam_8v13(gen_ov(4, 2, 3, "planted", seed=3)))

    print("\neccentricity gadgets:")
    show(build_ecc_lb_undirected(gen_ov(3, 3, 4, "unsat", seed=4)))
    show(build_ecc_lb_undirected(gen_ov(3, 3, 4, "planted", seed=4)))
    show(build_ecc_lb_directed(gen_ov(2, 6, 4, "unsat", seed=5), L=2))
    show(build_ecc_lb_directed(gen_ov(2, 6, 4, "planted", seed=5), L=2))

    print("\nthe same pipeline is scriptable:  diamecc gen --construction 5v8 "
          "--n 3 --d 4 --mode planted --out fix && diamecc verify "
          "--graph fix.graph --meta fix.meta.json")


if __name__ == "__main__":
    main()
