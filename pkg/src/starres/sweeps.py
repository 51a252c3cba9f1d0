"""Seeded cross-check sweeps pairing every classification with its oracle.

Each sweep returns None on success or a JSON-serializable counterexample
dict; the CLI turns the first counterexample into a nonzero exit.
"""

from __future__ import annotations

import random
from math import gcd

from .gradedring import graded_basis, graded_dim
from .hj import i_set, ito_oracle, residue_criterion
from .intersection import (
    canonical_cycle,
    fundamental_cycle,
    fundamental_cycle_brute,
    is_negative_definite,
    is_reduced,
    matrix_from_graph,
    pair,
)
from .lgroup import LElement, Parameters, l_add, l_neg, l_scale, normal_form, reduce_parameters
from .reconalg import quiver_combinatorial, quiver_from_intersection
from .resolution import dual_graph, specials


def random_element(rng: random.Random, nmax=4, pmax=6, amax=3, coprime=False, min_v=0):
    """A random parameter set and positive element, in normal form."""
    while True:
        n = rng.randint(max(1, min_v), nmax)
        weights = [rng.randint(2, pmax) for _ in range(n)]
        arms = []
        for p in weights:
            if coprime:
                arms.append(rng.choice([a for a in range(1, p) if gcd(a, p) == 1]))
            else:
                arms.append(rng.randint(0, p - 1))
        a = rng.randint(0, amax)
        params = Parameters(weights)
        x = normal_form(params, arms, a)
        v = sum(1 for ai in x.arms if ai)
        if v < min_v:
            continue
        if v + a < 2:  # stay outside [0, c]
            continue
        return params, x


def sweep_iseries(rmax: int = 40):
    """Triangle equality of the three characterizations of I(r, a)."""
    for r in range(2, rmax + 1):
        for a in range(1, r):
            if gcd(r, a) != 1:
                continue
            rec = i_set(r, a)
            grid = ito_oracle(r, a)
            res = frozenset(
                u for u in range(r) if residue_criterion(r, r - a, u)
            ) | {r}
            if not (rec == grid == res):
                return {
                    "check": "iseries-triangle",
                    "r": r,
                    "a": a,
                    "recursion": sorted(rec),
                    "grid": sorted(grid),
                    "residue": sorted(res),
                }
    return None


def sweep_center_label(count: int = 100, seed: int = 0):
    """Center label equals -(a + v), with a re-derived as a graded dimension."""
    rng = random.Random(seed)
    for _ in range(count):
        params, x = random_element(rng, coprime=True)
        g = dual_graph(params, x)
        v = len(g.arms)
        a = x.c_coeff
        shifted = l_add(x, l_neg(LElement(params.weights, (0,) * params.n, 1)))
        a_indep = len(graded_basis(params, shifted).basis)
        expected = -(a + v) if v >= 2 else (-1 - a if v == 1 else -a)
        if g.labels[g.center] != expected or a_indep != a:
            return {
                "check": "center-label",
                "p": list(params.weights),
                "x": x.to_json(),
                "label": g.labels[g.center],
                "expected": expected,
                "a_from_dimension": a_indep,
            }
    return None


def sweep_cycles(count: int = 100, seed: int = 0, brute_max_size: int = 8):
    """Fundamental cycle: reduced, Laufer = brute force, canonical system exact."""
    rng = random.Random(seed)
    for _ in range(count):
        params, x = random_element(rng)
        g = dual_graph(params, x)
        if "non-minimal" in g.flags:
            continue
        m = matrix_from_graph(g)
        if not is_negative_definite(m):
            return {"check": "negative-definite", "p": list(params.weights), "x": x.to_json()}
        zf = fundamental_cycle(m)
        if not is_reduced(zf):
            return {"check": "reduced", "p": list(params.weights), "x": x.to_json(), "zf": list(zf)}
        if m.size <= brute_max_size and zf != fundamental_cycle_brute(m):
            return {"check": "laufer-vs-brute", "p": list(params.weights), "x": x.to_json()}
        zk = canonical_cycle(m)
        for i in range(m.size):
            ei = tuple(1 if j == i else 0 for j in range(m.size))
            if pair(m, zk, ei) != m.entries[i][i] + 2:
                return {"check": "canonical-cycle", "p": list(params.weights), "x": x.to_json()}
    return None


def sweep_quiver(count: int = 50, seed: int = 0):
    """Cross-construction equality of the two quiver routes."""
    rng = random.Random(seed)
    for _ in range(count):
        params, x = random_element(rng, min_v=2)
        combin = quiver_combinatorial(params, x)
        inter = quiver_from_intersection(dual_graph(params, x), specials(params, x))
        if combin != inter:
            return {
                "check": "quiver-cross-construction",
                "p": list(params.weights),
                "x": x.to_json(),
                "combinatorial": combin.to_json(),
                "intersection": inter.to_json(),
            }
    return None


def sweep_reduce(count: int = 20, seed: int = 0, degrees: int = 8):
    """Graded dimensions agree before and after parameter reduction."""
    rng = random.Random(seed)
    found = 0
    while found < count:
        params, x = random_element(rng)
        if all(gcd(p, a) == 1 for p, a in zip(params.weights, x.arms) if a):
            continue
        if not any(x.arms) and x.c_coeff == 0:
            continue
        found += 1
        rparams, rx = reduce_parameters(params, x)
        for k in range(degrees + 1):
            before = graded_dim(params, l_scale(k, x))
            after = graded_dim(rparams, l_scale(k, rx))
            if before != after:
                return {
                    "check": "parameter-reduction",
                    "p": list(params.weights),
                    "x": x.to_json(),
                    "degree": k,
                    "before": before,
                    "after": after,
                }
    return None


def sweep_speciality(count: int = 3, seed: int = 0, l_max: int = 8):
    """Subspace oracle against the value-set classification, small grid."""
    from .lgroup import generator
    from .resolution import speciality_oracle

    rng = random.Random(seed)
    for _ in range(count):
        params, x = random_element(rng, nmax=3, pmax=5, coprime=True)
        for j, p in enumerate(params.weights):
            values = i_set(p, p - x.arms[j])
            for u in range(p + 1):
                y = l_scale(u, generator(params, j))
                result = speciality_oracle(params, x, y, l_max)
                if result.special != (u in values):
                    return {
                        "check": "speciality-oracle",
                        "p": list(params.weights),
                        "x": x.to_json(),
                        "arm": j,
                        "u": u,
                        "oracle": result.special,
                        "witness": result.witness,
                        "classification": u in values,
                    }
    return None


def run_all(seed: int = 0, rmax: int = 40, count: int = 50, l_max: int = 8, log=None):
    """Run every sweep; returns the first counterexample or None."""
    checks = [
        ("iseries-triangle", lambda: sweep_iseries(rmax)),
        ("center-label", lambda: sweep_center_label(count, seed)),
        ("cycles", lambda: sweep_cycles(count, seed)),
        ("quiver", lambda: sweep_quiver(count, seed)),
        ("parameter-reduction", lambda: sweep_reduce(min(count, 20), seed)),
        ("speciality-oracle", lambda: sweep_speciality(3, seed, l_max)),
    ]
    for name, check in checks:
        result = check()
        if log is not None:
            log(f"{name}: {'FAIL' if result else 'ok'}")
        if result:
            return result
    return None
