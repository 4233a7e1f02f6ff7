"""The built-in curated corpus."""

from __future__ import annotations

from .matroid import Matroid, boolean, direct_sum, fano, fano_dual, uniform
from .named import (
    PRISM,
    complete_bipartite,
    complete_graph,
    cycle_graph,
    graphic,
    projective_geometry,
    wheel_graph,
)


def builtin_corpus() -> list[Matroid]:
    out = [uniform(k, n) for n in range(1, 9) for k in range(1, n + 1)]
    out += [boolean(n) for n in range(1, 7)]
    out += [fano(), fano_dual(), projective_geometry(2, 3), projective_geometry(3, 2)]
    out += [
        graphic(complete_graph(4), "K4"),
        graphic(complete_graph(5), "K5"),
        graphic(complete_bipartite(3, 3), "K3,3"),
        graphic(PRISM, "prism"),
    ]
    out += [graphic(cycle_graph(n), f"C{n}") for n in range(3, 7)]
    out += [graphic(wheel_graph(k), f"W{k}") for k in range(3, 6)]
    b1 = boolean(1)
    out += [direct_sum(b1, uniform(2, k)).with_label(f"B1+U2,{k}") for k in range(3, 6)]
    return out
