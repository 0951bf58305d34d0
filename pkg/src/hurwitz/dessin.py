"""Dessin d'enfant view of a constellation ``(g1, g2, g3)``.

Darts (edges) are the points ``1..d``. Black vertices are the cycles of
``g1``, white vertices the cycles of ``g2``, and regions the cycles of
``g3``; edge ``i`` joins the black and white vertices whose cycles contain
``i``.
"""

from __future__ import annotations

from .enumerate import Constellation


def dessin_graph(c: Constellation) -> dict:
    g1, g2, g3 = c.perms
    black = g1.cycles()
    white = g2.cycles()
    regions = g3.cycles()
    b_of = {x: i for i, cyc in enumerate(black) for x in cyc}
    w_of = {x: i for i, cyc in enumerate(white) for x in cyc}
    return {
        "degree": c.degree,
        "black": [{"id": f"b{i + 1}", "valence": len(cyc), "darts": [x + 1 for x in cyc]}
                  for i, cyc in enumerate(black)],
        "white": [{"id": f"w{i + 1}", "valence": len(cyc), "darts": [x + 1 for x in cyc]}
                  for i, cyc in enumerate(white)],
        "edges": [{"dart": x + 1, "black": f"b{b_of[x] + 1}", "white": f"w{w_of[x] + 1}"}
                  for x in range(c.degree)],
        "regions": [{"id": f"r{i + 1}", "length": len(cyc), "darts": [x + 1 for x in cyc]}
                    for i, cyc in enumerate(regions)],
        "monodromy": [str(g) for g in c.perms],
    }


def to_dot(graph: dict, name: str = "dessin") -> str:
    lines = [f"graph {name} {{"]
    for v in graph["black"]:
        lines.append(f'  {v["id"]} [color=black, style=filled, fillcolor=black, '
                     f'fontcolor=white, label="{v["id"]}"];')
    for v in graph["white"]:
        lines.append(f'  {v["id"]} [color=white, style=filled, fillcolor=white, '
                     f'label="{v["id"]}"];')
    for e in graph["edges"]:
        lines.append(f'  {e["black"]} -- {e["white"]} [label="{e["dart"]}"];')
    lines.append("}")
    return "\n".join(lines) + "\n"
