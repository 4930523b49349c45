"""Regenerates atlas.g6 and atlas_edges.json from the networkx graph atlas.

The atlas holds all 1253 graphs with up to seven vertices, one per
isomorphism class, giving an external reference for the graph6 codec.
"""

import json
import pathlib

import networkx as nx
from networkx.generators.atlas import graph_atlas_g

here = pathlib.Path(__file__).parent
lines = []
records = []
for G in graph_atlas_g():
    lines.append(nx.to_graph6_bytes(G, header=False).decode().strip())
    records.append(
        {
            "n": G.number_of_nodes(),
            "edges": sorted(sorted((int(u), int(v))) for u, v in G.edges()),
        }
    )

(here / "atlas.g6").write_text("\n".join(lines) + "\n")
(here / "atlas_edges.json").write_text(json.dumps(records))
print(f"wrote {len(lines)} graphs")
