# Copyright 2026 The dimercmg Authors
#
#    Licensed under the Apache License, Version 2.0 (the "License");
#    you may not use this file except in compliance with the License.
#    You may obtain a copy of the License at
#
#        http://www.apache.org/licenses/LICENSE-2.0
#
#    Unless required by applicable law or agreed to in writing, software
#    distributed under the License is distributed on an "AS IS" BASIS,
#    WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
#    See the License for the specific language governing permissions and
#    limitations under the License.

"""Cluster modular groups of dimer models, with exact arithmetic.

Polygons are lists of integer pairs. Graphs are catalog names or dicts in the
JSON graph format. Weights map edge ids to rationals (Fraction, int or "p/q").
Library errors raise DimercmgError; the message starts with the error name.
"""

import json
import os
from fractions import Fraction

from . import _core
from ._core import DimercmgError

__all__ = [
    "DimercmgError",
    "cluster_modular_group",
    "torsion_lattice",
    "max_translation_polygon",
    "pic0",
    "polygon_info",
    "find_building_block",
    "catalog_names",
    "catalog_graph",
    "graph_summary",
    "newton_polygon",
    "spectral_polynomial",
    "abel_map",
    "run_script",
    "domino_script",
    "translation_script",
    "verify",
]


def _poly(vertices):
    return json.dumps({"vertices": [[int(x), int(y)] for x, y in vertices]})


def _graph(graph):
    return graph if isinstance(graph, str) else json.dumps(graph)


def _weights(weights):
    if weights is None:
        return ""
    return json.dumps({str(k): str(Fraction(v)) for k, v in weights.items()})


def _frac(s):
    return Fraction(s)


def _vertices(p):
    return [tuple(v) for v in p["vertices"]]


def cluster_modular_group(vertices, as_given=False):
    """{"rank", "torsion", "case", "genus", "text"} for the polygon."""
    return json.loads(_core.group(_poly(vertices), as_given))


def torsion_lattice(vertices, as_given=False):
    r = json.loads(_core.torsion_lattice(_poly(vertices), as_given))
    r["basis"] = [tuple(_frac(c) for c in v) for v in r["basis"]]
    return r


def max_translation_polygon(vertices, as_given=False):
    r = json.loads(_core.max_translation_polygon(_poly(vertices), as_given))
    r["basis"] = [tuple(_frac(c) for c in v) for v in r["basis"]]
    r["w"] = [tuple(v) for v in r["w"]]
    r["polygon"] = _vertices(r["polygon"])
    return r


def pic0(vertices, as_given=False):
    return json.loads(_core.pic0(_poly(vertices), as_given))


def polygon_info(vertices, as_given=False):
    r = json.loads(_core.polygon_info(_poly(vertices), as_given))
    r["polygon"] = _vertices(r["polygon"])
    return r


def find_building_block(vertices):
    return _vertices(json.loads(_core.building_block(_poly(vertices))))


def catalog_names():
    return list(_core.catalog_names())


def catalog_graph(name):
    return json.loads(_core.graph_json(name))


def graph_summary(graph):
    r = json.loads(_core.graph_summary(_graph(graph)))
    r["newton_polygon"] = _vertices(r["newton_polygon"])
    r["zigzag_classes"] = [tuple(c) for c in r["zigzag_classes"]]
    return r


def newton_polygon(graph):
    return graph_summary(graph)["newton_polygon"]


def spectral_polynomial(graph, weights=None, normalized=False):
    """Kasteleyn polynomial as {(i, j): Fraction} for the monomials z^i w^j."""
    r = json.loads(_core.spectral(_graph(graph), _weights(weights), normalized))
    return {(t["z"], t["w"]): _frac(t["coeff"]) for t in r["terms"]}


def abel_map(graph):
    r = json.loads(_core.abel(_graph(graph)))
    r["values"] = {int(k): v for k, v in r["values"].items()}
    r["zigzag_classes"] = [tuple(c) for c in r["zigzag_classes"]]
    return r


def run_script(script, weights=None, base_dir="."):
    """Runs a move script (dict or path to JSON). Returns the translation profile,
    the reduced class, the Abel shift and the final weights (as Fractions)."""
    if isinstance(script, (str, os.PathLike)):
        base_dir = os.path.dirname(os.fspath(script)) or "."
        with open(script) as f:
            script = json.load(f)
    r = json.loads(_core.run_script(json.dumps(script), _weights(weights), str(base_dir)))
    r["weights"] = {int(k): _frac(v) for k, v in r["weights"].items()}
    return r


def domino_script():
    return json.loads(_core.domino_script())


def translation_script(graph, m):
    return json.loads(_core.translation_script(_graph(graph), int(m[0]), int(m[1])))


def verify(suite, seed=7):
    return json.loads(_core.verify(suite, seed))
