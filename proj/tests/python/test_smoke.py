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

from fractions import Fraction
from pathlib import Path

import pytest

import dimercmg

ROOT = Path(__file__).resolve().parents[2]
DIAMOND = [[1, 0], [0, 1], [-1, 0], [0, -1]]


def test_diamond_group():
    g = dimercmg.cluster_modular_group(DIAMOND)
    assert g["rank"] == 1
    assert g["torsion"] == [2]


def test_unit_triangle_is_trivial():
    g = dimercmg.cluster_modular_group([[0, 0], [1, 0], [0, 1]])
    assert g["rank"] == 0 and g["torsion"] == []


def test_square_lattice_newton():
    assert dimercmg.newton_polygon("square_lattice") == [(0, 0), (1, -1), (2, 0), (1, 1)]


def test_spectral_terms():
    p = dimercmg.spectral_polynomial("square_lattice")
    assert p[(0, 0)] == Fraction(-4)
    assert set(p) == {(0, 0), (1, 0), (-1, 0), (0, 1), (0, -1)}


def test_domino_is_nontrivial():
    r = dimercmg.run_script(str(ROOT / "data" / "scripts" / "domino.json"))
    assert not r["trivial"]
    assert r["sum_g"] == 0
    assert all(w == Fraction(1, 2) for w in r["weights"].values())


def test_translation_is_trivial():
    script = dimercmg.translation_script("honeycomb_2", (2, -1))
    assert dimercmg.run_script(script)["trivial"]


def test_bad_polygon_raises():
    with pytest.raises(dimercmg.DimercmgError):
        dimercmg.cluster_modular_group([[0, 0], [1, 1], [2, 2]])
    assert issubclass(dimercmg.DimercmgError, ValueError)
