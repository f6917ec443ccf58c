import re
import xml.etree.ElementTree as ET

import numpy as np
import pytest

from blaschke.svg import render_svg

SQUARE = [[0, 0], [1, 0], [1, 1], [0, 1]]
NS = "{http://www.w3.org/2000/svg}"


def test_unit_square_viewbox():
    root = ET.fromstring(render_svg([SQUARE]))
    assert root.get("viewBox") == "-0.05 -0.05 1.1 1.1"
    g = root.find(NS + "g")
    assert g.get("transform") == "matrix(1 0 0 -1 0 1)"
    (path,) = g.findall(NS + "path")
    assert path.get("class") == "body"
    assert path.get("d") == "M 0 0 L 1 0 L 1 1 L 0 1 Z"


def test_layer_order_and_markers():
    tri = [[0.2, 0.2], [0.8, 0.2], [0.5, 0.8]]
    root = ET.fromstring(render_svg([SQUARE], overlays=[tri], markers=[[0.5, 0.5], [1.5, 0.5]]))
    kids = list(root.find(NS + "g"))
    assert [k.get("class") for k in kids] == ["body", "overlay", "failure", "failure"]
    # markers widen the box
    assert root.get("viewBox") == "-0.075 -0.075 1.65 1.15"
    assert kids[2].get("r") == "0.015"


def test_empty_and_degenerate_inputs():
    with pytest.raises(ValueError):
        render_svg([])
    with pytest.raises(ValueError):
        render_svg([[[1, 1], [1, 1], [1, 1]]])


def test_output_is_deterministic():
    t = np.linspace(0, 2 * np.pi, 50, endpoint=False)
    circ = np.stack([np.cos(t), np.sin(t)], axis=1)
    a = render_svg([circ], markers=[[0, -0.0]])
    assert a == render_svg([circ.copy()], markers=[[0, 0]])
    assert "-0 " not in a and not re.search(r"-0\"", a)
