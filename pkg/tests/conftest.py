import pathlib

import pytest
from hypothesis import strategies as st

from veering import TautAngleStructure, parse_triangulation

DATA = pathlib.Path(__file__).parent / "data"
CENSUS_FIXTURES = DATA / "census"
SMALL = DATA / "small"
FULL_CENSUS = pathlib.Path(__file__).parent.parent / "data" / "census"

# pi edge pairs per tetrahedron, in census vertex labels
TABLE1 = {
    "s227": ["e02,e13", "e01,e23", "e01,e23", "e02,e13", "e03,e12", "e03,e12"],
    "s438": ["e02,e13", "e02,e13", "e02,e13", "e02,e13", "e02,e13", "e01,e23"],
    "s772": ["e02,e13", "e01,e23", "e01,e23", "e01,e23", "e01,e23", "e02,e13"],
    "s773": ["e02,e13", "e01,e23", "e01,e23", "e01,e23", "e01,e23", "e02,e13"],
    "s779": ["e02,e13", "e01,e23", "e01,e23", "e01,e23", "e01,e23", "e02,e13"],
    "v3128": ["e02,e13"] * 6 + ["e01,e23"],
    "v3243": ["e01,e23", "e02,e13", "e02,e13", "e02,e13", "e02,e13", "e01,e23", "e02,e13"],
    "v3244": ["e01,e23", "e03,e12", "e03,e12", "e03,e12", "e03,e12", "e01,e23", "e03,e12"],
    "v3377": ["e02,e13"] * 5 + ["e01,e23", "e02,e13"],
    "v3526": ["e01,e23", "e03,e12", "e03,e12", "e02,e13", "e02,e13", "e03,e12", "e01,e23"],
}


def load(name: str):
    return parse_triangulation((CENSUS_FIXTURES / f"{name}.tgl").read_text())


def table1(name: str):
    return load(name), TautAngleStructure.from_labels(TABLE1[name])


def small_corpus():
    return [(p.stem, parse_triangulation(p.read_text())) for p in sorted(SMALL.glob("*.tgl"))]


@pytest.fixture(scope="session")
def s227():
    return table1("s227")


words = st.text(alphabet="RL", min_size=2, max_size=9).filter(lambda w: "R" in w and "L" in w)
