"""Shipped fixtures: the worked examples and the A-type slice generators."""

import json
from importlib import resources

from .arrangement import Arrangement, Fan, build_arrangement
from .errors import UnknownTag
from .exactlin import Mat

FIXTURE_NAMES = ("example12", "example13",
                 "slice-a2", "slice-a3", "slice-a4", "slice-a5", "slice-a6")


def fixture_names():
    return FIXTURE_NAMES


def load_fixture(name: str) -> dict:
    if name not in FIXTURE_NAMES:
        raise UnknownTag(f"unknown fixture {name!r}; "
                         f"known: {', '.join(FIXTURE_NAMES)}")
    path = "data/" + name.replace("-", "_") + ".json"
    with resources.files(__package__).joinpath(path).open() as fh:
        return json.load(fh)


def arrangement_from_json(doc: dict) -> Arrangement:
    return build_arrangement(doc["normals"], doc.get("equalities", ()),
                             int(doc["dim"]))


def weyl_from_json(mats) -> tuple:
    return tuple(Mat(m) for m in mats)


def fan_from_json(doc: dict) -> Fan:
    return Fan.from_json(doc)
