"""Shared fixtures: bundled corpus access and common diagrams."""

import json
import os

import pytest

from tauknot.diagram import parse_pd

ROOT = os.path.dirname(os.path.dirname(os.path.abspath(__file__)))
CORPUS_DIR = os.path.join(ROOT, "corpus")

TREFOIL_PD = "X[1,4,2,5] X[3,6,4,1] X[5,2,6,3]"


def corpus_path(name):
    return os.path.join(CORPUS_DIR, name + ".json")


def load_entry(name):
    with open(corpus_path(name)) as f:
        return json.load(f)


def load_diagram(name):
    entry = load_entry(name)
    d = parse_pd(entry["pd"])
    d.name = entry["name"]
    return d


@pytest.fixture(scope="session")
def corpus():
    with open(corpus_path("all")) as f:
        return json.load(f)


@pytest.fixture
def trefoil():
    return parse_pd(TREFOIL_PD)
