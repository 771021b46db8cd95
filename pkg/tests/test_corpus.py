"""Bundled corpus integrity: schema, internal consistency, recorded values."""

import json
import os

from tauknot.alexander import LaurentPoly, determinant, state_sum_polynomial
from tauknot.diagram import decorate, parse_pd
from tauknot.signature import signature

from conftest import CORPUS_DIR

MODEL_FILES = {"single_generator.json", "trefoil_model.json",
               "10_161_model.json"}


def test_corpus_files_match_bundle(corpus):
    names = {e["name"] for e in corpus}
    singles = {f[:-5] for f in os.listdir(CORPUS_DIR)
               if f.endswith(".json") and f != "all.json"
               and f not in MODEL_FILES}
    assert singles == names
    for entry in corpus:
        with open(os.path.join(CORPUS_DIR, entry["name"] + ".json")) as f:
            assert json.load(f) == entry


def test_entry_schema(corpus):
    assert len(corpus) == 20
    for entry in corpus:
        assert set(entry) == {"name", "pd", "decoration", "known", "provenance"}
        known = entry["known"]
        assert {"determinant", "sigma", "alexander"} <= set(known)
        d = parse_pd(entry["pd"])
        assert entry["decoration"] in d.incidences


def test_recorded_invariants_recompute(corpus):
    for entry in corpus:
        d = parse_pd(entry["pd"])
        known = entry["known"]
        assert signature(d) == known["sigma"], entry["name"]
        det, _ = determinant(d)
        assert det == known["determinant"], entry["name"]
        poly = state_sum_polynomial(decorate(d, entry["decoration"]))
        assert poly == LaurentPoly.from_json(known["alexander"]), entry["name"]


def test_recorded_tau_bounds(corpus):
    for entry in corpus:
        known = entry["known"]
        if "tau" not in known:
            continue
        assert known["g4_lower"] == abs(known["tau"]), entry["name"]
        assert known["u_lower"] == abs(known["tau"]), entry["name"]
        if "unknotting" in known:
            assert len(known["unknotting"]) >= abs(known["tau"]), entry["name"]


def test_alternating_entries_tau_is_half_signature(corpus):
    for entry in corpus:
        d = parse_pd(entry["pd"])
        if d.is_alternating() and d.is_reduced() and "tau" in entry["known"]:
            assert entry["known"]["tau"] == -entry["known"]["sigma"] // 2


def test_provenance_present(corpus):
    for entry in corpus:
        assert entry["provenance"].strip()
