"""Generate the bundled corpus: one JSON file per knot plus corpus/all.json.

Expected values are computed by the package's own independent paths (Goeritz
and Seifert signatures, state-sum and skein Alexander polynomials) and are
cross-checked here before being written.  Named entries for 9_42, 10_139,
10_152, and 10_161 come from the braid searches in this directory; the
identification arguments live in the external notes ledger.
"""

import json
import os
import sys

sys.path.insert(0, __file__.rsplit("/", 2)[0] + "/src")

from tauknot.alexander import conway_skein_oracle, determinant, state_sum_polynomial
from tauknot.braids import braid_pd, continuant, rational_pd, torus_pd
from tauknot.diagram import decorate, parse_pd
from tauknot.signature import seifert_alexander, seifert_signature, signature
from tauknot.tau import tau_alternating

OUT = os.path.join(os.path.dirname(__file__), "..", "corpus")

RATIONAL = {
    "4_1": [2, 2],
    "5_1": [5],
    "5_2": [3, 2],
    "6_1": [4, 2],
    "6_2": [3, 1, 2],
    "6_3": [2, 1, 1, 2],
    "7_1": [7],
    "7_2": [5, 2],
    "7_3": [4, 3],
    "7_4": [3, 1, 3],
    "7_5": [3, 2, 2],
    "7_6": [2, 1, 1, 1, 2],
    "7_7": [2, 1, 1, 1, 1, 1],
}

SEARCHED = {
    "9_42": {
        "pd": "X[1,2,3,4] X[2,5,6,3] X[5,7,8,6] X[9,10,11,12] X[10,8,13,14] "
              "X[14,15,12,11] X[13,7,16,17] X[17,16,1,18] X[15,18,4,9]",
        "provenance": "Mirror of the closure of the 4-strand braid "
                      "[-3,-3,-3,-1,2,-1,3,3,2], found by exhaustive scan; "
                      "a nine-crossing diagram with determinant 7 and symmetric "
                      "Alexander degree 2 is the standard-table knot 9_42 "
                      "(5_2 and 7_1 have degrees 1 and 3; every other knot "
                      "through nine crossings has a different determinant); "
                      "chirality fixed by signature +2.",
        "decoration": 1,
        "unknotting": None,
    },
    "10_139": {
        "pd": "X[1,2,3,4] X[4,3,5,6] X[6,5,7,8] X[8,7,9,10] X[9,11,12,13] "
              "X[10,13,14,15] X[15,14,16,17] X[17,16,18,1] X[18,12,19,20] "
              "X[20,19,11,2]",
        "provenance": "Closure of the positive 3-braid [1,1,1,1,2,1,1,1,2,2]; "
                      "a positive 10-letter 3-braid knot closure has Seifert "
                      "genus 4, and the only knot through ten crossings with "
                      "determinant 3 and genus 4 is 10_139.  The decoration "
                      "gives a unique essential M=0 state, at level 4.  "
                      "Switching the four listed crossings provably yields "
                      "the unknot (trivial Alexander polynomial at ten or "
                      "fewer crossings).",
        "decoration": 8,
        "unknotting": [0, 1, 2, 5],
    },
    "10_161": {
        "pd": "X[1,2,3,4] X[2,5,6,3] X[5,7,8,6] X[8,9,10,11] X[9,12,13,10] "
              "X[7,14,15,12] X[14,16,17,15] X[17,18,19,13] X[18,16,1,20] "
              "X[20,4,11,19]",
        "provenance": "Closure of the 3-braid [-2,-2,-2,-1,-1,-2,-2,-1,2,-1], "
                      "found by scanning all mixed ten-letter 3-braid knot "
                      "closures for the documented state structure (exactly "
                      "two essential M=0 states, at levels -3 and -2, with an "
                      "admissible level -1 source onto the -2 state); every "
                      "competing profile was explained exactly by a smaller "
                      "knot's Alexander polynomial, and the survivor's "
                      "determinant 5 with cubic Alexander polynomial matches "
                      "only the standard-table knot 10_161.  Switching the "
                      "three listed crossings provably yields the unknot.",
        "decoration": 5,
        "unknotting": [0, 1, 3],
    },
    "10_152": {
        "pd": "X[1,2,3,4] X[2,5,6,3] X[5,7,8,6] X[8,9,10,11] X[9,12,13,10] "
              "X[7,14,15,12] X[14,1,16,15] X[16,17,18,13] X[17,19,20,18] "
              "X[19,4,11,20]",
        "provenance": "Closure of the negative 3-braid "
                      "[-2,-2,-2,-1,-1,-2,-2,-1,-1,-1]; its mirror is a "
                      "positive braid of genus 4, and the only knot through "
                      "ten crossings with determinant 11 and genus 4 is "
                      "10_152.  The decoration gives a unique essential M=0 "
                      "state, at level -4.  Switching the four listed "
                      "crossings provably yields the unknot.",
        "decoration": 5,
        "unknotting": [0, 1, 3, 7],
    },
}

TORUS = {"T_2_5": (2, 5), "T_3_4": (3, 4)}

TREFOIL_PD = "X[1,4,2,5] X[3,6,4,1] X[5,2,6,3]"


def entry_for(name, d, decoration=1, unknotting=None, provenance="",
              with_tau=True):
    dec = decorate(d, decoration)
    poly = state_sum_polynomial(dec)
    oracle = conway_skein_oracle(d)
    assert poly == oracle, name
    sig = signature(d)
    assert sig == seifert_signature(d), name
    assert poly == seifert_alexander(d), name
    det, dsign = determinant(d)
    assert dsign == (1 if (sig // 2) % 2 == 0 else -1), name
    known = {
        "determinant": det,
        "sigma": sig,
        "alexander": poly.to_json(),
    }
    if with_tau and d.is_alternating() and d.is_reduced():
        cert = tau_alternating(d)
        known["tau"] = cert.value
        known["g4_lower"] = max(cert.lower, -cert.upper, 0)
        known["u_lower"] = known["g4_lower"]
    if unknotting is not None:
        known["unknotting"] = unknotting
    return {
        "name": name,
        "pd": d.to_pd_text(),
        "decoration": decoration,
        "known": known,
        "provenance": provenance,
    }


def main():
    entries = []

    d = parse_pd("name: 3_1\n" + TREFOIL_PD)
    entries.append(entry_for(
        "3_1", d, provenance="Right-handed trefoil, standard three-crossing "
        "alternating diagram; expected values computed by the package's "
        "independent signature and Alexander paths."))

    for name, coeffs in sorted(RATIONAL.items()):
        d = rational_pd(coeffs, name=name)
        e = entry_for(
            name, d, provenance="Two-bridge diagram from the continued "
            "fraction %s; determinant self-certified against the continuant "
            "(= %d); remaining values computed by the package's independent "
            "paths." % (coeffs, continuant(coeffs)))
        assert e["known"]["determinant"] == continuant(coeffs)
        entries.append(e)

    for name, (p, q) in sorted(TORUS.items()):
        d = torus_pd(p, q, name=name)
        e = entry_for(
            name, d, with_tau=False,
            provenance="Closure of the %d-strand torus braid for T(%d,%d); "
            "values computed by the package's independent paths." % (p, p, q))
        entries.append(e)

    for name in ("9_42", "10_139", "10_152", "10_161"):
        if name not in SEARCHED:
            continue
        info = SEARCHED[name]
        d = parse_pd("name: %s\n%s" % (name, info["pd"]))
        e = entry_for(name, d, decoration=info["decoration"],
                      unknotting=info["unknotting"],
                      provenance=info["provenance"], with_tau=False)
        if name in ("10_139", "10_152"):
            from tauknot.tau import tau_unique_state
            cert = tau_unique_state(decorate(d, info["decoration"]))
            assert cert is not None, name
            e["known"]["tau"] = cert.value
            e["known"]["g4_lower"] = max(cert.lower, -cert.upper, 0)
            e["known"]["u_lower"] = e["known"]["g4_lower"]
        entries.append(e)

    os.makedirs(OUT, exist_ok=True)
    for e in entries:
        path = os.path.join(OUT, e["name"] + ".json")
        with open(path, "w") as f:
            json.dump(e, f, indent=2, sort_keys=True)
            f.write("\n")
    with open(os.path.join(OUT, "all.json"), "w") as f:
        json.dump(entries, f, indent=2, sort_keys=True)
        f.write("\n")
    print("wrote %d entries" % len(entries))
    for e in entries:
        print("  %-8s det=%-3d sigma=%-3d tau=%s" % (
            e["name"], e["known"]["determinant"], e["known"]["sigma"],
            e["known"].get("tau", "-")))


if __name__ == "__main__":
    main()
