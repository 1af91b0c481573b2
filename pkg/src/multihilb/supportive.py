"""Supportive and very supportive degree sets.

A finite degree set D is supportive when every admissible monomial ideal is
generated in D-degrees (g) and Hilbert agreement on D forces agreement from
above everywhere (h').  Very supportive adds exact global agreement (h) and
containment of all minimal S-pair degrees (s).  The computation follows the
ancestor/descendant iteration: enumerate candidates on the current degrees,
certify each against h, and extend by disagreement witnesses to a fixed point.
"""

from dataclasses import dataclass, field

from .errors import IterationCapError
from .enumeration import (certified_enumeration, default_frontier,
                          enumerate_on, hilbert_matches, sort_degrees)
from .monomials import minimal_syzygy_degrees, pairwise_lcm_degrees

PASS, FAIL, UNKNOWN = "PASS", "FAIL", "UNKNOWN"
EXACT, SUFFICIENT = "EXACT", "SUFFICIENT"


@dataclass
class SupportReport:
    degrees: list
    flags: dict
    witnesses: dict = field(default_factory=dict)
    s_mode: str = EXACT
    meta: dict = field(default_factory=dict)

    def all_pass(self, which=("g", "h", "h_prime", "s")):
        return all(self.flags[k] == PASS for k in which)

    def to_json(self):
        return {
            "degrees": [list(d.flat()) for d in self.degrees],
            "flags": dict(self.flags),
            "witnesses": {k: [[w[0].to_json(), list(w[1].flat())] for w in v]
                          for k, v in self.witnesses.items()},
            "s_mode": self.s_mode,
            "meta": dict(self.meta),
        }


def check_conditions(grading, h, degrees, mode=EXACT, box=None, admissible=None,
                     frontier_radius=4, max_rounds=16):
    """Evaluate conditions (g), (h), (h'), (s) for a candidate degree set.

    admissible may carry a precomputed certified set C; otherwise the
    iteration runs internally.  Failures carry (ideal, degree) witnesses;
    UNKNOWN appears when fiber enumeration could not be completed.
    """
    degrees = sort_degrees(grading, set(degrees))
    flags = {}
    witnesses = {"g": [], "h": [], "h_prime": [], "s": []}
    meta = {"mode": mode}
    if admissible is None:
        admissible, cert_degrees, exact = certified_enumeration(
            grading, h, box, max_rounds, frontier_radius)
        meta["certification"] = "exact" if exact else "frontier"
    meta["admissible_count"] = len(admissible)

    degree_set = set(degrees)

    # (g): every admissible ideal is generated in D-degrees
    flags["g"] = PASS
    for ideal in admissible:
        for gen in ideal.generators:
            dg = grading.deg_of(gen)
            if dg not in degree_set:
                flags["g"] = FAIL
                witnesses["g"].append((ideal, dg))

    # candidates generated in D with matching values on D
    try:
        candidates = enumerate_on(grading, h, degrees, box)
    except Exception as exc:  # unbounded fibers and the like
        flags["h"] = flags["h_prime"] = UNKNOWN
        meta["enumeration_error"] = str(exc)
        candidates = None
    if candidates is not None:
        frontier = default_frontier(grading, h, candidates, radius=frontier_radius)
        flags["h"] = PASS
        flags["h_prime"] = PASS
        for ideal in candidates:
            verdict, witness, _exact = hilbert_matches(
                ideal, grading, h, box, frontier)
            if verdict == "mismatch":
                flags["h_prime"] = FAIL
                flags["h"] = FAIL
                witnesses["h_prime"].append((ideal, witness))
                witnesses["h"].append((ideal, witness))
            elif verdict == "le":
                flags["h"] = FAIL
                witnesses["h"].append((ideal, witness))
        meta["candidate_count"] = len(candidates)

    # (s): syzygy degrees of admissible ideals lie in D
    flags["s"] = PASS
    for ideal in admissible:
        if len(ideal.generators) < 2:
            continue
        if mode == SUFFICIENT:
            sdegs = pairwise_lcm_degrees(ideal, grading)
        else:
            sdegs = minimal_syzygy_degrees(ideal, grading)
        for dg in sdegs:
            if dg not in degree_set:
                flags["s"] = FAIL
                witnesses["s"].append((ideal, dg))

    witnesses = {k: v for k, v in witnesses.items() if v}
    return SupportReport(degrees, flags, witnesses, mode, meta)


def compute_supportive(grading, h, box=None, max_rounds=16, frontier_radius=4):
    """A supportive degree set for h, with the certified admissible set.

    The iteration's fixed point already gives exact agreement (h), which is
    stronger than the (h') required here.
    """
    ideals, degrees, _exact = certified_enumeration(
        grading, h, box, max_rounds, frontier_radius)
    return sort_degrees(grading, degrees), ideals


def compute_very_supportive(grading, h, box=None, max_rounds=16,
                            frontier_radius=4, mode=EXACT):
    """Extend a supportive set until (h) holds exactly and (s) holds."""
    degrees, ideals = compute_supportive(grading, h, box, max_rounds,
                                         frontier_radius)
    degree_set = set(degrees)
    for _ in range(max_rounds):
        for ideal in ideals:
            if len(ideal.generators) < 2:
                continue
            if mode == SUFFICIENT:
                degree_set |= pairwise_lcm_degrees(ideal, grading)
            else:
                degree_set |= minimal_syzygy_degrees(ideal, grading)
        report = check_conditions(grading, h, degree_set, mode, box,
                                  admissible=ideals,
                                  frontier_radius=frontier_radius)
        if report.flags["h"] == PASS and report.flags["s"] == PASS:
            return sort_degrees(grading, degree_set), ideals
        progress = False
        for ideal, witness in report.witnesses.get("h", []):
            if witness is not None and witness not in degree_set:
                degree_set.add(witness)
                progress = True
        for ideal, witness in report.witnesses.get("s", []):
            if witness not in degree_set:
                degree_set.add(witness)
                progress = True
        if not progress:
            raise IterationCapError("very-supportive extension stalled")
    raise IterationCapError("very-supportive extension exceeded round cap")
