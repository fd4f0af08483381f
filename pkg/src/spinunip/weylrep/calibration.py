"""Selection of the quadratic character eta of H_t and its persistence.

For each embedding of H_t = W_t x| {+-1}^t (see :data:`PAIR_GROUPS`) the
four candidates are generated by the sign character of the W_t part and the
product character of the {+-1}^t part.  A candidate is kept when

* ``Ind_{H_1}^{W_2} eta`` is the 2-dimensional irreducible, and
* every ``(mu, mu)`` with ``|mu| = t`` occurs exactly once in
  ``Ind_{H_t}^{W_{2t}} eta`` for ``t = 1, 2, 3``.

Exactly one of the eight survives.  The selection is written to a versioned
JSON file; ``SPINUNIP_CALIBRATION`` points at it.
"""

from __future__ import annotations

import json
import os
from dataclasses import dataclass, field
from functools import cache
from pathlib import Path

from spinunip.partitions import BiPartition, Partition, partitions_of
from spinunip.weylrep.characters import decompose, multiplicity
from spinunip.weylrep.subgroups import PAIR_GROUPS, EtaChoice, SubgroupFactor

CALIBRATION_VERSION = 1
ENV_VAR = "SPINUNIP_CALIBRATION"
CALIBRATION_DEPTH = 3

# (element generating the W_t sign, element generating {+-1}^t) in each pair
# group.  In the swap embedding W_t acts on the pair-diagonal as W(B_t) and
# s flips the anti-diagonal; in the flip embedding the pair negation plays
# the role of the W_t sign generator and f1 generates {+-1}.
GENERATORS = {"swap": ("-s", "s"), "flip": ("-1", "f1")}


class CalibrationError(RuntimeError):
    pass


def structured_candidate(embedding: str, sgn_w: bool, prod_k: bool) -> EtaChoice:
    w_gen, k_gen = GENERATORS[embedding]
    values = {"1": 1, w_gen: -1 if sgn_w else 1, k_gen: -1 if prod_k else 1}
    a, b, c = (name for name, _ in PAIR_GROUPS[embedding][1:])
    if a not in values:
        values[a] = values[b] * values[c]
    if b not in values:
        values[b] = values[a] * values[c]
    return EtaChoice(embedding, values[a], values[b], "sgn" if sgn_w else "one")


def structured_candidates() -> list[EtaChoice]:
    return [
        structured_candidate(emb, sgn_w, prod_k)
        for emb in GENERATORS
        for sgn_w in (False, True)
        for prod_k in (False, True)
    ]


@dataclass
class CandidateReport:
    eta: EtaChoice
    passes_t1: bool
    equal_shape_ok: dict[int, bool] = field(default_factory=dict)
    t1_decomposition: dict[str, int] = field(default_factory=dict)

    @property
    def passes(self) -> bool:
        return self.passes_t1 and all(self.equal_shape_ok.values())


def equal_shape_multiplicities(eta: EtaChoice, t: int) -> dict[Partition, int]:
    from spinunip.weylrep.induction import induce

    chi = induce([SubgroupFactor.H(t, eta)], 2 * t)
    return {mu: multiplicity(BiPartition(mu, mu), chi) for mu in partitions_of(t)}


def evaluate_candidate(eta: EtaChoice, depth: int = CALIBRATION_DEPTH) -> CandidateReport:
    from spinunip.weylrep.induction import induce

    chi = induce([SubgroupFactor.H(1, eta)], 2)
    dec = decompose(chi)
    report = CandidateReport(
        eta,
        passes_t1=dec == {BiPartition((1,), (1,)): 1},
        t1_decomposition={str(bp): int(m) for bp, m in dec.items()},
    )
    for t in range(1, depth + 1):
        mults = equal_shape_multiplicities(eta, t)
        report.equal_shape_ok[t] = all(m == 1 for m in mults.values())
    return report


def calibrate_eta(depth: int = CALIBRATION_DEPTH) -> tuple[EtaChoice, list[CandidateReport]]:
    """Return the unique surviving candidate and the per-candidate reports."""
    reports = [evaluate_candidate(eta, depth) for eta in structured_candidates()]
    winners = [r.eta for r in reports if r.passes]
    if len(winners) != 1:
        names = ", ".join(w.name for w in winners) or "none"
        raise CalibrationError(f"calibration expected one surviving candidate, got: {names}")
    # stability: the same candidate must win when only t <= d is tested
    for d in range(1, depth + 1):
        partial = [r.eta for r in reports if r.passes_t1 and all(r.equal_shape_ok[t] for t in range(1, d + 1))]
        if winners[0] not in partial:
            raise CalibrationError(f"winner drops out at depth {d}")
    return winners[0], reports


def calibration_payload(eta: EtaChoice) -> dict:
    return {
        "version": CALIBRATION_VERSION,
        "embedding": eta.embedding,
        "eta": eta.to_json(),
        "eta_name": eta.name,
        "label_rule": "I is the constituent of Res (mu,mu) occurring in Ind_{H_k}^{W'_2k} eta",
    }


def write_calibration(path: str | os.PathLike, eta: EtaChoice | None = None) -> dict:
    if eta is None:
        eta, _ = calibrate_eta()
    payload = calibration_payload(eta)
    Path(path).write_text(json.dumps(payload, indent=2, sort_keys=True) + "\n")
    return payload


def load_calibration(path: str | os.PathLike) -> EtaChoice:
    data = json.loads(Path(path).read_text())
    if data.get("version") != CALIBRATION_VERSION:
        raise CalibrationError(f"unsupported calibration version {data.get('version')!r} in {path}")
    eta = EtaChoice.from_json(data["eta"])
    if eta.embedding != data.get("embedding"):
        raise CalibrationError("embedding field disagrees with eta")
    return eta


@cache
def _current(path: str | None) -> EtaChoice:
    if path:
        return load_calibration(path)
    return calibrate_eta()[0]


def current_eta() -> EtaChoice:
    """The eta in force: from ``$SPINUNIP_CALIBRATION`` if set, else freshly calibrated."""
    return _current(os.environ.get(ENV_VAR) or None)
