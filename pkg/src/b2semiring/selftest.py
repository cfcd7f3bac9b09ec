"""Exhaustive cross-check of decide, oracle, witness, derive and checker."""

from __future__ import annotations

import time
from dataclasses import dataclass, field

from .algebra import eval_poly
from .checker import check_identity_proof
from .decision import decide
from .derivation import derive_identity
from .oracle import all_polynomials, oracle_check
from .witness import build_witness


@dataclass
class SelftestResult:
    family: tuple
    polynomials: int = 0
    pairs: int = 0
    valid: int = 0
    invalid: int = 0
    oracle_disagreements: list = field(default_factory=list)
    witness_failures: list = field(default_factory=list)
    proof_failures: list = field(default_factory=list)
    max_proof_nodes: int = 0
    seconds: float = 0.0

    @property
    def ok(self) -> bool:
        return not (self.oracle_disagreements or self.witness_failures or self.proof_failures)

    def to_json(self) -> dict:
        return {
            "family": list(self.family),
            "polynomials": self.polynomials,
            "pairs": self.pairs,
            "valid": self.valid,
            "invalid": self.invalid,
            "oracle_disagreements": len(self.oracle_disagreements),
            "witness_failures": len(self.witness_failures),
            "proof_failures": len(self.proof_failures),
            "max_proof_nodes": self.max_proof_nodes,
            "seconds": round(self.seconds, 3),
            "ok": self.ok,
        }


def run_selftest(alphabet_size=2, max_summands=2, max_word_len=3, derive=True) -> SelftestResult:
    res = SelftestResult((alphabet_size, max_summands, max_word_len))
    start = time.perf_counter()
    polys = all_polynomials(alphabet_size, max_summands, max_word_len)
    res.polynomials = len(polys)
    for p in polys:
        for q in polys:
            res.pairs += 1
            verdict = decide(p, q)
            if verdict.valid != oracle_check(p, q):
                res.oracle_disagreements.append((p, q))
            if verdict.valid:
                res.valid += 1
                if derive:
                    try:
                        proofs = derive_identity(p, q)
                    except Exception as exc:  # recorded, not raised: this is a survey
                        res.proof_failures.append((p, q, repr(exc)))
                        continue
                    res.max_proof_nodes = max(res.max_proof_nodes, *(len(d) for d in proofs))
                    report = check_identity_proof(proofs, p, q)
                    if not report.ok:
                        res.proof_failures.append((p, q, report.lines()[0]))
            else:
                res.invalid += 1
                v = build_witness(p, q, verdict)
                if eval_poly(p, v) == eval_poly(q, v):
                    res.witness_failures.append((p, q))
    res.seconds = time.perf_counter() - start
    return res
