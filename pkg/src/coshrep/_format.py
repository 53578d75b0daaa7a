"""Deterministic text rendering shared by the CLI and the verification suite.

CSV numbers carry 17 significant digits with '.' as the decimal separator,
independent of locale; identical inputs must render to identical bytes.
"""
import json

from .bmv2 import PhiReduction
from .density import DensityProfile
from .expconvex_gram import GramReport
from .laplace_rep import RepresentingMeasure


def fmt17(x) -> str:
    return format(float(x), ".17g")


def density_csv(profile: DensityProfile) -> str:
    lines = ["lambda,density,method"]
    for lam, val in zip(profile.lambdas, profile.values):
        lines.append(f"{fmt17(lam)},{fmt17(val)},{profile.method.value}")
    return "\n".join(lines) + "\n"


def density_json(profile: DensityProfile) -> str:
    p = profile.params
    doc = {"params": {"a": p.a, "b": p.b}, **profile.to_dict()}
    return json.dumps(doc, indent=2) + "\n"


def reconstruct_csv(rows) -> str:
    lines = ["t,phi_direct,phi_reconstructed,abs_err"]
    for t, direct, rec, err in rows:
        lines.append(f"{fmt17(t)},{fmt17(direct)},{fmt17(rec)},{fmt17(err)}")
    return "\n".join(lines) + "\n"


def reconstruct_json(rows) -> str:
    doc = [
        {"t": float(t), "phi_direct": float(d), "phi_reconstructed": float(r), "abs_err": float(e)}
        for t, d, r, e in rows
    ]
    return json.dumps(doc, indent=2) + "\n"


def taylor_csv(rows) -> str:
    lines = ["k,phi_k"]
    for k, val in rows:
        lines.append(f"{k},{fmt17(val)}")
    return "\n".join(lines) + "\n"


def taylor_json(rows) -> str:
    return json.dumps([{"k": int(k), "phi_k": float(v)} for k, v in rows], indent=2) + "\n"


def bmv_csv(rows) -> str:
    lines = ["t,trace_exp,reduced,abs_err"]
    for t, tr, red, err in rows:
        lines.append(f"{fmt17(t)},{fmt17(tr)},{fmt17(red)},{fmt17(err)}")
    return "\n".join(lines) + "\n"


def bmv_json(rows, reduction: PhiReduction) -> str:
    doc = {
        "rows": [
            {"t": float(t), "trace_exp": float(tr), "reduced": float(r), "abs_err": float(e)}
            for t, tr, r, e in rows
        ],
        "reduction": reduction.to_dict(),
    }
    return json.dumps(doc, indent=2) + "\n"


def gram_json(report: GramReport) -> str:
    return json.dumps(report.to_dict(), indent=2) + "\n"


def gram_random_json(result, trials: int, seed: int) -> str:
    doc = {
        "trials": int(trials),
        "seed": int(seed),
        "passed": bool(result.passed),
        "worst_min_eigenvalue": float(result.worst_min_eigenvalue),
        "worst_report": result.worst_report.to_dict(),
    }
    return json.dumps(doc, indent=2) + "\n"


def measure_json(measure: RepresentingMeasure) -> str:
    return json.dumps(measure.to_dict(), indent=2) + "\n"
