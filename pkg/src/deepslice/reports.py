"""Report envelopes: stable JSON records, text rendering and re-verification."""

from __future__ import annotations

import hashlib
import json
from typing import Any

from .errors import InputError

__all__ = ["make_report", "dumps_record", "render_text", "reverify"]


def digest(text: str) -> str:
    return hashlib.sha256(text.encode("utf-8")).hexdigest()[:16]


def make_report(command: str, source: str, result: dict, warnings: list[str] | tuple = ()) -> dict:
    return {
        "command": command,
        "input_digest": digest(source),
        "result": result,
        "warnings": list(warnings),
    }


def dumps_record(report: dict) -> str:
    return json.dumps(report, sort_keys=True, separators=(",", ":"))


def _lines(value: Any, indent: str = "") -> list[str]:
    out = []
    if isinstance(value, dict):
        for k, v in value.items():
            if isinstance(v, dict) or (isinstance(v, list) and any(isinstance(x, dict) for x in v)):
                out.append(f"{indent}{k}:")
                out.extend(_lines(v, indent + "  "))
            else:
                out.append(f"{indent}{k}: {_flat(v)}")
    elif isinstance(value, list):
        for v in value:
            if isinstance(v, (dict, list)):
                out.append(f"{indent}-")
                out.extend(_lines(v, indent + "  "))
            else:
                out.append(f"{indent}- {_flat(v)}")
    else:
        out.append(indent + _flat(value))
    return out


def _flat(v: Any) -> str:
    if isinstance(v, bool):
        return "yes" if v else "no"
    if isinstance(v, (list, dict)):
        return json.dumps(v)
    return str(v)


def render_text(report: dict) -> str:
    head = f"[{report['command']}] input {report['input_digest']}"
    body = _lines(report["result"], "  ")
    warn = [f"  warning: {w}" for w in report["warnings"]]
    return "\n".join([head] + body + warn) + "\n"


# ---------------------------------------------------------------------------


def _ceil_div(a: int, b: int) -> int:
    return -(-a // b)


def _check_rohlin(r: dict) -> bool:
    q, psi = r["Q"], r["psi"]
    n = len(q)
    psi_sq = sum(psi[i] * q[i][j] * psi[j] for i in range(n) for j in range(n))
    excess = abs(psi_sq - 2 * r["sigma"]) - 2 * r["b2"]
    g = max(0, _ceil_div(excess, 4))
    return psi_sq == r["psi_sq"] and all(x % 2 == 0 for x in psi) and r["b2"] == n and g == r["g_min"]


def reverify(report: dict) -> bool:
    """Recompute every inequality in a structured report from its own numbers.

    Only the arithmetic printed in the record is used, so a record can be
    checked without this library's algorithms.
    """
    cmd, res = report.get("command"), report.get("result")
    if not isinstance(res, dict):
        raise InputError("record has no result")
    if cmd == "rohlin":
        return _check_rohlin(res)
    if cmd == "deep-slice":
        hb = res["handlebody"]
        if res["case"] == "WALL_MERIDIAN":
            m = res["meridian"]
            return m["nontrivial"] and any(
                x % d != 0 if d else x != 0 for x, d in zip(m["coordinates"], m["group"])
            )
        if res["case"] == "ROHLIN_CONDITIONAL":
            return abs(hb["det"]) == 1 and res["rohlin"]["g_min"] >= 1 and _check_rohlin(res["rohlin"])
        return False
    if cmd == "mt-obstruct":
        slack = abs(res["sigma_K"] + res["sign_X"]) - res["chi_X"] + 2
        return res["omega_certified"] and slack == res["slack"] and res["obstructed"] == (slack > 0)
    if cmd == "universal-refute":
        b = abs(res["sign_V"]) + abs(res["chi_V"]) + 2 * res["l"]
        slack = abs(res["sigma_witness"] + res["sign_closed"]) - res["chi_closed"] + 2
        return (
            b == res["B"]
            and 2 * res["n"] >= b
            and res["sigma_witness"] == 2 * res["n"]
            and res["chi_closed"] == abs(res["chi_V"]) + 2 * res["l"]
            and slack == res["slack"] > 0
        )
    if cmd == "knot-invariants":
        alex = {int(k): v for k, v in res["alexander"].items()}
        at_one = sum(alex.values())
        at_minus_one = sum(c * (-1) ** (k % 2) for k, c in alex.items())
        arf = 0 if abs(at_minus_one) % 8 in (1, 7) else 1
        palin = all(alex.get(-k) == c for k, c in alex.items())
        return at_one == 1 and palin and arf == res["arf"] and at_minus_one == res["alexander_at_minus_one"]
    if cmd == "wall-calc":
        return res["zero"] == (not res["normalized"])
    if cmd == "family-rule":
        return True
    raise InputError(f"unknown report command {cmd!r}")
