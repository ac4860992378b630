"""Full-pipeline report, as a JSON-ready dict and as aligned text."""

from __future__ import annotations

import json
from fractions import Fraction
from importlib import resources

from . import __version__
from .complex import ColoredComplex, validate
from .edgepath import rank_bounds
from .errors import CrossCheckError, InvalidInput
from .flags import all_masks, flag_vectors, gamma, mask_colors
from .genus import BoundsReport, GenusRecord, balanced_genus, verify_bounds
from .io import digest


def frac(x: Fraction):
    """Integers stay integers; halves become strings like ``"3/2"``."""
    return int(x) if x.denominator == 1 else f"{x.numerator}/{x.denominator}"


def set_key(colors) -> str:
    return ",".join(map(str, colors))


def flags_dict(cx: ColoredComplex) -> dict:
    fv = flag_vectors(cx)
    pairs = all_masks(cx, 2)
    return {
        "f_vector": list(fv.f),
        "h_vector": list(fv.h),
        "euler": fv.euler,
        "flag_f": {set_key(mask_colors(m)): fv.flag_f[m] for m in sorted(fv.flag_f)},
        "flag_h": {set_key(mask_colors(m)): fv.flag_h[m] for m in sorted(fv.flag_h)},
        "gamma": {set_key(mask_colors(m)): gamma(cx, mask_colors(m)) for m in pairs},
    }


def genus_dict(record: GenusRecord) -> dict:
    return {
        "genus": frac(record.genus),
        "orientable": record.orientable,
        "upper_bound_for_space": True,
        "closed_form_used": record.closed_form_used,
        "argmin": [list(n.order) for n in record.argmin],
        "necklaces": [
            {
                "necklace": list(r.necklace.order),
                "euler_char": r.euler_char,
                "rho_euler": frac(r.rho_euler),
                "rho_flag": frac(r.rho_flag),
                "rho_closed": None if r.rho_closed is None else frac(r.rho_closed),
            }
            for r in record.rows
        ],
        "notes": list(record.notes),
    }


def bounds_dict(rep: BoundsReport) -> dict:
    return {
        "asserted_m": rep.asserted_m,
        "euler": rep.euler_char,
        "sphere": rep.sphere,
        "ok": rep.ok,
        "certificates": list(rep.certificates),
        "checks": [
            {"name": c.name, "statement": c.statement, "status": c.status}
            for c in rep.checks
        ],
    }


def build_report(cx: ColoredComplex, asserted_m: int | None = None) -> dict:
    """Run every stage that applies to ``cx``.

    Stages whose preconditions fail are recorded as null with a reason in
    ``skipped``; a failed internal cross-check sets ``status`` to
    ``"cross-check-failed"``.
    """
    val = validate(cx)
    out = {
        **header(cx, "report"),
        "complex": {
            "dimension": cx.dim,
            "vertices": cx.num_vertices,
            "facets": len(cx.facets),
        },
        "validation": val.as_dict(),
        "flags": flags_dict(cx),
        "genus": None,
        "bounds": None,
        "pi1": None,
        "skipped": {},
        "status": "ok",
    }
    try:
        record = balanced_genus(cx)
        out["genus"] = genus_dict(record)
        out["bounds"] = bounds_dict(verify_bounds(cx, asserted_m, record))
        if not out["bounds"]["ok"]:
            out["status"] = "bound-failed"
    except CrossCheckError as exc:
        out["status"] = "cross-check-failed"
        out["skipped"]["genus"] = str(exc)
    except InvalidInput as exc:
        out["skipped"]["genus"] = str(exc)
    try:
        out["pi1"] = rank_bounds(cx).as_dict()
    except InvalidInput as exc:
        out["skipped"]["pi1"] = str(exc)
    return out


def header(cx: ColoredComplex, command: str) -> dict:
    return {
        "tool": "balgenus",
        "version": __version__,
        "command": command,
        "input_digest": digest(cx),
    }


def report_schema() -> dict:
    text = resources.files("balgenus").joinpath("report.schema.json").read_text("utf-8")
    return json.loads(text)


def report_text(rep: dict) -> str:
    lines = [
        f"balgenus {rep['version']}  input {rep['input_digest'][:16]}",
        "dimension {dimension}  vertices {vertices}  facets {facets}".format(**rep["complex"]),
    ]
    val = rep["validation"]
    lines.append(
        "normal pseudomanifold: "
        + ("yes" if val["normal_pseudomanifold"] else "no")
    )
    fl = rep["flags"]
    lines.append("f-vector: " + " ".join(map(str, fl["f_vector"])))
    lines.append("h-vector: " + " ".join(map(str, fl["h_vector"])))
    lines.append(f"euler characteristic: {fl['euler']}")
    if fl["gamma"]:
        lines.append(
            "Gamma: " + "  ".join(f"{{{k}}}={v}" for k, v in fl["gamma"].items())
        )
    g = rep["genus"]
    if g is not None:
        lines.append(
            f"balanced genus of this triangulation: {g['genus']} "
            f"({'orientable' if g['orientable'] else 'non-orientable'}; "
            f"{len(g['argmin'])} of {len(g['necklaces'])} necklaces attain it)"
        )
    b = rep["bounds"]
    if b is not None:
        for c in b["certificates"]:
            lines.append(f"certificate: {c}")
        for c in b["checks"]:
            lines.append(f"[{c['status']:>4}] {c['name']}: {c['statement']}")
    p = rep["pi1"]
    if p is not None:
        lines.append(
            f"pi_1 rank bounds: {p['lower']} <= m <= {p['upper']} "
            f"(generators {p['generators']}, link-trivialized {p['link_trivialized']})"
        )
    for stage, why in rep["skipped"].items():
        lines.append(f"skipped {stage}: {why}")
    lines.append(f"status: {rep['status']}")
    return "\n".join(lines) + "\n"
