"""Case-file parsing and atlas serialization (JSON, DOT, fixed-width table).

Case files are JSON documents:

    {
      "group": {"factors": [{"type": "C", "rank": 2}]},
      "frobenius": {"permutation": [0, 1]},          # optional, default id
      "mu": {"pairings": [0, 1]},                    # exactly one of mu / J
      "J": [0],
      "options": {"minuscule_check": true, "element_bound": 1000000}
    }

Elements are serialized as their deterministic reduced words, so every
document re-parses to the same canonical elements.
"""

from __future__ import annotations

import json

from .atlas import Atlas, PELCase
from .errors import InputError
from .rootdata import (
    CocharSpec,
    DynkinSpec,
    cartan_from_spec,
    identity_automorphism,
    validate_automorphism,
)
from .coxeter import DEFAULT_BOUND


def parse_case(doc: dict) -> PELCase:
    """Validate a case document and apply defaults."""
    if not isinstance(doc, dict):
        raise InputError("case document must be a JSON object")
    group = doc.get("group")
    if not isinstance(group, dict) or "factors" not in group:
        raise InputError("missing group.factors")
    factors = []
    for pos, f in enumerate(group["factors"]):
        if not isinstance(f, dict) or "type" not in f or "rank" not in f:
            raise InputError(f"group.factors[{pos}] needs 'type' and 'rank'")
        factors.append((str(f["type"]), f["rank"]))
    spec = DynkinSpec(tuple(factors))
    cartan = cartan_from_spec(spec)

    frob = doc.get("frobenius")
    if frob is None:
        phi = identity_automorphism(cartan)
    else:
        if not isinstance(frob, dict) or "permutation" not in frob:
            raise InputError("frobenius needs a 'permutation' list")
        phi = validate_automorphism(frob["permutation"], cartan)

    has_mu = "mu" in doc
    has_J = "J" in doc
    if has_mu == has_J:
        raise InputError("exactly one of 'mu' and 'J' must be present")
    mu = None
    J = None
    if has_mu:
        mu_doc = doc["mu"]
        if not isinstance(mu_doc, dict) or "pairings" not in mu_doc:
            raise InputError("mu needs a 'pairings' list")
        mu = CocharSpec(tuple(mu_doc["pairings"]))
    else:
        J = frozenset(doc["J"])

    options = doc.get("options") or {}
    minuscule_check = bool(options.get("minuscule_check", True))
    element_bound = int(options.get("element_bound", DEFAULT_BOUND))
    return PELCase(
        spec=spec,
        phi=phi,
        mu=mu,
        J=J,
        minuscule_check=minuscule_check,
        element_bound=element_bound,
    )


def case_to_dict(case: PELCase) -> dict:
    doc = {
        "group": {
            "factors": [{"type": t, "rank": r} for t, r in case.spec.factors]
        },
        "frobenius": {"permutation": list(case.phi.perm)},
        "options": {
            "minuscule_check": case.minuscule_check,
            "element_bound": case.element_bound,
        },
    }
    if case.mu is not None:
        doc["mu"] = {"pairings": list(case.mu.pairings)}
    else:
        doc["J"] = sorted(case.J)
    return doc


def atlas_to_dict(atlas: Atlas) -> dict:
    group = atlas.group
    word = group.reduced_word
    strata = []
    for sid, s in enumerate(atlas.strata):
        strata.append(
            {
                "id": sid,
                "rep": word(s.rep),
                "orbit": [word(w) for w in s.orbit],
                "dim": s.dim,
                "codim": s.codim,
                "eo_fiber": [
                    {"word": word(w), "length": length} for w, length in s.eo_fiber
                ],
                "single_eo": s.single_eo,
                "closure": s.closure,
                "is_maximal": s.is_maximal,
                "siegel_a": s.siegel_a,
            }
        )
    return {
        "case": case_to_dict(atlas.case),
        "group": {
            "name": atlas.case.spec.describe(),
            "rank": group.n,
            "order": group.order,
        },
        "J": sorted(atlas.J),
        "K": sorted(atlas.K),
        "degree": atlas.degree,
        "moduli_dim": atlas.moduli_dim,
        "mu_ordinary": {
            "verdict": atlas.mu_ordinary.verdict,
            **atlas.mu_ordinary.flags,
        },
        "strata": strata,
        "poset_edges": hasse_edges(atlas),
        "notes": atlas.notes,
    }


def atlas_json(atlas: Atlas) -> str:
    return json.dumps(atlas_to_dict(atlas), indent=2) + "\n"


def hasse_edges(atlas: Atlas) -> list[list[int]]:
    """Covering relations of the orbit poset (transitive reduction)."""
    leq = atlas.orbit_poset.leq
    n = len(atlas.strata)
    edges = []
    for a in range(n):
        for b in range(n):
            if a == b or not leq[a][b]:
                continue
            if any(
                leq[a][c] and leq[c][b] and c != a and c != b for c in range(n)
            ):
                continue
            edges.append([a, b])
    return edges


def emit_dot(atlas: Atlas) -> str:
    """Hasse diagram of the closure order, one node per stratum."""
    group = atlas.group
    lines = ["digraph closure {", "  rankdir=BT;"]
    for sid, s in enumerate(atlas.strata):
        label = "{} / dim {} / #EO {}".format(
            "".join(str(i) for i in group.reduced_word(s.rep)) or "e",
            s.dim,
            len(s.eo_fiber),
        )
        lines.append(f'  n{sid} [label="{label}"];')
    for a, b in hasse_edges(atlas):
        lines.append(f"  n{a} -> n{b};")
    lines.append("}")
    return "\n".join(lines) + "\n"


def emit_table(atlas: Atlas) -> str:
    """Fixed-width text table of the strata."""
    group = atlas.group
    rows = []
    for sid, s in enumerate(atlas.strata):
        rep = "".join(str(i) for i in group.reduced_word(s.rep)) or "e"
        rows.append(
            (
                str(sid),
                rep,
                str(s.dim),
                str(s.codim),
                str(len(s.eo_fiber)),
                "yes" if s.single_eo else "no",
                ",".join(str(c) for c in s.closure),
            )
        )
    header = ("id", "rep", "dim", "codim", "#EO", "single-EO", "closure")
    widths = [
        max(len(header[c]), *(len(r[c]) for r in rows)) for c in range(len(header))
    ]
    out = []
    for row in (header, *rows):
        out.append("  ".join(cell.ljust(w) for cell, w in zip(row, widths)).rstrip())
    return "\n".join(out) + "\n"
