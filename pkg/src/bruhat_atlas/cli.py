"""Command-line entry point.

Subcommands: atlas <casefile>, verify <casefile>, corpus <preset>, siegel <g>.
Presets: siegel:<g>, hilbert:<d>, gu:<r>,<s>:inert|split.
Exit codes: 0 success, 1 verification failure, 2 invalid input, 3 bound
exceeded.
"""

from __future__ import annotations

import argparse
import json
import sys
from pathlib import Path

from . import atlas as atlas_mod
from . import oracle, serialize
from .errors import BoundError, InputError


def corpus_preset(name: str) -> dict:
    """Expand a named preset into a case document."""
    parts = name.split(":")
    kind = parts[0]
    if kind == "siegel":
        if len(parts) != 2:
            raise InputError("expected siegel:<g>")
        g = _positive_int(parts[1], "genus")
        case = atlas_mod.siegel_case(g)
        return serialize.case_to_dict(case)
    if kind == "hilbert":
        if len(parts) != 2:
            raise InputError("expected hilbert:<d>")
        d = _positive_int(parts[1], "degree")
        perm = list(range(1, d)) + [0]  # cyclic Frobenius over the factors
        return {
            "group": {"factors": [{"type": "A", "rank": 1} for _ in range(d)]},
            "frobenius": {"permutation": perm},
            "mu": {"pairings": [1] * d},
        }
    if kind == "gu":
        if len(parts) != 3 or parts[2] not in ("inert", "split"):
            raise InputError("expected gu:<r>,<s>:inert|split")
        try:
            r, s = (int(v) for v in parts[1].split(","))
        except ValueError as exc:
            raise InputError(f"bad signature {parts[1]!r}") from exc
        if r < 0 or s < 0 or r + s < 2:
            raise InputError("signature needs r + s >= 2")
        n = r + s - 1  # diagram rank of the unitary case
        pairings = [0] * n
        pairings[s - 1 if s >= 1 else 0] = 1
        if s == 0:
            pairings = [0] * n  # trivial signature: central cocharacter
        perm = list(range(n))
        if parts[2] == "inert":
            perm = list(reversed(perm))
        return {
            "group": {"factors": [{"type": "A", "rank": n}]},
            "frobenius": {"permutation": perm},
            "mu": {"pairings": pairings},
        }
    raise InputError(f"unknown preset {name!r}")


def _positive_int(text: str, what: str) -> int:
    try:
        value = int(text)
    except ValueError as exc:
        raise InputError(f"bad {what} {text!r}") from exc
    if value < 1:
        raise InputError(f"{what} must be >= 1")
    return value


def _write_outputs(built, out_dir: Path):
    out_dir.mkdir(parents=True, exist_ok=True)
    (out_dir / "atlas.json").write_text(serialize.atlas_json(built))
    (out_dir / "hasse.dot").write_text(serialize.emit_dot(built))
    (out_dir / "table.txt").write_text(serialize.emit_table(built))


def _run_case(doc: dict, out_dir: Path, verify: bool) -> int:
    case = serialize.parse_case(doc)
    built = atlas_mod.build_atlas(case)
    _write_outputs(built, out_dir)
    print(
        f"{case.spec.describe()}: {len(built.strata)} strata, "
        f"moduli dim {built.moduli_dim}, "
        f"mu-ordinary {built.mu_ordinary.verdict}, degree {built.degree}"
    )
    if verify:
        report = oracle.verify_atlas(built)
        print(report.render())
        if not report.passed:
            return 1
    return 0


def _load_doc(path: str) -> dict:
    try:
        text = Path(path).read_text()
    except OSError as exc:
        raise InputError(f"cannot read {path}: {exc}") from exc
    try:
        return json.loads(text)
    except json.JSONDecodeError as exc:
        raise InputError(f"{path} is not valid JSON: {exc}") from exc


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="bruhat-atlas",
        description="Stratification atlases for classical Weyl groups",
    )
    parser.add_argument("--out", default="out", help="output directory")
    parser.add_argument(
        "--verify", action="store_true", help="run brute-force verification"
    )
    parser.add_argument(
        "--no-minuscule-check", action="store_true", help="skip the minuscule check"
    )
    parser.add_argument("--bound", type=int, default=None, help="element bound")
    sub = parser.add_subparsers(dest="command", required=True)
    p_atlas = sub.add_parser("atlas", help="build an atlas from a case file")
    p_atlas.add_argument("casefile")
    p_verify = sub.add_parser("verify", help="build and brute-force verify")
    p_verify.add_argument("casefile")
    p_corpus = sub.add_parser("corpus", help="run a named preset")
    p_corpus.add_argument("preset")
    p_siegel = sub.add_parser("siegel", help="print the a-number identification")
    p_siegel.add_argument("genus", type=int)
    return parser


def _apply_overrides(doc: dict, args) -> dict:
    options = dict(doc.get("options") or {})
    if args.no_minuscule_check:
        options["minuscule_check"] = False
    if args.bound is not None:
        options["element_bound"] = args.bound
    if options:
        doc = {**doc, "options": options}
    return doc


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    out_dir = Path(args.out)
    try:
        if args.command in ("atlas", "verify"):
            doc = _apply_overrides(_load_doc(args.casefile), args)
            verify = args.verify or args.command == "verify"
            return _run_case(doc, out_dir, verify)
        if args.command == "corpus":
            doc = _apply_overrides(corpus_preset(args.preset), args)
            return _run_case(doc, out_dir, args.verify)
        if args.command == "siegel":
            if args.genus < 1:
                raise InputError("genus must be >= 1")
            ident = atlas_mod.siegel_identify(args.genus)
            print(f"genus {ident.g}: {len(ident.entries)} strata")
            print(f"{'a':>3}  {'dim':>4}  rep")
            for e in ident.entries:
                rep = "".join(str(i) for i in e["rep"]) or "e"
                print(f"{e['a']:>3}  {e['dim']:>4}  {rep}")
            print(f"total order reversed by a-number: {ident.total_order}")
            return 0
    except InputError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except BoundError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 3
    return 2  # pragma: no cover


if __name__ == "__main__":  # pragma: no cover
    sys.exit(main())
