"""Command-line front end.

Subcommands: e-value, schur, basic-set, embed, extract, afun, factor,
verify-triangular, verify-conjecture-shape, sweep-genericity. Every
command accepts --format json|table (table is the default and carries
no parsing contract; json output is canonical and byte-stable), and the
Schur table is cached under --cache-dir / $HECKE_CACHE_DIR keyed by a
content hash of the inputs.

Exit codes: 0 success; 2 precondition violation (bad arguments, files,
hypotheses); 3 mathematical failure (no canonical set, a failed product
or verification report); 4 not catalogued (an explicit signal, not an
error).
"""

from __future__ import annotations

import argparse
import hashlib
import json
import os
import sys
import tempfile
from pathlib import Path

from . import __version__
from .basicsets import (
    BasicSetsDiffer,
    BetaNotUnique,
    LabeledDecompMatrix,
    NoCanonicalSet,
    NotCatalogued,
    ProductMismatch,
    basic_set_catalog,
    beta_factorization,
    canonical_basic_set,
    verify_conjecture_shape,
    verify_unitriangular,
)
from .coxeter import DEFAULT_GROUP_CAP, build_datum
from .modarith import compute_e, sweep_a_sets, verify_a_sets
from .partitions import (
    a_invariant_unitary,
    embed_bipartition,
    extract_bipartition,
    parse_bipartition,
    parse_partition,
    render_bipartition,
    render_partition,
)
from .reps import builtin_g2_reps, schur_table_json_dict

__all__ = ["main", "canonical_json"]

EXIT_OK = 0
EXIT_PRECONDITION = 2
EXIT_MATH_FAILURE = 3
EXIT_NOT_CATALOGUED = 4

_MATH_FAILURES = (
    NoCanonicalSet,
    ProductMismatch,
    BetaNotUnique,
    BasicSetsDiffer,
    ArithmeticError,
)


def canonical_json(data) -> str:
    """Deterministic rendering: sorted keys, two-space indent, newline."""
    return json.dumps(data, sort_keys=True, indent=2) + "\n"


def _default_cache_dir() -> Path:
    env = os.environ.get("HECKE_CACHE_DIR")
    if env:
        return Path(env)
    return Path.home() / ".cache" / "heckebasis"


def _emit(args, data: dict, table_lines) -> None:
    if args.format == "json":
        sys.stdout.write(canonical_json(data))
    else:
        for line in table_lines:
            print(line)


def _parse_weights(text: str) -> tuple[int, ...]:
    return tuple(int(tok) for tok in text.split(","))


def _parse_unitary(text: str) -> int | None:
    """Return s for weight strings of the form unitary:s=0 / unitary:s=1."""
    if not text.startswith("unitary"):
        return None
    _, _, tail = text.partition(":")
    key, _, value = tail.partition("=")
    if key.strip() != "s":
        raise ValueError(f"cannot parse unitary weights {text!r}")
    return int(value)


def _load_json(path: str):
    with open(path, "r", encoding="utf-8") as handle:
        return json.load(handle)


def _load_matrix(path: str) -> LabeledDecompMatrix:
    return LabeledDecompMatrix.from_json_dict(_load_json(path))


def _residue_text(rs) -> str:
    if rs.is_empty():
        return "empty"
    inner = ", ".join(str(r) for r in rs.residues)
    return f"j in {{{inner}}} (mod {rs.modulus})"


# ----- subcommands ------------------------------------------------------------


def cmd_e_value(args) -> int:
    if args.a is None:
        e = compute_e(args.q, args.ell)
        _emit(args, {"e": e}, [f"e = {e}"])
        return EXIT_OK
    report = verify_a_sets(args.q, args.a, args.b, args.ell)
    lines = [
        f"e  = {report.e}",
        f"e' = {report.e_prime}",
        f"A  = {_residue_text(report.set_q)}",
        f"A0 = {_residue_text(report.set_root)}",
        f"equal: {'yes' if report.equal else 'NO'}",
    ]
    _emit(args, report.to_json_dict(), lines)
    return EXIT_OK if report.equal else EXIT_MATH_FAILURE


def _schur_payload(args) -> dict:
    weights = _parse_weights(args.weights)
    datum = build_datum(args.type, args.rank, weights, cap=args.cap)
    reps = builtin_g2_reps(datum)
    return schur_table_json_dict(datum, reps)


def cmd_schur(args) -> int:
    weights = _parse_weights(args.weights)
    key_source = canonical_json(
        {
            "kind": "schur",
            "version": __version__,
            "type": args.type,
            "rank": args.rank,
            "weights": list(weights),
        }
    )
    key = hashlib.sha256(key_source.encode("utf-8")).hexdigest()
    cache_dir = Path(args.cache_dir)
    cache_path = cache_dir / f"schur-{key}.json"
    if cache_path.is_file():
        text = cache_path.read_text(encoding="utf-8")
        data = json.loads(text)
    else:
        data = _schur_payload(args)
        text = canonical_json(data)
        cache_dir.mkdir(parents=True, exist_ok=True)
        fd, tmp = tempfile.mkstemp(dir=cache_dir, suffix=".tmp")
        with os.fdopen(fd, "w", encoding="utf-8") as handle:
            handle.write(text)
        os.replace(tmp, cache_path)
    if args.format == "json":
        sys.stdout.write(text)
        return EXIT_OK
    header = f"{'name':<8} {'dim':>3} {'a':>3} {'f':>3}  schur"
    lines = [header, "-" * len(header)]
    for rep in data["reps"]:
        lines.append(
            f"{rep['name']:<8} {rep['dim']:>3} {rep['aInvariant']:>3} "
            f"{rep['fLambda']:>3}  {rep['schur']}"
        )
    for line in lines:
        print(line)
    return EXIT_OK


def _basic_set_report(matrix: LabeledDecompMatrix) -> dict:
    basic = canonical_basic_set(matrix)
    return {
        "iota": basic.to_json_dict()["iota"],
        "image": sorted(basic.image()),
    }


def cmd_basic_set(args) -> int:
    if args.input:
        matrix = _load_matrix(args.input)
        data = _basic_set_report(matrix)
        lines = [f"{col} -> {row}" for col, row in data["iota"].items()]
        lines.append("image: {" + ", ".join(data["image"]) + "}")
        _emit(args, data, lines)
        return EXIT_OK
    if args.type is None or args.e is None:
        raise ValueError("need either --input or --type together with --e")
    params: dict = {}
    tag = args.type.lower()
    if tag == "g2":
        if args.weights:
            params["weights"] = _parse_weights(args.weights)
    elif tag == "a":
        if args.n is None:
            raise ValueError("--type a needs --n")
        params["n"] = args.n
    elif tag == "b":
        if args.m is None:
            raise ValueError("--type b needs --m")
        params["m"] = args.m
        s = None
        if args.weights:
            s = _parse_unitary(args.weights)
        if s is None:
            s = args.s
        if s is None:
            raise ValueError(
                "--type b needs --weights unitary:s=0|1 or --s"
            )
        params["s"] = s
    else:
        raise ValueError(f"unknown type {args.type!r}")
    labels = sorted(basic_set_catalog(tag, params, args.e))
    data = {"e": args.e, "labels": labels, "count": len(labels)}
    lines = [f"{len(labels)} labels for e = {args.e}:"] + [
        f"  {lab}" for lab in labels
    ]
    _emit(args, data, lines)
    return EXIT_OK


def cmd_embed(args) -> int:
    b = parse_bipartition(args.bipartition)
    lam = embed_bipartition(b, args.s)
    text = render_partition(lam)
    _emit(args, {"partition": text}, [text if text else "(empty)"])
    return EXIT_OK


def cmd_extract(args) -> int:
    lam = parse_partition(args.partition)
    b = extract_bipartition(lam, args.s)
    text = render_bipartition(b)
    _emit(args, {"bipartition": text}, [text])
    return EXIT_OK


def cmd_afun(args) -> int:
    b = parse_bipartition(args.bipartition)
    value = a_invariant_unitary(b, args.s)
    _emit(args, {"aInvariant": value}, [f"a = {value}"])
    return EXIT_OK


def cmd_factor(args) -> int:
    full = _load_matrix(args.full)
    root = _load_matrix(args.root)
    prime_data = _load_json(args.dprime)
    if isinstance(prime_data, dict):
        prime_data = prime_data["entries"]
    report = beta_factorization(full, root, prime_data)
    data = report.to_json_dict()
    lines = [f"{mu} -> {nu}" for mu, nu in report.beta]
    lines.append(
        "basic sets equal: "
        + ("yes" if data["setsEqual"] else "NO")
    )
    _emit(args, data, lines)
    return EXIT_OK


def cmd_verify_triangular(args) -> int:
    report = verify_unitriangular(_load_matrix(args.input))
    data = report.to_json_dict()
    lines = [
        f"dominance phrasing: {'pass' if report.dominance_ok else 'FAIL'}",
        f"n-invariant phrasing: {'pass' if report.n_ok else 'FAIL'}",
    ]
    for v in report.violations:
        lines.append(
            f"  violation [{v.phrasing}] at ({v.row_label}, {v.col_label}): "
            f"{v.detail}"
        )
    _emit(args, data, lines)
    return EXIT_OK if report.ok else EXIT_MATH_FAILURE


def cmd_verify_conjecture_shape(args) -> int:
    report = verify_conjecture_shape(_load_matrix(args.input))
    data = report.to_json_dict()
    lines = [f"shape: {'pass' if report.ok else 'FAIL'}"]
    for block in report.blocks:
        lines.append(
            f"  block {block['class']} (d = {block['d']}): "
            f"rows {block['rows']} cols {block['cols']}"
        )
    for v in report.violations:
        lines.append(
            f"  violation [{v.reason}] at ({v.row_label}, {v.col_label}): "
            f"{v.detail}"
        )
    _emit(args, data, lines)
    return EXIT_OK if report.ok else EXIT_MATH_FAILURE


def cmd_sweep_genericity(args) -> int:
    out = sweep_a_sets(args.ell_max, args.q_max)
    lines = [
        f"checked {out['checked']} parameter tuples",
        f"all equal: {'yes' if out['allEqual'] else 'NO'}",
    ]
    for failure in out["failures"]:
        lines.append(f"  failure: {failure}")
    _emit(args, out, lines)
    return EXIT_OK if out["allEqual"] else EXIT_MATH_FAILURE


# ----- parser -----------------------------------------------------------------


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument(
        "--format",
        choices=("json", "table"),
        default="table",
        help="output format (table is human-oriented; json is canonical)",
    )
    common.add_argument(
        "--cache-dir",
        default=str(_default_cache_dir()),
        help="cache directory (default $HECKE_CACHE_DIR or ~/.cache/heckebasis)",
    )
    common.add_argument(
        "--cap",
        type=int,
        default=DEFAULT_GROUP_CAP,
        help="group order cap for datum construction",
    )

    parser = argparse.ArgumentParser(
        prog="heckebasis",
        description="Exact Schur elements, a-invariants, and canonical "
        "basic sets for Iwahori-Hecke algebras.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser(
        "e-value",
        parents=[common],
        help="the bound e, and with --a also e', A, and A0",
    )
    p.add_argument("--q", type=int, required=True)
    p.add_argument("--ell", type=int, required=True)
    p.add_argument("--a", type=int, default=None)
    p.add_argument("--b", type=int, default=0)
    p.set_defaults(func=cmd_e_value)

    p = sub.add_parser(
        "schur",
        parents=[common],
        help="Schur elements and a-invariants of the built-in representations",
    )
    p.add_argument("--type", default="g2")
    p.add_argument("--rank", type=int, default=2)
    p.add_argument("--weights", default="3,1")
    p.set_defaults(func=cmd_schur)

    p = sub.add_parser(
        "basic-set",
        parents=[common],
        help="canonical basic set of an ingested matrix, or a catalogued set",
    )
    p.add_argument("--input", default=None, help="decomposition matrix JSON")
    p.add_argument("--type", default=None)
    p.add_argument("--e", type=int, default=None)
    p.add_argument("--weights", default=None)
    p.add_argument("--n", type=int, default=None)
    p.add_argument("--m", type=int, default=None)
    p.add_argument("--s", type=int, default=None)
    p.set_defaults(func=cmd_basic_set)

    p = sub.add_parser(
        "embed", parents=[common], help="bipartition -> partition of 2m+s"
    )
    p.add_argument("--bipartition", required=True)
    p.add_argument("--s", type=int, required=True)
    p.set_defaults(func=cmd_embed)

    p = sub.add_parser(
        "extract", parents=[common], help="partition -> bipartition"
    )
    p.add_argument("--partition", required=True)
    p.add_argument("--s", type=int, required=True)
    p.set_defaults(func=cmd_extract)

    p = sub.add_parser(
        "afun",
        parents=[common],
        help="a-invariant of a bipartition label (unitary weights)",
    )
    p.add_argument("--bipartition", required=True)
    p.add_argument("--s", type=int, required=True)
    p.set_defaults(func=cmd_afun)

    p = sub.add_parser(
        "factor",
        parents=[common],
        help="check full = root * prime and compare basic sets",
    )
    p.add_argument("--full", required=True)
    p.add_argument("--root", required=True)
    p.add_argument("--dprime", required=True)
    p.set_defaults(func=cmd_factor)

    p = sub.add_parser(
        "verify-triangular",
        parents=[common],
        help="unitriangularity report over partition labels",
    )
    p.add_argument("--input", required=True)
    p.set_defaults(func=cmd_verify_triangular)

    p = sub.add_parser(
        "verify-conjecture-shape",
        parents=[common],
        help="block-triangular shape report by class and d-invariant",
    )
    p.add_argument("--input", required=True)
    p.set_defaults(func=cmd_verify_conjecture_shape)

    p = sub.add_parser(
        "sweep-genericity",
        parents=[common],
        help="exhaustive A = A0 and e'/e sweep over a parameter box",
    )
    p.add_argument("--ell-max", type=int, default=50)
    p.add_argument("--q-max", type=int, default=50)
    p.set_defaults(func=cmd_sweep_genericity)

    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except NotCatalogued as exc:
        print(f"not catalogued: {exc}", file=sys.stderr)
        return EXIT_NOT_CATALOGUED
    except _MATH_FAILURES as exc:
        print(f"failure: {exc}", file=sys.stderr)
        return EXIT_MATH_FAILURE
    except (ValueError, KeyError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_PRECONDITION


if __name__ == "__main__":
    raise SystemExit(main())
