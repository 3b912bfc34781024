"""Command-line entry point: ``gqcages build | verify | table``."""

from __future__ import annotations

import argparse
import sys
from dataclasses import dataclass
from pathlib import Path

from .cage import build_cage, cage_order, moore_bound
from .excise_even import construct_even, even_order
from .excise_odd import construct_odd, odd_order, stated_odd_order
from .exceptions import GQCagesError
from .formats import FORMATS, GRAPH_FORMATS, decode, encode
from .gf import make_field
from .graph import Graph
from .verify import Certificate, certify

__all__ = ["RunConfig", "main", "build_variant", "table_rows"]

VARIANTS = ("cage", "girth7-even", "girth7-odd-g1", "girth7-odd-g2")

EXIT_OK, EXIT_INVALID, EXIT_CERT = 0, 2, 3


@dataclass(frozen=True)
class RunConfig:
    command: str
    q: int | None = None
    variant: str = "cage"
    output: str | None = None
    format: str = "graph6"
    # no randomness exists anywhere; kept so scripted invocations stay stable
    deterministic: bool = True


def validate_variant(q: int, variant: str) -> None:
    """Raise ``ValueError`` (or NotPrimePowerError) if ``q`` does not suit ``variant``."""
    if variant not in VARIANTS:
        raise ValueError(f"unknown variant {variant!r}")
    field = make_field(q)
    if variant == "girth7-even" and (field.p != 2 or q < 4):
        raise ValueError(f"girth7-even needs q >= 4 a power of two, got {q}")
    if variant.startswith("girth7-odd") and (field.p == 2 or q < 5):
        raise ValueError(f"{variant} needs an odd prime power q >= 5, got {q}")


def build_variant(q: int, variant: str) -> tuple[Graph, Certificate]:
    """Construct the requested graph and certify it against its claimed parameters."""
    validate_variant(q, variant)
    graph_id = f"{variant}-q{q}"
    notes: dict[str, object] = {"q": q, "variant": variant}
    if variant == "cage":
        g = build_cage(q)
        expected = {"degree": q + 1, "girth": 8, "order": cage_order(q)}
    elif variant == "girth7-even":
        g = construct_even(q, verify=False).graph
        expected = {"degree": q + 1, "girth": 7, "order": even_order(q)}
    else:
        c = construct_odd(q, verify=False)
        if variant == "girth7-odd-g1":
            g = c.graph1
            # s_0, s_1, s_2 sit at degree q-1 until they are spliced in
            expected = {"girth": 7, "order": odd_order(q)}
            notes["deficient_vertices"] = [c.minus_h.origin.index(s) for s in c.frame.ss[:3]]
        else:
            g = c.graph2
            expected = {"degree": q + 1, "girth": 7, "order": odd_order(q)}
        notes["stated_order"] = stated_odd_order(q)
        notes["order_discrepancy"] = odd_order(q) - stated_odd_order(q)
        notes["order_note"] = f"computed order {odd_order(q)} is one less than the stated {stated_odd_order(q)}"
    return g, certify(g, expected, graph_id=graph_id, annotations=notes)


def table_rows(qs) -> list[str]:
    """TSV lines: header, then q, cage order, girth-7 order, n0(q+1, 7), excess."""
    lines = ["q\tcage_order\tgirth7_order\tmoore_bound\texcess"]
    for q in qs:
        try:
            field = make_field(q)
            if field.p == 2:
                validate_variant(q, "girth7-even")
                order = even_order(q)
            else:
                validate_variant(q, "girth7-odd-g2")
                order = odd_order(q)
        except (ValueError, GQCagesError) as exc:
            lines.append(f"{q}\terror: {exc}")
            continue
        n0 = moore_bound(q + 1, 7)
        lines.append(f"{q}\t{cage_order(q)}\t{order}\t{n0}\t{order - n0}")
    return lines


def _write(path: Path, data: bytes) -> None:
    path.write_bytes(data)


def cmd_build(cfg: RunConfig) -> int:
    try:
        g, cert = build_variant(cfg.q, cfg.variant)
    except (ValueError, GQCagesError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INVALID
    cert_bytes = cert.to_json().encode("utf-8")
    main = cert_bytes if cfg.format == "cert-json" else encode(g, cfg.format)
    if cfg.output in (None, "-"):
        sys.stdout.buffer.write(main)
    else:
        out = Path(cfg.output)
        _write(out, main)
        if cfg.format != "labels-json":
            _write(out.with_name(out.name + ".labels.json"), encode(g, "labels-json"))
        if cfg.format != "cert-json":
            _write(out.with_name(out.name + ".cert.json"), cert_bytes)
    status = "passed" if cert.passed else "FAILED"
    print(f"{cert.graph_id}: {g.n} vertices, girth {cert.to_dict()['girth']}, certification {status}", file=sys.stderr)
    return EXIT_OK if cert.passed else EXIT_CERT


def cmd_verify(args) -> int:
    try:
        g = decode(Path(args.path).read_bytes(), args.format)
    except (OSError, ValueError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INVALID
    expected = {k: getattr(args, k) for k in ("degree", "girth", "order") if getattr(args, k) is not None}
    cert = certify(g, expected, graph_id=Path(args.path).name)
    sys.stdout.write(cert.to_json())
    return EXIT_OK if cert.passed else EXIT_CERT


def cmd_table(qs) -> int:
    lines = table_rows(qs)
    sys.stdout.write("\n".join(lines) + "\n")
    if qs and all("\terror:" in line for line in lines[1:]):
        return EXIT_INVALID
    return EXIT_OK


def _parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="gqcages", description="Cages from generalized quadrangles and girth-7 excisions.")
    sub = p.add_subparsers(dest="command", required=True)
    b = sub.add_parser("build", help="construct a graph, write it with labels and certificate")
    b.add_argument("--q", type=int, required=True)
    b.add_argument("--variant", choices=VARIANTS, default="cage")
    b.add_argument("--format", choices=FORMATS, default="graph6")
    b.add_argument("--output", "-o", default=None, help="output file; sidecars PATH.labels.json and PATH.cert.json")
    v = sub.add_parser("verify", help="certify a graph file")
    v.add_argument("path")
    v.add_argument("--format", choices=GRAPH_FORMATS, default="graph6")
    v.add_argument("--degree", type=int)
    v.add_argument("--girth", type=int)
    v.add_argument("--order", type=int)
    t = sub.add_parser("table", help="orders, Moore bounds and excess per q")
    t.add_argument("q", type=int, nargs="*")
    return p


def main(argv=None) -> int:
    args = _parser().parse_args(argv)
    if args.command == "build":
        return cmd_build(RunConfig("build", args.q, args.variant, args.output, args.format))
    if args.command == "verify":
        return cmd_verify(args)
    return cmd_table(args.q)


if __name__ == "__main__":  # pragma: no cover
    sys.exit(main())
