"""Command-line front end: ``freeknot invariant|delta|moves|random|survey|oracle``."""

from __future__ import annotations

import argparse
import itertools
import json
import sys
from dataclasses import dataclass
from typing import List, Optional, Sequence

from freeknot.diagram import (
    ChordDiagram,
    GaussWordError,
    enumerate_knots,
    parse_gauss_words,
    random_knot,
    serialize,
)
from freeknot.invariant import delta_n, gamma_graph, i_n
from freeknot.moves import (
    ConfigurationError,
    MoveError,
    MoveSite,
    SymmetricConfiguration,
    apply_elementary_cobordism,
    apply_r1,
    apply_r2,
    apply_r3,
    find_r1_sites,
    find_r2_sites,
    find_r3_sites,
    find_symmetric_configurations,
    shrink,
    verify_symmetric_configuration,
)
from freeknot.oracle import nullity_components, trace_components

EXIT_NONZERO = 0
EXIT_ZERO = 1
EXIT_INPUT = 2

FORMATS = ("text", "json", "dot")
DEFAULT_FORMAT = {"invariant": "json", "moves": "json"}


class InputError(Exception):
    pass


@dataclass
class RunConfig:
    command: str
    word: Optional[str] = None
    file: Optional[str] = None
    n: int = 3
    seed: int = 0
    chords: int = 0
    max_segments: int = 2
    format: Optional[str] = None
    budget: int = 1000

    def __post_init__(self) -> None:
        if self.format is None:
            self.format = DEFAULT_FORMAT.get(self.command, "text")
        if self.n < 1:
            raise InputError("--n must be at least 1")
        if self.chords < 0:
            raise InputError("--chords must be non-negative")
        if not 0 <= self.seed < 2**64:
            raise InputError("--seed must fit in 64 bits")
        if self.format not in FORMATS:
            raise InputError(f"--format must be one of {', '.join(FORMATS)}")
        if self.max_segments < 1:
            raise InputError("--max-segments must be at least 1")
        if self.budget < 0:
            raise InputError("--budget must be non-negative")

    def diagram(self) -> ChordDiagram:
        text = self.word
        if self.file is not None:
            try:
                with open(self.file, encoding="utf-8") as fh:
                    lines = [l.strip() for l in fh if l.strip() and not l.lstrip().startswith("#")]
            except OSError as exc:
                raise InputError(str(exc)) from exc
            if not lines:
                raise InputError(f"{self.file} holds no Gauss word")
            text = lines[0]
        if text is None:
            raise InputError("no Gauss word given")
        try:
            return parse_gauss_words(text)
        except GaussWordError as exc:
            raise InputError(str(exc)) from exc

    def knot(self) -> ChordDiagram:
        d = self.diagram()
        if d.num_circles != 1:
            raise InputError(f"expected a one-circle diagram, got {d.num_circles} circles")
        return d


def _dot_terms(diagrams: Sequence[ChordDiagram]) -> str:
    blocks = []
    for i, d in enumerate(diagrams):
        labels = [" ".join(c) if c else "-" for c in d.circles]
        blocks.append(f"// {serialize(d)}\n" + gamma_graph(d).to_dot(f"Gamma{i}", labels))
    return "\n".join(blocks)


def cmd_invariant(cfg: RunConfig, out) -> int:
    d = cfg.knot()
    if cfg.format == "dot":
        print(_dot_terms(delta_n(d, cfg.n).diagrams()), file=out)
        value = i_n(d, cfg.n)
    else:
        value = i_n(d, cfg.n)
        if cfg.format == "json":
            print(json.dumps(value.to_json()), file=out)
        else:
            print(f"I^({cfg.n}) = {value}", file=out)
    return EXIT_NONZERO if value else EXIT_ZERO


def cmd_delta(cfg: RunConfig, out) -> int:
    x = delta_n(cfg.diagram(), cfg.n)
    if cfg.format == "json":
        print(json.dumps(x.to_json()), file=out)
    elif cfg.format == "dot":
        print(_dot_terms(x.diagrams()), file=out)
    else:
        print(json.dumps([serialize(d) for d in x.diagrams()]), file=out)
    return 0


def _list_moves(d: ChordDiagram, max_segments: int) -> dict:
    listing = {
        "R1": [s.to_json() for s in find_r1_sites(d)],
        "R2": [s.to_json() for s in find_r2_sites(d)],
        "R3": [s.to_json() for s in find_r3_sites(d)],
    }
    if d.num_circles == 1:
        confs = find_symmetric_configurations(d, max_segments)
        listing["cobordism"] = [c.to_json() for c in confs]
    return listing


def cmd_moves(cfg: RunConfig, action: str, kind: Optional[str], index: int, site: Optional[str], out) -> int:
    d = cfg.diagram()
    if action == "list":
        listing = _list_moves(d, cfg.max_segments)
        if cfg.format == "json":
            print(json.dumps(listing), file=out)
        else:
            for k, entries in listing.items():
                for i, e in enumerate(entries):
                    print(f"{k}[{i}] {json.dumps(e)}", file=out)
        return 0
    if action == "shrink":
        if d.num_circles != 1:
            raise InputError("shrink works on one-circle diagrams")
        print(serialize(shrink(d, cfg.budget, cfg.max_segments)), file=out)
        return 0

    kind = (kind or "").lower()
    try:
        if kind == "cobordism":
            if site is not None:
                segments = SymmetricConfiguration.segments_from_json(json.loads(site))
                conf = verify_symmetric_configuration(d, segments)
            else:
                confs = find_symmetric_configurations(d, cfg.max_segments)
                conf = confs[index]
            result = apply_elementary_cobordism(d, conf)
        else:
            finder, apply = {
                "r1": (find_r1_sites, apply_r1),
                "r2": (find_r2_sites, apply_r2),
                "r3": (find_r3_sites, apply_r3),
            }[kind]
            chosen = MoveSite.from_json(json.loads(site)) if site is not None else finder(d)[index]
            result = apply(d, chosen)
    except (IndexError, KeyError) as exc:
        raise InputError(f"no such {kind or 'move'} site") from exc
    except (MoveError, ConfigurationError, json.JSONDecodeError, TypeError, ValueError) as exc:
        raise InputError(str(exc)) from exc
    print(serialize(result), file=out)
    return 0


def cmd_random(cfg: RunConfig, out) -> int:
    d = random_knot(cfg.chords, cfg.seed)
    if cfg.format == "json":
        print(json.dumps({"diagram": serialize(d)}), file=out)
    else:
        print(serialize(d), file=out)
    return 0


def survey(max_chords: int, n: int) -> List[dict]:
    """Every one-circle diagram up to ``max_chords`` with some nonzero I^(k), k <= n."""
    rows = []
    for m in range(max_chords + 1):
        for d in enumerate_knots(m):
            values = {k: i_n(d, k) for k in range(1, n + 1)}
            if any(values.values()):
                rows.append(
                    {
                        "diagram": serialize(d),
                        "chords": m,
                        "invariants": {str(k): v.to_json()["support"] for k, v in values.items()},
                    }
                )
    return rows


def cmd_survey(cfg: RunConfig, out) -> int:
    rows = survey(cfg.chords, cfg.n)
    if cfg.format == "json":
        print(json.dumps(rows), file=out)
    else:
        for row in rows:
            cells = "  ".join(f"I{k}={v}" for k, v in row["invariants"].items())
            print(f"{row['diagram']}\t{cells}", file=out)
    return 0


def cmd_oracle(cfg: RunConfig, subset: Optional[str], out) -> int:
    d = cfg.knot()
    if subset is not None:
        subsets = [tuple(subset.split())]
    else:
        labels = d.labels
        subsets = [s for r in range(len(labels) + 1) for s in itertools.combinations(labels, r)]
    rows = []
    try:
        for s in subsets:
            rows.append({"subset": list(s), "trace": trace_components(d, s), "nullity": nullity_components(d, s)})
    except KeyError as exc:
        raise InputError(str(exc)) from exc
    if cfg.format == "json":
        print(json.dumps(rows), file=out)
    else:
        for r in rows:
            flag = "" if r["trace"] == r["nullity"] else "  MISMATCH"
            print(f"{{{' '.join(r['subset'])}}}\ttrace={r['trace']}\tnullity={r['nullity']}{flag}", file=out)
    return 0 if all(r["trace"] == r["nullity"] for r in rows) else 1


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--file", help="read the Gauss word from the first non-comment line of a file")
    common.add_argument("--n", type=int, default=3, help="number of smoothing rounds (default 3)")
    common.add_argument("--seed", type=int, default=0)
    common.add_argument("--chords", type=int, default=0, help="chord count or bound")
    common.add_argument("--max-segments", type=int, default=2, dest="max_segments")
    common.add_argument("--format", choices=FORMATS, help="text, json or dot (default depends on the command)")
    common.add_argument("--budget", type=int, default=1000)

    parser = argparse.ArgumentParser(prog="freeknot", description=__doc__)
    sub = parser.add_subparsers(dest="command", required=True)

    for name, help_ in (
        ("invariant", "print the support of I^(n); exit 0 if nonzero, 1 if zero"),
        ("delta", "print the n-th iterate of the smoothing map"),
    ):
        p = sub.add_parser(name, parents=[common], help=help_)
        p.add_argument("word", nargs="?")

    p = sub.add_parser("moves", parents=[common], help="list or apply moves")
    p.add_argument("action", choices=("list", "apply", "shrink"))
    p.add_argument("rest", nargs="*", help="[kind] word; kind is r1, r2, r3 or cobordism")
    p.add_argument("--index", type=int, default=0, help="which listed site to use")
    p.add_argument("--site", help="site or configuration as JSON")

    sub.add_parser("random", parents=[common], help="random one-circle diagram")
    sub.add_parser("survey", parents=[common], help="nonzero invariants up to --chords")

    p = sub.add_parser("oracle", parents=[common], help="compare the two component counts")
    p.add_argument("word", nargs="?")
    p.add_argument("--subset", help="space-separated chord labels; default all subsets")
    return parser


def main(argv: Optional[Sequence[str]] = None, out=None) -> int:
    out = out or sys.stdout
    args = build_parser().parse_args(argv)
    try:
        word = getattr(args, "word", None)
        kind = None
        if args.command == "moves":
            rest = list(args.rest)
            if args.action == "apply":
                if not rest:
                    raise InputError("moves apply needs a kind")
                kind = rest.pop(0)
                if kind.lower() not in ("r1", "r2", "r3", "cobordism"):
                    raise InputError(f"unknown move kind {kind!r}")
            if len(rest) > 1:
                raise InputError("quote the Gauss word as one argument")
            word = rest[0] if rest else None
        cfg = RunConfig(
            command=args.command,
            word=word,
            file=args.file,
            n=args.n,
            seed=args.seed,
            chords=args.chords,
            max_segments=args.max_segments,
            format=args.format,
            budget=args.budget,
        )
        if args.command == "invariant":
            return cmd_invariant(cfg, out)
        if args.command == "delta":
            return cmd_delta(cfg, out)
        if args.command == "moves":
            return cmd_moves(cfg, args.action, kind, args.index, args.site, out)
        if args.command == "random":
            return cmd_random(cfg, out)
        if args.command == "survey":
            return cmd_survey(cfg, out)
        return cmd_oracle(cfg, args.subset, out)
    except InputError as exc:
        print(f"freeknot: error: {exc}", file=sys.stderr)
        return EXIT_INPUT


if __name__ == "__main__":
    sys.exit(main())
