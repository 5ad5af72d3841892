"""Command-line interface: gen / run / oracle / table."""

from __future__ import annotations

import argparse
import json
import sys
from pathlib import Path

from .graph import (gen_even_cycle, gen_gnp, gen_random_bipartite,
                    load_edge_list, serialize_edge_list)
from .harness import ExperimentConfig, run_experiment, summary_table
from .oracles import brute_force


def _cmd_gen(args) -> int:
    if args.kind == "gnp":
        g = gen_gnp(args.n, args.p, args.seed, directed=args.directed)
    elif args.kind == "bipartite":
        n1 = args.n // 2
        g = gen_random_bipartite(n1, args.n - n1, args.p, args.seed)
    elif args.kind == "cycle":
        g = gen_even_cycle(args.n)
    else:
        print(f"unknown kind {args.kind!r}", file=sys.stderr)
        return 2
    text = serialize_edge_list(g)
    if args.output:
        Path(args.output).write_text(text, encoding="utf-8")
    else:
        sys.stdout.write(text)
    return 0


def _cmd_run(args) -> int:
    doc = json.loads(Path(args.config).read_text(encoding="utf-8"))
    for override in args.set or []:
        key, _, value = override.partition("=")
        section = doc
        parts = key.split(".")
        for part in parts[:-1]:
            section = section.setdefault(part, {})
        try:
            section[parts[-1]] = json.loads(value)
        except json.JSONDecodeError:
            section[parts[-1]] = value
    cfg = ExperimentConfig.from_dict(doc)
    record = run_experiment(cfg)
    out = Path(args.output_prefix)
    out.parent.mkdir(parents=True, exist_ok=True)
    Path(f"{out}.csv").write_text(record.to_csv(), encoding="utf-8")
    Path(f"{out}.json").write_text(
        json.dumps(record.summary, indent=2, sort_keys=True) + "\n",
        encoding="utf-8")
    print(f"{record.summary['runs']} runs, "
          f"{record.summary['violations']} guarantee violations")
    return 1 if record.summary["violations"] else 0


def _cmd_oracle(args) -> int:
    g = load_edge_list(Path(args.graph).read_text(encoding="utf-8"))
    result = brute_force(g, cap=args.cap)
    print(f"opt_value={result.opt_value}")
    print("vertex,side")
    for v in sorted(result.witness):
        print(f"{v},{result.witness[v]}")
    return 0


def _cmd_table(args) -> int:
    summaries = []
    for path in args.summaries:
        summaries.append(json.loads(Path(path).read_text(encoding="utf-8")))
    sys.stdout.write(summary_table(summaries))
    return 0


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="discut",
        description="Distributed Max-Cut/Max-Dicut simulation toolkit")
    sub = parser.add_subparsers(dest="command", required=True)

    p_gen = sub.add_parser("gen", help="emit a graph in edge-list format")
    p_gen.add_argument("kind", choices=["gnp", "bipartite", "cycle"])
    p_gen.add_argument("-n", type=int, required=True)
    p_gen.add_argument("-p", type=float, default=0.5)
    p_gen.add_argument("--seed", type=int, default=0)
    p_gen.add_argument("--directed", action="store_true")
    p_gen.add_argument("-o", "--output")
    p_gen.set_defaults(func=_cmd_gen)

    p_run = sub.add_parser("run", help="run an experiment from a JSON config")
    p_run.add_argument("config")
    p_run.add_argument("-o", "--output-prefix", default="experiment")
    p_run.add_argument("--set", action="append", metavar="KEY=VALUE",
                       help="override a config field, e.g. params.epsilon=0.2")
    p_run.set_defaults(func=_cmd_run)

    p_oracle = sub.add_parser("oracle", help="exact solve a graph file")
    p_oracle.add_argument("graph")
    p_oracle.add_argument("--cap", type=int, default=24)
    p_oracle.set_defaults(func=_cmd_oracle)

    p_table = sub.add_parser("table", help="aggregate summary JSON files")
    p_table.add_argument("summaries", nargs="+")
    p_table.set_defaults(func=_cmd_table)

    return parser


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    return args.func(args)


if __name__ == "__main__":
    sys.exit(main())
