"""Command-line front end.

    monochar <command> --input FILE [--format json|csv|text|dot] [--jobs N]

Output goes to stdout, diagnostics to stderr.  Exit status 1 means the input
could not be parsed, 2 means an internal contract was violated.
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import statistics
import sys
from dataclasses import dataclass

from .enumeration import ParseError, contains, read_generators
from .errors import ContractViolation, MonoidError
from .green import to_dot
from .groupchar import conjugacy_classes
from .pipeline import STAGES, StageError, analyze
from .radical import trace_form_radical
from .xform import Transformation

COMMANDS = ("enumerate", "membership", "green", "schutz", "bichar", "chartable",
            "cartan", "radical", "bench")
FORMATS = ("json", "csv", "text", "dot")
_UNTIL = {
    "enumerate": "enumerate",
    "green": "green",
    "schutz": "schutz",
    "bichar": "bichar",
    "radical": "radical",
    "chartable": "cartan",
    "cartan": "cartan",
}


@dataclass(frozen=True)
class RunConfig:
    command: str
    input: str
    format: str = "text"
    jobs: int = 1
    oracle_max: int = 512
    repeat: int = 3
    element: str | None = None

    def __post_init__(self):
        if self.command not in COMMANDS:
            raise ValueError(f"unknown command {self.command!r}")
        if self.format not in FORMATS:
            raise ValueError(f"unknown format {self.format!r}")
        if self.format == "dot" and self.command != "green":
            raise ValueError("--format dot is only available for 'green'")
        if self.jobs < 1 or self.repeat < 1:
            raise ValueError("--jobs and --repeat must be positive")
        if self.command == "membership" and self.element is None:
            raise ValueError("membership needs --element")


def _label(images) -> str:
    return " ".join(map(str, images))


def _dumps(obj) -> str:
    return json.dumps(obj) + "\n"


def _csv(rows) -> str:
    buf = io.StringIO()
    writer = csv.writer(buf, lineterminator="\n")
    writer.writerows(rows)
    return buf.getvalue()


# -- per-command renderers ---------------------------------------------------

def _enumerate(result, cfg):
    table = result.table
    lengths: dict[int, int] = {}
    for w in table.words:
        lengths[len(w)] = lengths.get(len(w), 0) + 1
    data = {
        "order": len(table),
        "degree": table.degree,
        "generators": len(table.generators),
        "max_word_length": max(lengths),
        "word_lengths": {str(k): lengths[k] for k in sorted(lengths)},
    }
    if cfg.format == "json":
        return _dumps(data)
    if cfg.format == "csv":
        rows = [["word_length", "count"]] + [[k, lengths[k]] for k in sorted(lengths)]
        return _csv(rows)
    return (f"order {data['order']}\ndegree {data['degree']}\n"
            f"generators {data['generators']}\nmax word length {data['max_word_length']}\n")


def _green(result, cfg):
    table, st = result.table, result.structure
    if cfg.format == "dot":
        return to_dot(table, st)
    rows = [{
        "jclass": jc.id,
        "rank": jc.rank,
        "size": jc.size,
        "r_classes": len(jc.r_ids),
        "l_classes": len(jc.l_ids),
        "h_size": jc.h_size,
        "regular": jc.regular,
        "idempotents": len(jc.idempotents),
    } for jc in st.jclasses]
    if cfg.format == "json":
        return _dumps({"order": len(table), "idempotents": len(st.idempotents),
                       "jclasses": rows})
    if cfg.format == "csv":
        keys = list(rows[0])
        return _csv([keys] + [[r[k] for k in keys] for r in rows])
    lines = [f"order {len(table)}, {len(st.jclasses)} J-classes, "
             f"{len(st.idempotents)} idempotents"]
    for r in rows:
        lines.append(f"J{r['jclass']}: rank {r['rank']}, {r['r_classes']}x{r['l_classes']} "
                     f"grid, H size {r['h_size']}, size {r['size']}, "
                     f"{'regular' if r['regular'] else 'non-regular'}")
    return "\n".join(lines) + "\n"


def _schutz(result, cfg):
    st, sd = result.structure, result.sdata
    rows = []
    for jc in st.jclasses:
        G = sd.lgroup(jc.l_ids[0])
        rows.append({"jclass": jc.id, "rank": jc.rank, "regular": jc.regular,
                     "group_order": G.order, "classes": len(conjugacy_classes(G))})
    if cfg.format == "json":
        return _dumps({"jclasses": rows})
    if cfg.format == "csv":
        keys = list(rows[0])
        return _csv([keys] + [[r[k] for k in keys] for r in rows])
    return "".join(f"J{r['jclass']}: rank {r['rank']}, group order {r['group_order']}, "
                   f"{r['classes']} classes{'' if r['regular'] else ' (non-regular)'}\n"
                   for r in rows)


def _bichar(result, cfg):
    B = result.bichar
    labels = [_label(x) for x in B.labels]
    matrix = [list(r) for r in B.entries]
    if cfg.format == "json":
        return _dumps({"c_m": [list(x) for x in B.labels], "matrix": matrix})
    if cfg.format == "csv":
        return _csv([[""] + labels] + [[lab] + row for lab, row in zip(labels, matrix)])
    width = max(len(x) for x in labels)
    return "".join(f"{lab:>{width}} | " + " ".join(f"{v:>4}" for v in row) + "\n"
                   for lab, row in zip(labels, matrix))


def _radical(result, cfg):
    table = result.table
    rows = []
    for j, rad in sorted(result.radicals.items()):
        rows.append({"jclass": j, "lclass": rad.l, "size": len(rad.basis_elements),
                     "dim": rad.dimension})
    data = {"lclasses": rows}
    if len(table) <= cfg.oracle_max:
        data["trace_form_radical"] = trace_form_radical(table, cfg.oracle_max)
    if cfg.format == "json":
        return _dumps(data)
    if cfg.format == "csv":
        keys = ["jclass", "lclass", "size", "dim"]
        return _csv([keys] + [[r[k] for k in keys] for r in rows])
    out = "".join(f"J{r['jclass']} L{r['lclass']}: |L| = {r['size']}, dim N = {r['dim']}\n"
                  for r in rows)
    if "trace_form_radical" in data:
        out += f"dim rad kM = {data['trace_form_radical']}\n"
    return out


def full_json(result) -> dict:
    X, C = result.chartable, result.cartan
    return {
        "irreducibles": [list(lab) for lab in X.labels],
        "c_m": [list(c) for c in X.columns],
        "table": [[v.to_json() for v in row] for row in X.values],
        "cartan": [list(r) for r in C.entries],
        "dims": list(result.dims),
    }


def _chartable(result, cfg):
    X, C = result.chartable, result.cartan
    if cfg.format == "json":
        return _dumps(full_json(result))
    labels = [f"J{j}.{i}" for j, i in X.labels]
    cols = [_label(c) for c in X.columns]
    if cfg.command == "cartan":
        body = [[str(v) for v in row] for row in C.entries]
        header = [""] + labels
    else:
        body = [[str(v) for v in row] for row in X.values]
        header = [""] + cols
    if cfg.format == "csv":
        return _csv([header] + [[lab] + row for lab, row in zip(labels, body)])
    width = max(len(x) for x in labels)
    return "".join(f"{lab:>{width}} | " + "  ".join(row) + "\n"
                   for lab, row in zip(labels, body))


def _bench(gens, cfg):
    runs: dict[str, list[float]] = {s: [] for s in STAGES}
    sizes = {}
    for _ in range(cfg.repeat):
        result = analyze(gens, "cartan", cfg.jobs)
        for s in STAGES:
            runs[s].append(result.timings[s])
        sizes = result.sizes
    data = {
        "order": sizes.get("enumerate"),
        "repeat": cfg.repeat,
        "jobs": cfg.jobs,
        "stages": [{"stage": s, "median_s": statistics.median(runs[s]),
                    "runs_s": runs[s], "size": sizes.get(s)} for s in STAGES],
        "total_median_s": statistics.median([sum(runs[s][k] for s in STAGES)
                                             for k in range(cfg.repeat)]),
    }
    if cfg.format == "json":
        return _dumps(data)
    if cfg.format == "csv":
        return _csv([["stage", "median_s", "size"]]
                    + [[r["stage"], f"{r['median_s']:.6f}", r["size"]] for r in data["stages"]])
    return "".join(f"{r['stage']:>10}  {r['median_s']:10.4f} s  size {r['size']}\n"
                   for r in data["stages"]) + f"{'total':>10}  {data['total_median_s']:10.4f} s\n"


RENDER = {
    "enumerate": _enumerate,
    "green": _green,
    "schutz": _schutz,
    "bichar": _bichar,
    "radical": _radical,
    "chartable": _chartable,
    "cartan": _chartable,
}


def run(cfg: RunConfig) -> tuple[int, str]:
    """Execute one command; returns ``(exit status, stdout text)``."""
    try:
        gens = read_generators(cfg.input)
    except ParseError as exc:
        print(f"parse error: {exc}", file=sys.stderr)
        return 1, ""
    except OSError as exc:
        print(f"cannot read {cfg.input}: {exc}", file=sys.stderr)
        return 1, ""
    try:
        if cfg.command == "membership":
            t = Transformation.parse(cfg.element)
            found = contains(gens, t)
            if cfg.format == "json":
                return 0, _dumps({"element": list(t.images), "member": found})
            return 0, ("true" if found else "false") + "\n"
        if cfg.command == "bench":
            return 0, _bench(gens, cfg)
        result = analyze(gens, _UNTIL[cfg.command], cfg.jobs)
        return 0, RENDER[cfg.command](result, cfg)
    except StageError as exc:
        print(f"contract violation in stage {exc.stage}: {exc.error}", file=sys.stderr)
        return 2, ""
    except ContractViolation as exc:
        print(f"contract violation: {exc}", file=sys.stderr)
        return 2, ""
    except MonoidError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1, ""


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--input", required=True, help="generator file")
    common.add_argument("--format", default="text", choices=FORMATS)
    common.add_argument("--jobs", type=int, default=1)
    common.add_argument("--oracle-max", type=int, default=512, dest="oracle_max")
    common.add_argument("--repeat", type=int, default=3)
    parser = argparse.ArgumentParser(prog="monochar", description=__doc__.splitlines()[0])
    sub = parser.add_subparsers(dest="command", required=True)
    for name in COMMANDS:
        p = sub.add_parser(name, parents=[common])
        if name == "membership":
            p.add_argument("--element", required=True, help='e.g. "1 1 3"')
    return parser


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    try:
        cfg = RunConfig(command=args.command, input=args.input, format=args.format,
                        jobs=args.jobs, oracle_max=args.oracle_max, repeat=args.repeat,
                        element=getattr(args, "element", None))
    except ValueError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1
    status, text = run(cfg)
    sys.stdout.write(text)
    return status


if __name__ == "__main__":
    sys.exit(main())
