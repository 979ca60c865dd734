"""Command-line front end.

Exit codes: 0 for YES or success, 1 for NO, 2 for usage or input errors.
Every randomized command prints the seed it used; rerunning with ``--seed``
reproduces the output byte for byte.  Wall-clock timings are only printed
with ``--timing`` (and by ``bench``), since they differ from run to run.
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import secrets
import sys
import time
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from pathlib import Path
from typing import Any, Callable, Optional, Sequence

from .applications import EngineUnsupported, knapsack_graph, knapsack_max_profit, solve_covering, solve_hitting
from .corpus import random_cnf_clauses, random_covering, random_hitting, random_knapsack, random_packing
from .graph import GraphError, parse_edge_list
from .hardness import CnfError, CnfFormula, cnf_to_packing_family, family_documents, parse_dimacs, verify_family
from .matching import Engine, EngineConfig, IsolationBase, exact_matching_decide, exact_matching_max_cost
from .model import (CoveringInstance, CoveringPredicate, InstanceError, KnapsackInstance,
                    PackingInstance, from_document, load_document, parse_hitting, serialize_hitting,
                    serialize_instance)
from . import oracle
from .reduction import reduce_packing_to_matching
from .solver import binary_search_bins, solve_packing_detailed

EXIT_YES, EXIT_NO, EXIT_ERROR = 0, 1, 2


class CliError(Exception):
    """A user-facing failure; reported on stderr with exit code 2."""


@dataclass
class Result:
    """Outcome of one command on one input."""
    answer: Optional[bool]          # None: informational command
    text: str                       # plain-format payload
    data: dict[str, Any] = field(default_factory=dict)
    error: Optional[str] = None

    @property
    def code(self) -> int:
        if self.error is not None:
            return EXIT_ERROR
        return EXIT_NO if self.answer is False else EXIT_YES


def _yes_no(answer: bool) -> str:
    return "YES" if answer else "NO"


# ---------------------------------------------------------------------------
# input

def _read(path: str) -> str:
    try:
        return Path(path).read_text()
    except OSError as exc:
        raise CliError(f"{path}: cannot read ({exc.strerror})") from None


def _load(path: str, *, validate: bool = True, dedupe: bool = False, pred: Optional[str] = None):
    """Instance document at ``path``; unpromised documents are solved with every item small."""
    doc = load_document(_read(path))
    if pred is not None:
        doc["covering"] = pred
    inst = from_document(doc, validate_promise=validate, dedupe=dedupe)
    if doc.get("promise") == "none" and isinstance(inst, PackingInstance):
        inst = PackingInstance(inst.items, frozenset(range(inst.n)), inst.bins, inst.dimension)
    return inst


def _expect(inst, kind, path: str, what: str):
    if not isinstance(inst, kind):
        raise CliError(f"{path}: not a {what} document")
    return inst


# ---------------------------------------------------------------------------
# per-file tasks (module level so worker processes can pickle them)

def _config(opts: dict) -> EngineConfig:
    return EngineConfig(repeats=opts["repeats"], seed=opts["seed"], engine=Engine(opts["engine"]),
                        base=IsolationBase(opts["isolation_base"]))


def _stats(cfg: EngineConfig, nodes: int) -> dict:
    return {"engine": cfg.engine.value, "seed": cfg.seed, "repeats": cfg.repeats_for(nodes)}


def task_solve_pack(path: str, opts: dict) -> Result:
    inst = _expect(_load(path, validate=opts["validate"], dedupe=opts["dedupe"]),
                   PackingInstance, path, "packing")
    cfg = _config(opts)
    out = solve_packing_detailed(inst, cfg)
    data = {"answer": _yes_no(out.answer), **_stats(cfg, out.nodes),
            "nodes": out.nodes, "edges": out.edges, "target": out.target, "trivial": out.trivial}
    return Result(out.answer, _yes_no(out.answer), data)


def task_min_bins(path: str, opts: dict) -> Result:
    inst = _expect(_load(path, validate=opts["validate"], dedupe=opts["dedupe"]),
                   PackingInstance, path, "packing")
    cfg = _config(opts)
    bins = binary_search_bins(inst, cfg)
    data = {"answer": _yes_no(bins is not None), "bins": bins, "engine": cfg.engine.value, "seed": cfg.seed}
    return Result(bins is not None, "NO" if bins is None else str(bins), data)


def task_solve_knapsack(path: str, opts: dict) -> Result:
    inst = _expect(_load(path, validate=opts["validate"], dedupe=opts["dedupe"]),
                   KnapsackInstance, path, "knapsack")
    cfg = _config(opts)
    best = knapsack_max_profit(inst, cfg)
    answer = best >= inst.goal_profit
    kg = knapsack_graph(inst)
    data = {"answer": _yes_no(answer), **_stats(cfg, kg.graph.node_count), "profit": best,
            "goal_profit": inst.goal_profit, "nodes": kg.graph.node_count, "edges": kg.graph.m,
            "target": kg.target}
    return Result(answer, f"{_yes_no(answer)} profit={best}", data)


def task_solve_cover(path: str, opts: dict) -> Result:
    inst = _expect(_load(path, validate=opts["validate"], dedupe=opts["dedupe"], pred=opts["pred"]),
                   CoveringInstance, path, "covering")
    cfg = _config(opts)
    answer = solve_covering(inst, cfg)
    data = {"answer": _yes_no(answer), "engine": cfg.engine.value, "seed": cfg.seed,
            "predicate": inst.predicate.mode.value, "items": inst.n, "small": inst.k}
    return Result(answer, _yes_no(answer), data)


def task_solve_hitting(path: str, opts: dict) -> Result:
    inst = parse_hitting(_read(path))
    cfg = _config(opts)
    answer = solve_hitting(inst, cfg)
    data = {"answer": _yes_no(answer), **_stats(cfg, inst.nodes), "nodes": inst.nodes,
            "edges": len(inst.edges), "constraints": inst.k}
    return Result(answer, _yes_no(answer), data)


def task_exact_match(path: str, opts: dict) -> Result:
    graph = parse_edge_list(_read(path))
    cfg = _config(opts)
    if cfg.engine is not Engine.PFAFFIAN:
        raise EngineUnsupported("exact matching by weight needs the pfaffian engine")
    data = {**_stats(cfg, graph.node_count), "nodes": graph.node_count, "edges": graph.m,
            "target": opts["target"]}
    if opts["max_cost"]:
        best = exact_matching_max_cost(graph, opts["target"], cfg)
        data.update(answer=_yes_no(best is not None), max_cost=best)
        text = "NO" if best is None else f"YES max_cost={best}"
        return Result(best is not None, text, data)
    answer = exact_matching_decide(graph, opts["target"], cfg)
    data["answer"] = _yes_no(answer)
    return Result(answer, _yes_no(answer), data)


def _budget(opts: dict) -> oracle.OracleBudget:
    return oracle.OracleBudget(max_items=opts["max_items"], max_nodes=opts["max_nodes"],
                               max_k=opts["max_k"], time_limit=opts["time_limit"])


def task_oracle(path: str, opts: dict) -> Result:
    kind = opts["kind"]
    budget = _budget(opts)
    if kind == "pack":
        inst = _expect(_load(path, validate=opts["validate"], dedupe=opts["dedupe"]),
                       PackingInstance, path, "packing")
        answer = oracle.brute_pack(inst, budget)
        return Result(answer, _yes_no(answer), {"answer": _yes_no(answer)})
    if kind == "min-bins":
        inst = _expect(_load(path, validate=opts["validate"], dedupe=opts["dedupe"]),
                       PackingInstance, path, "packing")
        bins = oracle.min_bins_oracle(inst, budget)
        return Result(bins is not None, "NO" if bins is None else str(bins),
                      {"answer": _yes_no(bins is not None), "bins": bins})
    if kind == "knapsack":
        inst = _expect(_load(path, validate=opts["validate"], dedupe=opts["dedupe"]),
                       KnapsackInstance, path, "knapsack")
        best = oracle.brute_knapsack(inst, budget)
        answer = best >= inst.goal_profit
        return Result(answer, f"{_yes_no(answer)} profit={best}",
                      {"answer": _yes_no(answer), "profit": best, "goal_profit": inst.goal_profit})
    if kind == "cover":
        inst = _expect(_load(path, validate=opts["validate"], dedupe=opts["dedupe"], pred=opts["pred"]),
                       CoveringInstance, path, "covering")
        answer = oracle.brute_cover(inst, budget)
        return Result(answer, _yes_no(answer), {"answer": _yes_no(answer), "predicate": inst.predicate.mode.value})
    if kind == "hitting":
        answer = oracle.brute_hitting(parse_hitting(_read(path)), budget)
        return Result(answer, _yes_no(answer), {"answer": _yes_no(answer)})
    if kind == "match":
        graph = parse_edge_list(_read(path))
        if opts["max_cost"]:
            best = oracle.brute_max_cost_matching(graph, opts["target"], budget)
            text = "NO" if best is None else f"YES max_cost={best}"
            return Result(best is not None, text, {"answer": _yes_no(best is not None), "max_cost": best})
        answer = oracle.brute_exact_matching(graph, opts["target"], budget)
        return Result(answer, _yes_no(answer), {"answer": _yes_no(answer)})
    if kind == "sat":
        formula = parse_dimacs(_read(path))
        found = next(oracle.satisfying_assignments(formula), None)
        if found is None:
            return Result(False, "NO", {"answer": "NO"})
        word = "".join("1" if b else "0" for b in found)
        return Result(True, f"YES assignment={word}", {"answer": "YES", "assignment": word})
    raise CliError(f"unknown oracle kind {kind!r}")


TASKS: dict[str, Callable[[str, dict], Result]] = {
    "solve-pack": task_solve_pack,
    "min-bins": task_min_bins,
    "solve-knapsack": task_solve_knapsack,
    "solve-cover": task_solve_cover,
    "solve-hitting": task_solve_hitting,
    "exact-match": task_exact_match,
    "oracle": task_oracle,
}

_EXPECTED = (InstanceError, GraphError, CnfError, EngineUnsupported, oracle.OracleBudgetExceeded,
             CliError, ValueError)


def run_task(command: str, path: str, opts: dict) -> Result:
    start = time.perf_counter()
    try:
        result = TASKS[command](path, opts)
    except _EXPECTED as exc:
        return Result(None, "", {}, error=f"{path}: {exc}" if not str(exc).startswith(path) else str(exc))
    if opts.get("timing"):
        result.data["seconds"] = round(time.perf_counter() - start, 6)
    return result


def _map(command: str, paths: Sequence[str], opts: dict, jobs: int) -> list[Result]:
    if jobs <= 1 or len(paths) <= 1:
        return [run_task(command, p, opts) for p in paths]
    with ProcessPoolExecutor(max_workers=jobs) as pool:
        return list(pool.map(run_task, [command] * len(paths), paths, [opts] * len(paths)))


def _emit(paths: Sequence[str], results: Sequence[Result], fmt: str, seed_note: Optional[str],
          out, err) -> int:
    many = len(paths) > 1
    for path, res in zip(paths, results):
        if res.error is not None:
            print(f"error: {res.error}", file=err)
            continue
        if fmt == "structured":
            record = {"file": path, **res.data}
            print(json.dumps(record, sort_keys=True), file=out)
        else:
            line = f"{path}: {res.text}" if many else res.text
            if "seconds" in res.data:
                line += f" ({res.data['seconds']:.3f}s)"
            print(line, file=out)
    if seed_note and fmt == "plain":
        print(seed_note, file=out)
    codes = [r.code for r in results]
    if EXIT_ERROR in codes:
        return EXIT_ERROR
    return EXIT_NO if EXIT_NO in codes else EXIT_YES


# ---------------------------------------------------------------------------
# commands that do not map over files

def cmd_validate(args, out, err) -> int:
    code = EXIT_YES
    for path in args.files:
        try:
            doc = load_document(_read(path))
            if "nodes" in doc:
                inst = parse_hitting(_read(path))
                print(f"{path}: ok (hitting: {inst.nodes} nodes, {len(inst.edges)} edges, "
                      f"{inst.k} constraints)", file=out)
                continue
            if args.pred is not None:
                doc["covering"] = args.pred
            inst = from_document(doc, validate_promise=not args.no_validate, dedupe=args.dedupe)
        except _EXPECTED as exc:
            print(f"error: {path}: {exc}", file=err)
            code = EXIT_ERROR
            continue
        base = inst.base if isinstance(inst, KnapsackInstance) else inst
        kind = {KnapsackInstance: "knapsack", CoveringInstance: "covering"}.get(type(inst), "packing")
        print(f"{path}: ok ({kind}: {base.n} items, {base.k} small, dimension {base.dimension}, "
              f"{base.bins} bins)", file=out)
    return code


def cmd_reduce(args, out, err) -> int:
    try:
        inst = _expect(_load(args.file, validate=not args.no_validate, dedupe=args.dedupe),
                       PackingInstance, args.file, "packing")
    except _EXPECTED as exc:
        print(f"error: {exc}", file=err)
        return EXIT_ERROR
    red = reduce_packing_to_matching(inst)
    print(f"# target {red.target}", file=out)
    print(f"# dummies {red.dummies}", file=out)
    if red.trivial_answer is not None:
        print(f"# trivial {_yes_no(red.trivial_answer)}", file=out)
    out.write(red.graph.to_edge_list(with_tags=True))
    return EXIT_YES


def cmd_gen_hard(args, out, err) -> int:
    try:
        formula = parse_dimacs(_read(args.file))
        family = cnf_to_packing_family(formula)
    except _EXPECTED as exc:
        print(f"error: {exc}", file=err)
        return EXIT_ERROR
    target = Path(args.out) if args.out else Path(args.file).with_suffix("")
    target = target if args.out else target.parent / f"{target.name}_family"
    target.mkdir(parents=True, exist_ok=True)
    for name, blob in family_documents(family):
        (target / name).write_bytes(blob)
        print(target / name, file=out)
    if args.verify:
        report = verify_family(family)
        print(report.summary(), file=out)
        return EXIT_YES if report.clean else EXIT_NO
    return EXIT_YES


def _corpus_items(kind: str, seed: int, count: int):
    """(file name, document bytes, instance) for the first ``count`` corpus members."""
    width = len(str(max(count - 1, 0)))
    for i in range(count):
        name = f"{kind}-{i:0{width}d}"
        if kind == "pack":
            inst = random_packing(seed, i)
            yield name + ".json", serialize_instance(inst), inst
        elif kind == "knapsack":
            inst = random_knapsack(seed, i)
            yield name + ".json", serialize_instance(inst), inst
        elif kind in ("cover-any", "cover-all"):
            inst = random_covering(seed, i, CoveringPredicate.parse(kind.split("-")[1]))
            yield name + ".json", serialize_instance(inst), inst
        elif kind == "hitting":
            inst = random_hitting(seed, i)
            yield name + ".json", serialize_hitting(inst), inst
        else:
            n, clauses = random_cnf_clauses(seed, i)
            formula = CnfFormula.from_clauses(n, clauses)
            yield name + ".cnf", formula.to_dimacs().encode(), formula


def _check_one(kind: str, inst, cfg: EngineConfig) -> tuple[bool, bool]:
    """(solver answer, oracle answer)."""
    if kind == "pack":
        return solve_packing_detailed(inst, cfg).answer, oracle.brute_pack(inst)
    if kind == "knapsack":
        return knapsack_max_profit(inst, cfg) >= inst.goal_profit, oracle.brute_knapsack_decide(inst)
    if kind.startswith("cover"):
        return solve_covering(inst, cfg), oracle.brute_cover(inst)
    if kind == "hitting":
        return solve_hitting(inst, cfg), oracle.brute_hitting(inst)
    family = cnf_to_packing_family(inst)
    all_small = [PackingInstance(p.items, frozenset(range(p.n)), p.bins, p.dimension) for p in family.instances]
    return any(oracle.brute_pack(p) for p in all_small), oracle.brute_sat(inst)


def cmd_corpus(args, out, err) -> int:
    seed, note = _seed(args)
    if args.out:
        target = Path(args.out)
        target.mkdir(parents=True, exist_ok=True)
        for name, blob, _ in _corpus_items(args.kind, seed, args.count):
            (target / name).write_bytes(blob)
        print(f"wrote {args.count} {args.kind} instances to {target}", file=out)
    if args.check:
        cfg = EngineConfig(repeats=args.repeats, seed=seed, engine=Engine(args.engine),
                           base=IsolationBase(args.isolation_base))
        items = list(_corpus_items(args.kind, seed, args.count))
        if args.jobs > 1:
            with ProcessPoolExecutor(max_workers=args.jobs) as pool:
                futures = [pool.submit(_check_one, args.kind, inst, cfg) for _, _, inst in items]
                pairs = [f.result() for f in futures]
        else:
            pairs = [_check_one(args.kind, inst, cfg) for _, _, inst in items]
        bad = [name for (name, _, _), (got, want) in zip(items, pairs) if got != want]
        yes = sum(want for _, want in pairs)
        print(f"{args.kind}: {len(items)} instances, {yes} YES, {len(bad)} disagreements", file=out)
        for name in bad:
            print(f"disagreement: {name}", file=out)
        if note:
            print(note, file=out)
        return EXIT_NO if bad else EXIT_YES
    if note:
        print(note, file=out)
    return EXIT_YES


def cmd_bench(args, out, err) -> int:
    seed, note = _seed(args)
    engines = [Engine(e) for e in args.engines.split(",")]
    rows = []
    for path in args.files:
        try:
            inst = _expect(_load(path, validate=not args.no_validate, dedupe=args.dedupe),
                           PackingInstance, path, "packing")
        except _EXPECTED as exc:
            print(f"error: {exc}", file=err)
            return EXIT_ERROR
        for engine in engines:
            cfg = EngineConfig(repeats=args.repeats, seed=seed, engine=engine,
                               base=IsolationBase(args.isolation_base))
            start = time.perf_counter()
            res = solve_packing_detailed(inst, cfg)
            seconds = time.perf_counter() - start
            rows.append({"file": path, "engine": engine.value, "n": inst.n, "k": inst.k,
                         "d": inst.dimension, "bins": inst.bins, "nodes": res.nodes, "edges": res.edges,
                         "repeats": cfg.repeats_for(res.nodes), "seed": seed,
                         "answer": _yes_no(res.answer), "seconds": f"{seconds:.6f}"})
    buf = io.StringIO()
    writer = csv.DictWriter(buf, fieldnames=list(rows[0]) if rows else ["file"], lineterminator="\n")
    writer.writeheader()
    writer.writerows(rows)
    if args.csv:
        Path(args.csv).write_text(buf.getvalue())
        print(f"wrote {args.csv}", file=out)
    else:
        out.write(buf.getvalue())
    if args.plot:
        _plot(rows, args.plot)
        print(f"wrote {args.plot}", file=out)
    if note:
        print(note, file=out)
    return EXIT_YES


def _plot(rows: list[dict], path: str) -> None:
    import matplotlib
    matplotlib.use("Agg")
    import matplotlib.pyplot as plt

    files = list(dict.fromkeys(r["file"] for r in rows))
    engines = list(dict.fromkeys(r["engine"] for r in rows))
    width = 0.8 / max(len(engines), 1)
    fig, ax = plt.subplots(figsize=(max(4, 1.5 * len(files) + 2), 3.5))
    for j, engine in enumerate(engines):
        xs, ys = [], []
        for i, f in enumerate(files):
            for r in rows:
                if r["file"] == f and r["engine"] == engine:
                    xs.append(i + j * width)
                    ys.append(float(r["seconds"]))
        ax.bar(xs, ys, width, label=engine)
    ax.set_xticks([i + width * (len(engines) - 1) / 2 for i in range(len(files))])
    ax.set_xticklabels([Path(f).name for f in files], rotation=20, ha="right")
    ax.set_ylabel("seconds")
    ax.legend()
    fig.tight_layout()
    fig.savefig(path, dpi=120)
    plt.close(fig)


# ---------------------------------------------------------------------------
# argument parsing

def _seed(args) -> tuple[int, Optional[str]]:
    if args.seed is not None:
        return args.seed, None
    seed = secrets.randbits(63)
    return seed, f"seed={seed}"


def _engine_flags(p: argparse.ArgumentParser, engines=("pfaffian", "gf2")) -> None:
    p.add_argument("--engine", choices=engines, default="pfaffian")
    p.add_argument("--seed", type=int, help="64-bit seed; a random one is drawn and printed if omitted")
    p.add_argument("--repeats", type=int, help="independent repeats (default grows with log of the graph size)")
    p.add_argument("--isolation-base", choices=[b.value for b in IsolationBase],
                   default=IsolationBase.MULTIPLICITY.value,
                   help="base of the weight/cost separation in the pfaffian engine")


def _input_flags(p: argparse.ArgumentParser) -> None:
    p.add_argument("--no-validate", action="store_true", help="skip the large-item promise check")
    p.add_argument("--dedupe", action="store_true", help="break equal items with an extra dimension")


def _output_flags(p: argparse.ArgumentParser) -> None:
    p.add_argument("--format", choices=["plain", "structured"], default="plain")
    p.add_argument("--timing", action="store_true", help="report wall-clock seconds (not reproducible)")
    p.add_argument("--jobs", type=int, default=1, help="worker processes for multiple inputs")


def _budget_flags(p: argparse.ArgumentParser) -> None:
    d = oracle.DEFAULT_BUDGET
    p.add_argument("--max-items", type=int, default=d.max_items)
    p.add_argument("--max-nodes", type=int, default=d.max_nodes)
    p.add_argument("--max-k", type=int, default=d.max_k)
    p.add_argument("--time-limit", type=float, default=d.time_limit, help="seconds per oracle call")


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        self.print_usage(sys.stderr)
        raise CliError(f"{self.prog}: {message}")


def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(prog="fewsmall", description="Exact solvers for vector bin packing with few small items.")
    sub = parser.add_subparsers(dest="command", required=True, parser_class=_Parser)

    p = sub.add_parser("validate", help="check instance documents")
    p.add_argument("files", nargs="+")
    p.add_argument("--pred", choices=["any", "all"], help="treat the document as a covering instance")
    _input_flags(p)

    for name, helptext in [("solve-pack", "decide whether the items fit into the bins"),
                           ("min-bins", "fewest bins that hold all items (binary search)"),
                           ("solve-knapsack", "decide whether the goal profit is packable"),
                           ("solve-cover", "decide whether the requested number of bins can be covered"),
                           ("solve-hitting", "perfect matching meeting every edge constraint")]:
        p = sub.add_parser(name, help=helptext)
        p.add_argument("files", nargs="+")
        _engine_flags(p)
        _input_flags(p)
        _output_flags(p)
        if name == "solve-cover":
            p.add_argument("--pred", choices=["any", "all"],
                           help="covering predicate (default: the document's, else any)")

    p = sub.add_parser("exact-match", help="perfect matching of exactly the target weight in an edge list")
    p.add_argument("files", nargs="+")
    p.add_argument("--target", type=int, required=True)
    p.add_argument("--max-cost", action="store_true", help="report the largest cost among such matchings")
    _engine_flags(p, engines=("pfaffian",))
    _output_flags(p)

    p = sub.add_parser("reduce", help="print the matching graph of a packing instance")
    p.add_argument("file")
    _input_flags(p)

    p = sub.add_parser("gen-hard", help="packing family from a DIMACS CNF formula")
    p.add_argument("file")
    p.add_argument("--out", help="output directory (default: <formula>_family next to the input)")
    p.add_argument("--verify", action="store_true", help="check the family against every assignment")

    p = sub.add_parser("oracle", help="brute-force reference answers")
    p.add_argument("kind", choices=["pack", "min-bins", "knapsack", "cover", "hitting", "match", "sat"])
    p.add_argument("files", nargs="+")
    p.add_argument("--pred", choices=["any", "all"])
    p.add_argument("--target", type=int, help="matching weight (match)")
    p.add_argument("--max-cost", action="store_true")
    _input_flags(p)
    _output_flags(p)
    _budget_flags(p)

    p = sub.add_parser("corpus", help="write or check a seeded random corpus")
    p.add_argument("--kind", choices=["pack", "knapsack", "cover-any", "cover-all", "hitting", "cnf"],
                   default="pack")
    p.add_argument("--count", type=int, default=100)
    p.add_argument("--out", help="directory for the instance files")
    p.add_argument("--check", action="store_true", help="compare the solvers with the oracles")
    p.add_argument("--jobs", type=int, default=1)
    _engine_flags(p)

    p = sub.add_parser("bench", help="time the engines on packing instances")
    p.add_argument("files", nargs="+")
    p.add_argument("--engines", default="pfaffian,gf2")
    p.add_argument("--csv", help="write the table here instead of stdout")
    p.add_argument("--plot", help="bar chart of the timings (PNG)")
    p.add_argument("--seed", type=int)
    p.add_argument("--repeats", type=int, default=10)
    p.add_argument("--isolation-base", choices=[b.value for b in IsolationBase],
                   default=IsolationBase.MULTIPLICITY.value)
    _input_flags(p)
    return parser


def _task_options(args, seed: int) -> dict:
    opts = {
        "seed": seed,
        "engine": getattr(args, "engine", "pfaffian"),
        "repeats": getattr(args, "repeats", None),
        "isolation_base": getattr(args, "isolation_base", IsolationBase.MULTIPLICITY.value),
        "validate": not getattr(args, "no_validate", False),
        "dedupe": getattr(args, "dedupe", False),
        "pred": getattr(args, "pred", None),
        "timing": getattr(args, "timing", False),
        "target": getattr(args, "target", None),
        "max_cost": getattr(args, "max_cost", False),
        "kind": getattr(args, "kind", None),
    }
    if args.command == "oracle":
        opts.update(max_items=args.max_items, max_nodes=args.max_nodes, max_k=args.max_k,
                    time_limit=args.time_limit)
    return opts


def main(argv: Optional[Sequence[str]] = None, out=None, err=None) -> int:
    out = out or sys.stdout
    err = err or sys.stderr
    try:
        args = build_parser().parse_args(argv)
        if getattr(args, "repeats", None) is not None and args.repeats < 1:
            raise CliError("--repeats must be at least 1")
        if getattr(args, "jobs", 1) < 1:
            raise CliError("--jobs must be at least 1")
        simple = {"validate": cmd_validate, "reduce": cmd_reduce, "gen-hard": cmd_gen_hard,
                  "corpus": cmd_corpus, "bench": cmd_bench}
        if args.command in simple:
            return simple[args.command](args, out, err)
        if args.command == "oracle":
            if args.kind == "match" and args.target is None:
                raise CliError("oracle match needs --target")
            seed, note = 0, None
        else:
            seed, note = _seed(args)
        results = _map(args.command, args.files, _task_options(args, seed), args.jobs)
        return _emit(args.files, results, args.format, note, out, err)
    except CliError as exc:
        print(f"error: {exc}", file=err)
        return EXIT_ERROR
    except SystemExit as exc:   # --help
        return EXIT_YES if exc.code in (0, None) else EXIT_ERROR


if __name__ == "__main__":
    sys.exit(main())
