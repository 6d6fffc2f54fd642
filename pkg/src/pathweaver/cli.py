"""Command-line entry point: ``pathweaver <command> ...``."""
from __future__ import annotations

import argparse
import json
import sys
from pathlib import Path

from .cost_model import CostParams, build_cost_table
from .eval_harness import ExperimentConfig, run_experiment
from .graph_store import GraphError, StudentState, classify, load_graph_file
from .pathsim import SimWeights, plan_similarity
from .planner import LearningPlan, PlannerConfig, plan
from .retrieval import Document, RetrievalConfig, RetrievalError, concept_corpus, get_providers, retrieve
from .student_sim import generate_cohort, simulate_attempts


def _read_json(path: str) -> dict:
    with open(path, encoding="utf-8") as fh:
        return json.load(fh)


def _emit(doc, out: str | None) -> None:
    text = json.dumps(doc, indent=2, sort_keys=True) + "\n"
    if out is None or out == "-":
        sys.stdout.write(text)
    else:
        Path(out).write_text(text, encoding="utf-8")


def _student(path: str, g) -> StudentState:
    return StudentState.from_dict(_read_json(path)).check(g)


def cmd_validate(args) -> int:
    g = load_graph_file(args.kg)
    print(f"ok: {len(g.ids)} concepts, {sum(len(v) for v in g.out_neighbors.values())} edges, "
          f"{len(g.problems)} problems, {len(g.misconceptions)} misconceptions")
    return 0


def cmd_cost(args) -> int:
    g = load_graph_file(args.kg)
    s = _student(args.student, g)
    sources, _ = classify(g, s)
    _emit(build_cost_table(g, s, args.lam, sources).to_dict(), args.output)
    return 0


def cmd_plan(args) -> int:
    g = load_graph_file(args.kg)
    s = _student(args.student, g)
    p = plan(g, s, PlannerConfig(max_path_len=args.max_len), args.lam)
    _emit(p.to_dict(), args.output)
    return 0


def cmd_pathsim(args) -> int:
    a = LearningPlan.from_dict(_read_json(args.plan_a))
    b = LearningPlan.from_dict(_read_json(args.plan_b))
    _emit(plan_similarity(a, b, args.weights).to_dict(), None)
    return 0


def _corpus(g, which: str) -> list[Document]:
    docs = []
    if which in ("concepts", "all"):
        docs += concept_corpus(g)
    if which in ("problems", "all"):
        docs += [Document(p.id, p.stem, tuple(sorted(p.linked_kp_ids))) for _, p in sorted(g.problems.items())]
    return docs


def cmd_retrieve(args) -> int:
    g = load_graph_file(args.kg)
    emb, ce = get_providers(args.provider)
    cfg = RetrievalConfig(alpha=args.alpha, k_vector=max(args.k_vector, args.k), k_final=args.k)
    student = _student(args.student, g) if args.student else None
    ranked = retrieve(args.query, _corpus(g, args.corpus), emb, ce, cfg, student, g)
    _emit([c.to_dict() for c in ranked], None)
    return 0


def cmd_simulate(args) -> int:
    g = load_graph_file(args.kg)
    cohort = generate_cohort(g, args.n, args.seed)
    doc = {
        "kg": str(args.kg),
        "seed": args.seed,
        "steps": args.steps,
        "profiles": [
            p.to_dict() | {"attempts": [a.to_dict() for a in simulate_attempts(p, g, args.steps, p.seed)]}
            for p in cohort
        ],
    }
    _emit(doc, args.output)
    return 0


def cmd_evaluate(args) -> int:
    cfg = ExperimentConfig.load(args.config) if args.config else ExperimentConfig()
    rows = run_experiment(cfg, args.output)
    for r in rows:
        print(",".join(r.csv_row()))
    return 0


def _lambda(text: str) -> CostParams:
    try:
        return CostParams.parse(text)
    except ValueError as exc:
        raise argparse.ArgumentTypeError(str(exc)) from None


def _weights(text: str) -> SimWeights:
    try:
        return SimWeights.parse(text)
    except ValueError as exc:
        raise argparse.ArgumentTypeError(str(exc)) from None


def build_parser() -> argparse.ArgumentParser:
    ap = argparse.ArgumentParser(prog="pathweaver", description="Personalized learning-path planning tools.")
    sub = ap.add_subparsers(dest="command", required=True)

    p = sub.add_parser("validate", help="check a knowledge-graph file")
    p.add_argument("kg")
    p.set_defaults(func=cmd_validate)

    p = sub.add_parser("cost", help="per-concept learning cost for a student")
    p.add_argument("kg")
    p.add_argument("--student", required=True)
    p.add_argument("--lambda", dest="lam", type=_lambda, default=CostParams())
    p.add_argument("-o", "--output")
    p.set_defaults(func=cmd_cost)

    p = sub.add_parser("plan", help="build a learning plan")
    p.add_argument("kg")
    p.add_argument("--student", required=True)
    p.add_argument("--max-len", type=int, default=10)
    p.add_argument("--lambda", dest="lam", type=_lambda, default=CostParams())
    p.add_argument("-o", "--output")
    p.set_defaults(func=cmd_plan)

    p = sub.add_parser("pathsim", help="compare two plan files")
    p.add_argument("plan_a")
    p.add_argument("plan_b")
    p.add_argument("--weights", type=_weights, default=SimWeights(),
                   help="w_p,w_i or w_p,w_i,node,edge,seq")
    p.set_defaults(func=cmd_pathsim)

    p = sub.add_parser("retrieve", help="rank concepts and problems for a query")
    p.add_argument("kg")
    p.add_argument("--query", required=True)
    p.add_argument("--alpha", type=float, default=0.5)
    p.add_argument("--k", type=int, default=6)
    p.add_argument("--k-vector", type=int, default=50)
    p.add_argument("--corpus", choices=("concepts", "problems", "all"), default="all")
    p.add_argument("--student")
    p.add_argument("--provider", default="mock")
    p.set_defaults(func=cmd_retrieve)

    p = sub.add_parser("simulate", help="generate a cohort with attempt logs")
    p.add_argument("kg")
    p.add_argument("--n", type=int, default=15)
    p.add_argument("--steps", type=int, default=15)
    p.add_argument("--seed", type=int, default=42)
    p.add_argument("-o", "--output")
    p.set_defaults(func=cmd_simulate)

    p = sub.add_parser("evaluate", help="run the comparison experiment")
    p.add_argument("--config", help="experiment JSON; defaults apply when omitted")
    p.add_argument("-o", "--output", default="report")
    p.set_defaults(func=cmd_evaluate)
    return ap


def main(argv: list[str] | None = None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.func(args)
    except (GraphError, RetrievalError, KeyError, ValueError, OSError) as exc:
        msg = exc.args[0] if isinstance(exc, KeyError) and exc.args else exc
        print(f"pathweaver {args.command}: {msg}", file=sys.stderr)
        return 1


if __name__ == "__main__":
    sys.exit(main())
