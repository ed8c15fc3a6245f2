"""Command-line interface: ``voteselect {reduce,verify,experiment,pca,rules-demo}``.

Exit status: 0 success, 1 domain failure (bad data, failed check), 2 usage
error, 3 enumeration bound exceeded.
"""

from __future__ import annotations

import argparse
import contextlib
import sys
from fractions import Fraction

from . import axioms, harness
from .baselines import BASELINE_IDS
from .classify import check_theorem_pjr_knn
from .data import distance_matrix, normalize_minmax, pca_project, resolve_dataset, write_projection
from .errors import EnumerationLimitError, VoteSelectError
from .localset import BallotVariant, Election, as_fraction, build_election, election_from_text
from .voting import RULE_IDS, canonical_rule, run_rule

EXIT_OK, EXIT_FAIL, EXIT_USAGE, EXIT_GUARD = 0, 1, 2, 3
CHECKS = ("ejr", "pjr", "2ejr", "safe-trace", "theorem-knn")

# the worked example used by rules-demo when no election file is given
DEMO_ELECTION = Election(((0, 1), (0, 1), (2,), (2,)), Fraction(1))


def _fraction(text: str) -> Fraction:
    try:
        value = as_fraction(text)
    except ValueError as exc:
        raise argparse.ArgumentTypeError(str(exc)) from None
    if value <= 0:
        raise argparse.ArgumentTypeError(f"must be positive, got {text}")
    return value


def _odd(text: str) -> int:
    value = int(text)
    if value < 1 or value % 2 == 0:
        raise argparse.ArgumentTypeError(f"K must be a positive odd integer, got {text}")
    return value


def _csv_list(text: str) -> list[str]:
    return [x.strip() for x in text.split(",") if x.strip()]


@contextlib.contextmanager
def _open_out(path):
    if path is None or path == "-":
        yield sys.stdout
    else:
        with open(path, "w", newline="") as fh:
            yield fh


def _load(args):
    ds = resolve_dataset(args.dataset, header=None)
    return normalize_minmax(ds) if getattr(args, "normalize", False) else ds


def _selector_from(args) -> harness.SelectorSpec:
    if args.baseline:
        if args.baseline == "random":
            return harness.SelectorSpec.baseline("random", args.fraction)
        return harness.SelectorSpec.baseline(args.baseline)
    return harness.SelectorSpec.rule(args.rule, args.q, args.variant)


def _add_selector(p, required=True):
    group = p.add_mutually_exclusive_group(required=required)
    group.add_argument("--rule", choices=RULE_IDS + ("seqp",), help="voting rule used to reduce the data")
    group.add_argument("--baseline", choices=BASELINE_IDS, help="comparison selector instead of a voting rule")
    p.add_argument("--q", type=_fraction, default=Fraction(1), help="ratio t/n, e.g. 2, 3/2, 0.75 (default: 1)")
    p.add_argument("--variant", choices=("included", "excluded"), default="included",
                   help="whether an instance approves itself (default: included)")
    p.add_argument("--fraction", type=_fraction, default=Fraction(9, 10),
                   help="share of instances kept by the random baseline (default: 0.9)")
    p.add_argument("--k", type=_odd, default=3, help="neighbours for ENN/ICF and K-NN (default: 3)")
    p.add_argument("--seed", type=int, default=42, help="random seed (default: 42)")
    p.add_argument("--normalize", action="store_true", help="rescale features to [0, 1] first")


def cmd_reduce(args) -> int:
    ds = _load(args)
    spec = _selector_from(args)
    dm = distance_matrix(ds)
    if spec.kind == "rule":
        e = build_election(ds, spec.variant, spec.q, dm=dm)
        committee, trace = run_rule(spec.name, e, adapted_stop=args.adapted_stop)
        kept, flags = sorted(committee.members), committee.flags
        if args.trace:
            with open(args.trace, "w") as fh:
                fh.write(trace.to_text())
    else:
        kept, flags = harness.select(ds, spec, dm, seed=args.seed, K=args.k)
    with _open_out(args.output) as fh:
        for i in kept:
            fh.write(f"{ds.origin[i]}\n")
    summary = f"kept={len(kept)} reduction={(ds.n - len(kept)) / ds.n:.6f}"
    if flags:
        summary += " flags=" + ",".join(flags)
    print(summary, file=sys.stderr if args.output in (None, "-") else sys.stdout)
    return EXIT_OK


def _verify_election(e: Election, rule: str, checks, out) -> bool | None:
    """Run ``rule`` on ``e`` and the requested committee checks; print failures.

    Returns None when sequential Phragmen has no valid target size."""
    seqp = rule == "seqphragmen"
    if seqp and not 1 <= e.t_int <= e.num_candidates:
        return None
    committee, trace = run_rule(rule, e, adapted_stop=seqp)
    W = committee.members
    # sequential Phragmen targets floor(q*n) seats, so its guarantee is stated for that size
    target = Election(e.ballots, Fraction(e.t_int, e.n), e.num_candidates) if seqp else e
    ok = True
    for check in checks:
        found = None
        if check == "ejr":
            found = axioms.check_ejr(W, target)
        elif check == "pjr":
            found = axioms.check_pjr(W, target)
        elif check == "2ejr":
            found = axioms.check_ejr(W, target, max_ell=2)
        elif check == "safe-trace":
            if rule != "es":
                raise ValueError("safe-trace applies to the es rule only")
            report = axioms.check_safe_trace(trace, e)
            if not (report.safe and report.budget_bound_holds and report.all_weak):
                out.write(report.to_text())
                ok = False
            continue
        if found is not None:
            out.write(f"committee {list(W)}: {found.to_text()}\n")
            ok = False
    return ok


def cmd_verify(args) -> int:
    rule = canonical_rule(args.rule)
    checks = args.check
    out = sys.stdout
    if "theorem-knn" in checks:
        if args.dataset is None:
            raise ValueError("theorem-knn needs a dataset")
        ds = _load(args)
        report = check_theorem_pjr_knn(ds, rule, args.k)
        out.write(report.to_text())
        if not report.passed:
            return EXIT_FAIL
        checks = [c for c in checks if c != "theorem-knn"]
        if not checks:
            return EXIT_OK

    if args.random is not None:
        elections = list(axioms.random_corpus(args.random, args.seed))
    elif args.election:
        with open(args.election) as fh:
            elections = [election_from_text(fh.read())]
    elif args.dataset:
        ds = _load(args)
        elections = [build_election(ds, args.variant, args.q)]
    else:
        raise ValueError("give a dataset, --election FILE or --random N")

    failures = skipped = 0
    for idx, e in enumerate(elections):
        ok = _verify_election(e, rule, checks, out)
        if ok is None:
            skipped += 1
        elif not ok:
            failures += 1
            if len(elections) > 1:
                out.write(f"  (election {idx}, n={e.n}, q={e.q})\n")
    note = f" ({skipped} skipped: target size outside 1..m)" if skipped else ""
    out.write(f"{rule}: {len(elections)} election(s){note}, checks {','.join(checks)}: "
              f"{'all pass' if not failures else f'{failures} failing'}\n")
    return EXIT_OK if not failures else EXIT_FAIL


def cmd_experiment(args) -> int:
    names = list(args.datasets or []) + list(args.dataset or [])
    if not names:
        raise ValueError("no datasets given (use --datasets or positional names)")
    datasets = [resolve_dataset(n) for n in names]
    variants = [BallotVariant.parse(v) for v in args.variants]
    common = dict(K=args.k, folds=args.folds, seed=args.seed, normalize=args.normalize)
    configs = []
    if args.rules:
        qs = None if args.full_grid else (args.q or [Fraction(1)])
        configs += harness.config_grid(args.rules, qs, variants, **common)
    for name in args.baseline or []:
        fractions = args.fraction if name == "random" else [None]
        for f in fractions:
            spec = harness.SelectorSpec.baseline(name, f)
            configs.append(harness.ExperimentConfig(spec, **common))
    if args.none or not configs:
        configs.insert(0, harness.ExperimentConfig(harness.SelectorSpec.identity(), **common))

    results = harness.run_grid(datasets, configs, workers=args.workers)
    with _open_out(args.output) as fh:
        harness.write_results(results, fh, timing=args.timing)
    if args.scatter:
        with open(args.scatter, "w", newline="") as fh:
            harness.write_scatter(results, fh)
    if args.compare:
        with open(args.compare, "w", newline="") as fh:
            harness.write_comparison(results, fh)
    if args.published:
        with open(args.published, "w", newline="") as fh:
            harness.write_published(fh)
    summary = sys.stderr if args.output in (None, "-") else sys.stdout
    for cfg, acc, red, count in harness.averages(results):
        s = cfg.selector
        print(f"average {s.label} {s.variant_text or '-'}: accuracy={acc:.4f} reduction={red:.4f} "
              f"datasets={count}", file=summary)
    errors = [r for r in results if not r.ok]
    for r in errors:
        print(f"error {r.dataset} {r.config.selector.label}: {r.error}", file=sys.stderr)
    return EXIT_FAIL if len(errors) == len(results) else EXIT_OK


def cmd_pca(args) -> int:
    ds = _load(args)
    rows = pca_project(ds, args.dims)
    if args.rule or args.baseline:
        spec = _selector_from(args)
        kept, _ = harness.select(ds, spec, distance_matrix(ds), seed=args.seed, K=args.k)
        rows = [rows[i] for i in kept]
    with _open_out(args.output) as fh:
        write_projection(rows, fh)
    return EXIT_OK


def cmd_rules_demo(args) -> int:
    if args.election:
        with open(args.election) as fh:
            e = election_from_text(fh.read())
    else:
        e = DEMO_ELECTION
    if args.q is not None or args.t_int is not None:
        q = args.q if args.q is not None else e.q
        e = Election(e.ballots, q, e.num_candidates, args.t_int)
    rules = [canonical_rule(r) for r in (args.rules or RULE_IDS)]
    sys.stdout.write(e.to_text())
    for rule in rules:
        try:
            committee, trace = run_rule(rule, e, adapted_stop=args.adapted_stop)
        except (VoteSelectError, ValueError) as exc:
            print(f"{rule}: {exc}")
            continue
        flags = f" ({', '.join(committee.flags)})" if committee.flags else ""
        print(f"{rule}: winners {list(committee.members)}{flags}")
        sys.stdout.write(trace.to_text())
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    fmt = argparse.ArgumentDefaultsHelpFormatter
    parser = argparse.ArgumentParser(prog="voteselect", description=(
        "Instance selection for nearest-neighbour classifiers through proportional approval voting."))
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("reduce", formatter_class=fmt, help="reduce a dataset and write the kept indices")
    p.add_argument("dataset", help="CSV file (label in last column) or builtin name")
    _add_selector(p)
    p.add_argument("--adapted-stop", action="store_true",
                   help="sequential Phragmen stops when no remaining candidate is approved")
    p.add_argument("--output", "-o", default=None, help="file for kept indices (default: stdout)")
    p.add_argument("--trace", default=None, help="write the rule's per-iteration trace here")
    p.set_defaults(func=cmd_reduce)

    p = sub.add_parser("verify", formatter_class=fmt, help="check proportionality guarantees")
    p.add_argument("dataset", nargs="?", default=None, help="CSV file or builtin name")
    p.add_argument("--rule", required=True, choices=RULE_IDS + ("seqp",), help="rule whose committees are checked")
    p.add_argument("--check", type=_csv_list, default=["ejr"],
                   help=f"comma-separated checks from {', '.join(CHECKS)}")
    p.add_argument("--election", default=None, help="election file ('q: 3', 'candidates: m', '<voter>: c ...')")
    p.add_argument("--random", type=int, default=None, metavar="N", help="check N seeded random elections")
    p.add_argument("--q", type=_fraction, default=Fraction(1), help="t/n for elections built from a dataset")
    p.add_argument("--variant", choices=("included", "excluded"), default="included",
                   help="ballot variant for elections built from a dataset")
    p.add_argument("--k", type=_odd, default=3, help="K for theorem-knn")
    p.add_argument("--seed", type=int, default=42, help="seed for --random elections")
    p.add_argument("--normalize", action="store_true", help="rescale features to [0, 1] first")
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("experiment", formatter_class=fmt, help="10-fold cross-validated accuracy and reduction")
    p.add_argument("dataset", nargs="*", help="datasets (files or builtin names)")
    p.add_argument("--datasets", type=_csv_list, default=None, help="comma-separated datasets")
    p.add_argument("--rules", type=_csv_list, default=None, help="comma-separated voting rules")
    p.add_argument("--q", type=lambda s: [_fraction(x) for x in _csv_list(s)], default=None,
                   help="comma-separated t/n values (default: 1)")
    p.add_argument("--full-grid", action="store_true", help="use each rule's full grid of t/n values")
    p.add_argument("--variants", type=_csv_list, default=["included"], help="included, excluded or both")
    p.add_argument("--baseline", type=_csv_list, default=None, help="comma-separated baselines")
    p.add_argument("--fraction", type=lambda s: [_fraction(x) for x in _csv_list(s)],
                   default=[Fraction(9, 10)], help="kept shares for the random baseline")
    p.add_argument("--none", action="store_true", help="also evaluate the unreduced training set")
    p.add_argument("--k", type=_odd, default=3, help="neighbours for K-NN, ENN and ICF")
    p.add_argument("--folds", type=int, default=10, help="number of cross-validation folds")
    p.add_argument("--seed", type=int, default=42, help="seed for fold assignment and random baselines")
    p.add_argument("--normalize", action="store_true", help="rescale features to [0, 1] first")
    p.add_argument("--workers", type=int, default=1, help="parallel worker processes")
    p.add_argument("--timing", action="store_true", help="fill the seconds column (breaks byte-identical reruns)")
    p.add_argument("--output", "-o", default=None, help="results CSV (default: stdout)")
    p.add_argument("--scatter", default=None, help="accuracy-vs-reduction CSV, one point per configuration")
    p.add_argument("--compare", default=None, help="CSV of computed values next to published ones")
    p.add_argument("--published", default=None, help="dump the embedded published reference tables")
    p.set_defaults(func=cmd_experiment)

    p = sub.add_parser("pca", formatter_class=fmt, help="project (optionally reduced) data on two principal axes")
    p.add_argument("dataset", help="CSV file or builtin name")
    _add_selector(p, required=False)
    p.add_argument("--dims", type=int, default=2, help="number of principal axes")
    p.add_argument("--output", "-o", default=None, help="projection CSV, stdout when omitted")
    p.set_defaults(func=cmd_pca)

    p = sub.add_parser("rules-demo", formatter_class=fmt, help="run the voting rules on a small election")
    p.add_argument("--election", default=None, help="election file (default: a built-in four-voter example)")
    p.add_argument("--rules", type=_csv_list, default=None, help="comma-separated rules (default: all)")
    p.add_argument("--q", type=_fraction, default=None, help="override t/n")
    p.add_argument("--t-int", type=int, default=None, help="override sequential Phragmen's committee size")
    p.add_argument("--adapted-stop", action="store_true", help="sequential Phragmen stops when nothing approved is left")
    p.set_defaults(func=cmd_rules_demo)
    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    if getattr(args, "check", None):
        unknown = [c for c in args.check if c not in CHECKS]
        if unknown:
            parser.error(f"unknown check(s): {', '.join(unknown)}")
    try:
        return args.func(args)
    except EnumerationLimitError as exc:
        print(f"voteselect: {exc}", file=sys.stderr)
        return EXIT_GUARD
    except (VoteSelectError, ValueError, KeyError, OSError) as exc:
        msg = exc.args[0] if isinstance(exc, KeyError) and exc.args else exc
        print(f"voteselect: {msg}", file=sys.stderr)
        return EXIT_FAIL


if __name__ == "__main__":
    sys.exit(main())
