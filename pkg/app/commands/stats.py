"""
stats and schema subcommands
"""

import json
import sys
from fractions import Fraction

from app.commands.common import emit
from app.errors import FamilySpecError
from app.models import SCHEMAS, json_schema
from app.services.experiments import wcw_dim_zero_fraction, write_csv


def run_stats(args) -> int:
    try:
        p = Fraction(args.p)
    except (ValueError, ZeroDivisionError) as e:
        raise FamilySpecError(f"p must be a rational such as 1/2, got {args.p!r}") from e
    result = wcw_dim_zero_fraction(args.n, p, args.trials, seed=args.seed)
    write_csv(list(result.records), sys.stdout)
    if args.summary:
        sys.stderr.write(result.summary.model_dump_json() + "\n")
    return 0


def run_schema(args) -> int:
    emit(json.dumps(json_schema(args.model), indent=2, sort_keys=True))
    return 0


def register(subparsers) -> None:
    parser = subparsers.add_parser("stats", help="dim WCW(G) over random graphs, as CSV")
    parser.add_argument("--n", type=int, required=True)
    parser.add_argument("--p", default="1/2", help="Edge probability, e.g. 1/2")
    parser.add_argument("--trials", type=int, required=True, help="0 enumerates all graphs (n <= 5)")
    parser.add_argument("--seed", type=int, default=None, help="Defaults to LEVELABLE_EXPERIMENT_SEED")
    parser.add_argument("--summary", action="store_true", help="Also print the summary JSON on stderr")
    parser.set_defaults(handler=run_stats)

    parser = subparsers.add_parser("schema", help="JSON schema of an output model")
    parser.add_argument("model", choices=sorted(SCHEMAS))
    parser.set_defaults(handler=run_schema)
