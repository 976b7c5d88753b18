"""Batch command-line front end.

Every operation in the package is reachable through one subcommand
invocation.  Results go to stdout in a stable machine-readable form
(JSON by default; integers as decimal strings so nothing is ever forced
through a float), progress and warnings go to stderr, and exit codes
separate outcome classes:

  0  success
  1  a requested verification ran and reported failure
  2  domain error (structured error object on stdout)
  3  resource-budget refusal
  64 usage error (unknown command or flag)
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import os
import sys
from fractions import Fraction

from . import class_algebra, character_oracles, chartable, modular_criteria, regularity
from .errors import CacheMissError, CacheError, ResourceBudgetError, SymcharError
from .partitions import (
    Partition,
    enumerate_partitions,
    is_self_conjugate,
    pad_to,
    parse_partition,
    partition_text,
)

SCHEMA = "symchar-v1"

EXIT_OK = 0
EXIT_CHECK_FAILED = 1
EXIT_DOMAIN = 2
EXIT_BUDGET = 3
EXIT_USAGE = 64


class _Parser(argparse.ArgumentParser):
    """argparse with usage failures on exit code 64 instead of 2."""

    def error(self, message):
        self.print_usage(sys.stderr)
        self.exit(EXIT_USAGE, f"{self.prog}: error: {message}\n")


def _positive_int(text: str) -> int:
    value = int(text)
    if value < 1:
        raise argparse.ArgumentTypeError(f"must be >= 1, got {value}")
    return value


def _progress(message: str) -> None:
    print(message, file=sys.stderr, flush=True)


# --- payload helpers: integers and Fractions as decimal strings ---


def _num(x) -> str:
    return str(Fraction(x))


def _ptext(mu) -> str:
    return partition_text(mu)


def _coeff_dict(element) -> dict:
    items = sorted(
        element.coeffs.items(),
        key=lambda kv: (kv[0].cycle_type, kv[0].split_sign or ""),
        reverse=True,
    )
    return {label.text: _num(coeff) for label, coeff in items}


def _quad(value) -> dict:
    return {"u": _num(value.u), "v": _num(value.v), "d": str(value.d)}


# --- output rendering ---


def _flatten(payload: dict, prefix: str = "") -> list[tuple[str, str]]:
    out = []
    for key, value in payload.items():
        name = f"{prefix}{key}"
        if isinstance(value, dict):
            out.extend(_flatten(value, f"{name}."))
        elif isinstance(value, list):
            out.append((name, "; ".join(json.dumps(v) if isinstance(v, (dict, list)) else str(v) for v in value)))
        else:
            out.append((name, "" if value is None else str(value)))
    return out


def _render_json(payload: dict) -> str:
    return json.dumps(payload, indent=2) + "\n"


def _render_text(payload: dict) -> str:
    lines = []
    for key, value in payload.items():
        if key == "schema":
            continue
        if isinstance(value, list) and value and isinstance(value[0], dict):
            lines.append(f"{key}:")
            for item in value:
                lines.append("  " + "  ".join(f"{k}={v}" for k, v in _flatten(item)))
        elif isinstance(value, dict):
            lines.append(f"{key}:")
            for k, v in _flatten(value):
                lines.append(f"  {k}: {v}")
        elif isinstance(value, list):
            lines.append(f"{key}: " + ", ".join(str(v) for v in value))
        else:
            lines.append(f"{key}: {value}")
    return "\n".join(lines) + "\n"


def _render_csv(payload: dict) -> str:
    buffer = io.StringIO()
    writer = csv.writer(buffer, lineterminator="\n")
    if "values" in payload and "row_labels" in payload and "col_labels" in payload:
        writer.writerow(["label", *payload["col_labels"]])
        for label, row in zip(payload["row_labels"], payload["values"]):
            writer.writerow([label, *row])
    elif "rows" in payload and isinstance(payload["rows"], list) and payload["rows"]:
        header = list(payload["rows"][0].keys())
        writer.writerow(header)
        for item in payload["rows"]:
            writer.writerow([item.get(k, "") for k in header])
    elif "coefficients" in payload and isinstance(payload["coefficients"], dict):
        writer.writerow(["class", "coefficient"])
        for label, coeff in payload["coefficients"].items():
            writer.writerow([label, coeff])
    else:
        writer.writerow(["key", "value"])
        for key, value in _flatten(payload):
            if key != "schema":
                writer.writerow([key, value])
    return buffer.getvalue()


_RENDERERS = {"json": _render_json, "text": _render_text, "csv": _render_csv}


def _emit(payload: dict, fmt: str) -> None:
    sys.stdout.write(_RENDERERS[fmt](payload))


# --- shared argument plumbing ---


def _parse_label(text: str, n: int) -> Partition:
    lam = parse_partition(text)
    if lam.n != n:
        # Character labels are never padded: (3) labels a character of S_3 only.
        from .errors import SizeMismatchError

        raise SizeMismatchError(
            f"label {text!r} is a partition of {lam.n}, not of n={n}"
        )
    return lam


def _parse_class(text: str, n: int) -> Partition:
    return pad_to(parse_partition(text), n)


def _parse_class_list(text: str, n: int) -> list[Partition]:
    return [_parse_class(piece, n) for piece in text.split(";") if piece.strip()]


def _resolve_cache_dir(args) -> str | None:
    return args.cache_dir or os.environ.get("SYMCHAR_CACHE_DIR") or None


def _acquire_table(n: int, args):
    cache_dir = _resolve_cache_dir(args)
    if cache_dir is None:
        return chartable.character_table(n, threads=args.threads)
    try:
        return chartable.load_table(n, cache_dir)
    except CacheMissError:
        pass
    except CacheError as exc:
        _progress(f"cache problem ({exc.kind}): {exc}; recomputing")
    table = chartable.character_table(n, threads=args.threads)
    chartable.save_table(table, cache_dir)
    return table


# --- subcommand handlers: return (payload, exit_code) ---


def _cmd_chartable(args):
    table = _acquire_table(args.n, args)
    payload = {"schema": SCHEMA, "n": str(args.n)}
    code = EXIT_OK
    if args.check:
        checks = {}
        names = (
            ["row-orthogonality", "column-orthogonality", "degrees", "conjugate-symmetry"]
            if args.check == "all"
            else [args.check]
        )
        runners = {
            "row-orthogonality": chartable.verify_row_orthogonality,
            "column-orthogonality": chartable.verify_column_orthogonality,
            "degrees": chartable.verify_degrees,
            "conjugate-symmetry": chartable.verify_conjugate_symmetry,
        }
        for name in names:
            checks[name] = runners[name](table)
        payload["checks"] = checks
        if not all(checks.values()):
            code = EXIT_CHECK_FAILED
        return payload, code
    if args.lam is not None and args.mu is not None:
        lam = _parse_label(args.lam, args.n)
        mu = _parse_class(args.mu, args.n)
        payload.update(
            {"lambda": _ptext(lam), "mu": _ptext(mu), "value": _num(table.value(lam, mu))}
        )
        return payload, code
    if args.lam is not None:
        lam = _parse_label(args.lam, args.n)
        payload["lambda"] = _ptext(lam)
        payload["rows"] = [
            {"class": _ptext(mu), "value": _num(table.value(lam, mu))} for mu in table.cols
        ]
        return payload, code
    payload["row_labels"] = [_ptext(lam) for lam in table.rows]
    payload["col_labels"] = [_ptext(mu) for mu in table.cols]
    payload["values"] = [[_num(v) for v in row] for row in table.values]
    return payload, code


def _cmd_central(args):
    payload = {"schema": SCHEMA, "n": str(args.n)}
    code = EXIT_OK
    if args.check:
        checks = {}
        if args.check in ("integrality", "all"):
            for lam in enumerate_partitions(args.n):
                for mu in enumerate_partitions(args.n):
                    chartable.central_character(lam, mu)  # raises if not integral
            checks["integrality"] = True
        if args.check in ("homomorphism", "all"):
            checks["homomorphism"] = class_algebra.verify_central_homomorphism(args.n)
        payload["checks"] = checks
        return payload, EXIT_OK if all(checks.values()) else EXIT_CHECK_FAILED
    lam = _parse_label(args.lam, args.n)
    payload["lambda"] = _ptext(lam)
    if args.mu is not None:
        mu = _parse_class(args.mu, args.n)
        payload["mu"] = _ptext(mu)
        payload["omega"] = _num(chartable.central_character(lam, mu))
        return payload, code
    payload["rows"] = [
        {"class": _ptext(mu), "omega": _num(chartable.central_character(lam, mu))}
        for mu in enumerate_partitions(args.n)
    ]
    return payload, code


def _cmd_structconst(args):
    n = args.n
    payload = {"schema": SCHEMA, "n": str(n), "algebra": args.algebra}
    if args.check:
        checks = {}
        if args.check == "square":
            checks["square"] = class_algebra.verify_transposition_square(n)
        elif args.check == "formula":
            failures = class_algebra.verify_coefficient_formula(n)
            payload["failures"] = failures
            checks["formula"] = not failures
        elif args.check == "an-counting":
            checks["an-counting"] = class_algebra.verify_an_counting(n)
        else:
            identities = class_algebra.verify_product_identities(n)
            if args.check == "all":
                checks.update(identities)
            else:
                checks[args.check] = identities[args.check]
        payload["checks"] = checks
        return payload, EXIT_OK if all(checks.values()) else EXIT_CHECK_FAILED
    if args.table:
        pairs = []
        if args.algebra == "Sn":
            table = class_algebra.sn_product_table(n)
            for (mu, nu), entry in table.items():
                pairs.append(
                    {
                        "mu": _ptext(mu),
                        "nu": _ptext(nu),
                        "coefficients": {
                            _ptext(rho): _num(c)
                            for rho, c in sorted(entry.items(), reverse=True)
                        },
                    }
                )
        else:
            table = class_algebra.an_product_table(n)
            for (x, y), entry in table.items():
                pairs.append(
                    {
                        "mu": x.text,
                        "nu": y.text,
                        "coefficients": {
                            label.text: _num(c)
                            for label, c in sorted(
                                entry.items(),
                                key=lambda kv: (kv[0].cycle_type, kv[0].split_sign or ""),
                                reverse=True,
                            )
                        },
                    }
                )
        payload["pairs"] = pairs
        return payload, EXIT_OK
    if args.mu is None or args.nu is None:
        raise SymcharError("structconst needs --mu and --nu (or --table / --check)")
    if args.algebra == "Sn":
        product = class_algebra.product_sn(
            parse_partition(args.mu), parse_partition(args.nu), n
        )
        payload.update({"mu": _ptext(pad_to(parse_partition(args.mu), n)),
                        "nu": _ptext(pad_to(parse_partition(args.nu), n))})
    else:
        x = class_algebra.parse_class_label(args.mu, n)
        y = class_algebra.parse_class_label(args.nu, n)
        product = class_algebra.product_an(x, y, n)
        payload.update({"mu": x.text, "nu": y.text})
    payload["coefficients"] = _coeff_dict(product)
    return payload, EXIT_OK


def _cmd_verify_generation(args):
    if args.kind in ("Xl", "Yl") and args.ell is None:
        raise SymcharError(f"kind {args.kind} requires --ell")
    result = class_algebra.verify_generation(args.kind, args.n, args.ell)
    payload = {
        "schema": SCHEMA,
        "kind": result["kind"],
        "ell": None if result["ell"] is None else str(result["ell"]),
        "n": str(result["n"]),
        "dimension": str(result["dimension"]),
        "target": str(result["target"]),
        "generates": result["generates"],
    }
    return payload, EXIT_OK if result["generates"] else EXIT_CHECK_FAILED


def _vanishing_family(args) -> list[Partition]:
    if args.classes:
        return _parse_class_list(args.classes, args.n)
    if args.family == "even-cycles":
        return character_oracles.even_length_cycle_classes(args.n)
    if args.family == "zl":
        if args.ell is None:
            raise SymcharError("family zl requires --ell")
        labels = class_algebra.generating_set("Zl", args.n, args.ell)
        return [label.cycle_type for label in labels]
    if args.family == "odd-regular":
        if args.ell is None:
            raise SymcharError("family odd-regular requires --ell")
        return character_oracles.odd_ell_prime_classes(args.n, args.ell, args.convention)
    raise SymcharError("give --family or --classes")


def _cmd_oracle_vanishing(args):
    payload = {"schema": SCHEMA, "n": str(args.n)}
    if args.family == "pair":
        _progress(f"streaming over partitions of {args.n}")
        certified = character_oracles.pair_certifies_vanishing(args.n)
        payload["classes"] = [
            _ptext(pad_to(Partition([2]), args.n)),
            _ptext(pad_to(Partition([4]), args.n)),
        ]
        payload["certified"] = certified
        return payload, EXIT_OK
    classes = _vanishing_family(args)
    witnesses = character_oracles.vanishing_counterexamples(args.n, classes)
    payload["classes"] = [_ptext(mu) for mu in classes]
    payload["counterexamples"] = [_ptext(lam) for lam in witnesses]
    payload["certified"] = not witnesses
    return payload, EXIT_OK


def _cmd_oracle_agreement(args):
    if args.classes:
        classes = _parse_class_list(args.classes, args.n)
    else:
        classes = character_oracles.regular_classes(args.n, args.ell, args.convention)
    pairs = character_oracles.agreement_kernel(args.n, classes)
    payload = {
        "schema": SCHEMA,
        "n": str(args.n),
        "classes": [_ptext(mu) for mu in classes],
        "pairs": [[_ptext(a), _ptext(b)] for a, b in pairs],
        "kernel_empty": not pairs,
    }
    return payload, EXIT_OK


def _search_payload(result) -> dict:
    return {
        "schema": SCHEMA,
        "n": str(result.n),
        "predicate": result.predicate,
        "size": str(result.size),
        "witness": None
        if result.witness is None
        else [_ptext(mu) for mu in result.witness],
        "exhaustive": result.exhaustive,
    }


def _cmd_search_cn(args):
    _progress(f"searching class subsets of size <= {args.max_size} at n={args.n}")
    result = character_oracles.min_vanishing_set(args.n, args.max_size)
    return _search_payload(result), EXIT_OK


def _cmd_search_bn(args):
    _progress(f"searching class subsets of size <= {args.max_size} at n={args.n}")
    result = character_oracles.min_distinguishing_set(args.n, args.max_size)
    return _search_payload(result), EXIT_OK


def _cmd_split_values(args):
    payload = {"schema": SCHEMA}
    checks = {}
    if args.lam is not None:
        lam = parse_partition(args.lam)
        plus, minus = character_oracles.split_values(lam)
        total = plus + minus
        payload.update(
            {
                "lambda": _ptext(lam),
                "class": _ptext(character_oracles.split_class_of(lam)),
                "values": [_quad(plus), _quad(minus)],
                "sum": _num(total.as_fraction()),
            }
        )
    if args.check_sums is not None:
        n = args.check_sums
        ok = True
        for lam in enumerate_partitions(n):
            if not is_self_conjugate(lam):
                continue
            plus, minus = character_oracles.split_values(lam)
            own = character_oracles.split_class_of(lam)
            hooks_count = len(own)
            eps = -1 if ((n - hooks_count) // 2) % 2 else 1
            total = (plus + minus).as_fraction()
            if total != eps or total != chartable.mn_value(lam, pad_to(own, n)):
                ok = False
        checks["sums"] = ok
    if args.check_orthogonality is not None:
        checks["orthogonality"] = character_oracles.verify_an_orthogonality(
            args.check_orthogonality
        )
    if checks:
        payload["checks"] = checks
    if args.lam is None and not checks:
        raise SymcharError(
            "split-values needs --lambda, --check-sums or --check-orthogonality"
        )
    code = EXIT_OK if all(checks.values()) else EXIT_CHECK_FAILED
    return payload, code


def _field_from(args) -> modular_criteria.FieldSpec:
    if args.algebraically_closed:
        return modular_criteria.FieldSpec(args.p, algebraically_closed=True)
    return modular_criteria.FieldSpec(args.p, args.k)


def _cmd_restriction(args):
    payload = {"schema": SCHEMA}
    if args.check_pairs is not None:
        ok = character_oracles.verify_restriction_pairs(args.check_pairs)
        payload.update({"n": str(args.check_pairs), "checks": {"pairs": ok}})
        return payload, EXIT_OK if ok else EXIT_CHECK_FAILED
    if args.lam is None:
        raise SymcharError("restriction needs --lambda (or --check-pairs)")
    lam = parse_partition(args.lam)
    payload["lambda"] = _ptext(lam)
    if args.mu is not None:
        mu = parse_partition(args.mu)
        payload["mu"] = _ptext(mu)
        payload["agree"] = character_oracles.restriction_agreement(lam, mu)
        return payload, EXIT_OK
    if args.p is None:
        raise SymcharError("restriction needs --mu (agreement) or --p (decomposability)")
    decision = modular_criteria.restriction_decomposable(lam, _field_from(args))
    payload["field"] = _field_from(args).text
    payload["decomposable"] = decision.decomposable
    payload["reasons"] = list(decision.reasons)
    return payload, EXIT_OK


def _cmd_fayers(args):
    payload = {"schema": SCHEMA}
    if args.check:
        if args.check != "fixture" and args.n is None:
            raise SymcharError(f"--check {args.check} requires --n")
        if args.check == "conjugation":
            ok = modular_criteria.verify_fayers_conjugation(args.n, args.p)
        elif args.check == "hook-coprime":
            ok = modular_criteria.verify_hook_coprime_simplicity(args.n, args.p)
        elif args.check == "diagonal":
            ok = modular_criteria.verify_diagonal_hook_implication(args.n, args.p)
        else:
            fixture = character_oracles.FIXTURE_D3_5
            ok = all(
                (sum(row) >= 2) == modular_criteria.fayers_reducible(lam, fixture.p)
                for lam, row in zip(fixture.row_labels, fixture.entries)
            )
        payload["checks"] = {args.check: ok}
        return payload, EXIT_OK if ok else EXIT_CHECK_FAILED
    if args.lam is None:
        raise SymcharError("fayers needs --lambda (or --check)")
    lam = parse_partition(args.lam)
    payload.update(
        {
            "lambda": _ptext(lam),
            "p": str(args.p),
            "reducible": modular_criteria.fayers_reducible(lam, args.p),
        }
    )
    return payload, EXIT_OK


def _cmd_hook_case(args):
    field = _field_from(args)
    payload = {"schema": SCHEMA, "n": str(args.n), "field": field.text}
    if args.check_agreement:
        ok = modular_criteria.verify_hook_case_agreement(args.n, field)
        payload["checks"] = {"agreement": ok}
        return payload, EXIT_OK if ok else EXIT_CHECK_FAILED
    if args.r is None:
        raise SymcharError("hook-case needs --r (or --check-agreement)")
    payload["r"] = str(args.r)
    payload["decomposable"] = modular_criteria.hook_case(args.n, args.r, field)
    return payload, EXIT_OK


def _cmd_regular_count(args):
    if args.checkpoints:
        try:
            checkpoints = [
                int(piece) for piece in args.checkpoints.split(",") if piece.strip()
            ]
        except ValueError as exc:
            raise SymcharError(f"bad --checkpoints value: {exc}") from exc
    else:
        checkpoints = [args.max_n]
    report = regularity.convergence_report(args.ell, checkpoints)
    series = regularity.regular_counts(args.ell, max(checkpoints))
    limit = regularity.hagis_limit(args.ell)
    payload = {
        "schema": SCHEMA,
        "ell": str(args.ell),
        "limit": repr(limit),
        "rows": [
            {
                "n": str(row.n),
                "count": str(series.values[row.n]),
                "partitions": str(series.p_values[row.n]),
                "normalized_log": repr(row.normalized_log),
                "gap": repr(row.gap),
            }
            for row in report
        ],
    }
    return payload, EXIT_OK


def _cmd_verify_fixture(args):
    fixture = character_oracles.FIXTURES[args.name]
    if args.perturb:
        row, col, delta = args.perturb
        fixture = character_oracles.perturbed_fixture(fixture, row, col, delta)
    report = character_oracles.verify_decomposition_fixture(fixture)
    consistent = (
        report.labels_ok
        and report.wedge_ok
        and report.solvable
        and report.integral
        and report.blocks_ok
        and report.rows_match
    )
    payload = {
        "schema": SCHEMA,
        "name": fixture.name,
        "consistent": consistent,
        "rows_distinct": report.rows_distinct,
        "checks": {
            "labels": report.labels_ok,
            "wedge": report.wedge_ok,
            "solvable": report.solvable,
            "integral": report.integral,
            "blocks": report.blocks_ok,
            "rows_match": report.rows_match,
        },
        "failures": list(report.failures),
    }
    return payload, EXIT_OK if report.ok else EXIT_CHECK_FAILED


# --- parser assembly ---


def _build_parser() -> _Parser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--cache-dir", default=None, help="table cache directory (or SYMCHAR_CACHE_DIR)")
    common.add_argument("--format", choices=sorted(_RENDERERS), default="json", help="output format")
    common.add_argument("--threads", type=_positive_int, default=1, help="worker cap for table rows")

    parser = _Parser(prog="symchar", description="Exact symmetric-group character computations.")
    sub = parser.add_subparsers(dest="command", required=True, metavar="SUBCOMMAND")

    p = sub.add_parser("chartable", parents=[common], help="character table, values and checks")
    p.add_argument("--n", type=_positive_int, required=True)
    p.add_argument("--lambda", dest="lam", default=None, help="character label (partition text)")
    p.add_argument("--mu", default=None, help="class label (partition text)")
    p.add_argument(
        "--check",
        choices=["row-orthogonality", "column-orthogonality", "degrees", "conjugate-symmetry", "all"],
        default=None,
    )
    p.set_defaults(handler=_cmd_chartable)

    p = sub.add_parser("central", parents=[common], help="central character values")
    p.add_argument("--n", type=_positive_int, required=True)
    p.add_argument("--lambda", dest="lam", default=None)
    p.add_argument("--mu", default=None)
    p.add_argument("--check", choices=["integrality", "homomorphism", "all"], default=None)
    p.set_defaults(handler=_cmd_central)

    p = sub.add_parser("structconst", parents=[common], help="class-sum products")
    p.add_argument("--n", type=_positive_int, required=True)
    p.add_argument("--mu", default=None)
    p.add_argument("--nu", default=None)
    p.add_argument("--algebra", choices=["Sn", "An"], default="Sn")
    p.add_argument("--table", action="store_true", help="emit the full product table")
    p.add_argument(
        "--check",
        choices=["square", "formula", "counting", "support", "parity", "an-counting", "all"],
        default=None,
    )
    p.set_defaults(handler=_cmd_structconst)

    p = sub.add_parser("verify-generation", parents=[common], help="closure dimension of a generating family")
    p.add_argument("--kind", choices=["Xl", "Yl", "XAn"], required=True)
    p.add_argument("--n", type=_positive_int, required=True)
    p.add_argument("--ell", type=int, default=None)
    p.set_defaults(handler=_cmd_verify_generation)

    p = sub.add_parser("oracle-vanishing", parents=[common], help="common-vanishing counterexample search")
    p.add_argument("--n", type=_positive_int, required=True)
    p.add_argument("--family", choices=["even-cycles", "zl", "odd-regular", "pair"], default=None)
    p.add_argument("--ell", type=int, default=None)
    p.add_argument("--convention", choices=["order", "parts"], default="order")
    p.add_argument("--classes", default=None, help="semicolon-separated class labels")
    p.set_defaults(handler=_cmd_oracle_vanishing)

    p = sub.add_parser("oracle-agreement", parents=[common], help="characters agreeing on a class family")
    p.add_argument("--n", type=_positive_int, required=True)
    p.add_argument("--ell", type=int, default=None)
    p.add_argument("--convention", choices=["order", "parts"], default="order")
    p.add_argument("--classes", default=None, help="semicolon-separated class labels")
    p.set_defaults(handler=_cmd_oracle_agreement)

    p = sub.add_parser("search-cn", parents=[common], help="smallest vanishing-certificate class set")
    p.add_argument("--n", type=_positive_int, required=True)
    p.add_argument("--max-size", type=_positive_int, default=3)
    p.set_defaults(handler=_cmd_search_cn)

    p = sub.add_parser("search-bn", parents=[common], help="smallest distinguishing class set")
    p.add_argument("--n", type=_positive_int, required=True)
    p.add_argument("--max-size", type=_positive_int, default=3)
    p.set_defaults(handler=_cmd_search_bn)

    p = sub.add_parser("split-values", parents=[common], help="constituent values at split classes")
    p.add_argument("--lambda", dest="lam", default=None)
    p.add_argument("--check-sums", type=_positive_int, default=None, metavar="N")
    p.add_argument("--check-orthogonality", type=_positive_int, default=None, metavar="N")
    p.set_defaults(handler=_cmd_split_values)

    p = sub.add_parser("restriction", parents=[common], help="restriction agreement and decomposability")
    p.add_argument("--lambda", dest="lam", default=None)
    p.add_argument("--mu", default=None)
    p.add_argument("--p", type=int, default=None)
    p.add_argument("--k", type=_positive_int, default=1)
    p.add_argument("--algebraically-closed", action="store_true")
    p.add_argument("--check-pairs", type=_positive_int, default=None, metavar="N")
    p.set_defaults(handler=_cmd_restriction)

    p = sub.add_parser("fayers", parents=[common], help="hook-length reducibility test")
    p.add_argument("--lambda", dest="lam", default=None)
    p.add_argument("--p", type=int, required=True)
    p.add_argument("--n", type=_positive_int, default=None)
    p.add_argument("--check", choices=["conjugation", "hook-coprime", "diagonal", "fixture"], default=None)
    p.set_defaults(handler=_cmd_fayers)

    p = sub.add_parser("hook-case", parents=[common], help="closed form for hook labels")
    p.add_argument("--n", type=_positive_int, required=True)
    p.add_argument("--r", type=int, default=None)
    p.add_argument("--p", type=int, required=True)
    p.add_argument("--k", type=_positive_int, default=1)
    p.add_argument("--algebraically-closed", action="store_true")
    p.add_argument("--check-agreement", action="store_true")
    p.set_defaults(handler=_cmd_hook_case)

    p = sub.add_parser("regular-count", parents=[common], help="regular-partition counts vs the limit")
    p.add_argument("--ell", type=int, required=True)
    p.add_argument("--max-n", type=_positive_int, required=True)
    p.add_argument("--checkpoints", default=None, help="comma-separated n values")
    p.set_defaults(handler=_cmd_regular_count)

    p = sub.add_parser("verify-fixture", parents=[common], help="check a pinned decomposition matrix")
    p.add_argument(
        "name",
        nargs="?",
        default="d3_5",
        choices=sorted(character_oracles.FIXTURES),
    )
    p.add_argument("--perturb", nargs=3, type=int, default=None, metavar=("ROW", "COL", "DELTA"))
    p.set_defaults(handler=_cmd_verify_fixture)

    return parser


def main(argv=None) -> int:
    parser = _build_parser()
    args = parser.parse_args(argv)
    try:
        payload, code = args.handler(args)
    except ResourceBudgetError as exc:
        _emit({"schema": SCHEMA, "error": {"kind": exc.kind, "message": str(exc)}}, args.format)
        return EXIT_BUDGET
    except SymcharError as exc:
        _emit({"schema": SCHEMA, "error": {"kind": exc.kind, "message": str(exc)}}, args.format)
        return EXIT_DOMAIN
    _emit(payload, args.format)
    return code


if __name__ == "__main__":
    sys.exit(main())
