"""Command-line front end.

One verb per invocation; structures come in as JSON (inline, from a
file, or from stdin with ``-``) and results go out as JSON (default) or
as readable tables.  Exit codes: 0 on success, 1 on domain errors
(invalid structures, inconsistent systems, failed verification), 2 on
parse errors and bad usage.
"""

import argparse
import json
import os
import sys
from fractions import Fraction

from .exactnum import ExactSqrtError, Matrix, Polynomial, scalar_to_json
from .linclass import (
    LinearPair,
    bivector_of,
    classification_to_json,
    classify,
    decompose,
)
from .multivec import MultiVectorField, modular_field, is_poisson, schouten
from .goldens import load_goldens
from .quaddef import (
    OTHER,
    P2Point,
    QuadraticPair,
    deform_check,
    enumerate_orbit_pairs,
    jordan_family_of,
    orbit_count,
    p2_orbit_rep,
    solution_polys,
    solve_F,
    t_of_v,
)
from .verify import DEFAULT_SEED, run_verification


class ParseError(Exception):
    """Structurally malformed input (not a domain violation)."""


def _read_payload(raw: str) -> dict:
    if raw == "-":
        text = sys.stdin.read()
    elif os.path.exists(raw):
        with open(raw, "r", encoding="utf-8") as fh:
            text = fh.read()
    else:
        text = raw
    try:
        data = json.loads(text)
    except json.JSONDecodeError as exc:
        raise ParseError("input is not valid JSON: %s" % exc) from exc
    if not isinstance(data, dict):
        raise ParseError("expected a JSON object at the top level")
    return data


def _pair_from(data: dict) -> LinearPair:
    if "k" not in data or "A" not in data:
        raise ParseError('a linear structure needs "k" and "A" fields')
    return LinearPair.from_json(data)


def _field_from(data: dict) -> MultiVectorField:
    """Accept either a pair {"k","A"} or an explicit field encoding."""
    if "k" in data and "A" in data:
        return bivector_of(_pair_from(data))
    if "components" in data:
        return MultiVectorField.from_json(data)
    raise ParseError('expected a pair {"k","A"} or a field {"n","grade",'
                     '"components"}')


def _matrix_from(data, key: str) -> Matrix:
    if key not in data:
        raise ParseError('missing "%s" field' % key)
    return Matrix.from_json(data[key])


def _emit(args, json_obj, table_lines):
    if args.format == "json":
        print(json.dumps(json_obj, indent=2))
    else:
        for line in table_lines:
            print(line)


def _space_report(space):
    if space.is_empty:
        return {"empty": True}, ["no solutions"]
    particular, basis = solution_polys(space)
    report = {
        "empty": False,
        "particular": particular.to_json(),
        "basis": [b.to_json() for b in basis],
    }
    lines = ["particular: %s" % particular]
    lines += ["basis[%d]: %s" % (i, b) for i, b in enumerate(basis)]
    if not basis:
        lines.append("basis: (none)")
    return report, lines


# ---------------------------------------------------------------------------
# verbs
# ---------------------------------------------------------------------------


def _rows_str(m: Matrix) -> str:
    return "  ".join(
        "[%s]" % ", ".join(str(v) for v in row) for row in m.rows
    )


def _cmd_classify(args):
    pair = _pair_from(_read_payload(args.input))
    label, witness = classify(pair)
    report = classification_to_json(label, witness)
    lines = ["case: %d" % label.case_id]
    if label.a_squared is not None:
        lines.append("a_squared: %s" % label.a_squared)
    lines.append("witness R: %s" % _rows_str(witness.base))
    lines.append("witness d: (%s)" % ", ".join(str(v) for v in witness.scales))
    _emit(args, report, lines)
    return 0


def _cmd_decompose(args):
    pi = _field_from(_read_payload(args.input))
    dec = decompose(pi)
    report = dec.to_json()
    lines = [
        "k: (%s)" % ", ".join(str(v) for v in dec.k),
        "curl_free: %s" % dec.curl_free,
        "square_closed: %s" % str(dec.square_closed).lower(),
        "twist_commutes: %s" % str(dec.twist_commutes).lower(),
    ]
    _emit(args, report, lines)
    return 0


def _cmd_bracket(args):
    data = _read_payload(args.input)
    for key in ("u", "v"):
        if not isinstance(data.get(key), dict):
            raise ParseError('bracket needs "u" and "v" objects')
    out = schouten(_field_from(data["u"]), _field_from(data["v"]))
    _emit(args, out.to_json(), [str(out)])
    return 0


def _cmd_modular(args):
    pi = _field_from(_read_payload(args.input))
    out = modular_field(pi)
    _emit(args, out.to_json(), [str(out)])
    return 0


def _cmd_is_poisson(args):
    pi = _field_from(_read_payload(args.input))
    verdict = is_poisson(pi)
    _emit(args, {"is_poisson": verdict},
          ["is_poisson: %s" % str(verdict).lower()])
    return 0


def _cmd_deform_solve(args):
    data = _read_payload(args.input)
    if "pair" not in data:
        raise ParseError('deform-solve needs a "pair" field')
    pair = _pair_from(data["pair"])
    twist = _matrix_from(data, "K")
    space = solve_F(pair, twist)
    report, lines = _space_report(space)
    _emit(args, report, lines)
    return 0


def _cmd_deform_check(args):
    data = _read_payload(args.input)
    if "pair" not in data:
        raise ParseError('deform-check needs a "pair" field')
    pair = _pair_from(data["pair"])
    twist = _matrix_from(data, "K")
    if "F" not in data:
        raise ParseError('deform-check needs an "F" field')
    cubic = Polynomial.from_json(data["F"])
    qp = QuadraticPair(twist, cubic)
    verdict = deform_check(pair, qp)
    _emit(args, {"deforms": verdict}, ["deforms: %s" % str(verdict).lower()])
    return 0


def _cmd_orbits(args):
    data = _read_payload(args.input)
    twist = _matrix_from(data, "K")
    family = jordan_family_of(twist)
    if family.tag == OTHER:
        raise ValueError(
            "matrix is outside the three structured families "
            "(eigenvalue report: %s)" % (family.eigen_report,))
    report = {
        "family": family.tag,
        "lambdas": [scalar_to_json(v) for v in family.lambdas],
        "orbit_count": orbit_count(family),
        "orbits": [of.to_json() for of in enumerate_orbit_pairs(family)],
    }
    lines = [
        "family: %s" % family.tag,
        "lambdas: (%s)" % ", ".join(str(v) for v in family.lambdas),
        "orbit_count: %d" % orbit_count(family),
    ]
    for of in enumerate_orbit_pairs(family):
        rep = ", ".join(str(v) for v in of.rep.unit)
        lines.append("orbit %d: rep (%s)" % (of.rep.orbit_index, rep))
        lines.append("  K = %s" % _rows_str(of.twist))
        lines.append("  cubics = %s" % "; ".join(str(c) for c in of.cubics))
    if "point" in data:
        point = P2Point.from_json(data["point"])
        rep = p2_orbit_rep(family, point)
        point_report = rep.to_json()
        try:
            unit = point.unit_vector()
            point_report["unit"] = [scalar_to_json(v) for v in unit]
        except ExactSqrtError:
            rotation = t_of_v(point, tolerance=args.tolerance)
            point_report["unit"] = [float(v) for v in rotation[2]]
        report["point"] = point_report
        lines.append("point orbit: %d" % rep.orbit_index)
    _emit(args, report, lines)
    return 0


def _cmd_verify_paper(args):
    goldens = load_goldens(args.goldens) if args.goldens else None
    seed = int(os.environ.get("POISSON_FORGE_SEED", DEFAULT_SEED))
    items = run_verification(goldens=goldens, seed=seed)
    if args.format == "json":
        print(json.dumps([it.to_json() for it in items], indent=2))
    else:
        for it in items:
            print("%s  %s: %s" % (it.status, it.item, it.details))
        passed = sum(1 for it in items if it.passed)
        print("%d/%d items passed" % (passed, len(items)))
    return 0 if all(it.passed for it in items) else 1


_HANDLERS = {
    "classify": _cmd_classify,
    "decompose": _cmd_decompose,
    "bracket": _cmd_bracket,
    "modular": _cmd_modular,
    "is-poisson": _cmd_is_poisson,
    "deform-solve": _cmd_deform_solve,
    "deform-check": _cmd_deform_check,
    "orbits": _cmd_orbits,
    "verify-paper": _cmd_verify_paper,
}


def _build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="poisson-forge",
        description="Exact calculus for linear Poisson structures on R^3 "
                    "and their quadratic deformations.",
    )
    sub = parser.add_subparsers(dest="verb", required=True)

    def add(verb, needs_input, help_text):
        p = sub.add_parser(verb, help=help_text)
        if needs_input:
            p.add_argument("input",
                           help="inline JSON, a file path, or - for stdin")
        default_format = "table" if verb == "verify-paper" else "json"
        p.add_argument("--format", choices=("json", "table"),
                       default=default_format)
        p.add_argument("--tolerance", type=float, default=1e-12,
                       help="residual bound for floating fallbacks")
        if verb == "verify-paper":
            p.add_argument("--goldens", default=None,
                           help="replacement expected-value table (JSON file)")
        return p

    add("classify", True, "name the standard form of a linear structure")
    add("decompose", True, "split a linear bivector into twist + curl-free part")
    add("bracket", True, "Schouten bracket of two fields")
    add("modular", True, "modular vector field of a bivector")
    add("is-poisson", True, "does the self-bracket vanish?")
    add("deform-solve", True, "cubic potentials compatible with a twist")
    add("deform-check", True, "is (K, F) a deformation of the pair?")
    add("orbits", True, "orbit data of a twist under the rotation group")
    add("verify-paper", False, "recompute and check every published result")
    return parser


def main(argv=None) -> int:
    parser = _build_parser()
    args = parser.parse_args(argv)
    handler = _HANDLERS[args.verb]
    try:
        return handler(args)
    except ParseError as exc:
        print("parse error: %s" % exc, file=sys.stderr)
        return 2
    except (KeyError, TypeError) as exc:
        print("parse error: malformed input (%s)" % exc, file=sys.stderr)
        return 2
    except ValueError as exc:
        print("error: %s" % exc, file=sys.stderr)
        return 1


if __name__ == "__main__":
    sys.exit(main())
