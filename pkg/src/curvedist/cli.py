"""Interactive REPL and batch command line.

With no arguments the interactive loop starts, mirroring the classic
prompts::

    Input top identifications: 1,6,11,4,3,2,7,0,5,9,8,7
    Input bottom identifications: 0,5,10,3,2,1,6,11,4,10,9,8
    What would you like to calculate? faces

Batch mode takes the same computations as flags
(``curvedist --top ... --bottom ... --command distance``) and three
subcommands: ``ilp`` (constraint system of a template), ``pipeline``
(the full weights-to-distance sweep) and ``catalog`` (query a saved
sweep).  ``--json`` switches any of them to a structured payload.

Exit codes: 0 success, 1 invalid input, 2 broken internal invariant.
"""

from __future__ import annotations

import argparse
import json
import sys

from . import __version__
from ._kernels import backend_name
from .catalog import read_catalog, write_catalog
from .distance import DistanceResult, candidate_report, distance
from .errors import CurveDistError, InputError
from .faces import FaceSet, face_vector, faces, genus_of
from .gluing import GluingResult, enumerate_gluings
from .ilp import ConstraintSystem, enumerate_solutions, minimize
from .ladder import (
    CharacteristicMatrix,
    Ladder,
    beta_components,
    characteristic_matrix,
    parse_ladder,
)
from .template import (
    distance4_weights,
    pipeline,
    render_template,
    resolve_template,
    template_constraints,
)

PROMPT_TOP = "Input top identifications: "
PROMPT_BOTTOM = "Input bottom identifications: "
PROMPT_CALC = "What would you like to calculate? "
PROMPT_SHEAR = "Would you like to shear this multi-curve? "

VERBS = ("genus", "distance", "curves", "matrix", "faces", "perm")


# --- rendering (shared by REPL and batch) ---------------------------------

def render_matrix(matrix: CharacteristicMatrix) -> str:
    return "\n".join(
        "[" + ", ".join(str(x) for x in row) + "]" for row in matrix
    )


def _tuple_str(labels) -> str:
    return "(" + ", ".join(str(x) for x in labels) + ")"


def render_faces(face_set: FaceSet) -> str:
    census = face_vector(face_set)
    vec = "{" + ", ".join(f"{d}: {n}" for d, n in census.items()) + "}"
    lines = [f"Vector solution:  {vec}"]
    lines += [_tuple_str(f.labels) for f in face_set]
    return "\n".join(lines)


def render_genus(g: int) -> str:
    return f"Genus:  {g}"


def render_curves(report) -> str:
    blocks = [
        f"Path {list(pair.circuit.labels)}\nCurve genus:  {pair.fill_genus}"
        for pair in report
    ]
    return "\n\n".join(blocks)


def render_distance(result: DistanceResult) -> str:
    return f"Distance:  {result.verdict}"


def render_perm(results: list[GluingResult]) -> str:
    blocks = []
    n = 0
    for g in results:
        if not g.single_curve:
            continue
        n += 1
        verdict = g.verdict.verdict if g.verdict else "?"
        blocks.append(
            f"Curve {n} Distance: {verdict}\n"
            f"{list(g.ladder.top)}\n{list(g.ladder.bottom)}"
        )
    if not blocks:
        return "No single-curve gluings."
    return "\n\n".join(blocks)


# --- structured payloads ---------------------------------------------------

def _distance_payload(result: DistanceResult) -> dict:
    witness = None
    if result.witness is not None:
        witness = {
            "path": list(result.witness.circuit.labels),
            "fill_genus": result.witness.fill_genus,
        }
    return {
        "distance": result.verdict,
        "genus": result.genus,
        "ambient_genus": result.ambient_genus,
        "k": result.k,
        "candidates": result.n_candidates,
        "witness": witness,
    }


def payload_for(command: str, ladder: Ladder, ambient: int | None) -> dict:
    payload: dict = {"command": command, "k": ladder.k,
                     "top": list(ladder.top), "bottom": list(ladder.bottom)}
    if command == "genus":
        payload["genus"] = genus_of(faces(ladder))
    elif command == "matrix":
        payload["rows"] = [list(r) for r in characteristic_matrix(ladder)]
    elif command == "faces":
        fs = faces(ladder)
        payload["vector"] = {str(d): n for d, n in face_vector(fs).items()}
        payload["faces"] = [list(f.labels) for f in fs]
    elif command == "curves":
        payload["curves"] = [
            {
                "path": list(p.circuit.labels),
                "fill_genus": p.fill_genus,
                "status": p.status.lower(),
            }
            for p in candidate_report(ladder)
        ]
    elif command == "distance":
        payload.update(_distance_payload(distance(ladder, ambient)))
    elif command == "perm":
        payload["gluings"] = [
            {
                "offset": g.offset,
                "single_curve": g.single_curve,
                "distance": g.verdict.verdict if g.verdict else None,
                "top": list(g.ladder.top),
                "bottom": list(g.ladder.bottom),
            }
            for g in enumerate_gluings(ladder, classify=True,
                                       ambient_genus=ambient)
        ]
    else:
        raise InputError(f"unknown command {command!r}")
    return payload


def text_for(command: str, ladder: Ladder, ambient: int | None) -> str:
    if command == "genus":
        return render_genus(genus_of(faces(ladder)))
    if command == "matrix":
        return render_matrix(characteristic_matrix(ladder))
    if command == "faces":
        return render_faces(faces(ladder))
    if command == "curves":
        return render_curves(candidate_report(ladder))
    if command == "distance":
        return render_distance(distance(ladder, ambient))
    if command == "perm":
        return render_perm(
            enumerate_gluings(ladder, classify=True, ambient_genus=ambient)
        )
    raise InputError(f"unknown command {command!r}")


# --- REPL ------------------------------------------------------------------

def repl(stdin=None, stdout=None) -> int:
    stdin = stdin or sys.stdin
    stdout = stdout or sys.stdout

    def say(text=""):
        print(text, file=stdout)

    def ask(prompt) -> str | None:
        stdout.write(prompt)
        stdout.flush()
        line = stdin.readline()
        if not line:
            return None
        return line.strip()

    say(f"curvedist {__version__} ({backend_name()} kernels); "
        f"'quit' exits, 'input' loads a new pair.")
    ladder = _repl_load(ask, say)
    if ladder is _EOF:
        return 0
    while True:
        verb = ask(PROMPT_CALC)
        if verb is None or verb == "quit":
            return 0
        verb = verb.strip().lower()
        if verb == "":
            continue
        if verb == "input":
            ladder = _repl_load(ask, say)
            if ladder is _EOF:
                return 0
            continue
        if verb not in VERBS:
            say(f"Commands: {' | '.join(VERBS)} | input | quit")
            continue
        if ladder is None:
            say("No ladder loaded; use 'input' first.")
            continue
        try:
            say(text_for(verb, ladder, None))
        except InputError as exc:
            say(f"error: {exc}")


_EOF = object()


def _repl_load(ask, say):
    """Prompt for a ladder; shear offer on multi-curves.

    Returns a Ladder, None (multi-curve kept unresolved), or _EOF.
    """
    while True:
        top = ask(PROMPT_TOP)
        if top is None:
            return _EOF
        bottom = ask(PROMPT_BOTTOM)
        if bottom is None:
            return _EOF
        try:
            ladder = parse_ladder(top, bottom)
        except InputError as exc:
            say(f"error: {exc}")
            continue
        trav = beta_components(ladder)
        if trav.single_curve:
            return ladder
        say(f"This identification gives a multi-curve "
            f"({len(trav.cycles)} components).")
        answer = ask(PROMPT_SHEAR)
        if answer is None:
            return _EOF
        if answer.strip().lower() in ("y", "yes"):
            say(render_perm(enumerate_gluings(ladder, classify=True)))
        return None


# --- batch -----------------------------------------------------------------

def _read_ladder_file(path: str) -> Ladder:
    rows = []
    with open(path, encoding="utf-8") as fh:
        for raw in fh:
            line = raw.split("#", 1)[0].strip()
            if line:
                rows.append(line)
    if len(rows) != 2:
        raise InputError(
            f"{path}: expected two rows (top, bottom), found {len(rows)}"
        )
    return parse_ladder(rows[0], rows[1])


def _emit(text: str, out: str | None):
    if out:
        with open(out, "w", encoding="utf-8") as fh:
            fh.write(text if text.endswith("\n") else text + "\n")
    else:
        print(text)


def _batch(argv) -> int:
    parser = argparse.ArgumentParser(
        prog="curvedist",
        description="Curve-complex distance for filling pairs "
                    "(no arguments starts the interactive loop)",
    )
    parser.add_argument("--top", help="comma-separated top identifications")
    parser.add_argument("--bottom", help="comma-separated bottom identifications")
    parser.add_argument("--input", metavar="FILE",
                        help="file with the two rows instead of --top/--bottom")
    parser.add_argument("--command", required=True, choices=VERBS)
    parser.add_argument("--ambient-genus", type=int, default=None)
    parser.add_argument("--json", action="store_true")
    parser.add_argument("--out", metavar="FILE")
    parser.add_argument("--version", action="version",
                        version=f"curvedist {__version__}")
    args = parser.parse_args(argv)

    if args.input:
        if args.top or args.bottom:
            raise InputError("give either --input or --top/--bottom, not both")
        ladder = _read_ladder_file(args.input)
    elif args.top and args.bottom:
        ladder = parse_ladder(args.top, args.bottom)
    else:
        raise InputError("need --top and --bottom (or --input FILE)")

    if args.json:
        payload = payload_for(args.command, ladder, args.ambient_genus)
        _emit(json.dumps(payload, indent=2, sort_keys=True), args.out)
    else:
        _emit(text_for(args.command, ladder, args.ambient_genus), args.out)
    return 0


def _constraints_payload(system: ConstraintSystem) -> dict:
    return {
        "inequalities": [list(i) for i in system.inequalities],
        "threshold": system.threshold,
        "balance": [list(side) for side in system.balance]
        if system.balance else None,
        "n_vars": system.n_vars,
    }


def _ilp(argv) -> int:
    parser = argparse.ArgumentParser(prog="curvedist ilp")
    parser.add_argument("template",
                        help="bundled template name or path to a template file")
    group = parser.add_mutually_exclusive_group(required=True)
    group.add_argument("--minimize", action="store_true")
    group.add_argument("--objective", type=int, metavar="P")
    parser.add_argument("--json", action="store_true")
    parser.add_argument("--out", metavar="FILE")
    args = parser.parse_args(argv)

    template = resolve_template(args.template)
    system = template_constraints(template)
    payload: dict = {
        "command": "ilp",
        "template": template.name,
        "constraints": _constraints_payload(system),
    }
    lines = [system.render()]
    if args.minimize:
        p_star, solutions = minimize(system)
        payload["minimize"] = {
            "p_star": p_star,
            "solutions": [list(s) for s in solutions],
        }
        lines.append(f"P* = {p_star}")
        lines += [str(list(s)) for s in solutions]
    else:
        solutions = enumerate_solutions(system, args.objective)
        payload["objective"] = {
            "p": args.objective,
            "count": len(solutions),
            "solutions": [list(s) for s in solutions],
        }
        lines.append(f"P = {args.objective}: {len(solutions)} solutions")
        lines += [str(list(s)) for s in solutions]
    if args.json:
        _emit(json.dumps(payload, indent=2, sort_keys=True), args.out)
    else:
        _emit("\n".join(lines), args.out)
    return 0


def _pipeline(argv) -> int:
    parser = argparse.ArgumentParser(prog="curvedist pipeline")
    parser.add_argument("template")
    parser.add_argument("--p-min", type=int, required=True)
    parser.add_argument("--p-max", type=int, required=True)
    parser.add_argument("--circuit-cap", type=int, default=None)
    parser.add_argument("--json", action="store_true")
    parser.add_argument("--out", metavar="FILE",
                        help="write a catalog file instead of stdout text")
    parser.add_argument("--append", action="store_true",
                        help="append to an existing catalog")
    args = parser.parse_args(argv)
    if args.p_min > args.p_max:
        raise InputError("--p-min must not exceed --p-max")

    template = resolve_template(args.template)
    records = pipeline(template, args.p_min, args.p_max,
                       circuit_cap=args.circuit_cap)
    if args.out:
        write_catalog(args.out, template, records, append=args.append)
        print(f"wrote {len(records)} records to {args.out}")
        return 0
    if args.json:
        payload = {
            "command": "pipeline",
            "template": template.name,
            "p_min": args.p_min,
            "p_max": args.p_max,
            "records": [
                {
                    "p": r.p,
                    "weights": list(r.weights),
                    "offset": r.offset,
                    "k": r.k,
                    "distance": r.distance,
                }
                for r in records
            ],
        }
        print(json.dumps(payload, indent=2, sort_keys=True))
        return 0
    from .catalog import format_record
    for rec in records:
        print(format_record(rec))
    d4 = sorted(distance4_weights(records))
    print(f"distance-4 weight vectors: {len(d4)}")
    for w in d4:
        print(str(list(w)))
    return 0


def _catalog(argv) -> int:
    parser = argparse.ArgumentParser(prog="curvedist catalog")
    parser.add_argument("file")
    parser.add_argument("--p", type=int, default=None)
    parser.add_argument("--distance", choices=("2", "3", "4+"), default=None)
    parser.add_argument("--weights-only", action="store_true",
                        help="print distinct weight vectors instead of records")
    parser.add_argument("--json", action="store_true")
    args = parser.parse_args(argv)

    header, records = read_catalog(args.file)
    if args.p is not None:
        records = [r for r in records if r.p == args.p]
    if args.distance is not None:
        records = [r for r in records if r.distance == args.distance]
    if args.json:
        payload = {
            "command": "catalog",
            "header": header,
            "records": [
                {
                    "p": r.p,
                    "weights": list(r.weights),
                    "offset": r.offset,
                    "k": r.k,
                    "distance": r.distance,
                }
                for r in records
            ],
        }
        print(json.dumps(payload, indent=2, sort_keys=True))
        return 0
    if args.weights_only:
        for w in sorted({r.weights for r in records}):
            print(str(list(w)))
        return 0
    from .catalog import format_record
    for rec in records:
        print(format_record(rec))
    return 0


def _show_template(argv) -> int:
    parser = argparse.ArgumentParser(prog="curvedist template")
    parser.add_argument("template")
    args = parser.parse_args(argv)
    print(render_template(resolve_template(args.template)), end="")
    return 0


_SUBCOMMANDS = {
    "repl": lambda argv: repl(),
    "ilp": _ilp,
    "pipeline": _pipeline,
    "catalog": _catalog,
    "template": _show_template,
}


def main(argv=None) -> int:
    argv = list(sys.argv[1:]) if argv is None else list(argv)
    try:
        if not argv:
            return repl()
        if argv[0] in _SUBCOMMANDS:
            return _SUBCOMMANDS[argv[0]](argv[1:])
        return _batch(argv)
    except InputError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1
    except OSError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1
    except CurveDistError as exc:
        print(f"internal error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
