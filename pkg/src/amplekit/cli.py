"""Command-line front end.

Every subcommand produces a report with the keys ``command``, ``inputs``,
``verdicts``, ``witnesses`` and ``timing``. Exit status: 0 when the analysis
ran (whatever the verdicts), 2 for bad input, 3 when an internal consistency
check fails.
"""
from __future__ import annotations

import argparse
import hashlib
import json
import os
import sys
import time
from pathlib import Path

from . import __version__
from .ample import (
    check_full,
    check_left_ample_in,
    check_rich,
    check_right_ample_in,
    check_ultra_rich,
    strict_left_evidence,
    strict_right_evidence,
)
from .cayley import parse_cayley, render_cayley
from .core import FiniteSemigroup, InverseFailure, InverseStructure, detect_inverse_structure
from .corpus import TRIPLE_LIMIT, inverse_corpus, subsemigroup_pairs, triple_cases
from .dominion import ZigzagCertificate, generated_inverse, verify_zigzag
from .errors import AmplekitError, InvariantViolation, ParseError
from .groups import group_by_name
from .hulls import amalgam_report, extension_check, hat_amalgam, inverse_hull, prime_set
from .rees import (
    brandt,
    check_triple_ample,
    check_triple_rich,
    rees_matrix,
    strict_ideal_pair,
    two_index_family,
)
from .representations import (
    DEFAULT_SEED,
    check_two_sided_rho_hat,
    intrinsic_matches,
    invariant_subsets,
    lambda_hat,
    restriction_is_homomorphic,
    rho_hat,
)

EXIT_OK, EXIT_INPUT, EXIT_INTERNAL = 0, 2, 3


class InputError(Exception):
    """Bad command-line input (missing file, unknown element, ...)."""


# --- input helpers ---------------------------------------------------------------------------

def _read(path: str) -> bytes:
    if path == "-":
        return sys.stdin.buffer.read()
    try:
        return Path(path).read_bytes()
    except OSError as exc:
        raise InputError(f"cannot read {path}: {exc.strerror or exc}") from None


def _digest(data: bytes) -> str:
    return "sha256:" + hashlib.sha256(data).hexdigest()


class Inputs:
    """Loaded inputs and their digests, recorded in order of use."""

    def __init__(self):
        self.digests: dict[str, str] = {}

    def semigroup(self, path: str) -> FiniteSemigroup:
        data = _read(path)
        self.digests[path] = _digest(data)
        try:
            return parse_cayley(data.decode("utf-8"))
        except UnicodeDecodeError:
            raise InputError(f"{path} is not UTF-8 text") from None

    def text(self, path: str) -> str:
        data = _read(path)
        self.digests[path] = _digest(data)
        return data.decode("utf-8")

    def generated(self, label: str, S: FiniteSemigroup):
        self.digests[label] = _digest(render_cayley(S).encode())


def split_tokens(text: str) -> list[str]:
    """Split on commas outside parentheses and braces."""
    out, depth, cur = [], 0, []
    for ch in text:
        if ch in "({[":
            depth += 1
        elif ch in ")}]":
            depth -= 1
        if ch == "," and depth == 0:
            out.append("".join(cur).strip())
            cur = []
        else:
            cur.append(ch)
    tail = "".join(cur).strip()
    if tail or out:
        out.append(tail)
    if any(t == "" for t in out):
        raise InputError(f"empty entry in list {text!r}")
    return out


def parse_subset(S: FiniteSemigroup, text: str) -> list[int]:
    try:
        return sorted({S.index(tok) for tok in split_tokens(text)})
    except AmplekitError as exc:
        raise InputError(str(exc)) from None


def parse_mapping(T1: FiniteSemigroup, T2: FiniteSemigroup, text: str) -> dict[int, int]:
    out = {}
    for no, raw in enumerate(text.split("\n"), start=1):
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        if "->" not in line:
            raise ParseError("expected 'src -> dst'", no, 1)
        src, dst = (part.strip() for part in line.split("->", 1))
        try:
            a, b = T1.index(src), T2.index(dst)
        except AmplekitError as exc:
            raise ParseError(str(exc), no, 1) from None
        if a in out and out[a] != b:
            raise ParseError(f"{src} mapped twice", no, 1)
        out[a] = b
    return out


def _inverse(S: FiniteSemigroup, label: str) -> InverseStructure:
    res = detect_inverse_structure(S)
    if isinstance(res, InverseFailure):
        raise InputError(f"{label} is not an inverse semigroup: {S.name(res.element)} has "
                         f"{len(res.inverses)} inverses")
    return res


def _seed() -> int:
    raw = os.environ.get("AMPLEKIT_SEED")
    if raw is None or raw == "":
        return DEFAULT_SEED
    try:
        return int(raw)
    except ValueError:
        raise InputError(f"AMPLEKIT_SEED must be an integer, got {raw!r}") from None


def _names(S, xs):
    return [S.name(x) for x in sorted(xs)]


# --- subcommands: each returns (verdicts, witnesses) --------------------------------------------

def cmd_validate(args, inputs):
    S = inputs.semigroup(args.semigroup)
    res = detect_inverse_structure(S)
    verdicts = {
        "valid": True,
        "order": S.order,
        "zero": None if S.zero is None else S.name(S.zero),
        "commutative": S.is_commutative(),
        "inverse": not isinstance(res, InverseFailure),
    }
    return verdicts, {"idempotents": _names(S, S.idempotents())}


def cmd_inverse_check(args, inputs):
    S = inputs.semigroup(args.semigroup)
    res = detect_inverse_structure(S)
    if isinstance(res, InverseFailure):
        return ({"inverse": False},
                {"element": S.name(res.element), "inverses": _names(S, res.inverses)})
    return ({"inverse": True, "idempotents": len(res.idempotents)},
            {"inverse_map": {S.name(a): S.name(res.inv(a)) for a in S.elements}})


def _load_pair(args, inputs):
    S = inputs.semigroup(args.semigroup)
    T = _inverse(S, args.semigroup)
    return T, parse_subset(S, args.sub)


def _sides(side):
    return ("left", "right") if side == "both" else (side,)


def cmd_ample(args, inputs):
    T, sub = _load_pair(args, inputs)
    verdicts, witnesses = {}, {}
    checks = {"left": check_left_ample_in, "right": check_right_ample_in, "full": check_full}
    keys = ("left", "right", "full") if args.side == "all" else (
        _sides(args.side) if args.side != "full" else ("full",))
    for key in keys:
        rep = checks[key](T, sub).to_dict(T.name)
        verdicts[rep["property"]] = rep["holds"]
        witnesses[rep["property"]] = {k: v for k, v in rep.items() if k not in ("property", "holds")}
    return verdicts, witnesses


def cmd_rich(args, inputs):
    T, sub = _load_pair(args, inputs)
    verdicts, witnesses = {}, {}
    for side in _sides(args.side):
        rep = check_rich(T, sub, side).to_dict(T.name)
        verdicts[rep["property"]] = rep["holds"]
        witnesses[rep["property"]] = {k: v for k, v in rep.items() if k not in ("property", "holds")}
    return verdicts, witnesses


def cmd_ultra(args, inputs):
    T, sub = _load_pair(args, inputs)
    verdicts, witnesses = {}, {}
    for side in _sides(args.side):
        rich = check_rich(T, sub, side)
        key = "UltraRichLeft" if side == "left" else "UltraRichRight"
        if not rich:
            verdicts[key] = None
            witnesses[key] = {"reason": f"not rich {side} ample", **rich.to_dict(T.name)}
            continue
        rep = check_ultra_rich(T, sub, side).to_dict(T.name)
        verdicts[key] = rep["holds"]
        witnesses[key] = {k: v for k, v in rep.items() if k not in ("property", "holds")}
    return verdicts, witnesses


def _hat_report(T, rep):
    nm = T.name
    pair = rep.collapsing_pair()
    verdicts = {
        "injective": rep.is_injective,
        "homomorphism": rep.homomorphism_verdict().kind,
        "image_left_ample": rep.image_left_ample_failure() is None,
        "image_right_ample": rep.image_right_ample_failure() is None,
    }
    verdicts.update(rep.notes)
    witnesses = {"maps": rep.render(),
                 "collapsing_pair": None if pair is None else [nm(x) for x in pair]}
    return verdicts, witnesses


def cmd_rho_hat(args, inputs):
    T, sub = _load_pair(args, inputs)
    seed = _seed()
    rep = rho_hat(T, sub)
    verdicts, witnesses = _hat_report(T, rep)
    left = check_left_ample_in(T, sub).holds
    if left:
        verdicts["intrinsic_matches"] = intrinsic_matches(T, sub, "left")
    subsets = invariant_subsets(T, sub, count=args.samples, seed=seed)
    failures = [(Y, restriction_is_homomorphic(T, sub, Y)) for Y in subsets]
    failures = [(Y, p) for Y, p in failures if p is not None]
    verdicts["restrictions_homomorphic"] = not failures
    verdicts["invariant_subsets_checked"] = len(subsets)
    if failures:
        Y, (s, t) = failures[0]
        witnesses["restriction_failure"] = {"Y": _names(T, Y), "pair": [T.name(s), T.name(t)]}
    two = check_two_sided_rho_hat(T, sub)
    verdicts["two_sided"] = two.status
    witnesses["two_sided"] = {"reason": two.reason,
                              "witness": None if two.witness is None else T.name(two.witness)}
    ev = strict_left_evidence(T, sub)
    witnesses["strict_left_evidence"] = ev.to_dict(T.name)
    return verdicts, witnesses


def cmd_lambda_hat(args, inputs):
    T, sub = _load_pair(args, inputs)
    rep = lambda_hat(T, sub)
    verdicts, witnesses = _hat_report(T, rep)
    if check_right_ample_in(T, sub).holds:
        verdicts["intrinsic_matches"] = intrinsic_matches(T, sub, "right")
    witnesses["strict_right_evidence"] = strict_right_evidence(T, sub).to_dict(T.name)
    return verdicts, witnesses


def cmd_hull(args, inputs):
    T, sub = _load_pair(args, inputs)
    hull = inverse_hull(T, sub)
    verdicts = {"order": len(hull), "is_whole": len(hull) == T.order,
                "seed_is_inverse": len(hull) == len(sub)}
    witnesses = {
        "members": _names(T, hull.members),
        "prime_set": prime_set(T, sub).names(),
        "factorizations": {T.name(u): hull.render_word(w) for u, w in hull.factorizations.items()},
    }
    if generated_inverse(T, sub).members != hull.members:
        raise InvariantViolation("generated inverse subsemigroup differs from the hull")
    return verdicts, witnesses


def cmd_extend(args, inputs):
    if args.semigroup is not None:
        T, sub = _load_pair(args, inputs)
        U, T1, phi1, T2, phi2 = hat_amalgam(T, sub)
        report = amalgam_report(U, T1, phi1, T2, phi2)
        out = report.to_dict(T1, T2)
        ext = out["extension"]
        # render T1/T2 elements back through S where possible
        back1 = {T1.name(v): T.name(sub[k]) for k, v in phi1.items()}
        back2 = {T2.name(v): T.name(sub[k]) for k, v in phi2.items()}
        if "induced" in ext:
            ext["induced"] = {back1.get(k, k): back2.get(v, v) for k, v in ext["induced"].items()}
        verdicts = {"consistent": ext["consistent"], "condition": ext["condition"],
                    "conclusion_holds": out["conclusion_holds"], **out["ampleness"]}
        for key in ("is_homomorphism", "is_isomorphism"):
            if key in ext:
                verdicts[key] = ext[key]
        witnesses = {k: v for k, v in ext.items() if k in ("witness", "induced")}
        witnesses["note"] = out["note"]
        return verdicts, witnesses
    if not (args.first and args.second and args.map and args.first_sub and args.second_sub):
        raise InputError("extend needs --semigroup/--sub, or --first, --first-sub, --second, "
                         "--second-sub and --map")
    A, B = inputs.semigroup(args.first), inputs.semigroup(args.second)
    T1, T2 = _inverse(A, args.first), _inverse(B, args.second)
    S1, S2 = parse_subset(A, args.first_sub), parse_subset(B, args.second_sub)
    psi = parse_mapping(A, B, inputs.text(args.map))
    ext = extension_check(T1, S1, T2, S2, psi).to_dict(T1, T2)
    verdicts = {k: ext[k] for k in ("consistent", "condition", "is_homomorphism", "is_isomorphism")
                if k in ext}
    return verdicts, {k: v for k, v in ext.items() if k in ("witness", "induced")}


def _brandt_from_args(args, inputs):
    try:
        G = group_by_name(args.group)
    except ValueError as exc:
        raise InputError(str(exc)) from None
    if args.indices < 1:
        raise InputError("--indices must be at least 1")
    B = brandt(G, args.indices)
    inputs.generated(f"brandt:{args.group}:{args.indices}", B.semigroup)
    return B


def _labels_arg(B, text, default):
    if text is None:
        return default
    try:
        return [int(t) for t in split_tokens(text)]
    except ValueError:
        raise InputError(f"index labels must be integers: {text!r}") from None


def _group_subset(G, text):
    if text is None:
        return list(G.elements)
    try:
        return sorted({G.index(t) for t in split_tokens(text)})
    except (AmplekitError, ValueError) as exc:
        raise InputError(str(exc)) from None


def cmd_brandt(args, inputs):
    B = _brandt_from_args(args, inputs)
    if args.write:
        Path(args.write).write_text(render_cayley(B.semigroup))
    nm = B.name
    verdicts = {"order": len(B), "idempotents": len(B.T.idempotents),
                "commutative": B.semigroup.is_commutative(), "zero_group": B.is_zero_group()}
    witnesses = {}
    check = args.check
    if check == "strict-ideals":
        if args.idempotent is None:
            raise InputError("--idempotent is required for strict-ideals")
        try:
            e = B.semigroup.index(args.idempotent)
        except AmplekitError as exc:
            raise InputError(str(exc)) from None
        pair = strict_ideal_pair(B, e)
        d = pair.to_dict(nm)
        verdicts.update({
            "eB_left_ample": d["eB"]["left_ample"]["holds"],
            "eB_right_ample": d["eB"]["right_ample"]["holds"],
            "eB_lambda_hat_collapses": d["eB"]["chosen_collapses_to_zero"],
            "Be_left_ample": d["Be"]["left_ample"]["holds"],
            "Be_right_ample": d["Be"]["right_ample"]["holds"],
            "Be_rho_hat_collapses": d["Be"]["chosen_collapses_to_zero"],
        })
        witnesses["strict_ideals"] = d
        witnesses["strict_left_evidence"] = strict_left_evidence(B.T, sorted(pair.right_ideal.members)).to_dict(nm)
        witnesses["strict_right_evidence"] = strict_right_evidence(B.T, sorted(pair.left_ideal.members)).to_dict(nm)
    elif check in ("triple-ample", "triple-rich"):
        rows = _labels_arg(B, args.rows, list(B.I))
        cols = _labels_arg(B, args.cols, list(B.I))
        H = _group_subset(B.group, args.subgroup)
        fn = check_triple_ample if check == "triple-ample" else check_triple_rich
        for side in _sides(args.side):
            v = fn(B, rows, H, cols, side).to_dict(nm)
            verdicts[f"{side}_definitional"] = v["definitional"]["holds"]
            verdicts[f"{side}_structural"] = v["structural"]
            verdicts[f"{side}_index_condition"] = v["index_condition"]
            verdicts[f"{side}_agrees"] = v["agrees"]
            witnesses[side] = v["definitional"]
    elif check == "two-index":
        fam = two_index_family(B.group)
        B3 = fam["brandt"]
        verdicts.update({
            "left_ample": fam["left_ample"].holds,
            "right_ample": fam["right_ample"].holds,
            "dual_products_escape": fam["dual_products_escape"],
            "in_some_principal_right_ideal": bool(fam["principal_ideals_containing"]),
        })
        witnesses["subsemigroup"] = fam["subsemigroup"].names()
        witnesses["outside_element"] = B3.name(fam["outside_element"])
    elif check is not None:
        raise InputError(f"unknown check {check!r}")
    return verdicts, witnesses


def _matrix(G, text):
    rows = []
    for row in text.split(";"):
        entries = []
        for tok in split_tokens(row):
            entries.append(None if tok == "0" else G.index(tok))
        rows.append(entries)
    return rows


def cmd_rees(args, inputs):
    try:
        G = group_by_name(args.group)
        P = _matrix(G, args.matrix)
    except (AmplekitError, ValueError) as exc:
        raise InputError(str(exc)) from None
    R = rees_matrix(G, len(P[0]), len(P), P)
    inputs.generated(f"rees:{args.group}:{args.matrix}", R.semigroup)
    if args.write:
        Path(args.write).write_text(render_cayley(R.semigroup))
    res = detect_inverse_structure(R.semigroup)
    verdicts = {"order": len(R), "inverse": not isinstance(res, InverseFailure),
                "idempotents": len(R.semigroup.idempotents())}
    return verdicts, {"idempotents": _names(R.semigroup, R.semigroup.idempotents())}


def cmd_zigzag(args, inputs):
    T, sub = _load_pair(args, inputs)
    cert = ZigzagCertificate.from_json(inputs.text(args.cert), T.base)
    res = verify_zigzag(T, sub, cert)
    verdicts = {"valid": res.valid, "length": cert.length}
    witnesses = {"failing_link": res.failing_link, "reason": res.reason,
                 "chain": [" ".join(T.name(v) for v in w) for w in cert.chain()]}
    return verdicts, witnesses


def cmd_corpus(args, inputs):
    out_dir = Path(args.out) if args.out else None
    if out_dir is not None:
        out_dir.mkdir(parents=True, exist_ok=True)
    entries = []
    total_pairs = 0
    for entry in inverse_corpus():
        text = render_cayley(entry.T.base)
        if out_dir is not None:
            (out_dir / f"{entry.name}.cay").write_text(text)
        pairs = subsemigroup_pairs(entry)
        total_pairs += len(pairs)
        item = {"name": entry.name, "order": entry.T.order, "digest": _digest(text.encode()),
                "subsemigroups": len(pairs)}
        if entry.brandt is not None:
            item["triple_subsemigroups"] = len(triple_cases(entry.brandt, args.max_triple))
        entries.append(item)
    verdicts = {"semigroups": len(entries), "subsemigroup_pairs": total_pairs}
    return verdicts, {"members": entries}


COMMANDS = {
    "validate": cmd_validate,
    "inverse-check": cmd_inverse_check,
    "ample": cmd_ample,
    "rich": cmd_rich,
    "ultra": cmd_ultra,
    "rho-hat": cmd_rho_hat,
    "lambda-hat": cmd_lambda_hat,
    "hull": cmd_hull,
    "extend": cmd_extend,
    "brandt": cmd_brandt,
    "rees": cmd_rees,
    "zigzag": cmd_zigzag,
    "corpus": cmd_corpus,
}


# --- argument parsing and output -----------------------------------------------------------------

def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--format", choices=("json", "text"), default="json")
    common.add_argument("-o", "--output", help="write the report here instead of stdout")
    common.add_argument("--timing", action="store_true", help="record wall-clock timing in the report")

    parser = argparse.ArgumentParser(prog="amplekit", description="Ampleness analysis of finite semigroups.")
    parser.add_argument("--version", action="version", version=f"%(prog)s {__version__}")
    sub = parser.add_subparsers(dest="command", required=True)

    def semigroup_cmd(name, help, side=None, sub_required=True):
        p = sub.add_parser(name, parents=[common], help=help)
        p.add_argument("--semigroup", required=True, help="Cayley file, or - for stdin")
        p.add_argument("--sub", required=sub_required, help="subset as comma-separated indices or names")
        if side:
            p.add_argument("--side", choices=side, default=side[0])
        return p

    p = sub.add_parser("validate", parents=[common], help="parse and validate a Cayley file")
    p.add_argument("--semigroup", required=True)
    p = sub.add_parser("inverse-check", parents=[common], help="detect the inverse structure")
    p.add_argument("--semigroup", required=True)
    semigroup_cmd("ample", "left/right ampleness and fullness", ("left", "right", "both", "full", "all"))
    semigroup_cmd("rich", "rich ampleness", ("left", "right", "both"))
    semigroup_cmd("ultra", "ultra rich ampleness", ("left", "right", "both"))
    p = semigroup_cmd("rho-hat", "restricted right translations of S")
    p.add_argument("--samples", type=int, default=64,
                   help="invariant subsets to sample when T is too large to enumerate")
    semigroup_cmd("lambda-hat", "restricted left translations of S")
    semigroup_cmd("hull", "inverse subsemigroup generated by S")

    p = sub.add_parser("extend", parents=[common], help="extend an isomorphism of subsemigroups to their hulls")
    p.add_argument("--semigroup", help="analyse the amalgam of both restricted translations of S")
    p.add_argument("--sub")
    p.add_argument("--first")
    p.add_argument("--first-sub")
    p.add_argument("--second")
    p.add_argument("--second-sub")
    p.add_argument("--map", help="mapping file with lines 'src -> dst'")

    p = sub.add_parser("brandt", parents=[common], help="build B(G, I) and run checks on it")
    p.add_argument("--group", required=True, help="trivial, Z<n> or klein")
    p.add_argument("--indices", type=int, required=True, help="size of the index set")
    p.add_argument("--check", choices=("strict-ideals", "triple-ample", "triple-rich", "two-index"))
    p.add_argument("--idempotent", help='nonzero idempotent such as "(1,1,1)"')
    p.add_argument("--rows", help="row labels of a triple subsemigroup")
    p.add_argument("--subgroup", help="group elements of a triple subsemigroup")
    p.add_argument("--cols", help="column labels of a triple subsemigroup")
    p.add_argument("--side", choices=("left", "right", "both"), default="left")
    p.add_argument("--write", help="also write the Cayley table here")

    p = sub.add_parser("rees", parents=[common], help="build a Rees matrix semigroup")
    p.add_argument("--group", required=True)
    p.add_argument("--matrix", required=True, help='rows separated by ";", entries by ","; 0 is zero')
    p.add_argument("--write")

    p = semigroup_cmd("zigzag", "verify a zigzag certificate")
    p.add_argument("--cert", required=True, help="certificate JSON file")

    p = sub.add_parser("corpus", parents=[common], help="generate the test corpus")
    p.add_argument("--out", help="directory for the Cayley files")
    p.add_argument("--max-triple", type=int, default=TRIPLE_LIMIT)
    return parser


def render_text(report: dict) -> str:
    lines = [f"amplekit {report['command']['name']}"]

    def walk(prefix, value):
        if isinstance(value, dict) and value:
            for k, v in value.items():
                walk(f"{prefix}.{k}" if prefix else str(k), v)
        elif isinstance(value, list) and value and any(isinstance(v, (dict, list)) for v in value):
            for i, v in enumerate(value):
                walk(f"{prefix}[{i}]", v)
        else:
            lines.append(f"  {prefix}: {json.dumps(value, ensure_ascii=False)}")

    for section in ("inputs", "verdicts", "witnesses", "timing"):
        if report[section]:
            lines.append(f"{section}:")
            walk("", report[section])
    return "\n".join(lines) + "\n"


def _execute(argv):
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return (EXIT_OK if exc.code == 0 else EXIT_INPUT), None, None
    inputs = Inputs()
    start = time.perf_counter()
    try:
        verdicts, witnesses = COMMANDS[args.command](args, inputs)
    except InvariantViolation as exc:
        print(f"amplekit: internal consistency check failed: {exc}", file=sys.stderr)
        return EXIT_INTERNAL, None, args
    except (InputError, AmplekitError, ValueError, OSError) as exc:
        print(f"amplekit: {exc}", file=sys.stderr)
        return EXIT_INPUT, None, args
    report = {
        "command": {"name": args.command, "argv": list(argv)},
        "inputs": inputs.digests,
        "verdicts": verdicts,
        "witnesses": witnesses,
        "timing": {"seconds": round(time.perf_counter() - start, 6)} if args.timing else {},
    }
    return EXIT_OK, report, args


def run_command(argv) -> tuple[int, dict | None]:
    """Run one command; returns ``(exit code, report)`` without printing."""
    code, report, _ = _execute(list(argv))
    return code, report


def dumps(report: dict) -> str:
    return json.dumps(report, indent=2, sort_keys=False, ensure_ascii=False) + "\n"


def main(argv=None) -> int:
    argv = list(sys.argv[1:] if argv is None else argv)
    code, report, args = _execute(argv)
    if report is None:
        return code
    text = dumps(report) if args.format == "json" else render_text(report)
    if args.output:
        Path(args.output).write_text(text)
    else:
        sys.stdout.write(text)
    return code


if __name__ == "__main__":
    sys.exit(main())
