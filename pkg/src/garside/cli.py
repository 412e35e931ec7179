"""
Command line front end.

    garside --group braid:3 normal-form "s1 s2 s1 s2"
    garside --group cyclic:3 t-inf "x^2"
    garside --group "product(cyclic:2,cyclic:2)" geodesic-power "(x^-1, y)"
    garside --batch requests.txt --format json

Exit codes: 0 success, 2 parse error, 3 summit member cap exceeded,
4 internal consistency failure.
"""

from __future__ import annotations

import argparse
import json
import shlex
import sys
from dataclasses import dataclass, field

from .conjugacy import DEFAULT_MEMBER_CAP, SummitOverflowError, inf_s, sup_s, super_summit_set
from .core import GarsideError, word_length
from .stable import (
    certify_periodically_geodesic,
    find_geodesic_failure,
    geodesic_power,
    is_in_stable_sss,
    stable_sss,
)
from .structures import GroupSpecError, parse_group_spec
from .translation import (
    ConsistencyError,
    format_rational,
    is_conjugate_to_inf_straight,
    is_conjugate_to_sup_straight,
    is_inf_straight,
    is_sup_straight,
    t_inf,
    t_inf_by_detection,
    t_len,
    t_sup,
)
from .words import WordParseError, format_element, parse_word

EXIT_OK = 0
EXIT_PARSE = 2
EXIT_OVERFLOW = 3
EXIT_CONSISTENCY = 4

COMMANDS = {
    "normal-form": 1,
    "invariants": 1,
    "word-length": 1,
    "sss": 1,
    "stable-sss": 1,
    "t-inf": 1,
    "t-sup": 1,
    "t-len": 1,
    "straightness": 1,
    "geodesic-power": 1,
    "certify-geodesic": 1,
    "is-stable-member": 2,
}


class RequestError(GarsideError):
    """Malformed request (wrong word count, unknown command)."""


@dataclass
class Request:
    group_spec: str
    command: str
    words: list[str]
    format: str = "text"
    n_max: int | None = None
    member_cap: int = DEFAULT_MEMBER_CAP
    parallel: bool = False
    witness: bool = False


@dataclass
class Result:
    data: object
    text: str = field(default="")


def _summit_text(doc: dict) -> str:
    lines = [f"{doc['kind']} summit set: inf_s={doc['inf_s']} sup_s={doc['sup_s']} size={len(doc['members'])}"]
    conj = doc.get("conjugators")
    for m in doc["members"]:
        lines.append(f"{m}    <- {conj[m]}" if conj else m)
    return "\n".join(lines)


def execute(req: Request) -> Result:
    """Run one request; raises package errors for the caller to map to exit codes."""
    if req.command not in COMMANDS:
        raise RequestError(f"unknown command {req.command!r}")
    if len(req.words) != COMMANDS[req.command]:
        raise RequestError(f"{req.command} takes {COMMANDS[req.command]} word(s), got {len(req.words)}")
    st = parse_group_spec(req.group_spec)
    elems = [parse_word(st, w) for w in req.words]
    g = elems[0]
    cmd = req.command

    if cmd == "normal-form":
        nf = format_element(g)
        data = {"spec": st.spec, "word": req.words[0], "normal_form": nf, "r": g.r,
                "factors": [st.simple_word(s) for s in g.factors]}
        return Result(data, nf)
    if cmd == "invariants":
        data = {"inf": g.inf, "sup": g.sup, "len": g.len,
                "inf_s": inf_s(g), "sup_s": sup_s(g), "len_s": sup_s(g) - inf_s(g)}
        return Result(data, " ".join(f"{k}={v}" for k, v in data.items()))
    if cmd == "word-length":
        n = word_length(g)
        return Result({"word_length": n}, str(n))
    if cmd in ("sss", "stable-sss"):
        compute = super_summit_set if cmd == "sss" else stable_sss
        ss = compute(g, member_cap=req.member_cap, witness=req.witness, parallel=req.parallel)
        doc = ss.to_dict(base_word=req.words[0])
        return Result(doc, _summit_text(doc))
    if cmd == "t-inf":
        value = t_inf(g)
        other = t_inf_by_detection(g)
        if value != other:
            raise ConsistencyError(
                f"t_inf methods disagree: max formula {format_rational(value)}, "
                f"detection {format_rational(other)}"
            )
        return Result({"t_inf": format_rational(value)}, format_rational(value))
    if cmd in ("t-sup", "t-len"):
        value = t_sup(g) if cmd == "t-sup" else t_len(g)
        key = cmd.replace("-", "_")
        return Result({key: format_rational(value)}, format_rational(value))
    if cmd == "straightness":
        data = {
            "inf_straight": is_inf_straight(g),
            "sup_straight": is_sup_straight(g),
            "conjugate_to_inf_straight": is_conjugate_to_inf_straight(g),
            "conjugate_to_sup_straight": is_conjugate_to_sup_straight(g),
        }
        return Result(data, " ".join(f"{k}={str(v).lower()}" for k, v in data.items()))
    if cmd == "geodesic-power":
        doc = geodesic_power(g).to_dict()
        return Result(doc, json.dumps(doc))
    if cmd == "certify-geodesic":
        n_max = req.n_max if req.n_max is not None else 3 * st.norm_delta
        status = certify_periodically_geodesic(g, n_max=n_max)
        failure = find_geodesic_failure(g, n_max)
        data = {"status": status.value, "n_max": n_max, "empirical_ok": failure is None,
                "first_failure": failure}
        return Result(data, status.value)
    # is-stable-member h g
    member = is_in_stable_sss(elems[0], elems[1])
    return Result({"member": member}, str(member).lower())


def _exit_code(exc: Exception) -> int:
    if isinstance(exc, SummitOverflowError):
        return EXIT_OVERFLOW
    if isinstance(exc, ConsistencyError):
        return EXIT_CONSISTENCY
    if isinstance(exc, (WordParseError, GroupSpecError, RequestError)):
        return EXIT_PARSE
    return EXIT_CONSISTENCY


def run(req: Request, out=None, err=None) -> int:
    out = out or sys.stdout
    err = err or sys.stderr
    try:
        result = execute(req)
    except GarsideError as exc:
        print(f"error: {exc}", file=err)
        return _exit_code(exc)
    if req.format == "json":
        print(json.dumps(result.data), file=out)
    else:
        print(result.text, file=out)
    return EXIT_OK


def run_batch(path: str, options: Request, out=None, err=None) -> int:
    """
    One request per line: ``<spec> <command> <word> [<word>]`` with words
    quoted shell-style. Blank lines and ``#`` comments are skipped.
    """
    out = out or sys.stdout
    err = err or sys.stderr
    try:
        with open(path, encoding="utf-8") as fh:
            lines = fh.read().splitlines()
    except OSError as exc:
        print(f"error: cannot read {path}: {exc}", file=err)
        return EXIT_PARSE
    for lineno, line in enumerate(lines, 1):
        if not line.strip() or line.lstrip().startswith("#"):
            continue
        try:
            parts = shlex.split(line)
            if len(parts) < 2:
                raise RequestError("expected '<spec> <command> <word(s)>'")
            req = Request(parts[0], parts[1], parts[2:], options.format, options.n_max,
                          options.member_cap, options.parallel, options.witness)
            result = execute(req)
            record = {"line": lineno, "ok": True, "result": result.data}
            text = f"{lineno}: {result.text.replace(chr(10), ' | ')}"
        except (GarsideError, ValueError) as exc:
            record = {"line": lineno, "ok": False, "error": str(exc)}
            text = f"{lineno}: error: {exc}"
        print(json.dumps(record) if options.format == "json" else text, file=out)
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="garside", description=__doc__.split("\n\n")[0].strip())
    p.add_argument("--group", help="group spec: braid:<n> | cyclic:<N> | product(<spec>,<spec>)")
    p.add_argument("--format", choices=("text", "json"), default="text")
    p.add_argument("--n-max", type=int, default=None, help="power horizon for empirical geodesic checks (default 3N)")
    p.add_argument("--member-cap", type=int, default=DEFAULT_MEMBER_CAP)
    p.add_argument("--parallel", action="store_true")
    p.add_argument("--witness", action="store_true", help="include conjugators in summit set output")
    p.add_argument("--batch", metavar="FILE", help="read requests from FILE, one per line")
    p.add_argument("command", nargs="?", choices=sorted(COMMANDS))
    p.add_argument("words", nargs="*")
    return p


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    if args.n_max is not None and args.n_max < 1:
        parser.error("--n-max must be >= 1")
    options = Request(args.group or "", args.command or "", args.words, args.format,
                      args.n_max, args.member_cap, args.parallel, args.witness)
    if args.batch:
        return run_batch(args.batch, options)
    if not args.group or not args.command:
        parser.error("--group and a command are required unless --batch is given")
    return run(options)


if __name__ == "__main__":
    sys.exit(main())
