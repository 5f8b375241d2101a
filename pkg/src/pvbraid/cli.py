"""
Command-line front end.

Every subcommand reads its input from the positional arguments (joined with
spaces) or, when there are none, from standard input.  Several words or
diagrams may be given in one input; each starts at its ``n=<int>`` header.

Exit statuses: 0 success (or ``equal``), 1 usage or parse error,
2 precondition violation, 3 ``unknown`` verdict, 4 a campaign found
violations.
"""

from __future__ import annotations

import argparse
import json
import re
import sys

from . import campaigns
from .classify import classify
from .core import BraidError, GroupMode, PreconditionError, canonical_sign_set
from .diagrams import o_map
from .projection import d_iterates, delete_bad, reconstruct_classical
from .rewriting import DEFAULT_MAX_STATES, equivalent
from .signs import act, is_realizable, prefix_states
from .textio import (
    parse_diagram,
    parse_signs,
    parse_word,
    render_diagram,
    render_diagram_ascii,
    render_evolution,
    render_letters,
    render_signs,
    render_word,
    sign_string,
)

EXIT_OK, EXIT_PARSE, EXIT_PRECONDITION, EXIT_UNKNOWN, EXIT_VIOLATIONS = 0, 1, 2, 3, 4

_SPLIT = re.compile(r"(?=\bn\s*=)")


class UsageError(BraidError):
    pass


def _items(args) -> list[str]:
    text = " ".join(args.input) if args.input else sys.stdin.read()
    return [t.strip() for t in _SPLIT.split(text) if t.strip()]


def _one(args, what="word") -> str:
    items = _items(args)
    if len(items) != 1:
        raise UsageError(f"expected exactly one {what}, got {len(items)}")
    return items[0]


def _word_out(w, args) -> str:
    if args.with_header:
        return render_word(w)
    return " ".join(map(str, w.letters))


def cmd_classify(args):
    w = parse_word(_one(args))
    ann = classify(w)
    doc = {
        "word": render_word(w),
        "flags": ["G" if f else "B" for f in ann.flags],
        "good_positions": [k + 1 for k in ann.good_positions],
        "states": [sign_string(S) for S in ann.states],
    }
    if args.states:
        text = render_evolution(w)
    else:
        text = ann.marks()
    return doc, text, EXIT_OK


def cmd_project(args):
    w = parse_word(_one(args))
    d = delete_bad(w)
    ann = classify(w)
    doc = {
        "word": render_word(w),
        "result": render_word(d),
        "deleted_positions": [k + 1 for k, f in enumerate(ann.flags) if not f],
    }
    return doc, _word_out(d, args), EXIT_OK


def cmd_stab(args):
    w = parse_word(_one(args))
    its = d_iterates(w)
    doc = {"word": render_word(w), "result": render_word(its[-1]), "iterates": [render_word(x) for x in its]}
    return doc, _word_out(its[-1], args), EXIT_OK


def cmd_reconstruct(args):
    w = parse_word(_one(args))
    rec = reconstruct_classical(w)
    doc = {
        "word": render_word(w),
        "diagram": render_diagram(rec.sigma_word),
        "witness": [
            {"source": str(e.source), "emitted": str(e.emitted), "virtualized": e.virtualized}
            for e in rec.virtualization_witness
        ],
        "virtualized_positions": [k + 1 for k in rec.virtualized_positions],
    }
    lines = [render_diagram(rec.sigma_word)]
    for k, e in enumerate(rec.virtualization_witness, 1):
        lines.append(f"{k:>3}  {str(e.source):<12} -> {str(e.emitted):<12} {'virtualized' if e.virtualized else 'kept'}")
    return doc, "\n".join(lines), EXIT_OK


def _initial(args, n):
    if args.signs:
        S = parse_signs(args.signs)
        if S.n != n:
            raise BraidError(f"sign set has n={S.n}, word has n={n}")
        return S
    return canonical_sign_set(n)


def cmd_act(args):
    w = parse_word(_one(args))
    S0 = _initial(args, w.n)
    states = prefix_states(w, S0)
    doc = {
        "word": render_word(w),
        "initial": render_signs(S0),
        "result": render_signs(states[-1]),
        "trivial": states[-1] == S0,
        "states": [render_signs(S) for S in states],
    }
    text = "\n".join(render_signs(S) for S in states) if args.states else render_signs(states[-1])
    return doc, text, EXIT_OK


def cmd_realizable(args):
    if args.signs:
        S = parse_signs(args.signs)
        source = None
    else:
        w = parse_word(_one(args))
        S = act(w, canonical_sign_set(w.n))
        source = render_word(w)
    real = is_realizable(S)
    doc = {
        "word": source,
        "signs": render_signs(S),
        "realizable": real is not None,
        "order": list(real.order) if real else None,
    }
    text = f"realizable: order {' '.join(map(str, real.order))}" if real else "not realizable"
    return doc, text, EXIT_OK


def cmd_omap(args):
    dw = parse_diagram(_one(args, "diagram"))
    w = o_map(dw)
    doc = {"diagram": render_diagram(dw), "word": render_word(w)}
    return doc, _word_out(w, args), EXIT_OK


def cmd_equiv(args):
    items = _items(args)
    if len(items) != 2:
        raise UsageError(f"equiv needs two words, got {len(items)}")
    w1, w2 = (parse_word(t) for t in items)
    mode = GroupMode.parse(args.mode)
    v = equivalent(w1, w2, mode, max_len=args.max_len, max_states=args.max_states)
    doc = {
        "source": render_word(w1),
        "target": render_word(w2),
        "mode": mode.value,
        "status": v.status,
        "trace": [{"move": str(s.move), "word": render_word(s.word)} for s in v.trace],
        "separated_by": v.separated_by,
        "stats": v.stats,
    }
    lines = [v.status]
    if v.separated_by:
        lines.append(f"separated by {v.separated_by}")
    lines += [f"{k:>3}  {s.move}  ->  {render_letters(s.word)}" for k, s in enumerate(v.trace, 1)]
    return doc, "\n".join(lines), EXIT_OK if v.equal else EXIT_UNKNOWN


def cmd_campaign(args):
    name = args.name
    kw = {}
    if args.n is not None:
        kw["n"] = args.n
    if args.trials is not None:
        kw["trials"] = args.trials
    if args.seed is not None:
        kw["seed"] = args.seed
    if args.len_cap is not None:
        kw["len_cap"] = args.len_cap
    if args.max_states is not None:
        kw["max_states"] = args.max_states
    fn = campaigns.CAMPAIGNS[name]
    accepted = fn.__code__.co_varnames[: fn.__code__.co_argcount]
    unused = sorted(set(kw) - set(accepted))
    if unused:
        raise UsageError(f"campaign {name} does not take {', '.join(unused)}")
    rep = fn(**kw)
    text = rep.summary()
    if rep.violations:
        text += "\n" + "\n".join(json.dumps(v) for v in rep.violations[:10])
    return rep.to_dict(), text, EXIT_OK if rep.ok else EXIT_VIOLATIONS


def cmd_render(args):
    text = _one(args, "word or diagram")
    if "a[" in text:
        w = parse_word(text)
        return {"word": render_word(w), "picture": render_evolution(w)}, render_evolution(w), EXIT_OK
    dw = parse_diagram(text)
    pic = render_diagram_ascii(dw)
    return {"diagram": render_diagram(dw), "picture": pic}, pic, EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="pvbraid", description="Projection of pure virtual braids onto classical braids.")
    p.add_argument("--json", action="store_true", help="print one JSON document instead of text")
    sub = p.add_subparsers(dest="command", required=True)

    def add(name, fn, help_, inputs=True):
        sp = sub.add_parser(name, help=help_)
        if inputs:
            sp.add_argument("input", nargs="*", help="word/diagram text; read from stdin when absent")
        sp.add_argument("--json", action="store_true", default=argparse.SUPPRESS)
        sp.set_defaults(func=fn)
        return sp

    sp = add("classify", cmd_classify, "mark each letter good (G) or bad (B)")
    sp.add_argument("--states", action="store_true", help="show the state before every letter")
    for name, fn, h in (
        ("project", cmd_project, "delete the bad letters once"),
        ("stab", cmd_stab, "delete bad letters until nothing changes"),
        ("omap", cmd_omap, "read a diagram as a word in a[i,j]"),
    ):
        sp = add(name, fn, h)
        sp.add_argument("--with-header", action="store_true", help="prefix the result with n=<int>")
    add("reconstruct", cmd_reconstruct, "classical diagram for an all-good word acting trivially")
    sp = add("act", cmd_act, "apply a word to a sign set")
    sp.add_argument("--signs", help="initial sign set (default: the canonical one)")
    sp.add_argument("--states", action="store_true", help="print every prefix state")
    sp = add("realizable", cmd_realizable, "test a sign set (or a word's image of the canonical one)")
    sp.add_argument("--signs", help="sign set to test instead of a word")
    sp = add("equiv", cmd_equiv, "bounded search for equality of two words")
    sp.add_argument("--mode", default="PBn", help="PBn, TildePBn or Gn2")
    sp.add_argument("--max-len", type=int, default=None)
    sp.add_argument("--max-states", type=int, default=DEFAULT_MAX_STATES)
    sp = add("campaign", cmd_campaign, "run a verification campaign", inputs=False)
    sp.add_argument("name", choices=sorted(campaigns.CAMPAIGNS))
    sp.add_argument("--n", type=int)
    sp.add_argument("--trials", type=int)
    sp.add_argument("--seed", type=int)
    sp.add_argument("--len-cap", type=int)
    sp.add_argument("--max-states", type=int)
    add("render", cmd_render, "ASCII picture of a diagram, or sign-set evolution of a word")
    return p


def main(argv=None, stdout=None) -> int:
    stdout = stdout or sys.stdout
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return EXIT_PARSE if exc.code else EXIT_OK
    try:
        doc, text, status = args.func(args)
    except PreconditionError as exc:
        print(f"precondition violated: {exc}", file=sys.stderr)
        return EXIT_PRECONDITION
    except (BraidError, ValueError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_PARSE
    if args.json:
        doc = {"command": args.command, **doc}
        print(json.dumps(doc, indent=2), file=stdout)
    else:
        print(text, file=stdout)
    return status


if __name__ == "__main__":
    sys.exit(main())
