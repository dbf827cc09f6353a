"""``ring-forge``: command-line front end.

Ring specs (the ``--ring`` argument):

* exact rings: ``Z``, ``Z/<m>`` or ``Z/<m1>xZ/<m2>x...`` (coprime moduli);
* valuation quotients: ``valq:<group>[:<cut>]``, e.g. ``valq:Q:open:1``;
* function-ring quotients: a demo name (``dim3``, ``reduced``,
  ``noncoherent``, ``padic``) or the path of a ring JSON file.

Values, cuts and elements follow the grammar in
:mod:`ringforge.valuation.syntax`.  Exit codes: 0 success, 1 a
verification failed, 2 the input could not be parsed or violates a
precondition.
"""

from __future__ import annotations

import argparse
import json
import sys
from pathlib import Path

from . import __version__
from .demos import run_demo
from .exact import (
    IntegerRing,
    ResidueRing,
    adequate_factor,
    bezout_triple,
    canonical_form,
    gh_witness,
    hermite_pair,
    parse_ring,
    smith_form,
    unique_min_prime_report,
)
from .function_ring import (
    EXAMPLE_NAMES,
    FunElement,
    SRingQuotient,
    ann_cyclic,
    build_named_example,
    descriptor_from_json,
    descriptor_to_json,
    desc_fg_mod,
    element_from_json,
    element_to_json,
    lambda_cyclic_S,
    ring_from_json,
)
from .oracle import OracleReport, brute_annihilator, verify_certificate
from .valuation import (
    ContainmentError,
    ParseError,
    ValQuotient,
    ann_quotient,
    classify_valuation_quotient,
    cut_fg_mod,
    format_valq,
    lambda_cyclic,
    parse_cut,
    parse_element,
    parse_valq,
)

EXIT_OK, EXIT_FAILED, EXIT_BAD_INPUT = 0, 1, 2

LAMBDA_CONVENTION = "lambda = k+1 when the k-th annihilator (from 0) is the first one not finitely generated"


class InputError(Exception):
    """Bad command-line input; reported with exit code 2."""


# -- ring and element parsing ----------------------------------------------------------


def load_any_ring(text: str):
    """Returns ``(ring, named_elements)``."""
    if text.startswith("valq:"):
        return parse_valq(text), {}
    if text in EXAMPLE_NAMES:
        ex = build_named_example(text)
        return ex.ring, ex.elements
    path = Path(text)
    if text.endswith(".json") or path.is_file():
        try:
            obj = json.loads(path.read_text(encoding="utf-8"))
        except (OSError, json.JSONDecodeError) as exc:
            raise InputError(f"cannot read ring file {text}: {exc}") from None
        return ring_from_json(obj), {}
    return parse_ring(text), {}


def exact_ring(text: str):
    ring, _ = load_any_ring(text)
    if not isinstance(ring, (IntegerRing, ResidueRing)):
        raise InputError(f"{text} is not an exact ring (use Z, Z/<m> or Z/<m>xZ/<n>)")
    return ring


def finite_ring(text: str) -> ResidueRing:
    ring = exact_ring(text)
    if not isinstance(ring, ResidueRing):
        raise InputError("this operation needs a finite ring Z/m")
    return ring


def parse_int(text: str) -> int:
    try:
        return int(text)
    except ValueError:
        raise InputError(f"expected an integer, got {text!r}") from None


def parse_ints(texts, count: int | None = None) -> list[int]:
    if count is not None and len(texts) != count:
        raise InputError(f"expected {count} integer arguments, got {len(texts)}")
    return [parse_int(t) for t in texts]


def parse_matrix(text: str | None) -> list[list[int]]:
    if text is None:
        raise InputError("--matrix is required, e.g. --matrix '[[4,0],[0,6]]'")
    try:
        m = json.loads(text)
    except json.JSONDecodeError as exc:
        raise ParseError(f"malformed matrix: {exc.msg}", text, exc.pos) from None
    ok = isinstance(m, list) and m and all(isinstance(r, list) and r for r in m)
    if not ok or any(len(r) != len(m[0]) for r in m):
        raise InputError("matrix must be a non-empty rectangular JSON array of arrays")
    if not all(isinstance(x, int) and not isinstance(x, bool) for r in m for x in r):
        raise InputError("matrix entries must be integers")
    return m


def fun_element(ring: SRingQuotient, named: dict, text: str) -> FunElement:
    """A named demo element, a JSON element object, or a constant ``x*1``."""
    if text in named:
        x = named[text]
        return x if isinstance(x, FunElement) else FunElement.constant(x)
    if text.lstrip().startswith("{"):
        try:
            obj = json.loads(text)
        except json.JSONDecodeError as exc:
            raise ParseError(f"malformed element: {exc.msg}", text, exc.pos) from None
        return element_from_json(ring.kind, obj)
    return element_from_json(ring.kind, text)


def require(value, flag: str):
    if value is None:
        raise InputError(f"{flag} is required")
    return value


# -- output ---------------------------------------------------------------------------


def emit(args, obj: dict, text: str) -> None:
    if args.json:
        print(json.dumps(obj, indent=2, ensure_ascii=False))
    else:
        print(text)


def verified(args, obj: dict, text: str, report: OracleReport) -> int:
    obj["verification"] = report.to_json()
    text += f"\noracle: {report}"
    emit(args, obj, text)
    return EXIT_OK if report.passed else EXIT_FAILED


def _fmt_matrix(m) -> str:
    return "\n".join("  [" + ", ".join(f"{x:>4}" for x in row) + "]" for row in m)


# -- exact-ring commands ------------------------------------------------------------------


def cmd_smith(args) -> int:
    ring = exact_ring(require(args.ring, "--ring"))
    a = parse_matrix(args.matrix)
    cert = smith_form(ring, a)
    obj = {"ring": str(ring), "matrix": a, **cert.to_json(), "diagonal": list(cert.diagonal)}
    text = f"D = diag({', '.join(map(str, cert.diagonal))}) over {ring}\nP =\n{_fmt_matrix(cert.P)}\nQ =\n{_fmt_matrix(cert.Q)}"
    return verified(args, obj, text, verify_certificate("smith", ring, a, cert))


def cmd_bezout(args) -> int:
    ring = exact_ring(require(args.ring, "--ring"))
    a, b = parse_ints(args.values, 2)
    t = bezout_triple(ring, a, b)
    obj = {"ring": str(ring), "a": a, "b": b, **t._asdict()}
    text = f"d={t.d} a'={t.a1} b'={t.b1} u={t.u} v={t.v}   ({t.u}*{a} + {t.v}*{b} = {t.d})"
    report = OracleReport()
    eq = (lambda x, y: x == y) if isinstance(ring, IntegerRing) else (lambda x, y: (x - y) % ring.m == 0)
    report.check(eq(a, t.d * t.a1), (a, b), "a = d*a'", t)
    report.check(eq(b, t.d * t.b1), (a, b), "b = d*b'", t)
    report.check(eq(t.u * a + t.v * b, t.d), (a, b), "u*a + v*b = d", t)
    return verified(args, obj, text, report)


def cmd_hermite(args) -> int:
    ring = exact_ring(require(args.ring, "--ring"))
    a, b = parse_ints(args.values, 2)
    h = hermite_pair(ring, a, b)
    obj = {"ring": str(ring), "a": a, "b": b, "d": h.d, "a1": h.a1, "b1": h.b1, "u": h.u, "v": h.v}
    text = f"d={h.d} a'={h.a1} b'={h.b1} u={h.u} v={h.v}   ({h.u}*{h.a1} + {h.v}*{h.b1} = 1)"
    return verified(args, obj, text, verify_certificate("hermite", ring, (a, b), h))


def cmd_adequate(args) -> int:
    ring = finite_ring(require(args.ring, "--ring"))
    a, b = parse_ints(args.values, 2)
    f = adequate_factor(ring, a, b)
    obj = {"ring": str(ring), "a": a, "b": b, "r": f.r, "s": f.s, "e": f.e}
    text = f"r={f.r} s={f.s} (idempotent e={f.e})"
    return verified(args, obj, text, verify_certificate("adequate", ring, (a, b), (f.r, f.s)))


def cmd_canon(args) -> int:
    ring = finite_ring(require(args.ring, "--ring"))
    entries = parse_ints(args.values)
    if not entries:
        raise InputError("canon needs at least one entry")
    gens = canonical_form(ring, entries)
    obj = {"ring": str(ring), "entries": entries, "ideals": gens}
    text = " + ".join(f"R/{g}R" for g in gens) if gens else "0"
    return verified(args, obj, text, verify_certificate("canonical", ring, entries, gens))


def cmd_gh(args) -> int:
    ring = finite_ring(require(args.ring, "--ring"))
    a, b, c = parse_ints(args.values, 3)
    p, q = gh_witness(ring, a, b, c)
    obj = {"ring": str(ring), "a": a, "b": b, "c": c, "p": p, "q": q}
    text = f"p={p} q={q}   (R*{p * a % ring.m} + R*{(p * b + q * c) % ring.m} = R)"
    return verified(args, obj, text, verify_certificate("gh", ring, (a, b, c), (p, q)))


def cmd_minprime(args) -> int:
    ring = finite_ring(require(args.ring, "--ring"))
    rep = unique_min_prime_report(ring)
    obj = {
        "ring": str(ring),
        "unique": rep.unique,
        "condition2": rep.condition2,
        "witness": None if rep.witness is None else {"d": rep.witness[0], "x": rep.witness[1]},
    }
    text = f"unique minimal prime: {rep.unique}; (0:d) in J(R) for all d outside J(R): {rep.condition2}"
    report = OracleReport()
    report.check(rep.unique == rep.condition2, str(ring), rep.unique, rep.condition2)
    if rep.witness:
        d, x = rep.witness
        text += f"\nwitness: d={d}, x={x} in (0:d), neither in J(R)"
        report.check(x in brute_annihilator(ring, d), (d, x), "x in (0:d)", False)
    return verified(args, obj, text, report)


# -- annihilators, f.g., lambda --------------------------------------------------------------


def cmd_ann(args) -> int:
    ring, named = load_any_ring(require(args.ring, "--ring"))
    text_el = require(args.element, "--element")
    if isinstance(ring, ResidueRing):
        a = parse_int(text_el)
        ann = sorted(brute_annihilator(ring, a))
        emit(args, {"ring": str(ring), "element": a, "annihilator": ann}, f"(0 : {a}) = {{{', '.join(map(str, ann))}}}")
        return EXIT_OK
    if isinstance(ring, IntegerRing):
        a = parse_int(text_el)
        ann = "Z" if a == 0 else "0"
        emit(args, {"ring": "Z", "element": a, "annihilator": ann}, f"(0 : {a}) = {ann}")
        return EXIT_OK
    if isinstance(ring, ValQuotient):
        x = parse_element(ring.kind, text_el)
        c = ann_quotient(ring, x)
        emit(args, {"ring": format_valq(ring), "element": str(x), "annihilator": str(c)}, f"(0 : {x}) = {c}")
        return EXIT_OK
    x = fun_element(ring, named, text_el)
    d = ann_cyclic(ring, x)
    emit(args, {"element": element_to_json(x), "annihilator": descriptor_to_json(d)}, f"(0 : {x}) = {d}")
    return EXIT_OK


def cmd_fg(args) -> int:
    ring, named = load_any_ring(require(args.ring, "--ring"))
    if isinstance(ring, ValQuotient):
        b = parse_cut(ring.kind, require(args.cut, "--cut"))
        fg, gen = cut_fg_mod(b, ring.modulus)
        obj = {"ring": format_valq(ring), "ideal": str(b), "finitely_generated": fg, "generator": None if gen is None else str(gen)}
        if not fg:
            verdict = "not finitely generated"
        elif gen is None:
            verdict = "zero module"
        else:
            verdict = f"finitely generated by t^{gen}"
        emit(args, obj, f"{b} / {ring.modulus}: {verdict}")
        return EXIT_OK
    if not isinstance(ring, SRingQuotient):
        raise InputError("fg needs a valuation quotient or a function-ring quotient")
    if args.descriptor:
        b = _load_descriptor(ring, args.descriptor)
    else:
        b = ann_cyclic(ring, fun_element(ring, named, require(args.element, "--descriptor or --element")))
    fg, cert = desc_fg_mod(b, ring.modulus)
    obj = {
        "ideal": descriptor_to_json(b),
        "finitely_generated": fg,
        "generators": [element_to_json(g) for g in cert.generators],
        "exceptional": list(cert.exceptional),
        "exceptional_from": cert.exceptional_from,
        "const_fg": cert.const_fg,
        "failing_indices": list(cert.failing_indices),
    }
    if fg:
        text = f"{b}: finitely generated mod A by {', '.join(map(str, cert.generators)) or 'nothing (equal to A)'}"
    elif cert.exceptional_from is not None:
        text = f"{b}: not finitely generated (exceptional at every index >= {cert.exceptional_from})"
    else:
        text = f"{b}: not finitely generated (constant part f.g.: {cert.const_fg}; failing indices {list(cert.failing_indices)})"
    emit(args, obj, text)
    return EXIT_OK


def _load_descriptor(ring: SRingQuotient, text: str):
    path = Path(text)
    try:
        raw = path.read_text(encoding="utf-8") if path.is_file() else text
        obj = json.loads(raw)
    except json.JSONDecodeError as exc:
        raise ParseError(f"malformed descriptor: {exc.msg}", text, exc.pos) from None
    return descriptor_from_json(ring.kind, obj)


def cmd_lambda(args) -> int:
    ring, named = load_any_ring(require(args.ring, "--ring"))
    text_el = require(args.element, "--element")
    if args.depth < 1:
        raise InputError("--depth must be >= 1")
    if isinstance(ring, ValQuotient):
        x = parse_element(ring.kind, text_el)
        res = lambda_cyclic(ring, x, args.depth)
        chain = [str(c) for c in res.chain]
        shown = str(x)
    elif isinstance(ring, SRingQuotient):
        x = fun_element(ring, named, text_el)
        res = lambda_cyclic_S(ring, x, args.depth)
        chain = [descriptor_to_json(d) for d in res.chain]
        shown = str(x)
    else:
        raise InputError("lambda needs a valuation quotient or a function-ring quotient")
    obj = {
        "element": shown,
        "result": res.label(),
        "status": res.status,
        "bound": res.bound,
        "reason": res.reason.value,
        "chain": chain,
        "convention": LAMBDA_CONVENTION,
    }
    lines = [f"lambda(R/R{shown}) = {res}"] + [f"  ann_{k}: {d}" for k, d in enumerate(res.chain)]
    lines.append(f"  ({LAMBDA_CONVENTION})")
    emit(args, obj, "\n".join(lines))
    return EXIT_OK


def cmd_classify(args) -> int:
    ring, _ = load_any_ring(require(args.ring, "--ring"))
    if not isinstance(ring, ValQuotient):
        raise InputError("classify needs a valuation quotient valq:<group>[:<cut>]")
    c = classify_valuation_quotient(ring)
    w = c.coherence_witness
    obj = {
        "ring": format_valq(ring),
        "zclass": c.zclass.value,
        "verdict": c.verdict.value,
        "m_flat": c.m_flat,
        "self_fp_injective": c.self_fp_injective,
        "coherent": c.coherent,
        "coherence_witness": None if w is None else {"value": str(w[0]), "annihilator": str(w[1])},
        "regular_witness": None if c.regular_witness is None else str(c.regular_witness),
        "zero_divisor_witness": None if c.zero_divisor_witness is None else str(c.zero_divisor_witness),
    }
    lines = [
        f"{format_valq(ring)}: {c.zclass.value}, {c.verdict.value}",
        f"  maximal ideal flat: {c.m_flat}; self fp-injective: {c.self_fp_injective}; coherent: {c.coherent}",
    ]
    if w is not None:
        lines.append(f"  not coherent: (A : t^{w[0]}) = {w[1]} is not finitely generated mod A")
    emit(args, obj, "\n".join(lines))
    return EXIT_OK


# -- demos and self-test ----------------------------------------------------------------------


def cmd_demo(args) -> int:
    if args.name not in EXAMPLE_NAMES:
        raise InputError(f"unknown demo {args.name!r} (choose {', '.join(EXAMPLE_NAMES)})")
    report = run_demo(args.name)
    emit(args, report.to_json(), str(report))
    return EXIT_OK if report.passed else EXIT_FAILED


def cmd_selftest(args) -> int:
    from .acceptance import CRITERIA, run_criterion

    wanted = args.only or [num for num, *_ in CRITERIA]
    results = []
    for num in wanted:
        try:
            r = run_criterion(num, seed=args.seed, trials=args.trials)
        except KeyError:
            raise InputError(f"no acceptance criterion {num}") from None
        results.append(r)
        if not args.json:
            print(r.line(), flush=True)
    ok = all(r.passed for r in results)
    if args.json:
        print(
            json.dumps(
                {
                    "passed": ok,
                    "criteria": [
                        {"number": r.number, "name": r.name, "passed": r.passed, "detail": r.detail, "elapsed": round(r.elapsed, 3), "limit": r.limit}
                        for r in results
                    ],
                },
                indent=2,
            )
        )
    else:
        print(f"{sum(r.passed for r in results)}/{len(results)} criteria passed")
    return EXIT_OK if ok else EXIT_FAILED


# -- argument parsing ---------------------------------------------------------------------------


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        self.print_usage(sys.stderr)
        print(f"{self.prog}: error: {message}", file=sys.stderr)
        raise SystemExit(EXIT_BAD_INPUT)


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--ring", help="ring spec: Z, Z/m, Z/mxZ/n, valq:<group>[:<cut>], a demo name or a ring JSON file")
    common.add_argument("--json", action="store_true", help="machine-readable output")

    parser = _Parser(prog="ring-forge", description="Exact computations in arithmetic rings.")
    parser.add_argument("--version", action="version", version=f"ring-forge {__version__}")
    sub = parser.add_subparsers(dest="command", metavar="command", parser_class=_Parser)
    sub.required = True

    def add(name, fn, help_text, values=None):
        p = sub.add_parser(name, parents=[common], help=help_text, description=help_text)
        if values:
            p.add_argument("values", nargs="*", metavar=values)
        p.set_defaults(fn=fn)
        return p

    p = add("smith", cmd_smith, "diagonal form P*A*Q = D with divisibility chain")
    p.add_argument("--matrix", help="JSON array of integer rows")
    add("bezout", cmd_bezout, "Bezout triple for a b", "a b")
    add("hermite", cmd_hermite, "Hermite reduction a = d*a', b = d*b', (a', b') = R", "a b")
    add("adequate", cmd_adequate, "adequate factorization a = r*s relative to b", "a b")
    add("canon", cmd_canon, "canonical form of R/a1 + ... + R/an", "a")
    add("gh", cmd_gh, "p, q with (pa, pb + qc) = R for a unimodular triple", "a b c")
    add("minprime", cmd_minprime, "unique minimal prime versus the annihilator condition")
    p = add("ann", cmd_ann, "annihilator of an element")
    p.add_argument("--element")
    p = add("fg", cmd_fg, "is an ideal finitely generated modulo the ring's modulus")
    p.add_argument("--cut", help="ideal of a valuation quotient")
    p.add_argument("--descriptor", help="descriptor JSON (text or file) for a function-ring quotient")
    p.add_argument("--element", help="use the annihilator of this element")
    p = add("lambda", cmd_lambda, "annihilator chain and lambda of R/xR")
    p.add_argument("--element")
    p.add_argument("--depth", type=int, default=8)
    add("classify", cmd_classify, "coherence / fp-injectivity class of a valuation quotient")
    p = sub.add_parser("demo", parents=[common], help="reproduce a worked example and diff it against its golden file")
    p.add_argument("name", help=", ".join(EXAMPLE_NAMES))
    p.set_defaults(fn=cmd_demo)
    p = sub.add_parser("selftest", parents=[common], help="run the acceptance criteria")
    p.add_argument("--only", type=int, action="append", help="run only this criterion (repeatable)")
    p.add_argument("--seed", type=int, default=0, help="seed for the randomized suites (default 0)")
    p.add_argument("--trials", type=int, default=None, help="cut-law trials per group kind (default 10000)")
    p.set_defaults(fn=cmd_selftest)
    return parser


def run(argv: list[str] | None = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    try:
        return args.fn(args)
    except ParseError as exc:
        print(f"ring-forge: parse error: {exc}", file=sys.stderr)
    except (InputError, ContainmentError, ValueError, TypeError, KeyError) as exc:
        print(f"ring-forge: error: {exc}", file=sys.stderr)
    return EXIT_BAD_INPUT


def main() -> None:
    sys.exit(run())


if __name__ == "__main__":
    main()
