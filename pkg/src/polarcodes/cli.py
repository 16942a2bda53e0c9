"""Command-line front end.

Reads a code (one word per line, ``#`` comments) from ``--input`` or stdin and
prints results one item per line, or as a JSON object with ``--json``.  Exit
status is 0 on success, 1 on usage or parse errors and 2 when a verification
or oracle comparison finds a mismatch.
"""

from __future__ import annotations

import argparse
import json
import sys
import time

from . import oracle, verify
from .ideals import (
    CanonicalForm,
    VariableSpace,
    cf_of_pm_ideal,
    min_primes,
    neural_ideal_cf,
    parse_pm,
    primary_decomposition,
    sorted_primes,
)
from .motifs import (
    Code,
    Motif,
    as_motif,
    is_antichain,
    max_mot,
    max_mot_complement,
    parse_code,
    parse_lines,
    sorted_motifs,
)
from .polarization import (
    formal_polarize,
    gjs_witness,
    polarize_code,
    polarize_motif,
)
from .polarization import gjs_prime_test


class UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        self.print_usage(sys.stderr)
        self.exit(1, f"{self.prog}: error: {message}\n")


def _read_text(args) -> str:
    if args.input in (None, "-"):
        return sys.stdin.read()
    with open(args.input) as fh:
        return fh.read()


def _load_code(args) -> tuple[Code, bool]:
    """The input code and whether it was written in doubled ``a|b`` form."""
    lines = parse_lines(_read_text(args))
    doubled = args.doubled or any("|" in s for s in lines)
    if not lines and args.n is None:
        raise UsageError("empty code: pass --n to give its length")
    return Code.from_words(lines, args.n), doubled


def _emit(args, *, n, doubled, motifs=(), cf=(), primes=(), extra=None, text=None):
    if args.json:
        payload = {
            "n": n,
            "doubled": doubled,
            "motifs": list(motifs),
            "cf": list(cf),
            "primes": [list(p) for p in primes],
        }
        if extra:
            payload.update(extra)
        print(json.dumps(payload, sort_keys=True))
        return
    lines = text if text is not None else list(motifs) + list(cf) + [
        "(" + ", ".join(p) + ")" if p else "(0)" for p in primes]
    for line in lines:
        print(line)


def _base_n(length: int, doubled: bool) -> int:
    return length // 2 if doubled else length


def _motif_lines(motifs, doubled: bool) -> list[str]:
    return [m.format(doubled) for m in sorted_motifs(motifs)]


def _cf_lines(cf: CanonicalForm) -> list[str]:
    return cf.lines()


def _prime_lists(primes) -> list[list[str]]:
    return [p.generator_strings() for p in sorted_primes(primes)]


# -- subcommands ------------------------------------------------------------

def cmd_maxmot(args):
    C, doubled = _load_code(args)
    _emit(args, n=_base_n(C.n, doubled), doubled=doubled,
          motifs=_motif_lines(max_mot(C), doubled))


def cmd_complement_maxmot(args):
    lines = parse_lines(_read_text(args))
    doubled = args.doubled or any("|" in s for s in lines)
    ms = [as_motif(s) for s in lines]
    if not ms and args.n is None:
        raise UsageError("empty motif list: pass --n to give the length")
    n = args.n if args.n is not None else len(ms[0])
    if any(len(m) != n for m in ms):
        raise UsageError("motifs of different lengths")
    if not is_antichain(ms):
        raise UsageError("input motifs are not an antichain")
    _emit(args, n=_base_n(n, doubled), doubled=doubled,
          motifs=_motif_lines(max_mot_complement(ms, n), doubled))


def cmd_cf(args):
    C, doubled = _load_code(args)
    cf = neural_ideal_cf(C, doubled)
    _emit(args, n=_base_n(C.n, doubled), doubled=doubled, cf=_cf_lines(cf))


def cmd_cf_ideal(args):
    if args.n is None:
        raise UsageError("cf-ideal needs --n")
    space = VariableSpace(args.n, args.doubled)
    gens = [parse_pm(s, space) for s in parse_lines(_read_text(args))]
    cf = cf_of_pm_ideal(gens, space)
    _emit(args, n=args.n, doubled=args.doubled, cf=_cf_lines(cf))


def cmd_polarize_motif(args):
    raw = args.motifs or parse_lines(_read_text(args))
    ms = [as_motif(s) for s in raw]
    if not ms:
        raise UsageError("no motifs given")
    n = len(ms[0])
    out = [polarize_motif(m).format(True) for m in ms]
    _emit(args, n=n, doubled=True, motifs=out)


def _emit_code(args, code: Code, n: int):
    _emit(args, n=n, doubled=True, motifs=code.format(True))


def cmd_polarize_code(args):
    C, _ = _load_code(args)
    _emit_code(args, polarize_code(C), C.n)


def cmd_formal_polarize(args):
    C, _ = _load_code(args)
    _emit_code(args, formal_polarize(C), C.n)


def cmd_minprimes(args):
    C, doubled = _load_code(args)
    _emit(args, n=_base_n(C.n, doubled), doubled=doubled,
          primes=_prime_lists(min_primes(C, doubled)))


def cmd_decompose(args):
    C, doubled = _load_code(args)
    if not C.words:
        raise UsageError("the neural ideal of the empty code is the unit ideal")
    primes = primary_decomposition(C, doubled)
    _emit(args, n=_base_n(C.n, doubled), doubled=doubled,
          primes=[p.generator_strings() for p in primes])


def cmd_gjs_check(args):
    C, _ = _load_code(args)
    c = as_motif(args.motif)
    if len(c) % 2:
        raise UsageError("the motif must have even length 2n")
    idx, a = gjs_witness(c, C)
    holds = gjs_prime_test(c, C)
    text = [str(holds).lower()]
    if not args.quiet:
        text.append(f"deactivated: {','.join(map(str, sorted(idx))) or '-'}")
        text.append(f"partial motif: {a}")
    _emit(args, n=C.n, doubled=False, motifs=[str(a)],
          extra={"holds": holds, "deactivated": sorted(idx)}, text=text)


def cmd_verify(args):
    start = time.perf_counter()
    if args.random is not None:
        if args.n is None or args.seed is None:
            raise UsageError("verify --random needs --n and --seed")
        res = verify.run_random(args.random, args.n, args.seed)
        label = f"random K={args.random} n={args.n} seed={args.seed}"
    else:
        n = args.exhaustive_n if args.exhaustive_n is not None else 3
        if n > 4:
            raise UsageError("exhaustive verification is limited to n <= 4")
        res = verify.run_exhaustive(n)
        if n <= 3:
            res.merge(verify.run_gjs(n, 0, 0, list(oracle.all_codes(n))))
        label = f"exhaustive n={n}"
    if args.json:
        print(json.dumps({
            "suite": label,
            "ok": res.ok,
            "checks": {k: {"runs": res.checks[k], "failures": res.failures.get(k, [])[:20]}
                       for k in sorted(res.checks)},
        }, sort_keys=True))
    elif not args.quiet:
        for line in res.summary():
            print(line)
        for name, bad in sorted(res.failures.items()):
            for msg in bad[:20]:
                print(f"  {name}: {msg}", file=sys.stderr)
        print(f"{label}: {'ok' if res.ok else 'FAILED'} in {time.perf_counter() - start:.1f}s")
    return 0 if res.ok else 2


def cmd_oracle_compare(args):
    C, _ = _load_code(args)
    hx = C.to_hex()
    lines = []
    fast, slow = max_mot(C), oracle.brute_max_mot(C)
    for m in sorted_motifs(fast ^ slow):
        lines.append(f"CODE {hx} MOTIF {m} fast={str(m in fast).lower()} "
                     f"oracle={str(m in slow).lower()}")
    fcf, ocf = neural_ideal_cf(C).elements, oracle.brute_cf(C).elements
    for f in sorted(fcf ^ ocf, key=str):
        lines.append(f"CODE {hx} MOTIF {f.motif()} fast={str(f in fcf).lower()} "
                     f"oracle={str(f in ocf).lower()}")
    if C.n <= oracle.MAX_SCAN_N:
        lines += oracle.brute_gjs_scan(C).lines()
    if args.json:
        print(json.dumps({"discrepancies": lines}, sort_keys=True))
    else:
        for line in lines:
            print(line)
    return 2 if lines else 0


COMMANDS = {
    "maxmot": (cmd_maxmot, "maximal motifs of the input code"),
    "complement-maxmot": (cmd_complement_maxmot,
                          "maximal motifs of the complement, from a motif list"),
    "cf": (cmd_cf, "canonical form of the neural ideal"),
    "cf-ideal": (cmd_cf_ideal, "canonical form of the ideal of listed pseudo-monomials"),
    "polarize-motif": (cmd_polarize_motif, "polarize motifs"),
    "polarize-code": (cmd_polarize_code, "polarization of the input code"),
    "formal-polarize": (cmd_formal_polarize, "formal polarization of the input code"),
    "minprimes": (cmd_minprimes, "minimal primes of the neural ideal"),
    "decompose": (cmd_decompose, "irredundant primary decomposition"),
    "gjs-check": (cmd_gjs_check, "partial-code test for a prime over the formal polarization"),
    "verify": (cmd_verify, "run the property suites"),
    "oracle-compare": (cmd_oracle_compare, "compare fast routines with brute force"),
}


def build_parser() -> argparse.ArgumentParser:
    common = _Parser(add_help=False)
    common.add_argument("--input", "-i", help="code or motif file (default: stdin)")
    common.add_argument("--json", action="store_true", help="emit JSON")
    common.add_argument("--quiet", "-q", action="store_true", help="less output")
    common.add_argument("--n", type=int, help="length (needed for empty input)")
    common.add_argument("--doubled", action="store_true",
                        help="treat input as living in the doubled X/Y space")

    parser = _Parser(prog="polarcodes", description=__doc__.splitlines()[0],
                     parents=[common])
    sub = parser.add_subparsers(dest="command", required=True, parser_class=_Parser)
    for name, (fn, helptext) in COMMANDS.items():
        p = sub.add_parser(name, help=helptext, parents=[common])
        p.set_defaults(func=fn)
        if name == "polarize-motif":
            p.add_argument("motifs", nargs="*")
        elif name == "gjs-check":
            p.add_argument("--motif", required=True)
        elif name == "verify":
            g = p.add_mutually_exclusive_group()
            g.add_argument("--exhaustive-n", type=int)
            g.add_argument("--random", type=int, metavar="K")
            p.add_argument("--seed", type=int)
    return parser


def run(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args) or 0
    except (UsageError, ValueError, OSError) as exc:
        print(f"polarcodes: error: {exc}", file=sys.stderr)
        return 1


def main():
    sys.exit(run())


if __name__ == "__main__":
    main()
