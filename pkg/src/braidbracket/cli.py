"""Command-line front end.

Three subcommands: ``bracket`` (refined bracket, lightened and normalized
forms), ``homology`` (tri-graded groups and graded Euler characteristic)
and ``verify`` (invariance battery on generated braid-like pairs, or
negative controls).  Input is a braid word (``-w "B2 1 1 1"``), an
oriented-PD JSON file (``-f`` or a positional path), or ``-`` for stdin.

Exit codes: 0 success, 2 parse error, 3 size cap exceeded, 4 pair
generation failure, 5 verification failure.  Output is byte-deterministic
for a fixed input, seed and version.
"""

from __future__ import annotations

import argparse
import json
import sys
from dataclasses import dataclass
from typing import Optional

from .diagram import DiagramError, OrientedDiagram, parse_braid_word, parse_pd
from .laurent import lp_str, lp2_str
from .states import SizeCapError, enumerate_states
from .bracket import (
    bracket_br,
    bracket_to_json,
    kauffman_oracle,
    lighten,
    normalize,
    seifert_leading_term,
    skein_expand,
    specialize_chi_to_delta,
)
from .chain_complex import differential_matrices
from .homology import (
    euler_characteristic,
    homology_groups,
    homology_to_json,
    lightened_in_h,
)
from .moves import GenerationError, apply_move, find_sites, random_equivalent_pair
from .diagram import BraidWord

EXIT_OK = 0
EXIT_PARSE = 2
EXIT_CAP = 3
EXIT_GENERATION = 4
EXIT_VERIFY = 5

HARD_CAP = 24


@dataclass
class RunConfig:
    command: str
    word: Optional[str]
    path: Optional[str]
    cap: int
    seed: int
    moves: int
    threads: int
    fmt: str
    verify: bool
    dump_matrices: bool
    negative_control: Optional[str]


def _build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="braidbracket", description=__doc__)
    sub = p.add_subparsers(dest="command", required=True)
    for name in ("bracket", "homology", "verify"):
        sp = sub.add_parser(name)
        sp.add_argument("input", nargs="?", help="oriented-PD JSON file")
        sp.add_argument("-w", "--word", help='braid word, e.g. "B2 1 1 1"')
        sp.add_argument("-f", "--file", help="oriented-PD JSON file")
        sp.add_argument("--cap", type=int, default=24, help="state-sum size cap")
        sp.add_argument("--unsafe-cap", action="store_true",
                        help="allow caps above 24 crossings")
        sp.add_argument("--seed", type=int, default=0)
        sp.add_argument("--moves", type=int, default=10)
        sp.add_argument("--threads", type=int, default=1)
        sp.add_argument("--format", dest="fmt", default="pretty",
                        choices=("json", "csv", "pretty"))
        sp.add_argument("--verify", action="store_true",
                        help="homology: also check the Euler identity and d^2 = 0")
        sp.add_argument("--dump-matrices", action="store_true")
        sp.add_argument("--negative-control", choices=("RI", "IIb"))
    return p


def _load_diagram(cfg: RunConfig) -> OrientedDiagram:
    if cfg.word is not None:
        return parse_braid_word(cfg.word)
    path = cfg.path
    if path is None:
        raise DiagramError("no input: give -w WORD, -f FILE, or a file path")
    data = sys.stdin.read() if path == "-" else open(path, "rb").read()
    return parse_pd(data)


def _poly_json(poly) -> dict:
    return {str(e): str(c) for e, c in sorted(poly.items())}


def cmd_bracket(cfg: RunConfig) -> int:
    diagram = _load_diagram(cfg)
    b = bracket_br(diagram, cap=cfg.cap, threads=cfg.threads)
    light = lighten(b)
    norm = normalize(diagram, b)
    if cfg.fmt == "json":
        obj = {
            "writhe": diagram.writhe(),
            "bracket": bracket_to_json(b),
            "lightened": [
                {"a": a, "chi": m, "coeff": str(c)}
                for (a, m), c in sorted(light.items())
            ],
            "normalized": bracket_to_json(norm),
        }
        print(json.dumps(obj, sort_keys=True))
    elif cfg.fmt == "csv":
        print("section,config,exponent,coefficient")
        for cfg_str, poly in sorted(b.items()):
            for e, c in sorted(poly.items()):
                print(f"bracket,{cfg_str},{e},{c}")
        for (a, m), c in sorted(light.items()):
            print(f"lightened,chi^{m},{a},{c}")
        for cfg_str, poly in sorted(norm.items()):
            for e, c in sorted(poly.items()):
                print(f"normalized,{cfg_str},{e},{c}")
    else:
        print(f"writhe: {diagram.writhe()}")
        print("bracket:")
        for cfg_str, poly in sorted(b.items()):
            print(f"  {cfg_str or '(empty)'} : {lp_str(poly)}")
        light_str = " + ".join(
            f"({c})*A^{a}*chi^{m}" for (a, m), c in sorted(light.items())
        )
        print(f"lightened: {light_str or '0'}")
        print("normalized ((-A)^(-3w) * bracket):")
        for cfg_str, poly in sorted(norm.items()):
            print(f"  {cfg_str or '(empty)'} : {lp_str(poly)}")
    return EXIT_OK


def cmd_homology(cfg: RunConfig) -> int:
    diagram = _load_diagram(cfg)
    dm = differential_matrices(diagram, cap=cfg.cap)
    table = homology_groups(diagram, cap=cfg.cap, matrices=dm)
    euler = euler_characteristic(table)
    verify_lines = []
    failed = False
    if cfg.verify:
        euler_ok = lightened_in_h(diagram, cap=cfg.cap) == euler
        d2_ok = dm.check_d_squared()
        verify_lines = [f"euler: {'OK' if euler_ok else 'FAIL'}",
                        f"d2: {'OK' if d2_ok else 'FAIL'}"]
        failed = not (euler_ok and d2_ok)
    if cfg.fmt == "json":
        obj = homology_to_json(table, euler)
        if cfg.dump_matrices:
            obj["matrices"] = dm.to_sparse_json()
        if verify_lines:
            obj["verify"] = verify_lines
        print(json.dumps(obj, sort_keys=True))
    elif cfg.fmt == "csv":
        print("i,j,k,betti,torsion")
        for (i, j, k), (betti, torsion) in sorted(table.items()):
            print(f"{i},{j},{k},{betti},{';'.join(map(str, torsion))}")
        for line in verify_lines:
            print(f"# {line}")
    else:
        for (i, j, k), (betti, torsion) in sorted(table.items()):
            parts = ["Z"] * betti + [f"Z/{t}" for t in torsion]
            print(f"H[{i},{j},{k}] = {' + '.join(parts)}")
        print(f"euler: {lp2_str(euler)}")
        for line in verify_lines:
            print(line)
        if cfg.dump_matrices:
            print(json.dumps(dm.to_sparse_json(), sort_keys=True))
    return EXIT_VERIFY if failed else EXIT_OK


def _verify_battery(cfg: RunConfig) -> list:
    word = cfg.word
    if word is None:
        raise DiagramError("verify needs a braid word (-w)")
    tokens = word.split()
    base = BraidWord(int(tokens[0][1:]), tuple(int(t) for t in tokens[1:]))
    d1, d2 = random_equivalent_pair(cfg.seed, cfg.moves, base)
    checks = []
    b1, b2 = bracket_br(d1, cap=cfg.cap), bracket_br(d2, cap=cfg.cap)
    checks.append(("bracket equality", b1 == b2))
    checks.append(
        ("homology equality",
         homology_groups(d1, cap=cfg.cap) == homology_groups(d2, cap=cfg.cap))
    )
    for name, d in (("base", d1), ("moved", d2)):
        lhs = specialize_chi_to_delta(lighten(bracket_br(d, cap=cfg.cap)))
        checks.append((f"oracle identity ({name})", lhs == kauffman_oracle(d, cap=cfg.cap)))
    skein_ok = True
    from .laurent import lp_add, lp_shift
    for v in d1.active_crossings:
        d0, drest = skein_expand(d1, v)
        lhs = bracket_br(d1, cap=cfg.cap)
        rhs = {}
        for cfg_str, poly in bracket_br(d0, cap=cfg.cap).items():
            rhs[cfg_str] = lp_add(rhs.get(cfg_str, {}), lp_shift(poly, 1))
        for cfg_str, poly in bracket_br(drest, cap=cfg.cap).items():
            s = lp_add(rhs.get(cfg_str, {}), lp_shift(poly, -1))
            if s:
                rhs[cfg_str] = s
            elif cfg_str in rhs:
                del rhs[cfg_str]
        if rhs != lhs:
            skein_ok = False
    checks.append(("skein identity", skein_ok))
    try:
        seifert_leading_term(d1, cap=cfg.cap)
        checks.append(("seifert leading term", True))
    except AssertionError:
        checks.append(("seifert leading term", False))
    wind_ok = True
    for state in enumerate_states(d1, cap=cfg.cap, with_nesting=False):
        for c in state.circles:
            if (c.winding == 0) != (c.circle_type == "d") or abs(c.winding) > 1:
                wind_ok = False
    checks.append(("winding/type check", wind_ok))
    return checks


def cmd_verify(cfg: RunConfig) -> int:
    if cfg.negative_control:
        diagram = _load_diagram(cfg)
        kind = "RI_insert" if cfg.negative_control == "RI" else "IIb_insert"
        sites = find_sites(diagram, kind)
        if not sites:
            raise GenerationError(f"no {kind} site available")
        moved = apply_move(diagram, sites[cfg.seed % len(sites)])
        differs = bracket_br(moved, cap=cfg.cap) != bracket_br(diagram, cap=cfg.cap)
        if cfg.fmt == "json":
            print(json.dumps({"control": cfg.negative_control,
                              "bracket_differs": differs}, sort_keys=True))
        else:
            print(
                f"negative control {cfg.negative_control}: bracket "
                f"{'differs (expected difference found)' if differs else 'UNCHANGED'}"
            )
        return EXIT_OK if differs else EXIT_VERIFY
    checks = _verify_battery(cfg)
    ok = all(flag for _, flag in checks)
    if cfg.fmt == "json":
        print(json.dumps({name: bool(flag) for name, flag in checks}, sort_keys=True))
    else:
        for name, flag in checks:
            print(f"{name}: {'OK' if flag else 'FAIL'}")
        print("all checks passed" if ok else "verification failed")
    return EXIT_OK if ok else EXIT_VERIFY


def main(argv=None) -> int:
    args = _build_parser().parse_args(argv)
    cap = args.cap
    if cap > HARD_CAP and not args.unsafe_cap:
        print(f"cap {cap} above {HARD_CAP} needs --unsafe-cap", file=sys.stderr)
        return EXIT_PARSE
    cfg = RunConfig(
        command=args.command,
        word=args.word,
        path=args.file if args.file is not None else args.input,
        cap=cap,
        seed=args.seed,
        moves=args.moves,
        threads=max(1, args.threads),
        fmt=args.fmt,
        verify=args.verify,
        dump_matrices=args.dump_matrices,
        negative_control=args.negative_control,
    )
    try:
        if cfg.command == "bracket":
            return cmd_bracket(cfg)
        if cfg.command == "homology":
            return cmd_homology(cfg)
        return cmd_verify(cfg)
    except SizeCapError as exc:
        print(f"size cap exceeded: {exc}", file=sys.stderr)
        return EXIT_CAP
    except GenerationError as exc:
        print(f"pair generation failed: {exc}", file=sys.stderr)
        return EXIT_GENERATION
    except (DiagramError, json.JSONDecodeError, OSError, ValueError) as exc:
        print(f"input error: {exc}", file=sys.stderr)
        return EXIT_PARSE


if __name__ == "__main__":
    sys.exit(main())
