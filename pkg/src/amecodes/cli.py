"""Command line interface.

Exit status: 0 success, 1 verification failure (a witness is printed),
2 usage or construction error, 3 budget refusal.
"""
from __future__ import annotations

import argparse
import itertools
import json
import os
import sys
from pathlib import Path

import numpy as np

from . import catalog
from .cyclotomic import CyclotomicInt
from .codes import LinearCode, is_mds, latex_matrix, mds_generator, singular_submatrix
from .errors import DEFAULT_BUDGET, AmeError, BudgetExceeded, ConstructionError, NotMDSError
from .field import field_from_json, get_field
from .pauli import PauliString
from .qecc import (build_code, certify_distance, code_to_json, verify_knill_laflamme)
from .stabilizer import (min_class_weight, search_incompressible, state_stabilizers,
                         stabilizers_for)
from .states import (SparseState, ame_basis_element, build_ame, closed_form, inner_product,
                     non_uniform_subset)

OUTPUT_DIR_ENV = "AMECODES_OUTPUT_DIR"

OK, FAIL, USAGE, BUDGET = 0, 1, 2, 3


class Failure(Exception):
    """Verification failed; the message carries the witness."""


class Output:
    def __init__(self, args):
        self.args = args
        self.chunks: list[str] = []

    def text(self, s: str = ""):
        self.chunks.append(s if s.endswith("\n") else s + "\n")

    def json(self, obj):
        self.chunks.append(json.dumps(obj, indent=2) + "\n")

    def flush(self):
        data = "".join(self.chunks)
        target = self.args.out
        if target:
            path = Path(target)
            base = os.environ.get(OUTPUT_DIR_ENV)
            if base and not path.is_absolute():
                path = Path(base) / path
            path.parent.mkdir(parents=True, exist_ok=True)
            path.write_text(data)
        else:
            sys.stdout.write(data)


def _load(path: str):
    with open(path) as fh:
        return json.load(fh)


def _paper_compat(args) -> bool:
    return not args.no_paper_compat


def _mds(args) -> LinearCode:
    return mds_generator(args.n, get_field(args.q, _paper_compat(args)))


def _fmt_matrix(mat) -> str:
    return "\n".join(" ".join(str(int(v)) for v in row) for row in np.asarray(mat))


# -- commands --------------------------------------------------------------------

def cmd_field_table(args, out: Output):
    if args.input:
        f = field_from_json(_load(args.input))
    else:
        f = get_field(args.q, _paper_compat(args))
    if args.json:
        out.json(f.to_json())
        return
    rows = [("tuple", "polynomial", "level")] + f.table_rows()
    widths = [max(len(r[i]) for r in rows) for i in range(3)]
    out.text(f"{f.name} modulo {f.format_modulus()}, gamma={f.format(f.primitive)}")
    for r in rows:
        out.text("  ".join(c.ljust(w) for c, w in zip(r, widths)).rstrip())


def cmd_singleton_array(args, out: Output):
    if args.input:
        data = _load(args.input)
        items = data if isinstance(data, list) else [data]
        for item in items:
            fresh = catalog.singleton_arrays_json((int(item["q"]),), _paper_compat(args))[0]
            if fresh["rows"] != item["rows"]:
                raise Failure(f"rows of S_{item['q']} differ from the recomputed array")
        out.text(f"ok: {len(items)} array(s) reproduced")
        return
    if args.json:
        out.json(catalog.singleton_arrays_json((args.q,), _paper_compat(args))[0])
    else:
        out.text(catalog.singleton_array_text(args.q, _paper_compat(args)))


def _code_from_json(data: dict, paper_compat: bool) -> LinearCode:
    return LinearCode(get_field(int(data["q"]), paper_compat), np.array(data["G"]))


def cmd_mds(args, out: Output):
    if args.input:
        code = _code_from_json(_load(args.input), _paper_compat(args))
        if not is_mds(code):
            raise Failure(f"not MDS; singular submatrix (rows, cols) = {singular_submatrix(code.redundancy, code.field)}")
    else:
        code = _mds(args)
    if args.json:
        out.json(code.to_json())
    elif args.latex:
        out.text(latex_matrix(code))
    else:
        d = code.to_json()
        out.text(f"[{code.n},{code.k},{d['d']}]_{code.q} MDS={d['is_mds']}")
        out.text("G =\n" + _fmt_matrix(code.generator))
        out.text("H =\n" + _fmt_matrix(code.parity_check()))


def cmd_make_ame(args, out: Output):
    code = _code_from_json(_load(args.input), _paper_compat(args)) if args.input else _mds(args)
    state = build_ame(code)
    if args.json:
        out.json(state.to_json())
        return
    if args.closed_form or not args.words:
        out.text(closed_form(code, latex=args.latex))
    if args.words:
        for w in state.words:
            out.text(" ".join(str(int(v)) for v in w))


def cmd_verify_ame(args, out: Output):
    if args.input:
        state = SparseState.from_json(_load(args.input))
    else:
        if args.n is None or args.q is None:
            raise argparse.ArgumentTypeError("verify-ame needs --in or both --n and --q")
        state = build_ame(_mds(args))
    k = state.n // 2 if args.k is None else args.k
    bad = non_uniform_subset(state, k, args.budget)
    if bad is not None:
        raise Failure(f"not {k}-uniform; witness subset (1-indexed sites) = {[s + 1 for s in bad]}")
    out.text(f"ok: n={state.n} q={state.q} terms={len(state)} is {k}-uniform")


def cmd_basis_check(args, out: Output):
    code = _mds(args)
    state = build_ame(code)
    n, q = state.n, state.q
    total = q**n
    if total * total // 2 * len(state) <= args.budget:
        labels = list(itertools.product(range(q), repeat=n))
        pairs = itertools.combinations(range(total), 2)
        sampled = False
    else:
        rng = np.random.default_rng(args.seed)
        labels = [tuple(int(v) for v in rng.integers(0, q, n)) for _ in range(2 * args.samples)]
        pairs = ((2 * i, 2 * i + 1) for i in range(args.samples))
        sampled = True
    states = {}

    def get(i):
        if i not in states:
            states[i] = ame_basis_element(state, labels[i])
        return states[i]

    count = 0
    for i, j in pairs:
        if labels[i] == labels[j]:
            continue
        if not inner_product(get(i), get(j)).is_zero():
            raise Failure(f"M({list(labels[i])}) and M({list(labels[j])}) are not orthogonal")
        count += 1
    norm = len(state)
    for i in list(states):
        ip = inner_product(states[i], states[i])
        if ip != CyclotomicInt.root(q, 0, norm):
            raise Failure(f"M({list(labels[i])}) has squared norm {ip} != {norm}")
    mode = "sampled" if sampled else "all"
    out.text(f"ok: {count} pairs orthogonal ({mode}), squared norm {norm} for {len(states)} elements")


def _pauli(args, n, q) -> PauliString:
    m = PauliString.parse(args.m, q)
    if m.n != n:
        raise argparse.ArgumentTypeError(f"--m has {m.n} factors, expected n={n}")
    return m


def cmd_min_weight(args, out: Output):
    if args.input:
        data = _load(args.input)
        m = PauliString.from_json(data.get("M", data))
        n, q = m.n, m.q
    else:
        n, q = args.n, args.q
        m = _pauli(args, n, q)
    stab = stabilizers_for(n, q, _paper_compat(args))
    w, real = min_class_weight(m, stab, args.budget)
    if args.json:
        out.json({"n": n, "q": q, "M": m.to_json(), "weight": w, "realization": real.to_json()})
    else:
        out.text(f"{m}: minimal class weight {w}, realization {real}")


def cmd_search_m(args, out: Output):
    hits = search_incompressible(args.n, args.q, args.target_w, first=not args.all,
                                 paper_compat=_paper_compat(args), budget=args.budget)
    if args.json:
        out.json({"n": args.n, "q": args.q, "target_w": args.target_w,
                  "found": [h.to_json() for h in hits]})
    else:
        for h in hits:
            out.text(str(h))
        out.text(f"# {len(hits)} string(s) with class weight {args.target_w}")
    if not hits:
        raise Failure(f"no canonical string with class weight {args.target_w}")


def _code(args, n, q, m_text, paper_compat):
    stab = stabilizers_for(n, q, paper_compat)
    return build_code(stab, PauliString.parse(m_text, q))


def cmd_build_code(args, out: Output):
    pc = _paper_compat(args)
    if args.m:
        m_text = args.m
    else:
        hits = search_incompressible(args.n, args.q, args.target_w, first=True, paper_compat=pc,
                                     budget=args.budget)
        if not hits:
            raise Failure(f"no string with class weight {args.target_w}")
        m_text = str(hits[0])
    code = _code(args, args.n, args.q, m_text, pc)
    d = certify_distance(code, args.method, args.budget)
    if d != code.distance:
        raise Failure(f"certified distance {d} differs from class weight {code.distance}")
    if args.json:
        out.json(code_to_json(code))
    else:
        out.text(f"{code.label} with M = {code.logical}, realization {code.realization}")
        out.text("code stabilizers:")
        for s in code_to_json(code)["generators"]:
            out.text(f"  {s}")


def _verify_one(data: dict, d_claim, method, budget, paper_compat) -> str:
    n, q = int(data["n"]), int(data["q"])
    pc = bool(data.get("paper_compat", paper_compat))
    m = PauliString.from_json(data["logical"]) if "logical" in data else PauliString.parse(data["M"], q)
    stab = stabilizers_for(n, q, pc)
    if "G" in data and not np.array_equal(np.array(data["G"]), stab.code.generator):
        # a generator other than the default one
        stab = state_stabilizers(LinearCode(get_field(q, pc), np.array(data["G"])))
    code = build_code(stab, m)
    d = d_claim if d_claim is not None else int(data.get("distance", data.get("certified_d")))
    rep = verify_knill_laflamme(code, d, method, budget)
    if not rep:
        raise Failure(f"{m} at n={n} q={q}: Knill-Laflamme fails for d={d}; "
                      f"witness {rep.witness} (m={rep.shift})")
    return f"ok: [[{n},1,{d}]]_{q} with M = {m}"


def cmd_verify_code(args, out: Output):
    pc = _paper_compat(args)
    if args.input:
        data = _load(args.input)
        if isinstance(data, list):  # catalog rows
            for row in data:
                if row.get("M") is None:
                    continue
                out.text(_verify_one(dict(row, paper_compat=False), args.d, args.method, args.budget, pc))
            return
        out.text(_verify_one(data, args.d, args.method, args.budget, pc))
        return
    if args.n is None or args.q is None or args.m is None:
        raise argparse.ArgumentTypeError("verify-code needs --in or --n, --q and --m")
    code = _code(args, args.n, args.q, args.m, pc)
    d = code.distance if args.d is None else args.d
    out.text(_verify_one({"n": args.n, "q": args.q, "M": args.m, "paper_compat": pc},
                         d, args.method, args.budget, pc))


def cmd_catalog(args, out: Output):
    if args.singleton_arrays:
        if args.json:
            out.json(catalog.singleton_arrays_json(paper_compat=_paper_compat(args)))
        else:
            out.text(catalog.singleton_arrays_text(paper_compat=_paper_compat(args)).rstrip("\n"))
        return
    rows = catalog.table1(threads=args.threads, budget=args.budget)
    if args.json:
        out.json(rows)
    else:
        out.text(catalog.table1_text(rows).rstrip("\n"))
    bad = [r for r in rows if r["certified_d"] != r["listed_d"]]
    if bad:
        raise Failure("rows not reproduced: " + ", ".join(f"n={r['n']} q={r['q']}" for r in bad))


# -- parser ----------------------------------------------------------------------

def _common() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(add_help=False)
    g = p.add_argument_group("global options")
    g.add_argument("--budget", type=int, default=DEFAULT_BUDGET,
                   help="largest enumeration a command may run (default 10^8)")
    g.add_argument("--seed", type=int, default=0, help="seed for sampled checks")
    g.add_argument("--threads", type=int, default=1, help="worker processes")
    g.add_argument("--out", help=f"write output to a file (relative to ${OUTPUT_DIR_ENV} if set)")
    g.add_argument("--json", action="store_true", help="JSON output")
    g.add_argument("--latex", action="store_true", help="LaTeX output where available")
    g.add_argument("--no-paper-compat", action="store_true",
                   help="canonical field choices instead of the reference tables' conventions")
    g.add_argument("--paper-compat", action="store_true", help="reference conventions (default)")
    return p


def build_parser() -> argparse.ArgumentParser:
    common = _common()
    parser = argparse.ArgumentParser(
        prog="amecodes", description="Exact AME states, their stabilizers and [[n,1,d]]_q codes.",
        epilog="exit status: 0 ok, 1 verification failure, 2 usage error, 3 budget refusal")
    sub = parser.add_subparsers(dest="command", required=True)

    def add(name, func, help_):
        p = sub.add_parser(name, parents=[common], help=help_)
        p.set_defaults(func=func)
        return p

    p = add("field-table", cmd_field_table, "element table of GF(q)")
    p.add_argument("--q", type=int)
    p.add_argument("--in", dest="input")

    p = add("singleton-array", cmd_singleton_array, "Singleton array of GF(q)")
    p.add_argument("--q", type=int)
    p.add_argument("--in", dest="input")

    p = add("mds", cmd_mds, "[n, n//2] MDS generator and parity check")
    p.add_argument("--n", type=int)
    p.add_argument("--q", type=int)
    p.add_argument("--in", dest="input")

    p = add("make-ame", cmd_make_ame, "minimal-support AME state")
    p.add_argument("--n", type=int)
    p.add_argument("--q", type=int)
    p.add_argument("--in", dest="input", help="code JSON from `mds --json`")
    p.add_argument("--closed-form", action="store_true")
    p.add_argument("--words", action="store_true")

    p = add("verify-ame", cmd_verify_ame, "check that every k-marginal is maximally mixed")
    p.add_argument("--n", type=int)
    p.add_argument("--q", type=int)
    p.add_argument("--in", dest="input", help="state JSON from `make-ame --json`")
    p.add_argument("--k", type=int)

    p = add("basis-check", cmd_basis_check, "orthonormality of the AME basis M(a)|Psi>")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--q", type=int, required=True)
    p.add_argument("--samples", type=int, default=500)

    p = add("min-weight", cmd_min_weight, "minimal weight of the class of M")
    p.add_argument("--n", type=int)
    p.add_argument("--q", type=int)
    p.add_argument("--m")
    p.add_argument("--in", dest="input", help="Pauli JSON or `min-weight --json` output")

    p = add("search-m", cmd_search_m, "canonical strings of a given class weight")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--q", type=int, required=True)
    p.add_argument("--target-w", type=int, required=True)
    grp = p.add_mutually_exclusive_group()
    grp.add_argument("--all", action="store_true")
    grp.add_argument("--first", action="store_true")

    p = add("build-code", cmd_build_code, "build and certify the [[n,1,d]]_q code of M")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--q", type=int, required=True)
    grp = p.add_mutually_exclusive_group(required=True)
    grp.add_argument("--m")
    grp.add_argument("--target-w", type=int, help="use the first string found with this class weight")
    p.add_argument("--method", choices=("table", "enumerate"), default="table")

    p = add("verify-code", cmd_verify_code, "Knill-Laflamme check at a claimed distance")
    p.add_argument("--n", type=int)
    p.add_argument("--q", type=int)
    p.add_argument("--m")
    p.add_argument("--d", type=int)
    p.add_argument("--in", dest="input", help="JSON from `build-code --json` or `catalog --table1 --json`")
    p.add_argument("--method", choices=("table", "enumerate"), default="table")

    p = add("catalog", cmd_catalog, "regenerate the reference tables")
    grp = p.add_mutually_exclusive_group(required=True)
    grp.add_argument("--table1", action="store_true")
    grp.add_argument("--singleton-arrays", action="store_true")
    return parser


_NEEDS = {"field-table": ("q",), "singleton-array": ("q",), "mds": ("n", "q"),
          "make-ame": ("n", "q"), "min-weight": ("n", "q", "m")}


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    if args.json and args.latex:
        parser.error("--json and --latex are exclusive")
    need = _NEEDS.get(args.command, ())
    if need and not getattr(args, "input", None) and any(getattr(args, a) is None for a in need):
        parser.error(f"{args.command} needs --in or " + ", ".join(f"--{a}" for a in need))
    out = Output(args)
    try:
        args.func(args, out)
    except Failure as exc:
        out.flush()
        print(f"FAIL: {exc}", file=sys.stderr)
        return FAIL
    except NotMDSError as exc:
        print(f"FAIL: {exc} witness={exc.witness}", file=sys.stderr)
        return FAIL
    except BudgetExceeded as exc:
        print(f"refused: {exc}", file=sys.stderr)
        return BUDGET
    except (argparse.ArgumentTypeError, AmeError, ConstructionError, ValueError,
            FileNotFoundError, KeyError, json.JSONDecodeError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return USAGE
    out.flush()
    return OK


if __name__ == "__main__":  # pragma: no cover
    sys.exit(main())
