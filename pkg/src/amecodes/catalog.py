"""Regeneration of the reference tables: Singleton arrays and the [[n,1,d]]_q code list.

Singleton-array text format, one block per field, blocks separated by a
blank line::

    GF(2^3)={0,1,a_1,...,a_6} modulo (1+x^2+x^3), gamma=x
    a_1=x^2, a_2=1+x+x^2, ...
    S_8 =
    1 1 1 1 1 1 1 1
    1 a_1 a_2 a_3 a_4 a_5 a_6
    ...

Prime fields print entries as integer labels and omit the ``a_i`` line.
Extension fields print the ``a_i`` symbols, with their values as ascending
polynomials in ``x``.
"""
from __future__ import annotations

from concurrent.futures import ProcessPoolExecutor

from .codes import SingletonArray, extended_singleton_array_4, singleton_array
from .errors import DEFAULT_BUDGET
from .field import get_field
from .pauli import PauliString
from .qecc import build_code, certify_distance, singleton_bound_ok
from .stabilizer import min_class_weight, search_incompressible, stabilizers_for

SINGLETON_ORDERS = (2, 3, 4, 5, 7, 8, 9, 11)

# (n, listed distance, listed M, prime q values of the row)
CODE_ROWS = (
    (3, 1, "I.I.Z", (2, 3, 5)),
    (4, 2, "I.I.X.Z", (3, 5, 7)),
    (5, 2, "I.I.I.X.Z", (5, 7)),
    (6, 3, "I.I.X.Z.I.Z", (5, 7, 11, 13)),
    (7, 3, "Z.I.Z.I.I.I.Z", (7,)),
    (8, 4, "I.I.I.Z.I.Z.Z.X", (7,)),
)
# Listed q values without a prime-q stabilizer formalism.
CODE_ROWS_PRIME_POWER = {3: (4,), 4: (4,), 5: (4, 8), 6: (8, 9), 7: (8,), 8: (8,)}


def _field_header(q: int, paper_compat: bool = True) -> str:
    f = get_field(q, paper_compat)
    if f.m == 1:
        elems = ",".join(str(a) for a in range(q))
        return f"GF({q})={{{elems}}} modulo ({q}), gamma={f.primitive}"
    elems = "0,1," + ",".join(f"a_{i}" for i in range(1, q - 1))
    gamma = f.format(f.primitive)
    return f"GF({f.p}^{f.m})={{{elems}}} modulo ({f.format_modulus()}), gamma={gamma}"


def singleton_array_text(q: int, paper_compat: bool = True) -> str:
    f = get_field(q, paper_compat)
    arr: SingletonArray = extended_singleton_array_4(f) if q == 4 else singleton_array(f)
    lines = [_field_header(q, paper_compat)]
    if f.m > 1:
        lines.append(", ".join(f"a_{t}={f.format(arr.a(t))}" for t in range(1, q - 1)))
    name = f"S'_{q}" if arr.extended else f"S_{q}"
    lines.append(f"{name} =")
    for i, row in enumerate(arr.rows):
        if f.m == 1:
            lines.append(" ".join(str(v) for v in row))
        else:
            lines.append(" ".join(arr.symbol(i, j) for j in range(len(row))))
    return "\n".join(lines)


def singleton_arrays_text(orders=SINGLETON_ORDERS, paper_compat: bool = True) -> str:
    return "\n\n".join(singleton_array_text(q, paper_compat) for q in orders) + "\n"


def singleton_arrays_json(orders=SINGLETON_ORDERS, paper_compat: bool = True) -> list[dict]:
    out = []
    for q in orders:
        f = get_field(q, paper_compat)
        arr = extended_singleton_array_4(f) if q == 4 else singleton_array(f)
        d = arr.to_json()
        d["modulus"] = list(f.irreducible)
        d["a"] = {str(t): arr.a(t) for t in range(1, q - 1)}
        out.append(d)
    return out


def table1_row(n: int, d: int, m_text: str, q: int, budget: int = DEFAULT_BUDGET) -> dict:
    """Evaluate one ``(n, q)`` entry: class weight of the listed M and certified distance.

    The listed operators refer to the smallest primitive element, so the
    code is built over that field. When the listed M does not reach ``d`` an
    equivalent is taken from :func:`search_incompressible`.
    """
    stab = stabilizers_for(n, q, False)
    m = PauliString.parse(m_text, q)
    w = min_class_weight(m, stab).weight
    source = "listed"
    if w != d:
        hits = search_incompressible(n, q, d, first=True, paper_compat=False, budget=budget)
        if not hits:
            return {"n": n, "q": q, "listed_d": d, "listed_M": m_text, "M": None, "source": "none",
                    "class_weight": None, "certified_d": None, "singleton_ok": None}
        m, source = hits[0], "search"
        w = min_class_weight(m, stab).weight
    code = build_code(stab, m)
    cd = certify_distance(code, budget=budget)
    return {"n": n, "q": q, "listed_d": d, "listed_M": m_text, "M": str(m), "source": source,
            "class_weight": w, "certified_d": cd, "singleton_ok": singleton_bound_ok(n, cd),
            "code": f"[[{n},1,{cd}]]_{q}"}


def _row_args():
    for n, d, m_text, qs in CODE_ROWS:
        for q in qs:
            yield n, d, m_text, q


def table1(threads: int = 1, budget: int = DEFAULT_BUDGET) -> list[dict]:
    """All prime-q rows, in table order; identical for any thread count."""
    args = list(_row_args())
    if threads <= 1:
        return [table1_row(*a, budget=budget) for a in args]
    with ProcessPoolExecutor(max_workers=threads) as pool:
        futures = [pool.submit(table1_row, *a, budget=budget) for a in args]
        return [f.result() for f in futures]


def table1_text(rows: list[dict]) -> str:
    header = ("code", "q", "M", "source", "class_w", "certified_d")
    body = [(f"[[{r['n']},1,{r['listed_d']}]]", str(r["q"]), r["M"] or "-", r["source"],
             str(r["class_weight"]), str(r["certified_d"])) for r in rows]
    widths = [max(len(x[i]) for x in [header] + body) for i in range(len(header))]
    lines = ["  ".join(c.ljust(w) for c, w in zip(line, widths)).rstrip() for line in [header] + body]
    skipped = ", ".join(f"n={n}: q={','.join(map(str, qs))}" for n, qs in CODE_ROWS_PRIME_POWER.items())
    lines.append(f"# prime-power q not certified (no prime-q stabilizers): {skipped}")
    return "\n".join(lines) + "\n"
