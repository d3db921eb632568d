#!/usr/bin/env python3
"""Regenerate data/knots.txt from the KnotInfo/LinkInfo database package.

Each line holds tab-separated key=value fields. The stick-number columns are
typed in from the literature values listed below.
"""
import re
import sys
from pathlib import Path

import sympy
from database_knotinfo import link_list

STICK = {
    "0_1": 3, "3_1": 6, "4_1": 7, "5_1": 8, "5_2": 8, "6_1": 8, "6_2": 8, "6_3": 8,
    "7_1": 9, "7_2": 9, "7_3": 9, "7_4": 9, "7_5": 9, "7_6": 9, "7_7": 9,
    "8_16": 9, "8_17": 9, "8_18": 9, "8_19": 8, "8_20": 8, "8_21": 9,
    "9_29": 9, "9_34": 9, "9_35": 9, "9_39": 9, "9_40": 9, "9_41": 9,
    "9_42": 9, "9_43": 9, "9_44": 9, "9_45": 9, "9_46": 9, "9_47": 9, "9_49": 9,
}
STARRED = {"9_35", "9_39", "9_43", "9_45"}
LATTICE = {"0_1": 4, "3_1": 12, "4_1": 14, "8_20": 18, "8_21": 18, "9_46": 18, "9_47": 18,
           "8_19": 18, "T(4,5)": 24}
LINK_STICK = {"L2a1": 6, "L6n1": 9, "L7n1": 9, "L7n2": 9, "L8n1": 10, "L8n2": 10,
              "L8n8": 12, "L9n7": 11, "L9n20": 12, "L9n21": 12, "L10n113": 15}
LINK_LATTICE = {"L2a1": 8, "L7n1": 16, "L8n2": 18, "L8a21": 18, "L6a4": 12, "L6n1": 12}


def poly_field(expr, var):
    """Laurent polynomial as 'low:c0,c1,...' in the given variable."""
    x = sympy.Symbol(var)
    p = sympy.expand(sympy.sympify(expr.replace("^", "**"), locals={var: x}))
    terms = sympy.Poly(sympy.expand(p * x**200), x).terms()
    exps = {e[0] - 200: int(c) for e, c in terms}
    lo, hi = min(exps), max(exps)
    return f"{lo}:" + ",".join(str(exps.get(e, 0)) for e in range(lo, hi + 1))


def symmetric(expr):
    """Alexander polynomial shifted to be symmetric, positive at t = 1."""
    lo, coeffs = poly_field(expr, "t").split(":")
    cs = [int(c) for c in coeffs.split(",")]
    if sum(cs) < 0:
        cs = [-c for c in cs]
    return f"{-(len(cs) - 1) // 2}:" + ",".join(str(c) for c in cs)


def pd_text(crossings):
    return " ".join("X(%s)" % ",".join(str(v) for v in c) for c in crossings)


def braid_pd(strands, word):
    lab = list(range(1, strands + 1))
    nxt = strands + 1
    xs = []
    for g in word:
        i = g - 1
        under_in, over_in = lab[i + 1], lab[i]
        uo, oo = nxt, nxt + 1
        nxt += 2
        xs.append([under_in, oo, uo, over_in])
        lab[i], lab[i + 1] = uo, oo
    final = {lab[j]: j + 1 for j in range(strands)}
    xs = [[final.get(v, v) for v in c] for c in xs]
    used = sorted({v for c in xs for v in c})
    ren = {v: k + 1 for k, v in enumerate(used)}
    return [[ren[v] for v in c] for c in xs]


def main(out):
    lines = ["# railstick knot and link table, format 1",
             "# fields: name kind components pd [jones] [s] [scl] [flags]",
             "# jones is low:c0,c1,... in t for knots and in x=t^(1/2) for links"]
    knots = link_list()
    for r in knots:
        name = r["name"]
        m = re.fullmatch(r"(\d+)_(\d+)", name)
        if not m or int(m.group(1)) > 9:
            continue
        pd = "" if name == "0_1" else pd_text(eval(r["pd_notation"]))
        if name == "0_1":
            pd = "loop"
        fields = [f"name={name}", "kind=knot", "components=1", f"pd={pd}",
                  "jones=" + poly_field(r["jones_polynomial"], "t"),
                  "alexander=" + symmetric(r["alexander_polynomial"]), f"det={1 if name == '0_1' else r['determinant']}"]
        if name in STICK:
            fields.append(f"s={STICK[name]}")
        if name in LATTICE:
            fields.append(f"scl={LATTICE[name]}")
        flags = []
        if name in STARRED:
            flags.append("unconfirmed_minimal")
        if flags:
            fields.append("flags=" + ",".join(flags))
        if name == "9_42":
            fields.append("alias=8_42")
        lines.append("\t".join(fields))

    t = sympy.Symbol("t")
    p, q = 4, 5
    jones = sympy.cancel(t ** ((p - 1) * (q - 1) // 2) * (1 - t**(p + 1) - t**(q + 1) + t**(p + q)) / (1 - t**2))
    lines.append("\t".join(["name=T(4,5)", "kind=knot", "components=1",
                            "pd=" + pd_text(braid_pd(4, [1, 2, 3] * 5)),
                            "jones=" + poly_field(str(sympy.expand(jones)), "t"), "scl=24"]))

    wanted = set(LINK_STICK) | set(LINK_LATTICE)
    for r in link_list(proper_links=True):
        base, _, variant = r["name"].partition("{")
        if base not in wanted or set(variant.strip("}").split(",")) != {"0"}:
            continue
        vec = r["pd_notation_vector"].replace("{", "[").replace("}", "]")
        comps = int(r.get("components") or 0) or None
        fields = [f"name={base}", "kind=link"]
        if comps:
            fields.append(f"components={comps}")
        fields += [f"pd={pd_text(eval(vec))}", "jones=" + poly_field(r["jones_polynomial"], "x"),
                   f"det={1 if name == '0_1' else r['determinant']}"]
        if base in LINK_STICK:
            fields.append(f"s={LINK_STICK[base]}")
        if base in LINK_LATTICE:
            fields.append(f"scl={LINK_LATTICE[base]}")
        lines.append("\t".join(fields))
    for n in range(2, 7):
        lines.append("\t".join([f"name=U{n}", "kind=link", f"components={n}", "pd=" + " ".join(["loop"] * n),
                                f"scl={4 * n}"]))
    Path(out).write_text("\n".join(lines) + "\n")


if __name__ == "__main__":
    main(sys.argv[1] if len(sys.argv) > 1 else str(Path(__file__).resolve().parent.parent / "data" / "knots.txt"))
