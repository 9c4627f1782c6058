#!/usr/bin/env python3
"""Solve a pure-binary LP-format model with scipy's HiGHS MILP interface.

Reads the CPLEX-style LP subset emitted by the library (Minimize / Subject
To / Bounds with fixings only / Binary / End) and writes a plain solution
file:

    status: optimal | feasible | infeasible | timelimit | error
    objective <value>
    bound <value>
    <var> <value>        (one line per variable)

Usage: highs_solve.py [--time-limit S] [--check] model.lp [model.sol]
"""

import argparse
import re
import sys

import numpy as np
from scipy.optimize import Bounds, LinearConstraint, milp
from scipy.sparse import csr_matrix

TOKEN = re.compile(r"<=|>=|=|\+|-|:|[A-Za-z_][A-Za-z0-9_]*|[0-9]*\.?[0-9]+(?:[eE][+-]?[0-9]+)?")


class Model:
    def __init__(self):
        self.var_names = []
        self.var_index = {}
        self.objective = {}
        self.rows = []  # (name, {var: coef}, sense, rhs)
        self.fixed = {}

    def var(self, name):
        if name not in self.var_index:
            self.var_index[name] = len(self.var_names)
            self.var_names.append(name)
        return self.var_index[name]


def tokenize(text):
    out = []
    for line in text.splitlines():
        line = line.split("\\", 1)[0]
        out.extend(TOKEN.findall(line))
    return out


def is_number(tok):
    return bool(re.fullmatch(r"[0-9]*\.?[0-9]+(?:[eE][+-]?[0-9]+)?", tok))


def parse_expr(toks, i, terms):
    """Parses [sign] [coef] var ... until a non-expression token."""
    while i < len(toks):
        sign = 1.0
        j = i
        while j < len(toks) and toks[j] in "+-":
            if toks[j] == "-":
                sign = -sign
            j += 1
        if j >= len(toks):
            break
        coef = sign
        if is_number(toks[j]):
            coef = sign * float(toks[j])
            j += 1
        if j >= len(toks) or not re.fullmatch(r"[A-Za-z_][A-Za-z0-9_]*", toks[j]):
            break
        name = toks[j]
        if name.lower() in ("subject", "st", "bounds", "binary", "end", "minimize"):
            break
        terms[name] = terms.get(name, 0.0) + coef
        i = j + 1
    return i


def parse_lp(text):
    toks = tokenize(text)
    model = Model()
    i = 0

    def expect(word):
        nonlocal i
        if i >= len(toks) or toks[i].lower() != word:
            raise ValueError(f"expected '{word}' near token {i}")
        i += 1

    expect("minimize")
    # objective: name ':' expr
    if i + 1 < len(toks) and toks[i + 1] == ":":
        i += 2
    i = parse_expr(toks, i, model.objective)

    expect("subject")
    expect("to")
    while i < len(toks) and toks[i].lower() not in ("bounds", "binary", "end"):
        name = toks[i]
        i += 1
        if i < len(toks) and toks[i] == ":":
            i += 1
        terms = {}
        i = parse_expr(toks, i, terms)
        if i >= len(toks) or toks[i] not in ("<=", ">=", "="):
            raise ValueError(f"row '{name}': missing sense")
        sense = toks[i]
        i += 1
        sign = 1.0
        while i < len(toks) and toks[i] in "+-":
            if toks[i] == "-":
                sign = -sign
            i += 1
        if i >= len(toks) or not is_number(toks[i]):
            raise ValueError(f"row '{name}': missing rhs")
        rhs = sign * float(toks[i])
        i += 1
        model.rows.append((name, terms, sense, rhs))

    if i < len(toks) and toks[i].lower() == "bounds":
        i += 1
        while i < len(toks) and toks[i].lower() not in ("binary", "end"):
            name = toks[i]
            if i + 2 >= len(toks) or toks[i + 1] != "=" or not is_number(toks[i + 2]):
                raise ValueError(f"bound for '{name}': only fixings supported")
            model.fixed[name] = float(toks[i + 2])
            i += 3

    expect("binary")
    while i < len(toks) and toks[i].lower() != "end":
        model.var(toks[i])
        i += 1
    expect("end")

    for terms in [model.objective] + [r[1] for r in model.rows]:
        for name in terms:
            if name not in model.var_index:
                raise ValueError(f"undeclared variable '{name}'")
    for name in model.fixed:
        if name not in model.var_index:
            raise ValueError(f"bound on undeclared variable '{name}'")
    return model


def solve(model, time_limit):
    n = len(model.var_names)
    c = np.zeros(n)
    for name, coef in model.objective.items():
        c[model.var_index[name]] = coef

    lo = np.zeros(n)
    hi = np.ones(n)
    for name, value in model.fixed.items():
        lo[model.var_index[name]] = value
        hi[model.var_index[name]] = value

    data, indices, indptr = [], [], [0]
    row_lo, row_hi = [], []
    for _, terms, sense, rhs in model.rows:
        for name, coef in terms.items():
            indices.append(model.var_index[name])
            data.append(coef)
        indptr.append(len(data))
        row_lo.append(rhs if sense in (">=", "=") else -np.inf)
        row_hi.append(rhs if sense in ("<=", "=") else np.inf)
    a = csr_matrix((data, indices, indptr), shape=(len(model.rows), n))

    res = milp(
        c,
        constraints=LinearConstraint(a, row_lo, row_hi),
        integrality=np.ones(n),
        bounds=Bounds(lo, hi),
        options={"time_limit": time_limit, "disp": False},
    )
    return res


def write_solution(path, model, status, res):
    lines = [f"status: {status}"]
    if res is not None and res.fun is not None:
        lines.append(f"objective {float(res.fun):.17g}")
    bound = getattr(res, "mip_dual_bound", None) if res is not None else None
    if bound is not None:
        lines.append(f"bound {float(bound):.17g}")
    if res is not None and res.x is not None:
        for name, value in zip(model.var_names, res.x):
            lines.append(f"{name} {float(value):.17g}")
    with open(path, "w") as fh:
        fh.write("\n".join(lines) + "\n")


def main():
    ap = argparse.ArgumentParser()
    ap.add_argument("--time-limit", type=float, default=3600.0)
    ap.add_argument("--check", action="store_true",
                    help="parse only; print a model summary and exit")
    ap.add_argument("lp")
    ap.add_argument("sol", nargs="?")
    args = ap.parse_args()

    with open(args.lp) as fh:
        text = fh.read()
    try:
        model = parse_lp(text)
    except ValueError as exc:
        if args.sol:
            with open(args.sol, "w") as fh:
                fh.write(f"status: error\n# {exc}\n")
        print(f"parse error: {exc}", file=sys.stderr)
        return 1

    if args.check:
        nnz = sum(len(r[1]) for r in model.rows)
        print(f"vars {len(model.var_names)} rows {len(model.rows)} "
              f"nnz {nnz} fixed {len(model.fixed)} "
              f"obj_terms {len(model.objective)}")
        return 0

    if not args.sol:
        print("solution path required", file=sys.stderr)
        return 1

    res = solve(model, args.time_limit)
    if res.status == 0:
        status = "optimal"
    elif res.status == 2:
        status = "infeasible"
    elif res.status == 1:
        status = "timelimit"
    else:
        status = "error"
    write_solution(args.sol, model, status, res)
    return 0


if __name__ == "__main__":
    sys.exit(main())
