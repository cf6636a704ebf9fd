#!/usr/bin/env python3
"""Competition-format front end for the solvers bundled with PySAT.

Usage: pysat_solve.py [--solver NAME] FORMULA.cnf

Prints "s SATISFIABLE" plus "v" lines, or "s UNSATISFIABLE", and exits 10/20 like a
standalone solver, so it can be used as RAMSAT_SOLVER when no native binary is installed.
"""
import argparse
import sys

from pysat.formula import CNF
from pysat.solvers import Solver


def main() -> int:
    parser = argparse.ArgumentParser()
    parser.add_argument("--solver", default="cadical195")
    parser.add_argument("cnf")
    args = parser.parse_args()

    formula = CNF(from_file=args.cnf)
    with Solver(name=args.solver, bootstrap_with=formula.clauses) as solver:
        sat = solver.solve()
        if not sat:
            print("s UNSATISFIABLE")
            return 20
        model = solver.get_model() or []
    print("s SATISFIABLE")
    assigned = {abs(l): l for l in model}
    lits = [assigned.get(v, -v) for v in range(1, formula.nv + 1)]
    for i in range(0, len(lits), 20):
        print("v " + " ".join(str(l) for l in lits[i:i + 20]))
    print("v 0")
    return 10


if __name__ == "__main__":
    sys.exit(main())
