"""
Command line front end.

    monideal [--dim D | --vars x,y,z] [--json] [--max-depth N] [--verify] COMMAND ARGS...

With no COMMAND, commands are read from stdin, one per line ('#' starts a
comment).  Ideal arguments are expressions (see monideal.parser); several
may follow each other on one line, e.g. ``star (x^2,y,z) (x,y^2,z)``.
Direction sequences are comma separated variable names read root first,
so "x,y" blows up in the x direction and then in the y direction; "-" is
the empty sequence.
"""

from __future__ import annotations

import argparse
import json
import sys
from typing import Any, Callable, Dict, List, Optional, Tuple

from .errors import MonomialIdealError, ParseError
from .factor import (DEFAULT_MAX_DEPTH, base_point_tree, index_order,
                     index_order_tree, is_special_star_simple, lipman_factor,
                     special_p, tree_levels)
from .monomial import MonomialIdeal, colon, index, intersect, is_m_primary, mu, ord_, product
from .newton import check_closure, integral_closure, rees_valuations
from .parser import Parser, Workspace
from .serialize import ideal_to_dict, result_record
from .transform import (DirectionSequence, cit, delta, expansion_matrix, exponent_tables,
                        inverse_expansion_matrix, is_change_of_direction, is_proximate,
                        ord_weights, transform_dir)


class Session:
    """One workspace plus the output options; ``run`` executes a single
    command line and returns (text, record)."""

    def __init__(self, ws: Workspace, max_depth: int = DEFAULT_MAX_DEPTH, verify: bool = False):
        self.ws = ws
        self.max_depth = max_depth
        self.verify = verify

    # -- helpers --------------------------------------------------------------

    @property
    def names(self):
        return self.ws.names

    def fmt(self, I: MonomialIdeal) -> str:
        return I.format(self.names)

    def doc(self, I: MonomialIdeal):
        return ideal_to_dict(I, self.names)

    def path_label(self, path) -> str:
        return ",".join(self.names[j] for j in path) if path else "root"

    def closure(self, I: MonomialIdeal) -> MonomialIdeal:
        J = integral_closure(I)
        if self.verify and not I.is_unit() and is_m_primary(I):
            check_closure(I, J)
        return J

    def cit(self, I1, j):
        return cit(I1, j, verify=self.verify)

    def special(self, seq: DirectionSequence) -> MonomialIdeal:
        if not self.verify:
            return special_p(seq)
        P = MonomialIdeal.maximal(seq.dim)
        for j in reversed(seq.dirs):
            P = cit(P, j, verify=True)
        return P

    # -- argument readers -----------------------------------------------------

    def _ideal(self, p: Parser, inputs, key):
        I = p.parse_expr()
        inputs[key] = self.doc(I)
        return I

    def _dir(self, p: Parser, inputs):
        t = p.tok
        name = p.word()
        if name not in self.names:
            raise p.error(f"unknown direction {name!r}", t)
        inputs["dir"] = name
        return self.names.index(name)

    def _dirseq(self, p: Parser, inputs):
        if p.at("-"):
            p.advance()
            dirs = []
        else:
            dirs = [self._dir(p, {})]
            while p.at(","):
                p.advance()
                dirs.append(self._dir(p, {}))
        inputs["dirseq"] = [self.names[j] for j in dirs]
        return DirectionSequence(self.ws.dim, tuple(dirs))

    def _int(self, p: Parser, inputs, key):
        n = p.integer()
        inputs[key] = n
        return n

    # -- dispatch ---------------------------------------------------------------

    def run(self, line: str) -> Tuple[str, Dict[str, Any]]:
        line = line.strip()
        if not line:
            raise ParseError("empty command")
        cmd = line.split()[0]
        handler = COMMANDS.get(cmd)
        if handler is None:
            raise MonomialIdealError(f"unknown command {cmd!r}", "command")
        # blank the command word so positions count from the start of the line
        p = Parser(" " * len(cmd) + line[len(cmd):], self.ws)
        inputs: Dict[str, Any] = {}
        text, payload = handler(self, p, inputs)
        if not p.at_end():
            raise p.error(f"unexpected {p.tok.text!r} after the arguments of {cmd}")
        return text, result_record(cmd, inputs, payload)


def _bool(b):
    return ("true" if b else "false"), b


def _unary_ideal(fn: Callable[[Session, MonomialIdeal], MonomialIdeal]):
    def handler(s: Session, p, inputs):
        J = fn(s, s._ideal(p, inputs, "A"))
        return s.fmt(J), s.doc(J)
    return handler


def _binary_ideal(fn):
    def handler(s: Session, p, inputs):
        A = s._ideal(p, inputs, "A")
        B = s._ideal(p, inputs, "B")
        J = fn(s, A, B)
        return s.fmt(J), s.doc(J)
    return handler


def _integer(fn):
    def handler(s: Session, p, inputs):
        n = fn(s._ideal(p, inputs, "A"))
        return str(n), n
    return handler


def _cmd_complete(s, p, inputs):
    I = s._ideal(p, inputs, "A")
    return _bool(s.closure(I) == I)


def _cmd_primary(s, p, inputs):
    return _bool(is_m_primary(s._ideal(p, inputs, "A")))


def _cmd_transform(s, p, inputs):
    I = s._ideal(p, inputs, "A")
    J = transform_dir(I, s._dir(p, inputs))
    return s.fmt(J), s.doc(J)


def _cmd_delta(s, p, inputs):
    I = s._ideal(p, inputs, "A")
    n = delta(I, s._dir(p, inputs))
    return str(n), n


def _cmd_cit(s, p, inputs):
    I = s._ideal(p, inputs, "A")
    J = s.cit(I, s._dir(p, inputs))
    return s.fmt(J), s.doc(J)


def _cmd_special(s, p, inputs):
    J = s.special(s._dirseq(p, inputs))
    return s.fmt(J), s.doc(J)


def _cmd_basepoints(s, p, inputs):
    tree = base_point_tree(s._ideal(p, inputs, "A"), s.max_depth)
    lines, payload = [], []
    for path in tree.paths():
        J = tree.ideals[path]
        lines.append(f"{s.path_label(path)}: {s.fmt(J)} order {ord_(J)}")
        payload.append({"path": [s.names[j] for j in path], "ideal": s.doc(J), "order": ord_(J)})
    return "\n".join(lines), payload


def _path_values(s, values):
    text = " ".join(f"{s.path_label(path)}:{n}" for path, n in values)
    payload = [{"path": [s.names[j] for j in path], "value": n} for path, n in values]
    return text, payload


def _cmd_pointbasis(s, p, inputs):
    tree = base_point_tree(s._ideal(p, inputs, "A"), s.max_depth)
    orders = tree.orders()
    return _path_values(s, [(path, orders[path]) for path in tree.paths()])


def _cmd_factor(s, p, inputs):
    res = lipman_factor(s._ideal(p, inputs, "A"), s.max_depth)
    nz = res.nonzero()
    return _path_values(s, [(path, nz[path]) for path in res.tree.paths() if path in nz])


def _cmd_is_special(s, p, inputs):
    ok, path = is_special_star_simple(s._ideal(p, inputs, "A"), s.max_depth)
    if not ok:
        return "false", {"special": False, "path": None}
    label = ",".join(s.names[j] for j in path) or "-"
    return f"true {label}", {"special": True, "path": [s.names[j] for j in path]}


def _vec(v):
    return "(" + ", ".join(str(x) for x in v) + ")"


def _cmd_rees(s, p, inputs):
    ws = rees_valuations(s._ideal(p, inputs, "A"))
    return "\n".join(_vec(w) for w in ws), [list(w) for w in ws]


def _cmd_weights(s, p, inputs):
    seq = s._dirseq(p, inputs)
    w = ord_weights(seq, s._int(p, inputs, "stage"))
    return _vec(w), list(w)


def _matrix_text(M):
    width = max(len(str(x)) for row in M for x in row)
    return "\n".join(" ".join(str(x).rjust(width) for x in row) for row in M)


def _cmd_expand(s, p, inputs):
    seq = s._dirseq(p, inputs)
    E, F = expansion_matrix(seq), inverse_expansion_matrix(seq)
    text = "E:\n" + _matrix_text(E) + "\nF:\n" + _matrix_text(F)
    return text, {"E": [list(r) for r in E], "F": [list(r) for r in F]}


def _cmd_changedir(s, p, inputs):
    return _bool(is_change_of_direction(s._dirseq(p, inputs)))


def _cmd_proximate(s, p, inputs):
    return _bool(is_proximate(s._dirseq(p, inputs)))


def _cmd_indexorder(s, p, inputs):
    pair = index_order(s._ideal(p, inputs, "A"))
    return _vec(pair), {"index": pair.index_s, "order": pair.order_r}


def _cmd_pairtree(s, p, inputs):
    depth = s._int(p, inputs, "depth")
    if depth < 1:
        raise MonomialIdealError("pairtree depth must be positive", "pairtree")
    levels = tree_levels(index_order_tree(depth))
    text = "\n".join(f"level {n}: " + " ".join(_vec(q) for q in level)
                     for n, level in enumerate(levels))
    return text, [[list(q) for q in level] for level in levels]


def _grid_text(title, grid, col_var, row_var):
    width = max([len(str(c)) for row in grid for c in row if c is not None] + [1])
    ncols = len(grid[0])
    head = " " * (len(row_var) + 3) + " ".join(str(i).rjust(width) for i in range(ncols))
    lines = [title, f"{row_var} \\ {col_var}", head]
    for r, row in enumerate(grid):
        cells = " ".join(("." if c is None else str(c)).rjust(width) for c in row)
        lines.append(f"{str(r).rjust(len(row_var))} | {cells}")
    return "\n".join(lines)


def _cmd_table(s, p, inputs):
    I1 = s._ideal(p, inputs, "A")
    j = s._dir(p, inputs)
    left, right = exponent_tables(I1, j)
    others = [v for k, v in enumerate(s.names) if k != j]
    col_var = others[0]
    row_var = others[1] if len(others) > 1 else "-"
    xv = s.names[j]
    text = (_grid_text(f"{xv}-exponents of the image of Delta(A)", left, col_var, row_var)
            + "\n\n"
            + _grid_text(f"{xv}-exponents of Delta(cit(A, {xv}))", right, col_var, row_var))
    return text, {"delta": delta(I1, j), "columns": col_var, "rows": row_var,
                  "image": left, "ideal": right}


def _cmd_let(s, p, inputs):
    t = p.tok
    name = p.word()
    p.expect("=")
    I = p.parse_expr()
    try:
        s.ws.bind(name, I)
    except MonomialIdealError as exc:
        raise ParseError(str(exc), t.pos, p.text) from None
    inputs["name"] = name
    return f"{name} = {s.fmt(I)}", {"name": name, "ideal": s.doc(I)}


COMMANDS: Dict[str, Callable] = {
    "closure": _unary_ideal(lambda s, I: s.closure(I)),
    "complete?": _cmd_complete,
    "order": _integer(ord_),
    "index": _integer(index),
    "mu": _integer(mu),
    "primary?": _cmd_primary,
    "star": _binary_ideal(lambda s, A, B: s.closure(product(A, B))),
    "prod": _binary_ideal(lambda s, A, B: product(A, B)),
    "colon": _binary_ideal(lambda s, A, B: colon(A, B)),
    "cap": _binary_ideal(lambda s, A, B: intersect(A, B)),
    "transform": _cmd_transform,
    "delta": _cmd_delta,
    "cit": _cmd_cit,
    "special": _cmd_special,
    "basepoints": _cmd_basepoints,
    "pointbasis": _cmd_pointbasis,
    "factor": _cmd_factor,
    "special?": _cmd_is_special,
    "rees": _cmd_rees,
    "weights": _cmd_weights,
    "expand": _cmd_expand,
    "changedir": _cmd_changedir,
    "proximate": _cmd_proximate,
    "indexorder": _cmd_indexorder,
    "pairtree": _cmd_pairtree,
    "table": _cmd_table,
    "let": _cmd_let,
}


def error_record(exc: Exception, line: str, names, lineno: Optional[int] = None) -> Dict[str, Any]:
    ideal = getattr(exc, "ideal", None)
    record = {
        "type": type(exc).__name__,
        "operation": getattr(exc, "operation", None),
        "message": str(exc),
        "command": line,
        "input": ideal.format(names) if isinstance(ideal, MonomialIdeal) and ideal.dim == len(names) else None,
    }
    if isinstance(exc, ParseError):
        record["position"] = exc.position
    if lineno is not None:
        record["line"] = lineno
    return {"error": record}


def _workspace(args) -> Workspace:
    if args.vars:
        names = tuple(v.strip() for v in args.vars.split(","))
        if args.dim is not None and args.dim != len(names):
            raise MonomialIdealError(f"--dim {args.dim} disagrees with {len(names)} variables", "workspace")
        return Workspace(names)
    return Workspace.of_dim(3 if args.dim is None else args.dim)


def build_arg_parser() -> argparse.ArgumentParser:
    ap = argparse.ArgumentParser(
        prog="monideal",
        description="Exact computations with complete monomial ideals.",
        epilog="Commands: " + ", ".join(COMMANDS) + ".  Without a command, "
               "one command per line is read from stdin.")
    ap.add_argument("--dim", type=int, help="number of variables (default 3)")
    ap.add_argument("--vars", help="comma separated variable names, e.g. x,y,z")
    ap.add_argument("--json", action="store_true", help="print one JSON record per command")
    ap.add_argument("--max-depth", type=int, default=DEFAULT_MAX_DEPTH,
                    help=f"base point tree depth limit (default {DEFAULT_MAX_DEPTH})")
    ap.add_argument("--verify", action="store_true",
                    help="cross-check closures and inverse transforms by independent routes")
    ap.add_argument("command", nargs=argparse.REMAINDER, help="command and its arguments")
    return ap


def main(argv: Optional[List[str]] = None, stdin=None, stdout=None, stderr=None) -> int:
    stdin = stdin or sys.stdin
    stdout = stdout or sys.stdout
    stderr = stderr or sys.stderr
    args = build_arg_parser().parse_args(argv)

    try:
        ws = _workspace(args)
    except MonomialIdealError as exc:
        print(json.dumps(error_record(exc, "", ())), file=stderr)
        return 2
    session = Session(ws, args.max_depth, args.verify)

    if args.command:
        lines = [(None, " ".join(args.command))]
    else:
        lines = [(n, raw) for n, raw in enumerate(stdin, 1)]

    for lineno, raw in lines:
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        try:
            text, record = session.run(line)
        except (MonomialIdealError, AssertionError) as exc:
            print(json.dumps(error_record(exc, line, ws.names, lineno)), file=stderr)
            return 1
        if args.json:
            print(json.dumps(record), file=stdout)
        else:
            print(text, file=stdout)
    return 0


if __name__ == "__main__":
    sys.exit(main())
