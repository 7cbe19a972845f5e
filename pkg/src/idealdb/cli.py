"""Query language, script runner and REPL.

Grammar (one command per ``;``)::

    ring NAME (v, ...) [order lex|degrevlex];
    rel NAME = {(a, ...), ...} over (v, ...) [order ...];
    rel NAME = ideal(p, ...) over (v, ...) [order ...];   # or: over RINGNAME
    let NAME = EXPR;
    EXPR := NAME | join(EXPR, EXPR) | union(EXPR, EXPR) | diff(EXPR, EXPR)
          | project(EXPR, [v, ...]) | rename(EXPR, {old: new, ...})
    show ideal|gens|header|dim EXPR;
    solve EXPR;   gbasis EXPR;
    matrices EXPR [b1, b2, ...];   eigen EXPR [b1, ...];   # basis optional
    fd NAME: v, ... -> v;
    heath NAME: [X...] [Y...] [Z...];
    save "path";   load "path";   quit;

``#`` starts a comment.  A saved session is the script of its definitions.
"""

from __future__ import annotations

import argparse
import sys
from dataclasses import dataclass, field, replace
from fractions import Fraction
from pathlib import Path
from types import MappingProxyType
from typing import Mapping

from . import groebner
from .errors import DegreeGuardExceeded, IdealDBError, ParseError, UnknownSymbol
from .exactnum import format_rational
from .fd import fd_check, heath_decompose
from .groebner import Ideal, display_basis
from .lexer import TokenStream, tokenize
from .polyring import MonomialOrder, build_polynomial, parse_poly_tree
from .quotient import custom_basis, eigensystem, multiplication_matrices, quotient_dimension, standard_basis
from .relalg import StoredRelation, diff, ideal_of_points, join, project, rel_union, rename, user_ring
from .solve import format_point, format_points, solve_points

COMMANDS = ("ring", "rel", "let", "show", "solve", "gbasis", "matrices", "eigen",
            "fd", "heath", "save", "load", "quit")
OPERATORS = ("join", "union", "diff", "project", "rename")
RESERVED = frozenset(COMMANDS + OPERATORS + ("over", "order", "ideal", "lex", "degrevlex"))
SHOW_KINDS = ("ideal", "gens", "header", "dim")


# -- syntax tree ----------------------------------------------------------


@dataclass(frozen=True)
class Name:
    name: str

    def source(self):
        return self.name


@dataclass(frozen=True)
class BinOp:
    op: str
    left: object
    right: object

    def source(self):
        return f"{self.op}({self.left.source()}, {self.right.source()})"


@dataclass(frozen=True)
class Project:
    rel: object
    attrs: tuple

    def source(self):
        return f"project({self.rel.source()}, [{', '.join(self.attrs)}])"


@dataclass(frozen=True)
class Rename:
    rel: object
    mapping: tuple  # ((old, new), ...)

    def source(self):
        body = ", ".join(f"{a}: {b}" for a, b in self.mapping)
        return f"rename({self.rel.source()}, {{{body}}})"


def _poly_source(tree, parent=0) -> str:
    # parent precedence: 0 sum, 1 product, 2 power base
    kind = tree[0]
    if kind == "num":
        text = format_rational(tree[1])
        return f"({text})" if parent >= 2 and tree[1].denominator != 1 else text
    if kind == "var":
        return tree[1]
    if kind == "add":
        rhs = tree[2]
        if rhs[0] == "neg":
            text = f"{_poly_source(tree[1])} - {_poly_source(rhs[1], 1)}"
        else:
            text = f"{_poly_source(tree[1])} + {_poly_source(rhs, 1)}"
        return f"({text})" if parent >= 1 else text
    if kind == "neg":
        text = f"-{_poly_source(tree[1], 1)}"
        return f"({text})" if parent >= 1 else text
    if kind == "mul":
        text = f"{_poly_source(tree[1], 1)}*{_poly_source(tree[2], 1)}"
        return f"({text})" if parent >= 2 else text
    if kind == "pow":
        return f"{_poly_source(tree[1], 2)}^{tree[2]}"
    raise ValueError(kind)


def _over_source(attrs, ring, order):
    if ring is not None:
        return f"over {ring}"
    text = f"over ({', '.join(attrs)})"
    return text + (f" order {order}" if order else "")


@dataclass(frozen=True)
class Command:
    line: int = field(default=0, compare=False, kw_only=True)

    defines = False

    def source(self) -> str:
        raise NotImplementedError


@dataclass(frozen=True)
class RingDecl(Command):
    name: str
    vars: tuple
    order: str | None = None
    defines = True

    def source(self):
        text = f"ring {self.name}({', '.join(self.vars)})"
        return text + (f" order {self.order};" if self.order else ";")


@dataclass(frozen=True)
class RelFromTuples(Command):
    name: str
    tuples: tuple
    attrs: tuple = ()
    ring: str | None = None
    order: str | None = None
    defines = True

    def source(self):
        rows = ", ".join("(" + ", ".join(format_rational(a) for a in t) + ")" for t in self.tuples)
        return f"rel {self.name} = {{{rows}}} {_over_source(self.attrs, self.ring, self.order)};"


@dataclass(frozen=True)
class RelFromIdeal(Command):
    name: str
    generators: tuple  # unresolved polynomial trees
    attrs: tuple = ()
    ring: str | None = None
    order: str | None = None
    defines = True

    def source(self):
        gens = ", ".join(_poly_source(g) for g in self.generators)
        return f"rel {self.name} = ideal({gens}) {_over_source(self.attrs, self.ring, self.order)};"


@dataclass(frozen=True)
class Let(Command):
    name: str
    expr: object
    defines = True

    def source(self):
        return f"let {self.name} = {self.expr.source()};"


@dataclass(frozen=True)
class Show(Command):
    kind: str
    expr: object

    def source(self):
        return f"show {self.kind} {self.expr.source()};"


@dataclass(frozen=True)
class Solve(Command):
    expr: object

    def source(self):
        return f"solve {self.expr.source()};"


@dataclass(frozen=True)
class GBasis(Command):
    expr: object

    def source(self):
        return f"gbasis {self.expr.source()};"


def _basis_source(basis):
    if basis is None:
        return ""
    return " [" + ", ".join(_poly_source(b) for b in basis) + "]"


@dataclass(frozen=True)
class Matrices(Command):
    expr: object
    basis: tuple | None = None

    def source(self):
        return f"matrices {self.expr.source()}{_basis_source(self.basis)};"


@dataclass(frozen=True)
class Eigen(Command):
    expr: object
    basis: tuple | None = None

    def source(self):
        return f"eigen {self.expr.source()}{_basis_source(self.basis)};"


@dataclass(frozen=True)
class Fd(Command):
    name: str
    lhs: tuple
    rhs: str

    def source(self):
        return f"fd {self.name}: {', '.join(self.lhs)} -> {self.rhs};"


@dataclass(frozen=True)
class Heath(Command):
    name: str
    X: tuple
    Y: tuple
    Z: tuple

    def source(self):
        parts = " ".join("[" + ", ".join(p) + "]" for p in (self.X, self.Y, self.Z))
        return f"heath {self.name}: {parts};"


@dataclass(frozen=True)
class Save(Command):
    path: str

    def source(self):
        return f'save "{self.path}";'


@dataclass(frozen=True)
class Load(Command):
    path: str

    def source(self):
        return f'load "{self.path}";'


@dataclass(frozen=True)
class Quit(Command):
    def source(self):
        return "quit;"


# -- parser ---------------------------------------------------------------


class Parser:
    def __init__(self, ts: TokenStream):
        self.ts = ts

    def name(self, what="a name") -> str:
        tok = self.ts.peek()
        if tok.kind != "NAME" or tok.text in RESERVED:
            self.ts.fail(what)
        return self.ts.next().text

    def var(self) -> str:
        return self.ts.expect_kind("NAME", "a variable name").text

    def varlist(self, close: str) -> tuple:
        names = []
        if not self.ts.at(close):
            names.append(self.var())
            while self.ts.accept(","):
                names.append(self.var())
        self.ts.expect(close)
        return tuple(names)

    def rational(self) -> Fraction:
        neg = self.ts.accept("-") is not None
        num = int(self.ts.expect_kind("NUM", "a number").text)
        den = 1
        if self.ts.accept("/"):
            tok = self.ts.expect_kind("NUM", "a denominator")
            den = int(tok.text)
            if den == 0:
                raise ParseError(tok.line, tok.column, "a nonzero denominator", tok.text)
        return Fraction(-num if neg else num, den)

    def order(self) -> str | None:
        if self.ts.accept("order"):
            tok = self.ts.peek()
            if tok.text not in ("lex", "degrevlex"):
                self.ts.fail("'lex' or 'degrevlex'")
            return self.ts.next().text
        return None

    def over(self):
        self.ts.expect("over")
        if self.ts.accept("("):
            return self.varlist(")"), None, self.order()
        return (), self.name("a ring name or '('"), None

    def expr(self):
        tok = self.ts.peek()
        if tok.kind == "NAME" and tok.text in OPERATORS:
            op = self.ts.next().text
            self.ts.expect("(")
            left = self.expr()
            self.ts.expect(",")
            if op == "project":
                self.ts.expect("[")
                node = Project(left, self.varlist("]"))
            elif op == "rename":
                self.ts.expect("{")
                pairs = []
                if not self.ts.at("}"):
                    while True:
                        old = self.var()
                        self.ts.expect(":")
                        pairs.append((old, self.var()))
                        if not self.ts.accept(","):
                            break
                self.ts.expect("}")
                node = Rename(left, tuple(pairs))
            else:
                node = BinOp(op, left, self.expr())
            self.ts.expect(")")
            return node
        return Name(self.name("a relation name or operator"))

    def polylist(self, close: str) -> tuple:
        trees = []
        if not self.ts.at(close):
            trees.append(parse_poly_tree(self.ts))
            while self.ts.accept(","):
                trees.append(parse_poly_tree(self.ts))
        self.ts.expect(close)
        return tuple(trees)

    def command(self) -> Command:
        tok = self.ts.peek()
        if tok.kind != "NAME" or tok.text not in COMMANDS:
            self.ts.fail("a command (" + ", ".join(COMMANDS) + ")")
        kw = self.ts.next().text
        line = tok.line
        ts = self.ts
        if kw == "ring":
            name = self.name("a ring name")
            ts.expect("(")
            cmd = RingDecl(name, self.varlist(")"), self.order(), line=line)
        elif kw == "rel":
            name = self.name("a relation name")
            ts.expect("=")
            if ts.accept("ideal"):
                ts.expect("(")
                gens = self.polylist(")")
                attrs, ring, order = self.over()
                cmd = RelFromIdeal(name, gens, attrs, ring, order, line=line)
            else:
                ts.expect("{")
                rows = []
                if not ts.at("}"):
                    while True:
                        ts.expect("(")
                        row = []
                        if not ts.at(")"):
                            row.append(self.rational())
                            while ts.accept(","):
                                row.append(self.rational())
                        ts.expect(")")
                        rows.append(tuple(row))
                        if not ts.accept(","):
                            break
                ts.expect("}")
                attrs, ring, order = self.over()
                cmd = RelFromTuples(name, tuple(rows), attrs, ring, order, line=line)
        elif kw == "let":
            name = self.name("a relation name")
            ts.expect("=")
            cmd = Let(name, self.expr(), line=line)
        elif kw == "show":
            kind = ts.peek()
            if kind.text not in SHOW_KINDS:
                ts.fail(" or ".join(SHOW_KINDS))
            ts.next()
            cmd = Show(kind.text, self.expr(), line=line)
        elif kw in ("solve", "gbasis"):
            cmd = (Solve if kw == "solve" else GBasis)(self.expr(), line=line)
        elif kw in ("matrices", "eigen"):
            expr = self.expr()
            basis = self.polylist("]") if ts.accept("[") else None
            cmd = (Matrices if kw == "matrices" else Eigen)(expr, basis, line=line)
        elif kw == "fd":
            name = self.name("a relation name")
            ts.expect(":")
            lhs = [self.var()]
            while ts.accept(","):
                lhs.append(self.var())
            ts.expect("->")
            cmd = Fd(name, tuple(lhs), self.var(), line=line)
        elif kw == "heath":
            name = self.name("a relation name")
            ts.expect(":")
            parts = []
            for _ in range(3):
                ts.expect("[")
                parts.append(self.varlist("]"))
            cmd = Heath(name, *parts, line=line)
        elif kw in ("save", "load"):
            path = ts.expect_kind("STRING", "a quoted path").text[1:-1]
            cmd = (Save if kw == "save" else Load)(path, line=line)
        else:
            cmd = Quit(line=line)
        ts.expect(";")
        return cmd


def parse_script(text: str, line: int = 1) -> list[Command]:
    """Parse every command in ``text``; any malformed input raises ParseError."""
    try:
        ts = TokenStream(tokenize(text, line))
        parser = Parser(ts)
        commands = []
        while ts.peek().kind != "EOF":
            commands.append(parser.command())
        return commands
    except RecursionError:
        raise ParseError(line, 1, "less deeply nested input") from None


def parse_command(text: str) -> Command:
    commands = parse_script(text)
    if len(commands) != 1:
        raise ParseError(1, 1, "exactly one command", f"{len(commands)} commands")
    return commands[0]


# -- evaluation -----------------------------------------------------------


@dataclass(frozen=True)
class Session:
    relations: Mapping = field(default_factory=lambda: MappingProxyType({}))
    rings: Mapping = field(default_factory=lambda: MappingProxyType({}))
    history: tuple = ()
    default_order: str = "degrevlex"
    finished: bool = False

    def bind(self, namespace: str, name: str, value, source: str) -> Session:
        table = dict(getattr(self, namespace))
        table[name] = value
        return replace(self, **{namespace: MappingProxyType(table), "history": self.history + (source,)})

    def relation(self, name: str) -> StoredRelation:
        try:
            return self.relations[name]
        except KeyError:
            raise UnknownSymbol(f"unknown relation {name!r}") from None


def _evaluate(expr, s: Session) -> StoredRelation:
    if isinstance(expr, Name):
        return s.relation(expr.name)
    if isinstance(expr, Project):
        return project(_evaluate(expr.rel, s), expr.attrs)
    if isinstance(expr, Rename):
        return rename(_evaluate(expr.rel, s), dict(expr.mapping))
    left, right = _evaluate(expr.left, s), _evaluate(expr.right, s)
    return {"join": join, "union": rel_union, "diff": diff}[expr.op](left, right)


def _check_degree(tree):
    if tree[0] == "pow" and tree[2] > groebner.options.degree_guard:
        raise DegreeGuardExceeded(f"exponent {tree[2]} exceeds the degree guard")
    for child in tree[1:]:
        if isinstance(child, tuple):
            _check_degree(child)


def _resolve_ring(cmd, s: Session):
    if cmd.ring is not None:
        try:
            return s.rings[cmd.ring]
        except KeyError:
            raise UnknownSymbol(f"unknown ring {cmd.ring!r}") from None
    return user_ring(cmd.attrs, MonomialOrder(cmd.order or s.default_order))


def _basis(rel: StoredRelation, trees):
    if trees is None:
        return standard_basis(rel)
    for t in trees:
        _check_degree(t)
    return custom_basis(rel, [build_polynomial(t, rel.ring) for t in trees])


def _show_matrix(label, m) -> list[str]:
    return [f"{label} ="] + ["  " + row for row in str(m).splitlines()]


def eval_command(cmd: Command, s: Session) -> tuple[str, Session]:
    """Run one command; returns the printed text and the new session."""
    if isinstance(cmd, RingDecl):
        ring = user_ring(cmd.vars, MonomialOrder(cmd.order or s.default_order))
        return f"{cmd.name} := {ring}", s.bind("rings", cmd.name, ring, cmd.source())
    if isinstance(cmd, RelFromTuples):
        ring = _resolve_ring(cmd, s)
        rel = StoredRelation(ideal_of_points(cmd.tuples, ring))
        return f"{cmd.name} := relation over ({', '.join(rel.header)})", \
            s.bind("relations", cmd.name, rel, cmd.source())
    if isinstance(cmd, RelFromIdeal):
        ring = _resolve_ring(cmd, s)
        for t in cmd.generators:
            _check_degree(t)
        rel = StoredRelation(Ideal(ring, [build_polynomial(t, ring) for t in cmd.generators]))
        return f"{cmd.name} := relation over ({', '.join(rel.header)})", \
            s.bind("relations", cmd.name, rel, cmd.source())
    if isinstance(cmd, Let):
        rel = _evaluate(cmd.expr, s)
        return f"{cmd.name} := relation over ({', '.join(rel.header)})", \
            s.bind("relations", cmd.name, rel, cmd.source())
    if isinstance(cmd, Show):
        rel = _evaluate(cmd.expr, s)
        if cmd.kind == "ideal":
            return "\n".join(display_basis(rel.ideal.gb())) or "0", s
        if cmd.kind == "gens":
            return str(rel.ideal), s
        if cmd.kind == "header":
            return "(" + ", ".join(rel.header) + ")", s
        return str(quotient_dimension(rel)), s
    if isinstance(cmd, Solve):
        return format_points(solve_points(_evaluate(cmd.expr, s))), s
    if isinstance(cmd, GBasis):
        rel = _evaluate(cmd.expr, s)
        return "ideal(" + ", ".join(display_basis(rel.ideal.gb())) + ")", s
    if isinstance(cmd, Matrices):
        rel = _evaluate(cmd.expr, s)
        basis = _basis(rel, cmd.basis)
        lines = ["basis: [" + ", ".join(basis.labels()) + "]"]
        for v, m in multiplication_matrices(basis).items():
            lines += _show_matrix(f"A[{v}]", m)
        return "\n".join(lines), s
    if isinstance(cmd, Eigen):
        rel = _evaluate(cmd.expr, s)
        basis = _basis(rel, cmd.basis)
        es = eigensystem(rel, basis)
        lines = ["basis: [" + ", ".join(basis.labels()) + "]",
                 "points: [" + ", ".join(format_point(p) for p in es.points) + "]"]
        lines += _show_matrix("E", es.E)
        for v in es.vars:
            lines.append(f"Lambda[{v}] = diag({', '.join(format_rational(a) for a in es.lambdas[v])})")
        return "\n".join(lines), s
    if isinstance(cmd, Fd):
        witness = fd_check(s.relation(cmd.name), cmd.lhs, cmd.rhs)
        arrow = f"{', '.join(cmd.lhs)} -> {cmd.rhs}"
        if witness is None:
            return f"FD fails: {arrow}", s
        return f"FD holds: {witness.equation()}", s
    if isinstance(cmd, Heath):
        res = heath_decompose(s.relation(cmd.name), cmd.X, cmd.Y, cmd.Z)
        lines = [
            f"left ({', '.join(res.left.header)}): {format_points(solve_points(res.left))}",
            f"right ({', '.join(res.right.header)}): {format_points(solve_points(res.right))}",
            f"verified: {'true' if res.verified else 'false'}",
        ]
        return "\n".join(lines), s
    if isinstance(cmd, Save):
        save_session(s, cmd.path)
        return f"saved {len(s.history)} definitions to {cmd.path}", s
    if isinstance(cmd, Load):
        s = load_session(cmd.path, s)
        return f"loaded {cmd.path}", s
    if isinstance(cmd, Quit):
        return "", replace(s, finished=True)
    raise TypeError(f"unknown command {cmd!r}")


# -- persistence ----------------------------------------------------------


def save_session(s: Session, path) -> None:
    text = "".join(line + "\n" for line in s.history)
    try:
        Path(path).write_text(text, encoding="utf-8")
    except OSError as exc:
        raise IdealDBError(f"IoError: cannot write {path}: {exc}") from exc


def _relocated(exc: IdealDBError, where: str) -> IdealDBError:
    if isinstance(exc, ParseError):
        return exc
    new = type(exc)(f"{where}: {exc}")
    new.__cause__ = exc
    return new


def load_session(path, s: Session | None = None) -> Session:
    """Replay a saved script into ``s`` (a fresh session by default)."""
    s = Session() if s is None else s
    try:
        text = Path(path).read_text(encoding="utf-8")
    except OSError as exc:
        raise IdealDBError(f"IoError: cannot read {path}: {exc}") from exc
    for cmd in parse_script(text):
        if not cmd.defines:
            continue
        try:
            _, s = eval_command(cmd, s)
        except IdealDBError as exc:
            raise _relocated(exc, f"{path}, line {cmd.line}") from None
    return s


# -- drivers --------------------------------------------------------------


def format_error(exc: Exception, line: int | None = None) -> str:
    where = f" (line {line})" if line else ""
    return f"error{where}: {type(exc).__name__}: {exc}"


def run_script(text: str, s: Session | None = None, echo: bool = True) -> tuple[str, Session]:
    """Run a whole script; the transcript echoes each command and its output."""
    s = Session() if s is None else s
    out = []
    try:
        commands = parse_script(text)
    except ParseError as exc:
        return format_error(exc) + "\n", s
    for cmd in commands:
        if echo:
            out.append("> " + cmd.source())
        try:
            text_out, s = eval_command(cmd, s)
        except IdealDBError as exc:
            text_out = format_error(exc, cmd.line)
        if text_out:
            out.append(text_out)
        if s.finished:
            break
    return "".join(line + "\n" for line in out), s


def repl(s: Session | None = None, stdin=None, stdout=None) -> Session:
    stdin = sys.stdin if stdin is None else stdin
    stdout = sys.stdout if stdout is None else stdout
    s = Session() if s is None else s
    buffer = ""
    while not s.finished:
        stdout.write("idealdb> " if not buffer else "    ...> ")
        stdout.flush()
        line = stdin.readline()
        if not line:
            break
        buffer += line
        try:
            commands = parse_script(buffer)
        except ParseError as exc:
            if exc.found == "end of input":
                continue
            stdout.write(format_error(exc) + "\n")
            buffer = ""
            continue
        buffer = ""
        for cmd in commands:
            try:
                text_out, s = eval_command(cmd, s)
            except IdealDBError as exc:
                text_out = format_error(exc)
            if text_out:
                stdout.write(text_out + "\n")
            if s.finished:
                break
    return s


def main(argv=None) -> int:
    ap = argparse.ArgumentParser(prog="idealdb", description="Relational algebra over polynomial ideals.")
    ap.add_argument("--script", metavar="FILE", help="run FILE in batch mode instead of the REPL")
    ap.add_argument("--order", choices=("lex", "degrevlex"), default="degrevlex",
                    help="default monomial order for new rings")
    ap.add_argument("--degree-guard", type=int, default=groebner.options.degree_guard,
                    help="abort Gröbner computations beyond this total degree")
    ap.add_argument("--trace", action="store_true", help="print S-pair reductions to stderr")
    args = ap.parse_args(argv)

    trace = (lambda msg: print(msg, file=sys.stderr)) if args.trace else None
    session = Session(default_order=args.order)
    with groebner.configure(degree_guard=args.degree_guard, trace=trace):
        if args.script:
            try:
                text = Path(args.script).read_text(encoding="utf-8")
            except OSError as exc:
                print(f"error: IoError: {exc}", file=sys.stderr)
                return 1
            transcript, _ = run_script(text, session)
            sys.stdout.write(transcript)
            return 1 if "\nerror" in "\n" + transcript else 0
        repl(session)
    return 0


if __name__ == "__main__":
    sys.exit(main())
