"""Command-line front end: expression parser and the hm command set.

Grammar for group expressions (whitespace insignificant, "x" is the
left-associative direct product):

    expr  := atom ("x" atom)*
    atom  := C(num) | D(num) | Q(num) | SD(num) | E(num,num) | S(num)
           | SL23 | Dic(num) | Cat(num,num)
    num   := INT | INT "^" INT

D/Q/SD arguments are the group ORDER (D(8) is the dihedral group of
order 8).  Exit codes: 0 success, 1 check failure, 2 usage error,
3 cap/resource error.
"""

from __future__ import annotations

import csv
import io
import sys
import time

import click

from .catalog import (CatalogFormatError, default_catalog, load_catalog_file,
                      validate_catalog)
from .exactmath import format_rational, is_prime, rational_decimal
from .groupkernel import CapExceeded, is_isomorphic
from .statistics import (CatalogRef, Cyclic, Dicyclic, Dihedral, ElemAbelian,
                         GenQuaternion, GroupExpr, Product, SL23, SemiDihedral,
                         Symmetric, eval_expr, realize)
from .verifier import CHECKS, run_checks, scan_integer_hm


class ExprParseError(ValueError):
    def __init__(self, message: str, offset: int):
        super().__init__(f"{message} (at offset {offset})")
        self.offset = offset


# -- lexer / parser -----------------------------------------------------------


# longest match first so "SL23x" lexes as SL23 then the product operator
_TOKEN_HEADS = ("SL23", "Dic", "Cat", "SD", "C", "D", "Q", "E", "S", "x")


def _tokenize(text: str):
    tokens = []  # (kind, value, offset)
    i = 0
    n = len(text)
    while i < n:
        ch = text[i]
        if ch.isspace():
            i += 1
            continue
        if ch.isdigit():
            j = i
            while j < n and text[j].isdigit():
                j += 1
            tokens.append(("int", int(text[i:j]), i))
            i = j
        elif ch.isalpha():
            for head in _TOKEN_HEADS:
                if text.startswith(head, i):
                    tokens.append(("word", head, i))
                    i += len(head)
                    break
            else:
                j = i
                while j < n and text[j].isalnum():
                    j += 1
                raise ExprParseError(f"unknown token {text[i:j]!r}", i)
        elif ch in "(),^":
            tokens.append((ch, ch, i))
            i += 1
        else:
            raise ExprParseError(f"unexpected character {ch!r}", i)
    tokens.append(("end", None, n))
    return tokens


class _Parser:
    def __init__(self, text: str):
        self.text = text
        self.tokens = _tokenize(text)
        self.pos = 0

    def peek(self):
        return self.tokens[self.pos]

    def take(self, kind: str):
        tok = self.tokens[self.pos]
        if tok[0] != kind:
            raise ExprParseError(f"expected {kind!r}, found {tok[1]!r}", tok[2])
        self.pos += 1
        return tok

    def parse(self) -> GroupExpr:
        factors = [self.parse_atom()]
        while True:
            kind, value, offset = self.peek()
            if kind == "word" and value == "x":
                self.pos += 1
                factors.append(self.parse_atom())
            elif kind == "end":
                break
            else:
                raise ExprParseError(f"unexpected token {value!r}", offset)
        return factors[0] if len(factors) == 1 else Product(tuple(factors))

    def parse_number(self) -> int:
        kind, value, offset = self.take("int")
        if self.peek()[0] == "^":
            self.take("^")
            _, exp, exp_off = self.take("int")
            if value < 1 or exp < 0:
                raise ExprParseError("power must have base >= 1, exponent >= 0",
                                     exp_off)
            return value ** exp
        return value

    def parse_args(self, count: int) -> list[int]:
        self.take("(")
        args = [self.parse_number()]
        while len(args) < count:
            self.take(",")
            args.append(self.parse_number())
        self.take(")")
        return args

    def parse_atom(self) -> GroupExpr:
        kind, value, offset = self.peek()
        if kind != "word":
            raise ExprParseError(f"expected a group name, found {value!r}", offset)
        if value == "SL23":
            self.pos += 1
            return SL23()
        head = value
        self.pos += 1
        if head == "C":
            (n,) = self.parse_args(1)
            if n < 1:
                raise ExprParseError("C(n) needs n >= 1", offset)
            return Cyclic(n)
        if head == "D":
            (n,) = self.parse_args(1)
            if n < 2 or n % 2:
                raise ExprParseError(f"D(n) needs an even order >= 2, got {n}",
                                     offset)
            return Dihedral(n)
        if head == "Q":
            (n,) = self.parse_args(1)
            if n < 8 or n & (n - 1):
                raise ExprParseError(
                    f"Q(n) needs a power of two >= 8, got {n}", offset)
            return GenQuaternion(n)
        if head == "SD":
            (n,) = self.parse_args(1)
            if n < 16 or n & (n - 1):
                raise ExprParseError(
                    f"SD(n) needs a power of two >= 16, got {n}", offset)
            return SemiDihedral(n)
        if head == "E":
            p, k = self.parse_args(2)
            if not is_prime(p):
                raise ExprParseError(f"E(p,k) needs p prime, got {p}", offset)
            if k < 1:
                raise ExprParseError(f"E(p,k) needs k >= 1, got {k}", offset)
            return ElemAbelian(p, k)
        if head == "S":
            (n,) = self.parse_args(1)
            if n < 1:
                raise ExprParseError(f"S(n) needs n >= 1, got {n}", offset)
            return Symmetric(n)
        if head == "Dic":
            (n,) = self.parse_args(1)
            if n < 2:
                raise ExprParseError(f"Dic(n) needs n >= 2, got {n}", offset)
            return Dicyclic(n)
        if head == "Cat":
            order, gid = self.parse_args(2)
            if order < 1 or gid < 1:
                raise ExprParseError("Cat(order,id) needs positive arguments",
                                     offset)
            return CatalogRef(order, gid)
        raise ExprParseError(f"unknown group name {head!r}", offset)


def parse_expr(text: str) -> GroupExpr:
    """Parse an expression like "SL23 x C(7^7)" into a GroupExpr."""
    return _Parser(text).parse()


# -- CLI plumbing -------------------------------------------------------------


class ResourceError(click.ClickException):
    exit_code = 3


class CliState:
    def __init__(self, catalog_path, fmt, digits, caps, timestamp):
        self.catalog_path = catalog_path
        self.format = fmt
        self.digits = digits
        self.caps = caps
        self.timestamp = timestamp
        self._entries = None

    @property
    def entries(self):
        if self._entries is None:
            if self.catalog_path:
                try:
                    self._entries = load_catalog_file(self.catalog_path)
                except (OSError, CatalogFormatError) as exc:
                    raise click.UsageError(f"cannot load catalog: {exc}")
            else:
                self._entries = default_catalog()
        return self._entries

    def eval_cap(self) -> int:
        from .statistics import EVAL_ENUM_CAP
        return self.caps if self.caps else EVAL_ENUM_CAP


def _echo_header(state: CliState):
    if state.timestamp:
        click.echo(f"# generated {time.strftime('%Y-%m-%dT%H:%M:%S%z')}")


@click.group(context_settings={"help_option_names": ["-h", "--help"]})
@click.option("--catalog", "catalog_path", envvar="HM_CATALOG", default=None,
              metavar="PATH", help="Catalog file (default: embedded; env HM_CATALOG).")
@click.option("--format", "fmt", type=click.Choice(["table", "json", "csv"]),
              default="table", show_default=True, help="Report format.")
@click.option("--digits", type=click.IntRange(0, 50), default=6, show_default=True,
              help="Decimal display precision (display only; math is exact).")
@click.option("--caps", type=click.IntRange(1), default=None,
              help="Override the enumeration cap for concrete evaluation.")
@click.option("--timestamp", is_flag=True, default=False,
              help="Prepend a timestamp line to reports.")
@click.version_option(package_name="hmgroups", prog_name="hm")
@click.pass_context
def main(ctx, catalog_path, fmt, digits, caps, timestamp):
    """Exact harmonic mean of element orders for finite groups."""
    ctx.obj = CliState(catalog_path, fmt, digits, caps, timestamp)


def _parse_or_usage(text: str) -> GroupExpr:
    try:
        return parse_expr(text)
    except ExprParseError as exc:
        raise click.UsageError(f"bad expression {text!r}: {exc}")


@main.command()
@click.argument("expression")
@click.pass_obj
def stats(state: CliState, expression):
    """Evaluate h_m and related statistics of a group expression."""
    expr = _parse_or_usage(expression)
    try:
        report = eval_expr(expr, state.entries, cap=state.eval_cap())
    except CapExceeded as exc:
        raise ResourceError(str(exc))
    _echo_header(state)
    if state.format == "json":
        click.echo(report.to_json(state.digits))
        return
    d = report.to_dict(state.digits)
    click.echo(f"expression: {d['label']}")
    click.echo(f"order: {d['order']}")
    click.echo(f"exponent: {d['exponent']}")
    if d["spectrum"] is not None:
        spec = " ".join(f"{o}:{c}" for o, c in d["spectrum"])
        click.echo(f"spectrum: {spec}")
    click.echo(f"m: {d['m']} (~{d['m_approx']})")
    click.echo(f"h_m: {d['h_m']} (~{d['h_m_approx']})")
    if d["c_count"] is not None:
        click.echo(f"cyclic subgroups: {d['c_count']}")
    click.echo(f"integer: {'yes' if d['integer'] else 'no'}")
    click.echo(f"path: {d['path']}")


def _parse_predicate(text: str | None):
    from fractions import Fraction
    if text is None:
        return None, "all"
    if text == "integer":
        return (lambda r: r.integer), "integer"
    for head in ("eq", "le"):
        if text.startswith(head + "="):
            raw = text[len(head) + 1:]
            try:
                if "/" in raw:
                    num, den = raw.split("/", 1)
                    value = Fraction(int(num), int(den))
                else:
                    value = Fraction(int(raw))
            except (ValueError, ZeroDivisionError):
                raise click.UsageError(f"bad predicate value {raw!r}")
            if head == "eq":
                return (lambda r: r.h_m == value), f"h_m = {value}"
            return (lambda r: r.h_m <= value), f"h_m <= {value}"
    raise click.UsageError(
        f"bad predicate {text!r}; use integer, eq=K, or le=R (K, R rational)")


def _parse_families(text: str | None) -> dict[str, int]:
    ranges = {"cyclic": 0, "dihedral": 0}
    if not text:
        return ranges
    for part in text.split(","):
        part = part.strip()
        if not part:
            continue
        if ":" not in part:
            raise click.UsageError(f"bad family range {part!r}; use name:N")
        name, _, raw = part.partition(":")
        if name not in ranges:
            raise click.UsageError(
                f"unknown family {name!r}; valid: cyclic, dihedral")
        try:
            ranges[name] = int(raw)
        except ValueError:
            raise click.UsageError(f"bad family bound {raw!r}")
    return ranges


@main.command()
@click.argument("expressions", nargs=-1)
@click.option("--max-order", type=click.IntRange(1), default=None,
              help="Keep only rows with order <= N.")
@click.option("--families", "families_spec", default=None, metavar="SPEC",
              help="Family ranges, e.g. cyclic:128,dihedral:64.")
@click.option("--predicate", default=None, metavar="PRED",
              help="Row filter: integer | eq=K | le=R.")
@click.pass_obj
def scan(state: CliState, expressions, max_order, families_spec, predicate):
    """Tabulate h_m over the catalog, family ranges, and expressions."""
    pred, pred_desc = _parse_predicate(predicate)
    ranges = _parse_families(families_spec)
    exprs = tuple(_parse_or_usage(t) for t in expressions)
    try:
        report = scan_integer_hm(state.entries, cyclic_max=ranges["cyclic"],
                                 dihedral_max=ranges["dihedral"], exprs=exprs)
    except CapExceeded as exc:
        raise ResourceError(str(exc))
    rows = report.rows
    if max_order is not None:
        rows = [r for r in rows if r.order <= max_order]
    if pred is not None:
        rows = [r for r in rows if pred(r)]
    report.rows = rows
    report.population += f"; filter: {pred_desc}"
    _echo_header(state)
    if state.format == "json":
        click.echo(report.to_json(state.digits))
        return
    if state.format == "csv":
        buf = io.StringIO()
        writer = csv.writer(buf, lineterminator="\n")
        writer.writerow(["label", "order", "h_m", "h_m_approx", "integer", "source"])
        for r in rows:
            writer.writerow([r.label, r.order, format_rational(r.h_m),
                             rational_decimal(r.h_m, state.digits),
                             "yes" if r.integer else "no", r.source])
        click.echo(buf.getvalue(), nl=False)
        return
    width = max([len(r.label) for r in rows] + [5])
    click.echo(f"{'label':<{width}}  {'order':>8}  {'h_m':>16}  "
               f"{'approx':>14}  int  source")
    for r in rows:
        click.echo(f"{r.label:<{width}}  {r.order:>8}  "
                   f"{format_rational(r.h_m):>16}  "
                   f"{rational_decimal(r.h_m, state.digits):>14}  "
                   f"{'yes' if r.integer else ' no'}  {r.source}")
    click.echo(f"# population: {report.population}")
    for c in report.caveats:
        click.echo(f"# caveat: {c}")


@main.command()
@click.option("--check", "check_list", default=None, metavar="LIST",
              help="Comma-separated check ids (default: all).")
@click.option("--all", "run_all_flag", is_flag=True, default=False,
              help="Run every check.")
@click.option("--nmax", type=click.IntRange(4), default=100_000, show_default=True,
              help="Scan bound for the prop2.6 dihedral scan.")
@click.pass_obj
def verify(state: CliState, check_list, run_all_flag, nmax):
    """Run verification checks; exit 1 if any check fails."""
    if check_list and run_all_flag:
        raise click.UsageError("--check and --all are mutually exclusive")
    if check_list:
        ids = [c.strip() for c in check_list.split(",") if c.strip()]
        unknown = [c for c in ids if c not in CHECKS]
        if unknown:
            raise click.UsageError(
                f"unknown check id(s) {unknown}; valid ids: {', '.join(sorted(CHECKS))}")
    else:
        ids = None  # all
    results = run_checks(state.entries, ids, nmax=nmax)
    _echo_header(state)
    if state.format == "json":
        import json as _json
        click.echo(_json.dumps([r.to_dict() for r in results], indent=2))
    else:
        for r in results:
            click.echo(f"[{'PASS' if r.passed else 'FAIL'}] {r.check_id}")
            click.echo(f"    population: {r.population}")
            for label, detail in r.witnesses:
                click.echo(f"    witness {label}: {detail}")
            for c in r.caveats:
                click.echo(f"    caveat: {c}")
    if any(not r.passed for r in results):
        sys.exit(1)


@main.command()
@click.argument("expr_a")
@click.argument("expr_b")
@click.pass_obj
def iso(state: CliState, expr_a, expr_b):
    """Decide whether two group expressions are isomorphic."""
    ga = _realize_or_error(state, expr_a)
    gb = _realize_or_error(state, expr_b)
    try:
        answer = is_isomorphic(ga, gb)
    except CapExceeded as exc:
        raise ResourceError(str(exc))
    click.echo("isomorphic" if answer else "not isomorphic")


def _realize_or_error(state: CliState, text: str):
    expr = _parse_or_usage(text)
    try:
        return realize(expr, state.entries, cap=state.eval_cap())
    except CapExceeded as exc:
        raise ResourceError(str(exc))
    except KeyError as exc:
        raise click.UsageError(str(exc))


@main.command("catalog-validate")
@click.pass_obj
def catalog_validate(state: CliState):
    """Validate the active catalog (closures, axioms, non-isomorphism)."""
    report = validate_catalog(state.entries)
    click.echo(report.summary())
    if not report.ok:
        sys.exit(1)


if __name__ == "__main__":
    main()
