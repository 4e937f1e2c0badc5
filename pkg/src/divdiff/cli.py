"""Command-line front end over the whole library.

Subcommands::

    basis FAMILY INDEX        one basis element, printed as a polynomial
    expand --in FAM "EXPR"    expand an expression in a change-of-basis family
    multiply --rule R "X * Y" combinatorial product rules, as signed expansions
    shuffles A B              the words behind the slide product rules
    verify                    run the identity-checking suite over small ranges
    apply "WORD EXPR"         apply operator words, e.g. "pi~[2,1] x^(0,1,2)"

Expressions use bracketed basis tokens (``F[0,2,1]`` slide, ``A[...]``
fundamental atom, ``K[...]`` key, ``At[...]`` classical atom, ``S[...]``
Schubert by one-line permutation, ``Fq[...]`` quasisymmetric fundamental,
``Sch[...]`` Schur), monomials ``x^(1,0,2)``, integer scalars, ``*`` or
juxtaposition for products, operator words like ``th~[1,3,2]`` applying to
everything to their right, and an optional ``--vars n`` inside the quoted
expression to fix the ambient variable count.

Exit codes: 0 success (and a clean verify run), 1 verify found failures,
2 malformed input (message carries the offending position), 3 well-formed
input asking for something undefined (wrong family for a rule, index longer
than the variable count, missing ``--vars`` where required).
"""

from __future__ import annotations

import argparse
import json
import re
import sys
from dataclasses import dataclass, field

from .bases import BasisFamily, basis_element, schubert
from .compositions import Composition
from .expansions import GREEDY_FAMILIES, expand_in_basis
from .operators import apply_word
from .permutations import Permutation
from .polynomials import Polynomial
from .products import (
    fatom_product,
    fundamental_shuffle_set,
    shuffle_set,
    slide_product,
    slide_times_fatom,
)
from .verify import CHECK_NAMES, run_suite


class ExpressionError(Exception):
    """Malformed query text; knows where in the source it went wrong."""

    def __init__(self, message: str, source: str, pos: int):
        super().__init__(message)
        self.source = source
        self.pos = pos

    def render(self) -> str:
        return "parse error at position %d: %s\n  %s\n  %s^" % (
            self.pos,
            self.args[0],
            self.source,
            " " * self.pos,
        )


class DomainError(Exception):
    """Well-formed query for something the library does not define."""


_LONG_NAMES = {
    "slide": BasisFamily.SLIDE,
    "fatom": BasisFamily.FATOM,
    "key": BasisFamily.KEY,
    "atom": BasisFamily.ATOM,
    "schubert": BasisFamily.SCHUBERT,
    "gessel": BasisFamily.GESSEL,
    "schur": BasisFamily.SCHUR,
}
_FAMILY_TOKENS = {f.value: f for f in BasisFamily}
_FAMILY_CHOICES = sorted(_LONG_NAMES) + sorted(_FAMILY_TOKENS)
_OP_NAMES = ("d", "pi", "th", "s", "d~", "pi~", "th~", "s~")


def _family_from_text(text: str) -> BasisFamily:
    if text in _LONG_NAMES:
        return _LONG_NAMES[text]
    if text in _FAMILY_TOKENS:
        return _FAMILY_TOKENS[text]
    raise DomainError("unknown basis family %r" % text)


# ---------------------------------------------------------------------------
# expression parsing

_TOKEN_RE = re.compile(
    r"(?P<vars>--vars\b)|(?P<int>\d+)|(?P<name>[A-Za-z]+~?)|(?P<punct>[][(),*^])"
)


def _tokenize(src: str) -> list[tuple[str, str, int]]:
    toks = []
    i = 0
    while i < len(src):
        if src[i].isspace():
            i += 1
            continue
        m = _TOKEN_RE.match(src, i)
        if m is None:
            raise ExpressionError("unexpected character %r" % src[i], src, i)
        kind = m.lastgroup
        toks.append((kind, m.group(), i))
        i = m.end()
    toks.append(("eof", "", len(src)))
    return toks


@dataclass(frozen=True)
class BasisNode:
    family: BasisFamily
    index: tuple[int, ...]
    pos: int


@dataclass(frozen=True)
class MonomialNode:
    exps: tuple[int, ...]
    pos: int


@dataclass(frozen=True)
class IntNode:
    value: int
    pos: int


@dataclass(frozen=True)
class ApplyNode:
    kind: str
    word: tuple[int, ...]
    operand: object
    pos: int


@dataclass(frozen=True)
class ProductNode:
    factors: tuple
    pos: int


@dataclass(frozen=True)
class Expression:
    root: object
    vars: int | None
    source: str


class _Parser:
    def __init__(self, src: str):
        self.src = src
        self.toks = _tokenize(src)
        self.i = 0

    def peek(self, ahead: int = 0):
        return self.toks[min(self.i + ahead, len(self.toks) - 1)]

    def advance(self):
        tok = self.toks[self.i]
        self.i += 1
        return tok

    def fail(self, message: str, pos: int | None = None):
        raise ExpressionError(
            message, self.src, self.peek()[2] if pos is None else pos
        )

    def expect_punct(self, text: str):
        kind, t, pos = self.peek()
        if kind != "punct" or t != text:
            self.fail("expected %r" % text)
        return self.advance()

    def parse_int_list(self, open_t: str, close_t: str) -> tuple[int, ...]:
        self.expect_punct(open_t)
        vals = []
        kind, t, pos = self.peek()
        if kind == "int":
            vals.append(int(self.advance()[1]))
            while self.peek()[1] == ",":
                self.advance()
                kind, t, pos = self.peek()
                if kind != "int":
                    self.fail("expected an integer")
                vals.append(int(self.advance()[1]))
        self.expect_punct(close_t)
        return tuple(vals)

    def starts_factor(self) -> bool:
        kind, t, _ = self.peek()
        return kind in ("int", "name")

    def parse_product(self):
        start = self.peek()[2]
        factors = []
        while True:
            kind, t, pos = self.peek()
            if kind == "name" and t in _OP_NAMES and self.peek(1)[1] == "[":
                self.advance()
                word = self.parse_int_list("[", "]")
                if not word:
                    self.fail("operator word must not be empty", pos)
                if self.peek()[1] == "*":
                    self.advance()
                if not self.starts_factor():
                    self.fail("operator word needs an operand")
                operand = self.parse_product()
                factors.append(ApplyNode(t, word, operand, pos))
                break
            factors.append(self.parse_atom())
            if self.peek()[1] == "*":
                self.advance()
                if not self.starts_factor():
                    self.fail("expected a factor after '*'")
                continue
            if self.starts_factor():
                continue
            break
        if len(factors) == 1:
            return factors[0]
        return ProductNode(tuple(factors), start)

    def parse_atom(self):
        kind, t, pos = self.peek()
        if kind == "int":
            self.advance()
            return IntNode(int(t), pos)
        if kind == "name":
            if t == "x":
                self.advance()
                self.expect_punct("^")
                exps = self.parse_int_list("(", ")")
                return MonomialNode(exps, pos)
            if t in _FAMILY_TOKENS:
                self.advance()
                index = self.parse_int_list("[", "]")
                return BasisNode(_FAMILY_TOKENS[t], index, pos)
            if t in _OP_NAMES:
                self.fail("operator %r needs a bracketed word" % t, pos)
            self.fail("unknown name %r" % t, pos)
        self.fail("expected a factor")

    def parse_vars(self) -> int:
        self.advance()  # the --vars token
        kind, t, _ = self.peek()
        if kind != "int":
            self.fail("--vars needs an integer")
        return int(self.advance()[1])

    def parse_expression(self) -> Expression:
        nvars = None
        if self.peek()[0] == "vars":
            nvars = self.parse_vars()
        if not self.starts_factor():
            self.fail("expected an expression")
        root = self.parse_product()
        if self.peek()[0] == "vars":
            if nvars is not None:
                self.fail("duplicate --vars")
            nvars = self.parse_vars()
        kind, t, pos = self.peek()
        if kind != "eof":
            self.fail("unexpected %r" % t)
        return Expression(root, nvars, self.src)


def parse_expression(src: str) -> Expression:
    return _Parser(src).parse_expression()


def _parse_int_csv(text: str) -> tuple[int, ...]:
    """A bare composition literal such as ``1,3,1``."""
    if not re.fullmatch(r"\d+(,\d+)*", text.strip()):
        bad = re.search(r"[^\d,\s]", text)
        raise ExpressionError(
            "expected comma-separated integers",
            text,
            bad.start() if bad else 0,
        )
    return tuple(int(p) for p in text.strip().split(","))


# ---------------------------------------------------------------------------
# expression evaluation


def _min_vars(node) -> int:
    if isinstance(node, IntNode):
        return 0
    if isinstance(node, MonomialNode):
        return len(node.exps)
    if isinstance(node, BasisNode):
        if node.family is BasisFamily.GESSEL:
            return sum(1 for p in node.index if p)
        return len(node.index)
    if isinstance(node, ApplyNode):
        return max(max(node.word) + 1, _min_vars(node.operand))
    if isinstance(node, ProductNode):
        return max(_min_vars(f) for f in node.factors)
    raise TypeError(node)


def _needs_explicit_vars(node) -> bool:
    if isinstance(node, BasisNode):
        return node.family is BasisFamily.GESSEL
    if isinstance(node, ApplyNode):
        return _needs_explicit_vars(node.operand)
    if isinstance(node, ProductNode):
        return any(_needs_explicit_vars(f) for f in node.factors)
    return False


def _eval_node(node, n: int) -> Polynomial:
    if isinstance(node, IntNode):
        return Polynomial.one(n) * node.value
    if isinstance(node, MonomialNode):
        return Polynomial.monomial(Composition(node.exps, n=n))
    if isinstance(node, BasisNode):
        return _eval_basis(node.family, node.index, n)
    if isinstance(node, ApplyNode):
        return apply_word(node.kind, node.word, _eval_node(node.operand, n))
    if isinstance(node, ProductNode):
        out = Polynomial.one(n)
        for f in node.factors:
            out = out * _eval_node(f, n)
        return out
    raise TypeError(node)


def _eval_basis(family: BasisFamily, index, n: int) -> Polynomial:
    if family is BasisFamily.SCHUBERT:
        w = tuple(index)
        if len(w) < n:
            w = w + tuple(range(len(w) + 1, n + 1))
        elif len(w) > n:
            raise DomainError(
                "permutation %r does not fit in %d variables" % (list(index), n)
            )
        return schubert(Permutation(w))
    if family is BasisFamily.SCHUR:
        return basis_element(family, tuple(index), n=n)
    if family is BasisFamily.GESSEL:
        return basis_element(family, tuple(index), n=n)
    return basis_element(family, Composition(index, n=n), n=n)


def evaluate(expr: Expression, default_vars: int | None = None) -> Polynomial:
    """Evaluate a parsed expression to a polynomial.

    The ambient variable count is the expression's inline ``--vars`` if
    present, else the ``default_vars`` argument, else the smallest count the
    leaves admit.  Quasisymmetric fundamental elements never imply a count on
    their own and insist on an explicit one.
    """
    n = expr.vars if expr.vars is not None else default_vars
    need = _min_vars(expr.root)
    if n is None:
        if _needs_explicit_vars(expr.root):
            raise DomainError(
                "Fq[...] does not determine a variable count; pass --vars"
            )
        n = need
    elif n < need:
        raise DomainError(
            "--vars %d is too small; the expression needs at least %d" % (n, need)
        )
    return _eval_node(expr.root, n)


# ---------------------------------------------------------------------------
# queries


@dataclass
class Query:
    """One CLI invocation in canonical form; printing and reparsing is exact."""

    command: str
    arguments: dict[str, str] = field(default_factory=dict)
    output: str = "text"

    def to_argv(self) -> list[str]:
        positionals, flags = _COMMAND_SHAPES[self.command]
        argv = [self.command]
        for name in positionals:
            argv.append(self.arguments[name])
        for name in flags:
            if name in self.arguments:
                argv += ["--" + name.replace("_", "-"), self.arguments[name]]
        if self.output != "text":
            argv += ["--output", self.output]
        return argv

    def to_json_dict(self) -> dict:
        return {
            "command": self.command,
            "arguments": dict(sorted(self.arguments.items())),
            "output": self.output,
        }


_COMMAND_SHAPES = {
    "basis": (("family", "index"), ("vars", "method")),
    "expand": (("expr",), ("in",)),
    "multiply": (("expr",), ("rule",)),
    "shuffles": (("a", "b"), ("kind",)),
    "verify": ((), ("max_weight", "max_length", "only")),
    "apply": (("expr",), ("vars",)),
}


def _build_parser() -> argparse.ArgumentParser:
    top = argparse.ArgumentParser(
        prog="divdiff",
        description="Exact polynomial bases, operators and product rules.",
    )
    sub = top.add_subparsers(dest="command", required=True)

    def add_output(p):
        p.add_argument(
            "--output", choices=("text", "json"), default="text",
            help="text (default) or structured json",
        )

    p = sub.add_parser("basis", help="print one basis element")
    p.add_argument("family", choices=_FAMILY_CHOICES)
    p.add_argument("index", help="comma-separated composition or permutation")
    p.add_argument("--vars", type=int, help="ambient variable count")
    p.add_argument(
        "--method", choices=("combinatorial", "operator", "theta_sum", "both"),
        help="construction route; 'both' prints every route and diffs them",
    )
    add_output(p)

    p = sub.add_parser("expand", help="expand an expression in a basis family")
    p.add_argument(
        "--in", dest="in_family", required=True,
        choices=sorted(set(f.value for f in GREEDY_FAMILIES)
                       | {"slide", "fatom", "key", "atom"}),
        help="target family",
    )
    p.add_argument("expr", help="expression, e.g. 'F[0,2] * A[1,0]'")
    add_output(p)

    p = sub.add_parser("multiply", help="combinatorial product expansions")
    p.add_argument("--rule", required=True, choices=("slide", "slide-fatom", "fatom"))
    p.add_argument("expr", help="two bracketed basis factors")
    add_output(p)

    p = sub.add_parser("shuffles", help="list the shuffle words of a product")
    p.add_argument("--kind", choices=("plain", "fundamental"), default="plain")
    p.add_argument("a", help="first composition, comma-separated")
    p.add_argument("b", help="second composition, comma-separated")
    add_output(p)

    p = sub.add_parser("verify", help="run the identity suite")
    p.add_argument("--max-weight", type=int, default=4)
    p.add_argument("--max-length", type=int, default=4)
    p.add_argument("--only", help="comma-separated check names")
    add_output(p)

    p = sub.add_parser("apply", help="apply operator words to an expression")
    p.add_argument("expr", help="e.g. 'pi~[1,2,4,3] x^(3,1,1,0,0)'")
    p.add_argument("--vars", type=int, help="ambient variable count")
    add_output(p)

    return top


def parse_argv(argv) -> Query:
    ns = _build_parser().parse_args(argv)
    args = {}
    positionals, flags = _COMMAND_SHAPES[ns.command]
    for name in positionals:
        attr = {"in": "in_family"}.get(name, name)
        args[name] = str(getattr(ns, attr))
    for name in flags:
        attr = {"in": "in_family"}.get(name, name)
        val = getattr(ns, attr)
        if val is not None:
            args[name] = str(val)
    return Query(ns.command, args, ns.output)


# ---------------------------------------------------------------------------
# command bodies; each returns (rendered output, exit code)


def _envelope(query: Query, result: dict) -> str:
    return json.dumps(
        {"query": query.to_json_dict(), "result": result},
        indent=2,
        sort_keys=True,
    )


def _poly_output(query: Query, p: Polynomial) -> str:
    if query.output == "json":
        return _envelope(
            query,
            {"vars": p.nvars, "text": p.to_text(), "polynomial": p.to_records()},
        )
    return p.to_text()


_METHOD_ROUTES = {
    BasisFamily.SLIDE: ("combinatorial", "operator"),
    BasisFamily.FATOM: ("combinatorial", "operator"),
    BasisFamily.GESSEL: ("combinatorial", "operator", "theta_sum"),
}


def _cmd_basis_both(query: Query, family, index, nvars):
    routes = _METHOD_ROUTES.get(family)
    if routes is None:
        raise DomainError("--method both only applies to F, A, Fq")
    try:
        if family is BasisFamily.GESSEL:
            polys = {m: basis_element(family, index, n=nvars, method=m)
                     for m in routes}
        else:
            polys = {m: basis_element(family, Composition(index, n=nvars),
                                      n=nvars, method=m)
                     for m in routes}
    except ValueError as e:
        raise DomainError(str(e))
    base = polys[routes[0]]
    agree = all(p == base for p in polys.values())
    if query.output == "json":
        return _envelope(query, {
            "vars": nvars,
            "agree": agree,
            "methods": {m: {"text": p.to_text(), "polynomial": p.to_records()}
                        for m, p in polys.items()},
        }), 0
    lines = ["%s: %s" % (m, polys[m].to_text()) for m in routes]
    if agree:
        lines.append("agree")
    else:
        for m in routes[1:]:
            d = base - polys[m]
            if d.to_records():
                lines.append("differ: %s - %s = %s"
                             % (routes[0], m, d.to_text()))
    return "\n".join(lines), 0


def _cmd_basis(query: Query):
    family = _family_from_text(query.arguments["family"])
    index = _parse_int_csv(query.arguments["index"])
    nvars = int(query.arguments["vars"]) if "vars" in query.arguments else None
    method = query.arguments.get("method")
    if family is BasisFamily.GESSEL and nvars is None:
        raise DomainError("gessel elements need --vars")
    if nvars is None:
        nvars = len(index)
    if method == "both":
        return _cmd_basis_both(query, family, index, nvars)
    try:
        if family is BasisFamily.SCHUBERT or family is BasisFamily.SCHUR:
            if method is not None:
                raise DomainError("--method does not apply to %s" % family.value)
            p = _eval_basis(family, index, nvars)
        elif family is BasisFamily.GESSEL:
            p = basis_element(family, index, n=nvars, method=method)
        else:
            if method == "theta_sum":
                raise DomainError("method theta_sum only applies to Fq")
            p = basis_element(
                family, Composition(index, n=nvars), n=nvars, method=method
            )
    except ValueError as e:
        raise DomainError(str(e))
    return _poly_output(query, p), 0


def _cmd_expand(query: Query):
    family = _family_from_text(query.arguments["in"])
    expr = parse_expression(query.arguments["expr"])
    try:
        p = evaluate(expr)
        exp = expand_in_basis(p, family)
    except (ValueError, ArithmeticError) as e:
        raise DomainError(str(e))
    if query.output == "json":
        return _envelope(
            query,
            {"vars": p.nvars, "text": exp.to_text(), "expansion": exp.to_records()},
        ), 0
    return exp.to_text(), 0


_RULES = {
    "slide": ((BasisFamily.SLIDE, BasisFamily.SLIDE), slide_product),
    "slide-fatom": ((BasisFamily.SLIDE, BasisFamily.FATOM), slide_times_fatom),
    "fatom": ((BasisFamily.FATOM, BasisFamily.FATOM), fatom_product),
}


def _cmd_multiply(query: Query):
    rule = query.arguments["rule"]
    families, fn = _RULES[rule]
    expr = parse_expression(query.arguments["expr"])
    node = expr.root
    factors = node.factors if isinstance(node, ProductNode) else (node,)
    if len(factors) != 2 or not all(isinstance(f, BasisNode) for f in factors):
        raise DomainError(
            "rule %s multiplies exactly two bracketed basis elements" % rule
        )
    got = tuple(f.family for f in factors)
    if got != families:
        raise DomainError(
            "rule %s needs %s * %s, got %s * %s"
            % (
                rule,
                families[0].value,
                families[1].value,
                got[0].value,
                got[1].value,
            )
        )
    n = max(len(factors[0].index), len(factors[1].index))
    if expr.vars is not None:
        if expr.vars < n:
            raise DomainError(
                "--vars %d is too small; the expression needs at least %d"
                % (expr.vars, n)
            )
        n = expr.vars
    try:
        exp = fn(Composition(factors[0].index, n), Composition(factors[1].index, n))
    except ValueError as e:
        raise DomainError(str(e))
    if query.output == "json":
        return _envelope(
            query,
            {"vars": n, "text": exp.to_text(), "expansion": exp.to_records()},
        ), 0
    return exp.to_text(), 0


def _cmd_shuffles(query: Query):
    a = _parse_int_csv(query.arguments["a"])
    b = _parse_int_csv(query.arguments["b"])
    n = max(len(a), len(b))
    a, b = Composition(a, n), Composition(b, n)
    kind = query.arguments["kind"]
    try:
        words = shuffle_set(a, b) if kind == "plain" else fundamental_shuffle_set(a, b)
    except ValueError as e:
        raise DomainError(str(e))
    if query.output == "json":
        return _envelope(
            query,
            {
                "count": len(words),
                "words": [
                    {
                        "display": w.display(),
                        "letters": list(w.letters),
                        "sources": list(w.sources),
                        "slots": list(w.slots),
                        "des": list(w.des),
                        "des_a": list(w.des_a),
                        "des_b": list(w.des_b),
                    }
                    for w in words
                ],
            },
        ), 0
    return "\n".join(w.display() for w in words), 0


def _cmd_verify(query: Query):
    only = None
    if "only" in query.arguments:
        only = [s.strip() for s in query.arguments["only"].split(",") if s.strip()]
        unknown = sorted(set(only) - set(CHECK_NAMES))
        if unknown:
            raise ExpressionError(
                "unknown check name %r (known: %s)"
                % (unknown[0], ", ".join(CHECK_NAMES)),
                query.arguments["only"],
                query.arguments["only"].find(unknown[0]),
            )
    report = run_suite(
        int(query.arguments["max_weight"]),
        int(query.arguments["max_length"]),
        only,
    )
    code = 0 if report.ok else 1
    if query.output == "json":
        return _envelope(query, {"report": report.to_json_dict()}), code
    return report.to_text(), code


def _cmd_apply(query: Query):
    expr = parse_expression(query.arguments["expr"])
    default_vars = int(query.arguments["vars"]) if "vars" in query.arguments else None
    try:
        p = evaluate(expr, default_vars)
    except ValueError as e:
        raise DomainError(str(e))
    return _poly_output(query, p), 0


_COMMAND_BODIES = {
    "basis": _cmd_basis,
    "expand": _cmd_expand,
    "multiply": _cmd_multiply,
    "shuffles": _cmd_shuffles,
    "verify": _cmd_verify,
    "apply": _cmd_apply,
}


def execute(query: Query) -> tuple[str, int]:
    """Run one canonical query; returns (rendered output, exit code)."""
    return _COMMAND_BODIES[query.command](query)


def run(argv=None) -> int:
    try:
        query = parse_argv(argv)
    except SystemExit as e:
        # argparse prints its own message; its error exit code is already 2
        return e.code if isinstance(e.code, int) else 0
    try:
        out, code = execute(query)
    except ExpressionError as e:
        print(e.render(), file=sys.stderr)
        return 2
    except DomainError as e:
        print("error: %s" % e, file=sys.stderr)
        return 3
    print(out)
    return code


def main() -> None:
    sys.exit(run())


__all__ = [
    "ExpressionError",
    "DomainError",
    "Expression",
    "Query",
    "parse_expression",
    "evaluate",
    "parse_argv",
    "execute",
    "run",
    "main",
]


if __name__ == "__main__":
    main()
