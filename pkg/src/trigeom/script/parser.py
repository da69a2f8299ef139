"""Lexer, recursive-descent parser and static checker for ``.geo`` scripts.

Grammar::

    script  := (stmt [";"])*
    stmt    := "triangle" ID ID ID | "triangle" ID3
             | ("point" | "line" | "circle") ID "=" expr
             | "assert" PRED "(" args ")"
             | "forall" ID "in" "(" "0" "," "1" ")" ":" "assert" PRED "(" args ")"
             | "emit" STRING
    expr    := FUNC "(" [args] ")" | "(" NUM "," NUM ")" | ID | NUM
    args    := expr ("," expr)*

``ID3`` is a three-letter identifier such as ``ABC``, split into vertex names.
Parsing stops at the first problem and reports it as a :class:`Diagnostic`.
"""
from __future__ import annotations

import re
from dataclasses import dataclass
from typing import Iterator, Optional

from trigeom.script import ast
from trigeom.script.builtins import BUILTINS, NUMBER, POINT, PREDICATES

KEYWORDS = frozenset({"triangle", "point", "line", "circle", "assert", "forall", "in", "emit"})
DECL_KINDS = ("point", "line", "circle")


@dataclass(frozen=True)
class Diagnostic:
    severity: str
    message: str
    line: int
    column: int
    excerpt: str

    def format(self, path: str = "<script>") -> str:
        caret = " " * (self.column - 1) + "^"
        return f"{path}:{self.line}:{self.column}: {self.severity}: {self.message}\n  {self.excerpt}\n  {caret}"


class ScriptSyntaxError(Exception):
    def __init__(self, diagnostic: Diagnostic):
        super().__init__(diagnostic.format())
        self.diagnostic = diagnostic


@dataclass(frozen=True)
class Token:
    kind: str  # ID NUM STRING KW PUNCT EOF
    text: str
    line: int
    column: int

    @property
    def span(self) -> ast.Span:
        return ast.Span(self.line, self.column)


_TOKEN_RE = re.compile(
    r"""
    (?P<ws>[ \t\r\n]+)
  | (?P<comment>\#[^\n]*)
  | (?P<num>-?(?:\d+\.?\d*|\.\d+)(?:[eE][+-]?\d+)?)
  | (?P<id>[A-Za-z_][A-Za-z0-9_]*)
  | (?P<string>"[^"\n]*")
  | (?P<punct>[(),=:;])
    """,
    re.VERBOSE,
)


class _Source:
    def __init__(self, text: str):
        self.text = text
        self.lines = text.split("\n")

    def position(self, offset: int) -> tuple[int, int]:
        line = self.text.count("\n", 0, offset) + 1
        col = offset - (self.text.rfind("\n", 0, offset) + 1) + 1
        return line, col

    def error(self, message: str, line: int, column: int) -> ScriptSyntaxError:
        excerpt = self.lines[line - 1] if 0 < line <= len(self.lines) else ""
        return ScriptSyntaxError(Diagnostic("error", message, line, column, excerpt))


def tokenize(text: str, src: Optional[_Source] = None) -> Iterator[Token]:
    src = src or _Source(text)
    pos = 0
    while pos < len(text):
        m = _TOKEN_RE.match(text, pos)
        line, col = src.position(pos)
        if m is None:
            if text[pos] == '"':
                raise src.error("unterminated string literal", line, col)
            raise src.error(f"unexpected character {text[pos]!r}", line, col)
        kind = m.lastgroup
        pos = m.end()
        if kind in ("ws", "comment"):
            continue
        tok = m.group()
        if kind == "id":
            yield Token("KW" if tok in KEYWORDS else "ID", tok, line, col)
        elif kind == "num":
            yield Token("NUM", tok, line, col)
        elif kind == "string":
            yield Token("STRING", tok[1:-1], line, col)
        else:
            yield Token("PUNCT", tok, line, col)
    line, col = src.position(len(text))
    yield Token("EOF", "", line, col)


class Parser:
    def __init__(self, text: str):
        self.src = _Source(text)
        self.tokens = list(tokenize(text, self.src))
        self.i = 0
        self.types: dict[str, str] = {}

    # -- token helpers

    @property
    def tok(self) -> Token:
        return self.tokens[self.i]

    def advance(self) -> Token:
        t = self.tokens[self.i]
        if t.kind != "EOF":
            self.i += 1
        return t

    def error(self, message: str, tok: Token | ast.Span) -> ScriptSyntaxError:
        return self.src.error(message, tok.line, tok.column)

    def _describe(self, t: Token) -> str:
        return "end of input" if t.kind == "EOF" else repr(t.text)

    def expect(self, kind: str, text: str | None = None, what: str | None = None) -> Token:
        t = self.tok
        if t.kind != kind or (text is not None and t.text != text):
            want = what or (repr(text) if text else kind.lower())
            raise self.error(f"expected {want}, found {self._describe(t)}", t)
        return self.advance()

    def at(self, kind: str, text: str | None = None) -> bool:
        return self.tok.kind == kind and (text is None or self.tok.text == text)

    # -- grammar

    def parse(self) -> ast.Script:
        stmts = []
        while not self.at("EOF"):
            stmts.append(self.statement())
            while self.at("PUNCT", ";"):
                self.advance()
        return ast.Script(tuple(stmts))

    def statement(self) -> ast.Stmt:
        t = self.tok
        if t.kind != "KW" or t.text == "in":
            raise self.error(f"expected a statement, found {self._describe(t)}", t)
        self.advance()
        if t.text == "triangle":
            return self.triangle(t)
        if t.text in DECL_KINDS:
            return self.declaration(t)
        if t.text == "assert":
            return self.assertion(t, None)
        if t.text == "forall":
            return self.forall(t)
        label = self.expect("STRING", what="a string label")
        return ast.Emit(label.text, t.span)

    def triangle(self, kw: Token) -> ast.TriangleDecl:
        first = self.expect("ID", what="vertex names")
        if self.at("ID"):
            names = [first, self.expect("ID"), self.expect("ID", what="a third vertex name")]
            vertices = [(n.text, n) for n in names]
        elif len(first.text) == 3:
            vertices = [(ch, first) for ch in first.text]
        else:
            raise self.error("triangle needs three vertex names", first)
        for name, tok in vertices:
            self.declare(name, POINT, tok)
        return ast.TriangleDecl(tuple(n for n, _ in vertices), kw.span)

    def declaration(self, kw: Token) -> ast.Decl:
        name = self.expect("ID", what="an identifier")
        self.expect("PUNCT", "=")
        expr, typ = self.expr()
        if typ != kw.text:
            raise self.error(f"type mismatch: {kw.text} {name.text} is assigned a {typ}", expr.span)
        self.declare(name.text, kw.text, name)
        return ast.Decl(kw.text, name.text, expr, kw.span)

    def forall(self, kw: Token) -> ast.Assert:
        var = self.expect("ID", what="a sample variable")
        if var.text in self.types:
            raise self.error(f"redeclaration of {var.text!r}", var)
        self.expect("KW", "in")
        lo_paren = self.expect("PUNCT", "(")
        lo = self.expect("NUM", what="0")
        self.expect("PUNCT", ",")
        hi = self.expect("NUM", what="1")
        self.expect("PUNCT", ")")
        if float(lo.text) != 0.0 or float(hi.text) != 1.0:
            raise self.error("forall range must be (0,1)", lo_paren)
        self.expect("PUNCT", ":")
        a_kw = self.expect("KW", "assert")
        self.types[var.text] = NUMBER
        try:
            return self.assertion(kw, var.text, a_kw)
        finally:
            del self.types[var.text]

    def assertion(self, kw: Token, var: str | None, a_kw: Token | None = None) -> ast.Assert:
        pred = self.expect("ID", what="a predicate")
        if pred.text not in PREDICATES:
            raise self.error(f"unknown predicate {pred.text!r}", pred)
        args, types = self.arglist()
        sigs = PREDICATES[pred.text]
        if len(args) not in {len(s) for s in sigs}:
            want = " or ".join(sorted({str(len(s)) for s in sigs}))
            raise self.error(f"arity mismatch: {pred.text} takes {want} arguments, got {len(args)}", pred)
        if types not in sigs:
            raise self.error(f"type mismatch: {pred.text} does not accept ({', '.join(types)})", pred)
        return ast.Assert(pred.text, args, var, kw.span)

    def arglist(self) -> tuple[tuple[ast.Expr, ...], tuple[str, ...]]:
        opening = self.expect("PUNCT", "(")
        args, types = [], []
        if self.at("PUNCT", ")"):
            self.advance()
            return (), ()
        while True:
            if self.at("EOF"):
                raise self.error("unclosed argument list", opening)
            e, t = self.expr()
            args.append(e)
            types.append(t)
            if self.at("PUNCT", ","):
                self.advance()
                continue
            if self.at("PUNCT", ")"):
                self.advance()
                return tuple(args), tuple(types)
            if self.at("EOF"):
                raise self.error("unclosed argument list", opening)
            raise self.error(f"expected ',' or ')', found {self._describe(self.tok)}", self.tok)

    def expr(self) -> tuple[ast.Expr, str]:
        t = self.tok
        if t.kind == "NUM":
            self.advance()
            return ast.Num(float(t.text), t.span), NUMBER
        if t.kind == "PUNCT" and t.text == "(":
            self.advance()
            x = self.expect("NUM", what="a number")
            self.expect("PUNCT", ",")
            y = self.expect("NUM", what="a number")
            if self.at("EOF"):
                raise self.error("unclosed point literal", t)
            self.expect("PUNCT", ")")
            return ast.PointLit(float(x.text), float(y.text), t.span), POINT
        if t.kind == "ID":
            self.advance()
            if self.at("PUNCT", "("):
                return self.call(t)
            if t.text not in self.types:
                raise self.error(f"undeclared identifier {t.text!r}", t)
            return ast.Ref(t.text, t.span), self.types[t.text]
        if t.kind == "KW" and t.text in DECL_KINDS and self.tokens[self.i + 1].text == "(":
            # ``line`` and ``circle`` are both keywords and builtins
            self.advance()
            return self.call(t)
        raise self.error(f"expected an expression, found {self._describe(t)}", t)

    def call(self, name: Token) -> tuple[ast.Call, str]:
        b = BUILTINS.get(name.text)
        if b is None:
            raise self.error(f"unknown function {name.text!r}", name)
        args, types = self.arglist()
        if len(args) not in b.arities:
            want = " or ".join(str(n) for n in sorted(b.arities))
            raise self.error(f"arity mismatch: {name.text} takes {want} arguments, got {len(args)}", name)
        sig = b.resolve(types)
        if sig is None:
            raise self.error(f"type mismatch: {name.text} does not accept ({', '.join(types)})", name)
        return ast.Call(name.text, args, name.span), sig.returns

    def declare(self, name: str, typ: str, tok: Token) -> None:
        if name in self.types:
            raise self.error(f"redeclaration of {name!r}", tok)
        self.types[name] = typ


def parse(text: str) -> ast.Script:
    """Parse and type-check; raises :class:`ScriptSyntaxError` on the first problem."""
    return Parser(text).parse()


def diagnose(text: str) -> Optional[Diagnostic]:
    """The first diagnostic for ``text``, or None if it is a valid script."""
    try:
        parse(text)
    except ScriptSyntaxError as e:
        return e.diagnostic
    return None
