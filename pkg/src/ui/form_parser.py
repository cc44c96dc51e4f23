# src/ui/form_parser.py
"""
Langage .fol : déclarations de variables, 1-formes polynomiales, constructeurs de
familles et composantes déclarées.

Exemple :

    title "pinceau de plans"
    vars x0, x1, x2, x3
    form x0*dx1 - x1*dx0
    component axe { ideal x0, x1; param [0 : 0 : s : t]; point [0 : 0 : 1 : 0] }

Les expressions n'admettent que des entiers ; '/' divise par une constante non nulle.
Priorités : '^' (associatif à droite) > '-' unaire > '* /' > '+ -'.
"""
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Optional, Sequence, Tuple

import pyparsing as pp

from src.algebra.polynomial import MPoly, PolyRing
from src.errors import FormSyntaxError, NonlinearDifferential, UndeclaredVariable
from src.forms.exterior import PolyForm, ext_d

pp.ParserElement.enable_packrat()

KEYWORDS = (
    "vars",
    "degree",
    "form",
    "log",
    "weights",
    "pencil",
    "exponents",
    "component",
    "ideal",
    "param",
    "point",
    "birational",
    "embedded",
    "eta",
    "map",
    "expect",
    "title",
    "d",
)

Pos = Tuple[int, int]


# --- Arbre syntaxique ---
@dataclass(frozen=True)
class Num:
    value: int
    pos: Pos = field(default=(0, 0), compare=False)

    def render(self) -> str:
        return str(self.value)


@dataclass(frozen=True)
class Var:
    name: str
    pos: Pos = field(default=(0, 0), compare=False)

    def render(self) -> str:
        return self.name


@dataclass(frozen=True)
class Diff:
    """Différentielle d'une variable déclarée (dx0)."""

    name: str
    pos: Pos = field(default=(0, 0), compare=False)

    def render(self) -> str:
        return "d" + self.name


@dataclass(frozen=True)
class DOp:
    """d(expr), développé en Σ ∂expr/∂x_i dx_i."""

    arg: "Node"
    pos: Pos = field(default=(0, 0), compare=False)

    def render(self) -> str:
        return f"d({self.arg.render()})"


@dataclass(frozen=True)
class BinOp:
    op: str
    left: "Node"
    right: "Node"
    pos: Pos = field(default=(0, 0), compare=False)

    def render(self) -> str:
        return f"({self.left.render()} {self.op} {self.right.render()})"


@dataclass(frozen=True)
class Neg:
    arg: "Node"
    pos: Pos = field(default=(0, 0), compare=False)

    def render(self) -> str:
        return f"(-{self.arg.render()})"


@dataclass(frozen=True)
class Pow:
    base: "Node"
    exponent: "Node"
    pos: Pos = field(default=(0, 0), compare=False)

    def render(self) -> str:
        return f"({self.base.render()}^{self.exponent.render()})"


Node = object


# --- Document ---
@dataclass(frozen=True)
class ComponentSpec:
    name: str
    ideal: Tuple[Node, ...] = ()
    param: Optional[Tuple[Node, ...]] = None
    point: Optional[Tuple[Node, ...]] = None
    birational: bool = False
    embedded: bool = False
    line: int = field(default=0, compare=False)


@dataclass(frozen=True)
class FormSpec:
    """Document .fol analysé ; les identifiants sont résolus (Var ou Diff)."""

    variables: Tuple[str, ...]
    title: Optional[str] = None
    degree: Optional[int] = None
    form: Optional[Node] = None
    log: Optional[Tuple[Tuple[Node, ...], Tuple[Node, ...]]] = None
    pencil: Optional[Tuple[Node, Node, Node, Node]] = None
    components: Tuple[ComponentSpec, ...] = ()
    eta: Optional[Tuple[Tuple[str, ...], Node]] = None
    map: Optional[Tuple[Node, ...]] = None
    expects: Tuple[Tuple[str, str], ...] = ()

    def render(self) -> str:
        """Texte .fol canonique (expressions entièrement parenthésées)."""
        lines = []
        if self.title is not None:
            lines.append(f'title "{self.title}"')
        lines.append("vars " + ", ".join(self.variables))
        if self.degree is not None:
            lines.append(f"degree {self.degree}")
        if self.form is not None:
            lines.append("form " + self.form.render())
        if self.log is not None:
            hyp, weights = self.log
            lines.append(
                "log " + ", ".join(h.render() for h in hyp)
                + " weights " + ", ".join(w.render() for w in weights)
            )
        if self.pencil is not None:
            F, G, p, q = self.pencil
            lines.append(f"pencil {F.render()}, {G.render()} exponents {p.render()}, {q.render()}")
        for c in self.components:
            items = ["ideal " + ", ".join(g.render() for g in c.ideal)]
            if c.param is not None:
                items.append("param [" + " : ".join(p.render() for p in c.param) + "]")
            if c.point is not None:
                items.append("point [" + " : ".join(p.render() for p in c.point) + "]")
            if c.birational:
                items.append("birational")
            if c.embedded:
                items.append("embedded")
            lines.append(f"component {c.name} {{ " + "; ".join(items) + " }")
        if self.eta is not None:
            names, body = self.eta
            lines.append("eta [" + ", ".join(names) + "] " + body.render())
        if self.map is not None:
            lines.append("map [" + ", ".join(m.render() for m in self.map) + "]")
        for key, value in self.expects:
            lines.append(f'expect {key} "{value}"')
        return "\n".join(lines) + "\n"


@dataclass(frozen=True)
class _Stmt:
    kind: str
    payload: tuple
    line: int


# --- Grammaire ---
def _pos(s: str, loc: int) -> Pos:
    return pp.lineno(loc, s), pp.col(loc, s)


def _fold_left(s, loc, toks):
    t = toks[0]
    node = t[0]
    for i in range(1, len(t), 2):
        node = BinOp(t[i], node, t[i + 1], getattr(node, "pos", (0, 0)))
    return node


def _fold_power(s, loc, toks):
    t = toks[0]
    node = t[-1]
    for i in range(len(t) - 3, -1, -2):
        node = Pow(t[i], node, getattr(t[i], "pos", (0, 0)))
    return node


def _fold_neg(s, loc, toks):
    t = toks[0]
    node = t[-1]
    for _ in range(len(t) - 1):
        node = Neg(node, _pos(s, loc))
    return node


def _build_grammar() -> pp.ParserElement:
    K = pp.Keyword
    LBR, RBR, LBRACE, RBRACE, LPAR, RPAR, COMMA, SEMI = map(pp.Suppress, "[]{}(),;")
    reserved = pp.MatchFirst([K(k) for k in KEYWORDS])
    name = ~reserved + pp.Word(pp.alphas + "_", pp.alphanums + "_")
    integer = pp.Word(pp.nums)

    expr = pp.Forward()
    number = integer.copy().set_parse_action(lambda s, loc, t: Num(int(t[0]), _pos(s, loc)))
    identifier = name.copy().set_parse_action(lambda s, loc, t: Var(t[0], _pos(s, loc)))
    d_call = (K("d").suppress() + LPAR + expr + RPAR).set_parse_action(
        lambda s, loc, t: DOp(t[0], _pos(s, loc))
    )
    atom = number | d_call | identifier
    expr <<= pp.infix_notation(
        atom,
        [
            (pp.Literal("^"), 2, pp.OpAssoc.RIGHT, _fold_power),
            (pp.Literal("-"), 1, pp.OpAssoc.RIGHT, _fold_neg),
            (pp.one_of("* /"), 2, pp.OpAssoc.LEFT, _fold_left),
            (pp.one_of("+ -"), 2, pp.OpAssoc.LEFT, _fold_left),
        ],
    )
    exprs = pp.Group(pp.DelimitedList(expr))
    projective = pp.Group(LBR + pp.DelimitedList(expr, delim=":") + RBR)

    def stmt(kind, body):
        return (K(kind).suppress() + body).set_parse_action(
            lambda s, loc, t: _Stmt(kind, tuple(t), pp.lineno(loc, s))
        )

    item = (
        stmt("ideal", exprs)
        | stmt("param", projective)
        | stmt("point", projective)
        | stmt("birational", pp.Empty())
        | stmt("embedded", pp.Empty())
    )
    statement = (
        stmt("vars", pp.Group(pp.DelimitedList(name)))
        | stmt("degree", integer)
        | stmt("form", expr)
        | stmt("log", exprs + K("weights").suppress() + exprs)
        | stmt("pencil", expr + COMMA + expr + K("exponents").suppress() + expr + COMMA + expr)
        | stmt("component", name + LBRACE + pp.Group(pp.ZeroOrMore(item + pp.Optional(SEMI))) + RBRACE)
        | stmt("eta", pp.Group(LBR + pp.DelimitedList(name) + RBR) + expr)
        | stmt("map", pp.Group(LBR + pp.DelimitedList(expr) + RBR))
        | stmt(
            "expect",
            pp.Word(pp.alphas + "_", pp.alphanums + "_.")
            + (pp.QuotedString('"') | pp.Regex(r"-?\d+(/\d+)?")),
        )
        | stmt("title", pp.QuotedString('"'))
    )
    document = pp.ZeroOrMore(statement + pp.Optional(SEMI)) + pp.StringEnd()
    document.ignore(pp.python_style_comment)
    return document


_GRAMMAR = _build_grammar()


# --- Résolution des identifiants ---
def resolve(node: Node, names: Sequence[str]) -> Node:
    """Remplace chaque identifiant par une variable ou une différentielle déclarée."""
    if isinstance(node, Var):
        if node.name in names:
            return node
        if node.name.startswith("d") and node.name[1:] in names:
            return Diff(node.name[1:], node.pos)
        raise UndeclaredVariable(f"variable non déclarée : '{node.name}'", *node.pos)
    if isinstance(node, (Num, Diff)):
        return node
    if isinstance(node, DOp):
        return DOp(resolve(node.arg, names), node.pos)
    if isinstance(node, Neg):
        return Neg(resolve(node.arg, names), node.pos)
    if isinstance(node, Pow):
        return Pow(resolve(node.base, names), resolve(node.exponent, names), node.pos)
    if isinstance(node, BinOp):
        return BinOp(node.op, resolve(node.left, names), resolve(node.right, names), node.pos)
    raise TypeError(f"Nœud inconnu : {node!r}")


def _resolve_all(nodes, names):
    return tuple(resolve(n, names) for n in nodes)


def _component(stmt: _Stmt, names: Sequence[str]) -> ComponentSpec:
    comp_name, items = stmt.payload
    fields = {"ideal": (), "param": None, "point": None, "birational": False, "embedded": False}
    for it in items:
        if it.kind in ("birational", "embedded"):
            fields[it.kind] = True
            continue
        if it.kind == "param":
            fields["param"] = _resolve_all(it.payload[0], ("s", "t"))
        elif it.kind == "point":
            fields["point"] = _resolve_all(it.payload[0], ())
        else:
            fields["ideal"] = _resolve_all(it.payload[0], names)
    if not fields["ideal"]:
        raise FormSyntaxError(f"la composante {comp_name} n'a pas d'idéal", stmt.line, 1)
    return ComponentSpec(comp_name, line=stmt.line, **fields)


def parse_form(text: str) -> FormSpec:
    """
    Analyse un document .fol.

    Lève:
        FormSyntaxError: erreur de syntaxe (ligne, colonne) ou document incohérent.
        UndeclaredVariable: identifiant ni variable ni différentielle déclarée.
    """
    try:
        statements = _GRAMMAR.parse_string(text, parse_all=True)
    except pp.ParseBaseException as err:
        raise FormSyntaxError(f"syntaxe invalide ({err.msg})", err.lineno, err.col)

    seen = {}
    for st in statements:
        if st.kind in seen and st.kind not in ("component", "expect"):
            raise FormSyntaxError(f"instruction '{st.kind}' répétée", st.line, 1)
        seen.setdefault(st.kind, []).append(st)
    if "vars" not in seen:
        raise FormSyntaxError("déclaration 'vars' manquante", 1, 1)
    variables = tuple(seen["vars"][0].payload[0])
    if len(set(variables)) != len(variables):
        raise FormSyntaxError("variables déclarées deux fois", seen["vars"][0].line, 1)
    for v in variables:
        if v.startswith("d") and v[1:] in variables:
            raise FormSyntaxError(f"'{v}' se confond avec la différentielle de '{v[1:]}'", seen["vars"][0].line, 1)
    sources = [k for k in ("form", "log", "pencil") if k in seen]
    if len(sources) > 1:
        raise FormSyntaxError(f"une seule source de forme attendue, reçu : {', '.join(sources)}", 1, 1)

    def one(kind):
        return seen[kind][0].payload if kind in seen else None

    degree = int(one("degree")[0]) if "degree" in seen else None
    form = resolve(one("form")[0], variables) if "form" in seen else None
    log = None
    if "log" in seen:
        hyp, weights = one("log")
        log = (_resolve_all(hyp, variables), _resolve_all(weights, ()))
    pencil = None
    if "pencil" in seen:
        F, G, p, q = one("pencil")
        pencil = (resolve(F, variables), resolve(G, variables), resolve(p, ()), resolve(q, ()))
    eta = None
    if "eta" in seen:
        eta_names, body = one("eta")
        eta_names = tuple(eta_names)
        eta = (eta_names, resolve(body, eta_names))
    mapping = _resolve_all(one("map")[0], variables) if "map" in seen else None
    components = tuple(_component(st, variables) for st in seen.get("component", []))
    names = [c.name for c in components]
    if len(set(names)) != len(names):
        raise FormSyntaxError("deux composantes portent le même nom", 1, 1)
    expects = tuple((st.payload[0], st.payload[1]) for st in seen.get("expect", []))
    title = one("title")[0] if "title" in seen else None
    return FormSpec(variables, title, degree, form, log, pencil, components, eta, mapping, expects)


# --- Évaluation ---
class _Value:
    """Fonction + 1-forme : f + w, les différentielles n'apparaissant que linéairement."""

    __slots__ = ("f", "w")

    def __init__(self, f: MPoly, w: PolyForm):
        self.f = f
        self.w = w


def _evaluate(node: Node, ring: PolyRing) -> _Value:
    zero_form = PolyForm.zero(ring, 1) if ring.nvars else None
    if isinstance(node, Num):
        return _Value(ring.const(node.value), zero_form)
    if isinstance(node, Var):
        return _Value(ring.var(node.name), zero_form)
    if isinstance(node, Diff):
        return _Value(ring.zero(), PolyForm.differential(ring, ring.index(node.name)))
    if isinstance(node, DOp):
        inner = _evaluate(node.arg, ring)
        if inner.w is not None and not inner.w.is_zero():
            raise NonlinearDifferential("d appliqué à une expression contenant des différentielles", *node.pos)
        return _Value(ring.zero(), ext_d(PolyForm.function(inner.f)))
    if isinstance(node, Neg):
        inner = _evaluate(node.arg, ring)
        return _Value(-inner.f, -inner.w if inner.w is not None else None)
    if isinstance(node, Pow):
        base = _evaluate(node.base, ring)
        k = _constant(_evaluate(node.exponent, ring), node.exponent)
        if k.denominator != 1 or k < 0:
            raise FormSyntaxError(f"exposant invalide : {k}", *node.pos)
        k = int(k)
        if _has_form(base) and k >= 2:
            raise NonlinearDifferential("puissance d'une différentielle", *node.pos)
        if k == 0:
            return _Value(ring.one(), zero_form)
        if k == 1:
            return base
        return _Value(base.f**k, zero_form)
    if isinstance(node, BinOp):
        a = _evaluate(node.left, ring)
        b = _evaluate(node.right, ring)
        if node.op == "+":
            return _Value(a.f + b.f, _add(a.w, b.w))
        if node.op == "-":
            return _Value(a.f - b.f, _add(a.w, -b.w if b.w is not None else None))
        if node.op == "*":
            if _has_form(a) and _has_form(b):
                raise NonlinearDifferential("produit de deux différentielles", *node.pos)
            w = None
            if zero_form is not None:
                w = a.w.scale(b.f) + b.w.scale(a.f)
            return _Value(a.f * b.f, w)
        if node.op == "/":
            c = _constant(b, node.right)
            if c == 0:
                raise FormSyntaxError("division par zéro", *node.pos)
            return _Value(a.f.scale(1 / c), a.w.scale(1 / c) if a.w is not None else None)
    raise TypeError(f"Nœud inconnu : {node!r}")


def _has_form(v: _Value) -> bool:
    return v.w is not None and not v.w.is_zero()


def _add(a, b):
    if a is None:
        return b
    if b is None:
        return a
    return a + b


def _constant(v: _Value, node: Node) -> Fraction:
    if _has_form(v) or not v.f.is_constant():
        raise FormSyntaxError("une constante est attendue ici", *getattr(node, "pos", (0, 0)))
    return v.f.constant_term()


def evaluate_polynomial(node: Node, ring: PolyRing) -> MPoly:
    value = _evaluate(node, ring)
    if _has_form(value):
        raise FormSyntaxError("différentielle inattendue dans un polynôme", *getattr(node, "pos", (0, 0)))
    return value.f


def evaluate_one_form(node: Node, ring: PolyRing) -> PolyForm:
    value = _evaluate(node, ring)
    if not value.f.is_zero():
        raise FormSyntaxError(
            f"terme sans différentielle dans une 1-forme : {value.f}", *getattr(node, "pos", (0, 0))
        )
    return value.w


def evaluate_constant(node: Node) -> Fraction:
    return _constant(_evaluate(node, PolyRing(())), node)
