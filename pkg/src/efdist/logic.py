"""First-order formulas over graphs: AST, S-expression syntax, evaluator.

The language has the adjacency and equality relations only.  Quantifiers
range over the vertex set of the graph being interrogated; evaluation is
plain recursive descent over the AST with assignment extension.

Concrete syntax (S-expressions)::

    formula := (E var formula) | (A var formula)
             | (and formula*) | (or formula*) | (not formula)
             | (adj var var) | (= var var)

``E`` is the existential and ``A`` the universal quantifier; ``and``/``or``
take any number of operands (zero-ary ``and`` is true, zero-ary ``or`` is
false).  Variable names are bare tokens.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Union

from .graphs import Graph, format_graph6
from .patterns import contains_subgraph, treewidth
from .reports import FAIL, PASS, Report, stopwatch_ms

__all__ = [
    "Formula",
    "Adj",
    "Eq",
    "Not",
    "And",
    "Or",
    "Exists",
    "Forall",
    "LogicError",
    "FormulaSyntaxError",
    "evaluate",
    "quantifier_depth",
    "variable_width",
    "free_variables",
    "parse_formula",
    "format_formula",
    "ClassFilter",
    "defines_check",
]


class LogicError(ValueError):
    """Ill-formed formula or evaluation request."""


class FormulaSyntaxError(LogicError):
    """Unparsable S-expression formula text."""


@dataclass(frozen=True)
class Adj:
    x: str
    y: str


@dataclass(frozen=True)
class Eq:
    x: str
    y: str


@dataclass(frozen=True)
class Not:
    body: "Formula"


@dataclass(frozen=True)
class And:
    parts: tuple["Formula", ...]


@dataclass(frozen=True)
class Or:
    parts: tuple["Formula", ...]


@dataclass(frozen=True)
class Exists:
    var: str
    body: "Formula"


@dataclass(frozen=True)
class Forall:
    var: str
    body: "Formula"


Formula = Union[Adj, Eq, Not, And, Or, Exists, Forall]


def quantifier_depth(phi: Formula) -> int:
    if isinstance(phi, (Adj, Eq)):
        return 0
    if isinstance(phi, Not):
        return quantifier_depth(phi.body)
    if isinstance(phi, (And, Or)):
        return max((quantifier_depth(p) for p in phi.parts), default=0)
    return 1 + quantifier_depth(phi.body)


def _variables(phi: Formula, out: set[str]) -> None:
    if isinstance(phi, (Adj, Eq)):
        out.add(phi.x)
        out.add(phi.y)
    elif isinstance(phi, Not):
        _variables(phi.body, out)
    elif isinstance(phi, (And, Or)):
        for p in phi.parts:
            _variables(p, out)
    else:
        out.add(phi.var)
        _variables(phi.body, out)


def variable_width(phi: Formula) -> int:
    """Number of distinct variable names; reusing a name does not count."""
    names: set[str] = set()
    _variables(phi, names)
    return len(names)


def free_variables(phi: Formula) -> set[str]:
    if isinstance(phi, (Adj, Eq)):
        return {phi.x, phi.y}
    if isinstance(phi, Not):
        return free_variables(phi.body)
    if isinstance(phi, (And, Or)):
        out: set[str] = set()
        for p in phi.parts:
            out |= free_variables(p)
        return out
    return free_variables(phi.body) - {phi.var}


def evaluate(g: Graph, phi: Formula, assignment: dict | None = None) -> bool:
    """Tarskian truth of phi on g under a partial assignment.

    Every free variable of phi must be assigned, otherwise LogicError.
    """
    env = dict(assignment) if assignment else {}
    missing = free_variables(phi) - env.keys()
    if missing:
        raise LogicError(f"unbound free variables: {sorted(missing)}")
    for var, vertex in env.items():
        if not 0 <= vertex < g.n:
            raise LogicError(f"assignment maps {var} outside the vertex set")
    return _eval(g, phi, env)


def _eval(g: Graph, phi: Formula, env: dict) -> bool:
    if isinstance(phi, Adj):
        return g.has_edge(env[phi.x], env[phi.y])
    if isinstance(phi, Eq):
        return env[phi.x] == env[phi.y]
    if isinstance(phi, Not):
        return not _eval(g, phi.body, env)
    if isinstance(phi, And):
        return all(_eval(g, p, env) for p in phi.parts)
    if isinstance(phi, Or):
        return any(_eval(g, p, env) for p in phi.parts)
    if isinstance(phi, Exists):
        return any(
            _eval(g, phi.body, {**env, phi.var: v}) for v in range(g.n)
        )
    if isinstance(phi, Forall):
        return all(
            _eval(g, phi.body, {**env, phi.var: v}) for v in range(g.n)
        )
    raise LogicError(f"not a formula node: {phi!r}")


# -- concrete syntax ------------------------------------------------------------


def _tokenize(text: str) -> list[str]:
    return text.replace("(", " ( ").replace(")", " ) ").split()


def parse_formula(text: str) -> Formula:
    tokens = _tokenize(text)
    if not tokens:
        raise FormulaSyntaxError("empty formula")
    phi, rest = _parse(tokens, 0)
    if rest != len(tokens):
        raise FormulaSyntaxError(f"trailing tokens: {' '.join(tokens[rest:])}")
    return phi


def _expect_var(tokens: list[str], i: int) -> tuple[str, int]:
    if i >= len(tokens) or tokens[i] in ("(", ")"):
        raise FormulaSyntaxError("expected a variable name")
    return tokens[i], i + 1


def _parse(tokens: list[str], i: int) -> tuple[Formula, int]:
    if i >= len(tokens):
        raise FormulaSyntaxError("unexpected end of input")
    if tokens[i] != "(":
        raise FormulaSyntaxError(f"expected '(', got {tokens[i]!r}")
    i += 1
    if i >= len(tokens):
        raise FormulaSyntaxError("unexpected end of input")
    head = tokens[i]
    i += 1
    if head in ("E", "A"):
        var, i = _expect_var(tokens, i)
        body, i = _parse(tokens, i)
        i = _expect_close(tokens, i)
        return (Exists(var, body) if head == "E" else Forall(var, body)), i
    if head == "not":
        body, i = _parse(tokens, i)
        i = _expect_close(tokens, i)
        return Not(body), i
    if head in ("and", "or"):
        parts = []
        while i < len(tokens) and tokens[i] != ")":
            part, i = _parse(tokens, i)
            parts.append(part)
        i = _expect_close(tokens, i)
        return (And(tuple(parts)) if head == "and" else Or(tuple(parts))), i
    if head in ("adj", "="):
        x, i = _expect_var(tokens, i)
        y, i = _expect_var(tokens, i)
        i = _expect_close(tokens, i)
        return (Adj(x, y) if head == "adj" else Eq(x, y)), i
    raise FormulaSyntaxError(f"unknown operator {head!r}")


def _expect_close(tokens: list[str], i: int) -> int:
    if i >= len(tokens) or tokens[i] != ")":
        raise FormulaSyntaxError("expected ')'")
    return i + 1


def format_formula(phi: Formula) -> str:
    if isinstance(phi, Adj):
        return f"(adj {phi.x} {phi.y})"
    if isinstance(phi, Eq):
        return f"(= {phi.x} {phi.y})"
    if isinstance(phi, Not):
        return f"(not {format_formula(phi.body)})"
    if isinstance(phi, And):
        return "(and" + "".join(" " + format_formula(p) for p in phi.parts) + ")"
    if isinstance(phi, Or):
        return "(or" + "".join(" " + format_formula(p) for p in phi.parts) + ")"
    if isinstance(phi, Exists):
        return f"(E {phi.var} {format_formula(phi.body)})"
    if isinstance(phi, Forall):
        return f"(A {phi.var} {format_formula(phi.body)})"
    raise LogicError(f"not a formula node: {phi!r}")


# -- class filters and the defines-checker ----------------------------------------


@dataclass(frozen=True)
class ClassFilter:
    """Selects the host graphs a candidate definition is checked against."""

    connected: bool = True
    min_vertices: int = 0
    min_treewidth: int = 0
    min_connectivity: int = 0

    def __post_init__(self):
        if min(self.min_vertices, self.min_treewidth, self.min_connectivity) < 0:
            raise LogicError("filter thresholds must be nonnegative")

    def matches(self, g: Graph) -> bool:
        from .graphs import vertex_connectivity

        if g.n < self.min_vertices:
            return False
        if self.connected and not g.is_connected():
            return False
        if self.min_treewidth and treewidth(g) < self.min_treewidth:
            return False
        if self.min_connectivity and vertex_connectivity(g) < self.min_connectivity:
            return False
        return True


def defines_check(
    phi: Formula, f: Graph, cfilter: ClassFilter, nmax: int
) -> Report:
    """Does phi define the class of F-subgraph hosts over the filtered corpus?

    Checks ``G |= phi  iff  F is a subgraph of G`` for every graph G with at
    most nmax vertices passing the filter; the report lists all violations.
    """
    if free_variables(phi):
        raise LogicError("defines_check needs a sentence (no free variables)")
    if nmax > 8:
        raise LogicError("defines_check: nmax must be <= 8")
    from .graphs import enumerate_connected, enumerate_graphs

    stream = enumerate_connected if cfilter.connected else enumerate_graphs
    checked = 0
    violations = []
    with stopwatch_ms() as timer:
        for n in range(1, nmax + 1):
            for g in stream(n):
                if not cfilter.matches(g):
                    continue
                checked += 1
                holds = evaluate(g, phi)
                want = contains_subgraph(g, f)
                if holds != want:
                    violations.append(
                        {
                            "graph": format_graph6(g),
                            "models_formula": holds,
                            "contains_pattern": want,
                        }
                    )
    return Report(
        experiment="defines-check",
        claim="G satisfies the sentence iff G contains the pattern, over the filtered corpus",
        inputs={
            "formula": format_formula(phi),
            "pattern": format_graph6(f),
            "filter": {
                "connected": cfilter.connected,
                "min_vertices": cfilter.min_vertices,
                "min_treewidth": cfilter.min_treewidth,
                "min_connectivity": cfilter.min_connectivity,
            },
            "nmax": nmax,
        },
        computed={"graphs_checked": checked, "violations": violations},
        verdict=PASS if not violations else FAIL,
        runtime_ms=timer.elapsed,
    )
