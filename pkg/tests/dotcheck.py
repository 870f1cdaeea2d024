"""A tiny independent DOT-grammar checker used by the CLI tests.

Parses the digraph subset of the Graphviz grammar: graph/subgraph blocks,
node statements with attribute lists, edge statements, and attribute
assignments.  Returns (node_ids, edges) so tests can also assert counts.
"""

import re

_TOKEN = re.compile(
    r'\s*(?:(?P<id>[A-Za-z_][A-Za-z0-9_]*|"(?:[^"\\]|\\.)*")'
    r'|(?P<punct>\{|\}|\[|\]|;|=|,|->))')


def _tokenize(text):
    pos = 0
    tokens = []
    while pos < len(text):
        match = _TOKEN.match(text, pos)
        if not match:
            if text[pos:].strip():
                raise SyntaxError(f"unexpected character at {pos}: {text[pos]!r}")
            break
        pos = match.end()
        tokens.append(match.group("id") or match.group("punct"))
    return tokens


class _Parser:
    def __init__(self, tokens):
        self.tokens = tokens
        self.pos = 0

    def peek(self):
        return self.tokens[self.pos] if self.pos < len(self.tokens) else None

    def take(self, expected=None):
        token = self.peek()
        if token is None:
            raise SyntaxError("unexpected end of input")
        if expected is not None and token != expected:
            raise SyntaxError(f"expected {expected!r}, got {token!r}")
        self.pos += 1
        return token

    def parse_graph(self):
        keyword = self.take()
        if keyword not in ("digraph", "graph"):
            raise SyntaxError(f"expected digraph/graph, got {keyword!r}")
        if self.peek() != "{":
            self.take()  # optional graph name
        self.take("{")
        nodes, edges = set(), []
        self.parse_statements(nodes, edges)
        self.take("}")
        if self.peek() is not None:
            raise SyntaxError(f"trailing tokens: {self.peek()!r}")
        return nodes, edges

    def parse_statements(self, nodes, edges):
        while self.peek() not in ("}", None):
            self.parse_statement(nodes, edges)

    def parse_statement(self, nodes, edges):
        token = self.take()
        if token == "subgraph":
            if self.peek() != "{":
                self.take()  # subgraph name
            self.take("{")
            self.parse_statements(nodes, edges)
            self.take("}")
            return
        if token in ("node", "edge", "graph") and self.peek() == "[":
            self.parse_attrs()
            self.maybe_semicolon()
            return
        if self.peek() == "=":  # attribute assignment, e.g. rankdir=LR
            self.take("=")
            self.take()
            self.maybe_semicolon()
            return
        # node or edge statement starting at an identifier
        source = token
        if self.peek() == "->":
            while self.peek() == "->":
                self.take("->")
                target = self.take()
                edges.append((source, target))
                source = target
            if self.peek() == "[":
                self.parse_attrs()
        else:
            nodes.add(source)
            if self.peek() == "[":
                self.parse_attrs()
        self.maybe_semicolon()

    def parse_attrs(self):
        self.take("[")
        while self.peek() != "]":
            self.take()  # key
            self.take("=")
            self.take()  # value
            if self.peek() == ",":
                self.take(",")
        self.take("]")

    def maybe_semicolon(self):
        if self.peek() == ";":
            self.take(";")


def parse_dot(text):
    """Parse DOT text; raises SyntaxError on malformed input."""
    return _Parser(_tokenize(text)).parse_graph()
