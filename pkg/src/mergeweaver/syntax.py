"""Syntax trees for the Java subset handled by mergeweaver.

Every parsed source file becomes a tree of SyntaxNode objects.  The node
vocabulary is fixed (see NODE_KINDS); anything outside it is a bug, not an
extension point.  Trees are ordered, values are plain strings, and node ids
are assigned in pre-order so that two parses of the same text produce the
same ids.

Invariants maintained here and relied on elsewhere:
  * a node's kind is always a member of NODE_KINDS
  * Name and Literal nodes carry a non-empty value and have no children
  * spans of siblings are disjoint and nest inside the parent's span
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Iterator, Optional

NODE_KINDS = frozenset({
    "CompilationUnit", "PackageDecl", "ImportDecl",
    "ClassDecl", "InterfaceDecl", "EnumDecl",
    "FieldDecl", "MethodDecl", "ConstructorDecl", "EnumConstant",
    "Parameter", "TypeRef", "Modifier", "Annotation",
    "Block", "IfStmt", "ForStmt", "ForEachStmt", "WhileStmt",
    "ReturnStmt", "ThrowStmt", "ExprStmt", "LocalVarDecl",
    "MethodInvocation", "FieldAccess", "ObjectCreation", "AnonymousBody",
    "Name", "Literal", "BinaryExpr", "Assignment", "CastExpr",
    "ArgumentList",
})

# Statement-level kinds; Block is deliberately excluded so that the
# "enclosing statement" of a node inside a then-branch is the inner
# statement, not the brace pair around it.
STATEMENT_KINDS = frozenset({
    "IfStmt", "ForStmt", "ForEachStmt", "WhileStmt",
    "ReturnStmt", "ThrowStmt", "ExprStmt", "LocalVarDecl",
})

TYPE_DECL_KINDS = frozenset({"ClassDecl", "InterfaceDecl", "EnumDecl"})
MEMBER_KINDS = frozenset({
    "FieldDecl", "MethodDecl", "ConstructorDecl", "EnumConstant",
}) | TYPE_DECL_KINDS

# (start_line, start_col, end_line, end_col); lines and cols are 1-based.
Span = tuple[int, int, int, int]


@dataclass(eq=False)
class SyntaxNode:
    kind: str
    value: str = ""
    children: list["SyntaxNode"] = field(default_factory=list)
    span: Optional[Span] = None
    id: int = -1

    def __post_init__(self) -> None:
        if self.kind not in NODE_KINDS:
            raise ValueError(f"unknown node kind: {self.kind!r}")

    def __repr__(self) -> str:  # pragma: no cover - debugging aid
        v = f" {self.value!r}" if self.value else ""
        return f"<{self.kind}{v} #{self.id} ({len(self.children)} kids)>"

    def walk(self) -> Iterator["SyntaxNode"]:
        """Pre-order traversal including self."""
        stack = [self]
        while stack:
            node = stack.pop()
            yield node
            stack.extend(reversed(node.children))


def structurally_equal(a: SyntaxNode, b: SyntaxNode) -> bool:
    """Kind, value and child order; ids and spans are ignored."""
    if a.kind != b.kind or a.value != b.value:
        return False
    if len(a.children) != len(b.children):
        return False
    return all(structurally_equal(x, y) for x, y in zip(a.children, b.children))


def clone_node(node: SyntaxNode) -> SyntaxNode:
    """Deep copy preserving ids and spans."""
    return SyntaxNode(
        kind=node.kind,
        value=node.value,
        children=[clone_node(c) for c in node.children],
        span=node.span,
        id=node.id,
    )


class SyntaxTree:
    """A rooted tree plus the id and parent indexes over it.

    Mutation happens through the tree-edit machinery; after any direct
    surgery callers must invoke reindex().  Ids stay stable across clones.
    """

    def __init__(self, root: SyntaxNode, assign_ids: bool = False):
        self.root = root
        if assign_ids:
            self.assign_preorder_ids()
        self.reindex()

    def assign_preorder_ids(self) -> None:
        counter = 0
        for node in preorder(self.root):
            node.id = counter
            counter += 1

    def reindex(self) -> None:
        self._by_id: dict[int, SyntaxNode] = {}
        self._parents: dict[int, Optional[SyntaxNode]] = {}
        self._max_id = -1
        stack: list[tuple[SyntaxNode, Optional[SyntaxNode]]] = [(self.root, None)]
        while stack:
            node, parent = stack.pop()
            if node.id in self._by_id:
                raise ValueError(f"duplicate node id {node.id}")
            self._by_id[node.id] = node
            self._parents[node.id] = parent
            self._max_id = max(self._max_id, node.id)
            for child in node.children:
                stack.append((child, node))

    def node(self, node_id: int) -> SyntaxNode:
        return self._by_id[node_id]

    def has_node(self, node_id: int) -> bool:
        return node_id in self._by_id

    def parent(self, node: SyntaxNode) -> Optional[SyntaxNode]:
        return self._parents[node.id]

    @property
    def max_id(self) -> int:
        return self._max_id

    def fresh_id(self) -> int:
        self._max_id += 1
        return self._max_id

    def nodes(self) -> Iterator[SyntaxNode]:
        return preorder(self.root)

    def clone(self) -> "SyntaxTree":
        return SyntaxTree(clone_node(self.root))

    def enclosing_statement(self, node: SyntaxNode) -> Optional[SyntaxNode]:
        """Innermost statement containing node (node itself counts)."""
        cur: Optional[SyntaxNode] = node
        while cur is not None:
            if cur.kind in STATEMENT_KINDS:
                return cur
            cur = self.parent(cur)
        return None

    def ancestors(self, node: SyntaxNode) -> Iterator[SyntaxNode]:
        cur = self.parent(node)
        while cur is not None:
            yield cur
            cur = self.parent(cur)


def preorder(node: SyntaxNode) -> Iterator[SyntaxNode]:
    stack = [node]
    while stack:
        n = stack.pop()
        yield n
        stack.extend(reversed(n.children))


def postorder(node: SyntaxNode) -> Iterator[SyntaxNode]:
    for child in node.children:
        yield from postorder(child)
    yield node


@dataclass
class SourceFile:
    path: str
    text: str
    tree: SyntaxTree
