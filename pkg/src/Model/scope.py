from __future__ import annotations

from Model.entity import EntityId
from Model.object_types import EntityKind
from Model.symbol_table import Symbol, SymbolTable

# Kinds reachable through the entity tree. Parameters and locals are only
# visible through the symbol tables of the bodies that declare them.
MEMBER_KINDS = frozenset({EntityKind.TYPE, EntityKind.FUNCTION, EntityKind.PROPERTY})


class Scope:
    """
    Represents a single lexical scope inside a body being analysed.

    Attributes:
        - name: A label for debugging.
        - level: Depth in the scope stack.
        - parent: The enclosing scope.
        - symbol_table: Locals declared in this scope.
        - entity_id: The declaration this scope belongs to (function, class, file), if any.
        - receiver: A Type whose members are implicitly in scope (extension
          function bodies and receiver-typed lambdas).
    """
    def __init__(self, name: str, level: int, parent=None, entity_id: EntityId | None = None,
                 receiver: EntityId | None = None):
        self.name = name
        self.symbol_table = SymbolTable()
        self.parent = parent
        self.level = level
        self.entity_id = entity_id
        self.receiver = receiver

    def add_symbol(self, symbol: Symbol):
        self.symbol_table.add_symbol(symbol)

    def get_symbol(self, name: str) -> Symbol | None:
        """Finds a local symbol in this scope or an enclosing one."""
        symbol = self.symbol_table.get_symbol(name)
        if symbol is None and self.parent:
            return self.parent.get_symbol(name)
        return symbol

    def __repr__(self):
        return f"Scope: {self.name}, Level: {self.level}, Symbols: {list(self.symbol_table.symbols)}"


class ScopeManager:
    """
    Manages the stack of scopes while a body is analysed, and resolves simple
    names against it.

    Resolution order, innermost first: the local symbols and the receiver
    type of each scope, then the entity tree from the innermost declaration
    (its members, the enclosing declarations, the file's imports and the
    built-ins).
    """
    def __init__(self, tree, root_entity: EntityId):
        self.tree = tree
        self.global_scope = Scope("global", level=0, entity_id=root_entity)
        self.current_scope = self.global_scope
        self.scope_level = 0


    def enter_scope(self, scope_name: str, entity_id: EntityId | None = None, receiver: EntityId | None = None):
        self.scope_level += 1
        self.current_scope = Scope(
            scope_name, level=self.scope_level, parent=self.current_scope,
            entity_id=entity_id, receiver=receiver,
        )


    def exit_scope(self):
        if self.current_scope.parent:
            self.current_scope = self.current_scope.parent
            self.scope_level -= 1


    def add_symbol(self, symbol: Symbol):
        self.current_scope.add_symbol(symbol)


    def get_symbol(self, name: str) -> Symbol | None:
        return self.current_scope.get_symbol(name)


    def scopes(self):
        scope = self.current_scope
        while scope is not None:
            yield scope
            scope = scope.parent


    def scope_stack(self) -> list[EntityId]:
        """The entity and receiver scopes in effect, innermost first."""
        stack = []
        for scope in self.scopes():
            if scope.receiver is not None:
                stack.append(scope.receiver)
            if scope.entity_id is not None:
                stack.append(scope.entity_id)
        return stack


    def entity_scope(self) -> EntityId:
        """The innermost declaration scope."""
        for scope in self.scopes():
            if scope.entity_id is not None:
                return scope.entity_id
        return self.global_scope.entity_id


    def resolve(self, name: str, kinds=None) -> Symbol | EntityId | None:
        """
        Resolves a simple name.

        Args:
            - name: The name as written.
            - kinds: Optional set of accepted entity kinds for tree lookups.

        Returns:
            - A local Symbol, an entity id, or None.
        """
        member_kinds = MEMBER_KINDS if kinds is None else MEMBER_KINDS & frozenset(kinds)
        wants_locals = kinds is None or EntityKind.VARIABLE in kinds or EntityKind.PARAMETER in kinds

        for scope in self.scopes():
            if wants_locals:
                symbol = scope.symbol_table.get_symbol(name)
                if symbol is not None:
                    return symbol
            if scope.receiver is not None:
                found = self.tree.find_member(scope.receiver, name, member_kinds)
                if found is not None:
                    return found

        if not member_kinds:
            return None
        return self.tree.lookup(self.entity_scope(), name, member_kinds)


    def __repr__(self):
        return f"Current Scope: {self.current_scope.name} - Level: {self.scope_level}"
