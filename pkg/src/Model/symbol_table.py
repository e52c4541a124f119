from __future__ import annotations

from dataclasses import dataclass

from Model.entity import EntityId


@dataclass
class Symbol:
    """
    Class that represents a local name visible inside a body: a parameter,
    a local variable or a lambda parameter.

    Attributes:
        - name: The simple name.
        - entity_id: The Parameter or Variable entity declared for it.
        - inferred_type: The Type entity of its value, once known.
    """
    name: str
    entity_id: EntityId | None
    inferred_type: EntityId | None = None

    def __repr__(self):
        return f'{self.name}: #{self.entity_id} -> {self.inferred_type}'


class SymbolTable:
    """
    Represents the local symbols of one scope.
    It does not handle the scope hierarchy (delegated to the scope manager).
    """
    def __init__(self):
        self.symbols: dict[str, Symbol] = {}

    def add_symbol(self, symbol: Symbol):
        """Adds a symbol, shadowing an earlier one with the same name."""
        self.symbols[symbol.name] = symbol

    def get_symbol(self, name: str) -> Symbol | None:
        return self.symbols.get(name)

    def __repr__(self):
        return f"SymbolTable({', '.join(self.symbols)})"
