import pytest

from Controller.semantic_utils import accessor_names, binary_result_type, builtin_id
from Model.data_types import BuiltinType
from Model.entity_tree import EntityTree


@pytest.fixture
def tree():
    return EntityTree.with_builtins()


@pytest.mark.parametrize("name, mutable, expected", [
    ("x", False, ("getX", None)),
    ("url", True, ("getUrl", "setUrl")),
    ("isOpen", True, ("isOpen", "setOpen")),
    ("island", True, ("getIsland", "setIsland")),
])
def test_accessor_names(name, mutable, expected):
    assert accessor_names(name, mutable) == expected


def test_comparisons_yield_boolean(tree):
    int_id = builtin_id(tree, BuiltinType.INT)

    assert binary_result_type(tree, "<", int_id, int_id) == builtin_id(tree, BuiltinType.BOOLEAN)
    assert binary_result_type(tree, "instanceof", None, None) == builtin_id(tree, BuiltinType.BOOLEAN)


def test_negation_is_not_a_binary_operator(tree):
    boolean_id = builtin_id(tree, BuiltinType.BOOLEAN)

    assert binary_result_type(tree, "!", boolean_id, boolean_id) is None


def test_numeric_results_widen(tree):
    int_id, double_id = builtin_id(tree, BuiltinType.INT), builtin_id(tree, BuiltinType.DOUBLE)

    assert binary_result_type(tree, "*", int_id, double_id) == double_id
    assert binary_result_type(tree, "+", int_id, builtin_id(tree, BuiltinType.STRING)) == builtin_id(tree, BuiltinType.STRING)
