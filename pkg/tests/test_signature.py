import pytest

from ualgebra.errors import FormatError, InvalidSymbolError, SignatureError
from ualgebra.signature import Signature

from corpus import NAT


def test_nat_signature_arities():
    assert NAT.arity(0) == 0  # zero symbol
    assert NAT.arity(1) == 1  # successor symbol
    assert NAT.symbol("z").index == 0
    assert NAT.symbol("s").arity == 1


def test_construction_stores_entries_in_order():
    sig = Signature([("f", 2), ("a", 0), ("b", 0)])
    assert [sym.name for sym in sig.symbols] == ["f", "a", "b"]
    assert [sym.arity for sym in sig.symbols] == [2, 0, 0]
    for i, (_, arity) in enumerate(sig.entries()):
        assert sig.arity(i) == arity


def test_empty_signature():
    sig = Signature([])
    assert len(sig) == 0
    with pytest.raises(InvalidSymbolError):
        sig.arity(0)


def test_single_binary_symbol():
    sig = Signature([("f", 2)])
    assert sig.arity(sig.symbol("f")) == 2


def test_duplicate_name_rejected():
    with pytest.raises(SignatureError, match="duplicate.*'z'"):
        Signature([("z", 0), ("z", 1)])


def test_empty_name_rejected():
    with pytest.raises(SignatureError, match="empty"):
        Signature([("", 0)])


def test_negative_arity_rejected():
    with pytest.raises(SignatureError):
        Signature([("f", -1)])


def test_arity_out_of_range():
    with pytest.raises(InvalidSymbolError):
        NAT.arity(2)
    with pytest.raises(InvalidSymbolError):
        NAT.arity(-1)
    with pytest.raises(InvalidSymbolError):
        NAT.symbol("nope")


def test_foreign_symbol_rejected():
    other = Signature([("z", 0), ("s", 1)])
    with pytest.raises(InvalidSymbolError):
        NAT.arity(other.symbol("s"))


def test_structural_equality_of_signatures():
    assert NAT == Signature([("z", 0), ("s", 1)])
    assert NAT != Signature([("z", 0), ("s", 2)])
    assert NAT != Signature([("s", 1), ("z", 0)])
    assert hash(NAT) == hash(Signature([("z", 0), ("s", 1)]))


def test_symbol_equality_is_identity_scoped():
    clone = Signature([("z", 0), ("s", 1)])
    assert NAT.symbol("s") == NAT.symbol(1)
    assert NAT.symbol("s") != clone.symbol("s")
    assert NAT.symbol("s") != NAT.symbol("z")
    assert len({NAT.symbol("s"), NAT.symbol(1)}) == 1


def test_extend_with_variables():
    ext = NAT.extend_with_variables(2)
    assert ext.entries() == (("z", 0), ("s", 1), ("x0", 0), ("x1", 0))
    # original indices and arities preserved
    for i in range(len(NAT)):
        assert ext.arity(i) == NAT.arity(i)
        assert ext.symbols[i].name == NAT.symbols[i].name


def test_extend_zero_is_identity():
    assert NAT.extend_with_variables(0) is NAT
    assert NAT.extend_with_variables(0) == NAT


def test_extend_empty_signature():
    ext = Signature([]).extend_with_variables(1)
    assert ext.entries() == (("x0", 0),)


def test_extend_renames_on_collision():
    sig = Signature([("x0", 3)])
    ext = sig.extend_with_variables(1)
    assert ext.entries() == (("x0", 3), ("x0_1", 0))


def test_json_round_trip():
    data = NAT.to_json()
    assert data == {"symbols": [{"name": "z", "arity": 0}, {"name": "s", "arity": 1}]}
    assert Signature.from_json(data) == NAT


def test_from_json_limits():
    data = {"symbols": [{"name": "big", "arity": 100}]}
    assert Signature.from_json(data, limit=100).arity(0) == 100
    with pytest.raises(FormatError, match="exceeds limit"):
        Signature.from_json(data, limit=99)
    many = {"symbols": [{"name": f"c{i}", "arity": 0} for i in range(5)]}
    with pytest.raises(FormatError, match="symbol count"):
        Signature.from_json(many, limit=4)


@pytest.mark.parametrize(
    "data",
    [
        [],
        {},
        {"symbols": {}},
        {"symbols": [{"name": "z"}]},
        {"symbols": [{"name": "z", "arity": "0"}]},
        {"symbols": [{"name": "z", "arity": -1}]},
        {"symbols": [{"name": "z", "arity": 0}], "extra": 1},
    ],
)
def test_from_json_rejects_malformed(data):
    with pytest.raises(FormatError):
        Signature.from_json(data)
