import json

import pytest

from superkappa import (
    FormatError,
    Graph,
    complete,
    cycle,
    direct_product,
    parse_edgelist_json,
    parse_graph6,
    write_edgelist_json,
    write_graph6,
)

from conftest import seeded_corpus


def hand_pack_graph6(G):
    """Independent packer: adjacency-matrix bit vector, column by column."""
    assert G.n <= 62
    adj = [[0] * G.n for _ in range(G.n)]
    for u, v in G.edges:
        adj[u][v] = adj[v][u] = 1
    bits = [adj[row][col] for col in range(G.n) for row in range(col)]
    bits += [0] * (-len(bits) % 6)
    chars = [chr(G.n + 63)]
    for i in range(0, len(bits), 6):
        value = 0
        for b in bits[i : i + 6]:
            value = value * 2 + b
        chars.append(chr(value + 63))
    return "".join(chars)


def test_write_c5_matches_hand_derivation(c5):
    assert write_graph6(c5) == hand_pack_graph6(c5) + "\n"
    assert write_graph6(c5) == "Dhc\n"
    assert parse_graph6("Dhc") == c5


def test_graph6_smallest():
    assert write_graph6(complete(1)) == "@\n"
    assert parse_graph6("@") == Graph(1, [])


def test_graph6_all_zero():
    g = parse_graph6("D??")
    assert g.n == 5 and not g.edges


def test_graph6_header_and_long_form():
    assert parse_graph6(">>graph6<<Dhc") == cycle(5)
    big = cycle(100)
    assert parse_graph6(write_graph6(big)) == big


@pytest.mark.parametrize(
    "bad",
    ["", "~", "~~A", "D", "Dhcc", "Dh\x1c"],
)
def test_graph6_malformed(bad):
    with pytest.raises(FormatError):
        parse_graph6(bad)


def test_graph6_error_carries_offset():
    with pytest.raises(FormatError) as exc:
        parse_graph6("Dhcc")
    assert exc.value.offset is not None


def test_edgelist_json_examples():
    g = parse_edgelist_json('{"n":3,"edges":[[0,1],[1,2],[0,2]]}')
    assert g == cycle(3)
    with pytest.raises(FormatError, match="self-loop"):
        parse_edgelist_json('{"n":2,"edges":[[0,0]]}')
    p = direct_product(complete(2), complete(2))
    doc = json.loads(write_edgelist_json(p))
    assert doc["n"] == 4 and doc["edges"] == [[0, 3], [1, 2]]


@pytest.mark.parametrize(
    "bad,needle",
    [
        ('{"n":-1,"edges":[]}', "'n'"),
        ('{"n":2}', "'edges'"),
        ('{"n":2,"edges":[[0,2]]}', "out of range"),
        ('{"n":2,"edges":[[0,1],[1,0]]}', "duplicate"),
        ('{"n":2,"edges":[],"labels":["a"]}', "'labels'"),
        ("[1,2]", "object"),
        ("{", "invalid JSON"),
    ],
)
def test_edgelist_json_schema_errors(bad, needle):
    with pytest.raises(FormatError, match=needle):
        parse_edgelist_json(bad)


def test_round_trips_on_corpus():
    for G in seeded_corpus(seed=23, count=60, max_n=12):
        assert parse_graph6(write_graph6(G)) == G
        assert parse_edgelist_json(write_edgelist_json(G)) == G
        assert write_graph6(parse_graph6(write_graph6(G))) == write_graph6(G)
