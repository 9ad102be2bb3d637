import io
import random

import networkx as nx
import pytest

from helpers import random_graph
from kdis.errors import Graph6Error
from kdis.graph import Graph
from kdis.graph6 import graph6_decode, graph6_encode, read_graph6, write_graph6
from oracles import to_networkx


def _bits_by_hand(n: int, pairs: list[tuple[int, int]]) -> str:
    # column-wise upper triangle, six bits per byte, offset 63
    bits = "".join("1" if (i, j) in pairs else "0" for j in range(1, n) for i in range(j))
    bits += "0" * (-len(bits) % 6)
    return chr(63 + n) + "".join(chr(63 + int(bits[p:p + 6], 2)) for p in range(0, len(bits), 6))


@pytest.mark.parametrize(
    "text,graph",
    [("Bw", Graph.complete(3)), ("B?", Graph.empty(3)), ("A_", Graph.complete(2)), ("@", Graph.empty(1)), ("?", Graph.empty(0))],
)
def test_known_strings(text, graph):
    assert graph6_decode(text) == graph
    assert graph6_encode(graph) == text


def test_hand_layout():
    assert _bits_by_hand(3, [(0, 1), (0, 2), (1, 2)]) == "Bw"
    assert _bits_by_hand(4, [(0, 3)]) == graph6_encode(Graph.from_edges(4, [(0, 3)]))


def test_round_trip_1000_random():
    rng = random.Random(7)
    for _ in range(1000):
        g = random_graph(rng, rng.randint(0, 20))
        back = graph6_decode(graph6_encode(g))
        assert back.n == g.n and back.adj == g.adj


@pytest.mark.parametrize("n", [0, 1, 2, 5, 20, 62, 63, 64])
def test_matches_networkx_encoder(n):
    g = random_graph(random.Random(n), n, 0.4)
    expected = nx.to_graph6_bytes(to_networkx(g), header=False).decode().strip()
    assert graph6_encode(g) == expected
    assert graph6_decode(expected) == g


def test_extended_header():
    s = graph6_encode(Graph.complete(64))
    assert s.startswith("~?@?")
    assert graph6_decode(s) == Graph.complete(64)


def test_header_prefix_and_whitespace():
    assert graph6_decode(">>graph6<<Bw\n") == Graph.complete(3)


@pytest.mark.parametrize(
    "text,offset",
    [
        ("", 0),
        ("B w", 1),
        ("Bw?", 2),
        ("D~", 2),
        ("Bx", 1),
        ("~?", 2),
        ("~??", 3),
        ("~~??????", 1),
        ("~?@@", 0),
        (">>graph6<<", 10),
    ],
    ids=["empty", "bad-char", "trailing", "truncated", "padding", "short-header", "short-header-3", "eight-byte", "too-large", "header-only"],
)
def test_parse_errors_carry_offset(text, offset):
    with pytest.raises(Graph6Error) as info:
        graph6_decode(text)
    assert info.value.offset == offset


def test_stream_io():
    gs = [Graph.complete(3), Graph.cycle(5), Graph.empty(0)]
    buf = io.StringIO()
    assert write_graph6(gs, buf) == 3
    buf.seek(0)
    assert list(read_graph6(buf)) == gs
