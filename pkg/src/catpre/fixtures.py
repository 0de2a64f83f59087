"""The small standard categories used as probes and examples.

``one``    terminal category, object ``star``
``two``    a -u-> b
``iso``    a -u-> b, b -v-> a, mutually inverse
``mon``    one object m, s o s = id_m
``disc2``  discrete on {a, b}
``span``   a <-f- b -g-> c
"""

from catpre.core import category

ONE = category("one", ["star"])
TWO = category("two", ["a", "b"], {"u": ("a", "b")})
ISO = category(
    "iso",
    ["a", "b"],
    {"u": ("a", "b"), "v": ("b", "a")},
    {("v", "u"): "id_a", ("u", "v"): "id_b"},
)
MON = category("mon", ["m"], {"s": ("m", "m")}, {("s", "s"): "id_m"})
DISC2 = category("disc2", ["a", "b"])
SPAN = category("span", ["a", "b", "c"], {"f": ("b", "a"), "g": ("b", "c")})

FIXTURES = {C.name: C for C in (ONE, TWO, ISO, MON, DISC2, SPAN)}
